//! Page degradations. Intensities arrive as permille and all pixel
//! arithmetic is integer.

use super::rng::SplitMix64;
use super::strokes::{random_strokes, Stroke};
use super::DegradationSpec;
use crate::image::GrayImage;

/// Rounded `num / den` for non-negative `den`.
fn div_round(num: i64, den: i64) -> i64 {
    (2 * num + den).div_euclid(2 * den)
}

fn darken_to(page: &mut GrayImage, x: usize, y: usize, level: i64) {
    let level = level.clamp(0, 255) as u8;
    if level < page.get(x, y) {
        page.set(x, y, level);
    }
}

/// Faded segment per stroke: samples in `from..=to` are lifted toward the
/// background by `lift / 1000` of the gap.
pub(super) struct FadePlan {
    segments: Vec<(usize, usize)>,
    lift: i64,
    background: i64,
}

pub(super) fn fade_plan(
    rng: &mut SplitMix64,
    strokes: &[Stroke],
    permille: i64,
    background: u8,
) -> FadePlan {
    let segments = strokes
        .iter()
        .map(|s| {
            let n = s.sample_count() as i64;
            let len = rng.range((n * 3 / 10).max(1), n);
            let from = rng.range(0, n - len);
            (from as usize, (from + len - 1) as usize)
        })
        .collect();
    FadePlan {
        segments,
        lift: permille * 6 / 10,
        background: background as i64,
    }
}

impl FadePlan {
    pub(super) fn level(&self, stroke: usize, sample: usize, ink: u8) -> u8 {
        let (from, to) = self.segments[stroke];
        if sample < from || sample > to {
            return ink;
        }
        let ink = ink as i64;
        (ink + div_round((self.background - ink) * self.lift, 1000)) as u8
    }
}

/// Second stroke layer mirrored left-right and drawn faintly.
pub(super) fn bleed_through(
    page: &mut GrayImage,
    rng: &mut SplitMix64,
    spec: &DegradationSpec,
    background: u8,
    permille: i64,
) {
    let (w, h) = (page.width(), page.height());
    let bg = background as i64;
    let level = bg - div_round((bg - 50) * permille * 6, 10_000);
    let verso = random_strokes(
        rng,
        spec.strokes,
        w,
        h,
        (spec.stroke_width_min, spec.stroke_width_max),
    );
    for s in &verso {
        s.rasterize(w, h, |x, y, _| darken_to(page, w - 1 - x, y, level));
    }
}

/// One-pixel ruled lines slightly darker than the background.
pub(super) fn ruled_lines(page: &mut GrayImage, rng: &mut SplitMix64, background: u8, permille: i64) {
    let (w, h) = (page.width(), page.height());
    let spacing = rng.range((h / 10).max(2) as i64, (h / 6).max(2) as i64) as usize;
    let offset = rng.below(spacing as u64) as usize;
    let level = background as i64 - 15 - div_round(35 * permille, 1000);
    for y in (offset..h).step_by(spacing) {
        for x in 0..w {
            darken_to(page, x, y, level);
        }
    }
}

/// Thin random walks at low contrast.
pub(super) fn fibers(page: &mut GrayImage, rng: &mut SplitMix64, background: u8, permille: i64) {
    let (w, h) = (page.width() as i64, page.height() as i64);
    let count = 2 + div_round(10 * permille, 1000);
    let level = background as i64 - 10 - div_round(25 * permille, 1000);
    for _ in 0..count {
        let (mut x, mut y) = (rng.range(0, w - 1), rng.range(0, h - 1));
        let (mut dx, mut dy) = (rng.range(-1, 1), rng.range(-1, 1));
        let steps = rng.range(w.min(h) / 4, w.max(h) / 2);
        for _ in 0..steps {
            darken_to(page, x as usize, y as usize, level);
            if rng.chance(200) {
                dx = rng.range(-1, 1);
                dy = rng.range(-1, 1);
            }
            if dx == 0 && dy == 0 {
                dx = 1;
            }
            x = (x + dx).clamp(0, w - 1);
            y = (y + dy).clamp(0, h - 1);
        }
    }
}

const ILLUMINATION_MAX: i64 = 180;

/// Additive darkening of up to `ILLUMINATION_MAX * intensity` levels, as a linear ramp
/// from one of the four sides or radially from a random centre.
pub(super) fn illumination(page: &mut GrayImage, rng: &mut SplitMix64, permille: i64) {
    let (w, h) = (page.width() as i64, page.height() as i64);
    let amount = ILLUMINATION_MAX * permille;
    let mode = rng.below(5);
    let (cx, cy) = (rng.range(0, w - 1), rng.range(0, h - 1));
    let dmax2 = {
        let fx = cx.max(w - 1 - cx);
        let fy = cy.max(h - 1 - cy);
        (fx * fx + fy * fy).max(1)
    };
    for y in 0..h {
        for x in 0..w {
            let (num, den) = match mode {
                0 => (x, (w - 1).max(1)),
                1 => (w - 1 - x, (w - 1).max(1)),
                2 => (y, (h - 1).max(1)),
                3 => (h - 1 - y, (h - 1).max(1)),
                _ => ((x - cx) * (x - cx) + (y - cy) * (y - cy), dmax2),
            };
            let shift = div_round(amount * num, den * 1000);
            let v = page.get(x as usize, y as usize) as i64 - shift;
            page.set(x as usize, y as usize, v.clamp(0, 255) as u8);
        }
    }
}

/// 3x3 box blur with replicated borders; two passes above half strength.
pub(super) fn box_blur(page: &mut GrayImage, permille: i64) {
    let passes = if permille > 500 { 2 } else { 1 };
    let (w, h) = (page.width() as i64, page.height() as i64);
    for _ in 0..passes {
        let src = page.clone();
        for y in 0..h {
            for x in 0..w {
                let mut sum = 0i64;
                for dy in -1..=1 {
                    for dx in -1..=1 {
                        sum += src.get_clamped((x + dx) as isize, (y + dy) as isize) as i64;
                    }
                }
                page.set(x as usize, y as usize, ((sum + 4) / 9) as u8);
            }
        }
    }
}

/// Gaussian noise with sigma `4 + 12 * intensity`, then salt and pepper on
/// `intensity` percent of pixels.
pub(super) fn noise(page: &mut GrayImage, rng: &mut SplitMix64, permille: i64) {
    let sigma_milli = 4000 + 12 * permille;
    let impulse = (permille / 100) as u32;
    for v in page.data_mut() {
        let g = rng.gaussian_milli();
        let mut p = *v as i64 + div_round(g * sigma_milli, 1_000_000);
        if rng.chance(impulse) {
            p = if rng.below(2) == 0 { 0 } else { 255 };
        }
        *v = p.clamp(0, 255) as u8;
    }
}
