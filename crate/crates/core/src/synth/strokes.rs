//! Stroke geometry and rasterization.
//!
//! A stroke is a quadratic Bezier curve swept by a disc. Control points are
//! integers; the curve is sampled at `t = i / steps` and every pixel whose
//! centre lies within `width / 2` of a sample is covered. Only `+ - * /` on
//! f64 are used, so rasterization is bit-reproducible.

use super::rng::SplitMix64;

#[derive(Clone, Debug)]
pub struct Stroke {
    pub p0: (i64, i64),
    pub p1: (i64, i64),
    pub p2: (i64, i64),
    pub width: i64,
    pub ink: u8,
}

pub(crate) const INK_MIN: i64 = 20;
pub(crate) const INK_MAX: i64 = 80;
const SPAN_MIN: i64 = 8;
const SPAN_MAX: i64 = 40;

pub(crate) fn random_strokes(
    rng: &mut SplitMix64,
    count: usize,
    width: usize,
    height: usize,
    width_range: (usize, usize),
) -> Vec<Stroke> {
    let (w, h) = (width as i64, height as i64);
    let margin = (width_range.1 as i64).max(2);
    let clamp_x = |v: i64| v.clamp(margin, (w - 1 - margin).max(margin));
    let clamp_y = |v: i64| v.clamp(margin, (h - 1 - margin).max(margin));
    (0..count)
        .map(|_| {
            let sw = rng.range(width_range.0 as i64, width_range.1 as i64);
            let ink = rng.range(INK_MIN, INK_MAX) as u8;
            let span = rng.range(SPAN_MIN, SPAN_MAX);
            let p0 = (clamp_x(rng.range(0, w - 1)), clamp_y(rng.range(0, h - 1)));
            let p1 = (
                clamp_x(p0.0 + rng.range(-span, span)),
                clamp_y(p0.1 + rng.range(-span, span)),
            );
            let p2 = (
                clamp_x(p0.0 + rng.range(-span, span)),
                clamp_y(p0.1 + rng.range(-span, span)),
            );
            Stroke {
                p0,
                p1,
                p2,
                width: sw,
                ink,
            }
        })
        .collect()
}

impl Stroke {
    fn steps(&self) -> usize {
        let d = |a: (i64, i64), b: (i64, i64)| (a.0 - b.0).abs() + (a.1 - b.1).abs();
        (2 * (d(self.p0, self.p1) + d(self.p1, self.p2)) + 1) as usize
    }

    /// Curve samples with their parameter index.
    pub fn samples(&self) -> impl Iterator<Item = (usize, f64, f64)> + '_ {
        let steps = self.steps();
        (0..=steps).map(move |i| {
            let t = i as f64 / steps as f64;
            let u = 1.0 - t;
            let (a, b, c) = (u * u, 2.0 * u * t, t * t);
            let x = a * self.p0.0 as f64 + b * self.p1.0 as f64 + c * self.p2.0 as f64;
            let y = a * self.p0.1 as f64 + b * self.p1.1 as f64 + c * self.p2.1 as f64;
            (i, x, y)
        })
    }

    pub fn sample_count(&self) -> usize {
        self.steps() + 1
    }

    /// Calls `f(x, y, sample_index)` for every pixel covered by the disc at
    /// each sample. Pixels may be visited more than once.
    pub fn rasterize(&self, width: usize, height: usize, mut f: impl FnMut(usize, usize, usize)) {
        let r = self.width as f64 / 2.0;
        let r2 = r * r;
        let reach = self.width / 2 + 1;
        for (i, cx, cy) in self.samples() {
            let (ix, iy) = (cx.round() as i64, cy.round() as i64);
            for y in (iy - reach).max(0)..=(iy + reach).min(height as i64 - 1) {
                for x in (ix - reach).max(0)..=(ix + reach).min(width as i64 - 1) {
                    let (dx, dy) = (x as f64 - cx, y as f64 - cy);
                    if dx * dx + dy * dy <= r2 {
                        f(x as usize, y as usize, i);
                    }
                }
            }
        }
    }
}
