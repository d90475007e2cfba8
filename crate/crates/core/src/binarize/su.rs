//! Local contrast and edge based binarization.
//!
//! 1. Contrast map: the normalized local contrast `(max - min) / (max + min + eps)`
//!    and the local gradient `(max - min) / 255` over 3x3 neighbourhoods are mixed
//!    as `a C + (1 - a) G` with `a = (global stddev / 128)^gamma`.
//! 2. High-contrast pixels are those at or above the Otsu threshold of the
//!    contrast map; intersected with Canny edges they form the text-edge map.
//! 3. The stroke width is the most common length of a dark horizontal run
//!    enclosed by two text-edge pixels. A pixel is ink when its
//!    `(2 SW + 1)`-window holds enough text-edge pixels and its intensity is at
//!    most `mean + stddev / 2` of the smoothed intensities at those edges.
//! 4. Components smaller than `min_component` pixels are dropped.

use super::otsu::otsu_threshold;
use super::params::BinarizerParams;
use crate::error::Result;
use crate::image::{BinaryImage, GrayImage};
use crate::raster::{detect_edges_with_sigma, histogram, remove_small_components};

const CONTRAST_EPS: f64 = 1e-6;
const FALLBACK_STROKE_WIDTH: usize = 3;

/// Intermediate products, kept for inspection and debug dumps.
#[derive(Clone, Debug)]
pub struct SuStages {
    /// Combined contrast map rescaled to `[0, 255]`.
    pub contrast: GrayImage,
    pub high_contrast: BinaryImage,
    /// Canny output before the contrast filter.
    pub edges: BinaryImage,
    pub text_edges: BinaryImage,
    pub stroke_width: usize,
    /// Local threshold result before post-processing.
    pub thresholded: BinaryImage,
    pub mask: BinaryImage,
}

fn global_stddev(img: &GrayImage) -> f64 {
    let n = img.len() as f64;
    let mean = img.data().iter().map(|&v| v as f64).sum::<f64>() / n;
    let var = img
        .data()
        .iter()
        .map(|&v| (v as f64 - mean).powi(2))
        .sum::<f64>()
        / n;
    var.sqrt()
}

fn contrast_map(img: &GrayImage, gamma: f64) -> Vec<f64> {
    let (w, h) = (img.width(), img.height());
    let alpha = (global_stddev(img) / 128.0).powf(gamma).clamp(0.0, 1.0);
    let mut out = Vec::with_capacity(w * h);
    for y in 0..h as isize {
        for x in 0..w as isize {
            let (mut lo, mut hi) = (255u8, 0u8);
            for dy in -1..=1 {
                for dx in -1..=1 {
                    let v = img.get_clamped(x + dx, y + dy);
                    lo = lo.min(v);
                    hi = hi.max(v);
                }
            }
            let (lo, hi) = (lo as f64, hi as f64);
            let c = (hi - lo) / (hi + lo + CONTRAST_EPS);
            let g = (hi - lo) / 255.0;
            out.push(alpha * c + (1.0 - alpha) * g);
        }
    }
    out
}

/// Mode of the dark run lengths between consecutive edge pixels on each row.
fn estimate_stroke_width(edges: &BinaryImage, smoothed: &[f64]) -> usize {
    let w = edges.width();
    let mut counts = vec![0usize; w + 1];
    for y in 0..edges.height() {
        let row = &smoothed[y * w..(y + 1) * w];
        let mut prev: Option<usize> = None;
        for x in 0..w {
            if !edges.get(x, y) {
                continue;
            }
            if let Some(a) = prev {
                let gap = x - a - 1;
                if gap > 0 {
                    let inner = row[a + 1..x].iter().sum::<f64>() / gap as f64;
                    if inner < (row[a] + row[x]) / 2.0 {
                        counts[gap] += 1;
                    }
                }
            }
            prev = Some(x);
        }
    }
    // first maximum wins ties, so the narrower width is preferred
    let mut best = (0usize, FALLBACK_STROKE_WIDTH);
    for (gap, &c) in counts.iter().enumerate() {
        if c > best.0 {
            best = (c, gap);
        }
    }
    best.1
}

/// Summed-area table over `w x h` values, `(w + 1) x (h + 1)` entries.
fn integral(values: impl Iterator<Item = f64>, w: usize, h: usize) -> Vec<f64> {
    let stride = w + 1;
    let mut t = vec![0.0; stride * (h + 1)];
    let vals: Vec<f64> = values.collect();
    for y in 0..h {
        let mut row = 0.0;
        for x in 0..w {
            row += vals[y * w + x];
            t[(y + 1) * stride + x + 1] = t[y * stride + x + 1] + row;
        }
    }
    t
}

fn local_threshold(
    img: &GrayImage,
    text_edges: &BinaryImage,
    smoothed: &[f64],
    half: usize,
    min_edges: usize,
) -> BinaryImage {
    let (w, h) = (img.width(), img.height());
    let edge = |i: usize| text_edges.mask()[i];
    let count = integral((0..w * h).map(|i| edge(i) as u8 as f64), w, h);
    let sum = integral((0..w * h).map(|i| if edge(i) { smoothed[i] } else { 0.0 }), w, h);
    let sq = integral(
        (0..w * h).map(|i| if edge(i) { smoothed[i] * smoothed[i] } else { 0.0 }),
        w,
        h,
    );
    let stride = w + 1;
    let rect = |t: &[f64], x0: usize, y0: usize, x1: usize, y1: usize| {
        t[y1 * stride + x1] - t[y0 * stride + x1] - t[y1 * stride + x0] + t[y0 * stride + x0]
    };

    BinaryImage::from_fn(w, h, |x, y| {
        let (x0, y0) = (x.saturating_sub(half), y.saturating_sub(half));
        let (x1, y1) = ((x + half + 1).min(w), (y + half + 1).min(h));
        let n = rect(&count, x0, y0, x1, y1).round();
        if n < min_edges.max(1) as f64 {
            return false;
        }
        let mean = rect(&sum, x0, y0, x1, y1) / n;
        let var = (rect(&sq, x0, y0, x1, y1) / n - mean * mean).max(0.0);
        img.get(x, y) as f64 <= mean + var.sqrt() / 2.0
    })
}

pub fn su_contrast_stages(img: &GrayImage, p: &BinarizerParams) -> Result<SuStages> {
    p.validate()?;
    let (w, h) = (img.width(), img.height());

    let contrast = GrayImage::from_real_map(w, h, &contrast_map(img, p.gamma));
    let t = otsu_threshold(&histogram(&contrast));
    let high_contrast = BinaryImage::new(w, h, contrast.data().iter().map(|&v| v >= t).collect())?;

    let canny = detect_edges_with_sigma(img, p.canny_low, p.canny_high, p.canny_sigma)?;
    let text_edges = BinaryImage::new(
        w,
        h,
        high_contrast
            .mask()
            .iter()
            .zip(canny.edges.mask())
            .map(|(&a, &b)| a && b)
            .collect(),
    )?;

    let stroke_width = estimate_stroke_width(&text_edges, &canny.smoothed);
    let thresholded = local_threshold(
        img,
        &text_edges,
        &canny.smoothed,
        stroke_width,
        p.edge_density_min,
    );
    let mask = remove_small_components(&thresholded, p.min_component);

    Ok(SuStages {
        contrast,
        high_contrast,
        edges: canny.edges,
        text_edges,
        stroke_width,
        thresholded,
        mask,
    })
}

pub fn su_contrast(img: &GrayImage, p: &BinarizerParams) -> Result<BinaryImage> {
    su_contrast_stages(img, p).map(|s| s.mask)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binarize::Method;
    use crate::raster::connected_components;

    fn params() -> BinarizerParams {
        BinarizerParams::for_method(Method::SuContrast)
    }

    #[test]
    fn blank_page_is_empty() {
        let s = su_contrast_stages(&GrayImage::filled(40, 30, 210), &params()).unwrap();
        assert_eq!(s.edges.count_foreground(), 0);
        assert_eq!(s.mask.count_foreground(), 0);
        assert_eq!(s.stroke_width, FALLBACK_STROKE_WIDTH);
    }

    #[test]
    fn vertical_strokes_width_three() {
        let gt = BinaryImage::from_fn(80, 40, |x, y| (5..35).contains(&y) && x % 12 >= 5 && x % 12 < 8);
        let img = GrayImage::from_fn(80, 40, |x, y| if gt.get(x, y) { 50 } else { 210 });
        let s = su_contrast_stages(&img, &params()).unwrap();
        assert_eq!(s.stroke_width, 3);
        assert!(s.text_edges.is_subset_of(&s.edges));
        let c = crate::metrics::confusion_counts(&gt, &s.mask).unwrap();
        assert!(crate::metrics::f_measure(&c) > 95.0, "{c:?}");
    }

    #[test]
    fn final_mask_has_no_small_components() {
        let img = GrayImage::from_fn(60, 60, |x, y| {
            if (x / 6 + y / 6) % 3 == 0 && x % 6 < 2 { 30 } else if (x * y) % 97 == 0 { 120 } else { 200 }
        });
        let p = params();
        let s = su_contrast_stages(&img, &p).unwrap();
        let lab = connected_components(&s.mask);
        assert!(lab.sizes.iter().all(|&n| n >= p.min_component));
        assert!(s.mask.is_subset_of(&s.thresholded));
    }

    #[test]
    fn contrast_map_is_zero_on_flat_input() {
        let c = contrast_map(&GrayImage::filled(5, 5, 100), 1.0);
        assert!(c.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn stroke_width_ignores_light_gaps() {
        // edges at 2 and 6 enclose a bright run; 10 and 13 a dark one
        let w = 16;
        let mut e = BinaryImage::empty(w, 1);
        for x in [2, 6, 10, 13] {
            e.set(x, 0, true);
        }
        let mut row = vec![150.0; w];
        for v in &mut row[3..6] {
            *v = 220.0;
        }
        for v in &mut row[11..13] {
            *v = 40.0;
        }
        assert_eq!(estimate_stroke_width(&e, &row), 2);
    }
}
