use crate::image::{BinaryImage, GrayImage};
use crate::raster::histogram;

/// Threshold `t` maximizing the between-class variance of the split
/// `{v < t}` / `{v >= t}`. Ties go to the smallest `t`. When no split has two
/// non-empty classes the result is 0, so nothing falls below it.
pub fn otsu_threshold(hist: &[u64; 256]) -> u8 {
    let total_n: u64 = hist.iter().sum();
    let total_s: u64 = hist.iter().enumerate().map(|(v, &c)| v as u64 * c).sum();
    let n = total_n as f64;

    let (mut n0, mut s0) = (0u64, 0u64);
    let mut best_t = 0u8;
    let mut best_var = f64::NEG_INFINITY;
    for t in 1..256usize {
        n0 += hist[t - 1];
        s0 += (t as u64 - 1) * hist[t - 1];
        let n1 = total_n - n0;
        if n0 == 0 || n1 == 0 {
            continue;
        }
        let s1 = total_s - s0;
        let var = between_class_variance(n0, s0, n1, s1, n);
        if var > best_var {
            best_var = var;
            best_t = t as u8;
        }
    }
    best_t
}

#[inline]
pub(crate) fn between_class_variance(n0: u64, s0: u64, n1: u64, s1: u64, n: f64) -> f64 {
    let (w0, w1) = (n0 as f64 / n, n1 as f64 / n);
    let (m0, m1) = (s0 as f64 / n0 as f64, s1 as f64 / n1 as f64);
    w0 * w1 * (m0 - m1) * (m0 - m1)
}

/// Global Otsu binarization: pixels darker than the threshold are ink.
pub fn otsu(img: &GrayImage) -> BinaryImage {
    let t = otsu_threshold(&histogram(img));
    let mask = img.data().iter().map(|&v| v < t).collect();
    BinaryImage::new(img.width(), img.height(), mask).expect("same shape")
}
