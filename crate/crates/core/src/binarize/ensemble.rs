//! Averaged Niblack-family thresholding.
//!
//! The page is first cleaned with a conditional 3x3 median, then each pixel
//! is compared against the mean of four thresholds computed over the same
//! window: Niblack, Sauvola, Wolf-Jolion and NICK. The result is cleaned of
//! small components and closed once, only where the closing adds pixels
//! 4-adjacent to existing ink.

use super::below;
use super::niblack::niblack_thresholds;
use super::params::BinarizerParams;
use super::sauvola::sauvola_thresholds;
use crate::error::Result;
use crate::image::{BinaryImage, GrayImage};
use crate::raster::{local_stats, remove_small_components, LocalStats};

const MEDIAN_DEVIATION: u8 = 50;
const NIBLACK_K: f64 = -0.2;
const SAUVOLA_K: f64 = 0.2;
const WOLF_K: f64 = 0.5;
const NICK_K: f64 = -0.1;

/// Replaces a pixel by its 3x3 median (replicate padding) when the two
/// differ by more than `max_deviation`.
pub fn conditional_median(img: &GrayImage, max_deviation: u8) -> GrayImage {
    GrayImage::from_fn(img.width(), img.height(), |x, y| {
        let mut win = [0u8; 9];
        let mut i = 0;
        for dy in -1..=1 {
            for dx in -1..=1 {
                win[i] = img.get_clamped(x as isize + dx, y as isize + dy);
                i += 1;
            }
        }
        win.sort_unstable();
        let med = win[4];
        let v = img.get(x, y);
        if v.abs_diff(med) > max_deviation {
            med
        } else {
            v
        }
    })
}

/// Wolf-Jolion: `m - k (1 - s / s_max) (m - min)`, `s_max` the largest local
/// stddev on the page and `min` the darkest pixel.
pub fn wolf_thresholds(stats: &LocalStats, k: f64, img_min: f64) -> Vec<f64> {
    let s_max = stats.stddev.iter().cloned().fold(0.0, f64::max);
    stats
        .mean
        .iter()
        .zip(&stats.stddev)
        .map(|(&m, &s)| {
            let ratio = if s_max > 0.0 { s / s_max } else { 0.0 };
            m - k.abs() * (1.0 - ratio) * (m - img_min)
        })
        .collect()
}

/// NICK: `m + k sqrt(s^2 + m^2)`.
pub fn nick_thresholds(stats: &LocalStats, k: f64) -> Vec<f64> {
    stats
        .mean
        .iter()
        .zip(&stats.stddev)
        .map(|(&m, &s)| m + k * (s * s + m * m).sqrt())
        .collect()
}

/// Mean of the four thresholds over the median-cleaned page.
pub fn ensemble_threshold_map(img: &GrayImage, p: &BinarizerParams) -> Result<Vec<f64>> {
    p.validate()?;
    let clean = conditional_median(img, MEDIAN_DEVIATION);
    ensemble_on_clean(&clean, p)
}

fn ensemble_on_clean(clean: &GrayImage, p: &BinarizerParams) -> Result<Vec<f64>> {
    let stats = local_stats(clean, p.window)?;
    let img_min = *clean.data().iter().min().expect("non-empty image") as f64;
    let maps = [
        niblack_thresholds(&stats, NIBLACK_K),
        sauvola_thresholds(&stats, SAUVOLA_K, p.r_dynamic),
        wolf_thresholds(&stats, WOLF_K, img_min),
        nick_thresholds(&stats, NICK_K),
    ];
    Ok((0..clean.len())
        .map(|i| maps.iter().map(|m| m[i]).sum::<f64>() / maps.len() as f64)
        .collect())
}

/// 3x3 closing whose additions are kept only where they 4-touch the input.
pub fn constrained_closing(b: &BinaryImage) -> BinaryImage {
    let (w, h) = (b.width(), b.height());
    let any_in = |m: &BinaryImage, x: usize, y: usize| {
        (-1..=1).any(|dy| (-1..=1).any(|dx| m.get_or_bg(x as isize + dx, y as isize + dy)))
    };
    let dilated = BinaryImage::from_fn(w, h, |x, y| any_in(b, x, y));
    // outside the image is background for both steps; input ink is kept below
    let closed = BinaryImage::from_fn(w, h, |x, y| {
        (-1..=1).all(|dy| (-1..=1).all(|dx| dilated.get_or_bg(x as isize + dx, y as isize + dy)))
    });
    BinaryImage::from_fn(w, h, |x, y| {
        b.get(x, y)
            || (closed.get(x, y)
                && [(0, -1), (-1, 0), (1, 0), (0, 1)]
                    .iter()
                    .any(|&(dx, dy)| b.get_or_bg(x as isize + dx, y as isize + dy)))
    })
}

pub fn niblack_ensemble(img: &GrayImage, p: &BinarizerParams) -> Result<BinaryImage> {
    p.validate()?;
    let clean = conditional_median(img, MEDIAN_DEVIATION);
    let thresholds = ensemble_on_clean(&clean, p)?;
    let raw = below(&clean, &thresholds);
    let kept = remove_small_components(&raw, p.min_component);
    Ok(constrained_closing(&kept))
}
