use super::below;
use super::params::BinarizerParams;
use crate::error::Result;
use crate::image::{BinaryImage, GrayImage};
use crate::raster::{local_stats, LocalStats};

/// `T = m + k s` per pixel.
pub fn niblack_thresholds(stats: &LocalStats, k: f64) -> Vec<f64> {
    stats
        .mean
        .iter()
        .zip(&stats.stddev)
        .map(|(&m, &s)| m + k * s)
        .collect()
}

pub fn niblack(img: &GrayImage, p: &BinarizerParams) -> Result<BinaryImage> {
    p.validate()?;
    let stats = local_stats(img, p.window)?;
    Ok(below(img, &niblack_thresholds(&stats, p.k_value())))
}
