//! Sauvola thresholding evaluated on a coarse grid and interpolated.

use super::below;
use super::params::BinarizerParams;
use crate::error::Result;
use crate::image::{BinaryImage, GrayImage};
use crate::raster::{local_stats, LocalStats};

#[inline]
pub(crate) fn sauvola(m: f64, s: f64, k: f64, r: f64) -> f64 {
    m * (1.0 + k * (s / r - 1.0))
}

/// Dense Sauvola thresholds `m (1 + k (s / R - 1))`.
pub fn sauvola_thresholds(stats: &LocalStats, k: f64, r: f64) -> Vec<f64> {
    stats
        .mean
        .iter()
        .zip(&stats.stddev)
        .map(|(&m, &s)| sauvola(m, s, k, r))
        .collect()
}

/// Cell centres along one axis: `i * cell + cell / 2`, clamped into the image.
fn cell_centers(len: usize, cell: usize) -> Vec<usize> {
    (0..len.div_ceil(cell))
        .map(|i| (i * cell + cell / 2).min(len - 1))
        .collect()
}

/// For coordinate `v`, the bracketing centre indices and the weight of the
/// upper one. Outside the first/last centre the nearest centre is used.
fn bracket(centers: &[usize], v: usize) -> (usize, usize, f64) {
    let last = centers.len() - 1;
    if v <= centers[0] {
        return (0, 0, 0.0);
    }
    if v >= centers[last] {
        return (last, last, 0.0);
    }
    let hi = centers.partition_point(|&c| c <= v);
    let lo = hi - 1;
    let span = (centers[hi] - centers[lo]) as f64;
    (lo, hi, (v - centers[lo]) as f64 / span)
}

/// Per-pixel thresholds bilinearly interpolated from Sauvola thresholds taken
/// at grid-cell centres.
pub fn sauvola_grid_threshold_map(img: &GrayImage, p: &BinarizerParams) -> Result<Vec<f64>> {
    p.validate()?;
    let (w, h) = (img.width(), img.height());
    let stats = local_stats(img, p.window)?;
    let (k, r) = (p.k_value(), p.r_dynamic);
    let xs = cell_centers(w, p.grid_cell);
    let ys = cell_centers(h, p.grid_cell);
    let grid: Vec<f64> = ys
        .iter()
        .flat_map(|&cy| xs.iter().map(move |&cx| (cx, cy)))
        .map(|(cx, cy)| sauvola(stats.mean_at(cx, cy), stats.stddev_at(cx, cy), k, r))
        .collect();
    let g = |ix: usize, iy: usize| grid[iy * xs.len() + ix];

    let col: Vec<(usize, usize, f64)> = (0..w).map(|x| bracket(&xs, x)).collect();
    let mut out = Vec::with_capacity(w * h);
    for y in 0..h {
        let (y0, y1, ty) = bracket(&ys, y);
        for &(x0, x1, tx) in &col {
            let top = g(x0, y0) * (1.0 - tx) + g(x1, y0) * tx;
            let bottom = g(x0, y1) * (1.0 - tx) + g(x1, y1) * tx;
            out.push(top * (1.0 - ty) + bottom * ty);
        }
    }
    Ok(out)
}

pub fn sauvola_grid(img: &GrayImage, p: &BinarizerParams) -> Result<BinaryImage> {
    Ok(below(img, &sauvola_grid_threshold_map(img, p)?))
}
