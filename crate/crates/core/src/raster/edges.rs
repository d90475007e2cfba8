//! Canny edge detection: Gaussian smoothing, Sobel gradients, non-maximum
//! suppression along the quantized gradient direction, then hysteresis
//! linking over 8-neighbours.

use super::NEIGHBORS_8;
use crate::error::{Error, Result};
use crate::image::{BinaryImage, GrayImage};

/// Edge mask plus the intermediate maps it was derived from.
#[derive(Clone, Debug)]
pub struct EdgeMap {
    pub edges: BinaryImage,
    /// Gaussian-smoothed intensities.
    pub smoothed: Vec<f64>,
    /// Sobel gradient magnitude of the smoothed image.
    pub magnitude: Vec<f64>,
}

const TAN_22_5: f64 = 0.414_213_562_373_095_1;

/// Separable Gaussian blur with replicate padding. `sigma == 0` copies the input.
pub fn gaussian_blur(img: &GrayImage, sigma: f64) -> Vec<f64> {
    let (w, h) = (img.width(), img.height());
    let src: Vec<f64> = img.data().iter().map(|&v| v as f64).collect();
    if sigma <= 0.0 {
        return src;
    }
    let radius = (3.0 * sigma).ceil() as isize;
    let mut kernel: Vec<f64> = (-radius..=radius)
        .map(|i| (-((i * i) as f64) / (2.0 * sigma * sigma)).exp())
        .collect();
    let total: f64 = kernel.iter().sum();
    kernel.iter_mut().for_each(|k| *k /= total);

    let clamp = |v: isize, n: usize| v.clamp(0, n as isize - 1) as usize;
    let mut tmp = vec![0.0; w * h];
    for y in 0..h {
        for x in 0..w {
            tmp[y * w + x] = kernel
                .iter()
                .enumerate()
                .map(|(k, &wt)| wt * src[y * w + clamp(x as isize + k as isize - radius, w)])
                .sum();
        }
    }
    let mut out = vec![0.0; w * h];
    for y in 0..h {
        for x in 0..w {
            out[y * w + x] = kernel
                .iter()
                .enumerate()
                .map(|(k, &wt)| wt * tmp[clamp(y as isize + k as isize - radius, h) * w + x])
                .sum();
        }
    }
    out
}

fn sobel(src: &[f64], w: usize, h: usize) -> (Vec<f64>, Vec<f64>) {
    let at = |x: isize, y: isize| {
        let cx = x.clamp(0, w as isize - 1) as usize;
        let cy = y.clamp(0, h as isize - 1) as usize;
        src[cy * w + cx]
    };
    let mut gx = vec![0.0; w * h];
    let mut gy = vec![0.0; w * h];
    for y in 0..h as isize {
        for x in 0..w as isize {
            let i = y as usize * w + x as usize;
            gx[i] = (at(x + 1, y - 1) + 2.0 * at(x + 1, y) + at(x + 1, y + 1))
                - (at(x - 1, y - 1) + 2.0 * at(x - 1, y) + at(x - 1, y + 1));
            gy[i] = (at(x - 1, y + 1) + 2.0 * at(x, y + 1) + at(x + 1, y + 1))
                - (at(x - 1, y - 1) + 2.0 * at(x, y - 1) + at(x + 1, y - 1));
        }
    }
    (gx, gy)
}

/// Canny edges with the default smoothing (sigma = 1.0).
pub fn detect_edges(img: &GrayImage, low: f64, high: f64) -> Result<BinaryImage> {
    detect_edges_with_sigma(img, low, high, 1.0).map(|e| e.edges)
}

pub fn detect_edges_with_sigma(
    img: &GrayImage,
    low: f64,
    high: f64,
    sigma: f64,
) -> Result<EdgeMap> {
    if !(low >= 0.0 && low <= high) {
        return Err(Error::InvalidParameter(format!(
            "edge thresholds need 0 <= low <= high, got low={low} high={high}"
        )));
    }
    if !(sigma >= 0.0) {
        return Err(Error::InvalidParameter(format!("sigma must be >= 0, got {sigma}")));
    }
    let (w, h) = (img.width(), img.height());
    let smoothed = gaussian_blur(img, sigma);
    let (gx, gy) = sobel(&smoothed, w, h);
    let magnitude: Vec<f64> = gx.iter().zip(&gy).map(|(a, b)| a.hypot(*b)).collect();

    let mag_at = |x: isize, y: isize| -> f64 {
        if x < 0 || y < 0 || x >= w as isize || y >= h as isize {
            0.0
        } else {
            magnitude[y as usize * w + x as usize]
        }
    };

    // Non-maximum suppression. The pixel must strictly beat the neighbour on
    // the negative side and at least tie the one on the positive side, so a
    // plateau two pixels wide keeps exactly one of them.
    let mut thin = vec![false; w * h];
    for y in 0..h as isize {
        for x in 0..w as isize {
            let i = y as usize * w + x as usize;
            let m = magnitude[i];
            if m <= 0.0 {
                continue;
            }
            let (ax, ay) = (gx[i].abs(), gy[i].abs());
            let (dx, dy) = if ay <= ax * TAN_22_5 {
                (1, 0)
            } else if ax <= ay * TAN_22_5 {
                (0, 1)
            } else if (gx[i] > 0.0) == (gy[i] > 0.0) {
                (1, 1)
            } else {
                (1, -1)
            };
            thin[i] = m > mag_at(x - dx, y - dy) && m >= mag_at(x + dx, y + dy);
        }
    }

    let mut edges = vec![false; w * h];
    let mut stack: Vec<usize> = (0..w * h)
        .filter(|&i| thin[i] && magnitude[i] >= high)
        .collect();
    for &i in &stack {
        edges[i] = true;
    }
    while let Some(i) = stack.pop() {
        let (x, y) = ((i % w) as isize, (i / w) as isize);
        for &(dx, dy) in &NEIGHBORS_8 {
            let (nx, ny) = (x + dx, y + dy);
            if nx < 0 || ny < 0 || nx >= w as isize || ny >= h as isize {
                continue;
            }
            let j = ny as usize * w + nx as usize;
            if !edges[j] && thin[j] && magnitude[j] >= low {
                edges[j] = true;
                stack.push(j);
            }
        }
    }

    Ok(EdgeMap {
        edges: BinaryImage::new(w, h, edges)?,
        smoothed,
        magnitude,
    })
}
