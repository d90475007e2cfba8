//! Distance-reciprocal distortion.

use crate::error::Result;
use crate::image::BinaryImage;

/// Normalized 5x5 reciprocal-distance weights, indexed `[dy + 2][dx + 2]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WeightMatrix5(pub [[f64; 5]; 5]);

impl WeightMatrix5 {
    #[inline]
    pub fn at(&self, dy: isize, dx: isize) -> f64 {
        self.0[(dy + 2) as usize][(dx + 2) as usize]
    }

    pub fn sum(&self) -> f64 {
        self.0.iter().flatten().sum()
    }
}

/// `1 / sqrt(dx^2 + dy^2)` off-centre, 0 at the centre, scaled to sum to 1.
pub fn drd_weight_matrix() -> WeightMatrix5 {
    let mut m = [[0.0; 5]; 5];
    let mut total = 0.0;
    for (r, row) in m.iter_mut().enumerate() {
        for (c, v) in row.iter_mut().enumerate() {
            let (dy, dx) = (r as f64 - 2.0, c as f64 - 2.0);
            if dy != 0.0 || dx != 0.0 {
                *v = 1.0 / (dx * dx + dy * dy).sqrt();
                total += *v;
            }
        }
    }
    m.iter_mut().flatten().for_each(|v| *v /= total);
    WeightMatrix5(m)
}

/// Number of 8x8 tiles of the ground truth holding both ink and background.
/// Tiles start at the top-left; partial tiles on the right and bottom edges
/// are judged on the pixels they contain.
pub fn nubn(gt: &BinaryImage) -> u64 {
    let (w, h) = (gt.width(), gt.height());
    let mut count = 0;
    for by in (0..h).step_by(8) {
        for bx in (0..w).step_by(8) {
            let (mut ink, mut bg) = (false, false);
            for y in by..(by + 8).min(h) {
                for x in bx..(bx + 8).min(w) {
                    if gt.get(x, y) {
                        ink = true;
                    } else {
                        bg = true;
                    }
                }
            }
            count += (ink && bg) as u64;
        }
    }
    count
}

/// Sum of the per-pixel distortions over every flipped pixel (the DRD
/// numerator). Ground-truth reads outside the image count as background.
pub fn drd_distortion_sum(gt: &BinaryImage, b: &BinaryImage) -> Result<f64> {
    gt.same_shape(b)?;
    let weights = drd_weight_matrix();
    let mut total = 0.0;
    for y in 0..gt.height() {
        for x in 0..gt.width() {
            let value = b.get(x, y);
            if value == gt.get(x, y) {
                continue;
            }
            let mut d = 0.0;
            for dy in -2..=2isize {
                for dx in -2..=2isize {
                    if gt.get_or_bg(x as isize + dx, y as isize + dy) != value {
                        d += weights.at(dy, dx);
                    }
                }
            }
            total += d;
        }
    }
    Ok(total)
}

/// DRD: distortion sum divided by `max(NUBN, 1)`.
pub fn drd(gt: &BinaryImage, b: &BinaryImage) -> Result<f64> {
    let sum = drd_distortion_sum(gt, b)?;
    Ok(sum / nubn(gt).max(1) as f64)
}
