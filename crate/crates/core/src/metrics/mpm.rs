//! Misclassification penalty metric.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::image::BinaryImage;
use crate::raster::{distance_transform, extract_contour};

/// Which pixels contribute to the normalizer `D`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MpmNormalization {
    /// Sum of contour distances over every image pixel.
    #[default]
    Image,
    /// Sum of contour distances over ground-truth foreground pixels only.
    /// Falls back to 1 when that sum is 0 (strokes no thicker than their contour).
    Object,
}

impl std::str::FromStr for MpmNormalization {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "image" => Ok(MpmNormalization::Image),
            "object" => Ok(MpmNormalization::Object),
            other => Err(Error::InvalidParameter(format!(
                "unknown mpm normalization {other:?} (expected image or object)"
            ))),
        }
    }
}

pub fn mpm(gt: &BinaryImage, b: &BinaryImage) -> Result<f64> {
    mpm_with(gt, b, MpmNormalization::Image)
}

/// `(sum of contour distances over FN and FP pixels) / (2 D)`, distances being
/// Euclidean to the nearest ground-truth contour pixel.
pub fn mpm_with(gt: &BinaryImage, b: &BinaryImage, norm: MpmNormalization) -> Result<f64> {
    gt.same_shape(b)?;
    if gt.count_foreground() == 0 {
        return Err(Error::EmptyGroundTruth);
    }
    let contour = extract_contour(gt);
    let field = distance_transform(&contour)?;

    let mut wrong = 0.0;
    let mut d_image = 0.0;
    let mut d_object = 0.0;
    for ((&g, &p), &d) in gt.mask().iter().zip(b.mask()).zip(&field.dist) {
        if g != p {
            wrong += d;
        }
        d_image += d;
        if g {
            d_object += d;
        }
    }
    if wrong == 0.0 {
        return Ok(0.0);
    }
    let d = match norm {
        MpmNormalization::Image => d_image,
        MpmNormalization::Object => {
            if d_object > 0.0 {
                d_object
            } else {
                1.0
            }
        }
    };
    Ok(wrong / (2.0 * d))
}
