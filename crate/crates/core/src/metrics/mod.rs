//! Pixel-level evaluation of a binarization against its ground truth.
//!
//! All measures treat foreground (ink) as the positive class.

mod drd;
mod mpm;
mod report;

pub use drd::{drd, drd_distortion_sum, drd_weight_matrix, nubn, WeightMatrix5};
pub use mpm::{mpm, mpm_with, MpmNormalization};
pub use report::{evaluate_pair, EvalOptions, MetricReport, METRIC_CSV_HEADER};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::image::BinaryImage;
use crate::raster::skeletonize;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfusionCounts {
    pub tp: u64,
    pub fp: u64,
    pub fn_: u64,
    pub tn: u64,
}

impl ConfusionCounts {
    pub fn total(&self) -> u64 {
        self.tp + self.fp + self.fn_ + self.tn
    }

    pub fn recall(&self) -> f64 {
        ratio(self.tp, self.tp + self.fn_)
    }

    pub fn precision(&self) -> f64 {
        ratio(self.tp, self.tp + self.fp)
    }
}

/// `num / den`, with 0/0 taken as 0.
#[inline]
fn ratio(num: u64, den: u64) -> f64 {
    if den == 0 {
        0.0
    } else {
        num as f64 / den as f64
    }
}

pub fn confusion_counts(gt: &BinaryImage, b: &BinaryImage) -> Result<ConfusionCounts> {
    gt.same_shape(b)?;
    let mut c = ConfusionCounts::default();
    for (&g, &p) in gt.mask().iter().zip(b.mask()) {
        match (g, p) {
            (true, true) => c.tp += 1,
            (false, true) => c.fp += 1,
            (true, false) => c.fn_ += 1,
            (false, false) => c.tn += 1,
        }
    }
    Ok(c)
}

/// Harmonic mean of recall and precision, in percent.
fn harmonic_percent(recall: f64, precision: f64) -> f64 {
    if recall + precision == 0.0 {
        0.0
    } else {
        100.0 * 2.0 * recall * precision / (recall + precision)
    }
}

/// F-Measure in percent. Zero when nothing is detected correctly.
pub fn f_measure(c: &ConfusionCounts) -> f64 {
    if c.tp == 0 {
        return 0.0;
    }
    harmonic_percent(c.recall(), c.precision())
}

/// Pseudo F-Measure in percent: recall is measured on the skeleton of the
/// ground truth, precision on the full ground truth.
pub fn pseudo_f_measure(gt: &BinaryImage, b: &BinaryImage) -> Result<f64> {
    let c = confusion_counts(gt, b)?;
    let skel = skeletonize(gt);
    Ok(pseudo_f_from_parts(&skel, b, &c))
}

pub(crate) fn pseudo_f_from_parts(skel: &BinaryImage, b: &BinaryImage, c: &ConfusionCounts) -> f64 {
    let (mut hit, mut total) = (0u64, 0u64);
    for (&s, &p) in skel.mask().iter().zip(b.mask()) {
        if s {
            total += 1;
            hit += p as u64;
        }
    }
    if total == 0 {
        return 0.0;
    }
    harmonic_percent(ratio(hit, total), c.precision())
}

/// PSNR in dB over {0,1} pixel values. Identical images give `+inf`.
pub fn psnr(gt: &BinaryImage, b: &BinaryImage) -> Result<f64> {
    let c = confusion_counts(gt, b)?;
    Ok(psnr_from_counts(&c))
}

pub(crate) fn psnr_from_counts(c: &ConfusionCounts) -> f64 {
    let wrong = c.fp + c.fn_;
    if wrong == 0 {
        return f64::INFINITY;
    }
    let mse = wrong as f64 / c.total() as f64;
    10.0 * (1.0 / mse).log10()
}

/// Which false-negative rate the NRM uses.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NrmMode {
    /// `NR_FN = FN / (FN + FP)`.
    #[default]
    PaperLiteral,
    /// `NR_FN = FN / (FN + TP)`, the usual form.
    Standard,
}

impl std::str::FromStr for NrmMode {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper-literal" => Ok(NrmMode::PaperLiteral),
            "standard" => Ok(NrmMode::Standard),
            other => Err(crate::Error::InvalidParameter(format!(
                "unknown nrm mode {other:?} (expected paper-literal or standard)"
            ))),
        }
    }
}

/// Negative rate metric: mean of the false-negative and false-positive rates.
pub fn nrm(c: &ConfusionCounts, mode: NrmMode) -> f64 {
    let nr_fn = match mode {
        NrmMode::PaperLiteral => ratio(c.fn_, c.fn_ + c.fp),
        NrmMode::Standard => ratio(c.fn_, c.fn_ + c.tp),
    };
    let nr_fp = ratio(c.fp, c.fp + c.tn);
    (nr_fn + nr_fp) / 2.0
}
