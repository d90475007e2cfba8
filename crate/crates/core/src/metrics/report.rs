use serde::{Deserialize, Serialize};

use super::{
    confusion_counts, drd, f_measure, mpm_with, nrm, pseudo_f_from_parts, psnr_from_counts,
    MpmNormalization, NrmMode,
};
use crate::error::Result;
use crate::image::BinaryImage;
use crate::raster::skeletonize;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EvalOptions {
    #[serde(default)]
    pub nrm_mode: NrmMode,
    #[serde(default)]
    pub mpm_d: MpmNormalization,
}

/// The six measures for one (ground truth, binarization) pair.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MetricReport {
    #[serde(rename = "fmeasure")]
    pub f_measure: f64,
    #[serde(rename = "pfmeasure")]
    pub pseudo_f_measure: f64,
    #[serde(with = "psnr_serde")]
    pub psnr: f64,
    pub drd: f64,
    pub mpm: f64,
    pub nrm: f64,
}

/// Column names of [`MetricReport::csv_fields`]. MPM and NRM are scaled by
/// 1e3 and 1e2 respectively, as competition tables print them.
pub const METRIC_CSV_HEADER: &str = "fmeasure,pfmeasure,psnr,drd,mpm_x1e3,nrm_x1e2";

impl MetricReport {
    /// Two-decimal human-readable fields matching [`METRIC_CSV_HEADER`].
    pub fn csv_fields(&self) -> String {
        let psnr = if self.psnr.is_infinite() {
            "inf".to_string()
        } else {
            format!("{:.2}", self.psnr)
        };
        format!(
            "{:.2},{:.2},{},{:.2},{:.2},{:.2}",
            self.f_measure,
            self.pseudo_f_measure,
            psnr,
            self.drd,
            self.mpm * 1e3,
            self.nrm * 1e2
        )
    }
}

pub fn evaluate_pair(gt: &BinaryImage, b: &BinaryImage, opts: EvalOptions) -> Result<MetricReport> {
    let c = confusion_counts(gt, b)?;
    let skel = skeletonize(gt);
    Ok(MetricReport {
        f_measure: f_measure(&c),
        pseudo_f_measure: pseudo_f_from_parts(&skel, b, &c),
        psnr: psnr_from_counts(&c),
        drd: drd(gt, b)?,
        mpm: mpm_with(gt, b, opts.mpm_d)?,
        nrm: nrm(&c, opts.nrm_mode),
    })
}

/// PSNR is a JSON number, or the string `"inf"` for identical images.
mod psnr_serde {
    use serde::de::{self, Visitor};
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
        if v.is_infinite() && *v > 0.0 {
            s.serialize_str("inf")
        } else {
            s.serialize_f64(*v)
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        struct PsnrVisitor;

        impl Visitor<'_> for PsnrVisitor {
            type Value = f64;

            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                f.write_str("a number or \"inf\"")
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> Result<f64, E> {
                Ok(v)
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<f64, E> {
                Ok(v as f64)
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<f64, E> {
                Ok(v as f64)
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<f64, E> {
                match v {
                    "inf" => Ok(f64::INFINITY),
                    other => Err(E::invalid_value(de::Unexpected::Str(other), &self)),
                }
            }
        }

        d.deserialize_any(PsnrVisitor)
    }
}
