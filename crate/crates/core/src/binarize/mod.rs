//! Reference binarization algorithms.
//!
//! Every method maps a [`GrayImage`] to a [`BinaryImage`] of the same shape
//! and treats ink as dark: a pixel below its threshold is foreground.

mod ensemble;
mod niblack;
mod otsu;
mod params;
mod sauvola;
mod su;

pub use ensemble::{
    conditional_median, constrained_closing, ensemble_threshold_map, nick_thresholds,
    niblack_ensemble, wolf_thresholds,
};
pub use niblack::{niblack, niblack_thresholds};
pub use otsu::{otsu, otsu_threshold};
pub use params::{BinarizerParams, Method};
pub use sauvola::{sauvola_grid, sauvola_grid_threshold_map, sauvola_thresholds};
pub use su::{su_contrast, su_contrast_stages, SuStages};

use crate::error::Result;
use crate::image::{BinaryImage, GrayImage};

/// Runs the method selected in `params`.
pub fn binarize(img: &GrayImage, params: &BinarizerParams) -> Result<BinaryImage> {
    params.validate()?;
    match params.method {
        Method::Otsu => Ok(otsu(img)),
        Method::Niblack => niblack(img, params),
        Method::SauvolaGrid => sauvola_grid(img, params),
        Method::SuContrast => su_contrast(img, params),
        Method::NiblackEnsemble => niblack_ensemble(img, params),
    }
}

/// `value < threshold` per pixel.
pub(crate) fn below(img: &GrayImage, thresholds: &[f64]) -> BinaryImage {
    let mask = img
        .data()
        .iter()
        .zip(thresholds)
        .map(|(&v, &t)| (v as f64) < t)
        .collect();
    BinaryImage::new(img.width(), img.height(), mask).expect("same shape")
}
