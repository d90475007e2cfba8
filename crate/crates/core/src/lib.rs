//! Document image binarization toolkit.
//!
//! * [`raster`]: histograms, local statistics, distance transform, thinning,
//!   edge detection and connected components.
//! * [`metrics`]: F-Measure, pseudo F-Measure, PSNR, NRM, DRD and MPM.
//! * [`binarize`]: Otsu, Niblack, grid Sauvola, the contrast/edge method and
//!   the Niblack-family ensemble.
//! * [`scoring`]: relative per-image scoring and ranking of methods.
//! * [`synth`]: seeded generator of degraded pages with exact ground truth.
//! * [`pnm`]: PGM/PBM codec.

pub mod binarize;
pub mod error;
pub mod image;
pub mod manifest;
pub mod metrics;
pub mod pnm;
pub mod raster;
pub mod scoring;
pub mod synth;

pub use error::{Error, Result};
pub use image::{BinaryImage, GrayImage};
