//! Optional JSON config file. Every key mirrors a command-line flag; flags
//! win over the file, and the file wins over built-in defaults.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use binbench::binarize::BinarizerParams;
use binbench::metrics::{MpmNormalization, NrmMode};
use binbench::synth::DegradationKind;
use serde::Deserialize;

use crate::failure::{CliResult, Failure};
use crate::Format;

#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub binarize: BinarizeConfig,
    pub evaluate: EvaluateConfig,
    pub rank: RankConfig,
    pub gen: GenConfig,
}

#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct BinarizeConfig {
    pub method: Option<String>,
    pub params: Option<BinarizerParams>,
    pub methods: Option<Vec<String>>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct EvaluateConfig {
    pub format: Option<Format>,
    pub nrm_mode: Option<NrmMode>,
    pub mpm_d: Option<MpmNormalization>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RankConfig {
    pub format: Option<Format>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GenConfig {
    pub n: Option<usize>,
    pub seed: Option<u64>,
    pub profile: Option<String>,
    pub width: Option<usize>,
    pub height: Option<usize>,
    pub strokes: Option<usize>,
    pub stroke_width_min: Option<usize>,
    pub stroke_width_max: Option<usize>,
    pub intensities: BTreeMap<DegradationKind, f64>,
}

impl Config {
    pub fn load(path: Option<&Path>) -> CliResult<Self> {
        let Some(path) = path else {
            return Ok(Self::default());
        };
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::params(format!("cannot read config {}: {e}", path.display())))?;
        serde_json::from_str(&text)
            .map_err(|e| Failure::params(format!("invalid config {}: {e}", path.display())))
    }
}
