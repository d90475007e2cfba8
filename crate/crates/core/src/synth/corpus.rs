//! Corpora of synthetic pages on disk.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{generate, Degradation, DegradationKind, DegradationSpec};
use crate::error::{Error, Result};
use crate::manifest::{Manifest, ManifestEntry};
use crate::pnm;

use DegradationKind::*;

/// Named degradation mix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Profile {
    /// No degradation.
    Clean,
    /// Ten label sets cycled by page index: faded ink on 7 of 10 pages,
    /// bleed-through and ruled lines on 3 of 10 each.
    PhibcLike,
    /// Every degradation on every page.
    Heavy,
}

const PHIBC_ROWS: [&[DegradationKind]; 10] = [
    &[FadedInk, Noise, IlluminationGradient],
    &[BleedThrough, Noise, Blur],
    &[BleedThrough, Noise],
    &[FadedInk, IlluminationGradient, Noise],
    &[FadedInk, IlluminationGradient, Fibers],
    &[FadedInk, Lines, Noise],
    &[FadedInk, Lines, Noise, IlluminationGradient],
    &[Blur, FadedInk, Noise],
    &[FadedInk, Noise, Blur],
    &[Lines, Blur, IlluminationGradient, Fibers, BleedThrough],
];

impl Profile {
    pub const ALL: [Profile; 3] = [Profile::Clean, Profile::PhibcLike, Profile::Heavy];

    pub fn name(self) -> &'static str {
        match self {
            Profile::Clean => "clean",
            Profile::PhibcLike => "phibc-like",
            Profile::Heavy => "heavy",
        }
    }

    /// Degradations for the page at `index`.
    pub fn kinds(self, index: usize) -> Vec<DegradationKind> {
        match self {
            Profile::Clean => Vec::new(),
            Profile::PhibcLike => PHIBC_ROWS[index % PHIBC_ROWS.len()].to_vec(),
            Profile::Heavy => DegradationKind::ALL.to_vec(),
        }
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Profile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Profile::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Profile::ALL.iter().map(|p| p.name()).collect();
                Error::InvalidSpec(format!(
                    "unknown profile '{s}' (valid: {})",
                    names.join(", ")
                ))
            })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CorpusConfig {
    pub profile: Profile,
    pub width: usize,
    pub height: usize,
    pub strokes: usize,
    pub stroke_width_min: usize,
    pub stroke_width_max: usize,
    /// Per-kind intensity overrides.
    pub intensities: BTreeMap<DegradationKind, f64>,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        let base = DegradationSpec::default();
        Self {
            profile: Profile::PhibcLike,
            width: base.width,
            height: base.height,
            strokes: base.strokes,
            stroke_width_min: base.stroke_width_min,
            stroke_width_max: base.stroke_width_max,
            intensities: BTreeMap::new(),
        }
    }
}

impl CorpusConfig {
    pub fn intensity(&self, kind: DegradationKind) -> f64 {
        if let Some(&v) = self.intensities.get(&kind) {
            return v;
        }
        match kind {
            FadedInk => 0.5,
            BleedThrough => 0.4,
            IlluminationGradient => 0.6,
            Noise => 0.3,
            Blur => 0.3,
            Lines => 0.5,
            Fibers => 0.5,
        }
    }

    pub fn spec(&self, seed: u64, index: usize) -> DegradationSpec {
        DegradationSpec {
            seed,
            width: self.width,
            height: self.height,
            strokes: self.strokes,
            stroke_width_min: self.stroke_width_min,
            stroke_width_max: self.stroke_width_max,
            degradations: self
                .profile
                .kinds(index)
                .into_iter()
                .map(|k| Degradation::new(k, self.intensity(k)))
                .collect(),
        }
    }
}

pub fn page_id(index: usize) -> String {
    format!("page{index:04}")
}

/// Writes `pages/<id>.pgm`, `gt/<id>.pbm` and `manifest.json` under
/// `outdir`. Page `i` uses seed `base_seed + i`.
pub fn generate_corpus(
    n: usize,
    base_seed: u64,
    config: &CorpusConfig,
    outdir: &Path,
) -> Result<Manifest> {
    if n == 0 {
        return Err(Error::InvalidSpec("corpus size must be at least 1".into()));
    }
    let specs: Vec<_> = (0..n)
        .map(|i| config.spec(base_seed.wrapping_add(i as u64), i))
        .collect();
    for s in &specs {
        s.validate()?;
    }
    fs::create_dir_all(outdir.join("pages"))?;
    fs::create_dir_all(outdir.join("gt"))?;
    let mut images = Vec::with_capacity(n);
    for (i, spec) in specs.iter().enumerate() {
        let id = page_id(i);
        let generated = generate(spec)?;
        let page_path = format!("pages/{id}.pgm");
        let gt_path = format!("gt/{id}.pbm");
        pnm::write_pgm(outdir.join(&page_path), &generated.page)?;
        pnm::write_pbm(outdir.join(&gt_path), &generated.ground_truth)?;
        images.push(ManifestEntry {
            id,
            page_path: Some(page_path),
            gt_path,
            degradations: spec.degradations.iter().map(|d| d.kind.name().to_string()).collect(),
            methods: BTreeMap::new(),
        });
    }
    let manifest = Manifest {
        options: None,
        images,
    };
    manifest.write(&outdir.join("manifest.json"))?;
    Ok(manifest)
}
