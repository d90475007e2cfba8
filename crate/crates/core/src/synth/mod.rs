//! Seeded synthetic document pages with exact ground truth.
//!
//! The ground truth is the stroke mask as rendered, before any degradation,
//! and it depends only on the seed, page size and stroke settings. Every
//! degradation draws from its own random stream and touches only the gray
//! page. Randomness comes from [`SplitMix64`] and all noise arithmetic is
//! integer, so a spec yields the same bytes on any platform.

mod corpus;
mod degrade;
mod rng;
mod strokes;

pub use corpus::{generate_corpus, CorpusConfig, Profile};
pub use rng::SplitMix64;
pub use strokes::Stroke;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::image::{BinaryImage, GrayImage};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DegradationKind {
    BleedThrough,
    FadedInk,
    IlluminationGradient,
    Noise,
    Blur,
    Lines,
    Fibers,
}

impl DegradationKind {
    pub const ALL: [DegradationKind; 7] = [
        DegradationKind::BleedThrough,
        DegradationKind::FadedInk,
        DegradationKind::IlluminationGradient,
        DegradationKind::Noise,
        DegradationKind::Blur,
        DegradationKind::Lines,
        DegradationKind::Fibers,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DegradationKind::BleedThrough => "bleed-through",
            DegradationKind::FadedInk => "faded-ink",
            DegradationKind::IlluminationGradient => "illumination-gradient",
            DegradationKind::Noise => "noise",
            DegradationKind::Blur => "blur",
            DegradationKind::Lines => "lines",
            DegradationKind::Fibers => "fibers",
        }
    }

    /// Salt of this degradation's random stream.
    fn salt(self) -> u64 {
        match self {
            DegradationKind::BleedThrough => 11,
            DegradationKind::FadedInk => 12,
            DegradationKind::IlluminationGradient => 13,
            DegradationKind::Noise => 14,
            DegradationKind::Blur => 15,
            DegradationKind::Lines => 16,
            DegradationKind::Fibers => 17,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Degradation {
    pub kind: DegradationKind,
    /// Strength in `[0, 1]`.
    pub intensity: f64,
}

impl Degradation {
    pub fn new(kind: DegradationKind, intensity: f64) -> Self {
        Self { kind, intensity }
    }

    fn permille(&self) -> i64 {
        (self.intensity * 1000.0).round() as i64
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct DegradationSpec {
    pub seed: u64,
    pub width: usize,
    pub height: usize,
    pub strokes: usize,
    pub stroke_width_min: usize,
    pub stroke_width_max: usize,
    pub degradations: Vec<Degradation>,
}

impl Default for DegradationSpec {
    fn default() -> Self {
        Self {
            seed: 0,
            width: 384,
            height: 256,
            strokes: 60,
            stroke_width_min: 2,
            stroke_width_max: 5,
            degradations: Vec::new(),
        }
    }
}

impl DegradationSpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidSpec(m));
        if self.width < 16 || self.height < 16 {
            return bad(format!("page must be at least 16x16, got {}x{}", self.width, self.height));
        }
        if self.strokes == 0 {
            return bad("at least one stroke is needed for a non-empty ground truth".into());
        }
        if self.stroke_width_min == 0 || self.stroke_width_min > self.stroke_width_max {
            return bad(format!(
                "stroke width range {}..={} is empty or starts at 0",
                self.stroke_width_min, self.stroke_width_max
            ));
        }
        if self.stroke_width_max * 4 > self.width.min(self.height) {
            return bad(format!("stroke width {} too large for the page", self.stroke_width_max));
        }
        for (i, d) in self.degradations.iter().enumerate() {
            if !(0.0..=1.0).contains(&d.intensity) {
                return bad(format!("{} intensity {} outside [0, 1]", d.kind.name(), d.intensity));
            }
            if self.degradations[..i].iter().any(|o| o.kind == d.kind) {
                return bad(format!("{} listed twice", d.kind.name()));
            }
        }
        Ok(())
    }

    pub fn with(mut self, kind: DegradationKind, intensity: f64) -> Self {
        self.degradations.push(Degradation::new(kind, intensity));
        self
    }

    fn get(&self, kind: DegradationKind) -> Option<&Degradation> {
        self.degradations.iter().find(|d| d.kind == kind)
    }
}

/// A generated page and its ground truth.
#[derive(Clone, Debug, PartialEq)]
pub struct SyntheticPage {
    pub page: GrayImage,
    pub ground_truth: BinaryImage,
    pub background: u8,
}

const STROKE_SALT: u64 = 1;
const BACKGROUND_SALT: u64 = 2;

pub fn generate(spec: &DegradationSpec) -> Result<SyntheticPage> {
    spec.validate()?;
    let (w, h) = (spec.width, spec.height);
    let background = 200 + SplitMix64::stream(spec.seed, BACKGROUND_SALT).below(31) as u8;

    let mut stroke_rng = SplitMix64::stream(spec.seed, STROKE_SALT);
    let strokes = strokes::random_strokes(
        &mut stroke_rng,
        spec.strokes,
        w,
        h,
        (spec.stroke_width_min, spec.stroke_width_max),
    );

    let stream = |kind: DegradationKind| SplitMix64::stream(spec.seed, kind.salt());
    let fade = spec
        .get(DegradationKind::FadedInk)
        .map(|d| degrade::fade_plan(&mut stream(d.kind), &strokes, d.permille(), background));

    // ground truth and ink level per pixel (darkest stroke wins)
    let mut gt = BinaryImage::empty(w, h);
    let mut page = GrayImage::filled(w, h, background);
    for (si, stroke) in strokes.iter().enumerate() {
        stroke.rasterize(w, h, |x, y, sample| {
            gt.set(x, y, true);
            let level = match &fade {
                Some(plan) => plan.level(si, sample, stroke.ink),
                None => stroke.ink,
            };
            if level < page.get(x, y) {
                page.set(x, y, level);
            }
        });
    }

    let ordered = [
        DegradationKind::BleedThrough,
        DegradationKind::Lines,
        DegradationKind::Fibers,
        DegradationKind::IlluminationGradient,
        DegradationKind::Blur,
        DegradationKind::Noise,
    ];
    for kind in ordered {
        if let Some(d) = spec.get(kind) {
            let mut rng = stream(kind);
            let p = d.permille();
            match kind {
                DegradationKind::BleedThrough => {
                    degrade::bleed_through(&mut page, &mut rng, spec, background, p)
                }
                DegradationKind::Lines => degrade::ruled_lines(&mut page, &mut rng, background, p),
                DegradationKind::Fibers => degrade::fibers(&mut page, &mut rng, background, p),
                DegradationKind::IlluminationGradient => {
                    degrade::illumination(&mut page, &mut rng, p)
                }
                DegradationKind::Blur => degrade::box_blur(&mut page, p),
                DegradationKind::Noise => degrade::noise(&mut page, &mut rng, p),
                DegradationKind::FadedInk => unreachable!(),
            }
        }
    }

    Ok(SyntheticPage {
        page,
        ground_truth: gt,
        background,
    })
}
