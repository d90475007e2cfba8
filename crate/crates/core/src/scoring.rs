//! Relative scoring of methods across images and measures.
//!
//! For every image and measure the best value over all methods is found.
//! Each method then earns `value / best` on measures where higher is better
//! (F-Measure, pseudo F-Measure, PSNR) and `best / value` where lower is
//! better (DRD, MPM, NRM). A method's score is the sum of those terms, so a
//! method that is best everywhere scores `images x 6`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metrics::MetricReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Measure {
    FMeasure,
    PseudoFMeasure,
    Psnr,
    Drd,
    Mpm,
    Nrm,
}

impl Measure {
    pub const ALL: [Measure; 6] = [
        Measure::FMeasure,
        Measure::PseudoFMeasure,
        Measure::Psnr,
        Measure::Drd,
        Measure::Mpm,
        Measure::Nrm,
    ];

    pub fn higher_is_better(self) -> bool {
        matches!(self, Measure::FMeasure | Measure::PseudoFMeasure | Measure::Psnr)
    }

    pub fn of(self, r: &MetricReport) -> f64 {
        match self {
            Measure::FMeasure => r.f_measure,
            Measure::PseudoFMeasure => r.pseudo_f_measure,
            Measure::Psnr => r.psnr,
            Measure::Drd => r.drd,
            Measure::Mpm => r.mpm,
            Measure::Nrm => r.nrm,
        }
    }

    pub fn of_mut(self, r: &mut MetricReport) -> &mut f64 {
        match self {
            Measure::FMeasure => &mut r.f_measure,
            Measure::PseudoFMeasure => &mut r.pseudo_f_measure,
            Measure::Psnr => &mut r.psnr,
            Measure::Drd => &mut r.drd,
            Measure::Mpm => &mut r.mpm,
            Measure::Nrm => &mut r.nrm,
        }
    }
}

/// Metric reports keyed by (method, image).
#[derive(Clone, Debug, Default)]
pub struct ResultTable {
    methods: Vec<String>,
    images: Vec<String>,
    cells: BTreeMap<(String, String), MetricReport>,
}

impl ResultTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts or replaces a cell. Methods and images keep first-insertion order.
    pub fn insert(&mut self, method: &str, image: &str, report: MetricReport) {
        if !self.methods.iter().any(|m| m == method) {
            self.methods.push(method.to_string());
        }
        if !self.images.iter().any(|i| i == image) {
            self.images.push(image.to_string());
        }
        self.cells
            .insert((method.to_string(), image.to_string()), report);
    }

    pub fn methods(&self) -> &[String] {
        &self.methods
    }

    pub fn images(&self) -> &[String] {
        &self.images
    }

    pub fn get(&self, method: &str, image: &str) -> Option<&MetricReport> {
        self.cells.get(&(method.to_string(), image.to_string()))
    }

    pub fn cell(&self, method: &str, image: &str) -> Result<&MetricReport> {
        self.get(method, image).ok_or_else(|| Error::MissingCell {
            method: method.to_string(),
            image: image.to_string(),
        })
    }

    pub fn check_complete(&self) -> Result<()> {
        for m in &self.methods {
            for i in &self.images {
                self.cell(m, i)?;
            }
        }
        Ok(())
    }
}

/// Best value of every measure on every image, keyed by (image, measure).
pub fn best_per_cell(t: &ResultTable) -> Result<BTreeMap<(String, Measure), f64>> {
    t.check_complete()?;
    let mut best = BTreeMap::new();
    for image in t.images() {
        for m in Measure::ALL {
            let values = t.methods().iter().map(|k| m.of(t.cell(k, image).unwrap()));
            let b = if m.higher_is_better() {
                values.fold(f64::NEG_INFINITY, f64::max)
            } else {
                values.fold(f64::INFINITY, f64::min)
            };
            best.insert((image.clone(), m), b);
        }
    }
    Ok(best)
}

/// One method's contribution for one (image, measure) cell, in `[0, 1]`.
pub fn score_term(measure: Measure, value: f64, best: f64) -> f64 {
    if value == best {
        return 1.0;
    }
    let term = if measure.higher_is_better() {
        // best > value here; an infinite best leaves finite values at 0
        if best.is_infinite() {
            0.0
        } else {
            value / best
        }
    } else if value.is_infinite() {
        0.0
    } else {
        // value > best >= 0, so value > 0
        best / value
    };
    term.clamp(0.0, 1.0)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScoreEntry {
    pub method: String,
    pub score: f64,
    pub rank: usize,
}

/// Scores and ranks, one entry per method, ordered by rank then method id.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScoreBoard {
    pub entries: Vec<ScoreEntry>,
}

impl ScoreBoard {
    pub fn get(&self, method: &str) -> Option<&ScoreEntry> {
        self.entries.iter().find(|e| e.method == method)
    }

    /// `method,score,rank` with scores at four decimals.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("method,score,rank\n");
        for e in &self.entries {
            out.push_str(&format!("{},{:.4},{}\n", e.method, e.score, e.rank));
        }
        out
    }
}

/// Competition ranks: 1 + the number of strictly higher scores, so ties share
/// the better rank.
pub fn rank(scores: &[f64]) -> Vec<usize> {
    scores
        .iter()
        .map(|&s| 1 + scores.iter().filter(|&&o| o > s).count())
        .collect()
}

pub fn score(t: &ResultTable) -> Result<ScoreBoard> {
    if t.methods().len() < 2 {
        return Err(Error::InsufficientMethods(t.methods().len()));
    }
    let best = best_per_cell(t)?;
    let mut methods: Vec<String> = t.methods().to_vec();
    methods.sort();
    // fixed summation order, independent of insertion order
    let mut images: Vec<String> = t.images().to_vec();
    images.sort();
    let scores: Vec<f64> = methods
        .iter()
        .map(|k| {
            images
                .iter()
                .flat_map(|image| Measure::ALL.map(|m| (image, m)))
                .map(|(image, m)| {
                    let v = m.of(t.cell(k, image).unwrap());
                    score_term(m, v, best[&(image.clone(), m)])
                })
                .sum()
        })
        .collect();
    let ranks = rank(&scores);
    let mut entries: Vec<ScoreEntry> = methods
        .into_iter()
        .zip(scores)
        .zip(ranks)
        .map(|((method, score), rank)| ScoreEntry {
            method,
            score,
            rank,
        })
        .collect();
    entries.sort_by(|a, b| a.rank.cmp(&b.rank).then_with(|| a.method.cmp(&b.method)));
    Ok(ScoreBoard { entries })
}
