use std::path::Path;

use binbench::manifest::{self, Manifest};
use binbench::metrics::{evaluate_pair, EvalOptions, MetricReport, METRIC_CSV_HEADER};
use binbench::pnm;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::EvaluateConfig;
use crate::failure::{CliResult, Failure};
use crate::{EvaluateArgs, Format};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Row {
    pub image: String,
    pub method: String,
    pub metrics: MetricReport,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Evaluation {
    pub options: EvalOptions,
    pub rows: Vec<Row>,
}

impl Evaluation {
    pub fn to_csv(&self) -> String {
        let mut out = format!("image,method,{METRIC_CSV_HEADER}\n");
        for r in &self.rows {
            out.push_str(&format!("{},{},{}\n", r.image, r.method, r.metrics.csv_fields()));
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("evaluation serializes");
        s.push('\n');
        s
    }
}

fn evaluate_manifest(path: &Path, opts: EvalOptions) -> CliResult<Vec<Row>> {
    let m = Manifest::read(path).map_err(|e| Failure::decode(e.to_string()).context(path.display()))?;
    let mut entries: Vec<_> = m.images.iter().collect();
    entries.sort_by(|a, b| a.id.cmp(&b.id));

    let per_entry: Vec<CliResult<Vec<Row>>> = entries
        .par_iter()
        .map(|entry| {
            let gt_path = manifest::resolve(path, &entry.gt_path);
            let gt = pnm::read_binary(&gt_path)?;
            // methods is a BTreeMap, so rows come out in method order
            entry
                .methods
                .iter()
                .map(|(method, rel)| {
                    let p = manifest::resolve(path, rel);
                    let b = pnm::read_binary(&p)?;
                    let metrics = evaluate_pair(&gt, &b, opts)
                        .map_err(|e| Failure::from(e).context(format!("entry {} method {method}", entry.id)))?;
                    Ok(Row {
                        image: entry.id.clone(),
                        method: method.clone(),
                        metrics,
                    })
                })
                .collect()
        })
        .collect();

    let mut rows = Vec::new();
    for r in per_entry {
        rows.extend(r?);
    }
    Ok(rows)
}

pub fn run(args: &EvaluateArgs, config: &EvaluateConfig) -> CliResult {
    let manifest_opts = Manifest::read(&args.manifest).ok().and_then(|m| m.options);
    let base = manifest_opts.unwrap_or_default();
    let options = EvalOptions {
        nrm_mode: args.nrm_mode.or(config.nrm_mode).unwrap_or(base.nrm_mode),
        mpm_d: args.mpm_d.or(config.mpm_d).unwrap_or(base.mpm_d),
    };
    let rows = evaluate_manifest(&args.manifest, options)?;
    let eval = Evaluation { options, rows };
    let text = match args.format.or(config.format).unwrap_or(Format::Csv) {
        Format::Csv => eval.to_csv(),
        Format::Json => eval.to_json(),
    };
    super::emit(args.output.as_deref(), &text)
}
