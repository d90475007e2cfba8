use std::fs;

use binbench::scoring::{score, ResultTable};

use super::evaluate::Evaluation;
use crate::config::RankConfig;
use crate::failure::{CliResult, Failure};
use crate::{Format, RankArgs};

pub fn run(args: &RankArgs, config: &RankConfig) -> CliResult {
    let input = &args.input;
    let text = fs::read_to_string(input).map_err(|e| Failure::decode(e.to_string()).context(input.display()))?;
    let eval: Evaluation = serde_json::from_str(&text)
        .map_err(|e| Failure::decode(format!("not evaluate JSON output: {e}")).context(input.display()))?;

    let mut table = ResultTable::new();
    for r in &eval.rows {
        table.insert(&r.method, &r.image, r.metrics);
    }
    let board = score(&table)?;

    let out = match args.format.or(config.format).unwrap_or(Format::Csv) {
        Format::Csv => board.to_csv(),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&board).expect("scoreboard serializes");
            s.push('\n');
            s
        }
    };
    super::emit(args.output.as_deref(), &out)
}
