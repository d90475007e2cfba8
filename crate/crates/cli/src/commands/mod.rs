pub mod binarize;
pub mod evaluate;
pub mod gen;
pub mod rank;

use std::fs;
use std::io::Write;
use std::path::Path;

use crate::failure::{CliResult, Failure};

/// Writes to `path`, or to stdout when absent.
pub fn emit(path: Option<&Path>, text: &str) -> CliResult {
    match path {
        Some(p) => {
            fs::write(p, text).map_err(|e| Failure::from(e).context(p.display()))?;
        }
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
        }
    }
    Ok(())
}
