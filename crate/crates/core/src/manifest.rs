//! Corpus and evaluation manifests.
//!
//! Paths inside a manifest are relative to the manifest's directory unless
//! absolute.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::metrics::EvalOptions;

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub options: Option<EvalOptions>,
    pub images: Vec<ManifestEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifestEntry {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub page_path: Option<String>,
    pub gt_path: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub degradations: Vec<String>,
    /// Method name to binarization path.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub methods: BTreeMap<String, String>,
}

impl Manifest {
    pub fn read(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)?;
        Ok(serde_json::from_str(&text)?)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("manifest serializes");
        s.push('\n');
        s
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        fs::write(path, self.to_json())?;
        Ok(())
    }
}

/// Resolves `rel` against the directory holding `manifest`.
pub fn resolve(manifest: &Path, rel: &str) -> PathBuf {
    let p = Path::new(rel);
    if p.is_absolute() {
        return p.to_path_buf();
    }
    manifest.parent().unwrap_or(Path::new("")).join(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_skips_empty_fields() {
        let m = Manifest {
            options: None,
            images: vec![ManifestEntry {
                id: "a".into(),
                page_path: None,
                gt_path: "gt/a.pbm".into(),
                degradations: vec![],
                methods: BTreeMap::new(),
            }],
        };
        let json = m.to_json();
        assert!(!json.contains("methods"));
        assert!(!json.contains("page_path"));
        assert_eq!(serde_json::from_str::<Manifest>(&json).unwrap(), m);
    }

    #[test]
    fn relative_paths_follow_the_manifest() {
        assert_eq!(
            resolve(Path::new("/data/run/manifest.json"), "gt/x.pbm"),
            PathBuf::from("/data/run/gt/x.pbm")
        );
        assert_eq!(resolve(Path::new("m.json"), "/abs/x"), PathBuf::from("/abs/x"));
    }
}
