use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    #[default]
    Otsu,
    Niblack,
    SauvolaGrid,
    SuContrast,
    NiblackEnsemble,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Otsu,
        Method::Niblack,
        Method::SauvolaGrid,
        Method::SuContrast,
        Method::NiblackEnsemble,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Otsu => "otsu",
            Method::Niblack => "niblack",
            Method::SauvolaGrid => "sauvola-grid",
            Method::SuContrast => "su-contrast",
            Method::NiblackEnsemble => "niblack-ensemble",
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Method::ALL.iter().map(|m| m.name()).collect();
                Error::InvalidParameter(format!(
                    "unknown method {s:?} (valid: {})",
                    names.join(", ")
                ))
            })
    }
}

/// Tunables shared by all binarizers. Each method reads the fields it needs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct BinarizerParams {
    pub method: Method,
    /// Side of the square statistics window (odd).
    pub window: usize,
    /// Niblack/Sauvola weight. Unset means -0.2 for Niblack, +0.2 otherwise.
    pub k: Option<f64>,
    /// Dynamic range of the standard deviation in Sauvola.
    pub r_dynamic: f64,
    pub grid_cell: usize,
    /// Exponent of the adaptive contrast/gradient mixing factor.
    pub gamma: f64,
    pub canny_low: f64,
    pub canny_high: f64,
    pub canny_sigma: f64,
    pub min_component: usize,
    pub edge_density_min: usize,
}

impl Default for BinarizerParams {
    fn default() -> Self {
        Self {
            method: Method::Otsu,
            window: 31,
            k: None,
            r_dynamic: 128.0,
            grid_cell: 32,
            gamma: 1.0,
            canny_low: 20.0,
            canny_high: 60.0,
            canny_sigma: 1.0,
            min_component: 6,
            edge_density_min: 4,
        }
    }
}

impl BinarizerParams {
    pub fn for_method(method: Method) -> Self {
        Self {
            method,
            ..Self::default()
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let p: Self = serde_json::from_str(text)
            .map_err(|e| Error::InvalidParameter(format!("params: {e}")))?;
        p.validate()?;
        Ok(p)
    }

    pub fn k_value(&self) -> f64 {
        self.k.unwrap_or(match self.method {
            Method::Niblack => -0.2,
            _ => 0.2,
        })
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        if self.window < 3 || self.window.is_multiple_of(2) {
            return bad(format!("window must be odd and >= 3, got {}", self.window));
        }
        if self.grid_cell < 8 {
            return bad(format!("grid_cell must be >= 8, got {}", self.grid_cell));
        }
        if !(self.canny_low > 0.0 && self.canny_low <= self.canny_high) {
            return bad(format!(
                "need 0 < canny_low <= canny_high, got {} and {}",
                self.canny_low, self.canny_high
            ));
        }
        if !(self.canny_sigma >= 0.0) {
            return bad(format!("canny_sigma must be >= 0, got {}", self.canny_sigma));
        }
        if !(self.r_dynamic > 0.0) {
            return bad(format!("r_dynamic must be > 0, got {}", self.r_dynamic));
        }
        if !self.gamma.is_finite() || !self.k_value().is_finite() {
            return bad("gamma and k must be finite".into());
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_valid() {
        for m in Method::ALL {
            BinarizerParams::for_method(m).validate().unwrap();
        }
        assert_eq!(BinarizerParams::for_method(Method::Niblack).k_value(), -0.2);
        assert_eq!(BinarizerParams::for_method(Method::SauvolaGrid).k_value(), 0.2);
    }

    #[test]
    fn invalid_values_are_rejected() {
        let base = BinarizerParams::default();
        for p in [
            BinarizerParams { window: 30, ..base.clone() },
            BinarizerParams { window: 1, ..base.clone() },
            BinarizerParams { grid_cell: 4, ..base.clone() },
            BinarizerParams { canny_low: 0.0, ..base.clone() },
            BinarizerParams { canny_low: 70.0, ..base.clone() },
            BinarizerParams { r_dynamic: 0.0, ..base.clone() },
        ] {
            assert!(p.validate().is_err(), "{p:?}");
        }
    }

    #[test]
    fn json_loading() {
        let p = BinarizerParams::from_json(r#"{"method":"sauvola-grid","window":15,"k":0.3}"#).unwrap();
        assert_eq!(p.method, Method::SauvolaGrid);
        assert_eq!(p.window, 15);
        assert_eq!(p.k_value(), 0.3);
        assert_eq!(p.grid_cell, 32);
        assert!(BinarizerParams::from_json(r#"{"windw":15}"#).is_err());
        assert!(BinarizerParams::from_json(r#"{"window":16}"#).is_err());
    }

    #[test]
    fn method_names_roundtrip() {
        for m in Method::ALL {
            assert_eq!(m.name().parse::<Method>().unwrap(), m);
            assert_eq!(serde_json::to_string(&m).unwrap(), format!("\"{}\"", m.name()));
        }
        assert!("fuzzy".parse::<Method>().is_err());
    }
}
