//! Input documents (TOML) and the Table 3 fixture file.
//!
//! ```toml
//! [ambient]
//! type = "B3"                   # products as "C3xA1", central tori as "T2"
//! lattice = "simply_connected"  # or "adjoint", or a basis matrix in ω-coordinates
//!
//! [wss]
//! xi = "min"                    # "min" | "max" | "sat" | generators in Λ-coordinates
//! sigma = [[1, 2, 3]]           # simple-root coordinates
//! sp = [1, 2]                   # 1-based simple-root indices
//!
//! [action]                      # optional, for the lgroup tables
//! generators = [[1, 2, 3]]      # 1-based images of the simple roots
//! ```

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::{RootDataError, WssError};
use crate::linalg::Matrix;
use crate::rootdata::{BasedRootDatum, LatticeFlavor};
use crate::wss::{WeakSphericalSystem, XiSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid field `{field}`: {message}")]
    Field { field: String, message: String },
    #[error(transparent)]
    RootData(#[from] RootDataError),
    #[error(transparent)]
    Wss(#[from] WssError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum NamedOrMatrix {
    Named(String),
    Matrix(Matrix),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AmbientSpec {
    #[serde(rename = "type")]
    pub type_label: String,
    #[serde(default = "default_lattice")]
    pub lattice: NamedOrMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WssSpec {
    #[serde(default = "default_xi")]
    pub xi: NamedOrMatrix,
    #[serde(default)]
    pub sigma: Matrix,
    #[serde(default)]
    pub sp: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionSpec {
    pub generators: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub ambient: AmbientSpec,
    pub wss: WssSpec,
    #[serde(default)]
    pub action: Option<ActionSpec>,
}

fn default_lattice() -> NamedOrMatrix {
    NamedOrMatrix::Named("simply_connected".into())
}

fn default_xi() -> NamedOrMatrix {
    NamedOrMatrix::Named("min".into())
}

fn parse_error(src: &str, e: &toml::de::Error) -> InputError {
    let (line, column) = match e.span() {
        Some(span) => {
            let before = &src[..span.start.min(src.len())];
            let line = before.matches('\n').count() + 1;
            let column = before.len() - before.rfind('\n').map_or(0, |i| i + 1) + 1;
            (line, column)
        }
        None => (0, 0),
    };
    InputError::Parse {
        line,
        column,
        message: e.message().to_string(),
    }
}

fn field(name: &str, message: impl Into<String>) -> InputError {
    InputError::Field {
        field: name.into(),
        message: message.into(),
    }
}

impl InputDocument {
    pub fn parse(src: &str) -> Result<Self, InputError> {
        toml::from_str(src).map_err(|e| parse_error(src, &e))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("documents serialize")
    }

    pub fn lattice_flavor(&self) -> Result<LatticeFlavor, InputError> {
        match &self.ambient.lattice {
            NamedOrMatrix::Named(s) => match s.as_str() {
                "simply_connected" | "sc" => Ok(LatticeFlavor::SimplyConnected),
                "adjoint" | "ad" => Ok(LatticeFlavor::Adjoint),
                other => Err(field("ambient.lattice", format!("unknown flavor `{other}`"))),
            },
            NamedOrMatrix::Matrix(m) => Ok(LatticeFlavor::Explicit(m.clone())),
        }
    }

    pub fn xi_spec(&self) -> Result<XiSpec, InputError> {
        match &self.wss.xi {
            NamedOrMatrix::Named(s) => match s.as_str() {
                "min" => Ok(XiSpec::Min),
                "max" => Ok(XiSpec::Max),
                "sat" => Ok(XiSpec::Sat),
                other => Err(field("wss.xi", format!("unknown lattice `{other}`"))),
            },
            NamedOrMatrix::Matrix(m) => Ok(XiSpec::Explicit(m.clone())),
        }
    }

    pub fn ambient(&self) -> Result<BasedRootDatum, InputError> {
        Ok(BasedRootDatum::build(
            &self.ambient.type_label,
            &self.lattice_flavor()?,
        )?)
    }

    /// 0-based `Sᵖ`.
    pub fn sp(&self, r: usize) -> Result<Vec<usize>, InputError> {
        self.wss
            .sp
            .iter()
            .map(|&i| {
                if (1..=r).contains(&i) {
                    Ok(i - 1)
                } else {
                    Err(field("wss.sp", format!("index {i} out of range 1..={r}")))
                }
            })
            .collect()
    }

    /// Builds the system without checking the axioms.
    pub fn build(&self) -> Result<WeakSphericalSystem, InputError> {
        let ambient = self.ambient()?;
        let sp = self.sp(ambient.num_simple())?;
        Ok(WeakSphericalSystem::new(
            ambient,
            self.xi_spec()?,
            self.wss.sigma.clone(),
            sp,
        )?)
    }

    /// 0-based permutations from the `[action]` table.
    pub fn action_generators(&self, r: usize) -> Result<Vec<Vec<usize>>, InputError> {
        let Some(a) = &self.action else {
            return Ok(Vec::new());
        };
        a.generators
            .iter()
            .map(|g| {
                if g.len() != r || g.iter().any(|&i| !(1..=r).contains(&i)) {
                    return Err(field(
                        "action.generators",
                        format!("{g:?} is not a map of 1..={r}"),
                    ));
                }
                Ok(g.iter().map(|i| i - 1).collect())
            })
            .collect()
    }
}

/// One row of the dual-group fixture table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixtureRow {
    pub name: String,
    pub source: String,
    /// `𝔤^∨, 𝔤^∧_X, 𝔤^∨_X, 𝔩^∨_X, 𝔩^∧_X` in table notation.
    pub expected: [String; 5],
    #[serde(default)]
    pub quarantined: bool,
    pub ambient: AmbientSpec,
    pub wss: WssSpec,
}

impl FixtureRow {
    pub fn document(&self) -> InputDocument {
        InputDocument {
            ambient: self.ambient.clone(),
            wss: self.wss.clone(),
            action: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureFile {
    pub row: Vec<FixtureRow>,
}

/// The shipped fixture table.
pub const TABLE3: &str = include_str!("../data/table3.toml");

pub fn parse_fixtures(src: &str) -> Result<Vec<FixtureRow>, InputError> {
    let f: FixtureFile = toml::from_str(src).map_err(|e| parse_error(src, &e))?;
    Ok(f.row)
}

/// Result of running one fixture row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureOutcome {
    pub name: String,
    pub quarantined: bool,
    pub computed: Vec<String>,
    pub matches: Vec<bool>,
    pub error: Option<String>,
}

impl FixtureOutcome {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.matches.iter().all(|&m| m)
    }
}

/// Computes the five columns of a row and compares them up to isomorphism.
pub fn check_fixture(row: &FixtureRow) -> FixtureOutcome {
    let mut out = FixtureOutcome {
        name: row.name.clone(),
        quarantined: row.quarantined,
        computed: Vec::new(),
        matches: Vec::new(),
        error: None,
    };
    let report = row
        .document()
        .build()
        .map_err(|e| e.to_string())
        .and_then(|w| crate::dualize::full_report(&w).map_err(|e| e.to_string()));
    match report {
        Ok(r) => {
            for (got, want) in r.columns().iter().zip(&row.expected) {
                out.computed.push(got.to_string());
                let same = crate::liealg::same(got, want).unwrap_or(false);
                out.matches.push(same);
            }
        }
        Err(e) => out.error = Some(e),
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_builds() {
        let d = InputDocument::parse(
            "[ambient]\ntype = \"B3\"\n[wss]\nxi = \"max\"\nsigma = [[1, 2, 3]]\nsp = [1, 2]\n",
        )
        .unwrap();
        let w = d.build().unwrap();
        assert!(w.is_valid());
        assert_eq!(w.sp(), &[0, 1]);
        let again = InputDocument::parse(&d.to_toml()).unwrap();
        assert_eq!(again, d);
    }

    #[test]
    fn explicit_matrices() {
        let d = InputDocument::parse(
            "[ambient]\ntype = \"A1\"\nlattice = [[1]]\n[wss]\nxi = [[2]]\nsigma = [[1]]\n",
        )
        .unwrap();
        assert!(matches!(d.xi_spec().unwrap(), XiSpec::Explicit(_)));
        assert_eq!(d.build().unwrap().saturation_index(), 2);
    }

    #[test]
    fn errors_have_locations() {
        let e = InputDocument::parse("[ambient]\ntype = \"B3\"\n[wss]\nsigma = [[1, 2,]\n")
            .unwrap_err();
        assert!(matches!(e, InputError::Parse { line: 4, .. }), "{e}");
        let e = InputDocument::parse("[ambient]\ntype = \"B3\"\n[wss]\nsp = [0]\n")
            .unwrap()
            .build()
            .unwrap_err();
        assert!(matches!(e, InputError::Field { .. }));
        let e = InputDocument::parse("[ambient]\ntype = \"Q3\"\n[wss]\n")
            .unwrap()
            .build()
            .unwrap_err();
        assert!(matches!(e, InputError::RootData(_)));
    }

    #[test]
    fn fixture_file_parses() {
        let rows = parse_fixtures(TABLE3).unwrap();
        assert!(rows.len() >= 10);
        for r in &rows {
            for e in &r.expected {
                crate::liealg::parse(e).unwrap();
            }
            r.document().build().unwrap();
        }
    }

    #[test]
    fn fixtures_reproduce() {
        let bad: Vec<FixtureOutcome> = parse_fixtures(TABLE3)
            .unwrap()
            .iter()
            .map(check_fixture)
            .filter(|o| !o.passed())
            .collect();
        assert!(bad.is_empty(), "{bad:#?}");
    }
}
