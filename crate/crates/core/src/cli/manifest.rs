use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finalg::algebra_from_presentation;
use crate::multipoly::AlgebraPresentation;

/// The transcribed Table 1 (local algebras of dimension 3 to 5).
pub const TABLE1: &str = include_str!("../../manifests/table1.json");
/// The transcribed Table 2 (local algebras of dimension 6).
pub const TABLE2: &str = include_str!("../../manifests/table2.json");

/// One algebra with its expected closure dimensions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub name: String,
    pub field: String,
    pub vars: Vec<String>,
    pub relations: Vec<String>,
    /// `m` (as a decimal string) to `dim A^{(m)}`.
    pub expected: BTreeMap<String, usize>,
    #[serde(default)]
    pub tags: Vec<String>,
    /// The ideal as printed in the source table.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<String>,
}

impl ManifestEntry {
    pub fn presentation(&self) -> Result<AlgebraPresentation> {
        AlgebraPresentation::from_parts(self.field.parse()?, self.vars.clone(), &self.relations)
    }

    /// Expected dimensions sorted by `m`.
    pub fn expected_dims(&self) -> Result<Vec<(usize, usize)>> {
        let mut out = self
            .expected
            .iter()
            .map(|(k, v)| {
                k.trim()
                    .parse::<usize>()
                    .map(|m| (m, *v))
                    .map_err(|_| Error::InvalidArgument(format!("{}: expected key `{k}` is not an integer", self.name)))
            })
            .collect::<Result<Vec<_>>>()?;
        out.sort_unstable();
        Ok(out)
    }

    pub fn has_tag(&self, tag: &str) -> bool {
        self.tags.iter().any(|t| t == tag)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Manifest {
    pub entries: Vec<ManifestEntry>,
}

impl Manifest {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Syntax {
            pos: e.column(),
            msg: format!("manifest line {}: {e}", e.line()),
        })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn table1() -> Self {
        Self::parse(TABLE1).expect("bundled manifest parses")
    }

    pub fn table2() -> Self {
        Self::parse(TABLE2).expect("bundled manifest parses")
    }

    pub fn get(&self, name: &str) -> Option<&ManifestEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// Every presentation parses, names are unique and each expected `m`
    /// lies in `0..=n+1`.
    pub fn validate(&self) -> Result<()> {
        let mut seen = std::collections::HashSet::new();
        for e in &self.entries {
            if !seen.insert(e.name.as_str()) {
                return Err(Error::InvalidArgument(format!("duplicate manifest entry `{}`", e.name)));
            }
            let n = algebra_from_presentation(&e.presentation()?)?.dim();
            for (m, _) in e.expected_dims()? {
                if m > n + 1 {
                    return Err(Error::InvalidArgument(format!("{}: expected m = {m} exceeds n + 1 = {}", e.name, n + 1)));
                }
            }
        }
        Ok(())
    }

    /// Entries picked by a selection such as `1,3-5` (1-based) or by name.
    pub fn select(&self, rows: &str) -> Result<Vec<&ManifestEntry>> {
        let mut picked = Vec::new();
        for token in rows.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            if let Some(e) = self.get(token) {
                picked.push(e);
                continue;
            }
            let bad = || Error::InvalidArgument(format!("row selector `{token}` is neither an entry name nor an index range"));
            let (lo, hi) = match token.split_once('-') {
                Some((a, b)) => (a.parse::<usize>().map_err(|_| bad())?, b.parse::<usize>().map_err(|_| bad())?),
                None => {
                    let i = token.parse::<usize>().map_err(|_| bad())?;
                    (i, i)
                }
            };
            if lo == 0 || hi < lo || hi > self.entries.len() {
                return Err(Error::InvalidArgument(format!(
                    "row range `{token}` outside 1..={}",
                    self.entries.len()
                )));
            }
            picked.extend(&self.entries[lo - 1..hi]);
        }
        Ok(picked)
    }
}
