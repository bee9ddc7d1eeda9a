//! Golden-table fixture files: `s_k`, `F_k` and `Ω_m` in canonical text.

use std::fs;
use std::path::Path;

use cyclo_core::lehmer::{LehmerTable, Route};
use cyclo_core::MultiPoly;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub index: usize,
    pub poly: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Fixtures {
    pub k_max: usize,
    /// `s_1, …, s_{k_max}`.
    pub s: Vec<Entry>,
    /// `F_0, …, F_{k_max}`.
    pub f: Vec<Entry>,
    /// `Ω_1, …, Ω_{⌊k_max/2⌋}`.
    pub omega: Vec<Entry>,
}

fn entries(polys: &[MultiPoly], first: usize) -> Vec<Entry> {
    polys.iter().enumerate().map(|(i, p)| Entry { index: first + i, poly: p.to_string() }).collect()
}

impl Fixtures {
    pub fn compute(k_max: usize) -> Result<Self, CliError> {
        let t = LehmerTable::build(k_max, Route::Reconstruction)?;
        Ok(Self {
            k_max,
            s: entries(t.s_polys(), 1),
            f: entries(t.f_polys(), 0),
            omega: entries(t.omega_polys(), 1),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("fixtures serialize")
    }

    pub fn write(&self, path: &Path) -> Result<(), CliError> {
        fs::write(path, self.to_json() + "\n").map_err(|source| CliError::Io { path: path.display().to_string(), source })
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
        Ok(serde_json::from_str(&text)?)
    }

    /// `F_0, …` parsed; indices must run `0, 1, 2, …` without gaps.
    pub fn f_table(&self) -> Result<Vec<MultiPoly>, CliError> {
        let mut sorted = self.f.clone();
        sorted.sort_by_key(|e| e.index);
        sorted
            .iter()
            .enumerate()
            .map(|(i, e)| {
                if e.index != i {
                    return Err(CliError::Usage(format!("F table is missing index {i}")));
                }
                e.poly.parse::<MultiPoly>().map_err(CliError::from)
            })
            .collect()
    }
}
