//! Combinatorics of the Bott–Samelson tower attached to a reduced word.
//!
//! Level `k` of the tower is a `P¹`-fibration with section divisor `ξ_k`.
//! The relative tangent class of level `i` is read off column `i` of the
//! pairing table: `T_i = Σ_{k ≤ i} ⟨γ_k^∨, γ_i⟩ ξ_k`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rootsys::{Root, RootSystem, RootSystemError, WeylWord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TowerError {
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
    #[error("word is not reduced: γ_{position} = {root} is not positive")]
    NotReduced { position: usize, root: Root },
    #[error("level {index} out of range 1..={len}")]
    LevelOutOfRange { index: usize, len: usize },
    #[error("pairing table must be square and nonempty")]
    MalformedTable,
}

/// Which end of the word the reflections are taken from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GammaConvention {
    /// `γ_k = s_{i_1} ⋯ s_{i_{k−1}}(α_{i_k})`.
    #[default]
    Prefix,
    /// `γ_k = s_{i_N} ⋯ s_{i_{k+1}}(α_{i_k})`.
    Suffix,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct GammaSequence {
    gammas: Vec<Root>,
}

impl GammaSequence {
    pub fn roots(&self) -> &[Root] {
        &self.gammas
    }

    pub fn len(&self) -> usize {
        self.gammas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gammas.is_empty()
    }

    /// `γ_k`, 1-based.
    pub fn get(&self, k: usize) -> &Root {
        &self.gammas[k - 1]
    }
}

pub fn gamma_sequence(rs: &RootSystem, w: &WeylWord) -> Result<GammaSequence, TowerError> {
    gamma_sequence_with(rs, w, GammaConvention::Prefix)
}

pub fn gamma_sequence_with(
    rs: &RootSystem,
    w: &WeylWord,
    convention: GammaConvention,
) -> Result<GammaSequence, TowerError> {
    let gammas = match convention {
        GammaConvention::Prefix => rs.prefix_roots(w)?,
        GammaConvention::Suffix => {
            let n = rs.rank();
            let letters = w.letters();
            let mut out = Vec::with_capacity(letters.len());
            for (k, &l) in letters.iter().enumerate() {
                let alpha = rs.simple_root(l)?;
                let mut rev = letters[k + 1..].to_vec();
                rev.reverse();
                out.push(rs.apply_word(&WeylWord::new(rev), &alpha)?);
                debug_assert_eq!(out[k].coeffs().len(), n);
            }
            out
        }
    };
    // Distinctness follows from positivity for prefix roots of a word.
    if let Some((k, root)) = gammas.iter().enumerate().find(|(_, r)| !r.is_positive()) {
        return Err(TowerError::NotReduced { position: k + 1, root: root.clone() });
    }
    Ok(GammaSequence { gammas })
}

/// `entries[k][i] = ⟨γ_k^∨, γ_i⟩` (0-based storage, 1-based accessors).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct PairingTable {
    entries: Vec<Vec<i64>>,
}

impl TryFrom<Vec<Vec<i64>>> for PairingTable {
    type Error = TowerError;

    fn try_from(entries: Vec<Vec<i64>>) -> Result<Self, TowerError> {
        PairingTable::from_rows(entries)
    }
}

impl From<PairingTable> for Vec<Vec<i64>> {
    fn from(t: PairingTable) -> Self {
        t.entries
    }
}

impl PairingTable {
    pub fn from_rows(entries: Vec<Vec<i64>>) -> Result<Self, TowerError> {
        let n = entries.len();
        if n == 0 || entries.iter().any(|r| r.len() != n) {
            return Err(TowerError::MalformedTable);
        }
        Ok(PairingTable { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entry `(k, i)`, 1-based.
    pub fn entry(&self, k: usize, i: usize) -> i64 {
        self.entries[k - 1][i - 1]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.len();
        (0..n).all(|k| (0..n).all(|i| self.entries[k][i] == self.entries[i][k]))
    }

    /// Positions `(k, i)` (1-based) where the two tables differ.
    pub fn diff(&self, other: &PairingTable) -> Vec<(usize, usize)> {
        if self.len() != other.len() {
            let n = self.len().max(other.len());
            return (1..=n).flat_map(|k| (1..=n).map(move |i| (k, i))).collect();
        }
        let n = self.len();
        (1..=n)
            .flat_map(|k| (1..=n).map(move |i| (k, i)))
            .filter(|&(k, i)| self.entry(k, i) != other.entry(k, i))
            .collect()
    }

    /// Text grid with 1-based row/column headers; `upper_only` blanks the
    /// strictly lower triangle.
    pub fn render(&self, upper_only: bool) -> String {
        let n = self.len();
        let width = self
            .entries
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .chain([n.to_string().len()])
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        out.push_str(&format!("{:>width$} |", ""));
        for i in 1..=n {
            out.push_str(&format!(" {i:>width$}"));
        }
        out.push('\n');
        out.push_str(&"-".repeat((width + 1) * (n + 1) + 1));
        out.push('\n');
        for k in 1..=n {
            out.push_str(&format!("{k:>width$} |"));
            for i in 1..=n {
                if upper_only && i < k {
                    out.push_str(&format!(" {:>width$}", ""));
                } else {
                    out.push_str(&format!(" {:>width$}", self.entry(k, i)));
                }
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for PairingTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

pub fn pairing_table(rs: &RootSystem, g: &GammaSequence) -> Result<PairingTable, TowerError> {
    let entries = g
        .gammas
        .iter()
        .map(|gk| g.gammas.iter().map(|gi| rs.pairing(gk, gi)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    PairingTable::from_rows(entries)
}

/// An integer combination of the section divisors `ξ_1, …, ξ_N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DivisorCombination {
    coeffs: Vec<i64>,
}

impl DivisorCombination {
    pub fn new(coeffs: Vec<i64>) -> Self {
        DivisorCombination { coeffs }
    }

    /// The single divisor `ξ_k` in a tower of height `n`.
    pub fn xi(n: usize, k: usize) -> Self {
        let mut coeffs = vec![0; n];
        coeffs[k - 1] = 1;
        DivisorCombination { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient of `ξ_k`, 1-based.
    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs[k - 1]
    }

    /// Intersection with a curve class given by its numbers `a_k = ᾶ·ξ_k`.
    pub fn dot(&self, a: &[i64]) -> i64 {
        assert_eq!(self.coeffs.len(), a.len(), "length mismatch");
        self.coeffs.iter().zip(a).map(|(c, x)| c * x).sum()
    }

    pub fn sub(&self, other: &DivisorCombination) -> DivisorCombination {
        DivisorCombination::new(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for DivisorCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            match c.unsigned_abs() {
                1 => write!(f, "{sign}ξ{}", k + 1)?,
                m => write!(f, "{sign}{m}ξ{}", k + 1)?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `T_i`: column `i` of the table truncated at row `i`.
pub fn relative_tangent(t: &PairingTable, i: usize) -> Result<DivisorCombination, TowerError> {
    let n = t.len();
    if i == 0 || i > n {
        return Err(TowerError::LevelOutOfRange { index: i, len: n });
    }
    let coeffs = (1..=n).map(|k| if k <= i { t.entry(k, i) } else { 0 }).collect();
    Ok(DivisorCombination { coeffs })
}

/// `Σ_i T_i`.
pub fn tangent_sum(t: &PairingTable) -> DivisorCombination {
    let n = t.len();
    let mut coeffs = vec![0; n];
    for i in 1..=n {
        for k in 1..=i {
            coeffs[k - 1] += t.entry(k, i);
        }
    }
    DivisorCombination { coeffs }
}

/// The pullback `ξ̂ = Σ ξ_i` of the ample generator.
pub fn ample_lift(n: usize) -> DivisorCombination {
    DivisorCombination { coeffs: vec![1; n] }
}
