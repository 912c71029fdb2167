//! Lifted 1-cycle classes on the Bott–Samelson tower and the dimension
//! bookkeeping for spaces of maps from an elliptic curve.
//!
//! A class is recorded by its intersection numbers `a_k = ᾶ·ξ_k`. Its degree
//! downstairs is `ᾶ·ξ̂ = Σ a_k`. When every level satisfies `a·ξ_i ≥ 0` and
//! `a·(T_i − ξ_i) > 0`, the space of lifted maps is built level by level,
//! each fibration adding `a·T_i` to the dimension.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bstower::{self, PairingTable};
use crate::{liftconfig, spinor};

/// Dimensions for degrees 2 and 3 that are stated without derivation; they
/// do not follow from the tower machinery and are carried as annotations.
pub const LOW_DEGREE_ANNOTATIONS: [(i64, i64); 2] = [(2, 19), (3, 25)];

/// Smallest degree for which the bookkeeping argument applies.
pub const STABLE_DEGREE: i64 = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CyclesError {
    #[error("class has {found} entries, table has {expected} levels")]
    LengthMismatch { found: usize, expected: usize },
    #[error("fibration hypothesis fails at level {level}: a·ξ = {xi}, a·(T−ξ) = {residual}")]
    HypothesisFailure { level: usize, xi: i64, residual: i64 },
    #[error("no class of degree {0} lies in A1+ (degree must be at least 3)")]
    EmptyDegree(i64),
    #[error("degree {degree} is below {STABLE_DEGREE}; the bookkeeping does not apply{}",
        annotation.map(|d| format!(" (stated dimension {d}, not derived)")).unwrap_or_default())]
    BelowStableRange { degree: i64, annotation: Option<i64> },
    #[error("degree {0} is below 2")]
    DegreeTooSmall(i64),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Intersection numbers `(ᾶ·ξ_1, …, ᾶ·ξ_N)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycleClass(Vec<i64>);

impl CycleClass {
    pub fn new(a: Vec<i64>) -> Self {
        CycleClass(a)
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(d−2, 1, 1, 0, …, 0)`.
    pub fn extremal(d: i64, n: usize) -> Self {
        let mut a = vec![0; n];
        a[0] = d - 2;
        a[1] = 1;
        a[2] = 1;
        CycleClass(a)
    }
}

impl FromStr for CycleClass {
    type Err = CyclesError;

    fn from_str(s: &str) -> Result<Self, CyclesError> {
        let body = s.trim();
        let body = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')).unwrap_or(body);
        body.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<i64>().map_err(|e| CyclesError::Parse(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>, _>>()
            .map(CycleClass)
    }
}

impl fmt::Display for CycleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

pub fn degree(a: &CycleClass) -> i64 {
    bstower::ample_lift(a.len()).dot(&a.0)
}

/// Nonnegative against every `ξ_i`, strictly positive against `ξ_1, ξ_2, ξ_3`.
pub fn in_a1_plus(a: &CycleClass) -> bool {
    a.len() >= 3 && a.0.iter().all(|&x| x >= 0) && a.0[..3].iter().all(|&x| x > 0)
}

/// The hypotheses of the fibration step at one level.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelCheck {
    pub level: usize,
    /// `a·ξ_i`
    pub xi: i64,
    /// `a·T_i`
    pub tangent: i64,
    /// `a·(T_i − ξ_i)`
    pub residual: i64,
    pub holds: bool,
}

pub fn level_checks(a: &CycleClass, t: &PairingTable) -> Result<Vec<LevelCheck>, CyclesError> {
    let n = t.len();
    if a.len() != n {
        return Err(CyclesError::LengthMismatch { found: a.len(), expected: n });
    }
    Ok((1..=n)
        .map(|i| {
            let ti = bstower::relative_tangent(t, i).expect("level in range");
            let xi = a.0[i - 1];
            let tangent = ti.dot(&a.0);
            let residual = tangent - xi;
            LevelCheck { level: i, xi, tangent, residual, holds: xi >= 0 && residual > 0 }
        })
        .collect())
}

/// Folds the fibration recursion from the point upward:
/// `dim_i = dim_{i−1} + a·T_i`, checking the hypotheses at every level.
pub fn mor_dimension(a: &CycleClass, t: &PairingTable) -> Result<i64, CyclesError> {
    let mut dim = 0;
    for c in level_checks(a, t)? {
        if !c.holds {
            return Err(CyclesError::HypothesisFailure { level: c.level, xi: c.xi, residual: c.residual });
        }
        dim += c.tangent;
    }
    Ok(dim)
}

/// `c_1 − c_k` where `c = Σ T_i`; for the standard table this is
/// `(0,1,2,2,3,3,4,4,5,6)` and `a·ΣT = 8·deg(a) − penalty·a`.
pub fn penalty_weights(t: &PairingTable) -> Vec<i64> {
    let c = bstower::tangent_sum(t);
    let top = c.coeff(1);
    c.coeffs().iter().map(|x| top - x).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionReport {
    pub degree: i64,
    pub class: CycleClass,
    pub dimension: Option<i64>,
    /// Per-`ξ_i` penalty `(c_1 − c_i)·a_i` relative to `c_1·d`.
    pub penalties: Vec<i64>,
    pub in_a1_plus: bool,
    pub levels: Vec<LevelCheck>,
    pub failing_level: Option<usize>,
}

pub fn dimension_report(a: &CycleClass, t: &PairingTable) -> Result<DimensionReport, CyclesError> {
    let levels = level_checks(a, t)?;
    let failing_level = levels.iter().find(|c| !c.holds).map(|c| c.level);
    let dimension = mor_dimension(a, t).ok();
    let penalties = penalty_weights(t).iter().zip(&a.0).map(|(w, x)| w * x).collect();
    Ok(DimensionReport {
        degree: degree(a),
        class: a.clone(),
        dimension,
        penalties,
        in_a1_plus: in_a1_plus(a),
        levels,
        failing_level,
    })
}

/// Weak compositions of `total` into `parts` parts, in lexicographic order.
#[derive(Debug, Clone)]
pub struct Compositions {
    current: Option<Vec<i64>>,
}

impl Compositions {
    pub fn new(total: i64, parts: usize) -> Self {
        let current = if total < 0 || (parts == 0 && total != 0) {
            None
        } else if parts == 0 {
            Some(Vec::new())
        } else {
            let mut first = vec![0; parts];
            first[parts - 1] = total;
            Some(first)
        };
        Compositions { current }
    }
}

impl Iterator for Compositions {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        let out = self.current.take()?;
        let n = out.len();
        let mut next = out.clone();
        let mut suffix = next.last().copied().unwrap_or(0);
        for j in (0..n.saturating_sub(1)).rev() {
            if suffix > 0 {
                next[j] += 1;
                for x in &mut next[j + 1..] {
                    *x = 0;
                }
                next[n - 1] = suffix - 1;
                self.current = Some(next);
                break;
            }
            suffix += next[j];
        }
        Some(out)
    }
}

/// All classes of A1+ with `n` levels and degree `d`, lexicographically.
pub fn enumerate_classes_len(d: i64, n: usize) -> impl Iterator<Item = CycleClass> {
    let floor = if n >= 3 { d - 3 } else { -1 };
    Compositions::new(floor, n).map(|mut b| {
        for x in &mut b[..3] {
            *x += 1;
        }
        CycleClass(b)
    })
}

/// All classes of A1+ of degree `d` on the ten-level tower; empty for `d < 3`.
pub fn enumerate_classes(d: i64) -> impl Iterator<Item = CycleClass> {
    enumerate_classes_len(d, spinor::REDUCED_WORD.len())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaxDimension {
    pub degree: i64,
    pub class: CycleClass,
    pub dimension: i64,
    pub unique: bool,
    /// Number of classes of A1+ in this degree.
    pub count: usize,
    /// Largest dimension attained by any other class.
    pub runner_up: Option<i64>,
}

pub fn max_dimension_class(d: i64, t: &PairingTable) -> Result<MaxDimension, CyclesError> {
    let mut best: Option<(CycleClass, i64)> = None;
    let mut ties = 0usize;
    let mut runner_up: Option<i64> = None;
    let mut count = 0;
    for a in enumerate_classes_len(d, t.len()) {
        count += 1;
        let Ok(dim) = mor_dimension(&a, t) else { continue };
        match &best {
            Some((_, b)) if dim < *b => runner_up = runner_up.max(Some(dim)),
            Some((_, b)) if dim == *b => {
                ties += 1;
                runner_up = Some(dim);
            }
            _ => {
                runner_up = runner_up.max(best.as_ref().map(|(_, b)| *b));
                best = Some((a, dim));
                ties = 0;
            }
        }
    }
    let (class, dimension) = best.ok_or(CyclesError::EmptyDegree(d))?;
    Ok(MaxDimension { degree: d, class, dimension, unique: ties == 0, count, runner_up })
}

/// Maximal-dimension data for every degree in the range, computed in
/// parallel and returned in degree order.
pub fn max_dimension_by_degree(
    degrees: RangeInclusive<i64>,
    t: &PairingTable,
) -> Result<Vec<MaxDimension>, CyclesError> {
    degrees.collect::<Vec<_>>().into_par_iter().map(|d| max_dimension_class(d, t)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TotalSpaceDimension {
    pub degree: i64,
    /// Dimension of the family of lifts of the extremal class for one flag.
    pub lifted_maximum: i64,
    pub extremal_class: CycleClass,
    /// `dim Stab(W5)/B`.
    pub flag_variety: i64,
    /// Dimension of the adapted flags for one map.
    pub fiber_of_p: i64,
    pub total: i64,
}

/// `dim Stab(W5)/B = |Φ⁺| − dim G/P`.
pub fn flag_variety_dimension() -> i64 {
    let rs = spinor::root_system();
    let cod = rs.coset_dimension(spinor::PARABOLIC_NODE).expect("node in range");
    (rs.positive_roots().len() - cod) as i64
}

pub fn total_space_dimension(d: i64) -> Result<TotalSpaceDimension, CyclesError> {
    if d < STABLE_DEGREE {
        let annotation = LOW_DEGREE_ANNOTATIONS.iter().find(|(k, _)| *k == d).map(|(_, v)| *v);
        return Err(CyclesError::BelowStableRange { degree: d, annotation });
    }
    let t = spinor::standard_table();
    let best = max_dimension_class(d, &t)?;
    let flag_variety = flag_variety_dimension();
    let fiber_of_p = liftconfig::flag_family_dimension().total as i64;
    Ok(TotalSpaceDimension {
        degree: d,
        lifted_maximum: best.dimension,
        extremal_class: best.class,
        flag_variety,
        fiber_of_p,
        total: best.dimension + flag_variety - fiber_of_p,
    })
}

/// `dim Mor_d(C, P^n) = (n+1)d` for an elliptic curve `C`.
fn maps_to_projective_space(n: i64, d: i64) -> i64 {
    (n + 1) * d
}

fn grassmannian_dimension(k: i64, m: i64) -> i64 {
    k * (m - k)
}

/// `h⁰(C, f^*Λ²T(−1))` for `f` of degree `d` into a plane of `P⁴`, where
/// `f^*T(−1) = O² ⊕ E` and `Λ²(O² ⊕ E) = O ⊕ O²⊗E ⊕ Λ²E`. On an elliptic
/// curve `h⁰(E) = d` unless `E` has a trivial summand (image in a line),
/// in which case `h⁰(E) = d + 1`.
fn section_space_dimension(d: i64, image_in_line: bool) -> i64 {
    let h0_trivial = 1;
    let h0_e = if image_in_line { d + 1 } else { d };
    let h0_det = d;
    h0_trivial + 2 * h0_e + h0_det
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlanarBound {
    pub degree: i64,
    /// Maps to `P⁴` with image in some plane.
    pub planar_image_family: i64,
    /// Maps to `P⁴` with image in some line.
    pub line_image_family: i64,
    /// Fiber dimension over a planar map not in a line.
    pub plane_fiber: i64,
    /// Fiber dimension over a map into a line.
    pub line_fiber: i64,
    pub planar_total: i64,
    pub line_total: i64,
    pub bound: i64,
    /// `8d` exceeds the bound.
    pub below_main_component: bool,
}

pub fn planar_locus_bound(d: i64) -> Result<PlanarBound, CyclesError> {
    if d < 2 {
        return Err(CyclesError::DegreeTooSmall(d));
    }
    let planar_image_family = maps_to_projective_space(2, d) + grassmannian_dimension(3, 5);
    let line_image_family = maps_to_projective_space(1, d) + grassmannian_dimension(2, 5);
    let plane_fiber = section_space_dimension(d, false);
    let line_fiber = section_space_dimension(d, true);
    let planar_total = planar_image_family + plane_fiber;
    let line_total = line_image_family + line_fiber;
    let bound = planar_total.max(line_total);
    Ok(PlanarBound {
        degree: d,
        planar_image_family,
        line_image_family,
        plane_fiber,
        line_fiber,
        planar_total,
        line_total,
        bound,
        below_main_component: 8 * d > bound,
    })
}
