//! Configurations of the Bott–Samelson variety attached to the spinor
//! variety: the ten incidence conditions, the lift of a point along a flag,
//! the section divisors and their Schubert images, and the flag adapted to
//! four marked points.

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::isogeom::{Family, GeometryError, MaximalIsotropic, QuadraticSpace, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiftError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("malformed flag: {0}")]
    MalformedFlag(&'static str),
    #[error("malformed configuration: {0}")]
    MalformedConfiguration(String),
    #[error("point is not in general position: {step} has dimension {found}, expected {expected}")]
    NotGeneric { step: &'static str, expected: usize, found: usize },
    #[error("invalid tangent plane: {0}")]
    InvalidTangent(&'static str),
    #[error("general-position hypothesis fails: {0}")]
    Hypothesis(&'static str),
}

pub type Result<T, E = LiftError> = std::result::Result<T, E>;

/// A complete isotropic flag `W1 ⊂ W2 ⊂ W3 ⊂ W4 ∩ W5`, with `W4` of family
/// two and `W5` of family one meeting in a 4-space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawFlag")]
pub struct IsotropicFlag {
    w1: Subspace,
    w2: Subspace,
    w3: Subspace,
    w4: MaximalIsotropic,
    w5: MaximalIsotropic,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFlag {
    w1: Subspace,
    w2: Subspace,
    w3: Subspace,
    w4: MaximalIsotropic,
    w5: MaximalIsotropic,
}

impl TryFrom<RawFlag> for IsotropicFlag {
    type Error = LiftError;

    fn try_from(r: RawFlag) -> Result<Self> {
        IsotropicFlag::new(r.w1, r.w2, r.w3, r.w4, r.w5)
    }
}

impl IsotropicFlag {
    pub fn new(
        w1: Subspace,
        w2: Subspace,
        w3: Subspace,
        w4: MaximalIsotropic,
        w5: MaximalIsotropic,
    ) -> Result<Self> {
        let qs = QuadraticSpace::for_subspace(w5.space())?;
        if qs.witt_index() != 5 {
            return Err(LiftError::MalformedFlag("ambient dimension must be 10"));
        }
        for s in [&w1, &w2, &w3, w4.space()] {
            if s.modulus() != qs.modulus() || s.ambient() != qs.dim() {
                return Err(LiftError::MalformedFlag("spaces live in different ambients"));
            }
        }
        if (w1.dim(), w2.dim(), w3.dim()) != (1, 2, 3) {
            return Err(LiftError::MalformedFlag("W1, W2, W3 must have dimensions 1, 2, 3"));
        }
        if w4.family() != Family::Two {
            return Err(LiftError::MalformedFlag("W4 must be of family 2"));
        }
        if w5.family() != Family::One {
            return Err(LiftError::MalformedFlag("W5 must be of family 1"));
        }
        if !(w2.contains(&w1) && w3.contains(&w2) && w4.space().contains(&w3) && w5.space().contains(&w3)) {
            return Err(LiftError::MalformedFlag("containments W1 ⊂ W2 ⊂ W3 ⊂ W4 ∩ W5 fail"));
        }
        if w4.space().intersect(w5.space())?.dim() != 4 {
            return Err(LiftError::MalformedFlag("W4 ∩ W5 must have dimension 4"));
        }
        Ok(IsotropicFlag { w1, w2, w3, w4, w5 })
    }

    pub fn w1(&self) -> &Subspace {
        &self.w1
    }

    pub fn w2(&self) -> &Subspace {
        &self.w2
    }

    pub fn w3(&self) -> &Subspace {
        &self.w3
    }

    pub fn w4(&self) -> &MaximalIsotropic {
        &self.w4
    }

    pub fn w5(&self) -> &MaximalIsotropic {
        &self.w5
    }

    /// `W4 ∩ W5`.
    pub fn u4(&self) -> Subspace {
        self.w4.space().intersect(self.w5.space()).expect("validated ambient")
    }

    pub fn quadratic_space(&self) -> QuadraticSpace {
        QuadraticSpace::for_subspace(self.w5.space()).expect("validated ambient")
    }
}

/// A uniformly random flag of the 10-dimensional space.
pub fn random_flag<R: Rng + ?Sized>(qs: &QuadraticSpace, rng: &mut R) -> IsotropicFlag {
    let w5 = qs.random_maximal_isotropic(Family::One, rng);
    let u4 = w5.space().random_subspace(4, rng).expect("dim 4 ≤ 5");
    let w3 = u4.random_subspace(3, rng).expect("dim 3 ≤ 4");
    let w2 = w3.random_subspace(2, rng).expect("dim 2 ≤ 3");
    let w1 = w2.random_subspace(1, rng).expect("dim 1 ≤ 2");
    let w4 = qs.complete_with_family(&u4, Family::Two).expect("isotropic 4-space");
    IsotropicFlag::new(w1, w2, w3, w4, w5).expect("constructed consistently")
}

/// A point of the configuration variety. Field order follows the tower.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawConfiguration")]
pub struct Configuration {
    pub v4: MaximalIsotropic,
    pub v3: Subspace,
    pub v2: Subspace,
    pub v5: MaximalIsotropic,
    pub v1: Subspace,
    pub v3p: Subspace,
    pub v2p: Subspace,
    pub v4p: MaximalIsotropic,
    pub v3pp: Subspace,
    pub v5p: MaximalIsotropic,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfiguration {
    v4: MaximalIsotropic,
    v3: Subspace,
    v2: Subspace,
    v5: MaximalIsotropic,
    v1: Subspace,
    v3p: Subspace,
    v2p: Subspace,
    v4p: MaximalIsotropic,
    v3pp: Subspace,
    v5p: MaximalIsotropic,
}

impl TryFrom<RawConfiguration> for Configuration {
    type Error = LiftError;

    fn try_from(r: RawConfiguration) -> Result<Self> {
        let c = Configuration {
            v4: r.v4,
            v3: r.v3,
            v2: r.v2,
            v5: r.v5,
            v1: r.v1,
            v3p: r.v3p,
            v2p: r.v2p,
            v4p: r.v4p,
            v3pp: r.v3pp,
            v5p: r.v5p,
        };
        c.check_shape()?;
        Ok(c)
    }
}

impl Configuration {
    /// The configuration lying on all ten sections.
    pub fn base(flag: &IsotropicFlag) -> Configuration {
        Configuration {
            v4: flag.w4.clone(),
            v3: flag.w3.clone(),
            v2: flag.w2.clone(),
            v5: flag.w5.clone(),
            v1: flag.w1.clone(),
            v3p: flag.w3.clone(),
            v2p: flag.w2.clone(),
            v4p: flag.w4.clone(),
            v3pp: flag.w3.clone(),
            v5p: flag.w5.clone(),
        }
    }

    /// Dimension, family and isotropy invariants of the fields.
    pub fn check_shape(&self) -> Result<()> {
        let qs = QuadraticSpace::for_subspace(self.v5p.space())?;
        let small = [
            ("V1", &self.v1, 1),
            ("V2", &self.v2, 2),
            ("V2'", &self.v2p, 2),
            ("V3", &self.v3, 3),
            ("V3'", &self.v3p, 3),
            ("V3''", &self.v3pp, 3),
        ];
        let maximal = [
            ("V4", &self.v4, Family::Two),
            ("V4'", &self.v4p, Family::Two),
            ("V5", &self.v5, Family::One),
            ("V5'", &self.v5p, Family::One),
        ];
        let bad = |msg: String| Err(LiftError::MalformedConfiguration(msg));
        if qs.witt_index() != 5 {
            return bad("ambient dimension must be 10".into());
        }
        for (name, s, d) in small {
            if s.modulus() != qs.modulus() || s.ambient() != qs.dim() {
                return bad(format!("{name} lives in a different ambient"));
            }
            if s.dim() != d {
                return bad(format!("{name} has dimension {}, expected {d}", s.dim()));
            }
            if !qs.is_totally_isotropic(s) {
                return bad(format!("{name} is not totally isotropic"));
            }
        }
        for (name, m, fam) in maximal {
            if m.space().modulus() != qs.modulus() || m.space().ambient() != qs.dim() {
                return bad(format!("{name} lives in a different ambient"));
            }
            if m.family() != fam {
                return bad(format!("{name} has family {}, expected {fam}", m.family()));
            }
        }
        Ok(())
    }
}

/// One containment of the ten incidence conditions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Incidence {
    pub condition: usize,
    pub name: &'static str,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConfigurationReport {
    pub incidences: Vec<Incidence>,
}

impl ConfigurationReport {
    pub fn holds(&self) -> bool {
        self.incidences.iter().all(|i| i.holds)
    }

    pub fn failures(&self) -> Vec<&Incidence> {
        self.incidences.iter().filter(|i| !i.holds).collect()
    }

    /// The conditions (1 to 10) with at least one failing containment.
    pub fn failed_conditions(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.failures().iter().map(|i| i.condition).collect();
        out.dedup();
        out
    }
}

/// Checks the ten incidence conditions of `c` against `flag`.
pub fn validate_configuration(c: &Configuration, flag: &IsotropicFlag) -> Result<ConfigurationReport> {
    c.check_shape()?;
    if c.v5p.space().modulus() != flag.w5.space().modulus() {
        return Err(LiftError::MalformedConfiguration("configuration and flag use different fields".into()));
    }
    let (w1, w2, w3, w5) = (&flag.w1, &flag.w2, &flag.w3, flag.w5.space());
    let (v4, v5, v4p, v5p) = (c.v4.space(), c.v5.space(), c.v4p.space(), c.v5p.space());
    let checks: [(usize, &'static str, &Subspace, &Subspace); 18] = [
        (1, "W₃⊂Ṽ₄", w3, v4),
        (2, "W₂⊂Ṽ₃", w2, &c.v3),
        (2, "Ṽ₃⊂W₅", &c.v3, w5),
        (2, "Ṽ₃⊂Ṽ₄", &c.v3, v4),
        (3, "W₁⊂Ṽ₂", w1, &c.v2),
        (3, "Ṽ₂⊂Ṽ₃", &c.v2, &c.v3),
        (4, "Ṽ₃⊂Ṽ₅", &c.v3, v5),
        (5, "Ṽ₁⊂Ṽ₂", &c.v1, &c.v2),
        (6, "Ṽ₂⊂Ṽ₃′", &c.v2, &c.v3p),
        (6, "Ṽ₃′⊂Ṽ₅", &c.v3p, v5),
        (6, "Ṽ₃′⊂Ṽ₄", &c.v3p, v4),
        (7, "Ṽ₁⊂Ṽ₂′", &c.v1, &c.v2p),
        (7, "Ṽ₂′⊂Ṽ₃′", &c.v2p, &c.v3p),
        (8, "Ṽ₃′⊂Ṽ₄′", &c.v3p, v4p),
        (9, "Ṽ₂′⊂Ṽ₃″", &c.v2p, &c.v3pp),
        (9, "Ṽ₃″⊂Ṽ₅", &c.v3pp, v5),
        (9, "Ṽ₃″⊂Ṽ₄′", &c.v3pp, v4p),
        (10, "Ṽ₃″⊂Ṽ₅′", &c.v3pp, v5p),
    ];
    let incidences = checks
        .iter()
        .map(|&(condition, name, small, big)| Incidence { condition, name, holds: big.contains(small) })
        .collect();
    Ok(ConfigurationReport { incidences })
}

fn expect_dim(step: &'static str, s: Subspace, expected: usize) -> Result<Subspace> {
    if s.dim() == expected {
        Ok(s)
    } else {
        Err(LiftError::NotGeneric { step, expected, found: s.dim() })
    }
}

/// Lifts a family-one `v` in general position with respect to `flag`.
pub fn lift_point(v: &MaximalIsotropic, flag: &IsotropicFlag) -> Result<Configuration> {
    lift_with_tangent(v, flag, None)
}

/// Lift along a curve through `v` whose projection to `W5` has tangent
/// plane `tangent` at `v ∩ W5`. Where `Ṽ₁ + W_k` collapses because
/// `Ṽ₁ ⊂ W_k`, the limit `tangent + W_k` is used instead.
pub fn lift_with_tangent(
    v: &MaximalIsotropic,
    flag: &IsotropicFlag,
    tangent: Option<&Subspace>,
) -> Result<Configuration> {
    let qs = flag.quadratic_space();
    if v.family() != Family::One {
        return Err(GeometryError::FamilyMismatch { expected: Family::One, found: v.family() }.into());
    }
    let vs = v.space();
    if vs.modulus() != qs.modulus() || vs.ambient() != qs.dim() {
        return Err(GeometryError::FieldMismatch(qs.modulus(), vs.modulus()).into());
    }
    let w5 = flag.w5.space();
    let v1 = expect_dim("Ṽ₁=V∩W₅", vs.intersect(w5)?, 1)?;
    if let Some(t) = tangent {
        if t.dim() != 2 {
            return Err(LiftError::InvalidTangent("tangent must be a plane"));
        }
        if !w5.contains(t) {
            return Err(LiftError::InvalidTangent("tangent must lie in W5"));
        }
        if !t.contains(&v1) {
            return Err(LiftError::InvalidTangent("tangent must contain V ∩ W5"));
        }
    }
    // Ṽ₁ + W_k, or its limit along the tangent when Ṽ₁ ⊂ W_k.
    let join = |wk: &Subspace| -> Result<Subspace> {
        match tangent {
            Some(t) if wk.contains(&v1) => Ok(t.sum(wk)?),
            _ => Ok(v1.sum(wk)?),
        }
    };
    let v2 = expect_dim("Ṽ₂=Ṽ₁+W₁", join(&flag.w1)?, 2)?;
    let v3 = expect_dim("Ṽ₃=Ṽ₁+W₂", join(&flag.w2)?, 3)?;
    let u = expect_dim("Ṽ₄⊃Ṽ₁+W₃", join(&flag.w3)?, 4)?;
    let v4 = qs.complete_with_family(&u, Family::Two)?;
    let v2p = expect_dim("Ṽ₂′=V∩Ṽ₄", vs.intersect(v4.space())?, 2)?;
    let v3p = expect_dim("Ṽ₃′=Ṽ₂′+Ṽ₂", v2p.sum(&v2)?, 3)?;
    let u = expect_dim("Ṽ₅⊃Ṽ₂′+Ṽ₃", v2p.sum(&v3)?, 4)?;
    let v5 = qs.complete_with_family(&u, Family::One)?;
    let v3pp = expect_dim("Ṽ₃″=V∩Ṽ₅", vs.intersect(v5.space())?, 3)?;
    let u = expect_dim("Ṽ₄′⊃Ṽ₃′+Ṽ₃″", v3p.sum(&v3pp)?, 4)?;
    let v4p = qs.complete_with_family(&u, Family::Two)?;
    Ok(Configuration { v4, v3, v2, v5, v1, v3p, v2p, v4p, v3pp, v5p: v.clone() })
}

/// Ten booleans indexed by `ξ₁ … ξ₁₀`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MembershipVector(pub [bool; 10]);

impl MembershipVector {
    /// From the 1-based indices that are set.
    pub fn from_indices(indices: &[usize]) -> Self {
        let mut m = [false; 10];
        for &i in indices {
            m[i - 1] = true;
        }
        MembershipVector(m)
    }

    /// Membership in `ξ_i`, 1-based.
    pub fn get(&self, i: usize) -> bool {
        self.0[i - 1]
    }

    pub fn indices(&self) -> Vec<usize> {
        (1..=10).filter(|&i| self.get(i)).collect()
    }

    pub fn is_empty(&self) -> bool {
        !self.0.iter().any(|&b| b)
    }

    /// Every index set here is also set in `other`.
    pub fn is_subset(&self, other: &MembershipVector) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| !a || b)
    }
}

impl fmt::Display for MembershipVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices().iter().map(|i| format!("ξ{i}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Which section divisors the configuration lies on.
pub fn section_membership(c: &Configuration, flag: &IsotropicFlag) -> MembershipVector {
    MembershipVector([
        c.v4 == flag.w4,
        c.v3 == flag.w3,
        c.v2 == flag.w2,
        c.v5 == flag.w5,
        c.v1 == flag.w1,
        c.v3p == c.v3,
        c.v2p == c.v2,
        c.v4p == c.v4,
        c.v3pp == c.v3p,
        c.v5p == c.v5,
    ])
}

/// Which Schubert images `π(ξ_i)` contain `v`.
pub fn schubert_membership(v: &MaximalIsotropic, flag: &IsotropicFlag) -> Result<MembershipVector> {
    let meet = |w: &Subspace| -> Result<usize> { Ok(v.space().intersect(w)?.dim()) };
    let m1 = meet(&flag.w1)?;
    let m2 = meet(&flag.w2)?;
    let m3 = meet(&flag.w3)?;
    let m4 = meet(flag.w4.space())?;
    let m5 = meet(flag.w5.space())?;
    Ok(MembershipVector([
        m4 >= 1,
        m3 >= 1,
        m2 >= 1,
        m5 >= 3,
        m1 >= 1,
        m2 >= 1 && m5 >= 3,
        m1 >= 1 && m5 >= 3,
        m3 >= 2,
        m1 >= 1 && m3 >= 2,
        m2 >= 2,
    ]))
}

/// Marked data in `W5`: lines `L1..L4` (images of four points of a curve)
/// and tangent planes `Θ1 ⊃ L1`, `Θ2 ⊃ L2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MarkedLines {
    pub lines: [Subspace; 4],
    pub theta1: Subspace,
    pub theta2: Subspace,
}

impl MarkedLines {
    /// `Π = L1 + L2 + L3`.
    pub fn pi(&self) -> Subspace {
        let [l1, l2, l3, _] = &self.lines;
        l1.sum(l2).and_then(|s| s.sum(l3)).expect("common ambient")
    }

    /// `Π1 = Θ1 + L2`.
    pub fn pi1(&self) -> Subspace {
        self.theta1.sum(&self.lines[1]).expect("common ambient")
    }

    /// `Π2 = Θ2 + L1`.
    pub fn pi2(&self) -> Subspace {
        self.theta2.sum(&self.lines[0]).expect("common ambient")
    }
}

/// The general-position hypotheses on the marked data, in the order they
/// are checked, each returning whether it holds.
pub fn marked_hypotheses(w5: &MaximalIsotropic, m: &MarkedLines) -> Result<Vec<(&'static str, bool)>> {
    let w = w5.space();
    for l in &m.lines {
        if l.modulus() != w.modulus() || l.ambient() != w.ambient() {
            return Err(GeometryError::FieldMismatch(w.modulus(), l.modulus()).into());
        }
    }
    for t in [&m.theta1, &m.theta2] {
        if t.modulus() != w.modulus() || t.ambient() != w.ambient() {
            return Err(GeometryError::FieldMismatch(w.modulus(), t.modulus()).into());
        }
    }
    let [l1, l2, l3, l4] = &m.lines;
    let lines_ok = m.lines.iter().all(|l| l.dim() == 1 && w.contains(l));
    let t1_ok = m.theta1.dim() == 2 && w.contains(&m.theta1) && m.theta1.contains(l1);
    let t2_ok = m.theta2.dim() == 2 && w.contains(&m.theta2) && m.theta2.contains(l2);
    let mut out = vec![
        ("L1..L4 are lines in W5", lines_ok),
        ("Θ1 is a plane in W5 through L1", t1_ok),
        ("Θ2 is a plane in W5 through L2", t2_ok),
    ];
    if !(lines_ok && t1_ok && t2_ok) {
        return Ok(out);
    }
    let (pi, pi1, pi2) = (m.pi(), m.pi1(), m.pi2());
    out.extend([
        ("L2 ⊄ Θ1", !m.theta1.contains(l2)),
        ("L1 ⊄ Θ2", !m.theta2.contains(l1)),
        ("L3 ⊄ Π1 = Θ1+L2", !pi1.contains(l3)),
        ("L3 ⊄ Π2 = Θ2+L1", !pi2.contains(l3)),
        ("L4 ⊄ Π = L1+L2+L3", !pi.contains(l4)),
        ("L4 ⊄ Π1", !pi1.contains(l4)),
        ("L4 ⊄ Π2", !pi2.contains(l4)),
    ]);
    Ok(out)
}

/// First subspace `H` with `a ⊂ H ⊂ b`, `dim H = dim a + 1`, containing
/// none of `avoid`, in a fixed enumeration order.
fn choose_between(a: &Subspace, b: &Subspace, avoid: &[&Subspace]) -> Option<Subspace> {
    let comp = b.complement_basis(a).ok()?;
    let [x, y] = <[Vec<u32>; 2]>::try_from(comp).ok()?;
    let f = a.field();
    let candidates = (0..f.modulus())
        .map(|t| x.iter().zip(&y).map(|(&xi, &yi)| f.add(xi, f.mul(t, yi))).collect::<Vec<u32>>())
        .chain(std::iter::once(y.clone()));
    candidates
        .map(|v| a.sum(&Subspace::span(f, a.ambient(), [v])).expect("common ambient"))
        .find(|h| avoid.iter().all(|s| !h.contains(s)))
}

/// The flag adapted to the marked data: `U4 ⊃ Π` avoiding `L4, Θ1, Θ2`;
/// `W3 ⊃ L1+L2` in `U4` avoiding `L3`; `W2 ⊃ L1` in `W3` avoiding `L2`;
/// a line `W1 ≠ L1` in `W2`; and `W4` the family-two space through `U4`.
pub fn build_adapted_flag(w5: &MaximalIsotropic, m: &MarkedLines) -> Result<IsotropicFlag> {
    if w5.family() != Family::One {
        return Err(LiftError::MalformedFlag("W5 must be of family 1"));
    }
    if let Some((name, _)) = marked_hypotheses(w5, m)?.into_iter().find(|(_, ok)| !ok) {
        return Err(LiftError::Hypothesis(name));
    }
    let qs = QuadraticSpace::for_subspace(w5.space())?;
    let [l1, l2, l3, l4] = &m.lines;
    let pi = m.pi();
    let u4 = choose_between(&pi, w5.space(), &[l4, &m.theta1, &m.theta2])
        .ok_or(LiftError::Hypothesis("a 4-space U4 ⊃ Π avoiding L4, Θ1, Θ2 exists"))?;
    let l12 = l1.sum(l2)?;
    let w3 = choose_between(&l12, &u4, &[l3])
        .ok_or(LiftError::Hypothesis("a 3-space W3 ⊃ L1+L2 avoiding L3 exists"))?;
    let w2 =
        choose_between(l1, &w3, &[l2]).ok_or(LiftError::Hypothesis("a plane W2 ⊃ L1 avoiding L2 exists"))?;
    let zero = Subspace::zero(qs.field(), qs.dim());
    let w1 = choose_between(&zero, &w2, &[l1]).ok_or(LiftError::Hypothesis("a line W1 ≠ L1 exists in W2"))?;
    let w4 = qs.complete_with_family(&u4, Family::Two)?;
    IsotropicFlag::new(w1, w2, w3, w4, w5.clone())
}

/// The non-incidences an adapted flag must satisfy, each with its status.
pub fn adapted_flag_properties(flag: &IsotropicFlag, m: &MarkedLines) -> Vec<(&'static str, bool)> {
    let u4 = flag.u4();
    let [l1, l2, l3, l4] = &m.lines;
    vec![
        ("L1 ⊂ U4", u4.contains(l1)),
        ("L2 ⊂ U4", u4.contains(l2)),
        ("L3 ⊂ U4", u4.contains(l3)),
        ("L4 ⊄ U4", !u4.contains(l4)),
        ("Θ1 ⊄ U4", !u4.contains(&m.theta1)),
        ("Θ2 ⊄ U4", !u4.contains(&m.theta2)),
        ("L1 ⊂ W3", flag.w3.contains(l1)),
        ("L2 ⊂ W3", flag.w3.contains(l2)),
        ("L3 ⊄ W3", !flag.w3.contains(l3)),
        ("L1 ⊂ W2", flag.w2.contains(l1)),
        ("L2 ⊄ W2", !flag.w2.contains(l2)),
        ("W1 ≠ L1", flag.w1 != *l1),
    ]
}

/// Random marked data in `w5`: four random lines and random tangent planes.
pub fn random_marked_lines<R: Rng + ?Sized>(w5: &MaximalIsotropic, rng: &mut R) -> MarkedLines {
    let w = w5.space();
    let lines = std::array::from_fn(|_| w.random_subspace(1, rng).expect("dim 1 ≤ 5"));
    let theta = |l: &Subspace, rng: &mut R| loop {
        let t = l.sum(&w.random_subspace(1, rng).expect("dim 1 ≤ 5")).expect("common ambient");
        if t.dim() == 2 {
            break t;
        }
    };
    let theta1 = theta(&lines[0], rng);
    let theta2 = theta(&lines[1], rng);
    MarkedLines { lines, theta1, theta2 }
}

/// A uniform family-one `V` with `V ∩ W5 = line` exactly.
pub fn random_point_through<R: Rng + ?Sized>(
    qs: &QuadraticSpace,
    w5: &MaximalIsotropic,
    line: &Subspace,
    rng: &mut R,
) -> Result<MaximalIsotropic> {
    if line.dim() != 1 || !w5.space().contains(line) {
        return Err(LiftError::InvalidTangent("marked point must be a line in W5"));
    }
    // The open orbit is dense; at tiny fields give up rather than spin.
    for _ in 0..1000 {
        let v = qs.random_maximal_containing(line, Family::One, rng)?;
        if v.space().intersect(w5.space())? == *line {
            return Ok(v);
        }
    }
    Err(LiftError::NotGeneric { step: "V∩W₅", expected: 1, found: 3 })
}

/// The four marked points of the adapted-flag argument and their lifts.
#[derive(Debug, Clone, Serialize)]
pub struct LemmaScenario {
    pub marked: MarkedLines,
    pub flag: IsotropicFlag,
    /// Index 0 is `x1`, through `L1`, and so on.
    pub points: [MaximalIsotropic; 4],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaOutcome {
    pub label: &'static str,
    pub section: MembershipVector,
    pub schubert: MembershipVector,
}

/// Expected `(label, sections, Schubert images)` for `x3, x2, x1, x4`.
pub const LEMMA_EXPECTATIONS: [(&str, &[usize], &[usize]); 4] =
    [("x3", &[1], &[1]), ("x2", &[2], &[1, 2]), ("x1", &[3], &[1, 2, 3]), ("x4", &[], &[])];

/// Draws a `W5`, marked data satisfying the hypotheses (retrying at most
/// `max_attempts` times), the adapted flag and the four points.
pub fn random_lemma_scenario<R: Rng + ?Sized>(
    qs: &QuadraticSpace,
    max_attempts: usize,
    rng: &mut R,
) -> Result<(LemmaScenario, usize)> {
    let w5 = qs.random_maximal_isotropic(Family::One, rng);
    let mut last = LiftError::Hypothesis("no attempts made");
    for attempt in 1..=max_attempts {
        let marked = random_marked_lines(&w5, rng);
        let flag = match build_adapted_flag(&w5, &marked) {
            Ok(f) => f,
            Err(e @ LiftError::Hypothesis(_)) => {
                last = e;
                continue;
            }
            Err(e) => return Err(e),
        };
        let mut pts = Vec::with_capacity(4);
        for l in &marked.lines {
            pts.push(random_point_through(qs, &w5, l, rng)?);
        }
        let points = <[MaximalIsotropic; 4]>::try_from(pts).expect("four points");
        return Ok((LemmaScenario { marked, flag, points }, attempt));
    }
    Err(last)
}

impl LemmaScenario {
    /// Lifts `x3` and `x4` directly and `x2`, `x1` along their tangents, in
    /// the order of [`LEMMA_EXPECTATIONS`].
    pub fn outcomes(&self) -> Result<Vec<LemmaOutcome>> {
        let [x1, x2, x3, x4] = &self.points;
        let cases: [(&'static str, &MaximalIsotropic, Option<&Subspace>); 4] = [
            ("x3", x3, None),
            ("x2", x2, Some(&self.marked.theta2)),
            ("x1", x1, Some(&self.marked.theta1)),
            ("x4", x4, None),
        ];
        cases
            .iter()
            .map(|&(label, v, tangent)| {
                let c = lift_with_tangent(v, &self.flag, tangent)?;
                Ok(LemmaOutcome {
                    label,
                    section: section_membership(&c, &self.flag),
                    schubert: schubert_membership(v, &self.flag)?,
                })
            })
            .collect()
    }
}

/// One summand of the dimension of the family of adapted flags.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlagChoice {
    pub choice: &'static str,
    pub dimension: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlagFamilyDimension {
    pub breakdown: Vec<FlagChoice>,
    pub total: usize,
}

/// Dimension of the family of flags completing `W5` adapted to a curve:
/// three marked points, then one parameter for each of `W1..W4`.
pub fn flag_family_dimension() -> FlagFamilyDimension {
    let breakdown = vec![
        FlagChoice { choice: "points x1, x2, x3", dimension: 3 },
        FlagChoice { choice: "W1", dimension: 1 },
        FlagChoice { choice: "W2", dimension: 1 },
        FlagChoice { choice: "W3", dimension: 1 },
        FlagChoice { choice: "W4", dimension: 1 },
    ];
    let total = breakdown.iter().map(|c| c.dimension).sum();
    FlagFamilyDimension { breakdown, total }
}
