//! Finite-field model of the split quadratic space of dimension `2n`
//! (default `n = 5`): isotropic subspaces, the two families of maximal
//! isotropics, sampling, enumeration and the orbit types against a fixed
//! maximal isotropic.

pub mod field;
pub mod linalg;
pub mod subspace;

use std::fmt;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use field::PrimeField;
pub use subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("{0} is not a supported prime")]
    NotPrime(u64),
    #[error("unsupported ambient dimension {0}")]
    AmbientDimension(usize),
    #[error("subspaces live over different fields (p={0} and p={1})")]
    FieldMismatch(u32, u32),
    #[error("expected dimension {expected}, found {found}")]
    WrongDimension { expected: usize, found: usize },
    #[error("entry {entry} is not reduced mod {p}")]
    EntryOutOfRange { entry: u64, p: u64 },
    #[error("subspace is not contained in the expected ambient subspace")]
    NotContained,
    #[error("subspace is not totally isotropic")]
    NotIsotropic,
    #[error("expected a maximal isotropic subspace of dimension {expected}, found dimension {found}")]
    NotMaximal { expected: usize, found: usize },
    #[error("expected family {expected}, found family {found}")]
    FamilyMismatch { expected: Family, found: Family },
    #[error("exhaustive enumeration over F_{q} is not supported ({reason})")]
    EnumerationRefused { q: u32, reason: &'static str },
    #[error("degenerate configuration: {0}")]
    Degenerate(String),
}

pub type Result<T, E = GeometryError> = std::result::Result<T, E>;

/// The two families of maximal isotropics. Family one is the family of the
/// reference `span(e_1..e_n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum Family {
    One,
    Two,
}

impl Family {
    pub fn other(self) -> Family {
        match self {
            Family::One => Family::Two,
            Family::Two => Family::One,
        }
    }
}

impl TryFrom<u8> for Family {
    type Error = String;

    fn try_from(v: u8) -> Result<Self, String> {
        match v {
            1 => Ok(Family::One),
            2 => Ok(Family::Two),
            _ => Err(format!("family must be 1 or 2, got {v}")),
        }
    }
}

impl From<Family> for u8 {
    fn from(f: Family) -> u8 {
        match f {
            Family::One => 1,
            Family::Two => 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", u8::from(*self))
    }
}

/// `F_p^{2n}` with `q(x) = Σ_{i≤n} x_i x_{2n+1-i}`, so `e_i` pairs with
/// `e_{2n+1-i}` and the Gram matrix of the polarization is antidiagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadraticSpace {
    field: PrimeField,
    n: usize,
}

/// Largest Witt index accepted.
pub const MAX_WITT_INDEX: usize = subspace::MAX_AMBIENT / 2;

impl QuadraticSpace {
    /// The 10-dimensional space over `F_p`.
    pub fn new(p: u64) -> Result<Self> {
        QuadraticSpace::split(p, 5)
    }

    pub fn split(p: u64, n: usize) -> Result<Self> {
        if n == 0 || n > MAX_WITT_INDEX {
            return Err(GeometryError::AmbientDimension(2 * n));
        }
        Ok(QuadraticSpace { field: PrimeField::new(p)?, n })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn modulus(&self) -> u32 {
        self.field.modulus()
    }

    pub fn witt_index(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    /// 0-based index of the hyperbolic partner of coordinate `i`.
    pub fn mirror(&self, i: usize) -> usize {
        2 * self.n - 1 - i
    }

    pub fn gram(&self) -> Vec<Vec<u32>> {
        (0..self.dim()).map(|i| (0..self.dim()).map(|j| u32::from(j == self.mirror(i))).collect()).collect()
    }

    /// `u · gram · v`.
    pub fn bilinear(&self, u: &[u32], v: &[u32]) -> u32 {
        let f = self.field;
        let mut acc = 0;
        for (i, &x) in u.iter().enumerate() {
            acc = f.add(acc, f.mul(x, v[self.mirror(i)]));
        }
        acc
    }

    pub fn quadratic(&self, x: &[u32]) -> u32 {
        let f = self.field;
        let mut acc = 0;
        for i in 0..self.n {
            acc = f.add(acc, f.mul(x[i], x[self.mirror(i)]));
        }
        acc
    }

    fn check(&self, s: &Subspace) -> Result<()> {
        if s.modulus() != self.modulus() {
            return Err(GeometryError::FieldMismatch(self.modulus(), s.modulus()));
        }
        if s.ambient() != self.dim() {
            return Err(GeometryError::WrongDimension { expected: self.dim(), found: s.ambient() });
        }
        Ok(())
    }

    pub fn span(&self, vectors: impl IntoIterator<Item = Vec<u32>>) -> Subspace {
        Subspace::span(self.field, self.dim(), vectors)
    }

    /// `span(e_i : i ∈ indices)`, 1-based.
    pub fn coordinate(&self, indices: &[usize]) -> Subspace {
        Subspace::coordinate(self.field, self.dim(), indices)
    }

    pub fn perp(&self, s: &Subspace) -> Result<Subspace> {
        self.check(s)?;
        let reversed: Vec<Vec<u32>> = s.basis().iter().map(|r| r.iter().rev().copied().collect()).collect();
        Ok(self.span(linalg::right_kernel(self.field, &reversed, self.dim())))
    }

    /// Vanishing of `q` on the basis and of the polarization on basis pairs;
    /// this is correct in characteristic 2 as well.
    pub fn is_totally_isotropic(&self, s: &Subspace) -> bool {
        if self.check(s).is_err() {
            return false;
        }
        let b = s.basis();
        b.iter()
            .enumerate()
            .all(|(i, u)| self.quadratic(u) == 0 && b[i + 1..].iter().all(|v| self.bilinear(u, v) == 0))
    }

    /// The reference maximal isotropic `span(e_1..e_n)`, of family one.
    pub fn reference(&self) -> MaximalIsotropic {
        let idx: Vec<usize> = (1..=self.n).collect();
        MaximalIsotropic { space: self.coordinate(&idx), family: Family::One }
    }

    /// Family of a maximal isotropic `m`, from the parity of `dim(m ∩ W_ref)`.
    pub fn family_of(&self, m: &Subspace) -> Result<Family> {
        self.check_maximal(m)?;
        Ok(self.family_unchecked(m))
    }

    fn family_unchecked(&self, m: &Subspace) -> Family {
        // m ∩ W_ref is the kernel of m → (last n coordinates).
        let tail: Vec<Vec<u32>> = m.basis().iter().map(|r| r[self.n..].to_vec()).collect();
        let meet = self.n - linalg::rank(self.field, &tail);
        if (self.n - meet).is_multiple_of(2) {
            Family::One
        } else {
            Family::Two
        }
    }

    fn check_maximal(&self, m: &Subspace) -> Result<()> {
        self.check(m)?;
        if m.dim() != self.n {
            return Err(GeometryError::NotMaximal { expected: self.n, found: m.dim() });
        }
        if !self.is_totally_isotropic(m) {
            return Err(GeometryError::NotIsotropic);
        }
        Ok(())
    }

    pub fn maximal(&self, m: Subspace) -> Result<MaximalIsotropic> {
        let family = self.family_of(&m)?;
        Ok(MaximalIsotropic { space: m, family })
    }

    /// The two maximal isotropics containing an isotropic `u` of dimension
    /// `n - 1`, returned as `(family one, family two)`.
    pub fn complete_to_maximal(&self, u: &Subspace) -> Result<(MaximalIsotropic, MaximalIsotropic)> {
        self.check(u)?;
        if u.dim() + 1 != self.n {
            return Err(GeometryError::WrongDimension { expected: self.n - 1, found: u.dim() });
        }
        if !self.is_totally_isotropic(u) {
            return Err(GeometryError::NotIsotropic);
        }
        let f = self.field;
        let up = self.perp(u)?;
        let comp = up.complement_basis(u)?;
        let [a, b] = <[Vec<u32>; 2]>::try_from(comp)
            .map_err(|c| GeometryError::Degenerate(format!("U^perp/U has dimension {}", c.len())))?;
        // q(xa + yb) on the hyperbolic plane U^perp/U.
        let qa = self.quadratic(&a);
        let qab = self.bilinear(&a, &b);
        let qb = self.quadratic(&b);
        let mut roots: Vec<(u32, u32)> = Vec::with_capacity(2);
        if qa == 0 {
            roots.push((1, 0));
        }
        if f.modulus() == 2 {
            for x in 0..2 {
                if f.add(f.add(f.mul(qa, x), qab * x), qb) == 0 {
                    roots.push((x, 1));
                }
            }
        } else if qa == 0 {
            // y (qab x + qb y) = 0
            roots.push((qb, f.neg(qab)));
        } else {
            let disc = f.sub(f.mul(qab, qab), f.mul(4 % f.modulus(), f.mul(qa, qb)));
            let s = f
                .sqrt(disc)
                .ok_or_else(|| GeometryError::Degenerate("residual plane is anisotropic".into()))?;
            let inv2a = f.inv(f.mul(2, qa));
            for r in [s, f.neg(s)] {
                roots.push((f.mul(f.sub(r, qab), inv2a), 1));
            }
        }
        let lines: Vec<Subspace> =
            roots.iter().map(|&(x, y)| self.span([combine(f, x, &a, y, &b)])).collect();
        if lines.len() != 2 || lines.iter().any(|l| l.dim() != 1) || lines[0] == lines[1] {
            return Err(GeometryError::Degenerate("residual plane is not hyperbolic".into()));
        }
        let mut out: Vec<MaximalIsotropic> = lines
            .iter()
            .map(|l| {
                let m = u.sum(l)?;
                Ok(MaximalIsotropic { family: self.family_unchecked(&m), space: m })
            })
            .collect::<Result<_>>()?;
        out.sort_by_key(|m| m.family);
        let second = out.pop().expect("two completions");
        let first = out.pop().expect("two completions");
        if first.family == second.family {
            return Err(GeometryError::Degenerate("completions share a family".into()));
        }
        Ok((first, second))
    }

    /// The unique maximal isotropic of `family` containing `u` (`dim u = n-1`).
    pub fn complete_with_family(&self, u: &Subspace, family: Family) -> Result<MaximalIsotropic> {
        let (one, two) = self.complete_to_maximal(u)?;
        Ok(if family == Family::One { one } else { two })
    }

    /// An isotropic vector of `S^⊥ \ S`, drawn uniformly.
    pub fn random_isotropic_vector_beyond<R: Rng + ?Sized>(
        &self,
        s: &Subspace,
        rng: &mut R,
    ) -> Result<Vec<u32>> {
        let up = self.perp(s)?;
        if up.dim() == s.dim() {
            return Err(GeometryError::Degenerate("subspace is already maximal".into()));
        }
        loop {
            let v = up.random_vector(rng);
            if self.quadratic(&v) == 0 && !s.contains_vector(&v) {
                return Ok(v);
            }
        }
    }

    /// Extends an isotropic `s` by uniform isotropic vectors up to `target` dimensions.
    pub fn random_isotropic_extension<R: Rng + ?Sized>(
        &self,
        s: &Subspace,
        target: usize,
        rng: &mut R,
    ) -> Result<Subspace> {
        if !self.is_totally_isotropic(s) {
            return Err(GeometryError::NotIsotropic);
        }
        if target > self.n || target < s.dim() {
            return Err(GeometryError::WrongDimension { expected: target, found: s.dim() });
        }
        let mut cur = s.clone();
        while cur.dim() < target {
            let v = self.random_isotropic_vector_beyond(&cur, rng)?;
            cur = cur.sum(&self.span([v]))?;
        }
        Ok(cur)
    }

    /// A uniformly distributed maximal isotropic of the requested family.
    pub fn random_maximal_isotropic<R: Rng + ?Sized>(&self, family: Family, rng: &mut R) -> MaximalIsotropic {
        let zero = Subspace::zero(self.field, self.dim());
        let u = self.random_isotropic_extension(&zero, self.n - 1, rng).expect("the zero space is isotropic");
        self.complete_with_family(&u, family).expect("nondegenerate form has hyperbolic residual planes")
    }

    /// A uniform maximal isotropic of `family` containing the isotropic `s`.
    pub fn random_maximal_containing<R: Rng + ?Sized>(
        &self,
        s: &Subspace,
        family: Family,
        rng: &mut R,
    ) -> Result<MaximalIsotropic> {
        if s.dim() == self.n {
            let m = self.maximal(s.clone())?;
            return if m.family == family {
                Ok(m)
            } else {
                Err(GeometryError::FamilyMismatch { expected: family, found: m.family })
            };
        }
        let u = self.random_isotropic_extension(s, self.n - 1, rng)?;
        self.complete_with_family(&u, family)
    }

    /// Every maximal isotropic of either family, in deterministic order.
    pub fn enumerate_maximal_isotropics(&self) -> Result<Vec<MaximalIsotropic>> {
        let q = self.modulus() as u128;
        let total: u128 = 2 * (1..self.n as u32).map(|i| q.pow(i) + 1).product::<u128>();
        if total > ENUMERATION_LIMIT {
            return Err(GeometryError::EnumerationRefused { q: self.modulus(), reason: "too many points" });
        }
        let patterns: Vec<Vec<usize>> = (0..1u32 << self.n)
            .map(|mask| {
                let mut piv: Vec<usize> =
                    (0..self.n).map(|i| if mask >> i & 1 == 0 { i } else { self.mirror(i) }).collect();
                piv.sort_unstable();
                piv
            })
            .collect();
        Ok(self.enumerate_with_pivots(&patterns))
    }

    /// Maximal isotropics whose echelon pivot columns are one of `patterns`.
    pub fn enumerate_with_pivots(&self, patterns: &[Vec<usize>]) -> Vec<MaximalIsotropic> {
        let chunks: Vec<Vec<MaximalIsotropic>> = patterns
            .par_iter()
            .map(|piv| {
                let mut out = Vec::new();
                let mut rows = Vec::with_capacity(self.n);
                self.extend_rows(piv, &mut rows, &mut out);
                out
            })
            .collect();
        chunks.into_iter().flatten().collect()
    }

    fn extend_rows(&self, piv: &[usize], rows: &mut Vec<Vec<u32>>, out: &mut Vec<MaximalIsotropic>) {
        let f = self.field;
        let m = self.dim();
        let r = rows.len();
        if r == piv.len() {
            let space = Subspace::from_rref_unchecked(f, m, rows.clone());
            out.push(MaximalIsotropic { family: self.family_unchecked(&space), space });
            return;
        }
        let p = piv[r];
        let free: Vec<usize> = (p + 1..m).filter(|c| !piv.contains(c)).collect();
        let a: Vec<Vec<u32>> =
            rows.iter().map(|prev| free.iter().map(|&j| prev[self.mirror(j)]).collect()).collect();
        let b: Vec<u32> = rows.iter().map(|prev| f.neg(prev[self.mirror(p)])).collect();
        let Some((x0, kernel)) = linalg::solve_affine(f, &a, &b, free.len()) else {
            return;
        };
        let q = f.modulus();
        let mut coeffs = vec![0u32; kernel.len()];
        loop {
            let mut row = vec![0u32; m];
            row[p] = 1;
            for (k, &col) in free.iter().enumerate() {
                let mut x = x0[k];
                for (c, kv) in coeffs.iter().zip(&kernel) {
                    x = f.add(x, f.mul(*c, kv[k]));
                }
                row[col] = x;
            }
            if self.quadratic(&row) == 0 {
                rows.push(row);
                self.extend_rows(piv, rows, out);
                rows.pop();
            }
            // odometer over F_q^{dim kernel}
            let mut i = 0;
            while i < coeffs.len() {
                coeffs[i] += 1;
                if coeffs[i] < q {
                    break;
                }
                coeffs[i] = 0;
                i += 1;
            }
            if i == coeffs.len() {
                break;
            }
        }
    }

    /// Dimension of `v ∩ w5` for two family-one maximal isotropics; always odd
    /// when `n` is odd.
    pub fn orbit_type(&self, v: &MaximalIsotropic, w5: &MaximalIsotropic) -> Result<usize> {
        for m in [v, w5] {
            if m.family != Family::One {
                return Err(GeometryError::FamilyMismatch { expected: Family::One, found: m.family });
            }
        }
        Ok(v.space.intersect(&w5.space)?.dim())
    }
}

/// Upper bound on the number of maximal isotropics an enumeration may produce.
pub const ENUMERATION_LIMIT: u128 = 5_000_000;

/// All family-one maximal isotropics of the 10-dimensional space over `F_q`,
/// for `q ∈ {2, 3}`.
pub fn enumerate_spinor_points(q: u32) -> Result<Vec<MaximalIsotropic>> {
    if !matches!(q, 2 | 3) {
        return Err(GeometryError::EnumerationRefused { q, reason: "only q = 2 and q = 3 are exhaustive" });
    }
    let qs = QuadraticSpace::new(q as u64)?;
    Ok(qs.enumerate_maximal_isotropics()?.into_iter().filter(|m| m.family == Family::One).collect())
}

/// `∏_{i=1}^{n-1} (q^i + 1)`, the size of one family.
pub fn family_size(q: u64, n: u32) -> u128 {
    (1..n).map(|i| (q as u128).pow(i) + 1).product()
}

fn combine(f: PrimeField, x: u32, a: &[u32], y: u32, b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(&ai, &bi)| f.add(f.mul(x, ai), f.mul(y, bi))).collect()
}

/// A maximal totally isotropic subspace tagged with its family.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawMaximal")]
pub struct MaximalIsotropic {
    space: Subspace,
    family: Family,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMaximal {
    space: Subspace,
    family: Family,
}

impl TryFrom<RawMaximal> for MaximalIsotropic {
    type Error = GeometryError;

    fn try_from(raw: RawMaximal) -> Result<Self> {
        let qs = QuadraticSpace::for_subspace(&raw.space)?;
        let m = qs.maximal(raw.space)?;
        if m.family != raw.family {
            return Err(GeometryError::FamilyMismatch { expected: raw.family, found: m.family });
        }
        Ok(m)
    }
}

impl QuadraticSpace {
    /// The split space whose ambient matches `s`.
    pub fn for_subspace(s: &Subspace) -> Result<Self> {
        if !s.ambient().is_multiple_of(2) {
            return Err(GeometryError::AmbientDimension(s.ambient()));
        }
        QuadraticSpace::split(s.modulus() as u64, s.ambient() / 2)
    }
}

impl MaximalIsotropic {
    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn into_space(self) -> Subspace {
        self.space
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::{HashMap, HashSet};

    fn e(i: usize) -> Vec<u32> {
        subspace::unit(10, i)
    }

    #[test]
    fn bilinear_examples() {
        let qs = QuadraticSpace::new(101).unwrap();
        assert_eq!(qs.bilinear(&e(1), &e(10)), 1);
        assert_eq!(qs.bilinear(&e(1), &e(1)), 0);
        assert_eq!(qs.bilinear(&e(2), &e(3)), 0);
        assert_eq!(qs.gram()[0][9], 1);
        assert_eq!(qs.gram()[4][5], 1);
    }

    #[test]
    fn isotropy_examples() {
        let qs = QuadraticSpace::new(101).unwrap();
        assert!(qs.is_totally_isotropic(&qs.coordinate(&[1, 2, 3, 4, 5])));
        assert!(!qs.is_totally_isotropic(&qs.coordinate(&[1, 10])));
        let mut v = e(1);
        v[9] = 1;
        assert_eq!(qs.quadratic(&v), 1);
        assert!(!qs.is_totally_isotropic(&qs.span([v.clone()])));
        // in characteristic 2 the polarization alone would not see this
        let q2 = QuadraticSpace::new(2).unwrap();
        assert_eq!(q2.bilinear(&v, &v), 0);
        assert!(!q2.is_totally_isotropic(&q2.span([v])));
    }

    #[test]
    fn perp_examples_and_duality() {
        let qs = QuadraticSpace::new(7).unwrap();
        let w = qs.coordinate(&[1, 2, 3, 4, 5]);
        assert_eq!(qs.perp(&w).unwrap(), w);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let full = qs.coordinate(&(1..=10).collect::<Vec<_>>());
        for k in 0..=10 {
            let s = full.random_subspace(k, &mut rng).unwrap();
            let sp = qs.perp(&s).unwrap();
            assert_eq!(s.dim() + sp.dim(), 10);
            assert_eq!(qs.perp(&sp).unwrap(), s);
        }
        for k in 0..=5 {
            let s = qs.random_isotropic_extension(&Subspace::zero(qs.field(), 10), k, &mut rng).unwrap();
            assert!(qs.perp(&s).unwrap().contains(&s));
        }
    }

    #[test]
    fn completion_examples() {
        for p in [2, 3, 101] {
            let qs = QuadraticSpace::new(p).unwrap();
            let u = qs.coordinate(&[1, 2, 3, 4]);
            let (one, two) = qs.complete_to_maximal(&u).unwrap();
            assert_eq!(one.space(), &qs.coordinate(&[1, 2, 3, 4, 5]));
            assert_eq!(two.space(), &qs.coordinate(&[1, 2, 3, 4, 6]));
            assert_eq!(two.family(), Family::Two);
            assert_eq!(one.space().intersect(two.space()).unwrap(), u);
        }
        let qs = QuadraticSpace::new(101).unwrap();
        assert!(qs.complete_to_maximal(&qs.coordinate(&[1, 2, 3])).is_err());
        assert!(qs.complete_to_maximal(&qs.coordinate(&[1, 2, 3, 8])).is_err());
    }

    #[test]
    fn random_completions_have_opposite_families() {
        for p in [2, 3, 5, 101, 65521] {
            let qs = QuadraticSpace::new(p).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(p);
            for _ in 0..50 {
                let zero = Subspace::zero(qs.field(), 10);
                let u = qs.random_isotropic_extension(&zero, 4, &mut rng).unwrap();
                let (a, b) = qs.complete_to_maximal(&u).unwrap();
                assert_eq!((a.family(), b.family()), (Family::One, Family::Two));
                assert!(a.space().contains(&u) && b.space().contains(&u));
                assert_eq!(a.space().intersect(b.space()).unwrap(), u);
            }
        }
    }

    #[test]
    fn family_examples() {
        let qs = QuadraticSpace::new(101).unwrap();
        assert_eq!(qs.family_of(&qs.coordinate(&[1, 2, 3, 4, 5])).unwrap(), Family::One);
        assert_eq!(qs.family_of(&qs.coordinate(&[1, 2, 3, 4, 6])).unwrap(), Family::Two);
        assert_eq!(qs.family_of(&qs.coordinate(&[6, 7, 8, 9, 10])).unwrap(), Family::Two);
        assert!(qs.family_of(&qs.coordinate(&[1, 2, 3, 4])).is_err());
        assert!(qs.family_of(&qs.coordinate(&[1, 2, 3, 4, 7])).is_err());
    }

    /// Reflection in an anisotropic vector `v`.
    fn reflect(qs: &QuadraticSpace, v: &[u32], x: &[u32]) -> Vec<u32> {
        let f = qs.field();
        let c = f.mul(qs.bilinear(x, v), f.inv(qs.quadratic(v)));
        x.iter().zip(v).map(|(&xi, &vi)| f.sub(xi, f.mul(c, vi))).collect()
    }

    #[test]
    fn family_is_constant_on_special_orthogonal_orbits() {
        let qs = QuadraticSpace::new(101).unwrap();
        let f = qs.field();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for trial in 0..200 {
            let fam = if trial % 2 == 0 { Family::One } else { Family::Two };
            let m = qs.random_maximal_isotropic(fam, &mut rng);
            let count = 1 + trial % 6;
            let mut basis = m.space().basis().to_vec();
            for _ in 0..count {
                let v = loop {
                    let v: Vec<u32> = (0..10).map(|_| f.random(&mut rng)).collect();
                    if qs.quadratic(&v) != 0 {
                        break v;
                    }
                };
                basis = basis.iter().map(|x| reflect(&qs, &v, x)).collect();
            }
            let image = qs.maximal(qs.span(basis)).unwrap();
            let expected = if count % 2 == 0 { fam } else { fam.other() };
            assert_eq!(image.family(), expected, "{count} reflections");
        }
    }

    #[test]
    fn sampling_is_isotropic_and_family_correct() {
        let qs = QuadraticSpace::new(101).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for i in 0..10_000 {
            let fam = if i % 3 == 0 { Family::Two } else { Family::One };
            let m = qs.random_maximal_isotropic(fam, &mut rng);
            assert_eq!(m.space().dim(), 5);
            assert!(qs.is_totally_isotropic(m.space()));
            assert_eq!(qs.family_of(m.space()).unwrap(), fam);
        }
    }

    #[test]
    fn point_counts_match_product_formula() {
        for q in [2u32, 3] {
            let pts = enumerate_spinor_points(q).unwrap();
            assert_eq!(pts.len() as u128, family_size(q as u64, 5));
            let qs = QuadraticSpace::new(q as u64).unwrap();
            let distinct: HashSet<&Subspace> = pts.iter().map(|m| m.space()).collect();
            assert_eq!(distinct.len(), pts.len());
            for m in pts.iter().step_by(97) {
                assert_eq!(qs.perp(m.space()).unwrap(), *m.space());
            }
        }
        assert_eq!(family_size(2, 5), 2295);
        assert_eq!(family_size(3, 5), 91840);
        assert!(enumerate_spinor_points(5).is_err());
        assert!(enumerate_spinor_points(4).is_err());
    }

    #[test]
    fn pivot_pattern_restriction_loses_nothing() {
        // Searching every 5-subset of pivot columns finds exactly the spaces
        // found from the 32 hyperbolic-pair patterns.
        let qs = QuadraticSpace::new(2).unwrap();
        let mut all = Vec::new();
        for mask in 0u32..1 << 10 {
            if mask.count_ones() == 5 {
                all.push((0..10).filter(|i| mask >> i & 1 == 1).collect::<Vec<_>>());
            }
        }
        assert_eq!(all.len(), 252);
        let brute: HashSet<MaximalIsotropic> = qs.enumerate_with_pivots(&all).into_iter().collect();
        let fast: HashSet<MaximalIsotropic> =
            qs.enumerate_maximal_isotropics().unwrap().into_iter().collect();
        assert_eq!(brute.len(), 4590);
        assert_eq!(brute, fast);
    }

    fn bits(m: &MaximalIsotropic) -> [u16; 5] {
        let mut out = [0u16; 5];
        for (o, row) in out.iter_mut().zip(m.space().basis()) {
            *o = row.iter().enumerate().fold(0, |acc, (i, &x)| acc | (x as u16) << i);
        }
        out
    }

    fn rank_gf2(rows: &mut [u16]) -> usize {
        let mut rank = 0;
        for bit in 0..10 {
            let Some(i) = (rank..rows.len()).find(|&i| rows[i] >> bit & 1 == 1) else {
                continue;
            };
            rows.swap(rank, i);
            let pivot = rows[rank];
            for (j, r) in rows.iter_mut().enumerate() {
                if j != rank && *r >> bit & 1 == 1 {
                    *r ^= pivot;
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn parity_law_exhaustive_at_q2() {
        let qs = QuadraticSpace::new(2).unwrap();
        let all = qs.enumerate_maximal_isotropics().unwrap();
        let encoded: Vec<([u16; 5], Family)> = all.iter().map(|m| (bits(m), m.family())).collect();
        let violations: usize = encoded
            .par_iter()
            .enumerate()
            .map(|(i, (a, fa))| {
                encoded[i..]
                    .iter()
                    .filter(|(b, fb)| {
                        let mut rows = [0u16; 10];
                        rows[..5].copy_from_slice(a);
                        rows[5..].copy_from_slice(b);
                        let meet = 10 - rank_gf2(&mut rows);
                        (meet % 2 == 1) != (fa == fb)
                    })
                    .count()
            })
            .sum();
        assert_eq!(violations, 0);
    }

    #[test]
    fn orbit_census_at_q2() {
        let qs = QuadraticSpace::new(2).unwrap();
        let w5 = qs.reference();
        let mut counts: HashMap<usize, usize> = HashMap::new();
        for v in enumerate_spinor_points(2).unwrap() {
            *counts.entry(qs.orbit_type(&v, &w5).unwrap()).or_default() += 1;
        }
        let expected: HashMap<usize, usize> = [(1, 1984), (3, 310), (5, 1)].into();
        assert_eq!(counts, expected);
        assert_eq!(qs.orbit_type(&w5, &w5).unwrap(), 5);
        let two = qs.maximal(qs.coordinate(&[1, 2, 3, 4, 6])).unwrap();
        assert!(qs.orbit_type(&two, &w5).is_err());
    }

    #[test]
    fn type_three_fraction_at_q3() {
        let qs = QuadraticSpace::new(3).unwrap();
        let w5 = qs.reference();
        let pts = enumerate_spinor_points(3).unwrap();
        let three = pts.iter().filter(|v| qs.orbit_type(v, &w5).unwrap() == 3).count();
        assert_eq!(three, 3630);
        let ratio = three as f64 / pts.len() as f64 * 27.0;
        assert!((1.0 / 3.0..=3.0).contains(&ratio), "{ratio}");
    }

    #[test]
    fn sampler_is_uniform_at_q2() {
        let qs = QuadraticSpace::new(2).unwrap();
        let pts = enumerate_spinor_points(2).unwrap();
        let index: HashMap<&Subspace, usize> = pts.iter().enumerate().map(|(i, m)| (m.space(), i)).collect();
        let samples = 20 * pts.len();
        let mut rng = ChaCha8Rng::seed_from_u64(2295);
        let mut hits = vec![0u64; pts.len()];
        for _ in 0..samples {
            let m = qs.random_maximal_isotropic(Family::One, &mut rng);
            hits[index[m.space()]] += 1;
        }
        let expected = samples as f64 / pts.len() as f64;
        let chi2: f64 = hits.iter().map(|&h| (h as f64 - expected).powi(2) / expected).sum();
        let df = (pts.len() - 1) as f64;
        assert!((chi2 - df).abs() < 4.0 * (2.0 * df).sqrt(), "chi2 = {chi2}, df = {df}");
    }

    #[test]
    fn maximal_json_round_trip_and_validation() {
        let qs = QuadraticSpace::new(3).unwrap();
        let m = qs.maximal(qs.coordinate(&[1, 2, 3, 4, 6])).unwrap();
        let json = serde_json::to_string(&m).unwrap();
        let back: MaximalIsotropic = serde_json::from_str(&json).unwrap();
        assert_eq!(back, m);
        let wrong = json.replace("\"family\":2", "\"family\":1");
        assert!(serde_json::from_str::<MaximalIsotropic>(&wrong).is_err());
        let not_iso = r#"{"space":{"p":3,"ambient":2,"basis":[[1,1]]},"family":1}"#;
        assert!(serde_json::from_str::<MaximalIsotropic>(not_iso).is_err());
    }
}
