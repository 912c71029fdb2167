//! Subspaces of `F_p^m` in canonical reduced row echelon form.

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::field::PrimeField;
use super::linalg;
use super::GeometryError;

/// A subspace stored by its reduced row echelon basis, so that equal
/// subspaces have identical representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSubspace")]
pub struct Subspace {
    p: u32,
    ambient: usize,
    basis: Vec<Vec<u32>>,
}

/// Wire form: `{"p": 101, "ambient": 10, "basis": [[...], ...]}`. Any
/// spanning set is accepted and canonicalized.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSubspace {
    p: u64,
    ambient: usize,
    basis: Vec<Vec<u64>>,
}

/// Ambient dimensions beyond this are refused on decode.
pub const MAX_AMBIENT: usize = 64;

impl TryFrom<RawSubspace> for Subspace {
    type Error = GeometryError;

    fn try_from(raw: RawSubspace) -> Result<Self, GeometryError> {
        let field = PrimeField::new(raw.p)?;
        if raw.ambient == 0 || raw.ambient > MAX_AMBIENT {
            return Err(GeometryError::AmbientDimension(raw.ambient));
        }
        if raw.basis.len() > MAX_AMBIENT {
            return Err(GeometryError::WrongDimension { expected: raw.ambient, found: raw.basis.len() });
        }
        let mut rows = Vec::with_capacity(raw.basis.len());
        for row in raw.basis {
            if row.len() != raw.ambient {
                return Err(GeometryError::WrongDimension { expected: raw.ambient, found: row.len() });
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= raw.p) {
                return Err(GeometryError::EntryOutOfRange { entry: bad, p: raw.p });
            }
            rows.push(row.into_iter().map(|x| x as u32).collect());
        }
        Ok(Subspace::span(field, raw.ambient, rows))
    }
}

impl Subspace {
    /// The span of `vectors`; entries must already be reduced mod `p`.
    pub fn span<I>(field: PrimeField, ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<u32>>,
    {
        let mut rows: Vec<Vec<u32>> = vectors.into_iter().collect();
        debug_assert!(rows.iter().all(|r| r.len() == ambient));
        linalg::rref(field, &mut rows);
        Subspace { p: field.modulus(), ambient, basis: rows }
    }

    /// Wraps rows already known to be in canonical form.
    pub(crate) fn from_rref_unchecked(field: PrimeField, ambient: usize, basis: Vec<Vec<u32>>) -> Self {
        Subspace { p: field.modulus(), ambient, basis }
    }

    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Subspace { p: field.modulus(), ambient, basis: Vec::new() }
    }

    /// `span(e_i : i ∈ indices)`, 1-based.
    pub fn coordinate(field: PrimeField, ambient: usize, indices: &[usize]) -> Self {
        Subspace::span(field, ambient, indices.iter().map(|&i| unit(ambient, i)))
    }

    pub fn field(&self) -> PrimeField {
        PrimeField::new(self.p as u64).expect("constructed from a prime field")
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis.iter().map(|r| r.iter().position(|&x| x != 0).expect("rows are nonzero")).collect()
    }

    fn check_compatible(&self, other: &Subspace) -> Result<(), GeometryError> {
        if self.p != other.p {
            return Err(GeometryError::FieldMismatch(self.p, other.p));
        }
        if self.ambient != other.ambient {
            return Err(GeometryError::WrongDimension { expected: self.ambient, found: other.ambient });
        }
        Ok(())
    }

    /// Residue of `v` modulo this subspace (zero iff `v` lies in it).
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let f = self.field();
        let mut out = v.to_vec();
        for row in &self.basis {
            let pc = row.iter().position(|&x| x != 0).expect("nonzero row");
            let c = out[pc];
            if c != 0 {
                for (o, &r) in out.iter_mut().zip(row) {
                    *o = f.sub(*o, f.mul(c, r));
                }
            }
        }
        out
    }

    pub fn contains_vector(&self, v: &[u32]) -> bool {
        v.len() == self.ambient && self.reduce(v).iter().all(|&x| x == 0)
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> bool {
        self.p == other.p
            && self.ambient == other.ambient
            && other.basis.iter().all(|v| self.contains_vector(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, GeometryError> {
        self.check_compatible(other)?;
        Ok(Subspace::span(self.field(), self.ambient, self.basis.iter().chain(&other.basis).cloned()))
    }

    /// Annihilator under the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        let f = self.field();
        Subspace::span(f, self.ambient, linalg::right_kernel(f, &self.basis, self.ambient))
    }

    /// `S ∩ T = ann(ann S + ann T)`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, GeometryError> {
        self.check_compatible(other)?;
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    pub fn random_vector<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<u32> {
        let f = self.field();
        let mut v = vec![0; self.ambient];
        for row in &self.basis {
            let c = f.random(rng);
            if c == 0 {
                continue;
            }
            for (o, &r) in v.iter_mut().zip(row) {
                *o = f.add(*o, f.mul(c, r));
            }
        }
        v
    }

    /// A random `k`-dimensional subspace of this one (uniform).
    pub fn random_subspace<R: Rng + ?Sized>(&self, k: usize, rng: &mut R) -> Result<Subspace, GeometryError> {
        if k > self.dim() {
            return Err(GeometryError::WrongDimension { expected: self.dim(), found: k });
        }
        let mut s = Subspace::zero(self.field(), self.ambient);
        while s.dim() < k {
            let v = self.random_vector(rng);
            if !s.contains_vector(&v) {
                s = s.sum(&Subspace::span(self.field(), self.ambient, [v]))?;
            }
        }
        Ok(s)
    }

    /// Vectors extending a basis of `sub` to a basis of `self`.
    pub fn complement_basis(&self, sub: &Subspace) -> Result<Vec<Vec<u32>>, GeometryError> {
        if !self.contains(sub) {
            return Err(GeometryError::NotContained);
        }
        let mut acc = sub.clone();
        let mut out = Vec::new();
        for v in &self.basis {
            if !acc.contains_vector(v) {
                acc = acc.sum(&Subspace::span(self.field(), self.ambient, [v.clone()]))?;
                out.push(v.clone());
            }
        }
        Ok(out)
    }
}

pub fn unit(ambient: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0; ambient];
    v[i - 1] = 1;
    v
}

/// The line spanned by a nonzero vector.
pub fn line(field: PrimeField, v: Vec<u32>) -> Subspace {
    let m = v.len();
    Subspace::span(field, m, [v])
}
