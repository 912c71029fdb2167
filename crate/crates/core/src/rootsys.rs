//! Finite root systems generated from Cartan matrices.
//!
//! Roots are integer vectors in the basis of simple roots. Simple indices in
//! the public API are 1-based, following Bourbaki's numbering of the Dynkin
//! diagram (for `D_n`: the chain `1 - 2 - … - (n-2)` with the fork
//! `(n-2) - (n-1)` and `(n-2) - n`).
//!
//! The Cartan entry `a(i, j)` is `⟨α_i^∨, α_j⟩`; the simple reflection is
//! `s_i(β) = β − ⟨α_i^∨, β⟩ α_i`.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootSystemError {
    #[error("Cartan matrix must be square and nonempty")]
    NotSquare,
    #[error("diagonal entry ({0},{0}) is {1}, expected 2")]
    BadDiagonal(usize, i64),
    #[error("off-diagonal entry ({0},{1}) is positive")]
    PositiveOffDiagonal(usize, usize),
    #[error("entry ({0},{1}) is zero but ({1},{0}) is not")]
    AsymmetricZero(usize, usize),
    #[error("Cartan matrix is not symmetrizable")]
    NotSymmetrizable,
    #[error("Cartan matrix is not of finite type: leading principal minor of order {order} is {minor}")]
    NotFiniteType { order: usize, minor: i128 },
    #[error("entry magnitude {0} is too large")]
    EntryTooLarge(i64),
    #[error("simple index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("vector has length {found}, expected rank {rank}")]
    DimensionMismatch { found: usize, rank: usize },
    #[error("coroot of the zero vector is undefined")]
    ZeroRoot,
    #[error("⟨γ^∨, β⟩ is not integral (γ is not a root)")]
    NonIntegral,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = RootSystemError> = std::result::Result<T, E>;

// Entries outside this range cannot come from a finite-type matrix (|a_ij| ≤ 3)
// and would only risk overflow in the minor computation.
const MAX_ENTRY: i64 = 1 << 16;

/// A validated Cartan matrix of finite type together with its symmetrizer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CartanMatrix {
    entries: Vec<Vec<i64>>,
    /// `d_i > 0` with `d_i a_ij = d_j a_ji`; `(α_i, α_i) = 2 d_i`.
    #[serde(skip)]
    symmetrizer: Vec<i64>,
}

impl CartanMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let n = entries.len();
        if n == 0 || entries.iter().any(|row| row.len() != n) {
            return Err(RootSystemError::NotSquare);
        }
        for (i, row) in entries.iter().enumerate() {
            for (j, &a) in row.iter().enumerate() {
                if a.abs() > MAX_ENTRY {
                    return Err(RootSystemError::EntryTooLarge(a));
                }
                if i == j {
                    if a != 2 {
                        return Err(RootSystemError::BadDiagonal(i + 1, a));
                    }
                } else {
                    if a > 0 {
                        return Err(RootSystemError::PositiveOffDiagonal(i + 1, j + 1));
                    }
                    if (a == 0) != (entries[j][i] == 0) {
                        return Err(RootSystemError::AsymmetricZero(i + 1, j + 1));
                    }
                }
            }
        }
        let symmetrizer = symmetrizer(&entries)?;
        let form: Vec<Vec<i128>> =
            (0..n).map(|i| (0..n).map(|j| (symmetrizer[i] * entries[i][j]) as i128).collect()).collect();
        check_positive_definite(form)?;
        Ok(CartanMatrix { entries, symmetrizer })
    }

    /// `A_n`: the chain `1 - 2 - … - n`.
    pub fn a(n: usize) -> Self {
        let mut m = identity2(n);
        for i in 1..n {
            m[i - 1][i] = -1;
            m[i][i - 1] = -1;
        }
        Self::new(m).expect("A_n is of finite type")
    }

    /// `D_n` (n ≥ 3) in Bourbaki numbering.
    pub fn d(n: usize) -> Self {
        assert!(n >= 3, "D_n needs n >= 3");
        let mut m = identity2(n);
        for i in 1..n - 1 {
            m[i - 1][i] = -1;
            m[i][i - 1] = -1;
        }
        m[n - 3][n - 1] = -1;
        m[n - 1][n - 3] = -1;
        Self::new(m).expect("D_n is of finite type")
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    /// Entry `a(i, j)`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i - 1][j - 1]
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn is_simply_laced(&self) -> bool {
        self.symmetrizer.iter().all(|&d| d == self.symmetrizer[0])
    }
}

impl FromStr for CartanMatrix {
    type Err = RootSystemError;

    /// Rows separated by `;` or newlines, entries by commas or whitespace:
    /// `"2,-1;-1,2"`.
    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .split([';', '\n'])
            .map(str::trim)
            .filter(|r| !r.is_empty())
            .map(|r| {
                r.split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse::<i64>().map_err(|e| RootSystemError::Parse(format!("{t:?}: {e}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        CartanMatrix::new(rows)
    }
}

fn identity2(n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { 2 } else { 0 }).collect()).collect()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Solves `d_i a_ij = d_j a_ji` component by component, normalizing each
/// component to coprime positive integers.
fn symmetrizer(a: &[Vec<i64>]) -> Result<Vec<i64>> {
    let n = a.len();
    // d_i = num_i / den_i
    let mut num = vec![0i64; n];
    let mut den = vec![1i64; n];
    for start in 0..n {
        if num[start] != 0 {
            continue;
        }
        num[start] = 1;
        let mut component = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for j in 0..n {
                if i == j || a[i][j] == 0 || num[j] != 0 {
                    continue;
                }
                // d_j = d_i * a_ij / a_ji  (both entries negative)
                let (mut p, mut q) = (num[i] * a[i][j], den[i] * a[j][i]);
                if q < 0 {
                    p = -p;
                    q = -q;
                }
                let g = gcd(p, q).max(1);
                num[j] = p / g;
                den[j] = q / g;
                if num[j].abs() > MAX_ENTRY || den[j] > MAX_ENTRY {
                    return Err(RootSystemError::NotSymmetrizable);
                }
                component.push(j);
                queue.push_back(j);
            }
        }
        let lcm = component.iter().fold(1i64, |l, &i| l / gcd(l, den[i]) * den[i]);
        if lcm > MAX_ENTRY {
            return Err(RootSystemError::NotSymmetrizable);
        }
        for &i in &component {
            num[i] *= lcm / den[i];
            den[i] = 1;
        }
        let g = component.iter().fold(0i64, |g, &i| gcd(g, num[i]));
        for &i in &component {
            num[i] /= g;
        }
    }
    for i in 0..n {
        for j in 0..n {
            if num[i] * a[i][j] != num[j] * a[j][i] {
                return Err(RootSystemError::NotSymmetrizable);
            }
        }
    }
    Ok(num)
}

/// Sylvester's criterion with fraction-free (Bareiss) elimination; the
/// pivots are exactly the leading principal minors.
fn check_positive_definite(mut m: Vec<Vec<i128>>) -> Result<()> {
    let n = m.len();
    let mut prev = 1i128;
    for k in 0..n {
        let minor = m[k][k];
        if minor <= 0 {
            return Err(RootSystemError::NotFiniteType { order: k + 1, minor });
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = minor;
    }
    Ok(())
}

/// A vector in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root {
    coeffs: Vec<i64>,
}

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Root { coeffs }
    }

    /// The simple root `α_i` (1-based) of a rank `n` system.
    pub fn simple(n: usize, i: usize) -> Self {
        let mut coeffs = vec![0; n];
        coeffs[i - 1] = 1;
        Root { coeffs }
    }

    /// `Σ α_i` over the given 1-based indices.
    pub fn sum_of(n: usize, indices: &[usize]) -> Self {
        let mut coeffs = vec![0; n];
        for &i in indices {
            coeffs[i - 1] += 1;
        }
        Root { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient on `α_i`, 1-based.
    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs[i - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.coeffs.iter().all(|&c| c >= 0)
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.coeffs.iter().all(|&c| c <= 0)
    }

    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn neg(&self) -> Root {
        Root::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
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
            let mag = c.unsigned_abs();
            if mag == 1 {
                write!(f, "{sign}a{}", i + 1)?;
            } else {
                write!(f, "{sign}{mag}a{}", i + 1)?;
            }
            first = false;
        }
        Ok(())
    }
}

/// A word in the simple reflections, letters 1-based. The empty word is the
/// identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeylWord {
    letters: Vec<usize>,
}

impl WeylWord {
    pub fn new(letters: Vec<usize>) -> Self {
        WeylWord { letters }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl FromStr for WeylWord {
    type Err = RootSystemError;

    /// Accepts `4,3,2,5`, `4 3 2 5` or `(4,3,2,5)`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim();
        let body = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')).unwrap_or(body);
        let letters = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| match t.parse::<usize>() {
                Ok(0) => Err(RootSystemError::Parse("letters are 1-based".into())),
                Ok(l) => Ok(l),
                Err(e) => Err(RootSystemError::Parse(format!("{t:?}: {e}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(WeylWord { letters })
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, ")")
    }
}

/// A Cartan matrix together with its positive roots.
#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan: CartanMatrix,
    positive: Vec<Root>,
    lookup: HashSet<Root>,
}

/// Generates the positive roots by closing the simple roots under simple
/// reflections; `s_i` permutes the positive roots other than `α_i`.
pub fn build_root_system(cartan: CartanMatrix) -> RootSystem {
    let n = cartan.rank();
    let mut lookup = HashSet::new();
    let mut positive = Vec::new();
    let mut queue = VecDeque::new();
    for i in 1..=n {
        let r = Root::simple(n, i);
        lookup.insert(r.clone());
        queue.push_back(r);
    }
    while let Some(beta) = queue.pop_front() {
        for i in 1..=n {
            let image = reflect_raw(&cartan, i, &beta);
            if image.is_positive() && lookup.insert(image.clone()) {
                queue.push_back(image);
            }
        }
        positive.push(beta);
    }
    positive.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.cmp(a)));
    RootSystem { cartan, positive, lookup }
}

fn reflect_raw(cartan: &CartanMatrix, i: usize, beta: &Root) -> Root {
    let row = &cartan.entries[i - 1];
    let c: i64 = row.iter().zip(&beta.coeffs).map(|(a, b)| a * b).sum();
    let mut coeffs = beta.coeffs.clone();
    coeffs[i - 1] -= c;
    Root { coeffs }
}

impl RootSystem {
    pub fn new(cartan: CartanMatrix) -> Self {
        build_root_system(cartan)
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    /// Positive roots ordered by height.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn is_root(&self, beta: &Root) -> bool {
        self.lookup.contains(beta) || self.lookup.contains(&beta.neg())
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank() {
            Err(RootSystemError::IndexOutOfRange { index: i, rank: self.rank() })
        } else {
            Ok(())
        }
    }

    fn check_len(&self, beta: &Root) -> Result<()> {
        if beta.coeffs.len() != self.rank() {
            Err(RootSystemError::DimensionMismatch { found: beta.coeffs.len(), rank: self.rank() })
        } else {
            Ok(())
        }
    }

    pub fn simple_root(&self, i: usize) -> Result<Root> {
        self.check_index(i)?;
        Ok(Root::simple(self.rank(), i))
    }

    /// `s_i(β) = β − ⟨α_i^∨, β⟩ α_i`.
    pub fn reflect(&self, i: usize, beta: &Root) -> Result<Root> {
        self.check_index(i)?;
        self.check_len(beta)?;
        Ok(reflect_raw(&self.cartan, i, beta))
    }

    /// Applies `s_{i_1} ⋯ s_{i_k}` to `β` (rightmost letter acts first).
    pub fn apply_word(&self, w: &WeylWord, beta: &Root) -> Result<Root> {
        let mut out = beta.clone();
        self.check_len(&out)?;
        for &l in w.letters.iter().rev() {
            self.check_index(l)?;
            out = reflect_raw(&self.cartan, l, &out);
        }
        Ok(out)
    }

    /// The invariant form, normalized so that short simple roots have
    /// `(α, α) = 2`.
    pub fn form(&self, beta: &Root, gamma: &Root) -> Result<i64> {
        self.check_len(beta)?;
        self.check_len(gamma)?;
        let a = &self.cartan.entries;
        let d = &self.cartan.symmetrizer;
        let mut total = 0;
        for (i, &bi) in beta.coeffs.iter().enumerate() {
            if bi == 0 {
                continue;
            }
            for (j, &gj) in gamma.coeffs.iter().enumerate() {
                total += bi * gj * d[i] * a[i][j];
            }
        }
        Ok(total)
    }

    /// `⟨γ^∨, β⟩ = 2(γ, β)/(γ, γ)`.
    pub fn pairing(&self, gamma: &Root, beta: &Root) -> Result<i64> {
        if gamma.is_zero() {
            return Err(RootSystemError::ZeroRoot);
        }
        let num = 2 * self.form(gamma, beta)?;
        let den = self.form(gamma, gamma)?;
        if num % den != 0 {
            return Err(RootSystemError::NonIntegral);
        }
        Ok(num / den)
    }

    /// `γ_k = s_{i_1} ⋯ s_{i_{k−1}}(α_{i_k})` for every position `k`.
    pub fn prefix_roots(&self, w: &WeylWord) -> Result<Vec<Root>> {
        let n = self.rank();
        let mut out = Vec::with_capacity(w.len());
        for (k, &l) in w.letters.iter().enumerate() {
            self.check_index(l)?;
            let prefix = WeylWord::new(w.letters[..k].to_vec());
            out.push(self.apply_word(&prefix, &Root::simple(n, l))?);
        }
        Ok(out)
    }

    /// A word is reduced iff all of its prefix roots are positive.
    pub fn is_reduced(&self, w: &WeylWord) -> Result<bool> {
        Ok(self.prefix_roots(w)?.iter().all(Root::is_positive))
    }

    /// `dim G/P` for the maximal parabolic of node `p`: the number of
    /// positive roots involving `α_p`.
    pub fn coset_dimension(&self, p: usize) -> Result<usize> {
        self.check_index(p)?;
        Ok(self.positive.iter().filter(|r| r.coeff(p) != 0).count())
    }
}

pub fn reflect(rs: &RootSystem, i: usize, beta: &Root) -> Result<Root> {
    rs.reflect(i, beta)
}

pub fn pairing(rs: &RootSystem, gamma: &Root, beta: &Root) -> Result<i64> {
    rs.pairing(gamma, beta)
}

pub fn is_reduced(rs: &RootSystem, w: &WeylWord) -> Result<bool> {
    rs.is_reduced(w)
}

pub fn coset_dimension(rs: &RootSystem, p: usize) -> Result<usize> {
    rs.coset_dimension(p)
}
