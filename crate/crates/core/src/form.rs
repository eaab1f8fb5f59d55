//! Symmetric integer forms with exact signature, rank and determinant.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error("expected {expected} entries for a {n}x{n} matrix, found {found}")]
    Shape { n: usize, expected: usize, found: usize },
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
}

/// An `n x n` symmetric integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SymmetricForm {
    size: usize,
    #[serde(rename = "matrix", serialize_with = "serialize_rows")]
    entries: Vec<i64>,
}

fn serialize_rows<S: Serializer>(entries: &[i64], s: S) -> Result<S::Ok, S::Error> {
    let n = (entries.len() as f64).sqrt().round() as usize;
    let rows: Vec<&[i64]> = if n == 0 { Vec::new() } else { entries.chunks(n).collect() };
    rows.serialize(s)
}

impl SymmetricForm {
    pub fn new(size: usize, entries: Vec<i64>) -> Result<Self, FormError> {
        if entries.len() != size * size {
            return Err(FormError::Shape { n: size, expected: size * size, found: entries.len() });
        }
        for i in 0..size {
            for j in i + 1..size {
                if entries[i * size + j] != entries[j * size + i] {
                    return Err(FormError::NotSymmetric(i, j));
                }
            }
        }
        Ok(SymmetricForm { size, entries })
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self, FormError> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            let row = row.as_ref();
            if row.len() != n {
                return Err(FormError::Shape { n, expected: n * n, found: n * row.len() });
            }
            entries.extend_from_slice(row);
        }
        SymmetricForm::new(n, entries)
    }

    pub fn empty() -> Self {
        SymmetricForm { size: 0, entries: Vec::new() }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.size + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.size).map(|i| self.entries[i * self.size..(i + 1) * self.size].to_vec()).collect()
    }

    /// `xᵀ M y`
    pub fn pair(&self, x: &[i64], y: &[i64]) -> i64 {
        let n = self.size;
        (0..n).map(|i| x[i] * (0..n).map(|j| self.get(i, j) * y[j]).sum::<i64>()).sum()
    }

    /// `xᵀ M x`
    pub fn evaluate(&self, x: &[i64]) -> i64 {
        self.pair(x, x)
    }

    /// Diagonal of a congruent diagonal matrix, found by symmetric
    /// elimination over the rationals. Trailing zeros stand for the radical.
    #[allow(clippy::needless_range_loop)]
    pub fn congruence_diagonal(&self) -> Vec<BigRational> {
        let n = self.size;
        let mut m: Vec<Vec<BigRational>> =
            (0..n).map(|i| (0..n).map(|j| BigRational::from_integer(self.get(i, j).into())).collect()).collect();
        let mut diag = Vec::with_capacity(n);
        for k in 0..n {
            if let Some(p) = (k..n).find(|&i| !m[i][i].is_zero()) {
                swap_symmetric(&mut m, k, p);
            } else if let Some((i, j)) =
                (k..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !m[i][j].is_zero())
            {
                // every remaining diagonal entry is zero, so adding row and
                // column j to i leaves 2·m[i][j] on the diagonal
                add_symmetric(&mut m, i, j);
                swap_symmetric(&mut m, k, i);
            } else {
                diag.extend(std::iter::repeat_n(BigRational::zero(), n - k));
                break;
            }
            let pivot = m[k][k].clone();
            for j in k + 1..n {
                if m[j][k].is_zero() {
                    continue;
                }
                let f = &m[j][k] / &pivot;
                for l in k..n {
                    let t = &f * &m[k][l];
                    m[j][l] -= t;
                }
                for l in k..n {
                    let t = &f * &m[l][k];
                    m[l][j] -= t;
                }
            }
            diag.push(pivot);
        }
        diag
    }

    pub fn signature(&self) -> SignatureResult {
        let diag = self.congruence_diagonal();
        let positive = diag.iter().filter(|d| d.is_positive()).count();
        let negative = diag.iter().filter(|d| d.is_negative()).count();
        SignatureResult::from_counts(self.size, positive, negative, self.determinant())
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        bareiss_determinant(self.size, |i, j| self.get(i, j).into())
    }
}

fn swap_symmetric(m: &mut [Vec<BigRational>], a: usize, b: usize) {
    if a == b {
        return;
    }
    m.swap(a, b);
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

/// Row `i += row j`, then column `i += column j`.
fn add_symmetric(m: &mut [Vec<BigRational>], i: usize, j: usize) {
    let src = m[j].clone();
    for (a, b) in m[i].iter_mut().zip(&src) {
        *a += b;
    }
    for row in m.iter_mut() {
        let t = row[j].clone();
        row[i] += t;
    }
}

/// Determinant of an integer matrix by Bareiss elimination with row pivoting.
pub fn bareiss_determinant(n: usize, entry: impl Fn(usize, usize) -> BigInt) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| (0..n).map(|j| entry(i, j)).collect()).collect();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Definiteness {
    PositiveDefinite,
    NegativeDefinite,
    Indefinite,
    Singular,
    Empty,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignatureResult {
    pub signature: i64,
    #[serde(serialize_with = "serialize_bigint")]
    pub determinant: BigInt,
    pub rank: usize,
    pub verdict: Definiteness,
    #[serde(skip)]
    pub positive: usize,
    #[serde(skip)]
    pub negative: usize,
}

/// Small determinants as JSON numbers, huge ones as decimal strings.
fn serialize_bigint<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match i64::try_from(v) {
        Ok(small) => s.serialize_i64(small),
        Err(_) => s.serialize_str(&v.to_string()),
    }
}

impl SignatureResult {
    fn from_counts(size: usize, positive: usize, negative: usize, determinant: BigInt) -> Self {
        let rank = positive + negative;
        let verdict = if size == 0 {
            Definiteness::Empty
        } else if rank < size {
            Definiteness::Singular
        } else if positive == size {
            Definiteness::PositiveDefinite
        } else if negative == size {
            Definiteness::NegativeDefinite
        } else {
            Definiteness::Indefinite
        };
        SignatureResult { signature: positive as i64 - negative as i64, determinant, rank, verdict, positive, negative }
    }

    pub fn is_nonsingular(&self) -> bool {
        !self.determinant.is_zero()
    }

    /// Positive definite, with the empty form counting as such.
    pub fn positive_or_empty(&self) -> bool {
        matches!(self.verdict, Definiteness::PositiveDefinite | Definiteness::Empty)
    }

    /// Negative definite, with the empty form counting as such.
    pub fn negative_or_empty(&self) -> bool {
        matches!(self.verdict, Definiteness::NegativeDefinite | Definiteness::Empty)
    }
}

pub fn signature_and_definiteness(form: &SymmetricForm) -> SignatureResult {
    form.signature()
}
