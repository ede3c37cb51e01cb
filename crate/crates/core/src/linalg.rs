//! Exact dense linear algebra over a [`Scalar`] field.
//!
//! Rank, kernel lines and square solves go through fraction-free (Bareiss)
//! elimination: every intermediate entry is a minor of the input, so
//! coefficients stay bounded. [`rank_naive`] is a textbook Gauss-Jordan
//! elimination kept as an independent second route.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = S::one();
        }
        m
    }

    /// Builds a matrix with `cols` columns from row vectors. Needed
    /// explicitly so that a matrix with zero rows still knows its width.
    pub fn from_rows(cols: usize, rows: Vec<Vec<S>>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    got: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Self {
            rows: n,
            cols,
            data,
        })
    }

    pub fn from_i64_rows(cols: usize, rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&v| S::from_i64(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&S> {
        if r < self.rows && c < self.cols {
            self.data.get(r * self.cols + c)
        } else {
            None
        }
    }

    pub fn row(&self, r: usize) -> &[S] {
        assert!(
            r < self.rows,
            "row {r} out of bounds for {} rows",
            self.rows
        );
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[S]> + '_ {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn to_rows(&self) -> Vec<Vec<S>> {
        self.row_iter().map(|r| r.to_vec()).collect()
    }

    /// The submatrix made of the given rows, in the given order.
    pub fn select_rows(&self, which: &[usize]) -> Self {
        let mut data = Vec::with_capacity(which.len() * self.cols);
        for &r in which {
            data.extend_from_slice(self.row(r));
        }
        Self {
            rows: which.len(),
            cols: self.cols,
            data,
        }
    }

    /// Vertical concatenation.
    pub fn stack(&self, below: &Self) -> Result<Self> {
        if self.cols != below.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: below.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&below.data);
        Ok(Self {
            rows: self.rows + below.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn mul_vec(&self, x: &[S]) -> Result<Vec<S>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: x.len(),
            });
        }
        Ok(self.row_iter().map(|row| dot(row, x)).collect())
    }

    /// Multiplies row `r` by `factor` in place.
    pub fn scale_row(&mut self, r: usize, factor: &S) {
        let cols = self.cols;
        for v in &mut self.data[r * cols..(r + 1) * cols] {
            *v = v.clone() * factor.clone();
        }
    }
}

pub fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    a.iter()
        .zip(b)
        .fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// Scales a row by the lcm of its denominators so the entries become
/// integers. Leaves the row alone if the scale is not representable.
fn clear_denominators<S: Scalar>(row: &mut [S]) {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.to_ratio().denom()));
    if lcm.is_one() {
        return;
    }
    if let Some(scale) = S::from_integer(&lcm) {
        for v in row.iter_mut() {
            *v = v.clone() * scale.clone();
        }
    }
}

/// Row echelon form by Bareiss elimination. Returns the reduced rows
/// (only the first `pivots.len()` are meaningful) and the pivot columns.
fn bareiss_echelon<S: Scalar>(mut rows: Vec<Vec<S>>, cols: usize) -> (Vec<Vec<S>>, Vec<usize>) {
    for row in rows.iter_mut() {
        clear_denominators(row);
    }
    let mut pivots = Vec::new();
    let mut prev = S::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows.len() {
            break;
        }
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail.iter_mut() {
            let factor = row[col].clone();
            for j in col + 1..cols {
                row[j] = (pivot_row[col].clone() * row[j].clone()
                    - factor.clone() * pivot_row[j].clone())
                    / prev.clone();
            }
            row[col] = S::zero();
        }
        prev = rows[rank][col].clone();
        pivots.push(col);
        rank += 1;
    }
    (rows, pivots)
}

/// Exact rank over the rationals.
pub fn rank<S: Scalar>(m: &Matrix<S>) -> usize {
    bareiss_echelon(m.to_rows(), m.cols).1.len()
}

/// Rank by plain Gauss-Jordan elimination with field division. Shares no
/// code with [`rank`].
pub fn rank_naive<S: Scalar>(m: &Matrix<S>) -> usize {
    let mut a = m.to_rows();
    let mut r = 0;
    for c in 0..m.cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = S::one() / a[r][c].clone();
        for v in a[r].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let pivot_row = a[r].clone();
                for (v, pv) in a[i].iter_mut().zip(pivot_row) {
                    *v = v.clone() - f.clone() * pv;
                }
            }
        }
        r += 1;
        if r == a.len() {
            break;
        }
    }
    r
}

/// Back substitution on an echelon form, with the given values fixed for
/// the free columns.
fn back_substitute<S: Scalar>(
    echelon: &[Vec<S>],
    pivots: &[usize],
    x: &mut [S],
    rhs_col: Option<usize>,
) {
    for (k, &p) in pivots.iter().enumerate().rev() {
        let row = &echelon[k];
        let mut acc = match rhs_col {
            Some(c) => row[c].clone(),
            None => S::zero(),
        };
        for j in p + 1..x.len() {
            acc = acc - row[j].clone() * x[j].clone();
        }
        x[p] = acc / row[p].clone();
    }
}

/// A nonzero integer vector with coprime components whose first nonzero
/// component is positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimitiveVector(Vec<BigInt>);

impl PrimitiveVector {
    pub fn components(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_scalars<S: Scalar>(&self) -> Result<Vec<S>> {
        self.0
            .iter()
            .map(|c| S::from_integer(c).ok_or_else(|| Error::Unrepresentable(c.to_string())))
            .collect()
    }

    pub fn negated(&self) -> Vec<BigInt> {
        self.0.iter().map(|c| -c).collect()
    }
}

impl fmt::Display for PrimitiveVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Clears denominators and divides by the gcd, preserving sign.
pub fn primitive_integer_vector<S: Scalar>(v: &[S]) -> Result<Vec<BigInt>> {
    let ratios: Vec<_> = v.iter().map(|x| x.to_ratio()).collect();
    if ratios.iter().all(|q| q.is_zero()) {
        return Err(Error::ZeroVector);
    }
    let lcm = ratios
        .iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = ratios
        .iter()
        .map(|q| q.numer() * (&lcm / q.denom()))
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    Ok(ints.into_iter().map(|c| c / &g).collect())
}

/// The primitive integer vector parallel to `v`, sign-canonicalized so the
/// first nonzero component is positive.
pub fn primitive_normalize<S: Scalar>(v: &[S]) -> Result<PrimitiveVector> {
    let mut ints = primitive_integer_vector(v)?;
    if ints
        .iter()
        .find(|c| !c.is_zero())
        .is_some_and(|c| c.is_negative())
    {
        for c in ints.iter_mut() {
            *c = -c.clone();
        }
    }
    Ok(PrimitiveVector(ints))
}

/// The canonical generator of `ker(m)` when the kernel is a line, `None`
/// otherwise.
pub fn kernel_line<S: Scalar>(m: &Matrix<S>) -> Option<PrimitiveVector> {
    let n = m.cols;
    if n == 0 {
        return None;
    }
    let (echelon, pivots) = bareiss_echelon(m.to_rows(), n);
    if pivots.len() + 1 != n {
        return None;
    }
    let free = (0..n).find(|c| !pivots.contains(c))?;
    let mut x = vec![S::zero(); n];
    x[free] = S::one();
    back_substitute(&echelon, &pivots, &mut x, None);
    primitive_normalize(&x).ok()
}

/// Solves `m x = rhs` for square nonsingular `m`; `None` if singular.
pub fn solve_square<S: Scalar>(m: &Matrix<S>, rhs: &[S]) -> Result<Option<Vec<S>>> {
    let n = m.cols;
    if m.rows != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: m.rows,
        });
    }
    if rhs.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: rhs.len(),
        });
    }
    let augmented: Vec<Vec<S>> = m
        .row_iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.to_vec();
            r.push(b.clone());
            r
        })
        .collect();
    let (echelon, pivots) = bareiss_echelon(augmented, n + 1);
    if pivots.len() < n || pivots[..n].iter().enumerate().any(|(i, &p)| p != i) {
        return Ok(None);
    }
    let mut x = vec![S::zero(); n];
    back_substitute(&echelon, &pivots[..n], &mut x, Some(n));
    Ok(Some(x))
}
