//! H-representation polyhedra `{x : A1 x = b1, A2 x >= b2}` and the
//! instance text format.
//!
//! ```text
//! # comment
//! dim 2
//! eq 0          # optional
//! ineq 3
//! 1 0 0         # x1 >= 0
//! 0 1 0         # x2 >= 0
//! -1 -1 -1      # -x1 - x2 >= -1
//! ```
//!
//! Equality rows, if any, come before the inequality rows. Inequality rows
//! are facets, numbered from 1 in file order. `#` starts a comment.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::linalg::{dot, Matrix};
use crate::scalar::{format_compact, parse_rational, Scalar};

/// A set of 1-based facet (inequality row) indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FacetSet(BTreeSet<usize>);

impl FacetSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_zero_based(rows: impl IntoIterator<Item = usize>) -> Self {
        Self(rows.into_iter().map(|r| r + 1).collect())
    }

    pub fn insert(&mut self, facet: usize) -> bool {
        self.0.insert(facet)
    }

    pub fn contains(&self, facet: usize) -> bool {
        self.0.contains(&facet)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// 1-based facet indices in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn zero_based(&self) -> Vec<usize> {
        self.0.iter().map(|f| f - 1).collect()
    }

    pub fn intersection(&self, other: &Self) -> Self {
        Self(self.0.intersection(&other.0).copied().collect())
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.0.iter().copied().collect()
    }
}

impl FromIterator<usize> for FacetSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl fmt::Display for FacetSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polyhedron<S> {
    dim: usize,
    eq: Matrix<S>,
    eq_rhs: Vec<S>,
    ineq: Matrix<S>,
    ineq_rhs: Vec<S>,
}

impl<S: Scalar> Polyhedron<S> {
    pub fn new(eq: Matrix<S>, eq_rhs: Vec<S>, ineq: Matrix<S>, ineq_rhs: Vec<S>) -> Result<Self> {
        let dim = ineq.cols();
        if dim == 0 {
            return Err(Error::InvalidPolyhedron(
                "dimension must be at least 1".into(),
            ));
        }
        if eq.cols() != dim {
            return Err(Error::InvalidPolyhedron(format!(
                "equality rows have {} columns, inequality rows have {dim}",
                eq.cols()
            )));
        }
        if ineq.rows() == 0 {
            return Err(Error::InvalidPolyhedron(
                "at least one inequality is required".into(),
            ));
        }
        if eq_rhs.len() != eq.rows() || ineq_rhs.len() != ineq.rows() {
            return Err(Error::InvalidPolyhedron(
                "right-hand side length does not match row count".into(),
            ));
        }
        Ok(Self {
            dim,
            eq,
            eq_rhs,
            ineq,
            ineq_rhs,
        })
    }

    /// `{x : A x >= b}` with no equalities.
    pub fn from_inequalities(a: Matrix<S>, b: Vec<S>) -> Result<Self> {
        let dim = a.cols();
        Self::new(Matrix::zeros(0, dim), Vec::new(), a, b)
    }

    /// Convenience constructor from integer rows `a1 .. an b` meaning `a.x >= b`.
    pub fn from_i64_inequalities(dim: usize, rows: &[&[i64]]) -> Result<Self> {
        let mut a = Vec::with_capacity(rows.len());
        let mut b = Vec::with_capacity(rows.len());
        for row in rows {
            if row.len() != dim + 1 {
                return Err(Error::DimensionMismatch {
                    expected: dim + 1,
                    got: row.len(),
                });
            }
            a.push(row[..dim].iter().map(|&v| S::from_i64(v)).collect());
            b.push(S::from_i64(row[dim]));
        }
        Self::from_inequalities(Matrix::from_rows(dim, a)?, b)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn eq_matrix(&self) -> &Matrix<S> {
        &self.eq
    }

    pub fn eq_rhs(&self) -> &[S] {
        &self.eq_rhs
    }

    pub fn ineq_matrix(&self) -> &Matrix<S> {
        &self.ineq
    }

    pub fn ineq_rhs(&self) -> &[S] {
        &self.ineq_rhs
    }

    /// Number of inequality rows.
    pub fn facet_count(&self) -> usize {
        self.ineq.rows()
    }

    fn check_dim(&self, x: &[S]) -> Result<()> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        Ok(())
    }

    /// Slacks `A2 x - b2`.
    pub fn residuals(&self, x: &[S]) -> Result<Vec<S>> {
        self.check_dim(x)?;
        Ok(self
            .ineq
            .row_iter()
            .zip(&self.ineq_rhs)
            .map(|(row, b)| dot(row, x) - b.clone())
            .collect())
    }

    fn equalities_hold(&self, x: &[S]) -> bool {
        self.eq
            .row_iter()
            .zip(&self.eq_rhs)
            .all(|(row, b)| dot(row, x) == *b)
    }

    pub fn contains(&self, x: &[S]) -> Result<bool> {
        let slack = self.residuals(x)?;
        Ok(self.equalities_hold(x) && slack.iter().all(|s| !s.is_negative()))
    }

    /// Facets with zero slack at a feasible point.
    pub fn tight_rows(&self, x: &[S]) -> Result<FacetSet> {
        if !self.contains(x)? {
            return Err(Error::Infeasible);
        }
        let slack = self.residuals(x)?;
        Ok(FacetSet::from_zero_based(
            slack
                .iter()
                .enumerate()
                .filter(|(_, s)| s.is_zero())
                .map(|(i, _)| i),
        ))
    }

    /// The same polyhedron with inequality row `i` (0-based) and its
    /// right-hand side multiplied by `factor`.
    pub fn with_scaled_row(&self, i: usize, factor: &S) -> Self {
        let mut out = self.clone();
        out.ineq.scale_row(i, factor);
        out.ineq_rhs[i] = out.ineq_rhs[i].clone() * factor.clone();
        out
    }

    /// Converts every coefficient to another scalar type.
    pub fn convert<T: Scalar>(&self) -> Result<Polyhedron<T>> {
        fn conv_vec<S: Scalar, T: Scalar>(v: &[S]) -> Result<Vec<T>> {
            v.iter()
                .map(|x| {
                    T::from_big_ratio(&x.to_ratio())
                        .ok_or_else(|| Error::Unrepresentable(x.to_string()))
                })
                .collect()
        }
        fn conv_mat<S: Scalar, T: Scalar>(m: &Matrix<S>) -> Result<Matrix<T>> {
            Matrix::from_rows(
                m.cols(),
                m.row_iter().map(conv_vec).collect::<Result<Vec<_>>>()?,
            )
        }
        Polyhedron::new(
            conv_mat(&self.eq)?,
            conv_vec(&self.eq_rhs)?,
            conv_mat(&self.ineq)?,
            conv_vec(&self.ineq_rhs)?,
        )
    }

    /// Serializes to the instance text format. Integers are written bare,
    /// everything else as `p/q`, so parsing the output gives back an equal
    /// polyhedron.
    pub fn to_hrep(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "dim {}", self.dim);
        if self.eq.rows() > 0 {
            let _ = writeln!(out, "eq {}", self.eq.rows());
        }
        let _ = writeln!(out, "ineq {}", self.ineq.rows());
        let mut write_rows = |m: &Matrix<S>, rhs: &[S]| {
            for (row, b) in m.row_iter().zip(rhs) {
                let line: Vec<String> = row
                    .iter()
                    .chain(std::iter::once(b))
                    .map(|v| format_compact(&v.to_ratio()))
                    .collect();
                let _ = writeln!(out, "{}", line.join(" "));
            }
        };
        write_rows(&self.eq, &self.eq_rhs);
        write_rows(&self.ineq, &self.ineq_rhs);
        out
    }
}

/// Parses the instance text format.
pub fn parse_hrep<S: Scalar>(text: &str) -> Result<Polyhedron<S>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let header = |lines: &mut dyn Iterator<Item = (usize, &str)>,
                  key: &str|
     -> Result<Option<(usize, usize)>> {
        match lines.next() {
            None => Ok(None),
            Some((no, line)) => {
                let mut parts = line.split_whitespace();
                let (Some(k), Some(v), None) = (parts.next(), parts.next(), parts.next()) else {
                    return Err(Error::Parse {
                        line: no,
                        message: format!("expected `{key} <count>`, found {line:?}"),
                    });
                };
                if k != key {
                    return Err(Error::Parse {
                        line: no,
                        message: format!("expected `{key} <count>`, found {line:?}"),
                    });
                }
                let count = v.parse::<usize>().map_err(|_| Error::Parse {
                    line: no,
                    message: format!("invalid count {v:?}"),
                })?;
                Ok(Some((no, count)))
            }
        }
    };

    let parse_err = |line, message: String| Error::Parse { line, message };

    let Some((dim_line, dim)) = header(&mut lines, "dim")? else {
        return Err(parse_err(1, "missing `dim` header".into()));
    };
    if dim == 0 {
        return Err(parse_err(dim_line, "dimension must be at least 1".into()));
    }

    // `eq` is optional, so peek at the next header by hand.
    let mut rest = lines.peekable();
    let mut eq_rows = 0;
    let mut last_line = dim_line;
    if let Some(&(no, line)) = rest.peek() {
        if line.starts_with("eq") && line.split_whitespace().next() == Some("eq") {
            let (_, n) = header(&mut rest, "eq")?.expect("peeked");
            eq_rows = n;
            last_line = no;
        }
    }
    let Some((ineq_line, ineq_rows)) = header(&mut rest, "ineq")? else {
        return Err(parse_err(last_line + 1, "missing `ineq` header".into()));
    };

    let mut read_rows = |count: usize, what: &str| -> Result<(Vec<Vec<S>>, Vec<S>)> {
        let mut a = Vec::with_capacity(count);
        let mut b = Vec::with_capacity(count);
        for k in 0..count {
            let Some((no, line)) = rest.next() else {
                return Err(parse_err(
                    ineq_line,
                    format!("expected {count} {what} rows, found {k}"),
                ));
            };
            let values = line
                .split_whitespace()
                .map(|tok| {
                    let q = parse_rational(tok).map_err(|m| parse_err(no, m))?;
                    S::from_big_ratio(&q)
                        .ok_or_else(|| parse_err(no, format!("{tok} is not representable")))
                })
                .collect::<Result<Vec<S>>>()?;
            if values.len() != dim + 1 {
                return Err(parse_err(
                    no,
                    format!(
                        "expected {} numbers (dim {dim} plus right-hand side), found {}",
                        dim + 1,
                        values.len()
                    ),
                ));
            }
            let mut values = values;
            b.push(values.pop().expect("nonempty"));
            a.push(values);
        }
        Ok((a, b))
    };

    let (eq_a, eq_b) = read_rows(eq_rows, "equality")?;
    let (in_a, in_b) = read_rows(ineq_rows, "inequality")?;
    if let Some((no, line)) = rest.next() {
        return Err(parse_err(no, format!("unexpected trailing line {line:?}")));
    }
    if ineq_rows == 0 {
        return Err(parse_err(
            ineq_line,
            "at least one inequality is required".into(),
        ));
    }
    Polyhedron::new(
        Matrix::from_rows(dim, eq_a)?,
        eq_b,
        Matrix::from_rows(dim, in_a)?,
        in_b,
    )
}

/// Exact rational points, used where values cross an API boundary.
pub fn to_big_point<S: Scalar>(x: &[S]) -> Vec<BigRational> {
    x.iter().map(Scalar::to_ratio).collect()
}

pub fn from_big_point<S: Scalar>(x: &[BigRational]) -> Result<Vec<S>> {
    x.iter()
        .map(|q| S::from_big_ratio(q).ok_or_else(|| Error::Unrepresentable(q.to_string())))
        .collect()
}
