//! Independent oracles and random instances shared by the integration
//! tests. Nothing here calls the elimination routines of the library.

#![allow(dead_code)]

use std::collections::BTreeSet;

use circdiam::linalg::Matrix;
use circdiam::{enumerate_circuits, is_bounded, HPolyhedron, Rational};
use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;

pub type Q = Rational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Determinant by cofactor expansion along the first row.
pub fn det(m: &[Vec<Q>]) -> Q {
    match m.len() {
        0 => Q::one(),
        1 => m[0][0].clone(),
        n => (0..n)
            .filter(|&j| !m[0][j].is_zero())
            .map(|j| {
                let minor: Vec<Vec<Q>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != j)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * det(&minor);
                if j % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .fold(Q::zero(), |a, b| a + b),
    }
}

/// Rank as the size of the largest nonsingular square minor.
pub fn minor_rank(m: &[Vec<Q>], cols: usize) -> usize {
    for k in (1..=m.len().min(cols)).rev() {
        for rows in (0..m.len()).combinations(k) {
            for cs in (0..cols).combinations(k) {
                let sub: Vec<Vec<Q>> = rows
                    .iter()
                    .map(|&r| cs.iter().map(|&c| m[r][c].clone()).collect())
                    .collect();
                if !det(&sub).is_zero() {
                    return k;
                }
            }
        }
    }
    0
}

fn rows_of(m: &Matrix<Q>) -> Vec<Vec<Q>> {
    (0..m.rows()).map(|r| m.row(r).to_vec()).collect()
}

fn feasible(p: &HPolyhedron, x: &[Q]) -> bool {
    rows_of(p.ineq_matrix())
        .iter()
        .zip(p.ineq_rhs())
        .all(|(a, b)| {
            a.iter()
                .zip(x)
                .map(|(a, x)| a * x)
                .fold(Q::zero(), |s, t| s + t)
                >= *b
        })
}

/// Vertices by Cramer's rule over every basis of `dim` inequality rows.
/// Equalities are not supported.
pub fn naive_vertices(p: &HPolyhedron) -> BTreeSet<Vec<Q>> {
    assert_eq!(p.eq_matrix().rows(), 0);
    let n = p.dim();
    let a = rows_of(p.ineq_matrix());
    let mut out = BTreeSet::new();
    for basis in (0..a.len()).combinations(n) {
        let m: Vec<Vec<Q>> = basis.iter().map(|&r| a[r].clone()).collect();
        let d = det(&m);
        if d.is_zero() {
            continue;
        }
        let x: Vec<Q> = (0..n)
            .map(|j| {
                let mj: Vec<Vec<Q>> = basis
                    .iter()
                    .zip(&m)
                    .map(|(&r, row)| {
                        let mut row = row.clone();
                        row[j] = p.ineq_rhs()[r].clone();
                        row
                    })
                    .collect();
                det(&mj) / &d
            })
            .collect();
        if feasible(p, &x) {
            out.insert(x);
        }
    }
    out
}

/// Coprime integers parallel to `v`, first nonzero entry positive.
pub fn canonical(v: &[Q]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    let sign = if ints
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_negative())
    {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    ints.into_iter().map(|x| x / &g * &sign).collect()
}

fn support(a: &[Vec<Q>], g: &[BigInt]) -> BTreeSet<usize> {
    a.iter()
        .enumerate()
        .filter(|(_, row)| {
            !row.iter()
                .zip(g)
                .map(|(x, y)| x * Q::from_integer(y.clone()))
                .fold(Q::zero(), |s, t| s + t)
                .is_zero()
        })
        .map(|(i, _)| i)
        .collect()
}

/// Circuits of `{A x >= b}`: generalized cross products of every
/// `(dim - 1)`-subset of rows, keeping the candidates whose image support
/// is minimal among all candidates. Equalities are not supported.
pub fn naive_circuits(p: &HPolyhedron) -> BTreeSet<Vec<BigInt>> {
    assert_eq!(p.eq_matrix().rows(), 0);
    let n = p.dim();
    let a = rows_of(p.ineq_matrix());
    let mut candidates = BTreeSet::new();
    for rows in (0..a.len()).combinations(n - 1) {
        let v: Vec<Q> = (0..n)
            .map(|j| {
                let minor: Vec<Vec<Q>> = rows
                    .iter()
                    .map(|&r| {
                        a[r].iter()
                            .enumerate()
                            .filter(|&(k, _)| k != j)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let d = det(&minor);
                if j % 2 == 0 {
                    d
                } else {
                    -d
                }
            })
            .collect();
        if v.iter().any(|x| !x.is_zero()) {
            candidates.insert(canonical(&v));
        }
    }
    let supports: Vec<(Vec<BigInt>, BTreeSet<usize>)> = candidates
        .into_iter()
        .map(|g| {
            let s = support(&a, &g);
            (g, s)
        })
        .filter(|(_, s)| !s.is_empty())
        .collect();
    supports
        .iter()
        .filter(|(_, s)| {
            !supports
                .iter()
                .any(|(_, t)| t.len() < s.len() && t.is_subset(s))
        })
        .map(|(g, _)| g.clone())
        .collect()
}

fn random_row<R: Rng>(rng: &mut R, dim: usize) -> Vec<Q> {
    loop {
        let den = rng.random_range(1..=3);
        let row: Vec<Q> = (0..dim).map(|_| q(rng.random_range(-3..=3), den)).collect();
        if row.iter().any(|x| !x.is_zero()) {
            return row;
        }
    }
}

/// A random bounded `{A x >= b}` with small rational data whose interior
/// contains the origin.
pub fn random_polytope<R: Rng>(rng: &mut R, dim: usize) -> HPolyhedron {
    loop {
        let m = rng.random_range(dim + 1..=dim + 3);
        let a: Vec<Vec<Q>> = (0..m).map(|_| random_row(rng, dim)).collect();
        let b: Vec<Q> = (0..m)
            .map(|_| q(-rng.random_range(1..=4), rng.random_range(1..=2)))
            .collect();
        let p = HPolyhedron::from_inequalities(Matrix::from_rows(dim, a).unwrap(), b).unwrap();
        if is_bounded(&p, &enumerate_circuits(&p)) {
            return p;
        }
    }
}

/// `{A x >= b}` from integer rows `a1 .. an b`.
pub fn poly(dim: usize, rows: &[&[i64]]) -> HPolyhedron {
    HPolyhedron::from_i64_inequalities(dim, rows).unwrap()
}
