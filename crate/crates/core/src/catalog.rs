//! Built-in instances.
//!
//! * `u4`: the unbounded Klee-Walkup polyhedron, 8 facets in dimension 4.
//! * `q4_sym`: a symmetric realization of the Klee-Walkup polytope, 9 facets.
//! * `q4_pert`: a perturbation of `q4_sym` with the same combinatorics.
//! * `cube(d)` / `cubeD`: `0 <= x_i <= 1`, rows `x_i >= 0` first.
//! * `simplex(d)` / `simplexD`: `x_i >= 0` and `-sum x_i >= -1`.

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::model::Polyhedron;
use crate::scalar::{parse_rational, Scalar};

pub const NAMES: &[&str] = &["u4", "q4_sym", "q4_pert", "cube(d)", "simplex(d)"];

const U4: [[i64; 5]; 8] = [
    [-6, -3, 0, 1, -1],
    [-3, -6, 1, 0, -1],
    [-35, -45, 6, 3, -8],
    [-45, -35, 3, 6, -8],
    [1, 0, 0, 0, 0],
    [0, 1, 0, 0, 0],
    [0, 0, 1, 0, 0],
    [0, 0, 0, 1, 0],
];

const Q4_SYM: [[i64; 4]; 9] = [
    [3, -3, -1, -2],
    [-3, 3, -1, -2],
    [-2, 1, -1, -3],
    [2, -1, -1, -3],
    [-3, -3, 1, -2],
    [3, 3, 1, -2],
    [1, 2, 1, -3],
    [-1, -2, 1, -3],
    [0, 0, 0, 2],
];

const Q4_PERT: [[&str; 4]; 9] = [
    ["3.2", "-3", "-1", "-2"],
    ["-3", "3.2", "-1", "-2"],
    ["-2", "1", "-1", "-3"],
    ["2", "-1", "-1", "-3"],
    ["-3", "-3", "1.05", "-2"],
    ["3", "3", "1.05", "-2"],
    ["1.05", "2", "1", "-3"],
    ["-1", "-2.05", "1", "-3"],
    ["0", "0", "0", "2"],
];

fn u4<S: Scalar>() -> Polyhedron<S> {
    let rows: Vec<&[i64]> = U4.iter().map(|r| &r[..]).collect();
    Polyhedron::from_i64_inequalities(4, &rows).expect("u4 is well formed")
}

fn q4_sym<S: Scalar>() -> Polyhedron<S> {
    let rows: Vec<Vec<i64>> = Q4_SYM
        .iter()
        .map(|r| {
            let mut v = r.to_vec();
            v.push(-1);
            v
        })
        .collect();
    let rows: Vec<&[i64]> = rows.iter().map(|r| &r[..]).collect();
    Polyhedron::from_i64_inequalities(4, &rows).expect("q4_sym is well formed")
}

fn q4_pert<S: Scalar>() -> Result<Polyhedron<S>> {
    let mut a = Vec::new();
    for row in Q4_PERT {
        let parsed = row
            .iter()
            .map(|t| {
                let q: BigRational = parse_rational(t).expect("literal");
                S::from_big_ratio(&q).ok_or_else(|| Error::Unrepresentable(q.to_string()))
            })
            .collect::<Result<Vec<S>>>()?;
        a.push(parsed);
    }
    Polyhedron::from_inequalities(Matrix::from_rows(4, a)?, vec![S::from_i64(-1); 9])
}

pub fn cube<S: Scalar>(d: usize) -> Result<Polyhedron<S>> {
    if d == 0 {
        return Err(Error::UnknownInstance("cube(0)".into()));
    }
    let mut a = Vec::with_capacity(2 * d);
    let mut b = Vec::with_capacity(2 * d);
    for sign in [1, -1] {
        for i in 0..d {
            let mut row = vec![S::zero(); d];
            row[i] = S::from_i64(sign);
            a.push(row);
            b.push(if sign > 0 { S::zero() } else { S::from_i64(-1) });
        }
    }
    Polyhedron::from_inequalities(Matrix::from_rows(d, a)?, b)
}

pub fn simplex<S: Scalar>(d: usize) -> Result<Polyhedron<S>> {
    if d == 0 {
        return Err(Error::UnknownInstance("simplex(0)".into()));
    }
    let mut a: Vec<Vec<S>> = (0..d)
        .map(|i| {
            let mut row = vec![S::zero(); d];
            row[i] = S::one();
            row
        })
        .collect();
    a.push(vec![S::from_i64(-1); d]);
    let mut b = vec![S::zero(); d];
    b.push(S::from_i64(-1));
    Polyhedron::from_inequalities(Matrix::from_rows(d, a)?, b)
}

/// Splits `cube(3)` or `cube3` into `("cube", 3)`.
fn parametrized(name: &str) -> Option<(&str, usize)> {
    let (family, arg) = if let Some(open) = name.find('(') {
        let arg = name[open + 1..].strip_suffix(')')?;
        (&name[..open], arg)
    } else {
        let split = name.find(|c: char| c.is_ascii_digit())?;
        (&name[..split], &name[split..])
    };
    Some((family, arg.parse().ok()?))
}

/// Looks up a catalog instance by name.
pub fn builtin<S: Scalar>(name: &str) -> Result<Polyhedron<S>> {
    match name {
        "u4" => return Ok(u4()),
        "q4_sym" => return Ok(q4_sym()),
        "q4_pert" => return q4_pert(),
        _ => {}
    }
    match parametrized(name) {
        Some(("cube", d)) => cube(d),
        Some(("simplex", d)) => simplex(d),
        _ => Err(Error::UnknownInstance(name.to_string())),
    }
}
