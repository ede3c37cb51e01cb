mod common;

use std::collections::BTreeSet;

use circdiam::linalg::Matrix;
use circdiam::{builtin, enumerate_circuits, enumerate_vertices, is_circuit, rank, HPolyhedron};
use common::{canonical, minor_rank, naive_circuits, naive_vertices, q, random_polytope, Q};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const CATALOG: &[&str] = &[
    "u4",
    "q4_sym",
    "q4_pert",
    "cube(2)",
    "cube(3)",
    "cube(4)",
    "simplex(2)",
    "simplex(3)",
    "simplex(4)",
];

fn check_against_oracles(name: &str, p: &HPolyhedron) {
    let vertices: BTreeSet<Vec<Q>> = enumerate_vertices(p)
        .into_iter()
        .map(|v| v.coords)
        .collect();
    assert_eq!(vertices, naive_vertices(p), "{name}: vertices");

    let circuits: BTreeSet<Vec<BigInt>> = enumerate_circuits(p)
        .iter()
        .map(|c| c.direction.components().to_vec())
        .collect();
    let naive = naive_circuits(p);
    assert_eq!(circuits, naive, "{name}: circuits");
    for g in &naive {
        let g: Vec<Q> = g.iter().map(|x| Q::from_integer(x.clone())).collect();
        assert!(
            is_circuit(p, &g).unwrap(),
            "{name}: is_circuit rejects {g:?}"
        );
        let doubled: Vec<Q> = g.iter().map(|x| x * q(2, 1)).collect();
        assert!(
            is_circuit(p, &doubled).unwrap(),
            "{name}: is_circuit is not scale invariant"
        );
    }
}

#[test]
fn catalog_matches_oracles() {
    for name in CATALOG {
        check_against_oracles(name, &builtin(name).unwrap());
    }
}

#[test]
fn u4_vertex_count() {
    // every vertex from the brute force over all C(8,4) bases
    assert_eq!(naive_vertices(&builtin("u4").unwrap()).len(), 15);
}

#[test]
fn random_polytopes_match_oracles() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..40 {
        let p = random_polytope(&mut rng, 2 + i % 2);
        check_against_oracles(&format!("random #{i}"), &p);
    }
}

#[test]
fn non_circuits_are_rejected() {
    let p: HPolyhedron = builtin("q4_sym").unwrap();
    let circuits = naive_circuits(&p);
    for v in [[1, 1, 0, 0], [1, 2, 3, 4], [0, 0, 1, 1], [2, 0, 1, 0]] {
        let g: Vec<Q> = v.iter().map(|&x| q(x, 1)).collect();
        let expected = circuits.contains(&canonical(&g));
        assert_eq!(is_circuit(&p, &g).unwrap(), expected, "{v:?}");
    }
}

fn small_matrix() -> impl Strategy<Value = (usize, Vec<Vec<Q>>)> {
    (1usize..=4, 1usize..=4)
        .prop_flat_map(|(r, c)| {
            (
                Just(c),
                prop::collection::vec(prop::collection::vec((-3i64..=3, 1i64..=3), c), r),
            )
        })
        .prop_map(|(c, rows)| {
            (
                c,
                rows.into_iter()
                    .map(|row| row.into_iter().map(|(n, d)| q(n, d)).collect())
                    .collect(),
            )
        })
}

proptest! {
    #[test]
    fn rank_matches_minor_rank((cols, rows) in small_matrix()) {
        let m = Matrix::from_rows(cols, rows.clone()).unwrap();
        prop_assert_eq!(rank(&m), minor_rank(&rows, cols));
    }
}
