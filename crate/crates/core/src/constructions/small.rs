//! Small algebras used by the worked examples.

use crate::exactlin::{vector, Field};
use crate::hopfcore::AlgebraSC;

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// Upper triangular 2×2 matrices on `E11, E12, E22`.
pub fn upper_triangular(field: Field) -> AlgebraSC {
    // (row, col) of each basis matrix
    let pos = [(1, 1), (1, 2), (2, 2)];
    AlgebraSC::from_products(
        field,
        labels(&["E11", "E12", "E22"]),
        vector::from_i64(field, &[1, 0, 1]),
        |i, j| {
            let (a, b) = pos[i];
            let (c, d) = pos[j];
            let mut v = vector::zeros(field, 3);
            if b == c {
                let k = pos
                    .iter()
                    .position(|&p| p == (a, d))
                    .expect("upper triangular is closed");
                v[k] = field.one();
            }
            v
        },
    )
    .expect("shapes")
}

/// `k[X]/(X²)` on `1, X`.
pub fn dual_numbers(field: Field) -> AlgebraSC {
    AlgebraSC::from_products(
        field,
        labels(&["1", "X"]),
        vector::from_i64(field, &[1, 0]),
        |i, j| {
            let mut v = vector::zeros(field, 2);
            if i + j < 2 {
                v[i + j] = field.one();
            }
            v
        },
    )
    .expect("shapes")
}

/// `k × k` on the two idempotents.
pub fn split_pair(field: Field) -> AlgebraSC {
    AlgebraSC::from_products(
        field,
        labels(&["e1", "e2"]),
        vector::from_i64(field, &[1, 1]),
        |i, j| {
            let mut v = vector::zeros(field, 2);
            if i == j {
                v[i] = field.one();
            }
            v
        },
    )
    .expect("shapes")
}

/// The ground field as a one-dimensional algebra.
pub fn ground_field(field: Field) -> AlgebraSC {
    AlgebraSC::from_products(field, labels(&["1"]), vec![field.one()], |_, _| {
        vec![field.one()]
    })
    .expect("shapes")
}
