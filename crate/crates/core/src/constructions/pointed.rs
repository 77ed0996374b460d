//! Sweedler's four-dimensional Hopf algebra and the Taft algebras.

use crate::error::{Error, Result};
use crate::exactlin::{vector, Field, Matrix, Scalar, Tensor3, Vector};
use crate::hopfcore::{outer, AlgebraSC, CoalgebraSC, HopfSC};

/// `H_4` on the basis `(1, c, x, cx)`: `c² = 1`, `x² = 0`, `xc = -cx`,
/// `Δ(c) = c⊗c`, `Δ(x) = c⊗x + x⊗1`, `ε(c) = 1`, `ε(x) = 0`,
/// `S(c) = c`, `S(x) = -cx`.
pub fn sweedler_h4(field: Field) -> Result<HopfSC> {
    if field.characteristic() == 2 {
        return Err(Error::Characteristic {
            char: 2,
            reason: "Sweedler's algebra needs xc = -cx with -1 != 1".into(),
        });
    }
    let z = |v: &[i64]| vector::from_i64(field, v);
    // basis index = a + 2b for c^a x^b
    let labels: Vec<String> = ["1", "c", "x", "cx"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let alg = AlgebraSC::from_products(field, labels, z(&[1, 0, 0, 0]), |i, j| {
        let (a, b) = (i % 2, i / 2);
        let (a2, b2) = (j % 2, j / 2);
        if b + b2 >= 2 {
            return z(&[0, 0, 0, 0]);
        }
        // x^b c^a2 = (-1)^{b a2} c^a2 x^b
        let sign = if b * a2 == 1 { -1 } else { 1 };
        let mut v = z(&[0, 0, 0, 0]);
        v[(a + a2) % 2 + 2 * (b + b2)] = field.from_i64(sign);
        v
    })?;

    let mut comult = Tensor3::zeros(field, (4, 4, 4));
    let one = field.one();
    comult[(0, 0, 0)] = one.clone(); // 1 ⊗ 1
    comult[(1, 1, 1)] = one.clone(); // c ⊗ c
    comult[(2, 1, 2)] = one.clone(); // c ⊗ x
    comult[(2, 2, 0)] = one.clone(); // x ⊗ 1
    comult[(3, 0, 3)] = one.clone(); // 1 ⊗ cx
    comult[(3, 3, 1)] = one; // cx ⊗ c
    let coalg = CoalgebraSC::new(comult, z(&[1, 1, 0, 0]))?;

    // columns: S(1) = 1, S(c) = c, S(x) = -cx, S(cx) = x
    let antipode = Matrix::from_columns(
        field,
        4,
        &[
            z(&[1, 0, 0, 0]),
            z(&[0, 1, 0, 0]),
            z(&[0, 0, 0, -1]),
            z(&[0, 0, 1, 0]),
        ],
    );
    HopfSC::new(alg, coalg, antipode)
}

/// The self-duality `H_4 → H_4^*`:
/// `1 ↦ P_1 + P_c`, `c ↦ P_1 - P_c`, `x ↦ P_x - P_cx`, `cx ↦ -P_x - P_cx`.
pub fn h4_self_duality(field: Field) -> Matrix {
    let z = |v: &[i64]| vector::from_i64(field, v);
    Matrix::from_columns(
        field,
        4,
        &[
            z(&[1, 1, 0, 0]),
            z(&[1, -1, 0, 0]),
            z(&[0, 0, 1, -1]),
            z(&[0, 0, -1, -1]),
        ],
    )
}

/// The Taft algebra of dimension `n²` for a primitive `n`-th root of unity
/// `omega`: `g^n = 1`, `x^n = 0`, `xg = omega·gx`, `Δ(g) = g⊗g`,
/// `Δ(x) = g⊗x + x⊗1`. Basis `g^a x^b` at index `a + n·b`.
///
/// With `n = 2`, `omega = -1` this is `H_4` with `c = g`.
pub fn taft_algebra(field: Field, n: usize, omega: &Scalar) -> Result<HopfSC> {
    if n < 2 {
        return Err(Error::Invalid("Taft algebras need n >= 2".into()));
    }
    let powers: Vec<Scalar> = std::iter::successors(Some(field.one()), |p| Some(p * omega))
        .take(n + 1)
        .collect();
    if !powers[n].is_one() || powers[1..n].iter().any(Scalar::is_one) {
        return Err(Error::Invalid(format!(
            "{omega} is not a primitive {n}-th root of unity"
        )));
    }
    let dim = n * n;
    let idx = |a: usize, b: usize| (a % n) + n * b;
    let labels = (0..dim)
        .map(|i| {
            let (a, b) = (i % n, i / n);
            let gpart = match a {
                0 => String::new(),
                1 => "g".to_string(),
                _ => format!("g^{a}"),
            };
            let xpart = match b {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{b}"),
            };
            match (gpart.is_empty(), xpart.is_empty()) {
                (true, true) => "1".to_string(),
                _ => format!("{gpart}{xpart}"),
            }
        })
        .collect();
    let alg = AlgebraSC::from_products(field, labels, vector::unit(field, dim, 0), |i, j| {
        let (a, b) = (i % n, i / n);
        let (a2, b2) = (j % n, j / n);
        let mut v = vector::zeros(field, dim);
        if b + b2 < n {
            // x^b g^a2 = omega^{b a2} g^a2 x^b
            v[idx(a + a2, b + b2)] = powers[(b * a2) % n].clone();
        }
        v
    })?;

    let g = vector::unit(field, dim, idx(1, 0));
    let x = vector::unit(field, dim, idx(0, 1));
    let one = vector::unit(field, dim, 0);
    let dg = outer(&g, &g);
    let dx = outer(&g, &x).add(&outer(&x, &one)).expect("same shape");

    // Δ and S on g^a x^b from the generators; S is an anti-homomorphism.
    let g_inv = vector::unit(field, dim, idx(n - 1, 0));
    let s_x = vector::scale(&field.from_i64(-1), &alg.mul(&g_inv, &x));
    let tmp = HopfSC::new(
        alg.clone(),
        CoalgebraSC::new(
            Tensor3::zeros(field, (dim, dim, dim)),
            vector::zeros(field, dim),
        )?,
        Matrix::identity(field, dim),
    )?;
    let mut comult = Tensor3::zeros(field, (dim, dim, dim));
    let mut antipode_cols: Vec<Vector> = Vec::with_capacity(dim);
    for i in 0..dim {
        let (a, b) = (i % n, i / n);
        let mut d = outer(&one, &one);
        let mut s = one.clone();
        for _ in 0..a {
            d = tmp.tensor_square_mul(&d, &dg);
            s = alg.mul(&g_inv, &s);
        }
        let mut sx = one.clone();
        for _ in 0..b {
            d = tmp.tensor_square_mul(&d, &dx);
            sx = alg.mul(&sx, &s_x);
        }
        // S(g^a x^b) = S(x)^b S(g)^a
        antipode_cols.push(alg.mul(&sx, &s));
        for p in 0..dim {
            for q in 0..dim {
                comult[(i, p, q)] = d[(p, q)].clone();
            }
        }
    }
    let mut counit = vector::zeros(field, dim);
    for a in 0..n {
        counit[idx(a, 0)] = field.one();
    }
    let coalg = CoalgebraSC::new(comult, counit)?;
    HopfSC::new(alg, coalg, Matrix::from_columns(field, dim, &antipode_cols))
}
