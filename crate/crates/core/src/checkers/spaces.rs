//! Linear constraint spaces of functionals and kernel stabilizers.

use serde::Serialize;

use crate::corep::{twist_iso, ComoduleAlgebraSC};
use crate::error::Result;
use crate::exactlin::{vector, Matrix, Scalar, Vector};
use crate::hopfcore::AlgebraSC;

/// `B[i,j] = B(a_i, a_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearFormSC {
    pub gram: Matrix,
}

impl BilinearFormSC {
    pub fn is_nondegenerate(&self) -> bool {
        self.gram.is_invertible()
    }

    pub fn eval(&self, a: &[Scalar], b: &[Scalar]) -> Scalar {
        vector::dot(a, &self.gram.mul_vec(b).expect("square"))
    }
}

/// Rows of `λ ↦ (λ(h^*·a) - h^*(1)λ(a))` over basis pairs; the colinear
/// functionals are its kernel.
pub fn colinear_constraints(a: &ComoduleAlgebraSC) -> Matrix {
    let (n, m) = (a.dim(), a.hopf().dim());
    let one = a.hopf().unit();
    let mut c = Matrix::zeros(a.field(), n * m, n);
    for i in 0..n {
        for k in 0..m {
            let row = i * m + k;
            for j in 0..n {
                c[(row, j)] = a.coaction()[(i, j, k)].clone();
            }
            c[(row, i)] -= &one[k];
        }
    }
    c
}

/// Rows of `λ ↦ λ(ba) - λ(a f(b))` over basis pairs.
pub fn twisted_trace_constraints(alg: &AlgebraSC, f: &Matrix) -> Matrix {
    let n = alg.dim();
    let mut c = Matrix::zeros(alg.field(), n * n, n);
    for b in 0..n {
        let fb = f.column(b);
        for a in 0..n {
            let row = b * n + a;
            let rhs = alg.mul(&alg.basis_vector(a), &fb);
            for (l, x) in alg.basis_product(b, a).iter().enumerate() {
                c[(row, l)] = x - &rhs[l];
            }
        }
    }
    c
}

/// `{λ : λ(h^*·a) = h^*(1)λ(a)}`.
pub fn colinear_space(a: &ComoduleAlgebraSC) -> Vec<Vector> {
    colinear_constraints(a).kernel()
}

pub(crate) fn symmetric_constraints(a: &ComoduleAlgebraSC, u: &[Scalar]) -> Result<Matrix> {
    let f = twist_iso(a, u)?;
    Ok(colinear_constraints(a)
        .vstack(&twisted_trace_constraints(a.algebra(), &f))
        .expect("same width"))
}

/// Colinear functionals with `λ(ba) = λ(a f(b))`, `f = u^{-1}·-`.
pub fn symmetric_space(a: &ComoduleAlgebraSC, u: &[Scalar]) -> Result<Vec<Vector>> {
    Ok(symmetric_constraints(a, u)?.kernel())
}

/// `B(a, b) = λ(ab)`.
pub fn gram(alg: &AlgebraSC, lambda: &[Scalar]) -> BilinearFormSC {
    let n = alg.dim();
    let mut g = Matrix::zeros(alg.field(), n, n);
    for i in 0..n {
        for j in 0..n {
            g[(i, j)] = vector::dot(alg.basis_product(i, j), lambda);
        }
    }
    BilinearFormSC { gram: g }
}

/// Which structures a subspace of `Ker λ` must be stable under.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Stability {
    pub right_ideal: bool,
    pub left_ideal: bool,
    pub hstar: bool,
}

impl Stability {
    pub const RIGHT: Stability = Stability {
        right_ideal: true,
        left_ideal: false,
        hstar: false,
    };
    pub const LEFT: Stability = Stability {
        right_ideal: false,
        left_ideal: true,
        hstar: false,
    };
    pub const TWO_SIDED: Stability = Stability {
        right_ideal: true,
        left_ideal: true,
        hstar: false,
    };
    /// Subobjects in `M^H_A`.
    pub const RIGHT_COMODULE: Stability = Stability {
        right_ideal: true,
        left_ideal: false,
        hstar: true,
    };
    /// Subobjects in `_A M^H`.
    pub const LEFT_COMODULE: Stability = Stability {
        right_ideal: false,
        left_ideal: true,
        hstar: true,
    };
}

fn stability_operators(a: &ComoduleAlgebraSC, sel: Stability) -> Vec<Matrix> {
    let alg = a.algebra();
    let mut ops = Vec::new();
    for i in 0..a.dim() {
        let e = alg.basis_vector(i);
        if sel.right_ideal {
            ops.push(alg.right_mul_matrix(&e));
        }
        if sel.left_ideal {
            ops.push(alg.left_mul_matrix(&e));
        }
    }
    if sel.hstar {
        for k in 0..a.hopf().dim() {
            ops.push(a.action_matrix(&a.hopf().basis_vector(k)));
        }
    }
    ops
}

/// The largest subspace of `Ker λ` stable under the selected operators:
/// iterate `V ← {v ∈ V : Mv ∈ V}` from `V = Ker λ`, tracking `V` by the rows
/// of an annihilator.
pub fn largest_stable_subspace_in_kernel(
    a: &ComoduleAlgebraSC,
    lambda: &[Scalar],
    sel: Stability,
) -> Vec<Vector> {
    largest_stable_in_common_kernel(a, std::slice::from_ref(&lambda.to_vec()), sel)
}

/// The largest subspace inside every `Ker λ` that the selected actions preserve.
pub fn largest_stable_in_common_kernel(
    a: &ComoduleAlgebraSC,
    functionals: &[Vector],
    sel: Stability,
) -> Vec<Vector> {
    let field = a.field();
    let n = a.dim();
    let ops = stability_operators(a, sel);
    let mut ann = Matrix::empty_rows(field, n);
    for f in functionals {
        ann.push_row(f.clone());
    }
    let (reduced, pivots) = ann.row_reduce();
    let mut rank = pivots.len();
    let mut ann = top_rows(&reduced, rank);
    loop {
        if rank == n {
            return Vec::new();
        }
        let mut next = ann.clone();
        for op in &ops {
            next = next
                .vstack(&ann.mul(op).expect("square"))
                .expect("same width");
        }
        let (reduced, pivots) = next.row_reduce();
        if pivots.len() == rank {
            return ann.kernel();
        }
        rank = pivots.len();
        ann = top_rows(&reduced, rank);
    }
}

fn top_rows(m: &Matrix, r: usize) -> Matrix {
    let mut out = Matrix::empty_rows(m.field(), m.cols());
    for i in 0..r {
        out.push_row(m.row(i).to_vec());
    }
    out
}

/// Plain algebra on the trivial Hopf algebra, so that the comodule checkers
/// specialise to the classical ones.
pub fn plain(alg: &AlgebraSC) -> ComoduleAlgebraSC {
    ComoduleAlgebraSC::trivial(alg.clone(), crate::hopfcore::HopfSC::trivial(alg.field()))
}
