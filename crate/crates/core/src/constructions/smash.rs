//! Smash products, coinvariants and idempotent corners.

use crate::corep::ComoduleAlgebraSC;
use crate::error::{Error, Result};
use crate::exactlin::{vector, Matrix, Scalar, Tensor3, Vector};
use crate::hopfcore::AlgebraSC;
use crate::MAX_DERIVED_DIM;

/// Index of `a_i # P_j` in the smash basis.
pub fn smash_index(hopf_dim: usize, i: usize, j: usize) -> usize {
    i * hopf_dim + j
}

/// `A # H^*` with `(a # h^*)(b # g^*) = Σ a(h^*_1·b) # h^*_2 g^*`, as a right
/// `H^*`-comodule algebra via `a # h^* ↦ Σ a # h^*_1 ⊗ h^*_2`.
pub fn smash_product(a: &ComoduleAlgebraSC) -> Result<ComoduleAlgebraSC> {
    let h = a.hopf();
    let (n, m) = (a.dim(), h.dim());
    let dim = n * m;
    if dim > MAX_DERIVED_DIM {
        return Err(Error::CapExceeded {
            dim,
            cap: MAX_DERIVED_DIM,
        });
    }
    let field = a.field();
    let hm = h.algebra().mult();
    let hd = h.coalgebra().comult();
    let rho = a.coaction();
    let alg = a.algebra();
    let idx = |i: usize, j: usize| smash_index(m, i, j);

    // Δ(P_j) = Σ m[a,b,j] P_a ⊗ P_b
    let mut dual_coprod: Vec<Vec<(usize, usize, &Scalar)>> = vec![Vec::new(); m];
    for (p, q, j, x) in hm.nonzeros() {
        dual_coprod[j].push((p, q, x));
    }
    // P_b P_q = Σ_s Δ[s,b,q] P_s
    let mut conv: Vec<Vec<Vec<(usize, &Scalar)>>> = vec![vec![Vec::new(); m]; m];
    for (s, b, q, x) in hd.nonzeros() {
        conv[b][q].push((s, x));
    }

    let mut mult = Tensor3::zeros(field, (dim, dim, dim));
    for i in 0..n {
        for j in 0..m {
            for l in 0..n {
                for (pa, pb, c) in &dual_coprod[j] {
                    // P_a·a_l = Σ_r ρ[l,r,a] a_r
                    for r in 0..n {
                        let x = &rho[(l, r, *pa)];
                        if x.is_zero() {
                            continue;
                        }
                        let cx = *c * x;
                        let prod = alg.basis_product(i, r);
                        for q in 0..m {
                            for (s, y) in &conv[*pb][q] {
                                let cxy = &cx * *y;
                                for (t, z) in prod.iter().enumerate() {
                                    if !z.is_zero() {
                                        mult[(idx(i, j), idx(l, q), idx(t, *s))] += &(&cxy * z);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let mut unit = vector::zeros(field, dim);
    for (i, ui) in alg.unit().iter().enumerate() {
        for (j, ej) in h.counit().iter().enumerate() {
            unit[idx(i, j)] = ui * ej;
        }
    }
    let labels = (0..dim)
        .map(|k| format!("{}#P_{}", alg.labels()[k / m], h.labels()[k % m]))
        .collect();
    let smash_alg = AlgebraSC::new(labels, mult, unit)?;

    let mut coaction = Tensor3::zeros(field, (dim, dim, m));
    for i in 0..n {
        for j in 0..m {
            for (pa, pb, c) in &dual_coprod[j] {
                coaction[(idx(i, j), idx(i, *pa), *pb)] = (*c).clone();
            }
        }
    }
    ComoduleAlgebraSC::new(smash_alg, h.dual(), coaction)
}

/// `a # h^*` in smash coordinates.
pub fn smash_element(a_dim: usize, hopf_dim: usize, a: &[Scalar], hstar: &[Scalar]) -> Vector {
    let field = a
        .first()
        .map(Scalar::field)
        .unwrap_or(crate::Field::Rational);
    let mut v = vector::zeros(field, a_dim * hopf_dim);
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in hstar.iter().enumerate() {
            v[smash_index(hopf_dim, i, j)] = x * y;
        }
    }
    v
}

fn label_for(v: &[Scalar], labels: &[String]) -> String {
    let nz: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
    match nz.as_slice() {
        [i] if v[*i].is_one() => labels[*i].clone(),
        _ => format!("({})", vector::display_in_basis(v, labels)),
    }
}

/// `A^{coH} = {a : ρ(a) = a ⊗ 1}` with its inclusion matrix (columns are the
/// basis of the subalgebra in coordinates of `A`).
pub fn coinvariants(a: &ComoduleAlgebraSC) -> Result<(AlgebraSC, Matrix)> {
    let (n, m) = (a.dim(), a.hopf().dim());
    let field = a.field();
    let one = a.hopf().unit();
    let mut sys = Matrix::zeros(field, n * m, n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..m {
                let mut x = a.coaction()[(i, j, k)].clone();
                if i == j {
                    x -= &one[k];
                }
                sys[(j * m + k, i)] = x;
            }
        }
    }
    let basis = sys.kernel();
    let labels = basis.iter().map(|v| label_for(v, a.labels())).collect();
    let sub = a.algebra().subalgebra(labels, &basis, a.algebra().unit())?;
    Ok((sub, Matrix::from_columns(field, n, &basis)))
}

/// `eAe` on the echelon basis of the subspace, with unit `e`.
pub fn corner(a: &AlgebraSC, e: &[Scalar]) -> Result<(AlgebraSC, Matrix)> {
    if vector::is_zero(e) {
        return Err(Error::Invalid(
            "the corner at 0 is the zero algebra, which has no unit".into(),
        ));
    }
    if !a.is_idempotent(e) {
        return Err(Error::Invalid("corner needs an idempotent".into()));
    }
    let sandwich = a
        .left_mul_matrix(e)
        .mul(&a.right_mul_matrix(e))
        .expect("square");
    let (rref, pivots) = sandwich.transpose().row_reduce();
    let basis: Vec<Vector> = (0..pivots.len()).map(|r| rref.row(r).to_vec()).collect();
    let labels = basis.iter().map(|v| label_for(v, a.labels())).collect();
    let sub = a.subalgebra(labels, &basis, e)?;
    Ok((sub, Matrix::from_columns(a.field(), a.dim(), &basis)))
}
