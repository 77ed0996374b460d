use crate::corep::{dual_coaction, twist_iso, ComoduleAlgebraSC};
use crate::error::{Error, Result};
use crate::exactlin::{vector, Scalar, Tensor3, Vector};
use crate::hopfcore::AlgebraSC;
use crate::MAX_DERIVED_DIM;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrivialExtension {
    pub algebra: ComoduleAlgebraSC,
    /// `λ(a, a^*) = a^*(1)`.
    pub witness: Vector,
}

/// `E(A) = A ⊕ F(A^*)` with `(a, a^*)(b, b^*) = (ab, (u^{-1}·a) b^* + a^* b)`
/// and the direct sum coaction. Basis: the basis of `A`, then the dual basis `p_*`.
pub fn trivial_extension(a: &ComoduleAlgebraSC, u: &[Scalar]) -> Result<TrivialExtension> {
    let n = a.dim();
    if 2 * n > MAX_DERIVED_DIM {
        return Err(Error::CapExceeded {
            dim: 2 * n,
            cap: MAX_DERIVED_DIM,
        });
    }
    let f = twist_iso(a, u)?;
    let field = a.field();
    let m = a.algebra().mult();
    let dim = 2 * n;
    let mut mult = Tensor3::zeros(field, (dim, dim, dim));
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                mult[(i, j, l)] = m[(i, j, l)].clone();
                // (a_i ∗ p_j)(a_l) = p_j(a_l f(a_i))
                let mut acc = field.zero();
                for r in 0..n {
                    let c = &f[(r, i)];
                    if !c.is_zero() {
                        acc += &(c * &m[(l, r, j)]);
                    }
                }
                mult[(i, n + j, n + l)] = acc;
                // (p_j a_i)(a_l) = p_j(a_i a_l)
                mult[(n + j, i, n + l)] = m[(i, l, j)].clone();
            }
        }
    }
    let mut unit = vector::zeros(field, dim);
    unit[..n].clone_from_slice(a.algebra().unit());
    let mut labels: Vec<String> = a.labels().to_vec();
    labels.extend(a.labels().iter().map(|l| format!("p_{l}")));
    let alg = AlgebraSC::new(labels, mult, unit)?;

    let hm = a.hopf().dim();
    let rho = a.coaction();
    let rho_dual = dual_coaction(a);
    let mut coaction = Tensor3::zeros(field, (dim, dim, hm));
    for i in 0..n {
        for j in 0..n {
            for k in 0..hm {
                coaction[(i, j, k)] = rho[(i, j, k)].clone();
                coaction[(n + i, n + j, k)] = rho_dual[(i, j, k)].clone();
            }
        }
    }
    let mut witness = vector::zeros(field, dim);
    witness[n..].clone_from_slice(a.algebra().unit());
    Ok(TrivialExtension {
        algebra: ComoduleAlgebraSC::new(alg, a.hopf().clone(), coaction)?,
        witness,
    })
}
