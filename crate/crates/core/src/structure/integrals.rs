use serde::Serialize;

use super::{harpoon, Harpoon};
use crate::error::{Error, Result};
use crate::exactlin::{vector, Field, Matrix, Scalar, Vector};
use crate::hopfcore::{Character, HopfSC};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

/// Integrals in `H` are elements of `H`; integrals on `H` live in `H^*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Location {
    InH,
    OnH,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralSpace {
    pub side: Side,
    pub location: Location,
    pub basis: Vec<Vector>,
}

impl IntegralSpace {
    /// The normalized spanning integral.
    pub fn generator(&self) -> &[Scalar] {
        &self.basis[0]
    }
}

/// Stacks the rows of several equally wide matrices.
fn stack(field: Field, cols: usize, blocks: impl IntoIterator<Item = Matrix>) -> Matrix {
    let mut out = Matrix::empty_rows(field, cols);
    for b in blocks {
        out = out.vstack(&b).expect("equal widths");
    }
    out
}

/// Solves `ht = ε(h)t` (left) or `th = ε(h)t` (right) over all basis `h`.
/// Integrals on `H` are integrals in `dual(H)`.
pub fn integrals(h: &HopfSC, side: Side, location: Location) -> Result<IntegralSpace> {
    let owned;
    let target = match location {
        Location::InH => h,
        Location::OnH => {
            owned = h.dual();
            &owned
        }
    };
    let n = target.dim();
    let field = target.field();
    let alg = target.algebra();
    let id = Matrix::identity(field, n);
    let blocks = (0..n).map(|i| {
        let e = alg.basis_vector(i);
        let m = match side {
            Side::Left => alg.left_mul_matrix(&e),
            Side::Right => alg.right_mul_matrix(&e),
        };
        m.sub(&id.scale(&target.counit()[i])).expect("square")
    });
    let kernel = stack(field, n, blocks).kernel();
    if kernel.len() != 1 {
        return Err(Error::IntegralDimension {
            what: format!("{side:?} integrals {location:?}").to_lowercase(),
            dim: kernel.len(),
        });
    }
    Ok(IntegralSpace {
        side,
        location,
        basis: kernel
            .iter()
            .map(|v| vector::normalize_leading(v))
            .collect(),
    })
}

/// The modular character `α` and the distinguished grouplike `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistinguishedPair {
    pub alpha: Character,
    pub g: Vector,
    /// Whether `ht' = α^{-1}(h)t'` held for the right integral `t'` in `H`.
    pub alpha_inverse_on_right_integrals: bool,
}

/// Reads the scalar `c` with `w = c·v`, if any (`v` nonzero).
fn proportionality(w: &[Scalar], v: &[Scalar]) -> Option<Scalar> {
    let p = v.iter().position(|x| !x.is_zero())?;
    let c = w[p].checked_div(&v[p]).ok()?;
    (vector::scale(&c, v) == w).then_some(c)
}

/// `c_i` with `x·e_i = c_i x` (right) or `e_i·x = c_i x` (left) for every basis element.
fn eigencharacter(h: &HopfSC, x: &[Scalar], side: Side) -> Result<Vector> {
    (0..h.dim())
        .map(|i| {
            let e = h.basis_vector(i);
            let w = match side {
                Side::Right => h.mul(x, &e),
                Side::Left => h.mul(&e, x),
            };
            proportionality(&w, x).ok_or_else(|| {
                Error::Invalid(format!(
                    "integral is not an eigenvector of multiplication by {}",
                    h.labels()[i]
                ))
            })
        })
        .collect()
}

/// `α` from `th = α(h)t` for a left integral `t` in `H`, and `g` from
/// `Th^* = h^*(g)T` for a left integral `T` on `H`.
pub fn distinguished_pair(h: &HopfSC) -> Result<DistinguishedPair> {
    let t = integrals(h, Side::Left, Location::InH)?;
    let alpha = eigencharacter(h, t.generator(), Side::Right)?;
    let alpha = Character::new(h, alpha)?;

    let dual = h.dual();
    let big_t = integrals(h, Side::Left, Location::OnH)?;
    // T P_i = P_i(g) T = g_i T
    let g = eigencharacter(&dual, big_t.generator(), Side::Right)?;
    if !h.is_grouplike(&g) {
        return Err(Error::Invalid("extracted g is not grouplike".into()));
    }

    let right = integrals(h, Side::Right, Location::InH)?;
    let alpha_inv = alpha.inverse(h);
    let alpha_inverse_on_right_integrals = eigencharacter(h, right.generator(), Side::Left)
        .map(|c| c.as_slice() == alpha_inv.coords())
        .unwrap_or(false);
    Ok(DistinguishedPair {
        alpha,
        g,
        alpha_inverse_on_right_integrals,
    })
}

pub fn is_unimodular(h: &HopfSC) -> Result<bool> {
    let l = integrals(h, Side::Left, Location::InH)?;
    let r = integrals(h, Side::Right, Location::InH)?;
    Ok(l.generator() == r.generator())
}

/// Some left integral `T` on `H` has `T(1) != 0`.
pub fn is_cosemisimple(h: &HopfSC) -> Result<bool> {
    let t = integrals(h, Side::Left, Location::OnH)?;
    Ok(!vector::dot(t.generator(), h.unit()).is_zero())
}

/// Some left integral `t` in `H` has `ε(t) != 0`.
pub fn is_semisimple(h: &HopfSC) -> Result<bool> {
    let t = integrals(h, Side::Left, Location::InH)?;
    Ok(!vector::dot(h.counit(), t.generator()).is_zero())
}

/// `g^{-1} = S(g)`.
pub fn grouplike_inverse(h: &HopfSC, g: &[Scalar]) -> Vector {
    h.apply_antipode(g)
}

/// `Σ a(h_1) b(h_3) h_2` for functionals `a`, `b` on `H`.
pub fn sandwich(h: &HopfSC, a: &[Scalar], b: &[Scalar], x: &[Scalar]) -> Vector {
    let inner = harpoon(h, Harpoon::RightOnH, a, x);
    harpoon(h, Harpoon::LeftOnH, b, &inner)
}

/// `S^2(h) = Σ u^{-1}(h_1) u(h_3) h_2` on every basis element.
pub fn is_sovereign_character(h: &HopfSC, u: &[Scalar]) -> bool {
    if !h.verify_character(u) {
        return false;
    }
    let s2 = h.antipode_square();
    let u_inv = h.character_inverse(u);
    (0..h.dim()).all(|i| {
        let e = h.basis_vector(i);
        sandwich(h, &u_inv, u, &e) == s2.column(i)
    })
}

/// `S^2(h) = g^{-1} h g = Σ α^{-1}(h_1) α(h_3) h_2` for every basis `h`.
/// Data failing the Hopf axioms is reported as `false`.
pub fn check_theorem42_precondition(h: &HopfSC) -> Result<bool> {
    if !h.validate().is_ok() {
        return Ok(false);
    }
    let pair = distinguished_pair(h)?;
    Ok(theorem42_precondition_with(h, &pair))
}

pub(crate) fn theorem42_precondition_with(h: &HopfSC, pair: &DistinguishedPair) -> bool {
    let s2 = h.antipode_square();
    let g_inv = grouplike_inverse(h, &pair.g);
    let conj = (0..h.dim()).all(|i| {
        let e = h.basis_vector(i);
        h.mul(&h.mul(&g_inv, &e), &pair.g) == s2.column(i)
    });
    conj && is_sovereign_character(h, pair.alpha.coords())
}
