use serde::Serialize;

use super::integrals::{distinguished_pair, integrals, Location, Side};
use super::{harpoon, Harpoon};
use crate::error::Result;
use crate::exactlin::Scalar;
use crate::hopfcore::HopfSC;

/// Names of the integral identities, in report order.
pub const IDENTITY_NAMES: [&str; 6] =
    ["deltat", "deltaT", "Trighth", "deltatright", "t1ht2", "S-2"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityOutcome {
    pub name: String,
    pub holds: bool,
    pub failures: Vec<String>,
}

impl IdentityOutcome {
    fn new(name: &str, failures: Vec<String>) -> IdentityOutcome {
        IdentityOutcome {
            name: name.to_string(),
            holds: failures.is_empty(),
            failures,
        }
    }
}

/// `Δ(t) = Σ S²(t_2) g^{-1} ⊗ t_1` for the left integral `t` in `h`.
fn delta_left_integral(h: &HopfSC, t: &[Scalar], g: &[Scalar]) -> bool {
    let d = h.coproduct(t);
    let g_inv = h.apply_antipode(g);
    let m = h
        .algebra()
        .right_mul_matrix(&g_inv)
        .mul(&h.antipode_square())
        .expect("square");
    m.mul(&d.transpose()).expect("square") == d
}

/// Checks the six identities relating integrals, `α`, `g` and `S²`.
pub fn verify_integral_identities(h: &HopfSC) -> Result<Vec<IdentityOutcome>> {
    let pair = distinguished_pair(h)?;
    let alpha = pair.alpha.coords();
    let alpha_inv = h.character_inverse(alpha);
    let g = &pair.g;
    let t_left = integrals(h, Side::Left, Location::InH)?;
    let t_right = integrals(h, Side::Right, Location::InH)?;
    let big_t = integrals(h, Side::Left, Location::OnH)?;
    let s2 = h.antipode_square();
    let alg = h.algebra();
    let labels = h.labels();
    let mut out = Vec::with_capacity(6);

    let fail = |ok: bool, what: &str| if ok { vec![] } else { vec![what.to_string()] };

    out.push(IdentityOutcome::new(
        "deltat",
        fail(
            delta_left_integral(h, t_left.generator(), g),
            "Δ(t) != Σ S²(t_2)g^{-1} ⊗ t_1",
        ),
    ));

    let dual = h.dual();
    out.push(IdentityOutcome::new(
        "deltaT",
        fail(
            delta_left_integral(&dual, big_t.generator(), alpha),
            "Δ(T) != Σ (T_2 S²)α^{-1} ⊗ T_1",
        ),
    ));

    let mut trighth = Vec::new();
    for i in 0..h.dim() {
        let e = h.basis_vector(i);
        let lhs = harpoon(h, Harpoon::RightOnDual, &e, big_t.generator());
        let y = harpoon(h, Harpoon::LeftOnH, &alpha_inv, &e);
        let rhs = harpoon(
            h,
            Harpoon::LeftOnDual,
            &s2.mul_vec(&y).expect("square"),
            big_t.generator(),
        );
        if lhs != rhs {
            trighth.push(format!("fails at h = {}", labels[i]));
        }
    }
    out.push(IdentityOutcome::new("Trighth", trighth));

    let tr = t_right.generator();
    let d_tr = h.coproduct(tr);
    let n_mat = alg.left_mul_matrix(g).mul(&s2).expect("square");
    let rhs = d_tr.transpose().mul(&n_mat.transpose()).expect("square");
    out.push(IdentityOutcome::new(
        "deltatright",
        fail(
            rhs == d_tr,
            "Δ(t) != Σ t_2 ⊗ g S²(t_1) for the right integral",
        ),
    ));

    let mut t1ht2 = Vec::new();
    for i in 0..h.dim() {
        let e = h.basis_vector(i);
        let lhs = d_tr
            .mul(&alg.left_mul_matrix(&e).transpose())
            .expect("square");
        let y = harpoon(h, Harpoon::LeftOnH, &alpha_inv, &e);
        let rhs = alg
            .left_mul_matrix(&h.apply_antipode(&y))
            .mul(&d_tr)
            .expect("square");
        if lhs != rhs {
            t1ht2.push(format!("fails at h = {}", labels[i]));
        }
    }
    out.push(IdentityOutcome::new("t1ht2", t1ht2));

    let mut s_minus_two = Vec::new();
    match s2.inverse() {
        None => s_minus_two.push("S² is singular".to_string()),
        Some(inv) => {
            for i in 0..h.dim() {
                let e = h.basis_vector(i);
                if super::integrals::sandwich(h, alpha, &alpha_inv, &e) != inv.column(i) {
                    s_minus_two.push(format!("fails at h = {}", labels[i]));
                }
            }
        }
    }
    out.push(IdentityOutcome::new("S-2", s_minus_two));
    Ok(out)
}

/// Convenience: all six identities hold.
pub fn integral_identities_hold(h: &HopfSC) -> Result<bool> {
    Ok(verify_integral_identities(h)?.iter().all(|o| o.holds))
}
