//! Moving witnesses between `A` and `A # H^*`.

use serde::Serialize;

use super::checks::check_symmetric;
use super::engine::{CheckReport, DecideOptions};
use super::spaces::{colinear_constraints, gram, symmetric_constraints};
use crate::constructions::{smash_index, smash_product};
use crate::corep::ComoduleAlgebraSC;
use crate::error::{Error, Result};
use crate::exactlin::{vector, Scalar, Vector};
use crate::structure::{
    distinguished_pair, integrals, theorem42_precondition_with, Location, Side,
};

fn satisfies(c: &crate::exactlin::Matrix, v: &[Scalar]) -> bool {
    c.mul_vec(v).expect("shape").iter().all(Scalar::is_zero)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmashWitness {
    pub functional: Vector,
    pub colinear: bool,
    pub nondegenerate: bool,
    /// Membership in the `(H^*, g)`-symmetric space, checked when `λ` is
    /// `(H,α)`-symmetric and `H` meets the precondition of the transfer.
    pub symmetric: Option<bool>,
}

/// `λ̄(a # h^*) = λ(a) h^*(t)` with `t` a right integral in `H`.
pub fn transfer_witness_to_smash(a: &ComoduleAlgebraSC, lambda: &[Scalar]) -> Result<SmashWitness> {
    if !satisfies(&colinear_constraints(a), lambda) {
        return Err(Error::Precondition("λ is not colinear".into()));
    }
    let h = a.hopf();
    let m = h.dim();
    let t = integrals(h, Side::Right, Location::InH)?;
    let t = t.generator();
    let mut bar = vector::zeros(a.field(), a.dim() * m);
    for (i, l) in lambda.iter().enumerate() {
        for (j, tj) in t.iter().enumerate() {
            bar[smash_index(m, i, j)] = l * tj;
        }
    }
    let smash = smash_product(a)?;
    let pair = distinguished_pair(h)?;
    let symmetric = match symmetric_constraints(a, pair.alpha.coords()) {
        Ok(c) if satisfies(&c, lambda) && theorem42_precondition_with(h, &pair) => {
            Some(satisfies(&symmetric_constraints(&smash, &pair.g)?, &bar))
        }
        _ => None,
    };
    Ok(SmashWitness {
        colinear: satisfies(&colinear_constraints(&smash), &bar),
        nondegenerate: gram(smash.algebra(), &bar).is_nondegenerate(),
        symmetric,
        functional: bar,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PulledBackWitness {
    pub functional: Vector,
    pub in_symmetric_space: bool,
    pub nondegenerate: bool,
}

/// `μ̃(a) = μ(a # T)` with `T` a left integral on `H`.
pub fn transfer_witness_from_smash(
    a: &ComoduleAlgebraSC,
    mu: &[Scalar],
) -> Result<PulledBackWitness> {
    let h = a.hopf();
    let pair = distinguished_pair(h)?;
    if !theorem42_precondition_with(h, &pair) {
        return Err(Error::Precondition(
            "S² is not conjugation by g matching the α-sandwich".into(),
        ));
    }
    let smash = smash_product(a)?;
    if !satisfies(&symmetric_constraints(&smash, &pair.g)?, mu) {
        return Err(Error::Precondition(
            "μ is not in the (H^*, g)-symmetric space of the smash product".into(),
        ));
    }
    let m = h.dim();
    let big_t = integrals(h, Side::Left, Location::OnH)?;
    let big_t = big_t.generator();
    let tilde: Vector = (0..a.dim())
        .map(|i| {
            let mut acc = a.field().zero();
            for (j, tj) in big_t.iter().enumerate() {
                acc += &(tj * &mu[smash_index(m, i, j)]);
            }
            acc
        })
        .collect();
    Ok(PulledBackWitness {
        in_symmetric_space: satisfies(&symmetric_constraints(a, pair.alpha.coords())?, &tilde),
        nondegenerate: gram(a.algebra(), &tilde).is_nondegenerate(),
        functional: tilde,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetricTransfer {
    pub on_algebra: CheckReport,
    pub on_smash: CheckReport,
    pub agree: bool,
    pub to_smash: Option<SmashWitness>,
    pub round_trip: Option<PulledBackWitness>,
    pub from_smash: Option<PulledBackWitness>,
}

impl SymmetricTransfer {
    /// Verdicts agree and every transferred witness verified.
    pub fn holds(&self) -> bool {
        self.agree
            && self
                .to_smash
                .as_ref()
                .is_none_or(|w| w.colinear && w.nondegenerate && w.symmetric == Some(true))
            && self
                .round_trip
                .as_ref()
                .is_none_or(|w| w.in_symmetric_space)
            && self
                .from_smash
                .as_ref()
                .is_none_or(|w| w.in_symmetric_space && w.nondegenerate)
    }
}

/// `(H,α)`-symmetry of `A` against `(H^*,g)`-symmetry of `A # H^*`, with the
/// witnesses carried both ways.
pub fn check_symmetric_transfer(
    a: &ComoduleAlgebraSC,
    opts: &DecideOptions,
) -> Result<SymmetricTransfer> {
    let h = a.hopf();
    let pair = distinguished_pair(h)?;
    if !theorem42_precondition_with(h, &pair) {
        return Err(Error::Precondition(
            "S² is not conjugation by g matching the α-sandwich".into(),
        ));
    }
    let smash = smash_product(a)?;
    let on_algebra = check_symmetric(a, pair.alpha.coords(), opts)?;
    let on_smash = check_symmetric(&smash, &pair.g, opts)?;
    let (mut to_smash, mut round_trip, mut from_smash) = (None, None, None);
    if let Some(w) = &on_algebra.witness {
        let bar = transfer_witness_to_smash(a, w)?;
        round_trip = Some(transfer_witness_from_smash(a, &bar.functional)?);
        to_smash = Some(bar);
    }
    if let Some(mu) = &on_smash.witness {
        from_smash = Some(transfer_witness_from_smash(a, mu)?);
    }
    Ok(SymmetricTransfer {
        agree: on_algebra.is_yes() == on_smash.is_yes(),
        on_algebra,
        on_smash,
        to_smash,
        round_trip,
        from_smash,
    })
}
