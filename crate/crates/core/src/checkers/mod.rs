//! Frobenius and symmetric decisions for comodule algebras, and the
//! transfer of witnesses to smash products and coinvariants.

mod checks;
mod engine;
mod spaces;
mod transfer;

pub use checks::{
    check_coinvariants_transfer, check_frobenius_in_mh, check_plain, check_symmetric,
    hopf_symmetric_crosscheck, symmetric_form_report, verify_canonical_witness,
    CoinvariantsTransfer, HopfSymmetry, PlainKind, WitnessCheck,
};
pub use engine::{
    decide, decide_pencil, normalize_witness, CheckReport, DecideOptions, PencilOutcome, Verdict,
    DEFAULT_BUDGET, DEFAULT_SEED, RANDOM_TRIALS,
};
pub use spaces::{
    colinear_constraints, colinear_space, gram, largest_stable_in_common_kernel,
    largest_stable_subspace_in_kernel, plain, symmetric_space, twisted_trace_constraints,
    BilinearFormSC, Stability,
};
pub use transfer::{
    check_symmetric_transfer, transfer_witness_from_smash, transfer_witness_to_smash,
    PulledBackWitness, SmashWitness, SymmetricTransfer,
};

/// A linear functional on an algebra, in the dual basis.
pub type Functional = crate::exactlin::Vector;

#[cfg(test)]
mod tests;
