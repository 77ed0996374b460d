//! Nonsingularity search over a linear pencil of square matrices.
//!
//! A functional space `span(λ_1..λ_d)` gives the pencil `Σ c_i G(λ_i)` of Gram
//! matrices; `det` is a polynomial of total degree `n` in `c`. The search
//! either exhibits a nonsingular member, certifies that none exists, or gives
//! up with a Schwartz–Zippel bound.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::spaces::gram;
use crate::exactlin::{vector, Field, Matrix, Scalar, Vector};
use crate::hopfcore::AlgebraSC;

pub const DEFAULT_SEED: u64 = 2013;
pub const DEFAULT_BUDGET: u64 = 1_000_000;
pub const RANDOM_TRIALS: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Yes,
    NoCertified,
    NoProbabilistic,
}

impl Verdict {
    pub fn is_yes(self) -> bool {
        self == Verdict::Yes
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Yes => "yes",
            Verdict::NoCertified => "no_certified",
            Verdict::NoProbabilistic => "no_probabilistic",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DecideOptions {
    pub seed: u64,
    /// Maximum number of pencil evaluations spent on exhaustive certification.
    pub budget: u64,
}

impl Default for DecideOptions {
    fn default() -> DecideOptions {
        DecideOptions {
            seed: DEFAULT_SEED,
            budget: DEFAULT_BUDGET,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub verdict: Verdict,
    pub witness: Option<Vector>,
    /// Pencil members evaluated.
    pub trials: u64,
    pub confidence_note: String,
    pub diagnostics: Vec<String>,
}

impl CheckReport {
    pub fn is_yes(&self) -> bool {
        self.verdict.is_yes()
    }
}

/// Outcome of [`decide_pencil`]: `combination` holds the coefficients of a
/// nonsingular member when the verdict is yes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilOutcome {
    pub verdict: Verdict,
    pub combination: Option<Vector>,
    pub trials: u64,
    pub note: String,
}

fn member(field: Field, mats: &[Matrix], coeffs: &[Scalar]) -> Matrix {
    let n = mats[0].rows();
    let mut out = Matrix::zeros(field, n, n);
    for (m, c) in mats.iter().zip(coeffs) {
        if !c.is_zero() {
            out = out.add(&m.scale(c)).expect("square pencil");
        }
    }
    out
}

fn nonsingular(field: Field, mats: &[Matrix], coeffs: &[Scalar]) -> bool {
    member(field, mats, coeffs).is_invertible()
}

/// Digits of `idx` in base `radix`, least significant first.
fn grid_point(field: Field, mut idx: u64, radix: u64, d: usize) -> Vector {
    (0..d)
        .map(|_| {
            let digit = idx % radix;
            idx /= radix;
            field.from_i64(digit as i64)
        })
        .collect()
}

fn checked_pow(base: u64, exp: usize) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

/// Searches for a nonsingular member of `Σ c_i mats[i]`.
pub fn decide_pencil(field: Field, mats: &[Matrix], opts: &DecideOptions) -> PencilOutcome {
    let d = mats.len();
    if d == 0 {
        return PencilOutcome {
            verdict: Verdict::NoCertified,
            combination: None,
            trials: 0,
            note: "constraint space is zero".into(),
        };
    }
    let n = mats[0].rows();
    let mut trials: u64 = 0;
    let found = |c: Vector, trials: u64, how: &str| PencilOutcome {
        verdict: Verdict::Yes,
        combination: Some(c),
        trials,
        note: format!("nonsingular member found {how}; re-verified exactly"),
    };

    // basis members and their sum
    let mut candidates: Vec<Vector> = (0..d).map(|i| vector::unit(field, d, i)).collect();
    if d > 1 {
        candidates.push(vec![field.one(); d]);
    }
    for c in candidates {
        trials += 1;
        if nonsingular(field, mats, &c) {
            return found(c, trials, "among the basis members");
        }
    }

    // a common null vector makes every member singular
    let mut left = Matrix::empty_rows(field, n);
    let mut right = Matrix::empty_rows(field, n);
    for m in mats {
        left = left.vstack(&m.transpose()).expect("square");
        right = right.vstack(m).expect("square");
    }
    if !left.kernel().is_empty() {
        return PencilOutcome {
            verdict: Verdict::NoCertified,
            combination: None,
            trials,
            note: "the pencil has a common left null vector, so every member is singular".into(),
        };
    }
    if !right.kernel().is_empty() {
        return PencilOutcome {
            verdict: Verdict::NoCertified,
            combination: None,
            trials,
            note: "the pencil has a common right null vector, so every member is singular".into(),
        };
    }

    let s = std::cmp::max(16, 2 * n) as i64;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let points: Vec<Vector> = (0..RANDOM_TRIALS)
        .map(|_| {
            (0..d)
                .map(|_| field.from_i64(rng.random_range(-s..=s)))
                .collect()
        })
        .collect();
    let hit = points
        .par_iter()
        .position_first(|c| nonsingular(field, mats, c));
    if let Some(i) = hit {
        trials += i as u64 + 1;
        return found(
            points[i].clone(),
            trials,
            &format!("at random trial {}", i + 1),
        );
    }
    trials += RANDOM_TRIALS as u64;

    let p = field.characteristic();
    let small_field = p != 0 && p <= n as u64;
    let radix = if small_field { p } else { n as u64 + 1 };
    if let Some(total) = checked_pow(radix, d).filter(|&t| t <= opts.budget) {
        let hit = (0..total)
            .into_par_iter()
            .find_first(|&idx| nonsingular(field, mats, &grid_point(field, idx, radix, d)));
        trials += total;
        if let Some(idx) = hit {
            return found(
                grid_point(field, idx, radix, d),
                trials,
                "on the exhaustive grid",
            );
        }
        let note = if small_field {
            format!("every one of the {total} points of F_{p}^{d} gives a singular member")
        } else {
            format!(
                "det vanishes on the full grid {{0..{n}}}^{d} ({total} points); a nonzero polynomial of degree at most {n} in each variable cannot, so every member is singular"
            )
        };
        return PencilOutcome {
            verdict: Verdict::NoCertified,
            combination: None,
            trials,
            note,
        };
    }

    let width = 2 * s + 1;
    let mut note = format!(
        "{RANDOM_TRIALS} random trials with coordinates in {{-{s}..{s}}} found no nonsingular member; \
         Schwartz-Zippel bound n·trials/(2S+1) = {n}·{RANDOM_TRIALS}/{width}, \
         per independent trial n/(2S+1) = {n}/{width}"
    );
    if small_field {
        note.push_str(&format!(
            "; warning: over F_{p} with p <= {n} the grid certificate is unavailable and det may vanish on every F_{p}-point"
        ));
    } else {
        note.push_str(&format!(
            "; grid of {radix}^{d} points exceeds the budget of {}",
            opts.budget
        ));
    }
    PencilOutcome {
        verdict: Verdict::NoProbabilistic,
        combination: None,
        trials,
        note,
    }
}

/// Rescales so that the first nonzero coordinate is 1.
pub fn normalize_witness(v: &[Scalar]) -> Vector {
    vector::normalize_leading(v)
}

/// Looks for `λ` in `span(space)` with invertible Gram matrix `λ(a_i a_j)`.
pub fn decide(alg: &AlgebraSC, space: &[Vector], opts: &DecideOptions) -> CheckReport {
    let field = alg.field();
    let grams: Vec<Matrix> = space.iter().map(|l| gram(alg, l).gram).collect();
    let outcome = decide_pencil(field, &grams, opts);
    let mut diagnostics = vec![format!("constraint space dimension {}", space.len())];
    let witness = outcome.combination.as_ref().map(|c| {
        let mut w = vector::zeros(field, alg.dim());
        for (l, x) in space.iter().zip(c) {
            vector::axpy(&mut w, x, l);
        }
        normalize_witness(&w)
    });
    if let Some(w) = &witness {
        assert!(
            gram(alg, w).is_nondegenerate(),
            "witness re-verification failed"
        );
        diagnostics.push("witness Gram matrix verified invertible".into());
    }
    CheckReport {
        verdict: outcome.verdict,
        witness,
        trials: outcome.trials,
        confidence_note: outcome.note,
        diagnostics,
    }
}
