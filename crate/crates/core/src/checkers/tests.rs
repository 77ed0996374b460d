use proptest::prelude::*;

use super::*;
use crate::constructions::{
    graded_to_comodule, ground_field, group_algebra, group_hopf, h4_dual_numbers,
    h4_dual_numbers_extension_over_h4, sweedler_h4, upper_triangular, FiniteGroup,
    GradedAlgebraSpec,
};
use crate::corep::ComoduleAlgebraSC;
use crate::error::Error;
use crate::exactlin::{vector, Field, Matrix, Vector};
use crate::hopfcore::HopfSC;

const Q: Field = Field::Rational;

fn q(v: &[i64]) -> Vector {
    vector::from_i64(Q, v)
}

fn h4() -> HopfSC {
    sweedler_h4(Q).unwrap()
}

fn kc2() -> HopfSC {
    group_hopf(Q, &FiniteGroup::cyclic(2))
}

fn graded_kc2() -> ComoduleAlgebraSC {
    let spec = GradedAlgebraSpec::new(kc2().algebra().clone(), FiniteGroup::cyclic(2), vec![0, 1])
        .unwrap();
    graded_to_comodule(&spec).unwrap()
}

fn opts() -> DecideOptions {
    DecideOptions::default()
}

#[test]
fn colinear_spaces() {
    let r = upper_triangular(Q);
    assert_eq!(colinear_space(&plain(&r)).len(), 3);
    assert_eq!(
        colinear_space(&ComoduleAlgebraSC::regular(&h4())),
        vec![q(&[0, 0, 1, 0])]
    );
    let spec = GradedAlgebraSpec::new(r, FiniteGroup::cyclic(2), vec![0, 1, 0]).unwrap();
    let space = colinear_space(&graded_to_comodule(&spec).unwrap());
    assert_eq!(space, vec![q(&[1, 0, 0]), q(&[0, 0, 1])]);
}

#[test]
fn symmetric_spaces() {
    let r = ComoduleAlgebraSC::regular(&h4());
    assert!(symmetric_space(&r, &q(&[1, -1, 0, 0]))
        .unwrap()
        .contains(&q(&[0, 0, 1, 0])));
    assert!(symmetric_space(&graded_kc2(), &q(&[1, -1]))
        .unwrap()
        .is_empty());
    assert!(matches!(
        symmetric_space(&r, &q(&[1, 1, 0, 0])),
        Err(Error::NotSovereign(_))
    ));
    // trace functionals on upper triangular matrices vanish on E12
    let t = symmetric_space(&plain(&upper_triangular(Q)), &[Q.one()]).unwrap();
    assert_eq!(t, vec![q(&[1, 0, 0]), q(&[0, 0, 1])]);
}

#[test]
fn gram_matrices() {
    let a = kc2().algebra().clone();
    let g = gram(&a, &q(&[1, 1]));
    assert_eq!(g.gram, Matrix::from_i64(Q, &[&[1, 1], &[1, 1]]));
    assert!(!g.is_nondegenerate());
    let g = gram(&a, &q(&[0, 1]));
    assert_eq!(g.gram, Matrix::from_i64(Q, &[&[0, 1], &[1, 0]]));
    assert!(g.is_nondegenerate());
    assert_eq!(g.eval(&q(&[1, 0]), &q(&[0, 1])), Q.one());
    assert!(gram(h4().algebra(), &q(&[0, 0, 1, 0])).is_nondegenerate());
}

#[test]
fn stabilizers() {
    let r = ComoduleAlgebraSC::regular(&h4());
    assert!(largest_stable_subspace_in_kernel(&r, &q(&[0, 0, 1, 0]), Stability::RIGHT).is_empty());
    // a trace-like functional on H4 kills the ideal <x, cx>
    let v = largest_stable_subspace_in_kernel(
        &plain(h4().algebra()),
        &q(&[1, 3, 0, 0]),
        Stability::TWO_SIDED,
    );
    assert_eq!(v, vec![q(&[0, 0, 1, 0]), q(&[0, 0, 0, 1])]);
    assert_eq!(
        largest_stable_subspace_in_kernel(&r, &q(&[0, 0, 0, 0]), Stability::RIGHT_COMODULE).len(),
        4
    );
}

#[test]
fn decide_basics() {
    let a = h4().algebra().clone();
    let empty = decide(&a, &[], &opts());
    assert_eq!(empty.verdict, Verdict::NoCertified);
    assert!(empty.witness.is_none());
    let r = ComoduleAlgebraSC::regular(&h4());
    let space = symmetric_space(&r, &q(&[1, -1, 0, 0])).unwrap();
    let rep = decide(&a, &space, &opts());
    assert_eq!(rep.verdict, Verdict::Yes);
    assert_eq!(rep.witness, Some(q(&[0, 0, 1, 0])));
}

// det(c1 X + c2 Y + c3 Z) = 0 identically: a 3×3 skew pencil, no common null vector
fn skew_pencil(field: Field) -> Vec<Matrix> {
    vec![
        Matrix::from_i64(field, &[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 0]]),
        Matrix::from_i64(field, &[&[0, 0, 1], &[0, 0, 0], &[-1, 0, 0]]),
        Matrix::from_i64(field, &[&[0, 0, 0], &[0, 0, 1], &[0, -1, 0]]),
    ]
}

#[test]
fn pencil_certificates() {
    let a = Matrix::from_i64(Q, &[&[1, 0], &[0, 0]]);
    let b = Matrix::from_i64(Q, &[&[0, 0], &[1, 0]]);
    let out = decide_pencil(Q, &[a, b], &opts());
    assert_eq!(out.verdict, Verdict::NoCertified);
    assert!(out.note.contains("common right null vector"));

    let out = decide_pencil(Q, &skew_pencil(Q), &opts());
    assert_eq!(out.verdict, Verdict::NoCertified);
    assert!(out.note.contains("grid"), "{}", out.note);
    assert_eq!(out.trials, 4 + 32 + 64);
    let out = decide_pencil(
        Q,
        &skew_pencil(Q),
        &DecideOptions {
            seed: 1,
            budget: 10,
        },
    );
    assert_eq!(out.verdict, Verdict::NoProbabilistic);
    assert!(out.note.contains("Schwartz-Zippel"));
}

#[test]
fn small_field_enumeration() {
    let f3 = Field::prime(3).unwrap();
    let out = decide_pencil(f3, &skew_pencil(f3), &opts());
    assert_eq!(out.verdict, Verdict::NoCertified);
    assert!(out.note.contains("F_3"));
    let out = decide_pencil(f3, &skew_pencil(f3), &DecideOptions { seed: 0, budget: 5 });
    assert_eq!(out.verdict, Verdict::NoProbabilistic);
    assert!(out.note.contains("warning"));
}

#[test]
fn frobenius_in_mh() {
    for h in [
        kc2(),
        group_hopf(Q, &FiniteGroup::cyclic(3)),
        h4(),
        h4().dual(),
    ] {
        let rep = check_frobenius_in_mh(&ComoduleAlgebraSC::regular(&h), &opts());
        assert_eq!(rep.verdict, Verdict::Yes, "{:?}", h.labels());
        assert!(rep.is_consistent(), "{:?}", rep.diagnostics);
        let k = ComoduleAlgebraSC::trivial(ground_field(Q), h.clone());
        assert!(check_frobenius_in_mh(&k, &opts()).is_yes());
    }
}

#[test]
fn symmetric_examples() {
    let a = graded_kc2();
    let rep = check_symmetric(&a, &q(&[1, 1]), &opts()).unwrap();
    assert!(rep.is_yes() && rep.is_consistent());
    let rep = check_symmetric(&a, &q(&[1, -1]), &opts()).unwrap();
    assert_eq!(rep.verdict, Verdict::NoCertified);
    assert_eq!(rep.confidence_note, "constraint space is zero");

    let r = ComoduleAlgebraSC::regular(&h4());
    let rep = check_symmetric(&r, &q(&[1, -1, 0, 0]), &opts()).unwrap();
    assert_eq!(rep.witness, Some(q(&[0, 0, 1, 0])));
    assert!(rep.is_consistent(), "{:?}", rep.diagnostics);

    let e = h4_dual_numbers_extension_over_h4(Q).unwrap();
    let rep = check_symmetric(&e.algebra, &q(&[1, -1, 0, 0]), &opts()).unwrap();
    assert!(rep.is_yes() && rep.is_consistent());
    let canon = verify_canonical_witness(&e, &q(&[1, -1, 0, 0])).unwrap();
    assert!(canon.holds());
}

#[test]
fn plain_checks() {
    let rep = check_plain(h4().algebra(), PlainKind::Symmetric, &opts());
    assert_eq!(rep.verdict, Verdict::NoCertified);
    assert!(check_plain(h4().algebra(), PlainKind::Frobenius, &opts()).is_yes());
    let e = h4_dual_numbers_extension_over_h4(Q).unwrap();
    let rep = check_plain(e.algebra.algebra(), PlainKind::Symmetric, &opts());
    assert_eq!(rep.verdict, Verdict::NoCertified);
    assert!(
        rep.diagnostics
            .iter()
            .any(|d| d.contains("two-sided ideal span{p_1}")),
        "{:?}",
        rep.diagnostics
    );
    for g in [
        FiniteGroup::cyclic(2),
        FiniteGroup::cyclic(3),
        FiniteGroup::symmetric3(),
    ] {
        let rep = check_plain(&group_algebra(Q, &g), PlainKind::Symmetric, &opts());
        assert!(rep.is_yes());
        // λ = coefficient of e
        assert_eq!(rep.witness.unwrap(), vector::unit(Q, g.order(), 0));
    }
    let rep = check_plain(&upper_triangular(Q), PlainKind::Frobenius, &opts());
    assert_eq!(rep.verdict, Verdict::NoCertified);
}

#[test]
fn smash_transfers() {
    // A = k: λ̄(h^*) = h^*(t)
    let h = h4();
    let k = ComoduleAlgebraSC::trivial(ground_field(Q), h.clone());
    let bar = transfer_witness_to_smash(&k, &[Q.one()]).unwrap();
    assert_eq!(bar.functional, q(&[0, 0, 1, -1]));
    assert!(bar.colinear && bar.nondegenerate);
    assert_eq!(bar.symmetric, Some(true));

    let r = ComoduleAlgebraSC::regular(&h);
    let bar = transfer_witness_to_smash(&r, &q(&[0, 0, 1, 0])).unwrap();
    assert_eq!(bar.functional.len(), 16);
    assert!(bar.colinear && bar.nondegenerate);
    assert_eq!(bar.symmetric, Some(true));
    let back = transfer_witness_from_smash(&r, &bar.functional).unwrap();
    assert!(back.in_symmetric_space);

    assert!(matches!(
        transfer_witness_to_smash(&r, &q(&[1, 0, 0, 0])),
        Err(Error::Precondition(_))
    ));
    let zero = transfer_witness_from_smash(&r, &vector::zeros(Q, 16)).unwrap();
    assert!(zero.in_symmetric_space && !zero.nondegenerate);
}

#[test]
fn symmetric_transfer_on_h4_instances() {
    let h = h4();
    for a in [
        ComoduleAlgebraSC::trivial(ground_field(Q), h.clone()),
        ComoduleAlgebraSC::regular(&h),
        h4_dual_numbers_extension_over_h4(Q).unwrap().algebra,
    ] {
        let t = check_symmetric_transfer(&a, &opts()).unwrap();
        assert!(t.on_algebra.is_yes());
        assert!(t.holds(), "{:?}", a.labels());
    }
}

#[test]
fn symmetric_transfer_needs_the_precondition() {
    // k[X]/(X²) over H4^*: the dual of H4 also satisfies it
    let a = h4_dual_numbers(Q).unwrap();
    let t = check_symmetric_transfer(&a, &opts()).unwrap();
    assert!(t.holds());
}

#[test]
fn hopf_crosscheck() {
    let s = hopf_symmetric_crosscheck(&h4(), &opts()).unwrap();
    assert!(!s.unimodular);
    assert_eq!(s.s2_inner, Verdict::Yes);
    assert!(!s.symmetric);
    assert_eq!(s.plain_symmetric, Verdict::NoCertified);
    assert!(s.agrees);
    let s = hopf_symmetric_crosscheck(&group_hopf(Q, &FiniteGroup::symmetric3()), &opts()).unwrap();
    assert!(s.symmetric && s.agrees);
}

#[test]
fn coinvariant_transfer() {
    let t = check_coinvariants_transfer(&graded_kc2(), &opts()).unwrap();
    assert_eq!(t.coinvariants_dim, 1);
    assert_eq!(t.coinvariants_symmetric, Some(Verdict::Yes));
    assert!(t.holds);
    let r = ComoduleAlgebraSC::regular(&h4());
    assert!(matches!(
        check_coinvariants_transfer(&r, &opts()),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn seeds_do_not_change_verdicts() {
    let r = ComoduleAlgebraSC::regular(&h4());
    let a = check_frobenius_in_mh(
        &r,
        &DecideOptions {
            seed: 1,
            budget: 1000,
        },
    );
    let b = check_frobenius_in_mh(
        &r,
        &DecideOptions {
            seed: 99,
            budget: 1000,
        },
    );
    assert_eq!(a.verdict, b.verdict);
    let c = check_frobenius_in_mh(
        &r,
        &DecideOptions {
            seed: 1,
            budget: 1000,
        },
    );
    assert_eq!(a, c);
}

fn catalog_algebras() -> Vec<ComoduleAlgebraSC> {
    vec![
        graded_kc2(),
        ComoduleAlgebraSC::regular(&h4()),
        plain(&upper_triangular(Q)),
        h4_dual_numbers_extension_over_h4(Q).unwrap().algebra,
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn kernel_gram_equivalence(which in 0usize..4, coords in prop::collection::vec(-2i64..=2, 4)) {
        let a = &catalog_algebras()[which];
        let lambda = vector::from_i64(Q, &coords[..a.dim()]);
        let right = largest_stable_subspace_in_kernel(a, &lambda, Stability::RIGHT);
        prop_assert_eq!(right.is_empty(), gram(a.algebra(), &lambda).is_nondegenerate());
        let left = largest_stable_subspace_in_kernel(a, &lambda, Stability::LEFT);
        prop_assert_eq!(left.is_empty(), right.is_empty());
    }

    #[test]
    fn colinear_stabilizers_agree(which in 0usize..4, coords in prop::collection::vec(-2i64..=2, 4)) {
        let a = &catalog_algebras()[which];
        let space = colinear_space(a);
        let mut lambda = vector::zeros(Q, a.dim());
        for (v, c) in space.iter().zip(&coords) {
            vector::axpy(&mut lambda, &Q.from_i64(*c), v);
        }
        let right = largest_stable_subspace_in_kernel(a, &lambda, Stability::RIGHT);
        let sub = largest_stable_subspace_in_kernel(a, &lambda, Stability::RIGHT_COMODULE);
        prop_assert_eq!(right.is_empty(), sub.is_empty());
    }
}
