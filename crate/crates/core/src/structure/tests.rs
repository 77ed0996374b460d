use super::*;
use crate::constructions::{group_hopf, sweedler_h4, taft_algebra, FiniteGroup};
use crate::exactlin::{vector, Field};

const Q: Field = Field::Rational;

fn q(v: &[i64]) -> Vector {
    vector::from_i64(Q, v)
}

fn h4() -> HopfSC {
    sweedler_h4(Q).unwrap()
}

#[test]
fn h4_integrals_in_h() {
    let h = h4();
    assert_eq!(
        integrals(&h, Side::Left, Location::InH).unwrap().basis,
        vec![q(&[0, 0, 1, 1])]
    );
    assert_eq!(
        integrals(&h, Side::Right, Location::InH).unwrap().basis,
        vec![q(&[0, 0, 1, -1])]
    );
}

#[test]
fn h4_left_integral_on_h_is_p_cx() {
    let h = h4();
    let t = integrals(&h, Side::Left, Location::OnH).unwrap();
    assert_eq!(t.basis, vec![q(&[0, 0, 0, 1])]);
    // direct check: h^* T = h^*(1) T in H^*
    let d = h.dual();
    for i in 0..4 {
        let p = d.basis_vector(i);
        assert_eq!(
            d.mul(&p, t.generator()),
            vector::scale(&h.unit()[i], t.generator())
        );
    }
}

#[test]
fn kc2_integrals_and_pair() {
    let h = group_hopf(Q, &FiniteGroup::cyclic(2));
    assert_eq!(
        integrals(&h, Side::Left, Location::InH).unwrap().basis,
        vec![q(&[1, 1])]
    );
    assert_eq!(
        integrals(&h, Side::Right, Location::InH).unwrap().basis,
        vec![q(&[1, 1])]
    );
    let pair = distinguished_pair(&h).unwrap();
    assert_eq!(pair.alpha.coords(), h.counit());
    assert_eq!(pair.g, q(&[1, 0]));
    assert!(is_unimodular(&h).unwrap());
    assert!(is_cosemisimple(&h).unwrap());
}

#[test]
fn h4_distinguished_pair() {
    let h = h4();
    let pair = distinguished_pair(&h).unwrap();
    assert_eq!(pair.alpha.coords(), q(&[1, -1, 0, 0]).as_slice());
    assert_eq!(pair.g, q(&[0, 1, 0, 0]));
    assert!(h.is_grouplike(&pair.g));
    assert!(pair.alpha_inverse_on_right_integrals);
    // S(g) is the inverse of g
    assert_eq!(h.mul(&grouplike_inverse(&h, &pair.g), &pair.g), h.unit());
    assert!(!is_unimodular(&h).unwrap());
}

#[test]
fn kc2_over_f2_is_cosemisimple_but_not_semisimple() {
    let f2 = Field::prime(2).unwrap();
    let h = group_hopf(f2, &FiniteGroup::cyclic(2));
    let t = integrals(&h, Side::Left, Location::OnH).unwrap();
    assert_eq!(t.basis, vec![vector::from_i64(f2, &[1, 0])]);
    assert!(is_cosemisimple(&h).unwrap());
    assert!(!is_semisimple(&h).unwrap());
    assert!(is_semisimple(&group_hopf(Q, &FiniteGroup::cyclic(2))).unwrap());
}

#[test]
fn sovereign_characters() {
    let h = h4();
    assert!(is_sovereign_character(&h, &q(&[1, -1, 0, 0])));
    assert!(!is_sovereign_character(&h, h.counit()));
    let kc2 = group_hopf(Q, &FiniteGroup::cyclic(2));
    assert!(is_sovereign_character(&kc2, kc2.counit()));
    assert!(is_sovereign_character(&kc2, &q(&[1, -1])));
    assert!(!is_sovereign_character(&kc2, &q(&[1, 2])));
}

#[test]
fn theorem42_precondition() {
    assert!(check_theorem42_precondition(&h4()).unwrap());
    assert!(check_theorem42_precondition(&group_hopf(Q, &FiniteGroup::symmetric3())).unwrap());
    assert!(check_theorem42_precondition(&group_hopf(Q, &FiniteGroup::cyclic(2))).unwrap());
    // S(x) = -cx, S(cx) = -x makes S² = id, breaking the antipode axiom
    let h = h4();
    let mut s = h.antipode().clone();
    s[(2, 3)] = Q.from_i64(-1);
    let bad = HopfSC::new(h.algebra().clone(), h.coalgebra().clone(), s).unwrap();
    assert!(bad.is_involutory());
    assert!(!bad.validate().is_ok());
    assert!(!check_theorem42_precondition(&bad).unwrap());
}

#[test]
fn harpoons() {
    let kc2 = group_hopf(Q, &FiniteGroup::cyclic(2));
    let g = kc2.basis_vector(1);
    assert_eq!(harpoon(&kc2, Harpoon::LeftOnH, &q(&[0, 1]), &g), g);
    let h = h4();
    let eps = h.counit().to_vec();
    for i in 0..4 {
        let e = h.basis_vector(i);
        assert_eq!(harpoon(&h, Harpoon::LeftOnH, &eps, &e), e);
        assert_eq!(harpoon(&h, Harpoon::RightOnH, &eps, &e), e);
    }
    let p_c = q(&[0, 1, 0, 0]);
    assert_eq!(
        harpoon(&h, Harpoon::LeftOnH, &p_c, &h.basis_vector(2)),
        q(&[0, 0, 0, 0])
    );
    // x ↼ P_c = P_c(c) x + P_c(x) 1 = x
    assert_eq!(
        harpoon(&h, Harpoon::RightOnH, &p_c, &h.basis_vector(2)),
        h.basis_vector(2)
    );
    // (c ⇀ P_x)(k) = P_x(kc): nonzero only at k = cx, where cx·c = -x
    let p_x = q(&[0, 0, 1, 0]);
    assert_eq!(
        harpoon(&h, Harpoon::LeftOnDual, &h.basis_vector(1), &p_x),
        q(&[0, 0, 0, -1])
    );
    // (P_x ↼ c)(k) = P_x(ck): nonzero only at k = cx, where c·cx = x
    assert_eq!(
        harpoon(&h, Harpoon::RightOnDual, &h.basis_vector(1), &p_x),
        q(&[0, 0, 0, 1])
    );
}

#[test]
fn integral_identities_on_catalog_hopf_algebras() {
    let f7 = Field::prime(7).unwrap();
    for h in [
        group_hopf(Q, &FiniteGroup::cyclic(2)),
        group_hopf(Q, &FiniteGroup::cyclic(3)),
        group_hopf(Q, &FiniteGroup::symmetric3()),
        h4(),
        h4().dual(),
        taft_algebra(f7, 3, &f7.from_i64(2)).unwrap(),
    ] {
        let outcomes = verify_integral_identities(&h).unwrap();
        let names: Vec<&str> = outcomes.iter().map(|o| o.name.as_str()).collect();
        assert_eq!(names, IDENTITY_NAMES);
        for o in &outcomes {
            assert!(
                o.holds,
                "{} failed on {:?}: {:?}",
                o.name,
                h.labels(),
                o.failures
            );
        }
    }
}

#[test]
fn identities_detect_a_wrong_grouplike() {
    // deltat with g = 1 instead of c fails on H4
    let h = h4();
    let t = integrals(&h, Side::Left, Location::InH).unwrap();
    let d = h.coproduct(t.generator());
    let m = h.antipode_square();
    assert_ne!(m.mul(&d.transpose()).unwrap(), d);
}

#[test]
fn trivial_pair_under_involutory_unimodular() {
    for h in [
        group_hopf(Q, &FiniteGroup::symmetric3()),
        group_hopf(Q, &FiniteGroup::cyclic(3)),
    ] {
        assert!(
            h.is_involutory() && is_unimodular(&h).unwrap() && is_unimodular(&h.dual()).unwrap()
        );
        let pair = distinguished_pair(&h).unwrap();
        assert_eq!(pair.alpha.coords(), h.counit());
        assert_eq!(pair.g, h.unit());
    }
}

#[test]
fn taft_pair() {
    let f7 = Field::prime(7).unwrap();
    let t = taft_algebra(f7, 3, &f7.from_i64(2)).unwrap();
    let pair = distinguished_pair(&t).unwrap();
    assert!(pair.alpha_inverse_on_right_integrals);
    assert!(!is_unimodular(&t).unwrap());
    // α(g) = ω^{-1} = 4 and the distinguished grouplike is g itself, as for H4
    assert_eq!(
        pair.alpha.coords(),
        vector::from_i64(f7, &[1, 4, 2, 0, 0, 0, 0, 0, 0]).as_slice()
    );
    assert_eq!(pair.g, t.basis_vector(1));
    assert!(check_theorem42_precondition(&t).unwrap());
}
