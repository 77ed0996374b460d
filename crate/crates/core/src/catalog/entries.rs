use super::{CatalogEntry, Expectation, Expected, Observation, Outcome, Source};
use crate::checkers::{
    check_coinvariants_transfer, check_frobenius_in_mh, check_plain, check_symmetric,
    check_symmetric_transfer, hopf_symmetric_crosscheck, largest_stable_in_common_kernel, plain,
    symmetric_space, transfer_witness_to_smash, verify_canonical_witness, CheckReport,
    DecideOptions, PlainKind, Stability, Verdict,
};
use crate::constructions::{
    coinvariants, corner, dual_numbers, dual_numbers_h4_action, graded_to_comodule,
    graded_upper_triangular_extension, ground_field, group_hopf, h4_dual_numbers,
    h4_dual_numbers_extension, h4_dual_numbers_extension_over_h4, h4_self_duality,
    module_algebra_report, smash_element, smash_product, split_pair, super_trivext, sweedler_h4,
    taft_algebra, transport_coaction, ungraded_trivext, upper_triangular, FiniteGroup,
    GradedAlgebraSpec,
};
use crate::corep::{
    dual_comodule, dual_module_with_left_twist, f_twisted_dual, shift_s2, ComoduleAlgebraSC,
};
use crate::error::Result;
use crate::exactlin::{vector, Field, Matrix, Vector};
use crate::hopfcore::{AlgebraSC, HopfSC};
use crate::structure::{distinguished_pair, integral_identities_hold, theorem42_precondition_with};

use Expected::{Fails, Holds, No, Yes};
use Source::{Claim, Derived};

fn exp(check: &'static str, expected: Expected, source: Source) -> Expectation {
    Expectation {
        check,
        expected,
        source,
    }
}

const DUAL_ACTION: Source =
    Claim("the H*-action on the dual comodule satisfies (h*·a*)(a) = a*((h*S)·a)");
const FROBENIUS_TRANSFER: Source =
    Claim("if A is Frobenius in M^H then λ̄(a#h*) = λ(a)h*(t) makes A#H* Frobenius in M^{H*}");
const SYMMETRIC_TRANSFER: Source = Claim(
    "when S²(h) = g⁻¹hg = Σ α⁻¹(h_1)α(h_3)h_2, A is (H,α)-symmetric iff A#H* is (H*,g)-symmetric",
);
const REGULAR_FROBENIUS: Source = Claim("a finite dimensional Hopf algebra H is Frobenius in M^H");
const HOPF_SYMMETRIC: Source =
    Claim("H cosovereign by its distinguished character α is (H,α)-symmetric");
const DUAL_WITNESS: Source =
    Claim("λ(h*) = h*(t), t a right integral, makes H* an (H*,g)-symmetric algebra");
const COINVARIANTS: Source = Claim(
    "over cosemisimple H, Frobenius in M^H passes to A^coH; with H involutory and A (H,ε)-symmetric, A^coH is symmetric",
);
const IDENTITIES: Source =
    Derived("the integral identities are theorems; each is checked exactly on basis elements");

fn dual_identity(a: &ComoduleAlgebraSC) -> Observation {
    Observation::holds(
        "dual_comodule_identity",
        dual_comodule(a).eq1_holds,
        "checked on all basis triples",
    )
}

fn frobenius_transfer(a: &ComoduleAlgebraSC, opts: &DecideOptions) -> Result<Observation> {
    let rep = check_frobenius_in_mh(a, opts);
    let Some(w) = rep.witness else {
        return Ok(Observation::holds(
            "frobenius_witness_transfer",
            true,
            "hypothesis fails, nothing to transfer",
        ));
    };
    let bar = transfer_witness_to_smash(a, &w)?;
    let mut o = Observation::holds(
        "frobenius_witness_transfer",
        bar.colinear && bar.nondegenerate,
        format!(
            "λ̄ on the {}-dimensional smash product",
            bar.functional.len()
        ),
    );
    o.witness = Some(bar.functional);
    Ok(o)
}

fn symmetric_transfer(
    check: &'static str,
    a: &ComoduleAlgebraSC,
    opts: &DecideOptions,
) -> Result<Observation> {
    let t = check_symmetric_transfer(a, opts)?;
    Ok(Observation::holds(
        check,
        t.holds(),
        format!(
            "on A: {}, on A#H*: {}",
            t.on_algebra.verdict, t.on_smash.verdict
        ),
    ))
}

fn coinvariants_transfer(a: &ComoduleAlgebraSC, opts: &DecideOptions) -> Result<Observation> {
    let t = check_coinvariants_transfer(a, opts)?;
    Ok(Observation::holds(
        "coinvariants_transfer",
        t.holds,
        format!(
            "A^coH of dimension {}; Frobenius in M^H: {}; A^coH Frobenius: {}",
            t.coinvariants_dim,
            t.frobenius_in_mh,
            t.coinvariants_frobenius
                .map_or("n/a".to_string(), |v| v.to_string())
        ),
    ))
}

fn alpha(h: &HopfSC) -> Result<Vector> {
    Ok(distinguished_pair(h)?.alpha.coords().to_vec())
}

fn consistency(reports: &[&CheckReport]) -> Observation {
    let bad: Vec<String> = reports
        .iter()
        .flat_map(|r| {
            r.diagnostics
                .iter()
                .filter(|d| d.starts_with("inconsistent"))
                .cloned()
        })
        .collect();
    Observation::holds(
        "cross_checks",
        bad.is_empty(),
        if bad.is_empty() {
            "stabilizers, form identities and substitution checks agree with every verdict"
                .to_string()
        } else {
            bad.join("; ")
        },
    )
}

fn graded_kc2(field: Field) -> Result<ComoduleAlgebraSC> {
    let g = FiniteGroup::cyclic(2);
    let spec = GradedAlgebraSpec::new(group_hopf(field, &g).algebra().clone(), g, vec![0, 1])?;
    graded_to_comodule(&spec)
}

fn kc2_division(field: Field, opts: &DecideOptions) -> Result<Vec<Observation>> {
    let a = graded_kc2(field)?;
    let eps = a.hopf().counit().to_vec();
    let sign = vector::from_i64(field, &[1, -1]);
    let sym = check_symmetric(&a, &eps, opts)?;
    let signed = check_symmetric(&a, &sign, opts)?;
    let sign_space = symmetric_space(&a, &sign)?;
    let frob = check_frobenius_in_mh(&a, opts);
    Ok(vec![
        Observation::verdict("symmetric_counit", &sym),
        Observation::verdict("symmetric_sign", &signed),
        Observation::holds(
            "sign_space_zero",
            sign_space.is_empty() && signed.verdict == Verdict::NoCertified,
            format!("{} admissible functionals", sign_space.len()),
        ),
        Observation::verdict("frobenius_in_mh", &frob),
        dual_identity(&a),
        frobenius_transfer(&a, opts)?,
        symmetric_transfer("symmetric_transfer", &a, opts)?,
        coinvariants_transfer(&a, opts)?,
        consistency(&[&sym, &signed, &frob]),
    ])
}

fn h4_regular(field: Field, opts: &DecideOptions) -> Result<Vec<Observation>> {
    let h = sweedler_h4(field)?;
    let a = ComoduleAlgebraSC::regular(&h);
    let al = alpha(&h)?;
    let sym = check_symmetric(&a, &al, opts)?;
    let plain_sym = check_plain(h.algebra(), PlainKind::Symmetric, opts);
    let frob = check_frobenius_in_mh(&a, opts);
    let cross = hopf_symmetric_crosscheck(&h, opts)?;
    let id = Matrix::identity(field, 4);
    let untwisted = dual_module_with_left_twist(&a, &id, a.clone()).validate();
    let shifted = dual_module_with_left_twist(&a, &id, shift_s2(&a)).validate();
    let twisted = f_twisted_dual(&a, &al)?.validate();
    let pair = distinguished_pair(&h)?;
    Ok(vec![
        Observation::holds(
            "alpha",
            al == vector::from_i64(field, &[1, -1, 0, 0]) && pair.g == vector::unit(field, 4, 1),
            format!(
                "α = {}, g = {}",
                vector::display(&al),
                vector::display(&pair.g)
            ),
        ),
        Observation::verdict("symmetric_alpha", &sym),
        Observation::holds(
            "alpha_witness",
            sym.witness.as_deref() == Some(vector::unit(field, 4, 2).as_slice()),
            "λ(x) = 1, λ(1) = λ(c) = λ(cx) = 0",
        ),
        Observation::verdict("plain_symmetric", &plain_sym),
        Observation::verdict("frobenius_in_mh", &frob),
        Observation::holds(
            "unimodular",
            cross.unimodular,
            "left and right integrals in H",
        ),
        Observation {
            check: "s2_inner",
            outcome: Outcome::Verdict(cross.s2_inner),
            witness: cross.s2_inner_witness.clone(),
            note: "invertible a with S²(h)a = ah".into(),
        },
        Observation::holds(
            "crosscheck_agrees",
            cross.agrees && !cross.symmetric,
            "unimodular and S² inner versus the direct symmetric test",
        ),
        Observation::holds(
            "transfer_precondition",
            theorem42_precondition_with(&h, &pair),
            "S² = conjugation by g",
        ),
        dual_identity(&a),
        Observation::holds(
            "untwisted_dual_compatible",
            untwisted.is_ok(),
            untwisted.to_string().trim().to_string(),
        ),
        Observation::holds(
            "shifted_dual_compatible",
            shifted.is_ok(),
            "A* over A^(S²) with the plain left action",
        ),
        Observation::holds(
            "twisted_dual_compatible",
            twisted.is_ok(),
            "F(A*) in _A M^H_A",
        ),
        frobenius_transfer(&a, opts)?,
        symmetric_transfer("symmetric_transfer", &a, opts)?,
        consistency(&[&sym, &plain_sym, &frob]),
    ])
}

/// `u² = v² = 0`, `vu = -uv`, `ρ(u) = u⊗c - 1⊗cx`, `ρ(v) = v⊗c` on `E(A)` over `H4`.
fn dual_numbers_presentation(e: &ComoduleAlgebraSC) -> bool {
    let field = e.field();
    let alg = e.algebra();
    let (u, v) = (alg.basis_vector(1), alg.basis_vector(3));
    let uv = alg.mul(&u, &v);
    let relations = vector::is_zero(&alg.mul(&u, &u))
        && vector::is_zero(&alg.mul(&v, &v))
        && !vector::is_zero(&uv)
        && alg.mul(&v, &u) == vector::scale(&field.from_i64(-1), &uv);
    let mut rho_u = Matrix::zeros(field, 4, 4);
    rho_u[(1, 1)] = field.one();
    rho_u[(0, 3)] = field.from_i64(-1);
    let mut rho_v = Matrix::zeros(field, 4, 4);
    rho_v[(3, 1)] = field.one();
    relations && e.coact(&u) == rho_u && e.coact(&v) == rho_v
}

fn dual_numbers_extension(field: Field, opts: &DecideOptions) -> Result<Vec<Observation>> {
    let h = sweedler_h4(field)?;
    let al = alpha(&h)?;
    let over_dual = h4_dual_numbers_extension(field)?;
    let ext = h4_dual_numbers_extension_over_h4(field)?;
    let e = &ext.algebra;
    let sym = check_symmetric(e, &al, opts)?;
    let plain_sym = check_plain(e.algebra(), PlainKind::Symmetric, opts);
    let canon = verify_canonical_witness(&ext, &al)?;
    // every trace-like functional kills a two-sided ideal containing uv
    let flat = plain(e.algebra());
    let traces = symmetric_space(&flat, &[field.one()])?;
    let ideal = largest_stable_in_common_kernel(&flat, &traces, Stability::TWO_SIDED);
    let uv = e
        .algebra()
        .mul(&e.algebra().basis_vector(1), &e.algebra().basis_vector(3));
    let contains_uv = Matrix::from_columns(field, 4, &ideal).rank()
        == Matrix::from_columns(field, 4, &[ideal.clone(), vec![uv]].concat()).rank();
    let a_over_h4 = transport_coaction(&h4_dual_numbers(field)?, &h, &h4_self_duality(field))?;
    Ok(vec![
        Observation::holds(
            "module_algebra",
            module_algebra_report(&dual_numbers(field), &h, &dual_numbers_h4_action(field)).is_ok(),
            "k[X]/(X²) is an H4-module algebra",
        ),
        Observation::holds(
            "extension_valid",
            over_dual.algebra.validate().is_ok() && e.validate().is_ok(),
            "over H4* and over H4",
        ),
        Observation::holds(
            "presentation",
            dual_numbers_presentation(e),
            "u = X, v = p_X",
        ),
        Observation::verdict("symmetric_alpha", &sym),
        Observation::holds("canonical_witness", canon.holds(), "λ(a, a*) = a*(1)"),
        Observation::verdict("plain_symmetric", &plain_sym),
        Observation::holds(
            "trace_kernel_ideal",
            !ideal.is_empty() && contains_uv,
            format!(
                "largest two-sided ideal in every trace kernel has dimension {}",
                ideal.len()
            ),
        ),
        dual_identity(e),
        symmetric_transfer("symmetric_transfer", e, opts)?,
        symmetric_transfer("dual_numbers_symmetric_transfer", &a_over_h4, opts)?,
        consistency(&[&sym, &plain_sym]),
    ])
}

fn ground_field_h4(field: Field, opts: &DecideOptions) -> Result<Vec<Observation>> {
    let h = sweedler_h4(field)?;
    let k = ComoduleAlgebraSC::trivial(ground_field(field), h.clone());
    let frob = check_frobenius_in_mh(&k, opts);
    let sym = check_symmetric(&k, &alpha(&h)?, opts)?;
    Ok(vec![
        Observation::verdict("frobenius_in_mh", &frob),
        Observation::verdict("symmetric_alpha", &sym),
        symmetric_transfer("symmetric_transfer", &k, opts)?,
        frobenius_transfer(&k, opts)?,
    ])
}

fn trivext_observations(
    spec: &GradedAlgebraSpec,
    r: &AlgebraSC,
    opts: &DecideOptions,
) -> Result<Vec<Observation>> {
    let a = graded_to_comodule(spec)?;
    let smash = smash_product(&a)?;
    let plain_frob = check_plain(a.algebra(), PlainKind::Frobenius, opts);
    let plain_sym = check_plain(a.algebra(), PlainKind::Symmetric, opts);
    let graded = check_frobenius_in_mh(&a, opts);
    let smash_frob = check_frobenius_in_mh(&smash, opts);
    let (co, _) = coinvariants(&a)?;
    let co_frob = check_plain(&co, PlainKind::Frobenius, opts);
    Ok(vec![
        Observation::verdict("plain_frobenius", &plain_frob),
        Observation::verdict("plain_symmetric", &plain_sym),
        Observation::verdict("graded_frobenius", &graded),
        Observation::verdict("smash_frobenius", &smash_frob),
        Observation::verdict(
            "r_plain_frobenius",
            &check_plain(r, PlainKind::Frobenius, opts),
        ),
        Observation::verdict(
            "r_plain_symmetric",
            &check_plain(r, PlainKind::Symmetric, opts),
        ),
        Observation::verdict("coinvariants_plain_frobenius", &co_frob),
        coinvariants_transfer(&a, opts)?,
        dual_identity(&a),
        consistency(&[&plain_frob, &plain_sym, &graded, &smash_frob, &co_frob]),
    ])
}

fn super_trivext_r(field: Field, opts: &DecideOptions) -> Result<Vec<Observation>> {
    let r = upper_triangular(field);
    trivext_observations(&super_trivext(&r)?, &r, opts)
}

fn super_trivext_split(field: Field, opts: &DecideOptions) -> Result<Vec<Observation>> {
    let r = split_pair(field);
    trivext_observations(&super_trivext(&r)?, &r, opts)
}

fn super_trivext_ungraded(field: Field, opts: &DecideOptions) -> Result<Vec<Observation>> {
    let r = upper_triangular(field);
    trivext_observations(&ungraded_trivext(&r)?, &r, opts)
}

fn super_trivext_smash(field: Field, opts: &DecideOptions) -> Result<Vec<Observation>> {
    let r = upper_triangular(field);
    let a = graded_to_comodule(&super_trivext(&r)?)?;
    let smash = smash_product(&a)?;
    let n = a.dim();
    let e = smash_element(n, 2, a.algebra().unit(), &vector::unit(field, 2, 0));
    let (c, _) = corner(smash.algebra(), &e)?;
    let iso = c.mult() == r.mult() && c.unit() == r.unit();
    let sym = check_plain(a.algebra(), PlainKind::Symmetric, opts);
    let smash_sym = check_plain(smash.algebra(), PlainKind::Symmetric, opts);
    let corner_sym = check_plain(&c, PlainKind::Symmetric, opts);
    Ok(vec![
        Observation::verdict("plain_symmetric", &sym),
        Observation::holds("corner_is_r", iso, format!("corner basis {:?}", c.labels())),
        Observation::verdict("corner_plain_symmetric", &corner_sym),
        Observation::verdict("smash_plain_symmetric", &smash_sym),
        symmetric_transfer("symmetric_transfer", &a, opts)?,
        consistency(&[&sym, &smash_sym, &corner_sym]),
    ])
}

fn hopf_regular(h: HopfSC, opts: &DecideOptions) -> Result<Vec<Observation>> {
    let a = ComoduleAlgebraSC::regular(&h);
    let frob = check_frobenius_in_mh(&a, opts);
    let sym = check_symmetric(&a, &alpha(&h)?, opts)?;
    let k = ComoduleAlgebraSC::trivial(ground_field(h.field()), h.clone());
    let bar = transfer_witness_to_smash(&k, &[h.field().one()])?;
    Ok(vec![
        Observation::holds("valid", h.validate().is_ok(), "Hopf axioms"),
        Observation::holds(
            "integral_identities",
            integral_identities_hold(&h)?,
            "all six identities",
        ),
        Observation::verdict("frobenius_in_mh", &frob),
        Observation::verdict("symmetric_alpha", &sym),
        Observation::holds(
            "dual_witness",
            bar.colinear && bar.nondegenerate && bar.symmetric == Some(true),
            format!("λ = {}", vector::display(&bar.functional)),
        ),
        dual_identity(&a),
        consistency(&[&frob, &sym]),
    ])
}

fn graded_extension(field: Field, opts: &DecideOptions) -> Result<Vec<Observation>> {
    let ext = graded_upper_triangular_extension(field)?;
    let a = &ext.algebra;
    let eps = a.hopf().counit().to_vec();
    let (co, _) = coinvariants(a)?;
    let sym = check_symmetric(a, &eps, opts)?;
    let frob = check_frobenius_in_mh(a, opts);
    Ok(vec![
        Observation::holds(
            "coinvariants",
            co.labels() == ["E11", "E22", "p_E11", "p_E22"],
            format!("A^coH basis {:?}", co.labels()),
        ),
        Observation::verdict("frobenius_in_mh", &frob),
        Observation::verdict("symmetric_counit", &sym),
        Observation::holds(
            "canonical_witness",
            verify_canonical_witness(&ext, &eps)?.holds(),
            "λ(a, a*) = a*(1)",
        ),
        Observation::verdict(
            "coinvariants_plain_frobenius",
            &check_plain(&co, PlainKind::Frobenius, opts),
        ),
        Observation::verdict(
            "coinvariants_plain_symmetric",
            &check_plain(&co, PlainKind::Symmetric, opts),
        ),
        coinvariants_transfer(a, opts)?,
        symmetric_transfer("symmetric_transfer", a, opts)?,
        consistency(&[&sym, &frob]),
    ])
}

fn regular_expectations() -> Vec<Expectation> {
    vec![
        exp("valid", Holds, Derived("axiom validation")),
        exp("integral_identities", Holds, IDENTITIES),
        exp("frobenius_in_mh", Yes, REGULAR_FROBENIUS),
        exp("symmetric_alpha", Yes, HOPF_SYMMETRIC),
        exp("dual_witness", Holds, DUAL_WITNESS),
        exp("dual_comodule_identity", Holds, DUAL_ACTION),
        exp(
            "cross_checks",
            Holds,
            Derived("internal consistency of every report"),
        ),
    ]
}

fn trivext_expectations(
    graded_frobenius: Expected,
    r_frobenius: Expected,
    r_symmetric: Expected,
    graded_note: Source,
) -> Vec<Expectation> {
    vec![
        exp(
            "plain_frobenius",
            Yes,
            Claim("the trivial extension of an algebra is symmetric, hence Frobenius"),
        ),
        exp(
            "plain_symmetric",
            Yes,
            Claim("the trivial extension of an algebra is a symmetric algebra"),
        ),
        exp("graded_frobenius", graded_frobenius, graded_note),
        exp(
            "smash_frobenius",
            Yes,
            Claim("λ(a#p_x) = μ(a) makes A#(kC2)* Frobenius in M^{(kC2)*}"),
        ),
        exp(
            "r_plain_frobenius",
            r_frobenius,
            Derived("classical test on R"),
        ),
        exp(
            "r_plain_symmetric",
            r_symmetric,
            Derived("classical test on R"),
        ),
        exp(
            "coinvariants_plain_frobenius",
            if graded_frobenius == Yes {
                Yes
            } else {
                r_frobenius
            },
            Derived("A^coH is the degree-e part"),
        ),
        exp("coinvariants_transfer", Holds, COINVARIANTS),
        exp("dual_comodule_identity", Holds, DUAL_ACTION),
        exp(
            "cross_checks",
            Holds,
            Derived("internal consistency of every report"),
        ),
    ]
}

pub fn catalog_entries() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            name: "kc2_division",
            summary: "kC2 graded by C2 over kC2: symmetric for ε, not for p_e - p_g",
            excluded_characteristics: &[2],
            fixed_prime: None,
            expected: vec![
                exp("symmetric_counit", Yes, Claim("a commutative C2-graded division algebra such as kC2 is (H,ε)-symmetric")),
                exp("symmetric_sign", No, Claim("it is not (H,u)-symmetric for u = p_e - p_g: λ must be zero")),
                exp("sign_space_zero", Holds, Claim("λ(ab) = λ(b(u·a)) forces λ = 0")),
                exp("frobenius_in_mh", Yes, Derived("symmetric implies Frobenius in M^H")),
                exp("dual_comodule_identity", Holds, DUAL_ACTION),
                exp("frobenius_witness_transfer", Holds, FROBENIUS_TRANSFER),
                exp("symmetric_transfer", Holds, Claim("A is G-graded symmetric iff A#(kG)* is symmetric in M^{(kG)*} with respect to 1")),
                exp("coinvariants_transfer", Holds, COINVARIANTS),
                exp("cross_checks", Holds, Derived("internal consistency of every report")),
            ],
            run: kc2_division,
        },
        CatalogEntry {
            name: "h4_regular",
            summary: "Sweedler's H4 over itself",
            excluded_characteristics: &[2],
            fixed_prime: None,
            expected: vec![
                exp("alpha", Holds, Claim("α(c) = -1, α(x) = 0; g = c")),
                exp("symmetric_alpha", Yes, Claim("λ(x) = 1, λ(1) = λ(c) = λ(cx) = 0 makes H4 (H4,α)-symmetric")),
                exp("alpha_witness", Holds, Claim("the witness is the x-coordinate functional")),
                exp("plain_symmetric", No, Claim("H4 is not symmetric as a k-algebra: trace-like λ kill <x, cx>")),
                exp("frobenius_in_mh", Yes, REGULAR_FROBENIUS),
                exp("unimodular", Fails, Claim("the unimodularity condition fails for H4")),
                exp("s2_inner", Yes, Claim("for H4 the square of the antipode is inner")),
                exp("crosscheck_agrees", Holds, Claim("a Hopf algebra is symmetric iff unimodular with S² inner")),
                exp("transfer_precondition", Holds, Claim("H4 satisfies S²(h) = g⁻¹hg = Σ α⁻¹(h_1)α(h_3)h_2")),
                exp("dual_comodule_identity", Holds, DUAL_ACTION),
                exp("untwisted_dual_compatible", Fails, Derived("A* with its plain left action is not in _A M^H when S² ≠ id")),
                exp("shifted_dual_compatible", Holds, Claim("A* is an object of _{A^(S²)} M^H_A")),
                exp("twisted_dual_compatible", Holds, Claim("F(A*) is an object of _A M^H_A")),
                exp("frobenius_witness_transfer", Holds, FROBENIUS_TRANSFER),
                exp("symmetric_transfer", Holds, SYMMETRIC_TRANSFER),
                exp("cross_checks", Holds, Derived("internal consistency of every report")),
            ],
            run: h4_regular,
        },
        CatalogEntry {
            name: "dual_numbers_extension",
            summary: "E(k[X]/(X²)) over H4 with u = α",
            excluded_characteristics: &[2],
            fixed_prime: None,
            expected: vec![
                exp("module_algebra", Holds, Claim("c·X = -X, x·X = 1 make k[X]/(X²) an H4-module algebra")),
                exp("extension_valid", Holds, Claim("E(A) is a right H-comodule algebra")),
                exp("presentation", Holds, Claim("E(A) is generated by u, v with u² = v² = 0, vu = -uv, ρ(u) = u⊗c - 1⊗cx, ρ(v) = v⊗c")),
                exp("symmetric_alpha", Yes, Claim("E(A) is (H,α)-symmetric")),
                exp("canonical_witness", Holds, Claim("λ(a, a*) = a*(1) witnesses (H,u)-symmetry of E(A)")),
                exp("plain_symmetric", No, Claim("E(A) is not symmetric as an algebra: Ker λ contains a nonzero ideal")),
                exp("trace_kernel_ideal", Holds, Derived("the stabilizer of the common trace kernel contains uv")),
                exp("dual_comodule_identity", Holds, DUAL_ACTION),
                exp("symmetric_transfer", Holds, SYMMETRIC_TRANSFER),
                exp("dual_numbers_symmetric_transfer", Holds, SYMMETRIC_TRANSFER),
                exp("cross_checks", Holds, Derived("internal consistency of every report")),
            ],
            run: dual_numbers_extension,
        },
        CatalogEntry {
            name: "ground_field_h4",
            summary: "k with the trivial H4-coaction",
            excluded_characteristics: &[2],
            fixed_prime: None,
            expected: vec![
                exp("frobenius_in_mh", Yes, Claim("k is Frobenius in M^H with the trivial coaction")),
                exp("symmetric_alpha", Yes, Derived("f is the identity on k")),
                exp("symmetric_transfer", Holds, SYMMETRIC_TRANSFER),
                exp("frobenius_witness_transfer", Holds, Claim("λ(h*) = h*(t) is the transferred witness on k#H* = H*")),
            ],
            run: ground_field_h4,
        },
        CatalogEntry {
            name: "super_trivext",
            summary: "R ⊕ R* graded with A_e = R, A_g = R*, R upper triangular 2×2",
            excluded_characteristics: &[],
            fixed_prime: None,
            expected: trivext_expectations(No, No, No, Claim("the trivial extension is Frobenius but not graded Frobenius")),
            run: super_trivext_r,
        },
        CatalogEntry {
            name: "super_trivext_split",
            summary: "R ⊕ R* graded with A_g = R*, R = k × k",
            excluded_characteristics: &[],
            fixed_prime: None,
            expected: trivext_expectations(
                No,
                Yes,
                Yes,
                Derived("colinear λ vanish on A_g = R*, an ideal, so no choice of R is graded Frobenius"),
            ),
            run: super_trivext_split,
        },
        CatalogEntry {
            name: "super_trivext_ungraded",
            summary: "R ⊕ R* with the trivial grading, R upper triangular",
            excluded_characteristics: &[],
            fixed_prime: None,
            expected: trivext_expectations(Yes, No, No, Derived("trivially graded, so graded Frobenius is plain Frobenius")),
            run: super_trivext_ungraded,
        },
        CatalogEntry {
            name: "super_trivext_smash",
            summary: "A = R ⊕ R* graded, its smash product with (kC2)* and the corner at 1#p_e",
            excluded_characteristics: &[],
            fixed_prime: None,
            expected: vec![
                exp("plain_symmetric", Yes, Claim("A is symmetric")),
                exp("corner_is_r", Holds, Claim("(1#p_e)(A#(kC2)*)(1#p_e) = A_e#p_e ≅ R")),
                exp("corner_plain_symmetric", No, Derived("classical test on R")),
                exp("smash_plain_symmetric", No, Claim("the corner is not symmetric, so neither is A#(kC2)*")),
                exp("symmetric_transfer", Holds, SYMMETRIC_TRANSFER),
                exp("cross_checks", Holds, Derived("internal consistency of every report")),
            ],
            run: super_trivext_smash,
        },
        CatalogEntry {
            name: "hopf_regular_kc2",
            summary: "kC2 over itself",
            excluded_characteristics: &[],
            fixed_prime: None,
            expected: regular_expectations(),
            run: |f, o| hopf_regular(group_hopf(f, &FiniteGroup::cyclic(2)), o),
        },
        CatalogEntry {
            name: "hopf_regular_kc3",
            summary: "kC3 over itself",
            excluded_characteristics: &[],
            fixed_prime: None,
            expected: regular_expectations(),
            run: |f, o| hopf_regular(group_hopf(f, &FiniteGroup::cyclic(3)), o),
        },
        CatalogEntry {
            name: "hopf_regular_s3",
            summary: "kS3 over itself",
            excluded_characteristics: &[],
            fixed_prime: None,
            expected: regular_expectations(),
            run: |f, o| hopf_regular(group_hopf(f, &FiniteGroup::symmetric3()), o),
        },
        CatalogEntry {
            name: "hopf_regular_h4",
            summary: "H4 over itself",
            excluded_characteristics: &[2],
            fixed_prime: None,
            expected: regular_expectations(),
            run: |f, o| hopf_regular(sweedler_h4(f)?, o),
        },
        CatalogEntry {
            name: "hopf_regular_h4_dual",
            summary: "H4* over itself",
            excluded_characteristics: &[2],
            fixed_prime: None,
            expected: regular_expectations(),
            run: |f, o| hopf_regular(sweedler_h4(f)?.dual(), o),
        },
        CatalogEntry {
            name: "hopf_regular_taft3",
            summary: "the Taft algebra of dimension 9 over F_7 (ω = 2)",
            excluded_characteristics: &[],
            fixed_prime: Some(7),
            expected: regular_expectations(),
            run: |f, o| hopf_regular(taft_algebra(f, 3, &f.from_i64(2))?, o),
        },
        CatalogEntry {
            name: "graded_upper_triangular_extension",
            summary: "E(R) over kC2 with u = ε, R upper triangular graded by deg E12 = g",
            excluded_characteristics: &[2],
            fixed_prime: None,
            expected: vec![
                exp("coinvariants", Holds, Derived("A^coH = span(E11, E22, p_E11, p_E22)")),
                exp("frobenius_in_mh", Yes, Derived("(H,ε)-symmetric implies Frobenius in M^H")),
                exp("symmetric_counit", Yes, Claim("E(A) is (H,u)-symmetric")),
                exp("canonical_witness", Holds, Claim("λ(a, a*) = a*(1) witnesses (H,u)-symmetry of E(A)")),
                exp("coinvariants_plain_frobenius", Yes, COINVARIANTS),
                exp("coinvariants_plain_symmetric", Yes, COINVARIANTS),
                exp("coinvariants_transfer", Holds, COINVARIANTS),
                exp("symmetric_transfer", Holds, SYMMETRIC_TRANSFER),
                exp("cross_checks", Holds, Derived("internal consistency of every report")),
            ],
            run: graded_extension,
        },
    ]
}
