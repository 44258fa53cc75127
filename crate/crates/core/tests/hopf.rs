//! Hopf algebra layer: axiom checker, convolution algebra, antipode
//! inversion, dual-quasitriangular structures, dualisation.

use ncgauge_core::catalog::{fn_zn, kz2, kzn, kzn_dqt, sweedler, sweedler_generators};
use ncgauge_core::echelon::invert;
use ncgauge_core::hopf::{
    check_dqt, convolution_inverse, convolution_unit, convolve, dualize, find_hopf_isomorphism,
    is_hopf_isomorphism, trivial_dqt, Dqt, HopfAlgebra,
};
use ncgauge_core::linalg::{unit_vec, zero_vec, LinMap};
use ncgauge_core::par::ExecMode;
use ncgauge_core::Scalar;

const SEQ: ExecMode = ExecMode::Sequential;

fn vec_from(h: &HopfAlgebra, entries: &[(usize, i64)]) -> Vec<Scalar> {
    let mut v = zero_vec(h.dim());
    for (i, c) in entries {
        v[*i] = Scalar::from_int(*c);
    }
    v
}

#[test]
fn group_algebra_and_sweedler_pass_all_axioms() {
    for h in [kz2(), sweedler()] {
        let report = h.check_axioms(SEQ);
        assert!(report.all_passed(), "{report}");
    }
}

#[test]
fn corrupted_antipode_fails_with_witness_g() {
    // kZ2 with Sg = 1
    let h = kz2();
    let bad_antipode = LinMap::from_columns(
        h.space().clone(),
        h.space().clone(),
        vec![unit_vec(2, 0), unit_vec(2, 0)],
    );
    let bad = HopfAlgebra::new(h.algebra.clone(), h.coalgebra.clone(), bad_antipode);
    let report = bad.check_axioms(SEQ);
    assert!(!report.all_passed());
    let failure = report.first_failure().unwrap();
    assert!(failure.name.starts_with("hopf/antipode"));
    assert_eq!(failure.witness.as_ref().unwrap().element, "g");
}

#[test]
fn convolution_unit_is_neutral() {
    let h = kz2();
    let c = &h.coalgebra;
    let a = &h.algebra;
    let f = LinMap::from_columns(
        h.space().clone(),
        h.space().clone(),
        vec![vec_from(&h, &[(0, 3), (1, -1)]), vec_from(&h, &[(0, 2), (1, 5)])],
    );
    let eta_eps = convolution_unit(c, a);
    assert_eq!(convolve(c, a, &f, &eta_eps), f);
    assert_eq!(convolve(c, a, &eta_eps, &f), f);
}

#[test]
fn antipode_is_convolution_inverse_of_identity() {
    for h in [kz2(), sweedler()] {
        let id = LinMap::identity(h.space().clone());
        assert_eq!(
            convolve(&h.coalgebra, &h.algebra, &id, &h.antipode),
            convolution_unit(&h.coalgebra, &h.algebra)
        );
        let inv = convolution_inverse(&h.coalgebra, &h.algebra, &id, SEQ).unwrap();
        assert_eq!(inv, h.antipode);
    }
}

#[test]
fn sweedler_id_convolved_with_itself_on_x() {
    // Δx = x⊗1 + g⊗x, so (id*id)(x) = x·1 + g·x = x + gx
    let h = sweedler();
    let id = LinMap::identity(h.space().clone());
    let sq = convolve(&h.coalgebra, &h.algebra, &id, &id);
    assert_eq!(sq.column(2), vec_from(&h, &[(2, 1), (3, 1)]));
}

#[test]
fn convolution_inverse_of_unit_and_of_scalar_character() {
    let h = kz2();
    let eta_eps = convolution_unit(&h.coalgebra, &h.algebra);
    assert_eq!(
        convolution_inverse(&h.coalgebra, &h.algebra, &eta_eps, SEQ).unwrap(),
        eta_eps
    );
    // γ: kZ2 → k with γ(1)=1, γ(g)=λ has γ⁻¹(g) = 1/λ
    let k_alg = ncgauge_core::hopf::Algebra::ground_field();
    let lambda = Scalar::from_int(3);
    let gamma = LinMap::from_columns(
        h.space().clone(),
        k_alg.space().clone(),
        vec![vec![Scalar::one()], vec![lambda]],
    );
    let inv = convolution_inverse(&h.coalgebra, &k_alg, &gamma, SEQ).unwrap();
    assert_eq!(inv.column(1), vec![Scalar::rational(1, 3)]);
}

#[test]
fn noninvertible_character_has_no_convolution_inverse() {
    let h = kz2();
    let k_alg = ncgauge_core::hopf::Algebra::ground_field();
    let gamma = LinMap::from_columns(
        h.space().clone(),
        k_alg.space().clone(),
        vec![vec![Scalar::one()], vec![Scalar::zero()]],
    );
    assert!(convolution_inverse(&h.coalgebra, &k_alg, &gamma, SEQ).is_none());
}

#[test]
fn antipode_inverse_examples() {
    let h = kz2();
    assert_eq!(h.antipode_inverse(SEQ).unwrap(), h.antipode);

    // Sweedler: S⁻¹(x) = -xg = gx, and S²(x) = -x
    let h4 = sweedler();
    let s_inv = h4.antipode_inverse(SEQ).unwrap();
    assert_eq!(s_inv.column(2), vec_from(&h4, &[(3, 1)]));
    let s2 = h4.antipode.compose(&h4.antipode);
    assert_eq!(s2.column(2), vec_from(&h4, &[(2, -1)]));
    assert_ne!(s2, LinMap::identity(h4.space().clone()));

    let zero = HopfAlgebra::new(
        h4.algebra.clone(),
        h4.coalgebra.clone(),
        LinMap::zero(h4.space().clone(), h4.space().clone()),
    );
    assert!(zero.antipode_inverse(SEQ).is_err());
}

#[test]
fn dqt_on_cyclic_group_algebras_passes() {
    for n in [2usize, 3, 4] {
        let (h, dqt) = kzn_dqt(n, SEQ);
        let report = check_dqt(&h, &dqt, SEQ);
        assert!(report.all_passed(), "n={n}: {report}");
    }
}

#[test]
fn trivial_dqt_passes_on_commutative_cocommutative() {
    let h = kz2();
    let dqt = trivial_dqt(&h, SEQ);
    assert!(check_dqt(&h, &dqt, SEQ).all_passed());
}

#[test]
fn scaled_bicharacter_fails_with_witness() {
    // R(g⊗g) = 2 breaks R(g⊗g·g) = R(g⊗1) = 1 vs R(g⊗g)^2 = 4
    let h = kz2();
    let one = Scalar::one;
    let vals = vec![vec![one(), one()], vec![one(), Scalar::from_int(2)]];
    let dqt = Dqt::from_matrix(&h, vals, SEQ).unwrap();
    let report = check_dqt(&h, &dqt, SEQ);
    assert!(!report.all_passed());
    assert!(report
        .checks
        .iter()
        .any(|c| c.name.starts_with("dqt/bicharacter") && !c.passed()));
}

#[test]
fn double_dual_is_the_original_on_structure_constants() {
    for h in [kz2(), sweedler(), fn_zn(3)] {
        let dd = dualize(&dualize(&h));
        assert_eq!(dd.algebra.mult().rows(), h.algebra.mult().rows());
        assert_eq!(dd.coalgebra.comult().rows(), h.coalgebra.comult().rows());
        assert_eq!(dd.antipode.rows(), h.antipode.rows());
    }
}

#[test]
fn dual_of_kz2_is_isomorphic_to_kz2() {
    let h = kz2();
    let dual = dualize(&h);
    assert!(dual.check_axioms(SEQ).all_passed());
    let phi = find_hopf_isomorphism(&h, &dual, &[1], &[vec![0], vec![1]], 2)
        .expect("kZ2 is self-dual");
    assert!(is_hopf_isomorphism(&h, &dual, &phi));
}

#[test]
fn dual_of_sweedler_is_isomorphic_to_sweedler() {
    let h = sweedler();
    let dual = dualize(&h);
    assert!(dual.check_axioms(SEQ).all_passed());
    let (gens, monomials) = sweedler_generators();
    let phi =
        find_hopf_isomorphism(&h, &dual, &gens, &monomials, 2).expect("H4 is self-dual");
    assert!(is_hopf_isomorphism(&h, &dual, &phi));
    assert!(invert(&phi, SEQ).is_some());
}

#[test]
fn kzn_dual_is_function_algebra_shape() {
    // dual of kZn has the delta-function product table
    let d = dualize(&kzn(3));
    assert!(d.check_axioms(SEQ).all_passed());
    let f = fn_zn(3);
    assert_eq!(d.algebra.mult().rows(), f.algebra.mult().rows());
}
