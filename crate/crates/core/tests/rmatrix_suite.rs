use num_rational::BigRational;
use proptest::prelude::*;
use uvt_core::combinatorics::{partitions, permutations, standard_tableaux, Permutation};
use uvt_core::hecke::{idempotent_inductive, HeckeElement};
use uvt_core::linalg::rref;
use uvt_core::rmatrix_sw::{
    check_braid, commutant_check, decompose, hecke_quadratic, project, r_matrix, rtilde, rtilde_untwisted,
    weight_compatible, weyl_dimension, HeckeAction,
};
use uvt_core::RatFunc;

fn point() -> (BigRational, BigRational) {
    (BigRational::new(3.into(), 2.into()), BigRational::new(5.into(), 7.into()))
}

fn rf(s: &str) -> RatFunc {
    s.parse().unwrap()
}

#[test]
fn hecke_type_matrix_satisfies_braid_relations() {
    for n in 2..=4 {
        for c in check_braid(&r_matrix(n), n, 3, 256).unwrap() {
            assert!(c.passed, "n = {n}: {} {:?}", c.name, c.detail);
        }
    }
    for c in check_braid(&r_matrix(2), 2, 4, 256).unwrap() {
        assert!(c.passed, "{}", c.name);
    }
}

#[test]
fn rtilde_violates_braid_relation() {
    for n in 2..=4 {
        assert!(check_braid(&rtilde(n), n, 3, 256).unwrap().iter().any(|c| !c.passed), "n = {n}");
    }
}

#[test]
fn untwisted_braiding_is_a_rescaled_hecke_matrix() {
    for n in 2..=4 {
        assert_eq!(rtilde_untwisted(n), r_matrix(n).scale(&rf("v/t")));
        assert!(check_braid(&rtilde_untwisted(n), n, 3, 256).unwrap().iter().all(|c| c.passed));
    }
}

#[test]
fn quadratic_relation_separates_the_two_matrices() {
    for n in 2..=4 {
        assert!(hecke_quadratic(&r_matrix(n)).is_zero(), "n = {n}");
        assert!(!hecke_quadratic(&rtilde(n)).is_zero(), "n = {n}");
    }
}

#[test]
fn torus_commutes_with_hecke_action() {
    let checks = commutant_check(2, 2, 256).unwrap();
    for c in checks.iter().filter(|c| c.name.contains('K')) {
        assert!(c.passed, "{}", c.name);
    }
}

#[test]
fn dimensions_add_up() {
    let (v, t) = point();
    for (n, k) in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2)] {
        let report = decompose(n, k, 256, (&v, &t)).unwrap();
        assert_eq!(report.total, report.expected, "n = {n}, k = {k}");
        assert!(report.certified);
        for c in &report.components {
            assert_eq!(c.dim, weyl_dimension(&c.shape, n), "{}", c.shape);
        }
    }
}

#[test]
fn ranks_are_constant_on_shapes_and_vanish_on_long_shapes() {
    let (v, t) = point();
    let (n, k) = (2, 3);
    let mut action = HeckeAction::new(n, k, 256).unwrap();
    for shape in partitions(k) {
        let ranks: Vec<usize> = standard_tableaux(&shape)
            .iter()
            .map(|tab| {
                let p = project(&idempotent_inductive(tab).unwrap(), &mut action, (&v, &t)).unwrap();
                assert!(weight_compatible(&p, n, k), "{tab}");
                assert_eq!(p.trace, RatFunc::from_int(p.rank as i64));
                p.rank
            })
            .collect();
        assert!(ranks.windows(2).all(|w| w[0] == w[1]), "{shape}: {ranks:?}");
        assert_eq!(ranks[0], weyl_dimension(&shape, n), "{shape}");
    }
}

#[test]
fn rank_two_images_span_the_expected_vectors() {
    let (v, t) = point();
    let mut action = HeckeAction::new(2, 2, 256).unwrap();
    let image = |text: &str, action: &mut HeckeAction| {
        let e = idempotent_inductive(&text.parse().unwrap()).unwrap();
        rref(&project(&e, action, (&v, &t)).unwrap().basis)
    };
    // coordinates in the basis v1v1, v1v2, v2v1, v2v2
    let symmetric = vec![
        vec![rf("1"), rf("0"), rf("0"), rf("0")],
        vec![rf("0"), rf("1"), rf("t/v"), rf("0")],
        vec![rf("0"), rf("0"), rf("0"), rf("1")],
    ];
    let antisymmetric = vec![vec![rf("0"), rf("1"), rf("-v*t"), rf("0")]];
    assert_eq!(image("[[1,2]]", &mut action), rref(&symmetric));
    assert_eq!(image("[[1],[2]]", &mut action), rref(&antisymmetric));
}

fn element_strategy(k: usize) -> impl Strategy<Value = HeckeElement> {
    let all = permutations(k);
    let coeff = prop::sample::select(vec!["0", "1", "-1", "v", "t", "1/v", "v-t"]);
    prop::collection::vec(coeff, all.len()).prop_map(move |cs| {
        let mut e = HeckeElement::zero(k);
        for (w, c) in all.iter().zip(cs) {
            e = e.add(&HeckeElement::term(w.clone(), rf(c))).unwrap();
        }
        e
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn action_is_multiplicative(a in element_strategy(3), b in element_strategy(3)) {
        let mut action = HeckeAction::new(2, 3, 256).unwrap();
        let lhs = action.image(&a.mul(&b).unwrap()).unwrap();
        let rhs = action.image(&a).unwrap().mul(&action.image(&b).unwrap());
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(action.basis_image(&Permutation::identity(3)).trace(), RatFunc::from_int(8));
    }
}
