use proptest::prelude::*;
use uvt_core::linalg::SparseMatrix;
use uvt_core::uvt_rep::{
    basis_indices, basis_weight, check_relations, natural_rep, tensor_product, tensor_rep, weight_decomposition,
    weight_eigenvalue, CartanDatum, Torus, Weight,
};
use uvt_core::RatFunc;

fn assert_all_hold(label: &str, g: &uvt_core::uvt_rep::GeneratorImages) {
    let checks = check_relations(g);
    assert!(!checks.is_empty());
    for c in checks {
        assert!(c.passed, "{label}: {} {} {:?}", c.family, c.name, c.detail);
    }
}

#[test]
fn natural_representation_satisfies_relations() {
    for n in 2..=4 {
        assert_all_hold(&format!("n = {n}"), &natural_rep(n).unwrap());
    }
}

#[test]
fn small_tensor_powers_satisfy_relations() {
    for (n, k) in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2)] {
        assert_all_hold(&format!("n = {n}, k = {k}"), &tensor_rep(n, k, 256).unwrap());
    }
}

#[test]
fn corrupted_torus_is_detected() {
    let mut g = natural_rep(3).unwrap();
    let d = g.k_plus[0].diagonal_entries();
    let mut bad = d.clone();
    bad[0] = bad[0].mul(&RatFunc::t());
    g.k_plus[0] = SparseMatrix::diagonal(bad);
    let failed: Vec<_> = check_relations(&g).into_iter().filter(|c| !c.passed).collect();
    assert!(failed.iter().any(|c| c.family == "R1"));
    assert!(failed.iter().any(|c| c.family == "R2"));
}

#[test]
fn size_cap_is_enforced() {
    assert!(tensor_rep(2, 9, 256).is_err());
    assert!(natural_rep(1).is_err());
}

#[test]
fn coproduct_is_coassociative() {
    for n in 2..=3 {
        let v = natural_rep(n).unwrap();
        let vv = tensor_rep(n, 2, 256).unwrap();
        let left = tensor_product(&vv, &v).unwrap();
        let right = tensor_product(&v, &vv).unwrap();
        assert_eq!(left, right, "n = {n}");
        assert_eq!(left, tensor_rep(n, 3, 256).unwrap(), "n = {n}");
    }
}

#[test]
fn weight_formula_matches_torus_matrices() {
    for n in 2..=4 {
        let cartan = CartanDatum::new(n).unwrap();
        let g = natural_rep(n).unwrap();
        for j in 1..=n {
            let w = Weight::of_basis_vector(j, n);
            for i in 1..n {
                assert_eq!(weight_eigenvalue(cartan, &w, i, Torus::K), g.k_plus[i - 1].get(j - 1, j - 1));
                assert_eq!(weight_eigenvalue(cartan, &w, i, Torus::KPrime), g.k_prime[i - 1].get(j - 1, j - 1));
            }
        }
    }
}

#[test]
fn weight_spaces_have_multinomial_sizes() {
    let (n, k) = (3, 3);
    let spaces = weight_decomposition(n, k, 256).unwrap();
    assert_eq!(spaces.values().map(Vec::len).sum::<usize>(), 27);
    assert_eq!(spaces.len(), 10);
    let sizes: Vec<usize> = spaces.values().map(Vec::len).collect();
    assert_eq!(sizes.iter().filter(|&&s| s == 6).count(), 1);
    assert_eq!(sizes.iter().filter(|&&s| s == 3).count(), 6);
    assert_eq!(sizes.iter().filter(|&&s| s == 1).count(), 3);
}

proptest! {
    #[test]
    fn raising_operators_shift_weight_by_epsilon(n in 2usize..=3, k in 1usize..=3, seed in any::<u64>()) {
        let g = tensor_rep(n, k, 256).unwrap();
        let idx = (seed % g.dim() as u64) as usize;
        let i = 1 + (seed / 7 % (n as u64 - 1)) as usize;
        let w = basis_weight(n, k, idx);
        let column = g.e[i - 1].column(idx);
        for (row, c) in column.iter().enumerate() {
            if !c.is_zero() {
                prop_assert_eq!(basis_weight(n, k, row), w.add(&Weight::epsilon(i, n)));
            }
        }
        let column = g.f[i - 1].column(idx);
        for (row, c) in column.iter().enumerate() {
            if !c.is_zero() {
                prop_assert_eq!(basis_weight(n, k, row), w.sub(&Weight::epsilon(i, n)));
            }
        }
        prop_assert_eq!(basis_indices(n, k, idx).len(), k);
    }
}
