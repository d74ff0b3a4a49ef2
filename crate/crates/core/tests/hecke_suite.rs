use proptest::prelude::*;
use uvt_core::combinatorics::{f_lambda, partitions, permutations, standard_tableaux, Permutation, StandardTableau};
use uvt_core::hecke::{
    all_idempotents, baxterized, idempotent_fusion_with, idempotent_inductive, jm_element, jm_expanded,
    jm_expanded_uniform, longest_square_t_exponent, psi, HeckeElement,
};
use uvt_core::RatFunc;

fn rf(s: &str) -> RatFunc {
    s.parse().unwrap()
}

fn gen(i: usize, k: usize) -> HeckeElement {
    HeckeElement::generator(i, k).unwrap()
}

fn id_plus(k: usize, t1: &str, c: &str) -> HeckeElement {
    HeckeElement::term(Permutation::simple(1, k), rf(t1)).add(&HeckeElement::scalar(k, rf(c))).unwrap()
}

fn tableau(text: &str) -> StandardTableau {
    text.parse().unwrap()
}

#[test]
fn quadratic_braid_and_distant_relations() {
    for k in 2..=5 {
        for i in 1..k {
            let ti = gen(i, k);
            let lhs = ti.mul(&ti).unwrap();
            let rhs = ti.scale(&rf("(1/v-v)*t")).add(&HeckeElement::scalar(k, rf("t^2"))).unwrap();
            assert_eq!(lhs, rhs, "quadratic T{i}, k = {k}");
            assert!(ti.mul(&HeckeElement::generator_inverse(i, k).unwrap()).unwrap().is_one());
            for j in i + 1..k {
                let tj = gen(j, k);
                if j == i + 1 {
                    let a = ti.mul(&tj).unwrap().mul(&ti).unwrap();
                    let b = tj.mul(&ti).unwrap().mul(&tj).unwrap();
                    assert_eq!(a, b, "braid {i},{j}, k = {k}");
                } else {
                    assert_eq!(ti.mul(&tj).unwrap(), tj.mul(&ti).unwrap(), "commute {i},{j}, k = {k}");
                }
            }
        }
    }
}

#[test]
fn basis_products_follow_lengths() {
    let k = 4;
    for w in permutations(k) {
        for i in 1..k {
            let prod = HeckeElement::basis(w.clone()).mul_generator(i);
            if w.ascends_at(i) {
                assert_eq!(prod, HeckeElement::basis(w.times_simple(i)));
            } else {
                assert_eq!(prod.len(), 2, "{w} T{i}");
            }
        }
    }
}

#[test]
fn small_idempotents_match_golden_files() {
    let row = idempotent_inductive(&tableau("[[1,2]]")).unwrap();
    let column = idempotent_inductive(&tableau("[[1],[2]]")).unwrap();
    assert_eq!(format!("{row}\n"), include_str!("golden/idempotent_row_k2.txt"));
    assert_eq!(format!("{column}\n"), include_str!("golden/idempotent_column_k2.txt"));
    assert_eq!(row, id_plus(2, "v/(t*(1+v^2))", "v^2/(1+v^2)"));
    assert_eq!(column, id_plus(2, "-v/(t*(1+v^2))", "1/(1+v^2)"));
}

#[test]
fn fusion_at_rank_two() {
    let shape = "(2)".parse().unwrap();
    let f = f_lambda(&shape, 2).unwrap();
    assert_eq!(f, rf("t/(1+v^2)"));
    let evaluated = psi(2).unwrap().evaluate_consecutive(&[rf("1"), rf("v^-2")]).unwrap();
    assert_eq!(evaluated, id_plus(2, "v/t^2", "v^2/t"));
    assert_eq!(evaluated.scale(&f), idempotent_inductive(&tableau("[[1,2]]")).unwrap());
}

#[test]
fn fusion_agrees_with_induction() {
    for k in 1..=4 {
        let psi_k = psi(k).unwrap();
        for shape in partitions(k) {
            for t in standard_tableaux(&shape) {
                assert_eq!(idempotent_fusion_with(&psi_k, &t).unwrap(), idempotent_inductive(&t).unwrap(), "{t}");
            }
        }
    }
}

#[test]
fn idempotents_are_orthogonal_and_complete() {
    for k in 1..=4 {
        let all = all_idempotents(k).unwrap();
        let mut sum = HeckeElement::zero(k);
        for (a, ea) in &all {
            for (b, eb) in &all {
                let prod = ea.mul(eb).unwrap();
                if a == b {
                    assert_eq!(&prod, ea, "{a} squared");
                } else {
                    assert!(prod.is_zero(), "{a} times {b}");
                }
            }
            sum = sum.add(ea).unwrap();
        }
        assert!(sum.is_one(), "completeness at k = {k}");
    }
}

#[test]
fn jucys_murphy_elements_act_by_contents() {
    for k in 2..=4 {
        for (t, e) in all_idempotents(k).unwrap() {
            for (i, c) in t.contents().iter().enumerate() {
                let y = jm_element(i + 1, k).unwrap();
                assert_eq!(y.mul(&e).unwrap(), e.scale(c), "y{} on {t}", i + 1);
            }
        }
    }
}

#[test]
fn jucys_murphy_elements_commute() {
    for k in 2..=5 {
        let ys: Vec<HeckeElement> = (1..=k).map(|i| jm_element(i, k).unwrap()).collect();
        for i in 0..k {
            for j in i + 1..k {
                assert_eq!(ys[i].mul(&ys[j]).unwrap(), ys[j].mul(&ys[i]).unwrap(), "y{} y{}", i + 1, j + 1);
            }
            for l in 1..k {
                if l != i + 1 && l + 1 != i + 1 {
                    let t = gen(l, k);
                    assert_eq!(ys[i].mul(&t).unwrap(), t.mul(&ys[i]).unwrap(), "y{} T{l}", i + 1);
                }
            }
        }
    }
}

#[test]
fn jucys_murphy_closed_form() {
    for k in 2..=5 {
        for i in 1..=k {
            assert_eq!(jm_element(i, k).unwrap(), jm_expanded(i, k).unwrap(), "y{i}, k = {k}");
        }
    }
    // a single power of t in every summand only works up to the second element
    for i in 1..=2 {
        assert_eq!(jm_element(i, 4).unwrap(), jm_expanded_uniform(i, 4).unwrap());
    }
    assert_ne!(jm_element(3, 4).unwrap(), jm_expanded_uniform(3, 4).unwrap());
}

#[test]
fn longest_element_square_exponents() {
    for k in 2..=5 {
        for i in 1..=k {
            let measured = longest_square_t_exponent(i, k).unwrap();
            assert_eq!(measured, Some((i * (i - 1)) as i32), "i = {i}, k = {k}");
        }
    }
}

#[test]
fn baxterized_elements_satisfy_yang_baxter_and_unitarity() {
    let (x, y, z) = (RatFunc::u(1), RatFunc::u(2), RatFunc::u(3));
    let k = 3;
    let b = |i: usize, a: &RatFunc, c: &RatFunc| baxterized(i, k, a, c).unwrap();
    let lhs = b(1, &x, &y).mul(&b(2, &x, &z)).unwrap().mul(&b(1, &y, &z)).unwrap();
    let rhs = b(2, &y, &z).mul(&b(1, &x, &z)).unwrap().mul(&b(2, &x, &y)).unwrap();
    assert_eq!(lhs, rhs);
    let unit = b(1, &x, &y).mul(&b(1, &y, &x)).unwrap();
    let scalar = RatFunc::one() - rf("(1/v-v)^2") * &x * &y * (&x - &y).pow(-2).unwrap();
    assert_eq!(unit, HeckeElement::scalar(k, scalar));
}

fn element_strategy(k: usize) -> impl Strategy<Value = HeckeElement> {
    let all = permutations(k);
    let coeff = prop::sample::select(vec!["0", "1", "-2", "v", "t", "1/v", "v*t-1", "1/(1+t)"]);
    prop::collection::vec(coeff, all.len()).prop_map(move |cs| {
        let mut e = HeckeElement::zero(k);
        for (w, c) in all.iter().zip(cs) {
            e = e.add(&HeckeElement::term(w.clone(), rf(c))).unwrap();
        }
        e
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn multiplication_is_associative(a in element_strategy(3), b in element_strategy(3), c in element_strategy(3)) {
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn multiplication_distributes(a in element_strategy(3), b in element_strategy(3), c in element_strategy(3)) {
        let left = a.mul(&b.add(&c).unwrap()).unwrap();
        let right = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }
}
