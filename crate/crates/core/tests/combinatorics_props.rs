use proptest::prelude::*;
use uvt_core::combinatorics::{partitions, permutations, standard_tableaux, Partition, Permutation, StandardTableau};

fn factorial(k: u64) -> u64 {
    (1..=k).product()
}

/// Hook lengths computed directly from arm and leg counts.
fn hooks_by_counting(p: &Partition) -> Vec<usize> {
    let conj = p.conjugate();
    p.cells().into_iter().map(|c| (p.part(c.row) - c.col) + (conj.part(c.col) - c.row) + 1).collect()
}

#[test]
fn partition_counts_match_the_partition_function() {
    let expected = [1, 1, 2, 3, 5, 7, 11, 15, 22];
    for (k, &count) in expected.iter().enumerate().skip(1) {
        assert_eq!(partitions(k).len(), count, "k = {k}");
    }
}

#[test]
fn tableaux_per_shape_match_hook_formula_and_enumeration() {
    for k in 1..=6 {
        let mut total = 0;
        for shape in partitions(k) {
            let listed = standard_tableaux(&shape);
            assert_eq!(listed.len() as u64, shape.syt_count(), "{shape}");
            total += listed.len();
        }
        let involutions = permutations(k).iter().filter(|w| w.compose(w).is_identity()).count();
        assert_eq!(total, involutions, "k = {k}");
    }
}

#[test]
fn rank_four_has_five_shapes_and_ten_tableaux() {
    let shapes = partitions(4);
    assert_eq!(shapes.len(), 5);
    assert_eq!(shapes.iter().map(|s| standard_tableaux(s).len()).sum::<usize>(), 10);
}

#[test]
fn reduced_words_have_length_many_letters() {
    for k in 1..=5 {
        for w in permutations(k) {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            assert_eq!(Permutation::from_word(&word, k), w);
        }
    }
}

fn partition_strategy() -> impl Strategy<Value = Partition> {
    (1usize..=8).prop_flat_map(|k| {
        let all = partitions(k);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

proptest! {
    #[test]
    fn squares_of_tableau_counts_sum_to_factorial(k in 1u64..=8) {
        let sum: u64 = partitions(k as usize).iter().map(|s| s.syt_count().pow(2)).sum();
        prop_assert_eq!(sum, factorial(k));
    }

    #[test]
    fn conjugation_is_an_involution(p in partition_strategy()) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().size(), p.size());
    }

    #[test]
    fn hook_multiset_is_conjugation_invariant(p in partition_strategy()) {
        let mut a = p.hook_lengths();
        let mut b = p.conjugate().hook_lengths();
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
        prop_assert_eq!(p.hook_lengths(), hooks_by_counting(&p));
    }

    #[test]
    fn removing_the_largest_entry_gives_a_tableau(p in partition_strategy(), pick in any::<prop::sample::Index>()) {
        let all = standard_tableaux(&p);
        let t = &all[pick.index(all.len())];
        let smaller = t.remove_largest();
        prop_assert_eq!(smaller.size() + 1, t.size());
        prop_assert!(StandardTableau::from_rows(smaller.rows().to_vec()).is_ok());
        let text = t.to_string();
        prop_assert_eq!(text.parse::<StandardTableau>().unwrap(), t.clone());
    }
}
