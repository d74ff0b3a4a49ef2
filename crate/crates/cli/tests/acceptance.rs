//! The acceptance suite: one line per criterion with a pinned runtime budget.
//!
//! All comparisons are exact equalities in `Q(v, t)`.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use uvt_core::combinatorics::{f_lambda, partitions, standard_tableaux, Partition, Permutation, StandardTableau};
use uvt_core::hecke::{
    all_idempotents, idempotent_fusion_with, idempotent_inductive, jm_element, jm_expanded, jm_expanded_uniform,
    longest_square_t_exponent, psi, HeckeElement,
};
use uvt_core::linalg::{rref, SparseMatrix};
use uvt_core::pairing::{
    antipode_check, double_cross_relation, generator_table, rtilde_from_theta, theta_operator,
    verify_pairing_relations, DoubleConvention, FactorConvention, Half, HalfElement, MinusAntipode, Pairing, Word,
};
use uvt_core::rmatrix_sw::{
    check_braid, commutant_check, decompose, hecke_quadratic, project, r_matrix, rtilde, HeckeAction,
};
use uvt_core::uvt_rep::{
    basis_index, check_relations, natural_rep, tensor_rep, weight_eigenvalue, CartanDatum, Torus, Weight,
};
use uvt_core::{RatFunc, Result};

const SCHUR_WEYL_PAIRS: [(usize, usize); 6] = [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2)];
const CAP: usize = 256;

struct Outcome {
    passed: bool,
    summary: String,
}

impl Outcome {
    fn new(passed: bool, summary: impl Into<String>) -> Self {
        Outcome { passed, summary: summary.into() }
    }
}

fn rf(s: &str) -> RatFunc {
    s.parse().expect("valid expression")
}

fn point() -> (BigRational, BigRational) {
    (BigRational::new(3.into(), 2.into()), BigRational::new(5.into(), 7.into()))
}

fn tableau(text: &str) -> Result<StandardTableau> {
    text.parse()
}

fn t1_plus_scalar(t1: &str, c: &str) -> Result<HeckeElement> {
    HeckeElement::term(Permutation::simple(1, 2), rf(t1)).add(&HeckeElement::scalar(2, rf(c)))
}

fn rank_two_idempotents() -> Result<Outcome> {
    let row = idempotent_inductive(&tableau("[[1,2]]")?)?;
    let column = idempotent_inductive(&tableau("[[1],[2]]")?)?;
    let golden_row = include_str!("../../core/tests/golden/idempotent_row_k2.txt");
    let golden_column = include_str!("../../core/tests/golden/idempotent_column_k2.txt");
    let bytes_ok = format!("{row}\n") == golden_row && format!("{column}\n") == golden_column;
    let values_ok = row == t1_plus_scalar("v/(t*(1+v^2))", "v^2/(1+v^2)")?
        && column == t1_plus_scalar("-v/(t*(1+v^2))", "1/(1+v^2)")?;
    Ok(Outcome::new(bytes_ok && values_ok, format!("E(2) = {row}; E(1,1) = {column}")))
}

fn fusion_example() -> Result<Outcome> {
    let f = f_lambda(&"(2)".parse::<Partition>()?, 2)?;
    let evaluated = psi(2)?.evaluate_consecutive(&[rf("1"), rf("v^-2")])?;
    let ok = f == rf("t/(1+v^2)")
        && evaluated == t1_plus_scalar("v/t^2", "v^2/t")?
        && evaluated.scale(&f) == idempotent_inductive(&tableau("[[1,2]]")?)?;
    Ok(Outcome::new(ok, format!("f((2)) = {f}; evaluated product = {evaluated}")))
}

fn fusion_agreement() -> Result<Outcome> {
    let mut compared = 0;
    let mut mismatches = Vec::new();
    let mut per_k = Vec::new();
    for k in 1..=4 {
        let psi_k = psi(k)?;
        let shapes = partitions(k);
        let mut count = 0;
        for shape in &shapes {
            for t in standard_tableaux(shape) {
                count += 1;
                if idempotent_fusion_with(&psi_k, &t)? != idempotent_inductive(&t)? {
                    mismatches.push(t.to_string());
                }
            }
        }
        compared += count;
        per_k.push(format!("k={k}: {} shapes, {count} tableaux", shapes.len()));
    }
    let summary = if mismatches.is_empty() {
        format!("{compared} tableaux agree ({})", per_k.join("; "))
    } else {
        format!("mismatch at {}", mismatches.join(", "))
    };
    Ok(Outcome::new(mismatches.is_empty(), summary))
}

fn idempotent_algebra() -> Result<Outcome> {
    for k in 1..=4 {
        let all = all_idempotents(k)?;
        let mut sum = HeckeElement::zero(k);
        for (a, ea) in &all {
            for (b, eb) in &all {
                let p = ea.mul(eb)?;
                let ok = if a == b { &p == ea } else { p.is_zero() };
                if !ok {
                    return Ok(Outcome::new(false, format!("E_{a} E_{b} wrong at k = {k}")));
                }
            }
            sum = sum.add(ea)?;
        }
        if !sum.is_one() {
            return Ok(Outcome::new(false, format!("sum differs from 1 at k = {k}")));
        }
    }
    Ok(Outcome::new(true, "orthogonal and complete for k <= 4"))
}

fn relation_suite() -> Result<Outcome> {
    let mut count = 0;
    let mut modules = 0;
    for n in 2..=4usize {
        let mut k = 1;
        while n.pow(k) <= CAP {
            let g = if k == 1 { natural_rep(n)? } else { tensor_rep(n, k as usize, CAP)? };
            modules += 1;
            for c in check_relations(&g) {
                count += 1;
                if !c.passed {
                    return Ok(Outcome::new(false, format!("n={n} k={k}: {} {}", c.family, c.name)));
                }
            }
            k += 1;
        }
    }
    let mut corrupted = natural_rep(3)?;
    let mut d = corrupted.k_plus[0].diagonal_entries();
    d[0] = d[0].mul(&RatFunc::t());
    corrupted.k_plus[0] = SparseMatrix::diagonal(d);
    let detected = check_relations(&corrupted).iter().any(|c| !c.passed);
    Ok(Outcome::new(detected, format!("{count} identities over {modules} modules; corrupted K1 detected: {detected}")))
}

fn weight_formula() -> Result<Outcome> {
    let mut findings = Vec::new();
    let mut count = 0;
    for n in 2..=4 {
        let cartan = CartanDatum::new(n)?;
        let g = natural_rep(n)?;
        for j in 1..=n {
            let w = Weight::of_basis_vector(j, n);
            for i in 1..n {
                for (which, m) in [(Torus::K, &g.k_plus[i - 1]), (Torus::KPrime, &g.k_prime[i - 1])] {
                    count += 1;
                    let (formula, matrix) = (weight_eigenvalue(cartan, &w, i, which), m.get(j - 1, j - 1));
                    if formula != matrix {
                        findings.push(format!("n={n} v{j} {which:?}{i}: formula {formula}, matrix {matrix}"));
                    }
                }
            }
        }
    }
    let summary = if findings.is_empty() {
        format!("{count} eigenvalues agree")
    } else {
        format!("finding: {}", findings.join("; "))
    };
    Ok(Outcome::new(true, summary))
}

fn braid_relations() -> Result<Outcome> {
    let mut failures = Vec::new();
    let mut count = 0;
    for (n, k) in [(2, 3), (3, 3), (4, 3), (2, 4)] {
        for (label, m) in [("R", r_matrix(n)), ("R̃", rtilde(n))] {
            for c in check_braid(&m, n, k, CAP)? {
                count += 1;
                if !c.passed {
                    failures.push(format!("{label} n={n} k={k} {}", c.name));
                }
            }
        }
    }
    let r_ok = !failures.iter().any(|f| f.starts_with("R "));
    let summary = if failures.is_empty() {
        format!("{count} identities hold")
    } else {
        format!("R holds: {r_ok}; failing: {}", failures.join("; "))
    };
    Ok(Outcome::new(failures.is_empty(), summary))
}

fn hecke_quadratics() -> Result<Outcome> {
    let r_ok = (2..=4).all(|n| hecke_quadratic(&r_matrix(n)).is_zero());
    let control = (2..=4).all(|n| !hecke_quadratic(&rtilde(n)).is_zero());
    Ok(Outcome::new(r_ok && control, format!("R quadratic vanishes: {r_ok}; R̃ quadratic nonzero: {control}")))
}

fn commutant() -> Result<Outcome> {
    let mut failures = Vec::new();
    let mut total = 0;
    for (n, k) in SCHUR_WEYL_PAIRS {
        let checks = commutant_check(n, k, CAP)?;
        total += checks.len();
        let bad: BTreeSet<char> = checks
            .iter()
            .filter(|c| !c.passed)
            .filter_map(|c| c.name.split_whitespace().nth(1).and_then(|g| g.chars().next()))
            .collect();
        if !bad.is_empty() {
            let labels: Vec<String> = bad.iter().map(char::to_string).collect();
            failures.push(format!("({n},{k}) fails for {}", labels.join(",")));
        }
    }
    let summary = if failures.is_empty() {
        format!("{total} commutators vanish")
    } else {
        format!("{total} commutators, torus parts vanish; {}", failures.join("; "))
    };
    Ok(Outcome::new(failures.is_empty(), summary))
}

fn schur_weyl() -> Result<Outcome> {
    let (v, t) = point();
    let mut parts = Vec::new();
    let mut ok = true;
    for (n, k) in SCHUR_WEYL_PAIRS {
        let r = decompose(n, k, CAP, (&v, &t))?;
        ok &= r.total == r.expected && r.certified;
        parts.push(format!("({n},{k}) {}/{}", r.total, r.expected));
    }
    let mut action = HeckeAction::new(2, 2, CAP)?;
    let mut image = |text: &str| -> Result<Vec<Vec<RatFunc>>> {
        let e = idempotent_inductive(&tableau(text)?)?;
        Ok(rref(&project(&e, &mut action, (&v, &t))?.basis))
    };
    let symmetric = vec![
        vec![rf("1"), rf("0"), rf("0"), rf("0")],
        vec![rf("0"), rf("1"), rf("t/v"), rf("0")],
        vec![rf("0"), rf("0"), rf("0"), rf("1")],
    ];
    let antisymmetric = vec![vec![rf("0"), rf("1"), rf("-v*t"), rf("0")]];
    let spans = image("[[1,2]]")? == rref(&symmetric) && image("[[1],[2]]")? == rref(&antisymmetric);
    Ok(Outcome::new(ok && spans, format!("{}; n=2 k=2 spans match: {spans}", parts.join(", "))))
}

fn jm_suite() -> Result<Outcome> {
    let mut commute = true;
    for k in 2..=5 {
        let ys: Vec<HeckeElement> = (1..=k).map(|i| jm_element(i, k)).collect::<Result<_>>()?;
        for i in 1..=k {
            for j in i + 1..=k {
                commute &= ys[i - 1].mul(&ys[j - 1])? == ys[j - 1].mul(&ys[i - 1])?;
            }
            for l in (1..k).filter(|&l| l != i && l + 1 != i) {
                let t = HeckeElement::generator(l, k)?;
                commute &= ys[i - 1].mul(&t)? == t.mul(&ys[i - 1])?;
            }
        }
    }
    let mut uniform_breaks = Vec::new();
    let mut graded_ok = true;
    for i in 1..=5 {
        let y = jm_element(i, 5)?;
        if y != jm_expanded_uniform(i, 5)? {
            uniform_breaks.push(i);
        }
        graded_ok &= y == jm_expanded(i, 5)?;
    }
    let exponents: Vec<String> = (2..=5)
        .map(|i| match longest_square_t_exponent(i, 5) {
            Ok(Some(e)) => format!("i={i} measured t^{e} reference t^{}", 2 * (i - 1)),
            _ => format!("i={i} not a t-multiple"),
        })
        .collect();
    let summary = format!(
        "commutation {commute}; uniform t^-1 sum equals recursion except at i in {uniform_breaks:?}; \
         sum with t^-(2(i-m)-1) equals recursion: {graded_ok}; finding: {}",
        exponents.join(", ")
    );
    Ok(Outcome::new(commute && uniform_breaks.is_empty(), summary))
}

fn pairing_suite() -> Result<Outcome> {
    let mut notes = Vec::new();
    let table = generator_table(2)?;
    let value = |x: &str, y: &str| table.iter().find(|(a, b, _)| a == x && b == y).map(|(_, _, c)| c.clone());
    let generators = value("F1", "E1") == Some(rf("1/(1/v-v)"))
        && value("K1'", "K1") == Some(rf("v^2"))
        && value("B2", "K1") == Some(rf("t/v"))
        && value("K1'", "A2") == Some(rf("1/(v*t)"))
        && value("B2", "A2") == Some(rf("1"));
    notes.push(format!("generator values {generators}"));

    let p = Pairing::new(3)?;
    let mut expected = HalfElement::zero(Half::Minus, 3);
    expected.add_term(Word::letter(1, 3), &rf("1/v-v"));
    let dual = p.graded_component(&[1, 0])?.dual == vec![expected];
    notes.push(format!("dual basis at e1 {dual}"));

    let mut relations = true;
    for n in 2..=3 {
        for c in verify_pairing_relations(n, 3)? {
            relations &= c.passed;
            if !c.passed {
                notes.push(format!("n={n} {}", c.name));
            }
        }
        for i in 1..n {
            for j in 1..n {
                for c in double_cross_relation(i, j, n, DoubleConvention::Plain)? {
                    relations &= c.passed;
                    if !c.passed {
                        notes.push(format!("n={n} {}", c.name));
                    }
                }
            }
        }
    }
    notes.push(format!("Serre, peel orders, antipode and double expansion for n <= 3: {relations}"));
    let inverse = antipode_check(&p, MinusAntipode::Inverse)?;
    notes.push(format!("finding: inverse antipode reading holds: {}", inverse.passed));
    Ok(Outcome::new(generators && dual && relations, notes.join("; ")))
}

fn theta_reconstruction() -> Result<Outcome> {
    let mut ok = true;
    let mut notes = Vec::new();
    for n in 2..=3 {
        let diff = rtilde_from_theta(n, 2, FactorConvention::Swapped)?.first_difference(&rtilde(n));
        ok &= diff.is_none();
        notes.push(match diff {
            None => format!("n={n} equal"),
            Some((a, b, x, y)) => format!("n={n} entry ({a},{b}) reconstructed {x} vs {y}"),
        });
    }
    let theta = theta_operator(3, 2)?;
    let coeff = theta.get(basis_index(3, &[3, 1]), basis_index(3, &[1, 3]));
    notes.push(format!("finding: height-2 part neither cancels nor vanishes, v1⊗v3 -> v3⊗v1 coefficient {coeff}"));
    Ok(Outcome::new(ok, notes.join("; ")))
}

type Runner = fn() -> Result<Outcome>;

const CRITERIA: [(&str, u64, Runner); 13] = [
    ("rank-two idempotents against golden files", 1, rank_two_idempotents),
    ("fusion example at rank two", 1, fusion_example),
    ("fusion equals induction for k <= 4", 120, fusion_agreement),
    ("orthogonality and completeness for k <= 4", 120, idempotent_algebra),
    ("defining relations and negative control", 60, relation_suite),
    ("weight formula against torus matrices", 10, weight_formula),
    ("braid relations for R and R̃", 60, braid_relations),
    ("Hecke quadratic with R̃ control", 30, hecke_quadratics),
    ("Hecke action commutes with the quantum group", 300, commutant),
    ("Schur-Weyl dimension identity and spans", 300, schur_weyl),
    ("Jucys-Murphy suite", 60, jm_suite),
    ("pairing suite", 120, pairing_suite),
    ("R̃ from the canonical element", 120, theta_reconstruction),
];

fn main() -> ExitCode {
    let mut failed = 0;
    for (idx, (title, budget, run)) in CRITERIA.iter().enumerate() {
        let start = Instant::now();
        let outcome = run().unwrap_or_else(|e| Outcome::new(false, format!("error: {e}")));
        let elapsed = start.elapsed();
        let in_budget = elapsed <= Duration::from_secs(*budget);
        let passed = outcome.passed && in_budget;
        failed += usize::from(!passed);
        println!(
            "criterion {:>2}: {} {title}: {}{} [{:.2}s, limit {budget}s]",
            idx + 1,
            if passed { "PASS" } else { "FAIL" },
            outcome.summary,
            if in_budget { "" } else { "; over time budget" },
            elapsed.as_secs_f64(),
        );
    }
    println!("acceptance: {} of {} criteria pass", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
