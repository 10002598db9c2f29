//! A registry of exact verification routines, one per statement.
//!
//! Each check runs in a single degree n and either passes or returns a
//! counterexample witness.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::class_functions::{kernel_dims, solomon_c, solomon_c_xi, ClassFunction};
use crate::combinatorics::statistics::{descent_set, peak_set};
use crate::combinatorics::{
    binomial, compositions, fibonacci, odd_compositions, odd_partitions, partitions, peak_sets, Composition,
    SubsetOfRail,
};
use crate::descent_peak::bases::{pi, tilde_xi, tilde_xi_n};
use crate::descent_peak::coproduct::{coassociative_on, coproduct, coproduct_xi, reciprocity_holds, tilde_xi_coproduct_holds};
use crate::descent_peak::relations::{adjacent_swap_check, classes_match_statistic, Relation};
use crate::descent_peak::transitions::{gamma_to_xi, tilde_delta, tilde_xi_expansion};
use crate::descent_peak::{basis_element, is_in_peak_algebra, tau_invariant_dimension, BasisId, BasisKind, DescentAlgElement};
use crate::error::{degree_cap, Result};
use crate::eulerian::{
    char_nk, eulerian_element, generated_by_pi_empty, idempotent_e, left_ideal_dimension, multiplication_table,
    peak_eulerian_dimension, peak_eulerian_idempotents, pi_coordinates, EulerianFamily,
};
use crate::free_lie::{gerade_null_check, gr_theorem_check, internal_criterion, membership_by_action, stability_check};
use crate::group_algebra::{AlgebraElement, Permutation};
use crate::lie_idempotents::{
    annihilated_by_xi, canonical, cyclic_characters, dynkin, idempotent_basis_check, is_lie_idempotent,
    klyachko_is_idempotent, peak_canonical, peak_canonical_closed_form, peak_canonical_gamma_form,
    peak_cycle_counts, peak_dynkin_closed_form, peak_lie_idempotent_solution, peak_variant, prop_simple_check,
    tableau_peak_counts, tilde_xi_times, LieSeries,
};
use crate::scalar::{int, rat, Rational};
use crate::structure_theory::{
    cartan_matrix, cartan_matrix_by_rank, decomposition_check, expected_nilpotency_index, is_hook,
    lambda_module_check, loewy_comparison, nilpotency_index, radical, unique_maximal_submodule_check,
};

/// The result of one check in one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
}

impl Outcome {
    pub fn passed(&self) -> bool {
        matches!(self, Outcome::Pass)
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Pass => f.write_str("pass"),
            Outcome::Fail(w) => write!(f, "FAIL: {w}"),
        }
    }
}

macro_rules! ensure {
    ($cond:expr, $($arg:tt)*) => {
        if !$cond {
            return Ok(Outcome::Fail(format!($($arg)*)));
        }
    };
}

/// Which degrees a check applies to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degrees {
    All,
    Odd,
}

/// A registered verification routine.
pub struct Check {
    pub id: &'static str,
    /// The verified statement, in plain mathematics.
    pub statement: &'static str,
    pub min_n: usize,
    /// The largest degree run by default.
    pub max_n: usize,
    pub degrees: Degrees,
    run: fn(usize) -> Result<Outcome>,
}

impl Check {
    pub fn applies(&self, n: usize) -> bool {
        n >= self.min_n && n <= self.max_n && (self.degrees == Degrees::All || n % 2 == 1)
    }

    pub fn run(&self, n: usize) -> Result<Outcome> {
        (self.run)(n)
    }

    /// The degrees run for a given `--n-max`, within the degree cap.
    pub fn degrees_up_to(&self, n_max: usize) -> Vec<usize> {
        (self.min_n..=n_max.min(degree_cap())).filter(|&n| self.applies(n)).collect()
    }

    /// Runs every applicable degree up to `n_max`, stopping at the first failure.
    pub fn run_up_to(&self, n_max: usize) -> Result<Vec<(usize, Outcome)>> {
        let mut out = Vec::new();
        for n in self.degrees_up_to(n_max) {
            let o = self.run(n)?;
            let failed = !o.passed();
            out.push((n, o));
            if failed {
                break;
            }
        }
        Ok(out)
    }
}

fn perm(kind: BasisKind, q: &Composition) -> Result<AlgebraElement<Rational>> {
    basis_element(&BasisId::composition(kind, q.clone())?)
}

fn perm_subset(kind: BasisKind, s: SubsetOfRail) -> Result<AlgebraElement<Rational>> {
    basis_element(&BasisId::subset(kind, s)?)
}

fn comp(parts: Vec<usize>) -> Composition {
    Composition::new(parts).expect("positive parts")
}

fn splits(n: usize) -> impl Iterator<Item = (Composition, Composition)> {
    (0..=n).flat_map(move |k| {
        let right = compositions(n - k);
        compositions(k).into_iter().flat_map(move |r| right.clone().into_iter().map(move |q| (r.clone(), q)))
    })
}

// descent and peak algebras

fn fibonacci_dimensions(n: usize) -> Result<Outcome> {
    let f = fibonacci(n) as usize;
    ensure!(peak_sets(n).len() == f, "{} peak sets, f_n = {f}", peak_sets(n).len());
    let d = tau_invariant_dimension(n)?;
    ensure!(d == f, "dim of the τ-invariants is {d}, f_n = {f}");
    Ok(Outcome::Pass)
}

fn left_ideal(n: usize) -> Result<Outcome> {
    let pis: Vec<(SubsetOfRail, AlgebraElement<Rational>)> =
        peak_sets(n).into_iter().map(|p| Ok((p, perm_subset(BasisKind::Pi, p)?))).collect::<Result<_>>()?;
    for q in compositions(n) {
        let delta = perm(BasisKind::Delta, &q)?;
        for (p, e) in &pis {
            ensure!(is_in_peak_algebra(&delta.inner(e)), "Δ^{{{}}} ∗ Π^{{{}}}", q.descent_set().key(), p.key());
        }
    }
    Ok(Outcome::Pass)
}

fn comb_char(n: usize) -> Result<Outcome> {
    for p in peak_sets(n) {
        ensure!(pi(&p).is_tau_invariant()?, "Π^{{{}}} is not τ-invariant", p.key());
    }
    for q in compositions(n) {
        let x = DescentAlgElement::xi(&q);
        ensure!(x.is_tau_invariant()? == x.is_peak(), "Ξ^{q}");
    }
    fibonacci_dimensions(n)
}

fn peak_set_of_descents(n: usize) -> Result<Outcome> {
    for p in Permutation::all(n) {
        ensure!(descent_set(&p).peaks_of_descents() == peak_set(&p), "π = {p}");
    }
    Ok(Outcome::Pass)
}

fn convolution(n: usize) -> Result<Outcome> {
    for (r, q) in splits(n) {
        let lhs = perm(BasisKind::Xi, &r)?.outer(&perm(BasisKind::Xi, &q)?);
        ensure!(lhs == perm(BasisKind::Xi, &r.concat(&q))?, "Ξ^{r} ⋆ Ξ^{q}");
    }
    Ok(Outcome::Pass)
}

fn vert_hor(n: usize) -> Result<Outcome> {
    for k in 1..n {
        let m = n - k;
        let lhs = perm(BasisKind::Delta, &Composition::ones(k))?.outer(&perm(BasisKind::Delta, &comp(vec![m]))?);
        let mut a = vec![1; k];
        a.push(m);
        let mut b = vec![1; k - 1];
        b.push(m + 1);
        let rhs = perm(BasisKind::Delta, &comp(a))? + perm(BasisKind::Delta, &comp(b))?;
        ensure!(lhs == rhs, "k = {k}, m = {m}");
    }
    Ok(Outcome::Pass)
}

fn gamma_xi(n: usize) -> Result<Outcome> {
    for q in odd_compositions(n) {
        let e = DescentAlgElement::from_xi_coords(n, &gamma_to_xi(&q)?)?;
        ensure!(e.to_algebra_element()? == perm(BasisKind::Gamma, &q)?, "Γ^{q}");
    }
    Ok(Outcome::Pass)
}

fn transition_tilde_xi(n: usize) -> Result<Outcome> {
    for r in compositions(n) {
        let x = tilde_xi_expansion(&r);
        let target = perm(BasisKind::TildeXi, &r)?;
        let forms = [
            ("Π", x.pi_element()),
            ("Γ over subsets", x.gamma_subset_element()),
            ("Γ over odd refinements", x.gamma_composition_element()),
            ("Ξ", x.xi_element()),
        ];
        for (name, e) in forms {
            ensure!(e.to_algebra_element()? == target, "Ξ̃^{r}, {name} form");
        }
    }
    Ok(Outcome::Pass)
}

fn tilde_delta_check(n: usize) -> Result<Outcome> {
    let t = perm(BasisKind::TildeXi, &comp(vec![n]))?;
    for q in compositions(n) {
        let lhs = perm(BasisKind::Delta, &q)?.inner(&t);
        ensure!(lhs == tilde_delta(&q.descent_set()).to_algebra_element()?, "D = {{{}}}", q.descent_set().key());
    }
    Ok(Outcome::Pass)
}

fn re_xi_tilde(n: usize) -> Result<Outcome> {
    let t = perm(BasisKind::TildeXi, &comp(vec![n]))?;
    for q in compositions(n) {
        ensure!(perm(BasisKind::Xi, &q)?.inner(&t) == perm(BasisKind::TildeXi, &q)?, "Ξ^{q} ∗ Ξ̃^{n}");
    }
    Ok(Outcome::Pass)
}

fn multi_tilde_xi(n: usize) -> Result<Outcome> {
    let t = perm(BasisKind::TildeXi, &comp(vec![n]))?;
    let reversal = perm(BasisKind::Delta, &Composition::ones(n))?;
    ensure!(reversal.inner(&t) == t, "Δ^{{1^n}} ∗ Ξ̃^n ≠ Ξ̃^n");
    let mut rhs = t.scale(&int(2));
    for k in 1..n {
        rhs = rhs + perm(BasisKind::TildeXi, &comp(vec![k, n - k]))?;
    }
    ensure!(t.inner(&t) == rhs, "Ξ̃^n ∗ Ξ̃^n");
    Ok(Outcome::Pass)
}

/// Whether a tensor lies in P ⊗ P: in each bidegree every row and every
/// column of its coefficient matrix in the Ξ ⊗ Ξ basis lies in P.
fn in_peak_tensor(t: &BTreeMap<(Composition, Composition), Rational>) -> bool {
    let mut by_degree: BTreeMap<(usize, usize), Vec<(&Composition, &Composition, &Rational)>> = BTreeMap::new();
    for ((a, b), c) in t {
        by_degree.entry((a.sum(), b.sum())).or_default().push((a, b, c));
    }
    by_degree.into_iter().all(|((k, m), entries)| {
        let mut rows: BTreeMap<&Composition, BTreeMap<Composition, Rational>> = BTreeMap::new();
        let mut cols: BTreeMap<&Composition, BTreeMap<Composition, Rational>> = BTreeMap::new();
        for (a, b, c) in entries {
            rows.entry(a).or_default().insert(b.clone(), c.clone());
            cols.entry(b).or_default().insert(a.clone(), c.clone());
        }
        let peak = |deg: usize, coords: &BTreeMap<Composition, Rational>| {
            DescentAlgElement::from_xi_coords(deg, coords).is_ok_and(|e| e.is_peak())
        };
        rows.values().all(|r| peak(m, r)) && cols.values().all(|c| peak(k, c))
    })
}

fn bialg_p(n: usize) -> Result<Outcome> {
    for (r, q) in splits(n) {
        if r.is_odd() && q.is_odd() {
            let lhs = perm(BasisKind::Gamma, &r)?.outer(&perm(BasisKind::Gamma, &q)?);
            ensure!(lhs == perm(BasisKind::Gamma, &r.concat(&q))?, "Γ^{r} ⋆ Γ^{q}");
        }
        let lhs = perm(BasisKind::TildeXi, &r)?.outer(&perm(BasisKind::TildeXi, &q)?);
        ensure!(lhs == tilde_xi(&r.concat(&q)).to_algebra_element()?, "Ξ̃^{r} ⋆ Ξ̃^{q}");
    }
    ensure!(tilde_xi_coproduct_holds(n), "Ξ̃^{n}↓ is not Σ Ξ̃^k ⊗ Ξ̃^(n−k)");
    for p in peak_sets(n) {
        ensure!(in_peak_tensor(&coproduct(&pi(&p))), "Π^{{{}}}↓ ∉ P ⊗ P", p.key());
    }
    Ok(Outcome::Pass)
}

fn bialg_d(n: usize) -> Result<Outcome> {
    for q in compositions(n) {
        ensure!(coassociative_on(&q), "coassociativity on Ξ^{q}");
    }
    // (Ξ^r ⋆ Ξ^q)↓ = Ξ^r↓ ⋆ Ξ^q↓
    for (r, q) in splits(n) {
        let mut prod = BTreeMap::new();
        for ((a, b), x) in coproduct_xi(&r) {
            for ((c, d), y) in coproduct_xi(&q) {
                let e = prod.entry((a.concat(&c), b.concat(&d))).or_insert_with(Rational::zero);
                *e += &x * &y;
            }
        }
        prod.retain(|_, c: &mut Rational| !c.is_zero());
        ensure!(prod == coproduct_xi(&r.concat(&q)), "(Ξ^{r} ⋆ Ξ^{q})↓");
    }
    Ok(Outcome::Pass)
}

fn reciprocity(n: usize) -> Result<Outcome> {
    for k in 0..=n {
        for r in compositions(n) {
            let gamma = DescentAlgElement::xi(&r);
            for p in compositions(k) {
                for q in compositions(n - k) {
                    let (a, b) = (DescentAlgElement::xi(&p), DescentAlgElement::xi(&q));
                    ensure!(reciprocity_holds(&a, &b, &gamma), "α = Ξ^{p}, β = Ξ^{q}, γ = Ξ^{r}");
                }
            }
        }
    }
    Ok(Outcome::Pass)
}

fn solomon_epimorphism(n: usize) -> Result<Outcome> {
    let qs = compositions(n);
    for p in &qs {
        for q in &qs {
            let prod = DescentAlgElement::xi(p).inner(&DescentAlgElement::xi(q));
            ensure!(solomon_c(&prod) == solomon_c_xi(p).kronecker(&solomon_c_xi(q)), "c(Ξ^{p} ∗ Ξ^{q})");
        }
    }
    for (r, q) in splits(n) {
        let prod = DescentAlgElement::xi(&r).outer(&DescentAlgElement::xi(&q));
        ensure!(solomon_c(&prod) == solomon_c_xi(&r).outer(&solomon_c_xi(&q)), "c(Ξ^{r} ⋆ Ξ^{q})");
    }
    let expected = (
        (1usize << n.saturating_sub(1)) - partitions(n).len(),
        fibonacci(n) as usize - odd_partitions(n).len(),
    );
    let found = kernel_dims(n);
    ensure!(found == expected, "kernel dimensions {found:?}, expected {expected:?}");
    let target = odd_partitions(n)
        .iter()
        .fold(ClassFunction::zero(n), |acc, p| acc.add(&ClassFunction::char_of(p).scale(&int(1 << p.len()))));
    ensure!(solomon_c(&tilde_xi_n(n)) == target, "c(Ξ̃^{n})");
    Ok(Outcome::Pass)
}

fn adjacent_swaps(n: usize) -> Result<Outcome> {
    Ok(match adjacent_swap_check(n)? {
        None => Outcome::Pass,
        Some((p, i)) => Outcome::Fail(format!("π = {p}, i = {i}")),
    })
}

fn relation(rel: Relation) -> impl Fn(usize) -> Result<Outcome> {
    move |n| {
        ensure!(classes_match_statistic(n, rel)?, "{rel:?} classes differ from the statistic fibers");
        Ok(Outcome::Pass)
    }
}

fn descent_relation(n: usize) -> Result<Outcome> {
    relation(Relation::Descent)(n)
}

fn peak_relation(n: usize) -> Result<Outcome> {
    relation(Relation::Peak)(n)
}

fn peak_number_relation(n: usize) -> Result<Outcome> {
    relation(Relation::PeakNumber)(n)
}

// Lie idempotents

fn lie_idempotents(n: usize) -> Result<Outcome> {
    let w = dynkin(n).scale(&rat(1, n as i64));
    ensure!(is_lie_idempotent(&w), "(1/n)ω_n");
    ensure!(is_lie_idempotent(&canonical(n)), "ρ_n");
    ensure!(annihilated_by_xi(&w) && annihilated_by_xi(&canonical(n)), "Ξ^q α ≠ 0 for some ℓ(q) > 1");
    Ok(Outcome::Pass)
}

fn klyachko(n: usize) -> Result<Outcome> {
    ensure!(klyachko_is_idempotent(n), "(1/n)κ_n(ε)");
    Ok(Outcome::Pass)
}

fn peak_lie(n: usize) -> Result<Outcome> {
    let w = dynkin(n).scale(&rat(1, n as i64));
    if n % 2 == 1 {
        for (name, a) in [("(1/2n)ω̃_n", peak_variant(&w)?), ("(1/2)ρ̃_n", peak_variant(&canonical(n))?)] {
            ensure!(is_lie_idempotent(&a) && a.is_peak(), "{name}");
        }
    } else {
        ensure!(tilde_xi_times(&w).is_zero(), "ω_nΞ̃^n ≠ 0");
        ensure!(peak_canonical(n).is_zero(), "ρ̃_n ≠ 0");
    }
    Ok(Outcome::Pass)
}

fn when_peak_lie(n: usize) -> Result<Outcome> {
    let sol = peak_lie_idempotent_solution(n);
    ensure!(sol.is_some() == (n % 2 == 1), "solvability in degree {n}");
    Ok(Outcome::Pass)
}

fn peak_dynkin(n: usize) -> Result<Outcome> {
    let target = dynkin(n).inner(&tilde_xi_n(n)).scale(&rat(1, 2 * n as i64));
    ensure!(peak_dynkin_closed_form(n)? == target, "closed form of (1/2n)ω_nΞ̃^n");
    Ok(Outcome::Pass)
}

fn peak_canon(n: usize) -> Result<Outcome> {
    let rt = canonical(n).inner(&tilde_xi_n(n));
    ensure!(peak_canonical_closed_form(n)? == rt.scale(&rat(1, 2)), "closed form of (1/2)ρ_nΞ̃^n");
    ensure!(peak_canonical_gamma_form(n) == rt, "Γ form of ρ̃_n");
    Ok(Outcome::Pass)
}

fn high_lie_basis(n: usize) -> Result<Outcome> {
    ensure!(idempotent_basis_check(&LieSeries::default(), n), "γ_q, q odd, do not form a basis of P_n");
    Ok(Outcome::Pass)
}

fn simple(n: usize) -> Result<Outcome> {
    for d in (1..=n).filter(|d| n % d == 0) {
        ensure!(prop_simple_check(d, n / d, &dynkin(d)), "d = {d}, k = {}", n / d);
    }
    Ok(Outcome::Pass)
}

fn peak_noncyclic(n: usize) -> Result<Outcome> {
    let c = cyclic_characters(n)?;
    ensure!(c.left_ideal, "K̃_n is not a left ideal");
    ensure!(c.multiplication_rule, "multiplication rule");
    ensure!(c.symmetric, "M̃_i ≠ M̃_(n−i)");
    ensure!(c.factorization, "factorization of κ̃_n");
    Ok(Outcome::Pass)
}

fn comb_cor_1(n: usize) -> Result<Outcome> {
    for row in peak_cycle_counts(n)? {
        ensure!(row.holds(), "{row:?}");
    }
    Ok(Outcome::Pass)
}

fn comb_cor_2(n: usize) -> Result<Outcome> {
    let rows = tableau_peak_counts(n)?;
    for r in &rows {
        ensure!(r.holds(n), "{r:?}");
    }
    let e: usize = rows.iter().map(|r| r.one_even_peak).sum();
    let o: usize = rows.iter().map(|r| r.one_odd_peak).sum();
    ensure!(e == o + (n - 1) / 2, "{e} tableaux with one even peak, {o} with one odd peak");
    Ok(Outcome::Pass)
}

// free Lie algebra

fn gr21(n: usize) -> Result<Outcome> {
    for r in compositions(n) {
        for q in compositions(n) {
            ensure!(gr_theorem_check(&r, &q)?, "r = {r}, q = {q}");
        }
    }
    Ok(Outcome::Pass)
}

fn gerade_null(n: usize) -> Result<Outcome> {
    for q in compositions(n).into_iter().filter(|q| q.parts().first().is_some_and(|x| x % 2 == 0)) {
        ensure!(gerade_null_check(&q)?, "q = {q}");
    }
    Ok(Outcome::Pass)
}

fn internal_char(n: usize) -> Result<Outcome> {
    let series = LieSeries::default();
    for q in compositions(n) {
        let x = DescentAlgElement::xi(&q);
        let tau = x.is_tau_invariant()?;
        ensure!(membership_by_action(&x)? == tau, "action criterion on Ξ^{q}");
        ensure!(internal_criterion(&x, &series) == tau, "internal criterion on Ξ^{q}");
    }
    Ok(Outcome::Pass)
}

fn stability(n: usize) -> Result<Outcome> {
    for r in compositions(n) {
        for q in compositions(n) {
            ensure!(stability_check(&DescentAlgElement::xi(&r), &q)?, "Ξ^{r} on q = {q}");
        }
    }
    Ok(Outcome::Pass)
}

// Eulerian peak algebra

fn euler_transition(n: usize) -> Result<Outcome> {
    let m = peak_eulerian_dimension(n);
    let pis: Vec<DescentAlgElement> = (0..m).map(|j| eulerian_element(EulerianFamily::Pi, n, j)).collect();
    let gammas: Vec<DescentAlgElement> = (0..m).map(|j| eulerian_element(EulerianFamily::Gamma, n, j)).collect();
    for k in 0..m {
        let g = (k..m).fold(DescentAlgElement::zero(n), |acc, j| acc + pis[j].scale(&int(binomial(j, k) as i64)));
        ensure!(gammas[k] == g, "Γ^(n,{k})");
        let p = (k..m).fold(DescentAlgElement::zero(n), |acc, j| {
            let s = if (j - k) % 2 == 0 { 1 } else { -1 };
            acc + gammas[j].scale(&int(s * binomial(j, k) as i64))
        });
        ensure!(pis[k] == p, "Π^(n,{k})");
    }
    Ok(Outcome::Pass)
}

fn euler_alg(n: usize) -> Result<Outcome> {
    let t = match multiplication_table(n) {
        Ok(t) => t,
        Err(e) => return Ok(Outcome::Fail(e.to_string())),
    };
    for i in 0..t.len() {
        for j in 0..i {
            ensure!(t[i][j] == t[j][i], "Π^(n,{i}) and Π^(n,{j}) do not commute");
        }
    }
    let dim = peak_eulerian_dimension(n);
    ensure!(dim == n.div_ceil(2).max(usize::from(n == 0)), "dim Ẽ_n = {dim}");
    let es = peak_eulerian_idempotents(n);
    ensure!(es.len() == dim, "{} idempotents", es.len());
    for (i, (k, a)) in es.iter().enumerate() {
        ensure!(pi_coordinates(a).is_some(), "ρ̃_(n,{k}) ∉ Ẽ_n");
        ensure!(solomon_c(a) == char_nk(n, *k), "c(ρ̃_(n,{k}))");
        for (j, (l, b)) in es.iter().enumerate() {
            let prod = a.inner(b);
            ensure!(if i == j { prod == *a } else { prod.is_zero() }, "ρ̃_(n,{k}) ρ̃_(n,{l})");
        }
    }
    let cert = generated_by_pi_empty(n);
    ensure!(cert.generated(), "powers of Π^∅ span only {:?} of {}", cert.ranks, cert.dim);
    Ok(Outcome::Pass)
}

fn euler_e(n: usize) -> Result<Outcome> {
    let e = idempotent_e(n);
    ensure!(e.inner(&e) == e, "e² ≠ e");
    ensure!(e.is_peak(), "e ∉ P_n");
    let d = left_ideal_dimension(&e);
    ensure!(d as u64 == fibonacci(n), "dim D_n e = {d}");
    Ok(Outcome::Pass)
}

// structure of P_n

fn indec_dn(n: usize) -> Result<Outcome> {
    for p in partitions(n) {
        ensure!(lambda_module_check(&p)?, "Λ^{p}");
    }
    Ok(Outcome::Pass)
}

fn dir_summ(n: usize) -> Result<Outcome> {
    ensure!(decomposition_check(n)?, "direct sum decomposition");
    Ok(Outcome::Pass)
}

fn rad_lambda(n: usize) -> Result<Outcome> {
    let r = radical(n)?;
    ensure!(r.descriptions_agree(), "span{{γ_q − γ_p}} ≠ ker c|P_n");
    ensure!(r.codimension_matches(), "dim P_n/Rad P_n ≠ |Part_odd(n)|");
    Ok(Outcome::Pass)
}

fn lambda_q_regu(n: usize) -> Result<Outcome> {
    for p in partitions(n) {
        if p.as_composition().rearrangements().len() <= 3 {
            ensure!(unique_maximal_submodule_check(&p)?, "Λ^{p}");
        }
    }
    Ok(Outcome::Pass)
}

fn cartan_pn(n: usize) -> Result<Outcome> {
    let a = cartan_matrix(n)?;
    let b = cartan_matrix_by_rank(n)?;
    ensure!(a == b, "Lyndon count {:?}, rank {:?}", a.entries, b.entries);
    Ok(Outcome::Pass)
}

fn rad_inclusion(n: usize) -> Result<Outcome> {
    for p in odd_partitions(n) {
        let c = loewy_comparison(&p)?;
        ensure!(c.inclusion, "Λ^{p}: {:?} vs {:?}", c.peak_dims, c.descent_odd_dims);
    }
    Ok(Outcome::Pass)
}

fn rad_haken(n: usize) -> Result<Outcome> {
    for p in odd_partitions(n).into_iter().filter(|p| is_hook(p) && p.parts()[0] < n) {
        let c = loewy_comparison(&p)?;
        ensure!(c.equal, "Λ^{p}: {:?} vs {:?}", c.peak_dims, c.descent_odd_dims);
    }
    Ok(Outcome::Pass)
}

fn nilindex(n: usize) -> Result<Outcome> {
    let found = nilpotency_index(n)?;
    let expected = if n >= 4 { expected_nilpotency_index(n) } else { 1 };
    ensure!(found == expected, "index {found}, expected {expected}");
    Ok(Outcome::Pass)
}

macro_rules! check {
    ($id:expr, $statement:expr, $min:expr, $max:expr, $deg:ident, $run:expr) => {
        Check { id: $id, statement: $statement, min_n: $min, max_n: $max, degrees: Degrees::$deg, run: $run }
    };
}

static REGISTRY: &[Check] = &[
    check!("main-thm-fibonacci", "dim{φ ∈ D_n : φτ_{n,1} = φ} = |{peak sets in [n]}| = f_n", 0, 8, All, fibonacci_dimensions),
    check!("main-thm-left-ideal", "Δ^D ∗ Π^P ∈ span{Π^Q} for all D ⊆ [n−1] and peak sets P", 0, 6, All, left_ideal),
    check!("main-thm-comb-char", "φ ∈ D_n lies in P_n iff φτ_{n,1} = φ", 0, 7, All, comb_char),
    check!("eq-peak-set", "P(Des(π)) = Peak(π) for all π ∈ S_n", 0, 7, All, peak_set_of_descents),
    check!("eq-convolution", "Ξ^r ⋆ Ξ^q = Ξ^{r.q}", 0, 7, All, convolution),
    check!("eq-vert-hor", "Δ^{1^k} ⋆ Δ^m = Δ^{1^k.m} + Δ^{1^(k−1).(m+1)}", 2, 7, All, vert_hor),
    check!("prop-gamma-xi", "Γ^q = (−1)^{(n−ℓ(q))/2} Σ_{q̃ ⊨ s ⊨ q} (−1)^{ℓ(s)−ℓ(q)} Ξ^s for odd q", 1, 7, All, gamma_xi),
    check!("prop-transition-tilde-xi", "the Π, Γ (subsets), Γ (odd refinements) and Ξ expansions of Ξ̃^r agree with Ξ̃^r", 0, 7, All, transition_tilde_xi),
    check!("prop-tilde-delta", "Δ^D ∗ Ξ̃^n = Σ_{P ⊆ D △ (D+1)} 2^{|P|+1} Π^P", 1, 7, All, tilde_delta_check),
    check!("eq-re-xi-tilde", "Ξ^q ∗ Ξ̃^n = Ξ̃^q", 1, 7, All, re_xi_tilde),
    check!("prop-multi-tilde-xi", "Δ^{1^n} ∗ Ξ̃^n = Ξ̃^n and Ξ̃^n ∗ Ξ̃^n = 2Ξ̃^n + Σ_k Ξ̃^{k.(n−k)}", 1, 7, All, multi_tilde_xi),
    check!("main-thm-bialg-p", "Ξ̃^r ⋆ Ξ̃^q = Ξ̃^{r.q}, Γ^r ⋆ Γ^q = Γ^{r.q}, Ξ̃^n↓ = Σ Ξ̃^k ⊗ Ξ̃^{n−k}, P↓ ⊆ P ⊗ P", 0, 7, All, bialg_p),
    check!("thm-bialg-d", "↓ is coassociative on Ξ^q and multiplicative for ⋆", 0, 6, All, bialg_d),
    check!("lemma-reziprozi", "the reciprocity law linking ∗, ⋆ and ↓ on Ξ bases", 0, 5, All, reciprocity),
    check!("main-thm-p-c-im", "c is multiplicative for ∗ and ⋆, dim ker c|D_n = 2^{n−1} − |Part(n)|, dim ker c|P_n = f_n − |Part_odd(n)|, c(Ξ̃^n) = Σ 2^{ℓ(p)} char_p", 0, 7, All, solomon_epimorphism),
    check!("prop-1-2", "πτ_i is peak-equivalent to π when i, i+1 are adjacent and flanked by larger values", 2, 7, All, adjacent_swaps),
    check!("lemma-dbhl-desc", "descent-neighbor classes are the fibers of Des", 1, 7, All, descent_relation),
    check!("lemma-peak-rel", "peak-neighbor classes are the fibers of Peak", 1, 7, All, peak_relation),
    check!("peak-number-rel", "peak-number-neighbor classes are the fibers of the number of peaks", 1, 7, All, peak_number_relation),
    check!("thm-lie-idempotents", "(1/n)ω_n and ρ_n are Lie idempotents annihilated by Ξ^q, ℓ(q) > 1", 1, 6, All, lie_idempotents),
    check!("prop-klyachko", "(1/n)κ_n(ε) is idempotent over Q(ε)", 1, 5, All, klyachko),
    check!("prop-ex-peak-lie", "(1/2n)ω_nΞ̃^n, (1/2)ρ_nΞ̃^n are Lie idempotents in P_n for odd n; ω_nΞ̃^n = ρ̃_n = 0 for even n", 1, 7, All, peak_lie),
    check!("cor-when-peak-lie", "P_n contains a Lie idempotent iff n is odd", 1, 6, All, when_peak_lie),
    check!("prop-peak-dynkin", "closed form of (1/2n)ω_nΞ̃^n", 1, 7, Odd, peak_dynkin),
    check!("prop-peak-canon", "closed and Γ forms of ρ_nΞ̃^n", 1, 7, Odd, peak_canon),
    check!("main-thm-high-lie-id-basis", "{γ_q : q ⊨ n odd} is a basis of P_n", 0, 6, All, high_lie_basis),
    check!("prop-simple", "φ ∗ ω_d^{⋆k} = c(φ)(C_{d^k}) ω_d^{⋆k} for φ ∈ D_{dk}", 1, 6, All, simple),
    check!("cor-peak-noncyclic", "K̃_n is a symmetric left ideal with κ̃_n(ε^i)κ̃_n(ε^j) = δ 2^{n/d}(d^{n/d})? κ̃_n(ε^j) and κ̃_n = κ̃_d^{⋆ n/d}", 1, 7, Odd, peak_noncyclic),
    check!("cor-comb-cor-1", "2|C_p ∩ P_{1,e}| + sign(p) = 2|C_p ∩ P_{1,o}| + |C_p ∩ P_0|", 1, 7, Odd, comb_cor_1),
    check!("cor-comb-cor-2", "|T^{n,l}_{1,e}| = |T^{n,l}_{1,o}| + 1 and |T^n_{1,e}| = |T^n_{1,o}| + (n−1)/2", 1, 9, Odd, comb_cor_2),
    check!("thm-gr2-1", "Ξ^r(P_1⋯P_k) = Σ P_{S_1}⋯P_{S_l} over ordered set partitions with q_{S_i} ⊨ r_i", 1, 5, All, gr21),
    check!("lemma-gerade-null", "Ξ̃^n(P_1⋯P_k) = 0 when q_1 is even", 1, 6, All, gerade_null),
    check!("cor-internal-char", "φ ∈ P_n iff φ(P_1⋯P_k) = 0 iff φγ_q = 0 for all q with q_1 even", 1, 5, All, internal_char),
    check!("free-lie-stability", "φ(P_1⋯P_k) ∈ span{P_{1π}⋯P_{kπ}} for φ ∈ D_n", 1, 5, All, stability),
    check!("prop-euler-transition", "Γ^{n,k} = Σ_j C(j,k) Π^{n,j} and its inverse", 0, 8, All, euler_transition),
    check!("main-thm-euler-alg", "Ẽ_n is a commutative algebra of dimension ⌈n/2⌉ with basis of orthogonal idempotents ρ̃_{n,k}, generated by Π^∅", 1, 8, All, euler_alg),
    check!("peak-eulerian-e", "e² = e and dim D_n e = f_n", 1, 7, All, euler_e),
    check!("prop-indec-dn", "Λ^p = span{γ_q : q ≈ p} ⊇ D_nγ_p has dimension #{q ≈ p}", 1, 7, All, indec_dn),
    check!("main-thm-dir-summ", "D_n = ⊕_{p ⊢ n} Λ^p and P_n = ⊕_{p ⊢ n odd} Λ^p", 1, 7, All, dir_summ),
    check!("cor-rad-lambda", "Rad P_n = span{γ_q − γ_p : q ≈ p ⊢ n odd} = ker c|P_n of codimension |Part_odd(n)|", 1, 8, All, rad_lambda),
    check!("prop-lambda-q-regu", "Λ^p ∩ ker c is the only invariant hyperplane of Λ^p", 1, 6, All, lambda_q_regu),
    check!("cor-cartan-pn", "#{r ≈ q : LSC(r) ≈ p} = dim γ_pD_nγ_q", 1, 6, All, cartan_pn),
    check!("cor-rad-inclusion", "Rad^(j)_{P_n}Λ^p ⊆ Rad^(2j−1)_{D_n}Λ^p", 1, 6, All, rad_inclusion),
    check!("lemma-rad-haken", "Rad^(j)_{P_n}Λ^p = Rad^(2j−1)_{D_n}Λ^p for hooks p = k.1^(n−k), k < n", 1, 6, All, rad_haken),
    check!("thm-nilindex", "the nilpotency index of Rad P_n is (n−1)/2 for odd n and n/2 for even n ≥ 4", 1, 8, All, nilindex),
];

pub fn registry() -> &'static [Check] {
    REGISTRY
}

pub fn find(id: &str) -> Option<&'static Check> {
    REGISTRY.iter().find(|c| c.id == id)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
        ids.sort_unstable();
        let len = ids.len();
        ids.dedup();
        assert_eq!(ids.len(), len);
        assert!(find("thm-nilindex").is_some());
        assert!(find("no-such-check").is_none());
    }

    #[test]
    fn small_degrees_pass() {
        for c in registry() {
            for (n, o) in c.run_up_to(4).unwrap() {
                assert!(o.passed(), "{} at n = {n}: {o}", c.id);
            }
        }
    }

    #[test]
    fn degree_filters() {
        let c = find("prop-peak-dynkin").unwrap();
        assert_eq!(c.degrees_up_to(8), vec![1, 3, 5, 7]);
        assert_eq!(find("main-thm-left-ideal").unwrap().degrees_up_to(9), (0..=6).collect::<Vec<_>>());
    }

    #[test]
    fn failures_carry_witnesses() {
        let mut t = BTreeMap::new();
        t.insert((Composition::ones(1), comp(vec![2])), int(1));
        assert!(!in_peak_tensor(&t));
        let mut t = BTreeMap::new();
        t.insert((Composition::ones(1), Composition::ones(2)), int(1));
        assert!(in_peak_tensor(&t));
        t.insert((comp(vec![2]), Composition::ones(1)), int(1));
        assert!(!in_peak_tensor(&t));
        assert_eq!(Outcome::Fail("x".into()).to_string(), "FAIL: x");
    }
}
