//! Lie idempotents in D_n and their peak variants.

pub mod klyachko;

use std::collections::BTreeMap;

use num_traits::Zero;

pub use klyachko::{cyclic_characters, klyachko, klyachko_is_idempotent, peak_klyachko, CycloDescentElement, CyclicCharacters};

use crate::class_functions::solomon_c;
use crate::combinatorics::statistics::{cycle_type, descent_mask, peak_set};
use crate::combinatorics::{
    compositions, odd_compositions, partitions, tableaux, Composition, Partition, SubsetOfRail,
};
use crate::descent_peak::bases::{gamma_of, tilde_xi, tilde_xi_n};
use crate::descent_peak::DescentAlgElement;
use crate::error::{check_degree, Error, Result};
use crate::group_algebra::{AlgebraElement, Permutation};
use crate::linalg::{rank, solve};
use crate::scalar::{int, rat, sign, Rational};

fn hook(n: usize, k: usize) -> SubsetOfRail {
    SubsetOfRail::from_mask(n, (1u32 << k) - 1)
}

/// The Dynkin operator ω_n = Σ_{k=0}^{n−1} (−1)^k Δ^{1^{.k}.(n−k)}.
pub fn dynkin(n: usize) -> DescentAlgElement {
    let mut delta = vec![Rational::zero(); 1 << n.saturating_sub(1)];
    for k in 0..n {
        delta[hook(n, k).mask() as usize] = sign(k);
    }
    DescentAlgElement::from_delta_vec(n, delta)
}

/// The canonical Lie idempotent ρ_n = Σ_{q⊨n} ((−1)^{ℓ(q)−1}/ℓ(q)) Ξ^q.
pub fn canonical(n: usize) -> DescentAlgElement {
    let coords = compositions(n)
        .into_iter()
        .map(|q| {
            let l = q.len() as i64;
            let c = rat(if l % 2 == 1 { 1 } else { -1 }, l);
            (q, c)
        })
        .collect();
    DescentAlgElement::from_xi_coords(n, &coords).expect("degree")
}

/// Whether β is a Lie idempotent: β² = β, (1/n)ω_nβ = β and β(1/n)ω_n = (1/n)ω_n.
pub fn is_lie_idempotent(beta: &DescentAlgElement) -> bool {
    let n = beta.degree();
    if n == 0 {
        return false;
    }
    let w = dynkin(n).scale(&rat(1, n as i64));
    beta.inner(beta) == *beta && w.inner(beta) == *beta && beta.inner(&w) == w
}

/// Ξ̃^n α, which is 2α for odd n and 0 for even n when α is a Lie idempotent.
pub fn tilde_xi_times(alpha: &DescentAlgElement) -> DescentAlgElement {
    tilde_xi_n(alpha.degree()).inner(alpha)
}

/// (1/2)αΞ̃^n, a Lie idempotent in P_n for odd n.
pub fn peak_variant(alpha: &DescentAlgElement) -> Result<DescentAlgElement> {
    let n = alpha.degree();
    if n % 2 == 0 {
        return Err(Error::NotOdd(format!("peak Lie idempotents need odd degree, got {n}")));
    }
    Ok(alpha.inner(&tilde_xi_n(n)).scale(&rat(1, 2)))
}

/// (1/2n)ω̃_n = (1/n)(Π^∅ + 2Σ_{k=2}^{n−1}(−1)^{k−1}Π^{{k}}).
pub fn peak_dynkin_closed_form(n: usize) -> Result<DescentAlgElement> {
    if n % 2 == 0 {
        return Err(Error::NotOdd(n.to_string()));
    }
    let inv = rat(1, n as i64);
    let mut coords = BTreeMap::from([(SubsetOfRail::empty(n), inv.clone())]);
    for k in 2..n {
        coords.insert(SubsetOfRail::new(n, &[k])?, &inv * int(2) * sign::<Rational>(k - 1));
    }
    DescentAlgElement::from_pi_coords(n, &coords)
}

/// The coefficient of π in (1/2)ρ̃_n for a permutation with k peaks:
/// (1/n)(−1)^k·(2·4⋯2k)/((n−2)(n−4)⋯(n−2k)).
pub fn peak_canonical_coefficient(n: usize, k: usize) -> Rational {
    let mut c = rat(1, n as i64) * sign::<Rational>(k);
    for j in 1..=k {
        c = c * rat(2 * j as i64, n as i64 - 2 * j as i64);
    }
    c
}

/// (1/2)ρ̃_n by the peak-count formula.
pub fn peak_canonical_closed_form(n: usize) -> Result<DescentAlgElement> {
    if n % 2 == 0 {
        return Err(Error::NotOdd(n.to_string()));
    }
    let coords = crate::combinatorics::peak_sets(n)
        .into_iter()
        .map(|p| {
            let c = peak_canonical_coefficient(n, p.len());
            (p, c)
        })
        .collect();
    DescentAlgElement::from_pi_coords(n, &coords)
}

/// ρ̃_n = Σ_{q⊨n} ((−1)^{ℓ(q)−1}/ℓ(q)) Ξ̃^q.
pub fn peak_canonical(n: usize) -> DescentAlgElement {
    compositions(n).into_iter().fold(DescentAlgElement::zero(n), |acc, q| {
        let l = q.len() as i64;
        acc + tilde_xi(&q).scale(&rat(if l % 2 == 1 { 1 } else { -1 }, l))
    })
}

/// ρ̃_n = 2Σ_{q⊨n odd} ((−1)^{(n−ℓ(q))/2}/ℓ(q)) Γ^q for odd n, and 0 for even n.
pub fn peak_canonical_gamma_form(n: usize) -> DescentAlgElement {
    if n % 2 == 0 {
        return DescentAlgElement::zero(n);
    }
    odd_compositions(n).into_iter().fold(DescentAlgElement::zero(n), |acc, q| {
        let c = int(2) * sign::<Rational>((n - q.len()) / 2) * rat(1, q.len() as i64);
        acc + gamma_of(&q).expect("odd").scale(&c)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LieSeriesKind {
    /// ω_n for even n and (1/2)ω̃_n for odd n, so γ_n ∈ P_n for odd n.
    Default,
    /// ω_n in every degree.
    Dynkin,
    /// nρ_n in every degree.
    Canonical,
}

/// A Lie series γ: (1/n)γ_n is a Lie idempotent for every n.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LieSeries {
    pub kind: LieSeriesKind,
}

impl Default for LieSeries {
    fn default() -> Self {
        LieSeries { kind: LieSeriesKind::Default }
    }
}

impl LieSeries {
    pub fn new(kind: LieSeriesKind) -> Self {
        LieSeries { kind }
    }

    pub fn gamma_n(&self, n: usize) -> DescentAlgElement {
        match self.kind {
            LieSeriesKind::Default if n % 2 == 1 => {
                dynkin(n).inner(&tilde_xi_n(n)).scale(&rat(1, 2))
            }
            LieSeriesKind::Default | LieSeriesKind::Dynkin => dynkin(n),
            LieSeriesKind::Canonical => canonical(n).scale(&int(n as i64)),
        }
    }

    /// γ_q = γ_{q1} ⋆ … ⋆ γ_{qk}.
    pub fn gamma_q(&self, q: &Composition) -> DescentAlgElement {
        q.parts()
            .iter()
            .fold(DescentAlgElement::xi(&Composition::empty()), |acc, &m| acc.outer(&self.gamma_n(m)))
    }

    /// γ^q = γ_{q1} # … # γ_{qk}, at permutation level.
    pub fn gamma_hash_q(&self, q: &Composition) -> Result<AlgebraElement<Rational>> {
        check_degree(q.sum())?;
        let mut acc = AlgebraElement::unit();
        for &m in q.parts() {
            acc = acc.hash(&self.gamma_n(m).to_algebra_element()?);
        }
        Ok(acc)
    }
}

/// φβ^{(k)} = c(φ)(C_{d^{.k}})β^{(k)} for every Ξ^q, q ⊨ dk, where (1/d)β is
/// a Lie idempotent and β^{(k)} is the k-fold ⋆ power.
pub fn prop_simple_check(d: usize, k: usize, beta: &DescentAlgElement) -> bool {
    assert_eq!(beta.degree(), d);
    let n = d * k;
    let mut power = DescentAlgElement::xi(&Composition::empty());
    for _ in 0..k {
        power = power.outer(beta);
    }
    let class = Partition::new(vec![d; k]).expect("block");
    compositions(n).iter().all(|q| {
        let phi = DescentAlgElement::xi(q);
        let value = solomon_c(&phi).value(&class);
        phi.inner(&power) == power.scale(&value)
    })
}

/// Solve for β ∈ P_n with ω_nβ = nβ and βω_n = ω_n; such β are exactly the
/// Lie idempotents in P_n.
pub fn peak_lie_idempotent_solution(n: usize) -> Option<DescentAlgElement> {
    if n == 0 {
        return None;
    }
    let w = dynkin(n);
    let nn = int(n as i64);
    let basis: Vec<DescentAlgElement> = crate::combinatorics::peak_sets(n)
        .into_iter()
        .map(|p| crate::descent_peak::bases::pi(&p))
        .collect();
    let vectors: Vec<Vec<Rational>> = basis
        .iter()
        .map(|b| {
            let mut v = (w.inner(b) - b.scale(&nn)).xi_vec().to_vec();
            v.extend_from_slice(b.inner(&w).xi_vec());
            v
        })
        .collect();
    let mut target = vec![Rational::zero(); w.xi_vec().len()];
    target.extend_from_slice(w.xi_vec());
    let coeffs = solve(&vectors, &target)?;
    Some(basis.iter().zip(coeffs).fold(DescentAlgElement::zero(n), |acc, (b, c)| acc + b.scale(&c)))
}

/// dim ω_nP_n.
pub fn primitive_dimension(n: usize) -> usize {
    let w = dynkin(n);
    let rows: Vec<Vec<Rational>> = crate::combinatorics::peak_sets(n)
        .iter()
        .map(|p| w.inner(&crate::descent_peak::bases::pi(p)).xi_vec().to_vec())
        .collect();
    rank(&rows)
}

/// The number of Lyndon words among the odd compositions of n.
pub fn odd_lyndon_count(n: usize) -> usize {
    odd_compositions(n).iter().filter(|q| q.is_lyndon()).count()
}

/// Whether {(1/q?)γ_q : q ⊨ n odd} consists of idempotents in P_n and has rank f_n.
pub fn idempotent_basis_check(series: &LieSeries, n: usize) -> bool {
    let elems: Vec<DescentAlgElement> = odd_compositions(n)
        .iter()
        .map(|q| series.gamma_q(q).scale(&rat(1, q.centralizer_order() as i64)))
        .collect();
    let ok = elems.iter().all(|e| e.inner(e) == *e && e.is_peak());
    let rows: Vec<Vec<Rational>> = elems.iter().map(|e| e.xi_vec().to_vec()).collect();
    ok && rank(&rows) as u64 == crate::combinatorics::fibonacci(n)
}

/// Σ_{π∈C_p} k_π for α = Σ_π k_π π, by cycle type.
pub fn class_sums(alpha: &DescentAlgElement) -> Result<BTreeMap<Partition, Rational>> {
    let n = alpha.degree();
    check_degree(n)?;
    let delta = alpha.delta_vec();
    let mut out: BTreeMap<Partition, Rational> = partitions(n).into_iter().map(|p| (p, Rational::zero())).collect();
    for pi in Permutation::all(n) {
        let c = &delta[descent_mask(&pi) as usize];
        *out.get_mut(&cycle_type(&pi)).expect("partition of n") += c;
    }
    Ok(out)
}

/// One row of the identity 2|C_p∩P_{1,e}| + sign(p) = 2|C_p∩P_{1,o}| + |C_p∩P_0|.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeakCycleCounts {
    pub p: Partition,
    pub no_peak: u64,
    pub one_even_peak: u64,
    pub one_odd_peak: u64,
    pub sign: i64,
}

impl PeakCycleCounts {
    pub fn holds(&self) -> bool {
        2 * self.one_even_peak as i64 + self.sign == 2 * self.one_odd_peak as i64 + self.no_peak as i64
    }
}

pub fn peak_cycle_counts(n: usize) -> Result<Vec<PeakCycleCounts>> {
    check_degree(n)?;
    let mut rows: BTreeMap<Partition, PeakCycleCounts> = partitions(n)
        .into_iter()
        .map(|p| {
            let sign = p.sign();
            (p.clone(), PeakCycleCounts { p, no_peak: 0, one_even_peak: 0, one_odd_peak: 0, sign })
        })
        .collect();
    for pi in Permutation::all(n) {
        let row = rows.get_mut(&cycle_type(&pi)).expect("partition of n");
        let peaks = peak_set(&pi);
        match peaks.elements().as_slice() {
            [] => row.no_peak += 1,
            [k] if k % 2 == 0 => row.one_even_peak += 1,
            [_] => row.one_odd_peak += 1,
            _ => {}
        }
    }
    let mut out: Vec<_> = rows.into_values().collect();
    out.reverse();
    Ok(out)
}

/// Counts of tableaux with l odd columns and a single even or odd peak.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableauPeakCounts {
    pub l: usize,
    pub one_even_peak: usize,
    pub one_odd_peak: usize,
}

impl TableauPeakCounts {
    /// e = o + 1 for odd l < n, and e = o = 0 otherwise.
    pub fn holds(&self, n: usize) -> bool {
        if self.l % 2 == 1 && self.l < n {
            self.one_even_peak == self.one_odd_peak + 1
        } else {
            self.one_even_peak == 0 && self.one_odd_peak == 0
        }
    }
}

pub fn tableau_peak_counts(n: usize) -> Result<Vec<TableauPeakCounts>> {
    let mut rows: Vec<TableauPeakCounts> =
        (0..=n).map(|l| TableauPeakCounts { l, one_even_peak: 0, one_odd_peak: 0 }).collect();
    for t in tableaux(n)? {
        let row = &mut rows[t.odd_column_count()];
        match t.peaks().elements().as_slice() {
            [k] if k % 2 == 0 => row.one_even_peak += 1,
            [_] => row.one_odd_peak += 1,
            _ => {}
        }
    }
    Ok(rows)
}

/// Ξ^qα = 0 for every q ⊨ n with ℓ(q) > 1.
pub fn annihilated_by_xi(alpha: &DescentAlgElement) -> bool {
    compositions(alpha.degree())
        .iter()
        .filter(|q| q.len() > 1)
        .all(|q| DescentAlgElement::xi(q).inner(alpha).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn perms(n: usize, xs: &[(&str, i64)]) -> AlgebraElement<Rational> {
        let mut out = AlgebraElement::zero();
        for (s, c) in xs {
            let images: Vec<usize> = s.bytes().map(|b| (b - b'0') as usize).collect();
            assert_eq!(images.len(), n);
            out.add_term(Permutation::new(&images).unwrap(), int(*c));
        }
        out
    }

    #[test]
    fn small_dynkin_and_canonical() {
        assert_eq!(dynkin(1), DescentAlgElement::xi(&comp("1")));
        assert_eq!(dynkin(2).to_algebra_element().unwrap(), perms(2, &[("12", 1), ("21", -1)]));
        let rho2 = DescentAlgElement::xi(&comp("2")) - DescentAlgElement::xi(&comp("1.1")).scale(&rat(1, 2));
        assert_eq!(canonical(2), rho2);
        let w5 = dynkin(5);
        assert_eq!(w5.inner(&w5), w5.scale(&int(5)));
        let r5 = canonical(5);
        assert_eq!(r5.inner(&w5), w5);
        assert_eq!(w5.inner(&r5), r5.scale(&int(5)));
    }

    #[test]
    fn idempotents() {
        for n in 1..=6 {
            let w = dynkin(n).scale(&rat(1, n as i64));
            assert!(is_lie_idempotent(&w), "omega {n}");
            assert!(is_lie_idempotent(&canonical(n)), "rho {n}");
            assert!(annihilated_by_xi(&w) && annihilated_by_xi(&canonical(n)));
            let t = tilde_xi_times(&w);
            if n % 2 == 1 {
                assert_eq!(t, w.scale(&int(2)));
                let pw = peak_variant(&w).unwrap();
                let pr = peak_variant(&canonical(n)).unwrap();
                assert!(is_lie_idempotent(&pw) && pw.is_peak());
                assert!(is_lie_idempotent(&pr) && pr.is_peak());
            } else {
                assert!(t.is_zero());
                assert!(peak_variant(&w).is_err());
            }
        }
    }

    #[test]
    fn closed_forms() {
        let three = peak_dynkin_closed_form(3).unwrap().to_algebra_element().unwrap();
        let expected = perms(3, &[("123", 1), ("213", 1), ("312", 1), ("321", 1), ("132", -2), ("231", -2)]);
        assert_eq!(three, expected.scale(&rat(1, 3)));
        for n in [1, 3, 5, 7] {
            let w = dynkin(n);
            assert_eq!(peak_dynkin_closed_form(n).unwrap(), w.inner(&tilde_xi_n(n)).scale(&rat(1, 2 * n as i64)));
            let rt = canonical(n).inner(&tilde_xi_n(n));
            assert_eq!(peak_canonical(n), rt);
            assert_eq!(peak_canonical_gamma_form(n), rt);
            assert_eq!(peak_canonical_closed_form(n).unwrap(), rt.scale(&rat(1, 2)));
        }
        assert!(peak_canonical(4).is_zero());
        assert_eq!(peak_canonical_coefficient(3, 0), rat(1, 3));
        assert_eq!(peak_canonical_coefficient(3, 1), rat(-2, 3));
    }

    #[test]
    fn lie_series() {
        let s = LieSeries::default();
        let delta = LieSeries::new(LieSeriesKind::Dynkin);
        for n in 1..=6 {
            assert!(is_lie_idempotent(&s.gamma_n(n).scale(&rat(1, n as i64))));
            if n % 2 == 1 {
                assert!(s.gamma_n(n).is_peak());
            }
        }
        let (r, q) = (comp("1.3"), comp("3.1"));
        assert_eq!(delta.gamma_q(&r).inner(&s.gamma_q(&q)), s.gamma_q(&r).scale(&int(3)));
        let g11 = s.gamma_q(&comp("1.1")).scale(&rat(1, 2));
        assert_eq!(g11.inner(&g11), g11);
        for q in compositions(5) {
            let down = s.gamma_hash_q(&q).unwrap().inner(&DescentAlgElement::xi(&q).to_algebra_element().unwrap());
            assert_eq!(down, s.gamma_q(&q).to_algebra_element().unwrap(), "{q}");
        }
        for n in 0..=6 {
            assert!(idempotent_basis_check(&s, n), "n = {n}");
        }
    }

    #[test]
    fn simple_action() {
        assert!(prop_simple_check(1, 4, &dynkin(1)));
        assert!(prop_simple_check(2, 2, &dynkin(2)));
        assert!(prop_simple_check(3, 1, &dynkin(3)));
        assert!(prop_simple_check(3, 2, &dynkin(3)));
        assert!(prop_simple_check(2, 3, &canonical(2).scale(&int(2))));
    }

    #[test]
    fn peak_lie_idempotents_exist_only_in_odd_degree() {
        for n in 1..=6 {
            let sol = peak_lie_idempotent_solution(n);
            assert_eq!(sol.is_some(), n % 2 == 1, "n = {n}");
            if let Some(b) = sol {
                assert!(is_lie_idempotent(&b) && b.is_peak());
            }
        }
        for n in 0..=7 {
            assert_eq!(primitive_dimension(n), odd_lyndon_count(n), "n = {n}");
        }
    }

    #[test]
    fn class_sums_are_signs() {
        for n in [3, 5] {
            let w = dynkin(n);
            let pw = peak_variant(&w.scale(&rat(1, n as i64))).unwrap().scale(&int(n as i64));
            for alpha in [w, pw, canonical(n).scale(&int(n as i64))] {
                for (p, s) in class_sums(&alpha).unwrap() {
                    assert_eq!(s, int(p.sign()), "{p}");
                }
            }
        }
    }

    #[test]
    fn peak_cycle_identities() {
        for n in [1, 3, 5, 7] {
            for row in peak_cycle_counts(n).unwrap() {
                assert!(row.holds(), "{row:?}");
            }
        }
    }

    #[test]
    fn tableau_identities() {
        for n in [1, 3, 5, 7, 9] {
            let rows = tableau_peak_counts(n).unwrap();
            assert!(rows.iter().all(|r| r.holds(n)), "{rows:?}");
            let e: usize = rows.iter().map(|r| r.one_even_peak).sum();
            let o: usize = rows.iter().map(|r| r.one_odd_peak).sum();
            assert_eq!(e, o + (n - 1) / 2);
        }
        let three = tableau_peak_counts(3).unwrap();
        assert_eq!((three[1].one_even_peak, three[1].one_odd_peak), (1, 0));
    }

    #[test]
    fn c_of_lie_idempotent_is_char_n() {
        let expected = crate::class_functions::ClassFunction::char_of(&Partition::new(vec![5]).unwrap());
        assert_eq!(solomon_c(&canonical(5)), expected);
        assert_eq!(solomon_c(&dynkin(5).scale(&rat(1, 5))), expected);
        let s = LieSeries::default();
        for q in compositions(6) {
            assert_eq!(solomon_c(&s.gamma_q(&q)), crate::class_functions::ClassFunction::ch(&q), "{q}");
        }
    }
}
