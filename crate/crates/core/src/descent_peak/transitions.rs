//! Change of basis between Ξ, Γ, Π and the divided powers Ξ̃.

use std::collections::BTreeMap;

use num_traits::One;

use super::bases::{tilde_xi, tilde_xi_n};
use super::DescentAlgElement;
use crate::combinatorics::{compositions, Composition, SubsetOfRail};
use crate::error::{Error, Result};
use crate::scalar::{int, sign, Rational};

/// Γ^q = (−1)^{(n−ℓ(q))/2} Σ_{q̃ ⊨ s ⊨ q} (−1)^{ℓ(s)−ℓ(q)} Ξ^s for odd q.
pub fn gamma_to_xi(q: &Composition) -> Result<BTreeMap<Composition, Rational>> {
    let t = q.tilde()?;
    let outer: Rational = sign((q.sum() - q.len()) / 2);
    Ok(t.coarsenings()
        .into_iter()
        .filter(|s| s.refines(q).unwrap_or(false))
        .map(|s| {
            let c = &outer * sign::<Rational>(s.len() - q.len());
            (s, c)
        })
        .collect())
}

/// The four expansions of Ξ̃^r.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TildeXiExpansion {
    pub r: Composition,
    /// 2^ℓ Σ_{Q ⊆ D} Π^Q over peak sets Q, with D = D(r) ∪ (D(r)+1).
    pub pi: BTreeMap<SubsetOfRail, Rational>,
    /// 2^ℓ Σ_{Q ⊆ [n−1]∖D} (−1)^{|Q|} Γ^Q over peak sets Q.
    pub gamma_subsets: BTreeMap<SubsetOfRail, Rational>,
    /// 2^ℓ Σ_{q ⊨ r odd} (−1)^{(n−ℓ(q))/2} Γ^q.
    pub gamma_compositions: BTreeMap<Composition, Rational>,
    /// 2^ℓ Σ_{q ⊨ r, F_r(q) odd} (−1)^{n−ℓ(q)} Ξ^q.
    pub xi: BTreeMap<Composition, Rational>,
}

impl TildeXiExpansion {
    pub fn pi_element(&self) -> DescentAlgElement {
        DescentAlgElement::from_pi_coords(self.r.sum(), &self.pi).expect("peak sets")
    }

    pub fn gamma_subset_element(&self) -> DescentAlgElement {
        DescentAlgElement::from_gamma_coords(self.r.sum(), &self.gamma_subsets).expect("peak sets")
    }

    pub fn gamma_composition_element(&self) -> DescentAlgElement {
        let coords = self
            .gamma_compositions
            .iter()
            .map(|(q, c)| (q.peak_set().expect("odd composition"), c.clone()))
            .collect();
        DescentAlgElement::from_gamma_coords(self.r.sum(), &coords).expect("peak sets")
    }

    pub fn xi_element(&self) -> DescentAlgElement {
        DescentAlgElement::from_xi_coords(self.r.sum(), &self.xi).expect("degree")
    }

    /// Whether all four forms evaluate to Ξ̃^r.
    pub fn forms_agree(&self) -> bool {
        let target = tilde_xi(&self.r);
        [self.pi_element(), self.gamma_subset_element(), self.gamma_composition_element(), self.xi_element()]
            .iter()
            .all(|e| *e == target)
    }
}

pub fn tilde_xi_expansion(r: &Composition) -> TildeXiExpansion {
    let n = r.sum();
    let scale = int(1 << r.len());
    let dr = r.descent_set();
    let d = dr.union(&dr.shift_up());

    let mut pi_map = BTreeMap::new();
    let mut gamma_subsets = BTreeMap::new();
    let mut gamma_compositions = BTreeMap::new();
    let mut xi = BTreeMap::new();
    if n == 0 {
        xi.insert(Composition::empty(), Rational::one());
        pi_map.insert(SubsetOfRail::empty(0), Rational::one());
        gamma_subsets.insert(SubsetOfRail::empty(0), Rational::one());
        gamma_compositions.insert(Composition::empty(), Rational::one());
        return TildeXiExpansion { r: r.clone(), pi: pi_map, gamma_subsets, gamma_compositions, xi };
    }
    for q in d.subsets().filter(SubsetOfRail::is_peak_set) {
        pi_map.insert(q, scale.clone());
    }
    for q in d.complement().subsets().filter(SubsetOfRail::is_peak_set) {
        gamma_subsets.insert(q, &scale * sign::<Rational>(q.len()));
    }
    for q in r.refinements() {
        if q.is_odd() {
            let c = &scale * sign::<Rational>((n - q.len()) / 2);
            gamma_compositions.insert(q.clone(), c);
        }
        if q.finals_odd(r) {
            xi.insert(q.clone(), &scale * sign::<Rational>(n - q.len()));
        }
    }
    TildeXiExpansion { r: r.clone(), pi: pi_map, gamma_subsets, gamma_compositions, xi }
}

/// Δ^D ∗ Ξ̃^n = Σ_{P ⊆ D △ (D+1)} 2^{|P|+1} Π^P over peak sets P.
pub fn tilde_delta(d: &SubsetOfRail) -> DescentAlgElement {
    let n = d.n();
    if n == 0 {
        return tilde_xi_n(0);
    }
    let e = d.symmetric_difference(&d.shift_up());
    let coords = e
        .subsets()
        .filter(SubsetOfRail::is_peak_set)
        .map(|p| (p, int(1 << (p.len() + 1))))
        .collect();
    DescentAlgElement::from_pi_coords(n, &coords).expect("peak sets")
}

/// The epimorphism φ ↦ φ ∗ Ξ̃^n of D onto P.
pub fn iota_tilde_xi(phi: &DescentAlgElement) -> DescentAlgElement {
    phi.inner(&tilde_xi_n(phi.degree()))
}

/// Outcome of the two multiplication rules for Ξ̃^n.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MultiTildeXi {
    /// Δ^{1^n} ∗ Ξ̃^n = Ξ̃^n.
    pub reversal_fixes: bool,
    /// Ξ̃^n ∗ Ξ̃^n = 2Ξ̃^n + Σ_{k=1}^{n−1} Ξ̃^{k.(n−k)}.
    pub square: bool,
}

impl MultiTildeXi {
    pub fn holds(&self) -> bool {
        self.reversal_fixes && self.square
    }
}

pub fn multi_tilde_xi_identities(n: usize) -> Result<MultiTildeXi> {
    if n == 0 {
        return Err(Error::InvalidIndex("the identities need n ≥ 1".into()));
    }
    let t = tilde_xi_n(n);
    let reversal = DescentAlgElement::delta(&SubsetOfRail::full(n));
    let reversal_fixes = reversal.inner(&t) == t;
    let mut rhs = t.scale(&int(2));
    for k in 1..n {
        rhs = rhs + tilde_xi(&Composition::from_parts(vec![k, n - k]));
    }
    Ok(MultiTildeXi { reversal_fixes, square: t.inner(&t) == rhs })
}

/// Ξ̃^q written in the Ξ basis, checked against Ξ^q ∗ Ξ̃^n.
pub fn xi_times_tilde_matches(q: &Composition) -> bool {
    iota_tilde_xi(&DescentAlgElement::xi(q)) == tilde_xi(q)
}

/// Rank of {Ξ̃^q : q ⊨ n odd} inside D_n.
pub fn tilde_xi_odd_rank(n: usize) -> usize {
    let rows: Vec<Vec<Rational>> = compositions(n)
        .into_iter()
        .filter(Composition::is_odd)
        .map(|q| tilde_xi(&q).xi_vec().to_vec())
        .collect();
    crate::linalg::rank(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{fibonacci, odd_compositions};
    use crate::descent_peak::bases::gamma_of;

    fn comp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn gamma_to_xi_small() {
        assert_eq!(gamma_to_xi(&comp("1")).unwrap(), BTreeMap::from([(comp("1"), int(1))]));
        for n in [1, 3, 5, 7] {
            assert_eq!(gamma_to_xi(&Composition::single(n)).unwrap().len(), 1 << ((n - 1) / 2));
        }
        assert!(gamma_to_xi(&comp("2")).is_err());
    }

    #[test]
    fn gamma_to_xi_matches_definition() {
        for n in 0..=7 {
            for q in odd_compositions(n) {
                let e = DescentAlgElement::from_xi_coords(n, &gamma_to_xi(&q).unwrap()).unwrap();
                assert_eq!(e, gamma_of(&q).unwrap(), "{q}");
            }
        }
    }

    #[test]
    fn tilde_xi_three_in_xi_basis() {
        let e = tilde_xi_expansion(&comp("3"));
        let expected = BTreeMap::from([(comp("3"), int(2)), (comp("2.1"), int(-2)), (comp("1.1.1"), int(2))]);
        assert_eq!(e.xi, expected);
        assert!(e.forms_agree());
    }

    #[test]
    fn expansions_agree() {
        for n in 0..=6 {
            for r in compositions(n) {
                assert!(tilde_xi_expansion(&r).forms_agree(), "{r}");
            }
        }
    }

    #[test]
    fn tilde_delta_matches_product() {
        for n in 1..=7 {
            for d in SubsetOfRail::all(n) {
                let direct = DescentAlgElement::delta(&d).inner(&tilde_xi_n(n));
                assert_eq!(tilde_delta(&d), direct, "{d}");
            }
        }
        assert_eq!(tilde_delta(&SubsetOfRail::empty(4)), tilde_xi_n(4));
    }

    #[test]
    fn multiplication_rules() {
        for n in 1..=7 {
            assert!(multi_tilde_xi_identities(n).unwrap().holds(), "n = {n}");
        }
    }

    #[test]
    fn iota_on_xi_basis_and_rank() {
        for q in compositions(5) {
            assert!(xi_times_tilde_matches(&q), "{q}");
        }
        for n in 0..=8 {
            assert_eq!(tilde_xi_odd_rank(n) as u64, fibonacci(n));
        }
    }
}
