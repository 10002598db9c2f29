use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::One;

use super::DescentAlgElement;
use crate::combinatorics::statistics::{descent_set, peak_set};
use crate::combinatorics::{Composition, SubsetOfRail};
use crate::error::{check_degree, Error, Result};
use crate::group_algebra::{AlgebraElement, Permutation};
use crate::scalar::{int, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisKind {
    Delta,
    Xi,
    Pi,
    Gamma,
    TildeXi,
}

impl BasisKind {
    pub fn name(&self) -> &'static str {
        match self {
            BasisKind::Delta => "Delta",
            BasisKind::Xi => "Xi",
            BasisKind::Pi => "Pi",
            BasisKind::Gamma => "Gamma",
            BasisKind::TildeXi => "TildeXi",
        }
    }

    /// Pi and Gamma are indexed by peak sets, the others by compositions.
    pub fn indexed_by_subsets(&self) -> bool {
        matches!(self, BasisKind::Pi | BasisKind::Gamma)
    }
}

impl FromStr for BasisKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "delta" => Ok(BasisKind::Delta),
            "xi" => Ok(BasisKind::Xi),
            "pi" => Ok(BasisKind::Pi),
            "gamma" => Ok(BasisKind::Gamma),
            "tilde-xi" | "tildexi" => Ok(BasisKind::TildeXi),
            _ => Err(Error::Parse(format!("unknown basis {s:?}; expected delta, xi, pi, gamma or tilde-xi"))),
        }
    }
}

impl fmt::Display for BasisKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisIndex {
    Composition(Composition),
    Subset(SubsetOfRail),
}

/// A basis element of D_n: Δ^q, Ξ^q, Π^P, Γ^P or Ξ̃^q.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisId {
    kind: BasisKind,
    n: usize,
    index: BasisIndex,
}

impl BasisId {
    pub fn composition(kind: BasisKind, q: Composition) -> Result<Self> {
        if kind.indexed_by_subsets() {
            // Pi and Gamma may also be indexed by odd compositions.
            let p = q.peak_set()?;
            return Ok(BasisId { kind, n: q.sum(), index: BasisIndex::Subset(p) });
        }
        Ok(BasisId { kind, n: q.sum(), index: BasisIndex::Composition(q) })
    }

    pub fn subset(kind: BasisKind, s: SubsetOfRail) -> Result<Self> {
        if kind.indexed_by_subsets() {
            if !s.is_peak_set() {
                return Err(Error::InvalidIndex(format!("{s} is not a peak set in [{}]", s.n())));
            }
            return Ok(BasisId { kind, n: s.n(), index: BasisIndex::Subset(s) });
        }
        Ok(BasisId { kind, n: s.n(), index: BasisIndex::Composition(Composition::from_descent_set(&s)) })
    }

    /// Parse an index string: a dot-joined composition for Delta, Xi and
    /// TildeXi, a comma-joined peak set for Pi and Gamma. A missing index
    /// means the composition n, respectively the empty peak set.
    pub fn parse(kind: BasisKind, n: usize, index: Option<&str>) -> Result<Self> {
        if kind.indexed_by_subsets() {
            let s = match index {
                Some(s) => SubsetOfRail::parse(n, s)?,
                None => SubsetOfRail::empty(n),
            };
            return Self::subset(kind, s);
        }
        let q = match index {
            Some(s) => s.parse::<Composition>()?,
            None => Composition::single(n),
        };
        if q.sum() != n {
            return Err(Error::InvalidIndex(format!("composition {q} does not sum to {n}")));
        }
        Self::composition(kind, q)
    }

    pub fn kind(&self) -> BasisKind {
        self.kind
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn index(&self) -> &BasisIndex {
        &self.index
    }

    /// The index as used in coordinate keys.
    pub fn key(&self) -> String {
        match &self.index {
            BasisIndex::Composition(q) => q.to_string(),
            BasisIndex::Subset(s) => s.key(),
        }
    }
}

impl fmt::Display for BasisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{{{}}}", self.kind, self.key())
    }
}

/// The permutation-level basis element, built directly from its defining
/// property by scanning S_n.
pub fn basis_element(id: &BasisId) -> Result<AlgebraElement<Rational>> {
    let n = id.n;
    check_degree(n)?;
    let all = Permutation::all(n);
    let out = match (&id.kind, &id.index) {
        (BasisKind::Delta, BasisIndex::Composition(q)) => {
            let d = q.descent_set();
            AlgebraElement::sum_of(all.filter(|p| descent_set(p) == d))
        }
        (BasisKind::Xi, BasisIndex::Composition(q)) => {
            let d = q.descent_set();
            AlgebraElement::sum_of(all.filter(|p| descent_set(p).is_subset_of(&d)))
        }
        (BasisKind::Pi, BasisIndex::Subset(s)) => AlgebraElement::sum_of(all.filter(|p| peak_set(p) == *s)),
        (BasisKind::Gamma, BasisIndex::Subset(s)) => {
            AlgebraElement::sum_of(all.filter(|p| s.is_subset_of(&peak_set(p))))
        }
        (BasisKind::TildeXi, BasisIndex::Composition(q)) => {
            let mut acc = AlgebraElement::unit();
            for &m in q.parts() {
                let valley = AlgebraElement::sum_of(Permutation::all(m).filter(|p| peak_set(p).is_empty()));
                acc = acc.outer(&valley.scale(&int(2)));
            }
            acc
        }
        _ => unreachable!("index kind fixed by the constructors"),
    };
    Ok(out)
}

/// The basis element in Ξ-coordinates, by the change-of-basis formulas.
pub fn basis(id: &BasisId) -> DescentAlgElement {
    let n = id.n;
    match (&id.kind, &id.index) {
        (BasisKind::Delta, BasisIndex::Composition(q)) => DescentAlgElement::delta(&q.descent_set()),
        (BasisKind::Xi, BasisIndex::Composition(q)) => DescentAlgElement::xi(q),
        (BasisKind::Pi, BasisIndex::Subset(s)) => pi(s),
        (BasisKind::Gamma, BasisIndex::Subset(s)) => gamma(s),
        (BasisKind::TildeXi, BasisIndex::Composition(q)) => tilde_xi(q),
        _ => unreachable!("index kind fixed by the constructors; degree {n}"),
    }
}

/// Π^P.
pub fn pi(p: &SubsetOfRail) -> DescentAlgElement {
    DescentAlgElement::from_pi_coords(p.n(), &BTreeMap::from([(*p, Rational::one())])).expect("peak set")
}

/// Γ^P = Σ_{Q⊇P} Π^Q.
pub fn gamma(p: &SubsetOfRail) -> DescentAlgElement {
    DescentAlgElement::from_gamma_coords(p.n(), &BTreeMap::from([(*p, Rational::one())])).expect("peak set")
}

/// Γ^q = Γ^{P(q)} for odd q.
pub fn gamma_of(q: &Composition) -> Result<DescentAlgElement> {
    Ok(gamma(&q.peak_set()?))
}

/// Ξ̃^n = 2Π^∅ (and Ξ̃^0 = ∅).
pub fn tilde_xi_n(n: usize) -> DescentAlgElement {
    if n == 0 {
        return DescentAlgElement::xi(&Composition::empty());
    }
    pi(&SubsetOfRail::empty(n)).scale(&int(2))
}

/// Ξ̃^q = Ξ̃^{q1} ⋆ … ⋆ Ξ̃^{qk}.
pub fn tilde_xi(q: &Composition) -> DescentAlgElement {
    q.parts()
        .iter()
        .fold(DescentAlgElement::xi(&Composition::empty()), |acc, &m| acc.outer(&tilde_xi_n(m)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perms(xs: &[&[usize]]) -> AlgebraElement<Rational> {
        AlgebraElement::sum_of(xs.iter().map(|x| Permutation::new(x).unwrap()))
    }

    #[test]
    fn degree_three_examples() {
        let pi_empty = basis_element(&BasisId::parse(BasisKind::Pi, 3, Some("")).unwrap()).unwrap();
        assert_eq!(pi_empty, perms(&[&[1, 2, 3], &[2, 1, 3], &[3, 1, 2], &[3, 2, 1]]));
        let gamma3 = basis_element(&BasisId::composition(BasisKind::Gamma, "3".parse().unwrap()).unwrap()).unwrap();
        assert_eq!(gamma3, perms(&[&[1, 3, 2], &[2, 3, 1]]));
        let t = basis_element(&BasisId::parse(BasisKind::TildeXi, 3, None).unwrap()).unwrap();
        assert_eq!(t, pi_empty.scale(&int(2)));
    }

    #[test]
    fn formulas_match_definitions() {
        for n in 0..=6 {
            for kind in [BasisKind::Delta, BasisKind::Xi, BasisKind::TildeXi] {
                for q in crate::combinatorics::compositions(n) {
                    let id = BasisId::composition(kind, q).unwrap();
                    assert_eq!(basis(&id).to_algebra_element().unwrap(), basis_element(&id).unwrap(), "{id}");
                }
            }
            for kind in [BasisKind::Pi, BasisKind::Gamma] {
                for p in crate::combinatorics::peak_sets(n) {
                    let id = BasisId::subset(kind, p).unwrap();
                    assert_eq!(basis(&id).to_algebra_element().unwrap(), basis_element(&id).unwrap(), "{id}");
                }
            }
        }
    }

    #[test]
    fn invalid_indices() {
        assert!(BasisId::parse(BasisKind::Pi, 4, Some("1")).is_err());
        assert!(BasisId::parse(BasisKind::Pi, 5, Some("2,3")).is_err());
        assert!(BasisId::parse(BasisKind::Xi, 4, Some("2.1")).is_err());
        assert!(BasisId::parse(BasisKind::Gamma, 4, Some("2.2")).is_err());
        assert!("sigma".parse::<BasisKind>().is_err());
    }
}
