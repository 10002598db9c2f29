//! The Klyachko idempotent, its peak variant and the span K̃_n.

use num_traits::{One, Zero};

use crate::combinatorics::statistics::descent_mask;
use crate::combinatorics::{Composition, SubsetOfRail};
use crate::cyclotomic::CycloNumber;
use crate::descent_peak::bases::tilde_xi_n;
use crate::descent_peak::xi_table::XiTable;
use crate::descent_peak::DescentAlgElement;
use crate::error::{check_degree, Result};
use crate::group_algebra::{AlgebraElement, Permutation};
use crate::linalg::rank;
use crate::scalar::{int, Rational, Scalar};

/// An element of D_n ⊗ Q(ε), stored by its Ξ coordinates (indexed by D(q)
/// masks, as in [`DescentAlgElement`]).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycloDescentElement {
    n: usize,
    xi: Vec<CycloNumber>,
}

fn size(n: usize) -> usize {
    1 << n.saturating_sub(1)
}

impl CycloDescentElement {
    pub fn zero(n: usize) -> Self {
        CycloDescentElement { n, xi: vec![CycloNumber::zero(); size(n)] }
    }

    pub fn from_rational(e: &DescentAlgElement) -> Self {
        CycloDescentElement { n: e.degree(), xi: e.xi_vec().iter().map(CycloNumber::from_rational).collect() }
    }

    /// Σ_D c_D Δ^D from Δ coordinates.
    pub fn from_delta_vec(n: usize, mut v: Vec<CycloNumber>) -> Self {
        assert_eq!(v.len(), size(n));
        let mut bit = 1;
        while bit < v.len() {
            for m in 0..v.len() {
                if m & bit == 0 {
                    let hi = v[m | bit].clone();
                    v[m] = v[m].clone() - hi;
                }
            }
            bit <<= 1;
        }
        CycloDescentElement { n, xi: v }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn xi_vec(&self) -> &[CycloNumber] {
        &self.xi
    }

    pub fn delta_vec(&self) -> Vec<CycloNumber> {
        let mut v = self.xi.clone();
        let mut bit = 1;
        while bit < v.len() {
            for m in 0..v.len() {
                if m & bit == 0 {
                    let hi = v[m | bit].clone();
                    v[m] += hi;
                }
            }
            bit <<= 1;
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.xi.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &CycloNumber) -> Self {
        CycloDescentElement { n: self.n, xi: self.xi.iter().map(|x| x.clone() * c.clone()).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        CycloDescentElement { n: self.n, xi: self.xi.iter().zip(&other.xi).map(|(a, b)| a.clone() + b.clone()).collect() }
    }

    pub fn inner(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "inner product of different degrees");
        let table = XiTable::get(self.n);
        let mut out = Self::zero(self.n);
        for (p, x) in self.xi.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (q, y) in other.xi.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x.clone() * y.clone();
                for &(r, c) in table.product(p, q) {
                    out.xi[r as usize] += xy.clone() * CycloNumber::from_rational(&int(c as i64));
                }
            }
        }
        out
    }

    pub fn outer(&self, other: &Self) -> Self {
        let (n, m) = (self.n, other.n);
        let mut out = Self::zero(n + m);
        for (p, x) in self.xi.iter().enumerate() {
            for (q, y) in other.xi.iter().enumerate() {
                if x.is_zero() || y.is_zero() {
                    continue;
                }
                let r = if n == 0 {
                    q
                } else if m == 0 {
                    p
                } else {
                    p | (1 << (n - 1)) | (q << n)
                };
                out.xi[r] += x.clone() * y.clone();
            }
        }
        out
    }

    pub fn to_algebra_element(&self) -> Result<AlgebraElement<CycloNumber>> {
        check_degree(self.n)?;
        let delta = self.delta_vec();
        Ok(Permutation::all(self.n)
            .filter_map(|p| {
                let c = &delta[descent_mask(&p) as usize];
                (!c.is_zero()).then(|| (p, c.clone()))
            })
            .collect())
    }
}

/// κ_n(t) = Σ_π t^{maj π} π at t = ε^i, where ε is a primitive `order`-th
/// root of unity.
pub fn klyachko_at(n: usize, order: u32, i: u64) -> CycloDescentElement {
    let eps = CycloNumber::epsilon(order);
    let delta = (0..size(n) as u32)
        .map(|m| eps.pow(i * SubsetOfRail::from_mask(n, m).sum() as u64))
        .collect();
    CycloDescentElement::from_delta_vec(n, delta)
}

/// κ_n(ε) with ε a primitive n-th root of unity.
pub fn klyachko(n: usize) -> CycloDescentElement {
    klyachko_at(n, n.max(1) as u32, 1)
}

/// κ̃_n(ε^i) = κ_n(ε^i)Ξ̃^n, with ε of order n.
pub fn peak_klyachko(n: usize, i: u64) -> CycloDescentElement {
    klyachko_at(n, n.max(1) as u32, i).inner(&CycloDescentElement::from_rational(&tilde_xi_n(n)))
}

/// M_z: the sum of all π with maj π ≡ z (mod n).
pub fn maj_class(n: usize, z: usize) -> DescentAlgElement {
    let delta = (0..size(n) as u32)
        .map(|m| int(i64::from(SubsetOfRail::from_mask(n, m).sum() % n == z % n)))
        .collect();
    DescentAlgElement::from_delta_vec(n, delta)
}

/// M̃_z = M_z Ξ̃^n.
pub fn maj_class_tilde(n: usize, z: usize) -> DescentAlgElement {
    maj_class(n, z).inner(&tilde_xi_n(n))
}

fn order_of(i: u64, n: u64) -> u64 {
    n / num_integer::gcd(i, n)
}

/// The factor in κ̃_n(ε^i)κ̃_n(ε^j) = λ κ̃_n(ε^j) when ε^i and ε^j have the
/// same order d: λ = 2^{n/d}·(d^{.n/d})?.
pub fn peak_klyachko_factor(n: usize, d: usize) -> u64 {
    let k = n / d;
    (1u64 << k) * Composition::from_parts(vec![d; k]).centralizer_order()
}

/// Facts about K̃_n for odd n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicCharacters {
    pub n: usize,
    /// Ξ^q M̃_i lies in span{M̃_j} for all q and i.
    pub left_ideal: bool,
    /// The multiplication rule with factor 2^{n/d}·(d^{.n/d})?.
    pub multiplication_rule: bool,
    /// The rule with the factor (d^{.n/d})? alone.
    pub multiplication_rule_without_power_of_two: bool,
    /// M̃_i = M̃_{n−i} for all i.
    pub symmetric: bool,
    /// κ̃_n(ε^i) = κ̃_d(ε^i)^{⋆ n/d} for all i.
    pub factorization: bool,
    pub dim: usize,
    /// The conjectured value (n+1)/2.
    pub conjectured_dim: usize,
}

pub fn cyclic_characters(n: usize) -> Result<CyclicCharacters> {
    check_degree(n)?;
    if n % 2 == 0 {
        return Err(crate::Error::NotOdd(n.to_string()));
    }
    let ms: Vec<DescentAlgElement> = (0..n).map(|z| maj_class_tilde(n, z)).collect();
    let rows: Vec<Vec<Rational>> = ms.iter().map(|m| m.xi_vec().to_vec()).collect();
    let dim = rank(&rows);
    let left_ideal = crate::combinatorics::compositions(n).iter().all(|q| {
        let x = DescentAlgElement::xi(q);
        ms.iter().all(|m| {
            let mut with = rows.clone();
            with.push(x.inner(m).xi_vec().to_vec());
            rank(&with) == dim
        })
    });
    let symmetric = (1..n).all(|i| ms[i] == ms[n - i]);

    let kappas: Vec<CycloDescentElement> = (1..=n as u64).map(|i| peak_klyachko(n, i)).collect();
    let mut rule = true;
    let mut rule_plain = true;
    for i in 1..=n as u64 {
        for j in 1..=n as u64 {
            let prod = kappas[i as usize - 1].inner(&kappas[j as usize - 1]);
            let (di, dj) = (order_of(i, n as u64), order_of(j, n as u64));
            let target = |factor: u64| {
                if di == dj {
                    kappas[j as usize - 1].scale(&CycloNumber::from_rational(&int(factor as i64)))
                } else {
                    CycloDescentElement::zero(n)
                }
            };
            let d = dj as usize;
            rule &= prod == target(peak_klyachko_factor(n, d));
            let plain = Composition::from_parts(vec![d; n / d]).centralizer_order();
            rule_plain &= prod == target(plain);
        }
    }

    let factorization = (1..=n as u64).all(|i| {
        let d = order_of(i, n as u64) as usize;
        let base = klyachko_at(d, n as u32, i).inner(&CycloDescentElement::from_rational(&tilde_xi_n(d)));
        let mut acc = CycloDescentElement::from_rational(&DescentAlgElement::xi(&Composition::empty()));
        for _ in 0..n / d {
            acc = acc.outer(&base);
        }
        acc == kappas[i as usize - 1]
    });

    Ok(CyclicCharacters {
        n,
        left_ideal,
        multiplication_rule: rule,
        multiplication_rule_without_power_of_two: rule_plain,
        symmetric,
        factorization,
        dim,
        conjectured_dim: (n + 1) / 2,
    })
}

/// (1/n)κ_n(ε) is idempotent.
pub fn klyachko_is_idempotent(n: usize) -> bool {
    let k = klyachko(n).scale(&CycloNumber::from_rational(&Rational::new(One::one(), (n as i64).into())));
    k.inner(&k) == k
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let k1 = klyachko(1).to_algebra_element().unwrap();
        assert_eq!(k1, AlgebraElement::identity(1));
        let k2 = klyachko(2).to_algebra_element().unwrap();
        let id = Permutation::identity(2);
        let swap = Permutation::new(&[2, 1]).unwrap();
        assert_eq!(k2.coeff(&id), CycloNumber::one());
        assert_eq!(k2.coeff(&swap), -CycloNumber::one());
    }

    #[test]
    fn idempotent() {
        for n in 1..=5 {
            assert!(klyachko_is_idempotent(n), "n = {n}");
        }
    }

    #[test]
    fn three() {
        let c = cyclic_characters(3).unwrap();
        assert!(c.symmetric && c.left_ideal && c.multiplication_rule && c.factorization);
        assert!(!c.multiplication_rule_without_power_of_two);
        assert!(c.dim <= 2);
        assert_eq!(maj_class_tilde(3, 0), maj_class_tilde(3, 3));
    }

    #[test]
    fn five_and_seven() {
        for n in [5, 7] {
            let c = cyclic_characters(n).unwrap();
            assert!(c.symmetric && c.left_ideal && c.multiplication_rule && c.factorization, "{c:?}");
            assert!(c.dim <= c.conjectured_dim);
        }
    }
}
