//! The Eulerian sub-algebra E_n and its peak analog Ẽ_n.

use std::fmt;
use std::str::FromStr;

use crate::class_functions::ClassFunction;
use crate::combinatorics::{binomial, compositions, partitions, peak_sets, Composition, Partition};
use crate::descent_peak::bases::{gamma, pi, tilde_xi_n};
use crate::descent_peak::relations::{classes_by_relation, Relation};
use crate::descent_peak::DescentAlgElement;
use crate::error::{Error, Result};
use crate::group_algebra::Permutation;
use crate::lie_idempotents::canonical;
use crate::linalg::{rank, solve};
use crate::scalar::{int, rat, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EulerianFamily {
    /// Δ^{n,k}: permutations with k − 1 descents.
    Delta,
    /// Ξ^{n,k} = Σ_{ℓ(q)=k} Ξ^q.
    Xi,
    /// Π^{n,k}: permutations with k peaks.
    Pi,
    /// Γ^{n,k} = Σ_{|P|=k} Γ^P.
    Gamma,
    /// ρ_{n,k} = (1/k!)Σ_{ℓ(q)=k} ρ_q.
    Rho,
    /// ρ̃_{n,k} = ρ_{n,k}Ξ̃^n.
    TildeRho,
    /// Ξ̃^{n,k} = Ξ^{n,k}Ξ̃^n.
    TildeXi,
}

impl FromStr for EulerianFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "delta" => Ok(EulerianFamily::Delta),
            "xi" => Ok(EulerianFamily::Xi),
            "pi" => Ok(EulerianFamily::Pi),
            "gamma" => Ok(EulerianFamily::Gamma),
            "rho" => Ok(EulerianFamily::Rho),
            "tilde-rho" => Ok(EulerianFamily::TildeRho),
            "tilde-xi" => Ok(EulerianFamily::TildeXi),
            _ => Err(Error::Parse(format!("unknown Eulerian family {s:?}"))),
        }
    }
}

impl fmt::Display for EulerianFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            EulerianFamily::Delta => "Delta",
            EulerianFamily::Xi => "Xi",
            EulerianFamily::Pi => "Pi",
            EulerianFamily::Gamma => "Gamma",
            EulerianFamily::Rho => "Rho",
            EulerianFamily::TildeRho => "TildeRho",
            EulerianFamily::TildeXi => "TildeXi",
        };
        f.write_str(name)
    }
}

fn by_length(n: usize, k: usize, f: impl Fn(&Composition) -> DescentAlgElement) -> DescentAlgElement {
    compositions(n)
        .iter()
        .filter(|q| q.len() == k)
        .fold(DescentAlgElement::zero(n), |acc, q| acc + f(q))
}

fn by_peak_count(n: usize, k: usize, f: impl Fn(&crate::combinatorics::SubsetOfRail) -> DescentAlgElement) -> DescentAlgElement {
    peak_sets(n)
        .iter()
        .filter(|p| p.len() == k)
        .fold(DescentAlgElement::zero(n), |acc, p| acc + f(p))
}

/// ρ_q = ρ_{q1} ⋆ … ⋆ ρ_{qk}.
pub fn rho_q(q: &Composition) -> DescentAlgElement {
    q.parts()
        .iter()
        .fold(DescentAlgElement::xi(&Composition::empty()), |acc, &m| acc.outer(&canonical(m)))
}

/// The k-th member of a family in degree n. Π^{n,k} and Γ^{n,k} are zero
/// when k exceeds the largest peak-set size.
pub fn eulerian_element(family: EulerianFamily, n: usize, k: usize) -> DescentAlgElement {
    match family {
        EulerianFamily::Delta => by_length(n, k, |q| DescentAlgElement::delta(&q.descent_set())),
        EulerianFamily::Xi => by_length(n, k, DescentAlgElement::xi),
        EulerianFamily::Pi => by_peak_count(n, k, pi),
        EulerianFamily::Gamma => by_peak_count(n, k, gamma),
        EulerianFamily::Rho => {
            let kf = crate::combinatorics::factorial(k) as i64;
            by_length(n, k, rho_q).scale(&rat(1, kf))
        }
        EulerianFamily::TildeRho => eulerian_element(EulerianFamily::Rho, n, k).inner(&tilde_xi_n(n)),
        EulerianFamily::TildeXi => eulerian_element(EulerianFamily::Xi, n, k).inner(&tilde_xi_n(n)),
    }
}

/// dim Ẽ_n: (n+1)/2 for odd n, n/2 for even n (and 1 for n = 0).
pub fn peak_eulerian_dimension(n: usize) -> usize {
    if n == 0 {
        1
    } else {
        (n + 1) / 2
    }
}

/// Π^{n,0}, …, Π^{n,m} with m the largest peak-set size.
pub fn pi_basis(n: usize) -> Vec<DescentAlgElement> {
    (0..peak_eulerian_dimension(n)).map(|k| eulerian_element(EulerianFamily::Pi, n, k)).collect()
}

/// ρ_{n,1}, …, ρ_{n,n}.
pub fn reutenauer_idempotents(n: usize) -> Vec<DescentAlgElement> {
    (1..=n).map(|k| eulerian_element(EulerianFamily::Rho, n, k)).collect()
}

/// Pairs (k, (1/2^k)ρ̃_{n,k}) for k ≡ n (mod 2).
pub fn peak_eulerian_idempotents(n: usize) -> Vec<(usize, DescentAlgElement)> {
    (1..=n)
        .filter(|k| (n - k) % 2 == 0)
        .map(|k| (k, eulerian_element(EulerianFamily::TildeRho, n, k).scale(&rat(1, 1 << k))))
        .collect()
}

/// char_{n,k} = Σ_{p ⊢ n odd, ℓ(p)=k} char_p.
pub fn char_nk(n: usize, k: usize) -> ClassFunction {
    partitions(n)
        .iter()
        .filter(|p| p.is_odd() && p.len() == k)
        .fold(ClassFunction::zero(n), |acc, p: &Partition| acc.add(&ClassFunction::char_of(p)))
}

/// Coordinates of x in the Π^{n,k} basis, if x ∈ Ẽ_n.
pub fn pi_coordinates(x: &DescentAlgElement) -> Option<Vec<Rational>> {
    let rows: Vec<Vec<Rational>> = pi_basis(x.degree()).iter().map(|b| b.xi_vec().to_vec()).collect();
    solve(&rows, x.xi_vec())
}

/// table[i][j] holds the Π^{n,k} coordinates of Π^{n,i} ∗ Π^{n,j}.
pub fn multiplication_table(n: usize) -> Result<Vec<Vec<Vec<Rational>>>> {
    let basis = pi_basis(n);
    basis
        .iter()
        .map(|a| {
            basis
                .iter()
                .map(|b| {
                    pi_coordinates(&a.inner(b))
                        .ok_or_else(|| Error::NotInPeakAlgebra("product leaves the Eulerian peak algebra".into()))
                })
                .collect()
        })
        .collect()
}

/// Ranks of {(Π^∅)^1}, {(Π^∅)^1, (Π^∅)^2}, …; Ẽ_n is generated by Π^∅ when
/// the last rank equals dim Ẽ_n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenerationCertificate {
    pub ranks: Vec<usize>,
    pub dim: usize,
}

impl GenerationCertificate {
    pub fn generated(&self) -> bool {
        self.ranks.last() == Some(&self.dim)
    }
}

pub fn generated_by_pi_empty(n: usize) -> GenerationCertificate {
    let dim = peak_eulerian_dimension(n);
    let base = pi(&crate::combinatorics::SubsetOfRail::empty(n));
    let mut power = base.clone();
    let mut rows = Vec::new();
    let mut ranks = Vec::new();
    for _ in 0..dim {
        rows.push(power.xi_vec().to_vec());
        ranks.push(rank(&rows));
        power = power.inner(&base);
    }
    GenerationCertificate { ranks, dim }
}

/// e = Σ_{k≡n (2)} (1/2^k)ρ̃_{n,k}.
pub fn idempotent_e(n: usize) -> DescentAlgElement {
    if n == 0 {
        return DescentAlgElement::xi(&Composition::empty());
    }
    peak_eulerian_idempotents(n).into_iter().fold(DescentAlgElement::zero(n), |acc, (_, x)| acc + x)
}

/// dim D_n e.
pub fn left_ideal_dimension(e: &DescentAlgElement) -> usize {
    let rows: Vec<Vec<Rational>> =
        compositions(e.degree()).iter().map(|q| DescentAlgElement::xi(q).inner(e).xi_vec().to_vec()).collect();
    rank(&rows)
}

/// Closure classes of the peak-number-neighbor relation.
pub fn peak_number_classes(n: usize) -> Result<Vec<Vec<Permutation>>> {
    classes_by_relation(n, Relation::PeakNumber)
}

/// Ξ̃^{n,k} = 2^k Σ_j (−1)^j C(n−1−2j, k−1) Γ^{n,j}.
pub fn tilde_xi_nk_in_gamma(n: usize, k: usize) -> DescentAlgElement {
    if n == 0 || k == 0 {
        return DescentAlgElement::zero(n);
    }
    let mut out = DescentAlgElement::zero(n);
    for j in 0..peak_eulerian_dimension(n) {
        if n - 1 < 2 * j {
            break;
        }
        let c = binomial(n - 1 - 2 * j, k - 1) as i64;
        if c == 0 {
            continue;
        }
        let s = if j % 2 == 0 { 1 } else { -1 };
        out = out + eulerian_element(EulerianFamily::Gamma, n, j).scale(&int((1 << k) * s * c));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn identity(n: usize) -> DescentAlgElement {
        DescentAlgElement::xi(&Composition::single(n))
    }
    use crate::class_functions::solomon_c;
    use crate::combinatorics::fibonacci;

    #[test]
    fn degree_three_sums() {
        let p0 = eulerian_element(EulerianFamily::Pi, 3, 0);
        let p1 = eulerian_element(EulerianFamily::Pi, 3, 1);
        assert_eq!(p0.to_algebra_element().unwrap().support_len(), 4);
        assert_eq!(p1.to_algebra_element().unwrap().support_len(), 2);
        assert_eq!(eulerian_element(EulerianFamily::Gamma, 3, 0), &p0 + &p1);
        assert!(eulerian_element(EulerianFamily::Pi, 3, 2).is_zero());
    }

    #[test]
    fn transitions() {
        for n in 1..=8 {
            let m = peak_eulerian_dimension(n);
            for k in 0..m {
                let g = (k..m).fold(DescentAlgElement::zero(n), |acc, j| {
                    acc + eulerian_element(EulerianFamily::Pi, n, j).scale(&int(binomial(j, k) as i64))
                });
                assert_eq!(eulerian_element(EulerianFamily::Gamma, n, k), g);
                let p = (k..m).fold(DescentAlgElement::zero(n), |acc, j| {
                    let s = if (j - k) % 2 == 0 { 1 } else { -1 };
                    acc + eulerian_element(EulerianFamily::Gamma, n, j).scale(&int(s * binomial(j, k) as i64))
                });
                assert_eq!(eulerian_element(EulerianFamily::Pi, n, k), p);
            }
            for k in 1..=n {
                let t = eulerian_element(EulerianFamily::TildeXi, n, k);
                assert!(pi_coordinates(&t).is_some());
                assert_eq!(t, tilde_xi_nk_in_gamma(n, k), "n = {n}, k = {k}");
            }
        }
    }

    #[test]
    fn reutenauer() {
        assert_eq!(reutenauer_idempotents(1), vec![identity(1)]);
        for n in 1..=6 {
            let rs = reutenauer_idempotents(n);
            let sum = rs.iter().fold(DescentAlgElement::zero(n), |acc, r| &acc + r);
            assert_eq!(sum, identity(n));
            for (i, a) in rs.iter().enumerate() {
                for (j, b) in rs.iter().enumerate() {
                    let prod = a.inner(b);
                    if i == j {
                        assert_eq!(prod, *a);
                    } else {
                        assert!(prod.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn peak_idempotents() {
        for n in 1..=7 {
            for k in 1..=n {
                let t = eulerian_element(EulerianFamily::TildeRho, n, k);
                assert_eq!(t.is_zero(), (n - k) % 2 == 1, "n = {n}, k = {k}");
            }
            let es = peak_eulerian_idempotents(n);
            assert_eq!(es.len(), peak_eulerian_dimension(n));
            let rows: Vec<Vec<Rational>> = es.iter().map(|(_, e)| e.xi_vec().to_vec()).collect();
            assert_eq!(rank(&rows), es.len());
            for (i, (k, a)) in es.iter().enumerate() {
                assert!(pi_coordinates(a).is_some());
                assert_eq!(solomon_c(a), char_nk(n, *k));
                for (j, (_, b)) in es.iter().enumerate() {
                    let prod = a.inner(b);
                    assert!(if i == j { prod == *a } else { prod.is_zero() });
                }
            }
        }
    }

    #[test]
    fn algebra_structure() {
        for n in 1..=7 {
            let t = multiplication_table(n).unwrap();
            for i in 0..t.len() {
                for j in 0..t.len() {
                    assert_eq!(t[i][j], t[j][i]);
                }
            }
            let rows: Vec<Vec<Rational>> = pi_basis(n).iter().map(|b| b.xi_vec().to_vec()).collect();
            assert_eq!(rank(&rows), peak_eulerian_dimension(n));
            let cert = generated_by_pi_empty(n);
            assert!(cert.generated(), "{cert:?}");
            let c_rows: Vec<Vec<Rational>> = pi_basis(n)
                .iter()
                .map(|b| {
                    let f = solomon_c(b);
                    partitions(n).iter().map(|p| f.value(p)).collect()
                })
                .collect();
            assert_eq!(rank(&c_rows), peak_eulerian_dimension(n));
        }
        assert_eq!(generated_by_pi_empty(2).ranks, vec![1]);
        assert_eq!(generated_by_pi_empty(3).ranks, vec![1, 2]);
        assert_eq!(generated_by_pi_empty(8).dim, 4);
    }

    #[test]
    fn idempotent_e_generates() {
        assert_eq!(idempotent_e(1), identity(1));
        for n in 1..=7 {
            let e = idempotent_e(n);
            assert_eq!(e.inner(&e), e);
            assert!(e.is_peak());
            assert_eq!(left_ideal_dimension(&e) as u64, fibonacci(n), "n = {n}");
        }
    }

    #[test]
    fn peak_number_classes_sizes() {
        let sizes = |n| {
            let mut s: Vec<usize> = peak_number_classes(n).unwrap().iter().map(Vec::len).collect();
            s.sort_unstable();
            s
        };
        assert_eq!(sizes(3), vec![2, 4]);
        assert_eq!(sizes(4).len(), 2);
        assert_eq!(sizes(2), vec![2]);
    }
}
