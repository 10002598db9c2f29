//! The coproduct ↓ restricted to D, in Ξ coordinates.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::DescentAlgElement;
use crate::combinatorics::Composition;
use crate::scalar::Rational;

/// A formal sum of Ξ^a ⊗ Ξ^b.
pub type Tensor = BTreeMap<(Composition, Composition), Rational>;

/// A formal sum of Ξ^a ⊗ Ξ^b ⊗ Ξ^c.
pub type Tensor3 = BTreeMap<(Composition, Composition, Composition), Rational>;

fn add_into<K: Ord>(m: &mut BTreeMap<K, Rational>, k: K, c: Rational) {
    let e = m.entry(k).or_insert_with(Rational::zero);
    *e += c;
}

fn prune<K: Ord>(mut m: BTreeMap<K, Rational>) -> BTreeMap<K, Rational> {
    m.retain(|_, c| !c.is_zero());
    m
}

fn part(k: usize) -> Composition {
    if k == 0 {
        Composition::empty()
    } else {
        Composition::single(k)
    }
}

/// Ξ^q↓ = Π_i Σ_k Ξ^k ⊗ Ξ^{q_i−k}, multiplied with ⋆ in each tensor factor.
pub fn coproduct_xi(q: &Composition) -> Tensor {
    let mut acc: Tensor = BTreeMap::from([((Composition::empty(), Composition::empty()), Rational::one())]);
    for &m in q.parts() {
        let mut next = Tensor::new();
        for ((a, b), c) in &acc {
            for k in 0..=m {
                add_into(&mut next, (a.concat(&part(k)), b.concat(&part(m - k))), c.clone());
            }
        }
        acc = next;
    }
    acc
}

/// φ↓ for φ ∈ D_n.
pub fn coproduct(phi: &DescentAlgElement) -> Tensor {
    let mut out = Tensor::new();
    for (q, c) in phi.xi_coords() {
        for (k, d) in coproduct_xi(&q) {
            add_into(&mut out, k, &c * d);
        }
    }
    prune(out)
}

/// a ⊗ b in Ξ coordinates.
pub fn tensor(a: &DescentAlgElement, b: &DescentAlgElement) -> Tensor {
    let mut out = Tensor::new();
    for (p, x) in a.xi_coords() {
        for (q, y) in b.xi_coords() {
            add_into(&mut out, (p.clone(), q), &x * &y);
        }
    }
    out
}

/// (↓ ⊗ id)↓ and (id ⊗ ↓)↓ on Ξ^q.
pub fn coassociative_on(q: &Composition) -> bool {
    let once = coproduct_xi(q);
    let mut left = Tensor3::new();
    let mut right = Tensor3::new();
    for ((a, b), c) in &once {
        for ((a1, a2), d) in coproduct_xi(a) {
            add_into(&mut left, (a1, a2, b.clone()), c * &d);
        }
        for ((b1, b2), d) in coproduct_xi(b) {
            add_into(&mut right, (a.clone(), b1, b2), c * &d);
        }
    }
    prune(left) == prune(right)
}

/// Ξ̃^n↓ = Σ_{k=0}^{n} Ξ̃^k ⊗ Ξ̃^{n−k}.
pub fn tilde_xi_coproduct_holds(n: usize) -> bool {
    use super::bases::tilde_xi_n;
    let mut rhs = Tensor::new();
    for k in 0..=n {
        for (key, c) in tensor(&tilde_xi_n(k), &tilde_xi_n(n - k)) {
            add_into(&mut rhs, key, c);
        }
    }
    coproduct(&tilde_xi_n(n)) == prune(rhs)
}

/// (α ⋆ β) ∗ γ = ⋆((α ⊗ β) ∗ γ↓), where the inner product on tensors acts
/// componentwise and only the components of matching degrees survive.
pub fn reciprocity_holds(alpha: &DescentAlgElement, beta: &DescentAlgElement, gamma: &DescentAlgElement) -> bool {
    let (n, m) = (alpha.degree(), beta.degree());
    assert_eq!(n + m, gamma.degree(), "degrees must add up");
    let lhs = alpha.outer(beta).inner(gamma);
    let mut rhs = DescentAlgElement::zero(n + m);
    for ((a, b), c) in coproduct(gamma) {
        if a.sum() != n || b.sum() != m {
            continue;
        }
        let left = alpha.inner(&DescentAlgElement::xi(&a));
        let right = beta.inner(&DescentAlgElement::xi(&b));
        rhs = rhs + left.outer(&right).scale(&c);
    }
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::compositions;
    use crate::descent_peak::bases::{tilde_xi, tilde_xi_n};

    fn comp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn xi_two() {
        let t = coproduct_xi(&comp("2"));
        let one = Rational::one();
        let expected = Tensor::from([
            ((comp(""), comp("2")), one.clone()),
            ((comp("1"), comp("1")), one.clone()),
            ((comp("2"), comp("")), one),
        ]);
        assert_eq!(t, expected);
    }

    #[test]
    fn coassociativity() {
        for n in 0..=5 {
            for q in compositions(n) {
                assert!(coassociative_on(&q), "{q}");
            }
        }
    }

    #[test]
    fn tilde_xi_is_divided_power() {
        for n in 0..=7 {
            assert!(tilde_xi_coproduct_holds(n), "n = {n}");
        }
    }

    #[test]
    fn reciprocity_on_tilde_xi() {
        for total in 0..=6 {
            for split in 0..=total {
                for r in compositions(total) {
                    let gamma = tilde_xi(&r);
                    for p in compositions(split) {
                        let alpha = DescentAlgElement::xi(&p);
                        let beta = tilde_xi_n(total - split);
                        assert!(reciprocity_holds(&alpha, &beta, &gamma), "{p} {r}");
                    }
                }
            }
        }
    }
}
