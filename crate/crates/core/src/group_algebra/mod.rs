//! The graded group algebra KS = ⊕ KS_n with the inner product ∗, the
//! shifted concatenation #, and the convolution ⋆.

mod kernel;
mod permutation;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde_json::{json, Value};

pub use permutation::Permutation;

use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

type Component<F> = BTreeMap<Permutation, F>;

/// A finite sum of permutations of various degrees with exact coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement<F> {
    terms: BTreeMap<usize, Component<F>>,
}

impl<F: Scalar> Default for AlgebraElement<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Scalar> AlgebraElement<F> {
    pub fn zero() -> Self {
        AlgebraElement { terms: BTreeMap::new() }
    }

    pub fn monomial(pi: Permutation, c: F) -> Self {
        let mut out = Self::zero();
        out.add_term(pi, c);
        out
    }

    pub fn from_perm(pi: Permutation) -> Self {
        Self::monomial(pi, F::one())
    }

    /// The empty permutation, the identity for ⋆.
    pub fn unit() -> Self {
        Self::from_perm(Permutation::empty())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_perm(Permutation::identity(n))
    }

    /// Σ of the given permutations with coefficient one.
    pub fn sum_of<I: IntoIterator<Item = Permutation>>(perms: I) -> Self {
        perms.into_iter().map(|p| (p, F::one())).collect()
    }

    pub fn add_term(&mut self, pi: Permutation, c: F) {
        if c.is_zero() {
            return;
        }
        let n = pi.degree();
        let comp = self.terms.entry(n).or_default();
        match comp.get_mut(&pi) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    comp.remove(&pi);
                    if comp.is_empty() {
                        self.terms.remove(&n);
                    }
                }
            }
            None => {
                comp.insert(pi, c);
            }
        }
    }

    pub fn coeff(&self, pi: &Permutation) -> F {
        self.terms.get(&pi.degree()).and_then(|c| c.get(pi)).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.terms.keys().copied()
    }

    /// Terms of degree n.
    pub fn component(&self, n: usize) -> Self {
        let mut out = Self::zero();
        if let Some(c) = self.terms.get(&n) {
            out.terms.insert(n, c.clone());
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &F)> {
        self.terms.values().flat_map(|c| c.iter())
    }

    pub fn support_len(&self) -> usize {
        self.terms.values().map(BTreeMap::len).sum()
    }

    /// Whether the support lies in degree n (the zero element lies in every degree).
    pub fn is_homogeneous(&self, n: usize) -> bool {
        self.terms.keys().all(|&d| d == n)
    }

    /// The unique degree of a nonzero homogeneous element.
    pub fn degree(&self) -> Result<Option<usize>> {
        match self.terms.len() {
            0 => Ok(None),
            1 => Ok(self.terms.keys().next().copied()),
            _ => Err(Error::NotHomogeneous),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        self.terms().map(|(p, x)| (p.clone(), x.clone() * c.clone())).collect()
    }

    pub fn map_scalars<G: Scalar>(&self, f: impl Fn(&F) -> G) -> AlgebraElement<G> {
        self.terms().map(|(p, x)| (p.clone(), f(x))).collect()
    }

    /// The inner product ∗: degree-wise group-algebra multiplication.
    pub fn inner(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (n, a) in &self.terms {
            if let Some(b) = other.terms.get(n) {
                let prod = kernel::product(*n, a, b);
                if !prod.is_empty() {
                    out.terms.insert(*n, prod);
                }
            }
        }
        out
    }

    /// The product by the reference double loop over supports, used as an oracle.
    pub fn inner_naive(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (p, x) in self.terms() {
            for (q, y) in other.terms() {
                if p.degree() == q.degree() {
                    out.add_term(p.compose(q), x.clone() * y.clone());
                }
            }
        }
        out
    }

    /// The shifted concatenation product #.
    pub fn hash(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (p, x) in self.terms() {
            for (q, y) in other.terms() {
                out.add_term(p.hash(q), x.clone() * y.clone());
            }
        }
        out
    }

    /// The convolution a ⋆ b = (a # b) ∗ Ξ^{n.m} on homogeneous pieces.
    pub fn outer(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&n, a) in &self.terms {
            for (&m, b) in &other.terms {
                let a = AlgebraElement { terms: BTreeMap::from([(n, a.clone())]) };
                let b = AlgebraElement { terms: BTreeMap::from([(m, b.clone())]) };
                let h = a.hash(&b);
                out = out + h.inner(&AlgebraElement::<F>::sum_of(shuffles(n, m)));
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let degree_terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(n, comp)| {
                let terms: Vec<Value> =
                    comp.iter().map(|(p, c)| json!({"perm": p, "coeff": c.to_json()})).collect();
                json!({"n": n, "terms": terms})
            })
            .collect();
        json!({ "degree-terms": degree_terms })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("bad element JSON: {what}"));
        let mut out = Self::zero();
        for block in v.get("degree-terms").and_then(Value::as_array).ok_or_else(|| bad("degree-terms"))? {
            let n = block.get("n").and_then(Value::as_u64).ok_or_else(|| bad("n"))? as usize;
            for t in block.get("terms").and_then(Value::as_array).ok_or_else(|| bad("terms"))? {
                let perm: Permutation = serde_json::from_value(t.get("perm").cloned().ok_or_else(|| bad("perm"))?)
                    .map_err(|e| Error::Parse(e.to_string()))?;
                if perm.degree() != n {
                    return Err(Error::DegreeMismatch { expected: n, found: perm.degree() });
                }
                out.add_term(perm, F::from_json(t.get("coeff").ok_or_else(|| bad("coeff"))?)?);
            }
        }
        Ok(out)
    }
}

/// Ξ^{n.m}: all w ∈ S_{n+m} with Des(w) ⊆ {n}.
pub fn shuffles(n: usize, m: usize) -> Vec<Permutation> {
    let total = n + m;
    let mut out = Vec::with_capacity(binomial(total, n) as usize);
    for mask in 0u32..(1 << total) {
        if mask.count_ones() as usize != n {
            continue;
        }
        let mut images: Vec<u8> = (1..=total as u8).filter(|v| mask & (1 << (v - 1)) != 0).collect();
        images.extend((1..=total as u8).filter(|v| mask & (1 << (v - 1)) == 0));
        out.push(Permutation::from_images_unchecked(images));
    }
    out
}

impl<F: Scalar> FromIterator<(Permutation, F)> for AlgebraElement<F> {
    fn from_iter<I: IntoIterator<Item = (Permutation, F)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (p, c) in iter {
            out.add_term(p, c);
        }
        out
    }
}

impl<F: Scalar> Add for AlgebraElement<F> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for (p, c) in rhs.terms.into_values().flatten() {
            self.add_term(p, c);
        }
        self
    }
}

impl<F: Scalar> Add for &AlgebraElement<F> {
    type Output = AlgebraElement<F>;

    fn add(self, rhs: Self) -> AlgebraElement<F> {
        self.clone() + rhs.clone()
    }
}

impl<F: Scalar> Neg for AlgebraElement<F> {
    type Output = Self;

    fn neg(self) -> Self {
        self.scale(&-F::one())
    }
}

impl<F: Scalar> Sub for AlgebraElement<F> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<F: Scalar> Sub for &AlgebraElement<F> {
    type Output = AlgebraElement<F>;

    fn sub(self, rhs: Self) -> AlgebraElement<F> {
        self.clone() - rhs.clone()
    }
}

impl<F: Scalar> Mul for &AlgebraElement<F> {
    type Output = AlgebraElement<F>;

    fn mul(self, rhs: Self) -> AlgebraElement<F> {
        self.inner(rhs)
    }
}

impl<F: Scalar> fmt::Display for AlgebraElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms().map(|(p, c)| format!("({c})·{p}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

impl<F: Scalar> fmt::Debug for AlgebraElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat, Rational};

    type E = AlgebraElement<Rational>;

    fn p(xs: &[usize]) -> Permutation {
        Permutation::new(xs).unwrap()
    }

    fn e(terms: &[(&[usize], i64)]) -> E {
        terms.iter().map(|(xs, c)| (p(xs), int(*c))).collect()
    }

    #[test]
    fn identity_and_orthogonality() {
        let phi = e(&[(&[1, 3, 2], 2), (&[3, 1, 2], -1)]);
        assert_eq!(E::identity(3).inner(&phi), phi);
        assert_eq!(phi.inner(&E::identity(3)), phi);
        assert!(E::identity(2).inner(&E::identity(3)).is_zero());
        let tau = E::from_perm(p(&[2, 1]));
        assert_eq!(tau.inner(&tau), E::identity(2));
    }

    #[test]
    fn convolution_examples() {
        let xi1 = E::identity(1);
        assert_eq!(xi1.outer(&xi1), e(&[(&[1, 2], 1), (&[2, 1], 1)]));
        let tau = E::from_perm(p(&[2, 1]));
        assert_eq!(tau.outer(&xi1), e(&[(&[2, 1, 3], 1), (&[3, 1, 2], 1), (&[3, 2, 1], 1)]));
        let phi = e(&[(&[1, 3, 2], 2), (&[2, 1, 3], -1)]);
        assert_eq!(E::unit().outer(&phi), phi);
        assert_eq!(phi.outer(&E::unit()), phi);
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let a = e(&[(&[1, 2], 1)]);
        assert!((a.clone() - a).is_zero());
        assert!(E::from_perm(p(&[2, 1])).scale(&int(0)).is_zero());
    }

    #[test]
    fn json_round_trip() {
        let a: E = [(p(&[1, 3, 2]), rat(-1, 2)), (p(&[2, 1]), int(3))].into_iter().collect();
        let v = a.to_json();
        assert_eq!(v["degree-terms"][1]["terms"][0]["coeff"], "-1/2");
        assert_eq!(v["degree-terms"][1]["terms"][0]["perm"], json!([1, 3, 2]));
        assert_eq!(E::from_json(&v).unwrap(), a);
    }
}
