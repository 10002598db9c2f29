//! The free associative algebra over ℕ, the Polya action of S_n on words,
//! and Lie monomials.
//!
//! π acts on a word of length n by π(x_1⋯x_n) = x_{1π}⋯x_{nπ}. With
//! products read left to right this is a left action, and ω_2(xy) = xy − yx.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::combinatorics::Composition;
use crate::descent_peak::bases::tilde_xi_n;
use crate::descent_peak::DescentAlgElement;
use crate::error::{Error, Result};
use crate::group_algebra::{AlgebraElement, Permutation};
use crate::lie_idempotents::LieSeries;
use crate::linalg::rank;
use crate::scalar::{int, Rational};

/// A word over the positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word(self.0.iter().chain(&other.0).copied().collect())
    }

    /// π·w = w_{1π} ⋯ w_{nπ}.
    pub fn act(&self, pi: &Permutation) -> Word {
        Word((1..=self.len()).map(|i| self.0[pi.image(i) - 1]).collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join("."))
    }
}

/// A finite linear combination of words.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct FreeAlgElement {
    terms: BTreeMap<Word, Rational>,
}

impl FreeAlgElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn word(w: Word) -> Self {
        FreeAlgElement { terms: BTreeMap::from([(w, int(1))]) }
    }

    pub fn letter(x: u32) -> Self {
        Self::word(Word(vec![x]))
    }

    pub fn add_term(&mut self, w: Word, c: Rational) {
        let e = self.terms.entry(w.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Word, Rational> {
        &self.terms
    }

    pub fn coeff(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common length of the support words; `None` for zero.
    pub fn degree(&self) -> Result<Option<usize>> {
        let mut lens = self.terms.keys().map(Word::len);
        let Some(first) = lens.next() else { return Ok(None) };
        if lens.any(|l| l != first) {
            return Err(Error::NotHomogeneous);
        }
        Ok(Some(first))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x * c);
        }
        out
    }

    /// The concatenation product.
    pub fn product(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (u, x) in &self.terms {
            for (v, y) in &other.terms {
                out.add_term(u.concat(v), x * y);
            }
        }
        out
    }

    /// The Lie product a∘b = ab − ba.
    pub fn bracket(&self, other: &Self) -> Self {
        &self.product(other) - &other.product(self)
    }

    /// Coordinates on a fixed list of words.
    pub fn vector(&self, words: &[Word]) -> Vec<Rational> {
        words.iter().map(|w| self.coeff(w)).collect()
    }
}

impl Add for &FreeAlgElement {
    type Output = FreeAlgElement;

    fn add(self, rhs: Self) -> FreeAlgElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Neg for &FreeAlgElement {
    type Output = FreeAlgElement;

    fn neg(self) -> FreeAlgElement {
        self.scale(&int(-1))
    }
}

impl Sub for &FreeAlgElement {
    type Output = FreeAlgElement;

    fn sub(self, rhs: Self) -> FreeAlgElement {
        self + &(-rhs)
    }
}

impl Mul for &FreeAlgElement {
    type Output = FreeAlgElement;

    fn mul(self, rhs: Self) -> FreeAlgElement {
        self.product(rhs)
    }
}

impl fmt::Display for FreeAlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("({c})[{w}]")).collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for FreeAlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The Polya action of φ ∈ KS_n on A_n(X).
pub fn polya_act(phi: &AlgebraElement<Rational>, w: &FreeAlgElement) -> Result<FreeAlgElement> {
    let mut out = FreeAlgElement::zero();
    let Some(n) = w.degree()? else { return Ok(out) };
    for d in phi.degrees() {
        if d != n {
            return Err(Error::DegreeMismatch { expected: n, found: d });
        }
    }
    for (pi, c) in phi.terms() {
        for (u, x) in w.terms() {
            out.add_term(u.act(pi), c * x);
        }
    }
    Ok(out)
}

/// The Polya action of φ ∈ D_n.
pub fn descent_act(phi: &DescentAlgElement, w: &FreeAlgElement) -> Result<FreeAlgElement> {
    polya_act(&phi.to_algebra_element()?, w)
}

/// (⋯((x_1∘x_2)∘x_3)⋯)∘x_m.
pub fn left_normed(letters: &[u32]) -> FreeAlgElement {
    let mut it = letters.iter();
    let Some(&first) = it.next() else { return FreeAlgElement::word(Word(Vec::new())) };
    it.fold(FreeAlgElement::letter(first), |acc, &x| acc.bracket(&FreeAlgElement::letter(x)))
}

/// P_1, …, P_k for q: P_i is the left-normed bracket of q_i fresh letters,
/// using 1, …, n in order.
pub fn lie_monomials(q: &Composition) -> Vec<FreeAlgElement> {
    let mut next = 1u32;
    q.parts()
        .iter()
        .map(|&m| {
            let letters: Vec<u32> = (next..next + m as u32).collect();
            next += m as u32;
            left_normed(&letters)
        })
        .collect()
}

fn product_of(ps: &[FreeAlgElement], indices: &[usize]) -> FreeAlgElement {
    indices
        .iter()
        .fold(FreeAlgElement::word(Word(Vec::new())), |acc, &i| acc.product(&ps[i]))
}

/// P_1 ⋯ P_k for q.
pub fn monomial_product(q: &Composition) -> FreeAlgElement {
    let ps = lie_monomials(q);
    product_of(&ps, &(0..ps.len()).collect::<Vec<_>>())
}

/// Σ P_{S_1} ⋯ P_{S_l} over ordered set partitions (S_1, …, S_l) of [k]
/// with Σ_{j∈S_i} q_j = r_i.
pub fn set_partition_sum(r: &Composition, q: &Composition) -> FreeAlgElement {
    let ps = lie_monomials(q);
    let k = q.len();
    let mut out = FreeAlgElement::zero();
    // block[j] = index of the block containing j
    let mut block = vec![0usize; k];
    fn rec(
        j: usize,
        q: &[usize],
        r: &[usize],
        block: &mut Vec<usize>,
        loads: &mut Vec<usize>,
        ps: &[FreeAlgElement],
        out: &mut FreeAlgElement,
    ) {
        if j == q.len() {
            if loads.iter().zip(r).all(|(a, b)| a == b) {
                let mut word_order = Vec::new();
                for b in 0..r.len() {
                    word_order.extend((0..q.len()).filter(|&i| block[i] == b));
                }
                *out = &*out + &product_of(ps, &word_order);
            }
            return;
        }
        for b in 0..r.len() {
            if loads[b] + q[j] <= r[b] {
                loads[b] += q[j];
                block[j] = b;
                rec(j + 1, q, r, block, loads, ps, out);
                loads[b] -= q[j];
            }
        }
    }
    let mut loads = vec![0; r.len()];
    rec(0, q.parts(), r.parts(), &mut block, &mut loads, &ps, &mut out);
    out
}

/// Ξ^r(P_1⋯P_k) equals the set-partition sum.
pub fn gr_theorem_check(r: &Composition, q: &Composition) -> Result<bool> {
    if r.sum() != q.sum() {
        return Err(Error::DegreeMismatch { expected: r.sum(), found: q.sum() });
    }
    let lhs = descent_act(&DescentAlgElement::xi(r), &monomial_product(q))?;
    Ok(lhs == set_partition_sum(r, q))
}

/// Ξ̃^n(P_1⋯P_k) = 0 when q_1 is even.
pub fn gerade_null_check(q: &Composition) -> Result<bool> {
    match q.parts().first() {
        Some(q1) if q1 % 2 == 0 => {}
        _ => return Err(Error::InvalidIndex(format!("{q} does not start with an even part"))),
    }
    Ok(descent_act(&tilde_xi_n(q.sum()), &monomial_product(q))?.is_zero())
}

/// Whether φ annihilates P_1⋯P_k for every q ⊨ n with q_1 even. By
/// multilinearity the monomials on distinct letters suffice.
pub fn membership_by_action(phi: &DescentAlgElement) -> Result<bool> {
    let algebra = phi.to_algebra_element()?;
    for q in crate::combinatorics::compositions(phi.degree()) {
        if q.parts().first().is_some_and(|x| x % 2 == 0) && !polya_act(&algebra, &monomial_product(&q))?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether φγ_q = 0 for every q ⊨ n with q_1 even.
pub fn internal_criterion(phi: &DescentAlgElement, series: &LieSeries) -> bool {
    crate::combinatorics::compositions(phi.degree())
        .iter()
        .filter(|q| q.parts().first().is_some_and(|x| x % 2 == 0))
        .all(|q| phi.inner(&series.gamma_q(q)).is_zero())
}

/// ι_n: π ↦ (1π).(2π)⋯(nπ), extended linearly.
pub fn iota_embed(phi: &AlgebraElement<Rational>) -> FreeAlgElement {
    let mut out = FreeAlgElement::zero();
    for (pi, c) in phi.terms() {
        out.add_term(Word(pi.images().iter().map(|&x| u32::from(x)).collect()), c.clone());
    }
    out
}

/// φ(P_1⋯P_k) lies in span{P_{1π}⋯P_{kπ} : π ∈ S_k}.
pub fn stability_check(phi: &DescentAlgElement, q: &Composition) -> Result<bool> {
    let ps = lie_monomials(q);
    let k = ps.len();
    let image = descent_act(phi, &product_of(&ps, &(0..k).collect::<Vec<_>>()))?;
    let spanning: Vec<FreeAlgElement> = Permutation::all(k)
        .map(|pi| {
            let order: Vec<usize> = (1..=k).map(|i| pi.image(i) - 1).collect();
            product_of(&ps, &order)
        })
        .collect();
    let mut words: Vec<Word> = spanning.iter().flat_map(|e| e.terms().keys().cloned()).collect();
    words.extend(image.terms().keys().cloned());
    words.sort();
    words.dedup();
    let mut rows: Vec<Vec<Rational>> = spanning.iter().map(|e| e.vector(&words)).collect();
    let r = rank(&rows);
    rows.push(image.vector(&words));
    Ok(rank(&rows) == r)
}

/// (rank of {ω_n·w : w multilinear}, rank of ω_nKS_n).
pub fn dynkin_image_ranks(n: usize) -> Result<(usize, usize)> {
    let w = crate::lie_idempotents::dynkin(n).to_algebra_element()?;
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    let words: Vec<Word> = perms.iter().map(|p| Word(p.images().iter().map(|&x| u32::from(x)).collect())).collect();
    let word_rows: Vec<Vec<Rational>> = words
        .iter()
        .map(|u| polya_act(&w, &FreeAlgElement::word(u.clone())).map(|e| e.vector(&words)))
        .collect::<Result<_>>()?;
    let algebra_rows: Vec<Vec<Rational>> = perms
        .iter()
        .map(|p| {
            let prod = w.inner(&AlgebraElement::from_perm(p.clone()));
            perms.iter().map(|s| prod.coeff(s)).collect()
        })
        .collect();
    Ok((rank(&word_rows), rank(&algebra_rows)))
}

/// ω_n(x_1⋯x_n) equals the left-normed bracket.
pub fn dynkin_projection_check(n: usize) -> Result<bool> {
    let letters: Vec<u32> = (1..=n as u32).collect();
    let w = crate::lie_idempotents::dynkin(n);
    Ok(descent_act(&w, &FreeAlgElement::word(Word(letters.clone())))? == left_normed(&letters))
}
