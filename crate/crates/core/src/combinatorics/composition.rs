use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Partition, SubsetOfRail};
use crate::error::{Error, Result};

/// A finite sequence of positive integers, written `3.1.1`.
///
/// The derived order is lexicographic on part sequences with a proper
/// prefix smaller than its extensions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition(Vec<usize>);

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(q: Composition) -> Self {
        q.0
    }
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidIndex(format!("composition {parts:?} has a zero part")));
        }
        Ok(Composition(parts))
    }

    /// Build from parts known to be positive.
    pub(crate) fn from_parts(parts: Vec<usize>) -> Self {
        debug_assert!(!parts.contains(&0));
        Composition(parts)
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn single(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Composition(vec![n])
        }
    }

    /// The composition 1^k.
    pub fn ones(k: usize) -> Self {
        Composition(vec![1; k])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_odd(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 1)
    }

    /// The final letter q†.
    pub fn final_letter(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Composition(parts)
    }

    /// D(q) = {q1, q1+q2, …} ⊆ [n−1].
    pub fn descent_set(&self) -> SubsetOfRail {
        SubsetOfRail::from_mask(self.sum(), self.mask())
    }

    /// The bitmask of D(q).
    pub fn mask(&self) -> u32 {
        let mut mask = 0u32;
        let mut acc = 0;
        for &p in &self.0[..self.0.len().saturating_sub(1)] {
            acc += p;
            mask |= 1 << (acc - 1);
        }
        mask
    }

    /// The composition q of n with D(q) = D.
    pub fn from_descent_set(d: &SubsetOfRail) -> Self {
        Self::from_mask(d.n(), d.mask())
    }

    pub fn from_mask(n: usize, mask: u32) -> Self {
        if n == 0 {
            return Self::empty();
        }
        let mut parts = Vec::new();
        let mut last = 0;
        for i in 1..n {
            if mask & (1 << (i - 1)) != 0 {
                parts.push(i - last);
                last = i;
            }
        }
        parts.push(n - last);
        Composition(parts)
    }

    /// q ⊨ r, i.e. D(r) ⊆ D(q).
    pub fn refines(&self, r: &Self) -> Result<bool> {
        if self.sum() != r.sum() {
            return Err(Error::DegreeMismatch { expected: r.sum(), found: self.sum() });
        }
        Ok(r.mask() & !self.mask() == 0)
    }

    /// All q with q ⊨ self.
    pub fn refinements(&self) -> Vec<Composition> {
        let n = self.sum();
        let base = self.mask();
        let free = SubsetOfRail::from_mask(n, !base);
        let mut out: Vec<_> = free.subsets().map(|s| Self::from_mask(n, s.mask() | base)).collect();
        out.sort();
        out
    }

    /// All r with self ⊨ r.
    pub fn coarsenings(&self) -> Vec<Composition> {
        let n = self.sum();
        let mut out: Vec<_> = self.descent_set().subsets().map(|s| Self::from_descent_set(&s)).collect();
        out.sort();
        debug_assert!(out.iter().all(|r| r.sum() == n));
        out
    }

    /// Sorted weakly decreasing rearrangement.
    pub fn sorted(&self) -> Partition {
        let mut parts = self.0.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_sorted(parts)
    }

    /// q ≈ r: r is a rearrangement of q.
    pub fn is_rearrangement_of(&self, r: &Self) -> bool {
        self.sorted() == r.sorted()
    }

    /// All distinct rearrangements, in lexicographic order.
    pub fn rearrangements(&self) -> Vec<Composition> {
        let mut parts = self.0.clone();
        parts.sort_unstable();
        let mut out = vec![Composition(parts.clone())];
        while next_permutation(&mut parts) {
            out.push(Composition(parts.clone()));
        }
        out
    }

    /// q? = Π_i a_i!·i^{a_i}, a_i the multiplicity of the letter i.
    pub fn centralizer_order(&self) -> u64 {
        self.sorted().centralizer_order()
    }

    /// q ⋐ r: some rearrangement of q refines r.
    pub fn assoc_refines(&self, r: &Self) -> Result<bool> {
        if self.sum() != r.sum() {
            return Err(Error::DegreeMismatch { expected: r.sum(), found: self.sum() });
        }
        Ok(self.rearrangements().iter().any(|q| q.mask() & r.mask() == r.mask()))
    }

    /// q̃ = 2^{m1}.1.2^{m2}.1.… for odd q with q_i = 2m_i + 1.
    pub fn tilde(&self) -> Result<Self> {
        if !self.is_odd() {
            return Err(Error::NotOdd(self.to_string()));
        }
        let mut parts = Vec::new();
        for &p in &self.0 {
            parts.extend(std::iter::repeat(2).take(p / 2));
            parts.push(1);
        }
        Ok(Composition(parts))
    }

    /// The peak set P(q) = ([n−1] \ D(q̃)) + 1 of an odd composition.
    pub fn peak_set(&self) -> Result<SubsetOfRail> {
        Ok(self.tilde()?.descent_set().complement().shift_up())
    }

    /// The odd composition q with P(q) = P, via D(q) = [n−1] \ ((P−1) ∪ P).
    pub fn from_peak_set(p: &SubsetOfRail) -> Result<Self> {
        if !p.is_peak_set() {
            return Err(Error::InvalidIndex(format!("{p} is not a peak set")));
        }
        let d = p.shift_down().union(p).complement();
        Ok(Self::from_descent_set(&d))
    }

    /// Whether the product F_r(q) of the r-final letters of q is odd, where
    /// q ⊨ r and the r-final letters are the last parts of q in each block of r.
    pub fn finals_odd(&self, r: &Self) -> bool {
        let mut acc = 0;
        let mut boundaries = Vec::new();
        for &p in &r.0 {
            acc += p;
            boundaries.push(acc);
        }
        let mut acc = 0;
        for &p in &self.0 {
            acc += p;
            if boundaries.contains(&acc) && p % 2 == 0 {
                return false;
            }
        }
        true
    }

    /// Standard factorization into lexicographically weakly decreasing Lyndon words.
    pub fn lyndon_factorization(&self) -> Vec<Composition> {
        let s = &self.0;
        let mut out = Vec::new();
        let mut i = 0;
        while i < s.len() {
            let mut j = i + 1;
            let mut k = i;
            while j < s.len() && s[k] <= s[j] {
                if s[k] < s[j] {
                    k = i;
                } else {
                    k += 1;
                }
                j += 1;
            }
            while i <= k {
                out.push(Composition(s[i..i + j - k].to_vec()));
                i += j - k;
            }
        }
        out
    }

    /// Strictly smaller than each proper suffix.
    pub fn is_lyndon(&self) -> bool {
        !self.0.is_empty() && (1..self.0.len()).all(|i| self.0[..] < self.0[i..])
    }

    /// LSC(q): the sums of the Lyndon factors of q.
    pub fn lsc(&self) -> Composition {
        Composition(self.lyndon_factorization().iter().map(Composition::sum).collect())
    }
}

fn next_permutation(xs: &mut [usize]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let mut i = xs.len() - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = xs.len() - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join("."))
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() {
            return Ok(Self::empty());
        }
        let parts = t
            .split('.')
            .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad composition {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

/// All 2^{n−1} compositions of n in lexicographic order (the empty one for n = 0).
pub fn compositions(n: usize) -> Vec<Composition> {
    enumerate(n, 1)
}

/// All compositions of n with odd parts only, in lexicographic order.
pub fn odd_compositions(n: usize) -> Vec<Composition> {
    enumerate(n, 2)
}

fn enumerate(n: usize, step: usize) -> Vec<Composition> {
    fn rec(rest: usize, step: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition(cur.clone()));
            return;
        }
        for p in (1..=rest).step_by(step) {
            cur.push(p);
            rec(rest - p, step, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, step, &mut Vec::new(), &mut out);
    out
}

/// f_0 = f_1 = f_2 = 1, f_n = f_{n−1} + f_{n−2}.
pub fn fibonacci(n: usize) -> u64 {
    let (mut a, mut b) = (1u64, 1u64);
    for _ in 3..=n {
        (a, b) = (b, a + b);
    }
    b
}
