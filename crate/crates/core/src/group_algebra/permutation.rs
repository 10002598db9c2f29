use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::factorial;
use crate::error::{Error, Result};

/// A permutation in one-line notation: `images()[i-1]` is iπ.
///
/// Products are read left to right: i(πσ) = (iπ)σ.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<u8>,
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<usize>) -> Result<Self> {
        Permutation::new(&images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images.iter().map(|&x| x as usize).collect()
    }
}

impl Permutation {
    pub fn new(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidIndex(format!("{images:?} is not a permutation of [{n}]")));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation { images: images.iter().map(|&x| x as u8).collect() })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u8>) -> Self {
        Permutation { images }
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n as u8).collect() }
    }

    /// The empty permutation in S_0.
    pub fn empty() -> Self {
        Permutation { images: Vec::new() }
    }

    /// The adjacent transposition τ_{n,i} = (i, i+1); τ_{1,1} = id_1.
    pub fn adjacent_transposition(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        if n >= 2 {
            assert!((1..n).contains(&i), "τ_{{{n},{i}}} out of range");
            p.images.swap(i - 1, i);
        }
        p
    }

    /// The order-reversing involution i ↦ n + 1 − i.
    pub fn reversal(n: usize) -> Self {
        Permutation { images: (1..=n as u8).rev().collect() }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    /// iπ for 1 ≤ i ≤ n.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] as usize
    }

    /// The product πσ, read left to right.
    pub fn compose(&self, sigma: &Self) -> Self {
        assert_eq!(self.degree(), sigma.degree(), "degree mismatch in product");
        Permutation { images: self.images.iter().map(|&x| sigma.images[x as usize - 1]).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize - 1] = i as u8 + 1;
        }
        Permutation { images: inv }
    }

    /// π τ_{n,i}: the values i and i + 1 swap places in the image line.
    pub fn swap_values(&self, i: usize) -> Self {
        let (a, b) = (i as u8, i as u8 + 1);
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| if x == a { b } else if x == b { a } else { x })
                .collect(),
        }
    }

    /// π # σ: π on the first n letters, the shift of σ on the last m.
    pub fn hash(&self, sigma: &Self) -> Self {
        let n = self.degree() as u8;
        let mut images = self.images.clone();
        images.extend(sigma.images.iter().map(|&x| x + n));
        Permutation { images }
    }

    /// Lexicographic rank in S_n, in 0..n!.
    pub fn rank(&self) -> usize {
        rank_of(&self.images)
    }

    pub fn unrank(n: usize, mut r: usize) -> Self {
        let mut pool: Vec<u8> = (1..=n as u8).collect();
        let mut images = Vec::with_capacity(n);
        for i in (0..n).rev() {
            let f = factorial(i) as usize;
            images.push(pool.remove(r / f));
            r %= f;
        }
        Permutation { images }
    }

    /// All of S_n in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        let mut cur: Option<Vec<u8>> = Some((1..=n as u8).collect());
        std::iter::from_fn(move || {
            let out = cur.clone()?;
            let mut next = out.clone();
            cur = if next_lex(&mut next) { Some(next) } else { None };
            Some(Permutation { images: out })
        })
    }

    /// Positions 1..=n of the values, i.e. the inverse as a lookup.
    pub fn position_of(&self, value: usize) -> usize {
        self.images.iter().position(|&x| x as usize == value).expect("value present") + 1
    }
}

pub(crate) fn rank_of(images: &[u8]) -> usize {
    let n = images.len();
    let mut r = 0usize;
    let mut used = 0u32;
    for (i, &x) in images.iter().enumerate() {
        let below = (used & ((1u32 << (x - 1)) - 1)).count_ones() as usize;
        let smaller_unused = x as usize - 1 - below;
        r = r * (n - i) + smaller_unused;
        used |= 1 << (x - 1);
    }
    r
}

fn next_lex(xs: &mut [u8]) -> bool {
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

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.images.is_empty() {
            return f.write_str("∅");
        }
        let sep = if self.degree() >= 10 { "," } else { "" };
        let s: Vec<String> = self.images.iter().map(|x| x.to_string()).collect();
        f.write_str(&s.join(sep))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}
