use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::{factorial, Composition};
use crate::error::{Error, Result};

/// A weakly decreasing composition, written `3.1.1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Composition);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidIndex(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(Composition::new(parts)?))
    }

    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        Partition(Composition::from_parts(parts))
    }

    pub fn parts(&self) -> &[usize] {
        self.0.parts()
    }

    pub fn as_composition(&self) -> &Composition {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.sum()
    }

    pub fn is_odd(&self) -> bool {
        self.0.is_odd()
    }

    /// All parts equal.
    pub fn is_block(&self) -> bool {
        self.parts().windows(2).all(|w| w[0] == w[1])
    }

    /// μ(p_1) if p is a block, 0 otherwise.
    pub fn sign(&self) -> i64 {
        match self.parts().first() {
            Some(&p1) if self.is_block() => mobius(p1),
            Some(_) => 0,
            None => 1,
        }
    }

    /// p? = Π_i a_i!·i^{a_i}; n!/p? is the size of the conjugacy class C_p.
    pub fn centralizer_order(&self) -> u64 {
        let mut acc = 1u64;
        let parts = self.parts();
        let mut i = 0;
        while i < parts.len() {
            let mut j = i;
            while j < parts.len() && parts[j] == parts[i] {
                j += 1;
            }
            acc *= factorial(j - i) * (parts[i] as u64).pow((j - i) as u32);
            i = j;
        }
        acc
    }

    pub fn key(&self) -> String {
        self.0.to_string()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let q: Composition = s.parse()?;
        Self::new(q.parts().to_vec())
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts().serialize(s)
    }
}

/// Number-theoretic Möbius function.
pub fn mobius(mut n: usize) -> i64 {
    assert!(n > 0);
    let mut result = 1;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return 0;
            }
            result = -result;
        }
        d += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// All partitions of n, from n down to 1^n (reverse lexicographic order).
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, odd: bool, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::from_sorted(cur.clone()));
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            if odd && p % 2 == 0 {
                continue;
            }
            cur.push(p);
            rec(rest - p, p, odd, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, false, &mut Vec::new(), &mut out);
    out
}

/// All partitions of n into odd parts, in the order of [`partitions`].
pub fn odd_partitions(n: usize) -> Vec<Partition> {
    partitions(n).into_iter().filter(Partition::is_odd).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_order() {
        let counts: Vec<usize> = (0..=8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22]);
        let five: Vec<String> = odd_partitions(5).iter().map(|p| p.to_string()).collect();
        assert_eq!(five, ["5", "3.1.1", "1.1.1.1.1"]);
        assert_eq!(odd_partitions(7).len(), 5);
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for n in 0..=8 {
            let total: u64 = partitions(n).iter().map(|p| factorial(n) / p.centralizer_order()).sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn sign_and_mobius() {
        assert_eq!((1..=10).map(mobius).collect::<Vec<_>>(), [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]);
        let p: Partition = "3.3".parse().unwrap();
        assert_eq!(p.sign(), -1);
        let p: Partition = "3.1".parse().unwrap();
        assert_eq!(p.sign(), 0);
        let p: Partition = "1.1.1".parse().unwrap();
        assert_eq!(p.sign(), 1);
        assert!("1.3".parse::<Partition>().is_err());
    }
}
