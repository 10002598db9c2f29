use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A subset of the rail [n−1] = {1, …, n−1}, stored as a bitmask with bit
/// i−1 standing for the element i.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetOfRail {
    n: usize,
    mask: u32,
}

impl SubsetOfRail {
    pub fn empty(n: usize) -> Self {
        SubsetOfRail { n, mask: 0 }
    }

    /// The full rail [n−1].
    pub fn full(n: usize) -> Self {
        SubsetOfRail { n, mask: rail_mask(n) }
    }

    pub fn new(n: usize, elements: &[usize]) -> Result<Self> {
        let mut mask = 0u32;
        for &i in elements {
            if i == 0 || i >= n.max(1) {
                return Err(Error::InvalidIndex(format!("{i} is not in [{}]", n.saturating_sub(1))));
            }
            mask |= 1 << (i - 1);
        }
        Ok(SubsetOfRail { n, mask })
    }

    /// Interpret a bitmask; bits outside the rail are dropped.
    pub fn from_mask(n: usize, mask: u32) -> Self {
        SubsetOfRail { n, mask: mask & rail_mask(n) }
    }

    /// Parse a comma-separated list such as "2,4"; the empty string is ∅.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('{').trim_end_matches('}');
        if t.trim().is_empty() {
            return Ok(Self::empty(n));
        }
        let elements = t
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad subset {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, &elements)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, i: usize) -> bool {
        i >= 1 && i < 33 && self.mask & (1 << (i - 1)) != 0
    }

    pub fn elements(&self) -> Vec<usize> {
        (1..self.n).filter(|&i| self.contains(i)).collect()
    }

    pub fn sum(&self) -> usize {
        self.elements().iter().sum()
    }

    pub fn union(&self, other: &Self) -> Self {
        SubsetOfRail { n: self.n, mask: self.mask | other.mask }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        SubsetOfRail { n: self.n, mask: self.mask & other.mask }
    }

    pub fn difference(&self, other: &Self) -> Self {
        SubsetOfRail { n: self.n, mask: self.mask & !other.mask }
    }

    pub fn symmetric_difference(&self, other: &Self) -> Self {
        SubsetOfRail { n: self.n, mask: self.mask ^ other.mask }
    }

    pub fn complement(&self) -> Self {
        SubsetOfRail { n: self.n, mask: !self.mask & rail_mask(self.n) }
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.mask & !other.mask == 0
    }

    /// D + 1, truncated to the rail.
    pub fn shift_up(&self) -> Self {
        Self::from_mask(self.n, self.mask << 1)
    }

    /// D − 1 (the element 1 drops out).
    pub fn shift_down(&self) -> Self {
        SubsetOfRail { n: self.n, mask: self.mask >> 1 }
    }

    /// P ⊆ {2, …, n−1} and P ∩ (P − 1) = ∅.
    pub fn is_peak_set(&self) -> bool {
        !self.contains(1) && self.mask & (self.mask >> 1) == 0
    }

    /// The peak set P(D) = D ∩ (([n−1] \ D) + 1).
    pub fn peaks_of_descents(&self) -> Self {
        self.intersection(&self.complement().shift_up())
    }

    /// All subsets of this set, in increasing mask order.
    pub fn subsets(&self) -> impl Iterator<Item = SubsetOfRail> + '_ {
        let full = self.mask;
        let mut sub = 0u32;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = SubsetOfRail { n: self.n, mask: sub };
            if sub == full {
                done = true;
            } else {
                sub = (sub.wrapping_sub(full)) & full;
            }
            Some(out)
        })
    }

    /// All subsets of [n−1] containing this set.
    pub fn supersets(&self) -> impl Iterator<Item = SubsetOfRail> + '_ {
        let base = self.mask;
        self.complement().subsets().map(move |s| SubsetOfRail { n: s.n, mask: s.mask | base }).collect::<Vec<_>>().into_iter()
    }

    /// All subsets of [n−1].
    pub fn all(n: usize) -> impl Iterator<Item = SubsetOfRail> {
        (0..(1u32 << n.saturating_sub(1))).map(move |mask| SubsetOfRail { n, mask })
    }

    /// Comma-joined elements, the inverse of [`SubsetOfRail::parse`].
    pub fn key(&self) -> String {
        self.elements().iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for SubsetOfRail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.key())
    }
}

impl Serialize for SubsetOfRail {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.elements().serialize(s)
    }
}

fn rail_mask(n: usize) -> u32 {
    if n <= 1 {
        0
    } else {
        (1u32 << (n - 1)) - 1
    }
}

/// All peak sets in [n], in increasing mask order.
pub fn peak_sets(n: usize) -> Vec<SubsetOfRail> {
    SubsetOfRail::all(n).filter(SubsetOfRail::is_peak_set).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::fibonacci;

    #[test]
    fn peak_sets_are_fibonacci() {
        for n in 0..=10 {
            assert_eq!(peak_sets(n).len() as u64, fibonacci(n), "n = {n}");
        }
    }

    #[test]
    fn peaks_of_descents_examples() {
        assert!(SubsetOfRail::empty(4).peaks_of_descents().is_empty());
        let d = SubsetOfRail::new(4, &[2]).unwrap();
        assert_eq!(d.peaks_of_descents(), d);
        let d = SubsetOfRail::new(5, &[1, 2, 4]).unwrap();
        assert_eq!(d.peaks_of_descents().elements(), vec![4]);
    }

    #[test]
    fn subset_enumeration_counts() {
        let d = SubsetOfRail::new(7, &[1, 3, 4]).unwrap();
        assert_eq!(d.subsets().count(), 8);
        assert!(d.subsets().all(|s| s.is_subset_of(&d)));
        assert_eq!(d.supersets().count(), 8);
        assert_eq!(SubsetOfRail::empty(1).subsets().count(), 1);
    }

    #[test]
    fn parse_and_key() {
        let p = SubsetOfRail::parse(6, "2,4").unwrap();
        assert_eq!(p.elements(), vec![2, 4]);
        assert_eq!(SubsetOfRail::parse(6, &p.key()).unwrap(), p);
        assert!(SubsetOfRail::parse(3, "").unwrap().is_empty());
        assert!(SubsetOfRail::parse(3, "3").is_err());
        assert!(SubsetOfRail::parse(3, "x").is_err());
    }
}
