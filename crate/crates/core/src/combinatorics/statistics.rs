//! Permutation statistics.

use super::{Partition, SubsetOfRail};
use crate::group_algebra::Permutation;

pub fn descent_mask(pi: &Permutation) -> u32 {
    let im = pi.images();
    let mut mask = 0u32;
    for i in 1..im.len() {
        if im[i - 1] > im[i] {
            mask |= 1 << (i - 1);
        }
    }
    mask
}

/// Des(π) = {i : iπ > (i+1)π}.
pub fn descent_set(pi: &Permutation) -> SubsetOfRail {
    SubsetOfRail::from_mask(pi.degree(), descent_mask(pi))
}

/// Peak(π) = {i : (i−1)π < iπ > (i+1)π}, by direct scan.
pub fn peak_set(pi: &Permutation) -> SubsetOfRail {
    let im = pi.images();
    let peaks: Vec<usize> = (2..im.len()).filter(|&i| im[i - 2] < im[i - 1] && im[i - 1] > im[i]).collect();
    SubsetOfRail::new(pi.degree(), &peaks).expect("peaks lie in [n-1]")
}

pub fn peak_count(pi: &Permutation) -> usize {
    peak_set(pi).len()
}

/// The major index, the sum of the descents.
pub fn maj(pi: &Permutation) -> usize {
    descent_set(pi).sum()
}

pub fn cycle_type(pi: &Permutation) -> Partition {
    let n = pi.degree();
    let mut seen = vec![false; n];
    let mut lengths = Vec::new();
    for start in 1..=n {
        if seen[start - 1] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i - 1] {
            seen[i - 1] = true;
            i = pi.image(i);
            len += 1;
        }
        lengths.push(len);
    }
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(lengths).expect("cycle lengths sorted")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let pi = Permutation::new(&[1, 3, 2]).unwrap();
        assert_eq!(descent_set(&pi).elements(), vec![2]);
        assert_eq!(peak_set(&pi).elements(), vec![2]);
        assert_eq!(maj(&pi), 2);
        assert_eq!(cycle_type(&pi).to_string(), "2.1");
        let id = Permutation::identity(4);
        assert!(descent_set(&id).is_empty());
        assert!(peak_set(&id).is_empty());
        assert_eq!(maj(&id), 0);
        assert_eq!(cycle_type(&id).to_string(), "1.1.1.1");
    }

    #[test]
    fn peaks_depend_only_on_descents() {
        for n in 0..=7 {
            for pi in Permutation::all(n) {
                assert_eq!(descent_set(&pi).peaks_of_descents(), peak_set(&pi));
            }
        }
    }

    #[test]
    fn valley_permutations_of_five() {
        assert_eq!(Permutation::all(5).filter(|p| peak_set(p).is_empty()).count(), 16);
    }
}
