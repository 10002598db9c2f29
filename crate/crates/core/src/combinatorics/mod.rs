//! Index combinatorics: compositions, partitions, subsets of [n−1], peak
//! sets, Lyndon factorization, standard tableaux and permutation statistics.

mod composition;
mod partition;
pub mod statistics;
mod subset;
mod tableau;

pub use composition::{compositions, fibonacci, odd_compositions, Composition};
pub use partition::{mobius, odd_partitions, partitions, Partition};
pub use subset::{peak_sets, SubsetOfRail};
pub use tableau::{tableaux, StandardTableau};

/// n! as u64.
pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}
