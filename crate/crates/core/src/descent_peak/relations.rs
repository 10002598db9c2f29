//! Descent classes and peak classes as closures of neighbor relations.

use crate::combinatorics::factorial;
use crate::combinatorics::statistics::{descent_mask, peak_count, peak_set};
use crate::error::{check_degree, Result};
use crate::group_algebra::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    /// σ = πτ_i where i and i+1 are not adjacent in π.
    Descent,
    /// A descent neighbor, or σ = πτ_1.
    Peak,
    /// A peak neighbor, or σ = πτ_{n−1} when n−1 and n both sit in
    /// positions 2, …, n−1 of π.
    PeakNumber,
}

fn adjacent(pi: &Permutation, i: usize) -> bool {
    pi.position_of(i).abs_diff(pi.position_of(i + 1)) == 1
}

/// All neighbors of π under the relation.
pub fn neighbors(pi: &Permutation, rel: Relation) -> Vec<Permutation> {
    let n = pi.degree();
    let mut out = Vec::new();
    for i in 1..n {
        if !adjacent(pi, i) {
            out.push(pi.swap_values(i));
        }
    }
    if n >= 2 && matches!(rel, Relation::Peak | Relation::PeakNumber) && adjacent(pi, 1) {
        out.push(pi.swap_values(1));
    }
    if n >= 3 && rel == Relation::PeakNumber && adjacent(pi, n - 1) {
        let interior = |v: usize| (2..n).contains(&pi.position_of(v));
        if interior(n - 1) && interior(n) {
            out.push(pi.swap_values(n - 1));
        }
    }
    out
}

pub fn is_neighbor(pi: &Permutation, sigma: &Permutation, rel: Relation) -> bool {
    neighbors(pi, rel).contains(sigma)
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// For each permutation (by lexicographic rank), the smallest rank in its
/// closure class.
pub fn class_labels(n: usize, rel: Relation) -> Result<Vec<usize>> {
    check_degree(n)?;
    let size = factorial(n) as usize;
    let mut uf = UnionFind((0..size).collect());
    for pi in Permutation::all(n) {
        let r = pi.rank();
        for sigma in neighbors(&pi, rel) {
            uf.union(r, sigma.rank());
        }
    }
    Ok((0..size).map(|r| uf.find(r)).collect())
}

/// The closure classes, each sorted, listed by their first element.
pub fn classes_by_relation(n: usize, rel: Relation) -> Result<Vec<Vec<Permutation>>> {
    let labels = class_labels(n, rel)?;
    let mut classes: Vec<Vec<Permutation>> = Vec::new();
    let mut slot = vec![usize::MAX; labels.len()];
    for (r, &l) in labels.iter().enumerate() {
        if slot[l] == usize::MAX {
            slot[l] = classes.len();
            classes.push(Vec::new());
        }
        classes[slot[l]].push(Permutation::unrank(n, r));
    }
    Ok(classes)
}

pub fn descent_classes_by_relation(n: usize) -> Result<Vec<Vec<Permutation>>> {
    classes_by_relation(n, Relation::Descent)
}

pub fn peak_classes_by_relation(n: usize) -> Result<Vec<Vec<Permutation>>> {
    classes_by_relation(n, Relation::Peak)
}

pub fn peak_number_classes_by_relation(n: usize) -> Result<Vec<Vec<Permutation>>> {
    classes_by_relation(n, Relation::PeakNumber)
}

/// Whether the closure classes are exactly the fibers of the matching
/// statistic: Des, Peak, or the number of peaks.
pub fn classes_match_statistic(n: usize, rel: Relation) -> Result<bool> {
    let labels = class_labels(n, rel)?;
    let stat = |p: &Permutation| -> u64 {
        match rel {
            Relation::Descent => descent_mask(p) as u64,
            Relation::Peak => peak_set(p).mask() as u64,
            Relation::PeakNumber => peak_count(p) as u64,
        }
    };
    let mut label_of_stat = std::collections::HashMap::new();
    let mut stat_of_label = std::collections::HashMap::new();
    for p in Permutation::all(n) {
        let (l, s) = (labels[p.rank()], stat(&p));
        if *label_of_stat.entry(s).or_insert(l) != l || *stat_of_label.entry(l).or_insert(s) != s {
            return Ok(false);
        }
    }
    Ok(true)
}

/// If i and i+1 are adjacent in π and every other neighbor of i and of i+1
/// exceeds i+1, then π and πτ_i lie in one peak class. Returns the first
/// violation, if any.
pub fn adjacent_swap_check(n: usize) -> Result<Option<(Permutation, usize)>> {
    let labels = class_labels(n, Relation::Peak)?;
    for pi in Permutation::all(n) {
        for i in 1..n {
            if !adjacent(&pi, i) {
                continue;
            }
            let (a, b) = (pi.position_of(i), pi.position_of(i + 1));
            let (lo, hi) = (a.min(b), a.max(b));
            let outside = [lo.checked_sub(1).filter(|&p| p >= 1), Some(hi + 1).filter(|&p| p <= n)];
            let hypothesis = outside.iter().flatten().all(|&p| pi.image(p) > i + 1);
            if hypothesis && labels[pi.rank()] != labels[pi.swap_values(i).rank()] {
                return Ok(Some((pi, i)));
            }
        }
    }
    Ok(None)
}
