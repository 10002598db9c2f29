//! Structure constants of D_n in the Ξ basis.
//!
//! Ξ^p ∗ Ξ^q = Σ_M Ξ^{w(M)}, summed over the nonnegative integer matrices M
//! with row sums p and column sums q, where w(M) lists the nonzero entries
//! of M row by row (Solomon's Mackey formula). Tests compare the table with
//! products of permutation sums for n ≤ 6.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::combinatorics::Composition;

pub(crate) struct XiTable {
    n: usize,
    /// Indexed by p_mask * 2^{n−1} + q_mask; entries (r_mask, multiplicity).
    products: Vec<Vec<(u32, u64)>>,
}

impl XiTable {
    pub(crate) fn get(n: usize) -> Arc<XiTable> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<XiTable>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(t) = cache.lock().unwrap().get(&n) {
            return t.clone();
        }
        let t = Arc::new(XiTable::build(n));
        cache.lock().unwrap().insert(n, t.clone());
        t
    }

    fn size(&self) -> usize {
        1 << self.n.saturating_sub(1)
    }

    pub(crate) fn product(&self, p: usize, q: usize) -> &[(u32, u64)] {
        &self.products[p * self.size() + q]
    }

    fn build(n: usize) -> XiTable {
        let size = 1usize << n.saturating_sub(1);
        let comps: Vec<Composition> = (0..size as u32).map(|m| Composition::from_mask(n, m)).collect();
        let mut products = Vec::with_capacity(size * size);
        for p in &comps {
            for q in &comps {
                let mut counts: HashMap<u32, u64> = HashMap::new();
                if n == 0 {
                    counts.insert(0, 1);
                } else {
                    for_each_matrix_word(p.parts(), q.parts(), &mut |word| {
                        *counts.entry(Composition::from_parts(word.to_vec()).mask()).or_default() += 1;
                    });
                }
                let mut entries: Vec<(u32, u64)> = counts.into_iter().collect();
                entries.sort_unstable();
                products.push(entries);
            }
        }
        XiTable { n, products }
    }
}

/// Calls `f` with the row reading of every matrix with the given margins.
fn for_each_matrix_word(rows: &[usize], cols: &[usize], f: &mut impl FnMut(&[usize])) {
    fn rec(
        rows: &[usize],
        i: usize,
        j: usize,
        left_in_row: usize,
        caps: &mut Vec<usize>,
        word: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]),
    ) {
        if i == rows.len() {
            f(word);
            return;
        }
        let last_col = j + 1 == caps.len();
        let (lo, hi) = if last_col { (left_in_row, left_in_row) } else { (0, left_in_row.min(caps[j])) };
        if lo > caps[j] {
            return;
        }
        for v in lo..=hi {
            caps[j] -= v;
            if v > 0 {
                word.push(v);
            }
            if last_col {
                let next = rows.get(i + 1).copied().unwrap_or(0);
                rec(rows, i + 1, 0, next, caps, word, f);
            } else {
                rec(rows, i, j + 1, left_in_row - v, caps, word, f);
            }
            if v > 0 {
                word.pop();
            }
            caps[j] += v;
        }
    }
    let mut caps = cols.to_vec();
    rec(rows, 0, 0, rows[0], &mut caps, &mut Vec::new(), f);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_counts() {
        // 2x2 matrices with margins (1,1), (1,1): two permutation matrices
        let mut words = Vec::new();
        for_each_matrix_word(&[1, 1], &[1, 1], &mut |w| words.push(w.to_vec()));
        assert_eq!(words, vec![vec![1, 1], vec![1, 1]]);
        let mut count = 0;
        for_each_matrix_word(&[2, 1], &[1, 2], &mut |_| count += 1);
        assert_eq!(count, 2);
    }

    #[test]
    fn total_multiplicity_is_a_product_of_supports() {
        // |Ξ^p|·|Ξ^q| = Σ_r c_r |Ξ^r| since each is a sum of permutations.
        let n = 4;
        let t = XiTable::get(n);
        let size_of = |m: u32| {
            let q = Composition::from_mask(n, m);
            let mut s = 24u64;
            for &p in q.parts() {
                s /= crate::combinatorics::factorial(p);
            }
            s
        };
        for p in 0..8u32 {
            for q in 0..8u32 {
                let total: u64 = t.product(p as usize, q as usize).iter().map(|&(r, c)| c * size_of(r)).sum();
                assert_eq!(total, size_of(p) * size_of(q));
            }
        }
    }
}
