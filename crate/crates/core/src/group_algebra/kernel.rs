//! Product kernel for one homogeneous component.
//!
//! Descent-algebra elements take few distinct coefficient values, so both
//! factors are grouped into value classes. For each pair of classes the
//! products are counted with machine integers and only the touched results
//! are combined with the scalar coefficient.

use std::collections::{BTreeMap, HashMap};

use super::permutation::{rank_of, Permutation};
use crate::combinatorics::factorial;
use crate::scalar::Scalar;

const DENSE_LIMIT: usize = 10;

fn classes<F: Scalar>(c: &BTreeMap<Permutation, F>) -> Vec<(F, Vec<&[u8]>)> {
    let mut by_value: HashMap<&F, Vec<&[u8]>> = HashMap::new();
    for (p, x) in c {
        by_value.entry(x).or_default().push(p.images());
    }
    by_value.into_iter().map(|(x, ps)| (x.clone(), ps)).collect()
}

pub(super) fn product<F: Scalar>(
    n: usize,
    a: &BTreeMap<Permutation, F>,
    b: &BTreeMap<Permutation, F>,
) -> BTreeMap<Permutation, F> {
    if n > DENSE_LIMIT {
        return naive(a, b);
    }
    let ca = classes(a);
    let cb = classes(b);
    let mut counts = vec![0u32; factorial(n) as usize];
    let mut touched: Vec<usize> = Vec::new();
    let mut acc: HashMap<usize, F> = HashMap::new();
    let mut buf = vec![0u8; n];
    for (x, pis) in &ca {
        for (y, sigmas) in &cb {
            for pi in pis {
                for sigma in sigmas {
                    for (slot, &v) in buf.iter_mut().zip(pi.iter()) {
                        *slot = sigma[v as usize - 1];
                    }
                    let r = rank_of(&buf);
                    if counts[r] == 0 {
                        touched.push(r);
                    }
                    counts[r] += 1;
                }
            }
            let xy = x.clone() * y.clone();
            for &r in &touched {
                let c = xy.clone() * F::from_i64(counts[r] as i64);
                match acc.get_mut(&r) {
                    Some(v) => *v += c,
                    None => {
                        acc.insert(r, c);
                    }
                }
                counts[r] = 0;
            }
            touched.clear();
        }
    }
    acc.into_iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(r, v)| (Permutation::unrank(n, r), v))
        .collect()
}

fn naive<F: Scalar>(a: &BTreeMap<Permutation, F>, b: &BTreeMap<Permutation, F>) -> BTreeMap<Permutation, F> {
    let mut acc: BTreeMap<Permutation, F> = BTreeMap::new();
    for (p, x) in a {
        for (q, y) in b {
            let c = x.clone() * y.clone();
            let k = p.compose(q);
            match acc.get_mut(&k) {
                Some(v) => *v += c,
                None => {
                    acc.insert(k, c);
                }
            }
        }
    }
    acc.retain(|_, v| !v.is_zero());
    acc
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use crate::group_algebra::{AlgebraElement, Permutation};
    use crate::scalar::{int, Rational};

    fn element(n: usize, coeffs: Vec<i64>) -> AlgebraElement<Rational> {
        Permutation::all(n).zip(coeffs).map(|(p, c)| (p, int(c))).collect()
    }

    proptest! {
        #[test]
        fn kernel_matches_double_loop(
            a in proptest::collection::vec(-2i64..3, 24),
            b in proptest::collection::vec(-2i64..3, 24),
        ) {
            let (a, b) = (element(4, a), element(4, b));
            prop_assert_eq!(a.inner(&b), a.inner_naive(&b));
        }

        #[test]
        fn inner_is_associative(
            a in proptest::collection::vec(-1i64..2, 6),
            b in proptest::collection::vec(-1i64..2, 6),
            c in proptest::collection::vec(-1i64..2, 6),
        ) {
            let (a, b, c) = (element(3, a), element(3, b), element(3, c));
            prop_assert_eq!(a.inner(&b).inner(&c), a.inner(&b.inner(&c)));
        }
    }
}
