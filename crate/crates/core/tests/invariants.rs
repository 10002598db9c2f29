use std::collections::BTreeMap;

use proptest::prelude::*;

use peaklab::combinatorics::{compositions, peak_sets, Composition};
use peaklab::descent_peak::{is_in_peak_algebra, DescentAlgElement};
use peaklab::scalar::{rat, Rational};

fn element(n: usize, coeffs: &[i64]) -> DescentAlgElement {
    let size = 1usize << (n - 1);
    DescentAlgElement::from_xi_vec(n, (0..size).map(|i| rat(coeffs[i % coeffs.len()], 1)).collect())
}

fn peak_element(n: usize, coeffs: &[i64]) -> DescentAlgElement {
    let coords: BTreeMap<_, Rational> =
        peak_sets(n).into_iter().enumerate().map(|(i, p)| (p, rat(coeffs[i % coeffs.len()], 1))).collect();
    DescentAlgElement::from_pi_coords(n, &coords).unwrap()
}

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, 1..8)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn inner_product_matches_group_algebra(n in 1usize..=5, a in coeffs(), b in coeffs()) {
        let (x, y) = (element(n, &a), element(n, &b));
        let fast = x.inner(&y).to_algebra_element().unwrap();
        let slow = x.to_algebra_element().unwrap().inner(&y.to_algebra_element().unwrap());
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn outer_product_matches_group_algebra(n in 1usize..=3, m in 1usize..=3, a in coeffs(), b in coeffs()) {
        let (x, y) = (element(n, &a), element(m, &b));
        let fast = x.outer(&y).to_algebra_element().unwrap();
        let slow = x.to_algebra_element().unwrap().outer(&y.to_algebra_element().unwrap());
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn inner_product_is_associative(n in 1usize..=5, a in coeffs(), b in coeffs(), c in coeffs()) {
        let (x, y, z) = (element(n, &a), element(n, &b), element(n, &c));
        prop_assert_eq!(x.inner(&y).inner(&z), x.inner(&y.inner(&z)));
    }

    #[test]
    fn peak_algebra_is_a_left_ideal(n in 1usize..=6, a in coeffs(), b in coeffs()) {
        let product = element(n, &a).inner(&peak_element(n, &b));
        prop_assert!(product.is_peak());
        prop_assert!(is_in_peak_algebra(&product.to_algebra_element().unwrap()));
    }

    #[test]
    fn peak_elements_are_tau_invariant(n in 1usize..=6, a in coeffs()) {
        let x = element(n, &a);
        prop_assert_eq!(x.is_tau_invariant().unwrap(), x.is_peak());
        prop_assert!(peak_element(n, &a).is_tau_invariant().unwrap());
    }

    #[test]
    fn xi_convolution_concatenates(r in 1usize..=4, q in 1usize..=4, i in 0usize..8, j in 0usize..8) {
        let rs = compositions(r);
        let qs = compositions(q);
        let (a, b) = (&rs[i % rs.len()], &qs[j % qs.len()]);
        let parts: Vec<usize> = a.parts().iter().chain(b.parts()).copied().collect();
        let rq = Composition::new(parts).unwrap();
        prop_assert_eq!(DescentAlgElement::xi(a).outer(&DescentAlgElement::xi(b)), DescentAlgElement::xi(&rq));
    }

    #[test]
    fn pi_coordinates_round_trip(n in 1usize..=6, a in coeffs()) {
        let x = peak_element(n, &a);
        let back = DescentAlgElement::from_pi_coords(n, &x.pi_coords().unwrap()).unwrap();
        prop_assert_eq!(back, x.clone());
        let via_gamma = DescentAlgElement::from_gamma_coords(n, &x.gamma_coords().unwrap()).unwrap();
        prop_assert_eq!(via_gamma, x);
    }
}
