//! The descent algebra D_n and the peak algebra P_n.

pub mod bases;
pub mod coproduct;
mod element;
pub mod relations;
pub mod transitions;
pub(crate) mod xi_table;

pub use bases::{basis, basis_element, BasisId, BasisIndex, BasisKind};
pub use element::DescentAlgElement;

use std::collections::BTreeMap;

use crate::combinatorics::statistics::descent_mask;
use crate::combinatorics::{Composition, SubsetOfRail};
use crate::error::Result;
use crate::group_algebra::AlgebraElement;
use crate::scalar::Rational;

/// The element of D_n equal to φ, or an error naming two permutations with
/// equal descent sets and different coefficients.
pub fn descent_membership(phi: &AlgebraElement<Rational>) -> Result<DescentAlgElement> {
    let n = phi.degree()?.unwrap_or(0);
    DescentAlgElement::from_algebra_element(phi, n)
}

pub fn is_in_descent_algebra(phi: &AlgebraElement<Rational>) -> bool {
    descent_membership(phi).is_ok()
}

/// φ ∈ P_n iff φ ∈ D_n and φ ∗ τ_1 = φ. On failure the error names the
/// violating pair.
pub fn peak_membership(phi: &AlgebraElement<Rational>) -> Result<DescentAlgElement> {
    let d = descent_membership(phi)?;
    d.pi_coords()?;
    Ok(d)
}

pub fn is_in_peak_algebra(phi: &AlgebraElement<Rational>) -> bool {
    peak_membership(phi).is_ok()
}

/// Ξ-coordinates of φ ∈ D_n.
pub fn to_xi_basis(phi: &AlgebraElement<Rational>) -> Result<BTreeMap<Composition, Rational>> {
    Ok(descent_membership(phi)?.xi_coords())
}

/// Δ-coordinates of φ ∈ D_n.
pub fn to_delta_basis(phi: &AlgebraElement<Rational>) -> Result<BTreeMap<SubsetOfRail, Rational>> {
    Ok(descent_membership(phi)?.delta_coords())
}

/// dim{φ ∈ D_n : φτ_{n,1} = φ}. In Δ-coordinates the condition equates the
/// coefficients at Des(π) and Des(πτ_{n,1}) for every π, so the dimension
/// is the number of classes of descent sets linked by these pairs.
pub fn tau_invariant_dimension(n: usize) -> Result<usize> {
    crate::error::check_degree(n)?;
    if n < 2 {
        return Ok(1);
    }
    let size = 1usize << (n - 1);
    let mut parent: Vec<usize> = (0..size).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for p in crate::group_algebra::Permutation::all(n) {
        let a = find(&mut parent, descent_mask(&p) as usize);
        let b = find(&mut parent, descent_mask(&p.swap_values(1)) as usize);
        parent[a] = b;
    }
    Ok((0..size).filter(|&x| find(&mut parent, x) == x).count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{compositions, fibonacci, peak_sets};
    use crate::group_algebra::Permutation;
    use crate::linalg::rank;
    use crate::scalar::int;

    #[test]
    fn membership() {
        let d1 = basis_element(&BasisId::parse(BasisKind::Delta, 3, Some("1.2")).unwrap()).unwrap();
        assert!(is_in_descent_algebra(&d1));
        let single = AlgebraElement::from_perm(Permutation::new(&[1, 3, 2]).unwrap());
        assert!(!is_in_descent_algebra(&single));
        let d2 = basis_element(&BasisId::parse(BasisKind::Delta, 2, Some("1.1")).unwrap()).unwrap();
        assert!(!is_in_peak_algebra(&d2));
        for n in 0..=7 {
            for p in peak_sets(n) {
                let e = basis_element(&BasisId::subset(BasisKind::Pi, p).unwrap()).unwrap();
                assert!(is_in_peak_algebra(&e));
            }
        }
    }

    #[test]
    fn invariant_subspace_dimension() {
        // dim{φ ∈ D_n : φτ_1 = φ} by the rank of the map φ ↦ φ − φτ_1 on Δ^D.
        for n in 2..=8 {
            let size = 1usize << (n - 1);
            let perms: Vec<Permutation> = Permutation::all(n).collect();
            let rows: Vec<Vec<crate::scalar::Rational>> = (0..size as u32)
                .map(|m| {
                    let mut delta = vec![int(0); size];
                    delta[m as usize] = int(1);
                    let dv = DescentAlgElement::from_delta_vec(n, delta).delta_vec();
                    perms
                        .iter()
                        .map(|p| {
                            let a = &dv[crate::combinatorics::statistics::descent_mask(p) as usize];
                            let b = &dv[crate::combinatorics::statistics::descent_mask(&p.swap_values(1)) as usize];
                            a - b
                        })
                        .collect()
                })
                .collect();
            assert_eq!((size - rank(&rows)) as u64, fibonacci(n), "n = {n}");
            assert_eq!(tau_invariant_dimension(n).unwrap() as u64, fibonacci(n));
        }
    }

    #[test]
    fn coordinate_round_trips() {
        let n = 5;
        for (i, q) in compositions(n).into_iter().enumerate() {
            let e = DescentAlgElement::xi(&q).scale(&int(i as i64 - 7))
                + DescentAlgElement::delta(&q.descent_set()).scale(&int(3));
            let phi = e.to_algebra_element().unwrap();
            assert_eq!(DescentAlgElement::from_xi_coords(n, &to_xi_basis(&phi).unwrap()).unwrap(), e);
            let delta = to_delta_basis(&phi).unwrap();
            let mut v = vec![int(0); 16];
            for (d, c) in delta {
                v[d.mask() as usize] = c;
            }
            assert_eq!(DescentAlgElement::from_delta_vec(n, v), e);
        }
        for n in 0..=8 {
            for p in peak_sets(n) {
                let e = basis(&BasisId::subset(BasisKind::Pi, p).unwrap());
                let back = DescentAlgElement::from_gamma_coords(n, &e.gamma_coords().unwrap()).unwrap();
                assert_eq!(back, e);
            }
        }
    }

    #[test]
    fn table_products_match_permutation_products() {
        for n in 0..=6 {
            let qs = compositions(n);
            for p in &qs {
                for q in &qs {
                    let (a, b) = (DescentAlgElement::xi(p), DescentAlgElement::xi(q));
                    let direct = a.to_algebra_element().unwrap().inner(&b.to_algebra_element().unwrap());
                    assert_eq!(a.inner(&b).to_algebra_element().unwrap(), direct, "{p} * {q}");
                }
            }
        }
    }

    #[test]
    fn delta_in_xi_basis() {
        let q: Composition = "1.2".parse().unwrap();
        let coords = DescentAlgElement::delta(&q.descent_set()).xi_coords();
        let expected = BTreeMap::from([("1.2".parse().unwrap(), int(1)), ("3".parse().unwrap(), int(-1))]);
        assert_eq!(coords, expected);
    }
}
