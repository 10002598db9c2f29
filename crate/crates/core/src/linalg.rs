//! Exact linear algebra over Q.
//!
//! [`Subspace`] keeps an echelon basis of primitive integer rows and reduces
//! new vectors by fraction-free elimination. The dense helpers below work
//! on small rational matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::scalar::Rational;

/// Scale a rational vector to a primitive integer vector with the same span.
fn to_primitive(v: &[Rational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    normalize(ints)
}

fn normalize(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in &mut v {
            *x /= &g;
        }
    }
    v
}

/// A subspace of Q^d with an echelon basis.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: usize,
    /// (pivot column, primitive row) sorted by pivot.
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new() }
    }

    pub fn spanned_by<'a, I: IntoIterator<Item = &'a [Rational]>>(ambient: usize, vectors: I) -> Self {
        let mut s = Self::zero(ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut w: Vec<BigInt>) -> Vec<BigInt> {
        for (p, row) in &self.rows {
            if w[*p].is_zero() {
                continue;
            }
            let a = row[*p].clone();
            let b = w[*p].clone();
            for (x, y) in w.iter_mut().zip(row.iter()) {
                *x = &a * &*x - &b * y;
            }
            w = normalize(w);
        }
        w
    }

    /// Add a vector; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient, "ambient dimension mismatch");
        let w = self.reduce(to_primitive(v));
        match w.iter().position(|x| !x.is_zero()) {
            None => false,
            Some(p) => {
                let w = if w[p].is_negative() { w.into_iter().map(|x| -x).collect() } else { w };
                let at = self.rows.partition_point(|(q, _)| *q < p);
                self.rows.insert(at, (p, w));
                true
            }
        }
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient, "ambient dimension mismatch");
        self.reduce(to_primitive(v)).iter().all(Zero::is_zero)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis().iter().all(|v| other.contains(v))
    }

    pub fn same_as(&self, other: &Subspace) -> bool {
        self.dim() == other.dim() && self.is_subspace_of(other)
    }

    /// The basis rows as rational vectors.
    pub fn basis(&self) -> Vec<Vec<Rational>> {
        self.rows.iter().map(|(_, r)| r.iter().map(|x| Rational::from_integer(x.clone())).collect()).collect()
    }

    /// The sum of two subspaces.
    pub fn join(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for v in other.basis() {
            s.insert(&v);
        }
        s
    }

    /// The intersection, from the relations between the two bases.
    pub fn meet(&self, other: &Subspace) -> Subspace {
        let a = self.basis();
        let b = other.basis();
        let vectors: Vec<Vec<Rational>> = a.iter().chain(b.iter()).cloned().collect();
        let mut out = Subspace::zero(self.ambient);
        for rel in linear_relations(&vectors) {
            let mut v = vec![Rational::zero(); self.ambient];
            for (c, row) in rel.iter().zip(a.iter()) {
                for (x, y) in v.iter_mut().zip(row) {
                    *x += c * y;
                }
            }
            out.insert(&v);
        }
        out
    }
}

/// Rank of a family of vectors.
pub fn rank(vectors: &[Vec<Rational>]) -> usize {
    match vectors.first() {
        None => 0,
        Some(v) => Subspace::spanned_by(v.len(), vectors.iter().map(Vec::as_slice)).dim(),
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<Rational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let (src, dst) = if i < r {
                    let (lo, hi) = m.split_at_mut(r);
                    (&hi[0], &mut lo[i])
                } else {
                    let (lo, hi) = m.split_at_mut(i);
                    (&lo[r], &mut hi[0])
                };
                for (x, y) in dst.iter_mut().zip(src.iter()) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// A basis of {a : Σ a_i v_i = 0} for the given vectors v_i.
pub fn linear_relations(vectors: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let k = vectors.len();
    if k == 0 {
        return Vec::new();
    }
    let d = vectors[0].len();
    // Columns are the vectors.
    let mut m: Vec<Vec<Rational>> = (0..d).map(|i| vectors.iter().map(|v| v[i].clone()).collect()).collect();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..k).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut a = vec![Rational::zero(); k];
            a[f] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                a[p] = -m[row][f].clone();
            }
            a
        })
        .collect()
}

/// Coefficients a with Σ a_i v_i = target, if any.
pub fn solve(vectors: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let k = vectors.len();
    let d = target.len();
    let mut m: Vec<Vec<Rational>> = (0..d)
        .map(|i| {
            let mut row: Vec<Rational> = vectors.iter().map(|v| v[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.contains(&k) {
        return None;
    }
    let mut a = vec![Rational::zero(); k];
    for (row, &p) in pivots.iter().enumerate() {
        a[p] = m[row][k].clone();
    }
    Some(a)
}

/// Characteristic polynomial det(xI − M), coefficients from degree 0 up,
/// by the Faddeev–LeVerrier recursion.
pub fn characteristic_polynomial(m: &[Vec<Rational>]) -> Vec<Rational> {
    let n = m.len();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut mk: Vec<Vec<Rational>> = vec![vec![Rational::zero(); n]; n];
    for k in 1..=n {
        // M_k = M·(M_{k−1} + c_{n−k+1} I)
        let mut prev = mk.clone();
        for (i, row) in prev.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        mk = mat_mul(m, &prev);
        let trace: Rational = (0..n).map(|i| mk[i][i].clone()).sum();
        coeffs[n - k] = -trace / Rational::from_integer(BigInt::from(k));
    }
    coeffs
}

fn mat_mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![Rational::zero(); m]; n];
    for i in 0..n {
        for (k, bk) in b.iter().enumerate() {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..m {
                out[i][j] += &a[i][k] * &bk[j];
            }
        }
    }
    out
}

fn divisors(n: u128) -> Vec<u128> {
    let mut out = Vec::new();
    let mut d = 1u128;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out
}

fn eval(poly: &[Rational], x: &Rational) -> Rational {
    poly.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

/// The distinct rational roots of a nonzero polynomial (rational root theorem).
///
/// Returns `None` when the coefficients are too large to enumerate divisors.
pub fn rational_roots(poly: &[Rational]) -> Option<Vec<Rational>> {
    let mut ints = to_primitive(poly);
    while ints.last().is_some_and(Zero::is_zero) {
        ints.pop();
    }
    let mut roots = Vec::new();
    let lead_zeros = ints.iter().take_while(|x| x.is_zero()).count();
    if lead_zeros > 0 {
        roots.push(Rational::zero());
        ints.drain(..lead_zeros);
    }
    if ints.len() <= 1 {
        return Some(roots);
    }
    let a0 = ints[0].abs().to_u128()?;
    let an = ints.last().unwrap().abs().to_u128()?;
    if a0 > 1 << 40 || an > 1 << 40 {
        return None;
    }
    let poly: Vec<Rational> = ints.iter().map(|x| Rational::from_integer(x.clone())).collect();
    for p in divisors(a0) {
        for q in divisors(an) {
            for s in [1i64, -1] {
                let x = Rational::new(BigInt::from(p) * s, BigInt::from(q));
                if !roots.contains(&x) && eval(&poly, &x).is_zero() {
                    roots.push(x);
                }
            }
        }
    }
    roots.sort();
    Some(roots)
}

/// Row vectors f (up to scale) with f·M_a ∈ Q·f for every given matrix, i.e.
/// the functionals whose kernels are invariant hyperplanes. Each returned
/// entry is a basis of one joint left eigenspace. `None` when some
/// characteristic polynomial has coefficients too large to factor.
pub fn joint_left_eigenspaces(ops: &[Vec<Vec<Rational>>], d: usize) -> Option<Vec<Vec<Vec<Rational>>>> {
    let mut spaces: Vec<Subspace> = vec![Subspace::spanned_by(d, identity(d).iter().map(Vec::as_slice))];
    for m in ops {
        let t = transpose(m);
        let mut next = Vec::new();
        for lambda in rational_roots(&characteristic_polynomial(&t))? {
            // left eigenvectors of M: (Mᵀ − λ)v = 0
            let mut shifted = t.clone();
            for (i, row) in shifted.iter_mut().enumerate() {
                row[i] -= &lambda;
            }
            let cols: Vec<Vec<Rational>> = transpose(&shifted);
            let eig = Subspace::spanned_by(d, linear_relations(&cols).iter().map(Vec::as_slice));
            for s in &spaces {
                let meet = s.meet(&eig);
                if meet.dim() > 0 {
                    next.push(meet);
                }
            }
        }
        spaces = next;
    }
    Some(spaces.iter().map(Subspace::basis).collect())
}

fn identity(d: usize) -> Vec<Vec<Rational>> {
    (0..d).map(|i| (0..d).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect()
}

pub fn transpose(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).map(|j| (0..rows).map(|i| m[i][j].clone()).collect()).collect()
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::scalar::{int, rat};

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn subspace_membership() {
        let mut s = Subspace::zero(3);
        assert!(s.insert(&v(&[1, 2, 3])));
        assert!(!s.insert(&v(&[2, 4, 6])));
        assert!(s.insert(&[rat(1, 2), int(0), int(1)]));
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&v(&[3, 2, 7])));
        assert!(!s.contains(&v(&[0, 0, 1])));
    }

    #[test]
    fn meet_and_join() {
        let a = Subspace::spanned_by(3, [v(&[1, 0, 0]), v(&[0, 1, 0])].iter().map(Vec::as_slice));
        let b = Subspace::spanned_by(3, [v(&[0, 1, 1]), v(&[1, 1, 0])].iter().map(Vec::as_slice));
        let m = a.meet(&b);
        assert_eq!(m.dim(), 1);
        assert!(m.contains(&v(&[1, 1, 0])));
        assert_eq!(a.join(&b).dim(), 3);
    }

    #[test]
    fn relations_and_solve() {
        let vs = vec![v(&[1, 0]), v(&[0, 1]), v(&[1, 1])];
        let rel = linear_relations(&vs);
        assert_eq!(rel.len(), 1);
        assert_eq!(rel[0], v(&[-1, -1, 1]));
        assert_eq!(solve(&vs[..2], &v(&[3, -2])), Some(v(&[3, -2])));
        assert_eq!(solve(&[v(&[1, 1])], &v(&[1, 0])), None);
    }

    #[test]
    fn charpoly_and_roots() {
        // [[2,1],[0,3]] has x^2 − 5x + 6
        let m = vec![v(&[2, 1]), v(&[0, 3])];
        assert_eq!(characteristic_polynomial(&m), v(&[6, -5, 1]));
        assert_eq!(rational_roots(&v(&[6, -5, 1])).unwrap(), v(&[2, 3]));
        assert_eq!(rational_roots(&v(&[-2, 0, 1])).unwrap(), Vec::<Rational>::new());
        assert_eq!(rational_roots(&[int(0), rat(1, 2), int(1)]).unwrap(), vec![rat(-1, 2), int(0)]);
    }

    #[test]
    fn invariant_hyperplanes_of_a_jordan_block() {
        // M = [[1,1],[0,1]]: the only left eigenvector is (0,1) up to scale.
        let m = vec![v(&[1, 1]), v(&[0, 1])];
        let spaces = joint_left_eigenspaces(&[m], 2).unwrap();
        assert_eq!(spaces.len(), 1);
        assert_eq!(spaces[0], vec![v(&[0, 1])]);
    }

    proptest! {
        #[test]
        fn rank_plus_nullity(rows in proptest::collection::vec(proptest::collection::vec(-3i64..4, 4), 1..6)) {
            let vs: Vec<Vec<Rational>> = rows.iter().map(|r| v(r)).collect();
            prop_assert_eq!(rank(&vs) + linear_relations(&vs).len(), vs.len());
            for rel in linear_relations(&vs) {
                for i in 0..4 {
                    let s: Rational = rel.iter().zip(&vs).map(|(a, x)| a * &x[i]).sum();
                    prop_assert!(s.is_zero());
                }
            }
        }
    }
}
