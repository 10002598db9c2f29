use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::xi_table::XiTable;
use crate::combinatorics::statistics::descent_mask;
use crate::combinatorics::{Composition, SubsetOfRail};
use crate::error::{check_degree, Error, Result};
use crate::group_algebra::{AlgebraElement, Permutation};
use crate::scalar::Rational;

/// An element of D_n, stored by its Ξ-basis coordinates.
///
/// Coordinates are indexed by the bitmask of D(q), so the vector has length
/// 2^{n−1} (length 1 for n = 0).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DescentAlgElement {
    n: usize,
    xi: Vec<Rational>,
}

pub(crate) fn size(n: usize) -> usize {
    1 << n.saturating_sub(1)
}

/// Σ over supersets: y_E = Σ_{D ⊇ E} x_D.
fn superset_sums(v: &mut [Rational], sign: bool) {
    let len = v.len();
    let mut bit = 1;
    while bit < len {
        for m in 0..len {
            if m & bit == 0 {
                let hi = v[m | bit].clone();
                if sign {
                    v[m] -= hi;
                } else {
                    v[m] += hi;
                }
            }
        }
        bit <<= 1;
    }
}

impl DescentAlgElement {
    pub fn zero(n: usize) -> Self {
        DescentAlgElement { n, xi: vec![Rational::zero(); size(n)] }
    }

    pub fn from_xi_vec(n: usize, xi: Vec<Rational>) -> Self {
        assert_eq!(xi.len(), size(n), "coordinate vector length");
        DescentAlgElement { n, xi }
    }

    /// From coordinates in the Δ basis, indexed by descent-set masks.
    pub fn from_delta_vec(n: usize, mut delta: Vec<Rational>) -> Self {
        assert_eq!(delta.len(), size(n), "coordinate vector length");
        superset_sums(&mut delta, true);
        DescentAlgElement { n, xi: delta }
    }

    pub fn from_xi_coords(n: usize, coords: &BTreeMap<Composition, Rational>) -> Result<Self> {
        let mut out = Self::zero(n);
        for (q, c) in coords {
            if q.sum() != n {
                return Err(Error::DegreeMismatch { expected: n, found: q.sum() });
            }
            out.xi[q.mask() as usize] += c;
        }
        Ok(out)
    }

    /// Ξ^q.
    pub fn xi(q: &Composition) -> Self {
        let mut out = Self::zero(q.sum());
        out.xi[q.mask() as usize] = Rational::one();
        out
    }

    /// Δ^D.
    pub fn delta(d: &SubsetOfRail) -> Self {
        let mut v = vec![Rational::zero(); size(d.n())];
        v[d.mask() as usize] = Rational::one();
        Self::from_delta_vec(d.n(), v)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn xi_vec(&self) -> &[Rational] {
        &self.xi
    }

    pub fn delta_vec(&self) -> Vec<Rational> {
        let mut v = self.xi.clone();
        superset_sums(&mut v, false);
        v
    }

    pub fn xi_coords(&self) -> BTreeMap<Composition, Rational> {
        self.xi
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (Composition::from_mask(self.n, m as u32), c.clone()))
            .collect()
    }

    pub fn delta_coords(&self) -> BTreeMap<SubsetOfRail, Rational> {
        self.delta_vec()
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (SubsetOfRail::from_mask(self.n, m as u32), c))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.xi.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        DescentAlgElement { n: self.n, xi: self.xi.iter().map(|x| x * c).collect() }
    }

    /// The inner product ∗ in D_n.
    pub fn inner(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "inner product of different degrees");
        let table = XiTable::get(self.n);
        if let Some(out) = self.inner_scaled(other, &table) {
            return out;
        }
        let mut out = Self::zero(self.n);
        for (p, x) in self.xi.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (q, y) in other.xi.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for &(r, c) in table.product(p, q) {
                    out.xi[r as usize] += &xy * Rational::from_integer(BigInt::from(c));
                }
            }
        }
        out
    }

    /// Integer fast path: clear denominators and accumulate in i128.
    fn inner_scaled(&self, other: &Self, table: &XiTable) -> Option<Self> {
        let (a, da) = integer_vector(&self.xi)?;
        let (b, db) = integer_vector(&other.xi)?;
        let mut acc = vec![0i128; self.xi.len()];
        for (p, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (q, &y) in b.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let xy = x.checked_mul(y)?;
                for &(r, c) in table.product(p, q) {
                    let term = xy.checked_mul(c as i128)?;
                    acc[r as usize] = acc[r as usize].checked_add(term)?;
                }
            }
        }
        let denom = da * db;
        let xi = acc.into_iter().map(|v| Rational::new(BigInt::from(v), denom.clone())).collect();
        Some(DescentAlgElement { n: self.n, xi })
    }

    /// The convolution ⋆: Ξ^p ⋆ Ξ^q = Ξ^{p.q}.
    pub fn outer(&self, other: &Self) -> Self {
        let (n, m) = (self.n, other.n);
        let mut out = Self::zero(n + m);
        for (p, x) in self.xi.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (q, y) in other.xi.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let r = if n == 0 {
                    q
                } else if m == 0 {
                    p
                } else {
                    p | (1 << (n - 1)) | (q << n)
                };
                out.xi[r] += x * y;
            }
        }
        out
    }

    /// The permutation-level element Σ_D x_D Δ^D.
    pub fn to_algebra_element(&self) -> Result<AlgebraElement<Rational>> {
        check_degree(self.n)?;
        let delta = self.delta_vec();
        Ok(Permutation::all(self.n)
            .filter_map(|p| {
                let c = &delta[descent_mask(&p) as usize];
                (!c.is_zero()).then(|| (p, c.clone()))
            })
            .collect())
    }

    /// The element of D_n equal to φ, or the witness pair showing φ ∉ D_n.
    pub fn from_algebra_element(phi: &AlgebraElement<Rational>, n: usize) -> Result<Self> {
        check_degree(n)?;
        if let Some(d) = phi.degrees().find(|&d| d != n) {
            return Err(Error::DegreeMismatch { expected: n, found: d });
        }
        let mut delta: Vec<Option<(Permutation, Rational)>> = vec![None; size(n)];
        for p in Permutation::all(n) {
            let c = phi.coeff(&p);
            let slot = &mut delta[descent_mask(&p) as usize];
            match slot {
                None => *slot = Some((p, c)),
                Some((q, x)) if *x != c => {
                    return Err(Error::NotInDescentAlgebra(format!(
                        "{q} and {p} share a descent set but have coefficients {x} and {c}"
                    )))
                }
                Some(_) => {}
            }
        }
        let delta = delta.into_iter().map(|s| s.map(|(_, c)| c).unwrap_or_else(Rational::zero)).collect();
        Ok(Self::from_delta_vec(n, delta))
    }

    /// Membership in P_n: Δ-coordinates constant on the fibers of D ↦ P(D).
    pub fn is_peak(&self) -> bool {
        self.pi_coords().is_ok()
    }

    /// Coordinates in the Π basis, indexed by peak sets.
    pub fn pi_coords(&self) -> Result<BTreeMap<SubsetOfRail, Rational>> {
        let mut seen: BTreeMap<SubsetOfRail, (SubsetOfRail, Rational)> = BTreeMap::new();
        for (m, c) in self.delta_vec().into_iter().enumerate() {
            let d = SubsetOfRail::from_mask(self.n, m as u32);
            let p = d.peaks_of_descents();
            match seen.get(&p) {
                None => {
                    seen.insert(p, (d, c));
                }
                Some((e, x)) if *x != c => {
                    return Err(Error::NotInPeakAlgebra(format!(
                        "descent sets {e} and {d} have peak set {p} but coefficients {x} and {c}"
                    )))
                }
                Some(_) => {}
            }
        }
        Ok(seen.into_iter().filter(|(_, (_, c))| !c.is_zero()).map(|(p, (_, c))| (p, c)).collect())
    }

    /// Coordinates in the Γ basis: Π^P = Σ_{Q⊇P} (−1)^{|Q|−|P|} Γ^Q.
    pub fn gamma_coords(&self) -> Result<BTreeMap<SubsetOfRail, Rational>> {
        let pi = self.pi_coords()?;
        let mut out: BTreeMap<SubsetOfRail, Rational> = BTreeMap::new();
        for (p, c) in &pi {
            for q in p.supersets().filter(SubsetOfRail::is_peak_set) {
                let term = if (q.len() - p.len()) % 2 == 0 { c.clone() } else { -c.clone() };
                *out.entry(q).or_insert_with(Rational::zero) += term;
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    /// Σ_P c_P Π^P.
    pub fn from_pi_coords(n: usize, coords: &BTreeMap<SubsetOfRail, Rational>) -> Result<Self> {
        for p in coords.keys() {
            if p.n() != n || !p.is_peak_set() {
                return Err(Error::InvalidIndex(format!("{p} is not a peak set in [{n}]")));
            }
        }
        let delta = (0..size(n) as u32)
            .map(|m| {
                let p = SubsetOfRail::from_mask(n, m).peaks_of_descents();
                coords.get(&p).cloned().unwrap_or_else(Rational::zero)
            })
            .collect();
        Ok(Self::from_delta_vec(n, delta))
    }

    /// Σ_P c_P Γ^P with Γ^P = Σ_{Q⊇P} Π^Q.
    pub fn from_gamma_coords(n: usize, coords: &BTreeMap<SubsetOfRail, Rational>) -> Result<Self> {
        let mut pi: BTreeMap<SubsetOfRail, Rational> = BTreeMap::new();
        for (p, c) in coords {
            if p.n() != n || !p.is_peak_set() {
                return Err(Error::InvalidIndex(format!("{p} is not a peak set in [{n}]")));
            }
            for q in p.supersets().filter(SubsetOfRail::is_peak_set) {
                *pi.entry(q).or_insert_with(Rational::zero) += c;
            }
        }
        Self::from_pi_coords(n, &pi)
    }

    /// φ ∗ τ_{n,1} = φ, checked through descent classes: the coefficient of π
    /// must equal that of πτ_{n,1} for all π ∈ S_n.
    pub fn is_tau_invariant(&self) -> Result<bool> {
        check_degree(self.n)?;
        if self.n < 2 {
            return Ok(true);
        }
        let delta = self.delta_vec();
        Ok(Permutation::all(self.n)
            .all(|p| delta[descent_mask(&p) as usize] == delta[descent_mask(&p.swap_values(1)) as usize]))
    }
}

/// (integer numerators, common denominator) when every numerator fits in i64.
fn integer_vector(v: &[Rational]) -> Option<(Vec<i128>, BigInt)> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints = v
        .iter()
        .map(|x| (x.numer() * (&lcm / x.denom())).to_i64().map(i128::from))
        .collect::<Option<Vec<_>>>()?;
    Some((ints, lcm))
}

impl Add for DescentAlgElement {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        assert_eq!(self.n, rhs.n, "sum of different degrees");
        for (x, y) in self.xi.iter_mut().zip(rhs.xi) {
            *x += y;
        }
        self
    }
}

impl Add for &DescentAlgElement {
    type Output = DescentAlgElement;

    fn add(self, rhs: Self) -> DescentAlgElement {
        self.clone() + rhs.clone()
    }
}

impl Neg for DescentAlgElement {
    type Output = Self;

    fn neg(self) -> Self {
        DescentAlgElement { n: self.n, xi: self.xi.into_iter().map(|x| -x).collect() }
    }
}

impl Sub for DescentAlgElement {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Sub for &DescentAlgElement {
    type Output = DescentAlgElement;

    fn sub(self, rhs: Self) -> DescentAlgElement {
        self.clone() - rhs.clone()
    }
}

impl fmt::Display for DescentAlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coords = self.xi_coords();
        if coords.is_empty() {
            return write!(f, "0 (degree {})", self.n);
        }
        let parts: Vec<String> = coords.iter().map(|(q, c)| format!("({c})Ξ^{{{q}}}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for DescentAlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
