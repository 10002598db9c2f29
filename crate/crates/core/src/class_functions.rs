//! Class functions on the symmetric groups and the epimorphism c from the
//! descent algebra.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde_json::{json, Map, Value};

use crate::combinatorics::{compositions, odd_compositions, partitions, Composition, Partition};
use crate::descent_peak::bases::tilde_xi;
use crate::descent_peak::DescentAlgElement;
use crate::error::{Error, Result};
use crate::linalg::rank;
use crate::scalar::{int, parse_rational, Rational};

/// A class function on S_n, stored by its values on the classes C_p.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ClassFunction {
    n: usize,
    values: BTreeMap<Partition, Rational>,
}

impl ClassFunction {
    pub fn zero(n: usize) -> Self {
        ClassFunction { n, values: BTreeMap::new() }
    }

    pub fn from_values(n: usize, values: BTreeMap<Partition, Rational>) -> Result<Self> {
        if let Some(p) = values.keys().find(|p| p.sum() != n) {
            return Err(Error::DegreeMismatch { expected: n, found: p.sum() });
        }
        let mut out = ClassFunction { n, values };
        out.prune();
        Ok(out)
    }

    fn prune(&mut self) {
        self.values.retain(|_, c| !c.is_zero());
    }

    /// The characteristic function of C_p.
    pub fn char_of(p: &Partition) -> Self {
        ClassFunction { n: p.sum(), values: BTreeMap::from([(p.clone(), Rational::one())]) }
    }

    /// ch_q = q?·char_{sort(q)}.
    pub fn ch(q: &Composition) -> Self {
        Self::char_of(&q.sorted()).scale(&int(q.centralizer_order() as i64))
    }

    /// The trivial character ξ^n.
    pub fn trivial(n: usize) -> Self {
        ClassFunction { n, values: partitions(n).into_iter().map(|p| (p, Rational::one())).collect() }
    }

    /// The sign character: (−1)^{n−ℓ(p)} on C_p.
    pub fn sign_character(n: usize) -> Self {
        let values = partitions(n)
            .into_iter()
            .map(|p| {
                let s = if (n - p.len()) % 2 == 0 { 1 } else { -1 };
                (p, int(s))
            })
            .collect();
        ClassFunction { n, values }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn value(&self, p: &Partition) -> Rational {
        self.values.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero values only.
    pub fn values(&self) -> &BTreeMap<Partition, Rational> {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = ClassFunction { n: self.n, values: self.values.iter().map(|(p, x)| (p.clone(), x * c)).collect() };
        out.prune();
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "sum of class functions of different degrees");
        let mut values = self.values.clone();
        for (p, c) in &other.values {
            *values.entry(p.clone()).or_insert_with(Rational::zero) += c;
        }
        let mut out = ClassFunction { n: self.n, values };
        out.prune();
        out
    }

    /// Pointwise product; the product of different degrees is zero (reported
    /// in the degree of `self`).
    pub fn kronecker(&self, other: &Self) -> Self {
        if self.n != other.n {
            return Self::zero(self.n);
        }
        let values = self
            .values
            .iter()
            .filter_map(|(p, x)| other.values.get(p).map(|y| (p.clone(), x * y)))
            .collect();
        ClassFunction { n: self.n, values }
    }

    /// Coordinates in the ch basis: χ = Σ_p (χ(C_p)/p?) ch_p.
    pub fn ch_coords(&self) -> BTreeMap<Partition, Rational> {
        self.values
            .iter()
            .map(|(p, c)| (p.clone(), c / int(p.centralizer_order() as i64)))
            .collect()
    }

    /// The outer product, the bilinear extension of ch_r • ch_q = ch_{r.q}.
    pub fn outer(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.n + other.n);
        for (p, x) in self.ch_coords() {
            for (q, y) in other.ch_coords() {
                let rq = p.as_composition().concat(q.as_composition());
                out = out.add(&Self::ch(&rq).scale(&(&x * &y)));
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let values: Map<String, Value> =
            self.values.iter().map(|(p, c)| (p.key(), Value::String(c.to_string()))).collect();
        json!({ "n": self.n, "values": values })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let n = v["n"].as_u64().ok_or_else(|| Error::Parse("missing degree \"n\"".into()))? as usize;
        let obj = v["values"].as_object().ok_or_else(|| Error::Parse("missing \"values\"".into()))?;
        let mut values = BTreeMap::new();
        for (k, c) in obj {
            let c = c.as_str().ok_or_else(|| Error::Parse(format!("value of {k} is not a string")))?;
            values.insert(k.parse::<Partition>()?, parse_rational(c)?);
        }
        Self::from_values(n, values)
    }
}

impl fmt::Display for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.values.is_empty() {
            return write!(f, "0 (degree {})", self.n);
        }
        let parts: Vec<String> = self.values.iter().map(|(p, c)| format!("({c})char_{{{p}}}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// c(Ξ^q) = ξ^{q1} • … • ξ^{qk}.
pub fn solomon_c_xi(q: &Composition) -> ClassFunction {
    q.parts()
        .iter()
        .fold(ClassFunction::trivial(0), |acc, &m| acc.outer(&ClassFunction::trivial(m)))
}

/// Solomon's epimorphism c : D_n → Cl(S_n), through the Ξ basis.
pub fn solomon_c(phi: &DescentAlgElement) -> ClassFunction {
    phi.xi_coords()
        .iter()
        .fold(ClassFunction::zero(phi.degree()), |acc, (q, c)| acc.add(&solomon_c_xi(q).scale(c)))
}

/// c(Ξ^q)(C_p) by counting: the number of maps [n] → [ℓ(q)] with fibers of
/// sizes q_1, …, q_k that are constant on the cycles of a permutation of
/// type p.
pub fn solomon_c_xi_by_counting(q: &Composition, p: &Partition) -> u64 {
    fn rec(cycles: &[usize], room: &mut Vec<usize>) -> u64 {
        let Some((&c, rest)) = cycles.split_first() else {
            return u64::from(room.iter().all(|&r| r == 0));
        };
        let mut total = 0;
        for i in 0..room.len() {
            if room[i] >= c {
                room[i] -= c;
                total += rec(rest, room);
                room[i] += c;
            }
        }
        total
    }
    rec(p.parts(), &mut q.parts().to_vec())
}

/// (dim ker c on D_n, dim ker c on P_n).
pub fn kernel_dims(n: usize) -> (usize, usize) {
    let parts = partitions(n);
    let vector = |f: &ClassFunction| parts.iter().map(|p| f.value(p)).collect::<Vec<_>>();
    let d_rows: Vec<_> = compositions(n).iter().map(|q| vector(&solomon_c_xi(q))).collect();
    let p_rows: Vec<_> = odd_compositions(n).iter().map(|q| vector(&solomon_c(&tilde_xi(q)))).collect();
    (d_rows.len() - rank(&d_rows), p_rows.len() - rank(&p_rows))
}
