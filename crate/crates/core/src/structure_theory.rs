//! Module structure of P_n inside D_n: the modules Λ^p = D_nγ_p, the
//! radical, Cartan invariants and descending Loewy series.
//!
//! Subspaces of D_n are kept in Ξ-coordinates. For a module M over P_n the
//! radical is (Rad P_n)M: adjoining an identity to P_n does not change the
//! radical, since P_n/Rad P_n already has an identity.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::class_functions::solomon_c;
use crate::combinatorics::{compositions, odd_partitions, partitions, peak_sets, Composition, Partition};
use crate::descent_peak::bases::pi;
use crate::descent_peak::DescentAlgElement;
use crate::error::{check_degree, Error, Result};
use crate::lie_idempotents::LieSeries;
use crate::linalg::{joint_left_eigenspaces, linear_relations, solve, transpose, Subspace};
use crate::scalar::Rational;

fn element(n: usize, v: &[Rational]) -> DescentAlgElement {
    DescentAlgElement::from_xi_vec(n, v.to_vec())
}

fn span(n: usize, elems: &[DescentAlgElement]) -> Subspace {
    let mut s = Subspace::zero(1 << n.saturating_sub(1));
    for e in elems {
        s.insert(e.xi_vec());
    }
    s
}

/// span{ab : a ∈ left, b ∈ right}.
pub fn product_space(n: usize, left: &Subspace, right: &Subspace) -> Subspace {
    let rs: Vec<DescentAlgElement> = right.basis().iter().map(|v| element(n, v)).collect();
    let mut out = Subspace::zero(left.ambient());
    for a in left.basis() {
        let a = element(n, &a);
        for b in &rs {
            out.insert(a.inner(b).xi_vec());
        }
    }
    out
}

/// γ_q for the rearrangements q of p.
fn lambda_generators(series: &LieSeries, p: &Partition) -> Vec<DescentAlgElement> {
    p.as_composition().rearrangements().iter().map(|q| series.gamma_q(q)).collect()
}

/// Λ^p = span{γ_q : q ≈ p} for the default Lie series.
pub fn lambda_module(p: &Partition) -> Result<Subspace> {
    check_degree(p.sum())?;
    Ok(span(p.sum(), &lambda_generators(&LieSeries::default(), p)))
}

/// Λ^p has dimension #{q ≈ p} and contains D_nγ_p.
pub fn lambda_module_check(p: &Partition) -> Result<bool> {
    let n = p.sum();
    let lambda = lambda_module(p)?;
    if lambda.dim() != p.as_composition().rearrangements().len() {
        return Ok(false);
    }
    let gp = LieSeries::default().gamma_q(p.as_composition());
    Ok(compositions(n).iter().all(|r| lambda.contains(DescentAlgElement::xi(r).inner(&gp).xi_vec())))
}

/// P_n as a subspace of D_n.
pub fn peak_algebra(n: usize) -> Subspace {
    span(n, &peak_sets(n).iter().map(pi).collect::<Vec<_>>())
}

/// D_n = ⊕_{p⊢n} Λ^p and P_n = ⊕_{p⊢odd n} Λ^p, with the dimensions adding up.
pub fn decomposition_check(n: usize) -> Result<bool> {
    check_degree(n)?;
    let mut all = Subspace::zero(1 << n.saturating_sub(1));
    let mut odd = all.clone();
    let (mut total, mut odd_total) = (0, 0);
    for p in partitions(n) {
        if !lambda_module_check(&p)? {
            return Ok(false);
        }
        let lambda = lambda_module(&p)?;
        total += lambda.dim();
        all = all.join(&lambda);
        if p.is_odd() {
            odd_total += lambda.dim();
            odd = odd.join(&lambda);
        }
    }
    let peak = peak_algebra(n);
    Ok(total == all.ambient() && all.dim() == total && odd.dim() == odd_total && odd.same_as(&peak))
}

/// The values of c on a family of elements, as rows over Part(n).
fn c_rows(n: usize, elems: &[DescentAlgElement]) -> Vec<Vec<Rational>> {
    let parts = partitions(n);
    elems.iter().map(|e| {
        let f = solomon_c(e);
        parts.iter().map(|p| f.value(p)).collect()
    }).collect()
}

/// ker c restricted to span(elems).
fn kernel_of_c(n: usize, elems: &[DescentAlgElement]) -> Subspace {
    let rows = c_rows(n, elems);
    let mut out = Subspace::zero(1 << n.saturating_sub(1));
    for rel in linear_relations(&rows) {
        let mut v = DescentAlgElement::zero(n);
        for (c, e) in rel.iter().zip(elems) {
            v = v + e.scale(c);
        }
        out.insert(v.xi_vec());
    }
    out
}

/// The two descriptions of Rad P_n.
#[derive(Clone, Debug)]
pub struct Radical {
    pub n: usize,
    /// span{γ_q − γ_p : q ≈ p ⊢_odd n}
    pub by_lie_series: Subspace,
    /// ker c|_{P_n}
    pub by_kernel: Subspace,
}

impl Radical {
    pub fn dim(&self) -> usize {
        self.by_lie_series.dim()
    }

    pub fn descriptions_agree(&self) -> bool {
        self.by_lie_series.same_as(&self.by_kernel)
    }

    /// dim P_n/Rad P_n = |Part_odd(n)|.
    pub fn codimension_matches(&self) -> bool {
        peak_sets(self.n).len() - self.by_kernel.dim() == odd_partitions(self.n).len()
    }
}

pub fn radical(n: usize) -> Result<Radical> {
    check_degree(n)?;
    let series = LieSeries::default();
    let mut diffs = Vec::new();
    for p in odd_partitions(n) {
        let gp = series.gamma_q(p.as_composition());
        for q in p.as_composition().rearrangements() {
            diffs.push(&series.gamma_q(&q) - &gp);
        }
    }
    let basis: Vec<DescentAlgElement> = peak_sets(n).iter().map(pi).collect();
    Ok(Radical { n, by_lie_series: span(n, &diffs), by_kernel: kernel_of_c(n, &basis) })
}

/// Rad D_n = span{Ξ^q − Ξ^{q̇} : q ≈ q̇}.
pub fn descent_radical(n: usize) -> Subspace {
    let diffs: Vec<DescentAlgElement> = compositions(n)
        .iter()
        .map(|q| DescentAlgElement::xi(q) - DescentAlgElement::xi(q.sorted().as_composition()))
        .collect();
    span(n, &diffs)
}

/// Cartan invariants of P_n, rows and columns over odd partitions of n from
/// n down to 1^n.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CartanMatrix {
    pub n: usize,
    pub partitions: Vec<Partition>,
    pub entries: Vec<Vec<usize>>,
}

impl CartanMatrix {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("q\\p");
        for p in &self.partitions {
            out.push(',');
            out.push_str(&p.key());
        }
        out.push('\n');
        for (q, row) in self.partitions.iter().zip(&self.entries) {
            out.push_str(&q.key());
            for c in row {
                out.push_str(&format!(",{c}"));
            }
            out.push('\n');
        }
        out
    }
}

/// c_{qp} = #{r ⊨ n : r ≈ q, LSC(r) ≈ p}.
pub fn cartan_matrix(n: usize) -> Result<CartanMatrix> {
    check_degree(n)?;
    let parts = odd_partitions(n);
    let entries = parts
        .iter()
        .map(|q| {
            let rs = q.as_composition().rearrangements();
            parts.iter().map(|p| rs.iter().filter(|r| r.lsc().sorted() == *p).count()).collect()
        })
        .collect();
    Ok(CartanMatrix { n, partitions: parts, entries })
}

/// c_{qp} as the multiplicity of M^p in Λ^q, which is dim γ_pΛ^q =
/// dim γ_pD_nγ_q, by exact rank.
pub fn cartan_matrix_by_rank(n: usize) -> Result<CartanMatrix> {
    check_degree(n)?;
    let series = LieSeries::default();
    let parts = odd_partitions(n);
    let gammas: Vec<DescentAlgElement> = parts.iter().map(|p| series.gamma_q(p.as_composition())).collect();
    // dims[a][b] = dim γ_a D_n γ_b
    let dims: Vec<Vec<usize>> = gammas
        .iter()
        .map(|ga| {
            let left: Vec<DescentAlgElement> = compositions(n).iter().map(|r| ga.inner(&DescentAlgElement::xi(r))).collect();
            gammas
                .iter()
                .map(|gb| span(n, &left.iter().map(|a| a.inner(gb)).collect::<Vec<_>>()).dim())
                .collect()
        })
        .collect();
    let entries = transpose_usize(&dims);
    Ok(CartanMatrix { n, partitions: parts, entries })
}

fn transpose_usize(m: &[Vec<usize>]) -> Vec<Vec<usize>> {
    (0..m.first().map_or(0, Vec::len)).map(|j| m.iter().map(|row| row[j]).collect()).collect()
}

/// Rad P_n, (Rad P_n)², … up to and including the first zero power.
pub fn radical_powers(n: usize) -> Result<Vec<Subspace>> {
    let rad = radical(n)?.by_lie_series;
    let mut chain = vec![rad.clone()];
    while chain.last().is_some_and(|s| s.dim() > 0) {
        let next = product_space(n, chain.last().expect("nonempty"), &rad);
        chain.push(next);
    }
    Ok(chain)
}

/// The least j with (Rad P_n)^j = 0; 1 when the radical is zero.
pub fn nilpotency_index(n: usize) -> Result<usize> {
    Ok(radical_powers(n)?.len())
}

/// (n−1)/2 for odd n, n/2 for even n.
pub fn expected_nilpotency_index(n: usize) -> usize {
    if n % 2 == 1 { (n - 1) / 2 } else { n / 2 }
}

/// M, RM, R²M, … down to the first zero.
fn loewy_series(n: usize, rad: &Subspace, module: Subspace) -> Vec<Subspace> {
    let mut chain = vec![module];
    while chain.last().is_some_and(|s| s.dim() > 0) {
        let next = product_space(n, rad, chain.last().expect("nonempty"));
        chain.push(next);
    }
    chain
}

fn odd_partition_check(p: &Partition) -> Result<()> {
    if p.is_odd() {
        Ok(())
    } else {
        Err(Error::NotOdd(p.key()))
    }
}

/// Rad^{(j)}_{P_n}Λ^p for j = 0, 1, … until zero.
pub fn peak_loewy_series(p: &Partition) -> Result<Vec<Subspace>> {
    odd_partition_check(p)?;
    let n = p.sum();
    Ok(loewy_series(n, &radical(n)?.by_lie_series, lambda_module(p)?))
}

/// Rad^{(i)}_{D_n}Λ^p for i = 0, 1, … until zero.
pub fn descent_loewy_series(p: &Partition) -> Result<Vec<Subspace>> {
    let n = p.sum();
    Ok(loewy_series(n, &descent_radical(n), lambda_module(p)?))
}

fn term(chain: &[Subspace], i: usize) -> Option<&Subspace> {
    chain.get(i).or(chain.last())
}

/// The P_n-series of Λ^p next to the odd steps of its D_n-series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LoewyComparison {
    pub partition: Partition,
    /// dim Rad^{(j)}_{P_n}Λ^p, j ≥ 1
    pub peak_dims: Vec<usize>,
    /// dim Rad^{(2j−1)}_{D_n}Λ^p, j ≥ 1
    pub descent_odd_dims: Vec<usize>,
    /// Rad^{(j)}_P ⊆ Rad^{(2j−1)}_D for all j
    pub inclusion: bool,
    /// Rad^{(j)}_P = Rad^{(2j−1)}_D for all j
    pub equal: bool,
}

pub fn loewy_comparison(p: &Partition) -> Result<LoewyComparison> {
    let peak = peak_loewy_series(p)?;
    let descent = descent_loewy_series(p)?;
    let steps = peak.len().max(descent.len().div_ceil(2)).max(1);
    let (mut inclusion, mut equal) = (true, true);
    let (mut peak_dims, mut descent_odd_dims) = (Vec::new(), Vec::new());
    for j in 1..=steps {
        let a = term(&peak, j).expect("nonempty chain");
        let b = term(&descent, 2 * j - 1).expect("nonempty chain");
        peak_dims.push(a.dim());
        descent_odd_dims.push(b.dim());
        inclusion &= a.is_subspace_of(b);
        equal &= a.same_as(b);
    }
    Ok(LoewyComparison { partition: p.clone(), peak_dims, descent_odd_dims, inclusion, equal })
}

/// Rad^{(j)}_{P_n}Λ^p ⊆ Rad^{(2j−1)}_{D_n}Λ^p for all j.
pub fn loewy_inclusion_check(p: &Partition) -> Result<bool> {
    Ok(loewy_comparison(p)?.inclusion)
}

/// k.1^{n−k}.
pub fn is_hook(p: &Partition) -> bool {
    p.parts().iter().skip(1).all(|&x| x == 1)
}

/// The Loewy comparison for every odd partition of n that is not a hook.
pub fn loewy_conjecture_report(n: usize) -> Result<Vec<LoewyComparison>> {
    odd_partitions(n).iter().filter(|p| !is_hook(p)).map(loewy_comparison).collect()
}

/// Whether Λ^p ∩ ker c is the only hyperplane of Λ^p closed under left
/// multiplication by Λ^p. Such hyperplanes are the kernels of the joint
/// eigenvectors of the multiplication operators in the γ_q-coordinates; the
/// kernel of c is the hyperplane Σ k_q = 0.
pub fn unique_maximal_submodule_check(p: &Partition) -> Result<bool> {
    check_degree(p.sum())?;
    let series = LieSeries::default();
    let gens = lambda_generators(&series, p);
    let vectors: Vec<Vec<Rational>> = gens.iter().map(|g| g.xi_vec().to_vec()).collect();
    let d = gens.len();
    let mut ops = Vec::with_capacity(d);
    for a in &gens {
        // rows: coordinates of a·γ_q
        let mut m = Vec::with_capacity(d);
        for g in &gens {
            let coords = solve(&vectors, a.inner(g).xi_vec())
                .ok_or_else(|| Error::InvalidIndex(format!("Λ^{p} is not closed under multiplication")))?;
            m.push(coords);
        }
        ops.push(transpose(&m));
    }
    let Some(spaces) = joint_left_eigenspaces(&ops, d) else {
        return Err(Error::InvalidIndex(format!("characteristic polynomial too large for Λ^{p}")));
    };
    let ones = vec![Rational::one(); d];
    Ok(spaces.len() == 1
        && spaces[0].len() == 1
        && Subspace::spanned_by(d, spaces[0].iter().map(Vec::as_slice)).contains(&ones)
        && {
            // the same hyperplane, computed from c
            let kernel = kernel_of_c(p.sum(), &gens);
            kernel.dim() + 1 == d
                && kernel.basis().iter().all(|v| {
                    solve(&vectors, v).is_some_and(|k| k.iter().fold(Rational::zero(), |s, x| s + x).is_zero())
                })
        })
}

/// Whether q has a rearrangement class with only one element.
pub fn is_rigid(q: &Composition) -> bool {
    q.rearrangements().len() == 1
}
