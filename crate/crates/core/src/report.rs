//! The JSON summary report.

use serde_json::{json, Map, Value};

use crate::combinatorics::{fibonacci, odd_partitions};
use crate::error::Result;
use crate::lie_idempotents::cyclic_characters;
use crate::structure_theory::{cartan_matrix, loewy_conjecture_report, nilpotency_index, radical_powers};

/// Largest degree for Cartan matrices in the report.
pub const CARTAN_MAX: usize = 7;
/// Largest degree for radical chains and nilpotency indices.
pub const RADICAL_MAX: usize = 8;
/// Largest degree for K̃_n and the Loewy comparison.
pub const CONJECTURE_MAX: usize = 7;

/// dim K̃_n against (n+1)/2 for odd n.
pub fn k_tilde_dimensions(n_max: usize) -> Result<Vec<(usize, usize, usize)>> {
    (1..=n_max.min(CONJECTURE_MAX))
        .filter(|n| n % 2 == 1)
        .map(|n| cyclic_characters(n).map(|c| (n, c.dim, c.conjectured_dim)))
        .collect()
}

pub fn loewy_conjecture(n_max: usize) -> Result<Value> {
    let mut out = Map::new();
    for n in 5..=n_max.min(CONJECTURE_MAX) {
        let rows: Vec<Value> = loewy_conjecture_report(n)?
            .into_iter()
            .map(|c| {
                json!({
                    "partition": c.partition.key(),
                    "peak_radical_dims": c.peak_dims,
                    "descent_odd_radical_dims": c.descent_odd_dims,
                    "equal": c.equal,
                })
            })
            .collect();
        out.insert(n.to_string(), Value::Array(rows));
    }
    Ok(Value::Object(out))
}

pub fn report(n_max: usize) -> Result<Value> {
    let mut root = Map::new();
    root.insert("n_max".into(), json!(n_max));
    root.insert("fibonacci".into(), json!((1..=n_max).map(fibonacci).collect::<Vec<_>>()));
    let mut dims = Map::new();
    for n in 1..=n_max {
        dims.insert(
            n.to_string(),
            json!({
                "descent_algebra": 1u64 << (n - 1),
                "peak_algebra": fibonacci(n),
                "odd_partitions": odd_partitions(n).len(),
            }),
        );
    }
    root.insert("dimensions".into(), Value::Object(dims));
    for n in 1..=n_max.min(CARTAN_MAX) {
        root.insert(format!("cartan-{n}"), json!(cartan_matrix(n)?.entries));
    }
    let (mut nil, mut chains) = (Map::new(), Map::new());
    for n in 1..=n_max.min(RADICAL_MAX) {
        let chain: Vec<usize> = radical_powers(n)?.iter().map(|s| s.dim()).collect();
        chains.insert(n.to_string(), json!(chain));
        nil.insert(n.to_string(), json!(nilpotency_index(n)?));
    }
    root.insert("nilpotency".into(), Value::Object(nil));
    root.insert("radical_chain_dims".into(), Value::Object(chains));
    let mut k = Map::new();
    for (n, dim, conj) in k_tilde_dimensions(n_max)? {
        k.insert(n.to_string(), json!({"dim": dim, "conjectured": conj, "matches": dim == conj}));
    }
    root.insert("k_tilde_dims".into(), Value::Object(k.clone()));
    root.insert("conjectures".into(), json!({"k_tilde_dimension": k, "loewy_series": loewy_conjecture(n_max)?}));
    Ok(Value::Object(root))
}
