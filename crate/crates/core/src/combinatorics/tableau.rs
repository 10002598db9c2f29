use serde::Serialize;

use super::{partitions, SubsetOfRail};
use crate::error::{check_degree, Result};

/// A standard Young tableau; `rows[0]` is the first (longest) row.
///
/// "Above" refers to rows further from the first row, so k + 1 stands
/// strictly above k when its row index is larger.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    fn row_of(&self, k: usize) -> usize {
        self.rows.iter().position(|r| r.contains(&k)).expect("entry present")
    }

    /// Entries k with k + 1 strictly above k.
    pub fn descent_set(&self) -> SubsetOfRail {
        let n = self.size();
        let d: Vec<usize> = (1..n).filter(|&k| self.row_of(k + 1) > self.row_of(k)).collect();
        SubsetOfRail::new(n, &d).expect("descents lie in [n-1]")
    }

    /// k ∈ {2, …, n−1} with k + 1 strictly above k while k is not strictly above k − 1.
    pub fn peaks(&self) -> SubsetOfRail {
        self.descent_set().peaks_of_descents()
    }

    pub fn odd_column_count(&self) -> usize {
        let width = self.rows.first().map_or(0, Vec::len);
        (0..width).filter(|&j| self.rows.iter().filter(|r| r.len() > j).count() % 2 == 1).count()
    }
}

/// All standard tableaux with n cells.
pub fn tableaux(n: usize) -> Result<Vec<StandardTableau>> {
    check_degree(n)?;
    let mut out = Vec::new();
    for shape in partitions(n) {
        let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|_| Vec::new()).collect();
        fill(shape.parts(), 1, n, &mut rows, &mut out);
    }
    Ok(out)
}

fn fill(shape: &[usize], k: usize, n: usize, rows: &mut Vec<Vec<usize>>, out: &mut Vec<StandardTableau>) {
    if k > n {
        out.push(StandardTableau { rows: rows.clone() });
        return;
    }
    for i in 0..shape.len() {
        let len = rows[i].len();
        let fits = len < shape[i] && (i == 0 || rows[i - 1].len() > len);
        if fits {
            rows[i].push(k);
            fill(shape, k + 1, n, rows, out);
            rows[i].pop();
        }
    }
}
