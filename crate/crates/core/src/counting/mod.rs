//! Exact counting without enumeration.
//!
//! Dominating-set counts of paths and cycles by cardinality satisfy
//! `d(n, i) = d(n-1, i-1) + d(n-2, i-1) + d(n-3, i-1)`, and their row sums
//! (the orders of `D_n(P_n)` and `D_n(C_n)`) satisfy the tribonacci
//! recurrence. This module rolls those recurrences forward, expands the
//! matching generating functions, evaluates the root-based closed form and the
//! polynomial formulas for individual entries, and computes product orders.

mod closed_form;
mod gf;
mod products;

pub use closed_form::{closed_d, closed_form_order, CubicClosedForm, PathCountCase};
pub use gf::RationalGF;
pub use products::{corona_order, join_order, ladder_order, ladder_order_from_seeds, ladder_seeds};

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::domination::Enumerator;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// The two families with a counting triangle.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SeqFamily {
    Path,
    Cycle,
}

impl SeqFamily {
    pub fn name(self) -> &'static str {
        match self {
            SeqFamily::Path => "path",
            SeqFamily::Cycle => "cycle",
        }
    }

    /// Seeds of the order sequence at n = 1, 2, 3.
    ///
    /// For cycles the n = 1, 2 terms are sequence seeds only; C_1 and C_2 are
    /// not simple graphs.
    pub fn seeds(self) -> [u64; 3] {
        match self {
            SeqFamily::Path => [1, 3, 5],
            SeqFamily::Cycle => [1, 3, 7],
        }
    }

    /// Smallest n with a real graph behind it.
    pub fn first_graph(self) -> usize {
        match self {
            SeqFamily::Path => 1,
            SeqFamily::Cycle => 3,
        }
    }

    pub fn graph(self, n: usize) -> Result<Graph> {
        match self {
            SeqFamily::Path => Graph::path(n),
            SeqFamily::Cycle => Graph::cycle(n),
        }
    }
}

impl fmt::Display for SeqFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeqFamily {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "path" => Ok(SeqFamily::Path),
            "cycle" => Ok(SeqFamily::Cycle),
            other => Err(format!(
                "unknown sequence family `{other}` (expected path or cycle)"
            )),
        }
    }
}

/// `d(G_n, j)` for a run of n, with the independently computed row sums.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    family: SeqFamily,
    first_n: usize,
    rows: Vec<Vec<BigUint>>,
    row_sums: Vec<BigUint>,
}

impl CountTable {
    pub fn family(&self) -> SeqFamily {
        self.family
    }

    pub fn first_n(&self) -> usize {
        self.first_n
    }

    pub fn last_n(&self) -> usize {
        self.first_n + self.rows.len() - 1
    }

    /// Row `n`, indexed by cardinality `0..=n`.
    pub fn row(&self, n: usize) -> Option<&[BigUint]> {
        n.checked_sub(self.first_n)
            .and_then(|i| self.rows.get(i))
            .map(Vec::as_slice)
    }

    /// `d(G_n, j)`, zero outside the table.
    pub fn entry(&self, n: usize, j: usize) -> BigUint {
        self.row(n)
            .and_then(|r| r.get(j))
            .cloned()
            .unwrap_or_default()
    }

    /// Tribonacci value for `n`, computed independently of the rows.
    pub fn row_sum(&self, n: usize) -> Option<&BigUint> {
        n.checked_sub(self.first_n)
            .and_then(|i| self.row_sums.get(i))
    }

    /// `(n, row)` pairs in increasing n.
    pub fn rows(&self) -> impl Iterator<Item = (usize, &[BigUint])> {
        self.rows
            .iter()
            .enumerate()
            .map(move |(i, r)| (self.first_n + i, r.as_slice()))
    }

    /// Whether each row adds up to its tribonacci value.
    pub fn sums_consistent(&self) -> bool {
        self.rows
            .iter()
            .zip(&self.row_sums)
            .all(|(r, s)| r.iter().sum::<BigUint>() == *s)
    }
}

fn to_big(row: &[u64]) -> Vec<BigUint> {
    row.iter().map(|&c| BigUint::from(c)).collect()
}

/// Rolls the three-term triangle recurrence forward from `base` rows.
fn roll_triangle(base: Vec<Vec<BigUint>>, first_n: usize, n_max: usize) -> Vec<Vec<BigUint>> {
    let mut rows = base;
    rows.truncate(n_max + 1 - first_n);
    for n in first_n + rows.len()..=n_max {
        let len = rows.len();
        let row: Vec<BigUint> = (0..=n)
            .map(|i| {
                if i == 0 {
                    return BigUint::zero();
                }
                rows[len - 3..]
                    .iter()
                    .map(|r| r.get(i - 1).cloned().unwrap_or_default())
                    .sum()
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// `d(P_n, j)` for `1 <= n <= n_max`.
pub fn path_triangle(n_max: usize) -> Result<CountTable> {
    if n_max == 0 {
        return Err(Error::InvalidSize("path triangle needs n_max >= 1".into()));
    }
    // P_1, P_2, P_3 by hand: {1}; {1},{2},{1,2}; {2},{1,2},{1,3},{2,3},{1,2,3}
    let base = vec![to_big(&[0, 1]), to_big(&[0, 2, 1]), to_big(&[0, 1, 3, 1])];
    let rows = roll_triangle(base, 1, n_max);
    let row_sums = order_sequence(SeqFamily::Path, n_max)?;
    Ok(CountTable {
        family: SeqFamily::Path,
        first_n: 1,
        rows,
        row_sums,
    })
}

/// `d(C_n, j)` for `3 <= n <= n_max`. The C_3, C_4, C_5 rows are enumerated.
pub fn cycle_triangle(n_max: usize) -> Result<CountTable> {
    if n_max < 3 {
        return Err(Error::InvalidSize("cycle triangle needs n_max >= 3".into()));
    }
    let enumerator = Enumerator::default();
    let base = (3..=5)
        .map(|n| enumerator.count_by_cardinality(&Graph::cycle(n)?))
        .collect::<Result<Vec<_>>>()?;
    let rows = roll_triangle(base, 3, n_max);
    let row_sums = order_sequence(SeqFamily::Cycle, n_max)?.split_off(2);
    Ok(CountTable {
        family: SeqFamily::Cycle,
        first_n: 3,
        rows,
        row_sums,
    })
}

pub fn triangle(family: SeqFamily, n_max: usize) -> Result<CountTable> {
    match family {
        SeqFamily::Path => path_triangle(n_max),
        SeqFamily::Cycle => cycle_triangle(n_max),
    }
}

/// Orders of `D_n(G_n)` for `n = 1..=n_max`: tribonacci from the family seeds.
pub fn order_sequence(family: SeqFamily, n_max: usize) -> Result<Vec<BigUint>> {
    if n_max == 0 {
        return Err(Error::InvalidSize("order sequence needs n_max >= 1".into()));
    }
    let mut seq: Vec<BigUint> = family.seeds().iter().map(|&s| BigUint::from(s)).collect();
    seq.truncate(n_max);
    while seq.len() < n_max {
        let l = seq.len();
        let next = &seq[l - 1] + &seq[l - 2] + &seq[l - 3];
        seq.push(next);
    }
    Ok(seq)
}
