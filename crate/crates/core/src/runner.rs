//! `d`-runner matrices of partitions, β-sets and combined pairs.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::abacus::{beta_set, runner, BetaSet};
use crate::classes::classify_beta_set;
use crate::error::{Error, Result};
use crate::params::Params;
use crate::partition::Partition;

/// A `(d-1) × e` matrix of counts. Row `x` (for `1 <= x <= d-1`) is stored at
/// index `x - 1`; columns are runners `0..e`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawMatrix")]
pub struct RunnerMatrix {
    d: i64,
    e: i64,
    rows: Vec<Vec<u64>>,
}

#[derive(Deserialize)]
struct RawMatrix {
    d: i64,
    e: i64,
    rows: Vec<Vec<u64>>,
}

impl TryFrom<RawMatrix> for RunnerMatrix {
    type Error = Error;

    fn try_from(raw: RawMatrix) -> Result<Self> {
        RunnerMatrix::from_rows(Params::new(raw.d, raw.e)?, raw.rows)
    }
}

impl RunnerMatrix {
    pub fn zero(params: Params) -> Self {
        let (d, e) = (params.d(), params.e());
        RunnerMatrix {
            d,
            e,
            rows: vec![vec![0; e as usize]; (d - 1) as usize],
        }
    }

    pub fn from_rows(params: Params, rows: Vec<Vec<u64>>) -> Result<Self> {
        let (d, e) = (params.d(), params.e());
        let (er, ec) = ((d - 1) as usize, e as usize);
        let cols = rows.first().map_or(0, Vec::len);
        if rows.len() != er || rows.iter().any(|r| r.len() != ec) {
            return Err(Error::MatrixShape {
                rows: rows.len(),
                cols,
                expected_rows: er,
                expected_cols: ec,
            });
        }
        Ok(RunnerMatrix { d, e, rows })
    }

    pub fn params(&self) -> Params {
        Params::new(self.d, self.e).expect("validated on construction")
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn e(&self) -> i64 {
        self.e
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    /// Entry at row `x` (1-based) and runner `y`.
    pub fn get(&self, x: i64, y: i64) -> u64 {
        self.rows[(x - 1) as usize][y as usize]
    }

    fn bump(&mut self, x: i64, y: i64) {
        self.rows[(x - 1) as usize][y as usize] += 1;
    }

    pub fn total(&self) -> u64 {
        self.rows.iter().flatten().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total() == 0
    }

    pub fn row_has_zero(&self, x: i64) -> bool {
        self.rows[(x - 1) as usize].contains(&0)
    }

    /// Every row contains a zero entry.
    pub fn every_row_has_zero(&self) -> bool {
        self.rows.iter().all(|r| r.contains(&0))
    }

    /// Some row consists of positive entries only.
    pub fn has_positive_row(&self) -> bool {
        self.rows.iter().any(|r| r.iter().all(|&v| v > 0))
    }

    /// Column `y` of the result is column `(y + k) mod e` of `self`.
    pub fn rotated(&self, k: i64) -> RunnerMatrix {
        let e = self.e;
        let rows = self
            .rows
            .iter()
            .map(|r| (0..e).map(|y| r[(y + k).rem_euclid(e) as usize]).collect())
            .collect();
        RunnerMatrix { d: self.d, e, rows }
    }
}

impl fmt::Display for RunnerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, row) in self.rows.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (c, v) in row.iter().enumerate() {
                if c > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for RunnerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R[d={}, e={}]{}", self.d, self.e, self)
    }
}

/// Counts parts `λ_i ≢ 0 (mod d)` by `x = λ_i mod d` and `y = (λ_i - i) mod e`.
pub fn runner_matrix_of_partition(lambda: &Partition, params: Params) -> RunnerMatrix {
    let (d, e) = (params.d(), params.e());
    let mut m = RunnerMatrix::zero(params);
    for (k, &part) in lambda.parts().iter().enumerate() {
        let part = part as i64;
        let x = part % d;
        if x != 0 {
            m.bump(x, runner(part - (k as i64 + 1), e));
        }
    }
    m
}

/// Counts beads by `d`-emptiness and runner.
pub fn runner_matrix_of_beta_set(b: &BetaSet, params: Params) -> RunnerMatrix {
    let (d, e) = (params.d(), params.e());
    let mut m = RunnerMatrix::zero(params);
    for v in b.beads_desc() {
        let x = b.emp(v) % d;
        if x != 0 {
            m.bump(x, runner(v, e));
        }
    }
    m
}

/// A β-set `B` together with a finite set `C`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CombinedPair {
    pub b: BetaSet,
    /// Ascending, without repeats.
    pub c: Vec<i64>,
}

impl CombinedPair {
    /// Builds a pair, sorting `c`. Does not check `max B <= min C`.
    pub fn new(b: BetaSet, c: impl IntoIterator<Item = i64>) -> Self {
        let mut c: Vec<i64> = c.into_iter().collect();
        c.sort_unstable();
        c.dedup();
        CombinedPair { b, c }
    }

    /// Checks `max B <= min C`.
    pub fn check_order(&self) -> Result<()> {
        match self.c.first() {
            Some(&min_c) if self.b.max_bead() > min_c => Err(Error::PairOrder {
                max_b: self.b.max_bead(),
                min_c,
            }),
            _ => Ok(()),
        }
    }

    fn bd_c(&self, u: i64, v: i64) -> i64 {
        if u > v {
            return 0;
        }
        let lo = self.c.partition_point(|&x| x < u);
        let hi = self.c.partition_point(|&x| x <= v);
        (hi - lo) as i64
    }

    /// `emp_B(u, v) - bd_C(u, v)`.
    pub fn emp_range(&self, u: i64, v: i64) -> i64 {
        self.b.emp_range_unchecked(u, v) - self.bd_c(u, v)
    }

    /// Limit of `emp_range(u, v)` as `u` goes to minus infinity.
    pub fn emp(&self, v: i64) -> i64 {
        self.b.emp(v) - self.c.partition_point(|&x| x <= v) as i64
    }

    pub fn is_empty_space(&self, f: i64) -> bool {
        !self.b.contains(f) && self.c.binary_search(&f).is_err()
    }

    /// Whether the empty space `f` of `B ∪ C` is admissible: it is not, only
    /// when `max B` lies in `C` and `f` is the unique empty space of `B` of
    /// the form `max B - ke` with `k >= 0`.
    pub fn admissible(&self, f: i64, e: i64) -> Result<bool> {
        if !self.is_empty_space(f) {
            return Err(Error::NotAnEmptySpace(f));
        }
        Ok(self.non_admissible(e) != Some(f))
    }

    /// The non-admissible empty space of `B ∪ C`, if there is one.
    pub fn non_admissible(&self, e: i64) -> Option<i64> {
        let b0 = self.b.max_bead();
        if self.c.binary_search(&b0).is_err() {
            return None;
        }
        let floor = self.b.least_empty();
        let mut found = None;
        let mut v = b0 - e;
        while v >= floor {
            if !self.b.contains(v) {
                if found.is_some() {
                    return None;
                }
                found = Some(v);
            }
            v -= e;
        }
        found.filter(|&f| self.is_empty_space(f))
    }
}

/// Counts `B` beads by `d`-emptiness and `C` beads by combined emptiness.
pub fn combined_runner_matrix(pair: &CombinedPair, params: Params) -> Result<RunnerMatrix> {
    pair.check_order()?;
    let (d, e) = (params.d(), params.e());
    let mut m = runner_matrix_of_beta_set(&pair.b, params);
    for &c in &pair.c {
        let x = pair.emp(c).rem_euclid(d);
        if x != 0 {
            m.bump(x, runner(c, e));
        }
    }
    Ok(m)
}

/// Checks the three conditions for a `d`-combined pair. Multipliers `a` are
/// scanned while `c - ae` stays at or above `scan_floor`; below the least
/// empty space of `B` nothing is empty, so any lower floor gives the same
/// answer.
pub fn is_d_combined_pair_within(pair: &CombinedPair, params: Params, scan_floor: i64) -> bool {
    if pair.check_order().is_err() {
        return false;
    }
    if !classify_beta_set(&pair.b, params).balanced {
        return false;
    }
    let (d, e) = (params.d(), params.e());
    let bad = pair.non_admissible(e);
    for &c in &pair.c {
        let mut f = c - e;
        while f >= scan_floor {
            if pair.is_empty_space(f) && bad != Some(f) && pair.emp_range(f, c) % d != 0 {
                return false;
            }
            f -= e;
        }
    }
    true
}

pub fn is_d_combined_pair(pair: &CombinedPair, params: Params) -> bool {
    is_d_combined_pair_within(pair, params, pair.b.least_empty())
}

/// `R_d(B_s(λ))`, the matrix of the partition with columns rotated by `s`.
pub fn runner_matrix_at_shift(lambda: &Partition, params: Params, s: i64) -> RunnerMatrix {
    runner_matrix_of_beta_set(&beta_set(lambda, s), params)
}
