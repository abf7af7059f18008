//! Swap algorithms A1 and A2, the greedy construction of the dominance-maximal
//! partition with a given core and runner matrix, and the families `E_R(γ)`.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::abacus::{beta_set, e_core_weight, partition_of, runner, BetaSet, SwapKind};
use crate::classes::classify_partition;
use crate::error::{Error, Result};
use crate::oracle::enumerate_partitions;
use crate::params::Params;
use crate::partition::{OrderRelation, Partition};
use crate::runner::{runner_matrix_of_beta_set, runner_matrix_of_partition, RunnerMatrix};

pub const DEFAULT_SWAP_CAP: usize = 1_000_000;

/// One swap of positions `lo < hi` performed at step `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Swap {
    pub i: i64,
    pub lo: i64,
    pub hi: i64,
    pub kind: SwapKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwapLog {
    pub swaps: Vec<Swap>,
    /// Step index of the final swap.
    pub terminal_index: i64,
    /// True when the run was the single swap of `b - ae` and `b`.
    pub short_circuit: bool,
}

impl SwapLog {
    pub fn ups(&self) -> usize {
        self.count(SwapKind::Up)
    }

    pub fn downs(&self) -> usize {
        self.count(SwapKind::Down)
    }

    fn count(&self, kind: SwapKind) -> usize {
        self.swaps.iter().filter(|s| s.kind == kind).count()
    }

    /// Step indices of the swaps of the given kind.
    pub fn indices(&self, kind: SwapKind) -> Vec<i64> {
        self.swaps
            .iter()
            .filter(|s| s.kind == kind)
            .map(|s| s.i)
            .collect()
    }
}

fn check_start(set: &BetaSet, b: i64, a: i64, e: i64) -> Result<()> {
    if a <= 0 {
        return Err(Error::NonPositiveMultiplier(a));
    }
    if !set.contains(b) {
        return Err(Error::NotABead(b));
    }
    if set.contains(b - a * e) {
        return Err(Error::NotAnEmptySpace(b - a * e));
    }
    Ok(())
}

/// Runs swaps `(pos(i) - ae, pos(i))` for `i = 0, 1, …` until the up and down
/// counts agree modulo `d`.
fn swap_loop(
    set: &BetaSet,
    a: i64,
    params: Params,
    cap: usize,
    pos: impl Fn(i64) -> i64,
) -> Result<(BetaSet, SwapLog)> {
    let (d, e) = (params.d(), params.e());
    let ae = a * e;
    let mut out = set.clone();
    let mut swaps = Vec::new();
    let mut balance = 0i64;
    let mut i = 0;
    loop {
        if swaps.len() >= cap {
            return Err(Error::SwapCap(cap));
        }
        let hi = pos(i);
        let lo = hi - ae;
        if lo < out.floor() {
            out = out.with_floor_at_most(lo - ae);
        }
        let kind = out.swap_positions(lo, hi);
        match kind {
            SwapKind::Up => balance += 1,
            SwapKind::Down => balance -= 1,
            SwapKind::Neutral => {}
        }
        swaps.push(Swap { i, lo, hi, kind });
        if balance.rem_euclid(d) == 0 {
            break;
        }
        i += 1;
    }
    Ok((
        out,
        SwapLog {
            swaps,
            terminal_index: i,
            short_circuit: false,
        },
    ))
}

pub fn a1(set: &BetaSet, b: i64, a: i64, params: Params) -> Result<(BetaSet, SwapLog)> {
    a1_with_cap(set, b, a, params, DEFAULT_SWAP_CAP)
}

/// Algorithm A1 at bead `b` and empty space `b - ae`.
pub fn a1_with_cap(
    set: &BetaSet,
    b: i64,
    a: i64,
    params: Params,
    cap: usize,
) -> Result<(BetaSet, SwapLog)> {
    let e = params.e();
    check_start(set, b, a, e)?;
    let ae = a * e;
    if set.bd_unchecked(b - ae + 1, b - 1) == 0 {
        let mut out = set.clone();
        let kind = out.swap_positions(b - ae, b);
        let log = SwapLog {
            swaps: vec![Swap {
                i: 0,
                lo: b - ae,
                hi: b,
                kind,
            }],
            terminal_index: 0,
            short_circuit: true,
        };
        return Ok((out, log));
    }
    swap_loop(set, a, params, cap, |i| b + i)
}

pub fn a2(set: &BetaSet, b: i64, a: i64, params: Params) -> Result<(BetaSet, SwapLog)> {
    a2_with_cap(set, b, a, params, DEFAULT_SWAP_CAP)
}

/// Algorithm A2 at bead `b` and empty space `b - ae`. Requires a zero in every
/// row of the runner matrix.
pub fn a2_with_cap(
    set: &BetaSet,
    b: i64,
    a: i64,
    params: Params,
    cap: usize,
) -> Result<(BetaSet, SwapLog)> {
    check_start(set, b, a, params.e())?;
    if !runner_matrix_of_beta_set(set, params).every_row_has_zero() {
        return Err(Error::ZeroRowGuard);
    }
    swap_loop(set, a, params, cap, |i| b - i)
}

/// Replays a swap log one runner of the abacus with `ae` runners at a time,
/// keeping the original order within each runner.
pub fn replay_runner_wise(set: &BetaSet, log: &SwapLog, a: i64, e: i64) -> BetaSet {
    let ae = a * e;
    let mut out = set.clone();
    let low = log.swaps.iter().map(|s| s.lo).min().unwrap_or(out.floor());
    out = out.with_floor_at_most(low);
    for r in 0..ae {
        for s in log.swaps.iter().filter(|s| runner(s.hi, ae) == r) {
            out.swap_positions(s.lo, s.hi);
        }
    }
    out
}

/// A1 as a single permutation of three intervals, given the terminal step `t`
/// of a non-short-circuit run.
pub fn a1_by_interval_permutation(set: &BetaSet, b: i64, a: i64, e: i64, t: i64) -> BetaSet {
    let ae = a * e;
    let r = t.rem_euclid(ae);
    let psi = |v: i64| {
        if (b - ae..=b + r - ae).contains(&v) {
            v + ae + t - r
        } else if v > b + r - ae && v < b {
            v + t - r
        } else if (b..=b + t).contains(&v) {
            v - ae
        } else {
            v
        }
    };
    permute(set, b - ae, psi)
}

/// A2 as a single permutation of three intervals, given the terminal step `t`.
pub fn a2_by_interval_permutation(set: &BetaSet, b: i64, a: i64, e: i64, t: i64) -> BetaSet {
    let ae = a * e;
    let r = t.rem_euclid(ae);
    let psi = |v: i64| {
        if (b - r..=b).contains(&v) {
            v - t - ae + r
        } else if v > b - ae && v < b - r {
            v - t + r
        } else if (b - t - ae..=b - ae).contains(&v) {
            v + ae
        } else {
            v
        }
    };
    permute(set, b - t - ae, psi)
}

fn permute(set: &BetaSet, lowest_moved: i64, psi: impl Fn(i64) -> i64) -> BetaSet {
    let w = set.with_floor_at_most(lowest_moved);
    let moved: Vec<i64> = w.explicit().iter().map(|&v| psi(v)).collect();
    BetaSet::new(w.floor(), moved).expect("the permutation fixes everything below the window")
}

fn require_core(gamma: &Partition, e: i64) -> Result<()> {
    let (_, w) = e_core_weight(&beta_set(gamma, 0), e)?;
    if w == 0 {
        Ok(())
    } else {
        Err(Error::NotECore {
            partition: gamma.to_string(),
            e,
        })
    }
}

/// The greedy construction: the unique `d`-shift skewed partition with core `γ`
/// and matrix `R`, which is the dominance maximum of `E_R(γ)`.
pub fn greedy_max(gamma: &Partition, matrix: &RunnerMatrix) -> Result<Partition> {
    let (d, e) = (matrix.d(), matrix.e());
    require_core(gamma, e)?;
    let base = beta_set(gamma, 0);
    let total = matrix.total() as i64;
    let l = base.least_empty() - e * total;
    let w = base.with_floor_at_most(l);

    let mut remaining = vec![vec![0i64; e as usize]; d as usize];
    for y in 0..e {
        let n_y = w.explicit().iter().filter(|&&v| runner(v, e) == y).count() as i64;
        let used: i64 = (1..d).map(|x| matrix.get(x, y) as i64).sum();
        remaining[0][y as usize] = n_y - used;
        for x in 1..d {
            remaining[x as usize][y as usize] = matrix.get(x, y) as i64;
        }
    }
    let mut left: i64 = remaining.iter().flatten().sum();
    let mut beads = Vec::new();
    let mut empties = 0i64;
    let mut i = l;
    while left > 0 {
        if i - l > DEFAULT_SWAP_CAP as i64 {
            return Err(Error::SwapCap(DEFAULT_SWAP_CAP));
        }
        let (x, y) = (empties.rem_euclid(d) as usize, runner(i, e) as usize);
        if remaining[x][y] > 0 {
            remaining[x][y] -= 1;
            left -= 1;
            beads.push(i);
        } else {
            empties += 1;
        }
        i += 1;
    }
    Ok(partition_of(&BetaSet::new(l, beads)?).0)
}

/// The members of `E_R(γ)` and its extremal elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyResult {
    pub gamma: Partition,
    #[serde(rename = "R")]
    pub matrix: RunnerMatrix,
    pub w: usize,
    /// Descending lexicographic order.
    pub members: Vec<Partition>,
    pub max_elem: Partition,
    pub min_elem: Option<Partition>,
}

/// `e`-core and `e`-weight of a partition.
pub fn core_and_weight(lambda: &Partition, e: i64) -> Result<(Partition, usize)> {
    e_core_weight(&beta_set(lambda, 0), e)
}

/// The element dominating (or dominated by) every other member, if any.
pub fn dominance_extreme(members: &[Partition], want: OrderRelation) -> Option<Partition> {
    members
        .iter()
        .find(|m| {
            members
                .iter()
                .all(|o| o == *m || m.dominance(o).ok() == Some(want))
        })
        .cloned()
}

/// Finds the least weight `w` with a member and enumerates `E_R(γ)`.
pub fn min_weight_and_family(gamma: &Partition, matrix: &RunnerMatrix) -> Result<FamilyResult> {
    let params = matrix.params();
    let e = params.e();
    let greedy = greedy_max(gamma, matrix)?;
    let (_, w_greedy) = core_and_weight(&greedy, e)?;
    for w in 0..=w_greedy {
        let n = gamma.size() + w * e as usize;
        let mut members: Vec<Partition> = enumerate_partitions(n)
            .par_bridge()
            .filter(|lambda| {
                runner_matrix_of_partition(lambda, params) == *matrix
                    && core_and_weight(lambda, e)
                        .map(|(c, _)| c == *gamma)
                        .unwrap_or(false)
            })
            .collect();
        if members.is_empty() {
            continue;
        }
        members.sort_by(|x, y| y.parts().cmp(x.parts()));
        let max_elem = dominance_extreme(&members, OrderRelation::Greater).ok_or_else(|| {
            Error::Invariant(format!("no dominance maximum in family of {gamma}"))
        })?;
        let min_elem = if matrix.every_row_has_zero() {
            Some(
                dominance_extreme(&members, OrderRelation::Less).ok_or_else(|| {
                    Error::Invariant(format!("no dominance minimum in family of {gamma}"))
                })?,
            )
        } else {
            None
        };
        return Ok(FamilyResult {
            gamma: gamma.clone(),
            matrix: matrix.clone(),
            w,
            members,
            max_elem,
            min_elem,
        });
    }
    Err(Error::Invariant(format!(
        "greedy partition {greedy} did not appear in its own family"
    )))
}

/// How `maximize` and `minimize` pick the next witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessOrder {
    /// Beads in descending order, then `a` ascending.
    Canonical,
    /// A seeded random witness at every step.
    Seeded(u64),
}

/// All `(b, a)` with `b` a bead, `b - ae` empty and `d | emp(b - ae + offset, b)`.
fn witnesses(set: &BetaSet, params: Params, offset: i64) -> Vec<(i64, i64)> {
    let (d, e) = (params.d(), params.e());
    let n = set.normalized();
    let mut out = Vec::new();
    for b in n.beads_desc() {
        let mut a = 1;
        while b - a * e >= n.floor() {
            let f = b - a * e;
            if !n.contains(f) && n.emp_range_unchecked(f + offset, b) % d == 0 {
                out.push((b, a));
            }
            a += 1;
        }
    }
    out
}

type Step = fn(&BetaSet, i64, i64, Params) -> Result<(BetaSet, SwapLog)>;

fn improve(
    lambda: &Partition,
    params: Params,
    order: WitnessOrder,
    offset: i64,
    step: Step,
) -> Result<Partition> {
    let mut rng = match order {
        WitnessOrder::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        WitnessOrder::Canonical => None,
    };
    let mut set = beta_set(lambda, 0);
    for _ in 0..DEFAULT_SWAP_CAP {
        let found = witnesses(&set, params, offset);
        let pick = match rng.as_mut() {
            Some(r) => found.choose(r).copied(),
            None => found.first().copied(),
        };
        let Some((b, a)) = pick else {
            return Ok(partition_of(&set).0);
        };
        set = step(&set, b, a, params)?.0;
    }
    Err(Error::SwapCap(DEFAULT_SWAP_CAP))
}

/// Applies A1 until the set is `d`-shift skewed.
pub fn maximize(lambda: &Partition, params: Params) -> Result<Partition> {
    maximize_with(lambda, params, WitnessOrder::Canonical)
}

pub fn maximize_with(lambda: &Partition, params: Params, order: WitnessOrder) -> Result<Partition> {
    improve(lambda, params, order, 0, a1)
}

/// Applies A2 until the set is `d`-skewed.
pub fn minimize(lambda: &Partition, params: Params) -> Result<Partition> {
    minimize_with(lambda, params, WitnessOrder::Canonical)
}

pub fn minimize_with(lambda: &Partition, params: Params, order: WitnessOrder) -> Result<Partition> {
    if !runner_matrix_of_partition(lambda, params).every_row_has_zero() {
        return Err(Error::ZeroRowGuard);
    }
    improve(lambda, params, order, 1, a2)
}

/// Confirms that no `d`-skewed partition of size at most `bound` has matrix `R`.
pub fn no_skewed_exists(matrix: &RunnerMatrix, bound: usize) -> Result<bool> {
    if !matrix.has_positive_row() {
        return Err(Error::NoPositiveRow);
    }
    let params = matrix.params();
    let found = (0..=bound).into_par_iter().any(|n| {
        enumerate_partitions(n).any(|lambda| {
            runner_matrix_of_partition(&lambda, params) == *matrix
                && classify_partition(&lambda, params).skewed
        })
    });
    Ok(!found)
}
