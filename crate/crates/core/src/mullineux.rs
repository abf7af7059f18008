//! Leading beads, the `Ms_e` step, the Abacus Mullineux Algorithm and Xu's
//! recursion through the `J` map.

use serde::{Deserialize, Serialize};

use crate::abacus::{beta_set, partition_of, BetaSet};
use crate::error::{Error, Result};
use crate::params::{check_e, Params};
use crate::partition::Partition;
use crate::rim::j_map;
use crate::runner::{combined_runner_matrix, is_d_combined_pair, CombinedPair, RunnerMatrix};

/// The chain `b_0 > b_1 > …` where `b_0 = max B` and `b_{i+1}` is the greatest
/// bead `<= b_i - e`. The stored prefix runs one step past the stable index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeadingBeads {
    pub beads: Vec<i64>,
    pub stable_index: usize,
    pub hat: i64,
}

impl LeadingBeads {
    /// `b_i` for any `i`, extending the periodic tail.
    pub fn bead(&self, i: usize, e: i64) -> i64 {
        match self.beads.get(i) {
            Some(&b) => b,
            None => self.hat - i as i64 * e,
        }
    }
}

pub fn leading_beads(b: &BetaSet, e: i64) -> Result<LeadingBeads> {
    let e = check_e(e)?;
    let n = b.normalized();
    let floor = n.floor();
    let mut beads = vec![n.max_bead()];
    loop {
        let last = *beads.last().expect("nonempty");
        let mut next = last - e;
        while !n.contains(next) {
            next -= 1;
        }
        beads.push(next);
        if last - e < floor {
            break;
        }
    }
    let values: Vec<i64> = beads
        .iter()
        .enumerate()
        .map(|(i, &v)| v + i as i64 * e)
        .collect();
    let tail = *values.last().expect("nonempty");
    let stable_index = values
        .iter()
        .position(|&v| v == tail)
        .expect("tail present");
    Ok(LeadingBeads {
        beads,
        stable_index,
        hat: tail,
    })
}

/// `Ms_e(B)` and `ms_e(B)`: every leading bead `b_i` moves to `b_i - e`,
/// which removes `b_z` and leaves the rest of the tail in place.
pub fn ms_step(b: &BetaSet, e: i64) -> Result<(BetaSet, i64)> {
    let lead = leading_beads(b, e)?;
    let z = lead.stable_index;
    let mut out = b.with_floor_at_most(lead.beads[z]);
    for &v in &lead.beads[..=z] {
        out.remove(v);
    }
    for &v in &lead.beads[..z] {
        out.insert(v - e);
    }
    Ok((out, lead.hat))
}

#[allow(non_snake_case)]
pub fn Ms(b: &BetaSet, e: i64) -> Result<BetaSet> {
    Ok(ms_step(b, e)?.0)
}

pub fn ms(b: &BetaSet, e: i64) -> Result<i64> {
    Ok(leading_beads(b, e)?.hat)
}

/// The partition of `Ms_e(B) ∪ {b_z}`, which is `λ` with its proper `e`-rim
/// removed.
pub fn proper_rim_removal_via_abacus(b: &BetaSet, e: i64) -> Result<Partition> {
    let lead = leading_beads(b, e)?;
    let (next, _) = ms_step(b, e)?;
    let mut with_bz = next;
    with_bz.insert(lead.beads[lead.stable_index]);
    Ok(partition_of(&with_bz).0)
}

fn require_regular(lambda: &Partition, e: i64) -> Result<()> {
    let e = check_e(e)?;
    if lambda.is_e_regular(e)? {
        Ok(())
    } else {
        Err(Error::NotERegular {
            partition: lambda.to_string(),
            e,
        })
    }
}

/// One state `(S, T)` of the algorithm.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmaState {
    pub s: BetaSet,
    /// Emitted beads, in emission order (strictly decreasing).
    pub t: Vec<i64>,
    /// Present when a `d` was supplied.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub combined_pair: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub combined_matrix: Option<RunnerMatrix>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmaTrace {
    pub e: i64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub d: Option<i64>,
    pub input: Partition,
    pub states: Vec<AmaState>,
    pub emitted: Vec<i64>,
    pub result: Partition,
}

impl AmaTrace {
    /// Every state is a `d`-combined pair and the combined matrix never changes.
    /// Vacuously true when no `d` was given.
    pub fn pairs_consistent(&self) -> bool {
        let first = self.states.first().and_then(|s| s.combined_matrix.clone());
        self.states
            .iter()
            .all(|s| s.combined_pair.unwrap_or(true) && s.combined_matrix.clone() == first)
    }
}

fn run_ama(lambda: &Partition, e: i64, params: Option<Params>) -> Result<AmaTrace> {
    require_regular(lambda, e)?;
    let mut s = beta_set(lambda, 0);
    let mut t: Vec<i64> = Vec::new();
    let mut states = Vec::new();
    let snapshot = |s: &BetaSet, t: &[i64]| -> Result<AmaState> {
        let (combined_pair, combined_matrix) = match params {
            Some(pr) => {
                let pair = CombinedPair::new(s.clone(), t.iter().copied());
                (
                    Some(is_d_combined_pair(&pair, pr)),
                    Some(combined_runner_matrix(&pair, pr)?),
                )
            }
            None => (None, None),
        };
        Ok(AmaState {
            s: s.clone(),
            t: t.to_vec(),
            combined_pair,
            combined_matrix,
        })
    };
    states.push(snapshot(&s, &t)?);
    while !s.is_empty_partition() {
        let (next, hat) = ms_step(&s, e)?;
        if t.last().is_some_and(|&prev| hat >= prev) {
            return Err(Error::Invariant(format!(
                "emitted bead {hat} is not below the previous one"
            )));
        }
        t.push(hat);
        s = next;
        states.push(snapshot(&s, &t)?);
    }
    if t.iter().any(|&v| s.contains(v)) {
        return Err(Error::Invariant("final S and T overlap".into()));
    }
    let (result, shift) = partition_of(&s.union_with(&t));
    if shift != 0 {
        return Err(Error::Invariant(format!(
            "final set has shift {shift}, expected the canonical set"
        )));
    }
    Ok(AmaTrace {
        e,
        d: params.map(|p| p.d()),
        input: lambda.clone(),
        states,
        emitted: t,
        result,
    })
}

/// `m_e(λ)'` computed on the abacus.
pub fn ama(lambda: &Partition, e: i64) -> Result<Partition> {
    Ok(run_ama(lambda, e, None)?.result)
}

/// Like [`ama`], keeping every `(S, T)` state. When `d` is given each state is
/// also checked as a combined pair and its combined matrix recorded.
pub fn ama_trace(lambda: &Partition, e: i64, d: Option<i64>) -> Result<AmaTrace> {
    let params = d.map(|d| Params::new(d, e)).transpose()?;
    run_ama(lambda, e, params)
}

/// The Mullineux image `m_e(λ)`.
pub fn mullineux(lambda: &Partition, e: i64) -> Result<Partition> {
    Ok(ama(lambda, e)?.conjugate())
}

/// `m_e(λ)'` through Xu's recursion: the first part is `|λ| - |J(λ)|`, and the
/// remaining parts are those of `m_e(J(λ))'`.
pub fn xu_recursive(lambda: &Partition, e: i64) -> Result<Partition> {
    require_regular(lambda, e)?;
    let mut parts = Vec::new();
    let mut current = lambda.clone();
    while !current.is_empty() {
        let next = j_map(&current, e)?;
        parts.push(current.size() - next.size());
        current = next;
    }
    Partition::new(parts)
}
