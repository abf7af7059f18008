//! β-sets on the James abacus.
//!
//! A [`BetaSet`] is stored as a window: every integer strictly below `floor`
//! is a bead, and `explicit` lists the beads at or above `floor` in ascending
//! order. Many windows describe the same set; equality and hashing go through
//! the normalized window whose floor is the least empty space.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::check_e;
use crate::partition::Partition;

#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct BetaSet {
    floor: i64,
    explicit: Vec<i64>,
}

/// Runner of position `v` on an abacus with `e` runners.
pub fn runner(v: i64, e: i64) -> i64 {
    v.rem_euclid(e)
}

impl BetaSet {
    /// Builds the set `{v < floor} ∪ beads`. Every listed bead must be `>= floor`.
    pub fn new(floor: i64, beads: impl IntoIterator<Item = i64>) -> Result<Self> {
        let mut explicit: Vec<i64> = beads.into_iter().collect();
        explicit.sort_unstable();
        explicit.dedup();
        if let Some(&low) = explicit.first() {
            if low < floor {
                return Err(Error::MalformedBetaSet(format!(
                    "bead {low} lies below the floor {floor}"
                )));
            }
        }
        Ok(BetaSet { floor, explicit })
    }

    /// The set of all integers below `m`; a β-set of the empty partition.
    pub fn packed_below(m: i64) -> Self {
        BetaSet {
            floor: m,
            explicit: Vec::new(),
        }
    }

    pub fn floor(&self) -> i64 {
        self.floor
    }

    /// Beads at or above the floor, ascending.
    pub fn explicit(&self) -> &[i64] {
        &self.explicit
    }

    pub fn contains(&self, v: i64) -> bool {
        v < self.floor || self.explicit.binary_search(&v).is_ok()
    }

    /// The `s` with `B = B_s(λ)`. Invariant under re-windowing.
    pub fn shift(&self) -> i64 {
        self.floor + self.explicit.len() as i64
    }

    /// The least empty space.
    pub fn least_empty(&self) -> i64 {
        let mut f = self.floor;
        for &b in &self.explicit {
            if b != f {
                break;
            }
            f += 1;
        }
        f
    }

    pub fn max_bead(&self) -> i64 {
        self.explicit.last().copied().unwrap_or(self.floor - 1)
    }

    /// The same set with its floor at the least empty space.
    pub fn normalized(&self) -> BetaSet {
        let f = self.least_empty();
        let skip = (f - self.floor) as usize;
        BetaSet {
            floor: f,
            explicit: self.explicit[skip..].to_vec(),
        }
    }

    /// The same set with the floor lowered by `by` positions.
    pub fn lowered(&self, by: i64) -> BetaSet {
        let by = by.max(0);
        let mut explicit: Vec<i64> = (self.floor - by..self.floor).collect();
        explicit.extend_from_slice(&self.explicit);
        BetaSet {
            floor: self.floor - by,
            explicit,
        }
    }

    /// The same set re-windowed so that its floor is at most `f`.
    pub fn with_floor_at_most(&self, f: i64) -> BetaSet {
        self.lowered(self.floor - f)
    }

    /// Adds `k` to every element. The underlying partition is unchanged and the
    /// shift grows by `k`.
    pub fn translate(&self, k: i64) -> BetaSet {
        BetaSet {
            floor: self.floor + k,
            explicit: self.explicit.iter().map(|b| b + k).collect(),
        }
    }

    /// True iff this is a β-set of the empty partition.
    pub fn is_empty_partition(&self) -> bool {
        self.least_empty() > self.max_bead()
    }

    /// Number of beads in `[u, v]`.
    pub fn bd(&self, u: i64, v: i64) -> Result<i64> {
        if u > v + 1 {
            return Err(Error::Invariant(format!(
                "empty range needs u <= v + 1, got {u} > {v} + 1"
            )));
        }
        Ok(self.bd_unchecked(u, v))
    }

    pub(crate) fn bd_unchecked(&self, u: i64, v: i64) -> i64 {
        if u > v {
            return 0;
        }
        let below = if u < self.floor {
            (v.min(self.floor - 1) - u + 1).max(0)
        } else {
            0
        };
        let lo = self.explicit.partition_point(|&b| b < u);
        let hi = self.explicit.partition_point(|&b| b <= v);
        below + (hi.saturating_sub(lo)) as i64
    }

    /// Number of empty spaces in `[u, v]`.
    pub fn emp_range(&self, u: i64, v: i64) -> Result<i64> {
        Ok(1 + v - u - self.bd(u, v)?)
    }

    pub(crate) fn emp_range_unchecked(&self, u: i64, v: i64) -> i64 {
        if u > v {
            return 0;
        }
        1 + v - u - self.bd_unchecked(u, v)
    }

    /// Number of empty spaces `<= v`. Nothing below the floor is empty, so
    /// this is the count of empty spaces in `[floor, v]`.
    pub fn emp(&self, v: i64) -> i64 {
        if v < self.floor {
            0
        } else {
            self.emp_range_unchecked(self.floor, v)
        }
    }

    /// Beads in descending order down to and including the floor window.
    pub fn beads_desc(&self) -> impl Iterator<Item = i64> + '_ {
        self.explicit.iter().rev().copied()
    }

    /// Adds `v` as a bead, materializing the window if needed.
    pub(crate) fn insert(&mut self, v: i64) {
        if v < self.floor {
            return;
        }
        if let Err(pos) = self.explicit.binary_search(&v) {
            self.explicit.insert(pos, v);
        }
    }

    /// Removes bead `v`, lowering the floor first if `v` is below it.
    pub(crate) fn remove(&mut self, v: i64) {
        if v < self.floor {
            *self = self.with_floor_at_most(v);
        }
        if let Ok(pos) = self.explicit.binary_search(&v) {
            self.explicit.remove(pos);
        }
    }

    /// Union with a finite set of integers.
    pub fn union_with(&self, extra: &[i64]) -> BetaSet {
        let mut out = self.clone();
        for &v in extra {
            out.insert(v);
        }
        out
    }

    /// Swaps the contents of positions `i` and `j`.
    pub(crate) fn swap_positions(&mut self, i: i64, j: i64) -> SwapKind {
        let (bi, bj) = (self.contains(i), self.contains(j));
        if bi == bj {
            return SwapKind::Neutral;
        }
        let (from, to) = if bi { (i, j) } else { (j, i) };
        self.remove(from);
        self.insert(to);
        if to < from {
            SwapKind::Up
        } else {
            SwapKind::Down
        }
    }
}

/// Effect of swapping two positions of a β-set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SwapKind {
    Up,
    Down,
    Neutral,
}

impl PartialEq for BetaSet {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = (self.normalized(), other.normalized());
        a.floor == b.floor && a.explicit == b.explicit
    }
}

impl Eq for BetaSet {}

impl Hash for BetaSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        let n = self.normalized();
        n.floor.hash(state);
        n.explicit.hash(state);
    }
}

/// `B_s(λ) = {λ_i - i + s : i >= 1}`.
pub fn beta_set(lambda: &Partition, s: i64) -> BetaSet {
    let len = lambda.len() as i64;
    let explicit = lambda
        .parts()
        .iter()
        .enumerate()
        .rev()
        .map(|(i, &p)| p as i64 - (i as i64 + 1) + s)
        .collect();
    BetaSet {
        floor: s - len,
        explicit,
    }
}

/// Recovers `(λ, s)` from `B = B_s(λ)`.
pub fn partition_of(b: &BetaSet) -> (Partition, i64) {
    let parts: Vec<usize> = b
        .beads_desc()
        .map(|v| b.emp(v) as usize)
        .take_while(|&p| p > 0)
        .collect();
    (Partition::from_sorted(parts), b.shift())
}

/// `|λ|` as the sum of emptinesses of the beads.
pub fn size_by_emptiness(b: &BetaSet) -> usize {
    b.beads_desc().map(|v| b.emp(v) as usize).sum()
}

/// `|λ|` as `Σ_{0 <= b ∈ B} b - C(N, 2)` where `N` counts non-negative beads.
/// The set is translated first so that it contains every non-positive integer.
pub fn size_by_bead_sum(b: &BetaSet) -> usize {
    let k = (1 - b.least_empty()).max(0);
    let t = b.translate(k).with_floor_at_most(0);
    let nonneg: Vec<i64> = t.explicit.iter().copied().filter(|&v| v >= 0).collect();
    let n = nonneg.len() as i64;
    (nonneg.iter().sum::<i64>() - n * (n - 1) / 2) as usize
}

/// Size of the underlying partition; both formulas must agree.
pub fn size_of(b: &BetaSet) -> Result<usize> {
    let (x, y) = (size_by_emptiness(b), size_by_bead_sum(b));
    if x == y {
        Ok(x)
    } else {
        Err(Error::Invariant(format!(
            "size formulas disagree on {b}: {x} vs {y}"
        )))
    }
}

/// Slides every bead as far up its runner as it will go.
pub fn slide_up(b: &BetaSet, e: i64) -> Result<BetaSet> {
    let e = check_e(e)?;
    let n = b.normalized();
    let base = n.floor - runner(n.floor, e);
    let mut counts: Vec<i64> = (0..e).map(|r| i64::from(base + r < n.floor)).collect();
    for &v in &n.explicit {
        counts[runner(v, e) as usize] += 1;
    }
    let explicit = (0..e).flat_map(|r| (0..counts[r as usize]).map(move |k| base + r + k * e));
    BetaSet::new(base, explicit)
}

/// The `e`-core and `e`-weight of the underlying partition.
pub fn e_core_weight(b: &BetaSet, e: i64) -> Result<(Partition, usize)> {
    let slid = slide_up(b, e)?;
    let (core, _) = partition_of(&slid);
    let (lambda, _) = partition_of(b);
    Ok((core.clone(), (lambda.size() - core.size()) / e as usize))
}

/// Whether two β-sets with the same shift have underlying partitions with the
/// same `e`-core: equal numbers of positive beads on every runner once both
/// contain all non-positive integers.
pub fn same_core(b1: &BetaSet, b2: &BetaSet, e: i64) -> Result<bool> {
    let e = check_e(e)?;
    if b1.shift() != b2.shift() {
        return Err(Error::ShiftMismatch {
            left: b1.shift(),
            right: b2.shift(),
        });
    }
    let k = (1 - b1.least_empty().min(b2.least_empty())).max(0);
    let count = |b: &BetaSet| {
        let t = b.translate(k);
        let mut c = vec![0usize; e as usize];
        for v in (1..=t.max_bead()).filter(|&v| t.contains(v)) {
            c[runner(v, e) as usize] += 1;
        }
        c
    };
    Ok(count(b1) == count(b2))
}

/// ASCII picture of the abacus with `e` runners. Positions grow left to right
/// and top to bottom; `o` is a bead, `.` an empty space and `#` a bead taken
/// from `marked` (drawn on top of empty spaces of `b`).
pub fn render(b: &BetaSet, e: i64, marked: &[i64]) -> String {
    let n = b.normalized();
    let top_pos = n
        .max_bead()
        .max(marked.iter().copied().max().unwrap_or(i64::MIN));
    let low_pos = n
        .floor
        .min(marked.iter().copied().min().unwrap_or(i64::MAX));
    let first_row = low_pos.div_euclid(e) - 1;
    let last_row = top_pos.div_euclid(e).max(first_row + 1);
    let width = [first_row * e, last_row * e]
        .iter()
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    out.push_str(&format!("{:>width$} |", ""));
    for r in 0..e {
        out.push_str(&format!(" {}", r % 10));
    }
    out.push('\n');
    for row in first_row..=last_row {
        out.push_str(&format!("{:>width$} |", row * e));
        for r in 0..e {
            let v = row * e + r;
            let c = if marked.contains(&v) {
                '#'
            } else if n.contains(v) {
                'o'
            } else {
                '.'
            };
            out.push(' ');
            out.push(c);
        }
        out.push('\n');
    }
    out
}

impl fmt::Display for BetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "floor={}; beads=", self.floor)?;
        for (k, v) in self.beads_desc().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BetaSet({self})")
    }
}

impl FromStr for BetaSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            what: "beta-set",
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let (floor_part, beads_part) = s.split_once(';').ok_or_else(|| err("missing ';'"))?;
        let floor = floor_part
            .trim()
            .strip_prefix("floor=")
            .ok_or_else(|| err("expected floor=<int>"))?
            .trim()
            .parse::<i64>()
            .map_err(|_| err("bad floor"))?;
        let beads = beads_part
            .trim()
            .strip_prefix("beads=")
            .ok_or_else(|| err("expected beads=<list>"))?
            .trim();
        let beads: Vec<i64> = if beads.is_empty() || beads == "-" {
            Vec::new()
        } else {
            beads
                .split(',')
                .map(|t| t.trim().parse::<i64>().map_err(|_| err("bad bead")))
                .collect::<Result<_>>()?
        };
        BetaSet::new(floor, beads)
    }
}

impl TryFrom<String> for BetaSet {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<BetaSet> for String {
    fn from(b: BetaSet) -> String {
        b.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_set_of_642() {
        let b = beta_set(&p("6,4,2"), 0);
        assert_eq!(b, BetaSet::new(-3, [5, 2, -1]).unwrap());
        assert_eq!(b.to_string(), "floor=-3; beads=5,2,-1");
        assert!(b.contains(-4) && b.contains(-100) && !b.contains(-3) && !b.contains(6));
    }

    #[test]
    fn small_canonical_sets() {
        assert_eq!(beta_set(&Partition::empty(), 0), BetaSet::packed_below(0));
        assert_eq!(beta_set(&p("1,1"), 0), BetaSet::new(-2, [0, -1]).unwrap());
    }

    #[test]
    fn recovers_partition_and_shift() {
        let b = BetaSet::new(-3, [5, 2, -1]).unwrap();
        assert_eq!(partition_of(&b), (p("6,4,2"), 0));
        assert_eq!(
            partition_of(&BetaSet::packed_below(0)),
            (Partition::empty(), 0)
        );
        let b = BetaSet::new(-3, [2, 0]).unwrap();
        assert_eq!(partition_of(&b), (p("4,3"), -1));
    }

    #[test]
    fn counting_matches_worked_values() {
        let b = beta_set(&p("6,4,2"), 0);
        assert_eq!(b.bd(-6, 8).unwrap(), 6);
        assert_eq!(b.emp_range(-6, 8).unwrap(), 9);
        assert_eq!((b.emp(5), b.emp(2), b.emp(-1)), (6, 4, 2));
        assert_eq!(b.bd(3, 2).unwrap(), 0);
        assert_eq!(b.emp_range(3, 2).unwrap(), 0);
        assert!(b.bd(4, 2).is_err());
    }

    #[test]
    fn lowering_the_floor_changes_nothing() {
        let b = beta_set(&p("5,3,3,1"), 2);
        for k in 0..=10 {
            let l = b.lowered(k);
            assert_eq!(l, b);
            assert_eq!(l.shift(), b.shift());
            for v in -12..12 {
                assert_eq!(l.emp(v), b.emp(v));
                assert_eq!(l.contains(v), b.contains(v));
            }
        }
    }

    #[test]
    fn sizes() {
        assert_eq!(size_of(&beta_set(&p("6,4,2"), 0)).unwrap(), 12);
        assert_eq!(size_of(&beta_set(&Partition::empty(), 0)).unwrap(), 0);
        assert_eq!(size_of(&beta_set(&p("5,3,3,1"), 0)).unwrap(), 12);
        assert_eq!(size_of(&beta_set(&p("5,3,3,1"), -7)).unwrap(), 12);
    }

    #[test]
    fn cores_and_weights() {
        let (core, w) = e_core_weight(&beta_set(&p("6,4,2"), 0), 5).unwrap();
        assert_eq!((core, w), (p("1,1"), 2));
        let (core, w) = e_core_weight(&beta_set(&p("5,3,3,1"), 0), 5).unwrap();
        assert_eq!((core, w), (p("1,1"), 2));
        let (core, w) = e_core_weight(&beta_set(&p("1,1"), 3), 5).unwrap();
        assert_eq!((core, w), (p("1,1"), 0));
        assert_eq!(slide_up(&beta_set(&p("6,4,2"), 2), 5).unwrap().shift(), 2);
    }

    #[test]
    fn core_comparison() {
        let a = beta_set(&p("6,4,2"), 0);
        let b = beta_set(&p("5,3,3,1"), 0);
        assert!(same_core(&a, &b, 5).unwrap());
        assert!(same_core(&a, &a, 5).unwrap());
        assert!(!same_core(&a, &beta_set(&p("5"), 0), 5).unwrap());
        assert_eq!(
            same_core(&a, &beta_set(&p("5"), 1), 5),
            Err(Error::ShiftMismatch { left: 0, right: 1 })
        );
    }

    #[test]
    fn text_round_trip() {
        let b: BetaSet = "floor=-3; beads=5,2,-1".parse().unwrap();
        assert_eq!(partition_of(&b).0, p("6,4,2"));
        assert_eq!(b.to_string().parse::<BetaSet>().unwrap(), b);
        let e: BetaSet = "floor=0; beads=".parse().unwrap();
        assert!(e.is_empty_partition());
        assert!("floor=0; beads=-3".parse::<BetaSet>().is_err());
        let json = serde_json::to_string(&b).unwrap();
        assert_eq!(serde_json::from_str::<BetaSet>(&json).unwrap(), b);
    }

    #[test]
    fn swaps_classify_moves() {
        let mut b = beta_set(&p("6,4,2"), 0);
        assert_eq!(b.swap_positions(0, 5), SwapKind::Up);
        assert_eq!(b.swap_positions(0, 5), SwapKind::Down);
        assert_eq!(b.swap_positions(-10, -5), SwapKind::Neutral);
        assert_eq!(b.swap_positions(-3, -8), SwapKind::Down);
        assert!(b.contains(-3) && !b.contains(-8));
    }

    #[test]
    fn renders_rows() {
        let text = render(&beta_set(&p("6,4,2"), 0), 5, &[]);
        assert!(text.contains("o o . . o"), "{text}");
        assert!(text.lines().count() >= 3);
    }
}
