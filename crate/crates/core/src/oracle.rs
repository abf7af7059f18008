//! Brute-force enumeration and the exhaustive property sweep.
//!
//! Every property is checked on all partitions up to a size bound. A report
//! line counts the source partitions examined; a failing property stops at
//! its first counterexample and carries it as a witness.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::abacus::{
    beta_set, e_core_weight, partition_of, size_by_bead_sum, size_by_emptiness, slide_up,
};
use crate::classes::{classify_beta_set, classify_beta_set_within, classify_partition};
use crate::error::Result;
use crate::extremal::{
    a1, a1_by_interval_permutation, a2, a2_by_interval_permutation, core_and_weight,
    dominance_extreme, greedy_max, maximize, minimize, replay_runner_wise,
};
use crate::mullineux::{
    ama, ama_trace, leading_beads, ms_step, mullineux, proper_rim_removal_via_abacus, xu_recursive,
    Ms,
};
use crate::params::Params;
use crate::partition::{OrderRelation, Partition};
use crate::rim::{
    e_divisible_hooks, e_rim, e_rim_pieces, j_map, proper_e_rim, remove_proper_e_rim,
    remove_rim_hook, rim_hook,
};
use crate::runner::{
    is_d_combined_pair_within, runner_matrix_at_shift, runner_matrix_of_beta_set,
    runner_matrix_of_partition, CombinedPair, RunnerMatrix,
};

/// All partitions of `n` in descending lexicographic order, generated lazily.
#[derive(Debug, Clone)]
pub struct Partitions {
    next: Option<Vec<usize>>,
}

pub fn enumerate_partitions(n: usize) -> Partitions {
    Partitions {
        next: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        let mut parts = current.clone();
        let mut ones = 0;
        while parts.last() == Some(&1) {
            parts.pop();
            ones += 1;
        }
        if let Some(last) = parts.pop() {
            let v = last - 1;
            let mut rest = ones + 1;
            parts.push(v);
            while rest >= v {
                parts.push(v);
                rest -= v;
            }
            if rest > 0 {
                parts.push(rest);
            }
            self.next = Some(parts);
        }
        Some(Partition::from_sorted(current))
    }
}

pub fn enumerate_e_regular(n: usize, e: i64) -> impl Iterator<Item = Partition> {
    enumerate_partitions(n).filter(move |p| p.is_e_regular(e).unwrap_or(false))
}

/// `p(n)` by Euler's pentagonal number recurrence.
pub fn partition_count(n: usize) -> u64 {
    let mut p = vec![0i128; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut total = 0i128;
        for k in 1.. {
            let k = k as i64;
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            total += sign * p[m - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= m {
                total += sign * p[m - g2];
            }
        }
        p[m] = total;
    }
    p[n] as u64
}

/// Deliberate defects used to show that the sweep can fail.
#[doc(hidden)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Mutation {
    /// `Ms_e` additionally nudges its greatest bead down by one.
    CorruptMs,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub max_n: usize,
    pub e_values: Vec<i64>,
    pub d_pairs: Vec<Params>,
    pub parallel: bool,
    #[doc(hidden)]
    #[serde(skip)]
    pub mutation: Option<Mutation>,
}

/// The coprime pairs exercised by default.
pub fn default_pairs() -> Vec<Params> {
    [(2, 3), (2, 5), (3, 4), (3, 5), (4, 5), (2, 7), (3, 7)]
        .into_iter()
        .map(|(d, e)| Params::new(d, e).expect("valid pair"))
        .collect()
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_n: 18,
            e_values: vec![3, 4, 5],
            d_pairs: default_pairs(),
            parallel: true,
            mutation: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub property: String,
    pub instances: u64,
    pub failures: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub lines: Vec<PropertyReport>,
}

impl SweepReport {
    pub fn ok(&self) -> bool {
        self.lines.iter().all(|l| l.failures == 0)
    }

    /// One JSON object per line.
    pub fn to_json_lines(&self) -> String {
        self.lines
            .iter()
            .map(|l| serde_json::to_string(l).expect("report serializes") + "\n")
            .collect()
    }
}

type Check<'a> = dyn Fn(&Partition) -> std::result::Result<(), String> + Sync + 'a;

struct Sweep<'a> {
    cfg: &'a SweepConfig,
    lines: Vec<PropertyReport>,
}

impl<'a> Sweep<'a> {
    /// Runs `check` on every partition of size at most `min(bound, max_n)`.
    fn each(&mut self, name: &str, bound: usize, check: &Check<'_>) {
        let top = bound.min(self.cfg.max_n);
        let mut instances = 0u64;
        let mut witness = None;
        for n in 0..=top {
            let batch: Vec<Partition> = enumerate_partitions(n).collect();
            let results: Vec<std::result::Result<(), String>> = if self.cfg.parallel {
                batch.par_iter().map(check).collect()
            } else {
                batch.iter().map(check).collect()
            };
            match results.iter().position(|r| r.is_err()) {
                Some(k) => {
                    instances += k as u64 + 1;
                    let msg = results[k].clone().unwrap_err();
                    witness = Some(format!("{}: {msg}", batch[k]));
                    break;
                }
                None => instances += batch.len() as u64,
            }
        }
        self.push(name, instances, witness);
    }

    fn push(&mut self, name: &str, instances: u64, witness: Option<String>) {
        self.lines.push(PropertyReport {
            property: name.to_string(),
            instances,
            failures: u64::from(witness.is_some()),
            witness,
        });
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lift<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn ama_under(lambda: &Partition, e: i64, mutation: Option<Mutation>) -> Result<Partition> {
    match mutation {
        None => ama(lambda, e),
        Some(Mutation::CorruptMs) => {
            let mut s = beta_set(lambda, 0);
            let mut t = Vec::new();
            while !s.is_empty_partition() {
                let (mut next, hat) = ms_step(&s, e)?;
                let top = next.max_bead();
                if !next.contains(top - 1) {
                    next.remove(top);
                    next.insert(top - 1);
                }
                t.push(hat);
                s = next;
            }
            Ok(partition_of(&s.union_with(&t)).0)
        }
    }
}

fn ama_e_values(cfg: &SweepConfig) -> Vec<i64> {
    let set: BTreeSet<i64> = cfg
        .e_values
        .iter()
        .copied()
        .chain(cfg.d_pairs.iter().map(|p| p.e()))
        .collect();
    set.into_iter().collect()
}

/// Runs every property suite.
pub fn run_sweep(cfg: &SweepConfig) -> SweepReport {
    let mut sw = Sweep {
        cfg,
        lines: Vec::new(),
    };
    partition_core_suite(&mut sw);
    abacus_suite(&mut sw);
    runner_suite(&mut sw);
    classes_suite(&mut sw);
    mullineux_suite(&mut sw);
    extremal_suite(&mut sw);
    oracle_suite(&mut sw);
    SweepReport { lines: sw.lines }
}

fn partition_core_suite(sw: &mut Sweep<'_>) {
    let es = sw.cfg.e_values.clone();

    sw.each("rim_hook_arm_plus_leg", 20, &|l| {
        for i in 1..=l.len() {
            for j in 1..=l.part(i) {
                let h = lift(rim_hook(l, i, j))?;
                ensure(h.arm + h.leg + 1 == h.size, || format!("hook at ({i},{j})"))?;
                ensure(h.top <= h.bottom && h.cells.len() == h.size, || {
                    format!("cells at ({i},{j})")
                })?;
            }
        }
        Ok(())
    });

    sw.each("conjugate_involution", 25, &|l| {
        ensure(l.conjugate().conjugate() == *l, || "conjugate twice".into())
    });

    sw.each("remove_rim_hook_size", 20, &|l| {
        for i in 1..=l.len() {
            for j in 1..=l.part(i) {
                let h = lift(rim_hook(l, i, j))?;
                let rest = lift(remove_rim_hook(l, &h))?;
                ensure(rest.size() + h.size == l.size(), || {
                    format!("hook at ({i},{j})")
                })?;
            }
        }
        Ok(())
    });

    sw.each("proper_e_rim_iff_divisible", 18, &|l| {
        if l.is_empty() {
            return Ok(());
        }
        for &e in &es {
            let rim = lift(e_rim(l, e))?;
            let proper = lift(proper_e_rim(l, e))?;
            let divisible = rim.len() % e as usize == 0;
            ensure((proper == rim) == divisible, || format!("e = {e}"))?;
            ensure(proper.len() % e as usize == 0, || {
                format!("proper size, e = {e}")
            })?;
        }
        Ok(())
    });

    sw.each("dominance_partial_order", 12, &|l| {
        let same: Vec<Partition> = enumerate_partitions(l.size()).collect();
        for m in &same {
            let lm = lift(l.dominance(m))?;
            let ml = lift(m.dominance(l))?;
            let flipped = match lm {
                OrderRelation::Greater => OrderRelation::Less,
                OrderRelation::Less => OrderRelation::Greater,
                other => other,
            };
            ensure(ml == flipped, || format!("antisymmetry with {m}"))?;
            if lm == OrderRelation::Greater {
                ensure(l.lex(m) == OrderRelation::Greater, || {
                    format!("lex refinement with {m}")
                })?;
                for k in &same {
                    if lift(m.dominance(k))? == OrderRelation::Greater {
                        ensure(lift(l.dominance(k))? == OrderRelation::Greater, || {
                            format!("transitivity through {m} to {k}")
                        })?;
                    }
                }
            }
        }
        Ok(())
    });

    sw.each("j_map_matches_ms", 18, &|l| {
        for &e in &es {
            if !l.is_e_regular(e).unwrap_or(false) {
                continue;
            }
            let direct = lift(j_map(l, e))?;
            let via = partition_of(&lift(Ms(&beta_set(l, 0), e))?).0;
            ensure(direct == via, || format!("e = {e}: {direct} vs {via}"))?;
            ensure(direct.is_e_regular(e).unwrap_or(false), || {
                format!("J not regular, e = {e}")
            })?;
            ensure(l.is_empty() || direct.size() < l.size(), || {
                format!("J not smaller, e = {e}")
            })?;
        }
        Ok(())
    });
}

fn abacus_suite(sw: &mut Sweep<'_>) {
    let es = sw.cfg.e_values.clone();

    sw.each("beta_set_round_trip", 20, &|l| {
        for s in -3..=3 {
            let b = beta_set(l, s);
            ensure(partition_of(&b) == (l.clone(), s), || format!("shift {s}"))?;
        }
        Ok(())
    });

    sw.each("rewindow_invariance", 20, &|l| {
        let mut rng = ChaCha8Rng::seed_from_u64(l.size() as u64 * 7919 + l.len() as u64);
        let b = beta_set(l, rng.gen_range(-3..=3));
        for k in 0..=10 {
            let w = b.lowered(k);
            ensure(w == b && w.shift() == b.shift(), || {
                format!("lowered by {k}")
            })?;
            for _ in 0..8 {
                let u = rng.gen_range(-30..30);
                let v = u - 1 + rng.gen_range(0..30);
                ensure(lift(w.bd(u, v))? == lift(b.bd(u, v))?, || {
                    format!("bd({u},{v}) after {k}")
                })?;
                ensure(w.emp(v) == b.emp(v), || format!("emp({v}) after {k}"))?;
            }
            ensure(partition_of(&w) == partition_of(&b), || {
                format!("partition after {k}")
            })?;
        }
        Ok(())
    });

    sw.each("bead_hook_correspondence", 18, &|l| {
        let b = beta_set(l, 0);
        for &e in &es {
            let hooks: Vec<_> = e_divisible_hooks(l, e)
                .into_iter()
                .filter(|h| h.size == e as usize)
                .collect();
            let movable: Vec<i64> = b.beads_desc().filter(|&v| !b.contains(v - e)).collect();
            ensure(hooks.len() == movable.len(), || format!("count, e = {e}"))?;
            let beads: Vec<i64> = b.beads_desc().collect();
            for h in &hooks {
                let v = beads[h.top - 1];
                ensure(!b.contains(v - e), || format!("bead for top {}", h.top))?;
                let mut slid = b.clone();
                slid.remove(v);
                slid.insert(v - e);
                let lhs = lift(remove_rim_hook(l, h))?;
                ensure(partition_of(&slid).0 == lhs, || {
                    format!("slide of {v}, e = {e}")
                })?;
            }
        }
        Ok(())
    });

    sw.each("size_formulas_agree", 20, &|l| {
        for s in -3..=3 {
            let b = beta_set(l, s);
            let (x, y) = (size_by_emptiness(&b), size_by_bead_sum(&b));
            ensure(x == l.size() && y == l.size(), || {
                format!("shift {s}: {x} / {y}")
            })?;
        }
        Ok(())
    });

    sw.each("core_independent_of_slide_order", 18, &|l| {
        let mut rng = ChaCha8Rng::seed_from_u64(l.size() as u64 * 104729 + l.len() as u64);
        for &e in &es {
            let b = beta_set(l, 0);
            let canonical = lift(slide_up(&b, e))?;
            let mut cur = b.clone();
            loop {
                let movable: Vec<i64> =
                    cur.beads_desc().filter(|&v| !cur.contains(v - e)).collect();
                if movable.is_empty() {
                    break;
                }
                let v = movable[rng.gen_range(0..movable.len())];
                cur.remove(v);
                cur.insert(v - e);
            }
            ensure(cur == canonical, || format!("e = {e}"))?;
            let (core, w) = lift(e_core_weight(&b, e))?;
            ensure(core.size() + w * e as usize == l.size(), || {
                format!("weight, e = {e}")
            })?;
            ensure(e_divisible_hooks(&core, e).is_empty(), || {
                format!("core has a hook, e = {e}")
            })?;
        }
        Ok(())
    });
}

fn runner_suite(sw: &mut Sweep<'_>) {
    let pairs = sw.cfg.d_pairs.clone();

    sw.each("runner_matrix_rotation", 18, &|l| {
        for &pr in &pairs {
            let base = runner_matrix_of_partition(l, pr);
            ensure(
                base.total() as usize
                    == l.parts()
                        .iter()
                        .filter(|&&p| p as i64 % pr.d() != 0)
                        .count(),
                || format!("total at {pr}"),
            )?;
            for s in -2..=2 {
                let at = runner_matrix_at_shift(l, pr, s);
                ensure(at.rotated(s) == base, || format!("{pr} shift {s}"))?;
            }
        }
        Ok(())
    });

    sw.each("scan_window_stability", 18, &|l| {
        for &pr in &pairs {
            let b = beta_set(l, 0);
            let lo = b.least_empty();
            let width = (b.max_bead() - lo + 1).max(pr.e());
            let narrow = classify_beta_set_within(&b, pr, lo);
            let wide =
                classify_beta_set_within(&b.with_floor_at_most(lo - 2 * width), pr, lo - 2 * width);
            ensure(narrow.flags() == wide.flags(), || {
                format!("classes at {pr}")
            })?;
            if !l.is_e_regular(pr.e()).unwrap_or(false) {
                continue;
            }
            let trace = lift(ama_trace(l, pr.e(), None))?;
            for st in &trace.states {
                let pair = CombinedPair::new(st.s.clone(), st.t.iter().copied());
                let lo = st.s.least_empty();
                let width = (pair.c.last().copied().unwrap_or(lo) - lo + 1).max(pr.e());
                let wide_pair = CombinedPair::new(
                    st.s.with_floor_at_most(lo - 2 * width),
                    st.t.iter().copied(),
                );
                ensure(
                    is_d_combined_pair_within(&pair, pr, lo)
                        == is_d_combined_pair_within(&wide_pair, pr, lo - 2 * width),
                    || format!("combined pair at {pr}"),
                )?;
                ensure(
                    pair.non_admissible(pr.e()) == wide_pair.non_admissible(pr.e()),
                    || format!("admissibility at {pr}"),
                )?;
            }
        }
        Ok(())
    });

    sw.each("combined_matrix_constant_along_ama", 20, &|l| {
        for &pr in &pairs {
            if !classify_partition(l, pr).balanced || !l.is_e_regular(pr.e()).unwrap_or(false) {
                continue;
            }
            let trace = lift(ama_trace(l, pr.e(), Some(pr.d())))?;
            ensure(trace.pairs_consistent(), || format!("trace at {pr}"))?;
            let start = runner_matrix_of_partition(l, pr);
            ensure(
                trace.states[0].combined_matrix.as_ref() == Some(&start),
                || format!("initial matrix at {pr}"),
            )?;
        }
        Ok(())
    });
}

fn classes_suite(sw: &mut Sweep<'_>) {
    let pairs = sw.cfg.d_pairs.clone();

    sw.each("classes_partition_matches_beta_set", 18, &|l| {
        for &pr in &pairs {
            let direct = classify_partition(l, pr).flags();
            for s in -2..=2 {
                let via = classify_beta_set(&beta_set(l, s), pr).flags();
                ensure(direct == via, || {
                    format!("{pr} shift {s}: {direct:?} vs {via:?}")
                })?;
            }
        }
        Ok(())
    });

    sw.each("class_hierarchy", 18, &|l| {
        for &pr in &pairs {
            let r = classify_partition(l, pr);
            ensure(!r.balanced || r.shift_skewed, || {
                format!("balanced but not shift skewed at {pr}")
            })?;
            ensure(!r.shift_balanced || r.skewed, || {
                format!("shift balanced but not skewed at {pr}")
            })?;
        }
        Ok(())
    });

    sw.each("two_class_collapse", 18, &|l| {
        for e in [3, 5, 7] {
            let pr = Params::new(2, e).expect("coprime");
            let r = classify_partition(l, pr);
            ensure(
                r.balanced == r.shift_skewed && r.shift_balanced == r.skewed,
                || format!("e = {e}"),
            )?;
        }
        Ok(())
    });

    sw.each("balanced_zero_row_regular", 20, &|l| {
        for &pr in &pairs {
            if classify_partition(l, pr).balanced
                && runner_matrix_of_partition(l, pr).row_has_zero(1)
            {
                ensure(l.is_e_regular(pr.e()).unwrap_or(false), || {
                    format!("not regular at {pr}")
                })?;
            }
        }
        Ok(())
    });

    sw.each("ms_preserves_balance", 20, &|l| {
        for &pr in &pairs {
            let b = beta_set(l, 0);
            if classify_beta_set(&b, pr).balanced {
                let next = lift(Ms(&b, pr.e()))?;
                ensure(classify_beta_set(&next, pr).balanced, || format!("at {pr}"))?;
            }
        }
        Ok(())
    });
}

fn mullineux_suite(sw: &mut Sweep<'_>) {
    let es = ama_e_values(sw.cfg);
    let pairs = sw.cfg.d_pairs.clone();
    let mutation = sw.cfg.mutation;

    sw.each("ama_matches_xu_recursion", 18, &|l| {
        for &e in &es {
            if !l.is_e_regular(e).unwrap_or(false) {
                continue;
            }
            let x = lift(ama_under(l, e, mutation))?;
            let y = lift(xu_recursive(l, e))?;
            ensure(x == y, || format!("e = {e}: {x} vs {y}"))?;
        }
        Ok(())
    });

    sw.each("ama_preserves_core", 18, &|l| {
        for &e in &es {
            if !l.is_e_regular(e).unwrap_or(false) {
                continue;
            }
            let image = lift(ama_under(l, e, mutation))?;
            let (c1, _) = lift(core_and_weight(l, e))?;
            let (c2, _) = lift(core_and_weight(&image, e))?;
            ensure(c1 == c2 && image.size() == l.size(), || format!("e = {e}"))?;
        }
        Ok(())
    });

    sw.each("ama_trace_invariants", 18, &|l| {
        for &e in &es {
            if !l.is_e_regular(e).unwrap_or(false) {
                continue;
            }
            let trace = lift(ama_trace(l, e, None))?;
            for w in trace.states.windows(2) {
                let lead = lift(leading_beads(&w[0].s, e))?;
                let bz = lead.beads[lead.stable_index];
                ensure(!w[1].s.contains(bz), || {
                    format!("stable bead survives, e = {e}")
                })?;
            }
            ensure(trace.emitted.windows(2).all(|p| p[1] < p[0]), || {
                format!("emission order, e = {e}")
            })?;
        }
        Ok(())
    });

    sw.each("proper_rim_matches_leading_beads", 18, &|l| {
        for &e in &es {
            let b = beta_set(l, 0);
            let via = lift(proper_rim_removal_via_abacus(&b, e))?;
            let direct = lift(remove_proper_e_rim(l, e))?;
            ensure(via == direct, || {
                format!("removal, e = {e}: {via} vs {direct}")
            })?;
            if l.is_empty() {
                continue;
            }
            let lead = lift(leading_beads(&b, e))?;
            let next = lift(Ms(&b, e))?;
            let absent = (0..=lead.stable_index)
                .filter(|&i| !next.contains(lead.beads[i]))
                .count();
            let hooks = lift(e_rim_pieces(l, e))?
                .iter()
                .filter(|p| p.proper)
                .count();
            ensure(absent == hooks + 1, || {
                format!("count, e = {e}: {absent} vs {hooks} + 1")
            })?;
        }
        Ok(())
    });

    sw.each("balanced_image_shift_balanced", 20, &|l| {
        for &pr in &pairs {
            let e = pr.e();
            if !classify_partition(l, pr).balanced {
                continue;
            }
            let r = runner_matrix_of_partition(l, pr);
            if !r.row_has_zero(1) {
                continue;
            }
            let image = lift(ama_under(l, e, mutation))?;
            ensure(classify_partition(&image, pr).shift_balanced, || {
                format!("{image} at {pr}")
            })?;
            ensure(runner_matrix_of_partition(&image, pr) == r, || {
                format!("matrix at {pr}")
            })?;
            ensure(
                lift(core_and_weight(&image, e))?.0 == lift(core_and_weight(l, e))?.0,
                || format!("core at {pr}"),
            )?;
            if r.every_row_has_zero() {
                let low = lift(minimize(l, pr))?;
                ensure(low == image, || format!("minimize gives {low} at {pr}"))?;
            }
        }
        Ok(())
    });

    sw.each("mullineux_involution_advisory", 18, &|l| {
        for &e in &es {
            if !l.is_e_regular(e).unwrap_or(false) {
                continue;
            }
            let m = lift(mullineux(l, e))?;
            ensure(lift(mullineux(&m, e))? == *l, || format!("e = {e}"))?;
        }
        Ok(())
    });
}

/// Least-weight members keyed by (core parts, matrix rows), with their weight.
pub type Families = BTreeMap<(Vec<usize>, Vec<Vec<u64>>), (usize, Vec<Partition>)>;

/// Groups all partitions of size at most `bound` by `(core, matrix)` and keeps
/// the members of least weight, which is exactly `E_R(γ)` for every family
/// realized in that range.
pub fn families_up_to(bound: usize, pr: Params) -> Families {
    let mut out = Families::new();
    for n in 0..=bound {
        for l in enumerate_partitions(n) {
            let (core, w) = core_and_weight(&l, pr.e()).expect("valid e");
            let key = (
                core.parts().to_vec(),
                runner_matrix_of_partition(&l, pr).rows().to_vec(),
            );
            let entry = out.entry(key).or_insert((w, Vec::new()));
            if w < entry.0 {
                *entry = (w, Vec::new());
            }
            if w == entry.0 {
                entry.1.push(l);
            }
        }
    }
    out
}

/// Family-level checks: the maximum is the unique shift skewed member and the
/// greedy output; with a zero in every row the minimum is the unique skewed
/// member; a balanced maximum is carried to the minimum by the algorithm.
pub fn check_family(
    pr: Params,
    gamma: &Partition,
    rows: &[Vec<u64>],
    members: &[Partition],
    mutation: Option<Mutation>,
) -> std::result::Result<(), String> {
    let matrix = lift(RunnerMatrix::from_rows(pr, rows.to_vec()))?;
    let max = dominance_extreme(members, OrderRelation::Greater).ok_or("no maximum")?;
    let shift_skewed: Vec<&Partition> = members
        .iter()
        .filter(|m| classify_partition(m, pr).shift_skewed)
        .collect();
    ensure(shift_skewed == vec![&max], || {
        format!("shift skewed members {shift_skewed:?}, max {max}")
    })?;
    let greedy = lift(greedy_max(gamma, &matrix))?;
    ensure(greedy == max, || format!("greedy {greedy} vs max {max}"))?;
    if matrix.every_row_has_zero() {
        let min = dominance_extreme(members, OrderRelation::Less).ok_or("no minimum")?;
        let skewed: Vec<&Partition> = members
            .iter()
            .filter(|m| classify_partition(m, pr).skewed)
            .collect();
        ensure(skewed == vec![&min], || {
            format!("skewed members {skewed:?}, min {min}")
        })?;
        if classify_partition(&max, pr).balanced {
            let image = lift(ama_under(&max, pr.e(), mutation))?;
            ensure(image == min, || {
                format!("image of max {image} vs min {min}")
            })?;
        }
    }
    Ok(())
}

/// Checks every A1 and A2 start `(b, a)` on the canonical β-set of `l`.
/// Returns the number of instances run.
pub fn check_swaps(l: &Partition, pr: Params) -> std::result::Result<usize, String> {
    let (d, e) = (pr.d(), pr.e());
    let b = beta_set(l, 0);
    let n = b.normalized();
    let core = lift(core_and_weight(l, e))?.0;
    let matrix = runner_matrix_of_beta_set(&b, pr);
    let guard = matrix.every_row_has_zero();
    let mut count = 0;
    for v in n.beads_desc() {
        let mut a = 1;
        while v - a * e >= n.floor() {
            let f = v - a * e;
            if n.contains(f) {
                a += 1;
                continue;
            }
            let (out, log) = lift(a1(&b, v, a, pr))?;
            let tag = || format!("A1 at bead {v}, a = {a}, {pr}");
            let mu = partition_of(&out).0;
            ensure(
                mu.size() < l.size() || lift(mu.dominance(l))? == OrderRelation::Greater,
                || format!("{}: order, got {mu}", tag()),
            )?;
            ensure(lift(core_and_weight(&mu, e))?.0 == core, || {
                format!("{}: core", tag())
            })?;
            let (ups, downs) = (log.ups() as i64, log.downs() as i64);
            ensure(log.short_circuit || (ups - downs) % d == 0, || {
                format!("{}: move counts", tag())
            })?;
            ensure(log.swaps[0].kind == crate::abacus::SwapKind::Up, || {
                format!("{}: first move", tag())
            })?;
            if n.emp_range_unchecked(f, v) % d == 0 {
                ensure(runner_matrix_of_beta_set(&out, pr) == matrix, || {
                    format!("{}: matrix", tag())
                })?;
            }
            ensure(replay_runner_wise(&b, &log, a, e) == out, || {
                format!("{}: runner-wise replay", tag())
            })?;
            if !log.short_circuit {
                let psi = a1_by_interval_permutation(&b, v, a, e, log.terminal_index);
                ensure(psi == out, || format!("{}: interval permutation", tag()))?;
            }
            count += 1;

            if guard {
                let (out, log) = lift(a2(&b, v, a, pr))?;
                let tag = || format!("A2 at bead {v}, a = {a}, {pr}");
                let mu = partition_of(&out).0;
                ensure(
                    mu.size() < l.size() || lift(mu.dominance(l))? == OrderRelation::Less,
                    || format!("{}: order, got {mu}", tag()),
                )?;
                ensure(lift(core_and_weight(&mu, e))?.0 == core, || {
                    format!("{}: core", tag())
                })?;
                let (ups, downs) = (log.ups() as i64, log.downs() as i64);
                ensure((ups - downs) % d == 0, || format!("{}: move counts", tag()))?;
                if n.emp_range_unchecked(f + 1, v) % d == 0 {
                    ensure(runner_matrix_of_beta_set(&out, pr) == matrix, || {
                        format!("{}: matrix", tag())
                    })?;
                }
                ensure(replay_runner_wise(&b, &log, a, e) == out, || {
                    format!("{}: runner-wise replay", tag())
                })?;
                let psi = a2_by_interval_permutation(&b, v, a, e, log.terminal_index);
                ensure(psi == out, || format!("{}: interval permutation", tag()))?;
                count += 1;
            }
            a += 1;
        }
    }
    Ok(count)
}

fn extremal_suite(sw: &mut Sweep<'_>) {
    let pairs = sw.cfg.d_pairs.clone();
    let mutation = sw.cfg.mutation;

    sw.each("swap_algorithm_postconditions", 14, &|l| {
        for &pr in &pairs {
            check_swaps(l, pr)?;
        }
        Ok(())
    });

    sw.each("maximize_minimize_fixed_points", 14, &|l| {
        for &pr in &pairs {
            let (core, _) = lift(core_and_weight(l, pr.e()))?;
            let matrix = runner_matrix_of_partition(l, pr);
            let top = lift(maximize(l, pr))?;
            ensure(classify_partition(&top, pr).shift_skewed, || {
                format!("maximize at {pr}")
            })?;
            ensure(top == lift(greedy_max(&core, &matrix))?, || {
                format!("maximize vs greedy at {pr}")
            })?;
            if matrix.every_row_has_zero() {
                let low = lift(minimize(l, pr))?;
                ensure(classify_partition(&low, pr).skewed, || {
                    format!("minimize at {pr}")
                })?;
                ensure(runner_matrix_of_partition(&low, pr) == matrix, || {
                    format!("minimize matrix at {pr}")
                })?;
            }
            if matrix.has_positive_row() {
                ensure(!classify_partition(l, pr).skewed, || {
                    format!("skewed with a positive row at {pr}")
                })?;
            }
        }
        Ok(())
    });

    let bound = 16.min(sw.cfg.max_n);
    let instances: u64 = (0..=bound).map(partition_count).sum();
    let mut witness = None;
    'pairs: for &pr in &pairs {
        for ((core, rows), (_, members)) in families_up_to(bound, pr) {
            let gamma = Partition::new(core).expect("core parts");
            if let Err(msg) = check_family(pr, &gamma, &rows, &members, mutation) {
                witness = Some(format!("family of {gamma} with {rows:?} at {pr}: {msg}"));
                break 'pairs;
            }
        }
    }
    sw.push("family_extremes_unique", instances, witness);
}

fn oracle_suite(sw: &mut Sweep<'_>) {
    let top = 30.min(sw.cfg.max_n);
    let mut witness = None;
    for n in 0..=top {
        let streamed = enumerate_partitions(n).count() as u64;
        if streamed != partition_count(n) {
            witness = Some(format!("n = {n}: {streamed} vs {}", partition_count(n)));
            break;
        }
    }
    sw.push("enumeration_matches_recurrence", top as u64 + 1, witness);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_enumerations() {
        let five: Vec<String> = enumerate_partitions(5).map(|p| p.to_string()).collect();
        assert_eq!(
            five,
            ["5", "4,1", "3,2", "3,1,1", "2,2,1", "2,1,1,1", "1,1,1,1,1"]
        );
        let zero: Vec<Partition> = enumerate_partitions(0).collect();
        assert_eq!(zero, vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(12).count(), 77);
    }

    #[test]
    fn regular_enumerations() {
        let three: Vec<String> = enumerate_e_regular(3, 3).map(|p| p.to_string()).collect();
        assert_eq!(three, ["3", "2,1"]);
        assert_eq!(enumerate_e_regular(5, 5).count(), 6);
        let by_hand = enumerate_partitions(12)
            .filter(|p| {
                let mut counts = BTreeMap::new();
                for &x in p.parts() {
                    *counts.entry(x).or_insert(0) += 1;
                }
                counts.values().all(|&c| c < 5)
            })
            .count();
        assert_eq!(enumerate_e_regular(12, 5).count(), by_hand);
    }

    #[test]
    fn counts_match_recurrence() {
        for n in 0..=30 {
            assert_eq!(
                enumerate_partitions(n).count() as u64,
                partition_count(n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn empty_sweep() {
        let cfg = SweepConfig {
            max_n: 0,
            ..SweepConfig::default()
        };
        let report = run_sweep(&cfg);
        assert!(report.ok());
        assert!(report.lines.iter().all(|l| l.instances == 1), "{report:?}");
    }
}
