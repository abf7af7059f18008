//! Balanced, shift balanced, skewed and shift skewed partitions and β-sets.
//!
//! A partition is `d`-balanced when every `e`-divisible hook has arm length
//! `≡ 0 (mod d)`, `d`-shift balanced when every such arm is `≡ -1`, `d`-skewed
//! when no such arm is `≡ 0` and `d`-shift skewed when no such arm is `≡ -1`.
//! On a β-set the same conditions read off `emp_B(b - ae + 1, b)` and
//! `emp_B(b - ae, b)` for beads `b` above empty spaces `b - ae`.

use serde::{Deserialize, Serialize};

use crate::abacus::{beta_set, BetaSet};
use crate::error::{Error, Result};
use crate::params::Params;
use crate::partition::Partition;
use crate::rim::e_divisible_hooks;

/// Evidence that one of the four flags fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Hook {
        row: usize,
        col: usize,
        arm: usize,
        size: usize,
    },
    Bead {
        bead: i64,
        a: i64,
        emptiness: i64,
    },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witnesses {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub balanced: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub shift_balanced: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub skewed: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub shift_skewed: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HookClassReport {
    pub balanced: bool,
    pub shift_balanced: bool,
    pub skewed: bool,
    pub shift_skewed: bool,
    pub witnesses: Witnesses,
}

impl HookClassReport {
    pub fn flags(&self) -> [bool; 4] {
        [
            self.balanced,
            self.shift_balanced,
            self.skewed,
            self.shift_skewed,
        ]
    }
}

/// Folds residues `r` (of the arm, or of `emp(b - ae + 1, b)`) into a report.
struct Accumulator {
    d: i64,
    w: Witnesses,
}

impl Accumulator {
    fn new(d: i64) -> Self {
        Accumulator {
            d,
            w: Witnesses::default(),
        }
    }

    fn observe(&mut self, r: i64, witness: impl Fn() -> Witness) {
        let r = r.rem_euclid(self.d);
        let minus_one = self.d - 1;
        if r != 0 && self.w.balanced.is_none() {
            self.w.balanced = Some(witness());
        }
        if r != minus_one && self.w.shift_balanced.is_none() {
            self.w.shift_balanced = Some(witness());
        }
        if r == 0 && self.w.skewed.is_none() {
            self.w.skewed = Some(witness());
        }
        if r == minus_one && self.w.shift_skewed.is_none() {
            self.w.shift_skewed = Some(witness());
        }
    }

    fn finish(self) -> HookClassReport {
        HookClassReport {
            balanced: self.w.balanced.is_none(),
            shift_balanced: self.w.shift_balanced.is_none(),
            skewed: self.w.skewed.is_none(),
            shift_skewed: self.w.shift_skewed.is_none(),
            witnesses: self.w,
        }
    }
}

/// Classifies `λ` from the arm lengths of its `e`-divisible hooks.
pub fn classify_partition(lambda: &Partition, params: Params) -> HookClassReport {
    let mut acc = Accumulator::new(params.d());
    for h in e_divisible_hooks(lambda, params.e()) {
        acc.observe(h.arm as i64, || Witness::Hook {
            row: h.start.0,
            col: h.start.1,
            arm: h.arm,
            size: h.size,
        });
    }
    acc.finish()
}

/// Classifies a β-set, scanning every bead `b` and every `a > 0` with
/// `b - ae >= scan_floor`. Any `scan_floor` at or below the least empty
/// space gives the same result.
pub fn classify_beta_set_within(b: &BetaSet, params: Params, scan_floor: i64) -> HookClassReport {
    let e = params.e();
    let mut acc = Accumulator::new(params.d());
    for v in b.beads_desc() {
        let mut a = 1;
        while v - a * e >= scan_floor {
            let f = v - a * e;
            if !b.contains(f) {
                let emptiness = b.emp_range_unchecked(f + 1, v);
                acc.observe(emptiness, || Witness::Bead {
                    bead: v,
                    a,
                    emptiness,
                });
            }
            a += 1;
        }
    }
    acc.finish()
}

pub fn classify_beta_set(b: &BetaSet, params: Params) -> HookClassReport {
    let n = b.normalized();
    classify_beta_set_within(&n, params, n.floor())
}

/// For a `d`-balanced `λ`, reports whether it is `e`-regular.
pub fn regularity_from_balance(lambda: &Partition, params: Params) -> Result<bool> {
    if !classify_beta_set(&beta_set(lambda, 0), params).balanced {
        return Err(Error::NotDBalanced {
            partition: lambda.to_string(),
            d: params.d(),
        });
    }
    lambda.is_e_regular(params.e())
}
