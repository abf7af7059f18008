//! Integer partitions, their text format and the two orders used throughout.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Text form is comma separated (`6,4,2`), with `-` for the empty partition.
/// Exponent shorthand such as `3,1^2` is accepted on input.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Partition {
    parts: Vec<usize>,
}

/// Result of comparing two partitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrderRelation {
    Less,
    Greater,
    Equal,
    Incomparable,
}

impl From<Ordering> for OrderRelation {
    fn from(ord: Ordering) -> Self {
        match ord {
            Ordering::Less => OrderRelation::Less,
            Ordering::Greater => OrderRelation::Greater,
            Ordering::Equal => OrderRelation::Equal,
        }
    }
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse {
                what: "partition",
                input: format!("{parts:?}"),
                reason: "parts must be weakly decreasing".into(),
            });
        }
        if parts.contains(&0) {
            return Err(Error::Parse {
                what: "partition",
                input: format!("{parts:?}"),
                reason: "zero part before a positive part".into(),
            });
        }
        Ok(Partition { parts })
    }

    /// Skips validation; callers guarantee a weakly decreasing positive sequence.
    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The `i`-th part, 1-indexed; zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Whether the 1-indexed cell `(row, col)` lies in the Young diagram.
    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && self.part(row) >= col
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=first)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// True iff no part value occurs `e` or more times.
    pub fn is_e_regular(&self, e: i64) -> Result<bool> {
        if e < 2 {
            return Err(Error::InvalidE(e));
        }
        let e = e as usize;
        let mut run = 0;
        for (i, &p) in self.parts.iter().enumerate() {
            run = if i > 0 && self.parts[i - 1] == p {
                run + 1
            } else {
                1
            };
            if run >= e {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Dominance order on partitions of equal size.
    ///
    /// `Greater` means `other` is strictly dominated by `self`.
    pub fn dominance(&self, other: &Partition) -> Result<OrderRelation> {
        let (n, m) = (self.size(), other.size());
        if n != m {
            return Err(Error::SizeMismatch { left: n, right: m });
        }
        if self == other {
            return Ok(OrderRelation::Equal);
        }
        if dominated_by(other, self) {
            Ok(OrderRelation::Greater)
        } else if dominated_by(self, other) {
            Ok(OrderRelation::Less)
        } else {
            Ok(OrderRelation::Incomparable)
        }
    }

    /// Lexicographic comparison of the part sequences.
    pub fn lex(&self, other: &Partition) -> OrderRelation {
        self.parts.cmp(&other.parts).into()
    }
}

/// `mu` is dominated by `lambda`: `len(lambda) <= len(mu)` and every prefix sum
/// of `mu` up to `len(lambda)` is at most the matching prefix sum of `lambda`.
fn dominated_by(mu: &Partition, lambda: &Partition) -> bool {
    if lambda.len() > mu.len() {
        return false;
    }
    let (mut sm, mut sl) = (0, 0);
    for i in 1..=lambda.len() {
        sm += mu.part(i);
        sl += lambda.part(i);
        if sm > sl {
            return false;
        }
    }
    true
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let input = s.trim();
        let err = |reason: String| Error::Parse {
            what: "partition",
            input: input.to_string(),
            reason,
        };
        if input == "-" || input == "()" || input.is_empty() {
            return Ok(Partition::empty());
        }
        let body = input
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(input);
        let mut parts = Vec::new();
        for token in body.split(',').map(str::trim) {
            let (value, count) = match token.split_once('^') {
                Some((v, c)) => (v.trim(), c.trim()),
                None => (token, "1"),
            };
            let value: usize = value
                .parse()
                .map_err(|_| err(format!("bad part {token:?}")))?;
            let count: usize = count
                .parse()
                .map_err(|_| err(format!("bad exponent in {token:?}")))?;
            if value == 0 {
                return Err(err("parts must be positive".into()));
            }
            parts.extend(std::iter::repeat_n(value, count));
        }
        Partition::new(parts).map_err(|_| err("parts must be weakly decreasing".into()))
    }
}

impl TryFrom<String> for Partition {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Partition> for String {
    fn from(p: Partition) -> String {
        p.to_string()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}
