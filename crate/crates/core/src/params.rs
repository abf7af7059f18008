//! Validated abacus parameters.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Number of runners of the abacus. Always greater than two.
pub fn check_e(e: i64) -> Result<i64> {
    if e > 2 {
        Ok(e)
    } else {
        Err(Error::InvalidE(e))
    }
}

pub(crate) fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.abs()
}

/// A coprime pair `1 < d < e` with `e > 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPair")]
pub struct Params {
    d: i64,
    e: i64,
}

#[derive(Deserialize)]
struct RawPair {
    d: i64,
    e: i64,
}

impl TryFrom<RawPair> for Params {
    type Error = Error;

    fn try_from(raw: RawPair) -> Result<Self> {
        Params::new(raw.d, raw.e)
    }
}

impl Params {
    pub fn new(d: i64, e: i64) -> Result<Self> {
        if e > 2 && 1 < d && d < e && gcd(d, e) == 1 {
            Ok(Params { d, e })
        } else {
            Err(Error::InvalidPair { d, e })
        }
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn e(&self) -> i64 {
        self.e
    }
}

impl std::fmt::Display for Params {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}", self.d, self.e)
    }
}

impl std::str::FromStr for Params {
    type Err = Error;

    /// Parses `d:e`.
    fn from_str(s: &str) -> Result<Self> {
        let parse_err = |reason: &str| Error::Parse {
            what: "d:e pair",
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let (d, e) = s
            .trim()
            .split_once(':')
            .ok_or_else(|| parse_err("missing ':'"))?;
        let d = d.trim().parse().map_err(|_| parse_err("bad d"))?;
        let e = e.trim().parse().map_err(|_| parse_err("bad e"))?;
        Params::new(d, e)
    }
}
