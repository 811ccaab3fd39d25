//! Parameter arithmetic for combining codes: catalytic composition with
//! standard codes, composition of two entanglement-assisted codes, and
//! bootstrapping.
//!
//! These operate on `[[n,k;c]]` tuples only — no generator-level
//! concatenation. Distance does not compose by any known rule, so composite
//! codes report it as unknown.

use std::fmt;

use num_rational::Ratio;

use crate::{Error, Result};

/// An `[[n,k;c]]` parameter tuple, with an optional distance.
///
/// `k < c` is allowed: the net rate of a valid code may be zero or negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamTuple {
    pub n: u64,
    pub k: u64,
    pub c: u64,
    pub d: Option<u64>,
}

impl ParamTuple {
    pub fn new(n: u64, k: u64, c: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("n must be at least 1".into()));
        }
        if c > n {
            return Err(Error::Domain(format!("c = {c} cannot exceed n = {n}")));
        }
        Ok(ParamTuple { n, k, c, d: None })
    }

    pub fn with_distance(mut self, d: u64) -> Self {
        self.d = Some(d);
        self
    }

    /// Net logical qubits `k - c`; may be negative.
    pub fn net_k(&self) -> i64 {
        self.k as i64 - self.c as i64
    }

    pub fn rate(&self) -> Ratio<i64> {
        Ratio::new(self.k as i64, self.n as i64)
    }

    pub fn net_rate(&self) -> Ratio<i64> {
        Ratio::new(self.net_k(), self.n as i64)
    }
}

impl fmt::Display for ParamTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.d {
            Some(d) => write!(f, "[[{},{},{};{}]]", self.n, self.k, d, self.c),
            None => write!(f, "[[{},{};{}]]", self.n, self.k, self.c),
        }
    }
}

/// Protects the `c` ebits of an EAQECC with a standard `[[n',c;0]]` code,
/// yielding the standard code `[[n+n', k; 0]]`. Requires `std.k == ea.c` and
/// `std.c == 0`.
pub fn combine_with_standard(ea: &ParamTuple, std: &ParamTuple) -> Result<ParamTuple> {
    if std.c != 0 {
        return Err(Error::Composition(format!(
            "the protecting code must be standard (c = 0), got c = {}",
            std.c
        )));
    }
    if std.k != ea.c {
        return Err(Error::Composition(format!(
            "the protecting code must encode exactly the {} ebit(s), got k = {}",
            ea.c, std.k
        )));
    }
    Ok(ParamTuple {
        n: ea.n + std.n,
        k: ea.k,
        c: 0,
        d: None,
    })
}

/// Sends the ebit halves of `a` inside a second EAQECC block `b`, yielding
/// `[[n+n', k+k'-c; c']]`. Requires `b.k >= a.c`.
pub fn combine_ea(a: &ParamTuple, b: &ParamTuple) -> Result<ParamTuple> {
    if b.k < a.c {
        return Err(Error::Composition(format!(
            "the second code must carry the first one's ebits: k' = {} < c = {}",
            b.k, a.c
        )));
    }
    Ok(ParamTuple {
        n: a.n + b.n,
        k: a.k + b.k - a.c,
        c: b.c,
        d: None,
    })
}

/// Iterated self-composition: `M` copies of an `[[n,k;c]]` EAQECC chained
/// through their ebits give `[[Mn, M(k-c)+c; c]]`. As `M` grows the rate
/// approaches the net rate `(k-c)/n` while the entanglement rate `c/(Mn)`
/// vanishes. `M = 1` returns the code unchanged.
pub fn bootstrap(a: &ParamTuple, m: u64) -> Result<ParamTuple> {
    if m == 0 {
        return Err(Error::Domain(
            "bootstrap repetition count must be at least 1".into(),
        ));
    }
    if m == 1 {
        return Ok(*a);
    }
    if a.k < a.c {
        return Err(Error::Composition(format!(
            "bootstrapping needs k >= c to chain blocks, got k = {} < c = {}",
            a.k, a.c
        )));
    }
    Ok(ParamTuple {
        n: m * a.n,
        k: m * (a.k - a.c) + a.c,
        c: a.c,
        d: None,
    })
}
