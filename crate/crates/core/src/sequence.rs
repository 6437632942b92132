//! Weight sequences of a circle subgroup fixing one component of the cycle.
//!
//! A [`MarkedSequence`] holds the isotropy weights `(k_2, ..., k_{n+2})` of
//! the chosen subgroup on the remaining components of one half of the
//! anticanonical cycle. Indices are 1-based as in the geometry: `k(2)` is the
//! first entry and `k(n + 2)` the last.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Deserialize)]
#[serde(try_from = "Vec<u64>")]
pub struct MarkedSequence {
    k: Vec<u64>,
}

impl MarkedSequence {
    /// Validates and wraps a weight vector.
    ///
    /// A sequence is valid when all entries are positive, both ends equal one
    /// and every interior entry divides the sum of its neighbours. The last
    /// condition is exactly what is needed to complete the unimodular chain
    /// of rays, so a sequence passes iff its half-fan exists.
    pub fn new(k: Vec<u64>) -> Result<Self> {
        validate(&k)?;
        Ok(MarkedSequence { k })
    }

    /// The base sequence `(1)` at `n = 0`.
    pub fn base() -> Self {
        MarkedSequence { k: vec![1] }
    }

    /// The semi-free sequence of `n + 1` ones.
    pub fn all_ones(n: usize) -> Self {
        MarkedSequence { k: vec![1; n + 1] }
    }

    /// Wraps without validation; callers must already know the sequence is valid.
    pub(crate) fn from_trusted(k: Vec<u64>) -> Self {
        debug_assert!(validate(&k).is_ok(), "untrusted sequence {k:?}");
        MarkedSequence { k }
    }

    pub fn n(&self) -> usize {
        self.k.len() - 1
    }

    /// Weight `k_i` for `2 <= i <= n + 2`.
    pub fn k(&self, i: usize) -> u64 {
        assert!(
            (2..=self.n() + 2).contains(&i),
            "index {i} out of range 2..={}",
            self.n() + 2
        );
        self.k[i - 2]
    }

    pub fn entries(&self) -> &[u64] {
        &self.k
    }

    pub fn max_entry(&self) -> u64 {
        self.k.iter().copied().max().unwrap_or(0)
    }

    pub fn is_semi_free(&self) -> bool {
        self.k.iter().all(|&x| x == 1)
    }

    pub fn reversed(&self) -> Self {
        let mut k = self.k.clone();
        k.reverse();
        MarkedSequence { k }
    }

    /// Lexicographic minimum of the sequence and its reversal.
    pub fn canonical(&self) -> Self {
        let r = self.reversed();
        if r < *self {
            r
        } else {
            self.clone()
        }
    }

    /// The contiguous piece `(k_from, ..., k_to)` as a sequence in its own
    /// right. Both ends must be one for the result to be valid.
    pub fn window(&self, from: usize, to: usize) -> Result<Self> {
        if from < 2 || to > self.n() + 2 || from > to {
            return Err(Error::InvalidArgument(format!(
                "window {from}..={to} outside 2..={}",
                self.n() + 2
            )));
        }
        MarkedSequence::new(self.k[from - 2..=to - 2].to_vec())
    }
}

fn validate(k: &[u64]) -> Result<()> {
    let bad = |msg: String| Err(Error::InvalidSequence(msg));
    if k.is_empty() {
        return bad("sequence is empty".into());
    }
    if let Some(pos) = k.iter().position(|&x| x == 0) {
        return bad(format!("entries must be positive (k_{} = 0)", pos + 2));
    }
    if k[0] != 1 {
        return bad("k_2 must equal 1".into());
    }
    if k[k.len() - 1] != 1 {
        return bad("k_{n+2} must equal 1".into());
    }
    for w in 1..k.len().saturating_sub(1) {
        let sum = k[w - 1]
            .checked_add(k[w + 1])
            .ok_or_else(|| Error::InvalidSequence("weight overflow".into()))?;
        if sum % k[w] != 0 {
            return bad(format!(
                "unimodular chain breaks at k_{}: {} does not divide k_{} + k_{} = {}",
                w + 2,
                k[w],
                w + 1,
                w + 3,
                sum
            ));
        }
    }
    Ok(())
}

impl fmt::Display for MarkedSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.k.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// Parses comma-separated positive integers, e.g. `1,2,5,3,1`. Surrounding
/// parentheses are tolerated.
impl FromStr for MarkedSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let k = t
            .split(',')
            .map(|p| {
                let p = p.trim();
                p.parse::<u64>().map_err(|_| {
                    Error::InvalidSequence(format!("'{p}' is not a non-negative integer"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        MarkedSequence::new(k)
    }
}

impl TryFrom<Vec<u64>> for MarkedSequence {
    type Error = Error;

    fn try_from(k: Vec<u64>) -> Result<Self> {
        MarkedSequence::new(k)
    }
}

impl Serialize for MarkedSequence {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.k.serialize(serializer)
    }
}
