//! Half-fans of the real toric surfaces and their dictionary with weight
//! sequences.
//!
//! The complete fan of the toric surface is centrally symmetric: its rays are
//! `v_1, ..., v_{n+2}` followed by their negatives. A [`HalfFan`] stores the
//! first half. Consecutive rays form lattice bases with positive orientation,
//! and the last ray closes up against `-v_1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{ensure_invariant, Error, Result};
use crate::sequence::MarkedSequence;

/// A primitive lattice vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RayVec {
    pub x: BigInt,
    pub y: BigInt,
}

impl RayVec {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Result<Self> {
        let r = RayVec {
            x: x.into(),
            y: y.into(),
        };
        if r.x.is_zero() && r.y.is_zero() {
            return Err(Error::InvalidFan("zero ray".into()));
        }
        if !r.x.gcd(&r.y).is_one() {
            return Err(Error::InvalidFan(format!("ray {r} is not primitive")));
        }
        Ok(r)
    }

    fn raw(x: BigInt, y: BigInt) -> Self {
        RayVec { x, y }
    }

    pub fn neg(&self) -> Self {
        RayVec::raw(-&self.x, -&self.y)
    }

    /// Determinant of the 2x2 matrix with columns `self`, `other`.
    pub fn det(&self, other: &RayVec) -> BigInt {
        &self.x * &other.y - &self.y * &other.x
    }

    fn add(&self, other: &RayVec) -> RayVec {
        RayVec::raw(&self.x + &other.x, &self.y + &other.y)
    }

    fn scale(&self, c: &BigInt) -> RayVec {
        RayVec::raw(&self.x * c, &self.y * c)
    }
}

impl std::fmt::Display for RayVec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Coordinates that fit in `i64` serialize as JSON numbers, larger ones as
/// decimal strings.
impl Serialize for RayVec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(2))?;
        for c in [&self.x, &self.y] {
            match c.to_i64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&c.to_string())?,
            }
        }
        seq.end()
    }
}

/// An integer 2x2 matrix of determinant one, acting on column vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Unimodular {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl Unimodular {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        if a * d - b * c != 1 {
            return Err(Error::InvalidArgument(format!(
                "matrix [[{a},{b}],[{c},{d}]] does not have determinant 1"
            )));
        }
        Ok(Unimodular {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        })
    }

    pub fn apply(&self, v: &RayVec) -> RayVec {
        RayVec::raw(
            &self.a * &v.x + &self.b * &v.y,
            &self.c * &v.x + &self.d * &v.y,
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfFan {
    rays: Vec<RayVec>,
}

impl HalfFan {
    /// Checks every half-fan invariant: primitivity, consecutive
    /// unimodularity, closure against `-v_1` and strict angular order.
    pub fn new(rays: Vec<RayVec>) -> Result<Self> {
        if rays.len() < 2 {
            return Err(Error::InvalidFan(format!(
                "a half-fan needs at least 2 rays, got {}",
                rays.len()
            )));
        }
        for r in &rays {
            RayVec::new(r.x.clone(), r.y.clone())?;
        }
        let one = BigInt::one();
        for (i, w) in rays.windows(2).enumerate() {
            if w[0].det(&w[1]) != one {
                return Err(Error::InvalidFan(format!(
                    "det(v_{}, v_{}) = {} instead of 1",
                    i + 1,
                    i + 2,
                    w[0].det(&w[1])
                )));
            }
        }
        let first = &rays[0];
        let last = &rays[rays.len() - 1];
        if last.det(&first.neg()) != one {
            return Err(Error::InvalidFan(
                "the last ray does not close up against -v_1".into(),
            ));
        }
        // Every later ray strictly left of v_1 keeps the chain inside one half-turn.
        for (i, r) in rays.iter().enumerate().skip(1) {
            if !first.det(r).is_positive() {
                return Err(Error::InvalidFan(format!(
                    "v_{} leaves the half-turn starting at v_1",
                    i + 1
                )));
            }
        }
        Ok(HalfFan { rays })
    }

    pub fn n(&self) -> usize {
        self.rays.len() - 2
    }

    pub fn rays(&self) -> &[RayVec] {
        &self.rays
    }

    /// Ray `v_i` for `1 <= i <= n + 2`.
    pub fn ray(&self, i: usize) -> &RayVec {
        &self.rays[i - 1]
    }

    /// All `2(n+2)` rays of the symmetric fan in counter-clockwise order.
    pub fn full_cycle(&self) -> Vec<RayVec> {
        self.rays
            .iter()
            .cloned()
            .chain(self.rays.iter().map(RayVec::neg))
            .collect()
    }

    /// Image under a lattice automorphism. Orientation is preserved, so the
    /// result is again a half-fan.
    pub fn transform(&self, g: &Unimodular) -> Result<HalfFan> {
        HalfFan::new(self.rays.iter().map(|r| g.apply(r)).collect())
    }

    /// The half-fan starting at ray `marked`, moved by the unique lattice
    /// automorphism sending the marked ray to `(1,0)` and its successor to
    /// `(0,1)`.
    pub fn normalized_at(&self, marked: usize) -> Result<HalfFan> {
        let rotated = rotate_half(self, marked)?;
        let (w1, w2) = (&rotated[0], &rotated[1]);
        // Inverse of the matrix with columns w1, w2 (determinant one).
        let g = Unimodular {
            a: w2.y.clone(),
            b: -&w2.x,
            c: -&w1.y,
            d: w1.x.clone(),
        };
        HalfFan::new(rotated.iter().map(|r| g.apply(r)).collect())
    }
}

impl Serialize for HalfFan {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.rays.serialize(serializer)
    }
}

fn rotate_half(fan: &HalfFan, marked: usize) -> Result<Vec<RayVec>> {
    let len = fan.n() + 2;
    if marked == 0 || marked > len {
        return Err(Error::InvalidArgument(format!(
            "marked index {marked} outside 1..={len}"
        )));
    }
    let cycle = fan.full_cycle();
    Ok((0..len)
        .map(|t| cycle[(marked - 1 + t) % cycle.len()].clone())
        .collect())
}

/// Rebuilds the half-fan of a weight sequence, normalized by `v_1 = (1,0)`
/// and `v_2 = (0,1)`, with `det(v_1, v_i) = k_i`.
pub fn fan_from_sequence(seq: &MarkedSequence) -> Result<HalfFan> {
    let k = seq.entries();
    let mut rays = vec![RayVec::raw(1.into(), 0.into())];
    let mut prev = RayVec::raw(0.into(), 1.into());
    if k[0] != 1 {
        return Err(Error::InvalidSequence("k_2 must equal 1".into()));
    }
    for (w, &kw) in k.iter().enumerate().skip(1) {
        // det(prev, next) = 1 with next.y = k fixes next.x = (prev.x * k - 1) / prev.y.
        let ky = BigInt::from(kw);
        let numer = &prev.x * &ky - BigInt::one();
        let (q, r) = numer.div_rem(&prev.y);
        if !r.is_zero() {
            return Err(Error::InvalidSequence(format!(
                "invalid sequence: unimodular chain breaks at k_{}",
                w + 2
            )));
        }
        let next = RayVec::raw(q, ky);
        rays.push(std::mem::replace(&mut prev, next));
    }
    rays.push(prev);
    HalfFan::new(rays).map_err(|e| Error::InvalidSequence(format!("invalid sequence: {e}")))
}

/// Reads the weight sequence seen from ray `marked`: the rays following it
/// counter-clockwise give `k_i = |det(w_1, w_i)|`.
pub fn sequence_from_fan(fan: &HalfFan, marked: usize) -> Result<MarkedSequence> {
    let rotated = rotate_half(fan, marked)?;
    let w1 = &rotated[0];
    let k = rotated[1..]
        .iter()
        .map(|w| {
            w1.det(w)
                .abs()
                .to_u64()
                .ok_or_else(|| Error::InvalidFan("weight exceeds 64 bits".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    MarkedSequence::new(k).map_err(|e| Error::Invariant(format!("fan produced {e}")))
}

/// Self-intersection numbers `(C_i)^2` of the curves of one half of the cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SelfIntersections {
    pub values: Vec<i64>,
}

impl SelfIntersections {
    /// `(C_i)^2` for `1 <= i <= n + 2`.
    pub fn get(&self, i: usize) -> i64 {
        self.values[i - 1]
    }

    /// Sum over the whole cycle of `2(n+2)` curves; the conjugate half
    /// repeats the same numbers.
    pub fn full_cycle_sum(&self) -> i64 {
        2 * self.values.iter().sum::<i64>()
    }
}

/// Solves `v_{i-1} + v_{i+1} = -(C_i)^2 v_i`, with the neighbours of the
/// boundary rays taken from the negated half.
pub fn self_intersections(fan: &HalfFan) -> Result<SelfIntersections> {
    let cycle = fan.full_cycle();
    let len = cycle.len();
    let half = fan.n() + 2;
    let mut values = Vec::with_capacity(half);
    for i in 0..half {
        let left = &cycle[(i + len - 1) % len];
        let right = &cycle[(i + 1) % len];
        let v = &cycle[i];
        let sum = left.add(right);
        // sum is parallel to v; recover the factor from a nonzero coordinate.
        let factor = if !v.x.is_zero() {
            sum.x.div_rem(&v.x)
        } else {
            sum.y.div_rem(&v.y)
        };
        ensure_invariant!(
            factor.1.is_zero() && v.scale(&factor.0) == sum,
            "neighbours of v_{} do not sum to a multiple of it",
            i + 1
        );
        let a = (-factor.0)
            .to_i64()
            .ok_or_else(|| Error::Invariant("self-intersection exceeds 64 bits".into()))?;
        values.push(a);
    }
    let si = SelfIntersections { values };
    let expected = 12 - 6 * half as i64;
    ensure_invariant!(
        si.full_cycle_sum() == expected,
        "self-intersections sum to {} instead of {}",
        si.full_cycle_sum(),
        expected
    );
    Ok(si)
}
