//! Procedure (A), the integer `m`, the divisor `Y` and the regularity data.
//!
//! All indices are 1-based: weights run over `2..=n+2`, divisors `S_i^±`
//! over `1..=n+2`.

use serde::Serialize;

use crate::error::{ensure_invariant, Error, Result};
use crate::sequence::MarkedSequence;
use crate::toric_fan::{sequence_from_fan, HalfFan};

/// Traces longer than this are refused rather than materialized.
pub const MAX_TRACE_STEPS: u64 = 50_000_000;

/// The runs `(i_l, j_l)` decremented by Procedure (A), in order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProcedureTrace {
    pub n: usize,
    pub steps: Vec<(usize, usize)>,
}

impl ProcedureTrace {
    pub fn m(&self) -> usize {
        self.steps.len()
    }
}

/// Repeatedly decrements the leftmost maximal run of the largest entry
/// until the sequence vanishes.
pub fn procedure_a(seq: &MarkedSequence) -> Result<ProcedureTrace> {
    let mut cur = seq.entries().to_vec();
    let total: u64 = cur.iter().try_fold(0u64, |acc, &x| acc.checked_add(x)).ok_or_else(|| {
        Error::InvalidSequence("weight overflow".into())
    })?;
    if seq.max_entry() > MAX_TRACE_STEPS {
        return Err(Error::InvalidArgument(format!(
            "trace would exceed {MAX_TRACE_STEPS} steps"
        )));
    }
    let mut steps = Vec::new();
    while let Some(top) = cur.iter().copied().max().filter(|&x| x > 0) {
        let i = cur.iter().position(|&x| x == top).unwrap_or(0);
        let mut j = i;
        while j + 1 < cur.len() && cur[j + 1] == top {
            j += 1;
        }
        for x in &mut cur[i..=j] {
            *x -= 1;
        }
        steps.push((i + 2, j + 2));
        ensure_invariant!(
            (steps.len() as u64) <= total,
            "procedure exceeded the bound sum(k) = {total}"
        );
        if steps.len() as u64 > MAX_TRACE_STEPS {
            return Err(Error::InvalidArgument(format!(
                "trace exceeds {MAX_TRACE_STEPS} steps"
            )));
        }
    }
    let n = seq.n();
    ensure_invariant!(
        steps.last() == Some(&(2, n + 2)),
        "final step of procedure is {:?}, expected (2, {})",
        steps.last(),
        n + 2
    );
    ensure_invariant!(
        steps.len() as u64 >= seq.max_entry(),
        "m = {} is below max k = {}",
        steps.len(),
        seq.max_entry()
    );
    Ok(ProcedureTrace { n, steps })
}

/// Multiplicities of `S_i^+` and `S_i^-` in `Y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct YDivisor {
    pub plus: Vec<u64>,
    pub minus: Vec<u64>,
}

impl YDivisor {
    pub fn plus_at(&self, i: usize) -> u64 {
        self.plus[i - 1]
    }

    pub fn minus_at(&self, i: usize) -> u64 {
        self.minus[i - 1]
    }

    pub fn n(&self) -> usize {
        self.plus.len() - 2
    }

    /// `Y` as a formal sum, e.g. `S_1^+ + 2S_4^- + S_5^-`.
    pub fn display_sum(&self) -> String {
        let mut terms = Vec::new();
        for (sign, v) in [("+", &self.plus), ("-", &self.minus)] {
            for (idx, &c) in v.iter().enumerate() {
                match c {
                    0 => {}
                    1 => terms.push(format!("S_{}^{sign}", idx + 1)),
                    _ => terms.push(format!("{c}S_{}^{sign}", idx + 1)),
                }
            }
        }
        terms.join(" + ")
    }
}

/// `Y = sum over steps of (S_{i_l - 1}^+ + S_{j_l}^-)`.
pub fn build_y(trace: &ProcedureTrace) -> Result<YDivisor> {
    let len = trace.n + 2;
    let mut plus = vec![0u64; len];
    let mut minus = vec![0u64; len];
    for &(i, j) in &trace.steps {
        plus[i - 2] += 1;
        minus[j - 1] += 1;
    }
    let m = trace.m() as u64;
    ensure_invariant!(
        plus.iter().zip(&minus).all(|(&p, &q)| p == 0 || q == 0),
        "Y contains some S_j^+ and S_j^- together"
    );
    ensure_invariant!(
        plus[0] == 1 && minus[0] == 0 && minus[len - 1] == 1 && plus[len - 1] == 0,
        "Y does not contain S_1^+ and S_(n+2)^- exactly once"
    );
    ensure_invariant!(
        plus.iter().sum::<u64>() == m && minus.iter().sum::<u64>() == m,
        "plus/minus multiplicities do not both sum to m = {m}"
    );
    Ok(YDivisor { plus, minus })
}

/// Multiplicities `l_i` of `S_i^+` in `Y + Ybar`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct LVector {
    pub l: Vec<u64>,
}

impl LVector {
    pub fn from_values(l: Vec<u64>) -> Result<Self> {
        if l.len() < 2 || l[0] != 1 || l[l.len() - 1] != 1 {
            return Err(Error::InvalidArgument(format!(
                "l-vector {l:?} must have length >= 2 and l_1 = l_(n+2) = 1"
            )));
        }
        Ok(LVector { l })
    }

    /// `l_i` for `1 <= i <= n + 2`.
    pub fn get(&self, i: usize) -> u64 {
        self.l[i - 1]
    }

    pub fn n(&self) -> usize {
        self.l.len() - 2
    }

    /// Half the total multiplicity.
    pub fn m(&self) -> u64 {
        self.l.iter().sum::<u64>() / 2
    }

    pub fn max(&self) -> u64 {
        self.l.iter().copied().max().unwrap_or(0)
    }
}

pub fn l_vector(y: &YDivisor) -> LVector {
    LVector {
        l: y.plus.iter().zip(&y.minus).map(|(p, q)| p + q).collect(),
    }
}

/// Multiplicities of `Y|_S` along the curves `C_i` and `Cbar_i`, indexed
/// `1..=n+2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Restriction {
    pub c: Vec<u64>,
    pub c_bar: Vec<u64>,
}

/// Accumulates the half-cycle restrictions of every `S_a^+` and `S_b^-` in
/// `Y` and checks the outcome against `m C + f - fbar`.
pub fn restriction_multiplicities(y: &YDivisor, seq: &MarkedSequence) -> Result<Restriction> {
    let half = seq.n() + 2;
    if y.plus.len() != half {
        return Err(Error::InvalidArgument(
            "Y and the sequence have different lengths".into(),
        ));
    }
    // Cycle positions: C_i sits at i - 1, Cbar_i at half + i - 1.
    let mut cycle = vec![0u64; 2 * half];
    let mut add_arc = |start: usize, mult: u64| {
        for t in 0..half {
            cycle[(start + t) % (2 * half)] += mult;
        }
    };
    for a in 1..=half {
        // S_a^+ restricts to C_{a+1} + ... + C_{n+2} + Cbar_1 + ... + Cbar_a.
        add_arc(a, y.plus_at(a));
        // S_b^- restricts to Cbar_{b+1} + ... + Cbar_{n+2} + C_1 + ... + C_b.
        add_arc(half + a, y.minus_at(a));
    }
    let res = Restriction {
        c: cycle[..half].to_vec(),
        c_bar: cycle[half..].to_vec(),
    };
    let m = y.plus.iter().sum::<u64>();
    ensure_invariant!(
        res.c[0] == m && res.c_bar[0] == m,
        "restriction to C_1, Cbar_1 is ({}, {}), expected ({m}, {m})",
        res.c[0],
        res.c_bar[0]
    );
    for i in 2..=half {
        let k = seq.k(i);
        ensure_invariant!(
            res.c[i - 1] == m + k && m >= k && res.c_bar[i - 1] == m - k,
            "restriction to C_{i}, Cbar_{i} is ({}, {}), expected (m + k, m - k) with m = {m}, k = {k}",
            res.c[i - 1],
            res.c_bar[i - 1]
        );
    }
    Ok(res)
}

/// Position of the fixed component relative to the runs of regular
/// components next to it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularityReport {
    /// Indices `j` with `k_j = 1`.
    pub regular: Vec<usize>,
    pub semi_free: bool,
    pub r: Option<usize>,
    pub s: Option<usize>,
    pub slack: Option<i64>,
    pub deformable: Option<bool>,
}

pub const SEMI_FREE_NOTICE: &str = "semi-free: handled by LeBrun theory";

pub fn regularity(seq: &MarkedSequence) -> RegularityReport {
    let n = seq.n();
    let regular: Vec<usize> = (2..=n + 2).filter(|&j| seq.k(j) == 1).collect();
    if seq.is_semi_free() {
        return RegularityReport {
            regular,
            semi_free: true,
            r: None,
            s: None,
            slack: None,
            deformable: None,
        };
    }
    let r = (2..=n + 2).take_while(|&j| seq.k(j) == 1).last().unwrap_or(1);
    let s = (2..=n + 2).rev().take_while(|&j| seq.k(j) == 1).last().unwrap_or(n + 3);
    let slack = n as i64 + r as i64 - s as i64;
    RegularityReport {
        regular,
        semi_free: false,
        r: Some(r),
        s: Some(s),
        slack: Some(slack),
        deformable: Some(slack > 0),
    }
}

/// True iff some marked ray of the fan carries the semi-free weights, that
/// is, some choice of fixed component gives `m = 1`.
pub fn is_lebrun(fan: &HalfFan) -> Result<bool> {
    for mark in 1..=fan.n() + 2 {
        if sequence_from_fan(fan, mark)?.is_semi_free() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Everything computed from a sequence by this module.
#[derive(Debug, Clone)]
pub struct SequenceInvariants {
    pub seq: MarkedSequence,
    pub trace: ProcedureTrace,
    pub y: YDivisor,
    pub l: LVector,
    pub restriction: Restriction,
    pub regularity: RegularityReport,
}

impl SequenceInvariants {
    pub fn compute(seq: &MarkedSequence) -> Result<Self> {
        let trace = procedure_a(seq)?;
        let y = build_y(&trace)?;
        let l = l_vector(&y);
        ensure_invariant!(
            l.l.iter().sum::<u64>() == 2 * trace.m() as u64,
            "sum of l is not 2m"
        );
        let restriction = restriction_multiplicities(&y, seq)?;
        Ok(SequenceInvariants {
            seq: seq.clone(),
            regularity: regularity(seq),
            trace,
            y,
            l,
            restriction,
        })
    }

    pub fn m(&self) -> usize {
        self.trace.m()
    }
}

/// Flat JSON shape `{n, k, m, trace, l_plus, l_minus, l, r, s, slack, deformable}`.
impl Serialize for SequenceInvariants {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Flat<'a> {
            n: usize,
            k: &'a MarkedSequence,
            m: usize,
            trace: &'a [(usize, usize)],
            l_plus: &'a [u64],
            l_minus: &'a [u64],
            l: &'a LVector,
            r: Option<usize>,
            s: Option<usize>,
            slack: Option<i64>,
            deformable: Option<bool>,
        }
        Flat {
            n: self.seq.n(),
            k: &self.seq,
            m: self.m(),
            trace: &self.trace.steps,
            l_plus: &self.y.plus,
            l_minus: &self.y.minus,
            l: &self.l,
            r: self.regularity.r,
            s: self.regularity.s,
            slack: self.regularity.slack,
            deformable: self.regularity.deformable,
        }
        .serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toric_fan::fan_from_sequence;

    fn inv(s: &str) -> SequenceInvariants {
        SequenceInvariants::compute(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn worked_m_values() {
        assert_eq!(inv("1,2,1,2,1").m(), 3);
        assert_eq!(inv("1,2,5,13,8,3,1").m(), 13);
        let ones = inv("1,1,1,1");
        assert_eq!(ones.trace.steps, vec![(2, 5)]);
    }

    #[test]
    fn trace_and_y_of_1_2_5_3_1() {
        let x = inv("1,2,5,3,1");
        assert_eq!(x.trace.steps, vec![(4, 4), (4, 4), (4, 5), (3, 5), (2, 6)]);
        assert_eq!(x.y.plus, vec![1, 1, 3, 0, 0, 0]);
        assert_eq!(x.y.minus, vec![0, 0, 0, 2, 2, 1]);
        assert_eq!(x.l.l, vec![1, 1, 3, 2, 2, 1]);
    }

    #[test]
    fn y_of_1_2_3_1() {
        let x = inv("1,2,3,1");
        assert_eq!(x.trace.steps, vec![(4, 4), (3, 4), (2, 5)]);
        assert_eq!(x.y.plus, vec![1, 1, 1, 0, 0]);
        assert_eq!(x.y.minus, vec![0, 0, 0, 2, 1]);
        assert_eq!(x.y.display_sum(), "S_1^+ + S_2^+ + S_3^+ + 2S_4^- + S_5^-");
    }

    #[test]
    fn semi_free_y() {
        let x = inv("1,1,1");
        assert_eq!(x.y.plus, vec![1, 0, 0, 0]);
        assert_eq!(x.y.minus, vec![0, 0, 0, 1]);
        assert_eq!(x.restriction.c, vec![1, 2, 2, 2]);
        assert_eq!(x.restriction.c_bar, vec![1, 0, 0, 0]);
    }

    #[test]
    fn l_vectors() {
        assert_eq!(inv("1,2,3,1").l.l, vec![1, 1, 1, 2, 1]);
        assert_eq!(inv("1,2,5,8,3,1").l.l, vec![1, 1, 3, 3, 5, 2, 1]);
        let x = inv("1,2,1,2,1");
        assert_eq!(x.trace.steps, vec![(3, 3), (5, 5), (2, 6)]);
        assert_eq!(x.l.l, vec![1, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn restrictions() {
        let x = inv("1,2,3,1");
        assert_eq!(x.restriction.c, vec![3, 4, 5, 6, 4]);
        assert_eq!(x.restriction.c_bar, vec![3, 2, 1, 0, 2]);
        let x = inv("1,2,1,2,1");
        assert_eq!(x.restriction.c[1..], [4, 5, 4, 5, 4]);
        assert_eq!(x.restriction.c_bar[1..], [2, 1, 2, 1, 2]);
    }

    #[test]
    fn regularity_examples() {
        let r = regularity(&"1,2,3,1,1".parse().unwrap());
        assert_eq!((r.r, r.s, r.slack, r.deformable), (Some(2), Some(5), Some(1), Some(true)));
        let r = regularity(&"1,2,3,4,1".parse().unwrap());
        assert_eq!((r.r, r.s, r.slack, r.deformable), (Some(2), Some(6), Some(0), Some(false)));
        let r = regularity(&"1,2,1,2,1,1,1,1".parse().unwrap());
        assert_eq!(r.slack, Some(3));
        let r = regularity(&MarkedSequence::all_ones(3));
        assert!(r.semi_free && r.r.is_none() && r.slack.is_none());
        assert_eq!(r.regular, vec![2, 3, 4, 5]);
    }

    #[test]
    fn lebrun_detection() {
        assert!(is_lebrun(&fan_from_sequence(&MarkedSequence::base()).unwrap()).unwrap());
        assert!(is_lebrun(&fan_from_sequence(&"1,2,3,1".parse().unwrap()).unwrap()).unwrap());
        assert!(is_lebrun(&fan_from_sequence(&"1,2,3,4,1".parse().unwrap()).unwrap()).unwrap());
        assert!(!is_lebrun(&fan_from_sequence(&"1,2,5,3,1".parse().unwrap()).unwrap()).unwrap());
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(inv("1,2,1")).unwrap();
        assert_eq!(v["m"], 2);
        assert_eq!(v["k"], serde_json::json!([1, 2, 1]));
        assert_eq!(v["trace"], serde_json::json!([[3, 3], [2, 4]]));
        assert_eq!(v["slack"], 0);
        assert_eq!(v["deformable"], false);
    }
}
