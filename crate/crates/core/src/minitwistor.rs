//! The projective model `z_{m+1} z_{m+2} = Q(z_0, ..., z_m)` of the
//! minitwistor space in `CP^{m+2}`, with its singularities and fibre data.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{ensure_invariant, Error, Result};
use crate::invariants::{LVector, SequenceInvariants};
use crate::rational::{format_rational, latex_abs_rational, serialize_rationals, ExtRational};
use crate::sequence::MarkedSequence;

/// The `n + 2` marked points `lambda_1 = 0 < lambda_2 < ... < lambda_{n+1} <
/// lambda_{n+2} = inf` on the parameter line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct ConformalInvariant {
    lambdas: Vec<ExtRational>,
}

impl ConformalInvariant {
    /// `(0, 1, 2, ..., n, inf)`.
    pub fn default_for(n: usize) -> Self {
        let mut lambdas: Vec<ExtRational> = (0..=n as i64).map(ExtRational::integer).collect();
        lambdas.push(ExtRational::Infinity);
        ConformalInvariant { lambdas }
    }

    /// Builds from the `n` interior values. A strictly decreasing negative
    /// list is the same configuration with the opposite orientation and is
    /// normalized by negation.
    pub fn from_interior(interior: Vec<BigRational>) -> Result<Self> {
        let decreasing = interior.windows(2).all(|w| w[0] > w[1]);
        let interior = if interior.len() > 1 && decreasing && interior.iter().all(|q| q.is_negative()) {
            interior.into_iter().map(|q| -q).collect()
        } else if interior.len() == 1 && interior[0].is_negative() {
            vec![-interior[0].clone()]
        } else {
            interior
        };
        if let Some(bad) = interior.iter().find(|q| !q.is_positive()) {
            return Err(Error::InvalidLambda(format!(
                "interior value {} must lie strictly between 0 and inf",
                format_rational(bad)
            )));
        }
        if !interior.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidLambda(
                "interior values must be strictly increasing".into(),
            ));
        }
        let mut lambdas = vec![ExtRational::zero()];
        lambdas.extend(interior.into_iter().map(ExtRational::Finite));
        lambdas.push(ExtRational::Infinity);
        Ok(ConformalInvariant { lambdas })
    }

    /// Parses either the `n` interior values or the full list of `n + 2`
    /// values starting with `0` and ending with `inf`.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let vals = s
            .split(',')
            .map(|p| p.parse::<ExtRational>().map_err(|e| Error::InvalidLambda(e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        let interior = if vals.len() == n + 2 {
            if vals[0] != ExtRational::zero() || !vals[n + 1].is_infinite() {
                return Err(Error::InvalidLambda(
                    "a full list must start with 0 and end with inf".into(),
                ));
            }
            vals[1..=n].to_vec()
        } else if vals.len() == n {
            vals
        } else {
            return Err(Error::InvalidLambda(format!(
                "expected {n} interior values or {} values in total, got {}",
                n + 2,
                vals.len()
            )));
        };
        let interior = interior
            .into_iter()
            .map(|v| match v {
                ExtRational::Finite(q) => Ok(q),
                ExtRational::Infinity => Err(Error::InvalidLambda(
                    "only lambda_(n+2) may be inf".into(),
                )),
            })
            .collect::<Result<Vec<_>>>()?;
        ConformalInvariant::from_interior(interior)
    }

    pub fn n(&self) -> usize {
        self.lambdas.len() - 2
    }

    /// `lambda_i` for `1 <= i <= n + 2`.
    pub fn get(&self, i: usize) -> &ExtRational {
        &self.lambdas[i - 1]
    }

    pub fn values(&self) -> &[ExtRational] {
        &self.lambdas
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Sign {
    #[default]
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "1" | "+1" | "+" => Ok(Sign::Plus),
            "-1" | "-" => Ok(Sign::Minus),
            other => Err(Error::InvalidArgument(format!(
                "c must be +1 or -1, got '{other}'"
            ))),
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_i32(self.as_i32())
    }
}

/// Homogeneous form in `u_1, u_{n+2}`; `coefficients[d]` multiplies
/// `u_1^d u_{n+2}^{degree - d}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BinaryForm {
    pub degree: usize,
    #[serde(serialize_with = "serialize_rationals")]
    pub coefficients: Vec<BigRational>,
}

impl BinaryForm {
    pub fn zero(degree: usize) -> Self {
        BinaryForm {
            degree,
            coefficients: vec![BigRational::zero(); degree + 1],
        }
    }

    fn constant(c: BigRational) -> Self {
        BinaryForm {
            degree: 0,
            coefficients: vec![c],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Zero::is_zero)
    }

    /// Product with `a u_1 + b u_{n+2}`.
    fn mul_linear(&self, a: &BigRational, b: &BigRational) -> BinaryForm {
        let mut out = vec![BigRational::zero(); self.degree + 2];
        for (d, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            out[d + 1] += c * a;
            out[d] += c * b;
        }
        BinaryForm {
            degree: self.degree + 1,
            coefficients: out,
        }
    }

    /// Text rendering in the variables `u1`, `u{n+2}`.
    pub fn to_text(&self, second: &str) -> String {
        let terms: Vec<(BigRational, String)> = (0..=self.degree)
            .rev()
            .filter(|&d| !self.coefficients[d].is_zero())
            .map(|d| {
                let mono = [power("u1", d), power(second, self.degree - d)]
                    .into_iter()
                    .filter(|s| !s.is_empty())
                    .collect::<Vec<_>>()
                    .join("*");
                (self.coefficients[d].clone(), mono)
            })
            .collect();
        join_terms(&terms, "*", format_rational)
    }
}

fn power(var: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

/// Joins signed terms; coefficients of absolute value one are elided in
/// front of non-empty monomials.
fn join_terms(
    terms: &[(BigRational, String)],
    times: &str,
    fmt_abs: impl Fn(&BigRational) -> String,
) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (idx, (c, mono)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        match (idx, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let a = c.abs();
        if mono.is_empty() {
            out.push_str(&fmt_abs(&a));
        } else if a.is_one() {
            out.push_str(mono);
        } else {
            out.push_str(&fmt_abs(&a));
            out.push_str(times);
            out.push_str(mono);
        }
    }
    out
}

/// Expands `c u_1 prod_{i=2}^{n+1} (u_1 - lambda_i u_{n+2})^{l_i} u_{n+2}`.
pub fn rhs_polynomial(l: &LVector, lambdas: &ConformalInvariant, c: Sign) -> Result<BinaryForm> {
    let n = l.n();
    if lambdas.n() != n {
        return Err(Error::InvalidLambda(format!(
            "need {} conformal invariants for n = {n}, got {}",
            n + 2,
            lambdas.n() + 2
        )));
    }
    if l.get(1) != 1 || l.get(n + 2) != 1 {
        return Err(Error::InvalidArgument("l_1 and l_(n+2) must equal 1".into()));
    }
    let one = BigRational::one();
    let zero = BigRational::zero();
    let lead = BigRational::from_integer(BigInt::from(c.as_i32()));
    let mut form = BinaryForm::constant(lead).mul_linear(&one, &zero);
    for i in 2..=n + 1 {
        let lam = lambdas.get(i).as_finite().ok_or_else(|| {
            Error::InvalidLambda(format!("lambda_{i} must be finite"))
        })?;
        let root = -lam;
        for _ in 0..l.get(i) {
            form = form.mul_linear(&one, &root);
        }
    }
    form = form.mul_linear(&zero, &one);
    let two_m = l.l.iter().sum::<u64>() as usize;
    ensure_invariant!(
        form.degree == two_m,
        "right-hand side has degree {}, expected 2m = {two_m}",
        form.degree
    );
    Ok(form)
}

/// Quadratic form in `z_0, ..., z_m`, stored as `(a, b) -> q_ab` with `a <= b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticForm {
    pub m: usize,
    pub coefficients: BTreeMap<(usize, usize), BigRational>,
}

impl QuadraticForm {
    pub fn zero(m: usize) -> Self {
        QuadraticForm {
            m,
            coefficients: BTreeMap::new(),
        }
    }

    /// Adds `c z_a z_b`.
    pub fn add_term(&mut self, a: usize, b: usize, c: BigRational) -> Result<()> {
        if a > self.m || b > self.m {
            return Err(Error::InvalidArgument(format!(
                "monomial z_{a} z_{b} outside z_0..z_{}",
                self.m
            )));
        }
        let key = (a.min(b), a.max(b));
        let entry = self.coefficients.entry(key).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coefficients.remove(&key);
        }
        Ok(())
    }

    /// Substitutes `z_d = u_1^d u_{n+2}^{m-d}`.
    pub fn pullback(&self) -> BinaryForm {
        let mut out = BinaryForm::zero(2 * self.m);
        for (&(a, b), c) in &self.coefficients {
            out.coefficients[a + b] += c;
        }
        out
    }

    /// Equality modulo the ideal of the rational normal curve of degree `m`.
    pub fn equivalent(&self, other: &QuadraticForm) -> bool {
        self.m == other.m && self.pullback() == other.pullback()
    }

    /// Terms ordered by decreasing `a + b`, then decreasing `b`.
    fn ordered_terms(&self) -> Vec<(&(usize, usize), &BigRational)> {
        let mut t: Vec<_> = self.coefficients.iter().collect();
        t.sort_by_key(|&(&(a, b), _)| std::cmp::Reverse((a + b, b)));
        t
    }

    pub fn to_latex(&self) -> String {
        let terms: Vec<(BigRational, String)> = self
            .ordered_terms()
            .into_iter()
            .map(|(&(a, b), c)| {
                let mono = if a == b {
                    format!("{}^2", latex_var(a))
                } else {
                    format!("{}{}", latex_var(a), latex_var(b))
                };
                (c.clone(), mono)
            })
            .collect();
        join_terms(&terms, "", latex_abs_rational)
    }

    pub fn to_text(&self) -> String {
        let terms: Vec<(BigRational, String)> = self
            .ordered_terms()
            .into_iter()
            .map(|(&(a, b), c)| {
                let mono = if a == b {
                    format!("z{a}^2")
                } else {
                    format!("z{a}*z{b}")
                };
                (c.clone(), mono)
            })
            .collect();
        join_terms(&terms, "*", format_rational)
    }
}

fn latex_var(i: usize) -> String {
    if i < 10 {
        format!("z_{i}")
    } else {
        format!("z_{{{i}}}")
    }
}

impl Serialize for QuadraticForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term {
            a: usize,
            b: usize,
            coefficient: String,
        }
        #[derive(Serialize)]
        struct Q {
            m: usize,
            terms: Vec<Term>,
        }
        Q {
            m: self.m,
            terms: self
                .coefficients
                .iter()
                .map(|(&(a, b), c)| Term {
                    a,
                    b,
                    coefficient: format_rational(c),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

/// Balanced split: the coefficient of `u_1^d u_{n+2}^{2m-d}` goes to
/// `z_{ceil(d/2)} z_{floor(d/2)}`.
pub fn quadratic_split(form: &BinaryForm, m: usize) -> Result<QuadraticForm> {
    if form.degree != 2 * m {
        return Err(Error::InvalidArgument(format!(
            "form of degree {} cannot be split over z_0..z_{m}",
            form.degree
        )));
    }
    let mut q = QuadraticForm::zero(m);
    for (d, c) in form.coefficients.iter().enumerate() {
        if !c.is_zero() {
            q.add_term(d / 2, d.div_ceil(2), c.clone())?;
        }
    }
    ensure_invariant!(q.pullback() == *form, "split does not pull back to the form");
    Ok(q)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum SingularityRecord {
    /// The conjugate pair `P_inf`, `conj(P_inf)` of cyclic quotient
    /// singularities `C^2 / Z_order`.
    #[serde(rename = "cyclic-quotient-pair")]
    CyclicQuotientPair { order: u64, location: String },
    /// A real `A_order` singularity over `lambda_index`.
    #[serde(rename = "real-A")]
    RealA {
        order: u64,
        index: usize,
        location: ExtRational,
    },
}

impl fmt::Display for SingularityRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SingularityRecord::CyclicQuotientPair { order, .. } => {
                write!(f, "C^2/Z_{order} at the conjugate pair P_inf, conj(P_inf)")
            }
            SingularityRecord::RealA {
                order,
                index,
                location,
            } => write!(f, "real A_{order} at lambda_{index} = {location}"),
        }
    }
}

pub const CONJUGATE_PAIR_AT_INFINITY: &str = "P_inf/conj(P_inf)";

pub fn singularities(l: &LVector, lambdas: &ConformalInvariant, m: u64) -> Vec<SingularityRecord> {
    let mut out = Vec::new();
    if m > 1 {
        out.push(SingularityRecord::CyclicQuotientPair {
            order: m,
            location: CONJUGATE_PAIR_AT_INFINITY.into(),
        });
    }
    for i in 1..=l.n() + 2 {
        if l.get(i) > 1 {
            out.push(SingularityRecord::RealA {
                order: l.get(i) - 1,
                index: i,
                location: lambdas.get(i).clone(),
            });
        }
    }
    out
}

/// A marked point of the parameter line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberPoint {
    pub index: usize,
    pub lambda: ExtRational,
}

/// Marked points over which the fibre is reducible: `{lambda_i : l_i > 0}`.
/// The fibre over `inf` corresponds to the point `(0, ..., 0, 1)`.
pub fn reducible_fibers(l: &LVector, lambdas: &ConformalInvariant) -> Vec<FiberPoint> {
    fibers_where(l, lambdas, |x| x > 0)
}

pub fn irreducible_marked_fibers(l: &LVector, lambdas: &ConformalInvariant) -> Vec<FiberPoint> {
    fibers_where(l, lambdas, |x| x == 0)
}

fn fibers_where(
    l: &LVector,
    lambdas: &ConformalInvariant,
    pred: impl Fn(u64) -> bool,
) -> Vec<FiberPoint> {
    (1..=l.n() + 2)
        .filter(|&i| pred(l.get(i)))
        .map(|i| FiberPoint {
            index: i,
            lambda: lambdas.get(i).clone(),
        })
        .collect()
}

/// Number of reducible fibres minus three; undefined for `m = 1`.
pub fn moduli_dimension(l: &LVector) -> Option<i64> {
    if l.m() < 2 {
        return None;
    }
    Some(l.l.iter().filter(|&&x| x > 0).count() as i64 - 3)
}

/// Indices `i` with `l_i = 0`; the twistor line over such a point is fixed.
pub fn fixed_lines(l: &LVector) -> Vec<usize> {
    (1..=l.n() + 2).filter(|&i| l.get(i) == 0).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct MinitwistorModel {
    pub n: usize,
    pub m: usize,
    pub lambdas: ConformalInvariant,
    pub c_sign: Sign,
    pub rhs: BinaryForm,
    pub q: QuadraticForm,
    pub ambient_dim: usize,
    pub surface_degree: usize,
    pub dim_vm: usize,
    pub dim_wm: usize,
    pub singularities: Vec<SingularityRecord>,
    pub reducible_fibers: Vec<FiberPoint>,
    pub irreducible_marked_fibers: Vec<FiberPoint>,
    pub moduli_dim: Option<i64>,
    pub fixed_lines: Vec<usize>,
    pub equation_latex: String,
    pub equation_text: String,
}

impl MinitwistorModel {
    pub fn build(l: &LVector, lambdas: &ConformalInvariant, c: Sign) -> Result<Self> {
        let m = l.m() as usize;
        let n = l.n();
        let rhs = rhs_polynomial(l, lambdas, c)?;
        let q = quadratic_split(&rhs, m)?;
        let equation_latex = format!(
            "{}{} = {}",
            latex_var(m + 1),
            latex_var(m + 2),
            q.to_latex()
        );
        let equation_text = format!("z{}*z{} = {}", m + 1, m + 2, q.to_text());
        let model = MinitwistorModel {
            n,
            m,
            lambdas: lambdas.clone(),
            c_sign: c,
            ambient_dim: m + 2,
            surface_degree: rhs.degree,
            dim_vm: m + 1,
            dim_wm: m + 3,
            singularities: singularities(l, lambdas, m as u64),
            reducible_fibers: reducible_fibers(l, lambdas),
            irreducible_marked_fibers: irreducible_marked_fibers(l, lambdas),
            moduli_dim: moduli_dimension(l),
            fixed_lines: fixed_lines(l),
            rhs,
            q,
            equation_latex,
            equation_text,
        };
        ensure_invariant!(
            model.surface_degree == 2 * m,
            "surface degree {} differs from 2m",
            model.surface_degree
        );
        ensure_invariant!(
            (m == 1) == model.singularities.is_empty(),
            "singularity list inconsistent with m = {m}"
        );
        Ok(model)
    }

    pub fn for_sequence(seq: &MarkedSequence, lambdas: Option<&ConformalInvariant>, c: Sign) -> Result<Self> {
        let inv = SequenceInvariants::compute(seq)?;
        let default = ConformalInvariant::default_for(seq.n());
        MinitwistorModel::build(&inv.l, lambdas.unwrap_or(&default), c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    fn lv(v: &[u64]) -> LVector {
        LVector::from_values(v.to_vec()).unwrap()
    }

    #[test]
    fn semi_free_rhs_is_u1_un2() {
        let f = rhs_polynomial(&lv(&[1, 0, 0, 1]), &ConformalInvariant::default_for(2), Sign::Plus).unwrap();
        assert_eq!(f.degree, 2);
        assert_eq!(f.coefficients, vec![q(0), q(1), q(0)]);
        let split = quadratic_split(&f, 1).unwrap();
        assert_eq!(split.to_latex(), "z_0z_1");
    }

    #[test]
    fn rhs_of_1_2_1() {
        let f = rhs_polynomial(&lv(&[1, 1, 1, 1]), &ConformalInvariant::default_for(2), Sign::Plus).unwrap();
        assert_eq!(f.coefficients, vec![q(0), q(2), q(-3), q(1), q(0)]);
        assert_eq!(f.to_text("u4"), "u1^3*u4 - 3*u1^2*u4^2 + 2*u1*u4^3");
        let split = quadratic_split(&f, 2).unwrap();
        assert_eq!(split.to_latex(), "z_1z_2 - 3z_1^2 + 2z_0z_1");
        assert_eq!(split.to_text(), "z1*z2 - 3*z1^2 + 2*z0*z1");
    }

    #[test]
    fn rhs_of_1_2_3_1() {
        let l = lv(&[1, 1, 1, 2, 1]);
        let f = rhs_polynomial(&l, &ConformalInvariant::default_for(3), Sign::Plus).unwrap();
        assert_eq!(f.degree, 6);
        assert_eq!(f.coefficients[5], q(1));
        // u1 (u1 - u5)(u1 - 2u5)(u1 - 3u5)^2 u5
        assert_eq!(f.coefficients, vec![q(0), q(18), q(-39), q(29), q(-9), q(1), q(0)]);
        let neg = rhs_polynomial(&l, &ConformalInvariant::default_for(3), Sign::Minus).unwrap();
        assert_eq!(neg.coefficients[5], q(-1));
    }

    #[test]
    fn comparator_accepts_other_splits() {
        let f = rhs_polynomial(&lv(&[1, 1, 1, 1]), &ConformalInvariant::default_for(2), Sign::Plus).unwrap();
        let a = quadratic_split(&f, 2).unwrap();
        let mut b = QuadraticForm::zero(2);
        b.add_term(1, 2, q(1)).unwrap();
        b.add_term(0, 2, q(-3)).unwrap();
        b.add_term(0, 1, q(2)).unwrap();
        assert!(a.equivalent(&b));
        assert_ne!(a, b);
        b.add_term(0, 0, q(1)).unwrap();
        assert!(!a.equivalent(&b));
        assert!(quadratic_split(&BinaryForm::zero(4), 2).unwrap().coefficients.is_empty());
    }

    #[test]
    fn latex_braces_two_digit_indices() {
        let mut f = QuadraticForm::zero(12);
        f.add_term(11, 12, q(-1)).unwrap();
        f.add_term(3, 3, BigRational::new(1.into(), 2.into())).unwrap();
        assert_eq!(f.to_latex(), "-z_{11}z_{12} + \\frac{1}{2}z_3^2");
    }

    #[test]
    fn singularities_of_1_2_5_3_1() {
        let l = lv(&[1, 1, 3, 2, 2, 1]);
        let lam = ConformalInvariant::default_for(4);
        let s = singularities(&l, &lam, 5);
        assert_eq!(s.len(), 4);
        assert!(matches!(s[0], SingularityRecord::CyclicQuotientPair { order: 5, .. }));
        let real: Vec<(u64, usize)> = s[1..]
            .iter()
            .map(|r| match r {
                SingularityRecord::RealA { order, index, .. } => (*order, *index),
                _ => unreachable!(),
            })
            .collect();
        assert_eq!(real, vec![(2, 3), (1, 4), (1, 5)]);
    }

    #[test]
    fn fibers_and_moduli() {
        let lam = ConformalInvariant::default_for(3);
        let semi = lv(&[1, 0, 0, 0, 1]);
        let idx: Vec<usize> = reducible_fibers(&semi, &lam).iter().map(|p| p.index).collect();
        assert_eq!(idx, vec![1, 5]);
        assert_eq!(reducible_fibers(&semi, &lam)[1].lambda, ExtRational::Infinity);
        assert_eq!(fixed_lines(&semi), vec![2, 3, 4]);
        assert_eq!(moduli_dimension(&semi), None);
        let l = lv(&[1, 1, 1, 2, 1]);
        assert_eq!(reducible_fibers(&l, &lam).len(), 5);
        assert!(irreducible_marked_fibers(&l, &lam).is_empty());
        assert_eq!(moduli_dimension(&l), Some(2));
        assert_eq!(moduli_dimension(&lv(&[1, 1, 1, 1])), Some(1));
    }

    #[test]
    fn model_dimensions() {
        let model = MinitwistorModel::for_sequence(&"1,1".parse().unwrap(), None, Sign::Plus).unwrap();
        assert_eq!(model.equation_latex, "z_2z_3 = z_0z_1");
        assert_eq!((model.ambient_dim, model.surface_degree, model.dim_vm, model.dim_wm), (3, 2, 2, 4));
        assert!(model.singularities.is_empty());
    }

    #[test]
    fn lambda_parsing() {
        let lam = ConformalInvariant::parse(3, "1/2,2,7").unwrap();
        let shown: Vec<String> = lam.values().iter().map(|v| v.to_string()).collect();
        assert_eq!(shown, ["0", "1/2", "2", "7", "inf"]);
        assert_eq!(ConformalInvariant::parse(3, "0,1/2,2,7,inf").unwrap(), lam);
        let neg = ConformalInvariant::parse(2, "-1,-3").unwrap();
        assert_eq!(neg, ConformalInvariant::parse(2, "1,3").unwrap());
        assert!(ConformalInvariant::parse(2, "2,1").is_err());
        assert!(ConformalInvariant::parse(2, "0,1").is_err());
        assert!(ConformalInvariant::parse(2, "-1,1").is_err());
        assert!(ConformalInvariant::parse(2, "1").is_err());
        assert!(ConformalInvariant::parse(2, "1,inf").is_err());
        assert!(ConformalInvariant::parse(2, "1,2,3,4").is_err());
        assert_eq!(ConformalInvariant::parse(0, "0,inf").unwrap(), ConformalInvariant::default_for(0));
    }

    #[test]
    fn sign_parsing() {
        assert_eq!("+1".parse::<Sign>().unwrap(), Sign::Plus);
        assert_eq!("-1".parse::<Sign>().unwrap(), Sign::Minus);
        assert!("2".parse::<Sign>().is_err());
    }
}
