//! Bit-model representation of real and complex points.
//!
//! A point is an oracle mapping a precision `p` to a rational box of width
//! at most `2^-p` containing it. Answers are memoised and intersected with
//! previous answers, so successive queries are nested. Arithmetic on names
//! searches the input precision needed to meet the requested output width.
//!
//! Inputs of fixed accuracy (a plain rational box) are first-class: queries
//! below the box width return the box unchanged together with an
//! `exhausted` flag, and everything downstream degrades to finite-accuracy
//! box reasoning.

use crate::numeric::{
    parse_rational, rational_from_int, ComplexBox, Precision, Rational, RealInterval,
};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::{Arc, Mutex};
use thiserror::Error;

/// Hard cap on internal refinement attempts for a single query, so that a
/// query on a degenerate name (division by a name straddling zero) cannot
/// diverge; divergence surfaces as an error and, at the decider level, as
/// budget exhaustion.
const QUERY_REFINE_STEPS: u32 = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NameError {
    #[error("division by a name whose enclosure still straddles zero")]
    DivisorStraddlesZero,
}

/// One answer of a name query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Approximation {
    pub interval: RealInterval,
    /// True when the underlying data cannot be refined any further, i.e.
    /// the requested width was not met and never will be.
    pub exhausted: bool,
}

impl Approximation {
    fn exact(interval: RealInterval) -> Self {
        Approximation { interval, exhausted: false }
    }
}

type ComputeFn = dyn Fn(Precision) -> Result<Approximation, NameError> + Send + Sync;

struct NameInner {
    compute: Box<ComputeFn>,
    /// Best answer so far; new answers are intersected with it so the
    /// sequence of returned boxes is nested.
    memo: Mutex<Option<Approximation>>,
}

/// A represented real point: precision in, nested rational interval out.
#[derive(Clone)]
pub struct RealName {
    inner: Arc<NameInner>,
}

impl fmt::Debug for RealName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.inner.memo.lock().unwrap().as_ref() {
            Some(a) => write!(f, "RealName({})", a.interval),
            None => write!(f, "RealName(unqueried)"),
        }
    }
}

impl RealName {
    fn from_compute(
        compute: impl Fn(Precision) -> Result<Approximation, NameError> + Send + Sync + 'static,
    ) -> Self {
        RealName {
            inner: Arc::new(NameInner {
                compute: Box::new(compute),
                memo: Mutex::new(None),
            }),
        }
    }

    pub fn constant(v: Rational) -> Self {
        Self::from_compute(move |_| Ok(Approximation::exact(RealInterval::point(v.clone()))))
    }

    pub fn from_int(v: i64) -> Self {
        Self::constant(rational_from_int(v))
    }

    /// A name decided only down to the width of the given interval.
    pub fn fixed_interval(i: RealInterval) -> Self {
        Self::from_compute(move |p: Precision| {
            let exhausted = i.width() > p.width_bound();
            Ok(Approximation { interval: i.clone(), exhausted })
        })
    }

    /// `(a/b) * pi` through a certified Machin-style series.
    pub fn pi_multiple(factor: Rational) -> Self {
        Self::from_compute(move |p: Precision| {
            let extra = crate::numeric::ceil_log2_abs(&factor);
            let pi = pi_enclosure(Precision(p.0 + extra + 1));
            Ok(Approximation::exact(pi.scale(&factor)))
        })
    }

    /// Queries the oracle for an interval of width at most `2^-p`
    /// (unless the name's accuracy is exhausted first).
    pub fn query(&self, p: Precision) -> Result<Approximation, NameError> {
        let mut memo = self.inner.memo.lock().unwrap();
        if let Some(best) = memo.as_ref() {
            if best.interval.width() <= p.width_bound() || best.exhausted {
                return Ok(best.clone());
            }
        }
        let raw = (self.inner.compute)(p)?;
        let merged = match memo.as_ref() {
            Some(best) => {
                let interval = best
                    .interval
                    .intersect(&raw.interval)
                    .unwrap_or_else(|| raw.interval.clone());
                Approximation { interval, exhausted: raw.exhausted }
            }
            None => raw,
        };
        *memo = Some(merged.clone());
        Ok(merged)
    }

    pub fn add(&self, other: &RealName) -> RealName {
        let (a, b) = (self.clone(), other.clone());
        Self::from_compute(move |p: Precision| {
            let qa = a.query(Precision(p.0 + 2))?;
            let qb = b.query(Precision(p.0 + 2))?;
            Ok(Approximation {
                interval: qa.interval.add(&qb.interval),
                exhausted: qa.exhausted || qb.exhausted,
            })
        })
    }

    pub fn sub(&self, other: &RealName) -> RealName {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RealName {
        let a = self.clone();
        Self::from_compute(move |p: Precision| {
            let qa = a.query(p)?;
            Ok(Approximation {
                interval: qa.interval.neg(),
                exhausted: qa.exhausted,
            })
        })
    }

    pub fn mul(&self, other: &RealName) -> RealName {
        let (a, b) = (self.clone(), other.clone());
        Self::from_compute(move |p: Precision| refine_binary(&a, &b, p, |x, y| Ok(x.mul(y))))
    }

    pub fn div(&self, other: &RealName) -> RealName {
        let (a, b) = (self.clone(), other.clone());
        Self::from_compute(move |p: Precision| {
            // Witness search: refine the divisor until zero is excluded.
            let mut q = p.0;
            for _ in 0..QUERY_REFINE_STEPS {
                let qb = b.query(Precision(q))?;
                if !qb.interval.contains_zero() {
                    return refine_binary(&a, &b, p, |x, y| {
                        x.div(y).map_err(|_| NameError::DivisorStraddlesZero)
                    });
                }
                if qb.exhausted {
                    break;
                }
                q = q.saturating_mul(2).max(q + 8);
            }
            Err(NameError::DivisorStraddlesZero)
        })
    }
}

/// Refines both operands until the combined interval meets the width bound
/// or the inputs are exhausted.
fn refine_binary(
    a: &RealName,
    b: &RealName,
    p: Precision,
    op: impl Fn(&RealInterval, &RealInterval) -> Result<RealInterval, NameError>,
) -> Result<Approximation, NameError> {
    let target = p.width_bound();
    let mut q = p.0 + 2;
    let mut last: Option<RealInterval> = None;
    for _ in 0..QUERY_REFINE_STEPS {
        let qa = a.query(Precision(q))?;
        let qb = b.query(Precision(q))?;
        let out = op(&qa.interval, &qb.interval)?;
        let out = match &last {
            Some(prev) => prev.intersect(&out).unwrap_or(out),
            None => out,
        };
        if out.width() <= target {
            return Ok(Approximation { interval: out, exhausted: false });
        }
        if qa.exhausted || qb.exhausted {
            return Ok(Approximation { interval: out, exhausted: true });
        }
        last = Some(out);
        q = q.saturating_mul(2).max(q + 8);
    }
    Ok(Approximation {
        interval: last.expect("at least one refinement step"),
        exhausted: true,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    Less,
    Greater,
    Unknown,
}

/// Sound semi-comparison at precision `p`: `Less`/`Greater` are certain,
/// `Unknown` means the enclosures still overlap.
pub fn semi_compare(a: &RealName, b: &RealName, p: Precision) -> Result<Comparison, NameError> {
    let qa = a.query(p)?;
    let qb = b.query(p)?;
    if qa.interval.hi() < qb.interval.lo() {
        Ok(Comparison::Less)
    } else if qb.interval.hi() < qa.interval.lo() {
        Ok(Comparison::Greater)
    } else {
        Ok(Comparison::Unknown)
    }
}

/// A represented complex point as a pair of real names.
#[derive(Clone, Debug)]
pub struct ComplexName {
    pub re: RealName,
    pub im: RealName,
}

impl ComplexName {
    pub fn new(re: RealName, im: RealName) -> Self {
        ComplexName { re, im }
    }

    pub fn constant(re: Rational, im: Rational) -> Self {
        ComplexName {
            re: RealName::constant(re),
            im: RealName::constant(im),
        }
    }

    pub fn query(&self, p: Precision) -> Result<(ComplexBox, bool), NameError> {
        let qr = self.re.query(p)?;
        let qi = self.im.query(p)?;
        Ok((
            ComplexBox::new(qr.interval, qi.interval),
            qr.exhausted || qi.exhausted,
        ))
    }
}

/// JSON form of a name: exactly one of the alternatives.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NameSpec {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rational: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub interval: Option<[String; 2]>,
    #[serde(rename = "pi-multiple", skip_serializing_if = "Option::is_none")]
    pub pi_multiple: Option<String>,
}

impl NameSpec {
    pub fn rational(s: &str) -> Self {
        NameSpec { rational: Some(s.to_string()), interval: None, pi_multiple: None }
    }

    pub fn build(&self) -> Result<RealName, String> {
        match (&self.rational, &self.interval, &self.pi_multiple) {
            (Some(r), None, None) => Ok(RealName::constant(parse_rational(r)?)),
            (None, Some([lo, hi]), None) => {
                let lo = parse_rational(lo)?;
                let hi = parse_rational(hi)?;
                if lo > hi {
                    return Err("interval endpoints out of order".into());
                }
                Ok(RealName::fixed_interval(RealInterval::new(lo, hi)))
            }
            (None, None, Some(f)) => Ok(RealName::pi_multiple(parse_rational(f)?)),
            _ => Err("name must have exactly one of rational/interval/pi-multiple".into()),
        }
    }
}

/// Enclosure of `arctan(1/x)` for integer `x >= 2`, to width `<= 2^-p`.
/// Alternating series with decreasing terms, so consecutive partial sums
/// bracket the limit.
fn arctan_recip_enclosure(x: i64, p: Precision) -> RealInterval {
    let target = p.width_bound();
    let x = rational_from_int(x);
    let x_sq = &x * &x;
    let mut term = Rational::one() / &x; // 1/x
    let mut sum = Rational::zero();
    let mut j = 0u32;
    loop {
        let contribution = &term / rational_from_int((2 * j + 1) as i64);
        if contribution < target {
            // Partial sum and partial sum plus/minus the next term bracket.
            return if j % 2 == 0 {
                RealInterval::new(sum.clone(), sum + contribution)
            } else {
                RealInterval::new(&sum - &contribution, sum)
            };
        }
        if j % 2 == 0 {
            sum += &contribution;
        } else {
            sum -= &contribution;
        }
        term /= &x_sq;
        j += 1;
    }
}

/// Machin: pi = 16 arctan(1/5) - 4 arctan(1/239).
pub fn pi_enclosure(p: Precision) -> RealInterval {
    let a = arctan_recip_enclosure(5, Precision(p.0 + 5));
    let b = arctan_recip_enclosure(239, Precision(p.0 + 3));
    a.scale(&rational_from_int(16))
        .sub(&b.scale(&rational_from_int(4)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::parse_rational;

    fn rat(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn constant_width() {
        let n = RealName::constant(rat("1/3"));
        let a = n.query(Precision(4)).unwrap();
        assert!(a.interval.width() <= Precision(4).width_bound());
        assert!(a.interval.contains(&rat("1/3")));
    }

    #[test]
    fn add_contains_sum() {
        let n = RealName::constant(rat("1/3")).add(&RealName::constant(rat("2/3")));
        for p in [0, 4, 10, 30] {
            let a = n.query(Precision(p)).unwrap();
            assert!(a.interval.contains(&rat("1")));
            assert!(a.interval.width() <= Precision(p).width_bound());
        }
    }

    #[test]
    fn mul_quarter() {
        let n = RealName::constant(rat("1/2")).mul(&RealName::constant(rat("1/2")));
        let a = n.query(Precision(10)).unwrap();
        assert!(a.interval.width() <= Precision(10).width_bound());
        assert!(a.interval.contains(&rat("1/4")));
    }

    #[test]
    fn queries_nest() {
        let n = RealName::pi_multiple(rat("1"));
        let coarse = n.query(Precision(3)).unwrap().interval;
        let fine = n.query(Precision(20)).unwrap().interval;
        assert!(coarse.contains_interval(&fine));
        // Re-querying coarse after fine stays within fine.
        let again = n.query(Precision(3)).unwrap().interval;
        assert!(fine.contains_interval(&again));
    }

    #[test]
    fn semi_compare_cases() {
        let zero = RealName::from_int(0);
        let one = RealName::from_int(1);
        assert_eq!(semi_compare(&zero, &one, Precision(1)).unwrap(), Comparison::Less);
        let third = RealName::constant(rat("1/3"));
        let third2 = RealName::constant(rat("1/3"));
        for p in [1, 8, 32, 64] {
            assert_eq!(
                semi_compare(&third, &third2, Precision(p)).unwrap(),
                Comparison::Unknown
            );
        }
        let shifted = RealName::constant(rat("1/3") + Precision(10).width_bound());
        assert_eq!(
            semi_compare(&third, &shifted, Precision(12)).unwrap(),
            Comparison::Less
        );
    }

    #[test]
    fn fixed_interval_exhausts() {
        let n = RealName::fixed_interval(RealInterval::new(rat("0"), rat("1/4")));
        let coarse = n.query(Precision(1)).unwrap();
        assert!(!coarse.exhausted);
        let fine = n.query(Precision(10)).unwrap();
        assert!(fine.exhausted);
        assert_eq!(fine.interval, RealInterval::new(rat("0"), rat("1/4")));
    }

    #[test]
    fn division_witness() {
        let q = RealName::from_int(1).div(&RealName::constant(rat("3")));
        let a = q.query(Precision(20)).unwrap();
        assert!(a.interval.contains(&rat("1/3")));
        let bad = RealName::from_int(1).div(&RealName::fixed_interval(RealInterval::from_ints(-1, 1)));
        assert_eq!(bad.query(Precision(4)), Err(NameError::DivisorStraddlesZero));
    }

    #[test]
    fn pi_enclosure_is_tight() {
        let pi = pi_enclosure(Precision(60));
        assert!(pi.width() <= Precision(60).width_bound());
        // 3.14159265358979 < pi < 3.14159265358980
        assert!(pi.lo() > &rat("314159265358979/100000000000000"));
        assert!(pi.hi() < &rat("314159265358980/100000000000000"));
    }

    #[test]
    fn name_spec_parsing() {
        let spec: NameSpec = serde_json::from_str(r#"{"rational": "2/3"}"#).unwrap();
        let n = spec.build().unwrap();
        assert!(n.query(Precision(5)).unwrap().interval.contains(&rat("2/3")));
        let spec: NameSpec = serde_json::from_str(r#"{"interval": ["0", "1/4"]}"#).unwrap();
        spec.build().unwrap();
        let spec: NameSpec = serde_json::from_str(r#"{"pi-multiple": "2"}"#).unwrap();
        let n = spec.build().unwrap();
        let tau = n.query(Precision(20)).unwrap().interval;
        assert!(tau.lo() < &rat("62831854/10000000") && tau.hi() > &rat("62831853/10000000"));
        let bad: Result<NameSpec, _> =
            serde_json::from_str(r#"{"rational": "1", "interval": ["0","1"]}"#);
        assert!(bad.unwrap().build().is_err());
    }
}
