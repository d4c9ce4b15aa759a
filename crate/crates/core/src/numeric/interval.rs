use super::rational::{
    dyadic_ceil, dyadic_floor, parse_rational, rational_from_int, rational_to_string, Rational,
};
use super::NumericError;
use num_traits::{Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// Closed real interval `[lo, hi]` with rational endpoints, `lo <= hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealInterval {
    lo: Rational,
    hi: Rational,
}

impl RealInterval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        RealInterval { lo, hi }
    }

    pub fn point(v: Rational) -> Self {
        RealInterval { lo: v.clone(), hi: v }
    }

    pub fn from_ints(lo: i64, hi: i64) -> Self {
        Self::new(rational_from_int(lo), rational_from_int(hi))
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / rational_from_int(2)
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, v: &Rational) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn contains_interval(&self, other: &RealInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn intersects(&self, other: &RealInterval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn intersect(&self, other: &RealInterval) -> Option<RealInterval> {
        let lo = if self.lo >= other.lo { self.lo.clone() } else { other.lo.clone() };
        let hi = if self.hi <= other.hi { self.hi.clone() } else { other.hi.clone() };
        if lo <= hi {
            Some(RealInterval { lo, hi })
        } else {
            None
        }
    }

    pub fn hull(&self, other: &RealInterval) -> RealInterval {
        RealInterval {
            lo: if self.lo <= other.lo { self.lo.clone() } else { other.lo.clone() },
            hi: if self.hi >= other.hi { self.hi.clone() } else { other.hi.clone() },
        }
    }

    pub fn add(&self, other: &RealInterval) -> RealInterval {
        RealInterval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn sub(&self, other: &RealInterval) -> RealInterval {
        RealInterval {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
        }
    }

    pub fn neg(&self) -> RealInterval {
        RealInterval {
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    pub fn mul(&self, other: &RealInterval) -> RealInterval {
        let candidates = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let mut lo = candidates[0].clone();
        let mut hi = candidates[0].clone();
        for c in &candidates[1..] {
            if *c < lo {
                lo = c.clone();
            }
            if *c > hi {
                hi = c.clone();
            }
        }
        RealInterval { lo, hi }
    }

    pub fn scale(&self, k: &Rational) -> RealInterval {
        if k.is_negative() {
            RealInterval {
                lo: k * &self.hi,
                hi: k * &self.lo,
            }
        } else {
            RealInterval {
                lo: k * &self.lo,
                hi: k * &self.hi,
            }
        }
    }

    pub fn abs(&self) -> RealInterval {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            self.neg()
        } else {
            let mag = if -&self.lo >= self.hi { -self.lo.clone() } else { self.hi.clone() };
            RealInterval {
                lo: Rational::zero(),
                hi: mag,
            }
        }
    }

    /// Tight enclosure of `{x^2 : x in self}`.
    pub fn sq(&self) -> RealInterval {
        let a = self.abs();
        RealInterval {
            lo: &a.lo * &a.lo,
            hi: &a.hi * &a.hi,
        }
    }

    pub fn div(&self, other: &RealInterval) -> Result<RealInterval, NumericError> {
        if other.contains_zero() {
            return Err(NumericError::DivisorStraddlesZero);
        }
        let inv = RealInterval {
            lo: rational_from_int(1) / &other.hi,
            hi: rational_from_int(1) / &other.lo,
        };
        Ok(self.mul(&inv))
    }

    /// `self^k` computed by repeated tight squaring/multiplication.
    pub fn pow(&self, k: u32) -> RealInterval {
        if k == 0 {
            return RealInterval::point(rational_from_int(1));
        }
        if k % 2 == 0 {
            self.sq().pow(k / 2)
        } else if k == 1 {
            self.clone()
        } else {
            self.mul(&self.sq().pow(k / 2))
        }
    }

    /// Lower and upper bound of `|x|` over the interval.
    pub fn abs_bounds(&self) -> (Rational, Rational) {
        let a = self.abs();
        (a.lo, a.hi)
    }

    /// Widens outward so both endpoints become multiples of `2^-p`.
    pub fn outward_dyadic(&self, p: u32) -> RealInterval {
        RealInterval {
            lo: dyadic_floor(&self.lo, p),
            hi: dyadic_ceil(&self.hi, p),
        }
    }

    /// Entirely below `other`: `self.hi < other.lo`.
    pub fn certainly_lt(&self, other: &RealInterval) -> bool {
        self.hi < other.lo
    }

    pub fn certainly_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn certainly_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn split(&self) -> (RealInterval, RealInterval) {
        let m = self.midpoint();
        (
            RealInterval { lo: self.lo.clone(), hi: m.clone() },
            RealInterval { lo: m, hi: self.hi.clone() },
        )
    }
}

impl fmt::Display for RealInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}]",
            rational_to_string(&self.lo),
            rational_to_string(&self.hi)
        )
    }
}

impl Serialize for RealInterval {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [rational_to_string(&self.lo), rational_to_string(&self.hi)].serialize(s)
    }
}

impl<'de> Deserialize<'de> for RealInterval {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [lo, hi] = <[String; 2]>::deserialize(d)?;
        let lo = parse_rational(&lo).map_err(D::Error::custom)?;
        let hi = parse_rational(&hi).map_err(D::Error::custom)?;
        if lo > hi {
            return Err(D::Error::custom("interval endpoints out of order"));
        }
        Ok(RealInterval { lo, hi })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ival(lo: &str, hi: &str) -> RealInterval {
        RealInterval::new(parse_rational(lo).unwrap(), parse_rational(hi).unwrap())
    }

    #[test]
    fn add_endpoints() {
        // add([1/3,1/2],[0,1]) = [1/3, 3/2]
        assert_eq!(ival("1/3", "1/2").add(&ival("0", "1")), ival("1/3", "3/2"));
    }

    #[test]
    fn mul_sign_cases() {
        assert_eq!(ival("-1", "1").mul(&ival("-1", "1")), ival("-1", "1"));
        assert_eq!(ival("-2", "-1").mul(&ival("3", "4")), ival("-8", "-3"));
    }

    #[test]
    fn sq_straddling_zero() {
        assert_eq!(ival("-2", "1").sq(), ival("0", "4"));
    }

    #[test]
    fn division() {
        assert_eq!(ival("1", "1").div(&ival("2", "2")).unwrap(), ival("1/2", "1/2"));
        assert_eq!(ival("1", "2").div(&ival("1", "4")).unwrap(), ival("1/4", "2"));
        assert_eq!(
            ival("1", "1").div(&ival("-1", "1")),
            Err(NumericError::DivisorStraddlesZero)
        );
    }

    #[test]
    fn outward_dyadic_widens() {
        let i = ival("1/3", "2/3");
        let w = i.outward_dyadic(3);
        assert!(w.contains_interval(&i));
        assert_eq!(w, ival("2/8", "6/8"));
    }

    #[test]
    fn json_pair_form() {
        let i = ival("1/3", "1/2");
        let js = serde_json::to_string(&i).unwrap();
        assert_eq!(js, r#"["1/3","1/2"]"#);
        let back: RealInterval = serde_json::from_str(&js).unwrap();
        assert_eq!(back, i);
    }
}
