use super::interval::RealInterval;
use super::rational::{rational_from_int, Rational};
use super::NumericError;
use num_traits::Signed;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Axis-aligned rational box in the complex plane: `re x im`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexBox {
    pub re: RealInterval,
    pub im: RealInterval,
}

impl ComplexBox {
    pub fn new(re: RealInterval, im: RealInterval) -> Self {
        ComplexBox { re, im }
    }

    pub fn point(re: Rational, im: Rational) -> Self {
        ComplexBox {
            re: RealInterval::point(re),
            im: RealInterval::point(im),
        }
    }

    pub fn real_point(re: Rational) -> Self {
        Self::point(re, Rational::from_integer(0.into()))
    }

    pub fn from_real(re: RealInterval) -> Self {
        ComplexBox {
            re,
            im: RealInterval::point(Rational::from_integer(0.into())),
        }
    }

    pub fn width(&self) -> Rational {
        let wr = self.re.width();
        let wi = self.im.width();
        if wr >= wi {
            wr
        } else {
            wi
        }
    }

    pub fn add(&self, other: &ComplexBox) -> ComplexBox {
        ComplexBox {
            re: self.re.add(&other.re),
            im: self.im.add(&other.im),
        }
    }

    pub fn sub(&self, other: &ComplexBox) -> ComplexBox {
        ComplexBox {
            re: self.re.sub(&other.re),
            im: self.im.sub(&other.im),
        }
    }

    pub fn neg(&self) -> ComplexBox {
        ComplexBox {
            re: self.re.neg(),
            im: self.im.neg(),
        }
    }

    pub fn mul(&self, other: &ComplexBox) -> ComplexBox {
        ComplexBox {
            re: self.re.mul(&other.re).sub(&self.im.mul(&other.im)),
            im: self.re.mul(&other.im).add(&self.im.mul(&other.re)),
        }
    }

    pub fn conj(&self) -> ComplexBox {
        ComplexBox {
            re: self.re.clone(),
            im: self.im.neg(),
        }
    }

    /// Enclosure of `{|z|^2 : z in box}`.
    pub fn modulus_sq(&self) -> RealInterval {
        self.re.sq().add(&self.im.sq())
    }

    /// Division via `a * conj(b) / |b|^2`; requires `0` outside `|b|^2`.
    pub fn div(&self, other: &ComplexBox) -> Result<ComplexBox, NumericError> {
        let den = other.modulus_sq();
        if den.contains_zero() {
            return Err(NumericError::DivisorStraddlesZero);
        }
        let num = self.mul(&other.conj());
        Ok(ComplexBox {
            re: num.re.div(&den)?,
            im: num.im.div(&den)?,
        })
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    pub fn contains_point(&self, re: &Rational, im: &Rational) -> bool {
        self.re.contains(re) && self.im.contains(im)
    }

    pub fn contains_box(&self, other: &ComplexBox) -> bool {
        self.re.contains_interval(&other.re) && self.im.contains_interval(&other.im)
    }

    pub fn intersects(&self, other: &ComplexBox) -> bool {
        self.re.intersects(&other.re) && self.im.intersects(&other.im)
    }

    pub fn intersects_real_axis(&self) -> bool {
        self.im.contains_zero()
    }

    pub fn in_upper_half_plane(&self) -> bool {
        self.im.lo().is_positive()
    }

    pub fn in_lower_half_plane(&self) -> bool {
        self.im.hi().is_negative()
    }

    /// Reflection about the real axis.
    pub fn reflect(&self) -> ComplexBox {
        self.conj()
    }

    /// Inflates every side outward by `delta`.
    pub fn inflate(&self, delta: &Rational) -> ComplexBox {
        let d = RealInterval::new(-delta.clone(), delta.clone());
        ComplexBox {
            re: self.re.add(&d),
            im: self.im.add(&d),
        }
    }

    pub fn hull(&self, other: &ComplexBox) -> ComplexBox {
        ComplexBox {
            re: self.re.hull(&other.re),
            im: self.im.hull(&other.im),
        }
    }

    /// Lower and upper bounds of `|z|` squared; exact rational endpoints.
    pub fn modulus_sq_bounds(&self) -> (Rational, Rational) {
        let m = self.modulus_sq();
        (m.lo().clone(), m.hi().clone())
    }
}

impl fmt::Display for ComplexBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + i{}", self.re, self.im)
    }
}

/// Finds a rational `m` with `sqrt(lo_sq) <= ... < m < hi` given
/// `lo_sq < hi^2`, i.e. an `m` strictly between `sqrt(lo_sq)` and `hi`.
/// Used to pick separation constants like the `M` of a dominance
/// certificate without leaving rational arithmetic.
pub fn rational_between_sqrt_and(lo_sq: &Rational, hi: &Rational) -> Option<Rational> {
    if hi.numer().sign() != num_bigint::Sign::Plus {
        return None;
    }
    if &(hi * hi) <= lo_sq {
        return None;
    }
    // Walk m = hi * (1 - 2^-j) until m^2 > lo_sq; terminates since hi^2 > lo_sq.
    let one = rational_from_int(1);
    let mut shrink = Rational::new(1.into(), 2.into());
    loop {
        let m = hi * (&one - &shrink);
        if &(&m * &m) > lo_sq && m < *hi {
            return Some(m);
        }
        shrink /= rational_from_int(2);
    }
}

#[cfg(test)]
mod tests {
    use super::super::rational::parse_rational;
    use super::*;

    fn b(relo: &str, rehi: &str, imlo: &str, imhi: &str) -> ComplexBox {
        ComplexBox::new(
            RealInterval::new(parse_rational(relo).unwrap(), parse_rational(rehi).unwrap()),
            RealInterval::new(parse_rational(imlo).unwrap(), parse_rational(imhi).unwrap()),
        )
    }

    #[test]
    fn i_times_i() {
        let i = b("0", "0", "1", "1");
        assert_eq!(i.mul(&i), b("-1", "-1", "0", "0"));
    }

    #[test]
    fn conjugation() {
        let z = b("1", "2", "3", "4");
        assert_eq!(z.conj(), b("1", "2", "-4", "-3"));
        assert_eq!(z.conj().conj(), z);
    }

    #[test]
    fn three_four_five() {
        let z = b("3", "3", "4", "4");
        assert_eq!(z.modulus_sq(), RealInterval::from_ints(25, 25));
    }

    #[test]
    fn separation_constant() {
        // other roots have |.|^2 <= 2, dominant root >= 3/2: find M in between.
        let lo_sq = parse_rational("2").unwrap();
        let hi = parse_rational("3/2").unwrap();
        let m = rational_between_sqrt_and(&lo_sq, &hi).unwrap();
        assert!(&m * &m > lo_sq);
        assert!(m < hi);
    }
}
