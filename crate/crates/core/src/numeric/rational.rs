use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational in canonical form (reduced, positive
/// denominator). `BigRational` maintains both invariants on construction.
pub type Rational = BigRational;

pub fn rational_from_int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// `2^e` for a possibly negative exponent.
pub fn pow2(e: i64) -> Rational {
    if e >= 0 {
        BigRational::from_integer(BigInt::one() << (e as usize))
    } else {
        BigRational::new(BigInt::one(), BigInt::one() << ((-e) as usize))
    }
}

/// Parses `"a/b"` or `"a"`; also accepts plain decimal strings like `"1.25"`.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    if let Some((int_part, frac_part)) = s.split_once('.') {
        if frac_part.contains('/') || frac_part.contains('.') {
            return Err(format!("malformed rational: {s:?}"));
        }
        let negative = int_part.trim_start().starts_with('-');
        let int: BigInt = int_part
            .parse()
            .map_err(|e| format!("malformed rational {s:?}: {e}"))?;
        let frac: BigInt = frac_part
            .parse()
            .map_err(|e| format!("malformed rational {s:?}: {e}"))?;
        if frac.sign() == Sign::Minus {
            return Err(format!("malformed rational: {s:?}"));
        }
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let frac = BigRational::new(frac, scale);
        let int = BigRational::from_integer(int);
        return Ok(if negative { int - frac } else { int + frac });
    }
    match s.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num
                .trim()
                .parse()
                .map_err(|e| format!("malformed rational {s:?}: {e}"))?;
            let den: BigInt = den
                .trim()
                .parse()
                .map_err(|e| format!("malformed rational {s:?}: {e}"))?;
            if den.is_zero() {
                return Err(format!("zero denominator in {s:?}"));
            }
            Ok(BigRational::new(num, den))
        }
        None => {
            let num: BigInt = s
                .parse()
                .map_err(|e| format!("malformed rational {s:?}: {e}"))?;
            Ok(BigRational::from_integer(num))
        }
    }
}

/// Canonical `"num/den"` form, denominator always present.
pub fn rational_to_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Largest multiple of `2^-p` that is `<= r`.
pub fn dyadic_floor(r: &Rational, p: u32) -> Rational {
    let scaled = r * pow2(p as i64);
    BigRational::from_integer(scaled.floor().to_integer()) * pow2(-(p as i64))
}

/// Smallest multiple of `2^-p` that is `>= r`.
pub fn dyadic_ceil(r: &Rational, p: u32) -> Rational {
    let scaled = r * pow2(p as i64);
    BigRational::from_integer(scaled.ceil().to_integer()) * pow2(-(p as i64))
}

/// Smallest `k >= 0` with `2^k >= |r|`.
pub fn ceil_log2_abs(r: &Rational) -> u32 {
    ceil_log2(&r.abs())
}

/// Smallest `k >= 0` with `2^k >= r`; 0 for non-positive `r`.
pub fn ceil_log2(r: &Rational) -> u32 {
    if r <= &BigRational::one() {
        return 0;
    }
    let mut k = 0u32;
    let mut pow = BigRational::one();
    let two = rational_from_int(2);
    while &pow < r {
        pow *= &two;
        k += 1;
    }
    k
}

pub mod serde_rational {
    use super::{parse_rational, rational_to_string, Rational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&rational_to_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}
