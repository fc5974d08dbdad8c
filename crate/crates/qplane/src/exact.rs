//! Exact rational arithmetic and quadratic polynomials in `t`.
//!
//! Every quantity in this crate is an exact rational; there is no floating
//! point anywhere. Polynomials are capped at degree 2 because every Hilbert
//! polynomial handled here has degree at most 2, and the cap keeps the
//! ordering and slope logic exhaustively testable.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as DeError;
use serde::ser::{Error as SerError, SerializeSeq};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::Error;

/// Arbitrary-precision rational in canonical form: reduced, denominator > 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

impl Rat {
    pub fn new(numer: i64, denom: i64) -> Result<Self, Error> {
        if denom == 0 {
            return Err(Error::Parse("rational with zero denominator".into()));
        }
        Ok(Rat(BigRational::new(BigInt::from(numer), BigInt::from(denom))))
    }

    pub fn from_bigints(numer: BigInt, denom: BigInt) -> Result<Self, Error> {
        if denom.is_zero() {
            return Err(Error::Parse("rational with zero denominator".into()));
        }
        Ok(Rat(BigRational::new(numer, denom)))
    }

    pub fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rat(BigRational::from_integer(n))
    }

    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    /// 1/2, the ubiquitous binomial-coefficient factor.
    pub fn half() -> Self {
        Rat(BigRational::new(BigInt::one(), BigInt::from(2)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// The integer value, if this rational is an integer.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.to_integer())
    }

    /// True when 2x is an integer, i.e. the denominator divides 2.
    pub fn twice_is_integer(&self) -> bool {
        (&self.0 + &self.0).is_integer()
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.to_integer().and_then(|n| n.to_i64())
    }

    pub fn recip(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::Parse("division by zero".into()));
        }
        Ok(Rat(self.0.recip()))
    }

    pub fn floor_int(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn ceil_int(&self) -> BigInt {
        self.0.ceil().to_integer()
    }
}

macro_rules! rat_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0 $op rhs.0)
            }
        }
        impl $trait for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat(&self.0 $op &rhs.0)
            }
        }
        impl $trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat(self.0 $op &rhs.0)
            }
        }
    };
}

rat_binop!(Add, add, +);
rat_binop!(Sub, sub, -);
rat_binop!(Mul, mul, *);

impl Div for &Rat {
    type Output = Rat;
    fn div(self, rhs: &Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero rational");
        Rat(&self.0 / &rhs.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rat {
    type Err = Error;

    /// Parses `"p"` or `"p/q"` with optional sign on `p`.
    fn from_str(text: &str) -> Result<Self, Error> {
        let text = text.trim();
        let parse_int = |s: &str| -> Result<BigInt, Error> {
            BigInt::from_str(s.trim()).map_err(|_| Error::Parse(format!("invalid integer `{s}`")))
        };
        match text.split_once('/') {
            None => Ok(Rat::from_bigint(parse_int(text)?)),
            Some((p, q)) => {
                let denom = parse_int(q)?;
                if denom.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in `{text}`")));
                }
                Rat::from_bigints(parse_int(p)?, denom)
            }
        }
    }
}

// Wire format: a two-element integer array [numerator, denominator] in
// canonical form.
impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let numer = self
            .numer()
            .to_i128()
            .ok_or_else(|| S::Error::custom("rational numerator exceeds i128"))?;
        let denom = self
            .denom()
            .to_i128()
            .ok_or_else(|| S::Error::custom("rational denominator exceeds i128"))?;
        let mut seq = serializer.serialize_seq(Some(2))?;
        seq.serialize_element(&numer)?;
        seq.serialize_element(&denom)?;
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let [numer, denom] = <[i128; 2]>::deserialize(deserializer)?;
        if denom == 0 {
            return Err(D::Error::custom("rational with zero denominator"));
        }
        Ok(Rat(BigRational::new(BigInt::from(numer), BigInt::from(denom))))
    }
}

/// Polynomial `c2*t^2 + c1*t + c0` with exact rational coefficients.
///
/// Comparison is lexicographic from the highest-degree coefficient down,
/// which matches ordering the polynomial functions by their behaviour as
/// `t -> infinity`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HilbPoly {
    pub c2: Rat,
    pub c1: Rat,
    pub c0: Rat,
}

impl HilbPoly {
    pub fn new(c2: Rat, c1: Rat, c0: Rat) -> Self {
        HilbPoly { c2, c1, c0 }
    }

    pub fn zero() -> Self {
        HilbPoly::new(Rat::zero(), Rat::zero(), Rat::zero())
    }

    pub fn constant(c: Rat) -> Self {
        HilbPoly::new(Rat::zero(), Rat::zero(), c)
    }

    pub fn is_zero(&self) -> bool {
        self.c2.is_zero() && self.c1.is_zero() && self.c0.is_zero()
    }

    /// Largest index with a nonzero coefficient; -1 for the zero polynomial.
    pub fn degree(&self) -> i32 {
        if !self.c2.is_zero() {
            2
        } else if !self.c1.is_zero() {
            1
        } else if !self.c0.is_zero() {
            0
        } else {
            -1
        }
    }

    pub fn leading_coefficient(&self) -> Option<&Rat> {
        match self.degree() {
            2 => Some(&self.c2),
            1 => Some(&self.c1),
            0 => Some(&self.c0),
            _ => None,
        }
    }

    pub fn eval(&self, t: i64) -> Rat {
        let t = Rat::from_int(t);
        &(&(&self.c2 * &t) + &self.c1) * &t + &self.c0
    }

    /// Lexicographic comparison on (c2, c1, c0); same as the derived `Ord`.
    pub fn lex_cmp(&self, other: &HilbPoly) -> Ordering {
        self.cmp(other)
    }

    /// Divides by the leading coefficient, making the leading term monic.
    pub fn slope(&self) -> Result<HilbPoly, Error> {
        let lead = self.leading_coefficient().ok_or(Error::ZeroSlope)?.clone();
        Ok(self.scale(&lead.recip()?))
    }

    pub fn scale(&self, k: &Rat) -> HilbPoly {
        HilbPoly::new(&self.c2 * k, &self.c1 * k, &self.c0 * k)
    }

    /// The polynomial `Q` with `Q(t) = P(t + c)` for all `t`.
    pub fn shift(&self, c: i64) -> HilbPoly {
        let c = Rat::from_int(c);
        let c1 = &(&(&self.c2 + &self.c2) * &c) + &self.c1;
        let c0 = &(&(&(&self.c2 * &c) + &self.c1) * &c) + &self.c0;
        HilbPoly::new(self.c2.clone(), c1, c0)
    }
}

impl Add for &HilbPoly {
    type Output = HilbPoly;
    fn add(self, rhs: &HilbPoly) -> HilbPoly {
        HilbPoly::new(&self.c2 + &rhs.c2, &self.c1 + &rhs.c1, &self.c0 + &rhs.c0)
    }
}

impl Sub for &HilbPoly {
    type Output = HilbPoly;
    fn sub(self, rhs: &HilbPoly) -> HilbPoly {
        HilbPoly::new(&self.c2 - &rhs.c2, &self.c1 - &rhs.c1, &self.c0 - &rhs.c0)
    }
}

impl fmt::Display for HilbPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (coeff, power) in [(&self.c2, 2u32), (&self.c1, 1), (&self.c0, 0)] {
            if coeff.is_zero() {
                continue;
            }
            if first {
                first = false;
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = if !first || coeff.is_positive() {
                coeff.clone()
            } else {
                coeff.clone()
            };
            let mag = if first { mag } else { Rat(mag.0.abs()) };
            match power {
                0 => write!(f, "{mag}")?,
                1 => {
                    if mag == Rat::one() {
                        write!(f, "t")?
                    } else {
                        write!(f, "{mag}*t")?
                    }
                }
                _ => {
                    if mag == Rat::one() {
                        write!(f, "t^2")?
                    } else {
                        write!(f, "{mag}*t^2")?
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for HilbPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Expansion of the binomial coefficient `C(t - shift + 2, 2)` as a
/// polynomial in `t`: `(t - shift + 1)(t - shift + 2) / 2`.
pub fn binom2(shift: i64) -> HilbPoly {
    let u = BigInt::from(shift);
    let two = BigInt::from(2);
    // (t - u + 1)(t - u + 2) = t^2 + (3 - 2u) t + (u - 1)(u - 2)
    let c1 = Rat::from_bigints(BigInt::from(3) - &two * &u, two.clone()).expect("nonzero denom");
    let c0 =
        Rat::from_bigints((&u - BigInt::one()) * (&u - &two), two.clone()).expect("nonzero denom");
    HilbPoly::new(Rat::half(), c1, c0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(n, d).unwrap()
    }

    fn poly(c2: (i64, i64), c1: (i64, i64), c0: (i64, i64)) -> HilbPoly {
        HilbPoly::new(rat(c2.0, c2.1), rat(c1.0, c1.1), rat(c0.0, c0.1))
    }

    #[test]
    fn rat_canonical_form() {
        let r = rat(4, 6);
        assert_eq!(r, rat(2, 3));
        assert_eq!(r.numer(), &BigInt::from(2));
        assert_eq!(r.denom(), &BigInt::from(3));
        // Negative denominators normalize onto the numerator.
        let r = rat(1, -2);
        assert_eq!(r, rat(-1, 2));
        assert!(r.denom().is_positive());
    }

    #[test]
    fn rat_parse_and_display() {
        assert_eq!("3/2".parse::<Rat>().unwrap(), rat(3, 2));
        assert_eq!("-1".parse::<Rat>().unwrap(), rat(-1, 1));
        assert_eq!("4/6".parse::<Rat>().unwrap(), rat(2, 3));
        assert_eq!(rat(7, 2).to_string(), "7/2");
        assert_eq!(rat(-4, 1).to_string(), "-4");
        assert!("1/0".parse::<Rat>().is_err());
        assert!("x".parse::<Rat>().is_err());
    }

    #[test]
    fn rat_serde_round_trip() {
        let r = rat(-3, 2);
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(json, "[-3,2]");
        let back: Rat = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        // Non-canonical input canonicalizes on deserialization.
        let back: Rat = serde_json::from_str("[4,6]").unwrap();
        assert_eq!(back, rat(2, 3));
    }

    #[test]
    fn binom2_known_expansions() {
        // Shift 0 is the full module: (1/2)t^2 + (3/2)t + 1.
        assert_eq!(binom2(0), poly((1, 2), (3, 2), (1, 1)));
        // Shift 1: (1/2)t(t+1).
        assert_eq!(binom2(1), poly((1, 2), (1, 2), (0, 1)));
        // Shift 2: (1/2)t(t-1); value 3 at t = 3.
        assert_eq!(binom2(2), poly((1, 2), (-1, 2), (0, 1)));
        assert_eq!(binom2(2).eval(3), rat(3, 1));
    }

    #[test]
    fn binom2_matches_integer_binomial() {
        // Direct integer evaluation of C(t - a + 2, 2) for t >= a.
        for a in -6..=6i64 {
            for t in a..a + 10 {
                let k = t - a + 2;
                let expected = Rat::from_int(k * (k - 1) / 2);
                assert_eq!(binom2(a).eval(t), expected, "a={a} t={t}");
            }
        }
    }

    #[test]
    fn lex_compare_examples() {
        let t_plus_1 = poly((0, 1), (1, 1), (1, 1));
        let t = poly((0, 1), (1, 1), (0, 1));
        assert_eq!(t_plus_1.lex_cmp(&t), Ordering::Greater);

        let half_t2 = poly((1, 2), (0, 1), (0, 1));
        let hundred_t = poly((0, 1), (100, 1), (0, 1));
        assert_eq!(half_t2.lex_cmp(&hundred_t), Ordering::Greater);

        assert_eq!(t.lex_cmp(&t), Ordering::Equal);
    }

    #[test]
    fn slope_examples() {
        // Normalizing the rank-one module polynomial gives t^2 + 3t + 2.
        let p = poly((1, 2), (3, 2), (1, 1));
        assert_eq!(p.slope().unwrap(), poly((1, 1), (3, 1), (2, 1)));

        let linear = poly((0, 1), (2, 1), (2, 1));
        assert_eq!(linear.slope().unwrap(), poly((0, 1), (1, 1), (1, 1)));

        let constant = HilbPoly::constant(rat(5, 1));
        assert_eq!(constant.slope().unwrap(), HilbPoly::constant(Rat::one()));

        assert!(matches!(HilbPoly::zero().slope(), Err(Error::ZeroSlope)));
    }

    #[test]
    fn shift_examples() {
        let p_r = binom2(0);
        assert_eq!(p_r.shift(-1), binom2(1));
        assert_eq!(p_r.shift(0), p_r);
        let t = poly((0, 1), (1, 1), (0, 1));
        assert_eq!(t.shift(3), poly((0, 1), (1, 1), (3, 1)));
    }

    #[test]
    fn degree_and_zero() {
        assert_eq!(HilbPoly::zero().degree(), -1);
        assert_eq!(HilbPoly::constant(Rat::one()).degree(), 0);
        assert_eq!(poly((0, 1), (1, 1), (0, 1)).degree(), 1);
        assert_eq!(binom2(0).degree(), 2);
    }

    #[test]
    fn display_polynomials() {
        assert_eq!(binom2(0).to_string(), "1/2*t^2 + 3/2*t + 1");
        assert_eq!(binom2(2).to_string(), "1/2*t^2 - 1/2*t");
        assert_eq!(HilbPoly::zero().to_string(), "0");
    }
}
