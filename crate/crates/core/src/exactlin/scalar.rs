//! Exact field scalars: rationals and Gaussian rationals.
//!
//! Every value is kept in canonical reduced form, so structural equality
//! coincides with equality in the field. A value with vanishing imaginary
//! part is always stored in the `Rat` variant; `Gauss` implies a nonzero
//! imaginary part. There are no floats anywhere in the arithmetic; the
//! only float conversion is the explicit [`Scalar::to_f64_parts`] used at
//! serialization boundaries.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

/// Ground field marker. `Rational` is the default; `Gaussian` is selected
/// when a tower needs `i` (Clifford-type generators, complex eigenvalues).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Field {
    #[serde(rename = "q")]
    Rational,
    #[serde(rename = "qi")]
    Gaussian,
}

impl Field {
    pub fn contains(self, s: &Scalar) -> bool {
        match self {
            Field::Rational => s.is_real(),
            Field::Gaussian => true,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Field::Rational => "Q",
            Field::Gaussian => "Q(i)",
        }
    }
}

/// An element of ℚ or ℚ(i), canonically reduced.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Gauss(Box<(BigRational, BigRational)>),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rat(BigRational::one())
    }

    pub fn i() -> Self {
        Scalar::gauss(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_big(r: BigRational) -> Self {
        Scalar::Rat(r)
    }

    /// Canonical constructor: drops into `Rat` when the imaginary part is zero.
    pub fn gauss(re: BigRational, im: BigRational) -> Self {
        if im.is_zero() {
            Scalar::Rat(re)
        } else {
            Scalar::Gauss(Box::new((re, im)))
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_one())
    }

    pub fn is_real(&self) -> bool {
        matches!(self, Scalar::Rat(_))
    }

    pub fn re(&self) -> BigRational {
        match self {
            Scalar::Rat(r) => r.clone(),
            Scalar::Gauss(g) => g.0.clone(),
        }
    }

    pub fn im(&self) -> BigRational {
        match self {
            Scalar::Rat(_) => BigRational::zero(),
            Scalar::Gauss(g) => g.1.clone(),
        }
    }

    /// The rational part, or `None` for a genuinely complex value.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Gauss(_) => None,
        }
    }

    pub fn conj(&self) -> Self {
        match self {
            Scalar::Rat(r) => Scalar::Rat(r.clone()),
            Scalar::Gauss(g) => Scalar::gauss(g.0.clone(), -g.1.clone()),
        }
    }

    /// |z|² = z·z̄, always a rational.
    pub fn norm_sq(&self) -> BigRational {
        match self {
            Scalar::Rat(r) => r * r,
            Scalar::Gauss(g) => &g.0 * &g.0 + &g.1 * &g.1,
        }
    }

    pub fn inverse(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Scalar::Rat(r) => Scalar::Rat(r.recip()),
            Scalar::Gauss(_) => {
                let n = self.norm_sq();
                let c = self.conj();
                c * Scalar::Rat(n.recip())
            }
        }
    }

    pub fn div(&self, rhs: &Scalar) -> Self {
        self.clone() * rhs.inverse()
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Scalar::one();
        for _ in 0..k {
            acc = acc * self.clone();
        }
        acc
    }

    /// Crude size measure used to pick pivots that keep entries small.
    pub fn complexity(&self) -> u64 {
        fn bits(r: &BigRational) -> u64 {
            (r.numer().bits() + r.denom().bits()) as u64
        }
        match self {
            Scalar::Rat(r) => bits(r),
            Scalar::Gauss(g) => bits(&g.0) + bits(&g.1) + 1,
        }
    }

    /// Real and imaginary part as `f64` (serialization mirror only).
    pub fn to_f64_parts(&self) -> (f64, f64) {
        fn approx(r: &BigRational) -> f64 {
            r.to_f64().unwrap_or_else(|| {
                // Out-of-range components; fall back to a lossy big division.
                let n = r.numer().to_f64().unwrap_or(f64::NAN);
                let d = r.denom().to_f64().unwrap_or(f64::NAN);
                n / d
            })
        }
        match self {
            Scalar::Rat(r) => (approx(r), 0.0),
            Scalar::Gauss(g) => (approx(&g.0), approx(&g.1)),
        }
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        Scalar::gauss(self.re() + rhs.re(), self.im() + rhs.im())
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self = self.clone() + rhs;
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        Scalar::gauss(self.re() - rhs.re(), self.im() - rhs.im())
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        *self = self.clone() - rhs;
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Gauss(g) => Scalar::gauss(-g.0.clone(), -g.1.clone()),
        }
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        match (&self, &rhs) {
            // Fast path: both rational.
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            _ => {
                let (a, b) = (self.re(), self.im());
                let (c, d) = (rhs.re(), rhs.im());
                Scalar::gauss(&a * &c - &b * &d, &a * &d + &b * &c)
            }
        }
    }
}

impl MulAssign for Scalar {
    fn mul_assign(&mut self, rhs: Scalar) {
        *self = self.clone() * rhs;
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.clone() * rhs.clone()
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{}", fmt_rational(r)),
            Scalar::Gauss(g) => {
                let (re, im) = (&g.0, &g.1);
                if re.is_zero() {
                    return write!(f, "{}*i", fmt_rational(im));
                }
                if im.is_positive() {
                    write!(f, "{}+{}*i", fmt_rational(re), fmt_rational(im))
                } else {
                    write!(f, "{}-{}*i", fmt_rational(re), fmt_rational(&-im.clone()))
                }
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parse errors for the canonical scalar string form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseScalarError(pub String);

impl fmt::Display for ParseScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid scalar literal: {}", self.0)
    }
}

impl std::error::Error for ParseScalarError {}

fn parse_rational(s: &str) -> Result<BigRational, ParseScalarError> {
    let bad = || ParseScalarError(s.to_string());
    match s.split_once('/') {
        None => {
            let n = BigInt::from_str(s.trim()).map_err(|_| bad())?;
            Ok(BigRational::from_integer(n))
        }
        Some((num, den)) => {
            let n = BigInt::from_str(num.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(den.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
    }
}

impl FromStr for Scalar {
    type Err = ParseScalarError;

    /// Accepts `p`, `p/q`, `p/q+r/s*i`, `p/q-r/s*i` and `r/s*i`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || ParseScalarError(s.to_string());
        if let Some(im_part) = s.strip_suffix("*i") {
            // Split off a trailing real term: find the sign that separates
            // real and imaginary parts, skipping a leading sign.
            let mut split_at = None;
            for (idx, ch) in im_part.char_indices().skip(1) {
                if ch == '+' || ch == '-' {
                    split_at = Some((idx, ch));
                }
            }
            // A '/' after the sign candidate means the sign belonged to the
            // numerator of a fraction only if it was at position 0; interior
            // signs always separate the two terms in canonical form.
            if let Some((idx, ch)) = split_at {
                let re = parse_rational(&im_part[..idx])?;
                let im = parse_rational(&im_part[idx + 1..])?;
                let im = if ch == '-' { -im } else { im };
                Ok(Scalar::gauss(re, im))
            } else {
                Ok(Scalar::gauss(BigRational::zero(), parse_rational(im_part)?))
            }
        } else {
            if s.is_empty() {
                return Err(bad());
            }
            Ok(Scalar::Rat(parse_rational(s)?))
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Scalar::from_str(&s).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    #[test]
    fn canonical_form_collapses_zero_imaginary() {
        let z = Scalar::gauss(
            BigRational::from_integer(2.into()),
            BigRational::zero(),
        );
        assert!(z.is_real());
        assert_eq!(z, s(2));
    }

    #[test]
    fn gaussian_arithmetic() {
        let i = Scalar::i();
        assert_eq!(i.clone() * i.clone(), s(-1));
        let z = s(1) + i.clone();
        assert_eq!(z.clone() * z.conj(), s(2));
        assert_eq!(z.clone() * z.inverse(), s(1));
    }

    #[test]
    fn display_roundtrip() {
        for txt in ["0", "5", "-3/4", "1/2+1/3*i", "-2-1*i", "7*i", "-1/5*i"] {
            let v: Scalar = txt.parse().unwrap();
            assert_eq!(v.to_string(), txt, "canonical form of {txt}");
            let again: Scalar = v.to_string().parse().unwrap();
            assert_eq!(v, again);
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Scalar::from_str("").is_err());
        assert!(Scalar::from_str("1/0").is_err());
        assert!(Scalar::from_str("x+i").is_err());
    }
}
