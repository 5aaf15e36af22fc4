use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use dashu_float::ops::{Abs, SquareRoot};
use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;
use dashu_int::{IBig, UBig};
use dashu_ratio::RBig;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

type Float = FBig<HalfEven, 2>;

/// Working precision in decimal digits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Precision(u32);

impl Precision {
    pub const MIN_DIGITS: u32 = 30;
    pub const DEFAULT: Precision = Precision(60);

    pub fn new(digits: u32) -> Result<Self> {
        if digits < Self::MIN_DIGITS {
            return Err(Error::PrecisionTooLow {
                got: digits,
                min: Self::MIN_DIGITS,
            });
        }
        Ok(Self(digits))
    }

    pub fn digits(self) -> u32 {
        self.0
    }

    /// Binary mantissa width, with guard bits on top of the decimal target.
    fn bits(self) -> usize {
        (self.0 as f64 * std::f64::consts::LOG2_10).ceil() as usize + 32
    }

    /// `10^{-digits/2}`, the default threshold for rank and identity checks.
    pub fn half_tolerance(self) -> QScalar {
        QScalar::ten_pow(-(self.0 as i64 / 2), self)
    }
}

impl Default for Precision {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// The deformation parameter: a rational number strictly inside (0, 1).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QParam {
    value: RBig,
}

impl QParam {
    pub fn new(numerator: i64, denominator: i64) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::InvalidQ(format!("{numerator}/0")));
        }
        Self::from_rational(RBig::from_parts_signed(
            IBig::from(numerator),
            IBig::from(denominator),
        ))
    }

    pub fn from_rational(value: RBig) -> Result<Self> {
        if value <= RBig::ZERO || value >= RBig::ONE {
            return Err(Error::InvalidQ(value.to_string()));
        }
        Ok(Self { value })
    }

    pub fn half() -> Self {
        Self::new(1, 2).expect("1/2 lies in (0,1)")
    }

    pub fn value(&self) -> &RBig {
        &self.value
    }

    pub fn numerator(&self) -> &IBig {
        self.value.numerator()
    }

    pub fn denominator(&self) -> &UBig {
        self.value.denominator()
    }
}

impl Default for QParam {
    fn default() -> Self {
        Self::half()
    }
}

impl fmt::Display for QParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator(), self.denominator())
    }
}

impl FromStr for QParam {
    type Err = Error;

    /// Accepts `P/R` or a bare integer (which is always rejected as out of range).
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidQ(s.to_string());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let num: i64 = num.parse().map_err(|_| bad())?;
        let den: i64 = den.parse().map_err(|_| bad())?;
        Self::new(num, den).map_err(|_| bad())
    }
}

impl Serialize for QParam {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Arbitrary-precision real used wherever square roots appear.
#[derive(Clone, Debug)]
pub struct QScalar {
    value: Float,
    precision: Precision,
}

impl QScalar {
    pub fn zero(precision: Precision) -> Self {
        Self::from_int(0, precision)
    }

    pub fn one(precision: Precision) -> Self {
        Self::from_int(1, precision)
    }

    pub fn from_int(n: i64, precision: Precision) -> Self {
        Self {
            value: Float::from(n).with_precision(precision.bits()).value(),
            precision,
        }
    }

    pub fn from_rational(r: &RBig, precision: Precision) -> Self {
        let bits = precision.bits();
        let num = Float::from(r.numerator().clone())
            .with_precision(bits)
            .value();
        let den = Float::from(IBig::from(r.denominator().clone()))
            .with_precision(bits)
            .value();
        Self {
            value: num / den,
            precision,
        }
    }

    pub fn ten_pow(e: i64, precision: Precision) -> Self {
        let ten = RBig::from(10u8);
        Self::from_rational(&crate::qarith::laurent::rational_pow(&ten, e), precision)
    }

    /// Positive square root of an exact non-negative rational.
    pub fn sqrt_rational(r: &RBig, precision: Precision) -> Result<Self> {
        Self::from_rational(r, precision).sqrt()
    }

    pub fn sqrt(&self) -> Result<Self> {
        match self.value.sign() {
            dashu_int::Sign::Negative if !self.is_zero() => Err(Error::InvalidArgument(format!(
                "square root of negative value {self}"
            ))),
            _ if self.is_zero() => Ok(Self::zero(self.precision)),
            _ => Ok(Self {
                value: self.value.sqrt(),
                precision: self.precision,
            }),
        }
    }

    pub fn precision(&self) -> Precision {
        self.precision
    }

    pub fn is_zero(&self) -> bool {
        self.value == Float::ZERO
    }

    pub fn abs(&self) -> Self {
        Self {
            value: self.value.clone().abs(),
            precision: self.precision,
        }
    }

    pub fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64().value()
    }

    /// Decimal scientific notation with `digits` significant digits.
    pub fn to_decimal(&self, digits: u32) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let d = self
            .value
            .clone()
            .with_base_and_precision::<10>(digits as usize)
            .value();
        format!("{d:e}")
    }

    fn combine(a: Precision, b: Precision) -> Precision {
        a.max(b)
    }
}

impl fmt::Display for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(self.precision.digits()))
    }
}

impl Serialize for QScalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl PartialEq for QScalar {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl PartialOrd for QScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.value.partial_cmp(&other.value)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident) => {
        impl $tr for &QScalar {
            type Output = QScalar;
            fn $m(self, rhs: &QScalar) -> QScalar {
                QScalar {
                    value: $tr::$m(&self.value, &rhs.value),
                    precision: QScalar::combine(self.precision, rhs.precision),
                }
            }
        }
        impl $tr for QScalar {
            type Output = QScalar;
            fn $m(self, rhs: QScalar) -> QScalar {
                $tr::$m(&self, &rhs)
            }
        }
    };
}
binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for &QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        QScalar {
            value: -self.value.clone(),
            precision: self.precision,
        }
    }
}

impl Neg for QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        -&self
    }
}
