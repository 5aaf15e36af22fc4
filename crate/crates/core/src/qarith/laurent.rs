use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use dashu_int::IBig;
use dashu_ratio::RBig;
use serde::{Serialize, Serializer};

use super::scalar::{Precision, QParam, QScalar};
use crate::error::{Error, Result};

/// Laurent polynomial in `q` with exact integer coefficients.
///
/// Zero coefficients are never stored, so structural equality is
/// mathematical equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QLaurent {
    coeffs: BTreeMap<i64, IBig>,
}

impl QLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(IBig::ONE, 0)
    }

    /// `c * q^e`.
    pub fn monomial(c: IBig, e: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if c != IBig::ZERO {
            coeffs.insert(e, c);
        }
        Self { coeffs }
    }

    pub fn q_power(e: i64) -> Self {
        Self::monomial(IBig::ONE, e)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(IBig::from(c), 0)
    }

    /// Builds from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, IBig)>,
    {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    fn add_term(&mut self, e: i64, c: IBig) {
        if c == IBig::ZERO {
            return;
        }
        let entry = self.coeffs.entry(e).or_insert(IBig::ZERO);
        *entry += c;
        if *entry == IBig::ZERO {
            self.coeffs.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: i64) -> IBig {
        self.coeffs.get(&e).cloned().unwrap_or(IBig::ZERO)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &IBig)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    /// Exponents carrying a nonzero coefficient, ascending.
    pub fn support(&self) -> Vec<i64> {
        self.coeffs.keys().copied().collect()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// The image under `q -> q^{-1}`.
    pub fn bar(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn is_palindromic(&self) -> bool {
        *self == self.bar()
    }

    pub fn shift(&self, by: i64) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (e + by, c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division; fails unless the remainder is zero.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let inexact = || Error::InexactDivision {
            dividend: self.to_string(),
            divisor: divisor.to_string(),
        };
        let (Some(d_lo), Some(d_hi)) = (divisor.min_exponent(), divisor.max_exponent()) else {
            return Err(inexact());
        };
        let Some(a_lo) = self.min_exponent() else {
            return Ok(Self::zero());
        };
        let lead = divisor.coeff(d_hi);
        let floor = a_lo - d_lo;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(r_hi) = rem.max_exponent() {
            let e = r_hi - d_hi;
            if e < floor {
                return Err(inexact());
            }
            let c = rem.coeff(r_hi);
            if &c % &lead != IBig::ZERO {
                return Err(inexact());
            }
            let t = Self::monomial(&c / &lead, e);
            rem -= &(&t * divisor);
            quot += &t;
        }
        Ok(quot)
    }

    /// Exact value at a rational `q`.
    pub fn eval_exact(&self, q: &QParam) -> RBig {
        let (Some(lo), Some(hi)) = (self.min_exponent(), self.max_exponent()) else {
            return RBig::ZERO;
        };
        let q = q.value();
        let mut acc = RBig::ZERO;
        for e in (lo..=hi).rev() {
            acc = acc * q + RBig::from(self.coeff(e));
        }
        acc * rational_pow(q, lo)
    }

    pub fn eval(&self, q: &QParam, precision: Precision) -> QScalar {
        QScalar::from_rational(&self.eval_exact(q), precision)
    }
}

/// `base^e` for any integer `e` (base must be nonzero when `e < 0`).
pub fn rational_pow(base: &RBig, e: i64) -> RBig {
    let mut result = RBig::ONE;
    let mut sq = if e < 0 {
        RBig::ONE / base
    } else {
        base.clone()
    };
    let mut n = e.unsigned_abs();
    while n > 0 {
        if n & 1 == 1 {
            result = &result * &sq;
        }
        sq = &sq * &sq;
        n >>= 1;
    }
    result
}

impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().rev() {
            let negative = *c < IBig::ZERO;
            let mag = if negative { -c.clone() } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag == IBig::ONE;
            match (*e, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (e, true) => write!(f, "q^{e}")?,
                (e, false) => write!(f, "{mag}*q^{e}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for QLaurent {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl AddAssign<&QLaurent> for QLaurent {
    fn add_assign(&mut self, rhs: &QLaurent) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&QLaurent> for QLaurent {
    fn sub_assign(&mut self, rhs: &QLaurent) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, -c.clone());
        }
    }
}

impl Add for &QLaurent {
    type Output = QLaurent;
    fn add(self, rhs: &QLaurent) -> QLaurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &QLaurent {
    type Output = QLaurent;
    fn sub(self, rhs: &QLaurent) -> QLaurent {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &QLaurent {
    type Output = QLaurent;
    fn mul(self, rhs: &QLaurent) -> QLaurent {
        let mut out = QLaurent::zero();
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &rhs.coeffs {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        QLaurent {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QLaurent {
            type Output = QLaurent;
            fn $m(self, rhs: QLaurent) -> QLaurent {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        -&self
    }
}
