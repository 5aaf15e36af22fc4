//! Exact and numeric q-arithmetic.
//!
//! Everything that avoids square roots stays in [`QLaurent`], an exact
//! integer Laurent polynomial in `q`. Evaluation at a rational `q` gives an
//! exact rational, and [`QScalar`] carries the arbitrary-precision reals
//! needed once square roots enter.

mod laurent;
mod scalar;

pub use laurent::{rational_pow, QLaurent};
pub use scalar::{Precision, QParam, QScalar};

use dashu_int::IBig;
use dashu_ratio::RBig;

use crate::error::{Error, Result};

/// The q-integer `[z] = (q^z - q^{-z}) / (q - q^{-1})`.
pub fn q_int(z: i64) -> QLaurent {
    let n = z.abs();
    let sign = if z < 0 { -1 } else { 1 };
    QLaurent::from_terms((0..n).map(|i| (n - 1 - 2 * i, IBig::from(sign))))
}

/// `[n]! = [n][n-1]...[1]`.
pub fn q_factorial(n: u32) -> QLaurent {
    (1..=n as i64).fold(QLaurent::one(), |acc, k| &acc * &q_int(k))
}

/// The q-binomial `[n]! / ([m]! [n-m]!)`.
pub fn q_binomial(n: i64, m: i64) -> Result<QLaurent> {
    if m < 0 || m > n {
        return Err(Error::InvalidArgument(format!(
            "q_binomial requires 0 <= m <= n, got n = {n}, m = {m}"
        )));
    }
    let den = &q_factorial(m as u32) * &q_factorial((n - m) as u32);
    q_factorial(n as u32).div_exact(&den)
}

/// The q-multinomial `q^{-sum_{r<s} j_r j_s} [j_1+...+j_k]! / ([j_1]!...[j_k]!)`.
pub fn q_multinomial(parts: &[u32]) -> Result<QLaurent> {
    let total: u32 = parts.iter().sum();
    let den = parts
        .iter()
        .fold(QLaurent::one(), |acc, &j| &acc * &q_factorial(j));
    let ratio = q_factorial(total).div_exact(&den)?;
    let mut cross: i64 = 0;
    for (r, &a) in parts.iter().enumerate() {
        for &b in &parts[r + 1..] {
            cross += a as i64 * b as i64;
        }
    }
    Ok(ratio.shift(-cross))
}

/// Numeric value of `p` at `q`.
pub fn eval(p: &QLaurent, q: &QParam, precision: Precision) -> QScalar {
    p.eval(q, precision)
}

/// Exact rational values of `[z]` for `z` in a fixed window.
///
/// Built once per computation and read-only afterwards.
#[derive(Clone, Debug)]
pub struct QIntTable {
    offset: i64,
    values: Vec<RBig>,
}

impl QIntTable {
    pub fn new(q: &QParam, max_abs: i64) -> Self {
        let values = (-max_abs..=max_abs)
            .map(|z| q_int(z).eval_exact(q))
            .collect();
        Self {
            offset: max_abs,
            values,
        }
    }

    pub fn get(&self, z: i64) -> RBig {
        let idx = z + self.offset;
        if idx >= 0 && (idx as usize) < self.values.len() {
            self.values[idx as usize].clone()
        } else {
            panic!("q-integer [{z}] outside table window of +-{}", self.offset)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> QLaurent {
        QLaurent::from_terms(terms.iter().map(|&(e, c)| (e, IBig::from(c))))
    }

    #[test]
    fn q_int_small_values() {
        assert!(q_int(0).is_zero());
        assert_eq!(q_int(1), QLaurent::one());
        assert_eq!(q_int(2), lp(&[(1, 1), (-1, 1)]));
        assert_eq!(q_int(-2), -q_int(2));
        assert_eq!(q_int(4).support(), vec![-3, -1, 1, 3]);
    }

    #[test]
    fn q_factorial_small_values() {
        assert_eq!(q_factorial(0), QLaurent::one());
        assert_eq!(q_factorial(2), lp(&[(1, 1), (-1, 1)]));
    }

    #[test]
    fn q_factorial_three_matches_termwise_expansion() {
        // (q + q^-1)(q^2 + 1 + q^-2) expanded term by term.
        let expected = lp(&[(3, 1), (1, 2), (-1, 2), (-3, 1)]);
        assert_eq!(q_factorial(3), expected);
    }

    #[test]
    fn q_binomial_edges() {
        assert_eq!(q_binomial(2, 1).unwrap(), q_int(2));
        for n in 0..6 {
            assert_eq!(q_binomial(n, 0).unwrap(), QLaurent::one());
            assert_eq!(q_binomial(n, n).unwrap(), QLaurent::one());
        }
        assert!(q_binomial(2, 3).is_err());
        assert!(q_binomial(2, -1).is_err());
    }

    #[test]
    fn q_multinomial_small_values() {
        assert_eq!(q_multinomial(&[5]).unwrap(), QLaurent::one());
        assert_eq!(q_multinomial(&[1, 1]).unwrap(), lp(&[(0, 1), (-2, 1)]));
        assert!(!q_multinomial(&[1, 1]).unwrap().is_palindromic());
    }

    #[test]
    fn eval_examples() {
        let q = QParam::half();
        let p = Precision::DEFAULT;
        assert_eq!(
            q_int(2).eval_exact(&q),
            RBig::from_parts(5.into(), 2u8.into())
        );
        assert_eq!(QLaurent::one().eval_exact(&q), RBig::ONE);
        // 2^-4 + 2^-2 + 1 + 2^2 + 2^4
        assert_eq!(
            q_int(5).eval_exact(&q),
            RBig::from_parts(341.into(), 16u8.into())
        );
        assert_eq!(eval(&q_int(5), &q, p).to_decimal(6), "2.13125e1");
    }

    #[test]
    fn q_int_table_matches_direct_evaluation() {
        let q = QParam::new(3, 4).unwrap();
        let t = QIntTable::new(&q, 6);
        for z in -6..=6 {
            assert_eq!(t.get(z), q_int(z).eval_exact(&q));
        }
    }
}
