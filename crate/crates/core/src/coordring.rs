//! The homogeneous coordinate ring `C<z_1, ..., z_g> / (z_i z_j - q z_j z_i, i < j)`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::Mul;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::qarith::QLaurent;

/// Normal-ordered monomial `z_1^{s_1} ... z_g^{s_g}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QMonomial {
    exponents: Vec<u32>,
}

impl QMonomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self { exponents }
    }

    pub fn one(g: usize) -> Self {
        Self::new(vec![0; g])
    }

    /// Single generator `z_i`, 1-based.
    pub fn generator(g: usize, i: usize) -> Self {
        let mut e = vec![0; g];
        e[i - 1] = 1;
        Self::new(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn generators(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    /// The word `1^{s_1} 2^{s_2} ...` this monomial abbreviates.
    pub fn word(&self) -> Vec<usize> {
        self.exponents
            .iter()
            .enumerate()
            .flat_map(|(i, &s)| std::iter::repeat_n(i + 1, s as usize))
            .collect()
    }

    /// `(e, self * rhs)` with `self . rhs = q^e (self * rhs)` in the ring.
    pub fn product(&self, rhs: &QMonomial) -> (i64, QMonomial) {
        assert_eq!(self.generators(), rhs.generators());
        let mut inversions = 0i64;
        let mut smaller = 0i64;
        for (a, b) in self.exponents.iter().zip(&rhs.exponents) {
            inversions += *a as i64 * smaller;
            smaller += *b as i64;
        }
        let exps = self
            .exponents
            .iter()
            .zip(&rhs.exponents)
            .map(|(a, b)| a + b)
            .collect();
        (-inversions, QMonomial::new(exps))
    }
}

impl fmt::Display for QMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.exponents.iter().map(u32::to_string).collect();
        write!(f, "z^[{}]", parts.join(","))
    }
}

impl Serialize for QMonomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Element of the ring in the normal-ordered basis.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QPolynomial {
    terms: BTreeMap<QMonomial, QLaurent>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_monomial(m: QMonomial, c: QLaurent) -> Self {
        let mut p = Self::zero();
        p.add_term(m, &c);
        p
    }

    pub fn add_term(&mut self, m: QMonomial, c: &QLaurent) {
        let entry = self.terms.entry(m.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> &BTreeMap<QMonomial, QLaurent> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = QPolynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let (e, m) = ma.product(mb);
                out.add_term(m, &(ca * cb).shift(e));
            }
        }
        out
    }
}

impl Serialize for QPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let map: BTreeMap<String, String> = self
            .terms
            .iter()
            .map(|(m, c)| (m.to_string(), c.to_string()))
            .collect();
        map.serialize(s)
    }
}

fn check_word(g: usize, word: &[usize]) -> Result<()> {
    match word.iter().find(|&&i| i == 0 || i > g) {
        Some(i) => Err(Error::InvalidArgument(format!(
            "generator index {i} outside 1..={g}"
        ))),
        None => Ok(()),
    }
}

/// `word = q^e z^s` with `e = -#inversions`.
pub fn normal_order(g: usize, word: &[usize]) -> Result<(QLaurent, QMonomial)> {
    check_word(g, word)?;
    let mut inversions = 0i64;
    let mut seen = vec![0i64; g + 1];
    for &i in word {
        inversions += seen[i + 1..].iter().sum::<i64>();
        seen[i] += 1;
    }
    let mut exps = vec![0u32; g];
    for &i in word {
        exps[i - 1] += 1;
    }
    Ok((QLaurent::q_power(-inversions), QMonomial::new(exps)))
}

/// Every `(exponent, monomial)` reachable by a maximal sequence of
/// rewrites `z_j z_i -> q^{-1} z_i z_j` (`i < j`) at any position.
pub fn rewrite_outcomes(g: usize, word: &[usize]) -> Result<BTreeSet<(i64, QMonomial)>> {
    check_word(g, word)?;
    let mut memo: HashMap<Vec<usize>, BTreeSet<(i64, Vec<usize>)>> = HashMap::new();
    let ends = outcomes(word.to_vec(), &mut memo);
    Ok(ends
        .into_iter()
        .map(|(e, w)| {
            let mut exps = vec![0u32; g];
            for i in w {
                exps[i - 1] += 1;
            }
            (e, QMonomial::new(exps))
        })
        .collect())
}

fn outcomes(
    word: Vec<usize>,
    memo: &mut HashMap<Vec<usize>, BTreeSet<(i64, Vec<usize>)>>,
) -> BTreeSet<(i64, Vec<usize>)> {
    if let Some(r) = memo.get(&word) {
        return r.clone();
    }
    let mut result = BTreeSet::new();
    for p in 0..word.len().saturating_sub(1) {
        if word[p] > word[p + 1] {
            let mut next = word.clone();
            next.swap(p, p + 1);
            for (e, w) in outcomes(next, memo) {
                result.insert((e - 1, w));
            }
        }
    }
    if result.is_empty() {
        result.insert((0, word.clone()));
    }
    memo.insert(word, result.clone());
    result
}

/// All degree-`n` monomials in `g` generators, lexicographically descending
/// in exponent vectors.
pub fn enumerate_monomials(g: usize, n: u32) -> Vec<QMonomial> {
    fn go(g: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<QMonomial>) {
        if prefix.len() + 1 == g {
            prefix.push(left);
            out.push(QMonomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for s in (0..=left).rev() {
            prefix.push(s);
            go(g, left - s, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if g > 0 {
        go(g, n, &mut Vec::new(), &mut out);
    }
    out
}

/// Dimension of the degree-`n` part, by enumeration.
pub fn graded_dim(g: usize, n: u32) -> usize {
    enumerate_monomials(g, n).len()
}

/// A splitting `Z_1 Z_2 = q^{-R} Z` of a monomial into given degrees.
#[derive(Clone, Debug, Serialize)]
pub struct Factorization {
    pub z: QMonomial,
    /// First index (1-based) whose partial degree sum exceeds `deg Z_1`.
    pub k: Option<usize>,
    pub r: Vec<u32>,
    #[serde(rename = "R")]
    pub exponent: i64,
    pub z1: QMonomial,
    pub z2: QMonomial,
}

/// `R = sum_i r_i sum_{j<i} (s_j - r_j)`.
pub fn factorization_exponent(s: &[u32], r: &[u32]) -> i64 {
    let mut acc = 0i64;
    let mut left = 0i64;
    for (si, ri) in s.iter().zip(r) {
        acc += *ri as i64 * left;
        left += (*si - *ri) as i64;
    }
    acc
}

/// Splits `z` with `Z_1 = z^r` for an arbitrary `r <= s`, then checks the
/// result against [`normal_order`].
pub fn tensor_factorize_with(z: &QMonomial, r: &[u32]) -> Result<Factorization> {
    let s = z.exponents();
    if r.len() != s.len() || r.iter().zip(s).any(|(a, b)| a > b) {
        return Err(Error::DegreeMismatch(format!(
            "partition {r:?} does not fit under {s:?}"
        )));
    }
    let z1 = QMonomial::new(r.to_vec());
    let z2 = QMonomial::new(s.iter().zip(r).map(|(a, b)| a - b).collect());
    let exponent = factorization_exponent(s, r);
    let n = z1.degree();
    let mut partial = 0;
    let k = s.iter().position(|&si| {
        partial += si;
        partial > n
    });

    let mut word = z1.word();
    word.extend(z2.word());
    let (c, m) = normal_order(z.generators(), &word)?;
    if m != *z || c != QLaurent::q_power(-exponent) {
        return Err(Error::DegreeMismatch(format!(
            "{z1}{z2} normal orders to ({c}) {m}, expected q^-{exponent} {z}"
        )));
    }
    Ok(Factorization {
        z: z.clone(),
        k: k.map(|k| k + 1),
        r: r.to_vec(),
        exponent,
        z1,
        z2,
    })
}

/// Splits `z` into degrees `n` and `deg z - n`, filling `r` greedily from
/// the left.
pub fn tensor_factorize(z: &QMonomial, n: u32) -> Result<Factorization> {
    if n > z.degree() {
        return Err(Error::DegreeMismatch(format!(
            "cannot take degree {n} out of {z} of degree {}",
            z.degree()
        )));
    }
    let mut left = n;
    let r: Vec<u32> = z
        .exponents()
        .iter()
        .map(|&s| {
            let take = s.min(left);
            left -= take;
            take
        })
        .collect();
    tensor_factorize_with(z, &r)
}

/// Every partition `r <= s` of the given degree.
pub fn partitions_under(s: &[u32], n: u32) -> Vec<Vec<u32>> {
    fn go(s: &[u32], left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == s.len() {
            if left == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        for ri in 0..=s[prefix.len()].min(left) {
            prefix.push(ri);
            go(s, left - ri, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(s, n, &mut Vec::new(), &mut out);
    out
}
