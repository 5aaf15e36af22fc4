//! The anti-holomorphic Dolbeault operator on line bundles over `CP^1_q`,
//! and the scalar coefficient identities behind the `CP^2_q` computation.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{numeric_rank, SparseMatrix};
use crate::qarith::{q_int, Precision, QIntTable, QParam, QScalar};

/// A half-integer, stored doubled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInt(i64);

impl HalfInt {
    pub fn from_doubled(twice: i64) -> Self {
        Self(twice)
    }

    pub fn from_int(n: i64) -> Self {
        Self(2 * n)
    }

    pub fn doubled(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl FromStr for HalfInt {
    type Err = Error;

    /// Accepts `7` or `7/2`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("not a half-integer: {s}"));
        match s.split_once('/') {
            Some((num, "2")) => num.trim().parse().map(Self).map_err(|_| bad()),
            Some(_) => Err(bad()),
            None => s
                .trim()
                .parse::<i64>()
                .map(Self::from_int)
                .map_err(|_| bad()),
        }
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Basis section `|l, N/2, m>` of `L_N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Cp1Section {
    pub l: HalfInt,
    pub m: HalfInt,
    #[serde(rename = "N")]
    pub n: i64,
}

fn sections(n: i64, l_max: HalfInt) -> Vec<Cp1Section> {
    let lo = n.abs();
    (lo..=l_max.doubled())
        .step_by(2)
        .flat_map(|l2| {
            (-l2..=l2).step_by(2).map(move |m2| Cp1Section {
                l: HalfInt(l2),
                m: HalfInt(m2),
                n,
            })
        })
        .collect()
}

/// `0 -> L_N -> L_{N-2} -> 0` cut off at `l <= l_max`.
#[derive(Clone, Debug)]
pub struct TruncatedComplex {
    pub n: i64,
    pub l_max: HalfInt,
    pub source: Vec<Cp1Section>,
    pub target: Vec<Cp1Section>,
    pub operator: SparseMatrix,
}

impl TruncatedComplex {
    /// Source and target index ranges of each `l` present in either.
    fn blocks(&self) -> Vec<(HalfInt, Vec<usize>, Vec<usize>)> {
        let mut ls: Vec<HalfInt> = self
            .source
            .iter()
            .chain(&self.target)
            .map(|s| s.l)
            .collect();
        ls.sort();
        ls.dedup();
        ls.into_iter()
            .map(|l| {
                let pick = |v: &[Cp1Section]| -> Vec<usize> {
                    v.iter()
                        .enumerate()
                        .filter(|(_, s)| s.l == l)
                        .map(|(i, _)| i)
                        .collect()
                };
                (l, pick(&self.source), pick(&self.target))
            })
            .collect()
    }

    /// No entry connects different `l`.
    pub fn is_block_diagonal(&self) -> bool {
        (0..self.operator.ncols()).all(|c| {
            self.operator
                .column(c)
                .iter()
                .all(|(r, _)| self.target[*r].l == self.source[c].l)
        })
    }
}

/// `sqrt([l - N/2 + 1][l + N/2])`.
pub fn cp1_coefficient(n: i64, l: HalfInt, table: &QIntTable, precision: Precision) -> QScalar {
    let l2 = l.doubled();
    let a = (l2 - n + 2) / 2;
    let b = (l2 + n) / 2;
    QScalar::sqrt_rational(&(table.get(a) * table.get(b)), precision)
        .expect("q-integers of non-negative arguments are non-negative")
}

pub fn cp1_dolbeault_matrix(
    n: i64,
    l_max: HalfInt,
    q: &QParam,
    precision: Precision,
) -> Result<TruncatedComplex> {
    if l_max.doubled() < n.abs() {
        return Err(Error::InvalidArgument(format!(
            "l_max = {l_max} is below |N|/2 for N = {n}"
        )));
    }
    let source = sections(n, l_max);
    let target = sections(n - 2, l_max);
    let table = QIntTable::new(q, l_max.doubled() + n.abs() + 4);
    let columns = source
        .iter()
        .map(
            |s| match target.iter().position(|t| t.l == s.l && t.m == s.m) {
                Some(r) => vec![(r, cp1_coefficient(n, s.l, &table, precision))],
                None => vec![],
            },
        )
        .collect();
    let operator = SparseMatrix::from_columns(target.len(), columns);
    Ok(TruncatedComplex {
        n,
        l_max,
        source,
        target,
        operator,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct EulerReport {
    #[serde(rename = "N")]
    pub n: i64,
    pub l_max: HalfInt,
    pub dim_ker: usize,
    pub dim_coker: usize,
    pub chi: i64,
    pub expected_chi: i64,
    /// `chi` is unchanged when the cutoff is lowered by one.
    pub stable: bool,
    pub ill_conditioned: bool,
}

impl EulerReport {
    pub fn pass(&self) -> bool {
        self.chi == self.expected_chi && self.stable && !self.ill_conditioned
    }
}

struct Counts {
    ker: usize,
    coker: usize,
    ill: bool,
}

fn count(complex: &TruncatedComplex, precision: Precision) -> Counts {
    let tol = precision.half_tolerance();
    let mut c = Counts {
        ker: 0,
        coker: 0,
        ill: false,
    };
    for (_, src, tgt) in complex.blocks() {
        match (src.is_empty(), tgt.is_empty()) {
            (false, true) => c.ker += src.len(),
            (true, false) => c.coker += tgt.len(),
            (false, false) => {
                let cols: Vec<Vec<QScalar>> = complex
                    .operator
                    .dense_columns(&src, precision)
                    .into_iter()
                    .map(|col| tgt.iter().map(|&r| col[r].clone()).collect())
                    .collect();
                let d = numeric_rank(&cols, &tol, precision);
                c.ker += src.len() - d.rank;
                c.coker += tgt.len() - d.rank;
                c.ill |= d.ill_conditioned;
            }
            (true, true) => {}
        }
    }
    c
}

/// Kernel, cokernel and `chi = ker - coker` of the truncated complex.
pub fn cp1_euler_characteristic(
    n: i64,
    l_max: HalfInt,
    q: &QParam,
    precision: Precision,
) -> Result<EulerReport> {
    if l_max.doubled() < n.abs() + 4 {
        return Err(Error::InvalidArgument(format!(
            "l_max = {l_max} leaves no stability margin for N = {n}; need l_max >= |N|/2 + 2"
        )));
    }
    let here = count(&cp1_dolbeault_matrix(n, l_max, q, precision)?, precision);
    let lower = count(
        &cp1_dolbeault_matrix(n, HalfInt(l_max.doubled() - 2), q, precision)?,
        precision,
    );
    let chi = here.ker as i64 - here.coker as i64;
    let chi_lower = lower.ker as i64 - lower.coker as i64;
    Ok(EulerReport {
        n,
        l_max,
        dim_ker: here.ker,
        dim_coker: here.coker,
        chi,
        expected_chi: 1 - n,
        stable: chi == chi_lower,
        ill_conditioned: here.ill || lower.ill,
    })
}

/// Residuals of the two scalar identities at one `(n, q)`.
#[derive(Clone, Debug, Serialize)]
pub struct Cp2Row {
    pub n: u32,
    pub q: QParam,
    /// `-sqrt(X) - sqrt(X) + (2/[2]) sqrt([2]) sqrt([2]) sqrt(X)`,
    /// `X = [n][n+5]/([2][3])`.
    pub cancellation_residual: QScalar,
    /// `-sqrt(Y) - sqrt(Y) + 2 sqrt(Y)`, `Y = [n+2][n+3]/[2]`, with the
    /// left terms built from factor roots and the right from `Y` itself.
    pub total_residual: QScalar,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Cp2Report {
    pub tolerance: QScalar,
    pub rows: Vec<Cp2Row>,
    pub pass: bool,
}

fn cp2_row(n: u32, q: &QParam, precision: Precision, tol: &QScalar) -> Cp2Row {
    let qi = |z: i64| q_int(z).eval_exact(q);
    let sq = |r| QScalar::sqrt_rational(&r, precision).expect("non-negative radicand");
    let n = n as i64;
    let two = QScalar::from_int(2, precision);

    let x = sq(qi(n) * qi(n + 5) / (qi(2) * qi(3)));
    let s2 = sq(qi(2));
    let e1e2 = &(&(&two / &QScalar::from_rational(&qi(2), precision)) * &(&s2 * &s2)) * &x;
    let cancellation = &(&(-&x) - &x) + &e1e2;

    let term = &(&sq(qi(n + 2)) * &sq(qi(n + 3))) / &s2;
    let lhs = &(-&term) - &term;
    let rhs = -(&two * &sq(qi(n + 2) * qi(n + 3) / qi(2)));
    let total = &lhs - &rhs;

    let (c, t) = (cancellation.abs(), total.abs());
    let pass = c <= *tol && t <= *tol;
    Cp2Row {
        n: n as u32,
        q: q.clone(),
        cancellation_residual: c,
        total_residual: t,
        pass,
    }
}

/// Checks both identities on every `(n, q)` pair, to `10^{-precision/2}`.
pub fn cp2_coefficient_identity(ns: &[u32], qs: &[QParam], precision: Precision) -> Cp2Report {
    let tol = precision.half_tolerance();
    let pairs: Vec<(u32, &QParam)> = qs
        .iter()
        .flat_map(|q| ns.iter().map(move |&n| (n, q)))
        .collect();
    let rows: Vec<Cp2Row> = pairs
        .par_iter()
        .map(|(n, q)| cp2_row(*n, q, precision, &tol))
        .collect();
    let pass = rows.iter().all(|r| r.pass);
    Cp2Report {
        tolerance: tol,
        rows,
        pass,
    }
}
