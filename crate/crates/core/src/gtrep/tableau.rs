use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Highest weight `(n_1, ..., n_ell)` of an irreducible representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HighestWeight(Vec<u32>);

impl HighestWeight {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidWeight(
                "weight needs at least one entry".into(),
            ));
        }
        Ok(Self(parts))
    }

    pub fn from_signed(parts: &[i64]) -> Result<Self> {
        let parts = parts
            .iter()
            .map(|&p| {
                u32::try_from(p)
                    .map_err(|_| Error::InvalidWeight(format!("negative entry {p} in {parts:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }

    /// The trivial weight of rank `ell`.
    pub fn zero(ell: usize) -> Self {
        Self(vec![0; ell])
    }

    /// `(0, ..., 0, 1)`, whose matrix coefficients are the generators `u^i_j`.
    pub fn fundamental(ell: usize) -> Self {
        let mut v = vec![0; ell];
        v[ell - 1] = 1;
        Self(v)
    }

    pub fn ell(&self) -> usize {
        self.0.len()
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Top row of every tableau, normalized so the last entry is zero.
    pub fn top_row(&self) -> Vec<i64> {
        let ell = self.ell();
        let mut row = vec![0i64; ell + 1];
        for i in (0..ell).rev() {
            row[i] = row[i + 1] + self.0[i] as i64;
        }
        row
    }
}

impl fmt::Display for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for HighestWeight {
    type Err = Error;

    /// Parses `1,0,2` (parentheses optional).
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidWeight(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

impl Serialize for HighestWeight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// A Gelfand-Tsetlin pattern. `rows[j - 1]` holds row `j`, which has `j`
/// entries `m_{1,j} >= ... >= m_{j,j}`; the top row is row `ell + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GtTableau {
    rows: Vec<Vec<i64>>,
}

impl GtTableau {
    /// Rows listed bottom (length 1) to top.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        for (j, row) in rows.iter().enumerate() {
            if row.len() != j + 1 {
                return Err(Error::InvalidTableau(format!(
                    "row {} has {} entries",
                    j + 1,
                    row.len()
                )));
            }
        }
        if rows.len() < 2 {
            return Err(Error::InvalidTableau("need at least two rows".into()));
        }
        let t = Self { rows };
        if !t.is_interlacing() {
            return Err(Error::InvalidTableau(format!("{t} does not interlace")));
        }
        Ok(t)
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<i64>>) -> Self {
        Self { rows }
    }

    pub fn ell(&self) -> usize {
        self.rows.len() - 1
    }

    /// `m_{i,j}`, 1-based.
    pub fn m(&self, i: usize, j: usize) -> i64 {
        self.rows[j - 1][i - 1]
    }

    /// `l_{i,j} = m_{i,j} - i`.
    pub fn l(&self, i: usize, j: usize) -> i64 {
        self.m(i, j) - i as i64
    }

    pub fn row(&self, j: usize) -> &[i64] {
        &self.rows[j - 1]
    }

    /// Entries with the top row first, then row `ell`, and so on.
    pub fn flattened(&self) -> Vec<i64> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    pub fn is_interlacing(&self) -> bool {
        (1..self.rows.len()).all(|j| {
            (1..=j)
                .all(|i| self.m(i, j + 1) >= self.m(i, j) && self.m(i, j) >= self.m(i + 1, j + 1))
        })
    }

    /// Highest weight read off the top row.
    pub fn weight(&self) -> HighestWeight {
        let top = self.row(self.ell() + 1);
        HighestWeight(top.windows(2).map(|w| (w[0] - w[1]) as u32).collect())
    }

    /// Copy with `m_{i,j}` shifted by `delta`; `None` if interlacing breaks.
    pub fn shifted(&self, i: usize, j: usize, delta: i64) -> Option<Self> {
        let mut rows = self.rows.clone();
        rows[j - 1][i - 1] += delta;
        let t = Self { rows };
        t.is_interlacing().then_some(t)
    }

    pub fn max_abs_entry(&self) -> i64 {
        self.rows
            .iter()
            .flatten()
            .map(|x| x.abs())
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for GtTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .rev()
            .map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join(" | "))
    }
}

impl Serialize for GtTableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.flattened().serialize(s)
    }
}

/// All interlacing patterns with the normalized top row of `weight`, in
/// lexicographic order of [`GtTableau::flattened`].
pub fn enumerate_tableaux(weight: &HighestWeight) -> Vec<GtTableau> {
    enumerate_capped(weight, usize::MAX).expect("uncapped enumeration cannot fail")
}

/// As [`enumerate_tableaux`], failing once more than `cap` patterns appear.
pub fn enumerate_capped(weight: &HighestWeight, cap: usize) -> Result<Vec<GtTableau>> {
    let ell = weight.ell();
    let mut rows_top_down: Vec<Vec<i64>> = vec![weight.top_row()];
    let mut out = Vec::new();
    fill_rows(ell, &mut rows_top_down, &mut out, cap)?;
    Ok(out)
}

fn fill_rows(
    ell: usize,
    rows_top_down: &mut Vec<Vec<i64>>,
    out: &mut Vec<GtTableau>,
    cap: usize,
) -> Result<()> {
    if rows_top_down.len() == ell + 1 {
        if out.len() >= cap {
            return Err(Error::DimensionCap {
                dim: out.len() + 1,
                cap,
            });
        }
        let rows = rows_top_down.iter().rev().cloned().collect();
        out.push(GtTableau::from_rows_unchecked(rows));
        return Ok(());
    }
    let upper = rows_top_down.last().expect("top row present").clone();
    let len = upper.len() - 1;
    let mut row = vec![0i64; len];
    fill_entries(ell, &upper, &mut row, 0, rows_top_down, out, cap)
}

fn fill_entries(
    ell: usize,
    upper: &[i64],
    row: &mut Vec<i64>,
    pos: usize,
    rows_top_down: &mut Vec<Vec<i64>>,
    out: &mut Vec<GtTableau>,
    cap: usize,
) -> Result<()> {
    if pos == row.len() {
        rows_top_down.push(row.clone());
        let res = fill_rows(ell, rows_top_down, out, cap);
        rows_top_down.pop();
        return res;
    }
    for v in upper[pos + 1]..=upper[pos] {
        row[pos] = v;
        fill_entries(ell, upper, row, pos + 1, rows_top_down, out, cap)?;
    }
    Ok(())
}

/// Exponent `a_k` with `K_k |m> = q^{a_k/2} |m>`:
/// `2 sum_i m_{i,k} - sum_i m_{i,k-1} - sum_i m_{i,k+1}`.
pub fn weight_exponent(k: usize, t: &GtTableau) -> i64 {
    let row_sum = |j: usize| -> i64 {
        if j == 0 {
            0
        } else {
            t.row(j).iter().sum()
        }
    };
    2 * row_sum(k) - row_sum(k - 1) - row_sum(k + 1)
}
