//! Sparse matrices over [`QScalar`] and a rank-revealing factorization.

use std::collections::BTreeMap;

use dashu_ratio::RBig;
use serde::Serialize;

use crate::qarith::{Precision, QScalar};

/// Column-major sparse matrix; each column keeps its nonzeros sorted by row.
#[derive(Clone, Debug)]
pub struct SparseMatrix {
    nrows: usize,
    ncols: usize,
    cols: Vec<Vec<(usize, QScalar)>>,
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self {
            nrows,
            ncols,
            cols: vec![Vec::new(); ncols],
        }
    }

    pub fn identity(n: usize, precision: Precision) -> Self {
        Self::diagonal((0..n).map(|_| QScalar::one(precision)).collect())
    }

    pub fn diagonal(diag: Vec<QScalar>) -> Self {
        let n = diag.len();
        let cols = diag
            .into_iter()
            .enumerate()
            .map(|(i, v)| if v.is_zero() { vec![] } else { vec![(i, v)] })
            .collect();
        Self {
            nrows: n,
            ncols: n,
            cols,
        }
    }

    /// Builds from per-column entry lists; zero entries are dropped and
    /// repeated rows are summed.
    pub fn from_columns(nrows: usize, columns: Vec<Vec<(usize, QScalar)>>) -> Self {
        let ncols = columns.len();
        let cols = columns
            .into_iter()
            .map(|col| {
                let mut acc: BTreeMap<usize, QScalar> = BTreeMap::new();
                for (r, v) in col {
                    assert!(r < nrows, "row {r} out of range for {nrows} rows");
                    match acc.remove(&r) {
                        Some(prev) => {
                            acc.insert(r, &prev + &v);
                        }
                        None => {
                            acc.insert(r, v);
                        }
                    }
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        Self { nrows, ncols, cols }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn column(&self, c: usize) -> &[(usize, QScalar)] {
        &self.cols[c]
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&QScalar> {
        let col = &self.cols[c];
        col.binary_search_by_key(&r, |(row, _)| *row)
            .ok()
            .map(|i| &col[i].1)
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> Vec<(usize, usize, &QScalar)> {
        let mut out: Vec<_> = self
            .cols
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v)))
            .collect();
        out.sort_by_key(|(r, c, _)| (*r, *c));
        out
    }

    pub fn transpose(&self) -> Self {
        let mut cols = vec![Vec::new(); self.nrows];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                cols[*r].push((c, v.clone()));
            }
        }
        Self {
            nrows: self.ncols,
            ncols: self.nrows,
            cols,
        }
    }

    pub fn mul(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols, rhs.nrows, "dimension mismatch in product");
        let cols = rhs
            .cols
            .iter()
            .map(|rcol| {
                rcol.iter()
                    .flat_map(|(k, b)| self.cols[*k].iter().map(move |(r, a)| (*r, a * b)))
                    .collect()
            })
            .collect();
        SparseMatrix::from_columns(self.nrows, cols)
    }

    pub fn scale(&self, s: &QScalar) -> SparseMatrix {
        let cols = self
            .cols
            .iter()
            .map(|col| col.iter().map(|(r, v)| (*r, v * s)).collect())
            .collect();
        SparseMatrix::from_columns(self.nrows, cols)
    }

    pub fn add(&self, rhs: &SparseMatrix) -> SparseMatrix {
        self.combine(rhs, false)
    }

    pub fn sub(&self, rhs: &SparseMatrix) -> SparseMatrix {
        self.combine(rhs, true)
    }

    fn combine(&self, rhs: &SparseMatrix, negate: bool) -> SparseMatrix {
        assert_eq!((self.nrows, self.ncols), (rhs.nrows, rhs.ncols));
        let cols = self
            .cols
            .iter()
            .zip(&rhs.cols)
            .map(|(a, b)| {
                a.iter()
                    .cloned()
                    .chain(
                        b.iter()
                            .map(|(r, v)| (*r, if negate { -v } else { v.clone() })),
                    )
                    .collect()
            })
            .collect();
        SparseMatrix::from_columns(self.nrows, cols)
    }

    /// Largest absolute entry and its position, or `None` for the zero matrix.
    pub fn max_abs_entry(&self) -> Option<(QScalar, (usize, usize))> {
        let mut best: Option<(QScalar, (usize, usize))> = None;
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                let a = v.abs();
                if best.as_ref().is_none_or(|(b, _)| a > *b) {
                    best = Some((a, (*r, c)));
                }
            }
        }
        best
    }

    pub fn is_diagonal(&self) -> bool {
        self.cols
            .iter()
            .enumerate()
            .all(|(c, col)| col.iter().all(|(r, _)| *r == c))
    }

    /// Dense copy of the selected columns.
    pub fn dense_columns(&self, which: &[usize], precision: Precision) -> Vec<Vec<QScalar>> {
        which
            .iter()
            .map(|&c| {
                let mut dense = vec![QScalar::zero(precision); self.nrows];
                for (r, v) in &self.cols[c] {
                    dense[*r] = v.clone();
                }
                dense
            })
            .collect()
    }
}

/// Outcome of a numeric rank decision.
#[derive(Clone, Debug, Serialize)]
pub struct RankDecision {
    pub rank: usize,
    /// `|R_kk|` from column-pivoted Gram-Schmidt, descending; these track the
    /// singular values closely enough to place the rank gap.
    pub singular_estimates: Vec<QScalar>,
    /// A ratio fell within a factor 10 of the threshold.
    pub ill_conditioned: bool,
}

/// Numeric rank of the matrix with the given dense columns, using a relative
/// threshold on the pivoted diagonal of a QR factorization.
pub fn numeric_rank(
    columns: &[Vec<QScalar>],
    rel_threshold: &QScalar,
    precision: Precision,
) -> RankDecision {
    let mut work: Vec<Vec<QScalar>> = columns.to_vec();
    let mut remaining: Vec<usize> = (0..work.len()).collect();
    let mut estimates = Vec::new();
    let mut ill = false;
    let mut rank = 0;
    let mut leading: Option<QScalar> = None;
    let ten = QScalar::from_int(10, precision);
    let lo = rel_threshold / &ten;
    let hi = rel_threshold * &ten;

    while !remaining.is_empty() {
        let norms: Vec<QScalar> = remaining
            .iter()
            .map(|&c| norm(&work[c], precision))
            .collect();
        let (pos, best) = norms
            .iter()
            .enumerate()
            .fold(None::<(usize, &QScalar)>, |acc, (i, n)| match acc {
                Some((_, b)) if b >= n => acc,
                _ => Some((i, n)),
            })
            .expect("non-empty");
        let best = best.clone();
        if best.is_zero() {
            break;
        }
        let lead = leading.get_or_insert_with(|| best.clone()).clone();
        let ratio = &best / &lead;
        if ratio > lo && ratio < hi {
            ill = true;
        }
        estimates.push(best.clone());
        if ratio <= *rel_threshold {
            break;
        }
        rank += 1;
        let pivot = remaining.remove(pos);
        let unit: Vec<QScalar> = work[pivot].iter().map(|x| x / &best).collect();
        // Two orthogonalization passes keep the remaining columns clean.
        for _ in 0..2 {
            for &c in &remaining {
                let dot = dot(&unit, &work[c], precision);
                for (w, u) in work[c].iter_mut().zip(&unit) {
                    *w = &*w - &(u * &dot);
                }
            }
        }
    }
    RankDecision {
        rank,
        singular_estimates: estimates,
        ill_conditioned: ill,
    }
}

/// Exact solution of `A x = b` over the rationals, free variables set to
/// zero; `None` when the system is inconsistent. `a` is given by rows.
pub fn solve_exact(a: &[Vec<RBig>], b: &[RBig]) -> Option<Vec<RBig>> {
    let nvars = a.first().map_or(0, Vec::len);
    let mut rows: Vec<Vec<RBig>> = a
        .iter()
        .zip(b)
        .map(|(r, v)| {
            let mut row = r.clone();
            row.push(v.clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..nvars {
        let Some(p) = (next..rows.len()).find(|&i| rows[i][col] != RBig::ZERO) else {
            continue;
        };
        rows.swap(next, p);
        let inv = RBig::ONE / rows[next][col].clone();
        for x in rows[next].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = rows[next].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != next && row[col] != RBig::ZERO {
                let f = row[col].clone();
                for (x, pv) in row.iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&f * pv);
                }
            }
        }
        pivots.push(col);
        next += 1;
    }
    if rows[next..].iter().any(|r| r[nvars] != RBig::ZERO) {
        return None;
    }
    let mut x = vec![RBig::ZERO; nvars];
    for (i, &col) in pivots.iter().enumerate() {
        x[col] = rows[i][nvars].clone();
    }
    Some(x)
}

fn dot(a: &[QScalar], b: &[QScalar], precision: Precision) -> QScalar {
    a.iter()
        .zip(b)
        .fold(QScalar::zero(precision), |acc, (x, y)| &acc + &(x * y))
}

fn norm(a: &[QScalar], precision: Precision) -> QScalar {
    dot(a, a, precision)
        .sqrt()
        .expect("sum of squares is non-negative")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> QScalar {
        QScalar::from_int(v, Precision::DEFAULT)
    }

    #[test]
    fn product_and_transpose() {
        let a = SparseMatrix::from_columns(2, vec![vec![(0, s(1)), (1, s(3))], vec![(0, s(2))]]);
        let at = a.transpose();
        assert_eq!(at.get(1, 0), Some(&s(2)));
        assert_eq!(at.get(0, 1), Some(&s(3)));
        let p = a.mul(&at);
        // [[1,2],[3,0]] * [[1,3],[2,0]] = [[5,3],[3,9]]
        assert_eq!(p.get(0, 0), Some(&s(5)));
        assert_eq!(p.get(0, 1), Some(&s(3)));
        assert_eq!(p.get(1, 1), Some(&s(9)));
        assert!(a.sub(&a).max_abs_entry().is_none());
    }

    #[test]
    fn rank_of_dependent_columns() {
        let p = Precision::DEFAULT;
        let cols = vec![
            vec![s(1), s(2), s(3)],
            vec![s(2), s(4), s(6)],
            vec![s(0), s(1), s(1)],
        ];
        let d = numeric_rank(&cols, &p.half_tolerance(), p);
        assert_eq!(d.rank, 2);
        assert!(!d.ill_conditioned);
        assert!(numeric_rank(&[vec![s(0), s(0)]], &p.half_tolerance(), p).rank == 0);
        assert_eq!(numeric_rank(&[], &p.half_tolerance(), p).rank, 0);
    }

    #[test]
    fn exact_solve() {
        let r = |n: i64| RBig::from(n);
        let a = vec![vec![r(1), r(1)], vec![r(1), r(-1)], vec![r(2), r(0)]];
        let x = solve_exact(&a, &[r(3), r(1), r(4)]).unwrap();
        assert_eq!(x, vec![r(2), r(1)]);
        assert!(solve_exact(&a, &[r(3), r(1), r(5)]).is_none());
    }

    #[test]
    fn near_threshold_is_flagged() {
        let p = Precision::DEFAULT;
        let tiny = QScalar::ten_pow(-30, p);
        let cols = vec![vec![s(1), s(0)], vec![s(0), tiny]];
        let d = numeric_rank(&cols, &p.half_tolerance(), p);
        assert!(d.ill_conditioned);
    }
}
