use std::collections::HashMap;
use std::fmt;
use std::fmt::Write as _;

use dashu_ratio::RBig;
use rayon::prelude::*;

use super::tableau::{enumerate_capped, weight_exponent, GtTableau, HighestWeight};
use crate::error::{Error, Result};
use crate::linalg::SparseMatrix;
use crate::qarith::{rational_pow, Precision, QIntTable, QParam, QScalar};

/// Default ceiling on representation dimension.
pub const DEFAULT_DIM_CAP: usize = 20_000;

/// Exact radicand of `A^j_k` on `t`, or `None` when raising `m_{j,k}`
/// breaks interlacing (the coefficient is then zero).
pub fn raise_radicand(k: usize, j: usize, t: &GtTableau, table: &QIntTable) -> Option<RBig> {
    t.shifted(j, k, 1)?;
    let ljk = t.l(j, k);
    let mut num = RBig::ONE;
    for i in 1..=k + 1 {
        num *= table.get(t.l(i, k + 1) - ljk);
    }
    for i in 1..k {
        num *= table.get(t.l(i, k - 1) - ljk - 1);
    }
    let mut den = RBig::ONE;
    for i in (1..=k).filter(|&i| i != j) {
        let d = t.l(i, k) - ljk;
        den = den * table.get(d) * table.get(d - 1);
    }
    Some(-(num / den))
}

fn table_for(t: &GtTableau, q: &QParam) -> QIntTable {
    QIntTable::new(q, 2 * t.max_abs_entry() + t.ell() as i64 + 3)
}

fn coeff_from_radicand(
    k: usize,
    j: usize,
    t: &GtTableau,
    radicand: &RBig,
    precision: Precision,
) -> Result<QScalar> {
    if *radicand < RBig::ZERO {
        return Err(Error::NegativeRadicand {
            k,
            j,
            tableau: t.to_string(),
            radicand: radicand.to_string(),
        });
    }
    QScalar::sqrt_rational(radicand, precision)
}

/// The coefficient `A^j_k >= 0` of `E_k |m> = sum_j A^j_k |m^j_k>`.
pub fn raise_coeff(
    k: usize,
    j: usize,
    t: &GtTableau,
    q: &QParam,
    precision: Precision,
) -> Result<QScalar> {
    if k == 0 || k > t.ell() || j == 0 || j > k {
        return Err(Error::InvalidArgument(format!(
            "raise_coeff needs 1 <= j <= k <= ell, got k = {k}, j = {j}, ell = {}",
            t.ell()
        )));
    }
    match raise_radicand(k, j, t, &table_for(t, q)) {
        None => Ok(QScalar::zero(precision)),
        Some(r) => coeff_from_radicand(k, j, t, &r, precision),
    }
}

/// Generator label used for matrix export.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    K(usize),
    E(usize),
    F(usize),
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::K(k) => write!(f, "K{k}"),
            Generator::E(k) => write!(f, "E{k}"),
            Generator::F(k) => write!(f, "F{k}"),
        }
    }
}

/// An irreducible representation in its Gelfand-Tsetlin basis, with the
/// matrices of `K_k^{+-1}`, `E_k`, `F_k` for `k = 1..=ell`.
#[derive(Clone, Debug)]
pub struct IrrepModule {
    weight: HighestWeight,
    q: QParam,
    precision: Precision,
    basis: Vec<GtTableau>,
    index: HashMap<GtTableau, usize>,
    k: Vec<SparseMatrix>,
    k_inv: Vec<SparseMatrix>,
    e: Vec<SparseMatrix>,
    f: Vec<SparseMatrix>,
}

impl IrrepModule {
    pub fn weight(&self) -> &HighestWeight {
        &self.weight
    }

    pub fn ell(&self) -> usize {
        self.weight.ell()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn q(&self) -> &QParam {
        &self.q
    }

    pub fn precision(&self) -> Precision {
        self.precision
    }

    pub fn basis(&self) -> &[GtTableau] {
        &self.basis
    }

    pub fn index_of(&self, t: &GtTableau) -> Option<usize> {
        self.index.get(t).copied()
    }

    /// `K_k`, 1-based.
    pub fn k(&self, k: usize) -> &SparseMatrix {
        &self.k[k - 1]
    }

    pub fn k_inv(&self, k: usize) -> &SparseMatrix {
        &self.k_inv[k - 1]
    }

    pub fn e(&self, k: usize) -> &SparseMatrix {
        &self.e[k - 1]
    }

    pub fn f(&self, k: usize) -> &SparseMatrix {
        &self.f[k - 1]
    }

    pub fn op(&self, g: Generator) -> &SparseMatrix {
        match g {
            Generator::K(k) => self.k(k),
            Generator::E(k) => self.e(k),
            Generator::F(k) => self.f(k),
        }
    }

    pub fn generators(&self) -> Vec<Generator> {
        let ell = self.ell();
        (1..=ell)
            .map(Generator::K)
            .chain((1..=ell).map(Generator::E))
            .chain((1..=ell).map(Generator::F))
            .collect()
    }

    /// Coordinate-list export: a header line, then `row col value` per
    /// nonzero (0-based indices into [`IrrepModule::basis`], row-major).
    pub fn coordinate_list(&self, g: Generator) -> String {
        let mut out = format!(
            "# irrep ℓ={} n={} op={} q={} precision={}\n",
            self.ell(),
            self.weight,
            g,
            self.q,
            self.precision.digits()
        );
        for (r, c, v) in self.op(g).entries() {
            let _ = writeln!(out, "{r} {c} {}", v.to_decimal(self.precision.digits()));
        }
        out
    }
}

/// Builds the representation of highest weight `weight` at `q`.
pub fn build_irrep(
    weight: &HighestWeight,
    q: &QParam,
    precision: Precision,
    dim_cap: usize,
) -> Result<IrrepModule> {
    let ell = weight.ell();
    let basis = enumerate_capped(weight, dim_cap)?;
    let index: HashMap<GtTableau, usize> = basis
        .iter()
        .enumerate()
        .map(|(i, t)| (t.clone(), i))
        .collect();
    let top = weight.top_row();
    let window = 2 * top[0].abs() + ell as i64 + 3;
    let table = QIntTable::new(q, window);

    // One column per basis vector: (K exponents, E entries per k).
    type Column = (Vec<i64>, Vec<Vec<(usize, QScalar)>>);
    let columns: Vec<Column> = basis
        .par_iter()
        .map(|t| -> Result<Column> {
            let a: Vec<i64> = (1..=ell).map(|k| weight_exponent(k, t)).collect();
            let mut e_cols = Vec::with_capacity(ell);
            for k in 1..=ell {
                let mut col = Vec::new();
                for j in 1..=k {
                    if let Some(r) = raise_radicand(k, j, t, &table) {
                        let v = coeff_from_radicand(k, j, t, &r, precision)?;
                        if !v.is_zero() {
                            let target = t.shifted(j, k, 1).expect("raise checked");
                            col.push((index[&target], v));
                        }
                    }
                }
                e_cols.push(col);
            }
            Ok((a, e_cols))
        })
        .collect::<Result<_>>()?;

    let dim = basis.len();
    let mut k_mats = Vec::with_capacity(ell);
    let mut k_inv_mats = Vec::with_capacity(ell);
    let mut e_mats = Vec::with_capacity(ell);
    let mut f_mats = Vec::with_capacity(ell);
    let mut cache: HashMap<i64, QScalar> = HashMap::new();
    let mut half_power = |a: i64| -> QScalar {
        cache
            .entry(a)
            .or_insert_with(|| {
                QScalar::sqrt_rational(&rational_pow(q.value(), a), precision)
                    .expect("powers of q are positive")
            })
            .clone()
    };
    for k in 0..ell {
        let diag: Vec<QScalar> = columns.iter().map(|(a, _)| half_power(a[k])).collect();
        let diag_inv: Vec<QScalar> = columns.iter().map(|(a, _)| half_power(-a[k])).collect();
        k_mats.push(SparseMatrix::diagonal(diag));
        k_inv_mats.push(SparseMatrix::diagonal(diag_inv));
        let e =
            SparseMatrix::from_columns(dim, columns.iter().map(|(_, e)| e[k].clone()).collect());
        f_mats.push(e.transpose());
        e_mats.push(e);
    }

    Ok(IrrepModule {
        weight: weight.clone(),
        q: q.clone(),
        precision,
        basis,
        index,
        k: k_mats,
        k_inv: k_inv_mats,
        e: e_mats,
        f: f_mats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gtrep::enumerate_tableaux;

    fn hw(p: &[u32]) -> HighestWeight {
        HighestWeight::new(p.to_vec()).unwrap()
    }

    #[test]
    fn trivial_rep_has_zero_raising_operators() {
        let m = build_irrep(&hw(&[0, 0, 0]), &QParam::half(), Precision::DEFAULT, 10).unwrap();
        assert_eq!(m.dim(), 1);
        for k in 1..=3 {
            assert_eq!(m.e(k).nnz(), 0);
            assert_eq!(m.f(k).nnz(), 0);
            assert_eq!(m.k(k).get(0, 0), Some(&QScalar::one(Precision::DEFAULT)));
        }
    }

    #[test]
    fn blocked_raise_is_zero() {
        // Top pattern of spin 1/2: m_{11} = m_{12} already.
        let t = &enumerate_tableaux(&hw(&[1]))[1];
        let c = raise_coeff(1, 1, t, &QParam::half(), Precision::DEFAULT).unwrap();
        assert!(c.is_zero());
        assert!(raise_coeff(2, 1, t, &QParam::half(), Precision::DEFAULT).is_err());
    }

    #[test]
    fn columns_of_e_have_at_most_k_entries() {
        let m = build_irrep(&hw(&[2, 1, 1]), &QParam::half(), Precision::DEFAULT, 1000).unwrap();
        for k in 1..=3 {
            for c in 0..m.dim() {
                assert!(m.e(k).column(c).len() <= k);
            }
        }
    }

    #[test]
    fn cap_error_surfaces() {
        let err = build_irrep(&hw(&[2, 2]), &QParam::half(), Precision::DEFAULT, 5).unwrap_err();
        assert!(matches!(err, Error::DimensionCap { .. }));
    }

    #[test]
    fn export_header_and_lines() {
        let m = build_irrep(&hw(&[1]), &QParam::half(), Precision::DEFAULT, 10).unwrap();
        let text = m.coordinate_list(Generator::E(1));
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "# irrep ℓ=1 n=(1) op=E1 q=1/2 precision=60"
        );
        assert_eq!(lines.next().unwrap(), "1 0 1e0");
        assert!(lines.next().is_none());
    }
}
