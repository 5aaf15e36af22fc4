//! Sections of the line bundles `L_N` over quantum projective space, split
//! into blocks labelled by `n1`, and the kernel of `E_ell` on them.
//!
//! A section in block `n1` is a matrix coefficient `t_{i,j}` of the block
//! irrep whose second index `j` runs over the constrained set: killed by
//! `E_i`, `F_i` and fixed by `K_i` for `i < ell`, with
//! `K_1 K_2^2 ... K_ell^ell` acting by `q^{N ell / 2}`. The first index is
//! free, so every count carries a factor `dim V`. `E_ell` acts on `j`
//! through its own matrix.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::gtrep::{build_irrep, GtTableau, HighestWeight, IrrepModule};
use crate::linalg::{numeric_rank, RankDecision};
use crate::qarith::{rational_pow, Precision, QParam, QScalar};

/// Highest weight of block `n1` of `L_N`.
pub fn block_weight(ell: usize, n: i64, n1: u32) -> HighestWeight {
    let mut parts = vec![0u32; ell];
    let abs_n = n.unsigned_abs() as u32;
    if ell == 1 {
        parts[0] = 2 * n1 + abs_n;
    } else if n >= 0 {
        parts[0] = n1;
        parts[ell - 1] = n1 + abs_n;
    } else {
        parts[0] = n1 + abs_n;
        parts[ell - 1] = n1;
    }
    HighestWeight::new(parts).expect("non-empty")
}

/// Basis tableaux of `module` satisfying the `L_N` conditions, found by
/// applying the generator matrices.
pub fn ln_conditions_filter(module: &IrrepModule, n: i64) -> Vec<GtTableau> {
    let ell = module.ell();
    let p = module.precision();
    let tol = p.half_tolerance();
    let one = QScalar::one(p);
    let target = QScalar::sqrt_rational(&rational_pow(module.q().value(), n * ell as i64), p)
        .expect("positive");
    (0..module.dim())
        .filter(|&c| {
            let low_ok = (1..ell).all(|i| {
                module.e(i).column(c).is_empty()
                    && module.f(i).column(c).is_empty()
                    && module
                        .k(i)
                        .get(c, c)
                        .is_some_and(|v| (v - &one).abs() <= tol)
            });
            low_ok && {
                let prod = (1..=ell).fold(one.clone(), |acc, i| {
                    let d = module.k(i).get(c, c).expect("K is invertible");
                    (0..i).fold(acc, |a, _| &a * d)
                });
                (&prod - &target).abs() <= tol
            }
        })
        .map(|c| module.basis()[c].clone())
        .collect()
}

/// Closed-form description of the constrained set: rows below the top are
/// constant `m` and the top row reads `(m_1, m, ..., m, 2m - m_1 - N)`.
pub fn ln_shape_enumeration(weight: &HighestWeight, n: i64) -> Vec<GtTableau> {
    let ell = weight.ell();
    let top = weight.top_row();
    let m1 = top[0];
    (top[ell]..=m1)
        .filter(|&m| top[1..ell].iter().all(|&x| x == m) && top[ell] == 2 * m - m1 - n)
        .map(|m| {
            let mut rows: Vec<Vec<i64>> = (1..=ell).map(|j| vec![m; j]).collect();
            rows.push(top.clone());
            GtTableau::from_rows(rows).expect("constant rows interlace")
        })
        .collect()
}

/// Number of sequences `m >= x_1 >= ... >= x_ell >= m - N`, counted directly.
pub fn ker_el_combinatorial(ell: usize, n: i64) -> u64 {
    if n < 0 {
        return 0;
    }
    // ways[v] = sequences so far ending at value v in 0..=N.
    let width = n as usize + 1;
    let mut ways = vec![1u64; width];
    for _ in 1..ell {
        let mut next = vec![0u64; width];
        let mut acc = 0;
        for v in (0..width).rev() {
            acc += ways[v];
            next[v] = acc;
        }
        ways = next;
    }
    ways.iter().sum()
}

/// Kernel data for one block.
#[derive(Clone, Debug, Serialize)]
pub struct BlockKernel {
    pub ell: usize,
    #[serde(rename = "N")]
    pub n: i64,
    pub n1: u32,
    pub weight: HighestWeight,
    pub dim_constrained: usize,
    pub dim_kernel: usize,
    pub rank: usize,
    pub ill_conditioned: bool,
}

/// Kernel of `E_ell` on the `L_N` constraints of a single block module.
pub fn block_kernel(module: &IrrepModule, n: i64, n1: u32) -> BlockKernel {
    let ell = module.ell();
    let p = module.precision();
    let constrained = ln_conditions_filter(module, n);
    let cols: Vec<usize> = constrained
        .iter()
        .map(|t| module.index_of(t).expect("filtered from basis"))
        .collect();
    let dense = module.e(ell).dense_columns(&cols, p);
    let RankDecision {
        rank,
        ill_conditioned,
        ..
    } = numeric_rank(&dense, &p.half_tolerance(), p);
    BlockKernel {
        ell,
        n,
        n1,
        weight: module.weight().clone(),
        dim_constrained: constrained.len() * module.dim(),
        dim_kernel: (constrained.len() - rank) * module.dim(),
        rank,
        ill_conditioned,
    }
}

/// Block kernels for `n1 = 0..=n1_max`, in order.
pub fn ker_el_numeric(
    ell: usize,
    n: i64,
    n1_max: u32,
    q: &QParam,
    precision: Precision,
    dim_cap: usize,
) -> Result<Vec<BlockKernel>> {
    (0..=n1_max)
        .into_par_iter()
        .map(|n1| {
            let module = build_irrep(&block_weight(ell, n, n1), q, precision, dim_cap)?;
            Ok(block_kernel(&module, n, n1))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn module(parts: &[u32]) -> IrrepModule {
        let w = HighestWeight::new(parts.to_vec()).unwrap();
        build_irrep(&w, &QParam::half(), Precision::DEFAULT, 10_000).unwrap()
    }

    #[test]
    fn block_weights() {
        assert_eq!(block_weight(3, 2, 1).parts(), &[1, 0, 3]);
        assert_eq!(block_weight(3, -2, 1).parts(), &[3, 0, 1]);
        assert_eq!(block_weight(1, -3, 2).parts(), &[7]);
        assert_eq!(block_weight(2, 0, 0).parts(), &[0, 0]);
    }

    #[test]
    fn trivial_section() {
        let c = ln_conditions_filter(&module(&[0, 0]), 0);
        assert_eq!(c.len(), 1);
    }

    #[test]
    fn filter_matches_shape() {
        for (parts, n) in [
            (vec![0, 1], 1),
            (vec![1, 3], 2),
            (vec![2, 1], -1),
            (vec![1, 0, 2], 1),
        ] {
            let m = module(&parts);
            let filtered = ln_conditions_filter(&m, n);
            assert_eq!(
                filtered,
                ln_shape_enumeration(m.weight(), n),
                "{parts:?} N={n}"
            );
            assert_eq!(filtered.len(), 1);
        }
        let m = module(&[0, 1]);
        let t = &ln_conditions_filter(&m, 1)[0];
        assert_eq!(t.row(1), &[1]);
        assert_eq!(t.row(2), &[1, 1]);
    }

    #[test]
    fn combinatorial_counts() {
        assert_eq!(ker_el_combinatorial(1, 2), 3);
        assert_eq!(ker_el_combinatorial(2, 1), 3);
        assert_eq!(ker_el_combinatorial(3, 0), 1);
        assert_eq!(ker_el_combinatorial(2, -1), 0);
        assert_eq!(ker_el_combinatorial(3, 4), 35);
    }

    #[test]
    fn numeric_blocks() {
        let q = QParam::half();
        let p = Precision::DEFAULT;
        let dims = |ell, n, n1max| -> Vec<(u32, usize)> {
            ker_el_numeric(ell, n, n1max, &q, p, 10_000)
                .unwrap()
                .into_iter()
                .map(|b| (b.n1, b.dim_kernel))
                .collect()
        };
        assert_eq!(dims(2, 1, 3), vec![(0, 3), (1, 0), (2, 0), (3, 0)]);
        assert_eq!(dims(1, -2, 3), vec![(0, 0), (1, 0), (2, 0), (3, 0)]);
        assert_eq!(dims(2, 0, 2), vec![(0, 1), (1, 0), (2, 0)]);
    }
}
