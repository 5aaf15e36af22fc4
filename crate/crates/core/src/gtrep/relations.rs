use serde::Serialize;

use super::irrep::IrrepModule;
use crate::linalg::SparseMatrix;
use crate::qarith::{q_int, QScalar};

/// Residual of one defining relation on a built module.
#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub max_residual: QScalar,
    /// `(row, col)` of the largest residual entry, if any is nonzero.
    pub worst_entry: Option<(usize, usize)>,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub checks: Vec<RelationCheck>,
    pub pass: bool,
}

impl RelationReport {
    pub fn max_residual(&self) -> Option<&QScalar> {
        self.checks
            .iter()
            .map(|c| &c.max_residual)
            .fold(None, |acc: Option<&QScalar>, r| match acc {
                Some(a) if a >= r => Some(a),
                _ => Some(r),
            })
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

/// Checks commutation of the `K`s, the `E`-`K` exchange rules, the `E`-`F`
/// commutator, commutation of distant `E`s, the Serre relations, and every
/// `F` counterpart, each to `tol` in max-entry norm.
pub fn verify_relations(module: &IrrepModule, tol: &QScalar) -> RelationReport {
    let ell = module.ell();
    let p = module.precision();
    let q = module.q();
    let dim = module.dim();
    let q_s = QScalar::from_rational(q.value(), p);
    let q_inv = &QScalar::one(p) / &q_s;
    let q_half = q_s.sqrt().expect("q > 0");
    let q_int2 = q_int(2).eval(q, p);
    let id = SparseMatrix::identity(dim, p);
    let denom = &q_s - &q_inv;

    let mut checks = Vec::new();
    let mut push = |name: String, residual: SparseMatrix| {
        let (max_residual, worst_entry) = match residual.max_abs_entry() {
            Some((v, pos)) => (v, Some(pos)),
            None => (QScalar::zero(p), None),
        };
        let pass = max_residual <= *tol;
        checks.push(RelationCheck {
            relation: name,
            max_residual,
            worst_entry,
            pass,
        });
    };

    let (k, ki, e, f) = (
        |i| module.k(i),
        |i| module.k_inv(i),
        |i| module.e(i),
        |i| module.f(i),
    );

    for i in 1..=ell {
        push(format!("K{i}K{i}^-1 = 1"), k(i).mul(ki(i)).sub(&id));
        for j in (i + 1)..=ell {
            push(
                format!("K{i}K{j} = K{j}K{i}"),
                k(i).mul(k(j)).sub(&k(j).mul(k(i))),
            );
        }
    }

    for i in 1..=ell {
        for j in 1..=ell {
            let dist = i.abs_diff(j);
            // E_i K_j = c K_j E_i and its transpose K_j F_i = c F_i K_j.
            let (c, label) = match dist {
                0 => (q_inv.clone(), "q^-1 "),
                1 => (q_half.clone(), "q^1/2 "),
                _ => (QScalar::one(p), ""),
            };
            push(
                format!("E{i}K{j} = {label}K{j}E{i}"),
                e(i).mul(k(j)).sub(&k(j).mul(e(i)).scale(&c)),
            );
            push(
                format!("K{j}F{i} = {label}F{i}K{j}"),
                k(j).mul(f(i)).sub(&f(i).mul(k(j)).scale(&c)),
            );

            let comm = e(i).mul(f(j)).sub(&f(j).mul(e(i)));
            let rhs = if i == j {
                k(i).mul(k(i))
                    .sub(&ki(i).mul(ki(i)))
                    .scale(&(&QScalar::one(p) / &denom))
            } else {
                SparseMatrix::zeros(dim, dim)
            };
            push(
                format!(
                    "E{i}F{j} - F{j}E{i} = {}",
                    if i == j {
                        format!("(K{i}^2 - K{i}^-2)/(q - q^-1)")
                    } else {
                        "0".into()
                    }
                ),
                comm.sub(&rhs),
            );

            if dist > 1 && i < j {
                push(
                    format!("E{i}E{j} = E{j}E{i}"),
                    e(i).mul(e(j)).sub(&e(j).mul(e(i))),
                );
                push(
                    format!("F{i}F{j} = F{j}F{i}"),
                    f(i).mul(f(j)).sub(&f(j).mul(f(i))),
                );
            }
            if dist == 1 {
                push(
                    format!("Serre E{i}^2E{j} - [2]E{i}E{j}E{i} + E{j}E{i}^2 = 0"),
                    serre(e(i), e(j), &q_int2),
                );
                push(
                    format!("Serre F{i}^2F{j} - [2]F{i}F{j}F{i} + F{j}F{i}^2 = 0"),
                    serre(f(i), f(j), &q_int2),
                );
            }
        }
    }

    let pass = checks.iter().all(|c| c.pass);
    RelationReport { checks, pass }
}

fn serre(a: &SparseMatrix, b: &SparseMatrix, q_int2: &QScalar) -> SparseMatrix {
    let aa = a.mul(a);
    aa.mul(b)
        .sub(&a.mul(b).mul(a).scale(q_int2))
        .add(&b.mul(&aa))
}
