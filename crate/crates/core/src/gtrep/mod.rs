//! Gelfand-Tsetlin bases of irreducible `U_q(su(ell+1))`-modules and the
//! sparse matrices of their generators.
//!
//! Patterns are normalized so that the last top-row entry is zero; `K_k`
//! acts diagonally by `q^{a_k/2}`, `E_k` raises single entries of row `k`,
//! and `F_k` is the transpose of `E_k` (the basis is orthonormal and the
//! coefficients are real).

mod irrep;
mod relations;
mod tableau;

pub use irrep::{
    build_irrep, raise_coeff, raise_radicand, Generator, IrrepModule, DEFAULT_DIM_CAP,
};
pub use relations::{verify_relations, RelationCheck, RelationReport};
pub use tableau::{
    enumerate_capped, enumerate_tableaux, weight_exponent, GtTableau, HighestWeight,
};
