//! Matrix model of `sp(n)`, its negative Killing form, and module
//! decompositions by block-sign involutions.

mod basis;
mod decompose;
mod matrix;

pub use basis::{build_sp_basis, sp_dim, to_dense, to_sparse, AlgebraBasis, SparseVec};
pub use decompose::{
    decompose_triple, decompose_triple_with, enumerate_sign_modules, format_pattern, Decomposition,
    Module, ModuleKind, TripleShape,
};
pub use matrix::SparseMatrix;
