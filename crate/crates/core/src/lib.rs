//! Left-invariant Einstein metrics on the compact symplectic groups `Sp(n)`.
//!
//! The crate is organised bottom-up:
//!
//! * [`algebra`] realises `sp(n)` as explicit complex matrices, computes the
//!   negative Killing form from brackets and splits the algebra into
//!   `B`-orthogonal modules using block-sign involutions.
//! * [`structconst`] turns a decomposition into the symmetric table of
//!   squared bracket coefficients `(ijk)`.
//! * [`ricci`] evaluates Ricci components of diagonal metrics, both from the
//!   structure table and from closed-form expressions for three-factor shapes.
//! * [`poly`] holds exact big-integer polynomials, the elimination polynomials of
//!   the symmetric ansatz, Sturm isolation and root refinement.
//! * [`solver`] produces Einstein metrics (exact symmetric pipeline and
//!   multistart Newton), classifies natural reductivity and checks the counting
//!   bounds.
//! * [`cli`] is the command-line front end.

pub mod algebra;
pub mod cli;
mod error;
pub mod output;
pub mod poly;
pub mod ricci;
pub mod solver;
pub mod structconst;

pub use error::{Error, Result};
