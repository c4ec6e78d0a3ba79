//! Exact polynomials for the symmetric ansatz `y1 = y2`, `y5 = y6 = 1`.
//!
//! The elimination polynomials `h(y4)`, `h(y3, y4)` and `t(y3)` are built
//! from coefficient formulas in `(k, l)` with big-integer arithmetic. Real
//! roots are isolated by Sturm sequences over the rationals.

mod families;
mod int_poly;
mod sturm;
mod tables;

pub(crate) use families::ser_big;
pub use families::{
    build_g, build_h, build_h_bivar, build_system, build_t, h0_closed_form, h1_closed_form,
    h_leading_closed_form, h_signs, has_alternating_signs, t0_closed_form, y2_branch, BivariateH,
    EinsteinSystem, HSigns, ReducedSystem, SysPoly,
};
pub use int_poly::{square_free_part, IntPoly};
pub use sturm::{refine_root, sturm_isolate, Bound, Domain, Isolation, RootInterval};
