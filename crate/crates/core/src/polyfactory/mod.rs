//! Polynomials over exact or multiprecision scalars, the named families
//! entering the transformation formulas, and their zeros.

mod named;
mod poly;
mod roots;

pub use named::{
    beta_l, lhat_poly, p2r_poly, p_big_m, q3r_poly, q_big_m, r_big_m, sigma_ql, t_poly, t_poly_scaled, y1_closed,
    y1_closed_core, y_poly, y_poly_core,
};
pub use poly::Polynomial;
pub use roots::{agreement_digits, relative_residual, roots, to_shift_pairs, RootField, RootSet, ShiftPairs};
