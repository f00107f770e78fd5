//! Exact coefficient field: rationals, multivariate polynomials, reduced
//! rational functions, weight translations and the named products.

pub mod linalg;
mod linear;
pub mod named;
pub mod poly;
pub mod ratfunc;

pub use named::{
    chi, elementary_symmetric, note3_defect, phi, psi, psi_prime, structural_product, sym_poly,
    sym_poly_partial, verify_note3_identity, ProductKind,
};
pub use poly::{gcd, Monomial, Poly, Var, VarKind};
pub use ratfunc::{q, RatFunc, ShiftVector};
