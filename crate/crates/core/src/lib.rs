//! Exact decision procedures for Lipschitz equivalence of univariate
//! polynomials and semialgebraic Lipschitz equivalence of quasihomogeneous
//! plane polynomials, with certificates and a numeric witness harness.

pub mod lipclass;
pub mod parse;
pub mod poly;
pub mod qh;
pub mod realalg;
pub mod witness;
pub mod zygothety;
