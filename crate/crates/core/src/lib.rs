//! Exact computations on low-dimensional real Lie algebras: structure
//! constants, Grassmann algebras with the Schouten bracket, invariant forms,
//! gradings, Yang-Baxter systems and Darboux polynomials of the adjoint flow.

pub mod catalog;
pub mod exact;
pub mod grassmann;
pub mod invforms;
pub mod liealg;
pub mod grading;
pub mod darboux;
pub mod ybe;
