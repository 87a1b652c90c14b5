#![no_std]
//! Exact verification engine for quantum Lorentz group intertwiners, quantum Minkowski
//! space relations and braided Poincaré structure.

extern crate alloc;

pub mod coeff;
pub mod tensor;
pub mod report;
pub mod intertwiners;
pub mod rewrite;
pub mod algebras;
