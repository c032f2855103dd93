//! Exact verification, construction and obstruction of complex and
//! generalized complex structures on nilpotent Lie algebras.

pub mod exact;
pub mod liealg;
pub mod exterior;
pub mod structures;
pub mod spinor;
pub mod classify;
pub mod cli;
