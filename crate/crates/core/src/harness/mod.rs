//! Exhaustive generators, independent oracles and exhaustive checks.

pub mod catalog;
pub mod enumerate;
pub mod oracles;
pub mod random;
pub mod sweep;
