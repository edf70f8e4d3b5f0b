//! Exact Hankel determinants of quadratic generating functions.

pub mod algebra;
pub mod catalog;
pub mod fe;
pub mod hankel;
pub mod input;
pub mod paths;
pub mod period;
pub mod seeds;
pub mod serial;
