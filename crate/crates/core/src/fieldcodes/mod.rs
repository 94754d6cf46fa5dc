//! Linear algebra and code analytics over F2 and F3.

mod code;
mod matrix;
mod packed;

pub use code::{
    analyze, analyze_with, combination_weight, default_workers, dual_code, is_self_orthogonal,
    min_distance, row_space_code, weight_distribution, CodeReport, LinearCode, WORKERS_ENV,
};
pub use matrix::{FpMatrix, Prime, Rref};
pub use packed::f3_add;
