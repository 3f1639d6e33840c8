//! Generic numerical building blocks: bracketing, minimization, complex
//! root finding and oscillatory quadrature.

pub mod optimize;
pub mod quadrature;
pub mod roots;

pub use optimize::{bisect_threshold, golden_section_min};
pub use quadrature::{Estimate, FilonSine};
pub use roots::{muller, MullerOptions, MullerRoot};
