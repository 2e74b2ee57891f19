//! Numerical engine: Monte Carlo with error bars, deterministic quadrature
//! over eigenvalue simplices, and a quasi-Monte Carlo fallback.

pub mod estimate;
pub mod mc;
pub mod qmc;
pub mod quadrature;

pub use estimate::{merge, Estimate, Moments, Paired};
pub use mc::{mc_integrate, mc_paired, Region, CHUNK};
pub use qmc::{qmc_cube, qmc_simplex};
pub use quadrature::{gauss_legendre, quad_simplex, quad_simplex_detailed, Method, Quadrature, QuadratureSpec};
