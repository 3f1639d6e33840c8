//! Atom-photon polariton spectrum of a cold atomic cloud driven by diffusive
//! light.
//!
//! * [`params`]: physical parameters, derived scales and the reduced
//!   `(D̂, ω̂_d, θ)` set every other module works with.
//! * [`dispersion`]: analytic spectrum, roton search, instability threshold
//!   and phase scans.
//! * [`kinetics`]: the full kinetic dispersion relation through the plasma
//!   dispersion function, used to cross-check the analytic branch.
//! * [`structure`]: static structure factor and pair correlation function.
//!
//! Everything is expressed in reduced units: frequencies in `ω_p`,
//! wavenumbers in `1/λ_D`, lengths in `λ_D`.

pub mod dispersion;
pub mod error;
pub mod kinetics;
pub mod numeric;
pub mod params;
pub mod structure;

pub use dispersion::{
    critical_omega_d, find_roton, growth_rate, omega_sq, phase_scan, spectrum, DispersionPoint,
    PhaseCell, PhaseTable, RotonKind, RotonResult, RotonSearch,
};
pub use error::{Error, Result};
pub use kinetics::zfunc::{faddeeva, plasma_z, plasma_z_prime};
pub use kinetics::{kinetic_residual, kinetic_root, ComplexFrequency, KineticRoot};
pub use params::{
    check_hierarchy, derive_scales, reduce, DerivedScales, PhysicalParams, ReducedParams,
    ValidityReport,
};
pub use structure::{
    correlation_scan, pair_correlation, structure_factor, CorrelationTable, QuadratureConfig,
    StructureForm, StructureTable,
};
