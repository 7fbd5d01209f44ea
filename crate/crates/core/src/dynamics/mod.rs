//! Floating-point layer: fast evaluation, orbits, and zeros on lines.

pub mod compiled;
pub mod lines;
pub mod orbit;
pub mod roots;
pub mod search;

pub use compiled::{eval_field, CompiledExpr, CompiledField};
pub use lines::{
    all_symmetry_rays, full_line_zero_map, line_coefficient, line_zero_map, representative_roots,
    symmetry_rays, LineClass, LineZeroReport,
};
pub use orbit::{convergence_order, rk4_orbit, rk4_step, ConvergenceEstimate, OrbitRecord, DEFAULT_STEP};
pub use roots::{
    limsup_probe, limsup_target, scan_roots, upsilon, upsilon_factor, upsilon_roots, LimsupSample, Root,
    DEFAULT_SCAN_STEP, ROOT_TOLERANCE,
};
pub use search::{search_zeros, ZeroCandidate, ZeroKind};
