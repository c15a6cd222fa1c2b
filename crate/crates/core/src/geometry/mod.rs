//! Rational points on weighted projective hypersurfaces.

pub mod fixed;
pub mod hypersurface;
pub mod point;
pub mod singular;

pub use fixed::{apply_map, common_zeros, fixed_points, fixed_subset, orbit_decomposition, orbit_lengths};
pub use hypersurface::{solve_univariate, Hypersurface, DEFAULT_CURVE_BOUND, DEFAULT_SURFACE_BOUND};
pub use point::{light_points, normalize, WProjPoint, WeightedSpace};
pub use singular::{
    jacobian_system, resultant_certificate, singular_search, sylvester_resultant, ResultantCertificate,
    SingularPoint, SingularSearch,
};
