//! Finite fields, polynomials and coordinate maps.

pub mod field;
pub mod map;
pub mod poly1;
pub mod sparse;

pub use field::{build_field_with_root, min_extension_degree, Fe, Field, FieldDescriptor, FieldTower};
pub use map::{
    invariance_scalar, invariant_monomials, map_order, projective_diagonal_order, pullback,
    CoordinateMap, DEFAULT_ORDER_BOUND,
};
pub use poly1::Poly1;
pub use sparse::{Exponents, SerializedPoly, SparsePoly};

/// Formal partial derivative with respect to the variable at `var`.
pub fn partial_derivative(poly: &SparsePoly, var: usize) -> SparsePoly {
    poly.partial_derivative(var)
}
