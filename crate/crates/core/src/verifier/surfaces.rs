//! The concrete surfaces, curves and automorphisms under study.

use crate::algebra::{CoordinateMap, Field, SparsePoly};
use crate::{Error, Result};

pub const XYZW: [&str; 4] = ["x", "y", "z", "w"];
pub const W1113: [u32; 4] = [1, 1, 1, 3];
pub const XYZ: [&str; 3] = ["x", "y", "z"];
pub const W111: [u32; 3] = [1, 1, 1];

pub const SEXTIC: &str = "x^6 + x*y^5 + y*z^5";

/// `ζ_n^e` in a field whose chosen root has order divisible by `n`.
pub fn root_power(field: &Field, n: u64, e: i64) -> Result<crate::algebra::Fe> {
    let order = field.root_order();
    if !order.is_multiple_of(n) {
        return Err(Error::InvalidField(format!("field carries a root of order {order}, need one of order {n}")));
    }
    Ok(field.zeta_pow(e * (order / n) as i64))
}

/// `X_50 : w^2 = x^6 + x y^5 + y z^5` in `P(1,1,1,3)`.
pub fn x50(field: &Field) -> Result<SparsePoly> {
    SparsePoly::parse("w^2 - x^6 - x*y^5 - y*z^5", field, &XYZW, &W1113)
}

/// The branch sextic as a form on `P(1,1,1,3)` (no `w`).
pub fn sextic_form(field: &Field) -> Result<SparsePoly> {
    SparsePoly::parse(SEXTIC, field, &XYZW, &W1113)
}

/// The branch sextic as a plane curve.
pub fn plane_sextic(field: &Field) -> Result<SparsePoly> {
    SparsePoly::parse(SEXTIC, field, &XYZ, &W111)
}

/// The `z = 0` slice of `X_50`, a double cover of a line in `P(1,1,3)`.
pub fn d2_curve(field: &Field) -> Result<SparsePoly> {
    Ok(x50(field)?.drop_variable(2))
}

/// `g_50 = (x, ζ^40 y, ζ^2 z, ζ^25 w)` with `ζ` of order 50.
pub fn g50(field: &Field) -> Result<CoordinateMap> {
    let template = x50(field)?;
    let s = [field.one(), root_power(field, 50, 40)?, root_power(field, 50, 2)?, root_power(field, 50, 25)?];
    CoordinateMap::diagonal(&template, &s)
}

/// `Y : w^2 + x^3 w = x^6 + x y^5 + y z^5`, meant for characteristic 2.
pub fn y_char2(field: &Field) -> Result<SparsePoly> {
    SparsePoly::parse("w^2 + x^3*w - x^6 - x*y^5 - y*z^5", field, &XYZW, &W1113)
}

/// `f_50 = (x, ζ^20 y, ζ z, w + x^3)` with `ζ` of order 25.
pub fn f50(field: &Field) -> Result<CoordinateMap> {
    let t = y_char2(field)?;
    let images = vec![
        t.var_like(0),
        t.var_like(1).scale(&root_power(field, 25, 20)?),
        t.var_like(2).scale(&root_power(field, 25, 1)?),
        t.var_like(3).add(&t.var_like(0).pow(3)),
    ];
    CoordinateMap::new(images)
}
