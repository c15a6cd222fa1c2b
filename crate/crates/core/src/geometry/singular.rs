//! Singular points of plane curves: exhaustive Jacobian search over a tower
//! of extensions, plus an elimination certificate valid over the algebraic
//! closure.

use serde::{Deserialize, Serialize};

use super::hypersurface::check_bound;
use super::point::{normalize, WProjPoint, WeightedSpace};
use crate::algebra::{Fe, Field, FieldTower, Poly1, SparsePoly};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularPoint {
    /// Degree over `F_p` of the smallest searched field containing the point.
    pub extension_degree: u32,
    pub coords: Vec<String>,
    #[serde(skip)]
    pub point: Option<WProjPoint>,
}

#[derive(Clone, Debug)]
pub struct SingularSearch {
    pub points: Vec<SingularPoint>,
    /// Largest `j` such that `P^2(F_{p^j})` was searched.
    pub searched_up_to: u32,
}

fn check_plane_curve(f: &SparsePoly) -> Result<()> {
    if f.nvars() != 3 || f.weights() != [1, 1, 1] {
        return Err(Error::UnsupportedWeights(f.weights().to_vec()));
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.weighted_degree().is_none() {
        return Err(Error::NotHomogeneous);
    }
    Ok(())
}

/// The Jacobian system: `F` together with its three partials.
pub fn jacobian_system(f: &SparsePoly) -> [SparsePoly; 4] {
    [f.clone(), f.partial_derivative(0), f.partial_derivative(1), f.partial_derivative(2)]
}

/// Common zeros of `F, F_x, F_y, F_z` in `P^2(F_{p^j})` for `1 ≤ j ≤ max_ext`.
///
/// `F` must have prime-field coefficients. Each point is reported once, at
/// the smallest searched level containing it.
pub fn singular_search(f: &SparsePoly, max_ext: u32, bound: u64) -> Result<SingularSearch> {
    check_plane_curve(f)?;
    let p = f.field().p();
    let space = WeightedSpace::new(&[1, 1, 1])?;
    let mut points = Vec::new();
    for j in 1..=max_ext {
        let field = FieldTower::extension(p, j)?;
        check_bound(&field, bound)?;
        let system: Vec<SparsePoly> = jacobian_system(&f.base_change(&field)?).into_iter().collect();
        for pt in plane_common_zeros(&system, &field, &space)? {
            let earlier = (1..j).any(|i| j % i == 0 && pt.coords().iter().all(|c| field.in_subfield(c, i)));
            if !earlier {
                points.push(SingularPoint {
                    extension_degree: j,
                    coords: pt.format(&field),
                    point: Some(pt),
                });
            }
        }
    }
    Ok(SingularSearch { points, searched_up_to: max_ext })
}

/// Common zeros in `P^2(F_q)`, scanning the lines through `(0:0:1)`.
fn plane_common_zeros(system: &[SparsePoly], field: &Field, space: &WeightedSpace) -> Result<Vec<WProjPoint>> {
    let mut out = Vec::new();
    let apex = [field.zero(), field.zero(), field.one()];
    if system.iter().all(|s| field.is_zero(&s.eval(&apex))) {
        out.push(normalize(space, field, &apex)?);
    }
    let mut prefixes = vec![(field.zero(), field.one())];
    prefixes.extend(field.elements().map(|y| (field.one(), y)));
    for (x, y) in prefixes {
        let coords = [x.clone(), y.clone(), field.zero()];
        let g = system
            .iter()
            .map(|s| s.to_univariate(2, &coords))
            .fold(Poly1::zero(), |acc, u| acc.gcd(&u, field));
        let roots: Vec<Fe> = match g.degree() {
            None => field.elements().collect(),
            Some(0) => Vec::new(),
            Some(_) => g.roots(field),
        };
        for z in roots {
            out.push(normalize(space, field, &[x.clone(), y.clone(), z])?);
        }
    }
    out.sort();
    Ok(out)
}

/// Outcome of the elimination certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultantCertificate {
    /// Names of the three forms `(A, B, C)` eliminated as
    /// `Res_y(Res_z(A, C), Res_z(B, C))`.
    pub forms: [String; 3],
    /// The final resultant, an element of `F_p`.
    pub value: u64,
}

impl ResultantCertificate {
    pub fn certifies_smooth(&self) -> bool {
        self.value != 0
    }
}

/// Iterated resultant certificate for smoothness of a plane curve over the
/// algebraic closure of `F_p`.
///
/// For ternary forms `A, B, C` the resultants `Res_z(A, C)` and `Res_z(B, C)`
/// taken with formal degrees equal to the total degrees are binary forms
/// vanishing at `(x:y)` whenever `A, C` (resp. `B, C`) share a zero above it;
/// their resultant in `y` is then a scalar that vanishes whenever `A, B, C`
/// share a projective zero. Any three of `F, F_x, F_y, F_z` contain the
/// singular locus, so a nonzero value for one triple proves smoothness.
/// Returns the first nonzero certificate, or the last zero one tried.
pub fn resultant_certificate(f: &SparsePoly) -> Result<ResultantCertificate> {
    check_plane_curve(f)?;
    if f.field().degree() != 1 {
        return Err(Error::InvalidField("certificate needs a prime field".into()));
    }
    let prime = FieldTower::prime(f.field().p())?;
    let names = ["F", "F_x", "F_y", "F_z"];
    let forms = jacobian_system(f);
    let triples = [(1, 2, 3), (0, 1, 3), (0, 2, 3), (0, 1, 2), (1, 3, 2), (2, 3, 1)];
    let mut last = None;
    for (a, b, c) in triples {
        if forms[a].is_zero() || forms[b].is_zero() || forms[c].is_zero() {
            continue;
        }
        let value = iterated_resultant(&forms[a], &forms[b], &forms[c], &prime);
        let cert = ResultantCertificate {
            forms: [names[a].to_string(), names[b].to_string(), names[c].to_string()],
            value,
        };
        if cert.certifies_smooth() {
            return Ok(cert);
        }
        last = Some(cert);
    }
    Ok(last.unwrap_or(ResultantCertificate {
        forms: ["-".into(), "-".into(), "-".into()],
        value: 0,
    }))
}

/// Coefficients of a ternary form in `z`, each a polynomial in `y` with `x = 1`.
fn as_z_poly(form: &SparsePoly, prime: &FieldTower) -> (Vec<Poly1>, usize) {
    let d = form.weighted_degree().expect("homogeneous") as usize;
    let mut coeffs: Vec<Vec<Fe>> = vec![vec![prime.zero(); d + 1]; d + 1];
    for (e, c) in form.terms() {
        let (ey, ez) = (e[1] as usize, e[2] as usize);
        coeffs[ez][ey] = prime.add(&coeffs[ez][ey], &prime.from_u64(c.coeffs()[0]));
    }
    (coeffs.into_iter().map(|c| Poly1::new(c, prime)).collect(), d)
}

fn iterated_resultant(a: &SparsePoly, b: &SparsePoly, c: &SparsePoly, prime: &FieldTower) -> u64 {
    let (pa, da) = as_z_poly(a, prime);
    let (pb, db) = as_z_poly(b, prime);
    let (pc, dc) = as_z_poly(c, prime);
    let r1 = sylvester_resultant(&pa, da, &pc, dc, prime);
    let r2 = sylvester_resultant(&pb, db, &pc, dc, prime);
    let lift = |r: &Poly1, deg: usize| -> Vec<Poly1> {
        (0..=deg).map(|i| Poly1::constant(r.coeff(i, prime), prime)).collect()
    };
    let res = sylvester_resultant(&lift(&r1, da * dc), da * dc, &lift(&r2, db * dc), db * dc, prime);
    debug_assert!(res.degree().unwrap_or(0) == 0);
    res.coeff(0, prime).coeffs()[0]
}

/// Resultant of two polynomials given by coefficient lists (ascending) with
/// formal degrees `m` and `n`; coefficients live in `F_p[y]`.
pub fn sylvester_resultant(f: &[Poly1], m: usize, g: &[Poly1], n: usize, prime: &FieldTower) -> Poly1 {
    let size = m + n;
    if size == 0 {
        return Poly1::constant(prime.one(), prime);
    }
    let zero = Poly1::zero();
    let coeff = |v: &[Poly1], i: usize| v.get(i).cloned().unwrap_or_else(Poly1::zero);
    let mut mat = vec![vec![zero.clone(); size]; size];
    for r in 0..n {
        for i in 0..=m {
            mat[r][r + i] = coeff(f, m - i);
        }
    }
    for r in 0..m {
        for i in 0..=n {
            mat[n + r][r + i] = coeff(g, n - i);
        }
    }
    bareiss_determinant(mat, prime)
}

/// Fraction-free determinant over `F_p[y]`.
fn bareiss_determinant(mut m: Vec<Vec<Poly1>>, field: &FieldTower) -> Poly1 {
    let n = m.len();
    let mut negate = false;
    let mut prev = Poly1::constant(field.one(), field);
    for k in 0..n {
        let Some(piv) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return Poly1::zero();
        };
        if piv != k {
            m.swap(piv, k);
            negate = !negate;
        }
        if k + 1 == n {
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul(&m[k][k], field).sub(&m[i][k].mul(&m[k][j], field), field);
                let (q, r) = num.div_rem(&prev, field);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                m[i][j] = q;
            }
            m[i][k] = Poly1::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        det.scale(&field.neg(&field.one()), field)
    } else {
        det
    }
}
