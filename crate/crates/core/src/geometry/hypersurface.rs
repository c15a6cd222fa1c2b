use rayon::prelude::*;

use super::point::{light_points, normalize, WProjPoint, WeightedSpace};
use crate::algebra::{Fe, FieldTower, Poly1, SparsePoly};
use crate::{Error, Result};

/// Default enumeration bound on `q` for surfaces.
pub const DEFAULT_SURFACE_BOUND: u64 = 1 << 14;
/// Default enumeration bound on `q` for curves.
pub const DEFAULT_CURVE_BOUND: u64 = 1 << 20;

/// Weighted-homogeneous hypersurface in a [`WeightedSpace`].
#[derive(Clone, Debug)]
pub struct Hypersurface {
    poly: SparsePoly,
    space: WeightedSpace,
    degree: u32,
    meets_singular_stratum: bool,
}

impl Hypersurface {
    pub fn new(poly: SparsePoly) -> Result<Self> {
        if poly.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let degree = poly.weighted_degree().ok_or(Error::NotHomogeneous)?;
        let space = WeightedSpace::new(poly.weights())?;
        // On the stratum where every weight-1 coordinate vanishes only the
        // pure power of the heavy coordinate survives.
        let meets_singular_stratum = match space.heavy() {
            None => false,
            Some(h) => !poly.terms().any(|(e, _)| e.iter().enumerate().all(|(i, &k)| i == h || k == 0)),
        };
        Ok(Self { poly, space, degree, meets_singular_stratum })
    }

    pub fn poly(&self) -> &SparsePoly {
        &self.poly
    }

    pub fn space(&self) -> &WeightedSpace {
        &self.space
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Dimension of the hypersurface (ambient dimension minus one).
    pub fn dimension(&self) -> usize {
        self.space.dim() - 2
    }

    /// Whether the point with every weight-1 coordinate zero lies on it.
    pub fn meets_singular_stratum(&self) -> bool {
        self.meets_singular_stratum
    }

    pub fn default_bound(&self) -> u64 {
        if self.dimension() >= 2 {
            DEFAULT_SURFACE_BOUND
        } else {
            DEFAULT_CURVE_BOUND
        }
    }

    pub fn contains(&self, p: &WProjPoint) -> bool {
        self.poly.field().is_zero(&self.poly.eval(p.coords()))
    }

    /// Every rational point, each once, sorted.
    pub fn enumerate_points(&self, bound: u64) -> Result<Vec<WProjPoint>> {
        let field = self.poly.field().clone();
        check_bound(&field, bound)?;
        let light: Vec<usize> = self.space.light().collect();
        let heavy = self.space.heavy();
        let bases = light_points(&field, light.len());
        let mut points: Vec<WProjPoint> = bases
            .par_iter()
            .flat_map_iter(|base| {
                let mut coords = vec![field.zero(); self.space.dim()];
                for (slot, &i) in light.iter().enumerate() {
                    coords[i] = base[slot].clone();
                }
                let found: Vec<WProjPoint> = match heavy {
                    None => {
                        if field.is_zero(&self.poly.eval(&coords)) {
                            vec![normalize(&self.space, &field, &coords).unwrap()]
                        } else {
                            Vec::new()
                        }
                    }
                    Some(h) => {
                        let u = self.poly.to_univariate(h, &coords);
                        solve_univariate(&u, &field)
                            .into_iter()
                            .map(|w| {
                                let mut c = coords.clone();
                                c[h] = w;
                                normalize(&self.space, &field, &c).unwrap()
                            })
                            .collect()
                    }
                };
                found
            })
            .collect();
        if self.meets_singular_stratum {
            let mut c = vec![field.zero(); self.space.dim()];
            c[self.space.heavy().unwrap()] = field.one();
            points.push(normalize(&self.space, &field, &c)?);
        }
        points.sort();
        Ok(points)
    }
}

pub(crate) fn check_bound(field: &FieldTower, bound: u64) -> Result<()> {
    let q = field.size();
    if q > bound as u128 {
        return Err(Error::EnumerationBound { q: q.min(u64::MAX as u128) as u64, bound });
    }
    Ok(())
}

/// All roots in the field of a univariate polynomial; the zero polynomial
/// has every element as a root. Degree ≤ 2 uses the square-root criterion
/// (odd `q`) or the Artin–Schreier trace condition (`p = 2`).
pub fn solve_univariate(u: &Poly1, field: &FieldTower) -> Vec<Fe> {
    let mut roots = match u.degree() {
        None => field.elements().collect(),
        Some(0) => Vec::new(),
        Some(1) => {
            let c = u.coeffs();
            vec![field.neg(&field.div(&c[0], &c[1]).unwrap())]
        }
        Some(2) => solve_quadratic(&u.coeffs()[2], &u.coeffs()[1], &u.coeffs()[0], field),
        Some(_) => u.roots(field),
    };
    roots.sort_by_key(|r| field.index_of(r));
    roots.dedup();
    roots
}

/// Roots of `a w^2 + b w + c` with `a ≠ 0`.
fn solve_quadratic(a: &Fe, b: &Fe, c: &Fe, field: &FieldTower) -> Vec<Fe> {
    if field.p() == 2 {
        if field.is_zero(b) {
            let r = field.sqrt(&field.div(c, a).unwrap()).unwrap();
            return vec![r];
        }
        // w = (b/a) u,  u^2 + u = a c / b^2
        let scale = field.div(b, a).unwrap();
        let gamma = field.div(&field.mul(a, c), &field.square(b)).unwrap();
        return match field.solve_artin_schreier(&gamma) {
            None => Vec::new(),
            Some([u, v]) => vec![field.mul(&scale, &u), field.mul(&scale, &v)],
        };
    }
    let four = field.from_u64(4);
    let disc = field.sub(&field.square(b), &field.mul(&four, &field.mul(a, c)));
    let Some(s) = field.sqrt(&disc) else {
        return Vec::new();
    };
    let two_a = field.add(a, a);
    let minus_b = field.neg(b);
    let r1 = field.div(&field.add(&minus_b, &s), &two_a).unwrap();
    let r2 = field.div(&field.sub(&minus_b, &s), &two_a).unwrap();
    if r1 == r2 {
        vec![r1]
    } else {
        vec![r1, r2]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::build_field_with_root;

    const XYZW: [&str; 4] = ["x", "y", "z", "w"];
    const W1113: [u32; 4] = [1, 1, 1, 3];

    #[test]
    fn membership() {
        let f = build_field_with_root(101, 50).unwrap();
        let x50 = Hypersurface::new(
            SparsePoly::parse("w^2 - x^6 - x*y^5 - y*z^5", &f, &XYZW, &W1113).unwrap(),
        )
        .unwrap();
        assert!(!x50.meets_singular_stratum());
        let pt = |c: [u64; 4]| {
            let raw: Vec<Fe> = c.iter().map(|&v| f.from_u64(v)).collect();
            normalize(x50.space(), &f, &raw).unwrap()
        };
        assert!(x50.contains(&pt([0, 1, 0, 0])));
        assert!(x50.contains(&pt([0, 0, 1, 0])));
        assert!(x50.contains(&pt([1, 0, 0, 1])));
        assert!(!x50.contains(&pt([1, 1, 1, 0])));
    }

    #[test]
    fn degenerate_double_cover_over_f2() {
        let f = FieldTower::extension(2, 1).unwrap();
        let s = Hypersurface::new(SparsePoly::parse("w^2", &f, &XYZW, &W1113).unwrap()).unwrap();
        let pts = s.enumerate_points(16).unwrap();
        assert_eq!(pts.len(), 7);
        assert!(pts.iter().all(|p| f.is_zero(&p.coords()[3])));
    }

    #[test]
    fn bound_is_enforced() {
        let f = build_field_with_root(101, 50).unwrap();
        let s = Hypersurface::new(
            SparsePoly::parse("w^2 - x^6 - x*y^5 - y*z^5", &f, &XYZW, &W1113).unwrap(),
        )
        .unwrap();
        assert!(matches!(s.enumerate_points(100), Err(Error::EnumerationBound { q: 101, bound: 100 })));
    }

    #[test]
    fn quadratic_solver_agrees_with_brute_force() {
        for f in [FieldTower::extension(7, 1).unwrap(), FieldTower::extension(2, 3).unwrap(), FieldTower::extension(3, 2).unwrap()] {
            let elems: Vec<Fe> = f.elements().collect();
            for a in elems.iter().skip(1).take(3) {
                for b in &elems {
                    for c in &elems {
                        let u = Poly1::new(vec![c.clone(), b.clone(), a.clone()], &f);
                        let mut brute: Vec<Fe> = elems
                            .iter()
                            .filter(|w| f.is_zero(&u.eval(w, &f)))
                            .cloned()
                            .collect();
                        brute.sort_by_key(|r| f.index_of(r));
                        assert_eq!(solve_univariate(&u, &f), brute);
                    }
                }
            }
        }
    }
}
