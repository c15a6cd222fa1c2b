//! Automorphism action on rational points: images, fixed loci, orbits, and
//! common zero sets.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::hypersurface::{check_bound, solve_univariate, Hypersurface};
use super::point::{light_points, normalize, WProjPoint, WeightedSpace};
use crate::algebra::{CoordinateMap, Poly1, SparsePoly};
use crate::{Error, Result};

/// Normalized image of a point.
pub fn apply_map(map: &CoordinateMap, point: &WProjPoint) -> Result<WProjPoint> {
    let space = WeightedSpace::new(map.weights())?;
    let raw = map.apply_raw(point.coords());
    normalize(&space, map.field(), &raw).map_err(|e| match e {
        Error::ZeroPoint => Error::NonInvertibleMap,
        other => other,
    })
}

/// Points of `points` fixed by `map`.
pub fn fixed_subset(map: &CoordinateMap, points: &[WProjPoint]) -> Result<Vec<WProjPoint>> {
    let flags: Vec<bool> = points
        .par_iter()
        .map(|p| apply_map(map, p).map(|img| img == *p))
        .collect::<Result<_>>()?;
    Ok(points.iter().zip(flags).filter(|(_, f)| *f).map(|(p, _)| p.clone()).collect())
}

/// Rational points of `surface` fixed by `map^k`.
pub fn fixed_points(map: &CoordinateMap, k: u32, surface: &Hypersurface, bound: u64) -> Result<Vec<WProjPoint>> {
    let points = surface.enumerate_points(bound)?;
    fixed_subset(&map.power(k)?, &points)
}

/// Partition of a map-stable point set into orbits. Orbits are listed by
/// their smallest point, each starting there and following the map.
pub fn orbit_decomposition(map: &CoordinateMap, points: &[WProjPoint]) -> Result<Vec<Vec<WProjPoint>>> {
    let all: BTreeSet<WProjPoint> = points.iter().cloned().collect();
    let mut seen: BTreeSet<WProjPoint> = BTreeSet::new();
    let mut orbits = Vec::new();
    for start in &all {
        if seen.contains(start) {
            continue;
        }
        let mut orbit = vec![start.clone()];
        seen.insert(start.clone());
        let mut cur = apply_map(map, start)?;
        while cur != *start {
            if !all.contains(&cur) || seen.contains(&cur) {
                return Err(Error::NotClosed);
            }
            seen.insert(cur.clone());
            orbit.push(cur.clone());
            cur = apply_map(map, &cur)?;
        }
        orbits.push(orbit);
    }
    Ok(orbits)
}

pub fn orbit_lengths(orbits: &[Vec<WProjPoint>]) -> Vec<usize> {
    let mut l: Vec<usize> = orbits.iter().map(Vec::len).collect();
    l.sort_unstable();
    l
}

/// Rational points where every polynomial of the system vanishes.
pub fn common_zeros(system: &[SparsePoly], bound: u64) -> Result<Vec<WProjPoint>> {
    let first = system.first().ok_or_else(|| Error::Dimension("empty system".into()))?;
    for p in system {
        first.check_same_ring(p)?;
        if !p.is_weighted_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
    }
    let field = first.field().clone();
    check_bound(&field, bound)?;
    let space = WeightedSpace::new(first.weights())?;
    let light: Vec<usize> = space.light().collect();
    let heavy = space.heavy();
    let bases = light_points(&field, light.len());
    let mut out: Vec<WProjPoint> = bases
        .par_iter()
        .flat_map_iter(|base| {
            let mut coords = vec![field.zero(); space.dim()];
            for (slot, &i) in light.iter().enumerate() {
                coords[i] = base[slot].clone();
            }
            let found: Vec<WProjPoint> = match heavy {
                None => {
                    if system.iter().all(|p| field.is_zero(&p.eval(&coords))) {
                        vec![normalize(&space, &field, &coords).unwrap()]
                    } else {
                        Vec::new()
                    }
                }
                Some(h) => {
                    let g = system
                        .iter()
                        .map(|p| p.to_univariate(h, &coords))
                        .fold(Poly1::zero(), |acc, u| acc.gcd(&u, &field));
                    solve_univariate(&g, &field)
                        .into_iter()
                        .map(|w| {
                            let mut c = coords.clone();
                            c[h] = w;
                            normalize(&space, &field, &c).unwrap()
                        })
                        .collect()
                }
            };
            found
        })
        .collect();
    if let Some(h) = heavy {
        let mut c = vec![field.zero(); space.dim()];
        c[h] = field.one();
        if system.iter().all(|p| field.is_zero(&p.eval(&c))) {
            out.push(normalize(&space, &field, &c)?);
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_field_with_root, Fe, Field};

    const XYZW: [&str; 4] = ["x", "y", "z", "w"];
    const W1113: [u32; 4] = [1, 1, 1, 3];

    fn setup() -> (Field, Hypersurface, CoordinateMap) {
        let f = build_field_with_root(101, 50).unwrap();
        let poly = SparsePoly::parse("w^2 - x^6 - x*y^5 - y*z^5", &f, &XYZW, &W1113).unwrap();
        let g = CoordinateMap::diagonal(&poly, &[f.one(), f.zeta_pow(40), f.zeta_pow(2), f.zeta_pow(25)])
            .unwrap();
        (f.clone(), Hypersurface::new(poly).unwrap(), g)
    }

    fn pt(f: &Field, c: [i64; 4]) -> WProjPoint {
        let raw: Vec<Fe> = c.iter().map(|&v| f.from_i64(v)).collect();
        normalize(&WeightedSpace::new(&W1113).unwrap(), f, &raw).unwrap()
    }

    #[test]
    fn images_of_special_points() {
        let (f, _, g) = setup();
        assert_eq!(apply_map(&g, &pt(&f, [0, 1, 0, 0])).unwrap(), pt(&f, [0, 1, 0, 0]));
        assert_eq!(apply_map(&g, &pt(&f, [1, 0, 0, 1])).unwrap(), pt(&f, [1, 0, 0, -1]));
        assert_eq!(apply_map(&g, &pt(&f, [1, 0, 0, -1])).unwrap(), pt(&f, [1, 0, 0, 1]));
    }

    #[test]
    fn fixed_loci_of_small_powers() {
        let (f, s, g) = setup();
        let fix1 = fixed_points(&g, 1, &s, 1 << 14).unwrap();
        assert_eq!(fix1, vec![pt(&f, [0, 0, 1, 0]), pt(&f, [0, 1, 0, 0])]);
        let fix5 = fixed_points(&g, 5, &s, 1 << 14).unwrap();
        assert_eq!(fix5.len(), 7);
        assert!(fix5.contains(&pt(&f, [0, 0, 1, 0])));
    }

    #[test]
    fn common_zero_sets() {
        let (f, s, _) = setup();
        let sextic = SparsePoly::parse("x^6 + x*y^5 + y*z^5", &f, &XYZW, &W1113).unwrap();
        let z = s.poly().var_like(2);
        let w = s.poly().var_like(3);
        let x = s.poly().var_like(0);
        let six = common_zeros(&[z.clone(), w.clone(), sextic], 1 << 14).unwrap();
        assert_eq!(six.len(), 6);
        assert!(six.contains(&pt(&f, [0, 1, 0, 0])));
        let y = s.poly().var_like(1);
        let stratum = common_zeros(&[x.clone(), y, z.clone()], 1 << 14).unwrap();
        assert_eq!(stratum.len(), 1);
        assert!(stratum[0].in_singular_stratum());
        let on_surface = common_zeros(&[w, z, x, s.poly().clone()], 1 << 14).unwrap();
        assert_eq!(on_surface, vec![pt(&f, [0, 1, 0, 0])]);
    }

    #[test]
    fn orbits() {
        let (f, _, g) = setup();
        let swap = vec![pt(&f, [1, 0, 0, 1]), pt(&f, [1, 0, 0, -1])];
        assert_eq!(orbit_lengths(&orbit_decomposition(&g, &swap).unwrap()), vec![2]);
        let id = CoordinateMap::identity(&g.images()[0]);
        assert_eq!(orbit_lengths(&orbit_decomposition(&id, &swap).unwrap()), vec![1, 1]);
        assert!(matches!(orbit_decomposition(&g, &swap[..1]), Err(Error::NotClosed)));
    }
}
