use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{Fe, FieldTower};
use crate::{Error, Result};

/// Weighted projective space with at least one weight-1 coordinate and at
/// most one heavier coordinate, e.g. `P^2`, `P(1,1,3)` or `P(1,1,1,3)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightedSpace {
    weights: Vec<u32>,
}

impl WeightedSpace {
    pub fn new(weights: &[u32]) -> Result<Self> {
        let light = weights.iter().filter(|&&w| w == 1).count();
        let heavy = weights.len() - light;
        if light == 0 || heavy > 1 || weights.contains(&0) {
            return Err(Error::UnsupportedWeights(weights.to_vec()));
        }
        Ok(Self { weights: weights.to_vec() })
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    /// Index of the coordinate of weight > 1, if any.
    pub fn heavy(&self) -> Option<usize> {
        self.weights.iter().position(|&w| w > 1)
    }

    pub fn light(&self) -> impl Iterator<Item = usize> + '_ {
        self.weights.iter().enumerate().filter(|(_, &w)| w == 1).map(|(i, _)| i)
    }
}

/// Canonical representative of a rational point: the first nonzero
/// weight-1 coordinate is 1. Points with every weight-1 coordinate zero form
/// the singular stratum; there the heavy coordinate is set to 1, since all
/// such points are identified by the weighted scaling.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WProjPoint {
    singular_stratum: bool,
    coords: Vec<Fe>,
}

impl WProjPoint {
    pub fn coords(&self) -> &[Fe] {
        &self.coords
    }

    pub fn in_singular_stratum(&self) -> bool {
        self.singular_stratum
    }

    pub fn format(&self, field: &FieldTower) -> Vec<String> {
        self.coords.iter().map(|c| field.format(c)).collect()
    }

    pub fn display(&self, field: &FieldTower) -> String {
        format!("({})", self.format(field).join(", "))
    }
}

impl fmt::Debug for WProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coords)?;
        if self.singular_stratum {
            write!(f, "*")?;
        }
        Ok(())
    }
}

/// Canonical form of raw coordinates.
pub fn normalize(space: &WeightedSpace, field: &FieldTower, raw: &[Fe]) -> Result<WProjPoint> {
    if raw.len() != space.dim() {
        return Err(Error::Dimension(format!("{} coordinates for a {}-variable space", raw.len(), space.dim())));
    }
    let pivot = space.light().find(|&i| !field.is_zero(&raw[i]));
    match pivot {
        Some(i) => {
            let lambda = field.inv(&raw[i]).unwrap();
            let coords = raw
                .iter()
                .zip(space.weights())
                .map(|(c, &w)| field.mul(c, &field.pow(&lambda, w as u128)))
                .collect();
            Ok(WProjPoint { singular_stratum: false, coords })
        }
        None => {
            let h = space.heavy().ok_or(Error::ZeroPoint)?;
            if field.is_zero(&raw[h]) {
                return Err(Error::ZeroPoint);
            }
            let mut coords = vec![field.zero(); space.dim()];
            coords[h] = field.one();
            Ok(WProjPoint { singular_stratum: true, coords })
        }
    }
}

/// All canonical points of the weight-1 coordinates alone, i.e. of the
/// projective space `P^{m-1}` they span, in lexicographic order.
pub fn light_points(field: &FieldTower, m: usize) -> Vec<Vec<Fe>> {
    let q = field.size();
    let mut out = Vec::new();
    for lead in (0..m).rev() {
        // coordinates before `lead` are zero, `lead` is 1, the rest are free
        let free = m - lead - 1;
        let count = q.pow(free as u32);
        for idx in 0..count {
            let mut v = vec![field.zero(); m];
            v[lead] = field.one();
            let mut rest = idx;
            for slot in (lead + 1..m).rev() {
                v[slot] = field.element(rest % q);
                rest /= q;
            }
            out.push(v);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::build_field_with_root;

    #[test]
    fn normalization_examples() {
        let f = build_field_with_root(101, 50).unwrap();
        let s = WeightedSpace::new(&[1, 1, 1, 3]).unwrap();
        let z = f.zero();
        let p = normalize(&s, &f, &[z.clone(), f.zeta_pow(40), z.clone(), z.clone()]).unwrap();
        assert_eq!(p.coords(), &[z.clone(), f.one(), z.clone(), z.clone()]);

        let raw: Vec<Fe> = [2, 4, 6, 8].iter().map(|&c| f.from_u64(c)).collect();
        let p = normalize(&s, &f, &raw).unwrap();
        let expect_w = f.mul(&f.from_u64(8), &f.inv(&f.from_u64(8)).unwrap());
        assert_eq!(p.coords(), &[f.one(), f.from_u64(2), f.from_u64(3), expect_w]);

        let p = normalize(&s, &f, &[z.clone(), z.clone(), z.clone(), f.from_u64(5)]).unwrap();
        assert!(p.in_singular_stratum());
        assert!(matches!(normalize(&s, &f, &[z.clone(), z.clone(), z.clone(), z.clone()]), Err(Error::ZeroPoint)));
    }

    #[test]
    fn unsupported_weights() {
        assert!(WeightedSpace::new(&[2, 3]).is_err());
        assert!(WeightedSpace::new(&[1, 2, 3]).is_err());
        assert!(WeightedSpace::new(&[1, 1, 1]).is_ok());
    }

    #[test]
    fn light_point_count() {
        let f = FieldTower::extension(5, 1).unwrap();
        let pts = light_points(&f, 3);
        assert_eq!(pts.len(), 31);
        let mut sorted = pts.clone();
        sorted.sort();
        assert_eq!(sorted, pts);
    }
}
