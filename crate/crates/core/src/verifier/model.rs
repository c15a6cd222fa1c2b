//! Predicted shapes of fixed loci and the numerical tests applied to them.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::{euler_k3, power_list, EigenPacketList};
use crate::{Error, Result};

/// A smooth fixed locus: disjoint curves of given genera plus isolated points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedLocusModel {
    pub curves: Vec<(u32, String)>,
    pub isolated: u32,
}

impl FixedLocusModel {
    pub fn points(n: u32) -> Self {
        Self { curves: Vec::new(), isolated: n }
    }

    pub fn curve(genus: u32, label: &str) -> Self {
        Self { curves: vec![(genus, label.to_string())], isolated: 0 }
    }

    pub fn with_curve(mut self, genus: u32, label: &str) -> Self {
        self.curves.push((genus, label.to_string()));
        self
    }

    pub fn with_points(mut self, n: u32) -> Self {
        self.isolated += n;
        self
    }

    pub fn euler(&self) -> i64 {
        self.curves.iter().map(|(g, _)| 2 - 2 * *g as i64).sum::<i64>() + self.isolated as i64
    }
}

/// Outcome of comparing a Lefschetz number with the Euler number of a model.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Consistency {
    pub lefschetz: i64,
    pub model_euler: i64,
}

impl Consistency {
    pub fn consistent(&self) -> bool {
        self.lefschetz == self.model_euler
    }
}

pub fn lefschetz_crosscheck(list: &EigenPacketList, k: u64, model: &FixedLocusModel) -> Consistency {
    Consistency { lefschetz: euler_k3(&power_list(list, k)), model_euler: model.euler() }
}

/// Branched cyclic cover of curves of degree `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamificationProfile {
    pub degree: u64,
    pub genus: u64,
    pub quotient_genus: Option<u64>,
    /// `(ramification index, number of points upstairs)`.
    pub ramification: Vec<(u64, u64)>,
}

impl RamificationProfile {
    pub fn new(degree: u64, genus: u64, ramification: Vec<(u64, u64)>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidProfile("cover degree must be positive".into()));
        }
        for &(e, c) in &ramification {
            if e == 0 || !degree.is_multiple_of(e) || c == 0 {
                return Err(Error::InvalidProfile(format!(
                    "ramification ({e}, {c}) incompatible with degree {degree}"
                )));
            }
        }
        Ok(Self { degree, genus, quotient_genus: None, ramification })
    }
}

/// Quotient genus forced by Riemann–Hurwitz,
/// `2g − 2 = n(2g′ − 2) + Σ count·(e − 1)`. A negative or fractional value
/// means no such cover exists.
pub fn hurwitz_deficit(profile: &RamificationProfile) -> Ratio<i64> {
    let n = profile.degree as i64;
    let g = profile.genus as i64;
    let r: i64 = profile.ramification.iter().map(|&(e, c)| c as i64 * (e as i64 - 1)).sum();
    Ratio::new(2 * g - 2 - r + 2 * n, 2 * n)
}

/// Genus of a smooth plane curve of degree `d`.
pub fn genus_degree(d: u64) -> u64 {
    assert!(d >= 1, "degree must be positive");
    ((d - 1) * d.saturating_sub(2)) / 2
}

/// True when `c2 · d2 > max_pairing²`, which the Hodge index theorem rules
/// out for curves with positive self-intersection.
pub fn hodge_index_violation(c2: i64, d2: i64, max_pairing: u64) -> bool {
    (c2 as i128) * (d2 as i128) > (max_pairing as i128).pow(2)
}

/// `|N − q − 1| ≤ 2g√q`, tested exactly as `(N − q − 1)² ≤ 4g²q`.
pub fn within_curve_weil_window(count: u64, q: u64, genus: u64) -> bool {
    let dev = count as i128 - q as i128 - 1;
    dev * dev <= 4 * (genus as i128).pow(2) * q as i128
}

/// `|N − q² − 1| ≤ 22q`.
pub fn within_k3_weil_window(count: u64, q: u64) -> bool {
    let dev = count as i128 - (q as i128).pow(2) - 1;
    dev.abs() <= 22 * q as i128
}

#[cfg(test)]
mod tests {
    use super::*;

    fn realized() -> EigenPacketList {
        EigenPacketList::parse("1:1,2:1,50:1", 22).unwrap()
    }

    fn excluded() -> EigenPacketList {
        EigenPacketList::parse("1:2,50:1", 22).unwrap()
    }

    #[test]
    fn genus_degree_values() {
        assert_eq!(genus_degree(6), 10);
        assert_eq!(genus_degree(1), 0);
        assert_eq!(genus_degree(3), 1);
    }

    #[test]
    fn lefschetz_examples() {
        let c = lefschetz_crosscheck(&realized(), 25, &FixedLocusModel::curve(10, "C10"));
        assert!(c.consistent());
        assert_eq!(c.lefschetz, -18);
        let c = lefschetz_crosscheck(&realized(), 10, &FixedLocusModel::curve(2, "D2").with_points(1));
        assert_eq!((c.lefschetz, c.model_euler), (-1, -1));
        assert!(lefschetz_crosscheck(&excluded(), 25, &FixedLocusModel::curve(9, "C9")).consistent());
        assert!(lefschetz_crosscheck(&realized(), 5, &FixedLocusModel::points(7)).consistent());
        assert!(!lefschetz_crosscheck(&realized(), 5, &FixedLocusModel::points(6)).consistent());
    }

    #[test]
    fn hurwitz_examples() {
        let p = RamificationProfile::new(25, 9, vec![(25, 4), (5, 5)]).unwrap();
        assert_eq!(hurwitz_deficit(&p), Ratio::from_integer(-1));
        let p = RamificationProfile::new(2, 0, vec![(2, 2)]).unwrap();
        assert_eq!(hurwitz_deficit(&p), Ratio::from_integer(0));
        let p = RamificationProfile::new(1, 5, vec![]).unwrap();
        assert_eq!(hurwitz_deficit(&p), Ratio::from_integer(5));
        assert!(RamificationProfile::new(25, 9, vec![(3, 1)]).is_err());
        assert!(RamificationProfile::new(25, 9, vec![(5, 0)]).is_err());
    }

    #[test]
    fn hodge_examples() {
        assert!(hodge_index_violation(18, 4, 7));
        assert!(!hodge_index_violation(18, 2, 7));
        assert!(hodge_index_violation(18, 6, 7));
    }

    #[test]
    fn weil_windows() {
        assert!(within_k3_weil_window(10349, 101));
        assert!(!within_k3_weil_window(101 * 101 + 1 + 22 * 101 + 1, 101));
        // genus 2 over F_101: 2g√q ≈ 40.2
        assert!(within_curve_weil_window(142, 101, 2));
        assert!(!within_curve_weil_window(143, 101, 2));
        assert!(within_curve_weil_window(62, 101, 2));
        assert!(!within_curve_weil_window(61, 101, 2));
    }
}
