//! Coordinate substitution maps on weighted projective space.

use std::collections::HashMap;
use std::fmt;

use super::field::{Fe, Field};
use super::sparse::{Exponents, SparsePoly};
use crate::{Error, Result};

/// Default search cap for [`CoordinateMap::order`].
pub const DEFAULT_ORDER_BOUND: u32 = 200;

/// One weighted-homogeneous image polynomial per coordinate; the image of a
/// weight-`d` coordinate has weighted degree `d`.
#[derive(Clone, PartialEq, Eq)]
pub struct CoordinateMap {
    images: Vec<SparsePoly>,
}

impl CoordinateMap {
    pub fn new(images: Vec<SparsePoly>) -> Result<Self> {
        let first = images.first().ok_or_else(|| Error::Dimension("empty coordinate map".into()))?;
        if images.len() != first.nvars() {
            return Err(Error::Dimension(format!(
                "{} images for {} coordinates",
                images.len(),
                first.nvars()
            )));
        }
        for (i, img) in images.iter().enumerate() {
            first.check_same_ring(img)?;
            if img.is_zero() {
                return Err(Error::NonInvertibleMap);
            }
            if img.weighted_degree() != Some(first.weights()[i]) {
                return Err(Error::NotHomogeneous);
            }
        }
        Ok(Self { images })
    }

    pub fn identity(template: &SparsePoly) -> Self {
        Self { images: (0..template.nvars()).map(|i| template.var_like(i)).collect() }
    }

    /// `x_i ↦ c_i · x_i`.
    pub fn diagonal(template: &SparsePoly, scalars: &[Fe]) -> Result<Self> {
        if scalars.len() != template.nvars() {
            return Err(Error::Dimension("one scalar per coordinate".into()));
        }
        Self::new(scalars.iter().enumerate().map(|(i, c)| template.var_like(i).scale(c)).collect())
    }

    pub fn images(&self) -> &[SparsePoly] {
        &self.images
    }

    pub fn field(&self) -> &Field {
        self.images[0].field()
    }

    pub fn weights(&self) -> &[u32] {
        self.images[0].weights()
    }

    pub fn nvars(&self) -> usize {
        self.images.len()
    }

    /// `self ∘ other`, i.e. the map `P ↦ self(other(P))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        let images = self.images.iter().map(|img| pullback(img, other)).collect::<Result<_>>()?;
        Ok(Self { images })
    }

    pub fn power(&self, k: u32) -> Result<Self> {
        let mut acc = Self::identity(&self.images[0]);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.compose(&base)?;
            }
        }
        Ok(acc)
    }

    /// Graded automorphism test: the coefficients of the same-weight
    /// variables in the images must form invertible blocks.
    pub fn is_invertible(&self) -> bool {
        let f = self.field();
        let weights = self.weights();
        let n = self.nvars();
        let mut classes: Vec<u32> = weights.to_vec();
        classes.sort_unstable();
        classes.dedup();
        classes.into_iter().all(|w| {
            let idx: Vec<usize> = (0..n).filter(|&i| weights[i] == w).collect();
            let mut m: Vec<Vec<Fe>> = idx
                .iter()
                .map(|&i| {
                    idx.iter()
                        .map(|&j| {
                            let mut e = vec![0; n];
                            e[j] = 1;
                            self.images[i].coefficient(&e)
                        })
                        .collect()
                })
                .collect();
            !f.is_zero(&determinant(&mut m, f))
        })
    }

    /// The scalar `λ` when the map is `x_i ↦ λ^{w_i} x_i`.
    pub fn as_weighted_scaling(&self) -> Result<Option<Fe>> {
        let f = self.field();
        let weights = self.weights();
        let unit = weights
            .iter()
            .position(|&w| w == 1)
            .ok_or_else(|| Error::UnsupportedWeights(weights.to_vec()))?;
        let n = self.nvars();
        let mut e = vec![0; n];
        e[unit] = 1;
        let lambda = self.images[unit].coefficient(&e);
        for (i, img) in self.images.iter().enumerate() {
            let expect = img.var_like(i).scale(&f.pow(&lambda, weights[i] as u128));
            if *img != expect {
                return Ok(None);
            }
        }
        Ok(Some(lambda))
    }

    /// Smallest `k ≥ 1` with `self^k` a weighted scaling (the identity of
    /// weighted projective space). Checked symbolically.
    pub fn order(&self, bound: u32) -> Result<u32> {
        if !self.is_invertible() {
            return Err(Error::NonInvertibleMap);
        }
        let mut cur = self.clone();
        for k in 1..=bound {
            if cur.as_weighted_scaling()?.is_some() {
                return Ok(k);
            }
            cur = cur.compose(self)?;
        }
        Err(Error::OrderBoundExceeded(bound))
    }

    /// Image of raw coordinates (no normalization).
    pub fn apply_raw(&self, point: &[Fe]) -> Vec<Fe> {
        self.images.iter().map(|img| img.eval(point)).collect()
    }
}

impl fmt::Display for CoordinateMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars = self.images[0].vars().join(", ");
        let imgs: Vec<String> = self.images.iter().map(|p| p.to_string()).collect();
        write!(f, "({vars}) ↦ ({})", imgs.join(", "))
    }
}

impl fmt::Debug for CoordinateMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn determinant(m: &mut [Vec<Fe>], f: &Field) -> Fe {
    let n = m.len();
    let mut det = f.one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !f.is_zero(&m[r][col])) else {
            return f.zero();
        };
        if piv != col {
            m.swap(piv, col);
            det = f.neg(&det);
        }
        det = f.mul(&det, &m[col][col]);
        let inv = f.inv(&m[col][col]).unwrap();
        for r in col + 1..n {
            let factor = f.mul(&m[r][col], &inv);
            if f.is_zero(&factor) {
                continue;
            }
            for c in col..n {
                let t = f.mul(&factor, &m[col][c]);
                m[r][c] = f.sub(&m[r][c], &t);
            }
        }
    }
    det
}

/// `F ∘ M`: every variable of `F` replaced by its image under `M`.
pub fn pullback(poly: &SparsePoly, map: &CoordinateMap) -> Result<SparsePoly> {
    poly.check_same_ring(&map.images[0])?;
    let mut powers: HashMap<(usize, u32), SparsePoly> = HashMap::new();
    let mut out = poly.zero_like();
    for (exps, c) in poly.terms() {
        let mut term = poly.constant_like(c.clone());
        for (i, &e) in exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let p = powers.entry((i, e)).or_insert_with(|| map.images[i].pow(e));
            term = term.mul(p);
        }
        out = out.add(&term);
    }
    Ok(out)
}

/// `λ` with `F ∘ M = λ F`, or `None` when `F` is not semi-invariant.
pub fn invariance_scalar(poly: &SparsePoly, map: &CoordinateMap) -> Result<Option<Fe>> {
    if poly.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !poly.is_weighted_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let image = pullback(poly, map)?;
    let f = poly.field();
    let (lead_exp, lead_coeff) = poly.terms().next_back().expect("nonzero");
    let lambda = f.div(&image.coefficient(lead_exp), lead_coeff).unwrap();
    Ok((image == poly.scale(&lambda)).then_some(lambda))
}

pub fn map_order(map: &CoordinateMap, bound: u32) -> Result<u32> {
    map.order(bound)
}

/// Degree-`d` monomials `Π x_i^{e_i}` with `Σ action_i · e_i ≡ 0 (mod n)`,
/// for the diagonal action `x_i ↦ ζ_n^{action_i} x_i`. Listed in
/// descending lexicographic order of exponent vectors.
pub fn invariant_monomials(action: &[u64], n: u64, d: u32) -> Vec<Exponents> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; action.len()];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, action: &[u64], n: u64, out: &mut Vec<Exponents>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            let weight: u64 = cur.iter().zip(action).map(|(&e, &a)| e as u64 * a).sum();
            if n == 0 || weight.is_multiple_of(n) {
                out.push(cur.clone());
            }
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(i + 1, left - e, cur, action, n, out);
        }
    }
    if !action.is_empty() {
        rec(0, d, &mut cur, action, n, &mut out);
    }
    out
}

/// Exponents of the diagonal map `x_i ↦ ζ^{a_i} x_i` as a projective
/// transformation: smallest `m ≥ 1` with `m·a_i` all congruent mod `n`.
pub fn projective_diagonal_order(action: &[u64], n: u64) -> u64 {
    (1..=n)
        .find(|&m| action.iter().all(|&a| (m * a) % n == (m * action[0]) % n))
        .unwrap_or(n)
}
