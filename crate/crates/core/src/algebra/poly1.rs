//! Dense univariate polynomials over a [`FieldTower`].

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::{Fe, FieldTower};
use crate::arith;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly1 {
    /// Ascending; no trailing zeros.
    coeffs: Vec<Fe>,
}

impl Poly1 {
    pub fn new(mut coeffs: Vec<Fe>, field: &FieldTower) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Fe, field: &FieldTower) -> Self {
        Self::new(vec![c], field)
    }

    /// `x`
    pub fn x(field: &FieldTower) -> Self {
        Self { coeffs: vec![field.zero(), field.one()] }
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize, field: &FieldTower) -> Fe {
        self.coeffs.get(i).cloned().unwrap_or_else(|| field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self, field: &FieldTower) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n).map(|i| field.add(&self.coeff(i, field), &other.coeff(i, field))).collect();
        Self::new(c, field)
    }

    pub fn sub(&self, other: &Self, field: &FieldTower) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n).map(|i| field.sub(&self.coeff(i, field), &other.coeff(i, field))).collect();
        Self::new(c, field)
    }

    pub fn scale(&self, c: &Fe, field: &FieldTower) -> Self {
        Self::new(self.coeffs.iter().map(|a| field.mul(a, c)).collect(), field)
    }

    pub fn mul(&self, other: &Self, field: &FieldTower) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut c = vec![field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if field.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] = field.add(&c[i + j], &field.mul(a, b));
            }
        }
        Self::new(c, field)
    }

    pub fn div_rem(&self, divisor: &Self, field: &FieldTower) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        if self.coeffs.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let lead_inv = field.inv(&divisor.coeffs[dd]).unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![field.zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let q = field.mul(&rem[i + dd], &lead_inv);
            if field.is_zero(&q) {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = field.sub(&rem[i + j], &field.mul(&q, d));
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        (Self::new(quot, field), Self::new(rem, field))
    }

    pub fn rem(&self, divisor: &Self, field: &FieldTower) -> Self {
        self.div_rem(divisor, field).1
    }

    pub fn monic(&self, field: &FieldTower) -> Self {
        match self.coeffs.last() {
            None => Self::zero(),
            Some(l) => self.scale(&field.inv(l).unwrap(), field),
        }
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self, field: &FieldTower) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b, field);
            a = b;
            b = r;
        }
        a.monic(field)
    }

    pub fn pow_mod(&self, mut e: u128, modulus: &Self, field: &FieldTower) -> Self {
        let mut acc = Self::constant(field.one(), field).rem(modulus, field);
        let mut base = self.rem(modulus, field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, field).rem(modulus, field);
            }
            base = base.mul(&base, field).rem(modulus, field);
            e >>= 1;
        }
        acc
    }

    pub fn eval(&self, x: &Fe, field: &FieldTower) -> Fe {
        self.coeffs
            .iter()
            .rev()
            .fold(field.zero(), |acc, c| field.add(&field.mul(&acc, x), c))
    }

    pub fn derivative(&self, field: &FieldTower) -> Self {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, a)| field.scale(i as u64, a))
            .collect();
        Self::new(c, field)
    }

    /// `x^{q^j} mod self` by repeated `q`-th powering.
    fn frobenius_x(&self, j: u32, field: &FieldTower) -> Self {
        let q = field.size();
        let mut cur = Self::x(field).rem(self, field);
        for _ in 0..j {
            cur = cur.pow_mod(q, self, field);
        }
        cur
    }

    /// Rabin's irreducibility test over the coefficient field.
    pub fn is_irreducible(&self, field: &FieldTower) -> bool {
        let d = match self.degree() {
            None | Some(0) => return false,
            Some(1) => return true,
            Some(d) => d as u32,
        };
        let x = Self::x(field);
        if self.frobenius_x(d, field).sub(&x, field).rem(self, field) != Self::zero() {
            return false;
        }
        arith::prime_divisors(d as u64).into_iter().all(|l| {
            let h = self.frobenius_x(d / l as u32, field).sub(&x, field);
            self.gcd(&h, field).degree() == Some(0)
        })
    }

    /// Splits a squarefree polynomial whose irreducible factors all have
    /// degree `d` (Cantor–Zassenhaus, seeded so results are reproducible).
    /// Factors are returned monic.
    pub fn equal_degree_factors(&self, d: usize, field: &FieldTower, seed: u64) -> Vec<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::new();
        let mut stack = vec![self.monic(field)];
        while let Some(f) = stack.pop() {
            let deg = f.degree().unwrap_or(0);
            if deg == 0 {
                continue;
            }
            if deg == d {
                out.push(f);
                continue;
            }
            assert!(deg % d == 0, "factor degree {deg} is not a multiple of {d}");
            loop {
                let a = Self::new(
                    (0..deg).map(|_| field.element(rng.gen_range(0..field.size()))).collect(),
                    field,
                );
                if a.degree().unwrap_or(0) == 0 {
                    continue;
                }
                let h = if field.p() == 2 {
                    // Σ_{i < d·k} a^{2^i}
                    let mut acc = Self::zero();
                    let mut cur = a.rem(&f, field);
                    for _ in 0..(d as u32 * field.degree()) {
                        acc = acc.add(&cur, field);
                        cur = cur.mul(&cur, field).rem(&f, field);
                    }
                    acc
                } else {
                    let e = (field.size().pow(d as u32) - 1) / 2;
                    a.pow_mod(e, &f, field).sub(&Self::constant(field.one(), field), field)
                };
                let g = f.gcd(&h, field);
                let gd = g.degree().unwrap_or(0);
                if gd > 0 && gd < deg {
                    let (q, r) = f.div_rem(&g, field);
                    debug_assert!(r.is_zero());
                    stack.push(g);
                    stack.push(q.monic(field));
                    break;
                }
            }
        }
        out
    }

    /// Distinct roots in the coefficient field, sorted by element index.
    pub fn roots(&self, field: &FieldTower) -> Vec<Fe> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let x = Self::x(field);
        let split = self.gcd(&x.pow_mod(field.size(), self, field).sub(&x, field), field);
        let mut roots: Vec<Fe> = split
            .equal_degree_factors(1, field, 0x0007_0075)
            .into_iter()
            .map(|lin| field.neg(&lin.coeffs[0]))
            .collect();
        roots.sort_by_key(|r| field.index_of(r));
        roots
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64) -> FieldTower {
        FieldTower::prime(p).unwrap()
    }

    fn poly(c: &[u64], f: &FieldTower) -> Poly1 {
        Poly1::new(c.iter().map(|&x| f.from_u64(x)).collect(), f)
    }

    #[test]
    fn irreducibility_over_f2_matches_enumeration() {
        let f = fp(2);
        // number of monic irreducibles of degree 1..=6 over F_2
        let expected = [2, 1, 2, 3, 6, 9];
        for (d, &count) in (1..=6usize).zip(expected.iter()) {
            let mut n = 0;
            for bits in 0..(1u64 << d) {
                let mut c: Vec<u64> = (0..d).map(|i| (bits >> i) & 1).collect();
                c.push(1);
                if poly(&c, &f).is_irreducible(&f) {
                    n += 1;
                }
            }
            assert_eq!(n, count, "degree {d}");
        }
    }

    #[test]
    fn roots_of_x5_plus_1_mod_101() {
        let f = fp(101);
        let r = poly(&[1, 0, 0, 0, 0, 1], &f).roots(&f);
        assert_eq!(r.len(), 5);
        for x in &r {
            assert!(f.is_zero(&poly(&[1, 0, 0, 0, 0, 1], &f).eval(x, &f)));
        }
    }

    #[test]
    fn roots_in_characteristic_two() {
        let f = FieldTower::extension(2, 4).unwrap();
        // x^15 - 1 splits completely over F_16
        let mut c = vec![0u64; 16];
        c[0] = 1;
        c[15] = 1;
        assert_eq!(poly(&c, &f).roots(&f).len(), 15);
    }

    #[test]
    fn gcd_and_division() {
        let f = fp(7);
        let a = poly(&[1, 1], &f).mul(&poly(&[2, 1], &f), &f);
        let b = poly(&[1, 1], &f).mul(&poly(&[3, 1], &f), &f);
        assert_eq!(a.gcd(&b, &f), poly(&[1, 1], &f));
        let (q, r) = a.div_rem(&poly(&[2, 1], &f), &f);
        assert_eq!(q, poly(&[1, 1], &f));
        assert!(r.is_zero());
    }
}
