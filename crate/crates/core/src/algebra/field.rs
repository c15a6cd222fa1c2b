//! Finite fields `F_p` and `F_{p^k}` carrying a designated root of unity.
//!
//! Elements are residues modulo a monic irreducible polynomial over `F_p`,
//! stored as `k` coefficients in ascending powers of the generator `t`.
//! All arithmetic goes through the owning [`FieldTower`].

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::poly1::Poly1;
use crate::arith::{self, is_prime};
use crate::cyclotomic::cyclotomic_polynomial;
use crate::{Error, Result};

pub type Field = Arc<FieldTower>;

/// Field element: coefficients of the residue class in ascending powers of `t`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Fe(Vec<u64>);

impl Fe {
    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }
}

impl fmt::Debug for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            write!(f, "{}", self.0[0])
        } else {
            write!(f, "{:?}", self.0)
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FieldTower {
    p: u64,
    k: u32,
    /// Monic, ascending, length `k + 1`.
    modulus: Vec<u64>,
    zeta: Fe,
    n: u64,
}

/// Serialized field description.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub p: u64,
    pub k: u32,
    pub modulus: Vec<u64>,
    pub zeta: Vec<u64>,
    pub n: u64,
}

/// Smallest `k` with `n | p^k - 1`.
pub fn min_extension_degree(p: u64, n: u64) -> Result<u32> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n == 0 || n.is_multiple_of(p) {
        return Err(Error::CharacteristicDividesOrder { p, n });
    }
    Ok(arith::multiplicative_order(p % n, n).expect("p is a unit mod n") as u32)
}

/// `F_{p^k}` with a verified primitive `n`-th root of unity, `k` minimal.
///
/// For `k > 1` the modulus is the smallest monic irreducible factor of
/// `Φ_n mod p` (coefficients compared from the top degree down), so the
/// root of unity is the class of `t` itself.
pub fn build_field_with_root(p: u64, n: u64) -> Result<Field> {
    let k = min_extension_degree(p, n)?;
    if k == 1 {
        let base = FieldTower::prime(p)?;
        let g = base.primitive_element();
        let zeta = base.pow(&g, ((p - 1) / n) as u128);
        return Ok(Arc::new(FieldTower::with_modulus(p, vec![0, 1], zeta.0, n)?));
    }
    let base = FieldTower::prime(p)?;
    let phi: Vec<Fe> = cyclotomic_polynomial(n)
        .coeffs()
        .iter()
        .map(|&c| base.from_i64(c))
        .collect();
    let phi = Poly1::new(phi, &base);
    let mut factors = phi.equal_degree_factors(k as usize, &base, 0x5eed_0050);
    factors.sort_by_key(descending_key);
    let modulus: Vec<u64> = factors[0].coeffs().iter().map(|c| c.0[0]).collect();
    let mut zeta = vec![0u64; k as usize];
    zeta[1] = 1;
    Ok(Arc::new(FieldTower::with_modulus(p, modulus, zeta, n)?))
}

fn descending_key(f: &Poly1) -> Vec<u64> {
    f.coeffs().iter().rev().map(|c| c.0[0]).collect()
}

impl FieldTower {
    /// `F_p` itself, with `t` the class of 0 and the designated root `1`.
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p > u32::MAX as u64 {
            return Err(Error::InvalidField(format!("prime {p} too large")));
        }
        Ok(Self { p, k: 1, modulus: vec![0, 1], zeta: Fe(vec![1 % p]), n: 1 })
    }

    /// A field from an explicit modulus; checks irreducibility and the exact
    /// order of `zeta`.
    pub fn with_modulus(p: u64, modulus: Vec<u64>, zeta: Vec<u64>, n: u64) -> Result<Self> {
        let base = Self::prime(p)?;
        if modulus.len() < 2 || *modulus.last().unwrap() != 1 {
            return Err(Error::InvalidField("modulus must be monic of degree >= 1".into()));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidField("modulus coefficients must be reduced mod p".into()));
        }
        let k = (modulus.len() - 1) as u32;
        if k > 1 {
            let m = Poly1::new(modulus.iter().map(|&c| Fe(vec![c])).collect(), &base);
            if !m.is_irreducible(&base) {
                return Err(Error::InvalidField(format!("modulus {modulus:?} is reducible over F_{p}")));
            }
        }
        if zeta.len() != k as usize || zeta.iter().any(|&c| c >= p) {
            return Err(Error::InvalidField("zeta must be a reduced residue".into()));
        }
        let field = Self { p, k, modulus, zeta: Fe(zeta), n };
        let q = field.size();
        if n == 0 || !(q - 1).is_multiple_of(n as u128) {
            return Err(Error::InvalidField(format!("{n} does not divide q - 1")));
        }
        if !field.has_exact_order(&field.zeta, n) {
            return Err(Error::InvalidField(format!("zeta is not a primitive {n}-th root of unity")));
        }
        Ok(field)
    }

    /// `F_{p^k}` with the smallest monic irreducible modulus (coefficients
    /// compared from the top degree down) and a generator of the
    /// multiplicative group as the designated root.
    pub fn extension(p: u64, k: u32) -> Result<Field> {
        let base = Self::prime(p)?;
        if k == 0 {
            return Err(Error::InvalidField("extension degree 0".into()));
        }
        let modulus = if k == 1 {
            vec![0, 1]
        } else {
            let mut found = None;
            // lower coefficients enumerated as a base-p counter, top-first
            let total = (p as u128).pow(k);
            for idx in 0..total {
                let mut c = vec![0u64; k as usize + 1];
                c[k as usize] = 1;
                let mut rest = idx;
                for i in 0..k as usize {
                    c[i] = (rest % p as u128) as u64;
                    rest /= p as u128;
                }
                if c[0] == 0 {
                    continue;
                }
                let f = Poly1::new(c.iter().map(|&x| Fe(vec![x])).collect(), &base);
                if f.is_irreducible(&base) {
                    found = Some(c);
                    break;
                }
            }
            found.expect("irreducible polynomials exist in every degree")
        };
        let mut field = Self { p, k, modulus, zeta: Fe(vec![0; k as usize]), n: 1 };
        field.zeta = field.one();
        let g = field.primitive_element();
        let q = field.size();
        let modulus = field.modulus.clone();
        Ok(Arc::new(Self::with_modulus(p, modulus, g.0, (q - 1) as u64)?))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zeta(&self) -> &Fe {
        &self.zeta
    }

    pub fn root_order(&self) -> u64 {
        self.n
    }

    /// Number of elements, `p^k`.
    pub fn size(&self) -> u128 {
        (self.p as u128).pow(self.k)
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            p: self.p,
            k: self.k,
            modulus: self.modulus.clone(),
            zeta: self.zeta.0.clone(),
            n: self.n,
        }
    }

    pub fn zero(&self) -> Fe {
        Fe(vec![0; self.k as usize])
    }

    pub fn one(&self) -> Fe {
        self.from_u64(1)
    }

    pub fn from_u64(&self, c: u64) -> Fe {
        let mut v = vec![0; self.k as usize];
        v[0] = c % self.p;
        Fe(v)
    }

    pub fn from_i64(&self, c: i64) -> Fe {
        self.from_u64(c.rem_euclid(self.p as i64) as u64)
    }

    /// Element from raw residue coefficients (reduced mod p, padded).
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<Fe> {
        if coeffs.len() > self.k as usize {
            return Err(Error::InvalidField(format!(
                "residue has {} coefficients, field degree is {}",
                coeffs.len(),
                self.k
            )));
        }
        let mut v = vec![0; self.k as usize];
        for (i, c) in coeffs.iter().enumerate() {
            v[i] = c % self.p;
        }
        Ok(Fe(v))
    }

    /// The generator `t` of the extension (for `k = 1`, the element 0).
    pub fn generator(&self) -> Fe {
        if self.k == 1 {
            return Fe(vec![(self.p - self.modulus[0]) % self.p]);
        }
        let mut v = vec![0; self.k as usize];
        v[1] = 1;
        Fe(v)
    }

    pub fn is_zero(&self, a: &Fe) -> bool {
        a.0.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self, a: &Fe) -> bool {
        *a == self.one()
    }

    pub fn add(&self, a: &Fe, b: &Fe) -> Fe {
        let p = self.p;
        Fe(a.0.iter().zip(&b.0).map(|(x, y)| (x + y) % p).collect())
    }

    pub fn sub(&self, a: &Fe, b: &Fe) -> Fe {
        let p = self.p;
        Fe(a.0.iter().zip(&b.0).map(|(x, y)| (x + p - y) % p).collect())
    }

    pub fn neg(&self, a: &Fe) -> Fe {
        let p = self.p;
        Fe(a.0.iter().map(|x| (p - x) % p).collect())
    }

    pub fn mul(&self, a: &Fe, b: &Fe) -> Fe {
        let p = self.p;
        let k = self.k as usize;
        if k == 1 {
            return Fe(vec![a.0[0] * b.0[0] % p]);
        }
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        for i in (k..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            for j in 0..k {
                let m = self.modulus[j];
                prod[i - k + j] = (prod[i - k + j] + (p - c) * m) % p;
            }
            prod[i] = 0;
        }
        prod.truncate(k);
        Fe(prod)
    }

    pub fn scale(&self, c: u64, a: &Fe) -> Fe {
        let p = self.p;
        let c = c % p;
        Fe(a.0.iter().map(|x| x * c % p).collect())
    }

    pub fn square(&self, a: &Fe) -> Fe {
        self.mul(a, a)
    }

    pub fn pow(&self, a: &Fe, mut e: u128) -> Fe {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.square(&base);
            e >>= 1;
        }
        acc
    }

    /// Power with a signed exponent; negative exponents invert first.
    pub fn pow_i(&self, a: &Fe, e: i64) -> Fe {
        if e >= 0 {
            self.pow(a, e as u128)
        } else {
            self.pow(&self.inv(a).expect("negative power of zero"), e.unsigned_abs() as u128)
        }
    }

    pub fn inv(&self, a: &Fe) -> Option<Fe> {
        if self.is_zero(a) {
            None
        } else {
            Some(self.pow(a, self.size() - 2))
        }
    }

    pub fn div(&self, a: &Fe, b: &Fe) -> Option<Fe> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    pub fn frobenius(&self, a: &Fe) -> Fe {
        self.pow(a, self.p as u128)
    }

    /// `zeta^e`, exponent taken modulo the root order.
    pub fn zeta_pow(&self, e: i64) -> Fe {
        self.pow(&self.zeta, e.rem_euclid(self.n as i64) as u128)
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: &Fe) -> Option<u64> {
        if self.is_zero(a) {
            return None;
        }
        let group = (self.size() - 1) as u64;
        let mut ord = group;
        for l in arith::prime_divisors(group) {
            while ord.is_multiple_of(l) && self.is_one(&self.pow(a, (ord / l) as u128)) {
                ord /= l;
            }
        }
        Some(ord)
    }

    pub fn has_exact_order(&self, a: &Fe, n: u64) -> bool {
        if !self.is_one(&self.pow(a, n as u128)) {
            return false;
        }
        arith::prime_divisors(n)
            .into_iter()
            .all(|l| !self.is_one(&self.pow(a, (n / l) as u128)))
    }

    /// The element with the given index in base-`p` digit order
    /// (index `i = Σ c_j p^j`).
    pub fn element(&self, mut index: u128) -> Fe {
        let mut v = vec![0u64; self.k as usize];
        for c in v.iter_mut() {
            *c = (index % self.p as u128) as u64;
            index /= self.p as u128;
        }
        Fe(v)
    }

    pub fn index_of(&self, a: &Fe) -> u128 {
        a.0.iter().rev().fold(0u128, |acc, &c| acc * self.p as u128 + c as u128)
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> + '_ {
        (0..self.size()).map(move |i| self.element(i))
    }

    /// First element (in index order) generating the multiplicative group.
    pub fn primitive_element(&self) -> Fe {
        let group = (self.size() - 1) as u64;
        (1..self.size())
            .map(|i| self.element(i))
            .find(|a| self.order(a) == Some(group))
            .expect("multiplicative group of a finite field is cyclic")
    }

    /// True when `a` lies in the subfield `F_{p^d}`.
    pub fn in_subfield(&self, a: &Fe, d: u32) -> bool {
        self.pow(a, (self.p as u128).pow(d)) == *a
    }

    /// Absolute trace to `F_p`, as an integer in `0..p`.
    pub fn absolute_trace(&self, a: &Fe) -> u64 {
        let mut acc = self.zero();
        let mut cur = a.clone();
        for _ in 0..self.k {
            acc = self.add(&acc, &cur);
            cur = self.frobenius(&cur);
        }
        debug_assert!(acc.0[1..].iter().all(|&c| c == 0));
        acc.0[0]
    }

    /// Square root for odd characteristic (Tonelli–Shanks); `None` for
    /// non-squares. In characteristic 2 every element has the unique root
    /// `a^{q/2}`.
    pub fn sqrt(&self, a: &Fe) -> Option<Fe> {
        if self.is_zero(a) {
            return Some(self.zero());
        }
        let q = self.size();
        if self.p == 2 {
            return Some(self.pow(a, q / 2));
        }
        if !self.is_one(&self.pow(a, (q - 1) / 2)) {
            return None;
        }
        let mut s = 0u32;
        let mut odd = q - 1;
        while odd.is_multiple_of(2) {
            odd /= 2;
            s += 1;
        }
        let non_residue = (2..q)
            .map(|i| self.element(i))
            .find(|z| !self.is_one(&self.pow(z, (q - 1) / 2)))
            .expect("a non-residue exists in odd characteristic");
        let mut m = s;
        let mut c = self.pow(&non_residue, odd);
        let mut t = self.pow(a, odd);
        let mut r = self.pow(a, odd.div_ceil(2));
        while !self.is_one(&t) {
            let mut i = 0u32;
            let mut t2 = t.clone();
            while !self.is_one(&t2) {
                t2 = self.square(&t2);
                i += 1;
            }
            let mut b = c.clone();
            for _ in 0..(m - i - 1) {
                b = self.square(&b);
            }
            m = i;
            c = self.square(&b);
            t = self.mul(&t, &c);
            r = self.mul(&r, &b);
        }
        debug_assert_eq!(self.square(&r), *a);
        Some(r)
    }

    /// Solutions of `u^2 + u = c` in characteristic 2; solvable exactly when
    /// the absolute trace of `c` vanishes.
    pub fn solve_artin_schreier(&self, c: &Fe) -> Option<[Fe; 2]> {
        assert_eq!(self.p, 2, "Artin–Schreier solving is for characteristic 2");
        if self.absolute_trace(c) != 0 {
            return None;
        }
        // u = Σ_{i<k} (Σ_{j>i} δ^{2^j}) c^{2^i} with Tr(δ) = 1
        let delta = self
            .elements()
            .find(|d| self.absolute_trace(d) == 1)
            .expect("trace is surjective");
        let k = self.k as usize;
        let delta_pows: Vec<Fe> = std::iter::successors(Some(delta), |d| Some(self.square(d)))
            .take(k)
            .collect();
        let mut u = self.zero();
        let mut c_pow = c.clone();
        for i in 0..k {
            let inner = delta_pows[i + 1..]
                .iter()
                .fold(self.zero(), |acc, d| self.add(&acc, d));
            u = self.add(&u, &self.mul(&inner, &c_pow));
            c_pow = self.square(&c_pow);
        }
        debug_assert_eq!(self.add(&self.square(&u), &u), *c);
        let other = self.add(&u, &self.one());
        Some([u, other])
    }

    /// Human-readable element: an integer for prime fields, otherwise a
    /// polynomial in `t`.
    pub fn format(&self, a: &Fe) -> String {
        if self.k == 1 {
            return a.0[0].to_string();
        }
        let mut parts = Vec::new();
        for (d, &c) in a.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            parts.push(match (d, c) {
                (0, c) => c.to_string(),
                (1, 1) => "t".to_string(),
                (1, c) => format!("{c}*t"),
                (d, 1) => format!("t^{d}"),
                (d, c) => format!("{c}*t^{d}"),
            });
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        }
    }
}
