//! Galois-closed eigenvalue lists on `H^2` and the integer calculus built on them.
//!
//! An eigenvalue list is stored as packets `(a, m)`: every primitive `a`-th
//! root of unity occurs with multiplicity `m`. A lone primitive root of order
//! `a > 2` has no representation, which is exactly the constraint that the
//! characteristic polynomial of an automorphism on cohomology has integer
//! coefficients.
//!
//! Everything here is exact integer arithmetic.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::arith::{self, gcd};
use crate::{Error, Result};

/// Second Betti number of a K3 surface.
pub const K3_B2: u64 = 22;

pub fn euler_phi(n: u64) -> u64 {
    arith::euler_phi(n)
}

/// Sum of all primitive `n`-th roots of unity: zero when `n` has a square
/// factor, otherwise `(-1)^t` for `t` distinct prime factors.
pub fn primitive_root_sum(n: u64) -> i64 {
    assert!(n >= 1);
    let factors = arith::factorize(n);
    if factors.iter().any(|&(_, e)| e >= 2) {
        0
    } else if factors.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Dense integer polynomial, coefficients in ascending degree.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "Vec<i64>", from = "Vec<i64>")]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl From<Vec<i64>> for IntPolynomial {
    fn from(coeffs: Vec<i64>) -> Self {
        Self::new(coeffs)
    }
}

impl From<IntPolynomial> for Vec<i64> {
    fn from(p: IntPolynomial) -> Self {
        p.coeffs
    }
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self { coeffs: vec![1] }
    }

    /// `c * x^d`
    pub fn monomial(c: i64, d: usize) -> Self {
        let mut coeffs = vec![0; d + 1];
        coeffs[d] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> i64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                a.checked_add(b).expect("integer polynomial overflow")
            })
            .collect();
        Self::new(c)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut c = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let t = a.checked_mul(*b).expect("integer polynomial overflow");
                c[i + j] = c[i + j].checked_add(t).expect("integer polynomial overflow");
            }
        }
        Self::new(c)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Division by a monic polynomial; returns `(quotient, remainder)`.
    pub fn div_rem_monic(&self, divisor: &Self) -> (Self, Self) {
        assert_eq!(divisor.leading(), 1, "divisor must be monic");
        let dd = divisor.degree().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![0i64; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let q = rem[i + dd];
            if q == 0 {
                continue;
            }
            quot[i] = q;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                let t = q.checked_mul(*d).expect("integer polynomial overflow");
                rem[i + j] = rem[i + j].checked_sub(t).expect("integer polynomial overflow");
            }
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    pub fn rem_monic(&self, divisor: &Self) -> Self {
        self.div_rem_monic(divisor).1
    }

    pub fn eval(&self, x: i64) -> i64 {
        self.coeffs.iter().rev().fold(0i64, |acc, c| {
            acc.checked_mul(x)
                .and_then(|v| v.checked_add(*c))
                .expect("integer polynomial overflow")
        })
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let abs = c.unsigned_abs();
            let body = match (d, abs) {
                (0, a) => a.to_string(),
                (1, 1) => "x".to_string(),
                (1, a) => format!("{a}x"),
                (d, 1) => format!("x^{d}"),
                (d, a) => format!("{a}x^{d}"),
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

fn cyclotomic_cache() -> &'static Mutex<HashMap<u64, IntPolynomial>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, IntPolynomial>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The `n`-th cyclotomic polynomial, by exact division of `x^n - 1` by
/// `Φ_d` for the proper divisors `d` of `n`.
pub fn cyclotomic_polynomial(n: u64) -> IntPolynomial {
    assert!(n >= 1);
    if let Some(p) = cyclotomic_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    let mut num = IntPolynomial::monomial(1, n as usize).sub(&IntPolynomial::one());
    for d in arith::divisors(n).into_iter().filter(|&d| d < n) {
        let (q, r) = num.div_rem_monic(&cyclotomic_polynomial(d));
        assert!(r.is_zero(), "Φ_{d} does not divide x^{n}-1");
        num = q;
    }
    assert_eq!(num.degree(), Some(euler_phi(n) as usize));
    cyclotomic_cache().lock().unwrap().insert(n, num.clone());
    num
}

/// Galois-closed multiset of roots of unity, stored as `(order, multiplicity)`
/// packets with at most one entry per order.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<[u64; 2]>", try_from = "Vec<[u64; 2]>")]
pub struct EigenPacketList {
    packets: BTreeMap<u64, u64>,
    total_dim: u64,
}

impl From<EigenPacketList> for Vec<[u64; 2]> {
    fn from(l: EigenPacketList) -> Self {
        l.packets().map(|(a, m)| [a, m]).collect()
    }
}

impl TryFrom<Vec<[u64; 2]>> for EigenPacketList {
    type Error = Error;

    fn try_from(v: Vec<[u64; 2]>) -> Result<Self> {
        let dim = v
            .iter()
            .map(|&[a, m]| if a == 0 { 0 } else { euler_phi(a) * m })
            .sum();
        Self::new(v.into_iter().map(|[a, m]| (a, m)), dim)
    }
}

impl EigenPacketList {
    /// Builds a list of the given total dimension, merging repeated orders.
    pub fn new(packets: impl IntoIterator<Item = (u64, u64)>, total_dim: u64) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (a, m) in packets {
            if a == 0 {
                return Err(Error::InvalidPacketList("order 0".into()));
            }
            if m == 0 {
                return Err(Error::InvalidPacketList(format!("zero multiplicity for order {a}")));
            }
            *map.entry(a).or_insert(0) += m;
        }
        let dim: u64 = map.iter().map(|(&a, &m)| euler_phi(a) * m).sum();
        if dim != total_dim {
            return Err(Error::InvalidPacketList(format!(
                "packets span dimension {dim}, expected {total_dim}"
            )));
        }
        Ok(Self { packets: map, total_dim })
    }

    /// A list on the 22-dimensional `H^2` of a K3 surface.
    pub fn k3(packets: impl IntoIterator<Item = (u64, u64)>) -> Result<Self> {
        Self::new(packets, K3_B2)
    }

    /// Parses `order:multiplicity` pairs separated by commas, e.g. `1:1,2:1,50:1`.
    pub fn parse(text: &str, total_dim: u64) -> Result<Self> {
        let mut pairs = Vec::new();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (a, m) = item
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected order:multiplicity, got `{item}`")))?;
            let a = a.trim().parse::<u64>().map_err(|e| Error::Parse(format!("`{a}`: {e}")))?;
            let m = m.trim().parse::<u64>().map_err(|e| Error::Parse(format!("`{m}`: {e}")))?;
            pairs.push((a, m));
        }
        if pairs.is_empty() {
            return Err(Error::Parse("empty eigenvalue list".into()));
        }
        Self::new(pairs, total_dim)
    }

    pub fn packets(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.packets.iter().map(|(&a, &m)| (a, m))
    }

    pub fn multiplicity(&self, order: u64) -> u64 {
        self.packets.get(&order).copied().unwrap_or(0)
    }

    pub fn total_dim(&self) -> u64 {
        self.total_dim
    }

    /// Eigenvalue list of the `k`-th power: a primitive `a`-th root raised to
    /// the `k` becomes a primitive `a / gcd(a, k)`-th root.
    pub fn power(&self, k: u64) -> Self {
        assert!(k >= 1);
        let mut out: BTreeMap<u64, u64> = BTreeMap::new();
        for (a, m) in self.packets() {
            let image = a / gcd(a, k);
            let (phi_a, phi_img) = (euler_phi(a), euler_phi(image));
            assert!(
                (m * phi_a) % phi_img == 0,
                "packet ({a},{m}) does not map onto whole packets of order {image}"
            );
            *out.entry(image).or_insert(0) += m * phi_a / phi_img;
        }
        let res = Self { packets: out, total_dim: self.total_dim };
        debug_assert_eq!(
            res.packets().map(|(a, m)| euler_phi(a) * m).sum::<u64>(),
            self.total_dim
        );
        res
    }

    pub fn trace(&self) -> i64 {
        self.packets().map(|(a, m)| m as i64 * primitive_root_sum(a)).sum()
    }

    /// Characteristic polynomial, `Π Φ_a^m`.
    pub fn char_poly(&self) -> IntPolynomial {
        self.packets()
            .fold(IntPolynomial::one(), |acc, (a, m)| acc.mul(&cyclotomic_polynomial(a).pow(m)))
    }
}

impl fmt::Display for EigenPacketList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.packets().map(|(a, m)| format!("{a}:{m}")).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl fmt::Debug for EigenPacketList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub fn power_list(list: &EigenPacketList, k: u64) -> EigenPacketList {
    list.power(k)
}

pub fn trace_h2(list: &EigenPacketList) -> i64 {
    list.trace()
}

/// Lefschetz number on a K3 surface: `H^0` and `H^4` each contribute 1 and
/// the odd cohomology vanishes.
pub fn euler_k3(list: &EigenPacketList) -> i64 {
    2 + list.trace()
}

pub fn char_poly(list: &EigenPacketList) -> IntPolynomial {
    list.char_poly()
}

/// Trace of the `k`-th power computed in `Z[x]/(Φ_a)` for every packet.
///
/// The power sum `Σ_{gcd(j,a)=1} x^{kj}` is Galois-invariant, so after
/// reduction it must be a constant; that constant is the trace. This route
/// never touches the Möbius formula used by [`trace_h2`].
pub fn brute_trace(list: &EigenPacketList, k: u64) -> i64 {
    let mut total = 0i64;
    for (a, m) in list.packets() {
        let phi = cyclotomic_polynomial(a);
        let mut sum = IntPolynomial::zero();
        for j in (1..=a).filter(|&j| gcd(j, a) == 1) {
            // x^a = 1 modulo Φ_a
            let e = ((k % a) * j) % a;
            sum = sum.add(&IntPolynomial::monomial(1, e as usize));
        }
        let reduced = sum.rem_monic(&phi);
        assert!(
            reduced.degree().unwrap_or(0) == 0,
            "power sum for order {a} did not reduce to a constant: {reduced}"
        );
        total += m as i64 * reduced.coeffs().first().copied().unwrap_or(0);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn realized() -> EigenPacketList {
        EigenPacketList::k3([(1, 1), (2, 1), (50, 1)]).unwrap()
    }

    fn excluded() -> EigenPacketList {
        EigenPacketList::k3([(1, 2), (50, 1)]).unwrap()
    }

    #[test]
    fn totient_values() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(50), 20);
        assert_eq!(euler_phi(10), 4);
        assert_eq!(euler_phi(25), 20);
    }

    #[test]
    fn primitive_sums() {
        assert_eq!(primitive_root_sum(50), 0);
        assert_eq!(primitive_root_sum(10), 1);
        assert_eq!(primitive_root_sum(5), -1);
        assert_eq!(primitive_root_sum(1), 1);
        assert_eq!(primitive_root_sum(2), -1);
        assert_eq!(primitive_root_sum(25), 0);
    }

    #[test]
    fn power_examples() {
        let l = realized();
        assert_eq!(l.power(5), EigenPacketList::k3([(1, 1), (2, 1), (10, 5)]).unwrap());
        assert_eq!(l.power(10), EigenPacketList::k3([(1, 2), (5, 5)]).unwrap());
        assert_eq!(excluded().power(25), EigenPacketList::k3([(1, 2), (2, 20)]).unwrap());
        assert_eq!(l.power(1), l);
    }

    #[test]
    fn traces_and_euler_numbers() {
        assert_eq!(trace_h2(&EigenPacketList::k3([(1, 2), (2, 20)]).unwrap()), -18);
        assert_eq!(trace_h2(&realized()), 0);
        assert_eq!(trace_h2(&EigenPacketList::k3([(1, 22)]).unwrap()), 22);
        assert_eq!(euler_k3(&EigenPacketList::k3([(1, 22)]).unwrap()), 24);

        assert_eq!(euler_k3(&realized().power(25)), -18);
        assert_eq!(euler_k3(&excluded().power(25)), -16);
        assert_eq!(euler_k3(&excluded().power(5)), 9);
        assert_eq!(euler_k3(&realized().power(10)), -1);
    }

    #[test]
    fn cyclotomic_small_orders() {
        assert_eq!(cyclotomic_polynomial(1).coeffs(), &[-1, 1]);
        assert_eq!(cyclotomic_polynomial(2).coeffs(), &[1, 1]);
        assert_eq!(cyclotomic_polynomial(5).coeffs(), &[1, 1, 1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(10).coeffs(), &[1, -1, 1, -1, 1]);
        // Φ_25(x) = Φ_5(x^5), Φ_50(x) = Φ_25(-x)
        let mut c25 = vec![0i64; 21];
        let mut c50 = vec![0i64; 21];
        for i in 0..5 {
            c25[5 * i] = 1;
            c50[5 * i] = if i % 2 == 0 { 1 } else { -1 };
        }
        assert_eq!(cyclotomic_polynomial(25).coeffs(), c25.as_slice());
        assert_eq!(cyclotomic_polynomial(50).coeffs(), c50.as_slice());
        // a coefficient outside {-1, 0, 1}
        assert!(cyclotomic_polynomial(105).coeffs().contains(&-2));
    }

    #[test]
    fn char_poly_examples() {
        let x_minus_1 = IntPolynomial::new(vec![-1, 1]);
        let x_plus_1 = IntPolynomial::new(vec![1, 1]);
        assert_eq!(char_poly(&EigenPacketList::k3([(1, 22)]).unwrap()), x_minus_1.pow(22));
        assert_eq!(char_poly(&EigenPacketList::k3([(2, 22)]).unwrap()), x_plus_1.pow(22));
        let cp = char_poly(&realized());
        assert_eq!(cp.degree(), Some(22));
        assert_eq!(cp, x_minus_1.mul(&x_plus_1).mul(&cyclotomic_polynomial(50)));
        assert_eq!(cp.eval(1), 0);
        assert_eq!(cp.eval(-1), 0);
    }

    #[test]
    fn brute_trace_examples() {
        assert_eq!(brute_trace(&realized(), 5), 5);
        assert_eq!(brute_trace(&excluded(), 25), -18);
        let id = EigenPacketList::k3([(1, 22)]).unwrap();
        for k in 1..60 {
            assert_eq!(brute_trace(&id, k), 22);
        }
    }

    #[test]
    fn rejects_bad_lists() {
        assert!(EigenPacketList::k3([(50, 2)]).is_err());
        assert!(EigenPacketList::k3([(1, 0), (1, 22)]).is_err());
        assert!(EigenPacketList::k3([(0, 1)]).is_err());
        // a lone primitive 50th root cannot be written down at all
        assert!(EigenPacketList::new([(50, 1)], 1).is_err());
    }

    #[test]
    fn merges_repeated_orders() {
        let l = EigenPacketList::k3([(1, 1), (2, 1), (1, 20)]).unwrap();
        assert_eq!(l.multiplicity(1), 21);
        assert_eq!(l.packets().count(), 2);
    }

    #[test]
    fn parse_and_display() {
        let l = EigenPacketList::parse("1:1, 2:1,50:1", 22).unwrap();
        assert_eq!(l, realized());
        assert_eq!(l.to_string(), "[1:1, 2:1, 50:1]");
        assert!(EigenPacketList::parse("1:1,2", 22).is_err());
        assert!(EigenPacketList::parse("1:21", 22).is_err());
        assert!(EigenPacketList::parse("x:1", 22).is_err());
    }

    #[test]
    fn serializes_as_pairs() {
        let json = serde_json::to_string(&realized()).unwrap();
        assert_eq!(json, "[[1,1],[2,1],[50,1]]");
        let back: EigenPacketList = serde_json::from_str(&json).unwrap();
        assert_eq!(back, realized());
    }

    #[test]
    fn polynomial_display() {
        assert_eq!(cyclotomic_polynomial(10).to_string(), "x^4-x^3+x^2-x+1");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }
}
