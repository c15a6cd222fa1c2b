//! Sparse multivariate polynomials over a finite field, with per-variable weights.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::field::{Fe, Field};
use super::poly1::Poly1;
use crate::{Error, Result};

/// Exponent vector, one entry per variable.
pub type Exponents = Vec<u32>;

#[derive(Clone)]
pub struct SparsePoly {
    field: Field,
    vars: Arc<Vec<String>>,
    weights: Arc<Vec<u32>>,
    terms: BTreeMap<Exponents, Fe>,
}

/// Wire form: `[exponent vector, residue coefficients]` per term.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SerializedPoly {
    pub variables: Vec<String>,
    pub weights: Vec<u32>,
    pub terms: Vec<(Exponents, Vec<u64>)>,
}

impl PartialEq for SparsePoly {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other) && self.terms == other.terms
    }
}

impl Eq for SparsePoly {}

impl SparsePoly {
    pub fn zero(field: &Field, vars: &[&str], weights: &[u32]) -> Self {
        assert_eq!(vars.len(), weights.len(), "one weight per variable");
        assert!(weights.iter().all(|&w| w > 0), "weights must be positive");
        Self {
            field: field.clone(),
            vars: Arc::new(vars.iter().map(|s| s.to_string()).collect()),
            weights: Arc::new(weights.to_vec()),
            terms: BTreeMap::new(),
        }
    }

    /// Zero polynomial in the same ring as `self`.
    pub fn zero_like(&self) -> Self {
        Self {
            field: self.field.clone(),
            vars: self.vars.clone(),
            weights: self.weights.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant_like(&self, c: Fe) -> Self {
        self.monomial_like(c, vec![0; self.nvars()])
    }

    pub fn monomial_like(&self, c: Fe, exps: Exponents) -> Self {
        assert_eq!(exps.len(), self.nvars());
        let mut p = self.zero_like();
        if !self.field.is_zero(&c) {
            p.terms.insert(exps, c);
        }
        p
    }

    /// The `i`-th variable as a polynomial.
    pub fn var_like(&self, i: usize) -> Self {
        let mut e = vec![0; self.nvars()];
        e[i] = 1;
        self.monomial_like(self.field.one(), e)
    }

    /// Parses sums of terms like `w^2 - x^6 - 3*x*y^5`; coefficients are
    /// integers reduced into the prime field.
    pub fn parse(src: &str, field: &Field, vars: &[&str], weights: &[u32]) -> Result<Self> {
        let zero = Self::zero(field, vars, weights);
        let mut out = zero.clone();
        let cleaned: String = src.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut chunks: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        for ch in cleaned.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() {
                chunks.push((neg, std::mem::take(&mut cur)));
                neg = ch == '-';
            } else if ch == '+' || ch == '-' {
                neg ^= ch == '-';
            } else {
                cur.push(ch);
            }
        }
        if cur.is_empty() {
            return Err(Error::Parse(format!("dangling sign in `{src}`")));
        }
        chunks.push((neg, cur));
        for (neg, chunk) in chunks {
            let mut coeff: i64 = 1;
            let mut exps = vec![0u32; vars.len()];
            for factor in chunk.split('*') {
                if factor.is_empty() {
                    return Err(Error::Parse(format!("empty factor in `{chunk}`")));
                }
                if let Ok(c) = factor.parse::<i64>() {
                    coeff = coeff
                        .checked_mul(c)
                        .ok_or_else(|| Error::Parse("coefficient overflow".into()))?;
                    continue;
                }
                let (name, e) = match factor.split_once('^') {
                    Some((n, e)) => {
                        (n, e.parse::<u32>().map_err(|err| Error::Parse(format!("`{e}`: {err}")))?)
                    }
                    None => (factor, 1),
                };
                let idx = vars
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))?;
                exps[idx] += e;
            }
            if neg {
                coeff = -coeff;
            }
            out = out.add(&zero.monomial_like(field.from_i64(coeff), exps));
        }
        Ok(out)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &Fe)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exps: &[u32]) -> Fe {
        self.terms.get(exps).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn same_ring(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.field, &other.field) || self.field == other.field)
            && self.vars == other.vars
            && self.weights == other.weights
    }

    fn assert_same_ring(&self, other: &Self) {
        assert!(self.same_ring(other), "polynomials live in different rings");
    }

    pub fn check_same_ring(&self, other: &Self) -> Result<()> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn insert_add(&mut self, exps: Exponents, c: Fe) {
        let f = &self.field;
        match self.terms.get_mut(&exps) {
            Some(existing) => {
                let s = f.add(existing, &c);
                if f.is_zero(&s) {
                    self.terms.remove(&exps);
                } else {
                    *existing = s;
                }
            }
            None => {
                if !f.is_zero(&c) {
                    self.terms.insert(exps, c);
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_ring(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_add(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.zero_like();
        out.terms = self.terms.iter().map(|(e, c)| (e.clone(), self.field.neg(c))).collect();
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Fe) -> Self {
        let mut out = self.zero_like();
        if self.field.is_zero(c) {
            return out;
        }
        out.terms = self.terms.iter().map(|(e, a)| (e.clone(), self.field.mul(a, c))).collect();
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_ring(other);
        let mut out = self.zero_like();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponents = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert_add(e, self.field.mul(c1, c2));
            }
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = self.constant_like(self.field.one());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn weighted_degree_of(&self, exps: &[u32]) -> u32 {
        exps.iter().zip(self.weights.iter()).map(|(e, w)| e * w).sum()
    }

    /// Weighted degree when every term has the same one.
    pub fn weighted_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| self.weighted_degree_of(e));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn is_weighted_homogeneous(&self) -> bool {
        self.is_zero() || self.weighted_degree().is_some()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    pub fn eval(&self, point: &[Fe]) -> Fe {
        assert_eq!(point.len(), self.nvars());
        let f = &self.field;
        let mut acc = f.zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t = f.mul(&t, &f.pow(x, k as u128));
                }
            }
            acc = f.add(&acc, &t);
        }
        acc
    }

    /// Substitutes every variable except `var` by the matching entry of
    /// `point`, leaving a univariate polynomial in `var`.
    pub fn to_univariate(&self, var: usize, point: &[Fe]) -> Poly1 {
        let f = &self.field;
        let deg = self.degree_in(var).unwrap_or(0) as usize;
        let mut c = vec![f.zero(); deg + 1];
        for (e, a) in &self.terms {
            let mut t = a.clone();
            for (i, (x, &k)) in point.iter().zip(e).enumerate() {
                if i != var && k > 0 {
                    t = f.mul(&t, &f.pow(x, k as u128));
                }
            }
            let slot = e[var] as usize;
            c[slot] = f.add(&c[slot], &t);
        }
        Poly1::new(c, f)
    }

    /// Formal partial derivative; exponents multiply coefficients mod p.
    pub fn partial_derivative(&self, var: usize) -> Self {
        let mut out = self.zero_like();
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut d = e.clone();
            d[var] -= 1;
            out.insert_add(d, self.field.scale(e[var] as u64, c));
        }
        out
    }

    /// Sets variable `var` to zero and removes it from the ring.
    pub fn drop_variable(&self, var: usize) -> Self {
        let vars: Vec<&str> = self
            .vars
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != var)
            .map(|(_, v)| v.as_str())
            .collect();
        let weights: Vec<u32> = self
            .weights
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != var)
            .map(|(_, &w)| w)
            .collect();
        let mut out = Self::zero(&self.field, &vars, &weights);
        for (e, c) in &self.terms {
            if e[var] == 0 {
                let mut d = e.clone();
                d.remove(var);
                out.terms.insert(d, c.clone());
            }
        }
        out
    }

    /// Moves a polynomial with prime-field coefficients into another field of
    /// the same characteristic.
    pub fn base_change(&self, target: &Field) -> Result<Self> {
        if self.field.p() != target.p() {
            return Err(Error::FieldMismatch);
        }
        let mut out = self.zero_like();
        out.field = target.clone();
        for (e, c) in &self.terms {
            if c.coeffs()[1..].iter().any(|&x| x != 0) {
                return Err(Error::FieldMismatch);
            }
            out.insert_add(e.clone(), target.from_u64(c.coeffs()[0]));
        }
        Ok(out)
    }

    pub fn to_serialized(&self) -> SerializedPoly {
        SerializedPoly {
            variables: self.vars.to_vec(),
            weights: self.weights.to_vec(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.coeffs().to_vec())).collect(),
        }
    }

    pub fn from_serialized(s: &SerializedPoly, field: &Field) -> Result<Self> {
        let vars: Vec<&str> = s.variables.iter().map(String::as_str).collect();
        if vars.len() != s.weights.len() {
            return Err(Error::Dimension("weights and variables differ in length".into()));
        }
        let mut out = Self::zero(field, &vars, &s.weights);
        for (e, c) in &s.terms {
            if e.len() != vars.len() {
                return Err(Error::Dimension("exponent vector length".into()));
            }
            out.insert_add(e.clone(), field.from_coeffs(c)?);
        }
        Ok(out)
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .zip(self.vars.iter())
                .filter(|(k, _)| **k > 0)
                .map(|(k, v)| if *k == 1 { v.clone() } else { format!("{v}^{k}") })
                .collect();
            let coeff = self.field.format(c);
            let coeff = if self.field.degree() > 1 && coeff.contains('+') {
                format!("({coeff})")
            } else {
                coeff
            };
            parts.push(match (mono.is_empty(), self.field.is_one(c)) {
                (true, _) => coeff,
                (false, true) => mono.join("*"),
                (false, false) => format!("{coeff}*{}", mono.join("*")),
            });
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
