use std::sync::Arc;

use smallvec::SmallVec;

use super::{is_prime, ExactScalar, Field, FieldDescriptor, PrimeField, Ring};
use crate::error::{Error, Result};

type Coeffs = SmallVec<[u64; 8]>;

/// GF(p^k) as GF(p)[t]/(modulus). Elements are packed base-p integers
/// `c_0 + c_1 p + ... + c_{k-1} p^{k-1}` for the residue `c_0 + c_1 t + ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionField {
    base: PrimeField,
    k: usize,
    /// Monic modulus, ascending coefficients, length k + 1.
    modulus: Arc<[u64]>,
    order: u64,
}

impl ExtensionField {
    /// Build GF(p^k) with an explicit monic modulus (ascending coefficients).
    pub fn new(p: u64, k: usize, modulus: &[u64]) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k < 2 {
            return Err(Error::UnsupportedField(format!("extension degree {k} must be at least 2")));
        }
        let order = checked_order(p, k)?;
        if modulus.len() != k + 1 || modulus[k] != 1 || modulus.iter().any(|&c| c >= p) {
            return Err(Error::ReducibleModulus(format!("{modulus:?} is not a monic degree-{k} polynomial mod {p}")));
        }
        if !is_irreducible(modulus, p) {
            return Err(Error::ReducibleModulus(format_poly(modulus)));
        }
        Ok(ExtensionField { base: PrimeField::new_unchecked(p), k, modulus: modulus.into(), order })
    }

    /// GF(p^k) with the default modulus.
    pub fn with_default_modulus(p: u64, k: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        checked_order(p, k)?;
        let modulus = default_modulus(p, k);
        Self::new(p, k, &modulus)
    }

    pub fn prime(&self) -> u64 {
        self.base.modulus()
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// The generator `t`.
    pub fn generator(&self) -> u64 {
        self.encode(&[0, 1])
    }

    fn decode(&self, mut a: u64) -> Coeffs {
        let p = self.prime();
        let mut out = Coeffs::with_capacity(self.k);
        for _ in 0..self.k {
            out.push(a % p);
            a /= p;
        }
        out
    }

    fn encode(&self, coeffs: &[u64]) -> u64 {
        let p = self.prime();
        coeffs.iter().rev().fold(0u64, |acc, &c| acc * p + c)
    }
}

fn checked_order(p: u64, k: usize) -> Result<u64> {
    let mut q: u64 = 1;
    for _ in 0..k {
        q = q
            .checked_mul(p)
            .filter(|&q| q <= 1 << 61)
            .ok_or_else(|| Error::UnsupportedField(format!("GF({p}^{k}) exceeds 2^61 elements")))?;
    }
    Ok(q)
}

/// Fixed moduli for the small fields used most, otherwise the first
/// irreducible monic polynomial when coefficient vectors are read as base-p
/// numbers with the top non-leading coefficient most significant.
pub(crate) fn default_modulus(p: u64, k: usize) -> Vec<u64> {
    match (p, k) {
        (2, 2) => return vec![1, 1, 1],
        (2, 3) => return vec![1, 1, 0, 1],
        (3, 2) => return vec![2, 2, 1],
        _ => {}
    }
    let mut tail = vec![0u64; k];
    loop {
        let mut candidate = tail.clone();
        candidate.push(1);
        if is_irreducible(&candidate, p) {
            return candidate;
        }
        // increment little-endian base-p counter over c_0..c_{k-1}
        let mut i = 0;
        loop {
            tail[i] += 1;
            if tail[i] < p {
                break;
            }
            tail[i] = 0;
            i += 1;
            assert!(i < k, "an irreducible polynomial of every degree exists");
        }
    }
}

fn format_poly(c: &[u64]) -> String {
    let mut terms = Vec::new();
    for (i, &x) in c.iter().enumerate().rev() {
        if x == 0 {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{i}"),
        };
        terms.push(match (x, i) {
            (_, 0) => x.to_string(),
            (1, _) => mono,
            _ => format!("{x}*{mono}"),
        });
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

// Dense univariate helpers over GF(p), ascending coefficients, trimmed.

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_rem(a: &[u64], m: &[u64], f: &PrimeField) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let dm = m.len() - 1;
    let lead_inv = f.inv(&m[dm]).expect("nonzero leading coefficient");
    while r.len() > dm {
        let d = r.len() - 1;
        let c = f.mul(&r[d], &lead_inv);
        for j in 0..=dm {
            let t = f.mul(&c, &m[j]);
            r[d - dm + j] = f.sub(&r[d - dm + j], &t);
        }
        trim(&mut r);
    }
    r
}

fn poly_mulmod(a: &[u64], b: &[u64], m: &[u64], f: &PrimeField) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            f.mul_add_assign(&mut prod[i + j], x, y);
        }
    }
    poly_rem(&prod, m, f)
}

fn poly_gcd(a: &[u64], b: &[u64], f: &PrimeField) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = poly_rem(&a, &b, f);
        a = b;
        b = r;
    }
    a
}

/// `x^(p^i) mod m` by repeated p-th powering.
fn frobenius_iterates(m: &[u64], p: u64, count: usize, f: &PrimeField) -> Vec<Vec<u64>> {
    let mut out = Vec::with_capacity(count);
    let mut cur = poly_rem(&[0, 1], m, f);
    for _ in 0..count {
        // cur <- cur^p mod m
        let mut acc = vec![1u64];
        let mut base = cur.clone();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = poly_mulmod(&acc, &base, m, f);
            }
            e >>= 1;
            if e > 0 {
                base = poly_mulmod(&base, &base, m, f);
            }
        }
        cur = acc;
        out.push(cur.clone());
    }
    out
}

/// Irreducibility of a monic polynomial of degree k over GF(p):
/// gcd(X^{p^i} - X, f) = 1 for 1 <= i < k and X^{p^k} = X mod f.
pub(crate) fn is_irreducible(modulus: &[u64], p: u64) -> bool {
    let f = PrimeField::new_unchecked(p);
    let k = modulus.len() - 1;
    if k == 0 {
        return false;
    }
    if k == 1 {
        return true;
    }
    let iterates = frobenius_iterates(modulus, p, k, &f);
    for (idx, xp) in iterates.iter().enumerate() {
        let i = idx + 1;
        let mut diff = xp.clone();
        diff.resize(diff.len().max(2), 0);
        diff[1] = f.sub(&diff[1], &1);
        trim(&mut diff);
        if i < k {
            let g = poly_gcd(modulus, &diff, &f);
            if g.len() != 1 {
                return false;
            }
        } else if !diff.is_empty() {
            return false;
        }
    }
    true
}

impl Ring for ExtensionField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let (x, y) = (self.decode(*a), self.decode(*b));
        let s: Coeffs = x.iter().zip(&y).map(|(u, v)| self.base.add(u, v)).collect();
        self.encode(&s)
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        let (x, y) = (self.decode(*a), self.decode(*b));
        let s: Coeffs = x.iter().zip(&y).map(|(u, v)| self.base.sub(u, v)).collect();
        self.encode(&s)
    }
    fn neg(&self, a: &u64) -> u64 {
        let s: Coeffs = self.decode(*a).iter().map(|u| self.base.neg(u)).collect();
        self.encode(&s)
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        if *a == 0 || *b == 0 {
            return 0;
        }
        let (x, y) = (self.decode(*a), self.decode(*b));
        let k = self.k;
        let mut prod: Coeffs = SmallVec::from_elem(0, 2 * k - 1);
        for i in 0..k {
            if x[i] == 0 {
                continue;
            }
            for j in 0..k {
                self.base.mul_add_assign(&mut prod[i + j], &x[i], &y[j]);
            }
        }
        for d in (k..2 * k - 1).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            for j in 0..k {
                let t = self.base.mul(&c, &self.modulus[j]);
                prod[d - k + j] = self.base.sub(&prod[d - k + j], &t);
            }
            prod[d] = 0;
        }
        self.encode(&prod[..k])
    }
    fn from_i64(&self, n: i64) -> u64 {
        self.base.from_i64(n)
    }
}

impl Field for ExtensionField {
    fn inv(&self, a: &u64) -> Result<u64> {
        if *a == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.order - 2))
    }
    fn characteristic(&self) -> u64 {
        self.prime()
    }
    fn order(&self) -> Option<u64> {
        Some(self.order)
    }
    fn element(&self, index: u64) -> u64 {
        index % self.order
    }
    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Extension { p: self.prime(), k: self.k, modulus: self.modulus.to_vec() }
    }
    fn to_scalar(&self, a: &u64) -> ExactScalar {
        ExactScalar::Extension(self.decode(*a).to_vec())
    }
    fn from_scalar(&self, s: &ExactScalar) -> Result<u64> {
        match s {
            ExactScalar::Extension(c) if c.len() == self.k => {
                Ok(self.encode(&c.iter().map(|x| x % self.prime()).collect::<Coeffs>()))
            }
            ExactScalar::Extension(_) => Err(Error::FieldMismatch),
            ExactScalar::Residue(r) => Ok(r % self.prime()),
            ExactScalar::Rational(q) => Ok(super::rational::rational_mod_p(q, self.prime())?),
        }
    }
    fn format(&self, a: &u64) -> String {
        format_poly(&self.decode(*a))
    }
    fn parse(&self, text: &str) -> Result<u64> {
        // sums of terms c, t, c*t, t^e, c*t^e
        let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(Error::Syntax { pos: 0, msg: "empty scalar".into() });
        }
        let mut acc = 0u64;
        let mut start = 0;
        let bytes = cleaned.as_bytes();
        let mut i = 0;
        let mut pieces = Vec::new();
        while i <= bytes.len() {
            if i == bytes.len() || ((bytes[i] == b'+' || bytes[i] == b'-') && i > start) {
                pieces.push(&cleaned[start..i]);
                start = i;
            }
            i += 1;
        }
        for piece in pieces {
            let (neg, body) = match piece.as_bytes()[0] {
                b'-' => (true, &piece[1..]),
                b'+' => (false, &piece[1..]),
                _ => (false, piece),
            };
            let mut term = 1u64;
            for factor in body.split('*') {
                let value = if let Some(rest) = factor.strip_prefix('t') {
                    let e: u64 = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .and_then(|e| e.parse().ok())
                            .ok_or_else(|| Error::Syntax { pos: 0, msg: format!("bad exponent in `{factor}`") })?
                    };
                    self.pow(&self.generator(), e)
                } else {
                    self.base.parse(factor)?
                };
                term = self.mul(&term, &value);
            }
            if neg {
                term = self.neg(&term);
            }
            acc = self.add(&acc, &term);
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf4_generator_squares() {
        let f = ExtensionField::new(2, 2, &[1, 1, 1]).unwrap();
        let t = f.generator();
        assert_eq!(f.format(&f.mul(&t, &t)), "t+1");
        assert_eq!(f.format(&f.inv(&t).unwrap()), "t+1");
        assert_eq!(f.parse("t+1").unwrap(), f.mul(&t, &t));
    }

    #[test]
    fn reducible_modulus_rejected() {
        // t^2 + 1 = (t + 1)^2 over GF(2)
        assert!(matches!(ExtensionField::new(2, 2, &[1, 0, 1]), Err(Error::ReducibleModulus(_))));
        // t^2 + 1 is irreducible over GF(3)
        assert!(ExtensionField::new(3, 2, &[1, 0, 1]).is_ok());
    }

    #[test]
    fn default_moduli_are_irreducible() {
        for (p, k) in [(2, 2), (2, 3), (3, 2), (2, 4), (5, 3), (7, 2), (2, 8)] {
            let m = default_modulus(p, k);
            assert!(is_irreducible(&m, p), "GF({p}^{k})");
        }
        assert_eq!(default_modulus(2, 4), vec![1, 1, 0, 0, 1]);
    }

    #[test]
    fn irreducible_counts_match_necklace_formula() {
        // number of monic irreducibles of degree 3 over GF(2) is 2, over GF(3) is 8
        for (p, k, expected) in [(2u64, 3usize, 2usize), (3, 3, 8), (2, 4, 3)] {
            let mut count = 0;
            let total = p.pow(k as u32);
            for idx in 0..total {
                let mut c = Vec::new();
                let mut x = idx;
                for _ in 0..k {
                    c.push(x % p);
                    x /= p;
                }
                c.push(1);
                if is_irreducible(&c, p) {
                    count += 1;
                }
            }
            assert_eq!(count, expected, "GF({p})[t] degree {k}");
        }
    }

    #[test]
    fn every_nonzero_element_invertible() {
        let f = ExtensionField::with_default_modulus(3, 2).unwrap();
        for a in 1..9 {
            assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
        }
    }
}
