//! Multivariate polynomials over an exact field, stored sparsely in
//! graded reverse lexicographic order, plus the text front end for algebra
//! presentations.

mod parse;
mod presentation;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use smallvec::SmallVec;

use crate::arith::{Field, Ring};
use crate::error::{Error, Result};

pub use parse::parse_poly;
pub use presentation::{parse_presentation, AlgebraPresentation};

/// Exponent vector with cached total degree. `Ord` is grevlex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u16; 8]>,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, nvars), degree: 0 }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m.degree = 1;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        Monomial { exps: exps.into(), degree: exps.iter().map(|&e| e as u32).sum() }
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial { exps, degree: self.degree + other.degree }
    }

    /// `self * x_i`
    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut m = self.clone();
        m.exps[i] += 1;
        m.degree += 1;
        m
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, if exact.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect();
        Some(Monomial { exps, degree: other.degree - self.degree })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::from_exponents(&self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect::<Vec<_>>())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// The variable index if this is a pure power `x_i^e`, e >= 1.
    pub fn pure_power_of(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    pub fn display_with(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".into();
        }
        let parts: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { names[i].clone() } else { format!("{}^{}", names[i], e) })
            .collect();
        parts.join("*")
    }

    /// All monomials in `nvars` variables of total degree `d`, ascending grevlex.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        fn rec(i: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
            if i + 1 == cur.len() {
                cur[i] = left as u16;
                out.push(Monomial::from_exponents(cur));
                return;
            }
            for e in 0..=left {
                cur[i] = e as u16;
                rec(i + 1, left - e, cur, out);
            }
            cur[i] = 0;
        }
        if nvars == 0 {
            return if d == 0 { vec![Monomial::one(0)] } else { Vec::new() };
        }
        let mut out = Vec::new();
        rec(0, d, &mut vec![0; nvars], &mut out);
        out.sort();
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            for (a, b) in self.exps.iter().zip(&other.exps).rev() {
                if a != b {
                    // smaller exponent in the last differing variable is larger
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

#[derive(Debug)]
struct RingInfo<F: Field> {
    field: F,
    vars: Vec<String>,
}

/// The polynomial ring `F[vars]`. Cheap to clone.
#[derive(Debug)]
pub struct PolyRing<F: Field> {
    info: Arc<RingInfo<F>>,
}

impl<F: Field> Clone for PolyRing<F> {
    fn clone(&self) -> Self {
        PolyRing { info: Arc::clone(&self.info) }
    }
}

impl<F: Field> PartialEq for PolyRing<F> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.info, &other.info)
            || (self.info.vars == other.info.vars && self.info.field.descriptor() == other.info.field.descriptor())
    }
}

impl<F: Field> Eq for PolyRing<F> {}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, vars: Vec<String>) -> Self {
        PolyRing { info: Arc::new(RingInfo { field, vars }) }
    }

    pub fn field(&self) -> &F {
        &self.info.field
    }

    pub fn vars(&self) -> &[String] {
        &self.info.vars
    }

    pub fn nvars(&self) -> usize {
        self.info.vars.len()
    }

    pub fn zero_poly(&self) -> MultiPoly<F> {
        MultiPoly { ring: self.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(&self, c: F::Elem) -> MultiPoly<F> {
        self.term(c, Monomial::one(self.nvars()))
    }

    pub fn term(&self, c: F::Elem, m: Monomial) -> MultiPoly<F> {
        let mut terms = BTreeMap::new();
        if !self.field().is_zero(&c) {
            terms.insert(m, c);
        }
        MultiPoly { ring: self.clone(), terms }
    }

    pub fn variable(&self, i: usize) -> MultiPoly<F> {
        self.term(self.field().one(), Monomial::var(self.nvars(), i))
    }

    pub fn variable_by_name(&self, name: &str) -> Result<MultiPoly<F>> {
        let i = self.var_index(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(self.variable(i))
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.info.vars.iter().position(|v| v == name)
    }

    pub fn from_terms(&self, terms: impl IntoIterator<Item = (Monomial, F::Elem)>) -> MultiPoly<F> {
        let mut p = self.zero_poly();
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }
}

/// A polynomial with nonzero coefficients keyed by grevlex-ordered monomials.
#[derive(Debug, Clone)]
pub struct MultiPoly<F: Field> {
    ring: PolyRing<F>,
    terms: BTreeMap<Monomial, F::Elem>,
}

impl<F: Field> PartialEq for MultiPoly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl<F: Field> Eq for MultiPoly<F> {}

impl<F: Field> Hash for MultiPoly<F> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        for (m, c) in &self.terms {
            m.hash(state);
            c.hash(state);
        }
    }
}

impl<F: Field> MultiPoly<F> {
    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    fn field(&self) -> &F {
        self.ring.field()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending grevlex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &F::Elem)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> F::Elem {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field().zero())
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &F::Elem)> {
        self.terms.iter().next_back()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// True when every term has the same total degree (the zero polynomial
    /// counts as homogeneous).
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: &F::Elem) {
        let field = self.ring.info.field.clone();
        if field.is_zero(c) {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                field.add_assign(existing, c);
                if field.is_zero(existing) {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    /// `self -= c * m * g`, in place.
    pub(crate) fn sub_scaled_shift(&mut self, c: &F::Elem, m: &Monomial, g: &MultiPoly<F>) {
        let field = self.ring.info.field.clone();
        for (x, a) in &g.terms {
            self.add_term(x.mul(m), &field.neg(&field.mul(a, c)));
        }
    }

    pub(crate) fn pop_leading(&mut self) -> Option<(Monomial, F::Elem)> {
        self.terms.pop_last()
    }

    fn check_ring(&self, other: &MultiPoly<F>) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &MultiPoly<F>) -> Result<MultiPoly<F>> {
        self.check_ring(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn sub(&self, other: &MultiPoly<F>) -> Result<MultiPoly<F>> {
        self.check_ring(other)?;
        Ok(self.add_unchecked(&other.neg()))
    }

    pub fn mul(&self, other: &MultiPoly<F>) -> Result<MultiPoly<F>> {
        self.check_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn add_unchecked(&self, other: &MultiPoly<F>) -> MultiPoly<F> {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub(crate) fn mul_unchecked(&self, other: &MultiPoly<F>) -> MultiPoly<F> {
        let field = self.field();
        let mut acc: BTreeMap<Monomial, F::Elem> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                let entry = acc.entry(m).or_insert_with(|| field.zero());
                field.mul_add_assign(entry, c1, c2);
            }
        }
        acc.retain(|_, c| !field.is_zero(c));
        MultiPoly { ring: self.ring.clone(), terms: acc }
    }

    pub fn neg(&self) -> MultiPoly<F> {
        let field = self.field();
        MultiPoly { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), field.neg(c))).collect() }
    }

    pub fn scale(&self, c: &F::Elem) -> MultiPoly<F> {
        let field = self.field();
        if field.is_zero(c) {
            return self.ring.zero_poly();
        }
        MultiPoly { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, x)| (m.clone(), field.mul(x, c))).collect() }
    }

    /// Multiply by a single term `c * m`.
    pub fn mul_term(&self, c: &F::Elem, m: &Monomial) -> MultiPoly<F> {
        let field = self.field();
        if field.is_zero(c) {
            return self.ring.zero_poly();
        }
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(x, a)| (x.mul(m), field.mul(a, c))).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly<F> {
        let mut acc = self.ring.constant(self.field().one());
        for _ in 0..e {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// Divide through by the leading coefficient.
    pub fn make_monic(&self) -> MultiPoly<F> {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = self.field().inv(c).expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }

    /// Image under the ring morphism sending each variable to a polynomial
    /// of a common target ring.
    pub fn substitute(&self, assignment: &BTreeMap<String, MultiPoly<F>>) -> Result<MultiPoly<F>> {
        let vars = self.ring.vars();
        let mut images = Vec::with_capacity(vars.len());
        let mut used = vec![false; vars.len()];
        for m in self.terms.keys() {
            for (i, &e) in m.exponents().iter().enumerate() {
                used[i] |= e > 0;
            }
        }
        let mut target: Option<PolyRing<F>> = None;
        for (i, v) in vars.iter().enumerate() {
            match assignment.get(v) {
                Some(p) => {
                    match &target {
                        Some(t) if *t != p.ring => return Err(Error::RingMismatch),
                        _ => target = Some(p.ring.clone()),
                    }
                    images.push(Some(p));
                }
                None if used[i] => return Err(Error::MissingAssignment(v.clone())),
                None => images.push(None),
            }
        }
        let target = match target {
            Some(t) => t,
            // only constants can reach here with an empty assignment
            None => return Ok(self.clone()),
        };
        let field = target.field().clone();
        let mut powers: Vec<Vec<MultiPoly<F>>> = images.iter().map(|_| Vec::new()).collect();
        let mut out = target.zero_poly();
        for (m, c) in &self.terms {
            let mut term = target.constant(c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let img = images[i].expect("used variables are assigned");
                let cache = &mut powers[i];
                if cache.is_empty() {
                    cache.push(target.constant(field.one()));
                }
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap().mul_unchecked(img);
                    cache.push(next);
                }
                term = term.mul_unchecked(&cache[e as usize]);
            }
            out = out.add_unchecked(&term);
        }
        Ok(out)
    }

    /// Evaluate at a point of the coefficient field.
    pub fn evaluate(&self, point: &[F::Elem]) -> Result<F::Elem> {
        if point.len() != self.ring.nvars() {
            return Err(Error::LengthMismatch(format!(
                "point has {} coordinates, ring has {} variables",
                point.len(),
                self.ring.nvars()
            )));
        }
        let field = self.field();
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t = field.mul(&t, &field.pow(x, e as u64));
                }
            }
            field.add_assign(&mut acc, &t);
        }
        Ok(acc)
    }

    /// Re-express in another ring with the same variables, mapping each
    /// coefficient.
    pub fn map_coefficients<G: Field>(
        &self,
        target: &PolyRing<G>,
        mut f: impl FnMut(&F::Elem) -> Result<G::Elem>,
    ) -> Result<MultiPoly<G>> {
        if target.nvars() != self.ring.nvars() {
            return Err(Error::RingMismatch);
        }
        let mut out = target.zero_poly();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &f(c)?);
        }
        Ok(out)
    }
}

impl<F: Field> fmt::Display for MultiPoly<F> {
    /// Descending grevlex; reparses to the same polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.field();
        let is_ext = matches!(field.descriptor(), crate::arith::FieldDescriptor::Extension { .. });
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let mut coeff = field.format(c);
            let mut negative = false;
            if !is_ext {
                if let Some(stripped) = coeff.strip_prefix('-') {
                    negative = true;
                    coeff = stripped.to_string();
                }
            } else if coeff.contains('+') {
                coeff = format!("({coeff})");
            }
            let sep = match (first, negative) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            first = false;
            let mono = m.display_with(self.ring.vars());
            let body = if m.is_one() {
                coeff
            } else if coeff == "1" {
                mono
            } else {
                format!("{coeff}*{mono}")
            };
            write!(f, "{sep}{body}")?;
        }
        Ok(())
    }
}

impl<F: Field> Ring for PolyRing<F> {
    type Elem = MultiPoly<F>;

    fn zero(&self) -> MultiPoly<F> {
        self.zero_poly()
    }
    fn one(&self) -> MultiPoly<F> {
        self.constant(self.field().one())
    }
    fn is_zero(&self, a: &MultiPoly<F>) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &MultiPoly<F>, b: &MultiPoly<F>) -> MultiPoly<F> {
        a.add_unchecked(b)
    }
    fn sub(&self, a: &MultiPoly<F>, b: &MultiPoly<F>) -> MultiPoly<F> {
        a.add_unchecked(&b.neg())
    }
    fn neg(&self, a: &MultiPoly<F>) -> MultiPoly<F> {
        a.neg()
    }
    fn mul(&self, a: &MultiPoly<F>, b: &MultiPoly<F>) -> MultiPoly<F> {
        a.mul_unchecked(b)
    }
    fn from_i64(&self, n: i64) -> MultiPoly<F> {
        self.constant(self.field().from_i64(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{PrimeField, Rationals};

    fn qring(vars: &[&str]) -> PolyRing<Rationals> {
        PolyRing::new(Rationals, vars.iter().map(|s| s.to_string()).collect())
    }

    #[test]
    fn grevlex_order() {
        // x > y > z; x*z vs y^2: y^2 > x*z in grevlex
        let xz = Monomial::from_exponents(&[1, 0, 1]);
        let yy = Monomial::from_exponents(&[0, 2, 0]);
        let xx = Monomial::from_exponents(&[2, 0, 0]);
        assert!(yy > xz);
        assert!(xx > yy);
        assert!(Monomial::from_exponents(&[0, 0, 3]) > xx);
        assert!(Monomial::one(3) < Monomial::var(3, 2));
        assert!(Monomial::var(3, 2) < Monomial::var(3, 0));
    }

    #[test]
    fn difference_of_squares() {
        let r = qring(&["x", "y"]);
        let (x, y) = (r.variable(0), r.variable(1));
        let p = x.add(&y).unwrap().mul(&x.sub(&y).unwrap()).unwrap();
        assert_eq!(p.to_string(), "x^2 - y^2");
    }

    #[test]
    fn frobenius_in_characteristic_two() {
        let r = PolyRing::new(PrimeField::new(2).unwrap(), vec!["x".into(), "y".into()]);
        let s = r.variable(0).add(&r.variable(1)).unwrap();
        assert_eq!(s.mul(&s).unwrap().to_string(), "x^2 + y^2");
    }

    #[test]
    fn homogeneous_degrees_add() {
        let r = qring(&["x", "y"]);
        let a = r.variable(0).mul(&r.variable(1)).unwrap().add(&r.variable(0).pow(2)).unwrap();
        let b = r.variable(1).pow(3);
        let p = a.mul(&b).unwrap();
        assert!(a.is_homogeneous() && b.is_homogeneous() && p.is_homogeneous());
        assert_eq!(p.total_degree(), Some(5));
    }

    #[test]
    fn ring_mismatch() {
        let a = qring(&["x"]).variable(0);
        let b = qring(&["y"]).variable(0);
        assert_eq!(a.mul(&b), Err(Error::RingMismatch));
    }

    #[test]
    fn substitute_square_of_sum() {
        let src = qring(&["x"]);
        let dst = qring(&["u", "v"]);
        let mut asg = BTreeMap::new();
        asg.insert("x".to_string(), dst.variable(0).add(&dst.variable(1)).unwrap());
        let img = src.variable(0).pow(2).substitute(&asg).unwrap();
        assert_eq!(img.to_string(), "u^2 + 2*u*v + v^2");

        let c = src.constant(Rationals.from_i64(7));
        assert_eq!(c.substitute(&BTreeMap::new()).unwrap(), c);
        assert_eq!(src.variable(0).substitute(&BTreeMap::new()), Err(Error::MissingAssignment("x".into())));
    }

    #[test]
    fn all_of_degree_counts() {
        assert_eq!(Monomial::all_of_degree(4, 2).len(), 10);
        assert_eq!(Monomial::all_of_degree(6, 6).len(), 462);
        assert_eq!(Monomial::all_of_degree(0, 0).len(), 1);
    }
}
