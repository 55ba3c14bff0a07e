use std::fmt;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::extension::default_modulus;
use super::{ExtensionField, Field, PrimeField, Rationals, Ring};
use crate::error::{Error, Result};

/// Which exact field a computation runs over.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldDescriptor {
    Rationals,
    Prime(u64),
    /// GF(p^k); `modulus` is monic of degree k, ascending coefficients.
    Extension { p: u64, k: usize, modulus: Vec<u64> },
}

impl FieldDescriptor {
    /// GF(p^k) with the default modulus; k = 1 gives the prime field.
    pub fn galois(p: u64, k: usize) -> Result<Self> {
        if !super::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        match k {
            0 => Err(Error::UnsupportedField(format!("GF({p},0)"))),
            1 => Ok(FieldDescriptor::Prime(p)),
            _ => Ok(FieldDescriptor::Extension { p, k, modulus: default_modulus(p, k) }),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldDescriptor::Rationals => 0,
            FieldDescriptor::Prime(p) | FieldDescriptor::Extension { p, .. } => *p,
        }
    }

    pub fn is_finite(&self) -> bool {
        !matches!(self, FieldDescriptor::Rationals)
    }
}

impl fmt::Display for FieldDescriptor {
    /// Same spelling the presentation parser accepts.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rationals => write!(f, "Q"),
            FieldDescriptor::Prime(p) => write!(f, "F{p}"),
            FieldDescriptor::Extension { p, k, .. } => write!(f, "GF({p},{k})"),
        }
    }
}

/// A scalar of ℚ, GF(p) or GF(p^k). The owning field is known from context.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExactScalar {
    Rational(BigRational),
    Residue(u64),
    /// Coefficients of the residue in the extension generator, length k.
    Extension(Vec<u64>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Inner {
    Q(Rationals),
    P(PrimeField),
    E(ExtensionField),
}

/// A runtime-selected field operating on [`ExactScalar`] values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynField {
    inner: Inner,
}

/// Validate a descriptor and return a handle for it.
pub fn field_create(desc: &FieldDescriptor) -> Result<DynField> {
    let inner = match desc {
        FieldDescriptor::Rationals => Inner::Q(Rationals),
        FieldDescriptor::Prime(p) => Inner::P(PrimeField::new(*p)?),
        FieldDescriptor::Extension { p, k, modulus } => Inner::E(ExtensionField::new(*p, *k, modulus)?),
    };
    Ok(DynField { inner })
}

macro_rules! dispatch {
    ($self:expr, $f:ident => $body:expr) => {
        match &$self.inner {
            Inner::Q($f) => $body,
            Inner::P($f) => $body,
            Inner::E($f) => $body,
        }
    };
}

impl DynField {
    fn lift<F: Field>(f: &F, s: &ExactScalar) -> F::Elem {
        f.from_scalar(s).expect("scalar belongs to this field")
    }

    fn unary<F: Field>(f: &F, a: &ExactScalar, op: impl Fn(&F, &F::Elem) -> F::Elem) -> ExactScalar {
        f.to_scalar(&op(f, &Self::lift(f, a)))
    }

    fn binary<F: Field>(
        f: &F,
        a: &ExactScalar,
        b: &ExactScalar,
        op: impl Fn(&F, &F::Elem, &F::Elem) -> F::Elem,
    ) -> ExactScalar {
        f.to_scalar(&op(f, &Self::lift(f, a), &Self::lift(f, b)))
    }

    pub fn as_rationals(&self) -> Option<Rationals> {
        match &self.inner {
            Inner::Q(q) => Some(*q),
            _ => None,
        }
    }

    pub fn as_prime(&self) -> Option<PrimeField> {
        match &self.inner {
            Inner::P(p) => Some(*p),
            _ => None,
        }
    }

    pub fn as_extension(&self) -> Option<&ExtensionField> {
        match &self.inner {
            Inner::E(e) => Some(e),
            _ => None,
        }
    }
}

impl Ring for DynField {
    type Elem = ExactScalar;

    fn zero(&self) -> ExactScalar {
        dispatch!(self, f => f.to_scalar(&f.zero()))
    }
    fn one(&self) -> ExactScalar {
        dispatch!(self, f => f.to_scalar(&f.one()))
    }
    fn is_zero(&self, a: &ExactScalar) -> bool {
        dispatch!(self, f => f.is_zero(&Self::lift(f, a)))
    }
    fn add(&self, a: &ExactScalar, b: &ExactScalar) -> ExactScalar {
        dispatch!(self, f => Self::binary(f, a, b, |f, x, y| f.add(x, y)))
    }
    fn sub(&self, a: &ExactScalar, b: &ExactScalar) -> ExactScalar {
        dispatch!(self, f => Self::binary(f, a, b, |f, x, y| f.sub(x, y)))
    }
    fn neg(&self, a: &ExactScalar) -> ExactScalar {
        dispatch!(self, f => Self::unary(f, a, |f, x| f.neg(x)))
    }
    fn mul(&self, a: &ExactScalar, b: &ExactScalar) -> ExactScalar {
        dispatch!(self, f => Self::binary(f, a, b, |f, x, y| f.mul(x, y)))
    }
    fn from_i64(&self, n: i64) -> ExactScalar {
        dispatch!(self, f => f.to_scalar(&f.from_i64(n)))
    }
}

impl Field for DynField {
    fn inv(&self, a: &ExactScalar) -> Result<ExactScalar> {
        dispatch!(self, f => Ok(f.to_scalar(&f.inv(&Self::lift(f, a))?)))
    }
    fn characteristic(&self) -> u64 {
        dispatch!(self, f => f.characteristic())
    }
    fn order(&self) -> Option<u64> {
        dispatch!(self, f => f.order())
    }
    fn element(&self, index: u64) -> ExactScalar {
        dispatch!(self, f => f.to_scalar(&f.element(index)))
    }
    fn descriptor(&self) -> FieldDescriptor {
        dispatch!(self, f => f.descriptor())
    }
    fn to_scalar(&self, a: &ExactScalar) -> ExactScalar {
        a.clone()
    }
    fn from_scalar(&self, s: &ExactScalar) -> Result<ExactScalar> {
        dispatch!(self, f => Ok(f.to_scalar(&f.from_scalar(s)?)))
    }
    fn format(&self, a: &ExactScalar) -> String {
        dispatch!(self, f => f.format(&Self::lift(f, a)))
    }
    fn parse(&self, text: &str) -> Result<ExactScalar> {
        dispatch!(self, f => Ok(f.to_scalar(&f.parse(text)?)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_create_examples() {
        let f7 = field_create(&FieldDescriptor::Prime(7)).unwrap();
        let p = f7.mul(&ExactScalar::Residue(3), &ExactScalar::Residue(5));
        assert_eq!(p, ExactScalar::Residue(1));

        let gf4 = field_create(&FieldDescriptor::galois(2, 2).unwrap()).unwrap();
        let t = gf4.parse("t").unwrap();
        assert_eq!(gf4.format(&gf4.mul(&t, &t)), "t+1");

        let q = field_create(&FieldDescriptor::Rationals).unwrap();
        let s = q.add(&q.parse("1/3").unwrap(), &q.parse("1/6").unwrap());
        assert_eq!(q.format(&s), "1/2");
    }

    #[test]
    fn field_create_errors() {
        assert_eq!(field_create(&FieldDescriptor::Prime(9)), Err(Error::NotPrime(9)));
        let bad = FieldDescriptor::Extension { p: 2, k: 2, modulus: vec![1, 0, 1] };
        assert!(matches!(field_create(&bad), Err(Error::ReducibleModulus(_))));
    }

    #[test]
    fn display_round_trips_through_names() {
        assert_eq!(FieldDescriptor::Rationals.to_string(), "Q");
        assert_eq!(FieldDescriptor::Prime(2).to_string(), "F2");
        assert_eq!(FieldDescriptor::galois(2, 2).unwrap().to_string(), "GF(2,2)");
        assert_eq!(FieldDescriptor::galois(5, 1).unwrap(), FieldDescriptor::Prime(5));
    }
}
