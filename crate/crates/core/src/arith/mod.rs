//! Exact scalar arithmetic.
//!
//! Everything upstream is generic over [`Field`]. Three concrete fields carry
//! the heavy computations ([`Rationals`], [`PrimeField`], [`ExtensionField`]);
//! [`DynField`] wraps any of them behind a runtime [`FieldDescriptor`] and
//! operates on [`ExactScalar`] values, which is what parsers and bindings see.

mod dynamic;
mod extension;
mod prime;
mod primality;
mod rational;

use std::fmt::Debug;
use std::hash::Hash;

pub use dynamic::{field_create, DynField, ExactScalar, FieldDescriptor};
pub use extension::ExtensionField;
pub use primality::is_prime;
pub use prime::PrimeField;
pub use rational::Rationals;

use crate::error::Result;

/// Default surrogate primes for characteristic-0 computations.
pub const DEFAULT_PRIMES: [u64; 2] = [2_147_483_629, 2_147_483_587];

/// A commutative ring with unit whose elements are plain values and whose
/// operations go through a (cheap, shareable) context object.
pub trait Ring: Clone + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Hash + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        *a = self.add(a, b);
    }

    /// `acc += a * b`
    fn mul_add_assign(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        let prod = self.mul(a, b);
        self.add_assign(acc, &prod);
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

/// An exact field.
pub trait Field: Ring + Debug {
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// 0 for the rationals.
    fn characteristic(&self) -> u64;

    /// Number of elements, `None` when infinite.
    fn order(&self) -> Option<u64>;

    /// The `index`-th element in a fixed enumeration of a finite field
    /// (`0` is zero). Only meaningful for `index < order()`.
    fn element(&self, index: u64) -> Self::Elem;

    fn descriptor(&self) -> FieldDescriptor;
    fn to_scalar(&self, a: &Self::Elem) -> ExactScalar;
    fn from_scalar(&self, s: &ExactScalar) -> Result<Self::Elem>;
    fn format(&self, a: &Self::Elem) -> String;
    fn parse(&self, text: &str) -> Result<Self::Elem>;
}
