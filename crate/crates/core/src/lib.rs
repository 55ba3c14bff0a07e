//! Exact computation of the intermediate S_n-closures `A^(m)` of finite
//! commutative algebras over ℚ, GF(p) and GF(p^k).

pub mod arith;
pub mod cli;
pub mod closure;
pub mod error;
pub mod finalg;
pub mod groebner;
pub mod multipoly;

pub use error::{Error, Result};
