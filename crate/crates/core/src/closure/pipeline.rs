use std::time::Instant;

use super::{closure_dimension, closure_with, ClosureResult, ClosureStats, Method};
use crate::arith::{DynField, Field, FieldDescriptor, PrimeField, Rationals, DEFAULT_PRIMES};
use crate::error::{Error, Result};
use crate::finalg::{algebra_from_presentation, StructureAlgebra};
use crate::multipoly::AlgebraPresentation;

/// How closures of algebras over `ℚ` are computed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Arithmetic {
    /// Reduce modulo each prime; all results must agree.
    Modular(Vec<u64>),
    /// Work over `ℚ` directly.
    Exact,
}

impl Default for Arithmetic {
    fn default() -> Self {
        Arithmetic::Modular(DEFAULT_PRIMES.to_vec())
    }
}

/// A dimension computed for a presentation, with the field actually used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentationReport {
    pub field: String,
    pub stats: ClosureStats,
}

fn modular_label(primes: &[u64]) -> String {
    let ps: Vec<String> = primes.iter().map(u64::to_string).collect();
    format!("Q mod {}", ps.join(","))
}

/// `dim A^{(m)}` for `A` given by generators and relations.
pub fn presentation_closure_dim(
    pres: &AlgebraPresentation,
    m: usize,
    method: Method,
    arithmetic: &Arithmetic,
    budget: usize,
) -> Result<PresentationReport> {
    let a = algebra_from_presentation(pres)?;
    let field = a.field().clone();
    if let Some(p) = field.as_prime() {
        let stats = closure_dimension(&a.map_field(&p)?, m, method, budget)?;
        return Ok(PresentationReport { field: pres.field.to_string(), stats });
    }
    if let Some(e) = field.as_extension() {
        let stats = closure_dimension(&a.map_field(e)?, m, method, budget)?;
        return Ok(PresentationReport { field: pres.field.to_string(), stats });
    }
    if method == Method::Naive {
        return Err(Error::InfiniteFieldUnsupported);
    }
    match arithmetic {
        Arithmetic::Exact => {
            let stats = closure_dimension(&a.map_field(&Rationals)?, m, method, budget)?;
            Ok(PresentationReport { field: "Q".into(), stats })
        }
        Arithmetic::Modular(primes) => {
            if primes.is_empty() {
                return Err(Error::InvalidArgument("modular mode needs at least one prime".into()));
            }
            let start = Instant::now();
            let mut first: Option<(u64, ClosureStats)> = None;
            for &p in primes {
                let fp = PrimeField::new(p)?;
                let stats = closure_dimension(&a.map_field(&fp)?, m, method, budget)?;
                match &first {
                    None => first = Some((p, stats)),
                    Some((q, s)) if s.dim != stats.dim || s.rank != stats.rank => {
                        return Err(Error::PrimeDisagreement(format!(
                            "dimension {} modulo {q} but {} modulo {p}",
                            s.dim, stats.dim
                        )));
                    }
                    Some(_) => {}
                }
            }
            let (_, mut stats) = first.expect("at least one prime");
            stats.millis = start.elapsed().as_millis();
            Ok(PresentationReport { field: modular_label(primes), stats })
        }
    }
}

fn to_dyn<F: Field>(r: ClosureResult<F>, field: &DynField) -> Result<ClosureResult<DynField>> {
    let from = r.source.field().clone();
    Ok(ClosureResult {
        source: r.source.map_field(field)?,
        stats: r.stats,
        closure: r.closure.map_field(field)?,
        maps: r.maps.iter().map(|a| a.map_field(&from, field)).collect::<Result<_>>()?,
    })
}

fn full<F: Field>(a: &StructureAlgebra<DynField>, f: &F, m: usize, method: Method, budget: usize) -> Result<ClosureResult<DynField>> {
    to_dyn(closure_with(&a.map_field(f)?, m, method, budget)?, a.field())
}

/// The closure with its maps. Over `ℚ` this always uses exact arithmetic so
/// that the structure constants are the true ones.
pub fn presentation_closure(
    pres: &AlgebraPresentation,
    m: usize,
    method: Method,
    budget: usize,
) -> Result<ClosureResult<DynField>> {
    let a = algebra_from_presentation(pres)?;
    let field = a.field().clone();
    match &pres.field {
        FieldDescriptor::Rationals if method == Method::Naive => Err(Error::InfiniteFieldUnsupported),
        FieldDescriptor::Rationals => full(&a, &Rationals, m, method, budget),
        FieldDescriptor::Prime(_) => full(&a, &field.as_prime().expect("prime field"), m, method, budget),
        FieldDescriptor::Extension { .. } => {
            let e = field.as_extension().expect("extension field").clone();
            full(&a, &e, m, method, budget)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::{divides_check, DEFAULT_BUDGET};
    use crate::multipoly::parse_presentation;

    fn dim(text: &str, m: usize, arith: &Arithmetic) -> usize {
        let pres = parse_presentation(text).unwrap();
        presentation_closure_dim(&pres, m, Method::General, arith, DEFAULT_BUDGET).unwrap().stats.dim
    }

    #[test]
    fn modular_and_exact_agree() {
        let modular = Arithmetic::default();
        for (text, m, want) in [("Q[x,y]/((x,y)^2)", 2, 6), ("Q[x]/(x^4)", 3, 24), ("Q[x,y]/(x^2 + y^3, xy)", 2, 21)] {
            assert_eq!(dim(text, m, &modular), want);
            assert_eq!(dim(text, m, &Arithmetic::Exact), want);
        }
    }

    #[test]
    fn field_labels() {
        let pres = parse_presentation("Q[x]/(x^2)").unwrap();
        let r = presentation_closure_dim(&pres, 2, Method::General, &Arithmetic::Modular(vec![101, 103]), 100).unwrap();
        assert_eq!(r.field, "Q mod 101,103");
        let pres = parse_presentation("GF(2,2)[x]/(x^2)").unwrap();
        let r = presentation_closure_dim(&pres, 2, Method::Naive, &Arithmetic::default(), 100).unwrap();
        assert_eq!(r.field, "GF(2,2)");
        let pres = parse_presentation("Q[x]/(x^2)").unwrap();
        assert_eq!(
            presentation_closure_dim(&pres, 2, Method::Naive, &Arithmetic::default(), 100),
            Err(Error::InfiniteFieldUnsupported)
        );
    }

    #[test]
    fn characteristic_two_prime_disagrees() {
        let pres = parse_presentation("Q[x,y]/(x^2, y^2)").unwrap();
        let r = presentation_closure_dim(&pres, 2, Method::General, &Arithmetic::Modular(vec![101, 2]), 100);
        assert!(matches!(r, Err(Error::PrimeDisagreement(_))));
    }

    #[test]
    fn full_closure_over_rationals() {
        let pres = parse_presentation("Q[x]/(x^3)").unwrap();
        let r = presentation_closure(&pres, 2, Method::General, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.dim(), 6);
        divides_check(&r).unwrap();
    }
}
