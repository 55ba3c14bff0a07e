use crate::arith::Field;
use crate::error::{Error, Result};
use crate::finalg::{SparseVec, StructureAlgebra, TensorPower};

/// Largest number of algebra elements the naive closure enumerates.
pub const NAIVE_ELEMENT_LIMIT: u64 = 1 << 20;

pub(super) fn check_finite<F: Field>(a: &StructureAlgebra<F>) -> Result<()> {
    match a.field().order() {
        Some(_) => Ok(()),
        None => Err(Error::InfiniteFieldUnsupported),
    }
}

/// Multiply a dense `A^{⊗s}` vector by `ε_s(a)` (last slot).
fn mul_last<F: Field>(alg: &StructureAlgebra<F>, a: &[(usize, F::Elem)], v: &[F::Elem]) -> Vec<F::Elem> {
    let f = alg.field();
    let n = alg.dim();
    let mut out = vec![f.zero(); v.len()];
    for (idx, c) in v.iter().enumerate() {
        if f.is_zero(c) {
            continue;
        }
        let d = idx % n;
        let base = idx - d;
        for (i, x) in a {
            let cx = f.mul(c, x);
            for (k, s) in alg.product(*i, d) {
                f.mul_add_assign(&mut out[base + k], &cx, s);
            }
        }
    }
    out
}

/// For each listed element `a`, the remainders `Q_{s−1}(ε_s(a))`,
/// s = 1..m, of the iterated division of `P_a` by `Z − ε_s(a)`, placed in
/// `A^{⊗m}`. Duplicates are dropped.
pub fn element_generators<F: Field>(
    alg: &StructureAlgebra<F>,
    m: usize,
    elements: impl IntoIterator<Item = Vec<F::Elem>>,
) -> Vec<SparseVec<F::Elem>> {
    let f = alg.field();
    let n = alg.dim();
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for coords in elements {
        let sparse: Vec<(usize, F::Elem)> =
            coords.iter().enumerate().filter(|(_, c)| !f.is_zero(c)).map(|(i, c)| (i, c.clone())).collect();
        let (p, _) = alg.char_poly(&coords);
        // Horner over A^{⊗s}, one slot at a time
        let mut quotient: Vec<Vec<F::Elem>> = p.iter().map(|c| vec![c.clone()]).collect();
        for s in 1..=m {
            let lifted: Vec<Vec<F::Elem>> = quotient
                .iter()
                .map(|v| {
                    let mut w = vec![f.zero(); v.len() * n];
                    for (i, c) in v.iter().enumerate() {
                        w[i * n] = c.clone();
                    }
                    w
                })
                .collect();
            let d = lifted.len() - 1;
            let mut b = vec![Vec::new(); d];
            let mut acc = lifted[d].clone();
            for j in (0..d).rev() {
                b[j] = acc.clone();
                let prod = mul_last(alg, &sparse, &acc);
                acc = prod.iter().zip(&lifted[j]).map(|(x, y)| f.add(x, y)).collect();
            }
            let shift = n.pow((m - s) as u32);
            let rem: SparseVec<F::Elem> =
                acc.iter().enumerate().filter(|(_, c)| !f.is_zero(c)).map(|(i, c)| (i * shift, c.clone())).collect();
            if !rem.is_empty() && seen.insert(rem.clone()) {
                out.push(rem);
            }
            quotient = b;
        }
    }
    out
}

/// [`element_generators`] over every element of a finite algebra.
pub fn naive_generators<F: Field>(alg: &StructureAlgebra<F>, m: usize, budget: usize) -> Result<Vec<SparseVec<F::Elem>>> {
    check_finite(alg)?;
    let f = alg.field();
    let q = f.order().expect("finite field");
    let n = alg.dim();
    TensorPower::new(alg, m, budget)?;
    let count = q.checked_pow(n as u32).filter(|c| *c <= NAIVE_ELEMENT_LIMIT).ok_or_else(|| {
        Error::BudgetExceeded(format!("naive closure would enumerate {q}^{n} elements (limit {NAIVE_ELEMENT_LIMIT})"))
    })?;
    let elements = (0..count).map(|mut idx| {
        (0..n)
            .map(|_| {
                let d = idx % q;
                idx /= q;
                f.element(d)
            })
            .collect::<Vec<_>>()
    });
    Ok(element_generators(alg, m, elements))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{PrimeField, Rationals};
    use crate::finalg::algebra_from_presentation;
    use crate::multipoly::parse_presentation;

    #[test]
    fn cayley_hamilton_for_each_element() {
        let a = algebra_from_presentation(&parse_presentation("F3[x]/(x^3 - x)").unwrap())
            .unwrap()
            .map_field(&PrimeField::new(3).unwrap())
            .unwrap();
        assert!(naive_generators(&a, 1, 100).unwrap().is_empty());
    }

    #[test]
    fn refuses_infinite_fields_and_large_enumerations() {
        let pres = parse_presentation("Q[x]/(x^2)").unwrap();
        let a = algebra_from_presentation(&pres).unwrap().map_field(&Rationals).unwrap();
        assert_eq!(naive_generators(&a, 1, 100), Err(Error::InfiniteFieldUnsupported));
        let big = algebra_from_presentation(&parse_presentation("Q[x]/(x^5)").unwrap())
            .unwrap()
            .map_field(&PrimeField::new(101).unwrap())
            .unwrap();
        assert!(matches!(naive_generators(&big, 2, 100), Err(Error::BudgetExceeded(_))));
    }
}
