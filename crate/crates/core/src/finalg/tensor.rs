use super::{AlgebraMap, SparseVec, StructureAlgebra};
use crate::arith::Field;
use crate::error::{Error, Result};

/// `A^{⊗m}` with basis indexed by m-tuples of `A`-basis indices, encoded
/// base `n` with slot 1 most significant. Products are computed on demand.
#[derive(Debug, Clone)]
pub struct TensorPower<F: Field> {
    base: StructureAlgebra<F>,
    m: usize,
    dim: usize,
    strides: Vec<usize>,
}

impl<F: Field> TensorPower<F> {
    /// Fails with `BudgetExceeded` when `n^m > budget`.
    pub fn new(base: &StructureAlgebra<F>, m: usize, budget: usize) -> Result<Self> {
        let n = base.dim();
        let dim = (n as u128).checked_pow(m as u32).filter(|d| *d <= budget as u128).ok_or_else(|| {
            Error::BudgetExceeded(format!("tensor power of dimension {n}^{m} exceeds the budget of {budget}"))
        })? as usize;
        let strides = (0..m).map(|s| n.pow((m - 1 - s) as u32)).collect();
        Ok(TensorPower { base: base.clone(), m, dim, strides })
    }

    pub fn base(&self) -> &StructureAlgebra<F> {
        &self.base
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Index step of slot `s` (0-based).
    pub fn stride(&self, s: usize) -> usize {
        self.strides[s]
    }

    pub fn digit(&self, idx: usize, s: usize) -> usize {
        (idx / self.strides[s]) % self.base.dim()
    }

    pub fn digits(&self, idx: usize) -> Vec<usize> {
        (0..self.m).map(|s| self.digit(idx, s)).collect()
    }

    pub fn index(&self, digits: &[usize]) -> usize {
        digits.iter().zip(&self.strides).map(|(d, s)| d * s).sum()
    }

    pub fn label(&self, idx: usize) -> String {
        if self.m == 0 {
            return "1".into();
        }
        self.digits(idx).iter().map(|d| self.base.labels()[*d].as_str()).collect::<Vec<_>>().join("⊗")
    }

    /// `ε_s(a)`: `a` in slot `s` (0-based), the unit elsewhere.
    pub fn embed(&self, s: usize, a: &[F::Elem]) -> SparseVec<F::Elem> {
        let f = self.base.field();
        a.iter()
            .enumerate()
            .filter(|(_, c)| !f.is_zero(c))
            .map(|(i, c)| (i * self.strides[s], c.clone()))
            .collect()
    }

    pub fn mul_basis(&self, x: usize, y: usize) -> SparseVec<F::Elem> {
        let f = self.base.field();
        let mut terms: Vec<(usize, F::Elem)> = vec![(0, f.one())];
        for s in 0..self.m {
            let prod = self.base.product(self.digit(x, s), self.digit(y, s));
            let mut next = Vec::with_capacity(terms.len() * prod.len());
            for (idx, c) in &terms {
                for (k, d) in prod {
                    next.push((idx + k * self.strides[s], f.mul(c, d)));
                }
            }
            terms = next;
            if terms.is_empty() {
                break;
            }
        }
        merge(f, terms)
    }

    pub fn mul(&self, a: &[(usize, F::Elem)], b: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
        let f = self.base.field();
        let mut terms = Vec::new();
        for (x, c) in a {
            for (y, d) in b {
                let cd = f.mul(c, d);
                terms.extend(self.mul_basis(*x, *y).into_iter().map(|(k, e)| (k, f.mul(&cd, &e))));
            }
        }
        merge(f, terms)
    }

    /// Materialize the tensor power as a [`StructureAlgebra`].
    pub fn to_algebra(&self) -> Result<StructureAlgebra<F>> {
        let f = self.base.field().clone();
        if self.m == 0 {
            return Ok(StructureAlgebra::base_field(f));
        }
        if self.base.dim() == 0 {
            return Ok(StructureAlgebra::zero_algebra(f));
        }
        let table = (0..self.dim).flat_map(|x| (0..self.dim).map(move |y| (x, y))).map(|(x, y)| self.mul_basis(x, y)).collect();
        let labels = (0..self.dim).map(|i| self.label(i)).collect();
        let generators = (0..self.m)
            .flat_map(|s| self.base.generators().iter().map(move |g| (s, g)))
            .map(|(s, g)| self.dense(&self.embed(s, g)))
            .collect();
        StructureAlgebra::from_table(f, labels, table, generators)
    }

    pub fn dense(&self, v: &[(usize, F::Elem)]) -> Vec<F::Elem> {
        let f = self.base.field();
        let mut out = vec![f.zero(); self.dim];
        for (k, c) in v {
            f.add_assign(&mut out[*k], c);
        }
        out
    }

    /// The maps `ε_1, …, ε_m`.
    pub fn embeddings(&self) -> Vec<AlgebraMap<F>> {
        (0..self.m)
            .map(|s| {
                let images = (0..self.base.dim()).map(|i| self.dense(&self.embed(s, &self.base.basis_vector(i)))).collect();
                AlgebraMap { images, target_dim: self.dim }
            })
            .collect()
    }
}

fn merge<F: Field>(f: &F, mut terms: Vec<(usize, F::Elem)>) -> SparseVec<F::Elem> {
    terms.sort_by_key(|(k, _)| *k);
    let mut out: SparseVec<F::Elem> = Vec::with_capacity(terms.len());
    for (k, c) in terms {
        match out.last_mut() {
            Some((j, acc)) if *j == k => f.add_assign(acc, &c),
            _ => out.push((k, c)),
        }
    }
    out.retain(|(_, c)| !f.is_zero(c));
    out
}

/// `A^{⊗m}` as an algebra together with `ε_1, …, ε_m`.
pub fn tensor_power<F: Field>(
    a: &StructureAlgebra<F>,
    m: usize,
    budget: usize,
) -> Result<(StructureAlgebra<F>, Vec<AlgebraMap<F>>)> {
    let tp = TensorPower::new(a, m, budget)?;
    Ok((tp.to_algebra()?, tp.embeddings()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::PrimeField;
    use crate::finalg::algebra_from_presentation;
    use crate::multipoly::parse_presentation;

    fn cube() -> StructureAlgebra<PrimeField> {
        algebra_from_presentation(&parse_presentation("Q[x]/(x^3)").unwrap())
            .unwrap()
            .map_field(&PrimeField::new(101).unwrap())
            .unwrap()
    }

    #[test]
    fn dimensions_and_budget() {
        let a = cube();
        let (t, eps) = tensor_power(&a, 2, 20_000).unwrap();
        assert_eq!(t.dim(), 9);
        assert!(t.is_associative());
        for e in &eps {
            assert!(e.is_ring_morphism(&a, &t));
        }
        assert_eq!(tensor_power(&a, 0, 10).unwrap().0.dim(), 1);
        assert!(matches!(TensorPower::new(&a, 10, 20_000), Err(Error::BudgetExceeded(_))));
        let six = algebra_from_presentation(&parse_presentation("Q[x]/(x^6)").unwrap()).unwrap();
        assert_eq!(TensorPower::new(&six, 5, 20_000).unwrap().dim(), 7776);
    }

    #[test]
    fn pure_tensors() {
        let a = cube();
        let tp = TensorPower::new(&a, 2, 100).unwrap();
        let u = vec![1, 2, 3];
        let v = vec![4, 5, 6];
        let prod = tp.dense(&tp.mul(&tp.embed(0, &u), &tp.embed(1, &v)));
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(prod[tp.index(&[i, j])], (u[i] * v[j]) % 101);
            }
        }
        assert_eq!(tp.label(tp.index(&[1, 2])), "x⊗x^2");
    }
}
