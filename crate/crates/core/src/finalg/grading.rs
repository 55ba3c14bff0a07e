use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::StructureAlgebra;
use crate::arith::Field;

/// Largest dimension for which a grading is searched for.
const MAX_GRADED_DIM: usize = 64;

/// Integer degree vectors `d_i ∈ ℤ^r` with `d_0 = 0` and `d_i + d_j = d_k`
/// whenever `c_ijk ≠ 0`. The group spanned is the full torsion-free grading
/// group of the algebra for its basis; `r = 0` means only the trivial one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grading {
    degrees: Vec<Vec<i64>>,
}

impl Grading {
    pub fn trivial(n: usize) -> Self {
        Grading { degrees: vec![Vec::new(); n] }
    }

    pub fn detect<F: Field>(alg: &StructureAlgebra<F>) -> Self {
        let n = alg.dim();
        if n == 0 || n > MAX_GRADED_DIM {
            return Grading::trivial(n);
        }
        let mut constraints: Vec<Vec<(usize, i64)>> = vec![vec![(0, 1)]];
        for i in 1..n {
            for j in i..n {
                for (k, _) in alg.product(i, j) {
                    let mut row = std::collections::BTreeMap::new();
                    *row.entry(i).or_insert(0i64) += 1;
                    *row.entry(j).or_insert(0) += 1;
                    *row.entry(*k).or_insert(0) -= 1;
                    let row: Vec<(usize, i64)> = row.into_iter().filter(|(_, c)| *c != 0).collect();
                    if !row.is_empty() {
                        constraints.push(row);
                    }
                }
            }
        }
        constraints.sort();
        constraints.dedup();
        let basis = nullspace(n, &constraints);
        let degrees = (0..n).map(|i| basis.iter().map(|v| v[i]).collect()).collect();
        Grading { degrees }
    }

    pub fn rank(&self) -> usize {
        self.degrees.first().map_or(0, |d| d.len())
    }

    pub fn degree(&self, i: usize) -> &[i64] {
        &self.degrees[i]
    }

    /// Degree of a coordinate vector if all its support shares one degree.
    pub fn homogeneous_degree<F: Field>(&self, field: &F, v: &[F::Elem]) -> Option<Vec<i64>> {
        let mut deg: Option<&[i64]> = None;
        for (i, c) in v.iter().enumerate() {
            if field.is_zero(c) {
                continue;
            }
            match deg {
                None => deg = Some(&self.degrees[i]),
                Some(d) if d == self.degrees[i].as_slice() => {}
                Some(_) => return None,
            }
        }
        Some(deg.map_or_else(|| vec![0; self.rank()], |d| d.to_vec()))
    }

    /// Split a vector into homogeneous components, in first-seen order.
    pub fn components<F: Field>(&self, field: &F, v: &[F::Elem]) -> Vec<Vec<F::Elem>> {
        let mut keys: Vec<&[i64]> = Vec::new();
        let mut out: Vec<Vec<F::Elem>> = Vec::new();
        for (i, c) in v.iter().enumerate() {
            if field.is_zero(c) {
                continue;
            }
            let d = self.degrees[i].as_slice();
            let slot = match keys.iter().position(|k| *k == d) {
                Some(p) => p,
                None => {
                    keys.push(d);
                    out.push(vec![field.zero(); v.len()]);
                    out.len() - 1
                }
            };
            out[slot][i] = c.clone();
        }
        out
    }
}

/// Integer basis of the rational nullspace of a sparse integer matrix.
fn nullspace(n: usize, rows: &[Vec<(usize, i64)>]) -> Vec<Vec<i64>> {
    // reduced row echelon form, built incrementally
    let mut pivots: Vec<(usize, Vec<BigRational>)> = Vec::new();
    for row in rows {
        let mut v = vec![BigRational::zero(); n];
        for (j, c) in row {
            v[*j] = BigRational::from_integer(BigInt::from(*c));
        }
        for (p, r) in &pivots {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for (x, y) in v.iter_mut().zip(r) {
                    *x -= &f * y;
                }
            }
        }
        let Some(lead) = v.iter().position(|x| !x.is_zero()) else { continue };
        let inv = v[lead].recip();
        for x in v.iter_mut() {
            *x *= &inv;
        }
        for (_, r) in pivots.iter_mut() {
            if !r[lead].is_zero() {
                let f = r[lead].clone();
                for (x, y) in r.iter_mut().zip(&v) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push((lead, v));
        if pivots.len() == n {
            return Vec::new();
        }
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|(p, _)| *p).collect();
    let mut out = Vec::new();
    for free in (0..n).filter(|j| !pivot_cols.contains(j)) {
        let mut v = vec![BigRational::zero(); n];
        v[free] = BigRational::one();
        for (p, r) in &pivots {
            v[*p] = -r[free].clone();
        }
        let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = v.iter().map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        let sign = if ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) { -1 } else { 1 };
        out.push(
            ints.iter()
                .map(|x| i64::try_from(x / &g).expect("small degrees") * sign)
                .collect(),
        );
    }
    out
}
