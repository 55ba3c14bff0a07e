use num_bigint::BigInt;
use num_rational::BigRational;

use crate::arith::{Field, Rationals, Ring};
use crate::error::{Error, Result};
use crate::finalg::{berkowitz, AlgebraMap, StructureAlgebra};
use crate::multipoly::{MultiPoly, PolyRing};

/// `n(n−1)⋯(n−m+1)`; zero when `m > n`.
pub fn falling_factorial(n: usize, m: usize) -> u128 {
    if m > n {
        return 0;
    }
    (0..m).map(|i| (n - i) as u128).product()
}

fn check_monic<R: Ring>(ring: &R, f: &[R::Elem]) -> Result<usize> {
    match f.last() {
        Some(lead) if ring.is_one(lead) => Ok(f.len() - 1),
        _ => Err(Error::InvalidArgument("polynomial must be monic".into())),
    }
}

/// `K[x]/(f)` with basis `1, x, …, x^{n−1}`.
pub fn monogenic_algebra<F: Field>(field: &F, f: &[F::Elem]) -> Result<StructureAlgebra<F>> {
    let n = check_monic(field, f)?;
    if n == 0 {
        return Ok(StructureAlgebra::zero_algebra(field.clone()));
    }
    let coeffs: Vec<Vec<F::Elem>> = f[..n].iter().map(|c| vec![c.clone()]).collect();
    StructureAlgebra::base_field(field.clone()).monic_extension(&coeffs, "x")
}

/// The tower `A_i = A_{i−1}[x_i]/(f_{i−1})`, `f_i = f_{i−1}/(X − x_i)`.
#[derive(Debug, Clone)]
pub struct MonogenicTower<F: Field> {
    /// `K[x]/(f)`.
    pub base: StructureAlgebra<F>,
    /// `A_m`.
    pub algebra: StructureAlgebra<F>,
    /// `α_i : x ↦ x_i`.
    pub maps: Vec<AlgebraMap<F>>,
}

/// Split off `m` roots of the monic `f` (ascending coefficients) one at a
/// time.
pub fn monogenic_tower<F: Field>(field: &F, f: &[F::Elem], m: usize) -> Result<MonogenicTower<F>> {
    let n = check_monic(field, f)?;
    if m > n {
        return Err(Error::DegreeTooSmall { degree: n, m });
    }
    let base = monogenic_algebra(field, f)?;
    let mut alg = StructureAlgebra::base_field(field.clone());
    let mut cur: Vec<Vec<F::Elem>> = f.iter().map(|c| vec![c.clone()]).collect();
    let mut roots: Vec<Vec<F::Elem>> = Vec::new();
    for i in 1..=m {
        let d = cur.len() - 1;
        let ext = alg.monic_extension(&cur[..d], &format!("x{i}"))?;
        let pad = |v: &Vec<F::Elem>| {
            let mut w = v.clone();
            w.resize(ext.dim(), field.zero());
            w
        };
        let cur_ext: Vec<Vec<F::Elem>> = cur.iter().map(pad).collect();
        roots = roots.iter().map(pad).collect();
        let x = ext.generators().last().expect("extension generator").clone();
        let mut b = vec![Vec::new(); d];
        let mut acc = cur_ext[d].clone();
        for j in (0..d).rev() {
            b[j] = acc.clone();
            acc = ext.add(&ext.mul(&x, &acc), &cur_ext[j]);
        }
        debug_assert!(acc.iter().all(|c| field.is_zero(c)));
        roots.push(x);
        cur = b;
        alg = ext;
    }
    let maps = roots
        .iter()
        .map(|x| {
            let images = (0..n).map(|j| alg.pow(x, j as u32)).collect();
            AlgebraMap::new(images, alg.dim())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MonogenicTower { base, algebra: alg, maps })
}

/// The relations `f_{i−1}(x_i)` of the tower in `K[x_1..x_m]`.
pub fn tower_relations<F: Field>(field: &F, f: &[F::Elem], m: usize) -> Result<(PolyRing<F>, Vec<MultiPoly<F>>)> {
    let n = check_monic(field, f)?;
    if m > n {
        return Err(Error::DegreeTooSmall { degree: n, m });
    }
    let ring = PolyRing::new(field.clone(), (1..=m).map(|i| format!("x{i}")).collect());
    let mut cur: Vec<MultiPoly<F>> = f.iter().map(|c| ring.constant(c.clone())).collect();
    let mut relations = Vec::with_capacity(m);
    for i in 0..m {
        let x = ring.variable(i);
        let d = cur.len() - 1;
        let mut rel = ring.zero_poly();
        for (k, c) in cur.iter().enumerate() {
            rel = rel.add_unchecked(&c.mul_unchecked(&x.pow(k as u32)));
        }
        relations.push(rel);
        let mut b = vec![ring.zero_poly(); d];
        let mut acc = cur[d].clone();
        for j in (0..d).rev() {
            b[j] = acc.clone();
            acc = x.mul_unchecked(&acc).add_unchecked(&cur[j]);
        }
        cur = b;
    }
    Ok((ring, relations))
}

/// The closure tower of `ℤ[x]/(f)`: a free `ℤ`-module with basis
/// `x_1^{a_1}⋯x_m^{a_m}`, `a_i < n − i + 1`, cut out by integral relations.
#[derive(Debug, Clone)]
pub struct IntegerTower {
    pub f: Vec<BigInt>,
    pub m: usize,
    pub ring: PolyRing<Rationals>,
    pub relations: Vec<MultiPoly<Rationals>>,
    /// Rank over `ℤ`.
    pub rank: u128,
}

impl IntegerTower {
    pub fn new(f: &[BigInt], m: usize) -> Result<Self> {
        let q: Vec<BigRational> = f.iter().map(|c| BigRational::from_integer(c.clone())).collect();
        let (ring, relations) = tower_relations(&Rationals, &q, m)?;
        debug_assert!(relations.iter().all(|r| r.terms().all(|(_, c)| c.is_integer())));
        Ok(IntegerTower { f: f.to_vec(), m, ring, relations, rank: falling_factorial(f.len() - 1, m) })
    }

    /// The tower of the reduction of `f` into another field.
    pub fn base_change<G: Field>(&self, field: &G) -> Result<MonogenicTower<G>> {
        let f: Vec<G::Elem> = self
            .f
            .iter()
            .map(|c| field.from_scalar(&Rationals.to_scalar(&BigRational::from_integer(c.clone()))))
            .collect::<Result<_>>()?;
        monogenic_tower(field, &f, self.m)
    }
}

/// `P_{g(x)}` in `R[x]/(f)`: sends `∏(Z − a_i)` to `∏(Z − g(a_i))`.
pub fn transform_monic<R: Ring>(ring: &R, f: &[R::Elem], g: &[R::Elem]) -> Result<Vec<R::Elem>> {
    let n = check_monic(ring, f)?;
    if n == 0 {
        return Ok(vec![ring.one()]);
    }
    let reduce = |mut h: Vec<R::Elem>| {
        while h.len() > n {
            let c = h.pop().expect("nonempty");
            if ring.is_zero(&c) {
                continue;
            }
            let k = h.len() - n;
            for (i, fi) in f[..n].iter().enumerate() {
                let prod = ring.mul(&c, fi);
                h[k + i] = ring.sub(&h[k + i], &prod);
            }
        }
        h.resize(n, ring.zero());
        h
    };
    let mut col = reduce(g.to_vec());
    let mut mat = vec![vec![ring.zero(); n]; n];
    for j in 0..n {
        for (i, c) in col.iter().enumerate() {
            mat[i][j] = c.clone();
        }
        let mut shifted = vec![ring.zero()];
        shifted.extend(col);
        col = reduce(shifted);
    }
    Ok(berkowitz(ring, &mat))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::PrimeField;

    fn ints(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|c| BigRational::from_integer(BigInt::from(*c))).collect()
    }

    #[test]
    fn falling_factorials() {
        assert_eq!(falling_factorial(5, 5), 120);
        assert_eq!(falling_factorial(4, 0), 1);
        assert_eq!(falling_factorial(4, 5), 0);
    }

    #[test]
    fn tower_dimensions() {
        let cube = ints(&[0, 0, 0, 1]);
        let t = monogenic_tower(&Rationals, &cube, 2).unwrap();
        assert_eq!(t.algebra.dim(), 6);
        assert!(t.algebra.is_associative());
        for a in &t.maps {
            assert!(a.is_ring_morphism(&t.base, &t.algebra));
        }
        let quintic = ints(&[-1, 0, 0, 0, 0, 1]);
        assert_eq!(monogenic_tower(&Rationals, &quintic, 5).unwrap().algebra.dim(), 120);
        assert_eq!(
            monogenic_tower(&Rationals, &ints(&[1, 1, 1]), 3).unwrap_err(),
            Error::DegreeTooSmall { degree: 2, m: 3 }
        );
        assert_eq!(monogenic_tower(&Rationals, &ints(&[1, 0, 1]), 0).unwrap().algebra.dim(), 1);
    }

    #[test]
    fn relations_over_integers() {
        let f: Vec<BigInt> = [1, 1, 1].iter().map(|c| BigInt::from(*c)).collect();
        let t = IntegerTower::new(&f, 2).unwrap();
        assert_eq!(t.rank, 2);
        let shown: Vec<String> = t.relations.iter().map(|r| r.to_string()).collect();
        assert_eq!(shown, vec!["x1^2 + x1 + 1", "x1 + x2 + 1"]);
        let p = t.base_change(&PrimeField::new(7).unwrap()).unwrap();
        assert_eq!(p.algebra.dim(), 2);
    }

    #[test]
    fn squaring_roots() {
        let f = PrimeField::new(101).unwrap();
        let p = vec![f.from_i64(-6), 11, f.from_i64(-6), 1];
        let g = vec![0, 0, 1];
        assert_eq!(transform_monic(&f, &p, &g).unwrap(), vec![f.from_i64(-36), 49, f.from_i64(-14), 1]);
        assert_eq!(transform_monic(&f, &p, &[0, 1]).unwrap(), p);
        assert!(transform_monic(&f, &[1, 2], &[1]).is_err());
    }
}
