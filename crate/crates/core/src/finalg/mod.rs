//! Finite-dimensional commutative algebras given by structure constants.

mod berkowitz;
mod grading;
mod ideal;
mod tensor;

use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{DynField, Field};
use crate::error::{Error, Result};
use crate::groebner::buchberger;
use crate::multipoly::{AlgebraPresentation, Monomial, MultiPoly};

pub use berkowitz::{berkowitz, traces_from_char_poly};
pub use grading::Grading;
pub use ideal::{ideal_span, ideal_subspace_dim, quotient_algebra, IdealSpan, Quotient};
pub use tensor::{tensor_power, TensorPower};

/// Sparse product of two basis elements: `(k, c_ijk)` with nonzero `c`.
pub type SparseVec<E> = Vec<(usize, E)>;

/// A commutative algebra with basis `e_0 = 1, e_1, …, e_{n−1}` and
/// `e_i·e_j = Σ_k c_ijk e_k`. The zero algebra has `n = 0`.
#[derive(Debug, Clone)]
pub struct StructureAlgebra<F: Field> {
    field: F,
    n: usize,
    labels: Vec<String>,
    table: Vec<SparseVec<F::Elem>>,
    generators: Vec<Vec<F::Elem>>,
}

/// Coordinates of an element in a [`StructureAlgebra`] basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement<F: Field> {
    coords: Vec<F::Elem>,
}

impl<F: Field> AlgebraElement<F> {
    pub fn new(alg: &StructureAlgebra<F>, coords: Vec<F::Elem>) -> Result<Self> {
        if coords.len() != alg.dim() {
            return Err(Error::LengthMismatch(format!("{} coordinates for dimension {}", coords.len(), alg.dim())));
        }
        Ok(AlgebraElement { coords })
    }

    pub fn coords(&self) -> &[F::Elem] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<F::Elem> {
        self.coords
    }
}

/// A linear map given by the images of the source basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraMap<F: Field> {
    images: Vec<Vec<F::Elem>>,
    target_dim: usize,
}

impl<F: Field> AlgebraMap<F> {
    pub fn new(images: Vec<Vec<F::Elem>>, target_dim: usize) -> Result<Self> {
        if images.iter().any(|v| v.len() != target_dim) {
            return Err(Error::LengthMismatch("image length differs from target dimension".into()));
        }
        Ok(AlgebraMap { images, target_dim })
    }

    pub fn source_dim(&self) -> usize {
        self.images.len()
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    /// Row `i` is the image of the i-th source basis element.
    pub fn images(&self) -> &[Vec<F::Elem>] {
        &self.images
    }

    pub fn apply(&self, field: &F, a: &[F::Elem]) -> Vec<F::Elem> {
        let mut out = vec![field.zero(); self.target_dim];
        for (c, img) in a.iter().zip(&self.images) {
            if field.is_zero(c) {
                continue;
            }
            for (o, x) in out.iter_mut().zip(img) {
                field.mul_add_assign(o, c, x);
            }
        }
        out
    }

    /// Unital and multiplicative on every pair of basis elements.
    pub fn is_ring_morphism(&self, source: &StructureAlgebra<F>, target: &StructureAlgebra<F>) -> bool {
        let f = &source.field;
        if self.source_dim() != source.dim() || self.target_dim != target.dim() {
            return false;
        }
        if self.apply(f, &source.one()) != target.one() {
            return false;
        }
        for i in 0..source.dim() {
            for j in i..source.dim() {
                let lhs = self.apply(f, &source.to_dense(source.product(i, j)));
                let rhs = target.mul(&self.images[i], &self.images[j]);
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    pub fn compose(&self, field: &F, after: &AlgebraMap<F>) -> AlgebraMap<F> {
        AlgebraMap {
            images: self.images.iter().map(|v| after.apply(field, v)).collect(),
            target_dim: after.target_dim,
        }
    }

    pub fn map_field<G: Field>(&self, from: &F, to: &G) -> Result<AlgebraMap<G>> {
        let images = self
            .images
            .iter()
            .map(|v| v.iter().map(|c| to.from_scalar(&from.to_scalar(c))).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(AlgebraMap { images, target_dim: self.target_dim })
    }
}

impl<F: Field> StructureAlgebra<F> {
    /// Build from a full `n × n` product table (row-major) and a list of
    /// algebra generators. Checks commutativity and that `e_0` is the unit.
    pub fn from_table(
        field: F,
        labels: Vec<String>,
        table: Vec<SparseVec<F::Elem>>,
        generators: Vec<Vec<F::Elem>>,
    ) -> Result<Self> {
        let n = labels.len();
        if table.len() != n * n {
            return Err(Error::LengthMismatch(format!("table has {} entries, expected {}", table.len(), n * n)));
        }
        let mut table = table;
        for entry in table.iter_mut() {
            if entry.iter().any(|(k, _)| *k >= n) {
                return Err(Error::InvalidArgument("structure constant index out of range".into()));
            }
            entry.retain(|(_, c)| !field.is_zero(c));
            entry.sort_by_key(|(k, _)| *k);
        }
        for i in 0..n {
            for j in 0..i {
                if table[i * n + j] != table[j * n + i] {
                    return Err(Error::InvalidArgument(format!("e_{i}·e_{j} ≠ e_{j}·e_{i}")));
                }
            }
            if n > 0 && table[i] != vec![(i, field.one())] {
                return Err(Error::InvalidArgument(format!("e_0 does not act as the identity on e_{i}")));
            }
        }
        if generators.iter().any(|g| g.len() != n) {
            return Err(Error::LengthMismatch("generator length differs from dimension".into()));
        }
        Ok(StructureAlgebra { field, n, labels, table, generators })
    }

    /// The base field viewed as a one-dimensional algebra.
    pub fn base_field(field: F) -> Self {
        let one = field.one();
        StructureAlgebra { field, n: 1, labels: vec!["1".into()], table: vec![vec![(0, one)]], generators: Vec::new() }
    }

    pub fn zero_algebra(field: F) -> Self {
        StructureAlgebra { field, n: 0, labels: Vec::new(), table: Vec::new(), generators: Vec::new() }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Elements generating the algebra over the field (the unit is implied).
    pub fn generators(&self) -> &[Vec<F::Elem>] {
        &self.generators
    }

    pub fn product(&self, i: usize, j: usize) -> &[(usize, F::Elem)] {
        &self.table[i * self.n + j]
    }

    pub fn to_dense(&self, v: &[(usize, F::Elem)]) -> Vec<F::Elem> {
        let mut out = vec![self.field.zero(); self.n];
        for (k, c) in v {
            self.field.add_assign(&mut out[*k], c);
        }
        out
    }

    pub fn zero(&self) -> Vec<F::Elem> {
        vec![self.field.zero(); self.n]
    }

    pub fn one(&self) -> Vec<F::Elem> {
        let mut v = self.zero();
        if self.n > 0 {
            v[0] = self.field.one();
        }
        v
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F::Elem> {
        let mut v = self.zero();
        v[i] = self.field.one();
        v
    }

    pub fn element(&self, coords: Vec<F::Elem>) -> Result<AlgebraElement<F>> {
        AlgebraElement::new(self, coords)
    }

    pub fn add(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        a.iter().zip(b).map(|(x, y)| self.field.add(x, y)).collect()
    }

    pub fn scale(&self, c: &F::Elem, a: &[F::Elem]) -> Vec<F::Elem> {
        a.iter().map(|x| self.field.mul(c, x)).collect()
    }

    pub fn mul(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if f.is_zero(y) {
                    continue;
                }
                let xy = f.mul(x, y);
                for (k, c) in self.product(i, j) {
                    f.mul_add_assign(&mut out[*k], &xy, c);
                }
            }
        }
        out
    }

    pub fn pow(&self, a: &[F::Elem], e: u32) -> Vec<F::Elem> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Matrix of multiplication by `a`; column j holds the coordinates of
    /// `a·e_j`. Returned row-major as `m[k][j]`.
    pub fn mult_matrix(&self, a: &[F::Elem]) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let mut m = vec![vec![f.zero(); self.n]; self.n];
        for (i, x) in a.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for j in 0..self.n {
                for (k, c) in self.product(i, j) {
                    f.mul_add_assign(&mut m[*k][j], x, c);
                }
            }
        }
        m
    }

    /// `P_a(Z) = det(Z − m_a)` ascending, with the traces `s_1..s_n`.
    pub fn char_poly(&self, a: &[F::Elem]) -> (Vec<F::Elem>, Vec<F::Elem>) {
        let p = berkowitz(&self.field, &self.mult_matrix(a));
        let s = traces_from_char_poly(&self.field, &p);
        (p, s)
    }

    /// Every non-unit basis element is nilpotent.
    pub fn is_local_nilpotent(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        (1..self.n).all(|i| {
            let e = self.basis_vector(i);
            let mut p = e.clone();
            for _ in 0..self.n {
                if p.iter().all(|c| self.field.is_zero(c)) {
                    return true;
                }
                p = self.mul(&p, &e);
            }
            p.iter().all(|c| self.field.is_zero(c))
        })
    }

    /// Exhaustive for `n ≤ 20`, otherwise 200 seeded random basis triples.
    pub fn is_associative(&self) -> bool {
        let n = self.n;
        let check = |i: usize, j: usize, k: usize| {
            let ij = self.to_dense(self.product(i, j));
            let jk = self.to_dense(self.product(j, k));
            self.mul(&ij, &self.basis_vector(k)) == self.mul(&self.basis_vector(i), &jk)
        };
        if n <= 20 {
            (0..n).all(|i| (i..n).all(|j| (0..n).all(|k| check(i, j, k))))
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            (0..200).all(|_| check(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n)))
        }
    }

    /// Same structure constants read in another field.
    pub fn map_field<G: Field>(&self, target: &G) -> Result<StructureAlgebra<G>> {
        let conv = |c: &F::Elem| target.from_scalar(&self.field.to_scalar(c));
        let table = self
            .table
            .iter()
            .map(|e| e.iter().map(|(k, c)| Ok((*k, conv(c)?))).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let generators = self
            .generators
            .iter()
            .map(|g| g.iter().map(conv).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        StructureAlgebra::from_table(target.clone(), self.labels.clone(), table, generators)
    }

    /// `A[X]/(f)` for `f = X^d + Σ_{j<d} c_j X^j` with `c_j ∈ A`. The basis is
    /// `e_i·X^j` at index `i + n·j`, so the unit stays at index 0.
    pub fn monic_extension(&self, coeffs: &[Vec<F::Elem>], var: &str) -> Result<StructureAlgebra<F>> {
        let f = &self.field;
        let (n, d) = (self.n, coeffs.len());
        if d == 0 || n == 0 {
            return Ok(StructureAlgebra::zero_algebra(f.clone()));
        }
        // X^t for t < 2d−1 as A-coefficients of 1, X, …, X^{d−1}
        let mut powers: Vec<Vec<Vec<F::Elem>>> = Vec::new();
        for t in 0..(2 * d - 1) {
            if t < d {
                let mut v = vec![self.zero(); d];
                v[t] = self.one();
                powers.push(v);
            } else {
                let prev = &powers[t - 1];
                let mut v = vec![self.zero(); d];
                for j in 1..d {
                    v[j] = prev[j - 1].clone();
                }
                let top = &prev[d - 1];
                for (j, c) in coeffs.iter().enumerate() {
                    let sub = self.mul(top, c);
                    v[j] = v[j].iter().zip(&sub).map(|(a, b)| f.sub(a, b)).collect();
                }
                powers.push(v);
            }
        }
        let big = n * d;
        let mut table = Vec::with_capacity(big * big);
        for a in 0..big {
            for b in 0..big {
                let (i, x) = (a % n, a / n);
                let (k, y) = (b % n, b / n);
                let ik = self.to_dense(self.product(i, k));
                let mut out: Vec<(usize, F::Elem)> = Vec::new();
                for (j, r) in powers[x + y].iter().enumerate() {
                    let c = self.mul(&ik, r);
                    for (l, v) in c.into_iter().enumerate() {
                        if !f.is_zero(&v) {
                            out.push((l + n * j, v));
                        }
                    }
                }
                table.push(out);
            }
        }
        let labels = (0..big)
            .map(|a| {
                let (i, j) = (a % n, a / n);
                let base = &self.labels[i];
                match (base.as_str(), j) {
                    (_, 0) => base.clone(),
                    ("1", 1) => var.to_string(),
                    ("1", _) => format!("{var}^{j}"),
                    (_, 1) => format!("{base}*{var}"),
                    _ => format!("{base}*{var}^{j}"),
                }
            })
            .collect();
        let embed = |g: &Vec<F::Elem>| {
            let mut v = vec![f.zero(); big];
            v[..n].clone_from_slice(g);
            v
        };
        let mut generators: Vec<Vec<F::Elem>> = self.generators.iter().map(embed).collect();
        let mut x = vec![f.zero(); big];
        if d > 1 {
            x[n] = f.one();
        } else {
            for (l, c) in coeffs[0].iter().enumerate() {
                x[l] = f.neg(c);
            }
        }
        generators.push(x);
        StructureAlgebra::from_table(f.clone(), labels, table, generators)
    }

    /// The embedding `A → A[X]/(f)` of [`monic_extension`](Self::monic_extension).
    pub fn extension_embedding(&self, ext: &StructureAlgebra<F>) -> AlgebraMap<F> {
        let images = (0..self.n).map(|i| ext.basis_vector(i)).collect();
        AlgebraMap { images, target_dim: ext.dim() }
    }
}

/// Structure constants of `K[vars]/I` on the standard monomials of a
/// reduced Gröbner basis; `e_0 = 1` and the generators are the variables.
pub fn algebra_from_presentation(pres: &AlgebraPresentation) -> Result<StructureAlgebra<DynField>> {
    let gb = buchberger(pres)?;
    let basis = gb.standard_monomials()?;
    let ring = gb.ring().clone();
    let field = ring.field().clone();
    let n = basis.len();
    if n == 0 {
        return Ok(StructureAlgebra::zero_algebra(field));
    }
    let index: std::collections::HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let coords = |p: &MultiPoly<DynField>| -> Vec<(usize, crate::arith::ExactScalar)> {
        p.terms().map(|(m, c)| (index[m], c.clone())).collect()
    };
    let one = crate::arith::Ring::one(&field);
    let mut table = vec![Vec::new(); n * n];
    for i in 0..n {
        for j in i..n {
            let prod = ring.term(one.clone(), basis[i].mul(&basis[j]));
            let nf = gb.normal_form(&prod)?;
            table[i * n + j] = coords(&nf);
            table[j * n + i] = coords(&nf);
        }
    }
    let labels = basis.iter().map(|m| m.display_with(ring.vars())).collect();
    let mut generators = Vec::new();
    for v in 0..ring.nvars() {
        let nf = gb.normal_form(&ring.variable(v))?;
        let mut dense = vec![crate::arith::Ring::zero(&field); n];
        for (k, c) in coords(&nf) {
            dense[k] = c;
        }
        generators.push(dense);
    }
    StructureAlgebra::from_table(field, labels, table, generators)
}

/// `A × B` with basis `(1,1), (e_i,0)_{i≥1}, (0,1), (0,f_j)_{j≥1}` and the
/// two projections.
pub fn algebra_product<F: Field>(
    a: &StructureAlgebra<F>,
    b: &StructureAlgebra<F>,
) -> Result<(StructureAlgebra<F>, AlgebraMap<F>, AlgebraMap<F>)> {
    if a.field.descriptor() != b.field.descriptor() {
        return Err(Error::FieldMismatch);
    }
    let f = &a.field;
    if a.n == 0 || b.n == 0 {
        let (nonzero, first) = if a.n == 0 { (b, false) } else { (a, true) };
        let id = AlgebraMap { images: (0..nonzero.n).map(|i| nonzero.basis_vector(i)).collect(), target_dim: nonzero.n };
        let zero = AlgebraMap { images: vec![Vec::new(); nonzero.n], target_dim: 0 };
        return Ok(if first { (nonzero.clone(), id, zero) } else { (nonzero.clone(), zero, id) });
    }
    let (na, nb) = (a.n, b.n);
    let n = na + nb;
    let e1 = na; // index of (0,1)
    // (e_i, 0) and (0, f_j) as sparse vectors in the new basis
    let left = |k: usize, c: &F::Elem| -> Vec<(usize, F::Elem)> {
        if k == 0 {
            vec![(0, c.clone()), (e1, f.neg(c))]
        } else {
            vec![(k, c.clone())]
        }
    };
    let right = |k: usize, c: &F::Elem| -> Vec<(usize, F::Elem)> { vec![(na + k, c.clone())] };
    let mut table = vec![Vec::new(); n * n];
    let accumulate = |terms: Vec<(usize, F::Elem)>| -> Vec<(usize, F::Elem)> {
        let mut dense: std::collections::BTreeMap<usize, F::Elem> = std::collections::BTreeMap::new();
        for (k, c) in terms {
            let e = dense.entry(k).or_insert_with(|| f.zero());
            f.add_assign(e, &c);
        }
        dense.into_iter().filter(|(_, c)| !f.is_zero(c)).collect()
    };
    // old-basis description of each new basis element: (A part, B part)
    let parts = |x: usize| -> (Vec<(usize, F::Elem)>, Vec<(usize, F::Elem)>) {
        if x == 0 {
            (vec![(0, f.one())], vec![(0, f.one())])
        } else if x < na {
            (vec![(x, f.one())], Vec::new())
        } else {
            (Vec::new(), vec![(x - na, f.one())])
        }
    };
    for x in 0..n {
        for y in 0..n {
            let (ax, bx) = parts(x);
            let (ay, by) = parts(y);
            let mut terms = Vec::new();
            for (i, c) in &ax {
                for (j, d) in &ay {
                    let cd = f.mul(c, d);
                    for (k, s) in a.product(*i, *j) {
                        terms.extend(left(*k, &f.mul(&cd, s)));
                    }
                }
            }
            for (i, c) in &bx {
                for (j, d) in &by {
                    let cd = f.mul(c, d);
                    for (k, s) in b.product(*i, *j) {
                        terms.extend(right(*k, &f.mul(&cd, s)));
                    }
                }
            }
            table[x * n + y] = accumulate(terms);
        }
    }
    let mut labels = vec!["1".to_string()];
    labels.extend(a.labels[1..].iter().map(|l| format!("({l},0)")));
    labels.push("(0,1)".into());
    labels.extend(b.labels[1..].iter().map(|l| format!("(0,{l})")));
    let densify = |terms: Vec<(usize, F::Elem)>| {
        let mut v = vec![f.zero(); n];
        for (k, c) in accumulate(terms) {
            v[k] = c;
        }
        v
    };
    let mut generators = Vec::new();
    for g in &a.generators {
        generators.push(densify(g.iter().enumerate().flat_map(|(k, c)| left(k, c)).collect()));
    }
    for g in &b.generators {
        generators.push(densify(g.iter().enumerate().flat_map(|(k, c)| right(k, c)).collect()));
    }
    generators.push(densify(vec![(e1, f.one())]));
    let prod = StructureAlgebra::from_table(f.clone(), labels, table, generators)?;
    let pa = (0..n)
        .map(|x| {
            let mut v = a.zero();
            for (k, c) in parts(x).0 {
                v[k] = c;
            }
            v
        })
        .collect();
    let pb = (0..n)
        .map(|x| {
            let mut v = b.zero();
            for (k, c) in parts(x).1 {
                v[k] = c;
            }
            v
        })
        .collect();
    Ok((prod, AlgebraMap { images: pa, target_dim: na }, AlgebraMap { images: pb, target_dim: nb }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{PrimeField, Ring};
    use crate::multipoly::parse_presentation;

    fn from(text: &str) -> StructureAlgebra<DynField> {
        algebra_from_presentation(&parse_presentation(text).unwrap()).unwrap()
    }

    fn over_p(text: &str) -> StructureAlgebra<PrimeField> {
        from(text).map_field(&PrimeField::new(101).unwrap()).unwrap()
    }

    #[test]
    fn truncated_polynomials() {
        let a = over_p("Q[x]/(x^3)");
        assert_eq!(a.dim(), 3);
        assert_eq!(a.labels(), ["1", "x", "x^2"]);
        assert_eq!(a.product(1, 1), &[(2, 1)]);
        assert!(a.product(1, 2).is_empty());
        assert!(a.is_associative());
    }

    #[test]
    fn square_zero_ideal() {
        let a = over_p("Q[x,y]/((x,y)^2)");
        assert_eq!(a.dim(), 3);
        for i in 1..3 {
            for j in 1..3 {
                assert!(a.product(i, j).is_empty());
            }
        }
        assert!(a.is_local_nilpotent());
    }

    #[test]
    fn cubes_cancel() {
        let a = from("Q[x,y]/(x*y, x^3+y^3)");
        assert_eq!(a.dim(), 6);
        let x = a.generators()[0].clone();
        let y = a.generators()[1].clone();
        let x3 = a.pow(&x, 3);
        let y3 = a.pow(&y, 3);
        assert!(x3.iter().any(|c| !a.field().is_zero(c)));
        assert_eq!(a.add(&x3, &y3), a.zero());
    }

    #[test]
    fn zero_dimensional_required() {
        let p = parse_presentation("Q[x,y]/(x^2)").unwrap();
        assert!(matches!(algebra_from_presentation(&p), Err(Error::NotZeroDimensional(_))));
    }

    #[test]
    fn products() {
        let f = PrimeField::new(101).unwrap();
        let k = StructureAlgebra::base_field(f);
        let (kk, p1, p2) = algebra_product(&k, &k).unwrap();
        assert_eq!(kk.dim(), 2);
        assert!(kk.is_associative());
        assert!(!kk.is_local_nilpotent());
        assert!(p1.is_ring_morphism(&kk, &k) && p2.is_ring_morphism(&kk, &k));
        let e = kk.basis_vector(1);
        assert_eq!(kk.mul(&e, &e), e);

        let dual = over_p("Q[x]/(x^2)");
        let (d, q1, q2) = algebra_product(&dual, &k).unwrap();
        assert_eq!(d.dim(), 3);
        assert!(d.is_associative());
        assert!(q1.is_ring_morphism(&d, &dual) && q2.is_ring_morphism(&d, &k));
    }

    #[test]
    fn mult_matrices() {
        let a = over_p("Q[x]/(x^3)");
        let f = *a.field();
        let id = a.mult_matrix(&a.one());
        for (i, row) in id.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                assert_eq!(*c, if i == j { 1 } else { 0 });
            }
        }
        let shift = a.mult_matrix(&a.basis_vector(1));
        assert_eq!(shift, vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0]]);
        let (p, _) = a.char_poly(&a.basis_vector(1));
        assert_eq!(p, vec![0, 0, 0, 1]);

        let k = StructureAlgebra::base_field(f);
        let (kk, _, _) = algebra_product(&k, &k).unwrap();
        // (2,3) = 2·(1,1) + (0,1)
        let a23 = vec![2, 1];
        let m = kk.mult_matrix(&a23);
        let (p, s) = kk.char_poly(&a23);
        assert_eq!(p, vec![6, f.from_i64(-5), 1]);
        assert_eq!(s, vec![5, 6]);
        assert_eq!(m, vec![vec![2, 0], vec![1, 3]]);
    }

    #[test]
    fn diagonal_char_poly() {
        let f = PrimeField::new(101).unwrap();
        let k = StructureAlgebra::base_field(f);
        let (k2, _, _) = algebra_product(&k, &k).unwrap();
        let (k3, _, _) = algebra_product(&k2, &k).unwrap();
        // (1,2,3) = (1,1,1) + (0,1,0) + 2·(0,0,1)
        let (p, _) = k3.char_poly(&[1, 1, 2]);
        assert_eq!(p, vec![f.from_i64(-6), 11, f.from_i64(-6), 1]);
    }

    #[test]
    fn local_detection() {
        assert!(over_p("Q[x]/(x^6)").is_local_nilpotent());
        assert!(!over_p("Q[x]/(x^2-x)").is_local_nilpotent());
    }

    #[test]
    fn monic_extension_of_field() {
        let f = PrimeField::new(7).unwrap();
        let k = StructureAlgebra::base_field(f);
        // X^2 + 1
        let ext = k.monic_extension(&[vec![1], vec![0]], "x").unwrap();
        assert_eq!(ext.dim(), 2);
        assert_eq!(ext.labels(), ["1", "x"]);
        let x = ext.basis_vector(1);
        assert_eq!(ext.mul(&x, &x), vec![6, 0]);
        assert!(ext.is_associative());
    }
}
