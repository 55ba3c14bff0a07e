use std::collections::BTreeMap;

use crate::arith::{Field, Ring};
use crate::error::{Error, Result};
use crate::finalg::{berkowitz, SparseVec, StructureAlgebra, TensorPower};
use crate::multipoly::{Monomial, MultiPoly, PolyRing};

/// The generic element `γ = Σ e_i X_i` of `A ⊗ K[X_1..X_n]` and its
/// characteristic polynomial.
#[derive(Debug, Clone)]
pub struct GenericCharData<F: Field> {
    ring: PolyRing<F>,
    /// `coeffs[k]` is the coefficient of `Z^k`; `coeffs[n] = 1`.
    coeffs: Vec<MultiPoly<F>>,
}

impl<F: Field> GenericCharData<F> {
    /// The ring `K[X_1..X_n]`.
    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `Z^k`.
    pub fn coeff(&self, k: usize) -> &MultiPoly<F> {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[MultiPoly<F>] {
        &self.coeffs
    }

    /// `P_a` for the element with coordinates `point`.
    pub fn specialize(&self, point: &[F::Elem]) -> Result<Vec<F::Elem>> {
        self.coeffs.iter().map(|c| c.evaluate(point)).collect()
    }
}

fn x_vars(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("X{i}")).collect()
}

/// `P_γ(Z) = det(Z − Σ_i X_i·m_{e_i})` by Berkowitz over `K[X]`.
pub fn generic_char_poly<F: Field>(a: &StructureAlgebra<F>) -> GenericCharData<F> {
    let n = a.dim();
    let ring = PolyRing::new(a.field().clone(), x_vars(n));
    let mut m = vec![vec![ring.zero_poly(); n]; n];
    for i in 0..n {
        let xi = Monomial::var(n, i);
        for j in 0..n {
            for (k, c) in a.product(i, j) {
                let t = ring.term(c.clone(), xi.clone());
                m[*k][j] = ring.add(&m[*k][j], &t);
            }
        }
    }
    let coeffs = berkowitz(&ring, &m);
    GenericCharData { ring, coeffs }
}

/// A polynomial in `X_1..X_n` with dense coefficient vectors in some
/// algebra (a tensor power or a closure).
#[derive(Debug, Clone)]
pub struct XPoly<E> {
    pub(crate) terms: BTreeMap<Monomial, Vec<E>>,
}

impl<E> XPoly<E> {
    pub fn zero() -> Self {
        XPoly { terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Vec<E>)> {
        self.terms.iter()
    }
}

/// A polynomial in `Z` over an algebra of `X`-polynomials, lowest power first.
pub type UnivariateOverAlgebra<E> = Vec<XPoly<E>>;

/// `p(X)·u` for a scalar polynomial `p` and an algebra element `u`.
pub(crate) fn scalar_times<F: Field>(p: &MultiPoly<F>, unit: &[F::Elem]) -> XPoly<F::Elem> {
    let f = p.ring().field();
    let terms = p.terms().map(|(m, c)| (m.clone(), unit.iter().map(|u| f.mul(c, u)).collect())).collect();
    XPoly { terms }
}

pub(crate) fn add_into<F: Field>(f: &F, acc: &mut XPoly<F::Elem>, p: &XPoly<F::Elem>) {
    for (m, v) in &p.terms {
        match acc.terms.get_mut(m) {
            Some(w) => {
                for (x, y) in w.iter_mut().zip(v) {
                    f.add_assign(x, y);
                }
            }
            None => {
                acc.terms.insert(m.clone(), v.clone());
            }
        }
    }
    acc.terms.retain(|_, v| v.iter().any(|c| !f.is_zero(c)));
}

/// Divide `q` by `Z − g` where `mul_g` multiplies by `g`; returns the
/// quotient and the remainder `q(g)`.
pub(crate) fn synthetic_division<F: Field>(
    f: &F,
    q: &[XPoly<F::Elem>],
    mul_g: impl Fn(&XPoly<F::Elem>) -> XPoly<F::Elem>,
) -> (UnivariateOverAlgebra<F::Elem>, XPoly<F::Elem>) {
    let d = q.len() - 1;
    let mut b: Vec<XPoly<F::Elem>> = vec![XPoly::zero(); d];
    if d == 0 {
        return (b, q[0].clone());
    }
    b[d - 1] = q[d].clone();
    for j in (1..d).rev() {
        let mut next = mul_g(&b[j]);
        add_into(f, &mut next, &q[j]);
        b[j - 1] = next;
    }
    let mut r = mul_g(&b[0]);
    add_into(f, &mut r, &q[0]);
    (b, r)
}

/// Append a slot holding the unit: index `i` of `A^{⊗s}` becomes `i·n`.
fn lift<F: Field>(f: &F, n: usize, p: &XPoly<F::Elem>) -> XPoly<F::Elem> {
    let terms = p
        .terms
        .iter()
        .map(|(m, v)| {
            let mut w = vec![f.zero(); v.len() * n];
            for (i, c) in v.iter().enumerate() {
                w[i * n] = c.clone();
            }
            (m.clone(), w)
        })
        .collect();
    XPoly { terms }
}

/// Multiply by `Σ_i X_i·ε_last(e_i)` in `A^{⊗s}[X]`, `i ≥ 1` when
/// `skip_unit`.
fn mul_gamma_last<F: Field>(a: &StructureAlgebra<F>, p: &XPoly<F::Elem>, skip_unit: bool) -> XPoly<F::Elem> {
    let f = a.field();
    let n = a.dim();
    let mut out: BTreeMap<Monomial, Vec<F::Elem>> = BTreeMap::new();
    for (m, v) in &p.terms {
        for i in usize::from(skip_unit)..n {
            let w = out.entry(m.mul_var(i)).or_insert_with(|| vec![f.zero(); v.len()]);
            for (idx, c) in v.iter().enumerate() {
                if f.is_zero(c) {
                    continue;
                }
                let d = idx % n;
                let base = idx - d;
                for (k, s) in a.product(i, d) {
                    f.mul_add_assign(&mut w[base + k], c, s);
                }
            }
        }
    }
    out.retain(|_, v| v.iter().any(|c| !f.is_zero(c)));
    XPoly { terms: out }
}

/// `Q_{s−1}(γ_s)` for s = 1..m, each an `X`-polynomial over `A^{⊗s}`, by
/// Horner division of `P_γ` by `Z − γ_1`, `Z − γ_2`, ….
pub fn divided_differences<F: Field>(
    a: &StructureAlgebra<F>,
    data: &GenericCharData<F>,
    m: usize,
) -> Vec<XPoly<F::Elem>> {
    let f = a.field();
    let unit = vec![f.one()];
    let mut q: UnivariateOverAlgebra<F::Elem> = data.coeffs().iter().map(|c| scalar_times(c, &unit)).collect();
    let mut out = Vec::with_capacity(m);
    for _ in 0..m {
        let lifted: Vec<XPoly<F::Elem>> = q.iter().map(|c| lift(f, a.dim(), c)).collect();
        let (quot, rem) = synthetic_division(f, &lifted, |p| mul_gamma_last(a, p, false));
        out.push(rem);
        q = quot;
    }
    out
}

fn embed_generators<F: Field>(a: &StructureAlgebra<F>, m: usize, polys: &[XPoly<F::Elem>]) -> Vec<SparseVec<F::Elem>> {
    let f = a.field();
    let n = a.dim();
    let mut out = Vec::new();
    for (s, p) in polys.iter().enumerate() {
        let shift = n.pow((m - s - 1) as u32);
        for (_, v) in p.terms() {
            let sparse: SparseVec<F::Elem> =
                v.iter().enumerate().filter(|(_, c)| !f.is_zero(c)).map(|(i, c)| (i * shift, c.clone())).collect();
            if !sparse.is_empty() {
                out.push(sparse);
            }
        }
    }
    out
}

/// Generators of `J^{(m)}` in `A^{⊗m}`: the `X`-coefficients of
/// `Q_{s−1}(γ_s)` for s = 1..m.
pub fn j_generators<F: Field>(a: &StructureAlgebra<F>, m: usize, budget: usize) -> Result<Vec<SparseVec<F::Elem>>> {
    TensorPower::new(a, m, budget)?;
    let data = generic_char_poly(a);
    Ok(embed_generators(a, m, &divided_differences(a, &data, m)))
}

/// For local `A`: the `X`-coefficients of `h_{n−s+1}(γ'_1..γ'_s)` for
/// s = 1..m, with `γ' = γ − X_1` and `h_d` the complete homogeneous sum.
pub fn local_generators<F: Field>(a: &StructureAlgebra<F>, m: usize, budget: usize) -> Result<Vec<SparseVec<F::Elem>>> {
    if !a.is_local_nilpotent() {
        return Err(Error::NotLocal);
    }
    TensorPower::new(a, m, budget)?;
    let n = a.dim();
    if m > n {
        return Err(Error::InvalidArgument(format!("m = {m} exceeds the dimension {n}")));
    }
    let f = a.field();
    let one = XPoly { terms: BTreeMap::from([(Monomial::one(n), vec![f.one()])]) };
    // h[d] = h_d(γ'_1..γ'_s) over A^{⊗s}
    let mut h: Vec<XPoly<F::Elem>> = (0..=n).map(|d| if d == 0 { one.clone() } else { XPoly::zero() }).collect();
    let mut out = Vec::with_capacity(m);
    for s in 1..=m {
        let top = n - s + 1;
        let mut next: Vec<XPoly<F::Elem>> = Vec::with_capacity(top + 1);
        next.push(lift(f, n, &h[0]));
        for d in 1..=top {
            let mut v = mul_gamma_last(a, &next[d - 1], true);
            add_into(f, &mut v, &lift(f, n, &h[d]));
            next.push(v);
        }
        out.push(next[top].clone());
        h = next;
    }
    Ok(embed_generators(a, m, &out))
}
