//! S-closures `A^{(m)} = A^{⊗m}/J^{(m)}` and related constructions.

mod generic;
mod naive;
mod pipeline;
mod tower;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use crate::arith::Field;
use crate::error::{Error, Result};
use crate::finalg::{ideal_span, AlgebraMap, Grading, Quotient, SparseVec, StructureAlgebra, TensorPower};

pub use generic::{
    divided_differences, generic_char_poly, j_generators, local_generators, GenericCharData, UnivariateOverAlgebra,
    XPoly,
};
pub use naive::{element_generators, naive_generators, NAIVE_ELEMENT_LIMIT};
pub use pipeline::{presentation_closure, presentation_closure_dim, Arithmetic, PresentationReport};
pub use tower::{
    falling_factorial, monogenic_algebra, monogenic_tower, tower_relations, transform_monic, IntegerTower,
    MonogenicTower,
};

/// Default cap on `n^m`.
pub const DEFAULT_BUDGET: usize = 20_000;

/// How the generators of `J^{(m)}` are produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Horner remainders of the generic characteristic polynomial.
    General,
    /// Complete homogeneous sums in `γ − X_1`; local algebras only.
    Local,
    /// Remainders for every element of a finite algebra.
    Naive,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::General => "general",
            Method::Local => "local",
            Method::Naive => "naive",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "general" => Ok(Method::General),
            "local" => Ok(Method::Local),
            "naive" => Ok(Method::Naive),
            _ => Err(Error::InvalidArgument(format!("unknown method `{s}` (expected general, local or naive)"))),
        }
    }
}

/// Dimension and bookkeeping of a closure computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureStats {
    pub m: usize,
    pub method: Method,
    pub dim: usize,
    /// Distinct nonzero seed vectors.
    pub generators: usize,
    /// Dimension of `J^{(m)}`.
    pub rank: usize,
    pub millis: u128,
}

/// A closure with its structure maps `α_1, …, α_m`.
#[derive(Debug, Clone)]
pub struct ClosureResult<F: Field> {
    pub source: StructureAlgebra<F>,
    pub stats: ClosureStats,
    pub closure: StructureAlgebra<F>,
    pub maps: Vec<AlgebraMap<F>>,
}

impl<F: Field> ClosureResult<F> {
    pub fn dim(&self) -> usize {
        self.stats.dim
    }

    pub fn m(&self) -> usize {
        self.stats.m
    }
}

fn seeds<F: Field>(a: &StructureAlgebra<F>, m: usize, method: Method, budget: usize) -> Result<Vec<SparseVec<F::Elem>>> {
    match method {
        Method::General => j_generators(a, m, budget),
        Method::Local => local_generators(a, m, budget),
        Method::Naive => naive_generators(a, m, budget),
    }
}

enum Trivial {
    BaseField,
    Zero,
}

fn trivial_case<F: Field>(a: &StructureAlgebra<F>, m: usize) -> Option<Trivial> {
    if m == 0 {
        Some(Trivial::BaseField)
    } else if m > a.dim() {
        Some(Trivial::Zero)
    } else {
        None
    }
}

fn span_for<F: Field>(
    a: &StructureAlgebra<F>,
    m: usize,
    method: Method,
    budget: usize,
) -> Result<(TensorPower<F>, crate::finalg::IdealSpan<F>)> {
    if method == Method::Local && !a.is_local_nilpotent() {
        return Err(Error::NotLocal);
    }
    let tp = TensorPower::new(a, m, budget)?;
    let gens = seeds(a, m, method, budget)?;
    let grading = (method != Method::Naive).then(|| Grading::detect(a));
    let span = ideal_span(&tp, grading.as_ref(), &gens);
    Ok((tp, span))
}

/// `dim A^{(m)}` without building the quotient multiplication table.
pub fn closure_dimension<F: Field>(
    a: &StructureAlgebra<F>,
    m: usize,
    method: Method,
    budget: usize,
) -> Result<ClosureStats> {
    let start = Instant::now();
    if method == Method::Naive {
        naive::check_finite(a)?;
    }
    let (dim, generators, rank) = match trivial_case(a, m) {
        Some(Trivial::BaseField) => (1, 0, 0),
        Some(Trivial::Zero) => (0, 0, a.dim().saturating_pow(m as u32)),
        None => {
            let (tp, span) = span_for(a, m, method, budget)?;
            (tp.dim() - span.rank(), span.seed_count(), span.rank())
        }
    };
    Ok(ClosureStats { m, method, dim, generators, rank, millis: start.elapsed().as_millis() })
}

/// The closure with its maps, using the given generator schedule. Each
/// `α_s` is checked to be a ring morphism.
pub fn closure_with<F: Field>(
    a: &StructureAlgebra<F>,
    m: usize,
    method: Method,
    budget: usize,
) -> Result<ClosureResult<F>> {
    let start = Instant::now();
    if method == Method::Naive {
        naive::check_finite(a)?;
    }
    let f = a.field().clone();
    let n = a.dim();
    let (closure, maps, generators, rank) = match trivial_case(a, m) {
        Some(Trivial::BaseField) => (StructureAlgebra::base_field(f), Vec::new(), 0, 0),
        Some(Trivial::Zero) => {
            let zero = StructureAlgebra::zero_algebra(f);
            let maps = (0..m).map(|_| AlgebraMap::new(vec![Vec::new(); n], 0)).collect::<Result<Vec<_>>>()?;
            (zero, maps, 0, n.saturating_pow(m as u32))
        }
        None => {
            let (tp, span) = span_for(a, m, method, budget)?;
            let (generators, rank) = (span.seed_count(), span.rank());
            let mut q = Quotient::build(&tp, span)?;
            let maps = q.slot_maps(&tp);
            (q.algebra, maps, generators, rank)
        }
    };
    for (s, map) in maps.iter().enumerate() {
        if !map.is_ring_morphism(a, &closure) {
            return Err(Error::CertificateFailure(format!("α_{} is not a ring morphism", s + 1)));
        }
    }
    let stats = ClosureStats { m, method, dim: closure.dim(), generators, rank, millis: start.elapsed().as_millis() };
    Ok(ClosureResult { source: a.clone(), stats, closure, maps })
}

/// `A^{(m)}` by the general schedule within [`DEFAULT_BUDGET`].
pub fn s_closure<F: Field>(a: &StructureAlgebra<F>, m: usize) -> Result<ClosureResult<F>> {
    closure_with(a, m, Method::General, DEFAULT_BUDGET)
}

/// The naive closure of an algebra over a finite field.
pub fn naive_closure<F: Field>(a: &StructureAlgebra<F>, m: usize) -> Result<ClosureResult<F>> {
    closure_with(a, m, Method::Naive, DEFAULT_BUDGET)
}

/// Certify that `∏_s (Z − α_s(γ))` divides `P_γ(Z)` over `C[X]`.
pub fn divides_check<F: Field>(result: &ClosureResult<F>) -> Result<()> {
    let c = &result.closure;
    let a = &result.source;
    if result.m() == 0 || c.dim() == 0 {
        return Ok(());
    }
    let f = c.field();
    let data = generic_char_poly(a);
    let unit = c.one();
    let mut q: Vec<XPoly<F::Elem>> = data.coeffs().iter().map(|p| generic::scalar_times(p, &unit)).collect();
    for (s, map) in result.maps.iter().enumerate() {
        let images = map.images();
        let mul_g = |p: &XPoly<F::Elem>| {
            let mut out = XPoly::zero();
            for (mono, v) in p.terms() {
                for (i, img) in images.iter().enumerate() {
                    let prod = c.mul(img, v);
                    if prod.iter().any(|x| !f.is_zero(x)) {
                        let term = XPoly { terms: [(mono.mul_var(i), prod)].into_iter().collect() };
                        generic::add_into(f, &mut out, &term);
                    }
                }
            }
            out
        };
        let (quot, rem) = generic::synthetic_division(f, &q, mul_g);
        if !rem.is_zero() {
            return Err(Error::CertificateFailure(format!(
                "Z − α_{}(γ) leaves a nonzero remainder with {} terms",
                s + 1,
                rem.terms().count()
            )));
        }
        q = quot;
    }
    Ok(())
}

/// For a closure with `m = n − 1`: whether `a ↦ s_1(a) − Σ_s α_s(a)` is
/// multiplicative on basis pairs.
pub fn complementary_map_is_multiplicative<F: Field>(result: &ClosureResult<F>) -> Result<bool> {
    let a = &result.source;
    let c = &result.closure;
    let n = a.dim();
    if n == 0 || result.m() + 1 != n {
        return Err(Error::InvalidArgument(format!("needs m = n − 1, got m = {} for n = {n}", result.m())));
    }
    let f = a.field();
    let beta = |v: &[F::Elem]| -> Vec<F::Elem> {
        let trace = a.char_poly(v).1[0].clone();
        let mut out = c.scale(&trace, &c.one());
        for map in &result.maps {
            let img = map.apply(f, v);
            out = out.iter().zip(&img).map(|(x, y)| f.sub(x, y)).collect();
        }
        out
    };
    let images: Vec<Vec<F::Elem>> = (0..n).map(|i| beta(&a.basis_vector(i))).collect();
    for i in 0..n {
        for j in i..n {
            let lhs = beta(&a.to_dense(a.product(i, j)));
            if lhs != c.mul(&images[i], &images[j]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `n(n−1)⋯(n−m+1)`, the closure dimension of `K^n`.
pub fn etale_closure_dim(n: usize, m: usize) -> u128 {
    falling_factorial(n, m)
}

/// `Σ_k C(m,k)·dims_a[k]·dims_b[m−k]`, the closure dimension of `A×B`.
pub fn product_formula_dim(dims_a: &[u128], dims_b: &[u128], m: usize) -> Result<u128> {
    if dims_a.len() <= m || dims_b.len() <= m {
        return Err(Error::LengthMismatch(format!(
            "need closure dimensions for 0..={m}, got {} and {}",
            dims_a.len(),
            dims_b.len()
        )));
    }
    let mut binom: u128 = 1;
    let mut total = 0;
    for k in 0..=m {
        total += binom * dims_a[k] * dims_b[m - k];
        binom = binom * (m - k) as u128 / (k + 1) as u128;
    }
    Ok(total)
}
