use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::manifest::Manifest;
use crate::arith::{ExtensionField, Field, PrimeField, Rationals, Ring};
use crate::closure::{
    closure_dimension, closure_with, complementary_map_is_multiplicative, divides_check, etale_closure_dim,
    falling_factorial, monogenic_algebra, monogenic_tower, product_formula_dim, transform_monic, IntegerTower, Method,
};
use crate::error::{Error, Result};
use crate::finalg::{algebra_from_presentation, algebra_product, berkowitz, StructureAlgebra};
use crate::multipoly::{parse_poly, parse_presentation, PolyRing};
use num_bigint::BigInt;
use num_rational::BigRational;

/// A named group of property checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Suite {
    /// `m = 0, 1, n−1 = n, > n` identities and non-vanishing.
    Trivial,
    /// Closure of a product against the product formula.
    Product,
    /// Monogenic towers against falling factorials and the general pipeline.
    Monogenic,
    /// `K^n` closures against the count of injections.
    Etale,
    /// Naive closure of `F2[x1..x4]/(x1..x4)^2` over `F2` and `F4`.
    Naive,
    /// Multiplicativity and root behaviour of the monic transform.
    Transform,
    /// Berkowitz against cofactor expansion.
    Berkowitz,
    /// The `n² − 3` family and the `a^t = 0` criterion.
    Family,
    /// Divisibility certificates on every closure of the catalog.
    Certificate,
    All,
}

impl Suite {
    pub const EACH: [Suite; 9] = [
        Suite::Trivial,
        Suite::Product,
        Suite::Monogenic,
        Suite::Etale,
        Suite::Naive,
        Suite::Transform,
        Suite::Berkowitz,
        Suite::Family,
        Suite::Certificate,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Trivial => "trivial",
            Suite::Product => "product",
            Suite::Monogenic => "monogenic",
            Suite::Etale => "etale",
            Suite::Naive => "naive",
            Suite::Transform => "transform",
            Suite::Berkowitz => "berkowitz",
            Suite::Family => "family",
            Suite::Certificate => "certificate",
            Suite::All => "all",
        }
    }
}

/// Outcome of one property.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: String,
    pub property: String,
    pub ok: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Characteristic used for catalog algebras defined over `ℚ`.
    pub prime: u64,
    pub budget: usize,
}

struct Recorder {
    suite: Suite,
    checks: Vec<Check>,
}

impl Recorder {
    fn new(suite: Suite) -> Self {
        Recorder { suite, checks: Vec::new() }
    }

    fn check(&mut self, property: impl Into<String>, body: impl FnOnce() -> Result<(bool, String)>) {
        let (ok, detail) = body().unwrap_or_else(|e| (false, e.to_string()));
        self.checks.push(Check { suite: self.suite.name().into(), property: property.into(), ok, detail });
    }
}

/// Run one suite, or all of them.
pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<Vec<Check>> {
    if suite == Suite::All {
        let mut out = Vec::new();
        for s in Suite::EACH {
            out.extend(run_suite(s, opts)?);
        }
        return Ok(out);
    }
    let p = PrimeField::new(opts.prime)?;
    let mut rec = Recorder::new(suite);
    match suite {
        Suite::Trivial => trivial(&mut rec, &p, opts)?,
        Suite::Product => product(&mut rec, &p, opts)?,
        Suite::Monogenic => monogenic(&mut rec, opts)?,
        Suite::Etale => etale(&mut rec, &p, opts),
        Suite::Naive => naive(&mut rec, opts)?,
        Suite::Transform => transform(&mut rec, opts)?,
        Suite::Berkowitz => berkowitz_suite(&mut rec, opts),
        Suite::Family => family(&mut rec, &p, opts)?,
        Suite::Certificate => certificate(&mut rec, &p, opts)?,
        Suite::All => unreachable!(),
    }
    Ok(rec.checks)
}

fn over<F: Field>(text: &str, field: &F) -> Result<StructureAlgebra<F>> {
    algebra_from_presentation(&parse_presentation(text)?)?.map_field(field)
}

/// Table 1 plus a few non-local algebras, reduced modulo `p`.
pub fn catalog(p: &PrimeField) -> Result<Vec<(String, StructureAlgebra<PrimeField>)>> {
    let mut out = Vec::new();
    for e in Manifest::table1().entries {
        let alg = algebra_from_presentation(&e.presentation()?)?.map_field(p)?;
        out.push((format!("{} {}", e.name, e.ideal.as_deref().unwrap_or("")), alg));
    }
    for text in ["Q[x]/(x^2)", "Q[x]/(x^2 - 1)", "Q[x]/(x^3 - x)", "Q[x,y]/(x^2 - x, y^2)"] {
        out.push((text.to_string(), over(text, p)?));
    }
    Ok(out)
}

fn dense_rank<F: Field>(f: &F, mut rows: Vec<Vec<F::Elem>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !f.is_zero(&rows[r][c])) else { continue };
        rows.swap(rank, pivot);
        let inv = f.inv(&rows[rank][c]).expect("nonzero pivot");
        let pivot_row: Vec<F::Elem> = rows[rank].iter().map(|x| f.mul(x, &inv)).collect();
        for r in 0..rows.len() {
            if r != rank && !f.is_zero(&rows[r][c]) {
                let factor = rows[r][c].clone();
                for (x, y) in rows[r].iter_mut().zip(&pivot_row) {
                    *x = f.sub(x, &f.mul(&factor, y));
                }
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
    }
    rank
}

fn trivial(rec: &mut Recorder, p: &PrimeField, opts: &VerifyOptions) -> Result<()> {
    for (name, a) in catalog(p)? {
        let n = a.dim();
        rec.check(format!("{name}: m = 0 gives the base field"), || {
            let r = closure_with(&a, 0, Method::General, opts.budget)?;
            Ok((r.dim() == 1 && r.maps.is_empty(), format!("dim {}", r.dim())))
        });
        rec.check(format!("{name}: m = 1 gives A"), || {
            let r = closure_with(&a, 1, Method::General, opts.budget)?;
            let rank = dense_rank(p, r.maps[0].images().to_vec());
            Ok((r.dim() == n && rank == n, format!("dim {}, rank of α_1 {rank}, n = {n}", r.dim())))
        });
        rec.check(format!("{name}: m = n + 1 gives zero"), || {
            let d = closure_dimension(&a, n + 1, Method::General, opts.budget)?.dim;
            Ok((d == 0, format!("dim {d}")))
        });
        rec.check(format!("{name}: non-vanishing for 1 ≤ m ≤ n"), || {
            let dims = (1..=n)
                .map(|m| closure_dimension(&a, m, Method::General, opts.budget).map(|s| s.dim))
                .collect::<Result<Vec<_>>>()?;
            Ok((dims.iter().all(|d| *d > 0), format!("dims {dims:?}")))
        });
        if n >= 2 {
            rec.check(format!("{name}: A^(n−1) ≅ A^(n)"), || {
                let below = closure_with(&a, n - 1, Method::General, opts.budget)?;
                let top = closure_dimension(&a, n, Method::General, opts.budget)?.dim;
                let mult = complementary_map_is_multiplicative(&below)?;
                Ok((
                    below.dim() == top && mult,
                    format!("dims {} and {top}, complementary map multiplicative: {mult}", below.dim()),
                ))
            });
        }
    }
    Ok(())
}

fn dims_up_to(a: &StructureAlgebra<PrimeField>, m: usize, budget: usize) -> Result<Vec<u128>> {
    (0..=m).map(|k| closure_dimension(a, k, Method::General, budget).map(|s| s.dim as u128)).collect()
}

fn product(rec: &mut Recorder, p: &PrimeField, opts: &VerifyOptions) -> Result<()> {
    let mut factors = vec![("K".to_string(), StructureAlgebra::base_field(*p))];
    for text in [
        "Q[x]/(x^2)",
        "Q[x]/(x^3)",
        "Q[x,y]/((x,y)^2)",
        "Q[x]/(x^2 - 1)",
        "Q[x]/(x^4)",
        "Q[x,y]/(x^2, y^2)",
        "Q[x,y]/(x^3, y^2, xy)",
        "Q[x,y,z]/((x,y,z)^2)",
        "Q[x]/(x^5)",
    ] {
        factors.push((text.to_string(), over(text, p)?));
    }
    for i in 0..factors.len() {
        for j in i..factors.len() {
            let (na, a) = &factors[i];
            let (nb, b) = &factors[j];
            if a.dim() + b.dim() > 6 {
                continue;
            }
            rec.check(format!("{na} × {nb}"), || {
                let (ab, _, _) = algebra_product(a, b)?;
                let (da, db) = (dims_up_to(a, 3, opts.budget)?, dims_up_to(b, 3, opts.budget)?);
                let mut direct = Vec::new();
                let mut formula = Vec::new();
                for m in 0..=3 {
                    direct.push(closure_dimension(&ab, m, Method::General, opts.budget)?.dim as u128);
                    formula.push(product_formula_dim(&da, &db, m)?);
                }
                Ok((direct == formula, format!("direct {direct:?}, formula {formula:?}")))
            });
        }
    }
    Ok(())
}

fn random_monic<F: Field>(f: &F, rng: &mut ChaCha8Rng, degree: usize, modulus: i64) -> Vec<F::Elem> {
    let mut out: Vec<F::Elem> = (0..degree).map(|_| f.from_i64(rng.gen_range(0..modulus))).collect();
    out.push(f.one());
    out
}

fn monogenic(rec: &mut Recorder, opts: &VerifyOptions) -> Result<()> {
    let f7 = PrimeField::new(7)?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for case in 0..40 {
        let degree = rng.gen_range(1..=4);
        let m = rng.gen_range(0..=degree.min(3));
        let f = random_monic(&f7, &mut rng, degree, 7);
        rec.check(format!("GF(7) case {case}: f = {f:?}, m = {m}"), || {
            let tower = monogenic_tower(&f7, &f, m)?;
            let expected = falling_factorial(degree, m) as usize;
            let morphisms = tower.maps.iter().all(|a| a.is_ring_morphism(&tower.base, &tower.algebra));
            let pipeline = closure_dimension(&monogenic_algebra(&f7, &f)?, m, Method::General, opts.budget)?.dim;
            let ok = tower.algebra.dim() == expected && pipeline == expected && morphisms;
            Ok((ok, format!("tower {}, pipeline {pipeline}, expected {expected}", tower.algebra.dim())))
        });
    }
    for (f, m, rank) in [(vec![1, 0, 0, 0, 1], 3, 24u128), (vec![1, 1, 1], 2, 2), (vec![-2, 0, 0, 1], 3, 6)] {
        rec.check(format!("integral tower of {f:?}, m = {m}"), || {
            let coeffs: Vec<BigInt> = f.iter().map(|c| BigInt::from(*c)).collect();
            let t = IntegerTower::new(&coeffs, m)?;
            let integral = t.relations.iter().all(|r| r.terms().all(|(_, c)| c.is_integer()));
            let reduced = t.base_change(&PrimeField::new(7)?)?.algebra.dim() as u128;
            Ok((t.rank == rank && integral && reduced == rank, format!("rank {}, GF(7) dimension {reduced}", t.rank)))
        });
    }
    Ok(())
}

fn etale(rec: &mut Recorder, p: &PrimeField, opts: &VerifyOptions) {
    for n in 1..=5 {
        rec.check(format!("K^{n}"), || {
            let mut alg = StructureAlgebra::base_field(*p);
            for _ in 1..n {
                alg = algebra_product(&alg, &StructureAlgebra::base_field(*p))?.0;
            }
            let dims = (0..=n + 1)
                .map(|m| closure_dimension(&alg, m, Method::General, opts.budget).map(|s| s.dim as u128))
                .collect::<Result<Vec<_>>>()?;
            let want: Vec<u128> = (0..=n + 1).map(|m| etale_closure_dim(n, m)).collect();
            Ok((dims == want, format!("dims {dims:?}, injections {want:?}")))
        });
    }
}

/// Dimensions printed for the naive closure of `F2[x1..x4]/(x1..x4)^2`, `m = 3`.
pub const PRINTED_NAIVE_F2: usize = 110;
pub const PRINTED_NAIVE_F4: usize = 105;

fn naive(rec: &mut Recorder, opts: &VerifyOptions) -> Result<()> {
    let text = "F2[x1,x2,x3,x4]/((x1,x2,x3,x4)^2)";
    let f2 = PrimeField::new(2)?;
    let f4 = ExtensionField::with_default_modulus(2, 2)?;
    let a2 = over(text, &f2)?;
    let a4 = over(text, &f4)?;
    rec.check(format!("naive closure over F2 is {PRINTED_NAIVE_F2}"), || {
        let d = closure_dimension(&a2, 3, Method::Naive, opts.budget)?.dim;
        Ok((d == PRINTED_NAIVE_F2, format!("dim {d}")))
    });
    rec.check(format!("naive closure over F4 is {PRINTED_NAIVE_F4}"), || {
        let d = closure_dimension(&a4, 3, Method::Naive, opts.budget)?.dim;
        Ok((d == PRINTED_NAIVE_F4, format!("dim {d}")))
    });
    rec.check("true closure agrees over F2 and F4", || {
        let d2 = closure_dimension(&a2, 3, Method::General, opts.budget)?.dim;
        let d4 = closure_dimension(&a4, 3, Method::General, opts.budget)?.dim;
        Ok((d2 == d4, format!("{d2} and {d4}")))
    });
    rec.check("naive closure changes under base change", || {
        let d2 = closure_dimension(&a2, 3, Method::Naive, opts.budget)?.dim;
        let d4 = closure_dimension(&a4, 3, Method::Naive, opts.budget)?.dim;
        Ok((d2 != d4, format!("{d2} and {d4}")))
    });
    rec.check("naive closure over Q is refused", || {
        let a = over("Q[x]/(x^2)", &Rationals)?;
        let r = closure_dimension(&a, 2, Method::Naive, opts.budget);
        Ok((r == Err(Error::InfiniteFieldUnsupported), format!("{r:?}")))
    });
    Ok(())
}

fn poly_mul<R: Ring>(ring: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    let mut out = vec![ring.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            ring.mul_add_assign(&mut out[i + j], x, y);
        }
    }
    out
}

fn eval<R: Ring>(ring: &R, coeffs: &[R::Elem], t: &R::Elem) -> R::Elem {
    coeffs.iter().rev().fold(ring.zero(), |acc, c| ring.add(&ring.mul(&acc, t), c))
}

fn transform(rec: &mut Recorder, opts: &VerifyOptions) -> Result<()> {
    let f = PrimeField::new(101)?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x7261_6e73);
    let mut failures = Vec::new();
    for case in 0..200 {
        let (da, db) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let a = random_monic(&f, &mut rng, da, 101);
        let b = random_monic(&f, &mut rng, db, 101);
        let g: Vec<u64> = (0..rng.gen_range(1..=4)).map(|_| rng.gen_range(0..101)).collect();
        let lhs = transform_monic(&f, &poly_mul(&f, &a, &b), &g)?;
        let rhs = poly_mul(&f, &transform_monic(&f, &a, &g)?, &transform_monic(&f, &b, &g)?);
        if lhs != rhs {
            failures.push(case);
        }
    }
    rec.check("multiplicative on 200 random triples over GF(101)", || {
        Ok((failures.is_empty(), format!("failing cases {failures:?}")))
    });
    let mut bad = Vec::new();
    for case in 0..50 {
        let roots: Vec<u64> = (0..rng.gen_range(1..=5)).map(|_| rng.gen_range(0..101)).collect();
        let g: Vec<u64> = (0..rng.gen_range(1..=4)).map(|_| rng.gen_range(0..101)).collect();
        let split = |rs: &[u64]| rs.iter().fold(vec![1], |acc, r| poly_mul(&f, &acc, &[f.neg(r), 1]));
        let images: Vec<u64> = roots.iter().map(|r| eval(&f, &g, r)).collect();
        if transform_monic(&f, &split(&roots), &g)? != split(&images) {
            bad.push(case);
        }
    }
    rec.check("maps ∏(Z − a_i) to ∏(Z − g(a_i)) on 50 split cases", || {
        Ok((bad.is_empty(), format!("failing cases {bad:?}")))
    });
    rec.check("squaring the roots of a generic cubic", || {
        let ring = PolyRing::new(Rationals, vec!["r1".into(), "r2".into(), "r3".into()]);
        let p = |s: &str| parse_poly(s, &ring);
        let f = vec![p("-r3")?, p("r2")?, p("-r1")?, p("1")?];
        let g = vec![p("0")?, p("0")?, p("1")?];
        let want = vec![p("-r3^2")?, p("r2^2 - 2r1r3")?, p("-(r1^2 - 2r2)")?, p("1")?];
        let got = transform_monic(&ring, &f, &g)?;
        let shown: Vec<String> = got.iter().map(|c| c.to_string()).collect();
        Ok((got == want, format!("coefficients {shown:?}")))
    });
    Ok(())
}

/// `det(M)` by cofactor expansion along the first row.
pub fn cofactor_det<R: Ring>(ring: &R, m: &[Vec<R::Elem>]) -> R::Elem {
    let n = m.len();
    if n == 0 {
        return ring.one();
    }
    let mut total = ring.zero();
    for j in 0..n {
        if ring.is_zero(&m[0][j]) {
            continue;
        }
        let minor: Vec<Vec<R::Elem>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = ring.mul(&m[0][j], &cofactor_det(ring, &minor));
        total = if j % 2 == 0 { ring.add(&total, &term) } else { ring.sub(&total, &term) };
    }
    total
}

fn char_poly_agrees<R: Ring>(ring: &R, m: &[Vec<R::Elem>], t: &R::Elem) -> bool {
    let shifted: Vec<Vec<R::Elem>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter().enumerate().map(|(j, x)| if i == j { ring.sub(t, x) } else { ring.neg(x) }).collect()
        })
        .collect();
    eval(ring, &berkowitz(ring, m), t) == cofactor_det(ring, &shifted)
}

fn berkowitz_suite(rec: &mut Recorder, opts: &VerifyOptions) {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x6265_726b);
    let f = PrimeField::new(101).expect("101 is prime");
    let mut bad = Vec::new();
    for case in 0..100 {
        let n = rng.gen_range(1..=6);
        let m: Vec<Vec<u64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(0..101)).collect()).collect();
        let t = rng.gen_range(0..101);
        if !char_poly_agrees(&f, &m, &t) {
            bad.push(case);
        }
    }
    rec.check("GF(101), 100 random matrices up to 6×6", || Ok((bad.is_empty(), format!("failing cases {bad:?}"))));
    let mut bad = Vec::new();
    for case in 0..40 {
        let n = rng.gen_range(1..=5);
        let q = |x: i64| BigRational::from_integer(BigInt::from(x));
        let m: Vec<Vec<BigRational>> = (0..n).map(|_| (0..n).map(|_| q(rng.gen_range(-5..=5))).collect()).collect();
        let t = BigRational::new(BigInt::from(rng.gen_range(-9..=9)), BigInt::from(rng.gen_range(1..=4)));
        if !char_poly_agrees(&Rationals, &m, &t) {
            bad.push(case);
        }
    }
    rec.check("Q, 40 random integer matrices up to 5×5", || Ok((bad.is_empty(), format!("failing cases {bad:?}"))));
}

/// The `n`-dimensional algebra of the `n² − 3` family.
pub fn family_presentation(n: usize) -> String {
    if n.is_multiple_of(2) {
        format!("Q[x,y]/(x^{}, y^{}, xy)", n / 2 + 1, n / 2)
    } else {
        format!("Q[x,y]/(x^{}, y^{}, xy)", n.div_ceil(2), n.div_ceil(2))
    }
}

fn family(rec: &mut Recorder, p: &PrimeField, opts: &VerifyOptions) -> Result<()> {
    for n in 3..=8 {
        let text = family_presentation(n);
        let a = over(&text, p)?;
        rec.check(format!("{text}: dim A^(2) = n² − 3"), || {
            let d = closure_dimension(&a, 2, Method::General, opts.budget)?.dim;
            Ok((a.dim() == n && d == n * n - 3, format!("n = {}, dim {d}", a.dim())))
        });
    }
    let a = over("Q[x1,x2,x3,x4]/((x1,x2,x3,x4)^2)", p)?;
    rec.check("a^2 = 0 on the maximal ideal, n = 5, m = 2: A^(2) = A⊗A", || {
        let d = closure_dimension(&a, 2, Method::General, opts.budget)?.dim;
        Ok((d == 25, format!("dim {d}")))
    });
    Ok(())
}

fn certificate(rec: &mut Recorder, p: &PrimeField, opts: &VerifyOptions) -> Result<()> {
    let mut algebras = catalog(p)?;
    for n in 3..=8 {
        let text = family_presentation(n);
        algebras.push((text.clone(), over(&text, p)?));
    }
    for (name, a) in &algebras {
        let top = if a.dim() <= 5 { a.dim() + 1 } else { 2 };
        rec.check(format!("{name}: m = 0..={top}"), || {
            for m in 0..=top {
                let r = closure_with(a, m, Method::General, opts.budget)?;
                divides_check(&r)?;
            }
            Ok((true, String::new()))
        });
    }
    let a = over("F2[x,y]/(x^2, y^2)", &PrimeField::new(2)?)?;
    rec.check("F2[x,y]/(x^2, y^2): m = 2, 3", || {
        let mut dims = Vec::new();
        for m in [2, 3] {
            let r = closure_with(&a, m, Method::General, opts.budget)?;
            divides_check(&r)?;
            dims.push(r.dim());
        }
        Ok((true, format!("dims {dims:?}")))
    });
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> VerifyOptions {
        VerifyOptions { seed: 0, prime: crate::arith::DEFAULT_PRIMES[0], budget: crate::closure::DEFAULT_BUDGET }
    }

    #[test]
    fn cofactor_expansion() {
        let f = PrimeField::new(101).unwrap();
        assert_eq!(cofactor_det(&f, &[vec![1, 2], vec![3, 4]]), f.from_i64(-2));
        assert_eq!(cofactor_det(&f, &[]), 1);
    }

    #[test]
    fn dense_rank_of_singular_matrix() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(dense_rank(&f, vec![vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(dense_rank(&f, vec![vec![0, 1], vec![1, 0]]), 2);
    }

    #[test]
    fn family_dimensions() {
        assert_eq!(family_presentation(8), "Q[x,y]/(x^5, y^4, xy)");
        assert_eq!(family_presentation(7), "Q[x,y]/(x^4, y^4, xy)");
    }

    #[test]
    fn fast_suites_pass() {
        for s in [Suite::Etale, Suite::Transform, Suite::Berkowitz, Suite::Family] {
            let checks = run_suite(s, &opts()).unwrap();
            assert!(!checks.is_empty());
            for c in checks {
                assert!(c.ok, "{} / {}: {}", c.suite, c.property, c.detail);
            }
        }
    }

    #[test]
    fn seeds_are_deterministic() {
        let a = run_suite(Suite::Monogenic, &opts()).unwrap();
        let b = run_suite(Suite::Monogenic, &opts()).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().all(|c| c.ok));
    }
}
