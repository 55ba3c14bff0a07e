use closurelab::arith::{PrimeField, Ring};
use closurelab::cli::verify::cofactor_det;
use closurelab::closure::{
    closure_dimension, etale_closure_dim, falling_factorial, monogenic_algebra, monogenic_tower, product_formula_dim,
    transform_monic, Method, DEFAULT_BUDGET,
};
use closurelab::finalg::{algebra_from_presentation, algebra_product, berkowitz, StructureAlgebra};
use closurelab::multipoly::parse_presentation;
use proptest::prelude::*;

fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn over(text: &str, f: &PrimeField) -> StructureAlgebra<PrimeField> {
    algebra_from_presentation(&parse_presentation(text).unwrap()).unwrap().map_field(f).unwrap()
}

/// `K[x,y]/(x^a, y^b, xy^c − k·y^{c+1})`, always local.
fn local_text(a: u32, b: u32, c: u32, k: i64) -> String {
    let sign = if k < 0 { '+' } else { '-' };
    format!("Q[x,y]/(x^{a}, y^{b}, x*y^{c} {sign} {}*y^{})", k.abs(), c + 1)
}

fn local_algebra() -> impl Strategy<Value = String> {
    (1u32..4, 1u32..4, 0u32..3, -3i64..4).prop_map(|(a, b, c, k)| local_text(a, b, c, k))
}

fn poly_mul(f: &PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            f.mul_add_assign(&mut out[i + j], x, y);
        }
    }
    out
}

/// `p(Z − c)` for ascending coefficients.
fn shift(f: &PrimeField, p: &[u64], c: u64) -> Vec<u64> {
    let lin = [f.neg(&c), 1];
    let mut out = vec![0];
    for coeff in p.iter().rev() {
        out = poly_mul(f, &out, &lin);
        out[0] = f.add(&out[0], coeff);
    }
    out.truncate(p.len());
    out
}

fn monic(coeffs: Vec<i64>, f: &PrimeField) -> Vec<u64> {
    let mut v: Vec<u64> = coeffs.into_iter().map(|c| f.from_i64(c)).collect();
    v.push(1);
    v
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn char_poly_of_shift(text in local_algebra(), coords in prop::collection::vec(0i64..101, 12), c in 0i64..101) {
        let f = gf(101);
        let a = over(&text, &f);
        let x: Vec<u64> = coords.iter().cycle().take(a.dim()).map(|&v| f.from_i64(v)).collect();
        let cu = f.from_i64(c);
        let shifted = a.add(&x, &a.scale(&cu, &a.one()));
        let (p, _) = a.char_poly(&x);
        let (q, _) = a.char_poly(&shifted);
        prop_assert_eq!(q, shift(&f, &p, cu));
    }

    #[test]
    fn berkowitz_agrees_with_cofactor_expansion(n in 1usize..6, entries in prop::collection::vec(0i64..101, 25), z in 0i64..101) {
        let f = gf(101);
        let m: Vec<Vec<u64>> = (0..n).map(|i| (0..n).map(|j| f.from_i64(entries[i * 5 + j])).collect()).collect();
        let zu = f.from_i64(z);
        let p = berkowitz(&f, &m);
        let value = p.iter().rev().fold(0, |acc, c| f.add(&f.mul(&acc, &zu), c));
        let shifted: Vec<Vec<u64>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { f.sub(&zu, &m[i][j]) } else { f.neg(&m[i][j]) }).collect())
            .collect();
        prop_assert_eq!(value, cofactor_det(&f, &shifted));
    }

    #[test]
    fn transform_is_multiplicative_in_f(
        f1 in prop::collection::vec(0i64..101, 1..4),
        f2 in prop::collection::vec(0i64..101, 1..4),
        g in prop::collection::vec(0i64..101, 1..5),
    ) {
        let f = gf(101);
        let (a, b) = (monic(f1, &f), monic(f2, &f));
        let g: Vec<u64> = g.into_iter().map(|c| f.from_i64(c)).collect();
        let whole = transform_monic(&f, &poly_mul(&f, &a, &b), &g).unwrap();
        let parts = poly_mul(&f, &transform_monic(&f, &a, &g).unwrap(), &transform_monic(&f, &b, &g).unwrap());
        prop_assert_eq!(whole, parts);
    }

    #[test]
    fn tower_matches_pipeline_over_gf7(coeffs in prop::collection::vec(0i64..7, 1..5), m in 0usize..4) {
        let f = gf(7);
        let poly = monic(coeffs, &f);
        let n = poly.len() - 1;
        prop_assume!(m <= n);
        let tower = monogenic_tower(&f, &poly, m).unwrap();
        let stats = closure_dimension(&monogenic_algebra(&f, &poly).unwrap(), m, Method::General, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(tower.algebra.dim() as u128, falling_factorial(n, m));
        prop_assert_eq!(stats.dim as u128, falling_factorial(n, m));
    }

    #[test]
    fn etale_dimensions(n in 1usize..6, m in 0usize..7) {
        let f = gf(7);
        let mut alg = StructureAlgebra::base_field(f);
        for _ in 1..n {
            alg = algebra_product(&alg, &StructureAlgebra::base_field(f)).unwrap().0;
        }
        let stats = closure_dimension(&alg, m, Method::General, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(stats.dim as u128, etale_closure_dim(n, m));
    }

    #[test]
    fn product_formula(left in local_algebra(), right in local_algebra(), m in 0usize..4) {
        let f = gf(101);
        let (a, b) = (over(&left, &f), over(&right, &f));
        prop_assume!(a.dim() + b.dim() <= 6);
        let dims = |alg: &StructureAlgebra<PrimeField>| -> Vec<u128> {
            (0..=m).map(|k| closure_dimension(alg, k, Method::General, DEFAULT_BUDGET).unwrap().dim as u128).collect()
        };
        let (product, _, _) = algebra_product(&a, &b).unwrap();
        let direct = closure_dimension(&product, m, Method::General, DEFAULT_BUDGET).unwrap().dim as u128;
        prop_assert_eq!(direct, product_formula_dim(&dims(&a), &dims(&b), m).unwrap());
    }

    #[test]
    fn local_schedule_agrees_with_general(text in local_algebra(), m in 1usize..4) {
        let f = gf(101);
        let a = over(&text, &f);
        prop_assume!(a.dim() <= 5);
        let general = closure_dimension(&a, m, Method::General, DEFAULT_BUDGET).unwrap().dim;
        let local = closure_dimension(&a, m, Method::Local, DEFAULT_BUDGET).unwrap().dim;
        prop_assert_eq!(general, local);
    }
}
