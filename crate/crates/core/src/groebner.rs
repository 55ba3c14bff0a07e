//! Buchberger's algorithm over grevlex, normal forms and standard monomials.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::arith::{DynField, Field};
use crate::error::{Error, Result};
use crate::multipoly::{AlgebraPresentation, Monomial, MultiPoly, PolyRing};

/// Default ceiling on the number of S-pairs processed.
pub const DEFAULT_PAIR_BUDGET: usize = 200_000;

/// A reduced Gröbner basis, sorted by ascending leading monomial.
#[derive(Debug, Clone)]
pub struct GroebnerBasis<F: Field> {
    ring: PolyRing<F>,
    basis: Vec<MultiPoly<F>>,
}

#[derive(PartialEq, Eq, PartialOrd, Ord)]
struct Pair {
    sugar: u32,
    lcm: Monomial,
    i: usize,
    j: usize,
}

/// Reduced Gröbner basis of the relation ideal of a presentation.
pub fn buchberger(pres: &AlgebraPresentation) -> Result<GroebnerBasis<DynField>> {
    groebner_basis(&pres.ring(), &pres.relations, DEFAULT_PAIR_BUDGET)
}

/// Reduced Gröbner basis of the ideal generated by `gens`, processing at
/// most `max_pairs` S-pairs.
pub fn groebner_basis<F: Field>(ring: &PolyRing<F>, gens: &[MultiPoly<F>], max_pairs: usize) -> Result<GroebnerBasis<F>> {
    if gens.iter().any(|g| g.ring() != ring) {
        return Err(Error::RingMismatch);
    }
    let mut basis: Vec<MultiPoly<F>> = Vec::new();
    let mut sugar: Vec<u32> = Vec::new();
    let mut queue: BinaryHeap<Reverse<Pair>> = BinaryHeap::new();

    let add = |p: MultiPoly<F>, s: u32, basis: &mut Vec<MultiPoly<F>>, sugar: &mut Vec<u32>, queue: &mut BinaryHeap<Reverse<Pair>>| {
        let p = p.make_monic();
        let j = basis.len();
        let lt = p.leading_monomial().expect("nonzero").clone();
        for (i, q) in basis.iter().enumerate() {
            let lq = q.leading_monomial().expect("nonzero");
            if lq.is_coprime(&lt) {
                continue;
            }
            let lcm = lq.lcm(&lt);
            let s_pair = (sugar[i] + lcm.degree() - lq.degree()).max(s + lcm.degree() - lt.degree());
            queue.push(Reverse(Pair { sugar: s_pair, lcm, i, j }));
        }
        basis.push(p);
        sugar.push(s);
    };

    for g in gens {
        let r = reduce(g, &basis);
        if !r.is_zero() {
            let s = g.total_degree().unwrap_or(0);
            add(r, s, &mut basis, &mut sugar, &mut queue);
        }
    }

    let mut processed = 0usize;
    while let Some(Reverse(pair)) = queue.pop() {
        processed += 1;
        if processed > max_pairs {
            return Err(Error::BudgetExceeded(format!("Gröbner basis needed more than {max_pairs} S-pairs")));
        }
        let s = s_polynomial(&basis[pair.i], &basis[pair.j], &pair.lcm);
        let r = reduce(&s, &basis);
        if !r.is_zero() {
            add(r, pair.sugar, &mut basis, &mut sugar, &mut queue);
        }
    }
    Ok(GroebnerBasis { ring: ring.clone(), basis: interreduce(basis) })
}

fn s_polynomial<F: Field>(f: &MultiPoly<F>, g: &MultiPoly<F>, lcm: &Monomial) -> MultiPoly<F> {
    let lf = f.leading_monomial().expect("nonzero");
    let lg = g.leading_monomial().expect("nonzero");
    let mut s = f.mul_term(&f.ring().field().one(), &lf.quotient_of(lcm).expect("lcm"));
    let one = g.ring().field().one();
    s.sub_scaled_shift(&one, &lg.quotient_of(lcm).expect("lcm"), g);
    s
}

/// Full reduction of `p` by a list of monic polynomials.
fn reduce<F: Field>(p: &MultiPoly<F>, by: &[MultiPoly<F>]) -> MultiPoly<F> {
    let ring = p.ring();
    let mut rest = p.clone();
    let mut out = ring.zero_poly();
    while let Some((m, c)) = rest.pop_leading() {
        let divisor = by.iter().find(|g| g.leading_monomial().is_some_and(|l| l.divides(&m)));
        match divisor {
            Some(g) => {
                let (lm, lc) = g.leading_term().expect("nonzero");
                let q = lm.quotient_of(&m).expect("divides");
                let coeff = ring.field().mul(&c, &ring.field().inv(lc).expect("nonzero"));
                let mut tail = g.clone();
                tail.pop_leading();
                rest.sub_scaled_shift(&coeff, &q, &tail);
            }
            None => out.add_term(m, &c),
        }
    }
    out
}

fn interreduce<F: Field>(mut basis: Vec<MultiPoly<F>>) -> Vec<MultiPoly<F>> {
    basis.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    let mut minimal: Vec<MultiPoly<F>> = Vec::new();
    for g in basis {
        let lg = g.leading_monomial().expect("nonzero").clone();
        if !minimal.iter().any(|h| h.leading_monomial().expect("nonzero").divides(&lg)) {
            minimal.push(g);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<MultiPoly<F>> =
            minimal.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, g)| g.clone()).collect();
        let g = &minimal[i];
        let (lm, lc) = g.leading_term().expect("nonzero");
        let mut tail = g.clone();
        tail.pop_leading();
        let mut r = reduce(&tail, &others);
        r.add_term(lm.clone(), lc);
        out.push(r.make_monic());
    }
    out
}

impl<F: Field> GroebnerBasis<F> {
    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn basis(&self) -> &[MultiPoly<F>] {
        &self.basis
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis.iter().map(|g| g.leading_monomial().expect("nonzero").clone()).collect()
    }

    /// Unique representative of `p` modulo the ideal with no term divisible
    /// by a leading monomial.
    pub fn normal_form(&self, p: &MultiPoly<F>) -> Result<MultiPoly<F>> {
        if p.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        Ok(reduce(p, &self.basis))
    }

    pub fn contains(&self, p: &MultiPoly<F>) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Monomials outside the leading-term ideal, ascending grevlex (so `1`
    /// comes first). Empty when the ideal is the unit ideal.
    pub fn standard_monomials(&self) -> Result<Vec<Monomial>> {
        let n = self.ring.nvars();
        let leads = self.leading_monomials();
        if leads.iter().any(|l| l.is_one()) {
            return Ok(Vec::new());
        }
        for v in 0..n {
            if !leads.iter().any(|l| l.pure_power_of() == Some(v)) {
                return Err(Error::NotZeroDimensional(format!(
                    "no pure power of `{}` among the leading monomials",
                    self.ring.vars()[v]
                )));
            }
        }
        let mut out = Vec::new();
        for d in 0.. {
            let level: Vec<Monomial> = Monomial::all_of_degree(n, d)
                .into_iter()
                .filter(|m| !leads.iter().any(|l| l.divides(m)))
                .collect();
            if level.is_empty() {
                break;
            }
            out.extend(level);
            if n == 0 {
                break;
            }
        }
        Ok(out)
    }
}
