use std::collections::{HashMap, HashSet, VecDeque};

use super::{AlgebraMap, Grading, SparseVec, StructureAlgebra, TensorPower};
use crate::arith::Field;
use crate::error::Result;

const NONE: u32 = u32::MAX;

/// Multiplication by `ε_s(g)`: column `d` lists `g·e_d` in the base algebra.
#[derive(Debug, Clone)]
struct SlotOperator<E> {
    stride: usize,
    columns: Vec<Vec<(usize, E)>>,
}

#[derive(Debug, Clone)]
struct Block<E> {
    cols: Vec<u32>,
    pivot: Vec<u32>,
    /// Local column indices in descending order; the first entry is the
    /// pivot with coefficient 1.
    rows: Vec<Vec<(u32, E)>>,
    acc: Vec<E>,
}

/// A subspace of `A^{⊗m}` held in semi-echelon form, split into the
/// homogeneous blocks of a grading. Pivots are the largest tuple indices, so
/// the non-pivot indices are the lexicographically smallest complement.
#[derive(Debug, Clone)]
pub struct IdealSpan<F: Field> {
    field: F,
    dim: usize,
    block_of: Vec<u32>,
    local: Vec<u32>,
    blocks: Vec<Block<F::Elem>>,
    rank: usize,
    seeds: usize,
}

impl<F: Field> IdealSpan<F> {
    fn with_blocks(field: F, block_of: Vec<u32>) -> Self {
        let dim = block_of.len();
        let nblocks = block_of.iter().map(|b| *b as usize + 1).max().unwrap_or(0);
        let mut blocks: Vec<Block<F::Elem>> = (0..nblocks)
            .map(|_| Block { cols: Vec::new(), pivot: Vec::new(), rows: Vec::new(), acc: Vec::new() })
            .collect();
        let mut local = vec![0u32; dim];
        for (g, b) in block_of.iter().enumerate() {
            let blk = &mut blocks[*b as usize];
            local[g] = blk.cols.len() as u32;
            blk.cols.push(g as u32);
        }
        for blk in &mut blocks {
            blk.pivot = vec![NONE; blk.cols.len()];
            blk.acc = vec![field.zero(); blk.cols.len()];
        }
        IdealSpan { field, dim, block_of, local, blocks, rank: 0, seeds: 0 }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Distinct nonzero generators fed in before closing.
    pub fn seed_count(&self) -> usize {
        self.seeds
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Sweep the accumulator of block `b` from column `top` down, clearing
    /// it. Returns the surviving entries (descending local columns).
    fn sweep(&mut self, b: usize, top: usize) -> Vec<(u32, F::Elem)> {
        let f = &self.field;
        let Block { acc, pivot, rows, .. } = &mut self.blocks[b];
        let mut out = Vec::new();
        for c in (0..=top).rev() {
            if f.is_zero(&acc[c]) {
                continue;
            }
            let factor = std::mem::replace(&mut acc[c], f.zero());
            let p = pivot[c];
            if p == NONE {
                out.push((c as u32, factor));
            } else {
                for (col, val) in &rows[p as usize][1..] {
                    let slot = &mut acc[*col as usize];
                    *slot = f.sub(slot, &f.mul(&factor, val));
                }
            }
        }
        out
    }

    fn push_row(&mut self, b: usize, mut row: Vec<(u32, F::Elem)>) -> Option<(u32, u32)> {
        let (lead, c) = row.first()?.clone();
        let inv = self.field.inv(&c).expect("nonzero lead");
        for (_, v) in row.iter_mut() {
            *v = self.field.mul(v, &inv);
        }
        let blk = &mut self.blocks[b];
        blk.pivot[lead as usize] = blk.rows.len() as u32;
        blk.rows.push(row);
        self.rank += 1;
        Some((b as u32, (self.blocks[b].rows.len() - 1) as u32))
    }

    /// Load a vector lying in a single block; returns that block and the
    /// highest local column touched.
    fn load(&mut self, v: &[(usize, F::Elem)]) -> Option<(usize, usize)> {
        let (first, _) = v.first()?;
        let b = self.block_of[*first] as usize;
        let mut top = 0;
        for (g, c) in v {
            assert_eq!(self.block_of[*g] as usize, b, "vector is not homogeneous for the block grading");
            let l = self.local[*g] as usize;
            let slot = &mut self.blocks[b].acc[l];
            *slot = self.field.add(slot, c);
            top = top.max(l);
        }
        Some((b, top))
    }

    /// Add a homogeneous vector to the span; returns the new row if the rank grew.
    fn insert(&mut self, v: &[(usize, F::Elem)]) -> Option<(u32, u32)> {
        let (b, top) = self.load(v)?;
        let row = self.sweep(b, top);
        self.push_row(b, row)
    }

    fn row_global(&self, b: u32, r: u32) -> Vec<(usize, F::Elem)> {
        let blk = &self.blocks[b as usize];
        blk.rows[r as usize].iter().map(|(c, v)| (blk.cols[*c as usize] as usize, v.clone())).collect()
    }

    fn close(&mut self, ops: &[SlotOperator<F::Elem>], n: usize, mut queue: VecDeque<(u32, u32)>) {
        let f = self.field.clone();
        while let Some((b, r)) = queue.pop_front() {
            let row = self.row_global(b, r);
            for op in ops {
                let mut target: Option<usize> = None;
                let mut top = 0usize;
                for (g, v) in &row {
                    let d = (g / op.stride) % n;
                    for (k, c) in &op.columns[d] {
                        let h = g - d * op.stride + k * op.stride;
                        let tb = self.block_of[h] as usize;
                        match target {
                            None => target = Some(tb),
                            Some(t) => assert_eq!(t, tb, "operator is not homogeneous for the block grading"),
                        }
                        let l = self.local[h] as usize;
                        let slot = &mut self.blocks[tb].acc[l];
                        f.mul_add_assign(slot, v, c);
                        top = top.max(l);
                    }
                }
                if let Some(tb) = target {
                    let out = self.sweep(tb, top);
                    if let Some(id) = self.push_row(tb, out) {
                        queue.push_back(id);
                    }
                }
            }
        }
    }

    /// The unique representative of `v` supported on non-pivot indices.
    pub fn reduce(&mut self, v: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
        let mut by_block: HashMap<usize, Vec<(usize, F::Elem)>> = HashMap::new();
        for (g, c) in v {
            by_block.entry(self.block_of[*g] as usize).or_default().push((*g, c.clone()));
        }
        let mut out = Vec::new();
        let mut keys: Vec<usize> = by_block.keys().copied().collect();
        keys.sort_unstable();
        for b in keys {
            let part = &by_block[&b];
            let (_, top) = self.load(part).expect("nonempty part");
            for (c, val) in self.sweep(b, top) {
                out.push((self.blocks[b].cols[c as usize] as usize, val));
            }
        }
        out.sort_by_key(|(g, _)| *g);
        out
    }

    /// Non-pivot indices in ascending order: a basis of the quotient.
    pub fn complement(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .blocks
            .iter()
            .flat_map(|b| b.cols.iter().zip(&b.pivot).filter(|(_, p)| **p == NONE).map(|(g, _)| *g as usize))
            .collect();
        out.sort_unstable();
        out
    }

    /// Basis of the span as sparse vectors over global indices.
    pub fn rows(&self) -> Vec<SparseVec<F::Elem>> {
        let mut out = Vec::with_capacity(self.rank);
        for (b, blk) in self.blocks.iter().enumerate() {
            for r in 0..blk.rows.len() {
                let mut v = self.row_global(b as u32, r as u32);
                v.sort_by_key(|(g, _)| *g);
                out.push(v);
            }
        }
        out
    }
}

fn normalized<F: Field>(f: &F, v: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
    let mut v: SparseVec<F::Elem> = v.iter().filter(|(_, c)| !f.is_zero(c)).cloned().collect();
    v.sort_by_key(|(g, _)| *g);
    if let Some((_, c)) = v.last() {
        let inv = f.inv(c).expect("nonzero");
        for (_, x) in v.iter_mut() {
            *x = f.mul(x, &inv);
        }
    }
    v
}

/// Smallest subspace of `A^{⊗m}` containing `seeds` and stable under
/// multiplication by `A^{⊗m}`. When a grading of `A` is supplied and every
/// seed is homogeneous, elimination runs blockwise per total degree.
pub fn ideal_span<F: Field>(
    tp: &TensorPower<F>,
    grading: Option<&Grading>,
    seeds: &[SparseVec<F::Elem>],
) -> IdealSpan<F> {
    let a = tp.base();
    let f = a.field().clone();
    let n = a.dim();
    let mut gens: Vec<Vec<F::Elem>> = a.generators().to_vec();
    if gens.is_empty() {
        gens = (1..n).map(|i| a.basis_vector(i)).collect();
    }
    let mut seen = HashSet::new();
    let unique: Vec<SparseVec<F::Elem>> = seeds
        .iter()
        .map(|s| normalized(&f, s))
        .filter(|s| !s.is_empty() && seen.insert(s.clone()))
        .collect();

    let block_of = grading
        .filter(|g| g.rank() > 0)
        .and_then(|g| tensor_blocks(tp, g, &unique))
        .unwrap_or_else(|| vec![0; tp.dim()]);
    let graded = block_of.iter().any(|b| *b != 0);
    let components: Vec<Vec<F::Elem>> = match grading {
        Some(g) if graded => gens.iter().flat_map(|x| g.components(&f, x)).collect(),
        _ => gens,
    };
    let mut ops = Vec::new();
    for s in 0..tp.m() {
        for g in &components {
            let columns = (0..n)
                .map(|d| {
                    a.mul(g, &a.basis_vector(d))
                        .into_iter()
                        .enumerate()
                        .filter(|(_, c)| !f.is_zero(c))
                        .collect()
                })
                .collect();
            ops.push(SlotOperator { stride: tp.stride(s), columns });
        }
    }
    let mut span = IdealSpan::with_blocks(f, block_of);
    span.seeds = unique.len();
    let mut queue = VecDeque::new();
    for s in &unique {
        if let Some(id) = span.insert(s) {
            queue.push_back(id);
        }
    }
    span.close(&ops, n, queue);
    span
}

/// Block id per tensor index from the total degree, or `None` when some
/// seed is not homogeneous.
fn tensor_blocks<F: Field>(tp: &TensorPower<F>, g: &Grading, seeds: &[SparseVec<F::Elem>]) -> Option<Vec<u32>> {
    let mut ids: HashMap<Vec<i64>, u32> = HashMap::new();
    let mut block_of = Vec::with_capacity(tp.dim());
    let r = g.rank();
    for idx in 0..tp.dim() {
        let mut key = vec![0i64; r];
        for s in 0..tp.m() {
            for (k, d) in key.iter_mut().zip(g.degree(tp.digit(idx, s))) {
                *k += d;
            }
        }
        let next = ids.len() as u32;
        block_of.push(*ids.entry(key).or_insert(next));
    }
    let homogeneous = seeds.iter().all(|s| s.iter().all(|(i, _)| block_of[*i] == block_of[s[0].0]));
    homogeneous.then_some(block_of)
}

/// The quotient of a tensor power by an ideal span, with the reduction map.
#[derive(Debug, Clone)]
pub struct Quotient<F: Field> {
    pub algebra: StructureAlgebra<F>,
    /// Tensor indices of the quotient basis, ascending.
    pub basis: Vec<usize>,
    position: HashMap<usize, usize>,
    span: IdealSpan<F>,
}

impl<F: Field> Quotient<F> {
    pub fn build(tp: &TensorPower<F>, mut span: IdealSpan<F>) -> Result<Self> {
        let f = tp.base().field().clone();
        let basis = span.complement();
        let position: HashMap<usize, usize> = basis.iter().enumerate().map(|(i, g)| (*g, i)).collect();
        let d = basis.len();
        if d == 0 {
            return Ok(Quotient { algebra: StructureAlgebra::zero_algebra(f), basis, position, span });
        }
        let mut table = vec![Vec::new(); d * d];
        for i in 0..d {
            for j in i..d {
                let prod = span.reduce(&tp.mul_basis(basis[i], basis[j]));
                let coords: SparseVec<F::Elem> = prod.into_iter().map(|(g, c)| (position[&g], c)).collect();
                table[i * d + j] = coords.clone();
                table[j * d + i] = coords;
            }
        }
        let labels = basis.iter().map(|g| tp.label(*g)).collect();
        let mut q = Quotient { algebra: StructureAlgebra::zero_algebra(f.clone()), basis, position, span };
        let mut generators = Vec::new();
        for s in 0..tp.m() {
            for g in tp.base().generators() {
                generators.push(q.project(&tp.embed(s, g)));
            }
        }
        q.algebra = StructureAlgebra::from_table(f, labels, table, generators)?;
        Ok(q)
    }

    /// Coordinates of the image of a tensor vector in the quotient basis.
    pub fn project(&mut self, v: &[(usize, F::Elem)]) -> Vec<F::Elem> {
        let f = self.algebra.field().clone();
        let mut out = vec![f.zero(); self.basis.len()];
        for (g, c) in self.span.reduce(v) {
            out[self.position[&g]] = c;
        }
        out
    }

    /// `α_s = π ∘ ε_s` for every slot.
    pub fn slot_maps(&mut self, tp: &TensorPower<F>) -> Vec<AlgebraMap<F>> {
        let n = tp.base().dim();
        let d = self.basis.len();
        (0..tp.m())
            .map(|s| {
                let images = (0..n).map(|i| self.project(&tp.embed(s, &tp.base().basis_vector(i)))).collect();
                AlgebraMap::new(images, d).expect("consistent dimensions")
            })
            .collect()
    }

    pub fn span(&self) -> &IdealSpan<F> {
        &self.span
    }
}

/// Dimension of the ideal generated by `gens` in `A`, and a row-reduced
/// spanning set.
pub fn ideal_subspace_dim<F: Field>(a: &StructureAlgebra<F>, gens: &[Vec<F::Elem>]) -> (usize, Vec<SparseVec<F::Elem>>) {
    let span = plain_span(a, gens);
    (span.rank(), span.rows())
}

fn plain_span<F: Field>(a: &StructureAlgebra<F>, gens: &[Vec<F::Elem>]) -> IdealSpan<F> {
    let tp = TensorPower::new(a, 1, usize::MAX).expect("m = 1 fits");
    let f = a.field();
    let seeds: Vec<SparseVec<F::Elem>> =
        gens.iter().map(|g| g.iter().cloned().enumerate().filter(|(_, c)| !f.is_zero(c)).collect()).collect();
    let grading = Grading::detect(a);
    ideal_span(&tp, Some(&grading), &seeds)
}

/// `A / (gens)` with its projection.
pub fn quotient_algebra<F: Field>(
    a: &StructureAlgebra<F>,
    gens: &[Vec<F::Elem>],
) -> Result<(StructureAlgebra<F>, AlgebraMap<F>)> {
    let tp = TensorPower::new(a, 1, usize::MAX).expect("m = 1 fits");
    let mut q = Quotient::build(&tp, plain_span(a, gens))?;
    let proj = q.slot_maps(&tp).pop().expect("one slot");
    Ok((q.algebra, proj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::PrimeField;
    use crate::finalg::algebra_from_presentation;
    use crate::multipoly::parse_presentation;

    fn alg(text: &str) -> StructureAlgebra<PrimeField> {
        algebra_from_presentation(&parse_presentation(text).unwrap())
            .unwrap()
            .map_field(&PrimeField::new(101).unwrap())
            .unwrap()
    }

    #[test]
    fn principal_ideals() {
        let a = alg("Q[x]/(x^3)");
        assert_eq!(ideal_subspace_dim(&a, &[a.basis_vector(1)]).0, 2);
        assert_eq!(ideal_subspace_dim(&a, &[a.one()]).0, 3);
        assert_eq!(ideal_subspace_dim(&a, &[]).0, 0);
        // 1 + x is a unit
        assert_eq!(ideal_subspace_dim(&a, &[vec![1, 1, 0]]).0, 3);
    }

    #[test]
    fn order_and_duplicates_do_not_matter() {
        let a = alg("Q[x,y]/(x^3, y^2)");
        let g1 = a.generators()[0].clone();
        let g2 = a.generators()[1].clone();
        let d1 = ideal_subspace_dim(&a, &[g1.clone(), g2.clone()]).0;
        let d2 = ideal_subspace_dim(&a, &[g2.clone(), g1.clone(), g2.clone(), a.scale(&5, &g1)]).0;
        assert_eq!(d1, d2);
        assert_eq!(d1, 5);
    }

    #[test]
    fn quotients() {
        let a = alg("Q[x]/(x^3)");
        let (q, p) = quotient_algebra(&a, &[a.basis_vector(1)]).unwrap();
        assert_eq!(q.dim(), 1);
        assert!(p.is_ring_morphism(&a, &q));
        let (z, p) = quotient_algebra(&a, &[a.one()]).unwrap();
        assert_eq!(z.dim(), 0);
        assert!(p.is_ring_morphism(&a, &z));
        let b = alg("Q[x,y]/(x^3, y^2)");
        let (q, p) = quotient_algebra(&b, &[b.generators()[1].clone()]).unwrap();
        assert_eq!(q.dim(), 3);
        assert!(q.is_associative());
        assert!(p.is_ring_morphism(&b, &q));
    }

    #[test]
    fn ungraded_algebra_uses_one_block() {
        let a = alg("Q[x]/(x^3 - x)");
        let tp = TensorPower::new(&a, 2, 100).unwrap();
        let g = Grading::detect(&a);
        let seed = tp.embed(0, &a.basis_vector(1));
        let span = ideal_span(&tp, Some(&g), &[seed]);
        assert_eq!(span.block_count(), 1);
        // x ⊗ 1 generates x·A ⊗ A, of dimension 2·3
        assert_eq!(span.rank(), 6);
    }

    #[test]
    fn reduce_gives_complement_coordinates() {
        let a = alg("Q[x]/(x^3)");
        let tp = TensorPower::new(&a, 1, 10).unwrap();
        let mut span = ideal_span(&tp, None, &[vec![(2, 1)]]);
        assert_eq!(span.complement(), vec![0, 1]);
        assert_eq!(span.reduce(&[(0, 3), (2, 7)]), vec![(0, 3)]);
    }
}
