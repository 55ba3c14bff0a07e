use crate::arith::Ring;

/// Coefficients of `det(Z·I − M)`, ascending (`out[n] = 1`), by Berkowitz's
/// division-free recursion over leading principal submatrices.
pub fn berkowitz<R: Ring>(ring: &R, m: &[Vec<R::Elem>]) -> Vec<R::Elem> {
    let n = m.len();
    // descending coefficient vector of the current leading block
    let mut chi: Vec<R::Elem> = vec![ring.one()];
    for r in 0..n {
        // column above and row left of the new diagonal entry
        let col: Vec<R::Elem> = (0..r).map(|i| m[i][r].clone()).collect();
        let row: Vec<R::Elem> = (0..r).map(|j| m[r][j].clone()).collect();
        let mut t = Vec::with_capacity(r + 2);
        t.push(ring.one());
        t.push(ring.neg(&m[r][r]));
        let mut v = col;
        for _ in 0..r {
            let rv = dot(ring, &row, &v);
            t.push(ring.neg(&rv));
            v = (0..r).map(|i| dot(ring, &m[i][..r], &v)).collect();
        }
        let mut next = vec![ring.zero(); r + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, c) in chi.iter().enumerate() {
                if i >= j && i - j < t.len() {
                    let prod = ring.mul(&t[i - j], c);
                    ring.add_assign(slot, &prod);
                }
            }
        }
        chi = next;
    }
    chi.reverse();
    chi
}

fn dot<R: Ring>(ring: &R, a: &[R::Elem], b: &[R::Elem]) -> R::Elem {
    let mut acc = ring.zero();
    for (x, y) in a.iter().zip(b) {
        if !ring.is_zero(x) && !ring.is_zero(y) {
            ring.mul_add_assign(&mut acc, x, y);
        }
    }
    acc
}

/// `s_i = (−1)^i · [Z^{n−i}] P`, for i = 1..n, from ascending coefficients.
pub fn traces_from_char_poly<R: Ring>(ring: &R, coeffs: &[R::Elem]) -> Vec<R::Elem> {
    let n = coeffs.len() - 1;
    (1..=n)
        .map(|i| {
            let c = coeffs[n - i].clone();
            if i % 2 == 0 {
                c
            } else {
                ring.neg(&c)
            }
        })
        .collect()
}
