//! Exact dense linear algebra over a [`Field`].

use crate::field::Field;

pub type Matrix<F> = Vec<Vec<F>>;

/// Reduced row echelon form, in place. Returns the pivot columns.
pub fn rref<F: Field>(m: &mut Matrix<F>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = F::one() / m[row][col].clone();
        for x in m[row][col..].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let factor = other[col].clone();
            for (x, p) in other[col..].iter_mut().zip(&pivot_row[col..]) {
                if !p.is_zero() {
                    *x = x.clone() - factor.clone() * p.clone();
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    m.truncate(row);
    pivots
}

/// A basis of the row space, in reduced echelon form.
pub fn row_space<F: Field>(mut m: Matrix<F>, ncols: usize) -> Matrix<F> {
    rref(&mut m, ncols);
    m
}

pub fn rank<F: Field>(m: &Matrix<F>, ncols: usize) -> usize {
    let mut m = m.clone();
    rref(&mut m, ncols).len()
}

/// A basis of `{v : m v = 0}`.
pub fn nullspace<F: Field>(m: &Matrix<F>, ncols: usize) -> Vec<Vec<F>> {
    let mut r = m.clone();
    let pivots = rref(&mut r, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![F::zero(); ncols];
            v[f] = F::one();
            for (row, &p) in r.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

pub fn mat_vec<F: Field>(m: &Matrix<F>, v: &[F]) -> Vec<F> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                .fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
        })
        .collect()
}

/// `a b` for `a` of size `n × k` and `b` of size `k × ncols`.
pub fn mat_mul<F: Field>(a: &Matrix<F>, b: &Matrix<F>, ncols: usize) -> Matrix<F> {
    a.iter()
        .map(|row| {
            let mut out = vec![F::zero(); ncols];
            for (x, brow) in row.iter().zip(b) {
                if x.is_zero() {
                    continue;
                }
                for (o, y) in out.iter_mut().zip(brow) {
                    if !y.is_zero() {
                        *o = o.clone() + x.clone() * y.clone();
                    }
                }
            }
            out
        })
        .collect()
}

/// Whether two families span the same subspace of `F^ncols`.
pub fn same_span<F: Field>(a: &Matrix<F>, b: &Matrix<F>, ncols: usize) -> bool {
    row_space(a.clone(), ncols) == row_space(b.clone(), ncols)
}
