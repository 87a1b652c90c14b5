//! Exact Gaussian elimination over [`Scalar`].

use alloc::vec::Vec;

use crate::coeff::Scalar;

/// Reduced row echelon form: nonzero rows with unit pivots at strictly increasing columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub rows: Vec<Vec<Scalar>>,
    pub pivots: Vec<usize>,
}

/// Reduced row echelon form; pivots on the first nonzero entry in column order.
pub fn rref(mut rows: Vec<Vec<Scalar>>) -> Rref {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        for x in rows[r].iter_mut().skip(c) {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !p.is_zero() {
                    *x = &*x - &(&f * p);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    Rref { rows, pivots }
}

pub fn rank(rows: Vec<Vec<Scalar>>) -> usize {
    rref(rows).rows.len()
}

/// Basis of `{v : rows · v = 0}` for vectors of length `ncols`.
pub fn nullspace(rows: Vec<Vec<Scalar>>, ncols: usize) -> Vec<Vec<Scalar>> {
    let e = rref(rows);
    let free: Vec<usize> = (0..ncols).filter(|c| !e.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = alloc::vec![Scalar::zero(); ncols];
            v[f] = Scalar::one();
            for (row, &p) in e.rows.iter().zip(&e.pivots) {
                if !row[f].is_zero() {
                    v[p] = -&row[f];
                }
            }
            v
        })
        .collect()
}

/// Whether `v` lies in the span of `rows`.
pub fn in_span(rows: &[Vec<Scalar>], v: &[Scalar]) -> bool {
    let base = rank(rows.to_vec());
    let mut ext = rows.to_vec();
    ext.push(v.to_vec());
    rank(ext) == base
}

/// Whether two row sets span the same space.
pub fn same_span(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> bool {
    let ea = rref(a.to_vec());
    let eb = rref(b.to_vec());
    ea.pivots == eb.pivots && ea.rows == eb.rows
}
