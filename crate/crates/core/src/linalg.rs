//! Dense linear algebra over `F_p`, sized for graded pieces of polynomial
//! rings (a few hundred columns at most).

use crate::field::{inv_mod, mul_mod, sub_mod};

/// Row-reduces `rows` in place to reduced row echelon form, scanning
/// columns left to right. Returns the pivot column of each nonzero row;
/// zero rows are dropped.
pub(crate) fn rref(rows: &mut Vec<Vec<u32>>, ncols: usize, p: u32) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, found);
        let inv = inv_mod(rows[r][col], p);
        for x in rows[r].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col] == 0 {
                continue;
            }
            let factor = row[col];
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                if y != 0 {
                    *x = sub_mod(*x, mul_mod(factor, y, p), p);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{v : A v = 0}` for the `nrows x ncols` matrix `a`, returned in
/// reduced row echelon form.
pub(crate) fn nullspace(a: &[Vec<u32>], ncols: usize, p: u32) -> Vec<Vec<u32>> {
    let mut m = a.to_vec();
    let pivots = rref(&mut m, ncols, p);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u32; ncols];
        v[free] = 1;
        for (row, &pc) in m.iter().zip(&pivots) {
            if row[free] != 0 {
                v[pc] = sub_mod(0, row[free], p);
            }
        }
        basis.push(v);
    }
    rref(&mut basis, ncols, p);
    basis
}
