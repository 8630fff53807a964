//! Exact null space of a rational matrix by Gauss-Jordan elimination.

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Basis of `{ v : M v = 0 }` for a row-major matrix with `cols` columns.
/// One basis vector per free column, with a 1 in that column.
pub fn null_space(rows: &[Vec<BigRational>], cols: usize) -> Vec<Vec<BigRational>> {
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let mut pivots: Vec<usize> = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(found) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, found);
        let inv = m[row][col].recip();
        for v in m[row].iter_mut() {
            *v *= &inv;
        }
        for r in 0..m.len() {
            if r == row || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            let pivot_row = m[row].clone();
            for (dst, src) in m[r][col..cols].iter_mut().zip(&pivot_row[col..cols]) {
                *dst -= &factor * src;
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }

    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![BigRational::zero(); cols];
            v[free] = BigRational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[r][free].clone();
            }
            v
        })
        .collect()
}

/// Rank of a set of vectors.
pub fn rank(vectors: &[Vec<BigRational>]) -> usize {
    let Some(cols) = vectors.first().map(Vec::len) else {
        return 0;
    };
    // rank = cols - nullity of the transpose system
    let transposed: Vec<Vec<BigRational>> = (0..cols)
        .map(|c| vectors.iter().map(|v| v[c].clone()).collect())
        .collect();
    vectors.len() - null_space(&transposed, vectors.len()).len()
}
