//! Exact Gaussian elimination, used for independence checks.

use crate::scalar::Scalar;

/// Rank of the span of `vectors` (all of equal length).
pub fn rank(vectors: &[Vec<Scalar>]) -> usize {
    let mut rows: Vec<Vec<Scalar>> = vectors.to_vec();
    let Some(width) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inv().expect("pivot is nonzero");
        let pivot_row: Vec<Scalar> = rows[rank].iter().map(|v| v * &inv).collect();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x -= &(p * &factor);
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
    }
    rank
}
