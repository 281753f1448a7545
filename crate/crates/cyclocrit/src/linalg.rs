//! Gaussian elimination over F_m for a prime modulus m, shared by the rank,
//! determinant, and CRT-determinant code paths.

use crate::fp::{mul_mod, pow_mod_raw};

/// Reduce `rows` in place; returns (rank, determinant mod m).
///
/// The determinant is meaningful only for square input (it is reported as 0
/// whenever the rank is deficient). Pivoting picks the first nonzero entry
/// in the column, which is all a prime field needs.
pub(crate) fn eliminate_mod(rows: &mut [Vec<u64>], m: u64) -> (usize, u64) {
    let n_rows = rows.len();
    if n_rows == 0 {
        return (0, 1 % m);
    }
    let n_cols = rows[0].len();
    let mut rank = 0usize;
    let mut det = 1 % m;
    let mut negate = false;

    for col in 0..n_cols {
        if rank == n_rows {
            break;
        }
        let Some(pivot_row) = (rank..n_rows).find(|&r| rows[r][col] % m != 0) else {
            det = 0;
            continue;
        };
        if pivot_row != rank {
            rows.swap(pivot_row, rank);
            negate = !negate;
        }
        let pivot = rows[rank][col] % m;
        det = mul_mod(det, pivot, m);
        let pivot_inv = pow_mod_raw(pivot, m - 2, m);
        let (pivot_rows, rest) = rows.split_at_mut(rank + 1);
        let pivot_row = &pivot_rows[rank];
        for row in rest.iter_mut() {
            let factor = row[col] % m;
            if factor == 0 {
                continue;
            }
            let scale = mul_mod(factor, pivot_inv, m);
            for (v, &pv) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                let sub = mul_mod(scale, pv % m, m);
                let val = *v % m;
                *v = if val >= sub { val - sub } else { val + m - sub };
            }
        }
        rank += 1;
    }
    if rank < n_rows.min(n_cols) || n_rows != n_cols {
        det = 0;
    } else if negate {
        det = if det == 0 { 0 } else { m - det };
    }
    (rank, det)
}

pub(crate) fn det_mod(mut rows: Vec<Vec<u64>>, m: u64) -> u64 {
    eliminate_mod(&mut rows, m).1
}

pub(crate) fn rank_mod(mut rows: Vec<Vec<u64>>, m: u64) -> usize {
    eliminate_mod(&mut rows, m).0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_of_small_matrices() {
        let p = 101;
        assert_eq!(det_mod(vec![vec![1, 0], vec![0, 1]], p), 1);
        // det [[1,2],[3,4]] = -2
        assert_eq!(det_mod(vec![vec![1, 2], vec![3, 4]], p), p - 2);
        // Singular.
        assert_eq!(det_mod(vec![vec![1, 2], vec![2, 4]], p), 0);
        assert_eq!(rank_mod(vec![vec![1, 2], vec![2, 4]], p), 1);
    }

    #[test]
    fn row_swap_flips_sign() {
        let p = 97;
        let a = vec![vec![0, 1], vec![1, 0]];
        assert_eq!(det_mod(a, p), p - 1);
    }

    /// Laplace cofactor expansion, as an independent oracle for tiny dims.
    fn det_laplace(rows: &[Vec<u64>], m: u64) -> u64 {
        let n = rows.len();
        if n == 1 {
            return rows[0][0] % m;
        }
        let mut acc = 0u64;
        for (j, &a) in rows[0].iter().enumerate() {
            if a % m == 0 {
                continue;
            }
            let minor: Vec<Vec<u64>> = rows[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, &v)| v)
                        .collect()
                })
                .collect();
            let term = mul_mod(a % m, det_laplace(&minor, m), m);
            acc = if j % 2 == 0 {
                (acc + term) % m
            } else {
                (acc + m - term) % m
            };
        }
        acc
    }

    #[test]
    fn elimination_matches_laplace_on_random_matrices() {
        let p = 13u64;
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for n in 1..=5usize {
            for _ in 0..20 {
                let rows: Vec<Vec<u64>> =
                    (0..n).map(|_| (0..n).map(|_| next() % p).collect()).collect();
                assert_eq!(det_mod(rows.clone(), p), det_laplace(&rows, p));
            }
        }
    }
}
