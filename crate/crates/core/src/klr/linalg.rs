//! Ranks of integer matrices over `Q` and over prime fields.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Rank over `Q` when `p == 0`, otherwise over `F_p` (`p` prime).
pub fn rank_over(m: &[Vec<i64>], p: u64) -> usize {
    if p == 0 {
        rank_rational(m)
    } else {
        rank_mod(m, p)
    }
}

/// Fraction-free (Bareiss) elimination.
fn rank_rational(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| !a[r][c].is_zero()) else { continue };
        a.swap(rank, piv);
        for r in rank + 1..rows {
            for k in c + 1..cols {
                let v = (&a[rank][c] * &a[r][k] - &a[r][c] * &a[rank][k]) / &prev;
                a[r][k] = v;
            }
            a[r][c] = BigInt::zero();
        }
        prev = a[rank][c].abs();
        rank += 1;
    }
    rank
}

fn rank_mod(m: &[Vec<i64>], p: u64) -> usize {
    let p = p as i128;
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| (x as i128).rem_euclid(p)).collect()).collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| a[r][c] != 0) else { continue };
        a.swap(rank, piv);
        let inv = pow_mod(a[rank][c], p - 2, p);
        for r in rank + 1..rows {
            let f = a[r][c] * inv % p;
            if f == 0 {
                continue;
            }
            for k in c..cols {
                a[r][k] = (a[r][k] - f * a[rank][k]).rem_euclid(p);
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: i128, mut e: i128, p: i128) -> i128 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_gram_matrix_ranks() {
        let m = vec![
            vec![0, 1, 1, 1, 1],
            vec![1, 0, 0, 0, 1],
            vec![1, 0, 0, 0, 1],
            vec![1, 0, 0, 0, 1],
            vec![1, 1, 1, 1, 0],
        ];
        assert_eq!(rank_over(&m, 0), 3);
        assert_eq!(rank_over(&m, 2), 2);
        assert_eq!(rank_over(&m, 3), 3);
        assert_eq!(rank_over(&[vec![0, 0], vec![0, 0]], 0), 0);
        assert_eq!(rank_over(&[], 0), 0);
        assert_eq!(rank_over(&[vec![2, 4], vec![1, 2]], 0), 1);
    }
}
