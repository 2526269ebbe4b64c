//! Oracles shared by the integration tests.
#![allow(dead_code)]

use dgn_core::{Matrix, Scalar};
use num::{BigInt, Integer, One};

/// Fraction-free (Bareiss) rank over the integers, independent of `Matrix::rank`.
pub fn bareiss_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let (n, k) = (m.len(), m.first().map_or(0, |r| r.len()));
    let mut rank = 0;
    let mut prev = 1i128;
    for c in 0..k {
        let Some(p) = (rank..n).find(|&i| m[i][c] != 0) else { continue };
        m.swap(rank, p);
        for i in rank + 1..n {
            for j in c + 1..k {
                m[i][j] = (m[rank][c] * m[i][j] - m[i][c] * m[rank][j]) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[rank][c];
        rank += 1;
    }
    rank
}


/// Rank of an exact rational matrix: clear denominators row by row, then
/// run the integer elimination above on `i128`-sized entries.
pub fn oracle_rank(m: &Matrix) -> usize {
    let rows: Vec<Vec<i64>> = (0..m.rows())
        .map(|i| {
            let row: Vec<num::BigRational> = m
                .row(i)
                .iter()
                .map(|x| match x {
                    Scalar::Rat(q) => q.clone(),
                    Scalar::Mod { .. } => panic!("rational oracle only"),
                })
                .collect();
            let l = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            row.iter()
                .map(|q| {
                    let v = q.numer() * (&l / q.denom());
                    i64::try_from(v).expect("small entries")
                })
                .collect()
        })
        .collect();
    bareiss_rank(&rows)
}
