//! Exact rank and nullspace over the rationals.
//!
//! Rows are cleared of denominators and reduced with fraction-free
//! (Bareiss) elimination, so every intermediate value is an integer minor
//! and every division is exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Row echelon form with its pivot columns.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub rows: Vec<Vec<BigInt>>,
    pub pivots: Vec<usize>,
    pub cols: usize,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// A basis of `{x : Mx = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<BigRational>> {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut x = vec![BigRational::zero(); self.cols];
                x[free] = BigRational::one();
                for (r, &p) in self.pivots.iter().enumerate().rev() {
                    let row = &self.rows[r];
                    let mut acc = BigRational::zero();
                    for c in p + 1..self.cols {
                        if !row[c].is_zero() && !x[c].is_zero() {
                            acc += BigRational::from_integer(row[c].clone()) * &x[c];
                        }
                    }
                    x[p] = -acc / BigRational::from_integer(row[p].clone());
                }
                x
            })
            .collect()
    }
}

/// Scales a rational row by the lcm of its denominators.
pub fn integer_row(row: &[BigRational]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
}

/// Fraction-free elimination of an integer matrix with `cols` columns.
pub fn bareiss(mut m: Vec<Vec<BigInt>>, cols: usize) -> Echelon {
    m.retain(|row| row.iter().any(|x| !x.is_zero()));
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            let factor = row[c].clone();
            for j in c + 1..cols {
                let num = &pivot_row[c] * &row[j] - &factor * &pivot_row[j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                row[j] = q;
            }
            row[c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    Echelon { rows: m, pivots, cols }
}

/// Echelon form of a rational matrix given by rows.
pub fn echelon(rows: &[Vec<BigRational>], cols: usize) -> Echelon {
    bareiss(rows.iter().map(|r| integer_row(r)).collect(), cols)
}

pub fn rank(rows: &[Vec<BigRational>], cols: usize) -> usize {
    echelon(rows, cols).rank()
}
