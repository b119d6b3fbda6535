//! Fraction-free Gaussian elimination over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![vec![BigInt::zero(); cols]; rows],
        }
    }

    pub fn from_rows(data: Vec<Vec<BigInt>>) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, |r| r.len());
        assert!(data.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix { rows, cols, data }
    }

    /// Bareiss elimination to row echelon form in place. Returns the pivot
    /// columns; pivoting takes the first nonzero entry in each column.
    pub fn echelon(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.data[i][c].is_zero()) else {
                continue;
            };
            self.data.swap(r, p);
            let (top, rest) = self.data.split_at_mut(r + 1);
            let prow = &top[r];
            let piv = &prow[c];
            for row in rest.iter_mut() {
                let f = row[c].clone();
                for j in c + 1..self.cols {
                    let v = piv * &row[j] - &f * &prow[j];
                    // exact: every entry is a minor of the input matrix
                    row[j] = if prev.is_one() { v } else { v / &prev };
                }
                row[c] = BigInt::zero();
            }
            prev = self.data[r][c].clone();
            pivots.push(c);
            r += 1;
        }
        // rows below the last pivot are zero in all later columns
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().echelon().len()
    }

    /// Basis of the rational right nullspace, one primitive integer vector
    /// per free column, ordered by free column.
    pub fn nullspace(&self) -> Vec<Vec<BigInt>> {
        let mut m = self.clone();
        let pivots = m.echelon();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut x = vec![BigRational::zero(); self.cols];
            x[free] = BigRational::one();
            for (k, &p) in pivots.iter().enumerate().rev() {
                let row = &m.data[k];
                let mut s = BigRational::zero();
                for j in p + 1..self.cols {
                    if !row[j].is_zero() && !x[j].is_zero() {
                        s += &x[j] * BigRational::from_integer(row[j].clone());
                    }
                }
                x[p] = -s / BigRational::from_integer(row[p].clone());
            }
            basis.push(primitive(&x));
        }
        basis
    }
}

/// Scale a rational vector to a primitive integer vector whose first
/// nonzero entry is positive.
pub fn primitive(x: &[BigRational]) -> Vec<BigInt> {
    let den = x.iter().fold(BigInt::one(), |a, v| a.lcm(v.denom()));
    let ints: Vec<BigInt> = x.iter().map(|v| (v * BigRational::from_integer(den.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |a, v| a.gcd(v));
    if g.is_zero() {
        return ints;
    }
    let sign = if ints.iter().find(|v| !v.is_zero()).is_some_and(|v| v.is_negative()) {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    ints.into_iter().map(|v| v / &g * &sign).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect())
    }

    fn mul(a: &IntMatrix, x: &[BigInt]) -> Vec<BigInt> {
        a.data.iter().map(|r| r.iter().zip(x).map(|(p, q)| p * q).sum()).collect()
    }

    #[test]
    fn rank_and_nullspace() {
        let a = m(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[1, 0, 1, 0]]);
        assert_eq!(a.rank(), 2);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(mul(&a, v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn skipped_columns_keep_divisions_exact() {
        let a = m(&[&[0, 2, 3, 5], &[0, 4, 1, 7], &[0, 6, 9, 2], &[0, 8, 2, 1]]);
        assert_eq!(a.rank(), 3);
        let ns = a.nullspace();
        assert_eq!(ns, vec![vec![BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::zero()]]);
    }

    #[test]
    fn full_rank_square_has_trivial_nullspace() {
        let a = m(&[&[2, 1], &[1, 1]]);
        assert!(a.nullspace().is_empty());
    }
}
