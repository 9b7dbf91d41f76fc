//! Exact integer linear algebra: determinants, unimodular solves, gcds, rank.
//!
//! Every routine works on arbitrary-precision integers and never rounds.
//! Intermediate values in fraction-free elimination can exceed machine
//! word size even for small inputs, so `BigInt` is used throughout.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Builds a `BigInt` vector from machine integers.
pub fn ivec(entries: &[i64]) -> Vec<BigInt> {
    entries.iter().map(|&e| BigInt::from(e)).collect()
}

/// Exact dot product of two equal-length integer vectors.
pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    assert_eq!(a.len(), b.len(), "dot product length mismatch");
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Gcd of the absolute values of the entries; zero only for the zero vector.
pub fn gcd_of_entries(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |acc, e| acc.gcd(&e.abs()))
}

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMat {
    /// Creates a matrix from row-major entries; `entries.len()` must equal
    /// `rows * cols`.
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        Self {
            rows,
            cols,
            entries,
        }
    }

    /// Creates a matrix from a non-empty list of equal-length rows.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        assert!(!rows.is_empty(), "matrix needs at least one row");
        let cols = rows[0].len();
        let mut entries = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for row in rows {
            assert_eq!(row.len(), cols, "ragged row");
            entries.extend(row);
        }
        Self::new(n, cols, entries)
    }

    /// Identity matrix of size `n`.
    pub fn identity(n: usize) -> Self {
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = BigInt::one();
        }
        Self::new(n, n, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> IntMat {
        let mut entries = Vec::with_capacity(self.rows * self.cols);
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.entry(r, c).clone());
            }
        }
        IntMat::new(self.cols, self.rows, entries)
    }

    /// Matrix product; panics on inner-dimension mismatch.
    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = BigInt::zero();
                for k in 0..self.cols {
                    acc += self.entry(r, k) * other.entry(k, c);
                }
                entries.push(acc);
            }
        }
        IntMat::new(self.rows, other.cols, entries)
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "vector length mismatch");
        (0..self.rows).map(|r| dot(self.row(r), v)).collect()
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    ///
    /// Every division in the elimination is exact, so no rational
    /// arithmetic is needed.
    pub fn determinant(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut m = self.row_vecs();
        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..n {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(k, i);
                        negate = !negate;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = num / &prev;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        Ok(if negate { -det } else { det })
    }

    /// Rank over the rationals, computed exactly by integer row reduction.
    #[allow(clippy::needless_range_loop)]
    pub fn rank(&self) -> usize {
        let mut m = self.row_vecs();
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(p) = (rank..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            for r in rank + 1..self.rows {
                if m[r][col].is_zero() {
                    continue;
                }
                let g = m[rank][col].gcd(&m[r][col]);
                let a = &m[rank][col] / &g;
                let b = &m[r][col] / &g;
                for c in col..self.cols {
                    m[r][c] = &m[r][c] * &a - &m[rank][c] * &b;
                }
                reduce_row_content(&mut m[r]);
            }
            rank += 1;
        }
        rank
    }

    /// Solves `A x = b` for the unique integer solution when `|det A| = 1`.
    ///
    /// A determinant other than ±1 is reported as `NotUnimodular`: in this
    /// crate that always means a smoothness violation further up the stack.
    pub fn solve_unimodular(&self, b: &[BigInt]) -> Result<Vec<BigInt>> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: b.len(),
            });
        }
        let det = self.determinant()?;
        if !det.abs().is_one() {
            return Err(Error::NotUnimodular { det });
        }
        let n = self.rows;
        let mut x = Vec::with_capacity(n);
        for j in 0..n {
            // Cramer: replace column j with b; the division by ±1 is exact.
            let mut m = self.clone();
            for (r, value) in b.iter().enumerate() {
                m.entries[r * n + j] = value.clone();
            }
            let dj = m.determinant()?;
            x.push(&dj * &det); // det is ±1, so dj / det == dj * det
        }
        debug_assert_eq!(self.mul_vec(&x), b.to_vec());
        Ok(x)
    }
}

/// Divides a row by the gcd of its entries to keep elimination small.
fn reduce_row_content(row: &mut [BigInt]) {
    let g = gcd_of_entries(row);
    if g > BigInt::one() {
        for e in row.iter_mut() {
            *e = &*e / &g;
        }
    }
}
