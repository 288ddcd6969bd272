//! Exact rational linear algebra.
//!
//! Elimination runs fraction-free over the integers (Bareiss-style
//! Gauss-Jordan): each row is first scaled to integer entries, every update
//! divides exactly by the previous pivot, and the rows are normalized to
//! rationals only once at the end. The reduced row echelon form is unique, so
//! everything returned here is independent of the elimination strategy.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from explicit rows; every row must have `cols` entries.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(RatMatrix {
            rows: nrows,
            cols,
            entries,
        })
    }

    /// Convenience constructor for small integer matrices. Panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .map(|r| r.iter().map(|&v| Rational::from_integer(v.into())).collect())
            .collect();
        Self::from_rows(cols, data).expect("ragged integer matrix")
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    found: col.len(),
                });
            }
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// Appends `rhs` as an extra column.
    fn augmented(&self, rhs: &[Rational]) -> RatMatrix {
        let mut out = RatMatrix::zeros(self.rows, self.cols + 1);
        for (i, r) in rhs.iter().enumerate().take(self.rows) {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            out.set(i, self.cols, r.clone());
        }
        out
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Result of [`rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: RatMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Clears the denominators of a row; the row space is unchanged.
fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    row.iter().map(|v| v.numer() * (&lcm / v.denom())).collect()
}

/// Reduced row echelon form, rank and pivot columns.
pub fn rref(m: &RatMatrix) -> Rref {
    let (rows, cols) = (m.rows, m.cols);
    let mut a: Vec<Vec<BigInt>> = (0..rows).map(|i| integer_row(m.row(i))).collect();

    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let pivot = a[r][col].clone();
        let (pivot_row, others) = split_row(&mut a, r);
        for (i, row) in others {
            let factor = row[col].clone();
            for j in 0..cols {
                let num = &pivot * &row[j] - &factor * &pivot_row[j];
                debug_assert!((&num % &prev).is_zero(), "inexact fraction-free step at row {i}");
                row[j] = num / &prev;
            }
        }
        prev = pivot;
        pivots.push(col);
        r += 1;
    }

    let mut out = RatMatrix::zeros(rows, cols);
    for (k, &pc) in pivots.iter().enumerate() {
        let pivot = a[k][pc].clone();
        for (j, v) in a[k].iter().enumerate() {
            if !v.is_zero() {
                out.set(k, j, Rational::new(v.clone(), pivot.clone()));
            }
        }
    }
    Rref {
        matrix: out,
        rank: pivots.len(),
        pivots,
    }
}

/// Splits off row `r` mutably from every other row (tagged with its index).
fn split_row(a: &mut [Vec<BigInt>], r: usize) -> (&[BigInt], Vec<(usize, &mut Vec<BigInt>)>) {
    let (head, tail) = a.split_at_mut(r);
    let (pivot, tail) = tail.split_first_mut().expect("pivot row in range");
    let others = head
        .iter_mut()
        .enumerate()
        .chain(tail.iter_mut().enumerate().map(|(i, row)| (i + r + 1, row)))
        .collect();
    (pivot.as_slice(), others)
}

pub fn rank(m: &RatMatrix) -> usize {
    rref(m).rank
}

/// Right null space basis: one vector per free column (in increasing column
/// order) with that coordinate set to 1, the other free coordinates 0, and
/// the pivot coordinates read off the reduced form.
pub fn kernel_basis(m: &RatMatrix) -> Vec<Vec<Rational>> {
    let Rref { matrix, pivots, .. } = rref(m);
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..m.cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Rational::zero(); m.cols];
            v[f] = Rational::one();
            for (k, &p) in pivots.iter().enumerate() {
                v[p] = -matrix.get(k, f).clone();
            }
            v
        })
        .collect()
}

/// One solution of `m · v = rhs` (free variables zero), or `None` when the
/// system is inconsistent.
pub fn solve(m: &RatMatrix, rhs: &[Rational]) -> Result<Option<Vec<Rational>>> {
    if rhs.len() != m.rows {
        return Err(Error::DimensionMismatch {
            expected: m.rows,
            found: rhs.len(),
        });
    }
    let Rref { matrix, pivots, .. } = rref(&m.augmented(rhs));
    if pivots.last() == Some(&m.cols) {
        return Ok(None);
    }
    let mut v = vec![Rational::zero(); m.cols];
    for (k, &p) in pivots.iter().enumerate() {
        v[p] = matrix.get(k, m.cols).clone();
    }
    Ok(Some(v))
}

/// Rescales a nonzero vector so that its last nonzero entry is 1.
pub fn normalize_last(v: &mut [Rational]) {
    if let Some(last) = v.iter().rev().find(|x| !x.is_zero()).cloned() {
        if !last.is_one() {
            v.iter_mut().for_each(|x| *x = &*x / &last);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| q(x, 1)).collect()
    }

    #[test]
    fn identity_has_full_rank() {
        let r = rref(&RatMatrix::identity(2));
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivots, vec![0, 1]);
        assert_eq!(r.matrix, RatMatrix::identity(2));
        assert!(kernel_basis(&RatMatrix::identity(2)).is_empty());
    }

    #[test]
    fn repeated_row() {
        let m = RatMatrix::from_i64(&[&[1, 1], &[1, 1]]);
        let r = rref(&m);
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
    }

    #[test]
    fn three_by_three_singular() {
        let m = RatMatrix::from_i64(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        let r = rref(&m);
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivots, vec![0, 1]);
        // Hand elimination: [[1,0,-1],[0,1,2],[0,0,0]].
        assert_eq!(r.matrix, RatMatrix::from_i64(&[&[1, 0, -1], &[0, 1, 2], &[0, 0, 0]]));
        assert_eq!(kernel_basis(&m), vec![ints(&[1, -2, 1])]);
    }

    #[test]
    fn single_relation_kernel() {
        let m = RatMatrix::from_i64(&[&[1, 1]]);
        assert_eq!(kernel_basis(&m), vec![ints(&[-1, 1])]);
    }

    #[test]
    fn empty_matrix() {
        let m = RatMatrix::zeros(0, 0);
        assert_eq!(rref(&m).rank, 0);
        let wide = RatMatrix::zeros(0, 3);
        assert_eq!(kernel_basis(&wide).len(), 3);
    }

    #[test]
    fn rational_entries() {
        let m = RatMatrix::from_rows(2, vec![vec![q(1, 2), q(1, 3)], vec![q(1, 4), q(1, 6)]]).unwrap();
        let r = rref(&m);
        assert_eq!(r.rank, 1);
        assert_eq!(r.matrix.row(0), &[q(1, 1), q(2, 3)]);
    }

    #[test]
    fn solve_examples() {
        assert_eq!(
            solve(&RatMatrix::identity(2), &ints(&[3, 4])).unwrap(),
            Some(ints(&[3, 4]))
        );
        assert_eq!(
            solve(&RatMatrix::from_i64(&[&[1, 1]]), &ints(&[2])).unwrap(),
            Some(ints(&[2, 0]))
        );
        assert_eq!(
            solve(&RatMatrix::from_i64(&[&[1, 2], &[2, 4]]), &ints(&[1, 3])).unwrap(),
            None
        );
    }

    #[test]
    fn solve_dimension_mismatch() {
        let err = solve(&RatMatrix::identity(2), &ints(&[1])).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { expected: 2, found: 1 });
    }

    #[test]
    fn from_rows_rejects_ragged() {
        assert!(RatMatrix::from_rows(2, vec![ints(&[1, 2]), ints(&[1])]).is_err());
    }

    #[test]
    fn normalize_last_scales() {
        let mut v = ints(&[2, -4, 2, 0]);
        normalize_last(&mut v);
        assert_eq!(v, ints(&[1, -2, 1, 0]));
    }
}
