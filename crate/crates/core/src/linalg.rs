//! Exact arithmetic kernel: dense matrices over the rationals and the
//! integers, reduced row echelon form, nullspaces, fraction-free
//! determinants, and Smith normal form invariant factors.
//!
//! All operations are pure and deterministic. Pivots in RREF are
//! normalized to 1, so echelon forms (and therefore nullspace bases)
//! are unique for a given input.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinalgError {
    NotSquare { rows: usize, cols: usize },
    ShapeMismatch { rows: usize, cols: usize, len: usize },
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinalgError::NotSquare { rows, cols } => {
                write!(f, "matrix is {rows}x{cols}, expected square")
            }
            LinalgError::ShapeMismatch { rows, cols, len } => {
                write!(f, "{rows}x{cols} matrix cannot hold {len} entries")
            }
        }
    }
}

/// Dense matrix over the rationals, row-major.
///
/// Entries are `BigRational`, which keeps denominators positive and in
/// lowest terms by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

/// Result of a reduced-row-echelon computation.
#[derive(Debug, Clone)]
pub struct Rref {
    pub rank: usize,
    /// The nonzero rows of the echelon form (rank x cols).
    pub matrix: RationalMatrix,
    /// Pivot column of each nonzero row, strictly increasing.
    pub pivots: Vec<usize>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigRational>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::ShapeMismatch {
                rows,
                cols,
                len: data.len(),
            });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigRational::one();
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<BigRational>>) -> Result<Self, LinalgError> {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for r in rows {
            if r.len() != cols {
                return Err(LinalgError::ShapeMismatch {
                    rows: nrows,
                    cols,
                    len: r.len(),
                });
            }
            data.extend(r);
        }
        Ok(Self {
            rows: nrows,
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigRational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0
    }

    /// Matrix product self * other.
    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::ShapeMismatch {
                rows: self.cols,
                cols: other.rows,
                len: 0,
            });
        }
        let mut out = RationalMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.at(i, j) + a * b;
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form. Returns only the nonzero rows; the row
    /// space is preserved and pivot entries are normalized to 1.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            // First nonzero entry in this column at or below pivot_row.
            let Some(sel) = (pivot_row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, sel);
            // The pivot row came from below the processed block, so its
            // entries left of `col` are already zero.
            let inv = m.at(pivot_row, col).recip();
            m.scale_row(pivot_row, &inv, col);
            for r in 0..m.rows {
                if r == pivot_row || m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col).clone();
                m.row_axpy(r, pivot_row, &factor, col);
            }
            pivots.push(col);
            pivot_row += 1;
        }
        let rank = pivot_row;
        let data = m.data[..rank * m.cols].to_vec();
        Rref {
            rank,
            matrix: RationalMatrix {
                rows: rank,
                cols: m.cols,
                data,
            },
            pivots,
        }
    }

    /// Basis of the right kernel, returned in RREF (deterministic).
    /// Row count equals `cols - rank`.
    pub fn nullspace(&self) -> RationalMatrix {
        let Rref {
            matrix: r, pivots, ..
        } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut rows = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![BigRational::zero(); self.cols];
            v[f] = BigRational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.at(i, f).clone();
            }
            rows.push(v);
        }
        let basis = RationalMatrix::from_rows(self.cols, rows).expect("kernel rows have full width");
        // Normalize to a canonical form so the basis is reproducible.
        basis.rref().matrix
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, factor: &BigRational, from: usize) {
        for c in from..self.cols {
            let idx = r * self.cols + c;
            if !self.data[idx].is_zero() {
                self.data[idx] = &self.data[idx] * factor;
            }
        }
    }

    /// row[target] -= factor * row[source], touching only columns at or
    /// after `from` (the source row is zero before it).
    fn row_axpy(&mut self, target: usize, source: usize, factor: &BigRational, from: usize) {
        for c in from..self.cols {
            let s = source * self.cols + c;
            if self.data[s].is_zero() {
                continue;
            }
            let delta = factor * &self.data[s];
            let t = target * self.cols + c;
            self.data[t] = &self.data[t] - delta;
        }
        debug_assert!(self.at(target, from).is_zero());
    }

    /// Scale every row to integer entries. Returns the integer matrix and
    /// the positive multiplier applied to each row (the lcm of the row's
    /// entry denominators).
    pub fn clear_row_denominators(&self) -> (IntegerMatrix, Vec<BigInt>) {
        let mut out = Vec::with_capacity(self.data.len());
        let mut scales = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let mut l = BigInt::one();
            for c in 0..self.cols {
                l = l.lcm(self.at(r, c).denom());
            }
            for c in 0..self.cols {
                let e = self.at(r, c);
                out.push(e.numer() * (&l / e.denom()));
            }
            scales.push(l);
        }
        (
            IntegerMatrix {
                rows: self.rows,
                cols: self.cols,
                data: out,
            },
            scales,
        )
    }
}

/// Dense matrix over the integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::ShapeMismatch {
                rows,
                cols,
                len: data.len(),
            });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    /// Exact determinant by Bareiss fraction-free elimination.
    /// The 0x0 determinant is 1.
    pub fn det_exact(&self) -> Result<BigInt, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut m = self.data.clone();
        let at = |m: &Vec<BigInt>, r: usize, c: usize| -> BigInt { m[r * n + c].clone() };
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k * n + k].is_zero() {
                let Some(sw) = (k + 1..n).find(|&r| !m[r * n + k].is_zero()) else {
                    return Ok(BigInt::zero());
                };
                for c in 0..n {
                    m.swap(k * n + c, sw * n + c);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &at(&m, i, j) * &at(&m, k, k) - &at(&m, i, k) * &at(&m, k, j);
                    // Exact by the Bareiss identity.
                    m[i * n + j] = num / &prev;
                }
                m[i * n + k] = BigInt::zero();
            }
            prev = at(&m, k, k);
        }
        let d = at(&m, n - 1, n - 1);
        Ok(if sign < 0 { -d } else { d })
    }

    /// Smith normal form invariant factors d_1 | d_2 | ... | d_r, all
    /// positive, where r is the rank. Their product equals the gcd of all
    /// r x r minors (the r-th determinantal divisor).
    pub fn snf_invariant_factors(&self) -> InvariantFactors {
        let mut m = self.clone();
        let mut factors = Vec::new();
        let mut t = 0usize;
        while t < m.rows && t < m.cols {
            let Some((pi, pj)) = m.min_abs_nonzero(t) else {
                break;
            };
            m.swap_rows(t, pi);
            m.swap_cols(t, pj);
            loop {
                // Clear column t by division with remainder; a nonzero
                // remainder becomes the new (smaller) pivot.
                let mut dirty = false;
                for i in t + 1..m.rows {
                    if m.at(i, t).is_zero() {
                        continue;
                    }
                    let q = div_nearest(m.at(i, t), m.at(t, t));
                    m.row_submul(i, t, &q);
                    if !m.at(i, t).is_zero() {
                        m.swap_rows(t, i);
                        dirty = true;
                    }
                }
                for j in t + 1..m.cols {
                    if m.at(t, j).is_zero() {
                        continue;
                    }
                    let q = div_nearest(m.at(t, j), m.at(t, t));
                    m.col_submul(j, t, &q);
                    if !m.at(t, j).is_zero() {
                        m.swap_cols(t, j);
                        dirty = true;
                    }
                }
                if dirty {
                    continue;
                }
                // Pivot must divide the remaining submatrix for the
                // divisibility chain; fold an offending row in and redo.
                let offender = (t + 1..m.rows)
                    .flat_map(|i| (t + 1..m.cols).map(move |j| (i, j)))
                    .find(|&(i, j)| !(m.at(i, j) % m.at(t, t)).is_zero());
                match offender {
                    Some((i, _)) => {
                        m.row_add(t, i);
                    }
                    None => break,
                }
            }
            factors.push(m.at(t, t).abs());
            t += 1;
        }
        InvariantFactors { factors }
    }

    fn min_abs_nonzero(&self, from: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in from..self.rows {
            for j in from..self.cols {
                let e = self.at(i, j);
                if e.is_zero() {
                    continue;
                }
                match best {
                    Some((bi, bj)) if self.at(bi, bj).abs() <= e.abs() => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        best
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row[i] -= q * row[t]
    fn row_submul(&mut self, i: usize, t: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let v = &self.data[t * self.cols + c] * q;
            self.data[i * self.cols + c] -= v;
        }
    }

    /// col[j] -= q * col[t]
    fn col_submul(&mut self, j: usize, t: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let v = &self.data[r * self.cols + t] * q;
            self.data[r * self.cols + j] -= v;
        }
    }

    /// row[t] += row[i]
    fn row_add(&mut self, t: usize, i: usize) {
        for c in 0..self.cols {
            let v = self.data[i * self.cols + c].clone();
            self.data[t * self.cols + c] += v;
        }
    }
}

/// Invariant factors of an integer matrix: positive, each dividing the next.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantFactors {
    factors: Vec<BigInt>,
}

impl InvariantFactors {
    pub fn factors(&self) -> &[BigInt] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// Product of the invariant factors: the gcd of all maximal minors.
    pub fn determinantal_divisor(&self) -> BigInt {
        let mut p = BigInt::one();
        for f in &self.factors {
            p *= f;
        }
        p
    }
}

/// Quotient rounded to nearest, which keeps remainders at most |d|/2.
fn div_nearest(n: &BigInt, d: &BigInt) -> BigInt {
    let (mut q, r) = n.div_rem(d);
    let two_r = &r * 2i32;
    if two_r.abs() > d.abs() {
        if (r.sign() == d.sign()) || r.is_zero() {
            q += 1;
        } else {
            q -= 1;
        }
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn qi(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn rmat(cols: usize, rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_rows(
            cols,
            rows.iter().map(|r| r.iter().map(|&v| qi(v)).collect()).collect(),
        )
        .unwrap()
    }

    fn imat(cols: usize, rows: &[&[i64]]) -> IntegerMatrix {
        let data: Vec<BigInt> = rows
            .iter()
            .flat_map(|r| r.iter().map(|&v| BigInt::from(v)))
            .collect();
        IntegerMatrix::new(rows.len(), cols, data).unwrap()
    }

    #[test]
    fn rref_duplicate_row() {
        let m = rmat(2, &[&[1, 1], &[2, 2]]);
        let r = m.rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.matrix, rmat(2, &[&[1, 1]]));
        assert_eq!(r.pivots, vec![0]);
    }

    #[test]
    fn rref_two_rows() {
        let m = rmat(3, &[&[1, 1, 0], &[0, 1, 1]]);
        let r = m.rref();
        assert_eq!(r.rank, 2);
        assert_eq!(r.matrix, rmat(3, &[&[1, 0, -1], &[0, 1, 1]]));
    }

    #[test]
    fn rref_empty() {
        let m = RationalMatrix::zero(0, 3);
        let r = m.rref();
        assert_eq!(r.rank, 0);
        assert_eq!(r.matrix.rows(), 0);
        assert_eq!(r.matrix.cols(), 3);
    }

    #[test]
    fn rref_idempotent_on_fractions() {
        let m = RationalMatrix::from_rows(
            3,
            vec![
                vec![q(1, 2), q(1, 3), qi(0)],
                vec![qi(1), q(-2, 5), qi(3)],
            ],
        )
        .unwrap();
        let r1 = m.rref();
        let r2 = r1.matrix.rref();
        assert_eq!(r1.matrix, r2.matrix);
        assert_eq!(r1.pivots, r2.pivots);
    }

    #[test]
    fn nullspace_single_row() {
        let m = rmat(2, &[&[1, 1]]);
        assert_eq!(m.nullspace(), rmat(2, &[&[1, -1]]));
    }

    #[test]
    fn nullspace_two_rows() {
        let m = rmat(3, &[&[1, 0, -1], &[0, 1, 1]]);
        assert_eq!(m.nullspace(), rmat(3, &[&[1, -1, 1]]));
    }

    #[test]
    fn nullspace_identity_is_empty() {
        let m = RationalMatrix::identity(3);
        let k = m.nullspace();
        assert_eq!(k.rows(), 0);
        assert_eq!(k.cols(), 3);
    }

    #[test]
    fn nullspace_of_empty_matrix_is_identity() {
        let m = RationalMatrix::zero(0, 3);
        assert_eq!(m.nullspace(), RationalMatrix::identity(3));
    }

    #[test]
    fn rank_nullity() {
        let m = rmat(4, &[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let r = m.rref();
        let k = m.nullspace();
        assert_eq!(r.rank + k.rows(), m.cols());
        // Every kernel row pairs to zero with every matrix row.
        for i in 0..m.rows() {
            for j in 0..k.rows() {
                let dot: BigRational = (0..m.cols()).map(|c| m.at(i, c) * k.at(j, c)).sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn det_examples() {
        assert_eq!(
            imat(2, &[&[1, 2], &[3, 4]]).det_exact().unwrap(),
            BigInt::from(-2)
        );
        assert_eq!(
            imat(2, &[&[2, 4], &[0, 6]]).det_exact().unwrap(),
            BigInt::from(12)
        );
        assert_eq!(imat(1, &[&[7]]).det_exact().unwrap(), BigInt::from(7));
        assert_eq!(
            IntegerMatrix::zero(0, 0).det_exact().unwrap(),
            BigInt::one()
        );
    }

    #[test]
    fn det_rejects_non_square() {
        assert!(imat(3, &[&[1, 2, 3]]).det_exact().is_err());
    }

    #[test]
    fn det_with_zero_pivot() {
        let m = imat(3, &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 5]]);
        assert_eq!(m.det_exact().unwrap(), BigInt::from(-5));
    }

    #[test]
    fn snf_examples() {
        let f = imat(2, &[&[2, 4], &[0, 6]]).snf_invariant_factors();
        assert_eq!(f.factors(), &[BigInt::from(2), BigInt::from(6)]);

        let f = imat(3, &[&[1, 0, 1], &[0, 1, 1]]).snf_invariant_factors();
        assert_eq!(f.factors(), &[BigInt::one(), BigInt::one()]);

        let f = IntegerMatrix::zero(2, 3).snf_invariant_factors();
        assert!(f.factors().is_empty());
    }

    #[test]
    fn snf_divisibility_chain() {
        let m = imat(3, &[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]);
        let f = m.snf_invariant_factors();
        for w in f.factors().windows(2) {
            assert!((&w[1] % &w[0]).is_zero());
        }
        let det = m.det_exact().unwrap().abs();
        assert_eq!(f.determinantal_divisor(), det);
    }

    #[test]
    fn clear_row_denominators_scales() {
        let m = RationalMatrix::from_rows(2, vec![vec![q(1, 2), q(1, 3)]]).unwrap();
        let (im, scales) = m.clear_row_denominators();
        assert_eq!(scales, vec![BigInt::from(6)]);
        assert_eq!(im.at(0, 0), &BigInt::from(3));
        assert_eq!(im.at(0, 1), &BigInt::from(2));
    }

    #[test]
    fn div_nearest_rounds() {
        // Ties keep the truncated quotient; remainders stay at most |d|/2.
        assert_eq!(div_nearest(&BigInt::from(7), &BigInt::from(2)), BigInt::from(3));
        assert_eq!(div_nearest(&BigInt::from(-7), &BigInt::from(2)), BigInt::from(-3));
        assert_eq!(div_nearest(&BigInt::from(5), &BigInt::from(3)), BigInt::from(2));
        assert_eq!(div_nearest(&BigInt::from(-5), &BigInt::from(3)), BigInt::from(-2));
        assert_eq!(div_nearest(&BigInt::from(6), &BigInt::from(3)), BigInt::from(2));
    }
}
