use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::Rational;
use crate::error::{check_dim, Error, Result};

/// Dense rational matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        let mut m = Matrix::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Convenience constructor from integer rows.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from(v)).collect())
                .collect(),
        )
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        check_dim(self.cols, v.len())?;
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// Horizontal concatenation `(self | other)`.
    pub fn augment(&self, other: &Matrix) -> Result<Matrix> {
        check_dim(self.rows, other.rows)?;
        Ok(Matrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        }))
    }

    pub fn augment_column(&self, b: &[Rational]) -> Result<Matrix> {
        check_dim(self.rows, b.len())?;
        let col = Matrix::from_rows(b.iter().map(|x| vec![x.clone()]).collect());
        if self.rows == 0 {
            return Ok(Matrix::zeros(0, self.cols + 1));
        }
        self.augment(&col)
    }

    pub fn rank(&self) -> usize {
        rref(self).rank
    }

    pub fn checked_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        check_dim(self.cols, rhs.rows)?;
        Ok(Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).map(|k| &self[(i, k)] * &rhs[(k, j)]).sum()
        }))
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    /// Panics on shape mismatch; use [`Matrix::checked_mul`] otherwise.
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs).expect("matrix shape mismatch")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_rows()).finish()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<Rational>>::deserialize(deserializer)?;
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(serde::de::Error::custom("ragged matrix rows"));
        }
        Ok(Matrix::from_rows(rows))
    }
}

/// Reduced row-echelon form together with rank and pivot columns (0-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

fn row_to_integers(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect()
}

fn make_primitive(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g > BigInt::one() {
        for x in row.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Gauss-Jordan elimination carried out over the integers: every row is
/// cleared of denominators up front, rows are combined by cross
/// multiplication and kept primitive, and pivots are normalised to one only
/// at the end.
pub fn rref(m: &Matrix) -> Rref {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<BigInt>> = (0..rows).map(|i| row_to_integers(m.row(i))).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let pivot_row = a[r].clone();
        let pv = &pivot_row[c];
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = &*x * pv - &factor * y;
            }
            make_primitive(row);
        }
        pivots.push(c);
        r += 1;
    }
    let mut reduced = Matrix::zeros(rows, cols);
    for (i, &c) in pivots.iter().enumerate() {
        let pv = a[i][c].clone();
        for j in 0..cols {
            reduced[(i, j)] = Rational::new(a[i][j].clone(), pv.clone());
        }
    }
    Rref {
        reduced,
        rank: pivots.len(),
        pivots,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SolutionStatus {
    Inconsistent,
    Unique,
    Affine,
}

/// Exact description of `{x : A x = b}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolutionSet {
    pub status: SolutionStatus,
    pub particular: Option<Vec<Rational>>,
    pub nullspace_basis: Vec<Vec<Rational>>,
}

impl SolutionSet {
    pub fn is_consistent(&self) -> bool {
        self.status != SolutionStatus::Inconsistent
    }

    /// A deterministic nonzero member of the set, if there is one.
    pub fn nonzero_member(&self) -> Option<Vec<Rational>> {
        let p = self.particular.as_ref()?;
        if p.iter().any(|x| !x.is_zero()) {
            return Some(p.clone());
        }
        self.nullspace_basis
            .first()
            .map(|v| p.iter().zip(v).map(|(a, b)| a + b).collect())
    }
}

pub fn solve_linear(a: &Matrix, b: &[Rational]) -> Result<SolutionSet> {
    check_dim(a.rows(), b.len())?;
    let n = a.cols();
    let aug = if a.rows() == 0 {
        Matrix::zeros(0, n + 1)
    } else {
        a.augment_column(b)?
    };
    let Rref { reduced, pivots, .. } = rref(&aug);
    if pivots.last() == Some(&n) {
        return Ok(SolutionSet {
            status: SolutionStatus::Inconsistent,
            particular: None,
            nullspace_basis: Vec::new(),
        });
    }
    let mut particular = vec![Rational::zero(); n];
    for (i, &c) in pivots.iter().enumerate() {
        particular[c] = reduced[(i, n)].clone();
    }
    let nullspace_basis = nullspace_from_rref(&reduced, &pivots, n);
    let status = if nullspace_basis.is_empty() {
        SolutionStatus::Unique
    } else {
        SolutionStatus::Affine
    };
    Ok(SolutionSet {
        status,
        particular: Some(particular),
        nullspace_basis,
    })
}

fn nullspace_from_rref(reduced: &Matrix, pivots: &[usize], n: usize) -> Vec<Vec<Rational>> {
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); n];
            v[free] = Rational::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -&reduced[(i, free)];
            }
            v
        })
        .collect()
}

/// Basis of `{x : A x = 0}`.
pub fn nullspace(a: &Matrix) -> Vec<Vec<Rational>> {
    let Rref { reduced, pivots, .. } = rref(a);
    nullspace_from_rref(&reduced, &pivots, a.cols())
}

pub fn invert(a: &Matrix) -> Result<Matrix> {
    if !a.is_square() {
        return Err(Error::DimMismatch {
            expected: a.rows(),
            found: a.cols(),
        });
    }
    let n = a.rows();
    if n == 0 {
        return Ok(Matrix::zeros(0, 0));
    }
    let Rref { reduced, rank, pivots } = rref(&a.augment(&Matrix::identity(n))?);
    if rank < n || pivots[n - 1] >= n {
        return Err(Error::Singular);
    }
    Ok(Matrix::from_fn(n, n, |i, j| reduced[(i, n + j)].clone()))
}

pub fn determinant_is_zero(a: &Matrix) -> bool {
    a.rank() < a.rows()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    #[test]
    fn rref_identity() {
        let r = rref(&Matrix::identity(2));
        assert_eq!(r.reduced, Matrix::identity(2));
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivots, vec![0, 1]);
    }

    #[test]
    fn rref_rank_deficient_block() {
        let r = rref(&Matrix::from_ints(&[&[2, 0], &[4, 0]]));
        assert_eq!(r.reduced, Matrix::from_ints(&[&[1, 0], &[0, 0]]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
    }

    #[test]
    fn rref_full_rank_block() {
        let r = rref(&Matrix::from_ints(&[&[2, -1], &[4, 1]]));
        assert_eq!(r.reduced, Matrix::identity(2));
        assert_eq!(r.rank, 2);
    }

    #[test]
    fn rref_with_fractions() {
        let m = Matrix::from_rows(vec![
            vec![q(1, 2), q(1, 3), q(1, 1)],
            vec![q(1, 4), q(1, 6), q(1, 2)],
        ]);
        let r = rref(&m);
        assert_eq!(r.rank, 1);
        assert_eq!(r.reduced.row(0), &[q(1, 1), q(2, 3), q(2, 1)]);
    }

    #[test]
    fn solve_unique() {
        let s = solve_linear(&Matrix::from_ints(&[&[2, 0], &[4, 3]]), &[q(1, 1), q(1, 1)]).unwrap();
        assert_eq!(s.status, SolutionStatus::Unique);
        assert_eq!(s.particular, Some(vec![q(1, 2), q(-1, 3)]));
    }

    #[test]
    fn solve_inconsistent() {
        let s = solve_linear(&Matrix::from_ints(&[&[2, 0], &[4, 0]]), &[q(1, 1), q(1, 1)]).unwrap();
        assert_eq!(s.status, SolutionStatus::Inconsistent);
        assert!(s.particular.is_none());
    }

    #[test]
    fn solve_zero_system() {
        let s = solve_linear(&Matrix::zeros(2, 2), &[Rational::zero(), Rational::zero()]).unwrap();
        assert_eq!(s.status, SolutionStatus::Affine);
        assert_eq!(s.nullspace_basis.len(), 2);
    }

    #[test]
    fn solve_dim_mismatch() {
        assert!(matches!(
            solve_linear(&Matrix::zeros(2, 2), &[Rational::zero()]),
            Err(Error::DimMismatch { .. })
        ));
    }

    #[test]
    fn invert_examples() {
        let inv = invert(&Matrix::from_ints(&[&[2, -1], &[4, 1]])).unwrap();
        assert_eq!(
            inv,
            Matrix::from_rows(vec![vec![q(1, 6), q(1, 6)], vec![q(-2, 3), q(1, 3)]])
        );
        assert_eq!(invert(&Matrix::identity(3)).unwrap(), Matrix::identity(3));
        assert_eq!(
            invert(&Matrix::from_ints(&[&[2, 0], &[4, 0]])),
            Err(Error::Singular)
        );
    }
}
