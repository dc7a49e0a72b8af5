//! Dense matrices over an exact field, with reduced row echelon form,
//! kernel bases, linear solving and Sylvester inertia.
//!
//! Vectors are coordinate columns stored as `Vec<F>`; a matrix acts on the
//! left. Row reduction never rounds, so `rref` is a canonical form: two
//! matrices with the same row space reduce to the same matrix.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::scalar::Rat;

/// Field operations needed by the linear algebra kernels.
pub trait Scalar:
    Clone
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
        + Neg<Output = T>
{
}

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Scalar> Mat<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Builds a matrix from its columns (the natural reading for maps given
    /// by images of basis vectors).
    pub fn from_cols(cols: Vec<Vec<F>>) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        assert!(cols.iter().all(|col| col.len() == r), "ragged columns");
        let mut m = Self::zeros(r, c);
        for (j, col) in cols.into_iter().enumerate() {
            for (i, v) in col.into_iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> Vec<F> {
        (0..self.cols).map(|c| self[(r, c)].clone()).collect()
    }

    pub fn col(&self, c: usize) -> Vec<F> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> Mat<G> {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn scale(&self, s: &F) -> Self {
        self.map(|x| x.clone() * s.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b.clone()).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.clone() - b.clone()).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Self {
        self.map(|x| -x.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(r, k)].clone();
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let term = a.clone() * other[(k, c)].clone();
                    out[(r, c)] = out[(r, c)].clone() + term;
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        (0..self.rows)
            .map(|r| {
                let mut acc = F::zero();
                for c in 0..self.cols {
                    if !v[c].is_zero() {
                        acc = acc + self[(r, c)].clone() * v[c].clone();
                    }
                }
                acc
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Mat { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        let mut out = Self::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(r, c)] = self[(r, c)].clone();
            }
            for c in 0..other.cols {
                out[(r, self.cols + c)] = other[(r, c)].clone();
            }
        }
        out
    }

    /// Reduced row echelon form together with the rank.
    ///
    /// Pivots are chosen as the first nonzero entry in each column, so the
    /// result is deterministic and canonical for the row space.
    pub fn rref(&self) -> (Self, usize) {
        let mut m = self.clone();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            let Some(src) = (pivot_row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, src);
            let inv = F::one() / m[(pivot_row, col)].clone();
            for c in col..m.cols {
                m[(pivot_row, c)] = m[(pivot_row, c)].clone() * inv.clone();
            }
            for r in 0..m.rows {
                if r != pivot_row && !m[(r, col)].is_zero() {
                    let factor = m[(r, col)].clone();
                    for c in col..m.cols {
                        let delta = factor.clone() * m[(pivot_row, c)].clone();
                        m[(r, c)] = m[(r, c)].clone() - delta;
                    }
                }
            }
            pivot_row += 1;
            if pivot_row == m.rows {
                break;
            }
        }
        (m, pivot_row)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Canonical basis of `{v : Mv = 0}`, returned as the rows of a matrix in
    /// reduced echelon form. The number of rows is `cols - rank`.
    pub fn kernel_basis(&self) -> Self {
        let (r, rank) = self.rref();
        let mut pivot_col_of_row = Vec::with_capacity(rank);
        let mut is_pivot = vec![false; self.cols];
        let mut col = 0;
        for row in 0..rank {
            while col < self.cols && r[(row, col)].is_zero() {
                col += 1;
            }
            debug_assert!(col < self.cols);
            pivot_col_of_row.push(col);
            is_pivot[col] = true;
        }
        let mut rows = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![F::zero(); self.cols];
            v[free] = F::one();
            for (row, &p) in pivot_col_of_row.iter().enumerate() {
                v[p] = -r[(row, free)].clone();
            }
            rows.push(v);
        }
        if rows.is_empty() {
            return Mat::zeros(0, self.cols);
        }
        let stacked = Mat::from_rows(rows);
        let (canon, krank) = stacked.rref();
        debug_assert_eq!(krank, self.cols - rank);
        Mat { rows: krank, cols: self.cols, data: canon.data[..krank * self.cols].to_vec() }
    }

    /// One exact solution of `Ax = b`, or `None` when the system is
    /// inconsistent. Free variables are set to zero.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(self.rows, b.len(), "right-hand side has wrong length");
        let aug = self.hstack(&Mat::from_cols(vec![b.to_vec()]));
        let (r, rank) = aug.rref();
        let mut x = vec![F::zero(); self.cols];
        for row in 0..rank {
            let Some(p) = (0..aug.cols).find(|&c| !r[(row, c)].is_zero()) else {
                continue;
            };
            if p == self.cols {
                return None;
            }
            x[p] = r[(row, self.cols)].clone();
        }
        Some(x)
    }

    /// Exact inverse, or `None` for a singular matrix.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let aug = self.hstack(&Self::identity(n));
        let (r, _) = aug.rref();
        // Invertible exactly when the left block reduced to the identity;
        // pivots escaping into the right block mean a rank deficit.
        for i in 0..n {
            for j in 0..n {
                let want = if i == j { F::one() } else { F::zero() };
                if r[(i, j)] != want {
                    return None;
                }
            }
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl<F> std::ops::Index<(usize, usize)> for Mat<F> {
    type Output = F;
    fn index(&self, (r, c): (usize, usize)) -> &F {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl<F> std::ops::IndexMut<(usize, usize)> for Mat<F> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut F {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

/// Inertia of a symmetric rational matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Inertia {
    pub pos: usize,
    pub neg: usize,
    pub zero: usize,
}

/// Sylvester inertia of a symmetric matrix over Q, computed by exact
/// congruence diagonalization (simultaneous row and column operations).
pub fn inertia(sym: &Mat<Rat>) -> Inertia {
    assert_eq!(sym.rows(), sym.cols(), "inertia of a non-square matrix");
    let n = sym.rows();
    for i in 0..n {
        for j in 0..i {
            assert_eq!(sym[(i, j)], sym[(j, i)], "inertia of a non-symmetric matrix");
        }
    }
    let mut m = sym.clone();
    let mut pos = 0;
    let mut neg = 0;
    for k in 0..n {
        if m[(k, k)].is_zero() {
            if let Some(l) = (k + 1..n).find(|&l| !m[(l, l)].is_zero()) {
                congruence_swap(&mut m, k, l);
            } else if let Some(l) = (k + 1..n).find(|&l| !m[(k, l)].is_zero()) {
                congruence_add(&mut m, k, l);
            } else {
                continue;
            }
        }
        let pivot = m[(k, k)].clone();
        if pivot.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in k + 1..n {
            if m[(i, k)].is_zero() {
                continue;
            }
            let factor = m[(i, k)].clone() / pivot.clone();
            for c in 0..n {
                let delta = factor.clone() * m[(k, c)].clone();
                m[(i, c)] = m[(i, c)].clone() - delta;
            }
            for r in 0..n {
                let delta = factor.clone() * m[(r, k)].clone();
                m[(r, i)] = m[(r, i)].clone() - delta;
            }
        }
    }
    Inertia { pos, neg, zero: n - pos - neg }
}

fn congruence_swap(m: &mut Mat<Rat>, a: usize, b: usize) {
    let n = m.rows();
    for c in 0..n {
        let t = m[(a, c)].clone();
        m[(a, c)] = m[(b, c)].clone();
        m[(b, c)] = t;
    }
    for r in 0..n {
        let t = m[(r, a)].clone();
        m[(r, a)] = m[(r, b)].clone();
        m[(r, b)] = t;
    }
}

fn congruence_add(m: &mut Mat<Rat>, a: usize, b: usize) {
    let n = m.rows();
    for c in 0..n {
        let t = m[(b, c)].clone();
        m[(a, c)] = m[(a, c)].clone() + t;
    }
    for r in 0..n {
        let t = m[(r, b)].clone();
        m[(r, a)] = m[(r, a)].clone() + t;
    }
}

/// Convenience constructor from integer literals.
pub fn mat_i64(rows: &[&[i64]]) -> Mat<Rat> {
    Mat::from_rows(
        rows.iter().map(|r| r.iter().map(|&x| crate::scalar::rint(x)).collect()).collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rint};

    #[test]
    fn rref_of_identity_is_identity() {
        let id: Mat<Rat> = Mat::identity(2);
        let (r, rank) = id.rref();
        assert_eq!(r, Mat::identity(2));
        assert_eq!(rank, 2);
    }

    #[test]
    fn rref_of_proportional_rows() {
        let m = mat_i64(&[&[2, 4], &[1, 2]]);
        let (r, rank) = m.rref();
        assert_eq!(r, mat_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(rank, 1);
    }

    #[test]
    fn rref_of_ad_e1_on_aff_c_has_rank_two() {
        // Columns are the images of e1..e4 under ad_{e1} in aff(C):
        // ad_{e1} e3 = e3, ad_{e1} e4 = e4, the rest map to zero.
        let ad = mat_i64(&[&[0, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        assert_eq!(ad.rank(), 2);
    }

    #[test]
    fn kernel_of_rank_one_projector() {
        let m = mat_i64(&[&[1, 0], &[0, 0]]);
        let k = m.kernel_basis();
        assert_eq!(k, mat_i64(&[&[0, 1]]));
    }

    #[test]
    fn kernel_of_identity_is_trivial() {
        let id: Mat<Rat> = Mat::identity(3);
        assert_eq!(id.kernel_basis().rows(), 0);
    }

    #[test]
    fn kernel_basis_is_canonical() {
        let m = mat_i64(&[&[1, 2, 3]]);
        let k = m.kernel_basis();
        // Already reduced: leading ones, zeros above and below.
        let (again, _) = k.rref();
        assert_eq!(k, again);
        assert_eq!(k.rows(), 2);
    }

    #[test]
    fn solve_identity_returns_rhs() {
        let id: Mat<Rat> = Mat::identity(3);
        let b = vec![rint(4), rat(-1, 2), rint(0)];
        assert_eq!(id.solve(&b), Some(b.clone()));
    }

    #[test]
    fn solve_inconsistent_returns_none() {
        let m = mat_i64(&[&[1, 1], &[1, 1]]);
        assert_eq!(m.solve(&[rint(1), rint(2)]), None);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = mat_i64(&[&[2, 1], &[7, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Mat::identity(2));
        let singular = mat_i64(&[&[1, 2], &[2, 4]]);
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn inertia_of_diagonal_forms() {
        let m = mat_i64(&[&[1, 0, 0], &[0, -2, 0], &[0, 0, 0]]);
        assert_eq!(inertia(&m), Inertia { pos: 1, neg: 1, zero: 1 });
        // Hyperbolic plane: x*y has inertia (1,1).
        let h = mat_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(inertia(&h), Inertia { pos: 1, neg: 1, zero: 0 });
    }

    #[test]
    fn inertia_is_congruence_invariant_sample() {
        let m = mat_i64(&[&[2, 1, 0], &[1, -3, 1], &[0, 1, 1]]);
        let p = mat_i64(&[&[1, 2, 0], &[0, 1, 5], &[3, 0, 1]]);
        let congruent = p.transpose().mul(&m).mul(&p);
        assert_eq!(inertia(&m), inertia(&congruent));
    }
}
