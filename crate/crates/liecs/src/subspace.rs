//! Linear subspaces in canonical form.
//!
//! A subspace is stored as the reduced echelon basis of its row-spanning
//! matrix, so two subspaces are equal exactly when their canonical bases are
//! equal matrices. This is what makes subspace assertions testable verbatim.

use crate::mat::{Mat, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Mat<F>,
}

impl<F: Scalar> Subspace<F> {
    /// Span of the given vectors inside an ambient space of the stated
    /// dimension.
    pub fn span(ambient: usize, vectors: Vec<Vec<F>>) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient);
        }
        assert!(vectors.iter().all(|v| v.len() == ambient), "vector of wrong length");
        let (r, rank) = Mat::from_rows(vectors).rref();
        let rows = (0..rank).map(|i| r.row(i)).collect();
        Subspace { ambient, basis: if rank == 0 { Mat::zeros(0, ambient) } else { Mat::from_rows(rows) } }
    }

    /// Wraps a matrix whose rows are already a canonical echelon basis.
    pub fn from_canonical_rows(ambient: usize, basis: Mat<F>) -> Self {
        debug_assert_eq!(basis.cols(), ambient);
        Subspace { ambient, basis }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Mat::zeros(0, ambient) }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Mat::identity(ambient) }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Canonical echelon basis, one vector per row.
    pub fn basis(&self) -> &Mat<F> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<F>> {
        (0..self.dim()).map(|i| self.basis.row(i)).collect()
    }

    pub fn contains(&self, v: &[F]) -> bool {
        assert_eq!(v.len(), self.ambient);
        // Reduce v against the echelon basis and check the residual.
        let mut v = v.to_vec();
        for row in 0..self.dim() {
            let Some(p) = (0..self.ambient).find(|&c| !self.basis[(row, c)].is_zero()) else {
                continue;
            };
            if !v[p].is_zero() {
                let factor = v[p].clone();
                for c in 0..self.ambient {
                    let delta = factor.clone() * self.basis[(row, c)].clone();
                    v[c] = v[c].clone() - delta;
                }
            }
        }
        v.iter().all(|x| x.is_zero())
    }

    pub fn contains_subspace(&self, other: &Self) -> bool {
        (0..other.dim()).all(|i| self.contains(&other.basis.row(i)))
    }

    pub fn sum(&self, other: &Self) -> Self {
        assert_eq!(self.ambient, other.ambient);
        let mut vectors = self.basis_vectors();
        vectors.extend(other.basis_vectors());
        Self::span(self.ambient, vectors)
    }

    /// Image of the subspace under a linear map (square matrix on the
    /// ambient space).
    pub fn image(&self, map: &Mat<F>) -> Self {
        let vectors = self.basis_vectors().iter().map(|v| map.apply(v)).collect();
        Self::span(self.ambient, vectors)
    }

    /// True when `map` sends the subspace into itself.
    pub fn is_stable_under(&self, map: &Mat<F>) -> bool {
        self.basis_vectors().iter().all(|v| self.contains(&map.apply(v)))
    }

    /// Coordinates of `v` in the canonical basis, or `None` when `v` lies
    /// outside the subspace.
    pub fn coords_of(&self, v: &[F]) -> Option<Vec<F>> {
        if self.dim() == 0 {
            return v.iter().all(|x| x.is_zero()).then(Vec::new);
        }
        let columns = self.basis_vectors();
        let m = Mat::from_cols(columns);
        let x = m.solve(v)?;
        // solve() finds a least-constrained solution; confirm it reproduces v.
        (m.apply(&x) == v).then_some(x)
    }
}
