//! Lie algebras over Q given by structure constants, and the J-independent
//! toolkit: Jacobi checking, commutator ideals, central and derived series,
//! centers, derivations, unimodularity and isomorphism transport.
//!
//! Brackets are stored sparsely for index pairs `i < j` (0-based in memory);
//! antisymmetry is a property of the storage, never of the data. Reports and
//! errors render indices 1-based.

use std::collections::BTreeMap;

use num_traits::Zero;
use thiserror::Error;

use crate::mat::Mat;
use crate::scalar::{GRat, Rat};
use crate::subspace::Subspace;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LieError {
    #[error("bracket index ({i},{j}) out of range for dimension {dim} (indices are 1-based)")]
    IndexOutOfRange { i: usize, j: usize, dim: usize },
    #[error("duplicate bracket entry for pair ({i},{j})")]
    DuplicatePair { i: usize, j: usize },
    #[error("bracket value for pair ({i},{j}) has length {len}, expected {dim}")]
    WrongLength { i: usize, j: usize, len: usize, dim: usize },
    #[error("Jacobi identity fails at {0} basis triple(s); first: {1}")]
    JacobiFailure(usize, JacobiViolation),
    #[error("matrix is not square or does not match the algebra dimension")]
    DimensionMismatch,
    #[error("subspace is not an ideal: [e{i}, u{k}] leaves the subspace")]
    NotAnIdeal { i: usize, k: usize },
}

/// One failing instance of the Jacobi identity, with its residual
/// `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]`.
#[derive(Debug, Clone, PartialEq)]
pub struct JacobiViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub residual: Vec<Rat>,
}

impl std::fmt::Display for JacobiViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "(e{}, e{}, e{}) with residual {}",
            self.i + 1,
            self.j + 1,
            self.k + 1,
            crate::lie::format_vector(&self.residual)
        )
    }
}

/// Renders a coordinate vector as a combination of basis vectors e1, e2, ...
pub fn format_vector(v: &[Rat]) -> String {
    let mut parts = Vec::new();
    for (idx, c) in v.iter().enumerate() {
        if !c.is_zero() {
            parts.push(format!("{}*e{}", c, idx + 1));
        }
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

/// Finite-dimensional Lie algebra over Q with a fixed basis.
#[derive(Debug, Clone, PartialEq)]
pub struct LieAlgebra {
    dim: usize,
    // Key (i, j) with i < j, 0-based; value is [e_i, e_j] as a dense vector.
    table: BTreeMap<(usize, usize), Vec<Rat>>,
}

impl LieAlgebra {
    /// Checked constructor: validates index shape and the Jacobi identity.
    pub fn new(
        dim: usize,
        entries: Vec<((usize, usize), Vec<Rat>)>,
    ) -> Result<Self, LieError> {
        let raw = Self::new_raw(dim, entries)?;
        let violations = raw.jacobi_violations();
        if let Some(first) = violations.first() {
            return Err(LieError::JacobiFailure(violations.len(), first.clone()));
        }
        Ok(raw)
    }

    /// Shape-checked constructor that skips the Jacobi test; used to feed
    /// `jacobi_violations` with deliberately broken tables.
    pub fn new_raw(
        dim: usize,
        entries: Vec<((usize, usize), Vec<Rat>)>,
    ) -> Result<Self, LieError> {
        let mut table = BTreeMap::new();
        for ((i, j), v) in entries {
            if i >= j || j >= dim {
                return Err(LieError::IndexOutOfRange { i: i + 1, j: j + 1, dim });
            }
            if v.len() != dim {
                return Err(LieError::WrongLength { i: i + 1, j: j + 1, len: v.len(), dim });
            }
            if v.iter().all(Zero::is_zero) {
                continue;
            }
            if table.insert((i, j), v).is_some() {
                return Err(LieError::DuplicatePair { i: i + 1, j: j + 1 });
            }
        }
        Ok(LieAlgebra { dim, table })
    }

    /// The abelian algebra of the given dimension.
    pub fn abelian(dim: usize) -> Self {
        LieAlgebra { dim, table: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Sparse view of the stored pairs (i < j, 0-based) and their brackets.
    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &Vec<Rat>)> {
        self.table.iter()
    }

    /// `[e_i, e_j]` for arbitrary basis indices (antisymmetry applied).
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Rat> {
        use std::cmp::Ordering;
        match i.cmp(&j) {
            Ordering::Equal => vec![Rat::zero(); self.dim],
            Ordering::Less => self
                .table
                .get(&(i, j))
                .cloned()
                .unwrap_or_else(|| vec![Rat::zero(); self.dim]),
            Ordering::Greater => match self.table.get(&(j, i)) {
                Some(v) => v.iter().map(|x| -x.clone()).collect(),
                None => vec![Rat::zero(); self.dim],
            },
        }
    }

    /// Bilinear bracket of coordinate vectors.
    pub fn bracket(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = vec![Rat::zero(); self.dim];
        for (&(i, j), c) in &self.table {
            let coeff = x[i].clone() * y[j].clone() - x[j].clone() * y[i].clone();
            if coeff.is_zero() {
                continue;
            }
            for (k, ck) in c.iter().enumerate() {
                if !ck.is_zero() {
                    out[k] = out[k].clone() + coeff.clone() * ck.clone();
                }
            }
        }
        out
    }

    /// Bracket extended C-bilinearly to the complexification.
    pub fn bracket_gaussian(&self, x: &[GRat], y: &[GRat]) -> Vec<GRat> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = vec![GRat::zero(); self.dim];
        for (&(i, j), c) in &self.table {
            let coeff = x[i].clone() * y[j].clone() - x[j].clone() * y[i].clone();
            if coeff.is_zero() {
                continue;
            }
            for (k, ck) in c.iter().enumerate() {
                if !ck.is_zero() {
                    let lift = GRat::new(ck.clone(), Rat::zero());
                    out[k] = out[k].clone() + coeff.clone() * lift;
                }
            }
        }
        out
    }

    /// Matrix of `ad_x` (column j holds `[x, e_j]`).
    pub fn ad(&self, x: &[Rat]) -> Mat<Rat> {
        let cols = (0..self.dim)
            .map(|j| {
                let mut e = vec![Rat::zero(); self.dim];
                e[j] = Rat::from_integer(1.into());
                self.bracket(x, &e)
            })
            .collect();
        Mat::from_cols(cols)
    }

    fn ad_basis(&self, i: usize) -> Mat<Rat> {
        let mut x = vec![Rat::zero(); self.dim];
        x[i] = Rat::from_integer(1.into());
        self.ad(&x)
    }

    /// All failing Jacobi triples; empty exactly when the table defines a
    /// Lie algebra.
    pub fn jacobi_violations(&self) -> Vec<JacobiViolation> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in j + 1..self.dim {
                    let ei = basis_vec(self.dim, i);
                    let ej = basis_vec(self.dim, j);
                    let ek = basis_vec(self.dim, k);
                    let mut residual = self.bracket(&self.bracket(&ei, &ej), &ek);
                    add_into(&mut residual, &self.bracket(&self.bracket(&ej, &ek), &ei));
                    add_into(&mut residual, &self.bracket(&self.bracket(&ek, &ei), &ej));
                    if residual.iter().any(|x| !x.is_zero()) {
                        out.push(JacobiViolation { i, j, k, residual });
                    }
                }
            }
        }
        out
    }

    /// The commutator ideal `[g, g]`, spanned by all basis brackets.
    pub fn commutator_subspace(&self) -> Subspace<Rat> {
        Subspace::span(self.dim, self.table.values().cloned().collect())
    }

    /// `[g, U]` for a subspace `U`.
    pub fn bracket_with_subspace(&self, u: &Subspace<Rat>) -> Subspace<Rat> {
        let mut vectors = Vec::new();
        for i in 0..self.dim {
            let ei = basis_vec(self.dim, i);
            for v in u.basis_vectors() {
                vectors.push(self.bracket(&ei, &v));
            }
        }
        Subspace::span(self.dim, vectors)
    }

    /// `[U, V]` for two subspaces.
    pub fn bracket_subspaces(&self, u: &Subspace<Rat>, v: &Subspace<Rat>) -> Subspace<Rat> {
        let mut vectors = Vec::new();
        for a in u.basis_vectors() {
            for b in v.basis_vectors() {
                vectors.push(self.bracket(&a, &b));
            }
        }
        Subspace::span(self.dim, vectors)
    }

    /// Lower central series `g^0 = g, g^i = [g, g^{i-1}]`, listed until it
    /// stabilizes. A trailing repeated term signals a non-nilpotent algebra;
    /// a trailing zero term signals nilpotency.
    pub fn lower_central_series(&self) -> Vec<Subspace<Rat>> {
        let mut terms = vec![Subspace::full(self.dim)];
        loop {
            let next = self.bracket_with_subspace(terms.last().unwrap());
            let stop = next.is_zero() || next == *terms.last().unwrap();
            terms.push(next);
            if stop {
                return terms;
            }
        }
    }

    /// Derived series `g, g', [g', g'], ...`, listed until it stabilizes.
    pub fn derived_series(&self) -> Vec<Subspace<Rat>> {
        let mut terms = vec![Subspace::full(self.dim)];
        loop {
            let last = terms.last().unwrap();
            let next = self.bracket_subspaces(last, last);
            let stop = next.is_zero() || next == *last;
            terms.push(next);
            if stop {
                return terms;
            }
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().unwrap().is_zero()
    }

    /// Number of steps for the lower central series to reach zero;
    /// `None` for non-nilpotent algebras.
    pub fn nilpotency_class(&self) -> Option<usize> {
        let series = self.lower_central_series();
        series.last().unwrap().is_zero().then(|| series.len() - 1)
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().is_zero()
    }

    /// Center `{x : [x, g] = 0}`, computed as one kernel of the stacked
    /// adjoint matrices.
    pub fn center(&self) -> Subspace<Rat> {
        let mut stacked = Mat::zeros(0, self.dim);
        for i in 0..self.dim {
            stacked = stacked.vstack(&self.ad_basis(i));
        }
        Subspace::from_canonical_rows(self.dim, stacked.kernel_basis())
    }

    /// True when every adjoint map is traceless.
    pub fn is_unimodular(&self) -> bool {
        (0..self.dim).all(|i| {
            let ad = self.ad_basis(i);
            let mut tr = Rat::zero();
            for k in 0..self.dim {
                tr += ad[(k, k)].clone();
            }
            tr.is_zero()
        })
    }

    /// Basis of the derivation algebra `{D : D[x,y] = [Dx,y] + [x,Dy]}`,
    /// found by one linear solve over all basis pairs.
    pub fn derivation_space(&self) -> Vec<Mat<Rat>> {
        let n = self.dim;
        // Unknowns: the n^2 entries of D, ordered row-major.
        let mut rows = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let cij = self.bracket_basis(i, j);
                // Component k of D[e_i,e_j] - [De_i, e_j] - [e_i, De_j] = 0.
                for k in 0..n {
                    let mut row = vec![Rat::zero(); n * n];
                    // D applied to [e_i, e_j]: sum_m c_m * D[k][m].
                    for (m, cm) in cij.iter().enumerate() {
                        if !cm.is_zero() {
                            row[k * n + m] = row[k * n + m].clone() + cm.clone();
                        }
                    }
                    // [De_i, e_j] = sum_r D[r][i] [e_r, e_j].
                    for r in 0..n {
                        let c = self.bracket_basis(r, j);
                        if !c[k].is_zero() {
                            row[r * n + i] = row[r * n + i].clone() - c[k].clone();
                        }
                    }
                    // [e_i, De_j] = sum_r D[r][j] [e_i, e_r].
                    for r in 0..n {
                        let c = self.bracket_basis(i, r);
                        if !c[k].is_zero() {
                            row[r * n + j] = row[r * n + j].clone() - c[k].clone();
                        }
                    }
                    if row.iter().any(|x| !x.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
        let kernel = if rows.is_empty() {
            Mat::<Rat>::zeros(0, n * n).kernel_basis()
        } else {
            Mat::from_rows(rows).kernel_basis()
        };
        (0..kernel.rows())
            .map(|r| {
                let flat = kernel.row(r);
                let mut d = Mat::zeros(n, n);
                for i in 0..n {
                    for j in 0..n {
                        d[(i, j)] = flat[i * n + j].clone();
                    }
                }
                d
            })
            .collect()
    }

    /// True when `D` satisfies the derivation identity on all basis pairs.
    pub fn is_derivation(&self, d: &Mat<Rat>) -> bool {
        if d.rows() != self.dim || d.cols() != self.dim {
            return false;
        }
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let lhs = d.apply(&self.bracket_basis(i, j));
                let rhs1 = self.bracket(&d.col(i), &basis_vec(self.dim, j));
                let rhs2 = self.bracket(&basis_vec(self.dim, i), &d.col(j));
                for k in 0..self.dim {
                    if lhs[k] != rhs1[k].clone() + rhs2[k].clone() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// True when `p` is invertible and intertwines the brackets of `self`
    /// and `other` on every basis pair: `p [x,y]_self = [p x, p y]_other`.
    pub fn is_isomorphism(&self, other: &LieAlgebra, p: &Mat<Rat>) -> bool {
        if self.dim != other.dim || p.rows() != self.dim || p.cols() != self.dim {
            return false;
        }
        if p.rank() < self.dim {
            return false;
        }
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let lhs = p.apply(&self.bracket_basis(i, j));
                let rhs = other.bracket(&p.col(i), &p.col(j));
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// The algebra with brackets conjugated by an invertible `p`, so that
    /// `p` becomes an isomorphism from `self` onto the result.
    pub fn transport(&self, p: &Mat<Rat>) -> Result<LieAlgebra, LieError> {
        if p.rows() != self.dim || p.cols() != self.dim {
            return Err(LieError::DimensionMismatch);
        }
        let p_inv = p.inverse().ok_or(LieError::DimensionMismatch)?;
        let mut entries = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let v = p.apply(&self.bracket(&p_inv.col(i), &p_inv.col(j)));
                entries.push(((i, j), v));
            }
        }
        LieAlgebra::new_raw(self.dim, entries)
    }

    /// Structure constants in a new basis whose vectors are the columns of
    /// `b` (expressed in the old basis).
    pub fn change_basis(&self, b: &Mat<Rat>) -> Result<LieAlgebra, LieError> {
        let b_inv = b.inverse().ok_or(LieError::DimensionMismatch)?;
        let mut entries = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let v = b_inv.apply(&self.bracket(&b.col(i), &b.col(j)));
                entries.push(((i, j), v));
            }
        }
        LieAlgebra::new_raw(self.dim, entries)
    }

    /// `{x : [x, U] = 0}` for an ideal `U`; reports an error when `U` is not
    /// an ideal.
    pub fn centralizer_kernel(&self, u: &Subspace<Rat>) -> Result<Subspace<Rat>, LieError> {
        for i in 0..self.dim {
            let ei = basis_vec(self.dim, i);
            for (k, v) in u.basis_vectors().iter().enumerate() {
                if !u.contains(&self.bracket(&ei, v)) {
                    return Err(LieError::NotAnIdeal { i: i + 1, k: k + 1 });
                }
            }
        }
        let mut stacked = Mat::zeros(0, self.dim);
        for v in u.basis_vectors() {
            // [x, v] = -ad_v(x), so x must lie in the kernel of every ad_v.
            stacked = stacked.vstack(&self.ad(&v));
        }
        Ok(Subspace::from_canonical_rows(self.dim, stacked.kernel_basis()))
    }

    /// The subalgebra structure induced on a bracket-closed subspace,
    /// expressed in the subspace's canonical basis. `None` when the
    /// subspace is not closed under the bracket.
    pub fn restrict_to(&self, sub: &Subspace<Rat>) -> Option<LieAlgebra> {
        let vectors = sub.basis_vectors();
        let k = vectors.len();
        let mut entries = Vec::new();
        for a in 0..k {
            for b in a + 1..k {
                let w = self.bracket(&vectors[a], &vectors[b]);
                let coords = sub.coords_of(&w)?;
                entries.push(((a, b), coords));
            }
        }
        Some(LieAlgebra::new_raw(k, entries).expect("restriction table is well-formed"))
    }

    /// Direct sum with block structure constants.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let n = self.dim;
        let m = other.dim;
        let mut entries = Vec::new();
        for (&(i, j), v) in &self.table {
            let mut w = vec![Rat::zero(); n + m];
            w[..n].clone_from_slice(v);
            entries.push(((i, j), w));
        }
        for (&(i, j), v) in &other.table {
            let mut w = vec![Rat::zero(); n + m];
            w[n..].clone_from_slice(v);
            entries.push(((i + n, j + n), w));
        }
        LieAlgebra::new_raw(n + m, entries).expect("block table is well-formed")
    }
}

/// Standard basis vector.
pub fn basis_vec(dim: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); dim];
    v[i] = Rat::from_integer(1.into());
    v
}

fn add_into(acc: &mut [Rat], other: &[Rat]) {
    for (a, b) in acc.iter_mut().zip(other) {
        *a = a.clone() + b.clone();
    }
}
