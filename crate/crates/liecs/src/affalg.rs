//! Commutative associative algebras and the doubling construction that
//! equips A + A with the bracket [(x,y),(x',y')] = (0, xy' - x'y) and the
//! standard structure J(x,y) = (-y, x).
//!
//! The five three-dimensional algebras with A^2 = A are stored as explicit
//! multiplication tables; a regeneration test rebuilds each table from its
//! matrix realization.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::cstruct::AlmostComplexStructure;
use crate::lie::LieAlgebra;
use crate::mat::{inertia, mat_i64, Inertia, Mat};
use crate::scalar::{rint, Rat};
use crate::subspace::Subspace;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AssocError {
    #[error("product index ({i},{j}) out of range for dimension {dim} (1-based)")]
    IndexOutOfRange { i: usize, j: usize, dim: usize },
    #[error("product value for ({i},{j}) has length {len}, expected {dim}")]
    WrongLength { i: usize, j: usize, len: usize, dim: usize },
    #[error("duplicate product entry for ({i},{j})")]
    DuplicatePair { i: usize, j: usize },
    #[error("associativity fails at {0} basis triple(s); first: (e{1}, e{2}, e{3})")]
    NotAssociative(usize, usize, usize, usize),
}

/// One failing associativity instance with its residual
/// `(e_i e_j) e_k - e_i (e_j e_k)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AssocViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub residual: Vec<Rat>,
}

/// Commutative associative algebra given by a symmetric multiplication
/// table (stored for i <= j, 0-based).
#[derive(Debug, Clone, PartialEq)]
pub struct CommAssocAlgebra {
    dim: usize,
    table: std::collections::BTreeMap<(usize, usize), Vec<Rat>>,
}

impl CommAssocAlgebra {
    pub fn new(
        dim: usize,
        entries: Vec<((usize, usize), Vec<Rat>)>,
    ) -> Result<Self, AssocError> {
        let raw = Self::new_raw(dim, entries)?;
        let violations = raw.assoc_violations();
        if let Some(v) = violations.first() {
            return Err(AssocError::NotAssociative(violations.len(), v.i + 1, v.j + 1, v.k + 1));
        }
        Ok(raw)
    }

    /// Shape-checked constructor without the associativity test.
    pub fn new_raw(
        dim: usize,
        entries: Vec<((usize, usize), Vec<Rat>)>,
    ) -> Result<Self, AssocError> {
        let mut table = std::collections::BTreeMap::new();
        for ((i, j), v) in entries {
            let (i, j) = if i <= j { (i, j) } else { (j, i) };
            if j >= dim {
                return Err(AssocError::IndexOutOfRange { i: i + 1, j: j + 1, dim });
            }
            if v.len() != dim {
                return Err(AssocError::WrongLength { i: i + 1, j: j + 1, len: v.len(), dim });
            }
            if v.iter().all(Zero::is_zero) {
                continue;
            }
            if table.insert((i, j), v).is_some() {
                return Err(AssocError::DuplicatePair { i: i + 1, j: j + 1 });
            }
        }
        Ok(CommAssocAlgebra { dim, table })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &Vec<Rat>)> {
        self.table.iter()
    }

    pub fn product_basis(&self, i: usize, j: usize) -> Vec<Rat> {
        let key = if i <= j { (i, j) } else { (j, i) };
        self.table.get(&key).cloned().unwrap_or_else(|| vec![Rat::zero(); self.dim])
    }

    pub fn product(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let c = self.product_basis(i, j);
                let w = x[i].clone() * y[j].clone();
                for (k, ck) in c.iter().enumerate() {
                    if !ck.is_zero() {
                        out[k] = out[k].clone() + w.clone() * ck.clone();
                    }
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by `x` (column j holds `x * e_j`).
    pub fn left_mult(&self, x: &[Rat]) -> Mat<Rat> {
        let cols = (0..self.dim)
            .map(|j| {
                let mut e = vec![Rat::zero(); self.dim];
                e[j] = Rat::one();
                self.product(x, &e)
            })
            .collect();
        Mat::from_cols(cols)
    }

    /// All failing associativity triples; empty exactly when associative.
    pub fn assoc_violations(&self) -> Vec<AssocViolation> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let ei = unit(self.dim, i);
                    let ej = unit(self.dim, j);
                    let ek = unit(self.dim, k);
                    let lhs = self.product(&self.product(&ei, &ej), &ek);
                    let rhs = self.product(&ei, &self.product(&ej, &ek));
                    let residual: Vec<Rat> =
                        lhs.iter().zip(&rhs).map(|(a, b)| a.clone() - b.clone()).collect();
                    if residual.iter().any(|x| !x.is_zero()) {
                        out.push(AssocViolation { i, j, k, residual });
                    }
                }
            }
        }
        out
    }

    /// Span of all basis products, and whether a two-sided unit exists.
    pub fn square_subspace(&self) -> (Subspace<Rat>, bool) {
        let square = Subspace::span(self.dim, self.table.values().cloned().collect());
        // Unit equation: u * e_i = e_i for every i, linear in u.
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for i in 0..self.dim {
            for k in 0..self.dim {
                // Coefficient of u_m in (u * e_i)_k is (e_m e_i)_k.
                let row: Vec<Rat> =
                    (0..self.dim).map(|m| self.product_basis(m, i)[k].clone()).collect();
                rows.push(row);
                rhs.push(if i == k { Rat::one() } else { Rat::zero() });
            }
        }
        let has_unit = Mat::from_rows(rows).solve(&rhs).is_some();
        (square, has_unit)
    }

    /// Annihilator `{x : x A = 0}`.
    pub fn annihilator(&self) -> Subspace<Rat> {
        let mut stacked = Mat::zeros(0, self.dim);
        for j in 0..self.dim {
            stacked = stacked.vstack(&self.left_mult(&unit(self.dim, j)));
        }
        // x with e_j * x = 0 for all j; commutativity makes this the
        // two-sided annihilator.
        Subspace::from_canonical_rows(self.dim, stacked.kernel_basis())
    }

    /// Trace form tau(x, y) = tr(L_{xy}) as a symmetric matrix.
    pub fn trace_form(&self) -> Mat<Rat> {
        let mut m = Mat::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            for j in i..self.dim {
                let l = self.left_mult(&self.product_basis(i, j));
                let mut tr = Rat::zero();
                for k in 0..self.dim {
                    tr += l[(k, k)].clone();
                }
                m[(i, j)] = tr.clone();
                m[(j, i)] = tr;
            }
        }
        m
    }

    /// Nilradical, computed as the radical of the trace form (valid in
    /// characteristic zero).
    pub fn nilradical(&self) -> Subspace<Rat> {
        Subspace::from_canonical_rows(self.dim, self.trace_form().kernel_basis())
    }

    /// The doubling A + A with bracket `[(x,y),(x',y')] = (0, xy' - x'y)` and
    /// standard structure J(x,y) = (-y, x). Always a Lie algebra with an
    /// abelian structure when A is commutative associative.
    pub fn aff_of(&self) -> (LieAlgebra, AlmostComplexStructure) {
        let m = self.dim;
        let dim = 2 * m;
        let mut entries = Vec::new();
        // Basis: a_1..a_m (first copy), b_1..b_m (second copy).
        // [a_i, b_j] = (0, e_i e_j); first-copy and second-copy pairs commute.
        for i in 0..m {
            for j in 0..m {
                let prod = self.product_basis(i, j);
                let mut v = vec![Rat::zero(); dim];
                for (k, c) in prod.iter().enumerate() {
                    v[m + k] = c.clone();
                }
                entries.push(((i, m + j), v));
            }
        }
        let lie = LieAlgebra::new(dim, entries)
            .expect("doubling of a commutative associative algebra satisfies Jacobi");
        let pairs: Vec<(usize, usize)> = (0..m).map(|i| (i, m + i)).collect();
        let acs = crate::catalog::structures::j_pairs(dim, &pairs);
        (lie, acs)
    }
}

fn unit(dim: usize, k: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); dim];
    v[k] = Rat::one();
    v
}

/// The commutative associative multiplication `x * y = [x, Jy]` induced on
/// the commutator ideal by a non-proper abelian structure (one with
/// `g = g' + Jg'` and `g' ∩ Jg' = 0`). Returns the algebra together with
/// the commutator ideal it lives on; `None` when the pair is not of this
/// shape.
pub fn assoc_from_pair(
    lie: &LieAlgebra,
    acs: &AlmostComplexStructure,
) -> Option<(CommAssocAlgebra, Subspace<Rat>)> {
    let commutator = lie.commutator_subspace();
    let m = commutator.dim();
    if 2 * m != lie.dim() {
        return None;
    }
    let image = commutator.image(acs.matrix());
    if commutator.sum(&image).dim() != lie.dim() {
        return None;
    }
    let vectors = commutator.basis_vectors();
    let mut entries = Vec::new();
    for i in 0..m {
        for j in i..m {
            let w = lie.bracket(&vectors[i], &acs.apply(&vectors[j]));
            let coords = commutator.coords_of(&w)?;
            entries.push(((i, j), coords));
        }
    }
    CommAssocAlgebra::new(m, entries).ok().map(|a| (a, commutator))
}

/// The identification `(x, y) -> y - Jx` from the doubling of the induced
/// algebra back onto the original pair, as a matrix in the doubling basis
/// `(a_1..a_m, b_1..b_m)`.
pub fn doubling_identification(
    acs: &AlmostComplexStructure,
    commutator: &Subspace<Rat>,
) -> Mat<Rat> {
    let vectors = commutator.basis_vectors();
    let mut cols = Vec::new();
    for v in &vectors {
        cols.push(acs.apply(v).into_iter().map(|x| -x).collect());
    }
    for v in &vectors {
        cols.push(v.clone());
    }
    Mat::from_cols(cols)
}

/// Exact invariants separating the catalog algebras: dimensions of the
/// square, annihilator, nilradical and its square, existence of a unit and
/// the inertia of the trace form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssocInvariants {
    pub dim: usize,
    pub square_dim: usize,
    pub has_unit: bool,
    pub annihilator_dim: usize,
    pub nilradical_dim: usize,
    pub nilradical_square_dim: usize,
    pub trace_form_inertia: Inertia,
}

pub fn invariants(a: &CommAssocAlgebra) -> AssocInvariants {
    let (square, has_unit) = a.square_subspace();
    let nil = a.nilradical();
    let nil_vectors = nil.basis_vectors();
    let mut squares = Vec::new();
    for x in &nil_vectors {
        for y in &nil_vectors {
            squares.push(a.product(x, y));
        }
    }
    let nil_square = Subspace::span(a.dim(), squares);
    AssocInvariants {
        dim: a.dim(),
        square_dim: square.dim(),
        has_unit,
        annihilator_dim: a.annihilator().dim(),
        nilradical_dim: nil.dim(),
        nilradical_square_dim: nil_square.dim(),
        trace_form_inertia: inertia(&a.trace_form()),
    }
}

/// Matrix realizations of the five three-dimensional algebras with
/// A^2 = A, as triples of generator matrices.
pub fn realization(k: usize) -> [Mat<Rat>; 3] {
    match k {
        1 => [
            mat_i64(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 0]]),
            mat_i64(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, 0]]),
            mat_i64(&[&[0, 0, 0], &[0, 0, 0], &[0, 0, 1]]),
        ],
        2 => [
            mat_i64(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 0]]),
            mat_i64(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, 1]]),
            mat_i64(&[&[0, 0, 0], &[0, 0, -1], &[0, 1, 0]]),
        ],
        3 => [
            mat_i64(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 0]]),
            mat_i64(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, 1]]),
            mat_i64(&[&[0, 0, 0], &[0, 0, 1], &[0, 0, 0]]),
        ],
        4 => [
            mat_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]),
            mat_i64(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]),
            mat_i64(&[&[0, 0, 1], &[0, 0, 0], &[0, 0, 0]]),
        ],
        5 => [
            mat_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]),
            mat_i64(&[&[0, 0, 0], &[0, 0, 1], &[0, 0, 0]]),
            mat_i64(&[&[0, 0, 1], &[0, 0, 0], &[0, 0, 0]]),
        ],
        _ => panic!("realizations are numbered 1..=5"),
    }
}

/// Multiplication table recovered from the matrix products of a
/// realization.
pub fn algebra_from_realization(gens: &[Mat<Rat>; 3]) -> CommAssocAlgebra {
    let dim = 3;
    // Express each generator product back in the generator basis by solving
    // a linear system over the 9 matrix entries.
    let mut coords = Vec::new();
    for g in gens.iter() {
        let mut flat = Vec::new();
        for r in 0..3 {
            for c in 0..3 {
                flat.push(g[(r, c)].clone());
            }
        }
        coords.push(flat);
    }
    let basis_matrix = Mat::from_cols(coords);
    let mut entries = Vec::new();
    for i in 0..dim {
        for j in i..dim {
            let prod = gens[i].mul(&gens[j]);
            let mut flat = Vec::new();
            for r in 0..3 {
                for c in 0..3 {
                    flat.push(prod[(r, c)].clone());
                }
            }
            let x = basis_matrix
                .solve(&flat)
                .expect("generator products stay inside the realization span");
            entries.push(((i, j), x));
        }
    }
    CommAssocAlgebra::new(dim, entries).expect("matrix algebras are associative")
}

/// The stored multiplication tables of the five algebras.
pub fn stored_algebra(k: usize) -> CommAssocAlgebra {
    let e = |k: usize| unit(3, k);
    let neg = |k: usize| {
        let mut v = vec![Rat::zero(); 3];
        v[k] = rint(-1);
        v
    };
    let entries = match k {
        // Three orthogonal idempotents.
        1 => vec![((0, 0), e(0)), ((1, 1), e(1)), ((2, 2), e(2))],
        // R x C: u2 is the unit of the plane block and u3 squares to -u2.
        2 => vec![((0, 0), e(0)), ((1, 1), e(1)), ((1, 2), e(2)), ((2, 2), neg(1))],
        // R x (dual numbers).
        3 => vec![((0, 0), e(0)), ((1, 1), e(1)), ((1, 2), e(2))],
        // Truncated polynomials of degree < 3: u2^2 = u3.
        4 => vec![
            ((0, 0), e(0)),
            ((0, 1), e(1)),
            ((0, 2), e(2)),
            ((1, 1), e(2)),
        ],
        // Unit plus two square-zero generators.
        5 => vec![((0, 0), e(0)), ((0, 1), e(1)), ((0, 2), e(2))],
        _ => panic!("algebras are numbered 1..=5"),
    };
    CommAssocAlgebra::new(3, entries).expect("stored tables are associative")
}
