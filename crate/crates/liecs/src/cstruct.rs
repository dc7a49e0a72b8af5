//! Almost complex structures on Lie algebras: the integrable / abelian /
//! bi-invariant trichotomy, the i-eigenspace over Q(i), the J-saturated
//! commutator ideal, J-central series, the symmetric form attached to a
//! one-dimensional commutator, and derivation pairs.
//!
//! Convention: a structure is a square rational matrix in the column
//! convention, i.e. column c holds the coordinates of `J e_c`. Every formula
//! of the shape `J e_1 = e_2` populates column 1 with the coordinates of
//! `e_2`; a silent row/column flip would negate the abelian checks, so all
//! constructors in this crate go through [`AlmostComplexStructure::new`].

use num_traits::{One, Zero};
use thiserror::Error;

use crate::lie::{basis_vec, LieAlgebra};
use crate::mat::{inertia, Mat};
use crate::scalar::{GRat, Rat};
use crate::subspace::Subspace;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AcsError {
    #[error("structure matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("structure matrix must act on an even-dimensional space, got {0}")]
    OddDimension(usize),
    #[error("J^2 = -I fails: column {col} of J^2 is not -e{col}")]
    NotAnAcs { col: usize },
    #[error("dimension mismatch: algebra has dimension {lie}, J acts on dimension {acs}")]
    DimensionMismatch { lie: usize, acs: usize },
    #[error("conjugating matrix is singular")]
    SingularConjugator,
    #[error("complement requested of a subspace that is not J-stable")]
    UnstableSubspace,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BformError {
    #[error("form undefined: commutator ideal has dimension {0}, expected 1")]
    CommutatorNotALine(usize),
    #[error("form undefined: the commutator ideal is not central")]
    CommutatorNotCentral,
    #[error("form undefined: the center is not J-stable")]
    CenterNotStable,
    #[error("form is not symmetric at basis pair ({i},{j}); J is not abelian here")]
    NotSymmetric { i: usize, j: usize },
}

/// Endomorphism with `J^2 = -I`, checked at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct AlmostComplexStructure {
    j: Mat<Rat>,
}

impl AlmostComplexStructure {
    pub fn new(j: Mat<Rat>) -> Result<Self, AcsError> {
        if j.rows() != j.cols() {
            return Err(AcsError::NotSquare { rows: j.rows(), cols: j.cols() });
        }
        if !j.rows().is_multiple_of(2) {
            return Err(AcsError::OddDimension(j.rows()));
        }
        let sq = j.mul(&j);
        let minus_id = Mat::<Rat>::identity(j.rows()).neg();
        for c in 0..j.cols() {
            if sq.col(c) != minus_id.col(c) {
                return Err(AcsError::NotAnAcs { col: c + 1 });
            }
        }
        Ok(AlmostComplexStructure { j })
    }

    pub fn dim(&self) -> usize {
        self.j.rows()
    }

    pub fn matrix(&self) -> &Mat<Rat> {
        &self.j
    }

    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        self.j.apply(v)
    }

    /// `P J P^{-1}` for an invertible `P`.
    pub fn conjugate(&self, p: &Mat<Rat>) -> Result<Self, AcsError> {
        let p_inv = p.inverse().ok_or(AcsError::SingularConjugator)?;
        // Conjugation preserves J^2 = -I exactly, so rebuild unchecked-free.
        Self::new(p.mul(&self.j).mul(&p_inv))
    }
}

/// Identity-by-identity report of the structure equations, with the failing
/// basis pairs for every identity that does not hold. Indices are 0-based in
/// memory and rendered 1-based.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureReport {
    /// `J^2 = -I`.
    pub is_acs: bool,
    /// The Nijenhuis expression `J[x,y] - [Jx,y] - [x,Jy] - J[Jx,Jy]` vanishes.
    pub integrable: bool,
    /// `[Jx, Jy] = [x, y]`.
    pub abelian: bool,
    /// `J[x, y] = [Jx, y]`.
    pub bi_invariant: bool,
    pub nijenhuis_failures: Vec<(usize, usize)>,
    pub abelian_failures: Vec<(usize, usize)>,
    pub bi_invariant_failures: Vec<(usize, usize)>,
}

/// Evaluates the three structure identities of an endomorphism on every
/// basis pair. Works on a raw matrix so that invalid inputs can still be
/// diagnosed; `is_acs` records whether `J^2 = -I`.
pub fn check_matrix(lie: &LieAlgebra, j: &Mat<Rat>) -> Result<StructureReport, AcsError> {
    let n = lie.dim();
    if j.rows() != j.cols() {
        return Err(AcsError::NotSquare { rows: j.rows(), cols: j.cols() });
    }
    if j.rows() != n {
        return Err(AcsError::DimensionMismatch { lie: n, acs: j.rows() });
    }
    let is_acs = j.mul(j) == Mat::<Rat>::identity(n).neg();

    let mut nijenhuis_failures = Vec::new();
    let mut abelian_failures = Vec::new();
    let mut bi_invariant_failures = Vec::new();

    for i in 0..n {
        let ei = basis_vec(n, i);
        let jei = j.col(i);
        // The Nijenhuis and abelian expressions are antisymmetric, so pairs
        // i < j suffice; bi-invariance is merely bilinear and needs every
        // ordered pair, including i = j.
        for k in 0..n {
            let ek = basis_vec(n, k);
            let jek = j.col(k);
            let bik = lie.bracket(&ei, &ek);
            let biv = vec_sub(&j.apply(&bik), &lie.bracket(&jei, &ek));
            if biv.iter().any(|x| !x.is_zero()) {
                bi_invariant_failures.push((i, k));
            }
            if k <= i {
                continue;
            }
            let jj = lie.bracket(&jei, &jek);
            let ab = vec_sub(&jj, &bik);
            if ab.iter().any(|x| !x.is_zero()) {
                abelian_failures.push((i, k));
            }
            let mut nij = j.apply(&bik);
            sub_into(&mut nij, &lie.bracket(&jei, &ek));
            sub_into(&mut nij, &lie.bracket(&ei, &jek));
            sub_into(&mut nij, &j.apply(&jj));
            if nij.iter().any(|x| !x.is_zero()) {
                nijenhuis_failures.push((i, k));
            }
        }
    }

    Ok(StructureReport {
        is_acs,
        integrable: nijenhuis_failures.is_empty(),
        abelian: abelian_failures.is_empty(),
        bi_invariant: bi_invariant_failures.is_empty(),
        nijenhuis_failures,
        abelian_failures,
        bi_invariant_failures,
    })
}

pub fn check_structure(
    lie: &LieAlgebra,
    acs: &AlmostComplexStructure,
) -> Result<StructureReport, AcsError> {
    check_matrix(lie, acs.matrix())
}

/// The i-eigenspace of J inside the complexification, with closure flags.
#[derive(Debug, Clone, PartialEq)]
pub struct IEigenspace {
    pub basis: Subspace<GRat>,
    pub is_subalgebra: bool,
    pub is_abelian_subalgebra: bool,
    pub is_ideal: bool,
}

/// Computes the i-eigenspace of J in the complexified algebra and tests it
/// for closure under the bracket. This is an independent route to the
/// structure flags: abelian J is equivalent to this space being abelian,
/// bi-invariant J to it being an ideal.
pub fn i_eigenspace(lie: &LieAlgebra, acs: &AlmostComplexStructure) -> IEigenspace {
    let n = lie.dim();
    let jc = acs.matrix().map(|r| GRat::new(r.clone(), Rat::zero()));
    let mut shifted = jc.clone();
    let i_unit = GRat::new(Rat::zero(), Rat::one());
    for d in 0..n {
        shifted[(d, d)] = shifted[(d, d)].clone() - i_unit.clone();
    }
    let basis = Subspace::from_canonical_rows(n, shifted.kernel_basis());
    debug_assert_eq!(basis.dim(), n / 2);

    let vectors = basis.basis_vectors();
    let mut is_subalgebra = true;
    let mut is_abelian = true;
    for a in 0..vectors.len() {
        for b in a + 1..vectors.len() {
            let br = lie.bracket_gaussian(&vectors[a], &vectors[b]);
            if br.iter().any(|x| !x.is_zero()) {
                is_abelian = false;
            }
            if !basis.contains(&br) {
                is_subalgebra = false;
            }
        }
    }
    let mut is_ideal = true;
    'outer: for i in 0..n {
        let mut e = vec![GRat::zero(); n];
        e[i] = GRat::one();
        for v in &vectors {
            if !basis.contains(&lie.bracket_gaussian(&e, v)) {
                is_ideal = false;
                break 'outer;
            }
        }
    }
    IEigenspace { basis, is_subalgebra, is_abelian_subalgebra: is_abelian, is_ideal }
}

/// The J-saturated commutator ideal `g' + J g'` and whether it is proper.
pub fn j_commutator(lie: &LieAlgebra, acs: &AlmostComplexStructure) -> (Subspace<Rat>, bool) {
    let c = lie.commutator_subspace();
    let saturated = c.sum(&c.image(acs.matrix()));
    let proper = saturated.dim() < lie.dim();
    (saturated, proper)
}

/// Dimensions of the J-saturated lower central series `g^i + J g^i`,
/// listed until the series stabilizes, together with a strict-descent flag.
pub fn j_central_series(lie: &LieAlgebra, acs: &AlmostComplexStructure) -> (Vec<usize>, bool) {
    let mut dims = Vec::new();
    for term in lie.lower_central_series() {
        let saturated = term.sum(&term.image(acs.matrix()));
        if dims.last() == Some(&saturated.dim()) && saturated.dim() != 0 {
            // Series stabilized above zero (non-nilpotent algebra).
            dims.push(saturated.dim());
            break;
        }
        dims.push(saturated.dim());
        if saturated.is_zero() {
            break;
        }
    }
    let strict = dims.windows(2).all(|w| w[0] > w[1]);
    (dims, strict)
}

/// A canonical J-stable complement of a J-stable subspace: standard basis
/// vectors are tried in order and each accepted vector brings its J-image
/// along, which keeps the construction deterministic.
pub fn j_stable_complement(
    acs: &AlmostComplexStructure,
    of: &Subspace<Rat>,
) -> Result<Vec<Vec<Rat>>, AcsError> {
    let n = acs.dim();
    if !of.is_stable_under(acs.matrix()) {
        return Err(AcsError::UnstableSubspace);
    }
    let mut chosen: Vec<Vec<Rat>> = Vec::new();
    let mut reach = of.clone();
    for i in 0..n {
        if reach.dim() == n {
            break;
        }
        let e = basis_vec(n, i);
        if reach.contains(&e) {
            continue;
        }
        let je = acs.apply(&e);
        chosen.push(e.clone());
        chosen.push(je.clone());
        reach = reach.sum(&Subspace::span(n, vec![e, je]));
    }
    debug_assert_eq!(reach.dim(), n);
    Ok(chosen)
}

/// Inertia of the symmetric form `B` on a J-stable complement of the
/// center, defined by `[x, Jy] = B(x, y) z0` where `z0` spans the
/// one-dimensional commutator ideal.
///
/// The returned pair is ordered so that the all-plus structure on a
/// Heisenberg algebra yields `(0, 2n)`; conjugating by an automorphism that
/// rescales `z0` negatively swaps the two components.
pub fn bform_signature(
    lie: &LieAlgebra,
    acs: &AlmostComplexStructure,
) -> Result<(usize, usize), BformError> {
    let c = lie.commutator_subspace();
    if c.dim() != 1 {
        return Err(BformError::CommutatorNotALine(c.dim()));
    }
    let center = lie.center();
    if !center.contains_subspace(&c) {
        return Err(BformError::CommutatorNotCentral);
    }
    if !center.is_stable_under(acs.matrix()) {
        return Err(BformError::CenterNotStable);
    }
    let z0 = c.basis_vectors().pop().expect("one-dimensional");
    let pivot = z0.iter().position(|x| !x.is_zero()).expect("nonzero generator");

    let complement =
        j_stable_complement(acs, &center).expect("center is J-stable by the check above");
    let m = complement.len();
    let mut b = Mat::<Rat>::zeros(m, m);
    for (r, x) in complement.iter().enumerate() {
        for (cidx, y) in complement.iter().enumerate() {
            let w = lie.bracket(x, &acs.apply(y));
            // w lies in the commutator line, so one coordinate determines it.
            b[(r, cidx)] = w[pivot].clone() / z0[pivot].clone();
        }
    }
    for i in 0..m {
        for j in i + 1..m {
            if b[(i, j)] != b[(j, i)] {
                return Err(BformError::NotSymmetric { i: i + 1, j: j + 1 });
            }
        }
    }
    let it = inertia(&b);
    Ok((it.neg, it.pos))
}

/// Basis of `{D : D and DJ are both derivations}`, via one linear solve.
pub fn pair_derivation_space(lie: &LieAlgebra, acs: &AlmostComplexStructure) -> Vec<Mat<Rat>> {
    let n = lie.dim();
    let j = acs.matrix();
    let mut rows = Vec::new();
    for i in 0..n {
        for jj in i + 1..n {
            let cij = lie.bracket_basis(i, jj);
            for k in 0..n {
                // Derivation equation for D.
                let mut row = vec![Rat::zero(); n * n];
                accumulate_derivation_row(lie, &mut row, &cij, i, jj, k, None);
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
                // Derivation equation for E = DJ, expressed in D's entries:
                // E[r][c] = sum_m D[r][m] J[m][c].
                let mut row = vec![Rat::zero(); n * n];
                accumulate_derivation_row(lie, &mut row, &cij, i, jj, k, Some(j));
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
            for a in 0..n {
                for b in 0..n {
                    d[(a, b)] = flat[a * n + b].clone();
                }
            }
            d
        })
        .collect()
}

/// Adds the k-th component of `E[e_i,e_j] - [Ee_i,e_j] - [e_i,Ee_j]` to a
/// coefficient row, where `E = D` (post = None) or `E = D·J`.
fn accumulate_derivation_row(
    lie: &LieAlgebra,
    row: &mut [Rat],
    cij: &[Rat],
    i: usize,
    j: usize,
    k: usize,
    post: Option<&Mat<Rat>>,
) {
    let n = lie.dim();
    // Coefficient of D[k][m] in (E v)_k where v has coordinates `coords`:
    // E v = D (J v) when post is set.
    let weight = |col: usize, coords: &[Rat]| -> Rat {
        match post {
            None => coords[col].clone(),
            Some(jm) => {
                // (J v)_col
                let mut acc = Rat::zero();
                for (m, c) in coords.iter().enumerate() {
                    if !c.is_zero() {
                        acc += jm[(col, m)].clone() * c.clone();
                    }
                }
                acc
            }
        }
    };
    // E applied to [e_i, e_j].
    for m in 0..n {
        let w = weight(m, cij);
        if !w.is_zero() {
            row[k * n + m] = row[k * n + m].clone() + w;
        }
    }
    // [E e_i, e_j]: E e_i = sum_r D[r][.] weights of e_i.
    let ei = basis_vec(n, i);
    let ej = basis_vec(n, j);
    for r in 0..n {
        let c = lie.bracket_basis(r, j);
        if !c[k].is_zero() {
            for m in 0..n {
                let w = weight(m, &ei);
                if !w.is_zero() {
                    row[r * n + m] = row[r * n + m].clone() - c[k].clone() * w;
                }
            }
        }
        let c = lie.bracket_basis(i, r);
        if !c[k].is_zero() {
            for m in 0..n {
                let w = weight(m, &ej);
                if !w.is_zero() {
                    row[r * n + m] = row[r * n + m].clone() - c[k].clone() * w;
                }
            }
        }
    }
}

/// Checks `ad_{Jx} = -ad_x J` on every basis vector; abelian structures
/// must satisfy it.
pub fn ad_antilinear(lie: &LieAlgebra, acs: &AlmostComplexStructure) -> bool {
    let n = lie.dim();
    for i in 0..n {
        let lhs = lie.ad(&acs.matrix().col(i));
        let rhs = lie.ad(&basis_vec(n, i)).mul(acs.matrix()).neg();
        if lhs != rhs {
            return false;
        }
    }
    true
}

fn vec_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

fn sub_into(acc: &mut [Rat], other: &[Rat]) {
    for (a, b) in acc.iter_mut().zip(other) {
        *a = a.clone() - b.clone();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::algebras;
    use crate::catalog::structures;
    use crate::scalar::{rat, rint};

    #[test]
    fn aff_c_j1_is_abelian_not_bi_invariant() {
        let lie = algebras::aff_c();
        let j1 = structures::aff_c_j1();
        let report = check_structure(&lie, &j1).unwrap();
        assert!(report.is_acs && report.integrable && report.abelian);
        assert!(!report.bi_invariant);
        assert!(!report.bi_invariant_failures.is_empty());
    }

    #[test]
    fn aff_c_bi_invariant_structure() {
        let lie = algebras::aff_c();
        let j = structures::aff_c_bi_invariant();
        let report = check_structure(&lie, &j).unwrap();
        assert!(report.is_acs && report.integrable && report.bi_invariant);
        assert!(!report.abelian);
    }

    #[test]
    fn any_structure_on_abelian_algebra_passes_everything() {
        let lie = LieAlgebra::abelian(6);
        let j = structures::j_pairs(6, &[(0, 1), (2, 3), (4, 5)]);
        let report = check_structure(&lie, &j).unwrap();
        assert!(report.integrable && report.abelian && report.bi_invariant);
    }

    #[test]
    fn i_eigenspace_of_rotation_on_r2() {
        let lie = LieAlgebra::abelian(2);
        let j = structures::j_pairs(2, &[(0, 1)]);
        let eig = i_eigenspace(&lie, &j);
        assert_eq!(eig.basis.dim(), 1);
        // The eigenvector is proportional to e1 - i e2.
        let v = &eig.basis.basis_vectors()[0];
        assert_eq!(v[1].clone() / v[0].clone(), GRat::new(rint(0), rint(-1)));
        assert!(eig.is_subalgebra && eig.is_abelian_subalgebra && eig.is_ideal);
    }

    #[test]
    fn i_eigenspace_flags_match_structure_class() {
        let lie = algebras::aff_c();
        let eig = i_eigenspace(&lie, &structures::aff_c_j2());
        assert!(eig.is_abelian_subalgebra);
        let eig = i_eigenspace(&lie, &structures::aff_c_bi_invariant());
        assert!(eig.is_ideal);
        assert!(!eig.is_abelian_subalgebra);
    }

    #[test]
    fn j_commutator_examples() {
        let n1 = algebras::n1();
        let (sat, proper) = j_commutator(&n1, &structures::n1_j());
        assert_eq!(sat.dim(), 2);
        assert!(proper);

        let affc = algebras::aff_c();
        let (sat, proper) = j_commutator(&affc, &structures::aff_c_j2());
        assert_eq!(sat.dim(), 4);
        assert!(!proper);

        let r6 = LieAlgebra::abelian(6);
        let (sat, proper) = j_commutator(&r6, &structures::j_pairs(6, &[(0, 1), (2, 3), (4, 5)]));
        assert_eq!(sat.dim(), 0);
        assert!(proper);
    }

    #[test]
    fn j_central_series_examples() {
        let n7 = algebras::n7();
        let j = structures::n7_j_st(&rint(0), &rint(1)).unwrap();
        assert_eq!(j_central_series(&n7, &j), (vec![6, 4, 2, 0], true));

        let n1 = algebras::n1();
        assert_eq!(j_central_series(&n1, &structures::n1_j()), (vec![6, 2, 0], true));

        let r6 = LieAlgebra::abelian(6);
        let j = structures::j_pairs(6, &[(0, 1), (2, 3), (4, 5)]);
        assert_eq!(j_central_series(&r6, &j), (vec![6, 0], true));
    }

    #[test]
    fn bform_signature_examples() {
        // h5 x R with one minus sign: signature (2, 2).
        let n2 = algebras::n2();
        let j_minus = structures::n2_j(false);
        assert_eq!(bform_signature(&n2, &j_minus).unwrap(), (2, 2));
        let j_plus = structures::n2_j(true);
        assert_eq!(bform_signature(&n2, &j_plus).unwrap(), (0, 4));

        // h3 x R with its structure: (0, 2).
        let g2 = algebras::heisenberg(1).direct_sum(&LieAlgebra::abelian(1));
        let j = structures::j_pairs(4, &[(0, 1), (2, 3)]);
        assert_eq!(bform_signature(&g2, &j).unwrap(), (0, 2));

        // Undefined when the commutator is not a line.
        let n3 = algebras::n3();
        let j = structures::n3_j_st(&rint(0), &rint(1)).unwrap();
        assert!(matches!(bform_signature(&n3, &j), Err(BformError::CommutatorNotALine(2))));
    }

    #[test]
    fn bform_swaps_under_negative_center_scaling() {
        let n2 = algebras::n2();
        let j_plus = structures::n2_j(true);
        // diag(1,-1,1,-1,1,-1) is an automorphism scaling z0 by -1.
        let phi = crate::mat::mat_i64(&[
            &[1, 0, 0, 0, 0, 0],
            &[0, -1, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0],
            &[0, 0, 0, -1, 0, 0],
            &[0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, -1],
        ]);
        assert!(n2.is_isomorphism(&n2, &phi));
        let conj = j_plus.conjugate(&phi).unwrap();
        assert_eq!(bform_signature(&n2, &conj).unwrap(), (4, 0));

        // An automorphism fixing z0 leaves the signature alone.
        let swap_blocks = crate::mat::mat_i64(&[
            &[0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0],
            &[1, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 1],
        ]);
        assert!(n2.is_isomorphism(&n2, &swap_blocks));
        let conj = j_plus.conjugate(&swap_blocks).unwrap();
        assert_eq!(bform_signature(&n2, &conj).unwrap(), (0, 4));
    }

    #[test]
    fn pair_derivation_space_dimensions() {
        // aff(R) x R^2 with split J: six parameters.
        let g3 = algebras::aff_r().direct_sum(&LieAlgebra::abelian(2));
        let j = structures::j_pairs(4, &[(0, 1), (2, 3)]);
        assert_eq!(pair_derivation_space(&g3, &j).len(), 6);

        // aff(R) semidirect R^2 with its structure: four parameters.
        let g5 = algebras::g5();
        let j = structures::g5_j();
        assert_eq!(pair_derivation_space(&g5, &j).len(), 4);

        // Everything on abelian R^4.
        let r4 = LieAlgebra::abelian(4);
        let j = structures::j_pairs(4, &[(0, 1), (2, 3)]);
        assert_eq!(pair_derivation_space(&r4, &j).len(), 16);
    }

    #[test]
    fn ad_antilinearity_examples() {
        let affc = algebras::aff_c();
        assert!(ad_antilinear(&affc, &structures::aff_c_j1()));
        assert!(ad_antilinear(&affc, &structures::aff_c_j2()));
        assert!(!ad_antilinear(&affc, &structures::aff_c_bi_invariant()));
        let r4 = LieAlgebra::abelian(4);
        assert!(ad_antilinear(&r4, &structures::j_pairs(4, &[(0, 1), (2, 3)])));
    }

    #[test]
    fn conjugation_by_identity_and_phi() {
        let j1 = structures::aff_c_j1();
        assert_eq!(j1.conjugate(&Mat::identity(4)).unwrap(), j1);

        // phi J+_{(a,b)} = J1 phi for the printed phi.
        let a = rat(3, 2);
        let b = rat(-2, 5);
        let jplus = structures::aff_c_j_plus(&a, &b);
        let phi = structures::aff_c_phi(&a, &b);
        assert!(algebras::aff_c().is_isomorphism(&algebras::aff_c(), &phi));
        assert_eq!(jplus.conjugate(&phi).unwrap(), j1);

        let jminus = structures::aff_c_j_minus(&a, &b);
        let psi = structures::aff_c_psi(&a, &b);
        assert!(algebras::aff_c().is_isomorphism(&algebras::aff_c(), &psi));
        assert_eq!(jminus.conjugate(&psi).unwrap(), j1);
    }

    #[test]
    fn acs_constructor_rejects_bad_matrices() {
        assert!(matches!(
            AlmostComplexStructure::new(Mat::identity(4)),
            Err(AcsError::NotAnAcs { .. })
        ));
        assert!(matches!(
            AlmostComplexStructure::new(Mat::zeros(3, 3)),
            Err(AcsError::OddDimension(3))
        ));
    }
}
