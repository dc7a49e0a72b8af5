//! Holomorphic-equivalence machinery: intertwiner verification, explicit
//! automorphism families, orbit invariants on the parameter planes,
//! canonical representatives and the distinguishing fingerprint.
//!
//! Fingerprints distinguish structures, they never identify them: equal
//! fingerprints only mean "not distinguished by these invariants".

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::catalog::{self, CatalogEntry, Params};
use crate::cstruct::{self, AlmostComplexStructure};
use crate::lie::{basis_vec, LieAlgebra};
use crate::mat::{inertia, Mat};
use crate::scalar::{rat, rational_sqrt, rint, sign, Rat};
use crate::subspace::Subspace;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EquivError {
    #[error("matrix is not an automorphism of the target algebra")]
    NotAnAutomorphism,
    #[error("degenerate parameters for the group family: {0}")]
    DegenerateParams(String),
    #[error("entry {0:?} does not support orbit parameters")]
    UnsupportedEntry(String),
    #[error("conjugated structure left the parameterized family")]
    OutsideFamily,
    #[error("catalog error: {0}")]
    Catalog(#[from] catalog::CatalogError),
    #[error("structure error: {0}")]
    Acs(#[from] cstruct::AcsError),
    #[error("recognition requires c^2 + d^2 != 0")]
    DegenerateRecognition,
}

// ---------------------------------------------------------------------------
// Intertwiners
// ---------------------------------------------------------------------------

/// True when `p` is a Lie algebra isomorphism from `(l1, j1)` to `(l2, j2)`
/// that intertwines the structures: `p J1 = J2 p` exactly.
pub fn intertwiner_check(
    l1: &LieAlgebra,
    j1: &AlmostComplexStructure,
    l2: &LieAlgebra,
    j2: &AlmostComplexStructure,
    p: &Mat<Rat>,
) -> bool {
    l1.is_isomorphism(l2, p) && p.mul(j1.matrix()) == j2.matrix().mul(p)
}

// ---------------------------------------------------------------------------
// Fingerprints
// ---------------------------------------------------------------------------

/// Result of sampling kernels of adjoint maps for J-stability.
/// `Unstable` is a certificate (a witness was found); `StableSampled` is
/// evidence only.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelStability {
    NotApplicable,
    StableSampled,
    Unstable,
}

impl std::fmt::Display for KernelStability {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            KernelStability::NotApplicable => "not applicable",
            KernelStability::StableSampled => "stable (sampled)",
            KernelStability::Unstable => "unstable (certificate)",
        };
        f.write_str(s)
    }
}

/// Invariants of a pair (algebra, structure) under holomorphic isomorphism.
/// Every field except `kernel_stability` is certificate grade.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fingerprint {
    pub dim: usize,
    pub derived_dims: Vec<usize>,
    pub lower_central_dims: Vec<usize>,
    pub nilpotent: bool,
    pub center_dim: usize,
    pub unimodular: bool,
    pub derivation_dim: usize,
    pub j_commutator_dim: usize,
    pub proper: bool,
    pub b_signature: Option<(usize, usize)>,
    /// Pair-derivation dimension of the restricted pair on g' + Jg',
    /// defined when that ideal is proper.
    pub restricted_pair_derivation_dim: Option<usize>,
    /// Inertia (pos, neg) of the quadratic form x -> det(ad_x restricted to
    /// the commutator ideal), defined when dim g' = 2.
    pub ad_det_inertia: Option<(usize, usize)>,
    /// Whether `[g, g']` is J-stable.
    pub second_term_j_stable: bool,
    pub kernel_stability: KernelStability,
}

impl Fingerprint {
    /// Names of certificate-grade fields on which the two fingerprints
    /// disagree.
    pub fn distinguishing_fields(&self, other: &Fingerprint) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.dim != other.dim {
            out.push("dim");
        }
        if self.derived_dims != other.derived_dims {
            out.push("derived series dims");
        }
        if self.lower_central_dims != other.lower_central_dims {
            out.push("lower central series dims");
        }
        if self.nilpotent != other.nilpotent {
            out.push("nilpotent");
        }
        if self.center_dim != other.center_dim {
            out.push("center dim");
        }
        if self.unimodular != other.unimodular {
            out.push("unimodular");
        }
        if self.derivation_dim != other.derivation_dim {
            out.push("derivation dim");
        }
        if self.j_commutator_dim != other.j_commutator_dim {
            out.push("dim of g' + Jg'");
        }
        if self.proper != other.proper {
            out.push("proper");
        }
        if self.b_signature != other.b_signature {
            out.push("B-signature");
        }
        if self.restricted_pair_derivation_dim != other.restricted_pair_derivation_dim {
            out.push("restricted pair-derivation dim");
        }
        if self.ad_det_inertia != other.ad_det_inertia {
            out.push("ad-determinant inertia");
        }
        if self.second_term_j_stable != other.second_term_j_stable {
            out.push("[g, g'] J-stability");
        }
        out
    }

    pub fn certificate_eq(&self, other: &Fingerprint) -> bool {
        self.distinguishing_fields(other).is_empty()
    }

    /// A sampled (non-certificate) distinction: one side has a kernel
    /// instability witness, the other side sampled stable.
    pub fn sampled_distinction(&self, other: &Fingerprint) -> bool {
        matches!(
            (self.kernel_stability, other.kernel_stability),
            (KernelStability::Unstable, KernelStability::StableSampled)
                | (KernelStability::StableSampled, KernelStability::Unstable)
        )
    }
}

/// Computes the full fingerprint of a pair.
pub fn fingerprint(lie: &LieAlgebra, acs: &AlmostComplexStructure) -> Fingerprint {
    let derived_dims: Vec<usize> = lie.derived_series().iter().map(Subspace::dim).collect();
    let lower_central: Vec<Subspace<Rat>> = lie.lower_central_series();
    let lower_central_dims: Vec<usize> = lower_central.iter().map(Subspace::dim).collect();
    let nilpotent = lie.is_nilpotent();
    let commutator = lie.commutator_subspace();
    let (j_comm, proper) = cstruct::j_commutator(lie, acs);

    let restricted_pair_derivation_dim = if proper {
        restrict_pair(lie, acs, &j_comm)
            .map(|(sub_lie, sub_acs)| cstruct::pair_derivation_space(&sub_lie, &sub_acs).len())
    } else {
        None
    };

    let ad_det_inertia = (commutator.dim() == 2).then(|| ad_det_form_inertia(lie, &commutator));

    let second_term = lie.bracket_with_subspace(&commutator);
    let second_term_j_stable = second_term.is_stable_under(acs.matrix());

    Fingerprint {
        dim: lie.dim(),
        derived_dims,
        lower_central_dims,
        nilpotent,
        center_dim: lie.center().dim(),
        unimodular: lie.is_unimodular(),
        derivation_dim: lie.derivation_space().len(),
        j_commutator_dim: j_comm.dim(),
        proper,
        b_signature: cstruct::bform_signature(lie, acs).ok(),
        restricted_pair_derivation_dim,
        ad_det_inertia,
        second_term_j_stable,
        kernel_stability: kernel_stability_sample(lie, acs, &commutator),
    }
}

/// Restriction of the pair to a bracket-closed J-stable subspace.
pub fn restrict_pair(
    lie: &LieAlgebra,
    acs: &AlmostComplexStructure,
    sub: &Subspace<Rat>,
) -> Option<(LieAlgebra, AlmostComplexStructure)> {
    let sub_lie = lie.restrict_to(sub)?;
    let k = sub.dim();
    if k == 0 {
        return Some((sub_lie, AlmostComplexStructure::new(Mat::zeros(0, 0)).ok()?));
    }
    let mut cols = Vec::new();
    for v in sub.basis_vectors() {
        cols.push(sub.coords_of(&acs.apply(&v))?);
    }
    let j = Mat::from_cols(cols);
    AlmostComplexStructure::new(j).ok().map(|a| (sub_lie, a))
}

/// Inertia (pos, neg) of the quadratic form q(x) = det(ad_x restricted to
/// the two-dimensional commutator ideal). Congruence-invariant, hence
/// constant on isomorphism classes.
pub fn ad_det_form_inertia(lie: &LieAlgebra, commutator: &Subspace<Rat>) -> (usize, usize) {
    let n = lie.dim();
    debug_assert_eq!(commutator.dim(), 2);
    let q = |x: &[Rat]| -> Rat {
        let vs = commutator.basis_vectors();
        let c0 = commutator.coords_of(&lie.bracket(x, &vs[0])).expect("g' is an ideal");
        let c1 = commutator.coords_of(&lie.bracket(x, &vs[1])).expect("g' is an ideal");
        c0[0].clone() * c1[1].clone() - c0[1].clone() * c1[0].clone()
    };
    let mut m = Mat::<Rat>::zeros(n, n);
    let half = rat(1, 2);
    let diag: Vec<Rat> = (0..n).map(|i| q(&basis_vec(n, i))).collect();
    for i in 0..n {
        m[(i, i)] = diag[i].clone();
        for j in i + 1..n {
            let mut x = basis_vec(n, i);
            x[j] = Rat::one();
            let v = (q(&x) - diag[i].clone() - diag[j].clone()) * half.clone();
            m[(i, j)] = v.clone();
            m[(j, i)] = v;
        }
    }
    let it = inertia(&m);
    (it.pos, it.neg)
}

/// Samples kernels of `ad_x` restricted to a J-stable complement of the
/// center for J-stability, on a deterministic 50-point grid. Only
/// meaningful for two-step nilpotent algebras with two-dimensional
/// commutator; the unstable answer is a certificate, the stable answer is
/// sampled evidence.
fn kernel_stability_sample(
    lie: &LieAlgebra,
    acs: &AlmostComplexStructure,
    commutator: &Subspace<Rat>,
) -> KernelStability {
    if lie.nilpotency_class() != Some(2) || commutator.dim() != 2 {
        return KernelStability::NotApplicable;
    }
    let center = lie.center();
    if !center.is_stable_under(acs.matrix()) {
        return KernelStability::NotApplicable;
    }
    let Ok(complement) = cstruct::j_stable_complement(acs, &center) else {
        return KernelStability::NotApplicable;
    };
    let k = complement.len();
    let n = lie.dim();
    let mut tried = 0;
    for coeffs in crate::sampling::tuple_stream(k) {
        if tried >= 50 {
            break;
        }
        if coeffs.iter().all(Zero::is_zero) {
            continue;
        }
        tried += 1;
        let mut x = vec![Rat::zero(); n];
        for (c, v) in coeffs.iter().zip(&complement) {
            for i in 0..n {
                x[i] = x[i].clone() + c.clone() * v[i].clone();
            }
        }
        // Kernel of w -> [x, w] on the complement.
        let cols: Vec<Vec<Rat>> = complement.iter().map(|v| lie.bracket(&x, v)).collect();
        let coeff_kernel = Mat::from_cols(cols).kernel_basis();
        let mut kernel_vectors = Vec::new();
        for r in 0..coeff_kernel.rows() {
            let ys = coeff_kernel.row(r);
            let mut w = vec![Rat::zero(); n];
            for (y, v) in ys.iter().zip(&complement) {
                for i in 0..n {
                    w[i] = w[i].clone() + y.clone() * v[i].clone();
                }
            }
            kernel_vectors.push(w);
        }
        let kernel = Subspace::span(n, kernel_vectors);
        for v in kernel.basis_vectors() {
            if !kernel.contains(&acs.apply(&v)) {
                return KernelStability::Unstable;
            }
        }
    }
    KernelStability::StableSampled
}

// ---------------------------------------------------------------------------
// Automorphism families
// ---------------------------------------------------------------------------

/// The displayed automorphism families of the parameterized entries.
#[derive(Debug, Clone, PartialEq)]
pub enum GroupFamily {
    /// Automorphisms of aff(C); requires a^2 + b^2 != 0, eps = +-1.
    AffCAut { a: Rat, b: Rat, c: Rat, d: Rat, eps: i64 },
    /// Identity-component block automorphisms of n3.
    N3Plus { a: Rat, b: Rat, c: Rat, d: Rat },
    /// The factor-swapping coset of n3.
    N3Minus { a: Rat, b: Rat, c: Rat, d: Rat },
    /// The canonicalizing automorphism of n5 attached to a source point.
    N5Phi { s: Rat, t: Rat },
    /// The complex-scaling group of n7; requires a^2 + b^2 != 0.
    N7Cx { a: Rat, b: Rat },
    N4G1Plus { a: Rat, b: Rat, eps: i64 },
    N4G1Minus { a: Rat, b: Rat, eps: i64 },
    N4G2Plus { a: Rat, b: Rat, c: Rat, d: Rat },
    N4G2Minus { a: Rat, b: Rat, c: Rat, d: Rat },
}

impl GroupFamily {
    pub fn label(&self) -> &'static str {
        match self {
            GroupFamily::AffCAut { .. } => "Aut(aff(C))",
            GroupFamily::N3Plus { .. } => "n3 G+",
            GroupFamily::N3Minus { .. } => "n3 G-",
            GroupFamily::N5Phi { .. } => "n5 phi",
            GroupFamily::N7Cx { .. } => "n7 C*",
            GroupFamily::N4G1Plus { .. } => "n4 G1+",
            GroupFamily::N4G1Minus { .. } => "n4 G1-",
            GroupFamily::N4G2Plus { .. } => "n4 G2+",
            GroupFamily::N4G2Minus { .. } => "n4 G2-",
        }
    }

    fn target_algebra(&self) -> LieAlgebra {
        match self {
            GroupFamily::AffCAut { .. } => catalog::algebras::aff_c(),
            GroupFamily::N3Plus { .. } | GroupFamily::N3Minus { .. } => catalog::algebras::n3(),
            GroupFamily::N5Phi { .. } => catalog::algebras::n5(),
            GroupFamily::N7Cx { .. } => catalog::algebras::n7(),
            _ => catalog::algebras::n4(),
        }
    }
}

fn norm2(a: &Rat, b: &Rat) -> Rat {
    a.clone() * a.clone() + b.clone() * b.clone()
}

fn rot_block(m: &mut Mat<Rat>, at: usize, a: &Rat, b: &Rat) {
    m[(at, at)] = a.clone();
    m[(at, at + 1)] = -b.clone();
    m[(at + 1, at)] = b.clone();
    m[(at + 1, at + 1)] = a.clone();
}

/// Builds the displayed matrix of a group family member, checking the
/// family's nondegeneracy conditions and asserting that the result is an
/// automorphism of its target algebra.
pub fn group_element(family: &GroupFamily) -> Result<Mat<Rat>, EquivError> {
    let m = match family {
        GroupFamily::AffCAut { a, b, c, d, eps } => {
            catalog::structures::aff_c_aut(a, b, c, d, *eps)
                .ok_or_else(|| EquivError::DegenerateParams("a^2 + b^2 = 0".to_string()))?
        }
        GroupFamily::N3Plus { a, b, c, d } | GroupFamily::N3Minus { a, b, c, d } => {
            if norm2(a, b).is_zero() || norm2(c, d).is_zero() {
                return Err(EquivError::DegenerateParams(
                    "a^2 + b^2 and c^2 + d^2 must be nonzero".to_string(),
                ));
            }
            let mut g = Mat::<Rat>::zeros(6, 6);
            rot_block(&mut g, 0, a, b);
            rot_block(&mut g, 2, c, d);
            g[(4, 4)] = norm2(a, b);
            g[(5, 5)] = norm2(c, d);
            if matches!(family, GroupFamily::N3Minus { .. }) {
                let mut swap = Mat::<Rat>::zeros(6, 6);
                for i in 0..2 {
                    swap[(i, i + 2)] = Rat::one();
                    swap[(i + 2, i)] = Rat::one();
                }
                swap[(4, 5)] = Rat::one();
                swap[(5, 4)] = Rat::one();
                swap.mul(&g)
            } else {
                g
            }
        }
        GroupFamily::N5Phi { s, t } => {
            if t.is_zero() {
                return Err(EquivError::DegenerateParams("t must be nonzero".to_string()));
            }
            let q = (Rat::one() + s.clone() * s.clone()) / t.clone();
            let half_s = s.clone() / rint(2);
            let mut g = Mat::<Rat>::zeros(6, 6);
            g[(0, 1)] = rint(-1);
            g[(1, 0)] = rint(1);
            g[(2, 1)] = -half_s.clone();
            g[(2, 3)] = q.clone();
            g[(3, 0)] = -half_s;
            g[(3, 2)] = -q.clone();
            g[(4, 4)] = rint(1);
            g[(5, 4)] = -s.clone();
            g[(5, 5)] = q;
            g
        }
        GroupFamily::N7Cx { a, b } => {
            let d = norm2(a, b);
            if d.is_zero() {
                return Err(EquivError::DegenerateParams("a^2 + b^2 = 0".to_string()));
            }
            let mut g = Mat::<Rat>::zeros(6, 6);
            rot_block(&mut g, 0, a, b);
            g[(2, 2)] = d.clone();
            g[(3, 3)] = d.clone();
            g[(4, 4)] = a.clone() * d.clone();
            g[(4, 5)] = -(b.clone() * d.clone());
            g[(5, 4)] = b.clone() * d.clone();
            g[(5, 5)] = a.clone() * d;
            g
        }
        GroupFamily::N4G1Plus { a, b, eps } | GroupFamily::N4G1Minus { a, b, eps } => {
            assert!(*eps == 1 || *eps == -1, "eps must be +-1");
            if norm2(a, b).is_zero() {
                return Err(EquivError::DegenerateParams("a^2 + b^2 = 0".to_string()));
            }
            let e = rint(*eps);
            let mut g = Mat::<Rat>::zeros(6, 6);
            for at in [0, 2] {
                g[(at, at)] = a.clone();
                g[(at, at + 1)] = -(e.clone() * b.clone());
                g[(at + 1, at)] = b.clone();
                g[(at + 1, at + 1)] = e.clone() * a.clone();
            }
            let a2b2 = a.clone() * a.clone() - b.clone() * b.clone();
            let two_ab = rint(2) * a.clone() * b.clone();
            g[(4, 4)] = a2b2.clone();
            g[(4, 5)] = -(e.clone() * two_ab.clone());
            g[(5, 4)] = two_ab;
            g[(5, 5)] = e * a2b2;
            if matches!(family, GroupFamily::N4G1Minus { .. }) {
                let mut t = Mat::<Rat>::zeros(6, 6);
                t[(0, 2)] = rint(-1);
                t[(1, 3)] = rint(-1);
                t[(2, 0)] = rint(1);
                t[(3, 1)] = rint(1);
                t[(4, 4)] = rint(1);
                t[(5, 5)] = rint(1);
                t.mul(&g)
            } else {
                g
            }
        }
        GroupFamily::N4G2Plus { a, b, c, d } | GroupFamily::N4G2Minus { a, b, c, d } => {
            if norm2(a, b).is_zero() || norm2(c, d).is_zero() {
                return Err(EquivError::DegenerateParams(
                    "a^2 + b^2 and c^2 + d^2 must be nonzero".to_string(),
                ));
            }
            let mut g = Mat::<Rat>::zeros(6, 6);
            rot_block(&mut g, 0, a, b);
            rot_block(&mut g, 2, c, d);
            let re = a.clone() * c.clone() - b.clone() * d.clone();
            let im = a.clone() * d.clone() + b.clone() * c.clone();
            g[(4, 4)] = re.clone();
            g[(4, 5)] = -im.clone();
            g[(5, 4)] = im;
            g[(5, 5)] = re;
            if matches!(family, GroupFamily::N4G2Minus { .. }) {
                let mut v = Mat::<Rat>::zeros(6, 6);
                v[(0, 2)] = rint(1);
                v[(1, 3)] = rint(-1);
                v[(2, 0)] = rint(1);
                v[(3, 1)] = rint(-1);
                v[(4, 4)] = rint(-1);
                v[(5, 5)] = rint(1);
                g.mul(&v)
            } else {
                g
            }
        }
    };
    let target = family.target_algebra();
    if !target.is_isomorphism(&target, &m) {
        return Err(EquivError::NotAnAutomorphism);
    }
    Ok(m)
}

/// Applies an automorphism to a parameterized structure: conjugates the
/// instantiated J and reads the new parameters back from the family shape.
pub fn act(entry: &CatalogEntry, g: &Mat<Rat>, params: &Params) -> Result<Params, EquivError> {
    let (lie, acs) = entry.instantiate(params)?;
    if !lie.is_isomorphism(&lie, g) {
        return Err(EquivError::NotAnAutomorphism);
    }
    let conj = acs.conjugate(g)?;
    let reader = entry
        .read_params
        .as_ref()
        .ok_or_else(|| EquivError::UnsupportedEntry(entry.id.clone()))?;
    let new_params = reader(&lie, &conj).ok_or(EquivError::OutsideFamily)?;
    let (lie2, acs2) = entry.instantiate(&new_params)?;
    if lie2 == lie && acs2 == conj {
        Ok(new_params)
    } else {
        Err(EquivError::OutsideFamily)
    }
}

// ---------------------------------------------------------------------------
// Orbit invariants and canonical representatives
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrbitInvariantValue {
    /// A single rational (n3: s sign(t); n5: constant 0).
    Scalar(Rat),
    /// Sign of t together with |c| where c = t + (1+s^2)/t (n7).
    SignedRadius { t_sign: i32, c_abs: Rat },
    /// Family index together with |c| (the two n4 families).
    FamilyRadius { family: u8, c_abs: Rat },
}

impl std::fmt::Display for OrbitInvariantValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OrbitInvariantValue::Scalar(s) => write!(f, "{s}"),
            OrbitInvariantValue::SignedRadius { t_sign, c_abs } => {
                write!(f, "({}, {})", if *t_sign >= 0 { "+" } else { "-" }, c_abs)
            }
            OrbitInvariantValue::FamilyRadius { family, c_abs } => {
                write!(f, "(family {family}, |c| = {c_abs})")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitInvariant {
    pub entry_id: String,
    pub value: OrbitInvariantValue,
}

fn plane_params(entry_id: &str, p: &Params) -> Result<(Rat, Rat), EquivError> {
    let get = |name: &str| {
        p.get(name).cloned().ok_or_else(|| EquivError::UnsupportedEntry(entry_id.to_string()))
    };
    match entry_id {
        "n3-raw" | "n4-raw-1" | "n4-raw-2" | "n5-raw" | "n7-raw" => Ok((get("s")?, get("t")?)),
        "n3-canonical" => Ok((get("s")?, Rat::one())),
        "n4-J1" | "n4-J2" | "n7-canonical" => Ok((Rat::zero(), get("t")?)),
        "n5-canonical" => Ok((Rat::zero(), Rat::one())),
        other => Err(EquivError::UnsupportedEntry(other.to_string())),
    }
}

/// The rational quantity c = t + (1 + s^2)/t, constant on orbits.
pub fn orbit_c(s: &Rat, t: &Rat) -> Rat {
    t.clone() + (Rat::one() + s.clone() * s.clone()) / t.clone()
}

/// Orbit invariant of a parameterized structure.
pub fn orbit_invariant(entry_id: &str, p: &Params) -> Result<OrbitInvariant, EquivError> {
    let (s, t) = plane_params(entry_id, p)?;
    let value = match entry_id {
        "n3-raw" | "n3-canonical" => {
            OrbitInvariantValue::Scalar(if t.is_negative() { -s } else { s })
        }
        "n5-raw" | "n5-canonical" => OrbitInvariantValue::Scalar(Rat::zero()),
        "n7-raw" | "n7-canonical" => {
            let c = orbit_c(&s, &t);
            OrbitInvariantValue::SignedRadius { t_sign: sign(&t), c_abs: c.abs() }
        }
        "n4-raw-1" | "n4-J1" => {
            OrbitInvariantValue::FamilyRadius { family: 1, c_abs: orbit_c(&s, &t).abs() }
        }
        "n4-raw-2" | "n4-J2" => {
            OrbitInvariantValue::FamilyRadius { family: 2, c_abs: orbit_c(&s, &t).abs() }
        }
        other => return Err(EquivError::UnsupportedEntry(other.to_string())),
    };
    Ok(OrbitInvariant { entry_id: entry_id.to_string(), value })
}

/// Canonical representative of a parameterized structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CanonicalForm {
    /// Canonical entry and parameters.
    Params { entry_id: String, params: Params },
    /// The canonical parameter is irrational; the rational invariant is
    /// returned instead.
    NonRationalRepresentative { entry_id: String, invariant: OrbitInvariant },
}

/// The root of x^2 - |c| x + 1 lying in (0, 1], when rational.
fn unit_root(c_abs: &Rat) -> Option<Rat> {
    let disc = c_abs.clone() * c_abs.clone() - rint(4);
    let root = rational_sqrt(&disc)?;
    Some((c_abs.clone() - root) / rint(2))
}

pub fn canonicalize(entry_id: &str, p: &Params) -> Result<CanonicalForm, EquivError> {
    let (s, t) = plane_params(entry_id, p)?;
    let invariant = orbit_invariant(entry_id, p)?;
    let form = match entry_id {
        "n3-raw" | "n3-canonical" => {
            let sigma = if t.is_negative() { -s } else { s };
            CanonicalForm::Params {
                entry_id: "n3-canonical".to_string(),
                params: Params::new().set("s", sigma),
            }
        }
        "n5-raw" | "n5-canonical" => CanonicalForm::Params {
            entry_id: "n5-canonical".to_string(),
            params: Params::new(),
        },
        "n7-raw" | "n7-canonical" => {
            let c_abs = orbit_c(&s, &t).abs();
            match unit_root(&c_abs) {
                Some(tau) => CanonicalForm::Params {
                    entry_id: "n7-canonical".to_string(),
                    params: Params::new()
                        .set("t", if t.is_negative() { -tau } else { tau }),
                },
                None => CanonicalForm::NonRationalRepresentative {
                    entry_id: "n7-canonical".to_string(),
                    invariant,
                },
            }
        }
        "n4-raw-1" | "n4-J1" | "n4-raw-2" | "n4-J2" => {
            let family = if matches!(entry_id, "n4-raw-1" | "n4-J1") { "n4-J1" } else { "n4-J2" };
            let c_abs = orbit_c(&s, &t).abs();
            match unit_root(&c_abs) {
                Some(tau) => CanonicalForm::Params {
                    entry_id: family.to_string(),
                    params: Params::new().set("t", tau),
                },
                None => CanonicalForm::NonRationalRepresentative {
                    entry_id: family.to_string(),
                    invariant,
                },
            }
        }
        other => return Err(EquivError::UnsupportedEntry(other.to_string())),
    };
    Ok(form)
}

// ---------------------------------------------------------------------------
// Orbit membership
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub enum OrbitEvidence {
    /// Invariants differ: a certificate of non-equivalence within the family.
    DifferentOrbits { left: OrbitInvariant, right: OrbitInvariant },
    /// An explicit automorphism carries the first point to the second.
    Connected { family: String, element: Mat<Rat> },
    /// Invariants agree but no witness was found among the sampled elements.
    NoWitnessFound { invariant: OrbitInvariant, tried: usize },
}

#[derive(Debug, Clone)]
pub struct MembershipReport {
    pub entry_id: String,
    pub p1: Params,
    pub p2: Params,
    pub anchor: String,
    pub evidence: OrbitEvidence,
}

impl std::fmt::Display for MembershipReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} [{}]: ({}) vs ({}): ", self.entry_id, self.anchor, self.p1, self.p2)?;
        match &self.evidence {
            OrbitEvidence::DifferentOrbits { left, right } => {
                write!(f, "different orbits (certificate): {} vs {}", left.value, right.value)
            }
            OrbitEvidence::Connected { family, .. } => {
                write!(f, "connected by an element of {family}")
            }
            OrbitEvidence::NoWitnessFound { invariant, tried } => write!(
                f,
                "invariants equal ({}), no witness found among {tried} sampled elements",
                invariant.value
            ),
        }
    }
}

/// Decides orbit membership as far as the sampled evidence allows.
pub fn orbit_membership(
    entry_id: &str,
    p1: &Params,
    p2: &Params,
    samples: usize,
) -> Result<MembershipReport, EquivError> {
    let entry = catalog::find(entry_id)?;
    let inv1 = orbit_invariant(entry_id, p1)?;
    let inv2 = orbit_invariant(entry_id, p2)?;
    let report = |evidence| MembershipReport {
        entry_id: entry_id.to_string(),
        p1: p1.clone(),
        p2: p2.clone(),
        anchor: entry.anchor.clone(),
        evidence,
    };
    if inv1 != inv2 {
        return Ok(report(OrbitEvidence::DifferentOrbits { left: inv1, right: inv2 }));
    }
    if p1 == p2 {
        let identity = Mat::identity(entry.dim);
        return Ok(report(OrbitEvidence::Connected {
            family: "identity".to_string(),
            element: identity,
        }));
    }
    let mut tried = 0;
    for (family, g) in candidate_elements(entry_id, p1, p2, samples) {
        tried += 1;
        if let Ok(image) = act(&entry, &g, p1) {
            if &image == p2 {
                return Ok(report(OrbitEvidence::Connected { family, element: g }));
            }
        }
        if tried >= samples {
            break;
        }
    }
    Ok(report(OrbitEvidence::NoWitnessFound { invariant: inv1, tried }))
}

/// Deterministic candidate automorphisms for the sampled orbit search,
/// including targeted elements built from the two parameter points.
fn candidate_elements(
    entry_id: &str,
    p1: &Params,
    p2: &Params,
    max: usize,
) -> Vec<(String, Mat<Rat>)> {
    fn push(out: &mut Vec<(String, Mat<Rat>)>, family: &GroupFamily) {
        if let Ok(g) = group_element(family) {
            out.push((family.label().to_string(), g));
        }
    }
    let mut out: Vec<(String, Mat<Rat>)> = Vec::new();
    let pool = crate::sampling::value_pool();
    match entry_id {
        "n3-raw" => {
            // The G+ action rescales t by (c^2 + d^2)/(a^2 + b^2); aim at
            // the exact ratio first.
            if let (Some(t1), Some(t2)) = (p1.get("t"), p2.get("t")) {
                let ratio = t2.clone() / t1.clone();
                if ratio.is_positive() {
                    for c in &pool {
                        for d in &pool {
                            if norm2(c, d) == ratio {
                                push(&mut out, &GroupFamily::N3Plus {
                                    a: Rat::one(),
                                    b: Rat::zero(),
                                    c: c.clone(),
                                    d: d.clone(),
                                });
                            }
                        }
                    }
                } else {
                    for c in &pool {
                        for d in &pool {
                            if norm2(c, d) == -ratio.clone() {
                                push(&mut out, &GroupFamily::N3Minus {
                                    a: Rat::one(),
                                    b: Rat::zero(),
                                    c: c.clone(),
                                    d: d.clone(),
                                });
                                push(&mut out, &GroupFamily::N3Minus {
                                    a: c.clone(),
                                    b: d.clone(),
                                    c: Rat::one(),
                                    d: Rat::zero(),
                                });
                            }
                        }
                    }
                }
            }
            for c in &pool {
                for d in &pool {
                    if out.len() >= max {
                        return out;
                    }
                    push(&mut out, &GroupFamily::N3Plus {
                        a: Rat::one(),
                        b: Rat::zero(),
                        c: c.clone(),
                        d: d.clone(),
                    });
                    push(&mut out, &GroupFamily::N3Minus {
                        a: Rat::one(),
                        b: Rat::zero(),
                        c: c.clone(),
                        d: d.clone(),
                    });
                }
            }
        }
        "n5-raw" => {
            // phi(p) carries p to (0, 1): compose the forward map at p1
            // with the inverse of the map at p2.
            let phi = |p: &Params| -> Option<Mat<Rat>> {
                group_element(&GroupFamily::N5Phi {
                    s: p.get("s")?.clone(),
                    t: p.get("t")?.clone(),
                })
                .ok()
            };
            if let (Some(g1), Some(g2)) = (phi(p1), phi(p2)) {
                if let Some(g2_inv) = g2.inverse() {
                    out.push(("n5 phi composite".to_string(), g2_inv.mul(&g1)));
                }
            }
        }
        "n7-raw" | "n7-canonical" => {
            for a in &pool {
                for b in &pool {
                    if out.len() >= max {
                        return out;
                    }
                    push(&mut out, &GroupFamily::N7Cx { a: a.clone(), b: b.clone() });
                }
            }
        }
        "n4-raw-1" | "n4-J1" => {
            for a in &pool {
                for b in &pool {
                    if out.len() >= max {
                        return out;
                    }
                    for eps in [1, -1] {
                        push(&mut out, &GroupFamily::N4G1Plus { a: a.clone(), b: b.clone(), eps });
                        push(&mut out, &GroupFamily::N4G1Minus { a: a.clone(), b: b.clone(), eps });
                    }
                }
            }
        }
        "n4-raw-2" | "n4-J2" => {
            for x in &pool {
                for y in &pool {
                    if out.len() >= max {
                        return out;
                    }
                    push(&mut out, &GroupFamily::N4G2Plus {
                        a: x.clone(),
                        b: y.clone(),
                        c: Rat::one(),
                        d: Rat::zero(),
                    });
                    push(&mut out, &GroupFamily::N4G2Plus {
                        a: Rat::one(),
                        b: Rat::zero(),
                        c: x.clone(),
                        d: y.clone(),
                    });
                    push(&mut out, &GroupFamily::N4G2Minus {
                        a: x.clone(),
                        b: y.clone(),
                        c: Rat::one(),
                        d: Rat::zero(),
                    });
                }
            }
        }
        _ => {}
    }
    out.truncate(max);
    out
}

// ---------------------------------------------------------------------------
// Recognition of (aff(C), J1) from one-dimensional-commutator data
// ---------------------------------------------------------------------------

/// Result of the aff(C) recognition pipeline: the algebra and structure
/// after the change of basis, plus the base change itself (columns are the
/// new basis vectors in the old coordinates).
#[derive(Debug, Clone)]
pub struct Recognition {
    pub algebra: LieAlgebra,
    pub structure: AlmostComplexStructure,
    pub base_change: Mat<Rat>,
}

/// Builds the four-dimensional algebra with brackets
/// `[f1,f3] = [f2,f4] = c f3 + d f4`, `[f1,f4] = -[f2,f3] = -d f3 + c f4`,
/// `[f1,f2] = x f3 + y f4` and structure `J f1 = f2, J f3 = f4`.
pub fn recognition_input(
    c: &Rat,
    d: &Rat,
    x: &Rat,
    y: &Rat,
) -> Result<(LieAlgebra, AlmostComplexStructure), EquivError> {
    if norm2(c, d).is_zero() {
        return Err(EquivError::DegenerateRecognition);
    }
    let v = |a: &Rat, b: &Rat| vec![Rat::zero(), Rat::zero(), a.clone(), b.clone()];
    let lie = LieAlgebra::new(
        4,
        vec![
            ((0, 1), v(x, y)),
            ((0, 2), v(c, d)),
            ((1, 3), v(c, d)),
            ((0, 3), v(&-d.clone(), c)),
            ((1, 2), v(d, &-c.clone())),
        ],
    )
    .expect("recognition input satisfies Jacobi for every (c, d, x, y)");
    let acs = catalog::structures::j_pairs(4, &[(0, 1), (2, 3)]);
    Ok((lie, acs))
}

/// Applies the two-step change of basis that lands the recognition input
/// exactly on the aff(C) table with structure J1.
pub fn recognize_aff_c(c: &Rat, d: &Rat, x: &Rat, y: &Rat) -> Result<Recognition, EquivError> {
    let (lie, acs) = recognition_input(c, d, x, y)?;
    let rho = norm2(c, d);
    let scale = |v: Vec<Rat>| -> Vec<Rat> { v.into_iter().map(|t| t / rho.clone()).collect() };
    let tf1 = scale(vec![c.clone(), d.clone(), Rat::zero(), Rat::zero()]);
    let tf2 = scale(vec![-d.clone(), c.clone(), Rat::zero(), Rat::zero()]);
    // [tf1, tf2] = x' f3 + y' f4 computed from the table, not assumed.
    let w = lie.bracket(&tf1, &tf2);
    let (xp, yp) = (w[2].clone(), w[3].clone());
    let half = rat(1, 2);
    let mut e1 = tf1;
    e1[2] = e1[2].clone() - half.clone() * yp.clone();
    e1[3] = e1[3].clone() + half.clone() * xp.clone();
    let mut e2: Vec<Rat> = tf2.into_iter().map(|t| -t).collect();
    e2[2] = e2[2].clone() + half.clone() * xp;
    e2[3] = e2[3].clone() + half * yp;
    let base_change = Mat::from_cols(vec![e1, e2, basis_vec(4, 2), basis_vec(4, 3)]);
    let algebra = lie.change_basis(&base_change).expect("base change is invertible");
    let inv = base_change.inverse().expect("base change is invertible");
    let structure = AlmostComplexStructure::new(inv.mul(acs.matrix()).mul(&base_change))
        .expect("conjugation preserves the structure equation");
    Ok(Recognition { algebra, structure, base_change })
}
