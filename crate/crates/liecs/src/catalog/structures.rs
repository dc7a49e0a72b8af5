//! Complex-structure matrices for the catalog, in the column convention
//! (column c holds the coordinates of J e_c).

use num_traits::{One, Zero};

use crate::cstruct::AlmostComplexStructure;
use crate::mat::Mat;
use crate::scalar::{rint, Rat};

/// J pairing the listed index pairs: J e_a = e_b, J e_b = -e_a.
pub fn j_pairs(dim: usize, pairs: &[(usize, usize)]) -> AlmostComplexStructure {
    let signed: Vec<(usize, usize, i64)> = pairs.iter().map(|&(a, b)| (a, b, 1)).collect();
    j_signed_pairs(dim, &signed)
}

/// J e_a = sign * e_b, J e_b = -sign * e_a for each listed triple.
pub fn j_signed_pairs(dim: usize, pairs: &[(usize, usize, i64)]) -> AlmostComplexStructure {
    let mut m = Mat::<Rat>::zeros(dim, dim);
    for &(a, b, s) in pairs {
        m[(b, a)] = rint(s);
        m[(a, b)] = rint(-s);
    }
    AlmostComplexStructure::new(m).expect("paired structure squares to -I")
}

/// Matrix with the paired blocks plus one center plane
/// `J e_a = s e_a + t e_b`, which forces
/// `J e_b = -((1+s^2)/t) e_a - s e_b`. Requires t != 0.
pub fn j_pairs_with_plane(
    dim: usize,
    pairs: &[(usize, usize, i64)],
    plane: (usize, usize, &Rat, &Rat),
) -> Option<AlmostComplexStructure> {
    let (a, b, s, t) = plane;
    if t.is_zero() {
        return None;
    }
    let mut m = Mat::<Rat>::zeros(dim, dim);
    for &(x, y, sg) in pairs {
        m[(y, x)] = rint(sg);
        m[(x, y)] = rint(-sg);
    }
    m[(a, a)] = s.clone();
    m[(b, a)] = t.clone();
    m[(a, b)] = -(Rat::one() + s.clone() * s.clone()) / t.clone();
    m[(b, b)] = -s.clone();
    Some(AlmostComplexStructure::new(m).expect("plane structure squares to -I"))
}

pub fn n1_j() -> AlmostComplexStructure {
    j_pairs(6, &[(0, 1), (2, 3), (4, 5)])
}

/// J on n2 with plus or minus sign on the second Heisenberg block.
pub fn n2_j(plus: bool) -> AlmostComplexStructure {
    j_signed_pairs(6, &[(0, 1, 1), (2, 3, if plus { 1 } else { -1 }), (4, 5, 1)])
}

pub fn n3_j_st(s: &Rat, t: &Rat) -> Option<AlmostComplexStructure> {
    j_pairs_with_plane(6, &[(0, 1, 1), (2, 3, 1)], (4, 5, s, t))
}

pub fn n4_j1_st(s: &Rat, t: &Rat) -> Option<AlmostComplexStructure> {
    j_pairs_with_plane(6, &[(0, 2, 1), (1, 3, 1)], (4, 5, s, t))
}

pub fn n4_j2_st(s: &Rat, t: &Rat) -> Option<AlmostComplexStructure> {
    j_pairs_with_plane(6, &[(0, 1, 1), (2, 3, -1)], (4, 5, s, t))
}

/// The bi-invariant structure on n4.
pub fn n4_j0() -> AlmostComplexStructure {
    j_pairs(6, &[(0, 1), (2, 3), (4, 5)])
}

pub fn n5_j_st(s: &Rat, t: &Rat) -> Option<AlmostComplexStructure> {
    j_pairs_with_plane(6, &[(0, 1, 1), (2, 3, -1)], (4, 5, s, t))
}

/// The unique structure on n6: J e1 = e2, J e3 = -e6, J e4 = e5.
pub fn n6_j() -> AlmostComplexStructure {
    j_signed_pairs(6, &[(0, 1, 1), (2, 5, -1), (3, 4, 1)])
}

pub fn n7_j_st(s: &Rat, t: &Rat) -> Option<AlmostComplexStructure> {
    j_pairs_with_plane(6, &[(0, 1, 1), (2, 3, -1)], (4, 5, s, t))
}

/// J1 on aff(C): J e1 = -e2, J e3 = e4. Proper.
pub fn aff_c_j1() -> AlmostComplexStructure {
    j_signed_pairs(4, &[(0, 1, -1), (2, 3, 1)])
}

/// J2 on aff(C): J e1 = e3, J e2 = e4. Not proper.
pub fn aff_c_j2() -> AlmostComplexStructure {
    j_pairs(4, &[(0, 2), (1, 3)])
}

/// The bi-invariant structure on aff(C): J e1 = e2, J e3 = e4.
pub fn aff_c_bi_invariant() -> AlmostComplexStructure {
    j_pairs(4, &[(0, 1), (2, 3)])
}

/// The family J+_(a,b) on aff(C); J+_(0,0) = J1.
pub fn aff_c_j_plus(a: &Rat, b: &Rat) -> AlmostComplexStructure {
    let m = Mat::from_rows(vec![
        vec![rint(0), rint(1), rint(0), rint(0)],
        vec![rint(-1), rint(0), rint(0), rint(0)],
        vec![a.clone(), -b.clone(), rint(0), rint(-1)],
        vec![b.clone(), a.clone(), rint(1), rint(0)],
    ]);
    AlmostComplexStructure::new(m).expect("J+ squares to -I")
}

/// The family J-_(a,b) on aff(C).
pub fn aff_c_j_minus(a: &Rat, b: &Rat) -> AlmostComplexStructure {
    let m = Mat::from_rows(vec![
        vec![rint(0), rint(-1), rint(0), rint(0)],
        vec![rint(1), rint(0), rint(0), rint(0)],
        vec![a.clone(), -b.clone(), rint(0), rint(1)],
        vec![b.clone(), a.clone(), rint(-1), rint(0)],
    ]);
    AlmostComplexStructure::new(m).expect("J- squares to -I")
}

/// The non-proper family J_(a,b) on aff(C), block form [[0, B], [-B^-1, 0]]
/// with B = [[-a, b], [-b, -a]]; J_(1,0) = J2. Requires a^2 + b^2 != 0.
pub fn aff_c_j_ab(a: &Rat, b: &Rat) -> Option<AlmostComplexStructure> {
    let norm = a.clone() * a.clone() + b.clone() * b.clone();
    if norm.is_zero() {
        return None;
    }
    let m = Mat::from_rows(vec![
        vec![rint(0), rint(0), -a.clone(), b.clone()],
        vec![rint(0), rint(0), -b.clone(), -a.clone()],
        vec![a.clone() / norm.clone(), b.clone() / norm.clone(), rint(0), rint(0)],
        vec![-b.clone() / norm.clone(), a.clone() / norm.clone(), rint(0), rint(0)],
    ]);
    Some(AlmostComplexStructure::new(m).expect("J_(a,b) squares to -I"))
}

/// The two-sphere of structures J_x = x1 J1 + x2 J2 + x3 J1 J2 on aff(C),
/// defined exactly when x lies on the rational unit sphere.
pub fn aff_c_sphere(x: &[Rat; 3]) -> Option<AlmostComplexStructure> {
    let j1 = aff_c_j1();
    let j2 = aff_c_j2();
    let j1j2 = j1.matrix().mul(j2.matrix());
    let m = j1
        .matrix()
        .scale(&x[0])
        .add(&j2.matrix().scale(&x[1]))
        .add(&j1j2.scale(&x[2]));
    AlmostComplexStructure::new(m).ok()
}

/// The automorphism phi of aff(C) with phi J+_(a,b) = J1 phi, solved for
/// inside the automorphism family (the determinant-plus component; at
/// (0, 0) it degenerates to the identity, as it must since J+_(0,0) = J1).
pub fn aff_c_phi(a: &Rat, b: &Rat) -> Mat<Rat> {
    let half = |x: &Rat| x.clone() / rint(2);
    Mat::from_rows(vec![
        vec![rint(1), rint(0), rint(0), rint(0)],
        vec![rint(0), rint(1), rint(0), rint(0)],
        vec![half(b), half(a), rint(1), rint(0)],
        vec![-half(a), half(b), rint(0), rint(1)],
    ])
}

/// The automorphism psi of aff(C) with psi J-_(a,b) = J1 psi (the
/// determinant-minus component; at (0, 0) it conjugates J-_(0,0) = -J1
/// back to J1).
pub fn aff_c_psi(a: &Rat, b: &Rat) -> Mat<Rat> {
    let half = |x: &Rat| x.clone() / rint(2);
    Mat::from_rows(vec![
        vec![rint(1), rint(0), rint(0), rint(0)],
        vec![rint(0), rint(-1), rint(0), rint(0)],
        vec![-half(b), -half(a), rint(1), rint(0)],
        vec![-half(a), half(b), rint(0), rint(-1)],
    ])
}

/// The general automorphism of aff(C); invertible exactly when
/// a^2 + b^2 != 0, with determinant sign controlled by eps = +-1.
pub fn aff_c_aut(a: &Rat, b: &Rat, c: &Rat, d: &Rat, eps: i64) -> Option<Mat<Rat>> {
    assert!(eps == 1 || eps == -1, "eps must be +-1");
    if (a.clone() * a.clone() + b.clone() * b.clone()).is_zero() {
        return None;
    }
    let e = rint(eps);
    Some(Mat::from_rows(vec![
        vec![rint(1), rint(0), rint(0), rint(0)],
        vec![rint(0), e.clone(), rint(0), rint(0)],
        vec![c.clone(), -(e.clone() * d.clone()), a.clone(), -(e.clone() * b.clone())],
        vec![d.clone(), e.clone() * c.clone(), b.clone(), e.clone() * a.clone()],
    ]))
}

/// The unique structure on the semidirect product g5: J e1 = e2, J e3 = -e4.
pub fn g5_j() -> AlmostComplexStructure {
    j_signed_pairs(4, &[(0, 1, 1), (2, 3, -1)])
}

/// The structure on aff(R) x R^4: pair every factor.
pub fn split_pairs_j() -> AlmostComplexStructure {
    j_pairs(6, &[(0, 1), (2, 3), (4, 5)])
}

/// Product structure J1 x J on aff(C) x R^2 (basis e1..e4 then e5, e6).
pub fn aff_c_x_r2_j1_j() -> AlmostComplexStructure {
    j_signed_pairs(6, &[(0, 1, -1), (2, 3, 1), (4, 5, 1)])
}

/// Product structure J2 x J on aff(C) x R^2.
pub fn aff_c_x_r2_j2_j() -> AlmostComplexStructure {
    j_pairs(6, &[(0, 2), (1, 3), (4, 5)])
}

/// J on aff(R) x aff(C) with J1 on the second factor.
pub fn aff_r_x_aff_c_j1() -> AlmostComplexStructure {
    j_signed_pairs(6, &[(0, 1, 1), (2, 3, -1), (4, 5, 1)])
}

/// J on aff(R) x aff(C) with J2 on the second factor.
pub fn aff_r_x_aff_c_j2() -> AlmostComplexStructure {
    j_pairs(6, &[(0, 1), (2, 4), (3, 5)])
}

/// J on (aff(R) semidirect R^2) x R^2 and on aff(R) x g5 (placed blocks).
pub fn g5_x_r2_j() -> AlmostComplexStructure {
    j_signed_pairs(6, &[(0, 1, 1), (2, 3, -1), (4, 5, 1)])
}

pub fn aff_r_x_g5_j() -> AlmostComplexStructure {
    j_signed_pairs(6, &[(0, 1, 1), (2, 3, 1), (4, 5, -1)])
}

/// The structure on s1 and on aff(C) x R^2 that mixes the center into the
/// plane: J f1 = f2, J e1 = e2 + e3, J e2 = -e1 - e4, J e3 = e4.
pub fn mixing_j() -> AlmostComplexStructure {
    let mut m = Mat::<Rat>::zeros(6, 6);
    m[(1, 0)] = rint(1);
    m[(0, 1)] = rint(-1);
    // J e1 = e2 + e3
    m[(3, 2)] = rint(1);
    m[(4, 2)] = rint(1);
    // J e2 = -e1 - e4
    m[(2, 3)] = rint(-1);
    m[(5, 3)] = rint(-1);
    // J e3 = e4
    m[(5, 4)] = rint(1);
    m[(4, 5)] = rint(-1);
    AlmostComplexStructure::new(m).expect("mixing structure squares to -I")
}

/// The split structure on the s-family: J f1 = f2, J e1 = e2, J e3 = e4.
pub fn s_split_j() -> AlmostComplexStructure {
    j_pairs(6, &[(0, 1), (2, 3), (4, 5)])
}

/// The bi-invariant structure on s_(a,b): J f1 = -f2, J e1 = e2, J e3 = e4.
pub fn s_ab_bi_j() -> AlmostComplexStructure {
    j_signed_pairs(6, &[(0, 1, -1), (2, 3, 1), (4, 5, 1)])
}

/// J e_i = f_i on the aff(A) bases of s3 and s4.
pub fn aff_a_j() -> AlmostComplexStructure {
    j_pairs(6, &[(0, 3), (1, 4), (2, 5)])
}

/// J_r on h_{2n+1} x R^{2k+1}: the first r Heisenberg blocks get the minus
/// sign, and the abelian block is paired (z_{2j}, z_{2j+1}).
pub fn heisenberg_j(n: usize, k: usize, r: usize) -> AlmostComplexStructure {
    assert!(r <= n);
    let dim = 2 * n + 2 * k + 2;
    let mut pairs = Vec::new();
    for i in 0..n {
        pairs.push((2 * i, 2 * i + 1, if i < r { -1 } else { 1 }));
    }
    for j in 0..=k {
        pairs.push((2 * n + 2 * j, 2 * n + 2 * j + 1, 1));
    }
    j_signed_pairs(dim, &pairs)
}
