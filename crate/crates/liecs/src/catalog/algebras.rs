//! Structure-constant tables for every algebra in the catalog.
//!
//! Indices are 0-based here; the printed tables these encode use 1-based
//! labels e1, e2, ... Basis order for the solvable families with a
//! four-dimensional saturated commutator is (f1, f2, e1, e2, e3, e4).

use crate::lie::LieAlgebra;
use crate::scalar::{rint, Rat};
use num_traits::Zero;

fn unit(dim: usize, k: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); dim];
    v[k] = rint(1);
    v
}

fn combo(dim: usize, terms: &[(usize, Rat)]) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); dim];
    for (k, c) in terms {
        v[*k] = c.clone();
    }
    v
}

fn build(dim: usize, entries: Vec<((usize, usize), Vec<Rat>)>) -> LieAlgebra {
    LieAlgebra::new(dim, entries).expect("catalog table satisfies Jacobi")
}

/// aff(R): `[e1, e2] = e2`.
pub fn aff_r() -> LieAlgebra {
    build(2, vec![((0, 1), unit(2, 1))])
}

/// aff(C) as a real algebra: `[e1,e3]=e3, [e1,e4]=e4, [e2,e3]=e4, [e2,e4]=-e3`.
pub fn aff_c() -> LieAlgebra {
    build(
        4,
        vec![
            ((0, 2), unit(4, 2)),
            ((0, 3), unit(4, 3)),
            ((1, 2), unit(4, 3)),
            ((1, 3), combo(4, &[(2, rint(-1))])),
        ],
    )
}

/// Heisenberg algebra of dimension 2n+1: `[e_{2i-1}, e_{2i}] = z0` (last).
pub fn heisenberg(n: usize) -> LieAlgebra {
    let dim = 2 * n + 1;
    build(dim, (0..n).map(|i| ((2 * i, 2 * i + 1), unit(dim, 2 * n))).collect())
}

/// h_{2n+1} x R^{2k+1}, with z0 at index 2n and the abelian block after it.
pub fn heisenberg_x_r(n: usize, k: usize) -> LieAlgebra {
    heisenberg(n).direct_sum(&LieAlgebra::abelian(2 * k + 1))
}

/// aff(R) acting on R^2 by ad: `[e1,e2]=e2, [e1,e4]=e4, [e2,e3]=e4`.
pub fn g5() -> LieAlgebra {
    build(4, vec![((0, 1), unit(4, 1)), ((0, 3), unit(4, 3)), ((1, 2), unit(4, 3))])
}

/// n1 = h3 x R^3: `[e1,e2] = e6`.
pub fn n1() -> LieAlgebra {
    build(6, vec![((0, 1), unit(6, 5))])
}

/// n2 = h5 x R: `[e1,e2] = e6 = [e3,e4]`.
pub fn n2() -> LieAlgebra {
    build(6, vec![((0, 1), unit(6, 5)), ((2, 3), unit(6, 5))])
}

/// n3 = h3 x h3: `[e1,e2] = e5, [e3,e4] = e6`.
pub fn n3() -> LieAlgebra {
    build(6, vec![((0, 1), unit(6, 4)), ((2, 3), unit(6, 5))])
}

/// n4 = complex Heisenberg, realified:
/// `[e1,e3] = -[e2,e4] = e5, [e1,e4] = [e2,e3] = e6`.
pub fn n4() -> LieAlgebra {
    build(
        6,
        vec![
            ((0, 2), unit(6, 4)),
            ((1, 3), combo(6, &[(4, rint(-1))])),
            ((0, 3), unit(6, 5)),
            ((1, 2), unit(6, 5)),
        ],
    )
}

/// n5: `[e1,e2] = e5, [e1,e4] = [e2,e3] = e6`.
pub fn n5() -> LieAlgebra {
    build(6, vec![((0, 1), unit(6, 4)), ((0, 3), unit(6, 5)), ((1, 2), unit(6, 5))])
}

/// n6: `[e1,e2] = e5, [e1,e4] = [e2,e5] = e6`.
pub fn n6() -> LieAlgebra {
    build(6, vec![((0, 1), unit(6, 4)), ((0, 3), unit(6, 5)), ((1, 4), unit(6, 5))])
}

/// n7: `[e1,e2] = e4, [e1,e3] = -[e2,e4] = e5, [e1,e4] = [e2,e3] = e6`.
pub fn n7() -> LieAlgebra {
    build(
        6,
        vec![
            ((0, 1), unit(6, 3)),
            ((0, 2), unit(6, 4)),
            ((1, 3), combo(6, &[(4, rint(-1))])),
            ((0, 3), unit(6, 5)),
            ((1, 2), unit(6, 5)),
        ],
    )
}

pub fn aff_r_x_r4() -> LieAlgebra {
    aff_r().direct_sum(&LieAlgebra::abelian(4))
}

pub fn aff_c_x_r2() -> LieAlgebra {
    aff_c().direct_sum(&LieAlgebra::abelian(2))
}

pub fn aff_r_x_h3_r() -> LieAlgebra {
    aff_r().direct_sum(&heisenberg(1)).direct_sum(&LieAlgebra::abelian(1))
}

pub fn aff_r_x_aff_c() -> LieAlgebra {
    aff_r().direct_sum(&aff_c())
}

pub fn aff_r_squared_x_r2() -> LieAlgebra {
    aff_r().direct_sum(&aff_r()).direct_sum(&LieAlgebra::abelian(2))
}

pub fn g5_x_r2() -> LieAlgebra {
    g5().direct_sum(&LieAlgebra::abelian(2))
}

pub fn aff_r_cubed() -> LieAlgebra {
    aff_r().direct_sum(&aff_r()).direct_sum(&aff_r())
}

pub fn aff_r_x_g5() -> LieAlgebra {
    aff_r().direct_sum(&g5())
}

/// s1: `[f1,f2] = e3` plus the rotation action of span{f1,f2} on the plane
/// span{e1,e2}: `[f1,e1] = e1, [f1,e2] = e2, [f2,e1] = -e2, [f2,e2] = e1`.
pub fn s1() -> LieAlgebra {
    build(
        6,
        vec![
            ((0, 1), unit(6, 4)),
            ((0, 2), unit(6, 2)),
            ((0, 3), unit(6, 3)),
            ((1, 2), combo(6, &[(3, rint(-1))])),
            ((1, 3), unit(6, 2)),
        ],
    )
}

/// The s1 action block without the `[f1,f2] = e3` bracket; isomorphic to
/// aff(C) x R^2, presented on the basis (f1, f2, e1, e2, e3, e4).
pub fn s1_without_center_bracket() -> LieAlgebra {
    build(
        6,
        vec![
            ((0, 2), unit(6, 2)),
            ((0, 3), unit(6, 3)),
            ((1, 2), combo(6, &[(3, rint(-1))])),
            ((1, 3), unit(6, 2)),
        ],
    )
}

/// s2: the non-semisimple Jordan-block action,
/// `[f1,e3] = e1+e3, [f1,e4] = e2+e4` on top of the s1-type action.
pub fn s2() -> LieAlgebra {
    build(
        6,
        vec![
            ((0, 2), unit(6, 2)),
            ((0, 3), unit(6, 3)),
            ((1, 2), combo(6, &[(3, rint(-1))])),
            ((1, 3), unit(6, 2)),
            ((0, 4), combo(6, &[(2, rint(1)), (4, rint(1))])),
            ((0, 5), combo(6, &[(3, rint(1)), (5, rint(1))])),
            ((1, 4), combo(6, &[(3, rint(-1)), (5, rint(-1))])),
            ((1, 5), combo(6, &[(2, rint(1)), (4, rint(1))])),
        ],
    )
}

/// s_(a,b): the diagonalizable two-parameter action,
/// `[f1,e3] = a e3 + b e4, [f1,e4] = -b e3 + a e4`.
pub fn s_ab(a: &Rat, b: &Rat) -> LieAlgebra {
    build(
        6,
        vec![
            ((0, 2), unit(6, 2)),
            ((0, 3), unit(6, 3)),
            ((1, 2), combo(6, &[(3, rint(-1))])),
            ((1, 3), unit(6, 2)),
            ((0, 4), combo(6, &[(4, a.clone()), (5, b.clone())])),
            ((0, 5), combo(6, &[(4, -b.clone()), (5, a.clone())])),
            ((1, 4), combo(6, &[(4, b.clone()), (5, -a.clone())])),
            ((1, 5), combo(6, &[(4, a.clone()), (5, b.clone())])),
        ],
    )
}

/// s3 = aff of the truncated polynomial algebra:
/// `[e1,fi] = fi, [e2,f1] = f2, [e2,f2] = f3, [e3,f1] = f3`.
pub fn s3() -> LieAlgebra {
    build(
        6,
        vec![
            ((0, 3), unit(6, 3)),
            ((0, 4), unit(6, 4)),
            ((0, 5), unit(6, 5)),
            ((1, 3), unit(6, 4)),
            ((1, 4), unit(6, 5)),
            ((2, 3), unit(6, 5)),
        ],
    )
}

/// s4 = aff of the algebra with two square-zero generators:
/// `[e1,fi] = fi, [e2,f1] = f2, [e3,f1] = f3`.
pub fn s4() -> LieAlgebra {
    build(
        6,
        vec![
            ((0, 3), unit(6, 3)),
            ((0, 4), unit(6, 4)),
            ((0, 5), unit(6, 5)),
            ((1, 3), unit(6, 4)),
            ((2, 3), unit(6, 5)),
        ],
    )
}
