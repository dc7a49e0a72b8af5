//! Property tests for the exact linear algebra substrate and the algebraic
//! invariants that must hold on every input, not just on catalog data.

use proptest::collection::vec;
use proptest::prelude::*;

use liecs::catalog::{algebras, structures};
use liecs::cstruct::{check_structure, j_commutator};
use liecs::equiv::{group_element, GroupFamily};
use liecs::lie::{basis_vec, LieAlgebra};
use liecs::mat::Mat;
use liecs::scalar::{format_rational, gauss, parse_rational, rat, Rat};
use liecs::subspace::Subspace;

fn arb_rat() -> impl Strategy<Value = Rat> {
    (-12i64..=12, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn arb_mat() -> impl Strategy<Value = Mat<Rat>> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| {
        vec(vec(arb_rat(), c), r).prop_map(Mat::from_rows)
    })
}

proptest! {
    #[test]
    fn rref_is_idempotent(m in arb_mat()) {
        let (r, rank) = m.rref();
        let (again, rank2) = r.rref();
        prop_assert_eq!(&r, &again);
        prop_assert_eq!(rank, rank2);
    }

    #[test]
    fn rank_plus_kernel_dim_is_cols(m in arb_mat()) {
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.rows(), m.cols());
        for i in 0..kernel.rows() {
            let image = m.apply(&kernel.row(i));
            prop_assert!(image.iter().all(num_traits::Zero::is_zero));
        }
    }

    #[test]
    fn solve_returns_exact_solutions(m in arb_mat(), seed in vec(arb_rat(), 5)) {
        let x: Vec<Rat> = (0..m.cols()).map(|i| seed[i % seed.len()].clone()).collect();
        let b = m.apply(&x);
        let s = m.solve(&b).expect("consistent by construction");
        prop_assert_eq!(m.apply(&s), b);
    }

    #[test]
    fn rational_text_roundtrip(n in -10_000i64..=10_000, d in 1i64..=9999) {
        let r = rat(n, d);
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }

    #[test]
    fn gaussian_conjugation_involution(a in arb_rat(), b in arb_rat(), c in arb_rat(), d in arb_rat()) {
        let z = gauss(a, b);
        let w = gauss(c, d);
        prop_assert_eq!(z.conj().conj(), z.clone());
        prop_assert_eq!((z.clone() * w.clone()).conj(), z.conj() * w.conj());
    }

    #[test]
    fn transport_by_invertible_matrix_is_isomorphism(entries in vec(-2i64..=2, 36)) {
        let mut p = Mat::<Rat>::identity(6);
        for i in 0..6 {
            for j in 0..6 {
                if i != j {
                    p[(i, j)] = liecs::scalar::rint(entries[i * 6 + j]);
                }
            }
        }
        // Unit diagonal with arbitrary off-diagonal part keeps p unimodular
        // whenever the perturbation is triangularizable; just skip singular
        // draws.
        prop_assume!(p.inverse().is_some());
        let l = algebras::n5();
        let moved = l.transport(&p).unwrap();
        prop_assert!(l.is_isomorphism(&moved, &p));
    }

    #[test]
    fn structure_flags_invariant_under_n3_automorphisms(
        a in -4i64..=4, b in -4i64..=4, c in -4i64..=4, d in -4i64..=4,
        s in arb_rat(), t in arb_rat(),
    ) {
        prop_assume!(a * a + b * b != 0 && c * c + d * d != 0);
        prop_assume!(!num_traits::Zero::is_zero(&t));
        let g = group_element(&GroupFamily::N3Plus {
            a: liecs::scalar::rint(a),
            b: liecs::scalar::rint(b),
            c: liecs::scalar::rint(c),
            d: liecs::scalar::rint(d),
        }).unwrap();
        let lie = algebras::n3();
        let acs = structures::n3_j_st(&s, &t).unwrap();
        let before = check_structure(&lie, &acs).unwrap();
        let conj = acs.conjugate(&g).unwrap();
        let after = check_structure(&lie, &conj).unwrap();
        prop_assert_eq!(before.abelian, after.abelian);
        prop_assert_eq!(before.integrable, after.integrable);
        prop_assert_eq!(before.bi_invariant, after.bi_invariant);
        // Conjugating an abelian structure by an automorphism stays abelian.
        prop_assert!(after.abelian);
        let (_, proper_before) = j_commutator(&lie, &acs);
        let (_, proper_after) = j_commutator(&lie, &conj);
        prop_assert_eq!(proper_before, proper_after);
    }
}

#[test]
fn series_terms_are_decreasing_ideals() {
    for lie in [
        algebras::n6(),
        algebras::n7(),
        algebras::aff_c(),
        algebras::s1(),
        algebras::aff_r_x_h3_r(),
    ] {
        for series in [lie.lower_central_series(), lie.derived_series()] {
            for window in series.windows(2) {
                assert!(window[0].dim() >= window[1].dim());
            }
            for term in &series {
                let image = lie.bracket_with_subspace(term);
                assert!(term.contains_subspace(&image), "series term is an ideal");
            }
        }
    }
}

#[test]
fn center_is_annihilated_by_every_ad() {
    for lie in [algebras::n3(), algebras::n6(), algebras::s1(), algebras::aff_r_x_r4()] {
        let center = lie.center();
        for i in 0..lie.dim() {
            let ad = lie.ad(&basis_vec(lie.dim(), i));
            for v in center.basis_vectors() {
                assert!(ad.apply(&v).iter().all(num_traits::Zero::is_zero));
            }
        }
        // For nilpotent algebras of class k, the (k-1)-th lower central term
        // sits inside the center.
        if let Some(class) = lie.nilpotency_class() {
            let series = lie.lower_central_series();
            assert!(center.contains_subspace(&series[class - 1]));
        }
    }
}

#[test]
fn derivation_space_elements_satisfy_the_identity() {
    for lie in [algebras::aff_c(), algebras::n5(), algebras::g5()] {
        for d in lie.derivation_space() {
            assert!(lie.is_derivation(&d));
        }
    }
}

#[test]
fn j_saturated_commutator_is_j_stable_ideal_for_abelian_entries() {
    for (lie, acs) in [
        (algebras::n7(), structures::n7_j_st(&rat(1, 2), &rat(-2, 3)).unwrap()),
        (algebras::s1(), structures::mixing_j()),
        (algebras::aff_c_x_r2(), structures::aff_c_x_r2_j1_j()),
    ] {
        let (sat, _) = j_commutator(&lie, &acs);
        assert!(sat.is_stable_under(acs.matrix()));
        let image = lie.bracket_with_subspace(&sat);
        assert!(sat.contains_subspace(&image), "g' + Jg' is an ideal");
    }
}

#[test]
fn subspace_sum_is_monotone_and_canonical() {
    let a = Subspace::span(4, vec![basis_vec(4, 0)]);
    let b = Subspace::span(4, vec![basis_vec(4, 1)]);
    let sum = a.sum(&b);
    assert!(sum.contains_subspace(&a) && sum.contains_subspace(&b));
    assert_eq!(sum, b.sum(&a));
}
