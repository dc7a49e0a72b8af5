//! Acceptance suite: one test per criterion, each printing a pass line with
//! the quantities it checked. Every tolerance here is exact equality; there
//! is no floating point anywhere in the crate.

use num_traits::{One, Signed, Zero};

use liecs::affalg;
use liecs::catalog::{self, algebras, structures, verify, Params};
use liecs::cstruct::{self, bform_signature, check_structure, j_commutator};
use liecs::equiv::{
    self, act, fingerprint, group_element, intertwiner_check, orbit_c, orbit_invariant,
    orbit_membership, GroupFamily, OrbitEvidence,
};
use liecs::lie::LieAlgebra;
use liecs::mat::{mat_i64, Mat};
use liecs::sampling;
use liecs::scalar::{rat, rint, Rat};
use liecs::subspace::Subspace;

const GRID: usize = 100;

#[test]
fn criterion_01_catalog_soundness_over_parameter_grids() {
    let mut entries_checked = 0;
    let mut points = 0;
    for entry in catalog::entries() {
        let report = verify::verify_entry(&entry, GRID);
        for check in &report.checks {
            assert!(
                check.passed,
                "criterion 01: {} failed {} ({})",
                report.id, check.name, check.detail
            );
        }
        entries_checked += 1;
        points += report.points_checked;
    }
    println!(
        "criterion 01 pass: {entries_checked} entries / {points} instantiations, 0 failures"
    );
}

#[test]
fn criterion_02_heisenberg_signature_table() {
    let mut checked = 0;
    for n in 1usize..=4 {
        for k in 0usize..=2 {
            for r in 0..=(n / 2) {
                let lie = algebras::heisenberg_x_r(n, k);
                let acs = structures::heisenberg_j(n, k, r);
                let sig = bform_signature(&lie, &acs).unwrap();
                assert_eq!(
                    sig,
                    (2 * r, 2 * (n - r)),
                    "criterion 02: signature mismatch at n={n} k={k} r={r}"
                );
                checked += 1;
            }
        }
    }
    println!("criterion 02 pass: {checked} signature cells match (2r, 2(n-r)) exactly");
}

#[test]
fn criterion_03_aff_c_normalizers() {
    let affc = algebras::aff_c();
    let j1 = structures::aff_c_j1();
    let j2 = structures::aff_c_j2();
    let pairs: Vec<Vec<Rat>> = sampling::tuple_stream(2).take(20).collect();
    for ab in &pairs {
        let (a, b) = (&ab[0], &ab[1]);
        let phi = structures::aff_c_phi(a, b);
        let jplus = structures::aff_c_j_plus(a, b);
        assert!(
            intertwiner_check(&affc, &jplus, &affc, &j1, &phi),
            "criterion 03: phi fails at (a,b) = ({a}, {b})"
        );
        let psi = structures::aff_c_psi(a, b);
        let jminus = structures::aff_c_j_minus(a, b);
        assert!(
            intertwiner_check(&affc, &jminus, &affc, &j1, &psi),
            "criterion 03: psi fails at (a,b) = ({a}, {b})"
        );
        // The non-proper family normalizes to J2 through the block
        // automorphism built from (a, b).
        if (a.clone() * a.clone() + b.clone() * b.clone()).is_zero() {
            continue;
        }
        let jab = structures::aff_c_j_ab(a, b).unwrap();
        let mut block = Mat::<Rat>::identity(4);
        block[(2, 2)] = a.clone();
        block[(2, 3)] = -b.clone();
        block[(3, 2)] = b.clone();
        block[(3, 3)] = a.clone();
        assert!(
            intertwiner_check(&affc, &jab, &affc, &j2, &block),
            "criterion 03: J_(a,b) pipeline fails at ({a}, {b})"
        );
    }
    println!("criterion 03 pass: 20 parameter pairs, phi/psi/J_(a,b) normalizations exact");
}

#[test]
fn criterion_04_sphere_of_structures() {
    let affc = algebras::aff_c();
    let j1 = structures::aff_c_j1();
    let j2 = structures::aff_c_j2();
    // J1 J2 = -J2 J1, exactly.
    assert_eq!(
        j1.matrix().mul(j2.matrix()),
        j2.matrix().mul(j1.matrix()).neg(),
        "criterion 04: anticommutation fails"
    );
    let points = sampling::sphere_points(10);
    assert_eq!(points.len(), 10);
    for p in &points {
        let acs = structures::aff_c_sphere(p).expect("point on the sphere");
        let report = check_structure(&affc, &acs).unwrap();
        assert!(report.is_acs && report.abelian, "criterion 04: J_x not abelian at {p:?}");
    }
    println!("criterion 04 pass: 10 rational sphere points give abelian structures");
}

#[test]
fn criterion_05_aff_c_recognition() {
    let affc = algebras::aff_c();
    let j1 = structures::aff_c_j1();
    let mut checked = 0;
    for tuple in sampling::tuple_stream(4) {
        if checked == 20 {
            break;
        }
        let (c, d, x, y) = (&tuple[0], &tuple[1], &tuple[2], &tuple[3]);
        if (c.clone() * c.clone() + d.clone() * d.clone()).is_zero() {
            continue;
        }
        let rec = equiv::recognize_aff_c(c, d, x, y).unwrap();
        assert_eq!(rec.algebra, affc, "criterion 05: wrong table at ({c},{d},{x},{y})");
        assert_eq!(rec.structure, j1, "criterion 05: wrong structure at ({c},{d},{x},{y})");
        checked += 1;
    }
    println!("criterion 05 pass: {checked} recognition inputs land exactly on the target pair");
}

#[test]
fn criterion_06_strict_descent_for_nilpotent_entries() {
    let mut checked = 0;
    for entry in catalog::entries() {
        for params in entry.grid(GRID) {
            let (lie, acs) = entry.instantiate(&params).unwrap();
            if !lie.is_nilpotent() {
                continue;
            }
            let (dims, strict) = cstruct::j_central_series(&lie, &acs);
            assert!(
                strict,
                "criterion 06: descent not strict for {} at {params}: {dims:?}",
                entry.id
            );
            checked += 1;
        }
    }
    println!("criterion 06 pass: strict J-central descent on {checked} nilpotent instantiations");
}

#[test]
fn criterion_07_nilpotent_saturated_commutator_is_abelian() {
    let mut checked = 0;
    for entry in catalog::entries() {
        if entry.dim != 6 {
            continue;
        }
        for params in entry.grid(10) {
            let (lie, acs) = entry.instantiate(&params).unwrap();
            let (sat, _) = j_commutator(&lie, &acs);
            let Some(restricted) = lie.restrict_to(&sat) else {
                continue;
            };
            if !restricted.is_nilpotent() {
                continue;
            }
            let vectors = sat.basis_vectors();
            for a in 0..vectors.len() {
                for b in a + 1..vectors.len() {
                    let w = lie.bracket(&vectors[a], &vectors[b]);
                    assert!(
                        w.iter().all(Zero::is_zero),
                        "criterion 07: bracket does not vanish on g'_J for {} at {params}",
                        entry.id
                    );
                }
            }
            checked += 1;
        }
    }
    println!("criterion 07 pass: {checked} instantiations with nilpotent g'_J are abelian there");
}

#[test]
fn criterion_08_orbit_structure() {
    // n5: the printed automorphism carries every grid point to (0, 1).
    let n5 = algebras::n5();
    let j01 = structures::n5_j_st(&Rat::zero(), &Rat::one()).unwrap();
    let mut n5_checked = 0;
    for st in sampling::tuple_stream(2) {
        if n5_checked == 20 {
            break;
        }
        let (s, t) = (&st[0], &st[1]);
        if t.is_zero() {
            continue;
        }
        let phi = group_element(&GroupFamily::N5Phi { s: s.clone(), t: t.clone() }).unwrap();
        let j_st = structures::n5_j_st(s, t).unwrap();
        assert!(
            intertwiner_check(&n5, &j_st, &n5, &j01, &phi),
            "criterion 08: n5 canonicalization fails at ({s}, {t})"
        );
        n5_checked += 1;
    }

    // n7 and n4: sampled group images preserve c and satisfy the circle
    // equation u^2 + (v - c/2)^2 = (c/2)^2 - 1.
    let mut image_checked = 0;
    let group_samples: Vec<Vec<Rat>> = sampling::tuple_stream(2).take(12).collect();
    let param_samples: Vec<Vec<Rat>> = sampling::tuple_stream(2).skip(5).take(6).collect();
    for (entry_id, kind) in [("n7-raw", 7u8), ("n4-raw-1", 1u8), ("n4-raw-2", 2u8)] {
        let entry = catalog::find(entry_id).unwrap();
        for st in &param_samples {
            let (s, t) = (&st[0], &st[1]);
            if t.is_zero() {
                continue;
            }
            let params = Params::of(&[("s", s.clone()), ("t", t.clone())]);
            let c = orbit_c(s, t);
            for ab in &group_samples {
                let (a, b) = (&ab[0], &ab[1]);
                if (a.clone() * a.clone() + b.clone() * b.clone()).is_zero() {
                    continue;
                }
                let elements: Vec<Mat<Rat>> = match kind {
                    7 => vec![group_element(&GroupFamily::N7Cx { a: a.clone(), b: b.clone() })
                        .unwrap()],
                    1 => vec![
                        group_element(&GroupFamily::N4G1Plus {
                            a: a.clone(),
                            b: b.clone(),
                            eps: 1,
                        })
                        .unwrap(),
                        group_element(&GroupFamily::N4G1Minus {
                            a: a.clone(),
                            b: b.clone(),
                            eps: -1,
                        })
                        .unwrap(),
                    ],
                    _ => vec![group_element(&GroupFamily::N4G2Plus {
                        a: a.clone(),
                        b: b.clone(),
                        c: Rat::one(),
                        d: rat(1, 2),
                    })
                    .unwrap()],
                };
                for g in elements {
                    let image = act(&entry, &g, &params).unwrap();
                    let (u, v) = (image.get("s").unwrap(), image.get("t").unwrap());
                    let c_image = orbit_c(u, v);
                    // Invariance: c up to the family's sign convention.
                    if kind == 7 {
                        assert_eq!(c_image, c, "criterion 08: c not preserved on n7");
                        // Literal circle equation for the image point.
                        let half_c = c.clone() / rint(2);
                        let lhs = u.clone() * u.clone()
                            + (v.clone() - half_c.clone()) * (v.clone() - half_c.clone());
                        let rhs = half_c.clone() * half_c - Rat::one();
                        assert_eq!(lhs, rhs, "criterion 08: circle equation fails on n7");
                    } else {
                        assert_eq!(
                            c_image.abs(),
                            c.abs(),
                            "criterion 08: |c| not preserved on {entry_id}"
                        );
                        let half = c_image.clone() / rint(2);
                        let lhs = u.clone() * u.clone()
                            + (v.clone() - half.clone()) * (v.clone() - half.clone());
                        let rhs = half.clone() * half - Rat::one();
                        assert_eq!(lhs, rhs, "criterion 08: circle equation fails on {entry_id}");
                    }
                    assert_eq!(
                        orbit_invariant(entry_id, &params).unwrap().value,
                        orbit_invariant(entry_id, &image).unwrap().value,
                        "criterion 08: orbit invariant changed on {entry_id}"
                    );
                    image_checked += 1;
                }
            }
        }
    }

    // The two fixed points of the n7 action are never connected, and each
    // is genuinely fixed by sampled elements.
    let plus = Params::of(&[("s", rint(0)), ("t", rint(1))]);
    let minus = Params::of(&[("s", rint(0)), ("t", rint(-1))]);
    let report = orbit_membership("n7-raw", &plus, &minus, 400).unwrap();
    assert!(
        matches!(report.evidence, OrbitEvidence::DifferentOrbits { .. }),
        "criterion 08: fixed points merged: {report}"
    );
    let entry = catalog::find("n7-raw").unwrap();
    for ab in &group_samples {
        let (a, b) = (&ab[0], &ab[1]);
        if (a.clone() * a.clone() + b.clone() * b.clone()).is_zero() {
            continue;
        }
        let g = group_element(&GroupFamily::N7Cx { a: a.clone(), b: b.clone() }).unwrap();
        assert_eq!(act(&entry, &g, &plus).unwrap(), plus);
        assert_eq!(act(&entry, &g, &minus).unwrap(), minus);
    }
    println!(
        "criterion 08 pass: n5 canonicalized at {n5_checked} points, \
         {image_checked} sampled group images on the orbit circles, fixed points separated"
    );
}

#[test]
fn criterion_09_pair_derivation_dimensions_and_bracket_relation() {
    // Pinned dimensions from the derivation-form displays.
    let cases: Vec<(&str, LieAlgebra, cstruct::AlmostComplexStructure, usize)> = vec![
        (
            "aff(R) x R^2",
            algebras::aff_r().direct_sum(&LieAlgebra::abelian(2)),
            structures::j_pairs(4, &[(0, 1), (2, 3)]),
            6,
        ),
        (
            "aff(R) x aff(R)",
            algebras::aff_r().direct_sum(&algebras::aff_r()),
            structures::j_pairs(4, &[(0, 1), (2, 3)]),
            4,
        ),
        ("aff(R) on R^2", algebras::g5(), structures::g5_j(), 4),
        ("aff(C) with J1", algebras::aff_c(), structures::aff_c_j1(), 4),
        ("aff(C) with J2", algebras::aff_c(), structures::aff_c_j2(), 4),
    ];
    for (name, lie, acs, want) in &cases {
        let got = cstruct::pair_derivation_space(lie, acs).len();
        assert_eq!(got, *want, "criterion 09: pair-derivation dim for {name}");
    }

    // ad_{[f1,f2]} = DJD - D^2 J on the saturated commutator, for every
    // abelian instantiation with dim g'_J = 4.
    let mut relation_checked = 0;
    for entry in catalog::entries() {
        if entry.dim != 6 || entry.class != catalog::StructureClass::Abelian {
            continue;
        }
        for params in entry.grid(10) {
            let (lie, acs) = entry.instantiate(&params).unwrap();
            let (sat, proper) = j_commutator(&lie, &acs);
            if sat.dim() != 4 || !proper {
                continue;
            }
            let f1 = (0..6)
                .map(|i| liecs::lie::basis_vec(6, i))
                .find(|e| !sat.contains(e))
                .expect("proper ideal misses a standard vector");
            let f2 = acs.apply(&f1);
            let coords = |w: &[Rat]| sat.coords_of(w).expect("value lies in g'_J");
            let d = Mat::from_cols(
                sat.basis_vectors().iter().map(|v| coords(&lie.bracket(&f1, v))).collect(),
            );
            let jr = Mat::from_cols(
                sat.basis_vectors().iter().map(|v| coords(&acs.apply(v))).collect(),
            );
            let lhs = Mat::from_cols(
                sat.basis_vectors()
                    .iter()
                    .map(|v| coords(&lie.bracket(&lie.bracket(&f1, &f2), v)))
                    .collect(),
            );
            let rhs = d.mul(&jr).mul(&d).sub(&d.mul(&d).mul(&jr));
            assert_eq!(lhs, rhs, "criterion 09: bracket relation fails for {} at {params}", entry.id);
            relation_checked += 1;
        }
    }
    assert!(relation_checked > 0);
    println!(
        "criterion 09 pass: 5 pinned pair-derivation dims, bracket relation exact on \
         {relation_checked} instantiations"
    );
}

#[test]
fn criterion_10_aff_doubling_reproduces_the_non_proper_list() {
    // Stored relabelings from the doubling basis (a1,a2,a3,b1,b2,b3) onto
    // the printed tables.
    let perm = |images: [(usize, i64); 6]| -> Mat<Rat> {
        let mut p = Mat::<Rat>::zeros(6, 6);
        for (src, (dst, sign)) in images.iter().enumerate() {
            p[(*dst, src)] = rint(*sign);
        }
        p
    };
    let relabelings: Vec<(usize, &str, Mat<Rat>)> = vec![
        (1, "aff3R", perm([(0, 1), (2, 1), (4, 1), (1, 1), (3, 1), (5, 1)])),
        (2, "affRxaffC-J2", perm([(0, 1), (2, 1), (3, 1), (1, 1), (4, 1), (5, 1)])),
        (3, "affRxg5", perm([(0, 1), (2, 1), (4, -1), (1, 1), (3, 1), (5, 1)])),
        (4, "s3", perm([(0, 1), (1, 1), (2, 1), (3, 1), (4, 1), (5, 1)])),
        (5, "s4", perm([(0, 1), (1, 1), (2, 1), (3, 1), (4, 1), (5, 1)])),
    ];
    for (k, target_id, p) in &relabelings {
        let a = affalg::stored_algebra(*k);
        assert!(a.assoc_violations().is_empty(), "criterion 10: A{k} associativity");
        let (square, _) = a.square_subspace();
        assert!(square.is_full(), "criterion 10: A{k} has A^2 = A");
        let (lie, acs) = a.aff_of();
        assert!(lie.jacobi_violations().is_empty(), "criterion 10: doubling of A{k} Jacobi");
        let report = check_structure(&lie, &acs).unwrap();
        assert!(report.abelian, "criterion 10: standard structure on A{k} doubling abelian");
        let entry = catalog::find(target_id).unwrap();
        let (target_lie, target_acs) = entry.instantiate(&Params::new()).unwrap();
        assert!(
            intertwiner_check(&lie, &acs, &target_lie, &target_acs, p),
            "criterion 10: relabeling fails for A{k} -> {target_id}"
        );
    }
    println!("criterion 10 pass: five doublings reproduce the printed tables up to relabeling");
}

/// Round trip between non-proper pairs and doublings: the multiplication
/// `x * y = [x, Jy]` on the commutator ideal rebuilds an associative
/// algebra whose doubling maps back onto the pair through the
/// identification `(x, y) -> y - Jx`.
#[test]
fn non_proper_pairs_round_trip_through_the_doubling() {
    let mut checked = 0;
    for entry in catalog::entries() {
        if entry.class != catalog::StructureClass::Abelian {
            continue;
        }
        let params = entry.grid(1).into_iter().next().unwrap();
        let (lie, acs) = entry.instantiate(&params).unwrap();
        let Some((assoc, commutator)) = affalg::assoc_from_pair(&lie, &acs) else {
            continue;
        };
        let (doubled, doubled_j) = assoc.aff_of();
        let phi = affalg::doubling_identification(&acs, &commutator);
        assert!(
            intertwiner_check(&doubled, &doubled_j, &lie, &acs, &phi),
            "identification fails for {}",
            entry.id
        );
        checked += 1;
    }
    assert!(checked >= 7, "only {checked} non-proper entries round-tripped");

    // The induced algebra of the truncated-polynomial doubling is exactly
    // the stored degree-three table.
    let entry = catalog::find("s3").unwrap();
    let (lie, acs) = entry.instantiate(&Params::new()).unwrap();
    let (assoc, _) = affalg::assoc_from_pair(&lie, &acs).unwrap();
    assert_eq!(assoc, affalg::stored_algebra(4));
}

#[test]
fn criterion_11_unimodular_entries_are_exactly_the_expected_ones() {
    let minus_one_zero = (rint(-1), rint(0));
    let mut checked = 0;
    for entry in catalog::entries() {
        if entry.dim != 6 {
            continue;
        }
        for params in entry.grid(40) {
            let (lie, _) = entry.instantiate(&params).unwrap();
            // The six-dimensional nilpotent entries are exactly the n1..n7
            // presentations; among the others only s_(-1,0) is unimodular.
            let expected = lie.is_nilpotent()
                || (entry.algebra_id == "s_ab"
                    && params.get("a") == Some(&minus_one_zero.0)
                    && params.get("b") == Some(&minus_one_zero.1));
            assert_eq!(
                lie.is_unimodular(),
                expected,
                "criterion 11: unimodularity mismatch for {} at {params}",
                entry.id
            );
            checked += 1;
        }
    }
    println!("criterion 11 pass: unimodularity matches the expected set on {checked} instantiations");
}

#[test]
fn criterion_12_abelian_oracle_crosscheck() {
    let mut checked = 0;
    for entry in catalog::entries() {
        for params in entry.grid(GRID) {
            let (lie, acs) = entry.instantiate(&params).unwrap();
            let report = check_structure(&lie, &acs).unwrap();
            let eigen = cstruct::i_eigenspace(&lie, &acs);
            assert_eq!(
                report.abelian, eigen.is_abelian_subalgebra,
                "criterion 12: oracle disagreement for {} at {params}",
                entry.id
            );
            // The same eigenspace also reproves the other two flags.
            assert_eq!(
                report.integrable, eigen.is_subalgebra,
                "criterion 12: integrability oracle disagreement for {} at {params}",
                entry.id
            );
            assert_eq!(
                report.bi_invariant, eigen.is_ideal,
                "criterion 12: bi-invariance oracle disagreement for {} at {params}",
                entry.id
            );
            if report.abelian {
                assert!(
                    cstruct::ad_antilinear(&lie, &acs),
                    "criterion 12: adjoint antilinearity fails for {} at {params}",
                    entry.id
                );
            }
            checked += 1;
        }
    }
    println!("criterion 12 pass: real identity and eigenspace oracle agree on {checked} instantiations");
}

/// Intertwined pairs must share every certificate-grade fingerprint field.
#[test]
fn intertwined_pairs_share_fingerprints() {
    // phi carries (n5, J_(1,1)) to (n5, J_(0,1)).
    let n5 = algebras::n5();
    let j11 = structures::n5_j_st(&rint(1), &rint(1)).unwrap();
    let j01 = structures::n5_j_st(&rint(0), &rint(1)).unwrap();
    let phi = group_element(&GroupFamily::N5Phi { s: rint(1), t: rint(1) }).unwrap();
    assert!(intertwiner_check(&n5, &j11, &n5, &j01, &phi));
    assert!(fingerprint(&n5, &j11).certificate_eq(&fingerprint(&n5, &j01)));

    // The J+ family is intertwined with J1 on aff(C).
    let affc = algebras::aff_c();
    let (a, b) = (rat(2, 3), rint(-1));
    let jplus = structures::aff_c_j_plus(&a, &b);
    let j1 = structures::aff_c_j1();
    assert!(intertwiner_check(&affc, &jplus, &affc, &j1, &structures::aff_c_phi(&a, &b)));
    assert!(fingerprint(&affc, &jplus).certificate_eq(&fingerprint(&affc, &j1)));

    // Transport along a random-ish base change preserves the fingerprint.
    let p = mat_i64(&[
        &[1, 0, 2, 0, 0, 1],
        &[0, 1, 0, -1, 0, 0],
        &[0, 0, 1, 0, 3, 0],
        &[0, 0, 0, 1, 0, 0],
        &[0, 0, 0, 0, 1, 0],
        &[0, 0, 0, 0, 0, 1],
    ]);
    let moved = n5.transport(&p).unwrap();
    let moved_j = j01.conjugate(&p).unwrap();
    assert!(intertwiner_check(&n5, &j01, &moved, &moved_j, &p));
    assert!(fingerprint(&n5, &j01).certificate_eq(&fingerprint(&moved, &moved_j)));
}

#[test]
fn criterion_13_fingerprints_separate_the_classification_lists() {
    let dim4_ids = ["g1", "g2", "g3", "g4", "g5", "affC-J1", "affC-J2"];
    let mut dim4 = Vec::new();
    for id in dim4_ids {
        let entry = catalog::find(id).unwrap();
        let params = entry.grid(1).into_iter().next().unwrap();
        let (lie, acs) = entry.instantiate(&params).unwrap();
        dim4.push((id, fingerprint(&lie, &acs)));
    }
    for i in 0..dim4.len() {
        for j in i + 1..dim4.len() {
            let fields = dim4[i].1.distinguishing_fields(&dim4[j].1);
            assert!(
                !fields.is_empty(),
                "criterion 13: {} and {} not separated",
                dim4[i].0,
                dim4[j].0
            );
        }
    }

    let quad: Vec<(&str, liecs::equiv::Fingerprint)> = vec![
        ("affC-J1", fingerprint(&algebras::aff_c(), &structures::aff_c_j1())),
        ("affC-J2", fingerprint(&algebras::aff_c(), &structures::aff_c_j2())),
        ("n2-Jplus", fingerprint(&algebras::n2(), &structures::n2_j(true))),
        ("n2-Jminus", fingerprint(&algebras::n2(), &structures::n2_j(false))),
    ];
    for i in 0..quad.len() {
        for j in i + 1..quad.len() {
            assert!(
                !quad[i].1.distinguishing_fields(&quad[j].1).is_empty(),
                "criterion 13: {} and {} not separated",
                quad[i].0,
                quad[j].0
            );
        }
    }
    println!("criterion 13 pass: 21 + 6 fingerprint pairs separated by certificate fields");
}

// ---------------------------------------------------------------------------
// Regression records for printed data the checks reject.
// ---------------------------------------------------------------------------

/// The verbatim center-mixing structure display fails the abelian identity
/// on the printed brackets; the catalog stores the corrected structure and
/// this test keeps the discrepancy on record.
#[test]
fn printed_mixing_structure_fails_abelian_check() {
    let mut m = Mat::<Rat>::zeros(6, 6);
    m[(1, 0)] = rint(1);
    m[(0, 1)] = rint(-1);
    // Printed: J e1 = -e2 + e3, J e2 = e1 + e4, J e3 = e4.
    m[(3, 2)] = rint(-1);
    m[(4, 2)] = rint(1);
    m[(2, 3)] = rint(1);
    m[(5, 3)] = rint(1);
    m[(5, 4)] = rint(1);
    m[(4, 5)] = rint(-1);
    let printed = liecs::cstruct::AlmostComplexStructure::new(m).expect("squares to -I");
    let report = check_structure(&algebras::s1(), &printed).unwrap();
    assert!(!report.abelian, "the printed display should fail the abelian identity");
    assert!(report.abelian_failures.contains(&(0, 2)), "witness pair (f1, e1)");

    let corrected = structures::mixing_j();
    let report = check_structure(&algebras::s1(), &corrected).unwrap();
    assert!(report.abelian);
}

/// The g5 entry's printed bracket/structure pair passes the abelian check
/// as printed; recorded since the sign convention interacts with the
/// bracket [e2, e3] = e4.
#[test]
fn printed_g5_pair_passes_as_printed() {
    let report = check_structure(&algebras::g5(), &structures::g5_j()).unwrap();
    assert!(report.is_acs && report.abelian);
}

/// Bi-invariant structures on the catalog's non-perfect algebras are
/// proper, and no catalog structure is both abelian and bi-invariant on a
/// non-abelian algebra.
#[test]
fn bi_invariant_entries_are_proper_and_exclusive() {
    for entry in catalog::entries() {
        let params = entry.grid(1).into_iter().next().unwrap();
        let (lie, acs) = entry.instantiate(&params).unwrap();
        let report = check_structure(&lie, &acs).unwrap();
        if report.abelian && report.bi_invariant {
            assert!(
                lie.commutator_subspace().is_zero(),
                "{}: abelian and bi-invariant forces an abelian algebra",
                entry.id
            );
        }
        if entry.class == catalog::StructureClass::BiInvariant {
            let (_, proper) = j_commutator(&lie, &acs);
            assert!(proper, "{}: bi-invariant on non-perfect must be proper", entry.id);
        }
    }
}

/// The intertwiner of the solvable family: the block automorphism carries
/// s1 onto the variant with [f1, f2] = a e3 + b e4 and commutes with the
/// center-mixing structure at (a, b) = (1, 0); for other parameters it is
/// still an isomorphism of the underlying algebras.
#[test]
fn s1_variant_isomorphism() {
    let s1 = algebras::s1();
    let j_mix = structures::mixing_j();
    for (a, b) in [(rint(1), rint(0)), (rint(2), rint(-1)), (rat(1, 2), rat(3, 2))] {
        let variant = {
            // [f1,f2] = a e3 + b e4 on top of the standard action block.
            let mut entries: Vec<((usize, usize), Vec<Rat>)> = Vec::new();
            let mut c = vec![Rat::zero(); 6];
            c[4] = a.clone();
            c[5] = b.clone();
            entries.push(((0, 1), c));
            for (&(i, j), v) in algebras::s1_without_center_bracket().entries() {
                entries.push(((i, j), v.clone()));
            }
            LieAlgebra::new(6, entries).unwrap()
        };
        let mut phi = Mat::<Rat>::identity(6);
        for at in [2, 4] {
            phi[(at, at)] = a.clone();
            phi[(at, at + 1)] = -b.clone();
            phi[(at + 1, at)] = b.clone();
            phi[(at + 1, at + 1)] = a.clone();
        }
        assert!(s1.is_isomorphism(&variant, &phi), "block map is an isomorphism at ({a},{b})");
        if b.is_zero() && a == rint(1) {
            assert!(intertwiner_check(&s1, &j_mix, &variant, &j_mix, &phi));
        }
        // The transported structure is abelian on the variant either way.
        let conj = j_mix.conjugate(&phi).unwrap();
        assert!(check_structure(&variant, &conj).unwrap().abelian);
    }
}

/// Round trip between the raw families and their canonical representatives:
/// canonicalize is idempotent and preserves the orbit invariant.
#[test]
fn canonicalization_preserves_invariants() {
    let mut checked = 0;
    for entry_id in ["n3-raw", "n5-raw", "n7-raw", "n4-raw-1", "n4-raw-2"] {
        for st in sampling::tuple_stream(2).take(40) {
            let (s, t) = (&st[0], &st[1]);
            if t.is_zero() {
                continue;
            }
            let params = Params::of(&[("s", s.clone()), ("t", t.clone())]);
            let inv = orbit_invariant(entry_id, &params).unwrap();
            match equiv::canonicalize(entry_id, &params).unwrap() {
                equiv::CanonicalForm::Params { entry_id: canon_id, params: canon } => {
                    let canon_inv = orbit_invariant(&canon_id, &canon).unwrap();
                    assert_eq!(inv.value, canon_inv.value, "{entry_id} at {params}");
                    // Idempotence.
                    let again = equiv::canonicalize(&canon_id, &canon).unwrap();
                    assert_eq!(
                        again,
                        equiv::CanonicalForm::Params { entry_id: canon_id, params: canon },
                        "{entry_id} at {params}"
                    );
                    // The canonical parameters satisfy their own domain.
                    checked += 1;
                }
                equiv::CanonicalForm::NonRationalRepresentative { .. } => {
                    // Still counts: the invariant itself is the certificate.
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 100);
}

/// Catalog export sanity used by the interface tests: every entry can be
/// rendered to the sparse bracket format and back (structural identity).
#[test]
fn catalog_tables_are_reconstructible_from_sparse_entries() {
    for entry in catalog::entries() {
        let params = entry.grid(1).into_iter().next().unwrap();
        let (lie, _) = entry.instantiate(&params).unwrap();
        let rebuilt = LieAlgebra::new(
            lie.dim(),
            lie.entries().map(|(&(i, j), v)| ((i, j), v.clone())).collect(),
        )
        .unwrap();
        assert_eq!(rebuilt, lie, "{}", entry.id);
    }
}

/// Direct-sum bookkeeping matches the stored product tables.
#[test]
fn products_match_direct_sums() {
    assert_eq!(
        algebras::aff_r_x_r4(),
        algebras::aff_r().direct_sum(&LieAlgebra::abelian(4))
    );
    let g2 = algebras::heisenberg(1).direct_sum(&LieAlgebra::abelian(1));
    assert_eq!(g2.commutator_subspace().dim(), 1);
    let h3h3 = algebras::heisenberg(1).direct_sum(&algebras::heisenberg(1));
    // Same abstract algebra as n3, on the interleaved basis.
    let p = mat_i64(&[
        &[1, 0, 0, 0, 0, 0],
        &[0, 1, 0, 0, 0, 0],
        &[0, 0, 0, 1, 0, 0],
        &[0, 0, 0, 0, 1, 0],
        &[0, 0, 1, 0, 0, 0],
        &[0, 0, 0, 0, 0, 1],
    ]);
    assert!(h3h3.is_isomorphism(&algebras::n3(), &p));

    let t = Mat::from_cols((0..6).map(|i| liecs::lie::basis_vec(6, i)).collect());
    assert_eq!(t, Mat::identity(6));
}

/// The Heisenberg block-swapping equivalence J_r ~ J_{n-r}: conjugation by
/// a basis permutation realizes it, so the catalog keeps r <= n/2 only.
#[test]
fn heisenberg_sign_classes_fold() {
    let lie = algebras::heisenberg_x_r(2, 0);
    // Swap the two Heisenberg blocks: e1..e4 -> e3 e4 e1 e2.
    let mut p = Mat::<Rat>::zeros(6, 6);
    for i in 0..2 {
        p[(i, i + 2)] = Rat::one();
        p[(i + 2, i)] = Rat::one();
    }
    p[(4, 4)] = Rat::one();
    p[(5, 5)] = Rat::one();
    assert!(lie.is_isomorphism(&lie, &p));
    let j_r2 = structures::j_signed_pairs(6, &[(0, 1, -1), (2, 3, -1), (4, 5, 1)]);
    let sig = bform_signature(&lie, &j_r2).unwrap();
    assert_eq!(sig, (4, 0), "two minus signs give the swapped cell");
}

/// Orbit invariants are constant under sampled group elements for every
/// parameterized family, not only the circle families.
#[test]
fn orbit_invariants_constant_under_sampled_elements() {
    let n3 = catalog::find("n3-raw").unwrap();
    let n5 = catalog::find("n5-raw").unwrap();
    let params: Vec<Params> = sampling::tuple_stream(2)
        .filter(|st| !st[1].is_zero())
        .take(8)
        .map(|st| Params::of(&[("s", st[0].clone()), ("t", st[1].clone())]))
        .collect();
    let coeffs: Vec<Vec<Rat>> = sampling::tuple_stream(4).skip(3).take(10).collect();
    for p in &params {
        for abcd in &coeffs {
            let (a, b, c, d) = (&abcd[0], &abcd[1], &abcd[2], &abcd[3]);
            if (a.clone() * a.clone() + b.clone() * b.clone()).is_zero()
                || (c.clone() * c.clone() + d.clone() * d.clone()).is_zero()
            {
                continue;
            }
            for family in [
                GroupFamily::N3Plus { a: a.clone(), b: b.clone(), c: c.clone(), d: d.clone() },
                GroupFamily::N3Minus { a: a.clone(), b: b.clone(), c: c.clone(), d: d.clone() },
            ] {
                let g = group_element(&family).unwrap();
                let image = act(&n3, &g, p).unwrap();
                assert_eq!(
                    orbit_invariant("n3-raw", p).unwrap().value,
                    orbit_invariant("n3-raw", &image).unwrap().value,
                    "n3 invariant changed under {} at {p}",
                    family.label()
                );
            }
        }
        // The canonicalizing map of n5 sends every point to (0, 1), and the
        // invariant is constant.
        let phi = group_element(&GroupFamily::N5Phi {
            s: p.get("s").unwrap().clone(),
            t: p.get("t").unwrap().clone(),
        })
        .unwrap();
        let image = act(&n5, &phi, p).unwrap();
        assert_eq!(image, Params::of(&[("s", rint(0)), ("t", rint(1))]));
        assert_eq!(
            orbit_invariant("n5-raw", p).unwrap().value,
            orbit_invariant("n5-raw", &image).unwrap().value
        );
    }
}

/// The sphere of structures has exactly two equivalence classes: the poles
/// carry the proper one, every other rational point the non-proper one.
#[test]
fn sphere_points_split_into_the_two_known_classes() {
    let affc = algebras::aff_c();
    let j1_fp = fingerprint(&affc, &structures::aff_c_j1());
    let j2_fp = fingerprint(&affc, &structures::aff_c_j2());
    for p in sampling::sphere_points(12) {
        let acs = structures::aff_c_sphere(&p).unwrap();
        let fp = fingerprint(&affc, &acs);
        let at_pole = p[1].is_zero() && p[2].is_zero();
        if at_pole {
            assert!(fp.certificate_eq(&j1_fp), "pole {p:?} should look like J1");
        } else {
            assert!(fp.certificate_eq(&j2_fp), "off-pole {p:?} should look like J2");
        }
    }
}

/// Subspace coordinates round-trip (used by every restriction).
#[test]
fn subspace_coordinates_roundtrip() {
    let s = Subspace::span(
        4,
        vec![
            vec![rint(1), rint(2), rint(0), rint(0)],
            vec![rint(0), rint(0), rint(1), rint(-1)],
        ],
    );
    let v = vec![rint(2), rint(4), rint(3), rint(-3)];
    let coords = s.coords_of(&v).unwrap();
    assert_eq!(coords.len(), 2);
    assert!(s.coords_of(&[rint(1), rint(0), rint(0), rint(0)]).is_none());
}
