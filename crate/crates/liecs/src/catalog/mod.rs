//! Executable catalog of every algebra / complex-structure pair the library
//! classifies, with parameter domains, deterministic parameter grids and
//! expected invariants.
//!
//! Raw families coming from normal-form arguments (general `(s, t)` planes)
//! are separate entries from their canonical representatives; the
//! equivalence machinery connects the two. Entries are never deduplicated:
//! identity of entries follows the classification lists.

pub mod algebras;
pub mod structures;
pub mod verify;

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::cstruct::AlmostComplexStructure;
use crate::lie::LieAlgebra;
use crate::sampling;
use crate::scalar::{rat, rint, Rat};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CatalogError {
    #[error("unknown catalog id {0:?}")]
    UnknownId(String),
    #[error("missing parameter {name:?} for entry {id:?}")]
    MissingParam { id: String, name: String },
    #[error("unexpected parameter {name:?} for entry {id:?}")]
    UnexpectedParam { id: String, name: String },
    #[error("parameters outside the domain of {id:?}: {reason}")]
    DomainViolation { id: String, reason: String },
}

/// Declared class of a catalog structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureClass {
    Abelian,
    BiInvariant,
}

impl StructureClass {
    pub fn label(self) -> &'static str {
        match self {
            StructureClass::Abelian => "abelian",
            StructureClass::BiInvariant => "bi-invariant",
        }
    }
}

/// Named rational parameter assignment.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Params(BTreeMap<String, Rat>);

impl Params {
    pub fn new() -> Self {
        Params(BTreeMap::new())
    }

    pub fn of(pairs: &[(&str, Rat)]) -> Self {
        let mut p = Params::new();
        for (name, value) in pairs {
            p.0.insert((*name).to_string(), value.clone());
        }
        p
    }

    pub fn set(mut self, name: &str, value: Rat) -> Self {
        self.0.insert(name.to_string(), value);
        self
    }

    pub fn get(&self, name: &str) -> Option<&Rat> {
        self.0.get(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.0.keys().map(String::as_str)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Rat)> {
        self.0.iter().map(|(k, v)| (k.as_str(), v))
    }
}

impl std::fmt::Display for Params {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_empty() {
            return write!(f, "-");
        }
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// Invariants pinned for an entry. `None` fields are either parameter
/// dependent or simply not pinned; pinned fields must match exactly on
/// every instantiation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Expected {
    pub derived_dims: Option<Vec<usize>>,
    pub lower_central_dims: Option<Vec<usize>>,
    pub nilpotent: Option<bool>,
    pub center_dim: Option<usize>,
    pub unimodular: Option<bool>,
    pub j_commutator_dim: Option<usize>,
    pub proper: Option<bool>,
    pub b_signature: Option<(usize, usize)>,
}

type Builder = Box<dyn Fn(&Params) -> (LieAlgebra, AlmostComplexStructure) + Send + Sync>;
type DomainCheck = Box<dyn Fn(&Params) -> Result<(), String> + Send + Sync>;
type GridFn = Box<dyn Fn(usize) -> Vec<Params> + Send + Sync>;
type ParamReader =
    Box<dyn Fn(&LieAlgebra, &AlmostComplexStructure) -> Option<Params> + Send + Sync>;

pub struct CatalogEntry {
    pub id: String,
    /// Isomorphism-class label shared by entries on the same algebra.
    pub algebra_id: String,
    pub dim: usize,
    pub class: StructureClass,
    pub param_names: Vec<&'static str>,
    /// Human-readable provenance label for reports.
    pub anchor: String,
    /// Differential-form tuple from the standard nilpotent dictionary.
    pub salamon_tuple: Option<&'static str>,
    pub expected: Expected,
    builder: Builder,
    domain: DomainCheck,
    grid: GridFn,
    pub read_params: Option<ParamReader>,
}

impl CatalogEntry {
    /// Validates the parameters against the entry's domain and builds the
    /// concrete pair.
    pub fn instantiate(
        &self,
        params: &Params,
    ) -> Result<(LieAlgebra, AlmostComplexStructure), CatalogError> {
        for name in &self.param_names {
            if params.get(name).is_none() {
                return Err(CatalogError::MissingParam {
                    id: self.id.clone(),
                    name: (*name).to_string(),
                });
            }
        }
        for name in params.names() {
            if !self.param_names.contains(&name) {
                return Err(CatalogError::UnexpectedParam {
                    id: self.id.clone(),
                    name: name.to_string(),
                });
            }
        }
        (self.domain)(params).map_err(|reason| CatalogError::DomainViolation {
            id: self.id.clone(),
            reason,
        })?;
        Ok((self.builder)(params))
    }

    /// Deterministic in-domain parameter grid with up to `n` points.
    pub fn grid(&self, n: usize) -> Vec<Params> {
        (self.grid)(n)
    }
}

impl std::fmt::Debug for CatalogEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CatalogEntry")
            .field("id", &self.id)
            .field("algebra_id", &self.algebra_id)
            .field("dim", &self.dim)
            .field("class", &self.class)
            .field("param_names", &self.param_names)
            .finish_non_exhaustive()
    }
}

pub fn find(id: &str) -> Result<CatalogEntry, CatalogError> {
    entries()
        .into_iter()
        .find(|e| e.id == id)
        .ok_or_else(|| CatalogError::UnknownId(id.to_string()))
}

pub fn instantiate(
    id: &str,
    params: &Params,
) -> Result<(LieAlgebra, AlmostComplexStructure), CatalogError> {
    find(id)?.instantiate(params)
}

pub fn expected_fingerprint(id: &str) -> Result<Expected, CatalogError> {
    Ok(find(id)?.expected)
}

// ---------------------------------------------------------------------------
// Grid helpers
// ---------------------------------------------------------------------------

fn grid_fixed() -> GridFn {
    Box::new(|_| vec![Params::new()])
}

fn grid_one(name: &'static str, filter: fn(&Rat) -> bool) -> GridFn {
    Box::new(move |n| {
        sampling::filtered_tuples(1, n, |t| filter(&t[0]))
            .into_iter()
            .map(|t| Params::new().set(name, t[0].clone()))
            .collect()
    })
}

fn grid_pair(a: &'static str, b: &'static str, filter: fn(&Rat, &Rat) -> bool) -> GridFn {
    Box::new(move |n| {
        sampling::filtered_tuples(2, n, |t| filter(&t[0], &t[1]))
            .into_iter()
            .map(|t| Params::of(&[(a, t[0].clone()), (b, t[1].clone())]))
            .collect()
    })
}

/// Dense deterministic rationals in (0, 1], optionally mirrored to negative
/// values, for the canonical-parameter families.
fn unit_interval_values(n: usize, signed: bool) -> Vec<Rat> {
    let mut out = Vec::new();
    'outer: for q in 1i64.. {
        for p in 1..=q {
            let v = rat(p, q);
            if !out.contains(&v) {
                out.push(v.clone());
                if out.len() >= n {
                    break 'outer;
                }
                if signed {
                    out.push(-v);
                    if out.len() >= n {
                        break 'outer;
                    }
                }
            }
        }
    }
    out.truncate(n);
    out
}

fn grid_unit(name: &'static str) -> GridFn {
    Box::new(move |n| {
        unit_interval_values(n, false).into_iter().map(|v| Params::new().set(name, v)).collect()
    })
}

fn grid_unit_signed(name: &'static str) -> GridFn {
    Box::new(move |n| {
        unit_interval_values(n, true).into_iter().map(|v| Params::new().set(name, v)).collect()
    })
}

fn grid_sphere() -> GridFn {
    Box::new(|n| {
        sampling::sphere_points(n)
            .into_iter()
            .map(|p| {
                Params::of(&[("x1", p[0].clone()), ("x2", p[1].clone()), ("x3", p[2].clone())])
            })
            .collect()
    })
}

fn in_region_r(a: &Rat, b: &Rat) -> bool {
    let norm = a.clone() * a.clone() + b.clone() * b.clone();
    let one = Rat::one();
    (norm.is_positive() && norm < one) || (norm == one && !b.is_negative())
}

fn grid_region_r() -> GridFn {
    Box::new(|n| {
        let mut out: Vec<Params> = Vec::new();
        let seed: Vec<(Rat, Rat)> = vec![
            (rint(-1), rint(0)),
            (rint(1), rint(0)),
            (rint(0), rint(1)),
            (rat(3, 5), rat(4, 5)),
            (rat(-3, 5), rat(4, 5)),
            (rat(4, 5), rat(3, 5)),
            (rat(1, 2), rint(0)),
            (rint(0), rat(-1, 2)),
        ];
        for (a, b) in seed {
            if in_region_r(&a, &b) && out.len() < n {
                out.push(Params::of(&[("a", a), ("b", b)]));
            }
        }
        for t in sampling::filtered_tuples(2, 4 * n, |t| in_region_r(&t[0], &t[1])) {
            if out.len() >= n {
                break;
            }
            let p = Params::of(&[("a", t[0].clone()), ("b", t[1].clone())]);
            if !out.contains(&p) {
                out.push(p);
            }
        }
        out
    })
}

// ---------------------------------------------------------------------------
// Domain predicates and param readers
// ---------------------------------------------------------------------------

fn domain_free() -> DomainCheck {
    Box::new(|_| Ok(()))
}

fn domain_t_nonzero() -> DomainCheck {
    Box::new(|p| {
        if p.get("t").expect("checked").is_zero() {
            Err("t must be nonzero".to_string())
        } else {
            Ok(())
        }
    })
}

fn domain_t_unit() -> DomainCheck {
    Box::new(|p| {
        let t = p.get("t").expect("checked");
        if t.is_positive() && *t <= Rat::one() {
            Ok(())
        } else {
            Err("t must satisfy 0 < t <= 1".to_string())
        }
    })
}

fn domain_t_unit_signed() -> DomainCheck {
    Box::new(|p| {
        let t = p.get("t").expect("checked");
        if !t.is_zero() && t.abs() <= Rat::one() {
            Ok(())
        } else {
            Err("t must satisfy 0 < |t| <= 1".to_string())
        }
    })
}

fn domain_ab_nonzero() -> DomainCheck {
    Box::new(|p| {
        let a = p.get("a").expect("checked");
        let b = p.get("b").expect("checked");
        if (a.clone() * a.clone() + b.clone() * b.clone()).is_zero() {
            Err("(a, b) must satisfy a^2 + b^2 != 0".to_string())
        } else {
            Ok(())
        }
    })
}

fn domain_region_r() -> DomainCheck {
    Box::new(|p| {
        let a = p.get("a").expect("checked");
        let b = p.get("b").expect("checked");
        if in_region_r(a, b) {
            Ok(())
        } else {
            Err("(a, b) must lie in 0 < a^2+b^2 < 1 or on the upper unit circle".to_string())
        }
    })
}

fn domain_sphere() -> DomainCheck {
    Box::new(|p| {
        let norm: Rat = ["x1", "x2", "x3"]
            .iter()
            .map(|k| {
                let v = p.get(k).expect("checked");
                v.clone() * v.clone()
            })
            .sum();
        if norm == Rat::one() {
            Ok(())
        } else {
            Err("(x1, x2, x3) must lie on the rational unit sphere".to_string())
        }
    })
}

/// Reads `(s, t)` back from a center-plane structure matrix.
fn read_plane_params() -> ParamReader {
    Box::new(|_, acs| {
        let m = acs.matrix();
        if m.rows() != 6 {
            return None;
        }
        Some(Params::of(&[("s", m[(4, 4)].clone()), ("t", m[(5, 4)].clone())]))
    })
}

fn read_plane_t_only() -> ParamReader {
    Box::new(|_, acs| {
        let m = acs.matrix();
        if m.rows() != 6 || !m[(4, 4)].is_zero() {
            return None;
        }
        Some(Params::new().set("t", m[(5, 4)].clone()))
    })
}

fn read_plane_s_only() -> ParamReader {
    Box::new(|_, acs| {
        let m = acs.matrix();
        if m.rows() != 6 || m[(5, 4)] != Rat::one() {
            return None;
        }
        Some(Params::new().set("s", m[(4, 4)].clone()))
    })
}

fn read_s_ab_params() -> ParamReader {
    Box::new(|lie, _| {
        if lie.dim() != 6 {
            return None;
        }
        let v = lie.bracket_basis(0, 4);
        Some(Params::of(&[("a", v[4].clone()), ("b", v[5].clone())]))
    })
}

// ---------------------------------------------------------------------------
// Expected-invariant shorthands
// ---------------------------------------------------------------------------

#[allow(clippy::too_many_arguments)]
fn expected(
    derived: &[usize],
    lower_central: &[usize],
    nilpotent: bool,
    center: usize,
    unimodular: bool,
    j_comm: usize,
    proper: bool,
    b_signature: Option<(usize, usize)>,
) -> Expected {
    Expected {
        derived_dims: Some(derived.to_vec()),
        lower_central_dims: Some(lower_central.to_vec()),
        nilpotent: Some(nilpotent),
        center_dim: Some(center),
        unimodular: Some(unimodular),
        j_commutator_dim: Some(j_comm),
        proper: Some(proper),
        b_signature,
    }
}

// ---------------------------------------------------------------------------
// The catalog
// ---------------------------------------------------------------------------

struct EntrySpec {
    id: String,
    algebra_id: String,
    dim: usize,
    class: StructureClass,
    param_names: Vec<&'static str>,
    anchor: String,
    salamon_tuple: Option<&'static str>,
    expected: Expected,
    builder: Builder,
    domain: DomainCheck,
    grid: GridFn,
    read_params: Option<ParamReader>,
}

fn fixed(
    id: &str,
    algebra_id: &str,
    dim: usize,
    class: StructureClass,
    anchor: &str,
    expected: Expected,
    build: fn() -> (LieAlgebra, AlmostComplexStructure),
) -> EntrySpec {
    EntrySpec {
        id: id.to_string(),
        algebra_id: algebra_id.to_string(),
        dim,
        class,
        param_names: vec![],
        anchor: anchor.to_string(),
        salamon_tuple: None,
        expected,
        builder: Box::new(move |_| build()),
        domain: domain_free(),
        grid: grid_fixed(),
        read_params: None,
    }
}

pub fn entries() -> Vec<CatalogEntry> {
    let mut specs: Vec<EntrySpec> = Vec::new();

    // Dimension two.
    specs.push(fixed(
        "R2",
        "R2",
        2,
        StructureClass::Abelian,
        "dimension 2: the abelian plane",
        expected(&[2, 0], &[2, 0], true, 2, true, 0, true, None),
        || (LieAlgebra::abelian(2), structures::j_pairs(2, &[(0, 1)])),
    ));
    specs.push(fixed(
        "affR",
        "affR",
        2,
        StructureClass::Abelian,
        "dimension 2: affine motions of the line",
        expected(&[2, 1, 0], &[2, 1, 1], false, 0, false, 2, false, None),
        || (algebras::aff_r(), structures::j_pairs(2, &[(0, 1)])),
    ));

    // Dimension four: the classification list g1..g6.
    specs.push(fixed(
        "g1",
        "g1",
        4,
        StructureClass::Abelian,
        "dimension 4 list: g1 = R^4",
        expected(&[4, 0], &[4, 0], true, 4, true, 0, true, None),
        || (LieAlgebra::abelian(4), structures::j_pairs(4, &[(0, 1), (2, 3)])),
    ));
    specs.push(fixed(
        "g2",
        "g2",
        4,
        StructureClass::Abelian,
        "dimension 4 list: g2 = h3 x R",
        expected(&[4, 1, 0], &[4, 1, 0], true, 2, true, 2, true, Some((0, 2))),
        || {
            (
                algebras::heisenberg(1).direct_sum(&LieAlgebra::abelian(1)),
                structures::j_pairs(4, &[(0, 1), (2, 3)]),
            )
        },
    ));
    specs.push(fixed(
        "g3",
        "g3",
        4,
        StructureClass::Abelian,
        "dimension 4 list: g3 = aff(R) x R^2",
        expected(&[4, 1, 0], &[4, 1, 1], false, 2, false, 2, true, None),
        || {
            (
                algebras::aff_r().direct_sum(&LieAlgebra::abelian(2)),
                structures::j_pairs(4, &[(0, 1), (2, 3)]),
            )
        },
    ));
    specs.push(fixed(
        "g4",
        "g4",
        4,
        StructureClass::Abelian,
        "dimension 4 list: g4 = aff(R) x aff(R)",
        expected(&[4, 2, 0], &[4, 2, 2], false, 0, false, 4, false, None),
        || {
            (
                algebras::aff_r().direct_sum(&algebras::aff_r()),
                structures::j_pairs(4, &[(0, 1), (2, 3)]),
            )
        },
    ));
    specs.push(fixed(
        "g5",
        "g5",
        4,
        StructureClass::Abelian,
        "dimension 4 list: g5 = aff(R) acting on R^2",
        expected(&[4, 2, 0], &[4, 2, 2], false, 0, false, 4, false, None),
        || (algebras::g5(), structures::g5_j()),
    ));
    specs.push(fixed(
        "affC-J1",
        "g6",
        4,
        StructureClass::Abelian,
        "dimension 4 list: aff(C) with the proper structure J1",
        expected(&[4, 2, 0], &[4, 2, 2], false, 0, false, 2, true, None),
        || (algebras::aff_c(), structures::aff_c_j1()),
    ));
    specs.push(fixed(
        "affC-J2",
        "g6",
        4,
        StructureClass::Abelian,
        "dimension 4 list: aff(C) with the non-proper structure J2",
        expected(&[4, 2, 0], &[4, 2, 2], false, 0, false, 4, false, None),
        || (algebras::aff_c(), structures::aff_c_j2()),
    ));
    specs.push(fixed(
        "affC-biinv",
        "g6",
        4,
        StructureClass::BiInvariant,
        "aff(C): the bi-invariant structure",
        expected(&[4, 2, 0], &[4, 2, 2], false, 0, false, 2, true, None),
        || (algebras::aff_c(), structures::aff_c_bi_invariant()),
    ));
    specs.push(EntrySpec {
        id: "affC-Jplus".to_string(),
        algebra_id: "g6".to_string(),
        dim: 4,
        class: StructureClass::Abelian,
        param_names: vec!["a", "b"],
        anchor: "aff(C): raw family J+_(a,b), all equivalent to J1".to_string(),
        salamon_tuple: None,
        expected: expected(&[4, 2, 0], &[4, 2, 2], false, 0, false, 2, true, None),
        builder: Box::new(|p| {
            let (a, b) = (p.get("a").unwrap(), p.get("b").unwrap());
            (algebras::aff_c(), structures::aff_c_j_plus(a, b))
        }),
        domain: domain_free(),
        grid: grid_pair("a", "b", |_, _| true),
        read_params: None,
    });
    specs.push(EntrySpec {
        id: "affC-Jminus".to_string(),
        algebra_id: "g6".to_string(),
        dim: 4,
        class: StructureClass::Abelian,
        param_names: vec!["a", "b"],
        anchor: "aff(C): raw family J-_(a,b), all equivalent to J1".to_string(),
        salamon_tuple: None,
        expected: expected(&[4, 2, 0], &[4, 2, 2], false, 0, false, 2, true, None),
        builder: Box::new(|p| {
            let (a, b) = (p.get("a").unwrap(), p.get("b").unwrap());
            (algebras::aff_c(), structures::aff_c_j_minus(a, b))
        }),
        domain: domain_free(),
        grid: grid_pair("a", "b", |_, _| true),
        read_params: None,
    });
    specs.push(EntrySpec {
        id: "affC-Jab".to_string(),
        algebra_id: "g6".to_string(),
        dim: 4,
        class: StructureClass::Abelian,
        param_names: vec!["a", "b"],
        anchor: "aff(C): raw non-proper family J_(a,b), all equivalent to J2".to_string(),
        salamon_tuple: None,
        expected: expected(&[4, 2, 0], &[4, 2, 2], false, 0, false, 4, false, None),
        builder: Box::new(|p| {
            let (a, b) = (p.get("a").unwrap(), p.get("b").unwrap());
            (algebras::aff_c(), structures::aff_c_j_ab(a, b).expect("domain checked"))
        }),
        domain: domain_ab_nonzero(),
        grid: grid_pair("a", "b", |a, b| {
            !(a.clone() * a.clone() + b.clone() * b.clone()).is_zero()
        }),
        read_params: None,
    });
    specs.push(EntrySpec {
        id: "affC-sphere".to_string(),
        algebra_id: "g6".to_string(),
        dim: 4,
        class: StructureClass::Abelian,
        param_names: vec!["x1", "x2", "x3"],
        anchor: "aff(C): two-sphere of abelian structures J_x".to_string(),
        salamon_tuple: None,
        expected: Expected {
            derived_dims: Some(vec![4, 2, 0]),
            lower_central_dims: Some(vec![4, 2, 2]),
            nilpotent: Some(false),
            center_dim: Some(0),
            unimodular: Some(false),
            // Properness depends on the point: proper exactly at the poles.
            j_commutator_dim: None,
            proper: None,
            b_signature: None,
        },
        builder: Box::new(|p| {
            let x = [
                p.get("x1").unwrap().clone(),
                p.get("x2").unwrap().clone(),
                p.get("x3").unwrap().clone(),
            ];
            (algebras::aff_c(), structures::aff_c_sphere(&x).expect("domain checked"))
        }),
        domain: domain_sphere(),
        grid: grid_sphere(),
        read_params: None,
    });

    // Heisenberg families h_{2n+1} x R^{2k+1} with J_r.
    for n in 1usize..=4 {
        for k in 0usize..=2 {
            for r in 0..=(n / 2) {
                let dim = 2 * n + 2 * k + 2;
                specs.push(EntrySpec {
                    id: format!("h{}xR{}-r{}", 2 * n + 1, 2 * k + 1, r),
                    algebra_id: format!("h{}xR{}", 2 * n + 1, 2 * k + 1),
                    dim,
                    class: StructureClass::Abelian,
                    param_names: vec![],
                    anchor: format!(
                        "one-dimensional commutator: h{} x R{} with {} minus sign(s)",
                        2 * n + 1,
                        2 * k + 1,
                        r
                    ),
                    salamon_tuple: None,
                    expected: expected(
                        &[dim, 1, 0],
                        &[dim, 1, 0],
                        true,
                        2 * k + 2,
                        true,
                        2,
                        true,
                        Some((2 * r, 2 * (n - r))),
                    ),
                    builder: Box::new(move |_| {
                        (algebras::heisenberg_x_r(n, k), structures::heisenberg_j(n, k, r))
                    }),
                    domain: domain_free(),
                    grid: grid_fixed(),
                    read_params: None,
                });
            }
        }
    }

    // Dimension six, nilpotent: canonical structures, raw families and the
    // bi-invariant structure on n4.
    specs.push(EntrySpec {
        salamon_tuple: Some("(0,0,0,0,0,12)"),
        ..fixed(
            "n1",
            "n1",
            6,
            StructureClass::Abelian,
            "nilpotent list: n1 = h3 x R^3, unique structure",
            expected(&[6, 1, 0], &[6, 1, 0], true, 4, true, 2, true, Some((0, 2))),
            || (algebras::n1(), structures::n1_j()),
        )
    });
    for (id, plus, bsig) in [("n2-Jplus", true, (0, 4)), ("n2-Jminus", false, (2, 2))] {
        specs.push(EntrySpec {
            salamon_tuple: Some("(0,0,0,0,0,12+34)"),
            ..fixed(
                id,
                "n2",
                6,
                StructureClass::Abelian,
                "nilpotent list: n2 = h5 x R, sign family",
                expected(&[6, 1, 0], &[6, 1, 0], true, 2, true, 2, true, Some(bsig)),
                if plus {
                    || (algebras::n2(), structures::n2_j(true))
                } else {
                    || (algebras::n2(), structures::n2_j(false))
                },
            )
        });
    }

    let nilp2_expected = || expected(&[6, 2, 0], &[6, 2, 0], true, 2, true, 2, true, None);
    specs.push(EntrySpec {
        id: "n3-canonical".to_string(),
        algebra_id: "n3".to_string(),
        dim: 6,
        class: StructureClass::Abelian,
        param_names: vec!["s"],
        anchor: "nilpotent list: n3 = h3 x h3, canonical curve J_s".to_string(),
        salamon_tuple: Some("(0,0,0,0,12,34)"),
        expected: nilp2_expected(),
        builder: Box::new(|p| {
            let s = p.get("s").unwrap();
            (algebras::n3(), structures::n3_j_st(s, &Rat::one()).expect("t = 1"))
        }),
        domain: domain_free(),
        grid: grid_one("s", |_| true),
        read_params: Some(read_plane_s_only()),
    });
    specs.push(EntrySpec {
        id: "n3-raw".to_string(),
        algebra_id: "n3".to_string(),
        dim: 6,
        class: StructureClass::Abelian,
        param_names: vec!["s", "t"],
        anchor: "nilpotent normal forms: n3 raw family J_(s,t)".to_string(),
        salamon_tuple: Some("(0,0,0,0,12,34)"),
        expected: nilp2_expected(),
        builder: Box::new(|p| {
            let (s, t) = (p.get("s").unwrap(), p.get("t").unwrap());
            (algebras::n3(), structures::n3_j_st(s, t).expect("domain checked"))
        }),
        domain: domain_t_nonzero(),
        grid: grid_pair("s", "t", |_, t| !t.is_zero()),
        read_params: Some(read_plane_params()),
    });

    for (id, family) in [("n4-J1", 1u8), ("n4-J2", 2u8)] {
        specs.push(EntrySpec {
            id: id.to_string(),
            algebra_id: "n4".to_string(),
            dim: 6,
            class: StructureClass::Abelian,
            param_names: vec!["t"],
            anchor: format!("nilpotent list: n4 canonical family J^{family}_t"),
            salamon_tuple: Some("(0,0,0,0,13+42,14+23)"),
            expected: nilp2_expected(),
            builder: Box::new(move |p| {
                let t = p.get("t").unwrap();
                let j = if family == 1 {
                    structures::n4_j1_st(&Rat::zero(), t)
                } else {
                    structures::n4_j2_st(&Rat::zero(), t)
                };
                (algebras::n4(), j.expect("domain checked"))
            }),
            domain: domain_t_unit(),
            grid: grid_unit("t"),
            read_params: Some(read_plane_t_only()),
        });
    }
    for (id, family) in [("n4-raw-1", 1u8), ("n4-raw-2", 2u8)] {
        specs.push(EntrySpec {
            id: id.to_string(),
            algebra_id: "n4".to_string(),
            dim: 6,
            class: StructureClass::Abelian,
            param_names: vec!["s", "t"],
            anchor: format!("nilpotent normal forms: n4 raw family J^{family}_(s,t)"),
            salamon_tuple: Some("(0,0,0,0,13+42,14+23)"),
            expected: nilp2_expected(),
            builder: Box::new(move |p| {
                let (s, t) = (p.get("s").unwrap(), p.get("t").unwrap());
                let j = if family == 1 {
                    structures::n4_j1_st(s, t)
                } else {
                    structures::n4_j2_st(s, t)
                };
                (algebras::n4(), j.expect("domain checked"))
            }),
            domain: domain_t_nonzero(),
            grid: grid_pair("s", "t", |_, t| !t.is_zero()),
            read_params: Some(read_plane_params()),
        });
    }
    specs.push(EntrySpec {
        salamon_tuple: Some("(0,0,0,0,13+42,14+23)"),
        ..fixed(
            "n4-biinv",
            "n4",
            6,
            StructureClass::BiInvariant,
            "n4: the bi-invariant structure J0",
            expected(&[6, 2, 0], &[6, 2, 0], true, 2, true, 2, true, None),
            || (algebras::n4(), structures::n4_j0()),
        )
    });

    specs.push(EntrySpec {
        salamon_tuple: Some("(0,0,0,0,12,14+23)"),
        ..fixed(
            "n5-canonical",
            "n5",
            6,
            StructureClass::Abelian,
            "nilpotent list: n5, unique structure J_(0,1)",
            nilp2_expected(),
            || {
                (
                    algebras::n5(),
                    structures::n5_j_st(&Rat::zero(), &Rat::one()).expect("t = 1"),
                )
            },
        )
    });
    specs.push(EntrySpec {
        id: "n5-raw".to_string(),
        algebra_id: "n5".to_string(),
        dim: 6,
        class: StructureClass::Abelian,
        param_names: vec!["s", "t"],
        anchor: "nilpotent normal forms: n5 raw family J_(s,t)".to_string(),
        salamon_tuple: Some("(0,0,0,0,12,14+23)"),
        expected: nilp2_expected(),
        builder: Box::new(|p| {
            let (s, t) = (p.get("s").unwrap(), p.get("t").unwrap());
            (algebras::n5(), structures::n5_j_st(s, t).expect("domain checked"))
        }),
        domain: domain_t_nonzero(),
        grid: grid_pair("s", "t", |_, t| !t.is_zero()),
        read_params: Some(read_plane_params()),
    });

    specs.push(EntrySpec {
        salamon_tuple: Some("(0,0,0,0,12,14+25)"),
        ..fixed(
            "n6",
            "n6",
            6,
            StructureClass::Abelian,
            "nilpotent list: n6, unique structure, three-step",
            expected(&[6, 2, 0], &[6, 2, 1, 0], true, 2, true, 4, true, None),
            || (algebras::n6(), structures::n6_j()),
        )
    });

    let n7_expected = || expected(&[6, 3, 0], &[6, 3, 2, 0], true, 2, true, 4, true, None);
    specs.push(EntrySpec {
        id: "n7-canonical".to_string(),
        algebra_id: "n7".to_string(),
        dim: 6,
        class: StructureClass::Abelian,
        param_names: vec!["t"],
        anchor: "nilpotent list: n7 canonical family J_t, 0 < |t| <= 1".to_string(),
        salamon_tuple: Some("(0,0,0,12,13+42,14+23)"),
        expected: n7_expected(),
        builder: Box::new(|p| {
            let t = p.get("t").unwrap();
            (algebras::n7(), structures::n7_j_st(&Rat::zero(), t).expect("domain checked"))
        }),
        domain: domain_t_unit_signed(),
        grid: grid_unit_signed("t"),
        read_params: Some(read_plane_t_only()),
    });
    specs.push(EntrySpec {
        id: "n7-raw".to_string(),
        algebra_id: "n7".to_string(),
        dim: 6,
        class: StructureClass::Abelian,
        param_names: vec!["s", "t"],
        anchor: "nilpotent normal forms: n7 raw family J_(s,t)".to_string(),
        salamon_tuple: Some("(0,0,0,12,13+42,14+23)"),
        expected: n7_expected(),
        builder: Box::new(|p| {
            let (s, t) = (p.get("s").unwrap(), p.get("t").unwrap());
            (algebras::n7(), structures::n7_j_st(s, t).expect("domain checked"))
        }),
        domain: domain_t_nonzero(),
        grid: grid_pair("s", "t", |_, t| !t.is_zero()),
        read_params: Some(read_plane_params()),
    });

    // Dimension six, solvable, saturated commutator of dimension two.
    specs.push(fixed(
        "affRxR4",
        "affRxR4",
        6,
        StructureClass::Abelian,
        "solvable, dim g'_J = 2: aff(R) x R^4",
        expected(&[6, 1, 0], &[6, 1, 1], false, 4, false, 2, true, None),
        || (algebras::aff_r_x_r4(), structures::split_pairs_j()),
    ));
    specs.push(fixed(
        "affCxR2-J1xJ",
        "affCxR2",
        6,
        StructureClass::Abelian,
        "solvable, dim g'_J = 2: aff(C) x R^2 with the product of J1 and the plane structure",
        expected(&[6, 2, 0], &[6, 2, 2], false, 2, false, 2, true, None),
        || (algebras::aff_c_x_r2(), structures::aff_c_x_r2_j1_j()),
    ));

    // Dimension six, solvable, saturated commutator of dimension four,
    // non-abelian.
    specs.push(fixed(
        "affRxh3R",
        "affRxh3R",
        6,
        StructureClass::Abelian,
        "solvable, g'_J non-abelian: aff(R) x (h3 x R)",
        expected(&[6, 2, 0], &[6, 2, 1, 1], false, 2, false, 4, true, None),
        || (algebras::aff_r_x_h3_r(), structures::split_pairs_j()),
    ));
    specs.push(fixed(
        "affRxaffC-J1",
        "affRxaffC",
        6,
        StructureClass::Abelian,
        "solvable, g'_J non-abelian: aff(R) x aff(C) with J1",
        expected(&[6, 3, 0], &[6, 3, 3], false, 0, false, 4, true, None),
        || (algebras::aff_r_x_aff_c(), structures::aff_r_x_aff_c_j1()),
    ));
    specs.push(fixed(
        "affRxaffRxR2",
        "affRxaffRxR2",
        6,
        StructureClass::Abelian,
        "solvable, g'_J non-abelian: aff(R) x aff(R) x R^2",
        expected(&[6, 2, 0], &[6, 2, 2], false, 2, false, 4, true, None),
        || (algebras::aff_r_squared_x_r2(), structures::split_pairs_j()),
    ));
    specs.push(fixed(
        "g5xR2",
        "g5xR2",
        6,
        StructureClass::Abelian,
        "solvable, g'_J non-abelian: (aff(R) acting on R^2) x R^2",
        expected(&[6, 2, 0], &[6, 2, 2], false, 2, false, 4, true, None),
        || (algebras::g5_x_r2(), structures::g5_x_r2_j()),
    ));
    specs.push(fixed(
        "affCxR2-J2xJ",
        "affCxR2",
        6,
        StructureClass::Abelian,
        "solvable, g'_J non-abelian: aff(C) x R^2 with the product of J2 and the plane structure",
        expected(&[6, 2, 0], &[6, 2, 2], false, 2, false, 4, true, None),
        || (algebras::aff_c_x_r2(), structures::aff_c_x_r2_j2_j()),
    ));

    // Dimension six, solvable, saturated commutator isomorphic to R^4.
    specs.push(fixed(
        "affCxR2-mixing",
        "affCxR2",
        6,
        StructureClass::Abelian,
        "solvable, g'_J = R^4: aff(C) x R^2 with the center-mixing structure",
        expected(&[6, 2, 0], &[6, 2, 2], false, 2, false, 4, true, None),
        || (algebras::s1_without_center_bracket(), structures::mixing_j()),
    ));
    specs.push(fixed(
        "s1-J1",
        "s1",
        6,
        StructureClass::Abelian,
        "solvable, g'_J = R^4: s1 with the center-mixing structure",
        expected(&[6, 3, 0], &[6, 3, 2, 2], false, 2, false, 4, true, None),
        || (algebras::s1(), structures::mixing_j()),
    ));
    specs.push(fixed(
        "s1-J2",
        "s1",
        6,
        StructureClass::Abelian,
        "solvable, g'_J = R^4: s1 with the split structure",
        expected(&[6, 3, 0], &[6, 3, 2, 2], false, 2, false, 4, true, None),
        || (algebras::s1(), structures::s_split_j()),
    ));
    specs.push(fixed(
        "s2",
        "s2",
        6,
        StructureClass::Abelian,
        "solvable, g'_J = R^4: s2, the Jordan-block action",
        expected(&[6, 4, 0], &[6, 4, 4], false, 0, false, 4, true, None),
        || (algebras::s2(), structures::s_split_j()),
    ));
    specs.push(EntrySpec {
        id: "s_ab".to_string(),
        algebra_id: "s_ab".to_string(),
        dim: 6,
        class: StructureClass::Abelian,
        param_names: vec!["a", "b"],
        anchor: "solvable, g'_J = R^4: two-parameter family s_(a,b) over the region R".to_string(),
        salamon_tuple: None,
        expected: Expected {
            derived_dims: Some(vec![6, 4, 0]),
            lower_central_dims: Some(vec![6, 4, 4]),
            nilpotent: Some(false),
            center_dim: Some(0),
            unimodular: None, // true exactly at (a, b) = (-1, 0)
            j_commutator_dim: Some(4),
            proper: Some(true),
            b_signature: None,
        },
        builder: Box::new(|p| {
            let (a, b) = (p.get("a").unwrap(), p.get("b").unwrap());
            (algebras::s_ab(a, b), structures::s_split_j())
        }),
        domain: domain_region_r(),
        grid: grid_region_r(),
        read_params: Some(read_s_ab_params()),
    });
    specs.push(EntrySpec {
        id: "s_ab-biinv".to_string(),
        algebra_id: "s_ab".to_string(),
        dim: 6,
        class: StructureClass::BiInvariant,
        param_names: vec!["a", "b"],
        anchor: "s_(a,b): the bi-invariant structure".to_string(),
        salamon_tuple: None,
        expected: Expected {
            derived_dims: Some(vec![6, 4, 0]),
            lower_central_dims: Some(vec![6, 4, 4]),
            nilpotent: Some(false),
            center_dim: Some(0),
            unimodular: None,
            j_commutator_dim: Some(4),
            proper: Some(true),
            b_signature: None,
        },
        builder: Box::new(|p| {
            let (a, b) = (p.get("a").unwrap(), p.get("b").unwrap());
            (algebras::s_ab(a, b), structures::s_ab_bi_j())
        }),
        domain: domain_region_r(),
        grid: grid_region_r(),
        read_params: Some(read_s_ab_params()),
    });

    // Dimension six, non-proper: the aff(A) list.
    specs.push(fixed(
        "aff3R",
        "aff3R",
        6,
        StructureClass::Abelian,
        "non-proper list: aff(R) x aff(R) x aff(R)",
        expected(&[6, 3, 0], &[6, 3, 3], false, 0, false, 6, false, None),
        || (algebras::aff_r_cubed(), structures::split_pairs_j()),
    ));
    specs.push(fixed(
        "affRxaffC-J2",
        "affRxaffC",
        6,
        StructureClass::Abelian,
        "non-proper list: aff(R) x aff(C) with J2",
        expected(&[6, 3, 0], &[6, 3, 3], false, 0, false, 6, false, None),
        || (algebras::aff_r_x_aff_c(), structures::aff_r_x_aff_c_j2()),
    ));
    specs.push(fixed(
        "affRxg5",
        "affRxg5",
        6,
        StructureClass::Abelian,
        "non-proper list: aff(R) x (aff(R) acting on R^2)",
        expected(&[6, 3, 0], &[6, 3, 3], false, 0, false, 6, false, None),
        || (algebras::aff_r_x_g5(), structures::aff_r_x_g5_j()),
    ));
    specs.push(fixed(
        "s3",
        "s3",
        6,
        StructureClass::Abelian,
        "non-proper list: s3 = aff of the truncated polynomial algebra",
        expected(&[6, 3, 0], &[6, 3, 3], false, 0, false, 6, false, None),
        || (algebras::s3(), structures::aff_a_j()),
    ));
    specs.push(fixed(
        "s4",
        "s4",
        6,
        StructureClass::Abelian,
        "non-proper list: s4 = aff of the two-nilpotent-generator algebra",
        expected(&[6, 3, 0], &[6, 3, 3], false, 0, false, 6, false, None),
        || (algebras::s4(), structures::aff_a_j()),
    ));

    specs
        .into_iter()
        .map(|s| CatalogEntry {
            id: s.id,
            algebra_id: s.algebra_id,
            dim: s.dim,
            class: s.class,
            param_names: s.param_names,
            anchor: s.anchor,
            salamon_tuple: s.salamon_tuple,
            expected: s.expected,
            builder: s.builder,
            domain: s.domain,
            grid: s.grid,
            read_params: s.read_params,
        })
        .collect()
}
