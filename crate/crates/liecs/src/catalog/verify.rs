//! The catalog invariant suite: every entry is instantiated over its
//! deterministic parameter grid and checked against the structural facts it
//! is supposed to satisfy. Both the command-line verifier and the
//! acceptance tests run through this module, so the two always agree.

use crate::catalog::{CatalogEntry, Params, StructureClass};
use crate::cstruct;
use crate::subspace::Subspace;

/// Outcome of one named check on one entry.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct EntryReport {
    pub id: String,
    pub anchor: String,
    pub points_checked: usize,
    pub checks: Vec<CheckResult>,
}

impl EntryReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// One named check accumulating its first failure.
struct Check {
    name: &'static str,
    failure: Option<String>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check { name, failure: None }
    }

    fn require(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if !ok && self.failure.is_none() {
            self.failure = Some(detail());
        }
    }

    fn finish(self) -> CheckResult {
        CheckResult {
            name: self.name,
            passed: self.failure.is_none(),
            detail: self.failure.unwrap_or_default(),
        }
    }
}

/// Runs the invariant suite for one entry over `grid_size` parameter points.
pub fn verify_entry(entry: &CatalogEntry, grid_size: usize) -> EntryReport {
    let grid = entry.grid(grid_size);
    let mut instantiation = Check::new("instantiation");
    let mut jacobi = Check::new("jacobi");
    let mut class = Check::new("declared structure class");
    let mut two_step = Check::new("two-step solvable");
    let mut center_stable = Check::new("center J-stable");
    let mut oracle = Check::new("eigenspace oracle agreement");
    let mut descent = Check::new("strict J-central descent (nilpotent)");
    let mut properness = Check::new("properness obligations");
    let mut pinned = Check::new("pinned invariants");

    for params in &grid {
        let (lie, acs) = match entry.instantiate(params) {
            Ok(pair) => pair,
            Err(e) => {
                instantiation.require(false, || format!("{params}: {e}"));
                continue;
            }
        };

        jacobi.require(lie.jacobi_violations().is_empty(), || format!("{params}: Jacobi fails"));

        let report = match cstruct::check_structure(&lie, &acs) {
            Ok(r) => r,
            Err(e) => {
                instantiation.require(false, || format!("{params}: {e}"));
                continue;
            }
        };
        let class_holds = match entry.class {
            StructureClass::Abelian => report.is_acs && report.abelian,
            StructureClass::BiInvariant => report.is_acs && report.bi_invariant,
        };
        class.require(class_holds, || {
            format!(
                "{params}: declared {} but flags are abelian={} bi-invariant={}",
                entry.class.label(),
                report.abelian,
                report.bi_invariant
            )
        });

        // Two-step solvability: the second derived term vanishes.
        let derived_dims: Vec<usize> =
            lie.derived_series().iter().map(Subspace::dim).collect();
        let is_two_step = match derived_dims.len() {
            0 | 1 => false,
            2 => derived_dims[1] == 0,
            _ => derived_dims[2] == 0,
        };
        two_step.require(is_two_step, || format!("{params}: derived dims {derived_dims:?}"));

        center_stable.require(lie.center().is_stable_under(acs.matrix()), || {
            format!("{params}: center is not J-stable")
        });

        // Independent abelian oracle over Q(i).
        let eigen = cstruct::i_eigenspace(&lie, &acs);
        oracle.require(eigen.is_abelian_subalgebra == report.abelian, || {
            format!(
                "{params}: real identity says abelian={}, eigenspace says {}",
                report.abelian, eigen.is_abelian_subalgebra
            )
        });

        let (j_comm, proper) = cstruct::j_commutator(&lie, &acs);
        if lie.is_nilpotent() {
            let (series_dims, strict) = cstruct::j_central_series(&lie, &acs);
            descent.require(strict, || {
                format!("{params}: J-central series {series_dims:?} not strict")
            });
            properness.require(proper, || {
                format!("{params}: structure on a nilpotent algebra must be proper")
            });
        }
        if entry.class == StructureClass::BiInvariant
            && lie.commutator_subspace().dim() < lie.dim()
        {
            properness.require(proper, || {
                format!("{params}: bi-invariant on a non-perfect algebra must be proper")
            });
        }

        if let Some(msg) = expected_mismatch(entry, params, &lie, &acs, j_comm.dim(), proper) {
            pinned.require(false, || msg);
        }
    }

    EntryReport {
        id: entry.id.clone(),
        anchor: entry.anchor.clone(),
        points_checked: grid.len(),
        checks: vec![
            instantiation.finish(),
            jacobi.finish(),
            class.finish(),
            two_step.finish(),
            center_stable.finish(),
            oracle.finish(),
            descent.finish(),
            properness.finish(),
            pinned.finish(),
        ],
    }
}

fn expected_mismatch(
    entry: &CatalogEntry,
    params: &Params,
    lie: &crate::lie::LieAlgebra,
    acs: &crate::cstruct::AlmostComplexStructure,
    j_comm_dim: usize,
    proper: bool,
) -> Option<String> {
    let exp = &entry.expected;
    let derived: Vec<usize> = lie.derived_series().iter().map(Subspace::dim).collect();
    if let Some(want) = &exp.derived_dims {
        if &derived != want {
            return Some(format!("{params}: derived dims {derived:?}, pinned {want:?}"));
        }
    }
    let lcs: Vec<usize> = lie.lower_central_series().iter().map(Subspace::dim).collect();
    if let Some(want) = &exp.lower_central_dims {
        if &lcs != want {
            return Some(format!("{params}: lower central dims {lcs:?}, pinned {want:?}"));
        }
    }
    if let Some(want) = exp.nilpotent {
        if lie.is_nilpotent() != want {
            return Some(format!("{params}: nilpotent = {}, pinned {want}", lie.is_nilpotent()));
        }
    }
    if let Some(want) = exp.center_dim {
        let got = lie.center().dim();
        if got != want {
            return Some(format!("{params}: center dim {got}, pinned {want}"));
        }
    }
    if let Some(want) = exp.unimodular {
        if lie.is_unimodular() != want {
            return Some(format!("{params}: unimodular mismatch (pinned {want})"));
        }
    }
    if let Some(want) = exp.j_commutator_dim {
        if j_comm_dim != want {
            return Some(format!("{params}: dim g'_J = {j_comm_dim}, pinned {want}"));
        }
    }
    if let Some(want) = exp.proper {
        if proper != want {
            return Some(format!("{params}: proper = {proper}, pinned {want}"));
        }
    }
    if let Some(want) = exp.b_signature {
        match cstruct::bform_signature(lie, acs) {
            Ok(got) if got == want => {}
            Ok(got) => {
                return Some(format!("{params}: B-signature {got:?}, pinned {want:?}"));
            }
            Err(e) => return Some(format!("{params}: B-signature undefined ({e})")),
        }
    }
    None
}
