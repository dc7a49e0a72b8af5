//! Fingerprint classification against the catalog.
//!
//! A match means "not distinguished from this entry by any certificate
//! field"; the report never claims uniqueness beyond the fingerprint.

use serde_json::json;

use crate::report::Report;
use liecs::catalog::{self, CatalogEntry};
use liecs::cstruct::AlmostComplexStructure;
use liecs::equiv::{self, fingerprint, Fingerprint};
use liecs::lie::LieAlgebra;

pub struct Match {
    pub entry_id: String,
    pub anchor: String,
    pub class_label: &'static str,
    /// Exact parameters recovered from the family shape, when the input is
    /// literally an instantiation of the entry.
    pub params: Option<catalog::Params>,
    /// Orbit invariant attached to the recovered parameters.
    pub invariant: Option<String>,
}

pub struct Outcome {
    pub fingerprint: Fingerprint,
    pub matches: Vec<Match>,
}

pub fn classify(lie: &LieAlgebra, acs: &AlmostComplexStructure) -> Outcome {
    let fp = fingerprint(lie, acs);
    let mut matches = Vec::new();
    for entry in catalog::entries() {
        if entry.dim != lie.dim() {
            continue;
        }
        let reference = match reference_fingerprint(&entry) {
            Some(r) => r,
            None => continue,
        };
        if !fp.certificate_eq(&reference) {
            continue;
        }
        let params = recover_params(&entry, lie, acs);
        let invariant = params
            .as_ref()
            .and_then(|p| equiv::orbit_invariant(&entry.id, p).ok())
            .map(|inv| inv.value.to_string());
        matches.push(Match {
            entry_id: entry.id.clone(),
            anchor: entry.anchor.clone(),
            class_label: entry.class.label(),
            params,
            invariant,
        });
    }
    Outcome { fingerprint: fp, matches }
}

fn reference_fingerprint(entry: &CatalogEntry) -> Option<Fingerprint> {
    let params = entry.grid(1).into_iter().next()?;
    let (lie, acs) = entry.instantiate(&params).ok()?;
    Some(fingerprint(&lie, &acs))
}

fn recover_params(
    entry: &CatalogEntry,
    lie: &LieAlgebra,
    acs: &AlmostComplexStructure,
) -> Option<catalog::Params> {
    if entry.param_names.is_empty() {
        let (l, a) = entry.instantiate(&catalog::Params::new()).ok()?;
        return (&l == lie && &a == acs).then(catalog::Params::new);
    }
    let reader = entry.read_params.as_ref()?;
    let params = reader(lie, acs)?;
    let (l, a) = entry.instantiate(&params).ok()?;
    (&l == lie && &a == acs).then_some(params)
}

pub fn render(outcome: &Outcome) -> Report {
    let fp = &outcome.fingerprint;
    let mut lines = Vec::new();
    lines.push(format!(
        "fingerprint: dim {}, derived {:?}, lower central {:?}, center {}, unimodular {}, \
         Der {}, dim g'_J {}, proper {}, B-signature {:?}",
        fp.dim,
        fp.derived_dims,
        fp.lower_central_dims,
        fp.center_dim,
        fp.unimodular,
        fp.derivation_dim,
        fp.j_commutator_dim,
        fp.proper,
        fp.b_signature,
    ));
    if outcome.matches.is_empty() {
        lines.push("no catalog entry matches all certificate fields".to_string());
    }
    for m in &outcome.matches {
        let mut line = format!("match: {} [{}] ({})", m.entry_id, m.anchor, m.class_label);
        if let Some(p) = &m.params {
            line.push_str(&format!(" at parameters {p}"));
        }
        if let Some(inv) = &m.invariant {
            line.push_str(&format!(", orbit invariant {inv}"));
        }
        lines.push(line);
    }
    lines.push(
        "note: matches share every certificate-grade invariant; equality of fingerprints \
         does not itself prove holomorphic isomorphism"
            .to_string(),
    );
    let json = json!({
        "fingerprint": {
            "dim": fp.dim,
            "derived_dims": fp.derived_dims,
            "lower_central_dims": fp.lower_central_dims,
            "nilpotent": fp.nilpotent,
            "center_dim": fp.center_dim,
            "unimodular": fp.unimodular,
            "derivation_dim": fp.derivation_dim,
            "j_commutator_dim": fp.j_commutator_dim,
            "proper": fp.proper,
            "b_signature": fp.b_signature.map(|(a, b)| vec![a, b]),
        },
        "matches": outcome.matches.iter().map(|m| json!({
            "id": m.entry_id,
            "anchor": m.anchor,
            "class": m.class_label,
            "params": m.params.as_ref().map(|p| p.to_string()),
            "orbit_invariant": m.invariant,
        })).collect::<Vec<_>>(),
    });
    Report { lines, json }
}
