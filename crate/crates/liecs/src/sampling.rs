//! Deterministic rational sample streams.
//!
//! Parameter grids, orbit samples and pseudo-random test inputs all draw
//! from these fixed sequences, so every report and test run is reproducible
//! without a random number generator.

use crate::scalar::{rat, Rat};

/// Fixed pool of small rationals, ordered roughly by complexity.
pub fn value_pool() -> Vec<Rat> {
    const TABLE: &[(i64, i64)] = &[
        (0, 1),
        (1, 1),
        (-1, 1),
        (1, 2),
        (2, 1),
        (-1, 2),
        (-2, 1),
        (3, 1),
        (1, 3),
        (-3, 1),
        (-1, 3),
        (3, 2),
        (-3, 2),
        (2, 3),
        (-2, 3),
        (5, 2),
        (4, 1),
        (-5, 2),
        (1, 4),
        (5, 1),
        (-1, 4),
        (4, 3),
        (-4, 3),
        (5, 3),
        (3, 4),
        (-3, 4),
        (5, 4),
        (-5, 4),
        (6, 1),
        (1, 5),
        (-1, 5),
        (2, 5),
        (-2, 5),
        (7, 2),
        (3, 5),
        (-3, 5),
        (7, 3),
        (4, 5),
        (-4, 5),
        (1, 6),
    ];
    TABLE.iter().map(|&(n, d)| rat(n, d)).collect()
}

/// Endless deterministic stream of rationals: the pool, then pool values
/// shifted by increasing integers.
pub fn rational_stream() -> impl Iterator<Item = Rat> {
    let pool = value_pool();
    (0..).flat_map(move |round: i64| {
        let shift = rat(round * 7, 1);
        pool.clone().into_iter().map(move |v| v + shift.clone())
    })
}

/// Deterministic stream of rational k-tuples, with coordinates decorrelated
/// by coprime strides through the pool.
pub fn tuple_stream(k: usize) -> impl Iterator<Item = Vec<Rat>> {
    let pool = value_pool();
    let len = pool.len();
    // Strides coprime to the pool length keep coordinates out of lockstep.
    const STRIDES: &[usize] = &[1, 7, 11, 13, 17, 19];
    (0usize..).map(move |m| {
        (0..k)
            .map(|c| {
                let stride = STRIDES[c % STRIDES.len()];
                let offset = (c * 5 + m / len) % len;
                pool[(m * stride + offset) % len].clone() + rat(((m / (len * 4)) as i64) * 3, 1)
            })
            .collect()
    })
}

/// First `count` tuples passing the domain filter, deduplicated.
pub fn filtered_tuples(
    k: usize,
    count: usize,
    mut in_domain: impl FnMut(&[Rat]) -> bool,
) -> Vec<Vec<Rat>> {
    let mut seen = Vec::new();
    for t in tuple_stream(k).take(200_000) {
        if seen.len() == count {
            break;
        }
        if in_domain(&t) && !seen.contains(&t) {
            seen.push(t);
        }
    }
    seen
}

/// Deterministic rational points on the unit two-sphere, produced by the
/// inverse stereographic projection of rational plane points.
pub fn sphere_points(count: usize) -> Vec<[Rat; 3]> {
    let mut out: Vec<[Rat; 3]> = Vec::new();
    let one = rat(1, 1);
    // The poles first: they are the special orbit representatives.
    out.push([one.clone(), rat(0, 1), rat(0, 1)]);
    out.push([rat(-1, 1), rat(0, 1), rat(0, 1)]);
    for uv in tuple_stream(2) {
        if out.len() >= count {
            break;
        }
        let (u, v) = (uv[0].clone(), uv[1].clone());
        let norm = u.clone() * u.clone() + v.clone() * v.clone();
        let denom = norm.clone() + one.clone();
        let p = [
            rat(2, 1) * u / denom.clone(),
            rat(2, 1) * v / denom.clone(),
            (norm - one.clone()) / denom,
        ];
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out.truncate(count);
    out
}
