use crate::graph::EmbeddedGraph;
use crate::{BigNat, Error, Result};

/// Largest graph accepted by [`count_brute`].
pub const BRUTE_MAX_VERTICES: usize = 40;

/// Counts perfect matchings by always matching the lowest-indexed uncovered
/// vertex with each available neighbour in turn.
///
/// A graph on at most 40 vertices has at most 39!! < 2^70 perfect matchings,
/// so the running total fits in a `u128`.
pub fn count_brute(g: &EmbeddedGraph) -> Result<BigNat> {
    let n = g.vertex_count();
    if n > BRUTE_MAX_VERTICES {
        return Err(Error::TooLarge {
            engine: "brute",
            detail: format!("{n} vertices, limit {BRUTE_MAX_VERTICES}"),
        });
    }
    let mut adj = vec![0u64; n];
    for (u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    Ok(BigNat::from(extend(all, &adj)))
}

fn extend(uncovered: u64, adj: &[u64]) -> u128 {
    if uncovered == 0 {
        return 1;
    }
    let v = uncovered.trailing_zeros() as usize;
    let rest = uncovered & !(1 << v);
    let mut partners = adj[v] & rest;
    let mut total = 0;
    while partners != 0 {
        let u = partners.trailing_zeros();
        partners &= partners - 1;
        total += extend(rest & !(1 << u), adj);
    }
    total
}
