//! Factorization of grid graphs with a diagonal reflection symmetry.
//!
//! For a graph symmetric about a diagonal lattice line whose on-axis vertices
//! are consecutive, cutting alternately below and above the on-axis vertices
//! splits it into an upper part `G+` and a lower part `G-` with
//! `M(G) = 2^w M(G+) M(G-)`, where `2w` is the number of on-axis vertices.

use std::fmt;

use num_traits::One;
use serde::Serialize;

use crate::engines::{count, EngineChoice};
use crate::graph::{EmbeddedGraph, Point};
use crate::{BigNat, Error, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Slope {
    /// The line `y = x + offset`.
    #[serde(rename = "+1")]
    Ascending,
    /// The line `y = -x + offset`.
    #[serde(rename = "-1")]
    Descending,
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Slope::Ascending => "+1",
            Slope::Descending => "-1",
        })
    }
}

/// A diagonal symmetry axis of a graph together with the vertices on it,
/// ordered by increasing x.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagonalAxis {
    pub direction: Slope,
    pub offset: i64,
    pub on_axis: Vec<usize>,
}

impl DiagonalAxis {
    /// Signed distance class of `p` from the axis: positive above, zero on,
    /// negative below.
    pub fn side(&self, p: Point) -> i64 {
        match self.direction {
            Slope::Ascending => p.y - p.x - self.offset,
            Slope::Descending => p.y + p.x - self.offset,
        }
    }

    pub fn reflect(&self, p: Point) -> Point {
        let t = self.offset;
        match self.direction {
            Slope::Ascending => Point::new(p.y - t, p.x + t),
            Slope::Descending => Point::new(t - p.y, t - p.x),
        }
    }

    pub fn w(&self) -> usize {
        self.on_axis.len() / 2
    }
}

fn candidate_offset(g: &EmbeddedGraph, direction: Slope) -> Option<i64> {
    let (lo, hi) = g.bounding_box()?;
    Some(match direction {
        Slope::Ascending => lo.y - lo.x,
        Slope::Descending => lo.x + hi.y,
    })
}

/// Builds the axis if it is a symmetry of `g` with a nonempty run of
/// consecutive on-axis vertices.
fn axis_if_valid(g: &EmbeddedGraph, direction: Slope, offset: i64) -> Option<DiagonalAxis> {
    let mut axis = DiagonalAxis {
        direction,
        offset,
        on_axis: Vec::new(),
    };
    if !g.vertices().iter().all(|&p| g.contains(axis.reflect(p))) {
        return None;
    }
    if !g.edge_points().all(|(p, q)| g.has_edge(axis.reflect(p), axis.reflect(q))) {
        return None;
    }
    // Vertices are sorted by x, so on-axis ones come out left to right.
    axis.on_axis = (0..g.vertex_count())
        .filter(|&k| axis.side(g.vertices()[k]) == 0)
        .collect();
    let xs: Vec<i64> = axis.on_axis.iter().map(|&k| g.vertices()[k].x).collect();
    if xs.is_empty() || xs.windows(2).any(|w| w[1] != w[0] + 1) {
        return None;
    }
    Some(axis)
}

/// The smallest `(direction, offset)` diagonal symmetry axis of `g`, if any.
pub fn find_diagonal_axis(g: &EmbeddedGraph) -> Option<DiagonalAxis> {
    [Slope::Ascending, Slope::Descending]
        .into_iter()
        .filter_map(|d| candidate_offset(g, d).and_then(|t| axis_if_valid(g, d, t)))
        .next()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationResult {
    pub g_plus: EmbeddedGraph,
    pub g_minus: EmbeddedGraph,
    pub w: usize,
}

/// Cuts `g` along `axis`.
///
/// The 1st, 3rd, ... on-axis vertices (from the left) lose their edges below
/// the axis and the 2nd, 4th, ... lose those above; each on-axis vertex then
/// joins the side whose edges it kept. Every deleted edge crosses between
/// the two sides, so `G+` and `G-` are the restrictions of `g` to them.
pub fn apply_factorization(g: &EmbeddedGraph, axis: &DiagonalAxis) -> Result<FactorizationResult> {
    let valid = axis_if_valid(g, axis.direction, axis.offset)
        .ok_or_else(|| Error::InvalidAxis(format!("slope {} offset {}", axis.direction, axis.offset)))?;
    if valid.on_axis != axis.on_axis {
        return Err(Error::InvalidAxis("on-axis vertex list does not match the graph".into()));
    }
    if axis.on_axis.len() % 2 != 0 {
        return Err(Error::InvalidAxis(format!(
            "{} on-axis vertices; a graph with a perfect matching has an even number",
            axis.on_axis.len()
        )));
    }
    let keeps_upper = |p: Point| -> bool {
        match axis.side(p) {
            0 => {
                let k = g.index_of(p).expect("own vertex");
                let rank = axis.on_axis.iter().position(|&v| v == k).expect("on-axis vertex");
                rank % 2 == 0
            }
            s => s > 0,
        }
    };
    Ok(FactorizationResult {
        g_plus: g.restrict(keeps_upper),
        g_minus: g.restrict(|p| !keeps_upper(p)),
        w: axis.w(),
    })
}

/// Serializable record of one factorization identity check.
#[derive(Clone, Debug, Serialize)]
pub struct FactorizationReport {
    pub graph: EmbeddedGraph,
    pub axis: DiagonalAxis,
    pub w: usize,
    pub m_g: String,
    pub m_plus: String,
    pub m_minus: String,
    pub ok: bool,
}

impl FactorizationReport {
    /// `2^w M(G+) M(G-)` recomputed from the recorded counts.
    pub fn product(&self) -> BigNat {
        let plus: BigNat = self.m_plus.parse().expect("decimal count");
        let minus: BigNat = self.m_minus.parse().expect("decimal count");
        (BigNat::one() << self.w) * plus * minus
    }
}

/// Finds the axis, factorizes, counts all three graphs independently and
/// compares `M(G)` with `2^w M(G+) M(G-)`.
pub fn verify_factorization(g: &EmbeddedGraph, engine: EngineChoice) -> Result<FactorizationReport> {
    let axis = find_diagonal_axis(g).ok_or_else(|| Error::InvalidAxis("no diagonal symmetry axis".into()))?;
    let parts = apply_factorization(g, &axis)?;
    let m_g = count(g, engine, false)?;
    let m_plus = count(&parts.g_plus, engine, false)?;
    let m_minus = count(&parts.g_minus, engine, false)?;
    let ok = m_g == (BigNat::one() << parts.w) * &m_plus * &m_minus;
    Ok(FactorizationReport {
        graph: g.clone(),
        axis,
        w: parts.w,
        m_g: m_g.to_string(),
        m_plus: m_plus.to_string(),
        m_minus: m_minus.to_string(),
        ok,
    })
}
