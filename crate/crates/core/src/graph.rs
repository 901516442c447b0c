//! Embedded subgraphs of the square grid.
//!
//! Every graph in this crate lives on integer points of the plane and only
//! joins orthogonal unit neighbours. Dual graphs of regions and the rotated
//! Aztec rectangle graphs share this one representation, so the engines and
//! the symmetry machinery never have to special-case a family.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::regions::Region;
use crate::{Error, Result};

/// An integer point of the plane.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    pub fn parity(self) -> i64 {
        (self.x + self.y).rem_euclid(2)
    }

    fn l1(self, other: Point) -> i64 {
        (self.x - other.x).abs() + (self.y - other.y).abs()
    }
}

impl From<[i64; 2]> for Point {
    fn from([x, y]: [i64; 2]) -> Self {
        Point { x, y }
    }
}

impl From<Point> for [i64; 2] {
    fn from(p: Point) -> Self {
        [p.x, p.y]
    }
}

/// The eight symmetries of the square lattice fixing the origin.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Symmetry {
    Identity,
    Rot90,
    Rot180,
    Rot270,
    MirrorX,
    MirrorY,
    Transpose,
    AntiTranspose,
}

impl Symmetry {
    pub const ALL: [Symmetry; 8] = [
        Symmetry::Identity,
        Symmetry::Rot90,
        Symmetry::Rot180,
        Symmetry::Rot270,
        Symmetry::MirrorX,
        Symmetry::MirrorY,
        Symmetry::Transpose,
        Symmetry::AntiTranspose,
    ];

    /// Applies the symmetry to `(x, y)`. `MirrorX` negates x, `MirrorY`
    /// negates y, and rotations are counterclockwise.
    pub fn apply(self, x: i64, y: i64) -> (i64, i64) {
        match self {
            Symmetry::Identity => (x, y),
            Symmetry::Rot90 => (-y, x),
            Symmetry::Rot180 => (-x, -y),
            Symmetry::Rot270 => (y, -x),
            Symmetry::MirrorX => (-x, y),
            Symmetry::MirrorY => (x, -y),
            Symmetry::Transpose => (y, x),
            Symmetry::AntiTranspose => (-y, -x),
        }
    }

    pub fn apply_point(self, p: Point) -> Point {
        let (x, y) = self.apply(p.x, p.y);
        Point { x, y }
    }
}

/// Graph with vertices at distinct integer points and edges between
/// orthogonal unit neighbours.
///
/// Vertices are kept sorted, so two graphs with the same point and edge sets
/// compare equal and serialize identically.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct EmbeddedGraph {
    vertices: Vec<Point>,
    edges: BTreeSet<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<Point>,
    edges: Vec<[usize; 2]>,
}

impl Serialize for EmbeddedGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson {
            vertices: self.vertices.clone(),
            edges: self.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for EmbeddedGraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = GraphJson::deserialize(d)?;
        let edges = raw
            .edges
            .iter()
            .map(|&[u, v]| {
                let p = raw.vertices.get(u).copied();
                let q = raw.vertices.get(v).copied();
                p.zip(q)
                    .ok_or_else(|| serde::de::Error::custom(format!("edge [{u},{v}] out of range")))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        EmbeddedGraph::new(raw.vertices, edges).map_err(serde::de::Error::custom)
    }
}

impl EmbeddedGraph {
    /// Builds a graph from points and point-pair edges, validating the
    /// embedding invariants.
    pub fn new(
        vertices: impl IntoIterator<Item = Point>,
        edges: impl IntoIterator<Item = (Point, Point)>,
    ) -> Result<Self> {
        let mut vertices: Vec<Point> = vertices.into_iter().collect();
        vertices.sort_unstable();
        let before = vertices.len();
        vertices.dedup();
        if vertices.len() != before {
            return Err(Error::Malformed("duplicate vertex".into()));
        }
        let mut g = EmbeddedGraph {
            vertices,
            edges: BTreeSet::new(),
        };
        for (p, q) in edges {
            if p.l1(q) != 1 {
                return Err(Error::Malformed(format!(
                    "edge ({},{})-({},{}) is not a unit grid edge",
                    p.x, p.y, q.x, q.y
                )));
            }
            let (u, v) = match (g.index_of(p), g.index_of(q)) {
                (Some(u), Some(v)) => (u, v),
                _ => return Err(Error::Malformed("edge endpoint is not a vertex".into())),
            };
            if !g.edges.insert((u.min(v), u.max(v))) {
                return Err(Error::Malformed("duplicate edge".into()));
            }
        }
        Ok(g)
    }

    /// The grid-induced graph on `points`: every pair of orthogonal unit
    /// neighbours is joined.
    pub fn induced(points: impl IntoIterator<Item = Point>) -> Self {
        let mut vertices: Vec<Point> = points.into_iter().collect();
        vertices.sort_unstable();
        vertices.dedup();
        let mut g = EmbeddedGraph {
            vertices,
            edges: BTreeSet::new(),
        };
        for u in 0..g.vertices.len() {
            let p = g.vertices[u];
            for q in [Point::new(p.x + 1, p.y), Point::new(p.x, p.y + 1)] {
                if let Some(v) = g.index_of(q) {
                    g.edges.insert((u.min(v), u.max(v)));
                }
            }
        }
        g
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Edges as sorted index pairs `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_points(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        self.edges
            .iter()
            .map(|&(u, v)| (self.vertices[u], self.vertices[v]))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, p: Point) -> Option<usize> {
        self.vertices.binary_search(&p).ok()
    }

    pub fn contains(&self, p: Point) -> bool {
        self.index_of(p).is_some()
    }

    pub fn has_edge(&self, p: Point, q: Point) -> bool {
        match (self.index_of(p), self.index_of(q)) {
            (Some(u), Some(v)) => self.edges.contains(&(u.min(v), u.max(v))),
            _ => false,
        }
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// `(min, max)` corners of the bounding box, or `None` for the empty graph.
    pub fn bounding_box(&self) -> Option<(Point, Point)> {
        let first = *self.vertices.first()?;
        let (mut lo, mut hi) = (first, first);
        for p in &self.vertices {
            lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
        }
        Some((lo, hi))
    }

    /// Subgraph on the vertices satisfying `keep`, retaining only the edges
    /// between kept vertices.
    pub fn restrict(&self, mut keep: impl FnMut(Point) -> bool) -> Self {
        let kept: Vec<bool> = self.vertices.iter().map(|&p| keep(p)).collect();
        let vertices = self
            .vertices
            .iter()
            .zip(&kept)
            .filter(|(_, &k)| k)
            .map(|(&p, _)| p);
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| kept[u] && kept[v])
            .map(|&(u, v)| (self.vertices[u], self.vertices[v]));
        EmbeddedGraph::new(vertices, edges).expect("restriction preserves invariants")
    }

    /// Graph with one extra edge between existing unit neighbours.
    pub fn with_edge(&self, p: Point, q: Point) -> Result<Self> {
        let edges = self.edge_points().chain(std::iter::once((p, q)));
        EmbeddedGraph::new(self.vertices.iter().copied(), edges)
    }

    pub fn map_points(&self, f: impl Fn(Point) -> Point) -> Self {
        let vertices = self.vertices.iter().map(|&p| f(p));
        let edges = self.edge_points().map(|(p, q)| (f(p), f(q)));
        EmbeddedGraph::new(vertices, edges).expect("isometry preserves invariants")
    }

    pub fn transform(&self, sym: Symmetry) -> Self {
        self.map_points(|p| sym.apply_point(p))
    }

    pub fn translate(&self, dx: i64, dy: i64) -> Self {
        self.map_points(|p| Point::new(p.x + dx, p.y + dy))
    }

    pub fn connected_components(&self) -> usize {
        let adj = self.adjacency();
        let mut seen = vec![false; self.vertices.len()];
        let mut components = 0;
        for start in 0..self.vertices.len() {
            if seen[start] {
                continue;
            }
            components += 1;
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &v in &adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
        }
        components
    }

    /// Number of unit lattice squares whose four sides are all edges.
    pub fn unit_square_faces(&self) -> usize {
        self.vertices
            .iter()
            .filter(|&&p| {
                let (r, u, ru) = (
                    Point::new(p.x + 1, p.y),
                    Point::new(p.x, p.y + 1),
                    Point::new(p.x + 1, p.y + 1),
                );
                self.has_edge(p, r) && self.has_edge(p, u) && self.has_edge(r, ru) && self.has_edge(u, ru)
            })
            .count()
    }

    /// True iff every bounded face of the plane embedding is a unit square.
    ///
    /// By Euler's formula the embedding has `E - V + C` bounded faces, and
    /// each fully bordered unit square is one of them.
    pub fn bounded_faces_are_unit_squares(&self) -> bool {
        let bounded = self.edge_count() + self.connected_components();
        bounded == self.vertex_count() + self.unit_square_faces()
    }
}

/// Dual graph of a region: one vertex per cell at its `(i, j)` index point,
/// edges between side-sharing cells.
pub fn dual_graph(region: &Region) -> EmbeddedGraph {
    EmbeddedGraph::induced(region.cells().map(|c| Point::new(c.i, c.j)))
}

/// Result of removing forced edges by degree-one propagation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionReport {
    pub reduced: EmbeddedGraph,
    pub forced_pairs: Vec<(Point, Point)>,
    /// A vertex lost all its neighbours, so the graph has no perfect matching.
    pub infeasible: bool,
}

/// Repeatedly matches degree-one vertices with their unique neighbour and
/// deletes both, until no vertex of degree at most one remains.
pub fn reduce_forced(g: &EmbeddedGraph) -> ReductionReport {
    let adj = g.adjacency();
    let mut alive = vec![true; g.vertex_count()];
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut pending: BTreeSet<usize> = (0..g.vertex_count()).filter(|&v| degree[v] <= 1).collect();
    let mut forced_pairs = Vec::new();
    let mut infeasible = false;

    while let Some(v) = pending.pop_first() {
        if !alive[v] {
            continue;
        }
        if degree[v] == 0 {
            infeasible = true;
            break;
        }
        let u = adj[v]
            .iter()
            .copied()
            .find(|&u| alive[u])
            .expect("degree one vertex has a live neighbour");
        alive[v] = false;
        alive[u] = false;
        forced_pairs.push((g.vertices[v], g.vertices[u]));
        for &w in &adj[u] {
            if alive[w] {
                degree[w] -= 1;
                if degree[w] <= 1 {
                    pending.insert(w);
                }
            }
        }
    }

    let reduced = g.restrict(|p| alive[g.index_of(p).expect("own vertex")]);
    ReductionReport {
        reduced,
        forced_pairs,
        infeasible,
    }
}

/// Signed difference between the number of even-parity and odd-parity
/// vertices. A nonzero value rules out any perfect matching.
pub fn bipartite_imbalance(g: &EmbeddedGraph) -> i64 {
    g.vertices()
        .iter()
        .map(|p| if p.parity() == 0 { 1 } else { -1 })
        .sum()
}

type Encoding = (Vec<Point>, Vec<(Point, Point)>);

fn encode(g: &EmbeddedGraph) -> Encoding {
    let mut edges: Vec<(Point, Point)> = g.edge_points().map(|(p, q)| (p.min(q), p.max(q))).collect();
    edges.sort_unstable();
    (g.vertices.clone(), edges)
}

/// Canonical representative of the orbit of `g` under lattice symmetries and
/// translations: the lexicographically least encoding among the eight images,
/// each translated so that its bounding box starts at the origin.
pub fn normalize(g: &EmbeddedGraph) -> EmbeddedGraph {
    if g.is_empty() {
        return g.clone();
    }
    let mut best: BTreeMap<Encoding, EmbeddedGraph> = BTreeMap::new();
    for sym in Symmetry::ALL {
        let image = g.transform(sym);
        let (lo, _) = image.bounding_box().expect("nonempty");
        let image = image.translate(-lo.x, -lo.y);
        best.entry(encode(&image)).or_insert(image);
    }
    best.into_values().next().expect("eight images")
}

/// True iff a lattice symmetry followed by a translation maps `a` onto `b`.
pub fn isomorphic_embedded(a: &EmbeddedGraph, b: &EmbeddedGraph) -> bool {
    a.vertex_count() == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && normalize(a) == normalize(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regions::{build_aztec_diamond, build_quartered, QuarterKind};

    fn pts(v: &[(i64, i64)]) -> Vec<Point> {
        v.iter().map(|&(x, y)| Point::new(x, y)).collect()
    }

    fn square_at(x: i64, y: i64) -> EmbeddedGraph {
        EmbeddedGraph::induced(pts(&[(x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1)]))
    }

    #[test]
    fn rejects_non_unit_edges() {
        let err = EmbeddedGraph::new(pts(&[(0, 0), (1, 1)]), [(Point::new(0, 0), Point::new(1, 1))]);
        assert!(err.is_err());
        let err = EmbeddedGraph::new(pts(&[(0, 0), (0, 0)]), []);
        assert!(err.is_err());
    }

    #[test]
    fn dual_of_small_regions() {
        let g = dual_graph(&build_aztec_diamond(1).unwrap());
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 4);
        let empty = dual_graph(&build_quartered(1, QuarterKind::KNonabut).unwrap());
        assert!(empty.is_empty());
    }

    #[test]
    fn path_reduces_completely() {
        let g = EmbeddedGraph::induced(pts(&[(0, 0), (1, 0), (2, 0), (3, 0)]));
        let report = reduce_forced(&g);
        assert!(!report.infeasible);
        assert!(report.reduced.is_empty());
        assert_eq!(report.forced_pairs.len(), 2);
    }

    #[test]
    fn isolated_vertex_is_infeasible() {
        let g = EmbeddedGraph::induced(pts(&[(0, 0), (1, 0), (5, 5)]));
        assert!(reduce_forced(&g).infeasible);
    }

    #[test]
    fn square_has_no_forced_edges() {
        let report = reduce_forced(&square_at(0, 0));
        assert!(!report.infeasible);
        assert_eq!(report.reduced, square_at(0, 0));
    }

    #[test]
    fn imbalance() {
        for n in 1..=8 {
            assert_eq!(bipartite_imbalance(&dual_graph(&build_aztec_diamond(n).unwrap())), 0);
        }
        let r9 = dual_graph(&build_quartered(9, QuarterKind::R).unwrap());
        assert_eq!(bipartite_imbalance(&r9).abs(), 1);
        let r6 = dual_graph(&build_quartered(6, QuarterKind::R).unwrap());
        assert_ne!(bipartite_imbalance(&r6), 0);
    }

    #[test]
    fn embedded_isomorphism_examples() {
        assert!(isomorphic_embedded(&square_at(0, 0), &square_at(5, 7)));
        let horizontal = EmbeddedGraph::induced(pts(&[(0, 0), (1, 0), (2, 0)]));
        let vertical = EmbeddedGraph::induced(pts(&[(3, 1), (3, 2), (3, 3)]));
        assert!(isomorphic_embedded(&horizontal, &vertical));
        let r4 = dual_graph(&build_quartered(4, QuarterKind::R).unwrap());
        let kna4 = dual_graph(&build_quartered(4, QuarterKind::KNonabut).unwrap());
        assert!(!isomorphic_embedded(&r4, &kna4));
    }

    #[test]
    fn normalize_is_idempotent() {
        let g = dual_graph(&build_quartered(7, QuarterKind::KAbut).unwrap());
        let n = normalize(&g);
        assert_eq!(normalize(&n), n);
        assert_eq!(normalize(&g.transform(Symmetry::Rot270).translate(-4, 9)), n);
        assert_eq!(n.bounding_box().unwrap().0, Point::new(0, 0));
    }

    #[test]
    fn face_check() {
        assert!(square_at(0, 0).bounded_faces_are_unit_squares());
        // 3x3 ring around a missing centre has one bounded face of length 8.
        let ring = EmbeddedGraph::induced(pts(&[
            (0, 0), (1, 0), (2, 0), (0, 1), (2, 1), (0, 2), (1, 2), (2, 2),
        ]));
        assert!(!ring.bounded_faces_are_unit_squares());
        let tree = EmbeddedGraph::induced(pts(&[(0, 0), (1, 0), (1, 1), (7, 7)]));
        assert!(tree.bounded_faces_are_unit_squares());
    }

    #[test]
    fn json_shape() {
        let g = EmbeddedGraph::induced(pts(&[(1, 0), (0, 0)]));
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"vertices":[[0,0],[1,0]],"edges":[[0,1]]}"#);
        let back: EmbeddedGraph = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
    }
}
