//! Lattice regions and the structured graph families built from them.
//!
//! A [`Cell`] `(i, j)` is the unit square `[i, i+1] x [j, j+1]`. The Aztec
//! diamond of order `n` is centred on the origin, and the two zigzag cuts used
//! to quarter it are 2-unit staircases through the origin (see
//! [`zigzag_side`]). Point arguments that may be half-integers are passed in
//! doubled coordinates so that all geometry stays in integer arithmetic.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{EmbeddedGraph, Point, Symmetry};
use crate::{Error, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct Cell {
    pub i: i64,
    pub j: i64,
}

impl Cell {
    pub const fn new(i: i64, j: i64) -> Self {
        Cell { i, j }
    }

    /// Centre `(i + 1/2, j + 1/2)` in doubled coordinates; both entries odd.
    pub fn doubled_center(self) -> (i64, i64) {
        (2 * self.i + 1, 2 * self.j + 1)
    }

    fn from_doubled_center(x2: i64, y2: i64) -> Self {
        Cell::new((x2 - 1).div_euclid(2), (y2 - 1).div_euclid(2))
    }

    /// Image under a lattice symmetry acting on cell centres about the origin.
    pub fn transform(self, sym: Symmetry) -> Self {
        let (x2, y2) = self.doubled_center();
        let (x2, y2) = sym.apply(x2, y2);
        Cell::from_doubled_center(x2, y2)
    }
}

impl From<[i64; 2]> for Cell {
    fn from([i, j]: [i64; 2]) -> Self {
        Cell { i, j }
    }
}

impl From<Cell> for [i64; 2] {
    fn from(c: Cell) -> Self {
        [c.i, c.j]
    }
}

/// A named finite set of cells. The set may be empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Region {
    pub name: String,
    cells: BTreeSet<Cell>,
}

impl Region {
    pub fn new(name: impl Into<String>, cells: impl IntoIterator<Item = Cell>) -> Self {
        Region {
            name: name.into(),
            cells: cells.into_iter().collect(),
        }
    }

    /// Cells in lexicographic `(i, j)` order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().copied()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.contains(&c)
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn transform(&self, sym: Symmetry) -> Region {
        Region::new(self.name.clone(), self.cells().map(|c| c.transform(sym)))
    }

    /// Image under the counterclockwise quarter turn about the origin.
    pub fn rotate90(&self) -> Region {
        self.transform(Symmetry::Rot90)
    }

    fn normalized_under(&self, sym: Symmetry) -> Vec<Cell> {
        let image: Vec<Cell> = self.cells().map(|c| c.transform(sym)).collect();
        let mi = image.iter().map(|c| c.i).min().unwrap_or(0);
        let mj = image.iter().map(|c| c.j).min().unwrap_or(0);
        let mut out: Vec<Cell> = image.iter().map(|c| Cell::new(c.i - mi, c.j - mj)).collect();
        out.sort_unstable();
        out
    }
}

/// True iff a lattice symmetry plus a translation maps one cell set exactly
/// onto the other.
pub fn congruent(a: &Region, b: &Region) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let target = b.normalized_under(Symmetry::Identity);
    Symmetry::ALL.iter().any(|&s| a.normalized_under(s) == target)
}

/// Which side of a zigzag cut a point lies on.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Plus,
    Minus,
}

impl Side {
    pub fn sign(self) -> i8 {
        match self {
            Side::Plus => 1,
            Side::Minus => -1,
        }
    }
}

/// Side of the staircase cut through the origin for the point
/// `(twice_x / 2, twice_y / 2)`.
///
/// The staircase has corners `(2k, 1 - 2k)` and `(2k, -1 - 2k)`; a point is on
/// the `Plus` side iff `y > -1 - 2 floor(x / 2)`. Both doubled coordinates
/// must be odd, i.e. the point is a cell centre, which never lies on the cut.
pub fn zigzag_side(twice_x: i64, twice_y: i64) -> Result<Side> {
    if twice_x.rem_euclid(2) == 0 || twice_y.rem_euclid(2) == 0 {
        return Err(Error::NotCellCenter(twice_x, twice_y));
    }
    // floor(x / 2) = floor(twice_x / 4)
    let step = twice_x.div_euclid(4);
    Ok(if twice_y > -2 - 4 * step {
        Side::Plus
    } else {
        Side::Minus
    })
}

/// How the second cut is obtained from the first.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum CutKind {
    /// Second cut is the first rotated a quarter turn; four congruent pieces.
    Pinwheel,
    /// Second cut is the first mirrored in the y-axis; two congruence classes.
    Klein,
}

/// Two superimposed staircase cuts through the centre of an Aztec diamond.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct CutSystem {
    pub kind: CutKind,
}

impl CutSystem {
    pub fn new(kind: CutKind) -> Self {
        CutSystem { kind }
    }

    pub fn first(&self, c: Cell) -> Side {
        let (x, y) = c.doubled_center();
        zigzag_side(x, y).expect("cell centres are off the cut")
    }

    pub fn second(&self, c: Cell) -> Side {
        let (x, y) = c.doubled_center();
        let side = match self.kind {
            CutKind::Pinwheel => zigzag_side(y, -x),
            CutKind::Klein => zigzag_side(-x, y),
        };
        side.expect("cell centres are off the cut")
    }

    pub fn sides(&self, c: Cell) -> (Side, Side) {
        (self.first(c), self.second(c))
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QuarterKind {
    /// Quarter of the pinwheel division.
    R,
    /// Abutting quarter of the Klein division.
    KAbut,
    /// Non-abutting quarter of the Klein division.
    KNonabut,
}

impl QuarterKind {
    pub const ALL: [QuarterKind; 3] = [QuarterKind::R, QuarterKind::KAbut, QuarterKind::KNonabut];

    pub fn label(self) -> &'static str {
        match self {
            QuarterKind::R => "R",
            QuarterKind::KAbut => "K_a",
            QuarterKind::KNonabut => "K_na",
        }
    }
}

impl fmt::Display for QuarterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

fn check_order(n: u32) -> Result<i64> {
    if n == 0 {
        Err(Error::InvalidOrder(0))
    } else {
        Ok(i64::from(n))
    }
}

/// Union of the unit squares whose corners all satisfy `|x| + |y| <= n + 1`.
pub fn build_aztec_diamond(n: u32) -> Result<Region> {
    let n = check_order(n)?;
    let reach = |k: i64| k.abs().max((k + 1).abs());
    let cells = (-n - 1..=n)
        .flat_map(|i| (-n - 1..=n).map(move |j| Cell::new(i, j)))
        .filter(|c| reach(c.i) + reach(c.j) <= n + 1);
    Ok(Region::new(format!("AD({n})"), cells))
}

fn select(n: u32, cuts: CutSystem, want: (Side, Side), name: String) -> Result<Region> {
    let ad = build_aztec_diamond(n)?;
    Ok(Region::new(name, ad.cells().filter(|&c| cuts.sides(c) == want)))
}

/// The chosen representative of each quartered family: the north pinwheel
/// quarter for `R`, the west Klein quarter for `KAbut`, and the north Klein
/// quarter for `KNonabut`.
pub fn build_quartered(n: u32, kind: QuarterKind) -> Result<Region> {
    let name = format!("{}({n})", kind.label());
    match kind {
        QuarterKind::R => select(n, CutSystem::new(CutKind::Pinwheel), (Side::Plus, Side::Plus), name),
        QuarterKind::KAbut => select(n, CutSystem::new(CutKind::Klein), (Side::Minus, Side::Plus), name),
        QuarterKind::KNonabut => select(n, CutSystem::new(CutKind::Klein), (Side::Plus, Side::Plus), name),
    }
}

/// `R(n)` and its three successive quarter-turn images.
pub fn pinwheel_quarters(n: u32) -> Result<[Region; 4]> {
    let north = build_quartered(n, QuarterKind::R)?;
    let west = north.rotate90();
    let south = west.rotate90();
    let east = south.rotate90();
    Ok([north, west, south, east])
}

/// The four Klein quarters in the order north, west, south, east.
pub fn klein_quarters(n: u32) -> Result<[Region; 4]> {
    let cuts = CutSystem::new(CutKind::Klein);
    let pick = |want, label: &str| select(n, cuts, want, format!("K_{label}({n})"));
    Ok([
        pick((Side::Plus, Side::Plus), "north")?,
        pick((Side::Minus, Side::Plus), "west")?,
        pick((Side::Minus, Side::Minus), "south")?,
        pick((Side::Plus, Side::Minus), "east")?,
    ])
}

/// Strictly ascending positive integers: 1-based hole positions along a row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct IndexSet(Vec<u32>);

impl IndexSet {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        if values.first() == Some(&0) {
            return Err(Error::InvalidHoles("positions are 1-based".into()));
        }
        if values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidHoles(format!("{values:?} is not strictly ascending")));
        }
        Ok(IndexSet(values))
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, k: u32) -> bool {
        self.0.binary_search(&k).is_ok()
    }

    /// Checks `|self| == size` and every position lies in `1..=width`.
    pub fn check_fits(&self, size: usize, width: u32) -> Result<()> {
        if self.len() != size {
            return Err(Error::InvalidHoles(format!(
                "expected {size} positions, got {}",
                self.len()
            )));
        }
        match self.0.last() {
            Some(&last) if last > width => Err(Error::InvalidHoles(format!(
                "position {last} exceeds row width {width}"
            ))),
            _ => Ok(()),
        }
    }
}

impl TryFrom<Vec<u32>> for IndexSet {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        IndexSet::new(v)
    }
}

impl From<IndexSet> for Vec<u32> {
    fn from(s: IndexSet) -> Self {
        s.0
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// `{1, 3, ..., 2n-1} ∪ {2n+2, 2n+4, ..., 4n}`.
pub fn set_a(n: u32) -> IndexSet {
    let odd = (1..=n).map(|k| 2 * k - 1);
    let even = (1..=n).map(|k| 2 * n + 2 * k);
    IndexSet(odd.chain(even).collect())
}

/// `{2, 4, ..., 2n} ∪ {2n+1, 2n+3, ..., 4n-1}`.
pub fn set_b(n: u32) -> IndexSet {
    let even = (1..=n).map(|k| 2 * k);
    let odd = (1..=n).map(|k| 2 * n + 2 * k - 1);
    IndexSet(even.chain(odd).collect())
}

/// Vertex of the `m x n` Aztec rectangle for the white board square at
/// 1-based column `c` and row `r` (bottom-left square is black).
///
/// Board diagonals become orthogonal grid directions: the square one step up
/// and right moves to `x + 1`, one step down and right to `y - 1`.
fn rectangle_vertex(n: i64, c: i64, r: i64) -> Point {
    debug_assert_eq!((c + r).rem_euclid(2), 1);
    Point::new((c + r - 1) / 2, (r - c + 2 * n + 1) / 2)
}

fn rectangle_points(m: u32, n: u32, skip_row: impl Fn(i64, i64) -> bool) -> Vec<Point> {
    let (m, n) = (i64::from(m), i64::from(n));
    let mut points = Vec::new();
    for r in 1..=2 * m + 1 {
        // Odd rows hold whites at even columns, even rows at odd columns; the
        // k-th white from the left sits at column 2k (odd r) or 2k-1 (even r).
        let mut k = 0;
        for c in 1..=2 * n + 1 {
            if (c + r) % 2 == 0 {
                continue;
            }
            k += 1;
            if !skip_row(r, k) {
                points.push(rectangle_vertex(n, c, r));
            }
        }
    }
    points
}

fn check_dims(m: u32, n: u32) -> Result<()> {
    check_order(m)?;
    check_order(n)?;
    Ok(())
}

/// The `m x n` Aztec rectangle in rotated grid coordinates.
pub fn build_aztec_rectangle(m: u32, n: u32) -> Result<EmbeddedGraph> {
    check_dims(m, n)?;
    Ok(EmbeddedGraph::induced(rectangle_points(m, n, |_, _| false)))
}

/// Aztec rectangle with every bottom-row vertex removed except those at the
/// 1-based positions in `keep`.
pub fn build_holey_ar(m: u32, n: u32, keep: &IndexSet) -> Result<EmbeddedGraph> {
    check_dims(m, n)?;
    keep.check_fits(m as usize, n)?;
    let points = rectangle_points(m, n, |r, k| r == 1 && !keep.contains(k as u32));
    Ok(EmbeddedGraph::induced(points))
}

/// Aztec rectangle with the whole bottom row removed and then the vertices at
/// positions `remove` deleted from the new bottom row of `n + 1` vertices.
pub fn build_holey_ar_bar(m: u32, n: u32, remove: &IndexSet) -> Result<EmbeddedGraph> {
    check_dims(m, n)?;
    remove.check_fits(m as usize, n + 1)?;
    let points = rectangle_points(m, n, |r, k| r == 1 || (r == 2 && remove.contains(k as u32)));
    Ok(EmbeddedGraph::induced(points))
}
