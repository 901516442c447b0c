use std::collections::hash_map::Entry;

use num_traits::One;
use rustc_hash::FxHashMap;

use crate::graph::{EmbeddedGraph, Point};
use crate::{BigNat, Error, Result};

/// Largest profile (cross-section of the sweep) the engine accepts.
pub const PROFILE_MAX_WIDTH: usize = 62;

/// Cross-section of the sweep: the smaller bounding-box side.
pub(crate) fn sweep_width(g: &EmbeddedGraph) -> usize {
    match g.bounding_box() {
        None => 0,
        Some((lo, hi)) => {
            let w = (hi.x - lo.x + 1) as usize;
            let h = (hi.y - lo.y + 1) as usize;
            w.min(h)
        }
    }
}

/// Grid layout of the graph with the sweep running along the first axis.
struct Layout {
    len: usize,
    width: usize,
    vertex: Vec<bool>,
    forward: Vec<bool>,
    across: Vec<bool>,
}

impl Layout {
    fn new(g: &EmbeddedGraph) -> Layout {
        let (lo, hi) = g.bounding_box().expect("nonempty graph");
        let w = (hi.x - lo.x + 1) as usize;
        let h = (hi.y - lo.y + 1) as usize;
        // Sweep along x unless the y extent is strictly smaller.
        let along_x = h <= w;
        let (len, width) = if along_x { (w, h) } else { (h, w) };
        let to_point = |s: usize, t: usize| {
            let (s, t) = (s as i64, t as i64);
            if along_x {
                Point::new(lo.x + s, lo.y + t)
            } else {
                Point::new(lo.x + t, lo.y + s)
            }
        };
        let mut layout = Layout {
            len,
            width,
            vertex: vec![false; len * width],
            forward: vec![false; len * width],
            across: vec![false; len * width],
        };
        for s in 0..len {
            for t in 0..width {
                let k = s * width + t;
                let p = to_point(s, t);
                layout.vertex[k] = g.contains(p);
                layout.forward[k] = s + 1 < len && g.has_edge(p, to_point(s + 1, t));
                layout.across[k] = t + 1 < width && g.has_edge(p, to_point(s, t + 1));
            }
        }
        layout
    }
}

/// Path weights of the DP. `u128` reports overflow so the caller can retry
/// with arbitrary precision.
trait Weight: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn accumulate(&mut self, w: &Self) -> bool;
}

impl Weight for u128 {
    fn zero() -> Self {
        0
    }

    fn one() -> Self {
        1
    }

    fn accumulate(&mut self, w: &Self) -> bool {
        match self.checked_add(*w) {
            Some(v) => {
                *self = v;
                true
            }
            None => false,
        }
    }
}

impl Weight for BigNat {
    fn zero() -> Self {
        BigNat::default()
    }

    fn one() -> Self {
        One::one()
    }

    fn accumulate(&mut self, w: &Self) -> bool {
        *self += w;
        true
    }
}

/// Counts perfect matchings by broken-profile dynamic programming.
///
/// Positions are visited column by column. Bit `t` of the state says whether
/// the position in row `t` of the current frontier is already covered: rows
/// before the cursor refer to the next column, rows from the cursor on to
/// the current one. A vertex is either already covered, matched forward to
/// the next column, or matched across to the next row of its own column.
pub fn count_profile_dp(g: &EmbeddedGraph) -> Result<BigNat> {
    if g.is_empty() {
        return Ok(<BigNat as One>::one());
    }
    let width = sweep_width(g);
    if width > PROFILE_MAX_WIDTH {
        return Err(Error::TooLarge {
            engine: "profile_dp",
            detail: format!("profile width {width}, limit {PROFILE_MAX_WIDTH}"),
        });
    }
    let layout = Layout::new(g);
    match sweep::<u128>(&layout) {
        Some(n) => Ok(BigNat::from(n)),
        None => Ok(sweep::<BigNat>(&layout).expect("unbounded weights")),
    }
}

/// Runs the sweep, or returns `None` if a weight overflows.
fn sweep<W: Weight>(layout: &Layout) -> Option<W> {
    let mut states: FxHashMap<u64, W> = FxHashMap::default();
    states.insert(0, W::one());
    let mut next: FxHashMap<u64, W> = FxHashMap::default();
    for s in 0..layout.len {
        for t in 0..layout.width {
            let k = s * layout.width + t;
            let bit = 1u64 << t;
            next.clear();
            let mut ok = true;
            let mut add = |mask: u64, w: &W| match next.entry(mask) {
                Entry::Occupied(mut e) => ok &= e.get_mut().accumulate(w),
                Entry::Vacant(e) => {
                    e.insert(w.clone());
                }
            };
            for (&mask, ways) in &states {
                if mask & bit != 0 {
                    add(mask & !bit, ways);
                    continue;
                }
                if !layout.vertex[k] {
                    add(mask, ways);
                    continue;
                }
                if layout.forward[k] {
                    add(mask | bit, ways);
                }
                if layout.across[k] && mask & (bit << 1) == 0 {
                    add(mask | (bit << 1), ways);
                }
            }
            if !ok {
                return None;
            }
            std::mem::swap(&mut states, &mut next);
        }
    }
    Some(states.remove(&0).unwrap_or_else(W::zero))
}
