//! Deterministic text and SVG renderings of regions and graphs.

use std::fmt::Write;

use crate::graph::{EmbeddedGraph, Point};
use crate::regions::{Cell, Region};

const SVG_UNIT: i64 = 20;

fn cell_bounds(r: &Region) -> Option<(i64, i64, i64, i64)> {
    let mut cells = r.cells();
    let first = cells.next()?;
    Some(cells.fold((first.i, first.j, first.i, first.j), |(a, b, c, d), x| {
        (a.min(x.i), b.min(x.j), c.max(x.i), d.max(x.j))
    }))
}

/// `#` for a present cell, `.` for an absent one, top row first.
pub fn ascii_region(r: &Region) -> String {
    let Some((i0, j0, i1, j1)) = cell_bounds(r) else {
        return String::new();
    };
    let mut out = String::new();
    for j in (j0..=j1).rev() {
        for i in i0..=i1 {
            out.push(if r.contains(Cell::new(i, j)) { '#' } else { '.' });
        }
        out.push('\n');
    }
    out
}

/// Vertices as `o`, horizontal edges as `-`, vertical edges as `|`, top row
/// first.
pub fn ascii_graph(g: &EmbeddedGraph) -> String {
    let Some((lo, hi)) = g.bounding_box() else {
        return String::new();
    };
    let mut out = String::new();
    for y in (lo.y..=hi.y).rev() {
        let mut row = String::new();
        let mut below = String::new();
        for x in lo.x..=hi.x {
            let p = Point::new(x, y);
            row.push(if g.contains(p) { 'o' } else { ' ' });
            below.push(if g.has_edge(p, Point::new(x, y - 1)) { '|' } else { ' ' });
            if x < hi.x {
                row.push(if g.has_edge(p, Point::new(x + 1, y)) { '-' } else { ' ' });
                below.push(' ');
            }
        }
        out.push_str(row.trim_end());
        out.push('\n');
        if y > lo.y {
            out.push_str(below.trim_end());
            out.push('\n');
        }
    }
    out
}

fn svg_open(out: &mut String, w: i64, h: i64) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
}

/// Unit squares in a `20`-pixel grid, y pointing up.
pub fn svg_region(r: &Region) -> String {
    let mut out = String::new();
    let Some((i0, j0, i1, j1)) = cell_bounds(r) else {
        svg_open(&mut out, 0, 0);
        out.push_str("</svg>\n");
        return out;
    };
    let (w, h) = ((i1 - i0 + 1) * SVG_UNIT, (j1 - j0 + 1) * SVG_UNIT);
    svg_open(&mut out, w + 2, h + 2);
    for c in r.cells() {
        let x = (c.i - i0) * SVG_UNIT + 1;
        let y = (j1 - c.j) * SVG_UNIT + 1;
        let _ = writeln!(
            out,
            r##"<rect x="{x}" y="{y}" width="{SVG_UNIT}" height="{SVG_UNIT}" fill="#d9d9d9" stroke="#000"/>"##
        );
    }
    out.push_str("</svg>\n");
    out
}

/// Vertices as dots on a `20`-pixel lattice joined by their edges.
pub fn svg_graph(g: &EmbeddedGraph) -> String {
    let mut out = String::new();
    let Some((lo, hi)) = g.bounding_box() else {
        svg_open(&mut out, 0, 0);
        out.push_str("</svg>\n");
        return out;
    };
    let pad = SVG_UNIT / 2;
    let place = |p: Point| ((p.x - lo.x) * SVG_UNIT + pad, (hi.y - p.y) * SVG_UNIT + pad);
    svg_open(
        &mut out,
        (hi.x - lo.x) * SVG_UNIT + 2 * pad,
        (hi.y - lo.y) * SVG_UNIT + 2 * pad,
    );
    for (p, q) in g.edge_points() {
        let ((x1, y1), (x2, y2)) = (place(p), place(q));
        let _ = writeln!(out, r##"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#000"/>"##);
    }
    for &p in g.vertices() {
        let (cx, cy) = place(p);
        let _ = writeln!(out, r##"<circle cx="{cx}" cy="{cy}" r="3" fill="#000"/>"##);
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regions::{build_aztec_diamond, build_quartered, QuarterKind};

    #[test]
    fn ascii_of_small_regions() {
        assert_eq!(ascii_region(&build_aztec_diamond(1).unwrap()), "##\n##\n");
        let r3 = build_quartered(3, QuarterKind::R).unwrap();
        assert_eq!(ascii_region(&r3), ".##\n###\n..#\n");
        assert_eq!(ascii_region(&Region::new("empty", [])), "");
    }

    #[test]
    fn ascii_of_graph() {
        let g = EmbeddedGraph::induced([Point::new(0, 0), Point::new(1, 0), Point::new(0, 1)]);
        assert_eq!(ascii_graph(&g), "o\n|\no-o\n");
    }

    #[test]
    fn svg_is_deterministic() {
        let r = build_aztec_diamond(3).unwrap();
        assert_eq!(svg_region(&r), svg_region(&r.clone()));
        assert_eq!(svg_region(&r).matches("<rect").count(), 24);
        let g = crate::graph::dual_graph(&r);
        assert_eq!(svg_graph(&g).matches("<circle").count(), 24);
    }
}
