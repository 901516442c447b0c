use num_bigint::{BigInt, Sign};
use num_traits::{One, Zero};

use super::gaussian::{bareiss_determinant, GaussianInt};
use crate::graph::EmbeddedGraph;
use crate::{BigNat, Error, Result};

/// Counts perfect matchings as the modulus of a Kasteleyn determinant.
///
/// Rows are even-parity vertices, columns odd-parity ones; horizontal edges
/// carry weight 1 and vertical edges weight `i`. Around every unit-square
/// face this weighting satisfies the Kasteleyn condition, so it is valid
/// whenever all bounded faces are unit squares, which is checked first.
pub fn count_fkt(g: &EmbeddedGraph) -> Result<BigNat> {
    if !g.bounded_faces_are_unit_squares() {
        return Err(Error::UnsupportedEmbedding);
    }
    let verts = g.vertices();
    let mut row_of = vec![usize::MAX; verts.len()];
    let mut col_of = vec![usize::MAX; verts.len()];
    let (mut rows, mut cols) = (0, 0);
    for (k, p) in verts.iter().enumerate() {
        if p.parity() == 0 {
            row_of[k] = rows;
            rows += 1;
        } else {
            col_of[k] = cols;
            cols += 1;
        }
    }
    if rows != cols {
        return Ok(BigNat::zero());
    }
    if rows == 0 {
        return Ok(BigNat::one());
    }
    let mut m = vec![vec![GaussianInt::zero(); cols]; rows];
    for (u, v) in g.edges() {
        let (even, odd) = if verts[u].parity() == 0 { (u, v) } else { (v, u) };
        let weight = if verts[u].y == verts[v].y {
            GaussianInt::one()
        } else {
            GaussianInt::i()
        };
        m[row_of[even]][col_of[odd]] = weight;
    }
    let det = bareiss_determinant(m);
    let norm = det.norm();
    let modulus = norm.sqrt();
    assert_eq!(&modulus * &modulus, norm, "Kasteleyn determinant has non-square norm");
    Ok(to_nat(modulus))
}

fn to_nat(v: BigInt) -> BigNat {
    match v.into_parts() {
        (Sign::Minus, _) => unreachable!("square root is non-negative"),
        (_, mag) => mag,
    }
}
