use std::ops::{Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

/// Exact Gaussian integer `re + im * i`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GaussianInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussianInt {
            re: re.into(),
            im: im.into(),
        }
    }

    pub fn zero() -> Self {
        GaussianInt::new(0, 0)
    }

    pub fn one() -> Self {
        GaussianInt::new(1, 0)
    }

    pub fn i() -> Self {
        GaussianInt::new(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianInt::new(self.re.clone(), -&self.im)
    }

    /// `re^2 + im^2`.
    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Quotient when `divisor` divides `self` exactly; `None` otherwise.
    pub fn div_exact(&self, divisor: &GaussianInt) -> Option<GaussianInt> {
        let n = divisor.norm();
        if n.is_zero() {
            return None;
        }
        let scaled = self * &divisor.conj();
        let (re, r1) = scaled.re.div_rem(&n);
        let (im, r2) = scaled.im.div_rem(&n);
        (r1.is_zero() && r2.is_zero()).then_some(GaussianInt { re, im })
    }
}

impl Mul for &GaussianInt {
    type Output = GaussianInt;

    fn mul(self, o: &GaussianInt) -> GaussianInt {
        GaussianInt {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Sub for GaussianInt {
    type Output = GaussianInt;

    fn sub(self, o: GaussianInt) -> GaussianInt {
        GaussianInt {
            re: self.re - o.re,
            im: self.im - o.im,
        }
    }
}

impl Neg for GaussianInt {
    type Output = GaussianInt;

    fn neg(self) -> GaussianInt {
        GaussianInt {
            re: -self.re,
            im: -self.im,
        }
    }
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
/// Every intermediate division is exact in the Gaussian integers.
pub(crate) fn bareiss_determinant(mut m: Vec<Vec<GaussianInt>>) -> GaussianInt {
    let n = m.len();
    if n == 0 {
        return GaussianInt::one();
    }
    let mut negate = false;
    let mut prev = GaussianInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return GaussianInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let cross = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = cross
                    .div_exact(&prev)
                    .expect("Bareiss quotients are exact");
            }
            m[i][k] = GaussianInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussianInt {
        GaussianInt::new(re, im)
    }

    /// Leibniz expansion, used only to check elimination on tiny matrices.
    fn leibniz(m: &[Vec<GaussianInt>]) -> GaussianInt {
        let n = m.len();
        if n == 0 {
            return GaussianInt::one();
        }
        let mut total = GaussianInt::zero();
        for col in 0..n {
            let minor: Vec<Vec<GaussianInt>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != col)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let term = &m[0][col] * &leibniz(&minor);
            total = if col % 2 == 0 { total - (-term) } else { total - term };
        }
        total
    }

    #[test]
    fn exact_division() {
        assert_eq!(g(5, 0).div_exact(&g(2, 1)), Some(g(2, -1)));
        assert_eq!(g(3, 0).div_exact(&g(2, 0)), None);
        assert_eq!(g(1, 1).div_exact(&g(0, 0)), None);
    }

    #[test]
    fn two_by_two() {
        let m = vec![vec![g(1, 0), g(0, 1)], vec![g(0, 1), g(1, 0)]];
        assert_eq!(bareiss_determinant(m), g(2, 0));
    }

    #[test]
    fn agrees_with_expansion() {
        let mut seed = 7u64;
        let mut next = || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((seed >> 33) % 7) as i64 - 3
        };
        for n in 1..=5 {
            for _ in 0..20 {
                let m: Vec<Vec<GaussianInt>> =
                    (0..n).map(|_| (0..n).map(|_| g(next(), next())).collect()).collect();
                assert_eq!(bareiss_determinant(m.clone()), leibniz(&m));
            }
        }
        // Leading zero forces a pivot swap.
        let m = vec![vec![g(0, 0), g(1, 0)], vec![g(1, 0), g(0, 0)]];
        assert_eq!(bareiss_determinant(m), g(-1, 0));
    }
}
