//! Closed-form product formulas, evaluated exactly.
//!
//! Every product is accumulated as a [`BigRat`] and only converted to a
//! [`BigNat`] at the end; a non-integral result is reported as an error,
//! never rounded.

use num_bigint::{BigInt, Sign};
use num_traits::{One, Zero};

use crate::engines::{count, EngineChoice};
use crate::graph::dual_graph;
use crate::regions::{build_quartered, set_a, set_b, IndexSet, QuarterKind};
use crate::{BigNat, BigRat, Error, Result};

fn pow2(e: u64) -> BigNat {
    BigNat::one() << e
}

fn rat(num: i64, den: i64) -> BigRat {
    BigRat::new(BigInt::from(num), BigInt::from(den))
}

/// Converts an exact rational to a natural number, failing unless it is a
/// non-negative integer.
pub fn to_nat(r: &BigRat, what: &str) -> Result<BigNat> {
    if !r.is_integer() || r.numer().sign() == Sign::Minus {
        return Err(Error::NonIntegral(format!("{what} = {r}")));
    }
    Ok(r.to_integer().magnitude().clone())
}

/// `prod (2i + 2j - shift) / (i + j - 1)` over `1 <= i < j <= n`, or over
/// `1 <= i <= j <= n` when `diagonal` is set.
fn pair_product(n: u64, shift: i64, diagonal: bool) -> BigRat {
    let mut acc = BigRat::one();
    for i in 1..=n as i64 {
        let start = if diagonal { i } else { i + 1 };
        for j in start..=n as i64 {
            acc *= rat(2 * i + 2 * j - shift, i + j - 1);
        }
    }
    acc
}

/// Which closed form of the quartered-diamond theorem applies, and at which
/// parameter.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
enum QuarterFormula {
    Zero,
    /// `2^{n(3n-1)/2} prod_{i<j} (2i+2j-1)/(i+j-1)`, divided by `2^n` when
    /// `halved`.
    Pinwheel { n: u64, halved: bool },
    /// `2^{n(3n-1)/2} prod_{i<j} (2i+2j-3)/(i+j-1)`.
    StrictShifted { n: u64 },
    /// `2^{n(3n-3)/2} prod_{i<=j} (2i+2j-1)/(i+j-1)`.
    DiagonalLow { n: u64 },
    /// `2^{n(3n-1)/2} prod_{i<=j} (2i+2j-1)/(i+j-1)`.
    DiagonalHigh { n: u64 },
    /// `2^{n(3n-3)/2} prod_{i<j} (2i+2j-3)/(i+j-1)`.
    StrictShiftedLow { n: u64 },
}

fn dispatch(kind: QuarterKind, order: u64) -> QuarterFormula {
    use QuarterFormula::*;
    let (q, r) = (order / 4, order % 4);
    match (kind, r) {
        (QuarterKind::R, 1 | 2) => Zero,
        (QuarterKind::R, 0) => Pinwheel { n: q, halved: false },
        (QuarterKind::R, _) => Pinwheel { n: q + 1, halved: true },
        // K_a(4n-2) = K_a(4n)
        (QuarterKind::KAbut, 0) => StrictShifted { n: q },
        (QuarterKind::KAbut, 2) => StrictShifted { n: q + 1 },
        // K_a(4n-1) = K_a(4n+1)
        (QuarterKind::KAbut, 3) => DiagonalLow { n: q + 1 },
        (QuarterKind::KAbut, _) => DiagonalLow { n: q },
        // K_na(4n) = K_na(4n+2)
        (QuarterKind::KNonabut, 0 | 2) => DiagonalHigh { n: q },
        // K_na(4n-3) = K_na(4n-1)
        (QuarterKind::KNonabut, _) => StrictShiftedLow { n: q + 1 },
    }
}

fn evaluate(f: QuarterFormula) -> BigRat {
    use QuarterFormula::*;
    let high = |n: u64| BigRat::from_integer(BigInt::from(pow2((3 * n * n - n) / 2)));
    let low = |n: u64| BigRat::from_integer(BigInt::from(pow2((3 * n * n - 3 * n) / 2)));
    match f {
        Zero => BigRat::zero(),
        Pinwheel { n, halved } => {
            let full = high(n) * pair_product(n, 1, false);
            if halved {
                full / BigRat::from_integer(BigInt::from(pow2(n)))
            } else {
                full
            }
        }
        StrictShifted { n } => high(n) * pair_product(n, 3, false),
        DiagonalLow { n } => low(n) * pair_product(n, 1, true),
        DiagonalHigh { n } => high(n) * pair_product(n, 1, true),
        StrictShiftedLow { n } => low(n) * pair_product(n, 3, false),
    }
}

/// Number of domino tilings of the quartered Aztec diamond of the given kind
/// and order, from its product formula.
pub fn theorem1_value(kind: QuarterKind, order: u32) -> Result<BigNat> {
    if order == 0 {
        return Err(Error::InvalidOrder(0));
    }
    let value = evaluate(dispatch(kind, u64::from(order)));
    to_nat(&value, &format!("T({kind}({order}))"))
}

/// Perfect matchings of the Aztec rectangle keeping only the bottom-row
/// vertices at `a`: `2^{m(m+1)/2} prod_{i<j} (a_j - a_i)/(j - i)`.
pub fn lemma4_value(m: u32, n: u32, a: &IndexSet) -> Result<BigNat> {
    a.check_fits(m as usize, n)?;
    let m = u64::from(m);
    let value = BigRat::from_integer(BigInt::from(pow2(m * (m + 1) / 2))) * vandermonde_ratio(a);
    to_nat(&value, "kept-holes rectangle formula")
}

/// Perfect matchings of the Aztec rectangle with its bottom row removed and
/// the next row's vertices at `a` deleted: `2^{m(m-1)/2} prod_{i<j} (a_j -
/// a_i)/(j - i)`.
pub fn lemma5_value(m: u32, n: u32, a: &IndexSet) -> Result<BigNat> {
    a.check_fits(m as usize, n + 1)?;
    let m = u64::from(m);
    let value = BigRat::from_integer(BigInt::from(pow2(m * (m - 1) / 2))) * vandermonde_ratio(a);
    to_nat(&value, "removed-holes rectangle formula")
}

fn vandermonde_ratio(a: &IndexSet) -> BigRat {
    let v = a.values();
    let mut acc = BigRat::one();
    for j in 0..v.len() {
        for i in 0..j {
            acc *= rat(i64::from(v[j]) - i64::from(v[i]), (j - i) as i64);
        }
    }
    acc
}

/// Product of all pairwise differences `a_j - a_i`, `i < j`.
pub fn delta(s: &IndexSet) -> BigNat {
    let v = s.values();
    let mut acc = BigNat::one();
    for j in 0..v.len() {
        for i in 0..j {
            acc *= BigNat::from(v[j] - v[i]);
        }
    }
    acc
}

/// `delta(A_n) / delta(B_n)`.
pub fn lemma6_lhs(n: u32) -> BigRat {
    let a = BigInt::from(delta(&set_a(n)));
    let b = BigInt::from(delta(&set_b(n)));
    BigRat::new(a, b)
}

/// `prod_{1 <= i, j <= n} (2n + 1 + 2j - 2i) / (2n - 1 + 2j - 2i)`.
pub fn lemma6_rhs(n: u32) -> BigRat {
    let n = i64::from(n);
    let mut acc = BigRat::one();
    for i in 1..=n {
        for j in 1..=n {
            acc *= rat(2 * n + 1 + 2 * j - 2 * i, 2 * n - 1 + 2 * j - 2 * i);
        }
    }
    acc
}

pub fn lemma6_check(n: u32) -> bool {
    lemma6_lhs(n) == lemma6_rhs(n)
}

/// Tilings of the Aztec diamond of order `n`: `2^{n(n+1)/2}`.
pub fn aztec_diamond_value(n: u32) -> Result<BigNat> {
    if n == 0 {
        return Err(Error::InvalidOrder(0));
    }
    let n = u64::from(n);
    Ok(pow2(n * (n + 1) / 2))
}

/// The four doubling recurrences between quartered families: for each,
/// `T(larger) = 2^n T(smaller)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Recurrence {
    /// `T(R(4n)) = 2^n T(R(4n-1))`
    PinwheelStep,
    /// `T(K_na(4n+1)) = 2^n T(K_na(4n))`
    NonabutStep,
    /// `T(K_na(4n)) = 2^n T(K_a(4n-1))`
    NonabutFromAbut,
    /// `T(K_a(4n-2)) = 2^n T(K_na(4n-3))`
    AbutFromNonabut,
}

impl Recurrence {
    pub const ALL: [Recurrence; 4] = [
        Recurrence::PinwheelStep,
        Recurrence::NonabutStep,
        Recurrence::NonabutFromAbut,
        Recurrence::AbutFromNonabut,
    ];

    /// `(larger, smaller)` regions as `(kind, order)`.
    pub fn sides(self, n: u32) -> ((QuarterKind, u32), (QuarterKind, u32)) {
        use QuarterKind::*;
        match self {
            Recurrence::PinwheelStep => ((R, 4 * n), (R, 4 * n - 1)),
            Recurrence::NonabutStep => ((KNonabut, 4 * n + 1), (KNonabut, 4 * n)),
            Recurrence::NonabutFromAbut => ((KNonabut, 4 * n), (KAbut, 4 * n - 1)),
            Recurrence::AbutFromNonabut => ((KAbut, 4 * n - 2), (KNonabut, 4 * n - 3)),
        }
    }
}

/// Largest order [`lemma1_sides`] will count.
pub const RECURRENCE_MAX_ORDER: u32 = 64;

/// Counts both sides of a recurrence with the matching engines. Returns
/// `(T(larger), 2^n T(smaller))`.
pub fn lemma1_sides(which: Recurrence, n: u32) -> Result<(BigNat, BigNat)> {
    if n == 0 {
        return Err(Error::InvalidOrder(0));
    }
    let ((big_kind, big), (small_kind, small)) = which.sides(n);
    if big > RECURRENCE_MAX_ORDER {
        return Err(Error::TooLarge {
            engine: "recurrence",
            detail: format!("order {big}, limit {RECURRENCE_MAX_ORDER}"),
        });
    }
    let tilings = |kind, order| -> Result<BigNat> {
        let g = dual_graph(&build_quartered(order, kind)?);
        count(&g, EngineChoice::Auto, false)
    };
    let lhs = tilings(big_kind, big)?;
    let rhs = pow2(u64::from(n)) * tilings(small_kind, small)?;
    Ok((lhs, rhs))
}

pub fn lemma1_check(which: Recurrence, n: u32) -> Result<bool> {
    let (lhs, rhs) = lemma1_sides(which, n)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use QuarterKind::*;

    fn nat(v: u64) -> BigNat {
        BigNat::from(v)
    }

    fn set(v: &[u32]) -> IndexSet {
        IndexSet::new(v.to_vec()).unwrap()
    }

    #[test]
    fn theorem_examples() {
        assert_eq!(theorem1_value(R, 5).unwrap(), nat(0));
        assert_eq!(theorem1_value(R, 8).unwrap(), nat(80));
        assert_eq!(theorem1_value(KNonabut, 4).unwrap(), nat(6));
        assert_eq!(theorem1_value(KAbut, 2).unwrap(), nat(2));
        assert_eq!(theorem1_value(KAbut, 1).unwrap(), nat(1));
        assert_eq!(theorem1_value(KNonabut, 1).unwrap(), nat(1));
        assert!(theorem1_value(R, 0).is_err());
    }

    /// Values obtained by exhaustive matching enumeration on the regions
    /// themselves (orders 1 through 10).
    #[test]
    fn theorem_matches_enumerated_table() {
        let table: [(u32, [u64; 3]); 10] = [
            (1, [0, 1, 1]),
            (2, [0, 2, 1]),
            (3, [1, 3, 1]),
            (4, [2, 2, 6]),
            (5, [0, 3, 12]),
            (6, [0, 48, 6]),
            (7, [20, 140, 12]),
            (8, [80, 48, 560]),
            (9, [0, 140, 2240]),
            (10, [0, 17920, 560]),
        ];
        for (order, values) in table {
            for (kind, v) in QuarterKind::ALL.into_iter().zip(values) {
                assert_eq!(theorem1_value(kind, order).unwrap(), nat(v), "{kind}({order})");
            }
        }
    }

    #[test]
    fn equalities_within_classes() {
        for n in 1..=25u32 {
            assert_eq!(theorem1_value(KAbut, 4 * n - 2), theorem1_value(KAbut, 4 * n));
            assert_eq!(theorem1_value(KAbut, 4 * n - 1), theorem1_value(KAbut, 4 * n + 1));
            assert_eq!(theorem1_value(KNonabut, 4 * n), theorem1_value(KNonabut, 4 * n + 2));
            assert_eq!(theorem1_value(KNonabut, 4 * n - 3), theorem1_value(KNonabut, 4 * n - 1));
            assert_eq!(
                theorem1_value(R, 4 * n).unwrap(),
                theorem1_value(R, 4 * n - 1).unwrap() << n as usize
            );
        }
    }

    #[test]
    fn always_integral() {
        for order in 1..=100 {
            for kind in QuarterKind::ALL {
                theorem1_value(kind, order).unwrap();
            }
        }
    }

    #[test]
    fn rectangle_formulas() {
        assert_eq!(lemma4_value(3, 5, &set(&[1, 3, 5])).unwrap(), nat(512));
        assert_eq!(lemma4_value(2, 4, &set(&[2, 3])).unwrap(), nat(8));
        for k in 1..=7 {
            assert_eq!(lemma4_value(1, 7, &set(&[k])).unwrap(), nat(2));
        }
        assert_eq!(lemma5_value(3, 5, &set(&[3, 4, 6])).unwrap(), nat(24));
        assert_eq!(lemma5_value(2, 3, &set(&[1, 4])).unwrap(), nat(6));
        assert_eq!(lemma5_value(1, 1, &set(&[2])).unwrap(), nat(1));
        assert!(lemma4_value(2, 3, &set(&[1, 4])).is_err());
        assert!(lemma5_value(2, 3, &set(&[1])).is_err());
    }

    #[test]
    fn delta_values() {
        assert_eq!(delta(&set(&[1, 4])), nat(3));
        assert_eq!(delta(&set(&[2, 3])), nat(1));
        assert_eq!(delta(&set(&[1, 3, 6, 8])), nat(2100));
        assert_eq!(delta(&set(&[2, 4, 5, 7])), nat(180));
    }

    #[test]
    fn ratio_identity() {
        assert_eq!(lemma6_lhs(1), rat(3, 1));
        assert_eq!(lemma6_rhs(1), rat(3, 1));
        assert_eq!(lemma6_lhs(2), rat(35, 3));
        assert_eq!(lemma6_rhs(2), rat(35, 3));
        for n in 1..=50 {
            assert!(lemma6_check(n), "n = {n}");
        }
    }

    #[test]
    fn aztec_values() {
        assert_eq!(aztec_diamond_value(1).unwrap(), nat(2));
        assert_eq!(aztec_diamond_value(2).unwrap(), nat(8));
        assert_eq!(aztec_diamond_value(4).unwrap(), nat(1024));
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(lemma1_sides(Recurrence::PinwheelStep, 1).unwrap(), (nat(2), nat(2)));
        assert_eq!(lemma1_sides(Recurrence::NonabutFromAbut, 1).unwrap(), (nat(6), nat(6)));
        assert_eq!(lemma1_sides(Recurrence::AbutFromNonabut, 1).unwrap(), (nat(2), nat(2)));
        for which in Recurrence::ALL {
            for n in 1..=3 {
                assert!(lemma1_check(which, n).unwrap(), "{which:?} n = {n}");
            }
        }
        assert!(lemma1_sides(Recurrence::PinwheelStep, 0).is_err());
        assert!(matches!(lemma1_sides(Recurrence::NonabutStep, 20), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn non_integral_is_reported() {
        assert!(matches!(to_nat(&rat(7, 2), "x"), Err(Error::NonIntegral(_))));
        assert_eq!(to_nat(&rat(8, 2), "x").unwrap(), nat(4));
    }
}
