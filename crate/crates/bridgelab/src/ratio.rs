//! Exact nonnegative rationals with decimal expansion at the output
//! boundary, plus rational interval bounds for the irrational targets.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Fractional digits printed by default; at least 15 significant digits for
/// every ratio this crate reports.
pub const DECIMAL_DIGITS: usize = 18;

/// An exact ratio of big integers. No floating point anywhere; decimals are
/// produced by long division, truncated.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Ratio(BigRational);

impl Ratio {
    pub fn new(num: BigUint, den: BigUint) -> Ratio {
        assert!(!den.is_zero(), "zero denominator");
        Ratio(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(r: BigRational) -> Ratio {
        Ratio(r)
    }

    pub fn zero() -> Ratio {
        Ratio(BigRational::zero())
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn rational(&self) -> &BigRational {
        &self.0
    }

    /// `int.frac` with exactly `frac_digits` fractional digits, truncated
    /// toward zero. Nonnegative values only.
    pub fn decimal(&self, frac_digits: usize) -> String {
        assert!(
            !self.0.is_negative(),
            "decimal() expects a nonnegative ratio"
        );
        let num = self.0.numer().magnitude().clone();
        let den = self.0.denom().magnitude();
        let int = &num / den;
        let mut rem = &num % den;
        let mut s = format!("{int}.");
        let ten = BigUint::from(10u32);
        for _ in 0..frac_digits {
            rem *= &ten;
            let d = &rem / den;
            rem %= den;
            s.push_str(&d.to_string());
        }
        s
    }

    pub fn decimal_default(&self) -> String {
        self.decimal(DECIMAL_DIGITS)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

/// Exact rational for a plain decimal literal like "0.5930".
pub fn rational_from_decimal(s: &str) -> BigRational {
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    let digits: String = format!("{int}{frac}");
    let num: BigInt = digits.parse().expect("decimal literal");
    let den = BigInt::from(10u32).pow(frac.len() as u32);
    BigRational::new(num, den)
}

/// Rational interval (lo, hi) with lo < e^{-1} < hi, from the alternating
/// series sum (-1)^k / k!; consecutive partial sums bracket the limit.
pub fn inv_e_bounds() -> (BigRational, BigRational) {
    exp_neg_bounds(1, 41)
}

/// Rational interval around e^{-1/2} via sum (-1)^k / (2^k k!).
pub fn e_neg_half_bounds() -> (BigRational, BigRational) {
    exp_neg_bounds(2, 41)
}

/// Partial sums of e^{-1/q} = sum (-1)^k / (q^k k!); with `terms` odd the
/// last included index is odd, giving the lower endpoint.
fn exp_neg_bounds(q: u32, terms: usize) -> (BigRational, BigRational) {
    debug_assert!(terms % 2 == 1);
    let mut sum = BigRational::zero();
    let mut prev = BigRational::zero();
    let mut denom = BigInt::one(); // q^k k!
    for k in 0..=terms {
        if k > 0 {
            denom *= BigInt::from(q) * BigInt::from(k as u32);
        }
        prev = sum.clone();
        let term = BigRational::new(BigInt::one(), denom.clone());
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    // `terms` odd: final sum is a lower bound, previous an upper bound
    (sum, prev)
}

/// Interval for |x - c| given c in [c_lo, c_hi].
pub fn abs_diff_interval(
    x: &BigRational,
    c_lo: &BigRational,
    c_hi: &BigRational,
) -> (BigRational, BigRational) {
    let zero = BigRational::zero();
    let below = c_lo - x; // positive when x < c_lo
    let above = x - c_hi; // positive when x > c_hi
    let lo = below.clone().max(above.clone()).max(zero);
    let hi = (x - c_lo).abs().max((c_hi - x).abs());
    (lo, hi)
}
