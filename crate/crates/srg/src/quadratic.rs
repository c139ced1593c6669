//! Exact arithmetic on numbers of the form `(a + b*sqrt(d)) / 2`.
//!
//! Values are kept in a canonical form: the largest square factor of the
//! radicand is folded into `b`, and rational values always have `b = 0`,
//! `d = 0`. Structural equality of canonical forms is numeric equality.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exact value `(a + b*sqrt(d)) / 2` with integer `a`, `b` and a
/// nonnegative integer radicand `d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticNumber {
    a: BigInt,
    b: BigInt,
    d: BigInt,
}

impl QuadraticNumber {
    /// Builds `(a + b*sqrt(d)) / 2` and canonicalizes.
    ///
    /// Panics if `d` is negative.
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, d: impl Into<BigInt>) -> Self {
        let (a, b, d) = (a.into(), b.into(), d.into());
        assert!(!d.is_negative(), "radicand must be nonnegative, got {d}");
        if b.is_zero() || d.is_zero() {
            return Self {
                a,
                b: BigInt::zero(),
                d: BigInt::zero(),
            };
        }
        let (root, square_free) = extract_square_factor(&d);
        if square_free == BigInt::from(1) {
            // sqrt(d) is the integer `root`; the value is rational
            return Self {
                a: a + b * root,
                b: BigInt::zero(),
                d: BigInt::zero(),
            };
        }
        Self {
            a,
            b: b * root,
            d: square_free,
        }
    }

    /// The integer `v` as `(2v + 0*sqrt(0)) / 2`.
    pub fn from_integer(v: impl Into<BigInt>) -> Self {
        Self {
            a: v.into() * 2,
            b: BigInt::zero(),
            d: BigInt::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    /// Canonical (square-free) radicand; zero for rational values.
    pub fn radicand(&self) -> &BigInt {
        &self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// True iff the value is a rational integer (`b = 0` and `a` even).
    pub fn is_integer(&self) -> bool {
        self.b.is_zero() && self.a.is_even()
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        if self.is_integer() {
            Some(&self.a / 2)
        } else {
            None
        }
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        let d = self.d.to_f64().unwrap_or(f64::NAN);
        (a + b * d.sqrt()) / 2.0
    }

    /// Exact sign of the real value: `-1`, `0`, or `1`.
    pub fn signum(&self) -> i32 {
        let sa = sign(&self.a);
        let sb = sign(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        // a and b*sqrt(d) pull in opposite directions; compare a^2 vs b^2*d.
        let a2 = &self.a * &self.a;
        let b2d = &self.b * &self.b * &self.d;
        match a2.cmp(&b2d) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0, // unreachable for square-free d > 1
        }
    }

    /// `self * rhs` for an integer scalar.
    pub fn scale(&self, s: &BigInt) -> Self {
        normalized(&self.a * s, &self.b * s, self.d.clone())
    }

    /// `self^exp` by repeated squaring.
    ///
    /// Panics if an intermediate product leaves the half-integer lattice
    /// (see [`Mul`]); powers of canonical eigenvalues never do.
    pub fn pow(&self, exp: usize) -> Self {
        let mut result = Self::from_integer(1);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = mul(&result, &base);
            }
            e >>= 1;
            if e > 0 {
                base = mul(&base, &base);
            }
        }
        result
    }
}

fn sign(v: &BigInt) -> i32 {
    match v.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

/// Splits `d >= 0` as `root^2 * square_free` with `square_free` square-free.
fn extract_square_factor(d: &BigInt) -> (BigInt, BigInt) {
    debug_assert!(!d.is_negative());
    // Fast path: perfect squares are the common case for integer eigenvalues.
    let isqrt = d.sqrt();
    if &isqrt * &isqrt == *d {
        return (isqrt, BigInt::from(1));
    }
    let mut rest = d.clone();
    let mut root = BigInt::from(1);
    let mut f = BigInt::from(2);
    while &f * &f <= rest {
        let f2 = &f * &f;
        loop {
            let (q, r) = rest.div_rem(&f2);
            if !r.is_zero() {
                break;
            }
            rest = q;
            root *= &f;
        }
        f += 1;
    }
    (root, rest)
}

/// Keeps the `b = 0 => d = 0` canonical invariant after coefficient arithmetic.
fn normalized(a: BigInt, b: BigInt, d: BigInt) -> QuadraticNumber {
    if b.is_zero() {
        QuadraticNumber {
            a,
            b,
            d: BigInt::zero(),
        }
    } else {
        QuadraticNumber { a, b, d }
    }
}

/// Common radicand for a binary operation; panics when both operands are
/// irrational over different square-free radicands.
fn joint_radicand(lhs: &QuadraticNumber, rhs: &QuadraticNumber) -> BigInt {
    if lhs.b.is_zero() {
        rhs.d.clone()
    } else if rhs.b.is_zero() || lhs.d == rhs.d {
        lhs.d.clone()
    } else {
        panic!(
            "incompatible radicands sqrt({}) and sqrt({})",
            lhs.d, rhs.d
        );
    }
}

fn add(lhs: &QuadraticNumber, rhs: &QuadraticNumber) -> QuadraticNumber {
    let d = joint_radicand(lhs, rhs);
    normalized(&lhs.a + &rhs.a, &lhs.b + &rhs.b, d)
}

fn mul(lhs: &QuadraticNumber, rhs: &QuadraticNumber) -> QuadraticNumber {
    let d = joint_radicand(lhs, rhs);
    // (a1 + b1 s)(a2 + b2 s) / 4 with s = sqrt(d); halve back to denominator 2.
    let num_a = &lhs.a * &rhs.a + &lhs.b * &rhs.b * &d;
    let num_b = &lhs.a * &rhs.b + &lhs.b * &rhs.a;
    assert!(
        num_a.is_even() && num_b.is_even(),
        "product ({lhs}) * ({rhs}) leaves the half-integer lattice"
    );
    normalized(num_a / 2, num_b / 2, d)
}

impl Add for QuadraticNumber {
    type Output = QuadraticNumber;
    fn add(self, rhs: QuadraticNumber) -> QuadraticNumber {
        add(&self, &rhs)
    }
}

impl Add for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn add(self, rhs: &QuadraticNumber) -> QuadraticNumber {
        add(self, rhs)
    }
}

impl Sub for QuadraticNumber {
    type Output = QuadraticNumber;
    fn sub(self, rhs: QuadraticNumber) -> QuadraticNumber {
        add(&self, &(-rhs))
    }
}

impl Sub for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn sub(self, rhs: &QuadraticNumber) -> QuadraticNumber {
        add(self, &(-rhs.clone()))
    }
}

impl Neg for QuadraticNumber {
    type Output = QuadraticNumber;
    fn neg(self) -> QuadraticNumber {
        normalized(-self.a, -self.b, self.d)
    }
}

impl Mul for QuadraticNumber {
    type Output = QuadraticNumber;
    fn mul(self, rhs: QuadraticNumber) -> QuadraticNumber {
        mul(&self, &rhs)
    }
}

impl Mul for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn mul(self, rhs: &QuadraticNumber) -> QuadraticNumber {
        mul(self, rhs)
    }
}

impl PartialOrd for QuadraticNumber {
    /// Exact order; `None` only when both sides are irrational over
    /// different radicands.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if !self.b.is_zero() && !other.b.is_zero() && self.d != other.d {
            return None;
        }
        Some(match (self - other).signum() {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        })
    }
}

impl fmt::Display for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            if self.a.is_even() {
                return write!(f, "{}", &self.a / 2);
            }
            return write!(f, "{}/2", self.a);
        }
        let b_abs = self.b.abs();
        let sign = if self.b.is_negative() { '-' } else { '+' };
        if b_abs == BigInt::from(1) {
            write!(f, "({}{}sqrt({}))/2", self.a, sign, self.d)
        } else {
            write!(f, "({}{}{}*sqrt({}))/2", self.a, sign, b_abs, self.d)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64, d: i64) -> QuadraticNumber {
        QuadraticNumber::new(a, b, d)
    }

    #[test]
    fn canonicalizes_square_factors() {
        // sqrt(12) = 2*sqrt(3)
        assert_eq!(q(3, 1, 12), q(3, 2, 3));
        assert_eq!(q(3, 1, 12).radicand(), &BigInt::from(3));
        // sqrt(9) = 3 makes the value rational
        assert_eq!(q(1, 2, 9), q(7, 0, 0));
        assert!(q(1, 2, 9).is_rational());
        // b = 0 forces d = 0
        assert_eq!(q(5, 0, 7).radicand(), &BigInt::from(0));
        assert_eq!(q(0, 4, 0), QuadraticNumber::zero().scale(&BigInt::from(0)));
    }

    #[test]
    fn integer_detection() {
        assert_eq!(q(4, 0, 0).to_integer(), Some(BigInt::from(2)));
        assert_eq!(QuadraticNumber::from_integer(-7).to_integer(), Some(BigInt::from(-7)));
        assert!(!q(3, 0, 0).is_integer()); // 3/2
        assert!(!q(2, 1, 5).is_integer());
    }

    #[test]
    fn display_forms() {
        assert_eq!(q(-1, 1, 5).to_string(), "(-1+sqrt(5))/2");
        assert_eq!(q(-1, -1, 5).to_string(), "(-1-sqrt(5))/2");
        assert_eq!(q(3, 2, 5).to_string(), "(3+2*sqrt(5))/2");
        assert_eq!(q(2, 0, 0).to_string(), "1");
        assert_eq!(q(-4, 0, 0).to_string(), "-2");
        assert_eq!(q(3, 0, 0).to_string(), "3/2");
    }

    #[test]
    fn golden_ratio_arithmetic() {
        // r1, r2 = (-1 +- sqrt(5))/2 are the roots of x^2 + x - 1
        let r1 = q(-1, 1, 5);
        let r2 = q(-1, -1, 5);
        assert_eq!(&r1 + &r2, QuadraticNumber::from_integer(-1));
        assert_eq!(&r1 * &r2, QuadraticNumber::from_integer(-1));
        let square = &r1 * &r1;
        // r1^2 = -r1 + 1 = (3 - sqrt(5))/2
        assert_eq!(square, q(3, -1, 5));
    }

    #[test]
    fn powers_satisfy_fibonacci_growth() {
        // phi = (1+sqrt(5))/2; phi^n = (L_n + F_n*sqrt(5))/2
        let phi = q(1, 1, 5);
        let p10 = phi.pow(10);
        assert_eq!(p10, q(123, 55, 5));
        assert_eq!(phi.pow(0), QuadraticNumber::from_integer(1));
        assert_eq!(phi.pow(1), phi);
    }

    #[test]
    fn exact_sign_and_order() {
        assert_eq!(q(-4, 2, 5).signum(), 1); // 2*sqrt(5) > 4
        assert_eq!(q(-5, 2, 5).signum(), -1); // 2*sqrt(5) < 5
        assert_eq!(q(0, 0, 0).signum(), 0);
        assert_eq!(q(-1, 1, 5).signum(), 1);
        assert!(q(-1, 1, 5) > q(-1, -1, 5));
        assert!(q(1, 0, 0) < q(2, 0, 0));
        // sqrt(2) vs sqrt(3): incomparable by this representation
        assert_eq!(q(0, 1, 2).partial_cmp(&q(0, 1, 3)), None);
    }

    #[test]
    #[should_panic(expected = "half-integer lattice")]
    fn product_outside_lattice_panics() {
        // (1/2) * (1/2) = 1/4 is not representable
        let half = q(1, 0, 0);
        let _ = &half * &half;
    }

    #[test]
    #[should_panic(expected = "incompatible radicands")]
    fn mixed_radicand_sum_panics() {
        let _ = q(0, 2, 2) + q(0, 2, 3);
    }
}
