//! Exact arithmetic in `L = Q[t]/(t^2 - c1 t - 1)` and in the integer
//! subring `Z[t]` with `t^2 = t + 1` used for group matrices.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::Result;

/// The algebra `Q[t]/(t^2 - c1 t + c2)` with `c2 = -1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadraticRing {
    c1: i64,
}

impl QuadraticRing {
    pub const SPLIT: QuadraticRing = QuadraticRing { c1: 0 };
    pub const GOLDEN: QuadraticRing = QuadraticRing { c1: 1 };

    pub fn new(c1: i64) -> Self {
        QuadraticRing { c1 }
    }

    pub fn c1(&self) -> i64 {
        self.c1
    }

    pub fn c2(&self) -> i64 {
        -1
    }

    pub fn discriminant(&self) -> i64 {
        self.c1 * self.c1 + 4
    }

    pub fn is_split(&self) -> bool {
        self.c1 == 0
    }

    pub fn zero(&self) -> QElem {
        QElem::from_int(*self, 0)
    }

    pub fn one(&self) -> QElem {
        QElem::from_int(*self, 1)
    }

    pub fn tau(&self) -> QElem {
        QElem::new(*self, BigRational::zero(), BigRational::one())
    }

    /// The conjugate root `sigma = c1 - t`.
    pub fn sigma(&self) -> QElem {
        QElem::new(*self, BigRational::from_integer(self.c1.into()), -BigRational::one())
    }
}

/// `a + b t` with rational `a`, `b`.
#[derive(Debug, Clone)]
pub struct QElem {
    ring: QuadraticRing,
    a: BigRational,
    b: BigRational,
}

impl PartialEq for QElem {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b
    }
}

impl Eq for QElem {}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl QElem {
    pub fn new(ring: QuadraticRing, a: BigRational, b: BigRational) -> Self {
        QElem { ring, a, b }
    }

    pub fn from_int(ring: QuadraticRing, n: i64) -> Self {
        QElem::new(ring, rat(n), BigRational::zero())
    }

    pub fn from_ints(ring: QuadraticRing, a: i64, b: i64) -> Self {
        QElem::new(ring, rat(a), rat(b))
    }

    pub fn from_ratio(ring: QuadraticRing, num: i64, den: i64) -> Self {
        QElem::new(ring, BigRational::new(num.into(), den.into()), BigRational::zero())
    }

    pub fn ring(&self) -> QuadraticRing {
        self.ring
    }

    pub fn a(&self) -> &BigRational {
        &self.a
    }

    pub fn b(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Coefficient of `1` in the `{1, t}` basis.
    pub fn pr_tau(&self) -> BigRational {
        self.a.clone()
    }

    /// `N(a + bt) = a^2 + c1 ab - b^2`.
    pub fn norm(&self) -> BigRational {
        let c1 = rat(self.ring.c1);
        &self.a * &self.a + c1 * &self.a * &self.b - &self.b * &self.b
    }

    pub fn conjugate(&self) -> QElem {
        let c1 = rat(self.ring.c1);
        QElem::new(self.ring, &self.a + c1 * &self.b, -self.b.clone())
    }

    pub fn invert(&self) -> Result<QElem> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let c = self.conjugate();
        Ok(QElem::new(self.ring, c.a / &n, c.b / &n))
    }

    pub fn is_unit(&self) -> bool {
        !self.norm().is_zero()
    }

    pub fn div(&self, other: &QElem) -> Result<QElem> {
        Ok(self * &other.invert()?)
    }

    pub fn pow(&self, e: u32) -> QElem {
        let mut acc = QElem::from_int(self.ring, 1);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Replace `t` by `1`, the specialization used on the folded side in the
    /// split case.
    pub fn at_tau_one(&self) -> QElem {
        QElem::new(self.ring, &self.a + &self.b, BigRational::zero())
    }

    /// Numerical sign in the golden embedding `t = (1 + sqrt 5)/2`, or of the
    /// rational part when `b = 0`.
    pub fn real_sign(&self) -> Ordering {
        if self.b.is_zero() {
            return self.a.cmp(&BigRational::zero());
        }
        debug_assert_eq!(self.ring.c1, 1, "sign of an irrational element of the split ring");
        // a + b t = (2a + b + b sqrt5) / 2.
        let x = rat(2) * &self.a + &self.b;
        let y = self.b.clone();
        signed_sqrt5_sum(&x, &y)
    }

    fn ring_of(&self, other: &QElem) -> QuadraticRing {
        if self.b.is_zero() {
            other.ring
        } else {
            self.ring
        }
    }
}

/// Sign of `x + y sqrt 5`.
fn signed_sqrt5_sum(x: &BigRational, y: &BigRational) -> Ordering {
    let sx = x.cmp(&BigRational::zero());
    let sy = y.cmp(&BigRational::zero());
    if sx == sy || sy == Ordering::Equal {
        return sx;
    }
    if sx == Ordering::Equal {
        return sy;
    }
    let lhs = x * x;
    let rhs = rat(5) * y * y;
    match lhs.cmp(&rhs) {
        Ordering::Greater => sx,
        Ordering::Less => sy,
        Ordering::Equal => Ordering::Equal,
    }
}

impl<'a> Add<&'a QElem> for &'a QElem {
    type Output = QElem;
    fn add(self, rhs: &QElem) -> QElem {
        QElem::new(self.ring_of(rhs), &self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl<'a> Sub<&'a QElem> for &'a QElem {
    type Output = QElem;
    fn sub(self, rhs: &QElem) -> QElem {
        QElem::new(self.ring_of(rhs), &self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl<'a> Mul<&'a QElem> for &'a QElem {
    type Output = QElem;
    fn mul(self, rhs: &QElem) -> QElem {
        if self.b.is_zero() {
            return QElem::new(rhs.ring, &self.a * &rhs.a, &self.a * &rhs.b);
        }
        if rhs.b.is_zero() {
            return QElem::new(self.ring, &self.a * &rhs.a, &self.b * &rhs.a);
        }
        debug_assert_eq!(self.ring, rhs.ring);
        let bd = &self.b * &rhs.b;
        let a = &self.a * &rhs.a + &bd;
        let b = &self.a * &rhs.b + &self.b * &rhs.a + rat(self.ring.c1) * bd;
        QElem::new(self.ring, a, b)
    }
}

impl Add for QElem {
    type Output = QElem;
    fn add(self, rhs: QElem) -> QElem {
        &self + &rhs
    }
}

impl Sub for QElem {
    type Output = QElem;
    fn sub(self, rhs: QElem) -> QElem {
        &self - &rhs
    }
}

impl Mul for QElem {
    type Output = QElem;
    fn mul(self, rhs: QElem) -> QElem {
        &self * &rhs
    }
}

impl AddAssign<&QElem> for QElem {
    fn add_assign(&mut self, rhs: &QElem) {
        if self.b.is_zero() {
            self.ring = rhs.ring;
        }
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl SubAssign<&QElem> for QElem {
    fn sub_assign(&mut self, rhs: &QElem) {
        if self.b.is_zero() {
            self.ring = rhs.ring;
        }
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }
}

impl Neg for QElem {
    type Output = QElem;
    fn neg(self) -> QElem {
        QElem::new(self.ring, -self.a, -self.b)
    }
}

impl Neg for &QElem {
    type Output = QElem;
    fn neg(self) -> QElem {
        QElem::new(self.ring, -self.a.clone(), -self.b.clone())
    }
}

fn fmt_rat(f: &mut fmt::Formatter<'_>, r: &BigRational) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for QElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return fmt_rat(f, &self.a);
        }
        if !self.a.is_zero() {
            fmt_rat(f, &self.a)?;
            if self.b.is_positive() {
                f.write_str("+")?;
            }
        }
        if self.b.is_one() {
            f.write_str("t")
        } else if (-&self.b).is_one() {
            f.write_str("-t")
        } else {
            fmt_rat(f, &self.b)?;
            f.write_str("*t")
        }
    }
}

/// `a + b t` with integer `a`, `b` and `t^2 = t + 1`.
///
/// Matrices of reflection groups live here: split foldings only ever use
/// `b = 0`, the golden ones need `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GoldenInt {
    pub a: i64,
    pub b: i64,
}

impl GoldenInt {
    pub const ZERO: GoldenInt = GoldenInt { a: 0, b: 0 };
    pub const ONE: GoldenInt = GoldenInt { a: 1, b: 0 };
    pub const TAU: GoldenInt = GoldenInt { a: 0, b: 1 };

    pub const fn new(a: i64, b: i64) -> Self {
        GoldenInt { a, b }
    }

    pub const fn int(a: i64) -> Self {
        GoldenInt { a, b: 0 }
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// Sign of the real number `a + b (1 + sqrt 5)/2`.
    pub fn sign(self) -> Ordering {
        let x = 2 * self.a as i128 + self.b as i128;
        let y = self.b as i128;
        let sx = x.cmp(&0);
        let sy = y.cmp(&0);
        if sx == sy || sy == Ordering::Equal {
            return sx;
        }
        if sx == Ordering::Equal {
            return sy;
        }
        match (x * x).cmp(&(5 * y * y)) {
            Ordering::Greater => sx,
            Ordering::Less => sy,
            Ordering::Equal => Ordering::Equal,
        }
    }

    pub fn to_qelem(self, ring: QuadraticRing) -> QElem {
        debug_assert!(self.b == 0 || ring.c1 == 1);
        QElem::from_ints(ring, self.a, self.b)
    }

    /// Inverse image of an element of `L` with integer coordinates.
    pub fn from_qelem(x: &QElem) -> Option<GoldenInt> {
        if !x.a.is_integer() || !x.b.is_integer() {
            return None;
        }
        let a = i64::try_from(x.a.numer()).ok()?;
        let b = i64::try_from(x.b.numer()).ok()?;
        Some(GoldenInt { a, b })
    }
}

impl Add for GoldenInt {
    type Output = GoldenInt;
    fn add(self, rhs: GoldenInt) -> GoldenInt {
        GoldenInt::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for GoldenInt {
    type Output = GoldenInt;
    fn sub(self, rhs: GoldenInt) -> GoldenInt {
        GoldenInt::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for GoldenInt {
    type Output = GoldenInt;
    fn neg(self) -> GoldenInt {
        GoldenInt::new(-self.a, -self.b)
    }
}

impl Mul for GoldenInt {
    type Output = GoldenInt;
    fn mul(self, rhs: GoldenInt) -> GoldenInt {
        let bd = self.b * rhs.b;
        GoldenInt::new(self.a * rhs.a + bd, self.a * rhs.b + self.b * rhs.a + bd)
    }
}

impl AddAssign for GoldenInt {
    fn add_assign(&mut self, rhs: GoldenInt) {
        *self = *self + rhs;
    }
}

impl SubAssign for GoldenInt {
    fn sub_assign(&mut self, rhs: GoldenInt) {
        *self = *self - rhs;
    }
}

impl fmt::Display for GoldenInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, 1) => f.write_str("t"),
            (0, -1) => f.write_str("-t"),
            (0, b) => write!(f, "{b}*t"),
            (a, 1) => write!(f, "{a}+t"),
            (a, -1) => write!(f, "{a}-t"),
            (a, b) if b > 0 => write!(f, "{a}+{b}*t"),
            (a, b) => write!(f, "{a}{b}*t"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    #[test]
    fn golden_square() {
        let r = QuadraticRing::GOLDEN;
        let x = QElem::from_ints(r, 1, 1);
        assert_eq!(&x * &x, QElem::from_ints(r, 2, 3));
    }

    #[test]
    fn split_zero_divisor() {
        let r = QuadraticRing::SPLIT;
        let p = QElem::from_ints(r, 1, 1);
        let m = QElem::from_ints(r, 1, -1);
        assert!((&p * &m).is_zero());
        assert_eq!(p.invert(), Err(Error::ZeroDivisor));
        assert_eq!(r.tau().invert().unwrap(), r.tau());
    }

    #[test]
    fn golden_tau_inverse() {
        let r = QuadraticRing::GOLDEN;
        assert_eq!(r.tau().invert().unwrap(), QElem::from_ints(r, -1, 1));
    }

    #[test]
    fn vieta() {
        for r in [QuadraticRing::SPLIT, QuadraticRing::GOLDEN] {
            assert_eq!(&r.tau() * &r.sigma(), QElem::from_int(r, -1));
            assert_eq!(&r.tau() + &r.sigma(), QElem::from_int(r, r.c1()));
        }
    }

    #[test]
    fn pr_tau_reads_rational_part() {
        let r = QuadraticRing::GOLDEN;
        assert_eq!(QElem::from_ints(r, 3, 2).pr_tau(), rat(3));
        assert_eq!(r.tau().pr_tau(), rat(0));
    }

    #[test]
    fn rendering() {
        let r = QuadraticRing::GOLDEN;
        assert_eq!(format!("{}", QElem::from_ints(r, 1, 1)), "1+t");
        assert_eq!(format!("{}", QElem::from_ints(r, 0, -2)), "-2*t");
        assert_eq!(format!("{}", QElem::from_ratio(r, -1, 2)), "-1/2");
        assert_eq!(format!("{}", GoldenInt::new(-1, 1)), "-1+t");
    }

    #[test]
    fn golden_sign() {
        assert_eq!(GoldenInt::new(-1, 1).sign(), Ordering::Greater);
        assert_eq!(GoldenInt::new(2, -1).sign(), Ordering::Greater);
        assert_eq!(GoldenInt::new(1, -1).sign(), Ordering::Less);
        assert_eq!(GoldenInt::new(0, 0).sign(), Ordering::Equal);
        let r = QuadraticRing::GOLDEN;
        assert_eq!(QElem::from_ints(r, 2, -1).real_sign(), Ordering::Greater);
    }
}
