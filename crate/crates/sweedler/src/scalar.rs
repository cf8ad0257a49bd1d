//! Exact coefficient arithmetic: arbitrary-precision rationals and Gaussian
//! rationals.
//!
//! Every identity checked by this crate is an equation between elements with
//! coefficients in ℚ(i), so the coefficient type must support exact field
//! arithmetic with structural equality. `Scalar` is a pair of reduced
//! [`Rational`]s; zero denominators cannot be constructed and all operations
//! keep both parts in lowest terms.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (canonical form is maintained by `num`).
pub type Rational = BigRational;

/// Rational from an integer pair. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exact integer power, with negative exponents allowed for nonzero bases.
pub fn rat_pow(base: &Rational, exp: i64) -> Result<Rational> {
    if exp < 0 && base.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let mut acc = Rational::one();
    let mut b = if exp < 0 { base.recip() } else { base.clone() };
    let mut e = exp.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        b = &b * &b;
        e >>= 1;
    }
    Ok(acc)
}

/// A Gaussian rational `re + im·i`.
///
/// Equality is structural; both components are kept canonical, so two scalars
/// are equal iff they are the same element of ℚ(i).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Scalar {
    pub re: Rational,
    pub im: Rational,
}

impl Scalar {
    pub fn new(re: Rational, im: Rational) -> Self {
        Scalar { re, im }
    }

    pub fn zero() -> Self {
        Scalar::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        Scalar::new(Rational::one(), Rational::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar::new(Rational::zero(), Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::new(rat_int(n), Rational::zero())
    }

    /// Real rational scalar `num/den`. Panics if `den == 0`.
    pub fn rational(num: i64, den: i64) -> Self {
        Scalar::new(rat(num, den), Rational::zero())
    }

    pub fn from_rational(r: Rational) -> Self {
        Scalar::new(r, Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_imaginary(&self) -> bool {
        self.re.is_zero() && !self.im.is_zero()
    }

    /// True when both the real and imaginary part are nonzero; such scalars
    /// are parenthesized when printed inside a term.
    pub fn is_composite(&self) -> bool {
        !self.re.is_zero() && !self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Scalar::new(self.re.clone(), -self.im.clone())
    }

    /// `re² + im²`, exact.
    pub fn abs_sq(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse: `conj(s) / |s|²`.
    pub fn inv(&self) -> Result<Scalar> {
        let n = self.abs_sq();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let c = self.conj();
        Ok(Scalar::new(c.re / &n, c.im / &n))
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self * &other.inv()?)
    }

    /// Exact integer power; negative exponents require a nonzero base.
    pub fn pow(&self, exp: i64) -> Result<Scalar> {
        let mut acc = Scalar::one();
        let mut b = if exp < 0 { self.inv()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            e >>= 1;
        }
        Ok(acc)
    }

    /// True when the scalar precedes zero in the printing order (used to fold
    /// a sign into `-`/`+` separators when rendering linear combinations).
    pub fn is_negative_leading(&self) -> bool {
        self.re.is_negative() || (self.re.is_zero() && self.im.is_negative())
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::from_rational(r)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re.clone(), -self.im.clone())
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn imag_part(im: &Rational) -> String {
            if im.is_one() {
                "i".to_string()
            } else if (-im).is_one() {
                "-i".to_string()
            } else {
                format!("{im}*i")
            }
        }
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}", imag_part(&self.im))
        } else if self.im.is_negative() {
            write!(f, "{}-{}", self.re, imag_part(&-self.im.clone()).trim_start_matches('-'))
        } else {
            write!(f, "{}+{}", self.re, imag_part(&self.im))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_product() {
        let a = Scalar::new(rat_int(1), rat_int(1));
        let b = a.conj();
        assert_eq!(&a * &b, Scalar::from_int(2));
    }

    #[test]
    fn inverse_of_two() {
        assert_eq!(Scalar::from_int(2).inv().unwrap(), Scalar::rational(1, 2));
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert_eq!(Scalar::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn abs_sq_on_unit_circle() {
        // 9/25 + 16/25 = 1
        let s = Scalar::new(rat(3, 5), rat(4, 5));
        assert_eq!(s.abs_sq(), rat_int(1));
    }

    #[test]
    fn abs_sq_multiplicative() {
        let s = Scalar::new(rat(2, 3), rat(-1, 7));
        let t = Scalar::new(rat(5, 2), rat(3, 4));
        assert_eq!((&s * &t).abs_sq(), s.abs_sq() * t.abs_sq());
    }

    #[test]
    fn pow_negative_exponent() {
        let q = Scalar::rational(1, 2);
        assert_eq!(q.pow(-3).unwrap(), Scalar::from_int(8));
        assert_eq!(Scalar::i().pow(2).unwrap(), Scalar::from_int(-1));
        assert!(Scalar::zero().pow(-1).is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(Scalar::rational(1, 2).to_string(), "1/2");
        assert_eq!(Scalar::from_int(-3).to_string(), "-3");
        assert_eq!(Scalar::i().to_string(), "i");
        assert_eq!((-Scalar::i()).to_string(), "-i");
        assert_eq!(Scalar::new(rat(1, 2), rat(3, 4)).to_string(), "1/2+3/4*i");
        assert_eq!(Scalar::new(rat(1, 2), rat(-3, 4)).to_string(), "1/2-3/4*i");
        assert_eq!(Scalar::new(rat_int(0), rat(-2, 5)).to_string(), "-2/5*i");
    }
}
