//! Exact Gaussian rationals `re + im·i`.

use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        GaussianRational { re: BigRational::zero(), im: BigRational::zero() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn i() -> Self {
        GaussianRational { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn from_int(n: i64) -> Self {
        GaussianRational { re: BigRational::from_integer(BigInt::from(n)), im: BigRational::zero() }
    }

    /// `num / den` as a real rational. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        GaussianRational {
            re: BigRational::new(BigInt::from(num), BigInt::from(den)),
            im: BigRational::zero(),
        }
    }

    pub fn from_rational(re: BigRational) -> Self {
        GaussianRational { re, im: BigRational::zero() }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
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

    /// Purely real or purely imaginary, so that a sign can be pulled out when printing.
    pub fn is_axis_aligned(&self) -> bool {
        self.im.is_zero() || self.re.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational { re: self.re.clone(), im: -&self.im }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.im.is_zero() {
            return Some(GaussianRational { re: self.re.recip(), im: BigRational::zero() });
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        Some(GaussianRational { re: &self.re / &norm, im: -(&self.im / &norm) })
    }

    /// Integer power; negative exponents invert. Panics on `0^k` with `k < 0`.
    pub fn pow(&self, k: i32) -> Self {
        let base = if k < 0 { self.inv().expect("negative power of zero") } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        acc
    }

    /// Sign of the first nonzero component (real part first).
    pub fn leading_sign_negative(&self) -> bool {
        if !self.re.is_zero() {
            self.re.is_negative()
        } else {
            self.im.is_negative()
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(self.re.to_f64().unwrap_or(f64::NAN), self.im.to_f64().unwrap_or(f64::NAN))
    }

    /// Exact square root with nonnegative real part (imaginary part nonnegative when the
    /// real part is zero), when one exists in the Gaussian rationals.
    pub fn sqrt_exact(&self) -> Option<Self> {
        if self.im.is_zero() {
            if !self.re.is_negative() {
                return rat_sqrt(&self.re).map(GaussianRational::from_rational);
            }
            return rat_sqrt(&-&self.re).map(|r| GaussianRational { re: BigRational::zero(), im: r });
        }
        let two = BigRational::from_integer(BigInt::from(2));
        let modulus = rat_sqrt(&(&self.re * &self.re + &self.im * &self.im))?;
        let x = rat_sqrt(&((&modulus + &self.re) / &two))?;
        let y = rat_sqrt(&((&modulus - &self.re) / &two))?;
        let y = if self.im.is_negative() { -y } else { y };
        Some(GaussianRational { re: x, im: y })
    }

    /// True when the printed form needs parentheses inside a product.
    pub(crate) fn is_compound(&self) -> bool {
        (!self.re.is_zero() && !self.im.is_zero())
            || (!self.re.is_integer() && self.im.is_zero())
            || (!self.im.is_integer() && self.re.is_zero())
    }
}

fn rat_sqrt(r: &BigRational) -> Option<BigRational> {
    Some(BigRational::new(int_sqrt(r.numer())?, int_sqrt(r.denom())?))
}

fn int_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fmt_rat = |r: &BigRational, f: &mut fmt::Formatter<'_>| -> fmt::Result {
            if r.is_integer() {
                write!(f, "{}", r.numer())
            } else {
                write!(f, "{}/{}", r.numer(), r.denom())
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => fmt_rat(&self.re, f),
            (true, false) => {
                if self.im.is_one() {
                    write!(f, "i")
                } else if (-&self.im).is_one() {
                    write!(f, "-i")
                } else {
                    fmt_rat(&self.im, f)?;
                    write!(f, "*i")
                }
            }
            (false, false) => {
                fmt_rat(&self.re, f)?;
                let (sign, mag) = if self.im.is_negative() { ("-", -&self.im) } else { ("+", self.im.clone()) };
                write!(f, " {} ", sign)?;
                if mag.is_one() {
                    write!(f, "i")
                } else {
                    fmt_rat(&mag, f)?;
                    write!(f, "*i")
                }
            }
        }
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, o: &GaussianRational) -> GaussianRational {
        if self.im.is_zero() && o.im.is_zero() {
            return GaussianRational { re: &self.re * &o.re, im: BigRational::zero() };
        }
        GaussianRational {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl<'a> Div<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn div(self, o: &GaussianRational) -> GaussianRational {
        self * &o.inv().expect("division by zero")
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -self.re, im: -self.im }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -&self.re, im: -&self.im }
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, o: &GaussianRational) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, o: &GaussianRational) {
        self.re -= &o.re;
        self.im -= &o.im;
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, o: GaussianRational) -> GaussianRational {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conj_and_inverse() {
        let z = GaussianRational::new(BigRational::from_integer(3.into()), BigRational::from_integer(4.into()));
        let w = &z * &z.inv().unwrap();
        assert!(w.is_one());
        assert_eq!(z.conj().conj(), z);
        assert_eq!(&z * &z.conj(), GaussianRational::from_int(25));
    }

    #[test]
    fn powers() {
        let i = GaussianRational::i();
        assert_eq!(i.pow(2), GaussianRational::from_int(-1));
        assert_eq!(i.pow(-1), -GaussianRational::i());
        assert_eq!(GaussianRational::from_int(2).pow(-3), GaussianRational::ratio(1, 8));
    }

    #[test]
    fn display_forms() {
        assert_eq!(alloc::format!("{}", GaussianRational::ratio(-3, 4)), "-3/4");
        assert_eq!(alloc::format!("{}", GaussianRational::i()), "i");
        let z = GaussianRational::new(BigRational::from_integer(1.into()), BigRational::from_integer((-2).into()));
        assert_eq!(alloc::format!("{}", z), "1 - 2*i");
    }

    #[test]
    fn exact_sqrt() {
        assert_eq!(GaussianRational::ratio(9, 4).sqrt_exact(), Some(GaussianRational::ratio(3, 2)));
        assert_eq!(GaussianRational::from_int(2).sqrt_exact(), None);
        assert_eq!(GaussianRational::from_int(-4).sqrt_exact(), Some(&GaussianRational::from_int(2) * &GaussianRational::i()));
        let z = GaussianRational::new(BigRational::from_integer(3.into()), BigRational::from_integer(4.into()));
        let r = z.sqrt_exact().unwrap();
        assert_eq!(&r * &r, z);
    }
}
