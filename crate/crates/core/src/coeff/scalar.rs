//! Rational functions in `q^{1/2}`, `qb^{1/2}`, `t^{1/2}` over the Gaussian rationals.

use alloc::string::String;
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use super::gauss::GaussianRational;
use super::laurent::{fmt_term, LaurentPoly, Mono};

/// `num / den`, kept lightly normalised.
///
/// The denominator has no monomial content and lex-leading coefficient 1, and is
/// cancelled against the numerator when it divides it exactly. Fractions are not
/// reduced to lowest terms, so equality goes through cross-multiplication.
#[derive(Clone, Debug)]
pub struct Scalar {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_poly(LaurentPoly::constant(GaussianRational::from_int(n)))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::from_poly(LaurentPoly::constant(GaussianRational::ratio(n, d)))
    }

    pub fn gaussian(c: GaussianRational) -> Self {
        Scalar::from_poly(LaurentPoly::constant(c))
    }

    pub fn i() -> Self {
        Scalar::gaussian(GaussianRational::i())
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Scalar { num: p, den: LaurentPoly::one() }
    }

    pub fn mono(m: Mono) -> Self {
        Scalar::from_poly(LaurentPoly::mono(m))
    }

    /// `q^{k/2}`.
    pub fn q_half_pow(k: i32) -> Self {
        Scalar::mono(Mono::new(k, 0, 0))
    }

    pub fn q() -> Self {
        Scalar::q_half_pow(2)
    }

    pub fn qb() -> Self {
        Scalar::mono(Mono::new(0, 2, 0))
    }

    /// `qb^{k/2}`.
    pub fn qb_half_pow(k: i32) -> Self {
        Scalar::mono(Mono::new(0, k, 0))
    }

    pub fn t() -> Self {
        Scalar::mono(Mono::new(0, 0, 2))
    }

    /// `t^{k/2}`.
    pub fn t_half_pow(k: i32) -> Self {
        Scalar::mono(Mono::new(0, 0, k))
    }

    /// Builds `num / den`. Panics if `den` is the zero polynomial.
    pub fn from_parts(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Scalar::normalized(num, den)
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    /// The value as a Gaussian rational when it does not depend on any atom.
    pub fn as_constant(&self) -> Option<GaussianRational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(&n / &d)
    }

    fn normalized(mut num: LaurentPoly, mut den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Scalar::zero();
        }
        let content = den.min_mono();
        let (_, lc) = den.leading().expect("nonzero denominator");
        let lc_inv = lc.inv().expect("nonzero leading coefficient");
        if !content.is_one() || !lc_inv.is_one() {
            den = den.mul_term(&lc_inv, content.inv());
            num = num.mul_term(&lc_inv, content.inv());
        }
        if !den.is_one() {
            if let Some(q) = num.div_exact(&den) {
                return Scalar { num: q, den: LaurentPoly::one() };
            }
        }
        Scalar { num, den }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(Scalar::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, k: i32) -> Scalar {
        let base = if k < 0 { self.inv().expect("negative power of zero") } else { self.clone() };
        let mut acc = Scalar::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    fn add_impl(&self, o: &Scalar, negate: bool) -> Scalar {
        let on = if negate { o.num.neg() } else { o.num.clone() };
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return Scalar { num: on, den: o.den.clone() };
        }
        if self.den == o.den {
            return Scalar::normalized(self.num.add(&on), self.den.clone());
        }
        if self.den.is_one() {
            return Scalar::normalized(self.num.mul(&o.den).add(&on), o.den.clone());
        }
        if o.den.is_one() {
            return Scalar::normalized(self.num.add(&on.mul(&self.den)), self.den.clone());
        }
        if let Some(k) = o.den.div_exact(&self.den) {
            return Scalar::normalized(self.num.mul(&k).add(&on), o.den.clone());
        }
        if let Some(k) = self.den.div_exact(&o.den) {
            return Scalar::normalized(self.num.add(&on.mul(&k)), self.den.clone());
        }
        Scalar::normalized(self.num.mul(&o.den).add(&on.mul(&self.den)), self.den.mul(&o.den))
    }

    fn mul_impl(&self, o: &Scalar) -> Scalar {
        if self.is_zero() || o.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return Scalar { num: self.num.mul(&o.num), den: LaurentPoly::one() };
        }
        let (mut n1, mut d2) = (self.num.clone(), o.den.clone());
        if !d2.is_one() {
            if let Some(k) = n1.div_exact(&d2) {
                n1 = k;
                d2 = LaurentPoly::one();
            }
        }
        let (mut n2, mut d1) = (o.num.clone(), self.den.clone());
        if !d1.is_one() {
            if let Some(k) = n2.div_exact(&d1) {
                n2 = k;
                d1 = LaurentPoly::one();
            }
        }
        Scalar::normalized(n1.mul(&n2), d1.mul(&d2))
    }

    /// Generic-regime conjugation: `q ↔ qb`, `i ↦ −i`, `t` fixed.
    pub fn star_generic(&self) -> Scalar {
        Scalar::normalized(self.num.star_generic(), self.den.star_generic())
    }

    /// Square root inside the field, when `num·den` is a perfect square.
    pub fn sqrt_exact(&self) -> Option<Scalar> {
        let r = self.num.mul(&self.den).sqrt_exact()?;
        Some(Scalar::normalized(r, self.den.clone()))
    }

    /// Printed with the `t`-content pulled out and a positive leading sign, for use as
    /// a coefficient in front of a word. Returns `(negative, factor string)`; the
    /// factor string is empty when the magnitude is 1.
    pub fn fmt_coefficient(&self) -> (bool, String) {
        let mut num = self.num.clone();
        let mut negative = false;
        if let Some((_, c)) = num.leading() {
            if c.leading_sign_negative() && c.is_axis_aligned() {
                negative = true;
                num = num.neg();
            }
        }
        let mut parts: alloc::vec::Vec<String> = alloc::vec::Vec::new();
        if num.len() > 1 {
            let tmin = num.terms().iter().map(|(m, _)| m.t).min().unwrap_or(0);
            if tmin != 0 {
                let tm = Mono::new(0, 0, tmin);
                parts.push(alloc::format!("({})", LaurentPoly::mono(tm)));
                num = num.mul_term(&GaussianRational::one(), tm.inv());
            }
            parts.push(alloc::format!("({})", num));
        } else if let Some((m, c)) = num.as_term() {
            if !(m.is_one() && c.is_one()) {
                let mut s = String::new();
                fmt_term(&mut s, c, m);
                if m.is_one() && !c.is_compound() && self.den.is_one() {
                    parts.push(s);
                } else {
                    parts.push(alloc::format!("({})", s));
                }
            }
        }
        let mut out = parts.join("*");
        if !self.den.is_one() {
            if out.is_empty() {
                out.push('1');
            }
            out = alloc::format!("{}/({})", out, self.den);
        }
        (negative, out)
    }
}

impl PartialEq for Scalar {
    fn eq(&self, o: &Scalar) -> bool {
        if self.den == o.den {
            return self.num == o.num;
        }
        self.num.mul(&o.den) == o.num.mul(&self.den)
    }
}

impl Eq for Scalar {}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<GaussianRational> for Scalar {
    fn from(c: GaussianRational) -> Self {
        Scalar::gaussian(c)
    }
}

impl From<LaurentPoly> for Scalar {
    fn from(p: LaurentPoly) -> Self {
        Scalar::from_poly(p)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else if self.num.len() == 1 {
            write!(f, "{}/({})", self.num, self.den)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        self.add_impl(o, false)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        self.add_impl(o, true)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        self.mul_impl(o)
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    /// Panics on division by zero.
    fn div(self, o: &Scalar) -> Scalar {
        self.mul_impl(&o.inv().expect("division by zero scalar"))
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { num: self.num.neg(), den: self.den.clone() }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                self.$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        *self = self.add_impl(o, false);
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        *self = self.add_impl(o, true);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    #[test]
    fn fraction_arithmetic() {
        let q = Scalar::q();
        let a = &Scalar::one() / &(&q + &q.inv().unwrap());
        let b = &a * &(&q + &q.inv().unwrap());
        assert!(b.is_one());
        assert!((&(&q * &q.inv().unwrap()) - &Scalar::one()).is_zero());
        let x = &Scalar::one() / &(&q + &Scalar::one());
        let y = &Scalar::one() / &(&q - &Scalar::one());
        let s = &x + &y;
        let expected = &(&q * &Scalar::from_int(2)) / &(&(&q * &q) - &Scalar::one());
        assert_eq!(s, expected);
    }

    #[test]
    fn denominators_cancel() {
        let q = Scalar::q();
        let p = &q * &q - Scalar::one();
        let r = &p / &(&q - &Scalar::one());
        assert!(r.denom().is_one());
        assert_eq!(r, &q + &Scalar::one());
    }

    #[test]
    fn coefficient_printing() {
        let q = Scalar::q();
        let c = -(&(&q - &q.inv().unwrap()) / &Scalar::t());
        assert_eq!(c.fmt_coefficient(), (true, String::from("(1/t)*(q - 1/q)")));
        assert_eq!(Scalar::from_int(-3).fmt_coefficient(), (true, String::from("3")));
        assert_eq!(format!("{}", &Scalar::one() / &(&q + &Scalar::one())), "1/(q + 1)");
    }
}
