//! Laurent monomials and polynomials in the half-power atoms `q^{1/2}`, `qb^{1/2}`, `t^{1/2}`.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::{self, Write};

use num_complex::Complex64;

use super::gauss::GaussianRational;

/// Exponent vector of `q^{1/2}`, `qb^{1/2}`, `t^{1/2}`: `q: 2` is the monomial `q`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mono {
    pub q: i32,
    pub qb: i32,
    pub t: i32,
}

impl Mono {
    pub const ONE: Mono = Mono { q: 0, qb: 0, t: 0 };

    pub const fn new(q: i32, qb: i32, t: i32) -> Self {
        Mono { q, qb, t }
    }

    pub fn mul(self, o: Mono) -> Mono {
        Mono { q: self.q + o.q, qb: self.qb + o.qb, t: self.t + o.t }
    }

    pub fn inv(self) -> Mono {
        Mono { q: -self.q, qb: -self.qb, t: -self.t }
    }

    pub fn div(self, o: Mono) -> Mono {
        self.mul(o.inv())
    }

    pub fn pow(self, k: i32) -> Mono {
        Mono { q: self.q * k, qb: self.qb * k, t: self.t * k }
    }

    pub fn is_one(self) -> bool {
        self == Mono::ONE
    }

    pub fn min(self, o: Mono) -> Mono {
        Mono { q: self.q.min(o.q), qb: self.qb.min(o.qb), t: self.t.min(o.t) }
    }

    pub fn max(self, o: Mono) -> Mono {
        Mono { q: self.q.max(o.q), qb: self.qb.max(o.qb), t: self.t.max(o.t) }
    }

    /// Componentwise `self >= o`.
    pub fn dominates(self, o: Mono) -> bool {
        self.q >= o.q && self.qb >= o.qb && self.t >= o.t
    }

    /// Exchange the `q` and `qb` exponents.
    pub fn swap_q(self) -> Mono {
        Mono { q: self.qb, qb: self.q, t: self.t }
    }

    fn exps(self) -> [(&'static str, i32); 3] {
        [("q", self.q), ("qb", self.qb), ("t", self.t)]
    }

    /// Printed as `(numerator, denominator)` factor strings in the expression grammar.
    pub(crate) fn split_fmt(self) -> (String, String) {
        let mut num = String::new();
        let mut den = String::new();
        let mut nden = 0;
        for (name, e) in self.exps() {
            if e == 0 {
                continue;
            }
            let target = if e > 0 { &mut num } else { nden += 1; &mut den };
            if !target.is_empty() {
                target.push('*');
            }
            let a = e.abs();
            if a == 2 {
                target.push_str(name);
            } else if a % 2 == 0 {
                let _ = write!(target, "{}^{}", name, a / 2);
            } else {
                let _ = write!(target, "{}^({}/2)", name, a);
            }
        }
        if nden > 1 {
            den = alloc::format!("({})", den);
        }
        (num, den)
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (num, den) = self.split_fmt();
        match (num.is_empty(), den.is_empty()) {
            (true, true) => write!(f, "1"),
            (false, true) => write!(f, "{}", num),
            (true, false) => write!(f, "1/{}", den),
            (false, false) => write!(f, "{}/{}", num, den),
        }
    }
}

/// Finite sum of Gaussian-rational multiples of Laurent monomials.
///
/// Terms are kept sorted by [`Mono`] (ascending lex in `q`, `qb`, `t`) with no zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: Vec<(Mono, GaussianRational)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::term(c, Mono::ONE)
    }

    pub fn term(c: GaussianRational, m: Mono) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { terms: alloc::vec![(m, c)] }
        }
    }

    pub fn mono(m: Mono) -> Self {
        Self::term(GaussianRational::one(), m)
    }

    /// Builds from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms<I: IntoIterator<Item = (Mono, GaussianRational)>>(it: I) -> Self {
        let mut v: Vec<(Mono, GaussianRational)> = it.into_iter().collect();
        v.sort_by_key(|a| a.0);
        let mut out: Vec<(Mono, GaussianRational)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += &c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        LaurentPoly { terms: out }
    }

    pub fn terms(&self) -> &[(Mono, GaussianRational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// Single term `c·m`, if that is all there is.
    pub fn as_term(&self) -> Option<(Mono, &GaussianRational)> {
        match self.terms.as_slice() {
            [(m, c)] => Some((*m, c)),
            _ => None,
        }
    }

    pub fn as_constant(&self) -> Option<GaussianRational> {
        if self.is_zero() {
            return Some(GaussianRational::zero());
        }
        match self.as_term() {
            Some((m, c)) if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    /// Lex-largest term.
    pub fn leading(&self) -> Option<(Mono, &GaussianRational)> {
        self.terms.last().map(|(m, c)| (*m, c))
    }

    /// Componentwise minimum exponent over all terms (the monomial content).
    pub fn min_mono(&self) -> Mono {
        let mut it = self.terms.iter().map(|t| t.0);
        match it.next() {
            Some(first) => it.fold(first, Mono::min),
            None => Mono::ONE,
        }
    }

    pub fn max_mono(&self) -> Mono {
        let mut it = self.terms.iter().map(|t| t.0);
        match it.next() {
            Some(first) => it.fold(first, Mono::max),
            None => Mono::ONE,
        }
    }

    pub fn coeff(&self, m: Mono) -> GaussianRational {
        match self.terms.binary_search_by(|t| t.0.cmp(&m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => GaussianRational::zero(),
        }
    }

    pub fn add(&self, o: &LaurentPoly) -> LaurentPoly {
        self.merge(o, false)
    }

    pub fn sub(&self, o: &LaurentPoly) -> LaurentPoly {
        self.merge(o, true)
    }

    fn merge(&self, o: &LaurentPoly, negate: bool) -> LaurentPoly {
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &o.terms;
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        LaurentPoly { terms: out }
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn mul(&self, o: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if let Some((m, c)) = o.as_term() {
            return self.mul_term(c, m);
        }
        if let Some((m, c)) = self.as_term() {
            return o.mul_term(c, m);
        }
        let mut v = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                v.push((ma.mul(*mb), ca * cb));
            }
        }
        Self::from_terms(v)
    }

    pub fn mul_term(&self, c: &GaussianRational, m: Mono) -> LaurentPoly {
        if c.is_zero() {
            return Self::zero();
        }
        // Multiplying every monomial by `m` preserves the lex order.
        LaurentPoly { terms: self.terms.iter().map(|(mm, cc)| (mm.mul(m), cc * c)).collect() }
    }

    pub fn scale(&self, c: &GaussianRational) -> LaurentPoly {
        self.mul_term(c, Mono::ONE)
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact quotient `self / d` in the Laurent ring, if `d` divides `self`.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some((m, c)) = d.as_term() {
            return Some(self.mul_term(&c.inv()?, m.inv()));
        }
        // Shift both to honest polynomials with no monomial content, then divide by
        // lex-leading terms. Every quotient term must be a polynomial monomial.
        let shift_a = self.min_mono();
        let shift_d = d.min_mono();
        let mut rem = self.mul_term(&GaussianRational::one(), shift_a.inv());
        let dd = d.mul_term(&GaussianRational::one(), shift_d.inv());
        let (lm, lc) = dd.leading().expect("nonzero divisor");
        let lc_inv = lc.inv().expect("nonzero leading coefficient");
        let max_a = rem.max_mono();
        let max_d = dd.max_mono();
        if !max_a.dominates(max_d) {
            return None;
        }
        let mut quot = Vec::new();
        while let Some((rm, rc)) = rem.leading() {
            let qm = rm.div(lm);
            if !qm.dominates(Mono::ONE) {
                return None;
            }
            let qc = rc * &lc_inv;
            rem = rem.sub(&dd.mul_term(&qc, qm));
            quot.push((qm, qc));
        }
        let q = Self::from_terms(quot);
        Some(q.mul_term(&GaussianRational::one(), shift_a.div(shift_d)))
    }

    /// Exact square root, if `self` is the square of a Laurent polynomial.
    /// The root is normalised so that its lex-leading coefficient is the principal root.
    pub fn sqrt_exact(&self) -> Option<LaurentPoly> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        let lo = self.min_mono();
        let hi = self.max_mono();
        if lo.q % 2 != 0 || lo.qb % 2 != 0 || lo.t % 2 != 0 || hi.q % 2 != 0 || hi.qb % 2 != 0 || hi.t % 2 != 0 {
            return None;
        }
        let (lo, hi) = (Mono::new(lo.q / 2, lo.qb / 2, lo.t / 2), Mono::new(hi.q / 2, hi.qb / 2, hi.t / 2));
        let (lm, lc) = self.leading()?;
        if lm.q % 2 != 0 || lm.qb % 2 != 0 || lm.t % 2 != 0 {
            return None;
        }
        let r0m = Mono::new(lm.q / 2, lm.qb / 2, lm.t / 2);
        let r0c = lc.sqrt_exact()?;
        let two_lead_inv = (&r0c * &GaussianRational::from_int(2)).inv()?;
        let mut root = LaurentPoly::term(r0c, r0m);
        let mut rem = self.sub(&root.mul(&root));
        while let Some((rm, rc)) = rem.leading() {
            let m = rm.div(r0m);
            if !m.dominates(lo) || !hi.dominates(m) {
                return None;
            }
            let c = rc * &two_lead_inv;
            let step = LaurentPoly::term(c, m);
            // (root + step)^2 = root^2 + 2·root·step + step^2
            rem = rem.sub(&root.mul(&step).scale(&GaussianRational::from_int(2))).sub(&step.mul(&step));
            root = root.add(&step);
        }
        Some(root)
    }

    /// Apply `f` to every monomial/coefficient pair and collect.
    pub fn map_terms<F>(&self, mut f: F) -> LaurentPoly
    where
        F: FnMut(Mono, &GaussianRational) -> LaurentPoly,
    {
        let mut acc = LaurentPoly::zero();
        for (m, c) in &self.terms {
            acc = acc.add(&f(*m, c));
        }
        acc
    }

    /// `q ↔ qb` exchange with Gaussian conjugation of coefficients.
    pub fn star_generic(&self) -> LaurentPoly {
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.swap_q(), c.conj())))
    }

    /// Evaluate at given values of the three half-power atoms.
    pub fn eval(&self, q_half: Complex64, qb_half: Complex64, t_half: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut v = c.to_complex();
            if m.q != 0 {
                v *= q_half.powi(m.q);
            }
            if m.qb != 0 {
                v *= qb_half.powi(m.qb);
            }
            if m.t != 0 {
                v *= t_half.powi(m.t);
            }
            acc += v;
        }
        acc
    }

    /// Which of the atoms occur.
    pub fn uses(&self) -> (bool, bool, bool) {
        let mut u = (false, false, false);
        for (m, _) in &self.terms {
            u.0 |= m.q != 0;
            u.1 |= m.qb != 0;
            u.2 |= m.t != 0;
        }
        u
    }
}

pub(crate) fn fmt_term(out: &mut String, c: &GaussianRational, m: Mono) {
    let (num, den) = m.split_fmt();
    let c_str = if c.is_compound() { alloc::format!("({})", c) } else { alloc::format!("{}", c) };
    if num.is_empty() {
        out.push_str(&c_str);
    } else if c.is_one() {
        out.push_str(&num);
    } else if (-c).is_one() {
        out.push('-');
        out.push_str(&num);
    } else {
        out.push_str(&c_str);
        out.push('*');
        out.push_str(&num);
    }
    if !den.is_empty() {
        out.push('/');
        out.push_str(&den);
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.leading_sign_negative() && c.is_axis_aligned();
            let mag = if negative { -c } else { c.clone() };
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            fmt_term(&mut out, &mag, *m);
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    fn q() -> LaurentPoly {
        LaurentPoly::mono(Mono::new(2, 0, 0))
    }

    fn qb() -> LaurentPoly {
        LaurentPoly::mono(Mono::new(0, 2, 0))
    }

    fn c(n: i64) -> LaurentPoly {
        LaurentPoly::constant(GaussianRational::from_int(n))
    }

    #[test]
    fn mul_and_cancel() {
        let p = q().add(&c(1));
        let r = q().sub(&c(1));
        let prod = p.mul(&r);
        assert_eq!(prod, q().mul(&q()).sub(&c(1)));
        assert_eq!(prod.div_exact(&p), Some(r.clone()));
        assert_eq!(prod.div_exact(&r), Some(p));
        assert_eq!(prod.add(&c(3)).div_exact(&r), None);
    }

    #[test]
    fn laurent_division_with_negative_exponents() {
        let qi = LaurentPoly::mono(Mono::new(-2, 0, 0));
        let p = q().add(&qi); // q + 1/q
        let sq = p.mul(&p);
        assert_eq!(sq.div_exact(&p), Some(p.clone()));
        let two_var = q().mul(&qb()).sub(&c(1));
        assert_eq!(two_var.mul(&p).div_exact(&two_var), Some(p));
    }

    #[test]
    fn square_roots() {
        let p = q().sub(&qb()).add(&c(2));
        let sq = p.mul(&p);
        let r = sq.sqrt_exact().unwrap();
        assert_eq!(r.mul(&r), sq);
        assert_eq!(q().sqrt_exact(), Some(LaurentPoly::mono(Mono::new(1, 0, 0))));
        assert_eq!(q().add(&c(1)).sqrt_exact(), None);
    }

    #[test]
    fn printing() {
        let p = q().sub(&LaurentPoly::mono(Mono::new(-2, 0, 0)));
        assert_eq!(format!("{}", p), "q - 1/q");
        let m = LaurentPoly::term(GaussianRational::from_int(2), Mono::new(1, 0, -2));
        assert_eq!(format!("{}", m), "2*q^(1/2)/t");
        assert_eq!(format!("{}", LaurentPoly::mono(Mono::new(0, -2, -4))), "1/(qb*t^2)");
    }
}
