//! Parser for the ASCII expression grammar:
//!
//! ```text
//! expr   := ['-'] term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*
//! factor := atom ['^' exp]          exp := int | '(' ['-'] int ['/' '2'] ')'
//! atom   := number | 'i' | 'q' | 'qb' | 't' | generator | '(' expr ')'
//!         | 'star(' expr ')' | '[' expr ',' expr ']'
//! ```
//!
//! Generators are looked up in an [`Alphabet`] by symbol (`alpha`, `beta'`, `u12`, `h11_21`)
//! or through the indexed forms `x[A,B]`, `u[A,B]`, `ub[A,B]`, `h[JK,LM]`.

use num_bigint::BigInt;
use num_rational::BigRational;
use qpoincare_core::coeff::{GaussianRational, Scalar};
use qpoincare_core::rewrite::{Alphabet, NCPoly, Word};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExprError {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown symbol `{name}` at {pos}")]
    UnknownSymbol { pos: usize, name: String },
    #[error("division by a noncommutative expression at {pos}")]
    NoncommutativeDivision { pos: usize },
    #[error("power {exp} of a noncommutative expression at {pos}")]
    NoncommutativePower { pos: usize, exp: String },
    #[error("division by zero at {pos}")]
    DivisionByZero { pos: usize },
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
    End,
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>, ExprError> {
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let (pos, c) = chars[k];
        if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].1.is_ascii_digit() {
                k += 1;
            }
            let s: String = chars[start..k].iter().map(|&(_, c)| c).collect();
            out.push((Tok::Num(s.parse().expect("digits")), pos));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = k;
            while k < chars.len() && (chars[k].1.is_ascii_alphanumeric() || chars[k].1 == '_') {
                k += 1;
            }
            while k < chars.len() && chars[k].1 == '\'' {
                k += 1;
            }
            out.push((Tok::Ident(chars[start..k].iter().map(|&(_, c)| c).collect()), pos));
        } else if "+-*/^()[],'".contains(c) {
            out.push((Tok::Sym(c), pos));
            k += 1;
        } else {
            return Err(ExprError::Syntax { pos, msg: format!("unexpected character `{}`", c) });
        }
    }
    out.push((Tok::End, src.len()));
    Ok(out)
}

/// The parameter atoms, which alone accept half-integer exponents.
#[derive(Clone, Copy)]
enum Param {
    Q,
    Qb,
    T,
}

impl Param {
    fn half_pow(self, k: i32) -> Scalar {
        match self {
            Param::Q => Scalar::q_half_pow(k),
            Param::Qb => Scalar::qb_half_pow(k),
            Param::T => Scalar::t_half_pow(k),
        }
    }
}

enum Atom {
    Param(Param),
    Poly(NCPoly),
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    at: usize,
    alphabet: &'a Alphabet,
    conj: &'a dyn Fn(&Scalar) -> Scalar,
}

fn as_scalar(p: &NCPoly) -> Option<Scalar> {
    if p.terms().all(|(w, _)| w.is_unit()) {
        Some(p.coeff(&Word::unit()))
    } else {
        None
    }
}

fn constant(s: Scalar) -> NCPoly {
    NCPoly::constant(s)
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ExprError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.syntax(format!("expected `{}`", c)))
        }
    }

    fn syntax(&self, msg: String) -> ExprError {
        ExprError::Syntax { pos: self.pos(), msg }
    }

    fn expr(&mut self) -> Result<NCPoly, ExprError> {
        let mut acc = if self.eat('-') { self.term()?.neg() } else { self.term()? };
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<NCPoly, ExprError> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.factor()?);
            } else if *self.peek() == Tok::Sym('/') {
                let pos = self.pos();
                self.bump();
                let d = self.factor()?;
                let s = as_scalar(&d).ok_or(ExprError::NoncommutativeDivision { pos })?;
                let inv = s.inv().ok_or(ExprError::DivisionByZero { pos })?;
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    /// Exponent in half-units.
    fn exponent(&mut self) -> Result<i64, ExprError> {
        let int = |p: &mut Self| -> Result<i64, ExprError> {
            match p.bump() {
                (Tok::Num(n), pos) => {
                    i64::try_from(n).map_err(|_| ExprError::Syntax { pos, msg: String::from("exponent too large") })
                }
                (_, pos) => Err(ExprError::Syntax { pos, msg: String::from("expected an integer exponent") }),
            }
        };
        if self.eat('(') {
            let neg = self.eat('-');
            let n = int(self)?;
            let half = if self.eat('/') {
                match self.bump() {
                    (Tok::Num(d), _) if d == BigInt::from(2) => true,
                    (_, pos) => return Err(ExprError::Syntax { pos, msg: String::from("only /2 fractional exponents") }),
                }
            } else {
                false
            };
            self.expect(')')?;
            let v = if half { n } else { 2 * n };
            Ok(if neg { -v } else { v })
        } else {
            let neg = self.eat('-');
            let n = 2 * int(self)?;
            Ok(if neg { -n } else { n })
        }
    }

    fn factor(&mut self) -> Result<NCPoly, ExprError> {
        let atom = self.atom()?;
        if !self.eat('^') {
            return Ok(match atom {
                Atom::Param(p) => constant(p.half_pow(2)),
                Atom::Poly(p) => p,
            });
        }
        let pos = self.pos();
        let e = self.exponent()?;
        let exp_str = || if e % 2 == 0 { format!("{}", e / 2) } else { format!("({}/2)", e) };
        let k = i32::try_from(e).map_err(|_| ExprError::Syntax { pos, msg: String::from("exponent too large") })?;
        match atom {
            Atom::Param(p) => Ok(constant(p.half_pow(k))),
            Atom::Poly(p) => {
                if e % 2 != 0 {
                    return match as_scalar(&p) {
                        Some(_) => Err(ExprError::Syntax { pos, msg: String::from("half powers only of q, qb, t") }),
                        None => Err(ExprError::NoncommutativePower { pos, exp: exp_str() }),
                    };
                }
                let n = k / 2;
                if let Some(s) = as_scalar(&p) {
                    if n < 0 && s.is_zero() {
                        return Err(ExprError::DivisionByZero { pos });
                    }
                    return Ok(constant(s.pow(n)));
                }
                if n < 0 {
                    return Err(ExprError::NoncommutativePower { pos, exp: exp_str() });
                }
                Ok((0..n).fold(NCPoly::one(), |acc, _| acc.mul(&p)))
            }
        }
    }

    fn atom(&mut self) -> Result<Atom, ExprError> {
        let (tok, pos) = self.bump();
        match tok {
            Tok::Num(n) => Ok(Atom::Poly(constant(Scalar::gaussian(GaussianRational::from_rational(BigRational::from_integer(n)))))),
            Tok::Sym('(') => {
                let e = self.expr()?;
                self.expect(')')?;
                Ok(Atom::Poly(e))
            }
            Tok::Sym('[') => {
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                self.expect(']')?;
                Ok(Atom::Poly(a.commutator(&b)))
            }
            Tok::Ident(name) => self.ident(name, pos),
            Tok::End => Err(ExprError::Syntax { pos, msg: String::from("unexpected end of input") }),
            Tok::Sym(c) => Err(ExprError::Syntax { pos, msg: format!("unexpected `{}`", c) }),
        }
    }

    fn ident(&mut self, name: String, pos: usize) -> Result<Atom, ExprError> {
        match name.as_str() {
            "i" => return Ok(Atom::Poly(constant(Scalar::i()))),
            "q" => return Ok(Atom::Param(Param::Q)),
            "qb" => return Ok(Atom::Param(Param::Qb)),
            "t" => return Ok(Atom::Param(Param::T)),
            "star" if *self.peek() == Tok::Sym('(') => {
                self.bump();
                let e = self.expr()?;
                self.expect(')')?;
                return Ok(Atom::Poly(e.star(self.alphabet, self.conj)));
            }
            _ => {}
        }
        let symbol = if *self.peek() == Tok::Sym('[') && self.toks[self.at].1 == pos + name.len() {
            self.indexed(&name, pos)?
        } else {
            name
        };
        self.alphabet
            .lookup(&symbol)
            .map(|g| Atom::Poly(NCPoly::gen(g)))
            .map_err(|_| ExprError::UnknownSymbol { pos, name: symbol })
    }

    /// `x[A,B]`, `u[A,B]`, `ub[A,B]`, `h[JK,LM]` and trailing primes, as an alphabet symbol.
    fn indexed(&mut self, head: &str, pos: usize) -> Result<String, ExprError> {
        self.expect('[')?;
        let mut idx = Vec::new();
        loop {
            match self.bump() {
                (Tok::Num(n), _) => idx.push(n.to_string()),
                (_, p) => return Err(ExprError::Syntax { pos: p, msg: String::from("expected an index") }),
            }
            if !self.eat(',') {
                break;
            }
        }
        self.expect(']')?;
        let mut primes = String::new();
        while *self.peek() == Tok::Sym('\'') {
            self.bump();
            primes.push('\'');
        }
        let spinor = |s: &str| s == "1" || s == "2";
        let pair = |s: &str| ["11", "12", "21", "22"].contains(&s);
        let sym = match (head, idx.as_slice()) {
            ("x", [a, b]) if spinor(a) && spinor(b) => {
                let k = 2 * (a.parse::<usize>().unwrap() - 1) + (b.parse::<usize>().unwrap() - 1);
                ["alpha", "beta", "gamma", "delta"][k].to_string()
            }
            ("u" | "ub", [a, b]) if spinor(a) && spinor(b) => format!("{}{}{}", head, a, b),
            ("h", [a, b]) if pair(a) && pair(b) => format!("h{}_{}", a, b),
            _ => return Err(ExprError::UnknownSymbol { pos, name: format!("{}[{}]", head, idx.join(",")) }),
        };
        Ok(sym + &primes)
    }
}

/// Parses `src` over `alphabet`; `conj` is the coefficient conjugation used by `star(·)`.
pub fn parse_expr(src: &str, alphabet: &Alphabet, conj: &dyn Fn(&Scalar) -> Scalar) -> Result<NCPoly, ExprError> {
    let mut p = Parser { toks: tokenize(src)?, at: 0, alphabet, conj };
    let e = p.expr()?;
    match p.peek() {
        Tok::End => Ok(e),
        _ => Err(p.syntax(String::from("trailing input"))),
    }
}

/// Unicode rendering of an ASCII expression, for documentation.
pub fn unicode(ascii: &str) -> String {
    let mut out = String::new();
    let mut word = String::new();
    let flush = |word: &mut String, out: &mut String| {
        out.push_str(match word.as_str() {
            "alpha" => "α",
            "beta" => "β",
            "gamma" => "γ",
            "delta" => "δ",
            "qb" => "q̄",
            w => w,
        });
        word.clear();
    };
    for c in ascii.chars() {
        if c.is_ascii_alphanumeric() || c == '_' {
            word.push(c);
        } else {
            flush(&mut word, &mut out);
            out.push(if c == '*' { '·' } else { c });
        }
    }
    flush(&mut word, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use qpoincare_core::algebras::minkowski::x_alphabet;
    use qpoincare_core::coeff::{star, Regime};

    fn al() -> Alphabet {
        x_alphabet([0, 1, 2, 3])
    }

    fn parse(s: &str) -> Result<NCPoly, ExprError> {
        parse_expr(s, &al(), &|c| star(c, Regime::UnitCircle))
    }

    #[test]
    fn defining_polynomial_has_two_terms() {
        let p = parse("alpha*beta - t*q*beta*alpha").unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.coeff(&al().word("beta*alpha").unwrap()), -(&Scalar::t() * &Scalar::q()));
    }

    #[test]
    fn commutator_and_star() {
        let p = parse("[alpha, delta] - (1/t)*(q - 1/q)*beta*gamma").unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(parse("star(beta)").unwrap(), parse("gamma").unwrap());
        // On the circle star(q) = 1/q, and star reverses words.
        assert_eq!(parse("star(q*alpha*beta)").unwrap(), parse("(1/q)*gamma*alpha").unwrap());
    }

    #[test]
    fn indexed_generators_and_half_powers() {
        assert_eq!(parse("x[1,2]").unwrap(), parse("beta").unwrap());
        let p = parse("q^(1/2)*q^(1/2) - q").unwrap();
        assert!(p.is_zero());
        assert_eq!(parse("t^(-3/2)").unwrap(), NCPoly::constant(Scalar::t_half_pow(-3)));
        assert_eq!(parse("(alpha + beta)^2").unwrap(), parse("alpha*alpha + alpha*beta + beta*alpha + beta*beta").unwrap());
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse("alpha/beta"), Err(ExprError::NoncommutativeDivision { pos: 5 }));
        assert_eq!(parse("alpha + epsilon"), Err(ExprError::UnknownSymbol { pos: 8, name: String::from("epsilon") }));
        assert!(matches!(parse("alpha + "), Err(ExprError::Syntax { pos: 8, .. })));
        assert!(matches!(parse("alpha^(1/2)"), Err(ExprError::NoncommutativePower { .. })));
        assert!(matches!(parse("alpha # beta"), Err(ExprError::Syntax { pos: 6, .. })));
        assert_eq!(parse("1/(q - q)"), Err(ExprError::DivisionByZero { pos: 1 }));
    }

    #[test]
    fn unicode_rendering() {
        assert_eq!(unicode("alpha*delta - (1/t)*(q - 1/qb)*beta*gamma"), "α·δ - (1/t)·(q - 1/q̄)·β·γ");
    }
}
