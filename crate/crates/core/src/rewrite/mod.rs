//! Noncommutative polynomials over an ordered alphabet, oriented quadratic rewriting,
//! star, and overlap (Diamond Lemma) checks.

mod poly;
mod system;

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

pub use poly::NCPoly;
pub use system::{orient, Obstruction, RewriteRule, RewriteSystem};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum RewriteError {
    #[error("relation with leading word {0} cannot be oriented into a quadratic rule")]
    NotOrientable(String),
    #[error("two rules share the leading word {0}")]
    DuplicateLeading(String),
    #[error("rule {0} does not decrease in degree-lex order")]
    NonDecreasing(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("star partners do not form an involution at `{0}`")]
    StarNotInvolution(String),
}

/// Index of a generator in its alphabet; the index is also its rank in the total order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gen(pub u16);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    /// 0 for the first copy, 1 for the primed copy.
    pub prime: u8,
    /// Name (with primes) of the star partner.
    pub star: String,
}

impl Generator {
    pub fn new(name: &str, prime: u8, star: &str) -> Self {
        Generator { name: name.into(), prime, star: star.into() }
    }

    pub fn symbol(&self) -> String {
        let mut s = self.name.clone();
        for _ in 0..self.prime {
            s.push('\'');
        }
        s
    }
}

/// Generators listed in increasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    gens: Vec<Generator>,
    star: Vec<Gen>,
}

impl Alphabet {
    pub fn new(gens: Vec<Generator>) -> Result<Self, RewriteError> {
        let find = |sym: &str| gens.iter().position(|g| g.symbol() == sym);
        let mut star = Vec::with_capacity(gens.len());
        for g in &gens {
            let s = find(&g.star).ok_or_else(|| RewriteError::UnknownGenerator(g.star.clone()))?;
            star.push(Gen(s as u16));
        }
        for (i, s) in star.iter().enumerate() {
            if star[s.0 as usize].0 as usize != i {
                return Err(RewriteError::StarNotInvolution(gens[i].symbol()));
            }
        }
        Ok(Alphabet { gens, star })
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn gens(&self) -> impl Iterator<Item = Gen> {
        (0..self.gens.len() as u16).map(Gen)
    }

    pub fn generator(&self, g: Gen) -> &Generator {
        &self.gens[g.0 as usize]
    }

    pub fn symbol(&self, g: Gen) -> String {
        self.generator(g).symbol()
    }

    pub fn lookup(&self, symbol: &str) -> Result<Gen, RewriteError> {
        self.gens
            .iter()
            .position(|g| g.symbol() == symbol)
            .map(|i| Gen(i as u16))
            .ok_or_else(|| RewriteError::UnknownGenerator(symbol.into()))
    }

    pub fn star(&self, g: Gen) -> Gen {
        self.star[g.0 as usize]
    }

    /// Parses a word such as `alpha*beta` (empty string is the unit word).
    pub fn word(&self, s: &str) -> Result<Word, RewriteError> {
        if s.trim().is_empty() {
            return Ok(Word::unit());
        }
        s.split('*').map(|p| self.lookup(p.trim())).collect::<Result<Vec<_>, _>>().map(Word)
    }

    pub fn fmt_word(&self, w: &Word) -> String {
        if w.is_unit() {
            return String::from("1");
        }
        let parts: Vec<String> = w.0.iter().map(|&g| self.symbol(g)).collect();
        parts.join("*")
    }
}

/// A word; ordered degree-first, then lexicographically by generator rank.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Gen>);

impl Word {
    pub fn unit() -> Word {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, o: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        Word(v)
    }

    /// `prefix · middle · suffix` where `prefix = self[..at]`, `suffix = self[at + skip..]`.
    pub fn splice(&self, at: usize, skip: usize, middle: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() - skip + middle.len());
        v.extend_from_slice(&self.0[..at]);
        v.extend_from_slice(&middle.0);
        v.extend_from_slice(&self.0[at + skip..]);
        Word(v)
    }
}

impl Ord for Word {
    fn cmp(&self, o: &Word) -> Ordering {
        self.0.len().cmp(&o.0.len()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, o: &Word) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|g| alloc::format!("g{}", g.0)).collect();
        f.write_str(&parts.join("*"))
    }
}

#[cfg(test)]
mod tests;
