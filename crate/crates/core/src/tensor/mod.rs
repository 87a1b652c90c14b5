//! Typed multi-leg linear maps over two-dimensional legs and exact linear algebra on them.
//!
//! A basis index of an `n`-leg space is read row-major: leg 0 is the most significant bit,
//! and bit value 0 stands for the index `1` (or `1̄`), bit value 1 for `2` (or `2̄`).

mod linalg;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;

use crate::coeff::{eval_at, specialize, AtomValues, EvalError, Regime, Scalar, Substitution};

pub use linalg::{in_span, nullspace, rank, rref, same_span, Rref};

/// Unbarred (`ℂ²`) or barred (`ℂ̄²`) leg.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Leg {
    U,
    B,
}

impl Leg {
    pub fn bar(self) -> Leg {
        match self {
            Leg::U => Leg::B,
            Leg::B => Leg::U,
        }
    }
}

/// Ordered list of leg types.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Signature(Vec<Leg>);

impl Signature {
    pub fn new(legs: &[Leg]) -> Self {
        Signature(legs.to_vec())
    }

    pub fn empty() -> Self {
        Signature(Vec::new())
    }

    /// Parses a string of `U`/`B` letters, e.g. `"UBU"`.
    pub fn from_code(code: &str) -> Option<Self> {
        code.chars()
            .map(|c| match c {
                'U' => Some(Leg::U),
                'B' => Some(Leg::B),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(Signature)
    }

    pub fn legs(&self) -> &[Leg] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dim(&self) -> usize {
        1 << self.0.len()
    }

    pub fn bar(&self) -> Signature {
        Signature(self.0.iter().map(|l| l.bar()).collect())
    }

    pub fn concat(&self, o: &Signature) -> Signature {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        Signature(v)
    }

    pub fn reversed(&self) -> Signature {
        Signature(self.0.iter().rev().copied().collect())
    }

    fn splice(&self, start: usize, len: usize, with: &Signature) -> Signature {
        let mut v = self.0[..start].to_vec();
        v.extend_from_slice(&with.0);
        v.extend_from_slice(&self.0[start + len..]);
        Signature(v)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for l in &self.0 {
            write!(f, "{}", if *l == Leg::U { 'U' } else { 'B' })?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum TensorError {
    #[error("signature mismatch: expected {expected}, found {found}")]
    SignatureMismatch { expected: Signature, found: Signature },
    #[error("leg type mismatch at ambient position {position}")]
    TypeMismatch { position: usize },
    #[error("arity mismatch: {0}")]
    ArityMismatch(&'static str),
}

/// Entries a [`TMap`] can carry: exact [`Scalar`]s or sampled `Complex64` values.
pub trait Coefficient: Clone + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_int(n: i64) -> Self;
    fn inv(&self) -> Option<Self>;
}

impl Coefficient for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_int(n: i64) -> Self {
        Scalar::from_int(n)
    }
    fn inv(&self) -> Option<Self> {
        Scalar::inv(self)
    }
}

impl Coefficient for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    /// Exact zero only: numeric residuals are judged by [`TMap::max_norm`], never here.
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_int(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
    fn inv(&self) -> Option<Self> {
        if Coefficient::is_zero(self) {
            None
        } else {
            Some(Complex64::new(1.0, 0.0) / self)
        }
    }
}

/// Bit of leg `pos` in an index over `n` legs (0 ↔ index 1, 1 ↔ index 2).
#[inline]
pub fn leg_bit(idx: usize, pos: usize, n: usize) -> usize {
    (idx >> (n - 1 - pos)) & 1
}

/// Dense linear map `dom → cod`; rows index `cod`, columns index `dom`.
#[derive(Clone, Debug, PartialEq)]
pub struct TMap<C = Scalar> {
    dom: Signature,
    cod: Signature,
    data: Vec<C>,
}

impl<C: Coefficient> TMap<C> {
    pub fn zeros(cod: Signature, dom: Signature) -> Self {
        let n = cod.dim() * dom.dim();
        TMap { dom, cod, data: vec![C::zero(); n] }
    }

    pub fn identity(sig: Signature) -> Self {
        let mut m = TMap::zeros(sig.clone(), sig);
        for i in 0..m.rows() {
            m.set(i, i, C::one());
        }
        m
    }

    /// Builds from a function of `(row, col)`.
    pub fn from_fn<F: FnMut(usize, usize) -> C>(cod: Signature, dom: Signature, mut f: F) -> Self {
        let (r, c) = (cod.dim(), dom.dim());
        let mut data = Vec::with_capacity(r * c);
        for i in 0..r {
            for j in 0..c {
                data.push(f(i, j));
            }
        }
        TMap { dom, cod, data }
    }

    /// Builds from row-major entries. Panics on a length mismatch.
    pub fn from_rows(cod: Signature, dom: Signature, data: Vec<C>) -> Self {
        assert_eq!(data.len(), cod.dim() * dom.dim(), "entry count does not match signatures");
        TMap { dom, cod, data }
    }

    /// Builds from `(row, col, value)` triples; unlisted entries are zero, repeated ones add.
    pub fn from_entries<I: IntoIterator<Item = (usize, usize, C)>>(cod: Signature, dom: Signature, it: I) -> Self {
        let mut m: TMap<C> = TMap::zeros(cod, dom);
        for (i, j, v) in it {
            let s = m.get(i, j).add(&v);
            m.set(i, j, s);
        }
        m
    }

    pub fn dom(&self) -> &Signature {
        &self.dom
    }

    pub fn cod(&self) -> &Signature {
        &self.cod
    }

    pub fn rows(&self) -> usize {
        self.cod.dim()
    }

    pub fn cols(&self) -> usize {
        self.dom.dim()
    }

    pub fn get(&self, i: usize, j: usize) -> &C {
        &self.data[i * self.cols() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: C) {
        let c = self.cols();
        self.data[i * c + j] = v;
    }

    pub fn entries(&self) -> &[C] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[C] {
        let c = self.cols();
        &self.data[i * c..(i + 1) * c]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// First nonzero entry in row-major order.
    pub fn first_nonzero(&self) -> Option<(usize, usize, &C)> {
        let c = self.cols();
        self.data.iter().position(|x| !x.is_zero()).map(|k| (k / c, k % c, &self.data[k]))
    }

    pub fn map<D, F: FnMut(&C) -> D>(&self, f: F) -> TMap<D> {
        TMap { dom: self.dom.clone(), cod: self.cod.clone(), data: self.data.iter().map(f).collect() }
    }

    pub fn scale(&self, s: &C) -> Self {
        self.map(|x| x.mul(s))
    }

    pub fn neg(&self) -> Self {
        self.map(|x| x.neg())
    }

    fn zip(&self, o: &Self, f: impl Fn(&C, &C) -> C) -> Result<Self, TensorError> {
        self.same_shape(o)?;
        Ok(TMap {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            data: self.data.iter().zip(&o.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    fn same_shape(&self, o: &Self) -> Result<(), TensorError> {
        if self.dom != o.dom {
            return Err(TensorError::SignatureMismatch { expected: self.dom.clone(), found: o.dom.clone() });
        }
        if self.cod != o.cod {
            return Err(TensorError::SignatureMismatch { expected: self.cod.clone(), found: o.cod.clone() });
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self, TensorError> {
        self.zip(o, |a, b| if b.is_zero() { a.clone() } else { a.add(b) })
    }

    pub fn sub(&self, o: &Self) -> Result<Self, TensorError> {
        self.zip(o, |a, b| if b.is_zero() { a.clone() } else { a.sub(b) })
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &Self) -> Result<Self, TensorError> {
        if g.cod != self.dom {
            return Err(TensorError::SignatureMismatch { expected: self.dom.clone(), found: g.cod.clone() });
        }
        let (n, k, m) = (self.rows(), self.cols(), g.cols());
        let g_rows: Vec<Vec<(usize, &C)>> = (0..k)
            .map(|r| g.row(r).iter().enumerate().filter(|(_, x)| !x.is_zero()).collect())
            .collect();
        let mut data: Vec<C> = Vec::with_capacity(n * m);
        let mut acc: Vec<Option<C>> = vec![None; m];
        for i in 0..n {
            for (l, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for &(j, b) in &g_rows[l] {
                    let p = a.mul(b);
                    acc[j] = Some(match acc[j].take() {
                        None => p,
                        Some(s) => s.add(&p),
                    });
                }
            }
            data.extend(acc.iter_mut().map(|x| x.take().unwrap_or_else(C::zero)));
        }
        Ok(TMap { dom: g.dom.clone(), cod: self.cod.clone(), data })
    }

    /// Composes a chain left to right as written: `chain(&[a, b, c]) = a ∘ b ∘ c`.
    pub fn chain(maps: &[&Self]) -> Result<Self, TensorError> {
        let (last, rest) = maps.split_last().expect("empty chain");
        let mut acc = (*last).clone();
        for f in rest.iter().rev() {
            acc = f.compose(&acc)?;
        }
        Ok(acc)
    }

    /// Tensor product; `self`'s legs come first.
    pub fn kron(&self, o: &Self) -> Self {
        let (oc, orows) = (o.cols(), o.rows());
        TMap::from_fn(self.cod.concat(&o.cod), self.dom.concat(&o.dom), |i, j| {
            let a = self.get(i / orows, j / oc);
            if a.is_zero() {
                return C::zero();
            }
            let b = o.get(i % orows, j % oc);
            if b.is_zero() {
                C::zero()
            } else {
                a.mul(b)
            }
        })
    }

    /// `op` acting on the contiguous block of legs starting at `start` of `ambient`,
    /// identity elsewhere; `op` may change the number of legs (vectors and functionals).
    pub fn place_at(&self, start: usize, ambient: &Signature) -> Result<Self, TensorError> {
        let k = self.dom.len();
        if start + k > ambient.len() {
            return Err(TensorError::ArityMismatch("block runs past the ambient legs"));
        }
        for (p, l) in self.dom.legs().iter().enumerate() {
            if ambient.legs()[start + p] != *l {
                return Err(TensorError::TypeMismatch { position: start + p });
            }
        }
        let left = TMap::identity(Signature::new(&ambient.legs()[..start]));
        let right = TMap::identity(Signature::new(&ambient.legs()[start + k..]));
        let out = left.kron(self).kron(&right);
        debug_assert_eq!(out.cod, ambient.splice(start, k, &self.cod));
        Ok(out)
    }

    /// `op` acting on the (not necessarily adjacent or increasing) ambient positions `legs`,
    /// in that order; requires `op` to have as many output legs as input legs.
    pub fn place(&self, legs: &[usize], ambient: &Signature) -> Result<Self, TensorError> {
        let n = ambient.len();
        if legs.len() != self.dom.len() {
            return Err(TensorError::ArityMismatch("leg list length differs from the operator's input legs"));
        }
        if self.cod.len() != self.dom.len() {
            return Err(TensorError::ArityMismatch("non-square leg counts need place_at"));
        }
        for (a, &p) in legs.iter().enumerate() {
            if p >= n || legs[..a].contains(&p) {
                return Err(TensorError::ArityMismatch("leg positions must be distinct and in range"));
            }
            if ambient.legs()[p] != self.dom.legs()[a] {
                return Err(TensorError::TypeMismatch { position: p });
            }
        }
        let mut out_legs = ambient.legs().to_vec();
        for (a, &p) in legs.iter().enumerate() {
            out_legs[p] = self.cod.legs()[a];
        }
        let cod = Signature(out_legs);
        let k = legs.len();
        let mask: usize = legs.iter().map(|&p| 1usize << (n - 1 - p)).sum();
        let mut out = TMap::zeros(cod, ambient.clone());
        let dim = ambient.dim();
        for col in 0..dim {
            let sub_col = legs.iter().fold(0, |acc, &p| (acc << 1) | leg_bit(col, p, n));
            let rest = col & !mask;
            for sub_row in 0..self.rows() {
                let v = self.get(sub_row, sub_col);
                if v.is_zero() {
                    continue;
                }
                let mut row = rest;
                for (a, &p) in legs.iter().enumerate() {
                    row |= leg_bit(sub_row, a, k) << (n - 1 - p);
                }
                out.set(row, col, v.clone());
            }
        }
        Ok(out)
    }

    /// Leg permutation: input leg `i` goes to output position `perm[i]`.
    pub fn permutation(dom: &Signature, perm: &[usize]) -> Result<Self, TensorError> {
        let n = dom.len();
        if perm.len() != n {
            return Err(TensorError::ArityMismatch("permutation length differs from leg count"));
        }
        let mut out_legs = vec![Leg::U; n];
        let mut seen = vec![false; n];
        for (i, &p) in perm.iter().enumerate() {
            if p >= n || seen[p] {
                return Err(TensorError::ArityMismatch("not a permutation"));
            }
            seen[p] = true;
            out_legs[p] = dom.legs()[i];
        }
        let mut m = TMap::zeros(Signature(out_legs), dom.clone());
        for col in 0..dom.dim() {
            let mut row = 0;
            for (i, &p) in perm.iter().enumerate() {
                row |= leg_bit(col, i, n) << (n - 1 - p);
            }
            m.set(row, col, C::one());
        }
        Ok(m)
    }

    /// The flip `τ` on two legs of types `(a, b)`, mapping to `(b, a)`.
    pub fn flip(a: Leg, b: Leg) -> Self {
        TMap::permutation(&Signature::new(&[a, b]), &[1, 0]).expect("valid permutation")
    }

    /// Reverses the order of the legs on both sides: `ρ ∘ f ∘ ρ` with `ρ` the leg reversal.
    pub fn reverse_legs(&self) -> Self {
        let rev = |sig: &Signature| -> Self {
            let n = sig.len();
            let perm: Vec<usize> = (0..n).map(|i| n - 1 - i).collect();
            TMap::permutation(sig, &perm).expect("valid permutation")
        };
        let inner = self.compose(&rev(&self.dom.reversed())).expect("reversal matches");
        rev(&self.cod).compose(&inner).expect("reversal matches")
    }

    pub fn trace(&self) -> Result<C, TensorError> {
        if self.dom != self.cod {
            return Err(TensorError::SignatureMismatch { expected: self.dom.clone(), found: self.cod.clone() });
        }
        let mut acc = C::zero();
        for i in 0..self.rows() {
            let d = self.get(i, i);
            if !d.is_zero() {
                acc = acc.add(d);
            }
        }
        Ok(acc)
    }
}

impl TMap<Scalar> {
    /// Entrywise generic conjugation with every leg type toggled.
    pub fn bar_conjugate(&self) -> Self {
        TMap { dom: self.dom.bar(), cod: self.cod.bar(), data: self.data.iter().map(|x| x.star_generic()).collect() }
    }

    /// `τ f̄ τ` for a map with two input and two output legs.
    pub fn tau_conjugate(&self) -> Result<Self, TensorError> {
        if self.dom.len() != 2 || self.cod.len() != 2 {
            return Err(TensorError::ArityMismatch("tau_conjugate needs two input and two output legs"));
        }
        Ok(self.bar_conjugate().reverse_legs())
    }

    pub fn specialize(&self, r: Regime) -> Self {
        if r == Regime::Generic {
            return self.clone();
        }
        self.map(|x| specialize(x, r))
    }

    pub fn substitute(&self, s: &Substitution) -> Self {
        self.map(|x| s.apply(x))
    }

    pub fn eval(&self, v: &AtomValues) -> Result<TMap<Complex64>, EvalError> {
        let data = self
            .data
            .iter()
            .map(|x| if x.is_zero() { Ok(Complex64::new(0.0, 0.0)) } else { eval_at(x, v) })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(TMap { dom: self.dom.clone(), cod: self.cod.clone(), data })
    }

    /// Row-space basis as functionals on `dom`: their common kernel is `ker self`.
    pub fn annihilator_basis(&self) -> Vec<TMap<Scalar>> {
        let rows: Vec<Vec<Scalar>> = (0..self.rows()).map(|i| self.row(i).to_vec()).collect();
        rref(rows)
            .rows
            .into_iter()
            .map(|r| TMap::from_rows(Signature::empty(), self.dom.clone(), r))
            .collect()
    }

    pub fn rank(&self) -> usize {
        rank((0..self.rows()).map(|i| self.row(i).to_vec()).collect())
    }

    /// Kernel basis as vectors in `dom`.
    pub fn kernel_basis(&self) -> Vec<TMap<Scalar>> {
        let rows: Vec<Vec<Scalar>> = (0..self.rows()).map(|i| self.row(i).to_vec()).collect();
        nullspace(rows, self.cols())
            .into_iter()
            .map(|v| TMap::from_rows(self.dom.clone(), Signature::empty(), v))
            .collect()
    }
}

impl TMap<Complex64> {
    /// Largest entry modulus.
    pub fn max_norm(&self) -> f64 {
        // NaN (a pole hit while sampling) must not be swallowed by `f64::max`.
        self.data.iter().map(|z| libm::hypot(z.re, z.im)).fold(0.0, |a, b| if b.is_nan() || b > a { b } else { a })
    }
}

impl<C: Coefficient + fmt::Display> fmt::Display for TMap<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} -> {}", self.dom, self.cod)?;
        for i in 0..self.rows() {
            let row: Vec<alloc::string::String> = self.row(i).iter().map(|x| alloc::format!("{}", x)).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests;
