use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::index::{Delta, DeltaValue, Idx, Symbol};
use super::number::{Gauss, Q};
use super::phase::Phase;
use super::radical::Radical;
use super::{Binding, SymbolicError};

/// Everything in a scalar term except its numeric coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Key {
    syms: BTreeMap<Symbol, i32>,
    deltas: BTreeSet<Delta>,
    phase: Phase,
    rad: Radical,
}

impl Key {
    fn mul(&self, o: &Key) -> (Q, Key) {
        let mut syms = self.syms.clone();
        for (s, e) in &o.syms {
            let slot = syms.entry(s.clone()).or_insert(0);
            *slot += e;
            if *slot == 0 {
                syms.remove(s);
            }
        }
        let mut deltas = self.deltas.clone();
        deltas.extend(o.deltas.iter().cloned());
        let (r, rad) = self.rad.mul(&o.rad);
        (
            r,
            Key {
                syms,
                deltas,
                phase: self.phase.mul(&o.phase),
                rad,
            },
        )
    }

    pub fn phase(&self) -> &Phase {
        &self.phase
    }

    pub fn deltas(&self) -> impl Iterator<Item = &Delta> {
        self.deltas.iter()
    }

    pub fn radical(&self) -> &Radical {
        &self.rad
    }

    pub fn symbols(&self) -> impl Iterator<Item = (&Symbol, i32)> {
        self.syms.iter().map(|(s, e)| (s, *e))
    }

    /// Rebuilds the delta set after an index substitution; `None` if a delta
    /// evaluated to zero.
    fn subst(&self, var: &Symbol, to: &Idx) -> Option<Key> {
        let mut deltas = BTreeSet::new();
        for d in &self.deltas {
            match d.subst(var, to) {
                DeltaValue::Zero => return None,
                DeltaValue::One => {}
                DeltaValue::Symbolic(nd) => {
                    deltas.insert(nd);
                }
            }
        }
        Some(Key {
            deltas,
            ..self.clone()
        })
    }
}

/// Exact symbolic scalar: a canonical sum of monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar {
    terms: BTreeMap<Key, Gauss>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from(Gauss::one())
    }

    pub fn i() -> Self {
        Scalar::from(Gauss::i())
    }

    pub fn int(n: i64) -> Self {
        Scalar::from(Gauss::int(n))
    }

    pub fn rational(x: Q) -> Self {
        Scalar::from(Gauss::real(x))
    }

    fn monomial(c: Gauss, key: Key) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(key, c);
        }
        Scalar { terms }
    }

    pub fn sym(name: &str) -> Self {
        Scalar::sym_pow(name, 1)
    }

    pub fn sym_pow(name: &str, e: i32) -> Self {
        let mut key = Key::default();
        if e != 0 {
            key.syms.insert(Symbol::new(name), e);
        }
        Scalar::monomial(Gauss::one(), key)
    }

    pub fn delta(a: Idx, b: Idx) -> Self {
        match Delta::build(a, b) {
            DeltaValue::Zero => Scalar::zero(),
            DeltaValue::One => Scalar::one(),
            DeltaValue::Symbolic(d) => {
                let mut key = Key::default();
                key.deltas.insert(d);
                Scalar::monomial(Gauss::one(), key)
            }
        }
    }

    pub fn phase(p: Phase) -> Self {
        Scalar::monomial(
            Gauss::one(),
            Key {
                phase: p,
                ..Key::default()
            },
        )
    }

    pub fn radical(r: Radical) -> Self {
        Scalar::monomial(
            Gauss::one(),
            Key {
                rad: r,
                ..Key::default()
            },
        )
    }

    /// `x^{quarters/4}` for positive rational `x`.
    pub fn root(x: &Q, quarters: i64) -> Result<Self, SymbolicError> {
        let (r, rad) = Radical::root(x, quarters)?;
        Ok(Scalar::monomial(
            Gauss::real(r),
            Key {
                rad,
                ..Key::default()
            },
        ))
    }

    pub fn sqrt(x: &Q) -> Result<Self, SymbolicError> {
        Scalar::root(x, 2)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Key, &Gauss)> {
        self.terms.iter()
    }

    /// The value if this is a plain Gaussian rational (no symbols, radicals,
    /// deltas or phases).
    pub fn as_gauss(&self) -> Option<Gauss> {
        match self.terms.len() {
            0 => Some(Gauss::zero()),
            1 => {
                let (k, c) = self.terms.iter().next().unwrap();
                (*k == Key::default()).then(|| c.clone())
            }
            _ => None,
        }
    }

    fn add_term(&mut self, key: Key, c: Gauss) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(slot) => {
                *slot += &c;
                if slot.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add_assign(&mut self, o: &Scalar) {
        for (k, c) in &o.terms {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &Gauss) -> Scalar {
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn mul_ref(&self, o: &Scalar) -> Scalar {
        let mut out = Scalar::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &o.terms {
                let (r, k) = ka.mul(kb);
                out.add_term(k, (ca * cb).scale(&r));
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Scalar {
        let mut out = Scalar::one();
        for _ in 0..n {
            out = out.mul_ref(self);
        }
        out
    }

    /// Complex conjugate of coefficients and phases; symbols are treated as real.
    pub fn conj(&self) -> Scalar {
        let mut out = Scalar::zero();
        for (k, c) in &self.terms {
            let nk = Key {
                phase: k.phase.inv(),
                ..k.clone()
            };
            out.add_term(nk, c.conj());
        }
        out
    }

    /// Inverse of a single-term scalar without deltas.
    pub fn try_inv(&self) -> Option<Scalar> {
        if self.terms.len() != 1 {
            return None;
        }
        let (k, c) = self.terms.iter().next().unwrap();
        if !k.deltas.is_empty() {
            return None;
        }
        let ci = c.inv()?;
        let (r, rad) = k.rad.inv();
        let key = Key {
            syms: k.syms.iter().map(|(s, e)| (s.clone(), -e)).collect(),
            deltas: BTreeSet::new(),
            phase: k.phase.inv(),
            rad,
        };
        Some(Scalar::monomial(ci.scale(&r), key))
    }

    /// Replaces an index variable everywhere it occurs in delta factors.
    pub fn subst_idx(&self, var: &Symbol, to: &Idx) -> Scalar {
        let mut out = Scalar::zero();
        for (k, c) in &self.terms {
            if let Some(nk) = k.subst(var, to) {
                out.add_term(nk, c.clone());
            }
        }
        out
    }

    /// Sums the index variable `var` over the given lattice mode ids.
    ///
    /// A delta `δ(var, q)` sifts the sum to `var = q`. Terms without such a
    /// delta are summed explicitly when `allow_sum` is set and rejected
    /// otherwise.
    pub fn delta_contract(
        &self,
        var: &Symbol,
        ids: &[u32],
        allow_sum: bool,
    ) -> Result<Scalar, SymbolicError> {
        let mut out = Scalar::zero();
        for (k, c) in &self.terms {
            let binder = k.deltas.iter().find_map(|d| {
                d.partner(var)
                    .filter(|p| **p != Idx::Var(var.clone()))
                    .cloned()
                    .map(|p| (d.clone(), p))
            });
            match binder {
                Some((d, partner)) => {
                    let mut rest = k.clone();
                    rest.deltas.remove(&d);
                    if let Some(nk) = rest.subst(var, &partner) {
                        out.add_term(nk, c.clone());
                    }
                }
                None if allow_sum => {
                    for id in ids {
                        if let Some(nk) = k.subst(var, &Idx::Val(*id)) {
                            out.add_term(nk, c.clone());
                        }
                    }
                }
                None => return Err(SymbolicError::UnboundIndex(var.to_string())),
            }
        }
        Ok(out)
    }

    /// Spatial integral over a point label (unit-weight lattice normalisation).
    pub fn integrate_space(&self, label: &Symbol) -> Scalar {
        let mut out = Scalar::zero();
        for (k, c) in &self.terms {
            if let Some(p) = k.phase.integrate_space(label) {
                out.add_term(
                    Key {
                        phase: p,
                        ..k.clone()
                    },
                    c.clone(),
                );
            }
        }
        out
    }

    /// Groups terms by phase; each group is returned without its phase.
    pub fn split_by_phase(&self) -> BTreeMap<Phase, Scalar> {
        let mut out: BTreeMap<Phase, Scalar> = BTreeMap::new();
        for (k, c) in &self.terms {
            let nk = Key {
                phase: Phase::one(),
                ..k.clone()
            };
            out.entry(k.phase.clone())
                .or_default()
                .add_term(nk, c.clone());
        }
        out
    }

    pub fn has_time_phase(&self) -> bool {
        self.terms.keys().any(|k| k.phase.has_time())
    }

    /// Partial derivative with respect to a formal symbol.
    pub fn diff_sym(&self, s: &Symbol) -> Scalar {
        let mut out = Scalar::zero();
        for (k, c) in &self.terms {
            if let Some(e) = k.syms.get(s).copied() {
                let mut nk = k.clone();
                if e == 1 {
                    nk.syms.remove(s);
                } else {
                    nk.syms.insert(s.clone(), e - 1);
                }
                out.add_term(nk, c.scale(&Q::from_integer(e.into())));
            }
        }
        out
    }

    /// Substitutes a rational value for a formal symbol.
    pub fn bind_sym(&self, s: &Symbol, v: &Q) -> Scalar {
        let mut out = Scalar::zero();
        for (k, c) in &self.terms {
            match k.syms.get(s).copied() {
                Some(e) => {
                    let mut nk = k.clone();
                    nk.syms.remove(s);
                    let f = if e >= 0 {
                        num_traits::pow(v.clone(), e as usize)
                    } else {
                        Q::one() / num_traits::pow(v.clone(), (-e) as usize)
                    };
                    out.add_term(nk, c.scale(&f));
                }
                None => out.add_term(k.clone(), c.clone()),
            }
        }
        out
    }

    pub fn eval(&self, b: &Binding) -> Result<Complex64, SymbolicError> {
        let mut total = Complex64::zero();
        for (k, c) in &self.terms {
            let mut v = c.to_c64() * k.rad.to_f64();
            for (s, e) in &k.syms {
                let x = b
                    .syms
                    .get(s)
                    .ok_or_else(|| SymbolicError::Unbound(s.to_string()))?;
                v *= x.powi(*e);
            }
            for d in &k.deltas {
                let (a, bb) = d.args();
                let get = |i: &Idx| -> Result<u32, SymbolicError> {
                    match i {
                        Idx::Val(v) => Ok(*v),
                        Idx::Var(s) => b
                            .indices
                            .get(s)
                            .copied()
                            .ok_or_else(|| SymbolicError::Unbound(s.to_string())),
                    }
                };
                if get(a)? != get(bb)? {
                    v = Complex64::zero();
                }
            }
            let ph = k.phase.value(b)?;
            total += v * Complex64::new(0.0, ph).exp();
        }
        Ok(total)
    }

    /// Largest absolute coefficient, as a crude size for reports.
    pub fn max_abs_coeff(&self) -> f64 {
        self.terms
            .iter()
            .map(|(k, c)| c.to_c64().norm() * k.rad.to_f64())
            .fold(0.0, f64::max)
    }
}

impl From<Gauss> for Scalar {
    fn from(c: Gauss) -> Self {
        Scalar::monomial(c, Key::default())
    }
}

impl From<Q> for Scalar {
    fn from(x: Q) -> Self {
        Scalar::rational(x)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        let mut out = self.clone();
        out.add_assign(o);
        out
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(mut self, o: Scalar) -> Scalar {
        self.add_assign(&o);
        self
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        self + &(-o)
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, o: Scalar) -> Scalar {
        &self - &o
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        self.mul_ref(o)
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, o: Scalar) -> Scalar {
        self.mul_ref(&o)
    }
}

fn fmt_key(k: &Key) -> String {
    let mut parts = Vec::new();
    for (s, e) in &k.syms {
        if *e == 1 {
            parts.push(s.to_string());
        } else {
            parts.push(format!("{s}^{e}"));
        }
    }
    if !k.rad.is_one() {
        parts.push(k.rad.to_string());
    }
    for d in &k.deltas {
        parts.push(d.to_string());
    }
    if !k.phase.is_one() {
        parts.push(k.phase.to_string());
    }
    parts.join("·")
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let body = fmt_key(k);
            match (body.is_empty(), c.is_one()) {
                (true, _) => write!(f, "{c}")?,
                (false, true) => write!(f, "{body}")?,
                (false, false) => write!(f, "{c}·{body}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::number::{q, qr};

    #[test]
    fn rational_addition() {
        assert_eq!(&Scalar::int(2) + &Scalar::int(3), Scalar::int(5));
    }

    #[test]
    fn delta_symmetry_merges_terms() {
        let m = Scalar::sym("m");
        let a = &m * &Scalar::delta(Idx::var("p"), Idx::var("q"));
        let b = &m * &Scalar::delta(Idx::var("q"), Idx::var("p"));
        let sum = &a + &b;
        assert_eq!(sum, &Scalar::int(2) * &a);
        assert_eq!(sum.len(), 1);
    }

    #[test]
    fn cancellation_leaves_empty_sum() {
        let x = Scalar::sym("x");
        assert!((&x + &(-&x)).is_zero());
    }

    #[test]
    fn sifting_and_composition() {
        let ids = [0, 1, 2];
        let p = Idx::var("p");
        let q_ = Symbol::new("q");
        let f = Scalar::sym("f");
        let e = &f * &Scalar::delta(p.clone(), Idx::Var(q_.clone()));
        assert_eq!(e.delta_contract(&q_, &ids, false).unwrap(), f);
        let comp = &Scalar::delta(p.clone(), Idx::Var(q_.clone()))
            * &Scalar::delta(Idx::Var(q_.clone()), Idx::var("r"));
        assert_eq!(
            comp.delta_contract(&q_, &ids, false).unwrap(),
            Scalar::delta(p, Idx::var("r"))
        );
    }

    #[test]
    fn free_sum_counts_modes() {
        let ids = [0, 1, 2];
        let q_ = Symbol::new("q");
        assert_eq!(
            Scalar::one().delta_contract(&q_, &ids, true).unwrap(),
            Scalar::int(3)
        );
        assert!(Scalar::one().delta_contract(&q_, &ids, false).is_err());
    }

    #[test]
    fn concrete_deltas_evaluate() {
        assert!(Scalar::delta(Idx::Val(1), Idx::Val(2)).is_zero());
        assert_eq!(Scalar::delta(Idx::Val(1), Idx::Val(1)), Scalar::one());
    }

    #[test]
    fn radicals_multiply_exactly() {
        // (2·5)^{-1/4} squared twice is 1/10
        let w = Scalar::root(&q(10), -1).unwrap();
        assert_eq!(w.pow(4), Scalar::rational(qr(1, 10)));
        let s2 = Scalar::sqrt(&q(2)).unwrap();
        assert_eq!(&s2 * &s2, Scalar::int(2));
    }

    #[test]
    fn monomial_inverse() {
        let x = &Scalar::sym("m") * &Scalar::sqrt(&q(3)).unwrap().scale(&Gauss::i());
        let xi = x.try_inv().unwrap();
        assert_eq!(&x * &xi, Scalar::one());
        assert!((&Scalar::sym("m") + &Scalar::one()).try_inv().is_none());
    }

    #[test]
    fn symbol_derivative() {
        let xi = Symbol::new("xi");
        let e = &Scalar::sym_pow("xi", 2).scale(&Gauss::int(3)) + &Scalar::sym("m");
        assert_eq!(e.diff_sym(&xi), Scalar::sym("xi").scale(&Gauss::int(6)));
    }
}
