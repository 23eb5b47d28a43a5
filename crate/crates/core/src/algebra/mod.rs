//! The ℤ₂-graded operator algebra: words of generators in canonical order,
//! Koszul-signed products, super-brackets and normal ordering.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::symbolic::{Gauss, Idx, Scalar, Symbol, SymbolicError};

mod gen;

pub use gen::{OpGen, Pos, Sector, Species};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlgebraError {
    #[error("super-bracket needs operands of definite parity")]
    MixedParity,
    #[error(transparent)]
    Symbolic(#[from] SymbolicError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
    Mixed,
}

impl Parity {
    pub fn of_bool(odd: bool) -> Parity {
        if odd {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
}

/// How an absorption crossing an emission is resolved.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    /// The contraction term is kept.
    Physical,
    /// Pure reordering: contraction terms are dropped.
    Modified,
}

pub type Word = Vec<OpGen>;

pub fn word_odd(w: &[OpGen]) -> bool {
    w.iter().filter(|g| g.odd()).count() % 2 == 1
}

/// Formal sum of canonical words with scalar coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedExpr {
    terms: BTreeMap<Word, Scalar>,
}

/// Reorders one word into canonical order, returning the weighted canonical
/// words it expands to.
fn reorder(coeff: Scalar, word: Word, rule: Rule, out: &mut GradedExpr) {
    let mut stack = vec![(coeff, word)];
    while let Some((c, w)) = stack.pop() {
        if c.is_zero() {
            continue;
        }
        let bad = (0..w.len().saturating_sub(1))
            .find(|&i| w[i] > w[i + 1] || (w[i] == w[i + 1] && w[i].odd()));
        let Some(i) = bad else {
            out.add_term(w, c);
            continue;
        };
        if w[i] == w[i + 1] {
            continue;
        }
        if rule == Rule::Physical {
            if let Some(k) = OpGen::contraction(&w[i], &w[i + 1]) {
                let mut rest = w.clone();
                rest.drain(i..i + 2);
                stack.push((&c * &k, rest));
            }
        }
        let sign = w[i].odd() && w[i + 1].odd();
        let mut sw = w;
        sw.swap(i, i + 1);
        stack.push((if sign { -c } else { c }, sw));
    }
}

impl GradedExpr {
    pub fn zero() -> Self {
        GradedExpr::default()
    }

    pub fn scalar(c: Scalar) -> Self {
        let mut e = GradedExpr::zero();
        e.add_term(Vec::new(), c);
        e
    }

    pub fn one() -> Self {
        GradedExpr::scalar(Scalar::one())
    }

    pub fn gen(g: OpGen) -> Self {
        GradedExpr::word(vec![g], Scalar::one(), Rule::Physical)
    }

    /// Coefficient times a word in any order, reordered with `rule`.
    pub fn word(w: Word, c: Scalar, rule: Rule) -> Self {
        let mut e = GradedExpr::zero();
        reorder(c, w, rule, &mut e);
        e
    }

    fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(slot) => {
                slot.add_assign(&c);
                if slot.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add_assign(&mut self, o: &GradedExpr) {
        for (w, c) in &o.terms {
            self.add_term(w.clone(), c.clone());
        }
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

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    /// Coefficient of the empty word.
    pub fn scalar_part(&self) -> Scalar {
        self.terms.get(&Vec::new()).cloned().unwrap_or_default()
    }

    /// The coefficient if the expression is a multiple of the identity.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Scalar) -> GradedExpr {
        let mut out = GradedExpr::zero();
        for (w, k) in &self.terms {
            out.add_term(w.clone(), k * c);
        }
        out
    }

    pub fn scale_gauss(&self, c: &Gauss) -> GradedExpr {
        self.scale(&Scalar::from(c.clone()))
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, mut f: impl FnMut(&Scalar) -> Scalar) -> GradedExpr {
        let mut out = GradedExpr::zero();
        for (w, k) in &self.terms {
            out.add_term(w.clone(), f(k));
        }
        out
    }

    pub fn fallible_map_coeffs<E>(
        &self,
        mut f: impl FnMut(&Scalar) -> Result<Scalar, E>,
    ) -> Result<GradedExpr, E> {
        let mut out = GradedExpr::zero();
        for (w, k) in &self.terms {
            out.add_term(w.clone(), f(k)?);
        }
        Ok(out)
    }

    pub fn parity(&self) -> Parity {
        let mut it = self.terms.keys().map(|w| word_odd(w));
        match it.next() {
            None => Parity::Even,
            Some(first) => {
                if it.all(|o| o == first) {
                    Parity::of_bool(first)
                } else {
                    Parity::Mixed
                }
            }
        }
    }

    /// Substitutes an index variable in generators and coefficients.
    pub fn subst_idx(&self, var: &Symbol, to: &Idx) -> GradedExpr {
        let mut out = GradedExpr::zero();
        for (w, c) in &self.terms {
            let nw: Word = w
                .iter()
                .map(|g| OpGen {
                    mode: g.mode.subst(var, to),
                    internal: g.internal.subst(var, to),
                    ..g.clone()
                })
                .collect();
            out.merge(GradedExpr::word(nw, c.subst_idx(var, to), Rule::Modified));
        }
        out
    }

    fn merge(&mut self, o: GradedExpr) {
        for (w, c) in o.terms {
            self.add_term(w, c);
        }
    }

    /// Sums an index variable over `ids`, sifting through deltas in the
    /// coefficients. Words mentioning the variable are summed explicitly.
    pub fn sum_index(&self, var: &Symbol, ids: &[u32]) -> Result<GradedExpr, SymbolicError> {
        let v = Idx::Var(var.clone());
        let mut out = GradedExpr::zero();
        for (w, c) in &self.terms {
            let in_word = w.iter().any(|g| g.mode == v || g.internal == v);
            if !in_word {
                out.add_term(w.clone(), c.delta_contract(var, ids, true)?);
                continue;
            }
            let single = GradedExpr {
                terms: BTreeMap::from([(w.clone(), c.clone())]),
            };
            for id in ids {
                out.merge(single.subst_idx(var, &Idx::Val(*id)));
            }
        }
        Ok(out)
    }

    /// Spatial integral of every coefficient over a point label.
    pub fn integrate_space(&self, label: &Symbol) -> GradedExpr {
        self.map_coeffs(|c| c.integrate_space(label))
    }

    pub fn has_time_phase(&self) -> bool {
        self.terms.values().any(|c| c.has_time_phase())
    }

    /// Total number of scalar monomials, a size measure for reports.
    pub fn term_count(&self) -> usize {
        self.terms.values().map(|c| c.len()).sum()
    }
}

/// Product of two expressions with the given reordering rule.
pub fn koszul_product(a: &GradedExpr, b: &GradedExpr, rule: Rule) -> GradedExpr {
    let mut out = GradedExpr::zero();
    for (wa, ca) in &a.terms {
        for (wb, cb) in &b.terms {
            let mut w = wa.clone();
            w.extend(wb.iter().cloned());
            reorder(ca * cb, w, rule, &mut out);
        }
    }
    out
}

/// `⟦X,Y⟧ = XY − (−1)^{|X||Y|} YX` with the physical rule.
pub fn super_bracket(a: &GradedExpr, b: &GradedExpr) -> Result<GradedExpr, AlgebraError> {
    let (pa, pb) = (a.parity(), b.parity());
    if pa == Parity::Mixed || pb == Parity::Mixed {
        return Err(AlgebraError::MixedParity);
    }
    let ab = koszul_product(a, b, Rule::Physical);
    let ba = koszul_product(b, a, Rule::Physical);
    if pa == Parity::Odd && pb == Parity::Odd {
        Ok(&ab + &ba)
    } else {
        Ok(&ab - &ba)
    }
}

/// Rewrites every word in normal order with contraction terms dropped.
pub fn normal_order(e: &GradedExpr) -> GradedExpr {
    let mut out = GradedExpr::zero();
    for (w, c) in &e.terms {
        reorder(c.clone(), w.clone(), Rule::Modified, &mut out);
    }
    out
}

pub fn parity_of(e: &GradedExpr) -> Parity {
    e.parity()
}

impl Add for &GradedExpr {
    type Output = GradedExpr;
    fn add(self, o: &GradedExpr) -> GradedExpr {
        let mut out = self.clone();
        out.add_assign(o);
        out
    }
}

impl Add for GradedExpr {
    type Output = GradedExpr;
    fn add(mut self, o: GradedExpr) -> GradedExpr {
        self.merge(o);
        self
    }
}

impl Neg for &GradedExpr {
    type Output = GradedExpr;
    fn neg(self) -> GradedExpr {
        self.map_coeffs(|c| -c)
    }
}

impl Neg for GradedExpr {
    type Output = GradedExpr;
    fn neg(self) -> GradedExpr {
        -&self
    }
}

impl Sub for &GradedExpr {
    type Output = GradedExpr;
    fn sub(self, o: &GradedExpr) -> GradedExpr {
        self + &(-o)
    }
}

impl Sub for GradedExpr {
    type Output = GradedExpr;
    fn sub(self, o: GradedExpr) -> GradedExpr {
        &self - &o
    }
}

impl Mul for &GradedExpr {
    type Output = GradedExpr;
    fn mul(self, o: &GradedExpr) -> GradedExpr {
        koszul_product(self, o, Rule::Physical)
    }
}

impl From<OpGen> for GradedExpr {
    fn from(g: OpGen) -> Self {
        GradedExpr::gen(g)
    }
}

impl From<Scalar> for GradedExpr {
    fn from(c: Scalar) -> Self {
        GradedExpr::scalar(c)
    }
}

impl fmt::Display for GradedExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, "\n+ ")?;
            }
            if w.is_empty() {
                write!(f, "{c}")?;
            } else {
                let ws: Vec<String> = w.iter().map(|g| g.to_string()).collect();
                write!(f, "({c})·{}", ws.join(" "))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(n: &str) -> Idx {
        Idx::var(n)
    }

    #[test]
    fn already_normal_word_is_unchanged() {
        let w = vec![
            OpGen::a_dag_low(Sector::Scalar, v("p"), Idx::Val(1)),
            OpGen::a_up(Sector::Scalar, v("q"), Idx::Val(1)),
        ];
        for rule in [Rule::Physical, Rule::Modified] {
            let e = GradedExpr::word(w.clone(), Scalar::one(), rule);
            assert_eq!(e.len(), 1);
            assert_eq!(e.terms().next().unwrap().0, &w);
        }
    }

    #[test]
    fn modified_rule_drops_contraction() {
        for (sector, sign) in [(Sector::Scalar, 1), (Sector::DiracParticle, -1)] {
            let a = GradedExpr::gen(OpGen::a_up(sector, v("p"), v("al")));
            let ad = GradedExpr::gen(OpGen::a_dag_low(sector, v("q"), v("be")));
            let m = koszul_product(&a, &ad, Rule::Modified);
            let expect = GradedExpr::word(
                vec![
                    OpGen::a_dag_low(sector, v("q"), v("be")),
                    OpGen::a_up(sector, v("p"), v("al")),
                ],
                Scalar::int(sign),
                Rule::Modified,
            );
            assert_eq!(m, expect);
            let p = koszul_product(&a, &ad, Rule::Physical);
            let d = &Scalar::delta(v("al"), v("be")) * &Scalar::delta(v("p"), v("q"));
            assert_eq!(p, &expect + &GradedExpr::scalar(d));
        }
    }

    #[test]
    fn elementary_bracket_values() {
        let a = GradedExpr::gen(OpGen::a_up(Sector::Scalar, v("p"), v("al")));
        let ad = GradedExpr::gen(OpGen::a_dag_low(Sector::Scalar, v("q"), v("be")));
        let d = &Scalar::delta(v("al"), v("be")) * &Scalar::delta(v("p"), v("q"));
        assert_eq!(super_bracket(&a, &ad).unwrap(), GradedExpr::scalar(d));
        let al = GradedExpr::gen(OpGen::a_low(Sector::Scalar, v("p"), v("al")));
        assert!(super_bracket(&al, &ad).unwrap().is_zero());
    }

    #[test]
    fn repeated_fermion_vanishes() {
        let c = GradedExpr::gen(OpGen::a_up(Sector::Ghost, Idx::Val(0), Idx::Val(0)));
        assert!(koszul_product(&c, &c, Rule::Physical).is_zero());
        assert!(super_bracket(&c, &c).unwrap().is_zero());
    }

    #[test]
    fn parity_classification() {
        let g = GradedExpr::gen(OpGen::a_dag_low(Sector::Ghost, Idx::Val(1), Idx::Val(0)));
        assert_eq!(g.parity(), Parity::Odd);
        let b = GradedExpr::gen(OpGen::b(0, Idx::Val(0), Idx::Val(1)));
        assert_eq!((&g * &g.clone()).parity(), Parity::Even);
        assert_eq!((&g + &b).parity(), Parity::Mixed);
        assert_eq!(
            super_bracket(&(&g + &b), &b),
            Err(AlgebraError::MixedParity)
        );
    }

    #[test]
    fn gauge_pairing_uses_metric() {
        let b1 = GradedExpr::gen(OpGen::b(1, Idx::Val(0), Idx::Val(0)));
        let bd1 = GradedExpr::gen(OpGen::b_dag(1, Idx::Val(0), Idx::Val(0)));
        assert_eq!(
            super_bracket(&b1, &bd1).unwrap(),
            GradedExpr::scalar(Scalar::int(-1))
        );
        let b0 = GradedExpr::gen(OpGen::b(0, Idx::Val(0), Idx::Val(0)));
        let bd0 = GradedExpr::gen(OpGen::b_dag(0, Idx::Val(0), Idx::Val(0)));
        assert_eq!(super_bracket(&b0, &bd0).unwrap(), GradedExpr::one());
        assert!(super_bracket(&b0, &bd1).unwrap().is_zero());
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn gen() -> impl Strategy<Value = OpGen> {
        let sector = prop_oneof![
            Just(Sector::Scalar),
            Just(Sector::DiracParticle),
            Just(Sector::Ghost),
            Just(Sector::Gauge)
        ];
        (sector, any::<bool>(), any::<bool>(), 0u32..2, 0u32..2).prop_map(
            |(s, emit, upper, m, i)| {
                let species = if emit { Species::Emit } else { Species::Absorb };
                let pos = if upper { Pos::Upper } else { Pos::Lower };
                let mut g = OpGen::new(species, pos, s, Idx::Val(m), Idx::Val(i));
                if s == Sector::Gauge {
                    g.aux = i as u8;
                }
                g
            },
        )
    }

    fn monomial() -> impl Strategy<Value = GradedExpr> {
        (prop::collection::vec(gen(), 0..4), -2i64..3).prop_map(|(w, c)| {
            GradedExpr::word(w, Scalar::int(if c == 0 { 1 } else { c }), Rule::Physical)
        })
    }

    fn word_odd_expr(e: &GradedExpr) -> bool {
        e.parity() == Parity::Odd
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(96))]

        #[test]
        fn super_antisymmetry(x in monomial(), y in monomial()) {
            prop_assume!(x.parity() != Parity::Mixed && y.parity() != Parity::Mixed);
            let xy = super_bracket(&x, &y).unwrap();
            let yx = super_bracket(&y, &x).unwrap();
            let s = if word_odd_expr(&x) && word_odd_expr(&y) { 1 } else { -1 };
            prop_assert_eq!(xy, yx.scale(&Scalar::int(s)));
        }

        #[test]
        fn graded_jacobi(x in monomial(), y in monomial(), z in monomial()) {
            for e in [&x, &y, &z] {
                prop_assume!(e.parity() != Parity::Mixed);
            }
            let lhs = super_bracket(&x, &super_bracket(&y, &z).unwrap()).unwrap();
            let r1 = super_bracket(&super_bracket(&x, &y).unwrap(), &z).unwrap();
            let r2 = super_bracket(&y, &super_bracket(&x, &z).unwrap()).unwrap();
            let s = if word_odd_expr(&x) && word_odd_expr(&y) { -1 } else { 1 };
            prop_assert_eq!(lhs, &r1 + &r2.scale(&Scalar::int(s)));
        }

        #[test]
        fn normal_order_idempotent(x in monomial(), y in monomial()) {
            let e = koszul_product(&x, &y, Rule::Physical);
            let n = normal_order(&e);
            prop_assert_eq!(normal_order(&n), n);
        }

        #[test]
        fn koszul_exchange_without_contractions(x in monomial(), y in monomial()) {
            let contracts = x.terms().any(|(wx, _)| y.terms().any(|(wy, _)| {
                wx.iter().any(|a| wy.iter().any(|b| {
                    OpGen::contraction(a, b).is_some() || OpGen::contraction(b, a).is_some()
                }))
            }));
            prop_assume!(!contracts);
            let s = if word_odd_expr(&x) && word_odd_expr(&y) { -1 } else { 1 };
            prop_assert_eq!(
                koszul_product(&x, &y, Rule::Physical),
                koszul_product(&y, &x, Rule::Physical).scale(&Scalar::int(s))
            );
        }

        #[test]
        fn product_is_associative(x in monomial(), y in monomial(), z in monomial()) {
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        }
    }
}
