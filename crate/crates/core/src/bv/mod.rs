//! Fiber polynomials in fields, antifields and their jets, with graded
//! derivatives, the BV Laplacian and the antibracket.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;
use thiserror::Error;

use crate::algebra::Parity;
use crate::symbolic::{Scalar, SymbolicError};

mod brst;

pub use brst::{
    brst_operator, fp_current_target, free_ghost_lagrangian, ghost_lagrangian_decompose,
    ghost_number_symmetry, horizontal_diff, matter_gauge_lagrangian, noether_current,
    Decomposition, TheorySpec, Vertical,
};

/// Highest total jet order a coordinate may carry.
pub const JET_CAP: u8 = 2;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BvError {
    #[error("jet order of {0} would exceed {JET_CAP}")]
    JetOverflow(String),
    #[error("antibracket needs operands of definite parity")]
    MixedParity,
    #[error("coordinate {0} is outside the theory")]
    OutsideTheory(String),
    #[error("not a symmetry: δℓ − d_H𝒩 leaves {0} terms")]
    NotSymmetry(usize),
    #[error("noether order must be 1 or 2, got {0}")]
    BadOrder(u8),
    #[error(transparent)]
    Symbolic(#[from] SymbolicError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    Field,
    Antifield,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Name {
    /// `ψ^{αi}`: `a` spinor, `b` internal.
    Psi,
    /// `ψ̄_{αi}`.
    PsiBar,
    /// `A^I_λ`: `a` Lie index, `b` form index.
    Gauge,
    Ghost,
    AntiGhost,
    /// Nakanishi–Lautrup `n_I`.
    Aux,
    /// Generic coordinate `y[a]`, odd iff `b == 1`.
    Y,
}

impl Name {
    fn odd(self, b: u8) -> bool {
        match self {
            Name::Psi | Name::PsiBar | Name::Ghost | Name::AntiGhost => true,
            Name::Gauge | Name::Aux => false,
            Name::Y => b == 1,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Name::Psi => "ψ",
            Name::PsiBar => "ψ̄",
            Name::Gauge => "A",
            Name::Ghost => "ω",
            Name::AntiGhost => "ω̄",
            Name::Aux => "n",
            Name::Y => "y",
        }
    }
}

/// A fiber coordinate `y^i_Λ` or antifield `ỹ_i`; `jet[λ]` counts
/// derivatives along `x^λ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiberCoord {
    pub kind: Kind,
    pub name: Name,
    pub a: u8,
    pub b: u8,
    pub jet: [u8; 4],
}

impl FiberCoord {
    pub fn field(name: Name, a: u8, b: u8) -> Self {
        FiberCoord {
            kind: Kind::Field,
            name,
            a,
            b,
            jet: [0; 4],
        }
    }

    pub fn psi(alpha: u8, i: u8) -> Self {
        Self::field(Name::Psi, alpha, i)
    }

    pub fn psi_bar(alpha: u8, i: u8) -> Self {
        Self::field(Name::PsiBar, alpha, i)
    }

    pub fn gauge(i: u8, lambda: u8) -> Self {
        Self::field(Name::Gauge, i, lambda)
    }

    pub fn ghost(i: u8) -> Self {
        Self::field(Name::Ghost, i, 0)
    }

    pub fn antighost(i: u8) -> Self {
        Self::field(Name::AntiGhost, i, 0)
    }

    pub fn aux(i: u8) -> Self {
        Self::field(Name::Aux, i, 0)
    }

    pub fn y(k: u8, odd: bool) -> Self {
        Self::field(Name::Y, k, odd as u8)
    }

    pub fn antifield(&self) -> Self {
        FiberCoord {
            kind: match self.kind {
                Kind::Field => Kind::Antifield,
                Kind::Antifield => Kind::Field,
            },
            ..*self
        }
    }

    pub fn odd(&self) -> bool {
        self.name.odd(self.b) ^ (self.kind == Kind::Antifield)
    }

    pub fn order(&self) -> u8 {
        self.jet.iter().sum()
    }

    pub fn base(&self) -> Self {
        FiberCoord {
            jet: [0; 4],
            ..*self
        }
    }

    pub fn is_base(&self) -> bool {
        self.order() == 0
    }

    /// The coordinate with one more derivative along `x^λ`.
    pub fn prolong(&self, lambda: usize) -> Result<Self, BvError> {
        if self.order() >= JET_CAP {
            return Err(BvError::JetOverflow(self.to_string()));
        }
        let mut c = *self;
        c.jet[lambda] += 1;
        Ok(c)
    }

    pub fn d(&self, lambda: usize) -> Self {
        let mut c = *self;
        c.jet[lambda] += 1;
        c
    }
}

impl fmt::Display for FiberCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name.symbol())?;
        if self.kind == Kind::Antifield {
            write!(f, "*")?;
        }
        match self.name {
            Name::Psi | Name::PsiBar | Name::Gauge => write!(f, "[{},{}]", self.a, self.b)?,
            _ => write!(f, "[{}]", self.a)?,
        }
        if self.order() > 0 {
            write!(f, "_,")?;
            for (l, n) in self.jet.iter().enumerate() {
                for _ in 0..*n {
                    write!(f, "{l}")?;
                }
            }
        }
        Ok(())
    }
}

pub type Monomial = Vec<FiberCoord>;

fn mono_odd(w: &[FiberCoord]) -> bool {
    w.iter().filter(|c| c.odd()).count() % 2 == 1
}

/// Sorts a word into canonical order; returns the Koszul sign, or `None` if
/// an odd coordinate repeats.
fn canonical(mut w: Monomial) -> Option<(bool, Monomial)> {
    let mut neg = false;
    for i in 1..w.len() {
        let mut j = i;
        while j > 0 && w[j - 1] > w[j] {
            if w[j - 1].odd() && w[j].odd() {
                neg = !neg;
            }
            w.swap(j - 1, j);
            j -= 1;
        }
    }
    if w.windows(2).any(|p| p[0] == p[1] && p[0].odd()) {
        return None;
    }
    Some((neg, w))
}

/// Graded-commutative polynomial over exact scalars.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FiberPoly {
    terms: BTreeMap<Monomial, Scalar>,
}

impl FiberPoly {
    pub fn zero() -> Self {
        FiberPoly::default()
    }

    pub fn constant(c: Scalar) -> Self {
        let mut p = FiberPoly::zero();
        p.push(Vec::new(), c);
        p
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn var(c: FiberCoord) -> Self {
        Self::monomial(vec![c], Scalar::one())
    }

    /// Product of coordinates in the given order.
    pub fn monomial(w: Monomial, c: Scalar) -> Self {
        let mut p = FiberPoly::zero();
        if let Some((neg, w)) = canonical(w) {
            p.push(w, if neg { -c } else { c });
        }
        p
    }

    fn push(&mut self, w: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w).or_default();
        e.add_assign(&c);
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &Scalar) -> FiberPoly {
        let mut out = FiberPoly::zero();
        for (w, v) in &self.terms {
            out.push(w.clone(), v * c);
        }
        out
    }

    pub fn parity(&self) -> Parity {
        let mut it = self.terms.keys().map(|w| mono_odd(w));
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

    pub fn coords(&self) -> std::collections::BTreeSet<FiberCoord> {
        self.terms.keys().flatten().copied().collect()
    }

    pub fn max_jet(&self) -> u8 {
        self.coords().iter().map(|c| c.order()).max().unwrap_or(0)
    }

    /// Coefficientwise map.
    pub fn map_coeffs(&self, mut f: impl FnMut(&Scalar) -> Scalar) -> FiberPoly {
        let mut out = FiberPoly::zero();
        for (w, v) in &self.terms {
            out.push(w.clone(), f(v));
        }
        out
    }

    /// Termwise rebuild: `f(prefix, k, suffix)` for every position `k`.
    fn each_position(
        &self,
        mut f: impl FnMut(
            &Scalar,
            &[FiberCoord],
            &FiberCoord,
            &[FiberCoord],
        ) -> Result<FiberPoly, BvError>,
    ) -> Result<FiberPoly, BvError> {
        let mut out = FiberPoly::zero();
        for (w, v) in &self.terms {
            for k in 0..w.len() {
                out += &f(v, &w[..k], &w[k], &w[k + 1..])?;
            }
        }
        Ok(out)
    }
}

impl std::ops::AddAssign<&FiberPoly> for FiberPoly {
    fn add_assign(&mut self, o: &FiberPoly) {
        for (w, v) in &o.terms {
            let e = self.terms.entry(w.clone()).or_default();
            e.add_assign(v);
        }
        self.terms.retain(|_, v| !v.is_zero());
    }
}

impl Add for &FiberPoly {
    type Output = FiberPoly;
    fn add(self, o: &FiberPoly) -> FiberPoly {
        let mut out = self.clone();
        out += o;
        out
    }
}

impl Add for FiberPoly {
    type Output = FiberPoly;
    fn add(self, o: FiberPoly) -> FiberPoly {
        &self + &o
    }
}

impl Neg for &FiberPoly {
    type Output = FiberPoly;
    fn neg(self) -> FiberPoly {
        self.map_coeffs(|c| -c)
    }
}

impl Neg for FiberPoly {
    type Output = FiberPoly;
    fn neg(self) -> FiberPoly {
        -&self
    }
}

impl Sub for &FiberPoly {
    type Output = FiberPoly;
    fn sub(self, o: &FiberPoly) -> FiberPoly {
        self + &(-o)
    }
}

impl Sub for FiberPoly {
    type Output = FiberPoly;
    fn sub(self, o: FiberPoly) -> FiberPoly {
        &self - &o
    }
}

impl Mul for &FiberPoly {
    type Output = FiberPoly;
    fn mul(self, o: &FiberPoly) -> FiberPoly {
        let mut out = FiberPoly::zero();
        for (wa, va) in &self.terms {
            for (wb, vb) in &o.terms {
                let mut w = wa.clone();
                w.extend_from_slice(wb);
                if let Some((neg, w)) = canonical(w) {
                    let c = va * vb;
                    out.push(w, if neg { -c } else { c });
                }
            }
        }
        out
    }
}

impl Mul for FiberPoly {
    type Output = FiberPoly;
    fn mul(self, o: FiberPoly) -> FiberPoly {
        &self * &o
    }
}

impl From<FiberCoord> for FiberPoly {
    fn from(c: FiberCoord) -> Self {
        FiberPoly::var(c)
    }
}

impl fmt::Display for FiberPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let body: Vec<String> = w.iter().map(|c| c.to_string()).collect();
            match (body.is_empty(), *c == Scalar::one()) {
                (true, _) => write!(f, "{c}")?,
                (false, true) => write!(f, "{}", body.join(" "))?,
                (false, false) => write!(f, "({c}) {}", body.join(" "))?,
            }
        }
        Ok(())
    }
}

fn prod(parts: &[FiberCoord]) -> FiberPoly {
    FiberPoly::monomial(parts.to_vec(), Scalar::one())
}

fn sign(neg: bool) -> Scalar {
    if neg {
        Scalar::int(-1)
    } else {
        Scalar::one()
    }
}

/// `∂⃗_c f`: the coordinate is moved to the front before it is removed.
pub fn left_deriv(f: &FiberPoly, c: &FiberCoord) -> FiberPoly {
    let mut out = FiberPoly::zero();
    for (w, v) in &f.terms {
        for k in 0..w.len() {
            if w[k] == *c {
                let neg = c.odd() && mono_odd(&w[..k]);
                let mut rest = w.clone();
                rest.remove(k);
                out.push(rest, v * &sign(neg));
            }
        }
    }
    out
}

/// `f∂⃖_c = (−1)^{|c||f|}∂⃗_c f`, termwise.
pub fn right_deriv(f: &FiberPoly, c: &FiberCoord) -> FiberPoly {
    let mut out = FiberPoly::zero();
    for (w, v) in &f.terms {
        let neg = c.odd() && mono_odd(w);
        for k in 0..w.len() {
            if w[k] == *c {
                let neg = neg ^ (c.odd() && mono_odd(&w[..k]));
                let mut rest = w.clone();
                rest.remove(k);
                out.push(rest, v * &sign(neg));
            }
        }
    }
    out
}

/// Which one-sided derivative `∂_i` denotes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DerivConvention {
    /// `∂_i = (−1)^{|i|}∂⃖_i`.
    #[default]
    SignedRight,
    /// `∂_i = ∂⃗_i`.
    Left,
}

pub fn partial(f: &FiberPoly, c: &FiberCoord, conv: DerivConvention) -> FiberPoly {
    match conv {
        DerivConvention::Left => left_deriv(f, c),
        DerivConvention::SignedRight => {
            let r = right_deriv(f, c);
            if c.odd() {
                -r
            } else {
                r
            }
        }
    }
}

/// Field coordinates `y` such that both `y` and `ỹ` occur.
fn paired(fs: &[&FiberPoly]) -> Vec<FiberCoord> {
    let mut all = std::collections::BTreeSet::new();
    for f in fs {
        all.extend(f.coords());
    }
    all.iter()
        .filter(|c| c.kind == Kind::Field)
        .map(|c| c.antifield())
        .filter(|a| all.contains(a))
        .map(|a| a.antifield())
        .collect()
}

/// `Δf = ∂⃗_i ∂̃⃗^i f`.
pub fn bv_laplacian(f: &FiberPoly) -> FiberPoly {
    let mut out = FiberPoly::zero();
    for y in paired(&[f]) {
        out += &left_deriv(&left_deriv(f, &y.antifield()), &y);
    }
    out
}

fn pairing(f: &FiberPoly, g: &FiberPoly) -> FiberPoly {
    let mut out = FiberPoly::zero();
    let mut ys = std::collections::BTreeSet::new();
    for c in f.coords().iter().filter(|c| c.kind == Kind::Antifield) {
        ys.insert(c.antifield());
    }
    let gc = g.coords();
    for y in ys.into_iter().filter(|y| gc.contains(y)) {
        out += &(&right_deriv(f, &y.antifield()) * &left_deriv(g, &y));
    }
    out
}

fn odd_of(f: &FiberPoly) -> Result<bool, BvError> {
    match f.parity() {
        Parity::Even => Ok(false),
        Parity::Odd => Ok(true),
        Parity::Mixed => Err(BvError::MixedParity),
    }
}

/// `{f,g} = ⟨f|𝟙*|g⟩ − (−1)^{(|f|+1)(|g|+1)}⟨g|𝟙*|f⟩`.
pub fn bv_bracket(f: &FiberPoly, g: &FiberPoly) -> Result<FiberPoly, BvError> {
    let (pf, pg) = (odd_of(f)?, odd_of(g)?);
    let swap = pairing(g, f);
    Ok(if !pf && !pg {
        &pairing(f, g) + &swap
    } else {
        &pairing(f, g) - &swap
    })
}

/// Uniform random polynomial of definite parity over the given coordinates.
pub fn random_poly<R: Rng>(
    rng: &mut R,
    coords: &[FiberCoord],
    max_deg: usize,
    max_terms: usize,
    odd: bool,
) -> FiberPoly {
    let mut out = FiberPoly::zero();
    let n = rng.random_range(1..=max_terms);
    for _ in 0..n {
        let deg = rng.random_range(0..=max_deg);
        let w: Monomial = (0..deg)
            .map(|_| coords[rng.random_range(0..coords.len())])
            .collect();
        if mono_odd(&w) != odd {
            continue;
        }
        let c = rng.random_range(-3i64..=3);
        out += &FiberPoly::monomial(w, Scalar::int(c));
    }
    out
}

/// Three generic fields of the given parities and their antifields.
pub fn generic_coords(odd: [bool; 3]) -> Vec<FiberCoord> {
    let mut v = Vec::new();
    for (k, o) in odd.iter().enumerate() {
        let y = FiberCoord::y(k as u8, *o);
        v.push(y);
        v.push(y.antifield());
    }
    v
}

/// Residual terms of `Δ(fg) − Δf·g − (−1)^{|f|}{f,g} − (−1)^{|f|}fΔg`.
pub fn laplacian_leibniz_residual(f: &FiberPoly, g: &FiberPoly) -> Result<usize, BvError> {
    let pf = odd_of(f)?;
    let s = sign(pf);
    let rhs = &(&(&bv_laplacian(f) * g) + &bv_bracket(f, g)?.scale(&s))
        + &(f * &bv_laplacian(g)).scale(&s);
    Ok((&bv_laplacian(&(f * g)) - &rhs).term_count())
}

/// Residual terms of `{f,gh} − {f,g}h − (−1)^{(|f|+1)|g|}g{f,h}`: `ad_f` as
/// an anti-derivation of grade `|f|+1`.
pub fn antiderivation_residual(
    f: &FiberPoly,
    g: &FiberPoly,
    h: &FiberPoly,
) -> Result<usize, BvError> {
    let (pf, pg) = (odd_of(f)?, odd_of(g)?);
    let s = sign(!pf && pg);
    let rhs = &(&bv_bracket(f, g)? * h) + &(g * &bv_bracket(f, h)?).scale(&s);
    Ok((&bv_bracket(f, &(g * h))? - &rhs).term_count())
}

/// Same as [`antiderivation_residual`] with the exponent `(|f|+1)(|g|+1)`;
/// the two agree for odd `f`.
pub fn antiderivation_residual_printed(
    f: &FiberPoly,
    g: &FiberPoly,
    h: &FiberPoly,
) -> Result<usize, BvError> {
    let (pf, pg) = (odd_of(f)?, odd_of(g)?);
    let s = sign(!pf && !pg);
    let rhs = &(&bv_bracket(f, g)? * h) + &(g * &bv_bracket(f, h)?).scale(&s);
    Ok((&bv_bracket(f, &(g * h))? - &rhs).term_count())
}

/// Residual terms of the graded Jacobi identity in its anti-derivation form
/// `{f,{g,h}} = {{f,g},h} + (−1)^{(|f|+1)(|g|+1)}{g,{f,h}}`.
pub fn jacobi_residual(f: &FiberPoly, g: &FiberPoly, h: &FiberPoly) -> Result<usize, BvError> {
    let (pf, pg) = (odd_of(f)?, odd_of(g)?);
    let s = sign(!pf && !pg);
    let lhs = bv_bracket(f, &bv_bracket(g, h)?)?;
    let rhs = &bv_bracket(&bv_bracket(f, g)?, h)? + &bv_bracket(g, &bv_bracket(f, h)?)?.scale(&s);
    Ok((&lhs - &rhs).term_count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    #[allow(unused_imports)]
    use rand::Rng as _;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn y(k: u8) -> FiberCoord {
        FiberCoord::y(k, false)
    }

    fn th(k: u8) -> FiberCoord {
        FiberCoord::y(k, true)
    }

    #[test]
    fn derivative_examples() {
        let y2 = &FiberPoly::var(y(0)) * &FiberPoly::var(y(0));
        assert_eq!(
            left_deriv(&y2, &y(0)),
            FiberPoly::var(y(0)).scale(&Scalar::int(2))
        );
        let te = FiberPoly::monomial(vec![th(0), th(1)], Scalar::one());
        assert_eq!(left_deriv(&te, &th(0)), FiberPoly::var(th(1)));
        assert_eq!(left_deriv(&te, &th(1)), -FiberPoly::var(th(0)));
        // odd f: right and left differ by a sign
        let f = FiberPoly::monomial(vec![th(0), th(1), th(2)], Scalar::one());
        assert_eq!(right_deriv(&f, &th(0)), -left_deriv(&f, &th(0)));
    }

    #[test]
    fn odd_square_vanishes() {
        let t = FiberPoly::var(th(0));
        assert!((&t * &t).is_zero());
    }

    #[test]
    fn laplacian_examples() {
        assert!(bv_laplacian(&FiberPoly::one()).is_zero());
        let y2 = &FiberPoly::var(y(0)) * &FiberPoly::var(y(0));
        assert!(bv_laplacian(&y2).is_zero());
        let p = FiberPoly::monomial(vec![y(0), y(0).antifield()], Scalar::one());
        assert_eq!(bv_laplacian(&p), FiberPoly::one());
    }

    #[test]
    fn canonical_pairs() {
        for c in [y(0), th(0)] {
            let b = bv_bracket(&c.into(), &c.antifield().into()).unwrap();
            let want = if c.odd() {
                -FiberPoly::one()
            } else {
                FiberPoly::one()
            };
            assert_eq!(b, want, "{c}");
            assert!(bv_bracket(&c.into(), &y(1).into()).unwrap().is_zero());
        }
    }

    #[test]
    fn printed_exponent_fails_for_even_f() {
        let y0 = FiberCoord::y(0, false);
        let (f, g, h) = (y0.into(), th(2).into(), y0.antifield().into());
        assert_eq!(antiderivation_residual(&f, &g, &h).unwrap(), 0);
        assert!(antiderivation_residual_printed(&f, &g, &h).unwrap() > 0);
        let (f, h) = (th(0).into(), th(0).antifield().into());
        assert_eq!(antiderivation_residual(&f, &g, &h).unwrap(), 0);
        assert_eq!(antiderivation_residual_printed(&f, &g, &h).unwrap(), 0);
    }

    #[test]
    fn convention_switch() {
        let f = FiberPoly::monomial(vec![th(0), th(1)], Scalar::one());
        let r = partial(&f, &th(0), DerivConvention::SignedRight);
        let l = partial(&f, &th(0), DerivConvention::Left);
        assert_eq!(r, -l);
        let g = FiberPoly::var(th(0));
        assert_eq!(
            partial(&g, &th(0), DerivConvention::SignedRight),
            partial(&g, &th(0), DerivConvention::Left)
        );
    }

    #[test]
    fn derivatives_graded_commute() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let cs = generic_coords([false, true, true]);
        for _ in 0..50 {
            let odd = rand::Rng::random(&mut rng);
            let f = random_poly(&mut rng, &cs, 4, 6, odd);
            for i in &cs {
                for j in &cs {
                    let a = left_deriv(&left_deriv(&f, i), j);
                    let b = left_deriv(&left_deriv(&f, j), i);
                    let b = if i.odd() && j.odd() { -b } else { b };
                    assert_eq!(a, b);
                }
            }
        }
    }

    fn arb_poly() -> impl Strategy<Value = FiberPoly> {
        (any::<u64>(), any::<[bool; 3]>(), any::<bool>()).prop_map(|(seed, par, odd)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            random_poly(&mut rng, &generic_coords(par), 4, 6, odd)
        })
    }

    fn arb_triple() -> impl Strategy<Value = [FiberPoly; 3]> {
        (any::<u64>(), any::<[bool; 3]>(), any::<[bool; 3]>()).prop_map(|(seed, par, odd)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let cs = generic_coords(par);
            odd.map(|o| random_poly(&mut rng, &cs, 3, 4, o))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn laplacian_squares_to_zero(f in arb_poly()) {
            prop_assert!(bv_laplacian(&bv_laplacian(&f)).is_zero());
        }

        #[test]
        fn laplacian_failure_of_leibniz(t in arb_triple()) {
            prop_assert_eq!(laplacian_leibniz_residual(&t[0], &t[1]).unwrap(), 0);
        }

        #[test]
        fn bracket_is_antiderivation(t in arb_triple()) {
            prop_assert_eq!(antiderivation_residual(&t[0], &t[1], &t[2]).unwrap(), 0);
        }

        #[test]
        fn bracket_jacobi(t in arb_triple()) {
            prop_assert_eq!(jacobi_residual(&t[0], &t[1], &t[2]).unwrap(), 0);
        }

        #[test]
        fn grades_shift_by_one(t in arb_triple()) {
            let flip = |p: Parity| match p {
                Parity::Even => Parity::Odd,
                Parity::Odd => Parity::Even,
                Parity::Mixed => Parity::Mixed,
            };
            let l = bv_laplacian(&t[0]);
            if !l.is_zero() {
                prop_assert_eq!(l.parity(), flip(t[0].parity()));
            }
            let b = bv_bracket(&t[0], &t[1]).unwrap();
            if !b.is_zero() {
                let pf = t[0].parity() == Parity::Odd;
                let pg = t[1].parity() == Parity::Odd;
                prop_assert_eq!(b.parity(), Parity::of_bool(!(pf ^ pg)));
            }
        }
    }
}
