//! The BRST operator of the matter + gauge theory, its prolongation to jets,
//! the ghost Lagrangian and Noether currents of vertical symmetries.

use std::collections::BTreeMap;

use crate::gamma::gamma;
use crate::lie::LieData;
use crate::symbolic::{qr, Scalar};

use super::{left_deriv, prod, sign, BvError, FiberCoord, FiberPoly, Kind, Name};

/// Field content and parameters of the essential gauge theory.
#[derive(Clone, Debug)]
pub struct TheorySpec {
    pub lie: LieData,
    /// Spinor components carried by `ψ`.
    pub spinor: u8,
    pub xi: Scalar,
    pub mass: Scalar,
}

impl TheorySpec {
    pub fn new(lie: LieData) -> Self {
        TheorySpec {
            lie,
            spinor: 4,
            xi: Scalar::sym("ξ"),
            mass: Scalar::sym("m"),
        }
    }

    pub fn with_spinor(mut self, s: u8) -> Self {
        self.spinor = s;
        self
    }

    /// Matter dimension.
    pub fn n(&self) -> u8 {
        self.lie.n as u8
    }

    pub fn dim(&self) -> u8 {
        self.lie.dim() as u8
    }

    pub fn contains(&self, c: &FiberCoord) -> bool {
        let (d, n) = (self.dim(), self.n());
        match c.name {
            Name::Psi | Name::PsiBar => c.a < self.spinor && c.b < n,
            Name::Gauge => c.a < d && c.b < 4,
            Name::Ghost | Name::AntiGhost | Name::Aux => c.a < d && c.b == 0,
            Name::Y => false,
        }
    }

    /// All base field coordinates.
    pub fn base_coords(&self) -> Vec<FiberCoord> {
        let mut v = Vec::new();
        for a in 0..self.spinor {
            for i in 0..self.n() {
                v.push(FiberCoord::psi(a, i));
                v.push(FiberCoord::psi_bar(a, i));
            }
        }
        for i in 0..self.dim() {
            for l in 0..4 {
                v.push(FiberCoord::gauge(i, l));
            }
            v.push(FiberCoord::ghost(i));
            v.push(FiberCoord::antighost(i));
            v.push(FiberCoord::aux(i));
        }
        v
    }

    /// Base coordinates followed by all their first jets.
    pub fn first_jet_coords(&self) -> Vec<FiberCoord> {
        let mut v = self.base_coords();
        let extra: Vec<_> = v.iter().flat_map(|c| (0..4).map(move |l| c.d(l))).collect();
        v.extend(extra);
        v
    }

    fn gen(&self, big_i: usize, i: usize, j: usize) -> &Scalar {
        &self.lie.generators[big_i][i][j]
    }

    fn c(&self, i: usize, j: usize, h: usize) -> &Scalar {
        self.lie.c(i, j, h)
    }
}

fn metric(l: usize) -> Scalar {
    if l == 0 {
        Scalar::one()
    } else {
        Scalar::int(-1)
    }
}

fn v(c: FiberCoord) -> FiberPoly {
    FiberPoly::var(c)
}

fn half() -> Scalar {
    Scalar::rational(qr(1, 2))
}

/// `d_λ f`, the total derivative on x-independent fiber polynomials.
pub fn horizontal_diff(f: &FiberPoly, lambda: usize) -> Result<FiberPoly, BvError> {
    f.each_position(|c, pre, y, post| {
        Ok((&(&prod(pre) * &v(y.prolong(lambda)?)) * &prod(post)).scale(c))
    })
}

/// A vertical derivation fixed by its values on base coordinates and
/// prolonged to jets; odd derivations carry Koszul signs.
#[derive(Clone, Debug)]
pub struct Vertical {
    pub odd: bool,
    comps: BTreeMap<FiberCoord, FiberPoly>,
    /// Coordinates without a component are rejected instead of mapped to zero.
    strict: bool,
}

impl Vertical {
    pub fn new(odd: bool, comps: BTreeMap<FiberCoord, FiberPoly>) -> Self {
        Vertical {
            odd,
            comps,
            strict: false,
        }
    }

    pub fn component(&self, c: &FiberCoord) -> Option<&FiberPoly> {
        self.comps.get(c)
    }

    pub fn components(&self) -> impl Iterator<Item = (&FiberCoord, &FiberPoly)> {
        self.comps.iter()
    }

    /// `v(y^i_Λ) = d_Λ v^i`; zero on antifields.
    pub fn image(&self, c: &FiberCoord) -> Result<FiberPoly, BvError> {
        if c.kind == Kind::Antifield {
            return Ok(FiberPoly::zero());
        }
        let mut out = match self.comps.get(&c.base()) {
            Some(p) => p.clone(),
            None if self.strict => return Err(BvError::OutsideTheory(c.to_string())),
            None => return Ok(FiberPoly::zero()),
        };
        for (l, n) in c.jet.iter().enumerate() {
            for _ in 0..*n {
                out = horizontal_diff(&out, l)?;
            }
        }
        Ok(out)
    }

    pub fn apply(&self, f: &FiberPoly) -> Result<FiberPoly, BvError> {
        f.each_position(|c, pre, y, post| {
            let s = sign(self.odd && super::mono_odd(pre));
            Ok((&(&prod(pre) * &self.image(y)?) * &prod(post)).scale(&(c * &s)))
        })
    }
}

/// `S` on base coordinates:
/// `Sψ^{αi} = 𝔩_I{}^i_j ω^I ψ^{αj}`, `Sψ̄_{αi} = 𝔩_I{}^j_i ψ̄_{αj} ω^I`,
/// `SA^I_λ = ω^I_{,λ} + c^I_{JH} ω^J A^H_λ`, `Sω^I = ½c^I_{JH}ω^Jω^H`,
/// `Sω̄_I = n_I`, `Sn_I = 0`.
pub fn brst_operator(t: &TheorySpec) -> Vertical {
    let (d, n) = (t.dim() as usize, t.n() as usize);
    let mut comps = BTreeMap::new();
    for a in 0..t.spinor {
        for i in 0..n {
            let (mut sp, mut sb) = (FiberPoly::zero(), FiberPoly::zero());
            for bi in 0..d {
                let w = v(FiberCoord::ghost(bi as u8));
                for j in 0..n {
                    let g = t.gen(bi, i, j);
                    if !g.is_zero() {
                        sp += &(&w * &v(FiberCoord::psi(a, j as u8))).scale(g);
                    }
                    let g = t.gen(bi, j, i);
                    if !g.is_zero() {
                        sb += &(&v(FiberCoord::psi_bar(a, j as u8)) * &w).scale(g);
                    }
                }
            }
            comps.insert(FiberCoord::psi(a, i as u8), sp);
            comps.insert(FiberCoord::psi_bar(a, i as u8), sb);
        }
    }
    for i in 0..d {
        let iu = i as u8;
        for l in 0..4u8 {
            comps.insert(FiberCoord::gauge(iu, l), covariant_ghost(t, i, l as usize));
        }
        let mut so = FiberPoly::zero();
        for j in 0..d {
            for h in 0..d {
                let c = t.c(i, j, h);
                if !c.is_zero() {
                    so += &(&v(FiberCoord::ghost(j as u8)) * &v(FiberCoord::ghost(h as u8)))
                        .scale(&(c * &half()));
                }
            }
        }
        comps.insert(FiberCoord::ghost(iu), so);
        comps.insert(FiberCoord::antighost(iu), v(FiberCoord::aux(iu)));
        comps.insert(FiberCoord::aux(iu), FiberPoly::zero());
    }
    Vertical {
        odd: true,
        comps,
        strict: true,
    }
}

/// `ω^I_{;λ} = ω^I_{,λ} + c^I_{JH} ω^J A^H_λ`.
fn covariant_ghost(t: &TheorySpec, i: usize, l: usize) -> FiberPoly {
    let d = t.dim() as usize;
    let mut out = v(FiberCoord::ghost(i as u8).d(l));
    for j in 0..d {
        for h in 0..d {
            let c = t.c(i, j, h);
            if !c.is_zero() {
                out += &(&v(FiberCoord::ghost(j as u8)) * &v(FiberCoord::gauge(h as u8, l as u8)))
                    .scale(c);
            }
        }
    }
    out
}

/// `∇_λψ^{βi} = ψ^{βi}_{,λ} − A^I_λ 𝔩_I{}^i_j ψ^{βj}`.
fn nabla_psi(t: &TheorySpec, b: u8, i: usize, l: usize) -> FiberPoly {
    let mut out = v(FiberCoord::psi(b, i as u8).d(l));
    for bi in 0..t.dim() as usize {
        for j in 0..t.n() as usize {
            let g = t.gen(bi, i, j);
            if !g.is_zero() {
                out = &out
                    - &(&v(FiberCoord::gauge(bi as u8, l as u8)) * &v(FiberCoord::psi(b, j as u8)))
                        .scale(g);
            }
        }
    }
    out
}

/// `∇_λψ̄_{αi} = ψ̄_{αi,λ} + A^I_λ ψ̄_{αj} 𝔩_I{}^j_i`.
fn nabla_bar(t: &TheorySpec, a: u8, i: usize, l: usize) -> FiberPoly {
    let mut out = v(FiberCoord::psi_bar(a, i as u8).d(l));
    for bi in 0..t.dim() as usize {
        for j in 0..t.n() as usize {
            let g = t.gen(bi, j, i);
            if !g.is_zero() {
                out += &(&v(FiberCoord::gauge(bi as u8, l as u8))
                    * &v(FiberCoord::psi_bar(a, j as u8)))
                    .scale(g);
            }
        }
    }
    out
}

/// `F^I_{λμ} = A^I_{μ,λ} − A^I_{λ,μ} − c^I_{JH} A^J_λ A^H_μ`.
fn curvature(t: &TheorySpec, i: usize, l: usize, m: usize) -> FiberPoly {
    let d = t.dim() as usize;
    let mut out =
        &v(FiberCoord::gauge(i as u8, m as u8).d(l)) - &v(FiberCoord::gauge(i as u8, l as u8).d(m));
    for j in 0..d {
        for h in 0..d {
            let c = t.c(i, j, h);
            if !c.is_zero() {
                out = &out
                    - &(&v(FiberCoord::gauge(j as u8, l as u8))
                        * &v(FiberCoord::gauge(h as u8, m as u8)))
                        .scale(c);
            }
        }
    }
    out
}

/// `ℓ₀ = (i/2)(ψ̄γ^λ∇_λψ − ∇_λψ̄γ^λψ) − mψ̄ψ − ¼F^I_{λμ}F_I^{λμ}`.
pub fn matter_gauge_lagrangian(t: &TheorySpec) -> Result<FiberPoly, BvError> {
    let (d, n) = (t.dim() as usize, t.n() as usize);
    let mut l_psi = FiberPoly::zero();
    if t.spinor == 4 {
        for l in 0..4 {
            let g = gamma(l).map_err(|e| BvError::OutsideTheory(e.to_string()))?;
            for a in 0..4u8 {
                for b in 0..4u8 {
                    let c = g.get(a as usize, b as usize);
                    if c.is_zero() {
                        continue;
                    }
                    for i in 0..n {
                        let x = &(&v(FiberCoord::psi_bar(a, i as u8)) * &nabla_psi(t, b, i, l))
                            - &(&nabla_bar(t, a, i, l) * &v(FiberCoord::psi(b, i as u8)));
                        l_psi += &x.scale(c);
                    }
                }
            }
        }
        l_psi = l_psi.scale(&(&Scalar::i() * &half()));
    }
    for a in 0..t.spinor {
        for i in 0..n as u8 {
            l_psi = &l_psi
                - &(&v(FiberCoord::psi_bar(a, i)) * &v(FiberCoord::psi(a, i))).scale(&t.mass);
        }
    }
    let mut l_a = FiberPoly::zero();
    let f: Vec<Vec<Vec<FiberPoly>>> = (0..d)
        .map(|i| {
            (0..4)
                .map(|l| (0..4).map(|m| curvature(t, i, l, m)).collect())
                .collect()
        })
        .collect();
    for i in 0..d {
        for j in 0..d {
            let h = &t.lie.metric[i][j];
            if h.is_zero() {
                continue;
            }
            for l in 0..4 {
                for m in 0..4 {
                    if l == m {
                        continue;
                    }
                    let g = &(&metric(l) * &metric(m)) * h;
                    l_a += &(&f[i][l][m] * &f[j][l][m]).scale(&g);
                }
            }
        }
    }
    Ok(&l_psi - &l_a.scale(&Scalar::rational(qr(1, 4))))
}

/// Both sides of `ℒ_ghost = S𝒦 + d_H𝓜` and their difference.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub ghost_lagrangian: FiberPoly,
    pub k: FiberPoly,
    pub m: [FiberPoly; 4],
    pub rhs: FiberPoly,
    pub residual: FiberPoly,
}

fn gauge_fixing(t: &TheorySpec, i: usize) -> FiberPoly {
    let d = t.dim() as usize;
    let mut f = FiberPoly::zero();
    for l in 0..4u8 {
        f += &v(FiberCoord::gauge(i as u8, l).d(l as usize)).scale(&metric(l as usize));
    }
    let mut n_up = FiberPoly::zero();
    for j in 0..d {
        let h = &t.lie.metric_inv[i][j];
        if !h.is_zero() {
            n_up += &v(FiberCoord::aux(j as u8)).scale(h);
        }
    }
    &f + &n_up.scale(&(&half() * &t.xi))
}

/// `ℒ_ghost = (SA^I_λ)Ã^λ_I + (Sω̄_I)ω̄̃^I` with `Ã^λ_I = −g^{λμ}ω̄_{I,μ}` and
/// `ω̄̃^I = f^I + ½ξn^I`, against `S𝒦 + d_H𝓜`.
pub fn ghost_lagrangian_decompose(t: &TheorySpec) -> Result<Decomposition, BvError> {
    let s = brst_operator(t);
    let d = t.dim();
    let mut lg = FiberPoly::zero();
    let mut kk = FiberPoly::zero();
    let mut m: [FiberPoly; 4] = Default::default();
    for i in 0..d {
        let ob = FiberCoord::antighost(i);
        let tilde_ob = gauge_fixing(t, i as usize);
        for l in 0..4u8 {
            let sa = s.image(&FiberCoord::gauge(i, l))?;
            let tilde_a = v(ob.d(l as usize)).scale(&-metric(l as usize));
            lg += &(&sa * &tilde_a);
            m[l as usize] += &(&v(ob) * &sa).scale(&metric(l as usize));
        }
        lg += &(&s.image(&ob)? * &tilde_ob);
        kk += &(&v(ob) * &tilde_ob);
    }
    let mut rhs = s.apply(&kk)?;
    for (l, ml) in m.iter().enumerate() {
        rhs += &horizontal_diff(ml, l)?;
    }
    let residual = &lg - &rhs;
    Ok(Decomposition {
        ghost_lagrangian: lg,
        k: kk,
        m,
        rhs,
        residual,
    })
}

/// `ℓ = g^{λμ} ω̄_{I,λ} ω^I_{,μ}`.
pub fn free_ghost_lagrangian(dim: u8) -> FiberPoly {
    let mut out = FiberPoly::zero();
    for i in 0..dim {
        for l in 0..4 {
            out += &(&v(FiberCoord::antighost(i).d(l)) * &v(FiberCoord::ghost(i).d(l)))
                .scale(&metric(l));
        }
    }
    out
}

/// `ω ↦ ω`, `ω̄ ↦ −ω̄`.
pub fn ghost_number_symmetry(dim: u8) -> Vertical {
    let mut comps = BTreeMap::new();
    for i in 0..dim {
        comps.insert(FiberCoord::ghost(i), v(FiberCoord::ghost(i)));
        comps.insert(FiberCoord::antighost(i), -v(FiberCoord::antighost(i)));
    }
    Vertical::new(false, comps)
}

/// `𝒥^λ_FP = g^{λμ}(ω̄_{I,μ}ω^I − ω̄_I ω^I_{,μ})`.
pub fn fp_current_target(dim: u8) -> [FiberPoly; 4] {
    std::array::from_fn(|l| {
        let mut out = FiberPoly::zero();
        for i in 0..dim {
            let (o, ob) = (FiberCoord::ghost(i), FiberCoord::antighost(i));
            out += &(&(&v(ob.d(l)) * &v(o)) - &(&v(ob) * &v(o.d(l)))).scale(&metric(l));
        }
        out
    })
}

/// `∂⃗^{λμ}_i` with the symmetric-index weight ½ off the diagonal.
fn second_jet_deriv(f: &FiberPoly, y: &FiberCoord, l: usize, m: usize) -> FiberPoly {
    let d = left_deriv(f, &y.d(l).d(m));
    if l == m {
        d
    } else {
        d.scale(&half())
    }
}

/// Noether current of `v` for the Lagrangian density `ℓ`, after checking
/// `δ[v]ℓ = d_λ𝒩^λ`.
///
/// Order 1: `𝒥^λ = v^i ∂⃗^λ_iℓ − 𝒩^λ`. Order 2 adds
/// `−v^i d_μ∂⃗^{λμ}_iℓ + d_μv^i ∂⃗^{λμ}_iℓ`.
pub fn noether_current(
    vf: &Vertical,
    l: &FiberPoly,
    n: Option<&[FiberPoly; 4]>,
    order: u8,
) -> Result<[FiberPoly; 4], BvError> {
    if order != 1 && order != 2 {
        return Err(BvError::BadOrder(order));
    }
    let zero: [FiberPoly; 4] = Default::default();
    let n = n.unwrap_or(&zero);
    let mut div = FiberPoly::zero();
    for (lam, nl) in n.iter().enumerate() {
        div += &horizontal_diff(nl, lam)?;
    }
    let res = &vf.apply(l)? - &div;
    if !res.is_zero() {
        return Err(BvError::NotSymmetry(res.term_count()));
    }
    let mut out: [FiberPoly; 4] = Default::default();
    for (lam, j) in out.iter_mut().enumerate() {
        for (y, vi) in vf.components() {
            if vi.is_zero() {
                continue;
            }
            let mut p = left_deriv(l, &y.d(lam));
            if order == 2 {
                for mu in 0..4 {
                    let dd = second_jet_deriv(l, y, lam, mu);
                    if dd.is_zero() {
                        continue;
                    }
                    p = &p - &horizontal_diff(&dd, mu)?;
                    *j += &(&horizontal_diff(vi, mu)? * &dd);
                }
            }
            *j += &(vi * &p);
        }
        *j = &*j - &n[lam];
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bv::random_poly;
    use crate::lie::{su2, su3, u1};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn small(lie: LieData) -> TheorySpec {
        TheorySpec::new(lie).with_spinor(1)
    }

    fn s2_generators(t: &TheorySpec) -> usize {
        let s = brst_operator(t);
        t.base_coords()
            .iter()
            .map(|c| s.apply(&s.image(c).unwrap()).unwrap().term_count())
            .sum()
    }

    #[test]
    fn s_on_ghost_and_antighost() {
        let t = TheorySpec::new(su2());
        let s = brst_operator(&t);
        let w = s.image(&FiberCoord::ghost(0)).unwrap();
        // ½c^0_{12}ω^1ω^2 + ½c^0_{21}ω^2ω^1 = c^0_{12}ω^1ω^2
        let want = (&v(FiberCoord::ghost(1)) * &v(FiberCoord::ghost(2))).scale(t.lie.c(0, 1, 2));
        assert_eq!(w, want);
        let ob = v(FiberCoord::antighost(1));
        assert_eq!(s.apply(&ob).unwrap(), v(FiberCoord::aux(1)));
        assert!(s.apply(&s.apply(&ob).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn s_squares_to_zero_on_generators() {
        for lie in [u1(), su2(), su3()] {
            let name = lie.name.clone();
            assert_eq!(s2_generators(&TheorySpec::new(lie)), 0, "{name}");
        }
    }

    #[test]
    fn corrupted_constant_breaks_nilpotency() {
        let bad = su2().corrupted(0, 0, 1, Scalar::one());
        let t = TheorySpec::new(bad);
        let s = brst_operator(&t);
        let r: usize = (0..3)
            .map(|i| {
                let w = s.image(&FiberCoord::ghost(i)).unwrap();
                s.apply(&w).unwrap().term_count()
            })
            .sum();
        assert!(r > 0);
    }

    #[test]
    fn s_commutes_with_total_derivative() {
        let t = TheorySpec::new(su2());
        let s = brst_operator(&t);
        for c in t.base_coords() {
            for l in 0..4 {
                let a = horizontal_diff(&s.apply(&v(c)).unwrap(), l).unwrap();
                let b = s.apply(&horizontal_diff(&v(c), l).unwrap()).unwrap();
                assert_eq!(a, b, "{c} {l}");
            }
        }
    }

    #[test]
    fn total_derivatives_commute_and_overflow() {
        let f = &v(FiberCoord::ghost(0)) * &v(FiberCoord::antighost(0));
        let a = horizontal_diff(&horizontal_diff(&f, 1).unwrap(), 2).unwrap();
        let b = horizontal_diff(&horizontal_diff(&f, 2).unwrap(), 1).unwrap();
        assert_eq!(a, b);
        let d1 = horizontal_diff(&f, 0).unwrap();
        let want = &(&v(FiberCoord::ghost(0).d(0)) * &v(FiberCoord::antighost(0)))
            + &(&v(FiberCoord::ghost(0)) * &v(FiberCoord::antighost(0).d(0)));
        assert_eq!(d1, want);
        assert!(matches!(
            horizontal_diff(&a, 0),
            Err(BvError::JetOverflow(_))
        ));
    }

    #[test]
    fn matter_gauge_lagrangian_is_invariant() {
        for lie in [u1(), su2()] {
            let t = TheorySpec::new(lie);
            let l0 = matter_gauge_lagrangian(&t).unwrap();
            assert!(!l0.is_zero());
            let s = brst_operator(&t);
            let sl = s.apply(&l0).unwrap();
            assert!(sl.is_zero(), "{} terms", sl.term_count());
        }
    }

    #[test]
    fn ghost_decomposition_holds() {
        for lie in [u1(), su2(), su3()] {
            let d = ghost_lagrangian_decompose(&small(lie)).unwrap();
            assert!(d.residual.is_zero(), "{}", d.residual);
            // ξ-derivative of the residual vanishes as well
            let xi = crate::symbolic::Symbol::new("ξ");
            assert!(d.residual.map_coeffs(|c| c.diff_sym(&xi)).is_zero());
        }
    }

    #[test]
    fn ghost_number_current_is_fp_current() {
        let l = free_ghost_lagrangian(3);
        let vf = ghost_number_symmetry(3);
        let j = noether_current(&vf, &l, None, 1).unwrap();
        assert_eq!(j, fp_current_target(3));
        let j2 = noether_current(&vf, &l, None, 2).unwrap();
        assert_eq!(j2, j);
    }

    #[test]
    fn non_symmetry_is_rejected() {
        let l = free_ghost_lagrangian(1);
        let mut comps = BTreeMap::new();
        comps.insert(FiberCoord::ghost(0), v(FiberCoord::ghost(0)));
        let vf = Vertical::new(false, comps);
        assert!(matches!(
            noether_current(&vf, &l, None, 1),
            Err(BvError::NotSymmetry(_))
        ));
    }

    #[test]
    fn brst_current_unchanged_by_boundary_term() {
        let t = small(su2());
        let s = brst_operator(&t);
        let d = ghost_lagrangian_decompose(&t).unwrap();
        let sm: [FiberPoly; 4] = std::array::from_fn(|l| s.apply(&d.m[l]).unwrap());
        let j_ghost = noether_current(&s, &d.ghost_lagrangian, Some(&sm), 2).unwrap();
        let j_exact = noether_current(&s, &s.apply(&d.k).unwrap(), None, 2).unwrap();
        for l in 0..4 {
            assert_eq!(j_ghost[l], j_exact[l], "λ={l}");
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn s_squares_to_zero_on_random_polys(seed in any::<u64>(), which in 0usize..3, odd in any::<bool>()) {
            let lie = [u1(), su2(), su3()][which].clone();
            let t = small(lie);
            let cs = t.first_jet_coords();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let f = random_poly(&mut rng, &cs, 3, 3, odd);
            let s = brst_operator(&t);
            let sf = s.apply(&f).unwrap();
            if !sf.is_zero() {
                prop_assert_eq!(sf.parity(), crate::algebra::Parity::of_bool(!odd));
            }
            prop_assert!(s.apply(&sf).unwrap().is_zero());
        }
    }
}
