//! Free quantum fields on a finite momentum lattice.
//!
//! Every field is a sum over lattice modes of `(2E)^{-1/2}` times a plane
//! wave times an elementary generator. Absorption generators carry
//! `e^{-i⟨p,x⟩}`, emission generators `e^{+i⟨p,x⟩}`, except for the
//! complex-conjugate-transposed scalar fields `𝒞φ`, `𝒞φ*` whose phases are
//! reversed. The `(2π)^{3/2}` prefactors are dropped and the spatial delta is
//! represented by the unit-weight mode sum [`delta_lattice`].

use thiserror::Error;

use crate::algebra::{super_bracket, AlgebraError, GradedExpr, OpGen, Sector};
use crate::gamma::{boost_k, GammaError, OnShellMomentum, SpinMatrix};
use crate::lattice::{Family, LatticeError, ModeIndex, ModeLattice};
use crate::symbolic::{FieldPoint, Idx, Phase, Scalar, SymbolicError, Q};

pub mod dirac;
pub mod equal_time;
pub mod table;

pub type FieldExpr = GradedExpr;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FieldError {
    #[error("component {0} is not valid for the {1} sector")]
    BadComponent(String, &'static str),
    #[error("spacetime index {0} out of range 0..3")]
    BadDerivative(usize),
    #[error("the {0} sector has no independent conjugate field")]
    RealSector(&'static str),
    #[error("super-commutator is not a c-number: {0} operator terms remain")]
    NotScalar(usize),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Gamma(#[from] GammaError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Symbolic(#[from] SymbolicError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Stat {
    Boson,
    Fermion,
}

impl Stat {
    pub fn sector(self) -> Sector {
        match self {
            Stat::Boson => Sector::Scalar,
            Stat::Fermion => Sector::FermiScalar,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Stat::Boson => "boson",
            Stat::Fermion => "fermion",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSector {
    Scalar(Stat),
    Dirac,
    Gauge,
    Ghost,
}

impl FieldSector {
    pub fn name(self) -> &'static str {
        match self {
            FieldSector::Scalar(Stat::Boson) => "scalar",
            FieldSector::Scalar(Stat::Fermion) => "fermi-scalar",
            FieldSector::Dirac => "dirac",
            FieldSector::Gauge => "gauge",
            FieldSector::Ghost => "ghost",
        }
    }

    pub fn family(self) -> Family {
        match self {
            FieldSector::Scalar(_) => Family::Scalar,
            FieldSector::Dirac => Family::Dirac,
            FieldSector::Gauge => Family::Gauge,
            FieldSector::Ghost => Family::Ghost,
        }
    }
}

/// Component label: an internal (or spinor) index and, for the gauge
/// field, the spacetime slot `λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comp {
    pub index: Idx,
    pub lambda: u8,
}

impl Comp {
    pub fn idx(index: Idx) -> Self {
        Comp { index, lambda: 0 }
    }

    pub fn var(name: &str) -> Self {
        Comp::idx(Idx::var(name))
    }

    pub fn val(i: u32) -> Self {
        Comp::idx(Idx::Val(i))
    }

    pub fn gauge(lambda: u8, index: Idx) -> Self {
        Comp { index, lambda }
    }
}

/// The four scalar-sector field types.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalarForm {
    /// `φ^α`
    Phi,
    /// `φ^{α*}`
    PhiStar,
    /// `𝒞φ_α`
    CPhi,
    /// `𝒞φ*_α`
    CPhiStar,
    /// `φ̄_α`
    PhiBar,
}

fn check_deriv(deriv: Option<usize>) -> Result<(), FieldError> {
    match deriv {
        Some(l) if l > 3 => Err(FieldError::BadDerivative(l)),
        _ => Ok(()),
    }
}

/// Covariant `p_λ` of a mode with `p_0 = E`.
pub fn p_lower(
    l: &ModeLattice,
    fam: Family,
    m: &ModeIndex,
    lambda: usize,
) -> Result<Scalar, FieldError> {
    if lambda == 0 {
        Ok(l.energy_scalar(fam, m)?)
    } else if lambda <= 3 {
        Ok(Scalar::rational(m.p[lambda - 1].clone()))
    } else {
        Err(FieldError::BadDerivative(lambda))
    }
}

fn energy_sq(l: &ModeLattice, fam: Family, m: &ModeIndex) -> Q {
    let mass = l.mass(fam);
    mass * mass + m.norm_sqr()
}

/// Field weight `(2E)^{-1/2}`.
pub fn weight(l: &ModeLattice, fam: Family, m: &ModeIndex) -> Result<Scalar, FieldError> {
    let x = Q::from_integer(1.into()) / (Q::from_integer(4.into()) * energy_sq(l, fam, m));
    Ok(Scalar::root(&x, 1)?)
}

/// `1/(2E)`.
pub fn inv_two_energy(l: &ModeLattice, fam: Family, m: &ModeIndex) -> Result<Scalar, FieldError> {
    let x = Q::from_integer(1.into()) / (Q::from_integer(4.into()) * energy_sq(l, fam, m));
    Ok(Scalar::root(&x, 2)?)
}

/// `e^{sign·i⟨p,x⟩}`, differentiated once in `x^λ` if asked.
pub fn plane(
    l: &ModeLattice,
    fam: Family,
    m: &ModeIndex,
    sign: i32,
    x: &FieldPoint,
    deriv: Option<usize>,
) -> Result<Scalar, FieldError> {
    let e = l.energy(fam, m)?;
    let mut s = Scalar::phase(Phase::plane_wave(sign, &e, &m.p, x));
    if let Some(lam) = deriv {
        let k = &Scalar::i() * &p_lower(l, fam, m, lam)?;
        s = &s * &k;
        if sign < 0 {
            s = -s;
        }
    }
    Ok(s)
}

fn wave(
    l: &ModeLattice,
    fam: Family,
    m: &ModeIndex,
    sign: i32,
    x: &FieldPoint,
    deriv: Option<usize>,
) -> Result<Scalar, FieldError> {
    Ok(&weight(l, fam, m)? * &plane(l, fam, m, sign, x, deriv)?)
}

fn mode_idx(m: &ModeIndex) -> Idx {
    Idx::Val(m.id)
}

/// Scalar-sector fields with trivial internal transport.
pub fn scalar_field(
    form: ScalarForm,
    stat: Stat,
    comp: &Idx,
    x: &FieldPoint,
    deriv: Option<usize>,
    l: &ModeLattice,
) -> Result<FieldExpr, FieldError> {
    check_deriv(deriv)?;
    let sec = stat.sector();
    let pm = if stat == Stat::Boson { 1 } else { -1 };
    let mut out = GradedExpr::zero();
    for m in l.modes_for(Family::Scalar) {
        let id = mode_idx(m);
        let c = comp.clone();
        let parts = match form {
            ScalarForm::Phi => [
                (-1, 1, OpGen::a_up(sec, id.clone(), c.clone())),
                (1, 1, OpGen::a_dag_up(sec, id, c)),
            ],
            ScalarForm::PhiStar => [
                (-1, 1, OpGen::a_dag_up(sec, id.clone(), c.clone())),
                (1, 1, OpGen::a_up(sec, id, c)),
            ],
            ScalarForm::CPhi => [
                (1, 1, OpGen::a_low(sec, id.clone(), c.clone())),
                (-1, 1, OpGen::a_dag_low(sec, id, c)),
            ],
            ScalarForm::CPhiStar => [
                (1, 1, OpGen::a_dag_low(sec, id.clone(), c.clone())),
                (-1, 1, OpGen::a_low(sec, id, c)),
            ],
            ScalarForm::PhiBar => [
                (-1, pm, OpGen::a_low(sec, id.clone(), c.clone())),
                (1, 1, OpGen::a_dag_low(sec, id, c)),
            ],
        };
        for (sign, k, g) in parts {
            let w = wave(l, Family::Scalar, m, sign, x, deriv)?;
            let w = if k < 0 { -w } else { w };
            out.add_assign(&GradedExpr::gen(g).scale(&w));
        }
    }
    Ok(out)
}

fn spinor_index(comp: &Idx) -> Result<usize, FieldError> {
    match comp.as_val() {
        Some(a) if a < 4 => Ok(a as usize),
        _ => Err(FieldError::BadComponent(comp.to_string(), "dirac")),
    }
}

/// `K(p)` for a Dirac mode.
pub fn mode_boost(l: &ModeLattice, m: &ModeIndex) -> Result<SpinMatrix, FieldError> {
    let p = OnShellMomentum::new(m.p.clone(), l.mass(Family::Dirac).clone())?;
    Ok(boost_k(&p)?)
}

/// `ψ^α = Σ w (e^{-ipx} K^α_A a^A + e^{ipx} K^α_{A+2} c†^A)`.
pub fn dirac_field(
    comp: &Idx,
    x: &FieldPoint,
    deriv: Option<usize>,
    l: &ModeLattice,
) -> Result<FieldExpr, FieldError> {
    check_deriv(deriv)?;
    let alpha = spinor_index(comp)?;
    let mut out = GradedExpr::zero();
    for m in l.modes_for(Family::Dirac) {
        let k = mode_boost(l, m)?;
        let down = wave(l, Family::Dirac, m, -1, x, deriv)?;
        let up = wave(l, Family::Dirac, m, 1, x, deriv)?;
        for a in 0..2u32 {
            let ai = Idx::Val(a);
            let ka = k.get(alpha, a as usize);
            let kc = k.get(alpha, a as usize + 2);
            out.add_assign(
                &GradedExpr::gen(OpGen::a_up(Sector::DiracParticle, mode_idx(m), ai.clone()))
                    .scale(&(&down * ka)),
            );
            out.add_assign(
                &GradedExpr::gen(OpGen::a_dag_up(Sector::DiracAntiparticle, mode_idx(m), ai))
                    .scale(&(&up * kc)),
            );
        }
    }
    Ok(out)
}

/// `ψ̄_α = Σ w (−e^{-ipx} K̄^{A+2}_α c_A + e^{ipx} K̄^A_α a†_A)` with `K̄ = γ⁰K†γ⁰ = K⁻¹`.
pub fn dirac_bar(
    comp: &Idx,
    x: &FieldPoint,
    deriv: Option<usize>,
    l: &ModeLattice,
) -> Result<FieldExpr, FieldError> {
    check_deriv(deriv)?;
    let alpha = spinor_index(comp)?;
    let mut out = GradedExpr::zero();
    for m in l.modes_for(Family::Dirac) {
        let kb = mode_boost(l, m)?.dirac_adjoint();
        let down = wave(l, Family::Dirac, m, -1, x, deriv)?;
        let up = wave(l, Family::Dirac, m, 1, x, deriv)?;
        for a in 0..2u32 {
            let ai = Idx::Val(a);
            let kc = kb.get(a as usize + 2, alpha);
            let ka = kb.get(a as usize, alpha);
            out.add_assign(
                &GradedExpr::gen(OpGen::a_low(
                    Sector::DiracAntiparticle,
                    mode_idx(m),
                    ai.clone(),
                ))
                .scale(&-(&down * kc)),
            );
            out.add_assign(
                &GradedExpr::gen(OpGen::a_dag_low(Sector::DiracParticle, mode_idx(m), ai))
                    .scale(&(&up * ka)),
            );
        }
    }
    Ok(out)
}

/// Dressed Dirac operators at one mode: `a^β = K^β_A a^A`, `a†_α = K̄^A_α a†_A`,
/// `c_α = K̄^{A+2}_α c_A`, `c†^β = K^β_{A+2} c†^A`.
pub fn dressed_dirac(l: &ModeLattice, mode: u32) -> Result<[[FieldExpr; 4]; 4], FieldError> {
    let m = l.mode(mode)?;
    let k = mode_boost(l, m)?;
    let kb = k.dirac_adjoint();
    let id = mode_idx(m);
    let mut out: [[FieldExpr; 4]; 4] = Default::default();
    for al in 0..4 {
        for a in 0..2usize {
            let ai = Idx::Val(a as u32);
            out[0][al].add_assign(
                &GradedExpr::gen(OpGen::a_up(Sector::DiracParticle, id.clone(), ai.clone()))
                    .scale(k.get(al, a)),
            );
            out[1][al].add_assign(
                &GradedExpr::gen(OpGen::a_dag_low(
                    Sector::DiracParticle,
                    id.clone(),
                    ai.clone(),
                ))
                .scale(kb.get(a, al)),
            );
            out[2][al].add_assign(
                &GradedExpr::gen(OpGen::a_low(
                    Sector::DiracAntiparticle,
                    id.clone(),
                    ai.clone(),
                ))
                .scale(kb.get(a + 2, al)),
            );
            out[3][al].add_assign(
                &GradedExpr::gen(OpGen::a_dag_up(Sector::DiracAntiparticle, id.clone(), ai))
                    .scale(k.get(al, a + 2)),
            );
        }
    }
    Ok(out)
}

/// `A^I_λ = Σ w (e^{-ipx} b^I_λ + e^{ipx} b†^I_λ)`.
pub fn gauge_field(
    lambda: u8,
    comp: &Idx,
    x: &FieldPoint,
    deriv: Option<usize>,
    l: &ModeLattice,
) -> Result<FieldExpr, FieldError> {
    check_deriv(deriv)?;
    if lambda > 3 {
        return Err(FieldError::BadComponent(lambda.to_string(), "gauge"));
    }
    let mut out = GradedExpr::zero();
    for m in l.modes_for(Family::Gauge) {
        let down = wave(l, Family::Gauge, m, -1, x, deriv)?;
        let up = wave(l, Family::Gauge, m, 1, x, deriv)?;
        out.add_assign(&GradedExpr::gen(OpGen::b(lambda, comp.clone(), mode_idx(m))).scale(&down));
        out.add_assign(
            &GradedExpr::gen(OpGen::b_dag(lambda, comp.clone(), mode_idx(m))).scale(&up),
        );
    }
    Ok(out)
}

/// `ω^I = Σ w (e^{-ipx} g^I + e^{ipx} k†^I)`.
pub fn ghost_field(
    comp: &Idx,
    x: &FieldPoint,
    deriv: Option<usize>,
    l: &ModeLattice,
) -> Result<FieldExpr, FieldError> {
    check_deriv(deriv)?;
    let mut out = GradedExpr::zero();
    for m in l.modes_for(Family::Ghost) {
        let down = wave(l, Family::Ghost, m, -1, x, deriv)?;
        let up = wave(l, Family::Ghost, m, 1, x, deriv)?;
        out.add_assign(
            &GradedExpr::gen(OpGen::a_up(Sector::Ghost, mode_idx(m), comp.clone())).scale(&down),
        );
        out.add_assign(
            &GradedExpr::gen(OpGen::a_dag_up(
                Sector::Antighost,
                mode_idx(m),
                comp.clone(),
            ))
            .scale(&up),
        );
    }
    Ok(out)
}

/// `ω̄_I = Σ w (−e^{-ipx} k_I + e^{ipx} g†_I)`.
pub fn antighost_field(
    comp: &Idx,
    x: &FieldPoint,
    deriv: Option<usize>,
    l: &ModeLattice,
) -> Result<FieldExpr, FieldError> {
    check_deriv(deriv)?;
    let mut out = GradedExpr::zero();
    for m in l.modes_for(Family::Ghost) {
        let down = wave(l, Family::Ghost, m, -1, x, deriv)?;
        let up = wave(l, Family::Ghost, m, 1, x, deriv)?;
        out.add_assign(
            &GradedExpr::gen(OpGen::a_low(Sector::Antighost, mode_idx(m), comp.clone()))
                .scale(&-down),
        );
        out.add_assign(
            &GradedExpr::gen(OpGen::a_dag_low(Sector::Ghost, mode_idx(m), comp.clone())).scale(&up),
        );
    }
    Ok(out)
}

pub fn field(
    sector: FieldSector,
    comp: &Comp,
    x: &FieldPoint,
    deriv: Option<usize>,
    l: &ModeLattice,
) -> Result<FieldExpr, FieldError> {
    match sector {
        FieldSector::Scalar(stat) => scalar_field(ScalarForm::Phi, stat, &comp.index, x, deriv, l),
        FieldSector::Dirac => dirac_field(&comp.index, x, deriv, l),
        FieldSector::Gauge => gauge_field(comp.lambda, &comp.index, x, deriv, l),
        FieldSector::Ghost => ghost_field(&comp.index, x, deriv, l),
    }
}

/// The conjugate field `φ̄`, `ψ̄` or `ω̄`; the gauge field is real.
pub fn conjugate_field(
    sector: FieldSector,
    comp: &Comp,
    x: &FieldPoint,
    deriv: Option<usize>,
    l: &ModeLattice,
) -> Result<FieldExpr, FieldError> {
    match sector {
        FieldSector::Scalar(stat) => {
            scalar_field(ScalarForm::PhiBar, stat, &comp.index, x, deriv, l)
        }
        FieldSector::Dirac => dirac_bar(&comp.index, x, deriv, l),
        FieldSector::Gauge => Err(FieldError::RealSector("gauge")),
        FieldSector::Ghost => antighost_field(&comp.index, x, deriv, l),
    }
}

/// `⟦f, g⟧` as a c-number.
pub fn field_supercommutator(f: &FieldExpr, g: &FieldExpr) -> Result<Scalar, FieldError> {
    let b = super_bracket(f, g)?;
    let ops = b.terms().filter(|(w, _)| !w.is_empty()).count();
    if ops > 0 {
        return Err(FieldError::NotScalar(ops));
    }
    Ok(b.scalar_part())
}

/// Spinor matrix `M^β_α = ⟦ψ̄_α(x), ψ^β(x′)⟧` (row `β`, column `α`).
pub fn dirac_supercommutator(
    x: &FieldPoint,
    xp: &FieldPoint,
    l: &ModeLattice,
) -> Result<SpinMatrix, FieldError> {
    let mut out = SpinMatrix::zero();
    let bars: Vec<_> = (0..4)
        .map(|a| dirac_bar(&Idx::Val(a), x, None, l))
        .collect::<Result<_, _>>()?;
    let psis: Vec<_> = (0..4)
        .map(|b| dirac_field(&Idx::Val(b), xp, None, l))
        .collect::<Result<_, _>>()?;
    for (al, bar) in bars.iter().enumerate() {
        for (be, psi) in psis.iter().enumerate() {
            out.0[be][al] = field_supercommutator(bar, psi)?;
        }
    }
    Ok(out)
}

/// `D^±(y) = ±Σ (1/2E) e^{∓i⟨p,y⟩}`, optionally differentiated in `y^λ`.
pub fn propagator_d(
    sign: i32,
    y: &FieldPoint,
    l: &ModeLattice,
    fam: Family,
    deriv: Option<usize>,
) -> Result<Scalar, FieldError> {
    check_deriv(deriv)?;
    let mut out = Scalar::zero();
    for m in l.modes_for(fam) {
        let t = &inv_two_energy(l, fam, m)? * &plane(l, fam, m, -sign, y, deriv)?;
        out.add_assign(&t);
    }
    Ok(if sign < 0 { -out } else { out })
}

/// `𝒟 = D⁺ + D⁻`.
pub fn propagator_full(
    y: &FieldPoint,
    l: &ModeLattice,
    fam: Family,
    deriv: Option<usize>,
) -> Result<Scalar, FieldError> {
    Ok(&propagator_d(1, y, l, fam, deriv)? + &propagator_d(-1, y, l, fam, deriv)?)
}

/// `δ_lattice(y⊥) = Σ_p e^{ip⊥·y⊥}` over the modes of a family.
pub fn delta_lattice(y: &FieldPoint, l: &ModeLattice, fam: Family) -> Result<Scalar, FieldError> {
    let ys = y.spatial_part();
    let mut out = Scalar::zero();
    for m in l.modes_for(fam) {
        let e = l.energy(fam, m)?;
        out.add_assign(&Scalar::phase(Phase::plane_wave(1, &e, &m.p, &ys)));
    }
    Ok(out)
}

/// Checks that every single-generator term carries `e^{-i⟨p,x⟩}` for an
/// absorption and `e^{+i⟨p,x⟩}` for an emission (up to the reversed
/// convention, selected by `reversed`).
pub fn phase_pairing_holds(e: &FieldExpr, x: &FieldPoint, l: &ModeLattice, reversed: bool) -> bool {
    e.terms().all(|(w, c)| {
        let [g] = w.as_slice() else { return false };
        let Some(id) = g.mode.as_val() else {
            return false;
        };
        let Ok(m) = l.mode(id) else { return false };
        let fam = match g.sector {
            Sector::Scalar | Sector::FermiScalar => Family::Scalar,
            Sector::DiracParticle | Sector::DiracAntiparticle => Family::Dirac,
            Sector::Gauge => Family::Gauge,
            _ => Family::Ghost,
        };
        let Ok(en) = l.energy(fam, m) else {
            return false;
        };
        let sign = if g.is_absorb() != reversed { -1 } else { 1 };
        let want = Phase::plane_wave(sign, &en, &m.p, x);
        c.terms().all(|(k, _)| *k.phase() == want)
    })
}

/// Expresses `s` as `k·b` for one of the named basis elements, if possible.
pub fn express_in(s: &Scalar, basis: &[(String, Scalar)]) -> Option<String> {
    if s.is_zero() {
        return Some("0".into());
    }
    for (name, b) in basis {
        let Some((bk, bc)) = b.terms().next() else {
            continue;
        };
        let Some((sk, sc)) = s
            .terms()
            .find(|(k, _)| k.phase() == bk.phase() && k.radical() == bk.radical())
        else {
            continue;
        };
        let Some(inv) = bc.inv() else { continue };
        let k = sc * &inv;
        // Index deltas of the matching term travel with the coefficient.
        let deltas = sk.deltas().fold(Scalar::one(), |acc, d| {
            let (a, c) = d.args();
            &acc * &Scalar::delta(a.clone(), c.clone())
        });
        let cand = &b.scale(&k) * &deltas;
        if (s - &cand).is_zero() {
            let ks = Scalar::from(k);
            let coeff = (&ks * &deltas).to_string();
            return Some(if coeff == "1" {
                name.clone()
            } else {
                format!("({coeff})·{name}")
            });
        }
    }
    None
}

/// The D-basis used to render field super-commutators in `y = x − x′`.
pub fn d_basis(
    y: &FieldPoint,
    l: &ModeLattice,
    fam: Family,
    deriv: Option<usize>,
) -> Result<Vec<(String, Scalar)>, FieldError> {
    let suffix = deriv.map(|d| format!("_,{d}")).unwrap_or_default();
    let dp = propagator_d(1, y, l, fam, deriv)?;
    let dm = propagator_d(-1, y, l, fam, deriv)?;
    Ok(vec![
        (format!("𝒟{suffix}"), &dp + &dm),
        (format!("(D⁺{suffix} − D⁻{suffix})"), &dp - &dm),
        (format!("D⁺{suffix}"), dp),
        (format!("D⁻{suffix}"), dm),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::q;

    fn one_mode() -> ModeLattice {
        ModeLattice::new(vec![[q(3), q(0), q(4)]], q(1), q(3)).unwrap()
    }

    #[test]
    fn ghost_field_on_one_mode() {
        let l = one_mode();
        let x = FieldPoint::named("x");
        let w = ghost_field(&Idx::var("I"), &x, None, &l).unwrap();
        assert_eq!(w.len(), 2);
        assert!(phase_pairing_holds(&w, &x, &l, false));
        let m = &l.modes()[0];
        let wt = weight(&l, Family::Ghost, m).unwrap();
        // (2·5)^{-1/2} squared is 1/10
        assert_eq!(&wt * &wt, Scalar::rational(crate::symbolic::qr(1, 10)));
    }

    #[test]
    fn scalar_at_origin_has_trivial_phases() {
        let l = ModeLattice::axes(1, q(1), q(1)).unwrap();
        let f = scalar_field(
            ScalarForm::Phi,
            Stat::Boson,
            &Idx::var("a"),
            &FieldPoint::origin(),
            None,
            &l,
        )
        .unwrap();
        assert_eq!(f.len(), 14);
        assert!(f
            .terms()
            .all(|(_, c)| c.terms().all(|(k, _)| k.phase().is_one())));
    }

    #[test]
    fn antighost_sign() {
        let l = one_mode();
        let x = FieldPoint::named("x");
        let wb = antighost_field(&Idx::var("I"), &x, None, &l).unwrap();
        let absorb = wb
            .terms()
            .find(|(w, _)| w[0].is_absorb())
            .unwrap()
            .1
            .clone();
        let emit = wb
            .terms()
            .find(|(w, _)| !w[0].is_absorb())
            .unwrap()
            .1
            .clone();
        assert!(phase_pairing_holds(&wb, &x, &l, false));
        assert_eq!(
            absorb
                .eval(&crate::symbolic::Binding::default().with_event("x", 0.0, [0.0; 3]))
                .unwrap()
                .re
                < 0.0,
            true
        );
        assert!(
            emit.eval(&crate::symbolic::Binding::default().with_event("x", 0.0, [0.0; 3]))
                .unwrap()
                .re
                > 0.0
        );
    }

    #[test]
    fn boson_conjugate_is_cc_star() {
        let l = ModeLattice::axes(1, q(2), q(1)).unwrap();
        let x = FieldPoint::named("x");
        let a = Idx::var("a");
        let bar = scalar_field(ScalarForm::PhiBar, Stat::Boson, &a, &x, None, &l).unwrap();
        let cc = scalar_field(ScalarForm::CPhiStar, Stat::Boson, &a, &x, None, &l).unwrap();
        assert_eq!(bar, cc);
        let fbar = scalar_field(ScalarForm::PhiBar, Stat::Fermion, &a, &x, None, &l).unwrap();
        let fcc = scalar_field(ScalarForm::CPhiStar, Stat::Fermion, &a, &x, None, &l).unwrap();
        let diff = &fcc - &fbar;
        assert!(!diff.is_zero());
        assert!(diff.terms().all(|(w, _)| w[0].is_absorb()));
        let sum = &fcc + &fbar;
        assert!(sum.terms().all(|(w, _)| !w[0].is_absorb()));
    }

    #[test]
    fn dirac_component_range() {
        let l = one_mode();
        assert!(dirac_field(&Idx::Val(4), &FieldPoint::origin(), None, &l).is_err());
        assert!(matches!(
            conjugate_field(
                FieldSector::Gauge,
                &Comp::val(0),
                &FieldPoint::origin(),
                None,
                &l
            ),
            Err(FieldError::RealSector(_))
        ));
    }

    #[test]
    fn propagator_zero_time_vanishes() {
        let l = ModeLattice::cube(1, q(1), q(1)).unwrap();
        let y = FieldPoint::spatial("y");
        assert!(propagator_full(&y, &l, Family::Scalar, None)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn express_recognises_d() {
        let l = ModeLattice::axes(1, q(1), q(1)).unwrap();
        let y = FieldPoint::named("y");
        let basis = d_basis(&y, &l, Family::Scalar, None).unwrap();
        let s = &basis[0].1 * &Scalar::delta(Idx::var("a"), Idx::var("b"));
        let r = express_in(&s, &basis).unwrap();
        assert!(r.contains("𝒟"), "{r}");
    }
}
