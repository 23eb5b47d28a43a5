//! Spatially integrated, normal-ordered field bilinears reduced to
//! number-operator form.

use thiserror::Error;

use crate::algebra::{koszul_product, GradedExpr, OpGen, Rule, Sector};
use crate::fields::{
    antighost_field, dirac_bar, dirac_field, ghost_field, p_lower, scalar_field, FieldError,
    FieldExpr, FieldSector, ScalarForm, Stat,
};
use crate::gamma::{gamma, metric};
use crate::lattice::{Family, ModeLattice};
use crate::symbolic::{FieldPoint, Idx, Scalar, Symbol, Q};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FunctionalError {
    #[error("density keeps a phase in point label {0} after integration")]
    NonIntegrable(String),
    #[error("functional not defined for the {0} sector")]
    UnsupportedSector(&'static str),
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Clone, Debug, PartialEq)]
pub struct FunctionalResult {
    pub name: String,
    pub reduced: GradedExpr,
    pub target: GradedExpr,
    pub matched: bool,
    pub residual: GradedExpr,
    /// The density that was integrated.
    pub density: Density,
}

impl FunctionalResult {
    pub fn new(name: impl Into<String>, reduced: GradedExpr, target: GradedExpr) -> Self {
        let residual = &reduced - &target;
        FunctionalResult {
            name: name.into(),
            matched: residual.is_zero(),
            reduced,
            target,
            residual,
            density: Density::default(),
        }
    }

    fn with_density(mut self, d: Density) -> Self {
        self.density = d;
        self
    }

    /// No `e^{±i·E·t}` factor survives in the reduced form.
    pub fn time_independent(&self) -> bool {
        !self.reduced.has_time_phase()
    }
}

const POINT: &str = "x";

/// The common event `(t, x)` at which densities are built.
pub fn density_point() -> FieldPoint {
    FieldPoint::named(POINT).at_time("t")
}

/// Normal-ordered product of two fields at the same event.
pub fn bilinear(a: &FieldExpr, b: &FieldExpr) -> GradedExpr {
    koszul_product(a, b, Rule::Modified)
}

/// A density kept as a sum `Σ c·A·B` of field bilinears at [`density_point`].
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Density {
    pub terms: Vec<(Scalar, FieldExpr, FieldExpr)>,
}

impl Density {
    pub fn pair(a: FieldExpr, b: FieldExpr) -> Self {
        Density {
            terms: vec![(Scalar::one(), a, b)],
        }
    }

    pub fn add(&mut self, o: Density) {
        self.terms.extend(o.terms);
    }

    pub fn scale(mut self, c: &Scalar) -> Density {
        for t in &mut self.terms {
            t.0 = &t.0 * c;
        }
        self
    }

    pub fn normal_ordered(&self) -> GradedExpr {
        let mut out = GradedExpr::zero();
        for (c, a, b) in &self.terms {
            out.add_assign(&bilinear(a, b).scale(c));
        }
        out
    }
}

fn integrate(d: &Density) -> Result<GradedExpr, FunctionalError> {
    spatial_integral(&d.normal_ordered())
}

/// `∫d³x` of a density built at [`density_point`], normal-ordered.
pub fn spatial_integral(density: &GradedExpr) -> Result<GradedExpr, FunctionalError> {
    let label = Symbol::new(POINT);
    let out = density.integrate_space(&label);
    for (_, c) in out.terms() {
        for (k, _) in c.terms() {
            if let Some(s) = k.phase().space_labels().next() {
                return Err(FunctionalError::NonIntegrable(s.to_string()));
            }
        }
    }
    Ok(crate::algebra::normal_order(&out))
}

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

fn pair(a: OpGen, b: OpGen, c: Scalar) -> GradedExpr {
    GradedExpr::word(vec![a, b], c, Rule::Modified)
}

/// `Σ_α (ψ̄ M)_α ψ^α`-type spinor bilinear: `Σ_{αβ} ψ̄_α M^α_β ψ^β`.
fn spinor_bilinear(bar: &[FieldExpr], m: &crate::gamma::SpinMatrix, psi: &[FieldExpr]) -> Density {
    let mut out = Density::default();
    for (a, fa) in bar.iter().enumerate() {
        for (b, fb) in psi.iter().enumerate() {
            let k = m.get(a, b);
            if !k.is_zero() {
                out.terms.push((k.clone(), fa.clone(), fb.clone()));
            }
        }
    }
    out
}

fn dirac_set(
    bar: bool,
    deriv: Option<usize>,
    l: &ModeLattice,
) -> Result<Vec<FieldExpr>, FunctionalError> {
    let x = density_point();
    (0..4u32)
        .map(|a| {
            if bar {
                dirac_bar(&Idx::Val(a), &x, deriv, l)
            } else {
                dirac_field(&Idx::Val(a), &x, deriv, l)
            }
            .map_err(FunctionalError::from)
        })
        .collect()
}

fn inv_two_m(l: &ModeLattice) -> Scalar {
    Scalar::rational(q(1) / (l.mass(Family::Dirac) * q(2)))
}

/// `Σ_p c(p)(a†_A a^A + s·c†^A c_A)`.
fn dirac_number_form(
    l: &ModeLattice,
    s: i64,
    coeff: impl Fn(&crate::lattice::ModeIndex) -> Result<Scalar, FieldError>,
) -> Result<GradedExpr, FunctionalError> {
    let mut out = GradedExpr::zero();
    for m in l.modes_for(Family::Dirac) {
        let c = coeff(m)?;
        let id = Idx::Val(m.id);
        for a in 0..2u32 {
            let ai = Idx::Val(a);
            out.add_assign(&pair(
                OpGen::a_dag_low(Sector::DiracParticle, id.clone(), ai.clone()),
                OpGen::a_up(Sector::DiracParticle, id.clone(), ai.clone()),
                c.clone(),
            ));
            out.add_assign(&pair(
                OpGen::a_dag_up(Sector::DiracAntiparticle, id.clone(), ai.clone()),
                OpGen::a_low(Sector::DiracAntiparticle, id.clone(), ai),
                c.scale(&s.into()),
            ));
        }
    }
    Ok(out)
}

/// `∫ψ̄γ⁰ψ` against `Σ (1/2m)(a†_A a^A − c†^A c_A)`.
pub fn dirac_charge(l: &ModeLattice) -> Result<FunctionalResult, FunctionalError> {
    let bar = dirac_set(true, None, l)?;
    let psi = dirac_set(false, None, l)?;
    let dens = spinor_bilinear(&bar, &gamma(0).map_err(FieldError::from)?, &psi);
    let reduced = integrate(&dens)?;
    let k = inv_two_m(l);
    let target = dirac_number_form(l, -1, |_| Ok(k.clone()))?;
    Ok(FunctionalResult::new("Dirac charge", reduced, target).with_density(dens))
}

/// Sector 4-momentum component `P_λ`.
pub fn four_momentum(
    sector: FieldSector,
    lambda: usize,
    l: &ModeLattice,
    dim: usize,
) -> Result<FunctionalResult, FunctionalError> {
    match sector {
        FieldSector::Dirac => dirac_momentum(lambda, l),
        FieldSector::Ghost => ghost_momentum(lambda, l, dim),
        other => Err(FunctionalError::UnsupportedSector(other.name())),
    }
}

/// `P_λ = (i/2)∫(−ψ̄_,λ γ⁰ψ + ψ̄γ⁰ψ_,λ)`.
fn dirac_momentum(lambda: usize, l: &ModeLattice) -> Result<FunctionalResult, FunctionalError> {
    let g0 = gamma(0).map_err(FieldError::from)?;
    let bar = dirac_set(true, None, l)?;
    let psi = dirac_set(false, None, l)?;
    let bar_l = dirac_set(true, Some(lambda), l)?;
    let psi_l = dirac_set(false, Some(lambda), l)?;
    let mut dens = spinor_bilinear(&bar, &g0, &psi_l);
    dens.add(spinor_bilinear(&bar_l, &g0, &psi).scale(&Scalar::int(-1)));
    let dens = dens.scale(&Scalar::i().scale(&Q::new(1.into(), 2.into()).into()));
    let reduced = integrate(&dens)?;
    let k = inv_two_m(l);
    let target = dirac_number_form(l, 1, |m| Ok(&p_lower(l, Family::Dirac, m, lambda)? * &k))?;
    Ok(FunctionalResult::new(format!("Dirac P_{lambda}"), reduced, target).with_density(dens))
}

/// `Σ_p c(p)(k†^I k_I + g†_I g^I)` summed over the internal index.
fn ghost_number_form(
    l: &ModeLattice,
    dim: usize,
    coeff: impl Fn(&crate::lattice::ModeIndex) -> Result<Scalar, FieldError>,
) -> Result<GradedExpr, FunctionalError> {
    let mut out = GradedExpr::zero();
    for m in l.modes_for(Family::Ghost) {
        let c = coeff(m)?;
        let id = Idx::Val(m.id);
        for i in 0..dim as u32 {
            let ii = Idx::Val(i);
            out.add_assign(&pair(
                OpGen::a_dag_up(Sector::Antighost, id.clone(), ii.clone()),
                OpGen::a_low(Sector::Antighost, id.clone(), ii.clone()),
                c.clone(),
            ));
            out.add_assign(&pair(
                OpGen::a_dag_low(Sector::Ghost, id.clone(), ii.clone()),
                OpGen::a_up(Sector::Ghost, id.clone(), ii),
                c.clone(),
            ));
        }
    }
    Ok(out)
}

fn ghost_pair(
    i: usize,
    bar_d: Option<usize>,
    w_d: Option<usize>,
    l: &ModeLattice,
) -> Result<Density, FunctionalError> {
    let x = density_point();
    let ii = Idx::Val(i as u32);
    let b = antighost_field(&ii, &x, bar_d, l)?;
    let w = ghost_field(&ii, &x, w_d, l)?;
    Ok(Density::pair(b, w))
}

/// `𝒯⁰_λ = ω̄_,0 ω_,λ + ω̄_,λ ω_,0 − g^{νρ} ω̄_,ν ω_,ρ δ⁰_λ`, summed over `I`.
fn ghost_t0(lambda: usize, l: &ModeLattice, dim: usize) -> Result<Density, FunctionalError> {
    let mut dens = Density::default();
    for i in 0..dim {
        dens.add(ghost_pair(i, Some(0), Some(lambda), l)?);
        dens.add(ghost_pair(i, Some(lambda), Some(0), l)?);
        if lambda == 0 {
            for nu in 0..4 {
                let t = ghost_pair(i, Some(nu), Some(nu), l)?;
                dens.add(t.scale(&Scalar::int(-metric(nu))));
            }
        }
    }
    Ok(dens)
}

fn ghost_momentum(
    lambda: usize,
    l: &ModeLattice,
    dim: usize,
) -> Result<FunctionalResult, FunctionalError> {
    let dens = ghost_t0(lambda, l, dim)?;
    let reduced = integrate(&dens)?;
    let target = ghost_number_form(l, dim, |m| p_lower(l, Family::Ghost, m, lambda))?;
    Ok(FunctionalResult::new(format!("ghost P_{lambda}"), reduced, target).with_density(dens))
}

/// Free Hamiltonian of a sector.
pub fn free_hamiltonian(
    sector: FieldSector,
    l: &ModeLattice,
    dim: usize,
) -> Result<FunctionalResult, FunctionalError> {
    match sector {
        FieldSector::Scalar(stat) => scalar_hamiltonian(stat, l, dim),
        FieldSector::Dirac => dirac_hamiltonian(l),
        FieldSector::Ghost => {
            let dens = ghost_t0(0, l, dim)?;
            let reduced = integrate(&dens)?;
            let target = ghost_number_form(l, dim, |m| p_lower(l, Family::Ghost, m, 0))?;
            Ok(FunctionalResult::new("ghost H", reduced, target).with_density(dens))
        }
        FieldSector::Gauge => Err(FunctionalError::UnsupportedSector("gauge")),
    }
}

/// `H = ½∫(φ̄_,0 φ_,0 − g^{ij} φ̄_,i φ_,j + m² φ̄φ)` against
/// `½Σ p₀(a†^β a_β + a†_β a^β)`.
fn scalar_hamiltonian(
    stat: Stat,
    l: &ModeLattice,
    dim: usize,
) -> Result<FunctionalResult, FunctionalError> {
    let x = density_point();
    let m = l.mass(Family::Scalar).clone();
    let mut dens = Density::default();
    for a in 0..dim as u32 {
        let ai = Idx::Val(a);
        let field = |form, d| scalar_field(form, stat, &ai, &x, d, l);
        for nu in 0..4 {
            // −g^{νν} for spatial ν is +1
            dens.add(Density::pair(
                field(ScalarForm::PhiBar, Some(nu))?,
                field(ScalarForm::Phi, Some(nu))?,
            ));
        }
        let t = Density::pair(
            field(ScalarForm::PhiBar, None)?,
            field(ScalarForm::Phi, None)?,
        );
        dens.add(t.scale(&Scalar::rational(&m * &m)));
    }
    let dens = dens.scale(&Scalar::rational(Q::new(1.into(), 2.into())));
    let reduced = integrate(&dens)?;
    let sec = stat.sector();
    let mut target = GradedExpr::zero();
    for md in l.modes_for(Family::Scalar) {
        let c = &p_lower(l, Family::Scalar, md, 0)? * &Scalar::rational(Q::new(1.into(), 2.into()));
        let id = Idx::Val(md.id);
        for b in 0..dim as u32 {
            let bi = Idx::Val(b);
            target.add_assign(&pair(
                OpGen::a_dag_up(sec, id.clone(), bi.clone()),
                OpGen::a_low(sec, id.clone(), bi.clone()),
                c.clone(),
            ));
            target.add_assign(&pair(
                OpGen::a_dag_low(sec, id.clone(), bi.clone()),
                OpGen::a_up(sec, id.clone(), bi),
                c.clone(),
            ));
        }
    }
    Ok(
        FunctionalResult::new(format!("scalar H [{}]", stat.name()), reduced, target)
            .with_density(dens),
    )
}

/// `ℋ = (i/2)(ψ̄_,i γ^i ψ − ψ̄ γ^i ψ_,i) + m ψ̄ψ`, the Legendre transform of
/// the symmetric Dirac Lagrangian.
fn dirac_hamiltonian(l: &ModeLattice) -> Result<FunctionalResult, FunctionalError> {
    let bar = dirac_set(true, None, l)?;
    let psi = dirac_set(false, None, l)?;
    let mut dens = Density::default();
    for i in 1..4 {
        let gi = gamma(i).map_err(FieldError::from)?;
        let bar_i = dirac_set(true, Some(i), l)?;
        let psi_i = dirac_set(false, Some(i), l)?;
        dens.add(spinor_bilinear(&bar_i, &gi, &psi));
        dens.add(spinor_bilinear(&bar, &gi, &psi_i).scale(&Scalar::int(-1)));
    }
    let mut dens = dens.scale(&Scalar::i().scale(&Q::new(1.into(), 2.into()).into()));
    let m = Scalar::rational(l.mass(Family::Dirac).clone());
    dens.add(spinor_bilinear(&bar, &crate::gamma::SpinMatrix::identity(), &psi).scale(&m));
    let reduced = integrate(&dens)?;
    let k = inv_two_m(l);
    let target = dirac_number_form(l, 1, |md| Ok(&p_lower(l, Family::Dirac, md, 0)? * &k))?;
    Ok(FunctionalResult::new("Dirac H", reduced, target).with_density(dens))
}

/// `∫𝒥^λ_FP` with `𝒥^λ = g^{λμ}(ω̄_I,μ ω^I − ω̄_I ω^I_,μ)` against
/// `i g^{λμ} Σ (p_μ/p₀)(k†^I k_I + g†_I g^I)`.
pub fn fp_current_integral(
    lambda: usize,
    l: &ModeLattice,
    dim: usize,
) -> Result<FunctionalResult, FunctionalError> {
    let mut dens = Density::default();
    for i in 0..dim {
        dens.add(ghost_pair(i, Some(lambda), None, l)?);
        dens.add(ghost_pair(i, None, Some(lambda), l)?.scale(&Scalar::int(-1)));
    }
    let g = Scalar::int(metric(lambda));
    let dens = dens.scale(&g);
    let reduced = integrate(&dens)?;
    let target = ghost_number_form(l, dim, |m| {
        let p0 = p_lower(l, Family::Ghost, m, 0)?;
        let inv = p0.try_inv().expect("massless modes exclude p = 0");
        Ok(&(&(&Scalar::i() * &g) * &p_lower(l, Family::Ghost, m, lambda)?) * &inv)
    })?;
    Ok(FunctionalResult::new(format!("FP current J^{lambda}"), reduced, target).with_density(dens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::q as qq;

    fn dirac_lattice() -> ModeLattice {
        ModeLattice::new(
            vec![
                [qq(0), qq(0), qq(0)],
                [qq(4), qq(0), qq(0)],
                [qq(-4), qq(0), qq(0)],
            ],
            qq(2),
            qq(3),
        )
        .unwrap()
    }

    #[test]
    fn dirac_charge_reduces() {
        let r = dirac_charge(&dirac_lattice()).unwrap();
        assert!(r.matched, "{}", r.residual);
        assert!(r.time_independent());
    }

    #[test]
    fn dirac_momentum_and_hamiltonian() {
        let l = dirac_lattice();
        for lam in 0..4 {
            let r = four_momentum(FieldSector::Dirac, lam, &l, 1).unwrap();
            assert!(r.matched, "λ={lam}: {}", r.residual);
        }
        let h = free_hamiltonian(FieldSector::Dirac, &l, 1).unwrap();
        assert!(h.matched, "{}", h.residual);
    }

    #[test]
    fn scalar_hamiltonian_both_statistics() {
        let l = ModeLattice::line(3, 1, qq(2), qq(1)).unwrap();
        for stat in [Stat::Boson, Stat::Fermion] {
            let r = free_hamiltonian(FieldSector::Scalar(stat), &l, 2).unwrap();
            assert!(r.matched, "{}", r.residual);
            assert!(r.time_independent());
        }
    }

    #[test]
    fn ghost_momentum_reduces() {
        let l = ModeLattice::line(3, 1, qq(2), qq(1)).unwrap();
        for lam in 0..4 {
            let r = four_momentum(FieldSector::Ghost, lam, &l, 2).unwrap();
            assert!(r.matched, "λ={lam}: {}", r.residual);
        }
    }

    #[test]
    fn fp_charge_counts_ghosts_minus_antighosts() {
        let l = ModeLattice::new(vec![[qq(3), qq(0), qq(4)]], qq(1), qq(1)).unwrap();
        let r = fp_current_integral(0, &l, 1).unwrap();
        let g = OpGen::a_dag_low(Sector::Ghost, Idx::Val(0), Idx::Val(0));
        let k = OpGen::a_dag_up(Sector::Antighost, Idx::Val(0), Idx::Val(0));
        let coeff = |w0: &OpGen| {
            r.reduced
                .terms()
                .find(|(w, _)| &w[0] == w0)
                .map(|(_, c)| c.clone())
        };
        assert_eq!(coeff(&g), Some(Scalar::i()));
        assert_eq!(coeff(&k), Some(-Scalar::i()));
    }

    #[test]
    fn unsupported_sector() {
        let l = dirac_lattice();
        assert!(matches!(
            four_momentum(FieldSector::Gauge, 0, &l, 1),
            Err(FunctionalError::UnsupportedSector(_))
        ));
    }
}
