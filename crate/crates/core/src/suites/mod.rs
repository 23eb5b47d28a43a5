//! Named verification suites. Each suite turns a [`Settings`] into a list of
//! [`Check`]s; nothing here panics on a failed identity.

mod oracle;

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::algebra::{
    koszul_product, normal_order, super_bracket, AlgebraError, GradedExpr, OpGen, Pos, Rule,
    Sector, Species,
};
use crate::bv::{
    antiderivation_residual, antiderivation_residual_printed, brst_operator, bv_laplacian,
    fp_current_target, free_ghost_lagrangian, generic_coords, ghost_lagrangian_decompose,
    ghost_number_symmetry, horizontal_diff, jacobi_residual, laplacian_leibniz_residual,
    matter_gauge_lagrangian, noether_current, random_poly, BvError, FiberCoord, FiberPoly,
    TheorySpec,
};
use crate::check::{Check, Residual};
use crate::fields::dirac::{dirac_bracket_check, dressed_bracket_checks};
use crate::fields::equal_time::equal_time_report;
use crate::fields::table::field_table;
use crate::fields::{delta_lattice, propagator_d, propagator_full, FieldError, FieldSector, Stat};
use crate::functionals::{
    dirac_charge, four_momentum, fp_current_integral, free_hamiltonian, FunctionalError,
    FunctionalResult,
};
use crate::gamma::{boost_k, float, shell_projectors, GammaError, OnShellMomentum, SpinMatrix};
use crate::lattice::{Family, LatticeError, ModeLattice};
use crate::lie::{self, LieData, LieError};
use crate::oracle::OracleError;
use crate::symbolic::{q, FieldPoint, Idx, Scalar, Symbol, SymbolicError, Q};

pub use oracle::oracle_suite;

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Functional(#[from] FunctionalError),
    #[error(transparent)]
    Bv(#[from] BvError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Gamma(#[from] GammaError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Symbolic(#[from] SymbolicError),
}

pub type Result<T> = std::result::Result<T, SuiteError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Algebra,
    Propagators,
    EqualTime,
    Functionals,
    Dirac,
    Bv,
    Brst,
    Oracle,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Algebra,
        Suite::Propagators,
        Suite::EqualTime,
        Suite::Functionals,
        Suite::Dirac,
        Suite::Bv,
        Suite::Brst,
        Suite::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Algebra => "algebra",
            Suite::Propagators => "propagators",
            Suite::EqualTime => "equal_time",
            Suite::Functionals => "functionals",
            Suite::Dirac => "dirac",
            Suite::Bv => "bv",
            Suite::Brst => "brst",
            Suite::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = SuiteError;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| SuiteError::UnknownSuite(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct OracleSettings {
    pub enabled: bool,
    pub n_max: usize,
    pub cap: usize,
    pub tol: f64,
}

impl Default for OracleSettings {
    fn default() -> Self {
        OracleSettings {
            enabled: true,
            n_max: 3,
            cap: 1024,
            tol: 1e-12,
        }
    }
}

/// Everything a suite may depend on.
#[derive(Clone, Debug)]
pub struct Settings {
    pub lie: LieData,
    /// Gauge parameter; `None` keeps it symbolic.
    pub xi: Option<Q>,
    pub lattice: ModeLattice,
    /// Internal dimension of the scalar sector.
    pub scalar_dim: usize,
    pub seed: u64,
    pub bv_samples: usize,
    pub brst_samples: usize,
    pub dirac_samples: usize,
    pub oracle: OracleSettings,
}

impl Settings {
    pub fn new(lie: LieData, lattice: ModeLattice) -> Self {
        Settings {
            lie,
            xi: None,
            lattice,
            scalar_dim: 2,
            seed: 0,
            bv_samples: 200,
            brst_samples: 100,
            dirac_samples: 20,
            oracle: OracleSettings::default(),
        }
    }

    pub fn theory(&self) -> TheorySpec {
        let mut t = TheorySpec::new(self.lie.clone());
        if let Some(x) = &self.xi {
            t.xi = Scalar::rational(x.clone());
        }
        t
    }
}

/// Two opposite modes with rational energies in every sector.
pub fn default_lattice() -> ModeLattice {
    ModeLattice::new(vec![[q(4), q(0), q(0)], [q(-4), q(0), q(0)]], q(3), q(3))
        .expect("valid lattice")
}

impl Default for Settings {
    fn default() -> Self {
        Settings::new(lie::su2(), default_lattice())
    }
}

pub fn run_suite(suite: Suite, s: &Settings) -> Result<Vec<Check>> {
    match suite {
        Suite::Algebra => algebra_suite(s),
        Suite::Propagators => propagator_suite(s),
        Suite::EqualTime => equal_time_suite(s),
        Suite::Functionals => functional_suite(s),
        Suite::Dirac => dirac_suite(s),
        Suite::Bv => bv_suite(s),
        Suite::Brst => brst_suite(s),
        Suite::Oracle => {
            if s.oracle.enabled {
                oracle_suite(s)
            } else {
                Ok(Vec::new())
            }
        }
    }
}

fn terms_check(identity: impl Into<String>, anchor: &str, r: usize) -> Check {
    Check::new(identity, anchor, r == 0, Residual::Terms(r))
}

pub(crate) const KINDS: [(Species, Pos, &str); 4] = [
    (Species::Absorb, Pos::Upper, "a^"),
    (Species::Emit, Pos::Lower, "a†_"),
    (Species::Absorb, Pos::Lower, "a_"),
    (Species::Emit, Pos::Upper, "a†^"),
];

/// Elementary super-commutators over every mode pair and internal pair.
pub fn algebra_suite(s: &Settings) -> Result<Vec<Check>> {
    let modes: Vec<u32> = s.lattice.modes().iter().map(|m| m.id).collect();
    let dim = s.scalar_dim as u32;
    let mut out = Vec::new();
    for sector in [
        Sector::Scalar,
        Sector::FermiScalar,
        Sector::DiracParticle,
        Sector::DiracAntiparticle,
        Sector::Ghost,
        Sector::Antighost,
        Sector::Nl,
    ] {
        let anchor = format!("algebra/{}", sector.name());
        let gen = |k: usize, m: u32, i: u32| {
            let (sp, pos, _) = KINDS[k];
            GradedExpr::gen(OpGen::new(sp, pos, sector, Idx::Val(m), Idx::Val(i)))
        };
        for x in 0..4 {
            for y in x..4 {
                let contracts = (x, y) == (0, 1) || (x, y) == (2, 3);
                let mut r = 0;
                for p in &modes {
                    for qq in &modes {
                        for a in 0..dim {
                            for b in 0..dim {
                                let br = super_bracket(&gen(x, *p, a), &gen(y, *qq, b))?;
                                let want = if contracts && p == qq && a == b {
                                    GradedExpr::one()
                                } else {
                                    GradedExpr::zero()
                                };
                                r += (&br - &want).term_count();
                            }
                        }
                    }
                }
                let rhs = if contracts { "δδ" } else { "0" };
                out.push(terms_check(
                    format!(
                        "⟦{}, {}⟧ = {rhs} [{}]",
                        KINDS[x].2,
                        KINDS[y].2,
                        sector.name()
                    ),
                    &anchor,
                    r,
                ));
            }
        }
        // normal order with the modified rule is a pure reordering
        let (p, qq) = (modes[0], *modes.last().unwrap_or(&modes[0]));
        let ab = koszul_product(&gen(0, p, 0), &gen(1, qq, 0), Rule::Physical);
        let no = normal_order(&ab);
        let sign = if sector.odd() { -1 } else { 1 };
        let want =
            koszul_product(&gen(1, qq, 0), &gen(0, p, 0), Rule::Physical).scale(&Scalar::int(sign));
        out.push(terms_check(
            format!("normal order drops contractions [{}]", sector.name()),
            &anchor,
            (&no - &want).term_count() + (&normal_order(&no) - &no).term_count(),
        ));
        if sector.odd() {
            let sq = koszul_product(&gen(0, p, 0), &gen(0, p, 0), Rule::Physical);
            out.push(terms_check(
                format!("a^ a^ = 0 [{}]", sector.name()),
                &anchor,
                sq.term_count(),
            ));
        }
    }
    // gauge quanta: [b_λ, b†_μ] = g_{λμ}δδ
    let anchor = "algebra/gauge";
    let (mut r_bd, mut r_bb, mut r_dd) = (0, 0, 0);
    for lam in 0..4u8 {
        for mu in 0..4u8 {
            for p in &modes {
                for qq in &modes {
                    for a in 0..dim {
                        for b in 0..dim {
                            let bl = GradedExpr::gen(OpGen::b(lam, Idx::Val(a), Idx::Val(*p)));
                            let bm = GradedExpr::gen(OpGen::b(mu, Idx::Val(b), Idx::Val(*qq)));
                            let dl = GradedExpr::gen(OpGen::b_dag(lam, Idx::Val(a), Idx::Val(*p)));
                            let dm = GradedExpr::gen(OpGen::b_dag(mu, Idx::Val(b), Idx::Val(*qq)));
                            let want = if lam == mu && p == qq && a == b {
                                Scalar::int(crate::gamma::metric(lam as usize))
                            } else {
                                Scalar::zero()
                            };
                            r_bd += (&super_bracket(&bl, &dm)? - &GradedExpr::scalar(want))
                                .term_count();
                            r_bb += super_bracket(&bl, &bm)?.term_count();
                            r_dd += super_bracket(&dl, &dm)?.term_count();
                        }
                    }
                }
            }
        }
    }
    out.push(terms_check("[b_λ, b†_μ] = g_λμ δδ", anchor, r_bd));
    out.push(terms_check("[b_λ, b_μ] = 0", anchor, r_bb));
    out.push(terms_check("[b†_λ, b†_μ] = 0", anchor, r_dd));
    Ok(out)
}

/// `𝒟(0,x⊥) = 0`, `D⁺(−x) = −D⁻(x)` and `D±_,0(0,x⊥) = −(i/2)δ` for each
/// family present on `l`.
pub fn propagator_identities(l: &ModeLattice) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    propagator_checks(l, &format!("{} modes", l.len()), &mut out)?;
    Ok(out)
}

fn propagator_checks(l: &ModeLattice, label: &str, out: &mut Vec<Check>) -> Result<()> {
    let x = FieldPoint::named("x");
    let y0 = FieldPoint::spatial("y");
    let half_i = Scalar::i().scale(&crate::symbolic::qr(-1, 2).into());
    for fam in [Family::Scalar, Family::Dirac, Family::Gauge, Family::Ghost] {
        if l.modes_for(fam).is_empty() {
            continue;
        }
        let anchor = format!("propagators/{label}");
        let f = fam.name();
        out.push(terms_check(
            format!("𝒟(0,x⊥) = 0 [{f}]"),
            &anchor,
            propagator_full(&y0, l, fam, None)?.len(),
        ));
        let refl = &propagator_d(1, &x.neg(), l, fam, None)? + &propagator_d(-1, &x, l, fam, None)?;
        out.push(terms_check(
            format!("D⁺(−x) = −D⁻(x) [{f}]"),
            &anchor,
            refl.len(),
        ));
        let delta = delta_lattice(&y0, l, fam)?;
        for (sign, name) in [(1, "D⁺"), (-1, "D⁻")] {
            let d0 = propagator_d(sign, &y0, l, fam, Some(0))?;
            out.push(terms_check(
                format!("{name}_,0(0,x⊥) = −(i/2)δ [{f}]"),
                &anchor,
                (&d0 - &(&half_i * &delta)).len(),
            ));
        }
    }
    Ok(())
}

/// Lattice propagator identities on the configured lattice and on the
/// 27-mode cube, plus the field super-commutator table.
pub fn propagator_suite(s: &Settings) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let l = &s.lattice;
    propagator_checks(l, &format!("{} modes", l.len()), &mut out)?;
    let cube = ModeLattice::cube(
        1,
        l.mass(Family::Scalar).clone(),
        l.mass(Family::Dirac).clone(),
    )?;
    propagator_checks(&cube, "27 modes", &mut out)?;
    for stat in [Stat::Boson, Stat::Fermion] {
        out.extend(field_table(l, stat)?);
    }
    Ok(out)
}

pub fn equal_time_suite(s: &Settings) -> Result<Vec<Check>> {
    Ok(equal_time_report(&s.lattice, &s.lie)?)
}

fn functional_checks(r: &FunctionalResult, out: &mut Vec<Check>) {
    out.push(Check::expr(
        format!("{} reduces to its closed form", r.name),
        "functionals",
        &r.reduced,
        &r.target,
    ));
    out.push(Check::new(
        format!("{} is time independent", r.name),
        "functionals",
        r.time_independent(),
        Residual::Terms(usize::from(!r.time_independent())),
    ));
}

/// Every closed-form reduction of the special functionals.
pub fn functional_results(s: &Settings) -> Result<Vec<FunctionalResult>> {
    let l = &s.lattice;
    let gd = s.lie.dim();
    let mut v = vec![dirac_charge(l)?];
    for lam in 0..4 {
        v.push(four_momentum(FieldSector::Dirac, lam, l, 1)?);
        v.push(four_momentum(FieldSector::Ghost, lam, l, gd)?);
    }
    for stat in [Stat::Boson, Stat::Fermion] {
        v.push(free_hamiltonian(
            FieldSector::Scalar(stat),
            l,
            s.scalar_dim,
        )?);
    }
    v.push(free_hamiltonian(FieldSector::Dirac, l, 1)?);
    v.push(free_hamiltonian(FieldSector::Ghost, l, gd)?);
    for lam in 0..4 {
        v.push(fp_current_integral(lam, l, gd)?);
    }
    Ok(v)
}

pub fn functional_suite(s: &Settings) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for r in functional_results(s)? {
        functional_checks(&r, &mut out);
    }
    Ok(out)
}

/// Rational on-shell momenta used by the exact spinor checks.
fn engineered_momenta(l: &ModeLattice) -> Result<Vec<OnShellMomentum>> {
    let mut v = Vec::new();
    let m = l.mass(Family::Dirac).clone();
    for md in l.modes_for(Family::Dirac) {
        v.push(OnShellMomentum::new(md.p.clone(), m.clone())?);
    }
    for (p, mass) in [
        ([0, 0, 0], 3),
        ([4, 0, 0], 3),
        ([0, -4, 0], 3),
        ([0, 0, 12], 5),
        ([6, 6, 7], 60),
    ] {
        v.push(OnShellMomentum::new([q(p[0]), q(p[1]), q(p[2])], q(mass))?);
    }
    Ok(v)
}

pub fn dirac_suite(s: &Settings) -> Result<Vec<Check>> {
    let l = &s.lattice;
    let mut out = dressed_bracket_checks(l)?;
    out.push(dirac_bracket_check(l)?);
    let anchor = "dirac/spinors";
    let (mut r_idem, mut r_orth, mut r_sum, mut r_iso) = (0, 0, 0, 0);
    let id = SpinMatrix::identity();
    let count = |m: &SpinMatrix| -> usize {
        (0..4)
            .flat_map(|i| (0..4).map(move |j| (i, j)))
            .map(|(i, j)| m.get(i, j).len())
            .sum()
    };
    for p in engineered_momenta(l)? {
        let (pp, pm) = shell_projectors(&p)?;
        r_idem += count(&(&(&pp * &pp) - &pp)) + count(&(&(&pm * &pm) - &pm));
        r_orth += count(&(&pp * &pm)) + count(&(&pm * &pp));
        r_sum += count(&(&(&pp + &pm) - &id));
        if p.energy.1.is_one() {
            let k = boost_k(&p)?;
            r_iso += count(&(&(&k.dirac_adjoint() * &k) - &id));
        }
    }
    out.push(terms_check("Π±Π± = Π±", anchor, r_idem));
    out.push(terms_check("Π⁺Π⁻ = Π⁻Π⁺ = 0", anchor, r_orth));
    out.push(terms_check("Π⁺ + Π⁻ = 𝟙", anchor, r_sum));
    out.push(terms_check("K̄(p)K(p) = 𝟙 (exact)", anchor, r_iso));
    let rest = OnShellMomentum::new([q(0), q(0), q(0)], l.mass(Family::Dirac).clone())?;
    out.push(terms_check(
        "K(0) = 𝟙",
        anchor,
        count(&(&boost_k(&rest)? - &id)),
    ));
    let mut rng = ChaCha8Rng::seed_from_u64(s.seed ^ 0xd1ac);
    let mut worst = 0.0f64;
    for _ in 0..s.dirac_samples {
        let p: [f64; 3] = std::array::from_fn(|_| rng.random_range(-5.0..5.0));
        let m = rng.random_range(0.5..5.0);
        let k = float::boost_k(p, m)?;
        let d = float::dirac_adjoint(&k) * k - nalgebra::Matrix4::identity();
        worst = worst.max(float::max_abs(&d));
    }
    out.push(Check::numeric(
        format!("K̄(p)K(p) = 𝟙 on {} random momenta", s.dirac_samples),
        anchor,
        worst,
        1e-12,
    ));
    Ok(out)
}

/// BV identities on seeded random polynomials over three fields and their
/// antifields.
pub fn bv_suite(s: &Settings) -> Result<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64(s.seed ^ 0xb5);
    let (mut r_sq, mut r_lb, mut r_ad, mut r_jac, mut r_pr) = (0, 0, 0, 0, 0);
    for _ in 0..s.bv_samples {
        let par: [bool; 3] = std::array::from_fn(|_| rng.random());
        let cs = generic_coords(par);
        let draw = |rng: &mut ChaCha8Rng| {
            let odd = rng.random();
            random_poly(rng, &cs, 4, 4, odd)
        };
        let (f, g, h) = (draw(&mut rng), draw(&mut rng), draw(&mut rng));
        r_sq += bv_laplacian(&bv_laplacian(&f)).term_count();
        r_lb += laplacian_leibniz_residual(&f, &g)?;
        r_ad += antiderivation_residual(&f, &g, &h)?;
        r_jac += jacobi_residual(&f, &g, &h)?;
        r_pr += antiderivation_residual_printed(&f, &g, &h)?;
    }
    let n = s.bv_samples;
    let a = "bv";
    Ok(vec![
        terms_check(format!("Δ² = 0 on {n} random polynomials"), a, r_sq),
        terms_check(
            format!("Δ(fg) = Δf·g + (−1)^|f|{{f,g}} + (−1)^|f| fΔg on {n} samples"),
            a,
            r_lb,
        ),
        terms_check(
            format!("ad_f is an anti-derivation of grade |f|+1 on {n} samples"),
            a,
            r_ad,
        ),
        terms_check(format!("graded Jacobi identity on {n} samples"), a, r_jac),
        terms_check(
            format!("{{f,gh}} with exponent (|f|+1)(|g|+1) on {n} samples"),
            a,
            r_pr,
        )
        .informational(),
    ])
}

fn s_squared_generators(t: &TheorySpec) -> Result<usize> {
    let s = brst_operator(t);
    let mut r = 0;
    for c in t.base_coords() {
        r += s.apply(&s.image(&c)?)?.term_count();
    }
    Ok(r)
}

fn s_squared_random(t: &TheorySpec, n: usize, rng: &mut ChaCha8Rng) -> Result<usize> {
    let s = brst_operator(t);
    let cs = t.first_jet_coords();
    let mut r = 0;
    for _ in 0..n {
        let odd = rng.random();
        let f = random_poly(rng, &cs, 3, 4, odd);
        r += s.apply(&s.apply(&f)?)?.term_count();
    }
    Ok(r)
}

fn s_commutes_with_d(t: &TheorySpec) -> Result<usize> {
    let s = brst_operator(t);
    let mut r = 0;
    for c in t.base_coords() {
        let f = FiberPoly::var(c);
        for l in 0..4 {
            let a = horizontal_diff(&s.apply(&f)?, l)?;
            let b = s.apply(&horizontal_diff(&f, l)?)?;
            r += (&a - &b).term_count();
        }
    }
    Ok(r)
}

/// BRST nilpotency for the configured algebra and the u(1), su(2), su(3)
/// presets, invariance of the matter–gauge Lagrangian, the ghost Lagrangian
/// decomposition, the Noether currents, and a corrupted-algebra control.
pub fn brst_suite(s: &Settings) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(s.seed ^ 0xb257);
    let mut algebras = vec![s.lie.clone()];
    for p in [lie::u1(), lie::su2(), lie::su3()] {
        if p != s.lie {
            algebras.push(p);
        }
    }
    for (k, lie) in algebras.into_iter().enumerate() {
        let tag = if k == 0 {
            format!("{} (configured)", lie.name)
        } else {
            lie.name.clone()
        };
        let t = TheorySpec::new(lie).with_spinor(1);
        let anchor = format!("brst/{}", t.lie.name);
        out.push(terms_check(
            format!("S² = 0 on generators [{tag}]"),
            &anchor,
            s_squared_generators(&t)?,
        ));
        out.push(terms_check(
            format!("S² = 0 on {} random polynomials [{tag}]", s.brst_samples),
            &anchor,
            s_squared_random(&t, s.brst_samples, &mut rng)?,
        ));
        out.push(terms_check(
            format!("S d_λ = d_λ S [{tag}]"),
            &anchor,
            s_commutes_with_d(&t)?,
        ));
    }
    let anchor = "brst/lagrangian";
    let full = s.theory();
    let l0 = matter_gauge_lagrangian(&full)?;
    let sl = brst_operator(&full).apply(&l0)?;
    out.push(terms_check(
        format!("Sℒ₀ = 0 [{}]", s.lie.name),
        anchor,
        sl.term_count(),
    ));
    let small = s.theory().with_spinor(1);
    let dec = ghost_lagrangian_decompose(&small)?;
    out.push(terms_check(
        format!("ℒ_ghost = S𝒦 + d_H𝓜 [{}]", s.lie.name),
        anchor,
        dec.residual.term_count(),
    ));
    let xi = Symbol::new("ξ");
    out.push(terms_check(
        format!("ℒ_ghost − S𝒦 − d_H𝓜 is ξ-independent [{}]", s.lie.name),
        anchor,
        dec.residual.map_coeffs(|c| c.diff_sym(&xi)).term_count(),
    ));
    let anchor = "brst/currents";
    let gd = small.dim();
    let target = fp_current_target(gd);
    let mut r = 0;
    for order in [1, 2] {
        let j = noether_current(
            &ghost_number_symmetry(gd),
            &free_ghost_lagrangian(gd),
            None,
            order,
        )?;
        r += (0..4)
            .map(|l| (&j[l] - &target[l]).term_count())
            .sum::<usize>();
    }
    out.push(terms_check(
        "ghost-number Noether current = FP current",
        anchor,
        r,
    ));
    let sop = brst_operator(&small);
    let mut sm: [FiberPoly; 4] = Default::default();
    for (l, x) in sm.iter_mut().enumerate() {
        *x = sop.apply(&dec.m[l])?;
    }
    // a broken algebra makes S fail to be a symmetry; that is a failed check
    let currents = noether_current(&sop, &dec.ghost_lagrangian, Some(&sm), 2).and_then(|jg| {
        let je = noether_current(&sop, &sop.apply(&dec.k)?, None, 2)?;
        Ok((0..4).map(|l| (&jg[l] - &je[l]).term_count()).sum())
    });
    let r = match currents {
        Ok(r) => r,
        Err(BvError::NotSymmetry(n)) => n,
        Err(e) => return Err(e.into()),
    };
    out.push(terms_check(
        "BRST current of ℒ_ghost = BRST current of S𝒦",
        anchor,
        r,
    ));
    // negative control: a corrupted structure constant must be detected
    let bad = TheorySpec::new(lie::su2().corrupted(0, 0, 1, Scalar::one())).with_spinor(1);
    let rb = s_squared_generators(&bad)?;
    out.push(Check::new(
        "corrupted c^0_01 breaks S² = 0 (control)",
        "brst/control",
        rb > 0,
        Residual::Terms(rb),
    ));
    Ok(out)
}

/// The fiber coordinate named in `S(omega, I)`-style requests.
pub fn named_coord(name: &str, i: u8) -> Option<FiberCoord> {
    Some(match name {
        "omega" | "ghost" => FiberCoord::ghost(i),
        "omegabar" | "antighost" => FiberCoord::antighost(i),
        "n" | "aux" => FiberCoord::aux(i),
        _ => return None,
    })
}

/// Runs the suites in order; errors abort.
pub fn run_all(suites: &[Suite], s: &Settings) -> Result<Vec<(Suite, Vec<Check>)>> {
    suites.iter().map(|x| Ok((*x, run_suite(*x, s)?))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn algebra_suite_passes_on_three_modes() {
        let l = ModeLattice::line(3, 1, q(1), q(1)).unwrap();
        let s = Settings::new(lie::su2(), l);
        let c = algebra_suite(&s).unwrap();
        for x in &c {
            assert!(x.passed, "{} {}", x.identity, x.residual);
        }
    }

    #[test]
    fn propagators_pass() {
        let c = propagator_suite(&Settings::default()).unwrap();
        for x in c.iter().filter(|x| x.anchor.starts_with("propagators")) {
            assert!(x.passed, "{} {}", x.identity, x.residual);
        }
    }

    #[test]
    fn bv_suite_small_sample() {
        let mut s = Settings::default();
        s.bv_samples = 10;
        let c = bv_suite(&s).unwrap();
        assert!(c.iter().all(Check::ok));
    }
}
