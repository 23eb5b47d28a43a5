//! Numeric cross-checks of the symbolic suites on truncated Fock spaces.

use crate::algebra::{koszul_product, super_bracket, GradedExpr, OpGen, Parity, Rule, Sector};
use crate::check::{Check, Residual};
use crate::fields::dirac::dirac_bracket_target;
use crate::fields::table::{row_fields, table_rows};
use crate::fields::{
    delta_lattice, dirac_bar, dirac_field, dressed_dirac, scalar_field, ScalarForm, Stat,
};
use crate::gamma::{shell_projectors, OnShellMomentum};
use crate::lattice::{Family, ModeLattice};
use crate::lie;
use crate::oracle::{matrix_bracket, OracleSpace, Sparse};
use crate::symbolic::{Binding, FieldPoint, Idx, Scalar, Symbol};

use num_complex::Complex64;

use super::{functional_results, Result, Settings, KINDS};

const T0: f64 = 0.3;
const X: [f64; 3] = [0.7, -0.2, 0.5];
const XP: [f64; 3] = [0.1, 0.9, -0.6];

struct Ctx {
    l: ModeLattice,
    n_max: usize,
    cap: usize,
    tol: f64,
}

impl Ctx {
    fn space<'a>(&self, e: impl IntoIterator<Item = &'a GradedExpr>) -> Result<OracleSpace> {
        Ok(OracleSpace::for_exprs(e, self.n_max, self.cap)?)
    }

    fn check(&self, identity: String, anchor: &str, r: f64) -> Check {
        Check::numeric(identity, anchor, r, self.tol)
    }
}

fn two_events() -> Binding {
    Binding::default()
        .with_event("x", T0, X)
        .with_event("x'", -0.4, XP)
}

fn equal_times() -> Binding {
    Binding::default()
        .with_time("t", T0)
        .with_point("x", X)
        .with_point("x'", XP)
}

fn odd(e: &GradedExpr) -> bool {
    e.parity() == Parity::Odd
}

/// Max-abs deviation of the matrix bracket of `f`, `g` from `want·𝟙`.
fn bracket_vs_scalar(
    sp: &OracleSpace,
    f: &GradedExpr,
    g: &GradedExpr,
    want: Complex64,
    b: &Binding,
) -> Result<f64> {
    let br = matrix_bracket(&sp.represent(f, b)?, &sp.represent(g, b)?, odd(f) && odd(g));
    let d = br.sub(&Sparse::identity(sp.dim()).scale(want));
    Ok(d.max_abs_on(&sp.safe_mask(2)))
}

fn generator_groups(ids: &[u32]) -> Vec<(&'static str, Vec<OpGen>)> {
    let v = |i: u32| Idx::Val(i);
    let mut out = Vec::new();
    for (name, sector) in [
        ("scalar", Sector::Scalar),
        ("fermi scalar", Sector::FermiScalar),
    ] {
        let mut g = Vec::new();
        for m in ids {
            for (sp, pos, _) in KINDS {
                g.push(OpGen::new(sp, pos, sector, v(*m), v(0)));
            }
        }
        out.push((name, g));
    }
    let mut g = Vec::new();
    for m in ids {
        for a in 0..2 {
            g.push(OpGen::a_up(Sector::DiracParticle, v(*m), v(a)));
            g.push(OpGen::a_dag_low(Sector::DiracParticle, v(*m), v(a)));
            g.push(OpGen::a_low(Sector::DiracAntiparticle, v(*m), v(a)));
            g.push(OpGen::a_dag_up(Sector::DiracAntiparticle, v(*m), v(a)));
        }
    }
    out.push(("dirac", g));
    let mut g = Vec::new();
    for m in ids {
        g.push(OpGen::a_up(Sector::Ghost, v(*m), v(0)));
        g.push(OpGen::a_dag_low(Sector::Ghost, v(*m), v(0)));
        g.push(OpGen::a_low(Sector::Antighost, v(*m), v(0)));
        g.push(OpGen::a_dag_up(Sector::Antighost, v(*m), v(0)));
    }
    out.push(("ghost", g));
    let mut g = Vec::new();
    for m in ids {
        for lam in 0..2 {
            g.push(OpGen::b(lam, v(0), v(*m)));
            g.push(OpGen::b_dag(lam, v(0), v(*m)));
        }
    }
    out.push(("gauge", g));
    out
}

fn algebra_family(c: &Ctx) -> Result<Vec<Check>> {
    let ids: Vec<u32> = c.l.modes().iter().map(|m| m.id).collect();
    let b = Binding::default();
    let mut out = Vec::new();
    for (name, gens) in generator_groups(&ids) {
        let sp = OracleSpace::new(gens.iter().cloned(), c.n_max, c.cap)?;
        let ex: Vec<GradedExpr> = gens.iter().cloned().map(GradedExpr::gen).collect();
        let mats: Vec<Sparse> = gens
            .iter()
            .map(|g| sp.build_operator(g))
            .collect::<std::result::Result<_, _>>()?;
        let (safe2, safe3) = (sp.safe_mask(2), sp.safe_mask(3));
        let (mut rb, mut rp) = (0.0f64, 0.0f64);
        for (i, x) in ex.iter().enumerate() {
            for (j, y) in ex.iter().enumerate() {
                let sym = sp.represent(&super_bracket(x, y)?, &b)?;
                let num = matrix_bracket(&mats[i], &mats[j], gens[i].odd() && gens[j].odd());
                rb = rb.max(sym.sub(&num).max_abs_on(&safe2));
                let xy = mats[i].mul(&mats[j]);
                for (k, z) in ex.iter().enumerate() {
                    let w =
                        koszul_product(&koszul_product(x, y, Rule::Physical), z, Rule::Physical);
                    let d = sp.represent(&w, &b)?.sub(&xy.mul(&mats[k]));
                    rp = rp.max(d.max_abs_on(&safe3));
                }
            }
        }
        out.push(c.check(
            format!("elementary brackets match matrices [{name}]"),
            "oracle/algebra",
            rb,
        ));
        out.push(c.check(
            format!("ordered triple products match matrices [{name}]"),
            "oracle/algebra",
            rp,
        ));
    }
    Ok(out)
}

fn table_family(c: &Ctx) -> Result<Vec<Check>> {
    let zero = Idx::Val(0);
    let mut b = two_events();
    b.indices.insert(Symbol::new("α"), 0);
    b.indices.insert(Symbol::new("β"), 0);
    let mut out = Vec::new();
    for stat in [Stat::Boson, Stat::Fermion] {
        for row in table_rows(&c.l, stat)? {
            let mut r = 0.0f64;
            for (lam, want) in &row.target {
                let (f, g) = row_fields(stat, &row, *lam, &zero, &zero, &c.l)?;
                let sp = c.space([&f, &g])?;
                r = r.max(bracket_vs_scalar(&sp, &f, &g, want.eval(&b)?, &b)?);
            }
            let ch = c.check(
                format!("{} [{}]", row.name, stat.name()),
                "oracle/field-supercommutators",
                r,
            );
            out.push(if row.informational {
                ch.informational()
            } else {
                ch
            });
        }
    }
    Ok(out)
}

fn equal_time_family(c: &Ctx) -> Result<Vec<Check>> {
    let (x, xp) = (
        FieldPoint::named("x").at_time("t"),
        FieldPoint::named("x'").at_time("t"),
    );
    let b = equal_times();
    let zero = Idx::Val(0);
    let delta = delta_lattice(&x.sub(&xp), &c.l, Family::Scalar)?.eval(&b)?;
    let minus_i_d = Complex64::new(0.0, -1.0) * delta;
    let mut out = Vec::new();
    for stat in [Stat::Boson, Stat::Fermion] {
        let s = stat.name();
        let f = |form, p: &FieldPoint, d| scalar_field(form, stat, &zero, p, d, &c.l);
        let phi = f(ScalarForm::Phi, &x, None)?;
        let phi0 = f(ScalarForm::Phi, &x, Some(0))?;
        let bar = f(ScalarForm::PhiBar, &xp, None)?;
        let bar0 = f(ScalarForm::PhiBar, &xp, Some(0))?;
        let sp = c.space([&phi, &phi0, &bar, &bar0])?;
        let anchor = format!("oracle/equal-time/{s}");
        out.push(c.check(
            format!("⟦φ^α, φ̄_β⟧ = 0 [{s}]"),
            &anchor,
            bracket_vs_scalar(&sp, &phi, &bar, Complex64::default(), &b)?,
        ));
        out.push(c.check(
            format!("⟦φ^α, φ̄_β,0⟧ = −iδδ [{s}]"),
            &anchor,
            bracket_vs_scalar(&sp, &phi, &bar0, minus_i_d, &b)?,
        ));
        let neg_phi0 = phi0.scale(&Scalar::int(-1));
        out.push(c.check(
            format!("−⟦φ^α_,0, φ̄_β⟧ = −iδδ [{s}]"),
            &anchor,
            bracket_vs_scalar(&sp, &neg_phi0, &bar, minus_i_d, &b)?,
        ));
    }
    Ok(out)
}

/// `ψ̄_α` with the sign of its antiparticle term reversed.
fn flipped_bar(e: &GradedExpr) -> GradedExpr {
    let mut out = GradedExpr::zero();
    for (w, k) in e.terms() {
        let s = if w.iter().any(|g| g.sector == Sector::DiracAntiparticle) {
            -k.clone()
        } else {
            k.clone()
        };
        out.add_assign(&GradedExpr::word(w.clone(), s, Rule::Physical));
    }
    out
}

fn dirac_family(c: &Ctx) -> Result<Vec<Check>> {
    let l = &c.l;
    let ids: Vec<u32> = l.modes_for(Family::Dirac).iter().map(|m| m.id).collect();
    let dressed: Vec<_> = ids
        .iter()
        .map(|id| dressed_dirac(l, *id))
        .collect::<std::result::Result<_, _>>()?;
    let all: Vec<&GradedExpr> = dressed.iter().flatten().flatten().collect();
    let sp = c.space(all)?;
    let nb = Binding::default();
    let (mut rp, mut rm) = (0.0f64, 0.0f64);
    for (i, p) in ids.iter().enumerate() {
        let mp = l.mode(*p)?;
        let (pp, pm) = shell_projectors(&OnShellMomentum::new(
            mp.p.clone(),
            l.mass(Family::Dirac).clone(),
        )?)?;
        for j in 0..ids.len() {
            for al in 0..4 {
                for be in 0..4 {
                    let (wp, wm) = if i == j {
                        (pp.get(be, al).eval(&nb)?, pm.get(be, al).eval(&nb)?)
                    } else {
                        Default::default()
                    };
                    rp = rp.max(bracket_vs_scalar(
                        &sp,
                        &dressed[i][1][al],
                        &dressed[j][0][be],
                        wp,
                        &nb,
                    )?);
                    rm = rm.max(bracket_vs_scalar(
                        &sp,
                        &dressed[i][2][al],
                        &dressed[j][3][be],
                        wm,
                        &nb,
                    )?);
                }
            }
        }
    }
    let mut out = vec![
        c.check("{a†_α(p), a^β(q)} = Π⁺(p)δ(p,q)".into(), "oracle/dirac", rp),
        c.check("{c_α(p), c†^β(q)} = Π⁻(p)δ(p,q)".into(), "oracle/dirac", rm),
    ];
    let (x, xp) = (FieldPoint::named("x"), FieldPoint::named("x'"));
    let b = two_events();
    let want = dirac_bracket_target(&x.sub(&xp), l)?;
    let bars: Vec<_> = (0..4)
        .map(|a| dirac_bar(&Idx::Val(a), &x, None, l))
        .collect::<std::result::Result<_, _>>()?;
    let psis: Vec<_> = (0..4)
        .map(|a| dirac_field(&Idx::Val(a), &xp, None, l))
        .collect::<std::result::Result<_, _>>()?;
    let sp = c.space(bars.iter().chain(psis.iter()))?;
    let (mut r, mut r_flip) = (0.0f64, 0.0f64);
    for (al, bar) in bars.iter().enumerate() {
        let fb = flipped_bar(bar);
        for (be, psi) in psis.iter().enumerate() {
            let w = want.get(be, al).eval(&b)?;
            r = r.max(bracket_vs_scalar(&sp, bar, psi, w, &b)?);
            r_flip = r_flip.max(bracket_vs_scalar(&sp, &fb, psi, w, &b)?);
        }
    }
    out.push(c.check(
        "{ψ̄_α(x), ψ^β(x′)} = ((−m + iγ∂)𝒟)^β_α/(2m)".into(),
        "oracle/dirac",
        r,
    ));
    out.push(Check::new(
        "sign-flipped ψ̄ is detected (control)",
        "oracle/control",
        r_flip >= 0.1,
        Residual::MaxAbs(r_flip),
    ));
    Ok(out)
}

fn functional_family(c: &Ctx, s: &Settings) -> Result<Vec<Check>> {
    let mut small = s.clone();
    small.lattice = c.l.clone();
    small.lie = lie::u1();
    small.scalar_dim = 1;
    let mut out = Vec::new();
    let anchor = "oracle/functionals";
    for r in functional_results(&small)? {
        let mut exprs: Vec<&GradedExpr> = vec![&r.target, &r.reduced];
        for (_, a, b) in &r.density.terms {
            exprs.push(a);
            exprs.push(b);
        }
        let sp = c.space(exprs)?;
        let b = Binding::default().with_time("t", T0);
        let num = sp.integrate_density(&r.density, "x", "t", T0)?;
        let target = sp.represent(&r.target, &b)?;
        let reduced = sp.represent(&r.reduced, &b)?;
        let safe = sp.safe_mask(2);
        out.push(c.check(
            format!("∫density = closed form [{}]", r.name),
            anchor,
            num.sub(&target).max_abs_on(&safe),
        ));
        out.push(c.check(
            format!("∫density = symbolic reduction [{}]", r.name),
            anchor,
            num.sub(&reduced).max_abs_on(&safe),
        ));
        if !r.name.starts_with("FP") {
            out.push(c.check(
                format!("{} is Hermitian", r.name),
                anchor,
                reduced.sub(&reduced.adjoint()).max_abs(),
            ));
        }
        if r.name == "Dirac charge" {
            // spectrum of 2m·Q is integral
            let m2 = 2.0 * crate::symbolic::q_to_f64(c.l.mass(Family::Dirac));
            let worst = reduced
                .hermitian_eigenvalues()
                .iter()
                .map(|e| (e * m2 - (e * m2).round()).abs())
                .fold(0.0, f64::max);
            out.push(Check::numeric(
                "spectrum of 2m·Q is integral",
                anchor,
                worst,
                1e-9,
            ));
        }
    }
    Ok(out)
}

/// Oracle checks for the algebra, field table, equal-time, Dirac and
/// functional suites on the first two modes of the configured lattice.
pub fn oracle_suite(s: &Settings) -> Result<Vec<Check>> {
    let ids: Vec<u32> = s
        .lattice
        .modes()
        .iter()
        .filter(|m| !m.is_zero())
        .map(|m| m.id)
        .take(2)
        .collect();
    let c = Ctx {
        l: s.lattice.subset(&ids)?,
        n_max: s.oracle.n_max,
        cap: s.oracle.cap,
        tol: s.oracle.tol,
    };
    let mut out = algebra_family(&c)?;
    out.extend(table_family(&c)?);
    out.extend(equal_time_family(&c)?);
    out.extend(dirac_family(&c)?);
    out.extend(functional_family(&c, s)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flipped_bar_changes_only_antiparticles() {
        let l = crate::suites::default_lattice();
        let x = FieldPoint::named("x");
        let bar = dirac_bar(&Idx::Val(0), &x, None, &l).unwrap();
        let f = flipped_bar(&bar);
        let sum = &bar + &f;
        assert!(sum
            .terms()
            .all(|(w, _)| w[0].sector == Sector::DiracParticle));
    }
}
