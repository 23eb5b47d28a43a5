//! Equal-time super-commutators and canonical rules, sector by sector.
//!
//! Both events share the time label `t` and keep symbolic spatial labels, so
//! every identity is checked by exact term cancellation.

use crate::algebra::{koszul_product, GradedExpr, Rule};
use crate::check::{Check, Residual};
use crate::gamma::{gamma, metric};
use crate::lattice::{Family, ModeLattice};
use crate::lie::LieData;
use crate::symbolic::{FieldPoint, Idx, Scalar, Q};

use super::{
    antighost_field, delta_lattice, dirac_bar, dirac_field, field_supercommutator, gauge_field,
    ghost_field, propagator_full, scalar_field, FieldError, FieldExpr, ScalarForm, Stat,
};

fn events() -> (FieldPoint, FieldPoint) {
    (
        FieldPoint::named("x").at_time("t"),
        FieldPoint::named("x'").at_time("t"),
    )
}

fn delta_xy(l: &ModeLattice, fam: Family) -> Result<Scalar, FieldError> {
    let (x, xp) = events();
    delta_lattice(&x.sub(&xp), l, fam)
}

fn check(name: &str, anchor: &str, got: &Scalar, want: &Scalar) -> Check {
    Check::scalar(name, anchor, got, want)
}

/// Scalar sector at equal times, exactly as stated for the field table.
pub fn scalar_equal_time(l: &ModeLattice, stat: Stat) -> Result<Vec<Check>, FieldError> {
    let (x, xp) = events();
    let anchor = format!("equal-time/{}", stat.name());
    let (a, b) = (Idx::var("α"), Idx::var("β"));
    let dd = &Scalar::delta(a.clone(), b.clone()) * &delta_xy(l, Family::Scalar)?;
    let minus_i_dd = &Scalar::i().scale(&(-1).into()) * &dd;
    let phi = scalar_field(ScalarForm::Phi, stat, &a, &x, None, l)?;
    let phi0 = scalar_field(ScalarForm::Phi, stat, &a, &x, Some(0), l)?;
    let bar = scalar_field(ScalarForm::PhiBar, stat, &b, &xp, None, l)?;
    let bar0 = scalar_field(ScalarForm::PhiBar, stat, &b, &xp, Some(0), l)?;
    let s = stat.name();
    Ok(vec![
        check(
            &format!("⟦φ^α, φ̄_β⟧ = 0 [{s}]"),
            &anchor,
            &field_supercommutator(&phi, &bar)?,
            &Scalar::zero(),
        ),
        check(
            &format!("⟦φ^α, φ̄_β,0⟧ = −iδδ [{s}]"),
            &anchor,
            &field_supercommutator(&phi, &bar0)?,
            &minus_i_dd,
        ),
        check(
            &format!("−⟦φ^α_,0, φ̄_β⟧ = −iδδ [{s}]"),
            &anchor,
            &-field_supercommutator(&phi0, &bar)?,
            &minus_i_dd,
        ),
        // The table row −δ𝒟_,0 evaluated at equal times.
        check(
            &format!("⟦φ^α, φ̄_β,0⟧ = −δ𝒟_,0(0,y) [{s}]"),
            &anchor,
            &field_supercommutator(&phi, &bar0)?,
            &-(&Scalar::delta(a.clone(), b.clone())
                * &propagator_full(&x.sub(&xp), l, Family::Scalar, Some(0))?),
        )
        .informational(),
    ])
}

/// `(ψ̄γ⁰)_α` at an event.
fn bar_gamma0(alpha: usize, x: &FieldPoint, l: &ModeLattice) -> Result<FieldExpr, FieldError> {
    let g0 = gamma(0)?;
    let mut out = GradedExpr::zero();
    for c in 0..4 {
        let k = g0.get(c, alpha);
        if !k.is_zero() {
            out.add_assign(&dirac_bar(&Idx::Val(c as u32), x, None, l)?.scale(k));
        }
    }
    Ok(out)
}

/// `(γ⁰ψ)^β` at an event.
fn gamma0_psi(beta: usize, x: &FieldPoint, l: &ModeLattice) -> Result<FieldExpr, FieldError> {
    let g0 = gamma(0)?;
    let mut out = GradedExpr::zero();
    for c in 0..4 {
        let k = g0.get(beta, c);
        if !k.is_zero() {
            out.add_assign(&dirac_field(&Idx::Val(c as u32), x, None, l)?.scale(k));
        }
    }
    Ok(out)
}

/// Dirac sector: `{(ψ̄γ⁰)_α, ψ^β} = {ψ̄_α, (γ⁰ψ)^β} = δδ/(2m)` and the
/// canonical pairs with `Π_α = i(ψ̄γ⁰)_α`, `Π^α = i(γ⁰ψ)^α` after the `√(2m)`
/// rescaling of both fields.
pub fn dirac_equal_time(l: &ModeLattice) -> Result<Vec<Check>, FieldError> {
    let (x, xp) = events();
    let anchor = "equal-time/dirac";
    let m = l.mass(Family::Dirac).clone();
    let two_m = Scalar::rational(&m * Q::from_integer(2.into()));
    let inv_two_m = Scalar::rational(Q::from_integer(1.into()) / (&m * Q::from_integer(2.into())));
    let delta = delta_xy(l, Family::Dirac)?;
    let (mut r1, mut r2, mut r3, mut r4) = (0, 0, 0, 0);
    for al in 0..4 {
        let bg = bar_gamma0(al, &x, l)?;
        let bar = dirac_bar(&Idx::Val(al as u32), &x, None, l)?;
        for be in 0..4 {
            let want = if al == be {
                &inv_two_m * &delta
            } else {
                Scalar::zero()
            };
            let psi = dirac_field(&Idx::Val(be as u32), &xp, None, l)?;
            let gpsi = gamma0_psi(be, &xp, l)?;
            let a = field_supercommutator(&bg, &psi)?;
            let b = field_supercommutator(&bar, &gpsi)?;
            r1 += (&a - &want).len();
            r2 += (&b - &want).len();
            let i2m = &Scalar::i() * &two_m;
            let ca = &a * &i2m;
            let cb = &b * &i2m;
            let iwant = &want * &i2m;
            r3 += (&ca - &iwant).len();
            r4 += (&cb - &iwant).len();
        }
    }
    let mk = |n: &str, r: usize| Check::new(n, anchor, r == 0, Residual::Terms(r));
    Ok(vec![
        mk("{(ψ̄γ⁰)_α, ψ^β} = δδ/(2m)", r1),
        mk("{ψ̄_α, (γ⁰ψ)^β} = δδ/(2m)", r2),
        mk("{Π_α, ψ^β} = iδδ", r3),
        mk("{ψ̄_α, Π^β} = iδδ", r4),
    ])
}

/// `Π^λ_I` in the Feynman gauge with internal index `j` (orthonormal frame).
pub fn gauge_momentum(
    lambda: usize,
    j: usize,
    x: &FieldPoint,
    l: &ModeLattice,
    lie: &LieData,
) -> Result<FieldExpr, FieldError> {
    let jj = Idx::Val(j as u32);
    let g = |a: usize| Scalar::int(metric(a));
    let lam = lambda as u8;
    // g^{λμ} is diagonal, so only μ = λ survives in the first bracket.
    let mut out = gauge_field(lam, &jj, x, Some(0), l)?.scale(&-Scalar::one());
    out.add_assign(&gauge_field(0, &jj, x, Some(lambda), l)?);
    let lowered = lie.lowered_constants();
    for k in 0..lie.dim() {
        for h in 0..lie.dim() {
            let c = &lowered[j][k][h];
            if c.is_zero() {
                continue;
            }
            let ak = gauge_field(lam, &Idx::Val(k as u32), x, None, l)?;
            let a0 = gauge_field(0, &Idx::Val(h as u32), x, None, l)?;
            out.add_assign(&koszul_product(&ak, &a0, Rule::Modified).scale(&-c.clone()));
        }
    }
    out = out.scale(&g(lambda));
    if lambda == 0 {
        for nu in 0..4 {
            let t = gauge_field(nu as u8, &jj, x, Some(nu), l)?.scale(&g(nu));
            out.add_assign(&t.scale(&-g(0)));
        }
    }
    Ok(out)
}

/// Gauge sector: `[A^I_λ(t,x), Π^μ_J(t,x′)] = −iδ^μ_λ δ^I_J δ`.
pub fn gauge_equal_time(l: &ModeLattice, lie: &LieData) -> Result<Vec<Check>, FieldError> {
    let (x, xp) = events();
    let delta = delta_xy(l, Family::Gauge)?;
    let i = Idx::var("I");
    let mut r = 0;
    for lambda in 0..4u8 {
        let a = gauge_field(lambda, &i, &x, None, l)?;
        for mu in 0..4 {
            for j in 0..lie.dim() {
                let pi = gauge_momentum(mu, j, &xp, l, lie)?;
                let got = field_supercommutator(&a, &pi)?;
                let want = if lambda as usize == mu {
                    &(&Scalar::i() * &Scalar::delta(i.clone(), Idx::Val(j as u32)))
                        * &-delta.clone()
                } else {
                    Scalar::zero()
                };
                r += (&got - &want).len();
            }
        }
    }
    Ok(vec![Check::new(
        "[A^I_λ, Π^μ_J] = −iδδδ (ξ = 1)",
        "equal-time/gauge",
        r == 0,
        Residual::Terms(r),
    )])
}

/// `ω^I_{;0} = ω^I_{,0} + c^I_{JH} ω^J A^H_0` for a concrete internal index.
pub fn ghost_cov_time(
    i: usize,
    x: &FieldPoint,
    l: &ModeLattice,
    lie: &LieData,
) -> Result<FieldExpr, FieldError> {
    let mut out = ghost_field(&Idx::Val(i as u32), x, Some(0), l)?;
    for j in 0..lie.dim() {
        for h in 0..lie.dim() {
            let c = lie.c(i, j, h);
            if c.is_zero() {
                continue;
            }
            let w = ghost_field(&Idx::Val(j as u32), x, None, l)?;
            let a0 = gauge_field(0, &Idx::Val(h as u32), x, None, l)?;
            out.add_assign(&koszul_product(&w, &a0, Rule::Modified).scale(c));
        }
    }
    Ok(out)
}

/// Ghost sector pairs and canonical rules.
pub fn ghost_equal_time(l: &ModeLattice, lie: &LieData) -> Result<Vec<Check>, FieldError> {
    let (x, xp) = events();
    let anchor = "equal-time/ghost";
    let delta = delta_xy(l, Family::Ghost)?;
    let (i, j) = (Idx::var("I"), Idx::var("J"));
    let idd = &(&Scalar::i() * &Scalar::delta(i.clone(), j.clone())) * &delta;
    let w_xp = ghost_field(&i, &xp, None, l)?;
    let wb0_x = antighost_field(&j, &x, Some(0), l)?;
    let w0_x = ghost_field(&i, &x, Some(0), l)?;
    let wb_xp = antighost_field(&j, &xp, None, l)?;
    let wb_x = antighost_field(&j, &x, None, l)?;
    let w_x = ghost_field(&i, &x, None, l)?;
    let wb0_xp = antighost_field(&j, &xp, Some(0), l)?;
    let mut out = vec![
        check(
            "{ω̄_J,0(x), ω^I(x′)} = iδδ",
            anchor,
            &field_supercommutator(&wb0_x, &w_xp)?,
            &idd,
        ),
        check(
            "−{ω^I_,0(x), ω̄_J(x′)} = iδδ",
            anchor,
            &-field_supercommutator(&w0_x, &wb_xp)?,
            &idd,
        ),
        check(
            "{ω̄_J(x), ω^I(x′)} = 0",
            anchor,
            &field_supercommutator(&wb_x, &w_xp)?,
            &Scalar::zero(),
        ),
        check(
            "{ω^I(x), Π_J(x′)} = iδδ",
            anchor,
            &field_supercommutator(&w_x, &wb0_xp)?,
            &(&(&Scalar::i() * &Scalar::delta(i.clone(), j.clone()))
                * &delta_lattice(&xp.sub(&x), l, Family::Ghost)?),
        ),
    ];
    // Mixed and covariant pieces need concrete Lie indices.
    let (mut r_a0, mut r_wa0, mut r_pi) = (0, 0, 0);
    for ii in 0..lie.dim() {
        let a0 = gauge_field(0, &Idx::Val(ii as u32), &xp, None, l)?;
        let b = super::super_bracket(&wb_x, &a0)?;
        r_a0 += b.term_count();
        for h in 0..lie.dim() {
            let wi = ghost_field(&Idx::Val(ii as u32), &xp, None, l)?;
            let a0h = gauge_field(0, &Idx::Val(h as u32), &xp, None, l)?;
            let prod = koszul_product(&wi, &a0h, Rule::Modified);
            r_wa0 += super::super_bracket(&wb_x, &prod)?.term_count();
        }
        let pi = ghost_cov_time(ii, &xp, l, lie)?.scale(&-Scalar::one());
        let got = super::super_bracket(&wb_x, &pi)?;
        let want = &(&Scalar::i() * &Scalar::delta(Idx::Val(ii as u32), j.clone())) * &delta;
        r_pi += (&got - &GradedExpr::scalar(want)).term_count();
    }
    out.push(Check::new(
        "{ω̄_I(x), A^J_0(x′)} = 0",
        anchor,
        r_a0 == 0,
        Residual::Terms(r_a0),
    ));
    out.push(Check::new(
        "{ω̄_I(x), ω^J A^H_0(x′)} = 0",
        anchor,
        r_wa0 == 0,
        Residual::Terms(r_wa0),
    ));
    out.push(Check::new(
        "{ω̄_J(x), Π^I(x′)} = iδδ, Π^I = −ω^I_;0",
        anchor,
        r_pi == 0,
        Residual::Terms(r_pi),
    ));
    Ok(out)
}

/// Every sector in turn; the Dirac part needs rational energies.
pub fn equal_time_report(l: &ModeLattice, lie: &LieData) -> Result<Vec<Check>, FieldError> {
    let mut out = scalar_equal_time(l, Stat::Boson)?;
    out.extend(scalar_equal_time(l, Stat::Fermion)?);
    out.extend(dirac_equal_time(l)?);
    out.extend(gauge_equal_time(l, lie)?);
    out.extend(ghost_equal_time(l, lie)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::su2;
    use crate::symbolic::q;

    fn lattice() -> ModeLattice {
        ModeLattice::axes(4, q(1), q(3)).unwrap()
    }

    #[test]
    fn dirac_pairs_hold() {
        for c in dirac_equal_time(&lattice()).unwrap() {
            assert!(c.passed, "{} {}", c.identity, c.residual);
        }
    }

    #[test]
    fn gauge_and_ghost_hold() {
        let l = ModeLattice::axes(1, q(1), q(1)).unwrap();
        let lie = su2();
        for c in gauge_equal_time(&l, &lie)
            .unwrap()
            .into_iter()
            .chain(ghost_equal_time(&l, &lie).unwrap())
        {
            assert!(c.passed, "{} {}", c.identity, c.residual);
        }
    }

    #[test]
    fn scalar_equal_time_bracket_vanishes() {
        let l = ModeLattice::axes(1, q(1), q(1)).unwrap();
        let c = scalar_equal_time(&l, Stat::Boson).unwrap();
        assert!(c[0].passed);
        assert!(c[3].passed);
    }
}
