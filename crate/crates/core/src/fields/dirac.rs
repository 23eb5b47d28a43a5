//! Dirac-sector consistency: dressed mode brackets against the shell
//! projectors, and the two-event bracket of `ψ̄` with `ψ`.

use crate::algebra::super_bracket;
use crate::check::{Check, Residual};
use crate::gamma::{gamma, shell_projectors, OnShellMomentum, SpinMatrix};
use crate::lattice::{Family, ModeLattice};
use crate::symbolic::{FieldPoint, Idx, Scalar, Q};

use super::{dirac_supercommutator, dressed_dirac, propagator_full, FieldError};

const ANCHOR: &str = "dirac";

/// `{a†_α(p), a^β(q)} = Π⁺(p)^β_α δ(p,q)`, `{c_α(p), c†^β(q)} = Π⁻(p)^β_α δ(p,q)`,
/// and the vanishing mixed brackets, over all ordered mode pairs.
pub fn dressed_bracket_checks(l: &ModeLattice) -> Result<Vec<Check>, FieldError> {
    let modes: Vec<u32> = l.modes_for(Family::Dirac).iter().map(|m| m.id).collect();
    let dressed: Vec<_> = modes
        .iter()
        .map(|id| dressed_dirac(l, *id))
        .collect::<Result<_, _>>()?;
    let (mut rp, mut rm, mut rz) = (0, 0, 0);
    for (i, p) in modes.iter().enumerate() {
        let mp = l.mode(*p)?;
        let (pp, pm) = shell_projectors(&OnShellMomentum::new(
            mp.p.clone(),
            l.mass(Family::Dirac).clone(),
        )?)?;
        for (j, _) in modes.iter().enumerate() {
            let same = i == j;
            let (dp, dq) = (&dressed[i], &dressed[j]);
            for al in 0..4 {
                for be in 0..4 {
                    let b = super_bracket(&dp[1][al], &dq[0][be])?;
                    let want = if same {
                        pp.get(be, al).clone()
                    } else {
                        Scalar::zero()
                    };
                    rp += (&b - &want.into()).term_count();
                    let b = super_bracket(&dp[2][al], &dq[3][be])?;
                    let want = if same {
                        pm.get(be, al).clone()
                    } else {
                        Scalar::zero()
                    };
                    rm += (&b - &want.into()).term_count();
                    // a with a, c with c, and particle with antiparticle
                    for (x, y) in [
                        (0, 0),
                        (1, 1),
                        (2, 2),
                        (3, 3),
                        (0, 2),
                        (0, 3),
                        (1, 2),
                        (1, 3),
                    ] {
                        rz += super_bracket(&dp[x][al], &dq[y][be])?.term_count();
                    }
                }
            }
        }
    }
    Ok(vec![
        Check::new(
            "{a†_α(p), a^β(q)} = Π⁺(p)δ(p,q)",
            ANCHOR,
            rp == 0,
            Residual::Terms(rp),
        ),
        Check::new(
            "{c_α(p), c†^β(q)} = Π⁻(p)δ(p,q)",
            ANCHOR,
            rm == 0,
            Residual::Terms(rm),
        ),
        Check::new(
            "remaining dressed brackets vanish",
            ANCHOR,
            rz == 0,
            Residual::Terms(rz),
        ),
    ])
}

/// `(1/2m)((−m𝟙 + iγ^λ∂_λ)𝒟(y))` as a spinor matrix.
pub fn dirac_bracket_target(y: &FieldPoint, l: &ModeLattice) -> Result<SpinMatrix, FieldError> {
    let m = l.mass(Family::Dirac).clone();
    let d = propagator_full(y, l, Family::Dirac, None)?;
    let mut out = SpinMatrix::identity().scale(&(&Scalar::rational(-m.clone()) * &d));
    for lam in 0..4 {
        let dl = propagator_full(y, l, Family::Dirac, Some(lam))?;
        out = &out + &gamma(lam)?.scale(&(&Scalar::i() * &dl));
    }
    Ok(out.scale(&Scalar::rational(
        Q::from_integer(1.into()) / (m * Q::from_integer(2.into())),
    )))
}

/// `{ψ̄_α(x), ψ^β(x′)}` against the propagator form.
pub fn dirac_bracket_check(l: &ModeLattice) -> Result<Check, FieldError> {
    let (x, xp) = (FieldPoint::named("x"), FieldPoint::named("x'"));
    let got = dirac_supercommutator(&x, &xp, l)?;
    let want = dirac_bracket_target(&x.sub(&xp), l)?;
    let r: usize = (0..4)
        .flat_map(|i| (0..4).map(move |j| (i, j)))
        .map(|(i, j)| (got.get(i, j) - want.get(i, j)).len())
        .sum();
    Ok(Check::new(
        "{ψ̄_α(x), ψ^β(x′)} = ((−m + iγ∂)𝒟)^β_α/(2m)",
        ANCHOR,
        r == 0,
        Residual::Terms(r),
    ))
}

/// One entry `{ψ̄_α(x), ψ^β(x′)}`.
pub fn bracket_entry(alpha: usize, beta: usize, l: &ModeLattice) -> Result<Scalar, FieldError> {
    let (x, xp) = (FieldPoint::named("x"), FieldPoint::named("x'"));
    let bar = super::dirac_bar(&Idx::Val(alpha as u32), &x, None, l)?;
    let psi = super::dirac_field(&Idx::Val(beta as u32), &xp, None, l)?;
    super::field_supercommutator(&bar, &psi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::q;

    #[test]
    fn dressed_brackets_match_projectors() {
        let l = ModeLattice::axes(4, q(1), q(3)).unwrap();
        for c in dressed_bracket_checks(&l).unwrap() {
            assert!(c.passed, "{} {}", c.identity, c.residual);
        }
    }

    #[test]
    fn bracket_has_propagator_form() {
        let l = ModeLattice::new(
            vec![[q(0), q(0), q(0)], [q(4), q(0), q(0)], [q(0), q(-4), q(0)]],
            q(1),
            q(3),
        )
        .unwrap();
        let c = dirac_bracket_check(&l).unwrap();
        assert!(c.passed, "{}", c.residual);
    }
}
