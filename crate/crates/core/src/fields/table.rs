//! The scalar-sector table of field super-commutators at two events.

use crate::check::{Check, Residual};
use crate::lattice::{Family, ModeLattice};
use crate::symbolic::{FieldPoint, Idx, Scalar};

use super::{
    field_supercommutator, propagator_d, scalar_field, FieldError, FieldExpr, ScalarForm, Stat,
};

const ANCHOR: &str = "field-supercommutators";

fn events() -> (FieldPoint, FieldPoint) {
    (FieldPoint::named("x"), FieldPoint::named("x'"))
}

/// `D⁺ + s·D⁻` at `y`, optionally differentiated.
fn d_comb(
    s: i64,
    y: &FieldPoint,
    l: &ModeLattice,
    deriv: Option<usize>,
) -> Result<Scalar, FieldError> {
    let dp = propagator_d(1, y, l, Family::Scalar, deriv)?;
    let dm = propagator_d(-1, y, l, Family::Scalar, deriv)?;
    Ok(&dp + &dm.scale(&s.into()))
}

/// One row of the table as data: the two fields and the stated value for
/// each derivative component.
#[derive(Clone, Debug)]
pub struct TableRow {
    pub name: String,
    pub left: ScalarForm,
    pub left_deriv: bool,
    pub right: ScalarForm,
    pub right_deriv: bool,
    pub informational: bool,
    /// `(λ, value)`; `λ` is `None` for rows without a derivative.
    pub target: Vec<(Option<usize>, Scalar)>,
}

/// The two fields of a row at `x` and `x′`, with internal indices `a`, `b`.
pub fn row_fields(
    stat: Stat,
    row: &TableRow,
    lambda: Option<usize>,
    a: &Idx,
    b: &Idx,
    l: &ModeLattice,
) -> Result<(FieldExpr, FieldExpr), FieldError> {
    let (x, xp) = events();
    let ld = if row.left_deriv { lambda } else { None };
    let rd = if row.right_deriv { lambda } else { None };
    Ok((
        scalar_field(row.left, stat, a, &x, ld, l)?,
        scalar_field(row.right, stat, b, &xp, rd, l)?,
    ))
}

/// All thirteen rows for one statistics, with their stated values in the
/// index variables `α`, `β`.
///
/// The two rows in `x + x′` are informational.
pub fn table_rows(l: &ModeLattice, stat: Stat) -> Result<Vec<TableRow>, FieldError> {
    use ScalarForm::*;
    let (x, xp) = events();
    let diff = x.sub(&xp);
    let sum = x.add(&xp);
    let s = if stat == Stat::Boson { 1 } else { -1 };
    let dab = Scalar::delta(Idx::var("α"), Idx::var("β"));
    let row = |name: &str,
               left,
               left_deriv: bool,
               right,
               right_deriv: bool,
               target: &dyn Fn(Option<usize>) -> Result<Scalar, FieldError>|
     -> Result<TableRow, FieldError> {
        let lambdas: Vec<Option<usize>> = if left_deriv || right_deriv {
            (0..4).map(Some).collect()
        } else {
            vec![None]
        };
        Ok(TableRow {
            name: name.to_string(),
            left,
            left_deriv,
            right,
            right_deriv,
            informational: false,
            target: lambdas
                .into_iter()
                .map(|lam| Ok((lam, target(lam)?)))
                .collect::<Result<_, FieldError>>()?,
        })
    };
    let zero = |_: Option<usize>| Ok(Scalar::zero());
    let mut out = vec![
        row("⟦φ^α(x), φ^β(x′)⟧ = 0", Phi, false, Phi, false, &zero)?,
        row("⟦φ^α(x), φ^β*(x′)⟧ = 0", Phi, false, PhiStar, false, &zero)?,
        row(
            "⟦φ^α*(x), φ^β*(x′)⟧ = 0",
            PhiStar,
            false,
            PhiStar,
            false,
            &zero,
        )?,
        row("⟦φ^α(x), φ^β_,λ(x′)⟧ = 0", Phi, false, Phi, true, &zero)?,
        row(
            "⟦φ^α(x), φ^β*_,λ(x′)⟧ = 0",
            Phi,
            false,
            PhiStar,
            true,
            &zero,
        )?,
        row(
            "⟦φ^α*(x), φ^β*_,λ(x′)⟧ = 0",
            PhiStar,
            false,
            PhiStar,
            true,
            &zero,
        )?,
    ];
    let mut r = row(
        "⟦φ^α(x), 𝒞φ_β(x′)⟧ = δ(D⁺ ± D⁻)(x+x′)",
        Phi,
        false,
        CPhi,
        false,
        &|_| Ok(&dab * &d_comb(s, &sum, l, None)?),
    )?;
    r.informational = true;
    out.push(r);
    out.push(row(
        "⟦φ^α(x), 𝒞φ*_β(x′)⟧ = δ(D⁺ ± D⁻)(x−x′)",
        Phi,
        false,
        CPhiStar,
        false,
        &|_| Ok(&dab * &d_comb(s, &diff, l, None)?),
    )?);
    out.push(row(
        "⟦φ^α(x), φ̄_β(x′)⟧ = δ𝒟(x−x′)",
        Phi,
        false,
        PhiBar,
        false,
        &|_| Ok(&dab * &d_comb(1, &diff, l, None)?),
    )?);
    let mut r = row(
        "⟦φ^α(x), 𝒞φ_β,λ(x′)⟧ = δ(D⁺_,λ ± D⁻_,λ)(x+x′)",
        Phi,
        false,
        CPhi,
        true,
        &|lam| Ok(&dab * &d_comb(s, &sum, l, lam)?),
    )?;
    r.informational = true;
    out.push(r);
    out.push(row(
        "⟦φ^α(x), 𝒞φ*_β,λ(x′)⟧ = δ(−D⁺_,λ ∓ D⁻_,λ)(x−x′)",
        Phi,
        false,
        CPhiStar,
        true,
        &|lam| Ok(-(&dab * &d_comb(s, &diff, l, lam)?)),
    )?);
    out.push(row(
        "⟦φ^α(x), φ̄_β,λ(x′)⟧ = −δ𝒟_,λ(x−x′)",
        Phi,
        false,
        PhiBar,
        true,
        &|lam| Ok(-(&dab * &d_comb(1, &diff, l, lam)?)),
    )?);
    out.push(row(
        "⟦φ^α_,λ(x), φ̄_β(x′)⟧ = δ𝒟_,λ(x−x′)",
        Phi,
        true,
        PhiBar,
        false,
        &|lam| Ok(&dab * &d_comb(1, &diff, l, lam)?),
    )?);
    Ok(out)
}

/// All thirteen rows checked by exact cancellation; a row with a derivative
/// passes only if every component does.
pub fn field_table(l: &ModeLattice, stat: Stat) -> Result<Vec<Check>, FieldError> {
    let (a, b) = (Idx::var("α"), Idx::var("β"));
    let mut out = Vec::new();
    for row in table_rows(l, stat)? {
        let mut residual = 0;
        for (lam, want) in &row.target {
            let (f, g) = row_fields(stat, &row, *lam, &a, &b, l)?;
            residual += (&field_supercommutator(&f, &g)? - want).len();
        }
        let c = Check::new(
            format!("{} [{}]", row.name, stat.name()),
            format!("{ANCHOR}/{}", stat.name()),
            residual == 0,
            Residual::Terms(residual),
        );
        out.push(if row.informational {
            c.informational()
        } else {
            c
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::all_ok;
    use crate::symbolic::q;

    #[test]
    fn table_holds_for_both_statistics() {
        let l = ModeLattice::axes(1, q(1), q(1)).unwrap();
        for stat in [Stat::Boson, Stat::Fermion] {
            let t = field_table(&l, stat).unwrap();
            assert_eq!(t.len(), 13);
            for c in &t {
                assert!(c.passed, "{} residual {}", c.identity, c.residual);
            }
            assert!(all_ok(&t));
        }
    }
}
