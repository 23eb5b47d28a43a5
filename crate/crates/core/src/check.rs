//! Outcome of a single identity check, shared by all verification suites.

use std::fmt;

use crate::algebra::GradedExpr;
use crate::symbolic::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub enum Residual {
    /// Number of monomials left in an exact symbolic difference.
    Terms(usize),
    /// Largest absolute entry of a numeric difference.
    MaxAbs(f64),
}

impl Residual {
    pub fn value(&self) -> f64 {
        match self {
            Residual::Terms(n) => *n as f64,
            Residual::MaxAbs(x) => *x,
        }
    }
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Residual::Terms(n) => write!(f, "{n} terms"),
            Residual::MaxAbs(x) => write!(f, "{x:.3e}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub identity: String,
    pub anchor: String,
    pub passed: bool,
    pub residual: Residual,
    /// Informational checks are reported but never fail a suite.
    pub informational: bool,
}

impl Check {
    pub fn new(
        identity: impl Into<String>,
        anchor: impl Into<String>,
        passed: bool,
        residual: Residual,
    ) -> Self {
        Check {
            identity: identity.into(),
            anchor: anchor.into(),
            passed,
            residual,
            informational: false,
        }
    }

    /// Exact comparison of two scalars.
    pub fn scalar(
        identity: impl Into<String>,
        anchor: impl Into<String>,
        lhs: &Scalar,
        rhs: &Scalar,
    ) -> Self {
        let diff = lhs - rhs;
        Check::new(
            identity,
            anchor,
            diff.is_zero(),
            Residual::Terms(diff.len()),
        )
    }

    /// Exact comparison of two operator expressions.
    pub fn expr(
        identity: impl Into<String>,
        anchor: impl Into<String>,
        lhs: &GradedExpr,
        rhs: &GradedExpr,
    ) -> Self {
        let diff = lhs - rhs;
        Check::new(
            identity,
            anchor,
            diff.is_zero(),
            Residual::Terms(diff.term_count()),
        )
    }

    /// Numeric comparison against a tolerance.
    pub fn numeric(
        identity: impl Into<String>,
        anchor: impl Into<String>,
        residual: f64,
        tol: f64,
    ) -> Self {
        Check::new(
            identity,
            anchor,
            residual <= tol,
            Residual::MaxAbs(residual),
        )
    }

    pub fn informational(mut self) -> Self {
        self.informational = true;
        self
    }

    /// True unless a non-informational check failed.
    pub fn ok(&self) -> bool {
        self.passed || self.informational
    }
}

pub fn all_ok(checks: &[Check]) -> bool {
    checks.iter().all(Check::ok)
}
