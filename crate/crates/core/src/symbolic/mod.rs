//! Exact scalar arithmetic: Gaussian rationals, formal symbols, prime
//! radicals, Kronecker deltas on index variables, and formal phase factors.

use std::collections::BTreeMap;

use thiserror::Error;

mod index;
mod number;
mod phase;
mod radical;
mod scalar;

pub use index::{Delta, DeltaValue, Idx, Symbol};
pub use number::{fmt_q, q, q_to_f64, qr, Gauss, Q};
pub use phase::{FieldPoint, Phase};
pub use radical::Radical;
pub use scalar::{Key, Scalar};

use crate::lattice::ModeLattice;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SymbolicError {
    #[error("radicand {0} is not positive")]
    NonPositiveRadicand(String),
    #[error("radicand {0} is too large to factor")]
    RadicandTooLarge(String),
    #[error("symbol {0} has no numeric binding")]
    Unbound(String),
    #[error("index {0} is not bound by any delta and summation is disabled")]
    UnboundIndex(String),
}

/// Numeric values for formal symbols, time labels, point labels and index
/// variables, used when evaluating a scalar to a complex number.
#[derive(Clone, Debug, Default)]
pub struct Binding {
    pub syms: BTreeMap<Symbol, f64>,
    pub times: BTreeMap<Symbol, f64>,
    pub points: BTreeMap<Symbol, [f64; 3]>,
    pub indices: BTreeMap<Symbol, u32>,
}

impl Binding {
    pub fn with_sym(mut self, s: &str, v: f64) -> Self {
        self.syms.insert(Symbol::new(s), v);
        self
    }

    pub fn with_time(mut self, s: &str, v: f64) -> Self {
        self.times.insert(Symbol::new(s), v);
        self
    }

    pub fn with_point(mut self, s: &str, v: [f64; 3]) -> Self {
        self.points.insert(Symbol::new(s), v);
        self
    }

    /// Binds the time and point labels produced by [`FieldPoint::named`].
    pub fn with_event(self, name: &str, t: f64, x: [f64; 3]) -> Self {
        self.with_time(&format!("t_{name}"), t).with_point(name, x)
    }
}

/// Sums `var` over the modes of `lattice`, sifting through deltas.
pub fn delta_contract(
    e: &Scalar,
    var: &Symbol,
    lattice: &ModeLattice,
    allow_sum: bool,
) -> Result<Scalar, SymbolicError> {
    let ids: Vec<u32> = lattice.modes().iter().map(|m| m.id).collect();
    e.delta_contract(var, &ids, allow_sum)
}

#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn atom() -> impl Strategy<Value = Scalar> {
        let idx = prop_oneof![
            (0u32..3).prop_map(Idx::Val),
            prop_oneof![Just("p"), Just("q"), Just("r")].prop_map(Idx::var),
        ];
        prop_oneof![
            (-3i64..4, 1i64..4).prop_map(|(n, d)| Scalar::rational(qr(n, d))),
            Just(Scalar::i()),
            prop_oneof![Just("m"), Just("xi")].prop_map(Scalar::sym),
            (1i64..7, -3i64..4).prop_map(|(x, k)| Scalar::root(&q(x), k).unwrap()),
            (idx.clone(), idx).prop_map(|(a, b)| Scalar::delta(a, b)),
            (-2i64..3, -2i64..3).prop_map(|(a, b)| {
                let e = (q(1), Radical::one());
                Scalar::phase(Phase::plane_wave(
                    1,
                    &e,
                    &[q(a), q(b), q(0)],
                    &FieldPoint::named("x"),
                ))
            }),
        ]
    }

    fn scalar() -> impl Strategy<Value = Scalar> {
        prop::collection::vec(prop::collection::vec(atom(), 1..3), 0..4).prop_map(|terms| {
            let mut s = Scalar::zero();
            for factors in terms {
                let mut t = Scalar::one();
                for f in factors {
                    t = &t * &f;
                }
                s.add_assign(&t);
            }
            s
        })
    }

    proptest! {
        #[test]
        fn addition_associative_and_commutative(a in scalar(), b in scalar(), c in scalar()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &b, &b + &a);
        }

        #[test]
        fn multiplication_distributes(a in scalar(), b in scalar(), c in scalar()) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn contraction_is_idempotent(a in scalar()) {
            let ids = [0u32, 1, 2];
            let q_ = Symbol::new("q");
            let once = a.delta_contract(&q_, &ids, true).unwrap();
            prop_assert_eq!(once.subst_idx(&q_, &Idx::Val(0)), once.clone());
            let twice = once.delta_contract(&q_, &ids, true).unwrap();
            // After one contraction `q` is gone, so a second pass only
            // multiplies by the mode count.
            prop_assert_eq!(twice, once.scale(&Gauss::int(3)));
        }

        #[test]
        fn no_zero_coefficients_stored(a in scalar(), b in scalar()) {
            let s = &(&a * &b) - &(&b * &a);
            prop_assert!(s.is_zero());
            for (_, c) in (&a + &b).terms() {
                prop_assert!(!c.is_zero());
            }
        }
    }
}
