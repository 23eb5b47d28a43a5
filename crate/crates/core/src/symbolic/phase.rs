use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use super::index::Symbol;
use super::number::{fmt_q, q_to_f64, Q};
use super::radical::Radical;

/// Spacetime event as a linear combination of labelled events.
///
/// `time` holds coefficients of time labels, `space` coefficients of spatial
/// point labels. The empty point is the origin.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldPoint {
    pub time: BTreeMap<Symbol, Q>,
    pub space: BTreeMap<Symbol, Q>,
}

fn axpy(into: &mut BTreeMap<Symbol, Q>, from: &BTreeMap<Symbol, Q>, k: &Q) {
    for (s, c) in from {
        let slot = into.entry(s.clone()).or_insert_with(Q::zero);
        *slot += c * k;
        if slot.is_zero() {
            into.remove(s);
        }
    }
}

impl FieldPoint {
    pub fn origin() -> Self {
        FieldPoint::default()
    }

    /// The event `(t_name, x_name)` built from one time and one point label.
    pub fn named(name: &str) -> Self {
        let mut p = FieldPoint::default();
        p.time
            .insert(Symbol::new(format!("t_{name}")), Q::from_integer(1.into()));
        p.space.insert(Symbol::new(name), Q::from_integer(1.into()));
        p
    }

    /// Same spatial label as `named`, but at time zero.
    pub fn spatial(name: &str) -> Self {
        let mut p = FieldPoint::default();
        p.space.insert(Symbol::new(name), Q::from_integer(1.into()));
        p
    }

    /// Event with the given time labels replaced by a shared label `t`.
    pub fn at_time(&self, t: &str) -> Self {
        let mut p = self.clone();
        p.time.clear();
        p.time.insert(Symbol::new(t), Q::from_integer(1.into()));
        p
    }

    pub fn combine(&self, other: &FieldPoint, k: &Q) -> FieldPoint {
        let mut out = self.clone();
        axpy(&mut out.time, &other.time, k);
        axpy(&mut out.space, &other.space, k);
        out
    }

    pub fn add(&self, other: &FieldPoint) -> FieldPoint {
        self.combine(other, &Q::from_integer(1.into()))
    }

    pub fn sub(&self, other: &FieldPoint) -> FieldPoint {
        self.combine(other, &Q::from_integer((-1).into()))
    }

    pub fn neg(&self) -> FieldPoint {
        FieldPoint::origin().sub(self)
    }

    pub fn spatial_part(&self) -> FieldPoint {
        FieldPoint {
            time: BTreeMap::new(),
            space: self.space.clone(),
        }
    }
}

impl fmt::Display for FieldPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let render = |m: &BTreeMap<Symbol, Q>| -> String {
            if m.is_empty() {
                return "0".into();
            }
            let mut s = String::new();
            for (i, (k, c)) in m.iter().enumerate() {
                let neg = c.is_negative();
                let mag = c.abs();
                if i > 0 || neg {
                    s.push_str(if neg { "-" } else { "+" });
                }
                if mag != Q::from_integer(1.into()) {
                    s.push_str(&fmt_q(&mag));
                }
                s.push_str(k.as_str());
            }
            s
        };
        write!(f, "({};{})", render(&self.time), render(&self.space))
    }
}

/// Formal phase factor `exp(i·Φ)` with `Φ` linear in time and point labels.
///
/// Time coefficients are keyed by the irrational part of the energy so that
/// equality of phases is syntactic.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Phase {
    time: BTreeMap<(Symbol, Radical), Q>,
    space: BTreeMap<Symbol, [Q; 3]>,
}

fn vec_zero(v: &[Q; 3]) -> bool {
    v.iter().all(|c| c.is_zero())
}

impl Phase {
    pub fn one() -> Self {
        Phase::default()
    }

    pub fn is_one(&self) -> bool {
        self.time.is_empty() && self.space.is_empty()
    }

    /// `exp(sign·i·⟨p,x⟩)` with `⟨p,x⟩ = p₀t + Σ p_i x^i` and `p₀ = energy`.
    pub fn plane_wave(sign: i32, energy: &(Q, Radical), p: &[Q; 3], x: &FieldPoint) -> Phase {
        let s = Q::from_integer(sign.into());
        let mut out = Phase::one();
        for (t, c) in &x.time {
            let k = &s * c * &energy.0;
            if !k.is_zero() {
                out.time.insert((t.clone(), energy.1.clone()), k);
            }
        }
        for (xs, c) in &x.space {
            let k = &s * c;
            let v = [&p[0] * &k, &p[1] * &k, &p[2] * &k];
            if !vec_zero(&v) {
                out.space.insert(xs.clone(), v);
            }
        }
        out
    }

    pub fn mul(&self, o: &Phase) -> Phase {
        let mut out = self.clone();
        for (k, c) in &o.time {
            let slot = out.time.entry(k.clone()).or_insert_with(Q::zero);
            *slot += c;
            if slot.is_zero() {
                out.time.remove(k);
            }
        }
        for (k, v) in &o.space {
            let slot = out
                .space
                .entry(k.clone())
                .or_insert_with(|| [Q::zero(), Q::zero(), Q::zero()]);
            for i in 0..3 {
                slot[i] += &v[i];
            }
            if vec_zero(slot) {
                out.space.remove(k);
            }
        }
        out
    }

    pub fn inv(&self) -> Phase {
        Phase {
            time: self.time.iter().map(|(k, c)| (k.clone(), -c)).collect(),
            space: self
                .space
                .iter()
                .map(|(k, v)| (k.clone(), [-&v[0], -&v[1], -&v[2]]))
                .collect(),
        }
    }

    pub fn has_time(&self) -> bool {
        !self.time.is_empty()
    }

    pub fn space_labels(&self) -> impl Iterator<Item = &Symbol> {
        self.space.keys()
    }

    pub fn wave_vector(&self, label: &Symbol) -> Option<&[Q; 3]> {
        self.space.get(label)
    }

    /// Integrates over the point label: `∫ d³x e^{ik·x}` is 1 for `k = 0`
    /// and 0 otherwise. Returns `None` for a vanishing integral.
    pub fn integrate_space(&self, label: &Symbol) -> Option<Phase> {
        if self.space.contains_key(label) {
            None
        } else {
            Some(self.clone())
        }
    }

    pub fn value(&self, b: &super::Binding) -> Result<f64, super::SymbolicError> {
        let mut v = 0.0;
        for ((t, rad), c) in &self.time {
            let tv = b
                .times
                .get(t)
                .ok_or_else(|| super::SymbolicError::Unbound(t.to_string()))?;
            v += q_to_f64(c) * rad.to_f64() * tv;
        }
        for (xs, k) in &self.space {
            let xv = b
                .points
                .get(xs)
                .ok_or_else(|| super::SymbolicError::Unbound(xs.to_string()))?;
            for i in 0..3 {
                v += q_to_f64(&k[i]) * xv[i];
            }
        }
        Ok(v)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for ((t, rad), c) in &self.time {
            if rad.is_one() {
                parts.push(format!("{}·{}", fmt_q(c), t));
            } else {
                parts.push(format!("{}·{}·{}", fmt_q(c), rad, t));
            }
        }
        for (xs, k) in &self.space {
            parts.push(format!(
                "({},{},{})·{}",
                fmt_q(&k[0]),
                fmt_q(&k[1]),
                fmt_q(&k[2]),
                xs
            ));
        }
        write!(f, "e^{{i({})}}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::number::q;

    fn mom(a: i64, b: i64, c: i64) -> [Q; 3] {
        [q(a), q(b), q(c)]
    }

    #[test]
    fn opposite_waves_cancel() {
        let e = (q(5), Radical::one());
        let x = FieldPoint::named("x");
        let a = Phase::plane_wave(1, &e, &mom(4, 0, 0), &x);
        let b = Phase::plane_wave(-1, &e, &mom(4, 0, 0), &x);
        assert!(a.mul(&b).is_one());
        assert_eq!(a.inv(), b);
    }

    #[test]
    fn difference_of_points() {
        let e = (q(1), Radical::one());
        let x = FieldPoint::named("x");
        let y = FieldPoint::named("y");
        let d = x.sub(&y);
        let direct = Phase::plane_wave(-1, &e, &mom(1, 2, 0), &d);
        let split = Phase::plane_wave(-1, &e, &mom(1, 2, 0), &x).mul(&Phase::plane_wave(
            1,
            &e,
            &mom(1, 2, 0),
            &y,
        ));
        assert_eq!(direct, split);
    }

    #[test]
    fn spatial_integral_is_orthogonality() {
        let e = (q(1), Radical::one());
        let x = FieldPoint::spatial("x");
        let lbl = Symbol::new("x");
        assert!(Phase::plane_wave(1, &e, &mom(1, 0, 0), &x)
            .integrate_space(&lbl)
            .is_none());
        assert!(Phase::plane_wave(1, &e, &mom(0, 0, 0), &x)
            .integrate_space(&lbl)
            .is_some());
    }
}
