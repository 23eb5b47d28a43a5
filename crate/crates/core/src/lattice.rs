//! Finite momentum lattices standing in for the continuous mass shells.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::symbolic::{fmt_q, q, Radical, Scalar, SymbolicError, Q};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LatticeError {
    #[error("momentum ({0}) occurs twice")]
    DuplicateMomentum(String),
    #[error("{0} sector must be massless")]
    MustBeMassless(&'static str),
    #[error("{0} sector needs a positive mass")]
    NeedsMass(&'static str),
    #[error("mode id {0} is not in the lattice")]
    UnknownMode(u32),
    #[error(transparent)]
    Symbolic(#[from] SymbolicError),
}

/// Mass-shell family a sector lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Scalar,
    Dirac,
    Gauge,
    Ghost,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Scalar => "scalar",
            Family::Dirac => "dirac",
            Family::Gauge => "gauge",
            Family::Ghost => "ghost",
        }
    }

    pub fn massless(self) -> bool {
        matches!(self, Family::Gauge | Family::Ghost)
    }
}

/// One lattice mode: an id and a spatial momentum with covariant components.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModeIndex {
    pub id: u32,
    pub p: [Q; 3],
}

impl ModeIndex {
    pub fn norm_sqr(&self) -> Q {
        self.p.iter().map(|c| c * c).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.p.iter().all(|c| c.is_zero())
    }

    pub fn label(&self) -> String {
        format!(
            "({},{},{})",
            fmt_q(&self.p[0]),
            fmt_q(&self.p[1]),
            fmt_q(&self.p[2])
        )
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ModeLattice {
    modes: Vec<ModeIndex>,
    masses: BTreeMap<Family, Q>,
}

impl ModeLattice {
    /// Builds a lattice from momenta; ids are assigned in order.
    pub fn new(momenta: Vec<[Q; 3]>, scalar_mass: Q, dirac_mass: Q) -> Result<Self, LatticeError> {
        let mut seen = BTreeSet::new();
        let mut modes = Vec::new();
        for (i, p) in momenta.into_iter().enumerate() {
            let m = ModeIndex { id: i as u32, p };
            if !seen.insert(m.p.clone()) {
                return Err(LatticeError::DuplicateMomentum(m.label()));
            }
            modes.push(m);
        }
        if !scalar_mass.is_positive() {
            return Err(LatticeError::NeedsMass("scalar"));
        }
        if !dirac_mass.is_positive() {
            return Err(LatticeError::NeedsMass("dirac"));
        }
        let mut masses = BTreeMap::new();
        masses.insert(Family::Scalar, scalar_mass);
        masses.insert(Family::Dirac, dirac_mass);
        masses.insert(Family::Gauge, Q::zero());
        masses.insert(Family::Ghost, Q::zero());
        Ok(ModeLattice { modes, masses })
    }

    /// Integer cube `{-k..k}^3`; `k = 1` gives 27 modes.
    pub fn cube(k: i64, scalar_mass: Q, dirac_mass: Q) -> Result<Self, LatticeError> {
        let mut ps = Vec::new();
        for a in -k..=k {
            for b in -k..=k {
                for c in -k..=k {
                    ps.push([q(a), q(b), q(c)]);
                }
            }
        }
        ModeLattice::new(ps, scalar_mass, dirac_mass)
    }

    /// The origin plus `±s·e_i` on each axis (7 modes).
    pub fn axes(s: i64, scalar_mass: Q, dirac_mass: Q) -> Result<Self, LatticeError> {
        let mut ps = vec![[q(0), q(0), q(0)]];
        for i in 0..3 {
            for sign in [1, -1] {
                let mut p = [q(0), q(0), q(0)];
                p[i] = q(sign * s);
                ps.push(p);
            }
        }
        ModeLattice::new(ps, scalar_mass, dirac_mass)
    }

    /// Modes along the first axis: `0, ±s, ±2s, ...` up to `n` modes.
    pub fn line(n: usize, s: i64, scalar_mass: Q, dirac_mass: Q) -> Result<Self, LatticeError> {
        let mut ps = Vec::new();
        let mut k = 0i64;
        while ps.len() < n {
            ps.push([q(k * s), q(0), q(0)]);
            if ps.len() < n && k != 0 {
                ps.push([q(-k * s), q(0), q(0)]);
            }
            k += 1;
        }
        ModeLattice::new(ps, scalar_mass, dirac_mass)
    }

    pub fn modes(&self) -> &[ModeIndex] {
        &self.modes
    }

    pub fn len(&self) -> usize {
        self.modes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modes.is_empty()
    }

    pub fn mass(&self, f: Family) -> &Q {
        &self.masses[&f]
    }

    pub fn mode(&self, id: u32) -> Result<&ModeIndex, LatticeError> {
        self.modes
            .iter()
            .find(|m| m.id == id)
            .ok_or(LatticeError::UnknownMode(id))
    }

    /// Modes available to a family: massless families drop the zero mode.
    pub fn modes_for(&self, f: Family) -> Vec<&ModeIndex> {
        self.modes
            .iter()
            .filter(|m| !(f.massless() && m.is_zero()))
            .collect()
    }

    /// On-shell energy `sqrt(m² + |p|²)` as a rational times a radical.
    pub fn energy(&self, f: Family, m: &ModeIndex) -> Result<(Q, Radical), LatticeError> {
        let mass = self.mass(f);
        Ok(Radical::sqrt(&(mass * mass + m.norm_sqr()))?)
    }

    pub fn energy_scalar(&self, f: Family, m: &ModeIndex) -> Result<Scalar, LatticeError> {
        let (r, rad) = self.energy(f, m)?;
        Ok(&Scalar::rational(r) * &Scalar::radical(rad))
    }

    /// True if `-p` is a mode whenever `p` is.
    pub fn is_reflection_symmetric(&self) -> bool {
        let set: BTreeSet<_> = self.modes.iter().map(|m| m.p.clone()).collect();
        self.modes
            .iter()
            .all(|m| set.contains(&[-&m.p[0], -&m.p[1], -&m.p[2]]))
    }

    /// Restricts to the given mode ids (keeping masses).
    pub fn subset(&self, ids: &[u32]) -> Result<ModeLattice, LatticeError> {
        let mut modes = Vec::new();
        for id in ids {
            modes.push(self.mode(*id)?.clone());
        }
        Ok(ModeLattice {
            modes,
            masses: self.masses.clone(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cube_has_27_symmetric_modes() {
        let l = ModeLattice::cube(1, q(1), q(1)).unwrap();
        assert_eq!(l.len(), 27);
        assert!(l.is_reflection_symmetric());
        assert_eq!(l.modes_for(Family::Ghost).len(), 26);
    }

    #[test]
    fn pythagorean_energy_is_rational() {
        let l = ModeLattice::axes(4, q(1), q(3)).unwrap();
        let (e, rad) = l.energy(Family::Dirac, &l.modes()[1]).unwrap();
        assert_eq!(e, q(5));
        assert!(rad.is_one());
    }

    #[test]
    fn duplicates_rejected() {
        let r = ModeLattice::new(vec![[q(1), q(0), q(0)], [q(1), q(0), q(0)]], q(1), q(1));
        assert!(matches!(r, Err(LatticeError::DuplicateMomentum(_))));
    }

    #[test]
    fn line_lattice_is_symmetric_for_odd_counts() {
        let l = ModeLattice::line(3, 2, q(1), q(1)).unwrap();
        assert_eq!(l.len(), 3);
        assert!(l.is_reflection_symmetric());
    }
}
