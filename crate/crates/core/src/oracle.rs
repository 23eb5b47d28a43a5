//! Truncated Fock-space matrices for the elementary generators, used as a
//! brute-force numeric reference for the symbolic engine.

use std::collections::BTreeMap;

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use thiserror::Error;

use crate::algebra::{GradedExpr, OpGen, Sector, Species};
use crate::fields::FieldError;
use crate::functionals::{Density, FunctionalError};
use crate::symbolic::{q_to_f64, Binding, Idx, Symbol, SymbolicError};

pub const DEFAULT_CAP: usize = 4096;

type C = Complex64;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OracleError {
    #[error("generator {0} has no slot in the oracle space")]
    MissingSlot(String),
    #[error("generator {0} carries a symbolic index")]
    SymbolicIndex(String),
    #[error("oracle dimension {dim} exceeds the cap {cap}")]
    TooLarge { dim: usize, cap: usize },
    #[error(transparent)]
    Symbolic(#[from] SymbolicError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Functional(#[from] FunctionalError),
}

/// Row-sparse complex matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Sparse {
    dim: usize,
    rows: Vec<BTreeMap<usize, C>>,
}

impl Sparse {
    pub fn zero(dim: usize) -> Self {
        Sparse {
            dim,
            rows: vec![BTreeMap::new(); dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Sparse::zero(dim);
        for i in 0..dim {
            m.rows[i].insert(i, C::new(1.0, 0.0));
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> C {
        self.rows[i].get(&j).copied().unwrap_or_default()
    }

    fn add_at(&mut self, i: usize, j: usize, v: C) {
        if v != C::default() {
            *self.rows[i].entry(j).or_default() += v;
        }
    }

    pub fn add(&self, o: &Sparse) -> Sparse {
        let mut out = self.clone();
        for (i, r) in o.rows.iter().enumerate() {
            for (j, v) in r {
                out.add_at(i, *j, *v);
            }
        }
        out
    }

    pub fn scale(&self, c: C) -> Sparse {
        Sparse {
            dim: self.dim,
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|(j, v)| (*j, v * c)).collect())
                .collect(),
        }
    }

    pub fn sub(&self, o: &Sparse) -> Sparse {
        self.add(&o.scale(C::new(-1.0, 0.0)))
    }

    pub fn mul(&self, o: &Sparse) -> Sparse {
        let mut out = Sparse::zero(self.dim);
        for (i, r) in self.rows.iter().enumerate() {
            for (k, a) in r {
                for (j, b) in &o.rows[*k] {
                    out.add_at(i, *j, a * b);
                }
            }
        }
        out
    }

    pub fn adjoint(&self) -> Sparse {
        let mut out = Sparse::zero(self.dim);
        for (i, r) in self.rows.iter().enumerate() {
            for (j, v) in r {
                out.add_at(*j, i, v.conj());
            }
        }
        out
    }

    /// Largest entry in the columns selected by `mask`.
    pub fn max_abs_on(&self, mask: &[bool]) -> f64 {
        self.rows
            .iter()
            .flat_map(|r| r.iter())
            .filter(|(j, _)| mask[**j])
            .map(|(_, v)| v.norm())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.max_abs_on(&vec![true; self.dim])
    }

    pub fn to_dense(&self) -> DMatrix<C> {
        let mut m = DMatrix::zeros(self.dim, self.dim);
        for (i, r) in self.rows.iter().enumerate() {
            for (j, v) in r {
                m[(i, *j)] = *v;
            }
        }
        m
    }

    /// Sorted eigenvalues of a Hermitian matrix.
    pub fn hermitian_eigenvalues(&self) -> Vec<f64> {
        let e = SymmetricEigen::new(self.to_dense());
        let mut v: Vec<f64> = e.eigenvalues.iter().copied().collect();
        v.sort_by(|a, b| a.total_cmp(b));
        v
    }
}

/// `XY − (−1)^{|X||Y|}YX` on matrices.
pub fn matrix_bracket(x: &Sparse, y: &Sparse, both_odd: bool) -> Sparse {
    let xy = x.mul(y);
    let yx = y.mul(x);
    if both_odd {
        xy.add(&yx)
    } else {
        xy.sub(&yx)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Slot {
    /// The absorption generator of the slot.
    key: OpGen,
    odd: bool,
    /// `[b, b†] = −1` for spatial gauge quanta.
    negative: bool,
}

/// One factor per slot: dimension 2 for fermions, `n_max + 1` for bosons.
#[derive(Clone, Debug)]
pub struct OracleSpace {
    slots: Vec<Slot>,
    n_max: usize,
    strides: Vec<usize>,
    dim: usize,
}

fn absorb_key(g: &OpGen) -> Result<OpGen, OracleError> {
    if !matches!(g.mode, Idx::Val(_)) || !matches!(g.internal, Idx::Val(_)) {
        return Err(OracleError::SymbolicIndex(g.to_string()));
    }
    Ok(if g.species == Species::Absorb {
        g.clone()
    } else {
        g.partner()
    })
}

impl OracleSpace {
    /// Slots for the given generators, ordered like the canonical generator
    /// order so that Jordan–Wigner strings follow it.
    pub fn new(
        gens: impl IntoIterator<Item = OpGen>,
        n_max: usize,
        cap: usize,
    ) -> Result<Self, OracleError> {
        let mut keys = std::collections::BTreeSet::new();
        for g in gens {
            keys.insert(absorb_key(&g)?);
        }
        let slots: Vec<Slot> = keys
            .into_iter()
            .map(|k| Slot {
                odd: k.odd(),
                negative: k.sector == Sector::Gauge && k.aux != 0,
                key: k,
            })
            .collect();
        let mut strides = Vec::with_capacity(slots.len());
        let mut dim: usize = 1;
        for s in &slots {
            strides.push(dim);
            let d = if s.odd { 2 } else { n_max + 1 };
            dim = dim.saturating_mul(d);
            if dim > cap {
                return Err(OracleError::TooLarge { dim, cap });
            }
        }
        Ok(OracleSpace {
            slots,
            n_max,
            strides,
            dim,
        })
    }

    /// Space spanned by every generator occurring in the expressions.
    pub fn for_exprs<'a>(
        exprs: impl IntoIterator<Item = &'a GradedExpr>,
        n_max: usize,
        cap: usize,
    ) -> Result<Self, OracleError> {
        let mut gens = Vec::new();
        for e in exprs {
            for (w, _) in e.terms() {
                gens.extend(w.iter().cloned());
            }
        }
        OracleSpace::new(gens, n_max, cap)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn slot_count(&self) -> usize {
        self.slots.len()
    }

    fn slot_of(&self, g: &OpGen) -> Result<usize, OracleError> {
        let k = absorb_key(g)?;
        self.slots
            .binary_search_by(|s| s.key.cmp(&k))
            .map_err(|_| OracleError::MissingSlot(g.to_string()))
    }

    fn occ(&self, state: usize, k: usize) -> usize {
        let d = if self.slots[k].odd { 2 } else { self.n_max + 1 };
        (state / self.strides[k]) % d
    }

    fn act(&self, k: usize, absorb: bool, state: usize) -> Option<(usize, f64)> {
        let slot = &self.slots[k];
        let n = self.occ(state, k);
        if slot.odd {
            let parity = (0..k)
                .filter(|j| self.slots[*j].odd && self.occ(state, *j) == 1)
                .count();
            let s = if parity % 2 == 1 { -1.0 } else { 1.0 };
            match (absorb, n) {
                (true, 1) => Some((state - self.strides[k], s)),
                (false, 0) => Some((state + self.strides[k], s)),
                _ => None,
            }
        } else if absorb {
            (n > 0).then(|| (state - self.strides[k], (n as f64).sqrt()))
        } else {
            let s = if slot.negative { -1.0 } else { 1.0 };
            (n < self.n_max).then(|| (state + self.strides[k], s * ((n + 1) as f64).sqrt()))
        }
    }

    fn apply_word(&self, w: &[(usize, bool)], state: usize) -> Option<(usize, f64)> {
        let mut st = state;
        let mut c = 1.0;
        for (k, absorb) in w.iter().rev() {
            let (s, v) = self.act(*k, *absorb, st)?;
            st = s;
            c *= v;
        }
        Some((st, c))
    }

    pub fn build_operator(&self, g: &OpGen) -> Result<Sparse, OracleError> {
        let k = self.slot_of(g)?;
        let absorb = g.species == Species::Absorb;
        let mut m = Sparse::zero(self.dim);
        for j in 0..self.dim {
            if let Some((i, v)) = self.act(k, absorb, j) {
                m.add_at(i, j, C::new(v, 0.0));
            }
        }
        Ok(m)
    }

    /// `Σ c·(ordered product of generator matrices)` with coefficients
    /// evaluated under `b`.
    pub fn represent(&self, e: &GradedExpr, b: &Binding) -> Result<Sparse, OracleError> {
        let mut m = Sparse::zero(self.dim);
        for (w, c) in e.terms() {
            let cv = c.eval(b)?;
            if cv == C::default() {
                continue;
            }
            let ws: Vec<(usize, bool)> = w
                .iter()
                .map(|g| Ok((self.slot_of(g)?, g.species == Species::Absorb)))
                .collect::<Result<_, OracleError>>()?;
            for j in 0..self.dim {
                if let Some((i, v)) = self.apply_word(&ws, j) {
                    m.add_at(i, j, cv * v);
                }
            }
        }
        Ok(m)
    }

    /// Basis states where `depth` further emissions stay below the
    /// truncation in every bosonic slot.
    pub fn safe_mask(&self, depth: usize) -> Vec<bool> {
        (0..self.dim)
            .map(|s| {
                (0..self.slots.len())
                    .filter(|k| !self.slots[*k].odd)
                    .all(|k| self.occ(s, k) + depth <= self.n_max)
            })
            .collect()
    }

    /// Max-abs entry of `represent(a) − represent(b)` on the safe subspace.
    pub fn residual(
        &self,
        a: &GradedExpr,
        b: &GradedExpr,
        binding: &Binding,
    ) -> Result<f64, OracleError> {
        let depth = max_emissions(a).max(max_emissions(b));
        let d = self
            .represent(a, binding)?
            .sub(&self.represent(b, binding)?);
        Ok(d.max_abs_on(&self.safe_mask(depth)))
    }

    /// `∫d³x` of `Σ c·(AB − ⟨0|AB|0⟩)` by averaging over a periodic grid
    /// that integrates every occurring plane wave exactly.
    pub fn integrate_density(
        &self,
        d: &Density,
        label: &str,
        time_label: &str,
        t: f64,
    ) -> Result<Sparse, OracleError> {
        let grid = PlaneGrid::for_density(d, label);
        let mut out = Sparse::zero(self.dim);
        let id = Sparse::identity(self.dim);
        let points = grid.points();
        let w = 1.0 / points.len() as f64;
        for x in &points {
            let b = Binding::default()
                .with_time(time_label, t)
                .with_point(label, *x);
            for (c, fa, fb) in &d.terms {
                let cv = c.eval(&b)?;
                let prod = self.represent(fa, &b)?.mul(&self.represent(fb, &b)?);
                let vac = prod.get(0, 0);
                out = out.add(&prod.sub(&id.scale(vac)).scale(cv * w));
            }
        }
        Ok(out)
    }
}

/// Largest number of emissions in any word.
pub fn max_emissions(e: &GradedExpr) -> usize {
    e.terms()
        .map(|(w, _)| w.iter().filter(|g| g.species == Species::Emit).count())
        .max()
        .unwrap_or(0)
}

/// Per-axis uniform grid on the period of the occurring wave vectors.
#[derive(Clone, Debug)]
struct PlaneGrid {
    n: [usize; 3],
    step: [f64; 3],
}

impl PlaneGrid {
    fn for_density(d: &Density, label: &str) -> Self {
        let s = Symbol::new(label);
        let mut kmax = [0.0f64; 3];
        let mut den = [1i64; 3];
        for (_, a, b) in &d.terms {
            for e in [a, b] {
                for (_, c) in e.terms() {
                    for (k, _) in c.terms() {
                        if let Some(v) = k.phase().wave_vector(&s) {
                            for i in 0..3 {
                                let dd: i64 = v[i].denom().try_into().unwrap_or(1);
                                den[i] = num_integer::lcm(den[i], dd);
                                kmax[i] = kmax[i].max(q_to_f64(&v[i]).abs());
                            }
                        }
                    }
                }
            }
        }
        let mut n = [1usize; 3];
        let mut step = [0.0; 3];
        for i in 0..3 {
            // products carry wave numbers up to 2·kmax
            let m = (2.0 * kmax[i] * den[i] as f64).round() as usize;
            n[i] = 2 * m + 1;
            step[i] = 2.0 * std::f64::consts::PI * den[i] as f64 / n[i] as f64;
        }
        PlaneGrid { n, step }
    }

    fn points(&self) -> Vec<[f64; 3]> {
        let mut out = Vec::new();
        for i in 0..self.n[0] {
            for j in 0..self.n[1] {
                for k in 0..self.n[2] {
                    out.push([
                        i as f64 * self.step[0],
                        j as f64 * self.step[1],
                        k as f64 * self.step[2],
                    ]);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{koszul_product, super_bracket, Rule};

    fn v(i: u32) -> Idx {
        Idx::Val(i)
    }

    #[test]
    fn fermion_car_exact() {
        let c = OpGen::a_up(Sector::Ghost, v(0), v(0));
        let cd = c.partner();
        let sp = OracleSpace::new([c.clone()], 3, DEFAULT_CAP).unwrap();
        let (m, md) = (
            sp.build_operator(&c).unwrap(),
            sp.build_operator(&cd).unwrap(),
        );
        let b = matrix_bracket(&m, &md, true);
        assert_eq!(b, Sparse::identity(2));
    }

    #[test]
    fn boson_truncation_defect() {
        let a = OpGen::a_up(Sector::Scalar, v(0), v(0));
        let sp = OracleSpace::new([a.clone()], 3, DEFAULT_CAP).unwrap();
        let b = matrix_bracket(
            &sp.build_operator(&a).unwrap(),
            &sp.build_operator(&a.partner()).unwrap(),
            false,
        );
        for n in 0..3 {
            assert!((b.get(n, n) - C::new(1.0, 0.0)).norm() < 1e-12);
        }
        assert!((b.get(3, 3) - C::new(-3.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn distinct_fermion_slots_anticommute() {
        let c1 = OpGen::a_up(Sector::Ghost, v(0), v(0));
        let c2 = OpGen::a_up(Sector::Ghost, v(1), v(0));
        let sp = OracleSpace::new([c1.clone(), c2.clone()], 3, DEFAULT_CAP).unwrap();
        let b = matrix_bracket(
            &sp.build_operator(&c1).unwrap(),
            &sp.build_operator(&c2.partner()).unwrap(),
            true,
        );
        assert_eq!(b.max_abs(), 0.0);
    }

    #[test]
    fn represent_is_a_homomorphism() {
        let gens = [
            OpGen::a_up(Sector::Scalar, v(0), v(0)),
            OpGen::a_dag_low(Sector::Scalar, v(0), v(0)),
            OpGen::a_up(Sector::Ghost, v(0), v(0)),
            OpGen::a_dag_low(Sector::Ghost, v(1), v(0)),
            OpGen::a_low(Sector::Antighost, v(1), v(0)),
            OpGen::a_dag_up(Sector::Antighost, v(1), v(0)),
        ];
        let sp = OracleSpace::new(gens.iter().cloned(), 3, DEFAULT_CAP).unwrap();
        let b = Binding::default();
        for x in &gens {
            for y in &gens {
                for z in &gens {
                    let w = GradedExpr::word(
                        vec![x.clone(), y.clone(), z.clone()],
                        crate::symbolic::Scalar::one(),
                        Rule::Physical,
                    );
                    let m = sp
                        .build_operator(x)
                        .unwrap()
                        .mul(&sp.build_operator(y).unwrap())
                        .mul(&sp.build_operator(z).unwrap());
                    let r = sp.represent(&w, &b).unwrap().sub(&m);
                    assert!(r.max_abs_on(&sp.safe_mask(3)) < 1e-12);
                }
                let ex: GradedExpr = x.clone().into();
                let ey: GradedExpr = y.clone().into();
                let sb = super_bracket(&ex, &ey).unwrap();
                let mb = matrix_bracket(
                    &sp.represent(&ex, &b).unwrap(),
                    &sp.represent(&ey, &b).unwrap(),
                    x.odd() && y.odd(),
                );
                let r = sp.represent(&sb, &b).unwrap().sub(&mb);
                assert!(r.max_abs_on(&sp.safe_mask(2)) < 1e-12);
                let _ = koszul_product(&ex, &ey, Rule::Modified);
            }
        }
    }

    #[test]
    fn spatial_gauge_quanta_have_negative_norm() {
        let b1 = OpGen::b(1, v(0), v(0));
        let sp = OracleSpace::new([b1.clone()], 3, DEFAULT_CAP).unwrap();
        let br = matrix_bracket(
            &sp.build_operator(&b1).unwrap(),
            &sp.build_operator(&OpGen::b_dag(1, v(0), v(0))).unwrap(),
            false,
        );
        assert_eq!(br.get(0, 0), C::new(-1.0, 0.0));
    }

    #[test]
    fn cap_is_enforced() {
        let gens: Vec<_> = (0..6)
            .map(|m| OpGen::a_up(Sector::Scalar, v(m), v(0)))
            .collect();
        assert!(matches!(
            OracleSpace::new(gens, 3, 1024),
            Err(OracleError::TooLarge { .. })
        ));
    }
}
