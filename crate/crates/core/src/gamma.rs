//! Dirac matrices in the standard representation, the boost `K(p)`, shell
//! projectors and Dirac frames. Exact entries are [`Scalar`]s; a float path
//! covers momenta with irrational energy.

use std::ops::{Add, Mul, Sub};

use nalgebra::Matrix4;
use num_complex::Complex64;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::symbolic::{q_to_f64, Gauss, Radical, Scalar, SymbolicError, Q};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GammaError {
    #[error("gamma index {0} out of range 0..3")]
    IndexOutOfRange(usize),
    #[error("mass must be positive")]
    Massless,
    #[error("energy of ({0}) is irrational; use the floating path")]
    NonRationalEnergy(String),
    #[error(transparent)]
    Symbolic(#[from] SymbolicError),
}

/// A 4×4 matrix of exact scalars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinMatrix(pub [[Scalar; 4]; 4]);

impl SpinMatrix {
    pub fn zero() -> Self {
        SpinMatrix(Default::default())
    }

    pub fn identity() -> Self {
        SpinMatrix::diag([1, 1, 1, 1])
    }

    fn diag(d: [i64; 4]) -> Self {
        let mut m = SpinMatrix::zero();
        for i in 0..4 {
            m.0[i][i] = Scalar::int(d[i]);
        }
        m
    }

    fn from_gauss(rows: [[Gauss; 4]; 4]) -> Self {
        SpinMatrix(rows.map(|r| r.map(Scalar::from)))
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.0[r][c]
    }

    pub fn scale(&self, k: &Scalar) -> SpinMatrix {
        SpinMatrix(self.0.clone().map(|r| r.map(|x| &x * k)))
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> SpinMatrix {
        let mut m = SpinMatrix::zero();
        for i in 0..4 {
            for j in 0..4 {
                m.0[i][j] = self.0[j][i].conj();
            }
        }
        m
    }

    pub fn transpose(&self) -> SpinMatrix {
        let mut m = SpinMatrix::zero();
        for i in 0..4 {
            for j in 0..4 {
                m.0[i][j] = self.0[j][i].clone();
            }
        }
        m
    }

    /// Dirac adjoint `γ⁰ M† γ⁰`.
    pub fn dirac_adjoint(&self) -> SpinMatrix {
        let g0 = gamma0();
        &(&g0 * &self.dagger()) * &g0
    }

    pub fn trace(&self) -> Scalar {
        let mut t = Scalar::zero();
        for i in 0..4 {
            t.add_assign(&self.0[i][i]);
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|r| r.iter().all(|x| x.is_zero()))
    }

    pub fn to_c64(&self) -> Result<Matrix4<Complex64>, SymbolicError> {
        let b = crate::symbolic::Binding::default();
        let mut m = Matrix4::zeros();
        for i in 0..4 {
            for j in 0..4 {
                m[(i, j)] = self.0[i][j].eval(&b)?;
            }
        }
        Ok(m)
    }

    pub fn column(&self, c: usize) -> [Scalar; 4] {
        [0, 1, 2, 3].map(|r| self.0[r][c].clone())
    }
}

impl Mul for &SpinMatrix {
    type Output = SpinMatrix;
    fn mul(self, o: &SpinMatrix) -> SpinMatrix {
        let mut m = SpinMatrix::zero();
        for i in 0..4 {
            for j in 0..4 {
                let mut s = Scalar::zero();
                for k in 0..4 {
                    if !self.0[i][k].is_zero() && !o.0[k][j].is_zero() {
                        s.add_assign(&(&self.0[i][k] * &o.0[k][j]));
                    }
                }
                m.0[i][j] = s;
            }
        }
        m
    }
}

impl Add for &SpinMatrix {
    type Output = SpinMatrix;
    fn add(self, o: &SpinMatrix) -> SpinMatrix {
        let mut m = self.clone();
        for i in 0..4 {
            for j in 0..4 {
                m.0[i][j].add_assign(&o.0[i][j]);
            }
        }
        m
    }
}

impl Sub for &SpinMatrix {
    type Output = SpinMatrix;
    fn sub(self, o: &SpinMatrix) -> SpinMatrix {
        self + &o.scale(&Scalar::int(-1))
    }
}

fn gamma0() -> SpinMatrix {
    SpinMatrix::diag([1, 1, -1, -1])
}

/// `γ^λ`; `γ⁰ = diag(1,1,−1,−1)`, `γ^i = [[0,σ_i],[−σ_i,0]]`.
pub fn gamma(lambda: usize) -> Result<SpinMatrix, GammaError> {
    let z = Gauss::zero;
    let o = || Gauss::int(1);
    let i = Gauss::i;
    let sigma: [[Gauss; 2]; 2] = match lambda {
        0 => return Ok(gamma0()),
        1 => [[z(), o()], [o(), z()]],
        2 => [[z(), -i()], [i(), z()]],
        3 => [[o(), z()], [z(), -o()]],
        n => return Err(GammaError::IndexOutOfRange(n)),
    };
    let mut rows: [[Gauss; 4]; 4] = Default::default();
    for r in 0..2 {
        for c in 0..2 {
            rows[r][c + 2] = sigma[r][c].clone();
            rows[r + 2][c] = -sigma[r][c].clone();
        }
    }
    Ok(SpinMatrix::from_gauss(rows))
}

/// Metric `g = diag(+,−,−,−)`.
pub fn metric(lambda: usize) -> i64 {
    if lambda == 0 {
        1
    } else {
        -1
    }
}

/// Momentum on the mass shell with covariant spatial components `p_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct OnShellMomentum {
    pub p: [Q; 3],
    pub mass: Q,
    /// `E = r·√k` as (rational, radical).
    pub energy: (Q, Radical),
}

impl OnShellMomentum {
    pub fn new(p: [Q; 3], mass: Q) -> Result<Self, GammaError> {
        let e2: Q = &mass * &mass + p.iter().map(|c| c * c).sum::<Q>();
        let energy = Radical::sqrt(&e2)?;
        Ok(OnShellMomentum { p, mass, energy })
    }

    pub fn energy_scalar(&self) -> Scalar {
        &Scalar::rational(self.energy.0.clone()) * &Scalar::radical(self.energy.1.clone())
    }

    fn rational_energy(&self) -> Option<&Q> {
        self.energy.1.is_one().then_some(&self.energy.0)
    }

    /// Covariant components `p_λ` with `p_0 = E`.
    pub fn lower(&self) -> [Scalar; 4] {
        [
            self.energy_scalar(),
            Scalar::rational(self.p[0].clone()),
            Scalar::rational(self.p[1].clone()),
            Scalar::rational(self.p[2].clone()),
        ]
    }

    fn check_mass(&self) -> Result<(), GammaError> {
        if self.mass.is_positive() {
            Ok(())
        } else {
            Err(GammaError::Massless)
        }
    }
}

/// `p_λ γ^λ`.
pub fn slash(p: &OnShellMomentum) -> SpinMatrix {
    let mut m = SpinMatrix::zero();
    for (l, c) in p.lower().iter().enumerate() {
        if !c.is_zero() {
            m = &m + &gamma(l).expect("index in range").scale(c);
        }
    }
    m
}

/// `K(p) = √(m/(2(E+m))) (𝟙 + p_λγ^λγ⁰/m)`; exact when `E` is rational.
pub fn boost_k(p: &OnShellMomentum) -> Result<SpinMatrix, GammaError> {
    p.check_mass()?;
    let e = p.rational_energy().ok_or_else(|| {
        GammaError::NonRationalEnergy(format!("{:?}", p.p.clone().map(|c| c.to_string())))
    })?;
    let m = &p.mass;
    let pref = Scalar::sqrt(&(m / (Q::from_integer(2.into()) * (e + m))))?;
    let inner = &SpinMatrix::identity()
        + &(&slash(p) * &gamma0()).scale(&Scalar::rational(Q::from_integer(1.into()) / m));
    Ok(inner.scale(&pref))
}

/// `Π± = (m𝟙 ± p_λγ^λ)/(2m)`.
pub fn shell_projectors(p: &OnShellMomentum) -> Result<(SpinMatrix, SpinMatrix), GammaError> {
    p.check_mass()?;
    let m = Scalar::rational(p.mass.clone());
    let inv = Scalar::rational(Q::from_integer(1.into()) / (Q::from_integer(2.into()) * &p.mass));
    let mi = SpinMatrix::identity().scale(&m);
    let s = slash(p);
    Ok(((&mi + &s).scale(&inv), (&mi - &s).scale(&inv)))
}

/// Columns of `K(p)`: `u_A = K ζ_A(0)` (A = 0,1) and `v_B = K ζ_{B+2}(0)`.
pub fn dirac_frame(
    p: &OnShellMomentum,
) -> Result<([[Scalar; 4]; 2], [[Scalar; 4]; 2]), GammaError> {
    let k = boost_k(p)?;
    Ok(([k.column(0), k.column(1)], [k.column(2), k.column(3)]))
}

/// Floating counterparts for arbitrary real momenta.
pub mod float {
    use super::*;

    pub fn gamma(lambda: usize) -> Result<Matrix4<Complex64>, GammaError> {
        Ok(super::gamma(lambda)?.to_c64()?)
    }

    pub fn energy(p: [f64; 3], m: f64) -> f64 {
        (m * m + p.iter().map(|c| c * c).sum::<f64>()).sqrt()
    }

    pub fn slash(p: [f64; 3], m: f64) -> Matrix4<Complex64> {
        let comps = [energy(p, m), p[0], p[1], p[2]];
        let mut s = Matrix4::zeros();
        for (l, c) in comps.iter().enumerate() {
            s += gamma(l).expect("index in range") * Complex64::new(*c, 0.0);
        }
        s
    }

    pub fn boost_k(p: [f64; 3], m: f64) -> Result<Matrix4<Complex64>, GammaError> {
        if m <= 0.0 {
            return Err(GammaError::Massless);
        }
        let e = energy(p, m);
        let pref = (m / (2.0 * (e + m))).sqrt();
        let g0 = gamma(0)?;
        Ok(
            (Matrix4::identity() + slash(p, m) * g0 / Complex64::new(m, 0.0))
                * Complex64::new(pref, 0.0),
        )
    }

    pub fn shell_projectors(
        p: [f64; 3],
        m: f64,
    ) -> Result<(Matrix4<Complex64>, Matrix4<Complex64>), GammaError> {
        if m <= 0.0 {
            return Err(GammaError::Massless);
        }
        let mi = Matrix4::<Complex64>::identity() * Complex64::new(m, 0.0);
        let s = slash(p, m);
        let k = Complex64::new(0.5 / m, 0.0);
        Ok(((mi + s) * k, (mi - s) * k))
    }

    pub fn dirac_adjoint(k: &Matrix4<Complex64>) -> Matrix4<Complex64> {
        let g0 = gamma(0).expect("index in range");
        g0 * k.adjoint() * g0
    }

    pub fn max_abs(m: &Matrix4<Complex64>) -> f64 {
        m.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

pub fn q_vec_to_f64(p: &[Q; 3]) -> [f64; 3] {
    [q_to_f64(&p[0]), q_to_f64(&p[1]), q_to_f64(&p[2])]
}

pub fn is_rational_shell(p: &[Q; 3], m: &Q) -> bool {
    OnShellMomentum::new(p.clone(), m.clone())
        .map(|o| o.energy.1.is_one() && !m.is_zero())
        .unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::q;

    fn anti(a: &SpinMatrix, b: &SpinMatrix) -> SpinMatrix {
        &(a * b) + &(b * a)
    }

    fn mom(a: i64, b: i64, c: i64, m: i64) -> OnShellMomentum {
        OnShellMomentum::new([q(a), q(b), q(c)], q(m)).unwrap()
    }

    #[test]
    fn clifford_relations() {
        for l in 0..4 {
            for m in 0..4 {
                let ac = anti(&gamma(l).unwrap(), &gamma(m).unwrap());
                let expect = if l == m {
                    SpinMatrix::identity().scale(&Scalar::int(2 * metric(l)))
                } else {
                    SpinMatrix::zero()
                };
                assert_eq!(ac, expect, "pair {l},{m}");
            }
        }
        assert!(gamma(4).is_err());
    }

    #[test]
    fn hermiticity_pattern() {
        assert_eq!(gamma(0).unwrap().dagger(), gamma(0).unwrap());
        for l in 1..4 {
            assert_eq!(
                gamma(l).unwrap().dagger(),
                gamma(l).unwrap().scale(&Scalar::int(-1))
            );
        }
    }

    #[test]
    fn rest_frame_boost_is_identity() {
        assert_eq!(boost_k(&mom(0, 0, 0, 3)).unwrap(), SpinMatrix::identity());
        let (pp, pm) = shell_projectors(&mom(0, 0, 0, 3)).unwrap();
        let half = Scalar::rational(crate::symbolic::qr(1, 2));
        assert_eq!(pp, (&SpinMatrix::identity() + &gamma0()).scale(&half));
        assert_eq!(pm, (&SpinMatrix::identity() - &gamma0()).scale(&half));
    }

    #[test]
    fn projectors_exact_with_radical_energy() {
        for p in [mom(4, 0, 0, 3), mom(1, 1, 0, 1), mom(6, 6, 7, 3)] {
            let (pp, pm) = shell_projectors(&p).unwrap();
            assert_eq!(&pp * &pp, pp);
            assert_eq!(&pm * &pm, pm);
            assert!((&pp * &pm).is_zero());
            assert_eq!(&pp + &pm, SpinMatrix::identity());
            assert_eq!(pp.trace(), Scalar::int(2));
            let s = slash(&p);
            let m = Scalar::rational(p.mass.clone());
            assert_eq!(&s * &s, SpinMatrix::identity().scale(&(&m * &m)));
        }
    }

    #[test]
    fn boost_is_dirac_isometry_and_maps_frames() {
        for p in [mom(4, 0, 0, 3), mom(0, -4, 0, 3), mom(6, 6, 0, 3)] {
            let k = boost_k(&p).unwrap();
            assert_eq!(&k.dirac_adjoint() * &k, SpinMatrix::identity());
            let (pp, pm) = shell_projectors(&p).unwrap();
            let (u, v) = dirac_frame(&p).unwrap();
            let (pu, pv) = (&pp * &k, &pm * &k);
            for a in 0..2 {
                for r in 0..4 {
                    assert_eq!(pu.0[r][a], u[a][r]);
                    assert!(pu.0[r][a + 2].is_zero());
                    assert_eq!(pv.0[r][a + 2], v[a][r]);
                }
            }
        }
    }

    #[test]
    fn irrational_energy_rejected_exactly() {
        assert!(matches!(
            boost_k(&mom(1, 0, 0, 1)),
            Err(GammaError::NonRationalEnergy(_))
        ));
        assert!(matches!(
            OnShellMomentum::new([q(1), q(0), q(0)], q(0)).map(|p| boost_k(&p)),
            Ok(Err(GammaError::Massless))
        ));
    }

    #[test]
    fn float_boost_matches_exact() {
        let p = mom(4, 0, 0, 3);
        let exact = boost_k(&p).unwrap().to_c64().unwrap();
        let fl = float::boost_k([4.0, 0.0, 0.0], 3.0).unwrap();
        assert!(float::max_abs(&(exact - fl)) < 1e-12);
    }

    #[test]
    fn boost_is_hermitian_not_unitary() {
        let k = float::boost_k([1.0, 0.0, 0.0], 1.0).unwrap();
        assert!(float::max_abs(&(k - k.adjoint())) < 1e-12);
        let plain = k.adjoint() * k - Matrix4::identity();
        assert!(float::max_abs(&plain) > 0.1);
        let dirac = float::dirac_adjoint(&k) * k - Matrix4::identity();
        assert!(float::max_abs(&dirac) < 1e-12);
    }
}
