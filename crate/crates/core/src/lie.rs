//! Internal Lie-algebra data for the gauge sector: anti-Hermitian bases,
//! trace metrics and structure constants.

use nalgebra::{DMatrix, SymmetricEigen};
use num_traits::Zero;
use thiserror::Error;

use crate::symbolic::{qr, Binding, Gauss, Scalar, SymbolicError, Q};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LieError {
    #[error("generator {0} is not {1}×{1}")]
    BadShape(usize, usize),
    #[error("generator {0} is not anti-Hermitian")]
    NotAntiHermitian(usize),
    #[error("[l_{0}, l_{1}] is not in the span of the basis")]
    NonClosure(usize, usize),
    #[error("the trace metric is singular or not exactly invertible")]
    SingularMetric,
    #[error("unknown preset {0}")]
    UnknownPreset(String),
    #[error(transparent)]
    Symbolic(#[from] SymbolicError),
}

/// Square matrix of exact scalars, row-major.
pub type Mat = Vec<Vec<Scalar>>;

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let mut out = vec![vec![Scalar::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if !a[i][k].is_zero() && !b[k][j].is_zero() {
                    out[i][j].add_assign(&(&a[i][k] * &b[k][j]));
                }
            }
        }
    }
    out
}

fn mat_sub(a: &Mat, b: &Mat) -> Mat {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x - y).collect())
        .collect()
}

fn mat_dagger(a: &Mat) -> Mat {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| a[j][i].conj()).collect())
        .collect()
}

fn trace(a: &Mat) -> Scalar {
    let mut t = Scalar::zero();
    for (i, r) in a.iter().enumerate() {
        t.add_assign(&r[i]);
    }
    t
}

fn commutator(a: &Mat, b: &Mat) -> Mat {
    mat_sub(&mat_mul(a, b), &mat_mul(b, a))
}

/// Exact inverse of a small scalar matrix: diagonal matrices with invertible
/// monomial entries, or matrices with Gaussian-rational entries.
fn invert(h: &[Vec<Scalar>]) -> Result<Vec<Vec<Scalar>>, LieError> {
    let d = h.len();
    let diagonal = (0..d).all(|i| (0..d).all(|j| i == j || h[i][j].is_zero()));
    if diagonal {
        let mut out = vec![vec![Scalar::zero(); d]; d];
        for i in 0..d {
            out[i][i] = h[i][i].try_inv().ok_or(LieError::SingularMetric)?;
        }
        return Ok(out);
    }
    let mut a: Vec<Vec<Gauss>> = Vec::new();
    for r in h {
        a.push(
            r.iter()
                .map(|x| x.as_gauss().ok_or(LieError::SingularMetric))
                .collect::<Result<_, _>>()?,
        );
    }
    let mut inv: Vec<Vec<Gauss>> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| if i == j { Gauss::one() } else { Gauss::zero() })
                .collect()
        })
        .collect();
    for col in 0..d {
        let piv = (col..d)
            .find(|&r| !a[r][col].is_zero())
            .ok_or(LieError::SingularMetric)?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let k = a[col][col].inv().ok_or(LieError::SingularMetric)?;
        for j in 0..d {
            a[col][j] = &a[col][j] * &k;
            inv[col][j] = &inv[col][j] * &k;
        }
        for r in 0..d {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..d {
                    a[r][j] = &a[r][j] - &(&f * &a[col][j]);
                    inv[r][j] = &inv[r][j] - &(&f * &inv[col][j]);
                }
            }
        }
    }
    Ok(inv
        .into_iter()
        .map(|r| r.into_iter().map(Scalar::from).collect())
        .collect())
}

/// A basis `l_I` of anti-Hermitian matrices with metric and structure constants.
#[derive(Clone, Debug, PartialEq)]
pub struct LieData {
    pub name: String,
    pub n: usize,
    pub generators: Vec<Mat>,
    /// `c[i][j][h] = c^i_{jh}`.
    pub constants: Vec<Vec<Vec<Scalar>>>,
    /// `H_IJ = Tr(l_I† l_J)`.
    pub metric: Vec<Vec<Scalar>>,
    pub metric_inv: Vec<Vec<Scalar>>,
}

impl LieData {
    pub fn new(name: &str, n: usize, generators: Vec<Mat>) -> Result<Self, LieError> {
        for (i, g) in generators.iter().enumerate() {
            if g.len() != n || g.iter().any(|r| r.len() != n) {
                return Err(LieError::BadShape(i, n));
            }
            let sum: Mat = g
                .iter()
                .zip(mat_dagger(g))
                .map(|(a, b)| a.iter().zip(&b).map(|(x, y)| x + y).collect())
                .collect();
            if sum.iter().any(|r| r.iter().any(|x| !x.is_zero())) {
                return Err(LieError::NotAntiHermitian(i));
            }
        }
        let metric = trace_metric(&generators);
        let metric_inv = invert(&metric)?;
        let constants = structure_constants(&generators, &metric_inv)?;
        Ok(LieData {
            name: name.to_string(),
            n,
            generators,
            constants,
            metric,
            metric_inv,
        })
    }

    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn c(&self, i: usize, j: usize, h: usize) -> &Scalar {
        &self.constants[i][j][h]
    }

    pub fn is_abelian(&self) -> bool {
        self.constants
            .iter()
            .flatten()
            .flatten()
            .all(|c| c.is_zero())
    }

    /// `v_I = H_IJ v^J`.
    pub fn lower(&self, v: &[Scalar]) -> Vec<Scalar> {
        apply(&self.metric, v)
    }

    /// `v^I = H^IJ v_J`.
    pub fn raise(&self, v: &[Scalar]) -> Vec<Scalar> {
        apply(&self.metric_inv, v)
    }

    /// `c_{IJH} = H_IK c^K_{JH}`.
    pub fn lowered_constants(&self) -> Vec<Vec<Vec<Scalar>>> {
        let d = self.dim();
        let mut out = vec![vec![vec![Scalar::zero(); d]; d]; d];
        for i in 0..d {
            for j in 0..d {
                for h in 0..d {
                    for k in 0..d {
                        if !self.metric[i][k].is_zero() {
                            out[i][j][h]
                                .add_assign(&(&self.metric[i][k] * &self.constants[k][j][h]));
                        }
                    }
                }
            }
        }
        out
    }

    /// Copy with `c^i_{jh}` shifted by `delta` (and `c^i_{hj}` by `−delta`).
    pub fn corrupted(&self, i: usize, j: usize, h: usize, delta: Scalar) -> LieData {
        let mut out = self.clone();
        out.name = format!("{}-corrupted", self.name);
        out.constants[i][j][h].add_assign(&delta);
        out.constants[i][h][j].add_assign(&-delta);
        out
    }

    /// Signature `(positive, negative)` of `G(X,Y) = Re Tr(XY)` on the real
    /// span of `{l_I, i·l_I}`.
    pub fn g_signature(&self) -> Result<(usize, usize), LieError> {
        let b = Binding::default();
        let i = Scalar::i();
        let mut basis: Vec<Mat> = self.generators.clone();
        basis.extend(self.generators.iter().map(|g| {
            g.iter()
                .map(|r| r.iter().map(|x| x * &i).collect())
                .collect()
        }));
        let d = basis.len();
        let mut g = DMatrix::<f64>::zeros(d, d);
        for a in 0..d {
            for c in 0..d {
                g[(a, c)] = trace(&mat_mul(&basis[a], &basis[c])).eval(&b)?.re;
            }
        }
        let eig = SymmetricEigen::new(g);
        let pos = eig.eigenvalues.iter().filter(|v| **v > 1e-9).count();
        let neg = eig.eigenvalues.iter().filter(|v| **v < -1e-9).count();
        Ok((pos, neg))
    }

    /// `G(l_I, i·l_J)` for all pairs; zero when `𝔏 ⊥ i𝔏`.
    pub fn cross_block(&self) -> Vec<Vec<Scalar>> {
        let i = Scalar::i();
        let d = self.dim();
        (0..d)
            .map(|a| {
                (0..d)
                    .map(|c| {
                        let t = trace(&mat_mul(&self.generators[a], &self.generators[c]));
                        // Re of i·t
                        let it = &t * &i;
                        &(&it + &it.conj()) * &Scalar::rational(qr(1, 2))
                    })
                    .collect()
            })
            .collect()
    }
}

fn apply(m: &[Vec<Scalar>], v: &[Scalar]) -> Vec<Scalar> {
    m.iter()
        .map(|r| {
            let mut s = Scalar::zero();
            for (a, b) in r.iter().zip(v) {
                s.add_assign(&(a * b));
            }
            s
        })
        .collect()
}

/// `H_IJ = Tr(l_I† l_J)`.
pub fn trace_metric(generators: &[Mat]) -> Vec<Vec<Scalar>> {
    generators
        .iter()
        .map(|a| {
            generators
                .iter()
                .map(|b| trace(&mat_mul(&mat_dagger(a), b)))
                .collect()
        })
        .collect()
}

/// `c^I_{JH}` from `[l_J, l_H] = c^I_{JH} l_I`, checked exactly.
pub fn structure_constants(
    generators: &[Mat],
    metric_inv: &[Vec<Scalar>],
) -> Result<Vec<Vec<Vec<Scalar>>>, LieError> {
    let d = generators.len();
    let mut c = vec![vec![vec![Scalar::zero(); d]; d]; d];
    for j in 0..d {
        for h in 0..d {
            let br = commutator(&generators[j], &generators[h]);
            let proj: Vec<Scalar> = generators
                .iter()
                .map(|g| trace(&mat_mul(&mat_dagger(g), &br)))
                .collect();
            let coeffs = apply(metric_inv, &proj);
            let mut rebuilt = vec![vec![Scalar::zero(); br.len()]; br.len()];
            for (i, k) in coeffs.iter().enumerate() {
                for (r, row) in generators[i].iter().enumerate() {
                    for (s, x) in row.iter().enumerate() {
                        rebuilt[r][s].add_assign(&(k * x));
                    }
                }
            }
            if mat_sub(&br, &rebuilt)
                .iter()
                .any(|r| r.iter().any(|x| !x.is_zero()))
            {
                return Err(LieError::NonClosure(j, h));
            }
            for (i, k) in coeffs.into_iter().enumerate() {
                c[i][j][h] = k;
            }
        }
    }
    Ok(c)
}

/// Max over all index tuples of the Jacobi combination.
pub fn jacobi_residual(c: &[Vec<Vec<Scalar>>]) -> Result<f64, SymbolicError> {
    let d = c.len();
    let b = Binding::default();
    let mut worst = 0.0f64;
    for i in 0..d {
        for j in 0..d {
            for h in 0..d {
                for k in 0..d {
                    let mut s = Scalar::zero();
                    for l in 0..d {
                        for (x, y, z, w) in [(j, l, h, k), (h, l, k, j), (k, l, j, h)] {
                            if !c[i][x][y].is_zero() && !c[l][z][w].is_zero() {
                                s.add_assign(&(&c[i][x][y] * &c[l][z][w]));
                            }
                        }
                    }
                    worst = worst.max(s.eval(&b)?.norm());
                }
            }
        }
    }
    Ok(worst)
}

fn g(re: Q, im: Q) -> Scalar {
    Scalar::from(Gauss::new(re, im))
}

fn z() -> Scalar {
    Scalar::zero()
}

/// `−(i/2)·M` for a matrix of Gaussian rationals.
fn minus_half_i(m: Vec<Vec<Scalar>>) -> Mat {
    let k = g(Q::zero(), qr(-1, 2));
    m.into_iter()
        .map(|r| r.into_iter().map(|x| &x * &k).collect())
        .collect()
}

fn pauli() -> [Mat; 3] {
    let one = || Scalar::int(1);
    let i = Scalar::i;
    [
        vec![vec![z(), one()], vec![one(), z()]],
        vec![vec![z(), -i()], vec![i(), z()]],
        vec![vec![one(), z()], vec![z(), -one()]],
    ]
}

pub fn u1() -> LieData {
    LieData::new("u1", 1, vec![vec![vec![Scalar::i()]]]).expect("u(1) preset")
}

pub fn su2() -> LieData {
    LieData::new("su2", 2, pauli().into_iter().map(minus_half_i).collect()).expect("su(2) preset")
}

/// `su(2) ⊕ u(1)` with the central generator `−(i/2)𝟙`.
pub fn u2() -> LieData {
    let mut gens: Vec<Mat> = pauli().into_iter().map(minus_half_i).collect();
    gens.push(minus_half_i(vec![
        vec![Scalar::int(1), z()],
        vec![z(), Scalar::int(1)],
    ]));
    LieData::new("u2", 2, gens).expect("u(2) preset")
}

fn gell_mann() -> Vec<Mat> {
    let e = |r: usize, c: usize, v: Scalar| {
        let mut m = vec![vec![z(); 3]; 3];
        m[r][c] = v;
        m
    };
    let add = |a: Mat, b: Mat| -> Mat {
        a.into_iter()
            .zip(b)
            .map(|(ra, rb)| ra.into_iter().zip(rb).map(|(x, y)| x + y).collect())
            .collect()
    };
    let one = || Scalar::int(1);
    let i = Scalar::i;
    let inv_sqrt3 = Scalar::root(&qr(1, 3), 2).expect("positive radicand");
    let mut l8 = vec![vec![z(); 3]; 3];
    l8[0][0] = inv_sqrt3.clone();
    l8[1][1] = inv_sqrt3.clone();
    l8[2][2] = &inv_sqrt3 * &Scalar::int(-2);
    vec![
        add(e(0, 1, one()), e(1, 0, one())),
        add(e(0, 1, -i()), e(1, 0, i())),
        add(e(0, 0, one()), e(1, 1, -one())),
        add(e(0, 2, one()), e(2, 0, one())),
        add(e(0, 2, -i()), e(2, 0, i())),
        add(e(1, 2, one()), e(2, 1, one())),
        add(e(1, 2, -i()), e(2, 1, i())),
        l8,
    ]
}

pub fn su3() -> LieData {
    LieData::new(
        "su3",
        3,
        gell_mann().into_iter().map(minus_half_i).collect(),
    )
    .expect("su(3) preset")
}

pub fn preset(name: &str) -> Result<LieData, LieError> {
    match name {
        "u1" | "u(1)" => Ok(u1()),
        "su2" | "su(2)" => Ok(su2()),
        "u2" | "u(2)" => Ok(u2()),
        "su3" | "su(3)" => Ok(su3()),
        other => Err(LieError::UnknownPreset(other.to_string())),
    }
}

/// Builds a generator from `[re, im]` rational pairs.
pub fn matrix_from_pairs(rows: &[Vec<(Q, Q)>]) -> Mat {
    rows.iter()
        .map(|r| r.iter().map(|(a, b)| g(a.clone(), b.clone())).collect())
        .collect()
}

pub fn unit(i: usize, d: usize) -> Vec<Scalar> {
    (0..d)
        .map(|k| {
            if k == i {
                Scalar::int(1)
            } else {
                Scalar::zero()
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eps(i: usize, j: usize, h: usize) -> i64 {
        match (i, j, h) {
            (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
            (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
            _ => 0,
        }
    }

    #[test]
    fn su2_constants_are_levi_civita() {
        let l = su2();
        for i in 0..3 {
            for j in 0..3 {
                for h in 0..3 {
                    assert_eq!(l.c(i, j, h), &Scalar::int(eps(i, j, h)));
                }
                let expect = if i == j {
                    Scalar::rational(qr(1, 2))
                } else {
                    Scalar::zero()
                };
                assert_eq!(l.metric[i][j], expect);
            }
        }
    }

    #[test]
    fn u1_is_abelian() {
        assert!(u1().is_abelian());
        assert_eq!(jacobi_residual(&u1().constants).unwrap(), 0.0);
    }

    #[test]
    fn su3_antisymmetric_and_jacobi() {
        let l = su3();
        assert_eq!(l.dim(), 8);
        for i in 0..8 {
            for j in 0..8 {
                for h in 0..8 {
                    assert!((l.c(i, j, h) + l.c(i, h, j)).is_zero());
                }
            }
        }
        assert!(jacobi_residual(&l.constants).unwrap() < 1e-12);
        let low = l.lowered_constants();
        for i in 0..8 {
            for j in 0..8 {
                for h in 0..8 {
                    assert_eq!(low[i][j][h], -low[j][i][h].clone());
                    assert_eq!(low[i][j][h], low[j][h][i]);
                }
            }
        }
    }

    #[test]
    fn corrupted_constants_break_jacobi() {
        let bad = su2().corrupted(0, 0, 1, Scalar::int(1));
        assert!(jacobi_residual(&bad.constants).unwrap() > 0.5);
    }

    #[test]
    fn signature_and_block_orthogonality() {
        assert_eq!(u2().g_signature().unwrap(), (4, 4));
        for l in [su2(), su3()] {
            assert!(l.cross_block().iter().flatten().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn raise_lower_roundtrip() {
        let l = su3();
        for i in 0..8 {
            let v = unit(i, 8);
            assert_eq!(l.raise(&l.lower(&v)), v);
        }
    }

    #[test]
    fn rejects_hermitian_and_non_closing_bases() {
        let herm = vec![vec![Scalar::int(1)]];
        assert_eq!(
            LieData::new("x", 1, vec![herm]),
            Err(LieError::NotAntiHermitian(0))
        );
        let p = pauli().map(minus_half_i);
        let r = LieData::new("x", 2, vec![p[0].clone(), p[1].clone()]);
        assert!(matches!(r, Err(LieError::NonClosure(..))));
    }

    #[test]
    fn general_metric_inverse() {
        let h = vec![
            vec![Scalar::int(2), Scalar::int(1)],
            vec![Scalar::int(1), Scalar::int(1)],
        ];
        let inv = invert(&h).unwrap();
        assert_eq!(inv[0][0], Scalar::int(1));
        assert_eq!(inv[0][1], Scalar::int(-1));
        assert_eq!(inv[1][1], Scalar::int(2));
    }
}
