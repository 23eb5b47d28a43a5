//! Products of prime fourth roots, `∏ p^{k_p/4}` with `0 < k_p < 4`.
//!
//! Every positive rational raised to a multiple of 1/4 splits uniquely into a
//! rational factor times one of these. Distinct radicals are linearly
//! independent over the Gaussian rationals, so a sum of terms keyed by radical
//! is zero exactly when every coefficient is zero.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use super::number::{q, Q};
use super::SymbolicError;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Radical(BTreeMap<u64, u8>);

fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn big_to_u64(n: &BigInt) -> Result<u64, SymbolicError> {
    n.to_u64()
        .ok_or_else(|| SymbolicError::RadicandTooLarge(n.to_string()))
}

impl Radical {
    pub fn one() -> Self {
        Radical(BTreeMap::new())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> impl Iterator<Item = (u64, u8)> + '_ {
        self.0.iter().map(|(p, k)| (*p, *k))
    }

    /// `x^{quarters/4}` for a positive rational `x`.
    pub fn root(x: &Q, quarters: i64) -> Result<(Q, Radical), SymbolicError> {
        if !x.is_positive() {
            return Err(SymbolicError::NonPositiveRadicand(super::number::fmt_q(x)));
        }
        let mut rat = Q::one();
        let mut rad = BTreeMap::new();
        let mut absorb = |n: &BigInt, sign: i64| -> Result<(), SymbolicError> {
            for (p, e) in factor(big_to_u64(n)?) {
                let total = sign * quarters * e as i64;
                let (whole, rem) = total.div_mod_floor(&4);
                let pb = Q::from_integer(BigInt::from(p));
                if whole >= 0 {
                    rat *= num_traits::pow(pb, whole as usize);
                } else {
                    rat /= num_traits::pow(pb, (-whole) as usize);
                }
                if rem != 0 {
                    let slot = rad.entry(p).or_insert(0u8);
                    *slot += rem as u8;
                }
            }
            Ok(())
        };
        absorb(x.numer(), 1)?;
        absorb(x.denom(), -1)?;
        // A prime in both numerator and denominator can leave a slot >= 4.
        let mut out = BTreeMap::new();
        for (p, k) in rad {
            let (whole, rem) = (k / 4, k % 4);
            if whole > 0 {
                rat *= num_traits::pow(q(p as i64), whole as usize);
            }
            if rem != 0 {
                out.insert(p, rem);
            }
        }
        Ok((rat, Radical(out)))
    }

    pub fn sqrt(x: &Q) -> Result<(Q, Radical), SymbolicError> {
        Radical::root(x, 2)
    }

    pub fn mul(&self, o: &Radical) -> (Q, Radical) {
        let mut rat = Q::one();
        let mut out = self.0.clone();
        for (p, k) in &o.0 {
            let slot = out.entry(*p).or_insert(0);
            *slot += k;
            if *slot >= 4 {
                *slot -= 4;
                rat *= q(*p as i64);
            }
            if *slot == 0 {
                out.remove(p);
            }
        }
        (rat, Radical(out))
    }

    pub fn inv(&self) -> (Q, Radical) {
        let mut den = BigInt::one();
        let mut out = BTreeMap::new();
        for (p, k) in &self.0 {
            den *= BigInt::from(*p);
            out.insert(*p, 4 - k);
        }
        (Q::new(BigInt::one(), den), Radical(out))
    }

    /// True when every exponent is a multiple of 1/2.
    pub fn is_square_root(&self) -> bool {
        self.0.values().all(|k| *k == 2)
    }

    pub fn to_f64(&self) -> f64 {
        self.0
            .iter()
            .map(|(p, k)| (*p as f64).powf(*k as f64 / 4.0))
            .product()
    }
}

impl fmt::Display for Radical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (p, k) in &self.0 {
            if !first {
                write!(f, "·")?;
            }
            first = false;
            match k {
                2 => write!(f, "√{p}")?,
                _ => write!(f, "{p}^({k}/4)")?,
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::number::qr;

    #[test]
    fn sqrt_of_perfect_square_is_rational() {
        let (r, rad) = Radical::sqrt(&q(25)).unwrap();
        assert_eq!(r, q(5));
        assert!(rad.is_one());
    }

    #[test]
    fn sqrt_of_fraction() {
        // sqrt(8/3) = 2·sqrt(2)·sqrt(3)/3
        let (r, rad) = Radical::sqrt(&qr(8, 3)).unwrap();
        assert_eq!(r, qr(2, 3));
        assert_eq!(rad.factors().collect::<Vec<_>>(), vec![(2, 2), (3, 2)]);
        let v = crate::symbolic::number::q_to_f64(&r) * rad.to_f64();
        assert!((v - (8.0f64 / 3.0).sqrt()).abs() < 1e-12);
    }

    #[test]
    fn fourth_root_products_close() {
        let (r1, a) = Radical::root(&q(2), -1).unwrap();
        let (r2, b) = Radical::root(&q(2), -3).unwrap();
        let (r3, c) = a.mul(&b);
        // 2^{-1/4}·2^{-3/4} = 1/2
        assert_eq!(r1 * r2 * r3, qr(1, 2));
        assert!(c.is_one());
    }

    #[test]
    fn inverse_roundtrip() {
        let (_, a) = Radical::root(&q(12), 3).unwrap();
        let (r, ai) = a.inv();
        let (r2, one) = a.mul(&ai);
        assert!(one.is_one());
        assert_eq!(r * r2, q(1));
    }

    #[test]
    fn negative_radicand_rejected() {
        assert!(Radical::sqrt(&q(-2)).is_err());
    }
}
