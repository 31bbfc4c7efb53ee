//! Eisenstein integers Z[rho], rho^2 + rho + 1 = 0, and the p = 3 solution
//! family: xi^q = x + y*rho gives (x^3 + y^3)/(x + y) = N(xi)^q exactly, an
//! infinite supply of genuine solutions used as the search harness's positive
//! control.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::intops::is_prime_u64;

/// a + b*rho with rho a primitive cube root of unity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EisensteinInt {
    a: BigInt,
    b: BigInt,
}

impl EisensteinInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        EisensteinInt {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn one() -> Self {
        EisensteinInt::new(1, 0)
    }

    /// rho^2 = -1 - rho folds the cross term back onto the basis.
    pub fn mul(&self, other: &Self) -> Self {
        let ac = &self.a * &other.a;
        let bd = &self.b * &other.b;
        let ad_bc = &self.a * &other.b + &self.b * &other.a;
        EisensteinInt {
            a: ac - &bd,
            b: ad_bc - bd,
        }
    }

    /// Complex conjugate: rho -> rho^2 = -1 - rho.
    pub fn conj(&self) -> Self {
        EisensteinInt {
            a: &self.a - &self.b,
            b: -self.b.clone(),
        }
    }

    /// N(a + b rho) = a^2 - ab + b^2 = xi * conj(xi), always >= 0.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = EisensteinInt::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

/// A verified member of the p = 3 family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct P3Tuple {
    pub x: BigInt,
    pub y: BigInt,
    pub z: BigInt,
    /// Reported, never silently divided out: the family does not promise
    /// coprime (x, y).
    pub gcd_xy: BigInt,
}

/// Expand xi^q = x + y*rho and return (x, y, z = N(xi)) with the identity
/// (x^3 + y^3)/(x + y) = z^q re-verified exactly.
pub fn gen_p3(xi: &EisensteinInt, q: u64) -> Result<P3Tuple> {
    if q < 5 || !is_prime_u64(q) {
        return Err(Error::BadPrimePair(3, q));
    }
    if xi.is_zero() {
        return Err(Error::ZeroInput);
    }
    let z = xi.norm();
    if z.is_one() {
        return Err(Error::UnitInput);
    }
    let power = xi.pow(q);
    let x = power.a().clone();
    let y = power.b().clone();
    let s = &x + &y;
    if s.is_zero() {
        return Err(Error::DegenerateSum);
    }
    // (x^3 + y^3)/(x + y) = x^2 - xy + y^2 = N(xi^q) = z^q
    let cubes = x.pow(3) + y.pow(3);
    let (quot, rem) = cubes.div_rem(&s);
    assert!(rem.is_zero(), "x + y divides x^3 + y^3");
    assert_eq!(quot, z.pow(q as u32), "family identity must hold exactly");
    let gcd_xy = x.gcd(&y);
    Ok(P3Tuple { x, y, z, gcd_xy })
}
