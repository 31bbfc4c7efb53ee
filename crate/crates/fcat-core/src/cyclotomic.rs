//! Cyclotomic integers on the power basis.
//!
//! For an odd prime p, Z[zeta_p] is represented by integer coefficients on
//! {1, zeta, ..., zeta^(p-2)}; the relation zeta^(p-1) = -(1 + zeta + ... +
//! zeta^(p-2)) makes the form canonical, so equality is coefficient equality.
//! For two distinct odd primes p, q the composite ring Z[zeta_p, xi_q] uses
//! the tensor basis {zeta^i xi^j : i <= p-2, j <= q-2}.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::intops::is_prime_u64;

/// Conductor of the ambient ring: one odd prime or a product of two.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Conductor {
    Prime(u64),
    /// Q(zeta_p, xi_q); the order of the pair fixes the basis layout.
    Composite(u64, u64),
}

impl Conductor {
    pub fn prime(p: u64) -> Result<Self> {
        if p < 3 || !is_prime_u64(p) {
            return Err(Error::BadConductor(p));
        }
        Ok(Conductor::Prime(p))
    }

    pub fn composite(p: u64, q: u64) -> Result<Self> {
        if p < 3 || q < 3 || p == q || !is_prime_u64(p) || !is_prime_u64(q) {
            return Err(Error::BadConductor(p * q));
        }
        Ok(Conductor::Composite(p, q))
    }

    /// Rank of the ring as a Z-module.
    pub fn degree(&self) -> usize {
        match *self {
            Conductor::Prime(p) => (p - 1) as usize,
            Conductor::Composite(p, q) => ((p - 1) * (q - 1)) as usize,
        }
    }

    pub fn value(&self) -> u64 {
        match *self {
            Conductor::Prime(p) => p,
            Conductor::Composite(p, q) => p * q,
        }
    }

    /// All Galois indices: residues coprime to the conductor, as (c mod p, d mod q).
    fn automorphisms(&self) -> Vec<(u64, u64)> {
        match *self {
            Conductor::Prime(p) => (1..p).map(|c| (c, 1)).collect(),
            Conductor::Composite(p, q) => {
                let mut v = Vec::new();
                for c in 1..p {
                    for d in 1..q {
                        v.push((c, d));
                    }
                }
                v
            }
        }
    }
}

/// An element of Z[zeta_m] in canonical power-basis form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycInt {
    conductor: Conductor,
    coeffs: Vec<BigInt>,
}

impl CycInt {
    /// Build from power-basis coefficients (length = degree), already reduced.
    pub fn from_coeffs(conductor: Conductor, coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.len() != conductor.degree() {
            return Err(Error::BadGroupRingElement(
                "coefficient vector has wrong length".to_string(),
            ));
        }
        Ok(CycInt { conductor, coeffs })
    }

    pub fn zero(conductor: Conductor) -> Self {
        CycInt {
            conductor,
            coeffs: vec![BigInt::zero(); conductor.degree()],
        }
    }

    pub fn one(conductor: Conductor) -> Self {
        Self::from_int(conductor, BigInt::one())
    }

    pub fn from_int(conductor: Conductor, n: BigInt) -> Self {
        let mut v = vec![BigInt::zero(); conductor.degree()];
        v[0] = n;
        CycInt {
            conductor,
            coeffs: v,
        }
    }

    /// zeta^i (prime conductor) or zeta^i xi^j (composite), reduced.
    pub fn root_of_unity(conductor: Conductor, i: u64, j: u64) -> Self {
        match conductor {
            Conductor::Prime(p) => {
                let mut raw = vec![BigInt::zero(); p as usize];
                raw[(i % p) as usize] = BigInt::one();
                Self::reduce_prime(conductor, raw)
            }
            Conductor::Composite(p, q) => {
                let mut raw = vec![BigInt::zero(); (p * q) as usize];
                raw[((i % p) * q + (j % q)) as usize] = BigInt::one();
                Self::reduce_composite(conductor, raw)
            }
        }
    }

    /// zeta^k for prime conductor.
    pub fn zeta_pow(conductor: Conductor, k: u64) -> Result<Self> {
        match conductor {
            Conductor::Prime(_) => Ok(Self::root_of_unity(conductor, k, 0)),
            Conductor::Composite(..) => Err(Error::BadConductor(conductor.value())),
        }
    }

    /// lambda = 1 - zeta, the ramified uniformizer above p.
    pub fn lambda(p: u64) -> Result<Self> {
        let cond = Conductor::prime(p)?;
        Self::one(cond).sub(&Self::zeta_pow(cond, 1)?)
    }

    pub fn conductor(&self) -> Conductor {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Some(n) iff the element is the rational integer n.
    pub fn as_integer(&self) -> Option<&BigInt> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    // Fold a raw exponent vector (index = exponent mod p) onto the power basis
    // using zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)).
    fn reduce_prime(conductor: Conductor, raw: Vec<BigInt>) -> Self {
        let p = conductor.value() as usize;
        debug_assert_eq!(raw.len(), p);
        let top = raw[p - 1].clone();
        let coeffs = raw[..p - 1].iter().map(|a| a - &top).collect();
        CycInt { conductor, coeffs }
    }

    // Same folding applied independently in both tensor factors.
    fn reduce_composite(conductor: Conductor, raw: Vec<BigInt>) -> Self {
        let (p, q) = match conductor {
            Conductor::Composite(p, q) => (p as usize, q as usize),
            _ => unreachable!(),
        };
        debug_assert_eq!(raw.len(), p * q);
        let at = |i: usize, j: usize| &raw[i * q + j];
        let mut coeffs = Vec::with_capacity((p - 1) * (q - 1));
        for i in 0..p - 1 {
            for j in 0..q - 1 {
                coeffs.push(at(i, j) - at(i, q - 1) - at(p - 1, j) + at(p - 1, q - 1));
            }
        }
        CycInt { conductor, coeffs }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.conductor != other.conductor {
            return Err(Error::ConductorMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycInt {
            conductor: self.conductor,
            coeffs,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(CycInt {
            conductor: self.conductor,
            coeffs,
        })
    }

    pub fn neg(&self) -> Self {
        CycInt {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul_scalar(&self, s: &BigInt) -> Self {
        CycInt {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|a| a * s).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        match self.conductor {
            Conductor::Prime(p) => {
                let p = p as usize;
                let mut raw = vec![BigInt::zero(); p];
                for (i, a) in self.coeffs.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    for (k, b) in other.coeffs.iter().enumerate() {
                        if b.is_zero() {
                            continue;
                        }
                        raw[(i + k) % p] += a * b;
                    }
                }
                Ok(Self::reduce_prime(self.conductor, raw))
            }
            Conductor::Composite(p, q) => {
                let (p, q) = (p as usize, q as usize);
                let mut raw = vec![BigInt::zero(); p * q];
                for (idx_a, a) in self.coeffs.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    let (i1, j1) = (idx_a / (q - 1), idx_a % (q - 1));
                    for (idx_b, b) in other.coeffs.iter().enumerate() {
                        if b.is_zero() {
                            continue;
                        }
                        let (i2, j2) = (idx_b / (q - 1), idx_b % (q - 1));
                        raw[((i1 + i2) % p) * q + (j1 + j2) % q] += a * b;
                    }
                }
                Ok(Self::reduce_composite(self.conductor, raw))
            }
        }
    }

    pub fn pow(&self, e: u64) -> Result<Self> {
        let mut acc = Self::one(self.conductor);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// sigma_c: zeta -> zeta^c for prime conductor.
    pub fn galois(&self, c: u64) -> Result<Self> {
        match self.conductor {
            Conductor::Prime(_) => self.galois2(c, 1),
            Conductor::Composite(..) => Err(Error::BadConductor(self.conductor.value())),
        }
    }

    /// (zeta -> zeta^c, xi -> xi^d); for prime conductor d must be 1 mod q-side (ignored).
    pub fn galois2(&self, c: u64, d: u64) -> Result<Self> {
        match self.conductor {
            Conductor::Prime(p) => {
                if c.is_multiple_of(p) {
                    return Err(Error::BadGaloisIndex(c));
                }
                let p = p as usize;
                let c = (c as usize) % p;
                let mut raw = vec![BigInt::zero(); p];
                for (i, a) in self.coeffs.iter().enumerate() {
                    raw[(i * c) % p] += a;
                }
                Ok(Self::reduce_prime(self.conductor, raw))
            }
            Conductor::Composite(p, q) => {
                if c.is_multiple_of(p) || d.is_multiple_of(q) {
                    return Err(Error::BadGaloisIndex(c * d));
                }
                let (p, q) = (p as usize, q as usize);
                let (c, d) = ((c as usize) % p, (d as usize) % q);
                let mut raw = vec![BigInt::zero(); p * q];
                for (idx, a) in self.coeffs.iter().enumerate() {
                    let (i, j) = (idx / (q - 1), idx % (q - 1));
                    raw[((i * c) % p) * q + (j * d) % q] += a;
                }
                Ok(Self::reduce_composite(self.conductor, raw))
            }
        }
    }

    /// Complex conjugation: every root of unity to its inverse.
    pub fn conj(&self) -> Self {
        match self.conductor {
            Conductor::Prime(p) => self.galois(p - 1).expect("p - 1 is a unit mod p"),
            Conductor::Composite(p, q) => {
                self.galois2(p - 1, q - 1).expect("indices are units")
            }
        }
    }

    /// (norm, trace) over Q: product and sum of all Galois conjugates.
    /// Both are rational integers; asserted, not assumed.
    pub fn norm_trace(&self) -> Result<(BigInt, BigInt)> {
        let mut prod = self.clone();
        let mut sum = self.clone();
        for &(c, d) in self.conductor.automorphisms().iter().skip(1) {
            let conj = self.galois2(c, d)?;
            prod = prod.mul(&conj)?;
            sum = sum.add(&conj)?;
        }
        let n = prod
            .as_integer()
            .ok_or_else(|| Error::InvariantViolation("norm is not rational".to_string()))?
            .clone();
        let t = sum
            .as_integer()
            .ok_or_else(|| Error::InvariantViolation("trace is not rational".to_string()))?
            .clone();
        Ok((n, t))
    }

    pub fn norm(&self) -> Result<BigInt> {
        Ok(self.norm_trace()?.0)
    }

    /// Exact division: Some(q) iff divisor * q = self exactly in the ring.
    /// Clears the denominator with the full conjugate product, then checks.
    pub fn divide_exact(&self, divisor: &Self) -> Result<Self> {
        self.check_same(divisor)?;
        if divisor.is_zero() {
            return Err(Error::ZeroInput);
        }
        let mut cofactor = CycInt::one(self.conductor);
        for &(c, d) in self.conductor.automorphisms().iter().skip(1) {
            cofactor = cofactor.mul(&divisor.galois2(c, d)?)?;
        }
        let norm = divisor.mul(&cofactor)?;
        let norm = norm
            .as_integer()
            .ok_or_else(|| Error::InvariantViolation("norm is not rational".to_string()))?
            .clone();
        let numer = self.mul(&cofactor)?;
        let mut coeffs = Vec::with_capacity(numer.coeffs.len());
        for a in &numer.coeffs {
            let (q, r) = a.div_rem(&norm);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            coeffs.push(q);
        }
        Ok(CycInt {
            conductor: self.conductor,
            coeffs,
        })
    }

    /// lambda-adic valuation at the ramified prime (1 - zeta) over p; prime
    /// conductor only. Decided by ideal-lattice membership, not approximation.
    pub fn lambda_valuation(&self) -> Result<u32> {
        let p = match self.conductor {
            Conductor::Prime(p) => p,
            Conductor::Composite(..) => {
                return Err(Error::BadConductor(self.conductor.value()))
            }
        };
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        let lambda = Self::lambda(p)?;
        // v is bounded by (p-1) * v_p(norm); loop terminates well before that.
        let mut v = 0u32;
        let mut power = lambda.clone();
        loop {
            let lat = crate::ideal::IdealLattice::principal(&power)?;
            if !lat.contains(self) {
                return Ok(v);
            }
            v += 1;
            power = power.mul(&lambda)?;
        }
    }

    /// True iff self = unit * other with unit in {+-zeta^j}.
    pub fn eq_up_to_root_of_unity(&self, other: &Self) -> Result<bool> {
        self.check_same(other)?;
        let p = match self.conductor {
            Conductor::Prime(p) => p,
            Conductor::Composite(..) => {
                return Err(Error::BadConductor(self.conductor.value()))
            }
        };
        for j in 0..p {
            let t = other.mul(&Self::zeta_pow(self.conductor, j)?)?;
            if *self == t || *self == t.neg() {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Embed Z[zeta_p] into Z[zeta_p, xi_q] (this conductor must be Prime(p)).
    pub fn embed_left(&self, q: u64) -> Result<Self> {
        let p = match self.conductor {
            Conductor::Prime(p) => p,
            _ => return Err(Error::BadConductor(self.conductor.value())),
        };
        let target = Conductor::composite(p, q)?;
        let mut out = CycInt::zero(target);
        for (i, a) in self.coeffs.iter().enumerate() {
            if !a.is_zero() {
                let m = CycInt::root_of_unity(target, i as u64, 0).mul_scalar(a);
                out = out.add(&m)?;
            }
        }
        Ok(out)
    }

    /// Embed Z[xi_q] into Z[zeta_p, xi_q] (this conductor must be Prime(q)).
    pub fn embed_right(&self, p: u64) -> Result<Self> {
        let q = match self.conductor {
            Conductor::Prime(q) => q,
            _ => return Err(Error::BadConductor(self.conductor.value())),
        };
        let target = Conductor::composite(p, q)?;
        let mut out = CycInt::zero(target);
        for (j, a) in self.coeffs.iter().enumerate() {
            if !a.is_zero() {
                let m = CycInt::root_of_unity(target, 0, j as u64).mul_scalar(a);
                out = out.add(&m)?;
            }
        }
        Ok(out)
    }
}
