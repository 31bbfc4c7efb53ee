//! Jacobi sums over F_r for split primes r = 1 mod p, their Stickelberger
//! factorization into Galois conjugates of a degree-1 prime, and the
//! normalized generator map theta -> beta(theta) with beta(theta) generating
//! r_prime^theta.
//!
//! Sign convention: the classical sum J(chi^a, chi^b) = sum chi^a(u)
//! chi^b(1-u) is congruent to -1 mod lambda^2; the normalized value flips the
//! sign exactly when needed so that value = 1 mod lambda^2 holds. That
//! congruence is taken as the definition of the normalization, which pins the
//! generator uniquely among all +-zeta^j multiples.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;

use crate::cyclotomic::{Conductor, CycInt};
use crate::error::{Error, Result};
use crate::ideal::{solve_row_combination, IdealLattice};
use crate::intops::{is_prime_u64, mod_pow_u64, smallest_primitive_root};
use crate::stickelberger::{GroupRingElement, StickelbergerLattice};

/// Discrete-log table for F_r^* reduced mod p, with chi(g) = zeta for the
/// smallest primitive root g.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    p: u64,
    r: u64,
    g: u64,
    /// dlog[u] = t mod p where u = g^t, for u = 1..r-1; dlog[0] unused.
    dlog: Vec<u32>,
}

impl CharacterTable {
    pub fn new(p: u64, r: u64) -> Result<Self> {
        if p < 3 || !is_prime_u64(p) {
            return Err(Error::BadConductor(p));
        }
        if !is_prime_u64(r) || r % p != 1 {
            return Err(Error::NotSplitPrime(r));
        }
        let g = smallest_primitive_root(r);
        let mut dlog = vec![0u32; r as usize];
        let mut x = 1u64;
        for t in 0..r - 1 {
            dlog[x as usize] = (t % p) as u32;
            x = x * g % r;
        }
        Ok(CharacterTable { p, r, g, dlog })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn generator(&self) -> u64 {
        self.g
    }

    /// Exponent e with chi^a(u) = zeta^e, for u nonzero mod r.
    pub fn chi_exp(&self, a: u64, u: u64) -> u64 {
        a * self.dlog[(u % self.r) as usize] as u64 % self.p
    }
}

/// The normalized Jacobi sum for the character pair (chi^a, chi^b).
/// Errors on degenerate pairs: a, b, or a + b vanishing mod p.
pub fn jacobi_sum(table: &CharacterTable, a: u64, b: u64) -> Result<CycInt> {
    let p = table.p;
    if a.is_multiple_of(p) || b.is_multiple_of(p) || (a + b).is_multiple_of(p) {
        return Err(Error::DegenerateCharacterPair(a, b));
    }
    let r = table.r;
    let mut counts = vec![0i64; p as usize];
    for u in 2..r {
        // u runs over F_r minus {0, 1}; 1 - u = r + 1 - u is nonzero
        let e = (table.chi_exp(a, u) + table.chi_exp(b, r + 1 - u)) % p;
        counts[e as usize] += 1;
    }
    let cond = Conductor::prime(p)?;
    let top = counts[(p - 1) as usize];
    let coeffs: Vec<BigInt> = counts[..(p - 1) as usize]
        .iter()
        .map(|&c| BigInt::from(c - top))
        .collect();
    let classical = CycInt::from_coeffs(cond, coeffs)?;
    normalize_sign(&classical)
}

/// Flip the sign exactly when needed so the Iwasawa congruence holds.
fn normalize_sign(j: &CycInt) -> Result<CycInt> {
    if iwasawa_check(j)? {
        return Ok(j.clone());
    }
    let neg = j.neg();
    if iwasawa_check(&neg)? {
        return Ok(neg);
    }
    Err(Error::InvariantViolation(
        "neither sign of the Jacobi sum satisfies the Iwasawa congruence".to_string(),
    ))
}

/// v_lambda(x - 1) >= 2, decided by lattice membership in (lambda)^2.
pub fn iwasawa_check(x: &CycInt) -> Result<bool> {
    let p = match x.conductor() {
        Conductor::Prime(p) => p,
        Conductor::Composite(..) => return Err(Error::BadConductor(x.conductor().value())),
    };
    let diff = x.sub(&CycInt::one(x.conductor()))?;
    if diff.is_zero() {
        return Ok(true);
    }
    let lambda_sq = CycInt::lambda(p)?.pow(2)?;
    Ok(IdealLattice::principal(&lambda_sq)?.contains(&diff))
}

/// The degree-1 prime (r, zeta - u) above r with the smallest u of
/// multiplicative order p mod r.
pub fn degree_one_prime(p: u64, r: u64) -> Result<IdealLattice> {
    if !is_prime_u64(r) || r % p != 1 {
        return Err(Error::NotSplitPrime(r));
    }
    let cond = Conductor::prime(p)?;
    let u = (2..r)
        .find(|&u| mod_pow_u64(u, p, r) == 1)
        .ok_or(Error::NotSplitPrime(r))?;
    let gens = [
        CycInt::from_int(cond, BigInt::from(r)),
        CycInt::zeta_pow(cond, 1)?.sub(&CycInt::from_int(cond, BigInt::from(u)))?,
    ];
    IdealLattice::from_generators(&gens)
}

/// Validate that the ideal is a degree-1 prime over r = 1 mod p and return
/// (p, r).
fn split_prime_data(rprime: &IdealLattice) -> Result<(u64, u64)> {
    let p = match rprime.conductor() {
        Conductor::Prime(p) => p,
        Conductor::Composite(..) => {
            return Err(Error::BadConductor(rprime.conductor().value()))
        }
    };
    let n = rprime.norm();
    let r = u64::try_from(n).map_err(|_| Error::NotDegreeOnePrime)?;
    if !is_prime_u64(r) || r % p != 1 {
        return Err(Error::NotDegreeOnePrime);
    }
    Ok((p, r))
}

/// Empirical Stickelberger exponent of gamma relative to the conjugates of
/// rprime: e_c = 1 iff sigma_c(rprime) contains gamma. The product identity
/// (gamma) = prod_c sigma_c(rprime)^(e_c) is re-verified by HNF equality.
pub fn stickelberger_exponent(
    rprime: &IdealLattice,
    gamma: &CycInt,
) -> Result<GroupRingElement> {
    let (p, _) = split_prime_data(rprime)?;
    let mut coeffs = vec![0i64; (p - 1) as usize];
    let mut product = IdealLattice::unit(rprime.conductor());
    for c in 1..p {
        let conj = rprime.galois(c)?;
        if conj.contains(gamma) {
            coeffs[(c - 1) as usize] = 1;
            product = product.product(&conj)?;
        }
    }
    if product != IdealLattice::principal(gamma)? {
        return Err(Error::InvariantViolation(
            "containment bitmap does not factor (gamma)".to_string(),
        ));
    }
    GroupRingElement::new(p, coeffs)
}

/// A normalized generator of rprime^theta.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiNumber {
    pub value: CycInt,
    pub theta: GroupRingElement,
    pub prime: IdealLattice,
    /// r, the rational prime under `prime`.
    pub r: u64,
    /// Relative weight of theta; value * conj(value) = r^varsigma.
    pub varsigma: u64,
}

/// Constructive beta map: composes normalized Jacobi sums along an integral
/// decomposition of theta over the empirically factored atoms (all Jacobi-sum
/// exponents plus the norm element). The decomposition is found by lattice
/// solving and is not unique; the postconditions (ideal equality, conjugate
/// norm, Iwasawa congruence) make the choice irrelevant, and the Iwasawa
/// congruence pins the value itself uniquely.
pub fn beta_of(rprime: &IdealLattice, theta: &GroupRingElement) -> Result<JacobiNumber> {
    let (p, r) = split_prime_data(rprime)?;
    if theta.p() != p {
        return Err(Error::BadGroupRingElement("wrong prime".to_string()));
    }
    if !theta.is_positive() {
        return Err(Error::NegativeExponent);
    }
    if !StickelbergerLattice::new(p)?.contains(theta) {
        return Err(Error::NotInStickelberger);
    }
    let varsigma = theta
        .weights()
        .1
        .ok_or(Error::NotInStickelberger)? as u64;

    let table = CharacterTable::new(p, r)?;
    let mut atom_exponents: Vec<Vec<BigInt>> = Vec::new();
    let mut atom_values: Vec<CycInt> = Vec::new();
    for a in 1..p {
        for b in a..p {
            if (a + b) % p == 0 {
                continue;
            }
            let gamma = jacobi_sum(&table, a, b)?;
            let exp = stickelberger_exponent(rprime, &gamma)?;
            atom_exponents.push(exp.coeffs().iter().map(|&x| BigInt::from(x)).collect());
            atom_values.push(gamma);
        }
    }
    // the rational prime itself realizes the norm element
    let cond = rprime.conductor();
    atom_exponents.push(
        GroupRingElement::norm_element(p)?
            .coeffs()
            .iter()
            .map(|&x| BigInt::from(x))
            .collect(),
    );
    atom_values.push(CycInt::from_int(cond, BigInt::from(r)));

    let target: Vec<BigInt> = theta.coeffs().iter().map(|&x| BigInt::from(x)).collect();
    let combo =
        solve_row_combination(&atom_exponents, &target).ok_or(Error::DecompositionFailed)?;

    let mut numer = CycInt::one(cond);
    let mut denom = CycInt::one(cond);
    for (x, gamma) in combo.iter().zip(&atom_values) {
        let e = i64::try_from(x.clone()).map_err(|_| Error::DecompositionFailed)?;
        if e == 0 {
            continue;
        }
        let pow = gamma.pow(e.unsigned_abs())?;
        if e > 0 {
            numer = numer.mul(&pow)?;
        } else {
            denom = denom.mul(&pow)?;
        }
    }
    let value = numer.divide_exact(&denom)?;

    // postconditions, each re-verified exactly
    if IdealLattice::principal(&value)? != theta.apply_ideal(rprime)? {
        return Err(Error::InvariantViolation(
            "beta does not generate rprime^theta".to_string(),
        ));
    }
    let norm_rel = value.mul(&value.conj())?;
    let want = BigInt::from(r).pow(varsigma as u32);
    if norm_rel.as_integer() != Some(&want) {
        return Err(Error::InvariantViolation(
            "beta * conj(beta) != r^varsigma".to_string(),
        ));
    }
    if !iwasawa_check(&value)? {
        return Err(Error::InvariantViolation(
            "beta is not Iwasawa-normalized".to_string(),
        ));
    }
    Ok(JacobiNumber {
        value,
        theta: theta.clone(),
        prime: rprime.clone(),
        r,
        varsigma,
    })
}

/// Multiplicativity: beta(theta1 + theta2) = beta(theta1) * beta(theta2),
/// checked as exact element equality.
pub fn beta_hom_check(
    rprime: &IdealLattice,
    theta1: &GroupRingElement,
    theta2: &GroupRingElement,
) -> Result<bool> {
    let b1 = beta_of(rprime, theta1)?;
    let b2 = beta_of(rprime, theta2)?;
    let b12 = beta_of(rprime, &theta1.add(theta2)?)?;
    Ok(b12.value == b1.value.mul(&b2.value)?)
}
