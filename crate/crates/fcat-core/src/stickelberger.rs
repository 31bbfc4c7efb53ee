//! Group-ring algebra over G = Gal(Q(zeta_p)/Q) = {sigma_c : c in (Z/p)^*}.
//!
//! Elements are stored on the sigma_c basis. The classical generating sums
//! are indexed by sigma_c^{-1}; constructors that take such data convert at
//! build time, so phi and the weights below read directly off stored
//! coefficients. The fractional element theta = (1/p) sum c sigma_c^{-1} is
//! never materialized: lattice work is done with p*theta and the elements
//! (a - sigma_a)*theta, whose coordinates are integral.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::cyclotomic::{Conductor, CycInt};
use crate::error::{Error, Result};
use crate::ideal::{IdealLattice, ZLattice};
use crate::intops::{is_prime_u64, mod_inverse};
use num_bigint::BigInt;

/// An element of Z[G], G = (Z/p)^*, on the sigma_c basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupRingElement {
    p: u64,
    /// coeffs[c - 1] is the coefficient of sigma_c, c = 1..p-1.
    coeffs: Vec<i64>,
}

impl GroupRingElement {
    pub fn new(p: u64, coeffs: Vec<i64>) -> Result<Self> {
        if p < 5 || !is_prime_u64(p) {
            return Err(Error::BadGroupRingElement(format!(
                "p = {p} must be a prime >= 5"
            )));
        }
        if coeffs.len() != (p - 1) as usize {
            return Err(Error::BadGroupRingElement(
                "coefficient vector has wrong length".to_string(),
            ));
        }
        Ok(GroupRingElement { p, coeffs })
    }

    /// Build from coefficients n_c of sigma_c^{-1} (classical indexing).
    pub fn from_inverse_basis(p: u64, n: Vec<i64>) -> Result<Self> {
        let mut coeffs = vec![0i64; n.len()];
        if n.len() as u64 != p - 1 {
            return Err(Error::BadGroupRingElement(
                "coefficient vector has wrong length".to_string(),
            ));
        }
        for (idx, &v) in n.iter().enumerate() {
            let c = idx as u64 + 1;
            let inv = mod_inverse(c, p).expect("c is a unit mod p");
            coeffs[(inv - 1) as usize] = v;
        }
        Self::new(p, coeffs)
    }

    pub fn zero(p: u64) -> Result<Self> {
        Self::new(p, vec![0; (p - 1) as usize])
    }

    /// sigma_c as a group-ring element.
    pub fn sigma(p: u64, c: u64) -> Result<Self> {
        let c = c % p;
        if c == 0 {
            return Err(Error::BadGaloisIndex(c));
        }
        let mut coeffs = vec![0i64; (p - 1) as usize];
        coeffs[(c - 1) as usize] = 1;
        Self::new(p, coeffs)
    }

    /// The norm element: sum of all sigma_c.
    pub fn norm_element(p: u64) -> Result<Self> {
        Self::new(p, vec![1; (p - 1) as usize])
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Coefficient of sigma_c.
    pub fn coeff(&self, c: u64) -> i64 {
        self.coeffs[((c - 1) % (self.p - 1)) as usize]
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.p != other.p {
            return Err(Error::BadGroupRingElement(
                "mixed group rings".to_string(),
            ));
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
        Self::new(self.p, coeffs)
    }

    pub fn scale(&self, k: i64) -> Self {
        GroupRingElement {
            p: self.p,
            coeffs: self.coeffs.iter().map(|a| a * k).collect(),
        }
    }

    /// Group-ring product: sigma_a * sigma_b = sigma_(ab mod p).
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let p = self.p;
        let mut coeffs = vec![0i64; (p - 1) as usize];
        for a in 1..p {
            let ca = self.coeff(a);
            if ca == 0 {
                continue;
            }
            for b in 1..p {
                let cb = other.coeff(b);
                if cb == 0 {
                    continue;
                }
                coeffs[((a * b % p) - 1) as usize] += ca * cb;
            }
        }
        Self::new(p, coeffs)
    }

    /// Left translation by sigma_c.
    pub fn translate(&self, c: u64) -> Result<Self> {
        self.mul(&Self::sigma(self.p, c)?)
    }

    /// Composition with complex conjugation sigma_(p-1).
    pub fn conjugate(&self) -> Self {
        self.translate(self.p - 1).expect("p - 1 is a unit")
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().all(|&a| a >= 0)
    }

    /// Fermat-quotient map: sum n_c * c^{-1} mod p over the sigma_c^{-1}
    /// coefficients; on the stored sigma_c basis this is sum m_c * c mod p.
    pub fn phi(&self) -> u64 {
        let p = self.p as i128;
        let mut acc = 0i128;
        for c in 1..self.p {
            acc += self.coeff(c) as i128 * c as i128;
        }
        acc.rem_euclid(p) as u64
    }

    /// (absolute weight, relative weight): sum of |coefficients|, and the
    /// constant s with theta(1 + conj) = s * N when it exists.
    pub fn weights(&self) -> (u64, Option<i64>) {
        let abs = self.coeffs.iter().map(|a| a.unsigned_abs()).sum();
        let p = self.p;
        let s = self.coeff(1) + self.coeff(p - 1);
        for c in 1..p {
            if self.coeff(c) + self.coeff(p - c) != s {
                return (abs, None);
            }
        }
        (abs, Some(s))
    }

    /// Apply the exponent to a ring element: prod_c sigma_c(x)^(m_c).
    /// All coefficients must be nonnegative.
    pub fn apply(&self, x: &CycInt) -> Result<CycInt> {
        let cond = x.conductor();
        match cond {
            Conductor::Prime(p) if p == self.p => {}
            _ => return Err(Error::ConductorMismatch),
        }
        let mut acc = CycInt::one(cond);
        for c in 1..self.p {
            let m = self.coeff(c);
            if m < 0 {
                return Err(Error::NegativeExponent);
            }
            if m > 0 {
                acc = acc.mul(&x.galois(c)?.pow(m as u64)?)?;
            }
        }
        Ok(acc)
    }

    /// Apply the exponent to an ideal. Negative coefficients are handled
    /// fraction-free: the positive and negative parts are applied separately
    /// and the result is the exact ideal quotient.
    pub fn apply_ideal(&self, a: &IdealLattice) -> Result<IdealLattice> {
        match a.conductor() {
            Conductor::Prime(p) if p == self.p => {}
            _ => return Err(Error::ConductorMismatch),
        }
        let mut num = IdealLattice::unit(a.conductor());
        let mut den = IdealLattice::unit(a.conductor());
        for c in 1..self.p {
            let m = self.coeff(c);
            if m == 0 {
                continue;
            }
            let conj = a.galois(c)?;
            let pow = conj.pow(m.unsigned_abs() as u32)?;
            if m > 0 {
                num = num.product(&pow)?;
            } else {
                den = den.product(&pow)?;
            }
        }
        num.quotient_exact(&den)
    }
}

/// The Fueter elements psi_1 .. psi_((p-1)/2) for one prime p.
#[derive(Clone, Debug)]
pub struct FueterBasis {
    p: u64,
    elements: Vec<GroupRingElement>,
}

/// psi_n = sum_c n_c sigma_c^{-1} with n_c = floor((n+1)c/p) - floor(nc/p).
pub fn fueter(p: u64, n: u64) -> Result<GroupRingElement> {
    if n == 0 || n > (p - 1) / 2 {
        return Err(Error::BadGroupRingElement(format!(
            "fueter index {n} out of range 1..=(p-1)/2"
        )));
    }
    let mut inv_coeffs = vec![0i64; (p - 1) as usize];
    for c in 1..p {
        let nc = ((n + 1) * c / p - n * c / p) as i64;
        inv_coeffs[(c - 1) as usize] = nc;
    }
    GroupRingElement::from_inverse_basis(p, inv_coeffs)
}

impl FueterBasis {
    pub fn new(p: u64) -> Result<Self> {
        let elements: Result<Vec<_>> = (1..=(p - 1) / 2).map(|n| fueter(p, n)).collect();
        Ok(FueterBasis {
            p,
            elements: elements?,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn element(&self, n: u64) -> &GroupRingElement {
        &self.elements[(n - 1) as usize]
    }

    pub fn elements(&self) -> &[GroupRingElement] {
        &self.elements
    }
}

/// One sigma_c-translate of a Fueter element inside a J_k decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FueterTerm {
    /// Translate index: the term is sigma_c * psi_n.
    pub c: u64,
    /// Fueter index n.
    pub n: u64,
}

/// A J_k element together with its construction as a sum of Fueter translates.
#[derive(Clone, Debug)]
pub struct JkElement {
    pub theta: GroupRingElement,
    pub k: u64,
    /// theta = sum of sigma_c * psi_n over these terms.
    pub terms: Vec<FueterTerm>,
}

/// Constructive J_k search: a positive element of the Stickelberger ideal
/// with phi = 0 and relative weight 2k. For k = 1 take 2*psi_j whenever some
/// phi(psi_j) = 0 (smallest j), else psi_1 + sigma_c psi_2 with
/// phi(psi_1) + c*phi(psi_2) = 0 mod p (smallest c). Larger k by repetition.
pub fn find_jk(p: u64, k: u64) -> Result<JkElement> {
    if k == 0 {
        return Err(Error::NotJk("k must be >= 1".to_string()));
    }
    let psi1 = fueter(p, 1)?;
    let psi2 = fueter(p, 2)?;
    let (base, base_terms) = if psi1.phi() == 0 {
        (psi1.scale(2), vec![FueterTerm { c: 1, n: 1 }, FueterTerm { c: 1, n: 1 }])
    } else if psi2.phi() == 0 {
        (psi2.scale(2), vec![FueterTerm { c: 1, n: 2 }, FueterTerm { c: 1, n: 2 }])
    } else {
        let a = psi1.phi();
        let b = psi2.phi();
        let binv = mod_inverse(b, p).expect("phi value is a unit mod p");
        // smallest c >= 1 with a + c*b = 0 mod p
        let c = (p - a) % p * binv % p;
        debug_assert!(c >= 1);
        let theta = psi1.add(&psi2.translate(c)?)?;
        (
            theta,
            vec![FueterTerm { c: 1, n: 1 }, FueterTerm { c, n: 2 }],
        )
    };
    let mut theta = base.clone();
    let mut terms = base_terms.clone();
    for _ in 1..k {
        theta = theta.add(&base)?;
        terms.extend_from_slice(&base_terms);
    }
    debug_assert_eq!(theta.phi(), 0);
    debug_assert!(theta.is_positive());
    debug_assert_eq!(theta.weights().1, Some(2 * k as i64));
    Ok(JkElement { theta, k, terms })
}

/// Membership lattice for the Stickelberger ideal I = theta*Z[G] n Z[G]:
/// the Z-span of p*theta and (a - sigma_a)*theta for a = 2..p-1 (all with
/// integral sigma_c coordinates).
#[derive(Clone, Debug)]
pub struct StickelbergerLattice {
    p: u64,
    lattice: ZLattice,
}

impl StickelbergerLattice {
    pub fn new(p: u64) -> Result<Self> {
        if p < 5 || !is_prime_u64(p) {
            return Err(Error::BadGroupRingElement(format!(
                "p = {p} must be a prime >= 5"
            )));
        }
        let d = (p - 1) as usize;
        // p*theta on the sigma_c basis: coefficient of sigma_c is c^{-1} mod p.
        let mut ptheta = vec![0i64; d];
        for c in 1..p {
            ptheta[(c - 1) as usize] = mod_inverse(c, p).expect("unit") as i64;
        }
        let mut lat = ZLattice::new(d);
        lat.insert(ptheta.iter().map(|&x| BigInt::from(x)).collect());
        for a in 2..p {
            // (a - sigma_a)*theta = (a*(p*theta) - sigma_a*(p*theta)) / p
            let mut row = vec![0i64; d];
            for c in 1..p {
                // sigma_a applied to p*theta: coefficient of sigma_c comes
                // from the sigma_(c a^{-1}) coefficient of p*theta.
                let ainv = mod_inverse(a, p).expect("unit");
                let src = c * ainv % p;
                let shifted = ptheta[(src - 1) as usize];
                let val = a as i64 * ptheta[(c - 1) as usize] - shifted;
                debug_assert_eq!(val.rem_euclid(p as i64), 0);
                row[(c - 1) as usize] = val / p as i64;
            }
            lat.insert(row.iter().map(|&x| BigInt::from(x)).collect());
        }
        lat.normalize();
        Ok(StickelbergerLattice { p, lattice: lat })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn contains(&self, theta: &GroupRingElement) -> bool {
        if theta.p() != self.p {
            return false;
        }
        let v: Vec<BigInt> = theta.coeffs().iter().map(|&x| BigInt::from(x)).collect();
        self.lattice.contains(&v)
    }
}

/// One-shot membership test; builds the lattice each call. Reuse
/// `StickelbergerLattice` when testing many elements at the same p.
pub fn in_stickelberger(theta: &GroupRingElement) -> Result<bool> {
    Ok(StickelbergerLattice::new(theta.p())?.contains(theta))
}
