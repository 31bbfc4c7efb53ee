//! Integral ideals of Z[zeta_m] as full-rank integer lattices in Hermite
//! normal form. Row basis, pivots on the diagonal, pivots positive, entries
//! above a pivot reduced into [0, pivot): the basis matrix is canonical, so
//! ideal equality is matrix equality. Divisibility is containment, the gcd is
//! the lattice sum, the product is the HNF of pairwise row products, and the
//! norm is the determinant.

use alloc::string::ToString;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::cyclotomic::{Conductor, CycInt};
use crate::error::{Error, Result};

/// Extended gcd with g >= 0: g = gcd(a, b), u*a + v*b = g.
fn xgcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (BigInt::one(), BigInt::zero());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let q = &r0 / &r1;
        let r = &r0 - &q * &r1;
        r0 = core::mem::replace(&mut r1, r);
        let s = &s0 - &q * &s1;
        s0 = core::mem::replace(&mut s1, s);
        let t = &t0 - &q * &t1;
        t0 = core::mem::replace(&mut t1, t);
    }
    if r0.is_negative() {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

/// Row-style Hermite normal form accumulator. Rows may be inserted in any
/// order; rank deficiency is allowed (pivot columns need not be contiguous).
#[derive(Clone, Debug)]
pub(crate) struct ZLattice {
    dim: usize,
    /// Sorted by pivot column; each row's leading nonzero entry is positive.
    rows: Vec<Vec<BigInt>>,
}

impl ZLattice {
    pub fn new(dim: usize) -> Self {
        ZLattice {
            dim,
            rows: Vec::new(),
        }
    }

    fn pivot_col(row: &[BigInt]) -> Option<usize> {
        row.iter().position(|x| !x.is_zero())
    }

    pub fn insert(&mut self, mut row: Vec<BigInt>) {
        assert_eq!(row.len(), self.dim);
        loop {
            let Some(col) = Self::pivot_col(&row) else {
                return;
            };
            // Locate an existing row with the same pivot column, if any.
            let pos = self
                .rows
                .binary_search_by(|r| Self::pivot_col(r).unwrap().cmp(&col));
            match pos {
                Ok(idx) => {
                    let (g, u, v) = xgcd(&self.rows[idx][col], &row[col]);
                    let qa = &self.rows[idx][col] / &g;
                    let qb = &row[col] / &g;
                    let mut merged = Vec::with_capacity(self.dim);
                    let mut residual = Vec::with_capacity(self.dim);
                    for (a, b) in self.rows[idx].iter().zip(&row) {
                        merged.push(&u * a + &v * b);
                        residual.push(&qa * b - &qb * a);
                    }
                    self.rows[idx] = merged;
                    // keep every stored row fully reduced at all times:
                    // without this, one insert cascade compounds entry growth
                    // multiplicatively and large dimensions become unusable
                    self.reduce_after_change(idx);
                    row = residual;
                }
                Err(idx) => {
                    if row[col].is_negative() {
                        for x in &mut row {
                            *x = -&*x;
                        }
                    }
                    self.rows.insert(idx, row);
                    self.reduce_after_change(idx);
                    return;
                }
            }
        }
    }

    /// Re-establish the reduction invariant after rows[k] changed: rows[k]
    /// is reduced against every later pivot, and all earlier rows are
    /// reduced at rows[k]'s (possibly shrunken) pivot.
    fn reduce_after_change(&mut self, k: usize) {
        for later in k + 1..self.rows.len() {
            Self::reduce_entry(&mut self.rows, k, later);
        }
        for earlier in 0..k {
            Self::reduce_entry(&mut self.rows, earlier, k);
        }
    }

    /// rows[i] -= floor(rows[i][pivot_k] / pivot) * rows[k], for i < k.
    fn reduce_entry(rows: &mut [Vec<BigInt>], i: usize, k: usize) {
        debug_assert!(i < k);
        let col = Self::pivot_col(&rows[k]).expect("stored rows are nonzero");
        let q = rows[i][col].div_floor(&rows[k][col]);
        if q.is_zero() {
            return;
        }
        let (head, tail) = rows.split_at_mut(k);
        for (a, b) in head[i].iter_mut().zip(&tail[0]) {
            *a -= &q * b;
        }
    }

    /// Reduce entries above each pivot into [0, pivot); finishes the HNF.
    pub fn normalize(&mut self) {
        for k in 0..self.rows.len() {
            let col = Self::pivot_col(&self.rows[k]).unwrap();
            for i in 0..k {
                let q = self.rows[i][col].div_floor(&self.rows[k][col]);
                if q.is_zero() {
                    continue;
                }
                let sub: Vec<BigInt> =
                    self.rows[k].iter().map(|x| x * &q).collect();
                for (a, b) in self.rows[i].iter_mut().zip(sub) {
                    *a -= b;
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<BigInt>> {
        self.rows
    }

    /// Membership: v reduces to zero against the basis, with every pivot
    /// division exact.
    pub fn contains(&self, v: &[BigInt]) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut v = v.to_vec();
        for row in &self.rows {
            let col = Self::pivot_col(row).unwrap();
            if v[..col].iter().any(|x| !x.is_zero()) {
                return false;
            }
            if v[col].is_zero() {
                continue;
            }
            let (q, r) = v[col].div_rem(&row[col]);
            if !r.is_zero() {
                return false;
            }
            for (a, b) in v.iter_mut().zip(row) {
                *a -= &q * b;
            }
        }
        v.iter().all(Zero::is_zero)
    }
}

/// Solve target = sum x_i * rows[i] over Z. Rows are augmented with an
/// identity block so every HNF row carries the certificate of how it was
/// assembled; reducing the target against the pivots then reads the
/// combination off the certificate block.
pub(crate) fn solve_row_combination(
    rows: &[Vec<BigInt>],
    target: &[BigInt],
) -> Option<Vec<BigInt>> {
    let d = target.len();
    let n = rows.len();
    let mut lat = ZLattice::new(d + n);
    for (i, row) in rows.iter().enumerate() {
        assert_eq!(row.len(), d);
        let mut aug = row.clone();
        aug.extend((0..n).map(|j| if j == i { BigInt::one() } else { BigInt::zero() }));
        lat.insert(aug);
    }
    let mut v: Vec<BigInt> = target.to_vec();
    v.extend(core::iter::repeat_with(BigInt::zero).take(n));
    for row in lat.rows() {
        let col = ZLattice::pivot_col(row).unwrap();
        if col >= d {
            // rows pivoting in the certificate block are kernel relations
            break;
        }
        if v[..col].iter().any(|x| !x.is_zero()) {
            return None;
        }
        if v[col].is_zero() {
            continue;
        }
        let (q, r) = v[col].div_rem(&row[col]);
        if !r.is_zero() {
            return None;
        }
        for (a, b) in v.iter_mut().zip(row) {
            *a -= &q * b;
        }
    }
    if v[..d].iter().any(|x| !x.is_zero()) {
        return None;
    }
    // target - sum q_j (row_j | cert_j) = (0 | -x), so negate the tail
    Some(v[d..].iter().map(|x| -x).collect())
}

/// An integral ideal of Z[zeta_m], m the conductor, as a canonical HNF lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealLattice {
    conductor: Conductor,
    /// Square, full rank, upper triangular, canonical.
    basis: Vec<Vec<BigInt>>,
}

impl IdealLattice {
    /// Lattice spanned by all Z[zeta]-multiples of the generators.
    pub fn from_generators(gens: &[CycInt]) -> Result<Self> {
        let nonzero: Vec<&CycInt> = gens.iter().filter(|g| !g.is_zero()).collect();
        let first = *nonzero.first().ok_or(Error::NoGenerators)?;
        let conductor = first.conductor();
        let d = conductor.degree();
        let mut lat = ZLattice::new(d);
        for g in nonzero {
            if g.conductor() != conductor {
                return Err(Error::ConductorMismatch);
            }
            for t in 0..d {
                let m = basis_monomial(conductor, t);
                lat.insert(g.mul(&m)?.coeffs().to_vec());
            }
        }
        lat.normalize();
        if lat.rank() != d {
            return Err(Error::InvariantViolation(
                "ideal lattice is not full rank".to_string(),
            ));
        }
        Ok(IdealLattice {
            conductor,
            basis: lat.into_rows(),
        })
    }

    pub fn principal(g: &CycInt) -> Result<Self> {
        Self::from_generators(core::slice::from_ref(g))
    }

    /// The unit ideal (all of Z[zeta]).
    pub fn unit(conductor: Conductor) -> Self {
        Self::principal(&CycInt::one(conductor)).expect("1 generates the unit ideal")
    }

    pub fn conductor(&self) -> Conductor {
        self.conductor
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    /// Absolute norm = |det| = product of the (positive) diagonal.
    pub fn norm(&self) -> BigInt {
        let mut n = BigInt::one();
        for (i, row) in self.basis.iter().enumerate() {
            n *= &row[i];
        }
        n
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.norm().is_one()
    }

    pub fn contains(&self, x: &CycInt) -> bool {
        if x.conductor() != self.conductor {
            return false;
        }
        self.as_zlattice().contains(x.coeffs())
    }

    fn as_zlattice(&self) -> ZLattice {
        ZLattice {
            dim: self.conductor.degree(),
            rows: self.basis.clone(),
        }
    }

    fn row_elem(&self, i: usize) -> CycInt {
        CycInt::from_coeffs(self.conductor, self.basis[i].clone())
            .expect("basis rows have the right length")
    }

    /// Ideal gcd: the lattice sum.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.conductor != other.conductor {
            return Err(Error::ConductorMismatch);
        }
        let d = self.conductor.degree();
        let mut lat = ZLattice::new(d);
        for row in self.basis.iter().chain(&other.basis) {
            lat.insert(row.clone());
        }
        lat.normalize();
        Ok(IdealLattice {
            conductor: self.conductor,
            basis: lat.into_rows(),
        })
    }

    /// Ideal product: HNF of all pairwise products of basis rows.
    pub fn product(&self, other: &Self) -> Result<Self> {
        if self.conductor != other.conductor {
            return Err(Error::ConductorMismatch);
        }
        let d = self.conductor.degree();
        let mut lat = ZLattice::new(d);
        for i in 0..d {
            let a = self.row_elem(i);
            for j in 0..d {
                lat.insert(a.mul(&other.row_elem(j))?.coeffs().to_vec());
            }
        }
        lat.normalize();
        Ok(IdealLattice {
            conductor: self.conductor,
            basis: lat.into_rows(),
        })
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = Self::unit(self.conductor);
        for _ in 0..e {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// self | other, i.e. other is contained in self.
    pub fn divides(&self, other: &Self) -> bool {
        if self.conductor != other.conductor {
            return false;
        }
        let lat = self.as_zlattice();
        other.basis.iter().all(|row| lat.contains(row))
    }

    /// Apply a Galois automorphism to the whole ideal.
    pub fn galois(&self, c: u64) -> Result<Self> {
        let gens: Result<Vec<CycInt>> =
            (0..self.basis.len()).map(|i| self.row_elem(i).galois(c)).collect();
        Self::from_generators(&gens?)
    }

    pub fn galois2(&self, c: u64, d: u64) -> Result<Self> {
        let gens: Result<Vec<CycInt>> = (0..self.basis.len())
            .map(|i| self.row_elem(i).galois2(c, d))
            .collect();
        Self::from_generators(&gens?)
    }

    /// Exact quotient self / divisor, requiring divisor | self. Fraction-free:
    /// multiply by the conjugate ideals of the divisor, then strip the norm.
    pub fn quotient_exact(&self, divisor: &Self) -> Result<Self> {
        if self.conductor != divisor.conductor {
            return Err(Error::ConductorMismatch);
        }
        if !divisor.divides(self) {
            return Err(Error::InexactDivision);
        }
        let autos: Vec<(u64, u64)> = match self.conductor {
            Conductor::Prime(p) => (2..p).map(|c| (c, 1)).collect(),
            Conductor::Composite(p, q) => {
                let mut v = Vec::new();
                for c in 1..p {
                    for d in 1..q {
                        if (c, d) != (1, 1) {
                            v.push((c, d));
                        }
                    }
                }
                v
            }
        };
        let mut prod = self.clone();
        for (c, d) in autos {
            prod = prod.product(&divisor.galois2(c, d)?)?;
        }
        let n = divisor.norm();
        let basis: Result<Vec<Vec<BigInt>>> = prod
            .basis
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| {
                        let (q, r) = x.div_rem(&n);
                        if r.is_zero() {
                            Ok(q)
                        } else {
                            Err(Error::InexactDivision)
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(IdealLattice {
            conductor: self.conductor,
            basis: basis?,
        })
    }
}

/// The t-th power-basis monomial of the ring.
fn basis_monomial(conductor: Conductor, t: usize) -> CycInt {
    match conductor {
        Conductor::Prime(_) => CycInt::root_of_unity(conductor, t as u64, 0),
        Conductor::Composite(_, q) => {
            let w = (q - 1) as usize;
            CycInt::root_of_unity(conductor, (t / w) as u64, (t % w) as u64)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn c5() -> Conductor {
        Conductor::prime(5).unwrap()
    }

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn cyc(c: Conductor, v: &[i64]) -> CycInt {
        CycInt::from_coeffs(c, v.iter().map(|&n| big(n)).collect()).unwrap()
    }

    // Independent determinant oracle: fraction-free Gaussian elimination on
    // i128 rows (Bareiss), |det| of the span of a full-rank stack.
    fn det_oracle(mut m: Vec<Vec<i128>>) -> i128 {
        let n = m.len();
        let mut denom = 1i128;
        for k in 0..n {
            let pivot_row = (k..n).find(|&r| m[r][k] != 0).expect("full rank");
            m.swap(k, pivot_row);
            for r in k + 1..n {
                for c in k + 1..n {
                    m[r][c] = (m[k][k] * m[r][c] - m[r][k] * m[k][c]) / denom;
                }
                m[r][k] = 0;
            }
            denom = m[k][k];
        }
        m[n - 1][n - 1].abs()
    }

    #[test]
    fn degree_one_prime_has_norm_11() {
        // (11, zeta - 4): 4 has order 5 mod 11, so the quotient is F_11.
        let gens = [
            CycInt::from_int(c5(), big(11)),
            cyc(c5(), &[-4, 1, 0, 0]),
        ];
        let ideal = IdealLattice::from_generators(&gens).unwrap();
        assert_eq!(ideal.norm(), big(11));
        // cross-check against the Bareiss determinant oracle, once on a
        // full-rank generating substack and once on the HNF basis itself
        let stack = vec![
            vec![-4, 1, 0, 0],
            vec![0, -4, 1, 0],
            vec![0, 0, -4, 1],
            vec![11, 0, 0, 0],
        ];
        assert_eq!(det_oracle(stack), 11);
        let hnf: Vec<Vec<i128>> = ideal
            .basis()
            .iter()
            .map(|r| r.iter().map(|x| i128::try_from(x.clone()).unwrap()).collect())
            .collect();
        assert_eq!(det_oracle(hnf), 11);
        // membership
        assert!(ideal.contains(&CycInt::from_int(c5(), big(11))));
        assert!(ideal.contains(&cyc(c5(), &[-4, 1, 0, 0])));
        assert!(!ideal.contains(&CycInt::one(c5())));
    }

    #[test]
    fn lambda_to_the_p_minus_1_is_p() {
        let lambda = CycInt::lambda(5).unwrap();
        let l = IdealLattice::principal(&lambda).unwrap();
        let p5 = IdealLattice::principal(&CycInt::from_int(c5(), big(5))).unwrap();
        assert_eq!(l.pow(4).unwrap(), p5);
        assert_eq!(l.norm(), big(5));
        assert_eq!(p5.norm(), big(625));
    }

    #[test]
    fn conjugate_generators_are_coprime() {
        // norm(1 + 2 zeta) = 11 is prime and its conjugates are distinct
        // primes, so the ideal gcd is the unit ideal.
        let a = IdealLattice::principal(&cyc(c5(), &[1, 2, 0, 0])).unwrap();
        let b = IdealLattice::principal(
            &cyc(c5(), &[1, 2, 0, 0]).galois(2).unwrap(),
        )
        .unwrap();
        let g = a.gcd(&b).unwrap();
        assert!(g.is_unit_ideal());
        assert_eq!(g, IdealLattice::unit(c5()));
    }

    #[test]
    fn hnf_is_canonical_across_generator_sets() {
        // same ideal from different generator sets gives the same basis
        let a = cyc(c5(), &[1, 2, 0, 0]);
        let unit = CycInt::zeta_pow(c5(), 3).unwrap();
        let i1 = IdealLattice::principal(&a).unwrap();
        let i2 = IdealLattice::principal(&a.mul(&unit).unwrap()).unwrap();
        assert_eq!(i1, i2);
        let i3 = IdealLattice::from_generators(&[
            a.clone(),
            a.mul_scalar(&big(7)),
            a.mul(&unit).unwrap().neg(),
        ])
        .unwrap();
        assert_eq!(i1, i3);
    }

    #[test]
    fn product_divisibility_and_quotient() {
        let a = IdealLattice::principal(&cyc(c5(), &[1, 2, 0, 0])).unwrap();
        let l = IdealLattice::principal(&CycInt::lambda(5).unwrap()).unwrap();
        let prod = a.product(&l).unwrap();
        assert_eq!(prod.norm(), big(55));
        assert!(a.divides(&prod));
        assert!(l.divides(&prod));
        assert!(!prod.divides(&a));
        assert_eq!(prod.quotient_exact(&l).unwrap(), a);
        assert_eq!(prod.quotient_exact(&a).unwrap(), l);
        assert_eq!(a.quotient_exact(&l), Err(Error::InexactDivision));
    }

    #[test]
    fn gcd_is_sum_norm_divides_both() {
        let a = IdealLattice::principal(&cyc(c5(), &[1, 2, 0, 0])).unwrap();
        let five = IdealLattice::principal(&CycInt::from_int(c5(), big(5))).unwrap();
        let g = a.gcd(&five).unwrap();
        assert!(g.divides(&a));
        assert!(g.divides(&five));
        assert!(g.is_unit_ideal());
    }

    #[test]
    fn zero_ideal_rejected() {
        assert_eq!(
            IdealLattice::from_generators(&[CycInt::zero(c5())]),
            Err(Error::NoGenerators)
        );
        assert_eq!(
            IdealLattice::from_generators(&[]),
            Err(Error::NoGenerators)
        );
    }

    #[test]
    fn row_combination_solver() {
        let rows = vec![
            vec![big(2), big(0)],
            vec![big(0), big(3)],
            vec![big(1), big(1)],
        ];
        // the rows span all of Z^2; verify solutions by recombination
        for target in [vec![big(5), big(7)], vec![big(1), big(0)], vec![big(0), big(1)]] {
            let x = solve_row_combination(&rows, &target).unwrap();
            assert_eq!(x.len(), 3);
            let mut acc = vec![BigInt::zero(); 2];
            for (xi, row) in x.iter().zip(&rows) {
                for (a, b) in acc.iter_mut().zip(row) {
                    *a += xi * b;
                }
            }
            assert_eq!(acc, target);
        }
        // index-2 sublattice misses odd vectors
        let even = vec![vec![big(2), big(0)], vec![big(0), big(2)]];
        assert_eq!(solve_row_combination(&even, &[big(1), big(1)]), None);
        assert!(solve_row_combination(&even, &[big(4), big(-6)]).is_some());
        // rank-deficient span
        let line = vec![vec![big(1), big(2), big(3)]];
        assert_eq!(
            solve_row_combination(&line, &[big(2), big(4), big(6)]),
            Some(vec![big(2)])
        );
        assert_eq!(solve_row_combination(&line, &[big(1), big(1), big(1)]), None);
    }

    #[test]
    fn galois_action_on_ideals() {
        let a = IdealLattice::principal(&cyc(c5(), &[1, 2, 0, 0])).unwrap();
        let b = a.galois(2).unwrap();
        assert_eq!(b.norm(), big(11));
        assert_ne!(a, b);
        // sigma_2 applied four times is the identity (2^4 = 16 = 1 mod 5)
        let back = b.galois(2).unwrap().galois(2).unwrap().galois(2).unwrap();
        assert_eq!(a, back);
    }
}
