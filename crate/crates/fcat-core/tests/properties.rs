//! Randomized algebraic-law checks. Proptest drives the ring/lattice laws
//! with shrinking; a fixed-seed ChaCha sweep covers the integer-level
//! invariants where shrinking adds nothing.

use fcat_core::equation::{
    euler_gcd, evaluate_raw, parity_fast_path, power_sum_quotient, split_criterion,
};
use fcat_core::{Conductor, CycInt, EisensteinInt, Error, GroupRingElement, IdealLattice};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const PRIMES: [u64; 4] = [5, 7, 11, 13];

fn cyc(p: u64, coeffs: &[i64]) -> CycInt {
    let cond = Conductor::prime(p).unwrap();
    CycInt::from_coeffs(cond, coeffs.iter().map(|&a| BigInt::from(a)).collect()).unwrap()
}

/// Three random ring elements over one of the supported conductors.
fn cyc_triple() -> impl Strategy<Value = (u64, CycInt, CycInt, CycInt)> {
    proptest::sample::select(&PRIMES[..]).prop_flat_map(|p| {
        let d = (p - 1) as usize;
        let coeffs = || proptest::collection::vec(-9i64..=9, d);
        (Just(p), coeffs(), coeffs(), coeffs())
            .prop_map(|(p, a, b, c)| (p, cyc(p, &a), cyc(p, &b), cyc(p, &c)))
    })
}

/// Two random group-ring elements with small coefficients.
fn group_ring_pair() -> impl Strategy<Value = (u64, GroupRingElement, GroupRingElement)> {
    proptest::sample::select(&PRIMES[..]).prop_flat_map(|p| {
        let d = (p - 1) as usize;
        let coeffs = || proptest::collection::vec(-4i64..=4, d);
        (Just(p), coeffs(), coeffs()).prop_map(|(p, a, b)| {
            (
                p,
                GroupRingElement::new(p, a).unwrap(),
                GroupRingElement::new(p, b).unwrap(),
            )
        })
    })
}

/// Group-ring exponents together with ring elements over the same prime.
fn exponents_with_elements(
) -> impl Strategy<Value = (u64, GroupRingElement, GroupRingElement, CycInt, CycInt)> {
    proptest::sample::select(&PRIMES[..]).prop_flat_map(|p| {
        let d = (p - 1) as usize;
        let small = || proptest::collection::vec(0i64..=2, d);
        let wide = || proptest::collection::vec(-5i64..=5, d);
        (Just(p), small(), small(), wide(), wide()).prop_map(|(p, s, t, a, b)| {
            (
                p,
                GroupRingElement::new(p, s).unwrap(),
                GroupRingElement::new(p, t).unwrap(),
                cyc(p, &a),
                cyc(p, &b),
            )
        })
    })
}

proptest! {
    #[test]
    fn ring_laws((p, a, b, c) in cyc_triple()) {
        let cond = Conductor::prime(p).unwrap();
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(
            a.add(&b).unwrap().add(&c).unwrap(),
            a.add(&b.add(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(
            a.mul(&b).unwrap().mul(&c).unwrap(),
            a.mul(&b.mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(a.sub(&a).unwrap(), CycInt::zero(cond));
        prop_assert_eq!(a.mul(&CycInt::one(cond)).unwrap(), a.clone());
        prop_assert_eq!(a.neg().add(&a).unwrap(), CycInt::zero(cond));
    }

    #[test]
    fn galois_is_a_ring_automorphism((p, a, b, _) in cyc_triple(), seed in any::<u64>()) {
        let c = 1 + seed % (p - 1);
        let d = 1 + seed.rotate_left(17) % (p - 1);
        prop_assert_eq!(
            a.add(&b).unwrap().galois(c).unwrap(),
            a.galois(c).unwrap().add(&b.galois(c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.mul(&b).unwrap().galois(c).unwrap(),
            a.galois(c).unwrap().mul(&b.galois(c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.galois(c).unwrap().galois(d).unwrap(),
            a.galois(c * d % p).unwrap()
        );
        prop_assert_eq!(a.galois(1).unwrap(), a.clone());
        // conjugation is the c = p-1 automorphism, and an involution
        prop_assert_eq!(a.conj(), a.galois(p - 1).unwrap());
        prop_assert_eq!(a.conj().conj(), a.clone());
    }

    #[test]
    fn norm_is_multiplicative_and_galois_invariant((p, a, b, _) in cyc_triple(), seed in any::<u64>()) {
        let c = 1 + seed % (p - 1);
        let na = a.norm().unwrap();
        prop_assert_eq!(a.mul(&b).unwrap().norm().unwrap(), &na * b.norm().unwrap());
        prop_assert_eq!(a.galois(c).unwrap().norm().unwrap(), na.clone());
        // the norm and trace of a rational integer n are n^(p-1) and (p-1)n
        let n = BigInt::from(seed % 50);
        let scalar = CycInt::from_int(a.conductor(), n.clone());
        let (norm, trace) = scalar.norm_trace().unwrap();
        prop_assert_eq!(norm, n.pow(p as u32 - 1));
        prop_assert_eq!(trace, n * BigInt::from(p - 1));
    }

    #[test]
    fn exact_division_inverts_multiplication((_, a, b, _) in cyc_triple()) {
        prop_assume!(!b.is_zero());
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(ab.divide_exact(&b).unwrap(), a);
    }

    #[test]
    fn principal_ideals_ignore_unit_factors((p, a, _, _) in cyc_triple(), k in 0u64..12) {
        prop_assume!(!a.is_zero());
        let ia = IdealLattice::principal(&a).unwrap();
        prop_assert_eq!(ia.norm(), a.norm().unwrap().abs());
        prop_assert_eq!(IdealLattice::principal(&a.neg()).unwrap(), ia.clone());
        let zeta_k = CycInt::zeta_pow(a.conductor(), k % p).unwrap();
        let shifted = a.mul(&zeta_k).unwrap();
        prop_assert_eq!(IdealLattice::principal(&shifted).unwrap(), ia.clone());
        prop_assert!(ia.contains(&a));
    }

    #[test]
    fn group_ring_is_a_commutative_ring((p, s, t) in group_ring_pair()) {
        prop_assert_eq!(s.mul(&t).unwrap(), t.mul(&s).unwrap());
        prop_assert_eq!(s.add(&t).unwrap(), t.add(&s).unwrap());
        prop_assert_eq!(s.conjugate().conjugate(), s.clone());
        // conjugation is translation by sigma_(p-1), so it slides through
        // products one factor at a time rather than distributing over both
        prop_assert_eq!(
            s.mul(&t).unwrap().conjugate(),
            s.conjugate().mul(&t).unwrap()
        );
        prop_assert_eq!(s.conjugate().phi(), s.phi() * (p - 1) % p);
        // the Fermat-quotient map is a ring homomorphism to Z/p
        prop_assert_eq!(s.add(&t).unwrap().phi(), (s.phi() + t.phi()) % p);
        prop_assert_eq!(s.mul(&t).unwrap().phi(), s.phi() * t.phi() % p);
        // relative weight is additive whenever both sides have one
        if let ((_, Some(ws)), (_, Some(wt))) = (s.weights(), t.weights()) {
            let (_, sum) = s.add(&t).unwrap().weights();
            prop_assert_eq!(sum, Some(ws + wt));
        }
    }

    #[test]
    fn eisenstein_norm_and_conjugation(
        (a, b, c, d) in (-50i64..=50, -50i64..=50, -50i64..=50, -50i64..=50),
        e in 1u64..6,
    ) {
        let x = EisensteinInt::new(a, b);
        let y = EisensteinInt::new(c, d);
        let xy = x.mul(&y);
        prop_assert_eq!(xy.norm(), x.norm() * y.norm());
        prop_assert_eq!(xy.conj(), x.conj().mul(&y.conj()));
        prop_assert_eq!(x.pow(e).norm(), x.norm().pow(e as u32));
        // x * conj(x) is the rational integer N(x)
        let n = x.mul(&x.conj());
        prop_assert_eq!(n.a(), &x.norm());
        prop_assert!(n.b().is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ideal_product_quotient_and_gcd((_, a, b, _) in cyc_triple()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let ia = IdealLattice::principal(&a).unwrap();
        let ib = IdealLattice::principal(&b).unwrap();
        let prod = ia.product(&ib).unwrap();
        prop_assert_eq!(prod.norm(), ia.norm() * ib.norm());
        prop_assert!(ia.divides(&prod));
        prop_assert!(prod.contains(&a.mul(&b).unwrap()));
        prop_assert_eq!(prod.quotient_exact(&ib).unwrap(), ia.clone());
        let g = ia.gcd(&ib).unwrap();
        prop_assert!(g.divides(&ia));
        prop_assert!(g.divides(&ib));
        prop_assert!(ia.norm().is_multiple_of(&g.norm()));
    }

    #[test]
    fn exponents_act_multiplicatively((p, s, t, a, b) in exponents_with_elements()) {
        let _ = p;
        prop_assume!(!a.is_zero() && !b.is_zero());
        // theta(xy) = theta(x) theta(y) and (s + t)(x) = s(x) t(x)
        prop_assert_eq!(
            s.apply(&a.mul(&b).unwrap()).unwrap(),
            s.apply(&a).unwrap().mul(&s.apply(&b).unwrap()).unwrap()
        );
        prop_assert_eq!(
            s.add(&t).unwrap().apply(&a).unwrap(),
            s.apply(&a).unwrap().mul(&t.apply(&a).unwrap()).unwrap()
        );
        // on ideals the action matches the principal ideal of the element image
        let ia = IdealLattice::principal(&a).unwrap();
        prop_assert_eq!(
            s.apply_ideal(&ia).unwrap(),
            IdealLattice::principal(&s.apply(&a).unwrap()).unwrap()
        );
    }
}

/// Fixed-seed sweep of the integer-level facts: the Euler gcd dichotomy and
/// the equivalence of the parity fast path with the full splitting check.
#[test]
fn seeded_euler_and_splitting_sweep() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x00FC_A7A1);
    let mut tested = 0u32;
    while tested < 400 {
        let x: i64 = rng.gen_range(-1_000_000..=1_000_000);
        let y: i64 = rng.gen_range(-1_000_000..=1_000_000);
        if x == 0 || y == 0 || x + y == 0 || x.unsigned_abs().gcd(&y.unsigned_abs()) != 1 {
            continue;
        }
        tested += 1;
        let (bx, by) = (BigInt::from(x), BigInt::from(y));
        for p in [3u64, 5, 7, 11, 13] {
            let (d, vp) = euler_gcd(&bx, &by, p).unwrap();
            assert!(d.is_one() || d == BigInt::from(p), "gcd divides p");
            let p_divides_sum = (&bx + &by).is_multiple_of(&BigInt::from(p));
            assert_eq!(p_divides_sum, vp == 1, "p | x + y exactly when v_p(N) = 1");
            let n = power_sum_quotient(&bx, &by, p).unwrap();
            assert!(n.is_multiple_of(&d));
        }
        for q in [3u64, 5, 7, 11] {
            let evidence = split_criterion(x, y, q);
            // 2 is never stripped as a q-part and is the smallest prime, so
            // the fast path fires exactly when the full check blames 2
            assert_eq!(
                parity_fast_path(x, y, q),
                evidence.offending == Some(2),
                "fast path must agree with the factored criterion at ({x}, {y}, {q})"
            );
        }
    }
}

/// The verdict must not depend on which orbit representative of
/// {(x, y), (y, x), (-x, -y), (-y, -x)} is handed in.
#[test]
fn seeded_orbit_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0B17);
    let pairs = [(5u64, 3u64), (5, 7), (7, 3), (3, 5)];
    let mut tested = 0u32;
    while tested < 200 {
        let x: i64 = rng.gen_range(-300..=300);
        let y: i64 = rng.gen_range(-300..=300);
        if x == 0 || y == 0 || x.abs() == y.abs() || x.unsigned_abs().gcd(&y.unsigned_abs()) != 1 {
            continue;
        }
        tested += 1;
        let (p, q) = pairs[(tested % 4) as usize];
        let base = evaluate_raw(x, y, p, q, p == 3).unwrap();
        for (u, v) in [(y, x), (-x, -y), (-y, -x)] {
            assert_eq!(evaluate_raw(u, v, p, q, p == 3).unwrap(), base);
        }
    }
}

/// Zero divisors are rejected, not mis-divided.
#[test]
fn division_by_zero_is_an_error() {
    let a = cyc(5, &[1, 2, 3, 4]);
    let z = CycInt::zero(a.conductor());
    assert_eq!(a.divide_exact(&z), Err(Error::ZeroInput));
}
