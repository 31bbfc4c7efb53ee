//! Named invariant suites at their documented desk-scale parameters. The
//! `verify` subcommand and the acceptance tests run the same code, so a
//! passing suite means the same thing in both places.

use fcat_core::equation::{euler_gcd, lambda_power, psipol_congruences};
use fcat_core::intops::primes_in;
use fcat_core::jacobi::{beta_hom_check, beta_of, degree_one_prime, iwasawa_check, jacobi_sum};
use fcat_core::stickelberger::{find_jk, fueter};
use fcat_core::{CharacterTable, FueterBasis, GroupRingElement, IdealLattice, StickelbergerLattice};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::report::CheckLine;

pub const SUITE_NAMES: [&str; 6] = ["fueter", "jk", "jacobi", "psipol", "euler", "all"];

/// Accumulates one pass/fail line; keeps the first few counterexamples.
struct Tally {
    name: &'static str,
    cases: u64,
    failures: Vec<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            name,
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn case(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failures.len() < 3 {
            self.failures.push(witness());
        }
    }

    fn line(self) -> CheckLine {
        let pass = self.failures.is_empty() && self.cases > 0;
        CheckLine {
            name: self.name.to_string(),
            pass,
            cases: self.cases,
            detail: if pass {
                None
            } else if self.cases == 0 {
                Some("no cases executed".to_string())
            } else {
                Some(self.failures.join("; "))
            },
        }
    }
}

/// Runs a named suite; None means the name is unknown (a usage error).
pub fn run_suite(name: &str, seed: u64) -> Option<Vec<CheckLine>> {
    match name {
        "fueter" => Some(fueter_suite()),
        "jk" => Some(jk_suite(seed)),
        "jacobi" => Some(jacobi_suite(seed)),
        "psipol" => Some(psipol_suite()),
        "euler" => Some(euler_suite()),
        "all" => {
            let mut lines = fueter_suite();
            lines.extend(jk_suite(seed));
            lines.extend(jacobi_suite(seed));
            lines.extend(psipol_suite());
            lines.extend(euler_suite());
            Some(lines)
        }
        _ => None,
    }
}

/// Fueter elements for every prime 5 <= p <= 199: 0/1 coefficients, pair sums
/// equal to one, psi + conj(psi) = the norm element, relative weight one, and
/// membership in the Stickelberger ideal.
pub fn fueter_suite() -> Vec<CheckLine> {
    let mut zero_one = Tally::new("fueter-coefficients-zero-one");
    let mut pair_sum = Tally::new("fueter-pair-sum-one");
    let mut norm_pair = Tally::new("fueter-norm-pair");
    let mut weight = Tally::new("fueter-relative-weight-one");
    let mut member = Tally::new("fueter-stickelberger-membership");
    for p in primes_in(5, 199) {
        let basis = FueterBasis::new(p).expect("valid prime");
        let lattice = StickelbergerLattice::new(p).expect("valid prime");
        let norm = GroupRingElement::norm_element(p).expect("valid prime");
        for (i, psi) in basis.elements().iter().enumerate() {
            let n = i as u64 + 1;
            zero_one.case(
                psi.coeffs().iter().all(|&m| m == 0 || m == 1),
                || format!("p={p} n={n}: coefficient outside {{0,1}}"),
            );
            pair_sum.case(
                (1..p).all(|c| psi.coeff(c) + psi.coeff(p - c) == 1),
                || format!("p={p} n={n}: a pair sum differs from 1"),
            );
            norm_pair.case(
                psi.add(&psi.conjugate()).expect("same prime") == norm,
                || format!("p={p} n={n}: psi + conj(psi) != norm element"),
            );
            weight.case(psi.weights().1 == Some(1), || {
                format!("p={p} n={n}: relative weight {:?}", psi.weights().1)
            });
            member.case(lattice.contains(psi), || {
                format!("p={p} n={n}: not in the Stickelberger ideal")
            });
        }
    }
    vec![
        zero_one.line(),
        pair_sum.line(),
        norm_pair.line(),
        weight.line(),
        member.line(),
    ]
}

/// J_1 construction for every prime 5 <= p <= 199, plus randomized
/// phi-equivariance phi(sigma_c * theta) = c * phi(theta) mod p.
pub fn jk_suite(seed: u64) -> Vec<CheckLine> {
    let mut shape = Tally::new("jk-shape");
    let mut terms = Tally::new("jk-terms-reconstruct");
    let primes = primes_in(5, 199);
    for &p in &primes {
        let jk = find_jk(p, 1).expect("J_1 exists");
        shape.case(
            jk.theta.phi() == 0 && jk.theta.is_positive() && jk.theta.weights().1 == Some(2),
            || {
                format!(
                    "p={p}: phi={} positive={} weight={:?}",
                    jk.theta.phi(),
                    jk.theta.is_positive(),
                    jk.theta.weights().1
                )
            },
        );
        let mut rebuilt = GroupRingElement::zero(p).expect("valid prime");
        for term in &jk.terms {
            let part = fueter(p, term.n)
                .and_then(|psi| psi.translate(term.c))
                .expect("term indices are valid");
            rebuilt = rebuilt.add(&part).expect("same prime");
        }
        terms.case(rebuilt == jk.theta, || {
            format!("p={p}: term list does not reconstruct theta")
        });
    }
    let mut equivariance = Tally::new("jk-phi-equivariance");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..1000 {
        let p = primes[rng.gen_range(0..primes.len())];
        let coeffs: Vec<i64> = (1..p).map(|_| rng.gen_range(-5i64..=5)).collect();
        let theta = GroupRingElement::new(p, coeffs).expect("valid coefficients");
        let c = rng.gen_range(1..p);
        let translated = theta.translate(c).expect("unit index");
        equivariance.case(
            translated.phi() == c * theta.phi() % p,
            || format!("p={p} c={c}: phi not equivariant"),
        );
    }
    vec![shape.line(), terms.line(), equivariance.line()]
}

/// Jacobi sums for p in {5, 7} and every split prime r < 500: conjugate
/// product r, Iwasawa normalization, beta ideal equality for psi_1, psi_2 and
/// the norm element, and beta multiplicativity on random pairs.
pub fn jacobi_suite(seed: u64) -> Vec<CheckLine> {
    let mut conj_product = Tally::new("jacobi-conjugate-product");
    let mut iwasawa = Tally::new("jacobi-iwasawa-congruence");
    let mut beta_ideal = Tally::new("jacobi-beta-ideal-equality");
    let mut split_primes: Vec<(u64, u64)> = Vec::new();
    for p in [5u64, 7] {
        for r in primes_in(2, 499) {
            if r % p != 1 {
                continue;
            }
            split_primes.push((p, r));
            let table = CharacterTable::new(p, r).expect("split prime");
            for a in 1..p {
                for b in 1..p {
                    if (a + b) % p == 0 {
                        continue;
                    }
                    let j = jacobi_sum(&table, a, b).expect("nondegenerate pair");
                    let prod = j.mul(&j.conj()).expect("same conductor");
                    conj_product.case(
                        prod.as_integer() == Some(&BigInt::from(r)),
                        || format!("p={p} r={r} (a,b)=({a},{b}): J*conj(J) != r"),
                    );
                    iwasawa.case(iwasawa_check(&j).expect("prime conductor"), || {
                        format!("p={p} r={r} (a,b)=({a},{b}): v_lambda(J - 1) < 2")
                    });
                }
            }
            let rprime = degree_one_prime(p, r).expect("split prime");
            let thetas = [
                fueter(p, 1).unwrap(),
                fueter(p, 2).unwrap(),
                GroupRingElement::norm_element(p).unwrap(),
            ];
            for (label, theta) in ["psi1", "psi2", "norm"].iter().zip(&thetas) {
                let beta = beta_of(&rprime, theta).expect("theta is in the ideal");
                let lhs = IdealLattice::principal(&beta.value).expect("nonzero");
                let rhs = theta.apply_ideal(&rprime).expect("integral action");
                beta_ideal.case(lhs == rhs, || {
                    format!("p={p} r={r} theta={label}: (beta) != rprime^theta")
                });
            }
        }
    }
    let mut hom = Tally::new("jacobi-beta-multiplicative");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..100 {
        let (p, r) = split_primes[rng.gen_range(0..split_primes.len())];
        let rprime = degree_one_prime(p, r).expect("split prime");
        let half = (p - 1) / 2;
        let t1 = fueter(p, rng.gen_range(1..=half)).unwrap();
        let t2 = fueter(p, rng.gen_range(1..=half)).unwrap();
        hom.case(
            beta_hom_check(&rprime, &t1, &t2).expect("both in the ideal"),
            || format!("p={p} r={r}: beta(t1 + t2) != beta(t1) beta(t2)"),
        );
    }
    vec![
        conj_product.line(),
        iwasawa.line(),
        beta_ideal.line(),
        hom.line(),
    ]
}

/// Psi_t congruence table over all coprime pairs up to 50 for p in {5, 7}
/// with t the constructed J_1 element, every conjugation index; lambda^t
/// must evaluate to +-p exactly.
pub fn psipol_suite() -> Vec<CheckLine> {
    let mut congruences = Tally::new("psipol-congruences");
    let mut lambda = Tally::new("psipol-lambda-power");
    for p in [5u64, 7] {
        let t = find_jk(p, 1).expect("J_1 exists").theta;
        match lambda_power(&t) {
            Ok((sign, k)) => lambda.case(k == 1 && (sign == 1 || sign == -1), || {
                format!("p={p}: lambda^t = {sign} * p^{k}, expected +-p^1")
            }),
            Err(e) => lambda.case(false, || format!("p={p}: lambda_power failed: {e}")),
        }
        for x in 1i64..=50 {
            for y in -50i64..=50 {
                if y == 0 || x + y == 0 || x.unsigned_abs().gcd(&y.unsigned_abs()) != 1 {
                    continue;
                }
                let (bx, by) = (BigInt::from(x), BigInt::from(y));
                for c in 1..p {
                    congruences.case(
                        psipol_congruences(&bx, &by, &t, c) == Ok(true),
                        || format!("p={p} (x,y)=({x},{y}) c={c}: congruence failed"),
                    );
                }
            }
        }
    }
    vec![congruences.line(), lambda.line()]
}

/// The gcd dichotomy on all coprime pairs up to 200 for p in {3, 5, 7, 11}:
/// gcd(N, x+y) divides p, and equals p exactly when p | x + y (then
/// v_p(N) = 1).
pub fn euler_suite() -> Vec<CheckLine> {
    let mut divides = Tally::new("euler-gcd-divides-p");
    let mut dichotomy = Tally::new("euler-valuation-dichotomy");
    for p in [3u64, 5, 7, 11] {
        let bp = BigInt::from(p);
        for x in 1i64..=200 {
            for y in -200i64..=200 {
                if y == 0 || x + y == 0 || x.unsigned_abs().gcd(&y.unsigned_abs()) != 1 {
                    continue;
                }
                let (bx, by) = (BigInt::from(x), BigInt::from(y));
                let (d, vp) = euler_gcd(&bx, &by, p).expect("valid pair");
                divides.case(d.is_one() || d == bp, || {
                    format!("p={p} (x,y)=({x},{y}): gcd = {d}")
                });
                let p_divides_sum = (&bx + &by).is_multiple_of(&bp);
                dichotomy.case(p_divides_sum == (vp == 1), || {
                    format!("p={p} (x,y)=({x},{y}): v_p(N) = {vp}")
                });
            }
        }
    }
    vec![divides.line(), dichotomy.line()]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_none() {
        assert!(run_suite("bogus", 0).is_none());
        for name in SUITE_NAMES {
            assert!(name == "all" || !name.is_empty());
        }
    }

    #[test]
    fn tally_reports_counterexamples() {
        let mut t = Tally::new("demo");
        t.case(true, || unreachable!());
        t.case(false, || "w1".to_string());
        t.case(false, || "w2".to_string());
        let line = t.line();
        assert!(!line.pass);
        assert_eq!(line.cases, 3);
        assert_eq!(line.detail.as_deref(), Some("w1; w2"));
        let empty = Tally::new("empty").line();
        assert!(!empty.pass);
    }
}
