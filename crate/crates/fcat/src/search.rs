//! Exhaustive coprime-pair search. Work is split into static x-stripes
//! (worker w owns x = w mod W) so the merged result is identical for every
//! worker count; only read-only parameters are shared.

use std::thread;

use fcat_core::equation::{evaluate_raw, Outcome};
use fcat_core::intops::is_prime_u64;
use fcat_core::Error;
use num_bigint::BigInt;
use num_integer::Integer;

use crate::report::{
    outcome_name, HistogramEntry, SearchReport, SolutionRecord, ALL_OUTCOMES, SCHEMA_VERSION,
};

#[derive(Clone, Copy, Debug)]
pub struct SearchParams {
    pub p: u64,
    pub q: u64,
    pub bound: u64,
    pub workers: usize,
    /// Positive-control mode: admit p = 3, where exact solutions exist.
    pub control: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub x: i64,
    pub y: i64,
    pub z: BigInt,
    pub e: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchSummary {
    pub pairs: u64,
    /// Verdict histogram indexed parallel to `report::ALL_OUTCOMES`.
    pub counts: [u64; 6],
    /// Exact solutions in ascending (x, y) order.
    pub solutions: Vec<Solution>,
}

fn outcome_slot(outcome: Outcome) -> usize {
    ALL_OUTCOMES
        .iter()
        .position(|&o| o == outcome)
        .expect("histogram covers every outcome")
}

fn validate(params: &SearchParams) -> Result<(), Error> {
    let (p, q) = (params.p, params.q);
    if p == q || !is_prime_u64(p) || !is_prime_u64(q) || p == 2 || q == 2 {
        return Err(Error::BadPrimePair(p, q));
    }
    if p == 3 && !params.control {
        return Err(Error::BadPrimePair(p, q));
    }
    Ok(())
}

/// One stripe: all coprime pairs x > |y| >= 1 with x = stripe mod workers.
fn run_stripe(params: &SearchParams, stripe: u64) -> Result<SearchSummary, Error> {
    let mut summary = SearchSummary {
        pairs: 0,
        counts: [0; 6],
        solutions: Vec::new(),
    };
    let width = params.workers as u64;
    let mut x = (2..).find(|&x| x % width == stripe).expect("stripe start");
    while x <= params.bound {
        for y in 1..x {
            if x.gcd(&y) != 1 {
                continue;
            }
            for sy in [y as i64, -(y as i64)] {
                let verdict = evaluate_raw(x as i64, sy, params.p, params.q, params.control)?;
                summary.pairs += 1;
                summary.counts[outcome_slot(verdict.outcome)] += 1;
                if verdict.outcome == Outcome::SolutionFound {
                    summary.solutions.push(Solution {
                        x: x as i64,
                        y: sy,
                        z: verdict.z.expect("solution carries its root"),
                        e: verdict.e,
                    });
                }
            }
        }
        x += width;
    }
    Ok(summary)
}

pub fn run(params: &SearchParams) -> Result<SearchSummary, Error> {
    validate(params)?;
    let mut params = *params;
    params.workers = params.workers.max(1);
    let stripes: Vec<Result<SearchSummary, Error>> = thread::scope(|scope| {
        let handles: Vec<_> = (0..params.workers as u64)
            .map(|stripe| {
                let params = &params;
                scope.spawn(move || {
                    let out = run_stripe(params, stripe);
                    if let Ok(s) = &out {
                        eprintln!(
                            "search p={} q={}: stripe {}/{} done, {} pairs",
                            params.p, params.q, stripe, params.workers, s.pairs
                        );
                    }
                    out
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("search worker panicked"))
            .collect()
    });
    let mut merged = SearchSummary {
        pairs: 0,
        counts: [0; 6],
        solutions: Vec::new(),
    };
    for stripe in stripes {
        let stripe = stripe?;
        merged.pairs += stripe.pairs;
        for (acc, c) in merged.counts.iter_mut().zip(stripe.counts) {
            *acc += c;
        }
        merged.solutions.extend(stripe.solutions);
    }
    merged.solutions.sort_by_key(|s| (s.x, s.y));
    Ok(merged)
}

pub fn to_report(params: &SearchParams, summary: &SearchSummary, elapsed_ms: u64) -> SearchReport {
    SearchReport {
        schema: SCHEMA_VERSION,
        kind: "search",
        p: params.p,
        q: params.q,
        bound: params.bound,
        control: params.control,
        pairs: summary.pairs,
        histogram: ALL_OUTCOMES
            .iter()
            .zip(summary.counts)
            .map(|(&o, count)| HistogramEntry {
                outcome: outcome_name(o),
                count,
            })
            .collect(),
        solutions: summary
            .solutions
            .iter()
            .map(|s| SolutionRecord {
                x: s.x,
                y: s.y,
                z: s.z.to_string(),
                e: s.e,
            })
            .collect(),
        elapsed_ms,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(p: u64, q: u64, bound: u64, workers: usize, control: bool) -> SearchParams {
        SearchParams {
            p,
            q,
            bound,
            workers,
            control,
        }
    }

    #[test]
    fn tiny_bound_all_not_qth_power() {
        // x=2: y=+-1; x=3: y=+-1, +-2 — six pairs, none a cube
        let s = run(&params(5, 3, 3, 1, false)).unwrap();
        assert_eq!(s.pairs, 6);
        assert_eq!(s.counts[outcome_slot(Outcome::NotAQthPower)], 6);
        assert!(s.solutions.is_empty());
    }

    #[test]
    fn control_family_is_found() {
        let s = run(&params(3, 5, 200, 4, true)).unwrap();
        let hit = s
            .solutions
            .iter()
            .find(|sol| sol.x == 149 && sol.y == 62)
            .expect("(149, 62) is a positive-control solution");
        assert_eq!(hit.z, BigInt::from(7));
        assert_eq!(hit.e, 0);
    }

    #[test]
    fn worker_count_does_not_change_the_result() {
        let one = run(&params(5, 3, 60, 1, false)).unwrap();
        let many = run(&params(5, 3, 60, 7, false)).unwrap();
        assert_eq!(one, many);
    }

    #[test]
    fn bad_prime_pairs_are_rejected() {
        assert_eq!(
            run(&params(5, 5, 10, 1, false)),
            Err(Error::BadPrimePair(5, 5))
        );
        assert_eq!(
            run(&params(3, 5, 10, 1, false)),
            Err(Error::BadPrimePair(3, 5))
        );
        assert_eq!(
            run(&params(9, 5, 10, 1, false)),
            Err(Error::BadPrimePair(9, 5))
        );
    }
}
