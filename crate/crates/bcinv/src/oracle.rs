//! Brute-force reference computations on finite rings, plus the tuple-search
//! engine used for law sweeps.
//!
//! Everything here works straight from definitions by exhaustive enumeration
//! — no linear algebra, no shortcuts — so results can be compared against
//! the structured routes in [`crate::inverse`]. Size caps make runaway
//! enumeration an error rather than a long wait.

use crate::error::Error;
use crate::ring::{RingDescriptor, RingElement};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::{HashMap, HashSet};

/// Default bound on the ring size for per-query enumeration. Overridable per
/// call site (the CLI reads `BCINV_MAX_ENUM`), but never beyond [`HARD_CAP`].
pub const DEFAULT_RING_CAP: u128 = 4096;

/// Absolute bound on enumeration work: ring size for single queries, total
/// tuple evaluations for searches.
pub const HARD_CAP: u128 = 100_000_000;

/// What a brute-force query found: every witness, in canonical ring order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OracleReport {
    pub query: String,
    pub witnesses: Vec<RingElement>,
    pub unique: bool,
    pub enumerated_count: u64,
}

fn finite_elements(ring: RingDescriptor, cap: u128) -> Result<Vec<RingElement>, Error> {
    let size = ring
        .size()
        .ok_or_else(|| Error::NotFinite(ring.to_string()))?;
    let cap = cap.min(HARD_CAP);
    if size > cap {
        return Err(Error::EnumerationTooLarge { size, cap });
    }
    Ok(ring.enumerate_elements()?.collect())
}

fn report(query: String, witnesses: Vec<RingElement>, enumerated: usize) -> OracleReport {
    OracleReport {
        query,
        unique: witnesses.len() == 1,
        enumerated_count: enumerated as u64,
        witnesses,
    }
}

/// All y satisfying the (b,c)-inverse definition, found by enumerating both
/// the candidates and the middle factors of `y ∈ bRy`, `y ∈ yRc`.
pub fn brute_bc_inverse(
    a: &RingElement,
    b: &RingElement,
    c: &RingElement,
    cap: u128,
) -> Result<OracleReport, Error> {
    let ring = a.ring();
    let all = finite_elements(ring, cap)?;
    let mut witnesses = Vec::new();
    for y in &all {
        if y.mul(a).mul(b) != *b || c.mul(a).mul(y) != *c {
            continue;
        }
        if !all.iter().any(|r| b.mul(r).mul(y) == *y) {
            continue;
        }
        if !all.iter().any(|r| y.mul(r).mul(c) == *y) {
            continue;
        }
        witnesses.push(y.clone());
    }
    Ok(report(
        format!("({b},{c})-inverse of {a} in {ring}"),
        witnesses,
        all.len(),
    ))
}

/// All group inverses of `a` (there is at most one; the report asserts it).
pub fn brute_group_inverse(a: &RingElement, cap: u128) -> Result<OracleReport, Error> {
    let ring = a.ring();
    let all = finite_elements(ring, cap)?;
    let witnesses: Vec<_> = all
        .iter()
        .filter(|y| a.mul(y).mul(a) == *a && y.mul(a).mul(y) == **y && a.mul(y) == y.mul(a))
        .cloned()
        .collect();
    assert!(witnesses.len() <= 1, "group inverse must be unique");
    Ok(report(
        format!("group inverse of {a} in {ring}"),
        witnesses,
        all.len(),
    ))
}

/// All inner inverses of `a` (`aya = a`), in canonical order.
pub fn brute_inner_inverses(a: &RingElement, cap: u128) -> Result<OracleReport, Error> {
    let ring = a.ring();
    let all = finite_elements(ring, cap)?;
    let witnesses: Vec<_> = all
        .iter()
        .filter(|y| a.mul(y).mul(a) == *a)
        .cloned()
        .collect();
    Ok(report(
        format!("inner inverses of {a} in {ring}"),
        witnesses,
        all.len(),
    ))
}

/// Whether every ring element has exactly one representation `u + v` with
/// `u` drawn from `image` and `v` from `kernel`.
fn exact_direct_sum(
    all: &[RingElement],
    image: &HashSet<RingElement>,
    kernel: &[RingElement],
) -> bool {
    let mut reps: HashMap<RingElement, u64> = HashMap::new();
    for u in image {
        for v in kernel {
            *reps.entry(u.add(v)).or_insert(0) += 1;
        }
    }
    all.iter().all(|x| reps.get(x) == Some(&1))
}

/// Whether `R = abR ⊕ c°` and `R = Rca ⊕ °b`: every element of the ring has
/// exactly one representation `u + v` with `u ∈ abR` and `cv = 0`, and
/// likewise on the mirror side with `u ∈ Rca` and `vb = 0`. On finite rings
/// the two sums together are equivalent to existence of the (b,c)-inverse
/// of `a`. One sum alone is not: in Z_2 with a = 0, b = 1, c = 0 the first
/// sum is direct (abR = {0}, c° = R) yet `yab = b` has no solution.
pub fn decomposition_check(
    a: &RingElement,
    b: &RingElement,
    c: &RingElement,
    cap: u128,
) -> Result<bool, Error> {
    let ring = a.ring();
    let all = finite_elements(ring, cap)?;
    let ab = a.mul(b);
    let right_image: HashSet<RingElement> = all.iter().map(|r| ab.mul(r)).collect();
    let right_kernel: Vec<RingElement> =
        all.iter().filter(|x| c.mul(x).is_zero()).cloned().collect();
    if !exact_direct_sum(&all, &right_image, &right_kernel) {
        return Ok(false);
    }
    let ca = c.mul(a);
    let left_image: HashSet<RingElement> = all.iter().map(|r| r.mul(&ca)).collect();
    let left_kernel: Vec<RingElement> =
        all.iter().filter(|x| x.mul(b).is_zero()).cloned().collect();
    Ok(exact_direct_sum(&all, &left_image, &left_kernel))
}

/// How a law sweep walks the parameter space.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Scope {
    Exhaustive,
    Sample { count: u64, seed: u64 },
}

/// Result of a counterexample search over one ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SearchOutcome {
    pub law: String,
    pub ring: RingDescriptor,
    pub counterexample: Option<Vec<RingElement>>,
    pub tuples_checked: u64,
}

/// Runs `eval` over tuples of `arity` ring elements until it reports a
/// violation (returns `false`) or the scope is exhausted.
///
/// Exhaustive scope walks tuples in mixed-radix canonical order with the
/// first parameter most significant; sampled scope draws each tuple's
/// parameters in order from a `ChaCha8` stream seeded with `seed`, so
/// results are reproducible. Total evaluations are capped at [`HARD_CAP`].
pub fn search_counterexample<F>(
    ring: RingDescriptor,
    law: &str,
    arity: usize,
    scope: Scope,
    mut eval: F,
) -> Result<SearchOutcome, Error>
where
    F: FnMut(&[RingElement]) -> Result<bool, Error>,
{
    let size = ring
        .size()
        .ok_or_else(|| Error::NotFinite(ring.to_string()))?;
    let outcome = |counterexample, tuples_checked| SearchOutcome {
        law: law.to_string(),
        ring,
        counterexample,
        tuples_checked,
    };
    match scope {
        Scope::Exhaustive => {
            let total = size.checked_pow(arity as u32).unwrap_or(u128::MAX);
            if total > HARD_CAP {
                return Err(Error::EnumerationTooLarge {
                    size: total,
                    cap: HARD_CAP,
                });
            }
            let mut tuple: Vec<RingElement> = vec![ring.zero(); arity];
            for t in 0..total {
                let mut rem = t;
                for i in (0..arity).rev() {
                    tuple[i] = ring.element_at(rem % size)?;
                    rem /= size;
                }
                if !eval(&tuple)? {
                    return Ok(outcome(Some(tuple), (t + 1) as u64));
                }
            }
            Ok(outcome(None, total as u64))
        }
        Scope::Sample { count, seed } => {
            if u128::from(count) > HARD_CAP {
                return Err(Error::EnumerationTooLarge {
                    size: u128::from(count),
                    cap: HARD_CAP,
                });
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for t in 0..count {
                let tuple: Vec<RingElement> = (0..arity)
                    .map(|_| ring.element_at(rng.gen_range(0..size)))
                    .collect::<Result<_, _>>()?;
                if !eval(&tuple)? {
                    return Ok(outcome(Some(tuple), t + 1));
                }
            }
            Ok(outcome(None, count))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inverse::{bc_inverse, BCResult};

    fn z(n: u64) -> RingDescriptor {
        RingDescriptor::zmod(n).unwrap()
    }

    fn zel(n: u64, v: i64) -> RingElement {
        z(n).from_integer(v)
    }

    #[test]
    fn brute_bc_inverse_finds_unique_witness() {
        let rep = brute_bc_inverse(&zel(6, 2), &zel(6, 4), &zel(6, 4), DEFAULT_RING_CAP).unwrap();
        assert_eq!(rep.witnesses, vec![zel(6, 2)]);
        assert!(rep.unique);
        assert_eq!(rep.enumerated_count, 6);
    }

    #[test]
    fn brute_group_and_inner_examples() {
        let rep = brute_group_inverse(&zel(6, 2), DEFAULT_RING_CAP).unwrap();
        assert_eq!(rep.witnesses, vec![zel(6, 2)]);
        let rep = brute_group_inverse(&zel(4, 2), DEFAULT_RING_CAP).unwrap();
        assert!(rep.witnesses.is_empty());
        let rep = brute_inner_inverses(&zel(6, 4), DEFAULT_RING_CAP).unwrap();
        assert_eq!(rep.witnesses, vec![zel(6, 1), zel(6, 4)]);
        assert!(!rep.unique);
    }

    #[test]
    fn brute_agrees_with_linear_route_on_small_rings() {
        for n in [4u64, 6] {
            let ring = z(n);
            let all: Vec<_> = ring.enumerate_elements().unwrap().collect();
            for a in &all {
                for b in &all {
                    for c in &all {
                        let rep = brute_bc_inverse(a, b, c, DEFAULT_RING_CAP).unwrap();
                        match bc_inverse(a, b, c) {
                            BCResult::Exists(y) => assert_eq!(rep.witnesses, vec![y]),
                            BCResult::NotExists(_) => assert!(rep.witnesses.is_empty()),
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn decomposition_examples() {
        // Invertible a with b = c = 1: u = a·r spans R, kernel is {0}.
        assert!(decomposition_check(&zel(6, 5), &zel(6, 1), &zel(6, 1), DEFAULT_RING_CAP).unwrap());
        assert!(decomposition_check(&zel(6, 2), &zel(6, 4), &zel(6, 4), DEFAULT_RING_CAP).unwrap());
        assert!(
            !decomposition_check(&zel(4, 2), &zel(4, 2), &zel(4, 2), DEFAULT_RING_CAP).unwrap()
        );
        // One direct sum without its mirror: abR = {0} and c° = R make the
        // right-hand sum trivially direct, but no inverse of 0 recovers b.
        assert!(
            !decomposition_check(&zel(2, 0), &zel(2, 1), &zel(2, 0), DEFAULT_RING_CAP).unwrap()
        );
    }

    #[test]
    fn caps_and_finiteness_are_enforced() {
        let big = z(5000);
        let a = big.from_integer(1);
        assert!(matches!(
            brute_bc_inverse(&a, &a, &a, DEFAULT_RING_CAP),
            Err(Error::EnumerationTooLarge {
                size: 5000,
                cap: 4096
            })
        ));
        // A raised cap admits the same query.
        assert!(brute_bc_inverse(&a, &a, &a, 5000).is_ok());
        let q = RingDescriptor::rationals();
        assert!(matches!(
            brute_group_inverse(&q.one(), DEFAULT_RING_CAP),
            Err(Error::NotFinite(_))
        ));
    }

    #[test]
    fn exhaustive_search_walks_canonical_order() {
        let mut seen = Vec::new();
        let out = search_counterexample(z(3), "demo", 2, Scope::Exhaustive, |t| {
            seen.push((t[0].clone(), t[1].clone()));
            Ok(true)
        })
        .unwrap();
        assert_eq!(out.tuples_checked, 9);
        assert!(out.counterexample.is_none());
        let expect: Vec<_> = (0..3)
            .flat_map(|i| (0..3).map(move |j| (zel(3, i), zel(3, j))))
            .collect();
        assert_eq!(seen, expect);
    }

    #[test]
    fn search_stops_at_first_violation() {
        let bad = (zel(3, 1), zel(3, 2));
        let out = search_counterexample(z(3), "demo", 2, Scope::Exhaustive, |t| {
            Ok((t[0].clone(), t[1].clone()) != bad)
        })
        .unwrap();
        assert_eq!(out.counterexample, Some(vec![zel(3, 1), zel(3, 2)]));
        // (0,0) (0,1) (0,2) (1,0) (1,1) (1,2): six tuples inspected.
        assert_eq!(out.tuples_checked, 6);
    }

    #[test]
    fn sampled_search_is_reproducible() {
        let scope = Scope::Sample {
            count: 200,
            seed: 42,
        };
        let run = |_: ()| {
            let mut tuples = Vec::new();
            let out = search_counterexample(z(8), "demo", 3, scope, |t| {
                tuples.push(t.to_vec());
                Ok(true)
            })
            .unwrap();
            (out, tuples)
        };
        let (out1, t1) = run(());
        let (out2, t2) = run(());
        assert_eq!(out1, out2);
        assert_eq!(t1, t2);
        assert_eq!(out1.tuples_checked, 200);
    }

    #[test]
    fn search_caps_total_evaluations() {
        // 6^12 exceeds the evaluation cap.
        let err = search_counterexample(z(6), "demo", 12, Scope::Exhaustive, |_| Ok(true));
        assert!(matches!(err, Err(Error::EnumerationTooLarge { .. })));
        let err = search_counterexample(
            z(6),
            "demo",
            1,
            Scope::Sample {
                count: u64::MAX,
                seed: 0,
            },
            |_| Ok(true),
        );
        assert!(matches!(err, Err(Error::EnumerationTooLarge { .. })));
    }

    #[test]
    fn search_propagates_eval_errors() {
        let err = search_counterexample(z(3), "demo", 1, Scope::Exhaustive, |_| {
            Err(Error::NotIdempotent { name: "p" })
        });
        assert!(matches!(err, Err(Error::NotIdempotent { name: "p" })));
    }

    #[test]
    fn sampled_search_works_on_large_finite_rings() {
        let ring =
            RingDescriptor::matrix_ring(crate::scalar::FieldKind::prime(5).unwrap(), 3).unwrap();
        let out =
            search_counterexample(ring, "demo", 2, Scope::Sample { count: 10, seed: 7 }, |t| {
                Ok(t[0].ring() == ring && t[1].ring() == ring)
            })
            .unwrap();
        assert!(out.counterexample.is_none());
        assert_eq!(out.tuples_checked, 10);
    }
}
