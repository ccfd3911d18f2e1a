//! The Mullineux map λ ↦ λ^M, the involution on p-regular partitions with
//! D^λ ⊗ sgn ≅ D^{λ^M}, computed by the crystal recursion:
//! λ^M = f̃_{−i}((ẽ_i λ)^M) for any residue i with ε_i(λ) > 0.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::crystal::{e_tilde, f_tilde, normal_report};
use crate::error::{Error, Result};
use crate::partition::{Partition, PrimeChar};

type CacheKey = (Vec<u32>, u32);

fn cache() -> &'static Mutex<HashMap<CacheKey, Partition>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, Partition>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Drop all memoized images. Sweeps over a size range call this between
/// configurations to keep the table bounded.
pub fn clear_mullineux_cache() {
    cache().lock().unwrap().clear();
}

/// λ^M. Deterministic: the recursion always removes the good node of the
/// smallest residue with ε_i(λ) > 0. Races on the cache at worst duplicate
/// work; results are identical.
pub fn mullineux(lambda: &Partition, p: &PrimeChar) -> Result<Partition> {
    if !lambda.is_p_regular(p) {
        return Err(Error::not_regular(lambda, p));
    }
    if let Some(hit) = cache()
        .lock()
        .unwrap()
        .get(&(lambda.parts().to_vec(), p.p()))
    {
        return Ok(hit.clone());
    }
    // Peel λ down to the empty partition recording the residue chain, with
    // early exit on a cache hit, then rebuild with negated residues.
    let mut chain = Vec::new();
    let mut cur = lambda.clone();
    let mut image = loop {
        if cur.is_empty() {
            break Partition::empty();
        }
        if let Some(hit) = cache().lock().unwrap().get(&(cur.parts().to_vec(), p.p())) {
            break hit.clone();
        }
        let i = p
            .residues()
            .find(|&i| {
                normal_report(&cur, i, p)
                    .map(|rep| rep.epsilon > 0)
                    .unwrap_or(false)
            })
            .expect("a nonempty partition has a normal node");
        let smaller = e_tilde(&cur, i, p)?.expect("epsilon > 0");
        chain.push((cur.clone(), i));
        cur = smaller;
    };
    for (level, i) in chain.into_iter().rev() {
        image = f_tilde(&image, i.neg(), p)?
            .expect("the Mullineux image admits the mirrored addition");
        cache()
            .lock()
            .unwrap()
            .insert((level.parts().to_vec(), p.p()), image.clone());
    }
    Ok(image)
}

/// The applicability predicate of the first-row bound: λ_1 ≥ p−1 and the
/// concatenation of (λ_1)^M with (λ_2, λ_3, ...)^M is a p-regular partition.
pub fn first_row_condition(lambda: &Partition, p: &PrimeChar) -> Result<bool> {
    if !lambda.is_p_regular(p) {
        return Err(Error::not_regular(lambda, p));
    }
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    if (lambda.first() as i64) < p.p() as i64 - 1 {
        return Ok(false);
    }
    let head = mullineux(&Partition::single(lambda.first()), p)?;
    let rest = mullineux(&lambda.tail(), p)?;
    let mut parts: Vec<u32> = head.parts().to_vec();
    parts.extend_from_slice(rest.parts());
    match Partition::new(parts) {
        Ok(concat) => Ok(concat.is_p_regular(p)),
        Err(_) => Ok(false), // not weakly decreasing
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::epsilon;
    use crate::partition::p_regular_partitions_of;

    fn pc(p: u32) -> PrimeChar {
        PrimeChar::new(p).unwrap()
    }

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn mullineux_examples() {
        let p = pc(3);
        assert_eq!(mullineux(&pt("3"), &p).unwrap(), pt("2,1"));
        assert_eq!(mullineux(&pt("2,1"), &p).unwrap(), pt("3"));
        assert_eq!(mullineux(&pt("2"), &p).unwrap(), pt("1,1"));
        assert_eq!(mullineux(&Partition::empty(), &p).unwrap(), Partition::empty());
        let p2 = pc(2);
        for n in 0..=10u32 {
            for la in p_regular_partitions_of(n, &p2) {
                assert_eq!(mullineux(&la, &p2).unwrap(), la);
            }
        }
    }

    #[test]
    fn mullineux_rejects_irregular() {
        assert!(matches!(
            mullineux(&pt("1,1"), &pc(2)),
            Err(Error::NotRegular { .. })
        ));
    }

    #[test]
    fn involution_and_size() {
        for p in [2u32, 3, 5, 7] {
            let p = pc(p);
            for n in 0..=12u32 {
                for la in p_regular_partitions_of(n, &p) {
                    let m = mullineux(&la, &p).unwrap();
                    assert_eq!(m.n(), la.n());
                    assert!(m.is_p_regular(&p));
                    assert_eq!(mullineux(&m, &p).unwrap(), la);
                }
            }
        }
    }

    #[test]
    fn crystal_commutation_all_residues() {
        // ε_i(λ) > 0 ⟹ (ẽ_i λ)^M = ẽ_{−i}(λ^M), for every residue, not
        // only the one the recursion happens to use.
        for p in [3u32, 5] {
            let p = pc(p);
            for n in 1..=10u32 {
                for la in p_regular_partitions_of(n, &p) {
                    let m = mullineux(&la, &p).unwrap();
                    for i in p.residues() {
                        if epsilon(&la, i, &p).unwrap() > 0 {
                            let lhs =
                                mullineux(&e_tilde(&la, i, &p).unwrap().unwrap(), &p).unwrap();
                            let rhs = e_tilde(&m, i.neg(), &p).unwrap().unwrap();
                            assert_eq!(lhs, rhs, "λ={la:?} i={} p={}", i.value(), p.p());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn epsilon_mirror() {
        for p in [3u32, 5] {
            let p = pc(p);
            for n in 1..=10u32 {
                for la in p_regular_partitions_of(n, &p) {
                    let m = mullineux(&la, &p).unwrap();
                    for i in p.residues() {
                        assert_eq!(
                            epsilon(&la, i, &p).unwrap(),
                            epsilon(&m, i.neg(), &p).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn first_row_condition_examples() {
        let p = pc(3);
        for n in 2..=12u32 {
            assert!(first_row_condition(&Partition::single(n), &p).unwrap());
        }
        assert!(!first_row_condition(&pt("1"), &p).unwrap());
        // (3)^M = (2,1), (2)^M = (1,1); concatenation (2,1,1,1) is not
        // 3-regular.
        assert!(!first_row_condition(&pt("3,2"), &p).unwrap());
    }
}
