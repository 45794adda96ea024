//! The element `z_d` for degrees with a zero component.
//!
//! `z_d` is built greedily: repeatedly Hecke-multiply by the reflection of a
//! maximal root below the remaining degree. The greedy factor multiset is
//! then normalized, by trimming shared interval endpoints off nested factors,
//! into a canonical list whose plain reflection product is reduced and equals
//! `z_d`.

use crate::affine_weyl::{hecke_mul, reflection, AffinePerm};
use crate::error::{Error, Result};
use crate::roots::{cyclic_runs, Degree, PosRealRoot};

/// Canonical factorization `z_d = s_{g_1} ... s_{g_r}` (a plain, reduced
/// product) where any two factors either have disconnected supports or are
/// comparable and perpendicular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZFactorization {
    pub factors: Vec<PosRealRoot>,
    pub element: AffinePerm,
    pub length: usize,
}

/// All level-0 roots below `d` that are maximal in the root order: the
/// maximal cyclic runs of the support of `d`.
pub fn maximal_roots_leq(d: &Degree) -> Result<Vec<PosRealRoot>> {
    let support = d.support();
    if support.len() == d.n() {
        return Err(Error::NoZeroComponent(d.to_string()));
    }
    Ok(cyclic_runs(&support, d.n()))
}

/// The greedy choices with multiplicities, in pick order. Ties are broken by
/// smallest interval start, then shortest interval; well-definedness of the
/// resulting element does not depend on this.
///
/// While the same root stays maximal its repeats are taken in one batch:
/// the support pattern of the remaining degree is unchanged until an entry
/// on the picked interval reaches zero, so the batch replays a plain
/// one-at-a-time greedy run.
fn greedy_picks(d: &Degree) -> Result<Vec<(PosRealRoot, i64)>> {
    let mut current = d.clone();
    let mut picks = Vec::new();
    while !current.is_zero() {
        let candidates = maximal_roots_leq(&current)?;
        let pick = candidates
            .into_iter()
            .min_by_key(|r| (r.start(), r.supp_len()))
            .expect("nonzero degree has a maximal root below it");
        let multiplicity = pick
            .interval()
            .iter()
            .map(|&i| current.get(i))
            .min()
            .expect("interval is nonempty");
        current = current.sub(&pick.coeffs().scale(multiplicity)?)?;
        picks.push((pick, multiplicity));
    }
    Ok(picks)
}

/// The unique curve-neighborhood element of the identity for a degree with a
/// zero component; `z_0 = id`.
pub fn z(d: &Degree) -> Result<AffinePerm> {
    let picks = greedy_picks(d)?;
    let mut element = AffinePerm::identity(d.n());
    for (pick, multiplicity) in &picks {
        let s = reflection(pick);
        // repeated Hecke folds of one reflection reach a fixpoint after at
        // most supp_len folds; stop as soon as nothing changes
        for _ in 0..*multiplicity {
            let next = hecke_mul(&element, &s);
            if next == element {
                break;
            }
            element = next;
        }
    }
    Ok(element)
}

pub fn z_factorization(d: &Degree) -> Result<ZFactorization> {
    let n = d.n();
    // repeats of one pick stop contributing once the trims below have eaten
    // the interval to its center, which takes at most supp_len copies
    let mut factors: Vec<PosRealRoot> = Vec::new();
    for (pick, multiplicity) in greedy_picks(d)? {
        let copies = multiplicity.min(pick.supp_len() as i64);
        for _ in 0..copies {
            factors.push(pick.clone());
        }
    }

    // Rewrite to a fixpoint: a pair nested and not perpendicular shares one
    // or both interval endpoints; trimming the shared endpoint simple roots
    // off the smaller factor keeps the Hecke product unchanged. A factor
    // trimmed to nothing is dropped (s_a . s_a = s_a for short intervals).
    'rescan: loop {
        for i in 0..factors.len() {
            for j in 0..factors.len() {
                if i == j {
                    continue;
                }
                let (big, small) = (&factors[i], &factors[j]);
                if !small.leq(big) || big.pairing(small) == 0 {
                    continue;
                }
                let share_start = small.start() == big.start();
                let share_end = small.end() == big.end();
                debug_assert!(share_start || share_end, "nested non-perp share an endpoint");
                let len = small.supp_len();
                let trimmed = if share_start && share_end {
                    // equal intervals: trim both endpoints
                    (len > 2).then(|| {
                        PosRealRoot::new(n, 0, (small.start() + 1) % n, (small.end() + n - 1) % n)
                    })
                } else if share_start {
                    (len > 1).then(|| PosRealRoot::new(n, 0, (small.start() + 1) % n, small.end()))
                } else {
                    (len > 1).then(|| PosRealRoot::new(n, 0, small.start(), (small.end() + n - 1) % n))
                };
                match trimmed {
                    Some(root) => factors[j] = root.expect("trimmed interval stays proper"),
                    None => {
                        factors.remove(j);
                    }
                }
                continue 'rescan;
            }
        }
        break;
    }

    factors.sort_by_key(|r| (r.start(), r.supp_len()));

    let element = z(d)?;
    let plain = factors
        .iter()
        .fold(AffinePerm::identity(n), |acc, f| acc.multiply(&reflection(f)));
    assert_eq!(plain, element, "factor product must equal z_d");
    let length: usize = factors.iter().map(|f| 2 * f.supp_len() - 1).sum();
    assert_eq!(length, element.length(), "factor product must be reduced");
    for (i, a) in factors.iter().enumerate() {
        for b in factors.iter().skip(i + 1) {
            assert!(
                disconnected_supports(a, b) || (a.is_perp(b) && (a.leq(b) || b.leq(a))),
                "factors {a} and {b} violate the pairwise condition"
            );
        }
    }

    Ok(ZFactorization {
        factors,
        element,
        length,
    })
}

/// Supports are disjoint and not cyclically adjacent.
pub fn disconnected_supports(a: &PosRealRoot, b: &PosRealRoot) -> bool {
    let n = a.n();
    let sa = a.support();
    let sb = b.support();
    if sa.intersection(&sb).next().is_some() {
        return false;
    }
    sa.iter()
        .all(|&x| !sb.contains(&((x + 1) % n)) && !sb.contains(&((x + n - 1) % n)))
}

/// Evaluate `z_d` exploring every maximal-root choice at every step; returns
/// the set of distinct resulting elements (tests expect a singleton).
pub fn z_all_choices(d: &Degree) -> Result<std::collections::BTreeSet<AffinePerm>> {
    fn rec(current: &Degree, n: usize) -> Result<std::collections::BTreeSet<AffinePerm>> {
        if current.is_zero() {
            return Ok(std::collections::BTreeSet::from([AffinePerm::identity(n)]));
        }
        let mut results = std::collections::BTreeSet::new();
        for pick in maximal_roots_leq(current)? {
            let rest = current.sub(&pick.coeffs())?;
            for tail in rec(&rest, n)? {
                results.insert(hecke_mul(&reflection(&pick), &tail));
            }
        }
        Ok(results)
    }
    rec(d, d.n())
}
