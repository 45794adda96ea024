//! Closed-form curve neighborhoods.
//!
//! One general code path computes `Gamma_d(id)` for every degree regime:
//! split off `m = min(d)` copies of the imaginary class `c`, factor the
//! remainder through `z`, and attach a translation part `(s_beta s_beta')^m`
//! for every compatible root `beta' < c`. Neighborhoods of arbitrary start
//! elements reduce to the identity case by Hecke-multiplying and taking
//! Bruhat-maximal elements.

use crate::affine_weyl::{bruhat_maximal, hecke_mul, power, reflection, AffinePerm};
use crate::error::Result;
use crate::roots::{all_roots_below_c, intersection_support, Degree, PosRealRoot};
use crate::z_elem::{z_factorization, ZFactorization};

/// Which degree regime produced a formula result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// `min(d) = 0`: a single element `z_d`.
    Finite,
    /// `d = m*c`: the translations `t_{m*gamma}`.
    Translation,
    /// `d = m*c + rest` with `rest != 0`.
    General,
}

/// How the translation part of an element reads off its witness root.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TranslationForm {
    /// `t_{m beta'}` (the affine node is outside the support of `beta'`).
    MBetaPrime,
    /// `t_{m(beta' - c)}`.
    MBetaPrimeMinusC,
}

/// Per-element provenance for formula results in the non-finite regimes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub beta_prime: PosRealRoot,
    pub m: i64,
    pub form: TranslationForm,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NbhdElement {
    pub perm: AffinePerm,
    pub witness: Option<Witness>,
}

/// What produced a neighborhood result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Formula {
        regime: Regime,
        m: i64,
        z_part: AffinePerm,
        z_factors: Vec<PosRealRoot>,
    },
    /// Reduction of a formula result through Hecke products and the
    /// Bruhat-maximal filter.
    MaxOfFormula { regime: Regime },
    Oracle { level_zero_only: bool },
}

/// A curve neighborhood: a set of pairwise Bruhat-incomparable elements,
/// sorted by window, with a common length when one exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NbhdResult {
    pub provenance: Provenance,
    pub elements: Vec<NbhdElement>,
    pub common_length: Option<usize>,
}

impl NbhdResult {
    pub fn perms(&self) -> Vec<AffinePerm> {
        self.elements.iter().map(|e| e.perm.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// The roots `beta' < c` compatible with a factor list: for every factor,
/// either the supports are disjoint, or `beta'` is strictly bigger and
/// perpendicular. An empty factor list admits all `n(n-1)` roots below `c`.
pub fn pi_set(factors: &[PosRealRoot], n: usize) -> Result<Vec<PosRealRoot>> {
    Ok(all_roots_below_c(n)?
        .into_iter()
        .filter(|beta| {
            factors.iter().all(|gamma| {
                intersection_support(beta, gamma).is_empty()
                    || (beta.gt(gamma) && beta.is_perp(gamma))
            })
        })
        .collect())
}

/// The curve neighborhood of the identity at degree `d`.
pub fn gamma_id(d: &Degree) -> Result<NbhdResult> {
    let n = d.n();
    let m = d.min_entry();
    if m == 0 {
        let zf = z_factorization(d)?;
        let common = zf.element.length();
        return Ok(NbhdResult {
            provenance: Provenance::Formula {
                regime: Regime::Finite,
                m: 0,
                z_part: zf.element.clone(),
                z_factors: zf.factors,
            },
            elements: vec![NbhdElement {
                perm: zf.element,
                witness: None,
            }],
            common_length: Some(common),
        });
    }

    let rest = d.sub(&Degree::imaginary_c(n).scale(m)?)?;
    let regime = if rest.is_zero() {
        Regime::Translation
    } else {
        Regime::General
    };
    let zf: ZFactorization = z_factorization(&rest)?;
    let compatible = pi_set(&zf.factors, n)?;

    let mut elements = Vec::with_capacity(compatible.len());
    for beta_prime in compatible {
        let beta = beta_prime.complement_c()?;
        let step = reflection(&beta).multiply(&reflection(&beta_prime));
        let perm = power(&step, m).multiply(&zf.element);
        let form = if beta_prime.contains(0) {
            TranslationForm::MBetaPrimeMinusC
        } else {
            TranslationForm::MBetaPrime
        };
        elements.push(NbhdElement {
            perm,
            witness: Some(Witness {
                beta_prime,
                m,
                form,
            }),
        });
    }
    elements.sort_by(|a, b| a.perm.cmp(&b.perm));

    let common_length = 2 * (m as usize) * (n - 1) + zf.length;
    debug_assert!(elements.iter().all(|e| e.perm.length() == common_length));

    Ok(NbhdResult {
        provenance: Provenance::Formula {
            regime,
            m,
            z_part: zf.element,
            z_factors: zf.factors,
        },
        elements,
        common_length: Some(common_length),
    })
}

/// The curve neighborhood of an arbitrary element: the Bruhat-maximal
/// elements among `w . u` for `u` in the identity neighborhood.
pub fn gamma_w(w: &AffinePerm, d: &Degree) -> Result<NbhdResult> {
    let base = gamma_id(d)?;
    if w.is_identity() {
        return Ok(base);
    }
    let regime = match &base.provenance {
        Provenance::Formula { regime, .. } => *regime,
        _ => unreachable!("gamma_id always reports a formula provenance"),
    };
    let candidates: Vec<AffinePerm> = base
        .elements
        .iter()
        .map(|e| hecke_mul(w, &e.perm))
        .collect();
    let maximal = bruhat_maximal(&candidates);
    let common_length = maximal
        .first()
        .map(|first| first.length())
        .filter(|&l| maximal.iter().all(|p| p.length() == l));
    Ok(NbhdResult {
        provenance: Provenance::MaxOfFormula { regime },
        elements: maximal
            .into_iter()
            .map(|perm| NbhdElement { perm, witness: None })
            .collect(),
        common_length,
    })
}

/// Factors that are maximal in the root order among the given list. The
/// compatibility condition against a factor list only depends on these.
pub fn support_maximal_factors(factors: &[PosRealRoot]) -> Vec<PosRealRoot> {
    factors
        .iter()
        .filter(|f| !factors.iter().any(|g| f.leq(g) && *f != g))
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine_weyl::{eval_word, translation};
    use crate::roots::degrees_with_sum_at_most;
    use std::collections::BTreeSet;

    fn deg(v: &[i64]) -> Degree {
        Degree::new(v.to_vec()).unwrap()
    }

    fn root(n: usize, start: usize, end: usize) -> PosRealRoot {
        PosRealRoot::new(n, 0, start, end).unwrap()
    }

    fn perm_set(result: &NbhdResult) -> BTreeSet<AffinePerm> {
        result.elements.iter().map(|e| e.perm.clone()).collect()
    }

    #[test]
    fn pi_set_examples() {
        // one factor a0+a4 at n=5: six roots below the complement plus one
        // strictly bigger perpendicular root
        let p = pi_set(&[root(5, 4, 0)], 5).unwrap();
        let expected: BTreeSet<PosRealRoot> = [
            root(5, 1, 1),
            root(5, 2, 2),
            root(5, 3, 3),
            root(5, 1, 2),
            root(5, 2, 3),
            root(5, 1, 3),
            root(5, 3, 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(p.iter().cloned().collect::<BTreeSet<_>>(), expected);

        assert_eq!(pi_set(&[], 4).unwrap().len(), 12);

        let p = pi_set(&[root(4, 0, 0), root(4, 2, 2)], 4).unwrap();
        let expected: BTreeSet<PosRealRoot> =
            [root(4, 1, 1), root(4, 3, 3), root(4, 3, 1), root(4, 1, 3)]
                .into_iter()
                .collect();
        assert_eq!(p.iter().cloned().collect::<BTreeSet<_>>(), expected);
    }

    #[test]
    fn degree_c_neighborhood_matches_both_descriptions() {
        let n = 3;
        let result = gamma_id(&deg(&[1, 1, 1])).unwrap();
        assert_eq!(result.len(), 6);
        assert_eq!(result.common_length, Some(4));
        let words: [&[usize]; 6] = [
            &[2, 0, 1, 0],
            &[1, 2, 1, 0],
            &[1, 0, 2, 0],
            &[0, 2, 0, 1],
            &[0, 1, 0, 2],
            &[0, 1, 2, 1],
        ];
        let expected: BTreeSet<AffinePerm> =
            words.iter().map(|w| eval_word(w, n)).collect();
        assert_eq!(perm_set(&result), expected);
        // ... and equals the translations of all six finite roots
        let mut translations = BTreeSet::new();
        for coeffs in [[1i64, 0], [0, 1], [1, 1]] {
            translations.insert(translation(&coeffs, n).unwrap());
            translations.insert(translation(&[-coeffs[0], -coeffs[1]], n).unwrap());
        }
        assert_eq!(perm_set(&result), translations);
    }

    #[test]
    fn finite_regime_is_a_singleton() {
        let result = gamma_id(&deg(&[1, 0, 1])).unwrap();
        assert_eq!(result.len(), 1);
        assert_eq!(result.elements[0].perm, reflection(&root(3, 2, 0)));
        assert!(matches!(
            result.provenance,
            Provenance::Formula {
                regime: Regime::Finite,
                ..
            }
        ));
        // degree of a single root: the neighborhood is that reflection
        for n in 3..=4 {
            for alpha in all_roots_below_c(n).unwrap() {
                let result = gamma_id(&alpha.coeffs()).unwrap();
                assert_eq!(result.len(), 1);
                assert_eq!(result.elements[0].perm, reflection(&alpha));
            }
        }
    }

    #[test]
    fn general_regime_worked_example() {
        // n=4, d=(6,5,8,5) = 5c + (1,0,3,0)
        let result = gamma_id(&deg(&[6, 5, 8, 5])).unwrap();
        assert_eq!(result.len(), 4);
        assert_eq!(result.common_length, Some(32));
        let witness_roots: BTreeSet<PosRealRoot> = result
            .elements
            .iter()
            .map(|e| e.witness.as_ref().unwrap().beta_prime.clone())
            .collect();
        let expected: BTreeSet<PosRealRoot> =
            [root(4, 1, 1), root(4, 3, 3), root(4, 3, 1), root(4, 1, 3)]
                .into_iter()
                .collect();
        assert_eq!(witness_roots, expected);
        match &result.provenance {
            Provenance::Formula { regime, m, z_part, .. } => {
                assert_eq!(*regime, Regime::General);
                assert_eq!(*m, 5);
                assert_eq!(*z_part, eval_word(&[0, 2], 4));
            }
            other => panic!("unexpected provenance {other:?}"),
        }
        // the wrap root a3+a0+a1 contains the affine node: t_{m(beta'-c)} form
        for e in &result.elements {
            let w = e.witness.as_ref().unwrap();
            let expected_form = if w.beta_prime.contains(0) {
                TranslationForm::MBetaPrimeMinusC
            } else {
                TranslationForm::MBetaPrime
            };
            assert_eq!(w.form, expected_form);
        }
    }

    #[test]
    fn c_plus_root_worked_example() {
        // n=5, alpha = a0+a4: seven elements of length 11; same witnesses at
        // m=12 with length 99
        let alpha = root(5, 4, 0);
        let d = Degree::imaginary_c(5).add(&alpha.coeffs());
        let result = gamma_id(&d).unwrap();
        assert_eq!(result.len(), 7);
        assert_eq!(result.common_length, Some(11));

        let d12 = Degree::imaginary_c(5).scale(12).unwrap().add(&alpha.coeffs());
        let result12 = gamma_id(&d12).unwrap();
        assert_eq!(result12.len(), 7);
        assert_eq!(result12.common_length, Some(99));
        let w1: BTreeSet<PosRealRoot> = result
            .elements
            .iter()
            .map(|e| e.witness.as_ref().unwrap().beta_prime.clone())
            .collect();
        let w12: BTreeSet<PosRealRoot> = result12
            .elements
            .iter()
            .map(|e| e.witness.as_ref().unwrap().beta_prime.clone())
            .collect();
        assert_eq!(w1, w12);
    }

    #[test]
    fn translation_regime_counts() {
        for (n, m) in [(3usize, 1i64), (3, 2), (4, 1)] {
            let d = Degree::imaginary_c(n).scale(m).unwrap();
            let result = gamma_id(&d).unwrap();
            assert_eq!(result.len(), n * (n - 1));
            assert_eq!(result.common_length, Some(2 * m as usize * (n - 1)));
            assert!(matches!(
                result.provenance,
                Provenance::Formula {
                    regime: Regime::Translation,
                    ..
                }
            ));
        }
    }

    #[test]
    fn gamma_w_examples() {
        let n = 3;
        let s1 = AffinePerm::simple(1, n);
        let fixed = gamma_w(&s1, &deg(&[0, 1, 0])).unwrap();
        assert_eq!(perm_set(&fixed), BTreeSet::from([s1.clone()]));

        let d = deg(&[1, 1, 1]);
        let id_result = gamma_w(&AffinePerm::identity(n), &d).unwrap();
        assert_eq!(perm_set(&id_result), perm_set(&gamma_id(&d).unwrap()));

        // moving the start element never lowers the reachable maximum
        let moved = gamma_w(&s1, &d).unwrap();
        for e in &moved.elements {
            assert!(e.perm.length() >= 4);
        }
    }

    #[test]
    fn distinct_witnesses_give_distinct_elements() {
        for n in [3usize, 4] {
            for d in degrees_with_sum_at_most(n, 5) {
                if d.min_entry() == 0 {
                    continue;
                }
                let result = gamma_id(&d).unwrap();
                let distinct: BTreeSet<AffinePerm> = perm_set(&result);
                assert_eq!(distinct.len(), result.len(), "duplicates at d={d}");
            }
        }
    }

    #[test]
    fn support_maximal_reduction_is_equivalent() {
        for n in [3usize, 4] {
            for d in degrees_with_sum_at_most(n, 6) {
                if d.min_entry() > 0 {
                    continue;
                }
                let zf = z_factorization(&d).unwrap();
                let full = pi_set(&zf.factors, n).unwrap();
                let reduced = pi_set(&support_maximal_factors(&zf.factors), n).unwrap();
                assert_eq!(full, reduced, "d={d}");
            }
        }
    }

    #[test]
    fn witness_translations_reconstruct_elements() {
        // each element is its witness translation times the z part
        for d in [
            deg(&[1, 1, 1]),
            deg(&[2, 2, 2]),
            deg(&[2, 1, 1]),
            deg(&[3, 1, 2]),
            deg(&[6, 5, 8, 5]),
            deg(&[2, 1, 1, 1]),
        ] {
            let n = d.n();
            let result = gamma_id(&d).unwrap();
            let z_part = match &result.provenance {
                Provenance::Formula { z_part, .. } => z_part.clone(),
                other => panic!("unexpected provenance {other:?}"),
            };
            for e in &result.elements {
                let w = e.witness.as_ref().expect("non-finite regimes carry witnesses");
                let coeffs: Vec<i64> = match w.form {
                    TranslationForm::MBetaPrime => w.beta_prime.coeffs().coeffs()[1..]
                        .iter()
                        .map(|&x| w.m * x)
                        .collect(),
                    TranslationForm::MBetaPrimeMinusC => w
                        .beta_prime
                        .complement_c()
                        .unwrap()
                        .coeffs()
                        .coeffs()[1..]
                        .iter()
                        .map(|&x| -w.m * x)
                        .collect(),
                };
                let t = translation(&coeffs, n).unwrap();
                assert_eq!(e.perm, t.multiply(&z_part), "witness of {} at {d}", e.perm);
            }
        }
    }

    #[test]
    fn monotone_under_degree_growth() {
        // every element reachable within d' stays dominated within d >= d'
        let n = 3;
        let mut cache = crate::affine_weyl::BruhatCache::new();
        let degrees = degrees_with_sum_at_most(n, 4);
        for d in &degrees {
            let big = gamma_id(d).unwrap();
            for d_small in degrees.iter().filter(|s| s.leq(d)) {
                let small = gamma_id(d_small).unwrap();
                for e in &small.elements {
                    assert!(
                        big.elements.iter().any(|f| cache.leq(&e.perm, &f.perm)),
                        "element {} of {d_small} escapes {d}",
                        e.perm
                    );
                }
            }
        }
    }
}
