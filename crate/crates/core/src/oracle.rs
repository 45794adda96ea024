//! Ground-truth curve neighborhoods by exhaustive chain search over the
//! moment graph, independent of every closed-form result.
//!
//! The search walks edges `w -> w s_alpha` for every positive real root
//! `alpha` whose coefficient vector fits the remaining budget, in its primary
//! mode at all levels the budget permits. States are pruned by Pareto
//! dominance on spent budgets, which never changes the visited-element set.
//! Frontier expansion can run on several threads; the visited bookkeeping is
//! merged in a fixed order, so results do not depend on the thread count.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use crate::affine_weyl::{
    bruhat_maximal_with_cache, eval_word, reflection, AffinePerm, BruhatCache,
};
use crate::error::{Error, Result};
use crate::neighborhoods::{NbhdElement, NbhdResult, Provenance};
use crate::roots::{all_roots_below_c, Degree, PosRealRoot};

/// Hard ceiling for subword enumeration of a lower Bruhat interval.
pub const LOWER_INTERVAL_CAP: usize = 12;

/// Default ceiling on the entry sum of a search budget.
pub const DEFAULT_BUDGET_SUM_CAP: i64 = 8;

#[derive(Debug, Clone)]
pub struct SearchConfig {
    /// Restrict edge labels to roots below `c` (the fast mode); the primary
    /// mode admits every level the budget permits.
    pub level_zero_only: bool,
    /// Reject budgets whose entry sum exceeds this cap.
    pub budget_sum_cap: i64,
    /// Worker threads for frontier expansion; 1 keeps everything on the
    /// calling thread.
    pub threads: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            level_zero_only: false,
            budget_sum_cap: DEFAULT_BUDGET_SUM_CAP,
            threads: 1,
        }
    }
}

/// A replayable path in the moment graph: start at `start`, multiply by the
/// reflection of each step's label on the right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    pub start: AffinePerm,
    pub steps: Vec<PosRealRoot>,
}

impl Chain {
    pub fn degree(&self, n: usize) -> Degree {
        self.steps
            .iter()
            .fold(Degree::zero(n), |acc, r| acc.add(&r.coeffs()))
    }

    pub fn replay(&self) -> AffinePerm {
        self.steps
            .iter()
            .fold(self.start.clone(), |acc, r| acc.multiply(&reflection(r)))
    }
}

/// Everything a search produces: the neighborhood itself, the full visited
/// set, and one witness chain per visited element.
#[derive(Debug, Clone)]
pub struct OracleRun {
    pub result: NbhdResult,
    pub visited: Vec<AffinePerm>,
    pub chains: BTreeMap<AffinePerm, Chain>,
}

/// The lower Bruhat interval `{u' : u' <= u}` by subword enumeration of one
/// reduced word; exponential in the length, hence the cap.
pub fn lower_interval(u: &AffinePerm) -> Result<BTreeSet<AffinePerm>> {
    let word = u.reduced_word();
    if word.len() > LOWER_INTERVAL_CAP {
        return Err(Error::LowerIntervalCap {
            length: word.len(),
            cap: LOWER_INTERVAL_CAP,
        });
    }
    let letters = word.letters();
    let n = u.rank();
    let mut out = BTreeSet::new();
    for mask in 0u64..(1u64 << letters.len()) {
        let sub: Vec<usize> = letters
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &l)| l)
            .collect();
        out.insert(eval_word(&sub, n));
    }
    Ok(out)
}

/// All positive real roots with coefficient vector at most `budget`,
/// deterministically ordered.
fn roots_within(budget: &Degree, level_zero_only: bool) -> Vec<PosRealRoot> {
    let n = budget.n();
    let max_level = if level_zero_only { 0 } else { budget.min_entry() };
    let mut out = Vec::new();
    for level in 0..=max_level {
        for base in all_roots_below_c(n).expect("rank checked by Degree") {
            let root = base.with_level(level).expect("level is nonnegative");
            if root.coeffs().leq(budget) {
                out.push(root);
            }
        }
    }
    out
}

struct State {
    element: AffinePerm,
    spent: Degree,
    chain: Chain,
}

/// Insert `spent` into the Pareto set unless dominated; drops entries the
/// new vector dominates. Returns false when dominated.
fn pareto_insert(set: &mut Vec<Degree>, spent: &Degree) -> bool {
    if set.iter().any(|s| s.leq(spent)) {
        return false;
    }
    set.retain(|s| !spent.leq(s));
    set.push(spent.clone());
    true
}

/// The combinatorial curve neighborhood of `u` at degree `d`, by exhaustive
/// bounded-budget search.
pub fn neighborhood_bfs(u: &AffinePerm, d: &Degree, config: &SearchConfig) -> Result<OracleRun> {
    if d.sum() > config.budget_sum_cap {
        return Err(Error::BudgetCap {
            sum: d.sum(),
            cap: config.budget_sum_cap,
        });
    }
    let n = d.n();
    if u.rank() != n {
        return Err(Error::RankMismatch(u.rank(), n));
    }

    let roots = roots_within(d, config.level_zero_only);
    let reflections: Vec<AffinePerm> = roots.iter().map(reflection).collect();
    let root_degrees: Vec<Degree> = roots.iter().map(|r| r.coeffs()).collect();

    let mut visited: HashMap<AffinePerm, Vec<Degree>> = HashMap::new();
    let mut chains: BTreeMap<AffinePerm, Chain> = BTreeMap::new();
    let mut frontier: VecDeque<State> = VecDeque::new();

    for start in lower_interval(u)? {
        let chain = Chain {
            start: start.clone(),
            steps: Vec::new(),
        };
        visited.insert(start.clone(), vec![Degree::zero(n)]);
        chains.insert(start.clone(), chain.clone());
        frontier.push_back(State {
            element: start,
            spent: Degree::zero(n),
            chain,
        });
    }

    while !frontier.is_empty() {
        let batch: Vec<State> = frontier.drain(..).collect();
        let candidates = expand_batch(&batch, &roots, &reflections, &root_degrees, d, config);
        for (parent_idx, root_idx, element, spent) in candidates {
            let entry = visited.entry(element.clone()).or_default();
            if !pareto_insert(entry, &spent) {
                continue;
            }
            let mut chain = batch[parent_idx].chain.clone();
            chain.steps.push(roots[root_idx].clone());
            chains.entry(element.clone()).or_insert_with(|| chain.clone());
            frontier.push_back(State {
                element,
                spent,
                chain,
            });
        }
    }

    let all: Vec<AffinePerm> = {
        let set: BTreeSet<AffinePerm> = visited.keys().cloned().collect();
        set.into_iter().collect()
    };
    let mut cache = BruhatCache::new();
    let maximal = bruhat_maximal_with_cache(&all, &mut cache);
    let common_length = maximal
        .first()
        .map(|first| first.length())
        .filter(|&l| maximal.iter().all(|p| p.length() == l));

    Ok(OracleRun {
        result: NbhdResult {
            provenance: Provenance::Oracle {
                level_zero_only: config.level_zero_only,
            },
            elements: maximal
                .into_iter()
                .map(|perm| NbhdElement {
                    perm,
                    witness: None,
                })
                .collect(),
            common_length,
        },
        visited: all,
        chains,
    })
}

type Candidate = (usize, usize, AffinePerm, Degree);

/// Expand every state of the batch by every root that fits its remaining
/// budget. With more than one thread the batch is chunked; candidates come
/// back concatenated in chunk order, so the merge order is fixed.
fn expand_batch(
    batch: &[State],
    roots: &[PosRealRoot],
    reflections: &[AffinePerm],
    root_degrees: &[Degree],
    d: &Degree,
    config: &SearchConfig,
) -> Vec<Candidate> {
    let expand_range = |lo: usize, hi: usize| -> Vec<Candidate> {
        let mut out = Vec::new();
        for (offset, state) in batch[lo..hi].iter().enumerate() {
            for (root_idx, degree) in root_degrees.iter().enumerate() {
                let spent = state.spent.add(degree);
                if !spent.leq(d) {
                    continue;
                }
                let element = state.element.multiply(&reflections[root_idx]);
                out.push((lo + offset, root_idx, element, spent));
            }
        }
        let _ = roots;
        out
    };

    let threads = config.threads.max(1).min(batch.len().max(1));
    if threads == 1 {
        return expand_range(0, batch.len());
    }
    let chunk = batch.len().div_ceil(threads);
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for t in 0..threads {
            let lo = t * chunk;
            let hi = ((t + 1) * chunk).min(batch.len());
            if lo >= hi {
                break;
            }
            let expand_range = &expand_range;
            handles.push(scope.spawn(move || expand_range(lo, hi)));
        }
        let mut out = Vec::new();
        for handle in handles {
            out.extend(handle.join().expect("worker thread panicked"));
        }
        out
    })
}

/// A bounded slice of the moment graph: every vertex reachable from the
/// identity within `budget`, and every edge between slice vertices whose
/// label fits the budget.
#[derive(Debug, Clone)]
pub struct MomentGraphSlice {
    pub vertices: Vec<AffinePerm>,
    pub edges: Vec<(AffinePerm, AffinePerm, PosRealRoot)>,
}

pub fn moment_graph_slice(n: usize, budget: &Degree, config: &SearchConfig) -> Result<MomentGraphSlice> {
    if budget.n() != n {
        return Err(Error::RankMismatch(budget.n(), n));
    }
    let run = neighborhood_bfs(&AffinePerm::identity(n), budget, config)?;
    let vertex_set: BTreeSet<AffinePerm> = run.visited.iter().cloned().collect();
    let roots = roots_within(budget, config.level_zero_only);
    let mut edges = Vec::new();
    for u in &run.visited {
        for root in &roots {
            let v = u.multiply(&reflection(root));
            if vertex_set.contains(&v) && *u < v {
                edges.push((u.clone(), v.clone(), root.clone()));
            }
        }
    }
    Ok(MomentGraphSlice {
        vertices: run.visited,
        edges,
    })
}

/// Reference search without dominance pruning, deduplicating exact
/// (element, spent) states only. Exponential; test use.
pub fn neighborhood_bfs_unpruned(
    u: &AffinePerm,
    d: &Degree,
    config: &SearchConfig,
) -> Result<BTreeSet<AffinePerm>> {
    if d.sum() > config.budget_sum_cap {
        return Err(Error::BudgetCap {
            sum: d.sum(),
            cap: config.budget_sum_cap,
        });
    }
    let n = d.n();
    let roots = roots_within(d, config.level_zero_only);
    let reflections: Vec<AffinePerm> = roots.iter().map(reflection).collect();
    let mut seen_states: BTreeSet<(AffinePerm, Degree)> = BTreeSet::new();
    let mut queue: VecDeque<(AffinePerm, Degree)> = VecDeque::new();
    for start in lower_interval(u)? {
        let state = (start, Degree::zero(n));
        if seen_states.insert(state.clone()) {
            queue.push_back(state);
        }
    }
    while let Some((element, spent)) = queue.pop_front() {
        for (idx, root) in roots.iter().enumerate() {
            let next_spent = spent.add(&root.coeffs());
            if !next_spent.leq(d) {
                continue;
            }
            let next = element.multiply(&reflections[idx]);
            let state = (next, next_spent);
            if seen_states.insert(state.clone()) {
                queue.push_back(state);
            }
        }
    }
    Ok(seen_states.into_iter().map(|(e, _)| e).collect())
}
