//! The affine root system of type `A_{n-1}^(1)` for `n >= 3`.
//!
//! Simple roots are indexed `0..n` on a cyclic Dynkin diagram, with index 0
//! the affine node. Positive real roots below the imaginary class
//! `c = a0 + a1 + ... + a(n-1)` are sums over proper cyclic intervals of
//! indices; a general positive real root is `m*c` plus such an interval root.
//! Degrees are nonnegative integer vectors over the simple roots and double
//! as chain budgets for the moment-graph search.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Least rank covered here; `A_1^(1)` has a doubled bond and different combinatorics.
pub const MIN_RANK: usize = 3;

pub(crate) fn check_rank(n: usize) -> Result<usize> {
    if n < MIN_RANK {
        Err(Error::RankTooSmall(n))
    } else {
        Ok(n)
    }
}

/// Entry of the affine Cartan matrix of the cyclic type-A diagram.
pub fn cartan(n: usize, i: usize, j: usize) -> i64 {
    if i == j {
        2
    } else if (i + 1) % n == j || (j + 1) % n == i {
        -1
    } else {
        0
    }
}

/// Pairing `<a, b^v>` of two coefficient vectors over the affine simple roots.
/// Symmetric in type A; `pairing(r, r) = 2` for every real root `r`.
pub fn pairing_vec(a: &[i64], b: &[i64]) -> i64 {
    let n = a.len();
    assert_eq!(n, b.len(), "pairing requires equal ranks");
    let mut total = 0;
    for i in 0..n {
        if a[i] == 0 {
            continue;
        }
        // row i of the cyclic Cartan matrix touches i-1, i, i+1 only
        let prev = (i + n - 1) % n;
        let next = (i + 1) % n;
        total += a[i] * (2 * b[i] - b[prev] - b[next]);
    }
    total
}

/// A nonnegative integer vector over the `n` affine simple roots.
///
/// Doubles as the coefficient vector of a root and as the budget of a chain
/// in the moment graph. The componentwise order is the root order restricted
/// to nonnegative vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Degree {
    coeffs: Vec<i64>,
}

impl Degree {
    pub fn new(coeffs: Vec<i64>) -> Result<Self> {
        check_rank(coeffs.len())?;
        if let Some(&bad) = coeffs.iter().find(|&&x| x < 0) {
            return Err(Error::Parse {
                what: "degree",
                input: format!("{coeffs:?}"),
                reason: format!("negative entry {bad}"),
            });
        }
        Ok(Degree { coeffs })
    }

    pub fn zero(n: usize) -> Self {
        Degree { coeffs: vec![0; n] }
    }

    /// The imaginary class `c = (1, 1, ..., 1)`.
    pub fn imaginary_c(n: usize) -> Self {
        Degree { coeffs: vec![1; n] }
    }

    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn get(&self, i: usize) -> i64 {
        self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&x| x == 0)
    }

    pub fn sum(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn min_entry(&self) -> i64 {
        *self.coeffs.iter().min().expect("degree is nonempty")
    }

    /// Componentwise partial order (never total for n >= 2).
    pub fn leq(&self, other: &Degree) -> bool {
        self.coeffs.len() == other.coeffs.len()
            && self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &Degree) -> Degree {
        assert_eq!(self.n(), other.n(), "degree rank mismatch");
        Degree {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// `self - other`; rejected unless `other <= self` componentwise.
    pub fn sub(&self, other: &Degree) -> Result<Degree> {
        if !other.leq(self) {
            return Err(Error::IncomparableDegrees(
                self.to_string(),
                other.to_string(),
            ));
        }
        Ok(Degree {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, k: i64) -> Result<Degree> {
        Degree::new(self.coeffs.iter().map(|&x| x * k).collect())
    }

    /// Image under the k-th power of the Dynkin rotation `a_i -> a_{i+k}`.
    /// Preserves the partial order.
    pub fn dynkin_rotate(&self, k: i64) -> Degree {
        let n = self.n() as i64;
        let mut out = vec![0; self.n()];
        for (i, &x) in self.coeffs.iter().enumerate() {
            let j = (i as i64 + k).rem_euclid(n) as usize;
            out[j] = x;
        }
        Degree { coeffs: out }
    }

    /// Support as a set of simple indices.
    pub fn support(&self) -> BTreeSet<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(i, _)| i)
            .collect()
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Degree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let coeffs: Vec<i64> = s
            .split(',')
            .map(|t| {
                t.trim().parse::<i64>().map_err(|e| Error::Parse {
                    what: "degree",
                    input: s.to_string(),
                    reason: e.to_string(),
                })
            })
            .collect::<Result<_>>()?;
        Degree::new(coeffs)
    }
}

/// A positive real root `m*c + p_{i,j}` of the affine root system.
///
/// `p_{i,j}` is the sum of simple roots over the cyclic interval from `i` to
/// `j` inclusive (wrapping through `a_{n-1}, a_0` when `i > j`); the interval
/// never covers all `n` nodes. The pair `(level, interval)` is unique for
/// each positive real root.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PosRealRoot {
    level: i64,
    start: usize,
    end: usize,
    n: usize,
}

impl PosRealRoot {
    pub fn new(n: usize, level: i64, start: usize, end: usize) -> Result<Self> {
        check_rank(n)?;
        let reject = |reason: String| Error::Parse {
            what: "root",
            input: format!("p({start},{end})@{level} at n={n}"),
            reason,
        };
        if level < 0 {
            return Err(reject("negative level".into()));
        }
        if start >= n || end >= n {
            return Err(reject("interval index out of range".into()));
        }
        let root = PosRealRoot {
            level,
            start,
            end,
            n,
        };
        if root.supp_len() == n {
            return Err(reject("interval covers the whole diagram".into()));
        }
        Ok(root)
    }

    /// The simple root `a_i`.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        PosRealRoot::new(n, 0, i, i)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn end(&self) -> usize {
        self.end
    }

    /// Number of simple roots in the interval part.
    pub fn supp_len(&self) -> usize {
        (self.end + self.n - self.start) % self.n + 1
    }

    /// Interval indices in cyclic order from `start` to `end`.
    pub fn interval(&self) -> Vec<usize> {
        (0..self.supp_len())
            .map(|k| (self.start + k) % self.n)
            .collect()
    }

    /// Support of the interval part as a set.
    pub fn support(&self) -> BTreeSet<usize> {
        self.interval().into_iter().collect()
    }

    pub fn contains(&self, i: usize) -> bool {
        (i + self.n - self.start) % self.n < self.supp_len()
    }

    /// Coefficient vector over the simple roots; the level contributes to
    /// every entry.
    pub fn coeffs(&self) -> Degree {
        let mut v = vec![self.level; self.n];
        for i in self.interval() {
            v[i] += 1;
        }
        Degree::new(v).expect("root coefficients are nonnegative")
    }

    /// `(m, beta)` with `self = m*c + beta` and `beta < c`; unique.
    pub fn decompose(&self) -> (i64, PosRealRoot) {
        (
            self.level,
            PosRealRoot {
                level: 0,
                start: self.start,
                end: self.end,
                n: self.n,
            },
        )
    }

    pub fn with_level(&self, level: i64) -> Result<PosRealRoot> {
        PosRealRoot::new(self.n, level, self.start, self.end)
    }

    /// Rebuild a root from a coefficient vector, if the vector has the form
    /// `m*c +` indicator of a proper nonempty cyclic interval.
    pub fn from_coeffs(coeffs: &[i64]) -> Option<PosRealRoot> {
        let n = coeffs.len();
        if n < MIN_RANK {
            return None;
        }
        let m = *coeffs.iter().min()?;
        if m < 0 {
            return None;
        }
        let indicator: Vec<i64> = coeffs.iter().map(|&x| x - m).collect();
        if indicator.iter().any(|&x| x != 0 && x != 1) {
            return None;
        }
        let support: Vec<usize> = (0..n).filter(|&i| indicator[i] == 1).collect();
        if support.is_empty() || support.len() == n {
            return None;
        }
        // a proper cyclic interval has exactly one index whose successor is outside
        let ends: Vec<usize> = support
            .iter()
            .copied()
            .filter(|&i| indicator[(i + 1) % n] == 0)
            .collect();
        if ends.len() != 1 {
            return None;
        }
        let end = ends[0];
        let start = (end + n + 1 - support.len()) % n;
        Some(PosRealRoot {
            level: m,
            start,
            end,
            n,
        })
    }

    /// For a level-0 root `beta`, the unique level-0 root `beta'` with
    /// `beta + beta' = c` (the complementary cyclic interval).
    pub fn complement_c(&self) -> Result<PosRealRoot> {
        if self.level != 0 {
            return Err(Error::LevelNotZero(self.to_string()));
        }
        PosRealRoot::new(
            self.n,
            0,
            (self.end + 1) % self.n,
            (self.start + self.n - 1) % self.n,
        )
    }

    pub fn pairing(&self, other: &PosRealRoot) -> i64 {
        pairing_vec(self.coeffs().coeffs(), other.coeffs().coeffs())
    }

    pub fn is_perp(&self, other: &PosRealRoot) -> bool {
        self.pairing(other) == 0
    }

    /// Componentwise `<=` on coefficient vectors.
    pub fn leq(&self, other: &PosRealRoot) -> bool {
        self.coeffs().leq(&other.coeffs())
    }

    /// Strictly greater componentwise.
    pub fn gt(&self, other: &PosRealRoot) -> bool {
        other.leq(self) && self != other
    }

    /// Image under the k-th power of the Dynkin rotation.
    pub fn dynkin_rotate(&self, k: i64) -> PosRealRoot {
        let n = self.n as i64;
        PosRealRoot {
            level: self.level,
            start: (self.start as i64 + k).rem_euclid(n) as usize,
            end: (self.end as i64 + k).rem_euclid(n) as usize,
            n: self.n,
        }
    }
}

impl fmt::Display for PosRealRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.level == 0 {
            let parts: Vec<String> = self.interval().iter().map(|i| format!("a{i}")).collect();
            write!(f, "{}", parts.join("+"))
        } else {
            write!(f, "p({},{})@{}", self.start, self.end, self.level)
        }
    }
}

impl PosRealRoot {
    /// Parse the textual syntax `a0+a1` (level 0) or `p(i,j)@m`.
    pub fn parse_with_rank(s: &str, n: usize) -> Result<Self> {
        check_rank(n)?;
        let err = |reason: String| Error::Parse {
            what: "root",
            input: s.to_string(),
            reason,
        };
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("p(") {
            let (inner, tail) = rest
                .split_once(')')
                .ok_or_else(|| err("missing `)`".into()))?;
            let (i, j) = inner
                .split_once(',')
                .ok_or_else(|| err("expected p(i,j)".into()))?;
            let start: usize = i
                .trim()
                .parse()
                .map_err(|_| err("bad interval start".into()))?;
            let end: usize = j
                .trim()
                .parse()
                .map_err(|_| err("bad interval end".into()))?;
            let level: i64 = match tail.trim() {
                "" => 0,
                t => t
                    .strip_prefix('@')
                    .ok_or_else(|| err("expected @level after p(i,j)".into()))?
                    .trim()
                    .parse()
                    .map_err(|_| err("bad level".into()))?,
            };
            return PosRealRoot::new(n, level, start, end);
        }
        let mut indices = BTreeSet::new();
        for part in s.split('+') {
            let part = part.trim();
            let idx: usize = part
                .strip_prefix('a')
                .ok_or_else(|| err(format!("expected a<i>, got `{part}`")))?
                .parse()
                .map_err(|_| err(format!("bad index in `{part}`")))?;
            if idx >= n {
                return Err(err(format!("index {idx} out of range for n={n}")));
            }
            if !indices.insert(idx) {
                return Err(err(format!("repeated index {idx}")));
            }
        }
        let mut coeffs = vec![0i64; n];
        for i in &indices {
            coeffs[*i] = 1;
        }
        PosRealRoot::from_coeffs(&coeffs)
            .ok_or_else(|| err("indices do not form a proper cyclic interval".into()))
    }
}

/// A finite root `e_a - e_b` with `1 <= a, b <= n`, `a != b`; positive iff `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteRoot {
    pub a: usize,
    pub b: usize,
}

impl FiniteRoot {
    pub fn new(a: usize, b: usize, n: usize) -> Result<Self> {
        check_rank(n)?;
        if a == 0 || b == 0 || a > n || b > n || a == b {
            return Err(Error::Parse {
                what: "finite root",
                input: format!("e{a}-e{b}"),
                reason: format!("need 1 <= a != b <= {n}"),
            });
        }
        Ok(FiniteRoot { a, b })
    }

    pub fn is_positive(&self) -> bool {
        self.a < self.b
    }

    /// All `n(n-1)` finite roots.
    pub fn all(n: usize) -> Result<Vec<FiniteRoot>> {
        check_rank(n)?;
        let mut out = Vec::new();
        for a in 1..=n {
            for b in 1..=n {
                if a != b {
                    out.push(FiniteRoot { a, b });
                }
            }
        }
        Ok(out)
    }

    /// Coefficients over the finite simple roots `a_1..a_{n-1}`:
    /// `e_a - e_b = a_a + ... + a_{b-1}` for `a < b`, negated otherwise.
    pub fn lattice_coeffs(&self, n: usize) -> Vec<i64> {
        let mut v = vec![0i64; n - 1];
        let (lo, hi, sign) = if self.a < self.b {
            (self.a, self.b, 1)
        } else {
            (self.b, self.a, -1)
        };
        for entry in v.iter_mut().take(hi - 1).skip(lo - 1) {
            *entry = sign;
        }
        v
    }
}

/// All `n(n-1)` positive real roots below `c`, in a fixed deterministic order.
pub fn all_roots_below_c(n: usize) -> Result<Vec<PosRealRoot>> {
    check_rank(n)?;
    let mut out = Vec::with_capacity(n * (n - 1));
    for start in 0..n {
        for len in 1..n {
            let end = (start + len - 1) % n;
            out.push(PosRealRoot::new(n, 0, start, end)?);
        }
    }
    Ok(out)
}

/// The common support of the interval parts of two level-0 roots, read as a
/// sum of simple roots.
pub fn intersection_support(a: &PosRealRoot, b: &PosRealRoot) -> BTreeSet<usize> {
    a.support().intersection(&b.support()).copied().collect()
}

/// How the common support of two level-0 roots decomposes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Intersection {
    Empty,
    /// One cyclic interval, itself a root.
    Root(PosRealRoot),
    /// Two disjoint cyclic intervals; the intersection is their sum.
    TwoRoots(PosRealRoot, PosRealRoot),
}

/// Classify the intersection of two level-0 roots: empty, one interval, or
/// two intervals. Two proper cyclic intervals cannot meet in more pieces.
pub fn classify_intersection(a: &PosRealRoot, b: &PosRealRoot) -> Intersection {
    assert_eq!(a.n(), b.n(), "rank mismatch");
    let n = a.n();
    let common = intersection_support(a, b);
    if common.is_empty() {
        return Intersection::Empty;
    }
    // split the common support into maximal cyclic runs
    let runs = cyclic_runs(&common, n);
    match runs.as_slice() {
        [r] => Intersection::Root(r.clone()),
        [r1, r2] => Intersection::TwoRoots(r1.clone(), r2.clone()),
        other => unreachable!(
            "two cyclic intervals meet in at most two runs, got {}",
            other.len()
        ),
    }
}

/// Maximal cyclic runs of a proper subset of `Z/n`, as level-0 roots,
/// ordered by start index.
pub(crate) fn cyclic_runs(support: &BTreeSet<usize>, n: usize) -> Vec<PosRealRoot> {
    if support.is_empty() {
        return Vec::new();
    }
    assert!(support.len() < n, "support covers the whole cycle");
    let mut runs = Vec::new();
    for &i in support {
        if support.contains(&((i + n - 1) % n)) {
            continue; // not the start of a run
        }
        let mut end = i;
        while support.contains(&((end + 1) % n)) {
            end = (end + 1) % n;
        }
        runs.push(PosRealRoot::new(n, 0, i, end).expect("run is a proper interval"));
    }
    runs.sort_by_key(|r| r.start());
    runs
}

/// Enumerate every degree of rank `n` with entry sum at most `k`,
/// lexicographically.
pub fn degrees_with_sum_at_most(n: usize, k: i64) -> Vec<Degree> {
    let mut out = Vec::new();
    let mut current = vec![0i64; n];
    fn rec(current: &mut Vec<i64>, pos: usize, left: i64, out: &mut Vec<Degree>) {
        if pos == current.len() {
            out.push(Degree::new(current.clone()).expect("entries are nonnegative"));
            return;
        }
        for v in 0..=left {
            current[pos] = v;
            rec(current, pos + 1, left - v, out);
        }
        current[pos] = 0;
    }
    rec(&mut current, 0, k, &mut out);
    out
}
