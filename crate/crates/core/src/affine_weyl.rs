//! The affine Weyl group of type `A_{n-1}^(1)` as affine permutations.
//!
//! An element is a bijection `w: Z -> Z` with `w(i + n) = w(i) + n` and
//! `sum(w(i) - i) = 0` over a period, stored by its window `[w(1), ..., w(n)]`.
//! Windows give O(n) equality, canonical hashing and an inversion-count
//! length; the (finite part, translation) factorization is recovered by
//! reducing the window mod n.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::roots::{check_rank, PosRealRoot};

/// An element of the affine Weyl group in window notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffinePerm {
    window: Vec<i64>,
}

/// A word in the simple reflections `s_0, ..., s_{n-1}` evaluating to its
/// owning element with as many letters as the element's length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedWord {
    letters: Vec<usize>,
}

impl ReducedWord {
    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self.letters.iter().map(|i| format!("s{i}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl AffinePerm {
    pub fn identity(n: usize) -> Self {
        AffinePerm {
            window: (1..=n as i64).collect(),
        }
    }

    /// The simple reflection `s_i`, `0 <= i < n`.
    pub fn simple(i: usize, n: usize) -> Self {
        assert!(i < n, "simple index {i} out of range for n={n}");
        AffinePerm::identity(n).mul_simple_right(i)
    }

    /// Validates bijectivity (distinct residues mod n) and the window-sum
    /// normalization.
    pub fn from_window(window: Vec<i64>) -> Result<Self> {
        let n = window.len();
        check_rank(n).map_err(|_| {
            Error::InvalidWindow(format!("{window:?}"), format!("rank {n} below 3"))
        })?;
        let residues: BTreeSet<i64> = window.iter().map(|w| w.rem_euclid(n as i64)).collect();
        if residues.len() != n {
            return Err(Error::InvalidWindow(
                format!("{window:?}"),
                "residues mod n are not pairwise distinct".into(),
            ));
        }
        let expected: i64 = (n as i64) * (n as i64 + 1) / 2;
        let total: i64 = window.iter().sum();
        if total != expected {
            return Err(Error::InvalidWindow(
                format!("{window:?}"),
                format!("window sums to {total}, expected {expected}"),
            ));
        }
        Ok(AffinePerm { window })
    }

    pub fn rank(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    pub fn is_identity(&self) -> bool {
        self.window
            .iter()
            .enumerate()
            .all(|(i, &w)| w == i as i64 + 1)
    }

    /// `w(x)` for any integer `x`, via `w(x + n) = w(x) + n`.
    pub fn eval(&self, x: i64) -> i64 {
        let n = self.rank() as i64;
        let q = (x - 1).div_euclid(n);
        let r = (x - 1).rem_euclid(n) as usize;
        self.window[r] + q * n
    }

    /// Group product `self * other` as composition of bijections.
    pub fn multiply(&self, other: &AffinePerm) -> AffinePerm {
        assert_eq!(self.rank(), other.rank(), "rank mismatch in multiply");
        AffinePerm {
            window: other.window.iter().map(|&x| self.eval(x)).collect(),
        }
    }

    pub fn inverse(&self) -> AffinePerm {
        let n = self.rank();
        let mut window = vec![0i64; n];
        for (j, &w) in self.window.iter().enumerate() {
            let r = (w - 1).rem_euclid(n as i64) as usize;
            let q = (w - 1).div_euclid(n as i64);
            // self(j+1) = w, so inverse maps the residue class of w back
            window[r] = (j as i64 + 1) - q * n as i64;
        }
        AffinePerm { window }
    }

    /// Coxeter length as the affine inversion count on the window.
    pub fn length(&self) -> usize {
        let n = self.rank() as i64;
        let mut total: i64 = 0;
        for i in 0..self.window.len() {
            for j in (i + 1)..self.window.len() {
                total += (self.window[j] - self.window[i]).div_euclid(n).abs();
            }
        }
        total as usize
    }

    /// Right descent at `i`: multiplying by `s_i` on the right drops length.
    pub fn right_descent(&self, i: usize) -> bool {
        let n = self.rank();
        assert!(i < n, "descent index {i} out of range");
        if i == 0 {
            self.window[n - 1] - n as i64 > self.window[0]
        } else {
            self.window[i - 1] > self.window[i]
        }
    }

    /// `self * s_i`.
    pub fn mul_simple_right(&self, i: usize) -> AffinePerm {
        let n = self.rank();
        assert!(i < n, "simple index {i} out of range");
        let mut window = self.window.clone();
        if i == 0 {
            window[0] = self.window[n - 1] - n as i64;
            window[n - 1] = self.window[0] + n as i64;
        } else {
            window.swap(i - 1, i);
        }
        AffinePerm { window }
    }

    /// `s_i * self`.
    pub fn mul_simple_left(&self, i: usize) -> AffinePerm {
        let n = self.rank() as i64;
        let i = i as i64;
        let window = self
            .window
            .iter()
            .map(|&v| {
                let r = v.rem_euclid(n);
                if r == i {
                    v + 1
                } else if r == (i + 1).rem_euclid(n) {
                    v - 1
                } else {
                    v
                }
            })
            .collect();
        AffinePerm { window }
    }

    /// Greedy right-descent reduced word; evaluates back to `self` and has
    /// `length()` letters.
    pub fn reduced_word(&self) -> ReducedWord {
        let n = self.rank();
        let mut letters = Vec::new();
        let mut w = self.clone();
        while !w.is_identity() {
            let i = (0..n)
                .find(|&i| w.right_descent(i))
                .expect("non-identity element has a right descent");
            letters.push(i);
            w = w.mul_simple_right(i);
        }
        letters.reverse();
        ReducedWord { letters }
    }

    /// `(v, lambda)` with `self = v * t_lambda`, `v` the finite part (window
    /// reduced mod n) and `lambda` the translation in `e_1..e_n` coordinates
    /// (entries sum to zero).
    pub fn finite_translation_parts(&self) -> (AffinePerm, Vec<i64>) {
        let n = self.rank() as i64;
        let finite: Vec<i64> = self
            .window
            .iter()
            .map(|&w| (w - 1).rem_euclid(n) + 1)
            .collect();
        let lambda: Vec<i64> = self
            .window
            .iter()
            .zip(&finite)
            .map(|(&w, &v)| (w - v) / n)
            .collect();
        (AffinePerm { window: finite }, lambda)
    }

    /// Length recomputed from the (finite, translation) factorization:
    /// a sum of `|chi(v(a) > v(b)) + lambda_a - lambda_b|` over `a < b`.
    pub fn length_by_translation_formula(&self) -> usize {
        let (v, lambda) = self.finite_translation_parts();
        let n = self.rank();
        let mut total: i64 = 0;
        for a in 0..n {
            for b in (a + 1)..n {
                let chi = i64::from(v.window[a] > v.window[b]);
                total += (chi + lambda[a] - lambda[b]).abs();
            }
        }
        total as usize
    }

    /// Image under the k-th power of the diagram rotation `s_i -> s_{i+k}`.
    pub fn rotate_indices(&self, k: i64) -> AffinePerm {
        let n = self.rank();
        let word = self.reduced_word();
        let letters: Vec<usize> = word
            .letters()
            .iter()
            .map(|&l| (l as i64 + k).rem_euclid(n as i64) as usize)
            .collect();
        eval_word(&letters, n)
    }
}

impl fmt::Display for AffinePerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(|w| w.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Evaluate a word in the simple reflections, left to right.
pub fn eval_word(letters: &[usize], n: usize) -> AffinePerm {
    let mut w = AffinePerm::identity(n);
    for &l in letters {
        w = w.mul_simple_right(l);
    }
    w
}

/// `base^exponent` by binary exponentiation.
pub fn power(base: &AffinePerm, exponent: i64) -> AffinePerm {
    assert!(exponent >= 0, "negative powers go through inverse()");
    let mut result = AffinePerm::identity(base.rank());
    let mut square = base.clone();
    let mut left = exponent;
    while left > 0 {
        if left & 1 == 1 {
            result = result.multiply(&square);
        }
        square = square.multiply(&square);
        left >>= 1;
    }
    result
}

/// The reflection `s_r` of a positive real root.
///
/// Level-0 roots use the palindrome word over the cyclic interval; a root
/// `m*c + beta` uses the product `(s_beta s_beta')^m s_beta` with
/// `beta + beta' = c`.
pub fn reflection(r: &PosRealRoot) -> AffinePerm {
    let n = r.n();
    let (level, beta) = r.decompose();
    let interval = beta.interval();
    let mut letters = interval.clone();
    letters.extend(interval.iter().rev().skip(1));
    let s_beta = eval_word(&letters, n);
    if level == 0 {
        return s_beta;
    }
    let s_comp = reflection(&beta.complement_c().expect("beta has level 0"));
    let step = s_beta.multiply(&s_comp);
    let mut out = AffinePerm::identity(n);
    for _ in 0..level {
        out = out.multiply(&step);
    }
    out.multiply(&s_beta)
}

/// The translation `t_gamma` for `gamma` in the finite root lattice, given by
/// its coefficients over `a_1..a_{n-1}`.
pub fn translation(gamma: &[i64], n: usize) -> Result<AffinePerm> {
    check_rank(n)?;
    if gamma.len() != n - 1 {
        return Err(Error::RankMismatch(gamma.len() + 1, n));
    }
    // convert root-lattice coordinates to e_1..e_n coordinates
    let mut lambda = vec![0i64; n];
    for i in 0..n {
        let left = if i == 0 { 0 } else { gamma[i - 1] };
        let right = if i == n - 1 { 0 } else { gamma[i] };
        lambda[i] = right - left;
    }
    let window = (0..n).map(|i| (i as i64 + 1) + n as i64 * lambda[i]).collect();
    Ok(AffinePerm { window })
}

/// Linear action of `w` on the affine root lattice, on coefficient vectors
/// over `a_0..a_{n-1}` (the delta coefficient rides along since `w` fixes
/// `c = (1,...,1)`).
pub fn act_on_root(w: &AffinePerm, v: &[i64]) -> Vec<i64> {
    assert_eq!(w.rank(), v.len(), "rank mismatch in act_on_root");
    let word = w.reduced_word();
    let mut out = v.to_vec();
    for &l in word.letters().iter().rev() {
        act_simple(l, &mut out);
    }
    out
}

fn act_simple(i: usize, v: &mut [i64]) {
    let n = v.len();
    let prev = (i + n - 1) % n;
    let next = (i + 1) % n;
    // s_i(v) = v - <v, a_i^vee> a_i
    v[i] = v[prev] + v[next] - v[i];
}

/// A vector of the affine root lattice is a negative root iff all entries
/// are <= 0 and not all zero.
pub fn is_negative_root_vec(v: &[i64]) -> bool {
    v.iter().all(|&x| x <= 0) && v.iter().any(|&x| x != 0)
}

/// Memo table for Bruhat-order queries, keyed on window pairs.
/// Confine one cache per thread; entries are only ever inserted.
#[derive(Debug, Default)]
pub struct BruhatCache {
    memo: HashMap<(AffinePerm, AffinePerm), bool>,
}

impl BruhatCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// `u <= v` in Bruhat order, by the lifting recursion: for `i` a right
    /// descent of `v`, `u <= v` iff `us_i <= vs_i` (when `us_i < u`) or
    /// `u <= vs_i` (otherwise).
    pub fn leq(&mut self, u: &AffinePerm, v: &AffinePerm) -> bool {
        assert_eq!(u.rank(), v.rank(), "rank mismatch in bruhat_leq");
        if u.is_identity() {
            return true;
        }
        let (lu, lv) = (u.length(), v.length());
        if lu > lv {
            return false;
        }
        if lu == lv {
            return u == v;
        }
        let key = (u.clone(), v.clone());
        if let Some(&cached) = self.memo.get(&key) {
            return cached;
        }
        let n = v.rank();
        let i = (0..n)
            .find(|&i| v.right_descent(i))
            .expect("v is not the identity here");
        let vs = v.mul_simple_right(i);
        let answer = if u.right_descent(i) {
            self.leq(&u.mul_simple_right(i), &vs)
        } else {
            self.leq(u, &vs)
        };
        self.memo.insert(key, answer);
        answer
    }
}

/// One-off Bruhat comparison.
pub fn bruhat_leq(u: &AffinePerm, v: &AffinePerm) -> bool {
    BruhatCache::new().leq(u, v)
}

/// The Bruhat-maximal elements of a set, deduplicated and sorted by window.
pub fn bruhat_maximal(elements: &[AffinePerm]) -> Vec<AffinePerm> {
    bruhat_maximal_with_cache(elements, &mut BruhatCache::new())
}

pub fn bruhat_maximal_with_cache(
    elements: &[AffinePerm],
    cache: &mut BruhatCache,
) -> Vec<AffinePerm> {
    let distinct: BTreeSet<AffinePerm> = elements.iter().cloned().collect();
    distinct
        .iter()
        .filter(|v| {
            !distinct
                .iter()
                .any(|u| *u != **v && cache.leq(v, u))
        })
        .cloned()
        .collect()
}

/// Hecke (Demazure) product: fold a reduced word of `v` into `u`, multiplying
/// only where the length rises. Associative, independent of the word chosen.
pub fn hecke_mul(u: &AffinePerm, v: &AffinePerm) -> AffinePerm {
    assert_eq!(u.rank(), v.rank(), "rank mismatch in hecke_mul");
    let mut w = u.clone();
    for &l in v.reduced_word().letters() {
        if !w.right_descent(l) {
            w = w.mul_simple_right(l);
        }
    }
    w
}

/// All elements of length at most `max_len`, by breadth-first expansion.
pub fn elements_up_to_length(n: usize, max_len: usize) -> Vec<AffinePerm> {
    let mut seen: BTreeSet<AffinePerm> = BTreeSet::new();
    let mut frontier = vec![AffinePerm::identity(n)];
    seen.insert(AffinePerm::identity(n));
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in frontier {
            for i in 0..n {
                if !w.right_descent(i) {
                    let longer = w.mul_simple_right(i);
                    if seen.insert(longer.clone()) {
                        next.push(longer);
                    }
                }
            }
        }
        frontier = next;
    }
    seen.into_iter().collect()
}
