#![allow(dead_code)] // each test target uses its own subset of these helpers

use std::collections::BTreeSet;

use curvenbhd::affine_weyl::{eval_word, hecke_mul, AffinePerm};
use curvenbhd::neighborhoods::NbhdResult;
use curvenbhd::oracle::OracleRun;
use curvenbhd::roots::{Degree, PosRealRoot};

pub fn deg(v: &[i64]) -> Degree {
    Degree::new(v.to_vec()).unwrap()
}

pub fn root(n: usize, start: usize, end: usize) -> PosRealRoot {
    PosRealRoot::new(n, 0, start, end).unwrap()
}

pub fn word(letters: &[usize], n: usize) -> AffinePerm {
    eval_word(letters, n)
}

pub fn result_perms(result: &NbhdResult) -> BTreeSet<AffinePerm> {
    result.elements.iter().map(|e| e.perm.clone()).collect()
}

pub fn oracle_perms(run: &OracleRun) -> BTreeSet<AffinePerm> {
    result_perms(&run.result)
}

/// Hecke product of a list of reflections, left to right.
pub fn hecke_chain(roots: &[&PosRealRoot], n: usize) -> AffinePerm {
    roots.iter().fold(AffinePerm::identity(n), |acc, r| {
        hecke_mul(&acc, &curvenbhd::affine_weyl::reflection(r))
    })
}

/// A tiny deterministic generator for reproducible random sweeps.
pub struct XorShift(u64);

impl XorShift {
    pub fn new(seed: u64) -> Self {
        XorShift(seed.max(1))
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    pub fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }

    pub fn word(&mut self, n: usize, max_len: usize) -> Vec<usize> {
        let len = self.below(max_len + 1);
        (0..len).map(|_| self.below(n)).collect()
    }
}
