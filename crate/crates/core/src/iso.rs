//! Backtracking isomorphism search for small quandles.
//!
//! Candidates are pruned by a per-element signature (orbit size, Cayley
//! kernel block size, number of elements fixing it, and cycle type of the
//! left translation). Every choice is propagated through the
//! operation: once `a ↦ a'` and `b ↦ b'` are fixed, `a*b ↦ a'*b'` is
//! forced, so in practice only a generating set is ever guessed.

use std::collections::HashMap;

use crate::invariants::{cayley_kernel, orbits};
use crate::perm::Permutation;
use crate::quandle::Quandle;

type Signature = (usize, usize, usize, Vec<usize>);

fn signatures(q: &Quandle) -> Vec<Signature> {
    let orbs = orbits(q);
    let kernel = cayley_kernel(q);
    let n = q.size();
    (0..n)
        .map(|a| {
            let orbit = orbs.blocks()[orbs.block_of(a)].len();
            let block = kernel.blocks()[kernel.block_of(a)].len();
            let fixers = (0..n).filter(|&b| q.op(b, a) == a).count();
            (orbit, block, fixers, q.left_translation(a).cycle_type())
        })
        .collect()
}

/// An isomorphism invariant: the sorted multiset of element signatures.
pub fn fingerprint(q: &Quandle) -> Vec<(usize, usize, usize, Vec<usize>)> {
    let mut s = signatures(q);
    s.sort();
    s
}

struct Search<'a> {
    q1: &'a Quandle,
    q2: &'a Quandle,
    sig1: Vec<Signature>,
    sig2: Vec<Signature>,
    forward: Vec<usize>,
    backward: Vec<usize>,
    assigned: Vec<usize>,
}

const UNSET: usize = usize::MAX;

impl Search<'_> {
    fn assign(&mut self, a: usize, b: usize) -> bool {
        if self.forward[a] != UNSET {
            return self.forward[a] == b;
        }
        if self.backward[b] != UNSET || self.sig1[a] != self.sig2[b] {
            return false;
        }
        self.forward[a] = b;
        self.backward[b] = a;
        self.assigned.push(a);
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.assigned.len() > mark {
            let a = self.assigned.pop().unwrap();
            self.backward[self.forward[a]] = UNSET;
            self.forward[a] = UNSET;
        }
    }

    /// Closes the partial map under the operation; false on conflict.
    fn propagate(&mut self, from: usize) -> bool {
        let mut done = from;
        while done < self.assigned.len() {
            let x = self.assigned[done];
            done += 1;
            let mut i = 0;
            while i < done {
                let y = self.assigned[i];
                i += 1;
                for (u, v) in [(x, y), (y, x)] {
                    let target = self.q2.op(self.forward[u], self.forward[v]);
                    if !self.assign(self.q1.op(u, v), target) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn run(&mut self) -> bool {
        let Some(a) = (0..self.q1.size()).find(|&a| self.forward[a] == UNSET) else {
            return true;
        };
        for b in 0..self.q2.size() {
            if self.backward[b] != UNSET || self.sig1[a] != self.sig2[b] {
                continue;
            }
            let mark = self.assigned.len();
            self.assign(a, b);
            // earlier entries are already closed, but pairs with the new
            // element are not, so restart propagation from zero
            if self.propagate(0) && self.run() {
                return true;
            }
            self.undo_to(mark);
        }
        false
    }
}

/// An isomorphism `q1 → q2` as a permutation (`x ↦ image`), if one exists.
pub fn is_isomorphic(q1: &Quandle, q2: &Quandle) -> Option<Permutation> {
    if q1.size() != q2.size() {
        return None;
    }
    let sig1 = signatures(q1);
    let sig2 = signatures(q2);
    let mut s1 = sig1.clone();
    let mut s2 = sig2.clone();
    s1.sort();
    s2.sort();
    if s1 != s2 {
        return None;
    }
    search_with(q1, q2, sig1, sig2)
}

fn search_with(q1: &Quandle, q2: &Quandle, sig1: Vec<Signature>, sig2: Vec<Signature>) -> Option<Permutation> {
    let n = q1.size();
    let mut search = Search {
        q1,
        q2,
        sig1,
        sig2,
        forward: vec![UNSET; n],
        backward: vec![UNSET; n],
        assigned: Vec::new(),
    };
    if search.run() {
        let map = Permutation::new(search.forward).expect("complete injective map");
        debug_assert!(is_isomorphism(q1, q2, &map));
        Some(map)
    } else {
        None
    }
}

/// One representative per isomorphism class among the quandles offered.
#[derive(Debug, Default)]
pub struct IsoClasses {
    buckets: HashMap<Vec<Signature>, Vec<(Quandle, Vec<Signature>)>>,
    reps: Vec<Quandle>,
}

impl IsoClasses {
    pub fn new() -> Self {
        Self::default()
    }

    /// Keeps `q` if it is not isomorphic to a stored representative.
    /// Returns whether it was kept.
    pub fn insert(&mut self, q: Quandle) -> bool {
        let sig = signatures(&q);
        let mut key = sig.clone();
        key.sort();
        let bucket = self.buckets.entry(key).or_default();
        for (rep, rep_sig) in bucket.iter() {
            if search_with(&q, rep, sig.clone(), rep_sig.clone()).is_some() {
                return false;
            }
        }
        bucket.push((q.clone(), sig));
        self.reps.push(q);
        true
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Representatives in insertion order.
    pub fn representatives(&self) -> &[Quandle] {
        &self.reps
    }

    pub fn into_representatives(self) -> Vec<Quandle> {
        self.reps
    }
}

/// Checks that `map` is a bijection preserving the operation.
pub fn is_isomorphism(q1: &Quandle, q2: &Quandle, map: &Permutation) -> bool {
    q1.size() == q2.size()
        && map.degree() == q1.size()
        && (0..q1.size()).all(|a| {
            (0..q1.size()).all(|b| map.apply(q1.op(a, b)) == q2.op(map.apply(a), map.apply(b)))
        })
}
