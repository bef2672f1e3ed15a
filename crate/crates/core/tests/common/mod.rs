//! Independent oracles and corpus helpers shared by the integration tests.
//!
//! Nothing here calls the library's group-theoretic code: permutations are
//! plain vectors and groups are closed by hand, so agreement with the
//! library is a real cross-check.

#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use affquandle::affine::{abelian_groups_of_order, all_automorphisms, make_affine};
use affquandle::Quandle;

pub type Perm = Vec<usize>;

pub fn compose(a: &Perm, b: &Perm) -> Perm {
    b.iter().map(|&x| a[x]).collect()
}

pub fn inverse(a: &Perm) -> Perm {
    let mut inv = vec![0; a.len()];
    for (x, &y) in a.iter().enumerate() {
        inv[y] = x;
    }
    inv
}

pub fn row(q: &Quandle, a: usize) -> Perm {
    (0..q.size()).map(|b| q.op(a, b)).collect()
}

/// Closure of a generating set by breadth-first search.
pub fn close(n: usize, gens: &[Perm]) -> Vec<Perm> {
    let id: Perm = (0..n).collect();
    let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    let mut out = Vec::new();
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let r = compose(g, &p);
            if seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
        out.push(p);
    }
    out
}

/// `Dis(Q)` from the generators `L_a L_b⁻¹` over all pairs.
pub fn dis(q: &Quandle) -> Vec<Perm> {
    let rows: Vec<Perm> = (0..q.size()).map(|a| row(q, a)).collect();
    let mut gens = HashSet::new();
    for a in &rows {
        for b in &rows {
            gens.insert(compose(a, &inverse(b)));
        }
    }
    close(q.size(), &gens.into_iter().collect::<Vec<_>>())
}

pub fn lmlt(q: &Quandle) -> Vec<Perm> {
    let rows: Vec<Perm> = (0..q.size()).map(|a| row(q, a)).collect();
    close(q.size(), &rows)
}

pub fn all_commute(g: &[Perm]) -> bool {
    g.iter().all(|a| g.iter().all(|b| compose(a, b) == compose(b, a)))
}

pub fn semiregular(g: &[Perm]) -> bool {
    g.iter().all(|p| p.iter().enumerate().all(|(x, &y)| x != y) || p.iter().enumerate().all(|(x, &y)| x == y))
}

pub fn medial_by_quadruples(q: &Quandle) -> bool {
    let n = q.size();
    (0..n).all(|x| {
        (0..n).all(|y| {
            (0..n).all(|u| (0..n).all(|v| q.op(q.op(x, y), q.op(u, v)) == q.op(q.op(x, u), q.op(y, v))))
        })
    })
}

/// `|{L_x L_e⁻¹ : x ∈ Q}|`.
pub fn displacement_set_size(q: &Quandle, e: usize) -> usize {
    let le_inv = inverse(&row(q, e));
    (0..q.size()).map(|x| compose(&row(q, x), &le_inv)).collect::<HashSet<_>>().len()
}

/// Sorted orbit sizes of the action of the left translations.
pub fn orbit_sizes(q: &Quandle) -> Vec<usize> {
    let n = q.size();
    let mut seen = vec![false; n];
    let mut sizes = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![s];
        let mut size = 0;
        while let Some(x) = stack.pop() {
            size += 1;
            for a in 0..n {
                let y = q.op(a, x);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        sizes.push(size);
    }
    sizes.sort_unstable();
    sizes
}

/// Every affine quandle `Aff(A, f)` with `|A| ≤ max_order`.
pub fn affine_quandles_up_to(max_order: usize) -> Vec<Quandle> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        for g in abelian_groups_of_order(n) {
            for f in all_automorphisms(&g) {
                out.push(make_affine(g.clone(), f).quandle);
            }
        }
    }
    out
}

/// A small set whose closure under the operation is all of `q`.
fn generating_set(q: &Quandle) -> Vec<usize> {
    let n = q.size();
    let mut gens = Vec::new();
    let mut inside = vec![false; n];
    while let Some(x) = inside.iter().position(|&b| !b) {
        gens.push(x);
        inside = vec![false; n];
        let mut list = gens.clone();
        for &g in &gens {
            inside[g] = true;
        }
        let mut i = 0;
        while i < list.len() {
            for j in 0..=i {
                for (a, b) in [(list[i], list[j]), (list[j], list[i])] {
                    let c = q.op(a, b);
                    if !inside[c] {
                        inside[c] = true;
                        list.push(c);
                    }
                }
            }
            i += 1;
        }
    }
    gens
}

/// Whether some homomorphism `from → to` is onto, by trying every image
/// of a generating set of `from`.
pub fn has_surjection(from: &Quandle, to: &Quandle) -> bool {
    if from.size() < to.size() {
        return false;
    }
    let gens = generating_set(from);
    let m = to.size();
    let mut images = vec![0usize; gens.len()];
    loop {
        if let Some(h) = extend(from, to, &gens, &images) {
            let mut hit = vec![false; m];
            for &y in &h {
                hit[y] = true;
            }
            if hit.iter().all(|&b| b) {
                return true;
            }
        }
        let mut i = 0;
        loop {
            if i == images.len() {
                return false;
            }
            images[i] += 1;
            if images[i] < m {
                break;
            }
            images[i] = 0;
            i += 1;
        }
    }
}

/// The homomorphism determined by `gens ↦ images`, if one exists.
fn extend(from: &Quandle, to: &Quandle, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    const UNSET: usize = usize::MAX;
    let mut h = vec![UNSET; from.size()];
    let mut list = Vec::new();
    for (&g, &y) in gens.iter().zip(images) {
        if h[g] != UNSET && h[g] != y {
            return None;
        }
        if h[g] == UNSET {
            h[g] = y;
            list.push(g);
        }
    }
    let mut i = 0;
    while i < list.len() {
        for j in 0..=i {
            for (a, b) in [(list[i], list[j]), (list[j], list[i])] {
                let c = from.op(a, b);
                let y = to.op(h[a], h[b]);
                if h[c] == UNSET {
                    h[c] = y;
                    list.push(c);
                } else if h[c] != y {
                    return None;
                }
            }
        }
        i += 1;
    }
    Some(h)
}
