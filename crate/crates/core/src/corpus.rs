//! Exhaustive enumeration of small test objects: every valid mesh over a
//! given list of groups, and the affine quandles `Aff(Z_m, u)`.
//!
//! Meshes are enumerated by backtracking. Homomorphisms are assigned in
//! row-major order and each (M3) instance is checked as soon as its four
//! maps are fixed; constants are handled the same way for (M4).
//!
//! Optionally only one mesh per orbit of the symmetry group is reported.
//! That group permutes indices carrying equal groups and applies an
//! automorphism `θ_i` to every `A_i`, sending `φ_{i,j}` to
//! `θ_j φ_{i,j} θ_i⁻¹` and `c_{i,j}` to `θ_j(c_{i,j})`. Meshes in one orbit
//! have isomorphic sums and row sets related by a group automorphism.

use crate::affine::{
    all_automorphisms, all_homs, make_affine, AbelianGroup, CyclicProduct, GroupAutomorphism, GroupHom,
};
use crate::mesh::{AffineMesh, RawMesh};
use crate::quandle::Quandle;

/// Every abelian group of order at most `max_order`, smallest first.
pub fn groups_up_to(max_order: usize) -> Vec<CyclicProduct> {
    (1..=max_order).flat_map(crate::affine::abelian_groups_of_order).collect()
}

/// Calls `visit` on every valid mesh whose groups are, in index order,
/// exactly `groups`.
pub fn meshes_over(groups: &[CyclicProduct], visit: &mut dyn FnMut(AffineMesh)) {
    enumerate(groups, false, visit)
}

/// Like [`meshes_over`], but only the canonical member of each symmetry
/// orbit is visited.
pub fn meshes_over_up_to_symmetry(groups: &[CyclicProduct], visit: &mut dyn FnMut(AffineMesh)) {
    enumerate(groups, true, visit)
}

/// An index permutation together with an automorphism of every group.
struct Symmetry {
    sigma: Vec<usize>,
    theta: Vec<Vec<usize>>,
    theta_inv: Vec<Vec<usize>>,
}

impl Symmetry {
    fn all(groups: &[CyclicProduct]) -> Vec<Symmetry> {
        let k = groups.len();
        let auts: Vec<Vec<GroupAutomorphism>> = groups.iter().map(all_automorphisms).collect();
        let mut out = Vec::new();
        for sigma in permutations(k) {
            if (0..k).any(|i| groups[sigma[i]] != groups[i]) {
                continue;
            }
            let mut choice = vec![0usize; k];
            loop {
                let theta: Vec<Vec<usize>> = (0..k).map(|i| auts[i][choice[i]].map().to_vec()).collect();
                let theta_inv = theta
                    .iter()
                    .map(|t| {
                        let mut inv = vec![0; t.len()];
                        for (x, &y) in t.iter().enumerate() {
                            inv[y] = x;
                        }
                        inv
                    })
                    .collect();
                out.push(Symmetry { sigma: sigma.clone(), theta, theta_inv });
                let mut i = 0;
                while i < k {
                    choice[i] += 1;
                    if choice[i] < auts[i].len() {
                        break;
                    }
                    choice[i] = 0;
                    i += 1;
                }
                if i == k {
                    break;
                }
            }
        }
        out
    }

    /// Image of the homomorphism matrix, flattened row-major.
    fn act_on_homs(&self, homs: &[Vec<GroupHom>]) -> Vec<Vec<usize>> {
        let k = homs.len();
        let mut out = vec![Vec::new(); k * k];
        for i in 0..k {
            for j in 0..k {
                let map: Vec<usize> = self.theta_inv[i]
                    .iter()
                    .map(|&x| self.theta[j][homs[i][j].apply(x)])
                    .collect();
                out[self.sigma[i] * k + self.sigma[j]] = map;
            }
        }
        out
    }

    fn act_on_consts(&self, consts: &[Vec<usize>], out: &mut [usize]) {
        let k = consts.len();
        for i in 0..k {
            for j in 0..k {
                out[self.sigma[i] * k + self.sigma[j]] = self.theta[j][consts[i][j]];
            }
        }
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

struct Enumeration<'a> {
    groups: &'a [CyclicProduct],
    candidates: Vec<Vec<Vec<GroupHom>>>,
    symmetries: Option<Vec<Symmetry>>,
    visit: &'a mut dyn FnMut(AffineMesh),
}

fn enumerate(groups: &[CyclicProduct], reduce: bool, visit: &mut dyn FnMut(AffineMesh)) {
    let k = groups.len();
    if k == 0 {
        return;
    }
    let candidates: Vec<Vec<Vec<GroupHom>>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    let mut homs = all_homs(&groups[i], &groups[j]);
                    if i == j {
                        homs.retain(|h| h.one_minus(&groups[i]).is_bijective());
                    }
                    homs
                })
                .collect()
        })
        .collect();
    let symmetries = reduce.then(|| Symmetry::all(groups));
    let mut e = Enumeration { groups, candidates, symmetries, visit };
    let mut chosen: Vec<Option<GroupHom>> = vec![None; k * k];
    e.assign_homs(&mut chosen, 0);
}

impl Enumeration<'_> {
    fn assign_homs(&mut self, chosen: &mut Vec<Option<GroupHom>>, pos: usize) {
        let k = self.groups.len();
        if pos == k * k {
            let homs: Vec<Vec<GroupHom>> = (0..k)
                .map(|i| (0..k).map(|j| chosen[i * k + j].clone().expect("assigned")).collect())
                .collect();
            let stabilizer = match &self.symmetries {
                None => None,
                Some(syms) => {
                    let flat: Vec<Vec<usize>> = homs.iter().flatten().map(|h| h.map().to_vec()).collect();
                    let mut stab = Vec::new();
                    for (idx, g) in syms.iter().enumerate() {
                        let image = g.act_on_homs(&homs);
                        match image.cmp(&flat) {
                            std::cmp::Ordering::Less => return,
                            std::cmp::Ordering::Equal => stab.push(idx),
                            std::cmp::Ordering::Greater => {}
                        }
                    }
                    Some(stab)
                }
            };
            let mut consts = vec![vec![0; k]; k];
            self.assign_consts(&homs, stabilizer.as_deref(), &mut consts, 0);
            return;
        }
        let (i, j) = (pos / k, pos % k);
        for idx in 0..self.candidates[i][j].len() {
            chosen[pos] = Some(self.candidates[i][j][idx].clone());
            if m3_holds_so_far(chosen, k) {
                self.assign_homs(chosen, pos + 1);
            }
        }
        chosen[pos] = None;
    }

    /// Off-diagonal constants in row-major order; the diagonal stays zero.
    fn assign_consts(
        &mut self,
        homs: &[Vec<GroupHom>],
        stabilizer: Option<&[usize]>,
        consts: &mut Vec<Vec<usize>>,
        pos: usize,
    ) {
        let groups = self.groups;
        let k = groups.len();
        if pos == k * k {
            if let (Some(stab), Some(syms)) = (stabilizer, &self.symmetries) {
                let flat: Vec<usize> = consts.iter().flatten().copied().collect();
                let mut image = vec![0; k * k];
                for &idx in stab {
                    syms[idx].act_on_consts(consts, &mut image);
                    if image < flat {
                        return;
                    }
                }
            }
            let raw = RawMesh { groups: groups.to_vec(), homs: hom_maps(homs), consts: consts.clone() };
            let mesh = AffineMesh::validate(raw).expect("constraints were checked incrementally");
            (self.visit)(mesh);
            return;
        }
        let (i, j) = (pos / k, pos % k);
        if i == j {
            self.assign_consts(homs, stabilizer, consts, pos + 1);
            return;
        }
        for c in 0..groups[j].order() {
            consts[i][j] = c;
            if m4_holds_so_far(groups, homs, consts, pos) {
                self.assign_consts(homs, stabilizer, consts, pos + 1);
            }
        }
        consts[i][j] = 0;
    }
}

/// Every (M3) instance whose maps are all assigned.
fn m3_holds_so_far(chosen: &[Option<GroupHom>], k: usize) -> bool {
    let get = |i: usize, j: usize| chosen[i * k + j].as_ref();
    for i in 0..k {
        for l in 0..k {
            let mut first: Option<GroupHom> = None;
            for j in 0..k {
                if let (Some(a), Some(b)) = (get(i, j), get(j, l)) {
                    let c = b.compose(a);
                    match &first {
                        None => first = Some(c),
                        Some(f) if *f != c => return false,
                        _ => {}
                    }
                }
            }
        }
    }
    true
}

/// (M4) instances `(i, j, l)` touching only constants at positions
/// `≤ pos` (diagonal entries count as assigned).
fn m4_holds_so_far(groups: &[CyclicProduct], homs: &[Vec<GroupHom>], consts: &[Vec<usize>], pos: usize) -> bool {
    let k = groups.len();
    let assigned = |i: usize, j: usize| i == j || i * k + j <= pos;
    for i in 0..k {
        for j in 0..k {
            for l in 0..k {
                if !(assigned(i, j) && assigned(i, l) && assigned(j, l)) {
                    continue;
                }
                let lhs = homs[j][l].apply(consts[i][j]);
                let rhs = homs[l][l].apply(groups[l].sub(consts[i][l], consts[j][l]));
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

fn hom_maps(homs: &[Vec<GroupHom>]) -> Vec<Vec<Vec<usize>>> {
    homs.iter().map(|row| row.iter().map(|h| h.map().to_vec()).collect()).collect()
}

/// Every valid mesh with `1..=max_indices` indices over groups of order at
/// most `max_order`. Group tuples are taken non-decreasing in the order of
/// [`groups_up_to`], so index permutations of a tuple are not revisited.
pub fn small_meshes(max_order: usize, max_indices: usize, visit: &mut dyn FnMut(AffineMesh)) {
    small_meshes_impl(max_order, max_indices, false, visit)
}

/// Like [`small_meshes`], one mesh per symmetry orbit.
pub fn small_meshes_up_to_symmetry(max_order: usize, max_indices: usize, visit: &mut dyn FnMut(AffineMesh)) {
    small_meshes_impl(max_order, max_indices, true, visit)
}

fn small_meshes_impl(max_order: usize, max_indices: usize, reduce: bool, visit: &mut dyn FnMut(AffineMesh)) {
    let groups = groups_up_to(max_order);
    let mut tuple = Vec::new();
    fn rec(
        groups: &[CyclicProduct],
        start: usize,
        left: usize,
        reduce: bool,
        tuple: &mut Vec<CyclicProduct>,
        visit: &mut dyn FnMut(AffineMesh),
    ) {
        if !tuple.is_empty() {
            enumerate(tuple, reduce, visit);
        }
        if left == 0 {
            return;
        }
        for g in start..groups.len() {
            tuple.push(groups[g].clone());
            rec(groups, g, left - 1, reduce, tuple, visit);
            tuple.pop();
        }
    }
    rec(&groups, 0, max_indices, reduce, &mut tuple, visit);
}

/// `Aff(Z_m, u)` for every `m ≤ max_m` and unit `u` mod `m`, as
/// `(m, u, quandle)`.
pub fn cyclic_affine_quandles(max_m: usize) -> Vec<(usize, usize, Quandle)> {
    let mut out = Vec::new();
    for m in 1..=max_m {
        let g = CyclicProduct::cyclic(m);
        for u in 0..m.max(1) {
            if gcd(u, m) != 1 {
                continue;
            }
            let f = GroupAutomorphism::multiplication(&g, u as i64).expect("unit");
            out.push((m, u, make_affine(g.clone(), f).quandle));
        }
    }
    out
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
