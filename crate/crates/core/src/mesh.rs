//! Affine meshes and their sums.
//!
//! A mesh over the index set `0..k` is a family of abelian groups `A_i`,
//! homomorphisms `φ_{i,j}: A_i → A_j` and constants `c_{i,j} ∈ A_j`
//! subject to the axioms
//!
//! * (M1) `1 - φ_{i,i}` is an automorphism of `A_i`;
//! * (M2) `c_{i,i} = 0`;
//! * (M3) `φ_{j,k} φ_{i,j} = φ_{j',k} φ_{i,j'}`;
//! * (M4) `φ_{j,k}(c_{i,j}) = φ_{k,k}(c_{i,k} - c_{j,k})`.
//!
//! The sum lives on the disjoint union of the `A_i` with
//! `a*b = c_{i,j} + φ_{i,j}(a) + (1 - φ_{j,j})(b)` for `a ∈ A_i`, `b ∈ A_j`.

use std::collections::HashSet;

use crate::affine::{AbelianGroup, CyclicProduct, GroupHom};
use crate::error::MeshError;
use crate::invariants::orbits;
use crate::quandle::{Partition, Quandle};

/// Unvalidated mesh data. Homomorphisms are element maps `A_i → A_j`,
/// constants are element indices of `A_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawMesh {
    pub groups: Vec<CyclicProduct>,
    pub homs: Vec<Vec<Vec<usize>>>,
    pub consts: Vec<Vec<usize>>,
}

impl RawMesh {
    /// All homomorphisms zero, all constants zero.
    pub fn zero(groups: Vec<CyclicProduct>) -> Self {
        let k = groups.len();
        let homs = (0..k)
            .map(|i| (0..k).map(|_| vec![0; groups[i].order()]).collect())
            .collect();
        RawMesh { groups, homs, consts: vec![vec![0; k]; k] }
    }

    /// A mesh with all homomorphisms zero over cyclic groups `Z_{m_i}`.
    pub fn two_reductive(moduli: &[usize], consts: Vec<Vec<usize>>) -> Self {
        let groups = moduli.iter().map(|&m| CyclicProduct::cyclic(m)).collect();
        RawMesh { consts, ..RawMesh::zero(groups) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineMesh {
    groups: Vec<CyclicProduct>,
    homs: Vec<Vec<GroupHom>>,
    consts: Vec<Vec<usize>>,
    offsets: Vec<usize>,
}

impl AffineMesh {
    /// Checks shapes, additivity of every `φ_{i,j}`, then (M1)–(M4) in that
    /// order, reporting the first witness of each.
    pub fn validate(raw: RawMesh) -> Result<Self, MeshError> {
        let k = raw.groups.len();
        if k == 0 {
            return Err(MeshError::Shape("empty index set".into()));
        }
        if raw.homs.len() != k || raw.consts.len() != k {
            return Err(MeshError::Shape(format!("expected {k}x{k} matrices")));
        }
        let g = &raw.groups;
        let mut homs = Vec::with_capacity(k);
        for (i, row) in raw.homs.into_iter().enumerate() {
            if row.len() != k {
                return Err(MeshError::Shape(format!("phi row {i} has {} entries", row.len())));
            }
            let mut out = Vec::with_capacity(k);
            for (j, map) in row.into_iter().enumerate() {
                let h = GroupHom::validate(&g[i], &g[j], map)
                    .map_err(|_| MeshError::NotAHomomorphism(i, j))?;
                out.push(h);
            }
            homs.push(out);
        }
        for (i, row) in raw.consts.iter().enumerate() {
            if row.len() != k {
                return Err(MeshError::Shape(format!("c row {i} has {} entries", row.len())));
            }
            for (j, &c) in row.iter().enumerate() {
                if c >= g[j].order() {
                    return Err(MeshError::Shape(format!("c[{i}][{j}] = {c} is not in A_{j}")));
                }
            }
        }
        let consts = raw.consts;
        for i in 0..k {
            if !homs[i][i].one_minus(&g[i]).is_bijective() {
                return Err(MeshError::M1Violation(i));
            }
        }
        for i in 0..k {
            if consts[i][i] != g[i].zero() {
                return Err(MeshError::M2Violation(i));
            }
        }
        check_m3(&homs)?;
        for i in 0..k {
            for j in 0..k {
                for l in 0..k {
                    let lhs = homs[j][l].apply(consts[i][j]);
                    let rhs = homs[l][l].apply(g[l].sub(consts[i][l], consts[j][l]));
                    if lhs != rhs {
                        return Err(MeshError::M4Violation(i, j, l));
                    }
                }
            }
        }
        let mut offsets = Vec::with_capacity(k + 1);
        let mut acc = 0;
        for grp in g {
            offsets.push(acc);
            acc += grp.order();
        }
        offsets.push(acc);
        Ok(AffineMesh { groups: raw.groups, homs, consts, offsets })
    }

    pub fn index_count(&self) -> usize {
        self.groups.len()
    }

    pub fn groups(&self) -> &[CyclicProduct] {
        &self.groups
    }

    pub fn phi(&self, i: usize, j: usize) -> &GroupHom {
        &self.homs[i][j]
    }

    pub fn c(&self, i: usize, j: usize) -> usize {
        self.consts[i][j]
    }

    /// Number of elements of the sum.
    pub fn sum_size(&self) -> usize {
        self.offsets[self.groups.len()]
    }

    /// Global index of `a ∈ A_i` in the sum.
    pub fn global(&self, i: usize, a: usize) -> usize {
        self.offsets[i] + a
    }

    /// `(i, a)` with `a ∈ A_i` for a global index.
    pub fn local(&self, x: usize) -> (usize, usize) {
        let i = self.offsets.partition_point(|&o| o <= x) - 1;
        (i, x - self.offsets[i])
    }

    /// The fibers `A_i` as a partition of the sum.
    pub fn fibers(&self) -> Partition {
        let blocks = (0..self.groups.len())
            .map(|i| (self.offsets[i]..self.offsets[i + 1]).collect())
            .collect();
        Partition::new(self.sum_size(), blocks).expect("fibers are disjoint and cover")
    }

    pub fn is_indecomposable(&self) -> bool {
        let k = self.groups.len();
        (0..k).all(|j| {
            let mut gens: Vec<usize> = (0..k).map(|i| self.consts[i][j]).collect();
            for i in 0..k {
                gens.extend(self.homs[i][j].map().iter().copied());
            }
            self.groups[j].generated_subgroup(&gens).len() == self.groups[j].order()
        })
    }

    /// The sum of the mesh as a quandle on the disjoint union, fibers
    /// concatenated in index order.
    pub fn sum(&self) -> Quandle {
        let n = self.sum_size();
        let k = self.groups.len();
        let one_minus: Vec<GroupHom> =
            (0..k).map(|j| self.homs[j][j].one_minus(&self.groups[j])).collect();
        let fiber: Vec<(usize, usize)> = (0..n).map(|x| self.local(x)).collect();
        let mut table = Vec::with_capacity(n * n);
        for &(i, a) in &fiber {
            for &(j, b) in &fiber {
                let g = &self.groups[j];
                let v = g.add(g.add(self.consts[i][j], self.homs[i][j].apply(a)), one_minus[j].apply(b));
                table.push(self.global(j, v) as u32);
            }
        }
        let q = Quandle::from_table_unchecked(n, table);
        if cfg!(debug_assertions) && n <= 24 {
            q.validate().expect("mesh sums are quandles");
            assert!(crate::invariants::is_medial(&q), "mesh sums are medial");
        }
        if self.is_indecomposable() {
            assert_eq!(orbits(&q), self.fibers(), "fibers of an indecomposable mesh are orbits");
        }
        q
    }

    /// The rows `(φ_{i,j}(a) + c_{i,j})_j` for all `i` and `a ∈ A_i`, without
    /// repetitions, in order of first occurrence.
    pub fn row_set(&self) -> Vec<Vec<usize>> {
        let k = self.groups.len();
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for i in 0..k {
            for a in 0..self.groups[i].order() {
                let row: Vec<usize> = (0..k)
                    .map(|j| self.groups[j].add(self.homs[i][j].apply(a), self.consts[i][j]))
                    .collect();
                if seen.insert(row.clone()) {
                    out.push(row);
                }
            }
        }
        out
    }

    /// Whether the row set is a coset of a subgroup of `∏ A_j`: translate by
    /// the first row and test the result for closure under addition.
    pub fn coset_criterion(&self) -> bool {
        self.coset_failure().is_none()
    }

    /// A pair `(y, z)` of translated rows whose sum leaves the translated
    /// set, if the criterion fails.
    pub fn coset_failure(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let rows = self.row_set();
        let h = rows[0].clone();
        let shifted: Vec<Vec<usize>> = rows
            .iter()
            .map(|r| (0..r.len()).map(|j| self.groups[j].sub(r[j], h[j])).collect())
            .collect();
        let set: HashSet<&Vec<usize>> = shifted.iter().collect();
        for y in &shifted {
            for z in &shifted {
                let s: Vec<usize> = (0..y.len()).map(|j| self.groups[j].add(y[j], z[j])).collect();
                if !set.contains(&s) {
                    return Some((y.clone(), z.clone()));
                }
            }
        }
        None
    }

    /// Syntactic test for the shape `A_i = A`, `φ_{i,j} = 1 - ψ` for an
    /// automorphism `ψ`, and `c_{i,j} = d_i - d_j`. The `d_i` are solved
    /// with `d_0 = 0`, hence `d_i = c_{i,0}`.
    pub fn semiregular_extension_form(&self) -> bool {
        let k = self.groups.len();
        let a = &self.groups[0];
        if self.groups.iter().any(|g| g != a) {
            return false;
        }
        let phi = &self.homs[0][0];
        if self.homs.iter().flatten().any(|h| h != phi) {
            return false;
        }
        if !phi.one_minus(a).is_bijective() {
            return false;
        }
        let d: Vec<usize> = (0..k).map(|i| self.consts[i][0]).collect();
        (0..k).all(|i| (0..k).all(|j| self.consts[i][j] == a.sub(d[i], d[j])))
    }
}

/// (M3) via the composites `φ_{j,k} φ_{i,j}`: all must agree for fixed
/// `(i, k)`. Only on failure is the lexicographic witness searched for.
fn check_m3(homs: &[Vec<GroupHom>]) -> Result<(), MeshError> {
    let k = homs.len();
    let composite = |i: usize, j: usize, l: usize| homs[j][l].compose(&homs[i][j]);
    let mut ok = true;
    'outer: for i in 0..k {
        for l in 0..k {
            let first = composite(i, 0, l);
            for j in 1..k {
                if composite(i, j, l) != first {
                    ok = false;
                    break 'outer;
                }
            }
        }
    }
    if ok {
        return Ok(());
    }
    for i in 0..k {
        for j in 0..k {
            for j2 in 0..k {
                for l in 0..k {
                    if composite(i, j, l) != composite(i, j2, l) {
                        return Err(MeshError::M3Violation(i, j, j2, l));
                    }
                }
            }
        }
    }
    unreachable!("a disagreeing composite has a lexicographic witness")
}

/// The family `A_{n,k}`: `k` copies of `Z_2` followed by `n - k` copies of
/// `Z_1`, zero homomorphisms, and constants whose first `2^k` rows run
/// through all of `Z_2^k` (the rest zero).
///
/// Rows are assigned so that `c_{i,i} = 0` holds for `i < k`; among the
/// admissible assignments the zero vector is placed as late as possible
/// (for `k = 1` it is forced into row 0).
pub fn generate_max_mesh(n: usize, k: usize) -> Result<AffineMesh, MeshError> {
    if k >= usize::BITS as usize - 1 || (1usize << k) >= n {
        return Err(MeshError::InvalidParams(format!("need 2^k < n, got n={n}, k={k}")));
    }
    let rows = max_mesh_rows(k);
    let mut groups = vec![CyclicProduct::cyclic(2); k];
    groups.extend((k..n).map(|_| CyclicProduct::cyclic(1)));
    let mut raw = RawMesh::zero(groups);
    for (i, v) in rows.iter().enumerate() {
        raw.consts[i][..k].copy_from_slice(v);
    }
    let mesh = AffineMesh::validate(raw)?;
    debug_assert!(mesh.is_indecomposable());
    Ok(mesh)
}

/// The `2^k × k` matrix over `Z_2` used by [`generate_max_mesh`].
pub fn max_mesh_rows(k: usize) -> Vec<Vec<usize>> {
    let count = 1usize << k;
    let to_vec = |v: usize| (0..k).map(|j| (v >> (k - 1 - j)) & 1).collect::<Vec<_>>();
    // nonzero vectors ascending, zero vector last
    let candidates: Vec<Vec<usize>> = (1..count).chain(std::iter::once(0)).map(to_vec).collect();
    fn place(
        row: usize,
        k: usize,
        candidates: &[Vec<usize>],
        used: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) -> bool {
        if row == candidates.len() {
            return true;
        }
        for (idx, v) in candidates.iter().enumerate() {
            if used[idx] || (row < k && v[row] != 0) {
                continue;
            }
            used[idx] = true;
            out.push(v.clone());
            if place(row + 1, k, candidates, used, out) {
                return true;
            }
            out.pop();
            used[idx] = false;
        }
        false
    }
    let mut used = vec![false; count];
    let mut out = Vec::with_capacity(count);
    assert!(place(0, k, &candidates, &mut used, &mut out), "an admissible row order exists");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{cayley_kernel, is_medial};

    fn first_mesh() -> AffineMesh {
        AffineMesh::validate(RawMesh::two_reductive(
            &[2, 2, 2],
            vec![vec![0, 0, 1], vec![0, 0, 1], vec![1, 1, 0]],
        ))
        .unwrap()
    }

    fn second_mesh() -> AffineMesh {
        AffineMesh::validate(RawMesh::two_reductive(&[3, 3], vec![vec![0, 1], vec![1, 0]])).unwrap()
    }

    fn third_mesh() -> AffineMesh {
        AffineMesh::validate(RawMesh::two_reductive(&[2, 1], vec![vec![0, 0], vec![1, 0]])).unwrap()
    }

    #[test]
    fn trivial_mesh() {
        let m = AffineMesh::validate(RawMesh::two_reductive(&[1], vec![vec![0]])).unwrap();
        assert!(m.is_indecomposable());
        assert_eq!(m.sum(), Quandle::projection(1));
        let m = AffineMesh::validate(RawMesh::two_reductive(&[1, 1], vec![vec![0, 0]; 2])).unwrap();
        assert_eq!(m.sum(), Quandle::projection(2));
    }

    #[test]
    fn axiom_violations() {
        let mut raw = RawMesh::zero(vec![CyclicProduct::cyclic(2)]);
        raw.homs[0][0] = vec![0, 1];
        assert_eq!(AffineMesh::validate(raw), Err(MeshError::M1Violation(0)));

        let raw = RawMesh::two_reductive(&[2], vec![vec![1]]);
        assert_eq!(AffineMesh::validate(raw), Err(MeshError::M2Violation(0)));

        let mut raw = RawMesh::zero(vec![CyclicProduct::cyclic(3)]);
        raw.homs[0][0] = vec![0, 1, 1];
        assert_eq!(AffineMesh::validate(raw), Err(MeshError::NotAHomomorphism(0, 0)));

        // φ_{0,1} = id on Z2 but φ_{0,0} = φ_{1,1} = 0: the composites
        // φ_{0,1}φ_{0,0} = 0 and φ_{1,1}φ_{0,1} = 0 agree, while
        // φ_{1,0}φ_{0,1} = id differs from φ_{0,0}φ_{0,0} = 0 when φ_{1,0} = id
        let mut raw = RawMesh::zero(vec![CyclicProduct::cyclic(2), CyclicProduct::cyclic(2)]);
        raw.homs[0][1] = vec![0, 1];
        raw.homs[1][0] = vec![0, 1];
        assert_eq!(AffineMesh::validate(raw), Err(MeshError::M3Violation(0, 0, 1, 0)));

        // all φ = 2 on Z3 satisfies (M1) and (M3); (M4) then needs c_{0,1} = -c_{1,0}
        let z3 = CyclicProduct::cyclic(3);
        let mut raw = RawMesh::zero(vec![z3.clone(), z3]);
        for i in 0..2 {
            for j in 0..2 {
                raw.homs[i][j] = vec![0, 2, 1];
            }
        }
        raw.consts[1][0] = 1;
        assert_eq!(AffineMesh::validate(raw.clone()), Err(MeshError::M4Violation(0, 1, 0)));
        raw.consts[0][1] = 2;
        assert!(AffineMesh::validate(raw).unwrap().semiregular_extension_form());
    }

    #[test]
    fn indecomposability() {
        assert!(first_mesh().is_indecomposable());
        let m = AffineMesh::validate(RawMesh::two_reductive(&[2], vec![vec![0]])).unwrap();
        assert!(!m.is_indecomposable());
    }

    #[test]
    fn sums_of_the_example_meshes() {
        let q = first_mesh().sum();
        assert_eq!(q.size(), 6);
        assert!(is_medial(&q));
        assert_eq!(orbits(&q).len(), 3);
        assert_eq!(cayley_kernel(&q).blocks(), &[vec![0, 1, 2, 3], vec![4, 5]]);
        assert_eq!(second_mesh().sum().size(), 6);
        assert_eq!(orbits(&third_mesh().sum()).sizes(), vec![2, 1]);
    }

    #[test]
    fn single_index_sum_is_affine() {
        use crate::affine::{make_affine, GroupAutomorphism};
        let z5 = CyclicProduct::cyclic(5);
        let mut raw = RawMesh::zero(vec![z5.clone()]);
        raw.homs[0][0] = (0..5).map(|x| (3 * x) % 5).collect();
        let m = AffineMesh::validate(raw).unwrap();
        // 1 - 3 = -2 = 3 mod 5
        let aff = make_affine(z5.clone(), GroupAutomorphism::multiplication(&z5, 3).unwrap());
        assert_eq!(m.sum(), aff.quandle);
        assert!(m.semiregular_extension_form());
    }

    #[test]
    fn coset_criterion_on_examples() {
        assert!(first_mesh().coset_criterion());
        assert_eq!(
            second_mesh().coset_failure(),
            Some((vec![1, 2], vec![1, 2]))
        );
        assert!(third_mesh().coset_criterion());
    }

    #[test]
    fn semiregular_form_on_examples() {
        assert!(first_mesh().semiregular_extension_form());
        // embeds, but c_{0,1} = c_{1,0} = 1 admits no d with c_{i,j} = d_i - d_j
        assert!(!second_mesh().semiregular_extension_form());
        assert!(!third_mesh().semiregular_extension_form());
    }

    #[test]
    fn max_mesh_rows_respect_m2() {
        assert_eq!(max_mesh_rows(1), vec![vec![0], vec![1]]);
        assert_eq!(
            max_mesh_rows(2),
            vec![vec![0, 1], vec![1, 0], vec![1, 1], vec![0, 0]]
        );
        for k in 0..=5 {
            let rows = max_mesh_rows(k);
            let set: HashSet<_> = rows.iter().collect();
            assert_eq!(set.len(), 1 << k);
            for (i, r) in rows.iter().enumerate().take(k) {
                assert_eq!(r[i], 0);
            }
        }
    }

    #[test]
    fn max_mesh_family() {
        assert!(generate_max_mesh(4, 2).is_err());
        let m = generate_max_mesh(4, 1).unwrap();
        let q = m.sum();
        assert_eq!(q.size(), 5);
        assert_eq!(orbits(&q).len(), 4);
        let m = generate_max_mesh(8, 2).unwrap();
        let q = m.sum();
        assert_eq!(q.size(), 10);
        assert_eq!(cayley_kernel(&q).len(), 4);
        assert!(m.coset_criterion());
    }

    #[test]
    fn local_and_global_indices() {
        let m = third_mesh();
        assert_eq!(m.local(0), (0, 0));
        assert_eq!(m.local(1), (0, 1));
        assert_eq!(m.local(2), (1, 0));
        assert_eq!(m.global(1, 0), 2);
    }
}
