//! Group-theoretic invariants of a quandle: the left multiplication group,
//! the displacement group, orbits, the Cayley kernel, and the predicates
//! (medial, tiny) built from them.

use std::collections::HashSet;

use crate::perm::{orbits_of_generators, PermGroup, Permutation};
use crate::quandle::{Partition, Quandle};

/// `LMlt(Q) = <L_a : a ∈ Q>`.
pub fn multiplication_group(q: &Quandle) -> PermGroup {
    PermGroup::closure(q.size(), q.left_translations()).expect("translations share the degree")
}

/// The generators `L_a L_e⁻¹` for `a ∈ Q`, in element order.
pub fn displacement_generators(q: &Quandle, e: usize) -> Vec<Permutation> {
    let le_inv = q.left_translation(e).inverse();
    (0..q.size()).map(|a| q.left_translation(a).compose(&le_inv)).collect()
}

/// `Dis(Q) = <L_a L_0⁻¹ : a ∈ Q>`.
pub fn displacement_group(q: &Quandle) -> PermGroup {
    PermGroup::closure(q.size(), displacement_generators(q, 0)).expect("same degree")
}

/// Orbits of the natural action. Computed for both `Dis(Q)` and `LMlt(Q)`,
/// which must agree.
pub fn orbits(q: &Quandle) -> Partition {
    let dis = orbits_of_generators(q.size(), &displacement_generators(q, 0));
    let lmlt = orbits_of_generators(q.size(), &q.left_translations());
    assert_eq!(dis, lmlt, "Dis and LMlt orbits differ");
    dis
}

/// The Cayley kernel: `a ~ b` iff `L_a = L_b`.
pub fn cayley_kernel(q: &Quandle) -> Partition {
    let rows = q.rows();
    Partition::from_key(q.size(), |a| rows[a].clone())
}

/// `{L_x L_e⁻¹ : x ∈ Q}` without repetitions, ordered by first occurrence
/// with the identity first.
pub fn displacement_set(q: &Quandle, e: usize) -> Vec<Permutation> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let id = Permutation::identity(q.size());
    seen.insert(id.clone());
    out.push(id);
    for p in displacement_generators(q, e) {
        if seen.insert(p.clone()) {
            out.push(p);
        }
    }
    out
}

/// `Dis(Q)` is tiny: it coincides with the set `{L_x L_0⁻¹ : x ∈ Q}`.
pub fn is_tiny(q: &Quandle) -> bool {
    is_tiny_at(q, 0)
}

/// Tininess with respect to the base point `e`: the displacement set is
/// closed under composition and inverses.
pub fn is_tiny_at(q: &Quandle, e: usize) -> bool {
    let set = displacement_set(q, e);
    let members: HashSet<&Permutation> = set.iter().collect();
    set.iter().all(|a| members.contains(&a.inverse()))
        && set.iter().all(|a| set.iter().all(|b| members.contains(&a.compose(b))))
}

/// `(x*y)*(u*v) = (x*u)*(y*v)` for all quadruples.
pub fn is_medial(q: &Quandle) -> bool {
    let verdict = satisfies_mediality(q);
    assert_eq!(
        verdict,
        displacement_group_is_abelian(q),
        "mediality disagrees with commutativity of Dis"
    );
    verdict
}

fn satisfies_mediality(q: &Quandle) -> bool {
    let n = q.size();
    for x in 0..n {
        for y in 0..n {
            let xy = q.op(x, y);
            for u in 0..n {
                let xu = q.op(x, u);
                for v in 0..n {
                    if q.op(xy, q.op(u, v)) != q.op(xu, q.op(y, v)) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Checks pairwise commutation of the generators of `Dis(Q)` without
/// enumerating the group.
pub fn displacement_group_is_abelian(q: &Quandle) -> bool {
    let gens = displacement_generators(q, 0);
    (0..gens.len()).all(|i| (i + 1..gens.len()).all(|j| gens[i].commutes_with(&gens[j])))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn aff_z8_5() -> Quandle {
        Quandle::from_fn(8, |a, b| (4 * a + 5 * b) % 8).unwrap()
    }

    /// Transpositions of `S_d` under `x*y = x y x⁻¹`.
    fn transpositions(d: usize) -> Quandle {
        let mut t = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                let mut images: Vec<usize> = (0..d).collect();
                images.swap(i, j);
                t.push(Permutation::new(images).unwrap());
            }
        }
        Quandle::from_fn(t.len(), |a, b| {
            let c = t[b].conjugate_by(&t[a]);
            t.iter().position(|p| *p == c).unwrap()
        })
        .unwrap()
    }

    #[test]
    fn projection_invariants() {
        let q = Quandle::projection(3);
        assert_eq!(displacement_group(&q).order(), 1);
        assert_eq!(orbits(&q).len(), 3);
        assert_eq!(cayley_kernel(&q).len(), 1);
        assert!(is_tiny(&q));
        assert!(is_medial(&q));
    }

    #[test]
    fn affine_z8_invariants() {
        let q = aff_z8_5();
        let dis = displacement_group(&q);
        assert_eq!(dis.order(), 2);
        // x ↦ ±x + t with t ∈ {0, 4}
        assert_eq!(multiplication_group(&q).order(), 4);
        assert!(dis.is_abelian());
        assert!(dis.is_semiregular());
        assert_eq!(
            orbits(&q).blocks(),
            &[vec![0, 4], vec![1, 5], vec![2, 6], vec![3, 7]]
        );
        assert_eq!(cayley_kernel(&q).blocks(), &[vec![0, 2, 4, 6], vec![1, 3, 5, 7]]);
        assert!(is_tiny(&q));
        assert!(is_medial(&q));
    }

    #[test]
    fn transposition_quandles() {
        // in S3 this is the dihedral quandle of order 3, which is affine
        let q = transpositions(3);
        assert!(is_medial(&q));
        let q = transpositions(4);
        assert_eq!(q.size(), 6);
        assert!(!is_medial(&q));
        assert!(!displacement_group(&q).is_abelian());
        assert_eq!(orbits(&q).len(), 1);
    }

    #[test]
    fn conjugation_identity_in_lmlt() {
        let q = aff_z8_5();
        let lmlt = multiplication_group(&q);
        let ls = q.left_translations();
        for alpha in lmlt.elements() {
            for x in 0..q.size() {
                assert_eq!(ls[alpha.apply(x)], ls[x].conjugate_by(alpha));
            }
        }
    }
}
