mod common;

use proptest::prelude::*;

use affquandle::cover::{build_cover, is_homim_of_affine, verify_cover, Multitransversal};
use affquandle::invariants::{cayley_kernel, displacement_group, is_medial, is_tiny};
use affquandle::iso::{is_isomorphic, is_isomorphism};
use affquandle::{AffineMesh, Permutation, Quandle, RawMesh};

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `Aff(Z_m, u)` for a unit `u`.
fn cyclic_affine() -> impl Strategy<Value = Quandle> {
    (1usize..=12, 0usize..12).prop_filter_map("unit", |(m, u)| {
        let u = u % m;
        (gcd(u, m) == 1 || m == 1).then(|| Quandle::from_fn(m, |a, b| ((1 + m - u) * a + u * b) % m).unwrap())
    })
}

/// Sums of meshes over cyclic groups with zero homomorphisms and arbitrary
/// off-diagonal constants.
fn two_reductive_sum() -> impl Strategy<Value = Quandle> {
    prop::collection::vec(1usize..=4, 1..=3)
        .prop_flat_map(|moduli| {
            let k = moduli.len();
            let consts = prop::collection::vec(prop::collection::vec(0usize..4, k), k);
            (Just(moduli), consts)
        })
        .prop_map(|(moduli, mut consts)| {
            for (i, row) in consts.iter_mut().enumerate() {
                for (j, c) in row.iter_mut().enumerate() {
                    *c = if i == j { 0 } else { *c % moduli[j] };
                }
            }
            AffineMesh::validate(RawMesh::two_reductive(&moduli, consts)).unwrap().sum()
        })
}

fn quandle() -> impl Strategy<Value = Quandle> {
    prop_oneof![cyclic_affine(), two_reductive_sum()]
}

fn with_relabeling() -> impl Strategy<Value = (Quandle, Permutation)> {
    quandle().prop_flat_map(|q| {
        let n = q.size();
        (Just(q), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
    .prop_map(|(q, images)| (q, Permutation::new(images).unwrap()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn left_division_inverts_left_translation(q in quandle()) {
        let n = q.size();
        for a in 0..n {
            for b in 0..n {
                prop_assert_eq!(q.left_divide(a, q.op(a, b)), b);
                prop_assert_eq!(q.op(a, q.left_divide(a, b)), b);
            }
        }
    }

    #[test]
    fn relabeling_preserves_verdicts((q, p) in with_relabeling()) {
        let r = q.relabel(&p);
        prop_assert!(is_isomorphism(&q, &r, &p));
        prop_assert_eq!(is_medial(&q), is_medial(&r));
        prop_assert_eq!(is_tiny(&q), is_tiny(&r));
        prop_assert_eq!(is_homim_of_affine(&q), is_homim_of_affine(&r));
        prop_assert_eq!(displacement_group(&q).order(), displacement_group(&r).order());
        prop_assert_eq!(cayley_kernel(&q).len(), cayley_kernel(&r).len());
    }

    #[test]
    fn isomorphism_search_is_symmetric((q, p) in with_relabeling()) {
        let r = q.relabel(&p);
        let forward = is_isomorphic(&q, &r);
        let backward = is_isomorphic(&r, &q);
        prop_assert!(forward.is_some() && backward.is_some());
        prop_assert!(is_isomorphism(&q, &r, &forward.unwrap()));
        prop_assert!(is_isomorphism(&r, &q, &backward.unwrap()));
        prop_assert!(is_isomorphic(&q, &q).is_some());
    }

    #[test]
    fn cayley_kernel_is_a_congruence(q in quandle()) {
        let kernel = cayley_kernel(&q);
        let quo = q.quotient(&kernel);
        prop_assert!(quo.is_ok());
        prop_assert_eq!(quo.unwrap().size(), kernel.len());
    }

    #[test]
    fn library_groups_match_the_oracle(q in quandle()) {
        let dis = displacement_group(&q);
        let oracle = common::dis(&q);
        prop_assert_eq!(dis.order(), oracle.len());
        prop_assert_eq!(dis.is_abelian(), common::all_commute(&oracle));
        prop_assert_eq!(dis.is_semiregular(), common::semiregular(&oracle));
        prop_assert_eq!(is_tiny(&q), common::displacement_set_size(&q, 0) == oracle.len());
    }

    #[test]
    fn affine_sums_are_medial(q in two_reductive_sum()) {
        prop_assert!(is_medial(&q));
        prop_assert!(common::medial_by_quadruples(&q));
    }

    #[test]
    fn covers_are_sound(q in quandle()) {
        let positive = is_homim_of_affine(&q);
        for t in [Multitransversal::simple(&q), Multitransversal::optimized(&q)] {
            match t {
                Ok(t) => {
                    prop_assert!(positive);
                    let r = build_cover(&q, &t).unwrap();
                    prop_assert!(verify_cover(&r, &q).passed());
                    prop_assert_eq!(r.order(), common::dis(&q).len() * t.len());
                }
                Err(_) => prop_assert!(!positive),
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn cyclic_affine_quandles_are_tiny_and_semiregular(q in cyclic_affine()) {
        let dis = common::dis(&q);
        prop_assert!(common::all_commute(&dis));
        prop_assert!(common::semiregular(&dis));
        prop_assert_eq!(common::displacement_set_size(&q, 0), dis.len());
        prop_assert!(is_homim_of_affine(&q));
    }
}

#[test]
fn oracle_closure_counts() {
    // S3 acting on three points through two transpositions
    let g = common::close(3, &[vec![1, 0, 2], vec![0, 2, 1]]);
    assert_eq!(g.len(), 6);
    assert!(!common::all_commute(&g));
    // the dihedral quandle of order 3 has Dis = Z3
    let r3 = Quandle::from_fn(3, |a, b| (2 * a + 3 - b) % 3).unwrap();
    assert_eq!(common::dis(&r3).len(), 3);
    assert_eq!(common::lmlt(&r3).len(), 6);
    assert_eq!(common::orbit_sizes(&r3), vec![3]);
}

#[test]
fn oracle_surjections() {
    let z4 = Quandle::from_fn(4, |a, b| (2 * a + 3 * b) % 4).unwrap();
    let z2 = Quandle::projection(2);
    assert!(common::has_surjection(&z4, &z2));
    assert!(!common::has_surjection(&z2, &z4));
    assert!(common::has_surjection(&z4, &Quandle::projection(1)));
}
