//! Deciding whether a quandle is itself affine, i.e. isomorphic to some
//! `Aff(A, f)`.
//!
//! Cheap necessary conditions are checked first. In `Aff(A, f)` the
//! displacement group is the translation group of `Im(1 - f)`, so it is
//! abelian, semiregular and tiny, every orbit is a coset of `Im(1 - f)`,
//! and `L_a = L_b` iff `a - b ∈ Ker(1 - f)`, giving `|Q/λ| = |Dis(Q)|`.
//! If all of them hold, every `Aff(A, f)` with `|A| = |Q|` and
//! `|Im(1 - f)| = |Dis(Q)|` is compared with `Q` up to an order bound.

use crate::affine::{abelian_groups_of_order, all_automorphisms, image_of_one_minus_f, make_affine};
use crate::affine::{CyclicProduct, GroupAutomorphism};
use crate::invariants::{cayley_kernel, displacement_group, is_tiny, orbits};
use crate::iso::is_isomorphic;
use crate::perm::Permutation;
use crate::quandle::Quandle;

/// Largest order searched exhaustively by default.
pub const DEFAULT_SEARCH_LIMIT: usize = 16;

#[derive(Debug, Clone)]
pub enum AffineVerdict {
    /// `iso` maps `Q` onto `Aff(group, f)`.
    Affine { group: CyclicProduct, f: GroupAutomorphism, iso: Permutation },
    NotAffine(String),
    /// Necessary conditions hold but the order exceeds the search limit.
    Unknown,
}

impl AffineVerdict {
    pub fn label(&self) -> &'static str {
        match self {
            AffineVerdict::Affine { .. } => "yes",
            AffineVerdict::NotAffine(_) => "no",
            AffineVerdict::Unknown => "unknown",
        }
    }
}

pub fn decide_affine(q: &Quandle, search_limit: usize) -> AffineVerdict {
    let dis = displacement_group(q);
    let no = |why: String| AffineVerdict::NotAffine(why);
    if !dis.is_abelian() {
        return no("Dis is not abelian".into());
    }
    if !dis.is_semiregular() {
        return no("Dis is not semiregular".into());
    }
    if !is_tiny(q) {
        return no("Dis is not tiny".into());
    }
    let sizes = orbits(q).sizes();
    if let Some(&s) = sizes.iter().find(|&&s| s != dis.order()) {
        return no(format!("an orbit has {s} elements but |Dis| = {}", dis.order()));
    }
    let blocks = cayley_kernel(q).len();
    if blocks != dis.order() {
        return no(format!("|Q/λ| = {blocks} but |Dis| = {}", dis.order()));
    }
    let n = q.size();
    if n > search_limit {
        return AffineVerdict::Unknown;
    }
    for group in abelian_groups_of_order(n) {
        for f in all_automorphisms(&group) {
            if image_of_one_minus_f(&group, &f).len() != dis.order() {
                continue;
            }
            let aff = make_affine(group.clone(), f);
            if let Some(iso) = is_isomorphic(q, &aff.quandle) {
                return AffineVerdict::Affine { group: aff.group, f: aff.f, iso };
            }
        }
    }
    no(format!("no affine quandle of order {n} is isomorphic"))
}
