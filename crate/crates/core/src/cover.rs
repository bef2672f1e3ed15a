//! Recognition of homomorphic images of affine quandles and construction
//! of a covering affine quandle.
//!
//! A quandle `Q` is a homomorphic image of an affine quandle iff `Dis(Q)`
//! is abelian and equals the set `D = {L_x L_e⁻¹ : x ∈ Q}`. When it is,
//! a multitransversal `T` of the Cayley kernel carries an abelian group
//! `(T, ⊕)`, and `A = Dis(Q) × (T, ⊕)` with
//! `f(α, t) = (L_e α L_{x(t)}⁻¹, t)` is an automorphism such that
//! `ψ(α, t) = α(x(t))` maps `Aff(A, f)` onto `Q`.

use std::collections::HashMap;

use crate::affine::{make_affine, AbelianGroup, AffineQuandle, DirectProduct, GroupAutomorphism, TableGroup};
use crate::error::CoverError;
use crate::invariants::{displacement_set, orbits};
use crate::perm::Permutation;
use crate::quandle::Quandle;

/// The set `D = {L_x L_e⁻¹}` of a quandle with tiny abelian displacement
/// group, with its multiplication table and the class of every element.
///
/// `D` is indexed in discovery order with `α_0 = 1`; the class of `x` is
/// the `i` with `L_x L_e⁻¹ = α_i`, so classes are the Cayley kernel blocks.
#[derive(Debug, Clone)]
pub struct Displacements {
    e: usize,
    perms: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    product: Vec<usize>,
    class_of: Vec<usize>,
}

impl Displacements {
    /// Builds `D` and checks that every pair commutes and composes inside
    /// `D`, failing on the first pair that does not.
    pub fn new(q: &Quandle, e: usize) -> Result<Self, CoverError> {
        let perms = displacement_set(q, e);
        let index: HashMap<Permutation, usize> =
            perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let m = perms.len();
        let mut product = vec![0; m * m];
        for (i, a) in perms.iter().enumerate() {
            for (j, b) in perms.iter().enumerate() {
                let ab = a.compose(b);
                if ab != b.compose(a) {
                    return Err(CoverError::NotHomImage);
                }
                match index.get(&ab) {
                    Some(&k) => product[i * m + j] = k,
                    None => return Err(CoverError::NotHomImage),
                }
            }
        }
        let le_inv = q.left_translation(e).inverse();
        let class_of = (0..q.size())
            .map(|x| index[&q.left_translation(x).compose(&le_inv)])
            .collect();
        Ok(Displacements { e, perms, index, product, class_of })
    }

    pub fn base(&self) -> usize {
        self.e
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Index of `α_i ∘ α_j`.
    pub fn product(&self, i: usize, j: usize) -> usize {
        self.product[i * self.perms.len() + j]
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    /// Elements of each class, ascending.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.perms.len()];
        for (x, &c) in self.class_of.iter().enumerate() {
            out[c].push(x);
        }
        out
    }

    /// `Dis(Q)` as an abstract group on the indices of `D`.
    pub fn group(&self) -> TableGroup {
        let table = self.product.iter().map(|&x| x as u32).collect();
        TableGroup::from_table(self.perms.len(), 0, table).expect("D is a group")
    }
}

/// Decides whether `q` is a homomorphic image of an affine quandle, with
/// base point `e = 0`.
pub fn is_homim_of_affine(q: &Quandle) -> bool {
    Displacements::new(q, 0).is_ok()
}

/// A multiset of elements taking exactly `kappa` entries from every
/// Cayley kernel block and meeting every orbit.
///
/// Entry `t = i·kappa + j` lies in the block of `α_i` and carries the
/// within-block label `ν(t) = j ∈ Z_kappa`. Entry 0 is the zero of `(T, ⊕)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multitransversal {
    e: usize,
    kappa: usize,
    blocks: usize,
    entries: Vec<usize>,
}

impl Multitransversal {
    /// Validates an explicit layout against `q` with base point `e`.
    pub fn new(q: &Quandle, e: usize, kappa: usize, entries: Vec<usize>) -> Result<Self, CoverError> {
        let d = Displacements::new(q, e)?;
        Self::checked(q, &d, kappa, entries)
    }

    fn checked(q: &Quandle, d: &Displacements, kappa: usize, entries: Vec<usize>) -> Result<Self, CoverError> {
        let invalid = |msg: String| Err(CoverError::InvalidMultitransversal(msg));
        if kappa == 0 {
            return invalid("multiplicity must be positive".into());
        }
        if entries.len() != d.len() * kappa {
            return invalid(format!("expected {} entries, got {}", d.len() * kappa, entries.len()));
        }
        for (t, &x) in entries.iter().enumerate() {
            if x >= q.size() {
                return invalid(format!("entry {t} = {x} is not an element"));
            }
            if d.class_of(x) != t / kappa {
                return invalid(format!("entry {t} = {x} lies in the wrong kernel block"));
            }
        }
        let orbs = orbits(q);
        let mut hit = vec![false; orbs.len()];
        for &x in &entries {
            hit[orbs.block_of(x)] = true;
        }
        if let Some(o) = hit.iter().position(|h| !h) {
            return invalid(format!("orbit containing {} is missed", orbs.blocks()[o][0]));
        }
        Ok(Multitransversal { e: d.base(), kappa, blocks: d.len(), entries })
    }

    /// Every element of `Q`, each block cycled up to the largest block size;
    /// the base point `e = 0` is the first entry.
    pub fn simple(q: &Quandle) -> Result<Self, CoverError> {
        let d = Displacements::new(q, 0)?;
        let mut classes = d.classes();
        let first = &mut classes[0];
        let pos = first.iter().position(|&x| x == d.base()).expect("e lies in its own class");
        first[..=pos].rotate_right(1);
        let kappa = classes.iter().map(Vec::len).max().unwrap_or(1);
        let entries = classes
            .iter()
            .flat_map(|c| (0..kappa).map(move |j| c[j % c.len()]))
            .collect();
        Self::checked(q, &d, kappa, entries)
    }

    /// One element per orbit chosen greedily to keep the heaviest kernel
    /// block light, then every block padded to the common multiplicity.
    ///
    /// Orbits meeting fewer blocks choose first; each picks its least
    /// loaded block (ties to the block holding the smaller element) and
    /// the smallest element of the orbit inside it. Padding uses unused
    /// block elements in ascending order, cycling if the block runs out.
    pub fn optimized(q: &Quandle) -> Result<Self, CoverError> {
        let d = Displacements::new(q, 0)?;
        let orbs = orbits(q);
        let classes = d.classes();
        let m = d.len();

        // per orbit: candidate blocks with the smallest element of the orbit in each
        let candidates: Vec<Vec<(usize, usize)>> = orbs
            .blocks()
            .iter()
            .map(|orbit| {
                let mut best: HashMap<usize, usize> = HashMap::new();
                for &x in orbit {
                    best.entry(d.class_of(x)).or_insert(x);
                }
                let mut v: Vec<(usize, usize)> = best.into_iter().collect();
                v.sort_unstable();
                v
            })
            .collect();
        let mut order: Vec<usize> = (0..orbs.len()).collect();
        order.sort_by_key(|&o| (candidates[o].len(), o));

        let mut chosen: Vec<Vec<usize>> = vec![Vec::new(); m];
        for o in order {
            let &(block, x) = candidates[o]
                .iter()
                .min_by_key(|&&(b, x)| (chosen[b].len(), x))
                .expect("orbits are nonempty");
            chosen[block].push(x);
        }
        let kappa = chosen.iter().map(Vec::len).max().unwrap_or(0).max(1);

        let mut entries = Vec::with_capacity(m * kappa);
        for (i, mut list) in chosen.into_iter().enumerate() {
            list.sort_unstable();
            let unused: Vec<usize> = classes[i].iter().copied().filter(|x| !list.contains(x)).collect();
            let mut fill = unused.into_iter().chain(classes[i].iter().copied().cycle());
            while list.len() < kappa {
                list.push(fill.next().expect("classes are nonempty"));
            }
            if i == 0 {
                if let Some(pos) = list.iter().position(|&x| x == d.base()) {
                    list[..=pos].rotate_right(1);
                }
            }
            entries.extend(list);
        }
        Self::checked(q, &d, kappa, entries)
    }

    pub fn base(&self) -> usize {
        self.e
    }

    pub fn kappa(&self) -> usize {
        self.kappa
    }

    /// Number of Cayley kernel blocks.
    pub fn block_count(&self) -> usize {
        self.blocks
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Underlying element of entry `t`.
    pub fn element(&self, t: usize) -> usize {
        self.entries[t]
    }

    pub fn block(&self, t: usize) -> usize {
        t / self.kappa
    }

    pub fn nu(&self, t: usize) -> usize {
        t % self.kappa
    }

    /// Entries taken from each Cayley kernel block, as element lists.
    pub fn per_block(&self) -> Vec<&[usize]> {
        self.entries.chunks(self.kappa).collect()
    }
}

/// The group `(T, ⊕)`: `t ⊕ t'` is the entry in the block of
/// `α_{block(t)} α_{block(t')}` whose label is `ν(t) + ν(t') mod κ`.
pub fn build_oplus(q: &Quandle, t: &Multitransversal) -> Result<TableGroup, CoverError> {
    let d = displacement_set(q, t.base());
    let index: HashMap<&Permutation, usize> = d.iter().enumerate().map(|(i, p)| (p, i)).collect();
    if d.len() != t.block_count() {
        return Err(CoverError::InvalidMultitransversal(format!(
            "{} blocks for {} displacements",
            t.block_count(),
            d.len()
        )));
    }
    let (m, kappa, n) = (d.len(), t.kappa(), t.len());
    let mut block_product = vec![usize::MAX; m * m];
    for i in 0..m {
        for j in 0..m {
            if let Some(&k) = index.get(&d[i].compose(&d[j])) {
                block_product[i * m + j] = k;
            }
        }
    }
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let k = block_product[t.block(a) * m + t.block(b)];
            if k == usize::MAX {
                return Err(CoverError::OplusUndefined(a, b));
            }
            table.push((k * kappa + (t.nu(a) + t.nu(b)) % kappa) as u32);
        }
    }
    let group = TableGroup::from_table(n, 0, table)
        .map_err(|e| CoverError::InternalAssertionFailure(format!("(T, ⊕): {e}")))?;
    group
        .check_axioms()
        .map_err(|e| CoverError::InternalAssertionFailure(format!("(T, ⊕): {e}")))?;
    Ok(group)
}

pub type CoverGroup = DirectProduct<TableGroup, TableGroup>;

/// `Aff(A, f)` with `A = Dis(Q) × (T, ⊕)` and the projection `ψ` onto `Q`.
///
/// The element `(α_i, t)` of `A` has index `i·|T| + t`.
#[derive(Debug, Clone)]
pub struct CoverResult {
    pub transversal: Multitransversal,
    pub displacements: Vec<Permutation>,
    pub affine: AffineQuandle<CoverGroup>,
    pub psi: Vec<usize>,
}

impl CoverResult {
    pub fn group(&self) -> &CoverGroup {
        &self.affine.group
    }

    pub fn f(&self) -> &GroupAutomorphism {
        &self.affine.f
    }

    pub fn order(&self) -> usize {
        self.affine.group.order()
    }

    /// `(displacement index, transversal entry)` of an element of `A`.
    pub fn pair(&self, u: usize) -> (usize, usize) {
        self.affine.group.pair(u)
    }

    pub fn psi_is_bijective(&self) -> bool {
        let mut seen = vec![false; self.psi.len()];
        self.psi.iter().all(|&x| x < seen.len() && !std::mem::replace(&mut seen[x], true))
    }
}

/// Builds the cover for `q` from the multitransversal `t` and checks it
/// with [`verify_cover`].
pub fn build_cover(q: &Quandle, t: &Multitransversal) -> Result<CoverResult, CoverError> {
    let d = Displacements::new(q, t.base())?;
    let t = Multitransversal::checked(q, &d, t.kappa(), t.entries().to_vec())?;
    let oplus = build_oplus(q, &t)?;
    let group = DirectProduct::new(d.group(), oplus);

    let le = q.left_translation(d.base());
    let inverses: Vec<Permutation> =
        t.entries().iter().map(|&x| q.left_translation(x).inverse()).collect();
    let mut map = vec![0; group.order()];
    let mut psi = vec![0; group.order()];
    for (i, alpha) in d.perms().iter().enumerate() {
        let le_alpha = le.compose(alpha);
        for (s, inv) in inverses.iter().enumerate() {
            let image = le_alpha.compose(inv);
            let k = d.index_of(&image).ok_or_else(|| {
                CoverError::InternalAssertionFailure(format!(
                    "L_e α_{i} L_x⁻¹ is not in D for entry {s}"
                ))
            })?;
            let u = group.index(i, s);
            map[u] = group.index(k, s);
            psi[u] = alpha.apply(t.element(s));
        }
    }
    let f = GroupAutomorphism::validate(&group, map)
        .map_err(|e| CoverError::InternalAssertionFailure(format!("f: {e}")))?;
    let result = CoverResult {
        transversal: t,
        displacements: d.perms().to_vec(),
        affine: make_affine(group, f),
        psi,
    };
    if let Some(failure) = verify_cover(&result, q).failure {
        return Err(CoverError::InternalAssertionFailure(failure.to_string()));
    }
    Ok(result)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverFailure {
    GroupAxioms(String),
    NotAutomorphism(String),
    PsiOutOfRange(usize),
    TableMismatch(usize, usize),
    NotHomomorphism(usize, usize),
    NotSurjective(usize),
}

impl std::fmt::Display for CoverFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CoverFailure::GroupAxioms(e) => write!(f, "A is not an abelian group: {e}"),
            CoverFailure::NotAutomorphism(e) => write!(f, "f is not an automorphism: {e}"),
            CoverFailure::PsiOutOfRange(u) => write!(f, "psi({u}) is not an element of Q"),
            CoverFailure::TableMismatch(u, v) => {
                write!(f, "cover table disagrees with (1-f)(u)+f(v) at ({u}, {v})")
            }
            CoverFailure::NotHomomorphism(u, v) => {
                write!(f, "psi(u*v) != psi(u)*psi(v) at ({u}, {v})")
            }
            CoverFailure::NotSurjective(x) => write!(f, "{x} is not in the image of psi"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverReport {
    pub failure: Option<CoverFailure>,
}

impl CoverReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Exhaustive check that `r` is a cover of `q`: the group axioms, `f` an
/// automorphism, the table of `Aff(A, f)`, `ψ` a homomorphism, `ψ` onto.
pub fn verify_cover(r: &CoverResult, q: &Quandle) -> CoverReport {
    let fail = |f| CoverReport { failure: Some(f) };
    let a = r.group();
    let n = a.order();
    if let Err(e) = a.check_axioms() {
        return fail(CoverFailure::GroupAxioms(e.to_string()));
    }
    if let Err(e) = GroupAutomorphism::validate(a, r.f().map().to_vec()) {
        return fail(CoverFailure::NotAutomorphism(e.to_string()));
    }
    if r.psi.len() != n {
        return fail(CoverFailure::PsiOutOfRange(r.psi.len().min(n)));
    }
    if let Some(u) = r.psi.iter().position(|&x| x >= q.size()) {
        return fail(CoverFailure::PsiOutOfRange(u));
    }
    if r.affine.quandle.size() != n {
        return fail(CoverFailure::TableMismatch(0, 0));
    }
    let f = r.f();
    for u in 0..n {
        let left = a.sub(u, f.apply(u));
        for v in 0..n {
            let w = a.add(left, f.apply(v));
            if r.affine.quandle.op(u, v) != w {
                return fail(CoverFailure::TableMismatch(u, v));
            }
            if r.psi[w] != q.op(r.psi[u], r.psi[v]) {
                return fail(CoverFailure::NotHomomorphism(u, v));
            }
        }
    }
    let mut hit = vec![false; q.size()];
    for &x in &r.psi {
        hit[x] = true;
    }
    if let Some(x) = hit.iter().position(|h| !h) {
        return fail(CoverFailure::NotSurjective(x));
    }
    CoverReport { failure: None }
}
