//! Finite abelian groups, their automorphisms, and affine quandles
//! `Aff(A, f)` with `a*b = (1 - f)(a) + f(b)`.
//!
//! Groups are handled through the element-indexed [`AbelianGroup`] trait:
//! elements are `0..order()` and the group supplies `add`, `neg` and
//! `zero`. Concrete products of cyclic groups and abstract groups given
//! by tables both implement it, and every affine operation is written
//! against the trait.

use std::collections::BTreeSet;

use crate::error::GroupError;
use crate::quandle::Quandle;

pub trait AbelianGroup {
    fn order(&self) -> usize;
    fn zero(&self) -> usize;
    fn add(&self, a: usize, b: usize) -> usize;
    fn neg(&self, a: usize) -> usize;

    fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// Exhaustive check of the abelian group axioms.
    fn check_axioms(&self) -> Result<(), GroupError> {
        let n = self.order();
        let z = self.zero();
        if z >= n {
            return Err(GroupError::AxiomViolation("zero out of range".into()));
        }
        for a in 0..n {
            if self.add(a, z) != a {
                return Err(GroupError::AxiomViolation(format!("{a} + 0 != {a}")));
            }
            if self.add(a, self.neg(a)) != z {
                return Err(GroupError::AxiomViolation(format!("{a} - {a} != 0")));
            }
            for b in 0..n {
                let ab = self.add(a, b);
                if ab >= n {
                    return Err(GroupError::AxiomViolation(format!("{a} + {b} out of range")));
                }
                if ab != self.add(b, a) {
                    return Err(GroupError::AxiomViolation(format!("{a} + {b} != {b} + {a}")));
                }
                for c in 0..n {
                    if self.add(ab, c) != self.add(a, self.add(b, c)) {
                        return Err(GroupError::AxiomViolation(format!(
                            "({a} + {b}) + {c} != {a} + ({b} + {c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The subgroup generated by `gens`, as a sorted element list.
    fn generated_subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[self.zero()] = true;
        let mut stack = vec![self.zero()];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.add(x, g);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        (0..self.order()).filter(|&x| seen[x]).collect()
    }
}

/// `Z_{m_1} × … × Z_{m_r}`, elements enumerated in mixed-radix order with
/// the last coordinate varying fastest. Index 0 is the zero tuple.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclicProduct {
    moduli: Vec<usize>,
    order: usize,
}

impl CyclicProduct {
    pub fn new(moduli: Vec<usize>) -> Result<Self, GroupError> {
        if moduli.is_empty() {
            return Err(GroupError::EmptyModuli);
        }
        if moduli.contains(&0) {
            return Err(GroupError::ZeroModulus);
        }
        let order = moduli.iter().product();
        Ok(CyclicProduct { moduli, order })
    }

    pub fn cyclic(m: usize) -> Self {
        CyclicProduct::new(vec![m]).expect("positive modulus")
    }

    pub fn moduli(&self) -> &[usize] {
        &self.moduli
    }

    pub fn to_tuple(&self, mut x: usize) -> Vec<usize> {
        let mut t = vec![0; self.moduli.len()];
        for (i, &m) in self.moduli.iter().enumerate().rev() {
            t[i] = x % m;
            x /= m;
        }
        t
    }

    pub fn from_tuple(&self, t: &[usize]) -> usize {
        t.iter().zip(&self.moduli).fold(0, |acc, (&v, &m)| acc * m + v % m)
    }

    /// Unit vector of the `i`-th factor.
    pub fn basis_element(&self, i: usize) -> usize {
        let mut t = vec![0; self.moduli.len()];
        t[i] = 1 % self.moduli[i];
        self.from_tuple(&t)
    }

    /// `k·x`.
    pub fn scale(&self, k: i64, x: usize) -> usize {
        let t: Vec<usize> = self
            .to_tuple(x)
            .iter()
            .zip(&self.moduli)
            .map(|(&v, &m)| (k * v as i64).rem_euclid(m as i64) as usize)
            .collect();
        self.from_tuple(&t)
    }

    pub fn label(&self, x: usize) -> String {
        if self.moduli.len() == 1 {
            x.to_string()
        } else {
            let t: Vec<String> = self.to_tuple(x).iter().map(|v| v.to_string()).collect();
            format!("({})", t.join(","))
        }
    }
}

impl AbelianGroup for CyclicProduct {
    fn order(&self) -> usize {
        self.order
    }

    fn zero(&self) -> usize {
        0
    }

    fn add(&self, a: usize, b: usize) -> usize {
        // mixed-radix addition without materializing tuples
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for &m in self.moduli.iter().rev() {
            out += ((a % m + b % m) % m) * place;
            place *= m;
            a /= m;
            b /= m;
        }
        out
    }

    fn neg(&self, a: usize) -> usize {
        let mut a = a;
        let mut out = 0;
        let mut place = 1;
        for &m in self.moduli.iter().rev() {
            out += ((m - a % m) % m) * place;
            place *= m;
            a /= m;
        }
        out
    }
}

/// A group given by an explicit addition table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableGroup {
    n: usize,
    zero: usize,
    add: Vec<u32>,
    neg: Vec<u32>,
}

impl TableGroup {
    /// Builds the group and verifies the axioms exhaustively.
    pub fn new(n: usize, zero: usize, add: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        if add.len() != n || add.iter().any(|r| r.len() != n) {
            return Err(GroupError::WrongLength { expected: n, got: add.len() });
        }
        let g = Self::from_table(n, zero, add.into_iter().flatten().map(|x| x as u32).collect())?;
        g.check_axioms()?;
        Ok(g)
    }

    /// Inverses are read off the table; the axioms are not checked.
    pub(crate) fn from_table(n: usize, zero: usize, add: Vec<u32>) -> Result<Self, GroupError> {
        let mut neg = vec![u32::MAX; n];
        for a in 0..n {
            for b in 0..n {
                let v = add[a * n + b] as usize;
                if v >= n {
                    return Err(GroupError::OutOfRange(v));
                }
                if v == zero {
                    neg[a] = b as u32;
                }
            }
        }
        if let Some(a) = neg.iter().position(|&x| x == u32::MAX) {
            return Err(GroupError::AxiomViolation(format!("{a} has no inverse")));
        }
        Ok(TableGroup { n, zero, add, neg })
    }
}

impl AbelianGroup for TableGroup {
    fn order(&self) -> usize {
        self.n
    }

    fn zero(&self) -> usize {
        self.zero
    }

    fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.n + b] as usize
    }

    fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }
}

/// `G × H` with element `(g, h)` at index `g·|H| + h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectProduct<G, H> {
    pub left: G,
    pub right: H,
}

impl<G: AbelianGroup, H: AbelianGroup> DirectProduct<G, H> {
    pub fn new(left: G, right: H) -> Self {
        DirectProduct { left, right }
    }

    pub fn pair(&self, x: usize) -> (usize, usize) {
        (x / self.right.order(), x % self.right.order())
    }

    pub fn index(&self, g: usize, h: usize) -> usize {
        g * self.right.order() + h
    }
}

impl<G: AbelianGroup, H: AbelianGroup> AbelianGroup for DirectProduct<G, H> {
    fn order(&self) -> usize {
        self.left.order() * self.right.order()
    }

    fn zero(&self) -> usize {
        self.index(self.left.zero(), self.right.zero())
    }

    fn add(&self, a: usize, b: usize) -> usize {
        let ((a1, a2), (b1, b2)) = (self.pair(a), self.pair(b));
        self.index(self.left.add(a1, b1), self.right.add(a2, b2))
    }

    fn neg(&self, a: usize) -> usize {
        let (a1, a2) = self.pair(a);
        self.index(self.left.neg(a1), self.right.neg(a2))
    }

    /// Componentwise operations satisfy the axioms iff both factors do.
    fn check_axioms(&self) -> Result<(), GroupError> {
        self.left.check_axioms()?;
        self.right.check_axioms()
    }
}

/// A homomorphism between two groups, stored as an element map.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupHom {
    map: Vec<usize>,
}

impl GroupHom {
    pub fn validate<G: AbelianGroup, H: AbelianGroup>(
        from: &G,
        to: &H,
        map: Vec<usize>,
    ) -> Result<Self, GroupError> {
        if map.len() != from.order() {
            return Err(GroupError::WrongLength { expected: from.order(), got: map.len() });
        }
        if let Some(&v) = map.iter().find(|&&v| v >= to.order()) {
            return Err(GroupError::OutOfRange(v));
        }
        for a in 0..from.order() {
            for b in 0..from.order() {
                if map[from.add(a, b)] != to.add(map[a], map[b]) {
                    return Err(GroupError::NotAdditive(a, b));
                }
            }
        }
        Ok(GroupHom { map })
    }

    pub fn zero<G: AbelianGroup, H: AbelianGroup>(from: &G, to: &H) -> Self {
        GroupHom { map: vec![to.zero(); from.order()] }
    }

    pub fn identity<G: AbelianGroup>(g: &G) -> Self {
        GroupHom { map: (0..g.order()).collect() }
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.map.len()];
        self.map.iter().all(|&v| v < seen.len() && !std::mem::replace(&mut seen[v], true))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GroupHom) -> GroupHom {
        GroupHom { map: other.map.iter().map(|&x| self.map[x]).collect() }
    }

    /// `x ↦ x - self(x)` on an endomorphism of `g`.
    pub fn one_minus<G: AbelianGroup>(&self, g: &G) -> GroupHom {
        GroupHom { map: (0..g.order()).map(|x| g.sub(x, self.map[x])).collect() }
    }
}

/// A validated automorphism of a group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupAutomorphism {
    hom: GroupHom,
}

impl GroupAutomorphism {
    /// Checks bijectivity first, then additivity (first witness in
    /// lexicographic order).
    pub fn validate<G: AbelianGroup>(g: &G, map: Vec<usize>) -> Result<Self, GroupError> {
        if map.len() != g.order() {
            return Err(GroupError::WrongLength { expected: g.order(), got: map.len() });
        }
        if let Some(&v) = map.iter().find(|&&v| v >= g.order()) {
            return Err(GroupError::OutOfRange(v));
        }
        let candidate = GroupHom { map };
        if !candidate.is_bijective() {
            return Err(GroupError::NotBijective);
        }
        let hom = GroupHom::validate(g, g, candidate.map)?;
        Ok(GroupAutomorphism { hom })
    }

    pub fn identity<G: AbelianGroup>(g: &G) -> Self {
        GroupAutomorphism { hom: GroupHom::identity(g) }
    }

    /// `x ↦ u·x` on a cyclic product; fails unless `u` is a unit.
    pub fn multiplication(g: &CyclicProduct, u: i64) -> Result<Self, GroupError> {
        let map = (0..g.order()).map(|x| g.scale(u, x)).collect();
        Self::validate(g, map)
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.hom.apply(x)
    }

    pub fn map(&self) -> &[usize] {
        self.hom.map()
    }

    pub fn as_hom(&self) -> &GroupHom {
        &self.hom
    }
}

/// `Aff(A, f)`: the group, the automorphism and the induced quandle.
#[derive(Debug, Clone)]
pub struct AffineQuandle<G> {
    pub group: G,
    pub f: GroupAutomorphism,
    pub quandle: Quandle,
}

/// Builds the table of `a*b = (a - f(a)) + f(b)` under the group's indexing.
pub fn make_affine<G: AbelianGroup>(group: G, f: GroupAutomorphism) -> AffineQuandle<G> {
    let n = group.order();
    let one_minus_f: Vec<usize> = (0..n).map(|a| group.sub(a, f.apply(a))).collect();
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            table.push(group.add(one_minus_f[a], f.apply(b)) as u32);
        }
    }
    let quandle = Quandle::from_table_unchecked(n, table);
    if cfg!(debug_assertions) && n <= 32 {
        quandle.validate().expect("affine tables are quandles");
    }
    AffineQuandle { group, f, quandle }
}

/// `Im(1 - f) = {a - f(a)}`, sorted.
pub fn image_of_one_minus_f<G: AbelianGroup>(group: &G, f: &GroupAutomorphism) -> Vec<usize> {
    (0..group.order())
        .map(|a| group.sub(a, f.apply(a)))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// Smallest subset containing `seed` closed under `*` and left division, sorted.
pub fn subquandle_closure(q: &Quandle, seed: &[usize]) -> Vec<usize> {
    let mut inside = vec![false; q.size()];
    let mut members = Vec::new();
    for &x in seed {
        if !inside[x] {
            inside[x] = true;
            members.push(x);
        }
    }
    let mut done = 0;
    // every pair with at least one newly added member gets processed once
    while done < members.len() {
        let x = members[done];
        done += 1;
        let mut i = 0;
        while i < done {
            let y = members[i];
            i += 1;
            for z in [q.op(x, y), q.op(y, x), q.left_divide(x, y), q.left_divide(y, x)] {
                if !inside[z] {
                    inside[z] = true;
                    members.push(z);
                }
            }
        }
    }
    members.sort_unstable();
    members
}

/// Every homomorphism `from → to`, by brute force over the images of the
/// basis elements of `from`. Only sensible for tiny groups.
pub fn all_homs<H: AbelianGroup>(from: &CyclicProduct, to: &H) -> Vec<GroupHom> {
    let r = from.moduli().len();
    let n = from.order();
    let tuples: Vec<Vec<usize>> = (0..n).map(|x| from.to_tuple(x)).collect();
    let scale = |k: usize, x: usize| (0..k).fold(to.zero(), |acc, _| to.add(acc, x));
    let mut out = Vec::new();
    let mut choice = vec![0usize; r];
    loop {
        let map: Vec<usize> = tuples
            .iter()
            .map(|t| t.iter().zip(&choice).fold(to.zero(), |acc, (&k, &img)| to.add(acc, scale(k, img))))
            .collect();
        if let Ok(h) = GroupHom::validate(from, to, map) {
            out.push(h);
        }
        let mut i = 0;
        loop {
            if i == r {
                return out;
            }
            choice[i] += 1;
            if choice[i] < to.order() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// Every automorphism of a cyclic product.
pub fn all_automorphisms(g: &CyclicProduct) -> Vec<GroupAutomorphism> {
    all_homs(g, g)
        .into_iter()
        .filter(GroupHom::is_bijective)
        .map(|hom| GroupAutomorphism { hom })
        .collect()
}

/// One representative of each abelian group of order `n`, as a product of
/// cyclic groups of prime-power order.
pub fn abelian_groups_of_order(n: usize) -> Vec<CyclicProduct> {
    if n == 1 {
        return vec![CyclicProduct::cyclic(1)];
    }
    let mut factors: Vec<(usize, u32)> = Vec::new();
    let mut m = n;
    let mut p = 2;
    while m > 1 {
        if m % p == 0 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += 1;
    }
    fn partitions(e: u32, max: u32) -> Vec<Vec<u32>> {
        if e == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in (1..=e.min(max)).rev() {
            for mut rest in partitions(e - first, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    let mut combos: Vec<Vec<usize>> = vec![vec![]];
    for (p, e) in factors {
        let mut next = Vec::new();
        for combo in &combos {
            for part in partitions(e, e) {
                let mut c = combo.clone();
                c.extend(part.iter().map(|&k| p.pow(k)));
                next.push(c);
            }
        }
        combos = next;
    }
    combos.into_iter().map(|m| CyclicProduct::new(m).unwrap()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{displacement_group, is_medial, is_tiny, orbits};

    #[test]
    fn cyclic_products() {
        assert_eq!(CyclicProduct::new(vec![1]).unwrap().order(), 1);
        let z8 = CyclicProduct::new(vec![8]).unwrap();
        assert_eq!(z8.order(), 8);
        assert_eq!(z8.add(5, 6), 3);
        assert_eq!(z8.neg(3), 5);
        let z222 = CyclicProduct::new(vec![2, 2, 2]).unwrap();
        assert_eq!(z222.order(), 8);
        assert_eq!(z222.to_tuple(0), vec![0, 0, 0]);
        assert_eq!(z222.to_tuple(1), vec![0, 0, 1]);
        assert_eq!(z222.add(3, 5), 6);
        z222.check_axioms().unwrap();
        CyclicProduct::new(vec![2, 3]).unwrap().check_axioms().unwrap();
        assert_eq!(CyclicProduct::new(vec![]), Err(GroupError::EmptyModuli));
    }

    #[test]
    fn automorphism_validation() {
        let z8 = CyclicProduct::cyclic(8);
        assert!(GroupAutomorphism::validate(&z8, (0..8).collect()).is_ok());
        assert!(GroupAutomorphism::multiplication(&z8, 5).is_ok());
        assert_eq!(GroupAutomorphism::multiplication(&z8, 2), Err(GroupError::NotBijective));
        // a bijection that is not additive: swap 1 and 2
        let map = vec![0, 2, 1, 3, 4, 5, 6, 7];
        assert_eq!(GroupAutomorphism::validate(&z8, map), Err(GroupError::NotAdditive(1, 1)));
    }

    #[test]
    fn affine_tables() {
        let z4 = CyclicProduct::cyclic(4);
        let q = make_affine(z4, GroupAutomorphism::multiplication(&CyclicProduct::cyclic(4), -1).unwrap());
        assert_eq!(q.quandle.op(1, 3), 3);
        let z8 = CyclicProduct::cyclic(8);
        let f = GroupAutomorphism::multiplication(&z8, 5).unwrap();
        let q = make_affine(z8, f);
        assert_eq!(q.quandle.op(0, 1), 5);
        let z222 = CyclicProduct::new(vec![2, 2, 2]).unwrap();
        let id = GroupAutomorphism::identity(&z222);
        assert_eq!(make_affine(z222, id).quandle, Quandle::projection(8));
    }

    #[test]
    fn image_of_one_minus_f_examples() {
        let z8 = CyclicProduct::cyclic(8);
        assert_eq!(image_of_one_minus_f(&z8, &GroupAutomorphism::identity(&z8)), vec![0]);
        let f = GroupAutomorphism::multiplication(&z8, 5).unwrap();
        assert_eq!(image_of_one_minus_f(&z8, &f), vec![0, 4]);
        let z4 = CyclicProduct::cyclic(4);
        let f = GroupAutomorphism::multiplication(&z4, -1).unwrap();
        assert_eq!(image_of_one_minus_f(&z4, &f), vec![0, 2]);
    }

    #[test]
    fn subquandle_closures() {
        let z9 = CyclicProduct::cyclic(9);
        let f = GroupAutomorphism::multiplication(&z9, 4).unwrap();
        let q = make_affine(z9, f).quandle;
        assert_eq!(subquandle_closure(&q, &[5]), vec![5]);
        assert_eq!(subquandle_closure(&q, &[0, 3, 6, 1, 4, 7]), vec![0, 1, 3, 4, 6, 7]);
        let z8 = CyclicProduct::cyclic(8);
        let f = GroupAutomorphism::multiplication(&z8, 5).unwrap();
        let q = make_affine(z8, f).quandle;
        assert_eq!(subquandle_closure(&q, &[0, 4, 2, 6, 1, 5]), vec![0, 1, 2, 4, 5, 6]);
        assert_eq!(subquandle_closure(&q, &[0, 1]).len(), 4);
    }

    #[test]
    fn automorphism_counts() {
        // |Aut(Z_n)| = φ(n); |Aut(Z2²)| = 6; |Aut(Z2³)| = 168; |Aut(Z3²)| = 48
        assert_eq!(all_automorphisms(&CyclicProduct::cyclic(9)).len(), 6);
        assert_eq!(all_automorphisms(&CyclicProduct::cyclic(1)).len(), 1);
        assert_eq!(all_automorphisms(&CyclicProduct::new(vec![2, 2]).unwrap()).len(), 6);
        assert_eq!(all_automorphisms(&CyclicProduct::new(vec![2, 2, 2]).unwrap()).len(), 168);
        assert_eq!(all_automorphisms(&CyclicProduct::new(vec![3, 3]).unwrap()).len(), 48);
        assert_eq!(all_automorphisms(&CyclicProduct::new(vec![4, 2]).unwrap()).len(), 8);
    }

    #[test]
    fn hom_counts() {
        // |Hom(Z_m, Z_n)| = gcd(m, n)
        let z4 = CyclicProduct::cyclic(4);
        let z6 = CyclicProduct::cyclic(6);
        assert_eq!(all_homs(&z4, &z6).len(), 2);
        assert_eq!(all_homs(&z6, &z4).len(), 2);
        let v4 = CyclicProduct::new(vec![2, 2]).unwrap();
        assert_eq!(all_homs(&v4, &v4).len(), 16);
        assert_eq!(all_homs(&v4, &z4).len(), 4);
        assert_eq!(all_homs(&CyclicProduct::cyclic(3), &z4).len(), 1);
    }

    #[test]
    fn groups_of_small_order() {
        let count = |n| abelian_groups_of_order(n).len();
        assert_eq!((1..=9).map(count).collect::<Vec<_>>(), vec![1, 1, 1, 2, 1, 1, 1, 3, 2]);
        assert_eq!(count(12), 2);
        for g in abelian_groups_of_order(8) {
            assert_eq!(g.order(), 8);
        }
    }

    #[test]
    fn affine_quandles_are_medial_tiny_and_semiregular() {
        for n in 1..=8 {
            for g in abelian_groups_of_order(n) {
                for f in all_automorphisms(&g) {
                    let image = image_of_one_minus_f(&g, &f);
                    let q = make_affine(g.clone(), f).quandle;
                    q.validate().unwrap();
                    assert!(is_medial(&q));
                    assert!(is_tiny(&q));
                    let dis = displacement_group(&q);
                    assert!(dis.is_semiregular());
                    assert_eq!(dis.order(), image.len());
                    let orbs = orbits(&q);
                    assert!(orbs.sizes().iter().all(|&s| s == image.len()));
                    assert_eq!(orbs.blocks()[0], image);
                }
            }
        }
    }
}
