//! Permutations of `0..n` and finite permutation groups by full enumeration.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::GroupError;
use crate::quandle::Partition;

/// A bijection of `0..n`, stored as its image sequence.
///
/// Maps act on the left: `a.compose(&b)` is `x -> a(b(x))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(GroupError::NotAPermutation(n));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        Permutation { images }
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation { images: other.images.iter().map(|&x| self.images[x]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// `by ∘ self ∘ by⁻¹`.
    pub fn conjugate_by(&self, by: &Permutation) -> Permutation {
        by.compose(self).compose(&by.inverse())
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn has_fixed_point(&self) -> bool {
        self.images.iter().enumerate().any(|(i, &x)| i == x)
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.images
            .iter()
            .zip(&other.images)
            .all(|(&a, &b)| other.images[a] == self.images[b])
    }

    /// Sorted cycle lengths.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable();
        lens
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.images)
    }
}

/// A permutation group, materialized as its full element list.
///
/// Elements are stored in discovery order of a breadth-first closure
/// starting from the identity, so `elements()[0]` is always the identity.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl PermGroup {
    /// Closure of `generators` under composition. Each dequeued element `g`
    /// is multiplied on the right by every generator in input order.
    pub fn closure(degree: usize, generators: Vec<Permutation>) -> Result<Self, GroupError> {
        for g in &generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch { expected: degree, got: g.degree() });
            }
        }
        let id = Permutation::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::new();
        index.insert(id, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for s in &generators {
                let h = elements[i].compose(s);
                if !index.contains_key(&h) {
                    index.insert(h.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(h);
                }
            }
        }
        Ok(PermGroup { degree, generators, elements, index })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    /// A group is abelian iff its generators commute pairwise.
    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        (0..g.len()).all(|i| (i + 1..g.len()).all(|j| g[i].commutes_with(&g[j])))
    }

    /// No non-identity element fixes a point.
    pub fn is_semiregular(&self) -> bool {
        self.elements.iter().skip(1).all(|p| !p.has_fixed_point())
    }

    pub fn orbits(&self) -> Partition {
        orbits_of_generators(self.degree, &self.generators)
    }
}

/// Orbits of the group generated by `generators`, via union-find.
pub fn orbits_of_generators(degree: usize, generators: &[Permutation]) -> Partition {
    let mut parent: Vec<usize> = (0..degree).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for g in generators {
        for x in 0..degree {
            let (a, b) = (find(&mut parent, x), find(&mut parent, g.apply(x)));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let roots: Vec<usize> = (0..degree).map(|x| find(&mut parent, x)).collect();
    Partition::from_key(degree, |x| roots[x])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_acts_on_the_left() {
        let a = Permutation::new(vec![1, 2, 0]).unwrap();
        let b = Permutation::new(vec![1, 0, 2]).unwrap();
        // a(b(0)) = a(1) = 2
        assert_eq!(a.compose(&b).apply(0), 2);
        assert!(a.compose(&a.inverse()).is_identity());
        assert_eq!(a.cycle_type(), vec![3]);
        assert_eq!(b.cycle_type(), vec![1, 2]);
        assert!(!a.commutes_with(&b));
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![0, 2]).is_err());
    }

    #[test]
    fn closure_of_nothing_is_trivial() {
        let g = PermGroup::closure(4, vec![]).unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.is_abelian());
        assert!(g.is_semiregular());
    }

    #[test]
    fn closure_of_transposition() {
        let g = PermGroup::closure(2, vec![Permutation::new(vec![1, 0]).unwrap()]).unwrap();
        assert_eq!(g.order(), 2);
        assert!(g.elements()[0].is_identity());
    }

    #[test]
    fn closure_of_s3() {
        let gens = vec![
            Permutation::new(vec![1, 0, 2]).unwrap(),
            Permutation::new(vec![1, 2, 0]).unwrap(),
        ];
        let g = PermGroup::closure(3, gens).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        assert!(!g.is_semiregular());
        assert_eq!(g.orbits().len(), 1);
    }

    #[test]
    fn closure_checks_degrees() {
        let err = PermGroup::closure(3, vec![Permutation::identity(2)]).unwrap_err();
        assert_eq!(err, GroupError::DegreeMismatch { expected: 3, got: 2 });
    }

    #[test]
    fn orbits_from_generators() {
        let g = Permutation::new(vec![1, 0, 2, 4, 3]).unwrap();
        let p = orbits_of_generators(5, &[g]);
        assert_eq!(p.blocks(), &[vec![0, 1], vec![2], vec![3, 4]]);
    }
}
