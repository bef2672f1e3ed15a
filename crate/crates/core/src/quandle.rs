//! Finite quandles given by multiplication tables.
//!
//! Elements are the integers `0..n`. A [`Quandle`] can only be obtained
//! through validation (or from constructions that are quandles by
//! construction), so every value of the type satisfies idempotence,
//! bijectivity of left translations and left self-distributivity.

use crate::error::QuandleError;
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quandle {
    n: usize,
    table: Vec<u32>,
}

impl Quandle {
    /// Validates a square table, `rows[a][b] = a*b`.
    ///
    /// Idempotence is checked for every element first, then bijectivity
    /// of every row, then left distributivity in lexicographic `(a, b, c)`
    /// order. The error names the first witness found.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self, QuandleError> {
        let n = rows.len();
        if n == 0 {
            return Err(QuandleError::Empty);
        }
        let mut table = Vec::with_capacity(n * n);
        for (a, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(QuandleError::NotSquare { row: a, len: row.len(), expected: n });
            }
            for (b, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(QuandleError::EntryOutOfRange { a, b, value: v });
                }
                table.push(v as u32);
            }
        }
        let q = Quandle { n, table };
        q.check_axioms()?;
        Ok(q)
    }

    /// Validates the table of the operation `op` on `0..n`.
    pub fn from_fn(n: usize, op: impl Fn(usize, usize) -> usize) -> Result<Self, QuandleError> {
        let rows: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| op(a, b)).collect()).collect();
        Self::from_rows(&rows)
    }

    /// Builds a quandle from a table known to satisfy the axioms.
    pub(crate) fn from_table_unchecked(n: usize, table: Vec<u32>) -> Self {
        debug_assert_eq!(table.len(), n * n);
        Quandle { n, table }
    }

    fn check_axioms(&self) -> Result<(), QuandleError> {
        let n = self.n;
        for a in 0..n {
            if self.op(a, a) != a {
                return Err(QuandleError::NotIdempotent(a));
            }
        }
        let mut seen = vec![false; n];
        for a in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for b in 0..n {
                let v = self.op(a, b);
                if seen[v] {
                    return Err(QuandleError::RowNotBijective(a));
                }
                seen[v] = true;
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.op(a, b);
                for c in 0..n {
                    if self.op(a, self.op(b, c)) != self.op(ab, self.op(a, c)) {
                        return Err(QuandleError::NotLeftDistributive(a, b, c));
                    }
                }
            }
        }
        Ok(())
    }

    /// Re-runs the full axiom scan. Intended for assertions on constructed tables.
    pub fn validate(&self) -> Result<(), QuandleError> {
        self.check_axioms()
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|a| (0..self.n).map(|b| self.op(a, b)).collect()).collect()
    }

    pub fn left_translation(&self, a: usize) -> Permutation {
        Permutation::from_images_unchecked((0..self.n).map(|b| self.op(a, b)).collect())
    }

    pub fn left_translations(&self) -> Vec<Permutation> {
        (0..self.n).map(|a| self.left_translation(a)).collect()
    }

    /// The unique `y` with `a*y = c`.
    pub fn left_divide(&self, a: usize, c: usize) -> usize {
        let row = &self.table[a * self.n..(a + 1) * self.n];
        row.iter()
            .position(|&v| v as usize == c)
            .expect("rows of a validated quandle are bijections")
    }

    /// Quotient by a congruence. Blocks of the result are numbered in the
    /// partition's canonical order (ascending by least element).
    pub fn quotient(&self, p: &Partition) -> Result<Quandle, QuandleError> {
        if p.universe() != self.n {
            return Err(QuandleError::InvalidPartition(format!(
                "partition covers {} elements, quandle has {}",
                p.universe(),
                self.n
            )));
        }
        let blocks = p.blocks();
        // Representative products decide the quotient table; every other
        // pair is then checked against it.
        let k = blocks.len();
        let mut table = vec![0u32; k * k];
        for (i, bi) in blocks.iter().enumerate() {
            for (j, bj) in blocks.iter().enumerate() {
                table[i * k + j] = p.block_of(self.op(bi[0], bj[0])) as u32;
            }
        }
        for a in 0..self.n {
            for a2 in 0..self.n {
                if p.block_of(a) != p.block_of(a2) {
                    continue;
                }
                for b in 0..self.n {
                    for b2 in 0..self.n {
                        if p.block_of(b) != p.block_of(b2) {
                            continue;
                        }
                        if p.block_of(self.op(a, b)) != p.block_of(self.op(a2, b2)) {
                            return Err(QuandleError::NotACongruence(a, a2, b, b2));
                        }
                    }
                }
            }
        }
        Ok(Quandle::from_table_unchecked(k, table))
    }

    /// The subquandle induced on `elements`, relabelled `0..len` in the
    /// given order. Fails if the set is not closed under the operation.
    pub fn induced(&self, elements: &[usize]) -> Result<Quandle, QuandleError> {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &x) in elements.iter().enumerate() {
            if x >= self.n || pos[x] != usize::MAX {
                return Err(QuandleError::InvalidPartition(format!(
                    "element {x} is out of range or repeated"
                )));
            }
            pos[x] = i;
        }
        let k = elements.len();
        let mut table = Vec::with_capacity(k * k);
        for &a in elements {
            for &b in elements {
                let v = pos[self.op(a, b)];
                if v == usize::MAX {
                    return Err(QuandleError::InvalidPartition(format!(
                        "subset is not closed: {a}*{b} = {} is outside",
                        self.op(a, b)
                    )));
                }
                table.push(v as u32);
            }
        }
        Ok(Quandle::from_table_unchecked(k, table))
    }

    /// The quandle transported along the bijection `relabel`: element `x`
    /// becomes `relabel[x]`.
    pub fn relabel(&self, relabel: &Permutation) -> Quandle {
        let n = self.n;
        assert_eq!(relabel.degree(), n);
        let inv = relabel.inverse();
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                let v = self.op(inv.apply(a), inv.apply(b));
                table[a * n + b] = relabel.apply(v) as u32;
            }
        }
        Quandle::from_table_unchecked(n, table)
    }

    /// `x*y = y` on `0..n`.
    pub fn projection(n: usize) -> Quandle {
        let table = (0..n).flat_map(|_| (0..n).map(|b| b as u32)).collect();
        Quandle::from_table_unchecked(n, table)
    }
}

/// A partition of `0..n` into nonempty disjoint blocks.
///
/// Blocks are kept sorted internally and ordered by their least element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

impl Partition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self, QuandleError> {
        let mut blocks: Vec<Vec<usize>> = blocks;
        let mut seen = vec![false; n];
        for b in &mut blocks {
            if b.is_empty() {
                return Err(QuandleError::InvalidPartition("empty block".into()));
            }
            for &x in b.iter() {
                if x >= n {
                    return Err(QuandleError::InvalidPartition(format!("element {x} out of range")));
                }
                if seen[x] {
                    return Err(QuandleError::InvalidPartition(format!("element {x} repeated")));
                }
                seen[x] = true;
            }
            b.sort_unstable();
        }
        if let Some(x) = seen.iter().position(|s| !s) {
            return Err(QuandleError::InvalidPartition(format!("element {x} not covered")));
        }
        blocks.sort_by_key(|b| b[0]);
        let mut block_of = vec![0; n];
        for (i, b) in blocks.iter().enumerate() {
            for &x in b {
                block_of[x] = i;
            }
        }
        Ok(Partition { blocks, block_of })
    }

    /// Groups `0..n` by the value of `key`.
    pub fn from_key<K: Eq + std::hash::Hash>(n: usize, key: impl Fn(usize) -> K) -> Self {
        let mut index = std::collections::HashMap::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            let i = *index.entry(key(x)).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[i].push(x);
        }
        Partition::new(n, blocks).expect("keyed grouping is a partition")
    }

    pub fn singletons(n: usize) -> Self {
        Partition::new(n, (0..n).map(|x| vec![x]).collect()).unwrap()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn universe(&self) -> usize {
        self.block_of.len()
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    /// Block sizes in block order.
    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }
}
