//! Congruences, quotients and subdirect irreducibility.

use super::{AlgebraError, FiniteAlgebra};
use std::collections::{BTreeSet, HashSet};

/// Congruence enumeration refuses larger algebras.
pub const CONGRUENCE_SIZE_LIMIT: usize = 32;

/// An equivalence relation on `0..n`, stored as normalised block labels:
/// blocks are numbered in order of their least element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Congruence {
    block_of: Vec<usize>,
    blocks: usize,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra.max(rb)] = ra.min(rb);
        true
    }

    fn into_partition(mut self) -> Congruence {
        let n = self.0.len();
        let labels: Vec<usize> = (0..n).map(|x| self.find(x)).collect();
        Congruence::from_labels(&labels)
    }
}

impl Congruence {
    /// Normalises arbitrary labels: elements with equal labels share a block.
    pub fn from_labels<T: Eq + std::hash::Hash + Clone>(labels: &[T]) -> Congruence {
        let mut ids = std::collections::HashMap::new();
        let block_of = labels
            .iter()
            .map(|l| {
                let next = ids.len();
                *ids.entry(l.clone()).or_insert(next)
            })
            .collect();
        Congruence {
            block_of,
            blocks: ids.len(),
        }
    }

    /// Panics if the blocks do not partition `0..n`.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Congruence {
        let mut labels = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            for &x in block {
                assert_eq!(labels[x], usize::MAX, "element {x} in two blocks");
                labels[x] = b;
            }
        }
        assert!(labels.iter().all(|&l| l != usize::MAX), "blocks do not cover 0..{n}");
        Congruence::from_labels(&labels)
    }

    pub fn identity(n: usize) -> Congruence {
        Congruence {
            block_of: (0..n).collect(),
            blocks: n,
        }
    }

    pub fn total(n: usize) -> Congruence {
        Congruence {
            block_of: vec![0; n],
            blocks: n.min(1),
        }
    }

    pub fn size(&self) -> usize {
        self.block_of.len()
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    pub fn labels(&self) -> &[usize] {
        &self.block_of
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.blocks];
        for (x, &b) in self.block_of.iter().enumerate() {
            out[b].push(x);
        }
        out
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.block_of[a] == self.block_of[b]
    }

    pub fn is_identity(&self) -> bool {
        self.blocks == self.size()
    }

    pub fn is_total(&self) -> bool {
        self.blocks <= 1
    }

    /// `self ⊆ other`.
    pub fn refines(&self, other: &Congruence) -> bool {
        let mut image = vec![usize::MAX; self.blocks];
        for (x, &b) in self.block_of.iter().enumerate() {
            let o = other.block_of[x];
            if image[b] == usize::MAX {
                image[b] = o;
            } else if image[b] != o {
                return false;
            }
        }
        true
    }

    pub fn meet(&self, other: &Congruence) -> Congruence {
        let pairs: Vec<(usize, usize)> = self
            .block_of
            .iter()
            .zip(&other.block_of)
            .map(|(&a, &b)| (a, b))
            .collect();
        Congruence::from_labels(&pairs)
    }

    /// Equivalence join; for two congruences this is again a congruence.
    pub fn join(&self, other: &Congruence) -> Congruence {
        let mut uf = UnionFind::new(self.size());
        for c in [self, other] {
            let mut rep = vec![usize::MAX; c.blocks];
            for (x, &b) in c.block_of.iter().enumerate() {
                if rep[b] == usize::MAX {
                    rep[b] = x;
                } else {
                    uf.union(rep[b], x);
                }
            }
        }
        uf.into_partition()
    }

    /// Compatible with every operation of `a`.
    pub fn is_compatible(&self, a: &FiniteAlgebra) -> bool {
        let n = a.size();
        let blocks = self.blocks();
        // Checking pairs from a representative of each block suffices by
        // transitivity.
        for block in &blocks {
            let r = block[0];
            for &x in &block[1..] {
                if let Some(neg) = a.neg_table() {
                    if !self.related(neg[r], neg[x]) {
                        return false;
                    }
                }
                for z in 0..n {
                    if !self.related(a.meet(r, z), a.meet(x, z))
                        || !self.related(a.meet(z, r), a.meet(z, x))
                        || !self.related(a.join(r, z), a.join(x, z))
                        || !self.related(a.join(z, r), a.join(z, x))
                    {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl FiniteAlgebra {
    fn check_congruence_size(&self) -> Result<(), AlgebraError> {
        if self.size() > CONGRUENCE_SIZE_LIMIT {
            return Err(AlgebraError::TooLarge {
                size: self.size(),
                limit: CONGRUENCE_SIZE_LIMIT,
            });
        }
        Ok(())
    }

    /// The congruence generated by the given pairs.
    pub fn cg_pairs(&self, pairs: &[(usize, usize)]) -> Congruence {
        let n = self.size();
        let mut uf = UnionFind::new(n);
        let mut queue: Vec<(usize, usize)> = Vec::new();
        for &(a, b) in pairs {
            if uf.union(a, b) {
                queue.push((a, b));
            }
        }
        while let Some((x, y)) = queue.pop() {
            let mut push = |p: usize, q: usize, uf: &mut UnionFind| {
                if uf.union(p, q) {
                    queue.push((p, q));
                }
            };
            if let Some(neg) = self.neg_table() {
                push(neg[x], neg[y], &mut uf);
            }
            for z in 0..n {
                push(self.meet(x, z), self.meet(y, z), &mut uf);
                push(self.meet(z, x), self.meet(z, y), &mut uf);
                push(self.join(x, z), self.join(y, z), &mut uf);
                push(self.join(z, x), self.join(z, y), &mut uf);
            }
        }
        uf.into_partition()
    }

    /// The principal congruence Cg(a, b).
    pub fn cg(&self, a: usize, b: usize) -> Congruence {
        self.cg_pairs(&[(a, b)])
    }

    /// Distinct principal congruences Cg(a, b) with `a < b`, sorted.
    fn principal_congruences(&self) -> Vec<Congruence> {
        let n = self.size();
        let mut set = BTreeSet::new();
        for a in 0..n {
            for b in a + 1..n {
                set.insert(self.cg(a, b));
            }
        }
        set.into_iter().collect()
    }

    /// Every congruence, including Δ and ∇, sorted by number of blocks
    /// (descending) and then labels.
    pub fn congruences(&self) -> Result<Vec<Congruence>, AlgebraError> {
        self.check_congruence_size()?;
        let n = self.size();
        let principal = self.principal_congruences();
        let mut seen: HashSet<Congruence> = HashSet::new();
        let mut all = vec![Congruence::identity(n)];
        seen.insert(all[0].clone());
        for p in &principal {
            if seen.insert(p.clone()) {
                all.push(p.clone());
            }
        }
        let mut next = 1;
        while next < all.len() {
            let c = all[next].clone();
            for p in &principal {
                let j = c.join(p);
                if seen.insert(j.clone()) {
                    all.push(j);
                }
            }
            next += 1;
        }
        all.sort_by(|a, b| b.num_blocks().cmp(&a.num_blocks()).then_with(|| a.cmp(b)));
        Ok(all)
    }

    /// A/θ; a block is named `[a,b,..]` after its members, or keeps the sole
    /// member's name when it is a singleton.
    pub fn quotient(&self, theta: &Congruence) -> FiniteAlgebra {
        assert_eq!(theta.size(), self.size(), "congruence on a different carrier");
        let blocks = theta.blocks();
        let names = blocks
            .iter()
            .map(|b| {
                if b.len() == 1 {
                    self.element_name(b[0]).to_string()
                } else {
                    let parts: Vec<&str> = b.iter().map(|&x| self.element_name(x)).collect();
                    format!("[{}]", parts.join(","))
                }
            })
            .collect();
        let neg_fn = |i: usize| theta.block_of(self.neg(blocks[i][0]));
        FiniteAlgebra::from_fns(
            format!("{}/θ", self.name()),
            names,
            |i, j| theta.block_of(self.meet(blocks[i][0], blocks[j][0])),
            |i, j| theta.block_of(self.join(blocks[i][0], blocks[j][0])),
            if self.has_neg() { Some(&neg_fn) } else { None },
        )
        .expect("quotient tables are valid")
    }

    /// The least nontrivial congruence, if there is one. A one-element
    /// algebra has none.
    pub fn monolith(&self) -> Result<Option<Congruence>, AlgebraError> {
        self.check_congruence_size()?;
        let n = self.size();
        if n <= 1 {
            return Ok(None);
        }
        let mut acc = Congruence::total(n);
        for c in self.principal_congruences() {
            acc = acc.meet(&c);
            if acc.is_identity() {
                return Ok(None);
            }
        }
        Ok(Some(acc))
    }

    /// True when the nontrivial congruences have a nontrivial intersection.
    /// The one-element algebra counts as subdirectly irreducible.
    pub fn is_subdirectly_irreducible(&self) -> Result<bool, AlgebraError> {
        if self.size() <= 1 {
            return Ok(true);
        }
        Ok(self.monolith()?.is_some())
    }
}
