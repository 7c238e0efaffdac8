//! Exhaustive enumeration of small terms.
//!
//! A [`TermSpace`] lists every term over `vars` variables with at most
//! `max_nodes` syntax-tree nodes. Terms are stored as a DAG in size order, so
//! every child index is smaller than its parent's; evaluators can fill
//! term-function tables bottom-up.
//!
//! Identities are enumerated up to renaming of variables: a pair `(l, r)` is
//! canonical when the variables, taken in order of first occurrence in `l`
//! and then `r`, are `x1, x2, ...`.

use super::{ClassSet, Term};

pub const VAR_NAMES: [&str; 6] = ["x", "y", "z", "w", "v", "u"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Node {
    Var(u8),
    Meet(u32, u32),
    Join(u32, u32),
    Neg(u32),
}

/// Variable masks of a term: bit `i` is variable `i`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct PolarityMask {
    pub plain: u8,
    pub positive: u8,
    pub negative: u8,
}

impl PolarityMask {
    pub fn is_bipolar(self) -> bool {
        self.positive & self.negative != 0
    }

    pub fn classes_with(self, other: PolarityMask) -> ClassSet {
        ClassSet::from_primitives(
            self.plain == other.plain,
            self.positive == other.positive && self.negative == other.negative,
            self.is_bipolar() && other.is_bipolar(),
        )
    }
}

#[derive(Clone, Debug)]
pub struct TermSpace {
    vars: usize,
    max_nodes: usize,
    nodes: Vec<Node>,
    sizes: Vec<u8>,
    masks: Vec<PolarityMask>,
    /// First-occurrence order of variables: (count, slots).
    order: Vec<(u8, [u8; 6])>,
    layer_end: Vec<usize>,
}

impl TermSpace {
    pub fn new(vars: usize, max_nodes: usize) -> TermSpace {
        assert!((1..=VAR_NAMES.len()).contains(&vars), "1..=6 variables supported");
        assert!(max_nodes >= 1);
        let mut space = TermSpace {
            vars,
            max_nodes,
            nodes: Vec::new(),
            sizes: Vec::new(),
            masks: Vec::new(),
            order: Vec::new(),
            layer_end: vec![0],
        };
        // layer_end[s] = one past the last index of size s; layer s occupies
        // layer_end[s-1]..layer_end[s].
        for v in 0..vars {
            space.push(Node::Var(v as u8), 1);
        }
        space.layer_end.push(space.nodes.len());
        for size in 2..=max_nodes {
            for c in space.layer(size - 1) {
                space.push(Node::Neg(c as u32), size);
            }
            for join in [false, true] {
                for left_size in 1..size - 1 {
                    let right_size = size - 1 - left_size;
                    for a in space.layer(left_size) {
                        for b in space.layer(right_size) {
                            let node = if join {
                                Node::Join(a as u32, b as u32)
                            } else {
                                Node::Meet(a as u32, b as u32)
                            };
                            space.push(node, size);
                        }
                    }
                }
            }
            space.layer_end.push(space.nodes.len());
        }
        space
    }

    fn push(&mut self, node: Node, size: usize) {
        let (mask, order) = match node {
            Node::Var(v) => (
                PolarityMask {
                    plain: 1 << v,
                    positive: 1 << v,
                    negative: 0,
                },
                (1, {
                    let mut o = [0u8; 6];
                    o[0] = v;
                    o
                }),
            ),
            Node::Neg(c) => {
                let m = self.masks[c as usize];
                (
                    PolarityMask {
                        plain: m.plain,
                        positive: m.negative,
                        negative: m.positive,
                    },
                    self.order[c as usize],
                )
            }
            Node::Meet(a, b) | Node::Join(a, b) => {
                let (ma, mb) = (self.masks[a as usize], self.masks[b as usize]);
                let mask = PolarityMask {
                    plain: ma.plain | mb.plain,
                    positive: ma.positive | mb.positive,
                    negative: ma.negative | mb.negative,
                };
                let (mut len, mut o) = self.order[a as usize];
                let (lb, ob) = self.order[b as usize];
                for &v in &ob[..lb as usize] {
                    if !o[..len as usize].contains(&v) {
                        o[len as usize] = v;
                        len += 1;
                    }
                }
                (mask, (len, o))
            }
        };
        self.nodes.push(node);
        self.sizes.push(size as u8);
        self.masks.push(mask);
        self.order.push(order);
    }

    /// Index range of the terms with exactly `size` nodes.
    pub fn layer(&self, size: usize) -> std::ops::Range<usize> {
        self.layer_end[size - 1]..self.layer_end[size]
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn max_nodes(&self) -> usize {
        self.max_nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, i: usize) -> Node {
        self.nodes[i]
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn size_of(&self, i: usize) -> usize {
        self.sizes[i] as usize
    }

    pub fn mask(&self, i: usize) -> PolarityMask {
        self.masks[i]
    }

    pub fn term(&self, i: usize) -> Term {
        match self.nodes[i] {
            Node::Var(v) => Term::var(VAR_NAMES[v as usize]),
            Node::Neg(c) => Term::neg(self.term(c as usize)),
            Node::Meet(a, b) => Term::meet(self.term(a as usize), self.term(b as usize)),
            Node::Join(a, b) => Term::join(self.term(a as usize), self.term(b as usize)),
        }
    }

    pub fn identity(&self, lhs: usize, rhs: usize) -> crate::Identity {
        crate::Identity::new(self.term(lhs), self.term(rhs))
    }

    pub fn classes(&self, lhs: usize, rhs: usize) -> ClassSet {
        self.masks[lhs].classes_with(self.masks[rhs])
    }

    /// The variables of `lhs` in first-occurrence order read `x1, x2, ...`.
    pub fn is_canonical(&self, lhs: usize) -> bool {
        let (len, o) = self.order[lhs];
        o[..len as usize].iter().enumerate().all(|(i, &v)| v as usize == i)
    }

    /// `(lhs, rhs)` is the canonical representative of its renaming class.
    pub fn is_canonical_pair(&self, lhs: usize, rhs: usize) -> bool {
        if !self.is_canonical(lhs) {
            return false;
        }
        let (llen, _) = self.order[lhs];
        let (rlen, ro) = self.order[rhs];
        let mut next = llen;
        for &v in &ro[..rlen as usize] {
            if v >= llen {
                if v != next {
                    return false;
                }
                next += 1;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    /// Counts terms with exactly `n` nodes over `k` variables by recursion
    /// on the root symbol.
    fn count(n: usize, k: usize) -> usize {
        match n {
            0 => 0,
            1 => k,
            _ => count(n - 1, k) + 2 * (1..n - 1).map(|a| count(a, k) * count(n - 1 - a, k)).sum::<usize>(),
        }
    }

    #[test]
    fn enumerates_every_term_once() {
        let space = TermSpace::new(3, 6);
        for s in 1..=6 {
            assert_eq!(space.layer(s).len(), count(s, 3));
        }
        let terms: HashSet<Term> = (0..space.len()).map(|i| space.term(i)).collect();
        assert_eq!(terms.len(), space.len());
        for i in 0..space.len() {
            assert_eq!(space.term(i).size(), space.size_of(i));
        }
    }

    #[test]
    fn full_sweep_size() {
        let space = TermSpace::new(3, 7);
        assert_eq!(space.len(), 3 + 3 + 21 + 57 + 327 + 1263 + 6753);
    }

    #[test]
    fn masks_match_polarity_sets() {
        let space = TermSpace::new(3, 5);
        for i in 0..space.len() {
            let p = space.term(i).polarities();
            let m = space.mask(i);
            let to_mask = |s: &std::collections::BTreeSet<String>| {
                s.iter()
                    .map(|v| 1u8 << VAR_NAMES.iter().position(|n| n == v).unwrap())
                    .fold(0, |a, b| a | b)
            };
            assert_eq!(m.plain, to_mask(&p.plain));
            assert_eq!(m.positive, to_mask(&p.positive));
            assert_eq!(m.negative, to_mask(&p.negative));
        }
    }

    #[test]
    fn canonical_pairs_cover_every_renaming_class() {
        // Brute force: canonicalise every ordered pair by renaming and check
        // that the canonical representative is itself flagged canonical.
        let space = TermSpace::new(2, 4);
        let index: std::collections::HashMap<Term, usize> =
            (0..space.len()).map(|i| (space.term(i), i)).collect();
        for a in 0..space.len() {
            for b in 0..space.len() {
                let e = space.identity(a, b);
                let mut order = e.lhs.variables_in_order();
                for v in e.rhs.variables_in_order() {
                    if !order.contains(&v) {
                        order.push(v);
                    }
                }
                let rename = |t: &Term| rename(t, &order);
                let (ca, cb) = (index[&rename(&e.lhs)], index[&rename(&e.rhs)]);
                assert!(space.is_canonical_pair(ca, cb));
                assert_eq!(space.is_canonical_pair(a, b), (ca, cb) == (a, b));
            }
        }
    }

    fn rename(t: &Term, order: &[String]) -> Term {
        match t {
            Term::Var(v) => Term::var(VAR_NAMES[order.iter().position(|o| o == v).unwrap()]),
            Term::Neg(c) => Term::neg(rename(c, order)),
            Term::Meet(a, b) => Term::meet(rename(a, order), rename(b, order)),
            Term::Join(a, b) => Term::join(rename(a, order), rename(b, order)),
        }
    }
}
