//! Term-function tables over a [`TermSpace`].
//!
//! For an algebra `A` with `n` elements and a space over `k` variables, the
//! term function of each term is its value vector over all `n^k`
//! assignments. Equal vectors get equal ids, so `A ⊨ s ≈ t` iff the ids of
//! `s` and `t` agree.

use super::FiniteAlgebra;
use crate::par::Strategy;
use crate::terms::space::{Node, TermSpace};
use std::collections::HashMap;

#[derive(Clone, Debug)]
pub struct TermTable {
    ids: Vec<u32>,
    funcs: Vec<Vec<u8>>,
}

impl TermTable {
    /// Tabulates every term of `space` in `a`.
    ///
    /// Panics when `a` has more than 256 elements, or lacks negation while
    /// the space has negated terms.
    pub fn build(a: &FiniteAlgebra, space: &TermSpace, strategy: Strategy) -> TermTable {
        let n = a.size();
        assert!(n <= 256, "term tables need at most 256 elements");
        let k = space.vars();
        let total = n.pow(k as u32);
        let mut table = TermTable {
            ids: Vec::with_capacity(space.len()),
            funcs: Vec::new(),
        };
        let mut index: HashMap<Vec<u8>, u32> = HashMap::new();
        for size in 1..=space.max_nodes() {
            let layer = space.layer(size);
            let funcs = &table.funcs;
            let ids = &table.ids;
            let vectors: Vec<Vec<u8>> = strategy.map(layer.clone(), |t| {
                let f = |c: u32| &funcs[ids[c as usize] as usize];
                match space.node(t) {
                    Node::Var(v) => {
                        let stride = n.pow((k - 1 - v as usize) as u32);
                        (0..total).map(|i| ((i / stride) % n) as u8).collect()
                    }
                    Node::Neg(c) => {
                        let neg = a.neg_table().expect("term space uses negation");
                        f(c).iter().map(|&x| neg[x as usize] as u8).collect()
                    }
                    Node::Meet(l, r) => {
                        f(l).iter().zip(f(r)).map(|(&x, &y)| a.meet(x as usize, y as usize) as u8).collect()
                    }
                    Node::Join(l, r) => {
                        f(l).iter().zip(f(r)).map(|(&x, &y)| a.join(x as usize, y as usize) as u8).collect()
                    }
                }
            });
            for v in vectors {
                let next = table.funcs.len() as u32;
                let id = *index.entry(v).or_insert_with_key(|v| {
                    table.funcs.push(v.clone());
                    next
                });
                table.ids.push(id);
            }
        }
        table
    }

    /// Term-function id of each term of the space.
    pub fn ids(&self) -> &[u32] {
        &self.ids
    }

    pub fn id(&self, term: usize) -> u32 {
        self.ids[term]
    }

    /// Number of distinct term functions.
    pub fn distinct(&self) -> usize {
        self.funcs.len()
    }

    pub fn holds(&self, lhs: usize, rhs: usize) -> bool {
        self.ids[lhs] == self.ids[rhs]
    }

    /// Value vector of a term function over all assignments.
    pub fn function(&self, id: u32) -> &[u8] {
        &self.funcs[id as usize]
    }

    /// Ids for the product of the tabulated algebras: two terms get the
    /// same id iff they agree in every table.
    pub fn combine(tables: &[&TermTable]) -> Vec<u32> {
        let len = tables.first().map_or(0, |t| t.ids.len());
        let mut index: HashMap<Vec<u32>, u32> = HashMap::new();
        (0..len)
            .map(|i| {
                let key: Vec<u32> = tables.iter().map(|t| t.ids[i]).collect();
                let next = index.len() as u32;
                *index.entry(key).or_insert(next)
            })
            .collect()
    }
}

/// The first pair `(s, t)` in term order with `fine[s] != fine[t]` and
/// `coarse[s] == coarse[t]`: an identity valid where `coarse` was computed
/// but failing where `fine` was. `s` is the earliest term with `t`'s coarse
/// id.
pub fn first_separating_pair(coarse: &[u32], fine: &[u32]) -> Option<(usize, usize)> {
    let mut first: HashMap<u32, usize> = HashMap::new();
    for t in 0..coarse.len() {
        let s = *first.entry(coarse[t]).or_insert(t);
        if fine[s] != fine[t] {
            return Some((s, t));
        }
    }
    None
}

/// Whether the kernel of `fine` is contained in the kernel of `coarse`.
pub fn refines(fine: &[u32], coarse: &[u32]) -> bool {
    first_separating_pair(fine, coarse).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::terms::space::TermSpace;

    fn c2() -> FiniteAlgebra {
        FiniteAlgebra::from_fns(
            "B2",
            vec!["f".into(), "t".into()],
            usize::min,
            usize::max,
            Some(&|x| 1 - x),
        )
        .unwrap()
    }

    #[test]
    fn boolean_term_functions() {
        let space = TermSpace::new(2, 5);
        let t = TermTable::build(&c2(), &space, Strategy::Sequential);
        // Boolean functions of two variables realised by terms of size <= 5.
        assert!(t.distinct() <= 16);
        // Every term function agrees with direct evaluation.
        for i in 0..space.len() {
            let term = space.term(i);
            for x in 0..2 {
                for y in 0..2 {
                    let asg = [("x".to_string(), x), ("y".to_string(), y)].into();
                    assert_eq!(c2().eval(&term, &asg).unwrap(), t.function(t.id(i))[x * 2 + y] as usize);
                }
            }
        }
    }

    #[test]
    fn strategies_agree() {
        let space = TermSpace::new(3, 5);
        let a = TermTable::build(&c2(), &space, Strategy::Sequential);
        let b = TermTable::build(&c2(), &space, Strategy::Parallel);
        assert_eq!(a.ids(), b.ids());
    }

    #[test]
    fn separating_pairs() {
        let coarse = [0, 0, 1, 1];
        let fine = [0, 1, 2, 2];
        assert_eq!(first_separating_pair(&coarse, &fine), Some((0, 1)));
        assert!(refines(&fine, &coarse));
        assert!(!refines(&coarse, &fine));
    }
}
