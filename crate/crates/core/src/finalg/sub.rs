//! Generated subalgebras.

use super::{AlgebraError, FiniteAlgebra};

/// A subalgebra together with its inclusion map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subalgebra {
    pub algebra: FiniteAlgebra,
    /// `embedding[i]` is the parent element of sub-element `i`; increasing.
    pub embedding: Vec<usize>,
}

impl FiniteAlgebra {
    /// Least subset containing `seed` and closed under all operations,
    /// in increasing order. Returns `None` as soon as it would exceed `cap`.
    pub fn closure(&self, seed: &[usize], cap: usize) -> Option<Vec<usize>> {
        let n = self.size();
        let mut member = vec![false; n];
        let mut elems: Vec<usize> = Vec::new();
        let add = |x: usize, member: &mut Vec<bool>, elems: &mut Vec<usize>| -> bool {
            if !member[x] {
                member[x] = true;
                elems.push(x);
            }
            elems.len() <= cap
        };
        for &s in seed {
            if !add(s, &mut member, &mut elems) {
                return None;
            }
        }
        let mut next = 0;
        while next < elems.len() {
            let x = elems[next];
            if let Some(neg) = self.neg_table() {
                if !add(neg[x], &mut member, &mut elems) {
                    return None;
                }
            }
            for j in 0..=next {
                let y = elems[j];
                for v in [self.meet(x, y), self.meet(y, x), self.join(x, y), self.join(y, x)] {
                    if !add(v, &mut member, &mut elems) {
                        return None;
                    }
                }
            }
            next += 1;
        }
        elems.sort_unstable();
        Some(elems)
    }

    /// The subalgebra generated by `seed`.
    pub fn subalgebra_generated(&self, seed: &[usize]) -> Subalgebra {
        let elems = self.closure(seed, usize::MAX).expect("uncapped closure");
        self.induced(&elems).expect("closed subset")
    }

    /// The subalgebra on a closed subset; `None` when `elems` is not closed.
    pub fn subalgebra_on(&self, elems: &[usize]) -> Option<Subalgebra> {
        let mut sorted = elems.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.is_empty() || self.closure(&sorted, sorted.len())? != sorted {
            return None;
        }
        self.induced(&sorted).ok()
    }

    fn induced(&self, elems: &[usize]) -> Result<Subalgebra, AlgebraError> {
        let mut local = vec![usize::MAX; self.size()];
        for (i, &e) in elems.iter().enumerate() {
            local[e] = i;
        }
        let neg_fn = |i: usize| local[self.neg(elems[i])];
        let algebra = FiniteAlgebra::from_fns(
            format!("Sg({})", self.name()),
            elems.iter().map(|&e| self.element_name(e).to_string()).collect(),
            |i, j| local[self.meet(elems[i], elems[j])],
            |i, j| local[self.join(elems[i], elems[j])],
            if self.has_neg() { Some(&neg_fn) } else { None },
        )?;
        Ok(Subalgebra {
            algebra,
            embedding: elems.to_vec(),
        })
    }

    /// A smallest set of elements generating the whole algebra.
    pub fn minimal_generating_set(&self) -> Vec<usize> {
        let n = self.size();
        for k in 1..=n {
            let mut combo: Vec<usize> = (0..k).collect();
            loop {
                if self.closure(&combo, n).is_some_and(|c| c.len() == n) {
                    return combo;
                }
                // next k-combination in lexicographic order
                let Some(i) = (0..k).rev().find(|&i| combo[i] < n - k + i) else {
                    break;
                };
                combo[i] += 1;
                for j in i + 1..k {
                    combo[j] = combo[j - 1] + 1;
                }
            }
        }
        unreachable!("the full carrier generates the algebra")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain_with_swap(n: usize) -> FiniteAlgebra {
        FiniteAlgebra::from_fns(
            "C",
            (0..n).map(|i| i.to_string()).collect(),
            usize::min,
            usize::max,
            Some(&|x| n - 1 - x),
        )
        .unwrap()
    }

    #[test]
    fn closure_adds_negations() {
        let c = chain_with_swap(5);
        let s = c.subalgebra_generated(&[1]);
        assert_eq!(s.embedding, vec![1, 3]);
        assert_eq!(s.algebra.size(), 2);
        assert_eq!(s.algebra.neg(0), 1);
        assert!(c.closure(&[0, 1, 2], 3).is_none());
        assert_eq!(c.closure(&[2], 1), Some(vec![2]));
    }

    #[test]
    fn full_seed_gives_whole_algebra() {
        let c = chain_with_swap(4);
        let s = c.subalgebra_generated(&[0, 1, 2, 3]);
        assert_eq!(s.algebra.meet_table(), c.meet_table());
        assert_eq!(s.embedding, vec![0, 1, 2, 3]);
    }

    #[test]
    fn subalgebra_on_checks_closure() {
        let c = chain_with_swap(4);
        assert!(c.subalgebra_on(&[0, 3]).is_some());
        assert!(c.subalgebra_on(&[0, 1]).is_none());
        assert_eq!(c.minimal_generating_set(), vec![0, 1]);
    }
}
