//! Finite algebras of type ⟨2,2,1⟩ (or ⟨2,2⟩ when negation is absent) given
//! by total operation tables over the carrier `0..n`.

mod classes;
mod congruence;
mod eval;
mod iso;
mod json;
mod sub;
mod table;

pub use classes::AlgebraClass;
pub use congruence::{Congruence, CONGRUENCE_SIZE_LIMIT};
pub use eval::{Assignment, Counterexample, EvalError, Program, Satisfaction};
pub use iso::{close_graph, Homomorphism, MapKind};
pub use json::AlgebraJson;
pub use sub::Subalgebra;
pub use table::{first_separating_pair, refines, TermTable};

use std::collections::HashSet;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AlgebraError {
    /// The carrier has no elements.
    #[error("an algebra needs at least one element")]
    Empty,
    /// Two elements share a label.
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
    /// A table has the wrong number of rows or columns.
    #[error("{op} table has shape mismatch: expected {expected}, found {found}")]
    TableShape {
        op: &'static str,
        expected: usize,
        found: usize,
    },
    /// A table entry is not an element.
    #[error("{op} table entry {value} at {at:?} is out of range for {size} elements")]
    OutOfRange {
        op: &'static str,
        at: (usize, usize),
        value: usize,
        size: usize,
    },
    /// The negation table is not a permutation.
    #[error("negation is not a bijection")]
    NegNotBijection,
    /// A reordering does not list each element exactly once.
    #[error("element order is not a permutation")]
    NotAPermutation,
    /// Exactly one operand of a binary construction has a negation.
    #[error("operands disagree on whether negation is present")]
    NegArityMismatch,
    /// The requested operation needs a negation.
    #[error("algebra `{0}` has no negation")]
    MissingNeg(String),
    /// A construction would exceed the supported carrier size.
    #[error("algebra of size {size} exceeds the limit {limit}")]
    TooLarge { size: usize, limit: usize },
    /// Malformed JSON input.
    #[error("invalid algebra JSON: {0}")]
    Json(String),
}

/// Products larger than this are refused.
pub const PRODUCT_SIZE_LIMIT: usize = 1 << 12;

/// A finite algebra with dense element indices and a separate name table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAlgebra {
    name: String,
    elements: Vec<String>,
    meet: Vec<usize>,
    join: Vec<usize>,
    neg: Option<Vec<usize>>,
}

impl FiniteAlgebra {
    /// Builds and validates an algebra from row-major tables.
    pub fn new(
        name: impl Into<String>,
        elements: Vec<String>,
        meet: Vec<Vec<usize>>,
        join: Vec<Vec<usize>>,
        neg: Option<Vec<usize>>,
    ) -> Result<FiniteAlgebra, AlgebraError> {
        let n = elements.len();
        let flatten = |op: &'static str, t: Vec<Vec<usize>>| -> Result<Vec<usize>, AlgebraError> {
            if t.len() != n {
                return Err(AlgebraError::TableShape {
                    op,
                    expected: n,
                    found: t.len(),
                });
            }
            let mut flat = Vec::with_capacity(n * n);
            for row in t {
                if row.len() != n {
                    return Err(AlgebraError::TableShape {
                        op,
                        expected: n,
                        found: row.len(),
                    });
                }
                flat.extend(row);
            }
            Ok(flat)
        };
        let meet = flatten("meet", meet)?;
        let join = flatten("join", join)?;
        Self::from_flat(name, elements, meet, join, neg)
    }

    /// Builds an algebra by tabulating operation closures.
    pub fn from_fns(
        name: impl Into<String>,
        elements: Vec<String>,
        meet: impl Fn(usize, usize) -> usize,
        join: impl Fn(usize, usize) -> usize,
        neg: Option<&dyn Fn(usize) -> usize>,
    ) -> Result<FiniteAlgebra, AlgebraError> {
        let n = elements.len();
        let mut mt = Vec::with_capacity(n * n);
        let mut jt = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                mt.push(meet(a, b));
                jt.push(join(a, b));
            }
        }
        let nt = neg.map(|f| (0..n).map(f).collect());
        Self::from_flat(name, elements, mt, jt, nt)
    }

    pub(crate) fn from_flat(
        name: impl Into<String>,
        elements: Vec<String>,
        meet: Vec<usize>,
        join: Vec<usize>,
        neg: Option<Vec<usize>>,
    ) -> Result<FiniteAlgebra, AlgebraError> {
        let n = elements.len();
        if n == 0 {
            return Err(AlgebraError::Empty);
        }
        let mut seen = HashSet::new();
        for e in &elements {
            if !seen.insert(e.as_str()) {
                return Err(AlgebraError::DuplicateName(e.clone()));
            }
        }
        for (op, t) in [("meet", &meet), ("join", &join)] {
            if t.len() != n * n {
                return Err(AlgebraError::TableShape {
                    op,
                    expected: n * n,
                    found: t.len(),
                });
            }
            if let Some(i) = t.iter().position(|&v| v >= n) {
                return Err(AlgebraError::OutOfRange {
                    op,
                    at: (i / n, i % n),
                    value: t[i],
                    size: n,
                });
            }
        }
        if let Some(nt) = &neg {
            if nt.len() != n {
                return Err(AlgebraError::TableShape {
                    op: "neg",
                    expected: n,
                    found: nt.len(),
                });
            }
            if let Some(i) = nt.iter().position(|&v| v >= n) {
                return Err(AlgebraError::OutOfRange {
                    op: "neg",
                    at: (i, 0),
                    value: nt[i],
                    size: n,
                });
            }
            let mut hit = vec![false; n];
            for &v in nt {
                if std::mem::replace(&mut hit[v], true) {
                    return Err(AlgebraError::NegNotBijection);
                }
            }
        }
        Ok(FiniteAlgebra {
            name: name.into(),
            elements,
            meet,
            join,
            neg,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> FiniteAlgebra {
        self.name = name.into();
        self
    }

    /// Replaces the element labels, keeping the tables.
    pub fn with_element_names(self, elements: Vec<String>) -> Result<FiniteAlgebra, AlgebraError> {
        if elements.len() != self.size() {
            return Err(AlgebraError::TableShape {
                op: "elements",
                expected: self.size(),
                found: elements.len(),
            });
        }
        Self::from_flat(self.name, elements, self.meet, self.join, self.neg)
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn element_name(&self, a: usize) -> &str {
        &self.elements[a]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == name)
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.size() + b]
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.size() + b]
    }

    /// Panics when the algebra has no negation.
    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg.as_ref().expect("algebra has no negation")[a]
    }

    pub fn has_neg(&self) -> bool {
        self.neg.is_some()
    }

    pub fn meet_table(&self) -> &[usize] {
        &self.meet
    }

    pub fn join_table(&self) -> &[usize] {
        &self.join
    }

    pub fn neg_table(&self) -> Option<&[usize]> {
        self.neg.as_deref()
    }

    pub fn meet_rows(&self) -> Vec<Vec<usize>> {
        self.meet.chunks(self.size()).map(<[usize]>::to_vec).collect()
    }

    pub fn join_rows(&self) -> Vec<Vec<usize>> {
        self.join.chunks(self.size()).map(<[usize]>::to_vec).collect()
    }

    /// The ⟨∧,∨⟩ reduct.
    pub fn reduct(&self) -> FiniteAlgebra {
        FiniteAlgebra {
            neg: None,
            ..self.clone()
        }
    }

    /// The same lattice operations with a new negation table.
    pub fn with_neg(&self, neg: Vec<usize>) -> Result<FiniteAlgebra, AlgebraError> {
        Self::from_flat(
            self.name.clone(),
            self.elements.clone(),
            self.meet.clone(),
            self.join.clone(),
            Some(neg),
        )
    }

    /// The join order `a ≤ b ⇔ a ∨ b = b`.
    pub fn join_leq(&self, a: usize, b: usize) -> bool {
        self.join(a, b) == b
    }

    /// Meet and join swapped.
    pub fn dual(&self) -> FiniteAlgebra {
        let name = match self.name.strip_suffix("^d") {
            Some(base) => base.to_string(),
            None => format!("{}^d", self.name),
        };
        FiniteAlgebra {
            name,
            elements: self.elements.clone(),
            meet: self.join.clone(),
            join: self.meet.clone(),
            neg: self.neg.clone(),
        }
    }

    /// Direct product; the element `(a, b)` has index `a * |B| + b`.
    pub fn product(&self, other: &FiniteAlgebra) -> Result<FiniteAlgebra, AlgebraError> {
        if self.has_neg() != other.has_neg() {
            return Err(AlgebraError::NegArityMismatch);
        }
        let (n, m) = (self.size(), other.size());
        if n * m > PRODUCT_SIZE_LIMIT {
            return Err(AlgebraError::TooLarge {
                size: n * m,
                limit: PRODUCT_SIZE_LIMIT,
            });
        }
        let pair = |x: usize| (x / m, x % m);
        let elements = (0..n * m)
            .map(|x| {
                let (a, b) = pair(x);
                format!("({},{})", self.elements[a], other.elements[b])
            })
            .collect();
        let neg_fn = |x: usize| {
            let (a, b) = pair(x);
            self.neg(a) * m + other.neg(b)
        };
        Self::from_fns(
            format!("{}x{}", self.name, other.name),
            elements,
            |x, y| {
                let ((a, b), (c, d)) = (pair(x), pair(y));
                self.meet(a, c) * m + other.meet(b, d)
            },
            |x, y| {
                let ((a, b), (c, d)) = (pair(x), pair(y));
                self.join(a, c) * m + other.join(b, d)
            },
            if self.has_neg() { Some(&neg_fn) } else { None },
        )
    }

    /// `k`-fold direct power (`k ≥ 1`).
    pub fn power(&self, k: usize) -> Result<FiniteAlgebra, AlgebraError> {
        assert!(k >= 1, "power needs k >= 1");
        let mut p = self.clone();
        for _ in 1..k {
            p = p.product(self)?;
        }
        Ok(p.with_name(format!("{}^{k}", self.name)))
    }

    /// The isomorphic copy whose element `p` is the old element `order[p]`.
    pub fn reorder(&self, order: &[usize]) -> Result<FiniteAlgebra, AlgebraError> {
        let n = self.size();
        let mut pos = vec![usize::MAX; n];
        for (p, &old) in order.iter().enumerate() {
            if old >= n || pos[old] != usize::MAX {
                return Err(AlgebraError::NotAPermutation);
            }
            pos[old] = p;
        }
        if order.len() != n {
            return Err(AlgebraError::TableShape {
                op: "order",
                expected: n,
                found: order.len(),
            });
        }
        let neg_fn = |p: usize| pos[self.neg(order[p])];
        Self::from_fns(
            self.name.clone(),
            order.iter().map(|&o| self.elements[o].clone()).collect(),
            |p, q| pos[self.meet(order[p], order[q])],
            |p, q| pos[self.join(order[p], order[q])],
            if self.has_neg() { Some(&neg_fn) } else { None },
        )
    }

    /// Product of a nonempty list of factors, folded left.
    pub fn product_all(factors: &[&FiniteAlgebra]) -> Result<FiniteAlgebra, AlgebraError> {
        let (first, rest) = factors.split_first().expect("at least one factor");
        let mut p = (*first).clone();
        for f in rest {
            p = p.product(f)?;
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn chain(n: usize) -> FiniteAlgebra {
        FiniteAlgebra::from_fns(
            format!("C{n}"),
            (0..n).map(|i| i.to_string()).collect(),
            usize::min,
            usize::max,
            None,
        )
        .unwrap()
    }

    #[test]
    fn validation_rejects_bad_tables() {
        let names = vec!["a".to_string(), "b".to_string()];
        let ok = vec![vec![0, 0], vec![0, 1]];
        assert_eq!(
            FiniteAlgebra::new("x", vec![], vec![], vec![], None),
            Err(AlgebraError::Empty)
        );
        assert!(matches!(
            FiniteAlgebra::new("x", names.clone(), vec![vec![0, 2], vec![0, 1]], ok.clone(), None),
            Err(AlgebraError::OutOfRange { op: "meet", at: (0, 1), .. })
        ));
        assert!(matches!(
            FiniteAlgebra::new("x", names.clone(), vec![vec![0]], ok.clone(), None),
            Err(AlgebraError::TableShape { .. })
        ));
        assert_eq!(
            FiniteAlgebra::new("x", names.clone(), ok.clone(), ok.clone(), Some(vec![0, 0])),
            Err(AlgebraError::NegNotBijection)
        );
        assert_eq!(
            FiniteAlgebra::new("x", vec!["a".into(), "a".into()], ok.clone(), ok.clone(), None),
            Err(AlgebraError::DuplicateName("a".into()))
        );
    }

    #[test]
    fn product_sizes_and_names() {
        let p = chain(2).product(&chain(3)).unwrap();
        assert_eq!(p.size(), 6);
        assert_eq!(p.element_name(5), "(1,2)");
        assert_eq!(p.meet(5, 3), 3);
        let with_neg = chain(2).with_neg(vec![1, 0]).unwrap();
        assert_eq!(with_neg.product(&chain(2)), Err(AlgebraError::NegArityMismatch));
    }

    #[test]
    fn dual_is_involutive() {
        let c = chain(3);
        assert_eq!(c.dual().dual(), c);
        assert_eq!(c.dual().meet(0, 2), 2);
    }
}
