//! Involutive semilattice direct systems, (De Morgan-)Płonka sums and
//! bilateralisation.
//!
//! A system over an involutive semilattice `I` assigns a ¬-free algebra
//! `F(i)` to each index element, a homomorphism `p_ij: F(i) → F(j)` to each
//! pair `i ≤ j`, and a dualiser `n_i: F(i) → F(¬i)` to each index element,
//! an isomorphism onto the dual of `F(¬i)`.

mod build;
mod json;
pub mod random;

pub use build::{bilateralise, plonka_sum, SemilatticeSystem};
pub use json::{SystemJson, SystemJsonError};

use crate::finalg::{AlgebraClass, FiniteAlgebra};
use std::collections::BTreeMap;
use thiserror::Error;

/// A failed validation condition, with a witness.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Violation {
    /// The index algebra is not an involutive semilattice.
    #[error("index is not an involutive semilattice: `{0}` fails")]
    IndexNotInvolutiveSemilattice(String),
    /// The number of fibres or dualisers differs from the index size.
    #[error("expected {expected} {what}, found {found}")]
    Arity {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    /// No map is given for a pair `i ≤ j`.
    #[error("missing transition {i} <= {j}")]
    MissingTransition { i: String, j: String },
    /// A map is given for a pair that is not ordered.
    #[error("transition given for {i}, {j} but {i} is not below {j}")]
    SpuriousTransition { i: String, j: String },
    /// A map has the wrong length or hits a non-element.
    #[error("map {map} has the wrong shape")]
    MapShape { map: String },
    /// `p_ii` moves some element.
    #[error("transition {i} <= {i} is not the identity")]
    NonIdentityLoop { i: String },
    /// `p_ij` fails to preserve an operation.
    #[error("transition {i} <= {j} is not a homomorphism at ({a}, {b})")]
    TransitionNotHomomorphism { i: String, j: String, a: usize, b: usize },
    /// `p_jk ∘ p_ij ≠ p_ik`.
    #[error("functoriality fails for {i} <= {j} <= {k} at element {a}")]
    NotFunctorial { i: String, j: String, k: String, a: usize },
    /// `n_i` is not an isomorphism onto the dual of `F(¬i)`.
    #[error("dualiser at {i} is not an isomorphism onto the dual of its target")]
    DualiserNotDualIsomorphism { i: String },
    /// `n_¬i ∘ n_i` moves some element.
    #[error("dualisers at {i} and its negation are not mutually inverse at element {a}")]
    DualisersNotInverse { i: String, a: usize },
    /// `n_j ∘ p_ij ≠ p_¬i¬j ∘ n_i`.
    #[error("equivariance fails for {i} <= {j} at element {a}")]
    NotEquivariant { i: String, j: String, a: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SumError {
    /// The system fails validation.
    #[error("invalid system: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<Violation>),
    /// The sum would be too large to tabulate.
    #[error("sum has {0} elements, more than supported")]
    TooLarge(usize),
}

/// Largest carrier a sum may have.
pub const SUM_SIZE_LIMIT: usize = 1 << 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvSemilatticeSystem {
    pub index: FiniteAlgebra,
    /// `fibres[i]` is `F(i)`; any negation on a fibre is ignored.
    pub fibres: Vec<FiniteAlgebra>,
    /// `p_ij` for `i ≤ j`, including the identities `p_ii`.
    pub transitions: BTreeMap<(usize, usize), Vec<usize>>,
    /// `dualisers[i]` is `n_i: F(i) → F(¬i)`.
    pub dualisers: Vec<Vec<usize>>,
}

impl InvSemilatticeSystem {
    /// Assembles a system, filling in missing identity maps `p_ii`.
    /// Nothing is validated here.
    pub fn new(
        index: FiniteAlgebra,
        fibres: Vec<FiniteAlgebra>,
        mut transitions: BTreeMap<(usize, usize), Vec<usize>>,
        dualisers: Vec<Vec<usize>>,
    ) -> InvSemilatticeSystem {
        for (i, f) in fibres.iter().enumerate() {
            transitions.entry((i, i)).or_insert_with(|| (0..f.size()).collect());
        }
        InvSemilatticeSystem {
            index,
            fibres,
            transitions,
            dualisers,
        }
    }

    /// `i ≤ j` in the index, i.e. `i ∨ j = j`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.index.join(i, j) == j
    }

    pub fn index_neg(&self, i: usize) -> usize {
        self.index.neg(i)
    }

    pub fn transition(&self, i: usize, j: usize) -> &[usize] {
        &self.transitions[&(i, j)]
    }

    /// Fibre sizes in index order.
    pub fn fibre_sizes(&self) -> Vec<usize> {
        self.fibres.iter().map(FiniteAlgebra::size).collect()
    }

    fn name(&self, i: usize) -> String {
        self.index.element_name(i).to_string()
    }

    /// Checks every condition on a system exhaustively. An empty list means
    /// the system is valid.
    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if let Some(e) = self.index.class_violation(AlgebraClass::InvolutiveSemilattice) {
            out.push(Violation::IndexNotInvolutiveSemilattice(e.to_string()));
            return out;
        }
        let m = self.index.size();
        for (what, found) in [("fibres", self.fibres.len()), ("dualisers", self.dualisers.len())] {
            if found != m {
                out.push(Violation::Arity { what, expected: m, found });
            }
        }
        if !out.is_empty() {
            return out;
        }
        let map_ok = |map: &[usize], from: usize, to: usize| {
            map.len() == self.fibres[from].size() && map.iter().all(|&y| y < self.fibres[to].size())
        };
        for &(i, j) in self.transitions.keys() {
            if i >= m || j >= m {
                out.push(Violation::MapShape {
                    map: format!("p({i},{j})"),
                });
            } else if !self.leq(i, j) {
                out.push(Violation::SpuriousTransition {
                    i: self.name(i),
                    j: self.name(j),
                });
            }
        }
        let mut shapes_ok = out.is_empty();
        for i in 0..m {
            for j in 0..m {
                if !self.leq(i, j) {
                    continue;
                }
                match self.transitions.get(&(i, j)) {
                    None => {
                        out.push(Violation::MissingTransition {
                            i: self.name(i),
                            j: self.name(j),
                        });
                        shapes_ok = false;
                    }
                    Some(p) if !map_ok(p, i, j) => {
                        out.push(Violation::MapShape {
                            map: format!("p({},{})", self.name(i), self.name(j)),
                        });
                        shapes_ok = false;
                    }
                    Some(_) => {}
                }
            }
            if !map_ok(&self.dualisers[i], i, self.index_neg(i)) {
                out.push(Violation::MapShape {
                    map: format!("n({})", self.name(i)),
                });
                shapes_ok = false;
            }
        }
        if !shapes_ok {
            return out;
        }

        for i in 0..m {
            let p = self.transition(i, i);
            if p.iter().enumerate().any(|(a, &b)| a != b) {
                out.push(Violation::NonIdentityLoop { i: self.name(i) });
            }
        }
        for i in 0..m {
            for j in 0..m {
                if !self.leq(i, j) {
                    continue;
                }
                let (fi, fj) = (&self.fibres[i], &self.fibres[j]);
                let p = self.transition(i, j);
                'hom: for a in 0..fi.size() {
                    for b in 0..fi.size() {
                        if p[fi.meet(a, b)] != fj.meet(p[a], p[b]) || p[fi.join(a, b)] != fj.join(p[a], p[b]) {
                            out.push(Violation::TransitionNotHomomorphism {
                                i: self.name(i),
                                j: self.name(j),
                                a,
                                b,
                            });
                            break 'hom;
                        }
                    }
                }
                for k in 0..m {
                    if !self.leq(j, k) {
                        continue;
                    }
                    let (pjk, pik) = (self.transition(j, k), self.transition(i, k));
                    if let Some(a) = (0..fi.size()).find(|&a| pjk[p[a]] != pik[a]) {
                        out.push(Violation::NotFunctorial {
                            i: self.name(i),
                            j: self.name(j),
                            k: self.name(k),
                            a,
                        });
                    }
                }
            }
        }
        for i in 0..m {
            let ni = self.index_neg(i);
            let n = &self.dualisers[i];
            let target = self.fibres[ni].reduct().dual();
            let src = self.fibres[i].reduct();
            let bijective = {
                let mut seen = vec![false; target.size()];
                n.len() == target.size() && n.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
            };
            if !bijective || !src.is_homomorphism(&target, n, false) {
                out.push(Violation::DualiserNotDualIsomorphism { i: self.name(i) });
            }
            let back = &self.dualisers[ni];
            if let Some(a) = (0..src.size()).find(|&a| back[n[a]] != a) {
                out.push(Violation::DualisersNotInverse { i: self.name(i), a });
            }
        }
        for i in 0..m {
            for j in 0..m {
                if i == j || !self.leq(i, j) {
                    continue;
                }
                let (ni, nj) = (self.index_neg(i), self.index_neg(j));
                let p = self.transition(i, j);
                let q = self.transition(ni, nj);
                let (di, dj) = (&self.dualisers[i], &self.dualisers[j]);
                if let Some(a) = (0..self.fibres[i].size()).find(|&a| dj[p[a]] != q[di[a]]) {
                    out.push(Violation::NotEquivariant {
                        i: self.name(i),
                        j: self.name(j),
                        a,
                    });
                }
            }
        }
        out
    }

    pub fn validate(&self) -> Result<(), Vec<Violation>> {
        let v = self.violations();
        if v.is_empty() {
            Ok(())
        } else {
            Err(v)
        }
    }

    /// The De Morgan-Płonka sum. Elements are ordered by fibre, then by
    /// position in the fibre, and named `(index,local)`.
    pub fn dpl_sum(&self) -> Result<FiniteAlgebra, SumError> {
        self.validate().map_err(SumError::Invalid)?;
        build::sum_of(self)
    }

    /// The global index of `a ∈ F(i)` in [`Self::dpl_sum`].
    pub fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.fibres
            .iter()
            .map(|f| {
                let o = acc;
                acc += f.size();
                o
            })
            .collect()
    }
}

#[cfg(test)]
mod tests;
