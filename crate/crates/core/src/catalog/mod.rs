//! Named small algebras.
//!
//! The catalog proper lists the eleven subdirectly irreducible De Morgan
//! bisemilattices, indexed 1..=11:
//!
//! | # | name | # | name | # | name |
//! |---|------|---|------|---|------|
//! | 1 | IS1 | 5 | IS2 | 9 | IS3 |
//! | 2 | B2 | 6 | B2† | 10 | A5 |
//! | 3 | K3 | 7 | K3† | 11 | IS4 |
//! | 4 | DM4 | 8 | DM4† | | |
//!
//! Auxiliary algebras (the lattices D1, D2 and the 9-element algebra U)
//! are available through [`lookup`] as well.

use crate::finalg::{AlgebraClass, FiniteAlgebra};
use crate::sums::{InvSemilatticeSystem, SumError};
use std::collections::BTreeMap;
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CatalogError {
    /// The dagger construction needs a De Morgan lattice.
    #[error("`{name}` is not a De Morgan lattice: `{identity}` fails")]
    NotDeMorganLattice { name: String, identity: String },
    /// The underlying sum construction failed.
    #[error(transparent)]
    Sum(#[from] SumError),
}

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

/// A lattice given by its order relation; meets and joins are computed as
/// greatest lower and least upper bounds.
fn lattice_from_order(
    name: &str,
    elements: &[&str],
    leq: impl Fn(usize, usize) -> bool,
    neg: Option<&[usize]>,
) -> FiniteAlgebra {
    let n = elements.len();
    let bound = |a: usize, b: usize, upper: bool| {
        let candidates: Vec<usize> = (0..n)
            .filter(|&c| if upper { leq(a, c) && leq(b, c) } else { leq(c, a) && leq(c, b) })
            .collect();
        *candidates
            .iter()
            .find(|&&c| {
                candidates
                    .iter()
                    .all(|&d| if upper { leq(c, d) } else { leq(d, c) })
            })
            .expect("order is a lattice")
    };
    let neg_fn = |a: usize| neg.unwrap()[a];
    FiniteAlgebra::from_fns(
        name,
        names(elements),
        |a, b| bound(a, b, false),
        |a, b| bound(a, b, true),
        if neg.is_some() { Some(&neg_fn) } else { None },
    )
    .expect("catalog tables are valid")
}

/// An involutive semilattice: `∧ = ∨` is the least upper bound.
fn semilattice_from_order(name: &str, elements: &[&str], leq: impl Fn(usize, usize) -> bool, neg: &[usize]) -> FiniteAlgebra {
    let n = elements.len();
    let lub = |a: usize, b: usize| {
        let upper: Vec<usize> = (0..n).filter(|&c| leq(a, c) && leq(b, c)).collect();
        *upper
            .iter()
            .find(|&&c| upper.iter().all(|&d| leq(c, d)))
            .expect("order is a join semilattice")
    };
    FiniteAlgebra::from_fns(name, names(elements), lub, lub, Some(&|a| neg[a])).expect("catalog tables are valid")
}

/// The one-element lattice.
pub fn d1() -> FiniteAlgebra {
    lattice_from_order("D1", &["0"], |_, _| true, None)
}

/// The two-element lattice `0 < 1`.
pub fn d2() -> FiniteAlgebra {
    lattice_from_order("D2", &["0", "1"], |a, b| a <= b, None)
}

/// The two-element Boolean algebra on `t, f`.
pub fn b2() -> FiniteAlgebra {
    // f < t
    lattice_from_order("B2", &["t", "f"], |a, b| a == b || a == 1, Some(&[1, 0]))
}

/// The three-element Kleene lattice `f < ⊤ < t` with `¬⊤ = ⊤`.
pub fn k3() -> FiniteAlgebra {
    let rank = [2, 1, 0];
    lattice_from_order("K3", &["t", "⊤", "f"], |a, b| rank[a] <= rank[b], Some(&[2, 1, 0]))
}

/// The four-element De Morgan lattice: `f < ⊤, ⊥ < t`, with `¬t = f` and
/// the middle elements fixed.
pub fn dm4() -> FiniteAlgebra {
    // t, ⊤, ⊥, f
    let leq = |a: usize, b: usize| a == b || a == 3 || b == 0;
    lattice_from_order("DM4", &["t", "⊤", "⊥", "f"], leq, Some(&[3, 1, 2, 0]))
}

pub fn is1() -> FiniteAlgebra {
    semilattice_from_order("IS1", &["i"], |_, _| true, &[0])
}

/// The two-element involutive semilattice `i < j` with identity negation.
pub fn is2() -> FiniteAlgebra {
    semilattice_from_order("IS2", &["i", "j"], |a, b| a <= b, &[0, 1])
}

/// `i, ¬i` below the fixpoint `j`.
pub fn is3() -> FiniteAlgebra {
    semilattice_from_order("IS3", &["i", "¬i", "j"], |a, b| a == b || b == 2, &[1, 0, 2])
}

/// Bottom `i`, top `k` and the swapped middles `j, ¬j`.
pub fn is4() -> FiniteAlgebra {
    semilattice_from_order(
        "IS4",
        &["i", "j", "¬j", "k"],
        |a, b| a == b || a == 0 || b == 3,
        &[0, 2, 1, 3],
    )
}

/// IS₁ to IS₄, in that order.
pub fn involutive_semilattices() -> Vec<FiniteAlgebra> {
    vec![is1(), is2(), is3(), is4()]
}

fn constant(size: usize) -> Vec<usize> {
    vec![0; size]
}

/// The system of `A†`: `A`'s lattice reduct at the bottom of IS₂ with
/// `A`'s negation as dualiser, and a trivial fibre on top.
pub fn dagger_system(a: &FiniteAlgebra) -> Result<InvSemilatticeSystem, CatalogError> {
    if let Some(e) = a.class_violation(AlgebraClass::DeMorganLattice) {
        return Err(CatalogError::NotDeMorganLattice {
            name: a.name().to_string(),
            identity: e.to_string(),
        });
    }
    let transitions = BTreeMap::from([((0, 1), constant(a.size()))]);
    Ok(InvSemilatticeSystem::new(
        is2(),
        vec![a.reduct(), d1()],
        transitions,
        vec![a.neg_table().unwrap().to_vec(), vec![0]],
    ))
}

/// `A†` for a De Morgan lattice `A`: `A` plus an absorbing fixpoint.
pub fn dagger(a: &FiniteAlgebra) -> Result<FiniteAlgebra, CatalogError> {
    let sum = dagger_system(a)?.dpl_sum()?;
    Ok(sum.with_name(format!("{}†", a.name())))
}

/// The system of A₅: D₂ on `i` and `¬i`, trivial on `j`.
pub fn a5_system() -> InvSemilatticeSystem {
    let swap = vec![1, 0];
    InvSemilatticeSystem::new(
        is3(),
        vec![d2(), d2(), d1()],
        BTreeMap::from([((0, 2), constant(2)), ((1, 2), constant(2))]),
        vec![swap.clone(), swap, vec![0]],
    )
}

/// A₅ on `a, b, ¬a, ¬b, u` where `b < a` is the fibre over `i`.
pub fn a5() -> FiniteAlgebra {
    let sum = a5_system().dpl_sum().expect("A5 system is valid");
    // sum order: (i,0) (i,1) (¬i,0) (¬i,1) (j,0); a = (i,1)
    sum.reorder(&[1, 0, 2, 3, 4])
        .and_then(|s| s.with_element_names(names(&["a", "b", "¬a", "¬b", "u"])))
        .expect("permutation of five elements")
        .with_name("A5")
}

/// The system of U over IS₄: D₂×D₂ at the bottom with the De Morgan
/// negation `(a,b) ↦ (1-b, 1-a)`, D₂ on the middles, trivial on top.
pub fn u_system() -> InvSemilatticeSystem {
    let d2 = d2();
    let square = d2.product(&d2).unwrap().with_name("D2xD2");
    // square elements: (0,0) (0,1) (1,0) (1,1); (a,b) has index 2a+b
    let n_bottom = vec![3, 1, 2, 0];
    let first = vec![0, 0, 1, 1];
    let second = vec![0, 1, 0, 1];
    let transitions = BTreeMap::from([
        ((0, 1), first),
        ((0, 2), second),
        ((0, 3), constant(4)),
        ((1, 3), constant(2)),
        ((2, 3), constant(2)),
    ]);
    InvSemilatticeSystem::new(
        is4(),
        vec![square, d2.clone(), d2, d1()],
        transitions,
        vec![n_bottom, vec![1, 0], vec![1, 0], vec![0]],
    )
}

pub fn u() -> FiniteAlgebra {
    u_system().dpl_sum().expect("U system is valid").with_name("U")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    /// Position 1..=11.
    pub index: usize,
    pub name: &'static str,
    pub algebra: FiniteAlgebra,
    /// Satisfies `x ≈ x ∧ (x ∨ y)`.
    pub lattice: bool,
    /// Satisfies `x ∧ y ≈ x ∨ y`.
    pub semilattice: bool,
}

pub const NAMES: [&str; 11] = ["IS1", "B2", "K3", "DM4", "IS2", "B2†", "K3†", "DM4†", "IS3", "A5", "IS4"];

fn build_entries() -> Vec<CatalogEntry> {
    let algebras = [
        is1(),
        b2(),
        k3(),
        dm4(),
        is2(),
        dagger(&b2()).unwrap(),
        dagger(&k3()).unwrap(),
        dagger(&dm4()).unwrap(),
        is3(),
        a5(),
        is4(),
    ];
    algebras
        .into_iter()
        .zip(NAMES)
        .enumerate()
        .map(|(i, (algebra, name))| CatalogEntry {
            index: i + 1,
            name,
            lattice: algebra.models_str("x = x /\\ (x \\/ y)"),
            semilattice: algebra.models_str("x /\\ y = x \\/ y"),
            algebra: algebra.with_name(name),
        })
        .collect()
}

/// The eleven subdirectly irreducible De Morgan bisemilattices, built once.
pub fn catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(build_entries)
}

/// Catalog algebra number `index` (1..=11).
pub fn entry(index: usize) -> &'static FiniteAlgebra {
    &catalog()[index - 1].algebra
}

fn normalise(name: &str) -> String {
    name.to_ascii_lowercase()
        .replace('†', "dag")
        .replace("dagger", "dag")
        .replace('₂', "2")
        .replace('₃', "3")
        .replace('₄', "4")
        .replace('₅', "5")
        .replace('₁', "1")
}

/// Auxiliary algebra names accepted by [`lookup`].
pub const AUXILIARY: [&str; 3] = ["D1", "D2", "U"];

/// Finds a catalog or auxiliary algebra by name. Case is ignored, `†` may
/// be written `dag`, and a bare catalog number is accepted.
pub fn lookup(name: &str) -> Option<FiniteAlgebra> {
    let key = normalise(name.trim());
    if let Ok(i) = key.parse::<usize>() {
        return (1..=11).contains(&i).then(|| entry(i).clone());
    }
    if let Some(e) = catalog().iter().find(|e| normalise(e.name) == key) {
        return Some(e.algebra.clone());
    }
    match key.as_str() {
        "d1" => Some(d1()),
        "d2" => Some(d2()),
        "u" => Some(u()),
        _ => None,
    }
}
