//! Constraints on generator sets drawn from the eleven catalog algebras.

use std::fmt;

/// One closure condition on a generator set `S ⊆ {1..11}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Constraint {
    /// `i ∈ S`.
    Contains(usize),
    /// Some element of `S` is at least the bound.
    SomeAtLeast(usize),
    /// `i ∈ S` implies every listed element is in `S`.
    Implies(usize, &'static [usize]),
    /// `{a, b} ⊆ S` iff `{c, b} ⊆ S`.
    PairedWith { a: usize, c: usize, with: usize },
    /// `i ∈ S` iff every listed element is in `S`.
    Iff(usize, &'static [usize]),
}

impl Constraint {
    pub fn holds(&self, s: &[usize]) -> bool {
        let has = |i: usize| s.contains(&i);
        match *self {
            Constraint::Contains(i) => has(i),
            Constraint::SomeAtLeast(k) => s.iter().any(|&x| x >= k),
            Constraint::Implies(i, rest) => !has(i) || rest.iter().all(|&j| has(j)),
            Constraint::PairedWith { a, c, with } => (has(a) && has(with)) == (has(c) && has(with)),
            Constraint::Iff(i, rest) => has(i) == rest.iter().all(|&j| has(j)),
        }
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |xs: &[usize]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        match self {
            Constraint::Contains(i) => write!(f, "{i} ∈ S"),
            Constraint::SomeAtLeast(k) => write!(f, "some element ≥ {k}"),
            Constraint::Implies(i, rest) => write!(f, "{i} ⇒ {{{}}}", list(rest)),
            Constraint::PairedWith { a, c, with } => write!(f, "({a} ∧ {with}) ⇔ ({c} ∧ {with})"),
            Constraint::Iff(i, rest) => write!(f, "{i} ⇔ {{{}}}", list(rest)),
        }
    }
}

/// The constraints `(a)` through `(o)`, labelled.
pub const CONSTRAINTS: [(char, Constraint); 15] = [
    ('a', Constraint::Contains(1)),
    ('b', Constraint::SomeAtLeast(9)),
    ('c', Constraint::Implies(11, &[9, 5])),
    ('d', Constraint::Implies(10, &[9])),
    ('e', Constraint::Implies(8, &[7, 6, 5, 4, 3, 2])),
    ('f', Constraint::Implies(7, &[6, 5, 3, 2])),
    ('g', Constraint::Implies(6, &[5, 2])),
    ('h', Constraint::Implies(4, &[3, 2])),
    ('i', Constraint::Implies(3, &[2])),
    ('j', Constraint::PairedWith { a: 10, c: 9, with: 2 }),
    ('k', Constraint::PairedWith { a: 10, c: 9, with: 3 }),
    ('l', Constraint::PairedWith { a: 10, c: 9, with: 4 }),
    ('m', Constraint::Iff(6, &[2, 5])),
    ('n', Constraint::Iff(7, &[3, 5])),
    ('o', Constraint::Iff(8, &[4, 5])),
];

/// Labels of the constraints `s` violates.
pub fn check_constraints(s: &[usize]) -> Vec<char> {
    CONSTRAINTS.iter().filter(|(_, c)| !c.holds(s)).map(|&(l, _)| l).collect()
}

/// Every subset of `{1..11}` meeting all constraints, ordered by size and
/// then lexicographically.
pub fn enumerate_generator_sets() -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0u32..1 << 11)
        .map(|mask| (1..=11).filter(|i| mask & (1 << (i - 1)) != 0).collect::<Vec<usize>>())
        .filter(|s| check_constraints(s).is_empty())
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}
