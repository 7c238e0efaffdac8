//! Membership of a finite algebra in the named classes, decided by
//! checking their defining identities.

use super::FiniteAlgebra;
use crate::terms::Identity;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraClass {
    DistributiveLattice,
    DistributiveBisemilattice,
    DeMorganBisemilattice,
    DeMorganLattice,
    InvolutiveSemilattice,
    KleeneLattice,
    BooleanAlgebra,
}

const BISEMILATTICE: &[&str] = &[
    "x /\\ x = x",
    "x /\\ y = y /\\ x",
    "x /\\ (y /\\ z) = (x /\\ y) /\\ z",
    "x \\/ x = x",
    "x \\/ y = y \\/ x",
    "x \\/ (y \\/ z) = (x \\/ y) \\/ z",
    "x /\\ (y \\/ z) = (x /\\ y) \\/ (x /\\ z)",
    "x \\/ (y /\\ z) = (x \\/ y) /\\ (x \\/ z)",
];

const ABSORPTION: &[&str] = &["x = x /\\ (x \\/ y)", "x = x \\/ (x /\\ y)"];

const DE_MORGAN: &[&str] = &["~~x = x", "~(x /\\ y) = ~x \\/ ~y", "~(x \\/ y) = ~x /\\ ~y"];

impl AlgebraClass {
    pub const ALL: [AlgebraClass; 7] = [
        AlgebraClass::DistributiveLattice,
        AlgebraClass::DistributiveBisemilattice,
        AlgebraClass::DeMorganBisemilattice,
        AlgebraClass::DeMorganLattice,
        AlgebraClass::InvolutiveSemilattice,
        AlgebraClass::KleeneLattice,
        AlgebraClass::BooleanAlgebra,
    ];

    pub fn label(self) -> &'static str {
        match self {
            AlgebraClass::DistributiveLattice => "distributive-lattice",
            AlgebraClass::DistributiveBisemilattice => "distributive-bisemilattice",
            AlgebraClass::DeMorganBisemilattice => "de-morgan-bisemilattice",
            AlgebraClass::DeMorganLattice => "de-morgan-lattice",
            AlgebraClass::InvolutiveSemilattice => "involutive-semilattice",
            AlgebraClass::KleeneLattice => "kleene-lattice",
            AlgebraClass::BooleanAlgebra => "boolean-algebra",
        }
    }

    pub fn needs_neg(self) -> bool {
        !matches!(
            self,
            AlgebraClass::DistributiveLattice | AlgebraClass::DistributiveBisemilattice
        )
    }

    /// The defining identities, as strings in the term grammar.
    pub fn axioms(self) -> Vec<&'static str> {
        let mut out: Vec<&'static str> = BISEMILATTICE.to_vec();
        match self {
            AlgebraClass::DistributiveBisemilattice => {}
            AlgebraClass::DistributiveLattice => out.extend(ABSORPTION),
            AlgebraClass::DeMorganBisemilattice => out.extend(DE_MORGAN),
            AlgebraClass::DeMorganLattice => {
                out.extend(DE_MORGAN);
                out.extend(ABSORPTION);
            }
            AlgebraClass::InvolutiveSemilattice => {
                out.extend(DE_MORGAN);
                out.push("x /\\ y = x \\/ y");
            }
            AlgebraClass::KleeneLattice => {
                out.extend(DE_MORGAN);
                out.extend(ABSORPTION);
                out.push("x /\\ ~x /\\ (y \\/ ~y) = x /\\ ~x");
            }
            AlgebraClass::BooleanAlgebra => {
                out.extend(DE_MORGAN);
                out.extend(ABSORPTION);
                out.push("x /\\ (y \\/ ~y) = x");
            }
        }
        out
    }

    pub fn identities(self) -> Vec<Identity> {
        self.axioms()
            .into_iter()
            .map(|s| s.parse().expect("built-in axiom parses"))
            .collect()
    }
}

impl fmt::Display for AlgebraClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for AlgebraClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        AlgebraClass::ALL
            .into_iter()
            .find(|c| c.label() == s)
            .ok_or_else(|| format!("unknown algebra class `{s}`"))
    }
}

impl FiniteAlgebra {
    /// Whether the algebra satisfies every defining identity of `class`.
    /// Classes with negation are never satisfied by a ¬-free algebra.
    pub fn is_class(&self, class: AlgebraClass) -> bool {
        if class.needs_neg() && !self.has_neg() {
            return false;
        }
        class.identities().iter().all(|e| self.models(e))
    }

    /// The first defining identity of `class` that fails, if any.
    pub fn class_violation(&self, class: AlgebraClass) -> Option<Identity> {
        if class.needs_neg() && !self.has_neg() {
            return class.identities().into_iter().find(|e| e.contains_neg());
        }
        class.identities().into_iter().find(|e| !self.models(e))
    }
}
