//! Variable polarities and the five syntactic identity classes.

use super::{Identity, Term};
use std::collections::BTreeSet;
use std::fmt;

/// Variables of a term, split by the parity of the negations above each
/// occurrence. A variable may be both positive and negative.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PolaritySets {
    pub plain: BTreeSet<String>,
    pub positive: BTreeSet<String>,
    pub negative: BTreeSet<String>,
}

impl PolaritySets {
    pub fn of(t: &Term) -> PolaritySets {
        let mut p = PolaritySets::default();
        p.visit(t, false);
        p
    }

    fn visit(&mut self, t: &Term, odd: bool) {
        match t {
            Term::Var(v) => {
                self.plain.insert(v.clone());
                if odd {
                    self.negative.insert(v.clone());
                } else {
                    self.positive.insert(v.clone());
                }
            }
            Term::Neg(c) => self.visit(c, !odd),
            Term::Meet(l, r) | Term::Join(l, r) => {
                self.visit(l, odd);
                self.visit(r, odd);
            }
        }
    }

    /// Some variable occurs under both an even and an odd number of negations.
    pub fn is_bipolar(&self) -> bool {
        self.positive.intersection(&self.negative).next().is_some()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityClass {
    Regular,
    BalancedRegular,
    Bipolar,
    BipolarlyBalanced,
    RegularBipolarlyBalanced,
}

impl IdentityClass {
    pub const ALL: [IdentityClass; 5] = [
        IdentityClass::Regular,
        IdentityClass::BalancedRegular,
        IdentityClass::Bipolar,
        IdentityClass::BipolarlyBalanced,
        IdentityClass::RegularBipolarlyBalanced,
    ];

    pub fn label(self) -> &'static str {
        match self {
            IdentityClass::Regular => "regular",
            IdentityClass::BalancedRegular => "balanced-regular",
            IdentityClass::Bipolar => "bipolar",
            IdentityClass::BipolarlyBalanced => "bipolarly-balanced",
            IdentityClass::RegularBipolarlyBalanced => "regular-bipolarly-balanced",
        }
    }

    fn bit(self) -> u8 {
        1 << (self as u8)
    }
}

/// A subset of [`IdentityClass`].
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ClassSet(u8);

impl ClassSet {
    pub const EMPTY: ClassSet = ClassSet(0);

    /// Derives the full class set from the three primitive facts about an
    /// identity: equal variable sets, equal signed variable sets, and both
    /// sides bipolar.
    pub fn from_primitives(regular: bool, balanced: bool, bipolar: bool) -> ClassSet {
        let mut s = ClassSet::EMPTY;
        s.set(IdentityClass::Regular, regular);
        s.set(IdentityClass::BalancedRegular, balanced);
        s.set(IdentityClass::Bipolar, bipolar);
        s.set(IdentityClass::BipolarlyBalanced, bipolar || balanced);
        s.set(IdentityClass::RegularBipolarlyBalanced, (bipolar && regular) || balanced);
        s
    }

    fn set(&mut self, c: IdentityClass, on: bool) {
        if on {
            self.0 |= c.bit();
        }
    }

    pub fn contains(self, c: IdentityClass) -> bool {
        self.0 & c.bit() != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = IdentityClass> {
        IdentityClass::ALL.into_iter().filter(move |c| self.contains(*c))
    }
}

impl fmt::Debug for ClassSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ClassSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "none");
        }
        let labels: Vec<_> = self.iter().map(IdentityClass::label).collect();
        write!(f, "{}", labels.join(", "))
    }
}

impl FromIterator<IdentityClass> for ClassSet {
    fn from_iter<I: IntoIterator<Item = IdentityClass>>(iter: I) -> Self {
        let mut s = ClassSet::EMPTY;
        for c in iter {
            s.set(c, true);
        }
        s
    }
}

pub fn classify(e: &Identity) -> ClassSet {
    let l = PolaritySets::of(&e.lhs);
    let r = PolaritySets::of(&e.rhs);
    ClassSet::from_primitives(
        l.plain == r.plain,
        l.positive == r.positive && l.negative == r.negative,
        l.is_bipolar() && r.is_bipolar(),
    )
}
