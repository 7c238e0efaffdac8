//! Terms and identities of type ⟨2,2,1⟩ (meet, join, negation).

mod parse;
mod polarity;
pub mod random;
pub mod space;

use std::collections::BTreeSet;
use std::fmt;

pub use parse::{parse, parse_identity, parse_term, ParseError, ParseErrorKind, Parsed};
pub use polarity::{classify, IdentityClass, ClassSet, PolaritySets};

/// A formula built from variables with `∧`, `∨` and `¬`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(String),
    Meet(Box<Term>, Box<Term>),
    Join(Box<Term>, Box<Term>),
    Neg(Box<Term>),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Term {
        Term::Var(name.into())
    }

    pub fn meet(left: Term, right: Term) -> Term {
        Term::Meet(Box::new(left), Box::new(right))
    }

    pub fn join(left: Term, right: Term) -> Term {
        Term::Join(Box::new(left), Box::new(right))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(child: Term) -> Term {
        Term::Neg(Box::new(child))
    }

    /// `t ∨ ¬t`
    pub fn up(t: Term) -> Term {
        Term::join(t.clone(), Term::neg(t))
    }

    /// `t ∧ ¬t`
    pub fn dn(t: Term) -> Term {
        Term::meet(t.clone(), Term::neg(t))
    }

    /// Number of nodes of the syntax tree.
    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) => 1,
            Term::Neg(c) => 1 + c.size(),
            Term::Meet(l, r) | Term::Join(l, r) => 1 + l.size() + r.size(),
        }
    }

    /// Height of the syntax tree; a variable has depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Term::Var(_) => 0,
            Term::Neg(c) => 1 + c.depth(),
            Term::Meet(l, r) | Term::Join(l, r) => 1 + l.depth().max(r.depth()),
        }
    }

    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::Neg(c) => c.collect_vars(out),
            Term::Meet(l, r) | Term::Join(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }

    /// Variables in order of first occurrence (left to right).
    pub fn variables_in_order(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.push_vars_in_order(&mut out);
        out
    }

    fn push_vars_in_order(&self, out: &mut Vec<String>) {
        match self {
            Term::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            Term::Neg(c) => c.push_vars_in_order(out),
            Term::Meet(l, r) | Term::Join(l, r) => {
                l.push_vars_in_order(out);
                r.push_vars_in_order(out);
            }
        }
    }

    pub fn contains_neg(&self) -> bool {
        match self {
            Term::Var(_) => false,
            Term::Neg(_) => true,
            Term::Meet(l, r) | Term::Join(l, r) => l.contains_neg() || r.contains_neg(),
        }
    }

    /// Swaps every meet with a join and vice versa; negations are untouched.
    pub fn dualise(&self) -> Term {
        match self {
            Term::Var(v) => Term::Var(v.clone()),
            Term::Neg(c) => Term::neg(c.dualise()),
            Term::Meet(l, r) => Term::join(l.dualise(), r.dualise()),
            Term::Join(l, r) => Term::meet(l.dualise(), r.dualise()),
        }
    }

    pub fn polarities(&self) -> PolaritySets {
        PolaritySets::of(self)
    }

    /// Renders with `up(..)`/`dn(..)` wherever a subterm has the shape
    /// `t \/ ~t` or `t /\ ~t`. The output parses back to the same term.
    pub fn to_sugared_string(&self) -> String {
        let mut s = String::new();
        write_term(&mut s, self, true).expect("writing to a String");
        s
    }
}

fn sugar_of(t: &Term) -> Option<(&'static str, &Term)> {
    match t {
        Term::Join(l, r) => match r.as_ref() {
            Term::Neg(c) if c.as_ref() == l.as_ref() => Some(("up", l)),
            _ => None,
        },
        Term::Meet(l, r) => match r.as_ref() {
            Term::Neg(c) if c.as_ref() == l.as_ref() => Some(("dn", l)),
            _ => None,
        },
        _ => None,
    }
}

fn write_term(out: &mut impl fmt::Write, t: &Term, sugar: bool) -> fmt::Result {
    if sugar {
        if let Some((name, inner)) = sugar_of(t) {
            write!(out, "{name}(")?;
            write_term(out, inner, sugar)?;
            return write!(out, ")");
        }
    }
    match t {
        Term::Var(v) => write!(out, "{v}"),
        Term::Neg(c) => {
            write!(out, "~")?;
            write_operand(out, c, sugar, |_| false)
        }
        Term::Meet(l, r) => {
            write_operand(out, l, sugar, |t| matches!(t, Term::Meet(..)))?;
            write!(out, " /\\ ")?;
            write_operand(out, r, sugar, |_| false)
        }
        Term::Join(l, r) => {
            write_operand(out, l, sugar, |t| matches!(t, Term::Join(..)))?;
            write!(out, " \\/ ")?;
            write_operand(out, r, sugar, |_| false)
        }
    }
}

/// Binary children are parenthesised unless `bare` allows them through
/// (left operands of the same operator, by left associativity).
fn write_operand(
    out: &mut impl fmt::Write,
    t: &Term,
    sugar: bool,
    bare: impl Fn(&Term) -> bool,
) -> fmt::Result {
    let binary = matches!(t, Term::Meet(..) | Term::Join(..));
    let sugared = sugar && sugar_of(t).is_some();
    if binary && !sugared && !bare(t) {
        write!(out, "(")?;
        write_term(out, t, sugar)?;
        write!(out, ")")
    } else {
        write_term(out, t, sugar)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_term(f, self, false)
    }
}

/// An equation `lhs ≈ rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Identity {
    pub lhs: Term,
    pub rhs: Term,
}

impl Identity {
    pub fn new(lhs: Term, rhs: Term) -> Identity {
        Identity { lhs, rhs }
    }

    pub fn swapped(&self) -> Identity {
        Identity::new(self.rhs.clone(), self.lhs.clone())
    }

    pub fn dualise(&self) -> Identity {
        Identity::new(self.lhs.dualise(), self.rhs.dualise())
    }

    /// Variables of both sides, sorted.
    pub fn variables(&self) -> BTreeSet<String> {
        let mut v = self.lhs.variables();
        v.extend(self.rhs.variables());
        v
    }

    pub fn contains_neg(&self) -> bool {
        self.lhs.contains_neg() || self.rhs.contains_neg()
    }

    pub fn classes(&self) -> ClassSet {
        classify(self)
    }

    pub fn to_sugared_string(&self) -> String {
        format!("{} = {}", self.lhs.to_sugared_string(), self.rhs.to_sugared_string())
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

impl std::str::FromStr for Term {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_term(s)
    }
}

impl std::str::FromStr for Identity {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_identity(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Term {
        parse_term(s).unwrap()
    }

    #[test]
    fn dualise_swaps_lattice_operations() {
        assert_eq!(t("x /\\ y").dualise(), t("x \\/ y"));
        assert_eq!(t("~(x \\/ y)").dualise(), t("~(x /\\ y)"));
        let big = t("(x /\\ ~y) \\/ ~(z \\/ (x /\\ y))");
        assert_eq!(big.dualise().dualise(), big);
    }

    #[test]
    fn printing_minimises_parentheses() {
        assert_eq!(t("(x /\\ y) /\\ z").to_string(), "x /\\ y /\\ z");
        assert_eq!(t("x /\\ (y /\\ z)").to_string(), "x /\\ (y /\\ z)");
        assert_eq!(t("~(x \\/ y) /\\ ~~z").to_string(), "~(x \\/ y) /\\ ~~z");
        assert_eq!(t("(x \\/ y) /\\ z").to_string(), "(x \\/ y) /\\ z");
    }

    #[test]
    fn sugared_printing_round_trips() {
        let s = "up(x) /\\ up(y) /\\ (dn(x) \\/ dn(y))";
        let term = t(s);
        assert_eq!(term.to_sugared_string(), s);
        assert_eq!(t(&term.to_sugared_string()), term);
        assert_eq!(t(&term.to_string()), term);
    }

    #[test]
    fn size_and_depth() {
        let term = t("x /\\ ~(y \\/ x)");
        assert_eq!(term.size(), 6);
        assert_eq!(term.depth(), 3);
        assert_eq!(term.variables_in_order(), vec!["x".to_string(), "y".to_string()]);
    }
}
