//! Term evaluation and brute-force identity checking.

use super::FiniteAlgebra;
use crate::par::Strategy;
use crate::terms::{Identity, Term};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

pub type Assignment = BTreeMap<String, usize>;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EvalError {
    /// A variable of the term has no value.
    #[error("variable `{0}` is not assigned")]
    MissingAssignment(String),
    /// The term uses negation but the algebra has none.
    #[error("term uses negation but algebra `{0}` has no negation")]
    NoNegation(String),
    /// An assigned value is not an element.
    #[error("value {value} for `{var}` is out of range")]
    OutOfRange { var: String, value: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Op {
    Var(usize),
    Meet,
    Join,
    Neg,
}

/// A term compiled to postfix code over numbered variable slots.
#[derive(Clone, Debug)]
pub struct Program {
    ops: Vec<Op>,
    depth: usize,
}

impl Program {
    /// Compiles `t`; `vars` fixes the slot of each variable name.
    pub fn compile(t: &Term, vars: &[String]) -> Result<Program, EvalError> {
        let mut ops = Vec::with_capacity(t.size());
        emit(t, vars, &mut ops)?;
        let mut depth = 0usize;
        let mut max = 0;
        for op in &ops {
            match op {
                Op::Var(_) => depth += 1,
                Op::Meet | Op::Join => depth -= 1,
                Op::Neg => {}
            }
            max = max.max(depth);
        }
        Ok(Program { ops, depth: max })
    }

    fn uses_neg(&self) -> bool {
        self.ops.contains(&Op::Neg)
    }

    /// Evaluates with `stack` as scratch space.
    #[inline]
    fn run(&self, a: &FiniteAlgebra, slots: &[usize], stack: &mut Vec<usize>) -> usize {
        stack.clear();
        for op in &self.ops {
            match *op {
                Op::Var(s) => stack.push(slots[s]),
                Op::Neg => {
                    let x = stack.pop().unwrap();
                    stack.push(a.neg(x));
                }
                Op::Meet | Op::Join => {
                    let y = stack.pop().unwrap();
                    let x = stack.pop().unwrap();
                    stack.push(if *op == Op::Meet { a.meet(x, y) } else { a.join(x, y) });
                }
            }
        }
        stack[0]
    }

    pub fn eval(&self, a: &FiniteAlgebra, slots: &[usize]) -> usize {
        let mut stack = Vec::with_capacity(self.depth);
        self.run(a, slots, &mut stack)
    }
}

fn emit(t: &Term, vars: &[String], ops: &mut Vec<Op>) -> Result<(), EvalError> {
    match t {
        Term::Var(v) => {
            let slot = vars
                .iter()
                .position(|x| x == v)
                .ok_or_else(|| EvalError::MissingAssignment(v.clone()))?;
            ops.push(Op::Var(slot));
        }
        Term::Neg(c) => {
            emit(c, vars, ops)?;
            ops.push(Op::Neg);
        }
        Term::Meet(l, r) | Term::Join(l, r) => {
            emit(l, vars, ops)?;
            emit(r, vars, ops)?;
            ops.push(if matches!(t, Term::Meet(..)) { Op::Meet } else { Op::Join });
        }
    }
    Ok(())
}

/// The least failing assignment of an identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    /// Variables in sorted order with their values.
    pub assignment: Vec<(String, usize)>,
    pub lhs_value: usize,
    pub rhs_value: usize,
}

impl Counterexample {
    /// `x ↦ a, y ↦ b` using the algebra's element names.
    pub fn describe(&self, a: &FiniteAlgebra) -> String {
        self.assignment
            .iter()
            .map(|(v, e)| format!("{v} ↦ {}", a.element_name(*e)))
            .collect::<Vec<_>>()
            .join(", ")
    }

    pub fn value_of(&self, var: &str) -> Option<usize> {
        self.assignment.iter().find(|(v, _)| v == var).map(|(_, e)| *e)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Satisfaction {
    Holds,
    Fails(Counterexample),
}

impl Satisfaction {
    pub fn holds(&self) -> bool {
        matches!(self, Satisfaction::Holds)
    }

    pub fn counterexample(&self) -> Option<&Counterexample> {
        match self {
            Satisfaction::Holds => None,
            Satisfaction::Fails(c) => Some(c),
        }
    }
}

impl fmt::Display for Satisfaction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Satisfaction::Holds => write!(f, "true"),
            Satisfaction::Fails(c) => {
                let parts: Vec<_> = c.assignment.iter().map(|(v, e)| format!("{v}={e}")).collect();
                write!(f, "false ({})", parts.join(", "))
            }
        }
    }
}

/// Blocks of assignments handed to one worker.
const CHUNK: usize = 512;

impl FiniteAlgebra {
    /// Value of `t` under `asg`.
    pub fn eval(&self, t: &Term, asg: &Assignment) -> Result<usize, EvalError> {
        match t {
            Term::Var(v) => {
                let x = *asg.get(v).ok_or_else(|| EvalError::MissingAssignment(v.clone()))?;
                if x >= self.size() {
                    return Err(EvalError::OutOfRange { var: v.clone(), value: x });
                }
                Ok(x)
            }
            Term::Neg(c) => {
                let x = self.eval(c, asg)?;
                match self.neg_table() {
                    Some(n) => Ok(n[x]),
                    None => Err(EvalError::NoNegation(self.name().to_string())),
                }
            }
            Term::Meet(l, r) => Ok(self.meet(self.eval(l, asg)?, self.eval(r, asg)?)),
            Term::Join(l, r) => Ok(self.join(self.eval(l, asg)?, self.eval(r, asg)?)),
        }
    }

    /// Brute-force check over all assignments with the default strategy.
    pub fn satisfies(&self, e: &Identity) -> Result<Satisfaction, EvalError> {
        self.satisfies_with(e, Strategy::default())
    }

    /// Checks `e` over every assignment of its variables (sorted by name;
    /// the first variable is the most significant digit). A failure reports
    /// the least counterexample in that order regardless of `strategy`.
    pub fn satisfies_with(&self, e: &Identity, strategy: Strategy) -> Result<Satisfaction, EvalError> {
        let vars: Vec<String> = e.variables().into_iter().collect();
        let lhs = Program::compile(&e.lhs, &vars)?;
        let rhs = Program::compile(&e.rhs, &vars)?;
        if !self.has_neg() && (lhs.uses_neg() || rhs.uses_neg()) {
            return Err(EvalError::NoNegation(self.name().to_string()));
        }
        let n = self.size();
        let k = vars.len();
        let total = n
            .checked_pow(k as u32)
            .expect("assignment space overflows usize");
        let decode = |mut i: usize, slots: &mut [usize]| {
            for s in slots.iter_mut().rev() {
                *s = i % n;
                i /= n;
            }
        };
        let fails_in = |lo: usize, hi: usize| -> Option<usize> {
            let mut slots = vec![0; k];
            let mut stack = Vec::with_capacity(lhs.depth.max(rhs.depth));
            (lo..hi).find(|&i| {
                decode(i, &mut slots);
                lhs.run(self, &slots, &mut stack) != rhs.run(self, &slots, &mut stack)
            })
        };
        let chunks = total.div_ceil(CHUNK);
        let first_chunk = strategy.find_first(0..chunks, |c| {
            fails_in(c * CHUNK, ((c + 1) * CHUNK).min(total)).is_some()
        });
        let Some(c) = first_chunk else {
            return Ok(Satisfaction::Holds);
        };
        let i = fails_in(c * CHUNK, ((c + 1) * CHUNK).min(total)).expect("chunk has a failure");
        let mut slots = vec![0; k];
        decode(i, &mut slots);
        Ok(Satisfaction::Fails(Counterexample {
            lhs_value: lhs.eval(self, &slots),
            rhs_value: rhs.eval(self, &slots),
            assignment: vars.into_iter().zip(slots).collect(),
        }))
    }

    /// Shorthand for identities known to be evaluable in `self`.
    ///
    /// Panics when the identity uses negation and `self` has none.
    pub fn models(&self, e: &Identity) -> bool {
        self.satisfies(e)
            .unwrap_or_else(|err| panic!("cannot check `{e}`: {err}"))
            .holds()
    }

    /// Same as [`FiniteAlgebra::models`] with an explicit identity string.
    pub fn models_str(&self, e: &str) -> bool {
        self.models(&e.parse().unwrap_or_else(|err| panic!("bad identity `{e}`: {err}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::terms::parse_identity;

    /// 2-element chain with identity negation (the involutive semilattice on
    /// two elements when meet = join).
    fn semilattice2() -> FiniteAlgebra {
        FiniteAlgebra::from_fns(
            "IS2",
            vec!["i".into(), "j".into()],
            usize::max,
            usize::max,
            Some(&|x| x),
        )
        .unwrap()
    }

    #[test]
    fn least_counterexample_is_reported() {
        let a = semilattice2();
        let e = parse_identity("x = x /\\ (x \\/ y)").unwrap();
        for s in [Strategy::Sequential, Strategy::Parallel] {
            let Satisfaction::Fails(c) = a.satisfies_with(&e, s).unwrap() else {
                panic!("should fail");
            };
            assert_eq!(c.assignment, vec![("x".into(), 0), ("y".into(), 1)]);
            assert_eq!(c.describe(&a), "x ↦ i, y ↦ j");
        }
    }

    #[test]
    fn eval_errors() {
        let a = semilattice2().reduct();
        let t: Term = "~x".parse().unwrap();
        let asg: Assignment = [("x".to_string(), 0)].into();
        assert_eq!(a.eval(&t, &asg), Err(EvalError::NoNegation("IS2".into())));
        let t: Term = "x /\\ y".parse().unwrap();
        assert_eq!(a.eval(&t, &asg), Err(EvalError::MissingAssignment("y".into())));
        assert!(a.satisfies(&parse_identity("x = ~x").unwrap()).is_err());
    }

    #[test]
    fn large_spaces_agree_across_strategies() {
        let a = semilattice2();
        let e = parse_identity("x /\\ y /\\ z /\\ w /\\ v /\\ u = u").unwrap();
        let seq = a.satisfies_with(&e, Strategy::Sequential).unwrap();
        let par = a.satisfies_with(&e, Strategy::Parallel).unwrap();
        assert_eq!(seq, par);
        assert!(!seq.holds());
    }
}
