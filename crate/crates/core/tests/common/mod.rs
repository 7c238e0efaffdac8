//! Reference implementations used as oracles by the integration tests.
//! They share nothing with the library beyond the data types.
#![allow(dead_code)]

use dmbl::{FiniteAlgebra, Identity, Term};
use std::collections::BTreeSet;

/// Value of `t` with variables looked up in `env` by position in `vars`.
pub fn eval(a: &FiniteAlgebra, t: &Term, vars: &[String], env: &[usize]) -> usize {
    match t {
        Term::Var(v) => env[vars.iter().position(|w| w == v).expect("bound variable")],
        Term::Meet(l, r) => a.meet(eval(a, l, vars, env), eval(a, r, vars, env)),
        Term::Join(l, r) => a.join(eval(a, l, vars, env), eval(a, r, vars, env)),
        Term::Neg(c) => a.neg(eval(a, c, vars, env)),
    }
}

fn collect_vars(t: &Term, out: &mut BTreeSet<String>) {
    match t {
        Term::Var(v) => {
            out.insert(v.clone());
        }
        Term::Meet(l, r) | Term::Join(l, r) => {
            collect_vars(l, out);
            collect_vars(r, out);
        }
        Term::Neg(c) => collect_vars(c, out),
    }
}

/// Brute force over every assignment.
pub fn holds(a: &FiniteAlgebra, e: &Identity) -> bool {
    let mut set = BTreeSet::new();
    collect_vars(&e.lhs, &mut set);
    collect_vars(&e.rhs, &mut set);
    let vars: Vec<String> = set.into_iter().collect();
    let n = a.size();
    let k = vars.len();
    let mut env = vec![0; k];
    for code in 0..n.pow(k as u32) {
        let mut c = code;
        for slot in env.iter_mut() {
            *slot = c % n;
            c /= n;
        }
        if eval(a, &e.lhs, &vars, &env) != eval(a, &e.rhs, &vars, &env) {
            return false;
        }
    }
    true
}

pub fn holds_in_all(algebras: &[&FiniteAlgebra], e: &Identity) -> bool {
    algebras.iter().all(|a| holds(a, e))
}

/// Variables occurring under an even and under an odd number of negations.
pub fn polarity(t: &Term) -> (BTreeSet<String>, BTreeSet<String>) {
    fn go(t: &Term, negated: bool, pos: &mut BTreeSet<String>, neg: &mut BTreeSet<String>) {
        match t {
            Term::Var(v) => {
                if negated {
                    neg.insert(v.clone());
                } else {
                    pos.insert(v.clone());
                }
            }
            Term::Meet(l, r) | Term::Join(l, r) => {
                go(l, negated, pos, neg);
                go(r, negated, pos, neg);
            }
            Term::Neg(c) => go(c, !negated, pos, neg),
        }
    }
    let (mut pos, mut neg) = (BTreeSet::new(), BTreeSet::new());
    go(t, false, &mut pos, &mut neg);
    (pos, neg)
}

/// `[regular, balanced regular, bipolarly balanced, regular bipolarly balanced]`.
pub fn syntactic_classes(e: &Identity) -> [bool; 4] {
    let (lp, ln) = polarity(&e.lhs);
    let (rp, rn) = polarity(&e.rhs);
    let lv: BTreeSet<_> = lp.union(&ln).cloned().collect();
    let rv: BTreeSet<_> = rp.union(&rn).cloned().collect();
    let regular = lv == rv;
    let balanced = lp == rp && ln == rn;
    let bipolar = lp.intersection(&ln).next().is_some() && rp.intersection(&rn).next().is_some();
    [regular, balanced, bipolar || balanced, (bipolar && regular) || balanced]
}

/// All permutations of `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

pub fn is_isomorphism(a: &FiniteAlgebra, b: &FiniteAlgebra, f: &[usize]) -> bool {
    let n = a.size();
    (0..n).all(|x| {
        f[a.neg(x)] == b.neg(f[x])
            && (0..n).all(|y| f[a.meet(x, y)] == b.meet(f[x], f[y]) && f[a.join(x, y)] == b.join(f[x], f[y]))
    })
}

pub fn brute_isomorphic(a: &FiniteAlgebra, b: &FiniteAlgebra) -> bool {
    a.size() == b.size() && permutations(a.size()).iter().any(|f| is_isomorphism(a, b, f))
}

/// All set partitions of `0..n` as block labels.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(i: usize, n: usize, labels: &mut Vec<usize>, blocks: usize, out: &mut Vec<Vec<usize>>) {
        if i == n {
            out.push(labels.clone());
            return;
        }
        for b in 0..=blocks {
            labels.push(b);
            go(i + 1, n, labels, blocks.max(b + 1), out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::new(), 0, &mut out);
    out
}

pub fn is_congruence(a: &FiniteAlgebra, labels: &[usize]) -> bool {
    let n = a.size();
    for x in 0..n {
        for y in 0..n {
            if labels[x] != labels[y] {
                continue;
            }
            if labels[a.neg(x)] != labels[a.neg(y)] {
                return false;
            }
            for z in 0..n {
                if labels[a.meet(x, z)] != labels[a.meet(y, z)] || labels[a.join(x, z)] != labels[a.join(y, z)] {
                    return false;
                }
            }
        }
    }
    true
}

/// The intersection of the nontrivial congruences is nontrivial.
pub fn brute_si(a: &FiniteAlgebra) -> bool {
    let n = a.size();
    if n <= 1 {
        return true;
    }
    let nontrivial: Vec<Vec<usize>> = partitions(n)
        .into_iter()
        .filter(|l| (0..n).any(|x| (0..n).any(|y| x != y && l[x] == l[y])))
        .filter(|l| is_congruence(a, l))
        .collect();
    (0..n).any(|x| (0..n).any(|y| x != y && nontrivial.iter().all(|l| l[x] == l[y])))
}

/// The defining identities of De Morgan bisemilattices, checked directly.
pub fn is_dmbl(a: &FiniteAlgebra) -> bool {
    let n = a.size();
    let r = 0..n;
    r.clone().all(|x| {
        a.meet(x, x) == x
            && a.join(x, x) == x
            && a.neg(a.neg(x)) == x
            && r.clone().all(|y| {
                a.meet(x, y) == a.meet(y, x)
                    && a.join(x, y) == a.join(y, x)
                    && a.neg(a.meet(x, y)) == a.join(a.neg(x), a.neg(y))
                    && r.clone().all(|z| {
                        a.meet(a.meet(x, y), z) == a.meet(x, a.meet(y, z))
                            && a.join(a.join(x, y), z) == a.join(x, a.join(y, z))
                            && a.meet(x, a.join(y, z)) == a.join(a.meet(x, y), a.meet(x, z))
                            && a.join(x, a.meet(y, z)) == a.meet(a.join(x, y), a.join(x, z))
                    })
            })
    })
}

pub fn parse(s: &str) -> Identity {
    dmbl::terms::parse_identity(s).unwrap_or_else(|e| panic!("{s}: {e}"))
}
