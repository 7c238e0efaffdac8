//! Machine checks of the generator equalities, the axiomatisations and the
//! relativised Jónsson property of `U`.

use super::{
    descriptor, descriptors, hsp_membership, variety_models, HspVerdict, NamedIdentity, B_ABS, DN_UP_SAME, RB_ABS,
    R_ABS, SEMILATTICE,
};
use crate::catalog;
use crate::finalg::FiniteAlgebra;
use crate::par::Strategy;
use std::collections::HashSet;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.passed { "ok  " } else { "FAIL" };
        write!(f, "{mark} {}: {}", self.name, self.detail)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn is_clean(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let failed = self.failures().count();
        write!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

/// Every algebra on one side lies in HSP of the other side, both ways.
fn mutual(report: &mut Report, name: &str, left: &[&FiniteAlgebra], right: &[&FiniteAlgebra]) {
    one_way(report, name, left, right);
    one_way(report, name, right, left);
}

fn one_way(report: &mut Report, name: &str, members: &[&FiniteAlgebra], class: &[&FiniteAlgebra]) {
    let class_names: Vec<&str> = class.iter().map(|a| a.name()).collect();
    for a in members {
        let verdict = hsp_membership(a, class);
        let (passed, detail) = match verdict {
            Ok(HspVerdict::In(cert)) => (cert.verify(a, class), cert.to_string()),
            Ok(v) => (false, v.to_string()),
            Err(e) => (false, e.to_string()),
        };
        report.push(
            format!("{name}: {} in HSP{{{}}}", a.name(), class_names.join(", ")),
            passed,
            detail,
        );
    }
}

fn gens_of(name: &str) -> Vec<&'static FiniteAlgebra> {
    descriptor(name).expect("known node").generator_algebras()
}

/// Exactly the nodes picked by `expect` satisfy `axiom`.
fn alignment(report: &mut Report, axiom: NamedIdentity, expect: impl Fn(&[usize]) -> bool, claim: &str) {
    let e = axiom.identity();
    let wrong: Vec<&str> = descriptors()
        .iter()
        .filter(|v| variety_models(v, &e) != expect(&v.generators))
        .map(|v| v.name)
        .collect();
    let detail = if wrong.is_empty() {
        claim.to_string()
    } else {
        format!("{claim}; wrong on {}", wrong.join(", "))
    };
    report.push(format!("{} alignment", axiom.name), wrong.is_empty(), detail);
}

fn below(name: &'static str) -> impl Fn(&[usize]) -> bool {
    let top = &descriptor(name).expect("known node").generators;
    move |g: &[usize]| g.iter().all(|x| top.contains(x))
}

/// Runs every generator-equality, alignment and Jónsson check.
pub fn verify_theorems() -> Report {
    let mut r = Report::default();
    let dm4 = catalog::dm4();
    let (is2, is3, is4) = (catalog::is2(), catalog::is3(), catalog::is4());
    let (b2, a5, u) = (catalog::b2(), catalog::a5(), catalog::u());
    let dm4_dagger = catalog::entry(8);

    mutual(&mut r, "V(U) = V(DM4, IS4)", &[&u], &[&dm4, &is4]);
    mutual(&mut r, "V(DM4†) = V(DM4, IS2)", &[dm4_dagger], &[&dm4, &is2]);
    one_way(&mut r, "A5 in V(B2, IS3)", &[&a5], &[&b2, &is3]);
    one_way(&mut r, "IS3 in V(A5)", &[&is3], &[&a5]);

    let equalities: [(&str, Vec<&FiniteAlgebra>); 8] = [
        ("R(DML)", vec![dm4_dagger]),
        ("Bip(DML)", vec![&dm4, &is3]),
        ("R(Bip(DML))", vec![&dm4, &is2, &is3]),
        ("B(DML)", vec![&dm4, &is4]),
        ("B(DML)", vec![&u]),
        ("Bip^-(DML)", vec![&a5]),
        ("R(Bip^-(DML))", vec![&a5, &is2]),
        ("B^-(DML)", vec![&a5, &is4]),
    ];
    for (node, alt) in &equalities {
        let names: Vec<&str> = alt.iter().map(|a| a.name()).collect();
        mutual(&mut r, &format!("{node} = V({})", names.join(", ")), &gens_of(node), alt);
    }

    let prod = dm4.product(&is4).expect("16 elements").with_name("DM4xIS4");
    mutual(&mut r, "V(U) = V(DM4 x IS4)", &[&u], &[&prod]);

    alignment(&mut r, R_ABS, below("R(DML)"), "holds exactly on the nodes ≤ R(DML)");
    alignment(&mut r, B_ABS, below("Bip(DML)"), "holds exactly on the nodes ≤ Bip(DML)");
    alignment(&mut r, RB_ABS, below("R(Bip(DML))"), "holds exactly on the nodes ≤ R(Bip(DML))");
    alignment(&mut r, SEMILATTICE, below("B(T)"), "holds exactly on the involutive-semilattice nodes");
    alignment(&mut r, DN_UP_SAME, |g| !g.contains(&2), "holds exactly on the nodes not above BA");
    for v in descriptors() {
        let failing: Vec<&str> = v
            .axioms
            .iter()
            .filter(|a| !variety_models(v, &a.identity()))
            .map(|a| a.name)
            .collect();
        if !v.axioms.is_empty() {
            r.push(
                format!("{} satisfies its axioms", v.name),
                failing.is_empty(),
                if failing.is_empty() {
                    format!("{} axioms", v.axioms.len())
                } else {
                    format!("fails {}", failing.join(", "))
                },
            );
        }
    }

    let j = jonsson_check(&JonssonOptions::default());
    r.push(
        "SI algebras in HS(U^2), HS(U^3) embed in U",
        j.is_clean(),
        j.to_string(),
    );
    r
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct JonssonOptions {
    /// Largest subalgebra of `U²` examined.
    pub square_cap: usize,
    /// Largest subalgebra of `U³` examined.
    pub cube_cap: usize,
    pub strategy: Strategy,
}

impl Default for JonssonOptions {
    fn default() -> Self {
        JonssonOptions {
            square_cap: 32,
            cube_cap: 16,
            strategy: Strategy::default(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct JonssonReport {
    /// Distinct subalgebras examined, up to isomorphism.
    pub subalgebras: usize,
    /// Congruences examined across those subalgebras.
    pub congruences: usize,
    /// Sizes of the subdirectly irreducible quotients, one per isomorphism
    /// class.
    pub si_sizes: Vec<usize>,
    /// Subdirectly irreducible quotients that do not embed in `U`.
    pub failures: Vec<String>,
}

impl JonssonReport {
    pub fn is_clean(&self) -> bool {
        self.failures.is_empty() && !self.si_sizes.is_empty()
    }
}

impl fmt::Display for JonssonReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} subalgebras, {} congruences, {} SI quotients (sizes {:?}), {} not embedding",
            self.subalgebras,
            self.congruences,
            self.si_sizes.len(),
            self.si_sizes,
            self.failures.len()
        )
    }
}

/// A cheap isomorphism invariant for bucketing.
fn signature(a: &FiniteAlgebra) -> (usize, usize, usize, usize) {
    let n = a.size();
    let fixed = (0..n).filter(|&x| a.neg(x) == x).count();
    let lattice_like = (0..n).filter(|&x| a.meet(x, a.join(x, a.neg(x))) == x).count();
    let absorbing = (0..n).filter(|&x| (0..n).all(|y| a.meet(x, y) == x)).count();
    (n, fixed, lattice_like, absorbing)
}

/// Representatives of the isomorphism classes in `algebras`.
fn iso_classes(algebras: Vec<FiniteAlgebra>) -> Vec<FiniteAlgebra> {
    let mut reps: Vec<FiniteAlgebra> = Vec::new();
    let mut sigs = Vec::new();
    for a in algebras {
        let s = signature(&a);
        let dup = reps
            .iter()
            .zip(&sigs)
            .any(|(r, rs)| *rs == s && r.is_isomorphic(&a).is_some());
        if !dup {
            reps.push(a);
            sigs.push(s);
        }
    }
    reps
}

/// Subalgebras of `p` generated by one or two elements with at most `cap`
/// elements, deduplicated by carrier.
fn small_subalgebras(p: &FiniteAlgebra, cap: usize, strategy: Strategy) -> Vec<Vec<usize>> {
    let n = p.size();
    let per_first: Vec<Vec<Vec<usize>>> = strategy.map(0..n, |x| {
        (x..n).filter_map(|y| p.closure(&[x, y], cap)).collect()
    });
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for s in per_first.into_iter().flatten() {
        if seen.insert(s.clone()) {
            out.push(s);
        }
    }
    out
}

/// Every subdirectly irreducible quotient of a small subalgebra of `U²` or
/// `U³` must embed in `U`.
pub fn jonsson_check(opts: &JonssonOptions) -> JonssonReport {
    let u = catalog::u();
    let mut candidates = Vec::new();
    for (k, cap) in [(2, opts.square_cap), (3, opts.cube_cap)] {
        let p = u.power(k).expect("U^3 has 729 elements");
        for carrier in small_subalgebras(&p, cap, opts.strategy) {
            candidates.push(p.subalgebra_on(&carrier).expect("closed").algebra);
        }
    }
    let subs = iso_classes(candidates);
    let per_sub: Vec<(usize, Vec<FiniteAlgebra>)> = opts.strategy.map_slice(&subs, |s| {
        let cons = s.congruences().expect("within congruence limit");
        let si: Vec<FiniteAlgebra> = cons
            .iter()
            .map(|c| s.quotient(c))
            .filter(|q| q.is_subdirectly_irreducible().expect("smaller than its parent"))
            .collect();
        (cons.len(), si)
    });
    let mut report = JonssonReport {
        subalgebras: subs.len(),
        ..JonssonReport::default()
    };
    let mut quotients = Vec::new();
    for (count, si) in per_sub {
        report.congruences += count;
        quotients.extend(si);
    }
    let classes = iso_classes(quotients);
    report.si_sizes = classes.iter().map(|q| q.size()).collect();
    report.si_sizes.sort_unstable();
    report.failures = opts
        .strategy
        .map_slice(&classes, |q| q.embeds_into(&u).is_none().then(|| q.elements().join(" ")))
        .into_iter()
        .flatten()
        .collect();
    report
}
