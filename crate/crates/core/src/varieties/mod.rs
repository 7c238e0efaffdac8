//! Subvarieties of De Morgan bisemilattices described by generator sets
//! drawn from the catalog, and the machinery to compare them.

mod generators;
mod hsp;
mod lattice;
mod verify;

pub use generators::{check_constraints, enumerate_generator_sets, Constraint, CONSTRAINTS};
pub use hsp::{hsp_membership, hsp_membership_with, HspError, HspOptions, HspVerdict, InCertificate, OutCertificate};
pub use lattice::{build_lattice, build_lattice_with, expected_hasse_edges, Cover, LatticeError, SubvarietyLattice};
pub use verify::{jonsson_check, verify_theorems, Check, JonssonOptions, JonssonReport, Report};

use crate::catalog;
use crate::finalg::{Counterexample, FiniteAlgebra, TermTable};
use crate::par::Strategy;
use crate::terms::space::TermSpace;
use crate::terms::{parse_identity, Identity, IdentityClass};
use std::sync::OnceLock;

/// A named identity used as an axiom or a separator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NamedIdentity {
    pub name: &'static str,
    pub text: &'static str,
}

impl NamedIdentity {
    pub fn identity(&self) -> Identity {
        parse_identity(self.text).expect("built-in identities parse")
    }
}

macro_rules! named {
    ($($id:ident = $name:literal : $text:literal;)*) => {
        $(pub const $id: NamedIdentity = NamedIdentity { name: $name, text: $text };)*
    };
}

named! {
    R_ABS = "R-Abs": "x /\\ (x \\/ y) = x /\\ (x \\/ ~y)";
    B_ABS = "B-Abs": "x /\\ up(x) = x /\\ up(x) /\\ (up(x) \\/ y)";
    RB_ABS = "RB-Abs": "x /\\ up(x) /\\ (up(x) \\/ y) = x /\\ up(x) /\\ (up(x) \\/ ~y)";
    ABSORPTION = "absorption": "x = x /\\ (x \\/ y)";
    SEMILATTICE = "semilattice": "x /\\ y = x \\/ y";
    KLEENE = "Kleene": "dn(x) /\\ up(y) = dn(x)";
    BOOLEAN = "Boolean": "x /\\ up(y) = x";
    TRIVIAL = "trivial": "x = y";
    RISL_AXIOM = "RISL": "x = ~x";
    BISL_AXIOM = "BISL": "up(x) = up(x) \\/ y";
    RBISL_AXIOM = "RBISL": "up(x) \\/ y = up(x) \\/ ~y";
    DN_EQ = "dn-constant": "dn(x) = dn(y)";
    DN_BELOW_UP = "dn-below-up": "dn(x) = dn(x) /\\ up(y)";
    DN_NEG_INVARIANT = "dn-neg-invariant": "dn(x) /\\ y = dn(x) /\\ ~y";
    UP_DN_SQUEEZE = "up-dn-squeeze": "up(x) /\\ up(y) /\\ (dn(x) \\/ dn(y)) = dn(x) \\/ dn(y)";
    DN_SYMMETRIC = "dn-symmetric": "dn(x) /\\ (dn(x) \\/ dn(y)) = dn(y) /\\ (dn(y) \\/ dn(x))";
    BIP_ABS = "bip-abs": "x /\\ (x \\/ y \\/ ~y) = x /\\ up(x)";
    RBIP_ABS = "rbip-abs": "x /\\ (x \\/ y \\/ ~y) = x /\\ (x \\/ ~x \\/ y)";
    DN_UP = "dn-up": "dn(x) = up(y)";
    DN_UP_SAME = "dn-up-same": "dn(x) = up(x)";
}

/// The identities tried before the bounded sweep when separating varieties.
pub const CURATED: [NamedIdentity; 20] = [
    DN_EQ,
    DN_BELOW_UP,
    DN_NEG_INVARIANT,
    UP_DN_SQUEEZE,
    DN_SYMMETRIC,
    R_ABS,
    BIP_ABS,
    RBIP_ABS,
    DN_UP,
    SEMILATTICE,
    DN_UP_SAME,
    B_ABS,
    RB_ABS,
    ABSORPTION,
    KLEENE,
    BOOLEAN,
    TRIVIAL,
    RISL_AXIOM,
    BISL_AXIOM,
    RBISL_AXIOM,
];

/// A variety given by a set of catalog generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarietyDescriptor {
    pub name: &'static str,
    /// Catalog indices, increasing.
    pub generators: Vec<usize>,
    /// Identities that axiomatise the variety relative to De Morgan
    /// bisemilattices, where known.
    pub axioms: Vec<NamedIdentity>,
}

impl VarietyDescriptor {
    pub fn generator_algebras(&self) -> Vec<&'static FiniteAlgebra> {
        self.generators.iter().map(|&i| catalog::entry(i)).collect()
    }

    pub fn generator_names(&self) -> Vec<&'static str> {
        self.generators.iter().map(|&i| catalog::NAMES[i - 1]).collect()
    }

    pub fn contains_generator(&self, i: usize) -> bool {
        self.generators.contains(&i)
    }
}

fn d(name: &'static str, generators: &[usize], axioms: &[NamedIdentity]) -> VarietyDescriptor {
    VarietyDescriptor {
        name,
        generators: generators.to_vec(),
        axioms: axioms.to_vec(),
    }
}

/// Node names in the order of [`descriptors`].
pub const NODE_NAMES: [&str; 23] = [
    "T",
    "BA",
    "KL",
    "DML",
    "R(T)",
    "R(BA)",
    "R(KL)",
    "R(DML)",
    "Bip(T)",
    "R(Bip(T))",
    "Bip^-(DML)",
    "Bip(BA)",
    "R(Bip^-(DML))",
    "B(T)",
    "Bip(KL)",
    "B^-(DML)",
    "Bip(DML)",
    "R(Bip(BA))",
    "B(BA)",
    "R(Bip(KL))",
    "B(KL)",
    "R(Bip(DML))",
    "B(DML)",
];

/// The names of the generator-set variety families, by lattice part.
fn family_name(s: &[usize]) -> &'static str {
    let has = |i| s.contains(&i);
    let base = [4, 3, 2].into_iter().find(|&i| has(i)).unwrap_or(1);
    let lattice_part = base != 1;
    let bip_minus = has(10) && !lattice_part;
    let pick = |names: [&'static str; 4]| match base {
        1 => names[0],
        2 => names[1],
        3 => names[2],
        _ => names[3],
    };
    if bip_minus {
        return if has(11) {
            "B^-(DML)"
        } else if has(5) {
            "R(Bip^-(DML))"
        } else {
            "Bip^-(DML)"
        };
    }
    if has(11) {
        pick(["B(T)", "B(BA)", "B(KL)", "B(DML)"])
    } else if has(9) && has(5) {
        pick(["R(Bip(T))", "R(Bip(BA))", "R(Bip(KL))", "R(Bip(DML))"])
    } else if has(9) {
        pick(["Bip(T)", "Bip(BA)", "Bip(KL)", "Bip(DML)"])
    } else if has(5) {
        pick(["R(T)", "R(BA)", "R(KL)", "R(DML)"])
    } else {
        pick(["T", "BA", "KL", "DML"])
    }
}

/// Names the variety generated by a valid generator set.
pub fn name_of_generator_set(s: &[usize]) -> &'static str {
    family_name(s)
}

fn axioms_for(name: &str) -> Vec<NamedIdentity> {
    match name {
        "T" => vec![TRIVIAL],
        "BA" => vec![ABSORPTION, KLEENE, BOOLEAN],
        "KL" => vec![ABSORPTION, KLEENE],
        "DML" => vec![ABSORPTION],
        "R(DML)" => vec![R_ABS],
        "Bip(DML)" => vec![B_ABS],
        "R(Bip(DML))" => vec![RB_ABS],
        "B(DML)" => vec![],
        "R(T)" => vec![SEMILATTICE, RISL_AXIOM],
        "Bip(T)" => vec![SEMILATTICE, BISL_AXIOM],
        "R(Bip(T))" => vec![SEMILATTICE, RBISL_AXIOM],
        "B(T)" => vec![SEMILATTICE],
        _ => vec![],
    }
}

/// The eight varieties up to regularised De Morgan lattices.
pub const LOWER_GENERATOR_SETS: [&[usize]; 8] = [
    &[1],
    &[1, 2],
    &[1, 2, 3],
    &[1, 2, 3, 4],
    &[1, 5],
    &[1, 2, 5, 6],
    &[1, 2, 3, 5, 6, 7],
    &[1, 2, 3, 4, 5, 6, 7, 8],
];

fn build_descriptors() -> Vec<VarietyDescriptor> {
    let mut sets: Vec<Vec<usize>> = LOWER_GENERATOR_SETS.iter().map(|s| s.to_vec()).collect();
    sets.extend(enumerate_generator_sets());
    sets.iter()
        .map(|s| {
            let name = family_name(s);
            d(name, s, &axioms_for(name))
        })
        .collect()
}

/// All 23 subvarieties: the eight up to `R(DML)`, then the fifteen generator
/// sets of [`enumerate_generator_sets`] in its order.
pub fn descriptors() -> &'static [VarietyDescriptor] {
    static CELL: OnceLock<Vec<VarietyDescriptor>> = OnceLock::new();
    CELL.get_or_init(build_descriptors)
}

pub fn descriptor(name: &str) -> Option<&'static VarietyDescriptor> {
    descriptors().iter().find(|v| v.name == name)
}

/// The variety satisfies `e` iff every generator does; a failure reports the
/// first failing generator.
pub fn variety_satisfies(v: &VarietyDescriptor, e: &Identity) -> Result<(), (usize, Counterexample)> {
    for &i in &v.generators {
        let sat = catalog::entry(i).satisfies(e).expect("catalog algebras have negation");
        if let Some(c) = sat.counterexample() {
            return Err((i, c.clone()));
        }
    }
    Ok(())
}

pub fn variety_models(v: &VarietyDescriptor, e: &Identity) -> bool {
    variety_satisfies(v, e).is_ok()
}

/// Term tables for the catalog over the 3-variable, 7-node term space.
pub struct SweepTables {
    pub space: TermSpace,
    /// Indexed by catalog position minus one.
    pub tables: Vec<TermTable>,
}

pub const SWEEP_VARS: usize = 3;
pub const SWEEP_NODES: usize = 7;

impl SweepTables {
    pub fn build(strategy: Strategy) -> SweepTables {
        let space = TermSpace::new(SWEEP_VARS, SWEEP_NODES);
        let tables = catalog::catalog()
            .iter()
            .map(|e| TermTable::build(&e.algebra, &space, strategy))
            .collect();
        SweepTables { space, tables }
    }

    /// Cached with the default strategy.
    pub fn shared() -> &'static SweepTables {
        static CELL: OnceLock<SweepTables> = OnceLock::new();
        CELL.get_or_init(|| SweepTables::build(Strategy::default()))
    }

    /// Term ids identifying exactly the terms equal in the generated variety.
    pub fn theory(&self, generators: &[usize]) -> Vec<u32> {
        let tables: Vec<&TermTable> = generators.iter().map(|&i| &self.tables[i - 1]).collect();
        TermTable::combine(&tables)
    }
}

/// Semantic and syntactic verdict for one of the four characterisations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Agreement {
    pub class: IdentityClass,
    /// The test algebra's name.
    pub algebra: &'static str,
    pub semantic: bool,
    pub syntactic: bool,
}

impl Agreement {
    pub fn agrees(&self) -> bool {
        self.semantic == self.syntactic
    }
}

/// The four test algebras: regular ⇔ IS₂, balanced regular ⇔ IS₄,
/// bipolarly balanced ⇔ IS₃, regular bipolarly balanced ⇔ IS₂ × IS₃.
pub fn characterisation_algebras() -> [(IdentityClass, FiniteAlgebra); 4] {
    let is2 = catalog::is2();
    let is3 = catalog::is3();
    let prod = is2.product(&is3).expect("small product").with_name("IS2xIS3");
    [
        (IdentityClass::Regular, is2),
        (IdentityClass::BalancedRegular, catalog::is4()),
        (IdentityClass::BipolarlyBalanced, is3),
        (IdentityClass::RegularBipolarlyBalanced, prod),
    ]
}

fn algebra_label(c: IdentityClass) -> &'static str {
    match c {
        IdentityClass::Regular => "IS2",
        IdentityClass::BalancedRegular => "IS4",
        IdentityClass::BipolarlyBalanced => "IS3",
        _ => "IS2xIS3",
    }
}

/// Compares each class with satisfaction in its test algebra.
pub fn syntactic_vs_semantic(e: &Identity) -> [Agreement; 4] {
    static ALGEBRAS: OnceLock<[(IdentityClass, FiniteAlgebra); 4]> = OnceLock::new();
    let algebras = ALGEBRAS.get_or_init(characterisation_algebras);
    let classes = e.classes();
    algebras.each_ref().map(|(class, a)| Agreement {
        class: *class,
        algebra: algebra_label(*class),
        semantic: a.models(e),
        syntactic: classes.contains(*class),
    })
}

/// Outcome of the exhaustive sweep of [`sweep_characterisations`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepReport {
    pub identities: u64,
    /// `(lhs, rhs, class)` term indices where the verdicts differ.
    pub disagreements: Vec<(usize, usize, IdentityClass)>,
}

/// Checks the four characterisations on every identity `s ≈ t` with
/// `s ≤ t` in `space` whose variables first occur in order.
pub fn sweep_characterisations(space: &TermSpace, strategy: Strategy) -> SweepReport {
    let algebras = characterisation_algebras();
    let tables: Vec<(IdentityClass, TermTable)> = algebras
        .iter()
        .map(|(c, a)| (*c, TermTable::build(a, space, strategy)))
        .collect();
    let n = space.len();
    let per_lhs: Vec<(u64, Vec<(usize, usize, IdentityClass)>)> = strategy.map(0..n, |l| {
        let mut count = 0;
        let mut bad = Vec::new();
        for r in l..n {
            if !space.is_canonical_pair(l, r) {
                continue;
            }
            count += 1;
            let classes = space.classes(l, r);
            for (c, t) in &tables {
                if t.holds(l, r) != classes.contains(*c) {
                    bad.push((l, r, *c));
                }
            }
        }
        (count, bad)
    });
    let mut report = SweepReport {
        identities: 0,
        disagreements: Vec::new(),
    };
    for (count, bad) in per_lhs {
        report.identities += count;
        report.disagreements.extend(bad);
    }
    report
}
