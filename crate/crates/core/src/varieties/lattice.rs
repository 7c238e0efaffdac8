//! The lattice of all 23 subvarieties with certified covering pairs.

use super::{
    descriptors, SweepTables, VarietyDescriptor, CURATED, DN_BELOW_UP, DN_EQ, DN_NEG_INVARIANT, DN_SYMMETRIC,
    DN_UP, UP_DN_SQUEEZE,
};
use crate::catalog;
use crate::finalg::{first_separating_pair, Counterexample};
use crate::terms::Identity;
use serde_json::json;
use std::collections::BTreeSet;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LatticeError {
    /// No identity separates two varieties whose generator sets are not nested.
    #[error("no identity separates {lower} from {upper}")]
    Unseparated { lower: String, upper: String },
    /// An identity separates two varieties with nested generator sets.
    #[error("{lower} has generators inside {upper} but `{identity}` separates them")]
    ContainmentRefuted { lower: String, upper: String, identity: String },
    /// The computed covering pairs differ from the expected diagram.
    #[error("covering pair {lower} < {upper} is {}", if *.missing { "missing" } else { "unexpected" })]
    EdgeMismatch { lower: String, upper: String, missing: bool },
    /// A separating identity does not do its job.
    #[error("`{identity}` does not separate {lower} from {upper}")]
    BadSeparator { lower: String, upper: String, identity: String },
}

/// A covering pair `lower ⋖ upper` with an identity valid in `lower` and
/// failing in `upper`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    pub lower: usize,
    pub upper: usize,
    pub separator: Identity,
    /// Name of the curated identity used, if any.
    pub separator_name: Option<&'static str>,
    /// Catalog index of a generator of `upper` refuting the separator.
    pub witness: usize,
    pub counterexample: Counterexample,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubvarietyLattice {
    pub nodes: Vec<VarietyDescriptor>,
    /// `leq[v][w]`: `v ⊆ w`.
    pub leq: Vec<Vec<bool>>,
    pub covers: Vec<Cover>,
}

/// Covering pairs by node name, lower first.
pub fn expected_hasse_edges() -> Vec<(&'static str, &'static str)> {
    const FAMILIES: [[&str; 5]; 4] = [
        ["T", "R(T)", "Bip(T)", "R(Bip(T))", "B(T)"],
        ["BA", "R(BA)", "Bip(BA)", "R(Bip(BA))", "B(BA)"],
        ["KL", "R(KL)", "Bip(KL)", "R(Bip(KL))", "B(KL)"],
        ["DML", "R(DML)", "Bip(DML)", "R(Bip(DML))", "B(DML)"],
    ];
    let mut edges = Vec::new();
    for f in &FAMILIES {
        for (a, b) in [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)] {
            edges.push((f[a], f[b]));
        }
    }
    for w in FAMILIES.windows(2) {
        for p in 0..5 {
            // the bipolar positions above T factor through the Bip^- chain
            if w[0][0] == "T" && p >= 2 {
                continue;
            }
            edges.push((w[0][p], w[1][p]));
        }
    }
    let (bm, rbm, bmm) = ("Bip^-(DML)", "R(Bip^-(DML))", "B^-(DML)");
    edges.extend([
        ("Bip(T)", bm),
        (bm, "Bip(BA)"),
        (bm, rbm),
        ("R(Bip(T))", rbm),
        (rbm, "R(Bip(BA))"),
        (rbm, bmm),
        ("B(T)", bmm),
        (bmm, "B(BA)"),
    ]);
    edges.sort();
    edges
}

/// Separators from the injectivity table, keyed by covering pair.
fn preferred_separator(lower: &str, upper: &str) -> Option<super::NamedIdentity> {
    Some(match (lower, upper) {
        ("Bip(BA)", "Bip(KL)") => DN_EQ,
        ("Bip(KL)", "Bip(DML)") => DN_BELOW_UP,
        ("R(Bip(BA))", "R(Bip(KL))") => DN_NEG_INVARIANT,
        ("R(Bip(KL))", "R(Bip(DML))") => UP_DN_SQUEEZE,
        ("B(BA)", "B(KL)") => DN_SYMMETRIC,
        ("B(KL)", "B(DML)") => UP_DN_SQUEEZE,
        ("Bip^-(DML)", "R(Bip^-(DML))") => DN_UP,
        ("R(Bip^-(DML))", "B^-(DML)") => DN_NEG_INVARIANT,
        _ => return None,
    })
}

fn subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}

/// Computes the order from theories and checks it against generator-set
/// inclusion and the expected covering pairs.
pub fn build_lattice() -> Result<SubvarietyLattice, LatticeError> {
    build_lattice_with(SweepTables::shared())
}

pub fn build_lattice_with(tables: &SweepTables) -> Result<SubvarietyLattice, LatticeError> {
    let nodes = descriptors().to_vec();
    let m = nodes.len();
    let theories: Vec<Vec<u32>> = nodes.iter().map(|v| tables.theory(&v.generators)).collect();
    let curated: Vec<Identity> = CURATED.iter().map(|c| c.identity()).collect();
    // sat[g][c]: catalog algebra g+1 satisfies curated identity c
    let sat: Vec<Vec<bool>> = catalog::catalog()
        .iter()
        .map(|e| curated.iter().map(|c| e.algebra.models(c)).collect())
        .collect();
    let node_sat = |v: &VarietyDescriptor, c: usize| v.generators.iter().all(|&g| sat[g - 1][c]);

    // First identity valid in `w` and failing in `v`, if any.
    let separator = |v: usize, w: usize| -> Option<Identity> {
        if let Some(c) = (0..curated.len()).find(|&c| node_sat(&nodes[w], c) && !node_sat(&nodes[v], c)) {
            return Some(curated[c].clone());
        }
        first_separating_pair(&theories[w], &theories[v]).map(|(s, t)| tables.space.identity(s, t))
    };

    let mut leq = vec![vec![false; m]; m];
    for v in 0..m {
        for w in 0..m {
            let nested = subset(&nodes[v].generators, &nodes[w].generators);
            let sep = separator(v, w);
            match (nested, sep) {
                (true, None) => leq[v][w] = true,
                (false, Some(_)) => {}
                (true, Some(e)) => {
                    return Err(LatticeError::ContainmentRefuted {
                        lower: nodes[v].name.into(),
                        upper: nodes[w].name.into(),
                        identity: e.to_sugared_string(),
                    })
                }
                (false, None) => {
                    return Err(LatticeError::Unseparated {
                        lower: nodes[v].name.into(),
                        upper: nodes[w].name.into(),
                    })
                }
            }
        }
    }

    let mut pairs = Vec::new();
    for v in 0..m {
        for w in 0..m {
            if v != w && leq[v][w] && !(0..m).any(|u| u != v && u != w && leq[v][u] && leq[u][w]) {
                pairs.push((v, w));
            }
        }
    }
    let found: BTreeSet<(&str, &str)> = pairs.iter().map(|&(v, w)| (nodes[v].name, nodes[w].name)).collect();
    let expected: BTreeSet<(&str, &str)> = expected_hasse_edges().into_iter().collect();
    if let Some(&(l, u)) = expected.difference(&found).next() {
        return Err(LatticeError::EdgeMismatch {
            lower: l.into(),
            upper: u.into(),
            missing: true,
        });
    }
    if let Some(&(l, u)) = found.difference(&expected).next() {
        return Err(LatticeError::EdgeMismatch {
            lower: l.into(),
            upper: u.into(),
            missing: false,
        });
    }

    let mut covers = Vec::with_capacity(pairs.len());
    for (v, w) in pairs {
        let (lo, hi) = (&nodes[v], &nodes[w]);
        let (identity, name) = match preferred_separator(lo.name, hi.name) {
            Some(p) => (p.identity(), Some(p.name)),
            None => match (0..curated.len()).find(|&c| node_sat(lo, c) && !node_sat(hi, c)) {
                Some(c) => (curated[c].clone(), Some(CURATED[c].name)),
                None => {
                    let (s, t) = first_separating_pair(&theories[v], &theories[w]).ok_or_else(|| {
                        LatticeError::Unseparated {
                            lower: lo.name.into(),
                            upper: hi.name.into(),
                        }
                    })?;
                    (tables.space.identity(s, t), None)
                }
            },
        };
        let bad = || LatticeError::BadSeparator {
            lower: lo.name.into(),
            upper: hi.name.into(),
            identity: identity.to_sugared_string(),
        };
        if super::variety_satisfies(lo, &identity).is_err() {
            return Err(bad());
        }
        let (witness, counterexample) = super::variety_satisfies(hi, &identity).err().ok_or_else(bad)?;
        covers.push(Cover {
            lower: v,
            upper: w,
            separator: identity,
            separator_name: name,
            witness,
            counterexample,
        });
    }
    Ok(SubvarietyLattice { nodes, leq, covers })
}

impl SubvarietyLattice {
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.nodes.iter().position(|v| v.name == name)
    }

    pub fn leq_by_name(&self, lower: &str, upper: &str) -> bool {
        match (self.index_of(lower), self.index_of(upper)) {
            (Some(v), Some(w)) => self.leq[v][w],
            _ => false,
        }
    }

    pub fn cover(&self, lower: &str, upper: &str) -> Option<&Cover> {
        let (v, w) = (self.index_of(lower)?, self.index_of(upper)?);
        self.covers.iter().find(|c| c.lower == v && c.upper == w)
    }

    /// Covering pairs by name, sorted.
    pub fn edge_names(&self) -> Vec<(&'static str, &'static str)> {
        let mut e: Vec<_> = self
            .covers
            .iter()
            .map(|c| (self.nodes[c.lower].name, self.nodes[c.upper].name))
            .collect();
        e.sort();
        e
    }

    pub fn to_json(&self) -> String {
        let nodes: Vec<_> = self
            .nodes
            .iter()
            .map(|v| {
                json!({
                    "name": v.name,
                    "generators": v.generator_names(),
                    "generator_indices": v.generators,
                    "axioms": v.axioms.iter().map(|a| a.text).collect::<Vec<_>>(),
                })
            })
            .collect();
        let edges: Vec<_> = self
            .covers
            .iter()
            .map(|c| {
                let w = catalog::entry(c.witness);
                json!({
                    "lower": self.nodes[c.lower].name,
                    "upper": self.nodes[c.upper].name,
                    "separator": c.separator.to_sugared_string(),
                    "separator_name": c.separator_name,
                    "witness": catalog::NAMES[c.witness - 1],
                    "counterexample": c.counterexample.describe(w),
                })
            })
            .collect();
        serde_json::to_string_pretty(&json!({ "nodes": nodes, "edges": edges })).expect("lattice serialises")
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph subvarieties {\n  rankdir=BT;\n  node [shape=plaintext];\n");
        for v in &self.nodes {
            let gens = v.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(",");
            writeln!(s, "  \"{}\" [tooltip=\"{{{}}}\"];", v.name, gens).unwrap();
        }
        for c in &self.covers {
            let label = c.separator.to_sugared_string().replace('\\', "\\\\");
            writeln!(
                s,
                "  \"{}\" -- \"{}\" [tooltip=\"{}\"];",
                self.nodes[c.lower].name, self.nodes[c.upper].name, label
            )
            .unwrap();
        }
        s.push_str("}\n");
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} varieties\n", self.nodes.len());
        for v in &self.nodes {
            writeln!(s, "  {:<14} {{{}}}", v.name, v.generator_names().join(", ")).unwrap();
        }
        writeln!(s, "{} covering pairs", self.covers.len()).unwrap();
        for c in &self.covers {
            writeln!(
                s,
                "  {} < {}: {}  (fails in {})",
                self.nodes[c.lower].name,
                self.nodes[c.upper].name,
                c.separator.to_sugared_string(),
                catalog::NAMES[c.witness - 1]
            )
            .unwrap();
        }
        s
    }
}
