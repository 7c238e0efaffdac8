//! The system interchange format. Fibres, transitions and dualisers are
//! keyed by index element names; a transition key reads `"i<=j"`.

use super::InvSemilatticeSystem;
use crate::finalg::{AlgebraError, AlgebraJson, FiniteAlgebra};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemJson {
    pub index: AlgebraJson,
    pub fibres: BTreeMap<String, AlgebraJson>,
    pub transitions: BTreeMap<String, Vec<usize>>,
    pub dualisers: BTreeMap<String, Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SystemJsonError {
    /// Malformed JSON text.
    #[error("invalid system JSON: {0}")]
    Json(String),
    /// An embedded algebra is invalid.
    #[error("invalid algebra in system: {0}")]
    Algebra(#[from] AlgebraError),
    /// A key names no element of the index.
    #[error("`{0}` is not an index element")]
    UnknownIndexElement(String),
    /// An index element has no fibre.
    #[error("no fibre for index element `{0}`")]
    MissingFibre(String),
    /// An index element has no dualiser.
    #[error("no dualiser for index element `{0}`")]
    MissingDualiser(String),
    /// A transition key is not of the form `i<=j`.
    #[error("transition key `{0}` is not of the form `i<=j`")]
    BadTransitionKey(String),
}

impl From<&InvSemilatticeSystem> for SystemJson {
    fn from(s: &InvSemilatticeSystem) -> Self {
        let name = |i: usize| s.index.element_name(i).to_string();
        SystemJson {
            index: AlgebraJson::from(&s.index),
            fibres: s
                .fibres
                .iter()
                .enumerate()
                .map(|(i, f)| (name(i), AlgebraJson::from(f)))
                .collect(),
            transitions: s
                .transitions
                .iter()
                .map(|(&(i, j), p)| (format!("{}<={}", name(i), name(j)), p.clone()))
                .collect(),
            dualisers: s
                .dualisers
                .iter()
                .enumerate()
                .map(|(i, n)| (name(i), n.clone()))
                .collect(),
        }
    }
}

impl TryFrom<SystemJson> for InvSemilatticeSystem {
    type Error = SystemJsonError;

    fn try_from(mut j: SystemJson) -> Result<Self, Self::Error> {
        let index = FiniteAlgebra::try_from(j.index)?;
        let lookup = |s: &str| {
            index
                .index_of(s)
                .ok_or_else(|| SystemJsonError::UnknownIndexElement(s.to_string()))
        };
        for key in j.fibres.keys().chain(j.dualisers.keys()) {
            lookup(key)?;
        }
        let mut fibres = Vec::with_capacity(index.size());
        let mut dualisers = Vec::with_capacity(index.size());
        for name in index.elements() {
            let f = j
                .fibres
                .remove(name)
                .ok_or_else(|| SystemJsonError::MissingFibre(name.clone()))?;
            fibres.push(FiniteAlgebra::try_from(f)?);
            dualisers.push(
                j.dualisers
                    .remove(name)
                    .ok_or_else(|| SystemJsonError::MissingDualiser(name.clone()))?,
            );
        }
        let mut transitions = BTreeMap::new();
        for (key, map) in j.transitions {
            let (a, b) = key
                .split_once("<=")
                .ok_or_else(|| SystemJsonError::BadTransitionKey(key.clone()))?;
            transitions.insert((lookup(a.trim())?, lookup(b.trim())?), map);
        }
        Ok(InvSemilatticeSystem::new(index, fibres, transitions, dualisers))
    }
}

impl InvSemilatticeSystem {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&SystemJson::from(self)).expect("system serialises")
    }

    pub fn from_json(text: &str) -> Result<InvSemilatticeSystem, SystemJsonError> {
        let j: SystemJson = serde_json::from_str(text).map_err(|e| SystemJsonError::Json(e.to_string()))?;
        InvSemilatticeSystem::try_from(j)
    }
}
