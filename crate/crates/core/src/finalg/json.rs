//! The algebra interchange format.

use super::{AlgebraError, FiniteAlgebra};
use serde::{Deserialize, Serialize};

/// Wire form of an algebra: `{name, elements, meet, join, neg}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub name: String,
    pub elements: Vec<String>,
    pub meet: Vec<Vec<usize>>,
    pub join: Vec<Vec<usize>>,
    pub neg: Option<Vec<usize>>,
}

impl From<&FiniteAlgebra> for AlgebraJson {
    fn from(a: &FiniteAlgebra) -> Self {
        AlgebraJson {
            name: a.name().to_string(),
            elements: a.elements().to_vec(),
            meet: a.meet_rows(),
            join: a.join_rows(),
            neg: a.neg_table().map(<[usize]>::to_vec),
        }
    }
}

impl TryFrom<AlgebraJson> for FiniteAlgebra {
    type Error = AlgebraError;

    fn try_from(j: AlgebraJson) -> Result<Self, Self::Error> {
        FiniteAlgebra::new(j.name, j.elements, j.meet, j.join, j.neg)
    }
}

impl Serialize for FiniteAlgebra {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        AlgebraJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for FiniteAlgebra {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = AlgebraJson::deserialize(d)?;
        FiniteAlgebra::try_from(j).map_err(serde::de::Error::custom)
    }
}

impl FiniteAlgebra {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("algebra serialises")
    }

    pub fn from_json(text: &str) -> Result<FiniteAlgebra, AlgebraError> {
        let j: AlgebraJson = serde_json::from_str(text).map_err(|e| AlgebraError::Json(e.to_string()))?;
        FiniteAlgebra::try_from(j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let a = FiniteAlgebra::from_fns(
            "C2",
            vec!["f".into(), "t".into()],
            usize::min,
            usize::max,
            Some(&|x| 1 - x),
        )
        .unwrap();
        let text = a.to_json();
        assert_eq!(FiniteAlgebra::from_json(&text).unwrap(), a);
        let lattice = a.reduct();
        let text = lattice.to_json();
        assert!(text.contains("\"neg\": null"));
        assert_eq!(FiniteAlgebra::from_json(&text).unwrap(), lattice);
    }

    #[test]
    fn rejects_invalid_tables() {
        let bad = r#"{"name":"x","elements":["a"],"meet":[[1]],"join":[[0]],"neg":null}"#;
        assert!(matches!(FiniteAlgebra::from_json(bad), Err(AlgebraError::OutOfRange { .. })));
        assert!(matches!(FiniteAlgebra::from_json("{"), Err(AlgebraError::Json(_))));
    }
}
