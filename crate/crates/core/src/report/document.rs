//! JSON documents describing a labeled finite space.
//!
//! ```json
//! { "points": ["p", "q", "r", "s"],
//!   "opens": [[], ["p"], ["q"], ["p", "q"], ["p", "q", "r"], ["p", "q", "r", "s"]] }
//! ```

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::TopologyError;
use crate::point_label;
use crate::space::{validate_topology, FiniteSpace};
use crate::subset::Subset;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDocument {
    pub points: Vec<String>,
    pub opens: Vec<Vec<String>>,
}

#[derive(Debug, thiserror::Error)]
pub enum DocumentError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("label {0:?} is declared twice")]
    DuplicateLabel(String),
    #[error("label {0:?} is not a declared point")]
    UnknownLabel(String),
    #[error(transparent)]
    Topology(#[from] TopologyError),
}

/// A validated space plus the labels its points were declared with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledSpace {
    pub labels: Vec<String>,
    pub space: FiniteSpace,
}

impl LabeledSpace {
    /// Labels `p, q, r, ...` in point order.
    pub fn with_default_labels(space: FiniteSpace) -> Self {
        Self {
            labels: (0..space.n()).map(point_label).collect(),
            space,
        }
    }

    pub fn index_of(&self, label: &str) -> Result<usize, DocumentError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| DocumentError::UnknownLabel(label.to_string()))
    }

    pub fn subset_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Subset, DocumentError> {
        let points = labels
            .iter()
            .map(|l| self.index_of(l.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Subset::from_points(self.space.n(), points))
    }

    pub fn labels_of(&self, a: Subset) -> Vec<String> {
        a.points().map(|i| self.labels[i].clone()).collect()
    }

    /// `{p,r}` with this space's labels.
    pub fn show(&self, a: Subset) -> String {
        format!("{{{}}}", self.labels_of(a).join(","))
    }

    pub fn to_document(&self) -> SpaceDocument {
        SpaceDocument {
            points: self.labels.clone(),
            opens: self
                .space
                .opens()
                .iter()
                .map(|&u| self.labels_of(u))
                .collect(),
        }
    }
}

impl SpaceDocument {
    /// Document for `space` with default labels.
    pub fn from_space(space: &FiniteSpace) -> Self {
        LabeledSpace::with_default_labels(space.clone()).to_document()
    }

    /// Labels of the points of `a` under default labelling.
    pub fn labels_of(&self, a: Subset) -> Vec<String> {
        a.points().map(|i| self.points[i].clone()).collect()
    }

    pub fn to_space(&self) -> Result<LabeledSpace, DocumentError> {
        let mut index = HashMap::with_capacity(self.points.len());
        for (i, l) in self.points.iter().enumerate() {
            if index.insert(l.as_str(), i).is_some() {
                return Err(DocumentError::DuplicateLabel(l.clone()));
            }
        }
        let n = self.points.len();
        if n == 0 {
            return Err(TopologyError::EmptyGround.into());
        }
        if n > 64 {
            return Err(TopologyError::GroundTooLarge { n, max: 64 }.into());
        }
        let mut family = Vec::with_capacity(self.opens.len());
        for open in &self.opens {
            let mut bits = 0u64;
            for l in open {
                let i = *index
                    .get(l.as_str())
                    .ok_or_else(|| DocumentError::UnknownLabel(l.clone()))?;
                bits |= 1 << i;
            }
            family.push(Subset::from_bits(bits, n).expect("indices are in range"));
        }
        Ok(LabeledSpace {
            labels: self.points.clone(),
            space: validate_topology(n, &family)?,
        })
    }
}

/// Parses and validates a space document.
pub fn parse_space(text: &str) -> Result<LabeledSpace, DocumentError> {
    let doc: SpaceDocument = serde_json::from_str(text).map_err(|e| DocumentError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    doc.to_space()
}

/// Pretty-printed document for `space`; [`parse_space`] reads it back.
pub fn print_space(space: &LabeledSpace) -> String {
    serde_json::to_string_pretty(&space.to_document()).expect("documents always serialize")
}
