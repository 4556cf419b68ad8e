//! Re-derivation of the worked examples on the fixture spaces.
//!
//! Each example becomes a [`DiscrepancyRecord`]: the claimed flags, the
//! values the engine computes for them, and a verdict. A record's evidence is
//! self-contained, so [`verify_record`] can recompute it from the document.

use serde::{Deserialize, Serialize};

use crate::atlas::QueryFlag;
use crate::fixtures;
use crate::ladder::{FamilyId, Ladder};
use crate::separation::is_normal_variant;
use crate::space::FiniteSpace;

use super::document::{DocumentError, LabeledSpace, SpaceDocument};

/// Property name for "every open set is H*-open".
pub const OPENS_ARE_HSTAR_OPEN: &str = "opens-are-H*-open";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Agree,
    Disagree,
}

/// One claimed flag and what the engine finds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Observation {
    /// A class name, a normality variant, or [`OPENS_ARE_HSTAR_OPEN`].
    pub property: String,
    /// The subset a class property is about.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub subset: Option<Vec<String>>,
    pub claimed: bool,
    pub observed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evidence {
    pub space: SpaceDocument,
    pub observations: Vec<Observation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscrepancyRecord {
    pub source: String,
    pub claim: String,
    pub engine_verdict: Verdict,
    pub evidence: Evidence,
}

#[derive(Debug, thiserror::Error)]
pub enum EvidenceError {
    #[error(transparent)]
    Document(#[from] DocumentError),
    #[error("unknown property {0:?}")]
    UnknownProperty(String),
    #[error("property {0:?} needs a subset")]
    MissingSubset(String),
}

fn evaluate(
    space: &LabeledSpace,
    ladder: &Ladder,
    property: &str,
    subset: Option<&[String]>,
) -> Result<bool, EvidenceError> {
    if property == OPENS_ARE_HSTAR_OPEN {
        let hstar = ladder.extent(FamilyId::HStarOpen);
        return Ok(space.space.opens().iter().all(|&u| hstar.contains(u)));
    }
    match property
        .parse::<QueryFlag>()
        .map_err(|_| EvidenceError::UnknownProperty(property.to_string()))?
    {
        QueryFlag::Normality(v) => Ok(is_normal_variant(ladder, v)),
        QueryFlag::Class(f) => {
            let labels = subset.ok_or_else(|| EvidenceError::MissingSubset(property.to_string()))?;
            Ok(ladder.contains(f, space.subset_from_labels(labels)?))
        }
    }
}

struct Claim {
    property: &'static str,
    subset: Option<&'static [&'static str]>,
    value: bool,
}

const fn about(subset: &'static [&'static str], property: &'static str, value: bool) -> Claim {
    Claim {
        property,
        subset: Some(subset),
        value,
    }
}

const fn whole(property: &'static str, value: bool) -> Claim {
    Claim {
        property,
        subset: None,
        value,
    }
}

fn record(source: &str, claim: &str, space: FiniteSpace, claims: &[Claim]) -> DiscrepancyRecord {
    let labeled = LabeledSpace::with_default_labels(space);
    let ladder = Ladder::new(labeled.space.clone()).expect("fixtures are small");
    let observations: Vec<Observation> = claims
        .iter()
        .map(|c| {
            let subset: Option<Vec<String>> =
                c.subset.map(|s| s.iter().map(|l| l.to_string()).collect());
            let observed = evaluate(&labeled, &ladder, c.property, subset.as_deref())
                .expect("fixture claims name known properties");
            Observation {
                property: c.property.to_string(),
                subset,
                claimed: c.value,
                observed,
            }
        })
        .collect();
    let engine_verdict = if observations.iter().all(|o| o.claimed == o.observed) {
        Verdict::Agree
    } else {
        Verdict::Disagree
    };
    DiscrepancyRecord {
        source: source.to_string(),
        claim: claim.to_string(),
        engine_verdict,
        evidence: Evidence {
            space: labeled.to_document(),
            observations,
        },
    }
}

/// Records for Examples 1.5, 1.6, 1.7 and 1.9, in that order.
pub fn repro() -> Vec<DiscrepancyRecord> {
    vec![
        record(
            "Example 1.5",
            "{r} is h-closed and H*-closed but not closed",
            fixtures::e1(),
            &[
                about(&["r"], "h-closed", true),
                about(&["r"], "H*-closed", true),
                about(&["r"], "closed", false),
            ],
        ),
        record(
            "Example 1.6",
            "{p,s,t} is rgh-closed and rgH*-closed but neither gh-closed nor gH*-closed",
            fixtures::e2(),
            &[
                about(&["p", "s", "t"], "rgh-closed", true),
                about(&["p", "s", "t"], "rgH*-closed", true),
                about(&["p", "s", "t"], "gh-closed", false),
                about(&["p", "s", "t"], "gH*-closed", false),
            ],
        ),
        record(
            "Example 1.7",
            "{r} is gH*-closed but not closed",
            fixtures::e1(),
            &[
                about(&["r"], "gH*-closed", true),
                about(&["r"], "closed", false),
            ],
        ),
        record(
            "Example 1.9",
            "{s} and ∅ are disjoint closed sets; the space is normal, g-normal and H*-normal, and every open set is H*-open",
            fixtures::e3(),
            &[
                about(&["s"], "closed", true),
                about(&[], "closed", true),
                whole("normal", true),
                whole("g-normal", true),
                whole("H*-normal", true),
                whole(OPENS_ARE_HSTAR_OPEN, true),
            ],
        ),
    ]
}

/// Recomputes every observation from the embedded document and checks the
/// stored values and verdict against it.
pub fn verify_record(r: &DiscrepancyRecord) -> Result<bool, EvidenceError> {
    let labeled = r.evidence.space.to_space()?;
    let ladder = Ladder::new(labeled.space.clone()).map_err(DocumentError::from)?;
    let mut all_agree = true;
    for o in &r.evidence.observations {
        let observed = evaluate(&labeled, &ladder, &o.property, o.subset.as_deref())?;
        if observed != o.observed {
            return Ok(false);
        }
        all_agree &= o.claimed == observed;
    }
    let verdict = if all_agree {
        Verdict::Agree
    } else {
        Verdict::Disagree
    };
    Ok(verdict == r.engine_verdict)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_records_all_self_verify() {
        let records = repro();
        let sources: Vec<&str> = records.iter().map(|r| r.source.as_str()).collect();
        assert_eq!(sources, ["Example 1.5", "Example 1.6", "Example 1.7", "Example 1.9"]);
        for r in &records {
            assert!(verify_record(r).unwrap(), "{}", r.source);
        }
    }

    #[test]
    fn singleton_examples_agree() {
        let records = repro();
        assert_eq!(records[0].engine_verdict, Verdict::Agree);
        assert_eq!(records[2].engine_verdict, Verdict::Agree);
    }

    #[test]
    fn s_is_not_closed_in_the_partition_space() {
        let r = &repro()[3];
        let obs = &r.evidence.observations[0];
        assert_eq!(obs.subset.as_deref(), Some(&["s".to_string()][..]));
        assert!(!obs.observed);
        assert_eq!(r.engine_verdict, Verdict::Disagree);
    }

    #[test]
    fn tampered_record_fails_verification() {
        let mut r = repro()[0].clone();
        r.evidence.observations[2].observed = true;
        assert!(!verify_record(&r).unwrap());
    }
}
