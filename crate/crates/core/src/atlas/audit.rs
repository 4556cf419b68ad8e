//! Bounded-universe audits of implications between the classes and maps.
//!
//! Each [`TheoremId`] names a universally quantified statement and a universe
//! shape: single spaces, maps between two spaces, or composable pairs of maps.
//! An audit enumerates the universe, skips instances whose hypotheses fail,
//! and records every instance where the hypotheses hold but the conclusion
//! does not. Results carry fully serialized witnesses that
//! [`verify_witness`] can re-check from scratch.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::TopologyError;
use crate::ladder::{FamilyId, Ladder, UnknownTag};
use crate::maps::{
    characterization_check, compose, ghstar_open_characterization, Characterization,
    MapPropertyId as P, SpaceMap,
};
use crate::report::{DocumentError, SpaceDocument};
use crate::separation::{hstar_normal_characterization, is_normal_variant, HStarForm, NormalityVariant};
use crate::subset::Subset;

use super::enumerate::{all_tables, universe};
use super::enumeration_cap;

pub const SCHEMA_VERSION: u32 = 1;

/// Largest spaces a map audit enumerates exhaustively; larger ones are sampled.
pub const MAP_EXHAUSTIVE_N: usize = 3;
/// Largest spaces a composition audit enumerates exhaustively.
pub const COMPOSITION_EXHAUSTIVE_N: usize = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[allow(non_camel_case_types)]
pub enum TheoremId {
    T1_10,
    R1_4,
    R1_8,
    T2_2,
    L2_3,
    T2_4,
    T2_5,
    T2_6,
    T2_7,
    T3_2a,
    T3_2b,
    T3_2c,
    T3_3,
    L3_4,
    T3_5,
    R3_6,
    T3_7,
    T3_8,
    C3_9,
    T3_10,
    T3_11,
    T3_12,
    T4_1,
    L4_2,
    T4_3,
    C4_4,
    L4_5,
    L4_6,
}

/// What one audit instance consists of.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Shape {
    Space,
    Map,
    Composition,
}

impl TheoremId {
    pub const ALL: [TheoremId; 28] = {
        use TheoremId::*;
        [
            T1_10, R1_4, R1_8, T2_2, L2_3, T2_4, T2_5, T2_6, T2_7, T3_2a, T3_2b, T3_2c, T3_3, L3_4,
            T3_5, R3_6, T3_7, T3_8, C3_9, T3_10, T3_11, T3_12, T4_1, L4_2, T4_3, C4_4, L4_5, L4_6,
        ]
    };

    pub fn tag(self) -> &'static str {
        use TheoremId::*;
        match self {
            T1_10 => "T1.10",
            R1_4 => "R1.4",
            R1_8 => "R1.8",
            T2_2 => "T2.2",
            L2_3 => "L2.3",
            T2_4 => "T2.4",
            T2_5 => "T2.5",
            T2_6 => "T2.6",
            T2_7 => "T2.7",
            T3_2a => "T3.2a",
            T3_2b => "T3.2b",
            T3_2c => "T3.2c",
            T3_3 => "T3.3",
            L3_4 => "L3.4",
            T3_5 => "T3.5",
            R3_6 => "R3.6",
            T3_7 => "T3.7",
            T3_8 => "T3.8",
            C3_9 => "C3.9",
            T3_10 => "T3.10",
            T3_11 => "T3.11",
            T3_12 => "T3.12",
            T4_1 => "T4.1",
            L4_2 => "L4.2",
            T4_3 => "T4.3",
            C4_4 => "C4.4",
            L4_5 => "L4.5",
            L4_6 => "L4.6",
        }
    }

    pub fn shape(self) -> Shape {
        use TheoremId::*;
        match self {
            T1_10 | R1_4 | R1_8 | L4_2 => Shape::Space,
            T3_2a | T3_2b | T3_2c | T3_3 | T3_11 | T3_12 => Shape::Composition,
            _ => Shape::Map,
        }
    }

    /// One-line statement of what is checked.
    pub fn statement(self) -> &'static str {
        use TheoremId::*;
        match self {
            T1_10 => "the separation, closed-shrinking and interpolation forms of H*-normality agree",
            R1_4 => "closed ⇒ alpha-closed ⇒ h-closed ⇒ H*-closed ⇒ gh-closed ⇒ rgh-closed; H*-closed ⇒ gH*-closed ⇒ rgH*-closed; closed ⇒ g-closed",
            R1_8 => "normal ⇒ g-normal ⇒ H*-normal",
            T2_2 => "strongly H*-closed ⟺ every φ⁻¹(D) ⊆ Q ∈ H*O(X) lifts to H*-open S ⊇ D with φ⁻¹(S) ⊆ Q",
            L2_3 => "neighbourhood and inclusion forms of almost H*-irresoluteness agree",
            T2_4 => "almost H*-irresolute ⟺ φ(H*-cl(Q)) ⊆ H*-cl(φ(Q)) for every H*-open Q",
            T2_5 => "continuous strongly-H*-open almost-H*-irresolute surjection from an H*-normal space has H*-normal codomain",
            T2_6 => "continuous strongly-H*-closed surjection from an H*-normal space has H*-normal codomain",
            T2_7 => "a surjection is almost H*g-closed ⟺ every φ⁻¹(T) ⊆ Q ∈ RO(X) lifts to H*g-open R ⊇ T with φ⁻¹(R) ⊆ Q",
            T3_2a => "ψ∘φ is H*-gH*-closed when φ is H*-gH*-closed and ψ is continuous and H*-gH*-closed",
            T3_2b => "ψ∘φ is H*-gH*-closed when φ is strongly H*-closed and ψ is H*-gH*-closed",
            T3_2c => "ψ∘φ is H*-gH*-closed when φ is quasi H*-closed and ψ is gH*-closed",
            T3_3 => "ψ is H*-gH*-closed when ψ∘φ is and φ is an H*-irresolute surjection",
            L3_4 => "H*-gH*-closed ⟺ every φ⁻¹(E) ⊆ Q ∈ H*O(X) lifts to gH*-open S ⊇ E with φ⁻¹(S) ⊆ Q",
            T3_5 => "continuous H*-gH*-closed maps send gH*-closed sets to gH*-closed sets",
            R3_6 => "H*-irresolute ⇒ H*-gH*-continuous",
            T3_7 => "H*-gH*-continuous ⟺ preimages of H*-open sets are gH*-open",
            T3_8 => "H*-gH*-continuous maps pull gH*-closed sets back to gH*-closed sets",
            C3_9 => "closed H*-irresolute maps pull gH*-closed sets back to gH*-closed sets",
            T3_10 => "open bijective H*-gH*-continuous maps pull gH*-closed sets back to gH*-closed sets",
            T3_11 => "φ is H*-gH*-closed when ψ∘φ is and ψ is open, bijective and H*-gH*-continuous",
            T3_12 => "φ is H*-gH*-closed when ψ∘φ is and ψ is a closed H*-gH*-continuous injection",
            T4_1 => "continuous quasi-H*-closed surjection from an H*-normal space has normal codomain",
            L4_2 => "A is gH*-open ⟺ every closed F ⊆ A lies in H*-int(A)",
            T4_3 => "closed H*-gH*-continuous injection into an H*-normal space has H*-normal domain",
            C4_4 => "closed H*-irresolute injection into an H*-normal space has H*-normal domain",
            L4_5 => "almost gH*-closed ⟺ every φ⁻¹(E) ⊆ Q ∈ RO(X) lifts to gH*-open S ⊇ E with φ⁻¹(S) ⊆ Q",
            L4_6 => "almost gH*-closed ⇒ every closed G with φ⁻¹(G) ⊆ Q ∈ RO(X) lifts to H*-open S ⊇ G with φ⁻¹(S) ⊆ Q",
        }
    }

    /// Default universe: spaces up to 4 points, maps and compositions up to 3.
    pub fn default_bounds(self) -> Bounds {
        let max_n = match self.shape() {
            Shape::Space => 4,
            Shape::Map | Shape::Composition => 3,
        };
        Bounds {
            min_n: 1,
            max_n,
            ..Bounds::default()
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for TheoremId {
    type Err = UnknownTag;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.tag().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| UnknownTag(s.to_string()))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

impl<'de> Deserialize<'de> for TheoremId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The universe an audit ranges over.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub min_n: usize,
    pub max_n: usize,
    /// Seed of the sampler used beyond the exhaustive sizes.
    pub seed: u64,
    /// Number of sampled instances when `max_n` exceeds the exhaustive size.
    pub samples: usize,
    /// How many witnesses a report keeps; the total count is always reported.
    pub witness_limit: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            min_n: 1,
            max_n: 3,
            seed: 0,
            samples: 20_000,
            witness_limit: 25,
        }
    }
}

impl Bounds {
    fn validate(&self) -> Result<(), TopologyError> {
        if self.min_n == 0 || self.max_n == 0 {
            return Err(TopologyError::EmptyGround);
        }
        let cap = enumeration_cap();
        if self.max_n > cap {
            return Err(TopologyError::GroundTooLarge {
                n: self.max_n,
                max: cap,
            });
        }
        Ok(())
    }

    fn exhaustive_max(&self, shape: Shape) -> usize {
        match shape {
            Shape::Space => self.max_n,
            Shape::Map => self.max_n.min(MAP_EXHAUSTIVE_N),
            Shape::Composition => self.max_n.min(COMPOSITION_EXHAUSTIVE_N),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniverseSummary {
    pub shape: Shape,
    /// Every instance with all spaces of at most this size was enumerated.
    pub exhaustive_max_n: usize,
    pub exhaustive_instances: u64,
    pub sampled_instances: u64,
}

/// A concrete instance on which a statement failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Position of the instance in the audit's enumeration order.
    pub instance: u64,
    /// The spaces of the instance: `[X]`, `[X, Y]` or `[X, Y, Z]`.
    pub spaces: Vec<SpaceDocument>,
    /// Map tables: `[]`, `[φ]` or `[φ, ψ]`, each listing the image index of
    /// every domain point.
    pub maps: Vec<Vec<usize>>,
    /// Index into `spaces` of the space `subset` lives in.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub subset_space: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub subset: Option<Vec<String>>,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub schema_version: u32,
    pub theorem: TheoremId,
    pub statement: String,
    pub bounds: Bounds,
    pub universe: UniverseSummary,
    pub instances_checked: u64,
    pub skipped_precondition: u64,
    pub counterexample_count: u64,
    pub counterexamples: Vec<Witness>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.counterexample_count == 0
    }
}

#[derive(Debug, thiserror::Error)]
pub enum WitnessError {
    #[error("witness has the wrong shape for {0}")]
    Shape(TheoremId),
    #[error(transparent)]
    Document(#[from] DocumentError),
    #[error(transparent)]
    Map(#[from] crate::error::MapError),
}

struct Failure {
    subset: Option<(usize, Subset)>,
    note: String,
}

enum Outcome {
    Skipped,
    Checked(Option<Failure>),
}

fn verdict(fails: bool, note: impl FnOnce() -> String) -> Outcome {
    Outcome::Checked(fails.then(|| Failure {
        subset: None,
        note: note(),
    }))
}

fn lhs_rhs((lhs, rhs): (bool, bool)) -> Outcome {
    verdict(lhs != rhs, || format!("lhs={lhs} rhs={rhs}"))
}

fn hstar_normal(l: &Ladder) -> bool {
    is_normal_variant(l, NormalityVariant::HStarNormal)
}

const CHAIN: [(FamilyId, FamilyId); 8] = {
    use FamilyId::*;
    [
        (Closed, AlphaClosed),
        (AlphaClosed, HClosed),
        (HClosed, HStarClosed),
        (HStarClosed, GhClosed),
        (GhClosed, RghClosed),
        (HStarClosed, GhStarClosed),
        (GhStarClosed, RghStarClosed),
        (Closed, GClosed),
    ]
};

/// The implications asserted by the set-class hierarchy.
pub fn hierarchy_edges() -> &'static [(FamilyId, FamilyId)] {
    &CHAIN
}

fn check_space(t: TheoremId, l: &Ladder) -> Outcome {
    use TheoremId::*;
    match t {
        T1_10 => {
            let forms: Vec<bool> = HStarForm::ALL
                .iter()
                .map(|&f| hstar_normal_characterization(l, f))
                .collect();
            verdict(forms.iter().any(|&f| f != forms[0]), || {
                format!("forms 1,2,3 = {},{},{}", forms[0], forms[1], forms[2])
            })
        }
        R1_4 => {
            for a in l.subsets() {
                for &(from, to) in &CHAIN {
                    if l.contains(from, a) && !l.contains(to, a) {
                        return Outcome::Checked(Some(Failure {
                            subset: Some((0, a)),
                            note: format!("{from} but not {to}"),
                        }));
                    }
                }
            }
            Outcome::Checked(None)
        }
        R1_8 => {
            let v: Vec<bool> = NormalityVariant::ALL
                .iter()
                .map(|&v| is_normal_variant(l, v))
                .collect();
            if v[0] && !v[1] {
                verdict(true, || "normal but not g-normal".into())
            } else {
                verdict(v[1] && !v[2], || "g-normal but not H*-normal".into())
            }
        }
        L4_2 => {
            for a in l.subsets() {
                let (lhs, rhs) = ghstar_open_characterization(l, a);
                if lhs != rhs {
                    return Outcome::Checked(Some(Failure {
                        subset: Some((0, a)),
                        note: format!("gH*-open={lhs} closed-subsets-criterion={rhs}"),
                    }));
                }
            }
            Outcome::Checked(None)
        }
        _ => unreachable!("{t} is not a space statement"),
    }
}

fn check_characterization(m: &SpaceMap, which: Characterization) -> Outcome {
    match characterization_check(m, which) {
        Ok(sides) => lhs_rhs(sides),
        Err(_) => Outcome::Skipped,
    }
}

/// Holds when every hypothesis does.
fn given(hypotheses: &[bool], conclusion: impl FnOnce() -> Outcome) -> Outcome {
    if hypotheses.iter().all(|&h| h) {
        conclusion()
    } else {
        Outcome::Skipped
    }
}

/// First member of `from` (in the space at `side`) whose transport misses `to`.
fn first_escape(
    members: impl Iterator<Item = Subset>,
    transport: impl Fn(Subset) -> Subset,
    target: &Ladder,
    to: FamilyId,
    side: usize,
    what: &str,
) -> Outcome {
    for a in members {
        if !target.contains(to, transport(a)) {
            return Outcome::Checked(Some(Failure {
                subset: Some((side, a)),
                note: format!("{what} of this set is not {to}"),
            }));
        }
    }
    Outcome::Checked(None)
}

fn check_map(t: TheoremId, m: &SpaceMap) -> Outcome {
    use Characterization as C;
    use TheoremId::*;
    let x = m.domain();
    let y = m.codomain();
    let pull_back_ghstar_closed = || {
        first_escape(
            y.extent(FamilyId::GhStarClosed).iter(),
            |w| m.preimage(w),
            x,
            FamilyId::GhStarClosed,
            1,
            "preimage",
        )
    };
    match t {
        T2_2 => check_characterization(m, C::StronglyHStarClosedLift),
        L2_3 => check_characterization(m, C::AlmostIrresoluteForms),
        T2_4 => check_characterization(m, C::AlmostIrresoluteClosureImage),
        T2_7 => check_characterization(m, C::AlmostHStarGClosedLift),
        L3_4 => check_characterization(m, C::HStarGhStarClosedLift),
        T3_7 => check_characterization(m, C::HStarGhStarContinuityByOpens),
        L4_5 => check_characterization(m, C::AlmostGhStarClosedLift),
        T2_5 => given(
            &[
                m.is_surjective(),
                m.check(P::Continuous),
                m.check(P::StronglyHStarOpen),
                m.check(P::AlmostHStarIrresolute),
                hstar_normal(x),
            ],
            || verdict(!hstar_normal(y), || "codomain is not H*-normal".into()),
        ),
        T2_6 => given(
            &[
                m.is_surjective(),
                m.check(P::Continuous),
                m.check(P::StronglyHStarClosed),
                hstar_normal(x),
            ],
            || verdict(!hstar_normal(y), || "codomain is not H*-normal".into()),
        ),
        T3_5 => given(&[m.check(P::Continuous), m.check(P::HStarGhStarClosed)], || {
            first_escape(
                x.extent(FamilyId::GhStarClosed).iter(),
                |a| m.image(a),
                y,
                FamilyId::GhStarClosed,
                0,
                "image",
            )
        }),
        R3_6 => given(&[m.check(P::HStarIrresolute)], || {
            verdict(!m.check(P::HStarGhStarContinuous), || {
                "not H*-gH*-continuous".into()
            })
        }),
        T3_8 => given(&[m.check(P::HStarGhStarContinuous)], pull_back_ghstar_closed),
        C3_9 => given(
            &[m.check(P::ClosedMap), m.check(P::HStarIrresolute)],
            pull_back_ghstar_closed,
        ),
        T3_10 => given(
            &[
                m.check(P::OpenMap),
                m.check(P::Bijective),
                m.check(P::HStarGhStarContinuous),
            ],
            pull_back_ghstar_closed,
        ),
        T4_1 => given(
            &[
                m.is_surjective(),
                m.check(P::Continuous),
                m.check(P::QuasiHStarClosed),
                hstar_normal(x),
            ],
            || {
                verdict(!is_normal_variant(y, NormalityVariant::Normal), || {
                    "codomain is not normal".into()
                })
            },
        ),
        T4_3 => given(
            &[
                m.is_injective(),
                m.check(P::ClosedMap),
                m.check(P::HStarGhStarContinuous),
                hstar_normal(y),
            ],
            || verdict(!hstar_normal(x), || "domain is not H*-normal".into()),
        ),
        C4_4 => given(
            &[
                m.is_injective(),
                m.check(P::ClosedMap),
                m.check(P::HStarIrresolute),
                hstar_normal(y),
            ],
            || verdict(!hstar_normal(x), || "domain is not H*-normal".into()),
        ),
        L4_6 => given(&[m.check(P::AlmostGhStarClosed)], || {
            let closed = y.space().closeds().iter().copied();
            verdict(
                !m.lifts(closed, FamilyId::RegularOpen, FamilyId::HStarOpen),
                || "some closed G has no H*-open lift".into(),
            )
        }),
        _ => unreachable!("{t} is not a map statement"),
    }
}

fn check_composition(t: TheoremId, phi: &SpaceMap, psi: &SpaceMap) -> Outcome {
    use TheoremId::*;
    let c = compose(phi, psi).expect("composable by construction");
    let closed = |m: &SpaceMap| m.check(P::HStarGhStarClosed);
    match t {
        T3_2a => given(
            &[closed(phi), psi.check(P::Continuous), closed(psi)],
            || verdict(!closed(&c), || "ψ∘φ is not H*-gH*-closed".into()),
        ),
        T3_2b => given(&[phi.check(P::StronglyHStarClosed), closed(psi)], || {
            verdict(!closed(&c), || "ψ∘φ is not H*-gH*-closed".into())
        }),
        T3_2c => given(
            &[phi.check(P::QuasiHStarClosed), psi.check(P::GhStarClosedMap)],
            || verdict(!closed(&c), || "ψ∘φ is not H*-gH*-closed".into()),
        ),
        T3_3 => given(
            &[closed(&c), phi.check(P::HStarIrresolute), phi.is_surjective()],
            || verdict(!closed(psi), || "ψ is not H*-gH*-closed".into()),
        ),
        T3_11 => given(
            &[
                closed(&c),
                psi.check(P::OpenMap),
                psi.check(P::Bijective),
                psi.check(P::HStarGhStarContinuous),
            ],
            || verdict(!closed(phi), || "φ is not H*-gH*-closed".into()),
        ),
        T3_12 => given(
            &[
                closed(&c),
                psi.check(P::ClosedMap),
                psi.is_injective(),
                psi.check(P::HStarGhStarContinuous),
            ],
            || verdict(!closed(phi), || "φ is not H*-gH*-closed".into()),
        ),
        _ => unreachable!("{t} is not a composition statement"),
    }
}

#[derive(Default)]
struct Tally {
    checked: u64,
    skipped: u64,
    failed: u64,
    witnesses: Vec<Witness>,
}

impl Tally {
    fn record(&mut self, outcome: Outcome, limit: usize, witness: impl FnOnce(Failure) -> Witness) {
        match outcome {
            Outcome::Skipped => self.skipped += 1,
            Outcome::Checked(None) => self.checked += 1,
            Outcome::Checked(Some(f)) => {
                self.checked += 1;
                self.failed += 1;
                if self.witnesses.len() < limit {
                    self.witnesses.push(witness(f));
                }
            }
        }
    }

    /// Counts add; witnesses concatenate, sort by instance and keep the first `limit`.
    fn merge(mut self, other: Tally, limit: usize) -> Tally {
        self.checked += other.checked;
        self.skipped += other.skipped;
        self.failed += other.failed;
        self.witnesses.extend(other.witnesses);
        self.witnesses.sort_by_key(|w| w.instance);
        self.witnesses.truncate(limit);
        self
    }
}

fn make_witness(instance: u64, spaces: &[&Ladder], maps: &[&SpaceMap], f: Failure) -> Witness {
    let docs: Vec<SpaceDocument> = spaces
        .iter()
        .map(|l| SpaceDocument::from_space(l.space()))
        .collect();
    let (subset_space, subset) = match f.subset {
        Some((side, a)) => (Some(side), Some(docs[side].labels_of(a))),
        None => (None, None),
    };
    Witness {
        instance,
        spaces: docs,
        maps: maps.iter().map(|m| m.table().to_vec()).collect(),
        subset_space,
        subset,
        note: f.note,
    }
}

fn spaces_in(min_n: usize, max_n: usize) -> Vec<Arc<Ladder>> {
    (min_n..=max_n).flat_map(|n| universe(n).iter().cloned()).collect()
}

/// Runs `t` over the universe described by `bounds`.
pub fn audit_theorem(t: TheoremId, bounds: &Bounds) -> Result<AuditReport, TopologyError> {
    bounds.validate()?;
    let shape = t.shape();
    let limit = bounds.witness_limit;
    let ex_max = bounds.exhaustive_max(shape);
    let exhaustive = if bounds.min_n <= ex_max {
        spaces_in(bounds.min_n, ex_max)
    } else {
        Vec::new()
    };
    let sample_needed = bounds.max_n > ex_max;

    let (tally, ex_count, sampled) = match shape {
        Shape::Space => {
            let tally = exhaustive
                .par_iter()
                .enumerate()
                .map(|(i, l)| {
                    let mut tally = Tally::default();
                    tally.record(check_space(t, l), limit, |f| {
                        make_witness(i as u64, &[l], &[], f)
                    });
                    tally
                })
                .reduce(Tally::default, |a, b| a.merge(b, limit));
            (tally, exhaustive.len() as u64, 0)
        }
        Shape::Map => map_audit(t, bounds, &exhaustive, sample_needed),
        Shape::Composition => composition_audit(t, bounds, &exhaustive, sample_needed),
    };

    Ok(AuditReport {
        schema_version: SCHEMA_VERSION,
        theorem: t,
        statement: t.statement().to_string(),
        bounds: bounds.clone(),
        universe: UniverseSummary {
            shape,
            exhaustive_max_n: ex_max,
            exhaustive_instances: ex_count,
            sampled_instances: sampled,
        },
        instances_checked: tally.checked,
        skipped_precondition: tally.skipped,
        counterexample_count: tally.failed,
        counterexamples: tally.witnesses,
    })
}

fn map_count(x: &Ladder, y: &Ladder) -> u64 {
    (y.n() as u64).pow(x.n() as u32)
}

fn run_map(t: TheoremId, instance: u64, m: &SpaceMap, limit: usize, tally: &mut Tally) {
    tally.record(check_map(t, m), limit, |f| {
        make_witness(instance, &[m.domain(), m.codomain()], &[m], f)
    });
}

/// Picks a space uniformly from `pool`, and draws until the instance has at
/// least one space larger than `ex_max`.
fn draw_spaces(rng: &mut ChaCha8Rng, pool: &[Arc<Ladder>], k: usize, ex_max: usize) -> Vec<usize> {
    loop {
        let picks: Vec<usize> = (0..k).map(|_| rng.gen_range(0..pool.len())).collect();
        if picks.iter().any(|&i| pool[i].n() > ex_max) {
            return picks;
        }
    }
}

fn draw_table(rng: &mut ChaCha8Rng, from: usize, to: usize) -> Vec<usize> {
    (0..from).map(|_| rng.gen_range(0..to)).collect()
}

fn map_audit(
    t: TheoremId,
    bounds: &Bounds,
    spaces: &[Arc<Ladder>],
    sample_needed: bool,
) -> (Tally, u64, u64) {
    let limit = bounds.witness_limit;
    let pairs: Vec<(usize, usize)> = (0..spaces.len())
        .flat_map(|i| (0..spaces.len()).map(move |j| (i, j)))
        .collect();
    let mut offsets = Vec::with_capacity(pairs.len());
    let mut total = 0u64;
    for &(i, j) in &pairs {
        offsets.push(total);
        total += map_count(&spaces[i], &spaces[j]);
    }
    let mut tally = pairs
        .par_iter()
        .zip(offsets.par_iter())
        .map(|(&(i, j), &offset)| {
            let (x, y) = (&spaces[i], &spaces[j]);
            let mut tally = Tally::default();
            for (k, table) in all_tables(x.n(), y.n()).enumerate() {
                let m = SpaceMap::new(x.clone(), y.clone(), table).expect("valid table");
                run_map(t, offset + k as u64, &m, limit, &mut tally);
            }
            tally
        })
        .reduce(Tally::default, |a, b| a.merge(b, limit));

    let mut sampled = 0;
    if sample_needed {
        let ex_max = bounds.exhaustive_max(Shape::Map);
        let pool = spaces_in(bounds.min_n, bounds.max_n);
        let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
        let draws: Vec<(usize, usize, Vec<usize>)> = (0..bounds.samples)
            .map(|_| {
                let picks = draw_spaces(&mut rng, &pool, 2, ex_max);
                let table = draw_table(&mut rng, pool[picks[0]].n(), pool[picks[1]].n());
                (picks[0], picks[1], table)
            })
            .collect();
        let sample_tally = draws
            .par_iter()
            .enumerate()
            .map(|(k, (i, j, table))| {
                let m = SpaceMap::new(pool[*i].clone(), pool[*j].clone(), table.clone())
                    .expect("valid table");
                let mut tally = Tally::default();
                run_map(t, total + k as u64, &m, limit, &mut tally);
                tally
            })
            .reduce(Tally::default, |a, b| a.merge(b, limit));
        tally = tally.merge(sample_tally, limit);
        sampled = bounds.samples as u64;
    }
    (tally, total, sampled)
}

fn run_composition(
    t: TheoremId,
    instance: u64,
    phi: &SpaceMap,
    psi: &SpaceMap,
    limit: usize,
    tally: &mut Tally,
) {
    tally.record(check_composition(t, phi, psi), limit, |f| {
        make_witness(
            instance,
            &[phi.domain(), phi.codomain(), psi.codomain()],
            &[phi, psi],
            f,
        )
    });
}

fn composition_audit(
    t: TheoremId,
    bounds: &Bounds,
    spaces: &[Arc<Ladder>],
    sample_needed: bool,
) -> (Tally, u64, u64) {
    let limit = bounds.witness_limit;
    let s = spaces.len();
    let triples: Vec<(usize, usize, usize)> = (0..s)
        .flat_map(|i| (0..s).flat_map(move |j| (0..s).map(move |k| (i, j, k))))
        .collect();
    let mut offsets = Vec::with_capacity(triples.len());
    let mut total = 0u64;
    for &(i, j, k) in &triples {
        offsets.push(total);
        total += map_count(&spaces[i], &spaces[j]) * map_count(&spaces[j], &spaces[k]);
    }
    let mut tally = triples
        .par_iter()
        .zip(offsets.par_iter())
        .map(|(&(i, j, k), &offset)| {
            let (x, y, z) = (&spaces[i], &spaces[j], &spaces[k]);
            let psis: Vec<SpaceMap> = all_tables(y.n(), z.n())
                .map(|tb| SpaceMap::new(y.clone(), z.clone(), tb).expect("valid table"))
                .collect();
            let mut tally = Tally::default();
            let mut idx = offset;
            for tb in all_tables(x.n(), y.n()) {
                let phi = SpaceMap::new(x.clone(), y.clone(), tb).expect("valid table");
                for psi in &psis {
                    run_composition(t, idx, &phi, psi, limit, &mut tally);
                    idx += 1;
                }
            }
            tally
        })
        .reduce(Tally::default, |a, b| a.merge(b, limit));

    let mut sampled = 0;
    if sample_needed {
        let ex_max = bounds.exhaustive_max(Shape::Composition);
        let pool = spaces_in(bounds.min_n, bounds.max_n);
        let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
        let draws: Vec<(Vec<usize>, Vec<usize>, Vec<usize>)> = (0..bounds.samples)
            .map(|_| {
                let picks = draw_spaces(&mut rng, &pool, 3, ex_max);
                let phi = draw_table(&mut rng, pool[picks[0]].n(), pool[picks[1]].n());
                let psi = draw_table(&mut rng, pool[picks[1]].n(), pool[picks[2]].n());
                (picks, phi, psi)
            })
            .collect();
        let sample_tally = draws
            .par_iter()
            .enumerate()
            .map(|(k, (picks, phi, psi))| {
                let (x, y, z) = (&pool[picks[0]], &pool[picks[1]], &pool[picks[2]]);
                let phi = SpaceMap::new(x.clone(), y.clone(), phi.clone()).expect("valid table");
                let psi = SpaceMap::new(y.clone(), z.clone(), psi.clone()).expect("valid table");
                let mut tally = Tally::default();
                run_composition(t, total + k as u64, &phi, &psi, limit, &mut tally);
                tally
            })
            .reduce(Tally::default, |a, b| a.merge(b, limit));
        tally = tally.merge(sample_tally, limit);
        sampled = bounds.samples as u64;
    }
    (tally, total, sampled)
}

/// Rebuilds the instance in `w` from its serialized form and re-runs the
/// checker. `Ok(true)` means the same failure is reproduced.
pub fn verify_witness(t: TheoremId, w: &Witness) -> Result<bool, WitnessError> {
    let labeled = w
        .spaces
        .iter()
        .map(|d| d.to_space())
        .collect::<Result<Vec<_>, _>>()?;
    let ladders: Vec<Arc<Ladder>> = labeled
        .iter()
        .map(|ls| Ladder::new(ls.space.clone()).map(Arc::new))
        .collect::<Result<_, _>>()
        .map_err(|e| WitnessError::Document(DocumentError::Topology(e)))?;
    let expected_subset = match (w.subset_space, &w.subset) {
        (Some(side), Some(labels)) => {
            let ls = labeled.get(side).ok_or(WitnessError::Shape(t))?;
            Some((side, ls.subset_from_labels(labels)?))
        }
        (None, None) => None,
        _ => return Err(WitnessError::Shape(t)),
    };
    let outcome = match (t.shape(), ladders.len(), w.maps.len()) {
        (Shape::Space, 1, 0) => check_space(t, &ladders[0]),
        (Shape::Map, 2, 1) => {
            let m = SpaceMap::new(ladders[0].clone(), ladders[1].clone(), w.maps[0].clone())?;
            check_map(t, &m)
        }
        (Shape::Composition, 3, 2) => {
            let phi = SpaceMap::new(ladders[0].clone(), ladders[1].clone(), w.maps[0].clone())?;
            let psi = SpaceMap::new(ladders[1].clone(), ladders[2].clone(), w.maps[1].clone())?;
            check_composition(t, &phi, &psi)
        }
        _ => return Err(WitnessError::Shape(t)),
    };
    Ok(match outcome {
        Outcome::Checked(Some(f)) => f.note == w.note && f.subset == expected_subset,
        _ => false,
    })
}
