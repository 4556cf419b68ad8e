//! Functions between finite spaces and the properties they can have.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::error::MapError;
use crate::ladder::{ClosureOpId, FamilyId, Ladder, UnknownTag};
use crate::subset::Subset;

/// A total function from the points of one space to the points of another.
#[derive(Clone)]
pub struct SpaceMap {
    domain: Arc<Ladder>,
    codomain: Arc<Ladder>,
    table: Vec<usize>,
    fibers: Vec<u64>,
}

impl fmt::Debug for SpaceMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SpaceMap")
            .field("domain", self.domain.space())
            .field("codomain", self.codomain.space())
            .field("table", &self.table)
            .finish()
    }
}

impl SpaceMap {
    pub fn new(
        domain: Arc<Ladder>,
        codomain: Arc<Ladder>,
        table: Vec<usize>,
    ) -> Result<Self, MapError> {
        if table.len() != domain.n() {
            return Err(MapError::TableLength {
                expected: domain.n(),
                got: table.len(),
            });
        }
        let mut fibers = vec![0u64; codomain.n()];
        for (point, &image) in table.iter().enumerate() {
            if image >= codomain.n() {
                return Err(MapError::ImageOutOfRange {
                    point,
                    image,
                    codomain: codomain.n(),
                });
            }
            fibers[image] |= 1 << point;
        }
        Ok(Self {
            domain,
            codomain,
            table,
            fibers,
        })
    }

    pub fn identity(space: Arc<Ladder>) -> Self {
        let table = (0..space.n()).collect();
        Self::new(space.clone(), space, table).expect("identity table")
    }

    pub fn constant(domain: Arc<Ladder>, codomain: Arc<Ladder>, value: usize) -> Result<Self, MapError> {
        let table = vec![value; domain.n()];
        Self::new(domain, codomain, table)
    }

    pub fn domain(&self) -> &Arc<Ladder> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<Ladder> {
        &self.codomain
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.table[point]
    }

    pub fn image(&self, a: Subset) -> Subset {
        let bits = a.points().fold(0u64, |acc, p| acc | 1 << self.table[p]);
        Subset::from_bits_unchecked(bits, self.codomain.n())
    }

    pub fn preimage(&self, b: Subset) -> Subset {
        let bits = b.points().fold(0u64, |acc, q| acc | self.fibers[q]);
        Subset::from_bits_unchecked(bits, self.domain.n())
    }

    pub fn is_surjective(&self) -> bool {
        self.fibers.iter().all(|&f| f != 0)
    }

    pub fn is_injective(&self) -> bool {
        self.fibers.iter().all(|f| f.count_ones() <= 1)
    }

    pub fn check(&self, property: MapPropertyId) -> bool {
        check_map_property(self, property)
    }

    /// Preimage of every member of `from` (in the codomain) lies in `to` (in the domain).
    fn preimages_in(&self, from: FamilyId, to: FamilyId) -> bool {
        let target = self.domain.extent(to);
        self.codomain
            .extent(from)
            .iter()
            .all(|v| target.contains(self.preimage(v)))
    }

    /// Image of every member of `from` (in the domain) lies in `to` (in the codomain).
    fn images_in(&self, from: FamilyId, to: FamilyId) -> bool {
        let target = self.codomain.extent(to);
        self.domain
            .extent(from)
            .iter()
            .all(|u| target.contains(self.image(u)))
    }

    /// For every `D` drawn from `subsets` of the codomain and every `Q` in the
    /// domain class `around` with `φ⁻¹(D) ⊆ Q`, some `S` in the codomain class
    /// `lift` has `D ⊆ S` and `φ⁻¹(S) ⊆ Q`.
    pub(crate) fn lifts(
        &self,
        subsets: impl Iterator<Item = Subset>,
        around: FamilyId,
        lift: FamilyId,
    ) -> bool {
        let qs = self.domain.extent(around);
        let ss = self.codomain.extent(lift);
        subsets.into_iter().all(|d| {
            let pre = self.preimage(d);
            qs.iter().filter(|q| pre.is_subset_of(*q)).all(|q| {
                ss.iter()
                    .any(|s| d.is_subset_of(s) && self.preimage(s).is_subset_of(q))
            })
        })
    }

    /// The neighbourhood form of almost H*-irresoluteness: for every point `x`
    /// and every H*-neighbourhood `V` of `φ(x)`, `H*-cl(φ⁻¹(V))` is an
    /// H*-neighbourhood of `x`.
    pub fn almost_hstar_irresolute_by_neighborhoods(&self) -> bool {
        let y = &self.codomain;
        let x = &self.domain;
        y.subsets().all(|v| {
            // points of Y having V as an H*-neighbourhood
            let nbhd_of = y.derived_interior(v, ClosureOpId::HStarCl);
            let pre = self.preimage(v);
            let hull = x.derived_closure(pre, ClosureOpId::HStarCl);
            let core = x.derived_interior(hull, ClosureOpId::HStarCl);
            (0..x.n())
                .filter(|&p| nbhd_of.contains(self.table[p]))
                .all(|p| core.contains(p))
        })
    }
}

macro_rules! map_properties {
    ($($variant:ident => $name:literal),* $(,)?) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum MapPropertyId {
            $($variant),*
        }

        impl MapPropertyId {
            pub const ALL: &'static [MapPropertyId] = &[$(MapPropertyId::$variant),*];

            pub fn name(self) -> &'static str {
                match self {
                    $(MapPropertyId::$variant => $name),*
                }
            }
        }
    };
}

map_properties! {
    Continuous => "continuous",
    ClosedMap => "closed-map",
    OpenMap => "open-map",
    RMap => "R-map",
    CompletelyContinuous => "completely-continuous",
    RcContinuous => "rc-continuous",
    StronglyHStarOpen => "strongly-H*-open",
    StronglyHStarClosed => "strongly-H*-closed",
    AlmostHStarIrresolute => "almost-H*-irresolute",
    HStarClosedMap => "H*-closed-map",
    HStarGClosedMap => "H*g-closed-map",
    GhStarClosedMap => "gH*-closed-map",
    QuasiHStarClosed => "quasi-H*-closed",
    HStarHStarGClosed => "H*-H*g-closed",
    HStarGhStarClosed => "H*-gH*-closed",
    AlmostGhStarClosed => "almost-gH*-closed",
    AlmostHStarGClosed => "almost-H*g-closed",
    HStarGhStarContinuous => "H*-gH*-continuous",
    HStarIrresolute => "H*-irresolute",
    Surjective => "surjective",
    Injective => "injective",
    Bijective => "bijective",
}

impl fmt::Display for MapPropertyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MapPropertyId {
    type Err = UnknownTag;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MapPropertyId::ALL
            .iter()
            .copied()
            .find(|p| p.name() == s.trim())
            .ok_or_else(|| UnknownTag(s.to_string()))
    }
}

impl Serialize for MapPropertyId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

pub fn check_map_property(m: &SpaceMap, property: MapPropertyId) -> bool {
    use FamilyId::*;
    use MapPropertyId::*;
    match property {
        Continuous => m.preimages_in(Open, Open),
        ClosedMap => m.images_in(Closed, Closed),
        OpenMap => m.images_in(Open, Open),
        RMap => m.preimages_in(RegularOpen, RegularOpen),
        CompletelyContinuous => m.preimages_in(Open, RegularOpen),
        RcContinuous => m.preimages_in(RegularClosed, RegularClosed),
        StronglyHStarOpen => m.images_in(HStarOpen, HStarOpen),
        StronglyHStarClosed => m.images_in(HStarClosed, HStarClosed),
        AlmostHStarIrresolute => {
            let x = &m.domain;
            m.codomain.extent(HStarOpen).iter().all(|s| {
                let pre = m.preimage(s);
                let hull = x.derived_closure(pre, ClosureOpId::HStarCl);
                pre.is_subset_of(x.derived_interior(hull, ClosureOpId::HStarCl))
            })
        }
        HStarClosedMap => m.images_in(Closed, HStarClosed),
        HStarGClosedMap => m.images_in(Closed, HStarGClosed),
        GhStarClosedMap => m.images_in(Closed, GhStarClosed),
        QuasiHStarClosed => m.images_in(HStarClosed, Closed),
        HStarHStarGClosed => m.images_in(HStarClosed, HStarGClosed),
        HStarGhStarClosed => m.images_in(HStarClosed, GhStarClosed),
        AlmostGhStarClosed => m.images_in(RegularClosed, GhStarClosed),
        AlmostHStarGClosed => m.images_in(RegularClosed, HStarGClosed),
        HStarGhStarContinuous => m.preimages_in(HStarClosed, GhStarClosed),
        HStarIrresolute => m.preimages_in(HStarOpen, HStarOpen),
        Surjective => m.is_surjective(),
        Injective => m.is_injective(),
        Bijective => m.is_surjective() && m.is_injective(),
    }
}

/// A two-sided statement about a single map, evaluated side by side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Characterization {
    /// strongly H*-closed ⟺ preimage-neighbourhood lifting into H*-open sets.
    StronglyHStarClosedLift,
    /// neighbourhood form ⟺ inclusion form of almost H*-irresoluteness.
    AlmostIrresoluteForms,
    /// almost H*-irresolute ⟺ `φ(H*-cl(Q)) ⊆ H*-cl(φ(Q))` for H*-open `Q`.
    AlmostIrresoluteClosureImage,
    /// almost H*g-closed ⟺ lifting over regular open sets into H*g-open sets (surjections).
    AlmostHStarGClosedLift,
    /// H*-gH*-closed ⟺ lifting over H*-open sets into gH*-open sets.
    HStarGhStarClosedLift,
    /// H*-gH*-continuous ⟺ preimages of H*-open sets are gH*-open.
    HStarGhStarContinuityByOpens,
    /// preimages of H*-open sets are gH*-open ⟺ each such preimage `P` has
    /// every closed `F ⊆ P` inside `H*-int(P)`.
    GhStarOpenPreimageCriterion,
    /// almost gH*-closed ⟺ lifting over regular open sets into gH*-open sets.
    AlmostGhStarClosedLift,
}

impl Characterization {
    pub const ALL: [Characterization; 8] = [
        Characterization::StronglyHStarClosedLift,
        Characterization::AlmostIrresoluteForms,
        Characterization::AlmostIrresoluteClosureImage,
        Characterization::AlmostHStarGClosedLift,
        Characterization::HStarGhStarClosedLift,
        Characterization::HStarGhStarContinuityByOpens,
        Characterization::GhStarOpenPreimageCriterion,
        Characterization::AlmostGhStarClosedLift,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Characterization::StronglyHStarClosedLift => "T2.2",
            Characterization::AlmostIrresoluteForms => "L2.3",
            Characterization::AlmostIrresoluteClosureImage => "T2.4",
            Characterization::AlmostHStarGClosedLift => "T2.7",
            Characterization::HStarGhStarClosedLift => "L3.4",
            Characterization::HStarGhStarContinuityByOpens => "T3.7",
            Characterization::GhStarOpenPreimageCriterion => "L4.2-ambient",
            Characterization::AlmostGhStarClosedLift => "L4.5",
        }
    }
}

/// Both sides of `which`, computed independently.
///
/// Fails with [`MapError::PreconditionUnmet`] when the statement only applies
/// to surjections and `m` is not one.
pub fn characterization_check(
    m: &SpaceMap,
    which: Characterization,
) -> Result<(bool, bool), MapError> {
    use Characterization::*;
    use FamilyId::*;
    let y_all = || m.codomain.subsets();
    Ok(match which {
        StronglyHStarClosedLift => (
            m.check(MapPropertyId::StronglyHStarClosed),
            m.lifts(y_all(), HStarOpen, HStarOpen),
        ),
        AlmostIrresoluteForms => (
            m.almost_hstar_irresolute_by_neighborhoods(),
            m.check(MapPropertyId::AlmostHStarIrresolute),
        ),
        AlmostIrresoluteClosureImage => {
            let x = &m.domain;
            let y = &m.codomain;
            let rhs = x.extent(HStarOpen).iter().all(|q| {
                m.image(x.derived_closure(q, ClosureOpId::HStarCl))
                    .is_subset_of(y.derived_closure(m.image(q), ClosureOpId::HStarCl))
            });
            (m.check(MapPropertyId::AlmostHStarIrresolute), rhs)
        }
        AlmostHStarGClosedLift => {
            if !m.is_surjective() {
                return Err(MapError::PreconditionUnmet("map must be surjective"));
            }
            (
                m.check(MapPropertyId::AlmostHStarGClosed),
                m.lifts(y_all(), RegularOpen, HStarGOpen),
            )
        }
        HStarGhStarClosedLift => (
            m.check(MapPropertyId::HStarGhStarClosed),
            m.lifts(y_all(), HStarOpen, GhStarOpen),
        ),
        HStarGhStarContinuityByOpens => (
            m.check(MapPropertyId::HStarGhStarContinuous),
            m.preimages_in(HStarOpen, GhStarOpen),
        ),
        GhStarOpenPreimageCriterion => {
            let x = &m.domain;
            let preimages: Vec<Subset> = m
                .codomain
                .extent(HStarOpen)
                .iter()
                .map(|s| m.preimage(s))
                .collect();
            (
                preimages.iter().all(|&p| x.contains(GhStarOpen, p)),
                preimages
                    .iter()
                    .all(|&p| closed_subsets_inside_hstar_interior(x, p)),
            )
        }
        AlmostGhStarClosedLift => (
            m.check(MapPropertyId::AlmostGhStarClosed),
            m.lifts(y_all(), RegularOpen, GhStarOpen),
        ),
    })
}

fn closed_subsets_inside_hstar_interior(ladder: &Ladder, a: Subset) -> bool {
    let core = ladder.derived_interior(a, ClosureOpId::HStarCl);
    ladder
        .space()
        .closeds()
        .iter()
        .filter(|f| f.is_subset_of(a))
        .all(|f| f.is_subset_of(core))
}

/// `(A is gH*-open, every closed F ⊆ A lies in H*-int(A))`.
pub fn ghstar_open_characterization(ladder: &Ladder, a: Subset) -> (bool, bool) {
    (
        ladder.contains(FamilyId::GhStarOpen, a),
        closed_subsets_inside_hstar_interior(ladder, a),
    )
}

/// `g ∘ f`: first `f`, then `g`.
pub fn compose(f: &SpaceMap, g: &SpaceMap) -> Result<SpaceMap, MapError> {
    if !Arc::ptr_eq(&f.codomain, &g.domain) && f.codomain.space() != g.domain.space() {
        return Err(MapError::DomainMismatch);
    }
    let table = f.table.iter().map(|&y| g.table[y]).collect();
    SpaceMap::new(f.domain.clone(), g.codomain.clone(), table)
}
