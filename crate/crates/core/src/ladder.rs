//! The ladder of generalized closed-set classes over a finite space.
//!
//! Every class is materialized as an *extent*: the dense [`Family`] of all
//! subsets of the ground set that belong to it. Extents are computed on first
//! use, in dependency order, and cached per [`Ladder`].
//!
//! Most closed-type classes follow one schema: `A` belongs to the class when
//! `op(A) ⊆ U` for every `U` in a guard family with `A ⊆ U`, where `op` is one
//! of the derived closures. [`FamilyId::guard_schema`] records the pair for
//! each such class and [`Ladder::guarded_closed`] evaluates the schema.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::TopologyError;
use crate::space::FiniteSpace;
use crate::subset::{Family, Subset};

/// Largest ground set the ladder will materialize (it enumerates `2^n` subsets).
pub const LADDER_MAX_N: usize = 10;

macro_rules! family_ids {
    ($($variant:ident => $name:literal),* $(,)?) => {
        /// A named class of subsets.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum FamilyId {
            $($variant),*
        }

        impl FamilyId {
            pub const ALL: &'static [FamilyId] = &[$(FamilyId::$variant),*];
            pub const COUNT: usize = Self::ALL.len();

            pub fn name(self) -> &'static str {
                match self {
                    $(FamilyId::$variant => $name),*
                }
            }
        }
    };
}

family_ids! {
    Open => "open",
    Closed => "closed",
    RegularOpen => "regular-open",
    RegularClosed => "regular-closed",
    SemiOpen => "semi-open",
    SemiClosed => "semi-closed",
    WOpen => "w-open",
    WClosed => "w-closed",
    AlphaOpen => "alpha-open",
    AlphaClosed => "alpha-closed",
    AlphaStarSet => "alpha*-set",
    CSet => "C-set",
    HOpen => "h-open",
    HClosed => "h-closed",
    GhOpen => "gh-open",
    GhClosed => "gh-closed",
    RegularHOpen => "regular-h-open",
    RegularHClosed => "regular-h-closed",
    RghOpen => "rgh-open",
    RghClosed => "rgh-closed",
    HcgOpen => "hCg-open",
    HcgClosed => "hCg-closed",
    HStarOpen => "H*-open",
    HStarClosed => "H*-closed",
    GOpen => "g-open",
    GClosed => "g-closed",
    GhStarOpen => "gH*-open",
    GhStarClosed => "gH*-closed",
    HStarGOpen => "H*g-open",
    HStarGClosed => "H*g-closed",
    RegularHStarOpen => "regular-H*-open",
    RegularHStarClosed => "regular-H*-closed",
    RghStarOpen => "rgH*-open",
    RghStarClosed => "rgH*-closed",
}

impl FamilyId {
    #[inline]
    fn index(self) -> usize {
        self as usize
    }

    /// The class of complements. `alpha*-set` and `C-set` are their own pair.
    pub fn dual(self) -> FamilyId {
        use FamilyId::*;
        match self {
            AlphaStarSet | CSet => self,
            // open/closed tags alternate in declaration order
            other => {
                let i = other.index();
                let j = if i % 2 == 0 { i + 1 } else { i - 1 };
                FamilyId::ALL[j]
            }
        }
    }

    pub fn is_self_paired(self) -> bool {
        matches!(self, FamilyId::AlphaStarSet | FamilyId::CSet)
    }

    /// `true` for the `*-closed` tags.
    pub fn is_closed_type(self) -> bool {
        !self.is_self_paired() && self.index() % 2 == 1
    }

    pub fn is_open_type(self) -> bool {
        !self.is_self_paired() && self.index().is_multiple_of(2)
    }

    /// `(op, guard)` for the classes defined by "`op(A) ⊆ U` whenever `A ⊆ U`
    /// and `U` is in `guard`".
    pub fn guard_schema(self) -> Option<(ClosureOpId, FamilyId)> {
        use ClosureOpId as Op;
        use FamilyId::*;
        Some(match self {
            WClosed => (Op::Cl, SemiOpen),
            HClosed => (Op::SCl, WOpen),
            GhClosed => (Op::HCl, HOpen),
            RghClosed => (Op::HCl, RegularHOpen),
            HcgClosed => (Op::HCl, CSet),
            HStarClosed => (Op::HCl, HcgOpen),
            GClosed => (Op::Cl, Open),
            GhStarClosed => (Op::HStarCl, HStarOpen),
            HStarGClosed => (Op::HStarCl, Open),
            RghStarClosed => (Op::HStarCl, RegularHStarOpen),
            _ => return None,
        })
    }

    /// Set for classes whose definition had to be interpreted or completed.
    pub fn definition_note(self) -> Option<&'static str> {
        use FamilyId::*;
        match self {
            HStarGClosed | HStarGOpen => {
                Some("interpreted: the guard U ranges over the open sets")
            }
            RghStarClosed | RghStarOpen => {
                Some("inferred: H*-cl(A) ⊆ U for every regular-H*-open U ⊇ A")
            }
            RegularHClosed => Some("complement of regular-h-open"),
            RghOpen => Some("complement of rgh-closed"),
            _ => None,
        }
    }

    /// The closed-type tags, in declaration order.
    pub fn closed_types() -> impl Iterator<Item = FamilyId> {
        FamilyId::ALL.iter().copied().filter(|f| f.is_closed_type())
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown class `{0}`")]
pub struct UnknownTag(pub String);

impl FromStr for FamilyId {
    type Err = UnknownTag;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().replace('α', "alpha");
        FamilyId::ALL
            .iter()
            .copied()
            .find(|f| f.name() == norm)
            .ok_or_else(|| UnknownTag(s.to_string()))
    }
}

impl Serialize for FamilyId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// A derived closure operator. Each has a dual interior obtained by complementation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClosureOpId {
    Cl,
    SCl,
    HCl,
    HStarCl,
    GhStarCl,
}

impl ClosureOpId {
    pub const ALL: [ClosureOpId; 5] = [
        ClosureOpId::Cl,
        ClosureOpId::SCl,
        ClosureOpId::HCl,
        ClosureOpId::HStarCl,
        ClosureOpId::GhStarCl,
    ];

    /// The class whose members are intersected to form the closure.
    pub fn closed_family(self) -> FamilyId {
        match self {
            ClosureOpId::Cl => FamilyId::Closed,
            ClosureOpId::SCl => FamilyId::SemiClosed,
            ClosureOpId::HCl => FamilyId::HClosed,
            ClosureOpId::HStarCl => FamilyId::HStarClosed,
            ClosureOpId::GhStarCl => FamilyId::GhStarClosed,
        }
    }

    /// The class whose members are united to form the dual interior.
    pub fn open_family(self) -> FamilyId {
        self.closed_family().dual()
    }

    pub fn name(self) -> &'static str {
        match self {
            ClosureOpId::Cl => "cl",
            ClosureOpId::SCl => "s-cl",
            ClosureOpId::HCl => "h-cl",
            ClosureOpId::HStarCl => "H*-cl",
            ClosureOpId::GhStarCl => "gH*-cl",
        }
    }

    pub fn interior_name(self) -> &'static str {
        match self {
            ClosureOpId::Cl => "int",
            ClosureOpId::SCl => "s-int",
            ClosureOpId::HCl => "h-int",
            ClosureOpId::HStarCl => "H*-int",
            ClosureOpId::GhStarCl => "gH*-int",
        }
    }
}

impl fmt::Display for ClosureOpId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClosureOpId {
    type Err = UnknownTag;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClosureOpId::ALL
            .into_iter()
            .find(|op| op.name() == s || op.interior_name() == s)
            .ok_or_else(|| UnknownTag(s.to_string()))
    }
}

/// Membership of one subset in every class of the ladder.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClassVector {
    flags: u64,
}

impl ClassVector {
    #[inline]
    pub fn get(&self, class: FamilyId) -> bool {
        self.flags & (1 << class.index()) != 0
    }

    pub fn iter(&self) -> impl Iterator<Item = (FamilyId, bool)> + '_ {
        FamilyId::ALL.iter().map(move |&f| (f, self.get(f)))
    }

    pub fn members(&self) -> impl Iterator<Item = FamilyId> + '_ {
        FamilyId::ALL.iter().copied().filter(move |&f| self.get(f))
    }
}

impl fmt::Debug for ClassVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.members()).finish()
    }
}

impl Serialize for ClassVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(FamilyId::COUNT))?;
        for (f, v) in self.iter() {
            map.serialize_entry(f.name(), &v)?;
        }
        map.end()
    }
}

/// A finite space together with its lazily computed class extents.
///
/// All caches fill through [`OnceLock`], so a `Ladder` can be shared between
/// threads and queried concurrently.
pub struct Ladder {
    space: FiniteSpace,
    cl: Vec<u64>,
    int: Vec<u64>,
    extents: [OnceLock<Family>; FamilyId::COUNT],
    closures: [OnceLock<Vec<u64>>; 5],
}

impl fmt::Debug for Ladder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ladder").field("space", &self.space).finish()
    }
}

impl Ladder {
    pub fn new(space: FiniteSpace) -> Result<Self, TopologyError> {
        let n = space.n();
        if n > LADDER_MAX_N {
            return Err(TopologyError::GroundTooLarge {
                n,
                max: LADDER_MAX_N,
            });
        }
        let cl = Subset::all(n).map(|a| space.closure(a).bits()).collect();
        let int = Subset::all(n).map(|a| space.interior(a).bits()).collect();
        Ok(Self {
            space,
            cl,
            int,
            extents: std::array::from_fn(|_| OnceLock::new()),
            closures: std::array::from_fn(|_| OnceLock::new()),
        })
    }

    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.space.n()
    }

    #[inline]
    fn subset(&self, bits: u64) -> Subset {
        Subset::from_bits_unchecked(bits, self.n())
    }

    /// Topological closure (table lookup).
    #[inline]
    pub fn cl(&self, a: Subset) -> Subset {
        self.subset(self.cl[a.bits() as usize])
    }

    /// Topological interior (table lookup).
    #[inline]
    pub fn int(&self, a: Subset) -> Subset {
        self.subset(self.int[a.bits() as usize])
    }

    pub fn subsets(&self) -> impl Iterator<Item = Subset> {
        Subset::all(self.n())
    }

    #[inline]
    pub fn contains(&self, class: FamilyId, a: Subset) -> bool {
        self.extent(class).contains(a)
    }

    /// Every subset of the ground set that belongs to `class`.
    pub fn extent(&self, class: FamilyId) -> &Family {
        self.extents[class.index()].get_or_init(|| self.compute_extent(class))
    }

    /// Intersection of the members of `op`'s closed class that contain `a`.
    ///
    /// The result need not itself belong to the class; guarded classes are
    /// not in general closed under intersection.
    #[inline]
    pub fn derived_closure(&self, a: Subset, op: ClosureOpId) -> Subset {
        if op == ClosureOpId::Cl {
            return self.cl(a);
        }
        let table = self.closures[op as usize].get_or_init(|| {
            let fam = self.extent(op.closed_family());
            let full = self.space.full();
            self.subsets()
                .map(|a| {
                    fam.iter()
                        .filter(|f| a.is_subset_of(*f))
                        .fold(full, |acc, f| acc.intersection(f))
                        .bits()
                })
                .collect()
        });
        self.subset(table[a.bits() as usize])
    }

    /// Union of the members of `op`'s open class contained in `a`.
    pub fn derived_interior(&self, a: Subset, op: ClosureOpId) -> Subset {
        if op == ClosureOpId::Cl {
            return self.int(a);
        }
        self.extent(op.open_family())
            .iter()
            .filter(|u| u.is_subset_of(a))
            .fold(self.space.empty(), |acc, u| acc.union(u))
    }

    /// `op(a) ⊆ U` for every `U` in `guard`'s extent with `a ⊆ U`.
    pub fn guarded_closed(&self, a: Subset, op: ClosureOpId, guard: FamilyId) -> bool {
        let c = self.derived_closure(a, op);
        self.extent(guard)
            .iter()
            .filter(|u| a.is_subset_of(*u))
            .all(|u| c.is_subset_of(u))
    }

    pub fn classify(&self, a: Subset) -> ClassVector {
        let mut flags = 0u64;
        for &f in FamilyId::ALL {
            if self.contains(f, a) {
                flags |= 1 << f.index();
            }
        }
        ClassVector { flags }
    }

    fn compute_extent(&self, class: FamilyId) -> Family {
        use FamilyId::*;
        let n = self.n();
        if let Some((op, guard)) = class.guard_schema() {
            return Family::from_predicate(n, |a| self.guarded_closed(a, op, guard));
        }
        if class.is_open_type() && class != RegularHOpen && class != RegularHStarOpen {
            return self.extent(class.dual()).complements();
        }
        match class {
            Closed => {
                let mut fam = Family::empty(n);
                for &f in self.space.closeds() {
                    fam.insert(f);
                }
                fam
            }
            RegularClosed => Family::from_predicate(n, |a| self.cl(self.int(a)) == a),
            SemiClosed => Family::from_predicate(n, |a| self.int(self.cl(a)).is_subset_of(a)),
            AlphaClosed => {
                Family::from_predicate(n, |a| self.cl(self.int(self.cl(a))).is_subset_of(a))
            }
            AlphaStarSet => {
                Family::from_predicate(n, |a| self.int(self.cl(self.int(a))) == self.int(a))
            }
            CSet => {
                let stars = self.extent(AlphaStarSet);
                let mut fam = Family::empty(n);
                for &u in self.space.opens() {
                    for v in stars.iter() {
                        fam.insert(u.intersection(v));
                    }
                }
                fam
            }
            RegularHOpen => self.sandwiched_by_regular_open(ClosureOpId::HCl),
            RegularHStarOpen => self.sandwiched_by_regular_open(ClosureOpId::HStarCl),
            RegularHClosed | RegularHStarClosed => self.extent(class.dual()).complements(),
            _ => unreachable!("{class} is guarded or open-type"),
        }
    }

    /// Subsets `A` with `U ⊆ A ⊆ op(U)` for some regular open `U`.
    fn sandwiched_by_regular_open(&self, op: ClosureOpId) -> Family {
        let mut fam = Family::empty(self.n());
        for u in self.extent(FamilyId::RegularOpen).iter() {
            let top = self.derived_closure(u, op);
            // every A between u and top
            let free = top.difference(u).bits();
            let mut sub = free;
            loop {
                fam.insert(self.subset(u.bits() | sub));
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & free;
            }
        }
        fam
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use FamilyId::*;

    fn set(n: usize, pts: &[usize]) -> Subset {
        Subset::from_points(n, pts.iter().copied())
    }

    #[test]
    fn tags_round_trip_through_names() {
        for &f in FamilyId::ALL {
            assert_eq!(f.name().parse::<FamilyId>().unwrap(), f);
            assert_eq!(f.dual().dual(), f);
        }
        assert_eq!("α*-set".parse::<FamilyId>().unwrap(), AlphaStarSet);
        assert_eq!(HStarClosed.dual(), HStarOpen);
        assert_eq!(RghStarClosed.dual(), RghStarOpen);
        assert!(CSet.is_self_paired() && !CSet.is_closed_type());
        assert_eq!(FamilyId::closed_types().count(), 16);
    }

    #[test]
    fn closed_extent_of_four_point_example() {
        let e1 = Ladder::new(fixtures::e1()).unwrap();
        let got = e1.extent(Closed).to_vec();
        let want = vec![
            set(4, &[]),
            set(4, &[3]),
            set(4, &[2, 3]),
            set(4, &[1, 2, 3]),
            set(4, &[0, 2, 3]),
            set(4, &[0, 1, 2, 3]),
        ];
        let mut want_sorted = want.clone();
        want_sorted.sort();
        assert_eq!(got, want_sorted);
    }

    #[test]
    fn singleton_r_is_h_closed_and_hstar_closed_but_not_closed() {
        let e1 = Ladder::new(fixtures::e1()).unwrap();
        let r = set(4, &[2]);
        assert!(e1.guarded_closed(r, ClosureOpId::SCl, WOpen));
        assert!(e1.contains(HStarClosed, r));
        assert_eq!(e1.derived_closure(r, ClosureOpId::HCl), r);
        assert_eq!(e1.derived_closure(r, ClosureOpId::HStarCl), r);
        let v = e1.classify(r);
        assert!(!v.get(Closed));
        assert!(v.get(HClosed) && v.get(HStarClosed) && v.get(GhStarClosed));
    }

    #[test]
    fn interior_agrees_with_closure_of_complement() {
        let e1 = Ladder::new(fixtures::e1()).unwrap();
        let r = set(4, &[2]);
        let direct = e1.derived_interior(r, ClosureOpId::HStarCl);
        let dual = e1
            .derived_closure(r.complement(), ClosureOpId::HStarCl)
            .complement();
        assert_eq!(direct, dual);
        assert_eq!(direct == r, e1.contains(HStarOpen, r));
    }

    #[test]
    fn indiscrete_semi_open_extent() {
        let l = Ladder::new(FiniteSpace::indiscrete(2)).unwrap();
        assert_eq!(l.extent(SemiOpen).to_vec(), vec![set(2, &[]), set(2, &[0, 1])]);
    }

    #[test]
    fn closed_sets_are_g_closed() {
        let e1 = Ladder::new(fixtures::e1()).unwrap();
        for &f in e1.space().closeds() {
            assert!(e1.guarded_closed(f, ClosureOpId::Cl, Open));
        }
    }

    #[test]
    fn discrete_space_makes_every_closed_flag_true() {
        let l = Ladder::new(FiniteSpace::discrete(3)).unwrap();
        let v = l.classify(set(3, &[0]));
        for f in FamilyId::closed_types() {
            assert!(v.get(f), "{f}");
        }
    }

    #[test]
    fn full_and_empty_sets_are_fixed_by_every_operator() {
        let e2 = Ladder::new(fixtures::e2()).unwrap();
        for op in ClosureOpId::ALL {
            assert_eq!(e2.derived_closure(e2.space().full(), op), e2.space().full());
            assert!(e2.derived_interior(e2.space().empty(), op).is_empty());
            assert!(e2.derived_interior(e2.space().full(), op).is_full());
        }
    }

    #[test]
    fn rejects_spaces_too_large_to_enumerate() {
        let big = FiniteSpace::indiscrete(LADDER_MAX_N + 1);
        assert!(matches!(
            Ladder::new(big),
            Err(TopologyError::GroundTooLarge { .. })
        ));
    }
}
