//! Validated finite topological spaces with closure, interior and regularity.

use crate::error::TopologyError;
use crate::subset::{Subset, WORD_BITS};

/// A finite topological space: a ground set `{0, .., n-1}` and its open sets.
///
/// The open family is stored sorted and duplicate-free, so two spaces are
/// equal exactly when they carry the same topology on the same ground set.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteSpace {
    n: usize,
    opens: Vec<Subset>,
    closeds: Vec<Subset>,
}

impl std::fmt::Debug for FiniteSpace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteSpace(n={}, opens=", self.n)?;
        f.debug_list().entries(&self.opens).finish()?;
        f.write_str(")")
    }
}

/// Checks that `family` is a topology on `n` points and builds the space.
///
/// The family may contain duplicates and be in any order.
pub fn validate_topology(n: usize, family: &[Subset]) -> Result<FiniteSpace, TopologyError> {
    if n == 0 {
        return Err(TopologyError::EmptyGround);
    }
    if n > WORD_BITS {
        return Err(TopologyError::GroundTooLarge {
            n,
            max: WORD_BITS,
        });
    }
    if let Some(bad) = family.iter().find(|s| s.ground_size() != n) {
        return Err(TopologyError::SubsetOutOfRange {
            subset: bad.bits(),
            n,
        });
    }
    let mut opens = family.to_vec();
    opens.sort_unstable();
    opens.dedup();
    let has = |s: Subset| opens.binary_search(&s).is_ok();
    if !has(Subset::empty(n)) || !has(Subset::full(n)) {
        return Err(TopologyError::MissingEmptyOrFull);
    }
    for (i, &a) in opens.iter().enumerate() {
        for &b in &opens[i + 1..] {
            if !has(a.union(b)) {
                return Err(TopologyError::NotClosedUnderUnion(a, b));
            }
            if !has(a.intersection(b)) {
                return Err(TopologyError::NotClosedUnderIntersection(a, b));
            }
        }
    }
    Ok(FiniteSpace::from_sorted_opens(n, opens))
}

impl FiniteSpace {
    /// Caller guarantees `opens` is a sorted, duplicate-free topology on `n` points.
    pub(crate) fn from_sorted_opens(n: usize, opens: Vec<Subset>) -> Self {
        debug_assert!(opens.windows(2).all(|w| w[0] < w[1]));
        let mut closeds: Vec<Subset> = opens.iter().map(|s| s.complement()).collect();
        closeds.sort_unstable();
        Self { n, opens, closeds }
    }

    /// `{∅, X}`.
    pub fn indiscrete(n: usize) -> Self {
        validate_topology(n, &[Subset::empty(n), Subset::full(n)]).expect("indiscrete topology")
    }

    /// Every subset open. Limited to ground sets small enough to enumerate.
    pub fn discrete(n: usize) -> Self {
        Self::from_sorted_opens(n, Subset::all(n).collect())
    }

    /// The two-point space with opens `{∅, {p}, X}`.
    pub fn sierpinski() -> Self {
        validate_topology(
            2,
            &[Subset::empty(2), Subset::from_points(2, [0]), Subset::full(2)],
        )
        .expect("sierpinski topology")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn full(&self) -> Subset {
        Subset::full(self.n)
    }

    #[inline]
    pub fn empty(&self) -> Subset {
        Subset::empty(self.n)
    }

    pub fn opens(&self) -> &[Subset] {
        &self.opens
    }

    /// Complements of the opens, sorted.
    pub fn closeds(&self) -> &[Subset] {
        &self.closeds
    }

    pub fn is_open(&self, a: Subset) -> bool {
        self.opens.binary_search(&a).is_ok()
    }

    pub fn is_closed(&self, a: Subset) -> bool {
        self.closeds.binary_search(&a).is_ok()
    }

    /// Smallest closed superset of `a`.
    pub fn closure(&self, a: Subset) -> Subset {
        self.closeds
            .iter()
            .filter(|f| a.is_subset_of(**f))
            .fold(self.full(), |acc, &f| acc.intersection(f))
    }

    /// Largest open subset of `a`.
    pub fn interior(&self, a: Subset) -> Subset {
        self.opens
            .iter()
            .filter(|u| u.is_subset_of(a))
            .fold(self.empty(), |acc, &u| acc.union(u))
    }

    pub fn regularity(&self, a: Subset) -> Regularity {
        Regularity {
            is_regular_open: self.interior(self.closure(a)) == a,
            is_regular_closed: self.closure(self.interior(a)) == a,
        }
    }

    /// Smallest open set containing `point`.
    pub fn minimal_neighborhood(&self, point: usize) -> Subset {
        self.opens
            .iter()
            .filter(|u| u.contains(point))
            .fold(self.full(), |acc, &u| acc.intersection(u))
    }

    /// The same topology with point `i` renamed to `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> FiniteSpace {
        assert_eq!(perm.len(), self.n);
        let mut opens: Vec<Subset> = self.opens.iter().map(|s| s.permute(perm)).collect();
        opens.sort_unstable();
        Self::from_sorted_opens(self.n, opens)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Regularity {
    pub is_regular_open: bool,
    pub is_regular_closed: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(n: usize, pts: &[usize]) -> Subset {
        Subset::from_points(n, pts.iter().copied())
    }

    #[test]
    fn accepts_the_four_point_example() {
        let e1 = fixtures::e1();
        assert_eq!(e1.n(), 4);
        assert_eq!(e1.opens().len(), 6);
    }

    #[test]
    fn one_point_space_is_valid() {
        let s = validate_topology(1, &[Subset::empty(1), Subset::full(1)]).unwrap();
        assert_eq!(s.opens().len(), 2);
    }

    #[test]
    fn duplicates_and_order_are_normalized() {
        let a = validate_topology(2, &[Subset::full(2), Subset::empty(2), Subset::full(2)]).unwrap();
        assert_eq!(a, FiniteSpace::indiscrete(2));
    }

    #[test]
    fn rejects_missing_full_set() {
        let err = validate_topology(2, &[Subset::empty(2), set(2, &[0])]).unwrap_err();
        assert_eq!(err, TopologyError::MissingEmptyOrFull);
    }

    #[test]
    fn reports_first_union_witness() {
        let err = validate_topology(
            3,
            &[Subset::empty(3), set(3, &[0]), set(3, &[1]), Subset::full(3)],
        )
        .unwrap_err();
        assert_eq!(
            err,
            TopologyError::NotClosedUnderUnion(set(3, &[0]), set(3, &[1]))
        );
    }

    #[test]
    fn reports_intersection_witness() {
        let err = validate_topology(
            3,
            &[Subset::empty(3), set(3, &[0, 1]), set(3, &[1, 2]), Subset::full(3)],
        )
        .unwrap_err();
        assert_eq!(
            err,
            TopologyError::NotClosedUnderIntersection(set(3, &[0, 1]), set(3, &[1, 2]))
        );
    }

    #[test]
    fn rejects_degenerate_grounds() {
        assert_eq!(validate_topology(0, &[]).unwrap_err(), TopologyError::EmptyGround);
        assert!(matches!(
            validate_topology(65, &[]),
            Err(TopologyError::GroundTooLarge { .. })
        ));
        assert!(matches!(
            validate_topology(2, &[Subset::empty(3)]),
            Err(TopologyError::SubsetOutOfRange { .. })
        ));
    }

    #[test]
    fn closure_and_interior_on_the_four_point_example() {
        let e1 = fixtures::e1();
        // closed supersets of {r}: {r,s}, {q,r,s}, {p,r,s}, X
        assert_eq!(e1.closure(set(4, &[2])), set(4, &[2, 3]));
        assert_eq!(e1.interior(set(4, &[0, 1, 3])), set(4, &[0, 1]));
        assert_eq!(e1.closure(Subset::empty(4)), Subset::empty(4));
        assert_eq!(e1.interior(Subset::full(4)), Subset::full(4));
    }

    #[test]
    fn indiscrete_closure_and_interior() {
        let s = FiniteSpace::indiscrete(3);
        assert_eq!(s.closure(set(3, &[0])), Subset::full(3));
        assert_eq!(s.interior(set(3, &[0, 2])), Subset::empty(3));
    }

    #[test]
    fn regularity_examples() {
        let e1 = fixtures::e1();
        let p = e1.regularity(set(4, &[0]));
        assert!(p.is_regular_open);
        assert!(!p.is_regular_closed);
        assert!(!e1.regularity(set(4, &[0, 1, 2])).is_regular_open);
        let empty = e1.regularity(Subset::empty(4));
        assert!(empty.is_regular_open && empty.is_regular_closed);
    }

    #[test]
    fn large_ground_closure_works_without_enumeration() {
        let n = 64;
        let half = Subset::from_bits(u32::MAX as u64, n).unwrap();
        let s = validate_topology(n, &[Subset::empty(n), half, Subset::full(n)]).unwrap();
        assert_eq!(s.closure(Subset::from_points(n, [40])), half.complement());
        assert_eq!(s.interior(Subset::from_points(n, [0, 1])), Subset::empty(n));
    }
}
