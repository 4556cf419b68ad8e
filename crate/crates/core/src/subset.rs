//! Fixed-width subsets of a finite ground set, and dense families of them.

use std::fmt;

/// Largest ground set a [`Subset`] can describe.
pub const WORD_BITS: usize = u64::BITS as usize;

/// A subset of the ground set `{0, .., n-1}`, stored as a bit pattern.
///
/// Bit `i` is set iff point `i` belongs to the subset. Bits at or above the
/// ground size are always zero. Subsets order by the unsigned value of their
/// bit pattern, which is the enumeration order used everywhere in the crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset {
    bits: u64,
    ground: u8,
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= WORD_BITS {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Subset {
    pub fn empty(n: usize) -> Self {
        assert!(n <= WORD_BITS, "ground size {n} exceeds {WORD_BITS}");
        Self {
            bits: 0,
            ground: n as u8,
        }
    }

    pub fn full(n: usize) -> Self {
        assert!(n <= WORD_BITS, "ground size {n} exceeds {WORD_BITS}");
        Self {
            bits: full_mask(n),
            ground: n as u8,
        }
    }

    /// Returns `None` when `bits` has a point outside the ground set.
    pub fn from_bits(bits: u64, n: usize) -> Option<Self> {
        if n > WORD_BITS || bits & !full_mask(n) != 0 {
            return None;
        }
        Some(Self {
            bits,
            ground: n as u8,
        })
    }

    /// Panics if a point is outside `0..n`.
    pub fn from_points<I: IntoIterator<Item = usize>>(n: usize, points: I) -> Self {
        let mut s = Self::empty(n);
        for p in points {
            assert!(p < n, "point {p} outside ground set of size {n}");
            s.bits |= 1 << p;
        }
        s
    }

    pub(crate) fn from_bits_unchecked(bits: u64, n: usize) -> Self {
        debug_assert!(bits & !full_mask(n) == 0);
        Self {
            bits,
            ground: n as u8,
        }
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn ground_size(self) -> usize {
        self.ground as usize
    }

    #[inline]
    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn is_full(self) -> bool {
        self.bits == full_mask(self.ground_size())
    }

    #[inline]
    pub fn contains(self, point: usize) -> bool {
        point < self.ground_size() && self.bits & (1 << point) != 0
    }

    #[inline]
    pub fn is_subset_of(self, other: Subset) -> bool {
        debug_assert_eq!(self.ground, other.ground);
        self.bits & !other.bits == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: Subset) -> bool {
        debug_assert_eq!(self.ground, other.ground);
        self.bits & other.bits == 0
    }

    #[inline]
    pub fn union(self, other: Subset) -> Subset {
        debug_assert_eq!(self.ground, other.ground);
        Subset {
            bits: self.bits | other.bits,
            ..self
        }
    }

    #[inline]
    pub fn intersection(self, other: Subset) -> Subset {
        debug_assert_eq!(self.ground, other.ground);
        Subset {
            bits: self.bits & other.bits,
            ..self
        }
    }

    #[inline]
    pub fn difference(self, other: Subset) -> Subset {
        debug_assert_eq!(self.ground, other.ground);
        Subset {
            bits: self.bits & !other.bits,
            ..self
        }
    }

    #[inline]
    pub fn complement(self) -> Subset {
        Subset {
            bits: !self.bits & full_mask(self.ground_size()),
            ..self
        }
    }

    /// Points of the subset in increasing order.
    pub fn points(self) -> impl Iterator<Item = usize> {
        let mut rest = self.bits;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let p = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(p)
        })
    }

    /// All `2^n` subsets of an `n`-point ground set, in enumeration order.
    pub fn all(n: usize) -> impl Iterator<Item = Subset> {
        assert!(n < WORD_BITS, "cannot enumerate subsets of a {n}-point set");
        (0..1u64 << n).map(move |bits| Subset::from_bits_unchecked(bits, n))
    }

    /// Relabels point `i` as `perm[i]`.
    pub fn permute(self, perm: &[usize]) -> Subset {
        debug_assert_eq!(perm.len(), self.ground_size());
        Subset::from_points(self.ground_size(), self.points().map(|p| perm[p]))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.points().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(&crate::point_label(p))?;
        }
        f.write_str("}")
    }
}

/// A dense set of subsets of an `n`-point ground set: one bit per subset,
/// indexed by the subset's bit pattern.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Family {
    ground: u8,
    words: Vec<u64>,
}

impl Family {
    pub fn empty(n: usize) -> Self {
        assert!(n < 32, "dense families over {n} points are not supported");
        let slots = 1usize << n;
        Self {
            ground: n as u8,
            words: vec![0; slots.div_ceil(WORD_BITS)],
        }
    }

    pub fn from_predicate(n: usize, mut pred: impl FnMut(Subset) -> bool) -> Self {
        let mut fam = Self::empty(n);
        for s in Subset::all(n) {
            if pred(s) {
                fam.insert(s);
            }
        }
        fam
    }

    #[inline]
    pub fn ground_size(&self) -> usize {
        self.ground as usize
    }

    #[inline]
    pub fn insert(&mut self, s: Subset) {
        debug_assert_eq!(s.ground_size(), self.ground_size());
        let idx = s.bits() as usize;
        self.words[idx / WORD_BITS] |= 1 << (idx % WORD_BITS);
    }

    #[inline]
    pub fn contains(&self, s: Subset) -> bool {
        if s.ground_size() != self.ground_size() {
            return false;
        }
        let idx = s.bits() as usize;
        self.words[idx / WORD_BITS] & (1 << (idx % WORD_BITS)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Members in increasing bit-pattern order.
    pub fn iter(&self) -> impl Iterator<Item = Subset> + '_ {
        let n = self.ground_size();
        self.words.iter().enumerate().flat_map(move |(wi, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(Subset::from_bits_unchecked((wi * WORD_BITS + b) as u64, n))
            })
        })
    }

    /// The family of complements of the members.
    pub fn complements(&self) -> Family {
        let mut out = Family::empty(self.ground_size());
        for s in self.iter() {
            out.insert(s.complement());
        }
        out
    }

    pub fn is_subfamily_of(&self, other: &Family) -> bool {
        self.ground == other.ground
            && self
                .words
                .iter()
                .zip(&other.words)
                .all(|(a, b)| a & !b == 0)
    }

    pub fn to_vec(&self) -> Vec<Subset> {
        self.iter().collect()
    }
}

impl fmt::Debug for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
