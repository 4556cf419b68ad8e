//! Normality variants and the equivalent forms of H*-normality.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::ladder::{ClosureOpId, FamilyId, Ladder, UnknownTag};
use crate::subset::{Family, Subset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum NormalityVariant {
    #[serde(rename = "normal")]
    Normal,
    #[serde(rename = "g-normal")]
    GNormal,
    #[serde(rename = "H*-normal")]
    HStarNormal,
}

impl NormalityVariant {
    pub const ALL: [NormalityVariant; 3] = [
        NormalityVariant::Normal,
        NormalityVariant::GNormal,
        NormalityVariant::HStarNormal,
    ];

    /// The family separating sets are drawn from.
    pub fn separating_family(self) -> FamilyId {
        match self {
            NormalityVariant::Normal => FamilyId::Open,
            NormalityVariant::GNormal => FamilyId::GOpen,
            NormalityVariant::HStarNormal => FamilyId::HStarOpen,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            NormalityVariant::Normal => "normal",
            NormalityVariant::GNormal => "g-normal",
            NormalityVariant::HStarNormal => "H*-normal",
        }
    }
}

impl fmt::Display for NormalityVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NormalityVariant {
    type Err = UnknownTag;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NormalityVariant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| UnknownTag(s.to_string()))
    }
}

/// Every pair of disjoint closed sets lies inside a pair of disjoint members
/// of the variant's separating family.
pub fn is_normal_variant(ladder: &Ladder, variant: NormalityVariant) -> bool {
    first_inseparable_pair(ladder, variant).is_none()
}

/// The first disjoint closed pair `(A, B)` that the variant's family cannot
/// separate, in enumeration order.
pub fn first_inseparable_pair(
    ladder: &Ladder,
    variant: NormalityVariant,
) -> Option<(Subset, Subset)> {
    let family = ladder.extent(variant.separating_family());
    let members = family.to_vec();
    let n = ladder.n();
    // For each member U: the family members disjoint from U.
    let disjoint_from: Vec<Family> = members
        .iter()
        .map(|&u| {
            let mut d = Family::empty(n);
            for &v in &members {
                if u.is_disjoint(v) {
                    d.insert(v);
                }
            }
            d
        })
        .collect();
    let closeds = ladder.space().closeds();
    for (i, &a) in closeds.iter().enumerate() {
        let around_a: Vec<usize> = (0..members.len())
            .filter(|&k| a.is_subset_of(members[k]))
            .collect();
        for &b in &closeds[i..] {
            if !a.is_disjoint(b) {
                continue;
            }
            let separated = around_a.iter().any(|&k| {
                disjoint_from[k]
                    .iter()
                    .any(|v| b.is_subset_of(v))
            });
            if !separated {
                return Some((a, b));
            }
        }
    }
    None
}

/// Which of the three equivalent statements of H*-normality to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum HStarForm {
    /// Disjoint closed sets have disjoint H*-open neighbourhoods.
    Separation = 1,
    /// Open covers `Q ∪ R = X` shrink to H*-closed covers `D ∪ E = X`, `D ⊆ Q`, `E ⊆ R`.
    ClosedShrinking = 2,
    /// Closed `J ⊆` open `K` admits H*-open `Q` with `J ⊆ Q ⊆ H*-cl(Q) ⊆ K`.
    Interpolation = 3,
}

impl HStarForm {
    pub const ALL: [HStarForm; 3] = [
        HStarForm::Separation,
        HStarForm::ClosedShrinking,
        HStarForm::Interpolation,
    ];

    pub fn from_number(k: u8) -> Option<Self> {
        HStarForm::ALL.into_iter().find(|f| *f as u8 == k)
    }
}

pub fn hstar_normal_characterization(ladder: &Ladder, form: HStarForm) -> bool {
    match form {
        HStarForm::Separation => is_normal_variant(ladder, NormalityVariant::HStarNormal),
        HStarForm::ClosedShrinking => closed_shrinking(ladder),
        HStarForm::Interpolation => interpolation(ladder),
    }
}

fn closed_shrinking(ladder: &Ladder) -> bool {
    let hstar_closed = ladder.extent(FamilyId::HStarClosed).to_vec();
    let opens = ladder.space().opens();
    let full = ladder.space().full();
    opens.iter().enumerate().all(|(i, &q)| {
        opens[i..].iter().all(|&r| {
            if q.union(r) != full {
                return true;
            }
            let inside_r: Vec<Subset> = hstar_closed
                .iter()
                .copied()
                .filter(|e| e.is_subset_of(r))
                .collect();
            hstar_closed
                .iter()
                .filter(|d| d.is_subset_of(q))
                .any(|&d| inside_r.iter().any(|&e| d.union(e) == full))
        })
    })
}

fn interpolation(ladder: &Ladder) -> bool {
    let hstar_open = ladder.extent(FamilyId::HStarOpen).to_vec();
    let space = ladder.space();
    space.closeds().iter().all(|&j| {
        space.opens().iter().filter(|k| j.is_subset_of(**k)).all(|&k| {
            hstar_open.iter().any(|&q| {
                j.is_subset_of(q)
                    && ladder
                        .derived_closure(q, ClosureOpId::HStarCl)
                        .is_subset_of(k)
            })
        })
    })
}
