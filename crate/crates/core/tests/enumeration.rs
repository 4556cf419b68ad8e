use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use hstar::atlas::{canonical_form, enumerate_maps, enumerate_topologies, permutations};
use hstar::{FiniteSpace, Ladder, MapPropertyId, Subset, TopologyError};

/// Every family containing ∅ and X that is closed under ∪ and ∩, found by
/// trying all of them. Families are returned as sorted bit lists.
fn naive_topologies(n: usize) -> BTreeSet<Vec<u64>> {
    let full = (1u64 << n) - 1;
    let middle: Vec<u64> = (1..full).collect();
    let mut out = BTreeSet::new();
    for choice in 0u64..1 << middle.len() {
        let mut fam = vec![0, full];
        fam.extend((0..middle.len()).filter(|i| choice >> i & 1 == 1).map(|i| middle[i]));
        let set: BTreeSet<u64> = fam.iter().copied().collect();
        let closed = fam
            .iter()
            .all(|a| fam.iter().all(|b| set.contains(&(a | b)) && set.contains(&(a & b))));
        if closed {
            out.insert(set.into_iter().collect());
        }
    }
    out
}

fn as_bits(space: &FiniteSpace) -> Vec<u64> {
    space.opens().iter().map(|s| s.bits()).collect()
}

#[test]
fn generator_matches_brute_force_up_to_four_points() {
    for (n, want) in [(1, 1), (2, 4), (3, 29), (4, 355)] {
        let naive = naive_topologies(n);
        assert_eq!(naive.len(), want);
        let got: BTreeSet<Vec<u64>> = enumerate_topologies(n, false)
            .unwrap()
            .iter()
            .map(as_bits)
            .collect();
        assert_eq!(got, naive, "n = {n}");
    }
}

/// Topologies on five points from their specialization preorders: every
/// reflexive transitive relation, with the up-closed sets as opens.
#[test]
fn five_points_agree_with_the_preorder_route() {
    let n = 5;
    let off_diagonal: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut from_preorders = BTreeSet::new();
    for choice in 0u32..1 << off_diagonal.len() {
        let mut le = [[false; 5]; 5];
        for (i, row) in le.iter_mut().enumerate() {
            row[i] = true;
        }
        for (k, &(i, j)) in off_diagonal.iter().enumerate() {
            le[i][j] = choice >> k & 1 == 1;
        }
        let transitive = (0..n).all(|i| {
            (0..n).all(|j| !le[i][j] || (0..n).all(|k| !le[j][k] || le[i][k]))
        });
        if !transitive {
            continue;
        }
        let opens: Vec<u64> = (0u64..1 << n)
            .filter(|&u| {
                (0..n).all(|i| u >> i & 1 == 0 || (0..n).all(|j| !le[i][j] || u >> j & 1 == 1))
            })
            .collect();
        from_preorders.insert(opens);
    }
    let got: BTreeSet<Vec<u64>> = enumerate_topologies(n, false)
        .unwrap()
        .iter()
        .map(as_bits)
        .collect();
    assert_eq!(from_preorders.len(), 6942);
    assert_eq!(got, from_preorders);
}

/// Homeomorphism classes by brute force: the orbit of each space under every
/// relabelling, keyed by its least member.
fn orbit_classes(n: usize) -> HashMap<Vec<u64>, Vec<u64>> {
    let perms = permutations(n);
    enumerate_topologies(n, false)
        .unwrap()
        .iter()
        .map(|s| {
            let least = perms.iter().map(|p| as_bits(&s.relabel(p))).min().unwrap();
            (as_bits(s), least)
        })
        .collect()
}

#[test]
fn canonical_forms_partition_like_orbits() {
    for (n, classes) in [(1, 1), (2, 3), (3, 9), (4, 33)] {
        let orbit = orbit_classes(n);
        let spaces = enumerate_topologies(n, false).unwrap();
        let mut pairs = HashMap::new();
        for s in &spaces {
            let key = orbit[&as_bits(s)].clone();
            let form = canonical_form(s);
            // same orbit ⟺ same form
            assert_eq!(*pairs.entry(form).or_insert_with(|| key.clone()), key);
        }
        assert_eq!(pairs.len(), classes, "n = {n}");
        assert_eq!(enumerate_topologies(n, true).unwrap().len(), classes);
    }
}

#[test]
fn five_point_homeomorphism_classes() {
    let distinct: BTreeSet<Vec<u64>> = orbit_classes(5).into_values().collect();
    assert_eq!(distinct.len(), 139);
    assert_eq!(enumerate_topologies(5, true).unwrap().len(), 139);
}

#[test]
fn canonical_form_ignores_labels_up_to_three_points() {
    for n in 1..=3 {
        for s in enumerate_topologies(n, false).unwrap() {
            let form = canonical_form(&s);
            for p in permutations(n) {
                assert_eq!(canonical_form(&s.relabel(&p)), form);
            }
        }
    }
}

#[test]
fn swapping_p_and_q_in_the_four_point_example() {
    let e1 = hstar::fixtures::e1();
    assert_eq!(canonical_form(&e1.relabel(&[1, 0, 2, 3])), canonical_form(&e1));
    assert_ne!(
        canonical_form(&FiniteSpace::discrete(2)),
        canonical_form(&FiniteSpace::indiscrete(2))
    );
}

#[test]
fn ground_size_limits() {
    assert!(matches!(enumerate_topologies(0, false), Err(TopologyError::EmptyGround)));
    assert!(matches!(
        enumerate_topologies(7, false),
        Err(TopologyError::GroundTooLarge { n: 7, max: 6 })
    ));
}

#[test]
fn six_points() {
    assert_eq!(enumerate_topologies(6, false).unwrap().len(), 209_527);
}

#[test]
fn map_enumeration() {
    let s = Arc::new(Ladder::new(FiniteSpace::sierpinski()).unwrap());
    assert_eq!(enumerate_maps(&s, &s, &[]).count(), 4);
    let continuous: Vec<Vec<usize>> = enumerate_maps(&s, &s, &[MapPropertyId::Continuous])
        .map(|m| m.table().to_vec())
        .collect();
    // two constants and the identity; the swap pulls {a} back to {b}
    assert_eq!(continuous, [vec![0, 0], vec![0, 1], vec![1, 1]]);

    // independent check of each table against the preimage condition
    let opens = s.space().opens();
    for table in [[0usize, 0], [0, 1], [1, 0], [1, 1]] {
        let pre = |u: &Subset| Subset::from_points(2, (0..2).filter(|&i| u.contains(table[i])));
        let ok = opens.iter().all(|u| opens.contains(&pre(u)));
        assert_eq!(ok, continuous.contains(&table.to_vec()));
    }

    let one = Arc::new(Ladder::new(FiniteSpace::discrete(1)).unwrap());
    assert_eq!(enumerate_maps(&one, &s, &[MapPropertyId::Surjective]).count(), 0);
}
