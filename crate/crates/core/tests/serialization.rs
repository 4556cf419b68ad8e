use hstar::atlas::labeled_universe;
use hstar::report::{parse_space, print_space, LabeledSpace, SpaceDocument};
use proptest::prelude::*;

#[test]
fn every_small_space_round_trips() {
    for n in 1..=3 {
        for ladder in labeled_universe(n) {
            let ls = LabeledSpace::with_default_labels(ladder.space().clone());
            assert_eq!(parse_space(&print_space(&ls)).unwrap(), ls);
        }
    }
}

proptest! {
    #[test]
    fn custom_labels_round_trip(
        index in 0usize..355,
        labels in proptest::collection::btree_set("[a-z]{1,3}", 4),
    ) {
        let labels: Vec<String> = labels.into_iter().collect();
        let ls = LabeledSpace { labels, space: labeled_universe(4)[index].space().clone() };
        let text = print_space(&ls);
        let back = parse_space(&text).unwrap();
        prop_assert_eq!(&back, &ls);
        let doc: SpaceDocument = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(doc, ls.to_document());
    }

    #[test]
    fn subsets_map_through_labels(index in 0usize..29, bits in 0u64..8) {
        let ls = LabeledSpace::with_default_labels(labeled_universe(3)[index].space().clone());
        let a = hstar::Subset::from_bits(bits, 3).unwrap();
        prop_assert_eq!(ls.subset_from_labels(&ls.labels_of(a)).unwrap(), a);
    }
}

#[test]
fn opens_are_written_in_open_family_order() {
    let ls = LabeledSpace::with_default_labels(hstar::fixtures::e1());
    let doc = ls.to_document();
    assert_eq!(doc.points, ["p", "q", "r", "s"]);
    let shown: Vec<String> = doc.opens.iter().map(|o| o.concat()).collect();
    assert_eq!(shown, ["", "p", "q", "pq", "pqr", "pqrs"]);
}
