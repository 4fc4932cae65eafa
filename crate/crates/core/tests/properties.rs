use proptest::prelude::*;

use num_bigint::BigInt;
use num_rational::BigRational;
use split_avoid::enumerate::{k_closed, Exhaustive};
use split_avoid::perm::Permutation;
use split_avoid::series::Series;

fn permutation(max: usize) -> impl Strategy<Value = Permutation> {
    (0..=max).prop_flat_map(|n| {
        Just((1..=n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::new(v).unwrap())
    })
}

proptest! {
    #[test]
    fn text_forms_parse_back(w in permutation(14)) {
        prop_assert_eq!(w.to_string().parse::<Permutation>().unwrap(), w.clone());
        prop_assert_eq!(w.to_list_string().parse::<Permutation>().unwrap(), w);
    }

    #[test]
    fn rotation_is_an_involution(w in permutation(12)) {
        let n = w.len();
        let rot = w.rotate180();
        for k in 1..=n {
            prop_assert_eq!(rot.get(k).unwrap(), n + 1 - w.get(n + 1 - k).unwrap());
        }
        prop_assert_eq!(rot.rotate180(), w);
    }

    #[test]
    fn insert_then_remove_max(w in permutation(10), seed in any::<prop::sample::Index>()) {
        let pos = seed.index(w.len() + 1) + 1;
        let bigger = w.insert_max(pos).unwrap();
        prop_assert_eq!(bigger.get(pos), Some(w.len() + 1));
        prop_assert_eq!(bigger.remove_max().unwrap(), w);
    }

    #[test]
    fn rank_is_monotone(w in permutation(10)) {
        let n = w.len();
        for i in 0..=n {
            for j in 0..=n {
                let here = w.rank(i, j).unwrap();
                if i < n { prop_assert!(w.rank(i + 1, j).unwrap() >= here); }
                if j < n { prop_assert!(w.rank(i, j + 1).unwrap() >= here); }
            }
        }
        prop_assert_eq!(w.rank(n, n).unwrap(), n);
    }

    #[test]
    fn left_and_right_partition_values(w in permutation(10), seed in any::<prop::sample::Index>()) {
        let r = seed.index(w.len() + 1);
        let left = w.left_set(r).unwrap();
        let right = w.right_set(r).unwrap();
        prop_assert_eq!(left.len(), r);
        prop_assert!(left.is_disjoint(&right));
        prop_assert_eq!(left.union(&right).count(), w.len());
    }

    #[test]
    fn boundary_positions_always_avoid(w in permutation(10)) {
        prop_assert!(w.in_k(0).unwrap());
        prop_assert!(w.in_k(w.len()).unwrap());
    }

    #[test]
    fn series_dump_round_trips(nx in 0usize..4, ny in 0usize..4, seed in proptest::collection::vec((-99i64..99, 1i64..50), 16)) {
        let s = Series::from_fn(nx, ny, |r, c| {
            let (n, d) = seed[r * 4 + c];
            BigRational::new(n.into(), d.into())
        });
        let back = Series::from_json(&s.to_json()).unwrap();
        prop_assert_eq!((back.nx(), back.ny()), (nx, ny));
        prop_assert!(back == s);
    }
}

#[test]
fn rotation_maps_k_sets_onto_each_other() {
    let search = Exhaustive::default();
    for n in 0..=7 {
        for r in 0..=n {
            let mut image: Vec<Permutation> = search.enumerate_k(r, n).unwrap().iter().map(Permutation::rotate180).collect();
            image.sort();
            assert_eq!(image, search.enumerate_k(n - r, n).unwrap(), "r={r} n={n}");
        }
    }
}

#[test]
fn lexicographic_enumeration_order() {
    let search = Exhaustive::default();
    for n in 0..=6 {
        for r in 0..=n {
            let list = search.enumerate_k(r, n).unwrap();
            assert!(list.windows(2).all(|p| p[0] < p[1]));
            assert_eq!(BigInt::from(list.len()), k_closed(r, n).unwrap());
        }
    }
}

#[test]
fn parallel_count_matches_sequential_enumeration() {
    let search = Exhaustive::default();
    for r in 0..=9 {
        let sequential = search.all(9).unwrap().filter(|w| w.in_k(r).unwrap()).count();
        assert_eq!(search.count(r, 9).unwrap(), BigInt::from(sequential));
    }
}
