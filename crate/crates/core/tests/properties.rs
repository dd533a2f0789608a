use proptest::prelude::*;

use isoblock::partitions::{e_core_and_quotient, from_quotient, is_e_core, Partition};
use isoblock::symbols::{d_cocore, d_core, d_coweight, d_hooks, d_weight, symbol_from_bipartition, Symbol};

fn partition(max_len: usize, max_part: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v.retain(|&x| x > 0);
        Partition::new(v).unwrap()
    })
}

proptest! {
    #[test]
    fn quotient_roundtrip(l in partition(12, 12), s in -6i64..=6, e in 1u32..=7) {
        let (core, quotient) = e_core_and_quotient(&l, s, e).unwrap();
        prop_assert!(is_e_core(&core, e));
        let total: usize = quotient.components.iter().map(Partition::size).sum();
        prop_assert_eq!(l.size(), core.size() + e as usize * total);
        prop_assert_eq!(from_quotient(&quotient, e).unwrap(), (l, s));
    }

    #[test]
    fn conjugate_is_an_involution(l in partition(15, 15)) {
        prop_assert_eq!(l.conjugate().size(), l.size());
        prop_assert_eq!(l.conjugate().conjugate(), l);
    }

    #[test]
    fn partition_text_roundtrip(l in partition(10, 20)) {
        prop_assert_eq!(l.to_string().parse::<Partition>().unwrap(), l);
    }

    #[test]
    fn symbol_text_roundtrip(t in 0i64..4, a in partition(5, 5), b in partition(5, 5)) {
        let s = symbol_from_bipartition(t, (&a, &b));
        prop_assert_eq!(s.to_string().parse::<Symbol>().unwrap(), s);
    }

    #[test]
    fn cores_lose_whole_hooks(t in 0i64..4, a in partition(5, 5), b in partition(5, 5), d in 1u32..=4) {
        let s = symbol_from_bipartition(t, (&a, &b));
        let core = d_core(&s, d);
        prop_assert!(d_hooks(&core, d).is_empty());
        prop_assert_eq!(s.rank(), core.rank() + d as usize * d_weight(&s, d));
        prop_assert_eq!(core.defect(), s.defect());
        let cocore = d_cocore(&s, d);
        prop_assert_eq!(s.rank(), cocore.rank() + d as usize * d_coweight(&s, d));
        prop_assert_eq!(cocore.defect() % 2, 1);
    }
}
