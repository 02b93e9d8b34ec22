use proptest::prelude::*;

use kronbound::barvinok::{maximize_g_2d, maximize_h_binary, DEFAULT_TOL};
use kronbound::partitions::{count_partitions, count_plane_partitions, generate_partitions, Partition};
use kronbound::symfun::{kostka, kronecker};
use kronbound::tables::{
    count_binary_3d, count_binary_weights, count_tables_2d, count_tables_3d, count_tables_weights, pyramid_margin_histogram,
};
use kronbound::Count;

fn partition_of(n: usize) -> impl Strategy<Value = Partition> {
    prop::sample::select(generate_partitions(n, None, None))
}

fn triple(max_n: usize) -> impl Strategy<Value = (Partition, Partition, Partition)> {
    (1..=max_n).prop_flat_map(|n| (partition_of(n), partition_of(n), partition_of(n)))
}

fn pair(max_n: usize) -> impl Strategy<Value = (Partition, Partition)> {
    (1..=max_n).prop_flat_map(|n| (partition_of(n), partition_of(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kostka_ignores_weight_order(
        (nu, w) in (1usize..=10).prop_flat_map(|n| (partition_of(n), partition_of(n)))
            .prop_flat_map(|(nu, w)| (Just(nu), Just(w.parts().to_vec()).prop_shuffle()))
    ) {
        let sorted = Partition::from_unsorted(w.iter().copied());
        prop_assert_eq!(kostka(&nu, &w), kostka(&nu, &sorted));
    }

    #[test]
    fn conjugation_reverses_dominance((a, b) in pair(12)) {
        prop_assert_eq!(a.conjugate().conjugate(), a.clone());
        prop_assert_eq!(a.dominated_by(&b).unwrap(), b.conjugate().dominated_by(&a.conjugate()).unwrap());
    }

    #[test]
    fn kronecker_symmetries((a, b, c) in triple(9)) {
        let g = kronecker(&a, &b, &c).unwrap();
        prop_assert_eq!(&kronecker(&b, &c, &a).unwrap(), &g);
        prop_assert_eq!(&kronecker(&c, &b, &a).unwrap(), &g);
        prop_assert_eq!(&kronecker(&a.conjugate(), &b, &c.conjugate()).unwrap(), &g);
    }

    #[test]
    fn table_counts_ignore_margin_order(
        (rows, cols) in (1usize..=12).prop_flat_map(|n| (partition_of(n), partition_of(n)))
            .prop_flat_map(|(a, b)| (Just(a.parts().to_vec()).prop_shuffle(), Just(b.parts().to_vec()).prop_shuffle()))
    ) {
        let (a, b) = (Partition::from_unsorted(rows.iter().copied()), Partition::from_unsorted(cols.iter().copied()));
        prop_assert_eq!(count_tables_weights(&rows, &cols), count_tables_2d(&a, &b).unwrap());
        prop_assert_eq!(count_tables_weights(&rows, &cols), count_tables_weights(&cols, &rows));
        prop_assert_eq!(count_binary_weights(&rows, &cols), count_binary_weights(&cols, &rows));
    }

    #[test]
    fn three_dimensional_counts_are_symmetric((a, b, c) in triple(7)) {
        let t = count_tables_3d(&a, &b, &c).unwrap();
        prop_assert_eq!(&count_tables_3d(&c, &a, &b).unwrap(), &t);
        prop_assert_eq!(&count_tables_3d(&b, &a, &c).unwrap(), &t);
        let bin = count_binary_3d(&a, &b, &c).unwrap();
        prop_assert_eq!(&count_binary_3d(&c, &a, &b).unwrap(), &bin);
        prop_assert!(bin <= t);
    }

    #[test]
    fn barvinok_covers_tables((a, b) in pair(16)) {
        let t = count_tables_2d(&a, &b).unwrap();
        let (point, bound) = maximize_g_2d(&a, &b, DEFAULT_TOL).unwrap();
        prop_assert!(bound.covers(&t, 1e-12), "T = {} > exp {}", t, bound.log_value);
        prop_assert!(point.max_residual() < 1e-8);
        prop_assert!(point.entries.iter().all(|&z| z >= 0.0));
    }

    #[test]
    fn binary_bound_covers_or_certifies_empty((a, b, c) in triple(8)) {
        let bin = count_binary_3d(&a, &b, &c).unwrap();
        match maximize_h_binary(&a, &b, &c, DEFAULT_TOL) {
            Ok((point, bound)) => {
                prop_assert!(bound.covers(&bin, 1e-12));
                prop_assert!(point.entries.iter().all(|&z| (0.0..=1.0).contains(&z)));
            }
            Err(kronbound::Error::Infeasible(_)) => prop_assert_eq!(bin, Count::from(0u32)),
            Err(e) => prop_assert!(false, "{}", e),
        }
    }
}

#[test]
fn partition_counts_match_enumeration() {
    for n in 0..=30 {
        assert_eq!(count_partitions(n), Count::from(generate_partitions(n, None, None).len()), "n = {n}");
    }
}

#[test]
fn plane_partitions_split_by_margins() {
    for n in 0..=20 {
        let total: u64 = pyramid_margin_histogram(n).values().sum();
        assert_eq!(count_plane_partitions(n), Count::from(total), "n = {n}");
    }
}

#[test]
fn dominance_is_a_partial_order() {
    for n in 0..=8 {
        let ps = generate_partitions(n, None, None);
        for a in &ps {
            assert!(a.dominated_by(a).unwrap());
            for b in &ps {
                let ab = a.dominated_by(b).unwrap();
                if ab && b.dominated_by(a).unwrap() {
                    assert_eq!(a, b);
                }
                for c in &ps {
                    if ab && b.dominated_by(c).unwrap() {
                        assert!(a.dominated_by(c).unwrap());
                    }
                }
            }
        }
    }
}
