use std::sync::Arc;

use proptest::prelude::*;
use wrlat_core::decompose::decompose_prime;
use wrlat_core::lattice::{naive_radius, naive_shortest, shortest_vectors, GramForm};
use wrlat_core::survey::{records_from_csv, records_to_csv, WrRecord};
use wrlat_core::{Field, IdealLattice};

fn gram_from(b: &[i64], n: usize) -> Option<GramForm> {
    let g: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| b[k * n + i] * b[k * n + j]).sum()).collect())
        .collect();
    GramForm::from_i64(&g).ok()
}

/// Unimodular matrix (columns) from a sequence of elementary column operations.
fn unimodular(n: usize, ops: &[(usize, usize, i64)]) -> Vec<Vec<i64>> {
    let mut u: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    for &(i, j, k) in ops {
        let (i, j) = (i % n, j % n);
        if i == j {
            u.swap(0, i);
            continue;
        }
        for r in 0..n {
            u[i][r] += k * u[j][r];
        }
    }
    u
}

fn record() -> impl Strategy<Value = WrRecord> {
    (
        "(cubic:[0-9]{1,3}|quartic:-?[0-9],[0-9],[0-9],[0-9]{1,2})",
        1u64..100_000,
        prop::collection::vec(-50i64..50, 9..=16),
        (1i64..10_000, 1i64..50),
        any::<[bool; 4]>(),
        prop::option::of(any::<bool>()),
    )
        .prop_map(|(field_id, ideal_norm, hnf, (num, den), flags, predicate)| WrRecord {
            field_id,
            ideal_norm,
            hnf,
            minimum: format!("{num}/{den}"),
            wr: flags[0],
            strongly_wr: flags[1],
            orthogonal: flags[2],
            predicate,
            divides_disc: flags[3],
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn enumeration_matches_box_scan(n in 2usize..=4, b in prop::collection::vec(-3i64..=3, 16)) {
        let Some(g) = gram_from(&b[..n * n], n) else { return Ok(()) };
        let r = naive_radius(&g);
        prop_assume!(r <= 8);
        prop_assert_eq!(shortest_vectors(&g), naive_shortest(&g, r));
    }

    #[test]
    fn minimum_is_invariant_under_unimodular_change(
        n in 2usize..=4,
        b in prop::collection::vec(-4i64..=4, 16),
        ops in prop::collection::vec((0usize..4, 0usize..4, -2i64..=2), 0..8),
    ) {
        let Some(g) = gram_from(&b[..n * n], n) else { return Ok(()) };
        let h = g.transform(&unimodular(n, &ops));
        let (sg, sh) = (shortest_vectors(&g), shortest_vectors(&h));
        prop_assert_eq!(&sg.min, &sh.min);
        prop_assert_eq!(sg.count(), sh.count());
    }

    #[test]
    fn csv_round_trip(records in prop::collection::vec(record(), 0..6)) {
        let text = records_to_csv(&records).unwrap();
        prop_assert_eq!(records_from_csv(&text).unwrap(), records);
    }

    #[test]
    fn json_round_trip(records in prop::collection::vec(record(), 0..6)) {
        let text = serde_json::to_string(&records).unwrap();
        let back: Vec<WrRecord> = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, records);
    }

    #[test]
    fn norm_is_multiplicative(x in prop::collection::vec(-6i64..=6, 4), y in prop::collection::vec(-6i64..=6, 4)) {
        let field = Field::quartic(-1, 2, 1, 5).unwrap();
        let o = field.order();
        prop_assert_eq!(o.norm(&o.mul(&x, &y)), o.norm(&x) * o.norm(&y));
    }

    #[test]
    fn ideal_norms_multiply(i in 0usize..6, j in 0usize..6) {
        let field = Arc::new(Field::cubic(91).unwrap());
        let primes: Vec<IdealLattice> = [2u64, 3, 7, 13, 29]
            .iter()
            .flat_map(|&p| decompose_prime(&field, p).unwrap().ideals())
            .collect();
        let (a, b) = (&primes[i % primes.len()], &primes[j % primes.len()]);
        let ab = a.mul_ideals(b).unwrap();
        prop_assert_eq!(ab.norm(), a.norm() * b.norm());
        prop_assert_eq!(&ab, &b.mul_ideals(a).unwrap());
        prop_assert!(ab.validate_ideal() && ab.gram_determinant_matches());
    }
}
