use std::collections::BTreeMap;
use std::sync::Arc;

use wrlat_core::decompose::{decompose_prime, Shape};
use wrlat_core::order::Order;
use wrlat_core::survey::quartic_corpus;
use wrlat_core::Field;

fn bits(k: u32) -> Vec<i64> {
    (0..4).map(|i| i64::from((k >> i) & 1)).collect()
}

/// Whether `O / 2O` has a zero divisor, from the structure constants alone.
fn zero_divisor_mod_2(o: &Order) -> Option<(Vec<i64>, Vec<i64>)> {
    for z in 1..16 {
        for t in z..16 {
            let prod = o.mul(&bits(z), &bits(t));
            if prod.iter().all(|v| v % 2 == 0) {
                return Some((bits(z), bits(t)));
            }
        }
    }
    None
}

#[test]
fn two_is_inert_for_odd_discriminant_and_d_5_mod_8() {
    // one field per class of (a, b, c, d) mod 32
    let mut classes = BTreeMap::new();
    for (a, b, c, d) in quartic_corpus(63, 1200) {
        let odd_disc = d % 4 == 1 && b % 2 == 0 && (a + b).rem_euclid(4) == 1;
        if odd_disc && d % 8 == 5 {
            classes.entry((a.rem_euclid(32), b % 32, c % 32, d % 32)).or_insert((a, b, c, d));
        }
    }
    assert!(classes.len() > 100, "only {} classes", classes.len());
    for (a, b, c, d) in classes.into_values() {
        let field = Arc::new(Field::quartic(a, b, c, d).unwrap());
        assert_eq!(zero_divisor_mod_2(field.order()), None, "({a},{b},{c},{d})");
        assert_eq!(decompose_prime(&field, 2).unwrap().shape, Shape::Inert, "({a},{b},{c},{d})");
    }
}

#[test]
fn two_splits_for_d_1_mod_8() {
    let field = Arc::new(Field::quartic(-1, 4, 1, 17).unwrap());
    assert!(zero_divisor_mod_2(field.order()).is_some());
    assert!(decompose_prime(&field, 2).unwrap().factors.len() > 1);
}
