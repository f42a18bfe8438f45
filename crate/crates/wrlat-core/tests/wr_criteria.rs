use std::sync::Arc;

use wrlat_core::certify::{self, Fault};
use wrlat_core::decompose::decompose_prime;
use wrlat_core::ideal::enumerate_primitive_ideals;
use wrlat_core::lattice::wr_report;
use wrlat_core::numtheory::primes_up_to;
use wrlat_core::survey::quartic_corpus;
use wrlat_core::{Field, IdealLattice};

fn cubic(m: u64) -> Arc<Field> {
    Arc::new(Field::cubic(m).unwrap())
}

fn quartic(a: i64, b: i64, c: i64, d: i64) -> Arc<Field> {
    Arc::new(Field::quartic(a, b, c, d).unwrap())
}

#[test]
fn square_ideal_minimum() {
    for m in [7, 13, 91, 97] {
        let case = certify::cubic_thm1(&cubic(m)).unwrap();
        let rep = wr_report(&case.ideal);
        assert!(rep.is_wr && rep.is_orthogonal, "m={m}");
        assert_eq!(rep.minimum, format!("{}/1", m * m));
        assert_eq!(rep.count, 6);
    }
    for m in [9, 63, 117, 171] {
        let case = certify::cubic_thm1(&cubic(m)).unwrap();
        assert_eq!(case.ideal.norm(), m * m / 27);
        let rep = wr_report(&case.ideal);
        assert!(rep.is_wr && rep.is_orthogonal, "m={m}");
        assert_eq!(rep.minimum, format!("{}/1", m * m / 9));
    }
}

#[test]
fn prime_above_three_for_nine() {
    let field = cubic(9);
    let dec = decompose_prime(&field, 3).unwrap();
    assert_eq!(dec.tag(), "P^3");
    let p0 = &dec.factors[0].ideal;
    let rep = wr_report(p0);
    assert!(rep.is_wr && rep.is_orthogonal);
    assert_eq!(rep.minimum, "9/1");
    let o = field.order();
    let v = o.add(&o.basis_vector(1), &o.one());
    assert!(p0.contains(&v));
    assert_eq!(o.length_sq(&v), 9);
    assert_eq!(o.length_sq(&o.sigma(&v)), 9);
}

#[test]
fn squarefree_norm_examples() {
    let p7 = certify::cubic_thm2_case(&cubic(7), 7).unwrap();
    assert_eq!(p7.ideal.norm(), 7);
    assert!(!wr_report(&p7.ideal).is_wr);
    let case = certify::cubic_thm2_case(&cubic(63), 21).unwrap();
    assert!(!case.predicted);
    assert!(!wr_report(&case.ideal).is_wr);
}

#[test]
fn mixed_norm_examples() {
    for (m, q, q2) in [(819, 7, 13), (819, 13, 7), (1953, 31, 7)] {
        let field = cubic(m);
        assert!(!certify::cubic_thm3_predicate(&field, q, q2).unwrap());
        let case = certify::cubic_thm3_case(&field, q, q2).unwrap();
        assert_eq!(case.ideal.norm(), 3 * q * q * q2);
        assert!(!wr_report(&case.ideal).is_wr);
    }
}

#[test]
fn small_cubic_enumeration() {
    let field = cubic(7);
    let ideals = enumerate_primitive_ideals(&field, 7).unwrap();
    let norms: Vec<u64> = ideals.iter().map(IdealLattice::norm).collect();
    assert_eq!(norms, [1, 7]);
}

#[test]
fn unique_prime_rule_matches_factorization() {
    for (a, b, c, d) in quartic_corpus(7, 65) {
        let field = quartic(a, b, c, d);
        for p in primes_up_to(50).into_iter().filter(|&p| p > 2) {
            let unique = certify::quartic_unique_prime(&field, p).unwrap();
            let dec = decompose_prime(&field, p).unwrap();
            assert_eq!(unique.is_some(), dec.factors.len() == 1, "({a},{b},{c},{d}) p={p}");
        }
    }
    assert!(certify::quartic_unique_prime(&quartic(1, 2, 1, 5), 11).unwrap().is_none());
    let q3 = certify::quartic_unique_prime(&quartic(3, 2, 1, 5), 3).unwrap().unwrap();
    assert_eq!(q3.norm(), 9);
    assert!(wr_report(&q3).is_wr);
}

#[test]
fn unique_prime_witnesses() {
    let p5 = certify::quartic_unique_prime(&quartic(-1, 2, 1, 5), 5).unwrap().unwrap();
    assert!(wr_report(&p5).is_wr);
    assert!(certify::quartic_pi_predicate(&quartic(-1, 2, 1, 5), &[5]).unwrap());
    let field = quartic(-1, 2, 3, 13);
    assert!(!certify::quartic_pi_predicate(&field, &[13]).unwrap());
    assert!(!wr_report(&certify::quartic_unique_prime(&field, 13).unwrap().unwrap()).is_wr);
    let field = quartic(-13, 2, 1, 5);
    assert!(!certify::quartic_qj_predicate(&field, &[13]).unwrap());
    assert!(!wr_report(&certify::quartic_unique_prime(&field, 13).unwrap().unwrap()).is_wr);
}

#[test]
fn prime_above_two() {
    let dec = decompose_prime(&quartic(1, 2, 1, 5), 2).unwrap();
    assert_eq!(dec.factors.len(), 1);
    let rep = wr_report(&dec.factors[0].ideal);
    assert!(rep.is_wr);
    assert_eq!(rep.minimum, "16/1");
    for f in decompose_prime(&quartic(1, 2, 3, 13), 2).unwrap().factors {
        assert!(!wr_report(&f.ideal).is_wr);
    }
    for (a, b, c, d) in quartic_corpus(5, 40).into_iter().filter(|t| t.3 % 2 == 0) {
        let field = quartic(a, b, c, d);
        assert!(!certify::prime2_wr_predicate(&field).unwrap());
        for f in decompose_prime(&field, 2).unwrap().factors {
            assert!(!wr_report(&f.ideal).is_wr, "({a},{b},{c},{d})");
        }
    }
}

#[test]
fn injected_fault_is_detected() {
    let mut failures = 0;
    for m in [7, 13, 19, 31, 37, 91] {
        failures += certify::crosscheck_field(&cubic(m), Fault::DoubleUpperBound)
            .unwrap()
            .iter()
            .filter(|c| !c.pass)
            .count();
    }
    assert!(failures > 0);
    for m in [7, 13, 19, 31, 37, 91] {
        assert!(certify::crosscheck_field(&cubic(m), Fault::None).unwrap().iter().all(|c| c.pass));
    }
}
