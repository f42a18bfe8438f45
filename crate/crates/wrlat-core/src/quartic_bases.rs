//! Explicit `Z`-bases of ideals in cyclic quartic fields.
//!
//! Each construction spans a lattice from closed-form generators given in the
//! coordinates `(s1, s2, s3, s4)` of `s1 + s2 sqrt d + s3 beta + s4 sigma(beta)`. The
//! results are checked for ideal-hood and for the expected norm before they are used.
//!
//! Some closed forms hold only after exchanging `sqrt d -> -sqrt d` and
//! `beta <-> sigma(beta)`; every builder therefore takes a [`Reading`].

use std::sync::Arc;

use crate::decompose::{generic_decomposition, Source};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::IdealLattice;
use crate::linalg::Rat;
use crate::numtheory::{is_prime, is_quadratic_residue, mod_inv, sqrt_mod};
use crate::order::qf;
use crate::quartic::{BasisCase, QuarticField};

/// `(s1 + s2 sqrt d + s3 beta + s4 sigma beta) / den`.
fn el(s: [i64; 4], den: i64) -> Vec<Rat> {
    s.iter().map(|&x| qf(x, den)).collect()
}

/// How closed-form coordinates are interpreted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Reading {
    /// As written.
    Verbatim,
    /// With `sqrt d -> -sqrt d` and `beta <-> sigma(beta)`.
    Conjugate,
}

impl Reading {
    pub const ALL: [Reading; 2] = [Reading::Verbatim, Reading::Conjugate];

    pub fn apply(&self, x: Vec<Rat>) -> Vec<Rat> {
        match self {
            Reading::Verbatim => x,
            Reading::Conjugate => vec![x[0].clone(), -x[1].clone(), x[3].clone(), x[2].clone()],
        }
    }

    fn apply_all(&self, xs: Vec<Vec<Rat>>) -> Vec<Vec<Rat>> {
        xs.into_iter().map(|x| self.apply(x)).collect()
    }
}

fn sigma(x: &[Rat]) -> Vec<Rat> {
    vec![x[0].clone(), -x[1].clone(), -x[3].clone(), x[2].clone()]
}

fn orbit(x: Vec<Rat>) -> Vec<Vec<Rat>> {
    let mut out = vec![x];
    for _ in 0..3 {
        let next = sigma(out.last().expect("nonempty"));
        out.push(next);
    }
    out
}

fn quartic(field: &Field) -> Result<&QuarticField> {
    field
        .as_quartic()
        .ok_or_else(|| Error::InvalidArgument("expected a quartic field".into()))
}

/// Spans the elements and checks ideal-hood and, when given, the norm.
fn checked_span(field: &Arc<Field>, elems: &[Vec<Rat>], norm: Option<u64>) -> Result<IdealLattice> {
    let ideal = IdealLattice::from_field_basis(field, elems)?;
    if !ideal.validate_ideal() {
        return Err(Error::Internal(format!("lattice {ideal} is not an ideal")));
    }
    if let Some(n) = norm {
        if ideal.norm() != n {
            return Err(Error::Internal(format!("lattice has norm {}, expected {n}", ideal.norm())));
        }
    }
    Ok(ideal)
}

fn admissible(q: &QuarticField, primes_i: &[u64], primes_j: &[u64]) -> Result<()> {
    let mut all: Vec<u64> = primes_i.iter().chain(primes_j).copied().collect();
    all.sort_unstable();
    if all.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidArgument("repeated prime".into()));
    }
    for &p in primes_i {
        if !is_prime(p) || q.d % p as i64 != 0 {
            return Err(Error::InvalidArgument(format!("{p} is not a prime divisor of d = {}", q.d)));
        }
    }
    for &p in primes_j {
        if !is_prime(p) || q.a % p as i64 != 0 || p == 2 {
            return Err(Error::InvalidArgument(format!("{p} is not an odd prime divisor of a = {}", q.a)));
        }
        if is_quadratic_residue(q.d, p)? {
            return Err(Error::InvalidArgument(format!("d = {} is a quadratic residue mod {p}", q.d)));
        }
    }
    Ok(())
}

/// The closed-form basis of `P_I Q_J`, validated, without fallback.
pub fn lemma_pi_qj(field: &Arc<Field>, primes_i: &[u64], primes_j: &[u64], reading: Reading) -> Result<IdealLattice> {
    let q = quartic(field)?;
    admissible(q, primes_i, primes_j)?;
    let pi: i64 = primes_i.iter().map(|&p| p as i64).product();
    let qj: i64 = primes_j.iter().map(|&p| p as i64).product();
    let basis = match q.basis_case {
        BasisCase::I => vec![
            el([pi * qj, 0, 0, 0], 1),
            el([0, qj, 0, 0], 1),
            el([0, 0, 1, 0], 1),
            el([0, 0, 0, 1], 1),
        ],
        BasisCase::II => vec![
            el([pi * qj, 0, 0, 0], 1),
            el([qj * pi, qj, 0, 0], 2),
            el([0, 0, 1, 0], 1),
            el([0, 0, 0, 1], 1),
        ],
        BasisCase::III => vec![
            el([pi * qj, 0, 0, 0], 1),
            el([qj * pi, qj, 0, 0], 2),
            el([0, 0, 1, 1], 2),
            el([0, 0, -1, 1], 2),
        ],
        BasisCase::IV => orbit(el([-pi * qj, qj, -1, -1], 4)),
        BasisCase::V => orbit(el([pi * qj, -qj, -1, 1], 4)),
    };
    checked_span(field, &reading.apply_all(basis), Some((pi * qj * qj) as u64))
}

/// `P_I Q_J` for primes `I` dividing `d` and `J` dividing `a` with `d` a non-residue
/// mod each of them. Falls back to multiplying primes from the generic decomposition
/// when the closed form fails validation.
pub fn build_pi_qj(field: &Arc<Field>, primes_i: &[u64], primes_j: &[u64]) -> Result<(IdealLattice, Source)> {
    let mut outcome = lemma_pi_qj(field, primes_i, primes_j, Reading::Verbatim);
    if matches!(outcome, Err(Error::Internal(_)) | Err(Error::NotIntegral)) {
        outcome = lemma_pi_qj(field, primes_i, primes_j, Reading::Conjugate);
    }
    match outcome {
        Ok(ideal) => Ok((ideal, Source::Lemma)),
        Err(Error::InvalidArgument(msg)) => Err(Error::InvalidArgument(msg)),
        Err(_) => {
            let mut acc = IdealLattice::unit(field);
            let mut source = Source::Dedekind;
            for &p in primes_i.iter().chain(primes_j) {
                let dec = generic_decomposition(field, p)?;
                if dec.factors.len() != 1 {
                    return Err(Error::Internal(format!("{p} has more than one prime above it")));
                }
                if dec.source == Source::Oracle {
                    source = Source::Oracle;
                }
                acc = acc.mul_ideals(&dec.factors[0].ideal)?;
            }
            Ok((acc, source))
        }
    }
}

/// Integer `t` with `4t - 1 = z (mod q)`.
fn quarter_shift(z: i64, q: i64) -> i64 {
    let inv4 = mod_inv(4, q as i128).expect("q is odd") as i64;
    ((z + 1).rem_euclid(q) * inv4).rem_euclid(q)
}

fn split_q_basis(case: BasisCase, q: i64, z: i64, t: i64) -> Vec<Vec<Rat>> {
    let u = 4 * t - 1;
    match case {
        BasisCase::I => vec![el([q, 0, 0, 0], 1), el([z, 1, 0, 0], 1), el([0, 0, 1, 0], 1), el([0, 0, 0, 1], 1)],
        BasisCase::II => vec![el([q, 0, 0, 0], 1), el([u, 1, 0, 0], 2), el([0, 0, 1, 0], 1), el([0, 0, 0, 1], 1)],
        BasisCase::III => vec![el([q, 0, 0, 0], 1), el([u, 1, 0, 0], 2), el([0, 0, 1, 1], 2), el([0, 0, 1, -1], 2)],
        BasisCase::IV => vec![
            el([q, 0, 0, 0], 1),
            el([u, 1, 0, 0], 2),
            el([u, 1, -1, -1], 4),
            el([2 * q + u, 1, 1, -1], 4),
        ],
        BasisCase::V => vec![
            el([q, 0, 0, 0], 1),
            el([u, 1, 0, 0], 2),
            el([u + 2 * q, 1, -1, -1], 4),
            el([u, 1, 1, -1], 4),
        ],
    }
}

/// The two primes above an odd `q | a` with `d` a quadratic residue mod `q`.
pub fn build_split_q(field: &Arc<Field>, q: u64) -> Result<[IdealLattice; 2]> {
    match split_q_with(field, q, Reading::Verbatim) {
        Err(Error::Internal(_)) | Err(Error::NotIntegral) => split_q_with(field, q, Reading::Conjugate),
        other => other,
    }
}

pub fn split_q_with(field: &Arc<Field>, q: u64, reading: Reading) -> Result<[IdealLattice; 2]> {
    let f = quartic(field)?;
    let qi = q as i64;
    if q == 2 || !is_prime(q) || f.a % qi != 0 {
        return Err(Error::InvalidArgument(format!("{q} is not an odd prime divisor of a = {}", f.a)));
    }
    if !is_quadratic_residue(f.d, q)? {
        return Err(Error::InvalidArgument(format!("d = {} is not a quadratic residue mod {q}", f.d)));
    }
    let z0 = sqrt_mod(f.d, q)? as i64;
    let mut out = Vec::new();
    for z in [z0, qi - z0] {
        let t0 = quarter_shift(z, qi);
        let shifts: &[i64] = match f.basis_case {
            BasisCase::IV | BasisCase::V => &[0, 1, 2, 3],
            _ => &[0],
        };
        let mut found = None;
        let mut last_err = None;
        for &k in shifts {
            match checked_span(field, &reading.apply_all(split_q_basis(f.basis_case, qi, z, t0 + k * qi)), Some(q)) {
                Ok(ideal) => {
                    found = Some(ideal);
                    break;
                }
                Err(e) => last_err = Some(e),
            }
        }
        match found {
            Some(i) => out.push(i),
            None => return Err(last_err.expect("at least one attempt")),
        }
    }
    if out[0] == out[1] {
        return Err(Error::Internal(format!("both primes above {q} coincide")));
    }
    let second = out.pop().expect("two ideals");
    let first = out.pop().expect("two ideals");
    Ok([first, second])
}

/// Closed-form primes above an odd `p | b` with `p` not dividing `a`. `None` when
/// no closed form covers the field.
pub fn divisor_b_primes(field: &Arc<Field>, p: u64, reading: Reading) -> Option<Result<Vec<IdealLattice>>> {
    let f = field.as_quartic()?;
    let (a, b, c) = (f.a, f.b, f.c);
    let pi = p as i64;
    if p == 2 || b % pi != 0 || a % pi == 0 {
        return None;
    }
    if matches!(f.basis_case, BasisCase::IV | BasisCase::V) && b.rem_euclid(4) != 2 {
        return None;
    }
    let residue = match is_quadratic_residue(a, p) {
        Ok(r) => r,
        Err(e) => return Some(Err(e)),
    };
    let build = |l: i64| -> Vec<Vec<Vec<Rat>>> {
        divisor_b_bases(f.basis_case, pi, b, c, residue.then_some(l))
            .into_iter()
            .map(|basis| reading.apply_all(basis))
            .collect()
    };
    if !residue {
        return Some(
            build(0)
                .iter()
                .map(|basis| checked_span(field, basis, Some(p * p)))
                .collect(),
        );
    }
    let l0 = match sqrt_mod(a, p) {
        Ok(l) => l as i64,
        Err(e) => return Some(Err(e)),
    };
    let mut last = None;
    for l in [l0, l0 + pi] {
        let r: Result<Vec<IdealLattice>> =
            build(l).iter().map(|basis| checked_span(field, basis, Some(p))).collect();
        match r {
            Ok(v) => return Some(Ok(v)),
            Err(e) => last = Some(e),
        }
    }
    last.map(Err)
}

fn divisor_b_bases(case: BasisCase, p: i64, b: i64, c: i64, l: Option<i64>) -> Vec<Vec<Vec<Rat>>> {
    let one = el([p, 0, 0, 0], 1);
    match (case, l) {
        (BasisCase::I, None) => vec![
            vec![one.clone(), el([c, 1, 0, 0], 1), el([0, 0, 0, p], 1), el([0, 0, 1, 1], 1)],
            vec![one, el([-c, 1, 0, 0], 1), el([0, 0, 0, p], 1), el([0, 0, 1, -1], 1)],
        ],
        (BasisCase::I, Some(l)) => vec![
            vec![one.clone(), el([c, 1, 0, 0], 1), el([l * c, 0, 0, -1], 1), el([l * c, 0, 1, 0], 1)],
            vec![one.clone(), el([c, 1, 0, 0], 1), el([l * c, 0, 0, 1], 1), el([-l * c, 0, 1, 0], 1)],
            vec![one.clone(), el([-c, 1, 0, 0], 1), el([l * c, 0, 0, -1], 1), el([l * c, 0, -1, 0], 1)],
            vec![one, el([-c, 1, 0, 0], 1), el([l * c, 0, 0, 1], 1), el([l * c, 0, 1, 0], 1)],
        ],
        (BasisCase::II, None) => vec![
            vec![one.clone(), el([p + c, 1, 0, 0], 2), el([0, 0, 0, p], 1), el([0, 0, 1, 1], 1)],
            vec![one, el([p - c, 1, 0, 0], 2), el([0, 0, 0, p], 1), el([0, 0, 1, -1], 1)],
        ],
        (BasisCase::II, Some(l)) => vec![
            vec![one.clone(), el([p - c, 1, 0, 0], 2), el([l * c, 0, 0, -1], 1), el([l * c, 0, 1, 0], 1)],
            vec![one.clone(), el([p - c, 1, 0, 0], 2), el([l * c, 0, 0, 1], 1), el([-l * c, 0, 1, 0], 1)],
            vec![one.clone(), el([p + c, 1, 0, 0], 2), el([l * c, 0, 0, -1], 1), el([l * c, 0, -1, 0], 1)],
            vec![one, el([p + c, 1, 0, 0], 2), el([l * c, 0, 0, 1], 1), el([l * c, 0, 1, 0], 1)],
        ],
        (BasisCase::III, None) => vec![
            vec![one.clone(), el([-c, 1, 0, 0], 2), el([0, 0, -1, 1], 2), el([0, 0, p, p], 2)],
            vec![one, el([c, 1, 0, 0], 2), el([0, 0, -p, p], 2), el([0, 0, 1, 1], 2)],
        ],
        (BasisCase::III, Some(l)) => vec![
            vec![one.clone(), el([-c, 1, 0, 0], 2), el([0, 0, -1, 1], 2), el([2 * l * c, 0, -1, -1], 2)],
            vec![one.clone(), el([-c, 1, 0, 0], 2), el([0, 0, -1, 1], 2), el([2 * l * c, 0, 1, 1], 2)],
            vec![one.clone(), el([c, 1, 0, 0], 2), el([2 * l * c, 0, -1, 1], 2), el([0, 0, 1, 1], 2)],
            vec![one, el([c, 1, 0, 0], 2), el([2 * l * c, 0, 1, -1], 2), el([0, 0, 1, 1], 2)],
        ],
        (BasisCase::IV, None) => vec![
            vec![one.clone(), el([-c, 1, 0, 0], 2), el([b - c, 1, -1, 1], 4), el([-p, p, p, p], 4)],
            vec![one, el([c, 1, 0, 0], 2), el([p, p, -p, p], 4), el([b - c, -1, -1, -1], 4)],
        ],
        (BasisCase::IV, Some(l)) => vec![
            vec![one.clone(), el([c, 1, 0, 0], 2), el([(1 - 2 * l) * c, 1, -1, 1], 4), el([b - c, -1, -1, -1], 4)],
            vec![one.clone(), el([-c, 1, 0, 0], 2), el([b - c, 1, -1, 1], 4), el([(2 * l + 1) * c, -1, -1, -1], 4)],
            vec![one.clone(), el([c, 1, 0, 0], 2), el([(2 * l + 1) * c, 1, -1, 1], 4), el([b - c, -1, -1, -1], 4)],
            vec![one, el([-c, 1, 0, 0], 2), el([b - c, 1, -1, 1], 4), el([(1 - 2 * l) * c, -1, -1, -1], 4)],
        ],
        (BasisCase::V, None) => vec![
            vec![one.clone(), el([-c, 1, 0, 0], 2), el([b - c, 1, -1, 1], 4), el([p, p, p, p], 4)],
            vec![one, el([c, 1, 0, 0], 2), el([-p, p, -p, p], 4), el([b - c, -1, -1, -1], 4)],
        ],
        (BasisCase::V, Some(l)) => vec![
            vec![one.clone(), el([c, 1, 0, 0], 2), el([(2 * l + 1) * c, 1, -1, 1], 4), el([b - c, -1, -1, -1], 4)],
            vec![one.clone(), el([-c, 1, 0, 0], 2), el([b - c, 1, -1, 1], 4), el([(2 * l + 1) * c, -1, -1, -1], 4)],
            vec![one.clone(), el([c, 1, 0, 0], 2), el([(1 - 2 * l) * c, 1, -1, 1], 4), el([b - c, -1, -1, -1], 4)],
            vec![one, el([-c, 1, 0, 0], 2), el([b - c, 1, -1, 1], 4), el([(1 - 2 * l) * c, -1, -1, -1], 4)],
        ],
    }
}

/// Closed-form primes above 2 when `d` is odd and `2 | disc`. `None` otherwise.
pub fn primes_above_two(field: &Arc<Field>, reading: Reading) -> Option<Result<Vec<IdealLattice>>> {
    let f = field.as_quartic()?;
    let d8 = f.d.rem_euclid(8);
    let bases: Vec<(Vec<Vec<Rat>>, u64)> = match (f.basis_case, d8) {
        (BasisCase::II, 5) => vec![(
            vec![el([2, 0, 0, 0], 1), el([1, 1, 0, 0], 1), el([0, 0, 1, 0], 1), el([0, 0, 0, 1], 1)],
            4,
        )],
        (BasisCase::II, 1) => [-1, 1]
            .iter()
            .map(|&s| {
                (
                    vec![el([2, 0, 0, 0], 1), el([s, 1, 0, 0], 2), el([0, 0, 1, 0], 1), el([0, 0, 0, 1], 1)],
                    2,
                )
            })
            .collect(),
        (BasisCase::III, 5) => vec![(
            vec![el([2, 0, 0, 0], 1), el([1, 1, 0, 0], 1), el([-1, 1, -1, -1], 2), el([1, 1, 1, -1], 2)],
            4,
        )],
        (BasisCase::III, 1) => vec![
            (vec![el([2, 0, 0, 0], 1), el([-1, 1, 0, 0], 2), el([2, 0, -1, -1], 2), el([0, 0, 1, -1], 2)], 2),
            (vec![el([2, 0, 0, 0], 1), el([1, 1, 0, 0], 2), el([0, 0, 1, 1], 2), el([2, 0, 1, -1], 2)], 2),
        ],
        _ => return None,
    };
    Some(
        bases
            .into_iter()
            .map(|(b, n)| checked_span(field, &reading.apply_all(b), Some(n)))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(a: i64, b: i64, c: i64, d: i64) -> Arc<Field> {
        Arc::new(Field::quartic(a, b, c, d).unwrap())
    }

    #[test]
    fn empty_product_is_the_order() {
        let f = field(-1, 2, 1, 5);
        let (i, src) = build_pi_qj(&f, &[], &[]).unwrap();
        assert_eq!(i, IdealLattice::unit(&f));
        assert_eq!(src, Source::Lemma);
    }

    #[test]
    fn prime_above_five() {
        let f = field(-1, 2, 1, 5);
        let i = lemma_pi_qj(&f, &[5], &[], Reading::Verbatim).unwrap();
        assert_eq!(i.norm(), 5);
    }

    #[test]
    fn prime_above_three_dividing_a() {
        let f = field(3, 2, 1, 5);
        let i = lemma_pi_qj(&f, &[], &[3], Reading::Verbatim).unwrap();
        assert_eq!(i.norm(), 9);
        assert!(lemma_pi_qj(&f, &[], &[5], Reading::Verbatim).is_err());
    }
}
