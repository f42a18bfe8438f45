//! Closed-form well-roundedness predicates, predicted minimal bases, and a harness
//! comparing them with exact enumeration.

use std::fmt;
use std::sync::Arc;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::decompose::decompose_prime;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::IdealLattice;
use crate::lattice::{wr_report, WrReport};
use crate::linalg::rank_i64;
use crate::numtheory::{
    adapted_eisenstein_rep, eisenstein_norm, factorize, is_prime, is_quadratic_residue, is_squarefree,
};
use crate::order::Elem;
use crate::quartic::QuarticField;
use crate::quartic_bases::build_pi_qj;

/// Deliberate corruption of a predicate, used to check that the harness notices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum Fault {
    #[default]
    None,
    /// Doubles the upper bound of every cubic interval condition.
    DoubleUpperBound,
}

impl Fault {
    fn upper(&self) -> i128 {
        match self {
            Fault::None => 1,
            Fault::DoubleUpperBound => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CubicKind {
    /// The orthogonal ideal of norm `m^2` or `m^2 / 27`.
    Square,
    /// The ideal of squarefree norm `q`.
    Squarefree,
    /// The ideal of norm `3 q^2 q'` when `9 | m`.
    Mixed,
    /// The prime above 3 alone, `9 | m`.
    P0Alone,
}

#[derive(Clone, Debug)]
pub struct CubicWrCase {
    pub kind: CubicKind,
    pub q: u64,
    pub q_prime: Option<u64>,
    pub predicted: bool,
    /// Galois orbit `{k, sigma k, sigma^2 k}` in integral coordinates.
    pub basis: Option<Vec<Elem>>,
    pub ideal: IdealLattice,
}

impl CubicWrCase {
    pub fn label(&self) -> String {
        match (self.kind, self.q_prime) {
            (CubicKind::Square, _) => "square".into(),
            (CubicKind::P0Alone, _) => "p0".into(),
            (_, Some(q2)) => format!("mixed q={} q'={q2}", self.q),
            _ => format!("squarefree q={}", self.q),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum QuarticKind {
    PiQj,
    Pi,
    Qj,
    Prime2,
}

#[derive(Clone, Debug)]
pub struct QuarticWrCase {
    pub kind: QuarticKind,
    pub primes_i: Vec<u64>,
    pub primes_j: Vec<u64>,
    pub predicted: bool,
    /// Verdict of the criterion read literally where that reading differs: `b` odd
    /// for product ideals, the bare parameter test for primes above 2.
    pub literal: Option<bool>,
    pub bound_set: Option<[i128; 6]>,
    pub ideal: IdealLattice,
}

impl QuarticWrCase {
    pub fn label(&self) -> String {
        let list = |v: &[u64]| v.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(".");
        match self.kind {
            QuarticKind::Prime2 => {
                let h: Vec<String> = self.ideal.hnf_row_major().iter().map(|x| x.to_string()).collect();
                format!("prime2 hnf={}", h.join(","))
            }
            QuarticKind::Pi => format!("P_I I={}", list(&self.primes_i)),
            QuarticKind::Qj => format!("Q_J J={}", list(&self.primes_j)),
            QuarticKind::PiQj => format!("P_IQ_J I={} J={}", list(&self.primes_i), list(&self.primes_j)),
        }
    }
}

fn cubic(field: &Field) -> Result<&crate::cubic::CubicField> {
    field
        .as_cubic()
        .ok_or_else(|| Error::InvalidArgument("expected a cubic field".into()))
}

fn quartic(field: &Field) -> Result<&QuarticField> {
    field
        .as_quartic()
        .ok_or_else(|| Error::InvalidArgument("expected a quartic field".into()))
}

fn orbit(field: &Field, x: Elem) -> Vec<Elem> {
    let o = field.order();
    let s = o.sigma(&x);
    let s2 = o.sigma(&s);
    vec![x, s, s2]
}

/// The single prime above a ramified `p`.
fn ramified_prime(field: &Arc<Field>, p: u64) -> Result<IdealLattice> {
    let dec = decompose_prime(field, p)?;
    match dec.factors.as_slice() {
        [one] if one.e > 1 => Ok(one.ideal.clone()),
        _ => Err(Error::InvalidArgument(format!("{p} is not ramified in {}", field.id()))),
    }
}

fn product_over(field: &Arc<Field>, primes: &[u64], e: u32) -> Result<IdealLattice> {
    let mut acc = IdealLattice::unit(field);
    for &p in primes {
        acc = acc.mul_ideals(&ramified_prime(field, p)?.power(e)?)?;
    }
    Ok(acc)
}

/// `alpha = -n (mod P_I)` for every prime `P_I` above a divisor of `m` prime to 3.
fn alpha_plus(field: &Field, n: i64) -> Elem {
    let o = field.order();
    o.add(&o.basis_vector(1), &o.from_int(n))
}

/// The ideal of norm `m^2` (`9` prime to `m`) or `m^2/27` (`9 | m`) with its orthogonal
/// minimal orbit.
pub fn cubic_thm1(field: &Arc<Field>) -> Result<CubicWrCase> {
    let cf = cubic(field)?;
    let o = field.order();
    let m = cf.m as i64;
    let alpha = o.basis_vector(1);
    let primes: Vec<u64> = factorize(cf.m).primes().into_iter().filter(|&p| p != 3).collect();
    let (ideal, kappa) = if cf.nine_divides_m {
        let ideal = ramified_prime(field, 3)?.mul_ideals(&product_over(field, &primes, 2)?)?;
        let (a, b) = cf
            .alpha_square_coeffs()
            .ok_or_else(|| Error::Internal("alpha^2 has no expected form".into()))?;
        let sa = o.sigma(&alpha);
        let kappa = o.add(&o.from_int(m / 9), &o.add(&o.scale(a, &alpha), &o.scale(b, &sa)));
        (ideal, kappa)
    } else {
        let ideal = product_over(field, &primes, 2)?;
        let diff = o.add(&alpha, &o.scale(-1, &o.sigma(&alpha)));
        let kappa = o.add(&o.from_int(m), &o.scale(-1, &o.mul(&diff, &diff)));
        (ideal, kappa)
    };
    Ok(CubicWrCase {
        kind: CubicKind::Square,
        q: cf.m,
        q_prime: None,
        predicted: true,
        basis: Some(orbit(field, kappa)),
        ideal,
    })
}

fn check_divisor(m: u64, q: u64) -> Result<()> {
    if q == 0 || !m.is_multiple_of(q) || !is_squarefree(q) {
        return Err(Error::InvalidArgument(format!("{q} is not a squarefree divisor of {m}")));
    }
    Ok(())
}

/// `lo <= x <= hi` with both bounds given as fractions `num / den`.
fn within(x: i128, lo: (i128, i128), hi: (i128, i128)) -> bool {
    x * lo.1 >= lo.0 && x * hi.1 <= hi.0
}

/// Whether the unique ideal of squarefree norm `q | m` is WR.
pub fn cubic_thm2_predicate(field: &Field, q: u64) -> Result<bool> {
    cubic_thm2_predicate_with(field, q, Fault::None)
}

pub fn cubic_thm2_predicate_with(field: &Field, q: u64, fault: Fault) -> Result<bool> {
    let cf = cubic(field)?;
    check_divisor(cf.m, q)?;
    let m = cf.m as i128;
    let k = fault.upper();
    if cf.nine_divides_m {
        if !q.is_multiple_of(3) {
            return Ok(false);
        }
        let p = (q / 3) as i128;
        Ok(within(p * p, (m, 36), (4 * k * m, 9)))
    } else {
        let q = q as i128;
        Ok(within(q * q, (m, 4), (4 * k * m, 1)))
    }
}

pub fn cubic_thm2_case(field: &Arc<Field>, q: u64) -> Result<CubicWrCase> {
    cubic_thm2_case_with(field, q, Fault::None)
}

pub fn cubic_thm2_case_with(field: &Arc<Field>, q: u64, fault: Fault) -> Result<CubicWrCase> {
    let cf = cubic(field)?;
    let predicted = cubic_thm2_predicate_with(field, q, fault)?;
    let ideal = product_over(field, &factorize(q).primes(), 1)?;
    let kind = if cf.nine_divides_m && q == 3 { CubicKind::P0Alone } else { CubicKind::Squarefree };
    let basis = predicted.then(|| {
        if cf.nine_divides_m {
            // p_I + a + sigma(a) for the root a = 1 (mod P_0), which is -alpha here
            let o = field.order();
            let alpha = o.basis_vector(1);
            let s = o.add(&alpha, &o.sigma(&alpha));
            orbit(field, o.add(&o.from_int((q / 3) as i64), &o.scale(-1, &s)))
        } else {
            orbit(field, alpha_plus(field, (q as i64 - 1) / 3))
        }
    });
    Ok(CubicWrCase { kind, q, q_prime: None, predicted, basis, ideal })
}

fn check_mixed(field: &Field, q: u64, q2: u64) -> Result<u64> {
    let cf = cubic(field)?;
    if !cf.nine_divides_m {
        return Err(Error::InvalidArgument("mixed ideals need 9 | m".into()));
    }
    let rest = cf.m / 9;
    if q <= 1 || q2 <= 1 || crate::numtheory::gcd(q as i128, q2 as i128) != 1 || rest % (q * q2) != 0 {
        return Err(Error::InvalidArgument(format!(
            "({q}, {q2}) are not coprime divisors of {rest} greater than 1"
        )));
    }
    Ok(cf.m)
}

/// Whether the ideal of norm `3 q^2 q'` is WR.
pub fn cubic_thm3_predicate(field: &Field, q: u64, q2: u64) -> Result<bool> {
    cubic_thm3_predicate_with(field, q, q2, Fault::None)
}

pub fn cubic_thm3_predicate_with(field: &Field, q: u64, q2: u64, fault: Fault) -> Result<bool> {
    let m = check_mixed(field, q, q2)? as i128;
    let v = q as i128 * (q2 as i128).pow(2);
    Ok(within(v, (m, 36), (4 * fault.upper() * m, 9)))
}

pub fn cubic_thm3_case(field: &Arc<Field>, q: u64, q2: u64) -> Result<CubicWrCase> {
    cubic_thm3_case_with(field, q, q2, Fault::None)
}

pub fn cubic_thm3_case_with(field: &Arc<Field>, q: u64, q2: u64, fault: Fault) -> Result<CubicWrCase> {
    let cf = cubic(field)?;
    let predicted = cubic_thm3_predicate_with(field, q, q2, fault)?;
    let ideal = ramified_prime(field, 3)?
        .mul_ideals(&product_over(field, &factorize(q).primes(), 2)?)?
        .mul_ideals(&product_over(field, &factorize(q2).primes(), 1)?)?;
    let basis = if predicted {
        let (a, b) = cf
            .alpha_square_coeffs()
            .ok_or_else(|| Error::Internal("alpha^2 has no expected form".into()))?;
        // coefficients for the root -alpha, which is 1 mod P_0
        let (a, b) = (-a, -b);
        let (x, y) = adapted_eisenstein_rep(eisenstein_norm(a, b) as u64, a, b, q)?;
        let o = field.order();
        let alpha = o.basis_vector(1);
        let lin = o.add(&o.scale(x, &alpha), &o.scale(y, &o.sigma(&alpha)));
        Some(orbit(field, o.add(&o.from_int((q * q2) as i64), &o.scale(-1, &lin))))
    } else {
        None
    };
    Ok(CubicWrCase { kind: CubicKind::Mixed, q, q_prime: Some(q2), predicted, basis, ideal })
}

fn squarefree_divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for p in factorize(n).primes() {
        let more: Vec<u64> = out.iter().map(|d| d * p).collect();
        out.extend(more);
    }
    out.sort_unstable();
    out
}

/// Every cubic case applicable to the field.
pub fn cubic_cases(field: &Arc<Field>, fault: Fault) -> Result<Vec<CubicWrCase>> {
    let cf = cubic(field)?;
    let mut out = vec![cubic_thm1(field)?];
    for q in squarefree_divisors(cf.m) {
        out.push(cubic_thm2_case_with(field, q, fault)?);
    }
    if cf.nine_divides_m {
        let ds: Vec<u64> = squarefree_divisors(cf.m / 9).into_iter().filter(|&d| d > 1).collect();
        for &q in &ds {
            for &q2 in &ds {
                if crate::numtheory::gcd(q as i128, q2 as i128) == 1 {
                    out.push(cubic_thm3_case_with(field, q, q2, fault)?);
                }
            }
        }
    }
    Ok(out)
}

fn product(v: &[u64]) -> i128 {
    v.iter().map(|&p| p as i128).product()
}

/// The six comparison values bounding `p_I^2 q_J^2 + q_J^2 d + 2|a| d` from above.
pub fn bound_set(q: &QuarticField, p_i: i128, q_j: i128) -> [i128; 6] {
    let (a, d) = (q.a.abs() as i128, q.d as i128);
    let (p2, q2) = (p_i * p_i, q_j * q_j);
    [
        16 * q2 * d,
        8 * a * d,
        4 * q2 * d + 4 * a * d,
        16 * p2 * q2,
        4 * p2 * q2 + 4 * a * d,
        4 * p2 * q2 + 4 * q2 * d,
    ]
}

fn piqj_inequality(q: &QuarticField, p_i: i128, q_j: i128) -> bool {
    let (a, d) = (q.a.abs() as i128, q.d as i128);
    let lhs = p_i * p_i * q_j * q_j + q_j * q_j * d + 2 * a * d;
    bound_set(q, p_i, q_j).iter().all(|&v| lhs <= v)
}

fn congruences(q: &QuarticField, b_even: bool) -> bool {
    q.d.rem_euclid(4) == 1 && (q.b.rem_euclid(2) == 0) == b_even && (q.a + q.b).rem_euclid(4) == 1
}

fn check_admissible(q: &QuarticField, primes_i: &[u64], primes_j: &[u64]) -> Result<()> {
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
        if p == 2 || !is_prime(p) || q.a % p as i64 != 0 || is_quadratic_residue(q.d, p)? {
            return Err(Error::InvalidArgument(format!(
                "{p} is not an odd prime divisor of a = {} with d a non-residue",
                q.a
            )));
        }
    }
    Ok(())
}

/// Whether `P_I Q_J` is WR.
pub fn quartic_piqj_predicate(field: &Field, primes_i: &[u64], primes_j: &[u64]) -> Result<bool> {
    let q = quartic(field)?;
    check_admissible(q, primes_i, primes_j)?;
    Ok(congruences(q, true) && piqj_inequality(q, product(primes_i), product(primes_j)))
}

/// The same criterion with the congruence on `b` read as `b` odd.
pub fn quartic_piqj_predicate_b_odd(field: &Field, primes_i: &[u64], primes_j: &[u64]) -> Result<bool> {
    let q = quartic(field)?;
    check_admissible(q, primes_i, primes_j)?;
    Ok(congruences(q, false) && piqj_inequality(q, product(primes_i), product(primes_j)))
}

/// Whether `P_I` is WR.
pub fn quartic_pi_predicate(field: &Field, primes_i: &[u64]) -> Result<bool> {
    let q = quartic(field)?;
    check_admissible(q, primes_i, &[])?;
    if !congruences(q, true) {
        return Ok(false);
    }
    let p2 = product(primes_i).pow(2);
    let d = q.d as i128;
    Ok(match q.a.abs() {
        1 => within(p2, (d, 5), (5 * d, 1)),
        3 => within(p2, (d, 1), (9 * d, 1)),
        5 => within(p2, (7 * d, 3), (5 * d, 1)),
        _ => false,
    })
}

/// Whether `Q_J` is WR.
pub fn quartic_qj_predicate(field: &Field, primes_j: &[u64]) -> Result<bool> {
    let q = quartic(field)?;
    check_admissible(q, &[], primes_j)?;
    let a = q.a.abs() as i128;
    Ok(congruences(q, true) && (q.d, q.b, q.c) == (5, 2, 1) && within(product(primes_j).pow(2), (a, 1), (5 * a, 1)))
}

/// The prime above `p` when it is the only one. Odd `p` follows the residue
/// conditions; above 2 the factorization itself decides.
pub fn quartic_unique_prime(field: &Arc<Field>, p: u64) -> Result<Option<IdealLattice>> {
    let q = quartic(field)?;
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    let unique = if p == 2 {
        decompose_prime(field, 2)?.factors.len() == 1
    } else {
        let pi = p as i64;
        let divides = |x: i64| x % pi == 0;
        let nonresidue = !divides(q.d) && !is_quadratic_residue(q.d, p)?;
        divides(q.d)
            || (divides(q.a) && nonresidue)
            || (!divides(q.a) && !divides(q.b) && !divides(q.c) && nonresidue)
    };
    if !unique {
        return Ok(None);
    }
    let dec = decompose_prime(field, p)?;
    match dec.factors.as_slice() {
        [one] => Ok(Some(one.ideal.clone())),
        _ => Err(Error::Internal(format!("{} primes above {p}", dec.factors.len()))),
    }
}

/// Whether a prime above 2 is WR, by the parameter test alone.
pub fn prime2_wr_predicate(field: &Field) -> Result<bool> {
    let q = quartic(field)?;
    Ok((q.a, q.b, q.c, q.d) == (1, 2, 1, 5))
}

/// Whether a prime above 2 is WR, also covering inert 2, where the prime is `2 O_F`
/// and is WR exactly when `O_F` is.
pub fn prime2_wr_complete(field: &Arc<Field>) -> Result<bool> {
    if prime2_wr_predicate(field)? {
        return Ok(true);
    }
    let inert = decompose_prime(field, 2)?.shape == crate::decompose::Shape::Inert;
    Ok(inert && quartic_piqj_predicate(field, &[], &[])?)
}

fn quartic_case(field: &Arc<Field>, primes_i: Vec<u64>, primes_j: Vec<u64>) -> Result<QuarticWrCase> {
    let q = quartic(field)?;
    let (ideal, _) = build_pi_qj(field, &primes_i, &primes_j)?;
    let (kind, predicted) = match (primes_i.is_empty(), primes_j.is_empty()) {
        (false, true) => (QuarticKind::Pi, quartic_pi_predicate(field, &primes_i)?),
        (true, false) => (QuarticKind::Qj, quartic_qj_predicate(field, &primes_j)?),
        _ => (QuarticKind::PiQj, quartic_piqj_predicate(field, &primes_i, &primes_j)?),
    };
    Ok(QuarticWrCase {
        kind,
        literal: Some(quartic_piqj_predicate_b_odd(field, &primes_i, &primes_j)?),
        bound_set: Some(bound_set(q, product(&primes_i), product(&primes_j))),
        primes_i,
        primes_j,
        predicted,
        ideal,
    })
}

fn subsets(v: &[u64]) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for &p in v {
        let more: Vec<Vec<u64>> = out
            .iter()
            .map(|s| {
                let mut t = s.clone();
                t.push(p);
                t
            })
            .collect();
        out.extend(more);
    }
    out.sort();
    out
}

/// Every `P_I Q_J`, the ring of integers included, and every prime above 2.
pub fn quartic_cases(field: &Arc<Field>) -> Result<Vec<QuarticWrCase>> {
    let q = quartic(field)?;
    let primes_i = factorize(q.d as u64).primes();
    let mut primes_j = Vec::new();
    for p in factorize(q.a.unsigned_abs()).primes() {
        if p != 2 && q.d % p as i64 != 0 && !is_quadratic_residue(q.d, p)? {
            primes_j.push(p);
        }
    }
    let mut out = Vec::new();
    for i in subsets(&primes_i) {
        for j in subsets(&primes_j) {
            out.push(quartic_case(field, i.clone(), j)?);
        }
    }
    let predicted = prime2_wr_complete(field)?;
    let literal = prime2_wr_predicate(field)?;
    for f in decompose_prime(field, 2)?.factors {
        out.push(QuarticWrCase {
            kind: QuarticKind::Prime2,
            primes_i: Vec::new(),
            primes_j: Vec::new(),
            predicted,
            literal: Some(literal),
            bound_set: None,
            ideal: f.ideal,
        });
    }
    Ok(out)
}

/// Outcome of comparing a closed-form verdict with enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheck {
    pub field_id: String,
    pub case: String,
    pub ideal_norm: u64,
    pub predicted: bool,
    pub enumerated: bool,
    pub minimum: String,
    /// Every predicted basis vector lies in the ideal and attains the minimum,
    /// and together they have full rank.
    pub basis_attains_minimum: Option<bool>,
    /// Predicted basis has a diagonal Gram matrix (orthogonal cases only).
    pub gram_diagonal: Option<bool>,
    /// Verdict of the literal reading, where one is tracked.
    pub literal: Option<bool>,
    pub pass: bool,
}

impl fmt::Display for CrossCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} N={} predicted={} enumerated={} min={}",
            if self.pass { "PASS" } else { "FAIL" },
            self.field_id,
            self.case,
            self.ideal_norm,
            self.predicted,
            self.enumerated,
            self.minimum
        )
    }
}

fn compare(
    ideal: &IdealLattice,
    case: String,
    predicted: bool,
    basis: Option<&[Elem]>,
    orthogonal: bool,
    literal: Option<bool>,
) -> (CrossCheck, WrReport) {
    let report = wr_report(ideal);
    let o = ideal.field().order();
    let min = report.minimum_rat();
    let basis_ok = basis.map(|b| {
        b.iter().all(|x| ideal.contains(x) && crate::linalg::Rat::from_integer(o.length_sq(x).into()) == min)
            && rank_i64(b) == ideal.dim()
    });
    let diag = (orthogonal && basis.is_some()).then(|| {
        let b = basis.expect("checked");
        (0..b.len()).all(|i| (i + 1..b.len()).all(|j| o.bilinear(&b[i], &b[j]).is_zero()))
    });
    let pass = report.is_wr == predicted && basis_ok != Some(false) && diag != Some(false);
    let check = CrossCheck {
        field_id: ideal.field().id(),
        case,
        ideal_norm: ideal.norm(),
        predicted,
        enumerated: report.is_wr,
        minimum: report.minimum.clone(),
        basis_attains_minimum: basis_ok,
        gram_diagonal: diag,
        literal,
        pass,
    };
    (check, report)
}

pub fn crosscheck_cubic(case: &CubicWrCase) -> CrossCheck {
    let orth = case.kind == CubicKind::Square;
    compare(&case.ideal, case.label(), case.predicted, case.basis.as_deref(), orth, None).0
}

pub fn crosscheck_quartic(case: &QuarticWrCase) -> CrossCheck {
    compare(&case.ideal, case.label(), case.predicted, None, false, case.literal).0
}

/// Cross-checks every applicable case of one field.
pub fn crosscheck_field(field: &Arc<Field>, fault: Fault) -> Result<Vec<CrossCheck>> {
    match field.as_ref() {
        Field::Cubic(_) => Ok(cubic_cases(field, fault)?.iter().map(crosscheck_cubic).collect()),
        Field::Quartic(_) => Ok(quartic_cases(field)?.iter().map(crosscheck_quartic).collect()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cubic_field(m: u64) -> Arc<Field> {
        Arc::new(Field::cubic(m).unwrap())
    }

    #[test]
    fn thm2_spot_values() {
        assert!(cubic_thm2_predicate(&cubic_field(91), 7).unwrap());
        assert!(!cubic_thm2_predicate(&cubic_field(7), 7).unwrap());
        assert!(!cubic_thm2_predicate(&cubic_field(63), 21).unwrap());
        assert!(cubic_thm2_predicate(&cubic_field(9), 3).unwrap());
        assert!(cubic_thm2_predicate(&cubic_field(91), 9).is_err());
    }

    #[test]
    fn thm3_spot_values() {
        let f = cubic_field(819);
        assert!(!cubic_thm3_predicate(&f, 7, 13).unwrap());
        assert!(!cubic_thm3_predicate(&f, 13, 7).unwrap());
        assert!(cubic_thm3_predicate(&f, 7, 7).is_err());
    }

    #[test]
    fn bound_set_has_six_entries() {
        let f = Field::quartic(-1, 2, 1, 5).unwrap();
        let q = f.as_quartic().unwrap();
        assert_eq!(bound_set(q, 5, 1), [80, 40, 40, 400, 120, 120]);
    }
}
