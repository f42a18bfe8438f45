//! Prime decomposition: closed-form rules, Dedekind factorization, and a
//! structure-based oracle on the residue algebra `O/pO`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::fp::{self, md};
use crate::ideal::IdealLattice;
use crate::linalg::{det_bigint, hnf_mod};
use crate::numtheory::{is_prime, is_quadratic_residue, sqrt_mod};
use crate::order::{Elem, Order};
use crate::quartic::BasisCase;
use crate::quartic_bases::{self, Reading};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Shape {
    /// `P^n`, totally ramified.
    TotallyRamified,
    /// `P^2` (quartic, `f = 2`).
    RamifiedInert,
    /// `P1^2 P2^2`.
    RamifiedSplit,
    Inert,
    /// `P1 P2` (quartic, `f = 2`).
    Split2,
    /// `P1 ... Pn`.
    TotallySplit,
}

impl Shape {
    pub fn from_type(n: usize, g: usize, e: u32) -> Result<Shape> {
        Ok(match (n, g, e) {
            (3, 1, 3) | (4, 1, 4) => Shape::TotallyRamified,
            (4, 1, 2) => Shape::RamifiedInert,
            (4, 2, 2) => Shape::RamifiedSplit,
            (_, 1, 1) => Shape::Inert,
            (4, 2, 1) => Shape::Split2,
            (3, 3, 1) | (4, 4, 1) => Shape::TotallySplit,
            _ => {
                return Err(Error::Internal(format!(
                    "impossible splitting type g = {g}, e = {e} in degree {n}"
                )))
            }
        })
    }

    pub fn tag(&self, n: usize) -> &'static str {
        match (self, n) {
            (Shape::TotallyRamified, 3) => "P^3",
            (Shape::TotallyRamified, _) => "P^4",
            (Shape::RamifiedInert, _) => "P^2",
            (Shape::RamifiedSplit, _) => "P1^2P2^2",
            (Shape::Inert, _) => "inert",
            (Shape::Split2, _) => "P1P2",
            (Shape::TotallySplit, 3) => "P1P2P3",
            (Shape::TotallySplit, _) => "P1P2P3P4",
        }
    }

    pub fn is_ramified(&self) -> bool {
        matches!(self, Shape::TotallyRamified | Shape::RamifiedInert | Shape::RamifiedSplit)
    }
}

/// How a decomposition was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Source {
    /// Explicit generators or bases from a closed-form rule.
    Lemma,
    /// Factoring a minimal polynomial mod `p`.
    Dedekind,
    /// Maximal ideals of the residue algebra.
    Oracle,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Source::Lemma => "lemma",
            Source::Dedekind => "dedekind",
            Source::Oracle => "oracle",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeFactor {
    pub ideal: IdealLattice,
    pub e: u32,
    pub f: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeDecomposition {
    pub p: u64,
    pub factors: Vec<PrimeFactor>,
    pub shape: Shape,
    pub source: Source,
    /// Set when a closed-form construction was rejected by validation.
    pub note: Option<String>,
    /// How the accepted closed form was read.
    pub reading: Reading,
}

impl PrimeDecomposition {
    fn assemble(p: u64, mut ideals: Vec<IdealLattice>, source: Source) -> Result<Self> {
        if ideals.is_empty() {
            return Err(Error::Internal(format!("no primes above {p}")));
        }
        ideals.sort_by(|a, b| a.hnf().cmp(b.hnf()));
        ideals.dedup();
        let field = ideals[0].field().clone();
        let n = field.degree();
        let po = IdealLattice::from_generators(&field, &[field.order().from_int(p as i64)])?;
        let mut factors = Vec::new();
        for ideal in ideals {
            let f = log_p(ideal.norm(), p)
                .ok_or_else(|| Error::Internal(format!("norm {} is not a power of {p}", ideal.norm())))?;
            let mut e = 0;
            let mut pow = IdealLattice::unit(&field);
            let pn = (p as u128).pow(n as u32);
            loop {
                if pow.norm() as u128 * ideal.norm() as u128 > pn {
                    break;
                }
                let next = pow.mul_ideals(&ideal)?;
                if !next.contains_lattice(&po) {
                    break;
                }
                pow = next;
                e += 1;
                if e > n as u32 {
                    return Err(Error::Internal("ramification exceeds the degree".into()));
                }
            }
            factors.push(PrimeFactor { ideal, e, f });
        }
        let e = factors[0].e;
        let shape = Shape::from_type(n, factors.len(), e)?;
        Ok(PrimeDecomposition { p, factors, shape, source, note: None, reading: Reading::Verbatim })
    }

    pub fn degree(&self) -> usize {
        self.factors[0].ideal.dim()
    }

    pub fn tag(&self) -> &'static str {
        self.shape.tag(self.degree())
    }

    /// `prod P^e = pO` and `sum e f = n`.
    pub fn is_consistent(&self) -> bool {
        let field = self.factors[0].ideal.field().clone();
        let n = field.degree() as u32;
        if self.factors.iter().map(|f| f.e * f.f).sum::<u32>() != n {
            return false;
        }
        let mut prod = IdealLattice::unit(&field);
        for f in &self.factors {
            match f.ideal.power(f.e).and_then(|q| prod.mul_ideals(&q)) {
                Ok(x) => prod = x,
                Err(_) => return false,
            }
        }
        let po = IdealLattice::from_generators(&field, &[field.order().from_int(self.p as i64)]);
        po.is_ok_and(|po| po == prod)
    }

    pub fn ideals(&self) -> Vec<IdealLattice> {
        self.factors.iter().map(|f| f.ideal.clone()).collect()
    }

    /// Same primes with the same exponents, regardless of how they were found.
    pub fn same_primes(&self, other: &Self) -> bool {
        self.p == other.p
            && self.shape == other.shape
            && self.factors.len() == other.factors.len()
            && self
                .factors
                .iter()
                .zip(&other.factors)
                .all(|(a, b)| a.ideal == b.ideal && a.e == b.e && a.f == b.f)
    }
}

fn log_p(mut n: u64, p: u64) -> Option<u32> {
    let mut k = 0;
    while n > 1 {
        if !n.is_multiple_of(p) {
            return None;
        }
        n /= p;
        k += 1;
    }
    Some(k)
}

fn reduce(x: &[i64], p: u64) -> Vec<u64> {
    x.iter().map(|&v| md(v as i128, p)).collect()
}

fn mul_mod(o: &Order, x: &[u64], y: &[u64], p: u64) -> Vec<u64> {
    let xi: Elem = x.iter().map(|&v| v as i64).collect();
    let yi: Elem = y.iter().map(|&v| v as i64).collect();
    reduce(&o.mul(&xi, &yi), p)
}

fn pow_mod(o: &Order, x: &[u64], mut e: u64, p: u64) -> Vec<u64> {
    let mut base = x.to_vec();
    let mut acc = reduce(&o.one(), p);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(o, &acc, &base, p);
        }
        base = mul_mod(o, &base, &base, p);
        e >>= 1;
    }
    acc
}

/// Ideal of `O/pO` generated by a subspace and extra elements.
fn ideal_span(o: &Order, base: &[Vec<u64>], extra: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = o.n();
    let mut rows = base.to_vec();
    for x in extra {
        for j in 0..n {
            let w = reduce(&o.basis_vector(j), p);
            rows.push(mul_mod(o, x, &w, p));
        }
    }
    fp::rref(&rows, p)
}

/// Maximal ideals of `O/pO`, lifted to `O`. No bound on `p`.
pub(crate) fn residue_algebra_primes(field: &Arc<Field>, p: u64) -> Result<PrimeDecomposition> {
    let o = field.order();
    let n = o.n();
    // Frobenius x -> x^p as a matrix acting on columns
    let mut frob = vec![vec![0u64; n]; n];
    for j in 0..n {
        let w = reduce(&o.basis_vector(j), p);
        let img = pow_mod(o, &w, p, p);
        for i in 0..n {
            frob[i][j] = img[i];
        }
    }
    let mut k = 1;
    let mut pk = p as u128;
    let mut fk = frob.clone();
    while pk < n as u128 {
        fk = fp::mat_mul(&fk, &frob, p);
        pk *= p as u128;
        k += 1;
    }
    let _ = k;
    let radical = fp::rref(&fp::kernel(&fk, n, p), p);
    // B = { x : (F - I) x in radical }
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut r: Vec<u64> = (0..n)
            .map(|j| md(frob[i][j] as i128 - i128::from(i == j), p))
            .collect();
        for v in &radical {
            r.push(md(-(v[i] as i128), p));
        }
        rows.push(r);
    }
    let ker = fp::kernel(&rows, n + radical.len(), p);
    let fixed: Vec<Vec<u64>> = fp::rref(
        &ker.iter().map(|v| v[..n].to_vec()).collect::<Vec<_>>(),
        p,
    );
    let mut parts: Vec<Vec<Vec<u64>>> = vec![radical.clone()];
    let one = reduce(&o.one(), p);
    for b in &fixed {
        let mut next: Vec<Vec<Vec<u64>>> = Vec::new();
        for part in &parts {
            for c in 0..p {
                let x: Vec<u64> = b
                    .iter()
                    .zip(&one)
                    .map(|(&bi, &ui)| md(bi as i128 - c as i128 * ui as i128, p))
                    .collect();
                let cand = ideal_span(o, part, &[x], p);
                if cand.len() < n && !next.contains(&cand) {
                    next.push(cand);
                }
            }
        }
        parts = next;
    }
    let mut ideals = Vec::new();
    for part in parts {
        let mut cols: Vec<Vec<i128>> = (0..n)
            .map(|i| (0..n).map(|k| if k == i { p as i128 } else { 0 }).collect())
            .collect();
        for v in part {
            cols.push(v.iter().map(|&x| x as i128).collect());
        }
        let h = hnf_mod(&cols, n, p as i128);
        let gens: Vec<Elem> = (0..n).map(|j| (0..n).map(|i| h[i][j]).collect()).collect();
        ideals.push(IdealLattice::from_z_basis(field, &gens)?);
    }
    PrimeDecomposition::assemble(p, ideals, Source::Oracle)
}

/// Oracle decomposition from the maximal ideals of `O/pO`, for `p <= 97`.
pub fn stable_subspace_primes(field: &Arc<Field>, p: u64) -> Result<PrimeDecomposition> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    if p > 97 {
        return Err(Error::PrimeTooLarge(p));
    }
    residue_algebra_primes(field, p)
}

/// Characteristic polynomial of an integer matrix, low degree first, monic.
fn charpoly(m: &[Vec<i64>]) -> Vec<BigInt> {
    let n = m.len();
    let a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::from(1);
    let mut mk = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = BigInt::zero();
                for l in 0..n {
                    s += &a[i][l] * &mk[l][j];
                }
                if i == j {
                    s += &coeffs[n - k + 1];
                }
                next[i][j] = s;
            }
        }
        mk = next;
        let mut tr = BigInt::zero();
        for i in 0..n {
            for l in 0..n {
                tr += &a[i][l] * &mk[l][i];
            }
        }
        coeffs[n - k] = -tr / BigInt::from(k as i64);
    }
    coeffs
}

fn index_of(o: &Order, theta: &[i64]) -> BigInt {
    let n = o.n();
    let mut pw = o.one();
    let mut cols = Vec::with_capacity(n);
    for _ in 0..n {
        cols.push(pw.clone());
        pw = o.mul(&pw, theta);
    }
    let m: Vec<Vec<BigInt>> = (0..n).map(|i| (0..n).map(|j| BigInt::from(cols[j][i])).collect()).collect();
    det_bigint(&m).abs()
}

fn theta_candidates(n: usize) -> Vec<Elem> {
    let mut out = Vec::new();
    for j in 1..n {
        let mut e = vec![0; n];
        e[j] = 1;
        out.push(e);
    }
    let digits = [0i64, 1, -1, 2];
    let total = digits.len().pow((n - 1) as u32);
    for code in 0..total {
        let mut e = vec![0; n];
        let mut c = code;
        for slot in e.iter_mut().skip(1) {
            *slot = digits[c % digits.len()];
            c /= digits.len();
        }
        if !out.contains(&e) && e.iter().any(|&v| v != 0) {
            out.push(e);
        }
    }
    out
}

/// Kummer-Dedekind factorization with the first generator whose index is prime to `p`.
pub fn dedekind(field: &Arc<Field>, p: u64) -> Result<Option<PrimeDecomposition>> {
    let o = field.order();
    let n = o.n();
    let pb = BigInt::from(p);
    let Some(theta) = theta_candidates(n).into_iter().find(|t| {
        let idx = index_of(o, t);
        !idx.is_zero() && !(idx % &pb).is_zero()
    }) else {
        return Ok(None);
    };
    let cp = charpoly(&o.mult_matrix(&theta));
    let f: Vec<u64> = cp
        .iter()
        .map(|c| {
            let r = c % &pb;
            let r = if r.is_negative() { r + &pb } else { r };
            r.to_u64().expect("residue fits")
        })
        .collect();
    let factors = fp::factor_small(&f, p);
    let mut ideals = Vec::new();
    for (g, _) in &factors {
        // g(theta) in integral coordinates
        let reduce = |v: Elem| -> Elem { v.iter().map(|x| x.rem_euclid(p as i64)).collect() };
        let mut val = vec![0i64; n];
        let mut pw = o.one();
        for &c in g {
            val = reduce(o.add(&val, &o.scale(c as i64, &pw)));
            pw = reduce(o.mul(&pw, &theta));
        }
        ideals.push(IdealLattice::from_generators(field, &[o.from_int(p as i64), val])?);
    }
    PrimeDecomposition::assemble(p, ideals, Source::Dedekind).map(Some)
}

/// Dedekind when some generator allows it, the residue-algebra oracle otherwise.
pub fn generic_decomposition(field: &Arc<Field>, p: u64) -> Result<PrimeDecomposition> {
    match dedekind(field, p)? {
        Some(d) => Ok(d),
        None => residue_algebra_primes(field, p),
    }
}

/// Accepts a closed-form list of primes only if every lattice is an ideal, their
/// product is `pO`, and each is prime. Primality is certified by norm `p`, by a
/// shape matching the classification (all primes above `p` share one residue
/// degree), or else by the maximal ideals of the residue algebra.
fn accept_lemma(field: &Arc<Field>, p: u64, ideals: Vec<IdealLattice>) -> Result<Option<PrimeDecomposition>> {
    if ideals.iter().any(|i| !i.validate_ideal() || i.norm() == 1) {
        return Ok(None);
    }
    let Ok(dec) = PrimeDecomposition::assemble(p, ideals, Source::Lemma) else {
        return Ok(None);
    };
    if !dec.is_consistent() {
        return Ok(None);
    }
    let predicted = match field.as_ref() {
        Field::Quartic(_) if p != 2 => predicted_quartic_shape(field, p)?,
        _ => None,
    };
    if dec.factors.iter().all(|f| f.f == 1) || predicted == Some(dec.shape) {
        return Ok(Some(dec));
    }
    let reference = residue_algebra_primes(field, p)?;
    let mut same = reference.clone();
    same.source = Source::Lemma;
    Ok(dec.same_primes(&same).then_some(dec))
}

type Closed = Option<Result<Vec<IdealLattice>>>;

fn with_fallback(field: &Arc<Field>, p: u64, lemma: Closed, what: &str) -> Result<PrimeDecomposition> {
    with_readings(field, p, |_| lemma.clone(), what, &[Reading::Verbatim])
}

/// Tries the closed form under each reading in turn, then falls back.
fn with_readings<F>(field: &Arc<Field>, p: u64, lemma: F, what: &str, readings: &[Reading]) -> Result<PrimeDecomposition>
where
    F: Fn(Reading) -> Closed,
{
    let mut note = None;
    for &r in readings {
        match lemma(r) {
            None => return generic_decomposition(field, p),
            Some(Ok(ideals)) => match accept_lemma(field, p, ideals)? {
                Some(mut d) => {
                    d.reading = r;
                    return Ok(d);
                }
                None => {
                    note.get_or_insert_with(|| format!("{what}: closed form disagrees with the residue algebra"));
                }
            },
            Some(Err(e)) => {
                note.get_or_insert_with(|| format!("{what}: closed form failed ({e})"));
            }
        }
    }
    let mut d = generic_decomposition(field, p)?;
    d.note = note;
    Ok(d)
}

pub fn decompose_prime_cubic(field: &Arc<Field>, p: u64) -> Result<PrimeDecomposition> {
    let cubic = field
        .as_cubic()
        .ok_or_else(|| Error::InvalidArgument("expected a cubic field".into()))?;
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    let o = field.order();
    let alpha = o.basis_vector(1);
    if cubic.m % p != 0 {
        return generic_decomposition(field, p);
    }
    // df = (x + 1)^3 mod 3 when 9 | m
    let shift: i64 = if p == 3 {
        1
    } else if cubic.nine_divides_m {
        0
    } else {
        (p as i64 - 1) / 3
    };
    let gen = o.add(&alpha, &o.from_int(shift));
    let ideal = IdealLattice::from_generators(field, &[o.from_int(p as i64), gen])?;
    with_fallback(field, p, Some(Ok(vec![ideal])), "ramified prime generator")
}

/// The splitting shape predicted by the classification of odd primes, and by the
/// lemmata on primes above 2 (`None` where only the oracle decides).
pub fn predicted_quartic_shape(field: &Field, p: u64) -> Result<Option<Shape>> {
    let q = field
        .as_quartic()
        .ok_or_else(|| Error::InvalidArgument("expected a quartic field".into()))?;
    let pi = p as i64;
    let (a, b, c, d) = (q.a, q.b, q.c, q.d);
    let qr = |x: i64| is_quadratic_residue(x, p);
    if d % pi == 0 {
        return Ok(Some(Shape::TotallyRamified));
    }
    if p == 2 {
        return Ok(match (q.basis_case, d.rem_euclid(8)) {
            (BasisCase::II | BasisCase::III, 5) => Some(Shape::RamifiedInert),
            (BasisCase::II | BasisCase::III, _) => Some(Shape::RamifiedSplit),
            (_, 5) => Some(Shape::Inert),
            _ => None,
        });
    }
    Ok(Some(if a % pi == 0 {
        if qr(d)? {
            Shape::RamifiedSplit
        } else {
            Shape::RamifiedInert
        }
    } else if b % pi == 0 {
        if qr(a)? {
            Shape::TotallySplit
        } else {
            Shape::Split2
        }
    } else if c % pi == 0 {
        if qr(2 * a)? {
            Shape::TotallySplit
        } else {
            Shape::Split2
        }
    } else if !qr(d)? {
        Shape::Inert
    } else {
        let z = sqrt_mod(d, p)? as i64;
        let t = (a * d + a * b * z).rem_euclid(pi);
        if qr(t)? {
            Shape::TotallySplit
        } else {
            Shape::Split2
        }
    }))
}

pub fn decompose_prime_quartic(field: &Arc<Field>, p: u64) -> Result<PrimeDecomposition> {
    let q = field
        .as_quartic()
        .ok_or_else(|| Error::InvalidArgument("expected a quartic field".into()))?;
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    let o = field.order();
    let pi = p as i64;
    let (a, b, c, d) = (q.a, q.b, q.c, q.d);
    let two_gen = |x: Vec<crate::linalg::Rat>| -> Result<IdealLattice> {
        let g = o.from_field(&x)?;
        IdealLattice::from_generators(field, &[o.from_int(pi), g])
    };
    let el = |s: [i64; 4]| -> Vec<crate::linalg::Rat> { s.iter().map(|&v| crate::order::q(v)).collect() };
    let qr = |x: i64| is_quadratic_residue(x, p);
    if d % pi == 0 {
        let ideal = two_gen(el([0, 0, 1, 0]))?;
        return with_fallback(field, p, Some(Ok(vec![ideal])), "prime above a divisor of d");
    }
    if p == 2 {
        if q.basis_case == BasisCase::IV || q.basis_case == BasisCase::V {
            if d.rem_euclid(8) == 5 {
                let po = IdealLattice::from_generators(field, &[o.from_int(2)])?;
                return with_fallback(field, p, Some(Ok(vec![po])), "inert prime 2");
            }
            return residue_algebra_primes(field, 2);
        }
        return with_readings(field, p, |r| quartic_bases::primes_above_two(field, r), "primes above 2", &Reading::ALL);
    }
    if a % pi == 0 {
        if qr(d)? {
            return with_readings(
                field,
                p,
                |r| Some(quartic_bases::split_q_with(field, p, r).map(|v| v.to_vec())),
                "primes above a divisor of a",
                &Reading::ALL,
            );
        } else {
            return with_readings(
                field,
                p,
                |r| Some(quartic_bases::lemma_pi_qj(field, &[], &[p], r).map(|x| vec![x])),
                "prime above a divisor of a",
                &Reading::ALL,
            );
        }
    }
    if b % pi == 0 {
        return with_readings(
            field,
            p,
            |r| quartic_bases::divisor_b_primes(field, p, r),
            "primes above a divisor of b",
            &Reading::ALL,
        );
    }
    if c % pi == 0 {
        let lemma = if !qr(2 * a)? {
            Some(Ok(vec![
                two_gen(el([a * d, -a * b, 0, 0]))?,
                two_gen(el([a * d, a * b, 0, 0]))?,
            ]))
        } else {
            let l = sqrt_mod(2 * a, p)? as i64;
            let p1 = two_gen(el([-l * b, 0, 1, 0]))?;
            let p2 = two_gen(el([l * b, 0, 1, 0]))?;
            // the remaining two primes divide <p, beta^2>; take them from the oracle
            let rest = residue_algebra_primes(field, p)?;
            let mut v = vec![p1.clone(), p2.clone()];
            v.extend(rest.ideals().into_iter().filter(|x| *x != p1 && *x != p2));
            Some(Ok(v))
        };
        return with_fallback(field, p, lemma, "primes above a divisor of c");
    }
    if !qr(d)? {
        let po = IdealLattice::from_generators(field, &[o.from_int(pi)])?;
        return with_fallback(field, p, Some(Ok(vec![po])), "inert prime");
    }
    let z = sqrt_mod(d, p)? as i64;
    let plus = (a * d + a * b * z).rem_euclid(pi);
    let minus = (a * d - a * b * z).rem_euclid(pi);
    let lemma = if qr(plus)? {
        let t1 = sqrt_mod(plus, p)? as i64;
        let t2 = sqrt_mod(minus, p)? as i64;
        vec![
            two_gen(el([t1, 0, 1, 0]))?,
            two_gen(el([-t1, 0, 1, 0]))?,
            two_gen(el([t2, 0, 1, 0]))?,
            two_gen(el([-t2, 0, 1, 0]))?,
        ]
    } else {
        let ab = (a * b).rem_euclid(pi);
        vec![two_gen(el([ab * z, ab, 0, 0]))?, two_gen(el([ab * z, -ab, 0, 0]))?]
    };
    with_fallback(field, p, Some(Ok(lemma)), "primes of an unramified prime")
}

/// Dispatches on the field's degree.
pub fn decompose_prime(field: &Arc<Field>, p: u64) -> Result<PrimeDecomposition> {
    match field.as_ref() {
        Field::Cubic(_) => decompose_prime_cubic(field, p),
        Field::Quartic(_) => decompose_prime_quartic(field, p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charpoly_of_companion() {
        // companion of x^2 - 3x + 2
        let m = vec![vec![0, -2], vec![1, 3]];
        let c = charpoly(&m);
        assert_eq!(c, vec![BigInt::from(2), BigInt::from(-3), BigInt::from(1)]);
    }

    #[test]
    fn cubic_examples() {
        let f = Arc::new(Field::cubic(7).unwrap());
        let d = decompose_prime_cubic(&f, 7).unwrap();
        assert_eq!(d.tag(), "P^3");
        assert_eq!(d.source, Source::Lemma);
        assert_eq!(decompose_prime_cubic(&f, 2).unwrap().tag(), "inert");
        let g = Arc::new(Field::cubic(9).unwrap());
        let d = decompose_prime_cubic(&g, 3).unwrap();
        assert_eq!(d.tag(), "P^3");
        assert_eq!(d.source, Source::Lemma);
    }
}
