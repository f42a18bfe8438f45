//! Dense univariate polynomials over Q, coefficients stored low degree first.

use num_traits::{One, Zero};

use crate::linalg::Rat;

pub type RatPoly = Vec<Rat>;

pub fn trim(p: &mut RatPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub fn degree(p: &RatPoly) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn add(a: &[Rat], b: &[Rat]) -> RatPoly {
    let n = a.len().max(b.len());
    let mut r: RatPoly = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rat::zero);
            let y = b.get(i).cloned().unwrap_or_else(Rat::zero);
            x + y
        })
        .collect();
    trim(&mut r);
    r
}

pub fn scale(c: &Rat, a: &[Rat]) -> RatPoly {
    let mut r: RatPoly = a.iter().map(|x| c * x).collect();
    trim(&mut r);
    r
}

pub fn mul(a: &[Rat], b: &[Rat]) -> RatPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            r[i + j] += x * y;
        }
    }
    trim(&mut r);
    r
}

/// Quotient and remainder of `a` by nonzero `b`.
pub fn divrem(a: &[Rat], b: &[Rat]) -> (RatPoly, RatPoly) {
    let db = degree(&b.to_vec()).expect("division by the zero polynomial");
    let mut r: RatPoly = a.to_vec();
    trim(&mut r);
    let mut qt = vec![Rat::zero(); r.len().saturating_sub(db).max(1)];
    let lead = b[db].clone();
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = &r[dr] / &lead;
        for k in 0..=db {
            let t = &c * &b[k];
            r[dr - db + k] -= t;
        }
        qt[dr - db] = c;
        trim(&mut r);
    }
    trim(&mut qt);
    (qt, r)
}

pub fn rem(a: &[Rat], m: &[Rat]) -> RatPoly {
    divrem(a, m).1
}

pub fn mul_mod(a: &[Rat], b: &[Rat], m: &[Rat]) -> RatPoly {
    rem(&mul(a, b), m)
}

/// Inverse of `a` modulo `m` when they are coprime.
pub fn inv_mod(a: &[Rat], m: &[Rat]) -> Option<RatPoly> {
    let (mut r0, mut r1) = (m.to_vec(), rem(a, m));
    let (mut t0, mut t1): (RatPoly, RatPoly) = (Vec::new(), vec![Rat::one()]);
    while degree(&r1).is_some() {
        let (qt, r) = divrem(&r0, &r1);
        let t = add(&t0, &scale(&-Rat::one(), &mul(&qt, &t1)));
        r0 = std::mem::replace(&mut r1, r);
        t0 = std::mem::replace(&mut t1, t);
    }
    if degree(&r0) != Some(0) {
        return None;
    }
    let c = r0[0].recip();
    Some(rem(&scale(&c, &t0), m))
}

/// Evaluates `p` at the residue `x` modulo `m` (Horner).
pub fn compose_mod(p: &[Rat], x: &[Rat], m: &[Rat]) -> RatPoly {
    let mut acc: RatPoly = Vec::new();
    for c in p.iter().rev() {
        acc = add(&mul_mod(&acc, x, m), std::slice::from_ref(c));
    }
    acc
}

/// Pads to exactly `n` coefficients.
pub fn pad(mut p: RatPoly, n: usize) -> RatPoly {
    p.resize(n, Rat::zero());
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::q;

    #[test]
    fn inverse_mod_cubic() {
        let m = vec![q(1), q(-2), q(-1), q(1)];
        let a = vec![q(2), q(1)];
        let inv = inv_mod(&a, &m).unwrap();
        assert_eq!(mul_mod(&a, &inv, &m), vec![q(1)]);
    }
}
