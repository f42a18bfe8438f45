//! Integer arithmetic: factorization, modular square roots, conductors
//! of cyclic cubic fields and representations by the Eisenstein norm form.

use crate::error::{Error, Result};

/// Prime factorization as ascending `(prime, exponent)` pairs.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Factorization(pub Vec<(u64, u32)>);

impl Factorization {
    pub fn primes(&self) -> Vec<u64> {
        self.0.iter().map(|&(p, _)| p).collect()
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&(_, e)| e == 1)
    }

    pub fn value(&self) -> u128 {
        self.0.iter().map(|&(p, e)| (p as u128).pow(e)).product()
    }
}

/// A solution of `x^2 - xy + y^2 = target` with `x + y + 1 = 0 (mod 3)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EisensteinRep {
    pub x: i64,
    pub y: i64,
    pub target: u64,
}

pub fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Returns `(g, x, y)` with `a x + b y = g = gcd(a, b) >= 0`.
pub fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

pub fn mod_pow(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let m128 = m as u128;
    let mut b = base as u128 % m128;
    let mut acc: u128 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

pub fn mod_inv(a: i128, m: i128) -> Option<i128> {
    let (g, x, _) = ext_gcd(a.rem_euclid(m), m);
    (g == 1).then(|| x.rem_euclid(m))
}

fn reduce(a: i64, p: u64) -> u64 {
    a.rem_euclid(p as i64) as u64
}

/// Deterministic Miller-Rabin, exact for every 64-bit input.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &SMALL {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &SMALL {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    for c in 1u64.. {
        let f = |x: u64| (mul(x, x) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd(x.abs_diff(y) as i128, n as i128) as u64;
        }
        if d != n {
            return d;
        }
    }
    unreachable!()
}

const TRIAL_LIMIT: u64 = 1_000_000;

/// Trial division up to 10^6, then Pollard rho on what remains.
pub fn factorize(n: u64) -> Factorization {
    assert!(n >= 1, "factorize expects a positive integer");
    let mut out: Vec<(u64, u32)> = Vec::new();
    let mut n = n;
    let mut p = 2u64;
    while p * p <= n && p <= TRIAL_LIMIT {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        let mut stack = vec![n];
        let mut large = Vec::new();
        while let Some(k) = stack.pop() {
            if k == 1 {
                continue;
            }
            if is_prime(k) {
                large.push(k);
            } else {
                let f = pollard_rho(k);
                stack.push(f);
                stack.push(k / f);
            }
        }
        large.sort_unstable();
        for q in large {
            match out.last_mut() {
                Some((last, e)) if *last == q => *e += 1,
                _ => out.push((q, 1)),
            }
        }
    }
    Factorization(out)
}

pub fn is_squarefree(n: u64) -> bool {
    n >= 1 && factorize(n).is_squarefree()
}

pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    (2..=n).filter(|&k| sieve[k]).map(|k| k as u64).collect()
}

fn require_odd_prime(p: u64) -> Result<()> {
    if p == 2 || !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not an odd prime")));
    }
    Ok(())
}

/// Euler's criterion. Rejects `p | a`.
pub fn is_quadratic_residue(a: i64, p: u64) -> Result<bool> {
    require_odd_prime(p)?;
    let r = reduce(a, p);
    if r == 0 {
        return Err(Error::InvalidArgument(format!("{p} divides {a}")));
    }
    Ok(mod_pow(r, (p - 1) / 2, p) == 1)
}

/// Tonelli-Shanks; returns the smaller of the two roots.
pub fn sqrt_mod(a: i64, p: u64) -> Result<u64> {
    if !is_quadratic_residue(a, p)? {
        return Err(Error::InvalidArgument(format!(
            "{a} is not a quadratic residue mod {p}"
        )));
    }
    let n = reduce(a, p);
    let mut q = p - 1;
    let mut s = 0u32;
    while q.is_multiple_of(2) {
        q /= 2;
        s += 1;
    }
    let mut z = 2u64;
    while mod_pow(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mul = |x: u64, y: u64| ((x as u128 * y as u128) % p as u128) as u64;
    let mut m = s;
    let mut c = mod_pow(z, q, p);
    let mut t = mod_pow(n, q, p);
    let mut r = mod_pow(n, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul(t2, t2);
            i += 1;
        }
        let b = mod_pow(c, 1 << (m - i - 1), p);
        m = i;
        c = mul(b, b);
        t = mul(t, c);
        r = mul(r, b);
    }
    Ok(r.min(p - r))
}

/// Why `m` fails to be a conductor of a cyclic cubic field, if it does.
pub fn conductor_violation(m: u64) -> Option<String> {
    if m < 7 {
        return Some(format!("{m} is below the smallest conductor 7"));
    }
    for (p, e) in factorize(m).0 {
        if p == 3 {
            if e != 2 {
                return Some(format!("the power of 3 in {m} must be 0 or 9"));
            }
        } else if p % 3 != 1 {
            return Some(format!("prime factor {p} of {m} is not 1 mod 3"));
        } else if e != 1 {
            return Some(format!("prime factor {p} divides {m} more than once"));
        }
    }
    None
}

pub fn is_valid_conductor(m: u64) -> bool {
    conductor_violation(m).is_none()
}

pub fn enumerate_conductors(bound: u64) -> Vec<u64> {
    (7..=bound).filter(|&m| is_valid_conductor(m)).collect()
}

/// The pair `(a, b)` with `4m = a^2 + 3b^2` under the standard congruences,
/// smallest `b` first, then smallest `a`.
pub fn conductor_params(m: u64) -> Result<(i64, i64)> {
    if let Some(why) = conductor_violation(m) {
        return Err(Error::InvalidConductor(why));
    }
    let nine = m.is_multiple_of(9);
    let four_m = 4 * m as i64;
    let mut b = 1i64;
    while 3 * b * b <= four_m {
        let rest = four_m - 3 * b * b;
        let root = isqrt(rest as u64) as i64;
        if root * root == rest {
            let mut cands = vec![-root, root];
            cands.dedup();
            for a in cands {
                let ok = if nine {
                    a.rem_euclid(9) == 6 && matches!(b.rem_euclid(9), 3 | 6)
                } else {
                    a.rem_euclid(3) == 2 && b % 3 == 0
                };
                if ok {
                    return Ok((a, b));
                }
            }
        }
        b += 1;
    }
    Err(Error::InvalidConductor(format!(
        "no (a, b) satisfies 4*{m} = a^2 + 3b^2 with the required congruences"
    )))
}

pub fn isqrt(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).sqrt() as u64;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

pub fn eisenstein_norm(x: i64, y: i64) -> i64 {
    x * x - x * y + y * y
}

/// Smallest `|x|`, then smallest `|y|`, then smallest `(x, y)`.
pub fn eisenstein_rep(n: u64) -> Result<EisensteinRep> {
    if n == 0 {
        return Err(Error::InvalidArgument("target must be positive".into()));
    }
    let bound = isqrt(4 * n / 3) as i64 + 1;
    let mut best: Option<(i64, i64)> = None;
    let key = |(x, y): (i64, i64)| (x.abs(), y.abs(), x, y);
    for x in -bound..=bound {
        for y in -bound..=bound {
            if eisenstein_norm(x, y) == n as i64 && (x + y + 1).rem_euclid(3) == 0
                && best.is_none_or(|b| key((x, y)) < key(b)) {
                    best = Some((x, y));
                }
        }
    }
    best.map(|(x, y)| EisensteinRep { x, y, target: n })
        .ok_or_else(|| Error::InvalidArgument(format!("{n} is not of the form x^2 - xy + y^2")))
}

/// The twelve images of `(x, y)` under the unit group of Z[w] and conjugation,
/// where `(x, y)` stands for `x + y w` with `w^2 + w + 1 = 0`.
pub fn eisenstein_associates(x: i64, y: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::with_capacity(12);
    for (u, v) in [(x, y), (x - y, -y)] {
        // multiply by w repeatedly: (u + v w) w = -v + (u - v) w
        let (mut s, mut t) = (u, v);
        for _ in 0..3 {
            out.push((s, t));
            out.push((-s, -t));
            (s, t) = (-t, s - t);
        }
    }
    out
}

/// A representation `p_i = x^2 - xy + y^2` adapted to `N = A^2 - AB + B^2`:
/// `x + y + 1 = 0 (mod 3)` and `p_i` divides both `A x + B y - A y` and `B x - A y`.
/// All representations of `p_i` are searched, so composite `p_i` is handled too.
pub fn adapted_eisenstein_rep(n: u64, a: i64, b: i64, p_i: u64) -> Result<(i64, i64)> {
    if eisenstein_norm(a, b) != n as i64 {
        return Err(Error::InvalidArgument(format!("A^2 - AB + B^2 != {n}")));
    }
    if p_i == 0 || !n.is_multiple_of(p_i) {
        return Err(Error::InvalidArgument(format!("{p_i} does not divide {n}")));
    }
    let p = p_i as i64;
    let bound = isqrt(4 * p_i / 3) as i64 + 1;
    let mut best: Option<(i64, i64)> = None;
    let key = |(x, y): (i64, i64)| (x.abs(), y.abs(), x, y);
    for x in -bound..=bound {
        for y in -bound..=bound {
            let ok = eisenstein_norm(x, y) == p
                && (x + y + 1).rem_euclid(3) == 0
                && (a * x + b * y - a * y).rem_euclid(p) == 0
                && (b * x - a * y).rem_euclid(p) == 0;
            if ok && best.is_none_or(|c| key((x, y)) < key(c)) {
                best = Some((x, y));
            }
        }
    }
    best.ok_or_else(|| {
        Error::Internal(format!(
            "no representation of {p_i} is adapted to (A, B) = ({a}, {b})"
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorize_examples() {
        assert_eq!(factorize(91).0, vec![(7, 1), (13, 1)]);
        assert!(factorize(1).0.is_empty());
        assert_eq!(factorize(2000).0, vec![(2, 4), (5, 3)]);
        let big = 1_000_003u64 * 1_000_033;
        assert_eq!(factorize(big).0, vec![(1_000_003, 1), (1_000_033, 1)]);
    }

    #[test]
    fn residues_and_roots() {
        assert!(!is_quadratic_residue(5, 3).unwrap());
        assert!(!is_quadratic_residue(5, 13).unwrap());
        assert!(is_quadratic_residue(1, 101).unwrap());
        assert!(is_quadratic_residue(13, 13).is_err());
        assert_eq!(sqrt_mod(4, 7).unwrap(), 2);
        assert_eq!(sqrt_mod(2, 7).unwrap(), 3);
        assert!(sqrt_mod(3, 7).is_err());
    }

    #[test]
    fn conductors() {
        assert_eq!(conductor_params(7).unwrap(), (-1, 3));
        assert_eq!(conductor_params(9).unwrap(), (-3, 3));
        assert!(conductor_params(12).is_err());
        assert!(is_valid_conductor(63));
        assert!(!is_valid_conductor(21));
        assert_eq!(enumerate_conductors(40), vec![7, 9, 13, 19, 31, 37]);
    }

    #[test]
    fn eisenstein() {
        for n in [1u64, 7, 13, 91] {
            let r = eisenstein_rep(n).unwrap();
            assert_eq!(eisenstein_norm(r.x, r.y), n as i64);
            assert_eq!((r.x + r.y + 1).rem_euclid(3), 0);
        }
        assert!(eisenstein_rep(2).is_err());
        for (x, y) in eisenstein_associates(2, 3) {
            assert_eq!(eisenstein_norm(x, y), 7);
        }
    }
}
