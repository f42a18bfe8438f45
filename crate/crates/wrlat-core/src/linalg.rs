//! Exact integer and rational linear algebra for small dimensions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::numtheory::ext_gcd;

pub type Rat = BigRational;

/// Row-major square integer matrix.
pub type IntMatrix = Vec<Vec<i64>>;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn to_i64(x: &BigInt) -> Option<i64> {
    x.to_i64()
}

/// Hermite normal form of the lattice spanned by `cols` (column vectors of length `n`),
/// which must contain `modulus * Z^n`. The result is upper triangular with positive
/// diagonal and entries right of the diagonal reduced into `[0, diag)`.
pub fn hnf_mod(cols: &[Vec<i128>], n: usize, modulus: i128) -> IntMatrix {
    assert!(modulus > 0 && modulus < (1i128 << 62), "modulus out of range: {modulus}");
    let d = modulus;
    let mut work: Vec<Vec<i128>> = cols
        .iter()
        .map(|c| c.iter().map(|v| v.rem_euclid(d)).collect::<Vec<_>>())
        .filter(|c: &Vec<i128>| c.iter().any(|&v| v != 0))
        .collect();
    let mut pivots: Vec<Vec<i128>> = vec![Vec::new(); n];
    for i in (0..n).rev() {
        let mut piv = vec![0i128; n];
        piv[i] = d;
        let mut rest = Vec::with_capacity(work.len());
        for w in work.drain(..) {
            if w[i] == 0 {
                rest.push(w);
                continue;
            }
            let (a, b) = (piv[i], w[i]);
            let (g, x, y) = ext_gcd(a, b);
            let (ag, bg) = (a / g, b / g);
            let mut np = vec![0i128; n];
            let mut nw = vec![0i128; n];
            for k in 0..i {
                np[k] = (x.rem_euclid(d) * piv[k] + y.rem_euclid(d) * w[k]).rem_euclid(d);
                nw[k] = (ag.rem_euclid(d) * w[k] - bg.rem_euclid(d) * piv[k]).rem_euclid(d);
            }
            np[i] = g;
            piv = np;
            if nw.iter().any(|&v| v != 0) {
                rest.push(nw);
            }
        }
        work = rest;
        pivots[i] = piv;
    }
    let mut h = vec![vec![0i128; n]; n];
    for (j, p) in pivots.iter().enumerate() {
        for k in 0..n {
            h[k][j] = p[k];
        }
    }
    reduce_upper(&mut h, n);
    h.into_iter()
        .map(|r| r.into_iter().map(|v| v as i64).collect())
        .collect()
}

fn reduce_upper(h: &mut [Vec<i128>], n: usize) {
    for j in 0..n {
        for i in (0..j).rev() {
            let q = h[i][j].div_euclid(h[i][i]);
            if q != 0 {
                for k in 0..=i {
                    h[k][j] -= q * h[k][i];
                }
            }
        }
    }
}

/// Plain Hermite normal form over big integers, no modulus. Input must have full rank.
pub fn hnf_bigint(cols: &[Vec<BigInt>], n: usize) -> Vec<Vec<BigInt>> {
    let mut work: Vec<Vec<BigInt>> = cols.to_vec();
    let mut pivots: Vec<Vec<BigInt>> = vec![Vec::new(); n];
    for i in (0..n).rev() {
        let mut piv: Option<Vec<BigInt>> = None;
        let mut rest = Vec::new();
        for w in work.drain(..) {
            if w[i].is_zero() {
                rest.push(w);
                continue;
            }
            match piv.take() {
                None => piv = Some(w),
                Some(p) => {
                    let e = p[i].extended_gcd(&w[i]);
                    let g = e.gcd.clone();
                    let (ag, bg) = (&p[i] / &g, &w[i] / &g);
                    let np: Vec<BigInt> =
                        (0..n).map(|k| &e.x * &p[k] + &e.y * &w[k]).collect();
                    let nw: Vec<BigInt> = (0..n).map(|k| &ag * &w[k] - &bg * &p[k]).collect();
                    piv = Some(np);
                    if nw.iter().any(|v| !v.is_zero()) {
                        rest.push(nw);
                    }
                }
            }
        }
        let mut p = piv.expect("hnf_bigint needs a full-rank input");
        if p[i].is_negative() {
            p.iter_mut().for_each(|v| *v = -v.clone());
        }
        work = rest;
        pivots[i] = p;
    }
    let mut h = vec![vec![BigInt::zero(); n]; n];
    for (j, p) in pivots.iter().enumerate() {
        for k in 0..n {
            h[k][j] = p[k].clone();
        }
    }
    for j in 0..n {
        for i in (0..j).rev() {
            let q = h[i][j].div_floor(&h[i][i]);
            if !q.is_zero() {
                for k in 0..=i {
                    let t = &q * &h[k][i];
                    h[k][j] -= t;
                }
            }
        }
    }
    h
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn det_bigint(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

pub fn det_i64(m: &[Vec<i64>]) -> BigInt {
    let b: Vec<Vec<BigInt>> = m
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    det_bigint(&b)
}

/// Rank over Q by fraction-free elimination. Pivot: leftmost column, then the row
/// whose entry has the largest absolute value (first such row on ties).
pub fn rank_fraction_free(rows: &[Vec<BigInt>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if rank == a.len() {
            break;
        }
        let mut best: Option<usize> = None;
        for r in rank..a.len() {
            if !a[r][c].is_zero()
                && best.is_none_or(|b| a[r][c].abs() > a[b][c].abs())
            {
                best = Some(r);
            }
        }
        let Some(p) = best else { continue };
        a.swap(rank, p);
        for r in rank + 1..a.len() {
            for k in c + 1..cols {
                let v = &a[r][k] * &a[rank][c] - &a[r][c] * &a[rank][k];
                a[r][k] = v / &prev;
            }
            a[r][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
    }
    rank
}

pub fn rank_i64(rows: &[Vec<i64>]) -> usize {
    let b: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    rank_fraction_free(&b)
}

/// Inverse by Gauss-Jordan elimination; `None` when singular.
pub fn rat_inverse(m: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero())?;
        a.swap(c, p);
        let inv = a[c][c].recip();
        for v in a[c].iter_mut() {
            *v *= &inv;
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for k in 0..2 * n {
                    let t = &f * &a[c][k];
                    a[r][k] -= t;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn rat_mat_vec(m: &[Vec<Rat>], v: &[Rat]) -> Vec<Rat> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// Solves `h x = v` for upper-triangular `h`; `None` if the solution is not integral.
pub fn solve_upper_integral(h: &[Vec<i64>], v: &[i128]) -> Option<Vec<i128>> {
    let n = h.len();
    let mut rhs: Vec<i128> = v.to_vec();
    let mut x = vec![0i128; n];
    for i in (0..n).rev() {
        let d = h[i][i] as i128;
        if rhs[i] % d != 0 {
            return None;
        }
        x[i] = rhs[i] / d;
        for k in 0..i {
            rhs[k] -= x[i] * h[k][i] as i128;
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(cols: &[Vec<i128>]) -> Vec<Vec<BigInt>> {
        cols.iter()
            .map(|c| c.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    #[test]
    fn hnf_small() {
        let cols = vec![vec![4, 0], vec![2, 6], vec![0, 2]];
        let h = hnf_mod(&cols, 2, 24);
        assert_eq!(h, vec![vec![2, 0], vec![0, 2]]);
        let hb = hnf_bigint(&big(&cols), 2);
        assert_eq!(hb[0][0], BigInt::from(2));
    }

    #[test]
    fn det_and_rank() {
        let m = vec![vec![2, 1, 0], vec![1, 3, 1], vec![0, 1, 4]];
        assert_eq!(det_i64(&m), BigInt::from(18));
        assert_eq!(rank_i64(&[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]), 2);
    }

    #[test]
    fn triangular_solve() {
        let h = vec![vec![3, 1], vec![0, 2]];
        assert_eq!(solve_upper_integral(&h, &[7, 2]), Some(vec![2, 1]));
        assert_eq!(solve_upper_integral(&h, &[2, 2]), None);
    }
}
