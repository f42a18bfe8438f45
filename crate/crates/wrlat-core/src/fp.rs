//! Linear algebra and polynomials over a prime field `F_p`.

pub(crate) fn md(x: i128, p: u64) -> u64 {
    x.rem_euclid(p as i128) as u64
}

fn inv(a: u64, p: u64) -> u64 {
    crate::numtheory::mod_inv(a as i128, p as i128).expect("nonzero residue") as u64
}

/// Reduced row echelon basis of the row span.
pub(crate) fn rref(rows: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let mut a: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|&v| v % p).collect()).collect();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..a.len()).find(|&r| a[r][c] != 0) else { continue };
        a.swap(rank, piv);
        let iv = inv(a[rank][c], p);
        for v in a[rank].iter_mut() {
            *v = md(*v as i128 * iv as i128, p);
        }
        for r in 0..a.len() {
            if r != rank && a[r][c] != 0 {
                let f = a[r][c] as i128;
                for k in 0..cols {
                    a[r][k] = md(a[r][k] as i128 - f * a[rank][k] as i128, p);
                }
            }
        }
        rank += 1;
    }
    a.truncate(rank);
    a
}

/// Basis of `{x : M x = 0}` for `M` given by rows, vectors of length `ncols`.
pub(crate) fn kernel(m: &[Vec<u64>], ncols: usize, p: u64) -> Vec<Vec<u64>> {
    let r = rref(m, p);
    let pivots: Vec<usize> = r
        .iter()
        .map(|row| row.iter().position(|&v| v != 0).expect("nonzero row"))
        .collect();
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u64; ncols];
        v[free] = 1;
        for (row, &pc) in r.iter().zip(&pivots) {
            v[pc] = md(-(row[free] as i128), p);
        }
        out.push(v);
    }
    out
}

/// `A B` for square matrices stored by rows.
pub(crate) fn mat_mul(a: &[Vec<u64>], b: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| md((0..n).map(|k| a[i][k] as i128 * b[k][j] as i128).sum(), p))
                .collect()
        })
        .collect()
}

/// Polynomial over `F_p`, low degree first, trimmed.
pub(crate) type Poly = Vec<u64>;

pub(crate) fn trim(mut f: Poly) -> Poly {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

/// Quotient and remainder by a monic divisor.
pub(crate) fn divrem_monic(f: &[u64], g: &[u64], p: u64) -> (Poly, Poly) {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    if r.len() <= dg {
        return (Vec::new(), trim(r));
    }
    let mut q = vec![0u64; r.len() - dg];
    for k in (0..q.len()).rev() {
        let c = r[k + dg];
        q[k] = c;
        if c != 0 {
            for (i, gi) in g.iter().enumerate() {
                r[k + i] = md(r[k + i] as i128 - c as i128 * *gi as i128, p);
            }
        }
    }
    (trim(q), trim(r))
}

/// Monic irreducible factors with multiplicities of a monic polynomial of degree at
/// most 4, assuming every factor without roots has degree 2, 3 or 4.
pub(crate) fn factor_small(f: &[u64], p: u64) -> Vec<(Poly, u32)> {
    let mut rest = trim(f.to_vec());
    let mut out: Vec<(Poly, u32)> = Vec::new();
    for r in 0..p {
        if rest.len() <= 1 {
            break;
        }
        let lin = vec![md(-(r as i128), p), 1];
        let mut mult = 0;
        loop {
            let (q, rem) = divrem_monic(&rest, &lin, p);
            if !rem.is_empty() || rest.len() <= 1 {
                break;
            }
            rest = q;
            mult += 1;
        }
        if mult > 0 {
            out.push((lin, mult));
        }
    }
    match rest.len() {
        0 | 1 => {}
        3 | 4 => out.push((rest, 1)),
        5 => match quadratic_split(&rest, p) {
            Some((g, h)) if g == h => out.push((g, 2)),
            Some((g, h)) => {
                out.push((g, 1));
                out.push((h, 1));
            }
            None => out.push((rest, 1)),
        },
        _ => out.push((rest, 1)),
    }
    out.sort();
    out
}

/// Splits a rootless monic quartic into two monic quadratics when possible.
fn quadratic_split(f: &[u64], p: u64) -> Option<(Poly, Poly)> {
    let (r0, r1, r2, r3) = (f[0] as i128, f[1] as i128, f[2] as i128, f[3] as i128);
    let pi = p as i128;
    let check = |u: i128, v: i128, w: i128| -> Option<(Poly, Poly)> {
        let g = vec![md(v, p), md(u, p), 1];
        let h = vec![md(w, p), md(r3 - u, p), 1];
        let (_, rem) = divrem_monic(f, &g, p);
        if rem.is_empty() {
            let (q, _) = divrem_monic(f, &g, p);
            if q == h {
                let (a, b) = if g <= h { (g, h) } else { (h, g) };
                return Some((a, b));
            }
        }
        None
    };
    if p == 2 {
        for u in 0..2 {
            for v in 0..2 {
                for w in 0..2 {
                    if let Some(r) = check(u, v, w) {
                        return Some(r);
                    }
                }
            }
        }
        return None;
    }
    for u in 0..pi {
        let s = md(r2 - u * (r3 - u), p) as i128;
        let denom = md(r3 - 2 * u, p) as i128;
        if denom != 0 {
            let v = md((r1 - u * s) * inv(denom as u64, p) as i128, p) as i128;
            if let Some(r) = check(u, v, s - v) {
                return Some(r);
            }
        } else {
            // v, w are the roots of t^2 - s t + r0
            let disc = md(s * s - 4 * r0, p) as i64;
            if let Ok(root) = crate::numtheory::sqrt_mod(disc, p).or_else(|e| if disc == 0 { Ok(0) } else { Err(e) }) {
                let half = inv(2, p) as i128;
                let v = md((s + root as i128) * half, p) as i128;
                if let Some(r) = check(u, v, s - v) {
                    return Some(r);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_dimension() {
        let m = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let k = kernel(&m, 3, 7);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert_eq!(md((0..3).map(|i| m[0][i] as i128 * v[i] as i128).sum(), 7), 0);
        }
    }

    #[test]
    fn factors_quartics() {
        // x^4 + 1 over F_3 = (x^2 + x + 2)(x^2 + 2x + 2)
        let f = factor_small(&[1, 0, 0, 0, 1], 3);
        assert_eq!(f, vec![(vec![2, 1, 1], 1), (vec![2, 2, 1], 1)]);
        // (x^2 + 1)^2 over F_3
        let f = factor_small(&[1, 0, 2, 0, 1], 3);
        assert_eq!(f, vec![(vec![1, 0, 1], 2)]);
        // x^4 - 10x^2 + 5 over F_3 is irreducible
        assert_eq!(factor_small(&[2, 0, 2, 0, 1], 3).len(), 1);
        // (x - 1)^3 over F_7
        assert_eq!(factor_small(&[6, 3, 4, 1], 7), vec![(vec![6, 1], 3)]);
    }
}
