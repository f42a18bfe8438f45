//! Gram forms, exact shortest-vector enumeration and well-roundedness verdicts.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::IdealLattice;
use crate::linalg::{det_bigint, rank_fraction_free, rat_inverse, Rat};

/// Symmetric positive-definite rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramForm {
    g: Vec<Vec<Rat>>,
}

impl GramForm {
    pub fn new(g: Vec<Vec<Rat>>) -> Result<Self> {
        let n = g.len();
        if n == 0 || g.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidArgument("Gram matrix must be square".into()));
        }
        for i in 0..n {
            for j in 0..i {
                if g[i][j] != g[j][i] {
                    return Err(Error::InvalidArgument("Gram matrix is not symmetric".into()));
                }
            }
        }
        if !leading_minors_positive(&g) {
            return Err(Error::NotPositiveDefinite);
        }
        Ok(GramForm { g })
    }

    pub fn from_i64(g: &[Vec<i64>]) -> Result<Self> {
        Self::new(g.iter().map(|r| r.iter().map(|&v| Rat::from_integer(v.into())).collect()).collect())
    }

    pub fn dim(&self) -> usize {
        self.g.len()
    }

    pub fn matrix(&self) -> &[Vec<Rat>] {
        &self.g
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rat {
        &self.g[i][j]
    }

    pub fn eval(&self, x: &[i64]) -> Rat {
        self.inner(x, x)
    }

    pub fn inner(&self, x: &[i64], y: &[i64]) -> Rat {
        let mut s = Rat::zero();
        for (i, row) in self.g.iter().enumerate() {
            if x[i] == 0 {
                continue;
            }
            let mut t = Rat::zero();
            for (j, v) in row.iter().enumerate() {
                if y[j] != 0 {
                    t += v * Rat::from_integer(y[j].into());
                }
            }
            s += t * Rat::from_integer(x[i].into());
        }
        s
    }

    pub fn det(&self) -> Rat {
        let (num, den) = self.integer_scaled();
        let d = det_bigint(&num);
        Rat::new(d, num_traits::pow(den, self.dim()))
    }

    /// The form scaled by the least common denominator, with that denominator.
    fn integer_scaled(&self) -> (Vec<Vec<BigInt>>, BigInt) {
        let den = self
            .g
            .iter()
            .flatten()
            .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        let m = self
            .g
            .iter()
            .map(|r| r.iter().map(|v| (v * Rat::from_integer(den.clone())).to_integer()).collect())
            .collect();
        (m, den)
    }

    /// Congruent form `U^T G U` for an integer matrix `U` given by columns.
    pub fn transform(&self, u_cols: &[Vec<i64>]) -> GramForm {
        let n = self.dim();
        let g = (0..n)
            .map(|i| (0..n).map(|j| self.inner(&u_cols[i], &u_cols[j])).collect())
            .collect();
        GramForm { g }
    }
}

fn leading_minors_positive(g: &[Vec<Rat>]) -> bool {
    // Gaussian elimination without pivoting: every pivot must be positive.
    let n = g.len();
    let mut a = g.to_vec();
    for k in 0..n {
        if !a[k][k].is_positive() {
            return false;
        }
        for i in k + 1..n {
            let f = &a[i][k] / &a[k][k];
            for j in k..n {
                let t = &f * &a[k][j];
                a[i][j] -= t;
            }
        }
    }
    true
}

/// Minimal vectors with one representative per sign pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortVectorSet {
    pub min: Rat,
    pub vectors: Vec<Vec<i64>>,
}

impl ShortVectorSet {
    /// Number of minimal vectors counting both signs.
    pub fn count(&self) -> usize {
        2 * self.vectors.len()
    }
}

fn canonical_sign(v: &mut [i64]) {
    if let Some(&first) = v.iter().find(|&&x| x != 0) {
        if first < 0 {
            v.iter_mut().for_each(|x| *x = -*x);
        }
    }
}

fn finish(min: Rat, found: Vec<Vec<i64>>) -> ShortVectorSet {
    let mut vectors: Vec<Vec<i64>> = found
        .into_iter()
        .map(|mut v| {
            canonical_sign(&mut v);
            v
        })
        .collect();
    vectors.sort();
    vectors.dedup();
    ShortVectorSet { min, vectors }
}

/// Pairwise size reduction: returns unimodular `U` (columns) so that `U^T G U` has
/// `|2 G'_ij| <= G'_jj` for all pairs.
pub fn pair_reduce(g: &GramForm) -> Vec<Vec<i64>> {
    let n = g.dim();
    let mut u: Vec<Vec<i64>> = (0..n)
        .map(|j| (0..n).map(|i| i64::from(i == j)).collect())
        .collect();
    // work on the integer form L G, L the common denominator
    let l = g.g.iter().flatten().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut a: Vec<Vec<BigInt>> = g
        .g
        .iter()
        .map(|row| row.iter().map(|x| x.numer() * (&l / x.denom())).collect())
        .collect();
    loop {
        let mut changed = false;
        for i in 0..n {
            for j in 0..n {
                if i == j || (&a[i][j] * 2u32).abs() <= a[j][j] {
                    continue;
                }
                let k = Rat::new(a[i][j].clone(), a[j][j].clone()).round().to_integer();
                // b_i <- b_i - k b_j
                let (aij, ajj) = (a[i][j].clone(), a[j][j].clone());
                a[i][i] = &a[i][i] - &k * &aij * 2u32 + &k * &k * &ajj;
                for t in 0..n {
                    if t != i {
                        let v = &a[i][t] - &k * &a[j][t];
                        a[i][t] = v.clone();
                        a[t][i] = v;
                    }
                }
                let k = k.to_i64().expect("reduction coefficient fits");
                let uj = u[j].clone();
                for (x, y) in u[i].iter_mut().zip(&uj) {
                    *x -= k * y;
                }
                changed = true;
            }
        }
        if !changed {
            return u;
        }
    }
}

/// Exhaustive minimal vectors by exact Fincke-Pohst enumeration.
pub fn shortest_vectors(g: &GramForm) -> ShortVectorSet {
    let n = g.dim();
    let u = pair_reduce(g);
    let h = g.transform(&u);
    // Quadratic-form decomposition: Q(x) = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2.
    let mut q = h.g.clone();
    for i in 0..n {
        for j in i + 1..n {
            q[j][i] = q[i][j].clone();
            q[i][j] = &q[i][j] / &q[i][i];
        }
        for k in i + 1..n {
            for l in k..n {
                let t = &q[k][i] * &q[i][l];
                q[k][l] -= t;
            }
        }
    }
    let mut bound = (0..n).map(|i| h.g[i][i].clone()).min().expect("nonempty form");
    let mut found: Vec<Vec<i64>> = Vec::new();
    let mut x = vec![0i64; n];
    enumerate_level(&q, n, n, Rat::zero(), &mut x, &mut bound, &mut found);
    let back: Vec<Vec<i64>> = found
        .into_iter()
        .map(|y| {
            (0..n)
                .map(|i| (0..n).map(|j| u[j][i] * y[j]).sum())
                .collect()
        })
        .collect();
    finish(bound, back)
}

fn enumerate_level(
    q: &[Vec<Rat>],
    n: usize,
    level: usize,
    partial: Rat,
    x: &mut Vec<i64>,
    bound: &mut Rat,
    found: &mut Vec<Vec<i64>>,
) {
    if level == 0 {
        if x.iter().all(|&v| v == 0) {
            return;
        }
        if partial < *bound {
            *bound = partial.clone();
            found.clear();
        }
        if partial == *bound {
            found.push(x.clone());
        }
        return;
    }
    let i = level - 1;
    let mut c = Rat::zero();
    for j in i + 1..n {
        if x[j] != 0 {
            c += &q[i][j] * Rat::from_integer(x[j].into());
        }
    }
    let center = (-c.clone()).round().to_integer().to_i64().expect("center fits");
    let cost = |v: i64| {
        let t = Rat::from_integer(v.into()) + &c;
        &q[i][i] * &t * &t
    };
    let step = |v: i64, x: &mut Vec<i64>, bound: &mut Rat, found: &mut Vec<Vec<i64>>| -> bool {
        let total = &partial + cost(v);
        if total > *bound {
            return false;
        }
        x[i] = v;
        enumerate_level(q, n, i, total, x, bound, found);
        x[i] = 0;
        true
    };
    if !step(center, x, bound, found) {
        return;
    }
    let mut v = center + 1;
    while step(v, x, bound, found) {
        v += 1;
    }
    let mut v = center - 1;
    while step(v, x, bound, found) {
        v -= 1;
    }
}

/// Box radius guaranteeing the minimum is attained: `|x_i|^2 <= R (G^-1)_ii` with `R`
/// the smallest diagonal entry.
pub fn naive_radius(g: &GramForm) -> i64 {
    let n = g.dim();
    let inv = rat_inverse(&g.g).expect("positive definite forms are invertible");
    let r = (0..n).map(|i| g.g[i][i].clone()).min().expect("nonempty form");
    (0..n)
        .map(|i| {
            let t = &r * &inv[i][i];
            t.floor().to_integer().sqrt().to_i64().expect("radius fits")
        })
        .max()
        .unwrap_or(0)
}

/// Brute-force scan of the box `[-radius, radius]^n`.
pub fn naive_shortest(g: &GramForm, radius: i64) -> ShortVectorSet {
    let n = g.dim();
    let (m, den) = g.integer_scaled();
    let m: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|v| v.to_i128().expect("entry fits")).collect())
        .collect();
    let mut best: Option<i128> = None;
    let mut found: Vec<Vec<i64>> = Vec::new();
    let mut x = vec![-radius; n];
    loop {
        if x.iter().any(|&v| v != 0) {
            let mut s = 0i128;
            for i in 0..n {
                for j in 0..n {
                    s += x[i] as i128 * m[i][j] * x[j] as i128;
                }
            }
            match best {
                Some(b) if s > b => {}
                Some(b) if s == b => found.push(x.clone()),
                _ => {
                    best = Some(s);
                    found = vec![x.clone()];
                }
            }
        }
        let mut k = 0;
        loop {
            if k == n {
                let min = Rat::new(BigInt::from(best.unwrap_or(0)), den);
                return finish(min, found);
            }
            if x[k] < radius {
                x[k] += 1;
                break;
            }
            x[k] = -radius;
            k += 1;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WrReport {
    /// Minimum squared length, rendered `num/den`.
    pub minimum: String,
    /// Minimal vectors counted with both signs.
    pub count: usize,
    pub rank: usize,
    pub is_wr: bool,
    pub is_strongly_wr: bool,
    pub is_orthogonal: bool,
    /// Minimal vectors as integral-basis coordinates, one per sign pair.
    pub minimal_vectors: Vec<Vec<i64>>,
    /// A minimal basis in integral-basis coordinates when strongly WR.
    pub witness: Option<Vec<Vec<i64>>>,
}

impl WrReport {
    pub fn minimum_rat(&self) -> Rat {
        parse_rat(&self.minimum).expect("report minimum is well formed")
    }
}

/// Canonical `num/den` rendering with positive denominator.
pub fn render_rat(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rat(s: &str) -> Option<Rat> {
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n: BigInt = n.trim().parse().ok()?;
    let d: BigInt = d.trim().parse().ok()?;
    (!d.is_zero()).then(|| Rat::new(n, d))
}

/// Gram matrix of the ideal's HNF columns under the Minkowski form.
pub fn gram_of_ideal(a: &IdealLattice) -> GramForm {
    let o = a.field().order();
    let cols = a.columns();
    let g = cols
        .iter()
        .map(|x| cols.iter().map(|y| Rat::from_integer(o.bilinear(x, y).into())).collect())
        .collect();
    GramForm::new(g).expect("ideal lattices are positive definite")
}

/// Rank, strong well-roundedness and orthogonality from a minimal-vector set whose
/// coordinates are over the lattice basis.
pub fn analyze(g: &GramForm, s: &ShortVectorSet) -> (usize, Option<Vec<Vec<i64>>>, bool) {
    let n = g.dim();
    let rows: Vec<Vec<BigInt>> = s
        .vectors
        .iter()
        .map(|v| v.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let rank = rank_fraction_free(&rows);
    if rank < n {
        return (rank, None, false);
    }
    let k = s.vectors.len();
    let mut first: Option<Vec<Vec<i64>>> = None;
    let mut idx: Vec<usize> = (0..n).collect();
    loop {
        let pick: Vec<Vec<i64>> = idx.iter().map(|&i| s.vectors[i].clone()).collect();
        let m: Vec<Vec<BigInt>> = pick
            .iter()
            .map(|v| v.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        if det_bigint(&m).abs().is_one() {
            let orth = (0..n).all(|i| (i + 1..n).all(|j| g.inner(&pick[i], &pick[j]).is_zero()));
            if orth {
                return (rank, Some(pick), true);
            }
            if first.is_none() {
                first = Some(pick);
            }
        }
        // next combination
        let mut i = n;
        loop {
            if i == 0 {
                return (rank, first, false);
            }
            i -= 1;
            if idx[i] < k - n + i {
                idx[i] += 1;
                for j in i + 1..n {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Full well-roundedness report of an ideal lattice.
pub fn wr_report(a: &IdealLattice) -> WrReport {
    let g = gram_of_ideal(a);
    let s = shortest_vectors(&g);
    let (rank, witness, orth) = analyze(&g, &s);
    let to_integral = |v: &Vec<i64>| a.combine(v);
    let n = g.dim();
    WrReport {
        minimum: render_rat(&s.min),
        count: s.count(),
        rank,
        is_wr: rank == n,
        is_strongly_wr: witness.is_some(),
        is_orthogonal: orth,
        minimal_vectors: s.vectors.iter().map(to_integral).collect(),
        witness: witness.map(|w| w.iter().map(to_integral).collect()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(v: &[i64]) -> GramForm {
        let n = v.len();
        let g: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { v[i] } else { 0 }).collect())
            .collect();
        GramForm::from_i64(&g).unwrap()
    }

    #[test]
    fn identity_and_diagonal() {
        let s = shortest_vectors(&diag(&[1, 1, 1]));
        assert_eq!(s.min, Rat::one());
        assert_eq!(s.vectors, vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
        let t = naive_shortest(&diag(&[2, 3, 5]), 2);
        assert_eq!(t.min, Rat::from_integer(2.into()));
        assert_eq!(t.vectors, vec![vec![1, 0, 0]]);
    }

    #[test]
    fn rejects_indefinite() {
        let g = vec![vec![1, 2], vec![2, 1]];
        assert_eq!(GramForm::from_i64(&g), Err(Error::NotPositiveDefinite));
    }

    #[test]
    fn hexagonal_plane() {
        let g = GramForm::from_i64(&[vec![2, 1], vec![1, 2]]).unwrap();
        let s = shortest_vectors(&g);
        assert_eq!(s.count(), 6);
        assert_eq!(s, naive_shortest(&g, naive_radius(&g)));
    }

    #[test]
    fn rational_rendering() {
        let r = Rat::new(BigInt::from(-6), BigInt::from(4));
        assert_eq!(render_rat(&r), "-3/2");
        assert_eq!(parse_rat("-3/2"), Some(r));
    }
}
