//! The ring of integers as integer structure constants over an integral basis.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{det_bigint, rat_inverse, rat_mat_vec, Rat};

/// Integer coordinates over the integral basis.
pub type Elem = Vec<i64>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Order {
    n: usize,
    /// `mult[i][j]` holds the coordinates of `w_i * w_j`.
    mult: Vec<Vec<Elem>>,
    /// Column `j` holds the coordinates of `sigma(w_j)`.
    sigma: Vec<Vec<i64>>,
    /// Column `j` holds the coordinates of `tau(w_j)`, the conjugation used by the form.
    tau: Vec<Vec<i64>>,
    gram: Vec<Vec<i64>>,
    traces: Vec<i64>,
    disc: BigInt,
    /// Rational coordinates of each integral basis vector over the field's own basis.
    basis: Vec<Vec<Rat>>,
    /// Inverse of the basis matrix: maps field coordinates to integral coordinates.
    to_integral: Vec<Vec<Rat>>,
}

/// Arithmetic of the ambient field over its own rational basis.
pub trait FieldArith {
    fn dim(&self) -> usize;
    fn mul_q(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat>;
    fn sigma_q(&self, x: &[Rat]) -> Vec<Rat>;
    fn tau_q(&self, x: &[Rat]) -> Vec<Rat>;
    fn trace_q(&self, x: &[Rat]) -> Rat;
}

fn rat_to_i64(r: &Rat) -> Result<i64> {
    if !r.is_integer() {
        return Err(Error::NotIntegral);
    }
    r.to_integer()
        .to_i64()
        .ok_or_else(|| Error::Internal("structure constant overflows i64".into()))
}

impl Order {
    /// Builds the order spanned by `basis` (columns in field coordinates), which must
    /// start with 1 and be closed under multiplication and the Galois action.
    pub fn new<F: FieldArith>(field: &F, basis: Vec<Vec<Rat>>) -> Result<Self> {
        let n = field.dim();
        if basis.len() != n || basis.iter().any(|b| b.len() != n) {
            return Err(Error::InvalidArgument("basis has the wrong shape".into()));
        }
        let mut cols = vec![vec![Rat::zero(); n]; n];
        for (j, b) in basis.iter().enumerate() {
            for i in 0..n {
                cols[i][j] = b[i].clone();
            }
        }
        let to_integral =
            rat_inverse(&cols).ok_or_else(|| Error::InvalidArgument("dependent basis".into()))?;
        let coords = |v: &[Rat]| -> Result<Elem> {
            rat_mat_vec(&to_integral, v).iter().map(rat_to_i64).collect()
        };
        if coords(&basis[0])? != unit(n) {
            return Err(Error::InvalidArgument("first basis vector must be 1".into()));
        }
        let mut mult = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in 0..n {
                mult[i][j] = coords(&field.mul_q(&basis[i], &basis[j]))?;
            }
        }
        let mut sigma = vec![vec![0; n]; n];
        let mut tau = vec![vec![0; n]; n];
        for j in 0..n {
            let s = coords(&field.sigma_q(&basis[j]))?;
            let t = coords(&field.tau_q(&basis[j]))?;
            for i in 0..n {
                sigma[i][j] = s[i];
                tau[i][j] = t[i];
            }
        }
        let traces: Vec<i64> = basis
            .iter()
            .map(|b| rat_to_i64(&field.trace_q(b)))
            .collect::<Result<_>>()?;
        let mut trace_form = vec![vec![BigInt::zero(); n]; n];
        let mut gram = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                let prod = field.mul_q(&basis[i], &basis[j]);
                trace_form[i][j] = BigInt::from(rat_to_i64(&field.trace_q(&prod))?);
                let twisted = field.mul_q(&basis[i], &field.tau_q(&basis[j]));
                gram[i][j] = rat_to_i64(&field.trace_q(&twisted))?;
            }
        }
        let disc = det_bigint(&trace_form);
        Ok(Order { n, mult, sigma, tau, gram, traces, disc, basis, to_integral })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn one(&self) -> Elem {
        unit(self.n)
    }

    pub fn basis_vector(&self, i: usize) -> Elem {
        let mut e = vec![0; self.n];
        e[i] = 1;
        e
    }

    pub fn from_int(&self, k: i64) -> Elem {
        let mut e = vec![0; self.n];
        e[0] = k;
        e
    }

    /// Signed discriminant of the trace form on the integral basis.
    pub fn discriminant(&self) -> &BigInt {
        &self.disc
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn structure_constants(&self) -> &[Vec<Elem>] {
        &self.mult
    }

    pub fn sigma_matrix(&self) -> &[Vec<i64>] {
        &self.sigma
    }

    pub fn basis_q(&self) -> &[Vec<Rat>] {
        &self.basis
    }

    pub fn mul(&self, x: &[i64], y: &[i64]) -> Elem {
        let n = self.n;
        let mut acc = vec![0i128; n];
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..n {
                if y[j] == 0 {
                    continue;
                }
                let c = x[i] as i128 * y[j] as i128;
                for (k, m) in self.mult[i][j].iter().enumerate() {
                    acc[k] += c * *m as i128;
                }
            }
        }
        acc.into_iter().map(|v| v as i64).collect()
    }

    pub fn add(&self, x: &[i64], y: &[i64]) -> Elem {
        x.iter().zip(y).map(|(a, b)| a + b).collect()
    }

    pub fn scale(&self, k: i64, x: &[i64]) -> Elem {
        x.iter().map(|v| k * v).collect()
    }

    fn apply(m: &[Vec<i64>], x: &[i64]) -> Elem {
        m.iter()
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn sigma(&self, x: &[i64]) -> Elem {
        Self::apply(&self.sigma, x)
    }

    pub fn sigma_pow(&self, x: &[i64], k: usize) -> Elem {
        let mut y = x.to_vec();
        for _ in 0..k % self.n {
            y = self.sigma(&y);
        }
        y
    }

    pub fn tau(&self, x: &[i64]) -> Elem {
        Self::apply(&self.tau, x)
    }

    pub fn trace(&self, x: &[i64]) -> i64 {
        x.iter().zip(&self.traces).map(|(a, b)| a * b).sum()
    }

    /// `Tr(x * tau(y))`, the Minkowski scalar product.
    pub fn bilinear(&self, x: &[i64], y: &[i64]) -> i128 {
        let mut s = 0i128;
        for i in 0..self.n {
            for j in 0..self.n {
                s += x[i] as i128 * self.gram[i][j] as i128 * y[j] as i128;
            }
        }
        s
    }

    pub fn length_sq(&self, x: &[i64]) -> i128 {
        self.bilinear(x, x)
    }

    /// Matrix of multiplication by `x`; column `j` is `x * w_j`.
    pub fn mult_matrix(&self, x: &[i64]) -> Vec<Vec<i64>> {
        let n = self.n;
        let mut m = vec![vec![0; n]; n];
        for j in 0..n {
            let c = self.mul(x, &self.basis_vector(j));
            for i in 0..n {
                m[i][j] = c[i];
            }
        }
        m
    }

    pub fn norm(&self, x: &[i64]) -> BigInt {
        let m: Vec<Vec<BigInt>> = self
            .mult_matrix(x)
            .into_iter()
            .map(|r| r.into_iter().map(BigInt::from).collect())
            .collect();
        det_bigint(&m)
    }

    pub fn pow(&self, x: &[i64], e: u32) -> Elem {
        let mut r = self.one();
        for _ in 0..e {
            r = self.mul(&r, x);
        }
        r
    }

    /// Field coordinates of an integral element.
    pub fn to_field(&self, x: &[i64]) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.n];
        for (j, b) in self.basis.iter().enumerate() {
            if x[j] != 0 {
                let c = Rat::from_integer(BigInt::from(x[j]));
                for i in 0..self.n {
                    v[i] += &c * &b[i];
                }
            }
        }
        v
    }

    /// Integral coordinates of a field element, or `NotIntegral`.
    pub fn from_field(&self, v: &[Rat]) -> Result<Elem> {
        rat_mat_vec(&self.to_integral, v).iter().map(rat_to_i64).collect()
    }

    /// Rational coordinates over the integral basis, without the integrality check.
    pub fn from_field_rational(&self, v: &[Rat]) -> Vec<Rat> {
        rat_mat_vec(&self.to_integral, v)
    }

    pub fn is_integer(&self, x: &[i64]) -> bool {
        x[1..].iter().all(|&v| v == 0)
    }
}

fn unit(n: usize) -> Elem {
    let mut e = vec![0; n];
    e[0] = 1;
    e
}

/// Rational number from an integer, shorthand for builders.
pub fn q(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational number `n / d`.
pub fn qf(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_one() -> Rat {
    Rat::one()
}
