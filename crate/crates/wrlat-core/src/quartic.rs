//! Cyclic quartic fields `Q(beta)` with `beta = sqrt(a (d - b sqrt d))`.
//!
//! Elements are stored over the basis `{1, sqrt d, beta, sigma(beta)}`, on which the
//! Minkowski form is diagonal.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::Rat;
use crate::numtheory::{gcd, is_squarefree};
use crate::order::{q, qf, Elem, FieldArith, Order};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisCase {
    I,
    II,
    III,
    IV,
    V,
}

impl fmt::Display for BasisCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BasisCase::I => "I",
            BasisCase::II => "II",
            BasisCase::III => "III",
            BasisCase::IV => "IV",
            BasisCase::V => "V",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticField {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub totally_real: bool,
    pub disc: i64,
    pub index_id4: i64,
    pub basis_case: BasisCase,
    order: Order,
}

/// Coordinates `(s1, s2, s3, s4)` of `s1 + s2 sqrt d + s3 beta + s4 sigma(beta)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticElement(pub [Rat; 4]);

#[derive(Clone, Copy)]
struct Table {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
}

impl Table {
    fn mul(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let (a, b, c, d) = (q(self.a), q(self.b), q(self.c), q(self.d));
        let mut r = vec![Rat::zero(); 4];
        // products of basis vectors e_i e_j as coordinate vectors
        let prod = |i: usize, j: usize| -> [Rat; 4] {
            let z = Rat::zero;
            match (i.min(j), i.max(j)) {
                (0, k) => {
                    let mut v = [z(), z(), z(), z()];
                    v[k] = Rat::one();
                    v
                }
                (1, 1) => [d.clone(), z(), z(), z()],
                (1, 2) => [z(), z(), -b.clone(), c.clone()],
                (1, 3) => [z(), z(), c.clone(), b.clone()],
                (2, 2) => [&a * &d, -(&a * &b), z(), z()],
                (3, 3) => [&a * &d, &a * &b, z(), z()],
                (2, 3) => [z(), &a * &c, z(), z()],
                _ => unreachable!(),
            }
        };
        for i in 0..4 {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                if y[j].is_zero() {
                    continue;
                }
                let coef = &x[i] * &y[j];
                for (k, v) in prod(i, j).iter().enumerate() {
                    if !v.is_zero() {
                        r[k] += &coef * v;
                    }
                }
            }
        }
        r
    }
}

fn sigma_coords(x: &[Rat]) -> Vec<Rat> {
    vec![x[0].clone(), -x[1].clone(), -x[3].clone(), x[2].clone()]
}

impl FieldArith for Table {
    fn dim(&self) -> usize {
        4
    }
    fn mul_q(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        self.mul(x, y)
    }
    fn sigma_q(&self, x: &[Rat]) -> Vec<Rat> {
        sigma_coords(x)
    }
    fn tau_q(&self, x: &[Rat]) -> Vec<Rat> {
        if self.a > 0 {
            x.to_vec()
        } else {
            sigma_coords(&sigma_coords(x))
        }
    }
    fn trace_q(&self, x: &[Rat]) -> Rat {
        q(4) * &x[0]
    }
}

/// Every constraint the parameters violate, one message each.
pub fn parameter_violations(a: i64, b: i64, c: i64, d: i64) -> Vec<String> {
    let mut v = Vec::new();
    if a == 0 {
        v.push("a must be nonzero".to_string());
    } else {
        if a % 2 == 0 {
            v.push(format!("a = {a} must be odd"));
        }
        if !is_squarefree(a.unsigned_abs()) {
            v.push(format!("a = {a} must be squarefree"));
        }
    }
    if b <= 0 {
        v.push(format!("b = {b} must be positive"));
    }
    if c <= 0 {
        v.push(format!("c = {c} must be positive"));
    }
    if d != b * b + c * c {
        v.push(format!("d = {d} must equal b^2 + c^2 = {}", b * b + c * c));
    }
    if d <= 0 || !is_squarefree(d.unsigned_abs()) {
        v.push(format!("d = {d} must be squarefree and positive"));
    }
    if a != 0 && d != 0 && gcd(a as i128, d as i128) != 1 {
        v.push(format!("gcd(a, d) = gcd({a}, {d}) must be 1"));
    }
    v
}

pub fn basis_case(a: i64, b: i64, c: i64, d: i64) -> BasisCase {
    if d % 2 == 0 {
        BasisCase::I
    } else if b % 2 != 0 {
        BasisCase::II
    } else if (a + b).rem_euclid(4) == 3 {
        BasisCase::III
    } else if (a + c).rem_euclid(4) == 0 {
        BasisCase::IV
    } else {
        BasisCase::V
    }
}

fn integral_basis_coords(case: BasisCase) -> Vec<Vec<Rat>> {
    let v = |s: [(i64, i64); 4]| s.iter().map(|&(n, d)| qf(n, d)).collect::<Vec<_>>();
    let one = v([(1, 1), (0, 1), (0, 1), (0, 1)]);
    let half_sqrt = v([(1, 2), (1, 2), (0, 1), (0, 1)]);
    match case {
        BasisCase::I => vec![
            one,
            v([(0, 1), (1, 1), (0, 1), (0, 1)]),
            v([(0, 1), (0, 1), (0, 1), (1, 1)]),
            v([(0, 1), (0, 1), (1, 1), (0, 1)]),
        ],
        BasisCase::II => vec![
            one,
            half_sqrt,
            v([(0, 1), (0, 1), (0, 1), (1, 1)]),
            v([(0, 1), (0, 1), (1, 1), (0, 1)]),
        ],
        BasisCase::III => vec![
            one,
            half_sqrt,
            v([(0, 1), (0, 1), (1, 2), (1, 2)]),
            v([(0, 1), (0, 1), (-1, 2), (1, 2)]),
        ],
        BasisCase::IV => vec![
            one,
            half_sqrt,
            v([(1, 4), (1, 4), (-1, 4), (1, 4)]),
            v([(1, 4), (-1, 4), (1, 4), (1, 4)]),
        ],
        BasisCase::V => vec![
            one,
            half_sqrt,
            v([(1, 4), (1, 4), (1, 4), (1, 4)]),
            v([(1, 4), (-1, 4), (-1, 4), (1, 4)]),
        ],
    }
}

impl QuarticField {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        let violations = parameter_violations(a, b, c, d);
        if !violations.is_empty() {
            return Err(Error::InvalidQuartic(violations.join("; ")));
        }
        let case = basis_case(a, b, c, d);
        let a2d3 = a * a * d * d * d;
        let disc = match case {
            BasisCase::I => 256 * a2d3,
            BasisCase::II => 64 * a2d3,
            BasisCase::III => 16 * a2d3,
            BasisCase::IV | BasisCase::V => a2d3,
        };
        let poly_disc = 256 * a.pow(6) as i128 * (b as i128).pow(4) * (c * c) as i128 * (d as i128).pow(3);
        let index_id4 = (poly_disc / disc as i128) as i64;
        let table = Table { a, b, c, d };
        let order = Order::new(&table, integral_basis_coords(case))?;
        if order.discriminant() != &BigInt::from(disc) {
            return Err(Error::Internal(format!(
                "integral basis discriminant {} differs from {disc}",
                order.discriminant()
            )));
        }
        Ok(QuarticField {
            a,
            b,
            c,
            d,
            totally_real: a > 0,
            disc,
            index_id4,
            basis_case: case,
            order,
        })
    }

    fn table(&self) -> Table {
        Table { a: self.a, b: self.b, c: self.c, d: self.d }
    }

    pub fn order(&self) -> &Order {
        &self.order
    }

    pub fn id(&self) -> String {
        format!("quartic:{},{},{},{}", self.a, self.b, self.c, self.d)
    }

    /// `x^4 - 2ad x^2 + a^2 c^2 d`, leading coefficient first.
    pub fn df_coeffs(&self) -> [i64; 5] {
        let (a, c, d) = (self.a, self.c, self.d);
        [1, 0, -2 * a * d, 0, a * a * c * c * d]
    }

    pub fn df_string(&self) -> String {
        let c: Vec<Rat> = self.df_coeffs().iter().map(|&v| q(v)).collect();
        format_poly(&c)
    }

    pub fn element(&self, s: [Rat; 4]) -> QuarticElement {
        QuarticElement(s)
    }

    pub fn from_ints(&self, s: [i64; 4]) -> QuarticElement {
        QuarticElement([q(s[0]), q(s[1]), q(s[2]), q(s[3])])
    }

    pub fn beta(&self) -> QuarticElement {
        self.from_ints([0, 0, 1, 0])
    }

    pub fn sqrt_d(&self) -> QuarticElement {
        self.from_ints([0, 1, 0, 0])
    }

    pub fn mul(&self, x: &QuarticElement, y: &QuarticElement) -> QuarticElement {
        to_elem(self.table().mul(&x.0, &y.0))
    }

    pub fn add(&self, x: &QuarticElement, y: &QuarticElement) -> QuarticElement {
        QuarticElement(std::array::from_fn(|i| &x.0[i] + &y.0[i]))
    }

    pub fn sigma(&self, x: &QuarticElement) -> QuarticElement {
        to_elem(sigma_coords(&x.0))
    }

    pub fn trace(&self, x: &QuarticElement) -> Rat {
        q(4) * &x.0[0]
    }

    pub fn norm(&self, x: &QuarticElement) -> Rat {
        let mut p = x.clone();
        let mut s = x.clone();
        for _ in 0..3 {
            s = self.sigma(&s);
            p = self.mul(&p, &s);
        }
        p.0[0].clone()
    }

    /// `Tr(x tau(y))`, with `tau` the identity for real fields and `sigma^2` otherwise.
    pub fn bilinear(&self, x: &QuarticElement, y: &QuarticElement) -> Rat {
        let t = to_elem(self.table().tau_q(&y.0));
        self.trace(&self.mul(x, &t))
    }

    pub fn length_sq(&self, x: &QuarticElement) -> Rat {
        self.bilinear(x, x)
    }

    /// `4 (s1^2 + d s2^2 + |a| d (s3^2 + s4^2))`.
    pub fn length_sq_coords(&self, x: &QuarticElement) -> Rat {
        let ad = q(self.a.abs() * self.d);
        let s = &x.0;
        q(4) * (&s[0] * &s[0] + q(self.d) * &s[1] * &s[1] + ad * (&s[2] * &s[2] + &s[3] * &s[3]))
    }

    pub fn integral_basis(&self) -> Vec<QuarticElement> {
        self.order.basis_q().iter().map(|v| to_elem(v.clone())).collect()
    }

    pub fn to_integral(&self, x: &QuarticElement) -> Result<Elem> {
        self.order.from_field(&x.0)
    }

    pub fn from_integral(&self, x: &[i64]) -> QuarticElement {
        to_elem(self.order.to_field(x))
    }

    /// `df(beta)` computed in coordinates; zero for a consistent table.
    pub fn df_at_beta(&self) -> QuarticElement {
        let b = self.beta();
        let b2 = self.mul(&b, &b);
        let b4 = self.mul(&b2, &b2);
        let k = self.df_coeffs();
        let mut r = b4;
        r = self.add(&r, &scale(q(k[2]), &b2));
        r.0[0] += q(k[4]);
        r
    }
}

fn scale(c: Rat, x: &QuarticElement) -> QuarticElement {
    QuarticElement(std::array::from_fn(|i| &c * &x.0[i]))
}

fn to_elem(v: Vec<Rat>) -> QuarticElement {
    QuarticElement([v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()])
}

/// Renders coefficients (leading first) as `x^3 - x^2 - 2x + 1`.
pub fn format_poly(coeffs: &[Rat]) -> String {
    let deg = coeffs.len() - 1;
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let e = deg - i;
        let neg = c.is_negative();
        let abs = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let coef = if abs.is_integer() {
            abs.to_integer().to_string()
        } else {
            format!("({abs})")
        };
        match e {
            0 => out.push_str(&coef),
            _ => {
                if !abs.is_one() {
                    out.push_str(&coef);
                }
                out.push('x');
                if e > 1 {
                    out.push_str(&format!("^{e}"));
                }
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_examples() {
        let f = QuarticField::new(1, 2, 1, 5).unwrap();
        assert_eq!(f.disc, 2000);
        assert_eq!(f.basis_case, BasisCase::III);
        assert_eq!(f.df_string(), "x^4 - 10x^2 + 5");
        let g = QuarticField::new(-1, 2, 1, 5).unwrap();
        assert_eq!(g.disc, 125);
        assert_eq!(g.basis_case, BasisCase::IV);
        assert!(QuarticField::new(1, 2, 2, 8).is_err());
        assert!(QuarticField::new(5, 2, 1, 5).is_err());
    }

    #[test]
    fn multiplication_table() {
        let f = QuarticField::new(3, 2, 1, 5).unwrap();
        let b = f.beta();
        assert_eq!(f.mul(&b, &f.sqrt_d()), f.from_ints([0, 0, -2, 1]));
        assert_eq!(f.mul(&b, &b), f.from_ints([15, -6, 0, 0]));
        assert_eq!(f.mul(&b, &f.sigma(&b)), f.from_ints([0, 3, 0, 0]));
        assert_eq!(f.norm(&b), q(9 * 5));
        assert_eq!(f.norm(&f.sqrt_d()), q(25));
        assert!(f.df_at_beta().0.iter().all(Zero::is_zero));
    }

    #[test]
    fn lengths() {
        let f = QuarticField::new(-1, 2, 1, 5).unwrap();
        assert_eq!(f.length_sq(&f.beta()), q(20));
        let g = QuarticField::new(1, 2, 1, 5).unwrap();
        let h = g.element([qf(1, 2), qf(1, 2), q(0), q(0)]);
        assert_eq!(g.length_sq(&h), q(6));
    }
}
