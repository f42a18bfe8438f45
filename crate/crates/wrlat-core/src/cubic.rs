//! Cyclic cubic fields of a given conductor.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{rat_inverse, Rat};
use crate::numtheory::conductor_params;
use crate::order::{q, qf, Elem, FieldArith, Order};
use crate::polymod::{self, RatPoly};

/// A cyclic cubic field `Q(alpha)` with `alpha` a root of `df`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicField {
    pub m: u64,
    pub a: i64,
    pub b: i64,
    pub nine_divides_m: bool,
    /// `df = x^3 + df[2] x^2 + df[1] x + df[0]`.
    pub df: [Rat; 3],
    /// `sigma(alpha) = s[0] + s[1] alpha + s[2] alpha^2`.
    pub sigma_poly: [Rat; 3],
    pub disc: u64,
    order: Order,
}

/// Element over the power basis `{1, alpha, alpha^2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicElement(pub [Rat; 3]);

struct PowerBasis {
    modulus: RatPoly,
    sigma: RatPoly,
}

impl PowerBasis {
    fn reduce(&self, p: &[Rat]) -> Vec<Rat> {
        polymod::pad(polymod::rem(p, &self.modulus), 3)
    }
}

impl FieldArith for PowerBasis {
    fn dim(&self) -> usize {
        3
    }
    fn mul_q(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        polymod::pad(polymod::mul_mod(x, y, &self.modulus), 3)
    }
    fn sigma_q(&self, x: &[Rat]) -> Vec<Rat> {
        self.reduce(&polymod::compose_mod(x, &self.sigma, &self.modulus))
    }
    fn tau_q(&self, x: &[Rat]) -> Vec<Rat> {
        x.to_vec()
    }
    fn trace_q(&self, x: &[Rat]) -> Rat {
        let s1 = self.sigma_q(x);
        let s2 = self.sigma_q(&s1);
        &x[0] + &s1[0] + &s2[0]
    }
}

fn rat_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let (n, d) = (r.numer(), r.denom());
    let (sn, sd) = (n.sqrt(), d.sqrt());
    (&sn * &sn == *n && &sd * &sd == *d).then(|| Rat::new(sn, sd))
}

/// Discriminant of the monic cubic `x^3 + p x^2 + q x + r`.
pub fn cubic_discriminant(p: &Rat, qq: &Rat, r: &Rat) -> Rat {
    let c = |k: i64| Rat::from_integer(BigInt::from(k));
    p * p * qq * qq - c(4) * qq * qq * qq - c(4) * p * p * p * r - c(27) * r * r
        + c(18) * p * qq * r
}

impl CubicField {
    pub fn new(m: u64) -> Result<Self> {
        let (a, b) = conductor_params(m)?;
        let nine = m.is_multiple_of(9);
        let mi = m as i64;
        let df = if nine {
            [qf(-a * mi, 27), qf(-mi, 3), q(0)]
        } else {
            [qf(-(mi * (a - 3) + 1), 27), qf(1 - mi, 3), q(-1)]
        };
        let modulus: RatPoly = vec![df[0].clone(), df[1].clone(), df[2].clone(), Rat::one()];
        let disc = cubic_discriminant(&df[2], &df[1], &df[0]);
        let delta = rat_sqrt(&disc).ok_or_else(|| {
            Error::Internal(format!("discriminant of df for m = {m} is not a square"))
        })?;
        let deriv = vec![df[1].clone(), q(2) * &df[2], q(3)];
        let inv = polymod::inv_mod(&deriv, &modulus)
            .ok_or_else(|| Error::Internal("df is not separable".into()))?;
        let mut candidates = Vec::new();
        for sign in [1i64, -1] {
            // the other two roots are (-c2 - alpha +- delta / df'(alpha)) / 2
            let base = vec![-df[2].clone(), q(-1)];
            let t = polymod::scale(&(q(sign) * &delta), &inv);
            let s = polymod::scale(&qf(1, 2), &polymod::add(&base, &t));
            candidates.push(polymod::pad(s, 3));
        }
        candidates.sort();
        let s = candidates.swap_remove(0);
        let pb = PowerBasis { modulus: modulus.clone(), sigma: s.clone() };
        let at_sigma = polymod::compose_mod(&modulus, &s, &modulus);
        if polymod::degree(&at_sigma).is_some() {
            return Err(Error::Internal("sigma(alpha) is not a root of df".into()));
        }
        let alpha = vec![q(0), q(1), q(0)];
        let s3 = pb.sigma_q(&pb.sigma_q(&pb.sigma_q(&alpha)));
        if s3 != alpha || s == alpha {
            return Err(Error::Internal("sigma does not have order 3".into()));
        }
        let basis = vec![vec![q(1), q(0), q(0)], alpha, s.clone()];
        let order = Order::new(&pb, basis)?;
        let field = CubicField {
            m,
            a,
            b,
            nine_divides_m: nine,
            df,
            sigma_poly: [s[0].clone(), s[1].clone(), s[2].clone()],
            disc: m * m,
            order,
        };
        if field.order.discriminant() != &BigInt::from(m * m) {
            return Err(Error::Internal(format!(
                "integral basis discriminant {} differs from m^2",
                field.order.discriminant()
            )));
        }
        Ok(field)
    }

    fn arith(&self) -> PowerBasis {
        PowerBasis {
            modulus: vec![self.df[0].clone(), self.df[1].clone(), self.df[2].clone(), Rat::one()],
            sigma: self.sigma_poly.to_vec(),
        }
    }

    /// Order with integral basis `{1, alpha, sigma(alpha)}`.
    pub fn order(&self) -> &Order {
        &self.order
    }

    pub fn id(&self) -> String {
        format!("cubic:{}", self.m)
    }

    /// Defining polynomial as a human-readable string.
    pub fn df_string(&self) -> String {
        let coeffs = [Rat::one(), self.df[2].clone(), self.df[1].clone(), self.df[0].clone()];
        crate::quartic::format_poly(&coeffs)
    }

    /// Index of `Z[alpha]` in the maximal order.
    pub fn index(&self) -> u64 {
        let disc = cubic_discriminant(&self.df[2], &self.df[1], &self.df[0]);
        let ratio = disc / Rat::from_integer(BigInt::from(self.disc));
        let root = rat_sqrt(&ratio).expect("df discriminant is a square multiple of m^2");
        use num_traits::ToPrimitive;
        root.to_integer().abs().to_u64().expect("index fits in u64")
    }

    pub fn alpha(&self) -> CubicElement {
        CubicElement([q(0), q(1), q(0)])
    }

    pub fn from_int(&self, k: i64) -> CubicElement {
        CubicElement([q(k), q(0), q(0)])
    }

    pub fn mul(&self, x: &CubicElement, y: &CubicElement) -> CubicElement {
        to_elem(self.arith().mul_q(&x.0, &y.0))
    }

    pub fn add(&self, x: &CubicElement, y: &CubicElement) -> CubicElement {
        CubicElement([&x.0[0] + &y.0[0], &x.0[1] + &y.0[1], &x.0[2] + &y.0[2]])
    }

    pub fn sub(&self, x: &CubicElement, y: &CubicElement) -> CubicElement {
        CubicElement([&x.0[0] - &y.0[0], &x.0[1] - &y.0[1], &x.0[2] - &y.0[2]])
    }

    pub fn int_scale(&self, k: i64, x: &CubicElement) -> CubicElement {
        let c = q(k);
        CubicElement([&c * &x.0[0], &c * &x.0[1], &c * &x.0[2]])
    }

    pub fn sigma(&self, x: &CubicElement) -> CubicElement {
        to_elem(self.arith().sigma_q(&x.0))
    }

    pub fn trace(&self, x: &CubicElement) -> Rat {
        self.arith().trace_q(&x.0)
    }

    pub fn norm(&self, x: &CubicElement) -> Rat {
        let s1 = self.sigma(x);
        let s2 = self.sigma(&s1);
        let p = self.mul(&self.mul(x, &s1), &s2);
        p.0[0].clone()
    }

    /// `Tr(x^2)`, the squared length under the Minkowski embedding.
    pub fn length_sq(&self, x: &CubicElement) -> Rat {
        self.trace(&self.mul(x, x))
    }

    /// Gram matrix `Tr(e_i e_j)`; errors when the elements are dependent.
    pub fn gram_form(&self, basis: &[CubicElement]) -> Result<crate::lattice::GramForm> {
        let g: Vec<Vec<Rat>> = basis
            .iter()
            .map(|x| basis.iter().map(|y| self.trace(&self.mul(x, y))).collect())
            .collect();
        crate::lattice::GramForm::new(g)
    }

    /// Coordinates over `{1, alpha, sigma(alpha)}`, or `NotIntegral`.
    pub fn to_integral(&self, x: &CubicElement) -> Result<Elem> {
        self.order.from_field(&x.0)
    }

    pub fn from_integral(&self, x: &[i64]) -> CubicElement {
        to_elem(self.order.to_field(x))
    }

    /// Integral coordinates of `z1 alpha + z2 sigma(alpha) + z3 sigma^2(alpha)`.
    pub fn from_orbit_coords(&self, z: [i64; 3]) -> Elem {
        let o = &self.order;
        let a = o.basis_vector(1);
        let sa = o.sigma(&a);
        let s2a = o.sigma(&sa);
        let mut r = vec![0; 3];
        for (c, v) in z.iter().zip([a, sa, s2a]) {
            r = o.add(&r, &o.scale(*c, &v));
        }
        r
    }

    /// Coordinates over `{alpha, sigma(alpha), sigma^2(alpha)}` (rational in general).
    pub fn to_orbit_coords(&self, x: &[i64]) -> Vec<Rat> {
        let cols: Vec<Elem> = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
            .iter()
            .map(|z| self.from_orbit_coords(*z))
            .collect();
        let m: Vec<Vec<Rat>> = (0..3)
            .map(|i| (0..3).map(|j| q(cols[j][i])).collect())
            .collect();
        let inv = rat_inverse(&m).expect("orbit of alpha is a basis");
        let v: Vec<Rat> = x.iter().map(|&c| q(c)).collect();
        crate::linalg::rat_mat_vec(&inv, &v)
    }

    /// `(A, B)` with `alpha^2 = 2m/9 + A alpha + B sigma(alpha)`, defined when `9 | m`.
    pub fn alpha_square_coeffs(&self) -> Option<(i64, i64)> {
        if !self.nine_divides_m {
            return None;
        }
        let a = self.order.basis_vector(1);
        let sq = self.order.mul(&a, &a);
        (sq[0] == 2 * self.m as i64 / 9).then_some((sq[1], sq[2]))
    }
}

fn to_elem(v: Vec<Rat>) -> CubicElement {
    let v = polymod::pad(v, 3);
    CubicElement([v[0].clone(), v[1].clone(), v[2].clone()])
}

impl CubicElement {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defining_polynomials() {
        let f = CubicField::new(7).unwrap();
        assert_eq!(f.df, [q(1), q(-2), q(-1)]);
        let f = CubicField::new(9).unwrap();
        assert_eq!(f.df, [q(1), q(-3), q(0)]);
        assert!(CubicField::new(12).is_err());
    }

    #[test]
    fn traces_and_lengths() {
        let f = CubicField::new(7).unwrap();
        let al = f.alpha();
        assert_eq!(f.trace(&al), q(1));
        assert_eq!(f.length_sq(&al), qf(15, 3));
        assert_eq!(f.trace(&f.from_int(1)), q(3));
        assert_eq!(f.norm(&f.from_int(1)), q(1));
        let g = CubicField::new(9).unwrap();
        assert_eq!(g.length_sq(&g.alpha()), q(6));
        let am1 = g.sub(&g.alpha(), &g.from_int(1));
        assert_eq!(g.length_sq(&am1), q(9));
    }

    #[test]
    fn sigma_has_order_three() {
        for m in [7u64, 9, 13, 63, 91] {
            let f = CubicField::new(m).unwrap();
            let a = f.alpha();
            let s = f.sigma(&a);
            assert_ne!(s, a);
            assert_eq!(f.sigma(&f.sigma(&s)), a);
            assert_eq!(f.order().discriminant(), &BigInt::from(m * m));
        }
    }

    #[test]
    fn alpha_square_decomposition() {
        let f = CubicField::new(63).unwrap();
        let (a, b) = f.alpha_square_coeffs().unwrap();
        assert_eq!(a * a - a * b + b * b, 7);
    }
}
