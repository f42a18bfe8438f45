//! Integral ideals as integer lattices in Hermite normal form over an integral basis.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{det_bigint, hnf_bigint, hnf_mod, rat_inverse, solve_upper_integral, IntMatrix, Rat};
use crate::order::Elem;

/// Full-rank sublattice of the ring of integers, usually an ideal.
#[derive(Clone)]
pub struct IdealLattice {
    field: Arc<Field>,
    h: IntMatrix,
    norm: u64,
}

impl fmt::Debug for IdealLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdealLattice")
            .field("field", &self.field.id())
            .field("norm", &self.norm)
            .field("h", &self.h)
            .finish()
    }
}

impl PartialEq for IdealLattice {
    fn eq(&self, other: &Self) -> bool {
        self.h == other.h && (Arc::ptr_eq(&self.field, &other.field) || self.field == other.field)
    }
}

impl Eq for IdealLattice {}

fn big_cols(cols: &[Vec<i128>]) -> Vec<Vec<BigInt>> {
    cols.iter().map(|c| c.iter().map(|&v| BigInt::from(v)).collect()).collect()
}

fn diag_product(h: &IntMatrix) -> u64 {
    (0..h.len()).map(|i| h[i][i] as u64).product()
}

/// HNF of the span of `cols`, which must contain `modulus * Z^n`.
fn hnf_with(cols: &[Vec<i128>], n: usize, modulus: Option<BigInt>) -> Result<IntMatrix> {
    if let Some(d) = modulus.as_ref().and_then(|d| d.to_i128()) {
        if d > 0 && d < (1i128 << 62) {
            return Ok(hnf_mod(cols, n, d));
        }
    }
    let h = hnf_bigint(&big_cols(cols), n);
    h.iter()
        .map(|r| {
            r.iter()
                .map(|v| v.to_i64().ok_or_else(|| Error::Internal("HNF entry overflows i64".into())))
                .collect()
        })
        .collect()
}

fn rank_is_full(cols: &[Vec<i128>], n: usize) -> bool {
    crate::linalg::rank_fraction_free(&big_cols(cols)) == n
}

impl IdealLattice {
    fn from_hnf(field: Arc<Field>, h: IntMatrix) -> Self {
        let norm = diag_product(&h);
        IdealLattice { field, h, norm }
    }

    /// The whole ring of integers.
    pub fn unit(field: &Arc<Field>) -> Self {
        let n = field.degree();
        let h = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        Self::from_hnf(field.clone(), h)
    }

    /// Ideal generated by `gens` (integral coordinates).
    pub fn from_generators(field: &Arc<Field>, gens: &[Elem]) -> Result<Self> {
        let o = field.order();
        let n = o.n();
        let nonzero: Vec<&Elem> = gens.iter().filter(|g| g.iter().any(|&v| v != 0)).collect();
        if nonzero.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        let mut cols = Vec::with_capacity(nonzero.len() * n);
        let mut modulus = BigInt::zero();
        for g in &nonzero {
            for j in 0..n {
                cols.push(o.mul(g, &o.basis_vector(j)).iter().map(|&v| v as i128).collect());
            }
            modulus = modulus.gcd(&o.norm(g).abs());
        }
        let h = hnf_with(&cols, n, Some(modulus))?;
        Ok(Self::from_hnf(field.clone(), h))
    }

    /// The `Z`-span of the given integral vectors, which must have full rank.
    pub fn from_z_basis(field: &Arc<Field>, cols: &[Elem]) -> Result<Self> {
        let n = field.degree();
        let c: Vec<Vec<i128>> = cols.iter().map(|v| v.iter().map(|&x| x as i128).collect()).collect();
        if !rank_is_full(&c, n) {
            return Err(Error::InvalidArgument("vectors do not span a full-rank lattice".into()));
        }
        let modulus = if c.len() == n {
            let m: Vec<Vec<BigInt>> = (0..n)
                .map(|i| (0..n).map(|j| BigInt::from(c[j][i])).collect())
                .collect();
            Some(det_bigint(&m).abs())
        } else {
            None
        };
        let h = hnf_with(&c, n, modulus)?;
        Ok(Self::from_hnf(field.clone(), h))
    }

    /// The `Z`-span of field elements given in the field's own rational coordinates.
    pub fn from_field_basis(field: &Arc<Field>, elems: &[Vec<Rat>]) -> Result<Self> {
        let cols: Vec<Elem> = elems
            .iter()
            .map(|e| field.order().from_field(e))
            .collect::<Result<_>>()?;
        Self::from_z_basis(field, &cols)
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn hnf(&self) -> &IntMatrix {
        &self.h
    }

    pub fn norm(&self) -> u64 {
        self.norm
    }

    pub fn dim(&self) -> usize {
        self.h.len()
    }

    /// HNF columns as integral elements.
    pub fn columns(&self) -> Vec<Elem> {
        let n = self.dim();
        (0..n).map(|j| (0..n).map(|i| self.h[i][j]).collect()).collect()
    }

    /// Integral coordinates of `sum_j v_j col_j`.
    pub fn combine(&self, v: &[i64]) -> Elem {
        let n = self.dim();
        (0..n).map(|i| (0..n).map(|j| self.h[i][j] * v[j]).sum()).collect()
    }

    /// HNF flattened row by row.
    pub fn hnf_row_major(&self) -> Vec<i64> {
        self.h.iter().flatten().copied().collect()
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.field, &other.field) || self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn contains(&self, e: &[i64]) -> bool {
        let v: Vec<i128> = e.iter().map(|&x| x as i128).collect();
        solve_upper_integral(&self.h, &v).is_some()
    }

    pub fn contains_lattice(&self, other: &Self) -> bool {
        other.columns().iter().all(|c| self.contains(c))
    }

    pub fn equal(&self, other: &Self) -> bool {
        self == other
    }

    pub fn mul_ideals(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        if self.norm.checked_mul(other.norm).is_none() {
            return Err(Error::InvalidArgument(format!(
                "norm {} * {} of the product overflows u64",
                self.norm, other.norm
            )));
        }
        let o = self.field.order();
        let n = o.n();
        let mut cols = Vec::with_capacity(n * n);
        for x in self.columns() {
            for y in other.columns() {
                cols.push(o.mul(&x, &y).iter().map(|&v| v as i128).collect());
            }
        }
        let modulus = BigInt::from(self.norm) * BigInt::from(other.norm);
        let h = hnf_with(&cols, n, Some(modulus))?;
        Ok(Self::from_hnf(self.field.clone(), h))
    }

    pub fn power(&self, e: u32) -> Result<Self> {
        let mut r = Self::unit(&self.field);
        for _ in 0..e {
            r = r.mul_ideals(self)?;
        }
        Ok(r)
    }

    /// Image under the Galois generator.
    pub fn sigma(&self) -> Self {
        let o = self.field.order();
        let cols: Vec<Vec<i128>> = self
            .columns()
            .iter()
            .map(|c| o.sigma(c).iter().map(|&v| v as i128).collect())
            .collect();
        let h = hnf_mod(&cols, self.dim(), self.norm as i128);
        Self::from_hnf(self.field.clone(), h)
    }

    /// Primitive: not contained in `kO` for any integer `k > 1`.
    pub fn is_primitive(&self) -> bool {
        self.h.iter().flatten().fold(0i128, |g, &v| g.gcd(&(v as i128))) == 1
    }

    /// Closed under multiplication by every integral-basis element.
    pub fn validate_ideal(&self) -> bool {
        let o = self.field.order();
        self.columns().iter().all(|c| {
            (0..o.n()).all(|j| self.contains(&o.mul(c, &o.basis_vector(j))))
        })
    }

    /// Lattice intersection, via the sum of dual lattices.
    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let n = self.dim();
        let d = BigInt::from(self.norm) * BigInt::from(other.norm);
        let mut cols: Vec<Vec<BigInt>> = Vec::new();
        for a in [self, other] {
            let hm: Vec<Vec<Rat>> = a
                .h
                .iter()
                .map(|r| r.iter().map(|&v| Rat::from_integer(v.into())).collect())
                .collect();
            let inv = rat_inverse(&hm).expect("full-rank lattice");
            // columns of D * H^{-T} are the rows of D * H^{-1}
            for row in inv {
                cols.push(row.iter().map(|v| (v * Rat::from_integer(d.clone())).to_integer()).collect());
            }
        }
        let m = hnf_bigint(&cols, n);
        let mr: Vec<Vec<Rat>> = m.iter().map(|r| r.iter().map(|v| Rat::from_integer(v.clone())).collect()).collect();
        let minv = rat_inverse(&mr).expect("full-rank dual");
        // columns of D * M^{-T} are the rows of D * M^{-1}
        let out: Vec<Vec<i128>> = minv
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| {
                        let t = v * Rat::from_integer(d.clone());
                        t.to_integer().to_i128().expect("intersection entry fits")
                    })
                    .collect()
            })
            .collect();
        let l = BigInt::from(self.norm).lcm(&BigInt::from(other.norm));
        let h = hnf_with(&out, n, Some(l))?;
        Ok(Self::from_hnf(self.field.clone(), h))
    }

    /// `det(Gram of columns) = N(A)^2 |disc|`.
    pub fn gram_determinant_matches(&self) -> bool {
        let o = self.field.order();
        let cols = self.columns();
        let g: Vec<Vec<BigInt>> = cols
            .iter()
            .map(|x| cols.iter().map(|y| BigInt::from(o.bilinear(x, y))).collect())
            .collect();
        let want = BigInt::from(self.norm).pow(2) * o.discriminant().abs();
        det_bigint(&g) == want
    }
}

/// The index-`l` sublattice `{z1 alpha + z2 sigma(alpha) + z3 sigma^2(alpha) : l | z1+z2+z3}`
/// of a cubic field with `3` not dividing `m`.
pub fn trace_sublattice(field: &Arc<Field>, l: u64) -> Result<IdealLattice> {
    let cubic = field
        .as_cubic()
        .ok_or_else(|| Error::InvalidArgument("trace sublattice needs a cubic field".into()))?;
    if cubic.m % 3 == 0 {
        return Err(Error::InvalidArgument("trace sublattice needs 3 not dividing m".into()));
    }
    let l = l as i64;
    let cols = vec![
        cubic.from_orbit_coords([1, -1, 0]),
        cubic.from_orbit_coords([0, 1, -1]),
        cubic.from_orbit_coords([l, 0, 0]),
    ];
    IdealLattice::from_z_basis(field, &cols)
}

impl fmt::Display for IdealLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .h
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "N={} [{}]", self.norm, rows.join("; "))
    }
}

/// All primitive ideals of norm at most `bound`, sorted by norm then HNF.
pub fn enumerate_primitive_ideals(field: &Arc<Field>, bound: u64) -> Result<Vec<IdealLattice>> {
    let mut out = vec![IdealLattice::unit(field)];
    for p in crate::numtheory::primes_up_to(bound) {
        let dec = crate::decompose::decompose_prime(field, p)?;
        let locals = local_primitive_parts(&dec, bound)?;
        if locals.is_empty() {
            continue;
        }
        let mut next = out.clone();
        for base in &out {
            for loc in &locals {
                if (base.norm as u128) * (loc.norm as u128) <= bound as u128 {
                    next.push(base.mul_ideals(loc)?);
                }
            }
        }
        out = next;
    }
    out.sort_by(|a, b| (a.norm, &a.h).cmp(&(b.norm, &b.h)));
    out.dedup();
    Ok(out)
}

/// Nontrivial primitive ideals supported above one prime, with norm at most `bound`.
fn local_primitive_parts(
    dec: &crate::decompose::PrimeDecomposition,
    bound: u64,
) -> Result<Vec<IdealLattice>> {
    let g = dec.factors.len();
    let e = dec.factors.first().map_or(1, |f| f.e);
    let mut out = Vec::new();
    let maxk: Vec<u32> = dec
        .factors
        .iter()
        .map(|f| {
            let mut k = 0;
            let mut v: u128 = 1;
            while v * f.ideal.norm as u128 <= bound as u128 {
                v *= f.ideal.norm as u128;
                k += 1;
            }
            k
        })
        .collect();
    let mut k = vec![0u32; g];
    loop {
        // advance the exponent vector (odometer), each k_i in 0..=maxk_i
        let mut i = 0;
        loop {
            if i == g {
                return Ok(out);
            }
            if k[i] < maxk[i] {
                k[i] += 1;
                break;
            }
            k[i] = 0;
            i += 1;
        }
        let primitive = k.iter().any(|&ki| ki < e);
        if !primitive {
            continue;
        }
        let mut norm: u128 = 1;
        for (ki, f) in k.iter().zip(&dec.factors) {
            norm = norm.saturating_mul((f.ideal.norm as u128).saturating_pow(*ki));
        }
        if norm > bound as u128 {
            continue;
        }
        let mut ideal = IdealLattice::unit(dec.factors[0].ideal.field());
        for (ki, f) in k.iter().zip(&dec.factors) {
            if *ki > 0 {
                ideal = ideal.mul_ideals(&f.ideal.power(*ki)?)?;
            }
        }
        out.push(ideal);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_and_principal() {
        let f = Arc::new(Field::cubic(7).unwrap());
        let o = IdealLattice::from_generators(&f, &[vec![1, 0, 0]]).unwrap();
        assert_eq!(o, IdealLattice::unit(&f));
        let seven = IdealLattice::from_generators(&f, &[vec![7, 0, 0]]).unwrap();
        assert_eq!(seven.norm(), 343);
        let p = IdealLattice::from_generators(&f, &[vec![7, 0, 0], vec![2, 1, 0]]).unwrap();
        assert_eq!(p.norm(), 7);
        assert_eq!(p.power(3).unwrap(), seven);
        assert!(p.validate_ideal());
    }

    #[test]
    fn intersection_of_coprime() {
        let f = Arc::new(Field::cubic(91).unwrap());
        let a = IdealLattice::from_generators(&f, &[vec![7, 0, 0]]).unwrap();
        let b = IdealLattice::from_generators(&f, &[vec![13, 0, 0]]).unwrap();
        let c = a.intersection(&b).unwrap();
        assert_eq!(c, IdealLattice::from_generators(&f, &[vec![91, 0, 0]]).unwrap());
    }

    #[test]
    fn trace_sublattice_ideal_iff_divides() {
        let f = Arc::new(Field::cubic(7).unwrap());
        assert_eq!(trace_sublattice(&f, 1).unwrap(), IdealLattice::unit(&f));
        assert!(trace_sublattice(&f, 7).unwrap().validate_ideal());
        assert!(!trace_sublattice(&f, 2).unwrap().validate_ideal());
    }
}
