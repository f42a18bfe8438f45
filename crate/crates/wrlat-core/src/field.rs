//! A field of either supported degree, behind one handle.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::cubic::CubicField;
use crate::error::{Error, Result};
use crate::order::Order;
use crate::quartic::QuarticField;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Field {
    Cubic(CubicField),
    Quartic(QuarticField),
}

impl Field {
    pub fn cubic(m: u64) -> Result<Self> {
        CubicField::new(m).map(Field::Cubic)
    }

    pub fn quartic(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        QuarticField::new(a, b, c, d).map(Field::Quartic)
    }

    /// Parses `cubic:m` or `quartic:a,b,c,d`.
    pub fn parse(id: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("cannot parse field id `{id}`"));
        let (kind, rest) = id.split_once(':').ok_or_else(bad)?;
        match kind.trim() {
            "cubic" => {
                let m: u64 = rest.trim().parse().map_err(|_| bad())?;
                Field::cubic(m)
            }
            "quartic" => {
                let v: Vec<i64> = rest
                    .split(',')
                    .map(|s| s.trim().parse::<i64>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| bad())?;
                if v.len() != 4 {
                    return Err(bad());
                }
                Field::quartic(v[0], v[1], v[2], v[3])
            }
            _ => Err(bad()),
        }
    }

    pub fn order(&self) -> &Order {
        match self {
            Field::Cubic(f) => f.order(),
            Field::Quartic(f) => f.order(),
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            Field::Cubic(_) => 3,
            Field::Quartic(_) => 4,
        }
    }

    pub fn id(&self) -> String {
        match self {
            Field::Cubic(f) => f.id(),
            Field::Quartic(f) => f.id(),
        }
    }

    pub fn disc(&self) -> BigInt {
        self.order().discriminant().clone()
    }

    pub fn disc_abs(&self) -> u64 {
        use num_traits::ToPrimitive;
        self.order().discriminant().abs().to_u64().expect("discriminant fits in u64")
    }

    pub fn as_cubic(&self) -> Option<&CubicField> {
        match self {
            Field::Cubic(f) => Some(f),
            Field::Quartic(_) => None,
        }
    }

    pub fn as_quartic(&self) -> Option<&QuarticField> {
        match self {
            Field::Quartic(f) => Some(f),
            Field::Cubic(_) => None,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}
