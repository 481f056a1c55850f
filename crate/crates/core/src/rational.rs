//! Exact rationals and their `p/q` string form.

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::Error;

pub type Q = Ratio<i64>;

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

pub fn frac(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

/// Canonical `p/q` form with `q > 0`; integers keep the `/1`.
pub fn to_string(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Short form used in tables: integers print without a denominator.
pub fn pretty(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        to_string(x)
    }
}

pub fn parse(s: &str) -> Result<Q, Error> {
    let bad = || Error::BadRational(s.to_string());
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => s.parse::<i64>().map(Q::from_integer).map_err(|_| bad()),
    }
}

pub fn is_zero(x: &Q) -> bool {
    x.is_zero()
}

pub fn one() -> Q {
    Q::one()
}

/// Serde adapters writing rationals as `p/q` strings.
pub mod serde_q {
    use super::*;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&to_string(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        parse(&s).map_err(D::Error::custom)
    }

    pub mod vec {
        use super::*;
        use serde::ser::SerializeSeq;

        pub fn serialize<S: Serializer>(xs: &[Q], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(xs.len()))?;
            for x in xs {
                seq.serialize_element(&to_string(x))?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Q>, D::Error> {
            let v = Vec::<String>::deserialize(d)?;
            v.iter()
                .map(|s| parse(s).map_err(D::Error::custom))
                .collect()
        }
    }

    pub mod opt {
        use super::*;

        pub fn serialize<S: Serializer>(x: &Option<Q>, s: S) -> Result<S::Ok, S::Error> {
            match x {
                Some(x) => s.serialize_some(&to_string(x)),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Q>, D::Error> {
            let v = Option::<String>::deserialize(d)?;
            v.map(|s| parse(&s).map_err(D::Error::custom)).transpose()
        }
    }
}
