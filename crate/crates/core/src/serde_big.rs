//! JSON encoding for big integers: a plain number when it fits in 64 bits,
//! a decimal string otherwise.

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Repr {
    Unsigned(u64),
    Signed(i64),
    Text(String),
}

pub fn ser_uint<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    match v.to_u64() {
        Some(x) => s.serialize_u64(x),
        None => s.serialize_str(&v.to_string()),
    }
}

pub fn de_uint<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
    match Repr::deserialize(d)? {
        Repr::Unsigned(x) => Ok(BigUint::from(x)),
        Repr::Signed(_) => Err(D::Error::custom("negative value for unsigned integer")),
        Repr::Text(t) => t.parse().map_err(D::Error::custom),
    }
}

pub fn ser_int<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match v.to_i64() {
        Some(x) => s.serialize_i64(x),
        None => s.serialize_str(&v.to_string()),
    }
}

pub fn de_int<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
    match Repr::deserialize(d)? {
        Repr::Unsigned(x) => Ok(BigInt::from(x)),
        Repr::Signed(x) => Ok(BigInt::from(x)),
        Repr::Text(t) => t.parse().map_err(D::Error::custom),
    }
}

/// `Option<BigUint>` variant.
pub mod opt_uint {
    use super::*;

    pub fn serialize<S: Serializer>(v: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(x) => super::ser_uint(x, s),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigUint>, D::Error> {
        match Option::<Repr>::deserialize(d)? {
            None => Ok(None),
            Some(Repr::Unsigned(x)) => Ok(Some(BigUint::from(x))),
            Some(Repr::Signed(_)) => Err(D::Error::custom("negative value")),
            Some(Repr::Text(t)) => t.parse().map(Some).map_err(D::Error::custom),
        }
    }
}

/// Newtype wrapper so collections of big integers can derive serde.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Big(#[serde(serialize_with = "ser_uint", deserialize_with = "de_uint")] pub BigUint);

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BigSigned(#[serde(serialize_with = "ser_int", deserialize_with = "de_int")] pub BigInt);
