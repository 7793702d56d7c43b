//! Integers that may exceed the 53-bit range of JSON doubles are written as
//! decimal strings; smaller ones stay numbers.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serializer;
use serde_json::Value;

pub const SAFE_INTEGER_BITS: u64 = 53;

pub fn big_uint(v: &BigUint) -> Value {
    if v.bits() <= SAFE_INTEGER_BITS {
        Value::from(v.to_u64().expect("fits in 53 bits"))
    } else {
        Value::String(v.to_str_radix(10))
    }
}

pub fn big_u64<S: Serializer>(v: &u64, s: S) -> Result<S::Ok, S::Error> {
    if *v < (1u64 << SAFE_INTEGER_BITS) {
        s.serialize_u64(*v)
    } else {
        s.serialize_str(&v.to_string())
    }
}

pub fn serialize_big_uint<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    if v.bits() <= SAFE_INTEGER_BITS {
        s.serialize_u64(v.to_u64().expect("fits in 53 bits"))
    } else {
        s.serialize_str(&v.to_str_radix(10))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn threshold() {
        let small = BigUint::from((1u64 << 53) - 1);
        assert!(big_uint(&small).is_number());
        let large = BigUint::from(1u64 << 53);
        assert_eq!(big_uint(&large), Value::String("9007199254740992".into()));
    }
}
