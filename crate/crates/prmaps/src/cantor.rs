//! Cantor pairing and the retractive count `ct_A : N -> A` with its
//! section `idx_A`.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::kernel::{Obj, Value};

/// Diagonal pairing bijection `N x N -> N`: `pi(x,y) = (x+y)(x+y+1)/2 + y`.
pub fn cantor_pair(x: &BigUint, y: &BigUint) -> BigUint {
    let s = x + y;
    (&s * (&s + 1u32)) / 2u32 + y
}

/// Inverse of [`cantor_pair`].
pub fn cantor_unpair(n: &BigUint) -> (BigUint, BigUint) {
    // w = floor((sqrt(8n+1) - 1) / 2) is the diagonal index
    let w = ((n * 8u32 + 1u32).sqrt() - 1u32) / 2u32;
    let t = (&w * (&w + 1u32)) / 2u32;
    let y = n - t;
    let x = &w - &y;
    (x, y)
}

pub fn pair_u64(x: u64, y: u64) -> BigUint {
    cantor_pair(&BigUint::from(x), &BigUint::from(y))
}

/// The `k`-th element of `A` in enumeration order. Surjective for every
/// object; collapses all of `N` onto the point for `A = 1`, which is what
/// makes it a retraction rather than a bijection.
pub fn ct(a: &Obj, k: &BigUint) -> Value {
    match a {
        Obj::One => Value::Star,
        Obj::Nat => Value::Num(k.clone()),
        Obj::Prod(x, y) => {
            let (i, j) = cantor_unpair(k);
            Value::pair(ct(x, &i), ct(y, &j))
        }
    }
}

/// A section of [`ct`]: `ct(A, idx(A, v)) = v`.
pub fn idx(a: &Obj, v: &Value) -> Result<BigUint> {
    match (a, v) {
        (Obj::One, Value::Star) => Ok(BigUint::zero()),
        (Obj::Nat, Value::Num(n)) => Ok(n.clone()),
        (Obj::Prod(x, y), Value::PairV(p, q)) => {
            Ok(cantor_pair(&idx(x, p)?, &idx(y, q)?))
        }
        _ => Err(Error::ty(format!("value {v:?} does not inhabit {a:?}"))),
    }
}

/// Convenience wrapper for small counts.
pub fn ct_u64(a: &Obj, k: u64) -> Value {
    ct(a, &BigUint::from(k))
}
