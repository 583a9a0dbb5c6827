//! Gödel numbering of objects and map terms.
//!
//! A term code is `pair(tag, payload)` with tags 0..8 for zero, successor,
//! identity, terminal, left/right projection, composition, pairing, and
//! iteration. Payloads are object codes or paired subterm codes. Decoding
//! enforces the typing side conditions, so the set of valid codes is exactly
//! the union of the hom-sets `[A,B]`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::cantor::{cantor_pair, cantor_unpair};
use crate::error::{Error, Result};
use crate::kernel::{MapTerm, Obj};

const TAG_ZERO: u32 = 0;
const TAG_SUCC: u32 = 1;
const TAG_ID: u32 = 2;
const TAG_TERMINAL: u32 = 3;
const TAG_PROJL: u32 = 4;
const TAG_PROJR: u32 = 5;
const TAG_COMPOSE: u32 = 6;
const TAG_PAIR: u32 = 7;
const TAG_ITER: u32 = 8;

/// A Gödel number of a well-typed map term.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Code(BigUint);

impl Code {
    pub fn from_biguint(n: BigUint) -> Code {
        Code(n)
    }

    pub fn from_u64(n: u64) -> Code {
        Code(BigUint::from(n))
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Code({})", self.0)
    }
}

impl FromStr for Code {
    type Err = Error;

    /// Accepts decimal, or hex with a `0x` prefix.
    fn from_str(s: &str) -> Result<Code> {
        let n = if let Some(hex) = s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
            BigUint::parse_bytes(hex.as_bytes(), 16)
        } else {
            BigUint::parse_bytes(s.as_bytes(), 10)
        };
        n.map(Code).ok_or_else(|| Error::decode(format!("invalid code literal {s:?}")))
    }
}

/// `1 -> 0`, `N -> 1`, `A x B -> 2 + pair(code A, code B)`.
pub fn encode_obj(a: &Obj) -> BigUint {
    match a {
        Obj::One => BigUint::zero(),
        Obj::Nat => BigUint::from(1u32),
        Obj::Prod(x, y) => cantor_pair(&encode_obj(x), &encode_obj(y)) + 2u32,
    }
}

pub fn decode_obj(n: &BigUint) -> Result<Obj> {
    if n.is_zero() {
        return Ok(Obj::One);
    }
    if *n == BigUint::from(1u32) {
        return Ok(Obj::Nat);
    }
    let (x, y) = cantor_unpair(&(n - 2u32));
    Ok(Obj::prod(decode_obj(&x)?, decode_obj(&y)?))
}

pub fn encode_term(t: &MapTerm) -> Code {
    let (tag, payload) = match t {
        MapTerm::Zero => (TAG_ZERO, BigUint::zero()),
        MapTerm::Succ => (TAG_SUCC, BigUint::zero()),
        MapTerm::Id(a) => (TAG_ID, encode_obj(a)),
        MapTerm::Terminal(a) => (TAG_TERMINAL, encode_obj(a)),
        MapTerm::ProjL(a, b) => (TAG_PROJL, cantor_pair(&encode_obj(a), &encode_obj(b))),
        MapTerm::ProjR(a, b) => (TAG_PROJR, cantor_pair(&encode_obj(a), &encode_obj(b))),
        MapTerm::Compose(g, f) => (
            TAG_COMPOSE,
            cantor_pair(encode_term(g).value(), encode_term(f).value()),
        ),
        MapTerm::Pair(f, g) => (
            TAG_PAIR,
            cantor_pair(encode_term(f).value(), encode_term(g).value()),
        ),
        MapTerm::Iter(f) => (TAG_ITER, encode_term(f).value().clone()),
    };
    Code(cantor_pair(&BigUint::from(tag), &payload))
}

/// One decoded layer of a code: constructor and immediate subcodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CodeLayer {
    Zero,
    Succ,
    Id(Obj),
    Terminal(Obj),
    ProjL(Obj, Obj),
    ProjR(Obj, Obj),
    Compose(Code, Code),
    Pair(Code, Code),
    Iter(Code),
}

/// Peels the top constructor off a code without touching the subcodes.
pub fn decode_layer(c: &Code) -> Result<CodeLayer> {
    let (tag, payload) = cantor_unpair(c.value());
    let tag: u32 = match u32::try_from(&tag) {
        Ok(t) if t <= TAG_ITER => t,
        _ => return Err(Error::decode(format!("code {c}: unknown tag {tag}"))),
    };
    match tag {
        TAG_ZERO | TAG_SUCC => {
            if !payload.is_zero() {
                return Err(Error::decode(format!(
                    "code {c}: constant tag {tag} with nonzero payload"
                )));
            }
            Ok(if tag == TAG_ZERO {
                CodeLayer::Zero
            } else {
                CodeLayer::Succ
            })
        }
        TAG_ID => Ok(CodeLayer::Id(decode_obj(&payload)?)),
        TAG_TERMINAL => Ok(CodeLayer::Terminal(decode_obj(&payload)?)),
        TAG_PROJL | TAG_PROJR => {
            let (a, b) = cantor_unpair(&payload);
            let (a, b) = (decode_obj(&a)?, decode_obj(&b)?);
            Ok(if tag == TAG_PROJL {
                CodeLayer::ProjL(a, b)
            } else {
                CodeLayer::ProjR(a, b)
            })
        }
        TAG_COMPOSE | TAG_PAIR => {
            let (x, y) = cantor_unpair(&payload);
            let (x, y) = (Code(x), Code(y));
            Ok(if tag == TAG_COMPOSE {
                CodeLayer::Compose(x, y)
            } else {
                CodeLayer::Pair(x, y)
            })
        }
        TAG_ITER => Ok(CodeLayer::Iter(Code(payload))),
        _ => unreachable!(),
    }
}

fn decode_typed(c: &Code) -> Result<(MapTerm, Obj, Obj)> {
    match decode_layer(c)? {
        CodeLayer::Zero => Ok((MapTerm::Zero, Obj::One, Obj::Nat)),
        CodeLayer::Succ => Ok((MapTerm::Succ, Obj::Nat, Obj::Nat)),
        CodeLayer::Id(a) => Ok((MapTerm::Id(a.clone()), a.clone(), a)),
        CodeLayer::Terminal(a) => Ok((MapTerm::Terminal(a.clone()), a, Obj::One)),
        CodeLayer::ProjL(a, b) => Ok((
            MapTerm::ProjL(a.clone(), b.clone()),
            Obj::prod(a.clone(), b),
            a,
        )),
        CodeLayer::ProjR(a, b) => Ok((
            MapTerm::ProjR(a.clone(), b.clone()),
            Obj::prod(a, b.clone()),
            b,
        )),
        CodeLayer::Compose(g, f) => {
            let (gt, gd, gc) = decode_typed(&g)?;
            let (ft, fd, fc) = decode_typed(&f)?;
            if fc != gd {
                return Err(Error::ty(format!(
                    "code {c}: composition {g} . {f} mismatches hom-sets ({fc:?} vs {gd:?})"
                )));
            }
            Ok((MapTerm::compose(gt, ft), fd, gc))
        }
        CodeLayer::Pair(f, g) => {
            let (ft, fd, fc) = decode_typed(&f)?;
            let (gt, gd, gc) = decode_typed(&g)?;
            if fd != gd {
                return Err(Error::ty(format!(
                    "code {c}: pairing <{f}; {g}> mismatches domains ({fd:?} vs {gd:?})"
                )));
            }
            Ok((MapTerm::pair(ft, gt), fd, Obj::prod(fc, gc)))
        }
        CodeLayer::Iter(f) => {
            let (ft, fd, fc) = decode_typed(&f)?;
            if fd != fc {
                return Err(Error::ty(format!(
                    "code {c}: iterated code {f} is not an endomap ({fd:?} -> {fc:?})"
                )));
            }
            Ok((MapTerm::iter(ft), Obj::prod(fd.clone(), Obj::Nat), fd))
        }
    }
}

/// Decodes a valid, well-typed code back to its term.
pub fn decode_term(c: &Code) -> Result<MapTerm> {
    decode_typed(c).map(|(t, _, _)| t)
}

/// Signature of a valid code.
pub fn code_signature(c: &Code) -> Result<(Obj, Obj)> {
    decode_typed(c).map(|(_, d, k)| (d, k))
}

/// True iff `c` is a valid code with signature exactly `(a, b)`.
pub fn in_homset(c: &Code, a: &Obj, b: &Obj) -> bool {
    match code_signature(c) {
        Ok((d, k)) => &d == a && &k == b,
        Err(_) => false,
    }
}

fn raw_tagged(tag: u32, payload: BigUint) -> Code {
    Code(cantor_pair(&BigUint::from(tag), &payload))
}

/// Internal composition `g ⊙ f` on codes; checks the hom-set side condition.
pub fn compose_codes(g: &Code, f: &Code) -> Result<Code> {
    let (_, fc) = code_signature(f)?;
    let (gd, _) = code_signature(g)?;
    if fc != gd {
        return Err(Error::ty(format!(
            "compose_codes: {fc:?} does not match {gd:?}"
        )));
    }
    Ok(raw_tagged(TAG_COMPOSE, cantor_pair(g.value(), f.value())))
}

/// Internal induced map `<f; g>` on codes; checks the shared domain.
pub fn pair_codes(f: &Code, g: &Code) -> Result<Code> {
    let (fd, _) = code_signature(f)?;
    let (gd, _) = code_signature(g)?;
    if fd != gd {
        return Err(Error::ty(format!(
            "pair_codes: domains {fd:?} and {gd:?} differ"
        )));
    }
    Ok(raw_tagged(TAG_PAIR, cantor_pair(f.value(), g.value())))
}

/// Internal iteration `f^$`; `f` must code an endomap.
pub fn iter_code(f: &Code) -> Result<Code> {
    let (fd, fc) = code_signature(f)?;
    if fd != fc {
        return Err(Error::ty(format!(
            "iter_code: {fd:?} -> {fc:?} is not an endomap"
        )));
    }
    Ok(raw_tagged(TAG_ITER, f.value().clone()))
}

/// Internal cartesian product of codes `f x g = <f ⊙ l; g ⊙ r>`.
pub fn product_codes(f: &Code, g: &Code) -> Result<Code> {
    let (fd, _) = code_signature(f)?;
    let (gd, _) = code_signature(g)?;
    let l = encode_term(&MapTerm::ProjL(fd.clone(), gd.clone()));
    let r = encode_term(&MapTerm::ProjR(fd, gd));
    pair_codes(&compose_codes(f, &l)?, &compose_codes(g, &r)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cantor::pair_u64;
    use crate::kernel::infer_type;
    use crate::sampling;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::HashSet;

    #[test]
    fn object_codes_fixed_values() {
        assert_eq!(encode_obj(&Obj::One), BigUint::zero());
        assert_eq!(encode_obj(&Obj::Nat), BigUint::from(1u32));
        // pair(1,1) = 4 by the diagonal enumeration, so N x N -> 6
        assert_eq!(
            encode_obj(&Obj::prod(Obj::Nat, Obj::Nat)),
            BigUint::from(6u32)
        );
    }

    #[test]
    fn object_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xd3c0);
        for _ in 0..500 {
            let a = sampling::random_obj(&mut rng, 6);
            assert_eq!(decode_obj(&encode_obj(&a)).unwrap(), a);
        }
    }

    #[test]
    fn zero_code_is_zero() {
        assert_eq!(*encode_term(&MapTerm::Zero).value(), pair_u64(0, 0));
        assert!(encode_term(&MapTerm::Zero).value().is_zero());
    }

    #[test]
    fn term_roundtrip_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xc0de);
        for _ in 0..1000 {
            let t = sampling::random_term(&mut rng, 6);
            let c = encode_term(&t);
            assert_eq!(decode_term(&c).unwrap(), t);
        }
    }

    #[test]
    fn decode_rejects_ill_typed_composition() {
        // s ⊙ id_1 mismatches [1,1] against [N,N]
        let s = encode_term(&MapTerm::Succ);
        let id_one = encode_term(&MapTerm::Id(Obj::One));
        let bad = raw_tagged(TAG_COMPOSE, cantor_pair(s.value(), id_one.value()));
        assert!(matches!(decode_term(&bad), Err(Error::Type(_))));
        assert!(compose_codes(&s, &id_one).is_err());
    }

    #[test]
    fn decode_rejects_malformed_payloads() {
        // zero/successor tags carry no payload
        let bad = raw_tagged(TAG_ZERO, BigUint::from(1u32));
        assert!(matches!(decode_term(&bad), Err(Error::Decode(_))));
        // tag out of range
        let bad = Code(pair_u64(9, 0));
        assert!(matches!(decode_term(&bad), Err(Error::Decode(_))));
    }

    #[test]
    fn homset_membership() {
        let s = encode_term(&MapTerm::Succ);
        assert!(in_homset(&s, &Obj::Nat, &Obj::Nat));
        assert!(!in_homset(&s, &Obj::One, &Obj::Nat));
        // 17 = pair(3, 2) decodes as the terminal map on 1 x 1; it lies in
        // exactly one hom-set and no other
        let c17 = Code::from_u64(17);
        let one_sq = Obj::prod(Obj::One, Obj::One);
        assert!(in_homset(&c17, &one_sq, &Obj::One));
        assert!(!in_homset(&c17, &Obj::Nat, &Obj::Nat));
        assert!(!in_homset(&c17, &Obj::One, &Obj::Nat));
        // 45 = pair(9, 0) has an out-of-range tag: a genuine non-code
        let c45 = Code::from_u64(45);
        assert!(decode_term(&c45).is_err());
        assert!(!in_homset(&c45, &Obj::Nat, &Obj::Nat));
        assert!(!in_homset(&c45, &one_sq, &Obj::One));
    }

    #[test]
    fn every_valid_code_lies_in_one_homset() {
        for n in 0..4000u64 {
            let c = Code::from_u64(n);
            if let Ok(t) = decode_term(&c) {
                let sig = infer_type(&t).unwrap();
                let sig2 = code_signature(&c).unwrap();
                assert_eq!(sig, sig2);
            }
        }
    }

    #[test]
    fn injectivity_on_random_terms() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xf00d);
        let mut terms = HashSet::new();
        let mut codes = HashSet::new();
        for _ in 0..10_000 {
            let t = sampling::random_term(&mut rng, 5);
            let fresh_term = terms.insert(t.clone());
            let fresh_code = codes.insert(encode_term(&t).value().clone());
            assert_eq!(fresh_term, fresh_code, "collision on {t:?}");
        }
    }

    #[test]
    fn code_literal_parsing() {
        assert_eq!(*"17".parse::<Code>().unwrap().value(), BigUint::from(17u32));
        assert_eq!(
            *"0x11".parse::<Code>().unwrap().value(),
            BigUint::from(17u32)
        );
        assert!("zz".parse::<Code>().is_err());
    }

    #[test]
    fn internal_constructors_match_encoding() {
        let s = encode_term(&MapTerm::Succ);
        let z = encode_term(&MapTerm::Zero);
        assert_eq!(
            compose_codes(&s, &z).unwrap(),
            encode_term(&MapTerm::compose(MapTerm::Succ, MapTerm::Zero))
        );
        assert_eq!(
            pair_codes(&z, &z).unwrap(),
            encode_term(&MapTerm::pair(MapTerm::Zero, MapTerm::Zero))
        );
        assert_eq!(
            iter_code(&s).unwrap(),
            encode_term(&MapTerm::iter(MapTerm::Succ))
        );
        let id_n = encode_term(&MapTerm::Id(Obj::Nat));
        assert_eq!(
            product_codes(&s, &id_n).unwrap(),
            encode_term(
                &crate::kernel::product_map(&MapTerm::Succ, &MapTerm::Id(Obj::Nat)).unwrap()
            )
        );
    }
}
