//! Evaluation of Gödel codes on values.
//!
//! `ev` recurses on the code structure itself, peeling one tag per step;
//! it never decodes a code to a term first. The decode-then-evaluate path
//! exists separately in `kernel`, and the two must agree — that agreement
//! is checked by [`objectivity_check`], not assumed.

use num_traits::Zero;

use crate::codec::{decode_layer, encode_term, Code, CodeLayer};
use crate::error::{Error, Result};
use crate::kernel::{eval_map, MapTerm, Value};

/// Runs the code `c` on a value of its domain.
///
/// Iteration loops over the count instead of recursing on it, so call depth
/// is bounded by the code's nesting alone.
pub fn ev(c: &Code, v: &Value) -> Result<Value> {
    match decode_layer(c)? {
        CodeLayer::Zero => match v {
            Value::Star => Ok(Value::num(0)),
            _ => Err(Error::ty(format!("zero code applied to {v:?}"))),
        },
        CodeLayer::Succ => match v {
            Value::Num(n) => Ok(Value::Num(n + 1u32)),
            _ => Err(Error::ty(format!("successor code applied to {v:?}"))),
        },
        CodeLayer::Id(_) => Ok(v.clone()),
        CodeLayer::Terminal(_) => Ok(Value::Star),
        CodeLayer::ProjL(_, _) => match v {
            Value::PairV(a, _) => Ok((**a).clone()),
            _ => Err(Error::ty(format!("projection code applied to {v:?}"))),
        },
        CodeLayer::ProjR(_, _) => match v {
            Value::PairV(_, b) => Ok((**b).clone()),
            _ => Err(Error::ty(format!("projection code applied to {v:?}"))),
        },
        CodeLayer::Compose(g, f) => ev(&g, &ev(&f, v)?),
        CodeLayer::Pair(f, g) => Ok(Value::pair(ev(&f, v)?, ev(&g, v)?)),
        CodeLayer::Iter(f) => match v {
            Value::PairV(a, n) => match &**n {
                Value::Num(count) => {
                    let mut acc = (**a).clone();
                    let mut left = count.clone();
                    while !left.is_zero() {
                        acc = ev(&f, &acc)?;
                        left -= 1u32;
                    }
                    Ok(acc)
                }
                _ => Err(Error::ty(format!("iteration count is not a number: {n:?}"))),
            },
            _ => Err(Error::ty(format!("iterated code applied to {v:?}"))),
        },
    }
}

/// True iff running the code of `t` agrees with evaluating `t` directly.
pub fn objectivity_check(t: &MapTerm, v: &Value) -> bool {
    let via_code = ev(&encode_term(t), v);
    let direct = eval_map(t, v);
    match (via_code, direct) {
        (Ok(a), Ok(b)) => a == b,
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codec::{compose_codes, iter_code};
    use crate::kernel::Obj;
    use crate::sampling;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn constants_evaluate() {
        let s = encode_term(&MapTerm::Succ);
        assert_eq!(ev(&s, &Value::num(3)).unwrap(), Value::num(4));
        let pi = encode_term(&MapTerm::Terminal(Obj::prod(Obj::Nat, Obj::Nat)));
        assert_eq!(
            ev(&pi, &Value::pair(Value::num(2), Value::num(9))).unwrap(),
            Value::Star
        );
    }

    #[test]
    fn iterated_successor() {
        // oracle: unfold ev(s^$, (3, 2)) = ev(s, ev(s^$, (3, 1))) = ... = 5
        let s_iter = iter_code(&encode_term(&MapTerm::Succ)).unwrap();
        assert_eq!(
            ev(&s_iter, &Value::pair(Value::num(3), Value::num(2))).unwrap(),
            Value::num(5)
        );
        assert_eq!(
            ev(&s_iter, &Value::pair(Value::num(3), Value::num(0))).unwrap(),
            Value::num(3)
        );
    }

    #[test]
    fn objectivity_on_fixed_cases() {
        assert!(objectivity_check(&MapTerm::Succ, &Value::num(9)));
        assert!(objectivity_check(&MapTerm::Id(Obj::Nat), &Value::num(0)));
        assert!(objectivity_check(
            &MapTerm::Id(Obj::One),
            &Value::Star
        ));
    }

    #[test]
    fn objectivity_randomized() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x0b5e);
        for _ in 0..300 {
            let t = sampling::random_term(&mut rng, 5);
            let (dom, _) = crate::kernel::infer_type(&t).unwrap();
            let v = sampling::random_value(&mut rng, &dom, 16);
            assert!(objectivity_check(&t, &v), "disagreement on {t:?} at {v:?}");
        }
    }

    #[test]
    fn compositionality_of_ev() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xabba);
        for _ in 0..200 {
            let dom = sampling::random_obj(&mut rng, 2);
            let mid = sampling::random_obj(&mut rng, 2);
            let cod = sampling::random_obj(&mut rng, 2);
            let f = encode_term(&sampling::random_term_with_sig(&mut rng, &dom, &mid, 3));
            let g = encode_term(&sampling::random_term_with_sig(&mut rng, &mid, &cod, 3));
            let gf = compose_codes(&g, &f).unwrap();
            let v = sampling::random_value(&mut rng, &dom, 12);
            assert_eq!(
                ev(&gf, &v).unwrap(),
                ev(&g, &ev(&f, &v).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn ill_typed_argument_is_rejected() {
        let s = encode_term(&MapTerm::Succ);
        assert!(matches!(ev(&s, &Value::Star), Err(Error::Type(_))));
    }

    #[test]
    fn invalid_code_is_rejected() {
        let bad = Code::from_u64(45); // tag 9
        assert!(ev(&bad, &Value::Star).is_err());
    }
}
