//! Derived combinators: numerals, arithmetic, and boolean-valued predicates.
//!
//! Predicates follow the convention that the truth object is `N` restricted
//! to `{0, 1}`; `true_A` is `s . (0 . pi[A])` and `false_A` is `0 . pi[A]`.

use crate::error::Result;
use crate::kernel::{infer_type, primrec, MapTerm, Obj};

/// A catalog entry addressable by name from the CLI (`@add`, `@eq_nat`, ...).
#[derive(Clone, Debug)]
pub struct NamedTerm {
    pub name: &'static str,
    pub term: MapTerm,
    pub signature: (Obj, Obj),
}

/// `n`-fold successor of zero, a point `1 -> N`.
pub fn numeral(n: u64) -> MapTerm {
    let mut t = MapTerm::Zero;
    for _ in 0..n {
        t = MapTerm::compose(MapTerm::Succ, t);
    }
    t
}

/// The constantly-true predicate on `A`, valued in `{0,1} ⊂ N`.
pub fn true_term(a: &Obj) -> MapTerm {
    MapTerm::compose(
        MapTerm::Succ,
        MapTerm::compose(MapTerm::Zero, MapTerm::Terminal(a.clone())),
    )
}

/// The constantly-false predicate on `A`.
pub fn false_term(a: &Obj) -> MapTerm {
    MapTerm::compose(MapTerm::Zero, MapTerm::Terminal(a.clone()))
}

/// The constant map `A -> N` with value `k`.
pub fn const_term(k: u64, a: &Obj) -> MapTerm {
    MapTerm::compose(numeral(k), MapTerm::Terminal(a.clone()))
}

fn nn() -> Obj {
    Obj::prod(Obj::Nat, Obj::Nat)
}

/// Addition `N x N -> N`: `add(a,0) = a`, `add(a,n+1) = s(add(a,n))`.
pub fn add() -> MapTerm {
    let g = MapTerm::Id(Obj::Nat);
    let h = MapTerm::compose(MapTerm::Succ, MapTerm::ProjR(nn(), Obj::Nat));
    primrec(&g, &h).expect("addition is well typed")
}

/// Multiplication `N x N -> N`: `mult(a,0) = 0`, `mult(a,n+1) = mult(a,n) + a`.
pub fn mult() -> MapTerm {
    let g = false_term(&Obj::Nat); // constantly 0
    // h((a,n),b) = add(b, a); addition iterates its right argument, so the
    // loop count stays the small factor rather than the accumulator
    let h = MapTerm::compose(
        add(),
        MapTerm::pair(
            MapTerm::ProjR(nn(), Obj::Nat),
            MapTerm::compose(
                MapTerm::ProjL(Obj::Nat, Obj::Nat),
                MapTerm::ProjL(nn(), Obj::Nat),
            ),
        ),
    );
    primrec(&g, &h).expect("multiplication is well typed")
}

/// Predecessor `N -> N` with `pred(0) = 0`.
pub fn pred() -> MapTerm {
    // on 1 x N: p(*, 0) = 0, p(*, n+1) = n; then precompose <pi; id>
    let one_n = Obj::prod(Obj::One, Obj::Nat);
    let g = MapTerm::Zero;
    let h = MapTerm::compose(
        MapTerm::ProjR(Obj::One, Obj::Nat),
        MapTerm::ProjL(one_n, Obj::Nat),
    );
    let p = primrec(&g, &h).expect("predecessor is well typed");
    MapTerm::compose(
        p,
        MapTerm::pair(MapTerm::Terminal(Obj::Nat), MapTerm::Id(Obj::Nat)),
    )
}

/// Truncated subtraction `N x N -> N`: `monus(a,0) = a`,
/// `monus(a,n+1) = pred(monus(a,n))`.
pub fn monus() -> MapTerm {
    let g = MapTerm::Id(Obj::Nat);
    let h = MapTerm::compose(pred(), MapTerm::ProjR(nn(), Obj::Nat));
    primrec(&g, &h).expect("truncated subtraction is well typed")
}

/// Sign `N -> N`: `sign(0) = 0`, `sign(n+1) = 1`.
pub fn sign() -> MapTerm {
    let one_n = Obj::prod(Obj::One, Obj::Nat);
    let g = MapTerm::Zero;
    let h = true_term(&Obj::prod(one_n, Obj::Nat));
    let s = primrec(&g, &h).expect("sign is well typed");
    MapTerm::compose(
        s,
        MapTerm::pair(MapTerm::Terminal(Obj::Nat), MapTerm::Id(Obj::Nat)),
    )
}

/// Equality test `N x N -> N` valued in `{0,1}`:
/// `eq(x,y) = 1 ∸ sign((x ∸ y) + (y ∸ x))`.
pub fn eq_nat() -> MapTerm {
    let swap = MapTerm::pair(
        MapTerm::ProjR(Obj::Nat, Obj::Nat),
        MapTerm::ProjL(Obj::Nat, Obj::Nat),
    );
    let diff_sum = MapTerm::compose(
        add(),
        MapTerm::pair(monus(), MapTerm::compose(monus(), swap)),
    );
    MapTerm::compose(
        monus(),
        MapTerm::pair(const_term(1, &nn()), MapTerm::compose(sign(), diff_sum)),
    )
}

/// All catalog entries, with validated signatures.
pub fn stdlib_catalog() -> Vec<NamedTerm> {
    let entries: Vec<(&'static str, MapTerm)> = vec![
        ("add", add()),
        ("mult", mult()),
        ("pred", pred()),
        ("monus", monus()),
        ("eq_nat", eq_nat()),
        ("sign", sign()),
        ("true", true_term(&Obj::Nat)),
        ("false", false_term(&Obj::Nat)),
        ("const0", const_term(0, &Obj::Nat)),
        ("const1", const_term(1, &Obj::Nat)),
        ("const2", const_term(2, &Obj::Nat)),
    ];
    entries
        .into_iter()
        .map(|(name, term)| {
            let signature = infer_type(&term).expect("catalog terms are well typed");
            NamedTerm {
                name,
                term,
                signature,
            }
        })
        .collect()
}

/// Looks up a catalog entry by its stable name.
pub fn lookup(name: &str) -> Option<MapTerm> {
    stdlib_catalog()
        .into_iter()
        .find(|e| e.name == name)
        .map(|e| e.term)
}

/// Catalog entries whose outputs are claimed to lie in `{0,1}`.
pub fn predicate_names() -> &'static [&'static str] {
    &["eq_nat", "sign", "true", "false"]
}

/// Checks a derived term against its intended signature; test helper.
pub fn check_signature(t: &MapTerm, dom: &Obj, cod: &Obj) -> Result<bool> {
    let (d, c) = infer_type(t)?;
    Ok(&d == dom && &c == cod)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{eval_map, Value};
    use num_bigint::BigUint;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn eval2(t: &MapTerm, a: u64, b: u64) -> Value {
        eval_map(t, &Value::pair(Value::num(a), Value::num(b))).unwrap()
    }

    #[test]
    fn numerals() {
        assert_eq!(numeral(0), MapTerm::Zero);
        assert_eq!(eval_map(&numeral(0), &Value::Star).unwrap(), Value::num(0));
        assert_eq!(eval_map(&numeral(3), &Value::Star).unwrap(), Value::num(3));
        for k in [0u64, 1, 7] {
            assert_eq!(
                infer_type(&numeral(k)).unwrap(),
                (Obj::One, Obj::Nat)
            );
        }
    }

    #[test]
    fn arithmetic_against_bigint_oracle() {
        let add = add();
        let mult = mult();
        let monus = monus();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5d1b);
        for _ in 0..500 {
            let a = rng.gen_range(0..=64u64);
            let b = rng.gen_range(0..=64u64);
            assert_eq!(eval2(&add, a, b), Value::Num(BigUint::from(a + b)));
            assert_eq!(eval2(&mult, a, b), Value::Num(BigUint::from(a * b)));
            assert_eq!(
                eval2(&monus, a, b),
                Value::Num(BigUint::from(a.saturating_sub(b)))
            );
        }
    }

    #[test]
    fn add_example() {
        // oracle: recursion add(a, n+1) = add(a, n) + 1
        assert_eq!(eval2(&add(), 3, 4), Value::num(7));
    }

    #[test]
    fn monus_truncates() {
        assert_eq!(eval2(&monus(), 2, 5), Value::num(0));
        assert_eq!(eval2(&monus(), 5, 2), Value::num(3));
    }

    #[test]
    fn equality_predicate() {
        let eq = eq_nat();
        assert_eq!(eval2(&eq, 5, 5), Value::num(1));
        assert_eq!(eval2(&eq, 5, 6), Value::num(0));
        assert_eq!(eval2(&eq, 0, 0), Value::num(1));
        assert_eq!(eval2(&eq, 0, 3), Value::num(0));
    }

    #[test]
    fn sign_and_pred() {
        let sign = sign();
        let pred = pred();
        assert_eq!(eval_map(&sign, &Value::num(0)).unwrap(), Value::num(0));
        assert_eq!(eval_map(&sign, &Value::num(9)).unwrap(), Value::num(1));
        assert_eq!(eval_map(&pred, &Value::num(0)).unwrap(), Value::num(0));
        assert_eq!(eval_map(&pred, &Value::num(9)).unwrap(), Value::num(8));
    }

    #[test]
    fn catalog_signatures_validated() {
        for entry in stdlib_catalog() {
            assert_eq!(infer_type(&entry.term).unwrap(), entry.signature);
        }
        assert!(lookup("add").is_some());
        assert!(lookup("no_such_name").is_none());
    }

    #[test]
    fn predicates_are_boolean_valued() {
        let catalog = stdlib_catalog();
        let mut rng = ChaCha8Rng::seed_from_u64(0x90ac);
        for name in predicate_names() {
            let entry = catalog.iter().find(|e| e.name == *name).unwrap();
            let (dom, cod) = entry.signature.clone();
            assert_eq!(cod, Obj::Nat);
            for _ in 0..200 {
                let k = rng.gen_range(0..400u64);
                let v = crate::cantor::ct_u64(&dom, k);
                let out = eval_map(&entry.term, &v).unwrap();
                assert!(
                    out == Value::num(0) || out == Value::num(1),
                    "{name} returned {out:?}"
                );
            }
        }
    }

    #[test]
    fn constant_families() {
        let a = Obj::prod(Obj::Nat, Obj::One);
        let v = Value::pair(Value::num(4), Value::Star);
        assert_eq!(eval_map(&true_term(&a), &v).unwrap(), Value::num(1));
        assert_eq!(eval_map(&false_term(&a), &v).unwrap(), Value::num(0));
        assert_eq!(eval_map(&const_term(5, &a), &v).unwrap(), Value::num(5));
    }
}
