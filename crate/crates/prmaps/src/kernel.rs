//! Typed abstract syntax and direct evaluation of primitive recursive maps.
//!
//! Objects are the terminal object `1`, the naturals `N`, and binary
//! products. Maps are built from the constants (zero, successor, identities,
//! terminal maps, projections) by composition, pairing into a product, and
//! iteration `f^§(a, n) = f^n(a)`. Every map is total; evaluation is
//! structural recursion plus a bounded loop for iteration.

use num_bigint::BigUint;
use num_traits::Zero as _;

use crate::error::{Error, Result};

/// An object of the calculus.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Obj {
    One,
    Nat,
    Prod(Box<Obj>, Box<Obj>),
}

impl Obj {
    pub fn prod(a: Obj, b: Obj) -> Obj {
        Obj::Prod(Box::new(a), Box::new(b))
    }

    /// Node count of the object tree.
    pub fn size(&self) -> u64 {
        match self {
            Obj::One | Obj::Nat => 1,
            Obj::Prod(a, b) => 1 + a.size() + b.size(),
        }
    }
}

/// Abstract syntax of a map. `Compose(g, f)` applies `f` first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MapTerm {
    /// `0 : 1 -> N`
    Zero,
    /// `s : N -> N`
    Succ,
    /// `id_A : A -> A`
    Id(Obj),
    /// `pi_A : A -> 1`
    Terminal(Obj),
    /// `l : A x B -> A`
    ProjL(Obj, Obj),
    /// `r : A x B -> B`
    ProjR(Obj, Obj),
    /// `g . f`, requires `cod f = dom g`
    Compose(Box<MapTerm>, Box<MapTerm>),
    /// `<f; g>`, requires `dom f = dom g`
    Pair(Box<MapTerm>, Box<MapTerm>),
    /// `f^§ : A x N -> A`, requires `dom f = cod f`
    Iter(Box<MapTerm>),
}

impl MapTerm {
    pub fn compose(g: MapTerm, f: MapTerm) -> MapTerm {
        MapTerm::Compose(Box::new(g), Box::new(f))
    }

    pub fn pair(f: MapTerm, g: MapTerm) -> MapTerm {
        MapTerm::Pair(Box::new(f), Box::new(g))
    }

    pub fn iter(f: MapTerm) -> MapTerm {
        MapTerm::Iter(Box::new(f))
    }

    /// Node count of the term, objects included.
    pub fn size(&self) -> u64 {
        match self {
            MapTerm::Zero | MapTerm::Succ => 1,
            MapTerm::Id(a) | MapTerm::Terminal(a) => 1 + a.size(),
            MapTerm::ProjL(a, b) | MapTerm::ProjR(a, b) => 1 + a.size() + b.size(),
            MapTerm::Compose(g, f) => 1 + g.size() + f.size(),
            MapTerm::Pair(f, g) => 1 + f.size() + g.size(),
            MapTerm::Iter(f) => 1 + f.size(),
        }
    }
}

/// An element of an object: the point of `1`, a natural, or a pair.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Value {
    Star,
    Num(BigUint),
    PairV(Box<Value>, Box<Value>),
}

impl Value {
    pub fn num(n: u64) -> Value {
        Value::Num(BigUint::from(n))
    }

    pub fn pair(a: Value, b: Value) -> Value {
        Value::PairV(Box::new(a), Box::new(b))
    }

    pub fn has_type(&self, obj: &Obj) -> bool {
        match (self, obj) {
            (Value::Star, Obj::One) => true,
            (Value::Num(_), Obj::Nat) => true,
            (Value::PairV(a, b), Obj::Prod(x, y)) => a.has_type(x) && b.has_type(y),
            _ => false,
        }
    }
}

/// Infers the unique signature `(dom, cod)` of a term, rejecting ill-typed
/// compositions, pairings, and iterations.
pub fn infer_type(t: &MapTerm) -> Result<(Obj, Obj)> {
    match t {
        MapTerm::Zero => Ok((Obj::One, Obj::Nat)),
        MapTerm::Succ => Ok((Obj::Nat, Obj::Nat)),
        MapTerm::Id(a) => Ok((a.clone(), a.clone())),
        MapTerm::Terminal(a) => Ok((a.clone(), Obj::One)),
        MapTerm::ProjL(a, b) => Ok((Obj::prod(a.clone(), b.clone()), a.clone())),
        MapTerm::ProjR(a, b) => Ok((Obj::prod(a.clone(), b.clone()), b.clone())),
        MapTerm::Compose(g, f) => {
            let (fa, fb) = infer_type(f)?;
            let (ga, gb) = infer_type(g)?;
            if fb != ga {
                return Err(Error::ty(format!(
                    "composition mismatch: inner cod {fb:?} vs outer dom {ga:?} in {t:?}"
                )));
            }
            Ok((fa, gb))
        }
        MapTerm::Pair(f, g) => {
            let (fa, fb) = infer_type(f)?;
            let (ga, gb) = infer_type(g)?;
            if fa != ga {
                return Err(Error::ty(format!(
                    "pairing mismatch: left dom {fa:?} vs right dom {ga:?} in {t:?}"
                )));
            }
            Ok((fa, Obj::prod(fb, gb)))
        }
        MapTerm::Iter(f) => {
            let (fa, fb) = infer_type(f)?;
            if fa != fb {
                return Err(Error::ty(format!(
                    "iteration requires an endomap, got {fa:?} -> {fb:?} in {t:?}"
                )));
            }
            Ok((Obj::prod(fa.clone(), Obj::Nat), fa))
        }
    }
}

/// Evaluates a well-typed term at a value of its domain.
pub fn eval_map(t: &MapTerm, v: &Value) -> Result<Value> {
    let (dom, _) = infer_type(t)?;
    if !v.has_type(&dom) {
        return Err(Error::ty(format!(
            "argument {v:?} does not inhabit domain {dom:?}"
        )));
    }
    Ok(eval_unchecked(t, v))
}

/// Recursive evaluator; assumes `t` well typed and `v : dom(t)`.
fn eval_unchecked(t: &MapTerm, v: &Value) -> Value {
    match t {
        MapTerm::Zero => Value::num(0),
        MapTerm::Succ => match v {
            Value::Num(n) => Value::Num(n + 1u32),
            _ => unreachable!("succ applied to non-number"),
        },
        MapTerm::Id(_) => v.clone(),
        MapTerm::Terminal(_) => Value::Star,
        MapTerm::ProjL(_, _) => match v {
            Value::PairV(a, _) => (**a).clone(),
            _ => unreachable!("projection applied to non-pair"),
        },
        MapTerm::ProjR(_, _) => match v {
            Value::PairV(_, b) => (**b).clone(),
            _ => unreachable!("projection applied to non-pair"),
        },
        MapTerm::Compose(g, f) => eval_unchecked(g, &eval_unchecked(f, v)),
        MapTerm::Pair(f, g) => Value::pair(eval_unchecked(f, v), eval_unchecked(g, v)),
        MapTerm::Iter(f) => match v {
            Value::PairV(a, n) => match &**n {
                Value::Num(count) => {
                    let mut acc = (**a).clone();
                    let mut left = count.clone();
                    while !left.is_zero() {
                        acc = eval_unchecked(f, &acc);
                        left -= 1u32;
                    }
                    acc
                }
                _ => unreachable!("iteration count is not a number"),
            },
            _ => unreachable!("iteration applied to non-pair"),
        },
    }
}

/// Full schema of primitive recursion, reduced to the kernel constructors.
///
/// For `g : A -> B` (initialisation) and `h : (A x N) x B -> B` (step),
/// returns `f : A x N -> B` with `f(a,0) = g(a)` and
/// `f(a,n+1) = h((a,n), f(a,n))`. The construction iterates the step map
/// `((a,n),b) |-> ((a,n+1), h((a,n),b))` starting at `((a,0), g(a))` and
/// projects out the accumulator.
pub fn primrec(g: &MapTerm, h: &MapTerm) -> Result<MapTerm> {
    let (a_obj, b_obj) = infer_type(g)?;
    let (h_dom, h_cod) = infer_type(h)?;
    let an = Obj::prod(a_obj.clone(), Obj::Nat);
    let expected = Obj::prod(an.clone(), b_obj.clone());
    if h_dom != expected || h_cod != b_obj {
        return Err(Error::ty(format!(
            "primrec step must be {expected:?} -> {b_obj:?}, got {h_dom:?} -> {h_cod:?}"
        )));
    }

    // (a,n) |-> (a,0)
    let reset = MapTerm::pair(
        MapTerm::ProjL(a_obj.clone(), Obj::Nat),
        MapTerm::compose(MapTerm::Zero, MapTerm::Terminal(an.clone())),
    );
    // (a,n) |-> ((a,0), g(a))
    let init = MapTerm::pair(
        reset,
        MapTerm::compose(g.clone(), MapTerm::ProjL(a_obj.clone(), Obj::Nat)),
    );
    // (a,n) |-> (a,n+1)
    let bump = MapTerm::pair(
        MapTerm::ProjL(a_obj.clone(), Obj::Nat),
        MapTerm::compose(MapTerm::Succ, MapTerm::ProjR(a_obj.clone(), Obj::Nat)),
    );
    // ((a,n),b) |-> ((a,n+1), h((a,n),b))
    let step = MapTerm::pair(
        MapTerm::compose(bump, MapTerm::ProjL(an.clone(), b_obj.clone())),
        h.clone(),
    );
    let loop_input = MapTerm::pair(init, MapTerm::ProjR(a_obj, Obj::Nat));
    Ok(MapTerm::compose(
        MapTerm::ProjR(an, b_obj),
        MapTerm::compose(MapTerm::iter(step), loop_input),
    ))
}

/// Cartesian product of maps: `u x v : A x B -> C x D` for `u : A -> C`,
/// `v : B -> D`, as `<u . l; v . r>`.
pub fn product_map(u: &MapTerm, v: &MapTerm) -> Result<MapTerm> {
    let (ua, _) = infer_type(u)?;
    let (va, _) = infer_type(v)?;
    Ok(MapTerm::pair(
        MapTerm::compose(u.clone(), MapTerm::ProjL(ua.clone(), va.clone())),
        MapTerm::compose(v.clone(), MapTerm::ProjR(ua, va)),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat() -> Obj {
        Obj::Nat
    }

    fn nn() -> Obj {
        Obj::prod(Obj::Nat, Obj::Nat)
    }

    #[test]
    fn signatures_of_constants() {
        assert_eq!(infer_type(&MapTerm::Succ).unwrap(), (nat(), nat()));
        assert_eq!(
            infer_type(&MapTerm::Id(Obj::One)).unwrap(),
            (Obj::One, Obj::One)
        );
        assert_eq!(
            infer_type(&MapTerm::compose(MapTerm::Succ, MapTerm::ProjL(nat(), nat()))).unwrap(),
            (nn(), nat())
        );
    }

    #[test]
    fn ill_typed_composition_rejected() {
        let t = MapTerm::compose(MapTerm::Zero, MapTerm::Succ);
        assert!(matches!(infer_type(&t), Err(Error::Type(_))));
        let t = MapTerm::pair(MapTerm::Zero, MapTerm::Succ);
        assert!(matches!(infer_type(&t), Err(Error::Type(_))));
        let t = MapTerm::iter(MapTerm::Zero);
        assert!(matches!(infer_type(&t), Err(Error::Type(_))));
    }

    #[test]
    fn successor_evaluates() {
        assert_eq!(
            eval_map(&MapTerm::Succ, &Value::num(3)).unwrap(),
            Value::num(4)
        );
    }

    #[test]
    fn iteration_anchor_and_unfold() {
        let it = MapTerm::iter(MapTerm::Succ);
        assert_eq!(
            eval_map(&it, &Value::pair(Value::num(3), Value::num(0))).unwrap(),
            Value::num(3)
        );
        // oracle: unfold s^2(3) by a direct loop
        let mut expect = 3u64;
        for _ in 0..2 {
            expect += 1;
        }
        assert_eq!(
            eval_map(&it, &Value::pair(Value::num(3), Value::num(2))).unwrap(),
            Value::num(expect)
        );
    }

    #[test]
    fn iteration_unfolding_law() {
        // eval(f^§, (a, n+1)) = eval(f, eval(f^§, (a, n)))
        let f = MapTerm::compose(MapTerm::Succ, MapTerm::Succ);
        let it = MapTerm::iter(f.clone());
        for n in 0..8u64 {
            let lhs = eval_map(&it, &Value::pair(Value::num(5), Value::num(n + 1))).unwrap();
            let inner = eval_map(&it, &Value::pair(Value::num(5), Value::num(n))).unwrap();
            let rhs = eval_map(&f, &inner).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn eval_rejects_ill_typed_argument() {
        assert!(matches!(
            eval_map(&MapTerm::Succ, &Value::Star),
            Err(Error::Type(_))
        ));
    }

    #[test]
    fn primrec_addition() {
        // g = id_N, h = s . r : addition on N x N
        let g = MapTerm::Id(nat());
        let h = MapTerm::compose(MapTerm::Succ, MapTerm::ProjR(nn(), nat()));
        let add = primrec(&g, &h).unwrap();
        assert_eq!(infer_type(&add).unwrap(), (nn(), nat()));
        // oracle: direct recursion on u64
        fn add_rec(a: u64, n: u64) -> u64 {
            if n == 0 {
                a
            } else {
                add_rec(a, n - 1) + 1
            }
        }
        assert_eq!(
            eval_map(&add, &Value::pair(Value::num(3), Value::num(2))).unwrap(),
            Value::num(add_rec(3, 2))
        );
    }

    #[test]
    fn primrec_defining_equations() {
        let g = MapTerm::Id(nat());
        let h = MapTerm::compose(MapTerm::Succ, MapTerm::ProjR(nn(), nat()));
        let f = primrec(&g, &h).unwrap();
        for a in [0u64, 1, 5, 9] {
            // f(a,0) = g(a)
            assert_eq!(
                eval_map(&f, &Value::pair(Value::num(a), Value::num(0))).unwrap(),
                eval_map(&g, &Value::num(a)).unwrap()
            );
            // f(a,1) = h((a,0), g(a))
            let ga = eval_map(&g, &Value::num(a)).unwrap();
            let harg = Value::pair(Value::pair(Value::num(a), Value::num(0)), ga);
            assert_eq!(
                eval_map(&f, &Value::pair(Value::num(a), Value::num(1))).unwrap(),
                eval_map(&h, &harg).unwrap()
            );
        }
    }

    #[test]
    fn primrec_rejects_signature_mismatch() {
        let g = MapTerm::Id(nat());
        let h = MapTerm::Succ;
        assert!(matches!(primrec(&g, &h), Err(Error::Type(_))));
    }

    #[test]
    fn product_map_componentwise() {
        // oracle: expand <id . l; s . r> at (4,7) by hand
        let p = product_map(&MapTerm::Id(nat()), &MapTerm::Succ).unwrap();
        assert_eq!(
            eval_map(&p, &Value::pair(Value::num(4), Value::num(7))).unwrap(),
            Value::pair(Value::num(4), Value::num(8))
        );
    }

    #[test]
    fn product_of_identities_is_identity_pointwise() {
        let p = product_map(&MapTerm::Id(nat()), &MapTerm::Id(Obj::One)).unwrap();
        let v = Value::pair(Value::num(9), Value::Star);
        assert_eq!(eval_map(&p, &v).unwrap(), v);
    }

    #[test]
    fn product_map_signature() {
        let false_one = MapTerm::compose(MapTerm::Zero, MapTerm::Terminal(Obj::One));
        let p = product_map(&MapTerm::Succ, &false_one).unwrap();
        assert_eq!(
            infer_type(&p).unwrap(),
            (Obj::prod(nat(), Obj::One), nn())
        );
    }

    #[test]
    fn godement_laws_semantically() {
        let f = MapTerm::Succ;
        let g = MapTerm::compose(MapTerm::Succ, MapTerm::Succ);
        let paired = MapTerm::pair(f.clone(), g.clone());
        for n in 0..16u64 {
            let v = Value::num(n);
            let left = MapTerm::compose(MapTerm::ProjL(nat(), nat()), paired.clone());
            let right = MapTerm::compose(MapTerm::ProjR(nat(), nat()), paired.clone());
            assert_eq!(
                eval_map(&left, &v).unwrap(),
                eval_map(&f, &v).unwrap()
            );
            assert_eq!(
                eval_map(&right, &v).unwrap(),
                eval_map(&g, &v).unwrap()
            );
        }
    }

    #[test]
    fn composition_associativity_semantically() {
        let u = MapTerm::Zero;
        let v = MapTerm::Succ;
        let w = MapTerm::compose(MapTerm::Succ, MapTerm::Succ);
        let left = MapTerm::compose(MapTerm::compose(w.clone(), v.clone()), u.clone());
        let right = MapTerm::compose(w, MapTerm::compose(v, u));
        assert_eq!(
            eval_map(&left, &Value::Star).unwrap(),
            eval_map(&right, &Value::Star).unwrap()
        );
    }
}
