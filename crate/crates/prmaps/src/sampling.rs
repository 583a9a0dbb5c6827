//! Random generation of objects, well-typed terms, and values, for
//! property tests and the randomized suites.

use rand::Rng;

use crate::kernel::{infer_type, MapTerm, Obj, Value};

pub fn random_obj(rng: &mut impl Rng, max_depth: u32) -> Obj {
    if max_depth == 0 || rng.gen_bool(0.6) {
        if rng.gen_bool(0.5) {
            Obj::One
        } else {
            Obj::Nat
        }
    } else {
        Obj::prod(
            random_obj(rng, max_depth - 1),
            random_obj(rng, max_depth - 1),
        )
    }
}

/// A canonical inhabitant of `[A, B]`; every hom-set is nonempty.
pub fn fallback_map(dom: &Obj, cod: &Obj) -> MapTerm {
    match cod {
        Obj::One => MapTerm::Terminal(dom.clone()),
        Obj::Nat => MapTerm::compose(MapTerm::Zero, MapTerm::Terminal(dom.clone())),
        Obj::Prod(x, y) => MapTerm::pair(fallback_map(dom, x), fallback_map(dom, y)),
    }
}

/// A random well-typed term with the given signature.
pub fn random_term_with_sig(rng: &mut impl Rng, dom: &Obj, cod: &Obj, budget: u32) -> MapTerm {
    if budget == 0 {
        return fallback_map(dom, cod);
    }
    let mut options: Vec<u8> = vec![0]; // fallback always applies
    if dom == cod {
        options.push(1); // identity
    }
    if *dom == Obj::One && *cod == Obj::Nat {
        options.push(2); // zero
    }
    if *dom == Obj::Nat && *cod == Obj::Nat {
        options.push(3); // successor
    }
    if *cod == Obj::One {
        options.push(4); // terminal
    }
    if let Obj::Prod(x, y) = dom {
        if **x == *cod {
            options.push(5); // left projection
        }
        if **y == *cod {
            options.push(6); // right projection
        }
        if **y == Obj::Nat && **x == *cod {
            options.push(7); // iteration
        }
    }
    options.push(8); // composition
    if matches!(cod, Obj::Prod(_, _)) {
        options.push(9); // pairing
    }
    match options[rng.gen_range(0..options.len())] {
        0 => fallback_map(dom, cod),
        1 => MapTerm::Id(dom.clone()),
        2 => MapTerm::Zero,
        3 => MapTerm::Succ,
        4 => MapTerm::Terminal(dom.clone()),
        5 => match dom {
            Obj::Prod(x, y) => MapTerm::ProjL((**x).clone(), (**y).clone()),
            _ => unreachable!(),
        },
        6 => match dom {
            Obj::Prod(x, y) => MapTerm::ProjR((**x).clone(), (**y).clone()),
            _ => unreachable!(),
        },
        7 => MapTerm::iter(random_term_with_sig(rng, cod, cod, budget - 1)),
        8 => {
            let mid = random_obj(rng, 2);
            MapTerm::compose(
                random_term_with_sig(rng, &mid, cod, budget - 1),
                random_term_with_sig(rng, dom, &mid, budget - 1),
            )
        }
        9 => match cod {
            Obj::Prod(x, y) => MapTerm::pair(
                random_term_with_sig(rng, dom, x, budget - 1),
                random_term_with_sig(rng, dom, y, budget - 1),
            ),
            _ => unreachable!(),
        },
        _ => unreachable!(),
    }
}

/// A random well-typed term of any signature, up to the given depth.
pub fn random_term(rng: &mut impl Rng, max_depth: u32) -> MapTerm {
    if max_depth == 0 {
        return match rng.gen_range(0..4u8) {
            0 => MapTerm::Zero,
            1 => MapTerm::Succ,
            2 => MapTerm::Id(random_obj(rng, 1)),
            _ => MapTerm::Terminal(random_obj(rng, 1)),
        };
    }
    match rng.gen_range(0..9u8) {
        0 => MapTerm::Zero,
        1 => MapTerm::Succ,
        2 => MapTerm::Id(random_obj(rng, max_depth.min(3))),
        3 => MapTerm::Terminal(random_obj(rng, max_depth.min(3))),
        4 => MapTerm::ProjL(random_obj(rng, 2), random_obj(rng, 2)),
        5 => MapTerm::ProjR(random_obj(rng, 2), random_obj(rng, 2)),
        6 => {
            let f = random_term(rng, max_depth - 1);
            let (_, fc) = infer_type(&f).expect("generated terms are well typed");
            let cod = random_obj(rng, 2);
            MapTerm::compose(random_term_with_sig(rng, &fc, &cod, max_depth - 1), f)
        }
        7 => {
            let f = random_term(rng, max_depth - 1);
            let (fd, _) = infer_type(&f).expect("generated terms are well typed");
            let cod = random_obj(rng, 2);
            MapTerm::pair(f, random_term_with_sig(rng, &fd, &cod, max_depth - 1))
        }
        8 => {
            let a = random_obj(rng, 2);
            MapTerm::iter(random_term_with_sig(rng, &a, &a, max_depth - 1))
        }
        _ => unreachable!(),
    }
}

/// A random value of the given object, naturals bounded by `max_nat`.
pub fn random_value(rng: &mut impl Rng, obj: &Obj, max_nat: u64) -> Value {
    match obj {
        Obj::One => Value::Star,
        Obj::Nat => Value::num(rng.gen_range(0..=max_nat)),
        Obj::Prod(x, y) => Value::pair(
            random_value(rng, x, max_nat),
            random_value(rng, y, max_nat),
        ),
    }
}
