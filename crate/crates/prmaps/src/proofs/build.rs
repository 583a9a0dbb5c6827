//! Derived rules: convenience constructors for deduction trees and the two
//! equation chains that establish the defining equations of the initialised
//! iterated for its canonical candidate. Everything built here still goes
//! through [`check_tree`](super::check_tree); nothing is trusted.

use crate::codec::{
    code_signature, compose_codes, encode_term, iter_code, product_codes, Code,
};
use crate::error::{Error, Result};
use crate::kernel::{MapTerm, Obj};

use super::{anchor_term, succ_step_term, DeductionTree, RuleTag};

pub fn refl(u: Code) -> DeductionTree {
    DeductionTree::axiom(RuleTag::Refl { u })
}

pub fn symm(premise: DeductionTree) -> DeductionTree {
    DeductionTree::derive(RuleTag::Symm, vec![premise])
}

pub fn trans(first: DeductionTree, second: DeductionTree) -> DeductionTree {
    DeductionTree::derive(RuleTag::Trans, vec![first, second])
}

/// Left-associated transitivity chain; panics on an empty list.
pub fn chain(parts: Vec<DeductionTree>) -> DeductionTree {
    let mut it = parts.into_iter();
    let first = it.next().expect("chain of at least one step");
    it.fold(first, trans)
}

pub fn compat_comp_l(v: Code, premise: DeductionTree) -> DeductionTree {
    DeductionTree::derive(RuleTag::CompatCompL { v }, vec![premise])
}

pub fn compat_comp_r(u: Code, premise: DeductionTree) -> DeductionTree {
    DeductionTree::derive(RuleTag::CompatCompR { u }, vec![premise])
}

pub fn compat_pair_l(v: Code, premise: DeductionTree) -> DeductionTree {
    DeductionTree::derive(RuleTag::CompatPairL { v }, vec![premise])
}

pub fn compat_pair_r(u: Code, premise: DeductionTree) -> DeductionTree {
    DeductionTree::derive(RuleTag::CompatPairR { u }, vec![premise])
}

/// Code of `<id_A; 0 ⊙ pi_A> : A -> A x N`.
pub fn anchor_point_code(a: &Obj) -> Code {
    encode_term(&anchor_term(a))
}

/// Code of `id_A x s : A x N -> A x N`.
pub fn succ_step_code(a: &Obj) -> Code {
    encode_term(&succ_step_term(a))
}

/// The canonical initialised iterated `v^$ ⊙ (u x id_N) : A x N -> B`
/// for `u : A -> B`, `v : B -> B`.
pub fn initialized_iter_code(u: &Code, v: &Code) -> Result<Code> {
    let id_n = encode_term(&MapTerm::Id(Obj::Nat));
    compose_codes(&iter_code(v)?, &product_codes(u, &id_n)?)
}

struct FreydPieces {
    b: Obj,
    u: Code,
    v: Code,
    it_v: Code,
    prod_u: Code,
    l_an: Code,
    r_an: Code,
    l_bn: Code,
    r_bn: Code,
    id_a: Code,
    id_b: Code,
    id_n: Code,
    zero: Code,
    succ: Code,
    anchor_a: Code,
    zero_pi_a: Code,
    zero_pi_b: Code,
    step_a: Code,
    step_b: Code,
}

fn pieces(u: &Code, v: &Code) -> Result<FreydPieces> {
    let (a, b) = code_signature(u)?;
    let (vd, vc) = code_signature(v)?;
    if vd != b || vc != b {
        return Err(Error::ty(format!(
            "expected an endomap on {b:?} to iterate, got {vd:?} -> {vc:?}"
        )));
    }
    let enc = encode_term;
    let id_n = enc(&MapTerm::Id(Obj::Nat));
    let it_v = iter_code(v)?;
    let prod_u = product_codes(u, &id_n)?;
    Ok(FreydPieces {
        l_an: enc(&MapTerm::ProjL(a.clone(), Obj::Nat)),
        r_an: enc(&MapTerm::ProjR(a.clone(), Obj::Nat)),
        l_bn: enc(&MapTerm::ProjL(b.clone(), Obj::Nat)),
        r_bn: enc(&MapTerm::ProjR(b.clone(), Obj::Nat)),
        id_a: enc(&MapTerm::Id(a.clone())),
        id_b: enc(&MapTerm::Id(b.clone())),
        id_n,
        zero: enc(&MapTerm::Zero),
        succ: enc(&MapTerm::Succ),
        anchor_a: anchor_point_code(&a),
        zero_pi_a: enc(&MapTerm::compose(
            MapTerm::Zero,
            MapTerm::Terminal(a.clone()),
        )),
        zero_pi_b: enc(&MapTerm::compose(
            MapTerm::Zero,
            MapTerm::Terminal(b.clone()),
        )),
        step_a: succ_step_code(&a),
        step_b: succ_step_code(&b),
        b,
        u: u.clone(),
        v: v.clone(),
        it_v,
        prod_u,
    })
}

/// Proves `(v^$ ⊙ (u x id)) ⊙ <id; 0 ⊙ pi> ≐ u`: the canonical candidate
/// satisfies the initialisation equation.
pub fn proves_anchor_equation(u: &Code, v: &Code) -> Result<DeductionTree> {
    let p = pieces(u, v)?;
    let assoc = |w: &Code, v: &Code, u: &Code| {
        DeductionTree::axiom(RuleTag::AssocComp {
            w: w.clone(),
            v: v.clone(),
            u: u.clone(),
        })
    };
    let id_left = |u: &Code| DeductionTree::axiom(RuleTag::IdLeft { u: u.clone() });
    let id_right = |u: &Code| DeductionTree::axiom(RuleTag::IdRight { u: u.clone() });

    // (u ⊙ l) ⊙ anchor ≐ u
    let u_l = compose_codes(&p.u, &p.l_an)?;
    let first = chain(vec![
        assoc(&p.u, &p.l_an, &p.anchor_a),
        compat_comp_l(
            p.u.clone(),
            DeductionTree::axiom(RuleTag::GodementL {
                u: p.id_a.clone(),
                v: p.zero_pi_a.clone(),
            }),
        ),
        id_right(&p.u),
    ]);
    // (id_N ⊙ r) ⊙ anchor ≐ 0 ⊙ pi_A
    let idn_r = compose_codes(&p.id_n, &p.r_an)?;
    let second = chain(vec![
        assoc(&p.id_n, &p.r_an, &p.anchor_a),
        compat_comp_l(
            p.id_n.clone(),
            DeductionTree::axiom(RuleTag::GodementR {
                u: p.id_a.clone(),
                v: p.zero_pi_a.clone(),
            }),
        ),
        id_left(&p.zero_pi_a),
    ]);
    // (u x id) ⊙ anchor_A ≐ <u; 0 ⊙ pi_A>
    let lhs_to_pair = chain(vec![
        DeductionTree::axiom(RuleTag::DistribPair {
            u: u_l.clone(),
            v: idn_r.clone(),
            w: p.anchor_a.clone(),
        }),
        compat_pair_l(compose_codes(&idn_r, &p.anchor_a)?, first),
        compat_pair_r(p.u.clone(), second),
    ]);
    // anchor_B ⊙ u ≐ <u; 0 ⊙ pi_A>
    let zero_pi_b_u = compose_codes(&p.zero_pi_b, &p.u)?;
    let rhs_to_pair = chain(vec![
        DeductionTree::axiom(RuleTag::DistribPair {
            u: p.id_b.clone(),
            v: p.zero_pi_b.clone(),
            w: p.u.clone(),
        }),
        compat_pair_l(zero_pi_b_u, id_left(&p.u)),
        compat_pair_r(
            p.u.clone(),
            chain(vec![
                assoc(&p.zero, &encode_term(&MapTerm::Terminal(p.b.clone())), &p.u),
                compat_comp_l(
                    p.zero.clone(),
                    DeductionTree::axiom(RuleTag::ConstSubst(super::ConstSubst::TerminalUniq {
                        u: p.u.clone(),
                    })),
                ),
            ]),
        ),
    ]);
    // (u x id) ⊙ anchor_A ≐ anchor_B ⊙ u
    let swap_anchor = chain(vec![lhs_to_pair, symm(rhs_to_pair)]);
    let anchor_b = anchor_point_code(&p.b);
    Ok(chain(vec![
        assoc(&p.it_v, &p.prod_u, &p.anchor_a),
        compat_comp_l(p.it_v.clone(), swap_anchor),
        symm(assoc(&p.it_v, &anchor_b, &p.u)),
        compat_comp_r(
            p.u.clone(),
            DeductionTree::axiom(RuleTag::IterAnchor { u: p.v.clone() }),
        ),
        id_left(&p.u),
    ]))
}

/// Proves `(v^$ ⊙ (u x id)) ⊙ (id x s) ≐ v ⊙ (v^$ ⊙ (u x id))`: the
/// canonical candidate satisfies the step equation.
pub fn proves_step_equation(u: &Code, v: &Code) -> Result<DeductionTree> {
    let p = pieces(u, v)?;
    let assoc = |w: &Code, v: &Code, u: &Code| {
        DeductionTree::axiom(RuleTag::AssocComp {
            w: w.clone(),
            v: v.clone(),
            u: u.clone(),
        })
    };
    let id_left = |u: &Code| DeductionTree::axiom(RuleTag::IdLeft { u: u.clone() });
    let godement_l = |u: &Code, v: &Code| {
        DeductionTree::axiom(RuleTag::GodementL {
            u: u.clone(),
            v: v.clone(),
        })
    };
    let godement_r = |u: &Code, v: &Code| {
        DeductionTree::axiom(RuleTag::GodementR {
            u: u.clone(),
            v: v.clone(),
        })
    };

    let u_l = compose_codes(&p.u, &p.l_an)?;
    let idn_r = compose_codes(&p.id_n, &p.r_an)?;
    let ida_l = compose_codes(&p.id_a, &p.l_an)?;
    let s_r_an = compose_codes(&p.succ, &p.r_an)?;
    let idb_l = compose_codes(&p.id_b, &p.l_bn)?;
    let s_r_bn = compose_codes(&p.succ, &p.r_bn)?;

    // (u ⊙ l) ⊙ step_A ≐ u ⊙ l
    let x1 = chain(vec![
        assoc(&p.u, &p.l_an, &p.step_a),
        compat_comp_l(
            p.u.clone(),
            chain(vec![godement_l(&ida_l, &s_r_an), id_left(&p.l_an)]),
        ),
    ]);
    // (id_N ⊙ r) ⊙ step_A ≐ s ⊙ r
    let x2 = chain(vec![
        compat_comp_r(p.step_a.clone(), id_left(&p.r_an)),
        godement_r(&ida_l, &s_r_an),
    ]);
    // (u x id) ⊙ step_A ≐ <u ⊙ l; s ⊙ r>
    let left_side = chain(vec![
        DeductionTree::axiom(RuleTag::DistribPair {
            u: u_l.clone(),
            v: idn_r.clone(),
            w: p.step_a.clone(),
        }),
        compat_pair_l(compose_codes(&idn_r, &p.step_a)?, x1),
        compat_pair_r(u_l.clone(), x2),
    ]);

    // (id_B ⊙ l) ⊙ (u x id) ≐ u ⊙ l
    let y1 = chain(vec![
        compat_comp_r(p.prod_u.clone(), id_left(&p.l_bn)),
        godement_l(&u_l, &idn_r),
    ]);
    // (s ⊙ r) ⊙ (u x id) ≐ s ⊙ r
    let y2 = chain(vec![
        assoc(&p.succ, &p.r_bn, &p.prod_u),
        compat_comp_l(
            p.succ.clone(),
            chain(vec![godement_r(&u_l, &idn_r), id_left(&p.r_an)]),
        ),
    ]);
    // step_B ⊙ (u x id) ≐ <u ⊙ l; s ⊙ r>
    let right_side = chain(vec![
        DeductionTree::axiom(RuleTag::DistribPair {
            u: idb_l,
            v: s_r_bn.clone(),
            w: p.prod_u.clone(),
        }),
        compat_pair_l(compose_codes(&s_r_bn, &p.prod_u)?, y1),
        compat_pair_r(u_l, y2),
    ]);

    // (u x id) ⊙ step_A ≐ step_B ⊙ (u x id)
    let commute = chain(vec![left_side, symm(right_side)]);
    Ok(chain(vec![
        assoc(&p.it_v, &p.prod_u, &p.step_a),
        compat_comp_l(p.it_v.clone(), commute),
        symm(assoc(&p.it_v, &p.step_b, &p.prod_u)),
        compat_comp_r(
            p.prod_u.clone(),
            DeductionTree::axiom(RuleTag::IterStep { u: p.v.clone() }),
        ),
        assoc(&p.v, &p.it_v, &p.prod_u),
    ]))
}

/// A full uniqueness instance whose comparison candidate is the canonical
/// initialised iterated itself, with both defining equations derived.
pub fn canonical_freyd_instance(u: &Code, v: &Code) -> Result<DeductionTree> {
    let w = initialized_iter_code(u, v)?;
    let p1 = proves_anchor_equation(u, v)?;
    let p2 = proves_step_equation(u, v)?;
    Ok(DeductionTree::derive(
        RuleTag::FreydUniq {
            u: u.clone(),
            v: v.clone(),
            w,
        },
        vec![p1, p2],
    ))
}
