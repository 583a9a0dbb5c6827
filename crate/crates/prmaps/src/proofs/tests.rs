use super::*;
use crate::codec::{decode_term, encode_term, in_homset};
use crate::kernel::{MapTerm, Obj};
use crate::surface::print_proof;
use std::collections::HashSet;

fn succ() -> Code {
    encode_term(&MapTerm::Succ)
}

fn zero() -> Code {
    encode_term(&MapTerm::Zero)
}

fn id_n() -> Code {
    encode_term(&MapTerm::Id(Obj::Nat))
}

#[test]
fn godement_axiom_root() {
    let t = DeductionTree::axiom(RuleTag::GodementL {
        u: id_n(),
        v: id_n(),
    });
    let eq = check_tree(&t).unwrap();
    let want_lhs = encode_term(&MapTerm::compose(
        MapTerm::ProjL(Obj::Nat, Obj::Nat),
        MapTerm::pair(MapTerm::Id(Obj::Nat), MapTerm::Id(Obj::Nat)),
    ));
    assert_eq!(eq.lhs(), &want_lhs);
    assert_eq!(eq.rhs(), &id_n());
    assert_eq!((eq.dom(), eq.cod()), (&Obj::Nat, &Obj::Nat));
}

#[test]
fn transitivity_of_reflexivity_is_reflexivity() {
    let t = trans(refl(succ()), refl(succ()));
    let eq = check_tree(&t).unwrap();
    assert_eq!(eq.lhs(), &succ());
    assert_eq!(eq.rhs(), &succ());
}

#[test]
fn checker_rejects_bad_arity() {
    let t = DeductionTree::derive(RuleTag::Symm, vec![]);
    assert!(matches!(check_tree(&t), Err(Error::Proof(_))));
    let t = DeductionTree::derive(RuleTag::Refl { u: succ() }, vec![refl(succ())]);
    assert!(matches!(check_tree(&t), Err(Error::Proof(_))));
}

#[test]
fn checker_rejects_mismatched_transitivity() {
    let t = trans(refl(zero()), refl(succ()));
    assert!(matches!(check_tree(&t), Err(Error::Proof(_))));
}

#[test]
fn checker_rejects_non_endo_iteration_axioms() {
    for rule in [
        RuleTag::IterAnchor { u: zero() },
        RuleTag::IterStep { u: zero() },
    ] {
        assert!(matches!(
            check_tree(&DeductionTree::axiom(rule)),
            Err(Error::Proof(_))
        ));
    }
}

#[test]
fn checker_rejects_invalid_codes_in_params() {
    let junk = Code::from_u64(45); // out-of-range tag
    assert!(check_tree(&refl(junk)).is_err());
}

#[test]
fn checker_roots_respect_homset_discipline() {
    let samples = vec![
        refl(succ()),
        DeductionTree::axiom(RuleTag::IdLeft { u: succ() }),
        DeductionTree::axiom(RuleTag::IterStep { u: succ() }),
        symm(refl(zero())),
        compat_comp_l(succ(), refl(succ())),
    ];
    for t in samples {
        let eq = check_tree(&t).unwrap();
        assert!(in_homset(eq.lhs(), eq.dom(), eq.cod()));
        assert!(in_homset(eq.rhs(), eq.dom(), eq.cod()));
    }
}

#[test]
fn every_rule_has_a_sound_fixed_instance() {
    let pair_ss = encode_term(&MapTerm::pair(MapTerm::Succ, MapTerm::Succ));
    let instances = vec![
        refl(succ()),
        DeductionTree::axiom(RuleTag::AssocComp {
            w: succ(),
            v: succ(),
            u: succ(),
        }),
        DeductionTree::axiom(RuleTag::IdLeft { u: succ() }),
        DeductionTree::axiom(RuleTag::IdRight { u: succ() }),
        DeductionTree::axiom(RuleTag::ConstSubst(ConstSubst::TerminalUniq { u: succ() })),
        DeductionTree::axiom(RuleTag::ConstSubst(ConstSubst::ProjLPoint {
            p: zero(),
            q: zero(),
        })),
        DeductionTree::axiom(RuleTag::ConstSubst(ConstSubst::ProjRPoint {
            p: zero(),
            q: zero(),
        })),
        DeductionTree::axiom(RuleTag::GodementL {
            u: succ(),
            v: succ(),
        }),
        DeductionTree::axiom(RuleTag::GodementR {
            u: succ(),
            v: succ(),
        }),
        DeductionTree::axiom(RuleTag::SurjPairing { w: pair_ss }),
        DeductionTree::axiom(RuleTag::DistribPair {
            u: succ(),
            v: succ(),
            w: succ(),
        }),
        DeductionTree::axiom(RuleTag::IterAnchor { u: succ() }),
        DeductionTree::axiom(RuleTag::IterStep { u: succ() }),
        symm(refl(succ())),
        trans(refl(succ()), refl(succ())),
        compat_comp_l(succ(), refl(succ())),
        compat_comp_r(succ(), refl(succ())),
        compat_pair_l(succ(), refl(succ())),
        compat_pair_r(succ(), refl(succ())),
        DeductionTree::derive(RuleTag::CompatIter, vec![refl(succ())]),
        canonical_freyd_instance(&succ(), &succ()).unwrap(),
    ];
    for t in instances {
        assert_eq!(
            soundness_check(&t, 20),
            Ok(true),
            "unsound: {}",
            print_proof(&t)
        );
    }
}

#[test]
fn freyd_premise_derivations_check_and_replay() {
    // u : 1 -> N, v : N -> N exercises distinct source and target objects
    let u = zero();
    let v = succ();
    let anchor = proves_anchor_equation(&u, &v).unwrap();
    let eq = check_tree(&anchor).unwrap();
    let w = initialized_iter_code(&u, &v).unwrap();
    assert_eq!(
        eq.lhs(),
        &crate::codec::compose_codes(&w, &anchor_point_code(&Obj::One)).unwrap()
    );
    assert_eq!(eq.rhs(), &u);
    assert_eq!(soundness_check(&anchor, 25), Ok(true));

    let step = proves_step_equation(&u, &v).unwrap();
    let eq = check_tree(&step).unwrap();
    assert_eq!(
        eq.lhs(),
        &crate::codec::compose_codes(&w, &succ_step_code(&Obj::One)).unwrap()
    );
    assert_eq!(soundness_check(&step, 25), Ok(true));

    // the assembled uniqueness instance concludes w ≐ w in canonical form
    let full = canonical_freyd_instance(&u, &v).unwrap();
    let eq = check_tree(&full).unwrap();
    assert_eq!(eq.lhs(), &w);
    assert_eq!(eq.rhs(), &w);
    assert_eq!(soundness_check(&full, 25), Ok(true));
}

#[test]
fn freyd_rejects_wrong_premises() {
    let u = zero();
    let v = succ();
    let w = initialized_iter_code(&u, &v).unwrap();
    let good_anchor = proves_anchor_equation(&u, &v).unwrap();
    // second premise proves the wrong equation
    let t = DeductionTree::derive(
        RuleTag::FreydUniq {
            u: u.clone(),
            v: v.clone(),
            w: w.clone(),
        },
        vec![good_anchor.clone(), refl(w.clone())],
    );
    assert!(matches!(check_tree(&t), Err(Error::Proof(_))));
    // premises swapped
    let t = DeductionTree::derive(
        RuleTag::FreydUniq { u, v, w },
        vec![
            proves_step_equation(&zero(), &succ()).unwrap(),
            good_anchor,
        ],
    );
    assert!(matches!(check_tree(&t), Err(Error::Proof(_))));
}

#[test]
fn the_iterated_successor_is_addition_by_proof() {
    // soundness of the genuine iteration equation on s: its two sides
    // evaluate equally on sampled pairs
    let t = DeductionTree::axiom(RuleTag::IterStep { u: succ() });
    let eq = check_tree(&t).unwrap();
    for i in 0..20u64 {
        let arg = crate::cantor::ct_u64(eq.dom(), i);
        assert_eq!(
            crate::evaluator::ev(eq.lhs(), &arg).unwrap(),
            crate::evaluator::ev(eq.rhs(), &arg).unwrap()
        );
    }
}

#[test]
fn enumeration_starts_with_reflexivity_of_zero() {
    // oracle: the size-2 class holds only one-parameter axioms over the
    // weight-1 terms; reflexivity sorts first and ⌜0⌝ is the least code
    assert_eq!(enumerate_trees(0), refl(zero()));
}

#[test]
fn enumerated_trees_are_valid_and_distinct() {
    let mut seen = HashSet::new();
    for k in 0..500 {
        let t = enumerate_trees(k);
        assert!(check_tree(&t).is_ok(), "invalid tree at {k}");
        assert!(seen.insert(print_proof(&t)), "duplicate at {k}");
    }
}

#[test]
fn enumeration_is_size_monotone() {
    let mut last = 0;
    for k in 0..500 {
        let s = tree_size(&enumerate_trees(k));
        assert!(s >= last, "size dropped at {k}");
        last = s;
    }
}

#[test]
fn find_proof_returns_least_index() {
    let goal = Equation::new(succ(), succ()).unwrap();
    let (k, tree) = find_proof(&goal, 1000).expect("reflexivity must appear");
    assert_eq!(check_tree(&tree).unwrap(), goal);
    // oracle: linear scan of the enumeration below k finds nothing
    for i in 0..k {
        assert_ne!(check_tree(&enumerate_trees(i)).unwrap(), goal);
    }
    assert!(find_proof(&goal, 0).is_none());
}

#[test]
fn goals_with_mismatched_homsets_are_rejected() {
    assert!(matches!(
        Equation::new(succ(), zero()),
        Err(Error::Type(_))
    ));
}

#[test]
fn pro_pr_on_the_true_predicate() {
    let truth = encode_term(&crate::stdlib::true_term(&Obj::Nat));
    // index 0 proves 0 ≐ 0, not the goal
    assert_eq!(pro_pr(0, &truth), Ok(false));
    // the reflexivity instance over ⌜true⌝ appears at some index; find it
    let goal = Equation::new(truth.clone(), truth.clone()).unwrap();
    let (k, _) = find_proof(&goal, 5000).expect("reflexivity of true in range");
    assert_eq!(pro_pr(k, &truth), Ok(true));
}

#[test]
fn pro_pr_rejects_non_predicates() {
    // ill-typed composite code
    let bad = crate::codec::Code::from_u64(45);
    assert!(pro_pr(0, &bad).is_err());
    // valid code with the wrong codomain
    let pi = encode_term(&MapTerm::Terminal(Obj::Nat));
    assert!(matches!(pro_pr(0, &pi), Err(Error::Type(_))));
}

#[test]
fn tree_sizes_count_nodes_and_term_weights() {
    assert_eq!(tree_size(&refl(zero())), 2); // node + weight-1 code
    assert_eq!(tree_size(&symm(refl(zero()))), 3);
    let t = trans(refl(zero()), refl(zero()));
    assert_eq!(tree_size(&t), 5);
}

#[test]
fn soundness_check_demands_checkable_trees() {
    let t = DeductionTree::derive(RuleTag::Symm, vec![]);
    assert!(soundness_check(&t, 5).is_err());
}

#[test]
fn decoded_roots_print_cleanly() {
    let eq = check_tree(&refl(succ())).unwrap();
    assert_eq!(decode_term(eq.lhs()).unwrap(), MapTerm::Succ);
}

#[test]
#[ignore]
fn profile_enumeration_growth() {
    use std::time::Instant;
    let t0 = Instant::now();
    let mut last_size = 0;
    let mut count_at_size = 0u64;
    for k in 0..200_000u64 {
        let t = enumerate_trees(k);
        let s = tree_size(&t);
        if s != last_size {
            if last_size != 0 {
                println!(
                    "size {last_size}: {count_at_size} trees (cum {k}, {:?})",
                    t0.elapsed()
                );
            }
            last_size = s;
            count_at_size = 0;
        }
        count_at_size += 1;
    }
}

#[test]
#[ignore]
fn profile_true_index() {
    use std::time::Instant;
    for obj in [Obj::Nat, Obj::One] {
        let truth = encode_term(&crate::stdlib::true_term(&obj));
        let goal = Equation::new(truth.clone(), truth.clone()).unwrap();
        let t0 = Instant::now();
        match find_proof(&goal, 20_000) {
            Some((k, _)) => println!("true[{obj:?}] refl index = {k} ({:?})", t0.elapsed()),
            None => println!("true[{obj:?}] not found below 20000"),
        }
    }
}
