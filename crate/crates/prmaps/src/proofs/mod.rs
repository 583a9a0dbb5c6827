//! The internal equational theory on map codes: equations `u ≐ v`,
//! deduction trees, a trusted checker, lexicographic enumeration of all
//! valid trees, bounded proof search, and numeric soundness replay.
//!
//! A deduction tree is valid iff [`check_tree`] accepts it; the checker
//! validates arities, typing side conditions, and premise roots, and
//! returns the root equation the tree proves. Nothing outside this module
//! constructs an [`Equation`] without going through validation.

mod build;
mod enumerate;

pub use build::{
    anchor_point_code, canonical_freyd_instance, chain, compat_comp_l, compat_comp_r,
    compat_pair_l, compat_pair_r, initialized_iter_code, proves_anchor_equation,
    proves_step_equation, refl, succ_step_code, symm, trans,
};
pub use enumerate::enumerate_trees;

use num_bigint::BigUint;

use crate::codec::{code_signature, compose_codes, encode_term, iter_code, pair_codes, Code};
use crate::cantor::ct;
use crate::error::{Error, Result};
use crate::evaluator::ev;
use crate::kernel::{MapTerm, Obj};
use crate::stdlib::true_term;

/// An internal equation `lhs ≐ rhs` between two codes of one hom-set.
///
/// Constructed only through [`Equation::new`] or the checker, so the
/// hom-set discipline always holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equation {
    lhs: Code,
    rhs: Code,
    dom: Obj,
    cod: Obj,
}

impl Equation {
    /// Builds an equation, rejecting sides that live in different hom-sets.
    pub fn new(lhs: Code, rhs: Code) -> Result<Equation> {
        let (ld, lc) = code_signature(&lhs)?;
        let (rd, rc) = code_signature(&rhs)?;
        if ld != rd || lc != rc {
            return Err(Error::ty(format!(
                "equation sides live in different hom-sets: [{ld:?},{lc:?}] vs [{rd:?},{rc:?}]"
            )));
        }
        Ok(Equation {
            lhs,
            rhs,
            dom: ld,
            cod: lc,
        })
    }

    fn trusted(lhs: Code, rhs: Code, dom: Obj, cod: Obj) -> Equation {
        Equation { lhs, rhs, dom, cod }
    }

    pub fn lhs(&self) -> &Code {
        &self.lhs
    }

    pub fn rhs(&self) -> &Code {
        &self.rhs
    }

    pub fn dom(&self) -> &Obj {
        &self.dom
    }

    pub fn cod(&self) -> &Obj {
        &self.cod
    }
}

/// Parameter of a constant-substitution axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstSubst {
    /// `pi_B ⊙ u ≐ pi_A` for `u ∈ [A,B]`: maps into `1` are unique.
    TerminalUniq { u: Code },
    /// `l ⊙ <p; q> ≐ p` for points `p : 1 -> A`, `q : 1 -> B`.
    ProjLPoint { p: Code, q: Code },
    /// `r ⊙ <p; q> ≐ q` for points.
    ProjRPoint { p: Code, q: Code },
}

/// Node label of a deduction tree: axiom schemas take no premises,
/// one-premise rules are the congruences and symmetry, two-premise rules
/// are transitivity and uniqueness of the initialised iterated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RuleTag {
    Refl { u: Code },
    AssocComp { w: Code, v: Code, u: Code },
    IdLeft { u: Code },
    IdRight { u: Code },
    ConstSubst(ConstSubst),
    GodementL { u: Code, v: Code },
    GodementR { u: Code, v: Code },
    SurjPairing { w: Code },
    DistribPair { u: Code, v: Code, w: Code },
    IterAnchor { u: Code },
    IterStep { u: Code },
    Symm,
    Trans,
    CompatCompL { v: Code },
    CompatCompR { u: Code },
    CompatPairL { v: Code },
    CompatPairR { u: Code },
    CompatIter,
    FreydUniq { u: Code, v: Code, w: Code },
}

impl RuleTag {
    /// Number of premises the rule expects.
    pub fn arity(&self) -> usize {
        match self {
            RuleTag::Refl { .. }
            | RuleTag::AssocComp { .. }
            | RuleTag::IdLeft { .. }
            | RuleTag::IdRight { .. }
            | RuleTag::ConstSubst(_)
            | RuleTag::GodementL { .. }
            | RuleTag::GodementR { .. }
            | RuleTag::SurjPairing { .. }
            | RuleTag::DistribPair { .. }
            | RuleTag::IterAnchor { .. }
            | RuleTag::IterStep { .. } => 0,
            RuleTag::Symm
            | RuleTag::CompatCompL { .. }
            | RuleTag::CompatCompR { .. }
            | RuleTag::CompatPairL { .. }
            | RuleTag::CompatPairR { .. }
            | RuleTag::CompatIter => 1,
            RuleTag::Trans | RuleTag::FreydUniq { .. } => 2,
        }
    }

    /// The rule's name in proof-file syntax.
    pub fn name(&self) -> &'static str {
        match self {
            RuleTag::Refl { .. } => "refl",
            RuleTag::AssocComp { .. } => "assoc-comp",
            RuleTag::IdLeft { .. } => "id-left",
            RuleTag::IdRight { .. } => "id-right",
            RuleTag::ConstSubst(_) => "const-subst",
            RuleTag::GodementL { .. } => "godement-l",
            RuleTag::GodementR { .. } => "godement-r",
            RuleTag::SurjPairing { .. } => "surj-pairing",
            RuleTag::DistribPair { .. } => "distrib-pair",
            RuleTag::IterAnchor { .. } => "iter-anchor",
            RuleTag::IterStep { .. } => "iter-step",
            RuleTag::Symm => "symm",
            RuleTag::Trans => "trans",
            RuleTag::CompatCompL { .. } => "compat-comp-l",
            RuleTag::CompatCompR { .. } => "compat-comp-r",
            RuleTag::CompatPairL { .. } => "compat-pair-l",
            RuleTag::CompatPairR { .. } => "compat-pair-r",
            RuleTag::CompatIter => "compat-iter",
            RuleTag::FreydUniq { .. } => "freyd-uniq",
        }
    }

    /// Position in the fixed rule order; first component of the canonical
    /// serialization used for enumeration.
    pub fn index(&self) -> u8 {
        match self {
            RuleTag::Refl { .. } => 0,
            RuleTag::AssocComp { .. } => 1,
            RuleTag::IdLeft { .. } => 2,
            RuleTag::IdRight { .. } => 3,
            RuleTag::ConstSubst(_) => 4,
            RuleTag::GodementL { .. } => 5,
            RuleTag::GodementR { .. } => 6,
            RuleTag::SurjPairing { .. } => 7,
            RuleTag::DistribPair { .. } => 8,
            RuleTag::IterAnchor { .. } => 9,
            RuleTag::IterStep { .. } => 10,
            RuleTag::Symm => 11,
            RuleTag::Trans => 12,
            RuleTag::CompatCompL { .. } => 13,
            RuleTag::CompatCompR { .. } => 14,
            RuleTag::CompatPairL { .. } => 15,
            RuleTag::CompatPairR { .. } => 16,
            RuleTag::CompatIter => 17,
            RuleTag::FreydUniq { .. } => 18,
        }
    }

    /// Parameter tokens in canonical order; for constant substitution the
    /// sub-case index comes first.
    pub fn param_tokens(&self) -> Vec<BigUint> {
        let c = |x: &Code| x.value().clone();
        match self {
            RuleTag::Refl { u }
            | RuleTag::IdLeft { u }
            | RuleTag::IdRight { u }
            | RuleTag::IterAnchor { u }
            | RuleTag::IterStep { u } => vec![c(u)],
            RuleTag::AssocComp { w, v, u } => vec![c(w), c(v), c(u)],
            RuleTag::ConstSubst(cs) => match cs {
                ConstSubst::TerminalUniq { u } => vec![BigUint::from(0u32), c(u)],
                ConstSubst::ProjLPoint { p, q } => vec![BigUint::from(1u32), c(p), c(q)],
                ConstSubst::ProjRPoint { p, q } => vec![BigUint::from(2u32), c(p), c(q)],
            },
            RuleTag::GodementL { u, v } | RuleTag::GodementR { u, v } => vec![c(u), c(v)],
            RuleTag::SurjPairing { w } => vec![c(w)],
            RuleTag::DistribPair { u, v, w } => vec![c(u), c(v), c(w)],
            RuleTag::Symm | RuleTag::Trans | RuleTag::CompatIter => vec![],
            RuleTag::CompatCompL { v } | RuleTag::CompatPairL { v } => vec![c(v)],
            RuleTag::CompatCompR { u } | RuleTag::CompatPairR { u } => vec![c(u)],
            RuleTag::FreydUniq { u, v, w } => vec![c(u), c(v), c(w)],
        }
    }
}

/// A finite proof tree; the root equation is whatever [`check_tree`] says
/// it proves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeductionTree {
    pub rule: RuleTag,
    pub premises: Vec<DeductionTree>,
}

impl DeductionTree {
    pub fn axiom(rule: RuleTag) -> DeductionTree {
        DeductionTree {
            rule,
            premises: Vec::new(),
        }
    }

    pub fn derive(rule: RuleTag, premises: Vec<DeductionTree>) -> DeductionTree {
        DeductionTree { rule, premises }
    }
}

/// The anchor point `<id_A; 0 ⊙ pi_A> : A -> A x N` as a term.
pub(crate) fn anchor_term(a: &Obj) -> MapTerm {
    MapTerm::pair(
        MapTerm::Id(a.clone()),
        MapTerm::compose(MapTerm::Zero, MapTerm::Terminal(a.clone())),
    )
}

/// The count step `id_A x s : A x N -> A x N` as a term, in the canonical
/// product form `<id ⊙ l; s ⊙ r>`.
pub(crate) fn succ_step_term(a: &Obj) -> MapTerm {
    MapTerm::pair(
        MapTerm::compose(MapTerm::Id(a.clone()), MapTerm::ProjL(a.clone(), Obj::Nat)),
        MapTerm::compose(MapTerm::Succ, MapTerm::ProjR(a.clone(), Obj::Nat)),
    )
}

fn sig(c: &Code) -> Result<(Obj, Obj)> {
    code_signature(c)
}

fn id_code(a: &Obj) -> Code {
    encode_term(&MapTerm::Id(a.clone()))
}

/// Validates a deduction tree and returns its root equation.
///
/// Every rule case checks its own typing side conditions; premise roots are
/// checked recursively, so validity is never assumed.
pub fn check_tree(t: &DeductionTree) -> Result<Equation> {
    if t.premises.len() != t.rule.arity() {
        return Err(Error::proof(format!(
            "{} expects {} premises, got {}",
            t.rule.name(),
            t.rule.arity(),
            t.premises.len()
        )));
    }
    match &t.rule {
        RuleTag::Refl { u } => {
            let (a, b) = sig(u)?;
            Ok(Equation::trusted(u.clone(), u.clone(), a, b))
        }
        RuleTag::AssocComp { w, v, u } => {
            let (a, b) = sig(u)?;
            let (vb, c) = sig(v)?;
            let (wc, d) = sig(w)?;
            if b != vb || c != wc {
                return Err(Error::proof(format!(
                    "assoc-comp: codes {w}, {v}, {u} do not compose"
                )));
            }
            let lhs = compose_codes(&compose_codes(w, v)?, u)?;
            let rhs = compose_codes(w, &compose_codes(v, u)?)?;
            Ok(Equation::trusted(lhs, rhs, a, d))
        }
        RuleTag::IdLeft { u } => {
            let (a, b) = sig(u)?;
            let lhs = compose_codes(&id_code(&b), u)?;
            Ok(Equation::trusted(lhs, u.clone(), a, b))
        }
        RuleTag::IdRight { u } => {
            let (a, b) = sig(u)?;
            let lhs = compose_codes(u, &id_code(&a))?;
            Ok(Equation::trusted(lhs, u.clone(), a, b))
        }
        RuleTag::ConstSubst(cs) => check_const_subst(cs),
        RuleTag::GodementL { u, v } => {
            let (c, a) = sig(u)?;
            let (vc, b) = sig(v)?;
            if c != vc {
                return Err(Error::proof(format!(
                    "godement-l: {u} and {v} have different domains"
                )));
            }
            let l = encode_term(&MapTerm::ProjL(a.clone(), b));
            let lhs = compose_codes(&l, &pair_codes(u, v)?)?;
            Ok(Equation::trusted(lhs, u.clone(), c, a))
        }
        RuleTag::GodementR { u, v } => {
            let (c, a) = sig(u)?;
            let (vc, b) = sig(v)?;
            if c != vc {
                return Err(Error::proof(format!(
                    "godement-r: {u} and {v} have different domains"
                )));
            }
            let r = encode_term(&MapTerm::ProjR(a, b.clone()));
            let lhs = compose_codes(&r, &pair_codes(u, v)?)?;
            Ok(Equation::trusted(lhs, v.clone(), c, b))
        }
        RuleTag::SurjPairing { w } => {
            let (c, bc) = sig(w)?;
            let (a, b) = match &bc {
                Obj::Prod(x, y) => ((**x).clone(), (**y).clone()),
                _ => {
                    return Err(Error::proof(format!(
                        "surj-pairing: {w} does not target a product"
                    )))
                }
            };
            let l = encode_term(&MapTerm::ProjL(a.clone(), b.clone()));
            let r = encode_term(&MapTerm::ProjR(a, b));
            let lhs = pair_codes(&compose_codes(&l, w)?, &compose_codes(&r, w)?)?;
            Ok(Equation::trusted(lhs, w.clone(), c, bc))
        }
        RuleTag::DistribPair { u, v, w } => {
            let (d, a) = sig(u)?;
            let (vd, b) = sig(v)?;
            let (c, wd) = sig(w)?;
            if d != vd || wd != d {
                return Err(Error::proof(format!(
                    "distrib-pair: {u}, {v}, {w} violate the typing side conditions"
                )));
            }
            let lhs = compose_codes(&pair_codes(u, v)?, w)?;
            let rhs = pair_codes(&compose_codes(u, w)?, &compose_codes(v, w)?)?;
            Ok(Equation::trusted(lhs, rhs, c, Obj::prod(a, b)))
        }
        RuleTag::IterAnchor { u } => {
            let (a, b) = sig(u)?;
            if a != b {
                return Err(Error::proof(format!("iter-anchor: {u} is not an endomap")));
            }
            let anchor = encode_term(&anchor_term(&a));
            let lhs = compose_codes(&iter_code(u)?, &anchor)?;
            Ok(Equation::trusted(lhs, id_code(&a), a.clone(), a))
        }
        RuleTag::IterStep { u } => {
            let (a, b) = sig(u)?;
            if a != b {
                return Err(Error::proof(format!("iter-step: {u} is not an endomap")));
            }
            let step = encode_term(&succ_step_term(&a));
            let lhs = compose_codes(&iter_code(u)?, &step)?;
            let rhs = compose_codes(u, &iter_code(u)?)?;
            Ok(Equation::trusted(
                lhs,
                rhs,
                Obj::prod(a.clone(), Obj::Nat),
                a,
            ))
        }
        RuleTag::Symm => {
            let p = check_tree(&t.premises[0])?;
            Ok(Equation::trusted(p.rhs, p.lhs, p.dom, p.cod))
        }
        RuleTag::Trans => {
            let p1 = check_tree(&t.premises[0])?;
            let p2 = check_tree(&t.premises[1])?;
            if p1.rhs != p2.lhs || p1.dom != p2.dom || p1.cod != p2.cod {
                return Err(Error::proof(format!(
                    "trans: middle codes differ ({} vs {})",
                    p1.rhs, p2.lhs
                )));
            }
            Ok(Equation::trusted(p1.lhs, p2.rhs, p1.dom, p1.cod))
        }
        RuleTag::CompatCompL { v } => {
            let p = check_tree(&t.premises[0])?;
            let (vd, c) = sig(v)?;
            if vd != p.cod {
                return Err(Error::proof(format!(
                    "compat-comp-l: {v} does not postcompose with the premise hom-set"
                )));
            }
            let lhs = compose_codes(v, &p.lhs)?;
            let rhs = compose_codes(v, &p.rhs)?;
            Ok(Equation::trusted(lhs, rhs, p.dom, c))
        }
        RuleTag::CompatCompR { u } => {
            let p = check_tree(&t.premises[0])?;
            let (a, uc) = sig(u)?;
            if uc != p.dom {
                return Err(Error::proof(format!(
                    "compat-comp-r: {u} does not precompose with the premise hom-set"
                )));
            }
            let lhs = compose_codes(&p.lhs, u)?;
            let rhs = compose_codes(&p.rhs, u)?;
            Ok(Equation::trusted(lhs, rhs, a, p.cod))
        }
        RuleTag::CompatPairL { v } => {
            let p = check_tree(&t.premises[0])?;
            let (vd, b) = sig(v)?;
            if vd != p.dom {
                return Err(Error::proof(format!(
                    "compat-pair-l: {v} has a different domain than the premise"
                )));
            }
            let lhs = pair_codes(&p.lhs, v)?;
            let rhs = pair_codes(&p.rhs, v)?;
            let cod = Obj::prod(p.cod, b);
            Ok(Equation::trusted(lhs, rhs, p.dom, cod))
        }
        RuleTag::CompatPairR { u } => {
            let p = check_tree(&t.premises[0])?;
            let (ud, a) = sig(u)?;
            if ud != p.dom {
                return Err(Error::proof(format!(
                    "compat-pair-r: {u} has a different domain than the premise"
                )));
            }
            let lhs = pair_codes(u, &p.lhs)?;
            let rhs = pair_codes(u, &p.rhs)?;
            let cod = Obj::prod(a, p.cod);
            Ok(Equation::trusted(lhs, rhs, p.dom, cod))
        }
        RuleTag::CompatIter => {
            let p = check_tree(&t.premises[0])?;
            if p.dom != p.cod {
                return Err(Error::proof(
                    "compat-iter: premise equation is not between endomaps".to_string(),
                ));
            }
            let lhs = iter_code(&p.lhs)?;
            let rhs = iter_code(&p.rhs)?;
            let dom = Obj::prod(p.dom.clone(), Obj::Nat);
            Ok(Equation::trusted(lhs, rhs, dom, p.dom))
        }
        RuleTag::FreydUniq { u, v, w } => {
            let (a, b) = sig(u)?;
            let (vd, vc) = sig(v)?;
            if vd != b || vc != b {
                return Err(Error::proof(format!(
                    "freyd-uniq: {v} is not an endomap on the target of {u}"
                )));
            }
            let an = Obj::prod(a.clone(), Obj::Nat);
            let (wd, wc) = sig(w)?;
            if wd != an || wc != b {
                return Err(Error::proof(format!(
                    "freyd-uniq: comparison candidate {w} is not a map {an:?} -> {b:?}"
                )));
            }
            let anchor = encode_term(&anchor_term(&a));
            let step = encode_term(&succ_step_term(&a));
            let want1 = Equation::trusted(
                compose_codes(w, &anchor)?,
                u.clone(),
                a.clone(),
                b.clone(),
            );
            let want2 = Equation::trusted(
                compose_codes(w, &step)?,
                compose_codes(v, w)?,
                an.clone(),
                b.clone(),
            );
            let p1 = check_tree(&t.premises[0])?;
            let p2 = check_tree(&t.premises[1])?;
            if p1 != want1 {
                return Err(Error::proof(format!(
                    "freyd-uniq: first premise proves {} ≐ {}, wanted {} ≐ {}",
                    p1.lhs, p1.rhs, want1.lhs, want1.rhs
                )));
            }
            if p2 != want2 {
                return Err(Error::proof(format!(
                    "freyd-uniq: second premise proves {} ≐ {}, wanted {} ≐ {}",
                    p2.lhs, p2.rhs, want2.lhs, want2.rhs
                )));
            }
            let canonical = compose_codes(
                &iter_code(v)?,
                &crate::codec::product_codes(u, &id_code(&Obj::Nat))?,
            )?;
            Ok(Equation::trusted(w.clone(), canonical, an, b))
        }
    }
}

fn check_const_subst(cs: &ConstSubst) -> Result<Equation> {
    match cs {
        ConstSubst::TerminalUniq { u } => {
            let (a, b) = sig(u)?;
            let pi_b = encode_term(&MapTerm::Terminal(b));
            let pi_a = encode_term(&MapTerm::Terminal(a.clone()));
            let lhs = compose_codes(&pi_b, u)?;
            Ok(Equation::trusted(lhs, pi_a, a, Obj::One))
        }
        ConstSubst::ProjLPoint { p, q } => {
            let (pd, a) = sig(p)?;
            let (qd, b) = sig(q)?;
            if pd != Obj::One || qd != Obj::One {
                return Err(Error::proof(format!(
                    "const-subst proj-l-point: {p} and {q} must be points"
                )));
            }
            let l = encode_term(&MapTerm::ProjL(a.clone(), b));
            let lhs = compose_codes(&l, &pair_codes(p, q)?)?;
            Ok(Equation::trusted(lhs, p.clone(), Obj::One, a))
        }
        ConstSubst::ProjRPoint { p, q } => {
            let (pd, a) = sig(p)?;
            let (qd, b) = sig(q)?;
            if pd != Obj::One || qd != Obj::One {
                return Err(Error::proof(format!(
                    "const-subst proj-r-point: {p} and {q} must be points"
                )));
            }
            let r = encode_term(&MapTerm::ProjR(a, b.clone()));
            let lhs = compose_codes(&r, &pair_codes(p, q)?)?;
            Ok(Equation::trusted(lhs, q.clone(), Obj::One, b))
        }
    }
}

/// Size of a tree: one per node, plus the structural size of the decoded
/// term behind every code parameter. Meaningful for valid trees.
pub fn tree_size(t: &DeductionTree) -> u64 {
    let params: u64 = t
        .rule
        .param_tokens()
        .iter()
        .skip(match &t.rule {
            RuleTag::ConstSubst(_) => 1, // sub-case index is not a code
            _ => 0,
        })
        .map(|n| {
            crate::codec::decode_term(&Code::from_biguint(n.clone()))
                .map(|term| term.size())
                .unwrap_or(0)
        })
        .sum();
    1 + params + t.premises.iter().map(tree_size).sum::<u64>()
}

/// Replays the root equation numerically: evaluates both sides on the
/// first `samples` elements of the domain and compares exactly.
pub fn soundness_check(t: &DeductionTree, samples: u64) -> Result<bool> {
    let eq = check_tree(t)?;
    for i in 0..samples {
        let arg = ct(&eq.dom, &BigUint::from(i));
        let left = ev(&eq.lhs, &arg)?;
        let right = ev(&eq.rhs, &arg)?;
        if left != right {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff the `k`-th enumerated tree proves `chi ≐ true` on the domain
/// of the predicate `chi`.
pub fn pro_pr(k: u64, chi: &Code) -> Result<bool> {
    let (dom, cod) = code_signature(chi)?;
    if cod != Obj::Nat {
        return Err(Error::ty(format!(
            "pro_pr: {chi} is not a predicate code (codomain {cod:?})"
        )));
    }
    let truth = encode_term(&true_term(&dom));
    let root = enumerate::root_at(k);
    Ok(root.lhs == *chi && root.rhs == truth && root.dom == dom && root.cod == Obj::Nat)
}

/// Smallest `k < fuel` whose enumerated tree proves `goal`, with the tree.
pub fn find_proof(goal: &Equation, fuel: u64) -> Option<(u64, DeductionTree)> {
    enumerate::scan(fuel, |k, root, tree| {
        if root == goal {
            Some((k, tree.clone()))
        } else {
            None
        }
    })
}

#[cfg(test)]
mod tests;
