//! Total enumeration of all valid deduction trees.
//!
//! Trees are ordered by size (one per node plus the structural size of the
//! decoded term behind every code parameter), and within one size class by
//! the canonical serialization (rule index, then parameter tokens, then
//! premises, recursively). Every valid tree appears at exactly one index.
//!
//! The enumerator keeps a process-wide memo behind a mutex; callers observe
//! a pure function of the index.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::ops::Range;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigUint;

use crate::codec::{decode_layer, encode_term, Code, CodeLayer};
use crate::kernel::{MapTerm, Obj};

use super::{
    anchor_term, check_tree, succ_step_term, ConstSubst, DeductionTree, Equation, RuleTag,
};

struct PoolTerm {
    term: MapTerm,
    code: Code,
    dom: Obj,
    cod: Obj,
}

/// All well-typed terms, stratified by structural size.
struct TermPool {
    objs: Vec<Vec<Obj>>,
    terms: Vec<Vec<PoolTerm>>,
    by_dom: Vec<HashMap<Obj, Vec<usize>>>,
    by_cod: Vec<HashMap<Obj, Vec<usize>>>,
    endos: Vec<Vec<usize>>,
}

impl TermPool {
    fn new() -> TermPool {
        TermPool {
            objs: vec![Vec::new()],
            terms: vec![Vec::new()],
            by_dom: vec![HashMap::new()],
            by_cod: vec![HashMap::new()],
            endos: vec![Vec::new()],
        }
    }

    fn ensure(&mut self, size: usize) {
        while self.terms.len() <= size {
            let s = self.terms.len();
            self.grow_objs(s);
            self.grow_terms(s);
        }
    }

    fn grow_objs(&mut self, s: usize) {
        let mut out = Vec::new();
        if s == 1 {
            out.push(Obj::One);
            out.push(Obj::Nat);
        } else if s >= 3 {
            for sa in 1..s - 1 {
                let sb = s - 1 - sa;
                for a in &self.objs[sa] {
                    for b in &self.objs[sb] {
                        out.push(Obj::prod(a.clone(), b.clone()));
                    }
                }
            }
        }
        self.objs.push(out);
    }

    fn grow_terms(&mut self, s: usize) {
        let mut fresh: Vec<(MapTerm, Obj, Obj)> = Vec::new();
        if s == 1 {
            fresh.push((MapTerm::Zero, Obj::One, Obj::Nat));
            fresh.push((MapTerm::Succ, Obj::Nat, Obj::Nat));
        } else if s >= 2 {
            for a in &self.objs[s - 1] {
                fresh.push((MapTerm::Id(a.clone()), a.clone(), a.clone()));
                fresh.push((MapTerm::Terminal(a.clone()), a.clone(), Obj::One));
            }
        }
        if s >= 3 {
            for sa in 1..s - 1 {
                let sb = s - 1 - sa;
                for a in &self.objs[sa] {
                    for b in &self.objs[sb] {
                        let prod = Obj::prod(a.clone(), b.clone());
                        fresh.push((
                            MapTerm::ProjL(a.clone(), b.clone()),
                            prod.clone(),
                            a.clone(),
                        ));
                        fresh.push((MapTerm::ProjR(a.clone(), b.clone()), prod, b.clone()));
                    }
                }
            }
            for sf in 1..s - 1 {
                let sg = s - 1 - sf;
                for f in &self.terms[sf] {
                    if let Some(gs) = self.by_dom[sg].get(&f.cod) {
                        for &gi in gs {
                            let g = &self.terms[sg][gi];
                            fresh.push((
                                MapTerm::compose(g.term.clone(), f.term.clone()),
                                f.dom.clone(),
                                g.cod.clone(),
                            ));
                        }
                    }
                    if let Some(gs) = self.by_dom[sg].get(&f.dom) {
                        for &gi in gs {
                            let g = &self.terms[sg][gi];
                            fresh.push((
                                MapTerm::pair(f.term.clone(), g.term.clone()),
                                f.dom.clone(),
                                Obj::prod(f.cod.clone(), g.cod.clone()),
                            ));
                        }
                    }
                }
            }
            for &fi in &self.endos[s - 1] {
                let f = &self.terms[s - 1][fi];
                fresh.push((
                    MapTerm::iter(f.term.clone()),
                    Obj::prod(f.dom.clone(), Obj::Nat),
                    f.dom.clone(),
                ));
            }
        }

        self.terms.push(Vec::new());
        self.by_dom.push(HashMap::new());
        self.by_cod.push(HashMap::new());
        self.endos.push(Vec::new());
        for (term, dom, cod) in fresh {
            let idx = self.terms[s].len();
            self.by_dom[s].entry(dom.clone()).or_default().push(idx);
            self.by_cod[s].entry(cod.clone()).or_default().push(idx);
            if dom == cod {
                self.endos[s].push(idx);
            }
            self.terms[s].push(PoolTerm {
                code: encode_term(&term),
                term,
                dom,
                cod,
            });
        }
    }
}

struct PoolTree {
    tree: DeductionTree,
    root: Equation,
    size: usize,
}

struct AnchorShape {
    idx: usize,
    w: Code,
    ww: u64,
    u: Code,
    wu: u64,
    a: Obj,
}

struct StepShape {
    idx: usize,
    v: Code,
    wv: u64,
}

struct Enumerator {
    pool: TermPool,
    all: Vec<PoolTree>,
    ranges: Vec<Range<usize>>,
    by_lhs: HashMap<BigUint, Vec<usize>>,
    anchor_shaped: Vec<AnchorShape>,
    step_shaped: HashMap<(BigUint, Obj), Vec<StepShape>>,
    next_size: usize,
}

fn term_weight(c: &Code) -> u64 {
    crate::codec::decode_term(c)
        .map(|t| t.size())
        .expect("weights are only taken of valid codes")
}

/// Canonical serialization order: rule index, then parameter tokens as
/// naturals, then premises recursively.
fn canonical_cmp(a: &DeductionTree, b: &DeductionTree) -> Ordering {
    a.rule
        .index()
        .cmp(&b.rule.index())
        .then_with(|| a.rule.param_tokens().cmp(&b.rule.param_tokens()))
        .then_with(|| {
            for (x, y) in a.premises.iter().zip(&b.premises) {
                let c = canonical_cmp(x, y);
                if c != Ordering::Equal {
                    return c;
                }
            }
            a.premises.len().cmp(&b.premises.len())
        })
}

impl Enumerator {
    fn new() -> Enumerator {
        Enumerator {
            pool: TermPool::new(),
            all: Vec::new(),
            ranges: vec![0..0, 0..0], // sizes 0 and 1 are empty
            by_lhs: HashMap::new(),
            anchor_shaped: Vec::new(),
            step_shaped: HashMap::new(),
            next_size: 2,
        }
    }

    fn ensure_count(&mut self, n: usize) {
        while self.all.len() < n {
            let s = self.next_size;
            self.next_size += 1;
            let batch = self.generate_size(s);
            let start = self.all.len();
            for t in batch {
                self.index_tree(self.all.len(), &t);
                self.all.push(t);
            }
            self.ranges.push(start..self.all.len());
        }
    }

    fn index_tree(&mut self, idx: usize, t: &PoolTree) {
        self.by_lhs
            .entry(t.root.lhs().value().clone())
            .or_default()
            .push(idx);
        if let Some((w, u, a)) = anchor_shape(&t.root) {
            self.anchor_shaped.push(AnchorShape {
                idx,
                ww: term_weight(&w),
                w,
                wu: term_weight(&u),
                u,
                a,
            });
        }
        if let Some((w, a, v)) = step_shape(&t.root) {
            self.step_shaped
                .entry((w.value().clone(), a))
                .or_default()
                .push(StepShape {
                    idx,
                    wv: term_weight(&v),
                    v,
                });
        }
    }

    fn generate_size(&mut self, s: usize) -> Vec<PoolTree> {
        let mut out: Vec<DeductionTree> = Vec::new();
        self.axioms_of_size(s, &mut out);
        self.derived_of_size(s, &mut out);
        let mut batch: Vec<PoolTree> = out
            .into_iter()
            .map(|tree| {
                let root = check_tree(&tree).expect("enumerator produced an invalid tree");
                debug_assert!(s > 6 || super::tree_size(&tree) == s as u64);
                PoolTree {
                    tree,
                    root,
                    size: s,
                }
            })
            .collect();
        batch.sort_by(|x, y| canonical_cmp(&x.tree, &y.tree));
        batch
    }

    fn axioms_of_size(&mut self, s: usize, out: &mut Vec<DeductionTree>) {
        if s < 2 {
            return;
        }
        let budget = s - 1;
        self.pool.ensure(budget);
        let pool = &self.pool;

        // single-parameter schemas over every term of the right weight
        for t in &pool.terms[budget] {
            out.push(DeductionTree::axiom(RuleTag::Refl { u: t.code.clone() }));
            out.push(DeductionTree::axiom(RuleTag::IdLeft { u: t.code.clone() }));
            out.push(DeductionTree::axiom(RuleTag::IdRight { u: t.code.clone() }));
            out.push(DeductionTree::axiom(RuleTag::ConstSubst(
                ConstSubst::TerminalUniq { u: t.code.clone() },
            )));
            if t.dom == t.cod {
                out.push(DeductionTree::axiom(RuleTag::IterAnchor {
                    u: t.code.clone(),
                }));
                out.push(DeductionTree::axiom(RuleTag::IterStep {
                    u: t.code.clone(),
                }));
            }
            if matches!(t.cod, Obj::Prod(_, _)) {
                out.push(DeductionTree::axiom(RuleTag::SurjPairing {
                    w: t.code.clone(),
                }));
            }
        }

        // two-parameter schemas
        for su in 1..budget {
            let sv = budget - su;
            for u in &pool.terms[su] {
                if let Some(vs) = pool.by_dom[sv].get(&u.dom) {
                    for &vi in vs {
                        let v = &pool.terms[sv][vi];
                        out.push(DeductionTree::axiom(RuleTag::GodementL {
                            u: u.code.clone(),
                            v: v.code.clone(),
                        }));
                        out.push(DeductionTree::axiom(RuleTag::GodementR {
                            u: u.code.clone(),
                            v: v.code.clone(),
                        }));
                    }
                }
            }
            if let (Some(ps), Some(qs)) = (
                pool.by_dom[su].get(&Obj::One),
                pool.by_dom[sv].get(&Obj::One),
            ) {
                for &pi in ps {
                    for &qi in qs {
                        let p = pool.terms[su][pi].code.clone();
                        let q = pool.terms[sv][qi].code.clone();
                        out.push(DeductionTree::axiom(RuleTag::ConstSubst(
                            ConstSubst::ProjLPoint {
                                p: p.clone(),
                                q: q.clone(),
                            },
                        )));
                        out.push(DeductionTree::axiom(RuleTag::ConstSubst(
                            ConstSubst::ProjRPoint { p, q },
                        )));
                    }
                }
            }
        }

        // three-parameter schemas
        for su in 1..budget {
            for sv in 1..budget - su {
                let sw = budget - su - sv;
                for u in &pool.terms[su] {
                    // associativity: u, then v, then w
                    if let Some(vs) = pool.by_dom[sv].get(&u.cod) {
                        for &vi in vs {
                            let v = &pool.terms[sv][vi];
                            if let Some(ws) = pool.by_dom[sw].get(&v.cod) {
                                for &wi in ws {
                                    let w = &pool.terms[sw][wi];
                                    out.push(DeductionTree::axiom(RuleTag::AssocComp {
                                        w: w.code.clone(),
                                        v: v.code.clone(),
                                        u: u.code.clone(),
                                    }));
                                }
                            }
                        }
                    }
                    // distributivity: <u; v> ⊙ w
                    if let Some(vs) = pool.by_dom[sv].get(&u.dom) {
                        for &vi in vs {
                            let v = &pool.terms[sv][vi];
                            if let Some(ws) = pool.by_cod[sw].get(&u.dom) {
                                for &wi in ws {
                                    let w = &pool.terms[sw][wi];
                                    out.push(DeductionTree::axiom(RuleTag::DistribPair {
                                        u: u.code.clone(),
                                        v: v.code.clone(),
                                        w: w.code.clone(),
                                    }));
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    fn derived_of_size(&mut self, s: usize, out: &mut Vec<DeductionTree>) {
        if s < 3 {
            return;
        }
        // symmetry and iteration congruence over premises one size down
        for i in self.ranges[s - 1].clone() {
            out.push(DeductionTree::derive(
                RuleTag::Symm,
                vec![self.all[i].tree.clone()],
            ));
            if self.all[i].root.dom() == self.all[i].root.cod() {
                out.push(DeductionTree::derive(
                    RuleTag::CompatIter,
                    vec![self.all[i].tree.clone()],
                ));
            }
        }
        // transitivity over size-split premise pairs with matching middles
        for s1 in 2..=s.saturating_sub(3) {
            let s2 = s - 1 - s1;
            for i in self.ranges[s1].clone() {
                let middle = self.all[i].root.rhs().value().clone();
                if let Some(js) = self.by_lhs.get(&middle).cloned() {
                    for j in js {
                        if self.all[j].size == s2 {
                            out.push(DeductionTree::derive(
                                RuleTag::Trans,
                                vec![self.all[i].tree.clone(), self.all[j].tree.clone()],
                            ));
                        }
                    }
                }
            }
        }
        // compatibility rules: premise plus one code parameter
        for sp in 2..=s.saturating_sub(2) {
            let budget = s - 1 - sp;
            if budget == 0 {
                continue;
            }
            self.pool.ensure(budget);
            for i in self.ranges[sp].clone() {
                let (dom, cod) = {
                    let r = &self.all[i].root;
                    (r.dom().clone(), r.cod().clone())
                };
                let premise = self.all[i].tree.clone();
                if let Some(vs) = self.pool.by_dom[budget].get(&cod) {
                    for &vi in vs {
                        out.push(DeductionTree::derive(
                            RuleTag::CompatCompL {
                                v: self.pool.terms[budget][vi].code.clone(),
                            },
                            vec![premise.clone()],
                        ));
                    }
                }
                if let Some(us) = self.pool.by_cod[budget].get(&dom) {
                    for &ui in us {
                        out.push(DeductionTree::derive(
                            RuleTag::CompatCompR {
                                u: self.pool.terms[budget][ui].code.clone(),
                            },
                            vec![premise.clone()],
                        ));
                    }
                }
                if let Some(vs) = self.pool.by_dom[budget].get(&dom) {
                    for &vi in vs {
                        let side = self.pool.terms[budget][vi].code.clone();
                        out.push(DeductionTree::derive(
                            RuleTag::CompatPairL { v: side.clone() },
                            vec![premise.clone()],
                        ));
                        out.push(DeductionTree::derive(
                            RuleTag::CompatPairR { u: side },
                            vec![premise.clone()],
                        ));
                    }
                }
            }
        }
        // uniqueness of the initialised iterated: join anchor- and
        // step-shaped premises over the same comparison candidate
        for a_idx in 0..self.anchor_shaped.len() {
            let (i, key, u, wu, ww, w) = {
                let a = &self.anchor_shaped[a_idx];
                (
                    a.idx,
                    (a.w.value().clone(), a.a.clone()),
                    a.u.clone(),
                    a.wu,
                    a.ww,
                    a.w.clone(),
                )
            };
            let s1 = self.all[i].size;
            let candidates: Vec<(usize, Code, u64)> = match self.step_shaped.get(&key) {
                Some(steps) => steps.iter().map(|st| (st.idx, st.v.clone(), st.wv)).collect(),
                None => continue,
            };
            for (j, v, wv) in candidates {
                let s2 = self.all[j].size;
                let total = 1 + wu + wv + ww + s1 as u64 + s2 as u64;
                if total == s as u64 {
                    out.push(DeductionTree::derive(
                        RuleTag::FreydUniq {
                            u: u.clone(),
                            v,
                            w: w.clone(),
                        },
                        vec![self.all[i].tree.clone(), self.all[j].tree.clone()],
                    ));
                }
            }
        }
    }
}

/// Matches roots of the form `w ⊙ <id_A; 0 ⊙ pi_A> ≐ u`.
fn anchor_shape(root: &Equation) -> Option<(Code, Code, Obj)> {
    let a = root.dom().clone();
    match decode_layer(root.lhs()).ok()? {
        CodeLayer::Compose(w, x) if x == encode_term(&anchor_term(&a)) => {
            Some((w, root.rhs().clone(), a))
        }
        _ => None,
    }
}

/// Matches roots of the form `w ⊙ (id_A x s) ≐ v ⊙ w`.
fn step_shape(root: &Equation) -> Option<(Code, Obj, Code)> {
    let a = match root.dom() {
        Obj::Prod(x, y) if **y == Obj::Nat => (**x).clone(),
        _ => return None,
    };
    let (w, x) = match decode_layer(root.lhs()).ok()? {
        CodeLayer::Compose(w, x) => (w, x),
        _ => return None,
    };
    if x != encode_term(&succ_step_term(&a)) {
        return None;
    }
    match decode_layer(root.rhs()).ok()? {
        CodeLayer::Compose(v, w2) if w2 == w => Some((w, a, v)),
        _ => None,
    }
}

fn with_enumerator<R>(f: impl FnOnce(&mut Enumerator) -> R) -> R {
    static ENUMERATOR: OnceLock<Mutex<Enumerator>> = OnceLock::new();
    let m = ENUMERATOR.get_or_init(|| Mutex::new(Enumerator::new()));
    let mut guard = m.lock().unwrap_or_else(|e| e.into_inner());
    f(&mut guard)
}

/// The `k`-th valid deduction tree in the fixed enumeration order.
pub fn enumerate_trees(k: u64) -> DeductionTree {
    with_enumerator(|e| {
        e.ensure_count(k as usize + 1);
        e.all[k as usize].tree.clone()
    })
}

/// Root equation of the `k`-th tree, as validated at generation time.
pub(crate) fn root_at(k: u64) -> Equation {
    with_enumerator(|e| {
        e.ensure_count(k as usize + 1);
        e.all[k as usize].root.clone()
    })
}

/// Visits trees `0..fuel` in order until the callback yields a result.
pub(crate) fn scan<T>(
    fuel: u64,
    mut f: impl FnMut(u64, &Equation, &DeductionTree) -> Option<T>,
) -> Option<T> {
    with_enumerator(|e| {
        for k in 0..fuel {
            e.ensure_count(k as usize + 1);
            let entry = &e.all[k as usize];
            if let Some(r) = f(k, &entry.root, &entry.tree) {
                return Some(r);
            }
        }
        None
    })
}
