//! The decision operator: race the counterexample search against the proof
//! search over one shared index, returning whichever branch the least
//! qualifying index selects, or exhaustion when the fuel runs out.

use num_bigint::BigUint;

use crate::cantor::ct;
use crate::codec::{code_signature, encode_term, Code};
use crate::error::{Error, Result};
use crate::evaluator::ev;
use crate::kernel::{Obj, Value};
use crate::proofs::{check_tree, enumerate_trees, pro_pr, DeductionTree};
use crate::stdlib::true_term;

/// Inputs sampled at construction to check the boolean convention.
const CONSTRUCTION_SAMPLES: u64 = 32;

/// A boolean-valued map code `A -> N` with outputs in `{0,1}`.
#[derive(Clone, Debug)]
pub struct Predicate {
    code: Code,
    domain_obj: Obj,
}

impl Predicate {
    /// Validates the hom-set and samples outputs for the `{0,1}` convention.
    pub fn new(code: Code) -> Result<Predicate> {
        let (dom, cod) = code_signature(&code)?;
        if cod != Obj::Nat {
            return Err(Error::ty(format!(
                "predicate {code} must target N, targets {cod:?}"
            )));
        }
        for i in 0..CONSTRUCTION_SAMPLES {
            let out = ev(&code, &ct(&dom, &BigUint::from(i)))?;
            if out != Value::num(0) && out != Value::num(1) {
                return Err(Error::ty(format!(
                    "predicate {code} returned {out:?} on sample {i}; not boolean-valued"
                )));
            }
        }
        Ok(Predicate {
            code,
            domain_obj: dom,
        })
    }

    pub fn code(&self) -> &Code {
        &self.code
    }

    pub fn domain_obj(&self) -> &Obj {
        &self.domain_obj
    }

    fn holds_at(&self, k: u64) -> bool {
        let arg = ct(&self.domain_obj, &BigUint::from(k));
        ev(&self.code, &arg).expect("validated predicate evaluates totally") != Value::num(0)
    }
}

/// Outcome of the decision operator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// `witness = ct(A, k)` refutes the predicate.
    Counterexample { k: u64, witness: Value },
    /// The `k`-th deduction tree proves `chi ≐ true`.
    Proved { k: u64, tree: DeductionTree },
    /// No index below `fuel` qualified.
    Exhausted { fuel: u64 },
}

/// True iff `k` indexes a counterexample to `chi` or a proof of it.
pub fn in_decision_domain(chi: &Predicate, k: u64) -> bool {
    !chi.holds_at(k) || pro_pr(k, &chi.code).expect("validated predicate code")
}

/// Scans `k = 0, 1, ...` for the least member of the decision domain; at
/// that index the counterexample branch is examined before the proof
/// branch. Deterministic in `(chi, fuel)`.
pub fn nabla(chi: &Predicate, fuel: u64) -> Verdict {
    for k in 0..fuel {
        if !chi.holds_at(k) {
            return Verdict::Counterexample {
                k,
                witness: ct(&chi.domain_obj, &BigUint::from(k)),
            };
        }
        if pro_pr(k, &chi.code).expect("validated predicate code") {
            return Verdict::Proved {
                k,
                tree: enumerate_trees(k),
            };
        }
    }
    Verdict::Exhausted { fuel }
}

/// Re-verifies the semantic claim a verdict makes.
///
/// A counterexample must re-evaluate to `0` at its witness; a proof must
/// check with the right root and the predicate must hold on the first
/// `samples` inputs; exhaustion must rescan to nothing.
pub fn verdict_audit(chi: &Predicate, v: &Verdict, samples: u64) -> bool {
    match v {
        Verdict::Counterexample { k, witness } => {
            *witness == ct(&chi.domain_obj, &BigUint::from(*k))
                && matches!(ev(&chi.code, witness), Ok(v) if v == Value::num(0))
        }
        Verdict::Proved { k, tree } => {
            let truth = encode_term(&true_term(&chi.domain_obj));
            let root = match check_tree(tree) {
                Ok(eq) => eq,
                Err(_) => return false,
            };
            if root.lhs() != &chi.code || root.rhs() != &truth {
                return false;
            }
            if !pro_pr(*k, &chi.code).unwrap_or(false) {
                return false;
            }
            (0..samples).all(|i| chi.holds_at(i))
        }
        Verdict::Exhausted { fuel } => (0..*fuel).all(|k| !in_decision_domain(chi, k)),
    }
}
