//! Concrete syntax: parsers and printers for objects, terms, values, and
//! proof trees, plus the display forms the CLI prints.
//!
//! Terms print in one canonical fully parenthesized form, so printing
//! followed by parsing is the identity. `primrec(g,h)`, `true[A]` and
//! `@name` are input sugar only; they desugar at parse time and never
//! print.

use std::fmt;

use num_bigint::BigUint;

use crate::codec::{decode_term, encode_term, Code};
use crate::error::{Error, Result, SourceSpan};
use crate::kernel::{primrec, MapTerm, Obj, Value};
use crate::proofs::{ConstSubst, DeductionTree, Equation, RuleTag};
use crate::stdlib;

pub fn print_obj(a: &Obj) -> String {
    match a {
        Obj::One => "1".to_string(),
        Obj::Nat => "N".to_string(),
        Obj::Prod(x, y) => format!("({}*{})", print_obj(x), print_obj(y)),
    }
}

pub fn print_term(t: &MapTerm) -> String {
    match t {
        MapTerm::Zero => "0".to_string(),
        MapTerm::Succ => "s".to_string(),
        MapTerm::Id(a) => format!("id[{}]", print_obj(a)),
        MapTerm::Terminal(a) => format!("pi[{}]", print_obj(a)),
        MapTerm::ProjL(a, b) => format!("l[{},{}]", print_obj(a), print_obj(b)),
        MapTerm::ProjR(a, b) => format!("r[{},{}]", print_obj(a), print_obj(b)),
        MapTerm::Compose(g, f) => format!("({} . {})", print_term(g), print_term(f)),
        MapTerm::Pair(f, g) => format!("<{}; {}>", print_term(f), print_term(g)),
        MapTerm::Iter(f) => format!("iter({})", print_term(f)),
    }
}

/// The point of `1` prints as `0`, like any other evaluation result of a
/// terminal map.
pub fn print_value(v: &Value) -> String {
    match v {
        Value::Star => "0".to_string(),
        Value::Num(n) => n.to_string(),
        Value::PairV(a, b) => format!("({},{})", print_value(a), print_value(b)),
    }
}

pub fn print_proof(t: &DeductionTree) -> String {
    let mut parts: Vec<String> = vec![t.rule.name().to_string()];
    match &t.rule {
        RuleTag::ConstSubst(cs) => {
            let (sub, codes): (&str, Vec<&Code>) = match cs {
                ConstSubst::TerminalUniq { u } => ("terminal-uniq", vec![u]),
                ConstSubst::ProjLPoint { p, q } => ("proj-l-point", vec![p, q]),
                ConstSubst::ProjRPoint { p, q } => ("proj-r-point", vec![p, q]),
            };
            parts.push(sub.to_string());
            for c in codes {
                parts.push(c.to_string());
            }
        }
        rule => {
            for tok in rule.param_tokens() {
                parts.push(tok.to_string());
            }
        }
    }
    for p in &t.premises {
        parts.push(print_proof(p));
    }
    format!("({})", parts.join(" "))
}

pub fn print_equation(eq: &Equation) -> String {
    let lhs = decode_term(eq.lhs()).expect("equations hold valid codes");
    let rhs = decode_term(eq.rhs()).expect("equations hold valid codes");
    format!(
        "{} = {} : {} -> {}",
        print_term(&lhs),
        print_term(&rhs),
        print_obj(eq.dom()),
        print_obj(eq.cod())
    )
}

impl fmt::Display for Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_obj(self))
    }
}

impl fmt::Display for MapTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_term(self))
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_value(self))
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_equation(self))
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Parser<'a> {
        Parser { text, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self
            .text
            .as_bytes()
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.text.as_bytes().get(self.pos).copied()
    }

    fn starts_with(&self, s: &str) -> bool {
        self.text[self.pos..].starts_with(s)
    }

    fn err(&self, expected: &str) -> Error {
        let end = (self.pos + 1).min(self.text.len());
        Error::parse(
            SourceSpan {
                start: self.pos.min(self.text.len()),
                end,
            },
            expected,
        )
    }

    fn eat(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<()> {
        if self.eat(s) {
            Ok(())
        } else {
            Err(self.err(&format!("`{s}`")))
        }
    }

    fn expect_end(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos == self.text.len() {
            Ok(())
        } else {
            Err(self.err("end of input"))
        }
    }

    fn number(&mut self) -> Result<BigUint> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("a decimal number"));
        }
        BigUint::parse_bytes(self.text[start..self.pos].as_bytes(), 10)
            .ok_or_else(|| self.err("a decimal number"))
    }

    fn word(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self
            .peek()
            .is_some_and(|b| b.is_ascii_lowercase() || b.is_ascii_digit() || b == b'_' || b == b'-')
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("a name"));
        }
        Ok(self.text[start..self.pos].to_string())
    }

    fn obj(&mut self) -> Result<Obj> {
        self.skip_ws();
        if self.eat("1") {
            Ok(Obj::One)
        } else if self.eat("N") {
            Ok(Obj::Nat)
        } else if self.eat("(") {
            let a = self.obj()?;
            self.expect("*")?;
            let b = self.obj()?;
            self.expect(")")?;
            Ok(Obj::prod(a, b))
        } else {
            Err(self.err("an object: `1`, `N`, or `(obj*obj)`"))
        }
    }

    fn bracketed_obj(&mut self) -> Result<Obj> {
        self.expect("[")?;
        let a = self.obj()?;
        self.expect("]")?;
        Ok(a)
    }

    fn bracketed_obj_pair(&mut self) -> Result<(Obj, Obj)> {
        self.expect("[")?;
        let a = self.obj()?;
        self.expect(",")?;
        let b = self.obj()?;
        self.expect("]")?;
        Ok((a, b))
    }

    fn term(&mut self) -> Result<MapTerm> {
        self.skip_ws();
        let start = self.pos;
        if self.eat("0") {
            Ok(MapTerm::Zero)
        } else if self.starts_with("iter(") {
            self.pos += "iter(".len();
            let f = self.term()?;
            self.expect(")")?;
            MapTerm::iter(f).validated(self, start)
        } else if self.starts_with("id[") {
            self.pos += "id".len();
            Ok(MapTerm::Id(self.bracketed_obj()?))
        } else if self.starts_with("pi[") {
            self.pos += "pi".len();
            Ok(MapTerm::Terminal(self.bracketed_obj()?))
        } else if self.starts_with("primrec(") {
            self.pos += "primrec(".len();
            let g = self.term()?;
            self.expect(",")?;
            let h = self.term()?;
            self.expect(")")?;
            primrec(&g, &h).map_err(|e| {
                Error::parse(
                    SourceSpan {
                        start,
                        end: self.pos,
                    },
                    format!("a well-typed recursion ({e})"),
                )
            })
        } else if self.starts_with("true[") {
            self.pos += "true".len();
            Ok(stdlib::true_term(&self.bracketed_obj()?))
        } else if self.eat("s") {
            Ok(MapTerm::Succ)
        } else if self.eat("l") {
            let (a, b) = self.bracketed_obj_pair()?;
            Ok(MapTerm::ProjL(a, b))
        } else if self.eat("r") {
            let (a, b) = self.bracketed_obj_pair()?;
            Ok(MapTerm::ProjR(a, b))
        } else if self.eat("@") {
            let name = self.word()?;
            stdlib::lookup(&name).ok_or_else(|| {
                Error::parse(
                    SourceSpan {
                        start,
                        end: self.pos,
                    },
                    format!("a catalog name (no entry `{name}`)"),
                )
            })
        } else if self.eat("(") {
            let g = self.term()?;
            self.expect(".")?;
            let f = self.term()?;
            self.expect(")")?;
            MapTerm::compose(g, f).validated(self, start)
        } else if self.eat("<") {
            let f = self.term()?;
            self.expect(";")?;
            let g = self.term()?;
            self.expect(">")?;
            MapTerm::pair(f, g).validated(self, start)
        } else {
            Err(self.err("a term"))
        }
    }

    fn value(&mut self) -> Result<Value> {
        self.skip_ws();
        if self.eat("*") {
            Ok(Value::Star)
        } else if self.peek().is_some_and(|b| b.is_ascii_digit()) {
            Ok(Value::Num(self.number()?))
        } else if self.eat("(") {
            let a = self.value()?;
            self.expect(",")?;
            let b = self.value()?;
            self.expect(")")?;
            Ok(Value::pair(a, b))
        } else {
            Err(self.err("a value: `*`, a decimal, or `(v,w)`"))
        }
    }

    fn code_param(&mut self) -> Result<Code> {
        self.skip_ws();
        if self.eat("#") {
            Ok(encode_term(&self.term()?))
        } else {
            Ok(Code::from_biguint(self.number()?))
        }
    }

    fn proof(&mut self) -> Result<DeductionTree> {
        self.skip_ws();
        if !self.eat("(") {
            return Err(self.err("`(` opening a proof node"));
        }
        let name = self.word()?;
        let rule = match name.as_str() {
            "refl" => RuleTag::Refl {
                u: self.code_param()?,
            },
            "assoc-comp" => RuleTag::AssocComp {
                w: self.code_param()?,
                v: self.code_param()?,
                u: self.code_param()?,
            },
            "id-left" => RuleTag::IdLeft {
                u: self.code_param()?,
            },
            "id-right" => RuleTag::IdRight {
                u: self.code_param()?,
            },
            "const-subst" => {
                let sub = self.word()?;
                match sub.as_str() {
                    "terminal-uniq" => RuleTag::ConstSubst(ConstSubst::TerminalUniq {
                        u: self.code_param()?,
                    }),
                    "proj-l-point" => RuleTag::ConstSubst(ConstSubst::ProjLPoint {
                        p: self.code_param()?,
                        q: self.code_param()?,
                    }),
                    "proj-r-point" => RuleTag::ConstSubst(ConstSubst::ProjRPoint {
                        p: self.code_param()?,
                        q: self.code_param()?,
                    }),
                    _ => return Err(self.err("a constant-substitution case")),
                }
            }
            "godement-l" => RuleTag::GodementL {
                u: self.code_param()?,
                v: self.code_param()?,
            },
            "godement-r" => RuleTag::GodementR {
                u: self.code_param()?,
                v: self.code_param()?,
            },
            "surj-pairing" => RuleTag::SurjPairing {
                w: self.code_param()?,
            },
            "distrib-pair" => RuleTag::DistribPair {
                u: self.code_param()?,
                v: self.code_param()?,
                w: self.code_param()?,
            },
            "iter-anchor" => RuleTag::IterAnchor {
                u: self.code_param()?,
            },
            "iter-step" => RuleTag::IterStep {
                u: self.code_param()?,
            },
            "symm" => RuleTag::Symm,
            "trans" => RuleTag::Trans,
            "compat-comp-l" => RuleTag::CompatCompL {
                v: self.code_param()?,
            },
            "compat-comp-r" => RuleTag::CompatCompR {
                u: self.code_param()?,
            },
            "compat-pair-l" => RuleTag::CompatPairL {
                v: self.code_param()?,
            },
            "compat-pair-r" => RuleTag::CompatPairR {
                u: self.code_param()?,
            },
            "compat-iter" => RuleTag::CompatIter,
            "freyd-uniq" => RuleTag::FreydUniq {
                u: self.code_param()?,
                v: self.code_param()?,
                w: self.code_param()?,
            },
            _ => return Err(self.err("a rule name")),
        };
        let mut premises = Vec::new();
        for _ in 0..rule.arity() {
            premises.push(self.proof()?);
        }
        self.expect(")")?;
        Ok(DeductionTree { rule, premises })
    }
}

trait Validated: Sized {
    fn validated(self, p: &Parser<'_>, start: usize) -> Result<MapTerm>;
}

impl Validated for MapTerm {
    /// Composite forms are type-checked at parse time so that a parse
    /// result is always a valid term.
    fn validated(self, p: &Parser<'_>, start: usize) -> Result<MapTerm> {
        match crate::kernel::infer_type(&self) {
            Ok(_) => Ok(self),
            Err(e) => Err(Error::parse(
                SourceSpan { start, end: p.pos },
                format!("a well-typed term ({e})"),
            )),
        }
    }
}

pub fn parse_obj(text: &str) -> Result<Obj> {
    let mut p = Parser::new(text);
    let a = p.obj()?;
    p.expect_end()?;
    Ok(a)
}

pub fn parse_term(text: &str) -> Result<MapTerm> {
    let mut p = Parser::new(text);
    let t = p.term()?;
    p.expect_end()?;
    Ok(t)
}

pub fn parse_value(text: &str) -> Result<Value> {
    let mut p = Parser::new(text);
    let v = p.value()?;
    p.expect_end()?;
    Ok(v)
}

pub fn parse_proof(text: &str) -> Result<DeductionTree> {
    let mut p = Parser::new(text);
    let t = p.proof()?;
    p.expect_end()?;
    Ok(t)
}
