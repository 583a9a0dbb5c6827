use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use num_bigint::BigUint;

use prmaps::cantor::{ct, idx};
use prmaps::codec::{decode_term, encode_term, Code};
use prmaps::decision::{nabla, verdict_audit, Predicate, Verdict};
use prmaps::proofs::{check_tree, enumerate_trees, soundness_check, tree_size};
use prmaps::surface::{
    parse_obj, parse_proof, parse_term, parse_value, print_equation, print_term, print_value,
};

#[derive(Parser)]
#[command(name = "prmaps", version, about = "Primitive recursive map calculus")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate a term at a value
    Eval { term: String, value: String },
    /// Gödel-encode a term to its decimal code
    Encode { term: String },
    /// Decode a code (decimal or 0x hex) to canonical term syntax
    Decode { code: String },
    /// Check a proof file and print its root equation
    Check { file: PathBuf },
    /// Print the first trees of the proof enumeration: index, size, root
    Enumerate {
        #[arg(long)]
        count: u64,
        /// Replay each root equation numerically
        #[arg(long)]
        verify: bool,
    },
    /// Race counterexample search against proof search on a predicate
    Decide {
        predicate: String,
        #[arg(long)]
        fuel: u64,
        /// Samples used by the verdict audit
        #[arg(long, default_value_t = 25)]
        samples: u64,
    },
    /// Print the k-th element of an object
    Ct { obj: String, k: String },
    /// Print the enumeration index of a value
    Idx { obj: String, value: String },
}

fn run(cmd: Cmd) -> Result<u8, prmaps::Error> {
    match cmd {
        Cmd::Eval { term, value } => {
            let t = parse_term(&term)?;
            let v = parse_value(&value)?;
            let out = prmaps::kernel::eval_map(&t, &v)?;
            println!("{}", print_value(&out));
        }
        Cmd::Encode { term } => {
            let t = parse_term(&term)?;
            println!("{}", encode_term(&t));
        }
        Cmd::Decode { code } => {
            let c = Code::from_str(&code)?;
            println!("{}", print_term(&decode_term(&c)?));
        }
        Cmd::Check { file } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| prmaps::Error::Proof(format!("cannot read {}: {e}", file.display())))?;
            let tree = parse_proof(&text)?;
            let eq = check_tree(&tree)?;
            println!("{}", print_equation(&eq));
        }
        Cmd::Enumerate { count, verify } => {
            for k in 0..count {
                let tree = enumerate_trees(k);
                let eq = check_tree(&tree)?;
                println!("{k}\t{}\t{}", tree_size(&tree), print_equation(&eq));
                if verify && soundness_check(&tree, 25)? != true {
                    return Err(prmaps::Error::Proof(format!(
                        "tree {k} failed numeric replay"
                    )));
                }
            }
        }
        Cmd::Decide {
            predicate,
            fuel,
            samples,
        } => {
            let t = parse_term(&predicate)?;
            let chi = Predicate::new(encode_term(&t))?;
            let verdict = nabla(&chi, fuel);
            let audited = verdict_audit(&chi, &verdict, samples);
            match &verdict {
                Verdict::Counterexample { k, witness } => {
                    println!("Counterexample k={k} value={}", print_value(witness));
                }
                Verdict::Proved { k, tree } => {
                    println!("Proved k={k} root={}", print_equation(&check_tree(tree)?));
                }
                Verdict::Exhausted { fuel } => {
                    println!("Exhausted fuel={fuel}");
                }
            }
            println!("audit={audited}");
            if !audited {
                return Err(prmaps::Error::Proof("verdict failed its audit".into()));
            }
            if matches!(verdict, Verdict::Exhausted { .. }) {
                return Ok(2);
            }
        }
        Cmd::Ct { obj, k } => {
            let a = parse_obj(&obj)?;
            let k = BigUint::parse_bytes(k.as_bytes(), 10)
                .ok_or_else(|| prmaps::Error::Decode(format!("invalid index {k:?}")))?;
            println!("{}", print_value(&ct(&a, &k)));
        }
        Cmd::Idx { obj, value } => {
            let a = parse_obj(&obj)?;
            let v = parse_value(&value)?;
            println!("{}", idx(&a, &v)?);
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
