//! Command-line front end for the bcinv library.
//!
//! Three subcommands: `compute` evaluates one generalized inverse on bound
//! parameters, `check` evaluates a registered reverse-order law on one
//! explicit tuple, and `sweep` searches a finite ring for tuples violating
//! a law. Results are a single JSON document on stdout; diagnostics go to
//! stderr. Exit codes: 0 for a positive result (inverse exists, law holds,
//! no counterexample), 1 for a definite negative (nonexistence, violation,
//! counterexample found), 2 for input errors.
//!
//! Every `compute` answer is re-verified before it is printed: values are
//! checked against the definitional axioms of the requested inverse, and on
//! residue rings the whole answer — existence, nonexistence, and uniqueness
//! — is cross-checked against an independent brute-force enumeration. The
//! `verified` field in the output reports that this happened; a mismatch
//! aborts the process rather than printing a wrong answer.

use bcinv::codec;
use bcinv::inverse::{
    bc_inverse, bott_duffin_ef, group_inverse, image_kernel_inverse, inner_inverse, mary_inverse,
    pq_outer_inverse, verify_bc_axioms, BCResult, NoInverseReason,
};
use bcinv::laws;
use bcinv::oracle::{
    brute_bc_inverse, brute_group_inverse, brute_inner_inverses, Scope, DEFAULT_RING_CAP, HARD_CAP,
};
use bcinv::ring::{RingDescriptor, RingElement};
use bcinv::Error;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value as Json};
use std::collections::HashMap;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "bcinv",
    version,
    about = "Exact (b,c)-inverses and reverse-order-law checking in concrete rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a generalized inverse from bound parameters.
    Compute {
        /// Which inverse to compute.
        #[arg(long, value_enum)]
        kind: Kind,
        /// Ring: compact form (zmod:6, q, fp:5, matq:2, matfp:5:3) or JSON.
        #[arg(long)]
        ring: String,
        /// Parameter binding as name=JSON; repeat per parameter.
        #[arg(long = "bind", value_name = "NAME=JSON")]
        bind: Vec<String>,
    },
    /// Evaluate a registered law on one explicit parameter tuple.
    Check {
        /// Law identifier (see the library's law registry).
        #[arg(long)]
        law: String,
        /// Ring: compact form or JSON.
        #[arg(long)]
        ring: String,
        /// Parameter binding as name=JSON; repeat per parameter.
        #[arg(long = "bind", value_name = "NAME=JSON")]
        bind: Vec<String>,
    },
    /// Search a finite ring for tuples that violate a law.
    Sweep {
        /// Law identifier.
        #[arg(long)]
        law: String,
        /// Ring: compact form or JSON. Must be finite.
        #[arg(long)]
        ring: String,
        /// "exhaustive" or "sample:<count>:<seed>".
        #[arg(long, default_value = "exhaustive")]
        scope: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    /// (b,c)-inverse: parameters a, b, c.
    Bc,
    /// Inverse along an element: parameters a, d.
    Mary,
    /// Bott-Duffin (e,f)-inverse: parameters a, e, f (idempotents).
    BottDuffin,
    /// Image-kernel (e,f)-inverse: parameters a, e, f (idempotents).
    ImageKernel,
    /// (p,q)-outer inverse: parameters a, p, q (idempotents).
    PqOuter,
    /// Group inverse: parameter a.
    Group,
    /// Inner inverse: parameter a.
    Inner,
}

impl Kind {
    fn params(self) -> &'static [&'static str] {
        match self {
            Kind::Bc => &["a", "b", "c"],
            Kind::Mary => &["a", "d"],
            Kind::BottDuffin | Kind::ImageKernel => &["a", "e", "f"],
            Kind::PqOuter => &["a", "p", "q"],
            Kind::Group | Kind::Inner => &["a"],
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Compute { kind, ring, bind } => cmd_compute(kind, &ring, &bind),
        Command::Check { law, ring, bind } => cmd_check(&law, &ring, &bind),
        Command::Sweep { law, ring, scope } => cmd_sweep(&law, &ring, &scope),
    }
}

/// BCINV_MAX_ENUM, parsed and clamped to the hard limit, if set.
fn max_enum_override() -> Result<Option<u128>, Error> {
    match std::env::var("BCINV_MAX_ENUM") {
        Ok(raw) => raw
            .parse::<u128>()
            .map(|v| Some(v.min(HARD_CAP)))
            .map_err(|_| {
                Error::parse(format!(
                    "BCINV_MAX_ENUM must be a non-negative integer, got {raw:?}"
                ))
            }),
        Err(_) => Ok(None),
    }
}

/// Residue rings are handled by exhaustive enumeration, so their size is
/// limited; matrix rings go through linear algebra and are not.
fn guard_ring_enumeration(ring: &RingDescriptor, cap: u128) -> Result<(), Error> {
    if let RingDescriptor::ZMod { n } = ring {
        let size = u128::from(*n);
        if size > cap {
            return Err(Error::EnumerationTooLarge { size, cap });
        }
    }
    Ok(())
}

fn parse_bindings(
    ring: &RingDescriptor,
    binds: &[String],
    names: &[&'static str],
) -> Result<Vec<RingElement>, Error> {
    let mut map: HashMap<String, Json> = HashMap::new();
    for raw in binds {
        let Some((name, body)) = raw.split_once('=') else {
            return Err(Error::parse(format!(
                "binding {raw:?} is not of the form name=JSON"
            )));
        };
        let value: Json =
            serde_json::from_str(body).map_err(|e| Error::parse(format!("binding {name}: {e}")))?;
        if map.insert(name.to_string(), value).is_some() {
            return Err(Error::parse(format!("duplicate binding for {name}")));
        }
    }
    let mut out = Vec::with_capacity(names.len());
    for &name in names {
        let Some(value) = map.remove(name) else {
            return Err(Error::parse(format!(
                "missing binding for parameter {name} (expected {names:?})"
            )));
        };
        out.push(codec::parse_element_with(*ring, &value)?);
    }
    if let Some(extra) = map.keys().next() {
        return Err(Error::parse(format!(
            "unknown parameter {extra} (expected {names:?})"
        )));
    }
    Ok(out)
}

fn cmd_compute(kind: Kind, ring: &str, binds: &[String]) -> Result<u8, Error> {
    let ring = codec::parse_ring_str(ring)?;
    let cap = max_enum_override()?.unwrap_or(DEFAULT_RING_CAP);
    guard_ring_enumeration(&ring, cap)?;
    let p = parse_bindings(&ring, binds, kind.params())?;

    let mut reflexive = None;
    let result = match kind {
        Kind::Bc => bc_inverse(&p[0], &p[1], &p[2]),
        Kind::Mary => mary_inverse(&p[0], &p[1]),
        Kind::BottDuffin => bott_duffin_ef(&p[0], &p[1], &p[2])?,
        Kind::ImageKernel => image_kernel_inverse(&p[0], &p[1], &p[2])?,
        Kind::PqOuter => {
            let out = pq_outer_inverse(&p[0], &p[1], &p[2])?;
            reflexive = out.reflexive;
            out.result
        }
        Kind::Group => match group_inverse(&p[0]) {
            Some(y) => BCResult::Exists(y),
            None => BCResult::NotExists(NoInverseReason::GroupInverseMissing),
        },
        Kind::Inner => match inner_inverse(&p[0]) {
            Some(y) => BCResult::Exists(y),
            None => BCResult::NotExists(NoInverseReason::NoWitness),
        },
    };

    verify_compute(kind, &p, &result, cap)?;

    let mut doc = Map::new();
    match result {
        BCResult::Exists(y) => {
            doc.insert("exists".into(), Json::Bool(true));
            doc.insert("value".into(), codec::element_to_json(&y));
            if let Some(r) = reflexive {
                doc.insert("reflexive".into(), Json::Bool(r));
            }
            doc.insert("verified".into(), Json::Bool(true));
            println!("{}", Json::Object(doc));
            Ok(0)
        }
        BCResult::NotExists(reason) => {
            doc.insert("exists".into(), Json::Bool(false));
            doc.insert("reason".into(), Json::String(reason.as_str().into()));
            doc.insert("verified".into(), Json::Bool(true));
            println!("{}", Json::Object(doc));
            Ok(1)
        }
    }
}

/// Independent re-derivation of a compute answer. Any disagreement is a
/// library bug, so it aborts instead of returning an error.
fn verify_compute(
    kind: Kind,
    p: &[RingElement],
    result: &BCResult,
    cap: u128,
) -> Result<(), Error> {
    let a = &p[0];
    let ring = a.ring();
    let one = ring.one();

    if let BCResult::Exists(y) = result {
        let axioms_hold = match kind {
            Kind::Bc => verify_bc_axioms(a, &p[1], &p[2], y),
            Kind::Mary => verify_bc_axioms(a, &p[1], &p[1], y),
            Kind::BottDuffin => verify_bc_axioms(a, &p[1], &p[2], y),
            Kind::ImageKernel => verify_bc_axioms(a, &p[1], &one.sub(&p[2]), y),
            Kind::PqOuter => {
                y.mul(a).mul(y) == *y && y.mul(a) == p[1] && a.mul(y) == one.sub(&p[2])
            }
            Kind::Group => a.mul(y).mul(a) == *a && y.mul(a).mul(y) == *y && a.mul(y) == y.mul(a),
            Kind::Inner => a.mul(y).mul(a) == *a,
        };
        assert!(axioms_hold, "computed value fails its definitional axioms");
    }

    // On residue rings, re-derive the whole answer by brute enumeration.
    if !matches!(ring, RingDescriptor::ZMod { .. }) {
        return Ok(());
    }
    let witnesses: Vec<RingElement> = match kind {
        Kind::Bc => brute_bc_inverse(a, &p[1], &p[2], cap)?.witnesses,
        Kind::Mary => brute_bc_inverse(a, &p[1], &p[1], cap)?.witnesses,
        Kind::BottDuffin => brute_bc_inverse(a, &p[1], &p[2], cap)?.witnesses,
        Kind::ImageKernel => brute_bc_inverse(a, &p[1], &one.sub(&p[2]), cap)?.witnesses,
        Kind::PqOuter => {
            let q_c = one.sub(&p[2]);
            let mut found = Vec::new();
            for y in ring.enumerate_elements()? {
                if y.mul(a).mul(&y) == y && y.mul(a) == p[1] && a.mul(&y) == q_c {
                    found.push(y);
                }
            }
            found
        }
        Kind::Group => brute_group_inverse(a, cap)?.witnesses,
        Kind::Inner => brute_inner_inverses(a, cap)?.witnesses,
    };
    match result {
        BCResult::Exists(y) => {
            assert!(
                witnesses.contains(y),
                "brute-force enumeration does not confirm the computed value"
            );
            // Inner inverses need not be unique; everything else is.
            if !matches!(kind, Kind::Inner) {
                assert_eq!(witnesses.len(), 1, "witness is not unique");
            }
        }
        BCResult::NotExists(_) => {
            assert!(
                witnesses.is_empty(),
                "brute-force enumeration found a witness where none was reported"
            );
        }
    }
    Ok(())
}

fn cmd_check(law: &str, ring: &str, binds: &[String]) -> Result<u8, Error> {
    let def = laws::find_law(law)?;
    let ring = codec::parse_ring_str(ring)?;
    let cap = max_enum_override()?.unwrap_or(DEFAULT_RING_CAP);
    guard_ring_enumeration(&ring, cap)?;
    let p = parse_bindings(&ring, binds, def.params)?;
    let report = def.check(&p)?;
    println!(
        "{}",
        serde_json::to_string(&report).expect("report serialization")
    );
    Ok(if report.equivalence_ok { 0 } else { 1 })
}

fn cmd_sweep(law: &str, ring: &str, scope: &str) -> Result<u8, Error> {
    let def = laws::find_law(law)?;
    let ring = codec::parse_ring_str(ring)?;
    let scope = codec::parse_scope(scope)?;
    let budget = max_enum_override()?.unwrap_or(HARD_CAP);
    if let Some(size) = ring.size() {
        let arity = def.sweep_params.len() as u32;
        let total = match scope {
            Scope::Exhaustive => size.checked_pow(arity).unwrap_or(u128::MAX),
            Scope::Sample { count, .. } => u128::from(count),
        };
        if total > budget {
            return Err(Error::EnumerationTooLarge {
                size: total,
                cap: budget,
            });
        }
    }
    let outcome = laws::sweep(law, ring, scope)?;
    let counterexample = match &outcome.counterexample {
        Some(tuple) => Json::Array(tuple.iter().map(codec::element_to_json).collect()),
        None => Json::Null,
    };
    println!(
        "{}",
        json!({
            "law": outcome.law,
            "ring": codec::ring_to_json(ring),
            "scope": codec::scope_to_string(scope),
            "counterexample": counterexample,
            "tuples_checked": outcome.tuples_checked,
        })
    );
    Ok(if outcome.counterexample.is_some() {
        1
    } else {
        0
    })
}
