//! `pwe`: poset level weight enumerators and their MacWilliams identities
//! from the command line.
//!
//! Exit status: 0 success, 1 failed verification or integrity error, 2 bad
//! input, 3 instance too large for the enumeration cap.

use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use pwe_core::corpus::run_corpus;
use pwe_core::enumerators::{
    byte_enumerator, complete_level_enumerator, level_enumerator, mspotty_enumerator,
    poset_weight_enumerator, WeightSpectrum,
};
use pwe_core::fuzz::{self, FuzzConfig};
use pwe_core::io::{format_word, parse_code, parse_poset, parse_ring, parse_usize_list};
use pwe_core::macwilliams::{
    byte_transform, complete_transform, level_transform, mspotty_transform, verify_identity,
};
use pwe_core::{
    Character, Error, IdentityKind, IdentityReport, LevelStructure, LinearCode, Poly, Poset,
    RingSpec, DEFAULT_CAP,
};

#[derive(Parser)]
#[command(
    name = "pwe",
    version,
    about = "Poset level weight enumerators over finite Frobenius rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print an enumerator of a code (or of its dual)
    Enum(EnumArgs),
    /// List the dual code
    Dual(DualArgs),
    /// Compare a transform with direct enumeration of the dual
    Verify(VerifyArgs),
    /// Check every transform on seeded random instances
    Fuzz(FuzzArgs),
    /// Run the bundled worked examples against their golden fixtures
    PaperExamples(Output),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Byte,
    Complete,
    Level,
    Mspotty,
    Poset,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    out: Format,
    /// Bound on the number of words any exhaustive loop may visit
    #[arg(long, env = "PWE_CAP", default_value_t = DEFAULT_CAP)]
    cap: u64,
}

#[derive(Args)]
struct Instance {
    /// Ring: F2, F3, F4, Z4, F2u, F2v, ..., inline JSON, or a file
    #[arg(long)]
    ring: String,
    /// Code: a name (C1, C2, ex51, hamming74), words like 1010,0111,
    /// inline JSON, or a file
    #[arg(long)]
    code: String,
}

#[derive(Args)]
struct EnumArgs {
    #[command(flatten)]
    instance: Instance,
    /// Poset: chain3, antichain:4, leveled:2,1,1, inline JSON, or a file
    #[arg(long)]
    poset: String,
    #[arg(long, value_enum)]
    kind: Kind,
    /// Spotty bounds, one per level
    #[arg(long)]
    t: Option<String>,
    /// Enumerate the dual code instead
    #[arg(long)]
    dual: bool,
    /// Compute the dual's enumerator from the code alone (implies --dual)
    #[arg(long)]
    via_transform: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct DualArgs {
    #[command(flatten)]
    instance: Instance,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    instance: Instance,
    #[arg(long)]
    poset: String,
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long)]
    t: Option<String>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct FuzzArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 500)]
    fuzz_iters: usize,
    #[command(flatten)]
    output: Output,
}

/// What a command produced, and whether it counts as success.
struct Report {
    text: String,
    json: Value,
    ok: bool,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report {
            text,
            json,
            ok: true,
        }
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => {
                serde_json::to_string_pretty(&self.json).expect("JSON values serialize")
            }
        }
    }
}

fn load_ring(spec: &str) -> Result<Arc<RingSpec>, Error> {
    Ok(Arc::new(RingSpec::new(parse_ring(spec)?)?))
}

fn load_code(instance: &Instance, cap: u64) -> Result<LinearCode, Error> {
    let ring = load_ring(&instance.ring)?;
    parse_code(&instance.code)?.build(ring, cap)
}

fn load_poset(spec: &str, code: &LinearCode) -> Result<Poset, Error> {
    let poset = Poset::new(&parse_poset(spec)?)?;
    if poset.size() != code.length() {
        return Err(Error::Input(format!(
            "poset has {} positions but the code has length {}",
            poset.size(),
            code.length()
        )));
    }
    Ok(poset)
}

fn load_t(t: Option<&str>) -> Result<Option<Vec<usize>>, Error> {
    t.map(parse_usize_list).transpose()
}

fn require_t(t: Option<&[usize]>) -> Result<&[usize], Error> {
    t.ok_or_else(|| Error::Input("--kind mspotty needs --t".to_string()))
}

fn poly_report(p: &Poly) -> Report {
    Report::ok(p.to_string(), p.to_json())
}

fn run_enum(args: &EnumArgs) -> Result<Report, Error> {
    let cap = args.output.cap;
    let code = load_code(&args.instance, cap)?;
    let poset = load_poset(&args.poset, &code)?;
    let t = load_t(args.t.as_deref())?;
    if args.kind == Kind::Poset {
        if args.via_transform {
            return Err(Error::Input(
                "the plain poset enumerator has no transform; drop --via-transform".to_string(),
            ));
        }
        let target = if args.dual {
            code.dual_with_cap(cap)?
        } else {
            code
        };
        return Ok(poly_report(&poset_weight_enumerator(&target, &poset)?));
    }
    let levels = poset.level_structure()?;
    let poly = if args.via_transform {
        transform(args.kind, &code, &levels, t.as_deref(), cap)?
    } else {
        let target = if args.dual {
            code.dual_with_cap(cap)?
        } else {
            code
        };
        direct(args.kind, &target, &levels, t.as_deref())?
    };
    Ok(poly_report(&poly))
}

fn direct(
    kind: Kind,
    code: &LinearCode,
    levels: &LevelStructure,
    t: Option<&[usize]>,
) -> Result<Poly, Error> {
    match kind {
        Kind::Byte => byte_enumerator(code, levels),
        Kind::Complete => complete_level_enumerator(code, levels),
        Kind::Level => level_enumerator(code, levels),
        Kind::Mspotty => mspotty_enumerator(code, levels, require_t(t)?),
        Kind::Poset => unreachable!("handled by the caller"),
    }
}

fn transform(
    kind: Kind,
    code: &LinearCode,
    levels: &LevelStructure,
    t: Option<&[usize]>,
    cap: u64,
) -> Result<Poly, Error> {
    if kind == Kind::Byte {
        let chi = Character::default_for(code.ring().clone())?;
        return byte_transform(code, levels, &chi, cap);
    }
    let spectrum = WeightSpectrum::of_code(code, levels)?;
    let q = code.ring().size();
    let size = code.size() as u64;
    match kind {
        Kind::Complete => complete_transform(&spectrum, q, size),
        Kind::Level => level_transform(&spectrum, q, size),
        Kind::Mspotty => mspotty_transform(&spectrum, require_t(t)?, q, size),
        Kind::Byte | Kind::Poset => unreachable!("handled above or by the caller"),
    }
}

fn run_dual(args: &DualArgs) -> Result<Report, Error> {
    let code = load_code(&args.instance, args.output.cap)?;
    let dual = code.dual_with_cap(args.output.cap)?;
    let ring = dual.ring();
    let words: Vec<String> = dual
        .codewords()
        .iter()
        .map(|w| format_word(ring, w))
        .collect();
    let text = words.join("\n");
    let json = json!({
        "length": dual.length(),
        "size": dual.size(),
        "generators": dual.generators(),
        "codewords": dual.codewords(),
    });
    Ok(Report::ok(text, json))
}

fn run_verify(args: &VerifyArgs) -> Result<Report, Error> {
    let identity = match args.kind {
        Kind::Byte => IdentityKind::Byte,
        Kind::Complete => IdentityKind::Complete,
        Kind::Level => IdentityKind::Level,
        Kind::Mspotty => IdentityKind::Mspotty,
        Kind::Poset => {
            return Err(Error::Input(
                "the plain poset enumerator admits no MacWilliams identity; nothing to verify"
                    .to_string(),
            ))
        }
    };
    let cap = args.output.cap;
    let code = load_code(&args.instance, cap)?;
    let levels = load_poset(&args.poset, &code)?.level_structure()?;
    let t = load_t(args.t.as_deref())?;
    let chi = Character::default_for(code.ring().clone())?;
    let report: IdentityReport<pwe_core::Int> =
        verify_identity(identity, &code, &levels, &chi, t.as_deref(), cap)?;
    let text = format!(
        "{}: equal={}\ntransform: {}\ndirect:    {}",
        report.kind, report.equal, report.lhs, report.rhs
    );
    Ok(Report {
        text,
        json: report.to_json(),
        ok: report.equal,
    })
}

fn run_fuzz(args: &FuzzArgs) -> Result<Report, Error> {
    let summary = fuzz::run(&FuzzConfig {
        seed: args.seed,
        iters: args.fuzz_iters,
        cap: args.output.cap,
        ..FuzzConfig::default()
    });
    let mut lines: Vec<String> = summary
        .failures
        .iter()
        .map(|f| format!("FAIL instance {}: {}", f.index, f.to_json()))
        .collect();
    lines.push(format!(
        "{} instances (seed {}): {} identity, {} consistency, {} duality, {} integrity failures, {} errors",
        summary.instances,
        summary.seed,
        summary.identity_failures,
        summary.consistency_failures,
        summary.duality_failures,
        summary.integrity_failures,
        summary.errors
    ));
    let per_ring: Vec<String> = summary
        .per_ring
        .iter()
        .map(|(ring, n)| format!("{ring}: {n}"))
        .collect();
    lines.push(format!("per ring: {}", per_ring.join(", ")));
    Ok(Report {
        text: lines.join("\n"),
        json: summary.to_json(),
        ok: summary.passed(),
    })
}

fn run_examples() -> Result<Report, Error> {
    let entries = run_corpus()?;
    let ok = entries.iter().all(|e| e.passed());
    let text: String = entries.iter().map(ToString::to_string).collect();
    let json = json!({
        "pass": ok,
        "examples": entries.iter().map(|e| e.to_json()).collect::<Vec<_>>(),
    });
    Ok(Report {
        text: text.trim_end().to_string(),
        json,
        ok,
    })
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Input(_) => 2,
        Error::Resource { .. } => 3,
        Error::Integrity(_) | Error::OrderMismatch(..) => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (result, format) = match &cli.command {
        Command::Enum(a) => (run_enum(a), a.output.out),
        Command::Dual(a) => (run_dual(a), a.output.out),
        Command::Verify(a) => (run_verify(a), a.output.out),
        Command::Fuzz(a) => (run_fuzz(a), a.output.out),
        Command::PaperExamples(o) => (run_examples(), o.out),
    };
    match result {
        Ok(report) => {
            println!("{}", report.render(format));
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("pwe: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
