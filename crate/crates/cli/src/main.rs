mod report;

use clap::{Parser, Subcommand};
use eqeuler::bredon::{verify_suite, Analysis};
use eqeuler::category::ComponentCategory;
use eqeuler::context::{GroupContext, SchurPolicy};
use eqeuler::gcomplex::{s3_sphere3, s3_sphere5, FixedData, GSimplicialComplex};
use eqeuler::io::{Bundle, ComplexJson, GroupJson, RepSphereSpec};
use eqeuler::{Error, Field, FiniteGroup};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "eqeuler", version, about = "Equivariant Euler characteristics of finite group actions on simplicial complexes")]
struct Cli {
    /// Fail when a rational Schur index cannot be certified instead of using the lower bound.
    #[arg(long, global = true)]
    strict_schur: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Order, subgroup classes and F-conjugacy counts of a permutation group.
    GroupInfo { group: PathBuf },
    /// Representation-theoretic tables.
    Reps {
        #[command(subcommand)]
        command: RepsCommand,
    },
    /// Table of marks and the matrices of j1.
    Marks { group: PathBuf },
    /// Objects, morphism sets and the character map of the component category.
    Category { group: PathBuf, complex: PathBuf },
    /// Full Euler-characteristic report. Without paths a bundle is read from stdin.
    Euler {
        group: Option<PathBuf>,
        complex: Option<PathBuf>,
        #[arg(long, default_value = "R", value_parser = parse_h0_field)]
        field: Field,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Runs only the consistency checks; exit code 2 if any fails.
    Verify {
        group: Option<PathBuf>,
        complex: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emits a built-in group and complex as a bundle.
    Builtin {
        #[command(subcommand)]
        which: BuiltinCommand,
    },
}

#[derive(Subcommand)]
enum RepsCommand {
    /// Character table (C) or basis of irreducibles over R or Q.
    Table {
        group: PathBuf,
        #[arg(long, default_value = "C")]
        field: Field,
    },
}

#[derive(Subcommand)]
enum BuiltinCommand {
    /// S3 acting on the unit sphere of R + R_sign + V.
    S3Sphere3,
    /// S3 acting on the unit sphere of R^3 + R_sign + V.
    S3Sphere5,
    /// Unit sphere of a sum of small pieces, described by a JSON spec.
    RepSphere { spec: PathBuf },
}

fn parse_h0_field(s: &str) -> Result<Field, String> {
    match s.parse::<Field>() {
        Ok(f @ (Field::Q | Field::R)) => Ok(f),
        Ok(_) => Err("H0 is computed over R or Q".into()),
        Err(e) => Err(e.to_string()),
    }
}

enum Failure {
    Input(Error),
    Verification(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

struct Source {
    bytes: Vec<u8>,
}

impl Source {
    fn read(path: Option<&Path>) -> Result<Source, Error> {
        let mut bytes = Vec::new();
        match path {
            Some(p) if p.as_os_str() != "-" => {
                bytes = std::fs::read(p).map_err(|e| Error::InvalidInput(format!("{}: {e}", p.display())))?;
            }
            _ => {
                std::io::stdin().read_to_end(&mut bytes).map_err(|e| Error::InvalidInput(format!("stdin: {e}")))?;
            }
        }
        Ok(Source { bytes })
    }

    fn parse<T: DeserializeOwned>(&self) -> Result<T, Error> {
        serde_json::from_slice(&self.bytes).map_err(|e| Error::InvalidInput(format!("JSON: {e}")))
    }

    fn sha256(&self) -> String {
        hex::encode(Sha256::digest(&self.bytes))
    }
}

struct Loaded {
    group: FiniteGroup,
    raw: GSimplicialComplex,
    complex: GSimplicialComplex,
    fingerprints: Value,
}

fn load_group(path: &Path) -> Result<(FiniteGroup, String), Error> {
    let src = Source::read(Some(path))?;
    Ok((src.parse::<GroupJson>()?.build()?, src.sha256()))
}

fn load_pair(group: Option<&Path>, complex: Option<&Path>) -> Result<Loaded, Error> {
    let (g, cj, fingerprints) = match (group, complex) {
        (Some(gp), Some(cp)) => {
            let gs = Source::read(Some(gp))?;
            let cs = Source::read(Some(cp))?;
            let g = gs.parse::<GroupJson>()?.build()?;
            (g, cs.parse::<ComplexJson>()?, json!({"group": gs.sha256(), "complex": cs.sha256()}))
        }
        (bundle, None) => {
            let s = Source::read(bundle)?;
            let b: Bundle = s.parse()?;
            (b.group.build()?, b.complex, json!({"bundle": s.sha256()}))
        }
        (None, Some(_)) => unreachable!("clap fills positionals in order"),
    };
    let raw = cj.build_raw(&g)?;
    let complex = raw.clone().validate_and_subdivide(&g)?;
    Ok(Loaded { group: g, raw, complex, fingerprints })
}

fn context(g: FiniteGroup, strict: bool) -> GroupContext {
    GroupContext::with_policy(g, SchurPolicy { strict, ..Default::default() })
}

fn emit(value: &Value, out: Option<&Path>) -> Result<(), Error> {
    let text = serde_json::to_string_pretty(value).expect("serializable") + "\n";
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::InvalidInput(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn with_header(mut v: Value, fingerprints: Value) -> Value {
    v["tool"] = json!({"name": "eqeuler", "version": env!("CARGO_PKG_VERSION")});
    v["inputs"] = fingerprints;
    v
}

fn run(cli: Cli) -> Result<(), Failure> {
    let strict = cli.strict_schur;
    match cli.command {
        Command::GroupInfo { group } => {
            let (g, sha) = load_group(&group)?;
            emit(&with_header(report::group_info(&context(g, strict))?, json!({"group": sha})), None)?;
        }
        Command::Reps { command: RepsCommand::Table { group, field } } => {
            let (g, sha) = load_group(&group)?;
            emit(&with_header(report::reps_table(&context(g, strict), field)?, json!({"group": sha})), None)?;
        }
        Command::Marks { group } => {
            let (g, sha) = load_group(&group)?;
            emit(&with_header(report::marks(&context(g, strict))?, json!({"group": sha})), None)?;
        }
        Command::Category { group, complex } => {
            let l = load_pair(Some(&group), Some(&complex))?;
            let ctx = context(l.group, strict);
            let fd = FixedData::compute(&ctx, &l.complex);
            let cat = ComponentCategory::compute(&ctx, &l.complex, &fd);
            emit(&with_header(report::category(&ctx, &l.complex, &cat), l.fingerprints), None)?;
        }
        Command::Euler { group, complex, field, out } => {
            let l = load_pair(group.as_deref(), complex.as_deref())?;
            let subdivided = l.raw.vertex_count() != l.complex.vertex_count();
            let ctx = context(l.group, strict);
            let a = Analysis::compute(&ctx, &l.complex)?;
            let r = verify_suite(&ctx, &l.complex, &a);
            let v = with_header(report::euler(&ctx, &l.complex, &a, field, subdivided, &r), l.fingerprints);
            emit(&v, out.as_deref())?;
            if !r.all_passed() {
                return Err(Failure::Verification(report::verification(&r)));
            }
        }
        Command::Verify { group, complex, out } => {
            let l = load_pair(group.as_deref(), complex.as_deref())?;
            let ctx = context(l.group, strict);
            let a = Analysis::compute(&ctx, &l.complex)?;
            let r = verify_suite(&ctx, &l.complex, &a);
            let v = with_header(report::verification(&r), l.fingerprints);
            emit(&v, out.as_deref())?;
            if !r.all_passed() {
                return Err(Failure::Verification(report::verification(&r)));
            }
        }
        Command::Builtin { which } => {
            let (g, x) = match which {
                BuiltinCommand::S3Sphere3 => s3_sphere3(),
                BuiltinCommand::S3Sphere5 => s3_sphere5(),
                BuiltinCommand::RepSphere { spec } => Source::read(Some(&spec))?.parse::<RepSphereSpec>()?.build()?,
            };
            emit(&serde_json::to_value(Bundle::new(&g, &x)).expect("serializable"), None)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprintln!("{}", json!({"error": {"code": "InvalidInput", "message": e.to_string().trim_end()}}));
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(e)) => {
            let v = json!({"error": {"code": e.code(), "message": e.to_string()}});
            eprintln!("{v}");
            ExitCode::from(if e.is_internal() { 2 } else { 1 })
        }
        Err(Failure::Verification(v)) => {
            eprintln!("{}", json!({"error": {"code": "VerificationFailed", "details": v}}));
            ExitCode::from(2)
        }
    }
}
