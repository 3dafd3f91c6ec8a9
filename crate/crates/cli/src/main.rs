use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hitt::ct::CtCatalog;
use hitt::error::{Error, Result};
use hitt::io::{
    cached_catalog, cached_tilting, full_audit, lattice_dot, object_label, write_json, write_text, AlgebraSource, AuditReport,
    Cache, CatalogFile, TiltingFile, DEFAULT_SEED,
};
use hitt::module::Algebra;
use hitt::tilting::TiltingContext;
use hitt::wide::Lattice;

#[derive(Parser)]
#[command(name = "hitt", version, about = "Support-tilting modules, torsion classes and wide collections of d-cluster-tilting subcategories")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the d-cluster-tilting catalog.
    Build(Job),
    /// Enumerate proper support-d-tilting modules and the lattice of their torsion classes.
    Tilting(Job),
    /// Audit the correspondence between modules, torsion classes and wide collections.
    Audit(Job),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("source").required(true).args(["linear_an", "algebra"]))]
struct Job {
    /// Linearly oriented A_N: its d-Auslander algebra, or A_N modulo paths of length R with --rad.
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
    linear_an: Option<u64>,
    /// Algebra JSON file.
    #[arg(long, value_name = "FILE")]
    algebra: Option<PathBuf>,
    #[arg(long, value_name = "D", value_parser = clap::value_parser!(u64).range(1..))]
    d: u64,
    #[arg(long, value_name = "R", requires = "linear_an", value_parser = clap::value_parser!(u64).range(1..))]
    rad: Option<u64>,
    /// Output directory; also holds the cache.
    #[arg(long, value_name = "DIR")]
    out: Option<PathBuf>,
    /// Print a machine-readable document instead of the summary.
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long, value_name = "K", value_parser = clap::value_parser!(u64).range(1..))]
    cap_orbit: Option<u64>,
    #[arg(long, value_name = "K", value_parser = clap::value_parser!(u64).range(1..))]
    cap_subsets: Option<u64>,
    #[arg(long, value_name = "S", default_value_t = DEFAULT_SEED)]
    seed: u64,
}

impl Job {
    fn source(&self) -> AlgebraSource {
        match (&self.linear_an, &self.algebra) {
            (Some(n), _) => AlgebraSource::LinearAn { n: *n as usize, rad: self.rad.map(|r| r as usize) },
            (None, Some(p)) => AlgebraSource::File(p.clone()),
            (None, None) => unreachable!("clap requires a source"),
        }
    }

    fn cache(&self) -> Option<Cache> {
        self.out.as_ref().map(|o| Cache::new(o.join("cache")))
    }

    fn catalog(&self) -> Result<CtCatalog> {
        let d = self.d as usize;
        let algebra: Algebra = Arc::new(self.source().load(d)?);
        cached_catalog(self.cache().as_ref(), &algebra, d, self.cap_orbit.map(|k| k as usize), self.seed)
    }

    fn output(&self, name: &str) -> Option<PathBuf> {
        self.out.as_ref().map(|o| o.join(name))
    }
}

enum Outcome {
    Ok(String),
    Falsified(String),
}

fn catalog_summary(cat: &CtCatalog, seqs: usize) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "algebra {}", cat.algebra.digest());
    let _ = writeln!(s, "vertices {:?}", cat.algebra.quiver().labels());
    let _ = writeln!(s, "d {}", cat.d);
    let _ = writeln!(s, "objects {}", cat.len());
    for x in 0..cat.len() {
        let _ = writeln!(s, "  {x} {}", object_label(cat, x));
    }
    let _ = writeln!(s, "d-exact sequences {seqs}");
    s
}

fn build(job: &Job) -> Result<Outcome> {
    if job.format == Some(Format::Dot) {
        return Err(Error::InvalidInput("build has no DOT output".into()));
    }
    let cat = job.catalog()?;
    let file = CatalogFile::new(&cat, job.seed)?;
    if let Some(path) = job.output("catalog.json") {
        write_json(&path, &file)?;
    }
    Ok(Outcome::Ok(match job.format {
        Some(_) => to_json(&file),
        None => catalog_summary(&cat, file.sequences.len()),
    }))
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable value") + "\n"
}

fn dot_of(cat: &CtCatalog, file: &TiltingFile) -> String {
    let lattice = Lattice { nodes: file.torsion_classes.clone(), edges: file.lattice_edges.clone() };
    lattice_dot(cat, &file.tilting(), &lattice)
}

fn tilting(job: &Job) -> Result<Outcome> {
    let cat = job.catalog()?;
    let ctx = TiltingContext::new(&cat)?;
    let file = cached_tilting(job.cache().as_ref(), &ctx, job.cap_subsets.map(|k| k as usize), job.seed)?;
    let dot = dot_of(&cat, &file);
    if let Some(path) = job.output("tilting.json") {
        write_json(&path, &file)?;
    }
    if let Some(path) = job.output("lattice.dot") {
        write_text(&path, &dot)?;
    }
    Ok(Outcome::Ok(match job.format {
        Some(Format::Json) => to_json(&file),
        Some(Format::Dot) => dot,
        None => {
            let mut s = String::new();
            let _ = writeln!(s, "proper support-{}-tilting modules {}", cat.d, file.verdicts.len());
            for (k, v) in file.verdicts.iter().enumerate() {
                let labels: Vec<String> = v.summands.iter().map(|&x| object_label(&cat, x)).collect();
                let _ = writeln!(s, "  {k} [{}] torsion class of size {}", labels.join(", "), file.torsion_classes[k].len());
            }
            let _ = writeln!(s, "lattice edges {}", file.lattice_edges.len());
            s
        }
    }))
}

fn audit_summary(r: &AuditReport) -> String {
    let mut s = String::new();
    let m = &r.masod;
    let _ = writeln!(s, "cardinalities {:?}", m.cardinalities());
    let _ = writeln!(s, "torsion bijection {}", m.torsion_bijection);
    let _ = writeln!(s, "resonant bijection {}", m.resonant_bijection);
    let _ = writeln!(s, "torsion-free bijection {}", m.torsion_free_bijection);
    let _ = writeln!(s, "coresonant bijection {}", m.coresonant_bijection);
    let _ = writeln!(s, "undirected collections {:?} / {:?}", m.undirected_resonant, m.undirected_coresonant);
    let _ = writeln!(s, "tilting audit {}", r.tilting.holds());
    let _ = writeln!(s, "torsion class checks {}", r.torsion_failures.is_empty());
    match &r.sequence_failures {
        Some(f) => {
            let _ = writeln!(s, "indecomposable sequence checks {}", f.is_empty());
        }
        None => {
            let _ = writeln!(s, "indecomposable sequence checks skipped (not almost directed)");
        }
    }
    let _ = writeln!(s, "idempotent ideal checks {}", r.idempotent_ideal_failures.is_empty());
    let _ = writeln!(s, "Hom/Ext duality {}", r.duality_failures.is_empty());
    match &r.probe {
        Some(p) => {
            let _ = writeln!(
                s,
                "probe: {} strong torsion classes, {} maximal support pre-tilting modules",
                p.torsion_classes.len(),
                p.maximal_support_pre_tilting.len()
            );
        }
        None => {
            let _ = writeln!(s, "probe skipped (catalog above the probe cap)");
        }
    }
    let _ = writeln!(s, "holds {}", r.holds());
    s
}

fn audit(job: &Job) -> Result<Outcome> {
    let cat = job.catalog()?;
    let ctx = TiltingContext::new(&cat)?;
    let file = cached_tilting(job.cache().as_ref(), &ctx, job.cap_subsets.map(|k| k as usize), job.seed)?;
    let report = full_audit(&ctx, &file.verdicts, None, job.seed)?;
    if let Some(path) = job.output("report.json") {
        write_json(&path, &report)?;
    }
    let text = match job.format {
        Some(Format::Json) => to_json(&report),
        Some(Format::Dot) => dot_of(&cat, &file),
        None => audit_summary(&report),
    };
    if report.holds() {
        return Ok(Outcome::Ok(text));
    }
    let witness = report.witness().unwrap_or_default();
    if let Some(path) = job.output("witness.json") {
        write_json(&path, &serde_json::json!({ "witness": witness }))?;
    }
    print!("{text}");
    Ok(Outcome::Falsified(witness))
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Falsification(_) => 3,
        Error::CapExceeded(_) | Error::DecompositionStalled(_) => 4,
        _ => 2,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::InvalidInput(_) => "invalid-input",
        Error::OrientedCycle(_) => "oriented-cycle",
        Error::Decomposable(_) => "decomposable",
        Error::NotSplit(_) => "not-split",
        Error::DecompositionStalled(_) => "decomposition-stalled",
        Error::Precondition(_) => "precondition",
        Error::CapExceeded(_) => "cap-exceeded",
        Error::Falsification(_) => "falsification",
    }
}

fn report_error(kind: &str, message: &str, code: u8) -> ExitCode {
    let doc = serde_json::json!({ "error": kind, "message": message, "exit": code });
    eprintln!("{doc}");
    ExitCode::from(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Build(job) => build(job),
        Command::Tilting(job) => tilting(job),
        Command::Audit(job) => audit(job),
    };
    match result {
        Ok(Outcome::Ok(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::Falsified(witness)) => report_error("falsification", &witness, 3),
        Err(e) => report_error(error_kind(&e), &e.to_string(), exit_code(&e)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_exit_codes() {
        assert_eq!(exit_code(&Error::InvalidInput("x".into())), 2);
        assert_eq!(exit_code(&Error::Precondition("x".into())), 2);
        assert_eq!(exit_code(&Error::Falsification("x".into())), 3);
        assert_eq!(exit_code(&Error::CapExceeded("x".into())), 4);
    }
}
