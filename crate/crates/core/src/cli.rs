//! Command-line front end: `perms`, `gen`, `realize`, `dim`, `bound`.
//!
//! Exit codes: 0 success, 1 usage, 2 parse/validation, 3 size guard,
//! 4 realizer verification failure.

use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand};

use crate::drawings::build_drawing_family;
use crate::instances::GeneratorSpec;
use crate::oracle::{exact_dimension, MAX_ELEMENTS};
use crate::permutations::{build_3suitable, build_weakly_3suitable, is_3suitable, is_weakly_3suitable};
use crate::realizer::{
    build_realizer, degree_bound, dimension_bound, poset_from_paths, verify_realizer, CptInstance,
};
use crate::{io, Error};

/// Largest `n` `perms --verify` will brute-force.
pub const PERMS_VERIFY_LIMIT: usize = 64;

pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_GUARD: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "cptdim", version, about = "Realizers for containment orders of paths in trees")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a (weakly) 3-suitable family of permutations of [n]
    Perms {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// Weakly 3-suitable family
        #[arg(long, conflicts_with = "strong")]
        weak: bool,
        /// 3-suitable family (default)
        #[arg(long)]
        strong: bool,
        /// Brute-force check the family (n <= 64)
        #[arg(long)]
        verify: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Generate an instance as a tree file and a paths file
    Gen {
        /// P(1,2;Δ^r) on the complete Δ-ary tree of radius r
        #[arg(long, num_args = 2, value_names = ["DELTA", "R"], required_unless_present = "random", conflicts_with = "random")]
        p12: Option<Vec<usize>>,
        /// Random tree on N nodes with P paths
        #[arg(long, num_args = 3, value_names = ["N", "P", "SEED"])]
        random: Option<Vec<u64>>,
        #[arg(long)]
        tree: PathBuf,
        #[arg(long)]
        paths: PathBuf,
    },
    /// Build and verify a realizer for an instance
    Realize {
        tree: PathBuf,
        paths: PathBuf,
        /// Realizer output (stdout if absent)
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Skip verification (benchmarking only)
        #[arg(long)]
        no_verify: bool,
        /// Also dump the drawing descriptors
        #[arg(long)]
        drawings: Option<PathBuf>,
    },
    /// Exact dimension of a tiny instance (at most 12 elements)
    Dim {
        tree: PathBuf,
        paths: PathBuf,
        #[arg(long, default_value_t = 6)]
        kmax: usize,
    },
    /// Report Δ, r, leaf count and the dimension bounds of a host tree
    Bound { tree: PathBuf },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunReport {
    pub max_degree: usize,
    pub radius: usize,
    pub leaves: usize,
    pub elements: usize,
    pub size: usize,
    pub bound: usize,
    pub dimension_bound: usize,
    /// `None` when verification was skipped.
    pub verified: Option<bool>,
    pub phases: Vec<(&'static str, Duration)>,
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "max degree       {}", self.max_degree)?;
        writeln!(f, "radius           {}", self.radius)?;
        writeln!(f, "leaves           {}", self.leaves)?;
        writeln!(f, "elements         {}", self.elements)?;
        writeln!(f, "realizer size    {}", self.size)?;
        writeln!(f, "bound            {}", self.bound)?;
        writeln!(f, "dimension bound  {}", self.dimension_bound)?;
        let verdict = match self.verified {
            Some(true) => "pass",
            Some(false) => "FAIL",
            None => "skipped",
        };
        writeln!(f, "verification     {verdict}")?;
        for (phase, t) in &self.phases {
            writeln!(f, "time {phase:<12}{:.3} ms", t.as_secs_f64() * 1e3)?;
        }
        Ok(())
    }
}

/// Outcome of a command: exit code plus anything already reported.
type Outcome = Result<i32, Error>;

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidArgument(_) => EXIT_USAGE,
        Error::Guard { .. } => EXIT_GUARD,
        Error::InvalidTree(_)
        | Error::InvalidInstance(_)
        | Error::Parse { .. }
        | Error::NotAPoset(_)
        | Error::Io(_) => EXIT_INVALID,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli, stdout, stderr),
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            if e.use_stderr() {
                EXIT_USAGE
            } else {
                0
            }
        }
    }
}

pub fn run(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let outcome = match cli.command {
        Command::Perms {
            n,
            weak,
            strong: _,
            verify,
            out,
        } => cmd_perms(n as usize, weak, verify, out.as_deref(), stdout, stderr),
        Command::Gen {
            p12,
            random,
            tree,
            paths,
        } => {
            let spec = match (p12, random) {
                (Some(v), _) => GeneratorSpec::P12 {
                    arity: v[0],
                    radius: v[1],
                },
                (None, Some(v)) => GeneratorSpec::Random {
                    nodes: v[0] as usize,
                    paths: v[1] as usize,
                    seed: v[2],
                },
                (None, None) => unreachable!("clap requires one generator"),
            };
            cmd_gen(spec, &tree, &paths, stderr)
        }
        Command::Realize {
            tree,
            paths,
            out,
            no_verify,
            drawings,
        } => cmd_realize(&tree, &paths, out.as_deref(), !no_verify, drawings.as_deref(), stdout, stderr),
        Command::Dim { tree, paths, kmax } => cmd_dim(&tree, &paths, kmax, stdout),
        Command::Bound { tree } => cmd_bound(&tree, stdout),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

fn emit(out: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))))
}

pub fn load_instance(tree: &Path, paths: &Path) -> Result<CptInstance, Error> {
    let t = io::read_tree(&read(tree)?)?.root_at_center();
    let elements = io::read_paths(&read(paths)?, t.len())?;
    CptInstance::new(t, &elements)
}

pub fn cmd_perms(
    n: usize,
    weak: bool,
    verify: bool,
    out: Option<&Path>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Outcome {
    let start = Instant::now();
    let fam = if weak { build_weakly_3suitable(n)? } else { build_3suitable(n)? };
    let elapsed = start.elapsed();
    emit(out, &io::write_family(&fam), stdout)?;
    writeln!(
        stderr,
        "{} family of {} permutations of [{n}] in {:.3} ms",
        if weak { "weakly 3-suitable" } else { "3-suitable" },
        fam.len(),
        elapsed.as_secs_f64() * 1e3
    )?;
    if !verify {
        return Ok(0);
    }
    if n > PERMS_VERIFY_LIMIT {
        writeln!(stderr, "verification refused: n = {n} exceeds {PERMS_VERIFY_LIMIT}")?;
        return Ok(EXIT_GUARD);
    }
    let ok = if weak { is_weakly_3suitable(&fam) } else { is_3suitable(&fam) };
    writeln!(stderr, "verification {}", if ok { "pass" } else { "FAIL" })?;
    Ok(if ok { 0 } else { EXIT_VERIFY })
}

pub fn cmd_gen(spec: GeneratorSpec, tree: &Path, paths: &Path, stderr: &mut dyn Write) -> Outcome {
    let inst = spec.generate()?;
    std::fs::write(tree, io::write_tree(inst.tree()))?;
    std::fs::write(paths, io::write_paths(&inst))?;
    writeln!(stderr, "{} nodes, {} paths", inst.tree().len(), inst.len())?;
    Ok(0)
}

pub fn realize_report(inst: &CptInstance, verify: bool) -> (crate::poset::Realizer, RunReport) {
    let mut phases = Vec::new();
    let start = Instant::now();
    let realizer = build_realizer(inst);
    phases.push(("realize", start.elapsed()));
    let verified = verify.then(|| {
        let start = Instant::now();
        let ok = verify_realizer(&poset_from_paths(inst), &realizer).unwrap_or(false);
        phases.push(("verify", start.elapsed()));
        ok
    });
    let t = inst.tree();
    let report = RunReport {
        max_degree: t.max_degree(),
        radius: t.radius(),
        leaves: t.leaf_count(),
        elements: inst.len(),
        size: realizer.len(),
        bound: degree_bound(t),
        dimension_bound: dimension_bound(t),
        verified,
        phases,
    };
    (realizer, report)
}

pub fn cmd_realize(
    tree: &Path,
    paths: &Path,
    out: Option<&Path>,
    verify: bool,
    drawings: Option<&Path>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Outcome {
    let start = Instant::now();
    let inst = load_instance(tree, paths)?;
    let load = start.elapsed();
    let (realizer, mut report) = realize_report(&inst, verify);
    report.phases.insert(0, ("load", load));
    emit(out, &io::write_realizer(&inst, &realizer), stdout)?;
    if let Some(path) = drawings {
        std::fs::write(path, io::write_drawings(&build_drawing_family(inst.tree())))?;
    }
    write!(stderr, "{report}")?;
    Ok(match report.verified {
        Some(false) => EXIT_VERIFY,
        _ => 0,
    })
}

pub fn cmd_dim(tree: &Path, paths: &Path, kmax: usize, stdout: &mut dyn Write) -> Outcome {
    let inst = load_instance(tree, paths)?;
    if inst.len() > MAX_ELEMENTS {
        return Err(Error::Guard {
            what: "element count for exact dimension",
            got: inst.len(),
            limit: MAX_ELEMENTS,
        });
    }
    let poset = poset_from_paths(&inst);
    let result = exact_dimension(&poset, kmax)?;
    match result.value {
        Some(d) => writeln!(stdout, "dimension        {d}")?,
        None => writeln!(stdout, "dimension        > {kmax}")?,
    }
    writeln!(stdout, "realizer size    {}", build_realizer(&inst).len())?;
    writeln!(stdout, "bound            {}", degree_bound(inst.tree()))?;
    writeln!(stdout, "dimension bound  {}", dimension_bound(inst.tree()))?;
    Ok(0)
}

pub fn cmd_bound(tree: &Path, stdout: &mut dyn Write) -> Outcome {
    let t = io::read_tree(&read(tree)?)?.root_at_center();
    writeln!(stdout, "nodes            {}", t.len())?;
    writeln!(stdout, "root             {}", t.root() + 1)?;
    writeln!(stdout, "max degree       {}", t.max_degree())?;
    writeln!(stdout, "radius           {}", t.radius())?;
    writeln!(stdout, "leaves           {}", t.leaf_count())?;
    writeln!(stdout, "bound            {}", degree_bound(&t))?;
    writeln!(stdout, "dimension bound  {}", dimension_bound(&t))?;
    Ok(0)
}
