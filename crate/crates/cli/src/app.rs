use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use cotilt_core::classes::ModuleClass;
use cotilt_core::engine::{self, PredicateReport};
use cotilt_core::{Algebra, Budgets, Catalog, Field, IndecRegistry, Representation};

use crate::error::{exit, CliError};
use crate::{dot, drivers, format};

#[derive(Debug, Parser)]
#[command(
    name = "cotilt",
    version,
    about = "Costar, quasi-cotilting and cotilting modules over finite-dimensional algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub options: Options,
}

#[derive(Debug, Clone, clap::Args)]
pub struct Options {
    /// Override the field of the algebra file (`gf2`, `gf3`, `rational`).
    #[arg(long, global = true, value_parser = parse_field_flag)]
    pub field: Option<Field>,

    /// Hom-space elements enumerated per mono/epi search.
    #[arg(long, global = true, default_value_t = Budgets::default().mono, value_parser = clap::value_parser!(u64).range(1..))]
    pub mono_budget: u64,

    /// Ext¹ elements enumerated per pair of indecomposables.
    #[arg(long, global = true, default_value_t = Budgets::default().ext, value_parser = clap::value_parser!(u64).range(1..))]
    pub ext_budget: u64,

    /// Endomorphisms enumerated by the minimality check of covers.
    #[arg(long, global = true, default_value_t = Budgets::default().minimality, value_parser = clap::value_parser!(u64).range(1..))]
    pub minimality_budget: u64,

    /// Largest total dimension searched for indecomposables.
    #[arg(long, global = true, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..))]
    pub registry_bound: u64,

    /// Worker threads for subset sweeps.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide a property of a module and print a report.
    Check {
        kind: CheckKind,
        algebra: PathBuf,
        module: PathBuf,
        /// Also write the report to this file.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// List the torsion-free classes.
    Classes {
        algebra: PathBuf,
        /// Write the Hasse diagram in DOT format.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Pair torsion-free classes with basic quasi-cotilting modules.
    Bijection { algebra: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Quasicotilting,
    Cotilting,
    Costar,
    Faithful,
    Extinjective,
}

fn parse_field_flag(s: &str) -> Result<Field, String> {
    format::parse_field(&[s])
}

impl Options {
    pub fn budgets(&self) -> Budgets {
        Budgets {
            mono: self.mono_budget,
            ext: self.ext_budget,
            minimality: self.minimality_budget,
            ..Budgets::default()
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn load_algebra(path: &Path, options: &Options) -> Result<Algebra, CliError> {
    let alg = format::parse_algebra(&read(path)?).map_err(|e| locate(path, e))?;
    match options.field {
        Some(f) if f != alg.field() => Ok(alg.with_field(f)?),
        _ => Ok(alg),
    }
}

pub fn load_module(path: &Path, alg: &Algebra) -> Result<Representation, CliError> {
    Ok(format::parse_module(&read(path)?, alg)
        .map_err(|e| locate(path, e))?
        .1)
}

fn locate(path: &Path, e: CliError) -> CliError {
    match e {
        CliError::Parse { line, msg } => CliError::Parse {
            line,
            msg: format!("{}: {msg}", path.display()),
        },
        other => other,
    }
}

pub fn catalog(alg: Algebra, options: &Options) -> Result<Catalog, CliError> {
    let budgets = options.budgets();
    let registry = IndecRegistry::enumerate(&alg, options.registry_bound as usize, &budgets)?;
    Ok(Catalog::new(alg, registry, budgets)?)
}

pub fn check(
    kind: CheckKind,
    cat: &Catalog,
    m: &Representation,
) -> Result<PredicateReport, CliError> {
    Ok(match kind {
        CheckKind::Quasicotilting => engine::is_quasi_cotilting(cat, m)?,
        CheckKind::Cotilting => engine::is_cotilting(cat, m)?,
        CheckKind::Costar => engine::is_costar(cat, m)?,
        CheckKind::Faithful => engine::is_faithful(cat, m)?,
        CheckKind::Extinjective => engine::is_ext_injective_in_cogen(cat, m)?,
    })
}

/// Listing `tf<i>: {members}` with closure flags.
pub fn classes_listing(cat: &Catalog, jobs: usize) -> Result<(String, String), CliError> {
    let lattice = drivers::torsion_free_classes(cat, jobs)?;
    let mut out = String::new();
    let yn = |b: bool| if b { "yes" } else { "no" };
    for (i, members) in lattice.classes.iter().enumerate() {
        let c = ModuleClass::new(cat, *members)?;
        out.push_str(&format!(
            "tf{i}: {}  submodules={} extensions={} quotients={}\n",
            cat.describe_set(*members),
            yn(c.flags.submodule_closed),
            yn(c.flags.extension_closed),
            yn(c.flags.quotient_closed)
        ));
    }
    Ok((out, dot::lattice_dot(cat, &lattice)))
}

/// Runs a parsed invocation, writing to `out`; returns the exit status.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let o = &cli.options;
    let jobs = o.jobs as usize;
    let emit = |out: &mut dyn Write, text: &str| -> Result<(), CliError> {
        out.write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: String::from("<stdout>"),
                source,
            })
    };
    match &cli.command {
        Command::Check {
            kind,
            algebra,
            module,
            report,
        } => {
            let alg = load_algebra(algebra, o)?;
            let m = load_module(module, &alg)?;
            let cat = catalog(alg, o)?;
            let r = check(*kind, &cat, &m)?;
            let text = r.render();
            emit(out, &text)?;
            if let Some(p) = report {
                write(p, &text)?;
            }
            Ok(if r.verdict { exit::TRUE } else { exit::FALSE })
        }
        Command::Classes { algebra, dot } => {
            let cat = catalog(load_algebra(algebra, o)?, o)?;
            let (listing, graph) = classes_listing(&cat, jobs)?;
            emit(out, &listing)?;
            if let Some(p) = dot {
                write(p, &graph)?;
            }
            Ok(exit::TRUE)
        }
        Command::Bijection { algebra } => {
            let cat = catalog(load_algebra(algebra, o)?, o)?;
            let b = drivers::bijection(&cat, jobs)?;
            emit(out, &b.render(&cat))?;
            Ok(exit::TRUE)
        }
    }
}
