// SPDX-License-Identifier: Apache-2.0

//! `fuselift`: command-line front end.
//!
//! Exit status is 0 on success, 1 when the input is well-formed but fails
//! validation, and 2 on I/O or parse errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use fuselift::extension::checks;
use fuselift::fusion::{ring_validate, simple_currents};
use fuselift::io::{self, Document};
use fuselift::{catalog, Error, Ext, Inverse, Problem, Result, Ring, SectorName, Space, Subgroup};

#[derive(Parser)]
#[command(
    name = "fuselift",
    version,
    about = "Sectors and fusion rings of simple current extensions"
)]
struct Cli {
    /// Output format for results printed to stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Write the resulting ring or problem as JSON to this file.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Directory searched for input files not found as given.
    #[arg(long, global = true, env = "FUSELIFT_CATALOG_DIR", value_name = "DIR")]
    catalog_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a ring, space, extension or inverse problem file.
    Check { path: PathBuf },
    /// Classify the sectors of an extension problem.
    Extend {
        path: PathBuf,
        /// Include twisted sectors for every character of D.
        #[arg(long)]
        twisted: bool,
    },
    /// Fuse two untwisted sectors, e.g. `fuse k2.ext.json "(i1,1)" "(i1,1)"`.
    Fuse {
        path: PathBuf,
        first: String,
        second: String,
    },
    /// Build and validate the fusion ring of the extension.
    BuildRing { path: PathBuf },
    /// Derive the commutant ring from an inverse problem.
    Derive { path: PathBuf },
    /// Move a rank-one lattice datum from m to m + s·k.
    Deform {
        path: PathBuf,
        #[arg(allow_hyphen_values = true)]
        s: i64,
    },
    /// Emit a catalog model (sl2@k, lattice@k,m, parafermion@k,
    /// parafermion-ext@k, sl2-inverse@k) or list the available ones.
    Catalog { name: Option<String> },
}

struct Ctx {
    format: Format,
    out: Option<PathBuf>,
    catalog_dir: Option<PathBuf>,
}

impl Ctx {
    fn resolve(&self, path: &Path) -> PathBuf {
        if path.exists() {
            return path.to_path_buf();
        }
        match &self.catalog_dir {
            Some(dir) if dir.join(path).exists() => dir.join(path),
            _ => path.to_path_buf(),
        }
    }

    fn read(&self, path: &Path) -> Result<String> {
        let p = self.resolve(path);
        fs::read_to_string(&p).map_err(|e| {
            Error::Io(std::io::Error::new(
                e.kind(),
                format!("{}: {e}", p.display()),
            ))
        })
    }

    /// Writes `json` to `--out` when given; otherwise prints `json` or
    /// `table` according to `--format`.
    fn emit(&self, json: &str, table: impl FnOnce() -> String) -> Result<()> {
        match &self.out {
            Some(p) => {
                fs::write(p, json)?;
                eprintln!("wrote {}", p.display());
            }
            None => match self.format {
                Format::Json => print!("{json}"),
                Format::Table => print!("{}", table()),
            },
        }
        Ok(())
    }
}

fn load_problem(ctx: &Ctx, path: &Path) -> Result<Problem> {
    io::extension_from_json(&ctx.read(path)?)
}

fn check(ctx: &Ctx, path: &Path) -> Result<()> {
    match io::read_document(&ctx.read(path)?)? {
        Document::Ring(doc) => {
            let ring: Ring = doc.to_ring()?;
            let report = ring_validate(&ring);
            if let Some(v) = report.first() {
                return Err(Error::Validation(format!(
                    "{v} ({} violation(s) in total)",
                    report.violations.len()
                )));
            }
            let sc = simple_currents(&ring);
            let names: Vec<&str> = sc.labels.iter().map(|&l| ring.label(l)).collect();
            println!(
                "ring: {} labels, unit {}; all axioms hold",
                ring.len(),
                ring.label(ring.unit())
            );
            match sc.group {
                Some(g) => println!("simple currents: {{{}}} ≅ {}", names.join(", "), g.group),
                None => println!("simple currents: {{{}}}", names.join(", ")),
            }
        }
        Document::Space(doc) => {
            let s: Space = doc.to_space()?;
            let rad = s.radical();
            println!("space: {} with a quadratic form", s.group());
            if rad.is_trivial() {
                println!("non-degenerate");
            } else {
                println!("degenerate, radical {rad}");
            }
        }
        Document::Extension(doc) => {
            let p: Problem = doc.to_problem()?;
            let (c, d, dp) = (p.v().group().order(), p.d().order(), p.dperp().order());
            println!(
                "extension: |Irr(W)| = {}, C = {}, D = {}",
                p.w().len(),
                p.v().group(),
                plain_set(p.d())
            );
            println!("D^⊥ = {}", plain_set(p.dperp()));
            let ext = Ext::new(p)?;
            checks::check_all(&ext)?;
            println!(
                "{} orbits; {} sectors per character ({} characters); |C| = |D|·|D^⊥| = {d}·{dp} = {c}",
                ext.orbits().len(),
                ext.expected_count(),
                ext.characters().len()
            );
            println!("all extension identities hold");
        }
        Document::Inverse(doc) => {
            let ip: Inverse = doc.to_problem()?;
            let derived = ip.derive()?;
            println!(
                "inverse problem: |Irr(U)| = {}, {} D^⊥-orbits, derived ring has {} labels",
                ip.u().len(),
                ip.orbits().len(),
                derived.ring.len()
            );
        }
    }
    Ok(())
}

/// `{0,2}` for cyclic groups, `{(0,0),(1,0)}` otherwise.
fn plain_set(h: &Subgroup) -> String {
    let elems: Vec<String> = h
        .elements()
        .iter()
        .map(|g| match g.coords() {
            [] => "0".to_string(),
            [c] => c.to_string(),
            cs => format!(
                "({})",
                cs.iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ),
        })
        .collect();
    format!("{{{}}}", elems.join(","))
}

fn extend(ctx: &Ctx, path: &Path, twisted: bool) -> Result<()> {
    let ext = Ext::new(load_problem(ctx, path)?)?;
    let table = ext.sector_table()?;
    let json = io::sector_table_json(&ext, &table, twisted);
    ctx.emit(&json, || io::sector_table_text(&ext, &table, twisted))
}

fn fuse(ctx: &Ctx, path: &Path, a: &str, b: &str) -> Result<()> {
    let ext = Ext::new(load_problem(ctx, path)?)?;
    // A bad sector name is an argument error, not a failed check.
    let name = |s: &str| {
        ext.resolve(&s.parse::<SectorName>()?).map_err(|e| match e {
            Error::Domain(msg) => Error::Parse(msg),
            e => e,
        })
    };
    let (s1, s2) = (name(a)?, name(b)?);
    let product = ext.fuse_u(&s1, &s2)?;
    let json: Vec<serde_json::Value> = product
        .iter()
        .map(|(s, n)| serde_json::json!({ "sector": s.to_string(), "n": n }))
        .collect();
    let json = io::to_json(&json);
    ctx.emit(&json, || {
        let terms: Vec<String> = product.iter().map(|(s, n)| format!("{s}:{n}")).collect();
        format!("{}\n", terms.join(" "))
    })
}

fn build_ring(ctx: &Ctx, path: &Path) -> Result<()> {
    let ext = Ext::new(load_problem(ctx, path)?)?;
    let ring = ext.build_u_ring()?;
    ring_validate(ring).into_result()?;
    ctx.emit(&io::ring_to_json(ring), || io::ring_text(ring))
}

fn derive(ctx: &Ctx, path: &Path) -> Result<()> {
    let ip: Inverse = io::inverse_from_json(&ctx.read(path)?)?;
    let ring = ip.derive()?.ring;
    ctx.emit(&io::ring_to_json(&ring), || io::ring_text(&ring))
}

fn deform(ctx: &Ctx, path: &Path, s: i64) -> Result<()> {
    let p = load_problem(ctx, path)?;
    let q = catalog::deform(&p, s)?;
    let count = Ext::new(q.clone())?.untwisted().len();
    ctx.emit(&io::extension_to_json(&q), || {
        format!(
            "deformed datum: C = {}, D = {}; W unchanged ({} labels); {count} untwisted sectors\n",
            q.v().group(),
            plain_set(q.d()),
            q.w().len()
        )
    })
}

const CATALOG: &[(&str, &str)] = &[
    ("sl2@k", "fusion ring of affine sl2 at level k"),
    ("lattice@k,m", "quadratic space (Z_2km, r^2/(4km))"),
    ("parafermion@k", "parafermion ring K(sl2, k)"),
    (
        "parafermion-ext@k",
        "K(sl2, k) x lattice(k, 1) extension problem",
    ),
    (
        "sl2-inverse@k",
        "inverse problem recovering K(sl2, k) from sl2 level k",
    ),
];

fn catalog_entry(ctx: &Ctx, name: Option<&str>) -> Result<()> {
    let Some(name) = name else {
        println!("generators:");
        for (n, what) in CATALOG {
            println!("  {n:<20} {what}");
        }
        if let Some(dir) = &ctx.catalog_dir {
            let mut files: Vec<String> = fs::read_dir(dir)?
                .filter_map(|e| e.ok())
                .map(|e| e.file_name().to_string_lossy().into_owned())
                .filter(|f| f.ends_with(".json"))
                .collect();
            files.sort();
            println!("files in {}:", dir.display());
            for f in files {
                println!("  {f}");
            }
        }
        return Ok(());
    };
    let bad = || {
        Error::Parse(format!(
            "unknown catalog entry {name:?}; run `fuselift catalog` for the list"
        ))
    };
    let (kind, args) = name.split_once('@').ok_or_else(bad)?;
    let nums: Vec<u64> = args
        .split(',')
        .map(|a| a.trim().parse::<u64>().map_err(|_| bad()))
        .collect::<Result<_>>()?;
    match (kind, nums.as_slice()) {
        ("sl2", [k]) => {
            let r: Ring = catalog::affine_sl2(*k)?;
            ctx.emit(&io::ring_to_json(&r), || io::ring_text(&r))
        }
        ("parafermion", [k]) => {
            let r: Ring = catalog::parafermion_sl2(*k)?;
            ctx.emit(&io::ring_to_json(&r), || io::ring_text(&r))
        }
        ("lattice", [k, m]) => {
            let s: Space = catalog::lattice_rank1(*k, *m)?.space;
            let json = io::space_to_json(&s);
            ctx.emit(&json, || json.clone())
        }
        ("parafermion-ext", [k]) => {
            let p: Problem = catalog::parafermion_problem(*k)?;
            let json = io::extension_to_json(&p);
            ctx.emit(&json, || json.clone())
        }
        ("sl2-inverse", [k]) => {
            let ip: Inverse = catalog::sl2_inverse_problem(*k)?;
            let json = io::inverse_to_json(&ip);
            ctx.emit(&json, || json.clone())
        }
        _ => Err(bad()),
    }
}

fn run(cli: Cli) -> Result<()> {
    let ctx = Ctx {
        format: cli.format,
        out: cli.out,
        catalog_dir: cli.catalog_dir,
    };
    match &cli.command {
        Command::Check { path } => check(&ctx, path),
        Command::Extend { path, twisted } => extend(&ctx, path, *twisted),
        Command::Fuse {
            path,
            first,
            second,
        } => fuse(&ctx, path, first, second),
        Command::BuildRing { path } => build_ring(&ctx, path),
        Command::Derive { path } => derive(&ctx, path),
        Command::Deform { path, s } => deform(&ctx, path, *s),
        Command::Catalog { name } => catalog_entry(&ctx, name.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("fuselift: {e}");
            ExitCode::from(if e.is_input_error() { 2 } else { 1 })
        }
    }
}
