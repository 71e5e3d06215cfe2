//! Command-line front end. [`run`] does all the work and returns the text
//! that the binary prints, so it can be driven from tests.

pub mod verify;

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use sha2::{Digest, Sha256};

use crate::closedform::FamilyId;
use crate::error::{Error, Result};
use crate::export::{from_json, functor_to_json, to_json, to_json_value, to_text};
use crate::hom::{find_iso, hom_dim, IsoVerdict, NonIsoReason, ISO_SEARCH_SEED};
use crate::linalg::Field;
use crate::quiver::{build_canonical, build_dn, build_e6};
use crate::rep::{Morphism, Representation};
use crate::series::{
    build_e6_rank3_series1, build_rank2, build_tilting_dn, build_tilting_e6, TiltingData,
};
use crate::tilt::{apply, FunctorOutput};

use verify::{render, run_suite, Suite};

/// Largest `n` and `m` accepted on the command line.
pub const MAX_N: usize = 40;
pub const MAX_M: usize = 40;

#[derive(Parser, Debug)]
#[command(
    name = "tiltrep",
    version,
    about = "Exact preprojective representations of D~n and E~6"
)]
struct Cli {
    /// Ground field: `q` for the rationals or `fp:<p>` for a prime field.
    #[arg(long, global = true, default_value = "q")]
    field: String,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a quiver, a canonical algebra or a tilting module.
    ///
    /// Targets: dn:<n>, e6, canonical:<p>,<q>,<s>, tilting-dn:<n>, tilting-e6.
    Describe { target: String },
    /// Build one member of a family.
    Build(FamilyArgs),
    /// Apply the tilting functor to a module of a series.
    Functor(FamilyArgs),
    /// Compare the functor image of a series module with the explicit family.
    Compare(FamilyArgs),
    /// Run a verification suite and print a PASS/FAIL table.
    Verify {
        #[arg(value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        max_m: usize,
    },
    /// Write a family member to a file (or stdout) as JSON or text.
    Export {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Read a JSON representation, validate it and print it.
    Import { file: std::path::PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyName {
    /// Rank 2 representations of D~n (explicit matrices).
    DnRank2,
    /// Rank 1 representations of D~n, types 1 to 4.
    DnRank1,
    /// Rank 3 representations of E~6, series 1 or 2.
    E6Rank3,
    /// Rank 2 modules over the canonical algebra (p,2,2).
    LambdaRank2,
    /// Rank 3 modules over the canonical algebra (3,3,2).
    LambdaE6,
}

#[derive(Args, Debug, Clone)]
struct FamilyArgs {
    #[arg(value_enum)]
    family: FamilyName,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    i: Option<usize>,
    #[arg(long)]
    j: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long = "type")]
    kind: Option<u8>,
    #[arg(long)]
    series: Option<u8>,
    #[arg(long)]
    p: Option<usize>,
}

/// What `run` produced: the exit code and the two output streams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }
}

/// Parses `argv` (including the program name) and executes the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match execute(&cli) {
        Ok(out) => out,
        Err(e) => {
            let code = match e {
                Error::InvalidParameter(_)
                | Error::UnsupportedType(_)
                | Error::NotPrime(_)
                | Error::Parse(_) => 2,
                _ => 1,
            };
            Outcome {
                code,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    }
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let field = Field::parse(&cli.field)?;
    let format = cli.format;
    match &cli.command {
        Command::Describe { target } => describe(target, field, format).map(Outcome::ok),
        Command::Build(args) => {
            let rep = resolve(args)?.build(field)?;
            Ok(Outcome::ok(render_rep(&rep, format)))
        }
        Command::Functor(args) => {
            let out = functor_image(&resolve(args)?, field)?;
            let text = match format {
                Format::Json => functor_to_json(&out) + "\n",
                Format::Text => format!(
                    "module  {}\ntilting {}\n\n{}",
                    out.provenance.module,
                    out.provenance.tilting,
                    to_text(&out.representation)
                ),
            };
            Ok(Outcome::ok(text))
        }
        Command::Compare(args) => compare(&resolve(args)?, field, format),
        Command::Verify {
            suite,
            max_n,
            max_m,
        } => {
            if !(4..=MAX_N).contains(max_n) || *max_m > MAX_M {
                return Err(Error::InvalidParameter(format!(
                    "verify needs 4 <= --max-n <= {MAX_N} and --max-m <= {MAX_M}"
                )));
            }
            let rows = run_suite(*suite, *max_n, *max_m, field)?;
            let failed = rows.iter().any(|r| !r.pass);
            let stdout = match format {
                Format::Text => render(&rows),
                Format::Json => {
                    let doc: Vec<_> = rows
                        .iter()
                        .map(|r| {
                            json!({
                                "status": if r.pass { "PASS" } else { "FAIL" },
                                "suite": r.suite,
                                "subject": r.subject,
                                "check": r.check,
                                "computed": r.computed,
                                "expected": r.expected,
                            })
                        })
                        .collect();
                    serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
                }
            };
            Ok(Outcome {
                code: failed as i32,
                stdout,
                stderr: String::new(),
            })
        }
        Command::Export { family, out } => {
            let rep = resolve(family)?.build(field)?;
            let text = render_rep(&rep, format);
            match out {
                Some(path) => {
                    std::fs::write(path, &text).map_err(|e| {
                        Error::InvalidParameter(format!("cannot write {}: {e}", path.display()))
                    })?;
                    Ok(Outcome::ok(format!("wrote {}\n", path.display())))
                }
                None => Ok(Outcome::ok(text)),
            }
        }
        Command::Import { file } => {
            let text = std::fs::read_to_string(file)
                .map_err(|e| Error::Parse(format!("cannot read {}: {e}", file.display())))?;
            let rep = from_json(&text)?;
            Ok(Outcome::ok(render_rep(&rep, format)))
        }
    }
}

fn render_rep(rep: &Representation, format: Format) -> String {
    match format {
        Format::Json => to_json(rep) + "\n",
        Format::Text => to_text(rep),
    }
}

/// A fully specified family member.
#[derive(Clone, Copy, Debug)]
enum Target {
    Closed(FamilyId),
    LambdaRank2 {
        p: usize,
        i: usize,
        j: usize,
        m: usize,
    },
    LambdaE6 {
        m: usize,
    },
}

impl Target {
    fn build(self, field: Field) -> Result<Representation> {
        match self {
            Target::Closed(id) => id.build(field),
            Target::LambdaRank2 { p, i, j, m } => build_rank2(p, i, j, m, field),
            Target::LambdaE6 { m } => build_e6_rank3_series1(m, field),
        }
    }
}

fn need<T: Copy>(v: Option<T>, flag: &str, family: &str, bounds: &str) -> Result<T> {
    v.ok_or_else(|| Error::InvalidParameter(format!("{family} needs --{flag} ({bounds})")))
}

fn unused(args: &FamilyArgs, allowed: &[&str], family: &str) -> Result<()> {
    let given = [
        ("n", args.n.is_some()),
        ("i", args.i.is_some()),
        ("j", args.j.is_some()),
        ("m", args.m.is_some()),
        ("type", args.kind.is_some()),
        ("series", args.series.is_some()),
        ("p", args.p.is_some()),
    ];
    for (flag, set) in given {
        if set && !allowed.contains(&flag) {
            return Err(Error::InvalidParameter(format!(
                "{family} does not take --{flag}"
            )));
        }
    }
    Ok(())
}

fn bounded(v: usize, lo: usize, hi: usize, what: &str) -> Result<usize> {
    if (lo..=hi).contains(&v) {
        Ok(v)
    } else {
        Err(Error::InvalidParameter(format!(
            "{what} must lie in {lo}..={hi}, got {v}"
        )))
    }
}

fn resolve(args: &FamilyArgs) -> Result<Target> {
    let m_of = |fam: &str, lo: usize| -> Result<usize> {
        let m = need(args.m, "m", fam, &format!("{lo} <= m <= {MAX_M}"))?;
        bounded(m, lo, MAX_M, "m")
    };
    match args.family {
        FamilyName::DnRank2 => {
            let f = "dn-rank2";
            unused(args, &["n", "i", "j", "m"], f)?;
            let n = bounded(
                need(args.n, "n", f, &format!("4 <= n <= {MAX_N}"))?,
                4,
                MAX_N,
                "n",
            )?;
            let i = need(args.i, "i", f, "1 <= i < j <= n-2")?;
            let j = need(args.j, "j", f, "1 <= i < j <= n-2")?;
            Ok(Target::Closed(FamilyId::DnRank2 {
                n,
                i,
                j,
                m: m_of(f, 0)?,
            }))
        }
        FamilyName::DnRank1 => {
            let f = "dn-rank1";
            unused(args, &["n", "i", "m", "type"], f)?;
            let n = bounded(
                need(args.n, "n", f, &format!("4 <= n <= {MAX_N}"))?,
                4,
                MAX_N,
                "n",
            )?;
            let kind = need(args.kind, "type", f, "1..=4")?;
            let i = need(args.i, "i", f, "1 <= i <= n-2")?;
            let lo = if kind == 3 { 1 } else { 0 };
            Ok(Target::Closed(FamilyId::DnRank1 {
                kind,
                i,
                m: m_of(f, lo)?,
                n,
            }))
        }
        FamilyName::E6Rank3 => {
            let f = "e6-rank3";
            unused(args, &["series", "m"], f)?;
            let series = args.series.unwrap_or(1);
            Ok(Target::Closed(FamilyId::E6Rank3 {
                series,
                m: m_of(f, 0)?,
            }))
        }
        FamilyName::LambdaRank2 => {
            let f = "lambda-rank2";
            unused(args, &["p", "i", "j", "m"], f)?;
            let p = bounded(
                need(args.p, "p", f, &format!("2 <= p <= {}", MAX_N - 2))?,
                2,
                MAX_N - 2,
                "p",
            )?;
            let i = need(args.i, "i", f, "1 <= i < j <= p")?;
            let j = need(args.j, "j", f, "1 <= i < j <= p")?;
            Ok(Target::LambdaRank2 {
                p,
                i,
                j,
                m: m_of(f, 0)?,
            })
        }
        FamilyName::LambdaE6 => {
            let f = "lambda-e6";
            unused(args, &["m"], f)?;
            Ok(Target::LambdaE6 { m: m_of(f, 0)? })
        }
    }
}

/// The series module, the tilting module and the explicit family member
/// that the functor image should match.
fn functor_setup(target: &Target, field: Field) -> Result<(Representation, TiltingData, FamilyId)> {
    match *target {
        Target::Closed(id @ FamilyId::DnRank2 { n, i, j, m }) => Ok((
            build_rank2(n - 2, i, j, m, field)?,
            build_tilting_dn(n, field)?,
            id,
        )),
        Target::LambdaRank2 { p, i, j, m } => Ok((
            build_rank2(p, i, j, m, field)?,
            build_tilting_dn(p + 2, field)?,
            FamilyId::DnRank2 { n: p + 2, i, j, m },
        )),
        Target::Closed(id @ FamilyId::E6Rank3 { series: 1, m }) => Ok((
            build_e6_rank3_series1(m, field)?,
            build_tilting_e6(field)?,
            id,
        )),
        Target::LambdaE6 { m } => Ok((
            build_e6_rank3_series1(m, field)?,
            build_tilting_e6(field)?,
            FamilyId::E6Rank3 { series: 1, m },
        )),
        _ => Err(Error::UnsupportedType(
            "the functor applies to dn-rank2 / lambda-rank2 and e6-rank3 series 1 / lambda-e6"
                .into(),
        )),
    }
}

fn functor_image(target: &Target, field: Field) -> Result<FunctorOutput> {
    let (module, tilting, _) = functor_setup(target, field)?;
    apply(&tilting, &module)
}

/// First 16 hex digits of the SHA-256 of the certificate's matrices.
pub fn certificate_checksum(f: &Morphism) -> String {
    let mut hasher = Sha256::new();
    for (v, c) in f.components().iter().enumerate() {
        hasher.update(format!("{v}:{}x{}:", c.rows(), c.cols()));
        for e in c.entries() {
            hasher.update(e.to_string());
            hasher.update(",");
        }
        hasher.update(";");
    }
    let digest = hasher.finalize();
    digest.iter().take(8).map(|b| format!("{b:02x}")).collect()
}

fn dims_string(rep: &Representation) -> String {
    let d: Vec<String> = rep.dims().iter().map(usize::to_string).collect();
    format!("({})", d.join(","))
}

fn compare(target: &Target, field: Field, format: Format) -> Result<Outcome> {
    let (module, tilting, id) = functor_setup(target, field)?;
    let image = apply(&tilting, &module)?.representation;
    let closed = id.build(field)?;
    let verdict = find_iso(&image, &closed)?;
    let (status, detail) = match &verdict {
        IsoVerdict::Isomorphic(f) => ("ISOMORPHIC", certificate_checksum(f)),
        IsoVerdict::NotIsomorphic(r) => ("NOT ISOMORPHIC", reason_text(r)),
        IsoVerdict::NotFound => ("NOT FOUND", "no invertible morphism found".to_string()),
    };
    let stdout = match format {
        Format::Json => {
            let doc = json!({
                "status": status,
                "family": id.to_string(),
                "tilting": tilting.name,
                "functor_dims": image.dims(),
                "closed_form_dims": closed.dims(),
                "certificate_sha256": matches!(verdict, IsoVerdict::Isomorphic(_)).then(|| detail.clone()),
                "detail": detail,
                "seed": format!("{ISO_SEARCH_SEED:#018x}"),
            });
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "family      {id}");
            let _ = writeln!(s, "tilting     {}", tilting.name);
            let _ = writeln!(s, "functor     {}", dims_string(&image));
            let _ = writeln!(s, "closed form {}", dims_string(&closed));
            match verdict {
                IsoVerdict::Isomorphic(_) => {
                    let _ = writeln!(
                        s,
                        "{status} certificate sha256:{detail} seed {ISO_SEARCH_SEED:#018x}"
                    );
                }
                _ => {
                    let _ = writeln!(s, "{status}: {detail}");
                }
            }
            s
        }
    };
    Ok(Outcome {
        code: (!verdict.is_isomorphic()) as i32,
        stdout,
        stderr: String::new(),
    })
}

fn reason_text(r: &NonIsoReason) -> String {
    match r {
        NonIsoReason::DimensionVectors => "dimension vectors differ".into(),
        NonIsoReason::NoMorphisms => "no nonzero morphisms".into(),
        NonIsoReason::SingleGeneratorNotInvertible => {
            "the hom space is one-dimensional and its generator is not invertible".into()
        }
        NonIsoReason::HomDimensionMismatch { hom, end } => {
            format!("dim Hom = {hom} differs from dim End = {end}")
        }
    }
}

fn describe(target: &str, field: Field, format: Format) -> Result<String> {
    let bad = || {
        Error::InvalidParameter(format!(
            "unknown target `{target}`; expected dn:<n> (4 <= n <= {MAX_N}), e6, \
             canonical:<p>,<q>,<s>, tilting-dn:<n> or tilting-e6"
        ))
    };
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    let (kind, arg) = target.split_once(':').unwrap_or((target, ""));
    match kind {
        "dn" => {
            let q = build_dn(bounded(num(arg)?, 4, MAX_N, "n")?)?;
            Ok(match format {
                Format::Json => serde_json::to_string_pretty(&q).expect("serializable") + "\n",
                Format::Text => q.describe(),
            })
        }
        "e6" if arg.is_empty() => {
            let q = build_e6();
            Ok(match format {
                Format::Json => serde_json::to_string_pretty(&q).expect("serializable") + "\n",
                Format::Text => q.describe(),
            })
        }
        "canonical" => {
            let parts = arg.split(',').map(num).collect::<Result<Vec<_>>>()?;
            let [p, q, s] = parts[..] else {
                return Err(bad());
            };
            let c = build_canonical(p, q, s)?;
            Ok(match format {
                Format::Json => {
                    let doc = json!({ "quiver": c.quiver(), "relation": c.relation() });
                    serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
                }
                Format::Text => {
                    let q = c.quiver();
                    let mut rel = String::new();
                    for (k, t) in c.relation().iter().enumerate() {
                        let path: Vec<&str> = t
                            .path
                            .iter()
                            .rev()
                            .map(|&a| q.arrows()[a].label.as_str())
                            .collect();
                        let sign = match (k, t.coefficient < 0) {
                            (0, false) => "",
                            (0, true) => "-",
                            (_, false) => " + ",
                            (_, true) => " - ",
                        };
                        let coeff = t.coefficient.abs();
                        let coeff = if coeff == 1 {
                            String::new()
                        } else {
                            format!("{coeff} ")
                        };
                        let _ = write!(rel, "{sign}{coeff}{}", path.join("·"));
                    }
                    format!("{}relation: {rel} = 0\n", q.describe())
                }
            })
        }
        "tilting-dn" => describe_tilting(
            &build_tilting_dn(bounded(num(arg)?, 4, MAX_N, "n")?, field)?,
            format,
        ),
        "tilting-e6" if arg.is_empty() => describe_tilting(&build_tilting_e6(field)?, format),
        _ => Err(bad()),
    }
}

fn describe_tilting(t: &TiltingData, format: Format) -> Result<String> {
    let table = t
        .summands
        .iter()
        .map(|a| {
            t.summands
                .iter()
                .map(|b| hom_dim(a, b))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    if format == Format::Json {
        let doc = json!({
            "name": t.name,
            "summands": t.summands.iter().zip(&t.summand_labels).map(|(s, l)| {
                json!({ "label": l, "module": to_json_value(s) })
            }).collect::<Vec<_>>(),
            "generators": t.generators.iter().map(|g| {
                json!({ "source": t.summand_labels[g.source], "target": t.summand_labels[g.target] })
            }).collect::<Vec<_>>(),
            "quiver": t.gamma,
            "vertex_map": t.vertex_map,
            "hom_dims": table,
        });
        return Ok(serde_json::to_string_pretty(&doc).expect("serializable") + "\n");
    }
    let mut s = String::new();
    let _ = writeln!(
        s,
        "tilting module {} over {} ({})",
        t.name,
        t.summands[0].algebra(),
        t.field()
    );
    let width = t
        .summand_labels
        .iter()
        .map(String::len)
        .max()
        .unwrap_or(1)
        .max(3);
    let _ = writeln!(s, "\nsummands:");
    for (l, m) in t.summand_labels.iter().zip(&t.summands) {
        let _ = writeln!(s, "  {l:<width$} dims {}", dims_string(m));
    }
    let _ = writeln!(s, "\ngenerators:");
    for g in &t.generators {
        let _ = writeln!(
            s,
            "  {} -> {}",
            t.summand_labels[g.source], t.summand_labels[g.target]
        );
    }
    let _ = writeln!(s, "\ndim Hom(row, column):");
    let _ = write!(s, "  {:<width$}", "");
    for l in &t.summand_labels {
        let _ = write!(s, " {l:>width$}");
    }
    s.push('\n');
    for (l, row) in t.summand_labels.iter().zip(&table) {
        let _ = write!(s, "  {l:<width$}");
        for d in row {
            let _ = write!(s, " {d:>width$}");
        }
        s.push('\n');
    }
    let _ = writeln!(s, "\nendomorphism quiver (opposite):");
    for line in t.gamma.describe().lines() {
        let _ = writeln!(s, "  {line}");
    }
    let map: Vec<String> = t
        .vertex_map
        .iter()
        .enumerate()
        .map(|(x, &k)| format!("{}={}", t.gamma.label(x), t.summand_labels[k]))
        .collect();
    let _ = writeln!(s, "vertex map: {}", map.join(" "));
    Ok(s)
}
