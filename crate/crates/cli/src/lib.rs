//! The `surfalt` command line.
//!
//! Exit codes: 0 on success, 1 for unreadable or invalid input, 2 when a
//! report or suite finds a violated identity.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use surfalt_core::{
    analyze, from_virtual_gauss_code, parse_sld, random_diagrams, run_suite, to_sld, AnalysisReport, Direction,
    FormReport, LinkOrientation, RandomDiagramSpec, SuiteConfig, SuiteReport, SurfaceDiagram,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_IDENTITY: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "surfalt",
    version,
    about = "Checkerboard surfaces and Gordon-Litherland forms of link diagrams on surfaces"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full report for a diagram file.
    Analyze(DiagramArgs),
    /// Full report for a signed virtual Gauss code.
    ImportGauss {
        /// For example "O1+U2+O3+U1+O2+U3+"; separate components with '/'.
        code: String,
        #[command(flatten)]
        opts: ReportOpts,
        /// Also print the diagram in .sld form.
        #[arg(long)]
        sld: bool,
    },
    /// Theorem-level verdicts only.
    Certify(DiagramArgs),
    /// Seeded random diagrams in .sld form.
    Random {
        #[arg(long)]
        crossings: usize,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        connected: bool,
        #[arg(long)]
        colorable: bool,
        #[arg(long)]
        alternating: bool,
        /// Write one file per diagram into this directory instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Identity and property sweep over seeded random diagrams.
    Suite {
        #[arg(long, default_value_t = 8)]
        max_crossings: usize,
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
pub struct DiagramArgs {
    /// Path to an .sld file.
    pub path: PathBuf,
    #[command(flatten)]
    pub opts: ReportOpts,
}

#[derive(Debug, Args)]
pub struct ReportOpts {
    /// Emit JSON.
    #[arg(long)]
    pub json: bool,
    /// One '+' or '-' per component, overriding the file's orientation.
    #[arg(long, allow_hyphen_values = true)]
    pub orient: Option<String>,
}

struct Failure(u8, String);

fn input_error(msg: impl Into<String>) -> Failure {
    Failure(EXIT_INPUT, msg.into())
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<u8, Failure> {
    let mut text = String::new();
    let code = match command {
        Command::Analyze(args) => {
            let (d, o) = load(&args.path, args.opts.orient.as_deref())?;
            report(&d, &o, args.opts.json, &mut text)
        }
        Command::ImportGauss { code, opts, sld } => {
            let g = from_virtual_gauss_code(&code).map_err(|e| input_error(format!("gauss code: {e}")))?;
            let o = match opts.orient.as_deref() {
                Some(spec) => parse_orientation(spec, g.diagram.components().len())?,
                None => g.orientation,
            };
            if sld {
                text.push_str(&to_sld(&g.diagram, Some(&o)));
                text.push('\n');
            }
            report(&g.diagram, &o, opts.json, &mut text)
        }
        Command::Certify(args) => {
            let (d, o) = load(&args.path, args.opts.orient.as_deref())?;
            let r = analyze(&d, Some(&o));
            if args.opts.json {
                let v = serde_json::json!({
                    "alternating_by_definiteness": r.alternating_by_definiteness,
                    "minimal_genus_certified": r.minimal_genus_certified,
                    "consistent": r.consistent,
                    "failed_identities": r.failed_identities(),
                });
                text.push_str(&serde_json::to_string_pretty(&v).expect("json"));
                text.push('\n');
            } else {
                write_verdicts(&r, "", &mut text);
            }
            identity_exit(&r)
        }
        Command::Random { crossings, count, seed, connected, colorable, alternating, out: dir } => {
            let spec = RandomDiagramSpec { crossings, seed, count, connected, colorable, alternating };
            random(spec, dir.as_deref(), &mut text)?
        }
        Command::Suite { max_crossings, count, seed, json } => {
            let r = run_suite(SuiteConfig { max_crossings, count, seed }).map_err(|e| input_error(e.to_string()))?;
            if json {
                text.push_str(&serde_json::to_string_pretty(&r).expect("json"));
                text.push('\n');
            } else {
                write_suite(&r, &mut text);
            }
            if r.passed {
                EXIT_OK
            } else {
                EXIT_IDENTITY
            }
        }
    };
    out.write_all(text.as_bytes()).map_err(|e| input_error(format!("writing output: {e}")))?;
    Ok(code)
}

fn load(path: &Path, orient: Option<&str>) -> Result<(SurfaceDiagram, LinkOrientation), Failure> {
    let source = std::fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    let parsed = parse_sld(&source).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    let o = match orient {
        Some(spec) => parse_orientation(spec, parsed.diagram.components().len())?,
        None => parsed.orientation(),
    };
    Ok((parsed.diagram, o))
}

fn parse_orientation(spec: &str, components: usize) -> Result<LinkOrientation, Failure> {
    let reversed = spec
        .chars()
        .map(|ch| match ch {
            '+' => Ok(false),
            '-' => Ok(true),
            other => Err(input_error(format!("--orient: unexpected `{other}`, use '+' and '-'"))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    if reversed.len() != components {
        return Err(input_error(format!(
            "--orient has {} entries but the diagram has {components} components",
            reversed.len()
        )));
    }
    Ok(LinkOrientation::from_reversed(reversed))
}

fn identity_exit(r: &AnalysisReport) -> u8 {
    if r.failed_identities().is_empty() {
        EXIT_OK
    } else {
        EXIT_IDENTITY
    }
}

fn report(d: &SurfaceDiagram, o: &LinkOrientation, json: bool, text: &mut String) -> u8 {
    let r = analyze(d, Some(o));
    if json {
        text.push_str(&r.to_json());
        text.push('\n');
    } else {
        write_report(&r, "", text);
    }
    identity_exit(&r)
}

fn random(spec: RandomDiagramSpec, dir: Option<&Path>, text: &mut String) -> Result<u8, Failure> {
    if let Some(dir) = dir {
        std::fs::create_dir_all(dir).map_err(|e| input_error(format!("{}: {e}", dir.display())))?;
    }
    for (i, d) in random_diagrams(spec).enumerate() {
        let d = d.map_err(|e| input_error(e.to_string()))?;
        let sld = to_sld(&d, None);
        match dir {
            Some(dir) => {
                let path = dir.join(format!("c{}-s{}-{i:04}.sld", spec.crossings, spec.seed));
                std::fs::write(&path, &sld).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
                let _ = writeln!(text, "{}", path.display());
            }
            None => {
                if i > 0 {
                    text.push('\n');
                }
                let _ = writeln!(text, "# diagram {i}");
                text.push_str(&sld);
            }
        }
    }
    Ok(EXIT_OK)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn verdict(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "yes",
        Some(false) => "no",
        None => "n/a",
    }
}

fn signs(v: &[i64]) -> String {
    v.iter().map(|&s| if s > 0 { '+' } else { '-' }).collect()
}

fn matrix(rows: &[Vec<i64>]) -> String {
    let rows: Vec<String> =
        rows.iter().map(|r| format!("[{}]", r.iter().map(i64::to_string).collect::<Vec<_>>().join(", "))).collect();
    format!("[{}]", rows.join(", "))
}

fn write_form(name: &str, f: &FormReport, pad: &str, text: &mut String) {
    let n = f.gl.form.size();
    let _ = writeln!(
        text,
        "{pad}{name:<18}{n}x{n} {}  signature {}  det {}  {}",
        matrix(&f.gl.form.rows()),
        f.result.signature,
        f.result.determinant,
        serde_json::to_value(f.result.verdict).expect("json").as_str().unwrap_or_default(),
    );
}

fn write_verdicts(r: &AnalysisReport, pad: &str, text: &mut String) {
    let _ = writeln!(text, "{pad}alternating by definiteness  {}", verdict(r.alternating_by_definiteness));
    let _ = writeln!(text, "{pad}minimal genus certified      {}", verdict(r.minimal_genus_certified));
    let failed = r.failed_identities();
    let _ = if failed.is_empty() {
        writeln!(text, "{pad}identities                   all hold")
    } else {
        writeln!(text, "{pad}identities                   violated: {}", failed.join(", "))
    };
}

/// Human-readable report. Split diagrams list their pieces after the shared
/// fields.
pub fn write_report(r: &AnalysisReport, pad: &str, text: &mut String) {
    let dirs: String = r.orientation.iter().map(|d| if *d == Direction::Canonical { '+' } else { '-' }).collect();
    let mut line = |k: &str, v: String| {
        let _ = writeln!(text, "{pad}{k:<18}{v}");
    };
    line("crossings", r.crossings.to_string());
    line("genus", r.genus.to_string());
    line("faces", r.faces.to_string());
    line("components", format!("{} ({dirs})", r.components));
    line("split", yes_no(r.split).into());
    line(
        "crossing signs",
        format!("{}  (c+ {}, c- {})", signs(&r.crossing_signs), r.positive_crossings, r.negative_crossings),
    );
    line("alternating", yes_no(r.alternating_scan).into());
    line("colorable", format!("{} (parity), {} (GF(2))", yes_no(r.colorable), yes_no(r.colorable_gf2)));
    if let (Some(w), Some(b)) = (r.white_faces, r.black_faces) {
        line("faces by color", format!("white {w}, black {b}"));
    }
    if let (Some(a), Some(b)) = (r.type_a, r.type_b) {
        line("crossing types", format!("a {a}, b {b}"));
    }
    let linking: Vec<String> = (0..r.components)
        .map(|i| {
            let row: Vec<String> = (0..r.components)
                .map(|j| r.linking.get(i, j).map_or_else(|| ".".to_string(), |v| v.to_string()))
                .collect();
            format!("[{}]", row.join(", "))
        })
        .collect();
    line("linking", format!("[{}]  total {}", linking.join(", "), r.total_linking));
    if let Some(f) = &r.form_black {
        write_form("black form", f, pad, text);
    }
    if let Some(f) = &r.form_white {
        write_form("white form", f, pad, text);
    }
    let mut line = |k: &str, v: String| {
        let _ = writeln!(text, "{pad}{k:<18}{v}");
    };
    if let (Some(w), Some(b)) = (r.mu_white, r.mu_black) {
        line("mu", format!("white {w}, black {b}"));
    }
    if let (Some(w), Some(b)) = (r.euler_white, r.euler_black) {
        line(
            "euler numbers",
            format!("white {} (rel {}), black {} (rel {})", w.absolute, w.relative, b.absolute, b.relative),
        );
    }
    if let (Some(w), Some(b)) = (r.signature_white, r.signature_black) {
        line("signatures", format!("white {w}, black {b}"));
    }
    write_verdicts(r, pad, text);
    for (i, piece) in r.pieces.iter().enumerate() {
        let _ = writeln!(text, "{pad}piece {i}:");
        write_report(piece, &format!("{pad}  "), text);
    }
}

fn write_suite(r: &SuiteReport, text: &mut String) {
    let _ = writeln!(text, "seed {}, crossings 1..={}, count {}", r.seed, r.max_crossings, r.count);
    let _ = writeln!(
        text,
        "identities        {} checks on {} diagrams ({} alternating), {} failures",
        r.identity_checks, r.diagrams, r.alternating, r.identity_failures
    );
    let _ = writeln!(text, "biconditional     {} discrepancies", r.biconditional_discrepancies);
    let _ = writeln!(
        text,
        "signature gap     {} alternating diagrams, {} failures",
        r.alternating_population, r.signature_gap_failures
    );
    let _ = writeln!(
        text,
        "colorability      {} diagrams, {} disagreements",
        r.colorability_population, r.colorability_disagreements
    );
    for f in &r.failures {
        let _ = writeln!(text, "failed {} on\n{}", f.check, f.diagram);
    }
    let _ = writeln!(text, "{}", if r.passed { "PASS" } else { "FAIL" });
}
