//! `zps` — analyze linear codes over `Z_{p^s}` under the extended Lee
//! weight: Gray images, distances and Singleton-style classification,
//! duals, Gray-image kernels, and deterministic searches.
//!
//! Exit codes: 0 = success (analyses past a limit are reported as skipped),
//! 1 = usage, parse, or I/O error, 2 = internal invariant violation.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use zps_core::code::{CodeType, LinearCode};
use zps_core::dual;
use zps_core::error::Error;
use zps_core::gray;
use zps_core::kernel;
use zps_core::lee;
use zps_core::report::{analyze, AnalysisLimits, AnalysisReport};
use zps_core::ring::{Residue, RingParams};
use zps_core::search::{run_search, SearchMode, SearchSpec, Target};

const DEFAULT_MAX_ENUM: u64 = 1 << 20;
const DEFAULT_MAX_KERNEL: u64 = 1 << 12;

#[derive(Parser)]
#[command(
    name = "zps",
    version,
    about = "Linear codes over Z_{p^s} under the extended Lee weight",
    arg_required_else_help = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis of the code generated by a matrix file.
    Analyze {
        /// Generator matrix file (see `zps help analyze` for the format).
        file: PathBuf,
        /// Emit the report as JSON instead of text.
        #[arg(long)]
        json: bool,
        /// Skip distance work on codes with more than this many words.
        #[arg(long, default_value_t = DEFAULT_MAX_ENUM)]
        max_enum: u64,
        /// Skip kernel/image work on codes with more than this many words.
        #[arg(long, default_value_t = DEFAULT_MAX_KERNEL)]
        max_kernel: u64,
        /// Write output here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print Gray images, one line per residue (whole ring by default).
    Gray {
        /// Prime base of the ring.
        #[arg(long)]
        p: u64,
        /// Exponent: the ring is Z_{p^s}.
        #[arg(long)]
        s: u32,
        /// Residues to map; out-of-range values are reduced.
        values: Vec<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print extended Lee weights of residues or comma-separated vectors.
    Weight {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        s: u32,
        /// Residues like `5`, or vectors like `1,2,0`.
        #[arg(required = true)]
        values: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dual code of a matrix file, printed as a matrix file.
    Dual {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Kernel of the Gray image of the code in a matrix file.
    Kernel {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        /// Refuse kernel work on codes with more than this many words.
        #[arg(long, default_value_t = DEFAULT_MAX_KERNEL)]
        max_kernel: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search codes of a given ring and length for chosen properties.
    Search(SearchArgs),
}

#[derive(Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["exhaustive", "budget"])))]
struct SearchArgs {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    s: u32,
    /// Code length.
    #[arg(long)]
    n: usize,
    /// Restrict to codes of exactly this type, e.g. `1,0`.
    #[arg(long, value_name = "D0,D1,...")]
    r#type: Option<String>,
    /// Enumerate every standard form (capped).
    #[arg(long)]
    exhaustive: bool,
    /// Number of seeded random candidates to draw.
    #[arg(long)]
    budget: Option<u64>,
    /// Stream seed for random candidates.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Keep only codes matching at least one target (repeatable).
    #[arg(long = "target", value_enum)]
    targets: Vec<CliTarget>,
    /// Reject random draws larger than this many words.
    #[arg(long, default_value_t = DEFAULT_MAX_KERNEL)]
    max_size: u64,
    #[arg(long, default_value_t = DEFAULT_MAX_ENUM)]
    max_enum: u64,
    #[arg(long, default_value_t = DEFAULT_MAX_KERNEL)]
    max_kernel: u64,
    /// Write NDJSON records here (summary then goes to stdout).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CliTarget {
    Mlds,
    Mldr,
    SelfDual,
    SelfOrthogonalImage,
    LinearImage,
}

impl From<CliTarget> for Target {
    fn from(t: CliTarget) -> Target {
        match t {
            CliTarget::Mlds => Target::Mlds,
            CliTarget::Mldr => Target::Mldr,
            CliTarget::SelfDual => Target::SelfDual,
            CliTarget::SelfOrthogonalImage => Target::SelfOrthogonalImage,
            CliTarget::LinearImage => Target::LinearImage,
        }
    }
}

/// A failed run: message plus whether it was an internal invariant
/// violation (exit 2) rather than a usage/parse/IO problem (exit 1).
#[derive(Debug)]
struct Failure {
    message: String,
    internal: bool,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            message: message.into(),
            internal: false,
        }
    }

    fn code(&self) -> u8 {
        if self.internal {
            2
        } else {
            1
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure {
            internal: e.is_internal(),
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code())
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Analyze {
            file,
            json,
            max_enum,
            max_kernel,
            out,
        } => {
            let code = load_code(&file)?;
            let limits = AnalysisLimits {
                max_enum,
                max_kernel,
            };
            let report = analyze(&code, &limits)?;
            let text = if json {
                let mut t = serde_json::to_string_pretty(&report)
                    .map_err(|e| Failure::usage(e.to_string()))?;
                t.push('\n');
                t
            } else {
                render_report(&report)
            };
            emit(&out, &text)
        }
        Command::Gray { p, s, values, out } => {
            let ring = RingParams::new(p, s)?;
            let values: Vec<u64> = if values.is_empty() {
                (0..ring.modulus()).collect()
            } else {
                values
            };
            let mut text = String::new();
            for &x in &values {
                text.push_str(&gray_line(ring.residue(x)));
                text.push('\n');
            }
            emit(&out, &text)
        }
        Command::Weight { p, s, values, out } => {
            let ring = RingParams::new(p, s)?;
            let mut text = String::new();
            for token in &values {
                text.push_str(&weight_line(ring, token)?);
                text.push('\n');
            }
            emit(&out, &text)
        }
        Command::Dual { file, json, out } => {
            let code = load_code(&file)?;
            let dual = dual::dual_code(&code)?;
            let self_orth = dual::is_self_orthogonal(&code);
            let self_dual = dual::is_self_dual(&code)?;
            let text = if json {
                let value = serde_json::json!({
                    "p": code.ring().p(),
                    "s": code.ring().s(),
                    "n": code.length(),
                    "rows": generator_rows(&dual),
                    "type_deltas": dual.code_type().deltas(),
                    "is_self_orthogonal": self_orth,
                    "is_self_dual": self_dual,
                });
                format!("{value}\n")
            } else {
                render_dual(&code, &dual, self_orth, self_dual)
            };
            emit(&out, &text)
        }
        Command::Kernel {
            file,
            json,
            max_kernel,
            out,
        } => {
            let code = load_code(&file)?;
            let result = kernel::kernel_of_gray_image(&code, max_kernel)?;
            let linear = result.kernel_images().len() as u128
                == code.size().unwrap_or(u128::MAX);
            let text = if json {
                let value = serde_json::json!({
                    "dim_m": result.dim_m(),
                    "kernel_size": result.kernel_images().len(),
                    "allowed_dims": result.allowed_dims(),
                    "image_linear": linear,
                    "lower_rows": generator_rows(result.lower_code()),
                    "upper_rows": generator_rows(result.upper_code()),
                });
                format!("{value}\n")
            } else {
                render_kernel(&result, linear)
            };
            emit(&out, &text)
        }
        Command::Search(args) => cmd_search(args),
    }
}

fn cmd_search(args: SearchArgs) -> Result<(), Failure> {
    let ring = RingParams::new(args.p, args.s)?;
    let type_constraint = match &args.r#type {
        Some(text) => Some(CodeType::new(parse_deltas(text)?)),
        None => None,
    };
    let mode = if args.exhaustive {
        SearchMode::Exhaustive
    } else {
        SearchMode::Random {
            budget: args.budget.ok_or(Error::InvalidBudget)?,
        }
    };
    let targets: std::collections::BTreeSet<Target> =
        args.targets.iter().map(|&t| Target::from(t)).collect();
    let spec = SearchSpec {
        ring,
        n: args.n,
        type_constraint,
        mode,
        seed: args.seed,
        targets: targets.clone(),
        max_size: args.max_size,
    };
    let limits = AnalysisLimits {
        max_enum: args.max_enum,
        max_kernel: args.max_kernel,
    };
    let records = run_search(&spec, &limits)?;

    let mut ndjson = String::new();
    for record in &records {
        ndjson.push_str(
            &serde_json::to_string(record).map_err(|e| Failure::usage(e.to_string()))?,
        );
        ndjson.push('\n');
    }

    let mut summary = format!(
        "records kept: {} (Z_{}, length {}, {})\n",
        records.len(),
        ring.modulus(),
        args.n,
        match spec.mode {
            SearchMode::Exhaustive => "exhaustive".to_string(),
            SearchMode::Random { budget } => format!("budget {budget}, seed {}", args.seed),
        }
    );
    for &target in &targets {
        let hits = records
            .iter()
            .filter(|r| r.verdicts.get(&target).copied().unwrap_or(false))
            .count();
        let name = serde_json::to_string(&target).map_err(|e| Failure::usage(e.to_string()))?;
        summary.push_str(&format!("  {}: {hits}\n", name.trim_matches('"')));
    }

    match &args.out {
        Some(path) => {
            fs::write(path, ndjson)
                .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
            print!("{summary}");
        }
        None => {
            print!("{ndjson}");
            eprint!("{summary}");
        }
    }
    Ok(())
}

/// Parses a generator matrix file: a `p s n k` header line, then `k` rows
/// of `n` integers; `#` starts a comment, blank lines are skipped. Returns
/// the code plus warnings for entries that had to be reduced.
fn parse_matrix(text: &str) -> Result<(LinearCode, Vec<String>), Failure> {
    let mut lines = text.lines().map(|l| match l.find('#') {
        Some(i) => &l[..i],
        None => l,
    });
    let header = lines
        .by_ref()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .ok_or_else(|| Failure::usage("empty matrix file"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 4 {
        return Err(Failure::usage(format!(
            "header must be `p s n k`, got \"{header}\""
        )));
    }
    let parse_int = |what: &str, tok: &str| -> Result<u64, Failure> {
        tok.parse::<u64>()
            .map_err(|_| Failure::usage(format!("{what} must be a non-negative integer, got \"{tok}\"")))
    };
    let p = parse_int("p", fields[0])?;
    let s = parse_int("s", fields[1])? as u32;
    let n = parse_int("n", fields[2])? as usize;
    let k = parse_int("k", fields[3])? as usize;
    let ring = RingParams::new(p, s)?;
    if n == 0 {
        return Err(Error::ZeroLength.into());
    }

    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(k);
    let mut warnings = Vec::new();
    for line in lines {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if rows.len() == k {
            return Err(Failure::usage(format!(
                "expected {k} rows, found more at \"{line}\""
            )));
        }
        let mut row = Vec::with_capacity(n);
        for tok in line.split_whitespace() {
            let v = parse_int("matrix entry", tok)?;
            if v >= ring.modulus() {
                warnings.push(format!(
                    "entry {v} in row {} reduced to {} (mod {})",
                    rows.len() + 1,
                    v % ring.modulus(),
                    ring.modulus()
                ));
            }
            row.push(v);
        }
        if row.len() != n {
            return Err(Failure::usage(format!(
                "row {} has {} entries, expected {n}",
                rows.len() + 1,
                row.len()
            )));
        }
        rows.push(row);
    }
    if rows.len() != k {
        return Err(Failure::usage(format!(
            "expected {k} rows, found {}",
            rows.len()
        )));
    }

    let code = if rows.is_empty() {
        LinearCode::zero_code(ring, n)?
    } else {
        LinearCode::from_integer_rows(ring, n, &rows)?
    };
    Ok((code, warnings))
}

fn load_code(path: &Path) -> Result<LinearCode, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    let (code, warnings) = parse_matrix(&text)?;
    for w in warnings {
        eprintln!("warning: {w}");
    }
    Ok(code)
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn gray_line(a: Residue) -> String {
    let img = gray::gray_scalar(a);
    let digits: Vec<String> = img.entries().iter().map(|e| e.to_string()).collect();
    if a.ring().p() <= 10 {
        format!("{} -> ({})", a.value(), digits.join(""))
    } else {
        format!("{} -> ({})", a.value(), digits.join(", "))
    }
}

fn weight_line(ring: RingParams, token: &str) -> Result<String, Failure> {
    if token.contains(',') {
        let mut values = Vec::new();
        for part in token.split(',') {
            values.push(part.trim().parse::<u64>().map_err(|_| {
                Failure::usage(format!("vector entry must be an integer, got \"{part}\""))
            })?);
        }
        let v = ring.vector(&values);
        let printed: Vec<String> = v.entries().iter().map(|e| e.to_string()).collect();
        Ok(format!(
            "w_L(({})) = {}",
            printed.join(", "),
            lee::lee_weight_vec(&v)
        ))
    } else {
        let x = token
            .parse::<u64>()
            .map_err(|_| Failure::usage(format!("residue must be an integer, got \"{token}\"")))?;
        let a = ring.residue(x);
        Ok(format!("w_L({}) = {}", a.value(), lee::lee_weight(a)))
    }
}

fn generator_rows(code: &LinearCode) -> Vec<Vec<u64>> {
    code.generators()
        .iter()
        .map(|g| g.entries().to_vec())
        .collect()
}

fn row_text(entries: &[u64]) -> String {
    entries
        .iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn deltas_text(deltas: &[usize]) -> String {
    format!(
        "({})",
        deltas
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    )
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn parse_deltas(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .map(|part| {
            part.trim().parse::<usize>().map_err(|_| {
                Failure::usage(format!("type entry must be an integer, got \"{part}\""))
            })
        })
        .collect()
}

fn render_report(r: &AnalysisReport) -> String {
    let mut t = String::new();
    t.push_str(&format!(
        "ring Z_{} (p = {}, s = {}), length {}\n",
        r.p.pow(r.s),
        r.p,
        r.s,
        r.n
    ));
    t.push_str(&format!(
        "type {}, rank {}, free rank {}\n",
        deltas_text(&r.type_deltas),
        r.rank,
        r.free_rank
    ));
    match r.size {
        Some(v) => t.push_str(&format!("|C| = {v} = {}^{}\n", r.p, r.size_exponent)),
        None => t.push_str(&format!("|C| = {}^{} (too large for u64)\n", r.p, r.size_exponent)),
    }
    t.push_str("generators (standard form):\n");
    if r.generators.is_empty() {
        t.push_str("  (zero code)\n");
    }
    for row in &r.generators {
        t.push_str(&format!("  {}\n", row_text(row)));
    }
    if let Some(b) = &r.bounds {
        t.push_str(&format!(
            "min Lee distance {} (witness {}), min Hamming distance {}\n",
            b.d_lee,
            deltas_text(&b.witness.iter().map(|&x| x as usize).collect::<Vec<_>>()),
            b.d_hamming
        ));
        t.push_str(&format!(
            "Lee-Singleton floor((d-1)/p^(s-1)) = {}: MLDS {} (slack {}), MLDR {} (slack {})\n",
            b.lhs,
            yes_no(b.is_mlds),
            b.mlds_slack,
            yes_no(b.is_mldr),
            b.mldr_slack
        ));
    }
    t.push_str(&format!(
        "dual: type {}, rank + dual free rank = {} + {} = {}\n",
        deltas_text(&r.duality.dual_type_deltas),
        r.duality.rank_nullity.rank,
        r.duality.rank_nullity.dual_free_rank,
        r.duality.rank_nullity.n
    ));
    t.push_str("dual generators:\n");
    if r.duality.dual_generators.is_empty() {
        t.push_str("  (zero code)\n");
    }
    for row in &r.duality.dual_generators {
        t.push_str(&format!("  {}\n", row_text(row)));
    }
    t.push_str(&format!(
        "self-orthogonal {}, self-dual {}\n",
        yes_no(r.duality.is_self_orthogonal),
        yes_no(r.duality.is_self_dual)
    ));
    if let Some(k) = &r.kernel {
        let dims = match &k.allowed_dims {
            Some(d) => format!(
                " (allowed {})",
                d.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
            None => String::new(),
        };
        t.push_str(&format!(
            "kernel: dimension {} over F_{}, size {}{}\n",
            k.dim_m, r.p, k.kernel_size, dims
        ));
    }
    if let Some(i) = &r.image {
        t.push_str(&format!(
            "Gray image: length {}, linear {}, self-orthogonal {}\n",
            i.gray_length,
            yes_no(i.linear),
            yes_no(i.self_orthogonal)
        ));
    }
    for sk in &r.skipped {
        t.push_str(&format!("skipped: {} ({}): {}\n", sk.analysis, sk.kind, sk.detail));
    }
    t
}

fn render_dual(code: &LinearCode, dual: &LinearCode, self_orth: bool, self_dual: bool) -> String {
    let ring = code.ring();
    let mut t = format!(
        "# dual code: type {}, self-orthogonal {}, self-dual {}\n",
        deltas_text(dual.code_type().deltas()),
        yes_no(self_orth),
        yes_no(self_dual)
    );
    t.push_str(&format!(
        "{} {} {} {}\n",
        ring.p(),
        ring.s(),
        dual.length(),
        dual.rank()
    ));
    for g in dual.generators() {
        t.push_str(&format!("{}\n", row_text(g.entries())));
    }
    t
}

fn render_kernel(result: &kernel::KernelResult, linear: bool) -> String {
    let mut t = format!(
        "kernel dimension m = {}, size {}\n",
        result.dim_m(),
        result.kernel_images().len()
    );
    match result.allowed_dims() {
        Some(dims) => t.push_str(&format!(
            "allowed dimensions: {}\n",
            dims.iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        )),
        None => t.push_str("allowed dimensions: (not constrained for s = 1)\n"),
    }
    t.push_str(&format!("image linear: {}\n", yes_no(linear)));
    t.push_str("lower code generators:\n");
    if result.lower_code().rank() == 0 {
        t.push_str("  (zero code)\n");
    }
    for g in result.lower_code().generators() {
        t.push_str(&format!("  {}\n", row_text(g.entries())));
    }
    t.push_str("upper code generators:\n");
    if result.upper_code().rank() == 0 {
        t.push_str("  (zero code)\n");
    }
    for g in result.upper_code().generators() {
        t.push_str(&format!("  {}\n", row_text(g.entries())));
    }
    t
}
