//! The `nakayama` command line.
//!
//! Exit codes: 0 success or a true verdict, 1 a false verdict, 2 invalid
//! input, 3 search budget exceeded.

use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Algebra, ModCoord};
use crate::ar_quiver;
use crate::cluster_tilting::{
    build_nct, check_conditions_a, check_conditions_b_with, classify, d_rep_finite,
};
use crate::error::Error;
use crate::modset::ModSet;
use crate::oracle::{resolution, KupischAlgebra, NctSearcher, SearchOptions, DEFAULT_BUDGET};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FALSE: u8 = 1;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "nakayama", version, about = "Homological combinatorics of acyclic Nakayama algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Whether Lambda(m,l) admits an n-cluster tilting subcategory.
    Classify(ClassifyArgs),
    /// Build, verify or search for n-cluster tilting subcategories.
    Ct(CtArgs),
    /// Sweep the classification over a parameter range as TSV.
    Table(TableArgs),
    /// Export the Auslander-Reiten quiver.
    Quiver(QuiverArgs),
    /// Global dimension.
    Gldim(AlgebraArgs),
    /// Projective dimension of M(i,j).
    Pd(PdArgs),
}

#[derive(Debug, Args)]
pub struct AlgebraArgs {
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub l: Option<usize>,
    /// Comma separated Kupisch series; overrides --m/--l.
    #[arg(long, value_delimiter = ',')]
    pub kupisch: Option<Vec<usize>>,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub algebra: AlgebraArgs,
    #[arg(long, required_unless_present = "d_rep_finite")]
    pub n: Option<usize>,
    /// Report whether the algebra is d-representation-finite.
    #[arg(long)]
    pub d_rep_finite: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CtAction {
    Build,
    Verify,
    Search,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DataFormat {
    Json,
    Tsv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Dot,
    Json,
}

#[derive(Debug, Args)]
pub struct CtArgs {
    pub action: CtAction,
    #[command(flatten)]
    pub algebra: AlgebraArgs,
    #[arg(long)]
    pub n: usize,
    /// Machine readable output; plain text when omitted.
    #[arg(long, value_enum)]
    pub format: Option<DataFormat>,
    /// Maximum number of complete candidate subsets for `search`.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, default_value_t = 12)]
    pub max_m: usize,
    #[arg(long, default_value_t = 11)]
    pub max_l: usize,
    #[arg(long, default_value_t = 6)]
    pub max_n: usize,
    /// Confirm rows with m up to this bound by exhaustive search.
    #[arg(long, default_value_t = 0)]
    pub verify_up_to_m: usize,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
}

#[derive(Debug, Args)]
pub struct QuiverArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub l: usize,
    /// Highlight the canonical n-cluster tilting candidate.
    #[arg(long)]
    pub highlight_n: Option<usize>,
    #[arg(long, value_enum, default_value = "dot")]
    pub format: GraphFormat,
}

#[derive(Debug, Args)]
pub struct PdArgs {
    #[command(flatten)]
    pub algebra: AlgebraArgs,
    #[arg(long)]
    pub i: usize,
    #[arg(long)]
    pub j: usize,
}

/// A failure carrying its exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded { .. } => EXIT_BUDGET,
            _ => EXIT_INVALID,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: EXIT_INVALID,
            message: e.to_string(),
        }
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INVALID,
        message: message.into(),
    }
}

type Outcome = Result<u8, Failure>;

enum Target {
    Homogeneous(Algebra),
    General(KupischAlgebra),
}

impl Target {
    fn kupisch(&self) -> KupischAlgebra {
        match self {
            Target::Homogeneous(a) => KupischAlgebra::from(a),
            Target::General(k) => k.clone(),
        }
    }

    fn homogeneous(&self, what: &str) -> Result<Algebra, Failure> {
        match self {
            Target::Homogeneous(a) => Ok(*a),
            Target::General(k) => Err(invalid(format!(
                "{what} needs a homogeneous algebra with 2 <= l <= m - 1, got Kupisch series {k}"
            ))),
        }
    }
}

impl AlgebraArgs {
    fn resolve(&self) -> Result<Target, Failure> {
        if let Some(series) = &self.kupisch {
            let k = KupischAlgebra::new(series.clone())?;
            let homogeneous = k
                .homogeneous_degree()
                .and_then(|l| Algebra::new(k.m(), l).ok());
            return Ok(match homogeneous {
                Some(a) => Target::Homogeneous(a),
                None => Target::General(k),
            });
        }
        match (self.m, self.l) {
            (Some(m), Some(l)) => Ok(Target::Homogeneous(Algebra::new(m, l)?)),
            _ => Err(invalid("give --m and --l, or --kupisch")),
        }
    }
}

/// Parses arguments and runs; the returned value is the exit status.
pub fn main() -> u8 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(&cli, &mut out) {
        Ok(code) => code,
        Err(f) => {
            let _ = out.flush();
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Outcome {
    match &cli.command {
        Command::Classify(a) => cmd_classify(a, out),
        Command::Ct(a) => cmd_ct(a, out),
        Command::Table(a) => cmd_table(a, out),
        Command::Quiver(a) => cmd_quiver(a, out),
        Command::Gldim(a) => cmd_gldim(a, out),
        Command::Pd(a) => cmd_pd(a, out),
    }
}

fn verdict(ok: bool) -> u8 {
    if ok {
        EXIT_OK
    } else {
        EXIT_FALSE
    }
}

fn cmd_classify(args: &ClassifyArgs, out: &mut dyn Write) -> Outcome {
    let alg = args.algebra.resolve()?.homogeneous("classify")?;
    if args.d_rep_finite {
        return match d_rep_finite(alg.m(), alg.l())? {
            Some(d) => {
                writeln!(out, "d-representation-finite, d={d}")?;
                Ok(EXIT_OK)
            }
            None => {
                writeln!(out, "no")?;
                Ok(EXIT_FALSE)
            }
        };
    }
    let n = args.n.ok_or_else(|| invalid("--n is required"))?;
    let c = classify(alg.m(), alg.l(), n)?;
    writeln!(out, "{c}")?;
    Ok(verdict(c.admits()))
}

fn write_set(set: &ModSet, format: Option<DataFormat>, out: &mut dyn Write) -> io::Result<()> {
    match format {
        None => writeln!(out, "{set}"),
        Some(DataFormat::Json) => writeln!(out, "{}", serde_json::to_string(set).unwrap()),
        Some(DataFormat::Tsv) => {
            writeln!(out, "i\tj")?;
            for x in set {
                let (i, j) = x.coords().unwrap();
                writeln!(out, "{i}\t{j}")?;
            }
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    algebra: Algebra,
    n: usize,
    candidate: &'a ModSet,
    conditions: &'a crate::cluster_tilting::ConditionReport,
    is_nct: bool,
}

fn cmd_ct(args: &CtArgs, out: &mut dyn Write) -> Outcome {
    let target = args.algebra.resolve()?;
    let n = args.n;
    match args.action {
        CtAction::Build => {
            let alg = target.homogeneous("ct build")?;
            if n < 2 {
                return Err(Error::InvalidOrder { n, min: 2 }.into());
            }
            write_set(&build_nct(&alg, n)?, args.format, out)?;
            Ok(EXIT_OK)
        }
        CtAction::Verify => {
            let alg = target.homogeneous("ct verify")?;
            if n < 2 {
                return Err(Error::InvalidOrder { n, min: 2 }.into());
            }
            let c = build_nct(&alg, n)?;
            let searcher = NctSearcher::new(&KupischAlgebra::from(alg));
            let report = check_conditions_a(&alg, n, &c)?
                .merge(check_conditions_b_with(&alg, n, &c, searcher.table())?);
            let is_nct = searcher.is_nct(&c, n)?;
            match args.format {
                None => {
                    writeln!(out, "candidate {c}")?;
                    write!(out, "{report}")?;
                    writeln!(out, "is_nct {is_nct}")?;
                }
                Some(DataFormat::Json) => {
                    let doc = VerifyJson {
                        algebra: alg,
                        n,
                        candidate: &c,
                        conditions: &report,
                        is_nct,
                    };
                    writeln!(out, "{}", serde_json::to_string(&doc).unwrap())?;
                }
                Some(DataFormat::Tsv) => {
                    writeln!(out, "condition\tholds\twitnesses")?;
                    for r in &report.results {
                        let ws: Vec<String> = r.witnesses.iter().map(|w| w.module.to_string()).collect();
                        writeln!(out, "{}\t{}\t{}", r.condition, r.holds, ws.join(","))?;
                    }
                    writeln!(out, "is_nct\t{is_nct}\t")?;
                }
            }
            Ok(verdict(is_nct))
        }
        CtAction::Search => {
            let alg = target.kupisch();
            let opts = SearchOptions {
                budget: args.budget,
                ..SearchOptions::default()
            };
            let found = NctSearcher::new(&alg).search(n, opts)?.found;
            if found.is_empty() {
                match args.format {
                    Some(DataFormat::Json) => writeln!(out, "[]")?,
                    _ => writeln!(out, "none found")?,
                }
                return Ok(EXIT_FALSE);
            }
            match args.format {
                Some(DataFormat::Json) => writeln!(out, "{}", serde_json::to_string(&found).unwrap())?,
                Some(DataFormat::Tsv) => {
                    writeln!(out, "result\ti\tj")?;
                    for (k, set) in found.iter().enumerate() {
                        for x in set {
                            let (i, j) = x.coords().unwrap();
                            writeln!(out, "{}\t{i}\t{j}", k + 1)?;
                        }
                    }
                }
                None => {
                    for set in &found {
                        writeln!(out, "{set}")?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
    }
}

/// One row of the classification sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepRow {
    pub m: usize,
    pub l: usize,
    pub n: usize,
    pub admits: bool,
    /// `None` when the row was not checked by search.
    pub verified: Option<bool>,
    pub ct_size: usize,
}

pub const SWEEP_HEADER: &str = "m\tl\tn\tadmits\tverified\tct_size";

impl SweepRow {
    pub fn to_tsv(&self) -> String {
        let verified = match self.verified {
            Some(v) => v.to_string(),
            None => "skipped".into(),
        };
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}",
            self.m, self.l, self.n, self.admits, verified, self.ct_size
        )
    }
}

/// Rows for `3 <= m <= max_m`, `2 <= l <= min(max_l, m - 1)`,
/// `2 <= n <= max_n`, in that nesting order.
pub fn sweep(max_m: usize, max_l: usize, max_n: usize, verify_up_to_m: usize, budget: u64) -> crate::Result<Vec<SweepRow>> {
    let algebras: Vec<Algebra> = (3..=max_m)
        .flat_map(|m| (2..=max_l.min(m - 1)).map(move |l| (m, l)))
        .map(|(m, l)| Algebra::new(m, l))
        .collect::<crate::Result<_>>()?;
    let per_algebra: Vec<crate::Result<Vec<SweepRow>>> = algebras
        .par_iter()
        .map(|&alg| {
            let searcher = (alg.m() <= verify_up_to_m).then(|| NctSearcher::new(&KupischAlgebra::from(alg)));
            (2..=max_n)
                .map(|n| {
                    let admits = classify(alg.m(), alg.l(), n)?.admits();
                    let found = match &searcher {
                        Some(s) => Some(s.search(n, SearchOptions { budget, ..SearchOptions::default() })?.found),
                        None => None,
                    };
                    let ct_size = match &found {
                        Some(f) => f.first().map_or(0, ModSet::len),
                        None if admits => build_nct(&alg, n)?.len(),
                        None => 0,
                    };
                    Ok(SweepRow {
                        m: alg.m(),
                        l: alg.l(),
                        n,
                        admits,
                        verified: found.map(|f| !f.is_empty()),
                        ct_size,
                    })
                })
                .collect()
        })
        .collect();
    let mut rows = Vec::new();
    for r in per_algebra {
        rows.extend(r?);
    }
    Ok(rows)
}

fn cmd_table(args: &TableArgs, out: &mut dyn Write) -> Outcome {
    if args.max_m < 3 || args.max_l < 2 || args.max_n < 2 {
        return Err(invalid("need --max-m >= 3, --max-l >= 2 and --max-n >= 2"));
    }
    let rows = sweep(args.max_m, args.max_l, args.max_n, args.verify_up_to_m, args.budget)?;
    writeln!(out, "{SWEEP_HEADER}")?;
    for r in &rows {
        writeln!(out, "{}", r.to_tsv())?;
    }
    let consistent = rows.iter().all(|r| r.verified.is_none_or(|v| v == r.admits));
    Ok(verdict(consistent))
}

fn cmd_quiver(args: &QuiverArgs, out: &mut dyn Write) -> Outcome {
    let alg = Algebra::new(args.m, args.l)?;
    let mut g = ar_quiver::build(&alg);
    if let Some(n) = args.highlight_n {
        if n < 1 {
            return Err(Error::InvalidOrder { n, min: 1 }.into());
        }
        g = g.with_highlights(build_nct(&alg, n)?)?;
    }
    let text = match args.format {
        GraphFormat::Dot => ar_quiver::export_dot(&g),
        GraphFormat::Json => ar_quiver::export_json(&g),
    };
    out.write_all(text.as_bytes())?;
    Ok(EXIT_OK)
}

fn cmd_gldim(args: &AlgebraArgs, out: &mut dyn Write) -> Outcome {
    let d = match args.resolve()? {
        Target::Homogeneous(a) => a.global_dim(),
        Target::General(k) => resolution::global_dim(&k),
    };
    writeln!(out, "{d}")?;
    Ok(EXIT_OK)
}

fn cmd_pd(args: &PdArgs, out: &mut dyn Write) -> Outcome {
    let x = ModCoord::new(args.i, args.j);
    if x.is_zero() {
        return Err(invalid("i and j must be positive"));
    }
    let d = match args.algebra.resolve()? {
        Target::Homogeneous(a) => a.proj_dim(x)?,
        Target::General(k) => {
            if !k.contains(x) {
                return Err(Error::NotAModule(x).into());
            }
            resolution::proj_dim(&k, x)?
        }
    };
    writeln!(out, "{d}")?;
    Ok(EXIT_OK)
}
