//! Command-line surface.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or domain error,
//! 3 infeasible set. JSON is the default output; `--plain` prints text.

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{remark1, BoundReport};
use crate::continuant::{cf_value, continuant};
use crate::error::{Error, Result};
use crate::extremal::{self, ExtremalResult, MultisetSpec};
use crate::oracle::{brute_force, EnumerationRequest, Extremum};
use crate::reflect::{transitive_maximize, transitive_minimize, Trace};
use crate::sequence::Sequence;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "continuants", version, about = "Exact continuants and their extremal arrangements")]
pub struct Cli {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pub plain: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Continuant of the given elements, optionally with the continued fraction.
    Eval(EvalArgs),
    /// Maximum over arrangements of a multiset that start with its least value.
    MaxV(MultisetArgs),
    /// Maximum over all arrangements of a multiset.
    MaxW(MultisetArgs),
    /// Minimum over all arrangements of a multiset.
    MinW(MultisetArgs),
    /// Maximum over compositions of S.
    MaxUn {
        #[arg(long)]
        sum: u64,
    },
    /// Maximum over compositions of S into t parts.
    MaxUst {
        #[arg(long)]
        sum: u64,
        #[arg(long)]
        len: u64,
    },
    /// Minimum over compositions of S into t parts bounded by n.
    MinUstn {
        #[arg(long)]
        sum: u64,
        #[arg(long)]
        len: u64,
        #[arg(long)]
        bound: u64,
    },
    /// Minimum over compositions of S with parts bounded by n.
    MinUn {
        #[arg(long)]
        sum: u64,
        #[arg(long)]
        bound: u64,
    },
    /// Compare closed forms against exhaustive search on a grid.
    Verify(VerifyArgs),
    /// Lower bound for the bounded-part minimum, next to the exact value.
    Bound(BoundArgs),
    /// Monotone reflection path toward the maximum or minimum.
    Trace(TraceArgs),
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// Also print [a0; a1, ..., at] as an exact fraction.
    #[arg(long)]
    pub cf: bool,
    /// The leading term a0 of the continued fraction.
    #[arg(long, default_value_t = 0)]
    pub leading: u64,
    pub elems: Vec<u64>,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("input").required(true).args(["elements", "values"])))]
pub struct MultisetArgs {
    /// Elements of the multiset, e.g. 3,1,2,2.
    #[arg(long, value_delimiter = ',')]
    pub elements: Option<Vec<u64>>,
    /// Distinct values in increasing order.
    #[arg(long, value_delimiter = ',', requires = "mults")]
    pub values: Option<Vec<u64>>,
    /// Multiplicity of each value.
    #[arg(long, value_delimiter = ',', requires = "values")]
    pub mults: Option<Vec<usize>>,
}

impl MultisetArgs {
    fn spec(&self) -> Result<MultisetSpec> {
        match (&self.elements, &self.values, &self.mults) {
            (Some(e), _, _) => MultisetSpec::from_elements(e),
            (None, Some(v), Some(m)) => MultisetSpec::new(v.clone(), m.clone()),
            _ => Err(Error::Parse("give --elements or --values with --mults".into())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Theorem {
    Thm1,
    Thm2,
    Thm3,
    Thm4,
    Thm5,
    Thm6,
    Thm7,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub family: Theorem,
    /// Largest sum S (families 4 to 7).
    #[arg(long = "S-max")]
    pub s_max: Option<u64>,
    /// Largest part bound n (families 4, 6, 7).
    #[arg(long = "n-max")]
    pub n_max: Option<u64>,
    /// Largest multiset size t (families 1 to 3).
    #[arg(long = "t-max")]
    pub t_max: Option<u64>,
    /// Largest multiset value (families 1 to 3).
    #[arg(long = "h-max")]
    pub h_max: Option<u64>,
    /// Most distinct values in a multiset (families 1 to 3).
    #[arg(long = "f-max")]
    pub f_max: Option<usize>,
    /// Worker threads; defaults to all cores.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Shift every closed-form value by one (negative-path fixture).
    #[arg(long, hide = true)]
    pub corrupt_formula: bool,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    #[arg(long, required_unless_present = "remark1")]
    pub sum: Option<u64>,
    #[arg(long, required_unless_present = "remark1")]
    pub bound: Option<u64>,
    /// Decimal places.
    #[arg(long, default_value_t = 6)]
    pub digits: u32,
    /// Print the comparison of (3+√8)^(1/5) with √(2+10⁻⁶).
    #[arg(long)]
    pub remark1: bool,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("direction").required(true).args(["maximize", "minimize"])))]
pub struct TraceArgs {
    /// Starting sequence, e.g. 1,3,2.
    #[arg(long)]
    pub seq: Sequence,
    #[arg(long)]
    pub maximize: bool,
    #[arg(long)]
    pub minimize: bool,
}

/// One grid point of a verification run.
#[derive(Debug, Clone, Serialize)]
pub struct GridPoint {
    pub params: Vec<u64>,
    pub formula: String,
    pub oracle: String,
    #[serde(rename = "match")]
    pub matches: bool,
    pub runtime_ms: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationGrid {
    pub family: Theorem,
    pub points: Vec<GridPoint>,
    pub all_match: bool,
    pub first_mismatch: Option<GridPoint>,
}

/// Defaults used when a bound is not given on the command line.
#[derive(Debug, Clone, Copy)]
pub struct GridBounds {
    pub s_max: u64,
    pub n_max: u64,
    pub t_max: u64,
    pub h_max: u64,
    pub f_max: usize,
}

impl GridBounds {
    pub fn defaults(family: Theorem) -> Self {
        let (s_max, n_max) = match family {
            Theorem::Thm4 => (20, 6),
            Theorem::Thm5 => (18, 0),
            Theorem::Thm6 => (20, 5),
            Theorem::Thm7 => (24, 5),
            _ => (0, 0),
        };
        GridBounds { s_max, n_max, t_max: 9, h_max: 6, f_max: 4 }
    }
}

/// Every multiset with at most `f_max` distinct values from `1..=h_max` and
/// total size at most `t_max`.
pub fn multiset_grid(f_max: usize, h_max: u64, t_max: u64) -> Vec<MultisetSpec> {
    fn mults(f: usize, budget: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if acc.len() == f {
            out.push(acc.clone());
            return;
        }
        let left = f - acc.len() - 1;
        for p in 1..=budget.saturating_sub(left) {
            acc.push(p);
            mults(f, budget - p, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    let h = h_max as usize;
    for mask in 1u32..(1 << h) {
        let values: Vec<u64> = (0..h).filter(|b| mask >> b & 1 == 1).map(|b| b as u64 + 1).collect();
        if values.len() > f_max || values.len() > t_max as usize {
            continue;
        }
        let mut ms = Vec::new();
        mults(values.len(), t_max as usize, &mut Vec::new(), &mut ms);
        for m in ms {
            out.push(MultisetSpec::new(values.clone(), m).expect("valid by construction"));
        }
    }
    out.sort_by_key(|a| (a.len(), a.elements()));
    out
}

/// Grid points as parameter tuples; multisets are listed by their elements.
pub fn grid_points(family: Theorem, g: GridBounds) -> Vec<Vec<u64>> {
    let mut pts = Vec::new();
    match family {
        Theorem::Thm1 | Theorem::Thm2 | Theorem::Thm3 => {
            for ms in multiset_grid(g.f_max, g.h_max, g.t_max) {
                pts.push(ms.elements());
            }
        }
        Theorem::Thm4 => {
            for s in 1..=g.s_max {
                for n in 2..=g.n_max {
                    pts.push(vec![s, n]);
                }
            }
        }
        Theorem::Thm5 => {
            for s in 2..=g.s_max {
                for t in 2..=s {
                    pts.push(vec![s, t]);
                }
            }
        }
        Theorem::Thm6 => {
            for n in 2..=g.n_max {
                for t in 2..=g.s_max {
                    for s in t..=(n * t).min(g.s_max) {
                        pts.push(vec![s, t, n]);
                    }
                }
            }
        }
        Theorem::Thm7 => {
            for n in 2..=g.n_max {
                for s in 2 * n + 2..=g.s_max {
                    pts.push(vec![s, n]);
                }
            }
        }
    }
    pts.sort();
    pts
}

/// Closed-form result and matching oracle request with the extremum sought.
pub fn formula_and_request(family: Theorem, p: &[u64]) -> Result<(ExtremalResult, EnumerationRequest, Extremum)> {
    Ok(match family {
        Theorem::Thm1 => {
            let ms = MultisetSpec::from_elements(p)?;
            (extremal::max_v(&ms), EnumerationRequest::V(ms), Extremum::Max)
        }
        Theorem::Thm2 => {
            let ms = MultisetSpec::from_elements(p)?;
            (extremal::max_w(&ms), EnumerationRequest::W(ms), Extremum::Max)
        }
        Theorem::Thm3 => {
            let ms = MultisetSpec::from_elements(p)?;
            (extremal::min_w(&ms), EnumerationRequest::W(ms), Extremum::Min)
        }
        Theorem::Thm4 => (extremal::max_un(p[0])?, EnumerationRequest::UnS { s: p[0], n: p[1] }, Extremum::Max),
        Theorem::Thm5 => (extremal::max_ust(p[0], p[1])?, EnumerationRequest::USt { s: p[0], t: p[1] }, Extremum::Max),
        Theorem::Thm6 => (
            extremal::min_ustn(p[0], p[1], p[2])?,
            EnumerationRequest::UStn { s: p[0], t: p[1], n: p[2] },
            Extremum::Min,
        ),
        Theorem::Thm7 => (extremal::min_un(p[0], p[1])?, EnumerationRequest::UnS { s: p[0], n: p[1] }, Extremum::Min),
    })
}

fn check_point(family: Theorem, p: &[u64], corrupt: bool) -> Result<GridPoint> {
    let start = Instant::now();
    let (res, req, which) = formula_and_request(family, p)?;
    let report = brute_force(&req)?;
    let mut formula = res.value.clone();
    if corrupt {
        formula += 1u32;
    }
    let in_set = req.contains(&res.witness) && continuant(&res.witness) == res.value;
    let oracle = report.value(which).clone();
    Ok(GridPoint {
        params: p.to_vec(),
        formula: formula.to_string(),
        oracle: oracle.to_string(),
        matches: in_set && formula == oracle,
        runtime_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

pub fn run_grid(family: Theorem, g: GridBounds, corrupt: bool) -> Result<VerificationGrid> {
    let pts = grid_points(family, g);
    let points: Vec<GridPoint> =
        pts.par_iter().map(|p| check_point(family, p, corrupt)).collect::<Result<_>>()?;
    let first_mismatch = points.iter().find(|p| !p.matches).cloned();
    Ok(VerificationGrid { family, all_match: first_mismatch.is_none(), points, first_mismatch })
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Infeasible(_) => EXIT_INFEASIBLE,
        _ => EXIT_USAGE,
    }
}

fn emit<T: Serialize>(out: &mut dyn Write, v: &T) -> std::io::Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(v).expect("serializable"))
}

fn plain_result(out: &mut dyn Write, r: &ExtremalResult) -> std::io::Result<()> {
    writeln!(out, "family   {}", r.family.name())?;
    writeln!(out, "witness  {}", r.witness)?;
    writeln!(out, "value    {}", r.value)?;
    for w in &r.tie_witnesses {
        writeln!(out, "tie      {w}")?;
    }
    Ok(())
}

fn plain_trace(out: &mut dyn Write, t: &Trace) -> std::io::Result<()> {
    if t.reversed {
        writeln!(out, "read backwards: {}", t.initial.reversed())?;
    }
    for s in &t.steps {
        writeln!(out, "reflect {}..{}  {} -> {}", s.lo, s.hi, s.before, s.after)?;
    }
    writeln!(out, "final {}  value {}", t.result, t.value)
}

/// Exact minimum over `U_n(S)` for the bound report: the closed form where
/// it applies, otherwise exhaustive search while the family is small.
fn bound_minimum(s: u64, n: u64) -> Result<Option<BigUint>> {
    if s >= 2 * n + 2 {
        return Ok(Some(extremal::min_un(s, n)?.value));
    }
    if s <= 26 {
        return Ok(Some(brute_force(&EnumerationRequest::UnS { s, n })?.min));
    }
    Ok(None)
}

fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let plain = cli.plain;
    let io = |e: std::io::Error| Error::Parse(e.to_string());
    let result = match cli.command {
        Command::Eval(a) => {
            let seq = Sequence::new(a.elems)?;
            writeln!(out, "{}", continuant(&seq)).map_err(io)?;
            if a.cf {
                writeln!(out, "{}", cf_value(&seq, a.leading)).map_err(io)?;
            }
            return Ok(EXIT_OK);
        }
        Command::MaxV(a) => extremal::max_v(&a.spec()?),
        Command::MaxW(a) => extremal::max_w(&a.spec()?),
        Command::MinW(a) => extremal::min_w(&a.spec()?),
        Command::MaxUn { sum } => extremal::max_un(sum)?,
        Command::MaxUst { sum, len } => extremal::max_ust(sum, len)?,
        Command::MinUstn { sum, len, bound } => extremal::min_ustn(sum, len, bound)?,
        Command::MinUn { sum, bound } => extremal::min_un(sum, bound)?,
        Command::Verify(a) => {
            let mut g = GridBounds::defaults(a.family);
            g.s_max = a.s_max.unwrap_or(g.s_max);
            g.n_max = a.n_max.unwrap_or(g.n_max);
            g.t_max = a.t_max.unwrap_or(g.t_max);
            g.h_max = a.h_max.unwrap_or(g.h_max);
            g.f_max = a.f_max.unwrap_or(g.f_max);
            if g.h_max > 16 {
                return Err(Error::domain("--h-max above 16 is out of reach for exhaustive search"));
            }
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(a.jobs.unwrap_or(0))
                .build()
                .map_err(|e| Error::domain(e.to_string()))?;
            let grid = pool.install(|| run_grid(a.family, g, a.corrupt_formula))?;
            if plain {
                for p in &grid.points {
                    let mark = if p.matches { "ok" } else { "MISMATCH" };
                    writeln!(out, "{:?}  formula {}  oracle {}  {mark}", p.params, p.formula, p.oracle).map_err(io)?;
                }
                writeln!(out, "{} points, all match: {}", grid.points.len(), grid.all_match).map_err(io)?;
            } else {
                emit(out, &grid).map_err(io)?;
            }
            if let Some(bad) = &grid.first_mismatch {
                writeln!(err, "counterexample {:?}: formula {} != oracle {}", bad.params, bad.formula, bad.oracle)
                    .map_err(io)?;
                return Ok(EXIT_MISMATCH);
            }
            return Ok(EXIT_OK);
        }
        Command::Bound(a) => {
            if a.remark1 {
                let r = remark1(a.digits.max(6))?;
                let rel = if r.left_greater { ">" } else { "<=" };
                writeln!(out, "{}… {rel} {}…", r.left, r.right).map_err(io)?;
            }
            if let (Some(s), Some(n)) = (a.sum, a.bound) {
                let exact = bound_minimum(s, n).or_else(|e| match e {
                    Error::Domain(_) => Ok(None),
                    other => Err(other),
                });
                // Validate the bound's own domain before the minimum.
                let report = BoundReport::new(s, n, a.digits, None)?;
                let report = match exact? {
                    Some(m) => BoundReport::new(s, n, a.digits, Some(&m))?,
                    None => report,
                };
                if plain {
                    writeln!(out, "S {}  n {}  bound {}", report.s, report.n, report.bound).map_err(io)?;
                    if let (Some(m), Some(g)) = (&report.exact_min, &report.margin) {
                        writeln!(out, "exact minimum {m}  margin {g}").map_err(io)?;
                    }
                } else {
                    emit(out, &report).map_err(io)?;
                }
            }
            return Ok(EXIT_OK);
        }
        Command::Trace(a) => {
            let trace = if a.maximize { transitive_maximize(&a.seq)? } else { transitive_minimize(&a.seq)? };
            if plain {
                plain_trace(out, &trace).map_err(io)?;
            } else {
                emit(out, &trace).map_err(io)?;
            }
            return Ok(EXIT_OK);
        }
    };
    if plain {
        plain_result(out, &result).map_err(io)?;
    } else {
        emit(out, &result).map_err(io)?;
    }
    Ok(EXIT_OK)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    match execute(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
