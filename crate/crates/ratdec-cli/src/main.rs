//! Command-line front end: encode and decode words, run list decoding, emit
//! planner sweeps and capability tables, and run seeded Monte-Carlo
//! simulations.
//!
//! Exit codes: 0 on success, 1 when a decode declares failure, 2 on usage
//! errors (bad flags, malformed inputs, infeasible plans).

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use ratdec::bch::classical_bch_decode;
use ratdec::io::{self, format_bits, format_word, outcome_to_dto, plan_to_dto, AnyCode, CodeSpec};
use ratdec::listdec::{bch_list_decode, rs_list_decode};
use ratdec::planner::{
    bch_epsilon_plan, bch_lecc_max, gs_compare, rs_epsilon_plan, rs_freedoms, rs_lecc_max,
    rs_multiplicity, rs_py, CodeFamily, Plan, PlanMode,
};
use ratdec::rs::{classical_decode, DecodeStatus};
use std::fs;
use std::path::{Path, PathBuf};

mod sim;

#[derive(Parser)]
#[command(
    name = "ratdec",
    version,
    about = "Rational curve-fitting list decoding for RS and BCH codes"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct CodeArg {
    /// Code specification JSON file.
    #[arg(long, value_name = "JSON")]
    code: PathBuf,
}

#[derive(Subcommand)]
enum Cmd {
    /// Systematically encode a data word.
    Encode {
        #[command(flatten)]
        code: CodeArg,
        /// Input data word file (k symbols / k bits).
        #[arg(long, value_name = "PATH")]
        r#in: PathBuf,
        /// Output path (stdout when omitted).
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Classical unique decoding up to half the distance.
    Decode {
        #[command(flatten)]
        code: CodeArg,
        #[arg(long, value_name = "PATH")]
        r#in: PathBuf,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// List decoding to distance t.
    Listdecode {
        #[command(flatten)]
        code: CodeArg,
        /// Target list error correction distance.
        #[arg(long)]
        t: i64,
        /// Override the planned multiplicity.
        #[arg(long)]
        m: Option<i64>,
        /// Override the planned y-degree.
        #[arg(long)]
        py: Option<i64>,
        #[arg(long, value_name = "PATH")]
        r#in: PathBuf,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Planner output: a single plan, a sweep table, or an epsilon plan.
    Plan {
        #[command(flatten)]
        code: CodeArg,
        /// Plan for one specific t (JSON).
        #[arg(long, conflicts_with_all = ["epsilon", "capability_table"])]
        t: Option<i64>,
        /// Epsilon plan: t interpolated between t0 and the LECC limit.
        #[arg(long, conflicts_with = "capability_table")]
        epsilon: Option<String>,
        /// Normalized capability table (t/n versus D).
        #[arg(long)]
        capability_table: bool,
        /// Rows in the capability table.
        #[arg(long, default_value_t = 50)]
        steps: u32,
        /// Output format for sweeps: csv or json.
        #[arg(long, default_value = "csv")]
        format: String,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Seeded Monte-Carlo decoding trials.
    Simulate {
        #[command(flatten)]
        code: CodeArg,
        #[arg(long)]
        t: i64,
        /// Errors injected per trial.
        #[arg(long)]
        weight: usize,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(2);
        }
    }
}

fn load_code(path: &Path) -> Result<AnyCode> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let spec: CodeSpec = serde_json::from_str(&text).context("parsing code spec")?;
    spec.build().map_err(|e| anyhow!("{e}"))
}

fn read_word_line(path: &Path) -> Result<String> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .map(String::from)
        .ok_or_else(|| anyhow!("no word found in {}", path.display()))
}

fn emit(out: Option<&Path>, content: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, content).with_context(|| format!("writing {}", p.display()))?,
        None => print!("{content}"),
    }
    Ok(())
}

fn plan_for(code: &AnyCode, t: i64, m: Option<i64>, py: Option<i64>) -> Result<Plan> {
    let plan = match code {
        AnyCode::Rs(c) => Plan::rs(c.n as i64, c.d() as i64, t),
        AnyCode::Bch(c) => Plan::bch(c.n as i64, c.d as i64, t),
    }
    .map_err(|e| anyhow!("{e}"))?;
    plan.with_overrides(m, py).map_err(|e| anyhow!("{e}"))
}

fn run(cli: Cli) -> Result<i32> {
    match cli.cmd {
        Cmd::Encode { code, r#in, out } => {
            let line = read_word_line(&r#in)?;
            let text = match load_code(&code.code)? {
                AnyCode::Rs(c) => {
                    let data = io::parse_word(c.field(), &line).map_err(|e| anyhow!("{e}"))?;
                    let cw = c.encode(&data).map_err(|e| anyhow!("{e}"))?;
                    format_word(c.field(), &cw)
                }
                AnyCode::Bch(c) => {
                    let data = io::parse_bits(&line).map_err(|e| anyhow!("{e}"))?;
                    let cw = c.encode(&data).map_err(|e| anyhow!("{e}"))?;
                    format_bits(&cw)
                }
            };
            emit(out.as_deref(), &format!("{text}\n"))?;
            Ok(0)
        }
        Cmd::Decode { code, r#in, out } => {
            let line = read_word_line(&r#in)?;
            let (dto, status) = match load_code(&code.code)? {
                AnyCode::Rs(c) => {
                    let r = io::parse_word(c.field(), &line).map_err(|e| anyhow!("{e}"))?;
                    let o = classical_decode(&c, &r);
                    let t = c.t_classical() as i64;
                    (outcome_to_dto(c.field(), CodeFamily::Rs, t, &o), o.status)
                }
                AnyCode::Bch(c) => {
                    let r = io::parse_bits(&line).map_err(|e| anyhow!("{e}"))?;
                    let o = classical_bch_decode(&c, &r);
                    let t = c.t_classical() as i64;
                    (outcome_to_dto(c.field(), CodeFamily::Bch, t, &o), o.status)
                }
            };
            emit(
                out.as_deref(),
                &format!("{}\n", serde_json::to_string_pretty(&dto)?),
            )?;
            Ok(if status == DecodeStatus::Failure {
                1
            } else {
                0
            })
        }
        Cmd::Listdecode {
            code,
            t,
            m,
            py,
            r#in,
            out,
        } => {
            let line = read_word_line(&r#in)?;
            let any = load_code(&code.code)?;
            let plan = plan_for(&any, t, m, py)?;
            let (dto, status) = match &any {
                AnyCode::Rs(c) => {
                    let r = io::parse_word(c.field(), &line).map_err(|e| anyhow!("{e}"))?;
                    let o = rs_list_decode(c, &r, &plan);
                    (outcome_to_dto(c.field(), CodeFamily::Rs, t, &o), o.status)
                }
                AnyCode::Bch(c) => {
                    let r = io::parse_bits(&line).map_err(|e| anyhow!("{e}"))?;
                    let o = bch_list_decode(c, &r, &plan);
                    (outcome_to_dto(c.field(), CodeFamily::Bch, t, &o), o.status)
                }
            };
            emit(
                out.as_deref(),
                &format!("{}\n", serde_json::to_string_pretty(&dto)?),
            )?;
            Ok(if status == DecodeStatus::Failure {
                1
            } else {
                0
            })
        }
        Cmd::Plan {
            code,
            t,
            epsilon,
            capability_table,
            steps,
            format,
            out,
        } => {
            let any = load_code(&code.code)?;
            let text = if capability_table {
                capability_table_csv(steps)
            } else if let Some(eps) = epsilon {
                let (p, q) = parse_decimal_rational(&eps)?;
                let (tt, mm) = match &any {
                    AnyCode::Rs(c) => rs_epsilon_plan(c.n as i64, c.d() as i64, p, q),
                    AnyCode::Bch(c) => bch_epsilon_plan(c.n as i64, c.d as i64, p, q),
                }
                .map_err(|e| anyhow!("{e}"))?;
                format!("t,m\n{tt},{mm}\n")
            } else if let Some(t) = t {
                let plan = plan_for(&any, t, None, None)?;
                format!("{}\n", serde_json::to_string_pretty(&plan_to_dto(&plan))?)
            } else {
                sweep(&any, &format)?
            };
            emit(out.as_deref(), &text)?;
            Ok(0)
        }
        Cmd::Simulate {
            code,
            t,
            weight,
            trials,
            seed,
            out,
        } => {
            let any = load_code(&code.code)?;
            let plan = plan_for(&any, t, None, None)?;
            let summary = sim::run(&any, &plan, weight, trials, seed)?;
            emit(
                out.as_deref(),
                &format!("{}\n", serde_json::to_string(&summary)?),
            )?;
            Ok(0)
        }
    }
}

/// Parse a decimal like "0.125" into the exact rational (125, 1000).
fn parse_decimal_rational(s: &str) -> Result<(i64, i64)> {
    let s = s.trim();
    let (int, frac) = match s.split_once('.') {
        Some((i, f)) => (i, f),
        None => (s, ""),
    };
    if frac.len() > 12 || int.len() > 6 {
        bail!("epsilon {s:?} has too many digits");
    }
    let int: i64 = if int.is_empty() {
        0
    } else {
        int.parse().context("bad epsilon")?
    };
    let den = 10i64.pow(frac.len() as u32);
    let fr: i64 = if frac.is_empty() {
        0
    } else {
        frac.parse().context("bad epsilon")?
    };
    Ok((int * den + fr, den))
}

/// Sweep rows (t, m_prop, m_GS, Py_prop, Py_GS, N_free, N_cstr) from the
/// first t with list gain up to the LECC limit.
fn sweep(code: &AnyCode, format: &str) -> Result<String> {
    #[derive(serde::Serialize)]
    struct Row {
        t: i64,
        m_prop: i64,
        #[serde(skip_serializing_if = "Option::is_none")]
        m_gs: Option<i64>,
        py_prop: i64,
        #[serde(skip_serializing_if = "Option::is_none")]
        py_gs: Option<i64>,
        n_free: i64,
        n_cstr: i64,
    }
    let mut rows = Vec::new();
    match code {
        AnyCode::Rs(c) => {
            let (n, d) = (c.n as i64, c.d() as i64);
            for t in d / 2 + 1..=rs_lecc_max(n, d) {
                let (m, _) = rs_multiplicity(n, d, t).map_err(|e| anyhow!("{e}"))?;
                let py = rs_py(t, d, m);
                let (n_free, n_cstr) = rs_freedoms(n, d, t, m, py);
                let gs = gs_compare(n, d, t).ok();
                rows.push(Row {
                    t,
                    m_prop: m,
                    m_gs: gs.map(|g| g.0),
                    py_prop: py,
                    py_gs: gs.map(|g| g.1),
                    n_free,
                    n_cstr,
                });
            }
        }
        AnyCode::Bch(c) => {
            let (n, d) = (c.n as i64, c.d as i64);
            for t in d / 2 + 1..=bch_lecc_max(n, d) {
                let plan = Plan::bch(n, d, t).map_err(|e| anyhow!("{e}"))?;
                let PlanMode::Rational {
                    m,
                    p_y,
                    n_free,
                    n_cstr,
                    ..
                } = plan.mode
                else {
                    continue;
                };
                let gs = gs_compare(n, d, t).ok();
                rows.push(Row {
                    t,
                    m_prop: m,
                    m_gs: gs.map(|g| g.0),
                    py_prop: p_y,
                    py_gs: gs.map(|g| g.1),
                    n_free,
                    n_cstr,
                });
            }
        }
    }
    match format {
        "json" => Ok(format!("{}\n", serde_json::to_string_pretty(&rows)?)),
        "csv" => {
            let mut s = String::from("t,m_prop,m_GS,Py_prop,Py_GS,N_free,N_cstr\n");
            for r in rows {
                let opt = |o: Option<i64>| o.map(|v| v.to_string()).unwrap_or_default();
                s.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    r.t,
                    r.m_prop,
                    opt(r.m_gs),
                    r.py_prop,
                    opt(r.py_gs),
                    r.n_free,
                    r.n_cstr
                ));
            }
            Ok(s)
        }
        other => bail!("unknown format {other:?} (want csv or json)"),
    }
}

/// Normalized list-error-correction capability as a function of the
/// normalized distance D: classical halving, the n(1 - sqrt(1-D)) limit, and
/// the binary-code limit (1 - sqrt(1-2D))/2. Report output only; nothing
/// downstream consumes these floats.
fn capability_table_csv(steps: u32) -> String {
    let mut s = String::from("D,classical,rs_list,bch_list\n");
    for i in 1..=steps {
        let d = i as f64 / (steps as f64 + 1.0);
        let classical = d / 2.0;
        let rs = 1.0 - (1.0 - d).sqrt();
        let bch = if 2.0 * d <= 1.0 {
            format!("{:.6}", (1.0 - (1.0 - 2.0 * d).sqrt()) / 2.0)
        } else {
            String::new()
        };
        s.push_str(&format!("{d:.6},{classical:.6},{rs:.6},{bch}\n"));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_rational() {
        assert_eq!(parse_decimal_rational("0.125").unwrap(), (125, 1000));
        assert_eq!(parse_decimal_rational("1").unwrap(), (1, 1));
        assert_eq!(parse_decimal_rational("0.5").unwrap(), (5, 10));
        assert_eq!(parse_decimal_rational(".25").unwrap(), (25, 100));
        assert!(parse_decimal_rational("x").is_err());
    }
}
