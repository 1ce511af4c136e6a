//! `qsym`: command-line front end for the quantum symmetric pair toolkit.
//!
//! Every subcommand prints one JSON document (or writes it to `--out`).
//! Exit codes: 0 when every check holds, 1 for invalid input, 2 when a
//! check fails or a theorem is contradicted, 3 when a resource cap is hit.

mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use qsym::charring::{expand_in_m, expansion_json, expansion_violations, is_w_invariant};
use qsym::qfield::{ParamKind, RatFunc};
use qsym::qsp::{standard_battery, verify_all, verify_relation, CoidealPresentation, PairSpec, Relation};
use qsym::rootdata::{table, InvolutionDatum, PairType, RestrictedData, WeightVec};
use qsym::spherical::{invariant_space, zonal};
use qsym::uqrep::{ModuleRep, DEFAULT_DIM_CAP};
use qsym::{Error, Result, Scalar};

use config::{involution, parse_coords, weight, Assignment, Partner};

const SCHEMA: &str = "qsym-cli/1";

#[derive(Parser)]
#[command(name = "qsym", version, about = "Quantum symmetric pair computations with exact arithmetic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rows of the classification table.
    Pairs {
        #[command(subcommand)]
        action: PairsAction,
    },
    /// Dimension of the space of spherical vectors for every dominant weight
    /// up to a dimension bound.
    Census(CensusArgs),
    /// The zonal spherical function of a highest weight and its expansion
    /// in orbit sums.
    Zonal(ZonalArgs),
    /// Checks the defining relations of the subalgebra on a module battery.
    VerifyRelations(RelationArgs),
}

#[derive(Subcommand)]
enum PairsAction {
    /// Lists table rows, optionally filtered.
    List(ListArgs),
}

#[derive(Args)]
struct ListArgs {
    /// Row label, e.g. `AII`, `CII.2` or `DOUBLE(A)`.
    #[arg(long = "type")]
    ty: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    /// Largest rank listed for the classical families.
    #[arg(long, default_value_t = 4)]
    max_rank: usize,
    /// Plain-text table instead of JSON.
    #[arg(long)]
    table: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PairArgs {
    /// Row label, e.g. `AI`, `CI` or `DOUBLE(A)`.
    #[arg(long)]
    pair: String,
    /// Rank of the simple algebra (of each copy for `DOUBLE`).
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    /// Parameter values `s2=0,d3=3/2`; `sym` keeps a symbol free.
    #[arg(long, default_value = "")]
    params: String,
    /// Largest module built.
    #[arg(long, default_value_t = DEFAULT_DIM_CAP)]
    dim_cap: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CensusArgs {
    #[command(flatten)]
    pair: PairArgs,
    /// Largest module dimension enumerated.
    #[arg(long, default_value_t = 60)]
    dim_bound: u64,
    /// A single highest weight in fundamental coordinates instead of the
    /// enumeration.
    #[arg(long)]
    lambda: Option<String>,
}

#[derive(Args)]
struct ZonalArgs {
    #[command(flatten)]
    pair: PairArgs,
    /// Highest weight in fundamental coordinates, e.g. `2,0`.
    #[arg(long)]
    lambda: String,
    /// `standard[:sprime=..,c=..]` or `custom[:s1=..,d1=..]`.
    #[arg(long, default_value = "standard")]
    partner: String,
}

#[derive(Args)]
struct RelationArgs {
    #[command(flatten)]
    pair: PairArgs,
    /// `auto`, or highest weights separated by `;`, e.g. `1,0;0,1;1,1`.
    #[arg(long, default_value = "auto")]
    battery: String,
    /// Size of the automatic battery.
    #[arg(long, default_value_t = 3)]
    battery_size: usize,
    /// Largest module dimension in the automatic battery.
    #[arg(long, default_value_t = 60)]
    dim_bound: u64,
    /// Restricts the check to one relation, `i` to `vi`.
    #[arg(long)]
    relation: Option<String>,
    /// Replaces `d_i` by an expression without validation, e.g. `2=3*d2`,
    /// as a negative control.
    #[arg(long)]
    perturb_d: Option<String>,
}

// ---------------------------------------------------------------------------
// Commands

/// A finished command: its JSON report and whether every check held.
struct Outcome {
    report: Value,
    ok: bool,
}

fn pairs_list(args: &ListArgs) -> Result<Outcome> {
    let ty: Option<PairType> = args.ty.as_deref().map(str::parse).transpose()?;
    let max_rank = args.max_rank.max(args.n.unwrap_or(0));
    let rows: Vec<InvolutionDatum> = table(max_rank, max_rank)
        .into_iter()
        .filter(|d| ty.is_none_or(|t| d.pair() == t))
        .filter(|d| args.n.is_none_or(|n| d.n() == n))
        .filter(|d| args.r.is_none_or(|r| d.r() == Some(r)))
        .collect();
    if args.table {
        return Ok(Outcome { report: Value::String(render_table(&rows)), ok: true });
    }
    let report = json!({
        "schema": SCHEMA,
        "command": "pairs list",
        "rows": rows.iter().map(InvolutionDatum::to_json).collect::<Vec<_>>(),
    });
    Ok(Outcome { report, ok: true })
}

fn render_table(rows: &[InvolutionDatum]) -> String {
    let nodes = |v: &[usize]| {
        let items: Vec<String> = v.iter().map(|i| (i + 1).to_string()).collect();
        format!("{{{}}}", items.join(","))
    };
    let mut out = format!("{:<12} {:<10} {:<16} {:<16} {:<10} {:<10}\n", "type", "root", "pi_theta", "p", "S", "D");
    for d in rows {
        let p: Vec<usize> = (0..d.rank()).map(|i| d.p(i)).collect();
        out += &format!(
            "{:<12} {:<10} {:<16} {:<16} {:<10} {:<10}\n",
            d.name(),
            d.root().name(),
            nodes(d.pi_theta()),
            nodes(&p),
            nodes(d.s_set()),
            nodes(d.d_set()),
        );
    }
    out
}

fn base_spec(args: &PairArgs) -> Result<(InvolutionDatum, Assignment, PairSpec<Scalar>)> {
    let inv = involution(&args.pair, args.n, args.r)?;
    let params = Assignment::parse(&args.params, &inv, &[ParamKind::S, ParamKind::D])?;
    let spec = params.apply(&PairSpec::symbolic(&inv)?)?;
    Ok((inv, params, spec))
}

fn census(args: &CensusArgs) -> Result<Outcome> {
    let (inv, params, spec) = base_spec(&args.pair)?;
    let rd = RestrictedData::new(&inv)?;
    let weights: Vec<WeightVec> = match &args.lambda {
        Some(text) => vec![weight(&inv, &parse_coords(text)?)?],
        None => inv
            .root()
            .dominant_weights_up_to(args.dim_bound)
            .into_iter()
            .map(|(w, _)| w)
            .collect(),
    };
    let mut rows = Vec::new();
    let mut ok = true;
    for lambda in &weights {
        let m = ModuleRep::build(inv.root(), Scalar::v(), lambda, args.pair.dim_cap)?;
        let pres = CoidealPresentation::new(&spec, &m)?;
        let (kernel_dim, _) = invariant_space(&pres)?;
        let expected = rd.in_p_plus_theta(lambda)?;
        let agree = kernel_dim == usize::from(expected);
        ok &= agree;
        rows.push(json!({
            "lambda": inv.root().dominant_coords(lambda)?,
            "dim": m.dim(),
            "in_P_plus_theta": expected,
            "kernel_dim": kernel_dim,
            "agree": agree,
        }));
    }
    let report = json!({
        "schema": SCHEMA,
        "command": "census",
        "pair": inv.name(),
        "params": params.to_json(),
        "dim_bound": args.dim_bound,
        "rows": rows,
        "all_agree": ok,
    });
    Ok(Outcome { report, ok })
}

fn zonal_cmd(args: &ZonalArgs) -> Result<Outcome> {
    let (inv, params, spec) = base_spec(&args.pair)?;
    let rd = RestrictedData::new(&inv)?;
    let lambda = weight(&inv, &parse_coords(&args.lambda)?)?;
    let partner = Partner::parse(&args.partner, &inv)?;
    let right = partner.spec(&inv, &params)?;
    let z = zonal(&lambda, &spec, &right, Scalar::v(), args.pair.dim_cap)?;
    let phi = &z.character;
    let invariant = is_w_invariant(phi, &rd)?;
    let expansion = if invariant {
        let e = expand_in_m(phi, &rd)?;
        let shape = expansion_violations(&e, &lambda, &rd)?;
        Some((expansion_json(&lambda, &e), shape))
    } else {
        None
    };
    let shape_ok = expansion.as_ref().is_some_and(|(_, s)| s.is_empty());
    // A custom partner only reports the verdicts.
    let ok = !partner.is_standard() || (invariant && shape_ok);
    let report = json!({
        "schema": SCHEMA,
        "command": "zonal",
        "pair": inv.name(),
        "params": params.to_json(),
        "partner": partner.to_json(),
        "lambda": args.lambda,
        "lambda_roots": lambda,
        "character": phi.to_json(),
        "w_invariant": invariant,
        "expansion": expansion.as_ref().map(|(e, _)| e.clone()),
        "expansion_violations": expansion.map(|(_, s)| s),
    });
    Ok(Outcome { report, ok })
}

fn verify_relations(args: &RelationArgs) -> Result<Outcome> {
    let (inv, params, mut spec) = base_spec(&args.pair)?;
    if let Some(text) = &args.perturb_d {
        let (node, expr) = text
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected node=expression, got `{text}`")))?;
        let node: usize = node
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("`{node}` is not a node index")))?;
        if node == 0 || node > inv.rank() {
            return Err(Error::Invalid(format!("node {node} is out of range")));
        }
        spec = spec.with_raw_d(node - 1, RatFunc::parse(expr)?);
    }
    let battery = if args.battery.trim() == "auto" {
        standard_battery(inv.root(), &Scalar::v(), args.battery_size, args.dim_bound)?
    } else {
        args.battery
            .split(';')
            .map(|c| {
                let w = weight(&inv, &parse_coords(c)?)?;
                ModuleRep::build(inv.root(), Scalar::v(), &w, args.pair.dim_cap)
            })
            .collect::<Result<Vec<_>>>()?
    };
    let reports = match &args.relation {
        None => verify_all(&spec, &battery)?,
        Some(r) => {
            let rel: Relation = r.parse()?;
            let mut out = Vec::new();
            for (i, j) in rel.applicable(&inv) {
                out.extend(verify_relation(&spec, rel, i, j, &battery)?);
            }
            out
        }
    };
    let ok = reports.iter().all(|r| r.zero);
    let report = json!({
        "schema": SCHEMA,
        "command": "verify-relations",
        "pair": inv.name(),
        "params": params.to_json(),
        "perturb_d": args.perturb_d,
        "battery": battery.iter().map(|m| json!({ "lambda": m.highest(), "dim": m.dim() })).collect::<Vec<_>>(),
        "reports": serde_json::to_value(&reports).map_err(|e| Error::Invalid(e.to_string()))?,
        "checked": reports.len(),
        "all_zero": ok,
    });
    Ok(Outcome { report, ok })
}

// ---------------------------------------------------------------------------
// Entry point

fn emit(outcome: &Outcome, out: Option<&PathBuf>) -> std::io::Result<()> {
    let text = match &outcome.report {
        Value::String(s) => s.clone(),
        v => serde_json::to_string_pretty(v).expect("serializable") + "\n",
    };
    match out {
        Some(path) => std::fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::TheoremViolation(_) => 2,
        Error::ResourceCap(_) => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let (result, out) = match &cli.command {
        Command::Pairs { action: PairsAction::List(a) } => (pairs_list(a), a.out.as_ref()),
        Command::Census(a) => (census(a), a.pair.out.as_ref()),
        Command::Zonal(a) => (zonal_cmd(a), a.pair.out.as_ref()),
        Command::VerifyRelations(a) => (verify_relations(a), a.pair.out.as_ref()),
    };
    match result {
        Ok(outcome) => {
            if let Err(e) = emit(&outcome, out) {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
