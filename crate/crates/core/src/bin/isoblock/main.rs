//! `isoblock` command line front end.

mod verify;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use isoblock::blocks::{
    block_of, brauer_tree, characters_by_block, defect_info, hc_series, is_rock, make_context, CharacterLabel,
    ModularContext,
};
use isoblock::fock::{apply_e, apply_f, weight_of, FockElement, FockVector};
use isoblock::partitions::{e_core_and_quotient, ChargedMultiPartition, Partition};
use isoblock::quiver::{QuiverSpec, Side};
use isoblock::symbols::{
    bipartition_from_symbol, d_cocore, d_cohooks, d_core, d_coweight, d_hooks, d_weight, to_abacus, Symbol,
};
use isoblock::Error;

#[derive(Parser)]
#[command(name = "isoblock", version, about = "Partitions, symbols, Fock spaces and isolated blocks of SO(2n+1, q)")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Ascii,
}

#[derive(Subcommand)]
enum Command {
    /// e-core and e-quotient of a partition.
    Core {
        #[arg(long)]
        partition: Partition,
        #[arg(long)]
        e: u32,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        charge: i64,
    },
    /// Defect, rank, d-core and d-cocore of a symbol.
    Symbol {
        #[command(flatten)]
        symbol: SymbolArg,
        #[arg(long)]
        d: Option<u32>,
    },
    /// Render the 2d-abacus of a symbol.
    Abacus {
        #[command(flatten)]
        symbol: SymbolArg,
        #[arg(long)]
        d: u32,
    },
    /// Apply a word of Chevalley operators to a charged multipartition.
    Fock {
        /// Charges, one per component.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        charges: Vec<i64>,
        /// Components separated by ';', e.g. "2,1;1". Empty components are allowed.
        #[arg(long, default_value = "")]
        partitions: String,
        /// Quantum characteristic; omit for the linear quiver.
        #[arg(long)]
        e: Option<u32>,
        /// Operators applied first to last, e.g. "f0,f1,e0"; residues may be negative ("f-1").
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        word: Vec<String>,
    },
    /// Enumerate the isolated blocks of a given rank.
    Blocks {
        #[command(flatten)]
        ctx: CtxArg,
        #[arg(long)]
        n: usize,
        /// Include the characters of every block.
        #[arg(long)]
        characters: bool,
    },
    /// Brauer tree of the cyclic block containing a character.
    Tree {
        #[command(flatten)]
        ctx: CtxArg,
        #[command(flatten)]
        chi: CharArg,
    },
    /// Whether the block of a character is RoCK.
    Rock {
        #[command(flatten)]
        ctx: CtxArg,
        #[command(flatten)]
        chi: CharArg,
    },
    /// Run a named verification suite.
    Verify {
        #[command(subcommand)]
        suite: verify::Suite,
    },
}

#[derive(Args)]
struct CtxArg {
    #[arg(long)]
    q: u64,
    #[arg(long)]
    ell: u64,
}

#[derive(Args)]
#[group(required = true, multiple = true)]
struct SymbolArg {
    /// A symbol written "[s1:λ | s2:μ]", e.g. "[1:2,1 | -2:∅]".
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["t", "mu1", "mu2"])]
    symbol: Option<Symbol>,
    /// Θ_t(μ1, μ2) instead of an explicit symbol.
    #[arg(long, allow_hyphen_values = true)]
    t: Option<i64>,
    #[arg(long, default_value = "")]
    mu1: Partition,
    #[arg(long, default_value = "")]
    mu2: Partition,
}

impl SymbolArg {
    fn get(&self) -> Symbol {
        match &self.symbol {
            Some(s) => s.clone(),
            None => isoblock::symbols::symbol_from_bipartition(self.t.unwrap_or(0), (&self.mu1, &self.mu2)),
        }
    }
}

#[derive(Args)]
struct CharArg {
    #[arg(long = "theta-plus", allow_hyphen_values = true)]
    theta_plus: Symbol,
    #[arg(long = "theta-minus", allow_hyphen_values = true)]
    theta_minus: Symbol,
}

impl CharArg {
    fn get(&self) -> Result<CharacterLabel, Error> {
        CharacterLabel::new(self.theta_plus.clone(), self.theta_minus.clone())
    }
}

/// Outcome of a subcommand: a JSON value, its ASCII rendering and whether
/// verification succeeded.
pub struct Output {
    pub json: serde_json::Value,
    pub ascii: String,
    pub ok: bool,
}

impl Output {
    pub fn ok(value: impl Serialize, ascii: String) -> Self {
        Output { json: serde_json::to_value(value).expect("serializable"), ascii, ok: true }
    }
}

fn list<T: std::fmt::Display>(xs: &[T]) -> String {
    xs.iter().map(|x| format!("({x})")).collect::<Vec<_>>().join(" ")
}

fn run_core(partition: &Partition, e: u32, charge: i64) -> Result<Output, Error> {
    let (core, quotient) = e_core_and_quotient(partition, charge, e)?;
    let weight = (partition.size() - core.size()) / e as usize;
    let ascii = format!("core: {core}\nquotient: {}\nweight: {weight}", list(&quotient.components));
    Ok(Output::ok(
        json!({ "partition": partition, "charge": charge, "e": e, "core": core, "quotient": quotient, "weight": weight }),
        ascii,
    ))
}

fn run_symbol(s: &Symbol, d: Option<u32>) -> Result<Output, Error> {
    let mut v = json!({ "symbol": s, "display": s.to_string(), "defect": s.defect(), "rank": s.rank() });
    let mut ascii = format!("symbol: {s}\ndefect: {}\nrank: {}", s.defect(), s.rank());
    if let Ok((t, (a, b))) = bipartition_from_symbol(s) {
        v["theta"] = json!({ "t": t, "mu": [a, b] });
        ascii.push_str(&format!("\nΘ_{t}({a}; {b})"));
    }
    if let Some(d) = d {
        if d == 0 {
            return Err(Error::InvalidInput("d must be positive".into()));
        }
        let (core, cocore) = (d_core(s, d), d_cocore(s, d));
        v["d"] = json!(d);
        v["hooks"] = json!(d_hooks(s, d).len());
        v["cohooks"] = json!(d_cohooks(s, d).len());
        v["core"] = json!({ "symbol": core, "display": core.to_string(), "weight": d_weight(s, d) });
        v["cocore"] = json!({ "symbol": cocore, "display": cocore.to_string(), "weight": d_coweight(s, d) });
        ascii.push_str(&format!(
            "\n{d}-core: {core} (weight {})\n{d}-cocore: {cocore} (coweight {})",
            d_weight(s, d),
            d_coweight(s, d)
        ));
    }
    Ok(Output { json: v, ascii, ok: true })
}

fn run_abacus(s: &Symbol, d: u32) -> Result<Output, Error> {
    let ab = to_abacus(s.charged(), d)?;
    let picture = ab.render();
    Ok(Output::ok(
        json!({ "symbol": s.to_string(), "d": d, "populations": ab.populations(), "rows": picture.lines().collect::<Vec<_>>() }),
        picture,
    ))
}

fn parse_multipartition(s: &str, level: usize) -> Result<Vec<Partition>, Error> {
    let parts: Vec<&str> = if s.is_empty() { Vec::new() } else { s.split(';').collect() };
    if parts.len() > level {
        return Err(Error::InvalidInput(format!("{} components for {level} charges", parts.len())));
    }
    let mut out = parts.iter().map(|p| p.parse()).collect::<Result<Vec<Partition>, _>>()?;
    out.resize(level, Partition::empty());
    Ok(out)
}

fn run_fock(charges: &[i64], partitions: &str, e: Option<u32>, word: &[String]) -> Result<Output, Error> {
    if e == Some(0) {
        return Err(Error::InvalidInput("e must be positive".into()));
    }
    let spec = QuiverSpec::cyclic(e);
    let mp = ChargedMultiPartition::new(parse_multipartition(partitions, charges.len())?, charges.to_vec())?;
    let mut x = FockElement::basis(spec, FockVector::new(mp));
    for op in word {
        let (kind, i) = op.split_at(op.len().min(1));
        let i: i64 = i.trim_start_matches(':').parse().map_err(|_| Error::InvalidInput(format!("bad operator {op:?}")))?;
        let v = spec.vertex_of(Side::Unprimed, 1, i);
        x = match kind {
            "f" => apply_f(&x, v)?,
            "e" => apply_e(&x, v)?,
            _ => return Err(Error::InvalidInput(format!("operator {op:?} must start with e or f"))),
        };
    }
    let terms: Vec<_> = x
        .terms()
        .map(|(v, c)| {
            let w = weight_of(&spec, v);
            (json!({ "coefficient": c, "components": v.mp.components, "weight": w }), format!("{c:+} {} [{w}]", list(&v.mp.components)))
        })
        .collect();
    let ascii = if terms.is_empty() { "0".to_string() } else { terms.iter().map(|t| t.1.clone()).collect::<Vec<_>>().join("\n") };
    Ok(Output::ok(json!({ "charges": charges, "e": e, "word": word, "terms": terms.into_iter().map(|t| t.0).collect::<Vec<_>>() }), ascii))
}

fn run_blocks(ctx: &ModularContext, n: usize, with_chars: bool) -> Result<Output, Error> {
    let mut records = Vec::new();
    let mut lines = vec![format!("q = {}, ℓ = {}, f = {}, d = {}, {} prime", ctx.q, ctx.ell, ctx.f, ctx.d, if ctx.linear { "linear" } else { "unitary" })];
    for (b, chars) in characters_by_block(n, ctx) {
        let info = defect_info(&b, ctx);
        let rock = is_rock(&b, ctx).ok();
        let mut rec = json!({
            "block": b,
            "display": b.to_string(),
            "degree_vector": [b.w_plus, b.w_minus],
            "defect": info,
            "characters": chars.len(),
            "rock": rock,
        });
        if with_chars {
            rec["members"] = json!(chars.iter().map(|c| c.to_string()).collect::<Vec<_>>());
        }
        lines.push(format!("{b}  chars={}  cyclic={}  rock={}", chars.len(), info.cyclic, rock.map_or("-".into(), |r| r.to_string())));
        if with_chars {
            lines.extend(chars.iter().map(|c| format!("    {c}")));
        }
        records.push(rec);
    }
    Ok(Output::ok(records, lines.join("\n")))
}

fn run_tree(ctx: &ModularContext, chi: &CharacterLabel) -> Result<Output, Error> {
    let tree = brauer_tree(chi, ctx)?;
    let mut v = serde_json::to_value(&tree).expect("serializable");
    v["block"] = json!(block_of(chi, ctx).to_string());
    Ok(Output { json: v, ascii: tree.render(), ok: true })
}

fn run_rock(ctx: &ModularContext, chi: &CharacterLabel) -> Result<Output, Error> {
    let b = block_of(chi, ctx);
    let rock = is_rock(&b, ctx)?;
    let h = hc_series(chi);
    Ok(Output::ok(
        json!({ "block": b, "display": b.to_string(), "series": h, "rock": rock }),
        format!("{b}: {}", if rock { "RoCK" } else { "not RoCK" }),
    ))
}

fn dispatch(cli: &Cli) -> Result<Output, Error> {
    match &cli.command {
        Command::Core { partition, e, charge } => run_core(partition, *e, *charge),
        Command::Symbol { symbol, d } => run_symbol(&symbol.get(), *d),
        Command::Abacus { symbol, d } => run_abacus(&symbol.get(), *d),
        Command::Fock { charges, partitions, e, word } => run_fock(charges, partitions, *e, word),
        Command::Blocks { ctx, n, characters } => run_blocks(&make_context(ctx.q, ctx.ell)?, *n, *characters),
        Command::Tree { ctx, chi } => run_tree(&make_context(ctx.q, ctx.ell)?, &chi.get()?),
        Command::Rock { ctx, chi } => run_rock(&make_context(ctx.q, ctx.ell)?, &chi.get()?),
        Command::Verify { suite } => verify::run(suite),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(out) => {
            let ok = out.ok;
            let text = match cli.format {
                Format::Json => serde_json::to_string_pretty(&out.json).expect("valid json"),
                Format::Ascii => out.ascii,
            };
            // a closed pipe is not an error worth reporting
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
