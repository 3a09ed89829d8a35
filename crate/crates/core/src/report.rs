//! Text, CSV and JSON renderings of ideals, decompositions and Betti tables.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::cut::cut_ideal;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homology::{
    graded_betti, has_linear_first_syzygies, has_linear_resolution, invariants_from_betti, is_pure, BettiTable,
    Invariants, Prime,
};
use crate::ideal::{MonomialIdeal, PrimeSupport};
use crate::monomial::VarContext;
use crate::structure::{general_decomposition, Decomposition};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Text,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            other => Err(Error::Parse(format!("unknown format `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DecomposeMode {
    Structural,
    Oracle,
    #[default]
    Both,
}

impl FromStr for DecomposeMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<DecomposeMode> {
        match s {
            "structural" => Ok(DecomposeMode::Structural),
            "oracle" => Ok(DecomposeMode::Oracle),
            "both" => Ok(DecomposeMode::Both),
            other => Err(Error::Parse(format!("unknown mode `{other}`"))),
        }
    }
}

/// `{"vars": [...], "gens": [[...], ...]}`
#[derive(Debug, Serialize)]
pub struct IdealJson {
    pub vars: Vec<String>,
    pub gens: Vec<Vec<String>>,
}

impl IdealJson {
    pub fn new(ideal: &MonomialIdeal) -> IdealJson {
        let ctx = ideal.ctx();
        IdealJson {
            vars: ctx.names(),
            gens: ideal.gens().iter().map(|&g| ctx.var_names(g)).collect(),
        }
    }
}

/// One entry of a decomposition in JSON form.
#[derive(Debug, Serialize)]
pub struct PrimeJson {
    pub height: usize,
    pub vars: Vec<String>,
    pub provenance: String,
}

pub fn decomposition_json(d: &Decomposition) -> Vec<PrimeJson> {
    d.components()
        .iter()
        .map(|c| PrimeJson {
            height: c.prime.height(),
            vars: d.ctx().var_names(c.prime.vars()),
            provenance: c.provenance.label(),
        })
        .collect()
}

pub fn primes_json(ctx: &VarContext, primes: &[PrimeSupport]) -> Vec<Vec<String>> {
    primes.iter().map(|p| ctx.var_names(p.vars())).collect()
}

#[derive(Debug, Serialize)]
pub struct BettiEntryJson {
    pub i: usize,
    pub j: usize,
    pub value: u64,
}

/// `{"char": p, "entries": [{"i", "j", "value"}, ...]}`, sorted by `(i, j)`.
#[derive(Debug, Serialize)]
pub struct BettiJson {
    pub char: u32,
    pub entries: Vec<BettiEntryJson>,
}

impl BettiJson {
    pub fn new(table: &BettiTable) -> BettiJson {
        BettiJson {
            char: table.characteristic().get(),
            entries: table
                .entries()
                .map(|(i, j, value)| BettiEntryJson { i, j, value })
                .collect(),
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

/// Quotes a CSV field when it holds a comma or a quote.
fn csv_field(s: &str) -> String {
    if s.contains([',', '"']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn prime_text(ctx: &VarContext, p: PrimeSupport) -> String {
    format!("({})", ctx.var_names(p.vars()).join(", "))
}

/// `(g_1, g_2, ...)`
pub fn ideal_text(ideal: &MonomialIdeal) -> String {
    let ctx = ideal.ctx();
    let gens: Vec<String> = ideal.gens().iter().map(|&g| ctx.render(g)).collect();
    format!("({})", gens.join(", "))
}

/// Generators of `I(G)` with their s- and t-degrees.
pub fn show(g: &Graph, format: Format) -> Result<String> {
    let ideal = cut_ideal(g)?;
    let ctx = ideal.ctx();
    let degrees: Vec<(usize, usize)> = ideal
        .gens()
        .iter()
        .map(|&m| (ctx.s_degree(m), ctx.t_degree(m)))
        .collect();
    Ok(match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Degrees {
                generator: Vec<String>,
                s_degree: usize,
                t_degree: usize,
            }
            #[derive(Serialize)]
            struct Show {
                graph: String,
                vertices: usize,
                edges: usize,
                ideal: IdealJson,
                degrees: Vec<Degrees>,
            }
            to_json(&Show {
                graph: g.to_string(),
                vertices: g.n_vertices(),
                edges: g.n_edges(),
                ideal: IdealJson::new(&ideal),
                degrees: ideal
                    .gens()
                    .iter()
                    .zip(&degrees)
                    .map(|(&m, &(s, t))| Degrees {
                        generator: ctx.var_names(m),
                        s_degree: s,
                        t_degree: t,
                    })
                    .collect(),
            })
        }
        Format::Csv => {
            let mut out = String::from("generator,s_degree,t_degree\n");
            for (&m, (s, t)) in ideal.gens().iter().zip(&degrees) {
                writeln!(out, "{},{s},{t}", csv_field(&ctx.render(m))).unwrap();
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "graph: {g}").unwrap();
            writeln!(
                out,
                "vertices: {}, edges: {}, generators: {}",
                g.n_vertices(),
                g.n_edges(),
                ideal.gens().len()
            )
            .unwrap();
            writeln!(out, "I(G) = {}", ideal_text(&ideal)).unwrap();
            for (&m, (s, t)) in ideal.gens().iter().zip(&degrees) {
                writeln!(out, "  {}  s-degree {s}  t-degree {t}", ctx.render(m)).unwrap();
            }
            out
        }
    })
}

/// Output of [`decompose`]: the rendered report and whether the two
/// pipelines agreed (always true outside [`DecomposeMode::Both`]).
pub struct DecomposeOutput {
    pub text: String,
    pub agree: bool,
}

/// Structural decomposition, oracle minimal primes, or both with a verdict.
pub fn decompose(g: &Graph, mode: DecomposeMode, format: Format) -> Result<DecomposeOutput> {
    let ideal = cut_ideal(g)?;
    let ctx = ideal.ctx().clone();
    let structural = match mode {
        DecomposeMode::Oracle => None,
        _ => Some(general_decomposition(g)?),
    };
    let oracle = match mode {
        DecomposeMode::Structural => None,
        _ => Some(ideal.minimal_primes()),
    };
    let verdict = match (&structural, &oracle) {
        (Some(d), Some(o)) => {
            let mut a: Vec<u64> = d.primes().map(|p| p.vars().bits()).collect();
            let mut b: Vec<u64> = o.iter().map(|p| p.vars().bits()).collect();
            a.sort_unstable();
            b.sort_unstable();
            Some(if a == b {
                format!("EQUAL, {} primes", a.len())
            } else {
                format!("DIFFERENT, structural {} primes, oracle {} primes", a.len(), b.len())
            })
        }
        _ => None,
    };
    let agree = verdict.as_deref().is_none_or(|v| v.starts_with("EQUAL"));
    let text = match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out {
                graph: String,
                #[serde(skip_serializing_if = "Option::is_none")]
                structural: Option<Vec<PrimeJson>>,
                #[serde(skip_serializing_if = "Option::is_none")]
                oracle: Option<Vec<Vec<String>>>,
                #[serde(skip_serializing_if = "Option::is_none")]
                verdict: Option<String>,
            }
            to_json(&Out {
                graph: g.to_string(),
                structural: structural.as_ref().map(decomposition_json),
                oracle: oracle.as_ref().map(|o| primes_json(&ctx, o)),
                verdict,
            })
        }
        Format::Csv => {
            let mut out = String::from("source,height,vars,provenance\n");
            if let Some(d) = &structural {
                for c in d.components() {
                    let vars = csv_field(&ctx.var_names(c.prime.vars()).join(" "));
                    writeln!(out, "structural,{},{vars},{}", c.prime.height(), c.provenance.label()).unwrap();
                }
            }
            if let Some(o) = &oracle {
                for p in o {
                    let vars = csv_field(&ctx.var_names(p.vars()).join(" "));
                    writeln!(out, "oracle,{},{vars},", p.height()).unwrap();
                }
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "graph: {g}").unwrap();
            if let Some(d) = &structural {
                writeln!(out, "structural: {} primes", d.len()).unwrap();
                for c in d.components() {
                    writeln!(
                        out,
                        "  h={} {}  {}",
                        c.prime.height(),
                        prime_text(&ctx, c.prime),
                        c.provenance.label()
                    )
                    .unwrap();
                }
            }
            if let Some(o) = &oracle {
                writeln!(out, "oracle: {} primes", o.len()).unwrap();
                for &p in o {
                    writeln!(out, "  h={} {}", p.height(), prime_text(&ctx, p)).unwrap();
                }
            }
            if let Some(v) = &verdict {
                writeln!(out, "{v}").unwrap();
            }
            out
        }
    };
    Ok(DecomposeOutput { text, agree })
}

/// The conventional Betti diagram of `S/I`: columns are homological
/// indices, rows are `j - i`.
pub fn betti_diagram(table: &BettiTable) -> String {
    let cols = table.max_index().map_or(0, |m| m + 1);
    let rows = table.entries().map(|(i, j, _)| j - i + 1).max().unwrap_or(0);
    let cell = |v: u64| if v == 0 { ".".to_string() } else { v.to_string() };
    let width = table
        .entries()
        .map(|(i, _, _)| table.total(i).to_string().len())
        .max()
        .unwrap_or(1)
        .max(cols.saturating_sub(1).to_string().len());
    let mut out = String::new();
    write!(out, "{:>7}", "").unwrap();
    for i in 0..cols {
        write!(out, " {i:>width$}").unwrap();
    }
    out.push('\n');
    write!(out, "{:>7}", "total:").unwrap();
    for i in 0..cols {
        write!(out, " {:>width$}", cell(table.total(i))).unwrap();
    }
    out.push('\n');
    for r in 0..rows {
        write!(out, "{:>7}", format!("{r}:")).unwrap();
        for i in 0..cols {
            write!(out, " {:>width$}", cell(table.get(i, i + r))).unwrap();
        }
        out.push('\n');
    }
    out
}

/// Betti table of `S/I(G)` with projective dimension, regularity, depth and
/// the resolution-shape flags.
pub fn betti(g: &Graph, p: Prime, format: Format) -> Result<String> {
    let ideal = cut_ideal(g)?;
    let table = graded_betti(&ideal, p)?;
    let inv = invariants_from_betti(&table, ideal.ctx().num_vars())?;
    let d = ideal.generator_degree().ok_or(Error::MixedDegrees)?;
    let linear = has_linear_resolution(&table, d);
    let pure = is_pure(&table);
    let linear_syz = has_linear_first_syzygies(&table, d);
    Ok(match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out {
                graph: String,
                betti: BettiJson,
                invariants: Invariants,
                linear_resolution: bool,
                pure: bool,
                linear_first_syzygies: bool,
            }
            to_json(&Out {
                graph: g.to_string(),
                betti: BettiJson::new(&table),
                invariants: inv,
                linear_resolution: linear,
                pure,
                linear_first_syzygies: linear_syz,
            })
        }
        Format::Csv => {
            let mut out = String::from("i,j,value\n");
            for (i, j, v) in table.entries() {
                writeln!(out, "{i},{j},{v}").unwrap();
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "graph: {g}").unwrap();
            writeln!(out, "Betti numbers of S/I(G) over GF({})", p.get()).unwrap();
            out.push_str(&betti_diagram(&table));
            writeln!(
                out,
                "projdim(S/I) = {}, reg(S/I) = {}, depth(S/I) = {}",
                inv.projdim, inv.reg, inv.depth
            )
            .unwrap();
            writeln!(
                out,
                "linear resolution: {linear}, pure: {pure}, linear first syzygies: {linear_syz}"
            )
            .unwrap();
            out
        }
    })
}
