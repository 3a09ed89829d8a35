//! Catalog-wide verification: every structural statement checked against the
//! brute-force machinery, one pass/fail line per statement.

use std::fmt;

use rayon::prelude::*;

use crate::cut::{cut_ideal, cut_ideal_without_edge, cycle_generators, embedded_cut_ideal, Parity};
use crate::error::{Error, Result};
use crate::graph::{connected_graph_catalog, cycle_graph, delete_edge, path_graph, EdgeIndex, Graph};
use crate::homology::{
    betti_from_linear_quotients, betti_over, graded_betti, has_linear_resolution, has_only_linear_first_syzygies,
    invariants_from_betti, linear_quotients_certificate, reg_via_dual, tree_betti_formula, Prime,
};
use crate::ideal::{MonomialIdeal, PrimeSupport};
use crate::monomial::{Monomial, VarContext};
use crate::structure::{check_cm_characterization, general_decomposition, height_classification, is_unmixed};

/// Largest catalog the suite accepts.
pub const MAX_VERIFY_VERTICES: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckLine {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {}: {}", self.name, self.detail)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub n_max: usize,
    /// Characteristic for the Betti-based checks.
    pub p: Prime,
    /// Drops one prime from every structural decomposition.
    pub fault_inject: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            n_max: 3,
            p: Prime::TWO,
            fault_inject: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub lines: Vec<CheckLine>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.lines {
            writeln!(f, "{line}")?;
        }
        let failed = self.lines.iter().filter(|l| !l.passed).count();
        write!(f, "{} checks, {failed} failed", self.lines.len())
    }
}

/// Number of labelled connected graphs on `n` vertices, from the standard
/// recurrence over the component containing vertex 1.
pub fn connected_count(n: usize) -> u64 {
    let mut c = vec![0u64; n + 1];
    let all = |k: usize| 1u64 << (k * k.saturating_sub(1) / 2);
    for m in 1..=n {
        let split: u64 = (1..m)
            .map(|k| crate::homology::binomial(m - 1, k - 1) * c[k] * all(m - k))
            .sum();
        c[m] = all(m) - split;
    }
    c[n]
}

/// `C_3, ..., C_6` and the 4-cycle with the chord `{1,3}`.
pub fn extra_graphs() -> Vec<Graph> {
    let mut out: Vec<Graph> = (3..=6).map(|r| cycle_graph(r).expect("small cycle")).collect();
    out.push(Graph::new(4, [(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)]).expect("C_4 with chord"));
    out
}

/// Runs `check` on every graph concurrently; reports how many were examined
/// and the first failure in input order.
fn over<F>(name: &'static str, graphs: &[&Graph], check: F) -> CheckLine
where
    F: Fn(&Graph) -> Result<bool> + Sync,
{
    let outcomes: Vec<Result<bool>> = graphs.par_iter().map(|g| check(g)).collect();
    let failure = graphs.iter().zip(&outcomes).find_map(|(g, o)| match o {
        Ok(true) => None,
        Ok(false) => Some(format!("fails on [{g}]")),
        Err(e) => Some(format!("error on [{g}]: {e}")),
    });
    CheckLine {
        name,
        passed: failure.is_none(),
        detail: failure.unwrap_or_else(|| format!("{} graphs", graphs.len())),
    }
}

fn prime_bits<'a>(primes: impl Iterator<Item = &'a PrimeSupport>) -> Vec<u64> {
    let mut v: Vec<u64> = primes.map(|p| p.vars().bits()).collect();
    v.sort_unstable();
    v
}

fn is_two_edge_path(g: &Graph) -> bool {
    g.n_edges() == 2 && g.is_tree()
}

fn catalog_counts(catalog: &[Graph], n_max: usize) -> CheckLine {
    let mut passed = true;
    let mut parts = Vec::new();
    for n in 1..=n_max {
        let seen = catalog.iter().filter(|g| g.n_vertices() == n).count() as u64;
        let expected = connected_count(n);
        passed &= seen == expected;
        parts.push(format!("n={n}: {seen}"));
    }
    CheckLine {
        name: "catalog counts",
        passed,
        detail: format!("{}, total {}", parts.join(", "), catalog.len()),
    }
}

fn generators(g: &Graph) -> Result<bool> {
    let ideal = cut_ideal(g)?;
    let gens = ideal.gens();
    let count_ok = gens.len() as u64 == 1u64 << (g.n_vertices() - 1);
    let antichain = gens
        .iter()
        .enumerate()
        .all(|(a, &x)| gens.iter().enumerate().all(|(b, &y)| a == b || !x.divides(y)));
    let ctx = ideal.ctx();
    let one_per_edge = gens.iter().all(|&m| {
        g.edge_indices()
            .all(|e| (m.bits() & ctx.edge_product(e).bits()).count_ones() == 1)
    });
    Ok(count_ok && antichain && (g.n_edges() == 0 || one_per_edge))
}

fn decomposition(g: &Graph, fault: bool) -> Result<bool> {
    let mut d = general_decomposition(g)?;
    if fault {
        d = d.without_last();
    }
    let oracle = cut_ideal(g)?.minimal_primes();
    let structural: Vec<PrimeSupport> = d.primes().collect();
    Ok(prime_bits(structural.iter()) == prime_bits(oracle.iter()))
}

fn tree_betti(g: &Graph, p: Prime) -> Result<bool> {
    let ideal = cut_ideal(g)?;
    let r = g.n_edges();
    let table = graded_betti(&ideal, p)?;
    let totals = table.ideal_totals();
    let formula: Vec<u64> = (0..=r).map(|i| tree_betti_formula(r, i)).collect::<Result<_>>()?;
    let lq = linear_quotients_certificate(&ideal)?
        .map(|c| betti_from_linear_quotients(&c))
        .unwrap_or_default();
    let inv = invariants_from_betti(&table, ideal.ctx().num_vars())?;
    Ok(totals == formula && lq == formula && inv.reg == r - 1 && inv.depth == r - 1)
}

/// The certificate for `I(T_r)` exists, checks out, and each colon is
/// generated by the `s_e` whose `t_e` divides the generator.
pub fn path_linear_quotients(r: usize) -> Result<bool> {
    let ideal = cut_ideal(&path_graph(r)?)?;
    let ctx = ideal.ctx();
    let Some(cert) = linear_quotients_certificate(&ideal)? else {
        return Ok(false);
    };
    // s_e is variable e and t_e is variable r + e.
    let sets_ok = cert
        .order()
        .iter()
        .zip(cert.sets())
        .all(|(&u, set)| *set == (0..r).filter(|&e| u.contains(r + e)).collect::<Vec<_>>());
    let sizes_ok = cert
        .order()
        .iter()
        .zip(cert.set_sizes())
        .all(|(&u, size)| ctx.t_degree(u) == size);
    Ok(cert.verify() && sets_ok && sizes_ok && cert.order() == ideal.gens())
}

/// Regularity and depth equal `r`, every column past the first syzygies sits
/// on row `r`, and there are no linear first syzygies.
pub fn cycle_invariants(r: usize, p: Prime) -> Result<bool> {
    let ideal = cut_ideal(&cycle_graph(r)?)?;
    let table = graded_betti(&ideal, p)?;
    let inv = invariants_from_betti(&table, ideal.ctx().num_vars())?;
    let rows_ok = table.entries().filter(|&(i, _, _)| i >= 2).all(|(i, j, _)| j - i == r);
    Ok(inv.reg == r && inv.depth == r && rows_ok && table.get(2, r + 1) == 0)
}

fn terai(g: &Graph, p: Prime) -> Result<bool> {
    let ideal = cut_ideal(g)?;
    let direct = invariants_from_betti(&graded_betti(&ideal, p)?, ideal.ctx().num_vars())?.reg;
    Ok(reg_via_dual(&ideal, p)? == direct)
}

fn dim_multiplicity(g: &Graph) -> Result<bool> {
    let ideal = cut_ideal(g)?;
    let m = g.n_edges();
    Ok(ideal.krull_dimension()? == 2 * m - 2 && ideal.multiplicity()? == m as u64)
}

fn unmixed_iff_tree(g: &Graph) -> Result<bool> {
    Ok(is_unmixed(&general_decomposition(g)?) == g.is_tree())
}

fn linear_iff_tree(g: &Graph, p: Prime) -> Result<bool> {
    let ideal = cut_ideal(g)?;
    let d = ideal.generator_degree().ok_or(Error::MixedDegrees)?;
    let table = graded_betti(&ideal, p)?;
    let tree = g.is_tree();
    Ok(has_linear_resolution(&table, d) == tree && has_only_linear_first_syzygies(&table, d) == tree)
}

fn cm_iff_single_edge(g: &Graph, p: Prime) -> Result<bool> {
    Ok(check_cm_characterization(g, p)?.consistent())
}

/// `I(G) : s_e t_e = I(G - e)` for every edge.
pub fn colon_identity(g: &Graph) -> Result<bool> {
    let ideal = cut_ideal(g)?;
    let ctx = ideal.ctx().clone();
    for e in g.edge_indices() {
        let colon = ideal.colon_by_monomial(ctx.edge_product(e))?;
        if !colon.equals(&cut_ideal_without_edge(g, e)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `I(G) = I(G - e) ∩ (s_e, t_e)` for every whisker `e`.
pub fn whisker_identity(g: &Graph) -> Result<bool> {
    let ideal = cut_ideal(g)?;
    let ctx = ideal.ctx().clone();
    for e in g.edge_indices().filter(|&e| g.is_whisker(e)) {
        let prime = edge_prime(&ctx, e)?;
        let rebuilt = if g.n_edges() == 1 {
            prime
        } else {
            embedded_cut_ideal(&delete_edge(g, e)?, g)?.intersect(&prime)?
        };
        if !ideal.equals(&rebuilt)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `I(G)` is the intersection of `I(G - e)` over all edges; meant for
/// connected non-cycles with at least two edges.
pub fn subgraph_intersection(g: &Graph) -> Result<bool> {
    let ideal = cut_ideal(g)?;
    let meet = g
        .edge_indices()
        .try_fold(MonomialIdeal::unit(ideal.ctx().clone()), |acc, e| {
            acc.intersect(&cut_ideal_without_edge(g, e)?)
        })?;
    ideal.equals(&meet)
}

fn heights(g: &Graph) -> Result<bool> {
    let report = height_classification(&general_decomposition(g)?, g);
    Ok(report.within_bound() && report.attains_edge_count == (g.is_cycle() || is_two_edge_path(g)))
}

/// The height-`r` minimal primes of `I(C_r)` are the supports of the
/// one-per-edge monomials of even s-degree (odd `r`) or odd s-degree (even `r`).
pub fn cycle_parity(r: usize) -> Result<bool> {
    let ideal = cut_ideal(&cycle_graph(r)?)?;
    let tall: Vec<PrimeSupport> = ideal.minimal_primes().into_iter().filter(|p| p.height() == r).collect();
    let parity = if r % 2 == 1 { Parity::Even } else { Parity::Odd };
    let expected: Vec<PrimeSupport> = cycle_generators(r, parity)?
        .into_iter()
        .map(PrimeSupport::new)
        .collect::<Result<_>>()?;
    Ok(prime_bits(tall.iter()) == prime_bits(expected.iter()))
}

fn characteristic(g: &Graph) -> Result<bool> {
    let ideal = cut_ideal(g)?;
    let two = betti_over(&ideal, Prime::TWO, true)?;
    let three = betti_over(&ideal, Prime::new(3)?, true)?;
    Ok(two.entries().eq(three.entries()))
}

fn single(name: &'static str, detail: String, outcome: Result<bool>) -> CheckLine {
    match outcome {
        Ok(passed) => CheckLine { name, passed, detail },
        Err(e) => CheckLine {
            name,
            passed: false,
            detail: format!("error: {e}"),
        },
    }
}

fn all_of(items: impl IntoIterator<Item = Result<bool>>) -> Result<bool> {
    items.into_iter().try_fold(true, |acc, x| Ok(acc && x?))
}

/// Runs every check over the catalog on at most `n_max` vertices together
/// with [`extra_graphs`].
pub fn run_verification(opts: VerifyOptions) -> Result<VerifyReport> {
    if opts.n_max > MAX_VERIFY_VERTICES {
        return Err(Error::Guard {
            what: "verification catalog vertices",
            actual: opts.n_max,
            limit: MAX_VERIFY_VERTICES,
        });
    }
    let catalog: Vec<Graph> = connected_graph_catalog(opts.n_max)?.collect();
    let extras = extra_graphs();
    let p = opts.p;

    let with_edges: Vec<&Graph> = catalog.iter().filter(|g| g.n_edges() >= 1).collect();
    let everything: Vec<&Graph> = catalog.iter().chain(&extras).collect();
    let decomposable: Vec<&Graph> = with_edges.iter().copied().chain(&extras).collect();
    let small: Vec<&Graph> = with_edges.iter().copied().filter(|g| g.n_edges() <= 4).collect();
    let small_trees: Vec<&Graph> = small.iter().copied().filter(|g| g.is_tree()).collect();
    let faceable: Vec<&Graph> = with_edges.iter().copied().filter(|g| g.n_edges() <= 8).collect();
    let multi_edge: Vec<&Graph> = decomposable.iter().copied().filter(|g| g.n_edges() >= 2).collect();
    let non_cycles: Vec<&Graph> = multi_edge.iter().copied().filter(|g| !g.is_cycle()).collect();

    let lines = vec![
        catalog_counts(&catalog, opts.n_max),
        over("generators", &everything, generators),
        over("structural decomposition", &decomposable, |g| {
            decomposition(g, opts.fault_inject)
        }),
        over("tree Betti numbers", &small_trees, |g| tree_betti(g, p)),
        single(
            "path linear quotients",
            "T_1..T_6".to_string(),
            all_of((1..=6).map(path_linear_quotients)),
        ),
        single(
            "cycle invariants",
            "C_3..C_5".to_string(),
            all_of((3..=5).map(|r| cycle_invariants(r, p))),
        ),
        over("regularity via Alexander dual", &small, |g| terai(g, p)),
        over("dimension and multiplicity", &faceable, dim_multiplicity),
        over("unmixed iff tree", &decomposable, unmixed_iff_tree),
        over("linear resolution iff tree", &small, |g| linear_iff_tree(g, p)),
        over("Cohen-Macaulay iff single edge", &small, |g| cm_iff_single_edge(g, p)),
        over("colon deletion identity", &decomposable, colon_identity),
        over("whisker deletion identity", &decomposable, whisker_identity),
        over("subgraph intersection", &non_cycles, subgraph_intersection),
        over("prime heights", &multi_edge, heights),
        single(
            "cycle prime parity",
            "C_3..C_6".to_string(),
            all_of((3..=6).map(cycle_parity)),
        ),
        over("characteristic 2 vs 3", &small, characteristic),
    ];
    Ok(VerifyReport { lines })
}

/// `(s_e, t_e)`.
pub fn edge_prime(ctx: &VarContext, e: EdgeIndex) -> Result<MonomialIdeal> {
    MonomialIdeal::new(
        ctx.clone(),
        vec![Monomial::var(ctx.s_var(e)), Monomial::var(ctx.t_var(e))],
    )
}
