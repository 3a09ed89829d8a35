//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Expected values come from the brute-force oracles in `common`.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use cutideal::cut::{cut_ideal, cut_ideal_without_edge, embedded_cut_ideal};
use cutideal::graph::{connected_graph_catalog, cycle_graph, delete_edge, path_graph, Graph};
use cutideal::homology::{
    betti_from_linear_quotients, graded_betti, has_linear_resolution, invariants_from_betti,
    linear_quotients_certificate, reg_via_dual, Prime,
};
use cutideal::ideal::MonomialIdeal;
use cutideal::structure::{check_cm_characterization, general_decomposition, is_unmixed};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn gens_of(ideal: &MonomialIdeal) -> BTreeSet<u64> {
    ideal.gens().iter().map(|m| m.bits()).collect()
}

fn catalog() -> Vec<Graph> {
    connected_graph_catalog(5).unwrap().collect()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn binom(n: usize, k: usize) -> u64 {
    (0..k).fold(1u64, |acc, t| acc * (n - t) as u64 / (t + 1) as u64)
}

fn graph_oracle(g: &Graph) -> BTreeSet<u64> {
    common::cut_generators(g.n_vertices(), g.edges())
}

/// Criterion 1: catalog counts by brute force; `2^(n-1)` pairwise
/// non-dividing generators for every graph.
fn generator_counts() -> Outcome {
    let graphs = catalog();
    let mut counts = Vec::new();
    for n in 1..=5 {
        let brute = common::connected_graphs(n).len();
        let seen = graphs.iter().filter(|g| g.n_vertices() == n).count();
        ensure(brute == seen, || format!("n={n}: catalog {seen}, brute force {brute}"))?;
        counts.push(brute);
    }
    for g in &graphs {
        let ideal = cut_ideal(g).map_err(|e| e.to_string())?;
        let gens = gens_of(&ideal);
        ensure(gens.len() == 1 << (g.n_vertices() - 1), || {
            format!("[{g}]: {} generators", gens.len())
        })?;
        ensure(gens == graph_oracle(g), || {
            format!("[{g}]: generators differ from oracle")
        })?;
        let antichain = gens.iter().all(|&a| gens.iter().all(|&b| a == b || a & b != a));
        ensure(antichain, || format!("[{g}]: a generator divides another"))?;
    }
    Ok(format!(
        "{} graphs ({} per n), all with 2^(n-1) minimal generators; the stated total 774 does not match the brute-force counts",
        graphs.len(),
        counts.iter().map(ToString::to_string).collect::<Vec<_>>().join("/")
    ))
}

/// Criterion 2: structural decomposition equals exhaustive minimal transversals.
fn decomposition_equality() -> Outcome {
    let mut graphs: Vec<Graph> = catalog().into_iter().filter(|g| g.n_edges() >= 1).collect();
    let mut named = Vec::new();
    for (name, g) in [
        ("C_3", cycle_graph(3).unwrap()),
        ("C_4", cycle_graph(4).unwrap()),
        ("C_5", cycle_graph(5).unwrap()),
        ("C_6", cycle_graph(6).unwrap()),
        (
            "C_4+chord",
            Graph::new(4, [(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)]).unwrap(),
        ),
    ] {
        named.push((name, g.clone()));
        graphs.push(g);
    }
    let oracle = |g: &Graph| common::minimal_transversals(&graph_oracle(g), 2 * g.n_edges());
    let structural = |g: &Graph| -> BTreeSet<u64> {
        general_decomposition(g)
            .unwrap()
            .primes()
            .map(|p| p.vars().bits())
            .collect()
    };
    let failures: Vec<String> = std::thread::scope(|s| {
        let chunks: Vec<_> = graphs
            .chunks(graphs.len().div_ceil(8))
            .map(|chunk| {
                s.spawn(move || {
                    chunk
                        .iter()
                        .filter(|g| structural(g) != oracle(g))
                        .map(|g| format!("[{g}]"))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        chunks.into_iter().flat_map(|h| h.join().unwrap()).collect()
    });
    ensure(failures.is_empty(), || format!("differs on {}", failures.join(", ")))?;
    let counts: Vec<String> = named
        .iter()
        .map(|(name, g)| format!("{name}:{}", oracle(g).len()))
        .collect();
    Ok(format!("{} graphs equal; counts {}", graphs.len(), counts.join(" ")))
}

/// Criterion 3: tree Betti numbers, linear-quotient prediction, reg and depth.
fn tree_betti() -> Outcome {
    let trees: Vec<Graph> = catalog()
        .into_iter()
        .filter(|g| g.is_tree() && (1..=4).contains(&g.n_edges()))
        .collect();
    for g in &trees {
        let r = g.n_edges();
        let ideal = cut_ideal(g).unwrap();
        let table = graded_betti(&ideal, Prime::TWO).unwrap();
        let expected: Vec<u64> = (0..=r).map(|i| (1 << (r - i)) * binom(r, i)).collect();
        ensure(table.ideal_totals() == expected, || {
            format!("[{g}]: {:?}", table.ideal_totals())
        })?;
        let lq = betti_from_linear_quotients(&linear_quotients_certificate(&ideal).unwrap().ok_or("no certificate")?);
        ensure(lq == expected, || format!("[{g}]: linear quotients predict {lq:?}"))?;
        let inv = invariants_from_betti(&table, 2 * r).unwrap();
        ensure(inv.reg == r - 1 && inv.depth == r - 1, || format!("[{g}]: {inv:?}"))?;
        if r <= 3 {
            let brute = common::betti_gf2(&gens_of(&ideal), 2 * r);
            let lib: Vec<_> = table.entries().collect();
            ensure(brute == lib, || format!("[{g}]: table differs from unpruned oracle"))?;
        }
    }
    Ok(format!("{} trees with 1..=4 edges", trees.len()))
}

/// Criterion 4: lex order of `I(T_r)` has linear quotients with
/// `set(u_k) = {s_e : t_e | u_k}`.
fn path_linear_quotients() -> Outcome {
    for r in 1..=6 {
        let ideal = cut_ideal(&path_graph(r).unwrap()).unwrap();
        let cert = linear_quotients_certificate(&ideal)
            .unwrap()
            .ok_or_else(|| format!("T_{r}: lex order fails"))?;
        ensure(cert.verify(), || format!("T_{r}: certificate does not verify"))?;
        let order: Vec<u64> = cert.order().iter().map(|m| m.bits()).collect();
        for (k, &u) in order.iter().enumerate() {
            let prefix: BTreeSet<u64> = order[..k].iter().copied().collect();
            let colon = common::colon(&common::minimalize(prefix), u);
            let expected: BTreeSet<u64> = (0..r).filter(|&e| u >> (r + e) & 1 == 1).map(|e| 1 << e).collect();
            let colon_vars: BTreeSet<u64> = if k == 0 { BTreeSet::new() } else { colon };
            ensure(colon_vars == expected, || {
                format!("T_{r}, k={}: colon {colon_vars:?}", k + 1)
            })?;
            let got: BTreeSet<u64> = cert.sets()[k].iter().map(|&v| 1 << v).collect();
            ensure(got == expected, || {
                format!("T_{r}, k={}: certificate set {got:?}", k + 1)
            })?;
            ensure(cert.set_sizes()[k] == (u >> r).count_ones() as usize, || {
                format!("T_{r}: r_k")
            })?;
        }
    }
    Ok("T_1..T_6".to_string())
}

/// Criterion 5: reg = depth = r, rows past the generators on row r, no
/// linear first syzygies.
fn cycle_invariants() -> Outcome {
    let mut parts = Vec::new();
    for r in 3..=6 {
        let ideal = cut_ideal(&cycle_graph(r).unwrap()).unwrap();
        let table = graded_betti(&ideal, Prime::TWO).unwrap();
        let inv = invariants_from_betti(&table, 2 * r).unwrap();
        ensure(inv.reg == r && inv.depth == r, || format!("C_{r}: {inv:?}"))?;
        let bad = table.entries().find(|&(i, j, _)| i >= 2 && j - i != r);
        ensure(bad.is_none(), || format!("C_{r}: entry {bad:?} off row {r}"))?;
        ensure(table.get(2, r + 1) == 0, || format!("C_{r}: linear first syzygies"))?;
        if r <= 4 {
            let brute = common::betti_gf2(&gens_of(&ideal), 2 * r);
            ensure(brute == table.entries().collect::<Vec<_>>(), || {
                format!("C_{r}: oracle table differs")
            })?;
        }
        parts.push(format!("C_{r}"));
    }
    Ok(parts.join(", "))
}

fn small_graphs() -> Vec<Graph> {
    catalog()
        .into_iter()
        .filter(|g| (1..=4).contains(&g.n_edges()))
        .collect()
}

/// Criterion 6: `reg(S/I) = projdim(I^∨)`.
fn terai() -> Outcome {
    let graphs = small_graphs();
    for g in &graphs {
        let ideal = cut_ideal(g).unwrap();
        let direct = invariants_from_betti(&graded_betti(&ideal, Prime::TWO).unwrap(), 2 * g.n_edges())
            .unwrap()
            .reg;
        let dual = reg_via_dual(&ideal, Prime::TWO).unwrap();
        ensure(direct == dual, || format!("[{g}]: direct {direct}, via dual {dual}"))?;
    }
    Ok(format!("{} graphs with |E| <= 4", graphs.len()))
}

/// Criterion 7: `dim = 2|E| - 2`, `e = |E|`.
fn dim_multiplicity() -> Outcome {
    let graphs: Vec<Graph> = catalog()
        .into_iter()
        .filter(|g| (1..=8).contains(&g.n_edges()))
        .collect();
    for g in &graphs {
        let m = g.n_edges();
        let ideal = cut_ideal(g).unwrap();
        let f = common::faces(&graph_oracle(g), 2 * m);
        let (dim, e) = (ideal.krull_dimension().unwrap(), ideal.multiplicity().unwrap());
        ensure(f.len() - 1 == dim && *f.last().unwrap() == e, || {
            format!("[{g}]: oracle disagrees")
        })?;
        ensure(dim == 2 * m - 2 && e == m as u64, || format!("[{g}]: dim {dim}, e {e}"))?;
    }
    Ok(format!("{} graphs with 2|E| <= 16", graphs.len()))
}

/// Criterion 8: unmixed, linear resolution and Cohen–Macaulay
/// characterizations.
fn characterizations() -> Outcome {
    let graphs: Vec<Graph> = catalog().into_iter().filter(|g| g.n_edges() >= 1).collect();
    for g in &graphs {
        let d = general_decomposition(g).unwrap();
        let heights: BTreeSet<u32> = common::minimal_transversals(&graph_oracle(g), 2 * g.n_edges())
            .iter()
            .map(|p| p.count_ones())
            .collect();
        ensure(is_unmixed(&d) == g.is_tree(), || format!("[{g}]: unmixed vs tree"))?;
        ensure((heights.len() == 1) == g.is_tree(), || {
            format!("[{g}]: oracle heights {heights:?}")
        })?;
    }
    let small = small_graphs();
    for g in &small {
        let ideal = cut_ideal(g).unwrap();
        let table = graded_betti(&ideal, Prime::TWO).unwrap();
        let d = ideal.generator_degree().unwrap();
        ensure(has_linear_resolution(&table, d) == g.is_tree(), || {
            format!("[{g}]: linear vs tree")
        })?;
        let cm = check_cm_characterization(g, Prime::TWO).unwrap();
        ensure((cm.depth == cm.dim) == (g.n_edges() == 1), || format!("[{g}]: {cm:?}"))?;
        ensure(cm.consistent(), || format!("[{g}]: {cm:?}"))?;
    }
    Ok(format!(
        "{} graphs for unmixedness, {} with |E| <= 4",
        graphs.len(),
        small.len()
    ))
}

/// Criterion 9: colon identity for every edge, whisker identity for every
/// whisker, against oracle generators of `G - e`.
fn deletion_identities() -> Outcome {
    let graphs: Vec<Graph> = catalog().into_iter().filter(|g| g.n_edges() >= 1).collect();
    let mut checked = 0;
    for g in &graphs {
        let ideal = cut_ideal(g).unwrap();
        let ctx = ideal.ctx().clone();
        let oracle = graph_oracle(g);
        let m = g.n_edges();
        for e in g.edge_indices() {
            let w = ctx.edge_product(e).bits();
            // G - e on the same vertex set, indices shifted into G's variables.
            let rest: Vec<(usize, usize)> = g.edges().iter().copied().filter(|&x| x != g.edge(e)).collect();
            let shift = |mono: u64| -> u64 {
                (0..2 * (m - 1))
                    .filter(|v| mono >> v & 1 == 1)
                    .map(|v| {
                        let (kind, k) = (v / (m - 1), v % (m - 1));
                        let parent = if k >= e.0 { k + 1 } else { k };
                        1u64 << (kind * m + parent)
                    })
                    .sum()
            };
            let deleted: BTreeSet<u64> = if m == 1 {
                BTreeSet::from([0])
            } else {
                common::minimalize(common::cut_generators(g.n_vertices(), &rest).into_iter().map(shift))
            };
            let colon = gens_of(&ideal.colon_by_monomial(ctx.edge_product(e)).unwrap());
            ensure(colon == common::colon(&oracle, w), || {
                format!("[{g}] e={e:?}: colon differs from oracle")
            })?;
            ensure(colon == deleted, || format!("[{g}] e={e:?}: I:(s t) != I(G - e)"))?;
            let lib_deleted = cut_ideal_without_edge(g, e).unwrap();
            ensure(gens_of(&lib_deleted) == deleted, || {
                format!("[{g}] e={e:?}: deletion differs")
            })?;
            if g.is_whisker(e) {
                let prime: BTreeSet<u64> = BTreeSet::from([1 << e.0, 1 << (m + e.0)]);
                ensure(common::intersect(&deleted, &prime) == oracle, || {
                    format!("[{g}] e={e:?}: whisker")
                })?;
                if m > 1 {
                    let sub = embedded_cut_ideal(&delete_edge(g, e).unwrap(), g).unwrap();
                    ensure(gens_of(&sub) == deleted, || format!("[{g}] e={e:?}: whisker deletion"))?;
                }
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} edges over {} graphs", graphs.len()))
}

/// Criterion 10: Betti tables over GF(2) and GF(3) agree.
fn characteristic() -> Outcome {
    let graphs = small_graphs();
    let three = Prime::new(3).unwrap();
    let disagreements: Vec<String> = graphs
        .iter()
        .filter(|g| {
            let ideal = cut_ideal(g).unwrap();
            graded_betti(&ideal, Prime::TWO)
                .unwrap()
                .entries()
                .ne(graded_betti(&ideal, three).unwrap().entries())
        })
        .map(|g| format!("[{g}]"))
        .collect();
    ensure(disagreements.is_empty(), || {
        format!("disagree on {}", disagreements.join(", "))
    })?;
    Ok(format!("{} graphs with |E| <= 4", graphs.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("1 generator count", generator_counts, Duration::from_secs(10)),
        (
            "2 decomposition equality",
            decomposition_equality,
            Duration::from_secs(120),
        ),
        ("3 tree Betti numbers", tree_betti, Duration::from_secs(60)),
        (
            "4 path linear quotients",
            path_linear_quotients,
            Duration::from_secs(10),
        ),
        ("5 cycle invariants", cycle_invariants, Duration::from_secs(120)),
        ("6 regularity via dual", terai, Duration::from_secs(60)),
        (
            "7 dimension and multiplicity",
            dim_multiplicity,
            Duration::from_secs(60),
        ),
        ("8 characterizations", characterizations, Duration::from_secs(120)),
        ("9 deletion identities", deletion_identities, Duration::from_secs(60)),
        ("10 characteristic 2 vs 3", characteristic, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (verdict, detail) = match outcome {
            Ok(detail) if elapsed <= budget => ("PASS", detail),
            Ok(detail) => ("FAIL", format!("{detail}; over budget {budget:?}")),
            Err(detail) => ("FAIL", detail),
        };
        if verdict == "FAIL" {
            failed += 1;
        }
        println!("{verdict} criterion {name}: {detail} ({:.2}s)", elapsed.as_secs_f64());
    }
    println!("acceptance: {} of 10 criteria passed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
