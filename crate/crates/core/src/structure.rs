//! Closed-form minimal prime decompositions of cut ideals and the structural
//! characterizations built on them.
//!
//! * a tree contributes one prime `(s_e, t_e)` per edge;
//! * a cycle `C_r` adds the supports of the one-per-edge monomials whose
//!   s-degree is even (odd `r`) or odd (even `r`), all of height `r`;
//! * a general graph takes its edge primes plus the height-`> 2` primes of
//!   every simple cycle it contains.

use std::collections::BTreeMap;

use crate::cut::{cut_ideal, cycle_generators, subgraph_var_map, Parity};
use crate::error::{Error, Result};
use crate::graph::{enumerate_cycles, EdgeIndex, Graph};
use crate::homology::{graded_betti, invariants_from_betti, Prime};
use crate::ideal::{prime_order, MonomialIdeal, PrimeSupport};
use crate::monomial::{Monomial, VarContext};

/// Where a structural prime came from.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Provenance {
    Edge(EdgeIndex),
    /// A cycle, by its vertex labels in the graph being decomposed.
    Cycle(Vec<usize>),
}

impl Provenance {
    /// `edge` or `cycle:<v1>-<v2>-...`.
    pub fn label(&self) -> String {
        match self {
            Provenance::Edge(_) => "edge".to_string(),
            Provenance::Cycle(vs) => {
                let vs: Vec<String> = vs.iter().map(ToString::to_string).collect();
                format!("cycle:{}", vs.join("-"))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecomposedPrime {
    pub prime: PrimeSupport,
    pub provenance: Provenance,
}

/// A list of pairwise incomparable primes in a graph's variable context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    ctx: VarContext,
    components: Vec<DecomposedPrime>,
}

impl Decomposition {
    /// Keeps the inclusion-minimal primes (first provenance wins on ties) and
    /// sorts them by height, then lexicographically.
    fn minimalized(ctx: VarContext, mut items: Vec<DecomposedPrime>) -> Decomposition {
        items.sort_by(|a, b| prime_order(&a.prime, &b.prime));
        let mut kept: Vec<DecomposedPrime> = Vec::with_capacity(items.len());
        for item in items {
            if !kept.iter().any(|k| k.prime.is_subset_of(&item.prime)) {
                kept.push(item);
            }
        }
        Decomposition { ctx, components: kept }
    }

    pub fn ctx(&self) -> &VarContext {
        &self.ctx
    }

    pub fn components(&self) -> &[DecomposedPrime] {
        &self.components
    }

    pub fn primes(&self) -> impl Iterator<Item = PrimeSupport> + '_ {
        self.components.iter().map(|c| c.prime)
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// The intersection of all primes.
    pub fn intersection(&self) -> Result<MonomialIdeal> {
        let mut primes = self.primes();
        let first = primes.next().ok_or(Error::EmptyGenerators)?;
        primes.try_fold(first.to_ideal(&self.ctx), |acc, p| {
            acc.intersect(&p.to_ideal(&self.ctx))
        })
    }

    /// Drops one prime; used only to exercise failure paths.
    pub fn without_last(mut self) -> Decomposition {
        self.components.pop();
        self
    }
}

fn edge_primes(g: &Graph, ctx: &VarContext) -> Vec<DecomposedPrime> {
    g.edge_indices()
        .map(|e| DecomposedPrime {
            prime: PrimeSupport::new(ctx.edge_product(e)).unwrap(),
            provenance: Provenance::Edge(e),
        })
        .collect()
}

/// Height-`r` primes of the cycle `C_r`, in the cycle's own variables.
fn cycle_primes(r: usize) -> Vec<Monomial> {
    let parity = if r % 2 == 1 { Parity::Even } else { Parity::Odd };
    cycle_generators(r, parity).expect("r >= 3")
}

/// One prime `(s_e, t_e)` per edge of a tree.
pub fn tree_decomposition(g: &Graph) -> Result<Decomposition> {
    if !g.is_tree() || g.n_edges() == 0 {
        return Err(Error::NotATree);
    }
    let ctx = VarContext::for_graph(g);
    let items = edge_primes(g, &ctx);
    Ok(Decomposition::minimalized(ctx, items))
}

/// The `r` edge primes of a cycle plus its `2^(r-1)` primes of height `r`.
pub fn cycle_decomposition(g: &Graph) -> Result<Decomposition> {
    if !g.is_cycle() {
        return Err(Error::NotACycle);
    }
    let ctx = VarContext::for_graph(g);
    let vertices: Vec<usize> = (1..=g.n_vertices()).collect();
    let mut items = edge_primes(g, &ctx);
    items.extend(cycle_primes(g.n_edges()).into_iter().map(|m| DecomposedPrime {
        prime: PrimeSupport::new(m).unwrap(),
        provenance: Provenance::Cycle(vertices.clone()),
    }));
    Ok(Decomposition::minimalized(ctx, items))
}

/// Edge primes of `g` together with the height-`> 2` primes of each of its
/// simple cycles, moved into `g`'s variables.
pub fn general_decomposition(g: &Graph) -> Result<Decomposition> {
    if g.n_edges() == 0 {
        return Err(Error::EmptyEdgeSet);
    }
    let ctx = VarContext::for_graph(g);
    let mut items = edge_primes(g, &ctx);
    for cycle in enumerate_cycles(g)? {
        let map = subgraph_var_map(&cycle, g.n_edges());
        let provenance = Provenance::Cycle(cycle.parent_vertices().to_vec());
        items.extend(
            cycle_primes(cycle.graph().n_edges())
                .into_iter()
                .map(|m| DecomposedPrime {
                    prime: PrimeSupport::new(Monomial::from_vars(m.vars().map(|v| map[v]))).unwrap(),
                    provenance: provenance.clone(),
                }),
        );
    }
    Ok(Decomposition::minimalized(ctx, items))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightReport {
    /// Height → number of primes.
    pub histogram: BTreeMap<usize, usize>,
    pub max_height: usize,
    pub edge_count: usize,
    /// Some prime has height `|E|`.
    pub attains_edge_count: bool,
}

impl HeightReport {
    /// No prime is taller than `|E|`.
    pub fn within_bound(&self) -> bool {
        self.max_height <= self.edge_count
    }
}

pub fn height_classification(d: &Decomposition, g: &Graph) -> HeightReport {
    let mut histogram = BTreeMap::new();
    for p in d.primes() {
        *histogram.entry(p.height()).or_insert(0) += 1;
    }
    let max_height = histogram.keys().next_back().copied().unwrap_or(0);
    HeightReport {
        attains_edge_count: histogram.contains_key(&g.n_edges()),
        histogram,
        max_height,
        edge_count: g.n_edges(),
    }
}

/// All primes have the same height.
pub fn is_unmixed(d: &Decomposition) -> bool {
    let mut heights = d.primes().map(|p| p.height());
    match heights.next() {
        Some(h) => heights.all(|x| x == h),
        None => true,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CmReport {
    pub depth: usize,
    pub dim: usize,
    /// `depth(S/I) == dim(S/I)`.
    pub cohen_macaulay: bool,
    pub single_edge: bool,
    /// The quadrics of the Alexander dual are exactly the `s_e t_e`.
    pub dual_quadrics_are_edge_products: bool,
    pub dual_quadrics_principal: bool,
}

impl CmReport {
    /// Cohen–Macaulay exactly for a single edge, and the dual's quadric part
    /// behaves as expected.
    pub fn consistent(&self) -> bool {
        self.cohen_macaulay == self.single_edge
            && self.dual_quadrics_are_edge_products
            && self.dual_quadrics_principal == self.single_edge
    }
}

/// Computes depth and dimension of `S/I(G)` and the degree-two part of the
/// Alexander dual.
pub fn check_cm_characterization(g: &Graph, p: Prime) -> Result<CmReport> {
    let ideal = cut_ideal(g)?;
    let ctx = ideal.ctx().clone();
    let table = graded_betti(&ideal, p)?;
    let depth = invariants_from_betti(&table, ctx.num_vars())?.depth;
    let dim = ideal.krull_dimension()?;
    let dual = ideal.alexander_dual()?;
    // The dual has no generators of degree below two, so its degree-two
    // component is spanned by its quadric generators.
    let mut quadrics: Vec<Monomial> = dual.gens().iter().copied().filter(|m| m.degree() == 2).collect();
    quadrics.sort_unstable_by_key(|m| m.bits());
    let mut edge_products: Vec<Monomial> = g.edge_indices().map(|e| ctx.edge_product(e)).collect();
    edge_products.sort_unstable_by_key(|m| m.bits());
    Ok(CmReport {
        depth,
        dim,
        cohen_macaulay: depth == dim,
        single_edge: g.n_edges() == 1,
        dual_quadrics_are_edge_products: dual.gens().iter().all(|m| m.degree() >= 2) && quadrics == edge_products,
        dual_quadrics_principal: quadrics.len() == 1,
    })
}
