//! Partitions, cuts and the monomial cut ideal of a graph.

use crate::error::{Error, Result};
use crate::graph::{components_without_edge, EdgeIndex, Graph, Subgraph};
use crate::ideal::MonomialIdeal;
use crate::monomial::{low_mask, Monomial, VarContext};

/// Partition enumeration produces `2^(n-1)` items.
pub const MAX_PARTITION_VERTICES: usize = 24;

/// An unordered bipartition `A | B` of the vertex set, stored by the side
/// that does not contain vertex 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    side_b: u32,
}

impl Partition {
    /// Canonicalises an arbitrary side: if it contains vertex 1 the
    /// complement within `1..=n` is stored instead.
    pub fn from_side(n: usize, side: impl IntoIterator<Item = usize>) -> Partition {
        let mut bits = side.into_iter().fold(0u32, |acc, v| acc | 1 << (v - 1));
        if bits & 1 == 1 {
            bits = !bits & low_mask(n) as u32;
        }
        Partition { side_b: bits }
    }

    pub fn side_b(&self) -> impl Iterator<Item = usize> + '_ {
        Monomial::from_bits(self.side_b as u64).vars().map(|v| v + 1)
    }

    pub fn in_b(&self, v: usize) -> bool {
        self.side_b >> (v - 1) & 1 == 1
    }
}

/// All `2^(n-1)` partitions, ordered by side `B` read as a binary number.
pub fn enumerate_partitions(g: &Graph) -> Result<Vec<Partition>> {
    let n = g.n_vertices();
    if n > MAX_PARTITION_VERTICES {
        return Err(Error::Guard {
            what: "vertex count for partition enumeration",
            actual: n,
            limit: MAX_PARTITION_VERTICES,
        });
    }
    Ok((0u32..1 << (n - 1))
        .map(|half| Partition { side_b: half << 1 })
        .collect())
}

/// Edges with exactly one endpoint in `B`.
pub fn cut_set(g: &Graph, p: Partition) -> Vec<EdgeIndex> {
    g.edge_indices()
        .filter(|&e| {
            let (a, b) = g.edge(e);
            p.in_b(a) != p.in_b(b)
        })
        .collect()
}

/// `u_{A|B}`: `s_e` for cut edges, `t_e` for the rest.
pub fn cut_monomial(g: &Graph, p: Partition) -> Monomial {
    let ctx = VarContext::for_graph(g);
    let cut = cut_set(g, p);
    Monomial::from_vars(g.edge_indices().map(|e| {
        if cut.binary_search(&e).is_ok() {
            ctx.s_var(e)
        } else {
            ctx.t_var(e)
        }
    }))
}

/// The monomial cut ideal `I(G)` in the graph's own variable context.
///
/// The single-vertex graph has the empty partition only, so its cut ideal is
/// the unit ideal.
pub fn cut_ideal(g: &Graph) -> Result<MonomialIdeal> {
    let gens = enumerate_partitions(g)?
        .into_iter()
        .map(|p| cut_monomial(g, p))
        .collect();
    MonomialIdeal::new(VarContext::for_graph(g), gens)
}

/// Parity of an s-degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(k: usize) -> Parity {
        if k.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Every monomial using exactly one of `s_e`, `t_e` for each of `m` edges,
/// in descending lex order.
pub fn one_per_edge(m: usize) -> Vec<Monomial> {
    let full = low_mask(m);
    let mut out: Vec<Monomial> = (0..=full).map(|s| Monomial::from_bits(s | (!s & full) << m)).collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// The generators of the path `T_r`: all `2^r` one-per-edge monomials.
pub fn path_generators(r: usize) -> Result<Vec<Monomial>> {
    if r < 1 {
        return Err(Error::InvalidSize {
            value: r,
            reason: "a path needs at least one edge",
        });
    }
    Ok(one_per_edge(r))
}

/// One-per-edge monomials over `r` edges whose s-degree has the given parity.
/// Even parity gives the generators of the cycle `C_r`.
pub fn cycle_generators(r: usize, parity: Parity) -> Result<Vec<Monomial>> {
    if r < 3 {
        return Err(Error::InvalidSize {
            value: r,
            reason: "a cycle needs at least three edges",
        });
    }
    let s_mask = low_mask(r);
    Ok(one_per_edge(r)
        .into_iter()
        .filter(|m| Parity::of((m.bits() & s_mask).count_ones() as usize) == parity)
        .collect())
}

/// Variable map from a subgraph's context into its parent's: `s_e` of the
/// subgraph goes to `s` of the parent edge, likewise for `t`.
pub fn subgraph_var_map(sub: &Subgraph, parent_edges: usize) -> Vec<usize> {
    let k = sub.edge_map().len();
    (0..2 * k)
        .map(|v| {
            let parent = sub.edge_map()[v % k].0;
            if v < k {
                parent
            } else {
                parent_edges + parent
            }
        })
        .collect()
}

/// `I(H)` for a subgraph `H`, written in the parent graph's variables.
pub fn embedded_cut_ideal(sub: &Subgraph, parent: &Graph) -> Result<MonomialIdeal> {
    let map = subgraph_var_map(sub, parent.n_edges());
    cut_ideal(sub.graph())?.embed(&VarContext::for_graph(parent), &map)
}

/// Drops the variables of parent edges absent from the subgraph and rewrites
/// the rest in the subgraph's own variables.
pub fn restrict_to_subgraph(sub: &Subgraph, parent_edges: usize, m: Monomial) -> Monomial {
    let map = subgraph_var_map(sub, parent_edges);
    Monomial::from_vars(
        map.iter()
            .enumerate()
            .filter(|&(_, &parent)| m.contains(parent))
            .map(|(own, _)| own),
    )
}

/// `I(G - e)` in `G`'s variables.
///
/// A disconnected `G - e` has the product of its components' ideals as cut
/// ideal; the components use disjoint variables, so that product is their
/// intersection. With no edges left the result is the unit ideal.
pub fn cut_ideal_without_edge(g: &Graph, e: EdgeIndex) -> Result<MonomialIdeal> {
    let ctx = VarContext::for_graph(g);
    components_without_edge(g, e)?
        .iter()
        .try_fold(MonomialIdeal::unit(ctx), |acc, part| {
            acc.intersect(&embedded_cut_ideal(part, g)?)
        })
}
