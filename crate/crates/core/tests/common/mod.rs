//! Brute-force oracles shared by the integration suites. Nothing here calls
//! into the library's algorithms; graphs are plain `(n, edges)` pairs and
//! monomials are variable bitsets with `s_e = e`, `t_e = m + e`.

#![allow(dead_code)]

use std::collections::BTreeSet;

pub type Edges = Vec<(usize, usize)>;

/// Every labelled simple graph on `n` vertices, edges over the lex pair list.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Edges> {
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &p)| p)
            .collect()
    })
}

/// Depth-first reachability from vertex 1.
pub fn is_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut seen = vec![false; n + 1];
    let mut stack = vec![1];
    seen[1] = true;
    while let Some(v) = stack.pop() {
        for &(a, b) in edges {
            let w = if a == v {
                b
            } else if b == v {
                a
            } else {
                continue;
            };
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen[1..].iter().all(|&x| x)
}

pub fn connected_graphs(n: usize) -> Vec<Edges> {
    all_graphs(n).filter(|e| is_connected(n, e)).collect()
}

/// Drops every monomial divisible by another one.
pub fn minimalize(gens: impl IntoIterator<Item = u64>) -> BTreeSet<u64> {
    let all: BTreeSet<u64> = gens.into_iter().collect();
    all.iter()
        .copied()
        .filter(|&g| !all.iter().any(|&h| h != g && h & g == h))
        .collect()
}

/// One monomial per 2-colouring of the vertices (both colourings of a
/// partition give the same monomial). `edges` need not be connected.
pub fn cut_generators(n: usize, edges: &[(usize, usize)]) -> BTreeSet<u64> {
    let m = edges.len();
    let mut out = BTreeSet::new();
    for colour in 0u32..1 << n {
        let mut mono = 0u64;
        for (e, &(a, b)) in edges.iter().enumerate() {
            let cut = (colour >> (a - 1) & 1) != (colour >> (b - 1) & 1);
            mono |= 1 << if cut { e } else { m + e };
        }
        out.insert(mono);
    }
    minimalize(out)
}

/// `I : w`.
pub fn colon(gens: &BTreeSet<u64>, w: u64) -> BTreeSet<u64> {
    minimalize(gens.iter().map(|&g| g & !w))
}

pub fn intersect(a: &BTreeSet<u64>, b: &BTreeSet<u64>) -> BTreeSet<u64> {
    minimalize(a.iter().flat_map(|&x| b.iter().map(move |&y| x | y)))
}

/// Minimal transversals by exhaustive search over all variable subsets.
pub fn minimal_transversals(gens: &BTreeSet<u64>, num_vars: usize) -> BTreeSet<u64> {
    let total = 1usize << num_vars;
    let hits: Vec<bool> = (0..total as u64).map(|s| gens.iter().all(|&g| g & s != 0)).collect();
    (0..total as u64)
        .filter(|&s| hits[s as usize] && (0..num_vars).all(|v| s >> v & 1 == 0 || !hits[(s & !(1 << v)) as usize]))
        .collect()
}

/// Sizes of all subsets that contain no generator.
pub fn faces(gens: &BTreeSet<u64>, num_vars: usize) -> Vec<u64> {
    let mut f = vec![0u64; num_vars + 1];
    for s in 0u64..1 << num_vars {
        if gens.iter().all(|&g| g & !s != 0) {
            f[s.count_ones() as usize] += 1;
        }
    }
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

/// Edge subsets forming a single cycle: connected and 2-regular on the
/// vertices they touch.
pub fn cycle_edge_sets(n: usize, edges: &[(usize, usize)]) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    for mask in 1u64..1 << edges.len() {
        let chosen: Vec<(usize, usize)> = edges
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        if chosen.len() < 3 {
            continue;
        }
        let mut degree = vec![0usize; n + 1];
        for &(a, b) in &chosen {
            degree[a] += 1;
            degree[b] += 1;
        }
        if degree.iter().any(|&d| d != 0 && d != 2) {
            continue;
        }
        // Relabel the touched vertices and test connectivity.
        let touched: Vec<usize> = (1..=n).filter(|&v| degree[v] == 2).collect();
        let index = |v: usize| touched.iter().position(|&t| t == v).unwrap() + 1;
        let relabelled: Vec<(usize, usize)> = chosen.iter().map(|&(a, b)| (index(a), index(b))).collect();
        if is_connected(touched.len(), &relabelled) {
            out.insert(mask);
        }
    }
    out
}

/// Ranks of the reduced homology of the complex of subsets of `sigma`
/// containing no generator, over GF(2): entry `k` is `dim H~_{k-1}`.
pub fn reduced_homology_gf2(gens: &BTreeSet<u64>, sigma: u64) -> Vec<usize> {
    let d = sigma.count_ones() as usize;
    let vars: Vec<u64> = (0..64).filter(|v| sigma >> v & 1 == 1).collect();
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); d + 1];
    for sub in 0u64..1 << d {
        let face: u64 = vars
            .iter()
            .enumerate()
            .filter(|(k, _)| sub >> k & 1 == 1)
            .map(|(_, &v)| 1 << v)
            .sum();
        if gens.iter().all(|&g| g & !face != 0) {
            by_size[face.count_ones() as usize].push(face);
        }
    }
    // rank of the boundary from size k to size k-1 faces, k >= 1
    let rank = |k: usize| -> usize {
        let lower = &by_size[k - 1];
        let mut rows: Vec<Vec<bool>> = by_size[k]
            .iter()
            .map(|&f| lower.iter().map(|&l| l & f == l).collect())
            .collect();
        gf2_rank(&mut rows)
    };
    let ranks: Vec<usize> = (0..=d + 1)
        .map(|k| {
            if k == 0 || k > d || by_size[k].is_empty() {
                0
            } else {
                rank(k)
            }
        })
        .collect();
    (0..=d)
        .map(|k| by_size[k].len() - ranks[k] - ranks.get(k + 1).copied().unwrap_or(0))
        .collect()
}

fn gf2_rank(rows: &mut [Vec<bool>]) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c]) else {
            continue;
        };
        rows.swap(rank, p);
        for r in 0..rows.len() {
            if r != rank && rows[r][c] {
                let pivot = rows[rank].clone();
                for (x, y) in rows[r].iter_mut().zip(pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Graded Betti numbers of `S/I` over GF(2) by Hochster's formula on every
/// subset of the variables: `(i, j) -> value`.
pub fn betti_gf2(gens: &BTreeSet<u64>, num_vars: usize) -> Vec<(usize, usize, u64)> {
    let mut table = std::collections::BTreeMap::new();
    for sigma in 0u64..1 << num_vars {
        let j = sigma.count_ones() as usize;
        for (k, &h) in reduced_homology_gf2(gens, sigma).iter().enumerate() {
            // H~_{k-1} contributes to i = j - k.
            if h > 0 && k <= j {
                *table.entry((j - k, j)).or_insert(0u64) += h as u64;
            }
        }
    }
    table.into_iter().map(|((i, j), v)| (i, j, v)).collect()
}
