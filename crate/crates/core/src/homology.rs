//! Graded Betti numbers of `S/I` through Hochster's formula, the invariants
//! read off a Betti table, and linear quotients.
//!
//! Hochster's formula gives, for a squarefree monomial ideal `I` with
//! Stanley–Reisner complex `Δ`,
//!
//! ```text
//! β_{i,σ}(S/I) = dim H̃_{|σ|-i-1}(Δ_σ; k)
//! ```
//!
//! where `Δ_σ` is the restriction of `Δ` to the variable set `σ`. Homology is
//! computed over a prime field by ranking boundary matrices. Multidegrees that
//! are not unions of generator supports are skipped: they are not in the lcm
//! lattice, so no Betti number lives there.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{minimal_elements, MonomialIdeal};
use crate::monomial::Monomial;

/// Restricted homology enumerates all faces inside `σ`.
pub const MAX_HOMOLOGY_VARS: usize = 16;
/// Betti tables visit `2^n` multidegrees.
pub const MAX_BETTI_VARS: usize = 14;

/// Characteristic of the coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Prime(u32);

impl Prime {
    pub const TWO: Prime = Prime(2);

    /// Accepts primes below `2^31`.
    pub fn new(p: u32) -> Result<Prime> {
        let is_prime = (2..1 << 31).contains(&p) && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
        if is_prime {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl Default for Prime {
    fn default() -> Self {
        Prime::TWO
    }
}

/// Reduced homology ranks of the Stanley–Reisner complex of `I` restricted
/// to `σ`, over the field with `p` elements.
///
/// Entry `k` of the result is the rank of `H̃_{k-1}`, for `k = 0..=|σ|`. The
/// restriction to `σ = ∅` is the complex `{∅}`, whose only homology is
/// `H̃_{-1}` of rank one.
pub fn restricted_homology_ranks(ideal: &MonomialIdeal, sigma: Monomial, p: Prime) -> Result<Vec<usize>> {
    let n = ideal.ctx().num_vars();
    if n > MAX_HOMOLOGY_VARS {
        return Err(Error::Guard {
            what: "variable count for homology",
            actual: n,
            limit: MAX_HOMOLOGY_VARS,
        });
    }
    if !ideal.ctx().contains(sigma) {
        return Err(Error::OutsideContext);
    }
    Ok(restricted_ranks(ideal.gens(), sigma, p))
}

fn restricted_ranks(gens: &[Monomial], sigma: Monomial, p: Prime) -> Vec<usize> {
    let size = sigma.degree();
    let faces = faces_by_size(gens, sigma.bits());
    let mut boundary_ranks = vec![0usize; size + 2];
    for s in 1..=size {
        if faces[s].is_empty() {
            break;
        }
        boundary_ranks[s] = boundary_rank(&faces[s], &faces[s - 1], p);
    }
    (0..=size)
        .map(|s| faces[s].len() - boundary_ranks[s] - boundary_ranks[s + 1])
        .collect()
}

/// Faces of `Δ_σ` grouped by size, each group sorted.
fn faces_by_size(gens: &[Monomial], sigma: u64) -> Vec<Vec<u64>> {
    let relevant: Vec<u64> = gens.iter().map(|g| g.bits()).filter(|&g| g & !sigma == 0).collect();
    let mut faces = vec![Vec::new(); sigma.count_ones() as usize + 1];
    // Walk the submasks of σ.
    let mut tau = sigma;
    loop {
        if relevant.iter().all(|&g| g & !tau != 0) {
            faces[tau.count_ones() as usize].push(tau);
        }
        if tau == 0 {
            break;
        }
        tau = (tau - 1) & sigma;
    }
    for group in &mut faces {
        group.sort_unstable();
    }
    faces
}

/// Rank of the boundary map from faces of size `s` to faces of size `s - 1`.
fn boundary_rank(upper: &[u64], lower: &[u64], p: Prime) -> usize {
    let index = |f: u64| lower.binary_search(&f).expect("faces are closed under removal");
    if p.0 == 2 {
        let words = lower.len().div_ceil(64);
        let mut elim = Gf2Eliminator::new(lower.len());
        for &face in upper {
            let mut row = vec![0u64; words];
            for v in Monomial::from_bits(face).vars() {
                let c = index(face & !(1 << v));
                row[c / 64] |= 1 << (c % 64);
            }
            elim.insert(row);
        }
        elim.rank
    } else {
        let mut elim = GfpEliminator::new(lower.len(), p.0);
        for &face in upper {
            let mut row = vec![0u32; lower.len()];
            for (pos, v) in Monomial::from_bits(face).vars().enumerate() {
                let c = index(face & !(1 << v));
                row[c] = if pos % 2 == 0 { 1 } else { p.0 - 1 };
            }
            elim.insert(row);
        }
        elim.rank
    }
}

/// Incremental row reduction over GF(2), pivoting on the lowest set column.
struct Gf2Eliminator {
    pivots: Vec<Option<Vec<u64>>>,
    rank: usize,
}

impl Gf2Eliminator {
    fn new(cols: usize) -> Self {
        Gf2Eliminator {
            pivots: vec![None; cols],
            rank: 0,
        }
    }

    fn insert(&mut self, mut row: Vec<u64>) {
        while let Some(c) = lowest_bit(&row) {
            match &self.pivots[c] {
                Some(pivot) => row.iter_mut().zip(pivot).for_each(|(a, b)| *a ^= b),
                None => {
                    self.pivots[c] = Some(row);
                    self.rank += 1;
                    return;
                }
            }
        }
    }
}

fn lowest_bit(row: &[u64]) -> Option<usize> {
    row.iter()
        .position(|&w| w != 0)
        .map(|i| i * 64 + row[i].trailing_zeros() as usize)
}

/// Incremental row reduction over GF(p); pivot rows are normalised to a
/// leading one.
struct GfpEliminator {
    pivots: Vec<Option<Vec<u32>>>,
    p: u64,
    rank: usize,
}

impl GfpEliminator {
    fn new(cols: usize, p: u32) -> Self {
        GfpEliminator {
            pivots: vec![None; cols],
            p: p as u64,
            rank: 0,
        }
    }

    fn insert(&mut self, mut row: Vec<u32>) {
        let p = self.p;
        while let Some(c) = row.iter().position(|&x| x != 0) {
            let lead = row[c] as u64;
            match &self.pivots[c] {
                Some(pivot) => {
                    for (a, &b) in row.iter_mut().zip(pivot).skip(c) {
                        *a = ((*a as u64 + (p - lead) * b as u64) % p) as u32;
                    }
                }
                None => {
                    let inv = mod_pow(lead, p - 2, p);
                    row.iter_mut().skip(c).for_each(|a| *a = (*a as u64 * inv % p) as u32);
                    self.pivots[c] = Some(row);
                    self.rank += 1;
                    return;
                }
            }
        }
    }
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// Graded Betti numbers `β_{i,j}(S/I)`; only nonzero entries are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    characteristic: Prime,
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn from_entries(characteristic: Prime, entries: impl IntoIterator<Item = ((usize, usize), u64)>) -> Self {
        let mut map = BTreeMap::new();
        for (key, value) in entries {
            if value != 0 {
                *map.entry(key).or_insert(0) += value;
            }
        }
        BettiTable {
            characteristic,
            entries: map,
        }
    }

    pub fn characteristic(&self) -> Prime {
        self.characteristic
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries sorted by `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &v)| (i, j, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `β_i(S/I) = Σ_j β_{i,j}(S/I)`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries().filter(|e| e.0 == i).map(|e| e.2).sum()
    }

    /// Largest homological index with a nonzero entry.
    pub fn max_index(&self) -> Option<usize> {
        self.entries.keys().map(|k| k.0).max()
    }

    /// `β_i(I) = β_{i+1}(S/I)` for `i = 0..projdim(I)`.
    pub fn ideal_totals(&self) -> Vec<u64> {
        let top = self.max_index().unwrap_or(0);
        (1..=top).map(|i| self.total(i)).collect()
    }
}

/// Computes `β_{i,j}(S/I)` over the field with `p` elements.
pub fn graded_betti(ideal: &MonomialIdeal, p: Prime) -> Result<BettiTable> {
    betti_over(ideal, p, true)
}

pub(crate) fn betti_over(ideal: &MonomialIdeal, p: Prime, lcm_only: bool) -> Result<BettiTable> {
    let n = ideal.ctx().num_vars();
    if n > MAX_BETTI_VARS {
        return Err(Error::Guard {
            what: "variable count for Betti numbers",
            actual: n,
            limit: MAX_BETTI_VARS,
        });
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let gens = ideal.gens();
    let in_lcm_lattice = |sigma: u64| {
        let covered = gens
            .iter()
            .map(|g| g.bits())
            .filter(|&g| g & !sigma == 0)
            .fold(0, |acc, g| acc | g);
        covered == sigma
    };
    let per_sigma: Vec<Vec<((usize, usize), u64)>> = (0u64..1 << n)
        .into_par_iter()
        .filter(|&sigma| !lcm_only || in_lcm_lattice(sigma))
        .map(|sigma| {
            let size = sigma.count_ones() as usize;
            restricted_ranks(gens, Monomial::from_bits(sigma), p)
                .into_iter()
                .enumerate()
                .filter(|&(_, h)| h > 0)
                .map(|(s, h)| ((size - s, size), h as u64))
                .collect()
        })
        .collect();
    Ok(BettiTable::from_entries(p, per_sigma.into_iter().flatten()))
}

/// Projective dimension, regularity and depth of `S/I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Invariants {
    pub projdim: usize,
    pub reg: usize,
    pub depth: usize,
}

/// Reads the invariants off a table of `S/I`; depth comes from the
/// Auslander–Buchsbaum formula.
pub fn invariants_from_betti(table: &BettiTable, num_vars: usize) -> Result<Invariants> {
    let projdim = table.max_index().ok_or(Error::EmptyTable)?;
    let reg = table.entries().map(|(i, j, _)| j - i).max().unwrap_or(0);
    Ok(Invariants {
        projdim,
        reg,
        depth: num_vars.saturating_sub(projdim),
    })
}

/// `I` generated in degree `d` has a linear resolution: every
/// `β_{i,j}(S/I)` with `i ≥ 1` sits at `j = d + i - 1`.
pub fn has_linear_resolution(table: &BettiTable, d: usize) -> bool {
    table.entries().all(|(i, j, _)| i == 0 || j == d + i - 1)
}

/// At most one internal degree per homological index.
pub fn is_pure(table: &BettiTable) -> bool {
    table.entries().zip(table.entries().skip(1)).all(|(a, b)| a.0 != b.0)
}

/// `β_{2,d+1}(S/I) ≠ 0`: some first syzygy is linear.
pub fn has_linear_first_syzygies(table: &BettiTable, d: usize) -> bool {
    table.get(2, d + 1) != 0
}

/// Every first syzygy is linear: `β_{2,j}(S/I) ≠ 0` only for `j = d + 1`.
pub fn has_only_linear_first_syzygies(table: &BettiTable, d: usize) -> bool {
    table.entries().all(|(i, j, _)| i != 2 || j == d + 1)
}

/// A generator order with linear quotients and the colon generators that
/// witness it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearQuotientsCertificate {
    order: Vec<Monomial>,
    sets: Vec<Vec<usize>>,
}

impl LinearQuotientsCertificate {
    pub fn order(&self) -> &[Monomial] {
        &self.order
    }

    /// `set(u_k)`: the variables generating `(u_1, ..., u_{k-1}) : u_k`.
    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    /// `r_k = |set(u_k)|`, with `r_1 = 0`.
    pub fn set_sizes(&self) -> Vec<usize> {
        self.sets.iter().map(Vec::len).collect()
    }

    /// Re-checks the defining exchange condition: for all `j < k` there is
    /// `l < k` with `u_l / gcd(u_l, u_k)` a single variable dividing
    /// `u_j / gcd(u_j, u_k)`. Also checks the stored sets.
    pub fn verify(&self) -> bool {
        let u = &self.order;
        let exchange = (1..u.len()).all(|k| {
            (0..k).all(|j| {
                let target = u[j].quotient(u[k]);
                (0..k).any(|l| {
                    let q = u[l].quotient(u[k]);
                    q.degree() == 1 && q.divides(target)
                })
            })
        });
        let sets_match = (0..u.len()).all(|k| {
            let colon = minimal_elements((0..k).map(|j| u[j].quotient(u[k])).collect());
            let vars: Vec<usize> = colon.iter().flat_map(|m| m.vars()).collect();
            colon.iter().all(|m| m.degree() == 1) && {
                let mut vars = vars;
                vars.sort_unstable();
                vars == self.sets[k]
            }
        });
        exchange && sets_match
    }
}

/// Tests whether the descending lex order of the generators has linear
/// quotients. `None` means this particular order fails; other orders are not
/// searched.
pub fn linear_quotients_certificate(ideal: &MonomialIdeal) -> Result<Option<LinearQuotientsCertificate>> {
    if ideal.generator_degree().is_none() {
        return Err(Error::MixedDegrees);
    }
    let order = ideal.gens().to_vec();
    let mut sets = Vec::with_capacity(order.len());
    for k in 0..order.len() {
        let colon = minimal_elements((0..k).map(|j| order[j].quotient(order[k])).collect());
        if colon.iter().any(|m| m.degree() != 1) {
            return Ok(None);
        }
        let mut vars: Vec<usize> = colon.iter().flat_map(|m| m.vars()).collect();
        vars.sort_unstable();
        sets.push(vars);
    }
    Ok(Some(LinearQuotientsCertificate { order, sets }))
}

/// `β_i(I) = Σ_k C(r_k, i)`, the first generator included with `r_1 = 0`.
pub fn betti_from_linear_quotients(cert: &LinearQuotientsCertificate) -> Vec<u64> {
    let sizes = cert.set_sizes();
    let top = sizes.iter().copied().max().unwrap_or(0);
    (0..=top).map(|i| sizes.iter().map(|&r| binomial(r, i)).sum()).collect()
}

/// `β_i(I(G)) = 2^(|E|-i) · C(|E|, i)` for a tree with `edges` edges.
pub fn tree_betti_formula(edges: usize, i: usize) -> Result<u64> {
    if i > edges {
        return Err(Error::InvalidSize {
            value: i,
            reason: "homological index exceeds the edge count",
        });
    }
    Ok((1u64 << (edges - i)) * binomial(edges, i))
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k.min(n - k)).fold(1u64, |acc, t| acc * (n - t) as u64 / (t + 1) as u64)
}

/// `reg(S/I)` as the projective dimension of the ideal `I^∨`.
pub fn reg_via_dual(ideal: &MonomialIdeal, p: Prime) -> Result<usize> {
    let dual = ideal.alexander_dual()?;
    let table = graded_betti(&dual, p)?;
    Ok(table.max_index().ok_or(Error::EmptyTable)? - 1)
}
