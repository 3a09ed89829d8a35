//! Squarefree monomials as bit sets, and the variable contexts they live in.

use std::cmp::Ordering;
use std::fmt;

use crate::graph::{EdgeIndex, Graph};

/// A squarefree monomial: bit `k` set means variable `k` divides it.
///
/// The ordering is lexicographic with variable 0 the largest, so for an edge
/// context it reads `s_{e_0} > s_{e_1} > ... > t_{e_0} > t_{e_1} > ...`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(u64);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub const fn from_bits(bits: u64) -> Monomial {
        Monomial(bits)
    }

    pub fn var(index: usize) -> Monomial {
        Monomial(1 << index)
    }

    pub fn from_vars(vars: impl IntoIterator<Item = usize>) -> Monomial {
        Monomial(vars.into_iter().fold(0, |acc, v| acc | 1 << v))
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, var: usize) -> bool {
        self.0 >> var & 1 == 1
    }

    pub fn divides(self, other: Monomial) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn gcd(self, other: Monomial) -> Monomial {
        Monomial(self.0 & other.0)
    }

    pub fn lcm(self, other: Monomial) -> Monomial {
        Monomial(self.0 | other.0)
    }

    /// `self / gcd(self, other)`.
    pub fn quotient(self, other: Monomial) -> Monomial {
        Monomial(self.0 & !other.0)
    }

    /// True when the supports share a variable.
    pub fn meets(self, other: Monomial) -> bool {
        self.0 & other.0 != 0
    }

    /// Variable indices in increasing order.
    pub fn vars(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            Ordering::Equal
        } else if self.0 & diff & diff.wrapping_neg() != 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The polynomial ring a monomial ideal lives in.
///
/// For a graph with edges `e_0, ..., e_{m-1}`, variable `k` is `s_{e_k}` and
/// variable `m + k` is `t_{e_k}`. Plain contexts with variables `x1..xn` are
/// used for ideals that do not come from a graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VarContext {
    kind: Kind,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Kind {
    Edges(Vec<(usize, usize)>),
    Plain(usize),
}

impl VarContext {
    pub fn for_graph(g: &Graph) -> VarContext {
        VarContext {
            kind: Kind::Edges(g.edges().to_vec()),
        }
    }

    /// `n` anonymous variables `x1, ..., xn`.
    pub fn plain(n: usize) -> VarContext {
        assert!(n <= 64, "at most 64 variables");
        VarContext { kind: Kind::Plain(n) }
    }

    /// Number of edges, zero for plain contexts.
    pub fn n_edges(&self) -> usize {
        match &self.kind {
            Kind::Edges(e) => e.len(),
            Kind::Plain(_) => 0,
        }
    }

    pub fn num_vars(&self) -> usize {
        match &self.kind {
            Kind::Edges(e) => 2 * e.len(),
            Kind::Plain(n) => *n,
        }
    }

    /// The product of all variables.
    pub fn all_vars(&self) -> Monomial {
        Monomial(low_mask(self.num_vars()))
    }

    pub fn s_var(&self, e: EdgeIndex) -> usize {
        e.0
    }

    pub fn t_var(&self, e: EdgeIndex) -> usize {
        self.n_edges() + e.0
    }

    /// `s_e * t_e`.
    pub fn edge_product(&self, e: EdgeIndex) -> Monomial {
        Monomial::var(self.s_var(e)).lcm(Monomial::var(self.t_var(e)))
    }

    pub fn s_part(&self, m: Monomial) -> Monomial {
        Monomial(m.0 & low_mask(self.n_edges()))
    }

    pub fn t_part(&self, m: Monomial) -> Monomial {
        Monomial(m.0 >> self.n_edges() << self.n_edges() & low_mask(self.num_vars()))
    }

    pub fn s_degree(&self, m: Monomial) -> usize {
        self.s_part(m).degree()
    }

    pub fn t_degree(&self, m: Monomial) -> usize {
        self.t_part(m).degree()
    }

    /// Swaps `s_e` and `t_e` for every edge.
    pub fn swap_st(&self, m: Monomial) -> Monomial {
        let k = self.n_edges();
        Monomial(self.s_part(m).0 << k | self.t_part(m).0 >> k)
    }

    pub fn name(&self, var: usize) -> String {
        match &self.kind {
            Kind::Edges(e) => {
                let m = e.len();
                let (letter, (a, b)) = if var < m { ('s', e[var]) } else { ('t', e[var - m]) };
                format!("{letter}_{{{a},{b}}}")
            }
            Kind::Plain(_) => format!("x{}", var + 1),
        }
    }

    pub fn names(&self) -> Vec<String> {
        (0..self.num_vars()).map(|v| self.name(v)).collect()
    }

    pub fn var_names(&self, m: Monomial) -> Vec<String> {
        m.vars().map(|v| self.name(v)).collect()
    }

    /// Inverse of [`VarContext::name`].
    pub fn var_by_name(&self, name: &str) -> Option<usize> {
        (0..self.num_vars()).find(|&v| self.name(v) == name)
    }

    pub fn contains(&self, m: Monomial) -> bool {
        m.0 & !low_mask(self.num_vars()) == 0
    }

    /// Factors in variable order, `1` for the empty monomial.
    pub fn render(&self, m: Monomial) -> String {
        if m.is_one() {
            "1".to_string()
        } else {
            m.vars().map(|v| self.name(v)).collect()
        }
    }

    pub fn display(&self, m: Monomial) -> impl fmt::Display + '_ {
        struct Shown<'a>(&'a VarContext, Monomial);
        impl fmt::Display for Shown<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0.render(self.1))
            }
        }
        Shown(self, m)
    }
}

pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}
