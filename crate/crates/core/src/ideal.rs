//! Squarefree monomial ideals: minimal generators, colon, intersection,
//! minimal primes, Alexander duality and the Stanley–Reisner face count.
//!
//! Every ideal carries its [`VarContext`]; binary operations reject operands
//! from different contexts. Generators are kept minimal, deduplicated and in
//! descending lex order, so structural equality of two values is ideal
//! equality.

use crate::error::{Error, Result};
use crate::monomial::{Monomial, VarContext};

/// Face enumeration visits `2^n` variable subsets.
pub const MAX_FACE_VARS: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ctx: VarContext,
    gens: Vec<Monomial>,
}

/// A monomial prime ideal, given by the variables generating it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeSupport {
    vars: Monomial,
}

impl PrimeSupport {
    pub fn new(vars: Monomial) -> Result<PrimeSupport> {
        if vars.is_one() {
            Err(Error::EmptyGenerators)
        } else {
            Ok(PrimeSupport { vars })
        }
    }

    pub fn vars(&self) -> Monomial {
        self.vars
    }

    pub fn height(&self) -> usize {
        self.vars.degree()
    }

    /// `I ⊆ p`: every generator of `I` uses a variable of `p`.
    pub fn contains(&self, ideal: &MonomialIdeal) -> bool {
        ideal.gens.iter().all(|g| g.meets(self.vars))
    }

    pub fn is_subset_of(&self, other: &PrimeSupport) -> bool {
        self.vars.divides(other.vars)
    }

    pub fn to_ideal(&self, ctx: &VarContext) -> MonomialIdeal {
        MonomialIdeal {
            ctx: ctx.clone(),
            gens: sorted_desc(self.vars.vars().map(Monomial::var).collect()),
        }
    }
}

/// Primes ordered by height, then lexicographically by variable index list.
pub(crate) fn prime_order(a: &PrimeSupport, b: &PrimeSupport) -> std::cmp::Ordering {
    a.height().cmp(&b.height()).then_with(|| b.vars.cmp(&a.vars))
}

fn sorted_desc(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_unstable_by(|a, b| b.cmp(a));
    gens
}

/// Removes duplicates and every monomial divisible by another one.
pub(crate) fn minimal_elements(mut items: Vec<Monomial>) -> Vec<Monomial> {
    items.sort_unstable_by_key(|m| (m.degree(), m.bits()));
    items.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(items.len());
    for m in items {
        if !kept.iter().any(|k| k.divides(m)) {
            kept.push(m);
        }
    }
    kept
}

impl MonomialIdeal {
    /// Minimalises an arbitrary generating set.
    pub fn new(ctx: VarContext, gens: Vec<Monomial>) -> Result<MonomialIdeal> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if !gens.iter().all(|&g| ctx.contains(g)) {
            return Err(Error::OutsideContext);
        }
        Ok(MonomialIdeal {
            ctx,
            gens: sorted_desc(minimal_elements(gens)),
        })
    }

    pub fn unit(ctx: VarContext) -> MonomialIdeal {
        MonomialIdeal {
            ctx,
            gens: vec![Monomial::ONE],
        }
    }

    pub fn ctx(&self) -> &VarContext {
        &self.ctx
    }

    /// Minimal generators, descending lex.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.gens == [Monomial::ONE]
    }

    /// The common degree of all generators, if there is one.
    pub fn generator_degree(&self) -> Option<usize> {
        let d = self.gens[0].degree();
        self.gens.iter().all(|g| g.degree() == d).then_some(d)
    }

    pub fn contains_monomial(&self, m: Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    fn check_same(&self, other: &MonomialIdeal) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    /// `I : w`, generated by `u / gcd(u, w)`. May be the unit ideal.
    pub fn colon_by_monomial(&self, w: Monomial) -> Result<MonomialIdeal> {
        if !self.ctx.contains(w) {
            return Err(Error::OutsideContext);
        }
        MonomialIdeal::new(self.ctx.clone(), self.gens.iter().map(|u| u.quotient(w)).collect())
    }

    /// `I ∩ J`, generated by the pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same(other)?;
        let lcms = self
            .gens
            .iter()
            .flat_map(|&u| other.gens.iter().map(move |&v| u.lcm(v)))
            .collect();
        MonomialIdeal::new(self.ctx.clone(), lcms)
    }

    /// `I + J`.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same(other)?;
        MonomialIdeal::new(self.ctx.clone(), self.gens.iter().chain(&other.gens).copied().collect())
    }

    /// Ideal equality; errors when the contexts differ.
    pub fn equals(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_same(other)?;
        Ok(self.gens == other.gens)
    }

    /// Maps variable `k` of this ideal to variable `var_map[k]` of `target`.
    pub fn embed(&self, target: &VarContext, var_map: &[usize]) -> Result<MonomialIdeal> {
        if var_map.len() != self.ctx.num_vars() || var_map.iter().any(|&v| v >= target.num_vars()) {
            return Err(Error::OutsideContext);
        }
        let gens = self
            .gens
            .iter()
            .map(|g| Monomial::from_vars(g.vars().map(|v| var_map[v])))
            .collect();
        MonomialIdeal::new(target.clone(), gens)
    }

    /// Minimal primes, i.e. the minimal transversals of the generator
    /// supports, ordered by height and then lexicographically.
    ///
    /// Transversals are built one generator at a time: a partial transversal
    /// that already meets the next support is kept, otherwise it is extended
    /// by each variable of that support; non-minimal sets are pruned after
    /// every step.
    pub fn minimal_primes(&self) -> Vec<PrimeSupport> {
        let mut supports = self.gens.clone();
        supports.sort_unstable_by_key(|g| (g.degree(), g.bits()));
        let mut partial = vec![Monomial::ONE];
        for g in supports {
            let mut next = Vec::with_capacity(partial.len());
            for t in partial {
                if t.meets(g) {
                    next.push(t);
                } else {
                    next.extend(g.vars().map(|v| t.lcm(Monomial::var(v))));
                }
            }
            partial = minimal_elements(next);
        }
        let mut primes: Vec<PrimeSupport> = partial.into_iter().map(|vars| PrimeSupport { vars }).collect();
        primes.sort_unstable_by(prime_order);
        primes
    }

    /// The Alexander dual: generated by the products of the variables of each
    /// minimal prime.
    pub fn alexander_dual(&self) -> Result<MonomialIdeal> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        MonomialIdeal::new(self.ctx.clone(), self.minimal_primes().iter().map(|p| p.vars).collect())
    }

    /// The f-vector of the Stanley–Reisner complex: entry `k` counts the
    /// variable sets of size `k` that contain no generator support.
    pub fn sr_faces(&self) -> Result<Vec<u64>> {
        let n = self.ctx.num_vars();
        if n > MAX_FACE_VARS {
            return Err(Error::Guard {
                what: "variable count for face enumeration",
                actual: n,
                limit: MAX_FACE_VARS,
            });
        }
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let mut f = vec![0u64; n + 1];
        for sigma in 0u64..1 << n {
            if self.gens.iter().all(|g| g.bits() & !sigma != 0) {
                f[sigma.count_ones() as usize] += 1;
            }
        }
        while f.last() == Some(&0) {
            f.pop();
        }
        Ok(f)
    }

    /// `dim S/I`: the size of the largest face.
    pub fn krull_dimension(&self) -> Result<usize> {
        Ok(self.sr_faces()?.len() - 1)
    }

    /// `e(S/I)`: the number of faces of maximal size.
    pub fn multiplicity(&self) -> Result<u64> {
        Ok(*self.sr_faces()?.last().unwrap())
    }
}
