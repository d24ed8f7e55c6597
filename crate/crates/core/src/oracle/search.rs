//! n-cluster tilting subcategories by definition, and exhaustive search for
//! them.

use fixedbitset::FixedBitSet;

use super::ext::ExtTable;
use super::kupisch::KupischAlgebra;
use super::resolution::{single, tau_n_inv_of, tau_n_of};
use crate::algebra::ModCoord;
use crate::error::{Error, Result};
use crate::modset::ModSet;

/// Default limit on the number of complete candidate subsets examined.
pub const DEFAULT_BUDGET: u64 = 1 << 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub budget: u64,
    /// Reject candidates on which `tau_n` and `tau_n^-` are not mutually
    /// inverse bijections between nonprojective and noninjective members
    /// before running the full perpendicularity check.
    pub bijection_pruning: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: DEFAULT_BUDGET,
            bijection_pruning: true,
        }
    }
}

/// Outcome of a search together with its cost.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub found: Vec<ModSet>,
    /// Complete candidate subsets examined.
    pub candidates: u64,
}

// Left and right Ext supports in degrees 1..n-1, as bitsets over the
// table's module order.
struct Supports {
    left: Vec<FixedBitSet>,
    right: Vec<FixedBitSet>,
}

impl Supports {
    #[allow(clippy::needless_range_loop)]
    fn new(table: &ExtTable, n: usize) -> Self {
        let count = table.modules().len();
        let mut left = vec![FixedBitSet::with_capacity(count); count];
        let mut right = vec![FixedBitSet::with_capacity(count); count];
        for a in 0..count {
            for b in 0..count {
                if table.ext_between(a, b, n) {
                    left[a].insert(b);
                    right[b].insert(a);
                }
            }
        }
        Supports { left, right }
    }

    fn conflicts(&self, a: usize) -> FixedBitSet {
        let mut c = self.left[a].clone();
        c.union_with(&self.right[a]);
        c
    }

    // C equals both of its perpendicular categories.
    fn is_nct(&self, c: &FixedBitSet) -> bool {
        let count = c.len();
        let mut hit_left = FixedBitSet::with_capacity(count);
        let mut hit_right = FixedBitSet::with_capacity(count);
        for a in c.ones() {
            hit_left.union_with(&self.left[a]);
            hit_right.union_with(&self.right[a]);
        }
        (0..count).all(|x| c.contains(x) != hit_left.contains(x) && c.contains(x) != hit_right.contains(x))
    }
}

fn to_bits(table: &ExtTable, c: &ModSet) -> Result<FixedBitSet> {
    let mut bits = FixedBitSet::with_capacity(table.modules().len());
    for x in c {
        bits.insert(table.index_of(x).ok_or(Error::NotAModule(x))?);
    }
    Ok(bits)
}

fn to_modset(table: &ExtTable, bits: &FixedBitSet) -> ModSet {
    bits.ones().map(|k| table.modules()[k]).collect()
}

/// Whether `c` equals both `{X : Ext^i(C, X) = 0}` and `{X : Ext^i(X, C) = 0}`
/// for `0 < i < n`.
pub fn is_nct_with(table: &ExtTable, c: &ModSet, n: usize) -> Result<bool> {
    if n == 0 {
        return Err(Error::InvalidOrder { n, min: 1 });
    }
    Ok(Supports::new(table, n).is_nct(&to_bits(table, c)?))
}

pub fn is_nct(alg: &KupischAlgebra, c: &ModSet, n: usize) -> Result<bool> {
    is_nct_with(&ExtTable::new(alg), c, n)
}

/// Exhaustive search over one algebra; the Ext table is computed once and
/// shared by searches for different `n`.
pub struct NctSearcher {
    table: ExtTable,
    projective: FixedBitSet,
    injective: FixedBitSet,
}

impl NctSearcher {
    pub fn new(alg: &KupischAlgebra) -> Self {
        Self::from_table(ExtTable::new(alg))
    }

    pub fn from_table(table: ExtTable) -> Self {
        let count = table.modules().len();
        let mark = |mods: Vec<ModCoord>| {
            let mut bits = FixedBitSet::with_capacity(count);
            for x in mods {
                bits.insert(table.index_of(x).expect("projectives are indecomposable"));
            }
            bits
        };
        let projective = mark(table.algebra().projectives());
        let injective = mark(table.algebra().injectives());
        NctSearcher {
            table,
            projective,
            injective,
        }
    }

    pub fn table(&self) -> &ExtTable {
        &self.table
    }

    pub fn is_nct(&self, c: &ModSet, n: usize) -> Result<bool> {
        is_nct_with(&self.table, c, n)
    }

    // Position of tau_n X (or tau_n^- X) when it is a nonzero indecomposable.
    fn translates(&self, n: usize, inverse: bool) -> Vec<Option<usize>> {
        let alg = self.table.algebra();
        self.table
            .modules()
            .iter()
            .map(|&x| {
                let summands = if inverse {
                    tau_n_inv_of(alg, x, n)
                } else {
                    tau_n_of(alg, x, n)
                }
                .expect("indecomposables are modules");
                single(&summands)
                    .filter(|y| !y.is_zero())
                    .and_then(|y| self.table.index_of(y))
            })
            .collect()
    }

    /// All n-cluster tilting subcategories, in canonical order.
    pub fn search(&self, n: usize, opts: SearchOptions) -> Result<SearchResult> {
        if n < 2 {
            return Err(Error::InvalidOrder { n, min: 2 });
        }
        let count = self.table.modules().len();
        let supports = Supports::new(&self.table, n);
        let conflicts: Vec<FixedBitSet> = (0..count).map(|a| supports.conflicts(a)).collect();

        let mut mandatory = self.projective.clone();
        mandatory.union_with(&self.injective);
        let mut blocked = FixedBitSet::with_capacity(count);
        for a in mandatory.ones() {
            blocked.union_with(&conflicts[a]);
        }
        if !mandatory.is_disjoint(&blocked) {
            return Ok(SearchResult {
                found: Vec::new(),
                candidates: 0,
            });
        }
        let free: Vec<usize> = (0..count)
            .filter(|&a| !mandatory.contains(a) && !blocked.contains(a) && !conflicts[a].contains(a))
            .collect();

        let bijection = opts.bijection_pruning.then(|| {
            (self.translates(n, false), self.translates(n, true))
        });
        let mut state = Backtrack {
            supports: &supports,
            conflicts: &conflicts,
            free: &free,
            budget: opts.budget,
            candidates: 0,
            found: Vec::new(),
            accept: &|c: &FixedBitSet| match &bijection {
                Some((tau, tau_inv)) => self.bijective(c, tau, tau_inv),
                None => true,
            },
        };
        state.run(0, mandatory, blocked)?;
        let mut found: Vec<ModSet> = state.found.iter().map(|b| to_modset(&self.table, b)).collect();
        found.sort_by_cached_key(|c| c.to_vec());
        Ok(SearchResult {
            found,
            candidates: state.candidates,
        })
    }

    fn bijective(&self, c: &FixedBitSet, tau: &[Option<usize>], tau_inv: &[Option<usize>]) -> bool {
        c.ones().all(|a| {
            let forward = self.projective.contains(a)
                || matches!(tau[a], Some(b) if c.contains(b) && !self.injective.contains(b) && tau_inv[b] == Some(a));
            let backward = self.injective.contains(a)
                || matches!(tau_inv[a], Some(b) if c.contains(b) && !self.projective.contains(b) && tau[b] == Some(a));
            forward && backward
        })
    }
}

struct Backtrack<'a> {
    supports: &'a Supports,
    conflicts: &'a [FixedBitSet],
    free: &'a [usize],
    budget: u64,
    candidates: u64,
    found: Vec<FixedBitSet>,
    accept: &'a dyn Fn(&FixedBitSet) -> bool,
}

impl Backtrack<'_> {
    // `chosen` is conflict free; `blocked` is the union of the conflicts of
    // its members. Members of `free` before `pos` are decided.
    fn run(&mut self, pos: usize, chosen: FixedBitSet, blocked: FixedBitSet) -> Result<()> {
        if pos == self.free.len() {
            self.candidates += 1;
            if self.candidates > self.budget {
                return Err(Error::BudgetExceeded {
                    budget: self.budget,
                });
            }
            if (self.accept)(&chosen) && self.supports.is_nct(&chosen) {
                self.found.push(chosen);
            }
            return Ok(());
        }
        let x = self.free[pos];
        if blocked.contains(x) {
            return self.run(pos + 1, chosen, blocked);
        }
        let mut with = chosen.clone();
        with.insert(x);
        let mut with_blocked = blocked.clone();
        with_blocked.union_with(&self.conflicts[x]);
        self.run(pos + 1, with, with_blocked)?;
        // Leaving x out is only consistent if some later choice can still
        // conflict with it.
        let coverable = self.free[pos + 1..]
            .iter()
            .any(|&y| !blocked.contains(y) && self.conflicts[x].contains(y));
        if coverable {
            self.run(pos + 1, chosen, blocked)?;
        }
        Ok(())
    }
}

/// All n-cluster tilting subcategories of `alg`.
pub fn exhaustive_nct_search(alg: &KupischAlgebra, n: usize, budget: u64) -> Result<Vec<ModSet>> {
    let opts = SearchOptions {
        budget,
        ..SearchOptions::default()
    };
    Ok(NctSearcher::new(alg).search(n, opts)?.found)
}
