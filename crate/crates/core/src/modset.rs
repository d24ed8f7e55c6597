use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::ModCoord;
use crate::error::{Error, Result};

/// A subcategory closed under sums and summands, identified with its set of
/// indecomposables. Iteration follows the canonical `(length, socle)` order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ModSet(BTreeSet<ModCoord>);

impl ModSet {
    pub fn new() -> Self {
        ModSet(BTreeSet::new())
    }

    /// Builds a set after checking every member against `is_member`.
    pub fn validated<I>(members: I, is_member: impl Fn(ModCoord) -> bool) -> Result<Self>
    where
        I: IntoIterator<Item = ModCoord>,
    {
        let mut set = BTreeSet::new();
        for x in members {
            if x.is_zero() {
                return Err(Error::ZeroModule);
            }
            if !is_member(x) {
                return Err(Error::NotAModule(x));
            }
            set.insert(x);
        }
        Ok(ModSet(set))
    }

    /// Inserts a nonzero module; zero is ignored.
    pub fn insert(&mut self, x: ModCoord) -> bool {
        !x.is_zero() && self.0.insert(x)
    }

    pub fn remove(&mut self, x: ModCoord) -> bool {
        self.0.remove(&x)
    }

    pub fn contains(&self, x: ModCoord) -> bool {
        self.0.contains(&x)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = ModCoord> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &ModSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn union(&self, other: &ModSet) -> ModSet {
        ModSet(self.0.union(&other.0).copied().collect())
    }

    pub fn to_vec(&self) -> Vec<ModCoord> {
        self.iter().collect()
    }
}

impl FromIterator<ModCoord> for ModSet {
    fn from_iter<T: IntoIterator<Item = ModCoord>>(iter: T) -> Self {
        ModSet(iter.into_iter().filter(|x| !x.is_zero()).collect())
    }
}

impl<'a> IntoIterator for &'a ModSet {
    type Item = ModCoord;
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, ModCoord>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

impl fmt::Display for ModSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, x) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}
