use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, ModCoord};
use crate::error::{Error, Result};

/// An acyclic Nakayama algebra on the linear quiver with `m` vertices, given
/// by its Kupisch series: `series[k - 1]` is the length of `P(k)`.
///
/// Admissibility requires `c_1 = 1` and `2 <= c_(k+1) <= c_k + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KupischAlgebra {
    series: Vec<usize>,
}

impl KupischAlgebra {
    pub fn new(series: Vec<usize>) -> Result<Self> {
        let fail = |reason: String| Err(Error::InvalidKupisch {
            series: series.clone(),
            reason,
        });
        match series.first() {
            None => return fail("empty series".into()),
            Some(&c) if c != 1 => return fail(format!("c_1 = {c}, expected 1")),
            _ => {}
        }
        for k in 1..series.len() {
            let (prev, cur) = (series[k - 1], series[k]);
            if cur < 2 || cur > prev + 1 {
                return fail(format!(
                    "c_{} = {cur} must lie in 2..={} ",
                    k + 1,
                    prev + 1
                ));
            }
        }
        Ok(KupischAlgebra { series })
    }

    /// The series `c_k = min(k, l)`.
    pub fn homogeneous(m: usize, l: usize) -> Self {
        assert!(m >= 1 && l >= 1 && (m == 1 || l >= 2), "not admissible");
        KupischAlgebra {
            series: (1..=m).map(|k| k.min(l)).collect(),
        }
    }

    pub fn series(&self) -> &[usize] {
        &self.series
    }

    pub fn m(&self) -> usize {
        self.series.len()
    }

    /// Length of `P(k)`, `1 <= k <= m`.
    pub fn c(&self, k: usize) -> usize {
        self.series[k - 1]
    }

    /// `Some(l)` when the series is `min(k, l)`; `l` is the smallest such
    /// value, so hereditary algebras report `l = m`.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let l = *self.series.iter().max().unwrap();
        (self.series == KupischAlgebra::homogeneous(self.m(), l).series).then_some(l)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_degree().is_some()
    }

    /// The nonzero path from vertex `from` down to vertex `to`.
    pub fn path_nonzero(&self, from: usize, to: usize) -> bool {
        to <= from && from - to < self.c(from)
    }

    /// Whether the interval `M(i, j)` is a module of this algebra.
    pub fn contains(&self, x: ModCoord) -> bool {
        match x.coords() {
            Some((i, j)) => {
                let top = i + j - 1;
                top <= self.m() && j <= self.c(top)
            }
            None => false,
        }
    }

    /// All indecomposables ordered by length, then socle.
    pub fn indecomposables(&self) -> Vec<ModCoord> {
        let max = *self.series.iter().max().unwrap();
        (1..=max)
            .flat_map(|j| (1..=self.m()).map(move |i| ModCoord::new(i, j)))
            .filter(|&x| self.contains(x))
            .collect()
    }

    fn vertex(&self, k: usize) -> Result<()> {
        if (1..=self.m()).contains(&k) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: k,
                vertices: self.m(),
            })
        }
    }

    pub fn projective(&self, k: usize) -> Result<ModCoord> {
        self.vertex(k)?;
        let c = self.c(k);
        Ok(ModCoord::new(k + 1 - c, c))
    }

    /// `I(k)`: the longest interval with socle `k`.
    pub fn injective(&self, k: usize) -> Result<ModCoord> {
        self.vertex(k)?;
        let len = (1..=self.m() + 1 - k)
            .take_while(|&j| self.contains(ModCoord::new(k, j)))
            .last()
            .unwrap();
        Ok(ModCoord::new(k, len))
    }

    pub fn projectives(&self) -> Vec<ModCoord> {
        (1..=self.m()).map(|k| self.projective(k).unwrap()).collect()
    }

    pub fn injectives(&self) -> Vec<ModCoord> {
        (1..=self.m()).map(|k| self.injective(k).unwrap()).collect()
    }

    /// The opposite algebra with vertices renumbered `v -> m + 1 - v`, so its
    /// arrows again point downwards.
    pub fn opposite(&self) -> KupischAlgebra {
        let m = self.m();
        KupischAlgebra {
            series: (1..=m)
                .map(|k| self.injective(m + 1 - k).unwrap().length())
                .collect(),
        }
    }

    /// Image of an interval under the standard duality into the opposite
    /// algebra.
    pub fn dual_coord(&self, x: ModCoord) -> ModCoord {
        match x.coords() {
            Some((i, j)) => ModCoord::new(self.m() + 2 - i - j, j),
            None => ModCoord::Zero,
        }
    }

    /// Every admissible Kupisch series with `m` vertices, lexicographically.
    pub fn enumerate(m: usize) -> Vec<KupischAlgebra> {
        fn extend(prefix: &mut Vec<usize>, m: usize, out: &mut Vec<KupischAlgebra>) {
            if prefix.len() == m {
                out.push(KupischAlgebra {
                    series: prefix.clone(),
                });
                return;
            }
            let last = *prefix.last().unwrap();
            for c in 2..=last + 1 {
                prefix.push(c);
                extend(prefix, m, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if m >= 1 {
            extend(&mut vec![1], m, &mut out);
        }
        out
    }
}

impl From<Algebra> for KupischAlgebra {
    fn from(a: Algebra) -> Self {
        KupischAlgebra::homogeneous(a.m(), a.l())
    }
}

impl From<&Algebra> for KupischAlgebra {
    fn from(a: &Algebra) -> Self {
        KupischAlgebra::from(*a)
    }
}

impl fmt::Display for KupischAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.series.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}
