//! Closed-form module calculus for the homogeneous acyclic Nakayama algebra
//! `KQ_m / rad^l`.
//!
//! Vertices are `1..=m` and every arrow points from a vertex to the next lower
//! one. The indecomposable modules are the intervals `M(i, j)`: socle at
//! vertex `i`, top at vertex `i + j - 1`, `j` vertices in total. Any formula
//! that lands outside the valid coordinate range yields [`ModCoord::Zero`].

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An indecomposable interval module `M(i, j)`, or the zero module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModCoord {
    Zero,
    Interval { socle: usize, length: usize },
}

impl ModCoord {
    /// `M(socle, length)` without reference to any algebra.
    ///
    /// A zero length gives [`ModCoord::Zero`].
    pub fn new(socle: usize, length: usize) -> Self {
        if length == 0 || socle == 0 {
            ModCoord::Zero
        } else {
            ModCoord::Interval { socle, length }
        }
    }

    pub fn is_zero(self) -> bool {
        matches!(self, ModCoord::Zero)
    }

    /// `(i, j)` for a nonzero module.
    pub fn coords(self) -> Option<(usize, usize)> {
        match self {
            ModCoord::Zero => None,
            ModCoord::Interval { socle, length } => Some((socle, length)),
        }
    }

    pub fn socle(self) -> Option<usize> {
        self.coords().map(|(i, _)| i)
    }

    pub fn length(self) -> usize {
        self.coords().map_or(0, |(_, j)| j)
    }

    /// Vertex of the simple top, `i + j - 1`.
    pub fn top(self) -> Option<usize> {
        self.coords().map(|(i, j)| i + j - 1)
    }

    /// Whether `vertex` lies in the support.
    pub fn supports(self, vertex: usize) -> bool {
        match self.coords() {
            Some((i, j)) => i <= vertex && vertex < i + j,
            None => false,
        }
    }
}

/// Zero first, then nonzero modules by `(length, socle)`.
impl Ord for ModCoord {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.coords(), other.coords()) {
            (None, None) => Ordering::Equal,
            (None, Some(_)) => Ordering::Less,
            (Some(_), None) => Ordering::Greater,
            (Some((i, j)), Some((a, b))) => (j, i).cmp(&(b, a)),
        }
    }
}

impl PartialOrd for ModCoord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ModCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModCoord::Zero => write!(f, "0"),
            ModCoord::Interval { socle, length } => write!(f, "M({socle},{length})"),
        }
    }
}

/// Serialized as `[i, j]`, the zero module as `null`.
impl Serialize for ModCoord {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coords().map(|(i, j)| [i, j]).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ModCoord {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let pair = Option::<[usize; 2]>::deserialize(deserializer)?;
        Ok(match pair {
            None => ModCoord::Zero,
            Some([i, j]) => {
                if i == 0 || j == 0 {
                    return Err(serde::de::Error::custom("coordinates must be positive"));
                }
                ModCoord::Interval {
                    socle: i,
                    length: j,
                }
            }
        })
    }
}

/// Projectivity and injectivity of an indecomposable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleKind {
    pub is_projective: bool,
    pub is_injective: bool,
}

/// An almost split sequence `0 -> left -> middle -> right -> 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArSequence {
    pub left: ModCoord,
    pub middle: Vec<ModCoord>,
    pub right: ModCoord,
}

/// The algebra `KQ_m / rad^l` with `2 <= l <= m - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Algebra {
    m: usize,
    l: usize,
}

impl Algebra {
    pub fn new(m: usize, l: usize) -> Result<Self> {
        let invalid = |reason| Err(Error::InvalidAlgebra { m, l, reason });
        if m < 2 {
            return invalid("the quiver needs at least two vertices");
        }
        if l < 2 {
            return invalid("l < 2 gives an ideal that is not admissible");
        }
        if l > m - 1 {
            return invalid("l > m - 1 imposes no relations (hereditary case)");
        }
        Ok(Algebra { m, l })
    }

    /// Number of vertices.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Nilpotency degree of the radical.
    pub fn l(&self) -> usize {
        self.l
    }

    /// `M(i, j)` if the coordinates describe a module, otherwise zero.
    pub fn coord(&self, i: i64, j: i64) -> ModCoord {
        let (m, l) = (self.m as i64, self.l as i64);
        if 1 <= i && i <= m && 1 <= j && j <= l && i + j <= m + 1 {
            ModCoord::new(i as usize, j as usize)
        } else {
            ModCoord::Zero
        }
    }

    pub fn contains(&self, x: ModCoord) -> bool {
        match x.coords() {
            Some((i, j)) => self.coord(i as i64, j as i64) == x,
            None => false,
        }
    }

    /// All indecomposables ordered by length, then socle.
    pub fn indecomposables(&self) -> Vec<ModCoord> {
        (1..=self.l)
            .flat_map(|j| (1..=self.m + 1 - j).map(move |i| ModCoord::new(i, j)))
            .collect()
    }

    fn nonzero(&self, x: ModCoord) -> Result<(i64, i64)> {
        match x.coords() {
            None => Err(Error::ZeroModule),
            Some((i, j)) if self.contains(x) => Ok((i as i64, j as i64)),
            Some(_) => Err(Error::NotAModule(x)),
        }
    }

    fn vertex(&self, k: usize) -> Result<()> {
        if (1..=self.m).contains(&k) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: k,
                vertices: self.m,
            })
        }
    }

    /// The indecomposable projective `P(k)`, top at `k`.
    pub fn projective(&self, k: usize) -> Result<ModCoord> {
        self.vertex(k)?;
        Ok(if k < self.l {
            ModCoord::new(1, k)
        } else {
            ModCoord::new(1 + k - self.l, self.l)
        })
    }

    /// The indecomposable injective `I(k)`, socle at `k`.
    pub fn injective(&self, k: usize) -> Result<ModCoord> {
        self.vertex(k)?;
        Ok(if k + self.l <= self.m + 1 {
            ModCoord::new(k, self.l)
        } else {
            ModCoord::new(k, self.m + 1 - k)
        })
    }

    pub fn projectives(&self) -> Vec<ModCoord> {
        (1..=self.m).map(|k| self.projective(k).unwrap()).collect()
    }

    pub fn injectives(&self) -> Vec<ModCoord> {
        (1..=self.m).map(|k| self.injective(k).unwrap()).collect()
    }

    pub fn classify(&self, x: ModCoord) -> Result<ModuleKind> {
        let (i, j) = self.nonzero(x)?;
        let l = self.l as i64;
        Ok(ModuleKind {
            is_projective: i == 1 || j == l,
            is_injective: j == l || i + j == self.m as i64 + 1,
        })
    }

    pub fn is_projective(&self, x: ModCoord) -> Result<bool> {
        self.classify(x).map(|k| k.is_projective)
    }

    pub fn is_injective(&self, x: ModCoord) -> Result<bool> {
        self.classify(x).map(|k| k.is_injective)
    }

    /// Kernel of the projective cover.
    pub fn syzygy(&self, x: ModCoord) -> Result<ModCoord> {
        let (i, j) = self.nonzero(x)?;
        if self.is_projective(x)? {
            return Ok(ModCoord::Zero);
        }
        let l = self.l as i64;
        Ok(if i + j <= l {
            self.coord(1, i - 1)
        } else {
            self.coord(i + j - l, l - j)
        })
    }

    /// Cokernel of the injective hull.
    ///
    /// For a socle near the top of the quiver the hull is the truncated
    /// injective `M(i, m + 1 - i)`, so the cokernel is `M(i + j, m + 1 - i - j)`.
    pub fn cosyzygy(&self, x: ModCoord) -> Result<ModCoord> {
        let (i, j) = self.nonzero(x)?;
        if self.is_injective(x)? {
            return Ok(ModCoord::Zero);
        }
        let (m, l) = (self.m as i64, self.l as i64);
        Ok(if i <= m - l + 1 {
            self.coord(i + j, l - j)
        } else {
            self.coord(i + j, m + 1 - i - j)
        })
    }

    /// `k >= 0` applies the syzygy `k` times, `k < 0` the cosyzygy `-k` times.
    pub fn syzygy_iter(&self, x: ModCoord, k: i64) -> Result<ModCoord> {
        self.nonzero(x)?;
        let mut cur = x;
        for _ in 0..k.unsigned_abs() {
            if cur.is_zero() {
                break;
            }
            cur = if k > 0 {
                self.syzygy(cur)?
            } else {
                self.cosyzygy(cur)?
            };
        }
        Ok(cur)
    }

    /// Auslander-Reiten translate, `M(i - 1, j)` for nonprojective input.
    pub fn tau(&self, x: ModCoord) -> Result<ModCoord> {
        let (i, j) = self.nonzero(x)?;
        if self.is_projective(x)? {
            return Ok(ModCoord::Zero);
        }
        Ok(self.coord(i - 1, j))
    }

    pub fn tau_inv(&self, x: ModCoord) -> Result<ModCoord> {
        let (i, j) = self.nonzero(x)?;
        if self.is_injective(x)? {
            return Ok(ModCoord::Zero);
        }
        Ok(self.coord(i + 1, j))
    }

    /// The `n`-Auslander-Reiten translate `tau Omega^(n-1)`, in closed form.
    pub fn tau_n(&self, x: ModCoord, n: usize) -> Result<ModCoord> {
        let (i, j) = self.nonzero(x)?;
        if n == 0 {
            return Err(Error::InvalidOrder { n, min: 1 });
        }
        if self.is_projective(x)? {
            return Ok(ModCoord::Zero);
        }
        let (n, l) = (n as i64, self.l as i64);
        Ok(if n % 2 == 0 {
            self.coord(i + j - n / 2 * l - 1, l - j)
        } else {
            self.coord(i - (n - 1) / 2 * l - 1, j)
        })
    }

    /// The inverse `n`-translate `tau^- Omega^-(n-1)`, in closed form.
    pub fn tau_n_inv(&self, x: ModCoord, n: usize) -> Result<ModCoord> {
        let (i, j) = self.nonzero(x)?;
        if n == 0 {
            return Err(Error::InvalidOrder { n, min: 1 });
        }
        if self.is_injective(x)? {
            return Ok(ModCoord::Zero);
        }
        let (n, l) = (n as i64, self.l as i64);
        Ok(if n % 2 == 0 {
            self.coord(i + j + (n - 2) / 2 * l + 1, l - j)
        } else {
            self.coord(i + (n - 1) / 2 * l + 1, j)
        })
    }

    /// The almost split sequence ending in `right`.
    pub fn ar_sequence(&self, right: ModCoord) -> Result<ArSequence> {
        let (i1, j) = self.nonzero(right)?;
        if self.is_projective(right)? {
            return Err(Error::ProjectiveRightTerm(right));
        }
        let i = i1 - 1;
        let middle = [self.coord(i, j + 1), self.coord(i + 1, j - 1)]
            .into_iter()
            .filter(|x| !x.is_zero())
            .collect();
        Ok(ArSequence {
            left: self.tau(right)?,
            middle,
            right,
        })
    }

    /// Dimension vector indexed by vertex `1..=m` (entry `v - 1`).
    pub fn dimension_vector(&self, x: ModCoord) -> Vec<usize> {
        (1..=self.m).map(|v| usize::from(x.supports(v))).collect()
    }

    /// Projective dimension from the closed form.
    pub fn proj_dim(&self, x: ModCoord) -> Result<usize> {
        let (i, j) = self.nonzero(x)?;
        if self.is_projective(x)? {
            return Ok(0);
        }
        let l = self.l as i64;
        let (q, r) = ((i - 2) / l, (i - 2) % l);
        Ok(if j < l - r {
            2 * q as usize + 1
        } else {
            2 * q as usize + 2
        })
    }

    /// `floor((m-1)/l) + ceil((m-1)/l)`.
    pub fn global_dim(&self) -> usize {
        let (a, l) = (self.m - 1, self.l);
        a / l + a.div_ceil(l)
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Lambda({},{})", self.m, self.l)
    }
}
