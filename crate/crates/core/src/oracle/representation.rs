//! Explicit representations of the linear quiver.
//!
//! Vertex `v` (1-based) carries the space `K^dims[v-1]`; the arrow from
//! `v + 1` to `v` is the matrix `maps[v-1]` of shape `dims[v-1] x dims[v]`.

use num_traits::{One, Zero};

use super::kupisch::KupischAlgebra;
use super::linalg::{Matrix, Q};
use crate::algebra::ModCoord;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl Representation {
    pub fn new(dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::ShapeMismatch("no vertices".into()));
        }
        if maps.len() + 1 != dims.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} vertices need {} arrow maps, got {}",
                dims.len(),
                dims.len() - 1,
                maps.len()
            )));
        }
        for (a, f) in maps.iter().enumerate() {
            if f.rows() != dims[a] || f.cols() != dims[a + 1] {
                return Err(Error::ShapeMismatch(format!(
                    "arrow {} -> {} has shape {}x{}, expected {}x{}",
                    a + 2,
                    a + 1,
                    f.rows(),
                    f.cols(),
                    dims[a],
                    dims[a + 1]
                )));
            }
        }
        Ok(Representation { dims, maps })
    }

    pub fn zero(vertices: usize) -> Self {
        Representation {
            dims: vec![0; vertices],
            maps: (1..vertices).map(|_| Matrix::zeros(0, 0)).collect(),
        }
    }

    /// The interval module `M(i, j)`: `K` on vertices `i..i+j`, identities
    /// between them.
    pub fn interval(alg: &KupischAlgebra, x: ModCoord) -> Result<Self> {
        if x.is_zero() {
            return Ok(Representation::zero(alg.m()));
        }
        if !alg.contains(x) {
            return Err(Error::RelationBound(x));
        }
        let dims = (1..=alg.m()).map(|v| usize::from(x.supports(v))).collect();
        Self::sum_of_intervals_with_dims(alg.m(), &[x], dims)
    }

    /// Direct sum of interval modules; the basis at each vertex lists the
    /// supporting summands in the given order.
    pub fn sum_of_intervals(alg: &KupischAlgebra, summands: &[ModCoord]) -> Result<Self> {
        if let Some(bad) = summands.iter().find(|x| !alg.contains(**x)) {
            return Err(Error::RelationBound(*bad));
        }
        let dims = (1..=alg.m())
            .map(|v| summands.iter().filter(|x| x.supports(v)).count())
            .collect();
        Self::sum_of_intervals_with_dims(alg.m(), summands, dims)
    }

    fn sum_of_intervals_with_dims(
        m: usize,
        summands: &[ModCoord],
        dims: Vec<usize>,
    ) -> Result<Self> {
        let maps = (1..m)
            .map(|v| {
                let lower = support_positions(summands, v);
                let upper = support_positions(summands, v + 1);
                Matrix::from_fn(lower.len(), upper.len(), |r, c| {
                    if lower[r] == upper[c] {
                        Q::one()
                    } else {
                        Q::zero()
                    }
                })
            })
            .collect();
        Representation::new(dims, maps)
    }

    pub fn vertices(&self) -> usize {
        self.dims.len()
    }

    /// Dimension at vertex `v` (1-based).
    pub fn dim(&self, v: usize) -> usize {
        self.dims[v - 1]
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// The arrow map from `v + 1` to `v`.
    pub fn arrow(&self, v: usize) -> &Matrix {
        &self.maps[v - 1]
    }

    /// Composite of arrow maps from vertex `from` down to vertex `to`.
    pub fn path_map(&self, from: usize, to: usize) -> Matrix {
        assert!(to <= from, "paths only descend");
        let mut acc = Matrix::identity(self.dim(from));
        for v in (to..from).rev() {
            acc = self.arrow(v) * &acc;
        }
        acc
    }

    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        if self.vertices() != other.vertices() {
            return Err(Error::ShapeMismatch("different vertex counts".into()));
        }
        let dims = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(a, b)| Matrix::block_diag(a, b))
            .collect();
        Representation::new(dims, maps)
    }

    /// The dual representation over the opposite algebra, with vertices
    /// renumbered `v -> m + 1 - v`.
    pub fn dual(&self) -> Representation {
        let dims = self.dims.iter().rev().copied().collect();
        let maps = self.maps.iter().rev().map(Matrix::transpose).collect();
        Representation { dims, maps }
    }

    /// Checks that every path of length `c_k` leaving vertex `k` acts as zero.
    pub fn check_relations(&self, alg: &KupischAlgebra) -> Result<()> {
        if self.vertices() != alg.m() {
            return Err(Error::ShapeMismatch(format!(
                "representation has {} vertices, algebra has {}",
                self.vertices(),
                alg.m()
            )));
        }
        for k in 1..=alg.m() {
            let c = alg.c(k);
            if c < k && !self.path_map(k, k - c).is_zero() {
                return Err(Error::RelationViolation(format!(
                    "path of length {c} from vertex {k} acts nontrivially"
                )));
            }
        }
        Ok(())
    }
}

/// Summand indices supported at vertex `v`, in order.
pub(crate) fn support_positions(summands: &[ModCoord], v: usize) -> Vec<usize> {
    summands
        .iter()
        .enumerate()
        .filter(|(_, x)| x.supports(v))
        .map(|(k, _)| k)
        .collect()
}

/// A vertexwise linear map; `maps[v-1]` goes from the source space at `v`
/// to the target space at `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub maps: Vec<Matrix>,
}

impl Morphism {
    pub fn zero(source: &Representation, target: &Representation) -> Self {
        Morphism {
            maps: (1..=source.vertices())
                .map(|v| Matrix::zeros(target.dim(v), source.dim(v)))
                .collect(),
        }
    }

    pub fn at(&self, v: usize) -> &Matrix {
        &self.maps[v - 1]
    }

    /// Shapes agree and every arrow square commutes.
    pub fn is_homomorphism(&self, source: &Representation, target: &Representation) -> bool {
        let n = source.vertices();
        if target.vertices() != n || self.maps.len() != n {
            return false;
        }
        for v in 1..=n {
            let f = self.at(v);
            if f.rows() != target.dim(v) || f.cols() != source.dim(v) {
                return false;
            }
        }
        (1..n).all(|v| {
            self.at(v) * source.arrow(v) == target.arrow(v) * self.at(v + 1)
        })
    }

    /// `other` after `self`.
    pub fn then(&self, other: &Morphism) -> Morphism {
        Morphism {
            maps: self
                .maps
                .iter()
                .zip(&other.maps)
                .map(|(f, g)| g * f)
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }

    pub fn is_injective(&self) -> bool {
        self.maps.iter().all(|f| f.rank() == f.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.maps.iter().all(|f| f.rank() == f.rows())
    }
}

/// Kernel of a morphism as a representation, with the inclusion given by
/// basis matrices at each vertex.
pub fn kernel(source: &Representation, f: &Morphism) -> (Representation, Vec<Matrix>) {
    let bases: Vec<Matrix> = f.maps.iter().map(Matrix::nullspace).collect();
    let n = source.vertices();
    let maps = (1..n)
        .map(|v| {
            let image = source.arrow(v) * &bases[v];
            bases[v - 1]
                .solve(&image)
                .expect("kernel is closed under the arrows")
        })
        .collect();
    let dims = bases.iter().map(Matrix::cols).collect();
    (Representation { dims, maps }, bases)
}

/// Dimension of `Hom(x, y)` from the commuting-square linear system.
pub fn hom_dim(x: &Representation, y: &Representation) -> Result<usize> {
    let n = x.vertices();
    if y.vertices() != n {
        return Err(Error::ShapeMismatch("different vertex counts".into()));
    }
    // Unknown f_v is a dim_y(v) x dim_x(v) block, stored row-major.
    let mut offsets = Vec::with_capacity(n + 1);
    offsets.push(0);
    for v in 1..=n {
        offsets.push(offsets[v - 1] + y.dim(v) * x.dim(v));
    }
    let unknowns = offsets[n];
    let var = |v: usize, r: usize, c: usize| offsets[v - 1] + r * x.dim(v) + c;

    let mut rows: Vec<Vec<(usize, Q)>> = Vec::new();
    for v in 1..n {
        // f_v * X_v = Y_v * f_(v+1), both sides dim_y(v) x dim_x(v+1).
        let (xa, ya) = (x.arrow(v), y.arrow(v));
        for r in 0..y.dim(v) {
            for c in 0..x.dim(v + 1) {
                let mut eq = Vec::new();
                for k in 0..x.dim(v) {
                    if !xa[(k, c)].is_zero() {
                        eq.push((var(v, r, k), xa[(k, c)].clone()));
                    }
                }
                for k in 0..y.dim(v + 1) {
                    if !ya[(r, k)].is_zero() {
                        eq.push((var(v + 1, k, c), -ya[(r, k)].clone()));
                    }
                }
                if !eq.is_empty() {
                    rows.push(eq);
                }
            }
        }
    }
    let mut system = Matrix::zeros(rows.len(), unknowns);
    for (r, eq) in rows.into_iter().enumerate() {
        for (c, v) in eq {
            let cur = &system[(r, c)] + v;
            system[(r, c)] = cur;
        }
    }
    Ok(unknowns - system.rank())
}

/// Interval multiplicities from the ranks of composite arrow maps.
///
/// Writing `r(a, b)` for the rank of the path map from `b` down to `a`, the
/// multiplicity of `[a, b]` is `r(a,b) - r(a-1,b) - r(a,b+1) + r(a-1,b+1)`.
#[allow(clippy::needless_range_loop)]
pub fn decompose(alg: &KupischAlgebra, x: &Representation) -> Result<Vec<ModCoord>> {
    x.check_relations(alg)?;
    let n = x.vertices();
    // ranks[a][b] for 1 <= a <= b <= n, zero outside.
    let mut ranks = vec![vec![0usize; n + 2]; n + 2];
    for b in 1..=n {
        for a in 1..=b {
            ranks[a][b] = x.path_map(b, a).rank();
        }
    }
    let r = |a: usize, b: usize| -> i64 {
        if a == 0 || b > n {
            0
        } else {
            ranks[a][b] as i64
        }
    };
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a..=n {
            let mult = r(a, b) - r(a - 1, b) - r(a, b + 1) + r(a - 1, b + 1);
            debug_assert!(mult >= 0, "negative interval multiplicity");
            for _ in 0..mult.max(0) {
                out.push(ModCoord::new(a, b - a + 1));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Convenience wrapper for [`Representation::interval`].
pub fn to_matrices(alg: &KupischAlgebra, x: ModCoord) -> Result<Representation> {
    Representation::interval(alg, x)
}
