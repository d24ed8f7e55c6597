//! Ext dimensions as cohomology of `Hom(P_*, Y)` for a minimal projective
//! resolution `P_*` of the first argument.

use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;

use super::kupisch::KupischAlgebra;
use super::linalg::Matrix;
use super::representation::Representation;
use super::resolution::{min_resolution, Resolution};
use crate::algebra::ModCoord;
use crate::error::{Error, Result};
use crate::modset::ModSet;

// The coboundary Hom(P_i, Y) -> Hom(P_(i+1), Y).
fn coboundary(res: &Resolution, y: &Representation, i: usize) -> Matrix {
    let (src, dst) = (&res.terms[i], &res.terms[i + 1]);
    let d = &res.boundaries[i];
    let offsets = |tops: &[usize]| {
        let mut off = vec![0];
        for &k in tops {
            off.push(off.last().unwrap() + y.dim(k));
        }
        off
    };
    let (cols, rows) = (offsets(src), offsets(dst));
    let mut out = Matrix::zeros(*rows.last().unwrap(), *cols.last().unwrap());
    for (t, &kt) in dst.iter().enumerate() {
        for (s, &ks) in src.iter().enumerate() {
            let coeff = &d[(s, t)];
            if coeff.is_zero() || y.dim(ks) == 0 || y.dim(kt) == 0 {
                continue;
            }
            let block = y.path_map(ks, kt);
            for r in 0..block.rows() {
                for c in 0..block.cols() {
                    out[(rows[t] + r, cols[s] + c)] = coeff * &block[(r, c)];
                }
            }
        }
    }
    out
}

/// `dim Ext^i(X, Y)` for `0 <= i <= bound`, given a resolution of `X`.
pub fn ext_dims_from(res: &Resolution, y: &Representation, bound: usize) -> Vec<usize> {
    let len = res.terms.len();
    let cochain = |i: usize| -> usize {
        res.terms
            .get(i)
            .map_or(0, |tops| tops.iter().map(|&k| y.dim(k)).sum())
    };
    let ranks: Vec<usize> = (0..len - 1).map(|i| coboundary(res, y, i).rank()).collect();
    (0..=bound)
        .map(|i| {
            let out = ranks.get(i).copied().unwrap_or(0);
            let inc = if i == 0 { 0 } else { ranks.get(i - 1).copied().unwrap_or(0) };
            cochain(i) - out - inc
        })
        .collect()
}

/// `dim Ext^i(X, Y)` for `0 <= i <= bound`.
pub fn ext_dims(
    alg: &KupischAlgebra,
    x: &Representation,
    y: &Representation,
    bound: usize,
) -> Result<Vec<usize>> {
    y.check_relations(alg)?;
    if x.is_zero() || y.is_zero() {
        x.check_relations(alg)?;
        return Ok(vec![0; bound + 1]);
    }
    Ok(ext_dims_from(&min_resolution(alg, x)?, y, bound))
}

/// `dim Ext^i(X, Y)` for indecomposables.
pub fn ext_dim(alg: &KupischAlgebra, x: ModCoord, y: ModCoord, i: usize) -> Result<usize> {
    if x.is_zero() || y.is_zero() {
        return Err(Error::ZeroModule);
    }
    let (rx, ry) = (
        Representation::interval(alg, x)?,
        Representation::interval(alg, y)?,
    );
    Ok(ext_dims(alg, &rx, &ry, i)?[i])
}

/// All Ext dimensions between indecomposables, in every degree up to the
/// global dimension (higher degrees vanish).
#[derive(Clone, Debug)]
pub struct ExtTable {
    algebra: KupischAlgebra,
    modules: Vec<ModCoord>,
    index: BTreeMap<ModCoord, usize>,
    bound: usize,
    // data[x][y][i]
    data: Vec<Vec<Vec<usize>>>,
}

impl ExtTable {
    pub fn new(alg: &KupischAlgebra) -> Self {
        let modules = alg.indecomposables();
        let reps: Vec<Representation> = modules
            .iter()
            .map(|&x| Representation::interval(alg, x).expect("indecomposables are modules"))
            .collect();
        let resolutions: Vec<Resolution> = reps
            .par_iter()
            .map(|r| min_resolution(alg, r).expect("nonzero module"))
            .collect();
        let bound = resolutions.iter().map(Resolution::length).max().unwrap_or(0);
        let data = resolutions
            .par_iter()
            .map(|res| reps.iter().map(|y| ext_dims_from(res, y, bound)).collect())
            .collect();
        let index = modules.iter().enumerate().map(|(k, &x)| (x, k)).collect();
        ExtTable {
            algebra: alg.clone(),
            modules,
            index,
            bound,
            data,
        }
    }

    pub fn algebra(&self) -> &KupischAlgebra {
        &self.algebra
    }

    /// Indecomposables in canonical order; positions index the table.
    pub fn modules(&self) -> &[ModCoord] {
        &self.modules
    }

    pub fn index_of(&self, x: ModCoord) -> Option<usize> {
        self.index.get(&x).copied()
    }

    /// Largest degree with possibly nonzero entries (the global dimension).
    pub fn bound(&self) -> usize {
        self.bound
    }

    /// `dim Ext^i(X, Y)`; `None` when either argument is not an
    /// indecomposable of the algebra.
    pub fn get(&self, x: ModCoord, y: ModCoord, i: usize) -> Option<usize> {
        let (a, b) = (self.index_of(x)?, self.index_of(y)?);
        Some(self.get_index(a, b, i))
    }

    pub fn get_index(&self, a: usize, b: usize, i: usize) -> usize {
        self.data[a][b].get(i).copied().unwrap_or(0)
    }

    /// Some `Ext^i(X, Y)` with `0 < i < n` is nonzero.
    pub fn ext_between(&self, a: usize, b: usize, n: usize) -> bool {
        (1..n).any(|i| self.get_index(a, b, i) != 0)
    }

    /// Indecomposables `Y` with `Ext^i(X, Y) != 0` for some `0 < i < n`.
    pub fn left_support(&self, x: ModCoord, n: usize) -> Result<ModSet> {
        let a = self.index_of(x).ok_or(Error::NotAModule(x))?;
        Ok((0..self.modules.len())
            .filter(|&b| self.ext_between(a, b, n))
            .map(|b| self.modules[b])
            .collect())
    }

    /// Indecomposables `Y` with `Ext^i(Y, X) != 0` for some `0 < i < n`.
    pub fn right_support(&self, x: ModCoord, n: usize) -> Result<ModSet> {
        let b = self.index_of(x).ok_or(Error::NotAModule(x))?;
        Ok((0..self.modules.len())
            .filter(|&a| self.ext_between(a, b, n))
            .map(|a| self.modules[a])
            .collect())
    }
}
