//! Short exact sequences of interval modules built from explicit maps.

use super::kupisch::KupischAlgebra;
use super::linalg::{Matrix, Q};
use super::representation::{decompose, support_positions, Morphism, Representation};
use crate::algebra::ModCoord;
use crate::error::{Error, Result};

/// The map between sums of intervals that sends summand `s` to summand `t`
/// by `coeff(s, t)` times the identity on their common support.
pub fn canonical_map(
    alg: &KupischAlgebra,
    source: &[ModCoord],
    target: &[ModCoord],
    coeff: impl Fn(usize, usize) -> i64,
) -> Morphism {
    let maps = (1..=alg.m())
        .map(|w| {
            let rows = support_positions(target, w);
            let cols = support_positions(source, w);
            Matrix::from_fn(rows.len(), cols.len(), |r, c| {
                Q::from_integer(coeff(cols[c], rows[r]).into())
            })
        })
        .collect();
    Morphism { maps }
}

/// Verdict on a candidate sequence `0 -> L -> M -> N -> 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SequenceCheck {
    /// Both maps are homomorphisms and the sequence is exact.
    pub exact: bool,
    /// The middle term is isomorphic to `L + N`.
    pub split: bool,
}

/// Builds `L -> M_1 + M_2 -> N` from canonical interval maps, with the sign
/// alternating on the second map, and checks it.
pub fn check_ar_sequence(
    alg: &KupischAlgebra,
    left: ModCoord,
    middle: &[ModCoord],
    right: ModCoord,
) -> Result<SequenceCheck> {
    if left.is_zero() || right.is_zero() {
        return Err(Error::ZeroModule);
    }
    let l = Representation::interval(alg, left)?;
    let r = Representation::interval(alg, right)?;
    let mid = Representation::sum_of_intervals(alg, middle)?;
    let f = canonical_map(alg, &[left], middle, |_, _| 1);
    let g = canonical_map(alg, middle, &[right], |s, _| if s % 2 == 0 { 1 } else { -1 });

    let homs = f.is_homomorphism(&l, &mid) && g.is_homomorphism(&mid, &r);
    let composite_zero = f.then(&g).is_zero();
    let additive = (1..=alg.m()).all(|v| mid.dim(v) == l.dim(v) + r.dim(v));
    let exact = homs && composite_zero && additive && f.is_injective() && g.is_surjective();

    let mut ends = vec![left, right];
    ends.sort();
    let split = decompose(alg, &mid)? == ends;
    Ok(SequenceCheck { exact, split })
}
