//! Projective covers, minimal projective resolutions and the (co)syzygy and
//! Auslander-Reiten translates they determine, all computed from the arrow
//! matrices of a representation.

use super::kupisch::KupischAlgebra;
use super::linalg::{Matrix, Q};
use super::representation::{decompose, kernel, support_positions, Morphism, Representation};
use crate::algebra::ModCoord;
use crate::error::{Error, Result};

/// A minimal projective cover `P -> X`.
#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    /// Top vertex of each summand `P(k)`.
    pub tops: Vec<usize>,
    /// The summands as intervals.
    pub summands: Vec<ModCoord>,
    pub module: Representation,
    pub surjection: Morphism,
}

// Top generators: at each vertex, standard basis vectors completing the
// radical (the image of the incoming arrow).
fn top_generators(x: &Representation) -> Vec<(usize, Matrix)> {
    let n = x.vertices();
    let mut gens = Vec::new();
    for v in 1..=n {
        let radical = if v < n {
            x.arrow(v).clone()
        } else {
            Matrix::zeros(x.dim(v), 0)
        };
        for idx in radical.complement_of_column_space() {
            let mut e = Matrix::zeros(x.dim(v), 1);
            e[(idx, 0)] = Q::from_integer(1.into());
            gens.push((v, e));
        }
    }
    gens
}

fn cover_from_generators(
    alg: &KupischAlgebra,
    x: &Representation,
    gens: &[(usize, Matrix)],
) -> Result<ProjectiveCover> {
    let tops: Vec<usize> = gens.iter().map(|(v, _)| *v).collect();
    let summands: Vec<ModCoord> = tops
        .iter()
        .map(|&k| alg.projective(k))
        .collect::<Result<_>>()?;
    let module = Representation::sum_of_intervals(alg, &summands)?;
    let maps = (1..=x.vertices())
        .map(|w| {
            let present = support_positions(&summands, w);
            let cols: Vec<Matrix> = present
                .iter()
                .map(|&s| {
                    let (k, g) = (&gens[s].0, &gens[s].1);
                    &x.path_map(*k, w) * g
                })
                .collect();
            if cols.is_empty() {
                Matrix::zeros(x.dim(w), 0)
            } else {
                Matrix::hstack(&cols.iter().collect::<Vec<_>>())
            }
        })
        .collect();
    let surjection = Morphism { maps };
    debug_assert!(surjection.is_homomorphism(&module, x));
    Ok(ProjectiveCover {
        tops,
        summands,
        module,
        surjection,
    })
}

/// Minimal projective cover, one `P(k)` per top summand of `x`.
pub fn projective_cover(alg: &KupischAlgebra, x: &Representation) -> Result<ProjectiveCover> {
    x.check_relations(alg)?;
    if x.is_zero() {
        return Err(Error::ZeroModule);
    }
    cover_from_generators(alg, x, &top_generators(x))
}

/// A minimal projective resolution `... -> P_1 -> P_0 -> X -> 0`.
#[derive(Clone, Debug)]
pub struct Resolution {
    /// Top vertices of the summands of `P_0, P_1, ...`.
    pub terms: Vec<Vec<usize>>,
    /// `boundaries[i]` describes `P_(i+1) -> P_i`: entry `(s, t)` is the
    /// scalar multiplying the path from the top of summand `s` of `P_i` to
    /// the top of summand `t` of `P_(i+1)`.
    pub boundaries: Vec<Matrix>,
    /// `syzygies[i]` is `Omega^(i+1) X`.
    pub syzygies: Vec<Representation>,
}

impl Resolution {
    /// Projective dimension.
    pub fn length(&self) -> usize {
        self.terms.len() - 1
    }
}

/// Iterates kernel-of-cover until the kernel vanishes.
pub fn min_resolution(alg: &KupischAlgebra, x: &Representation) -> Result<Resolution> {
    x.check_relations(alg)?;
    if x.is_zero() {
        return Err(Error::ZeroModule);
    }
    let mut terms = Vec::new();
    let mut boundaries = Vec::new();
    let mut syzygies = Vec::new();
    let mut current = x.clone();
    // Summands of the previous cover and the kernel inclusion into it.
    let mut previous: Option<(Vec<ModCoord>, Vec<Matrix>)> = None;
    loop {
        let gens = top_generators(&current);
        let cover = cover_from_generators(alg, &current, &gens)?;
        if let Some((prev_summands, prev_basis)) = &previous {
            let mut d = Matrix::zeros(prev_summands.len(), gens.len());
            for (t, (k, g)) in gens.iter().enumerate() {
                let image = &prev_basis[k - 1] * g;
                for (r, s) in support_positions(prev_summands, *k).into_iter().enumerate() {
                    d[(s, t)] = image[(r, 0)].clone();
                }
            }
            boundaries.push(d);
        }
        terms.push(cover.tops.clone());
        let (k, basis) = kernel(&cover.module, &cover.surjection);
        if k.is_zero() {
            break;
        }
        syzygies.push(k.clone());
        previous = Some((cover.summands, basis));
        current = k;
    }
    Ok(Resolution {
        terms,
        boundaries,
        syzygies,
    })
}

/// Kernel of the projective cover; zero for zero or projective input.
pub fn syzygy(alg: &KupischAlgebra, x: &Representation) -> Result<Representation> {
    x.check_relations(alg)?;
    if x.is_zero() {
        return Ok(x.clone());
    }
    let cover = projective_cover(alg, x)?;
    Ok(kernel(&cover.module, &cover.surjection).0)
}

/// Cokernel of the injective hull, via the projective cover of the dual
/// over the opposite algebra.
pub fn cosyzygy(alg: &KupischAlgebra, x: &Representation) -> Result<Representation> {
    x.check_relations(alg)?;
    Ok(syzygy(&alg.opposite(), &x.dual())?.dual())
}

/// `D Tr X`, computed as the kernel of the Nakayama functor applied to a
/// minimal projective presentation `P_1 -> P_0`.
pub fn tau(alg: &KupischAlgebra, x: &Representation) -> Result<Representation> {
    x.check_relations(alg)?;
    if x.is_zero() {
        return Ok(x.clone());
    }
    let res = min_resolution(alg, x)?;
    if res.terms.len() < 2 {
        return Ok(Representation::zero(alg.m()));
    }
    let hull = |tops: &[usize]| -> Result<Vec<ModCoord>> {
        tops.iter().map(|&k| alg.injective(k)).collect()
    };
    let i0 = hull(&res.terms[0])?;
    let i1 = hull(&res.terms[1])?;
    let source = Representation::sum_of_intervals(alg, &i1)?;
    let target = Representation::sum_of_intervals(alg, &i0)?;
    let d = &res.boundaries[0];
    let maps = (1..=alg.m())
        .map(|w| {
            let rows = support_positions(&i0, w);
            let cols = support_positions(&i1, w);
            Matrix::from_fn(rows.len(), cols.len(), |r, c| d[(rows[r], cols[c])].clone())
        })
        .collect();
    let nu = Morphism { maps };
    debug_assert!(nu.is_homomorphism(&source, &target));
    Ok(kernel(&source, &nu).0)
}

/// `Tr D X`, dual to [`tau`].
pub fn tau_inv(alg: &KupischAlgebra, x: &Representation) -> Result<Representation> {
    x.check_relations(alg)?;
    Ok(tau(&alg.opposite(), &x.dual())?.dual())
}

/// Projective dimension of an indecomposable, as a resolution length.
pub fn proj_dim(alg: &KupischAlgebra, x: ModCoord) -> Result<usize> {
    if x.is_zero() {
        return Err(Error::ZeroModule);
    }
    Ok(min_resolution(alg, &Representation::interval(alg, x)?)?.length())
}

/// Maximum projective dimension over all indecomposables.
pub fn global_dim(alg: &KupischAlgebra) -> usize {
    alg.indecomposables()
        .into_iter()
        .map(|x| proj_dim(alg, x).expect("indecomposables are modules"))
        .max()
        .unwrap_or(0)
}

/// Summands of a coordinate-level operation.
pub type Summands = Vec<ModCoord>;

fn on_coord(
    alg: &KupischAlgebra,
    x: ModCoord,
    op: impl Fn(&KupischAlgebra, &Representation) -> Result<Representation>,
) -> Result<Summands> {
    if x.is_zero() {
        return Err(Error::ZeroModule);
    }
    let rep = Representation::interval(alg, x)?;
    decompose(alg, &op(alg, &rep)?)
}

pub fn syzygy_of(alg: &KupischAlgebra, x: ModCoord) -> Result<Summands> {
    on_coord(alg, x, syzygy)
}

pub fn cosyzygy_of(alg: &KupischAlgebra, x: ModCoord) -> Result<Summands> {
    on_coord(alg, x, cosyzygy)
}

pub fn tau_of(alg: &KupischAlgebra, x: ModCoord) -> Result<Summands> {
    on_coord(alg, x, tau)
}

pub fn tau_inv_of(alg: &KupischAlgebra, x: ModCoord) -> Result<Summands> {
    on_coord(alg, x, tau_inv)
}

/// `tau Omega^(n-1) X` on representations.
pub fn tau_n(alg: &KupischAlgebra, x: &Representation, n: usize) -> Result<Representation> {
    if n == 0 {
        return Err(Error::InvalidOrder { n, min: 1 });
    }
    let mut cur = x.clone();
    for _ in 1..n {
        cur = syzygy(alg, &cur)?;
    }
    tau(alg, &cur)
}

/// `tau^- Omega^-(n-1) X` on representations.
pub fn tau_n_inv(alg: &KupischAlgebra, x: &Representation, n: usize) -> Result<Representation> {
    if n == 0 {
        return Err(Error::InvalidOrder { n, min: 1 });
    }
    let mut cur = x.clone();
    for _ in 1..n {
        cur = cosyzygy(alg, &cur)?;
    }
    tau_inv(alg, &cur)
}

pub fn tau_n_of(alg: &KupischAlgebra, x: ModCoord, n: usize) -> Result<Summands> {
    on_coord(alg, x, |a, r| tau_n(a, r, n))
}

pub fn tau_n_inv_of(alg: &KupischAlgebra, x: ModCoord, n: usize) -> Result<Summands> {
    on_coord(alg, x, |a, r| tau_n_inv(a, r, n))
}

/// Collapses a summand list to a single coordinate: zero for no summands,
/// `None` for a decomposable module.
pub fn single(summands: &[ModCoord]) -> Option<ModCoord> {
    match summands {
        [] => Some(ModCoord::Zero),
        [x] => Some(*x),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::representation::to_matrices;

    fn m(i: usize, j: usize) -> ModCoord {
        ModCoord::new(i, j)
    }

    fn l93() -> KupischAlgebra {
        KupischAlgebra::homogeneous(9, 3)
    }

    #[test]
    fn covers() {
        let a = l93();
        let cover = projective_cover(&a, &to_matrices(&a, m(4, 1)).unwrap()).unwrap();
        assert_eq!(cover.summands, vec![m(2, 3)]);
        assert!(cover.surjection.is_surjective());

        let sum = to_matrices(&a, m(1, 2))
            .unwrap()
            .direct_sum(&to_matrices(&a, m(3, 1)).unwrap())
            .unwrap();
        let cover = projective_cover(&a, &sum).unwrap();
        assert_eq!(cover.tops, vec![2, 3]);
        assert_eq!(
            cover.summands,
            vec![a.projective(2).unwrap(), a.projective(3).unwrap()]
        );

        for k in 1..=9 {
            let p = a.projective(k).unwrap();
            let cover = projective_cover(&a, &to_matrices(&a, p).unwrap()).unwrap();
            assert_eq!(cover.summands, vec![p]);
            assert_eq!(cover.surjection.maps.iter().map(Matrix::rank).sum::<usize>(), p.length());
        }
        assert_eq!(
            projective_cover(&a, &Representation::zero(9)).unwrap_err(),
            Error::ZeroModule
        );
    }

    #[test]
    fn resolutions() {
        let a = l93();
        let res = min_resolution(&a, &to_matrices(&a, m(9, 1)).unwrap()).unwrap();
        assert_eq!(res.length(), 5);
        let res = min_resolution(&a, &to_matrices(&a, m(1, 3)).unwrap()).unwrap();
        assert_eq!(res.length(), 0);
        let res = min_resolution(&a, &to_matrices(&a, m(5, 2)).unwrap()).unwrap();
        assert_eq!(res.length(), 3);
        let syz: Vec<Vec<ModCoord>> = res
            .syzygies
            .iter()
            .map(|s| decompose(&a, s).unwrap())
            .collect();
        assert_eq!(syz, vec![vec![m(4, 1)], vec![m(2, 2)], vec![m(1, 1)]]);
        // Consecutive boundaries compose to zero once paths at least as
        // long as the relations are discarded.
        for i in 0..res.boundaries.len().saturating_sub(1) {
            let (d0, d1) = (&res.boundaries[i], &res.boundaries[i + 1]);
            let product = d0 * d1;
            for (s, &ks) in res.terms[i].iter().enumerate() {
                for (u, &ku) in res.terms[i + 2].iter().enumerate() {
                    if a.path_nonzero(ks, ku) {
                        assert!(product[(s, u)] == Q::from_integer(0.into()));
                    }
                }
            }
        }
    }

    #[test]
    fn translates() {
        let a = l93();
        assert_eq!(syzygy_of(&a, m(4, 1)).unwrap(), vec![m(2, 2)]);
        assert_eq!(cosyzygy_of(&a, m(1, 1)).unwrap(), vec![m(2, 2)]);
        assert_eq!(cosyzygy_of(&a, m(8, 1)).unwrap(), vec![m(9, 1)]);
        assert_eq!(cosyzygy_of(&a, m(8, 2)).unwrap(), vec![]);
        assert_eq!(tau_of(&a, m(4, 1)).unwrap(), vec![m(3, 1)]);
        assert_eq!(tau_of(&a, m(1, 2)).unwrap(), vec![]);
        assert_eq!(tau_inv_of(&a, m(3, 2)).unwrap(), vec![m(4, 2)]);
        assert_eq!(tau_n_inv_of(&a, m(1, 1), 2).unwrap(), vec![m(3, 2)]);
        assert_eq!(tau_n_inv_of(&a, m(6, 1), 2).unwrap(), vec![m(8, 2)]);
        assert_eq!(tau_n_inv_of(&a, m(1, 1), 3).unwrap(), vec![m(5, 1)]);
    }

    #[test]
    fn syzygies_of_uniserial_modules_stay_indecomposable() {
        // Submodules and quotients of uniserial modules are uniserial, so the
        // decomposable case never arises over a Nakayama algebra.
        for m_ in 2..=6 {
            for a in KupischAlgebra::enumerate(m_) {
                for x in a.indecomposables() {
                    let rep = to_matrices(&a, x).unwrap();
                    let cover = projective_cover(&a, &rep).unwrap();
                    let s = syzygy_of(&a, x).unwrap();
                    assert!(s.len() <= 1, "{a} {x}");
                    assert_eq!(
                        s.iter().map(|y| y.length()).sum::<usize>(),
                        cover.module.total_dim() - rep.total_dim()
                    );
                    assert!(cosyzygy_of(&a, x).unwrap().len() <= 1, "{a} {x}");
                }
            }
        }
    }
}
