//! Which `Lambda(m,l)` admit an n-cluster tilting subcategory, the canonical
//! candidate, and executable checks of the characterizing conditions.

use std::fmt;

use serde::Serialize;

use crate::algebra::{Algebra, ModCoord};
use crate::error::{Error, Result};
use crate::modset::ModSet;
use crate::oracle::{ExtTable, KupischAlgebra};

/// The branch of the classification matched by `(m, l, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "branch", rename_all = "snake_case")]
pub enum Classification {
    /// `l = 2` and `m = n k + 1`.
    LengthTwo { k: usize },
    /// `n` even and `m = (n/2) l + 1 + k (n l - l + 2)`.
    EvenOrder { k: usize },
    None,
}

impl Classification {
    pub fn admits(self) -> bool {
        self != Classification::None
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::LengthTwo { k } => write!(f, "admits (l=2, k={k})"),
            Classification::EvenOrder { k } => write!(f, "admits (n even, k={k})"),
            Classification::None => write!(f, "denies"),
        }
    }
}

fn order(n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::InvalidOrder { n, min })
    } else {
        Ok(())
    }
}

/// Classifies `(m, l, n)`; the `l = 2` branch is reported first when both
/// apply.
pub fn classify(m: usize, l: usize, n: usize) -> Result<Classification> {
    Algebra::new(m, l)?;
    order(n, 2)?;
    if l == 2 && (m - 1).is_multiple_of(n) {
        return Ok(Classification::LengthTwo { k: (m - 1) / n });
    }
    if n.is_multiple_of(2) {
        let base = n / 2 * l + 1;
        let step = n * l - l + 2;
        if m >= base && (m - base).is_multiple_of(step) {
            return Ok(Classification::EvenOrder {
                k: (m - base) / step,
            });
        }
    }
    Ok(Classification::None)
}

pub fn admits_nct(m: usize, l: usize, n: usize) -> Result<bool> {
    classify(m, l, n).map(Classification::admits)
}

/// `Some(d)` when the algebra has global dimension `d` and a d-cluster
/// tilting subcategory.
pub fn d_rep_finite(m: usize, l: usize) -> Result<Option<usize>> {
    Algebra::new(m, l)?;
    Ok(((m - 1).is_multiple_of(l) || l == 2).then(|| 2 * (m - 1) / l))
}

/// Closure of the projectives under `tau_n^-`. Built regardless of whether
/// the result is n-cluster tilting.
pub fn build_nct(alg: &Algebra, n: usize) -> Result<ModSet> {
    order(n, 1)?;
    let mut out = ModSet::new();
    for p in alg.projectives() {
        let mut cur = p;
        while !cur.is_zero() && out.insert(cur) {
            cur = alg.tau_n_inv(cur, n)?;
        }
    }
    Ok(out)
}

/// The characterizing conditions, in two equivalent groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Condition {
    /// Every projective lies in `C`.
    A1,
    /// `tau_n` and `tau_n^-` are mutually inverse bijections between the
    /// nonprojective and the noninjective members.
    A2,
    /// `Omega^i M` is indecomposable for nonprojective members, `0 < i < n`.
    A3,
    /// `Omega^-i N` is indecomposable for noninjective members, `0 < i < n`.
    A4,
    B1,
    /// `tau_n M` lies in `C` and `LS(M) = RS(tau_n M)` for nonprojective `M`.
    B2,
    /// `tau_n^- N` lies in `C` and `RS(N) = LS(tau_n^- N)` for noninjective `N`.
    B3,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Condition::A1 => "(a)(1)",
            Condition::A2 => "(a)(2)",
            Condition::A3 => "(a)(3)",
            Condition::A4 => "(a)(4)",
            Condition::B1 => "(b)(1)",
            Condition::B2 => "(b)(2)",
            Condition::B3 => "(b)(3)",
        };
        f.write_str(s)
    }
}

/// A module at which a condition fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub module: ModCoord,
    /// The syzygy degree, for the conditions that quantify over one.
    pub index: Option<usize>,
    pub reason: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.module)?;
        if let Some(i) = self.index {
            write!(f, " [i={i}]")?;
        }
        write!(f, ": {}", self.reason)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionResult {
    pub condition: Condition,
    pub holds: bool,
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub results: Vec<ConditionResult>,
}

impl ConditionReport {
    pub fn passes(&self) -> bool {
        self.results.iter().all(|r| r.holds)
    }

    pub fn get(&self, condition: Condition) -> Option<&ConditionResult> {
        self.results.iter().find(|r| r.condition == condition)
    }

    pub fn merge(mut self, other: ConditionReport) -> ConditionReport {
        self.results.extend(other.results);
        self
    }

    fn push(&mut self, condition: Condition, witnesses: Vec<Witness>) {
        self.results.push(ConditionResult {
            condition,
            holds: witnesses.is_empty(),
            witnesses,
        });
    }
}

impl fmt::Display for ConditionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            if r.holds {
                writeln!(f, "{} pass", r.condition)?;
            } else {
                writeln!(f, "{} FAIL", r.condition)?;
                for w in &r.witnesses {
                    writeln!(f, "  {w}")?;
                }
            }
        }
        Ok(())
    }
}

fn witness(module: ModCoord, index: Option<usize>, reason: String) -> Witness {
    Witness {
        module,
        index,
        reason,
    }
}

fn check_members(alg: &Algebra, c: &ModSet) -> Result<()> {
    for x in c {
        if !alg.contains(x) {
            return Err(Error::NotAModule(x));
        }
    }
    Ok(())
}

fn missing_projectives(alg: &Algebra, c: &ModSet) -> Vec<Witness> {
    alg.projectives()
        .into_iter()
        .filter(|p| !c.contains(*p))
        .map(|p| witness(p, None, "projective not in C".into()))
        .collect()
}

/// Conditions (a)(1)-(4), evaluated with the closed forms.
pub fn check_conditions_a(alg: &Algebra, n: usize, c: &ModSet) -> Result<ConditionReport> {
    order(n, 1)?;
    check_members(alg, c)?;
    let mut report = ConditionReport::default();
    report.push(Condition::A1, missing_projectives(alg, c));

    let mut bij = Vec::new();
    for x in c {
        if !alg.is_projective(x)? {
            let t = alg.tau_n(x, n)?;
            let reason = if t.is_zero() {
                Some(format!("tau_{n} is zero"))
            } else if !c.contains(t) {
                Some(format!("tau_{n} = {t} is not in C"))
            } else if alg.is_injective(t)? {
                Some(format!("tau_{n} = {t} is injective"))
            } else if alg.tau_n_inv(t, n)? != x {
                Some(format!("tau_{n}^- tau_{n} = {} differs", alg.tau_n_inv(t, n)?))
            } else {
                None
            };
            bij.extend(reason.map(|r| witness(x, None, r)));
        }
        if !alg.is_injective(x)? {
            let t = alg.tau_n_inv(x, n)?;
            let reason = if t.is_zero() {
                Some(format!("tau_{n}^- is zero"))
            } else if !c.contains(t) {
                Some(format!("tau_{n}^- = {t} is not in C"))
            } else if alg.is_projective(t)? {
                Some(format!("tau_{n}^- = {t} is projective"))
            } else if alg.tau_n(t, n)? != x {
                Some(format!("tau_{n} tau_{n}^- = {} differs", alg.tau_n(t, n)?))
            } else {
                None
            };
            bij.extend(reason.map(|r| witness(x, None, r)));
        }
    }
    report.push(Condition::A2, bij);

    // Syzygies of Lambda(m,l) are intervals or zero, so indecomposability
    // fails exactly when an iterate vanishes.
    for (cond, sign, skip) in [
        (Condition::A3, 1, Algebra::is_projective as fn(&Algebra, ModCoord) -> Result<bool>),
        (Condition::A4, -1, Algebra::is_injective),
    ] {
        let mut found = Vec::new();
        for x in c {
            if skip(alg, x)? {
                continue;
            }
            if let Some(i) = (1..n).find(|&i| alg.syzygy_iter(x, sign * i as i64).map_or(true, ModCoord::is_zero)) {
                let name = if sign > 0 { "syzygy" } else { "cosyzygy" };
                found.push(witness(x, Some(i), format!("{name} {i} is zero")));
            }
        }
        report.push(cond, found);
    }
    Ok(report)
}

/// Conditions (b)(1)-(3), with supports computed by the Ext oracle.
pub fn check_conditions_b(alg: &Algebra, n: usize, c: &ModSet) -> Result<ConditionReport> {
    check_conditions_b_with(alg, n, c, &ExtTable::new(&KupischAlgebra::from(alg)))
}

/// [`check_conditions_b`] against a precomputed table.
pub fn check_conditions_b_with(
    alg: &Algebra,
    n: usize,
    c: &ModSet,
    table: &ExtTable,
) -> Result<ConditionReport> {
    order(n, 1)?;
    check_members(alg, c)?;
    let mut report = ConditionReport::default();
    report.push(Condition::B1, missing_projectives(alg, c));

    let mut b2 = Vec::new();
    let mut b3 = Vec::new();
    for x in c {
        if !alg.is_projective(x)? {
            let t = alg.tau_n(x, n)?;
            if !c.contains(t) {
                b2.push(witness(x, None, format!("tau_{n} = {t} is not in C")));
            } else if table.left_support(x, n)? != table.right_support(t, n)? {
                b2.push(witness(x, None, format!("LS differs from RS of {t}")));
            }
        }
        if !alg.is_injective(x)? {
            let t = alg.tau_n_inv(x, n)?;
            if !c.contains(t) {
                b3.push(witness(x, None, format!("tau_{n}^- = {t} is not in C")));
            } else if table.right_support(x, n)? != table.left_support(t, n)? {
                b3.push(witness(x, None, format!("RS differs from LS of {t}")));
            }
        }
    }
    report.push(Condition::B2, b2);
    report.push(Condition::B3, b3);
    Ok(report)
}

/// Indecomposables `Y` with `Ext^i(X, Y) != 0` for some `0 < i < n`.
pub fn left_support(alg: &Algebra, x: ModCoord, n: usize) -> Result<ModSet> {
    support(alg, x, n, ExtTable::left_support)
}

/// Indecomposables `Y` with `Ext^i(Y, X) != 0` for some `0 < i < n`.
pub fn right_support(alg: &Algebra, x: ModCoord, n: usize) -> Result<ModSet> {
    support(alg, x, n, ExtTable::right_support)
}

fn support(
    alg: &Algebra,
    x: ModCoord,
    n: usize,
    side: fn(&ExtTable, ModCoord, usize) -> Result<ModSet>,
) -> Result<ModSet> {
    if x.is_zero() {
        return Err(Error::ZeroModule);
    }
    if !alg.contains(x) {
        return Err(Error::NotAModule(x));
    }
    order(n, 2)?;
    side(&ExtTable::new(&KupischAlgebra::from(alg)), x, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(i: usize, j: usize) -> ModCoord {
        ModCoord::new(i, j)
    }

    fn alg(m: usize, l: usize) -> Algebra {
        Algebra::new(m, l).unwrap()
    }

    fn set(pairs: &[(usize, usize)]) -> ModSet {
        pairs.iter().map(|&(i, j)| m(i, j)).collect()
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify(9, 3, 2).unwrap(), Classification::EvenOrder { k: 1 });
        assert_eq!(classify(9, 4, 4).unwrap(), Classification::EvenOrder { k: 0 });
        assert!(!admits_nct(5, 3, 2).unwrap());
        assert_eq!(classify(7, 2, 3).unwrap(), Classification::LengthTwo { k: 2 });
        assert_eq!(classify(5, 2, 2).unwrap(), Classification::LengthTwo { k: 2 });
        assert_eq!(classify(9, 3, 2).unwrap().to_string(), "admits (n even, k=1)");
        assert_eq!(classify(5, 3, 2).unwrap().to_string(), "denies");
        assert!(classify(5, 5, 2).is_err());
        assert!(classify(5, 3, 1).is_err());
    }

    #[test]
    fn d_rep_finite_examples() {
        assert_eq!(d_rep_finite(9, 4).unwrap(), Some(4));
        assert_eq!(d_rep_finite(9, 3).unwrap(), None);
        assert_eq!(d_rep_finite(4, 3).unwrap(), Some(2));
        assert_eq!(d_rep_finite(6, 2).unwrap(), Some(5));
        for m_ in 3..=14 {
            for l in 2..m_ {
                if let Some(d) = d_rep_finite(m_, l).unwrap() {
                    let a = alg(m_, l);
                    assert_eq!(d, a.global_dim());
                    assert!(admits_nct(m_, l, d).unwrap(), "({m_},{l})");
                    let expect: ModSet = a.projectives().into_iter().chain(a.injectives()).collect();
                    assert_eq!(build_nct(&a, d).unwrap(), expect);
                }
            }
        }
    }

    #[test]
    fn build_examples() {
        let example = set(&[
            (1, 1), (4, 1), (6, 1), (9, 1), (1, 2), (3, 2), (6, 2), (8, 2),
            (1, 3), (2, 3), (3, 3), (4, 3), (5, 3), (6, 3), (7, 3),
        ]);
        assert_eq!(build_nct(&alg(9, 3), 2).unwrap(), example);
        assert_eq!(build_nct(&alg(9, 4), 4).unwrap().len(), 12);
        assert_eq!(
            build_nct(&alg(4, 3), 2).unwrap(),
            set(&[(1, 1), (1, 2), (1, 3), (2, 3), (3, 2), (4, 1)])
        );
        let a = alg(6, 3);
        let all: ModSet = a.indecomposables().into_iter().collect();
        assert_eq!(build_nct(&a, 1).unwrap(), all);
    }

    #[test]
    fn orbits_partition_the_candidate() {
        for (m_, l, n) in [(9, 3, 2), (9, 4, 4), (11, 3, 3), (12, 2, 4)] {
            let a = alg(m_, l);
            let c = build_nct(&a, n).unwrap();
            for x in &c {
                let mut origins = Vec::new();
                for p in a.projectives() {
                    let mut cur = p;
                    let mut r = 0;
                    while !cur.is_zero() {
                        if cur == x {
                            origins.push((p, r));
                        }
                        cur = a.tau_n_inv(cur, n).unwrap();
                        r += 1;
                    }
                }
                assert_eq!(origins.len(), 1, "{x} in ({m_},{l},{n})");
            }
        }
    }

    #[test]
    fn conditions_on_examples() {
        let a = alg(9, 3);
        let c = build_nct(&a, 2).unwrap();
        assert!(check_conditions_a(&a, 2, &c).unwrap().passes());
        assert!(check_conditions_b(&a, 2, &c).unwrap().passes());

        let b = alg(9, 4);
        let c = build_nct(&b, 4).unwrap();
        assert!(check_conditions_a(&b, 4, &c).unwrap().passes());
        assert!(check_conditions_b(&b, 4, &c).unwrap().passes());

        let f = alg(5, 3);
        let c = build_nct(&f, 2).unwrap();
        let report = check_conditions_a(&f, 2, &c).unwrap();
        let a2 = report.get(Condition::A2).unwrap();
        assert!(!a2.holds);
        let modules: Vec<ModCoord> = a2.witnesses.iter().map(|w| w.module).collect();
        assert!(modules.contains(&m(3, 2)));
        assert!(!check_conditions_b(&f, 2, &c).unwrap().passes());
    }

    #[test]
    fn missing_projective_is_named() {
        let a = alg(9, 3);
        let mut c = build_nct(&a, 2).unwrap();
        c.remove(m(2, 3));
        let report = check_conditions_a(&a, 2, &c).unwrap();
        let a1 = report.get(Condition::A1).unwrap();
        assert_eq!(a1.witnesses.len(), 1);
        assert_eq!(a1.witnesses[0].module, m(2, 3));
        assert!(!report.passes());
    }

    #[test]
    fn supports() {
        let a = alg(9, 3);
        assert!(left_support(&a, m(4, 1), 2).unwrap().contains(m(2, 2)));
        assert!(left_support(&a, m(1, 3), 3).unwrap().is_empty());
        assert!(right_support(&a, m(8, 2), 3).unwrap().is_empty());
        assert_eq!(left_support(&a, ModCoord::Zero, 2), Err(Error::ZeroModule));
    }
}
