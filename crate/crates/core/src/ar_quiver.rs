//! The Auslander-Reiten quiver of `Lambda(m,l)` and its DOT and JSON
//! exports.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, ModCoord};
use crate::error::{Error, Result};
use crate::modset::ModSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverGraph {
    pub algebra: Algebra,
    pub vertices: Vec<ModCoord>,
    pub arrows: Vec<(ModCoord, ModCoord)>,
    /// Empty when nothing is highlighted.
    pub highlights: ModSet,
}

/// Vertices in canonical order; arrows sorted by source, then target.
pub fn build(alg: &Algebra) -> QuiverGraph {
    let vertices = alg.indecomposables();
    let mut arrows = Vec::new();
    for &x in &vertices {
        let (i, j) = x.coords().expect("indecomposables are nonzero");
        let (i, j) = (i as i64, j as i64);
        for y in [alg.coord(i, j + 1), alg.coord(i + 1, j - 1)] {
            if !y.is_zero() {
                arrows.push((x, y));
            }
        }
    }
    arrows.sort();
    QuiverGraph {
        algebra: *alg,
        vertices,
        arrows,
        highlights: ModSet::new(),
    }
}

impl QuiverGraph {
    pub fn with_highlights(mut self, highlights: ModSet) -> Result<Self> {
        if let Some(x) = highlights.iter().find(|x| !self.algebra.contains(*x)) {
            return Err(Error::NotAModule(x));
        }
        self.highlights = highlights;
        Ok(self)
    }
}

fn node(x: ModCoord) -> String {
    let (i, j) = x.coords().expect("quiver vertices are nonzero");
    format!("M_{i}_{j}")
}

/// Graphviz source. Positions put length on the vertical axis and shift each
/// row by half a step, giving the usual staircase.
pub fn export_dot(g: &QuiverGraph) -> String {
    let mut out = String::new();
    let (m, l) = (g.algebra.m(), g.algebra.l());
    writeln!(out, "digraph \"Lambda_{m}_{l}\" {{").unwrap();
    writeln!(out, "  node [shape=circle, fontsize=10];").unwrap();
    for &x in &g.vertices {
        let (i, j) = x.coords().unwrap();
        let highlight = if g.highlights.contains(x) {
            ", shape=doublecircle, style=filled, fillcolor=lightgray"
        } else {
            ""
        };
        writeln!(
            out,
            "  {} [label=\"{i},{j}\", pos=\"{},{}!\"{highlight}];",
            node(x),
            2 * i + j - 1,
            j
        )
        .unwrap();
    }
    for &(s, t) in &g.arrows {
        writeln!(out, "  {} -> {};", node(s), node(t)).unwrap();
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize, Deserialize)]
struct AlgebraJson {
    m: usize,
    l: usize,
}

#[derive(Serialize, Deserialize)]
struct QuiverJson {
    algebra: AlgebraJson,
    vertices: Vec<ModCoord>,
    arrows: Vec<(ModCoord, ModCoord)>,
    highlights: ModSet,
}

/// One line of compact JSON.
pub fn export_json(g: &QuiverGraph) -> String {
    let doc = QuiverJson {
        algebra: AlgebraJson {
            m: g.algebra.m(),
            l: g.algebra.l(),
        },
        vertices: g.vertices.clone(),
        arrows: g.arrows.clone(),
        highlights: g.highlights.clone(),
    };
    let mut s = serde_json::to_string(&doc).expect("quiver serializes");
    s.push('\n');
    s
}

/// Inverse of [`export_json`]; validates the algebra and every module.
pub fn parse_json(text: &str) -> Result<QuiverGraph> {
    let doc: QuiverJson = serde_json::from_str(text)
        .map_err(|e| Error::ShapeMismatch(format!("invalid quiver JSON: {e}")))?;
    let algebra = Algebra::new(doc.algebra.m, doc.algebra.l)?;
    let mut mods = doc.vertices.clone();
    mods.extend(doc.arrows.iter().flat_map(|&(s, t)| [s, t]));
    mods.extend(doc.highlights.iter());
    for x in mods {
        if !algebra.contains(x) {
            return Err(Error::NotAModule(x));
        }
    }
    Ok(QuiverGraph {
        algebra,
        vertices: doc.vertices,
        arrows: doc.arrows,
        highlights: doc.highlights,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cluster_tilting::build_nct;

    fn alg(m: usize, l: usize) -> Algebra {
        Algebra::new(m, l).unwrap()
    }

    #[test]
    fn sizes() {
        let g = build(&alg(9, 3));
        assert_eq!(g.vertices.len(), 24);
        assert_eq!(g.arrows.len(), 30);
        assert_eq!(build(&alg(9, 4)).vertices.len(), 30);
        let small = build(&alg(3, 2));
        assert_eq!(small.vertices.len(), 5);
        assert_eq!(small.arrows.len(), 4);
    }

    #[test]
    fn arrow_count_formula_and_acyclicity() {
        for m in 3..=12 {
            for l in 2..m {
                let a = alg(m, l);
                let g = build(&a);
                let up = g
                    .vertices
                    .iter()
                    .filter(|x| {
                        let (i, j) = x.coords().unwrap();
                        !a.coord(i as i64, j as i64 + 1).is_zero()
                    })
                    .count();
                let across = g
                    .vertices
                    .iter()
                    .filter(|x| {
                        let (i, j) = x.coords().unwrap();
                        !a.coord(i as i64 + 1, j as i64 - 1).is_zero()
                    })
                    .count();
                assert_eq!(g.arrows.len(), up + across);
                // 2i + j strictly increases along every arrow.
                for (s, t) in &g.arrows {
                    let key = |x: &ModCoord| {
                        let (i, j) = x.coords().unwrap();
                        2 * i + j
                    };
                    assert!(key(s) < key(t));
                }
            }
        }
    }

    #[test]
    fn highlights_in_exports() {
        let a = alg(9, 3);
        let plain = export_dot(&build(&a));
        assert!(!plain.contains("doublecircle"));
        let g = build(&a).with_highlights(build_nct(&a, 2).unwrap()).unwrap();
        let dot = export_dot(&g);
        assert_eq!(dot.matches("doublecircle").count(), 15);
        assert!(dot.contains("M_4_1 [label=\"4,1\", pos=\"8,1!\""));
    }

    #[test]
    fn json_round_trip() {
        let a = alg(9, 4);
        let g = build(&a).with_highlights(build_nct(&a, 4).unwrap()).unwrap();
        let text = export_json(&g);
        assert!(text.starts_with("{\"algebra\":{\"m\":9,\"l\":4},\"vertices\":[[1,1],[2,1]"));
        assert_eq!(parse_json(&text).unwrap(), g);
        let plain = build(&alg(3, 2));
        let text = export_json(&plain);
        assert!(text.ends_with("\"highlights\":[]}\n"));
        assert_eq!(parse_json(&text).unwrap(), plain);
        assert!(parse_json("{\"algebra\":{\"m\":3,\"l\":2},\"vertices\":[[1,3]],\"arrows\":[],\"highlights\":[]}").is_err());
    }
}
