use serde::Serialize;

use super::config::{BrauerConfiguration, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub vertex: VertexId,
}

impl Arrow {
    pub fn is_loop(&self) -> bool {
        self.source == self.target
    }
}

/// The Brauer quiver: one node per polygon, one arrow per covering in each
/// vertex's circular order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Quiver {
    pub nodes: usize,
    pub arrows: Vec<Arrow>,
    pub loop_count: usize,
}

impl Quiver {
    pub fn arrows_for<'a>(&'a self, v: &'a VertexId) -> impl Iterator<Item = &'a Arrow> + 'a {
        self.arrows.iter().filter(move |a| &a.vertex == v)
    }
}

/// Builds the quiver. A vertex of valency `k >= 2` contributes `k` arrows, one
/// per cyclically consecutive pair of its successor sequence (the wrap-around
/// arrow included). A valency-1 vertex contributes one loop at its polygon.
///
/// Arrows are ordered by vertex (first appearance), then by successor position.
pub fn build_quiver(config: &BrauerConfiguration) -> Quiver {
    let mut arrows = Vec::new();
    for (slot, v) in config.vertices().iter().enumerate() {
        let occ = config.occurrences_of_slot(slot);
        if occ.len() == 1 {
            arrows.push(Arrow {
                source: occ[0].polygon,
                target: occ[0].polygon,
                vertex: v.clone(),
            });
            continue;
        }
        for (k, o) in occ.iter().enumerate() {
            let next = &occ[(k + 1) % occ.len()];
            arrows.push(Arrow {
                source: o.polygon,
                target: next.polygon,
                vertex: v.clone(),
            });
        }
    }
    let loop_count = arrows.iter().filter(|a| a.is_loop()).count();
    Quiver {
        nodes: config.polygon_count(),
        arrows,
        loop_count,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> VertexId {
        VertexId::new(s).unwrap()
    }

    #[test]
    fn vigenere_quiver_has_nine_loops() {
        let c = BrauerConfiguration::from_char_words(&["OEXBDK", "OLFWD", "PRGDE", "AIGOP"]).unwrap();
        let q = build_quiver(&c);
        assert_eq!(q.loop_count, 9);
        let mut looped: Vec<&str> = q
            .arrows
            .iter()
            .filter(|a| a.is_loop())
            .map(|a| a.vertex.as_str())
            .collect();
        looped.sort();
        assert_eq!(looped, vec!["A", "B", "F", "I", "K", "L", "R", "W", "X"]);
        // O: y1 -> y2 -> y4 -> y1
        let o: Vec<(usize, usize)> = q.arrows_for(&v("O")).map(|a| (a.source, a.target)).collect();
        assert_eq!(o, vec![(0, 1), (1, 3), (3, 0)]);
    }

    #[test]
    fn confined_vertex_loops_once_per_occurrence() {
        // "aab": a gives two loops (0 -> 0 twice), b gives one.
        let c = BrauerConfiguration::from_char_words(&["aab"]).unwrap();
        let q = build_quiver(&c);
        assert_eq!(q.loop_count, 3);
        assert_eq!(q.arrows_for(&v("a")).count(), 2);
        assert_eq!(q.arrows_for(&v("b")).count(), 1);
    }

    #[test]
    fn arrow_count_matches_valencies() {
        let c = BrauerConfiguration::from_char_words(&["aabc", "bcd", "dde"]).unwrap();
        let q = build_quiver(&c);
        let expected: usize = c.valencies().map(|(_, k)| k).sum();
        assert_eq!(q.arrows.len(), expected);
    }
}
