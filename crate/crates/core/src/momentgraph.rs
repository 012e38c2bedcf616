//! Parabolic moment graphs: vertices `W^P`, edges `w -> min_rep(s_a w)`
//! labelled by positive roots.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use hashbrown::HashMap;

use crate::coxeter::{CoxeterGroup, GroupElement, Parabolic, Word};
use crate::poly::Poly;
use crate::qring::GoldenInt;
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub source: usize,
    pub target: usize,
    /// Index into the group's positive roots.
    pub root: usize,
}

#[derive(Debug, Clone)]
pub struct MomentGraph {
    vertices: Vec<GroupElement>,
    words: Vec<Word>,
    edges: Vec<Edge>,
    parabolic: Parabolic,
    index: HashMap<GroupElement, usize>,
    roots: Vec<Vec<GoldenInt>>,
    ring: crate::qring::QuadraticRing,
    rank: usize,
}

impl MomentGraph {
    pub fn build(group: &CoxeterGroup, p: Parabolic) -> Result<Self> {
        let vertices = group.enumerate_quotient(p)?;
        let words: Vec<Word> = vertices.iter().map(|v| group.lex_least_word(v)).collect();
        let index: HashMap<GroupElement, usize> = vertices.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        let roots = group.positive_roots().to_vec();
        let mut edges = Vec::new();
        for (i, w) in vertices.iter().enumerate() {
            let winv = w.inverse();
            for (k, root) in roots.iter().enumerate() {
                // w < s_a w iff w^{-1}(a) > 0.
                let pre = winv.apply(root);
                let positive = pre.iter().map(|c| c.sign()).find(|s| s.is_ne()).map(|s| s.is_gt()).unwrap_or(false);
                if !positive {
                    continue;
                }
                let v = group.min_coset_rep(&group.mul(group.reflection(k), w), p);
                if v == *w {
                    continue;
                }
                let j = *index.get(&v).expect("coset representative is a vertex");
                edges.push(Edge { source: i, target: j, root: k });
            }
        }
        Ok(MomentGraph {
            vertices,
            words,
            edges,
            parabolic: p,
            index,
            roots,
            ring: group.datum().ring(),
            rank: group.rank(),
        })
    }

    pub fn vertices(&self) -> &[GroupElement] {
        &self.vertices
    }

    /// Lex-least reduced word of each vertex.
    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn parabolic(&self) -> Parabolic {
        self.parabolic
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ring(&self) -> crate::qring::QuadraticRing {
        self.ring
    }

    pub fn vertex_index(&self, w: &GroupElement) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn root(&self, k: usize) -> &[GoldenInt] {
        &self.roots[k]
    }

    pub fn label(&self, e: &Edge) -> Poly {
        Poly::linear_golden(self.ring, &self.roots[e.root])
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Deterministic DOT rendering. Node names are lex-least words, labels
    /// are linear forms in `{prefix}1..`.
    pub fn to_dot(&self, prefix: &str) -> String {
        let mut out = String::from("digraph moment_graph {\n");
        for w in &self.words {
            let _ = writeln!(out, "  \"{}\";", w.render(self.rank));
        }
        for e in &self.edges {
            let _ = writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"{}\"];",
                self.words[e.source].render(self.rank),
                self.words[e.target].render(self.rank),
                self.label(e).render(prefix)
            );
        }
        out.push_str("}\n");
        out
    }

    /// Label of an edge as coordinate strings, for JSON export.
    pub fn label_coords(&self, e: &Edge) -> Vec<String> {
        self.roots[e.root].iter().map(|c| format!("{c}")).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootDatum;

    fn graph(name: &str, p: &[usize]) -> MomentGraph {
        let g = CoxeterGroup::new(RootDatum::simply_laced_type(name).unwrap()).unwrap();
        MomentGraph::build(&g, Parabolic::from_one_based(p)).unwrap()
    }

    #[test]
    fn a2_full() {
        let m = graph("A2", &[]);
        assert_eq!(m.len(), 6);
        assert_eq!(m.edges().len(), 9);
    }

    #[test]
    fn a2_parabolic() {
        let m = graph("A2", &[1]);
        let words: Vec<String> = m.words().iter().map(|w| w.render(2)).collect();
        assert_eq!(words, ["e", "2", "12"]);
        let mut edges: Vec<(String, String, String)> = m
            .edges()
            .iter()
            .map(|e| (words[e.source].clone(), words[e.target].clone(), m.label(e).render("a")))
            .collect();
        edges.sort();
        assert_eq!(
            edges,
            [
                ("2".into(), "12".into(), "a1".into()),
                ("e".into(), "12".into(), "a1 + a2".into()),
                ("e".into(), "2".into(), "a2".into()),
            ]
        );
    }

    #[test]
    fn a1_dot() {
        let m = graph("A1", &[]);
        let dot = m.to_dot("a");
        assert_eq!(dot, "digraph moment_graph {\n  \"e\";\n  \"1\";\n  \"e\" -> \"1\" [label=\"a1\"];\n}\n");
        assert_eq!(dot, graph("A1", &[]).to_dot("a"));
    }

    #[test]
    fn in_degree_is_length() {
        let m = graph("A3", &[]);
        for (i, v) in m.vertices().iter().enumerate() {
            let indeg = m.edges().iter().filter(|e| e.target == i).count();
            assert_eq!(indeg, v.length());
        }
    }
}
