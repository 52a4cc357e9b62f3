//! Vertex-colored graphs and the element/set incidence graph.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::perm::Perm;

/// Color of ground-set vertices in an incidence graph.
pub const ELEMENT_COLOR: u32 = 0;
/// Color of set vertices in an incidence graph.
pub const SET_COLOR: u32 = 1;

/// An undirected simple graph with a color per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredGraph {
    colors: Vec<u32>,
    adjacency: Vec<Vec<usize>>,
    num_edges: usize,
}

impl ColoredGraph {
    /// Builds a graph from an edge list. Loops and repeated edges are
    /// rejected.
    pub fn new(colors: Vec<u32>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = colors.len();
        let mut adjacency = alloc::vec![Vec::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::IndexOutOfRange { index: x, size: n });
                }
            }
            if u == v {
                return Err(Error::Unsupported(alloc::format!("loop at vertex {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (u, adj) in adjacency.iter_mut().enumerate() {
            adj.sort_unstable();
            if adj.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Unsupported(alloc::format!(
                    "repeated edge at vertex {u}"
                )));
            }
        }
        Ok(ColoredGraph {
            colors,
            adjacency,
            num_edges: edges.len(),
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.colors.len()
    }

    pub fn num_edges(&self) -> usize {
        self.num_edges
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.num_edges);
        for (u, adj) in self.adjacency.iter().enumerate() {
            out.extend(adj.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// Whether `p` preserves colors and adjacency.
    pub fn is_automorphism(&self, p: &Perm) -> bool {
        if p.degree() != self.num_vertices() {
            return false;
        }
        (0..self.num_vertices()).all(|u| {
            self.colors[u] == self.colors[p.apply(u)]
                && self.adjacency[u].len() == self.adjacency[p.apply(u)].len()
                && self.adjacency[u]
                    .iter()
                    .all(|&v| self.has_edge(p.apply(u), p.apply(v)))
        })
    }

    /// The same graph with vertex `v` renamed to `relabel(v)`.
    pub fn relabeled(&self, relabel: &Perm) -> ColoredGraph {
        let mut colors = alloc::vec![0; self.num_vertices()];
        for (v, &c) in self.colors.iter().enumerate() {
            colors[relabel.apply(v)] = c;
        }
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (relabel.apply(u), relabel.apply(v)))
            .collect();
        ColoredGraph::new(colors, &edges).expect("relabeling preserves simplicity")
    }
}

/// The incidence graph G(X, F): vertices `0..ground_size` are elements
/// (color 0), followed by one set vertex (color 1) per member of `sets`,
/// joined to the elements it contains.
pub fn build_incidence(ground_size: usize, sets: &[Vec<usize>]) -> Result<ColoredGraph> {
    let mut seen: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut colors = alloc::vec![ELEMENT_COLOR; ground_size];
    let mut edges = Vec::new();
    for (k, set) in sets.iter().enumerate() {
        let mut sorted = set.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Unsupported(alloc::format!(
                "set #{k} repeats an element"
            )));
        }
        if seen.insert(sorted.clone(), k).is_some() {
            return Err(Error::DuplicateSet(k));
        }
        let vertex = ground_size + k;
        colors.push(SET_COLOR);
        for &x in &sorted {
            if x >= ground_size {
                return Err(Error::IndexOutOfRange {
                    index: x,
                    size: ground_size,
                });
            }
            edges.push((x, vertex));
        }
    }
    ColoredGraph::new(colors, &edges)
}

/// Restricts a color-preserving automorphism of an incidence graph to its
/// ground set (the first `ground_size` vertices).
pub fn restrict_to_ground(automorphism: &Perm, ground_size: usize) -> Result<Perm> {
    let images = automorphism.images()[..ground_size].to_vec();
    Perm::from_images(images).map_err(|_| {
        Error::Unsupported("automorphism does not preserve the element vertices".into())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star() {
        let g = build_incidence(3, &[alloc::vec![0, 1, 2]]).unwrap();
        assert_eq!(g.num_vertices(), 4);
        assert_eq!(g.num_edges(), 3);
        assert_eq!(g.colors(), &[0, 0, 0, 1]);
        assert_eq!(g.neighbors(3), &[0, 1, 2]);
    }

    #[test]
    fn duplicate_sets_are_rejected() {
        let err = build_incidence(3, &[alloc::vec![0, 1], alloc::vec![1, 0]]).unwrap_err();
        assert_eq!(err, Error::DuplicateSet(1));
        assert!(build_incidence(2, &[alloc::vec![0, 2]]).is_err());
        assert!(build_incidence(3, &[alloc::vec![1, 1]]).is_err());
    }

    #[test]
    fn restriction_of_identity() {
        let p = restrict_to_ground(&Perm::identity(7), 4).unwrap();
        assert!(p.is_identity());
        assert_eq!(p.degree(), 4);
        // A map sending an element vertex to a set vertex does not restrict.
        let bad = Perm::from_cycles(5, &[&[0, 4]]).unwrap();
        assert!(restrict_to_ground(&bad, 3).is_err());
    }

    #[test]
    fn automorphism_check() {
        let g = build_incidence(3, &[alloc::vec![0, 1]]).unwrap();
        assert!(g.is_automorphism(&Perm::from_cycles(4, &[&[0, 1]]).unwrap()));
        assert!(!g.is_automorphism(&Perm::from_cycles(4, &[&[0, 2]]).unwrap()));
        // color change
        assert!(!g.is_automorphism(&Perm::from_cycles(4, &[&[2, 3]]).unwrap()));
    }
}
