//! Automorphism groups of colored graphs by individualization–refinement.
//!
//! Partitions are refined to the coarsest equitable partition with
//! neighbor counts per cell. The search walks a first path to a discrete
//! leaf, then, level by level from the bottom, tries every vertex of the
//! target cell that is not yet known to be in the orbit of the first-path
//! vertex and looks for a leaf equivalent to the first one. Each success is
//! an automorphism fixing the earlier first-path vertices, so the orbit
//! lengths found along the path multiply to the group order.
//!
//! The target cell is the first smallest non-singleton cell.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::incidence::ColoredGraph;
use crate::perm::Perm;

/// Default node budget for one automorphism search.
pub const DEFAULT_SEARCH_BUDGET: u64 = 2_000_000;

#[inline]
fn mix(h: u64, x: u64) -> u64 {
    (h ^ x).wrapping_mul(0x0100_0000_01b3).rotate_left(7)
}

/// An ordered partition of the vertex set into contiguous cells of `lab`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedPartition {
    lab: Vec<usize>,
    /// Start index of the cell containing each vertex.
    cell_of: Vec<usize>,
    /// Cell length, valid at cell start indices.
    len: Vec<usize>,
    num_cells: usize,
}

impl OrderedPartition {
    /// The partition with a single cell.
    pub fn unit(n: usize) -> Self {
        let mut len = alloc::vec![0; n];
        if n > 0 {
            len[0] = n;
        }
        OrderedPartition {
            lab: (0..n).collect(),
            cell_of: alloc::vec![0; n],
            len,
            num_cells: usize::from(n > 0),
        }
    }

    /// One cell per color, in increasing color order.
    pub fn from_colors(colors: &[u32]) -> Self {
        let mut lab: Vec<usize> = (0..colors.len()).collect();
        lab.sort_by_key(|&v| (colors[v], v));
        Self::from_ordered_cells_unchecked(&lab, |a, b| colors[a] == colors[b])
    }

    /// Builds a partition from explicit cells, in order. Cells must be
    /// nonempty and cover `0..n` exactly once.
    pub fn from_cells(n: usize, cells: &[Vec<usize>]) -> Result<Self> {
        let mut seen = alloc::vec![false; n];
        let mut lab = Vec::with_capacity(n);
        let mut cell_id = alloc::vec![0usize; n];
        for (k, cell) in cells.iter().enumerate() {
            if cell.is_empty() {
                return Err(Error::Parse(alloc::format!("cell {k} is empty")));
            }
            for &v in cell {
                if v >= n || seen[v] {
                    return Err(Error::Parse(alloc::format!("bad vertex {v} in cell {k}")));
                }
                seen[v] = true;
                cell_id[v] = k;
                lab.push(v);
            }
        }
        if lab.len() != n {
            return Err(Error::Parse("cells do not cover every vertex".into()));
        }
        Ok(Self::from_ordered_cells_unchecked(&lab, |a, b| {
            cell_id[a] == cell_id[b]
        }))
    }

    fn from_ordered_cells_unchecked(lab: &[usize], same: impl Fn(usize, usize) -> bool) -> Self {
        let n = lab.len();
        let mut p = OrderedPartition {
            lab: lab.to_vec(),
            cell_of: alloc::vec![0; n],
            len: alloc::vec![0; n],
            num_cells: 0,
        };
        let mut start = 0;
        for i in 0..n {
            if i > 0 && !same(lab[i - 1], lab[i]) {
                start = i;
            }
            if start == i {
                p.num_cells += 1;
            }
            p.cell_of[lab[i]] = start;
            p.len[start] += 1;
        }
        p
    }

    pub fn num_cells(&self) -> usize {
        self.num_cells
    }

    pub fn is_discrete(&self) -> bool {
        self.num_cells == self.lab.len()
    }

    /// The cells in order, each listed in its internal order.
    pub fn cells(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::with_capacity(self.num_cells);
        let mut i = 0;
        while i < self.lab.len() {
            let l = self.len[i];
            out.push(self.lab[i..i + l].to_vec());
            i += l;
        }
        out
    }

    /// The cells as sorted vertex sets, in order.
    pub fn sorted_cells(&self) -> Vec<Vec<usize>> {
        let mut cells = self.cells();
        for c in &mut cells {
            c.sort_unstable();
        }
        cells
    }

    fn cell_starts(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.num_cells);
        let mut i = 0;
        while i < self.lab.len() {
            out.push(i);
            i += self.len[i];
        }
        out
    }

    /// Whether every vertex of a cell has the same number of neighbors in
    /// each cell.
    pub fn is_equitable(&self, g: &ColoredGraph) -> bool {
        let starts = self.cell_starts();
        for &s in &starts {
            let mut counts = alloc::vec![0usize; g.num_vertices()];
            for &v in &self.lab[s..s + self.len[s]] {
                for &u in g.neighbors(v) {
                    counts[u] += 1;
                }
            }
            for &c in &starts {
                let cell = &self.lab[c..c + self.len[c]];
                if cell.iter().any(|&u| counts[u] != counts[cell[0]]) {
                    return false;
                }
            }
        }
        true
    }

    /// First smallest non-singleton cell, by start index.
    fn target_cell(&self) -> Option<usize> {
        self.cell_starts()
            .into_iter()
            .filter(|&s| self.len[s] > 1)
            .min_by_key(|&s| (self.len[s], s))
    }

    /// Splits `v` off the front of its cell.
    fn individualize(&mut self, v: usize) -> usize {
        let c = self.cell_of[v];
        let l = self.len[c];
        if l == 1 {
            return c;
        }
        let i = self.lab[c..c + l]
            .iter()
            .position(|&x| x == v)
            .expect("member")
            + c;
        self.lab.swap(c, i);
        self.len[c] = 1;
        self.len[c + 1] = l - 1;
        for k in c + 1..c + l {
            self.cell_of[self.lab[k]] = c + 1;
        }
        self.num_cells += 1;
        c
    }

    /// Refines with the given splitter cells until equitable; returns a
    /// hash of the splitting history, which is invariant under relabeling.
    fn refine_with(&mut self, g: &ColoredGraph, splitters: &[usize]) -> u64 {
        let n = self.lab.len();
        let mut trace = 0xcbf2_9ce4_8422_2325u64;
        let mut in_queue = alloc::vec![false; n];
        let mut queue = VecDeque::new();
        for &s in splitters {
            if !in_queue[s] {
                in_queue[s] = true;
                queue.push_back(s);
            }
        }
        let mut counts = alloc::vec![0u32; n];
        let mut touched: Vec<usize> = Vec::new();
        let mut splitter: Vec<usize> = Vec::new();
        while let Some(s) = queue.pop_front() {
            if self.is_discrete() {
                break;
            }
            in_queue[s] = false;
            splitter.clear();
            splitter.extend_from_slice(&self.lab[s..s + self.len[s]]);
            for &v in &splitter {
                for &u in g.neighbors(v) {
                    if counts[u] == 0 {
                        touched.push(u);
                    }
                    counts[u] += 1;
                }
            }
            let mut cells: Vec<usize> = touched.iter().map(|&u| self.cell_of[u]).collect();
            cells.sort_unstable();
            cells.dedup();
            for c in cells {
                let l = self.len[c];
                if l == 1 {
                    continue;
                }
                let slice = &mut self.lab[c..c + l];
                slice.sort_unstable_by_key(|&v| (counts[v], v));
                if counts[slice[0]] == counts[slice[l - 1]] {
                    continue;
                }
                trace = mix(trace, ((s as u64) << 32) | c as u64);
                let was_queued = in_queue[c];
                let mut start = c;
                for k in c..c + l {
                    let v = self.lab[k];
                    if k > c && counts[v] != counts[self.lab[k - 1]] {
                        self.len[start] = k - start;
                        trace = mix(
                            trace,
                            ((counts[self.lab[start]] as u64) << 32) | (k - start) as u64,
                        );
                        if !(start == c && was_queued) {
                            in_queue[start] = true;
                            queue.push_back(start);
                        }
                        start = k;
                        self.num_cells += 1;
                    }
                    self.cell_of[v] = start;
                }
                self.len[start] = c + l - start;
                trace = mix(
                    trace,
                    ((counts[self.lab[start]] as u64) << 32) | (c + l - start) as u64,
                );
                in_queue[start] = true;
                queue.push_back(start);
            }
            for &u in &touched {
                counts[u] = 0;
            }
            touched.clear();
        }
        mix(trace, self.num_cells as u64)
    }
}

/// Coarsest equitable refinement of `p`, taking every cell as a splitter.
/// Cells of `p` must not mix colors (use [`OrderedPartition::from_colors`]
/// or a refinement of it).
pub fn refine(g: &ColoredGraph, p: &OrderedPartition) -> OrderedPartition {
    let mut q = p.clone();
    let starts = q.cell_starts();
    q.refine_with(g, &starts);
    q
}

/// Result of an automorphism search.
#[derive(Clone, Debug)]
pub struct AutomorphismSearch {
    /// Generators of the color-preserving automorphism group, each verified
    /// edge by edge.
    pub generators: Vec<Perm>,
    /// Group order from the orbit lengths along the first path.
    pub order: BigUint,
    pub orbit_lengths: Vec<usize>,
    /// Search-tree nodes visited.
    pub nodes: u64,
}

struct Level {
    partition: OrderedPartition,
    target: usize,
}

struct Searcher<'g> {
    graph: &'g ColoredGraph,
    /// Partitions along the first path, one per individualization.
    path: Vec<Level>,
    /// (trace, cells) after each individualization; index d is depth d + 1.
    signatures: Vec<(u64, usize)>,
    leaf: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Searcher<'_> {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded {
                what: "automorphism search",
                limit: self.budget,
            });
        }
        Ok(())
    }

    /// Looks below `p` (at the given depth, signature already matched) for
    /// a leaf equivalent to the first-path leaf.
    fn search(&mut self, p: OrderedPartition, depth: usize) -> Result<Option<Perm>> {
        self.tick()?;
        if p.is_discrete() {
            let mut images = alloc::vec![0; p.lab.len()];
            for (i, &v) in self.leaf.iter().enumerate() {
                images[v] = p.lab[i];
            }
            let perm = Perm::from_images(images).expect("leaf labelings are bijective");
            return Ok(self.graph.is_automorphism(&perm).then_some(perm));
        }
        let target = p
            .target_cell()
            .expect("non-discrete partition has a target");
        if depth >= self.path.len() || target != self.path[depth].target {
            return Ok(None);
        }
        let cell: Vec<usize> = p.lab[target..target + p.len[target]].to_vec();
        for u in cell {
            let mut child = p.clone();
            let c = child.individualize(u);
            let trace = child.refine_with(self.graph, &[c]);
            if (trace, child.num_cells) != self.signatures[depth] {
                continue;
            }
            if let Some(perm) = self.search(child, depth + 1)? {
                return Ok(Some(perm));
            }
        }
        Ok(None)
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Generators and order of the color-preserving automorphism group of `g`.
pub fn automorphism_group(g: &ColoredGraph, budget: u64) -> Result<AutomorphismSearch> {
    let n = g.num_vertices();
    let mut root = OrderedPartition::from_colors(g.colors());
    let starts = root.cell_starts();
    root.refine_with(g, &starts);

    let mut searcher = Searcher {
        graph: g,
        path: Vec::new(),
        signatures: Vec::new(),
        leaf: Vec::new(),
        nodes: 0,
        budget,
    };
    let mut current = root;
    while let Some(target) = current.target_cell() {
        searcher.tick()?;
        let v = current.lab[target];
        let mut child = current.clone();
        let c = child.individualize(v);
        let trace = child.refine_with(g, &[c]);
        searcher.signatures.push((trace, child.num_cells));
        searcher.path.push(Level {
            partition: current,
            target,
        });
        current = child;
    }
    searcher.leaf = current.lab;

    let mut generators: Vec<Perm> = Vec::new();
    let mut orbit_lengths = Vec::with_capacity(searcher.path.len());
    for depth in (0..searcher.path.len()).rev() {
        let level = &searcher.path[depth];
        let target = level.target;
        let cell: Vec<usize> =
            level.partition.lab[target..target + level.partition.len[target]].to_vec();
        let first = cell[0];
        let mut orbits = UnionFind::new(n);
        for gen in &generators {
            for x in 0..n {
                orbits.union(x, gen.apply(x));
            }
        }
        for &w in &cell[1..] {
            if orbits.find(w) == orbits.find(first) {
                continue;
            }
            let mut child = searcher.path[depth].partition.clone();
            let c = child.individualize(w);
            let trace = child.refine_with(g, &[c]);
            if (trace, child.num_cells) != searcher.signatures[depth] {
                continue;
            }
            if let Some(perm) = searcher.search(child, depth + 1)? {
                for x in 0..n {
                    orbits.union(x, perm.apply(x));
                }
                generators.push(perm);
            }
        }
        let root = orbits.find(first);
        let len = cell.iter().filter(|&&w| orbits.find(w) == root).count();
        orbit_lengths.push(len);
    }
    orbit_lengths.reverse();
    let order = orbit_lengths
        .iter()
        .fold(BigUint::one(), |acc, &l| acc * BigUint::from(l));
    Ok(AutomorphismSearch {
        generators,
        order,
        orbit_lengths,
        nodes: searcher.nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::incidence::build_incidence;
    use crate::permgroup::PermGroup;

    fn mono(n: usize, edges: &[(usize, usize)]) -> ColoredGraph {
        ColoredGraph::new(alloc::vec![0; n], edges).unwrap()
    }

    fn cycle(n: usize) -> ColoredGraph {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        mono(n, &edges)
    }

    fn order(g: &ColoredGraph) -> BigUint {
        automorphism_group(g, DEFAULT_SEARCH_BUDGET).unwrap().order
    }

    #[test]
    fn refine_regular_graph_is_unchanged() {
        let g = cycle(6);
        let p = refine(&g, &OrderedPartition::unit(6));
        assert_eq!(p.num_cells(), 1);
    }

    #[test]
    fn refine_path_splits_by_degree() {
        let g = mono(3, &[(0, 1), (1, 2)]);
        let p = refine(&g, &OrderedPartition::unit(3));
        assert_eq!(
            p.sorted_cells(),
            alloc::vec![alloc::vec![0, 2], alloc::vec![1]]
        );
        assert!(p.is_equitable(&g));
    }

    #[test]
    fn refine_discrete_is_unchanged() {
        let g = mono(3, &[(0, 1), (1, 2)]);
        let cells = alloc::vec![alloc::vec![2], alloc::vec![0], alloc::vec![1]];
        let p = OrderedPartition::from_cells(3, &cells).unwrap();
        assert_eq!(refine(&g, &p).cells(), cells);
    }

    #[test]
    fn small_groups() {
        assert_eq!(order(&cycle(3)), BigUint::from(6u32));
        assert_eq!(order(&cycle(4)), BigUint::from(8u32));
        assert_eq!(order(&cycle(7)), BigUint::from(14u32));
        assert_eq!(order(&mono(4, &[])), BigUint::from(24u32));
        // Petersen graph
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        assert_eq!(order(&mono(10, &edges)), BigUint::from(120u32));
    }

    #[test]
    fn colors_restrict_the_group() {
        let g =
            ColoredGraph::new(alloc::vec![0, 1, 0, 0], &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(order(&g), BigUint::from(2u32));
    }

    #[test]
    fn generators_are_automorphisms_and_match_the_order() {
        let g = build_incidence(6, &[alloc::vec![0, 1, 2], alloc::vec![3, 4, 5]]).unwrap();
        let res = automorphism_group(&g, DEFAULT_SEARCH_BUDGET).unwrap();
        for p in &res.generators {
            assert!(g.is_automorphism(p));
        }
        let group = PermGroup::from_generators(g.num_vertices(), &res.generators).unwrap();
        assert_eq!(group.order(), res.order);
        assert_eq!(res.order, BigUint::from(72u32));
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(
            automorphism_group(&cycle(12), 3),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
