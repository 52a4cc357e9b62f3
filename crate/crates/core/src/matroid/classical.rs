//! Circuits of A_n, B_n and D_n generated from colored-graph shapes, with no
//! rank computations.
//!
//! A set of lines is drawn on vertices e_i: a black edge i–j for e_i − e_j,
//! a red edge for e_i + e_j, and a mark on i for e_i. Circuits are exactly:
//!
//! * A_n: cycles (all edges black);
//! * D_n: cycles with an even number of red edges, or two cycles with an odd
//!   number of red edges each (a black/red digon counts as a cycle) joined by
//!   a path, or sharing a single vertex;
//! * B_n: the D_n shapes, a path with both end vertices marked, or an odd
//!   cycle with a path (possibly of length 0) to a single marked vertex.
//!
//! The order of a circuit is its number of edges plus marks.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::Circuit;
use crate::error::{Error, Result};
use crate::roots::{Family, RootSystem};
use crate::scalar::Rational;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Color {
    Black,
    Red,
}

#[derive(Clone, Debug)]
struct ColoredCycle {
    vertices: Vec<usize>,
    lines: Vec<usize>,
    odd: bool,
}

struct Shapes {
    vertices: usize,
    colors: Vec<Color>,
    black: Vec<Option<usize>>,
    red: Vec<Option<usize>>,
    marks: Vec<Option<usize>>,
    kmax: usize,
    budget: u64,
    nodes: u64,
    found: BTreeSet<Vec<usize>>,
}

impl Shapes {
    fn new(system: &RootSystem, family: Family, kmax: usize, budget: u64) -> Self {
        let vertices = system.ambient_dim();
        let vec_of = |i: usize, j: Option<usize>, sign: i64| {
            let mut v = alloc::vec![Rational::from_int(0); vertices];
            v[i] = Rational::from_int(1);
            if let Some(j) = j {
                v[j] = Rational::from_int(sign);
            }
            system.find_line(&v)
        };
        let mut black = alloc::vec![None; vertices * vertices];
        let mut red = alloc::vec![None; vertices * vertices];
        for i in 0..vertices {
            for j in 0..vertices {
                if i != j {
                    black[i * vertices + j] = vec_of(i, Some(j), -1);
                    red[i * vertices + j] = vec_of(i, Some(j), 1);
                }
            }
        }
        let marks = (0..vertices).map(|i| vec_of(i, None, 0)).collect();
        let colors = match family {
            Family::A => alloc::vec![Color::Black],
            _ => alloc::vec![Color::Black, Color::Red],
        };
        Shapes {
            vertices,
            colors,
            black,
            red,
            marks,
            kmax,
            budget,
            nodes: 0,
            found: BTreeSet::new(),
        }
    }

    fn edge(&self, a: usize, b: usize, color: Color) -> usize {
        let table = match color {
            Color::Black => &self.black,
            Color::Red => &self.red,
        };
        table[a * self.vertices + b].expect("edge line exists")
    }

    fn mark(&self, v: usize) -> usize {
        self.marks[v].expect("short root exists")
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded {
                what: "classical circuit enumeration",
                limit: self.budget,
            });
        }
        Ok(())
    }

    fn emit(&mut self, lines: Vec<usize>) -> Result<()> {
        self.tick()?;
        if lines.len() <= self.kmax {
            let c = Circuit::new(lines);
            self.found.insert(c.0);
        }
        Ok(())
    }

    /// All colorings of a sequence of edges: (lines, number of red edges).
    fn colorings(&self, edges: &[(usize, usize)]) -> Vec<(Vec<usize>, usize)> {
        let mut out = alloc::vec![(Vec::new(), 0usize)];
        for &(a, b) in edges {
            let mut next = Vec::with_capacity(out.len() * self.colors.len());
            for (lines, reds) in &out {
                for &c in &self.colors {
                    let mut l = lines.clone();
                    l.push(self.edge(a, b, c));
                    next.push((l, reds + usize::from(c == Color::Red)));
                }
            }
            out = next;
        }
        out
    }

    /// Simple vertex cycles of length ≥ 3 with at most `kmax` edges, each
    /// listed once (smallest vertex first, one direction).
    fn vertex_cycles(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for s in 0..self.vertices {
            let mut path = alloc::vec![s];
            self.cycle_dfs(&mut path, &mut out);
        }
        out
    }

    fn cycle_dfs(&self, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let s = path[0];
        if path.len() >= 3 && path[1] < *path.last().expect("nonempty") {
            out.push(path.clone());
        }
        if path.len() == self.kmax {
            return;
        }
        for w in s + 1..self.vertices {
            if !path.contains(&w) {
                path.push(w);
                self.cycle_dfs(path, out);
                path.pop();
            }
        }
    }

    fn colored_cycles(&self) -> Vec<ColoredCycle> {
        let mut out = Vec::new();
        for verts in self.vertex_cycles() {
            let edges: Vec<(usize, usize)> = (0..verts.len())
                .map(|k| (verts[k], verts[(k + 1) % verts.len()]))
                .collect();
            for (lines, reds) in self.colorings(&edges) {
                out.push(ColoredCycle {
                    vertices: verts.clone(),
                    lines,
                    odd: reds % 2 == 1,
                });
            }
        }
        out
    }

    fn digons(&self) -> Vec<ColoredCycle> {
        let mut out = Vec::new();
        for a in 0..self.vertices {
            for b in a + 1..self.vertices {
                out.push(ColoredCycle {
                    vertices: alloc::vec![a, b],
                    lines: alloc::vec![self.edge(a, b, Color::Black), self.edge(a, b, Color::Red)],
                    odd: true,
                });
            }
        }
        out
    }

    /// Simple paths from `start` with at most `max_edges` edges. Vertices
    /// flagged in `forbidden` are never entered. With `terminal`, paths stop
    /// at (and must end on) a terminal vertex; without it every path,
    /// including the bare start, is reported.
    fn paths(
        &self,
        start: usize,
        max_edges: usize,
        forbidden: &[bool],
        terminal: Option<&[bool]>,
    ) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut path = alloc::vec![start];
        if terminal.is_none() {
            out.push(path.clone());
        }
        self.path_dfs(&mut path, max_edges, forbidden, terminal, &mut out);
        out
    }

    fn path_dfs(
        &self,
        path: &mut Vec<usize>,
        max_edges: usize,
        forbidden: &[bool],
        terminal: Option<&[bool]>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if path.len() > max_edges {
            return;
        }
        for w in 0..self.vertices {
            if path.contains(&w) {
                continue;
            }
            match terminal {
                Some(t) if t[w] => {
                    path.push(w);
                    out.push(path.clone());
                    path.pop();
                }
                _ if forbidden[w] => {}
                _ => {
                    path.push(w);
                    if terminal.is_none() {
                        out.push(path.clone());
                    }
                    self.path_dfs(path, max_edges, forbidden, terminal, out);
                    path.pop();
                }
            }
        }
    }

    fn path_edges(path: &[usize]) -> Vec<(usize, usize)> {
        path.windows(2).map(|w| (w[0], w[1])).collect()
    }

    fn flags(&self, vertices: &[usize]) -> Vec<bool> {
        let mut f = alloc::vec![false; self.vertices];
        for &v in vertices {
            f[v] = true;
        }
        f
    }

    fn run(&mut self, family: Family) -> Result<()> {
        let cycles = self.colored_cycles();
        for c in cycles.iter().filter(|c| !c.odd) {
            self.emit(c.lines.clone())?;
        }
        if family == Family::A {
            return Ok(());
        }

        let mut odd: Vec<ColoredCycle> = cycles.into_iter().filter(|c| c.odd).collect();
        odd.extend(self.digons());
        odd.retain(|c| c.lines.len() < self.kmax);

        // Two odd cycles joined by a path or sharing one vertex.
        for i in 0..odd.len() {
            for j in i + 1..odd.len() {
                let (c1, c2) = (&odd[i], &odd[j]);
                let used = c1.lines.len() + c2.lines.len();
                if used > self.kmax {
                    continue;
                }
                let shared = c1
                    .vertices
                    .iter()
                    .filter(|v| c2.vertices.contains(v))
                    .count();
                let base: Vec<usize> = c1.lines.iter().chain(&c2.lines).copied().collect();
                if shared == 1 {
                    self.emit(base)?;
                    continue;
                }
                if shared > 1 || used == self.kmax {
                    continue;
                }
                let forbidden = self.flags(&c1.vertices);
                let terminal = self.flags(&c2.vertices);
                for &u in &c1.vertices {
                    for p in self.paths(u, self.kmax - used, &forbidden, Some(&terminal)) {
                        for (lines, _) in self.colorings(&Self::path_edges(&p)) {
                            let mut all = base.clone();
                            all.extend(lines);
                            self.emit(all)?;
                        }
                    }
                }
            }
        }
        if family == Family::D {
            return Ok(());
        }

        // Paths with both ends marked.
        let none = alloc::vec![false; self.vertices];
        for u in 0..self.vertices {
            for p in self.paths(u, self.kmax.saturating_sub(2), &none, None) {
                let v = *p.last().expect("nonempty");
                if v <= u {
                    continue;
                }
                for (mut lines, _) in self.colorings(&Self::path_edges(&p)) {
                    lines.push(self.mark(u));
                    lines.push(self.mark(v));
                    self.emit(lines)?;
                }
            }
        }

        // An odd cycle with a path to one marked vertex.
        for c in &odd {
            if c.lines.len() + 1 > self.kmax {
                continue;
            }
            let forbidden = self.flags(&c.vertices);
            let room = self.kmax - c.lines.len() - 1;
            for &start in &c.vertices {
                for p in self.paths(start, room, &forbidden, None) {
                    let m = *p.last().expect("nonempty");
                    for (lines, _) in self.colorings(&Self::path_edges(&p)) {
                        let mut all = c.lines.clone();
                        all.extend(lines);
                        all.push(self.mark(m));
                        self.emit(all)?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Circuits of order at most `kmax` of A_n, B_n or D_n, as line indices of
/// `RootSystem::build(family, n)`, lexicographically sorted.
pub fn classical_circuits(
    family: Family,
    n: usize,
    kmax: usize,
    budget: u64,
) -> Result<Vec<Circuit>> {
    if !matches!(family, Family::A | Family::B | Family::D) {
        return Err(Error::Unsupported(alloc::format!(
            "no colored-graph circuit catalogue for {family:?}"
        )));
    }
    let system = RootSystem::build(family, n)?;
    let mut shapes = Shapes::new(&system, family, kmax.min(system.rank() + 1), budget);
    shapes.run(family)?;
    Ok(shapes.found.into_iter().map(Circuit).collect())
}
