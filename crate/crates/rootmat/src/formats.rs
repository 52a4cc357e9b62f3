//! File formats: circuit dumps, DIMACS graphs, generator lists.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::{self, BufRead, Write};

use rootmat_core::{Circuit, ColoredGraph, Perm};
use serde::{Deserialize, Serialize};

/// JSON dump of the circuits of a system up to a maximum order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CircuitDump {
    pub system: String,
    /// Largest circuit order included.
    pub order: usize,
    pub circuits: Vec<Vec<usize>>,
}

impl CircuitDump {
    pub fn new(system: &str, order: usize, circuits: &[Circuit]) -> Self {
        CircuitDump {
            system: system.to_string(),
            order,
            circuits: circuits.iter().map(|c| c.elements().to_vec()).collect(),
        }
    }

    /// Number of circuits of each order.
    pub fn counts(&self) -> BTreeMap<usize, usize> {
        let mut counts = BTreeMap::new();
        for c in &self.circuits {
            *counts.entry(c.len()).or_insert(0) += 1;
        }
        counts
    }

    pub fn to_text_table(&self) -> String {
        let mut out = String::new();
        writeln!(out, "system {}  max order {}", self.system, self.order).unwrap();
        writeln!(out, "{:>5} {:>10}", "order", "circuits").unwrap();
        for (k, n) in self.counts() {
            writeln!(out, "{k:>5} {n:>10}").unwrap();
        }
        writeln!(out, "{:>5} {:>10}", "total", self.circuits.len()).unwrap();
        out
    }
}

/// Writes a colored graph in DIMACS edge format with `n v c` color lines.
/// Vertices are 1-indexed.
pub fn write_dimacs<W: Write>(g: &ColoredGraph, mut w: W) -> io::Result<()> {
    let edges = g.edges();
    writeln!(w, "p edge {} {}", g.num_vertices(), edges.len())?;
    for (v, c) in g.colors().iter().enumerate() {
        writeln!(w, "n {} {}", v + 1, c)?;
    }
    for (u, v) in edges {
        writeln!(w, "e {} {}", u + 1, v + 1)?;
    }
    Ok(())
}

pub fn to_dimacs(g: &ColoredGraph) -> String {
    let mut buf = Vec::new();
    write_dimacs(g, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("ascii")
}

fn bad_data(msg: String) -> io::Error {
    io::Error::new(io::ErrorKind::InvalidData, msg)
}

/// Reads the format produced by [`write_dimacs`]. Comment lines (`c ...`)
/// are skipped; missing colors default to 0.
pub fn read_dimacs<R: BufRead>(r: R) -> io::Result<ColoredGraph> {
    let mut colors: Option<Vec<u32>> = None;
    let mut edges = Vec::new();
    let mut declared_edges = 0usize;
    for (lineno, line) in r.lines().enumerate() {
        let line = line?;
        let fields: Vec<&str> = line.split_whitespace().collect();
        let num = |i: usize| -> io::Result<usize> {
            fields
                .get(i)
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| bad_data(format!("line {}: expected a number", lineno + 1)))
        };
        match fields.first().copied() {
            None | Some("c") => {}
            Some("p") => {
                if fields.get(1) != Some(&"edge") {
                    return Err(bad_data(format!("line {}: expected `p edge`", lineno + 1)));
                }
                colors = Some(vec![0; num(2)?]);
                declared_edges = num(3)?;
            }
            Some(kind @ ("n" | "e")) => {
                let cols = colors
                    .as_mut()
                    .ok_or_else(|| bad_data(format!("line {}: data before header", lineno + 1)))?;
                let u = num(1)?;
                let v = num(2)?;
                if u == 0 || u > cols.len() || (kind == "e" && (v == 0 || v > cols.len())) {
                    return Err(bad_data(format!(
                        "line {}: vertex out of range",
                        lineno + 1
                    )));
                }
                if kind == "n" {
                    cols[u - 1] = v as u32;
                } else {
                    edges.push((u - 1, v - 1));
                }
            }
            Some(other) => {
                return Err(bad_data(format!(
                    "line {}: unknown record {other:?}",
                    lineno + 1
                )))
            }
        }
    }
    let colors = colors.ok_or_else(|| bad_data("missing `p edge` header".into()))?;
    if edges.len() != declared_edges {
        return Err(bad_data(format!(
            "header declares {declared_edges} edges, found {}",
            edges.len()
        )));
    }
    ColoredGraph::new(colors, &edges).map_err(|e| bad_data(e.to_string()))
}

/// One generator per line in cycle notation.
pub fn generators_text(gens: &[Perm]) -> String {
    gens.iter().map(|g| format!("{g}\n")).collect()
}
