//! The two strip families, their inner dual graphs, and canonical divisions.
//!
//! Cells are numbered 1-based in everything that leaves this module (text
//! form, [`CellGraph::edges`]) and 0-based in every slice index. For a
//! chocolate bar, cell `2i-1` is the bottom square of column `i` and `2i` the
//! top one. Honeycomb hexagons are numbered left to right in zig-zag order,
//! so hexagon `i` touches `i+1` and `i+2`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    ChocolateBar,
    Honeycomb,
}

impl Family {
    pub fn cell_count(self, length: usize) -> usize {
        match self {
            Family::ChocolateBar => 2 * length,
            Family::Honeycomb => length,
        }
    }

    /// Largest possible part count for a strip of the given length.
    pub fn k_max(self, length: usize) -> usize {
        self.cell_count(length)
    }

    pub fn short_name(self) -> &'static str {
        match self {
            Family::ChocolateBar => "bar",
            Family::Honeycomb => "hex",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "bar" | "chocolate-bar" => Ok(Family::ChocolateBar),
            "hex" | "honeycomb" => Ok(Family::Honeycomb),
            other => Err(format!("unknown lattice family {other:?} (expected bar or hex)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Lattice {
    pub family: Family,
    pub length: usize,
}

impl Lattice {
    pub fn new(family: Family, length: usize) -> Self {
        Lattice { family, length }
    }

    pub fn bar(length: usize) -> Self {
        Lattice::new(Family::ChocolateBar, length)
    }

    pub fn hex(length: usize) -> Self {
        Lattice::new(Family::Honeycomb, length)
    }

    pub fn cell_count(&self) -> usize {
        self.family.cell_count(self.length)
    }

    pub fn graph(&self) -> Result<CellGraph> {
        build_cell_graph(*self)
    }
}

/// Inner dual of a strip: one vertex per cell, edges between cells sharing a side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellGraph {
    adjacency: Vec<Vec<usize>>,
}

impl CellGraph {
    fn from_edges(cell_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adjacency = vec![Vec::new(); cell_count];
        for (a, b) in edges {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        CellGraph { adjacency }
    }

    pub fn cell_count(&self) -> usize {
        self.adjacency.len()
    }

    /// Neighbors of a 0-based cell, sorted, 0-based.
    pub fn neighbors(&self, cell: usize) -> &[usize] {
        &self.adjacency[cell]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].binary_search(&b).is_ok()
    }

    /// Edge list in 1-based cell ids, each edge once with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (a, list) in self.adjacency.iter().enumerate() {
            for &b in list.iter().filter(|&&b| b > a) {
                out.push((a + 1, b + 1));
            }
        }
        out
    }
}

pub fn build_cell_graph(lattice: Lattice) -> Result<CellGraph> {
    let n = lattice.length;
    if n == 0 {
        return Err(Error::EmptyLattice);
    }
    let graph = match lattice.family {
        Family::ChocolateBar => {
            let rungs = (0..n).map(|i| (2 * i, 2 * i + 1));
            let rails = (0..n - 1).flat_map(|i| [(2 * i, 2 * i + 2), (2 * i + 1, 2 * i + 3)]);
            CellGraph::from_edges(2 * n, rungs.chain(rails))
        }
        Family::Honeycomb => {
            let steps = (0..n.saturating_sub(1)).map(|i| (i, i + 1));
            let skips = (0..n.saturating_sub(2)).map(|i| (i, i + 2));
            CellGraph::from_edges(n, steps.chain(skips))
        }
    };
    Ok(graph)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TailState {
    Together,
    Separated,
}

/// A division in restricted-growth form: `labels[0] == 0` and each label is at
/// most one more than every label before it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Division {
    labels: Vec<usize>,
    part_count: usize,
}

impl Division {
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn part_count(&self) -> usize {
        self.part_count
    }

    pub fn cell_count(&self) -> usize {
        self.labels.len()
    }

    /// Parts as sorted lists of 1-based cell ids, ordered by least element.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.part_count];
        for (cell, &label) in self.labels.iter().enumerate() {
            blocks[label].push(cell + 1);
        }
        blocks
    }

    /// Inverse of the [`Display`](fmt::Display) form for a strip with `cell_count` cells.
    pub fn parse(text: &str, cell_count: usize) -> Result<Division> {
        let bad = |reason: &str| Error::ParseDivision {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let mut labels = vec![usize::MAX; cell_count];
        for (part, block) in text.trim().split(',').enumerate() {
            let cells: Vec<usize> = if cell_count <= 9 {
                block
                    .chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| bad("non-digit cell id")))
                    .collect::<Result<_>>()?
            } else {
                block
                    .split('.')
                    .map(|s| s.parse::<usize>().map_err(|_| bad("non-numeric cell id")))
                    .collect::<Result<_>>()?
            };
            if cells.is_empty() {
                return Err(bad("empty block"));
            }
            for cell in cells {
                if cell == 0 || cell > cell_count {
                    return Err(bad("cell id out of range"));
                }
                if labels[cell - 1] != usize::MAX {
                    return Err(bad("cell listed twice"));
                }
                labels[cell - 1] = part;
            }
        }
        if labels.contains(&usize::MAX) {
            return Err(bad("not every cell is covered"));
        }
        Ok(canonicalize(&labels))
    }
}

/// Blocks joined by `,`; cell ids inside a block are concatenated digits while
/// the strip has at most 9 cells and `.`-separated beyond that.
impl fmt::Display for Division {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.cell_count() <= 9 { "" } else { "." };
        for (i, block) in self.blocks().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            for (j, cell) in block.iter().enumerate() {
                if j > 0 {
                    f.write_str(sep)?;
                }
                write!(f, "{cell}")?;
            }
        }
        Ok(())
    }
}

/// Relabels parts in order of first occurrence, starting at 0.
pub fn canonicalize(labels: &[usize]) -> Division {
    let mut map: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::with_capacity(labels.len());
    for &label in labels {
        let id = match map.iter().find(|(from, _)| *from == label) {
            Some(&(_, to)) => to,
            None => {
                let to = map.len();
                map.push((label, to));
                to
            }
        };
        out.push(id);
    }
    Division {
        labels: out,
        part_count: map.len(),
    }
}

pub fn is_restricted_growth(labels: &[usize]) -> bool {
    let mut next = 0;
    for &label in labels {
        if label > next {
            return false;
        }
        if label == next {
            next += 1;
        }
    }
    true
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// True iff every label class induces a connected subgraph of `graph`.
pub fn is_valid_division(graph: &CellGraph, labels: &[usize]) -> Result<bool> {
    let n = graph.cell_count();
    if labels.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: labels.len(),
        });
    }
    let mut parent: Vec<usize> = (0..n).collect();
    for a in 0..n {
        for &b in graph.neighbors(a) {
            if b > a && labels[a] == labels[b] {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra] = rb;
                }
            }
        }
    }
    // each label must own exactly one union-find root
    let mut root_of_label: Vec<(usize, usize)> = Vec::new();
    for cell in 0..n {
        let root = find(&mut parent, cell);
        match root_of_label.iter().find(|(l, _)| *l == labels[cell]) {
            Some(&(_, r)) if r != root => return Ok(false),
            Some(_) => {}
            None => root_of_label.push((labels[cell], root)),
        }
    }
    Ok(true)
}

/// Whether the last two cells (last column of a bar, last two hexagons of a
/// honeycomb strip) lie in the same part.
pub fn tail_state(graph: &CellGraph, division: &Division) -> Result<TailState> {
    let n = graph.cell_count();
    if n < 2 {
        return Err(Error::TooFewCells { cells: n });
    }
    if division.cell_count() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: division.cell_count(),
        });
    }
    Ok(tail_state_of(division.labels()))
}

pub(crate) fn tail_state_of(labels: &[usize]) -> TailState {
    let n = labels.len();
    if labels[n - 1] == labels[n - 2] {
        TailState::Together
    } else {
        TailState::Separated
    }
}
