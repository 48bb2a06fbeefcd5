//! Brute-force ground truth: every connected division of a strip, by
//! depth-first search over restricted-growth strings.
//!
//! A part is *closed* once every cell it holds has all of its neighbors
//! already assigned; no later cell can join it, so a closed part that is not
//! connected kills the whole branch. Each completed string is re-checked
//! with [`is_valid_division`], which uses a separate union-find routine.

use num_bigint::BigUint;

use crate::counting::CountTriangle;
use crate::error::{Error, Result};
use crate::lattice::{canonicalize, is_valid_division, tail_state_of, CellGraph, Division, Family, Lattice, TailState};

pub const DEFAULT_CELL_LIMIT: usize = 14;

/// Bitmask search caps the limit regardless of configuration.
const HARD_CELL_LIMIT: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub cell_limit: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            cell_limit: DEFAULT_CELL_LIMIT,
        }
    }
}

impl OracleConfig {
    pub fn with_cell_limit(cell_limit: usize) -> Self {
        OracleConfig { cell_limit }
    }

    pub fn check(&self, lattice: Lattice) -> Result<()> {
        if lattice.length == 0 {
            return Err(Error::EmptyLattice);
        }
        let cells = lattice.cell_count();
        let limit = self.cell_limit.min(HARD_CELL_LIMIT);
        if cells > limit {
            return Err(Error::OracleScale { cells, limit });
        }
        Ok(())
    }
}

/// Streaming enumerator; yields divisions in lexicographic order of labels.
pub struct Divisions {
    graph: CellGraph,
    neighbor_mask: Vec<u64>,
    /// Highest cell index each cell can still be joined through.
    reach: Vec<usize>,
    labels: Vec<usize>,
    /// `prefix_max[i]` is the largest label among `labels[..=i]`.
    prefix_max: Vec<usize>,
    started: bool,
    finished: bool,
}

pub fn enumerate_divisions(lattice: Lattice, config: &OracleConfig) -> Result<Divisions> {
    config.check(lattice)?;
    let graph = lattice.graph()?;
    let n = graph.cell_count();
    let neighbor_mask = (0..n)
        .map(|c| graph.neighbors(c).iter().fold(0u64, |m, &b| m | (1 << b)))
        .collect();
    let reach = (0..n)
        .map(|c| graph.neighbors(c).iter().copied().chain([c]).max().unwrap_or(c))
        .collect();
    Ok(Divisions {
        graph,
        neighbor_mask,
        reach,
        labels: Vec::with_capacity(n),
        prefix_max: Vec::with_capacity(n),
        started: false,
        finished: false,
    })
}

impl Divisions {
    fn push(&mut self, label: usize) {
        let max = self.prefix_max.last().map_or(label, |&m| m.max(label));
        self.labels.push(label);
        self.prefix_max.push(max);
    }

    fn pop(&mut self) -> Option<usize> {
        self.prefix_max.pop();
        self.labels.pop()
    }

    /// Checks the parts that closed when the last cell was placed.
    fn prefix_alive(&self) -> bool {
        let last = self.labels.len() - 1;
        let parts = self.prefix_max[last] + 1;
        (0..parts).all(|part| {
            let mut mask = 0u64;
            let mut reach = 0;
            for (cell, &label) in self.labels.iter().enumerate() {
                if label == part {
                    mask |= 1 << cell;
                    reach = reach.max(self.reach[cell]);
                }
            }
            reach != last || self.mask_connected(mask)
        })
    }

    fn mask_connected(&self, mask: u64) -> bool {
        let mut seen = mask & mask.wrapping_neg();
        let mut frontier = seen;
        while frontier != 0 {
            let cell = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.neighbor_mask[cell] & mask & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen == mask
    }

    /// Moves to the next node of the pruned search tree in preorder.
    fn advance(&mut self, descend: bool) -> bool {
        let n = self.graph.cell_count();
        if descend && self.labels.len() < n {
            self.push(0);
            return true;
        }
        while let Some(last) = self.pop() {
            if self.labels.is_empty() {
                // cell 0 always carries label 0
                return false;
            }
            let bound = self.prefix_max.last().map_or(0, |&m| m + 1);
            if last < bound {
                self.push(last + 1);
                return true;
            }
        }
        false
    }
}

impl Iterator for Divisions {
    type Item = Division;

    fn next(&mut self) -> Option<Division> {
        if self.finished {
            return None;
        }
        let mut descend = true;
        if !self.started {
            self.started = true;
            self.push(0);
        } else if !self.advance(false) {
            self.finished = true;
            return None;
        }
        loop {
            let alive = self.prefix_alive();
            if alive && self.labels.len() == self.graph.cell_count() {
                let valid = is_valid_division(&self.graph, &self.labels).unwrap_or(false);
                debug_assert!(valid, "pruned search produced {:?}", self.labels);
                if valid {
                    return Some(canonicalize(&self.labels));
                }
                descend = false;
            } else {
                descend &= alive;
            }
            if !self.advance(descend) {
                self.finished = true;
                return None;
            }
            descend = true;
        }
    }
}

/// Division counts of one strip, split by the tail state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefinedCounts {
    pub lattice: Lattice,
    /// Indexed by part count k; entry 0 is always zero.
    pub by_k_total: Vec<BigUint>,
    pub by_k_together: Vec<BigUint>,
    pub by_k_separated: Vec<BigUint>,
}

impl RefinedCounts {
    fn get(v: &[BigUint], k: usize) -> BigUint {
        v.get(k).cloned().unwrap_or_default()
    }

    pub fn total(&self, k: usize) -> BigUint {
        Self::get(&self.by_k_total, k)
    }

    pub fn together(&self, k: usize) -> BigUint {
        Self::get(&self.by_k_together, k)
    }

    pub fn separated(&self, k: usize) -> BigUint {
        Self::get(&self.by_k_separated, k)
    }

    pub fn grand_total(&self) -> BigUint {
        self.by_k_total.iter().sum()
    }

    pub fn together_total(&self) -> BigUint {
        self.by_k_together.iter().sum()
    }

    pub fn separated_total(&self) -> BigUint {
        self.by_k_separated.iter().sum()
    }
}

/// Per-k totals without the tail split; works for single-cell strips too.
pub fn oracle_totals(lattice: Lattice, config: &OracleConfig) -> Result<Vec<BigUint>> {
    let cells = lattice.cell_count();
    let mut counts = vec![0u64; cells + 1];
    for division in enumerate_divisions(lattice, config)? {
        counts[division.part_count()] += 1;
    }
    Ok(counts.into_iter().map(BigUint::from).collect())
}

pub fn oracle_refined_counts(lattice: Lattice, config: &OracleConfig) -> Result<RefinedCounts> {
    config.check(lattice)?;
    let cells = lattice.cell_count();
    if cells < 2 {
        return Err(Error::TooFewCells { cells });
    }
    let mut together = vec![0u64; cells + 1];
    let mut separated = vec![0u64; cells + 1];
    for division in enumerate_divisions(lattice, config)? {
        match tail_state_of(division.labels()) {
            TailState::Together => together[division.part_count()] += 1,
            TailState::Separated => separated[division.part_count()] += 1,
        }
    }
    let by_k_total = together
        .iter()
        .zip(&separated)
        .map(|(t, s)| BigUint::from(t + s))
        .collect();
    Ok(RefinedCounts {
        lattice,
        by_k_total,
        by_k_together: together.into_iter().map(BigUint::from).collect(),
        by_k_separated: separated.into_iter().map(BigUint::from).collect(),
    })
}

pub fn oracle_triangle(family: Family, n_max: usize, config: &OracleConfig) -> Result<CountTriangle> {
    if n_max == 0 {
        return Err(Error::EmptyLattice);
    }
    config.check(Lattice::new(family, n_max))?;
    let rows = (1..=n_max)
        .map(|n| oracle_totals(Lattice::new(family, n), config).map(|mut row| {
            row.remove(0);
            row
        }))
        .collect::<Result<Vec<_>>>()?;
    Ok(CountTriangle::from_rows(family, rows))
}
