//! Brute-force reference counts, built without the library.
//!
//! Every connected division is the component partition of at least one edge
//! subset, so running union-find over all `2^|E|` subsets and collecting the
//! distinct partitions lists each division exactly once.

#![allow(dead_code)]

use std::collections::HashSet;

/// 0-based adjacency from geometry: bar cell `(row, col)` is `2*col + row`.
pub fn bar_edges(n: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for col in 0..n {
        let (top, bottom) = (2 * col, 2 * col + 1);
        edges.push((top, bottom));
        if col + 1 < n {
            edges.push((top, top + 2));
            edges.push((bottom, bottom + 2));
        }
    }
    edges
}

/// Hexagons in a zigzag row: each touches the next two.
pub fn hex_edges(n: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..(i + 3).min(n) {
            edges.push((i, j));
        }
    }
    edges
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Distinct connected partitions, each as the canonical label vector.
pub fn partitions(cells: usize, edges: &[(usize, usize)]) -> HashSet<Vec<u8>> {
    assert!(edges.len() < 32);
    let mut seen = HashSet::new();
    for mask in 0u32..(1 << edges.len()) {
        let mut parent: Vec<usize> = (0..cells).collect();
        for (i, &(a, b)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut relabel = vec![u8::MAX; cells];
        let mut next = 0u8;
        let labels: Vec<u8> = (0..cells)
            .map(|c| {
                let root = find(&mut parent, c);
                if relabel[root] == u8::MAX {
                    relabel[root] = next;
                    next += 1;
                }
                relabel[root]
            })
            .collect();
        seen.insert(labels);
    }
    seen
}

/// `counts[k-1]` divisions into `k` parts.
pub fn counts(cells: usize, edges: &[(usize, usize)]) -> Vec<u64> {
    let mut out = vec![0u64; cells];
    for p in partitions(cells, edges) {
        let parts = *p.iter().max().unwrap() as usize + 1;
        out[parts - 1] += 1;
    }
    out
}

pub fn bar_counts(n: usize) -> Vec<u64> {
    counts(2 * n, &bar_edges(n))
}

pub fn hex_counts(n: usize) -> Vec<u64> {
    counts(n, &hex_edges(n))
}

/// `(d, s, t)` for a honeycomb strip: all, last two apart, last two together.
pub fn hex_split(n: usize) -> (u64, u64, u64) {
    let all = partitions(n, &hex_edges(n));
    let together = all.iter().filter(|p| n >= 2 && p[n - 1] == p[n - 2]).count() as u64;
    let d = all.len() as u64;
    if n == 1 {
        return (1, 0, 1);
    }
    (d, d - together, together)
}

pub fn fib(i: usize) -> num_bigint::BigUint {
    let (mut a, mut b) = (num_bigint::BigUint::from(0u32), num_bigint::BigUint::from(1u32));
    for _ in 0..i {
        let c = &a + &b;
        a = std::mem::replace(&mut b, c);
    }
    a
}
