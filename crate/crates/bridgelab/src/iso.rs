//! Canonical forms, isomorphism testing and automorphism counting for plain
//! and vertex-rooted graphs.
//!
//! Canonicalization runs partition refinement (equitable refinement of an
//! ordered partition) with backtracking over the remaining individualization
//! choices and selects the lexicographically smallest upper-triangular
//! adjacency bitstring. The automorphism group order falls out of the same
//! search: the permutations realizing the canonical bitstring form a coset of
//! the automorphism group, so counting leaves that achieve it gives |Aut|.

use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// Isomorphism-class key: upper-triangle adjacency bits of the graph under
/// its canonical vertex order, row-major, first pair most significant.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalCode {
    n: u8,
    bits: u128,
}

impl CanonicalCode {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }
}

fn hex_width(n: usize) -> usize {
    let m = n * (n - 1) / 2;
    m.div_ceil(4).max(1)
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{:0width$X}",
            self.n,
            self.bits,
            width = hex_width(self.n())
        )
    }
}

/// Key for a rooted isomorphism class; equal iff some isomorphism maps root
/// to root. The root is pinned first in the canonical order, so `root_pos`
/// is 0 for every code produced here.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct RootedCanonicalCode {
    n: u8,
    root_pos: u8,
    bits: u128,
}

impl RootedCanonicalCode {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn root_pos(&self) -> usize {
        self.root_pos as usize
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }
}

impl fmt::Display for RootedCanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:r{}:{:0width$X}",
            self.n,
            self.root_pos,
            self.bits,
            width = hex_width(self.n())
        )
    }
}

/// Full result of a canonical search.
#[derive(Clone, Debug)]
pub struct Canon {
    pub code: CanonicalCode,
    /// Canonically relabelled copy (identical for all members of the class).
    pub graph: Graph,
    /// Order of the automorphism group (<= 16! so it fits u64).
    pub aut: u64,
    /// A permutation `old -> new` realizing the canonical labelling.
    pub perm: Vec<usize>,
}

pub fn canonicalize(g: &Graph) -> Canon {
    let mut search = Search::new(g);
    search.run(Partition::unit(g.n()));
    search.finish(g)
}

pub fn canonical_form(g: &Graph) -> CanonicalCode {
    canonicalize(g).code
}

/// Order of the automorphism group.
pub fn automorphism_count(g: &Graph) -> BigUint {
    BigUint::from(canonicalize(g).aut)
}

pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    g1.n() == g2.n() && canonical_form(g1) == canonical_form(g2)
}

pub fn canonical_rooted_form(g: &Graph, root: usize) -> Result<RootedCanonicalCode> {
    if root >= g.n() {
        return Err(Error::InvalidVertex { v: root, n: g.n() });
    }
    let mut search = Search::new(g);
    search.run(Partition::rooted(g.n(), root));
    Ok(RootedCanonicalCode {
        n: g.n() as u8,
        root_pos: 0,
        bits: search.best_bits.expect("search visits at least one leaf"),
    })
}

/// Ordered partition of `0..n`: `order` lists the vertices, cells are
/// contiguous runs, `cell_len[p] > 0` iff a cell starts at position `p`.
#[derive(Clone, Copy)]
struct Partition {
    n: u8,
    order: [u8; MAX_VERTICES],
    cell_len: [u8; MAX_VERTICES],
}

impl Partition {
    fn unit(n: usize) -> Self {
        let mut p = Partition {
            n: n as u8,
            order: [0; MAX_VERTICES],
            cell_len: [0; MAX_VERTICES],
        };
        for v in 0..n {
            p.order[v] = v as u8;
        }
        p.cell_len[0] = n as u8;
        p
    }

    fn rooted(n: usize, root: usize) -> Self {
        let mut p = Self::unit(n);
        if n > 1 {
            p.order[0] = root as u8;
            let mut pos = 1;
            for v in 0..n {
                if v != root {
                    p.order[pos] = v as u8;
                    pos += 1;
                }
            }
            p.cell_len[0] = 1;
            p.cell_len[1] = (n - 1) as u8;
        }
        p
    }

    fn n(&self) -> usize {
        self.n as usize
    }

    fn cell_mask(&self, start: usize) -> u16 {
        let mut m = 0u16;
        for p in start..start + self.cell_len[start] as usize {
            m |= 1 << self.order[p];
        }
        m
    }

    /// First smallest cell with >= 2 elements; `None` when discrete.
    fn target_cell(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut p = 0;
        while p < self.n() {
            let len = self.cell_len[p] as usize;
            if len >= 2 && best.is_none_or(|b| len < self.cell_len[b] as usize) {
                best = Some(p);
            }
            p += len;
        }
        best
    }

    /// Move `v` to the front of the cell at `start` as a singleton.
    fn individualize(&self, start: usize, v: u8) -> Self {
        let mut p = *self;
        let len = p.cell_len[start] as usize;
        let pos = (start..start + len)
            .find(|&i| p.order[i] == v)
            .expect("vertex in cell");
        p.order.copy_within(start..pos, start + 1);
        p.order[start] = v;
        p.cell_len[start] = 1;
        p.cell_len[start + 1] = (len - 1) as u8;
        p
    }

    /// Coarsest equitable refinement: split every cell by neighbor counts
    /// toward every cell until stable. Restarts after each split so the
    /// split history is a function of graph structure alone.
    fn refine(&mut self, g: &Graph) {
        'outer: loop {
            let mut splitter = 0;
            while splitter < self.n() {
                let s_mask = self.cell_mask(splitter);
                let mut c = 0;
                while c < self.n() {
                    let len = self.cell_len[c] as usize;
                    if len >= 2 && self.split_cell(g, c, s_mask) {
                        continue 'outer;
                    }
                    c += len;
                }
                splitter += self.cell_len[splitter] as usize;
            }
            return;
        }
    }

    /// Split one cell by `popcount(adj[v] & s_mask)`, subcells ordered by
    /// ascending count. Returns whether a split happened.
    fn split_cell(&mut self, g: &Graph, start: usize, s_mask: u16) -> bool {
        let len = self.cell_len[start] as usize;
        let mut keyed: [(u8, u8); MAX_VERTICES] = [(0, 0); MAX_VERTICES];
        let mut distinct = false;
        for i in 0..len {
            let v = self.order[start + i];
            let cnt = (g.row(v as usize) & s_mask).count_ones() as u8;
            keyed[i] = (cnt, v);
            if cnt != keyed[0].0 {
                distinct = true;
            }
        }
        if !distinct {
            return false;
        }
        keyed[..len].sort_unstable();
        let mut run_start = 0;
        for i in 0..len {
            self.order[start + i] = keyed[i].1;
            self.cell_len[start + i] = 0;
            if keyed[i].0 != keyed[run_start].0 {
                self.cell_len[start + run_start] = (i - run_start) as u8;
                run_start = i;
            }
        }
        self.cell_len[start + run_start] = (len - run_start) as u8;
        true
    }
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    best_bits: Option<u128>,
    best_order: [u8; MAX_VERTICES],
    count: u64,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph) -> Self {
        Search {
            g,
            n: g.n(),
            best_bits: None,
            best_order: [0; MAX_VERTICES],
            count: 0,
        }
    }

    fn run(&mut self, p: Partition) {
        self.explore(p, 1);
    }

    fn explore(&mut self, mut p: Partition, mult: u64) {
        p.refine(self.g);
        let Some(target) = p.target_cell() else {
            self.leaf(&p, mult);
            return;
        };
        let len = p.cell_len[target] as usize;
        let cell: Vec<u8> = (target..target + len).map(|i| p.order[i]).collect();
        if self.all_twins(&cell) {
            // Swapping any two members is an automorphism fixing the rest,
            // so all branches are equivalent: take one, scale the count.
            self.explore(p.individualize(target, cell[0]), mult * len as u64);
        } else {
            for &v in &cell {
                self.explore(p.individualize(target, v), mult);
            }
        }
    }

    fn all_twins(&self, cell: &[u8]) -> bool {
        for (i, &u) in cell.iter().enumerate() {
            for &v in &cell[i + 1..] {
                let ru = self.g.row(u as usize) & !(1u16 << v);
                let rv = self.g.row(v as usize) & !(1u16 << u);
                if ru != rv {
                    return false;
                }
            }
        }
        true
    }

    fn leaf(&mut self, p: &Partition, mult: u64) {
        let mut bits = 0u128;
        for i in 0..self.n {
            let row = self.g.row(p.order[i] as usize);
            for j in i + 1..self.n {
                bits = (bits << 1) | u128::from(row >> p.order[j] & 1);
            }
        }
        match self.best_bits {
            Some(best) if bits > best => {}
            Some(best) if bits == best => self.count += mult,
            _ => {
                self.best_bits = Some(bits);
                self.best_order = p.order;
                self.count = mult;
            }
        }
    }

    fn finish(self, g: &Graph) -> Canon {
        let bits = self.best_bits.expect("search visits at least one leaf");
        // best_order[i] = vertex at canonical position i; invert to old -> new
        let mut perm = vec![0usize; self.n];
        for i in 0..self.n {
            perm[self.best_order[i] as usize] = i;
        }
        Canon {
            code: CanonicalCode {
                n: self.n as u8,
                bits,
            },
            graph: g.permuted(&perm),
            aut: self.count,
            perm,
        }
    }
}
