//! Small dense undirected graphs as per-vertex adjacency bitsets (n <= 16),
//! with components, bridges and fragment size.

use std::fmt;

use crate::error::{Error, Result};

/// Adjacency rows are `u16` bitsets, so 16 vertices is the hard ceiling.
pub const MAX_VERTICES: usize = 16;

const UNVISITED: usize = usize::MAX;

/// Simple undirected graph on vertices `0..n`, `1 <= n <= 16`.
///
/// Values are immutable once constructed; edits return fresh copies.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: u8,
    adj: [u16; MAX_VERTICES],
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::BadVertexCount { n });
        }
        Ok(Self {
            n: n as u8,
            adj: [0; MAX_VERTICES],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.check_pair(u, v)?;
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// Path 0-1-...-(n-1).
    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edges(n, &edges)
    }

    /// Cycle 0-1-...-(n-1)-0; requires n >= 3.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::BadVertexCount { n });
        }
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Self::from_edges(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            return Err(Error::InvalidVertex { v, n: self.n() });
        }
        Ok(())
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop { v });
        }
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u] & (1 << v) != 0
    }

    /// Copy with edge {u, v} added; idempotent if the edge exists.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_pair(u, v)?;
        let mut g = *self;
        g.adj[u] |= 1 << v;
        g.adj[v] |= 1 << u;
        Ok(g)
    }

    /// Copy with edge {u, v} removed (no-op if absent).
    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_pair(u, v)?;
        let mut g = *self;
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        Ok(g)
    }

    /// Neighbor bitset of `v`.
    pub fn row(&self, v: usize) -> u16 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges as normalized `(min, max)` pairs in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            let mut rest = self.adj[u] >> (u + 1) << (u + 1);
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                out.push((u, v));
                rest &= rest - 1;
            }
        }
        out
    }

    pub fn components(&self) -> ComponentPartition {
        let n = self.n();
        let mut labels = vec![UNVISITED; n];
        let mut next = 0;
        for start in 0..n {
            if labels[start] != UNVISITED {
                continue;
            }
            let mut stack = vec![start];
            labels[start] = next;
            while let Some(u) = stack.pop() {
                let mut rest = self.adj[u];
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    if labels[v] == UNVISITED {
                        labels[v] = next;
                        stack.push(v);
                    }
                }
            }
            next += 1;
        }
        let mut sizes = vec![0usize; next];
        for &l in &labels {
            sizes[l] += 1;
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        ComponentPartition { labels, sizes }
    }

    pub fn is_connected(&self) -> bool {
        self.components().count() == 1
    }

    /// Edges whose deletion increases the number of components, as sorted
    /// normalized pairs. Single depth-first low-link pass.
    pub fn bridges(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut ord = [UNVISITED; MAX_VERTICES];
        let mut low = [UNVISITED; MAX_VERTICES];
        let mut timer = 0;
        let mut out = Vec::new();
        for start in 0..n {
            if ord[start] == UNVISITED {
                self.low_link(start, UNVISITED, &mut timer, &mut ord, &mut low, &mut out);
            }
        }
        out.sort_unstable();
        out
    }

    fn low_link(
        &self,
        u: usize,
        parent: usize,
        timer: &mut usize,
        ord: &mut [usize; MAX_VERTICES],
        low: &mut [usize; MAX_VERTICES],
        out: &mut Vec<(usize, usize)>,
    ) {
        ord[u] = *timer;
        low[u] = *timer;
        *timer += 1;
        let mut rest = self.adj[u];
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if ord[v] == UNVISITED {
                self.low_link(v, u, timer, ord, low, out);
                low[u] = low[u].min(low[v]);
                if low[v] > ord[u] {
                    out.push((u.min(v), u.max(v)));
                }
            } else if v != parent {
                low[u] = low[u].min(ord[v]);
            }
        }
    }

    /// Number of vertices outside a largest component.
    pub fn frag(&self) -> usize {
        self.n() - self.components().sizes()[0]
    }

    /// Number of bridges incident to `v`.
    pub fn bridge_count_at(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self
            .bridges()
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count())
    }

    /// Induced subgraph on `verts`, relabelled to `0..verts.len()` in the
    /// given order. Callers pass distinct in-range vertices.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let k = verts.len();
        debug_assert!(k >= 1 && k <= self.n());
        let mut g = Graph {
            n: k as u8,
            adj: [0; MAX_VERTICES],
        };
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1 << j;
                    g.adj[j] |= 1 << i;
                }
            }
        }
        g
    }

    /// Relabelled copy: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n());
        let mut g = Graph {
            n: self.n,
            adj: [0; MAX_VERTICES],
        };
        for (u, v) in self.edges() {
            g.adj[perm[u]] |= 1 << perm[v];
            g.adj[perm[v]] |= 1 << perm[u];
        }
        g
    }

    /// Disjoint union; `other`'s vertices are shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n() + other.n();
        if n > MAX_VERTICES {
            return Err(Error::BadVertexCount { n });
        }
        let mut g = *self;
        g.n = n as u8;
        let shift = self.n();
        for (u, v) in other.edges() {
            g.adj[u + shift] |= 1 << (v + shift);
            g.adj[v + shift] |= 1 << (u + shift);
        }
        Ok(g)
    }

    /// Text format: first line `n`, then one `u v` edge per line, 0-indexed.
    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.n());
        for (u, v) in self.edges() {
            s.push_str(&format!("{} {}\n", u, v));
        }
        s
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::Parse("empty graph text".into()))?
            .trim()
            .parse()
            .map_err(|e| Error::Parse(format!("bad vertex count: {e}")))?;
        let mut g = Self::empty(n)?;
        for line in lines {
            let mut it = line.split_whitespace();
            let (u, v) = match (it.next(), it.next(), it.next()) {
                (Some(u), Some(v), None) => (u, v),
                _ => return Err(Error::Parse(format!("bad edge line {line:?}"))),
            };
            let u: usize = u
                .parse()
                .map_err(|e| Error::Parse(format!("bad endpoint {u:?}: {e}")))?;
            let v: usize = v
                .parse()
                .map_err(|e| Error::Parse(format!("bad endpoint {v:?}: {e}")))?;
            g = g.add_edge(u, v)?;
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

/// Connected components of a graph: per-vertex labels (contiguous from 0 in
/// first-visit order) and the multiset of component sizes in descending order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentPartition {
    labels: Vec<usize>,
    sizes: Vec<usize>,
}

impl ComponentPartition {
    pub fn count(&self) -> usize {
        self.sizes.len()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Component sizes, descending.
    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn label_of(&self, v: usize) -> usize {
        self.labels[v]
    }

    /// Vertices of component `id`, ascending.
    pub fn members(&self, id: usize) -> Vec<usize> {
        (0..self.labels.len())
            .filter(|&v| self.labels[v] == id)
            .collect()
    }

    pub fn size_of(&self, id: usize) -> usize {
        self.labels.iter().filter(|&&l| l == id).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_triangles() -> Graph {
        Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap()
    }

    #[test]
    fn add_edge_basics() {
        let g = Graph::empty(2).unwrap();
        let k2 = g.add_edge(0, 1).unwrap();
        assert!(k2.has_edge(0, 1));
        assert_eq!(k2.edge_count(), 1);
        // idempotent
        let again = k2.add_edge(0, 1).unwrap();
        assert_eq!(again, k2);
        // grow a path
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let p3 = g.add_edge(1, 2).unwrap();
        assert_eq!(p3.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn add_edge_errors() {
        let g = Graph::empty(3).unwrap();
        assert!(matches!(g.add_edge(1, 1), Err(Error::SelfLoop { .. })));
        assert!(matches!(
            g.add_edge(0, 3),
            Err(Error::InvalidVertex { v: 3, n: 3 })
        ));
        assert!(matches!(Graph::empty(0), Err(Error::BadVertexCount { .. })));
        assert!(matches!(
            Graph::empty(17),
            Err(Error::BadVertexCount { .. })
        ));
    }

    #[test]
    fn components_sizes() {
        let tri = Graph::cycle(3).unwrap();
        assert_eq!(tri.components().sizes(), &[3]);
        assert_eq!(two_triangles().components().sizes(), &[3, 3]);
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(g.components().sizes(), &[2, 1]);
        let c = g.components();
        assert_eq!(c.label_of(0), c.label_of(1));
        assert_ne!(c.label_of(0), c.label_of(2));
        assert_eq!(c.members(1), vec![2]);
    }

    #[test]
    fn bridges_path_and_triangle() {
        let p3 = Graph::path(3).unwrap();
        assert_eq!(p3.bridges(), vec![(0, 1), (1, 2)]);
        assert!(Graph::cycle(3).unwrap().bridges().is_empty());
    }

    #[test]
    fn bridges_joined_triangles_match_brute_force() {
        let g = two_triangles().add_edge(2, 3).unwrap();
        assert_eq!(g.bridges(), vec![(2, 3)]);
        assert_eq!(g.bridges(), brute_bridges(&g));
        // spot-check the oracle on a few more shapes
        for g in [
            Graph::path(5).unwrap(),
            Graph::cycle(5).unwrap(),
            two_triangles(),
            Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap(),
        ] {
            assert_eq!(g.bridges(), brute_bridges(&g), "{g:?}");
        }
    }

    // Oracle: an edge is a bridge iff deleting it increases the component count.
    fn brute_bridges(g: &Graph) -> Vec<(usize, usize)> {
        let base = g.components().count();
        g.edges()
            .into_iter()
            .filter(|&(u, v)| g.remove_edge(u, v).unwrap().components().count() > base)
            .collect()
    }

    #[test]
    fn frag_values() {
        assert_eq!(Graph::cycle(4).unwrap().frag(), 0);
        assert_eq!(two_triangles().frag(), 3);
        let g = Graph::from_edges(4, &[(0, 1)]).unwrap();
        assert_eq!(g.frag(), 2); // K2 + K1 + K1
    }

    #[test]
    fn bridge_counts() {
        let tri = Graph::cycle(3).unwrap();
        for v in 0..3 {
            assert_eq!(tri.bridge_count_at(v).unwrap(), 0);
        }
        let p3 = Graph::path(3).unwrap();
        assert_eq!(p3.bridge_count_at(1).unwrap(), 2);
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.bridge_count_at(0).unwrap(), 1);
        assert_eq!(k2.bridge_count_at(1).unwrap(), 1);
        assert!(p3.bridge_count_at(3).is_err());
    }

    #[test]
    fn text_round_trip() {
        let g = two_triangles().add_edge(2, 3).unwrap();
        let text = g.to_text();
        assert_eq!(Graph::parse_text(&text).unwrap(), g);
        assert!(Graph::parse_text("").is_err());
        assert!(Graph::parse_text("3\n0 0\n").is_err());
        assert!(Graph::parse_text("2\n0 1 2\n").is_err());
    }

    #[test]
    fn induced_and_permuted() {
        let g = two_triangles();
        let c = g.components();
        let t = g.induced(&c.members(1));
        assert_eq!(t, Graph::cycle(3).unwrap());
        let p = g.permuted(&[5, 4, 3, 2, 1, 0]);
        assert_eq!(p.edges().len(), g.edges().len());
        assert!(p.has_edge(5, 4));
    }
}
