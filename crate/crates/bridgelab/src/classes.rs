//! Graph-class membership predicates: all graphs, forests, and the
//! bridges-of-cycles families.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A built-in graph class. All four are decomposable (membership holds iff it
/// holds for each component) and bridge-addable (closed under adding an edge
/// between two components of a member).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ClassSpec {
    /// Every graph.
    AllGraphs,
    /// Acyclic graphs.
    Forests,
    /// Deleting all bridges leaves a disjoint union of cycles, each of
    /// length >= k. Isolated vertices after deletion disqualify the graph.
    CyclesAtLeast(usize),
    /// Same, with every cycle length exactly k.
    CyclesExactly(usize),
}

impl ClassSpec {
    pub fn cycles_at_least(k: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::Parse(format!("cycle length k = {k} must be >= 3")));
        }
        Ok(ClassSpec::CyclesAtLeast(k))
    }

    pub fn cycles_exactly(k: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::Parse(format!("cycle length k = {k} must be >= 3")));
        }
        Ok(ClassSpec::CyclesExactly(k))
    }

    pub fn decomposable(&self) -> bool {
        true
    }

    /// Smallest vertex count of a connected member.
    pub fn min_connected_size(&self) -> usize {
        match self {
            ClassSpec::AllGraphs | ClassSpec::Forests => 1,
            ClassSpec::CyclesAtLeast(k) | ClassSpec::CyclesExactly(k) => *k,
        }
    }

    pub fn contains(&self, g: &Graph) -> bool {
        match self {
            ClassSpec::AllGraphs => true,
            ClassSpec::Forests => g.edge_count() + g.components().count() == g.n(),
            ClassSpec::CyclesAtLeast(k) => cycles_members(g, |len| len >= *k),
            ClassSpec::CyclesExactly(k) => cycles_members(g, |len| len == *k),
        }
    }

    pub fn connected_contains(&self, g: &Graph) -> bool {
        self.contains(g) && g.is_connected()
    }
}

/// Delete every bridge of `g`; accept iff each remaining component is a
/// single cycle whose length satisfies `ok_len`.
fn cycles_members(g: &Graph, ok_len: impl Fn(usize) -> bool) -> bool {
    let mut stripped = *g;
    for (u, v) in g.bridges() {
        stripped = stripped.remove_edge(u, v).expect("edge endpoints valid");
    }
    // A connected graph in which every vertex has degree 2 is one cycle, so
    // per component it suffices to check degrees; degree 0 (an isolated
    // vertex) fails, which is the strict reading of "union of cycles".
    if (0..stripped.n()).any(|v| stripped.degree(v) != 2) {
        return false;
    }
    stripped.components().sizes().iter().all(|&len| ok_len(len))
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassSpec::AllGraphs => write!(f, "all"),
            ClassSpec::Forests => write!(f, "forests"),
            ClassSpec::CyclesAtLeast(k) => write!(f, "cycles>={k}"),
            ClassSpec::CyclesExactly(k) => write!(f, "cycles=={k}"),
        }
    }
}

impl FromStr for ClassSpec {
    type Err = Error;

    /// CLI syntax: `all`, `forests`, `cycles>=K`, `cycles==K`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(ClassSpec::AllGraphs),
            "forests" => Ok(ClassSpec::Forests),
            _ => {
                if let Some(k) = s.strip_prefix("cycles>=") {
                    let k = k
                        .parse()
                        .map_err(|e| Error::Parse(format!("bad k in {s:?}: {e}")))?;
                    ClassSpec::cycles_at_least(k)
                } else if let Some(k) = s.strip_prefix("cycles==") {
                    let k = k
                        .parse()
                        .map_err(|e| Error::Parse(format!("bad k in {s:?}: {e}")))?;
                    ClassSpec::cycles_exactly(k)
                } else {
                    Err(Error::Parse(format!(
                        "unknown class {s:?}; expected all, forests, cycles>=K or cycles==K"
                    )))
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bridged_triangles() -> Graph {
        Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]).unwrap()
    }

    #[test]
    fn forest_membership() {
        let forests = ClassSpec::Forests;
        assert!(forests.contains(&Graph::path(4).unwrap()));
        assert!(forests.contains(&Graph::empty(3).unwrap()));
        assert!(!forests.contains(&Graph::cycle(3).unwrap()));
    }

    #[test]
    fn cycle_class_membership() {
        let at_least_3 = ClassSpec::cycles_at_least(3).unwrap();
        assert!(at_least_3.contains(&bridged_triangles()));
        assert!(at_least_3.contains(&Graph::cycle(6).unwrap()));
        // 6-cycle with a chord: no bridges, degrees 3 at the chord ends
        let chord = Graph::cycle(6).unwrap().add_edge(0, 3).unwrap();
        assert!(!at_least_3.contains(&chord));
        // a path is not a union of cycles
        assert!(!at_least_3.contains(&Graph::path(3).unwrap()));
        // pendant vertex hanging off a triangle becomes isolated after
        // the bridge is deleted
        let pendant = Graph::cycle(3).unwrap().add_edge(0, 3);
        assert!(pendant.is_err()); // need 4 vertices first
        let pendant = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        assert!(!at_least_3.contains(&pendant));

        let exactly_3 = ClassSpec::cycles_exactly(3).unwrap();
        assert!(exactly_3.contains(&bridged_triangles()));
        assert!(!exactly_3.contains(&Graph::cycle(6).unwrap()));
        let at_least_4 = ClassSpec::cycles_at_least(4).unwrap();
        assert!(!at_least_4.contains(&bridged_triangles()));
        assert!(at_least_4.contains(&Graph::cycle(4).unwrap()));
    }

    #[test]
    fn connected_membership() {
        let forests = ClassSpec::Forests;
        assert!(forests.connected_contains(&Graph::path(4).unwrap()));
        let k2_k1 = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(forests.contains(&k2_k1));
        assert!(!forests.connected_contains(&k2_k1));
        let exactly_3 = ClassSpec::cycles_exactly(3).unwrap();
        assert!(exactly_3.connected_contains(&Graph::cycle(3).unwrap()));
    }

    #[test]
    fn parse_and_display() {
        for s in ["all", "forests", "cycles>=3", "cycles==4"] {
            assert_eq!(s.parse::<ClassSpec>().unwrap().to_string(), s);
        }
        assert!("cycles>=2".parse::<ClassSpec>().is_err());
        assert!("cycles==x".parse::<ClassSpec>().is_err());
        assert!("planar".parse::<ClassSpec>().is_err());
    }
}
