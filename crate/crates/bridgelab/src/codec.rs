//! Constructive encoding of class members as rooted connected members plus
//! one bit, with an exact decoder.
//!
//! Encoding a graph G: take a smallest component C, pick a vertex v of C
//! incident to b <= 1 bridges (one always exists: a component on m vertices
//! has at most m-1 bridges), add an edge from v to each other component, and
//! root the result at v. Decoding inspects the bridges at the root: their
//! far-side sizes identify the added edges, because the far side of an
//! original bridge at v has at most |C|-1 vertices while every added edge
//! keeps a whole component of size >= |C| on its far side.

use std::collections::BTreeSet;

use num_bigint::BigUint;

use crate::classes::ClassSpec;
use crate::enumerate::{enumerate_all, enumerate_connected, rooted_codes};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::{canonical_rooted_form, canonicalize, is_isomorphic, RootedCanonicalCode};

/// Output of `encode`: a connected rooted member plus one bit, on the same
/// vertex set as the source graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EncodedGraph {
    pub h: Graph,
    pub root: usize,
    pub b: u8,
}

impl EncodedGraph {
    /// The injectivity key: rooted canonical code of (h, root) plus the bit.
    pub fn codeword(&self) -> Result<(RootedCanonicalCode, u8)> {
        Ok((canonical_rooted_form(&self.h, self.root)?, self.b))
    }
}

pub fn encode(class: &ClassSpec, g: &Graph) -> Result<EncodedGraph> {
    if !class.contains(g) {
        return Err(Error::NotAMember {
            class: class.to_string(),
        });
    }
    let comps = g.components();
    let bridges = g.bridges();
    let bridge_count = |v: usize| bridges.iter().filter(|&&(a, b)| a == v || b == v).count();

    // smallest component, ties broken by smallest canonical code
    let min_size = *comps.sizes().last().expect("n >= 1");
    let chosen = (0..comps.count())
        .filter(|&id| comps.size_of(id) == min_size)
        .min_by_key(|&id| canonicalize(&g.induced(&comps.members(id))).code)
        .expect("at least one component");
    let c_members = comps.members(chosen);
    let c_graph = g.induced(&c_members);

    // vertex of C with at most one incident bridge, minimizing the rooted
    // code of (C, v); existence is the pigeonhole on <= |C|-1 bridges
    let v = c_members
        .iter()
        .enumerate()
        .filter(|&(_, &v)| bridge_count(v) <= 1)
        .min_by_key(|&(i, _)| canonical_rooted_form(&c_graph, i).expect("i < |C|"))
        .map(|(_, &v)| v)
        .ok_or_else(|| {
            Error::Internal(format!(
                "no vertex with <= 1 incident bridge in component of {:?}",
                g
            ))
        })?;
    let b = bridge_count(v) as u8;

    // one edge from v into each other component, at its canonical first vertex
    let mut h = *g;
    for id in 0..comps.count() {
        if id == chosen {
            continue;
        }
        let members = comps.members(id);
        let canon = canonicalize(&g.induced(&members));
        let first = members[canon.perm.iter().position(|&p| p == 0).expect("bijection")];
        h = h.add_edge(v, first)?;
    }

    if !h.is_connected() {
        return Err(Error::Internal(format!(
            "encode output not connected: {h:?}"
        )));
    }
    if !class.contains(&h) {
        return Err(Error::Internal(format!(
            "bridge-addable closure violated for {} on {:?}",
            class, g
        )));
    }
    if b == 1 {
        // the surviving original bridge must have the strictly smallest
        // far-side size among the root's bridges
        let sides = root_bridge_sides(&h, v);
        let min = sides
            .iter()
            .map(|&(_, s)| s)
            .min()
            .expect("b = 1 bridge present");
        if sides.iter().filter(|&&(_, s)| s == min).count() != 1 || min > min_size - 1 {
            return Err(Error::Internal(format!(
                "added edges not identifiable at root for {g:?}"
            )));
        }
    }
    Ok(EncodedGraph { h, root: v, b })
}

/// Bridges of `h` incident to `root`, each with the number of vertices in
/// the component of h minus that edge not containing the root.
fn root_bridge_sides(h: &Graph, root: usize) -> Vec<((usize, usize), usize)> {
    h.bridges()
        .into_iter()
        .filter(|&(a, b)| a == root || b == root)
        .map(|(a, b)| {
            let cut = h.remove_edge(a, b).expect("bridge endpoints valid");
            let comps = cut.components();
            let far = if a == root { b } else { a };
            ((a, b), comps.size_of(comps.label_of(far)))
        })
        .collect()
}

pub fn decode(class: &ClassSpec, enc: &EncodedGraph) -> Result<Graph> {
    let EncodedGraph { h, root, b } = enc;
    if *b > 1 {
        return Err(Error::InvalidCodeword(format!(
            "bit b = {b} outside {{0, 1}}"
        )));
    }
    if *root >= h.n() {
        return Err(Error::InvalidCodeword(format!(
            "root {root} out of range for n = {}",
            h.n()
        )));
    }
    if !h.is_connected() {
        return Err(Error::InvalidCodeword(
            "rooted graph is not connected".into(),
        ));
    }
    let sides = root_bridge_sides(h, *root);
    let delete: Vec<(usize, usize)> = if *b == 0 {
        sides.iter().map(|&(e, _)| e).collect()
    } else {
        if sides.is_empty() {
            return Err(Error::InvalidCodeword(
                "b = 1 but the root has no incident bridge".into(),
            ));
        }
        let min = sides.iter().map(|&(_, s)| s).min().expect("nonempty");
        if sides.iter().filter(|&&(_, s)| s == min).count() != 1 {
            return Err(Error::InvalidCodeword(
                "b = 1 but the smallest far-side size is not unique".into(),
            ));
        }
        sides
            .iter()
            .filter(|&&(_, s)| s != min)
            .map(|&(e, _)| e)
            .collect()
    };
    let mut g = *h;
    for (u, v) in delete {
        g = g.remove_edge(u, v)?;
    }
    if !class.contains(&g) {
        return Err(Error::InvalidCodeword(format!(
            "decoded graph is not a member of {class}"
        )));
    }
    Ok(g)
}

/// Exact counts feeding the counting inequality at one n.
#[derive(Clone, Debug)]
pub struct BoundRow {
    pub n: usize,
    pub unlabelled_total: BigUint,
    pub rooted_connected: BigUint,
    pub unlabelled_connected: BigUint,
    /// members that decode back to themselves (always all of them on Ok)
    pub roundtrips: usize,
}

/// Encode every member at `n`, check the roundtrip, codeword injectivity and
/// the chain |A~_n| <= 2 |C~*_n| <= 2n |C~_n| on exact counts.
pub fn verify_injectivity_bound(class: &ClassSpec, n: usize) -> Result<BoundRow> {
    let all = enumerate_all(class, n)?;
    let conn = enumerate_connected(class, n)?;
    let rooted = rooted_codes(&conn);

    let mut seen: BTreeSet<(RootedCanonicalCode, u8)> = BTreeSet::new();
    let mut roundtrips = 0usize;
    for (_, member) in all.iter() {
        let enc = encode(class, &member.graph)?;
        let dec = decode(class, &enc)?;
        if dec != member.graph || !is_isomorphic(&dec, &member.graph) {
            return Err(Error::Verification {
                claim: format!("decode(encode(g)) = g for class {class}, n = {n}"),
                witness: member.graph.to_text(),
            });
        }
        roundtrips += 1;
        let key = enc.codeword()?;
        if !rooted.contains(&key.0) {
            return Err(Error::Verification {
                claim: format!("codeword lies in the rooted connected set ({class}, n = {n})"),
                witness: member.graph.to_text(),
            });
        }
        if !seen.insert(key) {
            return Err(Error::Verification {
                claim: format!("codeword injectivity for class {class}, n = {n}"),
                witness: member.graph.to_text(),
            });
        }
    }

    let total = BigUint::from(all.len());
    let two_rooted = BigUint::from(2u32) * BigUint::from(rooted.len());
    let two_n_conn = BigUint::from(2 * n) * BigUint::from(conn.len());
    if total > two_rooted || two_rooted > two_n_conn {
        return Err(Error::Verification {
            claim: format!(
                "counting inequality {total} <= {two_rooted} <= {two_n_conn} for class {class}, n = {n}"
            ),
            witness: format!("class {class}, n = {n}"),
        });
    }
    Ok(BoundRow {
        n,
        unlabelled_total: total,
        rooted_connected: BigUint::from(rooted.len()),
        unlabelled_connected: BigUint::from(conn.len()),
        roundtrips,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_triangles() -> Graph {
        Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap()
    }

    #[test]
    fn connected_input_is_fixed() {
        let forests = ClassSpec::Forests;
        let t = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let enc = encode(&forests, &t).unwrap();
        assert_eq!(enc.h, t);
        assert!(enc.b <= 1);
        assert_eq!(decode(&forests, &enc).unwrap(), t);
    }

    #[test]
    fn two_triangles_encode() {
        let class = ClassSpec::cycles_at_least(3).unwrap();
        let g = two_triangles();
        let enc = encode(&class, &g).unwrap();
        // one edge added, no original bridges at the root
        assert_eq!(enc.b, 0);
        assert_eq!(enc.h.edge_count(), g.edge_count() + 1);
        assert!(enc.h.is_connected());
        assert_eq!(decode(&class, &enc).unwrap(), g);
    }

    #[test]
    fn two_edges_encode_by_hand() {
        // K2 + K2 in forests: C = one K2, v an endpoint with b = 1,
        // one edge added to the other K2 -> path on 4 rooted at degree 2
        let forests = ClassSpec::Forests;
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let enc = encode(&forests, &g).unwrap();
        assert_eq!(enc.b, 1);
        assert!(is_isomorphic(&enc.h, &Graph::path(4).unwrap()));
        assert_eq!(enc.h.degree(enc.root), 2);
        // kept bridge keeps far side 1, deleted one had far side 2
        let sides = root_bridge_sides(&enc.h, enc.root);
        let mut far: Vec<usize> = sides.iter().map(|&(_, s)| s).collect();
        far.sort_unstable();
        assert_eq!(far, vec![1, 2]);
        assert_eq!(decode(&forests, &enc).unwrap(), g);
    }

    #[test]
    fn decode_error_paths() {
        let forests = ClassSpec::Forests;
        // no bridge at root but b = 1
        let tri_class = ClassSpec::cycles_at_least(3).unwrap();
        let bad = EncodedGraph {
            h: Graph::cycle(3).unwrap(),
            root: 0,
            b: 1,
        };
        assert!(matches!(
            decode(&tri_class, &bad),
            Err(Error::InvalidCodeword(_))
        ));
        // b out of range
        let bad = EncodedGraph {
            h: Graph::path(2).unwrap(),
            root: 0,
            b: 2,
        };
        assert!(matches!(
            decode(&forests, &bad),
            Err(Error::InvalidCodeword(_))
        ));
        // disconnected h
        let bad = EncodedGraph {
            h: two_triangles(),
            root: 0,
            b: 0,
        };
        assert!(matches!(
            decode(&tri_class, &bad),
            Err(Error::InvalidCodeword(_))
        ));
        // ambiguous minimum: star at the middle of two equal arms
        let h = Graph::path(5).unwrap();
        let amb = EncodedGraph { h, root: 2, b: 1 };
        assert!(matches!(
            decode(&forests, &amb),
            Err(Error::InvalidCodeword(_))
        ));
    }

    #[test]
    fn encode_rejects_non_members() {
        let forests = ClassSpec::Forests;
        assert!(matches!(
            encode(&forests, &Graph::cycle(3).unwrap()),
            Err(Error::NotAMember { .. })
        ));
    }

    #[test]
    fn decode_with_zero_bridges_at_root_is_identity() {
        let class = ClassSpec::cycles_at_least(3).unwrap();
        let g = Graph::cycle(5).unwrap();
        let enc = EncodedGraph {
            h: g,
            root: 0,
            b: 0,
        };
        assert_eq!(decode(&class, &enc).unwrap(), g);
    }

    #[test]
    fn bound_rows_small() {
        let forests = ClassSpec::Forests;
        let row = verify_injectivity_bound(&forests, 5).unwrap();
        assert_eq!(row.unlabelled_total, BigUint::from(10u32));
        assert_eq!(row.rooted_connected, BigUint::from(9u32));
        assert_eq!(row.roundtrips, 10);
        let row1 = verify_injectivity_bound(&forests, 1).unwrap();
        assert_eq!(row1.unlabelled_total, BigUint::from(1u32));
        assert_eq!(row1.rooted_connected, BigUint::from(1u32));
        let ex3 = ClassSpec::cycles_exactly(3).unwrap();
        let row6 = verify_injectivity_bound(&ex3, 6).unwrap();
        assert_eq!(row6.unlabelled_total, BigUint::from(2u32));
        // no members of cycles==3 on 4 vertices: the chain is 0 <= 0 <= 0
        let row4 = verify_injectivity_bound(&ex3, 4).unwrap();
        assert_eq!(row4.unlabelled_total, BigUint::from(0u32));
        assert_eq!(row4.roundtrips, 0);
    }
}
