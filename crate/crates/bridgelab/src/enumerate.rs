//! Exhaustive generation of unlabelled class members per vertex count, with a
//! brute-force labelled filter oracle and labelled-count conversion.
//!
//! Connected members come from per-class generators (leaf augmentation for
//! trees, cycle-skeleton assembly for the cycle classes, labelled filtering
//! for all-graphs); full member sets are composed as multisets of connected
//! members, which is exactly what decomposability means. Everything is
//! deduplicated on serialized canonical codes, so output order is fixed.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::classes::ClassSpec;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::{canonical_rooted_form, canonicalize, CanonicalCode};

/// Enumeration cap: generators reach n = 10, plain filtering stops at 7.
pub fn enumeration_cap(class: &ClassSpec) -> usize {
    match class {
        ClassSpec::AllGraphs => 7,
        _ => 10,
    }
}

/// The labelled filter iterates all 2^(n(n-1)/2) graphs.
pub const ORACLE_CAP: usize = 7;

/// One isomorphism class: a representative (canonically labelled) and the
/// order of its automorphism group.
#[derive(Clone, Debug)]
pub struct Member {
    pub graph: Graph,
    pub aut: BigUint,
}

/// Set of pairwise non-isomorphic members of a class at fixed n, keyed and
/// ordered by canonical code.
#[derive(Clone, Debug)]
pub struct UnlabelledSet {
    class: ClassSpec,
    n: usize,
    entries: BTreeMap<CanonicalCode, Member>,
}

impl UnlabelledSet {
    fn new(class: ClassSpec, n: usize) -> Self {
        UnlabelledSet {
            class,
            n,
            entries: BTreeMap::new(),
        }
    }

    fn insert_graph(&mut self, g: &Graph) {
        let canon = canonicalize(g);
        self.entries.entry(canon.code).or_insert(Member {
            graph: canon.graph,
            aut: BigUint::from(canon.aut),
        });
    }

    pub fn class(&self) -> &ClassSpec {
        &self.class
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CanonicalCode, &Member)> {
        self.entries.iter()
    }

    pub fn codes(&self) -> impl Iterator<Item = &CanonicalCode> {
        self.entries.keys()
    }

    pub fn members(&self) -> impl Iterator<Item = &Member> {
        self.entries.values()
    }

    /// One JSON object per line: `{code, n, edges, aut}`.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for (code, member) in &self.entries {
            let edges: Vec<[usize; 2]> =
                member.graph.edges().iter().map(|&(u, v)| [u, v]).collect();
            let line = serde_json::json!({
                "code": code.to_string(),
                "n": self.n,
                "edges": edges,
                "aut": member.aut.to_string(),
            });
            out.push_str(&line.to_string());
            out.push('\n');
        }
        out
    }
}

/// One representative per isomorphism class of connected members on `n`
/// vertices.
pub fn enumerate_connected(class: &ClassSpec, n: usize) -> Result<UnlabelledSet> {
    let cap = enumeration_cap(class);
    if n == 0 || n > cap {
        return Err(Error::CapExceeded {
            what: "connected-member enumeration",
            n,
            cap,
        });
    }
    let mut set = UnlabelledSet::new(*class, n);
    match class {
        ClassSpec::Forests => {
            for t in trees(n) {
                set.insert_graph(&t);
            }
        }
        ClassSpec::AllGraphs => {
            let sweep = sweep_labelled(class, n);
            for (code, entry) in sweep.classes {
                if entry.connected {
                    set.entries.insert(
                        code,
                        Member {
                            graph: entry.rep,
                            aut: BigUint::from(entry.aut),
                        },
                    );
                }
            }
        }
        ClassSpec::CyclesAtLeast(k) => cycle_structures(&mut set, n, *k, false),
        ClassSpec::CyclesExactly(k) => cycle_structures(&mut set, n, *k, true),
    }
    Ok(set)
}

/// One representative per isomorphism class of members on `n` vertices,
/// composed as multisets of connected members with sizes summing to n.
pub fn enumerate_all(class: &ClassSpec, n: usize) -> Result<UnlabelledSet> {
    let cap = enumeration_cap(class);
    if n == 0 || n > cap {
        return Err(Error::CapExceeded {
            what: "member enumeration",
            n,
            cap,
        });
    }
    // parts in (size, code) order; the recursion picks a nondecreasing
    // sequence of part indices, i.e. one multiset per visit
    let mut parts: Vec<(usize, Graph)> = Vec::new();
    for s in class.min_connected_size()..=n {
        let conn = enumerate_connected(class, s)?;
        for member in conn.members() {
            parts.push((s, member.graph));
        }
    }
    let mut set = UnlabelledSet::new(*class, n);
    let mut chosen = Vec::new();
    compose(&parts, 0, n, &mut chosen, &mut set);
    Ok(set)
}

fn compose(
    parts: &[(usize, Graph)],
    from: usize,
    remaining: usize,
    chosen: &mut Vec<usize>,
    set: &mut UnlabelledSet,
) {
    if remaining == 0 {
        let mut union: Option<Graph> = None;
        for &i in chosen.iter() {
            let g = &parts[i].1;
            union = Some(match union {
                None => *g,
                Some(u) => u.disjoint_union(g).expect("sizes sum to n <= 16"),
            });
        }
        set.insert_graph(&union.expect("at least one part"));
        return;
    }
    for i in from..parts.len() {
        if parts[i].0 > remaining {
            break; // parts sorted by size
        }
        chosen.push(i);
        compose(parts, i, remaining - parts[i].0, chosen, set);
        chosen.pop();
    }
}

/// Unlabelled trees on `n` vertices by leaf augmentation: every tree on n
/// has a leaf, so attaching a new leaf everywhere on every tree on n-1 and
/// deduplicating is exhaustive.
fn trees(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(1).expect("1 <= 16")];
    for m in 2..=n {
        let mut next: BTreeMap<CanonicalCode, Graph> = BTreeMap::new();
        for t in &level {
            let mut edges = t.edges();
            for v in 0..m - 1 {
                edges.push((v, m - 1));
                let bigger = Graph::from_edges(m, &edges).expect("valid tree edges");
                edges.pop();
                let canon = canonicalize(&bigger);
                next.entry(canon.code).or_insert(canon.graph);
            }
        }
        level = next.into_values().collect();
    }
    level
}

/// Connected members of a cycle class: cycles C_{l_1},...,C_{l_m} joined
/// into one component by m-1 bridges forming a tree over the cycles, with
/// every choice of attachment vertices.
fn cycle_structures(set: &mut UnlabelledSet, n: usize, k: usize, exact: bool) {
    for lens in cycle_partitions(n, k, exact) {
        let m = lens.len();
        let mut offsets = vec![0usize; m];
        for i in 1..m {
            offsets[i] = offsets[i - 1] + lens[i - 1];
        }
        let mut base = Graph::cycle(lens[0]).expect("k >= 3");
        for &len in &lens[1..] {
            base = base
                .disjoint_union(&Graph::cycle(len).expect("k >= 3"))
                .expect("total is n <= 16");
        }
        for skeleton in labelled_trees(m) {
            // mixed-radix sweep over attachment vertices per skeleton edge
            let radices: Vec<(usize, usize)> =
                skeleton.iter().map(|&(a, b)| (lens[a], lens[b])).collect();
            let mut digits = vec![(0usize, 0usize); skeleton.len()];
            loop {
                let mut g = base;
                for (e, &(a, b)) in skeleton.iter().enumerate() {
                    let (x, y) = digits[e];
                    g = g
                        .add_edge(offsets[a] + x, offsets[b] + y)
                        .expect("attachment in range");
                }
                set.insert_graph(&g);
                // increment
                let mut pos = 0;
                loop {
                    if pos == digits.len() {
                        break;
                    }
                    digits[pos].1 += 1;
                    if digits[pos].1 < radices[pos].1 {
                        break;
                    }
                    digits[pos].1 = 0;
                    digits[pos].0 += 1;
                    if digits[pos].0 < radices[pos].0 {
                        break;
                    }
                    digits[pos].0 = 0;
                    pos += 1;
                }
                if pos == digits.len() {
                    break;
                }
            }
        }
    }
}

/// Partitions of `n` into parts >= k (or all exactly k), nonincreasing.
fn cycle_partitions(n: usize, k: usize, exact: bool) -> Vec<Vec<usize>> {
    if exact {
        return if n.is_multiple_of(k) {
            vec![vec![k; n / k]]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(n: usize, max: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        let mut part = max.min(n);
        while part >= k {
            if n == part || n - part >= k {
                cur.push(part);
                rec(n - part, part, k, cur, out);
                cur.pop();
            }
            part -= 1;
        }
    }
    rec(n, n, k, &mut cur, &mut out);
    out
}

/// All labelled trees on `m` nodes as edge lists (Pruefer decoding).
fn labelled_trees(m: usize) -> Vec<Vec<(usize, usize)>> {
    match m {
        1 => return vec![Vec::new()],
        2 => return vec![vec![(0, 1)]],
        _ => {}
    }
    let mut out = Vec::new();
    let mut seq = vec![0usize; m - 2];
    loop {
        out.push(pruefer_decode(&seq, m));
        let mut pos = 0;
        while pos < seq.len() {
            seq[pos] += 1;
            if seq[pos] < m {
                break;
            }
            seq[pos] = 0;
            pos += 1;
        }
        if pos == seq.len() {
            break;
        }
    }
    out
}

fn pruefer_decode(seq: &[usize], m: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; m];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(m - 1);
    for &s in seq {
        let leaf = (0..m).find(|&v| degree[v] == 1).expect("tree has a leaf");
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..m).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Number of labelled graphs in the union of the set's isomorphism classes:
/// sum of n!/|Aut| over entries.
pub fn labelled_count_from_unlabelled(set: &UnlabelledSet) -> BigUint {
    let fact = factorial(set.n());
    let mut total = BigUint::zero();
    for member in set.members() {
        let (q, r) = (fact.clone() / &member.aut, fact.clone() % &member.aut);
        debug_assert!(r.is_zero(), "|Aut| divides n!");
        let _ = r;
        total += q;
    }
    total
}

/// Number of distinct rooted codes over (connected member, root) pairs.
pub fn rooted_connected_count(class: &ClassSpec, n: usize) -> Result<BigUint> {
    let conn = enumerate_connected(class, n)?;
    Ok(BigUint::from(rooted_codes(&conn).len()))
}

pub(crate) fn rooted_codes(conn: &UnlabelledSet) -> BTreeSet<crate::iso::RootedCanonicalCode> {
    let mut codes = BTreeSet::new();
    for member in conn.members() {
        for root in 0..conn.n() {
            codes.insert(canonical_rooted_form(&member.graph, root).expect("root < n"));
        }
    }
    codes
}

pub fn factorial(n: usize) -> BigUint {
    let mut f = BigUint::one();
    for i in 2..=n {
        f *= BigUint::from(i);
    }
    f
}

/// Exact per-n counts for one class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountRow {
    pub n: usize,
    pub unlabelled_total: BigUint,
    pub unlabelled_connected: BigUint,
    pub rooted_connected: BigUint,
    pub labelled_total: BigUint,
    pub labelled_connected: BigUint,
}

#[derive(Clone, Debug)]
pub struct CountTable {
    pub class: ClassSpec,
    pub rows: Vec<CountRow>,
}

impl CountTable {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "n,unlabelled_total,unlabelled_connected,rooted_connected,labelled_total,labelled_connected\n",
        );
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                r.n,
                r.unlabelled_total,
                r.unlabelled_connected,
                r.rooted_connected,
                r.labelled_total,
                r.labelled_connected
            ));
        }
        out
    }
}

/// Count table rows for n = 1..=nmax via the enumeration route.
pub fn count_table(class: &ClassSpec, nmax: usize) -> Result<CountTable> {
    let mut rows = Vec::new();
    for n in 1..=nmax {
        let all = enumerate_all(class, n)?;
        let conn = enumerate_connected(class, n)?;
        rows.push(CountRow {
            n,
            unlabelled_total: BigUint::from(all.len()),
            unlabelled_connected: BigUint::from(conn.len()),
            rooted_connected: BigUint::from(rooted_codes(&conn).len()),
            labelled_total: labelled_count_from_unlabelled(&all),
            labelled_connected: labelled_count_from_unlabelled(&conn),
        });
    }
    Ok(CountTable {
        class: *class,
        rows,
    })
}

struct SweepEntry {
    rep: Graph,
    aut: u64,
    connected: bool,
    labelled_copies: u64,
}

struct Sweep {
    labelled_total: u64,
    labelled_connected: u64,
    classes: HashMap<CanonicalCode, SweepEntry>,
}

impl Sweep {
    fn empty() -> Self {
        Sweep {
            labelled_total: 0,
            labelled_connected: 0,
            classes: HashMap::new(),
        }
    }

    fn absorb(mut self, other: Sweep) -> Sweep {
        self.labelled_total += other.labelled_total;
        self.labelled_connected += other.labelled_connected;
        for (code, entry) in other.classes {
            self.classes
                .entry(code)
                .and_modify(|e| e.labelled_copies += entry.labelled_copies)
                .or_insert(entry);
        }
        self
    }
}

/// Iterate every labelled graph on `n` vertices, keep class members, and
/// canonically deduplicate them. Partitioned over workers; the merge is
/// order-independent, so results match a single-worker run.
fn sweep_labelled(class: &ClassSpec, n: usize) -> Sweep {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let m = pairs.len();
    (0u64..1 << m)
        .into_par_iter()
        .fold(Sweep::empty, |mut acc, mask| {
            let mut g = Graph::empty(n).expect("n within range");
            for (k, &(u, v)) in pairs.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    g = g.add_edge(u, v).expect("mask edge valid");
                }
            }
            if !class.contains(&g) {
                return acc;
            }
            acc.labelled_total += 1;
            let connected = g.is_connected();
            if connected {
                acc.labelled_connected += 1;
            }
            let canon = canonicalize(&g);
            acc.classes
                .entry(canon.code)
                .and_modify(|e| e.labelled_copies += 1)
                .or_insert(SweepEntry {
                    rep: canon.graph,
                    aut: canon.aut,
                    connected,
                    labelled_copies: 1,
                });
            acc
        })
        .reduce(Sweep::empty, Sweep::absorb)
}

/// Independent oracle: filter all labelled graphs on `n` vertices and count
/// members, connected members, their isomorphism classes, and rooted codes.
pub fn labelled_filter_oracle(class: &ClassSpec, n: usize) -> Result<CountRow> {
    if n == 0 || n > ORACLE_CAP {
        return Err(Error::CapExceeded {
            what: "labelled filter oracle",
            n,
            cap: ORACLE_CAP,
        });
    }
    let sweep = sweep_labelled(class, n);
    // sanity: labelled multiplicity of every class must equal n!/|Aut|
    let fact = factorial(n);
    for entry in sweep.classes.values() {
        let expect = fact.clone() / BigUint::from(entry.aut);
        debug_assert_eq!(BigUint::from(entry.labelled_copies), expect);
        let _ = expect;
    }
    let mut rooted = BTreeSet::new();
    for entry in sweep.classes.values().filter(|e| e.connected) {
        for root in 0..n {
            rooted.insert(canonical_rooted_form(&entry.rep, root).expect("root < n"));
        }
    }
    Ok(CountRow {
        n,
        unlabelled_total: BigUint::from(sweep.classes.len()),
        unlabelled_connected: BigUint::from(sweep.classes.values().filter(|e| e.connected).count()),
        rooted_connected: BigUint::from(rooted.len()),
        labelled_total: BigUint::from(sweep.labelled_total),
        labelled_connected: BigUint::from(sweep.labelled_connected),
    })
}
