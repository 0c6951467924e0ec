//! Two-vertex dominators of an `s`-`t` DAG.
//!
//! A pair `{a, b}` of internal vertices is a two-vertex dominator (TVD) when
//! every `s`-`t` path meets `a` or `b` while neither vertex does so alone. In a
//! conflict graph, with `s` the first UIP and `t` the conflict node, these are
//! exactly the dual implication points.
//!
//! Enumeration fixes two internally vertex-disjoint paths `pi_a` and `pi_b`
//! (via a unit-capacity flow of value 2) and then classifies path vertices
//! using *avoiding paths*, i.e. paths whose internal vertices lie on neither
//! `pi_a` nor `pi_b`:
//!
//! * `a_i` is bypassed when an avoiding path runs from `a_j` to `a_j'` with
//!   `j < i < j'` (dually for `b_i`); bypassed vertices are in no TVD.
//! * `a_i, b_j` have a crossing separator when an avoiding path runs from some
//!   `a_i'` (`i' < i`) to some `b_j'` (`j' > j`), or from some `b_j'` (`j' < j`)
//!   to some `a_i'` (`i' > i`).
//!
//! `a_i, b_j` form a TVD iff neither is bypassed and they have no crossing
//! separator. A single reverse-topological sweep computes, for every vertex,
//! the furthest position on each path it reaches through an avoiding path; the
//! two conditions then reduce to prefix maxima, which makes the whole
//! computation linear apart from the output.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::OnceLock;

use rand::Rng;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum TvdError {
    #[error("graph has a cycle")]
    Cyclic,
    #[error("source and sink coincide")]
    SourceIsSink,
    #[error("node {0} out of range")]
    NodeOutOfRange(usize),
    #[error("line {line}: {msg}")]
    Fixture { line: usize, msg: String },
}

/// A directed acyclic graph with distinguished source `s` and sink `t`,
/// stored as forward and backward adjacency arrays.
#[derive(Clone, Debug)]
pub struct TvdProblem {
    succ_off: Vec<u32>,
    succ: Vec<u32>,
    /// Backward adjacency, built on first use.
    pred: OnceLock<(Vec<u32>, Vec<u32>)>,
    topo: Vec<usize>,
    s: usize,
    t: usize,
}

/// Fills `off`/`adj` with the adjacency arrays of `edges`, reversed when
/// `rev` is set, reusing their storage.
impl Default for TvdProblem {
    /// A single-node placeholder, meant to be rebuilt in place.
    fn default() -> Self {
        TvdProblem {
            succ_off: vec![0],
            succ: Vec::new(),
            pred: OnceLock::new(),
            topo: Vec::new(),
            s: 0,
            t: 0,
        }
    }
}

fn fill_adjacency(n: usize, edges: &[(usize, usize)], rev: bool, off: &mut Vec<u32>, adj: &mut Vec<u32>) {
    off.clear();
    off.resize(n + 1, 0);
    for &(u, v) in edges {
        off[if rev { v } else { u } + 1] += 1;
    }
    for i in 0..n {
        off[i + 1] += off[i];
    }
    adj.clear();
    adj.resize(edges.len(), 0);
    for &(u, v) in edges {
        let (a, b) = if rev { (v, u) } else { (u, v) };
        adj[off[a] as usize] = b as u32;
        off[a] += 1;
    }
    for i in (1..=n).rev() {
        off[i] = off[i - 1];
    }
    off[0] = 0;
}

impl TvdProblem {
    /// Builds the graph; parallel edges are merged, cycles rejected.
    pub fn new(num_nodes: usize, edges: &[(usize, usize)], s: usize, t: usize) -> Result<Self, TvdError> {
        if s == t {
            return Err(TvdError::SourceIsSink);
        }
        if let Some(&x) = [s, t].iter().find(|&&x| x >= num_nodes) {
            return Err(TvdError::NodeOutOfRange(x));
        }
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= num_nodes || v >= num_nodes) {
            return Err(TvdError::NodeOutOfRange(if u >= num_nodes { u } else { v }));
        }
        let mut sorted: Vec<(usize, usize)> = edges.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut g = TvdProblem::empty();
        g.s = s;
        g.t = t;
        fill_adjacency(num_nodes, &sorted, false, &mut g.succ_off, &mut g.succ);
        g.topo = g.topological_order().ok_or(TvdError::Cyclic)?;
        Ok(g)
    }

    fn empty() -> Self {
        Self::default()
    }

    /// Builds a graph whose node ids already form a topological order, i.e.
    /// every edge `(u, v)` has `u < v`, and which has no parallel edges.
    pub fn from_ordered_edges(num_nodes: usize, edges: &[(usize, usize)], s: usize, t: usize) -> Self {
        let mut g = TvdProblem::empty();
        g.rebuild_ordered(num_nodes, edges, s, t);
        g
    }

    /// In-place form of [`TvdProblem::from_ordered_edges`].
    pub fn rebuild_ordered(&mut self, num_nodes: usize, edges: &[(usize, usize)], s: usize, t: usize) {
        debug_assert!(s != t && s < num_nodes && t < num_nodes);
        debug_assert!(edges.iter().all(|&(u, v)| u < v && v < num_nodes));
        fill_adjacency(num_nodes, edges, false, &mut self.succ_off, &mut self.succ);
        self.pred = OnceLock::new();
        self.topo.clear();
        self.topo.extend(0..num_nodes);
        self.s = s;
        self.t = t;
    }

    pub fn num_nodes(&self) -> usize {
        self.succ_off.len() - 1
    }

    pub fn num_edges(&self) -> usize {
        self.succ.len()
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn successors(&self, v: usize) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.succ[self.succ_off[v] as usize..self.succ_off[v + 1] as usize]
            .iter()
            .map(|&x| x as usize)
    }

    pub fn predecessors(&self, v: usize) -> impl ExactSizeIterator<Item = usize> + '_ {
        let (off, pred) = self.pred.get_or_init(|| {
            let edges: Vec<(usize, usize)> = self.edges().collect();
            let (mut off, mut adj) = (Vec::new(), Vec::new());
            fill_adjacency(self.num_nodes(), &edges, true, &mut off, &mut adj);
            (off, adj)
        });
        pred[off[v] as usize..off[v + 1] as usize].iter().map(|&x| x as usize)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.num_nodes()).flat_map(move |u| self.successors(u).map(move |v| (u, v)))
    }

    /// Topological order of all nodes.
    pub fn topo_order(&self) -> &[usize] {
        &self.topo
    }

    fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.num_nodes();
        let mut indeg: Vec<usize> = (0..n).map(|v| self.predecessors(v).len()).collect();
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for v in self.successors(u) {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    queue.push_back(v);
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    /// Reads the fixture format: one `u v` edge per line plus `s X` and `t Y`
    /// declarations; `#` starts a comment. Node ids follow first appearance.
    pub fn parse_edge_list(text: &str) -> Result<(TvdProblem, Vec<String>), TvdError> {
        let mut names: Vec<String> = Vec::new();
        let mut ids: HashMap<String, usize> = HashMap::new();
        let mut intern = |name: &str, names: &mut Vec<String>| -> usize {
            *ids.entry(name.to_string()).or_insert_with(|| {
                names.push(name.to_string());
                names.len() - 1
            })
        };
        let mut edges = Vec::new();
        let (mut s, mut t) = (None, None);
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 2 {
                return Err(TvdError::Fixture {
                    line: idx + 1,
                    msg: format!("expected two tokens, got `{line}`"),
                });
            }
            match parts[0] {
                "s" => s = Some(intern(parts[1], &mut names)),
                "t" => t = Some(intern(parts[1], &mut names)),
                u => {
                    let u = intern(u, &mut names);
                    let v = intern(parts[1], &mut names);
                    edges.push((u, v));
                }
            }
        }
        let missing = |what: &str| TvdError::Fixture {
            line: 0,
            msg: format!("missing `{what}` declaration"),
        };
        let s = s.ok_or_else(|| missing("s"))?;
        let t = t.ok_or_else(|| missing("t"))?;
        let g = TvdProblem::new(names.len(), &edges, s, t)?;
        Ok((g, names))
    }
}

/// Two internally vertex-disjoint `s`-`t` paths, listed from `s` to `t`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DisjointPaths {
    pub pi_a: Vec<usize>,
    pub pi_b: Vec<usize>,
}

const NIL: u32 = u32::MAX;
const NONE: isize = -1;

/// Scratch buffers for repeated TVD computations; reusing one avoids
/// per-call allocation.
#[derive(Clone, Debug, Default)]
pub struct TvdWorkspace {
    par: Vec<u32>,
    next1: Vec<u32>,
    prev1: Vec<u32>,
    flow_next: Vec<u32>,
    from: Vec<u32>,
    stack: Vec<usize>,
    queue: VecDeque<usize>,
    firsts: Vec<usize>,
    pos_a: Vec<isize>,
    pos_b: Vec<isize>,
    reach_a: Vec<isize>,
    reach_b: Vec<isize>,
    a_to_a: Vec<isize>,
    a_to_b: Vec<isize>,
    b_to_a: Vec<isize>,
    b_to_b: Vec<isize>,
    byp_a: Vec<bool>,
    byp_b: Vec<bool>,
    min_a: Vec<isize>,
    min_b: Vec<isize>,
    cand: Vec<(usize, usize, usize)>,
    cover: Vec<i32>,
    b_index: Vec<usize>,
}

fn reset<T: Clone>(v: &mut Vec<T>, n: usize, x: T) {
    v.clear();
    v.resize(n, x);
}

/// Finds two internally vertex-disjoint `s`-`t` paths, or `None` when some
/// single vertex (or the lack of a second route) limits the flow to one.
pub fn find_two_disjoint_paths(g: &TvdProblem) -> Option<DisjointPaths> {
    let mut paths = DisjointPaths::default();
    disjoint_paths_into(g, &mut TvdWorkspace::default(), &mut paths).then_some(paths)
}

/// A first path is found by search; a second augmentation then runs in the
/// residual of the vertex-split network, which is kept implicit: state `2v`
/// is the entry of `v`, `2v + 1` its exit.
fn disjoint_paths_into(g: &TvdProblem, ws: &mut TvdWorkspace, out: &mut DisjointPaths) -> bool {
    let n = g.num_nodes();
    let (s, t) = (g.s, g.t);
    reset(&mut ws.par, n, NIL);
    ws.stack.clear();
    ws.stack.push(s);
    ws.par[s] = s as u32;
    while let Some(u) = ws.stack.pop() {
        if u == t {
            break;
        }
        for v in g.successors(u) {
            if ws.par[v] == NIL {
                ws.par[v] = u as u32;
                ws.stack.push(v);
            }
        }
    }
    if ws.par[t] == NIL {
        return false;
    }
    reset(&mut ws.next1, n, NIL);
    reset(&mut ws.prev1, n, NIL);
    let mut v = t;
    while v != s {
        let u = ws.par[v] as usize;
        ws.next1[u] = v as u32;
        ws.prev1[v] = u as u32;
        v = u;
    }
    let (next1, prev1) = (&ws.next1, &ws.prev1);
    let on1 = |v: usize| v != s && v != t && prev1[v] != NIL;

    let from = &mut ws.from;
    reset(from, 2 * n, NIL);
    let start = 2 * s + 1;
    let goal = 2 * t;
    from[start] = start as u32;
    let queue = &mut ws.queue;
    queue.clear();
    queue.push_back(start);
    'bfs: while let Some(x) = queue.pop_front() {
        let v = x / 2;
        let mut push = |y: usize| {
            if from[y] == NIL {
                from[y] = x as u32;
                queue.push_back(y);
            }
        };
        if x % 2 == 1 {
            // Exit of v: forward edges without flow; back through the split arc.
            for w in g.successors(v) {
                if w == s || next1[v] == w as u32 {
                    continue;
                }
                push(2 * w);
                if 2 * w == goal {
                    break 'bfs;
                }
            }
            if on1(v) {
                push(2 * v);
            }
        } else if on1(v) {
            // Entry of a first-path node: undo the edge entering it.
            push(2 * prev1[v] as usize + 1);
        } else if v != t {
            push(2 * v + 1);
        }
    }
    if from[goal] == NIL {
        return false;
    }
    // Apply the augmentation. Every node but s carries at most one unit out.
    ws.flow_next.clear();
    ws.flow_next.extend_from_slice(next1);
    ws.firsts.clear();
    ws.firsts.push(next1[s] as usize);
    let mut x = goal;
    while x != start {
        let y = from[x] as usize;
        let (yu, xu) = (y / 2, x / 2);
        if yu != xu {
            if y % 2 == 1 {
                if yu == s {
                    ws.firsts.push(xu);
                } else {
                    ws.flow_next[yu] = xu as u32;
                }
            } else if xu == s {
                ws.firsts.retain(|&f| f != yu);
            } else if ws.flow_next[xu] == yu as u32 {
                ws.flow_next[xu] = NIL;
            }
        }
        x = y;
    }
    debug_assert_eq!(ws.firsts.len(), 2);
    ws.firsts.sort_unstable();
    for (k, path) in [&mut out.pi_a, &mut out.pi_b].into_iter().enumerate() {
        path.clear();
        path.push(s);
        let mut u = ws.firsts[k];
        path.push(u);
        while u != t {
            u = ws.flow_next[u] as usize;
            path.push(u);
        }
    }
    true
}

/// The compressed set of all TVDs of a graph.
#[derive(Clone, Debug, Default)]
pub struct TvdResult {
    pub paths: DisjointPaths,
    /// Internal nodes of `pi_a` belonging to at least one TVD, in path order.
    pub a_prime: Vec<usize>,
    /// Internal nodes of `pi_b` belonging to at least one TVD, in path order.
    pub b_prime: Vec<usize>,
    /// For `a_prime[i]`, the inclusive range of `b_prime` indices it pairs with.
    pub ranges: Vec<(usize, usize)>,
    /// Internal path nodes excluded because an avoiding path skips over them.
    pub bypassed: Vec<usize>,
}

impl TvdResult {
    pub fn is_empty(&self) -> bool {
        self.a_prime.is_empty()
    }

    /// Number of pairs represented.
    pub fn num_pairs(&self) -> usize {
        self.ranges.iter().map(|&(m, n)| n - m + 1).sum()
    }

    /// Partners of `b_prime[j]` as an inclusive range of `a_prime` indices.
    pub fn partners_of_b(&self, j: usize) -> Option<(usize, usize)> {
        let mut lo = None;
        let mut hi = None;
        for (i, &(m, n)) in self.ranges.iter().enumerate() {
            if m <= j && j <= n {
                lo.get_or_insert(i);
                hi = Some(i);
            }
        }
        Some((lo?, hi?))
    }

    /// Uniform sample over all represented pairs without expanding them.
    pub fn sample_pair<R: Rng>(&self, rng: &mut R) -> Option<(usize, usize)> {
        let total = self.num_pairs();
        if total == 0 {
            return None;
        }
        let mut r = rng.gen_range(0..total);
        for (i, &(m, n)) in self.ranges.iter().enumerate() {
            let w = n - m + 1;
            if r < w {
                return Some(canonical(self.a_prime[i], self.b_prime[m + r]));
            }
            r -= w;
        }
        unreachable!()
    }

    fn clear(&mut self) {
        self.paths.pi_a.clear();
        self.paths.pi_b.clear();
        self.a_prime.clear();
        self.b_prime.clear();
        self.ranges.clear();
        self.bypassed.clear();
    }
}

fn canonical(u: usize, v: usize) -> (usize, usize) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Computes the compressed representation of every TVD of `g`. Returns an
/// empty result when `s` and `t` are not 2-connected.
pub fn find_all_tvds(g: &TvdProblem) -> TvdResult {
    let mut r = TvdResult::default();
    find_all_tvds_into(g, &mut TvdWorkspace::default(), &mut r);
    r
}

/// [`find_all_tvds`] writing into `out` and reusing the buffers of `ws`.
pub fn find_all_tvds_into(g: &TvdProblem, ws: &mut TvdWorkspace, out: &mut TvdResult) {
    out.clear();
    let mut paths = std::mem::take(&mut out.paths);
    if disjoint_paths_into(g, ws, &mut paths) {
        out.paths = paths;
        classify(g, ws, out);
    } else {
        paths.pi_a.clear();
        paths.pi_b.clear();
        out.paths = paths;
    }
}

/// Classifies vertices against a fixed pair of disjoint paths.
pub fn tvds_from_paths(g: &TvdProblem, paths: DisjointPaths) -> TvdResult {
    let mut r = TvdResult {
        paths,
        ..Default::default()
    };
    classify(g, &mut TvdWorkspace::default(), &mut r);
    r
}

fn classify(g: &TvdProblem, ws: &mut TvdWorkspace, r: &mut TvdResult) {
    let n = g.num_nodes();
    let pi_a = &r.paths.pi_a;
    let pi_b = &r.paths.pi_b;
    let la = pi_a.len() - 1;
    let lb = pi_b.len() - 1;
    reset(&mut ws.pos_a, n, NONE);
    reset(&mut ws.pos_b, n, NONE);
    for (i, &v) in pi_a.iter().enumerate() {
        ws.pos_a[v] = i as isize;
    }
    for (j, &v) in pi_b.iter().enumerate() {
        ws.pos_b[v] = j as isize;
    }
    let (pos_a, pos_b) = (&ws.pos_a, &ws.pos_b);
    let on_path = |v: usize| pos_a[v] != NONE || pos_b[v] != NONE;

    // Furthest a/b positions reachable from each off-path node through
    // off-path vertices only.
    reset(&mut ws.reach_a, n, NONE);
    reset(&mut ws.reach_b, n, NONE);
    let (reach_a, reach_b) = (&mut ws.reach_a, &mut ws.reach_b);
    for &w in g.topo_order().iter().rev() {
        if on_path(w) {
            continue;
        }
        let (mut ra, mut rb) = (NONE, NONE);
        for v in g.successors(w) {
            let (x, y) = if on_path(v) {
                (pos_a[v], pos_b[v])
            } else {
                (reach_a[v], reach_b[v])
            };
            ra = ra.max(x);
            rb = rb.max(y);
        }
        reach_a[w] = ra;
        reach_b[w] = rb;
    }
    let (reach_a, reach_b) = (&ws.reach_a, &ws.reach_b);
    let from_node = |u: usize| -> (isize, isize) {
        let (mut ra, mut rb) = (NONE, NONE);
        for v in g.successors(u) {
            let (x, y) = if on_path(v) {
                (pos_a[v], pos_b[v])
            } else {
                (reach_a[v], reach_b[v])
            };
            ra = ra.max(x);
            rb = rb.max(y);
        }
        (ra, rb)
    };

    // Furthest a position (bypass) and b position (crossing) from each a_i,
    // and likewise from each b_j.
    ws.a_to_a.clear();
    ws.a_to_b.clear();
    for &u in &pi_a[..la] {
        let (x, y) = from_node(u);
        ws.a_to_a.push(x);
        ws.a_to_b.push(y);
    }
    ws.b_to_a.clear();
    ws.b_to_b.clear();
    for &u in &pi_b[..lb] {
        let (x, y) = from_node(u);
        ws.b_to_a.push(x);
        ws.b_to_b.push(y);
    }

    let bypassed_flags = |to_self: &[isize], len: usize, flags: &mut Vec<bool>| {
        reset(flags, len + 1, false);
        let mut best = NONE;
        for m in 0..=len {
            if best > m as isize {
                flags[m] = true;
            }
            if m < len {
                best = best.max(to_self[m]);
            }
        }
    };
    bypassed_flags(&ws.a_to_a, la, &mut ws.byp_a);
    bypassed_flags(&ws.b_to_b, lb, &mut ws.byp_b);

    // min_b[i]: smallest b index allowed with a_i; min_a[j] likewise.
    let prefix_max = |v: &[isize], len: usize, out: &mut Vec<isize>| {
        out.clear();
        let mut best = NONE;
        for i in 0..=len {
            out.push(best);
            if i < v.len() {
                best = best.max(v[i]);
            }
        }
    };
    prefix_max(&ws.a_to_b, la, &mut ws.min_b);
    prefix_max(&ws.b_to_a, lb, &mut ws.min_a);
    let (byp_a, byp_b, min_a, min_b) = (&ws.byp_a, &ws.byp_b, &ws.min_a, &ws.min_b);

    // For a_i: b_j allowed iff j >= min_b[i] and min_a[j] <= i. min_a is
    // nondecreasing, so the second condition is a prefix of b indices.
    ws.cand.clear();
    let mut hi = 0usize;
    for i in 1..la {
        if byp_a[i] {
            continue;
        }
        while hi + 1 < lb && min_a[hi + 1] <= i as isize {
            hi += 1;
        }
        let lo = min_b[i].max(1) as usize;
        if lo > hi {
            continue;
        }
        let first = (lo..=hi).find(|&j| !byp_b[j]);
        let last = (lo..=hi).rev().find(|&j| !byp_b[j]);
        if let (Some(first), Some(last)) = (first, last) {
            ws.cand.push((i, first, last));
        }
    }
    // Mark b' via a difference array over b indices.
    reset(&mut ws.cover, lb + 2, 0);
    for &(_, first, last) in &ws.cand {
        ws.cover[first] += 1;
        ws.cover[last + 1] -= 1;
    }
    reset(&mut ws.b_index, lb + 1, usize::MAX);
    let mut run = 0;
    for j in 1..lb {
        run += ws.cover[j];
        if run > 0 && !byp_b[j] {
            ws.b_index[j] = r.b_prime.len();
            r.b_prime.push(pi_b[j]);
        }
    }
    for &(i, first, last) in &ws.cand {
        r.a_prime.push(pi_a[i]);
        r.ranges.push((ws.b_index[first], ws.b_index[last]));
    }
    r.bypassed.extend((1..la).filter(|&i| byp_a[i]).map(|i| pi_a[i]));
    r.bypassed.extend((1..lb).filter(|&j| byp_b[j]).map(|j| pi_b[j]));
    r.bypassed.sort_unstable();
}

/// Expands the compressed representation. Each pair is ordered `(lo, hi)` by
/// node id and the list is sorted.
pub fn enumerate_pairs(r: &TvdResult) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(r.num_pairs());
    for (i, &(m, n)) in r.ranges.iter().enumerate() {
        for j in m..=n {
            out.push(canonical(r.a_prime[i], r.b_prime[j]));
        }
    }
    out.sort_unstable();
    out
}

/// Brute-force reference: removes every candidate set and tests `s`-`t`
/// reachability directly. Quadratically many reachability checks, so only
/// suitable for small graphs.
pub fn oracle_tvds(g: &TvdProblem) -> BTreeSet<(usize, usize)> {
    let n = g.num_nodes();
    let internal: Vec<usize> = (0..n).filter(|&v| v != g.s && v != g.t).collect();
    let mut removed = vec![false; n];
    let mut single_cut = vec![false; n];
    for &u in &internal {
        removed[u] = true;
        single_cut[u] = !reaches(g, &removed);
        removed[u] = false;
    }
    let mut out = BTreeSet::new();
    for (x, &u) in internal.iter().enumerate() {
        if single_cut[u] {
            continue;
        }
        removed[u] = true;
        for &v in &internal[x + 1..] {
            if single_cut[v] {
                continue;
            }
            removed[v] = true;
            if !reaches(g, &removed) {
                out.insert((u, v));
            }
            removed[v] = false;
        }
        removed[u] = false;
    }
    out
}

fn reaches(g: &TvdProblem, removed: &[bool]) -> bool {
    let mut seen = vec![false; g.num_nodes()];
    let mut stack = vec![g.s];
    seen[g.s] = true;
    while let Some(u) = stack.pop() {
        if u == g.t {
            return true;
        }
        for v in g.successors(u) {
            if !seen[v] && !removed[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    false
}
