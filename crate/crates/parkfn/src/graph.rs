//! Rooted multigraphs with symmetric edge weights, plus the orientation and
//! spanning-tree enumerations used by the parking-function machinery.
//!
//! Vertices are `{0, ..., n}` with `0` the root. Parallel edges are stored as
//! weights `w({i,j})`; loops are not representable.

use serde::{Deserialize, Serialize};

use crate::tree::RootedTree;
use crate::{Caps, Error, Result};

/// Multigraph on `{0..n}` rooted at 0, as a triangular weight table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    weights: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize, u64)>,
}

impl Multigraph {
    /// Edgeless multigraph with `n` non-root vertices.
    pub fn new(n: usize) -> Self {
        Multigraph {
            n,
            weights: vec![0; (n + 1) * n / 2],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize, u64)]) -> Result<Self> {
        let mut g = Multigraph::new(n);
        for &(i, j, w) in edges {
            if i == j {
                return Err(Error::InvalidGraph(format!("loop at vertex {i}")));
            }
            if i > n || j > n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({i},{j}) out of range for n = {n}"
                )));
            }
            g.set_weight(i, j, g.weight(i, j) + w);
        }
        Ok(g)
    }

    /// Complete graph `K_{n+1}` with unit weights.
    pub fn complete(n: usize) -> Self {
        let mut g = Multigraph::new(n);
        for i in 0..=n {
            for j in (i + 1)..=n {
                g.set_weight(i, j, 1);
            }
        }
        g
    }

    /// `K^{a,b}_{n+1}`: weight `a` on root edges, `b` between non-root vertices.
    pub fn complete_split(n: usize, a: u64, b: u64) -> Self {
        let mut g = Multigraph::new(n);
        for j in 1..=n {
            g.set_weight(0, j, a);
        }
        for i in 1..=n {
            for j in (i + 1)..=n {
                g.set_weight(i, j, b);
            }
        }
        g
    }

    /// Complete bipartite `K^a_{m,m}` on `{0..2m-1}`, parts split by parity,
    /// every cross edge of weight `a`.
    pub fn bipartite_even_odd(m: usize, a: u64) -> Self {
        let n = 2 * m - 1;
        let mut g = Multigraph::new(n);
        for i in 0..=n {
            for j in (i + 1)..=n {
                if (j - i) % 2 == 1 {
                    g.set_weight(i, j, a);
                }
            }
        }
        g
    }

    fn idx(&self, i: usize, j: usize) -> usize {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        debug_assert!(i < j && j <= self.n);
        // pairs (i, j) with i < j <= n, laid out row by row
        i * (2 * self.n + 1 - i) / 2 + (j - i - 1)
    }

    /// Number of non-root vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_vertices(&self) -> usize {
        self.n + 1
    }

    pub fn weight(&self, i: usize, j: usize) -> u64 {
        if i == j {
            return 0;
        }
        self.weights[self.idx(i, j)]
    }

    pub fn set_weight(&mut self, i: usize, j: usize, w: u64) {
        assert!(i != j, "no loops");
        let k = self.idx(i, j);
        self.weights[k] = w;
    }

    /// Weighted degree `deg_G(i)`.
    pub fn degree(&self, i: usize) -> u64 {
        (0..=self.n).filter(|&j| j != i).map(|j| self.weight(i, j)).sum()
    }

    /// `deg^G_U(i)`: weight from `i` into the complement of `U`.
    pub fn degree_outside(&self, i: usize, in_u: &[bool]) -> u64 {
        (0..=self.n)
            .filter(|&j| j != i && !in_u[j])
            .map(|j| self.weight(i, j))
            .sum()
    }

    /// `#E(G)`: edges counted with multiplicity.
    pub fn edge_count(&self) -> u64 {
        self.weights.iter().sum()
    }

    /// Vertex pairs with positive weight, ascending.
    pub fn support_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..=self.n {
            for j in (i + 1)..=self.n {
                if self.weight(i, j) > 0 {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn support_neighbors(&self, i: usize) -> Vec<usize> {
        (0..=self.n)
            .filter(|&j| j != i && self.weight(i, j) > 0)
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n + 1];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for v in 0..=self.n {
                if v != u && !seen[v] && self.weight(u, v) > 0 {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n + 1
    }

    /// `{"n": n, "edges": [[i, j, w], ...]}` with `i < j`, zero weights omitted.
    pub fn to_json(&self) -> serde_json::Value {
        let edges: Vec<(usize, usize, u64)> = self
            .support_edges()
            .into_iter()
            .map(|(i, j)| (i, j, self.weight(i, j)))
            .collect();
        serde_json::to_value(GraphJson { n: self.n, edges }).expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let raw: GraphJson =
            serde_json::from_value(v.clone()).map_err(|e| Error::Json(e.to_string()))?;
        for &(i, j, w) in &raw.edges {
            if i >= j {
                return Err(Error::InvalidGraph(format!(
                    "edge [{i},{j}] must have i < j"
                )));
            }
            if w == 0 {
                return Err(Error::InvalidGraph("explicit zero-weight edge".into()));
            }
        }
        Multigraph::from_edges(raw.n, &raw.edges)
    }

    pub(crate) fn check_caps(&self, caps: &Caps) -> Result<()> {
        caps.check_n(self.n)?;
        if let Some(w) = self.weights.iter().max() {
            if *w > caps.max_weight {
                return Err(Error::CapExceeded {
                    what: "edge weight",
                    value: *w,
                    cap: caps.max_weight,
                });
            }
        }
        Ok(())
    }
}

/// Orientation of the support edges of a multigraph: exactly one of the arcs
/// `(i, j)`, `(j, i)` per support pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    arcs: Vec<(usize, usize)>,
}

impl Orientation {
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// Weighted indegree vector over all vertices `0..=n`.
    pub fn indegrees(&self, g: &Multigraph) -> Vec<u64> {
        let mut indeg = vec![0u64; g.num_vertices()];
        for &(i, j) in &self.arcs {
            indeg[j] += g.weight(i, j);
        }
        indeg
    }
}

/// All acyclic orientations of `g` with unique source 0, i.e. the set `A(G)`.
///
/// Root edges are forced to point away from 0 (any arc into 0 would give it
/// positive indegree), so the search branches only on non-root support edges.
pub fn acyclic_orientations_unique_source(
    g: &Multigraph,
    caps: &Caps,
) -> Result<Vec<Orientation>> {
    g.check_caps(caps)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let nv = g.num_vertices();
    let mut fixed: Vec<(usize, usize)> = Vec::new();
    let mut free: Vec<(usize, usize)> = Vec::new();
    for (i, j) in g.support_edges() {
        if i == 0 {
            fixed.push((0, j));
        } else {
            free.push((i, j));
        }
    }

    fn is_acyclic(nv: usize, arcs: &[(usize, usize)]) -> bool {
        let mut adj = vec![Vec::new(); nv];
        let mut indeg = vec![0usize; nv];
        for &(i, j) in arcs {
            adj[i].push(j);
            indeg[j] += 1;
        }
        let mut queue: Vec<usize> = (0..nv).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(u) = queue.pop() {
            seen += 1;
            for &v in &adj[u] {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    queue.push(v);
                }
            }
        }
        seen == nv
    }

    let mut out = Vec::new();
    let mut arcs = fixed.clone();
    let m = free.len();
    let mut choice = vec![false; m];
    loop {
        arcs.truncate(fixed.len());
        for (k, &(i, j)) in free.iter().enumerate() {
            arcs.push(if choice[k] { (j, i) } else { (i, j) });
        }
        let mut indeg_pos = vec![false; nv];
        for &(_, j) in &arcs {
            indeg_pos[j] = true;
        }
        if (1..nv).all(|v| indeg_pos[v]) && is_acyclic(nv, &arcs) {
            caps.check_set_size("orientation count", out.len() as u64 + 1)?;
            let mut sorted = arcs.clone();
            sorted.sort_unstable();
            out.push(Orientation { arcs: sorted });
        }
        // odometer over the free-edge directions
        let mut k = 0;
        while k < m && choice[k] {
            choice[k] = false;
            k += 1;
        }
        if k == m {
            break;
        }
        choice[k] = true;
    }
    out.sort_by(|a, b| a.arcs.cmp(&b.arcs));
    Ok(out)
}

/// All spanning trees of the support graph of `g`, as parent arrays, in
/// lexicographic order. Parallel copies enter enumerators only through
/// edge-labeling ranges, so each vertex pair appears at most once per tree.
pub fn spanning_trees(g: &Multigraph, caps: &Caps) -> Result<Vec<RootedTree>> {
    g.check_caps(caps)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let neighbors: Vec<Vec<usize>> = (0..=n).map(|v| g.support_neighbors(v)).collect();
    let mut parent = vec![0usize; n];
    let mut out = Vec::new();

    // Assign parents in vertex order; a partial assignment stays valid as
    // long as walking parents from the newest vertex never revisits it.
    fn rec(
        v: usize,
        n: usize,
        neighbors: &[Vec<usize>],
        parent: &mut Vec<usize>,
        out: &mut Vec<RootedTree>,
        caps: &Caps,
    ) -> Result<()> {
        if v > n {
            caps.check_set_size("spanning tree count", out.len() as u64 + 1)?;
            out.push(RootedTree::from_parents(parent.clone()).expect("acyclic by construction"));
            return Ok(());
        }
        for &p in &neighbors[v] {
            parent[v - 1] = p;
            let mut u = p;
            let ok = loop {
                if u == 0 {
                    break true;
                }
                if u == v {
                    break false;
                }
                if u > v {
                    // parent not yet assigned; the walk cannot close a cycle
                    break true;
                }
                u = parent[u - 1];
            };
            if ok {
                rec(v + 1, n, neighbors, parent, out, caps)?;
            }
        }
        Ok(())
    }

    rec(1, n, &neighbors, &mut parent, &mut out, caps)?;
    Ok(out)
}
