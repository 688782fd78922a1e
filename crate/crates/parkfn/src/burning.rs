//! The four DFS-burning algorithms.
//!
//! The multigraph pair: starting from a burning root, the search head scans
//! non-burning vertices from largest to smallest under a fixed order. Each
//! scanned parallel edge either burns (removing a chip from its far end) or,
//! if the far end is out of chips, ignites it — the edge joins the output
//! tree, labeled with the count of parallel copies left unburnt, and the head
//! advances. When a scan makes no progress the head retreats to its tree
//! parent; after every ignition or retreat the scan restarts from the
//! order-maximum. The inverse algorithm replays the same search, adding a
//! chip per burnt edge and igniting exactly when the scanned copy is the tree
//! edge with the recorded number of copies remaining behind it.
//!
//! The vector pair runs the same search on a multigraph grown on the fly:
//! when the k-th vertex ignites it is connected to every still-unburnt
//! vertex by `x_{k+1}` parallel edges. The finished graph is a relabeling of
//! [`build_gx`], the output tree is preorder-relabeled by ignition rank, and
//! the ignition ranks ordered by original vertex label form the admissible
//! vertex order accompanying the tree.

use serde::{Deserialize, Serialize};

use crate::graph::Multigraph;
use crate::tree::{RootedPlaneTree, RootedTree, VertexOrder};
use crate::{Error, Result};

/// Labels on the edges of a spanning tree, indexed by child vertex:
/// `label(c)` belongs to the edge `{par(c), c}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeLabeling {
    labels: Vec<u64>,
}

impl EdgeLabeling {
    pub fn new(labels: Vec<u64>) -> Self {
        EdgeLabeling { labels }
    }

    pub fn label(&self, child: usize) -> u64 {
        self.labels[child - 1]
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.labels.iter().sum()
    }

    /// `[[parent, child, label], ...]` ascending by child.
    pub fn to_json(&self, tree: &RootedTree) -> serde_json::Value {
        let triples: Vec<serde_json::Value> = (1..=self.labels.len())
            .map(|c| serde_json::json!([tree.parent(c), c, self.labels[c - 1]]))
            .collect();
        serde_json::Value::Array(triples)
    }

    pub fn from_json(v: &serde_json::Value, tree: &RootedTree) -> Result<Self> {
        let triples = v
            .as_array()
            .ok_or_else(|| Error::Json("labeling must be [[parent, child, label], ...]".into()))?;
        if triples.len() != tree.n() {
            return Err(Error::LengthMismatch {
                got: triples.len(),
                expected: tree.n(),
            });
        }
        let mut labels = vec![None; tree.n()];
        for t in triples {
            let t = t
                .as_array()
                .filter(|a| a.len() == 3)
                .ok_or_else(|| Error::Json("each labeling entry must be a triple".into()))?;
            let (p, c, l) = (
                t[0].as_u64().ok_or_else(|| Error::Json("bad parent".into()))? as usize,
                t[1].as_u64().ok_or_else(|| Error::Json("bad child".into()))? as usize,
                t[2].as_u64().ok_or_else(|| Error::Json("bad label".into()))?,
            );
            if c == 0 || c > tree.n() || tree.parent(c) != p {
                return Err(Error::Json(format!("[{p},{c}] is not a tree edge")));
            }
            labels[c - 1] = Some(l);
        }
        let labels = labels
            .into_iter()
            .collect::<Option<Vec<u64>>>()
            .ok_or_else(|| Error::Json("labeling misses a tree edge".into()))?;
        Ok(EdgeLabeling::new(labels))
    }
}

/// Result of running the multigraph burn.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BurnOutcome {
    Spanning {
        tree: RootedTree,
        labels: EdgeLabeling,
    },
    /// The vertices that never ignited; for every `j` in the set,
    /// `alpha[j] >= deg_U(j)`, certifying non-membership.
    Stuck { unburnt: Vec<usize> },
}

/// Output triple of the vector burn.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorBurnResult {
    pub tree: RootedPlaneTree,
    pub labels: EdgeLabeling,
    pub order: VertexOrder,
}

impl VectorBurnResult {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "tree": self.tree.to_json(),
            "labels": self.labels.to_json(self.tree.tree()),
            "order": self.order.to_json(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let tree_v = v.get("tree").ok_or_else(|| Error::Json("missing tree".into()))?;
        let tree = RootedPlaneTree::new(RootedTree::from_json(tree_v)?)?;
        let labels_v = v.get("labels").ok_or_else(|| Error::Json("missing labels".into()))?;
        let labels = EdgeLabeling::from_json(labels_v, tree.tree())?;
        let order_v = v.get("order").ok_or_else(|| Error::Json("missing order".into()))?;
        let order = VertexOrder::from_json(order_v)?;
        Ok(VectorBurnResult { tree, labels, order })
    }
}

/// Result of the vector burn, mirroring [`BurnOutcome`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VecBurnOutcome {
    Complete(VectorBurnResult),
    Stuck { unburnt: Vec<usize> },
}

/// One step of a burn run, for trace output and golden comparisons.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "event", rename_all = "snake_case")]
pub enum TraceEvent {
    Ignite { vertex: usize, step: usize },
    BurnEdge { edge: (usize, usize), step: usize },
    Retreat { vertex: usize, step: usize },
}

impl TraceEvent {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

/// The complete multigraph associated to a vector: `w({i,j}) = x_{min(i,j)+1}`.
pub fn build_gx(x: &[u64]) -> Multigraph {
    let n = x.len();
    let mut g = Multigraph::new(n);
    for i in 0..n {
        for j in (i + 1)..=n {
            g.set_weight(i, j, x[i]);
        }
    }
    g
}

struct MgBurn<'a> {
    g: &'a Multigraph,
    chips: Vec<u64>,
    burnt: Vec<u64>,
    burning: Vec<bool>,
    parent: Vec<usize>,
    labels: Vec<u64>,
    head: usize,
    step: usize,
    trace: Option<&'a mut Vec<TraceEvent>>,
}

impl<'a> MgBurn<'a> {
    fn emit(&mut self, mk: impl FnOnce(usize) -> TraceEvent) {
        if let Some(tr) = self.trace.as_deref_mut() {
            let step = self.step;
            tr.push(mk(step));
        }
        self.step += 1;
    }
}

/// Multigraph DFS-burning algorithm. Scans non-burning vertices from largest
/// to smallest under `order`, burning a chip per scanned parallel copy and
/// igniting chipless vertices into the tree.
pub fn mg_dfs_burn(g: &Multigraph, order: &VertexOrder, alpha: &[u64]) -> Result<BurnOutcome> {
    mg_dfs_burn_impl(g, order, alpha, None)
}

/// Same burn with an event trace.
pub fn mg_dfs_burn_traced(
    g: &Multigraph,
    order: &VertexOrder,
    alpha: &[u64],
) -> Result<(BurnOutcome, Vec<TraceEvent>)> {
    let mut events = Vec::new();
    let outcome = mg_dfs_burn_impl(g, order, alpha, Some(&mut events))?;
    Ok((outcome, events))
}

fn mg_dfs_burn_impl(
    g: &Multigraph,
    order: &VertexOrder,
    alpha: &[u64],
    trace: Option<&mut Vec<TraceEvent>>,
) -> Result<BurnOutcome> {
    let n = g.n();
    if alpha.len() != n {
        return Err(Error::LengthMismatch {
            got: alpha.len(),
            expected: n,
        });
    }
    if order.n() != n {
        return Err(Error::LengthMismatch {
            got: order.n(),
            expected: n,
        });
    }
    let mut st = MgBurn {
        g,
        chips: alpha.to_vec(),
        burnt: vec![0; (n + 1) * n / 2],
        burning: vec![false; n + 1],
        parent: vec![usize::MAX; n + 1],
        labels: vec![0; n],
        head: 0,
        step: 0,
        trace,
    };
    st.burning[0] = true;
    st.emit(|step| TraceEvent::Ignite { vertex: 0, step });

    let pair_idx = |i: usize, j: usize| -> usize {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        i * (2 * n + 1 - i) / 2 + (j - i - 1)
    };

    'scan: loop {
        for j in order.iter_desc() {
            if st.burning[j] {
                continue;
            }
            let head = st.head;
            let idx = pair_idx(head, j);
            let mut remaining = st.g.weight(head, j) - st.burnt[idx];
            while remaining > 0 {
                if st.chips[j - 1] >= 1 {
                    st.chips[j - 1] -= 1;
                    st.burnt[idx] += 1;
                    remaining -= 1;
                    st.emit(|step| TraceEvent::BurnEdge {
                        edge: (head, j),
                        step,
                    });
                } else {
                    st.burning[j] = true;
                    st.parent[j] = head;
                    st.labels[j - 1] = remaining - 1;
                    st.head = j;
                    st.emit(|step| TraceEvent::Ignite { vertex: j, step });
                    continue 'scan;
                }
            }
        }
        if st.head != 0 {
            st.head = st.parent[st.head];
            let head = st.head;
            st.emit(|step| TraceEvent::Retreat { vertex: head, step });
        } else {
            break;
        }
    }

    let unburnt: Vec<usize> = (1..=n).filter(|&v| !st.burning[v]).collect();
    if unburnt.is_empty() {
        let parent: Vec<usize> = (1..=n).map(|v| st.parent[v]).collect();
        Ok(BurnOutcome::Spanning {
            tree: RootedTree::from_parents(parent).expect("burn builds a tree"),
            labels: EdgeLabeling::new(st.labels),
        })
    } else {
        Ok(BurnOutcome::Stuck { unburnt })
    }
}

/// Multigraph DFS-burning inverse algorithm: replays the search for a given
/// edge-labeled spanning tree and returns the parking function that produces
/// it. A scanned copy ignites its far end exactly when it lies on the tree
/// and the copies still unburnt behind it match the edge label; every other
/// scanned copy burns and adds a chip.
pub fn mg_dfs_unburn(
    g: &Multigraph,
    order: &VertexOrder,
    tree: &RootedTree,
    labels: &EdgeLabeling,
) -> Result<Vec<u64>> {
    let n = g.n();
    if tree.n() != n || order.n() != n {
        return Err(Error::LengthMismatch {
            got: tree.n().max(order.n()),
            expected: n,
        });
    }
    if labels.len() != n {
        return Err(Error::LengthMismatch {
            got: labels.len(),
            expected: n,
        });
    }
    for (p, c) in tree.edges() {
        let w = g.weight(p, c);
        if w == 0 {
            return Err(Error::NotSpanning);
        }
        if labels.label(c) >= w {
            return Err(Error::LabelOutOfRange {
                label: labels.label(c),
                weight: w,
            });
        }
    }

    let pair_idx = |i: usize, j: usize| -> usize {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        i * (2 * n + 1 - i) / 2 + (j - i - 1)
    };

    let mut chips = vec![0u64; n];
    let mut burnt = vec![0u64; (n + 1) * n / 2];
    let mut burning = vec![false; n + 1];
    burning[0] = true;
    let mut head = 0usize;

    'scan: loop {
        for j in order.iter_desc() {
            if burning[j] {
                continue;
            }
            let idx = pair_idx(head, j);
            let mut remaining = g.weight(head, j) - burnt[idx];
            while remaining > 0 {
                let tree_edge = tree.parent(j) == head || (head != 0 && tree.parent(head) == j);
                let label = if tree.parent(j) == head {
                    labels.label(j)
                } else if head != 0 && tree.parent(head) == j {
                    labels.label(head)
                } else {
                    0
                };
                if tree_edge && label == remaining - 1 {
                    burning[j] = true;
                    head = j;
                    continue 'scan;
                } else {
                    burnt[idx] += 1;
                    remaining -= 1;
                    chips[j - 1] += 1;
                }
            }
        }
        if head != 0 {
            head = tree.parent(head);
        } else {
            break;
        }
    }

    if (1..=n).any(|v| !burning[v]) {
        // cannot happen for a spanning tree with in-range labels
        return Err(Error::NotSpanning);
    }
    Ok(chips)
}

/// Vector DFS-burning algorithm. Fails (returning the unburnt set) exactly
/// when `alpha` is not an x-parking function.
pub fn vec_dfs_burn(x: &[u64], alpha: &[u64]) -> Result<VecBurnOutcome> {
    vec_dfs_burn_impl(x, alpha, None)
}

/// Same burn with an event trace in the original (pre-relabeling) vertex
/// names.
pub fn vec_dfs_burn_traced(
    x: &[u64],
    alpha: &[u64],
) -> Result<(VecBurnOutcome, Vec<TraceEvent>)> {
    let mut events = Vec::new();
    let outcome = vec_dfs_burn_impl(x, alpha, Some(&mut events))?;
    Ok((outcome, events))
}

fn vec_dfs_burn_impl(
    x: &[u64],
    alpha: &[u64],
    mut trace: Option<&mut Vec<TraceEvent>>,
) -> Result<VecBurnOutcome> {
    let n = x.len();
    if alpha.len() != n {
        return Err(Error::LengthMismatch {
            got: alpha.len(),
            expected: n,
        });
    }

    let pair_idx = |i: usize, j: usize| -> usize {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        i * (2 * n + 1 - i) / 2 + (j - i - 1)
    };

    let mut weight = vec![0u64; (n + 1) * n / 2];
    let mut burnt = vec![0u64; (n + 1) * n / 2];
    let mut chips = alpha.to_vec();
    let mut burning = vec![false; n + 1];
    let mut parent = vec![usize::MAX; n + 1];
    let mut label = vec![0u64; n + 1];
    let mut ignited_at = vec![0usize; n + 1]; // vertex -> ignition rank
    let mut rank_vertex = vec![0usize; n + 1]; // ignition rank -> vertex
    let mut counter = 0usize;
    let mut head = 0usize;
    let mut step = 0usize;

    let mut emit = |ev: TraceEvent| {
        if let Some(tr) = trace.as_deref_mut() {
            tr.push(ev);
        }
    };

    burning[0] = true;
    emit(TraceEvent::Ignite { vertex: 0, step });
    step += 1;
    for k in 1..=n {
        weight[pair_idx(0, k)] = x[0];
    }

    'scan: loop {
        // highest original label first
        for j in (1..=n).rev() {
            if burning[j] {
                continue;
            }
            let idx = pair_idx(head, j);
            let mut remaining = weight[idx] - burnt[idx];
            while remaining > 0 {
                if chips[j - 1] >= 1 {
                    chips[j - 1] -= 1;
                    burnt[idx] += 1;
                    remaining -= 1;
                    emit(TraceEvent::BurnEdge {
                        edge: (head, j),
                        step,
                    });
                    step += 1;
                } else {
                    burning[j] = true;
                    counter += 1;
                    ignited_at[j] = counter;
                    rank_vertex[counter] = j;
                    if counter < n {
                        let grow = x[counter];
                        for k in 1..=n {
                            if !burning[k] {
                                weight[pair_idx(j, k)] += grow;
                            }
                        }
                    }
                    parent[j] = head;
                    label[j] = remaining - 1;
                    head = j;
                    emit(TraceEvent::Ignite { vertex: j, step });
                    step += 1;
                    continue 'scan;
                }
            }
        }
        if head != 0 {
            head = parent[head];
            emit(TraceEvent::Retreat { vertex: head, step });
            step += 1;
        } else {
            break;
        }
    }

    let unburnt: Vec<usize> = (1..=n).filter(|&v| !burning[v]).collect();
    if !unburnt.is_empty() {
        return Ok(VecBurnOutcome::Stuck { unburnt });
    }

    // relabel by ignition rank: the output tree is preorder-labeled
    let plane_parent: Vec<usize> = (1..=n)
        .map(|rank| ignited_at[parent[rank_vertex[rank]]])
        .collect();
    let plane_labels: Vec<u64> = (1..=n).map(|rank| label[rank_vertex[rank]]).collect();
    let tree = RootedPlaneTree::new(
        RootedTree::from_parents(plane_parent).expect("ignition order forms a tree"),
    )
    .expect("ignition order is a preorder");
    // ranks listed by ascending original vertex label
    let seq: Vec<usize> = (1..=n).map(|v| ignited_at[v]).collect();
    let order = VertexOrder::new(seq).expect("ranks are a permutation");
    debug_assert!(order.is_admissible_for(&tree));
    Ok(VecBurnOutcome::Complete(VectorBurnResult {
        tree,
        labels: EdgeLabeling::new(plane_labels),
        order,
    }))
}

/// Vector DFS-burning inverse algorithm: run the multigraph inverse on the
/// vector's multigraph, then permute the result by the order's sequence.
pub fn vec_dfs_unburn(x: &[u64], result: &VectorBurnResult) -> Result<Vec<u64>> {
    let n = x.len();
    if result.tree.n() != n || result.order.n() != n {
        return Err(Error::LengthMismatch {
            got: result.tree.n().max(result.order.n()),
            expected: n,
        });
    }
    if !result.order.is_admissible_for(result.tree.tree()) {
        return Err(Error::NotAdmissible);
    }
    let g = build_gx(x);
    let beta = mg_dfs_unburn(&g, &result.order, result.tree.tree(), &result.labels)?;
    let seq = result.order.sequence();
    Ok((0..n).map(|k| beta[seq[k] - 1]).collect())
}
