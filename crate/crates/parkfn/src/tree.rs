//! Rooted trees, plane trees, vertex orders, outdegree compositions, and the
//! bijections among them.
//!
//! A labeled tree on `{0..n}` rooted at 0 corresponds to a unique pair of a
//! preorder-labeled plane tree and an admissible vertex order: run a
//! depth-first search that always prefers the largest unvisited label, relabel
//! by visit position, and let the order compare visit positions by original
//! label. [`labeled_to_plane_pair`] and [`plane_pair_to_labeled`] implement
//! the two directions; inversions are preserved.

use serde::{Deserialize, Serialize};

use crate::graph::Multigraph;
use crate::{Caps, Error, Result};

/// Labeled tree on `{0..n}` rooted at 0, stored as `parent[i-1] = par(i)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RootedTree {
    parent: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct TreeJson {
    n: usize,
    parent: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct OrderJson {
    sequence: Vec<usize>,
}

impl RootedTree {
    pub fn from_parents(parent: Vec<usize>) -> Result<Self> {
        let n = parent.len();
        for (i, &p) in parent.iter().enumerate() {
            let v = i + 1;
            if p > n {
                return Err(Error::InvalidTree(format!(
                    "parent {p} of vertex {v} out of range"
                )));
            }
            if p == v {
                return Err(Error::InvalidTree(format!("vertex {v} is its own parent")));
            }
        }
        let tree = RootedTree { parent };
        for v in 1..=n {
            let mut u = v;
            let mut steps = 0;
            while u != 0 {
                u = tree.parent(u);
                steps += 1;
                if steps > n {
                    return Err(Error::InvalidTree(format!(
                        "cycle through vertex {v}: root unreachable"
                    )));
                }
            }
        }
        Ok(tree)
    }

    /// Path `0 - 1 - 2 - ... - n`.
    pub fn path(n: usize) -> Self {
        RootedTree {
            parent: (0..n).collect(),
        }
    }

    /// Star with all of `1..=n` children of the root.
    pub fn star(n: usize) -> Self {
        RootedTree {
            parent: vec![0; n],
        }
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    /// Parent of a non-root vertex.
    pub fn parent(&self, v: usize) -> usize {
        self.parent[v - 1]
    }

    pub fn parents(&self) -> &[usize] {
        &self.parent
    }

    /// Children of `v`, ascending.
    pub fn children(&self, v: usize) -> Vec<usize> {
        (1..=self.n()).filter(|&c| self.parent(c) == v).collect()
    }

    pub fn outdeg(&self, v: usize) -> usize {
        (1..=self.n()).filter(|&c| self.parent(c) == v).count()
    }

    /// `i <=_T j`: the path from `j` to the root passes through `i`.
    pub fn is_weak_ancestor(&self, i: usize, j: usize) -> bool {
        let mut u = j;
        loop {
            if u == i {
                return true;
            }
            if u == 0 {
                return false;
            }
            u = self.parent(u);
        }
    }

    /// Tree edges as `(parent, child)`, one per non-root vertex, ascending by
    /// child.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..=self.n()).map(|c| (self.parent(c), c))
    }

    /// `{"n": n, "parent": [p1, ..., pn]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(TreeJson {
            n: self.n(),
            parent: self.parent.clone(),
        })
        .expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let raw: TreeJson =
            serde_json::from_value(v.clone()).map_err(|e| Error::Json(e.to_string()))?;
        if raw.parent.len() != raw.n {
            return Err(Error::InvalidTree(format!(
                "parent array has {} entries, n = {}",
                raw.parent.len(),
                raw.n
            )));
        }
        RootedTree::from_parents(raw.parent)
    }
}

/// Preorder-labeled rooted plane tree: ancestors have smaller labels and the
/// descendants of each vertex form a contiguous interval.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RootedPlaneTree {
    tree: RootedTree,
}

impl RootedPlaneTree {
    pub fn new(tree: RootedTree) -> Result<Self> {
        let n = tree.n();
        for v in 1..=n {
            if tree.parent(v) >= v {
                return Err(Error::InvalidTree(format!(
                    "not preorder-labeled: parent of {v} is {}",
                    tree.parent(v)
                )));
            }
        }
        // descendants of v must be exactly {v+1, ..., v+size-1}
        let mut size = vec![1usize; n + 1];
        for v in (1..=n).rev() {
            let s = size[v];
            size[tree.parent(v)] += s;
        }
        for v in 1..=n {
            for d in (v + 1)..(v + size[v]) {
                if !tree.is_weak_ancestor(v, d) {
                    return Err(Error::InvalidTree(format!(
                        "descendants of {v} are not an interval"
                    )));
                }
            }
        }
        Ok(RootedPlaneTree { tree })
    }

    pub fn tree(&self) -> &RootedTree {
        &self.tree
    }

    pub fn into_tree(self) -> RootedTree {
        self.tree
    }
}

impl std::ops::Deref for RootedPlaneTree {
    type Target = RootedTree;
    fn deref(&self) -> &RootedTree {
        &self.tree
    }
}

/// Total order on the non-root vertices `{1..n}`, stored as the sequence from
/// smallest to largest.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct VertexOrder {
    seq: Vec<usize>,
    pos: Vec<usize>,
}

impl VertexOrder {
    pub fn new(seq: Vec<usize>) -> Result<Self> {
        let n = seq.len();
        let mut pos = vec![usize::MAX; n + 1];
        for (k, &v) in seq.iter().enumerate() {
            if v == 0 || v > n {
                return Err(Error::InvalidOrder(format!("vertex {v} out of range")));
            }
            if pos[v] != usize::MAX {
                return Err(Error::InvalidOrder(format!("vertex {v} repeated")));
            }
            pos[v] = k;
        }
        Ok(VertexOrder { seq, pos })
    }

    /// The natural order `1 < 2 < ... < n`.
    pub fn natural(n: usize) -> Self {
        VertexOrder::new((1..=n).collect()).expect("valid permutation")
    }

    pub fn n(&self) -> usize {
        self.seq.len()
    }

    pub fn sequence(&self) -> &[usize] {
        &self.seq
    }

    /// Position of `v`, 0-based from the smallest element.
    pub fn position(&self, v: usize) -> usize {
        self.pos[v]
    }

    /// `i` precedes `j`.
    pub fn precedes(&self, i: usize, j: usize) -> bool {
        self.pos[i] < self.pos[j]
    }

    /// Vertices from largest to smallest.
    pub fn iter_desc(&self) -> impl Iterator<Item = usize> + '_ {
        self.seq.iter().rev().copied()
    }

    /// Admissible for `t`: siblings `i < j` satisfy `j` before `i`.
    pub fn is_admissible_for(&self, t: &RootedTree) -> bool {
        if self.n() != t.n() {
            return false;
        }
        for i in 1..=t.n() {
            for j in (i + 1)..=t.n() {
                if t.parent(i) == t.parent(j) && !self.precedes(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// `{"sequence": [v1, ..., vn]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(OrderJson {
            sequence: self.seq.clone(),
        })
        .expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let raw: OrderJson =
            serde_json::from_value(v.clone()).map_err(|e| Error::Json(e.to_string()))?;
        VertexOrder::new(raw.sequence)
    }
}

/// Outdegree composition `(outdeg(0), ..., outdeg(n-1))` of a plane tree:
/// entries sum to `n` and every prefix sum is at least its index.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Composition {
    gamma: Vec<usize>,
}

impl Composition {
    pub fn new(gamma: Vec<usize>) -> Result<Self> {
        let n = gamma.len();
        let mut prefix = 0usize;
        for (j, &g) in gamma.iter().enumerate() {
            prefix += g;
            if prefix < j + 1 {
                return Err(Error::InvalidComposition(format!(
                    "prefix sum {prefix} below {} at position {}",
                    j + 1,
                    j + 1
                )));
            }
        }
        if prefix != n {
            return Err(Error::InvalidComposition(format!(
                "entries sum to {prefix}, expected {n}"
            )));
        }
        Ok(Composition { gamma })
    }

    pub fn gamma(&self) -> &[usize] {
        &self.gamma
    }

    pub fn n(&self) -> usize {
        self.gamma.len()
    }

    /// All of `Γ(n)` in lexicographic order.
    pub fn enumerate(n: usize) -> Vec<Composition> {
        let mut out = Vec::new();
        let mut gamma = vec![0usize; n];
        fn rec(j: usize, n: usize, prefix: usize, gamma: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if j == n {
                if prefix == n {
                    out.push(Composition {
                        gamma: gamma.clone(),
                    });
                }
                return;
            }
            let lo = (j + 1).saturating_sub(prefix);
            for g in lo..=(n - prefix) {
                gamma[j] = g;
                rec(j + 1, n, prefix + g, gamma, out);
            }
            gamma[j] = 0;
        }
        rec(0, n, 0, &mut gamma, &mut out);
        out
    }
}

/// All rooted plane trees on `n+1` vertices, lexicographic by parent array.
/// Generation runs through `Γ(n)` and [`gamma_to_rpt`], so the outdegree
/// bijection is exercised on every call.
pub fn enumerate_rpt(n: usize, caps: &Caps) -> Result<Vec<RootedPlaneTree>> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    caps.check_n(n)?;
    let mut trees: Vec<RootedPlaneTree> = Composition::enumerate(n)
        .iter()
        .map(gamma_to_rpt)
        .collect::<Result<_>>()?;
    trees.sort();
    Ok(trees)
}

/// All admissible vertex orders of a plane tree, lexicographic by sequence.
pub fn enumerate_avo(t: &RootedPlaneTree) -> Vec<VertexOrder> {
    let n = t.n();
    // next_larger[v]: the smallest sibling of v that is larger than v; it must
    // already be placed before v may appear.
    let mut next_larger = vec![0usize; n + 1];
    for v in 1..=n {
        next_larger[v] = (v + 1..=n)
            .find(|&u| t.parent(u) == t.parent(v))
            .unwrap_or(0);
    }
    let mut seq = Vec::with_capacity(n);
    let mut placed = vec![false; n + 1];
    let mut out = Vec::new();
    fn rec(
        n: usize,
        next_larger: &[usize],
        seq: &mut Vec<usize>,
        placed: &mut Vec<bool>,
        out: &mut Vec<VertexOrder>,
    ) {
        if seq.len() == n {
            out.push(VertexOrder::new(seq.clone()).expect("valid permutation"));
            return;
        }
        for v in 1..=n {
            if !placed[v] && (next_larger[v] == 0 || placed[next_larger[v]]) {
                placed[v] = true;
                seq.push(v);
                rec(n, next_larger, seq, placed, out);
                seq.pop();
                placed[v] = false;
            }
        }
    }
    rec(n, &next_larger, &mut seq, &mut placed, &mut out);
    out
}

/// Depth-first search of a labeled tree preferring the greatest label,
/// returning the preorder-relabeled plane tree and the induced admissible
/// order. Inversions of the input equal order-inversions of the output.
pub fn labeled_to_plane_pair(t: &RootedTree) -> (RootedPlaneTree, VertexOrder) {
    let n = t.n();
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for c in 1..=n {
        children[t.parent(c)].push(c);
    }
    for ch in children.iter_mut() {
        ch.sort_unstable_by(|a, b| b.cmp(a)); // greatest label first
    }
    // visit[k] = original label of the k-th visited vertex (visit[0] = 0)
    let mut visit = Vec::with_capacity(n + 1);
    let mut stack = vec![0usize];
    let mut cursor = vec![0usize; n + 1];
    visit.push(0);
    while let Some(&u) = stack.last() {
        if cursor[u] < children[u].len() {
            let c = children[u][cursor[u]];
            cursor[u] += 1;
            visit.push(c);
            stack.push(c);
        } else {
            stack.pop();
        }
    }
    let mut position = vec![0usize; n + 1]; // original label -> visit index
    for (k, &v) in visit.iter().enumerate() {
        position[v] = k;
    }
    let plane_parent: Vec<usize> = (1..=n).map(|k| position[t.parent(visit[k])]).collect();
    let plane = RootedPlaneTree::new(
        RootedTree::from_parents(plane_parent).expect("DFS produces a tree"),
    )
    .expect("DFS visit order is a preorder");
    // visit indices sorted by original label: index of label 1 first
    let seq: Vec<usize> = (1..=n).map(|label| position[label]).collect();
    let order = VertexOrder::new(seq).expect("valid permutation");
    (plane, order)
}

/// Inverse of [`labeled_to_plane_pair`]: relabel vertex `v` by its rank in
/// the order. Errors if the order is not admissible for the tree.
pub fn plane_pair_to_labeled(t: &RootedPlaneTree, o: &VertexOrder) -> Result<RootedTree> {
    if o.n() != t.n() {
        return Err(Error::LengthMismatch {
            got: o.n(),
            expected: t.n(),
        });
    }
    if !o.is_admissible_for(t) {
        return Err(Error::NotAdmissible);
    }
    let n = t.n();
    let label = |v: usize| if v == 0 { 0 } else { o.position(v) + 1 };
    let mut parent = vec![0usize; n];
    for c in 1..=n {
        parent[label(c) - 1] = label(t.parent(c));
    }
    RootedTree::from_parents(parent)
}

/// Inversions of a labeled tree: pairs `(i, j)` with `i < j` and `j` a proper
/// ancestor of `i`. Ascending.
pub fn inversions(t: &RootedTree) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 1..=t.n() {
        let mut u = t.parent(i);
        while u != 0 {
            if u > i {
                out.push((i, u));
            }
            u = t.parent(u);
        }
    }
    out.sort_unstable();
    out
}

/// Order-inversions of `(t, o)`: pairs `(i, j)` with `i` a proper ancestor of
/// `j` and `j` before `i` in the order.
pub fn order_inversions(t: &RootedTree, o: &VertexOrder) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for j in 1..=t.n() {
        let mut i = t.parent(j);
        while i != 0 {
            if o.precedes(j, i) {
                out.push((i, j));
            }
            i = t.parent(i);
        }
    }
    out.sort_unstable();
    out
}

/// The kappa statistic: over order-inversions `(i, j)` of the spanning
/// tree, sum the multigraph weight between `par(i)` and `j`. A weighted
/// generalization of the tree inversion number.
pub fn kappa(g: &Multigraph, t: &RootedTree, o: &VertexOrder) -> Result<u64> {
    if t.n() != g.n() || o.n() != g.n() {
        return Err(Error::LengthMismatch {
            got: t.n().max(o.n()),
            expected: g.n(),
        });
    }
    for (p, c) in t.edges() {
        if g.weight(p, c) == 0 {
            return Err(Error::NotSpanning);
        }
    }
    Ok(order_inversions(t, o)
        .into_iter()
        .map(|(i, j)| g.weight(t.parent(i), j))
        .sum())
}

/// Outdegree sequence `(outdeg(0), ..., outdeg(n-1))` of a plane tree.
pub fn rpt_to_gamma(t: &RootedPlaneTree) -> Composition {
    let n = t.n();
    let gamma: Vec<usize> = (0..n).map(|v| t.outdeg(v)).collect();
    Composition::new(gamma).expect("plane tree outdegrees form a valid composition")
}

/// Rebuild the plane tree from its outdegree sequence: the descendants of `i`
/// are the maximal interval `{i+1, ..., i+m}` on which the shifted prefix
/// sums stay at least their length.
pub fn gamma_to_rpt(c: &Composition) -> Result<RootedPlaneTree> {
    let n = c.n();
    let gamma = c.gamma();
    let mut desc_end = vec![0usize; n + 1]; // i+m for each vertex i
    for i in 0..=n {
        let mut prefix = 0usize;
        let mut m = 0usize;
        for k in 1..=(n - i) {
            // gamma index i+k corresponds to outdeg(i+k-1); gamma_{i+j} in
            // 1-based paper terms is gamma[i + j - 1]
            prefix += if i + k - 1 < n { gamma[i + k - 1] } else { 0 };
            if prefix >= k {
                m = k;
            } else {
                break;
            }
        }
        desc_end[i] = i + m;
    }
    // parent of j: the largest i < j whose descendant interval contains j
    let mut parent = vec![0usize; n];
    for j in 1..=n {
        let mut p = 0;
        for i in 0..j {
            if desc_end[i] >= j {
                p = i;
            }
        }
        parent[j - 1] = p;
    }
    let tree = RootedTree::from_parents(parent)?;
    RootedPlaneTree::new(tree)
}

/// All labeled trees on `{0..n}` rooted at 0, generated through the plane
/// pair correspondence, sorted by parent array.
pub fn enumerate_labeled_trees(n: usize, caps: &Caps) -> Result<Vec<RootedTree>> {
    let mut out = Vec::new();
    for plane in enumerate_rpt(n, caps)? {
        for order in enumerate_avo(&plane) {
            out.push(plane_pair_to_labeled(&plane, &order)?);
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plane(parents: &[usize]) -> RootedPlaneTree {
        RootedPlaneTree::new(RootedTree::from_parents(parents.to_vec()).unwrap()).unwrap()
    }

    fn order(seq: &[usize]) -> VertexOrder {
        VertexOrder::new(seq.to_vec()).unwrap()
    }

    #[test]
    fn tree_validation() {
        assert!(RootedTree::from_parents(vec![0, 1]).is_ok());
        // 1 -> 2 -> 1 cycle
        assert!(RootedTree::from_parents(vec![2, 1]).is_err());
        assert!(RootedTree::from_parents(vec![0, 3]).is_err());
    }

    #[test]
    fn plane_tree_validation() {
        assert!(RootedPlaneTree::new(RootedTree::from_parents(vec![0, 1, 1]).unwrap()).is_ok());
        // parent larger than child violates the preorder labeling
        assert!(RootedPlaneTree::new(RootedTree::from_parents(vec![0, 0, 1]).unwrap()).is_err());
        // descendants of 1 are {2, 4}: not an interval
        assert!(
            RootedPlaneTree::new(RootedTree::from_parents(vec![0, 1, 0, 1]).unwrap()).is_err()
        );
    }

    #[test]
    fn catalan_counts() {
        // independent Catalan oracle by the convolution recurrence
        let mut catalan = [1u64; 7];
        for n in 1..7 {
            catalan[n] = (0..n).map(|i| catalan[i] * catalan[n - 1 - i]).sum();
        }
        let caps = Caps::default();
        for n in 1..=6 {
            let trees = enumerate_rpt(n, &caps).unwrap();
            assert_eq!(trees.len() as u64, catalan[n], "C_{n}");
            assert_eq!(Composition::enumerate(n).len() as u64, catalan[n]);
        }
        assert_eq!(enumerate_rpt(2, &caps).unwrap().len(), 2);
        assert_eq!(enumerate_rpt(5, &caps).unwrap().len(), 42);
        assert!(matches!(
            enumerate_rpt(caps.max_n + 1, &caps),
            Err(crate::Error::CapExceeded { .. })
        ));
        assert!(enumerate_rpt(0, &caps).is_err());
    }

    #[test]
    fn avo_counts() {
        // path: both orders; star: forced descending
        let path = plane(&[0, 1]);
        let avos = enumerate_avo(&path);
        assert_eq!(avos.len(), 2);
        let star = plane(&[0, 0]);
        let avos = enumerate_avo(&star);
        assert_eq!(avos.len(), 1);
        assert_eq!(avos[0].sequence(), &[2, 1]);
        let star3 = plane(&[0, 0, 0]);
        let avos = enumerate_avo(&star3);
        assert_eq!(avos.len(), 1);
        assert_eq!(avos[0].sequence(), &[3, 2, 1]);
    }

    #[test]
    fn avo_count_formula() {
        // #AVO(T) * prod outdeg! = n!
        let caps = Caps::default();
        for n in 1..=6 {
            let factorial: usize = (1..=n).product();
            for t in enumerate_rpt(n, &caps).unwrap() {
                let prod: usize = (0..=n)
                    .map(|v| (1..=t.outdeg(v)).product::<usize>())
                    .product();
                assert_eq!(enumerate_avo(&t).len() * prod, factorial);
            }
        }
    }

    #[test]
    fn figure1_correspondence() {
        // 9-vertex labeled tree: edges 0-7, 0-2, 7-4, 2-8, 2-5, 4-3, 4-1, 5-6
        let parent = vec![4, 0, 4, 7, 2, 5, 0, 2]; // par(1)=4, par(2)=0, ...
        let t = RootedTree::from_parents(parent).unwrap();
        let (p, o) = labeled_to_plane_pair(&t);
        assert_eq!(p.parents(), &[0, 1, 2, 2, 0, 5, 5, 7]);
        assert_eq!(o.sequence(), &[4, 5, 3, 2, 7, 8, 1, 6]);
        assert_eq!(plane_pair_to_labeled(&p, &o).unwrap(), t);
        assert_eq!(inversions(&t).len(), order_inversions(&p, &o).len());
    }

    #[test]
    fn increasing_path_maps_to_itself() {
        let t = RootedTree::path(5);
        let (p, o) = labeled_to_plane_pair(&t);
        assert_eq!(p.parents(), t.parents());
        assert_eq!(o.sequence(), &[1, 2, 3, 4, 5]);
        assert!(inversions(&t).is_empty());
    }

    #[test]
    fn pair_roundtrip_and_count() {
        // all (T, order) pairs for n = 3 give 16 = 4^2 distinct labeled trees
        let caps = Caps::default();
        let labeled = enumerate_labeled_trees(3, &caps).unwrap();
        assert_eq!(labeled.len(), 16);
        let dedup: std::collections::BTreeSet<_> = labeled.iter().collect();
        assert_eq!(dedup.len(), 16);
        for t in &labeled {
            let (p, o) = labeled_to_plane_pair(t);
            assert!(o.is_admissible_for(&p));
            assert_eq!(&plane_pair_to_labeled(&p, &o).unwrap(), t);
        }
    }

    #[test]
    fn inversion_examples() {
        assert!(inversions(&RootedTree::path(2)).is_empty());
        // parent of 1 is 2: single inversion (1, 2)
        let t = RootedTree::from_parents(vec![2, 0]).unwrap();
        assert_eq!(inversions(&t), vec![(1, 2)]);
        assert!(inversions(&RootedTree::star(4)).is_empty());
    }

    #[test]
    fn non_admissible_rejected() {
        let star = plane(&[0, 0]);
        assert!(plane_pair_to_labeled(&star, &order(&[1, 2])).is_err());
        assert!(plane_pair_to_labeled(&star, &order(&[2, 1])).is_ok());
    }

    #[test]
    fn gamma_bijection() {
        let caps = Caps::default();
        assert_eq!(
            gamma_to_rpt(&Composition::new(vec![1, 1]).unwrap())
                .unwrap()
                .parents(),
            &[0, 1]
        );
        assert_eq!(
            gamma_to_rpt(&Composition::new(vec![2, 0]).unwrap())
                .unwrap()
                .parents(),
            &[0, 0]
        );
        assert_eq!(
            rpt_to_gamma(&plane(&[0, 0, 2, 2])).gamma(),
            &[2, 0, 2, 0]
        );
        for n in 1..=6 {
            let mut seen = std::collections::BTreeSet::new();
            for c in Composition::enumerate(n) {
                let t = gamma_to_rpt(&c).unwrap();
                assert_eq!(rpt_to_gamma(&t), c);
                seen.insert(t);
            }
            for t in enumerate_rpt(n, &caps).unwrap() {
                assert!(seen.contains(&t));
                assert_eq!(gamma_to_rpt(&rpt_to_gamma(&t)).unwrap(), t);
            }
        }
        assert!(Composition::new(vec![0, 2]).is_err());
        assert!(Composition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn kappa_examples() {
        // Fig. 2 multigraph with its output tree and the natural order
        let g = Multigraph::from_edges(
            4,
            &[(0, 1, 2), (1, 2, 2), (2, 3, 2), (2, 4, 1), (3, 4, 1), (0, 4, 3)],
        )
        .unwrap();
        let t = RootedTree::from_parents(vec![2, 4, 4, 0]).unwrap();
        assert_eq!(kappa(&g, &t, &VertexOrder::natural(4)).unwrap(), 2);

        // increasing path with the natural order has no order-inversions
        let path_graph = Multigraph::from_edges(3, &[(0, 1, 1), (1, 2, 1), (2, 3, 1)]).unwrap();
        let path = RootedTree::path(3);
        assert_eq!(kappa(&path_graph, &path, &VertexOrder::natural(3)).unwrap(), 0);

        // non-spanning tree rejected
        let bad = RootedTree::from_parents(vec![0, 0, 0]).unwrap();
        assert!(kappa(&path_graph, &bad, &VertexOrder::natural(3)).is_err());
    }
}
