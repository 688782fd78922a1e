//! Classification of multigraphs whose parking functions form a
//! permutation-invariant set.
//!
//! Invariance forces one of three shapes: a uniformly weighted spanning tree,
//! a uniformly weighted cycle through all vertices, or the split-complete
//! graph with one weight on root edges and another elsewhere. Each shape has
//! a matching vector whose parking functions equal the graphical ones. For
//! tiny graphs the shapes overlap; the tag is chosen with the fixed
//! precedence split-complete, then cycle, then tree, which never changes the
//! matched parking set.

use crate::graph::Multigraph;
use crate::parking::maximal_graphical_pf;
use crate::{Caps, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassTag {
    ATree { a: u64 },
    ACycle { a: u64 },
    Kab { a: u64, b: u64 },
    NotInvariant,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub tag: ClassTag,
    /// The vector with `PF(G) = PF(x)`, absent for non-invariant graphs.
    pub matched_x: Option<Vec<u64>>,
}

impl Classification {
    pub fn is_invariant(&self) -> bool {
        !matches!(self.tag, ClassTag::NotInvariant)
    }

    pub fn to_json(&self) -> serde_json::Value {
        match &self.tag {
            ClassTag::ATree { a } => serde_json::json!({
                "tag": "ATree", "a": a, "x": self.matched_x,
            }),
            ClassTag::ACycle { a } => serde_json::json!({
                "tag": "ACycle", "a": a, "x": self.matched_x,
            }),
            ClassTag::Kab { a, b } => serde_json::json!({
                "tag": "Kab", "a": a, "b": b, "x": self.matched_x,
            }),
            ClassTag::NotInvariant => serde_json::json!({ "tag": "NotInvariant" }),
        }
    }
}

/// Whether `PF(G)` is closed under permuting coordinates. Decided on the
/// maximal parking functions: the full set is their downward closure, all of
/// them share one sum, so closure of the maxima under adjacent transpositions
/// settles the question.
pub fn is_sn_invariant(g: &Multigraph, caps: &Caps) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let maxima = maximal_graphical_pf(g, caps)?;
    let set: std::collections::BTreeSet<&Vec<u64>> = maxima.iter().collect();
    for alpha in &maxima {
        for i in 0..n.saturating_sub(1) {
            if alpha[i] == alpha[i + 1] {
                continue;
            }
            let mut swapped = alpha.clone();
            swapped.swap(i, i + 1);
            if !set.contains(&swapped) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Structural classification, agreeing with [`is_sn_invariant`].
pub fn classify(g: &Multigraph, caps: &Caps) -> Result<Classification> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    g.check_caps(caps)?;
    let n = g.n();

    // split-complete: every root edge weight a, every other pair weight b
    let a0 = g.weight(0, 1);
    let kab_root = a0 >= 1 && (1..=n).all(|j| g.weight(0, j) == a0);
    if n == 1 {
        // a single edge is K^{a,b}_2 for every b; report b = a
        if kab_root {
            return Ok(Classification {
                tag: ClassTag::Kab { a: a0, b: a0 },
                matched_x: Some(vec![a0]),
            });
        }
    } else if kab_root {
        let b0 = g.weight(1, 2);
        let kab_rest = b0 >= 1
            && (1..=n).all(|i| ((i + 1)..=n).all(|j| g.weight(i, j) == b0));
        if kab_rest {
            let mut x = vec![b0; n];
            x[0] = a0;
            return Ok(Classification {
                tag: ClassTag::Kab { a: a0, b: b0 },
                matched_x: Some(x),
            });
        }
    }

    let support = g.support_edges();
    let uniform = support
        .iter()
        .map(|&(i, j)| g.weight(i, j))
        .collect::<std::collections::BTreeSet<u64>>();
    if uniform.len() == 1 {
        let a = *uniform.iter().next().expect("nonempty support");
        let mut support_degree = vec![0usize; n + 1];
        for &(i, j) in &support {
            support_degree[i] += 1;
            support_degree[j] += 1;
        }
        // cycle through every vertex: n+1 support edges, all degrees two
        if n >= 2 && support.len() == n + 1 && support_degree.iter().all(|&d| d == 2) {
            let mut x = vec![0u64; n];
            x[0] = a;
            x[n - 1] = a;
            return Ok(Classification {
                tag: ClassTag::ACycle { a },
                matched_x: Some(x),
            });
        }
        // spanning tree support
        if support.len() == n {
            let mut x = vec![0u64; n];
            x[0] = a;
            return Ok(Classification {
                tag: ClassTag::ATree { a },
                matched_x: Some(x),
            });
        }
    }

    Ok(Classification {
        tag: ClassTag::NotInvariant,
        matched_x: None,
    })
}
