//! Recognition, enumeration, and maximal-element structure for vector and
//! graphical parking functions.
//!
//! A sequence is an x-parking function when its weakly increasing
//! rearrangement stays below the prefix sums of `x`; it is a G-parking
//! function when every nonempty set of non-root vertices contains one whose
//! entry is beaten by its outward degree. Membership for the graphical case
//! is decided by running the multigraph DFS-burning algorithm, whose failure
//! set is exactly a violating certificate.

use std::collections::BTreeSet;

use crate::burning::{self, BurnOutcome};
use crate::graph::{acyclic_orientations_unique_source, Multigraph};
use crate::tree::VertexOrder;
use crate::util::{next_in_box, next_permutation};
use crate::{Caps, Error, Result};

/// Outcome of a graphical parking-function membership test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GpfCheck {
    Member,
    /// Nonempty `U` with `alpha[j] >= deg^G_U(j)` for every `j` in `U`.
    NotMember { certificate: Vec<usize> },
}

impl GpfCheck {
    pub fn is_member(&self) -> bool {
        matches!(self, GpfCheck::Member)
    }
}

/// Whether the weakly increasing rearrangement of `alpha` satisfies
/// `alpha_(j) <= x_1 + ... + x_j - 1` for every position.
pub fn is_vector_pf(alpha: &[u64], x: &[u64]) -> Result<bool> {
    if alpha.len() != x.len() {
        return Err(Error::LengthMismatch {
            got: alpha.len(),
            expected: x.len(),
        });
    }
    let mut sorted = alpha.to_vec();
    sorted.sort_unstable();
    let mut prefix = 0u64;
    for (j, &v) in sorted.iter().enumerate() {
        prefix += x[j];
        if prefix == 0 || v > prefix - 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Membership in `PF(G)`, decided by one run of the burning algorithm.
pub fn is_graphical_pf(alpha: &[u64], g: &Multigraph) -> Result<GpfCheck> {
    let order = VertexOrder::natural(g.n());
    match burning::mg_dfs_burn(g, &order, alpha)? {
        BurnOutcome::Spanning { .. } => Ok(GpfCheck::Member),
        BurnOutcome::Stuck { unburnt } => Ok(GpfCheck::NotMember {
            certificate: unburnt,
        }),
    }
}

/// Largest possible sum over `PF(x)`, i.e. `sum((n+1-i) x_i) - n`. `None`
/// when the set is empty.
fn max_sum_vector(x: &[u64]) -> Option<u64> {
    let n = x.len() as u64;
    if x.first().map_or(n > 0, |&x1| x1 == 0) {
        return None;
    }
    let weighted: u64 = x
        .iter()
        .enumerate()
        .map(|(i, &xi)| (n - i as u64) * xi)
        .sum();
    Some(weighted - n)
}

/// Reversed sum `(sum((n+1-i) x_i)) - n - sum(alpha)`; errors when `alpha`
/// is not an x-parking function.
pub fn rsum_vector(alpha: &[u64], x: &[u64]) -> Result<u64> {
    if !is_vector_pf(alpha, x)? {
        return Err(Error::NotParking);
    }
    if alpha.is_empty() {
        return Ok(0);
    }
    Ok(max_sum_vector(x).expect("nonempty PF(x)") - alpha.iter().sum::<u64>())
}

/// Reversed sum `#E(G) - n - sum(alpha)`; errors when `alpha` is not a
/// G-parking function.
pub fn rsum_graphical(alpha: &[u64], g: &Multigraph) -> Result<u64> {
    if !is_graphical_pf(alpha, g)?.is_member() {
        return Err(Error::NotParking);
    }
    Ok(g.edge_count() - g.n() as u64 - alpha.iter().sum::<u64>())
}

/// All of `PF(x)` in lexicographic order, by scanning the bounding box
/// `[0, sum(x) - 1]^n` and filtering on the sorted criterion.
pub fn enumerate_vector_pf(x: &[u64], caps: &Caps) -> Result<Vec<Vec<u64>>> {
    let n = x.len();
    caps.check_n(n)?;
    if n == 0 {
        return Ok(vec![vec![]]);
    }
    if x[0] == 0 {
        return Ok(vec![]);
    }
    let bound: u64 = x.iter().sum();
    let mut size = 1u64;
    for _ in 0..n {
        size = size.saturating_mul(bound);
        caps.check_set_size("PF(x) candidate box", size)?;
    }
    let mut out = Vec::new();
    let mut alpha = vec![0u64; n];
    let bounds = vec![bound - 1; n];
    loop {
        if is_vector_pf(&alpha, x)? {
            out.push(alpha.clone());
        }
        if !next_in_box(&mut alpha, &bounds) {
            return Ok(out);
        }
    }
}

/// All of `PF(G)` in lexicographic order. Empty for disconnected graphs.
///
/// Enumerates the maximal parking functions through orientations and takes
/// the downward closure, which is the whole set.
pub fn enumerate_graphical_pf(g: &Multigraph, caps: &Caps) -> Result<Vec<Vec<u64>>> {
    if !g.is_connected() {
        return Ok(vec![]);
    }
    let n = g.n();
    let maxima = maximal_graphical_pf(g, caps)?;
    let mut work = 0u64;
    for m in &maxima {
        let box_size: u64 = m.iter().map(|&v| v + 1).product();
        work = work.saturating_add(box_size);
        caps.check_set_size("PF(G) candidate boxes", work)?;
    }
    let mut set = BTreeSet::new();
    for m in &maxima {
        let mut alpha = vec![0u64; n];
        loop {
            set.insert(alpha.clone());
            if !next_in_box(&mut alpha, m) {
                break;
            }
        }
    }
    Ok(set.into_iter().collect())
}

/// The staircase `(x_1 - 1, x_1 + x_2 - 1, ..., sum(x) - 1)` in weakly
/// increasing order; `None` when `x_1 = 0` (so `PF(x)` is empty).
pub fn staircase(x: &[u64]) -> Option<Vec<u64>> {
    if x.first().is_some_and(|&x1| x1 >= 1) {
        let mut prefix = 0u64;
        Some(
            x.iter()
                .map(|&xi| {
                    prefix += xi;
                    prefix - 1
                })
                .collect(),
        )
    } else {
        None
    }
}

/// Maximal x-parking functions: the distinct permutations of the staircase,
/// lexicographic. Empty when `x_1 = 0`.
pub fn maximal_vector_pf(x: &[u64]) -> Vec<Vec<u64>> {
    if x.is_empty() {
        return vec![vec![]];
    }
    let Some(mut lambda) = staircase(x) else {
        return vec![];
    };
    lambda.sort_unstable();
    let mut out = Vec::new();
    loop {
        out.push(lambda.clone());
        if !next_permutation(&mut lambda) {
            break;
        }
    }
    out
}

/// Maximal G-parking functions via the orientation bijection: indegree
/// vectors minus one over acyclic orientations with unique source 0.
pub fn maximal_graphical_pf(g: &Multigraph, caps: &Caps) -> Result<Vec<Vec<u64>>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let set: BTreeSet<Vec<u64>> = acyclic_orientations_unique_source(g, caps)?
        .iter()
        .map(|o| {
            let indeg = o.indegrees(g);
            indeg[1..].iter().map(|&d| d - 1).collect()
        })
        .collect();
    Ok(set.into_iter().collect())
}

/// All weakly increasing x-parking functions, lexicographic.
pub fn enumerate_increasing_vector_pf(x: &[u64], caps: &Caps) -> Result<Vec<Vec<u64>>> {
    let n = x.len();
    caps.check_n(n)?;
    if n == 0 {
        return Ok(vec![vec![]]);
    }
    let Some(lambda) = staircase(x) else {
        return Ok(vec![]);
    };
    let mut out = Vec::new();
    let mut alpha = vec![0u64; n];
    fn rec(
        j: usize,
        n: usize,
        lambda: &[u64],
        alpha: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
    ) {
        if j == n {
            out.push(alpha.clone());
            return;
        }
        let lo = if j == 0 { 0 } else { alpha[j - 1] };
        for v in lo..=lambda[j] {
            alpha[j] = v;
            rec(j + 1, n, lambda, alpha, out);
        }
    }
    rec(0, n, &lambda, &mut alpha, &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig2() -> Multigraph {
        Multigraph::from_edges(
            4,
            &[(0, 1, 2), (1, 2, 2), (2, 3, 2), (2, 4, 1), (3, 4, 1), (0, 4, 3)],
        )
        .unwrap()
    }

    /// Subset-definition membership check, kept as an oracle independent of
    /// the burning algorithm.
    fn is_gpf_by_definition(alpha: &[u64], g: &Multigraph) -> bool {
        let n = g.n();
        for mask in 1u32..(1 << n) {
            let in_u: Vec<bool> = (0..=n)
                .map(|v| v >= 1 && mask >> (v - 1) & 1 == 1)
                .collect();
            let ok = (1..=n).any(|i| {
                in_u[i] && {
                    let d = g.degree_outside(i, &in_u);
                    alpha[i - 1] < d
                }
            });
            if !ok {
                return false;
            }
        }
        true
    }

    #[test]
    fn vector_membership() {
        assert!(is_vector_pf(&[1, 0], &[1, 1]).unwrap());
        assert!(is_vector_pf(&[2, 0, 2], &[1, 3, 1]).unwrap());
        assert!(!is_vector_pf(&[1, 1], &[1, 1]).unwrap());
        assert!(!is_vector_pf(&[0, 0], &[0, 5]).unwrap());
        assert!(is_vector_pf(&[], &[]).unwrap());
        assert!(is_vector_pf(&[0], &[1, 1]).is_err());
    }

    #[test]
    fn graphical_membership_and_certificate() {
        let g = fig2();
        assert!(is_graphical_pf(&[1, 2, 0, 0], &g).unwrap().is_member());
        assert!(is_graphical_pf(&[0, 0, 0, 0], &g).unwrap().is_member());
        let degs: Vec<u64> = (1..=4).map(|i| g.degree(i)).collect();
        match is_graphical_pf(&degs, &g).unwrap() {
            GpfCheck::NotMember { certificate } => {
                assert_eq!(certificate, vec![1, 2, 3, 4]);
            }
            GpfCheck::Member => panic!("degree vector cannot park"),
        }
    }

    #[test]
    fn burning_membership_matches_subset_definition() {
        // exhaustive cross-check on a handful of small graphs
        let caps = Caps::default();
        let graphs = vec![
            Multigraph::complete(3),
            fig2(),
            Multigraph::complete_split(3, 1, 2),
            Multigraph::from_edges(3, &[(0, 1, 2), (1, 2, 1), (1, 3, 3)]).unwrap(),
        ];
        for g in graphs {
            let n = g.n();
            let degs: Vec<u64> = (1..=n).map(|i| g.degree(i).max(1)).collect();
            let mut alpha = vec![0u64; n];
            loop {
                let burn = is_graphical_pf(&alpha, &g).unwrap();
                assert_eq!(
                    burn.is_member(),
                    is_gpf_by_definition(&alpha, &g),
                    "{g:?} {alpha:?}"
                );
                if let GpfCheck::NotMember { certificate } = &burn {
                    assert!(!certificate.is_empty());
                    let in_u: Vec<bool> = (0..=n).map(|v| certificate.contains(&v)).collect();
                    for &j in certificate {
                        assert!(alpha[j - 1] >= g.degree_outside(j, &in_u));
                    }
                }
                let mut k = n;
                let mut done = true;
                while k > 0 {
                    k -= 1;
                    if alpha[k] < degs[k] {
                        alpha[k] += 1;
                        for entry in alpha.iter_mut().skip(k + 1) {
                            *entry = 0;
                        }
                        done = false;
                        break;
                    }
                }
                if done {
                    break;
                }
            }
            let _ = caps;
        }
    }

    #[test]
    fn rsum_examples() {
        assert_eq!(rsum_vector(&[0, 0], &[1, 1]).unwrap(), 1);
        assert_eq!(rsum_vector(&[2, 0, 2], &[1, 3, 1]).unwrap(), 3);
        assert_eq!(rsum_vector(&[0, 3, 4], &[1, 3, 1]).unwrap(), 0);
        assert!(rsum_vector(&[5, 0], &[1, 1]).is_err());
        assert_eq!(rsum_graphical(&[1, 2, 0, 0], &fig2()).unwrap(), 4);
    }

    #[test]
    fn enumerate_vector_examples() {
        let caps = Caps::default();
        assert_eq!(
            enumerate_vector_pf(&[1, 1], &caps).unwrap(),
            vec![vec![0, 0], vec![0, 1], vec![1, 0]]
        );
        assert_eq!(enumerate_vector_pf(&[1, 1, 1], &caps).unwrap().len(), 16);
        assert_eq!(enumerate_vector_pf(&[2, 1, 1], &caps).unwrap().len(), 50);
        assert_eq!(enumerate_vector_pf(&[1, 3, 1], &caps).unwrap().len(), 58);
        assert!(enumerate_vector_pf(&[0, 1], &caps).unwrap().is_empty());
    }

    #[test]
    fn enumeration_caps_enforced() {
        let caps = Caps::default();
        // candidate box (8 * 64)^8 far exceeds the default set-size cap
        let huge = vec![64u64; 8];
        assert!(matches!(
            enumerate_vector_pf(&huge, &caps),
            Err(Error::CapExceeded { .. })
        ));
        assert!(matches!(
            enumerate_vector_pf(&[1u64; 9], &caps),
            Err(Error::CapExceeded { .. })
        ));
        let tight = Caps {
            max_pf_set_size: 10,
            ..Caps::default()
        };
        assert!(matches!(
            enumerate_graphical_pf(&fig2(), &tight),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn enumerate_graphical_examples() {
        let caps = Caps::default();
        let k3 = Multigraph::complete(2);
        assert_eq!(
            enumerate_graphical_pf(&k3, &caps).unwrap(),
            enumerate_vector_pf(&[1, 1], &caps).unwrap()
        );
        // K^{1,2}_3 has 1 * (1 + 2*2)^1 = 5 parking functions
        let g = Multigraph::complete_split(2, 1, 2);
        assert_eq!(enumerate_graphical_pf(&g, &caps).unwrap().len(), 5);
        let disconnected = Multigraph::from_edges(2, &[(0, 1, 1)]).unwrap();
        assert!(enumerate_graphical_pf(&disconnected, &caps).unwrap().is_empty());
        assert_eq!(enumerate_graphical_pf(&fig2(), &caps).unwrap().len(), 116);
    }

    #[test]
    fn graphical_enumeration_matches_definition_filter() {
        let g = Multigraph::from_edges(3, &[(0, 1, 2), (0, 2, 1), (1, 2, 1), (2, 3, 2)]).unwrap();
        let caps = Caps::default();
        let fast: Vec<Vec<u64>> = enumerate_graphical_pf(&g, &caps).unwrap();
        let mut brute = Vec::new();
        let degs: Vec<u64> = (1..=3).map(|i| g.degree(i)).collect();
        let mut alpha = vec![0u64; 3];
        'outer: loop {
            if is_gpf_by_definition(&alpha, &g) {
                brute.push(alpha.clone());
            }
            let mut k = 3;
            loop {
                if k == 0 {
                    break 'outer;
                }
                k -= 1;
                if alpha[k] + 1 < degs[k] {
                    alpha[k] += 1;
                    alpha[k + 1..].iter_mut().for_each(|v| *v = 0);
                    break;
                }
            }
        }
        assert_eq!(fast, brute);
    }

    #[test]
    fn maximal_vector_examples() {
        assert_eq!(
            maximal_vector_pf(&[1, 1]),
            vec![vec![0, 1], vec![1, 0]]
        );
        assert_eq!(maximal_vector_pf(&[2, 0]), vec![vec![1, 1]]);
        assert_eq!(maximal_vector_pf(&[0, 3]), Vec::<Vec<u64>>::new());
        let m = maximal_vector_pf(&[1, 3, 1]);
        assert_eq!(m.len(), 6);
        assert!(m.contains(&vec![4, 3, 0]));
        // brute maximality: no member strictly dominates another
        let caps = Caps::default();
        let all = enumerate_vector_pf(&[1, 3, 1], &caps).unwrap();
        let brute: Vec<Vec<u64>> = all
            .iter()
            .filter(|a| {
                !all.iter().any(|b| {
                    b != *a && a.iter().zip(b).all(|(x, y)| x <= y)
                })
            })
            .cloned()
            .collect();
        assert_eq!(m, brute);
    }

    #[test]
    fn maximal_graphical_examples() {
        let caps = Caps::default();
        assert_eq!(
            maximal_graphical_pf(&Multigraph::complete(2), &caps).unwrap(),
            vec![vec![0, 1], vec![1, 0]]
        );
        // tree support: unique orientation, single maximum
        let path = Multigraph::from_edges(2, &[(0, 1, 2), (1, 2, 1)]).unwrap();
        assert_eq!(
            maximal_graphical_pf(&path, &caps).unwrap(),
            vec![vec![1, 0]]
        );
        // Fig. 2: equals brute-force maxima over PF(G)
        let g = fig2();
        let all = enumerate_graphical_pf(&g, &caps).unwrap();
        let brute: Vec<Vec<u64>> = all
            .iter()
            .filter(|a| {
                !all.iter().any(|b| b != *a && a.iter().zip(b).all(|(x, y)| x <= y))
            })
            .cloned()
            .collect();
        assert_eq!(maximal_graphical_pf(&g, &caps).unwrap(), brute);
        let disconnected = Multigraph::from_edges(2, &[(0, 1, 1)]).unwrap();
        assert!(maximal_graphical_pf(&disconnected, &caps).is_err());
    }

    #[test]
    fn increasing_examples() {
        let caps = Caps::default();
        assert_eq!(
            enumerate_increasing_vector_pf(&[1, 1], &caps).unwrap(),
            vec![vec![0, 0], vec![0, 1]]
        );
        assert_eq!(
            enumerate_increasing_vector_pf(&[1, 1, 1], &caps).unwrap().len(),
            5
        );
        assert!(enumerate_increasing_vector_pf(&[0, 2], &caps)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn sn_closure_of_vector_pf() {
        let caps = Caps::default();
        for x in [&[1u64, 3, 1][..], &[2, 0, 2], &[1, 1, 1]] {
            let set: BTreeSet<Vec<u64>> = enumerate_vector_pf(x, &caps).unwrap().into_iter().collect();
            for alpha in &set {
                let mut perm = alpha.clone();
                perm.sort_unstable();
                // check every permutation of alpha stays in the set
                loop {
                    assert!(set.contains(&perm));
                    let Some(i) = (0..perm.len() - 1).rev().find(|&i| perm[i] < perm[i + 1])
                    else {
                        break;
                    };
                    let j = (i + 1..perm.len()).rev().find(|&j| perm[j] > perm[i]).unwrap();
                    perm.swap(i, j);
                    perm[i + 1..].reverse();
                }
            }
        }
    }
}
