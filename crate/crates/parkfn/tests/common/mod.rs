//! Oracles shared by the integration tests. Everything here recomputes
//! quantities from first principles, independent of the library's own
//! algorithms.
//!
//! Each test binary uses its own subset of these.
#![allow(dead_code)]

use parkfn::graph::Multigraph;

/// Catalan numbers by the convolution recurrence.
pub fn catalan(upto: usize) -> Vec<u64> {
    let mut c = vec![1u64; upto + 1];
    for n in 1..=upto {
        c[n] = (0..n).map(|i| c[i] * c[n - 1 - i]).sum();
    }
    c
}

/// Determinant of the reduced Laplacian of `g` (rows and columns of the
/// non-root vertices), by cofactor expansion in exact integers.
pub fn reduced_laplacian_det(g: &Multigraph) -> i128 {
    let n = g.n();
    let mut m = vec![vec![0i128; n]; n];
    for i in 1..=n {
        m[i - 1][i - 1] = g.degree(i) as i128;
        for j in 1..=n {
            if i != j {
                m[i - 1][j - 1] = -(g.weight(i, j) as i128);
            }
        }
    }
    det(&m)
}

fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    let mut total = 0i128;
    for (col, &entry) in m[0].iter().enumerate() {
        if entry == 0 {
            continue;
        }
        let minor: Vec<Vec<i128>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != col)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect();
        let sign = if col % 2 == 0 { 1 } else { -1 };
        total += sign * entry * det(&minor);
    }
    total
}

/// All labeled trees on `{0..n}` rooted at 0 by filtering parent maps, as
/// parent arrays.
pub fn labeled_trees_brute(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut parent = vec![0usize; n];
    loop {
        let mut ok = true;
        'check: for v in 1..=n {
            let mut u = v;
            let mut steps = 0;
            while u != 0 {
                if parent[u - 1] == u {
                    ok = false;
                    break 'check;
                }
                u = parent[u - 1];
                steps += 1;
                if steps > n {
                    ok = false;
                    break 'check;
                }
            }
        }
        if ok {
            out.push(parent.clone());
        }
        let mut k = n;
        let mut done = true;
        while k > 0 {
            k -= 1;
            if parent[k] < n {
                parent[k] += 1;
                for entry in parent.iter_mut().skip(k + 1) {
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
    out
}

/// Inversion count of a labeled tree given as a parent array.
pub fn inversions_brute(parent: &[usize]) -> usize {
    let mut inv = 0;
    for i in 1..=parent.len() {
        let mut u = parent[i - 1];
        while u != 0 {
            if u > i {
                inv += 1;
            }
            u = parent[u - 1];
        }
    }
    inv
}

/// Every connected multigraph on `{0..n}` with weights `0..=max_w`.
pub fn connected_multigraphs(n: usize, max_w: u64) -> Vec<Multigraph> {
    let pairs: Vec<(usize, usize)> = (0..=n)
        .flat_map(|i| ((i + 1)..=n).map(move |j| (i, j)))
        .collect();
    let mut weights = vec![0u64; pairs.len()];
    let mut out = Vec::new();
    loop {
        let mut g = Multigraph::new(n);
        for (&(i, j), &w) in pairs.iter().zip(&weights) {
            g.set_weight(i, j, w);
        }
        if g.is_connected() {
            out.push(g);
        }
        let mut k = weights.len();
        let mut done = true;
        while k > 0 {
            k -= 1;
            if weights[k] < max_w {
                weights[k] += 1;
                for entry in weights.iter_mut().skip(k + 1) {
                    *entry = 0;
                }
                done = false;
                break;
            }
        }
        if done {
            return out;
        }
    }
}
