//! Batch verification suites: each one sweeps an identity over an exhaustive
//! small grid (plus seeded random instances where configured) and reports the
//! instance count and any failures.
//!
//! A suite passes when its failure list is empty. Instances are visited in a
//! fixed order and randomness is drawn from a seeded generator, so reports
//! are reproducible byte for byte.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::classify::{classify, is_sn_invariant};
use crate::enumerators::{
    corollary_count, exceptional_count_check, inversion_enum_labeled_trees, pitman_stanley_count,
    rsum_enum_graphical_brute, rsum_enum_increasing, rsum_enum_kungyan, rsum_enum_main,
    rsum_enum_tree_side, rsum_enum_vector_brute, specialization_report,
};
use crate::graph::Multigraph;
use crate::parking::{enumerate_graphical_pf, enumerate_vector_pf};
use crate::tree::VertexOrder;
use crate::util::next_in_box;
use crate::{Caps, Error, Result};

/// Parameters shared by the suites. Defaults match the desk-scale sweeps the
/// identities are specified over.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    /// Largest vector length / non-root vertex count in exhaustive sweeps.
    pub max_n: usize,
    /// Exhaustive x-grids run over entries `0..=x_range`.
    pub x_range: u64,
    /// Exhaustive graph sweeps run over weights `0..=weight_range`.
    pub weight_range: u64,
    /// Seeded random graphs added on top of the exhaustive sweep.
    pub random_graphs: usize,
    /// Random vertex orders tried per random graph.
    pub random_orders: usize,
    /// Weight bound for the random graphs.
    pub random_weight_range: u64,
    /// Seeded random x-vectors added on top of the exhaustive grid.
    pub random_x: usize,
    /// Entry bound for the random x-vectors.
    pub random_x_range: u64,
    pub seed: u64,
    pub caps: Caps,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_n: 4,
            x_range: 3,
            weight_range: 2,
            random_graphs: 50,
            random_orders: 5,
            random_weight_range: 3,
            random_x: 20,
            random_x_range: 6,
            seed: 0,
            caps: Caps::default(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub identity: String,
    pub instances: u64,
    pub failures: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}

pub const SUITE_NAMES: &[&str] = &[
    "eq1",
    "thm3.1",
    "thm1.7",
    "kungyan",
    "cor1.8",
    "increasing",
    "spec-q",
    "exceptional",
    "classify",
];

/// Run one suite by name.
pub fn run_suite(name: &str, cfg: &VerifyConfig) -> Result<VerifyReport> {
    match name {
        "eq1" => suite_eq1(cfg),
        "thm3.1" => suite_thm31(cfg),
        "thm1.7" => suite_thm17(cfg),
        "kungyan" => suite_kungyan(cfg),
        "cor1.8" => suite_cor18(cfg),
        "increasing" => suite_increasing(cfg),
        "spec-q" => suite_spec_q(cfg),
        "exceptional" => suite_exceptional(cfg),
        "classify" => suite_classify(cfg),
        other => Err(Error::InvalidInput(format!(
            "unknown suite {other:?}; available: {}",
            SUITE_NAMES.join(", ")
        ))),
    }
}

pub fn all_suites(cfg: &VerifyConfig) -> Result<Vec<VerifyReport>> {
    SUITE_NAMES.iter().map(|name| run_suite(name, cfg)).collect()
}

/// Visit every x in `{0..=range}^n` for n in `1..=max_n`, then `extra` seeded
/// random vectors of length `max_n` with entries `0..=random_range`.
fn for_each_grid_x(cfg: &VerifyConfig, mut f: impl FnMut(&[u64]) -> Result<()>) -> Result<u64> {
    let mut instances = 0u64;
    for n in 1..=cfg.max_n {
        let mut x = vec![0u64; n];
        let bounds = vec![cfg.x_range; n];
        loop {
            f(&x)?;
            instances += 1;
            if !next_in_box(&mut x, &bounds) {
                break;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.random_x {
        let x: Vec<u64> = (0..cfg.max_n)
            .map(|_| rng.gen_range(0..=cfg.random_x_range))
            .collect();
        f(&x)?;
        instances += 1;
    }
    Ok(instances)
}

/// Visit every connected multigraph on `{0..n}` with weights `0..=max_w`,
/// for n in `1..=max_n`.
pub fn for_each_connected_multigraph(
    max_n: usize,
    max_w: u64,
    mut f: impl FnMut(&Multigraph) -> Result<()>,
) -> Result<u64> {
    let mut instances = 0u64;
    for n in 1..=max_n {
        let pairs: Vec<(usize, usize)> = (0..=n)
            .flat_map(|i| ((i + 1)..=n).map(move |j| (i, j)))
            .collect();
        let mut weights = vec![0u64; pairs.len()];
        let bounds = vec![max_w; pairs.len()];
        loop {
            let mut g = Multigraph::new(n);
            for (&(i, j), &w) in pairs.iter().zip(&weights) {
                g.set_weight(i, j, w);
            }
            if g.is_connected() {
                f(&g)?;
                instances += 1;
            }
            if !next_in_box(&mut weights, &bounds) {
                break;
            }
        }
    }
    Ok(instances)
}

/// Seeded random connected multigraph on `{0..n}` with weights `0..=max_w`.
pub fn random_connected_multigraph(rng: &mut impl Rng, n: usize, max_w: u64) -> Multigraph {
    loop {
        let mut g = Multigraph::new(n);
        for i in 0..=n {
            for j in (i + 1)..=n {
                g.set_weight(i, j, rng.gen_range(0..=max_w));
            }
        }
        if g.is_connected() {
            return g;
        }
    }
}

fn random_order(rng: &mut impl Rng, n: usize) -> VertexOrder {
    let mut seq: Vec<usize> = (1..=n).collect();
    seq.shuffle(rng);
    VertexOrder::new(seq).expect("shuffled permutation")
}

/// Classical identity: the reversed-sum enumerator for `PF(1^n)` equals the
/// inversion enumerator for labeled trees on `n+1` vertices.
pub fn suite_eq1(cfg: &VerifyConfig) -> Result<VerifyReport> {
    let mut failures = Vec::new();
    let mut instances = 0u64;
    for n in 1..=cfg.max_n {
        let ones = vec![1u64; n];
        let lhs = rsum_enum_vector_brute(&ones, &cfg.caps)?;
        let rhs = inversion_enum_labeled_trees(n, &cfg.caps)?;
        instances += 1;
        if lhs != rhs {
            failures.push(format!("n={n}: pf side {lhs} != tree side {rhs}"));
        }
    }
    Ok(VerifyReport {
        identity: "eq1".into(),
        instances,
        failures,
    })
}

/// Graphical identity: brute enumerator equals the spanning-tree side, for
/// every order tried.
pub fn suite_thm31(cfg: &VerifyConfig) -> Result<VerifyReport> {
    let mut failures = Vec::new();
    let mut instances =
        for_each_connected_multigraph(cfg.max_n, cfg.weight_range, |g| {
            let brute = rsum_enum_graphical_brute(g, &cfg.caps)?;
            let tree = rsum_enum_tree_side(g, &VertexOrder::natural(g.n()), &cfg.caps)?;
            if brute != tree {
                failures.push(format!("{}: brute {brute} != tree side {tree}", g.to_json()));
            }
            Ok(())
        })?;

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.random_graphs {
        let n = rng.gen_range(1..=cfg.max_n);
        let g = random_connected_multigraph(&mut rng, n, cfg.random_weight_range);
        let brute = rsum_enum_graphical_brute(&g, &cfg.caps)?;
        let members = enumerate_graphical_pf(&g, &cfg.caps)?;
        for _ in 0..cfg.random_orders {
            let order = random_order(&mut rng, n);
            let tree = rsum_enum_tree_side(&g, &order, &cfg.caps)?;
            instances += 1;
            if brute != tree {
                failures.push(format!(
                    "{} order {:?}: brute {brute} != tree side {tree}",
                    g.to_json(),
                    order.sequence()
                ));
            }
            // per-member statistic identity and roundtrip under this order
            for alpha in &members {
                match crate::burning::mg_dfs_burn(&g, &order, alpha)? {
                    crate::burning::BurnOutcome::Spanning { tree, labels } => {
                        let rsum = crate::parking::rsum_graphical(alpha, &g)?;
                        let kappa = crate::tree::kappa(&g, &tree, &order)?;
                        if rsum != kappa + labels.sum() {
                            failures.push(format!(
                                "{} order {:?} alpha {alpha:?}: rsum {rsum} != kappa {kappa} + labels {}",
                                g.to_json(),
                                order.sequence(),
                                labels.sum()
                            ));
                        }
                        let back = crate::burning::mg_dfs_unburn(&g, &order, &tree, &labels)?;
                        if &back != alpha {
                            failures.push(format!(
                                "{} order {:?}: unburn of burn gave {back:?}, not {alpha:?}",
                                g.to_json(),
                                order.sequence()
                            ));
                        }
                    }
                    crate::burning::BurnOutcome::Stuck { .. } => {
                        failures.push(format!(
                            "{} order {:?}: member {alpha:?} failed to burn",
                            g.to_json(),
                            order.sequence()
                        ));
                    }
                }
            }
        }
    }
    Ok(VerifyReport {
        identity: "thm3.1".into(),
        instances,
        failures,
    })
}

/// Vector identity, three ways: brute, plane-tree formula, composition
/// formula.
pub fn suite_thm17(cfg: &VerifyConfig) -> Result<VerifyReport> {
    let mut failures = Vec::new();
    let instances = for_each_grid_x(cfg, |x| {
        let brute = rsum_enum_vector_brute(x, &cfg.caps)?;
        let main = rsum_enum_main(x, &cfg.caps)?;
        let kungyan = rsum_enum_kungyan(x, &cfg.caps)?;
        if brute != main {
            failures.push(format!("x={x:?}: brute {brute} != main {main}"));
        }
        if main != kungyan {
            failures.push(format!("x={x:?}: main {main} != kungyan {kungyan}"));
        }
        Ok(())
    })?;
    Ok(VerifyReport {
        identity: "thm1.7".into(),
        instances,
        failures,
    })
}

/// Composition formula against the brute enumerator alone.
pub fn suite_kungyan(cfg: &VerifyConfig) -> Result<VerifyReport> {
    let mut failures = Vec::new();
    let instances = for_each_grid_x(cfg, |x| {
        let brute = rsum_enum_vector_brute(x, &cfg.caps)?;
        let kungyan = rsum_enum_kungyan(x, &cfg.caps)?;
        if brute != kungyan {
            failures.push(format!("x={x:?}: brute {brute} != kungyan {kungyan}"));
        }
        Ok(())
    })?;
    Ok(VerifyReport {
        identity: "kungyan".into(),
        instances,
        failures,
    })
}

/// Counting agreement: composition count, plane-tree count, and the actual
/// enumeration size; plus the closed product forms for the special vectors.
pub fn suite_cor18(cfg: &VerifyConfig) -> Result<VerifyReport> {
    let mut failures = Vec::new();
    let mut instances = for_each_grid_x(cfg, |x| {
        let ps = pitman_stanley_count(x, &cfg.caps)?;
        let cor = corollary_count(x, &cfg.caps)?;
        let listed = enumerate_vector_pf(x, &cfg.caps)?.len();
        if ps != cor {
            failures.push(format!("x={x:?}: composition {ps} != tree {cor}"));
        }
        if ps != num_bigint::BigInt::from(listed) {
            failures.push(format!("x={x:?}: formula {ps} != enumerated {listed}"));
        }
        Ok(())
    })?;

    // closed forms: a^n, (n+1) a^n, a (a+nb)^(n-1)
    for n in 1..=cfg.max_n {
        for a in 1..=cfg.x_range {
            let mut x = vec![0u64; n];
            x[0] = a;
            let expect = num_bigint::BigInt::from(a).pow(n as u32);
            instances += 1;
            if pitman_stanley_count(&x, &cfg.caps)? != expect {
                failures.push(format!("x={x:?}: count != a^n"));
            }
            if n >= 2 {
                x[n - 1] = a;
                let expect = num_bigint::BigInt::from(n as u64 + 1)
                    * num_bigint::BigInt::from(a).pow(n as u32);
                instances += 1;
                if pitman_stanley_count(&x, &cfg.caps)? != expect {
                    failures.push(format!("x={x:?}: count != (n+1) a^n"));
                }
            }
            for b in 1..=cfg.x_range {
                let mut x = vec![b; n];
                x[0] = a;
                let expect = num_bigint::BigInt::from(a)
                    * num_bigint::BigInt::from(a + n as u64 * b).pow(n as u32 - 1);
                instances += 1;
                if pitman_stanley_count(&x, &cfg.caps)? != expect {
                    failures.push(format!("x={x:?}: count != a(a+nb)^(n-1)"));
                }
            }
        }
    }
    Ok(VerifyReport {
        identity: "cor1.8".into(),
        instances,
        failures,
    })
}

/// Weakly increasing identity: parking side equals partition side.
pub fn suite_increasing(cfg: &VerifyConfig) -> Result<VerifyReport> {
    let mut failures = Vec::new();
    let instances = for_each_grid_x(cfg, |x| {
        let both = rsum_enum_increasing(x, &cfg.caps)?;
        if both.parking_side != both.partition_side {
            failures.push(format!(
                "x={x:?}: parking {} != partitions {}",
                both.parking_side, both.partition_side
            ));
        }
        Ok(())
    })?;
    Ok(VerifyReport {
        identity: "increasing".into(),
        instances,
        failures,
    })
}

/// q = 1, 0, -1 specializations against their combinatorial meanings.
pub fn suite_spec_q(cfg: &VerifyConfig) -> Result<VerifyReport> {
    let mut failures = Vec::new();
    let instances = for_each_grid_x(cfg, |x| {
        let r = specialization_report(x, &cfg.caps)?;
        if !r.consistent {
            failures.push(format!(
                "x={x:?}: at1={} at0={} at-1={} expected {} / {} / |{}|",
                r.at_one, r.at_zero, r.at_minus_one, r.count_check, r.maximal_check, r.beta_check
            ));
        }
        Ok(())
    })?;
    Ok(VerifyReport {
        identity: "spec-q".into(),
        instances,
        failures,
    })
}

/// Exceptional count equalities for the complete bipartite graphs.
pub fn suite_exceptional(cfg: &VerifyConfig) -> Result<VerifyReport> {
    let mut failures = Vec::new();
    let mut instances = 0u64;
    for a in 1..=2u64 {
        for m in 2..=3usize {
            let r = exceptional_count_check(a, m, &cfg.caps)?;
            instances += 1;
            if !r.counts_match {
                failures.push(format!(
                    "a={a} m={m}: counts {} / {} vs formula {}",
                    r.graph_count, r.vector_count, r.formula
                ));
            }
            // the sets coincide only in the degenerate m = 2 case, where the
            // bipartite graph is a cycle
            if r.sets_equal != (m == 2) {
                failures.push(format!(
                    "a={a} m={m}: set equality {} unexpected",
                    r.sets_equal
                ));
            }
        }
    }
    Ok(VerifyReport {
        identity: "exceptional".into(),
        instances,
        failures,
    })
}

/// Classification against the invariance decision, with set equality of the
/// matched vector's parking functions for every invariant graph.
pub fn suite_classify(cfg: &VerifyConfig) -> Result<VerifyReport> {
    let mut failures = Vec::new();
    let instances = for_each_connected_multigraph(cfg.max_n, cfg.weight_range, |g| {
        let invariant = is_sn_invariant(g, &cfg.caps)?;
        let class = classify(g, &cfg.caps)?;
        if class.is_invariant() != invariant {
            failures.push(format!(
                "{}: classify {:?} vs invariant {invariant}",
                g.to_json(),
                class.tag
            ));
            return Ok(());
        }
        if let Some(x) = &class.matched_x {
            let gp = enumerate_graphical_pf(g, &cfg.caps)?;
            let vp = enumerate_vector_pf(x, &cfg.caps)?;
            if gp != vp {
                failures.push(format!(
                    "{}: PF(G) has {} members, PF({x:?}) has {}",
                    g.to_json(),
                    gp.len(),
                    vp.len()
                ));
            }
        }
        Ok(())
    })?;
    Ok(VerifyReport {
        identity: "classify".into(),
        instances,
        failures,
    })
}
