//! Vector DFS-burning: the graph is grown while it burns, and the output is
//! a rooted plane tree with a bounded edge labeling and an admissible vertex
//! order.
//!
//! ```sh
//! cargo run --example burn_vector
//! ```

use parkfn::burning::{build_gx, vec_dfs_burn_traced, vec_dfs_unburn, VecBurnOutcome};
use parkfn::parking::rsum_vector;
use parkfn::tree::kappa;

fn main() {
    let x = [1u64, 3, 1];
    let alpha = [2u64, 0, 2];
    println!("x = {x:?}, alpha = {alpha:?}");
    println!("auxiliary multigraph G_x: {}\n", build_gx(&x).to_json());

    let (outcome, events) = vec_dfs_burn_traced(&x, &alpha).unwrap();
    for e in &events {
        println!("  {}", e.to_json_line());
    }

    match outcome {
        VecBurnOutcome::Complete(r) => {
            println!("\nplane tree: {:?}", r.tree.parents());
            println!("edge labels: {:?}", r.labels.labels());
            println!("admissible order (smallest first): {:?}", r.order.sequence());

            let gx = build_gx(&x);
            let k = kappa(&gx, r.tree.tree(), &r.order).unwrap();
            let rsum = rsum_vector(&alpha, &x).unwrap();
            println!("\nkappa(G_x) = {k}, label sum = {}, rsum = {rsum}", r.labels.sum());
            assert_eq!(rsum, k + r.labels.sum());

            let back = vec_dfs_unburn(&x, &r).unwrap();
            println!("inverse algorithm recovers alpha: {back:?}");
            assert_eq!(back, alpha.to_vec());
        }
        VecBurnOutcome::Stuck { unburnt } => {
            println!("not an x-parking function; unburnt = {unburnt:?}");
        }
    }

    // (1,1) is not a parking function for x = (1,1)
    let (outcome, _) = vec_dfs_burn_traced(&[1, 1], &[1, 1]).unwrap();
    if let VecBurnOutcome::Stuck { unburnt } = outcome {
        println!("\n(1,1) fails for x = (1,1); unburnt = {unburnt:?}");
    }
}
