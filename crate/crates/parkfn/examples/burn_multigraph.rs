//! Multigraph DFS-burning: run the algorithm on a weighted graph, watch the
//! event trace, and check the reversed-sum identity
//! `rsum = kappa + sum of edge labels`.
//!
//! ```sh
//! cargo run --example burn_multigraph
//! ```

use parkfn::burning::{mg_dfs_burn_traced, mg_dfs_unburn, BurnOutcome};
use parkfn::graph::Multigraph;
use parkfn::parking::rsum_graphical;
use parkfn::tree::{kappa, VertexOrder};

fn main() {
    // five vertices rooted at 0, parallel edges as weights
    let g = Multigraph::from_edges(
        4,
        &[(0, 1, 2), (1, 2, 2), (2, 3, 2), (2, 4, 1), (3, 4, 1), (0, 4, 3)],
    )
    .unwrap();
    let order = VertexOrder::natural(4);
    let alpha = [1u64, 2, 0, 0];

    println!("graph: {}", g.to_json());
    println!("alpha: {alpha:?}  (chips on vertices 1..=4)\n");

    let (outcome, events) = mg_dfs_burn_traced(&g, &order, &alpha).unwrap();
    for e in &events {
        println!("  {}", e.to_json_line());
    }

    match outcome {
        BurnOutcome::Spanning { tree, labels } => {
            println!("\nspanning tree (parent per vertex): {:?}", tree.parents());
            println!("edge labels (surviving parallel copies): {:?}", labels.labels());

            let k = kappa(&g, &tree, &order).unwrap();
            let rsum = rsum_graphical(&alpha, &g).unwrap();
            println!("\nkappa = {k}, label sum = {}, rsum = {rsum}", labels.sum());
            assert_eq!(rsum, k + labels.sum());

            let back = mg_dfs_unburn(&g, &order, &tree, &labels).unwrap();
            println!("inverse algorithm recovers alpha: {back:?}");
            assert_eq!(back, alpha.to_vec());
        }
        BurnOutcome::Stuck { unburnt } => {
            println!("not a parking function; certificate U = {unburnt:?}");
        }
    }

    // a sequence that cannot park: the full degree vector
    let degrees: Vec<u64> = (1..=4).map(|i| g.degree(i)).collect();
    let (outcome, _) = mg_dfs_burn_traced(&g, &order, &degrees).unwrap();
    if let BurnOutcome::Stuck { unburnt } = outcome {
        println!("\ndegree vector {degrees:?} fails with certificate {unburnt:?}");
    }
}
