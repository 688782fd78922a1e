//! Which multigraphs have permutation-invariant parking sets, and which
//! vector matches each one.
//!
//! ```sh
//! cargo run --example classify_graphs
//! ```

use parkfn::classify::{classify, is_sn_invariant};
use parkfn::graph::Multigraph;
use parkfn::parking::{enumerate_graphical_pf, enumerate_vector_pf};
use parkfn::Caps;

fn main() {
    let caps = Caps::default();

    let star = Multigraph::from_edges(3, &[(0, 1, 3), (0, 2, 3), (0, 3, 3)]).unwrap();
    let cycle = Multigraph::from_edges(3, &[(0, 1, 2), (1, 2, 2), (2, 3, 2), (0, 3, 2)]).unwrap();
    let split = Multigraph::complete_split(3, 2, 3);
    let lopsided = Multigraph::from_edges(2, &[(0, 1, 1), (1, 2, 2)]).unwrap();

    for (name, g) in [
        ("uniform star", &star),
        ("uniform 4-cycle", &cycle),
        ("split-complete K^{2,3}_4", &split),
        ("path with weights (1,2)", &lopsided),
    ] {
        let c = classify(g, &caps).unwrap();
        println!("{name}: {}", c.to_json());
        assert_eq!(c.is_invariant(), is_sn_invariant(g, &caps).unwrap());
        if let Some(x) = &c.matched_x {
            // the classification names a vector with the same parking set
            let graph_side = enumerate_graphical_pf(g, &caps).unwrap();
            let vector_side = enumerate_vector_pf(x, &caps).unwrap();
            assert_eq!(graph_side, vector_side);
            println!("  PF(G) = PF({x:?}), {} members", graph_side.len());
        }
    }
}
