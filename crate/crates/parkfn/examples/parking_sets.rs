//! Membership, enumeration, and maximal elements for the two kinds of
//! parking functions.
//!
//! ```sh
//! cargo run --example parking_sets
//! ```

use parkfn::graph::Multigraph;
use parkfn::parking::{
    enumerate_graphical_pf, enumerate_increasing_vector_pf, enumerate_vector_pf, is_graphical_pf,
    is_vector_pf, maximal_graphical_pf, maximal_vector_pf, staircase, GpfCheck,
};
use parkfn::Caps;

fn main() {
    let caps = Caps::default();

    let x = [1u64, 3, 1];
    println!("PF(x) for x = {x:?}:");
    let members = enumerate_vector_pf(&x, &caps).unwrap();
    println!("  {} members, first few: {:?}", members.len(), &members[..4]);
    println!("  staircase: {:?}", staircase(&x).unwrap());
    println!("  maximal members: {:?}", maximal_vector_pf(&x));
    println!(
        "  weakly increasing members: {:?}",
        enumerate_increasing_vector_pf(&x, &caps).unwrap()
    );
    assert!(is_vector_pf(&[2, 0, 2], &x).unwrap());
    assert!(!is_vector_pf(&[3, 3, 3], &x).unwrap());

    let g = Multigraph::complete_split(3, 1, 2);
    println!("\nPF(G) for the split-complete graph {}:", g.to_json());
    let members = enumerate_graphical_pf(&g, &caps).unwrap();
    println!("  {} members", members.len());
    println!("  maximal members: {:?}", maximal_graphical_pf(&g, &caps).unwrap());

    // membership runs the burning algorithm; failures carry a certificate
    match is_graphical_pf(&[5, 5, 5], &g).unwrap() {
        GpfCheck::Member => unreachable!("degree-exceeding chips cannot park"),
        GpfCheck::NotMember { certificate } => {
            println!("  (5,5,5) rejected with certificate U = {certificate:?}");
        }
    }

    // parking sets are empty exactly when the graph is disconnected
    let disconnected = Multigraph::from_edges(2, &[(0, 1, 1)]).unwrap();
    assert!(enumerate_graphical_pf(&disconnected, &caps).unwrap().is_empty());
    println!("\ndisconnected graph: PF(G) is empty");
}
