//! The reversed-sum enumerator computed along independent routes, and the
//! identities tying them together as exact polynomial equalities.
//!
//! ```sh
//! cargo run --example enumerator_identities
//! ```

use parkfn::enumerators::{
    corollary_count, inversion_enum_labeled_trees, pitman_stanley_count,
    rsum_enum_graphical_brute, rsum_enum_kungyan, rsum_enum_main, rsum_enum_tree_side,
    rsum_enum_vector_brute,
};
use parkfn::graph::Multigraph;
use parkfn::tree::VertexOrder;
use parkfn::Caps;

fn main() {
    let caps = Caps::default();

    let x = [1u64, 3, 1];
    let brute = rsum_enum_vector_brute(&x, &caps).unwrap();
    let main = rsum_enum_main(&x, &caps).unwrap();
    let kungyan = rsum_enum_kungyan(&x, &caps).unwrap();
    println!("x = {x:?}");
    println!("  brute over PF(x):        {brute}");
    println!("  plane-tree formula:      {main}");
    println!("  composition formula:     {kungyan}");
    assert_eq!(brute, main);
    assert_eq!(main, kungyan);

    println!(
        "  count by formula pair:   {} = {}",
        pitman_stanley_count(&x, &caps).unwrap(),
        corollary_count(&x, &caps).unwrap()
    );

    // the classical case: reversed sums of parking functions against
    // inversions of labeled trees
    for n in 1..=5usize {
        let ones = vec![1u64; n];
        let pf = rsum_enum_vector_brute(&ones, &caps).unwrap();
        let trees = inversion_enum_labeled_trees(n, &caps).unwrap();
        assert_eq!(pf, trees);
        println!("n = {n}: inversion enumerator {trees}");
    }

    // graphical identity on a multigraph, via two different vertex orders
    let g = Multigraph::from_edges(
        4,
        &[(0, 1, 2), (1, 2, 2), (2, 3, 2), (2, 4, 1), (3, 4, 1), (0, 4, 3)],
    )
    .unwrap();
    let brute = rsum_enum_graphical_brute(&g, &caps).unwrap();
    println!("\ngraph: {}", g.to_json());
    println!("  brute over PF(G):        {brute}");
    for order in [
        VertexOrder::natural(4),
        VertexOrder::new(vec![3, 1, 4, 2]).unwrap(),
    ] {
        let tree_side = rsum_enum_tree_side(&g, &order, &caps).unwrap();
        println!("  tree side, order {:?}: {tree_side}", order.sequence());
        assert_eq!(brute, tree_side);
    }
}
