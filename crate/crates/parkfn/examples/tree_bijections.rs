//! Catalan objects and the bijections among them: rooted plane trees,
//! outdegree compositions, admissible vertex orders, and labeled trees.
//!
//! ```sh
//! cargo run --example tree_bijections
//! ```

use parkfn::tree::{
    enumerate_avo, enumerate_rpt, gamma_to_rpt, inversions, labeled_to_plane_pair,
    plane_pair_to_labeled, rpt_to_gamma, Composition, RootedTree,
};
use parkfn::Caps;

fn main() {
    let caps = Caps::default();

    for n in 1..=6usize {
        let trees = enumerate_rpt(n, &caps).unwrap();
        let comps = Composition::enumerate(n);
        let pairs: usize = trees.iter().map(|t| enumerate_avo(t).len()).sum();
        println!(
            "n = {n}: {} plane trees, {} compositions, {} (tree, order) pairs",
            trees.len(),
            comps.len(),
            pairs
        );
        assert_eq!(trees.len(), comps.len());
        assert_eq!(pairs as u64, (n as u64 + 1).pow(n as u32 - 1));
    }

    // outdegree sequences determine plane trees
    let comp = Composition::new(vec![2, 0, 2, 0]).unwrap();
    let tree = gamma_to_rpt(&comp).unwrap();
    println!("\ngamma {:?} -> parents {:?}", comp.gamma(), tree.parents());
    assert_eq!(rpt_to_gamma(&tree), comp);

    // a labeled tree, its canonical plane pair, and back
    let labeled = RootedTree::from_parents(vec![4, 0, 4, 7, 2, 5, 0, 2]).unwrap();
    let (plane, order) = labeled_to_plane_pair(&labeled);
    println!("\nlabeled tree parents: {:?}", labeled.parents());
    println!("plane tree parents:   {:?}", plane.parents());
    println!("admissible order:     {:?}", order.sequence());
    println!(
        "inversions: {} (preserved through the correspondence)",
        inversions(&labeled).len()
    );
    let back = plane_pair_to_labeled(&plane, &order).unwrap();
    assert_eq!(back, labeled);
}
