//! Evaluations of the reversed-sum enumerator at q = 1, 0, -1, the weakly
//! increasing identity, and the exceptional bipartite count coincidence.
//!
//! ```sh
//! cargo run --example specializations
//! ```

use parkfn::enumerators::{
    exceptional_count_check, rsum_enum_increasing, specialization_report,
};
use parkfn::Caps;

fn main() {
    let caps = Caps::default();

    for x in [&[1u64, 1][..], &[1, 1, 1], &[2, 1], &[1, 3, 1]] {
        let r = specialization_report(x, &caps).unwrap();
        println!("x = {x:?}: {}", r.to_json());
        assert!(r.consistent);
    }

    println!();
    for x in [&[2u64, 1][..], &[1, 3, 1], &[2, 2, 2]] {
        let both = rsum_enum_increasing(x, &caps).unwrap();
        println!("weakly increasing, x = {x:?}:");
        println!("  parking side:   {}", both.parking_side);
        println!("  partition side: {}", both.partition_side);
        assert_eq!(both.parking_side, both.partition_side);
    }

    println!();
    for a in 1..=2u64 {
        for m in 2..=3usize {
            let r = exceptional_count_check(a, m, &caps).unwrap();
            println!(
                "K^{a}_{{{m},{m}}} vs (a,0,a,...): counts {} = {} = {}, sets equal: {}",
                r.graph_count, r.vector_count, r.formula, r.sets_equal
            );
            assert!(r.counts_match);
        }
    }
}
