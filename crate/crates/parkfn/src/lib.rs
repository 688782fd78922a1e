//! Exact-arithmetic combinatorics of parking functions and tree inversions.
//!
//! The crate revolves around four depth-first-search burning algorithms and
//! the enumerator identities they prove:
//!
//! - [`burning::mg_dfs_burn`] / [`burning::mg_dfs_unburn`] biject G-parking
//!   functions of a multigraph with edge-labeled spanning trees, matching the
//!   reversed-sum statistic with `kappa + sum of labels`.
//! - [`burning::vec_dfs_burn`] / [`burning::vec_dfs_unburn`] biject x-parking
//!   functions with triples (rooted plane tree, bounded edge labeling,
//!   admissible vertex order), via the auxiliary multigraph
//!   [`burning::build_gx`].
//! - [`enumerators`] computes every closed-form reversed-sum enumerator
//!   (tree-side, composition-side, brute-force) as an exact [`qpoly::QPoly`]
//!   so each identity can be checked as polynomial equality.
//! - [`classify`] decides which multigraphs have permutation-invariant
//!   parking sets and names the matching vector.
//!
//! Every enumeration is deterministic (lexicographic output order) and all
//! arithmetic is arbitrary precision. See the `examples/` directory for a
//! runnable tour of each capability, or the `parkfn` binary for the batch
//! verification interface.

pub mod burning;
pub mod classify;
pub mod cli;
pub mod enumerators;
pub mod graph;
pub mod parking;
pub mod qpoly;
pub mod tree;
mod util;
pub mod verify;

/// Size limits for the enumerative operations.
///
/// Catalan and Cayley growth make unbounded enumeration a footgun; every
/// operation that materializes a combinatorial family checks these caps and
/// returns [`Error::CapExceeded`] instead of thrashing.
#[derive(Debug, Clone)]
pub struct Caps {
    /// Largest number of non-root vertices / vector length.
    pub max_n: usize,
    /// Largest edge weight accepted when constructing graphs from input.
    pub max_weight: u64,
    /// Bound on the candidate space scanned by set enumerations.
    pub max_pf_set_size: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_n: 8,
            max_weight: 64,
            max_pf_set_size: 10_000_000,
        }
    }
}

impl Caps {
    pub(crate) fn check_n(&self, n: usize) -> Result<()> {
        if n > self.max_n {
            return Err(Error::CapExceeded {
                what: "n",
                value: n as u64,
                cap: self.max_n as u64,
            });
        }
        Ok(())
    }

    pub(crate) fn check_set_size(&self, what: &'static str, value: u64) -> Result<()> {
        if value > self.max_pf_set_size {
            return Err(Error::CapExceeded {
                what,
                value,
                cap: self.max_pf_set_size,
            });
        }
        Ok(())
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("length mismatch: got {got}, expected {expected}")]
    LengthMismatch { got: usize, expected: usize },
    #[error("multigraph is not connected")]
    Disconnected,
    #[error("cap exceeded: {what} = {value} exceeds {cap}")]
    CapExceeded {
        what: &'static str,
        value: u64,
        cap: u64,
    },
    #[error("sequence is not a parking function for the given data")]
    NotParking,
    #[error("vertex order is not admissible for the tree")]
    NotAdmissible,
    #[error("tree does not span the multigraph")]
    NotSpanning,
    #[error("edge label {label} out of range: weight is {weight}")]
    LabelOutOfRange { label: u64, weight: u64 },
    #[error("not a valid outdegree composition: {0}")]
    InvalidComposition(String),
    #[error("invalid tree: {0}")]
    InvalidTree(String),
    #[error("invalid vertex order: {0}")]
    InvalidOrder(String),
    #[error("invalid multigraph: {0}")]
    InvalidGraph(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("malformed JSON: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
