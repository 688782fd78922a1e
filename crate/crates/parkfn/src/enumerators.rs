//! Reversed-sum enumerators and counting formulas, each computed along an
//! independent route so identities can be checked as exact polynomial
//! equalities.
//!
//! Three expressions for the vector enumerator coexist:
//!
//! - [`rsum_enum_vector_brute`]: direct enumeration of `PF(x)`;
//! - [`rsum_enum_main`]: sum over rooted plane trees with admissible vertex
//!   orders, each order contributing `q` to the weight of its inversions and
//!   each vertex a q-number factor per child;
//! - [`rsum_enum_kungyan`]: sum over outdegree compositions with multinomial
//!   coefficients and an explicit exponent shift.
//!
//! The graphical enumerator likewise has a brute route and the spanning-tree
//! route [`rsum_enum_tree_side`] weighted by the kappa statistic.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::graph::{spanning_trees, Multigraph};
use crate::parking;
use crate::qpoly::{q_number, QPoly};
use crate::tree::{
    enumerate_avo, enumerate_labeled_trees, enumerate_rpt, inversions, kappa, order_inversions,
    Composition, VertexOrder,
};
use crate::util::next_permutation;
use crate::{Caps, Error, Result};

/// `n! / (gamma_1! ... gamma_k!)` exactly.
pub fn multinomial(gamma: &[usize]) -> BigInt {
    let n: usize = gamma.iter().sum();
    let mut value = factorial(n);
    for &g in gamma {
        value /= factorial(g);
    }
    value
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Number of permutations of `{1..n}` whose descent set is exactly `s`,
/// by direct scan over the symmetric group.
pub fn descent_set_count(n: usize, s: &BTreeSet<usize>) -> BigInt {
    let mut perm: Vec<u64> = (1..=n as u64).collect();
    let mut count = BigInt::zero();
    loop {
        let descents: BTreeSet<usize> = (1..n).filter(|&i| perm[i - 1] > perm[i]).collect();
        if descents == *s {
            count += 1;
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    count
}

/// `sum over PF(x) of q^rsum`, by direct enumeration. This is the reference
/// oracle the closed forms are tested against.
pub fn rsum_enum_vector_brute(x: &[u64], caps: &Caps) -> Result<QPoly> {
    let mut poly = QPoly::zero();
    for alpha in parking::enumerate_vector_pf(x, caps)? {
        poly += &QPoly::q_power(parking::rsum_vector(&alpha, x)?);
    }
    Ok(poly)
}

/// `sum over PF(G) of q^rsum`, by direct enumeration.
pub fn rsum_enum_graphical_brute(g: &Multigraph, caps: &Caps) -> Result<QPoly> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut poly = QPoly::zero();
    for alpha in parking::enumerate_graphical_pf(g, caps)? {
        poly += &QPoly::q_power(parking::rsum_graphical(&alpha, g)?);
    }
    Ok(poly)
}

/// Spanning-tree expression for the graphical enumerator:
/// `sum over spanning trees T of q^kappa(G,T,order) * prod [w(e)]_q`.
/// The value does not depend on the order.
pub fn rsum_enum_tree_side(g: &Multigraph, order: &VertexOrder, caps: &Caps) -> Result<QPoly> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if order.n() != g.n() {
        return Err(Error::LengthMismatch {
            got: order.n(),
            expected: g.n(),
        });
    }
    let mut total = QPoly::zero();
    for tree in spanning_trees(g, caps)? {
        let mut term = QPoly::q_power(kappa(g, &tree, order)?);
        for (p, c) in tree.edges() {
            term = &term * &q_number(g.weight(p, c));
        }
        total += &term;
    }
    Ok(total)
}

/// Plane-tree expression for the vector enumerator: over each plane tree,
/// admissible orders contribute `q^(sum of x_{par(i)+1} over inversions)` and
/// every vertex a factor `[x_i]_q^outdeg(i-1)`.
pub fn rsum_enum_main(x: &[u64], caps: &Caps) -> Result<QPoly> {
    let n = x.len();
    if n == 0 {
        return Ok(QPoly::one());
    }
    caps.check_n(n)?;
    let mut total = QPoly::zero();
    for tree in enumerate_rpt(n, caps)? {
        let mut order_sum = QPoly::zero();
        for order in enumerate_avo(&tree) {
            let exponent: u64 = order_inversions(&tree, &order)
                .into_iter()
                .map(|(i, _)| x[tree.parent(i)])
                .sum();
            order_sum += &QPoly::q_power(exponent);
        }
        let mut term = order_sum;
        for v in 0..n {
            term = &term * &q_number(x[v]).pow(tree.outdeg(v));
        }
        total += &term;
    }
    Ok(total)
}

/// Composition expression for the vector enumerator:
/// `sum over gamma of n!/gamma! * q^(sum (prefix_i - i) x_{i+1}) * prod [x_i]^gamma_i`.
pub fn rsum_enum_kungyan(x: &[u64], caps: &Caps) -> Result<QPoly> {
    let n = x.len();
    caps.check_n(n)?;
    let mut total = QPoly::zero();
    for comp in Composition::enumerate(n) {
        let gamma = comp.gamma();
        let mut exponent = 0u64;
        let mut prefix = 0u64;
        for i in 1..n {
            prefix += gamma[i - 1] as u64;
            exponent += (prefix - i as u64) * x[i];
        }
        let mut term = QPoly::monomial(exponent, multinomial(gamma));
        for i in 0..n {
            term = &term * &q_number(x[i]).pow(gamma[i]);
        }
        total += &term;
    }
    Ok(total)
}

/// Number of x-parking functions as the composition-indexed polynomial
/// `sum over gamma of n!/gamma! * prod x_i^gamma_i`.
pub fn pitman_stanley_count(x: &[u64], caps: &Caps) -> Result<BigInt> {
    let n = x.len();
    caps.check_n(n)?;
    let mut total = BigInt::zero();
    for comp in Composition::enumerate(n) {
        let gamma = comp.gamma();
        let mut term = multinomial(gamma);
        for i in 0..n {
            term *= BigInt::from(x[i]).pow(gamma[i] as u32);
        }
        total += term;
    }
    Ok(total)
}

/// Number of x-parking functions as the plane-tree sum
/// `n! * sum over T of prod x_i^outdeg(i-1) / outdeg(i-1)!`, computed in
/// exact rationals with a final integrality check.
pub fn corollary_count(x: &[u64], caps: &Caps) -> Result<BigInt> {
    let n = x.len();
    if n == 0 {
        return Ok(BigInt::one());
    }
    caps.check_n(n)?;
    let mut total = BigRational::zero();
    for tree in enumerate_rpt(n, caps)? {
        let mut term = BigRational::one();
        for v in 0..n {
            let d = tree.outdeg(v);
            term *= BigRational::new(BigInt::from(x[v]).pow(d as u32), factorial(d));
        }
        total += term;
    }
    total *= BigRational::from_integer(factorial(n));
    if !total.is_integer() {
        return Err(Error::InvalidInput(
            "tree sum did not produce an integer".into(),
        ));
    }
    Ok(total.to_integer())
}

/// Inversion enumerator for labeled trees on `n+1` vertices.
pub fn inversion_enum_labeled_trees(n: usize, caps: &Caps) -> Result<QPoly> {
    if n == 0 {
        return Ok(QPoly::one());
    }
    let mut poly = QPoly::zero();
    for tree in enumerate_labeled_trees(n, caps)? {
        poly += &QPoly::q_power(inversions(&tree).len() as u64);
    }
    Ok(poly)
}

/// Both sides of the weakly increasing identity: the reversed-sum enumerator
/// over weakly increasing x-parking functions, and the complement-size
/// enumerator over partitions contained in the staircase.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncreasingEnum {
    pub parking_side: QPoly,
    pub partition_side: QPoly,
}

pub fn rsum_enum_increasing(x: &[u64], caps: &Caps) -> Result<IncreasingEnum> {
    let mut parking_side = QPoly::zero();
    for alpha in parking::enumerate_increasing_vector_pf(x, caps)? {
        parking_side += &QPoly::q_power(parking::rsum_vector(&alpha, x)?);
    }

    let mut partition_side = QPoly::zero();
    if let Some(increasing) = parking::staircase(x) {
        // paper's convention: weakly decreasing staircase
        let lambda: Vec<u64> = increasing.into_iter().rev().collect();
        let size: u64 = lambda.iter().sum();
        // walk partitions mu contained in lambda
        fn rec(i: usize, prev: u64, acc: u64, lambda: &[u64], size: u64, out: &mut QPoly) {
            if i == lambda.len() {
                *out += &QPoly::q_power(size - acc);
                return;
            }
            for m in 0..=prev.min(lambda[i]) {
                rec(i + 1, m, acc + m, lambda, size, out);
            }
        }
        rec(0, u64::MAX, 0, &lambda, size, &mut partition_side);
    } else if x.is_empty() {
        partition_side = QPoly::one();
    }

    Ok(IncreasingEnum {
        parking_side,
        partition_side,
    })
}

/// Evaluations of the vector enumerator at `q = 1, 0, -1` against their
/// combinatorial meanings: the parking-function count, the maximal-element
/// count, and (up to sign) a descent-set count.
///
/// When `x_1` is even (the smallest staircase entry is odd) the alternating
/// sum vanishes; otherwise its absolute value is the number of permutations
/// whose descent set consists of the positions `i` with `x_1 + ... + x_{i+1}`
/// even.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecializationReport {
    pub at_one: BigInt,
    pub at_zero: BigInt,
    pub at_minus_one: BigInt,
    /// What the count formula says `at_one` must be.
    pub count_check: BigInt,
    /// What the staircase permutations say `at_zero` must be.
    pub maximal_check: BigInt,
    /// What the descent-set count says `|at_minus_one|` must be.
    pub beta_check: BigInt,
    pub consistent: bool,
}

impl SpecializationReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "at1": self.at_one.to_string(),
            "at0": self.at_zero.to_string(),
            "atMinus1": self.at_minus_one.to_string(),
            "count_check": self.count_check.to_string(),
            "maximal_check": self.maximal_check.to_string(),
            "beta_check": self.beta_check.to_string(),
            "consistent": self.consistent,
        })
    }
}

pub fn specialization_report(x: &[u64], caps: &Caps) -> Result<SpecializationReport> {
    let n = x.len();
    let poly = rsum_enum_vector_brute(x, caps)?;
    let at_one = poly.eval(&BigInt::one());
    let at_zero = poly.eval(&BigInt::zero());
    let at_minus_one = poly.eval(&BigInt::from(-1));

    let count_check = pitman_stanley_count(x, caps)?;
    let maximal_check = BigInt::from(parking::maximal_vector_pf(x).len());
    let beta_check = if n == 0 {
        BigInt::one()
    } else if x[0] % 2 == 0 {
        // includes x_1 = 0, where the enumerator itself vanishes
        BigInt::zero()
    } else {
        let mut prefix = x[0];
        let mut descents = BTreeSet::new();
        for i in 1..n {
            prefix += x[i];
            if prefix % 2 == 0 {
                descents.insert(i);
            }
        }
        descent_set_count(n, &descents)
    };
    let consistent =
        at_one == count_check && at_zero == maximal_check && at_minus_one.abs() == beta_check;
    Ok(SpecializationReport {
        at_one,
        at_zero,
        at_minus_one,
        count_check,
        maximal_check,
        beta_check,
        consistent,
    })
}

/// The exceptional count coincidence between the complete bipartite graph
/// `K^a_{m,m}` and the alternating vector `(a, 0, a, 0, ..., a)`: both park
/// `a^(2m-1) m^(2m-2)` sequences, without the sets being equal in general.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExceptionalReport {
    pub a: u64,
    pub m: usize,
    pub graph_count: BigInt,
    pub vector_count: BigInt,
    pub formula: BigInt,
    pub counts_match: bool,
    pub sets_equal: bool,
}

impl ExceptionalReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "a": self.a,
            "m": self.m,
            "graph_count": self.graph_count.to_string(),
            "vector_count": self.vector_count.to_string(),
            "formula": self.formula.to_string(),
            "counts_match": self.counts_match,
            "sets_equal": self.sets_equal,
        })
    }
}

pub fn exceptional_count_check(a: u64, m: usize, caps: &Caps) -> Result<ExceptionalReport> {
    if a == 0 || m < 2 {
        return Err(Error::InvalidInput("need a >= 1 and m >= 2".into()));
    }
    let n = 2 * m - 1;
    caps.check_n(n)?;
    let graph = Multigraph::bipartite_even_odd(m, a);
    let y: Vec<u64> = (0..n).map(|i| if i % 2 == 0 { a } else { 0 }).collect();
    let graph_set = parking::enumerate_graphical_pf(&graph, caps)?;
    let vector_set = parking::enumerate_vector_pf(&y, caps)?;
    let formula = BigInt::from(a).pow((2 * m - 1) as u32) * BigInt::from(m).pow((2 * m - 2) as u32);
    let graph_count = BigInt::from(graph_set.len());
    let vector_count = BigInt::from(vector_set.len());
    let counts_match = graph_count == formula && vector_count == formula;
    let sets_equal = graph_set == vector_set;
    Ok(ExceptionalReport {
        a,
        m,
        graph_count,
        vector_count,
        formula,
        counts_match,
        sets_equal,
    })
}
