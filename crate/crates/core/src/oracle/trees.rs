//! Even-outdegree plane trees with their map weights.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::count::{count_maps, count_two_connected};
use crate::error::OracleError;
use crate::sampler::{tree_from_degrees, OrderedTree};

/// Largest `n` (map edges, i.e. `2n` tree edges) enumerated exhaustively.
pub const TREE_CAP: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedTree {
    pub tree: OrderedTree,
    pub weight: BigUint,
}

fn check_cap(n: usize) -> Result<(), OracleError> {
    if n == 0 || n > TREE_CAP {
        return Err(OracleError::AboveCap { n, cap: TREE_CAP });
    }
    Ok(())
}

/// Every ordered tree with `2n` edges and even outdegrees, in lexicographic
/// order of the depth-first outdegree sequence.
pub fn enum_even_trees(n: usize) -> Result<Vec<OrderedTree>, OracleError> {
    check_cap(n)?;
    fn rec(len: usize, open: i64, cur: &mut Vec<usize>, out: &mut Vec<OrderedTree>) {
        // `open` = 1 + Σ (d - 1) so far: slots still waiting for a node
        let left = len - cur.len();
        if left == 0 {
            if open == 0 {
                out.push(tree_from_degrees(cur).expect("valid by construction"));
            }
            return;
        }
        if open <= 0 {
            return;
        }
        let mut d = 0;
        // remaining nodes must fill the open slots
        while (open - 1 + d as i64) <= (left - 1) as i64 {
            cur.push(d);
            rec(len, open - 1 + d as i64, cur, out);
            cur.pop();
            d += 2;
        }
    }
    let mut out = Vec::new();
    rec(2 * n + 1, 1, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Number of even-outdegree trees with `e` edges, by a memoized recursion
/// on the root degree and the sizes of the subtrees (independent of
/// [`enum_even_trees`]).
pub fn count_even_trees(e: usize) -> BigUint {
    // trees[e] and forests[j][e]: j trees, e edges in total
    let mut trees = vec![BigUint::zero(); e + 1];
    let mut forests = vec![vec![BigUint::zero(); e + 1]; e + 1];
    forests[0][0] = BigUint::one();
    for total in 0..=e {
        // a tree with `total` edges: even root degree d, forest of d trees with total - d edges
        let mut t = BigUint::zero();
        let mut d = 0;
        while d <= total {
            t += &forests[d][total - d];
            d += 2;
        }
        trees[total] = t;
        for j in 1..=e {
            let mut f = BigUint::zero();
            for first in 0..=total {
                f += &trees[first] * &forests[j - 1][total - first];
            }
            forests[j][total] = f;
        }
    }
    trees[e].clone()
}

/// `∏_v C_{outdeg(v)/2}`: the number of maps with this block tree shape.
pub fn tree_weight(outdegrees: &[usize]) -> Result<BigUint, OracleError> {
    let mut w = BigUint::one();
    for &d in outdegrees {
        if d % 2 != 0 {
            return Err(OracleError::OddOutdegree(d));
        }
        w *= count_two_connected(d / 2);
    }
    Ok(w)
}

pub fn weighted_trees(n: usize) -> Result<Vec<WeightedTree>, OracleError> {
    enum_even_trees(n)?
        .into_iter()
        .map(|tree| Ok(WeightedTree { weight: tree_weight(tree.outdegrees())?, tree }))
        .collect()
}

/// `Σ_t m(t) = M_n`.
pub fn weight_sum_check(n: usize) -> Result<bool, OracleError> {
    let total: BigUint = weighted_trees(n)?.iter().map(|w| &w.weight).sum();
    Ok(total == count_maps(n))
}

/// A law on nonnegative integers with exact probabilities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactLaw {
    pub probs: BTreeMap<usize, BigRational>,
}

impl ExactLaw {
    pub fn total(&self) -> BigRational {
        self.probs.values().fold(BigRational::zero(), |a, b| a + b)
    }

    pub fn mean(&self) -> BigRational {
        self.probs
            .iter()
            .fold(BigRational::zero(), |acc, (&v, p)| acc + p * BigRational::from_integer(BigInt::from(v)))
    }

    pub fn prob(&self, v: usize) -> BigRational {
        self.probs.get(&v).cloned().unwrap_or_else(BigRational::zero)
    }

    /// `{"2": "1/9", "1": "8/9"}` keyed by value.
    pub fn to_json(&self) -> Value {
        let map: serde_json::Map<String, Value> = self
            .probs
            .iter()
            .map(|(v, p)| (v.to_string(), json!(format!("{}/{}", p.numer(), p.denom()))))
            .collect();
        Value::Object(map)
    }
}

/// `P(T_n = t) = m(t) / M_n` for every tree `t`.
pub fn exact_tree_law(n: usize) -> Result<Vec<(OrderedTree, BigRational)>, OracleError> {
    let total = BigInt::from(count_maps(n));
    Ok(weighted_trees(n)?
        .into_iter()
        .map(|w| (w.tree, BigRational::new(BigInt::from(w.weight), total.clone())))
        .collect())
}

/// Exact law of `L_{n,k}`, the `k`-th largest half-outdegree (0 when there
/// are fewer than `k` blocks).
pub fn exact_block_law(n: usize, k: usize) -> Result<ExactLaw, OracleError> {
    assert!(k >= 1, "k counts from 1");
    let mut probs: BTreeMap<usize, BigRational> = BTreeMap::new();
    for (tree, p) in exact_tree_law(n)? {
        let mut sizes: Vec<usize> = tree.outdegrees().iter().filter(|&&d| d > 0).map(|d| d / 2).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        let v = sizes.get(k - 1).copied().unwrap_or(0);
        *probs.entry(v).or_insert_with(BigRational::zero) += p;
    }
    Ok(ExactLaw { probs })
}
