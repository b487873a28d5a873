//! Degree sequences, the cycle lemma and depth-first tree decoding.

use crate::error::SampleError;

/// `2n+1` even outdegrees summing to `2n`, in any cyclic rotation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeSequence {
    values: Vec<usize>,
}

impl DegreeSequence {
    pub fn new(values: Vec<usize>) -> Result<Self, SampleError> {
        let len = values.len();
        let sum: usize = values.iter().sum();
        let n = len.saturating_sub(1) / 2;
        if len.is_multiple_of(2) || sum != 2 * n || values.iter().any(|v| v % 2 != 0) {
            return Err(SampleError::BadSequence { n, len, sum });
        }
        Ok(DegreeSequence { values })
    }

    pub(crate) fn from_parts(values: Vec<usize>) -> Self {
        debug_assert!(DegreeSequence::new(values.clone()).is_ok());
        DegreeSequence { values }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Number of map edges, `(len - 1) / 2`.
    pub fn n(&self) -> usize {
        (self.values.len() - 1) / 2
    }

    /// The sequence read from index `start`, cyclically.
    pub fn rotated(&self, start: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.values.len());
        out.extend_from_slice(&self.values[start..]);
        out.extend_from_slice(&self.values[..start]);
        out
    }
}

/// The unique rotation start whose walk `Σ (d_i - 1)` stays nonnegative
/// until it reaches `-1` at the last step: one past the first position where
/// the unrotated walk attains its minimum.
pub fn cycle_shift(seq: &DegreeSequence) -> usize {
    let mut walk: i64 = 0;
    let mut best = i64::MAX;
    let mut at = 0;
    for (i, &d) in seq.values.iter().enumerate() {
        walk += d as i64 - 1;
        if walk < best {
            best = walk;
            at = i + 1;
        }
    }
    at % seq.values.len()
}

/// Ordered tree stored as its depth-first outdegree sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedTree {
    outdegrees: Vec<usize>,
}

pub(crate) fn is_lukasiewicz(seq: &[usize]) -> bool {
    let mut walk: i64 = 0;
    for (i, &d) in seq.iter().enumerate() {
        walk += d as i64 - 1;
        if walk < 0 && i + 1 != seq.len() {
            return false;
        }
    }
    !seq.is_empty() && walk == -1
}

impl OrderedTree {
    pub fn outdegrees(&self) -> &[usize] {
        &self.outdegrees
    }

    pub fn num_nodes(&self) -> usize {
        self.outdegrees.len()
    }

    pub fn num_edges(&self) -> usize {
        self.outdegrees.len() - 1
    }

    /// Children of each node, left to right.
    pub fn children(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.outdegrees.len()];
        let mut stack: Vec<(usize, usize)> = Vec::new();
        for (i, &d) in self.outdegrees.iter().enumerate() {
            if let Some(top) = stack.last_mut() {
                out[top.0].push(i);
                top.1 -= 1;
                if top.1 == 0 {
                    stack.pop();
                }
            }
            if d > 0 {
                stack.push((i, d));
            }
        }
        out
    }
}

/// Decodes a depth-first outdegree sequence.
pub fn tree_from_degrees(seq: &[usize]) -> Result<OrderedTree, SampleError> {
    if !is_lukasiewicz(seq) {
        return Err(SampleError::NotLukasiewicz);
    }
    Ok(OrderedTree { outdegrees: seq.to_vec() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn shift_examples() {
        let s = DegreeSequence::new(vec![0, 2, 0]).unwrap();
        assert_eq!(cycle_shift(&s), 1);
        assert_eq!(s.rotated(1), vec![2, 0, 0]);
        assert_eq!(cycle_shift(&DegreeSequence::new(vec![2, 0, 0]).unwrap()), 0);
    }

    #[test]
    fn bad_length_rejected() {
        assert!(matches!(
            DegreeSequence::new(vec![0, 0, 4, 0, 2]),
            Err(SampleError::BadSequence { len: 5, sum: 6, .. })
        ));
        assert!(DegreeSequence::new(vec![1, 1, 0]).is_err());
    }

    #[test]
    fn decode_examples() {
        let t = tree_from_degrees(&[2, 0, 0]).unwrap();
        assert_eq!(t.children(), vec![vec![1, 2], vec![], vec![]]);
        let t = tree_from_degrees(&[2, 2, 0, 0, 0]).unwrap();
        assert_eq!(t.children()[0], vec![1, 4]);
        assert_eq!(t.children()[1], vec![2, 3]);
        let t = tree_from_degrees(&[4, 0, 0, 0, 0]).unwrap();
        assert_eq!(t.children()[0], vec![1, 2, 3, 4]);
        assert_eq!(tree_from_degrees(&[0, 2, 0]).unwrap_err(), SampleError::NotLukasiewicz);
    }

    // every even sequence of length 2n+1 with sum 2n, n ≤ 3
    fn all_sequences(n: usize) -> Vec<Vec<usize>> {
        fn rec(len: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == len {
                if left == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            let mut d = 0;
            while d <= left {
                cur.push(d);
                rec(len, left - d, cur, out);
                cur.pop();
                d += 2;
            }
        }
        let mut out = Vec::new();
        rec(2 * n + 1, 2 * n, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn exactly_one_valid_rotation_exhaustive() {
        for n in 1..=3 {
            for v in all_sequences(n) {
                let seq = DegreeSequence::new(v.clone()).unwrap();
                let valid: Vec<usize> = (0..v.len()).filter(|&r| is_lukasiewicz(&seq.rotated(r))).collect();
                assert_eq!(valid, vec![cycle_shift(&seq)], "{v:?}");
            }
        }
    }

    proptest! {
        #[test]
        fn shift_always_yields_a_tree(halves in proptest::collection::vec(0usize..4, 1..40)) {
            // pad with zeros to length 2n+1 where n = sum of halves
            let n: usize = halves.iter().sum();
            prop_assume!(n >= 1 && halves.len() <= 2 * n + 1);
            let mut v: Vec<usize> = halves.iter().map(|h| 2 * h).collect();
            v.resize(2 * n + 1, 0);
            let seq = DegreeSequence::new(v).unwrap();
            let r = cycle_shift(&seq);
            let t = tree_from_degrees(&seq.rotated(r)).unwrap();
            prop_assert_eq!(t.num_edges(), 2 * n);
        }
    }
}
