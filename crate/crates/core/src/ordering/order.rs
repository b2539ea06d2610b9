use alloc::vec;
use alloc::vec::Vec;

use super::OrderError;

/// A linear order of the vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearOrder {
    sequence: Vec<usize>,
    position: Vec<usize>,
}

impl LinearOrder {
    /// Builds an order from the vertices listed first to last.
    pub fn from_sequence(sequence: Vec<usize>) -> Result<Self, OrderError> {
        let n = sequence.len();
        let mut position = vec![usize::MAX; n];
        for (i, &v) in sequence.iter().enumerate() {
            if v >= n || position[v] != usize::MAX {
                return Err(OrderError::NotAPermutation(n));
            }
            position[v] = i;
        }
        Ok(Self { sequence, position })
    }

    /// The order `0, 1, …, n-1`.
    pub fn identity(n: usize) -> Self {
        Self {
            sequence: (0..n).collect(),
            position: (0..n).collect(),
        }
    }

    /// Number of ordered vertices.
    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    /// Whether the order is empty.
    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    /// Vertices from first to last.
    pub fn sequence(&self) -> &[usize] {
        &self.sequence
    }

    /// Rank of every vertex, indexed by vertex.
    pub fn positions(&self) -> &[usize] {
        &self.position
    }

    /// Rank of `v`.
    pub fn rank(&self, v: usize) -> usize {
        self.position[v]
    }

    /// The same vertices, last to first.
    pub fn reversed(&self) -> Self {
        let mut sequence = self.sequence.clone();
        sequence.reverse();
        Self::from_sequence(sequence).expect("reversal keeps a permutation")
    }

    pub(crate) fn check_size(&self, n: usize) -> Result<(), OrderError> {
        if self.len() == n {
            Ok(())
        } else {
            Err(OrderError::SizeMismatch {
                order: self.len(),
                graph: n,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions_invert_sequence() {
        let order = LinearOrder::from_sequence(vec![2, 0, 3, 1]).unwrap();
        assert_eq!(order.positions(), &[1, 3, 0, 2]);
        assert!((0..4).all(|v| order.sequence()[order.rank(v)] == v));
        assert_eq!(order.reversed().sequence(), &[1, 3, 0, 2]);
    }

    #[test]
    fn rejects_non_permutations() {
        assert_eq!(
            LinearOrder::from_sequence(vec![0, 0]),
            Err(OrderError::NotAPermutation(2))
        );
        assert!(LinearOrder::from_sequence(vec![0, 2]).is_err());
        assert!(LinearOrder::from_sequence(Vec::new()).unwrap().is_empty());
    }
}
