use crate::error::{Error, Result};

/// Directed friendship network on `n` actors stored as a dense adjacency.
///
/// `has_tie(i, j)` says nothing about `has_tie(j, i)`. Self-ties cannot be set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectedNetwork {
    n: usize,
    ties: Vec<bool>,
}

impl DirectedNetwork {
    pub fn empty(n: usize) -> Self {
        DirectedNetwork {
            n,
            ties: vec![false; n * n],
        }
    }

    /// Builds a network from `(ego, alter)` pairs.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut net = Self::empty(n);
        for &(i, j) in edges {
            if i >= n || j >= n {
                return Err(Error::Dimension(format!("edge ({i}, {j}) outside 0..{n}")));
            }
            if i == j {
                return Err(Error::Dimension(format!("self-tie at {i}")));
            }
            net.ties[i * n + j] = true;
        }
        Ok(net)
    }

    /// Wraps a row-major adjacency; the diagonal is forced to `false`.
    pub(crate) fn from_adjacency(n: usize, mut ties: Vec<bool>) -> Self {
        debug_assert_eq!(ties.len(), n * n);
        for i in 0..n {
            ties[i * n + i] = false;
        }
        DirectedNetwork { n, ties }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_tie(&self, i: usize, j: usize) -> bool {
        self.ties[i * self.n + j]
    }

    /// Row `i` of the adjacency.
    #[inline]
    pub fn row(&self, i: usize) -> &[bool] {
        &self.ties[i * self.n..(i + 1) * self.n]
    }

    pub fn tie_count(&self) -> usize {
        self.ties.iter().filter(|&&t| t).count()
    }

    pub fn out_degree(&self, i: usize) -> usize {
        self.row(i).iter().filter(|&&t| t).count()
    }

    pub fn in_degree(&self, j: usize) -> usize {
        (0..self.n).filter(|&i| self.has_tie(i, j)).count()
    }

    /// Alters named by ego `i`, ascending.
    pub fn alters(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(i).iter().enumerate().filter_map(|(j, &t)| t.then_some(j))
    }

    /// All ties in row-major `(ego, alter)` order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| self.alters(i).map(move |j| (i, j)))
    }

    /// Ties present in both `self` and `other`.
    pub fn intersection(&self, other: &DirectedNetwork) -> Result<DirectedNetwork> {
        if self.n != other.n {
            return Err(Error::Dimension(format!("networks of size {} and {}", self.n, other.n)));
        }
        let ties = self.ties.iter().zip(&other.ties).map(|(&a, &b)| a && b).collect();
        Ok(DirectedNetwork { n: self.n, ties })
    }
}
