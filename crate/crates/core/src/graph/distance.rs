use super::{bits, full_mask, Graph, GraphError};

/// All-pairs hop distances of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    d: Vec<u32>,
}

impl DistanceTable {
    /// Level-synchronous BFS from every vertex using bitset frontiers.
    pub fn new(g: &Graph) -> Result<Self, GraphError> {
        let n = g.order();
        let all = full_mask(n);
        let mut d = vec![0u32; n * n];
        for s in 0..n {
            let mut seen = 1u64 << s;
            let mut frontier = seen;
            let mut level = 0;
            while frontier != 0 {
                level += 1;
                let mut next = 0;
                for v in bits(frontier) {
                    next |= g.neighbors(v);
                }
                frontier = next & !seen;
                seen |= frontier;
                for t in bits(frontier) {
                    d[s * n + t] = level;
                }
            }
            if seen != all {
                return Err(GraphError::Disconnected);
            }
        }
        Ok(DistanceTable { n, d })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.d[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.d[i * self.n..(i + 1) * self.n]
    }

    pub fn diameter(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }

    pub fn transmissions(&self) -> Vec<u64> {
        (0..self.n)
            .map(|i| self.row(i).iter().map(|&x| u64::from(x)).sum())
            .collect()
    }
}
