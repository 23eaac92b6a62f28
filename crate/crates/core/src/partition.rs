//! Partitions of a finite universe `0..n` and the union-find used to build them.

use std::collections::VecDeque;

/// Disjoint-set forest with union by size and path halving.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl UnionFind {
    pub fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, x: u32) -> u32 {
        let mut x = x;
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = p;
        }
        x
    }

    /// Returns true if the two classes were distinct and got merged.
    pub fn union(&mut self, x: u32, y: u32) -> bool {
        let mut xr = self.find(x);
        let mut yr = self.find(y);
        if xr == yr {
            return false;
        }
        if self.size[xr as usize] < self.size[yr as usize] {
            std::mem::swap(&mut xr, &mut yr);
        }
        self.parent[yr as usize] = xr;
        self.size[xr as usize] += self.size[yr as usize];
        true
    }

    pub fn same(&mut self, x: u32, y: u32) -> bool {
        self.find(x) == self.find(y)
    }
}

/// A partition of `0..n` in canonical form: every block is sorted and blocks
/// are ordered by their minimum element, so two equal partitions compare and
/// hash identically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    block_of: Vec<u32>,
    blocks: Vec<Vec<u32>>,
}

impl Partition {
    pub fn identity(n: usize) -> Partition {
        Partition {
            block_of: (0..n as u32).collect(),
            blocks: (0..n as u32).map(|x| vec![x]).collect(),
        }
    }

    pub fn universal(n: usize) -> Partition {
        Partition {
            block_of: vec![0; n],
            blocks: vec![(0..n as u32).collect()],
        }
    }

    pub fn from_union_find(uf: &mut UnionFind, n: usize) -> Partition {
        let mut sets: Vec<Vec<u32>> = vec![Vec::new(); n];
        for x in 0..n as u32 {
            let r = uf.find(x);
            sets[r as usize].push(x);
        }
        let blocks: Vec<Vec<u32>> = sets.into_iter().filter(|b| !b.is_empty()).collect();
        Partition::from_blocks(n, blocks)
    }

    /// Builds from explicit blocks; they must be disjoint and cover `0..n`.
    pub fn from_blocks(n: usize, mut blocks: Vec<Vec<u32>>) -> Partition {
        for b in blocks.iter_mut() {
            b.sort_unstable();
        }
        blocks.sort_by_key(|b| b[0]);
        let mut block_of = vec![u32::MAX; n];
        for (i, b) in blocks.iter().enumerate() {
            for &x in b {
                assert_eq!(block_of[x as usize], u32::MAX, "blocks overlap at {x}");
                block_of[x as usize] = i as u32;
            }
        }
        assert!(
            block_of.iter().all(|&b| b != u32::MAX),
            "blocks do not cover the universe"
        );
        Partition { block_of, blocks }
    }

    pub fn n(&self) -> usize {
        self.block_of.len()
    }

    pub fn block_index(&self, x: u32) -> u32 {
        self.block_of[x as usize]
    }

    pub fn same_block(&self, x: u32, y: u32) -> bool {
        self.block_of[x as usize] == self.block_of[y as usize]
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn block_of_element(&self, x: u32) -> &[u32] {
        &self.blocks[self.block_of[x as usize] as usize]
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_identity(&self) -> bool {
        self.blocks.len() == self.n()
    }

    pub fn is_universal(&self) -> bool {
        self.blocks.len() == 1
    }

    /// Refinement order: `self <= other` iff every block of `self` lies inside
    /// a block of `other`.
    pub fn leq(&self, other: &Partition) -> bool {
        assert_eq!(self.n(), other.n());
        self.blocks
            .iter()
            .all(|b| b.iter().all(|&x| other.same_block(b[0], x)))
    }

    /// Join in the partition lattice: finest partition coarser than both.
    pub fn join(&self, other: &Partition) -> Partition {
        assert_eq!(self.n(), other.n());
        let mut uf = UnionFind::new(self.n());
        for b in self.blocks.iter().chain(other.blocks.iter()) {
            for w in b.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        Partition::from_union_find(&mut uf, self.n())
    }

    /// One line per block, element ids separated by spaces, blocks ordered by
    /// minimum element.
    pub fn render_blocks(&self) -> String {
        let mut out = String::new();
        for b in &self.blocks {
            let line: Vec<String> = b.iter().map(|x| x.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Compact single-line form `0,1|2|3,4` used in check reports.
    pub fn render_inline(&self) -> String {
        self.blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join("|")
    }
}

/// Worklist used by congruence closures: pairs merged but not yet translated.
pub type PairQueue = VecDeque<(u32, u32)>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn union_find_merges() {
        let mut uf = UnionFind::new(5);
        assert!(uf.union(0, 1));
        assert!(!uf.union(1, 0));
        assert!(uf.union(3, 4));
        assert!(uf.same(0, 1));
        assert!(!uf.same(1, 2));
        let p = Partition::from_union_find(&mut uf, 5);
        assert_eq!(p.block_count(), 3);
        assert!(p.same_block(3, 4));
    }

    #[test]
    fn canonical_equality() {
        let a = Partition::from_blocks(4, vec![vec![2, 3], vec![1, 0]]);
        let b = Partition::from_blocks(4, vec![vec![0, 1], vec![3, 2]]);
        assert_eq!(a, b);
        assert!(Partition::identity(4).leq(&a));
        assert!(a.leq(&Partition::universal(4)));
        assert!(!a.leq(&Partition::identity(4)));
    }

    #[test]
    fn join_is_least_upper_bound() {
        let a = Partition::from_blocks(4, vec![vec![0, 1], vec![2], vec![3]]);
        let b = Partition::from_blocks(4, vec![vec![1, 2], vec![0], vec![3]]);
        let j = a.join(&b);
        assert_eq!(
            j,
            Partition::from_blocks(4, vec![vec![0, 1, 2], vec![3]])
        );
    }
}
