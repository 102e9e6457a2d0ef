//! Level-ancestor queries on a static rooted tree.
//!
//! Nodes are numbered in preorder and grouped by depth. The ancestor of `u`
//! at depth `d` is the node at depth `d` with the largest preorder number
//! not exceeding that of `u`, found by binary search. Linear preprocessing,
//! `O(log n)` query.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct LevelAncestor {
    parent: Vec<Option<usize>>,
    depth: Vec<u32>,
    preorder: Vec<u32>,
    // nodes grouped by depth, each group in preorder
    level_start: Vec<u32>,
    by_level: Vec<u32>,
    root: usize,
}

impl LevelAncestor {
    /// Builds the index from a parent array; `None` marks the root, and
    /// there must be exactly one.
    pub fn new(parent: Vec<Option<usize>>) -> Result<Self> {
        let n = parent.len();
        if n == 0 || n >= u32::MAX as usize {
            return Err(Error::InvalidTree);
        }
        let mut root = None;
        let mut child_count = vec![0u32; n + 1];
        for (v, p) in parent.iter().enumerate() {
            match *p {
                None if root.is_some() => return Err(Error::InvalidTree),
                None => root = Some(v),
                Some(p) if p >= n || p == v => return Err(Error::InvalidTree),
                Some(p) => child_count[p + 1] += 1,
            }
        }
        let root = root.ok_or(Error::InvalidTree)?;

        // children in CSR layout
        for v in 0..n {
            child_count[v + 1] += child_count[v];
        }
        let child_start = child_count;
        let mut fill = child_start.clone();
        let mut children = vec![0u32; n - 1];
        for (v, p) in parent.iter().enumerate() {
            if let Some(p) = *p {
                children[fill[p] as usize] = v as u32;
                fill[p] += 1;
            }
        }

        let mut depth = vec![0u32; n];
        let mut preorder = vec![u32::MAX; n];
        let mut order = Vec::with_capacity(n);
        let mut stack = vec![root as u32];
        while let Some(v) = stack.pop() {
            let v = v as usize;
            preorder[v] = order.len() as u32;
            order.push(v as u32);
            let (lo, hi) = (child_start[v] as usize, child_start[v + 1] as usize);
            for &c in children[lo..hi].iter().rev() {
                depth[c as usize] = depth[v] + 1;
                stack.push(c);
            }
        }
        if order.len() != n {
            // some node is not reachable from the root: a cycle
            return Err(Error::InvalidTree);
        }

        let max_depth = depth.iter().copied().max().unwrap_or(0) as usize;
        let mut level_start = vec![0u32; max_depth + 2];
        for &d in &depth {
            level_start[d as usize + 1] += 1;
        }
        for d in 0..=max_depth {
            level_start[d + 1] += level_start[d];
        }
        let mut fill = level_start.clone();
        let mut by_level = vec![0u32; n];
        for &v in &order {
            let d = depth[v as usize] as usize;
            by_level[fill[d] as usize] = v;
            fill[d] += 1;
        }

        Ok(LevelAncestor { parent, depth, preorder, level_start, by_level, root })
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, u: usize) -> Result<Option<usize>> {
        self.parent.get(u).copied().ok_or(Error::UnknownNode { node: u })
    }

    pub fn depth(&self, u: usize) -> Result<usize> {
        self.depth.get(u).map(|&d| d as usize).ok_or(Error::UnknownNode { node: u })
    }

    /// The ancestor of `u` at depth `d` (`u` itself when `d = depth(u)`), or
    /// `None` when `d > depth(u)`.
    pub fn query(&self, u: usize, d: usize) -> Result<Option<usize>> {
        let du = self.depth(u)?;
        if d > du {
            return Ok(None);
        }
        if d == du {
            return Ok(Some(u));
        }
        let level = &self.by_level[self.level_start[d] as usize..self.level_start[d + 1] as usize];
        let pu = self.preorder[u];
        let idx = level.partition_point(|&v| self.preorder[v as usize] <= pu);
        Ok(Some(level[idx - 1] as usize))
    }
}
