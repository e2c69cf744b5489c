//! Cycle matroids of multigraphs.

use std::collections::BTreeSet;

use super::Matroid;
use crate::error::{Error, Result};
use crate::subset;

/// Undirected multigraph; an edge `(v, v)` is a loop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        subset::check_ground(edges.len())?;
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= vertices || v >= vertices) {
            return Err(Error::ElementOutOfRange { element: u.max(v), n: vertices });
        }
        Ok(Self { vertices, edges })
    }

    /// Complete graph with edges in lexicographic order `01, 02, …`.
    pub fn complete(k: usize) -> Result<Self> {
        let edges = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
        Self::new(k, edges)
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_loop(&self, e: usize) -> bool {
        let (u, v) = self.edges[e];
        u == v
    }

    /// Whether the edge set `s` contains no cycle.
    fn acyclic(&self, s: u64) -> bool {
        let mut parent: Vec<usize> = (0..self.vertices).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        subset::elems(s).all(|e| {
            let (u, v) = self.edges[e];
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            parent[a] = b;
            a != b
        })
    }
}

/// Bases are the maximal spanning forests, enumerated among subsets of size
/// `|V| − #components`.
pub fn graphic_matroid(g: &Graph) -> Matroid {
    let n = g.edges.len();
    let forest = {
        let mut s = 0u64;
        for e in 0..n {
            if g.acyclic(s | 1 << e) {
                s |= 1 << e;
            }
        }
        s
    };
    let r = forest.count_ones() as usize;
    let bases: BTreeSet<u64> = subset::k_subsets(n, r).filter(|&s| g.acyclic(s)).collect();
    Matroid::from_bases_unchecked(n, bases)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_graphs() {
        assert_eq!(graphic_matroid(&Graph::complete(3).unwrap()), Matroid::uniform(2, 3).unwrap());
        assert_eq!(graphic_matroid(&Graph::complete(4).unwrap()).num_bases(), 16);
        let digon = Graph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert_eq!(graphic_matroid(&digon), Matroid::uniform(1, 2).unwrap());
        let with_loop = Graph::new(2, vec![(0, 1), (1, 1)]).unwrap();
        let m = graphic_matroid(&with_loop);
        assert!(m.is_loop(1) && m.is_coloop(0));
        assert!(Graph::new(2, vec![(0, 2)]).is_err());
    }

    #[test]
    fn forests_of_disconnected_graphs() {
        let g = Graph::new(4, vec![(0, 1), (2, 3), (2, 3)]).unwrap();
        let m = graphic_matroid(&g);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.num_bases(), 2);
    }
}
