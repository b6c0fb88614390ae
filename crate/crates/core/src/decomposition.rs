//! Tree decompositions and their validation.

use std::fmt;

use serde::Serialize;

use crate::graph::SimpleGraph;
use crate::Vertex;

/// Bags indexed by tree node, plus the tree's edges.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct TreeDecomposition {
    pub bags: Vec<Vec<Vertex>>,
    pub edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    pub fn new(bags: Vec<Vec<Vertex>>, edges: Vec<(usize, usize)>) -> Self {
        Self { bags, edges }
    }

    /// One bag holding every vertex.
    pub fn trivial(n: usize) -> Self {
        Self { bags: vec![(0..n).collect()], edges: Vec::new() }
    }

    /// Largest bag size minus one; `-1` for no bags.
    pub fn width(&self) -> isize {
        self.bags.iter().map(Vec::len).max().map_or(-1, |m| m as isize - 1)
    }
}

/// First violated condition found by [`validate_tree_decomposition`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Violation {
    NotATree,
    UnknownVertex(Vertex),
    VertexMissing(Vertex),
    VertexDisconnected(Vertex),
    EdgeUncovered(Vertex, Vertex),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotATree => write!(f, "bag graph is not a tree"),
            Violation::UnknownVertex(v) => write!(f, "bag mentions unknown vertex {v}"),
            Violation::VertexMissing(v) => write!(f, "vertex {v} is in no bag"),
            Violation::VertexDisconnected(v) => {
                write!(f, "bags containing vertex {v} are not connected in the tree")
            }
            Violation::EdgeUncovered(u, v) => write!(f, "no bag contains both ends of edge {u}-{v}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Validation {
    pub width: isize,
    pub violation: Option<Violation>,
}

impl Validation {
    pub fn is_valid(&self) -> bool {
        self.violation.is_none()
    }
}

fn is_tree(nodes: usize, edges: &[(usize, usize)]) -> bool {
    if nodes == 0 || edges.len() != nodes - 1 {
        return false;
    }
    let mut parent: Vec<usize> = (0..nodes).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &(a, b) in edges {
        if a >= nodes || b >= nodes {
            return false;
        }
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return false;
        }
        parent[ra] = rb;
    }
    true
}

/// Checks that the bags form a tree, that each vertex's bags are nonempty
/// and connected in it, and that every edge shares a bag.
///
/// A vertex's bag set is a subforest, so it is connected exactly when it
/// spans one fewer tree edge than it has nodes.
pub fn validate_tree_decomposition(g: &SimpleGraph, td: &TreeDecomposition) -> Validation {
    let width = td.width();
    let fail = |v| Validation { width, violation: Some(v) };
    let n = g.num_vertices();
    if n == 0 && td.bags.is_empty() {
        return Validation { width, violation: None };
    }
    if !is_tree(td.bags.len(), &td.edges) {
        return fail(Violation::NotATree);
    }
    let mut in_bag: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (t, bag) in td.bags.iter().enumerate() {
        for &v in bag {
            if v >= n {
                return fail(Violation::UnknownVertex(v));
            }
            if in_bag[v].last() != Some(&t) {
                in_bag[v].push(t);
            }
        }
    }
    if let Some(v) = (0..n).find(|&v| in_bag[v].is_empty()) {
        return fail(Violation::VertexMissing(v));
    }
    let mut spanned = vec![0usize; n];
    let mut member = vec![usize::MAX; n];
    for &(a, b) in &td.edges {
        for &v in &td.bags[a] {
            member[v] = a;
        }
        for &v in &td.bags[b] {
            if member[v] == a {
                spanned[v] += 1;
                member[v] = usize::MAX;
            }
        }
        for &v in &td.bags[a] {
            member[v] = usize::MAX;
        }
    }
    if let Some(v) = (0..n).find(|&v| spanned[v] + 1 != in_bag[v].len()) {
        return fail(Violation::VertexDisconnected(v));
    }
    for (u, v) in g.edges() {
        let (a, b) = (&in_bag[u], &in_bag[v]);
        let (mut i, mut j) = (0, 0);
        let mut shared = false;
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    shared = true;
                    break;
                }
            }
        }
        if !shared {
            return fail(Violation::EdgeUncovered(u, v));
        }
    }
    Validation { width, violation: None }
}

/// Tree decomposition produced by the recursive net search, together with
/// the constant `KB` it certifies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionTree {
    pub td: TreeDecomposition,
    pub width: isize,
    pub kb: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> SimpleGraph {
        SimpleGraph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn trivial_is_valid() {
        let td = TreeDecomposition::trivial(4);
        let v = validate_tree_decomposition(&c4(), &td);
        assert!(v.is_valid());
        assert_eq!(v.width, 3);
    }

    #[test]
    fn dropped_vertex_is_named() {
        let td = TreeDecomposition::new(vec![vec![0, 1, 2], vec![0, 2]], vec![(0, 1)]);
        let v = validate_tree_decomposition(&c4(), &td);
        assert_eq!(v.violation, Some(Violation::VertexMissing(3)));
    }

    #[test]
    fn width_two_for_cycle() {
        let td = TreeDecomposition::new(vec![vec![0, 1, 2], vec![0, 2, 3]], vec![(0, 1)]);
        assert!(validate_tree_decomposition(&c4(), &td).is_valid());
        assert_eq!(td.width(), 2);
    }

    #[test]
    fn disconnected_occurrence() {
        let td = TreeDecomposition::new(
            vec![vec![0, 1], vec![1, 2], vec![2, 3, 0]],
            vec![(0, 1), (1, 2)],
        );
        assert_eq!(
            validate_tree_decomposition(&c4(), &td).violation,
            Some(Violation::VertexDisconnected(0))
        );
    }

    #[test]
    fn uncovered_edge_and_bad_tree() {
        let td = TreeDecomposition::new(vec![vec![0, 1, 2], vec![2, 3]], vec![(0, 1)]);
        assert_eq!(
            validate_tree_decomposition(&c4(), &td).violation,
            Some(Violation::EdgeUncovered(0, 3))
        );
        let cyc = TreeDecomposition::new(vec![vec![0, 1, 2, 3]; 3], vec![(0, 1), (1, 2), (2, 0)]);
        assert_eq!(validate_tree_decomposition(&c4(), &cyc).violation, Some(Violation::NotATree));
        let forest = TreeDecomposition::new(vec![vec![0, 1, 2, 3]; 2], vec![]);
        assert_eq!(validate_tree_decomposition(&c4(), &forest).violation, Some(Violation::NotATree));
    }
}
