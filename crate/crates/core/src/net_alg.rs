//! Minimum net covers through 0/1-weighted shortest paths in the face graph.
//!
//! Every face-graph edge becomes two opposite arcs; an arc costs 1 when it
//! enters an original vertex and 0 when it enters a face vertex. A cheapest
//! vine of the face graph is the union of three shortest paths from a common
//! root to the three sides, and its original vertices form a minimum cover of
//! the net.

use std::collections::VecDeque;

use serde::Serialize;

use crate::frame::{Color, Frame3};
use crate::plane_graph::{build_face_graph, FaceGraph, PlaneGraph};
use crate::{Error, Result, Vertex};

const INF: u32 = u32::MAX;

/// Symmetric digraph of the face graph with 0/1 arc weights given by the
/// head vertex.
#[derive(Debug, Clone)]
pub struct WeightedDigraph {
    adj: Vec<Vec<Vertex>>,
    weight: Vec<u8>,
}

impl WeightedDigraph {
    pub fn from_face_graph(fg: &FaceGraph) -> Self {
        let g = fg.graph();
        let adj = (0..g.num_vertices())
            .map(|v| {
                let mut r = g.rotation(v).to_vec();
                r.sort_unstable();
                r
            })
            .collect();
        let weight = (0..g.num_vertices()).map(|v| u8::from(fg.is_original(v))).collect();
        Self { adj, weight }
    }

    pub fn num_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn arc_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }

    /// Weight of vertex `v`, which is also the weight of every arc into `v`.
    pub fn weight(&self, v: Vertex) -> u32 {
        u32::from(self.weight[v])
    }

    /// Out-neighbours of `v` in increasing id order.
    pub fn arcs(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    /// Deque search from a set of sources at distance 0.
    fn distances(&self, sources: &[Vertex]) -> Vec<u32> {
        let mut dist = vec![INF; self.adj.len()];
        let mut deque = VecDeque::with_capacity(self.adj.len());
        for &s in sources {
            if dist[s] != 0 {
                dist[s] = 0;
                deque.push_back(s);
            }
        }
        while let Some(u) = deque.pop_front() {
            let du = dist[u];
            for &v in &self.adj[u] {
                let w = self.weight(v);
                let nd = du + w;
                if nd < dist[v] {
                    dist[v] = nd;
                    if w == 0 {
                        deque.push_front(v);
                    } else {
                        deque.push_back(v);
                    }
                }
            }
        }
        dist
    }
}

/// Shortest 0/1 distances from one source, with the smallest-id predecessor
/// on some shortest path for every other reachable vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceRow {
    pub source: Vertex,
    pub dist: Vec<u32>,
    pub parent: Vec<Option<Vertex>>,
}

impl DistanceRow {
    /// Path from the source to `target`, both included.
    pub fn path_to(&self, target: Vertex) -> Vec<Vertex> {
        let mut path = vec![target];
        let mut v = target;
        while let Some(p) = self.parent[v] {
            path.push(p);
            v = p;
        }
        path.reverse();
        path
    }
}

pub fn sssp_01(d: &WeightedDigraph, source: Vertex) -> DistanceRow {
    let dist = d.distances(&[source]);
    let parent = (0..d.num_vertices())
        .map(|v| {
            if v == source || dist[v] == INF {
                return None;
            }
            let w = d.weight(v);
            // arcs are symmetric, so in-neighbours are the out-neighbours
            d.arcs(v).iter().copied().find(|&u| dist[u] != INF && dist[u] + w == dist[v])
        })
        .collect();
    DistanceRow { source, dist, parent }
}

/// Root plus three shortest paths to the blue, red and yellow sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VineTree {
    pub root: Vertex,
    /// Paths in blue, red, yellow order; each starts at the root.
    pub paths: [Vec<Vertex>; 3],
    /// Union of the path vertices, sorted (face-graph ids).
    pub vine: Vec<Vertex>,
    /// Number of original vertices in the vine.
    pub cost: usize,
}

/// Picks, for each side, the side vertex nearest to the row's source (ties to
/// the smallest id) and follows predecessors back to the source.
pub fn extract_vine_tree(fg: &FaceGraph, row: &DistanceRow, frame: &Frame3) -> VineTree {
    let paths = Color::ALL.map(|c| {
        let target = frame
            .side(c)
            .into_iter()
            .min_by_key(|&u| (row.dist[u], u))
            .expect("sides are nonempty");
        row.path_to(target)
    });
    let mut vine: Vec<Vertex> = paths.iter().flatten().copied().collect();
    vine.sort_unstable();
    vine.dedup();
    let cost = vine.iter().filter(|&&v| fg.is_original(v)).count();
    VineTree { root: row.source, paths, vine, cost }
}

/// How the per-root side distances `b(i)`, `r(i)`, `y(i)` are obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NetAlgRoute {
    /// One shortest-path search per face-graph vertex, then a scan of each
    /// side: quadratic overall.
    PerSource,
    /// Three multi-source searches, one from each side. Distances are
    /// reversed with `delta(v, u) = delta(u, v) + 1_G(u) - 1_G(v)`: linear.
    #[default]
    SideSweep,
}

/// Minimum cover of the net framed by `frame`, with its witnessing vine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NetCover {
    pub order: usize,
    /// Original vertices of the witness vine, sorted.
    pub cover: Vec<Vertex>,
    pub tree: VineTree,
    /// `b + r + y + 1_G` at the chosen root.
    pub root_score: u32,
    pub face_graph: FaceGraph,
}

impl NetCover {
    pub fn center(&self) -> Vertex {
        self.tree.root
    }
}

/// Root scores `d(i) = b(i) + r(i) + y(i) + 1_G(v_i)` for every face-graph vertex.
pub fn root_scores(fg: &FaceGraph, frame: &Frame3, route: NetAlgRoute) -> Vec<u32> {
    let dg = WeightedDigraph::from_face_graph(fg);
    let s = dg.num_vertices();
    let sides = Color::ALL.map(|c| frame.side(c));
    match route {
        NetAlgRoute::PerSource => (0..s)
            .map(|i| {
                let dist = dg.distances(&[i]);
                let side_min = |side: &[Vertex]| side.iter().map(|&u| dist[u]).min().expect("nonempty");
                sides.iter().map(|side| side_min(side)).sum::<u32>() + dg.weight(i)
            })
            .collect(),
        NetAlgRoute::SideSweep => {
            let sweeps = sides.each_ref().map(|side| dg.distances(side));
            (0..s)
                .map(|i| sweeps.iter().map(|d| d[i]).sum::<u32>() + 3 - 2 * dg.weight(i))
                .collect()
        }
    }
}

pub fn net_alg(g: &PlaneGraph, frame: &Frame3) -> Result<NetCover> {
    net_alg_with(g, frame, NetAlgRoute::default())
}

pub fn net_alg_with(g: &PlaneGraph, frame: &Frame3, route: NetAlgRoute) -> Result<NetCover> {
    if !frame.belongs_to(g) {
        return Err(Error::FrameMismatch);
    }
    let fg = build_face_graph(g);
    let scores = root_scores(&fg, frame, route);
    let (root_score, center) = scores
        .iter()
        .enumerate()
        .map(|(i, &d)| (d, i))
        .min()
        .expect("face graph has a vertex");
    let dg = WeightedDigraph::from_face_graph(&fg);
    let row = sssp_01(&dg, center);
    let tree = extract_vine_tree(&fg, &row, frame);
    let cover: Vec<Vertex> = tree.vine.iter().copied().filter(|&v| fg.is_original(v)).collect();
    Ok(NetCover { order: cover.len(), cover, tree, root_score, face_graph: fg })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::{is_vine, make_frame, verify_cover};
    use crate::generate::{generate, Family};

    fn digraph(g: &PlaneGraph) -> (FaceGraph, WeightedDigraph) {
        let fg = build_face_graph(g);
        let dg = WeightedDigraph::from_face_graph(&fg);
        (fg, dg)
    }

    #[test]
    fn arc_weights_follow_head() {
        let g = generate(Family::SquareGrid(2)).unwrap();
        let (fg, dg) = digraph(&g);
        assert_eq!(dg.arc_count(), 2 * fg.graph().num_edges());
        let row = sssp_01(&dg, 4);
        assert_eq!(&row.dist[..4], &[1, 1, 1, 1]);
        assert_eq!(row.dist[4], 0);
    }

    #[test]
    fn cycle_distances() {
        let g = generate(Family::Cycle(15)).unwrap();
        let (_, dg) = digraph(&g);
        let row = sssp_01(&dg, 0);
        // through the single face vertex, every cycle vertex is one step away
        assert!(row.dist[1..15].iter().all(|&d| d == 1));
        let face = sssp_01(&dg, 15);
        assert!(face.dist[..15].iter().all(|&d| d == 1));

        // without the face vertex the distances run along the cycle
        let path = WeightedDigraph {
            adj: (0..15).map(|i| {
                let mut r = vec![(i + 1) % 15, (i + 14) % 15];
                r.sort_unstable();
                r
            }).collect(),
            weight: vec![1; 15],
        };
        assert_eq!(sssp_01(&path, 0).dist[7], 7);
    }

    #[test]
    fn cycle_fifteen_net() {
        let g = generate(Family::Cycle(15)).unwrap();
        let f = make_frame(&g, 5, 10).unwrap();
        let res = net_alg(&g, &f).unwrap();
        assert_eq!(res.order, 2);
        assert_eq!(res.root_score, 2);
        // c_0, c_5 and c_10 each sit on two sides and reach the third through
        // the face vertex; the smallest id wins
        assert_eq!(res.center(), 0);
        assert_eq!(res.cover, vec![0, 5]);
        assert!(verify_cover(&g, &f, &res.cover));
        assert!(verify_cover(&g, &f, &[5, 10]));

        // rooted at the face vertex the three paths overlap at the corners
        let fg = build_face_graph(&g);
        assert_eq!(root_scores(&fg, &f, NetAlgRoute::SideSweep)[15], 3);
    }

    #[test]
    fn split_square_net() {
        let g = generate(Family::SplitSquare).unwrap();
        let f = make_frame(&g, 1, 2).unwrap();
        let res = net_alg(&g, &f).unwrap();
        assert_eq!(res.order, 2);
        assert!(verify_cover(&g, &f, &res.cover));
    }

    #[test]
    fn triangular_grid_order_equals_side() {
        for n in 3..=8 {
            let g = generate(Family::TriangularGrid(n)).unwrap();
            let f = make_frame(&g, n - 1, 2 * n - 2).unwrap();
            let res = net_alg(&g, &f).unwrap();
            assert_eq!(res.order, n, "n = {n}");
        }
    }

    #[test]
    fn single_vertex_tree() {
        let g = PlaneGraph::new(vec![vec![]], None).unwrap();
        let f = make_frame(&g, 0, 0).unwrap();
        let res = net_alg(&g, &f).unwrap();
        assert_eq!(res.order, 1);
        assert_eq!(res.tree.vine, vec![0]);
        assert!(res.tree.paths.iter().all(|p| p == &[0]));
    }

    #[test]
    fn routes_agree_and_vine_is_valid() {
        for seed in 0..60 {
            let g = generate(Family::RandomPlane { n: 3 + (seed as usize % 14), seed }).unwrap();
            let n = g.outer_walk().len();
            let f = make_frame(&g, n / 4, (3 * n) / 4).unwrap();
            let fg = build_face_graph(&g);
            assert_eq!(
                root_scores(&fg, &f, NetAlgRoute::PerSource),
                root_scores(&fg, &f, NetAlgRoute::SideSweep),
                "seed {seed}"
            );
            let a = net_alg_with(&g, &f, NetAlgRoute::PerSource).unwrap();
            let b = net_alg_with(&g, &f, NetAlgRoute::SideSweep).unwrap();
            assert_eq!(a, b);
            assert_eq!(a.order as u32, a.root_score);
            assert!(verify_cover(&g, &f, &a.cover));
            assert!(is_vine(fg.graph(), &make_frame(fg.graph(), f.j(), f.k()).unwrap(), &a.tree.vine));
        }
    }

    #[test]
    fn frame_from_other_graph_is_rejected() {
        let g = generate(Family::Cycle(6)).unwrap();
        let h = generate(Family::Cycle(7)).unwrap();
        let f = make_frame(&h, 1, 2).unwrap();
        assert!(matches!(net_alg(&g, &f), Err(Error::FrameMismatch)));
    }
}
