//! Embedded planar graphs given by rotation systems.
//!
//! Each vertex stores the counterclockwise cyclic order of its neighbours. A
//! directed edge (dart) `u -> v` is followed in its face by `v -> w`, where `w`
//! is the successor of `u` in the rotation at `v`. Under this convention every
//! face lies to the right of its darts, so bounded faces are walked clockwise
//! and the unbounded face is walked with the graph on its left.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::graph::SimpleGraph;
use crate::{Error, Result, Vertex};

/// A directed edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Dart {
    pub tail: Vertex,
    pub head: Vertex,
}

impl Dart {
    pub fn new(tail: Vertex, head: Vertex) -> Self {
        Self { tail, head }
    }

    pub fn reversed(self) -> Self {
        Self { tail: self.head, head: self.tail }
    }
}

/// Closed boundary walk `(u_0, ..., u_n)` of one face, with `u_0 = u_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceWalk {
    id: usize,
    vertices: Vec<Vertex>,
    darts: Vec<usize>,
}

impl FaceWalk {
    pub fn id(&self) -> usize {
        self.id
    }

    /// The `n + 1` walk vertices; the last equals the first.
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Number of darts `n` on the walk.
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// Dart ids in walk order; `darts()[t]` runs from `vertices()[t]` to
    /// `vertices()[t + 1]`.
    pub fn darts(&self) -> &[usize] {
        &self.darts
    }

    /// Distinct vertices on the walk, sorted.
    pub fn distinct_vertices(&self) -> Vec<Vertex> {
        let mut vs = self.vertices.clone();
        vs.sort_unstable();
        vs.dedup();
        vs
    }
}

/// All faces of a plane graph; every dart belongs to exactly one walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Faces {
    walks: Vec<FaceWalk>,
    outer: usize,
    dart_face: Vec<usize>,
}

impl Faces {
    pub fn walks(&self) -> &[FaceWalk] {
        &self.walks
    }

    pub fn len(&self) -> usize {
        self.walks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walks.is_empty()
    }

    pub fn outer_id(&self) -> usize {
        self.outer
    }

    pub fn outer(&self) -> &FaceWalk {
        &self.walks[self.outer]
    }

    /// Face containing dart `d` (to its right).
    pub fn face_of_dart(&self, d: usize) -> usize {
        self.dart_face[d]
    }

    pub fn bounded(&self) -> impl Iterator<Item = &FaceWalk> + '_ {
        let outer = self.outer;
        self.walks.iter().filter(move |w| w.id != outer)
    }
}

/// Simple connected graph with a combinatorial embedding and a designated
/// unbounded face. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneGraph {
    rotation: Vec<Vec<Vertex>>,
    offsets: Vec<usize>,
    heads: Vec<Vertex>,
    tails: Vec<Vertex>,
    twin: Vec<usize>,
    // (neighbour, dart id) sorted by neighbour, flat and indexed by `offsets`
    sorted: Vec<(Vertex, usize)>,
    outer: Option<usize>,
    faces: Faces,
    labels: Option<Vec<String>>,
}

impl PlaneGraph {
    /// Validates a rotation system and traces its faces.
    ///
    /// `outer` names a dart on the unbounded face; it must be `Some` exactly
    /// when the graph has an edge.
    pub fn new(rotation: Vec<Vec<Vertex>>, outer: Option<(Vertex, Vertex)>) -> Result<Self> {
        let n = rotation.len();
        if n == 0 {
            return Err(Error::EmptySubgraph);
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut heads = Vec::new();
        let mut tails = Vec::new();
        offsets.push(0);
        for (v, list) in rotation.iter().enumerate() {
            for &u in list {
                if u >= n {
                    return Err(invalid(format!("vertex {v} lists unknown neighbour {u}")));
                }
                if u == v {
                    return Err(invalid(format!("loop at vertex {v}")));
                }
                heads.push(u);
                tails.push(v);
            }
            offsets.push(heads.len());
        }
        let m = heads.len();
        let mut sorted: Vec<(Vertex, usize)> = (0..m).map(|d| (heads[d], d)).collect();
        for v in 0..n {
            let slice = &mut sorted[offsets[v]..offsets[v + 1]];
            slice.sort_unstable();
            if slice.windows(2).any(|w| w[0].0 == w[1].0) {
                return Err(invalid(format!("parallel edges at vertex {v}")));
            }
        }
        let mut g = Self {
            rotation,
            offsets,
            heads,
            tails,
            twin: Vec::new(),
            sorted,
            outer: None,
            faces: Faces { walks: Vec::new(), outer: 0, dart_face: Vec::new() },
            labels: None,
        };
        let mut twin = Vec::with_capacity(m);
        for d in 0..m {
            let (u, v) = (g.tails[d], g.heads[d]);
            match g.dart_id(v, u) {
                Some(t) => twin.push(t),
                None => return Err(invalid(format!("edge {u}-{v} is not listed at {v}"))),
            }
        }
        g.twin = twin;
        if !g.to_simple().is_connected() {
            return Err(invalid("graph is not connected".into()));
        }
        g.outer = match (outer, m) {
            (None, 0) => None,
            (Some(_), 0) => return Err(invalid("outer anchor given for an edgeless graph".into())),
            (None, _) => return Err(invalid("missing outer-face anchor".into())),
            (Some((u, v)), _) => match (u < n).then(|| g.dart_id(u, v)).flatten() {
                Some(d) => Some(d),
                None => return Err(invalid(format!("outer anchor {u}->{v} is not an edge"))),
            },
        };
        g.faces = g.compute_faces();
        let (v, e, f) = (n as i64, (m / 2) as i64, g.faces.len() as i64);
        if v - e + f != 2 {
            return Err(invalid(format!("Euler's formula fails: v={v}, e={e}, f={f}")));
        }
        if v >= 3 && e > 3 * v - 6 {
            return Err(invalid(format!("too many edges for a planar graph: v={v}, e={e}")));
        }
        Ok(g)
    }

    /// Straight-line embedding: rotations from the angular order of the given
    /// coordinates. Without an anchor, the outer face is the one whose walk
    /// has the largest signed area.
    pub fn from_straight_line(
        points: &[(f64, f64)],
        edges: &[(Vertex, Vertex)],
        anchor: Option<(Vertex, Vertex)>,
    ) -> Result<Self> {
        let n = points.len();
        let mut rotation = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::BadParameter(format!("edge ({u}, {v}) out of range")));
            }
            rotation[u].push(v);
            rotation[v].push(u);
        }
        for (v, list) in rotation.iter_mut().enumerate() {
            let (x0, y0) = points[v];
            list.sort_by(|&a, &b| {
                let ta = (points[a].1 - y0).atan2(points[a].0 - x0);
                let tb = (points[b].1 - y0).atan2(points[b].0 - x0);
                ta.total_cmp(&tb)
            });
        }
        if edges.is_empty() {
            return Self::new(rotation, None);
        }
        if anchor.is_some() {
            return Self::new(rotation, anchor);
        }
        let probe = Self::new(rotation.clone(), Some(edges[0]))?;
        let area = |w: &FaceWalk| -> f64 {
            w.vertices()
                .windows(2)
                .map(|p| {
                    let (a, b) = (points[p[0]], points[p[1]]);
                    a.0 * b.1 - a.1 * b.0
                })
                .sum()
        };
        let best = probe
            .faces
            .walks
            .iter()
            .max_by(|a, b| area(a).total_cmp(&area(b)))
            .expect("at least one face");
        let first = probe.dart(best.darts[0]);
        Self::new(rotation, Some((first.tail, first.head)))
    }

    /// Same rotation system, different outer-face anchor.
    pub fn with_outer_anchor(&self, tail: Vertex, head: Vertex) -> Result<Self> {
        let mut g = Self::new(self.rotation.clone(), Some((tail, head)))?;
        g.labels = self.labels.clone();
        Ok(g)
    }

    /// Mirror image: every rotation reversed and every face walk reversed.
    pub fn mirrored(&self) -> Self {
        let rotation = self
            .rotation
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        let anchor = self.outer_anchor().map(|d| (d.head, d.tail));
        let mut g = Self::new(rotation, anchor).expect("mirror of a valid embedding is valid");
        g.labels = self.labels.clone();
        g
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.num_vertices() {
            return Err(Error::BadParameter(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.num_vertices()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// External name of `v`: its label, or the 1-based id.
    pub fn label(&self, v: Vertex) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => (v + 1).to_string(),
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.rotation.len()
    }

    pub fn num_edges(&self) -> usize {
        self.heads.len() / 2
    }

    pub fn num_darts(&self) -> usize {
        self.heads.len()
    }

    /// Counterclockwise neighbour order at `v`.
    pub fn rotation(&self, v: Vertex) -> &[Vertex] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<Vertex>] {
        &self.rotation
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.rotation[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.dart_id(u, v).is_some()
    }

    pub fn dart(&self, d: usize) -> Dart {
        Dart::new(self.tails[d], self.heads[d])
    }

    pub fn dart_id(&self, u: Vertex, v: Vertex) -> Option<usize> {
        let slice = &self.sorted[self.offsets[u]..self.offsets[u + 1]];
        slice
            .binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| slice[i].1)
    }

    pub fn twin(&self, d: usize) -> usize {
        self.twin[d]
    }

    /// The dart following `d` in its face.
    pub fn next_in_face(&self, d: usize) -> usize {
        let t = self.twin[d];
        let v = self.heads[d];
        let (lo, hi) = (self.offsets[v], self.offsets[v + 1]);
        let i = t - lo;
        lo + (i + 1) % (hi - lo)
    }

    pub fn outer_anchor(&self) -> Option<Dart> {
        self.outer.map(|d| self.dart(d))
    }

    pub fn faces(&self) -> &Faces {
        &self.faces
    }

    /// Boundary walk of the unbounded face, starting with the anchor dart.
    pub fn outer_walk(&self) -> &FaceWalk {
        self.faces.outer()
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.heads.len())
            .map(|d| (self.tails[d], self.heads[d]))
            .filter(|&(u, v)| u < v)
    }

    pub fn to_simple(&self) -> SimpleGraph {
        SimpleGraph::from_edges(self.num_vertices(), self.edges()).expect("plane graph is simple")
    }

    fn compute_faces(&self) -> Faces {
        let m = self.heads.len();
        if m == 0 {
            return Faces {
                walks: vec![FaceWalk { id: 0, vertices: vec![0], darts: Vec::new() }],
                outer: 0,
                dart_face: Vec::new(),
            };
        }
        let mut dart_face = vec![usize::MAX; m];
        let mut walks = Vec::new();
        let starts = self.outer.into_iter().chain(0..m);
        for start in starts {
            if dart_face[start] != usize::MAX {
                continue;
            }
            let id = walks.len();
            let mut vertices = vec![self.tails[start]];
            let mut darts = Vec::new();
            let mut d = start;
            loop {
                dart_face[d] = id;
                darts.push(d);
                vertices.push(self.heads[d]);
                d = self.next_in_face(d);
                if d == start {
                    break;
                }
            }
            walks.push(FaceWalk { id, vertices, darts });
        }
        Faces { walks, outer: 0, dart_face }
    }

    /// Dart `v -> q` leaving the corner at `v` that contains the direction
    /// `from` (or, when `inclusive` is false, the sector just clockwise of
    /// `from`), once every neighbour outside `keep` is removed.
    pub(crate) fn corner_exit(&self, v: Vertex, from: Vertex, inclusive: bool, keep: &[bool]) -> Option<Vertex> {
        let rot = &self.rotation[v];
        let deg = rot.len();
        let idx = rot.iter().position(|&w| w == from)?;
        let skip = usize::from(!inclusive);
        let p = (skip..deg + skip)
            .map(|s| (idx + deg - s) % deg)
            .find(|&i| keep[rot[i]])?;
        (1..=deg).map(|s| (p + s) % deg).find(|&i| keep[rot[i]]).map(|i| rot[i])
    }
}

fn invalid(msg: String) -> Error {
    Error::EmbeddingInvalid(msg)
}

/// Faces of `g`, the unbounded one flagged by [`Faces::outer_id`].
pub fn trace_faces(g: &PlaneGraph) -> &Faces {
    g.faces()
}

/// The plane graph augmented with one vertex per bounded face.
///
/// Original vertices keep their ids; face vertices follow in face-id order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceGraph {
    graph: PlaneGraph,
    original: usize,
    source_face: Vec<usize>,
}

impl FaceGraph {
    pub fn graph(&self) -> &PlaneGraph {
        &self.graph
    }

    pub fn num_original(&self) -> usize {
        self.original
    }

    /// The indicator of the original graph.
    pub fn is_original(&self, v: Vertex) -> bool {
        v < self.original
    }

    /// Face of the source graph that `v` stands for, if `v` is a face vertex.
    pub fn source_face(&self, v: Vertex) -> Option<usize> {
        v.checked_sub(self.original).map(|i| self.source_face[i])
    }
}

/// Builds the face graph: for each bounded face `f`, a new vertex inside `f`
/// joined to every distinct vertex on the boundary of `f`.
pub fn build_face_graph(g: &PlaneGraph) -> FaceGraph {
    let n = g.num_vertices();
    let faces = g.faces();
    // insert_after[d] = face vertex placed just after neighbour `head(d)` at `tail(d)`
    let mut insert_after: Vec<Option<Vertex>> = vec![None; g.num_darts()];
    let mut face_rotations = Vec::new();
    let mut source_face = Vec::new();
    let mut seen = vec![usize::MAX; n];
    for walk in faces.bounded() {
        let fv = n + source_face.len();
        let mut order = Vec::new();
        for &d in walk.darts() {
            let v = g.heads[d];
            if seen[v] != fv {
                seen[v] = fv;
                order.push(v);
                insert_after[g.twin(d)] = Some(fv);
            }
        }
        order.reverse();
        face_rotations.push(order);
        source_face.push(walk.id());
    }
    let mut rotation: Vec<Vec<Vertex>> = (0..n)
        .map(|v| {
            let mut r = Vec::with_capacity(g.degree(v));
            let range = g.offsets[v]..g.offsets[v + 1];
            for (&h, &after) in g.heads[range.clone()].iter().zip(&insert_after[range]) {
                r.push(h);
                if let Some(fv) = after {
                    r.push(fv);
                }
            }
            r
        })
        .collect();
    rotation.extend(face_rotations);
    let anchor = g.outer_anchor().map(|d| (d.tail, d.head));
    let graph = PlaneGraph::new(rotation, anchor).expect("face graph of a plane graph is plane");
    FaceGraph { graph, original: n, source_face }
}

/// One connected component of an induced subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub graph: PlaneGraph,
    /// Parent id of each local vertex, ascending.
    pub vertices: Vec<Vertex>,
    /// Whether the selected outer walk contains every vertex that was on the
    /// parent's outer walk or adjacent to a deleted vertex.
    pub outer_face_consistent: bool,
}

/// Components of `g[keep]` with inherited embeddings, ordered by smallest
/// parent id.
///
/// The outer face of a component is the face containing the parent's
/// unbounded-face corner at its first surviving peripheral vertex; if the
/// component has no peripheral vertex, the face containing the corner towards
/// a deleted neighbour of its smallest cut-adjacent vertex.
pub fn induced_subgraph(g: &PlaneGraph, keep: &[Vertex]) -> Result<Vec<Component>> {
    let n = g.num_vertices();
    let mut kept = vec![false; n];
    for &v in keep {
        if v >= n {
            return Err(Error::BadParameter(format!("vertex {v} out of range")));
        }
        kept[v] = true;
    }
    if keep.is_empty() {
        return Err(Error::EmptySubgraph);
    }
    let walk = g.outer_walk();
    let on_walk = {
        let mut f = vec![false; n];
        for &v in walk.vertices() {
            f[v] = true;
        }
        f
    };
    let mut comp_of = vec![usize::MAX; n];
    let mut local = vec![usize::MAX; n];
    let mut out = Vec::new();
    for s in 0..n {
        if !kept[s] || comp_of[s] != usize::MAX {
            continue;
        }
        let cid = out.len();
        comp_of[s] = cid;
        let mut members = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &v in g.rotation(u) {
                if kept[v] && comp_of[v] == usize::MAX {
                    comp_of[v] = cid;
                    members.push(v);
                    queue.push_back(v);
                }
            }
        }
        members.sort_unstable();
        for (i, &v) in members.iter().enumerate() {
            local[v] = i;
        }
        let rotation: Vec<Vec<Vertex>> = members
            .iter()
            .map(|&v| g.rotation(v).iter().filter(|&&u| kept[u]).map(|&u| local[u]).collect())
            .collect();

        let nw = walk.len();
        let ws = walk.vertices();
        let anchor = match (0..nw).find(|&t| comp_of[ws[t]] == cid) {
            Some(t) => {
                let prev = ws[(t + nw - 1) % nw];
                g.corner_exit(ws[t], prev, true, &kept).map(|q| (ws[t], q))
            }
            None => members.iter().find_map(|&v| {
                let c = *g.rotation(v).iter().find(|&&u| !kept[u])?;
                g.corner_exit(v, c, false, &kept).map(|q| (v, q))
            }),
        };
        let anchor = anchor.map(|(u, v)| (local[u], local[v]));
        let mut graph = PlaneGraph::new(rotation, anchor)?;
        if let Some(labels) = g.labels() {
            graph.labels = Some(members.iter().map(|&v| labels[v].clone()).collect());
        }
        let mut on_outer = vec![false; members.len()];
        for &v in graph.outer_walk().vertices() {
            on_outer[v] = true;
        }
        let outer_face_consistent = members.iter().enumerate().all(|(i, &v)| {
            let required = on_walk[v] || g.rotation(v).iter().any(|&u| !kept[u]);
            !required || on_outer[i]
        });
        out.push(Component { graph, vertices: members, outer_face_consistent });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, Family};

    fn square() -> PlaneGraph {
        PlaneGraph::from_straight_line(
            &[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)],
            &[(0, 1), (1, 2), (2, 3), (3, 0)],
            None,
        )
        .unwrap()
    }

    #[test]
    fn square_has_two_faces_of_length_four() {
        let g = square();
        let faces = trace_faces(&g);
        assert_eq!(faces.len(), 2);
        assert!(faces.walks().iter().all(|w| w.len() == 4));
        // outer walk goes counterclockwise around the drawing
        assert_eq!(g.outer_walk().vertices(), &[0, 1, 2, 3, 0]);
    }

    #[test]
    fn single_edge_has_one_face() {
        let g = PlaneGraph::new(vec![vec![1], vec![0]], Some((0, 1))).unwrap();
        let faces = trace_faces(&g);
        assert_eq!(faces.len(), 1);
        assert_eq!(faces.outer().vertices(), &[0, 1, 0]);
    }

    #[test]
    fn single_vertex() {
        let g = PlaneGraph::new(vec![vec![]], None).unwrap();
        assert_eq!(g.outer_walk().vertices(), &[0]);
        assert_eq!(g.outer_walk().len(), 0);
        assert_eq!(build_face_graph(&g).graph().num_vertices(), 1);
    }

    #[test]
    fn triangular_grid_six_face_count() {
        let g = generate(Family::TriangularGrid(6)).unwrap();
        assert_eq!(g.num_vertices(), 21);
        assert_eq!(g.num_edges(), 45);
        let faces = trace_faces(&g);
        assert_eq!(faces.len(), 26);
        assert_eq!(faces.bounded().filter(|w| w.len() == 3).count(), 25);
    }

    #[test]
    fn rejects_bad_embeddings() {
        // K4 drawn with a wrong rotation at one vertex: genus 1 traversal
        let bad = vec![vec![1, 2, 3], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1, 2]];
        assert!(matches!(PlaneGraph::new(bad, Some((0, 1))), Err(Error::EmbeddingInvalid(_))));
        let asym = vec![vec![1], vec![]];
        assert!(PlaneGraph::new(asym, Some((0, 1))).is_err());
        let disconnected = vec![vec![1], vec![0], vec![]];
        assert!(PlaneGraph::new(disconnected, Some((0, 1))).is_err());
        assert!(PlaneGraph::new(vec![vec![1], vec![0]], None).is_err());
        assert!(PlaneGraph::new(vec![vec![1], vec![0]], Some((0, 0))).is_err());
    }

    #[test]
    fn face_graph_of_tree_is_the_tree() {
        let g = PlaneGraph::new(vec![vec![1, 2], vec![0], vec![0]], Some((0, 1))).unwrap();
        let fg = build_face_graph(&g);
        assert_eq!(fg.graph().num_vertices(), 3);
        assert_eq!(fg.graph().num_edges(), 2);
    }

    #[test]
    fn face_graph_of_square() {
        let fg = build_face_graph(&square());
        let h = fg.graph();
        assert_eq!(h.num_vertices(), 5);
        assert_eq!(h.degree(4), 4);
        assert!(!fg.is_original(4));
        assert_eq!(fg.source_face(4), Some(1));
        assert_eq!(h.outer_walk().vertices(), &[0, 1, 2, 3, 0]);
    }

    #[test]
    fn remove_middle_column_of_grid() {
        let g = generate(Family::SquareGrid(3)).unwrap();
        // vertices are r * 3 + c; middle column c = 1
        let keep: Vec<_> = (0..9).filter(|v| v % 3 != 1).collect();
        let comps = induced_subgraph(&g, &keep).unwrap();
        assert_eq!(comps.len(), 2);
        for c in &comps {
            assert_eq!(c.graph.num_vertices(), 3);
            assert_eq!(c.graph.num_edges(), 2);
            assert!(c.outer_face_consistent);
        }
        assert_eq!(comps[0].vertices, vec![0, 3, 6]);
    }

    #[test]
    fn remove_nothing_is_identity() {
        let g = generate(Family::TriangularGrid(4)).unwrap();
        let all: Vec<_> = (0..g.num_vertices()).collect();
        let comps = induced_subgraph(&g, &all).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].graph.rotations(), g.rotations());
        assert_eq!(comps[0].graph.outer_walk().vertices(), g.outer_walk().vertices());
        assert!(matches!(induced_subgraph(&g, &[]), Err(Error::EmptySubgraph)));
    }

    #[test]
    fn mirror_reverses_outer_walk() {
        let g = square();
        let m = g.mirrored();
        let mut rev = g.outer_walk().vertices().to_vec();
        rev.reverse();
        assert_eq!(m.outer_walk().distinct_vertices(), g.outer_walk().distinct_vertices());
        assert_eq!(m.outer_walk().len(), 4);
        assert_eq!(m.outer_anchor(), Some(Dart::new(1, 0)));
        assert_eq!(m.outer_walk().vertices(), &[1, 0, 3, 2, 1]);
        assert_eq!(&rev[..], &[0, 3, 2, 1, 0]);
    }
}
