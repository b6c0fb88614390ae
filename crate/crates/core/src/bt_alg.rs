//! Recursive net search: covers a net, splits off the components, frames
//! each component consistently with its parent, and repeats breadth-first.

use std::collections::VecDeque;

use crate::decomposition::{validate_tree_decomposition, DecompositionTree, TreeDecomposition};
use crate::frame::{default_frame, make_frame, Color, ColorSet, Frame3};
use crate::net_alg::{net_alg_with, NetAlgRoute};
use crate::plane_graph::{induced_subgraph, Component, PlaneGraph};
use crate::{Error, Result, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BtOptions {
    pub route: NetAlgRoute,
    /// Fail with [`Error::TooManyIncidentCovers`] when a node touches more
    /// than three earlier cover sets.
    pub check_incident_covers: bool,
}

impl Default for BtOptions {
    fn default() -> Self {
        Self { route: NetAlgRoute::default(), check_incident_covers: true }
    }
}

/// One node of the search tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchNode {
    /// Tuple index: the root is `[0]`, its `q`-th child `[0, q]` (1-based).
    pub id: Vec<usize>,
    pub parent: Option<usize>,
    pub graph: PlaneGraph,
    /// Input-graph id of each local vertex, ascending.
    pub vertices: Vec<Vertex>,
    pub frame: Frame3,
    /// Cover set in input-graph ids, sorted.
    pub cover: Vec<Vertex>,
    pub children: Vec<usize>,
    pub pruned: bool,
    /// Distinct earlier cover sets adjacent to this node's subgraph.
    pub incident_covers: usize,
}

impl SearchNode {
    pub fn id_string(&self) -> String {
        let parts: Vec<String> = self.id.iter().map(usize::to_string).collect();
        format!("({})", parts.join(","))
    }
}

/// Completed search: nodes in breadth-first order, node 0 is the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BtRun {
    pub kb: usize,
    pub nodes: Vec<SearchNode>,
    /// `bestlow` after each processed node.
    pub bestlow_trace: Vec<i64>,
}

impl BtRun {
    pub fn root(&self) -> &SearchNode {
        &self.nodes[0]
    }
}

pub fn bt_alg(g: &PlaneGraph, initial_frame: Option<Frame3>) -> Result<BtRun> {
    bt_alg_with(g, initial_frame, &BtOptions::default())
}

pub fn bt_alg_with(g: &PlaneGraph, initial_frame: Option<Frame3>, opts: &BtOptions) -> Result<BtRun> {
    let frame = initial_frame.unwrap_or_else(|| default_frame(g));
    if !frame.belongs_to(g) {
        return Err(Error::FrameMismatch);
    }
    let n = g.num_vertices();
    let mut nodes = vec![SearchNode {
        id: vec![0],
        parent: None,
        graph: g.clone(),
        vertices: (0..n).collect(),
        frame,
        cover: Vec::new(),
        children: Vec::new(),
        pruned: false,
        incident_covers: 0,
    }];
    let mut owner = vec![usize::MAX; n];
    let mut in_node = vec![usize::MAX; n];
    let mut bestlow: i64 = -1;
    let mut trace = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let node = &nodes[i];
        for &v in &node.vertices {
            in_node[v] = i;
        }
        let mut incident: Vec<usize> = node
            .vertices
            .iter()
            .flat_map(|&v| g.rotation(v).iter().copied())
            .filter(|&u| in_node[u] != i)
            .map(|u| owner[u])
            .collect();
        incident.sort_unstable();
        incident.dedup();
        if opts.check_incident_covers && incident.len() > 3 {
            return Err(Error::TooManyIncidentCovers { node: i, count: incident.len() });
        }

        let size = node.vertices.len() as i64;
        let (local_cover, pruned) = if size < bestlow {
            ((0..node.vertices.len()).collect::<Vec<_>>(), true)
        } else {
            let nc = net_alg_with(&node.graph, &node.frame, opts.route)?;
            bestlow = bestlow.max(nc.order as i64);
            (nc.cover, false)
        };
        trace.push(bestlow);
        let cover: Vec<Vertex> = local_cover.iter().map(|&v| node.vertices[v]).collect();
        for &v in &cover {
            owner[v] = i;
        }

        let mut children = Vec::new();
        if !pruned && local_cover.len() < node.vertices.len() {
            let mut removed = vec![false; node.vertices.len()];
            for &v in &local_cover {
                removed[v] = true;
            }
            let keep: Vec<Vertex> = (0..node.vertices.len()).filter(|&v| !removed[v]).collect();
            let node = &nodes[i];
            for (q, comp) in induced_subgraph(&node.graph, &keep)?.into_iter().enumerate() {
                let (graph, frame) = recolor_child(node, &comp)?;
                let mut id = node.id.clone();
                id.push(q + 1);
                children.push(SearchNode {
                    id,
                    parent: Some(i),
                    graph,
                    vertices: comp.vertices.iter().map(|&v| node.vertices[v]).collect(),
                    frame,
                    cover: Vec::new(),
                    children: Vec::new(),
                    pruned: false,
                    incident_covers: 0,
                });
            }
        }
        let first = nodes.len();
        let ids: Vec<usize> = (first..first + children.len()).collect();
        let node = &mut nodes[i];
        node.cover = cover;
        node.pruned = pruned;
        node.incident_covers = incident.len();
        node.children = ids.clone();
        nodes.extend(children);
        queue.extend(ids);
    }
    Ok(BtRun { kb: bestlow.max(0) as usize, nodes, bestlow_trace: trace })
}

fn contradiction(msg: impl Into<String>) -> Error {
    Error::RecolorContradiction(msg.into())
}

/// Re-anchors `comp` and frames it so that vertices coloured in the parent
/// frame keep their colours and the new part of the peripheral walk gets the
/// missing ones.
///
/// Each surviving corner of the parent's peripheral walk lies in one corner
/// of the component's peripheral walk; these inherited positions must form
/// one run, in order, carrying at most two colours.
pub fn recolor_child(parent: &SearchNode, comp: &Component) -> Result<(PlaneGraph, Frame3)> {
    let pg = &parent.graph;
    let child = &comp.graph;
    if !comp.outer_face_consistent {
        return Err(Error::OuterFaceAmbiguous(parent.vertices[comp.vertices[0]]));
    }
    let cwalk = child.outer_walk();
    let m = cwalk.len();
    if m == 0 {
        return Ok((child.clone(), make_frame(child, 0, 0)?));
    }

    let mut keep = vec![false; pg.num_vertices()];
    let mut local = vec![usize::MAX; pg.num_vertices()];
    for (i, &v) in comp.vertices.iter().enumerate() {
        keep[v] = true;
        local[v] = i;
    }
    let mut position = vec![usize::MAX; child.num_darts()];
    for (s, &d) in cwalk.darts().iter().enumerate() {
        position[d] = s;
    }

    let frame = &parent.frame;
    let walk = frame.walk();
    let n = frame.n();
    // (child position, parent colours) in parent walk order
    let mut inherited: Vec<(usize, ColorSet)> = Vec::new();
    if let Some(t0) = (0..n).find(|&t| !keep[walk[t]]) {
        for step in 1..=n {
            let t = (t0 + step) % n;
            let v = walk[t];
            if !keep[v] {
                continue;
            }
            let prev = walk[(t + n - 1) % n];
            let q = pg
                .corner_exit(v, prev, true, &keep)
                .ok_or_else(|| contradiction(format!("isolated corner at walk position {t}")))?;
            let d = child.dart_id(local[v], local[q]).expect("corner exit is a child edge");
            if position[d] == usize::MAX {
                return Err(contradiction(format!(
                    "walk position {t} is not on the component's outer face"
                )));
            }
            inherited.push((position[d], frame.colors_at_position(t)));
        }
    } else if n > 0 {
        return Err(contradiction("the cover misses the peripheral walk"));
    }

    if inherited.is_empty() {
        // no coloured vertex: blue everywhere, red and yellow at the smallest peripheral vertex
        let v = cwalk.distinct_vertices()[0];
        let s = cwalk.vertices().iter().position(|&w| w == v).expect("on the walk");
        return anchored_frame(child, s, m, m);
    }

    // Consecutive inherited corners land on the same or the next child
    // position; offset `m`, if reached, is position `a` again.
    let a = inherited[0].0;
    let mut colors = vec![ColorSet::EMPTY];
    let mut prev = a;
    for &(s, c) in &inherited {
        match (s + m - prev) % m {
            0 => {}
            1 if colors.len() <= m => colors.push(ColorSet::EMPTY),
            _ => return Err(contradiction("inherited corners are not one run")),
        }
        let last = colors.len() - 1;
        colors[last] = colors[last].union(c);
        prev = s;
    }
    let l = colors.len() - 1;
    let present = colors.iter().fold(ColorSet::EMPTY, |acc, &c| acc.union(c));
    let span = |c: Color| -> Result<(usize, usize)> {
        let lo = colors.iter().position(|s| s.contains(c)).expect("present");
        let hi = colors.iter().rposition(|s| s.contains(c)).expect("present");
        if colors[lo..=hi].iter().all(|s| s.contains(c)) {
            Ok((lo, hi))
        } else {
            Err(contradiction(format!("{c} is split on the inherited run")))
        }
    };

    // side intervals as (start offset from `a`, length)
    let mut sides = [(0usize, 0usize); 3];
    match present.len() {
        2 => {
            let x = Color::ALL
                .into_iter()
                .find(|&c| present.contains(c) && present.contains(c.succ()))
                .expect("two colours");
            let (xs, xn) = (span(x)?, span(x.succ())?);
            if xs.0 != 0 || xn.1 != l || xs.1 != xn.0 {
                return Err(contradiction(format!("{x} and {} out of order", x.succ())));
            }
            let p = xs.1;
            sides[x.index()] = (0, p);
            sides[x.succ().index()] = (p, l - p);
            sides[x.pred().index()] = (l, m - l);
        }
        1 => {
            let x = present.iter().next().expect("one colour");
            let mut missing = present.complement().iter();
            let m1 = missing.next().expect("two missing");
            let m2 = missing.next().expect("two missing");
            sides[x.index()] = (0, l);
            if m1 == x.succ() {
                sides[m1.index()] = (l, m - l);
                sides[m2.index()] = (m, 0);
            } else {
                sides[m2.index()] = (l, 0);
                sides[m1.index()] = (l, m - l);
            }
        }
        k => return Err(contradiction(format!("component inherits {k} colours"))),
    }
    let (b, r) = (sides[0], sides[1]);
    anchored_frame(child, (a + b.0) % m, b.1, b.1 + r.1)
}

/// Frame of `g` whose walk starts at position `start` of the current outer walk.
fn anchored_frame(g: &PlaneGraph, start: usize, j: usize, k: usize) -> Result<(PlaneGraph, Frame3)> {
    let d = g.dart(g.outer_walk().darts()[start]);
    let h = g.with_outer_anchor(d.tail, d.head)?;
    let f = make_frame(&h, j, k)?;
    Ok((h, f))
}

/// Tree decomposition with one bag per search node: its cover plus every
/// outside vertex adjacent to its subgraph.
pub fn build_decomposition(run: &BtRun, g: &PlaneGraph) -> Result<DecompositionTree> {
    let n = g.num_vertices();
    let mut mark = vec![usize::MAX; n];
    let mut bags = Vec::with_capacity(run.nodes.len());
    let mut edges = Vec::new();
    for (i, node) in run.nodes.iter().enumerate() {
        for &v in &node.vertices {
            mark[v] = i;
        }
        let mut bag = node.cover.clone();
        for &v in &node.vertices {
            for &u in g.rotation(v) {
                if mark[u] != i && mark[u] != usize::MAX - 1 - i {
                    mark[u] = usize::MAX - 1 - i;
                    bag.push(u);
                }
            }
        }
        bag.sort_unstable();
        bags.push(bag);
        if let Some(p) = node.parent {
            edges.push((p, i));
        }
    }
    let td = TreeDecomposition::new(bags, edges);
    let check = validate_tree_decomposition(&g.to_simple(), &td);
    if let Some(v) = check.violation {
        return Err(Error::ValidationFailure(v.to_string()));
    }
    let width = td.width();
    if width > 4 * run.kb as isize - 1 {
        return Err(Error::ValidationFailure(format!(
            "width {width} exceeds 4 KB - 1 = {}",
            4 * run.kb as isize - 1
        )));
    }
    Ok(DecompositionTree { td, width, kb: run.kb })
}
