//! Exhaustive reference implementations for small graphs.
//!
//! Vertex sets are bitmasks; nothing here shares code with the
//! shortest-path machinery in [`crate::net_alg`].

use crate::decomposition::TreeDecomposition;
use crate::frame::Frame3;
use crate::graph::SimpleGraph;
use crate::plane_graph::{build_face_graph, PlaneGraph};
use crate::{Error, Result, Vertex};

pub const DEFAULT_NET_LIMIT: usize = 12;
pub const DEFAULT_TREEWIDTH_LIMIT: usize = 15;
pub const DEFAULT_THEOREM_LIMIT: usize = 10;

fn to_mask(vs: impl IntoIterator<Item = Vertex>) -> u64 {
    vs.into_iter().fold(0, |m, v| m | 1 << v)
}

fn to_vec(mask: u64) -> Vec<Vertex> {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

fn adjacency_masks(g: &SimpleGraph) -> Vec<u64> {
    (0..g.num_vertices()).map(|v| to_mask(g.neighbors(v).iter().copied())).collect()
}

/// Whether `set` induces a connected subgraph.
fn connected(adj: &[u64], set: u64) -> bool {
    if set == 0 {
        return false;
    }
    let mut reach = set & set.wrapping_neg();
    loop {
        let grown = to_vec(reach).into_iter().fold(reach, |r, v| r | (adj[v] & set));
        if grown == reach {
            return reach == set;
        }
        reach = grown;
    }
}

/// Blue, red and yellow vertex masks read off the walk indices.
fn side_masks(frame: &Frame3) -> [u64; 3] {
    let w = frame.walk();
    let (j, k) = (frame.j(), frame.k());
    [
        to_mask(w[..=j].iter().copied()),
        to_mask(w[j..=k].iter().copied()),
        to_mask(w[k..].iter().copied()),
    ]
}

fn meets_sides(sides: &[u64; 3], set: u64) -> bool {
    sides.iter().all(|&s| s & set != 0)
}

/// Every vine of a framed graph and the inclusion-minimal ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VineFamily {
    pub all: Vec<u64>,
    pub minimal: Vec<u64>,
}

impl VineFamily {
    pub fn minimal_sets(&self) -> Vec<Vec<Vertex>> {
        self.minimal.iter().map(|&m| to_vec(m)).collect()
    }

    /// Whether `c` meets every vine.
    pub fn is_hit_by(&self, c: &[Vertex]) -> bool {
        let cm = to_mask(c.iter().copied());
        self.minimal.iter().all(|&v| v & cm != 0)
    }
}

pub fn enumerate_vines(g: &PlaneGraph, frame: &Frame3, limit: usize) -> Result<VineFamily> {
    let n = g.num_vertices();
    if n > limit || n > 20 {
        return Err(Error::TooLarge { size: n, limit: limit.min(20) });
    }
    let adj = adjacency_masks(&g.to_simple());
    let sides = side_masks(frame);
    let all: Vec<u64> = (1u64..1 << n)
        .filter(|&s| meets_sides(&sides, s) && connected(&adj, s))
        .collect();
    let mut by_size = all.clone();
    by_size.sort_by_key(|s| (s.count_ones(), *s));
    let mut minimal: Vec<u64> = Vec::new();
    for s in by_size {
        if !minimal.iter().any(|&m| m & !s == 0) {
            minimal.push(s);
        }
    }
    minimal.sort_unstable();
    Ok(VineFamily { all, minimal })
}

/// Lexicographically first `k`-subset of `0..n` hitting every set, if any.
fn first_hitting_set(n: usize, k: usize, sets: &[u64]) -> Option<Vec<Vertex>> {
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let m = to_mask(idx.iter().copied());
        if sets.iter().all(|&s| s & m != 0) {
            return Some(idx);
        }
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if idx[i] < n - k + i {
                break;
            }
        }
        idx[i] += 1;
        for t in i + 1..k {
            idx[t] = idx[t - 1] + 1;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteNet {
    pub order: usize,
    /// Lexicographically smallest minimum cover.
    pub cover: Vec<Vertex>,
}

/// Order of the net by exhaustive search: minimal vines, then the smallest
/// hitting set.
pub fn brute_net_order(g: &PlaneGraph, frame: &Frame3, limit: usize) -> Result<BruteNet> {
    let vines = enumerate_vines(g, frame, limit)?;
    let n = g.num_vertices();
    for k in 0..=n {
        if let Some(cover) = first_hitting_set(n, k, &vines.minimal) {
            return Ok(BruteNet { order: k, cover });
        }
    }
    unreachable!("the full vertex set hits every vine")
}

/// Exact treewidth by dynamic programming over eliminated vertex sets, with
/// a decomposition built from the optimal elimination order.
pub fn brute_treewidth(g: &SimpleGraph, limit: usize) -> Result<(isize, TreeDecomposition)> {
    let n = g.num_vertices();
    if n > limit || n > 24 {
        return Err(Error::TooLarge { size: n, limit: limit.min(24) });
    }
    if n == 0 {
        return Ok((-1, TreeDecomposition::default()));
    }
    let adj = adjacency_masks(g);
    let full = (1u64 << n) - 1;
    // vertices outside `s + v` reachable from `v` through `s`
    let q = |s: u64, v: usize| -> u64 {
        let mut comp = 1u64 << v;
        loop {
            let grown = to_vec(comp & s).into_iter().fold(comp | (adj[v] & s), |c, u| c | (adj[u] & s));
            if grown == comp {
                break;
            }
            comp = grown;
        }
        let nb = to_vec(comp).into_iter().fold(0, |m, u| m | adj[u]);
        nb & !comp & !s & full
    };
    let size = 1usize << n;
    let mut tw = vec![i32::MAX; size];
    let mut last = vec![0u8; size];
    tw[0] = -1;
    for s in 1..size as u64 {
        for v in to_vec(s) {
            let rest = s & !(1 << v);
            let cand = tw[rest as usize].max(q(rest, v).count_ones() as i32);
            if cand < tw[s as usize] {
                tw[s as usize] = cand;
                last[s as usize] = v as u8;
            }
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let v = last[s as usize] as usize;
        order.push(v);
        s &= !(1 << v);
    }
    order.reverse();

    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut bags = Vec::with_capacity(n);
    let mut edges = Vec::new();
    let mut roots = Vec::new();
    let mut eliminated = 0u64;
    for (i, &v) in order.iter().enumerate() {
        let later = q(eliminated, v);
        let mut bag = to_vec(later | 1 << v);
        bag.sort_unstable();
        bags.push(bag);
        match to_vec(later).into_iter().min_by_key(|&u| pos[u]) {
            Some(u) => edges.push((i, pos[u])),
            None => roots.push(i),
        }
        eliminated |= 1 << v;
    }
    edges.extend(roots.windows(2).map(|w| (w[0], w[1])));
    Ok((tw[full as usize] as isize, TreeDecomposition::new(bags, edges)))
}

/// First cover set of size at most `max_size` where the two sides of the
/// face-graph characterisation of covers disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverDisagreement {
    pub cover: Vec<Vertex>,
    pub hits_all_vines: bool,
    pub contains_face_graph_vine: bool,
}

/// Checks, for every `C` with `|C| <= max_size`, that `C` meets every vine
/// of `g` exactly when some vine of the face graph has all its original
/// vertices in `C`.
pub fn check_min_cover_theorem(
    g: &PlaneGraph,
    frame: &Frame3,
    max_size: usize,
    limit: usize,
) -> Result<Option<CoverDisagreement>> {
    let vines = enumerate_vines(g, frame, limit)?;
    let n = g.num_vertices();
    let fg = build_face_graph(g);
    let h = fg.graph();
    let hn = h.num_vertices();
    let hadj = adjacency_masks(&h.to_simple());
    let faces = ((1u64 << hn) - 1) & !((1u64 << n) - 1);
    let sides = side_masks(frame);
    for k in 0..=max_size.min(n) {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let c = to_mask(idx.iter().copied());
            let hits = vines.minimal.iter().all(|&v| v & c != 0);
            // components of the face graph restricted to C and all face vertices
            let mut rest = c | faces;
            let mut found = false;
            while rest != 0 && !found {
                let mut comp = rest & rest.wrapping_neg();
                loop {
                    let grown = to_vec(comp).into_iter().fold(comp, |m, v| m | (hadj[v] & rest));
                    if grown == comp {
                        break;
                    }
                    comp = grown;
                }
                found = meets_sides(&sides, comp);
                rest &= !comp;
            }
            if hits != found {
                return Ok(Some(CoverDisagreement {
                    cover: idx,
                    hits_all_vines: hits,
                    contains_face_graph_vine: found,
                }));
            }
            let mut i = k;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                if idx[i] < n - k + i {
                    idx[i] += 1;
                    for t in i + 1..k {
                        idx[t] = idx[t - 1] + 1;
                    }
                    i = usize::MAX;
                    break;
                }
            }
            if i != usize::MAX {
                break;
            }
        }
    }
    Ok(None)
}

/// Whether every two vines share a vertex or are joined by an edge.
pub fn vines_pairwise_touch(g: &PlaneGraph, vines: &VineFamily) -> bool {
    let adj = adjacency_masks(&g.to_simple());
    let closed = |s: u64| to_vec(s).into_iter().fold(s, |m, v| m | adj[v]);
    let fam = &vines.minimal;
    fam.iter()
        .enumerate()
        .all(|(i, &a)| fam[i..].iter().all(|&b| closed(a) & b != 0))
}
