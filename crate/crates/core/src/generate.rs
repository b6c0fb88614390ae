//! Graph families with canonical embeddings.

use std::collections::{HashMap, HashSet};
use std::f64::consts::PI;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::plane_graph::PlaneGraph;
use crate::{Error, Result, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `n x n` grid; vertex `r * n + c`. Outer walk starts at corner 0 heading along row 0.
    SquareGrid(usize),
    /// Triangle of side `n` with `n (n + 1) / 2` vertices; outer walk starts
    /// at the apex, so `(W, n - 1, 2n - 2)` puts one side of the triangle on
    /// each colour.
    TriangularGrid(usize),
    /// `C_n` with walk `c_0, c_1, ..., c_{n-1}, c_0`.
    Cycle(usize),
    Path(usize),
    /// Random stacked triangulation refined by edge flips; deterministic per seed.
    RandomTriangulation { n: usize, seed: u64 },
    /// Random connected plane graph: a random triangulation with a random
    /// subset of edges removed and a random face made unbounded.
    RandomPlane { n: usize, seed: u64 },
    /// Square `a, b, c, d` whose diagonal `d-b` is subdivided by `e`.
    /// Outer walk `a, b, c, d, a`.
    SplitSquare,
    /// 19-vertex hexagonal patch of the triangular lattice with a sparse set
    /// of interior edges. Outer walk of 12 darts starting at the bottom corner.
    HexPatch,
}

pub fn generate(family: Family) -> Result<PlaneGraph> {
    match family {
        Family::SquareGrid(n) => square_grid(n),
        Family::TriangularGrid(n) => triangular_grid(n),
        Family::Cycle(n) => cycle(n),
        Family::Path(n) => path(n),
        Family::RandomTriangulation { n, seed } => random_triangulation(n, seed),
        Family::RandomPlane { n, seed } => random_plane(n, seed),
        Family::SplitSquare => split_square(),
        Family::HexPatch => hex_patch(),
    }
}

fn need(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::BadParameter(msg.to_string()))
    }
}

fn square_grid(n: usize) -> Result<PlaneGraph> {
    need(n >= 1, "grid side must be at least 1")?;
    let id = |r: usize, c: usize| r * n + c;
    let points: Vec<_> = (0..n * n).map(|v| ((v % n) as f64, (v / n) as f64)).collect();
    let mut edges = Vec::new();
    for r in 0..n {
        for c in 0..n {
            if c + 1 < n {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < n {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    let anchor = (n >= 2).then_some((0, 1));
    PlaneGraph::from_straight_line(&points, &edges, anchor)
}

fn triangular_grid(n: usize) -> Result<PlaneGraph> {
    need(n >= 1, "triangular grid side must be at least 1")?;
    let id = |i: usize, p: usize| i * (i + 1) / 2 + p;
    let h = 3f64.sqrt() / 2.0;
    let mut points = Vec::new();
    let mut edges = Vec::new();
    for i in 0..n {
        for p in 0..=i {
            points.push((p as f64 - i as f64 / 2.0, -(i as f64) * h));
            if p < i {
                edges.push((id(i, p), id(i, p + 1)));
            }
            if i + 1 < n {
                edges.push((id(i, p), id(i + 1, p)));
                edges.push((id(i, p), id(i + 1, p + 1)));
            }
        }
    }
    let anchor = (n >= 2).then_some((0, 1));
    PlaneGraph::from_straight_line(&points, &edges, anchor)
}

fn cycle(n: usize) -> Result<PlaneGraph> {
    need(n >= 3, "cycle needs at least 3 vertices")?;
    let points: Vec<_> = (0..n)
        .map(|i| {
            let t = 2.0 * PI * i as f64 / n as f64;
            (t.cos(), t.sin())
        })
        .collect();
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    PlaneGraph::from_straight_line(&points, &edges, Some((0, 1)))
}

fn path(n: usize) -> Result<PlaneGraph> {
    need(n >= 1, "path needs at least 1 vertex")?;
    let points: Vec<_> = (0..n).map(|i| (i as f64, 0.0)).collect();
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    PlaneGraph::from_straight_line(&points, &edges, (n >= 2).then_some((0, 1)))
}

/// Rebuilds rotations from oriented face walks: consecutive darts `p -> v`,
/// `v -> q` of one face mean `q` follows `p` counterclockwise at `v`.
fn rotations_from_faces(n: usize, faces: &[Vec<Vertex>]) -> Vec<Vec<Vertex>> {
    let mut succ: Vec<HashMap<Vertex, Vertex>> = vec![HashMap::new(); n];
    for f in faces {
        let len = f.len();
        for i in 0..len {
            let (p, v, q) = (f[i], f[(i + 1) % len], f[(i + 2) % len]);
            succ[v].insert(p, q);
        }
    }
    succ.iter()
        .map(|s| {
            let Some(&start) = s.keys().min() else {
                return Vec::new();
            };
            let mut r = vec![start];
            let mut cur = s[&start];
            while cur != start {
                r.push(cur);
                cur = s[&cur];
            }
            r
        })
        .collect()
}

fn random_triangulation(n: usize, seed: u64) -> Result<PlaneGraph> {
    need(n >= 3, "triangulation needs at least 3 vertices")?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let outer = vec![0, 1, 2];
    // bounded triangles as walks (a, b, c) meaning a -> b -> c -> a
    let mut tris: Vec<[Vertex; 3]> = vec![[0, 2, 1]];
    for x in 3..n {
        let i = rng.gen_range(0..tris.len());
        let [a, b, c] = tris[i];
        tris[i] = [a, b, x];
        tris.push([b, c, x]);
        tris.push([c, a, x]);
    }
    let mut edges: HashSet<(Vertex, Vertex)> = HashSet::new();
    let mut owner: HashMap<(Vertex, Vertex), usize> = HashMap::new();
    for (i, t) in tris.iter().enumerate() {
        for s in 0..3 {
            let (u, v) = (t[s], t[(s + 1) % 3]);
            owner.insert((u, v), i);
            edges.insert((u.min(v), u.max(v)));
        }
    }
    let flips = rng.gen_range(0..=2 * n);
    for _ in 0..flips {
        let i = rng.gen_range(0..tris.len());
        let s = rng.gen_range(0..3);
        let t1 = tris[i];
        let (a, b, c) = (t1[s], t1[(s + 1) % 3], t1[(s + 2) % 3]);
        let Some(&j) = owner.get(&(b, a)) else {
            continue; // a -> b borders the outer face
        };
        let t2 = tris[j];
        let pos = (0..3).find(|&r| t2[r] == b).expect("b on its face");
        let d = t2[(pos + 2) % 3];
        if c == d || edges.contains(&(c.min(d), c.max(d))) {
            continue;
        }
        for t in [t1, t2] {
            for r in 0..3 {
                owner.remove(&(t[r], t[(r + 1) % 3]));
            }
        }
        edges.remove(&(a.min(b), a.max(b)));
        edges.insert((c.min(d), c.max(d)));
        tris[i] = [c, a, d];
        tris[j] = [d, b, c];
        for k in [i, j] {
            let t = tris[k];
            for r in 0..3 {
                owner.insert((t[r], t[(r + 1) % 3]), k);
            }
        }
    }
    let mut faces: Vec<Vec<Vertex>> = tris.iter().map(|t| t.to_vec()).collect();
    faces.push(outer);
    PlaneGraph::new(rotations_from_faces(n, &faces), Some((0, 1)))
}

fn random_plane(n: usize, seed: u64) -> Result<PlaneGraph> {
    need(n >= 1, "graph needs at least 1 vertex")?;
    if n < 3 {
        return path(n);
    }
    let tri = random_triangulation(n, seed)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let drop_prob: f64 = rng.gen_range(0.0..0.8);
    let mut edges: Vec<_> = tri.edges().collect();
    edges.shuffle(&mut rng);
    let mut rotation = tri.rotations().to_vec();
    for (u, v) in edges {
        if !rng.gen_bool(drop_prob) {
            continue;
        }
        rotation[u].retain(|&w| w != v);
        rotation[v].retain(|&w| w != u);
        if !connected(&rotation) {
            rotation = restore(&tri, &rotation, u, v);
        }
    }
    let darts: Vec<_> = rotation
        .iter()
        .enumerate()
        .flat_map(|(u, r)| r.iter().map(move |&v| (u, v)))
        .collect();
    let anchor = darts[rng.gen_range(0..darts.len())];
    PlaneGraph::new(rotation, Some(anchor))
}

fn connected(rotation: &[Vec<Vertex>]) -> bool {
    let mut seen = vec![false; rotation.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for &v in &rotation[u] {
            if !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Puts edge `u-v` back at the positions it had in `full`.
fn restore(full: &PlaneGraph, rotation: &[Vec<Vertex>], u: Vertex, v: Vertex) -> Vec<Vec<Vertex>> {
    let mut out = rotation.to_vec();
    for (x, y) in [(u, v), (v, u)] {
        let present: HashSet<Vertex> = out[x].iter().copied().chain([y]).collect();
        out[x] = full.rotation(x).iter().copied().filter(|w| present.contains(w)).collect();
    }
    out
}

fn split_square() -> Result<PlaneGraph> {
    // mirrored drawing so that a -> b -> c -> d runs counterclockwise
    let points = [(0.0, 2.0), (-2.0, 2.0), (-2.0, 0.0), (0.0, 0.0), (-1.0, 1.0)];
    let (a, b, c, d, e) = (0, 1, 2, 3, 4);
    let edges = [(a, b), (b, c), (c, d), (d, a), (d, e), (e, b)];
    PlaneGraph::from_straight_line(&points, &edges, Some((a, b)))?
        .with_labels(["a", "b", "c", "d", "e"].map(String::from).to_vec())
}

fn hex_patch() -> Result<PlaneGraph> {
    let s = 3f64.sqrt() / 2.0;
    // lattice coordinates (column, height) with x = column * sqrt(3) / 2
    let cells: [(i32, f64); 19] = [
        (0, 1.0),
        (0, 2.0),
        (0, 3.0),
        (1, 0.5),
        (1, 1.5),
        (1, 2.5),
        (1, 3.5),
        (2, 0.0),
        (2, 1.0),
        (2, 2.0),
        (2, 3.0),
        (2, 4.0),
        (3, 0.5),
        (3, 1.5),
        (3, 2.5),
        (3, 3.5),
        (4, 1.0),
        (4, 2.0),
        (4, 3.0),
    ];
    let at = |col: i32, y: f64| -> Vertex {
        cells
            .iter()
            .position(|&(c, h)| c == col && (h - y).abs() < 1e-9)
            .expect("lattice point")
    };
    let chains: &[&[(i32, f64)]] = &[
        // boundary
        &[(2, 0.0), (1, 0.5), (0, 1.0), (0, 2.0), (0, 3.0), (1, 3.5), (2, 4.0), (3, 3.5), (4, 3.0), (4, 2.0), (4, 1.0), (3, 0.5), (2, 0.0)],
        &[(0, 1.0), (1, 1.5), (2, 2.0), (3, 1.5), (4, 1.0)],
        &[(1, 0.5), (2, 1.0), (3, 1.5), (3, 2.5), (3, 3.5)],
        &[(1, 3.5), (1, 2.5), (1, 1.5), (2, 1.0), (3, 0.5)],
        &[(2, 4.0), (2, 3.0), (2, 2.0)],
        &[(0, 2.0), (1, 2.5), (2, 3.0), (3, 2.5), (4, 2.0)],
    ];
    let mut edges = Vec::new();
    for chain in chains {
        for w in chain.windows(2) {
            edges.push((at(w[0].0, w[0].1), at(w[1].0, w[1].1)));
        }
    }
    // mirrored so the walk from the bottom corner runs up the left-hand side
    let points: Vec<_> = cells.iter().map(|&(c, h)| (-(c as f64) * s, h)).collect();
    PlaneGraph::from_straight_line(&points, &edges, Some((at(2, 0.0), at(1, 0.5))))
}
