//! 3-frames, side colours, vines and net covers.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::plane_graph::{FaceWalk, PlaneGraph};
use crate::{Error, Result, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Color {
    Blue,
    Red,
    Yellow,
}

impl Color {
    pub const ALL: [Color; 3] = [Color::Blue, Color::Red, Color::Yellow];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Next colour along the walk: blue, red, yellow, blue, ...
    pub fn succ(self) -> Color {
        Self::ALL[(self.index() + 1) % 3]
    }

    pub fn pred(self) -> Color {
        Self::ALL[(self.index() + 2) % 3]
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Color::Blue => "blue",
            Color::Red => "red",
            Color::Yellow => "yellow",
        };
        f.write_str(s)
    }
}

/// Set of side colours carried by one vertex or walk position.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ColorSet(u8);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);
    pub const ALL: ColorSet = ColorSet(0b111);

    pub fn single(c: Color) -> Self {
        ColorSet(1 << c.index())
    }

    pub fn contains(self, c: Color) -> bool {
        self.0 & (1 << c.index()) != 0
    }

    pub fn insert(&mut self, c: Color) {
        self.0 |= 1 << c.index();
    }

    pub fn union(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 | other.0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_full(self) -> bool {
        self.0 == 0b111
    }

    pub fn iter(self) -> impl Iterator<Item = Color> {
        Color::ALL.into_iter().filter(move |&c| self.contains(c))
    }

    pub fn complement(self) -> ColorSet {
        ColorSet(!self.0 & 0b111)
    }
}

/// A peripheral walk `W = (u_0, ..., u_n)` split at walk indices `j <= k`:
/// blue `{u_0..u_j}`, red `{u_j..u_k}`, yellow `{u_k..u_n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frame3 {
    walk: Vec<Vertex>,
    j: usize,
    k: usize,
}

impl Frame3 {
    pub fn walk(&self) -> &[Vertex] {
        &self.walk
    }

    /// Number of darts on the walk.
    pub fn n(&self) -> usize {
        self.walk.len() - 1
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Colours of walk index `t` in `0..=n`.
    pub fn colors_at(&self, t: usize) -> ColorSet {
        let mut s = ColorSet::EMPTY;
        if t <= self.j {
            s.insert(Color::Blue);
        }
        if self.j <= t && t <= self.k {
            s.insert(Color::Red);
        }
        if t >= self.k {
            s.insert(Color::Yellow);
        }
        s
    }

    /// Colours of cyclic walk position `t` in `0..n`; position 0 is also index `n`.
    pub fn colors_at_position(&self, t: usize) -> ColorSet {
        if t == 0 {
            self.colors_at(0).union(self.colors_at(self.n()))
        } else {
            self.colors_at(t)
        }
    }

    /// Distinct vertices of one side, sorted.
    pub fn side(&self, c: Color) -> Vec<Vertex> {
        let range = match c {
            Color::Blue => 0..=self.j,
            Color::Red => self.j..=self.k,
            Color::Yellow => self.k..=self.n(),
        };
        let mut vs: Vec<_> = self.walk[range].to_vec();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    /// Colour set of each vertex: the union over all of its walk occurrences.
    pub fn vertex_colors(&self, num_vertices: usize) -> Vec<ColorSet> {
        let mut out = vec![ColorSet::EMPTY; num_vertices];
        for (t, &v) in self.walk.iter().enumerate() {
            out[v] = out[v].union(self.colors_at(t));
        }
        out
    }

    /// Whether this frame sits on the peripheral walk of `g`.
    pub fn belongs_to(&self, g: &PlaneGraph) -> bool {
        self.walk == g.outer_walk().vertices()
    }
}

pub fn make_frame(g: &PlaneGraph, j: usize, k: usize) -> Result<Frame3> {
    let walk = g.outer_walk().vertices().to_vec();
    let n = walk.len() - 1;
    if j > k || k > n {
        return Err(Error::IndexOutOfRange { j, k, n });
    }
    Ok(Frame3 { walk, j, k })
}

/// Thirds rule: `j = floor(n / 3)`, `k = floor(2n / 3)`.
pub fn default_frame(g: &PlaneGraph) -> Frame3 {
    let n = g.outer_walk().len();
    make_frame(g, n / 3, 2 * n / 3).expect("thirds are in range")
}

fn meets_all_sides(colors: &[ColorSet], set: impl Iterator<Item = Vertex>) -> bool {
    set.fold(ColorSet::EMPTY, |acc, v| acc.union(colors[v])).is_full()
}

/// `x` is connected in `g` and meets all three sides.
pub fn is_vine(g: &PlaneGraph, frame: &Frame3, x: &[Vertex]) -> bool {
    let n = g.num_vertices();
    if x.is_empty() || x.iter().any(|&v| v >= n) {
        return false;
    }
    let colors = frame.vertex_colors(n);
    if !meets_all_sides(&colors, x.iter().copied()) {
        return false;
    }
    let mut inside = vec![false; n];
    for &v in x {
        inside[v] = true;
    }
    let mut seen = vec![false; n];
    seen[x[0]] = true;
    let mut stack = vec![x[0]];
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &w in g.rotation(u) {
            if inside[w] && !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    let distinct = inside.iter().filter(|&&b| b).count();
    count == distinct
}

/// `c` covers the net iff no component of `g - c` meets all three sides.
pub fn verify_cover(g: &PlaneGraph, frame: &Frame3, c: &[Vertex]) -> bool {
    let n = g.num_vertices();
    let colors = frame.vertex_colors(n);
    let mut removed = vec![false; n];
    for &v in c {
        if v < n {
            removed[v] = true;
        }
    }
    let mut seen = removed.clone();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut acc = colors[s];
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in g.rotation(u) {
                if !seen[w] {
                    seen[w] = true;
                    acc = acc.union(colors[w]);
                    queue.push_back(w);
                }
            }
        }
        if acc.is_full() {
            return false;
        }
    }
    true
}

/// `(u_a, u_c)` and `(u_b, u_d)` cross in the walk when, after ordering each
/// pair, `a <= b <= c <= d` or the same with the pairs swapped.
pub fn crosses(walk: &FaceWalk, ac: (usize, usize), bd: (usize, usize)) -> bool {
    debug_assert!(ac.0.max(ac.1).max(bd.0).max(bd.1) <= walk.len());
    let (a, c) = (ac.0.min(ac.1), ac.0.max(ac.1));
    let (b, d) = (bd.0.min(bd.1), bd.0.max(bd.1));
    (a <= b && b <= c && c <= d) || (b <= a && a <= d && d <= c)
}
