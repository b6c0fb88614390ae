//! Text formats for embedded graphs and tree decompositions.
//!
//! Graph files (1-based ids):
//!
//! ```text
//! c optional comments
//! p pgr <n> <m>
//! r <v> <neighbours of v in counterclockwise order>
//! o <u> <v>          outer-face dart, one per component with an edge
//! l <v> <label>      optional vertex label
//! ```
//!
//! Decomposition files follow the PACE `td` layout: `s td <bags> <width+1>
//! <n>`, one `b <id> <vertices>` line per bag, then one line per tree edge.

use std::fmt::Write;

use anyhow::{bail, ensure, Context, Result};
use netbound::{PlaneGraph, SimpleGraph, TreeDecomposition, Vertex};

/// Contents of a graph file, possibly with several components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub rotation: Vec<Vec<Vertex>>,
    pub anchors: Vec<(Vertex, Vertex)>,
    pub labels: Option<Vec<String>>,
}

/// One connected component and the file ids of its vertices.
#[derive(Debug, Clone)]
pub struct Piece {
    pub graph: PlaneGraph,
    pub vertices: Vec<Vertex>,
}

impl GraphFile {
    pub fn from_plane(g: &PlaneGraph) -> Self {
        Self {
            rotation: g.rotations().to_vec(),
            anchors: g.outer_anchor().map(|d| (d.tail, d.head)).into_iter().collect(),
            labels: g.labels().map(<[String]>::to_vec),
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.rotation.len()
    }

    pub fn num_edges(&self) -> usize {
        self.rotation.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn to_simple(&self) -> Result<SimpleGraph> {
        let edges = self
            .rotation
            .iter()
            .enumerate()
            .flat_map(|(v, r)| r.iter().filter(move |&&u| v < u).map(move |&u| (v, u)));
        Ok(SimpleGraph::from_edges(self.num_vertices(), edges)?)
    }

    /// External name of `v`: its label or its 1-based id.
    pub fn name(&self, v: Vertex) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => (v + 1).to_string(),
        }
    }

    /// Splits into connected plane graphs ordered by smallest vertex.
    pub fn pieces(&self) -> Result<Vec<Piece>> {
        let sg = self.to_simple()?;
        let comps = sg.components();
        let mut comp_of = vec![0; self.num_vertices()];
        for (c, vs) in comps.iter().enumerate() {
            for &v in vs {
                comp_of[v] = c;
            }
        }
        let mut anchor: Vec<Option<(Vertex, Vertex)>> = vec![None; comps.len()];
        for &(u, v) in &self.anchors {
            let c = comp_of[u];
            ensure!(anchor[c].is_none(), "two outer-face lines for the component of vertex {}", u + 1);
            anchor[c] = Some((u, v));
        }
        comps
            .into_iter()
            .enumerate()
            .map(|(c, vertices)| {
                let mut local = vec![usize::MAX; self.num_vertices()];
                for (i, &v) in vertices.iter().enumerate() {
                    local[v] = i;
                }
                let rotation = vertices
                    .iter()
                    .map(|&v| self.rotation[v].iter().map(|&u| local[u]).collect())
                    .collect();
                let a = anchor[c].map(|(u, v)| (local[u], local[v]));
                let mut graph = PlaneGraph::new(rotation, a)
                    .with_context(|| format!("component containing vertex {}", vertices[0] + 1))?;
                if let Some(l) = &self.labels {
                    graph = graph.with_labels(vertices.iter().map(|&v| l[v].clone()).collect())?;
                }
                Ok(Piece { graph, vertices })
            })
            .collect()
    }

    /// The graph as a single plane graph; fails when it is disconnected.
    pub fn connected(&self) -> Result<PlaneGraph> {
        let mut pieces = self.pieces()?;
        ensure!(pieces.len() == 1, "graph has {} components; a single component is required", pieces.len());
        Ok(pieces.remove(0).graph)
    }
}

fn parse_id(tok: &str, n: usize, line: usize) -> Result<Vertex> {
    let v: usize = tok.parse().with_context(|| format!("line {line}: bad vertex id {tok:?}"))?;
    ensure!((1..=n).contains(&v), "line {line}: vertex {v} out of range 1..={n}");
    Ok(v - 1)
}

pub fn parse_graph(text: &str) -> Result<GraphFile> {
    let mut header: Option<(usize, usize)> = None;
    let mut rotation: Vec<Option<Vec<Vertex>>> = Vec::new();
    let mut anchors = Vec::new();
    let mut labels: Vec<Option<String>> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut toks = raw.split_whitespace();
        let Some(kind) = toks.next() else { continue };
        if kind == "c" {
            continue;
        }
        if kind == "p" {
            ensure!(header.is_none(), "line {line}: second header");
            let rest: Vec<_> = toks.collect();
            ensure!(rest.len() == 3 && rest[0] == "pgr", "line {line}: expected `p pgr <n> <m>`");
            let n = rest[1].parse().with_context(|| format!("line {line}: bad vertex count"))?;
            let m = rest[2].parse().with_context(|| format!("line {line}: bad edge count"))?;
            header = Some((n, m));
            rotation = vec![None; n];
            labels = vec![None; n];
            continue;
        }
        let Some((n, _)) = header else { bail!("line {line}: data before the `p pgr` header") };
        match kind {
            "r" => {
                let v = parse_id(toks.next().with_context(|| format!("line {line}: missing vertex"))?, n, line)?;
                ensure!(rotation[v].is_none(), "line {line}: rotation of vertex {} given twice", v + 1);
                rotation[v] = Some(toks.map(|t| parse_id(t, n, line)).collect::<Result<_>>()?);
            }
            "o" => {
                let ids: Vec<_> = toks.map(|t| parse_id(t, n, line)).collect::<Result<_>>()?;
                ensure!(ids.len() == 2, "line {line}: expected `o <u> <v>`");
                anchors.push((ids[0], ids[1]));
            }
            "l" => {
                let v = parse_id(toks.next().with_context(|| format!("line {line}: missing vertex"))?, n, line)?;
                let label: Vec<_> = toks.collect();
                ensure!(!label.is_empty(), "line {line}: empty label");
                labels[v] = Some(label.join(" "));
            }
            other => bail!("line {line}: unknown line type {other:?}"),
        }
    }
    let Some((n, m)) = header else { bail!("missing `p pgr` header") };
    ensure!(n > 0, "graph has no vertices");
    let rotation: Vec<Vec<Vertex>> = rotation
        .into_iter()
        .enumerate()
        .map(|(v, r)| r.with_context(|| format!("no rotation line for vertex {}", v + 1)))
        .collect::<Result<_>>()?;
    let file = GraphFile {
        rotation,
        anchors,
        labels: match labels.iter().filter(|l| l.is_some()).count() {
            0 => None,
            k if k == n => Some(labels.into_iter().flatten().collect()),
            _ => bail!("labels must be given for all vertices or none"),
        },
    };
    ensure!(
        file.rotation.iter().map(Vec::len).sum::<usize>() == 2 * m,
        "header announces {m} edges but rotations list {} darts",
        file.rotation.iter().map(Vec::len).sum::<usize>()
    );
    file.pieces()?;
    Ok(file)
}

pub fn write_graph(file: &GraphFile, comment: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(c) = comment {
        writeln!(out, "c {c}").unwrap();
    }
    writeln!(out, "p pgr {} {}", file.num_vertices(), file.num_edges()).unwrap();
    for (v, r) in file.rotation.iter().enumerate() {
        write!(out, "r {}", v + 1).unwrap();
        for &u in r {
            write!(out, " {}", u + 1).unwrap();
        }
        out.push('\n');
    }
    for &(u, v) in &file.anchors {
        writeln!(out, "o {} {}", u + 1, v + 1).unwrap();
    }
    if let Some(labels) = &file.labels {
        for (v, l) in labels.iter().enumerate() {
            writeln!(out, "l {} {l}", v + 1).unwrap();
        }
    }
    out
}

pub fn write_td(td: &TreeDecomposition, n: usize) -> String {
    let mut out = String::new();
    writeln!(out, "s td {} {} {n}", td.bags.len(), td.width() + 1).unwrap();
    for (i, bag) in td.bags.iter().enumerate() {
        write!(out, "b {}", i + 1).unwrap();
        for &v in bag {
            write!(out, " {}", v + 1).unwrap();
        }
        out.push('\n');
    }
    for &(a, b) in &td.edges {
        writeln!(out, "{} {}", a + 1, b + 1).unwrap();
    }
    out
}

/// Parses a `td` file; returns the decomposition and the announced vertex count.
pub fn parse_td(text: &str) -> Result<(TreeDecomposition, usize)> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut bags: Vec<Option<Vec<Vertex>>> = Vec::new();
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let toks: Vec<_> = raw.split_whitespace().collect();
        match toks.first() {
            None | Some(&"c") => continue,
            Some(&"s") => {
                ensure!(header.is_none(), "line {line}: second header");
                ensure!(toks.len() == 5 && toks[1] == "td", "line {line}: expected `s td <bags> <width+1> <n>`");
                let nums: Vec<usize> = toks[2..]
                    .iter()
                    .map(|t| t.parse().with_context(|| format!("line {line}: bad number {t:?}")))
                    .collect::<Result<_>>()?;
                header = Some((nums[0], nums[1], nums[2]));
                bags = vec![None; nums[0]];
            }
            Some(_) => {
                let Some((b, _, n)) = header else { bail!("line {line}: data before the `s td` header") };
                if toks[0] == "b" {
                    ensure!(toks.len() >= 2, "line {line}: missing bag id");
                    let id = parse_id(toks[1], b, line)?;
                    ensure!(bags[id].is_none(), "line {line}: bag {} given twice", id + 1);
                    bags[id] = Some(toks[2..].iter().map(|t| parse_id(t, n, line)).collect::<Result<_>>()?);
                } else {
                    ensure!(toks.len() == 2, "line {line}: expected a tree edge `<a> <b>`");
                    edges.push((parse_id(toks[0], b, line)?, parse_id(toks[1], b, line)?));
                }
            }
        }
    }
    let Some((_, w1, n)) = header else { bail!("missing `s td` header") };
    let bags: Vec<Vec<Vertex>> = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.with_context(|| format!("bag {} is missing", i + 1)))
        .collect::<Result<_>>()?;
    let td = TreeDecomposition::new(bags, edges);
    ensure!(
        td.width() + 1 == w1 as isize,
        "header announces largest bag {w1}, body has {}",
        td.width() + 1
    );
    Ok((td, n))
}
