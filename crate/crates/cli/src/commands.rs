//! Command implementations. Each returns a serialisable report whose text
//! form is what the binary prints.

use std::fmt::Write;
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use netbound::oracles::{brute_net_order, brute_treewidth};
use netbound::{
    bt_alg, build_decomposition, default_frame, generate, make_frame, net_alg,
    validate_tree_decomposition, Family, Frame3, PlaneGraph, TreeDecomposition, Violation,
};
use serde::Serialize;

use crate::formats::{parse_graph, write_graph, write_td, GraphFile};

/// How to split the peripheral walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FrameSpec {
    #[default]
    Thirds,
    Split(usize, usize),
}

impl FromStr for FrameSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "thirds" {
            return Ok(FrameSpec::Thirds);
        }
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad walk index {t:?}"));
        match s.split_once(',') {
            Some((j, k)) => Ok(FrameSpec::Split(parse(j)?, parse(k)?)),
            None => Err(format!("expected `thirds` or `j,k`, got {s:?}")),
        }
    }
}

impl FrameSpec {
    pub fn build(self, g: &PlaneGraph) -> Result<Frame3> {
        Ok(match self {
            FrameSpec::Thirds => default_frame(g),
            FrameSpec::Split(j, k) => make_frame(g, j, k)?,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum GenFamily {
    Grid,
    Tri,
    Cycle,
    Path,
    Random,
    RandomPlane,
    SplitSquare,
    HexPatch,
}

pub fn family(kind: GenFamily, size: Option<usize>, seed: u64) -> Result<Family> {
    let need = || size.with_context(|| format!("{kind:?} needs a size"));
    Ok(match kind {
        GenFamily::Grid => Family::SquareGrid(need()?),
        GenFamily::Tri => Family::TriangularGrid(need()?),
        GenFamily::Cycle => Family::Cycle(need()?),
        GenFamily::Path => Family::Path(need()?),
        GenFamily::Random => Family::RandomTriangulation { n: need()?, seed },
        GenFamily::RandomPlane => Family::RandomPlane { n: need()?, seed },
        GenFamily::SplitSquare => Family::SplitSquare,
        GenFamily::HexPatch => Family::HexPatch,
    })
}

/// Graph file text for a generated family.
pub fn cmd_gen(family: Family) -> Result<String> {
    let g = generate(family)?;
    Ok(write_graph(&GraphFile::from_plane(&g), Some(&format!("{family:?}"))))
}

pub fn load_graph(path: &std::path::Path) -> Result<GraphFile> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_graph(&text).with_context(|| format!("parsing {}", path.display()))
}

pub trait Report: Serialize {
    fn text(&self) -> String;

    fn json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialise") + "\n"
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FrameReport {
    pub walk_length: usize,
    pub j: usize,
    pub k: usize,
}

impl FrameReport {
    fn of(f: &Frame3) -> Self {
        Self { walk_length: f.n(), j: f.j(), k: f.k() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NetOrderReport {
    pub frame: FrameReport,
    pub order: usize,
    pub cover: Vec<String>,
    /// Root of the witness vine: a vertex name, or `face <n>` for a face vertex.
    pub center: String,
    pub vine_faces: usize,
}

impl Report for NetOrderReport {
    fn text(&self) -> String {
        let f = &self.frame;
        let mut s = String::new();
        writeln!(s, "frame: walk length {}, j = {}, k = {}", f.walk_length, f.j, f.k).unwrap();
        writeln!(s, "order: {}", self.order).unwrap();
        writeln!(s, "cover: {}", self.cover.join(" ")).unwrap();
        writeln!(s, "center: {}", self.center).unwrap();
        writeln!(s, "vine faces: {}", self.vine_faces).unwrap();
        s
    }
}

pub fn cmd_net_order(file: &GraphFile, frame: FrameSpec) -> Result<NetOrderReport> {
    let g = file.connected()?;
    let f = frame.build(&g)?;
    let nc = net_alg(&g, &f)?;
    let fg = &nc.face_graph;
    let center = match fg.source_face(nc.center()) {
        None => g.label(nc.center()),
        Some(face) => format!("face {face}"),
    };
    Ok(NetOrderReport {
        frame: FrameReport::of(&f),
        order: nc.order,
        cover: nc.cover.iter().map(|&v| g.label(v)).collect(),
        center,
        vine_faces: nc.tree.vine.iter().filter(|&&v| !fg.is_original(v)).count(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    pub first_vertex: String,
    pub vertices: usize,
    pub kb: usize,
    pub search_nodes: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub vertices: usize,
    pub edges: usize,
    pub components: Vec<ComponentReport>,
    pub kb: usize,
    pub bramble_number: [usize; 2],
    pub treewidth: [isize; 2],
    pub lambda: [usize; 2],
}

impl BoundsReport {
    fn new(file: &GraphFile, components: Vec<ComponentReport>) -> Self {
        let kb = components.iter().map(|c| c.kb).max().unwrap_or(0);
        Self {
            vertices: file.num_vertices(),
            edges: file.num_edges(),
            components,
            kb,
            bramble_number: [kb, 4 * kb],
            treewidth: [kb as isize - 1, 4 * kb as isize - 1],
            lambda: [kb, 4 * kb],
        }
    }
}

impl Report for BoundsReport {
    fn text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "vertices: {}", self.vertices).unwrap();
        writeln!(s, "edges: {}", self.edges).unwrap();
        if self.components.len() > 1 {
            for (i, c) in self.components.iter().enumerate() {
                writeln!(
                    s,
                    "component {}: {} vertices from {}, KB = {}",
                    i + 1,
                    c.vertices,
                    c.first_vertex,
                    c.kb
                )
                .unwrap();
            }
        }
        writeln!(s, "KB: {}", self.kb).unwrap();
        let [a, b] = self.bramble_number;
        writeln!(s, "bramble number: [{a}, {b}]").unwrap();
        let [a, b] = self.treewidth;
        writeln!(s, "treewidth: [{a}, {b}]").unwrap();
        let [a, b] = self.lambda;
        writeln!(s, "lambda: [{a}, {b}]").unwrap();
        s
    }
}

/// Runs the search on every component; the frame, if given, needs a connected graph.
fn search(file: &GraphFile, frame: Option<FrameSpec>) -> Result<Vec<(Vec<usize>, PlaneGraph, netbound::BtRun)>> {
    let pieces = file.pieces()?;
    if frame.is_some() && pieces.len() > 1 {
        bail!("--frame needs a connected graph; this one has {} components", pieces.len());
    }
    pieces
        .into_iter()
        .map(|p| {
            let f = frame.map(|spec| spec.build(&p.graph)).transpose()?;
            let run = bt_alg(&p.graph, f)?;
            Ok((p.vertices, p.graph, run))
        })
        .collect()
}

pub fn cmd_bounds(file: &GraphFile, frame: Option<FrameSpec>) -> Result<BoundsReport> {
    let comps = search(file, frame)?
        .into_iter()
        .map(|(vs, _, run)| ComponentReport {
            first_vertex: file.name(vs[0]),
            vertices: vs.len(),
            kb: run.kb,
            search_nodes: run.nodes.len(),
        })
        .collect();
    Ok(BoundsReport::new(file, comps))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecomposeReport {
    pub kb: usize,
    pub width: isize,
    pub width_bound: isize,
    pub bags: usize,
}

impl Report for DecomposeReport {
    fn text(&self) -> String {
        format!(
            "KB: {}\nwidth: {}\nwidth bound: {}\nbags: {}\n",
            self.kb, self.width, self.width_bound, self.bags
        )
    }
}

/// Decomposition of the whole file graph: one per component, roots chained.
pub fn cmd_decompose(file: &GraphFile, frame: Option<FrameSpec>) -> Result<(TreeDecomposition, DecomposeReport)> {
    let mut td = TreeDecomposition::default();
    let mut roots = Vec::new();
    let mut kb = 0;
    for (vs, g, run) in search(file, frame)? {
        let dt = build_decomposition(&run, &g)?;
        let offset = td.bags.len();
        roots.push(offset);
        kb = kb.max(dt.kb);
        td.bags.extend(dt.td.bags.iter().map(|b| {
            let mut bag: Vec<_> = b.iter().map(|&v| vs[v]).collect();
            bag.sort_unstable();
            bag
        }));
        td.edges.extend(dt.td.edges.iter().map(|&(a, b)| (a + offset, b + offset)));
    }
    td.edges.extend(roots.windows(2).map(|w| (w[0], w[1])));
    let check = validate_tree_decomposition(&file.to_simple()?, &td);
    if let Some(v) = check.violation {
        bail!("decomposition failed validation: {}", describe(file, &v));
    }
    let report = DecomposeReport {
        kb,
        width: td.width(),
        width_bound: 4 * kb as isize - 1,
        bags: td.bags.len(),
    };
    Ok((td, report))
}

pub fn td_text(file: &GraphFile, td: &TreeDecomposition) -> String {
    write_td(td, file.num_vertices())
}

fn describe(file: &GraphFile, v: &Violation) -> String {
    match *v {
        Violation::NotATree => "the bags do not form a tree".into(),
        Violation::UnknownVertex(x) => format!("a bag mentions unknown vertex {}", x + 1),
        Violation::VertexMissing(x) => format!("vertex {} is in no bag", file.name(x)),
        Violation::VertexDisconnected(x) => {
            format!("the bags containing vertex {} are not connected", file.name(x))
        }
        Violation::EdgeUncovered(a, b) => {
            format!("no bag contains edge {}-{}", file.name(a), file.name(b))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub valid: bool,
    pub width: isize,
    pub violation: Option<String>,
}

impl Report for VerifyReport {
    fn text(&self) -> String {
        match &self.violation {
            None => format!("valid: yes\nwidth: {}\n", self.width),
            Some(v) => format!("valid: no\nwidth: {}\nviolation: {v}\n", self.width),
        }
    }
}

pub fn cmd_verify(file: &GraphFile, td: &TreeDecomposition, td_vertices: usize) -> Result<VerifyReport> {
    if td_vertices != file.num_vertices() {
        bail!(
            "decomposition is for {td_vertices} vertices, graph has {}",
            file.num_vertices()
        );
    }
    let v = validate_tree_decomposition(&file.to_simple()?, td);
    Ok(VerifyReport {
        valid: v.is_valid(),
        width: v.width,
        violation: v.violation.map(|x| describe(file, &x)),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleNetReport {
    pub frame: FrameReport,
    pub order: usize,
    pub cover: Vec<String>,
}

impl Report for OracleNetReport {
    fn text(&self) -> String {
        let f = &self.frame;
        format!(
            "frame: walk length {}, j = {}, k = {}\norder: {}\ncover: {}\n",
            f.walk_length,
            f.j,
            f.k,
            self.order,
            self.cover.join(" ")
        )
    }
}

pub fn cmd_oracle_net_order(file: &GraphFile, frame: FrameSpec, limit: usize) -> Result<OracleNetReport> {
    let g = file.connected()?;
    let f = frame.build(&g)?;
    let r = brute_net_order(&g, &f, limit)?;
    Ok(OracleNetReport {
        frame: FrameReport::of(&f),
        order: r.order,
        cover: r.cover.iter().map(|&v| g.label(v)).collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleTreewidthReport {
    pub treewidth: isize,
    pub bramble_number: isize,
}

impl Report for OracleTreewidthReport {
    fn text(&self) -> String {
        format!("treewidth: {}\nbramble number: {}\n", self.treewidth, self.bramble_number)
    }
}

pub fn cmd_oracle_treewidth(file: &GraphFile, limit: usize) -> Result<(TreeDecomposition, OracleTreewidthReport)> {
    let (tw, td) = brute_treewidth(&file.to_simple()?, limit)?;
    Ok((td, OracleTreewidthReport { treewidth: tw, bramble_number: tw + 1 }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn file(f: Family) -> GraphFile {
        parse_graph(&cmd_gen(f).unwrap()).unwrap()
    }

    #[test]
    fn frame_spec_parsing() {
        assert_eq!("thirds".parse(), Ok(FrameSpec::Thirds));
        assert_eq!("5,10".parse(), Ok(FrameSpec::Split(5, 10)));
        assert!("5".parse::<FrameSpec>().is_err());
        assert!("a,b".parse::<FrameSpec>().is_err());
    }

    #[test]
    fn net_order_examples() {
        let c15 = file(Family::Cycle(15));
        let r = cmd_net_order(&c15, FrameSpec::Split(5, 10)).unwrap();
        assert_eq!(r.order, 2);
        let tri = file(Family::TriangularGrid(6));
        assert_eq!(cmd_net_order(&tri, FrameSpec::Thirds).unwrap().order, 6);
        let k2 = file(Family::Path(2));
        assert_eq!(cmd_net_order(&k2, FrameSpec::Thirds).unwrap().order, 1);
        assert!(cmd_net_order(&c15, FrameSpec::Split(9, 3)).is_err());
    }

    #[test]
    fn bounds_examples() {
        let r = cmd_bounds(&file(Family::Path(1)), None).unwrap();
        assert_eq!(r.kb, 1);
        assert_eq!(r.treewidth, [0, 3]);
        let r = cmd_bounds(&file(Family::SquareGrid(6)), None).unwrap();
        assert!((2..=7).contains(&r.kb));
        assert_eq!(r.bramble_number, [r.kb, 4 * r.kb]);
    }

    #[test]
    fn disconnected_bounds_and_decomposition() {
        let f = parse_graph("p pgr 5 3\nr 1 2 3\nr 2 3 1\nr 3 1 2\nr 4\nr 5\no 1 2\n").unwrap();
        let r = cmd_bounds(&f, None).unwrap();
        assert_eq!(r.components.len(), 3);
        assert_eq!(r.kb, r.components[0].kb);
        let (td, rep) = cmd_decompose(&f, None).unwrap();
        assert_eq!(rep.kb, r.kb);
        assert!(cmd_verify(&f, &td, 5).unwrap().valid);
        assert!(cmd_bounds(&f, Some(FrameSpec::Thirds)).is_err());
    }

    #[test]
    fn verify_names_missing_vertex() {
        let f = file(Family::SquareGrid(3));
        let (mut td, _) = cmd_decompose(&f, None).unwrap();
        for bag in &mut td.bags {
            bag.retain(|&v| v != 4);
        }
        let r = cmd_verify(&f, &td, 9).unwrap();
        assert!(!r.valid);
        assert_eq!(r.violation.as_deref(), Some("vertex 5 is in no bag"));
    }

    #[test]
    fn oracle_examples() {
        let (td, r) = cmd_oracle_treewidth(&file(Family::SquareGrid(3)), 15).unwrap();
        assert_eq!(r.treewidth, 3);
        assert!(cmd_verify(&file(Family::SquareGrid(3)), &td, 9).unwrap().valid);
        let r = cmd_oracle_net_order(&file(Family::SplitSquare), FrameSpec::Split(1, 2), 12).unwrap();
        assert_eq!(r.order, 2);
        assert_eq!(r.cover, vec!["a", "b"]);
        assert!(cmd_oracle_treewidth(&file(Family::SquareGrid(4)), 15).is_err());
        assert_eq!(cmd_oracle_treewidth(&file(Family::Path(6)), 15).unwrap().1.treewidth, 1);
    }
}
