//! Text, JSON and Graphviz renderings of a compiled diagram.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::congruence::IntMatrix;
use crate::diagram::{Compiled, Node};
use crate::error::{Error, Result};

#[derive(Serialize)]
struct JsonEdge {
    a: usize,
    b: usize,
    mult: i64,
}

#[derive(Serialize)]
struct JsonLoop {
    node: usize,
    mult: i64,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    nodes: &'a [Node],
    edges: Vec<JsonEdge>,
    loops: Vec<JsonLoop>,
    cartan: &'a [Vec<i64>],
    pairing: i64,
    #[serde(rename = "dim_B")]
    dim_b: i64,
    nonempty_assumed: bool,
    irr_end: u64,
    rank: u64,
    warnings: &'a [String],
}

fn edge_list(c: &Compiled) -> Vec<JsonEdge> {
    let d = &c.diagram;
    let mut out = Vec::new();
    for a in 0..d.len() {
        for b in a + 1..d.len() {
            if d.edge(a, b) != 0 {
                out.push(JsonEdge {
                    a,
                    b,
                    mult: d.edge(a, b),
                });
            }
        }
    }
    out
}

fn loop_list(c: &Compiled) -> Vec<JsonLoop> {
    (0..c.diagram.len())
        .filter(|&i| c.diagram.loops(i) != 0)
        .map(|i| JsonLoop {
            node: i,
            mult: c.diagram.loops(i),
        })
        .collect()
}

pub fn render_json(c: &Compiled) -> String {
    let report = JsonReport {
        nodes: c.diagram.nodes(),
        edges: edge_list(c),
        loops: loop_list(c),
        cartan: &c.cartan.cartan,
        pairing: c.cartan.pairing,
        dim_b: c.cartan.dim_b,
        nonempty_assumed: c.cartan.nonempty_assumed,
        irr_end: c.irr_end,
        rank: c.rank,
        warnings: c.warnings(),
    };
    serde_json::to_string_pretty(&report).expect("report serializes")
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz source. Negative multiplicities are dashed and labelled `-m`.
pub fn render_dot(c: &Compiled) -> String {
    let mut s = String::from("graph diagram {\n  node [shape=circle];\n");
    for n in c.diagram.nodes() {
        let _ = writeln!(
            s,
            "  n{} [label=\"{}\\n{}\", tooltip=\"{}\"];",
            n.id,
            n.dim,
            dot_escape(&n.label),
            n.kind
        );
    }
    let mut push = |a: usize, b: usize, m: i64| {
        let attrs = match m {
            1 => String::new(),
            m if m > 1 => format!(" [label=\"{m}\"]"),
            m => format!(" [style=dashed, label=\"{m}\"]"),
        };
        let _ = writeln!(s, "  n{a} -- n{b}{attrs};");
    };
    for l in loop_list(c) {
        push(l.node, l.node, l.mult);
    }
    for e in edge_list(c) {
        push(e.a, e.b, e.mult);
    }
    s.push_str("}\n");
    s
}

fn matrix_rows(m: &[Vec<i64>]) -> Vec<String> {
    let width = m
        .iter()
        .flatten()
        .map(|x| x.to_string().len())
        .max()
        .unwrap_or(1);
    m.iter()
        .map(|row| {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
            format!("[{}]", cells.join(" "))
        })
        .collect()
}

pub fn render_text(c: &Compiled) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "irregular class: {}", c.input.irregular_class());
    let _ = writeln!(s, "rank: {}    Irr End: {}", c.rank, c.irr_end);
    if !c.input.tame_poles().is_empty() {
        let poles: Vec<String> = c
            .input
            .tame_poles()
            .iter()
            .map(|p| format!("{} {}", p.location, p.class))
            .collect();
        let _ = writeln!(s, "tame poles: {}", poles.join("; "));
    }
    let _ = writeln!(s, "nodes:");
    for n in c.diagram.nodes() {
        let loops = c.diagram.loops(n.id);
        let loops = if loops != 0 {
            format!("  loops {loops}")
        } else {
            String::new()
        };
        let _ = writeln!(
            s,
            "  {:>2}  {:<10}  dim {}  {}{}",
            n.id,
            n.kind.to_string(),
            n.dim,
            n.label,
            loops
        );
    }
    let edges = edge_list(c);
    if !edges.is_empty() {
        let _ = writeln!(s, "edges:");
        for e in edges {
            let _ = writeln!(s, "  {} -- {}  x{}", e.a, e.b, e.mult);
        }
    }
    let _ = writeln!(s, "cartan:");
    for row in matrix_rows(&c.cartan.cartan) {
        let _ = writeln!(s, "  {row}");
    }
    let dims: Vec<String> = c.cartan.dims.iter().map(u64::to_string).collect();
    let _ = writeln!(s, "dimension vector: ({})", dims.join(", "));
    let _ = writeln!(s, "pairing (d,d): {}", c.cartan.pairing);
    let _ = writeln!(s, "dim M_B: {} (if nonempty)", c.cartan.dim_b);
    for w in c.warnings() {
        let _ = writeln!(s, "warning: {w}");
    }
    s
}

#[derive(Deserialize)]
#[serde(untagged)]
enum MatrixFile {
    Bare(IntMatrix),
    Report { cartan: IntMatrix },
}

/// Reads an integer matrix from JSON: either a bare array of rows or a
/// report object with a `cartan` field.
pub fn read_matrix_json(text: &str) -> Result<IntMatrix> {
    match serde_json::from_str::<MatrixFile>(text) {
        Ok(MatrixFile::Bare(m)) | Ok(MatrixFile::Report { cartan: m }) => Ok(m),
        Err(e) => Err(Error::parse(
            e.line(),
            e.column(),
            format!("not an integer matrix: {e}"),
        )),
    }
}
