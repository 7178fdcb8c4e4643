//! A small SVG drawing of a diagram: nodes on a circle, edges as straight
//! segments labelled by multiplicity, loops as small arcs outside the node.

use std::f64::consts::PI;
use std::fmt::Write as _;

use wilddiag::Diagram;

const SIZE: f64 = 360.0;
const NODE_R: f64 = 18.0;

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

fn positions(n: usize) -> Vec<(f64, f64)> {
    let c = SIZE / 2.0;
    if n == 1 {
        return vec![(c, c)];
    }
    let r = SIZE / 2.0 - 3.0 * NODE_R;
    (0..n)
        .map(|k| {
            let t = -PI / 2.0 + 2.0 * PI * k as f64 / n as f64;
            (c + r * t.cos(), c + r * t.sin())
        })
        .collect()
}

fn stroke(mult: i64) -> &'static str {
    if mult < 0 {
        " stroke-dasharray=\"5 4\""
    } else {
        ""
    }
}

pub fn render_svg(d: &Diagram) -> String {
    let pos = positions(d.len());
    let centre = SIZE / 2.0;
    let mut s = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {SIZE} {SIZE}\" width=\"{SIZE}\" height=\"{SIZE}\" font-family=\"sans-serif\" font-size=\"12\">\n"
    );
    for a in 0..d.len() {
        for b in a + 1..d.len() {
            let m = d.edge(a, b);
            if m == 0 {
                continue;
            }
            let ((x1, y1), (x2, y2)) = (pos[a], pos[b]);
            let _ = writeln!(
                s,
                "  <line x1=\"{x1:.1}\" y1=\"{y1:.1}\" x2=\"{x2:.1}\" y2=\"{y2:.1}\" stroke=\"#444\"{}/>",
                stroke(m)
            );
            if m != 1 {
                let (mx, my) = ((x1 + x2) / 2.0, (y1 + y2) / 2.0);
                let _ = writeln!(s, "  <text x=\"{mx:.1}\" y=\"{:.1}\" text-anchor=\"middle\" fill=\"#a33\">{m}</text>", my - 4.0);
            }
        }
    }
    for (i, &(x, y)) in pos.iter().enumerate() {
        let m = d.loops(i);
        if m == 0 {
            continue;
        }
        let (dx, dy) = if d.len() == 1 {
            (0.0, -1.0)
        } else {
            (x - centre, y - centre)
        };
        let norm = (dx * dx + dy * dy).sqrt();
        let (ux, uy) = (dx / norm, dy / norm);
        let (lx, ly) = (x + ux * NODE_R * 1.6, y + uy * NODE_R * 1.6);
        let _ = writeln!(
            s,
            "  <circle cx=\"{lx:.1}\" cy=\"{ly:.1}\" r=\"{:.1}\" fill=\"none\" stroke=\"#444\"{}/>",
            NODE_R * 0.8,
            stroke(m)
        );
        if m != 1 {
            let _ = writeln!(
                s,
                "  <text x=\"{:.1}\" y=\"{:.1}\" text-anchor=\"middle\" fill=\"#a33\">{m}</text>",
                lx + ux * NODE_R * 1.3,
                ly + uy * NODE_R * 1.3 + 4.0
            );
        }
    }
    for (node, &(x, y)) in d.nodes().iter().zip(&pos) {
        let _ = writeln!(
            s,
            "  <g class=\"node {}\"><title>{}</title><circle cx=\"{x:.1}\" cy=\"{y:.1}\" r=\"{NODE_R}\" fill=\"#fff\" stroke=\"#222\"/><text x=\"{x:.1}\" y=\"{:.1}\" text-anchor=\"middle\">{}</text></g>",
            node.kind,
            escape(&node.label),
            y + 4.0,
            node.dim
        );
    }
    s.push_str("</svg>\n");
    s
}
