use std::fmt::Write as _;

use super::PointDiagram;

const UNIT: i64 = 40;
const MARGIN: i64 = 40;
const TICK: i64 = 12;

/// Splits the edge list into chains `i, i+1, …` so each chain becomes one
/// polyline. Edges that do not continue a chain start a new one.
fn chains(edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for &(i, j) in edges {
        match out.last_mut() {
            Some(chain) if j == i + 1 && chain.last() == Some(&i) && chain[chain.len() - 2] + 1 == i => chain.push(j),
            _ => out.push(vec![i, j]),
        }
    }
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Stand-alone SVG 1.1 with y pointing up: heights are flipped into screen
/// coordinates on an integer grid. Rests are drawn as vertical ticks on the
/// reference line.
pub fn emit_svg(diagram: &PointDiagram) -> String {
    let ys = diagram.points.iter().filter_map(|p| p.y.map(i64::from));
    let top = ys.clone().max().unwrap_or(0).max(0);
    let bottom = ys.min().unwrap_or(0).min(0);
    let cols = diagram.points.len().max(1) as i64;
    let width = 2 * MARGIN + (cols - 1) * UNIT;
    let height = 2 * MARGIN + (top - bottom) * UNIT;
    let sx = |x: usize| MARGIN + x as i64 * UNIT;
    let sy = |y: i64| MARGIN + (top - y) * UNIT;

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        out,
        r##"  <line x1="0" y1="{0}" x2="{width}" y2="{0}" stroke="#bbbbbb" stroke-dasharray="4 4"/>"##,
        sy(0)
    );
    for chain in chains(&diagram.edges) {
        let coords: Vec<String> = chain
            .iter()
            .map(|&i| {
                let p = &diagram.points[i];
                format!("{},{}", sx(p.x), sy(p.y.map(i64::from).unwrap_or(0)))
            })
            .collect();
        let _ = writeln!(
            out,
            r#"  <polyline points="{}" fill="none" stroke="black" stroke-width="2"/>"#,
            coords.join(" ")
        );
    }
    for p in &diagram.points {
        let x = sx(p.x);
        match p.y {
            Some(y) => {
                let y = sy(i64::from(y));
                let _ = writeln!(out, r#"  <circle cx="{x}" cy="{y}" r="4" fill="black"/>"#);
                let _ = writeln!(
                    out,
                    r#"  <text x="{}" y="{}" font-size="10" font-family="monospace">{}</text>"#,
                    x + 6,
                    y - 6,
                    escape(&p.label)
                );
            }
            None => {
                let y = sy(0);
                let _ = writeln!(
                    out,
                    r#"  <line x1="{x}" y1="{}" x2="{x}" y2="{}" stroke="gray" stroke-width="2"/>"#,
                    y - TICK,
                    y + TICK
                );
                let _ = writeln!(
                    out,
                    r#"  <text x="{}" y="{}" font-size="10" font-family="monospace" fill="gray">{}</text>"#,
                    x + 6,
                    y + TICK + 10,
                    escape(&p.label)
                );
            }
        }
    }
    out.push_str("</svg>\n");
    out
}
