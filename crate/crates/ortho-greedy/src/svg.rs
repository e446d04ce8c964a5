//! Deterministic SVG emission: 1 grid unit = 32 px, vertices as 4 px
//! squares, y axis flipped to screen coordinates. Write-only.

use crate::repgraph::Drawing;
use std::fmt::Write as _;

const UNIT: i64 = 32;
const MARGIN: i64 = 16;
const VERTEX: i64 = 4;

pub fn render(d: &Drawing) -> String {
    let min_x = *d.x.iter().min().unwrap();
    let max_x = *d.x.iter().max().unwrap();
    let min_y = *d.y.iter().min().unwrap();
    let max_y = *d.y.iter().max().unwrap();
    let width = (max_x - min_x) * UNIT + 2 * MARGIN;
    let height = (max_y - min_y) * UNIT + 2 * MARGIN;
    let px = |x: i64| (x - min_x) * UNIT + MARGIN;
    let py = |y: i64| (max_y - y) * UNIT + MARGIN;

    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    );
    for e in d.rep.edges() {
        let _ = writeln!(
            s,
            "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\" stroke-width=\"2\"/>",
            px(d.x[e.u]),
            py(d.y[e.u]),
            px(d.x[e.v]),
            py(d.y[e.v])
        );
    }
    for v in 0..d.rep.vertex_count() {
        let _ = writeln!(
            s,
            "  <rect x=\"{}\" y=\"{}\" width=\"{VERTEX}\" height=\"{VERTEX}\" fill=\"black\"><title>{v}</title></rect>",
            px(d.x[v]) - VERTEX / 2,
            py(d.y[v]) - VERTEX / 2
        );
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn render_is_deterministic_and_mentions_every_vertex() {
        let d = fixtures::fig1a();
        let a = render(&d);
        let b = render(&d);
        assert_eq!(a, b);
        assert_eq!(
            a.matches("<rect").count(),
            d.rep.vertex_count()
        );
        assert_eq!(a.matches("<line").count(), d.rep.edges().len());
    }
}
