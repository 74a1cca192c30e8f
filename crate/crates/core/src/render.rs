//! SVG and ASCII renderings of drawings.

use std::fmt::Write;

use crate::layout::{prune_polyline, Drawing};

const UNIT: i64 = 40;
const MARGIN: i64 = 20;

/// SVG 1.1 document; larger `y` is drawn higher on the page.
pub fn render_svg(d: &Drawing) -> String {
    let (x0, x1, y0, y1) = d.bounds();
    let px = |x: i64| MARGIN + (x - x0) * UNIT;
    let py = |y: i64| MARGIN + (y1 - y) * UNIT;
    let w = 2 * MARGIN + (x1 - x0) * UNIT;
    let h = 2 * MARGIN + (y1 - y0) * UNIT;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
    s.push_str(r#"<g fill="none" stroke="black" stroke-width="2">"#);
    s.push('\n');
    for e in &d.edges {
        let pts: Vec<String> = e
            .points
            .iter()
            .map(|p| format!("{},{}", px(p[0]), py(p[1])))
            .collect();
        let _ = writeln!(
            s,
            r#"<polyline data-from="{}" data-to="{}" points="{}"/>"#,
            e.from,
            e.to,
            pts.join(" ")
        );
    }
    s.push_str("</g>\n<g fill=\"white\" stroke=\"black\" stroke-width=\"2\">\n");
    for (i, p) in d.positions.iter().enumerate() {
        let _ = writeln!(
            s,
            r#"<circle data-id="{i}" cx="{}" cy="{}" r="6"/>"#,
            px(p[0]),
            py(p[1])
        );
    }
    s.push_str("</g>\n</svg>\n");
    s
}

/// Text grid with two characters per column step and two lines per row step.
/// Nodes are `o`, bends `+`, and segments are drawn with `|`, `-`, `/`, `\`.
pub fn render_ascii(d: &Drawing) -> String {
    let (x0, x1, y0, y1) = d.bounds();
    let cols = (2 * (x1 - x0) + 1) as usize;
    let rows = (2 * (y1 - y0) + 1) as usize;
    let mut grid = vec![vec![' '; cols]; rows];
    let cell = |p: [i64; 2]| ((2 * (y1 - p[1])) as usize, (2 * (p[0] - x0)) as usize);
    for e in &d.edges {
        let pts = prune_polyline(&e.points);
        for s in pts.windows(2) {
            let (ra, ca) = cell(s[0]);
            let (rb, cb) = cell(s[1]);
            let (ra, ca, rb, cb) = (ra as i64, ca as i64, rb as i64, cb as i64);
            if ra == rb {
                for c in ca.min(cb) + 1..ca.max(cb) {
                    grid[ra as usize][c as usize] = '-';
                }
                continue;
            }
            // walk from the upper end (smaller grid row) to the lower end
            let ((r0, c0), (r1, c1)) = if ra < rb {
                ((ra, ca), (rb, cb))
            } else {
                ((rb, cb), (ra, ca))
            };
            let ch = match (c1 - c0).signum() {
                0 => '|',
                1 => '\\',
                _ => '/',
            };
            for r in r0 + 1..r1 {
                let num = (c1 - c0) * (r - r0);
                if num % (r1 - r0) == 0 {
                    let c = c0 + num / (r1 - r0);
                    grid[r as usize][c as usize] = ch;
                }
            }
        }
        for p in &pts[1..pts.len().saturating_sub(1)] {
            let (r, c) = cell(*p);
            grid[r][c] = '+';
        }
    }
    for p in &d.positions {
        let (r, c) = cell(*p);
        grid[r][c] = 'o';
    }
    let mut out = String::with_capacity(rows * (cols + 1));
    for line in grid {
        let text: String = line.into_iter().collect();
        out.push_str(text.trim_end());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::layout::{draw_ordered, draw_unordered};
    use crate::rank::rank;
    use crate::tree::*;
    use crate::width::rooted_pathwidth;

    #[test]
    fn single_node_svg_has_one_circle() {
        let t = Tree::single();
        let s = render_svg(&draw_unordered(&t, &rooted_pathwidth(&t)));
        assert_eq!(s.matches("<circle").count(), 1);
    }

    #[test]
    fn path_renders_on_one_vertical_line() {
        let t = gen_path(3).unwrap();
        let d = draw_unordered(&t, &rooted_pathwidth(&t));
        let s = render_svg(&d);
        assert_eq!(s.matches("<circle").count(), 3);
        assert_eq!(s.matches(r#"cx="20""#).count(), 3);
        assert_eq!(render_ascii(&d), "o\n|\no\n|\no\n");
    }

    #[test]
    fn ascii_marks_bends_and_diagonals() {
        let t = parse_tree("(()())").unwrap();
        let d = draw_unordered(&t, &rooted_pathwidth(&t));
        assert_eq!(render_ascii(&d), "o\n|\\\n| o\n|\no\n");
        let d = draw_ordered(&t, &rank(&t));
        assert!(render_ascii(&d).contains('o'));
    }

    #[test]
    fn rendering_is_deterministic() {
        let t = gen_random_tree(40, 3, None).unwrap();
        let d = draw_ordered(&t, &rank(&t));
        assert_eq!(render_svg(&d), render_svg(&d.clone()));
        assert_eq!(render_ascii(&d), render_ascii(&d.clone()));
    }
}
