//! Deterministic SVG strand diagrams.
//!
//! The range tree is drawn on top, the domain tree mirrored below, and the
//! braid between them. Each strand is a single path with gaps where it
//! passes under a crossing; every crossing additionally gets a `crossing`
//! glyph (a redraw of the over segment), so the glyph count equals the word
//! length. Twist counts are annotated at the bottom of their strand, where
//! the twists live. Output is a pure function of the element: fixed float
//! formatting, no timestamps.

use std::fmt::Write as _;

use braidthom_core::{Element, Tree};

const MARGIN: f64 = 24.0;
const STRAND_GAP: f64 = 40.0;
const TREE_LEVEL: f64 = 28.0;
const ROW: f64 = 36.0;
const TWIST_BAND: f64 = 26.0;

fn ff(v: f64) -> String {
    format!("{v:.1}")
}

fn max_depth(t: &Tree) -> usize {
    match t.split_root() {
        None => 0,
        Some((l, r)) => 1 + max_depth(&l).max(max_depth(&r)),
    }
}

struct Lines {
    buf: String,
}

impl Lines {
    fn line(&mut self, class: &str, x1: f64, y1: f64, x2: f64, y2: f64) {
        writeln!(
            self.buf,
            "  <line class=\"{class}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
            ff(x1),
            ff(y1),
            ff(x2),
            ff(y2)
        )
        .expect("writing to string");
    }
}

/// Vertical placement of one tree: root at `y_base`, one `step` per depth
/// level (negative for the mirrored bottom tree), leaves stemmed down to
/// `y_leaf_line`.
struct TreeGeom<'a> {
    xs: &'a [f64],
    y_base: f64,
    step: f64,
    y_leaf_line: f64,
}

/// Recursive tree layout: leaves sit on the strand columns at the leaf
/// line, each parent centered over its children. Returns the x of the
/// subtree root.
fn layout_tree(
    t: &Tree,
    geom: &TreeGeom,
    next_leaf: &mut usize,
    depth: usize,
    out: &mut Lines,
) -> f64 {
    let y = geom.y_base + depth as f64 * geom.step;
    match t.split_root() {
        None => {
            let x = geom.xs[*next_leaf];
            *next_leaf += 1;
            if (y - geom.y_leaf_line).abs() > 0.01 {
                out.line("tree", x, y, x, geom.y_leaf_line);
            }
            x
        }
        Some((l, r)) => {
            let child_y = geom.y_base + (depth + 1) as f64 * geom.step;
            let xl = layout_tree(&l, geom, next_leaf, depth + 1, out);
            let xr = layout_tree(&r, geom, next_leaf, depth + 1, out);
            let x = (xl + xr) / 2.0;
            out.line("tree", x, y, xl, child_y);
            out.line("tree", x, y, xr, child_y);
            x
        }
    }
}

/// Render the strand diagram of `g` as a complete SVG document.
pub fn render(g: &Element) -> String {
    let n = g.n();
    let letters = g.ribbon().braid().letters();
    let twists = g.ribbon().twists();
    let rows = letters.len();
    let has_twists = twists.iter().any(|&m| m != 0);

    let xs: Vec<f64> = (0..n).map(|k| MARGIN + k as f64 * STRAND_GAP).collect();
    let depth_top = max_depth(g.left());
    let depth_bot = max_depth(g.right());
    let y_braid_top = MARGIN + depth_top as f64 * TREE_LEVEL;
    let y_braid_bot = y_braid_top + rows as f64 * ROW;
    let band = if has_twists { TWIST_BAND } else { 0.0 };
    let y_bot_leaves = y_braid_bot + band;
    let height = y_bot_leaves + depth_bot as f64 * TREE_LEVEL + MARGIN;
    let width = 2.0 * MARGIN + (n - 1) as f64 * STRAND_GAP;

    // Strand occupying each slot at each row boundary, boundary 0 = top.
    let mut boundaries = vec![vec![0usize; n]; rows + 1];
    boundaries[rows] = (0..n).collect();
    for r in (0..rows).rev() {
        let mut above = boundaries[r + 1].clone();
        above.swap(letters[r].index - 1, letters[r].index);
        boundaries[r] = above;
    }
    let slot_of = |b: usize, strand: usize| -> usize {
        boundaries[b]
            .iter()
            .position(|&s| s == strand)
            .expect("strand present")
    };

    let mut svg = String::new();
    writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">",
        ff(width),
        ff(height),
        ff(width),
        ff(height)
    )
    .expect("writing to string");
    writeln!(
        svg,
        "  <rect width=\"{}\" height=\"{}\" fill=\"white\"/>",
        ff(width),
        ff(height)
    )
    .expect("writing to string");
    writeln!(
        svg,
        "  <g stroke=\"black\" stroke-width=\"2.0\" fill=\"none\">"
    )
    .expect("write");

    let mut lines = Lines { buf: String::new() };
    let top_geom = TreeGeom {
        xs: &xs,
        y_base: MARGIN,
        step: TREE_LEVEL,
        y_leaf_line: y_braid_top,
    };
    layout_tree(g.left(), &top_geom, &mut 0, 0, &mut lines);
    let bot_geom = TreeGeom {
        xs: &xs,
        y_base: y_bot_leaves + depth_bot as f64 * TREE_LEVEL,
        step: -TREE_LEVEL,
        y_leaf_line: y_bot_leaves,
    };
    layout_tree(g.right(), &bot_geom, &mut 0, 0, &mut lines);
    svg.push_str(&lines.buf);

    // One path per strand, top to bottom, with gaps at under-crossings.
    for strand in 0..n {
        let mut subpaths: Vec<Vec<(f64, f64)>> = Vec::new();
        let mut cur = vec![(xs[slot_of(0, strand)], y_braid_top)];
        for (r, letter) in letters.iter().enumerate() {
            let from_slot = slot_of(r, strand);
            let to_slot = slot_of(r + 1, strand);
            let y_from = y_braid_top + r as f64 * ROW;
            let y_to = y_from + ROW;
            let p = (xs[from_slot], y_from);
            let q = (xs[to_slot], y_to);
            if from_slot != to_slot {
                // This strand takes part in the crossing at row r. Counting
                // at the bottom boundary of the row, the strand at position
                // `index` goes under for a positive letter.
                let under = if to_slot + 1 == letter.index {
                    !letter.positive
                } else {
                    letter.positive
                };
                if under {
                    let g1 = (p.0 + 0.38 * (q.0 - p.0), p.1 + 0.38 * (q.1 - p.1));
                    let g2 = (p.0 + 0.62 * (q.0 - p.0), p.1 + 0.62 * (q.1 - p.1));
                    cur.push(g1);
                    subpaths.push(std::mem::take(&mut cur));
                    cur.push(g2);
                }
            }
            cur.push(q);
        }
        cur.push((xs[slot_of(rows, strand)], y_bot_leaves));
        subpaths.push(cur);
        let mut d = String::new();
        for sub in &subpaths {
            for (i, (x, y)) in sub.iter().enumerate() {
                let op = if i == 0 { "M" } else { "L" };
                write!(d, "{}{} {} ", op, ff(*x), ff(*y)).expect("writing to string");
            }
        }
        writeln!(svg, "  <path class=\"strand\" d=\"{}\"/>", d.trim_end()).expect("write");
    }

    // Crossing glyphs: redraw the over segment of each row.
    for (r, letter) in letters.iter().enumerate() {
        let y_from = y_braid_top + r as f64 * ROW;
        let y_to = y_from + ROW;
        let (lo, hi) = (xs[letter.index - 1], xs[letter.index]);
        // Bottom position `index` goes under on a positive crossing, so the
        // over segment rises from the other side.
        let (x_bot, x_top) = if letter.positive { (hi, lo) } else { (lo, hi) };
        writeln!(
            svg,
            "  <g class=\"crossing\"><line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/></g>",
            ff(x_bot),
            ff(y_to),
            ff(x_top),
            ff(y_from)
        )
        .expect("writing to string");
    }

    writeln!(svg, "  </g>").expect("writing to string");

    if has_twists {
        for (k, &m) in twists.iter().enumerate() {
            if m != 0 {
                writeln!(
                    svg,
                    "  <text class=\"twist\" x=\"{}\" y=\"{}\" font-size=\"13\" \
                     font-family=\"monospace\" fill=\"black\">{m}</text>",
                    ff(xs[k] + 5.0),
                    ff(y_braid_bot + 17.0)
                )
                .expect("writing to string");
            }
        }
    }

    svg.push_str("</svg>\n");
    svg
}
