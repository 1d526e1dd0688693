//! ASCII and SVG rendering of spirals and switching pairs.
//!
//! ASCII draws onto a character grid with the row axis flipped so larger
//! `j` appears higher, matching the mathematical orientation; the legend
//! says so. SVG output is a deterministic hand-built string, suitable for
//! byte-for-byte golden comparisons.

use hvswitch::lattice::{Point, Quadrant};
use hvswitch::spiral::SquaredSpiral;
use hvswitch::switching::SwitchingPair;

/// Rendering options shared by both backends.
#[derive(Debug, Clone, Copy)]
pub struct RenderSpec {
    pub cell_size: u32,
    pub labels: bool,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            cell_size: 2,
            labels: false,
        }
    }
}

/// What is being drawn: a closed spiral (with segments) or a bare pair.
pub enum Drawable {
    Spiral(SquaredSpiral),
    Switching(SwitchingPair),
}

impl Drawable {
    fn pair(&self) -> SwitchingPair {
        match self {
            Drawable::Spiral(s) => s.to_switching(),
            Drawable::Switching(p) => p.clone(),
        }
    }

    fn bounds(&self) -> (i32, i32, i32, i32) {
        match self {
            Drawable::Spiral(s) => {
                let r = s.bounding_rect();
                (r.min_i, r.min_j, r.max_i, r.max_j)
            }
            Drawable::Switching(p) => p.union().bounding_box().expect("non-empty"),
        }
    }

    fn segments(&self) -> Vec<(Point, Point)> {
        match self {
            Drawable::Spiral(s) => {
                let v = s.vertices();
                (0..v.len()).map(|k| (v[k], v[(k + 1) % v.len()])).collect()
            }
            Drawable::Switching(_) => Vec::new(),
        }
    }
}

pub fn render_ascii(item: &Drawable, spec: RenderSpec) -> String {
    let (min_i, min_j, max_i, max_j) = item.bounds();
    let cell = spec.cell_size.max(1) as i32;
    let width = ((max_i - min_i) * cell + 1) as usize;
    let height = ((max_j - min_j) * cell + 1) as usize;
    let mut canvas = vec![vec![' '; width]; height];
    // j grows upward mathematically, downward on screens: flip rows.
    let plot = |canvas: &mut Vec<Vec<char>>, i: i32, j: i32, ch: char| {
        let col = ((i - min_i) * cell) as usize;
        let row = ((max_j - j) * cell) as usize;
        let cur = canvas[row][col];
        canvas[row][col] = match (cur, ch) {
            (' ', c) => c,
            ('-', '|') | ('|', '-') => '+',
            (_, c) if c == 'o' || c == 'x' => c,
            (cur, _) => cur,
        };
    };
    for (a, b) in item.segments() {
        if a.j == b.j {
            let (lo, hi) = (a.i.min(b.i), a.i.max(b.i));
            let row = ((max_j - a.j) * cell) as usize;
            for col in ((lo - min_i) * cell)..=((hi - min_i) * cell) {
                let cur = canvas[row][col as usize];
                canvas[row][col as usize] = match cur {
                    ' ' => '-',
                    '|' => '+',
                    other => other,
                };
            }
        } else {
            let (lo, hi) = (a.j.min(b.j), a.j.max(b.j));
            let col = ((a.i - min_i) * cell) as usize;
            for row in ((max_j - hi) * cell)..=((max_j - lo) * cell) {
                let cur = canvas[row as usize][col];
                canvas[row as usize][col] = match cur {
                    ' ' => '|',
                    '-' => '+',
                    other => other,
                };
            }
        }
    }
    let pair = item.pair();
    for p in pair.s0().iter() {
        plot(&mut canvas, p.i, p.j, 'o');
    }
    for p in pair.s1().iter() {
        plot(&mut canvas, p.i, p.j, 'x');
    }
    let mut out = String::new();
    for row in &canvas {
        let line: String = row.iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out.push_str(&format!(
        "# rows top-down: j = {max_j}..{min_j} (j increases upward); o = s0, x = s1\n"
    ));
    if spec.labels {
        for p in pair.union().iter() {
            let comp = if pair.s0().contains(p) { "s0" } else { "s1" };
            let free = match pair.free_region(p) {
                Ok(Some(q)) => format!("{q}"),
                Ok(None) => "none".to_string(),
                Err(_) => "?".to_string(),
            };
            out.push_str(&format!("# ({}, {}) {} free={}\n", p.i, p.j, comp, free));
        }
    }
    out
}

pub fn render_svg(item: &Drawable, spec: RenderSpec) -> String {
    let (min_i, min_j, max_i, max_j) = item.bounds();
    let scale = 20 * spec.cell_size.max(1) as i32;
    let margin = scale;
    let sx = |i: i32| (i - min_i) * scale + margin;
    let sy = |j: i32| (max_j - j) * scale + margin;
    let width = (max_i - min_i) * scale + 2 * margin;
    let height = (max_j - min_j) * scale + 2 * margin;
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {width} {height}\" \
         width=\"{width}\" height=\"{height}\">\n"
    ));
    out.push_str("  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    let pair = item.pair();
    if spec.labels {
        // Free regions as translucent quarter-plane patches clipped to the
        // drawing area.
        for p in pair.union().iter() {
            if let Ok(Some(q)) = pair.free_region(p) {
                let (x0, x1) = match q {
                    Quadrant::Z0 | Quadrant::Z3 => (0, sx(p.i)),
                    _ => (sx(p.i), width),
                };
                let (y0, y1) = match q {
                    Quadrant::Z0 | Quadrant::Z1 => (sy(p.j), height),
                    _ => (0, sy(p.j)),
                };
                out.push_str(&format!(
                    "  <rect x=\"{x0}\" y=\"{y0}\" width=\"{}\" height=\"{}\" \
                     fill=\"#6aa5ff\" fill-opacity=\"0.08\"/>\n",
                    x1 - x0,
                    y1 - y0
                ));
            }
        }
    }
    let segments = item.segments();
    if !segments.is_empty() {
        let mut points = String::new();
        for (a, _) in &segments {
            points.push_str(&format!("{},{} ", sx(a.i), sy(a.j)));
        }
        let first = segments[0].0;
        points.push_str(&format!("{},{}", sx(first.i), sy(first.j)));
        out.push_str(&format!(
            "  <polyline points=\"{points}\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n"
        ));
    }
    for p in pair.s0().iter() {
        out.push_str(&format!(
            "  <circle cx=\"{}\" cy=\"{}\" r=\"5\" fill=\"black\"/>\n",
            sx(p.i),
            sy(p.j)
        ));
    }
    for p in pair.s1().iter() {
        out.push_str(&format!(
            "  <circle cx=\"{}\" cy=\"{}\" r=\"5\" fill=\"white\" stroke=\"black\" \
             stroke-width=\"2\"/>\n",
            sx(p.i),
            sy(p.j)
        ));
    }
    if spec.labels {
        if let Drawable::Spiral(s) = item {
            for (ix, p) in s.vertices().iter().enumerate() {
                out.push_str(&format!(
                    "  <text x=\"{}\" y=\"{}\" font-size=\"11\" \
                     font-family=\"monospace\">{ix}</text>\n",
                    sx(p.i) + 7,
                    sy(p.j) - 7
                ));
            }
        }
    }
    out.push_str("</svg>\n");
    out
}
