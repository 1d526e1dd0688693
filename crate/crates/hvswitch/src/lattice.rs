//! Integer lattice points, finite point sets, projections, and quadrants.
//!
//! Conventions used throughout the crate: `i` is the column index and grows
//! rightward, `j` is the row index and grows upward. The four quadrants
//! anchored at a point are *closed* (their boundary lines belong to them),
//! with `Z0` the lower-left one and indices increasing counterclockwise.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors from lattice-set operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    /// The operation needs at least one point.
    #[error("operation requires a non-empty lattice set")]
    EmptyInput,
    /// A text line could not be parsed.
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A lattice point. `i` is the column (rightward), `j` the row (upward).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Point {
    pub i: i32,
    pub j: i32,
}

impl Point {
    pub const fn new(i: i32, j: i32) -> Self {
        Point { i, j }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.i, self.j)
    }
}

impl From<(i32, i32)> for Point {
    fn from((i, j): (i32, i32)) -> Self {
        Point { i, j }
    }
}

/// One of the four closed quadrants anchored at a point.
///
/// `Z0` is lower-left, and the index increases counterclockwise, so
/// `Z1` is lower-right, `Z2` upper-right, `Z3` upper-left.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Quadrant {
    Z0 = 0,
    Z1 = 1,
    Z2 = 2,
    Z3 = 3,
}

impl Quadrant {
    pub const ALL: [Quadrant; 4] = [Quadrant::Z0, Quadrant::Z1, Quadrant::Z2, Quadrant::Z3];

    pub fn index(self) -> u8 {
        self as u8
    }

    pub fn from_index(ix: u8) -> Quadrant {
        Self::ALL[(ix % 4) as usize]
    }

    /// The quadrant diagonally across: `q + 2 (mod 4)`.
    pub fn opposite(self) -> Quadrant {
        Self::from_index(self.index() + 2)
    }
}

impl fmt::Display for Quadrant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z{}", self.index())
    }
}

/// Is `p` in the closed quadrant of index `q` anchored at `v`?
///
/// The boundary half-lines belong to the quadrant, so a point on the
/// horizontal or vertical line through `v` lies in two adjacent quadrants,
/// and `v` itself lies in all four.
pub fn in_quadrant(p: Point, v: Point, q: Quadrant) -> bool {
    match q {
        Quadrant::Z0 => p.i <= v.i && p.j <= v.j,
        Quadrant::Z1 => p.i >= v.i && p.j <= v.j,
        Quadrant::Z2 => p.i >= v.i && p.j >= v.j,
        Quadrant::Z3 => p.i <= v.i && p.j >= v.j,
    }
}

/// A finite set of lattice points with a cached tight bounding box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeSet {
    points: BTreeSet<Point>,
    // (min_i, min_j, max_i, max_j); None when empty
    bbox: Option<(i32, i32, i32, i32)>,
}

impl LatticeSet {
    pub fn new() -> Self {
        LatticeSet {
            points: BTreeSet::new(),
            bbox: None,
        }
    }

    pub fn from_points<I>(points: I) -> Self
    where
        I: IntoIterator,
        I::Item: Into<Point>,
    {
        let mut set = LatticeSet::new();
        for p in points {
            set.insert(p.into());
        }
        set
    }

    pub fn insert(&mut self, p: Point) -> bool {
        let added = self.points.insert(p);
        if added {
            self.bbox = Some(match self.bbox {
                None => (p.i, p.j, p.i, p.j),
                Some((i0, j0, i1, j1)) => (i0.min(p.i), j0.min(p.j), i1.max(p.i), j1.max(p.j)),
            });
        }
        added
    }

    pub fn contains(&self, p: Point) -> bool {
        self.points.contains(&p)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Points in ascending `(i, j)` order.
    pub fn iter(&self) -> impl Iterator<Item = Point> + '_ {
        self.points.iter().copied()
    }

    /// Tight bounding box as `(min_i, min_j, max_i, max_j)`, `None` when empty.
    pub fn bounding_box(&self) -> Option<(i32, i32, i32, i32)> {
        self.bbox
    }

    pub fn translate(&self, di: i32, dj: i32) -> LatticeSet {
        LatticeSet::from_points(self.iter().map(|p| Point::new(p.i + di, p.j + dj)))
    }

    /// Set union; duplicates collapse.
    pub fn union(&self, other: &LatticeSet) -> LatticeSet {
        LatticeSet::from_points(self.iter().chain(other.iter()))
    }

    /// Points of `self` not in `other`.
    pub fn difference(&self, other: &LatticeSet) -> LatticeSet {
        LatticeSet::from_points(self.iter().filter(|p| !other.contains(*p)))
    }

    pub fn intersection(&self, other: &LatticeSet) -> LatticeSet {
        LatticeSet::from_points(self.iter().filter(|p| other.contains(*p)))
    }

    pub fn is_disjoint(&self, other: &LatticeSet) -> bool {
        self.points.is_disjoint(&other.points)
    }

    pub fn is_subset(&self, other: &LatticeSet) -> bool {
        self.points.is_subset(&other.points)
    }

    /// Counts per row (`j` line), bottom row first.
    pub fn horizontal_projection(&self) -> Result<ProjectionVector, LatticeError> {
        self.project(|p| p.j)
    }

    /// Counts per column (`i` line), leftmost column first.
    pub fn vertical_projection(&self) -> Result<ProjectionVector, LatticeError> {
        self.project(|p| p.i)
    }

    fn project(&self, line: impl Fn(Point) -> i32) -> Result<ProjectionVector, LatticeError> {
        if self.is_empty() {
            return Err(LatticeError::EmptyInput);
        }
        let lo = self.iter().map(&line).min().unwrap();
        let hi = self.iter().map(&line).max().unwrap();
        let mut counts = vec![0u32; (hi - lo + 1) as usize];
        for p in self.iter() {
            counts[(line(p) - lo) as usize] += 1;
        }
        Ok(ProjectionVector { origin: lo, counts })
    }

    /// True when the set is a 4-connected polyomino whose rows and columns
    /// are all contiguous intervals.
    pub fn is_hv_convex_polyomino(&self) -> Result<bool, LatticeError> {
        if self.is_empty() {
            return Err(LatticeError::EmptyInput);
        }
        Ok(self.is_four_connected() && self.lines_contiguous(true) && self.lines_contiguous(false))
    }

    fn is_four_connected(&self) -> bool {
        let start = match self.points.iter().next() {
            Some(p) => *p,
            None => return true,
        };
        let mut seen = BTreeSet::new();
        let mut stack = vec![start];
        seen.insert(start);
        while let Some(p) = stack.pop() {
            for (di, dj) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
                let q = Point::new(p.i + di, p.j + dj);
                if self.contains(q) && seen.insert(q) {
                    stack.push(q);
                }
            }
        }
        seen.len() == self.len()
    }

    fn lines_contiguous(&self, rows: bool) -> bool {
        type Coord = fn(Point) -> i32;
        let (line, pos): (Coord, Coord) = if rows {
            (|p| p.j, |p| p.i)
        } else {
            (|p| p.i, |p| p.j)
        };
        let mut by_line: std::collections::BTreeMap<i32, Vec<i32>> = Default::default();
        for p in self.iter() {
            by_line.entry(line(p)).or_default().push(pos(p));
        }
        by_line.values_mut().all(|v| {
            v.sort_unstable();
            v.windows(2).all(|w| w[1] == w[0] + 1)
        })
    }

    /// Q-convexity along the axis directions: every bounding-box point whose
    /// four closed quadrants all meet the set belongs to the set.
    pub fn is_q_convex(&self) -> Result<bool, LatticeError> {
        let (i0, j0, i1, j1) = self.bbox.ok_or(LatticeError::EmptyInput)?;
        for i in i0..=i1 {
            for j in j0..=j1 {
                let v = Point::new(i, j);
                if self.contains(v) {
                    continue;
                }
                let trapped = Quadrant::ALL
                    .iter()
                    .all(|&q| self.iter().any(|p| in_quadrant(p, v, q)));
                if trapped {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Text format: one `i j` pair per line; `#` starts a comment.
    pub fn from_text(text: &str) -> Result<LatticeSet, LatticeError> {
        let mut set = LatticeSet::new();
        for (ix, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut it = line.split_whitespace();
            let parse = |tok: Option<&str>, ix: usize| -> Result<i32, LatticeError> {
                tok.ok_or(LatticeError::Parse {
                    line: ix + 1,
                    msg: "expected `i j`".into(),
                })?
                .parse()
                .map_err(|e| LatticeError::Parse {
                    line: ix + 1,
                    msg: format!("bad integer: {e}"),
                })
            };
            let i = parse(it.next(), ix)?;
            let j = parse(it.next(), ix)?;
            if it.next().is_some() {
                return Err(LatticeError::Parse {
                    line: ix + 1,
                    msg: "trailing tokens after `i j`".into(),
                });
            }
            set.insert(Point::new(i, j));
        }
        Ok(set)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for p in self.iter() {
            out.push_str(&format!("{} {}\n", p.i, p.j));
        }
        out
    }

    /// JSON format: `{"points": [[i, j], ...]}`.
    pub fn from_json(json: &str) -> Result<LatticeSet, serde_json::Error> {
        let raw: LatticeSetJson = serde_json::from_str(json)?;
        Ok(LatticeSet::from_points(
            raw.points.into_iter().map(|[i, j]| Point::new(i, j)),
        ))
    }

    pub fn to_json(&self) -> String {
        let raw = LatticeSetJson {
            points: self.iter().map(|p| [p.i, p.j]).collect(),
        };
        serde_json::to_string(&raw).expect("lattice set serializes")
    }
}

impl Default for LatticeSet {
    fn default() -> Self {
        Self::new()
    }
}

impl FromIterator<Point> for LatticeSet {
    fn from_iter<T: IntoIterator<Item = Point>>(iter: T) -> Self {
        LatticeSet::from_points(iter)
    }
}

#[derive(Serialize, Deserialize)]
struct LatticeSetJson {
    points: Vec<[i32; 2]>,
}

/// Per-line point counts of a lattice set along one axis.
///
/// `origin` is the first populated line index; `counts[k]` is the number of
/// points on line `origin + k`. The first and last entries are positive, so
/// equal vectors mean equal projections line by line, translation included.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectionVector {
    pub origin: i32,
    pub counts: Vec<u32>,
}

impl ProjectionVector {
    /// Count on the absolute line `index`; zero outside the populated range.
    pub fn count_at(&self, index: i32) -> u32 {
        let k = index - self.origin;
        if k < 0 || k as usize >= self.counts.len() {
            0
        } else {
            self.counts[k as usize]
        }
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().map(|&c| c as u64).sum()
    }

    /// The first line where two projections differ, if any.
    pub fn first_difference(&self, other: &ProjectionVector) -> Option<i32> {
        let lo = self.origin.min(other.origin);
        let hi =
            (self.origin + self.counts.len() as i32).max(other.origin + other.counts.len() as i32);
        (lo..hi).find(|&ix| self.count_at(ix) != other.count_at(ix))
    }
}

impl fmt::Display for ProjectionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "origin {}, counts [", self.origin)?;
        for (ix, c) in self.counts.iter().enumerate() {
            if ix > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(pts: &[(i32, i32)]) -> LatticeSet {
        LatticeSet::from_points(pts.iter().copied())
    }

    #[test]
    fn horizontal_projection_counts_rows() {
        let a = set(&[(0, 0), (1, 0), (0, 1)]);
        let h = a.horizontal_projection().unwrap();
        assert_eq!(h.origin, 0);
        assert_eq!(h.counts, vec![2, 1]);
    }

    #[test]
    fn vertical_projection_counts_columns() {
        let a = set(&[(0, 0), (1, 0), (0, 1)]);
        let v = a.vertical_projection().unwrap();
        assert_eq!(v.origin, 0);
        assert_eq!(v.counts, vec![2, 1]);
    }

    #[test]
    fn singleton_projections() {
        let a = set(&[(5, 7)]);
        let h = a.horizontal_projection().unwrap();
        assert_eq!((h.origin, h.counts.as_slice()), (7, &[1][..]));
        let v = a.vertical_projection().unwrap();
        assert_eq!((v.origin, v.counts.as_slice()), (5, &[1][..]));
    }

    #[test]
    fn empty_set_projections_fail() {
        let a = LatticeSet::new();
        assert_eq!(a.horizontal_projection(), Err(LatticeError::EmptyInput));
        assert_eq!(a.vertical_projection(), Err(LatticeError::EmptyInput));
    }

    #[test]
    fn quadrants_are_closed() {
        let v = Point::new(0, 0);
        for q in Quadrant::ALL {
            assert!(in_quadrant(v, v, q), "anchor belongs to all quadrants");
        }
        let p = Point::new(1, 0);
        assert!(in_quadrant(p, v, Quadrant::Z1));
        assert!(in_quadrant(p, v, Quadrant::Z2));
        assert!(!in_quadrant(p, v, Quadrant::Z0));
        assert!(!in_quadrant(p, v, Quadrant::Z3));
        let p = Point::new(-1, 2);
        assert!(in_quadrant(p, v, Quadrant::Z3));
        for q in [Quadrant::Z0, Quadrant::Z1, Quadrant::Z2] {
            assert!(!in_quadrant(p, v, q));
        }
    }

    #[test]
    fn opposite_quadrant_wraps() {
        assert_eq!(Quadrant::Z0.opposite(), Quadrant::Z2);
        assert_eq!(Quadrant::Z3.opposite(), Quadrant::Z1);
    }

    #[test]
    fn hv_convex_polyomino_examples() {
        assert!(set(&[(0, 0), (1, 0), (1, 1)])
            .is_hv_convex_polyomino()
            .unwrap());
        // gap in a row
        assert!(!set(&[(0, 0), (2, 0)]).is_hv_convex_polyomino().unwrap());
        // diagonal contact only
        assert!(!set(&[(0, 0), (1, 1)]).is_hv_convex_polyomino().unwrap());
        assert_eq!(
            LatticeSet::new().is_hv_convex_polyomino(),
            Err(LatticeError::EmptyInput)
        );
    }

    #[test]
    fn q_convex_examples() {
        assert!(set(&[(0, 0)]).is_q_convex().unwrap());
        // four corners trap the center
        assert!(!set(&[(0, 0), (2, 0), (0, 2), (2, 2)])
            .is_q_convex()
            .unwrap());
    }

    #[test]
    fn text_round_trip_and_comments() {
        let text = "# a comment\n0 0\n1 0 # trailing\n\n0 1\n";
        let a = LatticeSet::from_text(text).unwrap();
        assert_eq!(a, set(&[(0, 0), (1, 0), (0, 1)]));
        let b = LatticeSet::from_text(&a.to_text()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn text_parse_errors_carry_line_numbers() {
        let err = LatticeSet::from_text("0 0\noops\n").unwrap_err();
        assert!(matches!(err, LatticeError::Parse { line: 2, .. }));
        let err = LatticeSet::from_text("1 2 3\n").unwrap_err();
        assert!(matches!(err, LatticeError::Parse { line: 1, .. }));
    }

    #[test]
    fn json_round_trip() {
        let a = set(&[(-2, 0), (0, 1), (3, -1)]);
        let b = LatticeSet::from_json(&a.to_json()).unwrap();
        assert_eq!(a, b);
    }
}
