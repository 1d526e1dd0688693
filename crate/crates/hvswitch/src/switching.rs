//! Switching pairs, free regions, and the two hv-convexity conditions.
//!
//! A [`SwitchingPair`] is two disjoint, equally sized lattice sets with the
//! same row and column projections. Swapping one component for the other
//! inside any host set preserves both projections, which is exactly the
//! ambiguity two-direction tomography cannot resolve.
//!
//! The *free region* of a point is the unique closed quadrant anchored there
//! that contains no point of the opposite component. A pair is hv-convex
//! when every point has one. Two independently coded conditions test this:
//! [`SwitchingPair::is_hv_convex_by_cover`] checks free regions directly,
//! while [`SwitchingPair::is_hv_convex_by_pairs`] checks an opposite-quadrant
//! exclusion between points whose line partners leave the same candidate
//! quadrant open. Their agreement on every pair is one of the crate's main
//! self-tests.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lattice::{in_quadrant, LatticeSet, Point, Quadrant};

/// Errors from switching-pair validation and queries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SwitchingError {
    #[error("switching components must be non-empty")]
    EmptyComponent,
    #[error("components share the point {0}")]
    Overlap(Point),
    #[error("components have different sizes: {0} vs {1}")]
    CardinalityMismatch(usize, usize),
    #[error("{axis} projections differ first at line {line}")]
    ProjectionMismatch { axis: Axis, line: i32 },
    #[error("point {0} belongs to neither component")]
    NotAMember(Point),
    #[error("point {0} has more than one free quadrant")]
    AmbiguousFree(Point),
    #[error("s0 is not contained in the host set")]
    NotContained,
    #[error("s1 collides with the host set")]
    Collision,
}

/// Projection axis, for error reporting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Horizontal,
    Vertical,
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axis::Horizontal => write!(f, "horizontal"),
            Axis::Vertical => write!(f, "vertical"),
        }
    }
}

/// Which component of a pair a point belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Component {
    S0 = 0,
    S1 = 1,
}

/// A validated hv-switching: disjoint components of equal size with equal
/// horizontal and vertical projections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwitchingPair {
    s0: LatticeSet,
    s1: LatticeSet,
}

impl SwitchingPair {
    /// Validates and wraps a candidate pair.
    ///
    /// Besides the defining constraints, this double-checks the structural
    /// consequence of equal projections on two-point lines: whenever a
    /// populated row or column holds exactly two points, they belong to
    /// different components.
    pub fn validate(s0: LatticeSet, s1: LatticeSet) -> Result<SwitchingPair, SwitchingError> {
        if s0.is_empty() || s1.is_empty() {
            return Err(SwitchingError::EmptyComponent);
        }
        if let Some(shared) = s0.iter().find(|p| s1.contains(*p)) {
            return Err(SwitchingError::Overlap(shared));
        }
        if s0.len() != s1.len() {
            return Err(SwitchingError::CardinalityMismatch(s0.len(), s1.len()));
        }
        let h0 = s0.horizontal_projection().expect("non-empty");
        let h1 = s1.horizontal_projection().expect("non-empty");
        if let Some(line) = h0.first_difference(&h1) {
            return Err(SwitchingError::ProjectionMismatch {
                axis: Axis::Horizontal,
                line,
            });
        }
        let v0 = s0.vertical_projection().expect("non-empty");
        let v1 = s1.vertical_projection().expect("non-empty");
        if let Some(line) = v0.first_difference(&v1) {
            return Err(SwitchingError::ProjectionMismatch {
                axis: Axis::Vertical,
                line,
            });
        }
        let pair = SwitchingPair { s0, s1 };
        // Equal projections force a row and a column partner in the other
        // component for every point; on two-point lines that means one point
        // of each. A failure here is a bug, not bad input.
        debug_assert!(pair.two_point_lines_are_mixed());
        Ok(pair)
    }

    /// Test-only constructor that skips validation, for exercising error
    /// paths on degenerate data.
    #[cfg(test)]
    pub(crate) fn new_unchecked(s0: LatticeSet, s1: LatticeSet) -> SwitchingPair {
        SwitchingPair { s0, s1 }
    }

    fn two_point_lines_are_mixed(&self) -> bool {
        let union = self.union();
        let mut rows: BTreeMap<i32, Vec<Point>> = BTreeMap::new();
        let mut cols: BTreeMap<i32, Vec<Point>> = BTreeMap::new();
        for p in union.iter() {
            rows.entry(p.j).or_default().push(p);
            cols.entry(p.i).or_default().push(p);
        }
        rows.values().chain(cols.values()).all(|pts| {
            pts.len() != 2 || (pts.iter().filter(|p| self.s0.contains(**p)).count() == 1)
        })
    }

    pub fn s0(&self) -> &LatticeSet {
        &self.s0
    }

    pub fn s1(&self) -> &LatticeSet {
        &self.s1
    }

    /// Both components together.
    pub fn union(&self) -> LatticeSet {
        self.s0.union(&self.s1)
    }

    /// Number of points in one component.
    pub fn component_len(&self) -> usize {
        self.s0.len()
    }

    /// The same switching with the components swapped.
    pub fn mirror(self) -> SwitchingPair {
        SwitchingPair {
            s0: self.s1,
            s1: self.s0,
        }
    }

    pub fn component_of(&self, p: Point) -> Option<Component> {
        if self.s0.contains(p) {
            Some(Component::S0)
        } else if self.s1.contains(p) {
            Some(Component::S1)
        } else {
            None
        }
    }

    fn other_component(&self, c: Component) -> &LatticeSet {
        match c {
            Component::S0 => &self.s1,
            Component::S1 => &self.s0,
        }
    }

    /// The free region of `x`: the quadrant of `x` meeting no point of the
    /// opposite component, if one exists.
    ///
    /// Validated pairs admit at most one free quadrant (the row and column
    /// partners of `x` already pin three of the four), so `AmbiguousFree`
    /// signals a corrupted pair rather than a legal state.
    pub fn free_region(&self, x: Point) -> Result<Option<Quadrant>, SwitchingError> {
        let comp = self.component_of(x).ok_or(SwitchingError::NotAMember(x))?;
        let other = self.other_component(comp);
        let mut free = None;
        for q in Quadrant::ALL {
            if !other.iter().any(|p| in_quadrant(p, x, q)) {
                if free.is_some() {
                    return Err(SwitchingError::AmbiguousFree(x));
                }
                free = Some(q);
            }
        }
        Ok(free)
    }

    /// Free regions of every point, with the per-quadrant classes.
    pub fn free_region_map(&self) -> Result<FreeRegionMap, SwitchingError> {
        let mut map = BTreeMap::new();
        let mut classes: [Vec<Point>; 4] = Default::default();
        for p in self.union().iter() {
            let fr = self.free_region(p)?;
            if let Some(q) = fr {
                classes[q.index() as usize].push(p);
            }
            map.insert(p, fr);
        }
        Ok(FreeRegionMap { map, classes })
    }

    /// hv-convexity, cover form: every point of the pair has a free region.
    pub fn is_hv_convex_by_cover(&self) -> bool {
        self.union()
            .iter()
            .all(|p| matches!(self.free_region(p), Ok(Some(_))))
    }

    /// hv-convexity, pair-exclusion form.
    ///
    /// Each point's row and column partners in the other component block at
    /// least three of its quadrants, leaving at most one *candidate* class.
    /// The condition: the candidate classes cover every point, and a point
    /// `v` of class `i` never lies in the opposite quadrant `Z_{i+2}(w)` of
    /// an opposite-component point `w`. Built from line partners and the
    /// opposite-quadrant exclusion only, with no free-region scans; the
    /// cover check and this one must agree on every valid pair.
    pub fn is_hv_convex_by_pairs(&self) -> bool {
        let mut classified: Vec<(Point, Component, Quadrant)> = Vec::new();
        for p in self.union().iter() {
            let comp = self.component_of(p).expect("union point");
            match self.candidate_quadrant(p, comp) {
                Some(q) => classified.push((p, comp, q)),
                // Line partners surround the point on all four sides; no
                // class can hold it.
                None => return false,
            }
        }
        for &(v, comp, class) in &classified {
            let opp = class.opposite();
            if self
                .other_component(comp)
                .iter()
                .any(|w| in_quadrant(v, w, opp))
            {
                return false;
            }
        }
        true
    }

    /// The quadrant of `x` left unblocked by line partners, if any.
    ///
    /// A partner on the same row blocks the two quadrants on its side; a
    /// partner on the same column likewise. At least three quadrants are
    /// always blocked, so the result is unique when present.
    fn candidate_quadrant(&self, x: Point, comp: Component) -> Option<Quadrant> {
        let other = self.other_component(comp);
        let mut blocked = [false; 4];
        for p in other.iter() {
            if p.j == x.j {
                if p.i >= x.i {
                    blocked[1] = true;
                    blocked[2] = true;
                }
                if p.i <= x.i {
                    blocked[0] = true;
                    blocked[3] = true;
                }
            }
            if p.i == x.i {
                if p.j >= x.j {
                    blocked[2] = true;
                    blocked[3] = true;
                }
                if p.j <= x.j {
                    blocked[0] = true;
                    blocked[1] = true;
                }
            }
        }
        let mut open = blocked.iter().enumerate().filter(|(_, b)| !**b);
        let first = open.next().map(|(ix, _)| Quadrant::from_index(ix as u8));
        debug_assert!(
            open.next().is_none(),
            "partners always block >= 3 quadrants"
        );
        first
    }

    /// Replaces `s0` by `s1` inside a host set: `(a \ s0) ∪ s1`.
    ///
    /// The result has the same horizontal and vertical projections as `a`.
    pub fn dual_set(&self, a: &LatticeSet) -> Result<LatticeSet, SwitchingError> {
        if !self.s0.is_subset(a) {
            return Err(SwitchingError::NotContained);
        }
        if !self.s1.is_disjoint(a) {
            return Err(SwitchingError::Collision);
        }
        Ok(a.difference(&self.s0).union(&self.s1))
    }

    /// JSON format: `{"s0": [[i, j], ...], "s1": [[i, j], ...]}`.
    pub fn from_json(json: &str) -> Result<SwitchingPair, SwitchingJsonError> {
        let raw: SwitchingJson = serde_json::from_str(json)?;
        let s0 = LatticeSet::from_points(raw.s0.into_iter().map(|[i, j]| Point::new(i, j)));
        let s1 = LatticeSet::from_points(raw.s1.into_iter().map(|[i, j]| Point::new(i, j)));
        Ok(SwitchingPair::validate(s0, s1)?)
    }

    pub fn to_json(&self) -> String {
        let raw = SwitchingJson {
            s0: self.s0.iter().map(|p| [p.i, p.j]).collect(),
            s1: self.s1.iter().map(|p| [p.i, p.j]).collect(),
        };
        serde_json::to_string(&raw).expect("switching serializes")
    }

    /// Text format: one `i j c` line per point, `c` being 0 or 1.
    pub fn from_text(text: &str) -> Result<SwitchingPair, SwitchingJsonError> {
        let mut s0 = LatticeSet::new();
        let mut s1 = LatticeSet::new();
        for (ix, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            let bad = |msg: String| SwitchingJsonError::Text { line: ix + 1, msg };
            if toks.len() != 3 {
                return Err(bad("expected `i j c`".into()));
            }
            let i: i32 = toks[0]
                .parse()
                .map_err(|e| bad(format!("bad integer: {e}")))?;
            let j: i32 = toks[1]
                .parse()
                .map_err(|e| bad(format!("bad integer: {e}")))?;
            match toks[2] {
                "0" => s0.insert(Point::new(i, j)),
                "1" => s1.insert(Point::new(i, j)),
                other => return Err(bad(format!("component must be 0 or 1, got `{other}`"))),
            };
        }
        Ok(SwitchingPair::validate(s0, s1)?)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for p in self.s0.iter() {
            out.push_str(&format!("{} {} 0\n", p.i, p.j));
        }
        for p in self.s1.iter() {
            out.push_str(&format!("{} {} 1\n", p.i, p.j));
        }
        out
    }
}

/// Errors from parsing switching files: either the syntax or the pair itself.
#[derive(Debug, Error)]
pub enum SwitchingJsonError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("parse error on line {line}: {msg}")]
    Text { line: usize, msg: String },
    #[error(transparent)]
    Invalid(#[from] SwitchingError),
}

#[derive(Serialize, Deserialize)]
struct SwitchingJson {
    s0: Vec<[i32; 2]>,
    s1: Vec<[i32; 2]>,
}

/// Free regions of all points of a pair, plus the four index classes.
#[derive(Debug, Clone)]
pub struct FreeRegionMap {
    map: BTreeMap<Point, Option<Quadrant>>,
    classes: [Vec<Point>; 4],
}

impl FreeRegionMap {
    pub fn get(&self, p: Point) -> Option<Option<Quadrant>> {
        self.map.get(&p).copied()
    }

    /// Points whose free region has index `q`.
    pub fn class(&self, q: Quadrant) -> &[Point] {
        &self.classes[q.index() as usize]
    }

    pub fn iter(&self) -> impl Iterator<Item = (Point, Option<Quadrant>)> + '_ {
        self.map.iter().map(|(p, q)| (*p, *q))
    }

    /// True when every point has a free region.
    pub fn is_total(&self) -> bool {
        self.map.values().all(|q| q.is_some())
    }
}
