//! Exhaustive desk-scale search over squared spirals and hv-convex
//! polyominoes, the hv-convexity census, and a maximally naive oracle.
//!
//! The enumerator yields every closed squared spiral that fits a small grid
//! (up to translation) exactly once, in canonical form and deterministic
//! order. The census groups those spirals by hv-sequence and counts how many
//! are hv-convex, which is the raw data behind the realizability questions
//! for turn-run sequences. [`brute_force_hv_convex`] re-decides hv-convexity
//! from nothing but quadrant membership scans, sharing no logic with the
//! switching module, so the three predicates can police each other.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lattice::{in_quadrant, LatticeSet, Point, Quadrant};
use crate::spiral::{HvSequence, SquaredSpiral};
use crate::switching::SwitchingPair;

/// Errors from enumeration entry points.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("grid side must be at least 2, got {0}")]
    GridTooSmall(u32),
    #[error("max vertices must be an even number >= 4, got {0}")]
    BadVertexBound(u32),
    #[error(
        "search space (grid {grid}, max vertices {max_vertices}) exceeds the cost guard; \
         pass the override flag to run it anyway"
    )]
    GridTooLarge { grid: u32, max_vertices: u32 },
}

/// A finite search space: spirals whose bounding box fits an `m x m` grid
/// (up to translation) with at most `max_vertices` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchSpace {
    pub grid_side: u32,
    pub max_vertices: u32,
}

impl SearchSpace {
    pub fn new(grid_side: u32, max_vertices: u32) -> Result<SearchSpace, EnumerateError> {
        if grid_side < 2 {
            return Err(EnumerateError::GridTooSmall(grid_side));
        }
        if max_vertices < 4 || max_vertices % 2 != 0 {
            return Err(EnumerateError::BadVertexBound(max_vertices));
        }
        Ok(SearchSpace {
            grid_side,
            max_vertices,
        })
    }

    /// Default interactive cost guard: full runs stay comfortably in seconds.
    pub fn within_interactive_guard(&self) -> bool {
        self.grid_side <= 5 && self.max_vertices <= 8
    }

    /// Long-running guard: minutes, not hours.
    pub fn within_long_running_guard(&self) -> bool {
        self.grid_side <= 6 && self.max_vertices <= 10
    }
}

/// Enumerates every spiral in the space, calling `f` on each.
///
/// Spirals are produced in canonical form: the lexicographically smallest
/// vertex is `(0, 0)`, the first segment leaves it rightward, and the turn
/// there is counterclockwise. Each translation class appears exactly once,
/// in depth-first lexicographic order of the vertex list.
pub fn for_each_spiral<F: FnMut(SquaredSpiral)>(space: SearchSpace, mut f: F) {
    for key in partition_keys(space) {
        enumerate_partition(space, key, &mut f);
    }
}

/// Collects the whole space; see [`for_each_spiral`] for the order.
pub fn enumerate_spirals(space: SearchSpace) -> Vec<SquaredSpiral> {
    let mut out = Vec::new();
    for_each_spiral(space, |s| out.push(s));
    out
}

/// Partition keys: the length of the first (horizontal) segment. Workers may
/// process partitions independently; concatenating results in key order
/// reproduces the sequential stream bit for bit.
fn partition_keys(space: SearchSpace) -> Vec<i32> {
    (1..space.grid_side as i32).collect()
}

fn enumerate_partition<F: FnMut(SquaredSpiral)>(space: SearchSpace, first_len: i32, f: &mut F) {
    let extent = space.grid_side as i32 - 1;
    let max_v = space.max_vertices as usize;
    let start = Point::new(0, 0);
    let first = Point::new(first_len, 0);
    let mut path = vec![start, first];
    let mut dfs = Dfs { extent, max_v, f };
    dfs.extend(&mut path, false);
}

struct Dfs<'a, F: FnMut(SquaredSpiral)> {
    extent: i32,
    max_v: usize,
    f: &'a mut F,
}

impl<F: FnMut(SquaredSpiral)> Dfs<'_, F> {
    /// Extends `path` by one segment; `horizontal` says which axis the next
    /// segment uses. The first segment is horizontal, so the closing segment
    /// back to the origin must be vertical.
    fn extend(&mut self, path: &mut Vec<Point>, horizontal: bool) {
        let last = *path.last().unwrap();

        // Close the cycle: the final vertex must sit straight above the
        // origin, the closing segment being vertical and downward.
        if !horizontal && path.len() >= 4 && last.i == 0 && last.j > 0 {
            (self.f)(
                SquaredSpiral::build(path.clone()).expect("enumerator produces valid spirals"),
            );
        }
        if path.len() == self.max_v {
            return;
        }

        let mut candidates: Vec<Point> = Vec::new();
        if horizontal {
            for i in 0..=self.extent {
                if i != last.i {
                    candidates.push(Point::new(i, last.j));
                }
            }
        } else {
            // The translation class must keep fitting the grid vertically.
            let (min_j, max_j) = path.iter().fold((i32::MAX, i32::MIN), |(lo, hi), p| {
                (lo.min(p.j), hi.max(p.j))
            });
            for j in (max_j - self.extent)..=(min_j + self.extent) {
                if j != last.j {
                    candidates.push(Point::new(last.i, j));
                }
            }
        }
        for next in candidates {
            // Canonical start: nothing may be lexicographically below (0,0).
            if next.i == 0 && next.j < 0 {
                continue;
            }
            if path.contains(&next) {
                continue;
            }
            path.push(next);
            self.extend(path, !horizontal);
            path.pop();
        }
    }
}

/// One census row: all enumerated spirals sharing an hv-sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusEntry {
    pub sequence: HvSequence,
    /// How many canonical spirals realize the sequence in the space.
    pub realizable_count: u64,
    /// How many of those induce an hv-convex switching.
    pub hv_convex_count: u64,
    /// Lexicographically smallest hv-convex instance, if any.
    pub witness: Option<SquaredSpiral>,
}

/// Groups the space by canonical hv-sequence and counts hv-convex instances.
///
/// Rows are sorted by (base runs, repeat). Output is a pure function of the
/// space: independent of partitioning and thread count.
pub fn census(space: SearchSpace) -> Vec<CensusEntry> {
    census_with_jobs(space, 1)
}

/// Same census, computed by `jobs` worker threads over enumeration
/// partitions. Aggregation is associative and the merge is keyed, so any
/// `jobs` value yields identical output.
pub fn census_with_jobs(space: SearchSpace, jobs: usize) -> Vec<CensusEntry> {
    let keys = partition_keys(space);
    let jobs = jobs.max(1).min(keys.len().max(1));

    let mut partials: Vec<BTreeMap<HvSequence, CensusAccum>> = Vec::new();
    if jobs <= 1 {
        let mut acc = BTreeMap::new();
        for &key in &keys {
            enumerate_partition(space, key, &mut |s| accumulate(&mut acc, s));
        }
        partials.push(acc);
    } else {
        let next = AtomicUsize::new(0);
        let mut slots: Vec<Option<BTreeMap<HvSequence, CensusAccum>>> =
            keys.iter().map(|_| None).collect();
        std::thread::scope(|scope| {
            let mut handles = Vec::new();
            for _ in 0..jobs {
                let next = &next;
                let keys = &keys;
                handles.push(scope.spawn(move || {
                    let mut done: Vec<(usize, BTreeMap<HvSequence, CensusAccum>)> = Vec::new();
                    loop {
                        let ix = next.fetch_add(1, Ordering::Relaxed);
                        if ix >= keys.len() {
                            return done;
                        }
                        let mut acc = BTreeMap::new();
                        enumerate_partition(space, keys[ix], &mut |s| accumulate(&mut acc, s));
                        done.push((ix, acc));
                    }
                }));
            }
            for h in handles {
                for (ix, acc) in h.join().expect("census worker") {
                    slots[ix] = Some(acc);
                }
            }
        });
        partials.extend(slots.into_iter().flatten());
    }

    let mut merged: BTreeMap<HvSequence, CensusAccum> = BTreeMap::new();
    for part in partials {
        for (seq, acc) in part {
            merged
                .entry(seq)
                .and_modify(|m| m.merge(&acc))
                .or_insert(acc);
        }
    }
    merged
        .into_iter()
        .map(|(sequence, acc)| CensusEntry {
            sequence,
            realizable_count: acc.realizable,
            hv_convex_count: acc.hv_convex,
            witness: acc.witness,
        })
        .collect()
}

#[derive(Debug, Clone)]
struct CensusAccum {
    realizable: u64,
    hv_convex: u64,
    witness: Option<SquaredSpiral>,
}

impl CensusAccum {
    fn merge(&mut self, other: &CensusAccum) {
        self.realizable += other.realizable;
        self.hv_convex += other.hv_convex;
        if let Some(w) = &other.witness {
            match &self.witness {
                Some(cur) if cur.vertices() <= w.vertices() => {}
                _ => self.witness = Some(w.clone()),
            }
        }
    }
}

fn accumulate(acc: &mut BTreeMap<HvSequence, CensusAccum>, s: SquaredSpiral) {
    let seq = s.hv_sequence();
    let convex = s.to_switching().is_hv_convex_by_cover();
    let entry = acc.entry(seq).or_insert(CensusAccum {
        realizable: 0,
        hv_convex: 0,
        witness: None,
    });
    entry.realizable += 1;
    if convex {
        entry.hv_convex += 1;
        match &entry.witness {
            Some(cur) if cur.vertices() <= s.vertices() => {}
            _ => entry.witness = Some(s),
        }
    }
}

/// Renders a census as CSV with columns
/// `sequence,repeat,realizable,hv_convex,witness_json`.
pub fn census_to_csv(entries: &[CensusEntry]) -> String {
    let mut wtr = csv::Writer::from_writer(Vec::new());
    wtr.write_record([
        "sequence",
        "repeat",
        "realizable",
        "hv_convex",
        "witness_json",
    ])
    .expect("csv header");
    for e in entries {
        let base: Vec<String> = e.sequence.runs.iter().map(|k| k.to_string()).collect();
        wtr.write_record([
            format!("({})", base.join(",")),
            e.sequence.repeat.to_string(),
            e.realizable_count.to_string(),
            e.hv_convex_count.to_string(),
            e.witness.as_ref().map(|w| w.to_json()).unwrap_or_default(),
        ])
        .expect("csv row");
    }
    String::from_utf8(wtr.into_inner().expect("csv flush")).expect("csv utf8")
}

/// Decides hv-convexity by the most literal scan possible: for every point,
/// try all four quadrants against every other point. Shares nothing with the
/// switching module beyond [`Point`] and [`in_quadrant`].
pub fn brute_force_hv_convex(pair: &SwitchingPair) -> bool {
    let s0: Vec<Point> = pair.s0().iter().collect();
    let s1: Vec<Point> = pair.s1().iter().collect();
    let has_free = |x: Point, others: &[Point]| {
        Quadrant::ALL
            .iter()
            .any(|&q| others.iter().all(|&p| !in_quadrant(p, x, q)))
    };
    s0.iter().all(|&x| has_free(x, &s1)) && s1.iter().all(|&x| has_free(x, &s0))
}

/// All hv-convex polyominoes positioned inside an `m x m` grid, in
/// deterministic order.
///
/// Rows are intervals; adjacent rows must overlap (connectivity) and every
/// column's occupied rows must be contiguous (vertical convexity).
pub fn enumerate_hv_polyominoes(m: u32) -> Vec<LatticeSet> {
    let m = m as i32;
    let mut out = Vec::new();
    // Row intervals [a, b] with 0 <= a <= b < m at rows j0..j0+h-1.
    for j0 in 0..m {
        for h in 1..=(m - j0) {
            let mut rows: Vec<(i32, i32)> = Vec::with_capacity(h as usize);
            fill_rows(m, h, &mut rows, &mut |rows| {
                if columns_contiguous(rows) {
                    let mut set = LatticeSet::new();
                    for (r, &(a, b)) in rows.iter().enumerate() {
                        for i in a..=b {
                            set.insert(Point::new(i, j0 + r as i32));
                        }
                    }
                    out.push(set);
                }
            });
        }
    }
    out
}

fn fill_rows(m: i32, h: i32, rows: &mut Vec<(i32, i32)>, emit: &mut impl FnMut(&[(i32, i32)])) {
    if rows.len() == h as usize {
        emit(rows);
        return;
    }
    for a in 0..m {
        for b in a..m {
            if let Some(&(pa, pb)) = rows.last() {
                // 4-connectivity between consecutive rows.
                if b < pa || a > pb {
                    continue;
                }
            }
            rows.push((a, b));
            fill_rows(m, h, rows, emit);
            rows.pop();
        }
    }
}

/// Each column's occupied row range must have no holes. Rows are intervals,
/// so column `i` is occupied in row `r` iff `a_r <= i <= b_r`.
fn columns_contiguous(rows: &[(i32, i32)]) -> bool {
    let lo = rows.iter().map(|&(a, _)| a).min().unwrap();
    let hi = rows.iter().map(|&(_, b)| b).max().unwrap();
    for i in lo..=hi {
        let mut seen = false;
        let mut gap = false;
        for &(a, b) in rows {
            if a <= i && i <= b {
                if gap {
                    return false;
                }
                seen = true;
            } else if seen {
                gap = true;
            }
        }
    }
    true
}

/// Scans an `m x m` grid for pairs of distinct hv-convex polyominoes with
/// identical projections and returns each with its induced switching.
///
/// Guarded at `m <= 4` unless `override_guard` is set.
pub fn polyomino_pair_scan(
    m: u32,
    override_guard: bool,
) -> Result<Vec<(LatticeSet, LatticeSet, SwitchingPair)>, EnumerateError> {
    if m > 4 && !override_guard {
        return Err(EnumerateError::GridTooLarge {
            grid: m,
            max_vertices: 0,
        });
    }
    // Projection pair keyed by absolute line index and count.
    type LineCounts = Vec<(i32, u32)>;
    let polys = enumerate_hv_polyominoes(m);
    let mut groups: BTreeMap<(LineCounts, LineCounts), Vec<usize>> = BTreeMap::new();
    for (ix, p) in polys.iter().enumerate() {
        let h = p.horizontal_projection().expect("non-empty");
        let v = p.vertical_projection().expect("non-empty");
        let hk: Vec<(i32, u32)> = h
            .counts
            .iter()
            .enumerate()
            .map(|(k, &c)| (h.origin + k as i32, c))
            .collect();
        let vk: Vec<(i32, u32)> = v
            .counts
            .iter()
            .enumerate()
            .map(|(k, &c)| (v.origin + k as i32, c))
            .collect();
        groups.entry((hk, vk)).or_default().push(ix);
    }
    let mut out = Vec::new();
    for members in groups.values() {
        for (a, &ia) in members.iter().enumerate() {
            for &ib in members.iter().skip(a + 1) {
                let p1 = &polys[ia];
                let p2 = &polys[ib];
                let s0 = p1.difference(p2);
                let s1 = p2.difference(p1);
                let pair =
                    SwitchingPair::validate(s0, s1).expect("equal projections induce a switching");
                out.push((p1.clone(), p2.clone(), pair));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_space_contains_only_the_unit_rectangle() {
        let space = SearchSpace::new(2, 4).unwrap();
        let all = enumerate_spirals(space);
        assert_eq!(all.len(), 1);
        assert_eq!(
            all[0].vertices(),
            &[
                Point::new(0, 0),
                Point::new(1, 0),
                Point::new(1, 1),
                Point::new(0, 1)
            ]
        );
    }

    #[test]
    fn three_grid_rectangles_up_to_translation() {
        // Rectangles w x h with 1 <= w, h <= 2, translations collapsed.
        let space = SearchSpace::new(3, 4).unwrap();
        let all = enumerate_spirals(space);
        assert_eq!(all.len(), 4);
        for s in &all {
            assert_eq!(s.hv_sequence(), HvSequence::new(vec![4], 1));
        }
    }

    #[test]
    fn enumerated_spirals_are_canonical_and_unique() {
        let space = SearchSpace::new(4, 6).unwrap();
        let all = enumerate_spirals(space);
        let mut seen = std::collections::BTreeSet::new();
        for s in &all {
            assert_eq!(s.canonical(), *s, "already canonical");
            assert_eq!(s.vertices()[0], Point::new(0, 0));
            assert!(seen.insert(s.vertices().to_vec()), "no duplicates");
            let rect = s.bounding_rect();
            assert!(rect.width() <= 3 && rect.height() <= 3);
        }
    }

    #[test]
    fn census_counts_are_partition_independent() {
        let space = SearchSpace::new(4, 8).unwrap();
        let a = census_with_jobs(space, 1);
        let b = census_with_jobs(space, 3);
        assert_eq!(a, b);
    }

    #[test]
    fn census_monotone_under_space_growth() {
        let small = census(SearchSpace::new(3, 6).unwrap());
        let big = census(SearchSpace::new(4, 8).unwrap());
        let lookup: BTreeMap<_, _> = big
            .iter()
            .map(|e| (e.sequence.clone(), e.realizable_count))
            .collect();
        for e in &small {
            assert!(lookup.get(&e.sequence).copied().unwrap_or(0) >= e.realizable_count);
        }
    }

    #[test]
    fn brute_force_matches_cover_on_examples() {
        let unit = SquaredSpiral::build([(0, 0), (1, 0), (1, 1), (0, 1)])
            .unwrap()
            .to_switching();
        assert!(brute_force_hv_convex(&unit));
        let curl = SquaredSpiral::build([(0, 0), (2, 0), (2, 2), (3, 2), (3, 1), (0, 1)])
            .unwrap()
            .to_switching();
        assert!(brute_force_hv_convex(&curl));
        // Even-run zigzag: not hv-convex.
        let zig = SquaredSpiral::build([
            (0, 0),
            (1, 0),
            (1, 1),
            (2, 1),
            (2, 0),
            (3, 0),
            (3, 2),
            (0, 2),
        ])
        .unwrap()
        .to_switching();
        assert!(!brute_force_hv_convex(&zig));
        assert!(!zig.is_hv_convex_by_cover());
    }

    #[test]
    fn polyomino_enumeration_small_counts() {
        // 1x1 grid: the single cell.
        assert_eq!(enumerate_hv_polyominoes(1).len(), 1);
        // 2x2: 4 singles + 4 dominoes + 4 L-trominoes + 1 square = 13.
        assert_eq!(enumerate_hv_polyominoes(2).len(), 13);
        for p in enumerate_hv_polyominoes(3) {
            assert!(p.is_hv_convex_polyomino().unwrap());
        }
    }

    #[test]
    fn polyomino_pair_scan_2_is_empty() {
        assert!(polyomino_pair_scan(2, false).unwrap().is_empty());
    }

    #[test]
    fn pair_scan_guard() {
        assert!(matches!(
            polyomino_pair_scan(5, false),
            Err(EnumerateError::GridTooLarge { .. })
        ));
    }
}
