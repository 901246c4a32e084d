//! Exact finite point sets on the integer lattice.
//!
//! Text formats: a 1D set is one decimal integer per line, a 2D set is
//! `x y` per line. Blank lines and lines starting with `#` are ignored.
//! Output is canonical: ascending order, LF line endings.

use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest coordinate magnitude accepted by the constructors. Leaves room
/// for doubling and for sums of two coordinates without overflow.
pub const MAX_COORD: i64 = 1 << 60;

fn check_coord(v: i64) -> Result<i64> {
    if v.unsigned_abs() > MAX_COORD as u64 {
        Err(Error::Range(format!(
            "coordinate {v} outside supported domain ±2^60"
        )))
    } else {
        Ok(v)
    }
}

/// Strictly increasing finite set of integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
pub struct IntSet1D {
    elems: Vec<i64>,
}

impl IntSet1D {
    pub fn new<I: IntoIterator<Item = i64>>(values: I) -> Result<Self> {
        let mut elems = values
            .into_iter()
            .map(check_coord)
            .collect::<Result<Vec<_>>>()?;
        elems.sort_unstable();
        elems.dedup();
        Ok(IntSet1D { elems })
    }

    /// Wraps a vector that is already sorted, deduplicated and in range.
    pub(crate) fn from_sorted_unchecked(elems: Vec<i64>) -> Self {
        debug_assert!(elems.windows(2).all(|w| w[0] < w[1]));
        IntSet1D { elems }
    }

    pub fn elems(&self) -> &[i64] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn min(&self) -> Option<i64> {
        self.elems.first().copied()
    }

    pub fn max(&self) -> Option<i64> {
        self.elems.last().copied()
    }

    pub fn contains(&self, v: i64) -> bool {
        self.elems.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> + '_ {
        self.elems.iter().copied()
    }

    /// Elements lying in the closed range `[lo, hi]`.
    pub fn restricted(&self, lo: i64, hi: i64) -> IntSet1D {
        let start = self.elems.partition_point(|&v| v < lo);
        let end = self.elems.partition_point(|&v| v <= hi);
        IntSet1D {
            elems: self.elems[start..end.max(start)].to_vec(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(self.elems.len() * 8);
        for v in &self.elems {
            let _ = writeln!(out, "{v}");
        }
        out
    }

    pub fn parse(text: &str, path: &Path) -> Result<Self> {
        let mut values = Vec::new();
        for (idx, line) in data_lines(text) {
            let v = parse_int(line, path, idx)?;
            values.push(v);
        }
        IntSet1D::new(values).map_err(|e| Error::Parse {
            path: path.to_path_buf(),
            line: 0,
            msg: e.to_string(),
        })
    }
}

impl FromIterator<i64> for IntSet1D {
    /// Panics on out-of-domain values; use [`IntSet1D::new`] for fallible input.
    fn from_iter<I: IntoIterator<Item = i64>>(iter: I) -> Self {
        IntSet1D::new(iter).expect("coordinate outside supported domain")
    }
}

/// Dense membership bitmap over `[min, max]` of a 1D set.
#[derive(Debug, Clone)]
pub struct DenseIndex {
    offset: i64,
    bits: Vec<bool>,
}

impl DenseIndex {
    pub fn new(set: &IntSet1D) -> Self {
        match (set.min(), set.max()) {
            (Some(lo), Some(hi)) => {
                let mut bits = vec![false; (hi - lo + 1) as usize];
                for v in set.iter() {
                    bits[(v - lo) as usize] = true;
                }
                DenseIndex { offset: lo, bits }
            }
            _ => DenseIndex {
                offset: 0,
                bits: Vec::new(),
            },
        }
    }

    #[inline]
    pub fn contains(&self, v: i64) -> bool {
        let i = v - self.offset;
        i >= 0 && (i as usize) < self.bits.len() && self.bits[i as usize]
    }
}

/// Finite set of lattice points, stored sorted by `(x, y)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
pub struct PointSet2D {
    points: Vec<(i64, i64)>,
}

/// Closed axis-parallel bounding box `[min_x, max_x] × [min_y, max_y]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundingBox {
    pub min_x: i64,
    pub max_x: i64,
    pub min_y: i64,
    pub max_y: i64,
}

impl BoundingBox {
    pub fn width(&self) -> u64 {
        (self.max_x - self.min_x) as u64 + 1
    }

    pub fn height(&self) -> u64 {
        (self.max_y - self.min_y) as u64 + 1
    }

    pub fn contains(&self, x: i64, y: i64) -> bool {
        (self.min_x..=self.max_x).contains(&x) && (self.min_y..=self.max_y).contains(&y)
    }
}

impl PointSet2D {
    pub fn new<I: IntoIterator<Item = (i64, i64)>>(points: I) -> Result<Self> {
        let mut points = points
            .into_iter()
            .map(|(x, y)| Ok((check_coord(x)?, check_coord(y)?)))
            .collect::<Result<Vec<_>>>()?;
        points.sort_unstable();
        points.dedup();
        Ok(PointSet2D { points })
    }

    pub(crate) fn from_sorted_unchecked(points: Vec<(i64, i64)>) -> Self {
        debug_assert!(points.windows(2).all(|w| w[0] < w[1]));
        PointSet2D { points }
    }

    /// `xs × ys`.
    pub fn product(xs: &IntSet1D, ys: &IntSet1D) -> Self {
        let mut points = Vec::with_capacity(xs.len() * ys.len());
        for x in xs.iter() {
            for y in ys.iter() {
                points.push((x, y));
            }
        }
        PointSet2D { points }
    }

    pub fn points(&self) -> &[(i64, i64)] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, x: i64, y: i64) -> bool {
        self.points.binary_search(&(x, y)).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.points.iter().copied()
    }

    pub fn bounding_box(&self) -> Option<BoundingBox> {
        let (&(min_x, _), &(max_x, _)) = (self.points.first()?, self.points.last()?);
        let (min_y, max_y) = self
            .points
            .iter()
            .fold((i64::MAX, i64::MIN), |(lo, hi), &(_, y)| (lo.min(y), hi.max(y)));
        Some(BoundingBox {
            min_x,
            max_x,
            min_y,
            max_y,
        })
    }

    pub fn union(&self, other: &PointSet2D) -> PointSet2D {
        let mut points = Vec::with_capacity(self.len() + other.len());
        points.extend_from_slice(&self.points);
        points.extend_from_slice(&other.points);
        points.sort_unstable();
        points.dedup();
        PointSet2D { points }
    }

    pub fn transposed(&self) -> PointSet2D {
        let mut points: Vec<_> = self.points.iter().map(|&(x, y)| (y, x)).collect();
        points.sort_unstable();
        PointSet2D { points }
    }

    pub fn translated(&self, dx: i64, dy: i64) -> Result<PointSet2D> {
        PointSet2D::new(self.points.iter().map(|&(x, y)| (x + dx, y + dy)))
    }

    /// Applies `p ↦ scale·p + offset` to every point.
    pub fn affine(&self, scale: i64, offset: (i64, i64)) -> Result<PointSet2D> {
        let map = |v: i64, o: i64| {
            v.checked_mul(scale)
                .and_then(|w| w.checked_add(o))
                .ok_or_else(|| Error::Range("affine image overflows i64".into()))
        };
        let points = self
            .points
            .iter()
            .map(|&(x, y)| Ok((map(x, offset.0)?, map(y, offset.1)?)))
            .collect::<Result<Vec<_>>>()?;
        PointSet2D::new(points)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(self.points.len() * 12);
        for (x, y) in &self.points {
            let _ = writeln!(out, "{x} {y}");
        }
        out
    }

    pub fn parse(text: &str, path: &Path) -> Result<Self> {
        let mut points = Vec::new();
        for (idx, line) in data_lines(text) {
            let mut fields = line.split_whitespace();
            let (Some(xs), Some(ys), None) = (fields.next(), fields.next(), fields.next()) else {
                return Err(Error::Parse {
                    path: path.to_path_buf(),
                    line: idx,
                    msg: format!("expected `x y`, got {line:?}"),
                });
            };
            points.push((parse_int(xs, path, idx)?, parse_int(ys, path, idx)?));
        }
        PointSet2D::new(points).map_err(|e| Error::Parse {
            path: path.to_path_buf(),
            line: 0,
            msg: e.to_string(),
        })
    }
}

impl FromIterator<(i64, i64)> for PointSet2D {
    fn from_iter<I: IntoIterator<Item = (i64, i64)>>(iter: I) -> Self {
        PointSet2D::new(iter).expect("coordinate outside supported domain")
    }
}

/// A point stored as `(2x, 2y)` so that half-integer centers are exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DoubledPoint {
    pub x2: i64,
    pub y2: i64,
}

impl DoubledPoint {
    pub const fn new(x2: i64, y2: i64) -> Self {
        DoubledPoint { x2, y2 }
    }

    pub const fn from_lattice(x: i64, y: i64) -> Self {
        DoubledPoint { x2: 2 * x, y2: 2 * y }
    }

    /// The lattice point, if both doubled coordinates are even.
    pub fn to_lattice(self) -> Option<(i64, i64)> {
        (self.x2 % 2 == 0 && self.y2 % 2 == 0).then_some((self.x2 / 2, self.y2 / 2))
    }

    pub fn is_lattice(self) -> bool {
        self.to_lattice().is_some()
    }

    /// Decimal rendering `x.0`/`x.5` of both coordinates.
    pub fn render(self) -> String {
        format!("{} {}", render_half(self.x2), render_half(self.y2))
    }
}

/// Renders a doubled value `v` as the decimal `v/2` with one fractional digit.
pub fn render_half(v: i64) -> String {
    let sign = if v < 0 { "-" } else { "" };
    let a = v.unsigned_abs();
    format!("{sign}{}.{}", a / 2, if a.is_multiple_of(2) { 0 } else { 5 })
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_int(field: &str, path: &Path, line: usize) -> Result<i64> {
    let v: i64 = field.parse().map_err(|e| Error::Parse {
        path: path.to_path_buf(),
        line,
        msg: format!("bad integer {field:?}: {e}"),
    })?;
    check_coord(v).map_err(|e| Error::Parse {
        path: path.to_path_buf(),
        line,
        msg: e.to_string(),
    })
}

/// Reads a file into memory, mapping I/O failures to [`Error::Io`].
pub fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}
