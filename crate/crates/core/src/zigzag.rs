//! Zigzag paths and the bijection between permutation tableaux and permutations.
//!
//! A path enters from the left end of a row heading east, or from the top of
//! a column heading south, and swaps heading at every cell holding a 1. It
//! leaves the diagram either through the right end of some row or the bottom
//! of some column, and that row or column label is its exit.

use std::collections::HashSet;

use crate::perm::{PartialPerm, Perm};
use crate::permstat::weak_excedances;
use crate::shape::Shape;
use crate::tableau::Tableau;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Heading {
    East,
    South,
}

/// A visited cell, by labels, with the heading the path had on arrival.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PathCell {
    pub row: u32,
    pub col: u32,
    pub heading: Heading,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZigzagPath {
    pub entry: u32,
    pub trace: Vec<PathCell>,
    pub exit: u32,
}

/// Follows the path entering at `label` cell by cell.
///
/// # Panics
/// If `label` is neither a row nor a column label of the tableau.
pub fn trace_path(t: &Tableau, label: u32) -> ZigzagPath {
    let shape = t.shape();
    let (mut r, mut c, mut heading) = if let Some(r) = shape.row_index(label) {
        if shape.row_len(r) == 0 {
            return ZigzagPath {
                entry: label,
                trace: Vec::new(),
                exit: label,
            };
        }
        (r, 0, Heading::East)
    } else {
        let c = shape.col_index(label).expect("label belongs to the shape");
        if shape.col_len(c) == 0 {
            return ZigzagPath {
                entry: label,
                trace: Vec::new(),
                exit: label,
            };
        }
        (0, c, Heading::South)
    };
    let mut trace = Vec::new();
    loop {
        trace.push(PathCell {
            row: shape.rows()[r],
            col: shape.cols()[c],
            heading,
        });
        if t.at(r, c) {
            heading = match heading {
                Heading::East => Heading::South,
                Heading::South => Heading::East,
            };
        }
        match heading {
            Heading::East => {
                if c + 1 >= shape.row_len(r) {
                    return ZigzagPath {
                        entry: label,
                        trace,
                        exit: shape.rows()[r],
                    };
                }
                c += 1;
            }
            Heading::South => {
                if r + 1 >= shape.col_len(c) {
                    return ZigzagPath {
                        entry: label,
                        trace,
                        exit: shape.cols()[c],
                    };
                }
                r += 1;
            }
        }
    }
}

/// `(entry, exit)` for every label, sorted by entry.
///
/// Columns are swept left to right; each row carries the path currently
/// heading east in it, and a 1 exchanges that path with the one coming down
/// the column.
pub fn zigzag_exits(t: &Tableau) -> Vec<(u32, u32)> {
    let shape = t.shape();
    let mut east: Vec<u32> = shape.rows().to_vec();
    let mut out = Vec::with_capacity(shape.length());
    for (c, &col) in shape.cols().iter().enumerate() {
        let mut south = col;
        for (r, lane) in east.iter_mut().enumerate().take(shape.col_len(c)) {
            if t.at(r, c) {
                std::mem::swap(&mut south, lane);
            }
        }
        out.push((south, col));
    }
    out.extend(east.into_iter().zip(shape.rows().iter().copied()));
    out.sort_unstable();
    out
}

/// The permutation whose `i`-th letter is the exit of the path entering at `i`.
///
/// # Panics
/// If the tableau's labels are not exactly `1..=n`.
pub fn phi(t: &Tableau) -> Perm {
    assert!(t.shape().is_standard(), "phi needs labels 1..=n");
    Perm::from_word_unchecked(zigzag_exits(t).into_iter().map(|(_, e)| e).collect())
}

/// Zigzag map of a tableau with arbitrary labels, as a partial permutation of `1..=t.n()`.
pub fn phi_partial(t: &Tableau) -> PartialPerm {
    let (support, values) = zigzag_exits(t).into_iter().unzip();
    PartialPerm::new(t.n(), support, values).expect("zigzag exits permute the labels")
}

/// The unique permutation tableau mapped to `p`.
///
/// The shape is forced: rows are the weak excedances of `p`. The filling is
/// found by an exhaustive search over that shape.
///
/// # Panics
/// If the search finds no filling or more than one; both would mean the map
/// is not a bijection.
pub fn phi_inverse(p: &Perm) -> Tableau {
    let n = p.len() as u32;
    let rows = weak_excedances(p);
    let cols: Vec<u32> = (1..=n).filter(|i| rows.binary_search(i).is_err()).collect();
    let shape = Shape::from_column_labels(n, &cols).expect("1 is always a weak excedance");
    fill_for_exits(&shape, |l| p.at(l))
}

/// Inverse zigzag map on the labels of a partial permutation; rows are the
/// supported positions whose value is at least the position.
pub fn phi_inverse_partial(pp: &PartialPerm) -> Tableau {
    let (rows, cols): (Vec<(u32, u32)>, Vec<(u32, u32)>) = pp.entries().partition(|&(i, v)| v >= i);
    let rows: Vec<u32> = rows.into_iter().map(|(i, _)| i).collect();
    let cols: Vec<u32> = cols.into_iter().map(|(i, _)| i).collect();
    let shape = Shape::from_labels(pp.n(), &rows, &cols).expect("support labels are distinct");
    fill_for_exits(&shape, |l| pp.image(l))
}

/// Searches the permutation tableaux of `shape` for the one whose zigzag
/// exits are given by `target`.
pub fn fill_for_exits(shape: &Shape, target: impl Fn(u32) -> u32) -> Tableau {
    let mut found = Vec::new();
    let ok = shape
        .rows()
        .iter()
        .enumerate()
        .filter(|&(r, _)| shape.row_len(r) == 0)
        .all(|(_, &l)| target(l) == l)
        && shape
            .cols()
            .iter()
            .enumerate()
            .all(|(c, &l)| shape.col_len(c) > 0 || target(l) == l);
    if ok {
        let mut search = InverseSearch::new(shape, &target);
        search.go(0, 0, &mut found);
    }
    match found.len() {
        1 => Tableau::new(shape.clone(), found.pop().unwrap()).expect("search respects the shape"),
        k => panic!(
            "zigzag inverse found {k} fillings of shape {shape}; the map is not bijective here"
        ),
    }
}

struct InverseSearch<'a, F: Fn(u32) -> u32> {
    shape: &'a Shape,
    target: &'a F,
    row_len: Vec<usize>,
    col_len: Vec<usize>,
    fill: Vec<Vec<bool>>,
    east: Vec<u32>,
    row_has_one: Vec<bool>,
    south: u32,
    above: bool,
}

impl<'a, F: Fn(u32) -> u32> InverseSearch<'a, F> {
    fn new(shape: &'a Shape, target: &'a F) -> Self {
        let row_len = shape.row_sizes();
        let col_len: Vec<usize> = (0..shape.num_cols()).map(|c| shape.col_len(c)).collect();
        InverseSearch {
            shape,
            target,
            fill: row_len.iter().map(|&s| vec![false; s]).collect(),
            row_len,
            col_len,
            east: shape.rows().to_vec(),
            row_has_one: vec![false; shape.num_rows()],
            south: 0,
            above: false,
        }
    }

    /// Exit constraints on the two paths leaving cell `(r, c)`.
    fn consistent(&self, r: usize, c: usize) -> bool {
        let rows = self.shape.rows();
        let cols = self.shape.cols();
        let e = (self.target)(self.east[r]);
        let east_ok = if c + 1 == self.row_len[r] {
            e == rows[r]
        } else {
            (rows[r]..=cols[c + 1]).contains(&e)
        };
        let s = (self.target)(self.south);
        let south_ok = if r + 1 == self.col_len[c] {
            s == cols[c]
        } else {
            (rows[r + 1]..=cols[c]).contains(&s)
        };
        east_ok && south_ok
    }

    fn go(&mut self, c: usize, r: usize, found: &mut Vec<Vec<Vec<bool>>>) {
        if found.len() > 1 {
            return;
        }
        if c == self.col_len.len() {
            found.push(self.fill.clone());
            return;
        }
        if r == 0 {
            self.south = self.shape.cols()[c];
            self.above = false;
        }
        if r == self.col_len[c] {
            let (south, above) = (self.south, self.above);
            self.go(c + 1, 0, found);
            self.south = south;
            self.above = above;
            return;
        }
        let bottom = r + 1 == self.col_len[c];
        let (south, above, left) = (self.south, self.above, self.row_has_one[r]);

        if !(above && left) && (above || !bottom) {
            self.fill[r][c] = false;
            if self.consistent(r, c) {
                self.go(c, r + 1, found);
            }
            self.south = south;
            self.above = above;
        }

        self.fill[r][c] = true;
        std::mem::swap(&mut self.south, &mut self.east[r]);
        self.above = true;
        self.row_has_one[r] = true;
        if self.consistent(r, c) {
            self.go(c, r + 1, found);
        }
        self.fill[r][c] = false;
        self.east[r] = self.south;
        self.south = south;
        self.above = above;
        self.row_has_one[r] = left;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntersectionViolation {
    SharedEdge { a: u32, b: u32 },
    ZeroAfterFirstMeeting { a: u32, b: u32, row: u32, col: u32 },
}

/// Checks that any two zigzag paths meet only at cells, never along an
/// edge, and that every meeting after the first one is at a 1.
pub fn check_path_intersections(t: &Tableau) -> Vec<IntersectionViolation> {
    let shape = t.shape();
    let mut labels: Vec<u32> = shape.rows().iter().chain(shape.cols()).copied().collect();
    labels.sort_unstable();
    let traces: Vec<ZigzagPath> = labels.iter().map(|&l| trace_path(t, l)).collect();
    let cells =
        |p: &ZigzagPath| -> Vec<(u32, u32)> { p.trace.iter().map(|c| (c.row, c.col)).collect() };
    let edges = |p: &ZigzagPath| -> HashSet<((u32, u32), (u32, u32))> {
        cells(p).windows(2).map(|w| (w[0], w[1])).collect()
    };
    let mut out = Vec::new();
    for (x, pa) in traces.iter().enumerate() {
        let ea = edges(pa);
        for pb in &traces[x + 1..] {
            if edges(pb).intersection(&ea).next().is_some() {
                out.push(IntersectionViolation::SharedEdge {
                    a: pa.entry,
                    b: pb.entry,
                });
            }
            let cb: HashSet<(u32, u32)> = cells(pb).into_iter().collect();
            let shared = cells(pa).into_iter().filter(|c| cb.contains(c));
            for (row, col) in shared.skip(1) {
                if t.get(row, col) != Some(true) {
                    out.push(IntersectionViolation::ZeroAfterFirstMeeting {
                        a: pa.entry,
                        b: pb.entry,
                        row,
                        col,
                    });
                }
            }
        }
    }
    out
}
