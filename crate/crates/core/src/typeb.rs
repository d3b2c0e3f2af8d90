//! Type-B permutation tableaux on shifted Ferrers diagrams, their
//! symmetric completions, and the bijection with symmetric permutations.
//!
//! A base diagram of length `n` may have empty rows and empty columns. With
//! `k` base columns, `k` rows of sizes `1..=k` are stacked on top; the added
//! row whose last cell lies in column `j` is labeled `-j`, and that last cell
//! is a diagonal cell. Display order: added rows first (sizes increasing),
//! then the base rows in increasing label order.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::perm::{enumerate_symmetric_perms, PartialPerm, Perm};
use crate::permstat::nwnm_sign;
use crate::shape::{Shape, Step};
use crate::tableau::Tableau;
use crate::zigzag::{phi, phi_inverse_partial, phi_partial};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShiftedShape {
    n: u32,
    /// base column labels, decreasing
    cols: Vec<u32>,
    /// positive row labels, increasing
    rows: Vec<u32>,
}

impl ShiftedShape {
    /// Any subset of `1..=n` may be the set of base columns.
    pub fn from_column_labels(n: u32, cols: &[u32]) -> Result<ShiftedShape> {
        let mut is_col = vec![false; n as usize + 1];
        for &c in cols {
            if c == 0 || c > n {
                return Err(Error::LabelOutOfRange { label: c, n });
            }
            if std::mem::replace(&mut is_col[c as usize], true) {
                return Err(Error::DuplicateLabel(c));
            }
        }
        let mut cols = cols.to_vec();
        cols.sort_unstable_by(|a, b| b.cmp(a));
        let rows = (1..=n).filter(|&l| !is_col[l as usize]).collect();
        Ok(ShiftedShape { n, cols, rows })
    }

    pub fn from_border(border: &[Step]) -> ShiftedShape {
        let cols: Vec<u32> = border
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == Step::West)
            .map(|(i, _)| i as u32 + 1)
            .collect();
        ShiftedShape::from_column_labels(border.len() as u32, &cols)
            .expect("labels from a border word")
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of base columns, which is also the number of added rows.
    pub fn k(&self) -> usize {
        self.cols.len()
    }

    pub fn base_cols(&self) -> &[u32] {
        &self.cols
    }

    pub fn pos_rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn num_display_rows(&self) -> usize {
        self.cols.len() + self.rows.len()
    }

    /// Signed label of a display row.
    pub fn row_label(&self, dr: usize) -> i64 {
        let k = self.k();
        if dr < k {
            -(self.cols[dr] as i64)
        } else {
            self.rows[dr - k] as i64
        }
    }

    pub fn row_len(&self, dr: usize) -> usize {
        let k = self.k();
        if dr < k {
            dr + 1
        } else {
            let label = self.rows[dr - k];
            self.cols.iter().take_while(|&&c| c > label).count()
        }
    }

    pub fn row_sizes(&self) -> Vec<usize> {
        (0..self.num_display_rows())
            .map(|r| self.row_len(r))
            .collect()
    }

    /// Display index of the lowest cell of column `c`.
    pub fn col_bottom(&self, c: usize) -> usize {
        let below = self.rows.iter().take_while(|&&r| r < self.cols[c]).count();
        self.k() + below - 1
    }

    pub fn is_diagonal(&self, dr: usize, c: usize) -> bool {
        dr < self.k() && dr == c
    }

    pub fn col_index(&self, label: u32) -> Option<usize> {
        self.cols.binary_search_by(|c| label.cmp(c)).ok()
    }

    pub fn row_index(&self, label: u32) -> Option<usize> {
        self.rows.binary_search(&label).ok().map(|i| i + self.k())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BTableau {
    shape: ShiftedShape,
    fill: Vec<Vec<bool>>,
}

/// Unrestricted rows and columns in the type-B sense.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BStats {
    pub urrb: BTreeSet<u32>,
    pub urcb: BTreeSet<u32>,
}

impl BStats {
    pub fn ur_b(&self) -> usize {
        self.urrb.len() + self.urcb.len()
    }

    pub fn sign_b(&self) -> i64 {
        if self.ur_b() % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// The reflection-completed tableau, its nonzero part, and the labels of the
/// rows and columns that were all zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymTableau {
    pub ts: Tableau,
    pub ta: Tableau,
    pub removed: Vec<u32>,
}

impl BTableau {
    pub fn new(shape: ShiftedShape, fill: Vec<Vec<bool>>) -> Result<BTableau> {
        if fill.len() != shape.num_display_rows() {
            return Err(Error::FillMismatch(format!(
                "{} rows given, shape has {}",
                fill.len(),
                shape.num_display_rows()
            )));
        }
        for (r, row) in fill.iter().enumerate() {
            if row.len() != shape.row_len(r) {
                return Err(Error::FillMismatch(format!(
                    "row {} has {} cells, expected {}",
                    shape.row_label(r),
                    row.len(),
                    shape.row_len(r)
                )));
            }
        }
        Ok(BTableau { shape, fill })
    }

    pub fn shape(&self) -> &ShiftedShape {
        &self.shape
    }

    pub fn fill(&self) -> &[Vec<bool>] {
        &self.fill
    }

    pub fn n(&self) -> u32 {
        self.shape.n
    }

    /// Cell in added row `-m` and column `j` (requires `m <= j`).
    fn added(&self, m: u32, j: u32) -> bool {
        let r = self.shape.col_index(m).expect("added row label");
        let c = self.shape.col_index(j).expect("column label");
        self.fill[r][c]
    }

    fn base(&self, i: u32, j: u32) -> bool {
        let r = self.shape.row_index(i).expect("row label");
        let c = self.shape.col_index(j).expect("column label");
        self.fill[r][c]
    }

    /// Cell by signed row label and column label.
    pub fn get(&self, row: i64, col: u32) -> Option<bool> {
        let r = if row < 0 {
            self.shape.col_index(row.unsigned_abs() as u32)?
        } else {
            self.shape.row_index(row as u32)?
        };
        let c = self.shape.col_index(col)?;
        self.fill[r].get(c).copied()
    }

    /// Every column holds a 1, no 0 has a 1 above and a 1 to its left, and
    /// a diagonal 0 has no 1 to its left.
    pub fn validate_b(&self) -> bool {
        let mut col_has_one = vec![false; self.shape.k()];
        for (r, row) in self.fill.iter().enumerate() {
            let mut left = false;
            for (c, &b) in row.iter().enumerate() {
                if b {
                    left = true;
                    col_has_one[c] = true;
                } else if left && (col_has_one[c] || self.shape.is_diagonal(r, c)) {
                    return false;
                }
            }
        }
        col_has_one.into_iter().all(|b| b)
    }

    pub fn b_statistics(&self) -> BStats {
        let k = self.shape.k();
        let mut above = vec![false; k];
        let mut col_restricted = vec![false; k];
        let mut row_restricted = vec![false; self.fill.len()];
        let mut row_has_one = vec![false; self.fill.len()];
        for (r, row) in self.fill.iter().enumerate() {
            let mut left = false;
            for (c, &b) in row.iter().enumerate() {
                if b {
                    left = true;
                    above[c] = true;
                    row_has_one[r] = true;
                    continue;
                }
                // a diagonal cell tops its column, so this guard never fires on valid input
                if above[c] && !self.shape.is_diagonal(r, c) {
                    row_restricted[r] = true;
                }
                if left {
                    col_restricted[c] = true;
                }
            }
        }
        let urrb = (k..self.fill.len())
            .filter(|&r| row_has_one[r] && !row_restricted[r])
            .map(|r| self.shape.rows[r - k])
            .collect();
        let urcb = (0..k)
            .filter(|&c| !col_restricted[c] && !row_restricted[c])
            .map(|c| self.shape.cols[c])
            .collect();
        BStats { urrb, urcb }
    }

    /// Reflects the non-diagonal cells across the diagonal, relabels the
    /// border `1..=2n`, and strips rows and columns without a 1.
    pub fn symmetrize(&self) -> SymTableau {
        let n = self.shape.n;
        let ts_rows: Vec<u32> = self
            .shape
            .cols
            .iter()
            .map(|&m| n + 1 - m)
            .chain(self.shape.rows.iter().map(|&i| n + i))
            .collect();
        let ts_cols: Vec<u32> = self
            .shape
            .cols
            .iter()
            .map(|&j| n + j)
            .chain(self.shape.rows.iter().map(|&i| n + 1 - i))
            .collect();
        let shape = Shape::from_labels(2 * n, &ts_rows, &ts_cols).expect("labels partition 1..=2n");
        let value = |a: u32, b: u32| -> bool {
            if a > n {
                self.base(a - n, b - n)
            } else {
                let x = n + 1 - a;
                if b > n {
                    let y = b - n;
                    if x <= y {
                        self.added(x, y)
                    } else {
                        self.added(y, x)
                    }
                } else {
                    self.base(n + 1 - b, x)
                }
            }
        };
        let fill: Vec<Vec<bool>> = (0..shape.num_rows())
            .map(|r| {
                let a = shape.rows()[r];
                (0..shape.row_len(r))
                    .map(|c| value(a, shape.cols()[c]))
                    .collect()
            })
            .collect();
        let ts = Tableau::new(shape, fill).expect("fill follows the shape");
        let (ta, removed) = strip_empty_lines(&ts);
        SymTableau { ts, ta, removed }
    }
}

/// Deletes the rows and columns holding no 1, keeping labels.
fn strip_empty_lines(t: &Tableau) -> (Tableau, Vec<u32>) {
    let shape = t.shape();
    let mut col_has_one = vec![false; shape.num_cols()];
    let mut row_has_one = vec![false; shape.num_rows()];
    for (r, row) in t.fill().iter().enumerate() {
        for (c, &b) in row.iter().enumerate() {
            if b {
                col_has_one[c] = true;
                row_has_one[r] = true;
            }
        }
    }
    let keep_rows: Vec<u32> = shape
        .rows()
        .iter()
        .zip(&row_has_one)
        .filter(|(_, &k)| k)
        .map(|(&l, _)| l)
        .collect();
    let keep_cols: Vec<u32> = shape
        .cols()
        .iter()
        .zip(&col_has_one)
        .filter(|(_, &k)| k)
        .map(|(&l, _)| l)
        .collect();
    let mut removed: Vec<u32> = shape
        .rows()
        .iter()
        .zip(&row_has_one)
        .chain(shape.cols().iter().zip(&col_has_one))
        .filter(|(_, &k)| !k)
        .map(|(&l, _)| l)
        .collect();
    removed.sort_unstable();
    let sub = Shape::from_labels(shape.n(), &keep_rows, &keep_cols).expect("subset of labels");
    let fill = (0..sub.num_rows())
        .map(|r| {
            let a = sub.rows()[r];
            (0..sub.row_len(r))
                .map(|c| t.get(a, sub.cols()[c]).expect("cell survives"))
                .collect()
        })
        .collect();
    (
        Tableau::new(sub, fill).expect("fill follows the shape"),
        removed,
    )
}

/// Shifted shapes of length `n`, border words in lexicographic order with
/// south before west (label 1 is the most significant step).
pub fn shifted_shapes_of_length(n: u32) -> Vec<ShiftedShape> {
    (0..1u64 << n)
        .map(|mask| {
            let cols: Vec<u32> = (1..=n).filter(|&l| mask >> (n - l) & 1 == 1).collect();
            ShiftedShape::from_column_labels(n, &cols).expect("labels in range")
        })
        .collect()
}

/// All type-B tableaux of a shape, in row-major binary order.
pub fn btableaux_of_shape(shape: &ShiftedShape) -> Vec<BTableau> {
    struct Search<'a> {
        shape: &'a ShiftedShape,
        sizes: Vec<usize>,
        bottom: Vec<usize>,
        fill: Vec<Vec<bool>>,
        col_has_one: Vec<bool>,
        out: Vec<BTableau>,
    }

    impl Search<'_> {
        fn go(&mut self, r: usize, c: usize, left: bool) {
            if r == self.sizes.len() {
                self.out.push(BTableau {
                    shape: self.shape.clone(),
                    fill: self.fill.clone(),
                });
                return;
            }
            if c == self.sizes[r] {
                return self.go(r + 1, 0, false);
            }
            let above = self.col_has_one[c];
            let diagonal_block = left && self.shape.is_diagonal(r, c);
            if !(above && left) && !diagonal_block && (above || self.bottom[c] != r) {
                self.fill[r][c] = false;
                self.go(r, c + 1, left);
            }
            self.fill[r][c] = true;
            self.col_has_one[c] = true;
            self.go(r, c + 1, true);
            self.col_has_one[c] = above;
            self.fill[r][c] = false;
        }
    }

    let sizes = shape.row_sizes();
    let mut search = Search {
        shape,
        bottom: (0..shape.k()).map(|c| shape.col_bottom(c)).collect(),
        fill: sizes.iter().map(|&s| vec![false; s]).collect(),
        sizes,
        col_has_one: vec![false; shape.k()],
        out: Vec::new(),
    };
    search.go(0, 0, false);
    search.out
}

pub fn enumerate_b(n: u32) -> impl Iterator<Item = BTableau> {
    shifted_shapes_of_length(n)
        .into_iter()
        .flat_map(|s| btableaux_of_shape(&s))
}

/// Zigzag map of the symmetric tableau, a symmetric permutation of `[2n]`.
///
/// Computed on `T_s` directly and cross-checked against the zigzag map of
/// `T_A` completed by fixed points on the removed labels.
pub fn phi_b(t: &BTableau) -> Perm {
    let sym = t.symmetrize();
    let direct = phi(&sym.ts);
    let via_ta = phi_partial(&sym.ta)
        .extend_with_fixed_points()
        .expect("T_A exits permute its labels");
    assert_eq!(direct, via_ta, "the two zigzag routes disagree");
    direct
}

/// Rebuilds the type-B tableau of a symmetric permutation.
pub fn phi_b_inverse(p: &Perm) -> Result<BTableau> {
    if !p.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let m = p.len() as u32;
    let n = m / 2;
    let (mut rows, mut cols) = (Vec::new(), Vec::new());
    for i in 1..=m {
        let v = p.at(i);
        if v > i || (v == i && i > n) {
            rows.push(i);
        } else {
            cols.push(i);
        }
    }
    let ta = phi_inverse_partial(&PartialPerm::without_fixed_points(p));
    let ts_shape = Shape::from_labels(m, &rows, &cols).expect("labels partition 1..=2n");
    let ts_at = |a: u32, b: u32| ta.get(a, b).unwrap_or(false);

    let base_cols: Vec<u32> = cols.iter().filter(|&&b| b > n).map(|&b| b - n).collect();
    let shape = ShiftedShape::from_column_labels(n, &base_cols)?;
    debug_assert!(shape.rows.iter().all(|&i| ts_shape.is_row(n + i)));
    let k = shape.k();
    let fill = (0..shape.num_display_rows())
        .map(|r| {
            (0..shape.row_len(r))
                .map(|c| {
                    let y = shape.cols[c];
                    if r < k {
                        ts_at(n + 1 - shape.cols[r], n + y)
                    } else {
                        ts_at(n + shape.rows[r - k], n + y)
                    }
                })
                .collect()
        })
        .collect();
    BTableau::new(shape, fill)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BMethod {
    Enumerate,
    Permutation,
    Formula,
}

/// `sum sign_B` over type-B tableaux of length `n`; `s_B(0) = 1`.
pub fn s_b_of_n(n: u32, method: BMethod) -> i64 {
    match method {
        BMethod::Enumerate => shifted_shapes_of_length(n)
            .par_iter()
            .map(|s| {
                btableaux_of_shape(s)
                    .iter()
                    .map(|t| t.b_statistics().sign_b())
                    .sum::<i64>()
            })
            .collect::<Vec<_>>()
            .into_iter()
            .sum(),
        BMethod::Permutation => enumerate_symmetric_perms(n).par_iter().map(nwnm_sign).sum(),
        BMethod::Formula => {
            if n % 2 == 0 {
                1i64 << (n / 2)
            } else {
                0
            }
        }
    }
}
