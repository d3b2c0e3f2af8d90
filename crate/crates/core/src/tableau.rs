//! Type-A permutation tableaux.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::shape::{shapes_of_length, Shape};

/// A 0/1-filling of a [`Shape`]. `fill[r][c]` is the cell in the row at
/// display index `r` and the column at display index `c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: Shape,
    fill: Vec<Vec<bool>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CellClass {
    One,
    PlainZero,
    RowRestrictedZero,
    ColumnRestrictedZero,
    BothRestrictedZero,
}

impl CellClass {
    pub fn is_row_restricted(self) -> bool {
        matches!(
            self,
            CellClass::RowRestrictedZero | CellClass::BothRestrictedZero
        )
    }

    pub fn is_column_restricted(self) -> bool {
        matches!(
            self,
            CellClass::ColumnRestrictedZero | CellClass::BothRestrictedZero
        )
    }
}

/// Row and column statistics of a tableau. Sets hold labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowColStats {
    pub restricted_rows: BTreeSet<u32>,
    pub unrestricted_rows: BTreeSet<u32>,
    pub restricted_cols: BTreeSet<u32>,
    pub unrestricted_cols: BTreeSet<u32>,
    pub topone: usize,
    pub wt: usize,
}

impl RowColStats {
    pub fn urr(&self) -> usize {
        self.unrestricted_rows.len()
    }

    pub fn urc(&self) -> usize {
        self.unrestricted_cols.len()
    }
}

impl Tableau {
    /// Checks only that the filling has the dimensions of the shape.
    pub fn new(shape: Shape, fill: Vec<Vec<bool>>) -> Result<Tableau> {
        if fill.len() != shape.num_rows() {
            return Err(Error::FillMismatch(format!(
                "{} rows given, shape has {}",
                fill.len(),
                shape.num_rows()
            )));
        }
        for (r, row) in fill.iter().enumerate() {
            let want = shape.row_len(r);
            if row.len() != want {
                return Err(Error::FillMismatch(format!(
                    "row {} has {} cells, expected {}",
                    shape.rows()[r],
                    row.len(),
                    want
                )));
            }
        }
        Ok(Tableau { shape, fill })
    }

    /// The tableau of length `n` with no columns.
    pub fn all_rows(n: u32) -> Tableau {
        let shape = Shape::from_column_labels(n, &[]).expect("no columns");
        Tableau {
            fill: vec![Vec::new(); n as usize],
            shape,
        }
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn fill(&self) -> &[Vec<bool>] {
        &self.fill
    }

    pub fn n(&self) -> u32 {
        self.shape.n()
    }

    /// Cell value by display indices.
    pub fn at(&self, r: usize, c: usize) -> bool {
        self.fill[r][c]
    }

    /// Cell value by labels; `None` when the cell does not exist.
    pub fn get(&self, row: u32, col: u32) -> Option<bool> {
        let r = self.shape.row_index(row)?;
        let c = self.shape.col_index(col)?;
        self.fill[r].get(c).copied()
    }

    pub fn ones(&self) -> usize {
        self.fill.iter().flatten().filter(|&&b| b).count()
    }

    /// Every column holds a 1 and no 0 has both a 1 above it and a 1 to its left.
    pub fn validate(&self) -> bool {
        let cols = self.shape.num_cols();
        let mut col_has_one = vec![false; cols];
        for row in &self.fill {
            let mut left = false;
            for (c, &b) in row.iter().enumerate() {
                if b {
                    left = true;
                    col_has_one[c] = true;
                } else if left && col_has_one[c] {
                    return false;
                }
            }
        }
        col_has_one.into_iter().all(|b| b)
    }

    pub fn classify_cells(&self) -> Vec<Vec<CellClass>> {
        let mut above = vec![false; self.shape.num_cols()];
        let mut out = Vec::with_capacity(self.fill.len());
        for row in &self.fill {
            let mut left = false;
            let mut classes = Vec::with_capacity(row.len());
            for (c, &b) in row.iter().enumerate() {
                classes.push(match (b, above[c], left) {
                    (true, _, _) => CellClass::One,
                    (false, false, false) => CellClass::PlainZero,
                    (false, true, false) => CellClass::RowRestrictedZero,
                    (false, false, true) => CellClass::ColumnRestrictedZero,
                    (false, true, true) => CellClass::BothRestrictedZero,
                });
                if b {
                    left = true;
                    above[c] = true;
                }
            }
            out.push(classes);
        }
        out
    }

    pub fn row_column_statistics(&self) -> RowColStats {
        let classes = self.classify_cells();
        let mut col_restricted = vec![false; self.shape.num_cols()];
        let mut restricted_rows = BTreeSet::new();
        let mut unrestricted_rows = BTreeSet::new();
        for (r, row) in classes.iter().enumerate() {
            let mut row_restricted = false;
            for (c, class) in row.iter().enumerate() {
                row_restricted |= class.is_row_restricted();
                col_restricted[c] |= class.is_column_restricted();
            }
            let label = self.shape.rows()[r];
            if row_restricted {
                restricted_rows.insert(label);
            } else {
                unrestricted_rows.insert(label);
            }
        }
        let (rc, urc): (Vec<_>, Vec<_>) = self
            .shape
            .cols()
            .iter()
            .zip(&col_restricted)
            .partition(|(_, &restricted)| restricted);
        let topone = self
            .fill
            .first()
            .map_or(0, |row| row.iter().filter(|&&b| b).count());
        RowColStats {
            restricted_rows,
            unrestricted_rows,
            restricted_cols: rc.into_iter().map(|(&l, _)| l).collect(),
            unrestricted_cols: urc.into_iter().map(|(&l, _)| l).collect(),
            topone,
            wt: self.ones() - self.shape.num_cols(),
        }
    }

    /// `(-1)^urc`.
    pub fn sign(&self) -> i64 {
        if self.row_column_statistics().urc() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Row-major bit string, the key of the enumeration order within a shape.
    pub fn bits(&self) -> Vec<bool> {
        self.fill.iter().flatten().copied().collect()
    }
}

/// All permutation tableaux of the given shape, in increasing order of
/// their row-major bit strings.
pub fn tableaux_of_shape(shape: &Shape) -> Vec<Tableau> {
    let sizes = shape.row_sizes();
    let cols = shape.num_cols();
    if cols > 0 && shape.col_len(cols - 1) == 0 {
        return Vec::new();
    }
    // last display row of each column
    let bottom: Vec<usize> = (0..cols)
        .map(|c| shape.col_len(c).wrapping_sub(1))
        .collect();

    struct Search<'a> {
        shape: &'a Shape,
        sizes: &'a [usize],
        bottom: &'a [usize],
        fill: Vec<Vec<bool>>,
        col_has_one: Vec<bool>,
        out: Vec<Tableau>,
    }

    impl Search<'_> {
        fn go(&mut self, r: usize, c: usize, left: bool) {
            if r == self.sizes.len() {
                self.out.push(Tableau {
                    shape: self.shape.clone(),
                    fill: self.fill.clone(),
                });
                return;
            }
            if c == self.sizes[r] {
                return self.go(r + 1, 0, false);
            }
            let above = self.col_has_one[c];
            let zero_ok = !(above && left) && (above || self.bottom[c] != r);
            if zero_ok {
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

    let mut search = Search {
        shape,
        sizes: &sizes,
        bottom: &bottom,
        fill: sizes.iter().map(|&s| vec![false; s]).collect(),
        col_has_one: vec![false; cols],
        out: Vec::new(),
    };
    search.go(0, 0, false);
    search.out
}

/// Iterator over all permutation tableaux of length `n`: shapes in the order
/// of [`shapes_of_length`], fillings in row-major binary order within a shape.
pub fn enumerate_tableaux(n: u32) -> impl Iterator<Item = Tableau> {
    shapes_of_length(n)
        .into_iter()
        .flat_map(|shape| tableaux_of_shape(&shape))
}
