//! Labeled Ferrers diagrams.
//!
//! The south-east border of a diagram is walked from north-east to
//! south-west and its steps are labeled in increasing order. A south step
//! names a row, a west step names a column. Rows are displayed top to bottom
//! in increasing label order and columns left to right in decreasing label
//! order, so the cell `(i, j)` exists exactly when `i < j`.
//!
//! Labels are data rather than positions: a shape may carry any increasing
//! subset of `1..=n` (the diagrams obtained by deleting empty rows and
//! columns keep their original labels). A *standard* shape uses every label
//! of `1..=n` exactly once and is in bijection with its border word.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    South,
    West,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape {
    n: u32,
    rows: Vec<u32>,
    cols: Vec<u32>,
}

impl Shape {
    /// The standard shape of length `n` whose west steps are `cols`.
    ///
    /// Label 1 may never be a column: it would be the topmost step of the
    /// border and its column would contain no cell.
    pub fn from_column_labels(n: u32, cols: &[u32]) -> Result<Shape> {
        let mut is_col = vec![false; n as usize + 1];
        for &c in cols {
            if c == 0 || c > n {
                return Err(Error::LabelOutOfRange { label: c, n });
            }
            if c == 1 {
                return Err(Error::ColumnOne);
            }
            if is_col[c as usize] {
                return Err(Error::DuplicateLabel(c));
            }
            is_col[c as usize] = true;
        }
        let rows = (1..=n).filter(|&l| !is_col[l as usize]).collect();
        let mut cols: Vec<u32> = cols.to_vec();
        cols.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Shape { n, rows, cols })
    }

    /// The standard shape with the given border word (step `i` carries label `i + 1`).
    pub fn from_border(border: &[Step]) -> Result<Shape> {
        let cols: Vec<u32> = border
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == Step::West)
            .map(|(i, _)| i as u32 + 1)
            .collect();
        Shape::from_column_labels(border.len() as u32, &cols)
    }

    /// A shape with arbitrary disjoint labels drawn from `1..=n`.
    ///
    /// Columns without cells are permitted here; callers that need a
    /// permutation-tableau shape check that themselves.
    pub fn from_labels(n: u32, rows: &[u32], cols: &[u32]) -> Result<Shape> {
        let mut rows = rows.to_vec();
        let mut cols = cols.to_vec();
        rows.sort_unstable();
        cols.sort_unstable();
        let mut all: Vec<u32> = rows.iter().chain(cols.iter()).copied().collect();
        all.sort_unstable();
        for w in all.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateLabel(w[0]));
            }
        }
        if let Some(&l) = all.iter().find(|&&l| l == 0 || l > n) {
            return Err(Error::LabelOutOfRange { label: l, n });
        }
        cols.reverse();
        Ok(Shape { n, rows, cols })
    }

    pub fn empty() -> Shape {
        Shape {
            n: 0,
            rows: Vec::new(),
            cols: Vec::new(),
        }
    }

    /// Upper bound of the label range.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of border steps, i.e. rows plus columns.
    pub fn length(&self) -> usize {
        self.rows.len() + self.cols.len()
    }

    /// True when the labels are exactly `1..=n`.
    pub fn is_standard(&self) -> bool {
        self.length() == self.n as usize
    }

    /// Row labels, top to bottom (increasing).
    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    /// Column labels, left to right (decreasing).
    pub fn cols(&self) -> &[u32] {
        &self.cols
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols.len()
    }

    pub fn is_row(&self, label: u32) -> bool {
        self.rows.binary_search(&label).is_ok()
    }

    pub fn is_col(&self, label: u32) -> bool {
        self.cols.binary_search_by(|c| label.cmp(c)).is_ok()
    }

    pub fn row_index(&self, label: u32) -> Option<usize> {
        self.rows.binary_search(&label).ok()
    }

    pub fn col_index(&self, label: u32) -> Option<usize> {
        self.cols.binary_search_by(|c| label.cmp(c)).ok()
    }

    /// Number of cells in the row at display index `r`.
    pub fn row_len(&self, r: usize) -> usize {
        let label = self.rows[r];
        self.cols.iter().take_while(|&&c| c > label).count()
    }

    /// Number of cells in the column at display index `c`.
    pub fn col_len(&self, c: usize) -> usize {
        let label = self.cols[c];
        self.rows.iter().take_while(|&&r| r < label).count()
    }

    /// Row sizes top to bottom; weakly decreasing, trailing zeros included.
    pub fn row_sizes(&self) -> Vec<usize> {
        (0..self.rows.len()).map(|r| self.row_len(r)).collect()
    }

    pub fn num_cells(&self) -> usize {
        self.row_sizes().iter().sum()
    }

    pub fn has_cell(&self, row: u32, col: u32) -> bool {
        row < col && self.is_row(row) && self.is_col(col)
    }

    /// The border word, one step per label in increasing label order.
    /// Only meaningful for standard shapes.
    pub fn border(&self) -> Vec<Step> {
        let mut labels: Vec<(u32, Step)> = self
            .rows
            .iter()
            .map(|&r| (r, Step::South))
            .chain(self.cols.iter().map(|&c| (c, Step::West)))
            .collect();
        labels.sort_unstable();
        labels.into_iter().map(|(_, s)| s).collect()
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.border() {
            f.write_str(match s {
                Step::South => "S",
                Step::West => "W",
            })?;
        }
        Ok(())
    }
}

/// Standard shapes of length `n` in lexicographic order of their
/// increasing column-label lists (the empty list first).
pub fn shapes_of_length(n: u32) -> Vec<Shape> {
    fn rec(n: u32, next: u32, current: &mut Vec<u32>, out: &mut Vec<Shape>) {
        out.push(Shape::from_column_labels(n, current).expect("labels in range"));
        for c in next..=n {
            current.push(c);
            rec(n, c + 1, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, 2, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sample_labeling() {
        let s = Shape::from_column_labels(12, &[11, 9, 6, 5, 3]).unwrap();
        assert_eq!(s.rows(), &[1, 2, 4, 7, 8, 10, 12]);
        assert_eq!(s.cols(), &[11, 9, 6, 5, 3]);
        assert_eq!(s.row_sizes(), vec![5, 5, 4, 2, 2, 1, 0]);
        assert_eq!(s.length(), 12);
        assert!(s.has_cell(4, 5));
        assert!(!s.has_cell(7, 6));
    }

    #[test]
    fn tiny_shapes() {
        let s = Shape::from_column_labels(1, &[]).unwrap();
        assert_eq!(s.rows(), &[1]);
        assert_eq!(s.row_sizes(), vec![0]);

        let s = Shape::from_column_labels(2, &[2]).unwrap();
        assert_eq!(s.rows(), &[1]);
        assert_eq!(s.row_sizes(), vec![1]);
    }

    #[test]
    fn rejects_bad_columns() {
        assert_eq!(Shape::from_column_labels(3, &[1]), Err(Error::ColumnOne));
        assert_eq!(
            Shape::from_column_labels(3, &[4]),
            Err(Error::LabelOutOfRange { label: 4, n: 3 })
        );
        assert_eq!(
            Shape::from_column_labels(3, &[2, 2]),
            Err(Error::DuplicateLabel(2))
        );
        assert!(Shape::from_labels(5, &[1, 2], &[2, 5]).is_err());
    }

    #[test]
    fn border_round_trip() {
        for s in shapes_of_length(6) {
            assert_eq!(Shape::from_border(&s.border()).unwrap(), s);
        }
    }

    #[test]
    fn shape_count_and_order() {
        let shapes = shapes_of_length(4);
        assert_eq!(shapes.len(), 8);
        let lists: Vec<Vec<u32>> = shapes
            .iter()
            .map(|s| s.cols().iter().rev().copied().collect())
            .collect();
        assert_eq!(
            lists,
            vec![
                vec![],
                vec![2],
                vec![2, 3],
                vec![2, 3, 4],
                vec![2, 4],
                vec![3],
                vec![3, 4],
                vec![4]
            ]
        );
        assert_eq!(shapes_of_length(0), vec![Shape::empty()]);
    }

    #[test]
    fn column_lengths_follow_labels() {
        let s = Shape::from_column_labels(12, &[11, 9, 6, 5, 3]).unwrap();
        let lens: Vec<usize> = (0..s.num_cols()).map(|c| s.col_len(c)).collect();
        assert_eq!(lens, vec![6, 5, 3, 3, 2]);
    }
}
