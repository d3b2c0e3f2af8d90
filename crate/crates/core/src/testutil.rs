use crate::shape::Shape;
use crate::tableau::Tableau;
use crate::typeb::{BTableau, ShiftedShape};

fn bits(rows: &[&[u8]]) -> Vec<Vec<bool>> {
    rows.iter()
        .map(|r| r.iter().map(|&b| b == 1).collect())
        .collect()
}

/// Length-12 tableau with columns 11, 9, 6, 5, 3.
pub fn sample_tableau() -> Tableau {
    let shape = Shape::from_column_labels(12, &[11, 9, 6, 5, 3]).unwrap();
    let fill = bits(&[
        &[0, 1, 0, 0, 1],
        &[0, 0, 1, 0, 1],
        &[1, 1, 1, 1],
        &[0, 1],
        &[0, 1],
        &[1],
        &[],
    ]);
    Tableau::new(shape, fill).unwrap()
}

/// Length-8 type-B tableau with base columns 8, 6, 3, 2.
pub fn sample_btableau() -> BTableau {
    let shape = ShiftedShape::from_column_labels(8, &[8, 6, 3, 2]).unwrap();
    let fill = bits(&[
        &[0],
        &[1, 1],
        &[0, 0, 0],
        &[0, 1, 0, 1],
        &[1, 1, 1, 1],
        &[0, 1],
        &[0, 0],
        &[1],
    ]);
    BTableau::new(shape, fill).unwrap()
}

pub fn perm(word: &[u32]) -> crate::perm::Perm {
    crate::perm::Perm::new(word.to_vec()).unwrap()
}
