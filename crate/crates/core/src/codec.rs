//! Canonical JSON encodings. Output is compact with a fixed key order, so
//! equal objects serialize to identical bytes.
//!
//! The decoders accept untrusted input: every length they allocate for is
//! bounded by the size of the input itself.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::shape::Shape;
use crate::tableau::Tableau;
use crate::typeb::{BTableau, ShiftedShape, SymTableau};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableauWire {
    n: u32,
    cols: Vec<u32>,
    rows: Vec<u32>,
    fill: Vec<Vec<u8>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PermWire {
    perm: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BTableauWire {
    n: u32,
    k: usize,
    base_cols: Vec<u32>,
    pos_rows: Vec<u32>,
    fill: Vec<Vec<u8>>,
}

#[derive(Serialize)]
struct ShapeWire<'a> {
    n: u32,
    cols: &'a [u32],
    rows: &'a [u32],
    row_sizes: Vec<usize>,
}

#[derive(Serialize)]
struct SymWire {
    ts: TableauWire,
    ta: TableauWire,
    s: Vec<u32>,
}

fn encode_bits(fill: &[Vec<bool>]) -> Vec<Vec<u8>> {
    fill.iter()
        .map(|r| r.iter().map(|&b| b as u8).collect())
        .collect()
}

fn decode_bits(fill: Vec<Vec<u8>>) -> Result<Vec<Vec<bool>>> {
    fill.into_iter()
        .map(|row| {
            row.into_iter()
                .map(|b| match b {
                    0 => Ok(false),
                    1 => Ok(true),
                    _ => Err(Error::Parse(format!("cell value {b} is not 0 or 1"))),
                })
                .collect()
        })
        .collect()
}

fn strictly_monotone(v: &[u32], increasing: bool, what: &str) -> Result<()> {
    let ok = v
        .windows(2)
        .all(|w| if increasing { w[0] < w[1] } else { w[0] > w[1] });
    if ok {
        Ok(())
    } else {
        let order = if increasing {
            "increasing"
        } else {
            "decreasing"
        };
        Err(Error::Parse(format!("{what} must be strictly {order}")))
    }
}

fn to_string<T: Serialize>(wire: &T) -> String {
    serde_json::to_string(wire).expect("plain data serializes")
}

fn tableau_wire(t: &Tableau) -> TableauWire {
    TableauWire {
        n: t.n(),
        cols: t.shape().cols().to_vec(),
        rows: t.shape().rows().to_vec(),
        fill: encode_bits(t.fill()),
    }
}

pub fn tableau_to_json(t: &Tableau) -> String {
    to_string(&tableau_wire(t))
}

pub fn tableau_to_value(t: &Tableau) -> Value {
    serde_json::to_value(tableau_wire(t)).expect("plain data serializes")
}

/// Decodes a tableau with labels drawn from `1..=n`. Row and column lists
/// must be in display order; validity of the filling is not checked.
pub fn parse_tableau(s: &str) -> Result<Tableau> {
    let w: TableauWire = serde_json::from_str(s)?;
    strictly_monotone(&w.cols, false, "cols")?;
    strictly_monotone(&w.rows, true, "rows")?;
    let shape = Shape::from_labels(w.n, &w.rows, &w.cols)?;
    Tableau::new(shape, decode_bits(w.fill)?)
}

pub fn perm_to_json(p: &Perm) -> String {
    to_string(&PermWire {
        perm: p.word().to_vec(),
    })
}

pub fn perm_to_value(p: &Perm) -> Value {
    serde_json::json!({ "perm": p.word() })
}

pub fn parse_perm(s: &str) -> Result<Perm> {
    let w: PermWire = serde_json::from_str(s)?;
    Perm::new(w.perm)
}

fn btableau_wire(t: &BTableau) -> BTableauWire {
    let shape = t.shape();
    BTableauWire {
        n: t.n(),
        k: shape.k(),
        base_cols: shape.base_cols().to_vec(),
        pos_rows: shape.pos_rows().to_vec(),
        fill: encode_bits(t.fill()),
    }
}

pub fn btableau_to_json(t: &BTableau) -> String {
    to_string(&btableau_wire(t))
}

pub fn btableau_to_value(t: &BTableau) -> Value {
    serde_json::to_value(btableau_wire(t)).expect("plain data serializes")
}

/// Decodes a type-B tableau; validity of the filling is not checked.
pub fn parse_btableau(s: &str) -> Result<BTableau> {
    let w: BTableauWire = serde_json::from_str(s)?;
    if w.k != w.base_cols.len() {
        return Err(Error::Parse(format!(
            "k = {} but {} base columns",
            w.k,
            w.base_cols.len()
        )));
    }
    if w.base_cols.len() + w.pos_rows.len() != w.n as usize {
        return Err(Error::IncompleteLabels(w.n));
    }
    strictly_monotone(&w.base_cols, false, "base_cols")?;
    strictly_monotone(&w.pos_rows, true, "pos_rows")?;
    let shape = ShiftedShape::from_column_labels(w.n, &w.base_cols)?;
    if shape.pos_rows() != w.pos_rows.as_slice() {
        return Err(Error::IncompleteLabels(w.n));
    }
    BTableau::new(shape, decode_bits(w.fill)?)
}

pub fn shape_to_json(s: &Shape) -> String {
    to_string(&ShapeWire {
        n: s.n(),
        cols: s.cols(),
        rows: s.rows(),
        row_sizes: s.row_sizes(),
    })
}

pub fn sym_to_json(s: &SymTableau) -> String {
    to_string(&SymWire {
        ts: tableau_wire(&s.ts),
        ta: tableau_wire(&s.ta),
        s: s.removed.clone(),
    })
}
