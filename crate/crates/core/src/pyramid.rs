//! Partitions, centered pyramids and the weight function on boxes.
//!
//! Boxes are labelled `1..=N`, row by row starting with the bottom row
//! (row 1, the longest), left to right inside a row. Columns are labelled
//! `1..=λ_1` from the left edge of the bottom row; a row of length `λ_i`
//! starts in column `(λ_1 - λ_i)/2 + 1`, which is a half-integer when the
//! parities of `λ_1` and `λ_i` differ.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{parse_q, qfrac, Q};

/// A half-integer stored as twice its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Half(pub i32);

impl Half {
    pub const ZERO: Half = Half(0);

    pub fn int(n: i32) -> Half {
        Half(2 * n)
    }

    pub fn from_doubled(d: i32) -> Half {
        Half(d)
    }

    pub fn doubled(self) -> i32 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// The integer value, if there is one.
    pub fn to_int(self) -> Option<i32> {
        self.is_integer().then_some(self.0 / 2)
    }

    /// Parses `"3"`, `"5/2"` or `"-3/2"`; `None` unless the value is a
    /// multiple of one half.
    pub fn parse(s: &str) -> Option<Half> {
        let x = parse_q(s)?;
        let d = x * qfrac(2, 1);
        d.is_integer().then(|| d.to_integer().try_into().ok().map(Half)).flatten()
    }

    pub fn to_q(self) -> Q {
        qfrac(self.0 as i64, 2)
    }

    /// Decimal form used by the pyramid renderer (`4.5`).
    pub fn decimal(self) -> String {
        if self.is_integer() {
            (self.0 / 2).to_string()
        } else {
            format!("{}.5", if self.0 < 0 { format!("-{}", (-self.0) / 2) } else { (self.0 / 2).to_string() })
        }
    }
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl Add for Half {
    type Output = Half;
    fn add(self, o: Half) -> Half {
        Half(self.0 + o.0)
    }
}

impl Sub for Half {
    type Output = Half;
    fn sub(self, o: Half) -> Half {
        Half(self.0 - o.0)
    }
}

impl Neg for Half {
    type Output = Half;
    fn neg(self) -> Half {
        Half(-self.0)
    }
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Partition> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("empty partition".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Parses a comma separated list such as `6,3,3,2`.
    pub fn parse(s: &str) -> Result<Partition> {
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::InvalidPartition(format!("{s:?}: {e}")))?;
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i`, 1-based.
    pub fn part(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn largest(&self) -> usize {
        self.0[0]
    }

    pub fn same_parity(&self) -> bool {
        self.0.iter().all(|p| p % 2 == self.0[0] % 2)
    }

    /// Distinct part sizes in decreasing order.
    pub fn distinct_parts(&self) -> Vec<usize> {
        let mut d = self.0.clone();
        d.dedup();
        d
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Cell {
    row: usize,
    col: Half,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxJson {
    #[serde(rename = "box")]
    pub label: usize,
    pub row: usize,
    pub col: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PyramidJson {
    pub partition: Vec<usize>,
    pub boxes: Vec<BoxJson>,
}

/// The centered pyramid of a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pyramid {
    lambda: Partition,
    cells: Vec<Cell>,
    row_first: Vec<usize>,
}

impl Pyramid {
    pub fn new(lambda: Partition) -> Pyramid {
        let l1 = lambda.largest() as i32;
        let mut cells = Vec::with_capacity(lambda.size());
        let mut row_first = Vec::with_capacity(lambda.len());
        for (i, &li) in lambda.parts().iter().enumerate() {
            row_first.push(cells.len() + 1);
            // leftmost column (λ_1 - λ_i)/2 + 1, doubled
            let left = (l1 - li as i32) + 2;
            for s in 0..li as i32 {
                cells.push(Cell { row: i + 1, col: Half(left + 2 * s) });
            }
        }
        Pyramid { lambda, cells, row_first }
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    /// Number of boxes `N`.
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn n_rows(&self) -> usize {
        self.lambda.len()
    }

    pub fn lambda1(&self) -> usize {
        self.lambda.largest()
    }

    pub fn row_len(&self, i: usize) -> usize {
        self.lambda.part(i)
    }

    pub fn check_box(&self, a: usize) -> Result<()> {
        if a == 0 || a > self.len() {
            Err(Error::BoxOutOfRange(a, self.len()))
        } else {
            Ok(())
        }
    }

    pub fn row(&self, a: usize) -> usize {
        self.cells[a - 1].row
    }

    pub fn col(&self, a: usize) -> Half {
        self.cells[a - 1].col
    }

    /// Column of the leftmost box of row `i`.
    pub fn row_start(&self, i: usize) -> Half {
        self.col(self.row_first[i - 1])
    }

    /// Position of box `a` inside its row, starting at 0 (the exponent `s`
    /// of `f^s w_i`).
    pub fn offset(&self, a: usize) -> usize {
        a - self.row_first[self.row(a) - 1]
    }

    /// The box `f^s w_i`.
    pub fn box_at(&self, i: usize, s: usize) -> Option<usize> {
        (i >= 1 && i <= self.n_rows() && s < self.row_len(i)).then(|| self.row_first[i - 1] + s)
    }

    /// The box in row `i` and column `col`, if any.
    pub fn box_in_column(&self, i: usize, col: Half) -> Option<usize> {
        let d = col.0 - self.row_start(i).0;
        if d < 0 || d % 2 != 0 {
            return None;
        }
        self.box_at(i, (d / 2) as usize)
    }

    pub fn boxes(&self) -> impl Iterator<Item = usize> + '_ {
        1..=self.len()
    }

    pub fn row_boxes(&self, i: usize) -> impl Iterator<Item = usize> {
        let first = self.row_first[i - 1];
        first..first + self.row_len(i)
    }

    /// `δ(e_a) = (λ_1 + 1)/2 - col(a)`.
    pub fn delta_vector(&self, a: usize) -> Result<Half> {
        self.check_box(a)?;
        Ok(Half(self.lambda1() as i32 + 1) - self.col(a))
    }

    /// `δ(e_{a,b}) = col(b) - col(a)`.
    pub fn delta_unit(&self, a: usize, b: usize) -> Result<Half> {
        self.check_box(a)?;
        self.check_box(b)?;
        Ok(self.col(b) - self.col(a))
    }

    /// The window `(s_k, e_k, r_k)` of columns whose weights lie in `[-k, k]`.
    pub fn truncation_bounds(&self, k: Half) -> Result<(Half, Half, Half)> {
        let top = Half(self.lambda1() as i32 - 1);
        if k.0 < 0 || k.0 > top.0 {
            return Err(Error::WeightOutOfRange(k.to_string(), top.to_string()));
        }
        let mid = Half(self.lambda1() as i32 + 1);
        Ok((mid - k, mid + k, Half(2 * k.0 + 2)))
    }

    /// Boxes with their rows and columns, in label order.
    pub fn to_json(&self) -> PyramidJson {
        PyramidJson {
            partition: self.lambda.parts().to_vec(),
            boxes: self.boxes().map(|a| BoxJson { label: a, row: self.row(a), col: self.col(a).to_string() }).collect(),
        }
    }

    /// ASCII drawing with row 1 at the bottom and column labels underneath.
    pub fn render(&self) -> String {
        let width = self.lambda1() * 4;
        let mut out = String::new();
        for i in (1..=self.n_rows()).rev() {
            let mut line = vec![' '; width];
            for a in self.row_boxes(i) {
                let x = ((self.col(a).0 - 2) * 2) as usize;
                let cellstr = format!("[{a:>2}]");
                for (k, ch) in cellstr.chars().enumerate() {
                    if x + k < line.len() {
                        line[x + k] = ch;
                    } else {
                        line.push(ch);
                    }
                }
            }
            out.push_str(line.iter().collect::<String>().trim_end());
            out.push('\n');
        }
        let mut cols: Vec<Half> = self.cells.iter().map(|c| c.col).collect();
        cols.sort();
        cols.dedup();
        for integral in [true, false] {
            let sel: Vec<Half> = cols.iter().copied().filter(|c| c.is_integer() == integral).collect();
            if sel.is_empty() {
                continue;
            }
            let mut line = vec![' '; width + 4];
            for c in sel {
                let label = c.decimal();
                let x = ((c.0 - 2) * 2) as usize + 1;
                for (k, ch) in label.chars().enumerate() {
                    if x + k < line.len() {
                        line[x + k] = ch;
                    }
                }
            }
            out.push_str(line.iter().collect::<String>().trim_end());
            out.push('\n');
        }
        out
    }
}
