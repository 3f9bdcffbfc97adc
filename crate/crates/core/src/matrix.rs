use std::fmt;

use crate::circular_ones::Permutation;
use crate::error::{Error, Result};

/// Dense row-major 0/1 matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    bits: Vec<bool>,
}

impl BinaryMatrix {
    pub fn new(rows: usize, cols: usize, bits: Vec<bool>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMatrix { rows, cols });
        }
        if bits.len() != rows * cols {
            return Err(Error::RaggedMatrix);
        }
        Ok(Self { rows, cols, bits })
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        Self::new(rows, cols, vec![false; rows * cols])
    }

    /// Builds a matrix from rows written as `"0110"` strings.
    pub fn from_strs(rows: &[&str]) -> Result<Self> {
        let parsed: Vec<Vec<bool>> = rows
            .iter()
            .map(|r| {
                r.chars()
                    .filter(|c| !c.is_whitespace())
                    .map(|c| match c {
                        '0' => Ok(false),
                        '1' => Ok(true),
                        other => Err(Error::Parse(format!("unexpected matrix symbol `{other}`"))),
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        Self::from_rows(&parsed)
    }

    pub fn from_rows(rows: &[Vec<bool>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::RaggedMatrix);
        }
        Self::new(rows.len(), cols, rows.concat())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.bits[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.bits[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[bool] {
        &self.bits[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_full_row(&self, r: usize) -> bool {
        self.row(r).iter().all(|&b| b)
    }

    pub fn is_zero_row(&self, r: usize) -> bool {
        self.row(r).iter().all(|&b| !b)
    }

    pub fn transpose(&self) -> Self {
        let mut bits = Vec::with_capacity(self.bits.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                bits.push(self.get(r, c));
            }
        }
        Self { rows: self.cols, cols: self.rows, bits }
    }

    /// Column `k` of the result is column `order[k]` of `self`.
    pub fn permute_columns(&self, order: &Permutation) -> Self {
        assert_eq!(order.len(), self.cols, "column permutation length");
        let mut bits = Vec::with_capacity(self.bits.len());
        for r in 0..self.rows {
            let row = self.row(r);
            bits.extend(order.as_slice().iter().map(|&c| row[c]));
        }
        Self { rows: self.rows, cols: self.cols, bits }
    }

    /// Row `k` of the result is row `rows[k]` of `self`; rows may repeat or be omitted.
    pub fn select_rows(&self, rows: &[usize]) -> Result<Self> {
        let mut bits = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            bits.extend_from_slice(self.row(r));
        }
        Self::new(rows.len(), self.cols, bits)
    }

    pub fn to_rows(&self) -> Vec<Vec<bool>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn row_string(&self, r: usize) -> String {
        self.row(r).iter().map(|&b| if b { '1' } else { '0' }).collect()
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinaryMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {}", self.row_string(r))?;
        }
        Ok(())
    }
}

impl fmt::Display for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            if r > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", self.row_string(r))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transpose_roundtrip() {
        let m = BinaryMatrix::from_strs(&["110", "011"]).unwrap();
        let t = m.transpose();
        assert_eq!(t.rows(), 3);
        assert_eq!(t.row_string(0), "10");
        assert_eq!(t.transpose(), m);
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(BinaryMatrix::from_strs(&["10", "1"]).is_err());
        assert!(BinaryMatrix::from_rows(&[]).is_err());
        assert!(BinaryMatrix::from_strs(&["12"]).is_err());
    }

    #[test]
    fn permutes_columns() {
        let m = BinaryMatrix::from_strs(&["1010"]).unwrap();
        let p = Permutation::new(vec![0, 2, 1, 3]).unwrap();
        assert_eq!(m.permute_columns(&p).row_string(0), "1100");
    }
}
