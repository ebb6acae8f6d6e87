//! Variables `x[i][j]` of the generic symmetric matrix.

use std::fmt;

/// Position of a variable relative to the band structure used by the term
/// order: the diagonal D, the band set U (the second off-diagonal plus the
/// two corner entries `x[1][2]` and `x[n-1][n]`), and everything else.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VarClass {
    Diagonal,
    Band,
    Other,
}

/// A matrix entry `x[i][j]`, stored with row <= col; `x[j][i]` is identified
/// with `x[i][j]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Variable {
    row: u8,
    col: u8,
}

impl Variable {
    pub fn new(i: usize, j: usize) -> Self {
        let (r, c) = if i <= j { (i, j) } else { (j, i) };
        assert!(
            r >= 1 && c <= u8::MAX as usize,
            "index out of range: ({i},{j})"
        );
        Variable {
            row: r as u8,
            col: c as u8,
        }
    }

    pub fn row(&self) -> usize {
        self.row as usize
    }

    pub fn col(&self) -> usize {
        self.col as usize
    }

    pub fn is_diagonal(&self) -> bool {
        self.row == self.col
    }

    /// Class of this variable inside the n x n matrix.
    pub fn class_in(&self, n: usize) -> VarClass {
        let (r, c) = (self.row(), self.col());
        debug_assert!(c <= n);
        if r == c {
            VarClass::Diagonal
        } else if c == r + 2 || (r, c) == (1, 2) || (r, c) == (n - 1, n) {
            VarClass::Band
        } else {
            VarClass::Other
        }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x[{}][{}]", self.row, self.col)
    }
}

impl fmt::Debug for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x[{}][{}]", self.row, self.col)
    }
}
