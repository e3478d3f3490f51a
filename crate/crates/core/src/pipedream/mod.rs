//! Plus diagrams (pipe dreams) in the `n x n` grid.

mod hitting;
mod labels;
mod moves;

pub use hitting::{
    essential_antidiagonals, is_plus_diagram, min_plus_by_hitting_sets, minimal_hitting_sets,
};
pub use labels::{diagonal_order_labels, LabeledDiagram, LabeledFamily};
pub use moves::{
    chute_jumps, chute_moves, ladder_jumps, ladder_moves, local_moves, local_target, min_plus,
    Direction, Jump, LocalMove,
};

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::perm::{Cell, Permutation};
use crate::poly::Monomial;

/// Largest supported grid side; cells are packed into a `u64`.
pub const MAX_GRID: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipeError {
    #[error("grid size {0} exceeds the supported maximum of {MAX_GRID}")]
    GridTooLarge(usize),
    #[error("cell {cell} lies outside the {n}x{n} grid")]
    CellOutOfGrid { cell: Cell, n: usize },
    #[error("diagram is not a reduced pipe dream for {0}")]
    NotReduced(Permutation),
    #[error("diagram is not a plus diagram for {0}")]
    NotPlus(Permutation),
}

/// A set of `+` cells in an `n x n` grid, stored as a bitmask in row-major order.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PlusDiagram {
    n: u8,
    bits: u64,
}

impl PlusDiagram {
    pub fn empty(n: usize) -> Result<Self, PipeError> {
        if n > MAX_GRID {
            return Err(PipeError::GridTooLarge(n));
        }
        Ok(PlusDiagram {
            n: n as u8,
            bits: 0,
        })
    }

    pub fn from_cells<I: IntoIterator<Item = Cell>>(n: usize, cells: I) -> Result<Self, PipeError> {
        let mut d = Self::empty(n)?;
        for cell in cells {
            if cell.row == 0 || cell.col == 0 || cell.row > n || cell.col > n {
                return Err(PipeError::CellOutOfGrid { cell, n });
            }
            d.bits |= d.bit(cell);
        }
        Ok(d)
    }

    /// Convenience constructor from `(row, col)` pairs; panics on bad input.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Self {
        Self::from_cells(n, pairs.iter().map(|&(r, c)| Cell::new(r, c)))
            .expect("cells must fit the grid")
    }

    pub(crate) fn from_bits(n: usize, bits: u64) -> Self {
        PlusDiagram { n: n as u8, bits }
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub(crate) fn bit(&self, cell: Cell) -> u64 {
        1u64 << ((cell.row - 1) * self.n() + (cell.col - 1))
    }

    fn in_grid(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.row <= self.n() && cell.col <= self.n()
    }

    /// Cells outside the grid are reported as empty.
    pub fn contains(&self, cell: Cell) -> bool {
        self.in_grid(cell) && self.bits & self.bit(cell) != 0
    }

    pub fn insert(&mut self, cell: Cell) {
        assert!(
            self.in_grid(cell),
            "{cell} outside the {}x{} grid",
            self.n,
            self.n
        );
        self.bits |= self.bit(cell);
    }

    pub fn remove(&mut self, cell: Cell) {
        if self.in_grid(cell) {
            self.bits &= !self.bit(cell);
        }
    }

    pub fn with_moved(&self, from: Cell, to: Cell) -> Self {
        let mut d = *self;
        d.remove(from);
        d.insert(to);
        d
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        let n = self.n();
        let mut bits = self.bits;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let k = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(Cell::new(k / n + 1, k % n + 1))
        })
    }

    pub fn is_subset(&self, other: &PlusDiagram) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn union(&self, other: &PlusDiagram) -> PlusDiagram {
        debug_assert_eq!(self.n, other.n);
        PlusDiagram {
            n: self.n,
            bits: self.bits | other.bits,
        }
    }

    pub fn difference(&self, other: &PlusDiagram) -> PlusDiagram {
        PlusDiagram {
            n: self.n,
            bits: self.bits & !other.bits,
        }
    }

    /// The same cells in a larger (or equal) grid.
    pub fn resized(&self, n: usize) -> Result<PlusDiagram, PipeError> {
        Self::from_cells(n, self.cells())
    }

    /// Number of `+` in each row, indexed from row 1.
    pub fn row_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.n()];
        for c in self.cells() {
            counts[c.row - 1] += 1;
        }
        counts
    }

    /// `prod_i x_i^(number of + in row i)`.
    pub fn weight(&self) -> Monomial {
        Monomial::from_counts(self.row_counts())
    }

    /// `{"n": n, "cells": [[i, j], ...]}` in row-major order.
    pub fn to_json(&self) -> String {
        let cells: Vec<String> = self
            .cells()
            .map(|c| format!("[{},{}]", c.row, c.col))
            .collect();
        format!("{{\"n\":{},\"cells\":[{}]}}", self.n, cells.join(","))
    }

    /// One line per grid row with `+` and `.`, separated by spaces.
    pub fn render(&self) -> String {
        let n = self.n();
        let mut out = String::new();
        for r in 1..=n {
            let row: Vec<&str> = (1..=n)
                .map(|c| {
                    if self.contains(Cell::new(r, c)) {
                        "+"
                    } else {
                        "."
                    }
                })
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

impl Ord for PlusDiagram {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.cells().cmp(other.cells()))
    }
}

impl PartialOrd for PlusDiagram {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for PlusDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PlusDiagram(n={}, {{", self.n)?;
        for (k, c) in self.cells().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("})")
    }
}

impl fmt::Display for PlusDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Reading word: rows top to bottom, right to left within a row; the cell
/// `(i, j)` contributes the simple transposition `s_{i+j-1}`.
pub fn word_of(p: &PlusDiagram) -> Vec<usize> {
    let n = p.n();
    let mut word = Vec::with_capacity(p.len());
    for r in 1..=n {
        for c in (1..=n).rev() {
            if p.contains(Cell::new(r, c)) {
                word.push(r + c - 1);
            }
        }
    }
    word
}

/// Group product `s_{a_1} s_{a_2} ...` of a word, as a permutation.
pub fn product(word: &[usize]) -> Permutation {
    let size = word.iter().map(|&a| a + 1).max().unwrap_or(1);
    let mut window: Vec<usize> = (1..=size).collect();
    for &a in word {
        window.swap(a - 1, a);
    }
    Permutation::new(&window).expect("products of transpositions are permutations")
}

/// Whether the reading word of `p` is a reduced word for `w`.
pub fn is_reduced_pipe_dream(p: &PlusDiagram, w: &Permutation) -> bool {
    p.len() == w.length() && product(&word_of(p)) == *w
}

/// Row `i` carries `c_i` left-justified `+`'s, where `c` is the Lehmer code.
pub fn d_bot(w: &Permutation) -> PlusDiagram {
    let n = w.n();
    let cells = w
        .lehmer_code()
        .into_iter()
        .enumerate()
        .flat_map(|(r, len)| (1..=len).map(move |c| Cell::new(r + 1, c)));
    PlusDiagram::from_cells(n, cells).expect("the code diagram fits the permutation's grid")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn words_and_products() {
        let p = PlusDiagram::from_pairs(4, &[(1, 1), (2, 1)]);
        assert_eq!(word_of(&p), vec![1, 2]);
        assert_eq!(product(&word_of(&p)), perm("2314"));
        let q = PlusDiagram::from_pairs(4, &[(2, 1), (2, 2)]);
        assert_eq!(word_of(&q), vec![3, 2]);
        assert_eq!(product(&word_of(&q)), perm("1423"));
        assert!(product(&word_of(&PlusDiagram::empty(4).unwrap())).is_identity());
    }

    #[test]
    fn bottom_diagrams() {
        assert!(d_bot(&Permutation::identity(4)).is_empty());
        assert_eq!(
            d_bot(&perm("1423")),
            PlusDiagram::from_pairs(4, &[(2, 1), (2, 2)])
        );
        assert_eq!(
            d_bot(&perm("2314")),
            PlusDiagram::from_pairs(4, &[(1, 1), (2, 1)])
        );
    }

    #[test]
    fn weights() {
        assert!(PlusDiagram::empty(3).unwrap().weight().is_one());
        let p = PlusDiagram::from_pairs(4, &[(1, 1), (2, 1), (2, 2)]);
        assert_eq!(p.weight().to_string(), "x1*x2^2");
        let q = PlusDiagram::from_pairs(4, &[(1, 1), (1, 3), (2, 1)]);
        assert_eq!(q.weight().to_string(), "x1^2*x2");
    }

    #[test]
    fn grid_limits() {
        assert!(PlusDiagram::empty(9).is_err());
        assert!(PlusDiagram::from_cells(3, [Cell::new(4, 1)]).is_err());
    }

    #[test]
    fn ordering_is_by_sorted_cells() {
        let a = PlusDiagram::from_pairs(3, &[(1, 2)]);
        let b = PlusDiagram::from_pairs(3, &[(1, 1), (3, 3)]);
        assert!(b < a);
    }

    #[test]
    fn render_and_json() {
        let p = PlusDiagram::from_pairs(2, &[(1, 2)]);
        assert_eq!(p.render(), ". +\n. .\n");
        assert_eq!(p.to_json(), r#"{"n":2,"cells":[[1,2]]}"#);
    }
}
