use std::collections::{BTreeMap, HashMap};

use super::{d_bot, is_reduced_pipe_dream, min_plus, PipeError, PlusDiagram};
use crate::perm::{Cell, Permutation};

/// A reduced pipe dream of a biGrassmannian permutation with its `+`'s
/// numbered `1..=len`. `positions[a - 1]` is the cell of `+_a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledDiagram {
    pub base: PlusDiagram,
    positions: Vec<Cell>,
}

impl LabeledDiagram {
    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// Cell of `+_a`, 1-based.
    pub fn position(&self, a: usize) -> Cell {
        self.positions[a - 1]
    }

    pub fn positions(&self) -> &[Cell] {
        &self.positions
    }

    pub fn label_at(&self, cell: Cell) -> Option<usize> {
        self.positions
            .iter()
            .position(|&c| c == cell)
            .map(|k| k + 1)
    }

    /// Moves `+_a` to `to`, keeping all other labels in place.
    pub fn with_label_moved(&self, a: usize, to: Cell) -> LabeledDiagram {
        let mut positions = self.positions.clone();
        let from = positions[a - 1];
        positions[a - 1] = to;
        LabeledDiagram {
            base: self.base.with_moved(from, to),
            positions,
        }
    }

    /// Rebuilds a labeled diagram from explicit positions.
    pub fn from_positions(n: usize, positions: Vec<Cell>) -> Result<LabeledDiagram, PipeError> {
        let base = PlusDiagram::from_cells(n, positions.iter().copied())?;
        Ok(LabeledDiagram { base, positions })
    }
}

fn bottom_labels(u: &Permutation) -> Vec<Cell> {
    let mut cells: Vec<Cell> = d_bot(u).cells().collect();
    cells.sort_by_key(|c| (std::cmp::Reverse(c.row as isize - c.col as isize), c.row));
    cells
}

/// Labels a reduced pipe dream of the biGrassmannian `u` by transporting the
/// diagonal order on the bottom diagram. Local moves never let two `+`'s on
/// one antidiagonal pass each other, so on every antidiagonal the labels
/// appear in the same southwest-to-northeast order as in the bottom diagram.
pub fn diagonal_order_labels(
    u: &Permutation,
    p: &PlusDiagram,
) -> Result<LabeledDiagram, PipeError> {
    if !u.is_bigrassmannian() || !is_reduced_pipe_dream(p, u) {
        return Err(PipeError::NotReduced(u.clone()));
    }
    let bottom = bottom_labels(u);
    let mut by_antidiagonal: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (k, c) in bottom.iter().enumerate() {
        by_antidiagonal
            .entry(c.antidiagonal())
            .or_default()
            .push(k + 1);
    }
    let mut cells_on: BTreeMap<usize, Vec<Cell>> = BTreeMap::new();
    for c in p.cells() {
        cells_on.entry(c.antidiagonal()).or_default().push(c);
    }
    let mut positions = vec![Cell::new(0, 0); bottom.len()];
    for (d, labels) in &by_antidiagonal {
        let mut cells = cells_on.remove(d).unwrap_or_default();
        if cells.len() != labels.len() {
            return Err(PipeError::NotReduced(u.clone()));
        }
        cells.sort_by_key(|c| std::cmp::Reverse(c.row));
        for (&a, c) in labels.iter().zip(cells) {
            positions[a - 1] = c;
        }
    }
    if !cells_on.is_empty() {
        return Err(PipeError::NotReduced(u.clone()));
    }
    Ok(LabeledDiagram {
        base: *p,
        positions,
    })
}

/// All reduced pipe dreams of one biGrassmannian permutation, labeled, with
/// a lookup from diagram to index.
#[derive(Debug, Clone)]
pub struct LabeledFamily {
    pub u: Permutation,
    pub members: Vec<LabeledDiagram>,
    index: HashMap<PlusDiagram, usize>,
}

impl LabeledFamily {
    pub fn new(u: &Permutation) -> Result<LabeledFamily, PipeError> {
        let members = min_plus(u)
            .iter()
            .map(|p| diagonal_order_labels(u, p))
            .collect::<Result<Vec<_>, _>>()?;
        let index = members
            .iter()
            .enumerate()
            .map(|(k, m)| (m.base, k))
            .collect();
        Ok(LabeledFamily {
            u: u.clone(),
            members,
            index,
        })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn index_of(&self, p: &PlusDiagram) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn get(&self, p: &PlusDiagram) -> Option<&LabeledDiagram> {
        self.index_of(p).map(|k| &self.members[k])
    }

    pub fn contains(&self, p: &PlusDiagram) -> bool {
        self.index.contains_key(p)
    }

    pub fn bottom(&self) -> LabeledDiagram {
        let base = d_bot(&self.u);
        self.get(&base)
            .cloned()
            .expect("the bottom diagram is reduced")
    }
}
