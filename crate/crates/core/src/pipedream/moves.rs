use std::collections::{BTreeSet, VecDeque};

use super::{d_bot, PlusDiagram};
use crate::perm::{Cell, Permutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    SouthWest,
    NorthEast,
}

/// A single 2x2 move of one `+`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LocalMove {
    pub from: Cell,
    pub to: Cell,
    pub result: PlusDiagram,
}

/// Target of the 2x2 move of the `+` at `from`, if the move is allowed.
pub fn local_target(p: &PlusDiagram, from: Cell, dir: Direction) -> Option<Cell> {
    if !p.contains(from) {
        return None;
    }
    let n = p.n();
    let (r, c) = (from.row, from.col);
    let blockers = match dir {
        Direction::SouthWest => {
            if c < 2 || r + 1 > n {
                return None;
            }
            [
                Cell::new(r, c - 1),
                Cell::new(r + 1, c - 1),
                Cell::new(r + 1, c),
            ]
        }
        Direction::NorthEast => {
            if r < 2 || c + 1 > n {
                return None;
            }
            [
                Cell::new(r - 1, c),
                Cell::new(r - 1, c + 1),
                Cell::new(r, c + 1),
            ]
        }
    };
    if blockers.iter().any(|&b| p.contains(b)) {
        return None;
    }
    Some(match dir {
        Direction::SouthWest => Cell::new(r + 1, c - 1),
        Direction::NorthEast => Cell::new(r - 1, c + 1),
    })
}

/// Every applicable local move in the given direction.
pub fn local_moves(p: &PlusDiagram, dir: Direction) -> Vec<LocalMove> {
    p.cells()
        .filter_map(|from| {
            local_target(p, from, dir).map(|to| LocalMove {
                from,
                to,
                result: p.with_moved(from, to),
            })
        })
        .collect()
}

/// A chute or ladder move: one `+` jumps from `from` to `to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Jump {
    pub from: Cell,
    pub to: Cell,
    pub result: PlusDiagram,
}

/// Chute moves: a `+` at `(i, j)` with `(i-1, j)` empty jumps over a run of
/// columns filled in both rows `i-1` and `i` to the first column `j'` where
/// both are empty, landing at `(i-1, j')`.
pub fn chute_jumps(p: &PlusDiagram) -> Vec<Jump> {
    let n = p.n();
    let mut out = Vec::new();
    for from in p.cells() {
        let (i, j) = (from.row, from.col);
        if i < 2 || p.contains(Cell::new(i - 1, j)) {
            continue;
        }
        let mut c = j + 1;
        while c <= n {
            let top = p.contains(Cell::new(i - 1, c));
            let bottom = p.contains(Cell::new(i, c));
            match (top, bottom) {
                (true, true) => c += 1,
                (false, false) => {
                    let to = Cell::new(i - 1, c);
                    out.push(Jump {
                        from,
                        to,
                        result: p.with_moved(from, to),
                    });
                    break;
                }
                _ => break,
            }
        }
    }
    out
}

/// Ladder moves: a `+` at `(i, j)` with `(i, j+1)` empty climbs over a run of
/// rows filled in both columns `j` and `j+1` to the first row `i'` where both
/// are empty, landing at `(i', j+1)`.
pub fn ladder_jumps(p: &PlusDiagram) -> Vec<Jump> {
    let n = p.n();
    let mut out = Vec::new();
    for from in p.cells() {
        let (i, j) = (from.row, from.col);
        if j + 1 > n || p.contains(Cell::new(i, j + 1)) {
            continue;
        }
        let mut r = i;
        while r > 1 {
            r -= 1;
            let left = p.contains(Cell::new(r, j));
            let right = p.contains(Cell::new(r, j + 1));
            match (left, right) {
                (true, true) => continue,
                (false, false) => {
                    let to = Cell::new(r, j + 1);
                    out.push(Jump {
                        from,
                        to,
                        result: p.with_moved(from, to),
                    });
                }
                _ => {}
            }
            break;
        }
    }
    out
}

pub fn chute_moves(p: &PlusDiagram) -> Vec<PlusDiagram> {
    chute_jumps(p).into_iter().map(|j| j.result).collect()
}

pub fn ladder_moves(p: &PlusDiagram) -> Vec<PlusDiagram> {
    ladder_jumps(p).into_iter().map(|j| j.result).collect()
}

/// Reduced pipe dreams of `w`, as the ladder-move closure of the bottom
/// diagram. Sorted.
pub fn min_plus(w: &Permutation) -> Vec<PlusDiagram> {
    let start = d_bot(w);
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(p) = queue.pop_front() {
        for q in ladder_moves(&p) {
            if seen.insert(q) {
                queue.push_back(q);
            }
        }
    }
    seen.into_iter().collect()
}
