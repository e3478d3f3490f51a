//! Interior faces of the complex whose faces are complements of plus
//! diagrams: Demazure products, a ridge-based boundary oracle, the K-moves
//! and the overlay conjecture for interior plus diagrams.

use std::collections::{BTreeSet, HashMap, VecDeque};

use thiserror::Error;

use crate::perm::{bruhat_leq, Cell, Permutation};
use crate::pipedream::{
    chute_jumps, essential_antidiagonals, is_plus_diagram, ladder_jumps, min_plus, word_of,
    PlusDiagram,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SrError {
    #[error("{0:?} is not a plus diagram for the permutation")]
    NotPlus(PlusDiagram),
}

/// Running 0-Hecke product of the letters consumed so far.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DemazureState {
    pub current: Permutation,
}

impl DemazureState {
    pub fn new(n: usize) -> Self {
        DemazureState {
            current: Permutation::identity(n),
        }
    }

    /// Applies `s_i` on the right when that makes the product longer.
    pub fn push(&mut self, i: usize) {
        if self.current.has_ascent(i) {
            self.current = self.current.times_simple(i);
        }
    }
}

/// 0-Hecke product of a word in the simple transpositions.
pub fn demazure_product(word: &[usize]) -> Permutation {
    let size = word.iter().map(|&a| a + 1).max().unwrap_or(1);
    let mut state = DemazureState::new(size);
    for &a in word {
        state.push(a);
    }
    state.current
}

/// Union of the essential antidiagonals: the cells that are not cone points.
pub fn relevant_cells(w: &Permutation) -> PlusDiagram {
    essential_antidiagonals(w)
        .iter()
        .fold(PlusDiagram::empty(w.n()).expect("grid fits"), |acc, d| {
            acc.union(d)
        })
}

/// Interior test through the Demazure product of the reading word.
pub fn is_interior(p: &PlusDiagram, w: &Permutation) -> Result<bool, SrError> {
    if !is_plus_diagram(p, w) {
        return Err(SrError::NotPlus(*p));
    }
    Ok(demazure_product(&word_of(p)) == *w)
}

/// Boundary of the complex restricted to its relevant vertices, described
/// by the ridges lying in exactly one facet.
#[derive(Debug, Clone)]
pub struct BoundaryOracle {
    pub w: Permutation,
    pub relevant: PlusDiagram,
    pub facets: Vec<PlusDiagram>,
    /// Plus diagrams of the boundary ridges (one `+` more than a facet).
    pub boundary_ridges: Vec<PlusDiagram>,
}

impl BoundaryOracle {
    pub fn new(w: &Permutation) -> Self {
        let relevant = relevant_cells(w);
        let facets = min_plus(w);
        let facet_set: BTreeSet<PlusDiagram> = facets.iter().copied().collect();
        let mut ridges = BTreeSet::new();
        for f in &facets {
            for c in relevant.difference(f).cells() {
                let mut r = *f;
                r.insert(c);
                ridges.insert(r);
            }
        }
        let boundary_ridges = ridges
            .into_iter()
            .filter(|r| {
                r.cells()
                    .filter(|&d| {
                        let mut smaller = *r;
                        smaller.remove(d);
                        facet_set.contains(&smaller)
                    })
                    .count()
                    == 1
            })
            .collect();
        BoundaryOracle {
            w: w.clone(),
            relevant,
            facets,
            boundary_ridges,
        }
    }

    /// Whether the face of `p` is a face of the complex off its boundary.
    /// A diagram using a cone point is never interior, since every interior
    /// face of a multicone contains all its apexes.
    pub fn is_interior(&self, p: &PlusDiagram) -> bool {
        is_plus_diagram(p, &self.w)
            && p.is_subset(&self.relevant)
            && !self.boundary_ridges.iter().any(|r| r.is_subset(p))
    }
}

/// Diagrams on which the Demazure criterion and the boundary oracle
/// disagree, over all plus diagrams on the relevant cells and all facets
/// with up to two extra cells anywhere in the grid.
pub fn interior_disagreements(w: &Permutation) -> Vec<PlusDiagram> {
    let oracle = BoundaryOracle::new(w);
    let n = w.n();
    let mut candidates = BTreeSet::new();
    let relevant: Vec<Cell> = oracle.relevant.cells().collect();
    for mask in 0u32..(1 << relevant.len()) {
        let cells = relevant
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &c)| c);
        let p = PlusDiagram::from_cells(n, cells).expect("relevant cells fit");
        if is_plus_diagram(&p, w) {
            candidates.insert(p);
        }
    }
    let grid: Vec<Cell> = (1..=n)
        .flat_map(|r| (1..=n).map(move |c| Cell::new(r, c)))
        .collect();
    for f in &oracle.facets {
        for (k, &a) in grid.iter().enumerate() {
            let mut one = *f;
            one.insert(a);
            candidates.insert(one);
            for &b in &grid[k + 1..] {
                let mut two = one;
                two.insert(b);
                candidates.insert(two);
            }
        }
    }
    candidates
        .into_iter()
        .filter(|p| is_interior(p, w).ok() != Some(oracle.is_interior(p)))
        .collect()
}

/// Interior plus diagrams of `w`, found by a depth-first search over the
/// relevant cells in reading order that abandons a branch once the
/// Demazure product of the chosen cells leaves the Bruhat interval below
/// `w`. Sorted.
pub fn int_plus(w: &Permutation) -> Vec<PlusDiagram> {
    let n = w.n();
    let relevant = relevant_cells(w);
    let mut order: Vec<Cell> = relevant.cells().collect();
    order.sort_by_key(|c| (c.row, std::cmp::Reverse(c.col)));

    fn go(
        k: usize,
        order: &[Cell],
        w: &Permutation,
        chosen: PlusDiagram,
        state: &DemazureState,
        out: &mut Vec<PlusDiagram>,
    ) {
        if k == order.len() {
            if state.current == *w {
                out.push(chosen);
            }
            return;
        }
        go(k + 1, order, w, chosen, state, out);
        let cell = order[k];
        let mut next = state.clone();
        next.push(cell.antidiagonal());
        if bruhat_leq(&next.current, w) {
            let mut with = chosen;
            with.insert(cell);
            go(k + 1, order, w, with, &next, out);
        }
    }

    let mut out = Vec::new();
    let empty = PlusDiagram::empty(n).expect("grid fits");
    go(0, &order, w, empty, &DemazureState::new(n), &mut out);
    for p in &out {
        assert!(
            is_plus_diagram(p, w),
            "{w}: interior diagram {p:?} is not a plus diagram"
        );
    }
    out.sort();
    out
}

/// Chute and ladder moves of `p`, each followed by its K-version `p -> p ∪ q`.
pub fn k_moves(p: &PlusDiagram) -> Vec<PlusDiagram> {
    let mut out = Vec::new();
    for jump in chute_jumps(p).into_iter().chain(ladder_jumps(p)) {
        out.push(jump.result);
        out.push(p.union(&jump.result));
    }
    out
}

/// Whether `nodes` form one component when `moves` are read as undirected
/// edges. An empty node set counts as connected.
fn connected_under<F>(nodes: &[PlusDiagram], moves: F) -> bool
where
    F: Fn(&PlusDiagram) -> Vec<PlusDiagram>,
{
    if nodes.is_empty() {
        return true;
    }
    let index: HashMap<PlusDiagram, usize> =
        nodes.iter().enumerate().map(|(k, p)| (*p, k)).collect();
    let mut adj = vec![Vec::new(); nodes.len()];
    for (k, p) in nodes.iter().enumerate() {
        for q in moves(p) {
            if let Some(&j) = index.get(&q) {
                adj[k].push(j);
                adj[j].push(k);
            }
        }
    }
    let mut seen = vec![false; nodes.len()];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(k) = queue.pop_front() {
        for &j in &adj[k] {
            if !seen[j] {
                seen[j] = true;
                queue.push_back(j);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Result of checking the overlay conjecture for one permutation.
#[derive(Debug, Clone)]
pub struct InteriorReport {
    pub w: Permutation,
    pub int_plus: Vec<PlusDiagram>,
    pub conjecture_holds: bool,
    pub witnesses: Vec<PlusDiagram>,
    pub kmove_connected: bool,
    /// Connectivity using chute and ladder moves only.
    pub plain_connected: bool,
}

impl InteriorReport {
    pub fn to_json(&self) -> String {
        let list = |ps: &[PlusDiagram]| {
            let parts: Vec<String> = ps.iter().map(PlusDiagram::to_json).collect();
            format!("[{}]", parts.join(","))
        };
        format!(
            "{{\"w\":\"{}\",\"int_plus\":{},\"conjecture_holds\":{},\"witnesses\":{},\"kmove_connected\":{},\"plain_connected\":{}}}",
            self.w,
            list(&self.int_plus),
            self.conjecture_holds,
            list(&self.witnesses),
            self.kmove_connected,
            self.plain_connected
        )
    }
}

/// Whether `p` is a union of one diagram from each list, each contained in `p`.
fn is_overlay_of(p: &PlusDiagram, lists: &[Vec<PlusDiagram>]) -> bool {
    let candidates: Vec<Vec<u64>> = lists
        .iter()
        .map(|l| {
            l.iter()
                .filter(|d| d.is_subset(p))
                .map(PlusDiagram::bits)
                .collect()
        })
        .collect();
    let k = candidates.len();
    let mut reach = vec![0u64; k + 1];
    for i in (0..k).rev() {
        reach[i] = reach[i + 1] | candidates[i].iter().fold(0, |a, b| a | b);
    }
    fn go(i: usize, covered: u64, target: u64, candidates: &[Vec<u64>], reach: &[u64]) -> bool {
        if covered | reach[i] != target {
            return false;
        }
        if i == candidates.len() {
            return true;
        }
        candidates[i]
            .iter()
            .any(|&b| go(i + 1, covered | b, target, candidates, reach))
    }
    go(0, 0, p.bits(), &candidates, &reach)
}

/// Checks that every interior plus diagram of `w` is an overlay of interior
/// plus diagrams of its biGrassmannian factors, and whether the interior
/// diagrams are connected by chute/ladder moves with and without K-moves.
pub fn check_conjecture(w: &Permutation) -> InteriorReport {
    let ints = int_plus(w);
    let factor_lists: Vec<Vec<PlusDiagram>> = w.bigrass_set().iter().map(int_plus).collect();
    let witnesses: Vec<PlusDiagram> = if factor_lists.is_empty() {
        ints.iter().filter(|p| !p.is_empty()).copied().collect()
    } else {
        ints.iter()
            .filter(|p| !is_overlay_of(p, &factor_lists))
            .copied()
            .collect()
    };
    InteriorReport {
        w: w.clone(),
        conjecture_holds: witnesses.is_empty(),
        kmove_connected: connected_under(&ints, k_moves),
        plain_connected: connected_under(&ints, |p| {
            chute_jumps(p)
                .into_iter()
                .chain(ladder_jumps(p))
                .map(|j| j.result)
                .collect()
        }),
        int_plus: ints,
        witnesses,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn demazure_basics() {
        assert_eq!(demazure_product(&[1, 1]), perm("21"));
        assert_eq!(demazure_product(&[1, 2, 1]), perm("321"));
        assert_eq!(demazure_product(&[1, 2, 1, 2]), perm("321"));
        assert!(demazure_product(&[]).is_identity());
    }

    #[test]
    fn single_transposition() {
        let w = perm("21");
        let p = PlusDiagram::from_pairs(2, &[(1, 1)]);
        assert_eq!(int_plus(&w), vec![p]);
        assert!(is_interior(&p, &w).unwrap());
        assert!(BoundaryOracle::new(&w).is_interior(&p));
    }

    #[test]
    fn not_a_plus_diagram() {
        let w = perm("2143");
        assert!(is_interior(&PlusDiagram::empty(4).unwrap(), &w).is_err());
    }

    #[test]
    fn extra_cell_leaves_interior() {
        let w = perm("1423");
        let facet = PlusDiagram::from_pairs(4, &[(2, 1), (2, 2)]);
        let extra = facet.union(&PlusDiagram::from_pairs(4, &[(1, 1)]));
        assert!(!is_interior(&extra, &w).unwrap());
        assert!(!BoundaryOracle::new(&w).is_interior(&extra));
    }

    #[test]
    fn oracle_agrees_on_s4() {
        for w in Permutation::all(4) {
            assert!(interior_disagreements(&w).is_empty(), "{w}");
        }
    }

    #[test]
    fn int_plus_2143_two_ways() {
        let w = perm("2143");
        let oracle = BoundaryOracle::new(&w);
        let ints = int_plus(&w);
        let relevant: Vec<Cell> = oracle.relevant.cells().collect();
        let mut by_oracle = Vec::new();
        for mask in 0u32..(1 << relevant.len()) {
            let cells = relevant
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &c)| c);
            let p = PlusDiagram::from_cells(4, cells).unwrap();
            if oracle.is_interior(&p) {
                by_oracle.push(p);
            }
        }
        by_oracle.sort();
        assert_eq!(ints, by_oracle);
        for p in min_plus(&w) {
            assert!(ints.contains(&p));
        }
    }

    #[test]
    fn k_moves_add_unions() {
        assert!(k_moves(&PlusDiagram::from_pairs(3, &[(1, 1)])).is_empty());
        let p = PlusDiagram::from_pairs(4, &[(1, 2), (2, 1), (2, 2)]);
        let q = PlusDiagram::from_pairs(4, &[(1, 2), (1, 3), (2, 2)]);
        let moves = k_moves(&p);
        assert!(moves.contains(&q));
        assert!(moves.contains(&p.union(&q)));
    }

    #[test]
    fn conjecture_on_s4() {
        for w in Permutation::all(4) {
            let report = check_conjecture(&w);
            assert!(report.conjecture_holds, "{w}: {:?}", report.witnesses);
            assert!(report.kmove_connected, "{w}");
        }
    }
}
