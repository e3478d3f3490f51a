use std::collections::BTreeSet;

use super::PlusDiagram;
use crate::perm::{Cell, Permutation};

/// For each essential box `(i, j)` of rank `r`, every antidiagonal support
/// of an `(r+1)`-minor in the northwest `i x j` corner: cells
/// `(a_1, b_1), ..., (a_{r+1}, b_{r+1})` with rows increasing and columns
/// decreasing. Sorted and deduplicated.
pub fn essential_antidiagonals(w: &Permutation) -> Vec<PlusDiagram> {
    let n = w.n();
    let mut out = BTreeSet::new();
    for e in w.essential_set() {
        let k = e.rank + 1;
        for rows in combinations(e.cell.row, k) {
            for cols in combinations(e.cell.col, k) {
                let cells = rows
                    .iter()
                    .zip(cols.iter().rev())
                    .map(|(&a, &b)| Cell::new(a, b));
                out.insert(PlusDiagram::from_cells(n, cells).expect("minors sit inside the grid"));
            }
        }
    }
    out.into_iter().collect()
}

/// Increasing `k`-subsets of `1..=m`.
fn combinations(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=m {
            if m - v + 1 < k - cur.len() {
                break;
            }
            cur.push(v);
            go(v + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, m, k, &mut Vec::new(), &mut out);
    out
}

/// Whether `p` meets every essential antidiagonal of `w`.
pub fn is_plus_diagram(p: &PlusDiagram, w: &Permutation) -> bool {
    let p = match p.resized(w.n().max(p.n())) {
        Ok(p) => p,
        Err(_) => return false,
    };
    essential_antidiagonals(w).iter().all(|s| {
        s.resized(p.n())
            .map(|s| s.bits() & p.bits() != 0)
            .unwrap_or(false)
    })
}

/// Inclusion-minimal sets meeting every member of `family`, as bitmasks.
/// Branches on the first set not yet hit, excluding earlier choices from
/// that set in later branches, then discards non-minimal results.
pub fn minimal_hitting_sets(family: &[u64]) -> Vec<u64> {
    fn go(family: &[u64], chosen: u64, banned: u64, out: &mut Vec<u64>) {
        let Some(&target) = family.iter().find(|&&s| s & chosen == 0) else {
            out.push(chosen);
            return;
        };
        let mut options = target & !banned;
        let mut banned = banned;
        while options != 0 {
            let bit = options & options.wrapping_neg();
            options &= options - 1;
            go(family, chosen | bit, banned, out);
            banned |= bit;
        }
    }
    let mut found = Vec::new();
    go(family, 0, 0, &mut found);
    let hits_all = |h: u64| family.iter().all(|&s| s & h != 0);
    let mut minimal: Vec<u64> = found
        .into_iter()
        .filter(|&h| {
            let mut bits = h;
            while bits != 0 {
                let bit = bits & bits.wrapping_neg();
                bits &= bits - 1;
                if hits_all(h & !bit) {
                    return false;
                }
            }
            true
        })
        .collect();
    minimal.sort_unstable();
    minimal.dedup();
    minimal
}

/// `MinPlus(w)` computed independently of any moves, as the minimal hitting
/// sets of the essential antidiagonals. Sorted.
pub fn min_plus_by_hitting_sets(w: &Permutation) -> Vec<PlusDiagram> {
    let n = w.n();
    let family: Vec<u64> = essential_antidiagonals(w)
        .iter()
        .map(|d| d.bits())
        .collect();
    let mut out: Vec<PlusDiagram> = minimal_hitting_sets(&family)
        .into_iter()
        .map(|bits| PlusDiagram::from_bits(n, bits))
        .collect();
    out.sort();
    out
}
