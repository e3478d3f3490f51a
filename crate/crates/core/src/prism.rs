//! Prism tableaux: colored fillings of the shape of a permutation, one
//! rectangle filling per essential box, and their weights.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::multiplus::{family_for, MultiError, MultiPlusDiagram};
use crate::perm::{Cell, EssentialDatum, Permutation, Rect, Shape};
use crate::pipedream::{PipeError, PlusDiagram};
use crate::poly::Monomial;
use crate::IntPolynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrismError {
    #[error(transparent)]
    Pipe(#[from] PipeError),
    #[error(transparent)]
    Multi(#[from] MultiError),
    #[error("box {cell} carries the distinct values {values:?}")]
    NotSingleValued { cell: Cell, values: Vec<u8> },
    #[error("{0} is not Grassmannian")]
    NotGrassmannian(Permutation),
    #[error("expected {expected} components, got {got}")]
    Arity { expected: usize, got: usize },
}

/// Labels of one rectangle in row-major order.
pub type Filling = Vec<u8>;

/// Whether `filling` obeys the row, column and bound conditions on `rect`.
/// With `bound = None` labels are flagged by their grid row; otherwise they
/// range over `1..=bound`.
pub fn filling_is_valid(rect: &Rect, filling: &[u8], bound: Option<usize>) -> bool {
    if filling.len() != rect.len() {
        return false;
    }
    rect.cells().all(|cell| {
        let v = filling[rect.offset(cell)] as usize;
        let cap = bound.unwrap_or(cell.row);
        let left_ok =
            cell.col == 1 || v <= filling[rect.offset(Cell::new(cell.row, cell.col - 1))] as usize;
        let up_ok = cell.row == rect.top
            || v > filling[rect.offset(Cell::new(cell.row - 1, cell.col))] as usize;
        v >= 1 && v <= cap && left_ok && up_ok
    })
}

/// All fillings of `rect` with labels weakly decreasing along rows, strictly
/// increasing down columns, and bounded as in [`filling_is_valid`]. The
/// fillings come out in lexicographic order of their row-major words.
pub fn rect_fillings(rect: &Rect, bound: Option<usize>) -> Vec<Filling> {
    fn go(
        rect: &Rect,
        bound: Option<usize>,
        idx: usize,
        cur: &mut Filling,
        out: &mut Vec<Filling>,
    ) {
        if idx == rect.len() {
            out.push(cur.clone());
            return;
        }
        let row = rect.top + idx / rect.width;
        let col = 1 + idx % rect.width;
        let cap = bound.unwrap_or(row);
        let hi = if col > 1 {
            cap.min(cur[idx - 1] as usize)
        } else {
            cap
        };
        let lo = if row > rect.top {
            cur[idx - rect.width] as usize + 1
        } else {
            1
        };
        for v in lo..=hi {
            cur.push(v as u8);
            go(rect, bound, idx + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(
        rect,
        bound,
        0,
        &mut Vec::with_capacity(rect.len()),
        &mut out,
    );
    out
}

/// A prism tableau, stored as one rectangle filling per essential box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrismTableau {
    shape: Arc<Shape>,
    pub fillings: Vec<Filling>,
}

/// Distinct values per antidiagonal and their total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrismStats {
    pub d: Vec<usize>,
    pub total: usize,
}

/// An unstable triple: `low` of color `c` at `cell`, `low` of color `d` and
/// `high` of color `e`, all on `antidiagonal`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnstableTriple {
    pub antidiagonal: usize,
    pub cell: Cell,
    pub low: u8,
    pub c: usize,
    pub d: usize,
    pub high: u8,
    pub e: usize,
}

fn color_code(color: usize) -> char {
    (b'a' + (color % 26) as u8) as char
}

impl PrismTableau {
    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn essentials(&self) -> &[EssentialDatum] {
        &self.shape.essentials
    }

    /// `(label, color)` pairs in the box, sorted.
    pub fn labels_at(&self, cell: Cell) -> Vec<(u8, usize)> {
        let mut out: Vec<(u8, usize)> = self
            .essentials()
            .iter()
            .zip(&self.fillings)
            .filter(|(e, _)| e.rect.contains(cell))
            .map(|(e, f)| (f[e.rect.offset(cell)], e.color))
            .collect();
        out.sort_unstable();
        out
    }

    /// Every `(cell, label, color)` entry.
    pub fn entries(&self) -> impl Iterator<Item = (Cell, u8, usize)> + '_ {
        self.essentials()
            .iter()
            .zip(&self.fillings)
            .flat_map(|(e, f)| {
                e.rect
                    .cells()
                    .map(move |c| (c, f[e.rect.offset(c)], e.color))
            })
    }

    /// Values seen on each antidiagonal, ignoring color.
    pub fn antidiagonal_values(&self) -> BTreeMap<usize, BTreeSet<u8>> {
        let mut out: BTreeMap<usize, BTreeSet<u8>> = BTreeMap::new();
        for (cell, v, _) in self.entries() {
            out.entry(cell.antidiagonal()).or_default().insert(v);
        }
        out
    }

    pub fn stats(&self) -> PrismStats {
        let n = self.shape.n;
        let mut d = vec![0; 2 * n];
        for (k, vals) in self.antidiagonal_values() {
            d[k - 1] = vals.len();
        }
        while d.len() > n && d.last() == Some(&0) {
            d.pop();
        }
        let total = d.iter().sum();
        PrismStats { d, total }
    }

    /// `x_v` raised to the number of antidiagonals on which `v` appears.
    pub fn weight(&self) -> Monomial {
        let mut counts: Vec<usize> = Vec::new();
        for vals in self.antidiagonal_values().values() {
            for &v in vals {
                let v = v as usize;
                if counts.len() < v {
                    counts.resize(v, 0);
                }
                counts[v - 1] += 1;
            }
        }
        Monomial::from_counts(counts)
    }

    /// Boxes as `{1a,2b}` with one letter per color in essential-set order,
    /// one grid row per line.
    pub fn render(&self) -> String {
        let rows: BTreeSet<usize> = self.shape.boxes.iter().map(|c| c.row).collect();
        let mut lines = Vec::new();
        for r in rows {
            let mut parts = Vec::new();
            for c in 1..=self.shape.n {
                let cell = Cell::new(r, c);
                if !self.shape.boxes.contains(&cell) {
                    continue;
                }
                let labels: Vec<String> = self
                    .labels_at(cell)
                    .into_iter()
                    .map(|(v, col)| format!("{v}{}", color_code(col)))
                    .collect();
                parts.push(format!("{{{}}}", labels.join(",")));
            }
            lines.push(format!("row {r}: {}", parts.join(" ")));
        }
        if lines.is_empty() {
            "(empty)\n".to_string()
        } else {
            lines.join("\n") + "\n"
        }
    }

    /// `[{"box":[i,j],"rank":r,"rect":[top,bottom,width],"labels":[...]}, ...]`.
    pub fn to_json(&self) -> String {
        let parts: Vec<String> = self
            .essentials()
            .iter()
            .zip(&self.fillings)
            .map(|(e, f)| {
                let labels: Vec<String> = f.iter().map(|v| v.to_string()).collect();
                format!(
                    "{{\"box\":[{},{}],\"rank\":{},\"rect\":[{},{},{}],\"labels\":[{}]}}",
                    e.cell.row,
                    e.cell.col,
                    e.rank,
                    e.rect.top,
                    e.rect.bottom,
                    e.rect.width,
                    labels.join(",")
                )
            })
            .collect();
        format!("[{}]", parts.join(","))
    }
}

impl fmt::Display for PrismTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// The prism tableau model of one permutation.
#[derive(Debug, Clone)]
pub struct PrismModel {
    pub w: Permutation,
    pub shape: Arc<Shape>,
    /// `None` for flagged tableaux, `Some(m)` for unflagged ones with labels
    /// at most `m`.
    pub bound: Option<usize>,
    fillings: Vec<Vec<Filling>>,
    length: usize,
}

impl PrismModel {
    pub fn new(w: &Permutation) -> Self {
        Self::build(w, None)
    }

    /// Tableaux without the flag condition, using labels `1..=m`.
    pub fn unflagged(w: &Permutation, m: usize) -> Self {
        Self::build(w, Some(m))
    }

    fn build(w: &Permutation, bound: Option<usize>) -> Self {
        let shape = Arc::new(w.shape());
        let fillings = shape
            .essentials
            .iter()
            .map(|e| rect_fillings(&e.rect, bound))
            .collect();
        PrismModel {
            w: w.clone(),
            shape,
            bound,
            fillings,
            length: w.length(),
        }
    }

    /// Valid fillings of the rectangle of color `color`.
    pub fn fillings_for(&self, color: usize) -> &[Filling] {
        &self.fillings[color]
    }

    fn tableau(&self, fillings: Vec<Filling>) -> PrismTableau {
        PrismTableau {
            shape: self.shape.clone(),
            fillings,
        }
    }

    /// Every prism tableau: all combinations of rectangle fillings.
    pub fn all_prism(&self) -> Vec<PrismTableau> {
        let mut out = Vec::new();
        self.product(&mut Vec::new(), None, &mut out);
        out
    }

    /// Prism tableaux whose distinct-value count over antidiagonals equals
    /// the length of `w`. Combinations are pruned as soon as the running
    /// count exceeds the length, since adding colors never lowers it.
    pub fn min_prism(&self) -> Vec<PrismTableau> {
        let mut out = Vec::new();
        let mut seen = vec![0u64; 2 * self.shape.n + 1];
        self.product(&mut Vec::new(), Some(&mut seen), &mut out);
        out
    }

    fn product(
        &self,
        chosen: &mut Vec<Filling>,
        seen: Option<&mut Vec<u64>>,
        out: &mut Vec<PrismTableau>,
    ) {
        let color = chosen.len();
        if color == self.fillings.len() {
            let done = match &seen {
                Some(s) => s.iter().map(|b| b.count_ones() as usize).sum::<usize>() == self.length,
                None => true,
            };
            if done {
                out.push(self.tableau(chosen.clone()));
            }
            return;
        }
        let rect = self.shape.essentials[color].rect;
        match seen {
            None => {
                for f in &self.fillings[color] {
                    chosen.push(f.clone());
                    self.product(chosen, None, out);
                    chosen.pop();
                }
            }
            Some(seen) => {
                for f in &self.fillings[color] {
                    let saved = seen.clone();
                    for cell in rect.cells() {
                        seen[cell.antidiagonal()] |= 1u64 << f[rect.offset(cell)];
                    }
                    let total: usize = seen.iter().map(|b| b.count_ones() as usize).sum();
                    if total <= self.length {
                        chosen.push(f.clone());
                        self.product(chosen, Some(seen), out);
                        chosen.pop();
                    }
                    *seen = saved;
                }
            }
        }
    }

    /// Minimal tableaux without unstable triples.
    pub fn prism(&self) -> Vec<PrismTableau> {
        self.min_prism()
            .into_iter()
            .filter(|t| self.unstable_triples(t).is_empty())
            .collect()
    }

    pub fn is_minimal(&self, t: &PrismTableau) -> bool {
        t.stats().total == self.length
    }

    /// All unstable triples of `t`.
    pub fn unstable_triples(&self, t: &PrismTableau) -> Vec<UnstableTriple> {
        let mut by_diag: BTreeMap<usize, Vec<(Cell, u8, usize)>> = BTreeMap::new();
        for (cell, v, color) in t.entries() {
            by_diag
                .entry(cell.antidiagonal())
                .or_default()
                .push((cell, v, color));
        }
        let mut out = Vec::new();
        for (&diag, entries) in &by_diag {
            for &(cell, low, c) in entries {
                let Some(&(_, _, d)) = entries.iter().find(|&&(_, v, col)| v == low && col != c)
                else {
                    continue;
                };
                let highs: BTreeSet<(u8, usize)> = entries
                    .iter()
                    .filter(|&&(_, v, _)| v > low)
                    .map(|&(_, v, col)| (v, col))
                    .collect();
                let mut tried = BTreeSet::new();
                for (high, e) in highs {
                    if !tried.insert(high) {
                        continue;
                    }
                    let rect = &self.shape.essentials[c].rect;
                    let mut replaced = t.fillings[c].clone();
                    replaced[rect.offset(cell)] = high;
                    if filling_is_valid(rect, &replaced, self.bound) {
                        out.push(UnstableTriple {
                            antidiagonal: diag,
                            cell,
                            low,
                            c,
                            d,
                            high,
                            e,
                        });
                    }
                }
            }
        }
        out
    }

    /// Sum of weights over [`PrismModel::prism`].
    pub fn prism_polynomial(&self) -> IntPolynomial {
        let mut total = IntPolynomial::zero();
        for t in self.prism() {
            total.add_term(t.weight(), 1);
        }
        total.with_nvars(self.w.n().saturating_sub(1))
    }

    /// The label `v` in box `(a, b)` of color `e` becomes a `+` of component
    /// `e` at `(v, a + b - v)`.
    pub fn phi(&self, t: &PrismTableau) -> Result<MultiPlusDiagram, PrismError> {
        let n = self.w.n();
        let mut comps = Vec::with_capacity(t.fillings.len());
        for (e, f) in self.shape.essentials.iter().zip(&t.fillings) {
            let cells = e.rect.cells().map(|cell| {
                let v = f[e.rect.offset(cell)] as usize;
                Cell::new(v, cell.row + cell.col - v)
            });
            comps.push(PlusDiagram::from_cells(n, cells)?);
        }
        Ok(MultiPlusDiagram::new(n, comps))
    }

    /// Reads each component's labeled `+`'s back into the boxes of the
    /// bottom diagram they came from.
    pub fn phi_inv(&self, q: &MultiPlusDiagram) -> Result<PrismTableau, PrismError> {
        let essentials = &self.shape.essentials;
        if q.components.len() != essentials.len() {
            return Err(PrismError::Arity {
                expected: essentials.len(),
                got: q.components.len(),
            });
        }
        let bigrass = self.w.bigrass_set();
        let mut fillings = Vec::with_capacity(essentials.len());
        for ((e, p), u) in essentials.iter().zip(&q.components).zip(&bigrass) {
            let fam = family_for(u)?;
            let labeled = fam.get(p).ok_or(MultiError::NotInFactor(*p))?;
            let bottom = fam.bottom();
            let mut f = vec![0u8; e.rect.len()];
            for a in 1..=labeled.len() {
                let home = bottom.position(a);
                f[e.rect.offset(home)] = labeled.position(a).row as u8;
            }
            fillings.push(f);
        }
        Ok(self.tableau(fillings))
    }

    /// Forgets colors, requiring every box to hold a single value.
    pub fn grassmannian_reduce(&self, t: &PrismTableau) -> Result<BTreeMap<Cell, u8>, PrismError> {
        if !self.w.is_grassmannian() {
            return Err(PrismError::NotGrassmannian(self.w.clone()));
        }
        let mut out = BTreeMap::new();
        for &cell in &self.shape.boxes {
            let values: BTreeSet<u8> = t.labels_at(cell).into_iter().map(|(v, _)| v).collect();
            if values.len() != 1 {
                return Err(PrismError::NotSingleValued {
                    cell,
                    values: values.into_iter().collect(),
                });
            }
            out.insert(cell, *values.iter().next().unwrap());
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schubert;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn single_box_fillings() {
        let rect = Rect {
            top: 3,
            bottom: 3,
            width: 1,
        };
        assert_eq!(rect_fillings(&rect, None), vec![vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn fillings_of_1423() {
        let w = perm("1423");
        let model = PrismModel::new(&w);
        assert_eq!(model.fillings_for(0), &[vec![1, 1], vec![2, 1], vec![2, 2]]);
    }

    #[test]
    fn example_42513() {
        let model = PrismModel::new(&perm("42513"));
        let min = model.min_prism();
        assert_eq!(min.len(), 4);
        let stable = model.prism();
        assert_eq!(stable.len(), 2);
        assert_eq!(
            model.prism_polynomial().to_string(),
            "x1^3*x2^2*x3 + x1^3*x2*x3^2"
        );
    }

    #[test]
    fn identity_has_one_empty_tableau() {
        let model = PrismModel::new(&Permutation::identity(4));
        let all = model.prism();
        assert_eq!(all.len(), 1);
        assert!(all[0].weight().is_one());
        assert_eq!(model.prism_polynomial(), IntPolynomial::one());
    }

    #[test]
    fn s4_matches_divided_differences() {
        for w in Permutation::all(4) {
            assert_eq!(PrismModel::new(&w).prism_polynomial(), schubert(&w), "{w}");
        }
    }

    #[test]
    fn phi_round_trip() {
        let w = perm("42513");
        let model = PrismModel::new(&w);
        for t in model.all_prism() {
            let q = model.phi(&t).unwrap();
            assert_eq!(model.phi_inv(&q).unwrap(), t);
            assert_eq!(q.supp().weight(), t.weight());
        }
    }

    #[test]
    fn render_uses_color_letters() {
        let model = PrismModel::new(&perm("2143"));
        let t = &model.prism()[0];
        assert_eq!(t.render(), "row 1: {1a}\nrow 3: {1b}\n");
    }
}
