//! Permutations in one-line notation and the diagram combinatorics attached to
//! them: Rothe diagrams, rank functions, essential sets, shapes and the
//! biGrassmannian decomposition.

use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("empty permutation word")]
    Empty,
    #[error("value {value} is outside 1..={n}")]
    OutOfRange { value: usize, n: usize },
    #[error("duplicate value {0}")]
    Duplicate(usize),
    #[error("cannot parse permutation {0:?}")]
    Parse(String),
    #[error("({row}, {col}) is outside the {n}x{n} grid")]
    CellOutOfRange { row: usize, col: usize, n: usize },
    #[error(
        "no biGrassmannian permutation in S_{n} has essential box ({row}, {col}) of rank {rank}"
    )]
    NoBigrassmannian {
        row: usize,
        col: usize,
        rank: usize,
        n: usize,
    },
}

/// A grid position, 1-based. Ordered row-major.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// Index of the antidiagonal through this cell; antidiagonal `i` meets `(i, 1)`.
    pub const fn antidiagonal(self) -> usize {
        self.row + self.col - 1
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A permutation of `{1..n}` in one-line notation.
///
/// Equality and hashing ignore trailing fixed points, so `2134` and `21`
/// compare equal. The stored window size is what grid computations use.
#[derive(Clone)]
pub struct Permutation {
    window: Vec<usize>,
}

impl Permutation {
    pub fn new(word: &[usize]) -> Result<Self, PermError> {
        if word.is_empty() {
            return Err(PermError::Empty);
        }
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in word {
            if v == 0 || v > n {
                return Err(PermError::OutOfRange { value: v, n });
            }
            if seen[v] {
                return Err(PermError::Duplicate(v));
            }
            seen[v] = true;
        }
        Ok(Permutation {
            window: word.to_vec(),
        })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            window: (1..=n).collect(),
        }
    }

    /// The longest element of `S_n`.
    pub fn longest(n: usize) -> Self {
        Permutation {
            window: (1..=n).rev().collect(),
        }
    }

    /// Window size.
    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[usize] {
        &self.window
    }

    /// `w(i)` for 1-based `i`; positions beyond the window are fixed.
    pub fn at(&self, i: usize) -> usize {
        if i > self.window.len() {
            i
        } else {
            self.window[i - 1]
        }
    }

    /// The window with trailing fixed points removed.
    pub fn trimmed(&self) -> &[usize] {
        let mut end = self.window.len();
        while end > 0 && self.window[end - 1] == end {
            end -= 1;
        }
        &self.window[..end]
    }

    /// Same group element in a window of size `n` (appending fixed points).
    ///
    /// Panics if `n` is smaller than the trimmed window.
    pub fn extended(&self, n: usize) -> Permutation {
        let t = self.trimmed();
        assert!(n >= t.len(), "cannot fit {self} into a window of size {n}");
        let mut window = t.to_vec();
        window.extend(t.len() + 1..=n);
        Permutation { window }
    }

    pub fn is_identity(&self) -> bool {
        self.trimmed().is_empty()
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.window.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { window: inv }
    }

    /// Coxeter length, i.e. the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.window;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Right multiplication by the simple transposition `s_i`, which swaps
    /// positions `i` and `i+1`. The window grows if `i+1` exceeds it.
    pub fn times_simple(&self, i: usize) -> Permutation {
        assert!(i >= 1, "simple transpositions are indexed from 1");
        let mut window = self.window.clone();
        if i + 1 > window.len() {
            window.extend(window.len() + 1..=i + 1);
        }
        window.swap(i - 1, i);
        Permutation { window }
    }

    /// Whether `w s_i` is longer than `w`.
    pub fn has_ascent(&self, i: usize) -> bool {
        self.at(i) < self.at(i + 1)
    }

    pub fn descents(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| !self.has_ascent(i)).collect()
    }

    pub fn lehmer_code(&self) -> Vec<usize> {
        let w = &self.window;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&v| v < w[i]).count())
            .collect()
    }

    pub fn is_grassmannian(&self) -> bool {
        self.descents().len() <= 1
    }

    pub fn is_bigrassmannian(&self) -> bool {
        self.is_grassmannian() && self.inverse().is_grassmannian()
    }

    /// Vexillary means 2143-avoiding.
    pub fn is_vexillary(&self) -> bool {
        let w = &self.window;
        let n = w.len();
        for a in 0..n {
            for b in a + 1..n {
                if w[b] >= w[a] {
                    continue;
                }
                for c in b + 1..n {
                    if w[c] <= w[a] {
                        continue;
                    }
                    for d in c + 1..n {
                        if w[d] > w[a] && w[d] < w[c] {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// `r_w(i, j) = #{t <= i : w(t) <= j}`.
    pub fn rank(&self, i: usize, j: usize) -> Result<usize, PermError> {
        let n = self.n();
        if i == 0 || j == 0 || i > n || j > n {
            return Err(PermError::CellOutOfRange { row: i, col: j, n });
        }
        Ok(self.rank_unchecked(i, j))
    }

    pub(crate) fn rank_unchecked(&self, i: usize, j: usize) -> usize {
        (1..=i).filter(|&t| self.at(t) <= j).count()
    }

    /// Full rank table, `table[i][j] = r_w(i, j)` for `0 <= i, j <= n`.
    pub fn rank_table(&self, n: usize) -> Vec<Vec<usize>> {
        let mut table = vec![vec![0; n + 1]; n + 1];
        for i in 1..=n {
            let wi = self.at(i);
            for j in 1..=n {
                table[i][j] = table[i - 1][j] + usize::from(wi <= j);
            }
        }
        table
    }

    pub fn in_diagram(&self, cell: Cell) -> bool {
        let inv_j = self.inverse_at(cell.col);
        self.at(cell.row) > cell.col && inv_j > cell.row
    }

    fn inverse_at(&self, j: usize) -> usize {
        match self.window.iter().position(|&v| v == j) {
            Some(p) => p + 1,
            None => j,
        }
    }

    /// The Rothe diagram `D(w)`, row-major.
    pub fn diagram(&self) -> Vec<Cell> {
        let n = self.n();
        let inv = self.inverse();
        let mut cells = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                if self.at(i) > j && inv.at(j) > i {
                    cells.push(Cell::new(i, j));
                }
            }
        }
        cells
    }

    /// Essential boxes: diagram cells with no diagram cell directly south or
    /// east. Row-major; the position in this list is the box's color.
    pub fn essential_set(&self) -> Vec<EssentialDatum> {
        let diagram: BTreeSet<Cell> = self.diagram().into_iter().collect();
        diagram
            .iter()
            .filter(|c| {
                !diagram.contains(&Cell::new(c.row + 1, c.col))
                    && !diagram.contains(&Cell::new(c.row, c.col + 1))
            })
            .enumerate()
            .map(|(color, &cell)| {
                let rank = self.rank_unchecked(cell.row, cell.col);
                EssentialDatum {
                    cell,
                    rank,
                    color,
                    rect: Rect {
                        top: rank + 1,
                        bottom: cell.row,
                        width: cell.col - rank,
                    },
                }
            })
            .collect()
    }

    pub fn shape(&self) -> Shape {
        let essentials = self.essential_set();
        let boxes = essentials.iter().flat_map(|e| e.rect.cells()).collect();
        Shape {
            n: self.n(),
            boxes,
            essentials,
        }
    }

    /// `{u_e : e in Ess(w)}` in essential-set order, each in a window of size `n`.
    pub fn bigrass_set(&self) -> Vec<Permutation> {
        self.essential_set()
            .iter()
            .map(|e| {
                bigrassmannian_for(e.cell.row, e.cell.col, e.rank, self.n())
                    .expect("essential data always admits a biGrassmannian factor")
            })
            .collect()
    }

    /// `1^m x w`: fixes `1..m` and shifts `w` up by `m`.
    pub fn one_m_times(&self, m: usize) -> Permutation {
        let mut window: Vec<usize> = (1..=m).collect();
        window.extend(self.window.iter().map(|&v| v + m));
        Permutation { window }
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations {
            next: Some((1..=n).collect()),
        }
    }
}

/// Lexicographic iterator over `S_n`.
pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let n = succ.len();
        if n >= 2 {
            if let Some(i) = (0..n - 1).rev().find(|&i| succ[i] < succ[i + 1]) {
                let j = (i + 1..n).rev().find(|&j| succ[j] > succ[i]).unwrap();
                succ.swap(i, j);
                succ[i + 1..].reverse();
                self.next = Some(succ);
            }
        }
        Some(Permutation { window: current })
    }
}

impl PartialEq for Permutation {
    fn eq(&self, other: &Self) -> bool {
        self.trimmed() == other.trimmed()
    }
}

impl Eq for Permutation {}

impl Hash for Permutation {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.trimmed().hash(state);
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let n = self.n().max(other.n());
        (1..=n)
            .map(|i| self.at(i))
            .cmp((1..=n).map(|i| other.at(i)))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.window {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.window.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, PermError> {
        let s = s.trim();
        let parse_err = || PermError::Parse(s.to_string());
        let word: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|p| p.trim().parse::<usize>().map_err(|_| parse_err()))
                .collect::<Result<_, _>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(parse_err))
                .collect::<Result<_, _>>()?
        };
        Permutation::new(&word)
    }
}

/// Axis-aligned rectangle whose southwest corner sits in column 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rect {
    pub top: usize,
    pub bottom: usize,
    pub width: usize,
}

impl Rect {
    pub fn height(&self) -> usize {
        self.bottom + 1 - self.top
    }

    pub fn len(&self) -> usize {
        self.height() * self.width
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= self.top && cell.row <= self.bottom && cell.col >= 1 && cell.col <= self.width
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        let width = self.width;
        (self.top..=self.bottom).flat_map(move |r| (1..=width).map(move |c| Cell::new(r, c)))
    }

    /// Row-major offset of `cell`, which must lie in the rectangle.
    pub fn offset(&self, cell: Cell) -> usize {
        (cell.row - self.top) * self.width + (cell.col - 1)
    }
}

/// An essential box together with its rank and rectangle `R_e`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EssentialDatum {
    pub cell: Cell,
    pub rank: usize,
    pub rect: Rect,
    pub color: usize,
}

/// The union of the rectangles `R_e`, with the essential data kept alongside.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shape {
    pub n: usize,
    pub boxes: BTreeSet<Cell>,
    pub essentials: Vec<EssentialDatum>,
}

impl Shape {
    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    /// Number of boxes in each grid row, indexed from row 1.
    pub fn row_lengths(&self) -> Vec<usize> {
        let mut lens = vec![0; self.n];
        for b in &self.boxes {
            lens[b.row - 1] += 1;
        }
        lens
    }

    /// Whether the shape is a left-justified Young diagram in French
    /// orientation: occupied rows are consecutive, every row is an initial
    /// segment of columns, and rows weakly lengthen going down.
    pub fn is_french_young_diagram(&self) -> bool {
        let lens = self.row_lengths();
        let occupied: Vec<usize> = (0..lens.len()).filter(|&r| lens[r] > 0).collect();
        if occupied.is_empty() {
            return true;
        }
        let (first, last) = (occupied[0], *occupied.last().unwrap());
        if occupied.len() != last - first + 1 {
            return false;
        }
        let justified = self.boxes.iter().all(|b| b.col <= lens[b.row - 1]);
        justified && (first..last).all(|r| lens[r] <= lens[r + 1])
    }

    /// Row lengths read from the bottom row up, as a partition.
    pub fn partition(&self) -> Vec<usize> {
        let mut parts: Vec<usize> = self.row_lengths().into_iter().filter(|&l| l > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts
    }
}

/// The unique biGrassmannian `u` in `S_n` with `Ess(u) = {(i, j)}` and
/// `r_u(i, j) = r`.
pub fn bigrassmannian_for(
    i: usize,
    j: usize,
    r: usize,
    n: usize,
) -> Result<Permutation, PermError> {
    let err = PermError::NoBigrassmannian {
        row: i,
        col: j,
        rank: r,
        n,
    };
    if i == 0 || j == 0 || r >= i.min(j) || j + i - r > n {
        return Err(err);
    }
    // Lehmer code is j - r on rows r+1..=i and zero elsewhere.
    let mut window: Vec<usize> = (1..=r).collect();
    window.extend((1..=i - r).map(|t| j + t));
    window.extend((r + 1..=j).chain(j + i - r + 1..=n));
    let u = Permutation::new(&window).map_err(|_| err.clone())?;
    let ess = u.essential_set();
    if ess.len() != 1 || ess[0].cell != Cell::new(i, j) || ess[0].rank != r {
        return Err(err);
    }
    Ok(u)
}

/// Bruhat order via the rank criterion `r_u(i,j) >= r_w(i,j)`.
pub fn bruhat_leq(u: &Permutation, w: &Permutation) -> bool {
    let n = u.trimmed().len().max(w.trimmed().len());
    let ru = u.rank_table(n);
    let rw = w.rank_table(n);
    (1..=n).all(|i| (1..=n).all(|j| ru[i][j] >= rw[i][j]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn construction_and_errors() {
        assert!(Permutation::new(&[1, 2, 3]).unwrap().is_identity());
        assert_eq!(p("35142").n(), 5);
        assert_eq!(Permutation::new(&[1, 1, 2]), Err(PermError::Duplicate(1)));
        assert!(matches!(
            Permutation::new(&[0, 1]),
            Err(PermError::OutOfRange { .. })
        ));
        assert_eq!(Permutation::new(&[]), Err(PermError::Empty));
        assert!("12a".parse::<Permutation>().is_err());
        let long: Permutation = "10,3,1,2,4,5,6,7,8,9".parse().unwrap();
        assert_eq!(long.to_string(), "10,3,1,2,4,5,6,7,8,9");
    }

    #[test]
    fn lengths() {
        assert_eq!(Permutation::identity(4).length(), 0);
        assert_eq!(p("4321").length(), 6);
        assert_eq!(p("42513").length(), 6);
    }

    #[test]
    fn diagram_of_35142() {
        let d = p("35142").diagram();
        let expected =
            [(1, 1), (1, 2), (2, 1), (2, 2), (2, 4), (4, 2)].map(|(r, c)| Cell::new(r, c));
        assert_eq!(d, expected);
    }

    #[test]
    fn ranks() {
        let id = Permutation::identity(4);
        for i in 1..=4 {
            for j in 1..=4 {
                assert_eq!(id.rank(i, j).unwrap(), i.min(j));
            }
        }
        let w = p("35142");
        assert_eq!(w.rank(2, 2).unwrap(), 0);
        assert_eq!(w.rank(2, 4).unwrap(), 1);
        assert!(w.rank(0, 1).is_err());
        assert!(w.rank(6, 1).is_err());
    }

    #[test]
    fn essential_set_of_35142() {
        let ess = p("35142").essential_set();
        let cells: Vec<_> = ess
            .iter()
            .map(|e| (e.cell.row, e.cell.col, e.rank))
            .collect();
        assert_eq!(cells, vec![(2, 2, 0), (2, 4, 1), (4, 2, 1)]);
        assert!(Permutation::identity(3).essential_set().is_empty());
        assert_eq!(
            ess[1].rect,
            Rect {
                top: 2,
                bottom: 2,
                width: 3
            }
        );
    }

    #[test]
    fn shape_of_35142() {
        let shape = p("35142").shape();
        assert_eq!(shape.row_lengths(), vec![2, 3, 1, 1, 0]);
        assert!(Permutation::identity(4).shape().is_empty());
    }

    #[test]
    fn grassmannian_shape_is_french() {
        let w = p("246135");
        assert!(w.is_grassmannian());
        let shape = w.shape();
        assert!(shape.is_french_young_diagram());
        assert_eq!(shape.partition(), vec![3, 2, 1]);
    }

    #[test]
    fn pattern_predicates() {
        assert!(!p("2143").is_vexillary());
        assert!(p("1423").is_bigrassmannian());
        assert!(!p("2413").is_bigrassmannian());
        assert!(p("4321").is_vexillary());
    }

    #[test]
    fn bigrass_sets_from_examples() {
        let strs =
            |w: &str| -> Vec<String> { p(w).bigrass_set().iter().map(|u| u.to_string()).collect() };
        assert_eq!(strs("2413"), vec!["2314", "1423"]);
        assert_eq!(strs("42513"), vec!["41235", "23415", "14523"]);
        let mut got = strs("5361724");
        got.sort();
        let mut want = vec!["5123467", "3451267", "1562347", "1345627", "1256734"];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn bigrassmannian_rejects_bad_parameters() {
        assert!(bigrassmannian_for(2, 2, 2, 4).is_err());
        assert!(bigrassmannian_for(3, 3, 0, 5).is_err());
        assert!(bigrassmannian_for(2, 3, 1, 4).is_ok());
    }

    #[test]
    fn one_m_times_shifts() {
        let w = p("21");
        assert_eq!(w.one_m_times(0), w);
        assert_eq!(w.one_m_times(1).window(), &[1, 3, 2]);
    }

    #[test]
    fn bruhat_basics() {
        let w = p("4321");
        assert!(bruhat_leq(&Permutation::identity(4), &w));
        assert!(!bruhat_leq(&w, &Permutation::identity(4)));
    }

    #[test]
    fn enumerates_symmetric_group() {
        assert_eq!(Permutation::all(4).count(), 24);
        assert_eq!(Permutation::all(1).count(), 1);
    }
}
