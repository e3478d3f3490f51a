/// A finite poset given by its full comparability matrix.
#[derive(Debug, Clone)]
pub struct FinitePoset {
    leq: Vec<Vec<bool>>,
}

impl FinitePoset {
    pub fn new<F: Fn(usize, usize) -> bool>(size: usize, leq: F) -> Self {
        let leq = (0..size)
            .map(|i| (0..size).map(|j| leq(i, j)).collect())
            .collect();
        FinitePoset { leq }
    }

    pub fn len(&self) -> usize {
        self.leq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leq.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    /// Reflexive, antisymmetric and transitive.
    pub fn is_partial_order(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| self.leq[i][i])
            && (0..n).all(|i| (0..n).all(|j| i == j || !(self.leq[i][j] && self.leq[j][i])))
            && (0..n).all(|i| {
                (0..n).all(|j| !self.leq[i][j] || (0..n).all(|k| !self.leq[j][k] || self.leq[i][k]))
            })
    }

    /// Greatest lower bound, if one exists.
    pub fn meet(&self, i: usize, j: usize) -> Option<usize> {
        let lower: Vec<usize> = (0..self.len())
            .filter(|&k| self.leq[k][i] && self.leq[k][j])
            .collect();
        lower
            .iter()
            .copied()
            .find(|&g| lower.iter().all(|&k| self.leq[k][g]))
    }

    /// Least upper bound, if one exists.
    pub fn join(&self, i: usize, j: usize) -> Option<usize> {
        let upper: Vec<usize> = (0..self.len())
            .filter(|&k| self.leq[i][k] && self.leq[j][k])
            .collect();
        upper
            .iter()
            .copied()
            .find(|&g| upper.iter().all(|&k| self.leq[g][k]))
    }

    pub fn is_lattice(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| (i..n).all(|j| self.meet(i, j).is_some() && self.join(i, j).is_some()))
    }

    /// Cover relations `(lower, upper)`.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j || !self.leq[i][j] {
                    continue;
                }
                let covered = (0..n).any(|k| k != i && k != j && self.leq[i][k] && self.leq[k][j]);
                if !covered {
                    edges.push((i, j));
                }
            }
        }
        edges
    }

    pub fn minimum(&self) -> Option<usize> {
        (0..self.len()).find(|&i| (0..self.len()).all(|j| self.leq[i][j]))
    }
}
