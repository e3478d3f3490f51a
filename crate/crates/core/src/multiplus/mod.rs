//! Tuples of reduced pipe dreams, one per biGrassmannian factor, together
//! with their supports, fibers, orders and long moves.

mod poset;

pub use poset::FinitePoset;

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use thiserror::Error;

use crate::perm::{Cell, Permutation};
use crate::pipedream::{
    chute_jumps, is_plus_diagram, is_reduced_pipe_dream, local_moves, local_target, min_plus,
    Direction, LabeledDiagram, LabeledFamily, PipeError, PlusDiagram,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MultiError {
    #[error(transparent)]
    Pipe(#[from] PipeError),
    #[error("{0:?} is not a plus diagram for the permutation")]
    NotPlus(PlusDiagram),
    #[error("{0:?} is not a reduced pipe dream for the permutation")]
    NotMinimal(PlusDiagram),
    #[error("{0:?} is not a reduced pipe dream of its factor")]
    NotInFactor(PlusDiagram),
    #[error("label {label} cannot travel from {from} to {to} by local moves")]
    BlockedLongMove { label: usize, from: Cell, to: Cell },
    #[error("the fiber over {0:?} has no minimum")]
    NoMinimum(PlusDiagram),
    #[error("multi-plus diagrams have {0} and {1} components")]
    Arity(usize, usize),
}

/// One reduced pipe dream per biGrassmannian factor, in essential-set order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiPlusDiagram {
    pub components: Vec<PlusDiagram>,
    n: usize,
}

impl MultiPlusDiagram {
    /// Components must all live in the `n x n` grid.
    pub fn new(n: usize, components: Vec<PlusDiagram>) -> Self {
        debug_assert!(components.iter().all(|c| c.n() == n));
        MultiPlusDiagram { components, n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Cellwise union of the components, empty when there are none.
    pub fn supp(&self) -> PlusDiagram {
        self.components
            .iter()
            .fold(PlusDiagram::from_bits(self.n, 0), |acc, p| acc.union(p))
    }

    /// Indices of the components containing `cell`.
    pub fn colors_at(&self, cell: Cell) -> Vec<usize> {
        (0..self.components.len())
            .filter(|&k| self.components[k].contains(cell))
            .collect()
    }

    /// A grid where each occupied cell lists the component indices on it,
    /// e.g. `{0,2}`, and empty cells show `.`.
    pub fn render(&self) -> String {
        let n = self.components.first().map_or(0, PlusDiagram::n);
        let mut rows = Vec::new();
        for r in 1..=n {
            let cells: Vec<String> = (1..=n)
                .map(|c| {
                    let colors = self.colors_at(Cell::new(r, c));
                    if colors.is_empty() {
                        ".".to_string()
                    } else {
                        let s: Vec<String> = colors.iter().map(|k| k.to_string()).collect();
                        format!("{{{}}}", s.join(","))
                    }
                })
                .collect();
            rows.push(cells.join(" "));
        }
        rows.join("\n") + "\n"
    }

    pub fn to_json(&self) -> String {
        let parts: Vec<String> = self.components.iter().map(PlusDiagram::to_json).collect();
        format!("[{}]", parts.join(","))
    }
}

impl fmt::Display for MultiPlusDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Labeled families are reused across permutations sharing a factor.
pub fn family_for(u: &Permutation) -> Result<Arc<LabeledFamily>, PipeError> {
    static CACHE: OnceLock<Mutex<HashMap<Vec<usize>, Arc<LabeledFamily>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = u.window().to_vec();
    if let Some(hit) = cache.lock().expect("family cache poisoned").get(&key) {
        return Ok(hit.clone());
    }
    let fam = Arc::new(LabeledFamily::new(u)?);
    Ok(cache
        .lock()
        .expect("family cache poisoned")
        .entry(key)
        .or_insert(fam)
        .clone())
}

/// The sequence of diagrams produced by the SAME, SW, NE long moves.
#[derive(Debug, Clone)]
pub struct LambdaRun {
    pub same: Vec<usize>,
    pub first: Vec<usize>,
    pub second: Vec<usize>,
    /// `steps[0]` is the start, `steps[h]` follows the `h`-th long move.
    pub steps: Vec<PlusDiagram>,
}

impl LambdaRun {
    /// The diagram reached once the first phase is complete.
    pub fn turning_point(&self) -> PlusDiagram {
        self.steps[self.same.len() + self.first.len()]
    }
}

/// Walks `+_a` from its current cell to `target` one local move at a time.
fn long_move_to(
    current: &LabeledDiagram,
    a: usize,
    target: Cell,
) -> Result<LabeledDiagram, MultiError> {
    let start = current.position(a);
    let dir = if target.row > start.row {
        Direction::SouthWest
    } else {
        Direction::NorthEast
    };
    let mut cur = current.clone();
    while cur.position(a) != target {
        let here = cur.position(a);
        match local_target(&cur.base, here, dir) {
            Some(next) => cur = cur.with_label_moved(a, next),
            None => {
                return Err(MultiError::BlockedLongMove {
                    label: a,
                    from: start,
                    to: target,
                })
            }
        }
        if (dir == Direction::SouthWest && cur.position(a).row > target.row)
            || (dir == Direction::NorthEast && cur.position(a).row < target.row)
        {
            return Err(MultiError::BlockedLongMove {
                label: a,
                from: start,
                to: target,
            });
        }
    }
    Ok(cur)
}

/// Runs long moves from `p` to `q` inside one biGrassmannian family.
///
/// With `toward_meet`, labels already in place come first, then labels that
/// must move southwest in increasing order, then those moving northeast in
/// decreasing order. Otherwise the northeast movers go first (decreasing)
/// and the southwest movers follow (increasing).
pub fn lambda_run(
    fam: &LabeledFamily,
    p: &PlusDiagram,
    q: &PlusDiagram,
    toward_meet: bool,
) -> Result<LambdaRun, MultiError> {
    let lp = fam.get(p).ok_or(MultiError::NotInFactor(*p))?;
    let lq = fam.get(q).ok_or(MultiError::NotInFactor(*q))?;
    let labels = 1..=lp.len();
    let same: Vec<usize> = labels
        .clone()
        .filter(|&a| lp.position(a) == lq.position(a))
        .collect();
    let sw: Vec<usize> = labels
        .clone()
        .filter(|&a| lq.position(a).row > lp.position(a).row)
        .collect();
    let mut ne: Vec<usize> = labels
        .filter(|&a| lq.position(a).row < lp.position(a).row)
        .collect();
    ne.reverse();
    let (first, second) = if toward_meet { (sw, ne) } else { (ne, sw) };
    let mut current = lp.clone();
    let mut steps = vec![current.base];
    for &a in same.iter().chain(first.iter()).chain(second.iter()) {
        current = long_move_to(&current, a, lq.position(a))?;
        if !fam.contains(&current.base) {
            return Err(MultiError::NotInFactor(current.base));
        }
        steps.push(current.base);
    }
    debug_assert_eq!(current.base, *q);
    Ok(LambdaRun {
        same,
        first,
        second,
        steps,
    })
}

/// `p <= q` when every `+_a` of `q` sits weakly northeast of `+_a` in `p`.
pub fn leq_in_family(
    fam: &LabeledFamily,
    p: &PlusDiagram,
    q: &PlusDiagram,
) -> Result<bool, MultiError> {
    let lp = fam.get(p).ok_or(MultiError::NotInFactor(*p))?;
    let lq = fam.get(q).ok_or(MultiError::NotInFactor(*q))?;
    Ok((1..=lp.len()).all(|a| lq.position(a).row <= lp.position(a).row))
}

/// Diagrams reachable from `p` by northeast local moves, `p` included.
pub fn ne_reachable(p: &PlusDiagram) -> HashSet<PlusDiagram> {
    let mut seen = HashSet::from([*p]);
    let mut queue = VecDeque::from([*p]);
    while let Some(x) = queue.pop_front() {
        for mv in local_moves(&x, Direction::NorthEast) {
            if seen.insert(mv.result) {
                queue.push_back(mv.result);
            }
        }
    }
    seen
}

/// Outcome of a structural sweep over one permutation.
#[derive(Debug, Clone, Default)]
pub struct StructureReport {
    pub fibers_checked: usize,
    pub pairs_checked: usize,
    pub failures: Vec<String>,
}

impl StructureReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Multi-plus diagrams of a fixed permutation.
#[derive(Debug, Clone)]
pub struct MultiPlus {
    pub w: Permutation,
    pub bigrass: Vec<Permutation>,
    pub families: Vec<Arc<LabeledFamily>>,
}

impl MultiPlus {
    pub fn new(w: &Permutation) -> Result<Self, MultiError> {
        let bigrass = w.bigrass_set();
        let families = bigrass
            .iter()
            .map(family_for)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(MultiPlus {
            w: w.clone(),
            bigrass,
            families,
        })
    }

    pub fn n(&self) -> usize {
        self.w.n()
    }

    pub fn arity(&self) -> usize {
        self.families.len()
    }

    fn check(&self, q: &MultiPlusDiagram) -> Result<(), MultiError> {
        if q.components.len() != self.arity() {
            return Err(MultiError::Arity(q.components.len(), self.arity()));
        }
        for (p, fam) in q.components.iter().zip(&self.families) {
            if !fam.contains(p) {
                return Err(MultiError::NotInFactor(*p));
            }
        }
        Ok(())
    }

    /// Every tuple of components with support exactly `p`. Sorted.
    pub fn fiber(&self, p: &PlusDiagram) -> Result<Vec<MultiPlusDiagram>, MultiError> {
        if !is_plus_diagram(p, &self.w) {
            return Err(MultiError::NotPlus(*p));
        }
        Ok(self.fiber_unchecked(p))
    }

    fn fiber_unchecked(&self, p: &PlusDiagram) -> Vec<MultiPlusDiagram> {
        if self.arity() == 0 {
            return if p.is_empty() {
                vec![MultiPlusDiagram::new(p.n(), Vec::new())]
            } else {
                Vec::new()
            };
        }
        let candidates: Vec<Vec<PlusDiagram>> = self
            .families
            .iter()
            .map(|fam| {
                fam.members
                    .iter()
                    .map(|m| m.base)
                    .filter(|b| b.is_subset(p))
                    .collect()
            })
            .collect();
        let k = candidates.len();
        let mut reach = vec![0u64; k + 1];
        for i in (0..k).rev() {
            let here = candidates[i].iter().fold(0, |acc, d| acc | d.bits());
            reach[i] = reach[i + 1] | here;
        }
        let mut out = Vec::new();
        let mut chosen = Vec::with_capacity(k);
        fn go(
            i: usize,
            covered: u64,
            target: u64,
            candidates: &[Vec<PlusDiagram>],
            reach: &[u64],
            chosen: &mut Vec<PlusDiagram>,
            out: &mut Vec<Vec<PlusDiagram>>,
        ) {
            if covered | reach[i] != target {
                return;
            }
            if i == candidates.len() {
                out.push(chosen.clone());
                return;
            }
            for d in &candidates[i] {
                chosen.push(*d);
                go(
                    i + 1,
                    covered | d.bits(),
                    target,
                    candidates,
                    reach,
                    chosen,
                    out,
                );
                chosen.pop();
            }
        }
        go(0, 0, p.bits(), &candidates, &reach, &mut chosen, &mut out);
        let mut fiber: Vec<_> = out
            .into_iter()
            .map(|c| MultiPlusDiagram::new(p.n(), c))
            .collect();
        fiber.sort();
        fiber
    }

    /// Componentwise order.
    pub fn leq(&self, q: &MultiPlusDiagram, r: &MultiPlusDiagram) -> Result<bool, MultiError> {
        self.check(q)?;
        self.check(r)?;
        for ((a, b), fam) in q.components.iter().zip(&r.components).zip(&self.families) {
            if !leq_in_family(fam, a, b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn combine(
        &self,
        q: &MultiPlusDiagram,
        r: &MultiPlusDiagram,
        toward_meet: bool,
    ) -> Result<MultiPlusDiagram, MultiError> {
        self.check(q)?;
        self.check(r)?;
        let components = q
            .components
            .iter()
            .zip(&r.components)
            .zip(&self.families)
            .map(|((a, b), fam)| lambda_run(fam, a, b, toward_meet).map(|run| run.turning_point()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(MultiPlusDiagram::new(q.n, components))
    }

    /// Componentwise meet, each component read off the SAME/SW/NE run.
    pub fn meet(
        &self,
        q: &MultiPlusDiagram,
        r: &MultiPlusDiagram,
    ) -> Result<MultiPlusDiagram, MultiError> {
        self.combine(q, r, true)
    }

    /// Componentwise join, each component read off the SAME/NE/SW run.
    pub fn join(
        &self,
        q: &MultiPlusDiagram,
        r: &MultiPlusDiagram,
    ) -> Result<MultiPlusDiagram, MultiError> {
        self.combine(q, r, false)
    }

    /// Results of moving one `+` of one component by one or more local moves
    /// in direction `dir`.
    pub fn long_moves_in(
        &self,
        q: &MultiPlusDiagram,
        dir: Direction,
        support_preserving: bool,
    ) -> Vec<MultiPlusDiagram> {
        let mut out = Vec::new();
        if q.components.is_empty() {
            return out;
        }
        let support = q.supp();
        for (k, comp) in q.components.iter().enumerate() {
            for start in comp.cells() {
                let mut cur = *comp;
                let mut here = start;
                while let Some(next) = local_target(&cur, here, dir) {
                    cur = cur.with_moved(here, next);
                    here = next;
                    let mut comps = q.components.clone();
                    comps[k] = cur;
                    let moved = MultiPlusDiagram::new(q.n, comps);
                    if !support_preserving || moved.supp() == support {
                        out.push(moved);
                    }
                }
            }
        }
        out
    }

    pub fn long_moves(
        &self,
        q: &MultiPlusDiagram,
        support_preserving: bool,
    ) -> Vec<MultiPlusDiagram> {
        let mut out = self.long_moves_in(q, Direction::SouthWest, support_preserving);
        out.extend(self.long_moves_in(q, Direction::NorthEast, support_preserving));
        out
    }

    /// The minimum of the fiber over a reduced pipe dream `p`, found by
    /// descending along support-preserving southwest long moves and then
    /// checked against every fiber member.
    pub fn fiber_minimum(&self, p: &PlusDiagram) -> Result<MultiPlusDiagram, MultiError> {
        if !is_reduced_pipe_dream(p, &self.w) {
            return Err(MultiError::NotMinimal(*p));
        }
        let fiber = self.fiber_unchecked(p);
        let mut cur = fiber.first().cloned().ok_or(MultiError::NoMinimum(*p))?;
        while let Some(next) = self
            .long_moves_in(&cur, Direction::SouthWest, true)
            .into_iter()
            .next()
        {
            cur = next;
        }
        for member in &fiber {
            if !self.leq(&cur, member)? {
                return Err(MultiError::NoMinimum(*p));
            }
        }
        Ok(cur)
    }

    /// Every check of the fiber structure for every reduced pipe dream of `w`.
    pub fn verify_structure(&self) -> StructureReport {
        let mut report = StructureReport::default();
        let mut seen_factors = BTreeSet::new();
        for fam in &self.families {
            if seen_factors.insert(fam.u.window().to_vec()) {
                report.pairs_checked += check_family(fam, &mut report.failures);
            }
        }
        for p in min_plus(&self.w) {
            report.fibers_checked += 1;
            self.check_fiber(&p, &mut report.failures);
        }
        report
    }

    fn check_fiber(&self, p: &PlusDiagram, failures: &mut Vec<String>) {
        let w = &self.w;
        let fiber = self.fiber_unchecked(p);
        if fiber.is_empty() {
            failures.push(format!("{w}: empty fiber over {p:?}"));
            return;
        }
        let index: HashMap<&MultiPlusDiagram, usize> =
            fiber.iter().enumerate().map(|(k, q)| (q, k)).collect();

        let mut seen = vec![false; fiber.len()];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for next in self.long_moves(&fiber[k], true) {
                match index.get(&next) {
                    Some(&j) if !seen[j] => {
                        seen[j] = true;
                        queue.push_back(j);
                    }
                    Some(_) => {}
                    None => failures.push(format!(
                        "{w}: support-preserving long move left the fiber over {p:?}"
                    )),
                }
            }
        }
        if seen.iter().any(|s| !s) {
            failures.push(format!(
                "{w}: fiber over {p:?} is not connected by long moves"
            ));
        }

        let poset = FinitePoset::new(fiber.len(), |i, j| {
            self.leq(&fiber[i], &fiber[j]).unwrap_or(false)
        });
        if !poset.is_lattice() {
            failures.push(format!("{w}: fiber over {p:?} is not a lattice"));
            return;
        }
        for i in 0..fiber.len() {
            for j in i + 1..fiber.len() {
                let expected = [poset.meet(i, j), poset.join(i, j)];
                let got = [
                    self.meet(&fiber[i], &fiber[j]),
                    self.join(&fiber[i], &fiber[j]),
                ];
                for (want, have) in expected.into_iter().zip(got) {
                    match have {
                        Ok(x) if want.map(|k| &fiber[k]) == Some(&x) => {}
                        Ok(x) => failures.push(format!(
                            "{w}: fiber over {p:?} not closed under meet/join, got {x:?}"
                        )),
                        Err(e) => failures.push(format!("{w}: {e}")),
                    }
                }
            }
        }

        match self.fiber_minimum(p) {
            Ok(m) if poset.minimum().map(|k| &fiber[k]) == Some(&m) => {}
            Ok(m) => failures.push(format!("{w}: descent found {m:?}, not the fiber minimum")),
            Err(e) => failures.push(format!("{w}: {e}")),
        }
    }

    /// For every chute move `P -> Q` between reduced pipe dreams of `w` and
    /// every decomposition of `P`, move each component containing the jumping
    /// `+` by northeast local moves along its run of consecutive `+`'s in that
    /// row (right to left) and check that the supports give `Q`.
    /// Returns the number of decompositions examined.
    pub fn check_chute_overlays(&self, failures: &mut Vec<String>) -> usize {
        let w = &self.w;
        let mut checked = 0;
        for p in min_plus(w) {
            let jumps = chute_jumps(&p);
            if jumps.is_empty() {
                continue;
            }
            let fiber = self.fiber_unchecked(&p);
            for jump in jumps {
                if !is_reduced_pipe_dream(&jump.result, w) {
                    failures.push(format!(
                        "{w}: chute from {p:?} leaves the reduced pipe dreams"
                    ));
                    continue;
                }
                for member in &fiber {
                    checked += 1;
                    match self.overlay_chute(member, jump.from) {
                        Some(moved) if moved.supp() == jump.result => {}
                        Some(moved) => failures.push(format!(
                            "{w}: chute {}->{} from {p:?} gives support {:?}",
                            jump.from,
                            jump.to,
                            moved.supp()
                        )),
                        None => failures.push(format!(
                            "{w}: chute {}->{} from {p:?} has a blocked component move",
                            jump.from, jump.to
                        )),
                    }
                }
            }
        }
        checked
    }

    fn overlay_chute(&self, member: &MultiPlusDiagram, from: Cell) -> Option<MultiPlusDiagram> {
        let mut comps = member.components.clone();
        for (k, comp) in comps.iter_mut().enumerate() {
            if !comp.contains(from) {
                continue;
            }
            let mut end = from.col;
            while comp.contains(Cell::new(from.row, end + 1)) {
                end += 1;
            }
            for col in (from.col..=end).rev() {
                let here = Cell::new(from.row, col);
                let next = local_target(comp, here, Direction::NorthEast)?;
                *comp = comp.with_moved(here, next);
            }
            if !self.families[k].contains(comp) {
                return None;
            }
        }
        Some(MultiPlusDiagram::new(member.n, comps))
    }
}

/// Checks one biGrassmannian family: the label order against northeast
/// reachability, the run structure, and the run meet and join against the
/// generic ones. Returns the number of pairs examined.
pub fn check_family(fam: &LabeledFamily, failures: &mut Vec<String>) -> usize {
    let u = &fam.u;
    let bases: Vec<PlusDiagram> = fam.members.iter().map(|m| m.base).collect();
    let size = bases.len();
    let reach: Vec<HashSet<PlusDiagram>> = bases.iter().map(ne_reachable).collect();
    let poset = FinitePoset::new(size, |i, j| reach[i].contains(&bases[j]));
    let mut pairs = 0;
    for i in 0..size {
        for j in 0..size {
            pairs += 1;
            let by_label = leq_in_family(fam, &bases[i], &bases[j]).unwrap_or(false);
            if by_label != poset.leq(i, j) {
                failures.push(format!("{u}: label order disagrees with reachability"));
            }
            if j <= i {
                continue;
            }
            for (toward_meet, want) in [(true, poset.meet(i, j)), (false, poset.join(i, j))] {
                match lambda_run(fam, &bases[i], &bases[j], toward_meet) {
                    Ok(run) => {
                        let hull = bases[i].union(&bases[j]);
                        if run.steps.len() != u.length() + 1 {
                            failures.push(format!("{u}: run has {} steps", run.steps.len() - 1));
                        }
                        if run.steps.iter().any(|s| !s.is_subset(&hull)) {
                            failures.push(format!("{u}: run leaves the union of its endpoints"));
                        }
                        if want.map(|k| bases[k]) != Some(run.turning_point()) {
                            failures.push(format!(
                                "{u}: run {} disagrees with the poset",
                                if toward_meet { "meet" } else { "join" }
                            ));
                        }
                    }
                    Err(e) => failures.push(format!("{u}: {e}")),
                }
            }
        }
    }
    pairs
}
