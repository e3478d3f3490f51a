use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::{Coefficient, Monomial, Polynomial};
use crate::perm::Permutation;
use crate::IntPolynomial;

/// Memo table for Schubert polynomials, keyed by the trimmed window.
///
/// Lookups never hold the lock while computing, so concurrent callers may
/// both compute an entry; the first insertion wins and the values agree.
#[derive(Debug, Default)]
pub struct SchubertCache<C: Coefficient> {
    table: Mutex<HashMap<Vec<usize>, Polynomial<C>>>,
}

impl<C: Coefficient> SchubertCache<C> {
    pub fn new() -> Self {
        SchubertCache {
            table: Mutex::new(HashMap::new()),
        }
    }

    pub fn len(&self) -> usize {
        self.table.lock().expect("schubert cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, w: &Permutation) -> Polynomial<C> {
        let key = w.trimmed().to_vec();
        if let Some(hit) = self
            .table
            .lock()
            .expect("schubert cache poisoned")
            .get(&key)
        {
            return hit.clone();
        }
        let value = self.compute(&key);
        self.table
            .lock()
            .expect("schubert cache poisoned")
            .entry(key)
            .or_insert(value)
            .clone()
    }

    fn compute(&self, window: &[usize]) -> Polynomial<C> {
        let m = window.len();
        if m == 0 {
            return Polynomial::one();
        }
        let w = Permutation::new(window).expect("cache keys are permutations");
        let ascents: Vec<usize> = (1..m).filter(|&i| w.has_ascent(i)).collect();
        let Some(&i) = ascents.first() else {
            // w is the longest element of S_m: the staircase monomial.
            let staircase = Monomial::from_counts((1..m).map(|k| m - k));
            return Polynomial::monomial(staircase, C::one()).with_nvars(m - 1);
        };
        let result = self
            .get(&w.times_simple(i))
            .divided_difference(i)
            .expect("divided differences of Schubert polynomials are exact")
            .with_nvars(m - 1);
        if cfg!(debug_assertions) {
            if let Some(&j) = ascents.get(1) {
                let other = self
                    .get(&w.times_simple(j))
                    .divided_difference(j)
                    .expect("divided differences of Schubert polynomials are exact");
                assert_eq!(
                    result, other,
                    "Schubert recursion depends on the ascent for {w}"
                );
            }
        }
        result
    }
}

fn global() -> &'static SchubertCache<i64> {
    static CACHE: OnceLock<SchubertCache<i64>> = OnceLock::new();
    CACHE.get_or_init(SchubertCache::new)
}

/// The Schubert polynomial of `w`, through divided differences from the
/// staircase monomial. Results are memoized process-wide.
pub fn schubert(w: &Permutation) -> IntPolynomial {
    global().get(w)
}

/// `S_{1^m x w}` with every variable past `x_m` set to zero.
pub fn stanley_truncation(w: &Permutation, m: usize) -> IntPolynomial {
    schubert(&w.one_m_times(m)).truncate_vars(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::BigPolynomial;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(schubert(&perm("1234")).to_string(), "1");
        assert_eq!(schubert(&perm("2143")).to_string(), "x1^2 + x1*x2 + x1*x3");
        assert_eq!(
            schubert(&perm("42513")).to_string(),
            "x1^3*x2^2*x3 + x1^3*x2*x3^2"
        );
    }

    #[test]
    fn stable_under_appending_fixed_points() {
        let w = perm("2143");
        assert_eq!(schubert(&w), schubert(&w.extended(7)));
    }

    #[test]
    fn big_cache_matches_machine_cache() {
        let cache: SchubertCache<num_bigint::BigInt> = SchubertCache::new();
        for w in Permutation::all(4) {
            let big: BigPolynomial = cache.get(&w);
            assert_eq!(big.to_string(), schubert(&w).to_string());
        }
        assert!(!cache.is_empty());
    }

    #[test]
    fn truncation_of_a_simple_transposition() {
        let w = perm("21");
        for m in 1..5 {
            let expected: IntPolynomial = (1..=m).map(IntPolynomial::var).sum();
            assert_eq!(stanley_truncation(&w, m), expected);
        }
    }
}
