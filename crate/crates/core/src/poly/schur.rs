use super::Monomial;
use crate::IntPolynomial;

/// `s_lambda(x_1, ..., x_k)` summed over semistandard tableaux: rows weakly
/// increase, columns strictly increase, entries in `1..=k`.
pub fn schur_via_ssyt(lambda: &[usize], k: usize) -> IntPolynomial {
    assert!(
        lambda.windows(2).all(|p| p[0] >= p[1]),
        "{lambda:?} is not a partition"
    );
    let cells: Vec<(usize, usize)> = lambda
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = lambda.iter().map(|&len| vec![0; len]).collect();
    let mut total = IntPolynomial::zero();
    fill(&cells, 0, &mut grid, k, &mut total);
    total.with_nvars(k)
}

fn fill(
    cells: &[(usize, usize)],
    idx: usize,
    grid: &mut Vec<Vec<usize>>,
    k: usize,
    total: &mut IntPolynomial,
) {
    let Some(&(r, c)) = cells.get(idx) else {
        let mut counts = vec![0usize; k];
        for v in grid.iter().flatten() {
            counts[v - 1] += 1;
        }
        total.add_term(Monomial::from_counts(counts), 1);
        return;
    };
    let left = if c > 0 { grid[r][c - 1] } else { 1 };
    let above = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
    for v in left.max(above)..=k {
        grid[r][c] = v;
        fill(cells, idx + 1, grid, k, total);
    }
    grid[r][c] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_schur_polynomials() {
        assert_eq!(schur_via_ssyt(&[], 3), IntPolynomial::one());
        assert_eq!(schur_via_ssyt(&[1], 3).to_string(), "x1 + x2 + x3");
        assert_eq!(
            schur_via_ssyt(&[1, 1], 3).to_string(),
            "x1*x2 + x1*x3 + x2*x3"
        );
        assert_eq!(schur_via_ssyt(&[2, 1], 3).coefficient_sum(), 8);
        assert!(schur_via_ssyt(&[1, 1, 1], 2).is_zero());
    }
}
