//! Exhaustive enumeration of all d-dimensional subspaces of `F^m`, one
//! canonical echelon form per subspace, plus the Gaussian binomial that
//! predicts how many there are.

use super::field::FiniteField;
use super::matrix::Matrix;
use super::subspace::Subspace;
use super::ExactLaError;

/// Number of `d`-dimensional subspaces of `GF(q)^m`, by the exact product
/// formula `prod_i (q^(m-i) - 1) / prod_i (q^(i+1) - 1)` for `i = 0..d`.
pub fn gaussian_binomial(m: usize, d: usize, q: u64) -> u128 {
    if d > m {
        return 0;
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..d {
        num = num
            .checked_mul(pow_u128(q, m - i) - 1)
            .expect("gaussian binomial overflow");
        den = den
            .checked_mul(pow_u128(q, i + 1) - 1)
            .expect("gaussian binomial overflow");
    }
    debug_assert_eq!(num % den, 0);
    num / den
}

fn pow_u128(q: u64, e: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..e {
        acc = acc.checked_mul(q as u128).expect("power overflow");
    }
    acc
}

/// Streams every `d`-dimensional subspace of `F^m` exactly once.
///
/// Subspaces are produced as canonical reduced echelon forms: for each
/// choice of pivot columns (in lexicographic order) the free entries run
/// through all field assignments. Fails up front when the total count
/// exceeds `budget`.
pub fn enumerate_grassmannian<F: FiniteField>(
    d: usize,
    m: usize,
    budget: u64,
) -> Result<GrassmannianIter<F>, ExactLaError> {
    assert!(d <= m, "subspace dimension exceeds the ambient dimension");
    let total = gaussian_binomial(m, d, F::ORDER);
    if total > budget as u128 {
        return Err(ExactLaError::BudgetExceeded {
            required: total,
            budget,
        });
    }
    Ok(GrassmannianIter {
        d,
        m,
        pivots: (0..d).collect(),
        free_digits: Vec::new(),
        fresh_pivots: true,
        done: false,
        elements: F::elements(),
    })
}

pub struct GrassmannianIter<F> {
    d: usize,
    m: usize,
    pivots: Vec<usize>,
    /// Odometer over the free entries, one digit (an index into `elements`)
    /// per free position of the current pivot choice.
    free_digits: Vec<usize>,
    fresh_pivots: bool,
    done: bool,
    elements: Vec<F>,
}

impl<F: FiniteField> GrassmannianIter<F> {
    /// Free positions for the current pivots: in row `i`, the columns right
    /// of pivot `i` that are not pivots themselves.
    fn free_positions(&self) -> Vec<(usize, usize)> {
        let mut free = Vec::new();
        for (i, &p) in self.pivots.iter().enumerate() {
            for col in p + 1..self.m {
                if !self.pivots.contains(&col) {
                    free.push((i, col));
                }
            }
        }
        free
    }

    fn build(&self, free: &[(usize, usize)]) -> Subspace<F> {
        let mut gens = Matrix::zeros(self.d, self.m);
        for (i, &p) in self.pivots.iter().enumerate() {
            gens[(i, p)] = F::one();
        }
        for (digit, &(r, c)) in self.free_digits.iter().zip(free) {
            gens[(r, c)] = self.elements[*digit];
        }
        Subspace::from_rref_unchecked(gens)
    }

    /// Advances the pivot columns to the next d-subset of `0..m` in
    /// lexicographic order. Returns false when exhausted.
    fn next_pivots(&mut self) -> bool {
        let d = self.d;
        if d == 0 {
            return false;
        }
        let mut i = d;
        while i > 0 {
            i -= 1;
            if self.pivots[i] < self.m - (d - i) {
                self.pivots[i] += 1;
                for j in i + 1..d {
                    self.pivots[j] = self.pivots[j - 1] + 1;
                }
                return true;
            }
        }
        false
    }
}

impl<F: FiniteField> Iterator for GrassmannianIter<F> {
    type Item = Subspace<F>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        if self.d == 0 {
            self.done = true;
            return Some(Subspace::zero(self.m));
        }
        loop {
            let free = self.free_positions();
            if self.fresh_pivots {
                self.free_digits = vec![0; free.len()];
                self.fresh_pivots = false;
                return Some(self.build(&free));
            }
            // Advance the odometer over free entries.
            let mut i = 0;
            while i < self.free_digits.len() {
                self.free_digits[i] += 1;
                if self.free_digits[i] < self.elements.len() {
                    return Some(self.build(&free));
                }
                self.free_digits[i] = 0;
                i += 1;
            }
            if !self.next_pivots() {
                self.done = true;
                return None;
            }
            self.fresh_pivots = true;
        }
    }
}
