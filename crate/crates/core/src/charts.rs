//! The affine chart of the Grassmannian attached to a partition: the
//! insertion walk along the rotated diagram, the interleaved matrix whose
//! column span parameterizes the chart, and the vanishing pattern that cuts
//! out the Schubert variety inside it.
//!
//! Chart matrices are `c x d`, exactly as vectors are columns: column `j`
//! of the interleaved matrix is the j-th generator of the parameterized
//! subspace.

use std::collections::BTreeSet;
use std::fmt;

use crate::exactla::matrix::{format_cell_rows, Matrix};
use crate::exactla::{Field, FlagSpec, Subspace};
use crate::partitions::{BoxShape, Partition};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ChartsError {
    /// The chart matrix must be `c x d` for the partition's box.
    ShapeMismatch {
        expected: (usize, usize),
        found: (usize, usize),
    },
    /// The basis must span a space of dimension `d + c`.
    AmbientMismatch { expected: usize, found: usize },
    /// Malformed masked-grid text.
    BadGrid(String),
}

impl fmt::Display for ChartsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChartsError::ShapeMismatch { expected, found } => write!(
                f,
                "chart matrix must be {}x{}, got {}x{}",
                expected.0, expected.1, found.0, found.1
            ),
            ChartsError::AmbientMismatch { expected, found } => {
                write!(f, "basis spans dimension {found}, chart needs {expected}")
            }
            ChartsError::BadGrid(msg) => write!(f, "invalid masked grid: {msg}"),
        }
    }
}

impl std::error::Error for ChartsError {}

/// The positions (1-based, strictly increasing) of the identity rows inside
/// the interleaved `m x d` matrix: row `i` of the identity lands at
/// `c - lambda_i + i`, i.e. after walking that many steps of the rotated
/// diagram's boundary.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InsertionWalk {
    bx: BoxShape,
    positions: Vec<usize>,
}

impl InsertionWalk {
    pub fn box_shape(&self) -> BoxShape {
        self.bx
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn ambient_dim(&self) -> usize {
        self.bx.ambient_dim()
    }
}

pub fn insertion_walk(lambda: &Partition) -> InsertionWalk {
    let bx = lambda.box_shape();
    let c = bx.cols();
    let positions: Vec<usize> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| c - p + i + 1)
        .collect();
    debug_assert!(positions.windows(2).all(|w| w[0] < w[1]));
    InsertionWalk { bx, positions }
}

/// The chart coordinates that vanish on the Schubert variety: in column `j`
/// the last `lambda_j` rows, which is the full part of the rotated diagram.
/// Entries are 1-based `(row, col)` with `row <= c`, `col <= d`; there are
/// exactly `|lambda|` of them.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZeroPattern {
    bx: BoxShape,
    entries: BTreeSet<(usize, usize)>,
}

impl ZeroPattern {
    pub fn box_shape(&self) -> BoxShape {
        self.bx
    }

    pub fn entries(&self) -> &BTreeSet<(usize, usize)> {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        self.entries.contains(&(row, col))
    }

    /// The pattern as a masked `c x d` grid.
    pub fn to_grid(&self) -> MaskedGrid {
        let mut grid = MaskedGrid::new(self.bx.cols(), self.bx.rows());
        for &(r, c) in &self.entries {
            grid.set(r, c);
        }
        grid
    }
}

pub fn zero_pattern(lambda: &Partition) -> ZeroPattern {
    let bx = lambda.box_shape();
    let c = bx.cols();
    let mut entries = BTreeSet::new();
    for (j, &part) in lambda.parts().iter().enumerate() {
        for r in c - part + 1..=c {
            entries.insert((r, j + 1));
        }
    }
    debug_assert_eq!(entries.len(), lambda.weight());
    ZeroPattern { bx, entries }
}

/// A rectangular mask over matrix positions: each cell is either free (`.`)
/// or forced to zero (`0`). This is the stable text form used by the chart
/// output and the golden files; `parse(render(g)) == g` and conversely.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MaskedGrid {
    rows: usize,
    cols: usize,
    zeroed: BTreeSet<(usize, usize)>,
}

impl MaskedGrid {
    pub fn new(rows: usize, cols: usize) -> Self {
        MaskedGrid {
            rows,
            cols,
            zeroed: BTreeSet::new(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Marks a 1-based position as forced zero.
    pub fn set(&mut self, row: usize, col: usize) {
        assert!(
            (1..=self.rows).contains(&row) && (1..=self.cols).contains(&col),
            "position ({row},{col}) outside {}x{} grid",
            self.rows,
            self.cols
        );
        self.zeroed.insert((row, col));
    }

    pub fn is_zeroed(&self, row: usize, col: usize) -> bool {
        self.zeroed.contains(&(row, col))
    }

    pub fn zeroed(&self) -> &BTreeSet<(usize, usize)> {
        &self.zeroed
    }

    pub fn free_count(&self) -> usize {
        self.rows * self.cols - self.zeroed.len()
    }

    pub fn render(&self) -> String {
        (1..=self.rows)
            .map(|r| {
                (1..=self.cols)
                    .map(|c| if self.is_zeroed(r, c) { '0' } else { '.' })
                    .collect::<String>()
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    pub fn parse(text: &str) -> Result<MaskedGrid, ChartsError> {
        let lines: Vec<&str> = text.split('\n').collect();
        let rows = lines.len();
        let cols = lines[0].chars().count();
        let mut grid = MaskedGrid::new(rows, cols);
        for (r, line) in lines.iter().enumerate() {
            if line.chars().count() != cols {
                return Err(ChartsError::BadGrid(format!(
                    "row {} has a different length",
                    r + 1
                )));
            }
            for (c, ch) in line.chars().enumerate() {
                match ch {
                    '0' => grid.set(r + 1, c + 1),
                    '.' => {}
                    other => {
                        return Err(ChartsError::BadGrid(format!(
                            "unexpected character {other:?} at row {}, column {}",
                            r + 1,
                            c + 1
                        )))
                    }
                }
            }
        }
        Ok(grid)
    }
}

impl fmt::Display for MaskedGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Interleaves the `c` rows of the chart matrix `a` (in order) with the `d`
/// rows of the identity, identity row `i` landing at position
/// `c - lambda_i + i`. The result is `m x d` of rank `d`; its column span is
/// the chart point.
pub fn build_ma<F: Field>(a: &Matrix<F>, lambda: &Partition) -> Result<Matrix<F>, ChartsError> {
    let bx = lambda.box_shape();
    let (d, c) = (bx.rows(), bx.cols());
    if a.rows() != c || a.cols() != d {
        return Err(ChartsError::ShapeMismatch {
            expected: (c, d),
            found: (a.rows(), a.cols()),
        });
    }
    let walk = insertion_walk(lambda);
    let m = bx.ambient_dim();
    let mut out = Matrix::zeros(m, d);
    let mut identity_row = 0;
    let mut a_row = 0;
    for row in 1..=m {
        if identity_row < d && walk.positions()[identity_row] == row {
            out[(row - 1, identity_row)] = F::one();
            identity_row += 1;
        } else {
            for col in 0..d {
                out[(row - 1, col)] = a[(a_row, col)];
            }
            a_row += 1;
        }
    }
    Ok(out)
}

/// A symbolic picture of the interleaved matrix: `a<row><col>` entries for
/// the chart rows, unit rows for the inserted identity. Rendered in the same
/// bracketed form as matrices.
pub fn ma_template(lambda: &Partition) -> String {
    let bx = lambda.box_shape();
    let (d, m) = (bx.rows(), bx.ambient_dim());
    let walk = insertion_walk(lambda);
    let mut rows = Vec::with_capacity(m);
    let mut identity_row = 0;
    let mut a_row = 0;
    for row in 1..=m {
        if identity_row < d && walk.positions()[identity_row] == row {
            rows.push(
                (0..d)
                    .map(|c| {
                        if c == identity_row {
                            "1".into()
                        } else {
                            "0".into()
                        }
                    })
                    .collect::<Vec<String>>(),
            );
            identity_row += 1;
        } else {
            a_row += 1;
            rows.push((1..=d).map(|c| format!("a{a_row}{c}")).collect());
        }
    }
    format_cell_rows(&rows)
}

/// The subspace parameterized by the chart matrix `a`, relative to an
/// ordered basis: the column span of the interleaved matrix, with the k-th
/// canonical vector identified with the k-th basis vector.
pub fn chart_point<F: Field>(
    a: &Matrix<F>,
    lambda: &Partition,
    basis: &FlagSpec<F>,
) -> Result<Subspace<F>, ChartsError> {
    let m = lambda.box_shape().ambient_dim();
    if basis.ambient_dim() != m {
        return Err(ChartsError::AmbientMismatch {
            expected: m,
            found: basis.ambient_dim(),
        });
    }
    let ma = build_ma(a, lambda)?;
    Ok(Subspace::from_generators(ma.transpose().mul(basis.basis())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{flag_l, schubert_membership, FiniteField, Gf, Rat};
    use crate::partitions::Partition;

    type F2 = Gf<2>;
    type F3 = Gf<3>;

    fn bx(d: usize, c: usize) -> BoxShape {
        BoxShape::new(d, c).unwrap()
    }

    fn p(d: usize, c: usize, parts: &[usize]) -> Partition {
        Partition::new(bx(d, c), parts).unwrap()
    }

    #[test]
    fn walk_positions() {
        assert_eq!(insertion_walk(&p(3, 6, &[5, 3, 2])).positions(), &[2, 5, 7]);
        assert_eq!(insertion_walk(&p(2, 3, &[])).positions(), &[4, 5]);
        assert_eq!(insertion_walk(&p(3, 4, &[4, 4, 4])).positions(), &[1, 2, 3]);
        assert_eq!(insertion_walk(&p(3, 8, &[5, 3, 2])).positions(), &[4, 7, 9]);
    }

    #[test]
    fn interleaving_layout() {
        // Mark row r of A with the value r (over the rationals) and check
        // where each row lands.
        let a = Matrix::<Rat>::from_rows((1..=6).map(|r| vec![Rat::integer(r); 3]).collect());
        let ma = build_ma(&a, &p(3, 6, &[5, 3, 2])).unwrap();
        assert_eq!(ma.rows(), 9);
        let marker = |r: usize| ma[(r - 1, 0)];
        // Chart rows in order at 1, 3, 4, 6, 8, 9.
        for (pos, val) in [(1, 1), (3, 2), (4, 3), (6, 4), (8, 5), (9, 6)] {
            assert_eq!(marker(pos), Rat::integer(val));
        }
        // Identity rows at 2, 5, 7.
        for (pos, col) in [(2, 0), (5, 1), (7, 2)] {
            for j in 0..3 {
                let expect = if j == col { Rat::one() } else { Rat::zero() };
                assert_eq!(ma[(pos - 1, j)], expect);
            }
        }
        assert_eq!(ma.rank(), 3);
    }

    #[test]
    fn zero_chart_matrix_spans_walk_axes() {
        let lambda = p(2, 3, &[1, 0]);
        let a = Matrix::<F2>::zeros(3, 2);
        let ma = build_ma(&a, &lambda).unwrap();
        assert_eq!(ma.rank(), 2);
        let point = chart_point(&a, &lambda, &flag_l::<F2>(5)).unwrap();
        for (i, &pos) in insertion_walk(&lambda).positions().iter().enumerate() {
            let gen = point.generators().row(i);
            assert_eq!(gen.iter().position(|x| !x.is_zero()), Some(pos - 1));
        }
    }

    #[test]
    fn shape_mismatch_is_rejected() {
        let a = Matrix::<F2>::zeros(2, 2);
        assert!(matches!(
            build_ma(&a, &p(2, 3, &[1, 0])),
            Err(ChartsError::ShapeMismatch { .. })
        ));
        let a = Matrix::<F2>::zeros(3, 2);
        assert!(matches!(
            chart_point(&a, &p(2, 3, &[1, 0]), &flag_l::<F2>(4)),
            Err(ChartsError::AmbientMismatch { .. })
        ));
    }

    #[test]
    fn pattern_positions() {
        let pat = zero_pattern(&p(3, 6, &[5, 3, 2]));
        assert_eq!(pat.len(), 10);
        let expected: Vec<(usize, usize)> = vec![
            (2, 1),
            (3, 1),
            (4, 1),
            (5, 1),
            (6, 1),
            (4, 2),
            (5, 2),
            (6, 2),
            (5, 3),
            (6, 3),
        ];
        assert_eq!(pat.entries().iter().copied().collect::<Vec<_>>(), {
            let mut e = expected;
            e.sort();
            e
        });

        assert!(zero_pattern(&p(3, 4, &[])).is_empty());
        assert_eq!(zero_pattern(&Partition::full(bx(3, 4))).len(), 12);
    }

    #[test]
    fn pattern_grid_text() {
        let grid = zero_pattern(&p(3, 6, &[5, 3, 2])).to_grid();
        assert_eq!(grid.render(), "...\n0..\n0..\n00.\n000\n000");
        let back = MaskedGrid::parse(&grid.render()).unwrap();
        assert_eq!(back, grid);
    }

    #[test]
    fn masked_grid_parse_errors() {
        assert!(MaskedGrid::parse("..\n.").is_err());
        assert!(MaskedGrid::parse(".x").is_err());
    }

    #[test]
    fn template_golden() {
        let t = ma_template(&p(3, 6, &[5, 3, 2]));
        assert_eq!(
            t,
            "[a11 a12 a13]\n[  1   0   0]\n[a21 a22 a23]\n[a31 a32 a33]\n[  0   1   0]\n[a41 a42 a43]\n[  0   0   1]\n[a51 a52 a53]\n[a61 a62 a63]"
        );
    }

    #[test]
    fn chart_point_in_schubert_iff_pattern_vanishes_golden() {
        // Pattern-zeroed chart matrix with all free entries 1 lies in the
        // Schubert variety.
        let lambda = p(3, 6, &[5, 3, 2]);
        let pat = zero_pattern(&lambda);
        let mut a = Matrix::<F2>::zeros(6, 3);
        for r in 1..=6 {
            for c in 1..=3 {
                if !pat.contains(r, c) {
                    a[(r - 1, c - 1)] = F2::one();
                }
            }
        }
        let point = chart_point(&a, &lambda, &flag_l::<F2>(9)).unwrap();
        assert!(schubert_membership(&point, &lambda, &flag_l::<F2>(9)).unwrap());
    }

    #[test]
    fn membership_iff_single_pattern_entry() {
        // In the 2x2 box with lambda = (1,0) the pattern is the single cell
        // (2,1); check the equivalence over every chart matrix mod 3.
        let lambda = p(2, 2, &[1, 0]);
        let flag = flag_l::<F3>(4);
        let elems = F3::elements();
        for code in 0..81usize {
            let mut digits = code;
            let mut a = Matrix::<F3>::zeros(2, 2);
            for r in 0..2 {
                for c in 0..2 {
                    a[(r, c)] = elems[digits % 3];
                    digits /= 3;
                }
            }
            let member =
                schubert_membership(&chart_point(&a, &lambda, &flag).unwrap(), &lambda, &flag)
                    .unwrap();
            assert_eq!(member, a[(1, 0)].is_zero(), "a={a}");
        }
    }

    #[test]
    fn chart_is_injective() {
        for (d, c) in [(1, 2), (2, 1), (2, 2)] {
            for lambda in Partition::enumerate(bx(d, c), None) {
                let flag = flag_l::<F2>(d + c);
                let mut seen = std::collections::BTreeSet::new();
                let cells = c * d;
                for code in 0..(1u32 << cells) {
                    let mut a = Matrix::<F2>::zeros(c, d);
                    for bit in 0..cells {
                        if code >> bit & 1 == 1 {
                            a[(bit / d, bit % d)] = F2::one();
                        }
                    }
                    let point = chart_point(&a, &lambda, &flag).unwrap();
                    assert!(seen.insert(point), "chart not injective at {lambda:?}");
                }
            }
        }
    }

    // Per-condition form of the vanishing statement: for each i separately,
    // the trailing block of the interleaved matrix drops to rank d - i
    // exactly when the first i columns of A vanish on their last lambda_i
    // rows.
    #[test]
    fn per_condition_rank_drop() {
        fn check_one<F: FiniteField>(a: &Matrix<F>, lambda: &Partition) {
            let bx = lambda.box_shape();
            let (d, c) = (bx.rows(), bx.cols());
            let ma = build_ma(a, lambda).unwrap();
            let m = d + c;
            for i in 1..=d {
                let part = lambda.parts()[i - 1];
                let split = c + i - part;
                let tail_rows: Vec<Vec<F>> = (split..m).map(|r| ma.row(r).to_vec()).collect();
                let tail = if tail_rows.is_empty() {
                    Matrix::zeros(0, d)
                } else {
                    Matrix::from_rows(tail_rows)
                };
                let block_vanishes = (1..=i)
                    .all(|col| (c - part + 1..=c).all(|row| a[(row - 1, col - 1)].is_zero()));
                assert_eq!(
                    tail.rank() == d - i,
                    block_vanishes,
                    "q={} lambda={lambda:?} i={i}",
                    F::ORDER
                );
            }
        }

        // Exhaustive over GF(2) for all boxes up to 3x3.
        for d in 1..=3usize {
            for c in 0..=3usize {
                for lambda in Partition::enumerate(bx(d, c), None) {
                    let cells = (c * d) as u32;
                    for code in 0..(1u32 << cells) {
                        let mut a = Matrix::<F2>::zeros(c, d);
                        for bit in 0..cells as usize {
                            if code >> bit & 1 == 1 {
                                a[(bit / d, bit % d)] = F2::one();
                            }
                        }
                        check_one(&a, &lambda);
                    }
                }
            }
        }

        // Sampled over GF(3).
        let mut rng = crate::exactla::rng::SplitMix64::new(7);
        let elems = F3::elements();
        for d in 1..=3usize {
            for c in 0..=3usize {
                for lambda in Partition::enumerate(bx(d, c), None) {
                    for _ in 0..40 {
                        let rows: Vec<Vec<F3>> = (0..c)
                            .map(|_| (0..d).map(|_| elems[rng.below(3) as usize]).collect())
                            .collect();
                        let a = if c == 0 {
                            Matrix::zeros(0, d)
                        } else {
                            Matrix::from_rows(rows)
                        };
                        check_one(&a, &lambda);
                    }
                }
            }
        }
    }
}
