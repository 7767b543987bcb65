//! Subspaces in canonical form, complete flags, the two direct-sum
//! embeddings, and the Schubert membership test.

use std::fmt;

use super::field::{Field, FiniteField};
use super::matrix::Matrix;
use super::rng::SplitMix64;
use super::ExactLaError;
use crate::partitions::Partition;

/// A linear subspace of `F^m`, identified by the reduced row echelon form of
/// a generator matrix (one basis vector per row, no zero rows). The canonical
/// form is unique per subspace, so `Eq`/`Ord`/`Hash` compare subspaces, not
/// generator choices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subspace<F> {
    ambient: usize,
    gens: Matrix<F>,
}

impl<F: Field> Subspace<F> {
    /// Canonicalizes an arbitrary generator matrix (rows spanning the space).
    pub fn from_generators(mut gens: Matrix<F>) -> Self {
        let ambient = gens.cols();
        let rank = gens.rref_in_place();
        let rows: Vec<Vec<F>> = gens.row_vecs().take(rank).map(<[F]>::to_vec).collect();
        let gens = if rows.is_empty() {
            Matrix::zeros(0, ambient)
        } else {
            Matrix::from_rows(rows)
        };
        Subspace { ambient, gens }
    }

    /// Wraps a matrix that is already in reduced row echelon form with no
    /// zero rows. Used by the Grassmannian enumerator, which produces
    /// canonical forms directly.
    pub(crate) fn from_rref_unchecked(gens: Matrix<F>) -> Self {
        debug_assert_eq!(gens.clone().rref_in_place(), gens.rows());
        debug_assert_eq!(
            {
                let mut copy = gens.clone();
                copy.rref_in_place();
                copy
            },
            gens
        );
        Subspace {
            ambient: gens.cols(),
            gens,
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            gens: Matrix::zeros(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            gens: Matrix::identity(ambient),
        }
    }

    pub fn dim(&self) -> usize {
        self.gens.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// The canonical generator matrix, `dim` rows in reduced row echelon form.
    pub fn generators(&self) -> &Matrix<F> {
        &self.gens
    }

    pub fn contains_vector(&self, v: &[F]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let stacked = self.gens.vstack(&Matrix::from_rows(vec![v.to_vec()]));
        stacked.rank() == self.dim()
    }

    pub fn is_subspace_of(&self, other: &Subspace<F>) -> bool {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        self.gens.vstack(&other.gens).rank() == other.dim()
    }

    pub fn sum(&self, other: &Subspace<F>) -> Subspace<F> {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        Subspace::from_generators(self.gens.vstack(&other.gens))
    }

    /// Intersection, computed from the left kernel of the stacked generators:
    /// a relation a*A + b*B = 0 exhibits the intersection vector a*A.
    pub fn intersect(&self, other: &Subspace<F>) -> Subspace<F> {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let stacked = self.gens.vstack(&other.gens);
        let kernel = stacked.left_kernel();
        let mut rows = Vec::with_capacity(kernel.rows());
        for k in 0..kernel.rows() {
            let mut v = vec![F::zero(); self.ambient];
            for r in 0..self.dim() {
                let a = kernel[(k, r)];
                if a.is_zero() {
                    continue;
                }
                for (c, entry) in v.iter_mut().enumerate() {
                    *entry = *entry + a * self.gens[(r, c)];
                }
            }
            rows.push(v);
        }
        let gens = if rows.is_empty() {
            Matrix::zeros(0, self.ambient)
        } else {
            Matrix::from_rows(rows)
        };
        Subspace::from_generators(gens)
    }
}

impl<F: Field> fmt::Display for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.gens)
    }
}

impl<F: Field> fmt::Debug for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dim {} in F^{}\n{}", self.dim(), self.ambient, self.gens)
    }
}

/// A complete flag of `F^m`: the ordered basis `v_1 .. v_m` whose prefix of
/// length `k` spans the flag member `W_k`.
#[derive(Clone, PartialEq, Eq)]
pub struct FlagSpec<F> {
    basis: Matrix<F>,
}

impl<F: Field> fmt::Debug for FlagSpec<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "flag basis\n{}", self.basis)
    }
}

impl<F: Field> FlagSpec<F> {
    /// The standard flag: `W_k` spanned by the first `k` canonical basis
    /// vectors.
    pub fn standard(m: usize) -> Self {
        FlagSpec {
            basis: Matrix::identity(m),
        }
    }

    /// A flag from an arbitrary ordered basis (rows). Fails if the rows do
    /// not span.
    pub fn from_basis(basis: Matrix<F>) -> Result<Self, ExactLaError> {
        if basis.rows() != basis.cols() || basis.rank() != basis.rows() {
            return Err(ExactLaError::RankDeficient);
        }
        Ok(FlagSpec { basis })
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    /// The flag member `W_k`, spanned by the first `k` basis vectors.
    pub fn prefix(&self, k: usize) -> Subspace<F> {
        assert!(k <= self.ambient_dim(), "prefix beyond the ambient space");
        let rows: Vec<Vec<F>> = self.basis.row_vecs().take(k).map(<[F]>::to_vec).collect();
        let m = if rows.is_empty() {
            Matrix::zeros(0, self.ambient_dim())
        } else {
            Matrix::from_rows(rows)
        };
        Subspace::from_generators(m)
    }
}

/// The standard flag on `F^m`.
pub fn flag_l<F: Field>(m: usize) -> FlagSpec<F> {
    FlagSpec::standard(m)
}

/// The flag on `E + S` that lists the `E`-basis first: members are
/// `F_i + 0` for `i <= N`, then `E + T_(i-N)`.
pub fn flag_d<F: Field>(f: &FlagSpec<F>, t: &FlagSpec<F>) -> FlagSpec<F> {
    stacked_flag(f, t, true)
}

/// The flag on `E + S` that lists the `S`-basis first: members are
/// `0 + T_i` for `i <= s`, then `F_(i-s) + S`.
pub fn flag_b<F: Field>(f: &FlagSpec<F>, t: &FlagSpec<F>) -> FlagSpec<F> {
    stacked_flag(f, t, false)
}

fn stacked_flag<F: Field>(f: &FlagSpec<F>, t: &FlagSpec<F>, e_first: bool) -> FlagSpec<F> {
    let n = f.ambient_dim();
    let s = t.ambient_dim();
    let m = n + s;
    let mut rows: Vec<Vec<F>> = Vec::with_capacity(m);
    let push_e = |rows: &mut Vec<Vec<F>>| {
        for r in f.basis.row_vecs() {
            let mut v = r.to_vec();
            v.extend(std::iter::repeat_n(F::zero(), s));
            rows.push(v);
        }
    };
    let push_s = |rows: &mut Vec<Vec<F>>| {
        for r in t.basis.row_vecs() {
            let mut v = vec![F::zero(); n];
            v.extend_from_slice(r);
            rows.push(v);
        }
    };
    if e_first {
        push_e(&mut rows);
        push_s(&mut rows);
    } else {
        push_s(&mut rows);
        push_e(&mut rows);
    }
    FlagSpec {
        basis: Matrix::from_rows(rows),
    }
}

/// A pseudo-random complete flag over a finite field, deterministic in the
/// seed. Used to check that point counts do not depend on the flag.
pub fn scrambled_flag<F: FiniteField>(m: usize, seed: u64) -> FlagSpec<F> {
    let elems = F::elements();
    let mut rng = SplitMix64::new(seed);
    loop {
        let rows: Vec<Vec<F>> = (0..m)
            .map(|_| {
                (0..m)
                    .map(|_| elems[rng.below(F::ORDER) as usize])
                    .collect()
            })
            .collect();
        let basis = Matrix::from_rows(rows);
        if basis.rank() == m {
            return FlagSpec { basis };
        }
    }
}

/// `P + 0` inside `E + S`: generators padded with `s` zero coordinates.
pub fn embed_h<F: Field>(p: &Subspace<F>, s: usize) -> Subspace<F> {
    let n = p.ambient_dim();
    let rows: Vec<Vec<F>> = p
        .generators()
        .row_vecs()
        .map(|r| {
            let mut v = r.to_vec();
            v.extend(std::iter::repeat_n(F::zero(), s));
            v
        })
        .collect();
    let m = if rows.is_empty() {
        Matrix::zeros(0, n + s)
    } else {
        Matrix::from_rows(rows)
    };
    Subspace::from_generators(m)
}

/// `P + S` inside `E + S`: padded generators plus the `S` block, so the
/// dimension grows by `s`.
pub fn embed_v<F: Field>(p: &Subspace<F>, s: usize) -> Subspace<F> {
    let n = p.ambient_dim();
    let padded = embed_h(p, s);
    let mut block = Matrix::zeros(s, n + s);
    for i in 0..s {
        block[(i, n + i)] = F::one();
    }
    Subspace::from_generators(padded.generators().vstack(&block))
}

/// Membership of `P` in the Schubert variety of `lambda` relative to `flag`,
/// tested through the rank form of the defining conditions:
/// `dim(P + W_(c+i-lambda_i)) <= N - lambda_i` for every `i` in `1..=d`.
///
/// Conditions with `lambda_i = 0` hold automatically and are skipped.
pub fn schubert_membership<F: Field>(
    p: &Subspace<F>,
    lambda: &Partition,
    flag: &FlagSpec<F>,
) -> Result<bool, ExactLaError> {
    let (d, c) = check_membership_shapes(p, lambda, flag)?;
    let n = d + c;
    for (i, &part) in lambda.parts().iter().enumerate() {
        if part == 0 {
            continue;
        }
        let k = c + (i + 1) - part;
        let rows: Vec<Vec<F>> = flag.basis.row_vecs().take(k).map(<[F]>::to_vec).collect();
        let prefix = if rows.is_empty() {
            Matrix::zeros(0, n)
        } else {
            Matrix::from_rows(rows)
        };
        let stacked = p.generators().vstack(&prefix);
        if stacked.rank() > n - part {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The same membership, through the intersection form
/// `dim(P meet W_(c+i-lambda_i)) >= i`, with the intersection dimensions
/// read off a flag profile. An independent route used to cross-check
/// [`schubert_membership`].
pub fn schubert_membership_by_intersection<F: Field>(
    p: &Subspace<F>,
    lambda: &Partition,
    flag: &FlagSpec<F>,
) -> Result<bool, ExactLaError> {
    let (d, c) = check_membership_shapes(p, lambda, flag)?;
    let _ = d;
    let profile = flag_profile(p, flag)?;
    Ok(lambda
        .parts()
        .iter()
        .enumerate()
        .all(|(i, &part)| profile[c + (i + 1) - part] > i))
}

/// `dim(P meet W_k)` for every `k = 0..=m` in one elimination pass: express the
/// generators in flag coordinates and reduce them to distinct trailing
/// pivots; a vector lies in `W_k` exactly when its trailing coordinate index
/// is at most `k`.
pub fn flag_profile<F: Field>(
    p: &Subspace<F>,
    flag: &FlagSpec<F>,
) -> Result<Vec<usize>, ExactLaError> {
    let m = flag.ambient_dim();
    if p.ambient_dim() != m {
        return Err(ExactLaError::DimensionMismatch {
            what: "ambient dimension",
            expected: m,
            found: p.ambient_dim(),
        });
    }
    let inv = flag
        .basis
        .inverse()
        .expect("flag bases are invertible by construction");
    let mut coords = p.generators().mul(&inv);

    // Reduce to pairwise distinct trailing positions.
    let trailing = |row: &[F]| row.iter().rposition(|x| !x.is_zero());
    let rows = coords.rows();
    let mut trails: Vec<Option<usize>> = (0..rows).map(|r| trailing(coords.row(r))).collect();
    loop {
        let mut changed = false;
        for a in 0..rows {
            for b in 0..rows {
                if a == b {
                    continue;
                }
                if let (Some(ta), Some(tb)) = (trails[a], trails[b]) {
                    if ta == tb {
                        let factor = coords[(b, tb)] * coords[(a, ta)].inv();
                        for c in 0..m {
                            let sub = factor * coords[(a, c)];
                            coords[(b, c)] = coords[(b, c)] - sub;
                        }
                        trails[b] = trailing(coords.row(b));
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }

    let mut profile = vec![0usize; m + 1];
    for t in trails.into_iter().flatten() {
        for entry in profile.iter_mut().skip(t + 1) {
            *entry += 1;
        }
    }
    Ok(profile)
}

fn check_membership_shapes<F: Field>(
    p: &Subspace<F>,
    lambda: &Partition,
    flag: &FlagSpec<F>,
) -> Result<(usize, usize), ExactLaError> {
    let bx = lambda.box_shape();
    let (d, c) = (bx.rows(), bx.cols());
    if p.dim() != d {
        return Err(ExactLaError::DimensionMismatch {
            what: "subspace dimension",
            expected: d,
            found: p.dim(),
        });
    }
    if p.ambient_dim() != d + c || flag.ambient_dim() != d + c {
        return Err(ExactLaError::DimensionMismatch {
            what: "ambient dimension",
            expected: d + c,
            found: if p.ambient_dim() != d + c {
                p.ambient_dim()
            } else {
                flag.ambient_dim()
            },
        });
    }
    Ok((d, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::enumerate_grassmannian;
    use crate::exactla::field::Gf;
    use crate::partitions::BoxShape;

    type F2 = Gf<2>;

    fn unit_line(ambient: usize, axis: usize) -> Subspace<F2> {
        let mut m = Matrix::zeros(1, ambient);
        m[(0, axis)] = F2::one();
        Subspace::from_generators(m)
    }

    fn part(d: usize, c: usize, parts: &[usize]) -> Partition {
        Partition::new(BoxShape::new(d, c).unwrap(), parts).unwrap()
    }

    #[test]
    fn membership_against_the_standard_flag() {
        let flag = flag_l::<F2>(3);
        // The first axis is the flag line itself.
        assert!(schubert_membership(&unit_line(3, 0), &part(1, 2, &[2]), &flag).unwrap());
        // The third axis is not inside W_2.
        assert!(!schubert_membership(&unit_line(3, 2), &part(1, 2, &[1]), &flag).unwrap());
    }

    #[test]
    fn membership_counts_lines_in_a_plane() {
        let flag = flag_l::<F2>(3);
        let lambda = part(1, 2, &[1]);
        let mut hits = 0;
        let mut total = 0;
        for p in enumerate_grassmannian::<F2>(1, 3, 100).unwrap() {
            total += 1;
            if schubert_membership(&p, &lambda, &flag).unwrap() {
                assert!(p.is_subspace_of(&flag.prefix(2)));
                hits += 1;
            }
        }
        assert_eq!(total, 7);
        assert_eq!(hits, 3);
    }

    #[test]
    fn membership_extremes() {
        // The zero partition accepts everything; the full box accepts only
        // the flag member itself.
        let flag = flag_l::<F2>(4);
        let zero = part(2, 2, &[0, 0]);
        let full = part(2, 2, &[2, 2]);
        let mut full_hits = Vec::new();
        for p in enumerate_grassmannian::<F2>(2, 4, 100).unwrap() {
            assert!(schubert_membership(&p, &zero, &flag).unwrap());
            if schubert_membership(&p, &full, &flag).unwrap() {
                full_hits.push(p);
            }
        }
        assert_eq!(full_hits.len(), 1);
        assert_eq!(full_hits[0], flag.prefix(2));
    }

    #[test]
    fn membership_shape_errors() {
        let flag = flag_l::<F2>(3);
        let wrong_dim = flag.prefix(2);
        assert!(matches!(
            schubert_membership(&wrong_dim, &part(1, 2, &[1]), &flag),
            Err(ExactLaError::DimensionMismatch { .. })
        ));
        let wrong_flag = flag_l::<F2>(4);
        assert!(matches!(
            schubert_membership(&unit_line(3, 0), &part(1, 2, &[1]), &wrong_flag),
            Err(ExactLaError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn stacked_flag_basis_orders() {
        // With dim E = 2 and dim S = 1, listing E first gives (f1, f2, t1);
        // listing S first gives (t1, f1, f2).
        let f = flag_l::<F2>(2);
        let t = flag_l::<F2>(1);
        let d_flag = flag_d(&f, &t);
        assert_eq!(
            d_flag.basis(),
            &Matrix::from_int_rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])
        );
        let b_flag = flag_b(&f, &t);
        assert_eq!(
            b_flag.basis(),
            &Matrix::from_int_rows(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]])
        );

        // Prefix N of the E-first flag is E + 0; prefix s of the S-first
        // flag is 0 + S.
        let e_padded = Subspace::from_generators(Matrix::from_int_rows(&[&[1, 0, 0], &[0, 1, 0]]));
        assert_eq!(d_flag.prefix(2), e_padded);
        let s_padded = Subspace::from_generators(Matrix::from_int_rows(&[&[0, 0, 1]]));
        assert_eq!(b_flag.prefix(1), s_padded);
    }

    #[test]
    fn from_basis_rejects_rank_deficiency() {
        let dep = Matrix::<F2>::from_int_rows(&[&[1, 1], &[1, 1]]);
        assert!(matches!(
            FlagSpec::from_basis(dep),
            Err(ExactLaError::RankDeficient)
        ));
        assert!(FlagSpec::from_basis(Matrix::<F2>::identity(3)).is_ok());
    }

    #[test]
    fn embeddings() {
        let p = unit_line(2, 0);
        let h = embed_h(&p, 1);
        assert_eq!(h.dim(), 1);
        assert_eq!(h.ambient_dim(), 3);
        assert_eq!(h.generators(), &Matrix::from_int_rows(&[&[1, 0, 0]]));

        let v = embed_v(&p, 1);
        assert_eq!(v.dim(), 2);
        assert_eq!(
            v.generators(),
            &Matrix::from_int_rows(&[&[1, 0, 0], &[0, 0, 1]])
        );

        // The zero space maps to 0 + S.
        let z = embed_v(&Subspace::<F2>::zero(2), 2);
        assert_eq!(z.dim(), 2);
        assert_eq!(
            z.generators(),
            &Matrix::from_int_rows(&[&[0, 0, 1, 0], &[0, 0, 0, 1]])
        );
    }

    #[test]
    fn sum_and_intersection() {
        let a =
            Subspace::from_generators(Matrix::<F2>::from_int_rows(&[&[1, 0, 0, 0], &[0, 1, 0, 0]]));
        let b =
            Subspace::from_generators(Matrix::<F2>::from_int_rows(&[&[0, 1, 0, 0], &[0, 0, 1, 0]]));
        assert_eq!(a.sum(&b).dim(), 3);
        let meet = a.intersect(&b);
        assert_eq!(meet.dim(), 1);
        assert!(meet.contains_vector(&[F2::zero(), F2::one(), F2::zero(), F2::zero()]));

        // dim(A) + dim(B) = dim(A + B) + dim(A meet B) on random pairs.
        let mut rng = SplitMix64::new(3);
        for _ in 0..50 {
            let rand_space = |rng: &mut SplitMix64| {
                let rows: Vec<Vec<F2>> = (0..2)
                    .map(|_| (0..4).map(|_| F2::from_int(rng.below(2) as i64)).collect())
                    .collect();
                Subspace::from_generators(Matrix::from_rows(rows))
            };
            let x = rand_space(&mut rng);
            let y = rand_space(&mut rng);
            assert_eq!(x.dim() + y.dim(), x.sum(&y).dim() + x.intersect(&y).dim());
        }
    }

    #[test]
    fn flag_profile_reads_intersection_dims() {
        let flag = flag_l::<F2>(4);
        let p =
            Subspace::from_generators(Matrix::<F2>::from_int_rows(&[&[1, 0, 0, 0], &[0, 0, 1, 1]]));
        // W_1 contains the first generator; the second needs coordinate 4.
        assert_eq!(flag_profile(&p, &flag).unwrap(), vec![0, 1, 1, 1, 2]);
        for k in 0..=4 {
            assert_eq!(
                flag_profile(&p, &flag).unwrap()[k],
                p.intersect(&flag.prefix(k)).dim()
            );
        }
    }

    #[test]
    fn scrambled_flag_is_deterministic_and_complete() {
        let a = scrambled_flag::<F2>(4, 9);
        let b = scrambled_flag::<F2>(4, 9);
        assert_eq!(a.basis(), b.basis());
        assert_eq!(a.basis().rank(), 4);
        assert_ne!(a.basis(), flag_l::<F2>(4).basis());
    }
}
