//! Brute-force verification of the embedding identities over small finite
//! fields: image and preimage of every Schubert variety are recomputed by
//! exhaustive enumeration and compared against the diagram surgeries, and
//! the chart-level transversality statements are checked as disjointness of
//! coordinate conditions.
//!
//! Every check is pure and parameterized by `(d, c, s, q)` plus a partition;
//! a report either says `verified` or carries a witness that reproduces the
//! failure through public operations.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::charts::{zero_pattern, MaskedGrid};
use crate::chow::{Embedding, EmbeddingKind};
use crate::exactla::{
    embed_h, embed_v, enumerate_grassmannian, flag_b, flag_d, flag_l, gaussian_binomial,
    schubert_membership, scrambled_flag, ExactLaError, FiniteField, FlagSpec, Gf, Subspace,
};
use crate::partitions::{BoxShape, Partition};

/// Default cap on the number of subspaces a single check may enumerate.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Field orders the dispatcher knows how to instantiate.
pub const SUPPORTED_FIELD_ORDERS: [u64; 6] = [2, 3, 5, 7, 11, 13];

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Claim {
    /// Pushing forward along `h` maps the Schubert variety of `lambda` onto
    /// the variety of `lambda + s` for the E-first flag.
    Prop1,
    /// Pulling back along `h`: empty preimage when `mu_1 > c`, otherwise the
    /// preimage is the variety of `mu` in the source.
    Prop2,
    /// Pushing forward along `v` maps the variety of `lambda` onto the
    /// variety of `c^s lambda` for the S-first flag.
    Prop3,
    /// Pulling back along `v`: empty when `mu_(d+1) >= 1`, otherwise the
    /// truncated partition's variety.
    Prop4,
    /// In the chart of `mu`, the image of `h` and the Schubert variety are
    /// cut out by disjoint coordinate sets.
    TransvH,
    /// Same for `v`, with the last `s` columns in place of the first `s`
    /// rows.
    TransvV,
    /// Point counts match the cell sum and do not depend on the flag.
    Counts,
}

impl Claim {
    pub const ALL: [Claim; 7] = [
        Claim::Prop1,
        Claim::Prop2,
        Claim::Prop3,
        Claim::Prop4,
        Claim::TransvH,
        Claim::TransvV,
        Claim::Counts,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Claim::Prop1 => "prop1",
            Claim::Prop2 => "prop2",
            Claim::Prop3 => "prop3",
            Claim::Prop4 => "prop4",
            Claim::TransvH => "transv-h",
            Claim::TransvV => "transv-v",
            Claim::Counts => "counts",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Claim {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, VerifyError> {
        Claim::ALL
            .iter()
            .copied()
            .find(|c| c.name() == s)
            .ok_or_else(|| VerifyError::InvalidParams(format!("unknown claim {s:?}")))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum VerifyError {
    BudgetExceeded { required: u128, budget: u64 },
    UnsupportedFieldOrder(u64),
    InvalidParams(String),
}

impl fmt::Display for VerifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyError::BudgetExceeded { required, budget } => write!(
                f,
                "budget exceeded: {required} subspaces required, budget {budget}"
            ),
            VerifyError::UnsupportedFieldOrder(q) => write!(
                f,
                "unsupported field order {q}; supported: {:?}",
                SUPPORTED_FIELD_ORDERS
            ),
            VerifyError::InvalidParams(msg) => write!(f, "invalid parameters: {msg}"),
        }
    }
}

impl std::error::Error for VerifyError {}

impl From<ExactLaError> for VerifyError {
    fn from(e: ExactLaError) -> Self {
        match e {
            ExactLaError::BudgetExceeded { required, budget } => {
                VerifyError::BudgetExceeded { required, budget }
            }
            other => VerifyError::InvalidParams(other.to_string()),
        }
    }
}

/// The parameter tuple a report was produced for. `s` and `q` are absent
/// for checks that do not use them.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParamSet {
    pub d: usize,
    pub c: usize,
    pub s: Option<usize>,
    pub q: Option<u64>,
    pub partition: Vec<usize>,
}

impl fmt::Display for ParamSet {
    /// Space-separated `key=value` fields, e.g. `d=3 c=6 s=2 q=2 p=5,3,2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d={} c={}", self.d, self.c)?;
        if let Some(s) = self.s {
            write!(f, " s={s}")?;
        }
        if let Some(q) = self.q {
            write!(f, " q={q}")?;
        }
        let parts = self
            .partition
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",");
        write!(f, " p={parts}")
    }
}

/// Evidence reproducing a failed check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Witness {
    /// A subspace in exactly one of the two sets being compared; the
    /// generator matrix is in canonical form.
    Subspace { side: String, generators: String },
    /// A chart coordinate claimed zero by both conditions at once.
    PatternOverlap { row: usize, col: usize },
    /// Two counts that were expected to agree.
    CountMismatch { left: u128, right: u128 },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Subspace { side, generators } => {
                write!(f, "{side}:\n{generators}")
            }
            Witness::PatternOverlap { row, col } => {
                write!(f, "overlapping coordinate at row {row}, column {col}")
            }
            Witness::CountMismatch { left, right } => write!(f, "{left} != {right}"),
        }
    }
}

/// Outcome of one check. A verified status never carries a witness.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Status {
    Verified,
    Counterexample(Witness),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Counts {
    /// Points (or chart cells) examined in total.
    pub examined: u128,
    /// Size of the left-hand side of the comparison.
    pub lhs: u128,
    /// Size of the right-hand side.
    pub rhs: u128,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerificationReport {
    pub claim: Claim,
    pub params: ParamSet,
    pub status: Status,
    pub counts: Counts,
}

impl VerificationReport {
    pub fn verified(&self) -> bool {
        matches!(self.status, Status::Verified)
    }

    /// One tab-separated record: claim, params, status, counts.
    pub fn record(&self) -> String {
        let status = match self.status {
            Status::Verified => "verified",
            Status::Counterexample(_) => "counterexample",
        };
        format!(
            "{}\t{}\t{}\texamined={} lhs={} rhs={}",
            self.claim, self.params, status, self.counts.examined, self.counts.lhs, self.counts.rhs
        )
    }
}

/// Instantiates `$fun::<Gf<q>>($args...)` for a runtime field order.
macro_rules! dispatch_field {
    ($q:expr, $fun:ident($($arg:expr),* $(,)?)) => {
        match $q {
            2 => $fun::<Gf<2>>($($arg),*),
            3 => $fun::<Gf<3>>($($arg),*),
            5 => $fun::<Gf<5>>($($arg),*),
            7 => $fun::<Gf<7>>($($arg),*),
            11 => $fun::<Gf<11>>($($arg),*),
            13 => $fun::<Gf<13>>($($arg),*),
            other => Err(VerifyError::UnsupportedFieldOrder(other)),
        }
    };
}

fn charge_budget(sizes: &[(usize, usize)], q: u64, budget: u64) -> Result<u128, VerifyError> {
    let mut required: u128 = 0;
    for &(d, m) in sizes {
        required += gaussian_binomial(m, d, q);
    }
    if required > budget as u128 {
        return Err(VerifyError::BudgetExceeded { required, budget });
    }
    Ok(required)
}

fn set_comparison_report<F: FiniteField>(
    claim: Claim,
    params: ParamSet,
    sides: (&str, &str),
    lhs: BTreeSet<Subspace<F>>,
    rhs: BTreeSet<Subspace<F>>,
    examined: u128,
) -> VerificationReport {
    let counts = Counts {
        examined,
        lhs: lhs.len() as u128,
        rhs: rhs.len() as u128,
    };
    let status = if lhs == rhs {
        Status::Verified
    } else {
        let odd = lhs
            .symmetric_difference(&rhs)
            .next()
            .expect("sets differ, so the symmetric difference is nonempty");
        let side = if lhs.contains(odd) { sides.0 } else { sides.1 };
        Status::Counterexample(Witness::Subspace {
            side: format!("in the {side} only"),
            generators: odd.generators().to_string(),
        })
    };
    VerificationReport {
        claim,
        params,
        status,
        counts,
    }
}

/// Image of the Schubert variety under `P -> P + 0` versus the variety of
/// the column-shifted partition, both by exhaustive enumeration.
pub fn check_prop1(
    lambda: &Partition,
    s: usize,
    q: u64,
    budget: u64,
) -> Result<VerificationReport, VerifyError> {
    dispatch_field!(q, check_prop1_in(lambda, s, budget))
}

fn check_prop1_in<F: FiniteField>(
    lambda: &Partition,
    s: usize,
    budget: u64,
) -> Result<VerificationReport, VerifyError> {
    let bx = lambda.box_shape();
    let (d, c) = (bx.rows(), bx.cols());
    let n = d + c;
    let examined = charge_budget(&[(d, n), (d, n + s)], F::ORDER, budget)?;

    let flag_f = flag_l::<F>(n);
    let flag_dd = flag_d(&flag_f, &flag_l::<F>(s));
    let shifted = Embedding::h(bx, s)
        .and_then(|e| e.push(lambda))
        .map_err(|e| VerifyError::InvalidParams(e.to_string()))?;

    let mut lhs = BTreeSet::new();
    for p in enumerate_grassmannian::<F>(d, n, budget)? {
        if schubert_membership(&p, lambda, &flag_f)? {
            lhs.insert(embed_h(&p, s));
        }
    }
    let mut rhs = BTreeSet::new();
    for q_sub in enumerate_grassmannian::<F>(d, n + s, budget)? {
        if schubert_membership(&q_sub, &shifted, &flag_dd)? {
            rhs.insert(q_sub);
        }
    }

    Ok(set_comparison_report(
        Claim::Prop1,
        ParamSet {
            d,
            c,
            s: Some(s),
            q: Some(F::ORDER),
            partition: lambda.parts().to_vec(),
        },
        ("image", "target variety"),
        lhs,
        rhs,
        examined,
    ))
}

/// Preimage of the Schubert variety under `P -> P + 0`: empty when the kill
/// condition `mu_1 > c` holds, otherwise equal to the variety of `mu` in the
/// source Grassmannian.
pub fn check_prop2(
    mu: &Partition,
    s: usize,
    q: u64,
    budget: u64,
) -> Result<VerificationReport, VerifyError> {
    dispatch_field!(q, check_prop2_in(mu, s, budget))
}

fn check_prop2_in<F: FiniteField>(
    mu: &Partition,
    s: usize,
    budget: u64,
) -> Result<VerificationReport, VerifyError> {
    let target = mu.box_shape();
    let embedding = Embedding::with_target(EmbeddingKind::H, target, s)
        .map_err(|e| VerifyError::InvalidParams(e.to_string()))?;
    let source = embedding.source_box();
    let (d, c) = (source.rows(), source.cols());
    let n = d + c;
    let examined = charge_budget(&[(d, n)], F::ORDER, budget)?;

    let flag_f = flag_l::<F>(n);
    let flag_bb = flag_b(&flag_f, &flag_l::<F>(s));

    let mut preimage = BTreeSet::new();
    for p in enumerate_grassmannian::<F>(d, n, budget)? {
        if schubert_membership(&embed_h(&p, s), mu, &flag_bb)? {
            preimage.insert(p);
        }
    }

    let pulled = embedding
        .pull(mu)
        .map_err(|e| VerifyError::InvalidParams(e.to_string()))?;
    let mut expected = BTreeSet::new();
    if let Some((truncated, _)) = pulled.terms().next() {
        for p in enumerate_grassmannian::<F>(d, n, budget)? {
            if schubert_membership(&p, truncated, &flag_f)? {
                expected.insert(p);
            }
        }
    }

    Ok(set_comparison_report(
        Claim::Prop2,
        ParamSet {
            d,
            c,
            s: Some(s),
            q: Some(F::ORDER),
            partition: mu.parts().to_vec(),
        },
        ("preimage", "source variety"),
        preimage,
        expected,
        examined,
    ))
}

/// Image of the Schubert variety under `P -> P + S` versus the variety of
/// the row-extended partition for the S-first flag.
pub fn check_prop3(
    lambda: &Partition,
    s: usize,
    q: u64,
    budget: u64,
) -> Result<VerificationReport, VerifyError> {
    dispatch_field!(q, check_prop3_in(lambda, s, budget))
}

fn check_prop3_in<F: FiniteField>(
    lambda: &Partition,
    s: usize,
    budget: u64,
) -> Result<VerificationReport, VerifyError> {
    let bx = lambda.box_shape();
    let (d, c) = (bx.rows(), bx.cols());
    let n = d + c;
    let examined = charge_budget(&[(d, n), (d + s, n + s)], F::ORDER, budget)?;

    let flag_f = flag_l::<F>(n);
    let flag_bb = flag_b(&flag_f, &flag_l::<F>(s));
    let extended = Embedding::v(bx, s)
        .and_then(|e| e.push(lambda))
        .map_err(|e| VerifyError::InvalidParams(e.to_string()))?;

    let mut lhs = BTreeSet::new();
    for p in enumerate_grassmannian::<F>(d, n, budget)? {
        if schubert_membership(&p, lambda, &flag_f)? {
            lhs.insert(embed_v(&p, s));
        }
    }
    let mut rhs = BTreeSet::new();
    for q_sub in enumerate_grassmannian::<F>(d + s, n + s, budget)? {
        if schubert_membership(&q_sub, &extended, &flag_bb)? {
            rhs.insert(q_sub);
        }
    }

    Ok(set_comparison_report(
        Claim::Prop3,
        ParamSet {
            d,
            c,
            s: Some(s),
            q: Some(F::ORDER),
            partition: lambda.parts().to_vec(),
        },
        ("image", "target variety"),
        lhs,
        rhs,
        examined,
    ))
}

/// Preimage of the Schubert variety under `P -> P + S`: empty when
/// `mu_(d+1) >= 1`, otherwise the truncated partition's variety.
pub fn check_prop4(
    mu: &Partition,
    s: usize,
    q: u64,
    budget: u64,
) -> Result<VerificationReport, VerifyError> {
    dispatch_field!(q, check_prop4_in(mu, s, budget))
}

fn check_prop4_in<F: FiniteField>(
    mu: &Partition,
    s: usize,
    budget: u64,
) -> Result<VerificationReport, VerifyError> {
    let target = mu.box_shape();
    let embedding = Embedding::with_target(EmbeddingKind::V, target, s)
        .map_err(|e| VerifyError::InvalidParams(e.to_string()))?;
    let source = embedding.source_box();
    let (d, c) = (source.rows(), source.cols());
    let n = d + c;
    let examined = charge_budget(&[(d, n)], F::ORDER, budget)?;

    let flag_f = flag_l::<F>(n);
    let flag_dd = flag_d(&flag_f, &flag_l::<F>(s));

    let mut preimage = BTreeSet::new();
    for p in enumerate_grassmannian::<F>(d, n, budget)? {
        if schubert_membership(&embed_v(&p, s), mu, &flag_dd)? {
            preimage.insert(p);
        }
    }

    let pulled = embedding
        .pull(mu)
        .map_err(|e| VerifyError::InvalidParams(e.to_string()))?;
    let mut expected = BTreeSet::new();
    if let Some((truncated, _)) = pulled.terms().next() {
        for p in enumerate_grassmannian::<F>(d, n, budget)? {
            if schubert_membership(&p, truncated, &flag_f)? {
                expected.insert(p);
            }
        }
    }

    Ok(set_comparison_report(
        Claim::Prop4,
        ParamSet {
            d,
            c,
            s: Some(s),
            q: Some(F::ORDER),
            partition: mu.parts().to_vec(),
        },
        ("preimage", "source variety"),
        preimage,
        expected,
        examined,
    ))
}

/// The two coordinate conditions in the chart of `mu` for the `h` case: the
/// first `s` chart rows (membership in the image of `h`) and the vanishing
/// pattern of `mu`. Requires `mu_1 <= c` (the surviving case).
///
/// Verified means the two sets are disjoint and their complement has exactly
/// `c*d - |mu|` free cells, so the intersection is a coordinate subspace of
/// the expected dimension.
pub fn check_transversality_h(mu: &Partition, s: usize) -> Result<VerificationReport, VerifyError> {
    let (report, _) = transversality_h(mu, s)?;
    Ok(report)
}

/// The combined mask (image condition plus vanishing pattern) for the `h`
/// case, as it would appear in a chart matrix.
pub fn transversality_h_grid(mu: &Partition, s: usize) -> Result<MaskedGrid, VerifyError> {
    let (_, grid) = transversality_h(mu, s)?;
    Ok(grid)
}

fn transversality_h(
    mu: &Partition,
    s: usize,
) -> Result<(VerificationReport, MaskedGrid), VerifyError> {
    let target = mu.box_shape();
    let embedding = Embedding::with_target(EmbeddingKind::H, target, s)
        .map_err(|e| VerifyError::InvalidParams(e.to_string()))?;
    let source = embedding.source_box();
    let (d, c) = (source.rows(), source.cols());
    if mu.parts()[0] > c {
        return Err(VerifyError::InvalidParams(format!(
            "mu_1 = {} exceeds c = {c}; the pullback vanishes and there is nothing to intersect",
            mu.parts()[0]
        )));
    }

    // Chart matrices for the target Grassmannian are (c+s) x d.
    let rows = c + s;
    let image_cells: BTreeSet<(usize, usize)> = (1..=s)
        .flat_map(|r| (1..=d).map(move |col| (r, col)))
        .collect();
    let pattern = zero_pattern(mu);

    let mut grid = MaskedGrid::new(rows, d);
    for &(r, col) in &image_cells {
        grid.set(r, col);
    }
    let overlap = image_cells.intersection(pattern.entries()).next().copied();
    for &(r, col) in pattern.entries() {
        grid.set(r, col);
    }

    let params = ParamSet {
        d,
        c,
        s: Some(s),
        q: None,
        partition: mu.parts().to_vec(),
    };
    let counts = Counts {
        examined: (rows * d) as u128,
        lhs: image_cells.len() as u128,
        rhs: pattern.len() as u128,
    };
    let status = match overlap {
        Some((row, col)) => Status::Counterexample(Witness::PatternOverlap { row, col }),
        None if grid.free_count() != c * d - mu.weight() => {
            Status::Counterexample(Witness::CountMismatch {
                left: grid.free_count() as u128,
                right: (c * d - mu.weight()) as u128,
            })
        }
        None => Status::Verified,
    };
    Ok((
        VerificationReport {
            claim: Claim::TransvH,
            params,
            status,
            counts,
        },
        grid,
    ))
}

/// The `v`-case analogue of [`check_transversality_h`]: the last `s` chart
/// columns against the vanishing pattern of `mu`, in the `c x (d+s)` chart.
/// Requires `mu_(d+1) = 0`.
pub fn check_transversality_v(mu: &Partition, s: usize) -> Result<VerificationReport, VerifyError> {
    let (report, _) = transversality_v(mu, s)?;
    Ok(report)
}

/// The combined mask for the `v` case.
pub fn transversality_v_grid(mu: &Partition, s: usize) -> Result<MaskedGrid, VerifyError> {
    let (_, grid) = transversality_v(mu, s)?;
    Ok(grid)
}

fn transversality_v(
    mu: &Partition,
    s: usize,
) -> Result<(VerificationReport, MaskedGrid), VerifyError> {
    let target = mu.box_shape();
    let embedding = Embedding::with_target(EmbeddingKind::V, target, s)
        .map_err(|e| VerifyError::InvalidParams(e.to_string()))?;
    let source = embedding.source_box();
    let (d, c) = (source.rows(), source.cols());
    if mu.parts()[d] >= 1 {
        return Err(VerifyError::InvalidParams(format!(
            "mu_{} = {} is nonzero; the pullback vanishes and there is nothing to intersect",
            d + 1,
            mu.parts()[d]
        )));
    }

    // Chart matrices for the target Grassmannian are c x (d+s).
    let cols = d + s;
    let image_cells: BTreeSet<(usize, usize)> = (d + 1..=d + s)
        .flat_map(|col| (1..=c).map(move |r| (r, col)))
        .collect();
    let pattern = zero_pattern(mu);

    let mut grid = MaskedGrid::new(c, cols);
    for &(r, col) in &image_cells {
        grid.set(r, col);
    }
    let overlap = image_cells.intersection(pattern.entries()).next().copied();
    for &(r, col) in pattern.entries() {
        grid.set(r, col);
    }

    let params = ParamSet {
        d,
        c,
        s: Some(s),
        q: None,
        partition: mu.parts().to_vec(),
    };
    let counts = Counts {
        examined: (c * cols) as u128,
        lhs: image_cells.len() as u128,
        rhs: pattern.len() as u128,
    };
    let status = match overlap {
        Some((row, col)) => Status::Counterexample(Witness::PatternOverlap { row, col }),
        None if grid.free_count() != c * d - mu.weight() => {
            Status::Counterexample(Witness::CountMismatch {
                left: grid.free_count() as u128,
                right: (c * d - mu.weight()) as u128,
            })
        }
        None => Status::Verified,
    };
    Ok((
        VerificationReport {
            claim: Claim::TransvV,
            params,
            status,
            counts,
        },
        grid,
    ))
}

/// Number of points of the Schubert variety of `lambda` over `F`, relative
/// to `flag`, by exhaustive enumeration of the whole Grassmannian.
pub fn count_schubert_points<F: FiniteField>(
    lambda: &Partition,
    flag: &FlagSpec<F>,
    budget: u64,
) -> Result<u128, VerifyError> {
    let bx = lambda.box_shape();
    let (d, n) = (bx.rows(), bx.ambient_dim());
    let mut count: u128 = 0;
    for p in enumerate_grassmannian::<F>(d, n, budget)? {
        if schubert_membership(&p, lambda, flag)? {
            count += 1;
        }
    }
    Ok(count)
}

/// The cell sum `sum over mu containing lambda of q^(cd - |mu|)`: every
/// Schubert cell inside the variety contributes the size of an affine space
/// of its dimension. Independent of the enumeration route.
pub fn cell_sum(lambda: &Partition, q: u64) -> u128 {
    let bx = lambda.box_shape();
    Partition::enumerate(bx, None)
        .into_iter()
        .filter(|mu| mu.contains(lambda))
        .map(|mu| {
            let mut acc: u128 = 1;
            for _ in 0..bx.area() - mu.weight() {
                acc = acc.checked_mul(q as u128).expect("cell sum overflow");
            }
            acc
        })
        .sum()
}

/// Counts the points of the Schubert variety for the standard flag and for
/// a scrambled flag, and compares both against the cell sum.
pub fn check_counts(
    lambda: &Partition,
    q: u64,
    budget: u64,
) -> Result<VerificationReport, VerifyError> {
    dispatch_field!(q, check_counts_in(lambda, budget))
}

fn check_counts_in<F: FiniteField>(
    lambda: &Partition,
    budget: u64,
) -> Result<VerificationReport, VerifyError> {
    let bx = lambda.box_shape();
    let (d, c) = (bx.rows(), bx.cols());
    let n = d + c;
    let examined = 2 * charge_budget(&[(d, n)], F::ORDER, budget)?;

    let standard = count_schubert_points::<F>(lambda, &flag_l::<F>(n), budget)?;
    let seed = 0x5eed ^ ((lambda.weight() as u64) << 16) ^ (n as u64);
    let scrambled = count_schubert_points::<F>(lambda, &scrambled_flag::<F>(n, seed), budget)?;
    let expected = cell_sum(lambda, F::ORDER);

    let params = ParamSet {
        d,
        c,
        s: None,
        q: Some(F::ORDER),
        partition: lambda.parts().to_vec(),
    };
    let counts = Counts {
        examined,
        lhs: standard,
        rhs: expected,
    };
    let status = if standard != expected {
        Status::Counterexample(Witness::CountMismatch {
            left: standard,
            right: expected,
        })
    } else if scrambled != expected {
        Status::Counterexample(Witness::CountMismatch {
            left: scrambled,
            right: expected,
        })
    } else {
        Status::Verified
    };
    Ok(VerificationReport {
        claim: Claim::Counts,
        params,
        status,
        counts,
    })
}

/// Runs one claim over every admissible partition of the `(d, c, s)` boxes.
pub fn sweep_claim(
    claim: Claim,
    d: usize,
    c: usize,
    s: usize,
    q: u64,
    budget: u64,
) -> Result<Vec<VerificationReport>, VerifyError> {
    let source = BoxShape::new(d, c).map_err(|e| VerifyError::InvalidParams(e.to_string()))?;
    let mut reports = Vec::new();
    match claim {
        Claim::Prop1 => {
            for lambda in Partition::enumerate(source, None) {
                reports.push(check_prop1(&lambda, s, q, budget)?);
            }
        }
        Claim::Prop2 => {
            let target = BoxShape::new(d, c + s).expect("valid box");
            for mu in Partition::enumerate(target, None) {
                reports.push(check_prop2(&mu, s, q, budget)?);
            }
        }
        Claim::Prop3 => {
            for lambda in Partition::enumerate(source, None) {
                reports.push(check_prop3(&lambda, s, q, budget)?);
            }
        }
        Claim::Prop4 => {
            let target = BoxShape::new(d + s, c).expect("valid box");
            for mu in Partition::enumerate(target, None) {
                reports.push(check_prop4(&mu, s, q, budget)?);
            }
        }
        Claim::TransvH => {
            let target = BoxShape::new(d, c + s).expect("valid box");
            for mu in Partition::enumerate(target, None) {
                if mu.parts()[0] <= c {
                    reports.push(check_transversality_h(&mu, s)?);
                }
            }
        }
        Claim::TransvV => {
            let target = BoxShape::new(d + s, c).expect("valid box");
            for mu in Partition::enumerate(target, None) {
                if mu.parts()[d] == 0 {
                    reports.push(check_transversality_v(&mu, s)?);
                }
            }
        }
        Claim::Counts => {
            for lambda in Partition::enumerate(source, None) {
                reports.push(check_counts(&lambda, q, budget)?);
            }
        }
    }
    Ok(reports)
}

/// The `(d, c, s, q)` tuples a claim sweeps when no parameters are given.
/// Enumeration-backed claims run over `d, c, s <= 2` with `q in {2, 3}`
/// plus degenerate shapes with `s = 3` (so `s > c` and `s > d` both occur);
/// the field-independent pattern checks run over `d, c, s <= 3`.
pub fn default_ranges(claim: Claim) -> Vec<(usize, usize, usize, u64)> {
    let mut out = Vec::new();
    match claim {
        Claim::Prop1 | Claim::Prop2 | Claim::Prop3 | Claim::Prop4 => {
            for q in [2u64, 3] {
                for d in 1..=2 {
                    for c in 0..=2 {
                        for s in 1..=2 {
                            out.push((d, c, s, q));
                        }
                    }
                }
            }
            // Degenerate shapes: the summand exceeds both box sides.
            out.push((1, 1, 3, 2));
            out.push((2, 1, 3, 2));
            out.push((1, 2, 3, 2));
        }
        Claim::TransvH | Claim::TransvV => {
            for d in 1..=3 {
                for c in 0..=3 {
                    for s in 1..=3 {
                        out.push((d, c, s, 2));
                    }
                }
            }
        }
        Claim::Counts => {
            for q in [2u64, 3] {
                for d in 1..=2 {
                    for c in 0..=2 {
                        out.push((d, c, 1, q));
                    }
                }
            }
        }
    }
    out
}

/// The default sweep: every claim over its [`default_ranges`], sized to stay
/// comfortably within the default budget.
pub fn default_sweep(budget: u64) -> Result<Vec<VerificationReport>, VerifyError> {
    let mut reports = Vec::new();
    for claim in Claim::ALL {
        for (d, c, s, q) in default_ranges(claim) {
            reports.extend(sweep_claim(claim, d, c, s, q, budget)?);
        }
    }
    Ok(reports)
}
