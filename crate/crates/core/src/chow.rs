//! Integer combinations of Schubert classes and the four diagram surgeries
//! induced by the two direct-sum embeddings of Grassmannians.
//!
//! For a source box `d x c` and an `s`-dimensional extra summand:
//!
//! * the dimension-preserving embedding (`h`, `P -> P + 0`) pushes a class
//!   forward by adding `s` full columns on the left and pulls back by
//!   deleting the last `s` columns when they are empty (zero otherwise);
//! * the codimension-preserving embedding (`v`, `P -> P + S`) pushes
//!   forward by adding `s` full rows on top and pulls back by deleting the
//!   last `s` rows when they are empty (zero otherwise).
//!
//! Pushing preserves the empty-square count (the cycle dimension); a pull
//! that survives preserves the full-square count (the codimension).
//!
//! Only addition and integer scaling are provided; there is no ring
//! multiplication here.

use std::collections::BTreeMap;
use std::fmt;

use crate::partitions::{BoxShape, Partition, PartitionError};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ChowError {
    /// Operand lives in a different box than required.
    BoxMismatch {
        expected: BoxShape,
        found: BoxShape,
    },
    /// The extra summand must have positive dimension.
    InvalidShift,
    /// Deleting `s` columns (rows) needs a target box at least that wide
    /// (tall).
    ShiftTooLarge {
        s: usize,
        target: BoxShape,
    },
    /// Malformed class expression.
    BadExpression(String),
    Partition(PartitionError),
}

impl fmt::Display for ChowError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChowError::BoxMismatch { expected, found } => {
                write!(f, "box mismatch: expected {expected}, found {found}")
            }
            ChowError::InvalidShift => write!(f, "s must be at least 1"),
            ChowError::ShiftTooLarge { s, target } => {
                write!(f, "cannot delete {s} columns/rows from box {target}")
            }
            ChowError::BadExpression(s) => write!(f, "invalid class expression: {s}"),
            ChowError::Partition(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ChowError {}

impl From<PartitionError> for ChowError {
    fn from(e: PartitionError) -> Self {
        ChowError::Partition(e)
    }
}

/// A finite integer combination of Schubert classes in one box. The zero
/// class is the empty combination; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct CycleClass {
    bx: BoxShape,
    terms: BTreeMap<Partition, i64>,
}

impl CycleClass {
    pub fn zero(bx: BoxShape) -> Self {
        CycleClass {
            bx,
            terms: BTreeMap::new(),
        }
    }

    /// The basis class of a single partition, coefficient 1.
    pub fn sigma(lambda: Partition) -> Self {
        let bx = lambda.box_shape();
        let mut terms = BTreeMap::new();
        terms.insert(lambda, 1);
        CycleClass { bx, terms }
    }

    pub fn from_terms(
        bx: BoxShape,
        terms: impl IntoIterator<Item = (Partition, i64)>,
    ) -> Result<Self, ChowError> {
        let mut out = CycleClass::zero(bx);
        for (p, k) in terms {
            out.add_term(p, k)?;
        }
        Ok(out)
    }

    fn add_term(&mut self, p: Partition, k: i64) -> Result<(), ChowError> {
        if p.box_shape() != self.bx {
            return Err(ChowError::BoxMismatch {
                expected: self.bx,
                found: p.box_shape(),
            });
        }
        if k == 0 {
            return Ok(());
        }
        let entry = self.terms.entry(p.clone()).or_insert(0);
        *entry += k;
        if *entry == 0 {
            self.terms.remove(&p);
        }
        Ok(())
    }

    pub fn box_shape(&self) -> BoxShape {
        self.bx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, p: &Partition) -> i64 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.terms.iter().map(|(p, &k)| (p, k))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &CycleClass) -> Result<CycleClass, ChowError> {
        if other.bx != self.bx {
            return Err(ChowError::BoxMismatch {
                expected: self.bx,
                found: other.bx,
            });
        }
        let mut out = self.clone();
        for (p, k) in other.terms() {
            out.add_term(p.clone(), k)?;
        }
        Ok(out)
    }

    pub fn scale(&self, k: i64) -> CycleClass {
        if k == 0 {
            return CycleClass::zero(self.bx);
        }
        CycleClass {
            bx: self.bx,
            terms: self
                .terms
                .iter()
                .map(|(p, &v)| (p.clone(), v * k))
                .collect(),
        }
    }

    /// True when every stored term has the same weight. The zero class is
    /// homogeneous of no particular grade.
    pub fn is_homogeneous(&self) -> bool {
        let mut weights = self.terms.keys().map(Partition::weight);
        match weights.next() {
            None => true,
            Some(w) => weights.all(|x| x == w),
        }
    }

    /// The common weight of the terms, when there is one.
    pub fn grade(&self) -> Option<usize> {
        let mut weights = self.terms.keys().map(Partition::weight);
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }

    /// Parses the machine syntax: `+`-joined terms `coeff*sigma[parts]`
    /// (bare `sigma[parts]` has coefficient 1, `0` is the zero class),
    /// optionally followed by `@ dxc`. The box comes from the suffix, from
    /// `default_box`, or both when they agree.
    pub fn parse(text: &str, default_box: Option<BoxShape>) -> Result<CycleClass, ChowError> {
        let bad = |msg: &str| ChowError::BadExpression(format!("{msg} in {text:?}"));
        let (body, suffix_box) = match text.rsplit_once('@') {
            Some((body, bx)) => {
                let bx: BoxShape = bx.trim().parse().map_err(ChowError::Partition)?;
                (body, Some(bx))
            }
            None => (text, None),
        };
        let bx = match (suffix_box, default_box) {
            (Some(a), Some(b)) if a != b => {
                return Err(ChowError::BoxMismatch {
                    expected: b,
                    found: a,
                })
            }
            (Some(a), _) => a,
            (None, Some(b)) => b,
            (None, None) => return Err(bad("no box given")),
        };

        let body = body.trim();
        if body == "0" {
            return Ok(CycleClass::zero(bx));
        }
        let mut out = CycleClass::zero(bx);
        for raw in body.split('+') {
            let term = raw.trim();
            let (coeff, sigma) = match term.split_once('*') {
                Some((k, rest)) => {
                    let k: i64 = k.trim().parse().map_err(|_| bad("bad coefficient"))?;
                    (k, rest.trim())
                }
                None => (1, term),
            };
            let inner = sigma
                .strip_prefix("sigma[")
                .and_then(|r| r.strip_suffix(']'))
                .ok_or_else(|| bad("expected sigma[..]"))?;
            let p = Partition::parse_parts(bx, inner)?;
            out.add_term(p, coeff)?;
        }
        Ok(out)
    }
}

impl fmt::Display for CycleClass {
    /// Machine syntax; `parse(print(x)) == x`. Terms are ordered by weight,
    /// then lexicographically descending, matching the enumeration order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0 @ {}", self.bx);
        }
        let mut terms: Vec<(&Partition, i64)> = self.terms().collect();
        terms.sort_by(|(a, _), (b, _)| {
            a.weight()
                .cmp(&b.weight())
                .then_with(|| b.parts().cmp(a.parts()))
        });
        let body = terms
            .iter()
            .map(|(p, k)| {
                if *k == 1 {
                    format!("sigma[{p}]")
                } else {
                    format!("{k}*sigma[{p}]")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ");
        write!(f, "{body} @ {}", self.bx)
    }
}

impl fmt::Debug for CycleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EmbeddingKind {
    /// `P -> P + 0`: same subspace dimension, codimension grows by `s`.
    H,
    /// `P -> P + S`: same codimension, dimension grows by `s`.
    V,
}

/// One of the two direct-sum embeddings, pinned to a source box and a
/// summand dimension `s`. The target box is derived, never stored.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Embedding {
    kind: EmbeddingKind,
    s: usize,
    source: BoxShape,
}

impl Embedding {
    pub fn h(source: BoxShape, s: usize) -> Result<Self, ChowError> {
        Self::new(EmbeddingKind::H, source, s)
    }

    pub fn v(source: BoxShape, s: usize) -> Result<Self, ChowError> {
        Self::new(EmbeddingKind::V, source, s)
    }

    pub fn new(kind: EmbeddingKind, source: BoxShape, s: usize) -> Result<Self, ChowError> {
        if s == 0 {
            return Err(ChowError::InvalidShift);
        }
        Ok(Embedding { kind, s, source })
    }

    /// Builds the embedding whose *target* box is `target`, for pullbacks
    /// stated in the larger box.
    pub fn with_target(kind: EmbeddingKind, target: BoxShape, s: usize) -> Result<Self, ChowError> {
        if s == 0 {
            return Err(ChowError::InvalidShift);
        }
        let source = match kind {
            EmbeddingKind::H => {
                if target.cols() < s {
                    return Err(ChowError::ShiftTooLarge { s, target });
                }
                BoxShape::new(target.rows(), target.cols() - s)?
            }
            EmbeddingKind::V => {
                if target.rows() <= s {
                    return Err(ChowError::ShiftTooLarge { s, target });
                }
                BoxShape::new(target.rows() - s, target.cols())?
            }
        };
        Ok(Embedding { kind, s, source })
    }

    pub fn kind(&self) -> EmbeddingKind {
        self.kind
    }

    pub fn shift(&self) -> usize {
        self.s
    }

    pub fn source_box(&self) -> BoxShape {
        self.source
    }

    pub fn target_box(&self) -> BoxShape {
        let (d, c) = (self.source.rows(), self.source.cols());
        match self.kind {
            EmbeddingKind::H => BoxShape::new(d, c + self.s),
            EmbeddingKind::V => BoxShape::new(d + self.s, c),
        }
        .expect("target box is valid whenever the source box is")
    }

    /// Pushforward of a basis class: add `s` full columns on the left (`h`)
    /// or `s` full rows on top (`v`). Injective, and the empty-square count
    /// is unchanged.
    pub fn push(&self, lambda: &Partition) -> Result<Partition, ChowError> {
        if lambda.box_shape() != self.source {
            return Err(ChowError::BoxMismatch {
                expected: self.source,
                found: lambda.box_shape(),
            });
        }
        let target = self.target_box();
        let parts: Vec<usize> = match self.kind {
            EmbeddingKind::H => lambda.parts().iter().map(|&p| p + self.s).collect(),
            EmbeddingKind::V => std::iter::repeat_n(self.source.cols(), self.s)
                .chain(lambda.parts().iter().copied())
                .collect(),
        };
        Ok(Partition::new(target, &parts).expect("surgery output stays a valid partition"))
    }

    /// Pullback of a basis class stated in the target box: zero when the
    /// kill condition holds (`mu_1 > c` for `h`, `mu_(d+1) >= 1` for `v`),
    /// otherwise the same parts reread in the source box. A surviving pull
    /// keeps the full-square count.
    pub fn pull(&self, mu: &Partition) -> Result<CycleClass, ChowError> {
        let target = self.target_box();
        if mu.box_shape() != target {
            return Err(ChowError::BoxMismatch {
                expected: target,
                found: mu.box_shape(),
            });
        }
        let source = self.source;
        let killed = match self.kind {
            EmbeddingKind::H => mu.parts()[0] > source.cols(),
            EmbeddingKind::V => mu.parts()[source.rows()] >= 1,
        };
        if killed {
            return Ok(CycleClass::zero(source));
        }
        let parts = &mu.parts()[..source.rows()];
        let lambda = Partition::new(source, parts).expect("surviving pull stays a valid partition");
        Ok(CycleClass::sigma(lambda))
    }

    /// Linear extension of [`push`](Self::push) over a class.
    pub fn push_class(&self, x: &CycleClass) -> Result<CycleClass, ChowError> {
        if x.box_shape() != self.source {
            return Err(ChowError::BoxMismatch {
                expected: self.source,
                found: x.box_shape(),
            });
        }
        let mut out = CycleClass::zero(self.target_box());
        for (p, k) in x.terms() {
            out.add_term(self.push(p)?, k)?;
        }
        Ok(out)
    }

    /// Linear extension of [`pull`](Self::pull) over a class; killed terms
    /// drop out.
    pub fn pull_class(&self, x: &CycleClass) -> Result<CycleClass, ChowError> {
        if x.box_shape() != self.target_box() {
            return Err(ChowError::BoxMismatch {
                expected: self.target_box(),
                found: x.box_shape(),
            });
        }
        let mut out = CycleClass::zero(self.source);
        for (p, k) in x.terms() {
            out = out.add(&self.pull(p)?.scale(k))?;
        }
        Ok(out)
    }
}

/// Adds `s` full columns to the left of the diagram.
pub fn h_push(lambda: &Partition, s: usize) -> Result<Partition, ChowError> {
    Embedding::h(lambda.box_shape(), s)?.push(lambda)
}

/// Deletes the last `s` columns when they are empty; zero otherwise.
pub fn h_pull(mu: &Partition, s: usize) -> Result<CycleClass, ChowError> {
    Embedding::with_target(EmbeddingKind::H, mu.box_shape(), s)?.pull(mu)
}

/// Adds `s` full rows above the diagram.
pub fn v_push(lambda: &Partition, s: usize) -> Result<Partition, ChowError> {
    Embedding::v(lambda.box_shape(), s)?.push(lambda)
}

/// Deletes the last `s` rows when they are empty; zero otherwise.
pub fn v_pull(mu: &Partition, s: usize) -> Result<CycleClass, ChowError> {
    Embedding::with_target(EmbeddingKind::V, mu.box_shape(), s)?.pull(mu)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bx(d: usize, c: usize) -> BoxShape {
        BoxShape::new(d, c).unwrap()
    }

    fn p(d: usize, c: usize, parts: &[usize]) -> Partition {
        Partition::new(bx(d, c), parts).unwrap()
    }

    #[test]
    fn h_push_adds_full_columns() {
        let out = h_push(&p(4, 7, &[5, 2, 1, 0]), 2).unwrap();
        assert_eq!(out, p(4, 9, &[7, 4, 3, 2]));

        let out = h_push(&Partition::zero(bx(3, 4)), 1).unwrap();
        assert_eq!(out, p(3, 5, &[1, 1, 1]));
    }

    #[test]
    fn h_push_preserves_empty_squares() {
        let lambda = p(4, 7, &[5, 2, 1, 0]);
        assert_eq!(lambda.empty_squares(), 20);
        let pushed = h_push(&lambda, 2).unwrap();
        assert_eq!(pushed.weight(), 16);
        assert_eq!(pushed.empty_squares(), 20);
    }

    #[test]
    fn h_pull_kills_or_deletes() {
        // First row protrudes into the last s columns.
        let killed = h_pull(&p(2, 3, &[3, 0]), 1).unwrap();
        assert!(killed.is_zero());
        assert_eq!(killed.box_shape(), bx(2, 2));

        let kept = h_pull(&p(2, 5, &[3, 1]), 2).unwrap();
        assert_eq!(kept, CycleClass::sigma(p(2, 3, &[3, 1])));

        // Deleting two empty columns from a 3x8 box.
        let kept = h_pull(&p(3, 8, &[5, 3, 2]), 2).unwrap();
        assert_eq!(kept, CycleClass::sigma(p(3, 6, &[5, 3, 2])));
        assert_eq!(kept.grade(), Some(10));
    }

    #[test]
    fn v_push_adds_full_rows() {
        let out = v_push(&p(3, 4, &[2, 1, 0]), 2).unwrap();
        assert_eq!(out, p(5, 4, &[4, 4, 2, 1, 0]));

        let out = v_push(&Partition::zero(bx(2, 3)), 1).unwrap();
        assert_eq!(out, p(3, 3, &[3, 0, 0]));
    }

    #[test]
    fn v_push_preserves_empty_squares() {
        let lambda = p(3, 4, &[2, 1, 0]);
        assert_eq!(lambda.empty_squares(), 9);
        let pushed = v_push(&lambda, 2).unwrap();
        assert_eq!(pushed.empty_squares(), 9);
    }

    #[test]
    fn v_pull_kills_or_deletes() {
        let kept = v_pull(&p(6, 3, &[3, 2, 1, 1, 0, 0]), 2).unwrap();
        assert_eq!(kept, CycleClass::sigma(p(4, 3, &[3, 2, 1, 1])));

        // Row d+1 nonempty.
        let killed = v_pull(&p(3, 2, &[1, 1, 1]), 1).unwrap();
        assert!(killed.is_zero());

        let fundamental = v_pull(&Partition::zero(bx(3, 2)), 1).unwrap();
        assert_eq!(fundamental, CycleClass::sigma(Partition::zero(bx(2, 2))));
    }

    #[test]
    fn linear_extension() {
        let e = Embedding::with_target(EmbeddingKind::H, bx(2, 2), 1).unwrap();
        let x = CycleClass::from_terms(bx(2, 2), [(p(2, 2, &[1, 0]), 2), (p(2, 2, &[1, 1]), 3)])
            .unwrap();
        let pulled = e.pull_class(&x).unwrap();
        assert_eq!(pulled.coefficient(&p(2, 1, &[1, 0])), 2);
        assert_eq!(pulled.coefficient(&p(2, 1, &[1, 1])), 3);
        assert_eq!(pulled.len(), 2);

        let zero = e.pull_class(&CycleClass::zero(bx(2, 2))).unwrap();
        assert!(zero.is_zero());

        let cancel = CycleClass::sigma(p(2, 2, &[2, 0]))
            .add(&CycleClass::sigma(p(2, 2, &[2, 0])).scale(-1))
            .unwrap();
        assert!(cancel.is_zero());
        assert!(e.pull_class(&cancel).unwrap().is_zero());
    }

    #[test]
    fn box_mismatch_is_rejected() {
        let e = Embedding::h(bx(2, 2), 1).unwrap();
        let wrong = CycleClass::sigma(p(2, 3, &[1, 0]));
        assert!(matches!(
            e.push_class(&wrong),
            Err(ChowError::BoxMismatch { .. })
        ));
        assert!(matches!(
            h_pull(&p(2, 1, &[1, 0]), 2),
            Err(ChowError::ShiftTooLarge { .. })
        ));
        assert!(matches!(
            v_pull(&p(2, 2, &[1, 0]), 2),
            Err(ChowError::ShiftTooLarge { .. })
        ));
        assert!(matches!(
            Embedding::h(bx(2, 2), 0),
            Err(ChowError::InvalidShift)
        ));
    }

    // Exhaustive surgery invariants over all boxes and shifts up to 4.
    #[test]
    fn surgeries_exhaustive_small() {
        for d in 1..=4 {
            for c in 0..=4 {
                let source = bx(d, c);
                let all = Partition::enumerate(source, None);
                for s in 1..=4 {
                    let h = Embedding::h(source, s).unwrap();
                    let v = Embedding::v(source, s).unwrap();

                    let mut h_images = std::collections::BTreeSet::new();
                    let mut v_images = std::collections::BTreeSet::new();
                    for lambda in &all {
                        let hp = h.push(lambda).unwrap();
                        let vp = v.push(lambda).unwrap();
                        assert_eq!(hp.empty_squares(), lambda.empty_squares());
                        assert_eq!(vp.empty_squares(), lambda.empty_squares());
                        assert!(h_images.insert(hp.clone()), "h push not injective");
                        assert!(v_images.insert(vp.clone()), "v push not injective");

                        // Pull after push: the pushed diagram survives the
                        // kill test exactly when it stays clear of the
                        // deleted strip, and then the parts carry over
                        // unchanged (so the composite is not the identity).
                        let hpp = h.pull(&hp).unwrap();
                        if lambda.parts()[0] + s > c {
                            assert!(hpp.is_zero());
                        } else {
                            let expect = Partition::new(source, hp.parts()).unwrap();
                            assert_eq!(hpp, CycleClass::sigma(expect));
                        }
                        let vpp = v.pull(&vp).unwrap();
                        if vp.parts()[d] >= 1 {
                            assert!(vpp.is_zero());
                        } else {
                            let expect = Partition::new(source, &vp.parts()[..d]).unwrap();
                            assert_eq!(vpp, CycleClass::sigma(expect));
                        }
                    }

                    // Pulls on the whole target box: zero exactly under the
                    // kill condition, weight preserved otherwise.
                    for mu in Partition::enumerate(h.target_box(), None) {
                        let pulled = h.pull(&mu).unwrap();
                        if mu.parts()[0] > c {
                            assert!(pulled.is_zero());
                        } else {
                            assert_eq!(pulled.grade(), Some(mu.weight()));
                        }
                    }
                    for mu in Partition::enumerate(v.target_box(), None) {
                        let pulled = v.pull(&mu).unwrap();
                        if mu.parts()[d] >= 1 {
                            assert!(pulled.is_zero());
                        } else {
                            assert_eq!(pulled.grade(), Some(mu.weight()));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn class_expression_round_trip() {
        let x = CycleClass::from_terms(bx(2, 2), [(p(2, 2, &[1, 0]), 2), (p(2, 2, &[1, 1]), 3)])
            .unwrap();
        let text = x.to_string();
        assert_eq!(text, "2*sigma[1,0] + 3*sigma[1,1] @ 2x2");
        assert_eq!(CycleClass::parse(&text, None).unwrap(), x);

        let bare = CycleClass::parse("sigma[5,2,1]", Some(bx(4, 7))).unwrap();
        assert_eq!(bare, CycleClass::sigma(p(4, 7, &[5, 2, 1, 0])));

        let zero = CycleClass::parse("0 @ 3x1", None).unwrap();
        assert!(zero.is_zero());
        assert_eq!(zero.to_string(), "0 @ 3x1");

        let negative = CycleClass::parse("-2*sigma[2,0] + sigma[1,1] @ 2x2", None).unwrap();
        assert_eq!(negative.coefficient(&p(2, 2, &[2, 0])), -2);
        assert_eq!(
            CycleClass::parse(&negative.to_string(), None).unwrap(),
            negative
        );
    }

    #[test]
    fn class_expression_errors() {
        assert!(CycleClass::parse("sigma[1,0]", None).is_err());
        assert!(matches!(
            CycleClass::parse("sigma[1,0] @ 2x2", Some(bx(2, 3))),
            Err(ChowError::BoxMismatch { .. })
        ));
        assert!(CycleClass::parse("2 sigma[1]", Some(bx(1, 3))).is_err());
        assert!(CycleClass::parse("sigma[3,0] @ 2x2", None).is_err());
    }

    #[test]
    fn homogeneity() {
        let mixed =
            CycleClass::from_terms(bx(2, 2), [(p(2, 2, &[1, 0]), 1), (p(2, 2, &[1, 1]), 1)])
                .unwrap();
        assert!(!mixed.is_homogeneous());
        assert_eq!(mixed.grade(), None);
        assert!(CycleClass::zero(bx(2, 2)).is_homogeneous());
        assert_eq!(CycleClass::sigma(p(2, 2, &[2, 1])).grade(), Some(3));
    }
}
