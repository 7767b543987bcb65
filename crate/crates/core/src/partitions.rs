//! Partitions in a box: the weakly decreasing sequences that index Schubert
//! classes, their Young diagrams, enumeration and text forms.
//!
//! A box `d x c` fixes the diagram universe of the Grassmannian of
//! d-dimensional subspaces of codimension c: partitions have exactly `d`
//! parts (trailing zeros stored explicitly) bounded by `c`. All indices in
//! documentation and error messages are 1-based, matching the usual
//! convention for the conditions `lambda_1 >= ... >= lambda_d`.

use std::fmt;
use std::str::FromStr;

/// Characters of the diagram grammar: a full square and an empty square.
const FULL: char = '#';
const EMPTY: char = '.';

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PartitionError {
    /// `d` must be at least 1.
    EmptyBox,
    /// More parts supplied than the box has rows.
    TooManyParts { given: usize, d: usize },
    /// A part exceeds the box width. 1-based index.
    PartTooWide { index: usize, part: usize, c: usize },
    /// A part exceeds its predecessor. 1-based index of the offender.
    NotDecreasing { index: usize },
    /// Malformed box literal; expected `dxc`.
    BadBox(String),
    /// Malformed part list; expected comma-separated integers.
    BadParts(String),
    /// Malformed diagram text.
    BadDiagram(String),
}

impl fmt::Display for PartitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionError::EmptyBox => write!(f, "box must have at least one row (d >= 1)"),
            PartitionError::TooManyParts { given, d } => {
                write!(f, "{given} parts given but the box has only d={d} rows")
            }
            PartitionError::PartTooWide { index, part, c } => {
                write!(f, "part {index} exceeds c={c} (got {part})")
            }
            PartitionError::NotDecreasing { index } => write!(
                f,
                "part {index} exceeds part {}; parts must be weakly decreasing",
                index - 1
            ),
            PartitionError::BadBox(s) => write!(f, "invalid box {s:?}: expected \"dxc\""),
            PartitionError::BadParts(s) => {
                write!(f, "invalid partition {s:?}: expected comma-separated parts")
            }
            PartitionError::BadDiagram(s) => write!(f, "invalid diagram: {s}"),
        }
    }
}

impl std::error::Error for PartitionError {}

/// The ambient rectangle of a diagram: `d` rows and `c` columns. For the
/// Grassmannian of d-planes in an N-dimensional space, `c = N - d`; the
/// ambient dimension `d + c` is always derived, never stored.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BoxShape {
    d: usize,
    c: usize,
}

impl BoxShape {
    pub fn new(d: usize, c: usize) -> Result<Self, PartitionError> {
        if d == 0 {
            return Err(PartitionError::EmptyBox);
        }
        Ok(BoxShape { d, c })
    }

    /// Number of rows (the subspace dimension).
    pub fn rows(&self) -> usize {
        self.d
    }

    /// Number of columns (the subspace codimension).
    pub fn cols(&self) -> usize {
        self.c
    }

    pub fn ambient_dim(&self) -> usize {
        self.d + self.c
    }

    pub fn area(&self) -> usize {
        self.d * self.c
    }
}

impl fmt::Display for BoxShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.d, self.c)
    }
}

impl FromStr for BoxShape {
    type Err = PartitionError;

    /// Parses the `dxc` literal, e.g. `4x7`.
    fn from_str(s: &str) -> Result<Self, PartitionError> {
        let bad = || PartitionError::BadBox(s.to_string());
        let (d, c) = s.split_once(['x', 'X']).ok_or_else(bad)?;
        let d: usize = d.trim().parse().map_err(|_| bad())?;
        let c: usize = c.trim().parse().map_err(|_| bad())?;
        BoxShape::new(d, c)
    }
}

/// A partition in a box: exactly `d` weakly decreasing parts, each at most
/// `c`. Identified with its Young diagram and with the Schubert class it
/// indexes. Immutable once constructed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
    bx: BoxShape,
}

impl Partition {
    /// Validates and pads: fewer than `d` parts are completed with zeros.
    pub fn new(bx: BoxShape, parts: &[usize]) -> Result<Self, PartitionError> {
        if parts.len() > bx.d {
            return Err(PartitionError::TooManyParts {
                given: parts.len(),
                d: bx.d,
            });
        }
        let mut full = parts.to_vec();
        full.resize(bx.d, 0);
        for (i, &p) in full.iter().enumerate() {
            if p > bx.c {
                return Err(PartitionError::PartTooWide {
                    index: i + 1,
                    part: p,
                    c: bx.c,
                });
            }
            if i > 0 && p > full[i - 1] {
                return Err(PartitionError::NotDecreasing { index: i + 1 });
            }
        }
        Ok(Partition { parts: full, bx })
    }

    /// The empty diagram (the fundamental class).
    pub fn zero(bx: BoxShape) -> Self {
        Partition {
            parts: vec![0; bx.d],
            bx,
        }
    }

    /// The full `d x c` rectangle (the class of a point).
    pub fn full(bx: BoxShape) -> Self {
        Partition {
            parts: vec![bx.c; bx.d],
            bx,
        }
    }

    /// All `d` parts, trailing zeros included.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn box_shape(&self) -> BoxShape {
        self.bx
    }

    /// The number of full squares; equals the codimension of the Schubert
    /// variety the partition indexes.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The number of empty squares; equals the dimension of the cycle.
    pub fn empty_squares(&self) -> usize {
        self.bx.area() - self.weight()
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(|&p| p == 0)
    }

    pub fn is_full(&self) -> bool {
        self.parts.iter().all(|&p| p == self.bx.c)
    }

    /// Diagram containment: every row of `other` fits inside this one.
    /// Panics if the boxes differ.
    pub fn contains(&self, other: &Partition) -> bool {
        assert_eq!(
            self.bx, other.bx,
            "box mismatch: {} vs {}",
            self.bx, other.bx
        );
        self.parts.iter().zip(&other.parts).all(|(a, b)| a >= b)
    }

    /// All partitions in the box, optionally restricted to one weight, in
    /// graded order (by weight, then lexicographically descending). The
    /// order is deterministic and stable across runs.
    pub fn enumerate(bx: BoxShape, weight: Option<usize>) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut parts = Vec::with_capacity(bx.d);
        collect(bx, bx.c, &mut parts, &mut out);
        out.retain(|p| weight.is_none_or(|w| p.weight() == w));
        out.sort_by(|a, b| (a.weight().cmp(&b.weight())).then_with(|| b.parts.cmp(&a.parts)));
        out
    }

    /// The Young diagram as text: `d` lines of `c` characters, full squares
    /// `#`, empty squares `.`, row 1 on top, left-justified.
    pub fn render(&self) -> String {
        self.parts
            .iter()
            .map(|&p| {
                let mut line = String::with_capacity(self.bx.c);
                line.extend(std::iter::repeat_n(FULL, p));
                line.extend(std::iter::repeat_n(EMPTY, self.bx.c - p));
                line
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// Inverse of [`render`](Self::render): the box is read off the grid
    /// shape. Accepts exactly the rendering grammar, so
    /// `render(parse_diagram(s)) == s` whenever parsing succeeds.
    pub fn parse_diagram(text: &str) -> Result<Partition, PartitionError> {
        let lines: Vec<&str> = text.split('\n').collect();
        let d = lines.len();
        let c = lines[0].chars().count();
        let mut parts = Vec::with_capacity(d);
        for (i, line) in lines.iter().enumerate() {
            if line.chars().count() != c {
                return Err(PartitionError::BadDiagram(format!(
                    "row {} has a different length",
                    i + 1
                )));
            }
            let full = line.chars().take_while(|&ch| ch == FULL).count();
            if !line.chars().skip(full).all(|ch| ch == EMPTY) {
                return Err(PartitionError::BadDiagram(format!(
                    "row {} is not of the form {FULL}*{EMPTY}*",
                    i + 1
                )));
            }
            parts.push(full);
        }
        Partition::new(BoxShape::new(d, c)?, &parts)
    }

    /// Parses the comma-separated part list, e.g. `5,2,1`. Whitespace is
    /// tolerated; the empty string denotes the zero partition.
    pub fn parse_parts(bx: BoxShape, text: &str) -> Result<Partition, PartitionError> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Ok(Partition::zero(bx));
        }
        let parts = trimmed
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PartitionError::BadParts(text.to_string()))?;
        Partition::new(bx, &parts)
    }
}

fn collect(bx: BoxShape, bound: usize, parts: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if parts.len() == bx.d {
        out.push(Partition {
            parts: parts.clone(),
            bx,
        });
        return;
    }
    for p in (0..=bound).rev() {
        parts.push(p);
        collect(bx, p, parts, out);
        parts.pop();
    }
}

impl fmt::Display for Partition {
    /// All `d` parts, comma-separated, trailing zeros included.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self
            .parts
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "{body}")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) in {}", self, self.bx)
    }
}
