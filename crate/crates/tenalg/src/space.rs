//! The underlying pair of spaces and their duality data.
//!
//! A [`SpaceSpec`] fixes the dimensions of the two sides U and V, the Gram
//! matrix of the bilinear form pairing them, and whether the pair is
//! self-dual (V identified with U basis-by-basis). Everything else in the
//! crate is parameterized by a `SpaceSpec`.

use crate::scalar::{self, Scalar};
use crate::{Error, Result};
use std::fmt;

/// Which of the two spaces a word or element lives over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    U,
    V,
}

impl Side {
    /// Letter used for generators of this side in the text form.
    pub fn letter(self) -> char {
        match self {
            Side::U => 'e',
            Side::V => 'f',
        }
    }

    pub fn other(self) -> Side {
        match self {
            Side::U => Side::V,
            Side::V => Side::U,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::U => write!(f, "U"),
            Side::V => write!(f, "V"),
        }
    }
}

/// Dimensions of the two sides plus the Gram matrix of the duality.
///
/// Immutable after construction. The Gram matrix is arbitrary rational;
/// no symmetry or invertibility is assumed. `gram[i][j]` is the pairing
/// of the i-th U generator with the j-th V generator (0-based storage,
/// 1-based indices at the API).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceSpec {
    dim_u: usize,
    dim_v: usize,
    gram: Vec<Vec<Scalar>>,
    self_dual: bool,
}

impl SpaceSpec {
    /// Validates and builds a space specification.
    pub fn new(
        dim_u: usize,
        dim_v: usize,
        gram: Vec<Vec<Scalar>>,
        self_dual: bool,
    ) -> Result<Self> {
        if dim_u == 0 || dim_v == 0 {
            return Err(Error::ZeroDimension);
        }
        if self_dual && dim_u != dim_v {
            return Err(Error::SelfDualDims { dim_u, dim_v });
        }
        let rows = gram.len();
        let cols = gram.first().map_or(0, Vec::len);
        if rows != dim_u || gram.iter().any(|r| r.len() != dim_v) {
            return Err(Error::GramShape {
                rows,
                cols,
                dim_u,
                dim_v,
            });
        }
        Ok(SpaceSpec {
            dim_u,
            dim_v,
            gram,
            self_dual,
        })
    }

    /// Identity-Gram self-dual space of dimension `dim`.
    pub fn identity(dim: usize) -> Result<Self> {
        let gram = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| if i == j { scalar::int(1) } else { scalar::int(0) })
                    .collect()
            })
            .collect();
        SpaceSpec::new(dim, dim, gram, true)
    }

    pub fn dim_u(&self) -> usize {
        self.dim_u
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn self_dual(&self) -> bool {
        self.self_dual
    }

    pub fn dim(&self, side: Side) -> usize {
        match side {
            Side::U => self.dim_u,
            Side::V => self.dim_v,
        }
    }

    /// Pairing of the i-th U generator with the j-th V generator
    /// (1-based indices).
    pub fn pair_vectors(&self, i: u32, j: u32) -> Result<Scalar> {
        self.check_index(Side::U, i)?;
        self.check_index(Side::V, j)?;
        Ok(self.gram[(i - 1) as usize][(j - 1) as usize].clone())
    }

    /// True when the Gram matrix is square and symmetric; the circle and
    /// phi constructions assume this of self-dual spaces.
    pub fn gram_is_symmetric(&self) -> bool {
        self.dim_u == self.dim_v
            && (0..self.dim_u)
                .all(|i| (0..i).all(|j| self.gram[i][j] == self.gram[j][i]))
    }

    pub fn check_index(&self, side: Side, index: u32) -> Result<()> {
        let dim = self.dim(side);
        if index == 0 || index as usize > dim {
            return Err(Error::IndexOutOfRange { side, index, dim });
        }
        Ok(())
    }

    /// Parses the line-based space file format:
    ///
    /// ```text
    /// dim_u N
    /// dim_v M
    /// self_dual true|false
    /// gram a_1 a_2 ... a_M     (N of these, one per row)
    /// ```
    ///
    /// Entries are integers or `p/q`. Unknown keys are an error.
    pub fn parse(text: &str) -> Result<Self> {
        let mut dim_u: Option<usize> = None;
        let mut dim_v: Option<usize> = None;
        let mut self_dual: Option<bool> = None;
        let mut rows: Vec<Vec<Scalar>> = Vec::new();

        let bad = |line: usize, msg: &str| Error::SpaceFile(format!("line {line}: {msg}"));

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            let (key, rest) = match line.split_once(char::is_whitespace) {
                Some((k, r)) => (k, r.trim()),
                None => (line, ""),
            };
            match key {
                "dim_u" | "dim_v" => {
                    let value: usize = rest
                        .parse()
                        .map_err(|_| bad(line_no, &format!("{key} expects a positive integer")))?;
                    let slot = if key == "dim_u" {
                        &mut dim_u
                    } else {
                        &mut dim_v
                    };
                    if slot.replace(value).is_some() {
                        return Err(bad(line_no, &format!("duplicate key {key}")));
                    }
                }
                "self_dual" => {
                    let value = match rest {
                        "true" => true,
                        "false" => false,
                        _ => return Err(bad(line_no, "self_dual expects true or false")),
                    };
                    if self_dual.replace(value).is_some() {
                        return Err(bad(line_no, "duplicate key self_dual"));
                    }
                }
                "gram" => {
                    let row: Option<Vec<Scalar>> =
                        rest.split_whitespace().map(scalar::parse).collect();
                    let row =
                        row.ok_or_else(|| bad(line_no, "gram entries must be integers or p/q"))?;
                    rows.push(row);
                }
                other => {
                    return Err(bad(line_no, &format!("unknown key {other}")));
                }
            }
        }

        let dim_u = dim_u.ok_or_else(|| Error::SpaceFile("missing key dim_u".into()))?;
        let dim_v = dim_v.ok_or_else(|| Error::SpaceFile("missing key dim_v".into()))?;
        let self_dual = self_dual.ok_or_else(|| Error::SpaceFile("missing key self_dual".into()))?;
        if rows.len() != dim_u {
            return Err(Error::SpaceFile(format!(
                "expected {dim_u} gram rows, found {}",
                rows.len()
            )));
        }
        SpaceSpec::new(dim_u, dim_v, rows, self_dual)
    }
}
