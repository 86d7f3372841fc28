//! Canonical generator matrices for the simplex code S_k(q) and the
//! MacDonald code M_{k,u}(q) over Z_q.
//!
//! The simplex matrix is built recursively: G_1(q) = [1], and G_k(q) lists
//! its columns in three blocks: every column of G_{k-1}(q) prefixed by 0,
//! then the single column (1, 0, ..., 0), then for each i = 1..q-1 every
//! column of G_{k-1}(q) prefixed by i. With that order the first n_u columns
//! of G_k(q) are exactly G_u(q) under k-u zero rows, so the MacDonald matrix
//! is G_k(q) with its leading n_u columns deleted.

use std::fmt;
use std::str::FromStr;

use crate::code::{GeneratorMatrix, ZqVector};
use crate::{Error, Result};

/// Ceiling on k*n for a constructed generator matrix; keeps accidental
/// parameter blowups from exhausting memory before enumeration would have
/// rejected them anyway.
pub const MAX_GENERATOR_ENTRIES: u64 = 1 << 24;

/// The two code families this crate constructs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CodeFamily {
    Simplex,
    Macdonald,
}

impl fmt::Display for CodeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeFamily::Simplex => write!(f, "simplex"),
            CodeFamily::Macdonald => write!(f, "macdonald"),
        }
    }
}

impl FromStr for CodeFamily {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "simplex" => Ok(CodeFamily::Simplex),
            "macdonald" => Ok(CodeFamily::Macdonald),
            other => Err(format!(
                "unknown family {other:?} (expected simplex or macdonald)"
            )),
        }
    }
}

/// A fully specified code: family, modulus, dimension, and (for MacDonald)
/// the puncture dimension u with 2 <= u <= k-1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CodeSpec {
    pub family: CodeFamily,
    pub q: u64,
    pub k: u32,
    pub u: Option<u32>,
}

impl CodeSpec {
    pub fn simplex(q: u64, k: u32) -> Self {
        Self {
            family: CodeFamily::Simplex,
            q,
            k,
            u: None,
        }
    }

    pub fn macdonald(q: u64, k: u32, u: u32) -> Self {
        Self {
            family: CodeFamily::Macdonald,
            q,
            k,
            u: Some(u),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.q < 2 {
            return Err(Error::ModulusTooSmall(self.q));
        }
        match self.family {
            CodeFamily::Simplex => {
                if self.k < 1 {
                    return Err(Error::DimensionTooSmall { k: self.k, min: 1 });
                }
            }
            CodeFamily::Macdonald => {
                let max_u = self.k.saturating_sub(1);
                let u = self.u.unwrap_or(0);
                if u < 2 || u > max_u {
                    return Err(Error::PunctureOutOfRange { u, max_u });
                }
            }
        }
        Ok(())
    }

    /// Builds the canonical generator matrix for this spec.
    pub fn generator(&self) -> Result<GeneratorMatrix> {
        self.validate()?;
        match self.family {
            CodeFamily::Simplex => simplex_generator(self.q, self.k),
            CodeFamily::Macdonald => macdonald_generator(self.q, self.k, self.u.unwrap()),
        }
    }

    /// Code length n without building the matrix.
    pub fn length(&self) -> Result<u64> {
        self.validate()?;
        match self.family {
            CodeFamily::Simplex => simplex_length(self.q, self.k),
            CodeFamily::Macdonald => macdonald_length(self.q, self.k, self.u.unwrap()),
        }
    }
}

impl fmt::Display for CodeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.u {
            Some(u) => write!(f, "{} q={} k={} u={}", self.family, self.q, self.k, u),
            None => write!(f, "{} q={} k={}", self.family, self.q, self.k),
        }
    }
}

/// Length of S_k(q): (q^k - 1)/(q - 1), in exact integer arithmetic.
pub fn simplex_length(q: u64, k: u32) -> Result<u64> {
    if q < 2 {
        return Err(Error::ModulusTooSmall(q));
    }
    if k < 1 {
        return Err(Error::DimensionTooSmall { k, min: 1 });
    }
    let power = q
        .checked_pow(k)
        .ok_or(Error::Overflow("simplex length q^k"))?;
    Ok((power - 1) / (q - 1))
}

/// Length of M_{k,u}(q): (q^k - q^u)/(q - 1).
pub fn macdonald_length(q: u64, k: u32, u: u32) -> Result<u64> {
    check_puncture(q, k, u)?;
    Ok(simplex_length(q, k)? - simplex_length(q, u)?)
}

fn check_puncture(q: u64, k: u32, u: u32) -> Result<()> {
    if q < 2 {
        return Err(Error::ModulusTooSmall(q));
    }
    let max_u = k.saturating_sub(1);
    if u < 2 || u > max_u {
        return Err(Error::PunctureOutOfRange { u, max_u });
    }
    Ok(())
}

/// The canonical k x n_k generator matrix of the simplex code S_k(q).
pub fn simplex_generator(q: u64, k: u32) -> Result<GeneratorMatrix> {
    let n = simplex_length(q, k)?;
    let entries = (k as u128) * (n as u128);
    if entries > MAX_GENERATOR_ENTRIES as u128 {
        return Err(Error::GeneratorTooLarge {
            entries,
            limit: MAX_GENERATOR_ENTRIES,
        });
    }
    let mut rows: Vec<Vec<u64>> = vec![vec![1]];
    for _ in 2..=k {
        let prev_n = rows[0].len();
        let next_n = prev_n * (q as usize) + 1;
        let mut top = Vec::with_capacity(next_n);
        top.resize(prev_n, 0);
        top.push(1);
        for i in 1..q {
            top.extend(std::iter::repeat_n(i, prev_n));
        }
        let mut next = Vec::with_capacity(rows.len() + 1);
        next.push(top);
        for row in &rows {
            let mut copy = Vec::with_capacity(next_n);
            copy.extend_from_slice(row);
            copy.push(0);
            for _ in 1..q {
                copy.extend_from_slice(row);
            }
            next.push(copy);
        }
        rows = next;
    }
    GeneratorMatrix::new(q, rows)
}

/// The k x (n_k - n_u) generator matrix of M_{k,u}(q): the simplex matrix
/// with its leading n_u columns removed.
pub fn macdonald_generator(q: u64, k: u32, u: u32) -> Result<GeneratorMatrix> {
    check_puncture(q, k, u)?;
    let skip = simplex_length(q, u)? as usize;
    let simplex = simplex_generator(q, k)?;
    let rows = simplex
        .rows()
        .iter()
        .map(|row| row[skip..].to_vec())
        .collect();
    GeneratorMatrix::new(q, rows)
}

/// The codeword of M_{k,k-1}(q) parameterized by `(c, alpha)`:
/// `(alpha, c + alpha*1, c + alpha*2, ..., c + alpha*(q-1))`, where each
/// block adds the constant `alpha*i` to every coordinate of c. When c ranges
/// over S_{k-1}(q) and alpha over Z_q this enumerates the whole code.
pub fn macdonald_codeword(q: u64, c: &ZqVector, alpha: u64) -> Result<ZqVector> {
    if c.q() != q {
        return Err(Error::ModulusMismatch {
            left: c.q(),
            right: q,
        });
    }
    if alpha >= q {
        return Err(Error::ResidueOutOfRange { value: alpha, q });
    }
    let mut coords = Vec::with_capacity(1 + c.len() * (q as usize - 1));
    coords.push(alpha);
    for i in 1..q {
        let shift = alpha * i % q;
        coords.extend(c.coords().iter().map(|&x| (x + shift) % q));
    }
    ZqVector::new(q, coords)
}
