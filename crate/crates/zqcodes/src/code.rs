//! Vectors and generator matrices over Z_q, codeword enumeration, Hamming
//! metrics, and exact weight distributions computed by exhaustive search.
//!
//! Enumeration order is fixed: message index i visits the message whose
//! base-q digits are i, most significant digit first, so streams are
//! reproducible and any split of the index range can be computed
//! independently and merged by pointwise histogram addition.

use std::collections::BTreeMap;
use std::fmt;

use crate::{Error, Result};

/// A fixed-length tuple of residues mod q. Coordinates are always kept in
/// canonical form [0, q-1].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZqVector {
    q: u64,
    coords: Vec<u64>,
}

impl ZqVector {
    pub fn new(q: u64, coords: Vec<u64>) -> Result<Self> {
        if q < 2 {
            return Err(Error::ModulusTooSmall(q));
        }
        if coords.is_empty() {
            return Err(Error::EmptyVector);
        }
        if let Some(&bad) = coords.iter().find(|&&c| c >= q) {
            return Err(Error::ResidueOutOfRange { value: bad, q });
        }
        Ok(Self { q, coords })
    }

    pub fn zero(q: u64, len: usize) -> Result<Self> {
        Self::new(q, vec![0; len])
    }

    /// Skips range checks; callers guarantee every coordinate is reduced.
    pub(crate) fn from_raw(q: u64, coords: Vec<u64>) -> Self {
        debug_assert!(q >= 2 && coords.iter().all(|&c| c < q));
        Self { q, coords }
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    /// Number of nonzero coordinates.
    pub fn hamming_weight(&self) -> usize {
        self.coords.iter().filter(|&&c| c != 0).count()
    }

    /// Number of coordinates in which the two vectors differ. Equals the
    /// Hamming weight of their difference.
    pub fn hamming_distance(&self, other: &Self) -> Result<usize> {
        self.check_compatible(other)?;
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .filter(|(a, b)| a != b)
            .count())
    }

    /// Coordinatewise sum mod q.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| (a + b) % self.q)
            .collect();
        Ok(Self::from_raw(self.q, coords))
    }

    /// Coordinatewise difference mod q.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| (self.q + a - b) % self.q)
            .collect();
        Ok(Self::from_raw(self.q, coords))
    }

    /// Counts how many coordinates equal each residue.
    pub fn coordinate_profile(&self) -> CoordinateProfile {
        CoordinateProfile::of(self)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.q != other.q {
            return Err(Error::ModulusMismatch {
                left: self.q,
                right: other.q,
            });
        }
        if self.coords.len() != other.coords.len() {
            return Err(Error::LengthMismatch {
                left: self.coords.len(),
                right: other.coords.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for ZqVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, c) in self.coords.iter().enumerate() {
            if j > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Per-residue coordinate counts of one vector: `count_of(i)` is the number
/// of coordinates equal to i, so `count_of(0)` is the number of zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordinateProfile {
    q: u64,
    len: usize,
    counts: Vec<usize>,
}

impl CoordinateProfile {
    pub fn of(v: &ZqVector) -> Self {
        let mut counts = vec![0usize; v.q as usize];
        for &c in &v.coords {
            counts[c as usize] += 1;
        }
        Self {
            q: v.q,
            len: v.coords.len(),
            counts,
        }
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Total number of coordinates of the profiled vector.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Count of coordinates equal to `residue` (reduced mod q).
    pub fn count_of(&self, residue: u64) -> usize {
        self.counts[(residue % self.q) as usize]
    }

    /// Count of zero coordinates.
    pub fn zeros(&self) -> usize {
        self.counts[0]
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }
}

/// A k x n matrix of residues mod q whose row span is the code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorMatrix {
    q: u64,
    rows: Vec<Vec<u64>>,
    n: usize,
}

impl GeneratorMatrix {
    pub fn new(q: u64, rows: Vec<Vec<u64>>) -> Result<Self> {
        if q < 2 {
            return Err(Error::ModulusTooSmall(q));
        }
        let n = match rows.first() {
            Some(r) if !r.is_empty() => r.len(),
            _ => return Err(Error::RaggedMatrix),
        };
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::RaggedMatrix);
        }
        for row in &rows {
            if let Some(&bad) = row.iter().find(|&&c| c >= q) {
                return Err(Error::ResidueOutOfRange { value: bad, q });
            }
        }
        Ok(Self { q, rows, n })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Number of rows (the code dimension).
    pub fn k(&self) -> usize {
        self.rows.len()
    }

    /// Number of columns (the code length).
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.rows[i]
    }

    /// Number of messages, q^k, when it fits in a u64.
    pub fn message_count(&self) -> Result<u64> {
        self.q
            .checked_pow(self.rows.len() as u32)
            .ok_or(Error::Overflow("message count q^k"))
    }

    fn message_count_capped(&self, cap: u64) -> Result<u64> {
        let total = (self.q as u128)
            .checked_pow(self.rows.len() as u32)
            .unwrap_or(u128::MAX);
        if total > cap as u128 {
            return Err(Error::EnumerationTooLarge {
                messages: total,
                cap,
            });
        }
        Ok(total as u64)
    }

    /// Encodes a length-k message: coordinate j of the result is the mod-q
    /// dot product of the message with column j.
    pub fn encode(&self, message: &ZqVector) -> Result<ZqVector> {
        if message.q != self.q {
            return Err(Error::ModulusMismatch {
                left: message.q,
                right: self.q,
            });
        }
        if message.len() != self.rows.len() {
            return Err(Error::MessageLengthMismatch {
                message_len: message.len(),
                rows: self.rows.len(),
            });
        }
        let mut out = vec![0u64; self.n];
        for (digit, row) in message.coords.iter().zip(&self.rows) {
            if *digit == 0 {
                continue;
            }
            for (acc, &g) in out.iter_mut().zip(row) {
                *acc = (*acc + digit * g) % self.q;
            }
        }
        Ok(ZqVector::from_raw(self.q, out))
    }

    /// Streams all q^k codewords as `(message_index, codeword)` in
    /// lexicographic message order; the index is the base-q encoding of the
    /// message with the first row's coefficient as the most significant
    /// digit. Errors when q^k exceeds `cap`.
    pub fn codewords(&self, cap: u64) -> Result<Codewords<'_>> {
        let total = self.message_count_capped(cap)?;
        Ok(Codewords {
            sweep: MessageSweep::seeded(self, 0),
            matrix: self,
            next_index: 0,
            end: total,
        })
    }

    /// Exact weight distribution by exhaustive enumeration of all q^k
    /// messages. Errors when q^k exceeds `cap`.
    pub fn weight_distribution_bruteforce(&self, cap: u64) -> Result<WeightDistribution> {
        self.weight_distribution_bruteforce_partitioned(cap, 1)
    }

    /// Same distribution, computed by `workers` threads over disjoint
    /// message-index ranges merged by pointwise addition. The result is
    /// identical to the serial computation for every worker count.
    pub fn weight_distribution_bruteforce_partitioned(
        &self,
        cap: u64,
        workers: usize,
    ) -> Result<WeightDistribution> {
        if workers == 0 {
            return Err(Error::NoWorkers);
        }
        let total = self.message_count_capped(cap)?;
        let chunk = (total / workers as u64).max(1);
        let histogram = if workers == 1 || total <= chunk {
            self.weight_histogram_range(0, total)
        } else {
            let mut bounds: Vec<(u64, u64)> = Vec::with_capacity(workers);
            let mut start = 0;
            for w in 0..workers as u64 {
                let end = if w + 1 == workers as u64 {
                    total
                } else {
                    (start + chunk).min(total)
                };
                bounds.push((start, end));
                start = end;
            }
            let partials: Vec<Vec<u64>> = std::thread::scope(|scope| {
                let handles: Vec<_> = bounds
                    .iter()
                    .map(|&(s, e)| scope.spawn(move || self.weight_histogram_range(s, e)))
                    .collect();
                handles.into_iter().map(|h| h.join().unwrap()).collect()
            });
            let mut merged = vec![0u64; self.n + 1];
            for partial in partials {
                for (acc, v) in merged.iter_mut().zip(partial) {
                    *acc += v;
                }
            }
            merged
        };
        let counts: BTreeMap<usize, u64> = histogram
            .into_iter()
            .enumerate()
            .filter(|&(_, c)| c > 0)
            .collect();
        WeightDistribution::new(self.q, self.rows.len() as u32, self.n, counts)
    }

    /// Weight histogram (indexed by weight, length n+1) of the codewords for
    /// message indices in `[start, end)`. Partial histograms over a disjoint
    /// cover of `[0, q^k)` sum to the full distribution.
    ///
    /// Panics if the range exceeds the message count.
    pub fn weight_histogram_range(&self, start: u64, end: u64) -> Vec<u64> {
        let total = (self.q as u128)
            .checked_pow(self.rows.len() as u32)
            .unwrap_or(u128::MAX);
        assert!(
            start <= end && (end as u128) <= total,
            "range out of bounds"
        );
        let mut histogram = vec![0u64; self.n + 1];
        if start == end {
            return histogram;
        }
        let mut sweep = MessageSweep::seeded(self, start);
        for index in start..end {
            let weight = sweep.word.iter().filter(|&&c| c != 0).count();
            histogram[weight] += 1;
            if index + 1 < end {
                sweep.advance(self);
            }
        }
        histogram
    }
}

impl fmt::Display for GeneratorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            for (j, c) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{c}")?;
            }
        }
        Ok(())
    }
}

/// Odometer over messages in lexicographic order, keeping the current
/// codeword up to date. Incrementing digit i by 1 mod q adds row i to the
/// word, including on wrap-around, so each step is a handful of row
/// additions (amortized about q/(q-1) of them).
struct MessageSweep {
    digits: Vec<u64>,
    word: Vec<u64>,
}

impl MessageSweep {
    fn seeded(matrix: &GeneratorMatrix, index: u64) -> Self {
        let k = matrix.rows.len();
        let mut digits = vec![0u64; k];
        let mut rest = index;
        for slot in digits.iter_mut().rev() {
            *slot = rest % matrix.q;
            rest /= matrix.q;
        }
        let mut word = vec![0u64; matrix.n];
        for (digit, row) in digits.iter().zip(&matrix.rows) {
            if *digit == 0 {
                continue;
            }
            for (acc, &g) in word.iter_mut().zip(row) {
                *acc = (*acc + digit * g) % matrix.q;
            }
        }
        Self { digits, word }
    }

    fn advance(&mut self, matrix: &GeneratorMatrix) {
        for i in (0..self.digits.len()).rev() {
            for (acc, &g) in self.word.iter_mut().zip(&matrix.rows[i]) {
                *acc = (*acc + g) % matrix.q;
            }
            self.digits[i] += 1;
            if self.digits[i] == matrix.q {
                self.digits[i] = 0;
            } else {
                return;
            }
        }
    }
}

/// Iterator over `(message_index, codeword)` pairs; see
/// [`GeneratorMatrix::codewords`].
pub struct Codewords<'a> {
    sweep: MessageSweep,
    matrix: &'a GeneratorMatrix,
    next_index: u64,
    end: u64,
}

impl Iterator for Codewords<'_> {
    type Item = (u64, ZqVector);

    fn next(&mut self) -> Option<Self::Item> {
        if self.next_index >= self.end {
            return None;
        }
        let index = self.next_index;
        let word = ZqVector::from_raw(self.matrix.q, self.sweep.word.clone());
        self.next_index += 1;
        if self.next_index < self.end {
            self.sweep.advance(self.matrix);
        }
        Some((index, word))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next_index) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Codewords<'_> {}

/// Exact weight distribution of one code: `counts[w]` is the number of
/// messages whose codeword has Hamming weight w. Weights with a zero count
/// are omitted; the counts always sum to q^k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDistribution {
    q: u64,
    k: u32,
    n: usize,
    counts: BTreeMap<usize, u64>,
}

impl WeightDistribution {
    pub fn new(q: u64, k: u32, n: usize, counts: BTreeMap<usize, u64>) -> Result<Self> {
        if q < 2 {
            return Err(Error::ModulusTooSmall(q));
        }
        let cardinality = q.checked_pow(k).ok_or(Error::Overflow("cardinality q^k"))?;
        let mut total: u64 = 0;
        for (&w, &count) in &counts {
            if w > n {
                return Err(Error::Overflow("weight exceeds code length"));
            }
            if count == 0 {
                return Err(Error::Overflow("stored zero count"));
            }
            total = total
                .checked_add(count)
                .ok_or(Error::Overflow("distribution total"))?;
        }
        if total != cardinality {
            return Err(Error::Overflow("distribution total differs from q^k"));
        }
        if counts.get(&0).copied().unwrap_or(0) == 0 {
            return Err(Error::Overflow("missing zero-weight codeword"));
        }
        Ok(Self { q, k, n, counts })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn counts(&self) -> &BTreeMap<usize, u64> {
        &self.counts
    }

    pub fn count_of(&self, weight: usize) -> u64 {
        self.counts.get(&weight).copied().unwrap_or(0)
    }

    /// Total number of codewords counted, q^k.
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Smallest nonzero weight present. For the linear codes built here this
    /// equals the minimum pairwise distance.
    pub fn min_distance(&self) -> Result<usize> {
        self.counts
            .keys()
            .find(|&&w| w > 0)
            .copied()
            .ok_or(Error::TrivialCode)
    }

    /// The [n, k, d] parameters this distribution witnesses.
    pub fn parameters(&self) -> Result<CodeParameters> {
        Ok(CodeParameters {
            n: self.n as u64,
            k: self.k,
            d_min: self.min_distance()? as u64,
            cardinality: self.total(),
        })
    }
}

impl fmt::Display for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (w, count)) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{w}: {count}")?;
        }
        write!(f, "}}")
    }
}

/// [n, k, d] parameters of a code, plus its cardinality q^k.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CodeParameters {
    pub n: u64,
    pub k: u32,
    pub d_min: u64,
    pub cardinality: u64,
}

impl fmt::Display for CodeParameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} k={} d={}", self.n, self.k, self.d_min)
    }
}
