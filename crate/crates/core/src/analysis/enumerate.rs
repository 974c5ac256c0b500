//! Exhaustive enumeration of assignments on a finite window.
//!
//! Assignments are numbered `0..q^n` in base `q`, first cell most
//! significant. The index space is cut into fixed chunks whose boundaries do
//! not depend on the worker count, and partial results are merged in chunk
//! order, so every reduction is identical for any number of workers.

use std::collections::HashSet;
use std::ops::Range;

use crate::automaton::Symbol;
use crate::error::{Error, Result};

/// Default number of assignments a single window enumeration may visit.
pub const DEFAULT_BUDGET: u64 = 1 << 24;

const CHUNK: u64 = 1 << 12;
const DENSE_LIMIT: u128 = 1 << 26;

/// Budget and parallelism for the enumeration engines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub budget: u64,
    pub workers: usize,
}

impl Default for Enumeration {
    fn default() -> Self {
        Enumeration {
            budget: DEFAULT_BUDGET,
            workers: 1,
        }
    }
}

impl Enumeration {
    pub fn with_budget(budget: u64) -> Self {
        Enumeration {
            budget,
            ..Self::default()
        }
    }

    pub fn workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }

    /// `q^cells`, or a budget error naming the exponent.
    pub fn assignments(&self, alphabet: usize, cells: usize, what: &str) -> Result<u64> {
        let total = (alphabet as u128).checked_pow(cells as u32);
        match total {
            Some(t) if t <= self.budget as u128 => Ok(t as u64),
            _ => Err(Error::BudgetExceeded {
                what: what.to_string(),
                required: format!("{alphabet}^{cells} assignments"),
                budget: self.budget,
            }),
        }
    }

    /// Maps `f` over fixed-size chunks of `0..total` on up to `workers`
    /// threads; results come back in chunk order.
    pub(crate) fn map_chunks<T, F>(&self, range: Range<u64>, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(Range<u64>) -> T + Sync,
    {
        let chunks: Vec<Range<u64>> = (range.start..range.end)
            .step_by(CHUNK as usize)
            .map(|lo| lo..(lo + CHUNK).min(range.end))
            .collect();
        if self.workers <= 1 || chunks.len() <= 1 {
            return chunks.into_iter().map(&f).collect();
        }
        let per = chunks.len().div_ceil(self.workers);
        std::thread::scope(|scope| {
            let handles: Vec<_> = chunks
                .chunks(per)
                .map(|group| {
                    let f = &f;
                    scope.spawn(move || group.iter().cloned().map(f).collect::<Vec<T>>())
                })
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("enumeration worker panicked"))
                .collect()
        })
    }
}

/// `q^cells` as the size of a pattern code space, if it fits in 128 bits.
pub(crate) fn code_space(alphabet: usize, cells: usize) -> Result<u128> {
    (alphabet as u128)
        .checked_pow(cells as u32)
        .ok_or_else(|| Error::BudgetExceeded {
            what: "pattern encoding".to_string(),
            required: format!("{alphabet}^{cells} codes"),
            budget: u64::MAX,
        })
}

/// Base-`q` code of a pattern, first value most significant. Code order is
/// the lexicographic order of patterns.
#[inline]
pub(crate) fn encode(values: &[Symbol], alphabet: usize) -> u128 {
    values
        .iter()
        .fold(0u128, |acc, &v| acc * alphabet as u128 + v as u128)
}

pub(crate) fn decode(mut code: u128, alphabet: usize, cells: usize) -> Vec<Symbol> {
    let mut out = vec![0; cells];
    for slot in out.iter_mut().rev() {
        *slot = (code % alphabet as u128) as Symbol;
        code /= alphabet as u128;
    }
    out
}

/// Advances `digits` to the next assignment in base `q`.
#[inline]
pub(crate) fn increment(digits: &mut [Symbol], alphabet: usize) {
    for d in digits.iter_mut().rev() {
        if (*d as usize) + 1 < alphabet {
            *d += 1;
            return;
        }
        *d = 0;
    }
}

/// A set of pattern codes: a bitmap for small code spaces, a hash set otherwise.
#[derive(Clone, Debug)]
pub(crate) enum CodeSet {
    Dense { bits: Vec<u64>, len: u128 },
    Sparse(HashSet<u128>),
}

impl CodeSet {
    pub fn new(space: u128) -> Self {
        if space <= DENSE_LIMIT {
            CodeSet::Dense {
                bits: vec![0; (space as usize).div_ceil(64)],
                len: 0,
            }
        } else {
            CodeSet::Sparse(HashSet::new())
        }
    }

    #[inline]
    pub fn insert(&mut self, code: u128) {
        match self {
            CodeSet::Dense { bits, len } => {
                let (w, b) = ((code / 64) as usize, code % 64);
                if bits[w] >> b & 1 == 0 {
                    bits[w] |= 1 << b;
                    *len += 1;
                }
            }
            CodeSet::Sparse(set) => {
                set.insert(code);
            }
        }
    }

    pub fn contains(&self, code: u128) -> bool {
        match self {
            CodeSet::Dense { bits, .. } => {
                let w = (code / 64) as usize;
                w < bits.len() && bits[w] >> (code % 64) & 1 == 1
            }
            CodeSet::Sparse(set) => set.contains(&code),
        }
    }

    pub fn len(&self) -> u128 {
        match self {
            CodeSet::Dense { len, .. } => *len,
            CodeSet::Sparse(set) => set.len() as u128,
        }
    }

    pub fn merge(mut self, other: CodeSet) -> CodeSet {
        match (&mut self, other) {
            (CodeSet::Dense { bits, len }, CodeSet::Dense { bits: more, .. }) => {
                *len = 0;
                for (a, b) in bits.iter_mut().zip(more) {
                    *a |= b;
                    *len += a.count_ones() as u128;
                }
            }
            (CodeSet::Sparse(set), CodeSet::Sparse(more)) => set.extend(more),
            _ => unreachable!("code sets over the same space share a representation"),
        }
        self
    }

    /// Smallest code in `0..space` not in the set.
    pub fn smallest_missing(&self, space: u128) -> Option<u128> {
        match self {
            CodeSet::Dense { bits, .. } => bits
                .iter()
                .enumerate()
                .find(|(_, w)| **w != u64::MAX)
                .map(|(i, w)| i as u128 * 64 + w.trailing_ones() as u128)
                .filter(|&c| c < space),
            CodeSet::Sparse(set) => (0..space).find(|c| !set.contains(c)),
        }
    }
}
