//! Entropy estimates `log|π_F(X)| / |F|` along a window schedule.

use std::ops::RangeInclusive;

use num_rational::Ratio;

use crate::automaton::CellularAutomaton;
use crate::error::{Error, Result};
use crate::semigroup::{Semigroup, WindowSchedule};

use super::enumerate::{code_space, Enumeration};
use super::image::window_image;

/// The subshift whose patterns are counted.
#[derive(Clone, Copy, Debug)]
pub enum EntropySource<'a> {
    FullShift { alphabet: usize },
    Image(&'a CellularAutomaton),
}

impl EntropySource<'_> {
    pub fn alphabet(&self) -> usize {
        match self {
            EntropySource::FullShift { alphabet } => *alphabet,
            EntropySource::Image(ca) => ca.alphabet(),
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            EntropySource::FullShift { .. } => "full",
            EntropySource::Image(_) => "image",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EntropyStep {
    pub n: usize,
    pub window_size: usize,
    /// `|π_F(X)|`, exact.
    pub count: u128,
    /// `log|π_F(X)| / |F|` in nats.
    pub value: f64,
    /// Largest value so far; a finite stand-in for the limit superior.
    pub running_max: f64,
}

/// Where and why a trace stopped early.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Truncation {
    pub n: usize,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EntropyTrace {
    pub source: &'static str,
    pub alphabet: usize,
    pub schedule: WindowSchedule,
    pub steps: Vec<EntropyStep>,
    pub truncated: Option<Truncation>,
}

impl EntropyTrace {
    pub fn estimate(&self) -> Option<f64> {
        self.steps.last().map(|s| s.running_max)
    }
}

/// Counts window patterns for each `n` in `ns`. A window whose enumeration
/// exceeds the budget ends the trace with a [`Truncation`]; steps computed so
/// far are kept.
pub fn estimate_entropy(
    sg: &Semigroup,
    source: EntropySource<'_>,
    schedule: WindowSchedule,
    ns: RangeInclusive<usize>,
    cfg: &Enumeration,
) -> Result<EntropyTrace> {
    let q = source.alphabet();
    if q == 0 {
        return Err(Error::invalid("alphabet must be non-empty"));
    }
    if *ns.start() == 0 {
        return Err(Error::invalid("window indices start at 1"));
    }
    if schedule == WindowSchedule::Folner && !sg.has_folner_sequence() {
        return Err(Error::NoFolnerSequence(format!("{sg} admits no Følner sequence")));
    }
    let mut trace = EntropyTrace {
        source: source.label(),
        alphabet: q,
        schedule,
        steps: Vec::new(),
        truncated: None,
    };
    let mut running_max = f64::NEG_INFINITY;
    for n in ns {
        let window = sg.scheduled_window(schedule, n)?;
        let counted = match source {
            EntropySource::FullShift { .. } => code_space(q, window.len()),
            EntropySource::Image(ca) => window_image(sg, ca, &window, cfg).map(|img| img.count),
        };
        let count = match counted {
            Ok(c) => c,
            Err(e) if e.is_budget() => {
                trace.truncated = Some(Truncation {
                    n,
                    reason: e.to_string(),
                });
                break;
            }
            Err(e) => return Err(e),
        };
        let value = (count as f64).ln() / window.len() as f64;
        running_max = running_max.max(value);
        trace.steps.push(EntropyStep {
            n,
            window_size: window.len(),
            count,
            value,
            running_max,
        });
    }
    Ok(trace)
}

/// `c = -ln(1 - q^{-|K|})`, the per-tile loss for a subshift missing a
/// pattern on a window of size `|K|`.
pub fn tile_loss(q: usize, shape_size: usize) -> Result<f64> {
    if q < 2 {
        return Err(Error::invalid("alphabet size must be at least 2"));
    }
    if shape_size == 0 {
        return Err(Error::invalid("shape K must be non-empty"));
    }
    Ok(-(-(q as f64).powi(-(shape_size as i32))).ln_1p())
}

/// Upper bound `log q - c·δ` on the entropy of a subshift that misses some
/// pattern supported on a translate of `K`.
pub fn entropy_deficit_bound(q: usize, shape_size: usize, delta: Ratio<u64>) -> Result<f64> {
    if *delta.numer() == 0 || delta > Ratio::from_integer(1) {
        return Err(Error::invalid("density δ must lie in (0, 1]"));
    }
    let c = tile_loss(q, shape_size)?;
    let delta = *delta.numer() as f64 / *delta.denom() as f64;
    Ok((q as f64).ln() - c * delta)
}

/// Window form of the same bound: `|F| log q - c·|T_F|` bounds
/// `log|π_F(X)|` when `T_F` counts disjoint tile translates inside `F`.
pub fn window_count_bound(q: usize, shape_size: usize, window_size: usize, tiles_inside: usize) -> Result<f64> {
    let c = tile_loss(q, shape_size)?;
    Ok(window_size as f64 * (q as f64).ln() - c * tiles_inside as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::Element;

    #[test]
    fn full_shift_entropy_is_log_q() {
        let sg = Semigroup::int_pow(2).unwrap();
        let t = estimate_entropy(
            &sg,
            EntropySource::FullShift { alphabet: 3 },
            WindowSchedule::Folner,
            1..=4,
            &Enumeration::default(),
        )
        .unwrap();
        // 3^81 does not fit the exact counter
        assert_eq!(t.truncated.as_ref().unwrap().n, 4);
        for s in &t.steps {
            assert_eq!(s.count, 3u128.pow(s.window_size as u32));
            assert!((s.value - 3f64.ln()).abs() < 1e-12);
        }
    }

    #[test]
    fn free_monoid_has_no_folner_schedule() {
        let sg = Semigroup::free_monoid(2).unwrap();
        let err = estimate_entropy(
            &sg,
            EntropySource::FullShift { alphabet: 2 },
            WindowSchedule::Folner,
            1..=3,
            &Enumeration::default(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::NoFolnerSequence(_)));
    }

    #[test]
    fn and_counts_and_truncation() {
        let sg = Semigroup::int_pow(1).unwrap();
        let ca = CellularAutomaton::from_local_rule(2, vec![Element::int(0), Element::int(1)], |t| {
            t[0] & t[1]
        })
        .unwrap();
        let t = estimate_entropy(
            &sg,
            EntropySource::Image(&ca),
            WindowSchedule::Anchored,
            1..=10,
            &Enumeration::with_budget(1 << 8),
        )
        .unwrap();
        let counts: Vec<u128> = t.steps.iter().map(|s| s.count).collect();
        assert_eq!(counts[..3], [2, 4, 7]);
        // |MF_n| = n + 1 ≤ 8
        assert_eq!(t.steps.len(), 7);
        assert_eq!(t.truncated.as_ref().unwrap().n, 8);
    }

    #[test]
    fn deficit_bound_values() {
        let b = entropy_deficit_bound(2, 1, Ratio::new(1, 4)).unwrap();
        assert!((b - (2f64.ln() - 2f64.ln() / 4.0)).abs() < 1e-12);
        assert!(entropy_deficit_bound(1, 1, Ratio::new(1, 4)).is_err());
        assert!(entropy_deficit_bound(2, 0, Ratio::new(1, 4)).is_err());
        assert!(entropy_deficit_bound(2, 1, Ratio::new(0, 1)).is_err());
        assert!(entropy_deficit_bound(2, 1, Ratio::new(3, 2)).is_err());
    }
}
