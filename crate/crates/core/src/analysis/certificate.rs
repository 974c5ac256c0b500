//! Certificates and their independent replay.
//!
//! Replay re-derives each claim from the pattern-level functions of
//! [`crate::automaton`], without the encoded fast paths used by the searches.

use std::collections::HashSet;

use crate::automaton::{apply_with_background, dependence_window, CellularAutomaton, Pattern, Symbol};
use crate::error::Result;
use crate::geometry::adherence;
use crate::semigroup::{Semigroup, Window};

use super::audit::{AuditVerdict, PreInjectiveUpTo, SurjectiveUpTo};
use super::entropy::EntropyTrace;
use super::enumerate::Enumeration;
use super::erasable::ErasablePair;
use super::image::GoeCertificate;

#[derive(Clone, Debug, PartialEq)]
pub enum Certificate {
    GoePattern(GoeCertificate),
    MutuallyErasablePair(ErasablePair),
    SurjectiveUpTo(SurjectiveUpTo),
    PreInjectiveUpTo(PreInjectiveUpTo),
    EntropyTrace(EntropyTrace),
    AuditVerdict(AuditVerdict),
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::GoePattern(_) => "goe_pattern",
            Certificate::MutuallyErasablePair(_) => "mutually_erasable_pair",
            Certificate::SurjectiveUpTo(_) => "surjective_up_to",
            Certificate::PreInjectiveUpTo(_) => "pre_injective_up_to",
            Certificate::EntropyTrace(_) => "entropy_trace",
            Certificate::AuditVerdict(_) => "audit_verdict",
        }
    }

    /// Re-checks the certificate against `ca` on `sg`. Returns `Ok(false)` when
    /// the claim does not hold; errors when the replay itself exceeds `budget`.
    pub fn replay(&self, sg: &Semigroup, ca: &CellularAutomaton, budget: u64) -> Result<bool> {
        let cfg = Enumeration::with_budget(budget);
        match self {
            Certificate::GoePattern(c) => replay_goe(sg, ca, c, &cfg),
            Certificate::MutuallyErasablePair(p) => replay_pair(sg, ca, p),
            Certificate::SurjectiveUpTo(s) => {
                for r in &s.windows {
                    let image = slow_image(sg, ca, &r.window, &cfg)?;
                    let full = (ca.alphabet() as u128).pow(r.window.len() as u32);
                    if image.len() as u128 != r.count || r.count != full {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            Certificate::PreInjectiveUpTo(p) => {
                for support in &p.supports {
                    if !replay_distinct(sg, ca, support, p.background, &cfg)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            Certificate::EntropyTrace(t) => replay_trace(sg, ca, t, &cfg),
            Certificate::AuditVerdict(v) => {
                let mut parts = vec![
                    Certificate::SurjectiveUpTo(v.surjective_up_to.clone()),
                    Certificate::PreInjectiveUpTo(v.pre_injective_up_to.clone()),
                ];
                parts.extend(v.goe.clone().map(Certificate::GoePattern));
                parts.extend(v.erasable.clone().map(Certificate::MutuallyErasablePair));
                for part in parts {
                    if !part.replay(sg, ca, budget)? {
                        return Ok(false);
                    }
                }
                Ok(v.cancellative == sg.is_cancellative() && v.folner_available == sg.has_folner_sequence())
            }
        }
    }
}

/// Every pattern over `window`, in lexicographic order.
fn all_patterns<'a>(window: &'a Window, q: usize, cfg: &Enumeration) -> Result<impl Iterator<Item = Pattern> + 'a> {
    let total = cfg.assignments(q, window.len(), "replay")?;
    Ok((0..total).map(move |mut i| {
        let mut values = vec![0 as Symbol; window.len()];
        for v in values.iter_mut().rev() {
            *v = (i % q as u64) as Symbol;
            i /= q as u64;
        }
        Pattern::new(window.clone(), values).expect("symbols are in range")
    }))
}

fn slow_image(
    sg: &Semigroup,
    ca: &CellularAutomaton,
    omega: &Window,
    cfg: &Enumeration,
) -> Result<HashSet<Vec<Symbol>>> {
    let dependence = dependence_window(sg, ca, omega)?;
    let mut image = HashSet::new();
    for p in all_patterns(&dependence, ca.alphabet(), cfg)? {
        // every cell read on Ω lies in the dependence window, so the
        // background value is never consulted
        let out = apply_with_background(sg, ca, &p, 0, omega)?;
        image.insert(out.values().to_vec());
    }
    Ok(image)
}

fn replay_goe(sg: &Semigroup, ca: &CellularAutomaton, c: &GoeCertificate, cfg: &Enumeration) -> Result<bool> {
    let image = slow_image(sg, ca, c.window(), cfg)?;
    Ok(!image.contains(c.missing.values()) && image.len() as u128 == c.image_count)
}

fn replay_pair(sg: &Semigroup, ca: &CellularAutomaton, p: &ErasablePair) -> Result<bool> {
    if p.first == p.second || p.first.window() != &p.support || p.second.window() != &p.support {
        return Ok(false);
    }
    let adh = adherence(sg, &p.support, &ca.memory_window())?;
    if adh != p.adherence {
        return Ok(false);
    }
    // Off the adherence both images read background only; compare a margin
    // around it as well.
    let margin = dependence_window(sg, ca, &adh)?.union(&adh).union(&p.support);
    let a = apply_with_background(sg, ca, &p.first, p.background, &margin)?;
    let b = apply_with_background(sg, ca, &p.second, p.background, &margin)?;
    Ok(a == b)
}

fn replay_distinct(
    sg: &Semigroup,
    ca: &CellularAutomaton,
    support: &Window,
    background: Symbol,
    cfg: &Enumeration,
) -> Result<bool> {
    let adh = adherence(sg, support, &ca.memory_window())?;
    let mut seen = HashSet::new();
    for p in all_patterns(support, ca.alphabet(), cfg)? {
        let image = apply_with_background(sg, ca, &p, background, &adh)?;
        if !seen.insert(image.values().to_vec()) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn replay_trace(sg: &Semigroup, ca: &CellularAutomaton, t: &EntropyTrace, cfg: &Enumeration) -> Result<bool> {
    let q = t.alphabet as u128;
    let mut running_max = f64::NEG_INFINITY;
    for step in &t.steps {
        let window = sg.scheduled_window(t.schedule, step.n)?;
        if window.len() != step.window_size {
            return Ok(false);
        }
        let count = if t.source == "full" {
            q.checked_pow(window.len() as u32)
        } else {
            Some(slow_image(sg, ca, &window, cfg)?.len() as u128)
        };
        if count != Some(step.count) {
            return Ok(false);
        }
        let value = (step.count as f64).ln() / window.len() as f64;
        running_max = running_max.max(value);
        if (value - step.value).abs() > 1e-12 || (running_max - step.running_max).abs() > 1e-12 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{estimate_entropy, EntropySource, find_goe_pattern, find_mutually_erasable, myhill_audit};
    use crate::semigroup::{Element, WindowSchedule};

    fn and_rule() -> CellularAutomaton {
        CellularAutomaton::from_local_rule(2, vec![Element::int(0), Element::int(1)], |t| t[0] & t[1]).unwrap()
    }

    #[test]
    fn found_certificates_replay() {
        let sg = Semigroup::int_pow(1).unwrap();
        let ca = and_rule();
        let cfg = Enumeration::default();
        let w = sg.anchored_window(3).unwrap();
        let goe = find_goe_pattern(&sg, &ca, &w, &cfg).unwrap().unwrap();
        assert!(Certificate::GoePattern(goe.clone()).replay(&sg, &ca, 1 << 20).unwrap());
        let pair = find_mutually_erasable(&sg, &ca, &w, 0, &cfg).unwrap().unwrap();
        assert!(Certificate::MutuallyErasablePair(pair).replay(&sg, &ca, 1 << 20).unwrap());

        let trace =
            estimate_entropy(&sg, EntropySource::Image(&ca), WindowSchedule::Anchored, 1..=6, &cfg).unwrap();
        assert!(Certificate::EntropyTrace(trace).replay(&sg, &ca, 1 << 20).unwrap());

        let windows: Vec<Window> = (1..=4).map(|n| sg.anchored_window(n).unwrap()).collect();
        let v = myhill_audit(&sg, &ca, &windows, 0, &cfg).unwrap();
        assert!(Certificate::AuditVerdict(v).replay(&sg, &ca, 1 << 20).unwrap());

        // A pattern that is in the image is rejected.
        let mut forged = goe;
        forged.missing = Pattern::new(w.clone(), vec![0, 0, 0]).unwrap();
        assert!(!Certificate::GoePattern(forged).replay(&sg, &ca, 1 << 20).unwrap());
    }

    #[test]
    fn forged_pair_is_rejected() {
        let sg = Semigroup::int_pow(1).unwrap();
        let xor = CellularAutomaton::from_local_rule(2, vec![Element::int(0), Element::int(1)], |t| t[0] ^ t[1])
            .unwrap();
        let w = sg.anchored_window(2).unwrap();
        let pair = ErasablePair {
            support: w.clone(),
            background: 0,
            first: Pattern::new(w.clone(), vec![0, 0]).unwrap(),
            second: Pattern::new(w.clone(), vec![0, 1]).unwrap(),
            adherence: adherence(&sg, &w, &xor.memory_window()).unwrap(),
        };
        assert!(!Certificate::MutuallyErasablePair(pair).replay(&sg, &xor, 1 << 20).unwrap());
        let claim = PreInjectiveUpTo {
            background: 0,
            supports: vec![w],
        };
        assert!(Certificate::PreInjectiveUpTo(claim.clone()).replay(&sg, &xor, 1 << 20).unwrap());
        assert!(!Certificate::PreInjectiveUpTo(claim).replay(&sg, &and_rule(), 1 << 20).unwrap());
    }
}
