//! Combined surjectivity / pre-injectivity audit over a list of windows.

use crate::automaton::{CellularAutomaton, Symbol};
use crate::error::Result;
use crate::semigroup::{Semigroup, Window};

use super::enumerate::Enumeration;
use super::erasable::{find_mutually_erasable, ErasablePair};
use super::image::{window_image, GoeCertificate};

/// One window whose image was found to be full.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImageRecord {
    pub window: Window,
    pub count: u128,
}

/// Windows on which every pattern was found in the image.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SurjectiveUpTo {
    pub windows: Vec<ImageRecord>,
}

/// Supports on which all `q^|Ω|` supported configurations have distinct images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreInjectiveUpTo {
    pub background: Symbol,
    pub supports: Vec<Window>,
}

/// How the two findings relate to the implication "pre-injective ⇒ surjective",
/// which holds on cancellative semigroups with a Følner sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Consistency {
    Consistent,
    /// A Garden-of-Eden pattern but no erasable pair so far, on a semigroup where
    /// the implication holds: a larger support must produce a pair.
    MyhillTension,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditVerdict {
    pub goe: Option<GoeCertificate>,
    pub erasable: Option<ErasablePair>,
    pub surjective_up_to: SurjectiveUpTo,
    pub pre_injective_up_to: PreInjectiveUpTo,
    pub cancellative: bool,
    pub folner_available: bool,
    pub consistency: Consistency,
    /// Set when a window exceeded the budget; later windows were not examined.
    pub truncated: Option<String>,
}

impl AuditVerdict {
    pub fn surjectivity_refuted(&self) -> bool {
        self.goe.is_some()
    }

    pub fn pre_injectivity_refuted(&self) -> bool {
        self.erasable.is_some()
    }
}

/// Runs the Garden-of-Eden search and the mutually-erasable-pair search on each
/// window in turn, stopping a search once it has found a certificate.
pub fn myhill_audit(
    sg: &Semigroup,
    ca: &CellularAutomaton,
    windows: &[Window],
    background: Symbol,
    cfg: &Enumeration,
) -> Result<AuditVerdict> {
    let mut goe = None;
    let mut erasable = None;
    let mut surjective_up_to = SurjectiveUpTo::default();
    let mut pre_injective_up_to = PreInjectiveUpTo {
        background,
        supports: Vec::new(),
    };
    let mut truncated = None;

    for w in windows {
        if goe.is_some() && erasable.is_some() {
            break;
        }
        let step = (|| -> Result<()> {
            if goe.is_none() {
                let image = window_image(sg, ca, w, cfg)?;
                match image.smallest_missing() {
                    Some(missing) => {
                        goe = Some(GoeCertificate {
                            missing,
                            dependence: image.dependence.clone(),
                            image_count: image.count,
                            full_count: image.full,
                        })
                    }
                    None => surjective_up_to.windows.push(ImageRecord {
                        window: w.clone(),
                        count: image.count,
                    }),
                }
            }
            if erasable.is_none() {
                match find_mutually_erasable(sg, ca, w, background, cfg)? {
                    Some(pair) => erasable = Some(pair),
                    None => pre_injective_up_to.supports.push(w.clone()),
                }
            }
            Ok(())
        })();
        match step {
            Ok(()) => {}
            Err(e) if e.is_budget() => {
                truncated = Some(format!("window of size {}: {e}", w.len()));
                break;
            }
            Err(e) => return Err(e),
        }
    }

    let cancellative = sg.is_cancellative();
    let folner_available = sg.has_folner_sequence();
    let consistency = if goe.is_some() && erasable.is_none() && cancellative && folner_available {
        Consistency::MyhillTension
    } else {
        Consistency::Consistent
    };
    Ok(AuditVerdict {
        goe,
        erasable,
        surjective_up_to,
        pre_injective_up_to,
        cancellative,
        folner_available,
        consistency,
        truncated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::Element;

    #[test]
    fn nat_shift_is_surjective_not_pre_injective() {
        let sg = Semigroup::nat();
        let ca = CellularAutomaton::new(2, vec![Element::Nat(1)], vec![0, 1]).unwrap();
        let windows: Vec<Window> = (1..=8).map(|n| sg.folner_window(n).unwrap()).collect();
        let v = myhill_audit(&sg, &ca, &windows, 0, &Enumeration::default()).unwrap();
        assert!(v.goe.is_none());
        assert_eq!(v.erasable.as_ref().unwrap().support.len(), 1);
        assert_eq!(v.surjective_up_to.windows.len(), 8);
        // ℕ is cancellative and amenable; only the converse implication fails there.
        assert!(v.cancellative && v.folner_available);
        assert_eq!(v.consistency, Consistency::Consistent);
    }

    #[test]
    fn bicyclic_projection_is_injective_not_surjective() {
        let sg = Semigroup::bicyclic();
        let ca = CellularAutomaton::new(2, vec![Element::P], vec![0, 1]).unwrap();
        let windows: Vec<Window> = (1..=4)
            .map(|n| (0..n).map(|i| Element::Bicyclic(i, i)).collect())
            .collect();
        let v = myhill_audit(&sg, &ca, &windows, 0, &Enumeration::default()).unwrap();
        assert_eq!(v.goe.as_ref().unwrap().window().len(), 2);
        assert!(v.erasable.is_none());
        assert_eq!(v.pre_injective_up_to.supports.len(), 4);
        assert!(!v.cancellative);
        assert_eq!(v.consistency, Consistency::Consistent);
    }

    #[test]
    fn and_rule_is_consistent_and_truncates() {
        let sg = Semigroup::int_pow(1).unwrap();
        let ca = CellularAutomaton::from_local_rule(2, vec![Element::int(0), Element::int(1)], |t| {
            t[0] & t[1]
        })
        .unwrap();
        let windows: Vec<Window> = (1..=4).map(|n| sg.anchored_window(n).unwrap()).collect();
        let v = myhill_audit(&sg, &ca, &windows, 0, &Enumeration::default()).unwrap();
        assert!(v.goe.is_some() && v.erasable.is_some());
        assert_eq!(v.consistency, Consistency::Consistent);

        let id = CellularAutomaton::new(2, vec![Element::int(0)], vec![0, 1]).unwrap();
        let windows: Vec<Window> = (1..=12).map(|n| sg.anchored_window(n).unwrap()).collect();
        let v = myhill_audit(&sg, &id, &windows, 0, &Enumeration::with_budget(1 << 6)).unwrap();
        assert_eq!(v.surjective_up_to.windows.len(), 6);
        assert!(v.truncated.is_some());
    }
}
