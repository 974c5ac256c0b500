//! Search for mutually erasable pairs.
//!
//! Two configurations that agree with a background `a0` off a finite support
//! `Ω` have equal images as soon as their images agree on `adh_M(Ω)`: any other
//! cell reads only background values. Enumerating the `q^|Ω|` supported
//! configurations and hashing their images on the adherence therefore finds a
//! pair exactly when one exists for this support.

use std::collections::HashMap;

use crate::automaton::{CellularAutomaton, LocalMap, Pattern, Symbol};
use crate::error::{Error, Result};
use crate::geometry::adherence;
use crate::semigroup::{Semigroup, Window};

use super::enumerate::{code_space, decode, encode, increment, Enumeration};

const BATCH: u64 = 1 << 16;

/// Two distinct configurations, equal to `background` off `support`, with equal images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ErasablePair {
    pub support: Window,
    pub background: Symbol,
    pub first: Pattern,
    pub second: Pattern,
    /// `adh_M(Ω)`: the only cells where the two images could differ.
    pub adherence: Window,
}

/// Returns the first colliding pair in lexicographic order of the second
/// member, or `None` when all `q^|Ω|` images are distinct.
pub fn find_mutually_erasable(
    sg: &Semigroup,
    ca: &CellularAutomaton,
    omega: &Window,
    background: Symbol,
    cfg: &Enumeration,
) -> Result<Option<ErasablePair>> {
    if omega.is_empty() {
        return Err(Error::invalid("support Ω must be non-empty"));
    }
    sg.check_window(omega)?;
    ca.check_against(sg)?;
    let q = ca.alphabet();
    if background as usize >= q {
        return Err(Error::invalid(format!(
            "background {background} outside alphabet of size {q}"
        )));
    }
    let total = cfg.assignments(q, omega.len(), &format!("support of size {}", omega.len()))?;
    let adh = adherence(sg, omega, &ca.memory_window())?;
    code_space(q, adh.len())?;
    let map = LocalMap::new(sg, ca, &adh, omega)?;
    let rule = ca.rule();
    let width = omega.len();

    let mut seen: HashMap<u128, u64> = HashMap::new();
    let mut start = 0u64;
    while start < total {
        let end = (start + BATCH).min(total);
        let codes = cfg.map_chunks(start..end, |range| {
            let mut digits = decode(range.start as u128, q, width);
            let mut out = vec![0 as Symbol; adh.len()];
            let mut codes = Vec::with_capacity((range.end - range.start) as usize);
            for _ in range {
                map.eval(rule, &digits, background, &mut out);
                codes.push(encode(&out, q));
                increment(&mut digits, q);
            }
            codes
        });
        for (index, code) in (start..end).zip(codes.into_iter().flatten()) {
            if let Some(&prev) = seen.get(&code) {
                let pattern = |i: u64| {
                    Pattern::new(omega.clone(), decode(i as u128, q, width))
                        .expect("decoded symbols are in range")
                };
                return Ok(Some(ErasablePair {
                    support: omega.clone(),
                    background,
                    first: pattern(prev),
                    second: pattern(index),
                    adherence: adh,
                }));
            }
            seen.insert(code, index);
        }
        start = end;
    }
    Ok(None)
}
