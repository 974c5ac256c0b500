//! K-tilings: sets `T` whose translates `Kt` are pairwise disjoint and meet
//! every translate `Ks`.
//!
//! On an infinite semigroup a maximal such `T` exists by a choice argument; here
//! the arena is finite and maximality is reached by a greedy scan in canonical
//! order.

use std::collections::HashMap;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::semigroup::{Element, Semigroup, Window};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tiling {
    pub shape: Window,
    pub arena: Window,
    pub tiles: Window,
}

/// Why a candidate tiling fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TilingViolation {
    /// Two distinct tiles with `Kt₁ ∩ Kt₂ ∋ shared`.
    Overlap {
        first: Element,
        second: Element,
        shared: Element,
    },
    /// An arena element `s` with `Ks ⊆ arena` meeting no tile translate.
    Uncovered { element: Element },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TilingCheck {
    pub violation: Option<TilingViolation>,
}

impl TilingCheck {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

fn translates(sg: &Semigroup, shape: &Window, t: &Element) -> Result<Vec<Element>> {
    let mut kt: Vec<Element> = shape.iter().map(|k| sg.multiply(k, t)).collect::<Result<_>>()?;
    kt.sort_unstable();
    kt.dedup();
    Ok(kt)
}

/// Scans the arena in canonical order, keeping `t` whenever `Kt` misses every
/// translate claimed so far. The result is maximal inside the arena.
pub fn greedy_tiling(sg: &Semigroup, shape: &Window, arena: &Window) -> Result<Tiling> {
    if shape.is_empty() {
        return Err(Error::invalid("tiling shape K must be non-empty"));
    }
    sg.check_window(shape)?;
    sg.check_window(arena)?;
    let mut claimed = std::collections::HashSet::new();
    let mut tiles = Vec::new();
    for t in arena {
        let kt = translates(sg, shape, t)?;
        if kt.iter().all(|c| !claimed.contains(c)) {
            claimed.extend(kt);
            tiles.push(t.clone());
        }
    }
    Ok(Tiling {
        shape: shape.clone(),
        arena: arena.clone(),
        tiles: Window::new(tiles),
    })
}

/// Checks pairwise disjointness of tile translates, and that every arena element
/// `s` whose translate `Ks` stays inside the arena meets some tile translate.
pub fn verify_tiling(sg: &Semigroup, tiling: &Tiling) -> Result<TilingCheck> {
    let mut owner: HashMap<Element, &Element> = HashMap::new();
    for t in &tiling.tiles {
        for c in translates(sg, &tiling.shape, t)? {
            if let Some(first) = owner.insert(c.clone(), t) {
                return Ok(TilingCheck {
                    violation: Some(TilingViolation::Overlap {
                        first: first.clone(),
                        second: t.clone(),
                        shared: c,
                    }),
                });
            }
        }
    }
    for s in &tiling.arena {
        let ks = translates(sg, &tiling.shape, s)?;
        if !ks.iter().all(|c| tiling.arena.contains(c)) {
            continue;
        }
        if !ks.iter().any(|c| owner.contains_key(c)) {
            return Ok(TilingCheck {
                violation: Some(TilingViolation::Uncovered { element: s.clone() }),
            });
        }
    }
    Ok(TilingCheck { violation: None })
}

/// Comparison of `|T_F|`, where `T_F = {t ∈ T : Kt ⊆ F}`, against `δ|F|`
/// with `δ = 1/(4|K|²)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityReport {
    pub window_size: usize,
    pub tiles_inside: usize,
    pub delta: Ratio<u64>,
    pub threshold: Ratio<u64>,
    pub passes: bool,
}

pub fn density_constant(shape_size: usize) -> Ratio<u64> {
    let k = shape_size as u64;
    Ratio::new(1, 4 * k * k)
}

pub fn tiling_density(
    sg: &Semigroup,
    shape: &Window,
    tiles: &Window,
    window: &Window,
) -> Result<DensityReport> {
    if shape.is_empty() {
        return Err(Error::invalid("tiling shape K must be non-empty"));
    }
    let mut tiles_inside = 0;
    for t in tiles {
        if translates(sg, shape, t)?.iter().all(|c| window.contains(c)) {
            tiles_inside += 1;
        }
    }
    let delta = density_constant(shape.len());
    let threshold = delta * Ratio::from_integer(window.len() as u64);
    Ok(DensityReport {
        window_size: window.len(),
        tiles_inside,
        delta,
        threshold,
        passes: Ratio::from_integer(tiles_inside as u64) >= threshold,
    })
}
