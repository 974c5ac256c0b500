//! K-interiors, K-adherences, K-boundaries and relative amenability constants.
//!
//! For finite `Ω, K ⊂ S`:
//!
//! - `int_K(Ω) = {s ∈ Ω : Ks ⊆ Ω}`
//! - `adh_K(Ω) = {s ∈ S : Ks ∩ Ω ≠ ∅}`, computed exactly as `⋃_k ⋃_ω {s : k·s = ω}`
//! - `∂_K(Ω) = Ω \ int_K(Ω)` and `∂*_K(Ω) = adh_K(Ω) \ int_K(Ω)`
//! - `α(Ω, K) = |∂_K(Ω)| / |Ω|` and `α*(Ω, K) = |∂*_K(Ω)| / |Ω|`

use std::collections::HashSet;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::semigroup::{Element, Semigroup, Window};

/// Regions of `Ω` relative to `K`, with exact amenability constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionReport {
    pub interior: Window,
    pub adherence: Window,
    pub boundary: Window,
    pub boundary_star: Window,
    pub alpha: Ratio<u64>,
    pub alpha_star: Ratio<u64>,
    pub cross_check: CrossCheck,
}

/// Outcome of comparing the definitional boundaries with the preimage formulas
/// that hold when every element of `K` is left-cancellable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CrossCheck {
    Verified(BoundaryFormulas),
    /// Some `k ∈ K` is not left-cancellable, so only the definitional regions apply.
    Skipped { non_cancellable: Element },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryFormulas {
    /// `⋃_k L_k⁻¹(kΩ \ Ω)`.
    pub formula_boundary: Window,
    /// `⋃_k L_k⁻¹(Ω \ kΩ)`.
    pub outer_preimage: Window,
    /// `Σ_k |kΩ \ Ω|`.
    pub translate_excess: usize,
    /// The formula reproduces `∂_K(Ω)`.
    pub boundary_matches: bool,
    /// `∂*_K(Ω) ⊆ ∂_K(Ω) ∪ outer_preimage`.
    pub star_covered: bool,
    /// `∂_K(Ω)` and `outer_preimage` are disjoint.
    pub parts_disjoint: bool,
    /// `|∂_K(Ω)| ≤ Σ|kΩ \ Ω|` and `|∂*_K(Ω)| ≤ 2 Σ|kΩ \ Ω|`.
    pub bounds_hold: bool,
}

impl BoundaryFormulas {
    pub fn all_hold(&self) -> bool {
        self.boundary_matches && self.star_covered && self.parts_disjoint && self.bounds_hold
    }
}

fn validate(sg: &Semigroup, omega: &Window, k: &Window) -> Result<()> {
    if omega.is_empty() || k.is_empty() {
        return Err(Error::invalid("Ω and K must be non-empty"));
    }
    sg.check_window(omega)?;
    sg.check_window(k)
}

/// `int_K(Ω)`.
pub fn interior(sg: &Semigroup, omega: &Window, k: &Window) -> Result<Window> {
    let members: HashSet<&Element> = omega.iter().collect();
    let mut keep = Vec::new();
    for s in omega {
        let mut inside = true;
        for g in k {
            if !members.contains(&sg.multiply(g, s)?) {
                inside = false;
                break;
            }
        }
        if inside {
            keep.push(s.clone());
        }
    }
    Ok(Window::new(keep))
}

/// `⋃_{k ∈ K} L_k⁻¹(targets)`, i.e. every `s` with `k·s ∈ targets` for some `k`.
pub fn left_preimage(sg: &Semigroup, k: &Window, targets: &Window) -> Result<Window> {
    let mut out = Vec::new();
    for g in k {
        for w in targets {
            out.extend(sg.left_divide(g, w)?);
        }
    }
    Ok(Window::new(out))
}

/// `adh_K(Ω)`.
pub fn adherence(sg: &Semigroup, omega: &Window, k: &Window) -> Result<Window> {
    left_preimage(sg, k, omega)
}

fn ratio(num: usize, den: usize) -> Ratio<u64> {
    Ratio::new(num as u64, den as u64)
}

/// Computes all four regions from their definitions, the exact constants, and
/// (when every `k ∈ K` is left-cancellable) the boundary-formula cross-check.
pub fn region_calculus(sg: &Semigroup, omega: &Window, k: &Window) -> Result<RegionReport> {
    validate(sg, omega, k)?;
    let interior = interior(sg, omega, k)?;
    let adherence = adherence(sg, omega, k)?;
    let boundary = omega.difference(&interior);
    let boundary_star = adherence.difference(&interior);
    let alpha = ratio(boundary.len(), omega.len());
    let alpha_star = ratio(boundary_star.len(), omega.len());
    let cross_check = boundary_cross_check(sg, omega, k, &boundary, &boundary_star)?;
    Ok(RegionReport {
        interior,
        adherence,
        boundary,
        boundary_star,
        alpha,
        alpha_star,
        cross_check,
    })
}

fn boundary_cross_check(
    sg: &Semigroup,
    omega: &Window,
    k: &Window,
    boundary: &Window,
    boundary_star: &Window,
) -> Result<CrossCheck> {
    for g in k {
        if !sg.is_left_cancellable(g)? {
            return Ok(CrossCheck::Skipped {
                non_cancellable: g.clone(),
            });
        }
    }
    let mut formula_boundary = Window::empty();
    let mut outer_preimage = Window::empty();
    let mut translate_excess = 0;
    for g in k {
        let shifted = sg.translate(g, omega)?;
        let escaped = shifted.difference(omega);
        translate_excess += escaped.len();
        let single = Window::singleton(g.clone());
        formula_boundary = formula_boundary.union(&left_preimage(sg, &single, &escaped)?);
        outer_preimage =
            outer_preimage.union(&left_preimage(sg, &single, &omega.difference(&shifted))?);
    }
    let boundary_matches = formula_boundary == *boundary;
    let star_covered = boundary_star.is_subset(&boundary.union(&outer_preimage));
    let parts_disjoint = boundary.is_disjoint(&outer_preimage);
    let bounds_hold =
        boundary.len() <= translate_excess && boundary_star.len() <= 2 * translate_excess;
    Ok(CrossCheck::Verified(BoundaryFormulas {
        formula_boundary,
        outer_preimage,
        translate_excess,
        boundary_matches,
        star_covered,
        parts_disjoint,
        bounds_hold,
    }))
}

/// One row of a Følner trace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FolnerStep {
    pub n: usize,
    pub size: usize,
    /// `max_{k ∈ K} |kF_n \ F_n| / |F_n|`.
    pub max_ratio: Ratio<u64>,
    pub alpha: Ratio<u64>,
    pub alpha_star: Ratio<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FolnerTrace {
    pub shape: Window,
    pub epsilon: Ratio<u64>,
    pub steps: Vec<FolnerStep>,
    /// First `n` with `max_ratio ≤ ε`.
    pub first_within: Option<usize>,
}

/// Walks `F_1, ..., F_{n_max}` of the family's Følner sequence and reports
/// translation ratios and amenability constants for each window.
pub fn verify_folner_prefix(
    sg: &Semigroup,
    k: &Window,
    n_max: usize,
    epsilon: Ratio<u64>,
) -> Result<FolnerTrace> {
    if !sg.has_folner_sequence() {
        return Err(Error::NoFolnerSequence(sg.to_string()));
    }
    if k.is_empty() {
        return Err(Error::invalid("K must be non-empty"));
    }
    sg.check_window(k)?;
    let mut steps = Vec::with_capacity(n_max);
    let mut first_within = None;
    for n in 1..=n_max {
        let f = sg.folner_window(n)?;
        let members: HashSet<&Element> = f.iter().collect();
        let mut worst = 0;
        for g in k {
            let shifted = sg.translate(g, &f)?;
            let escaped = shifted.iter().filter(|e| !members.contains(e)).count();
            worst = worst.max(escaped);
        }
        let max_ratio = ratio(worst, f.len());
        let interior = interior(sg, &f, k)?;
        let adherence = adherence(sg, &f, k)?;
        let alpha = ratio(f.len() - interior.len(), f.len());
        let alpha_star = ratio(adherence.difference(&interior).len(), f.len());
        if first_within.is_none() && max_ratio <= epsilon {
            first_within = Some(n);
        }
        steps.push(FolnerStep {
            n,
            size: f.len(),
            max_ratio,
            alpha,
            alpha_star,
        });
    }
    Ok(FolnerTrace {
        shape: k.clone(),
        epsilon,
        steps,
        first_within,
    })
}
