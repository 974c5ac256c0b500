//! Window images `π_Ω(τ(A^S))` and Garden-of-Eden search.

use crate::automaton::{dependence_window, CellularAutomaton, LocalMap, Pattern, Symbol};
use crate::error::{Error, Result};
use crate::semigroup::{Semigroup, Window};

use super::enumerate::{code_space, decode, encode, increment, CodeSet, Enumeration};

/// The set of patterns on `Ω` produced by `τ`, computed from all assignments
/// on the dependence window `MΩ`.
#[derive(Clone, Debug)]
pub struct WindowImage {
    pub window: Window,
    pub dependence: Window,
    pub alphabet: usize,
    /// `|π_Ω(τ(A^S))|`
    pub count: u128,
    /// `q^|Ω|`
    pub full: u128,
    codes: CodeSet,
}

impl WindowImage {
    pub fn is_proper(&self) -> bool {
        self.count < self.full
    }

    pub fn contains(&self, p: &Pattern) -> bool {
        p.window() == &self.window && self.codes.contains(encode(p.values(), self.alphabet))
    }

    /// The lexicographically smallest pattern on `Ω` outside the image.
    pub fn smallest_missing(&self) -> Option<Pattern> {
        let code = self.codes.smallest_missing(self.full)?;
        let values = decode(code, self.alphabet, self.window.len());
        Some(Pattern::new(self.window.clone(), values).expect("decoded symbols are in range"))
    }
}

pub fn window_image(
    sg: &Semigroup,
    ca: &CellularAutomaton,
    omega: &Window,
    cfg: &Enumeration,
) -> Result<WindowImage> {
    if omega.is_empty() {
        return Err(Error::invalid("window Ω must be non-empty"));
    }
    sg.check_window(omega)?;
    ca.check_against(sg)?;
    let q = ca.alphabet();
    let dependence = dependence_window(sg, ca, omega)?;
    let total = cfg.assignments(q, dependence.len(), &format!("image of window of size {}", omega.len()))?;
    let full = code_space(q, omega.len())?;
    let map = LocalMap::new(sg, ca, omega, &dependence)?;
    let rule = ca.rule();
    let width = dependence.len();
    let partial = cfg.map_chunks(0..total, |range| {
        let mut set = CodeSet::new(full);
        let mut digits = decode(range.start as u128, q, width);
        let mut out = vec![0 as Symbol; omega.len()];
        for _ in range {
            map.eval(rule, &digits, 0, &mut out);
            set.insert(encode(&out, q));
            increment(&mut digits, q);
        }
        set
    });
    let codes = partial
        .into_iter()
        .reduce(CodeSet::merge)
        .unwrap_or_else(|| CodeSet::new(full));
    Ok(WindowImage {
        window: omega.clone(),
        dependence,
        alphabet: q,
        count: codes.len(),
        full,
        codes,
    })
}

/// A pattern on `Ω` that no configuration maps to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoeCertificate {
    pub missing: Pattern,
    pub dependence: Window,
    pub image_count: u128,
    pub full_count: u128,
}

impl GoeCertificate {
    pub fn window(&self) -> &Window {
        self.missing.window()
    }
}

/// Searches `π_Ω(τ(A^S))` for a missing pattern; returns the smallest one.
pub fn find_goe_pattern(
    sg: &Semigroup,
    ca: &CellularAutomaton,
    omega: &Window,
    cfg: &Enumeration,
) -> Result<Option<GoeCertificate>> {
    let image = window_image(sg, ca, omega, cfg)?;
    Ok(image.smallest_missing().map(|missing| GoeCertificate {
        missing,
        dependence: image.dependence.clone(),
        image_count: image.count,
        full_count: image.full,
    }))
}
