//! Cellular automata given by a memory set and a local rule table, evaluated
//! on finite patterns.
//!
//! The image of a configuration `x` at `s` is `τ(x)(s) = μ(m₁·s, ..., m_k·s)`,
//! reading `x` at `m·s` for each memory element `m` in declaration order.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::semigroup::{Element, Semigroup, Window};

/// A symbol of the alphabet `0..q`.
pub type Symbol = u8;

/// Largest rule table accepted, in entries.
pub const MAX_RULE_ENTRIES: usize = 1 << 24;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CellularAutomaton {
    alphabet: usize,
    memory: Vec<Element>,
    rule: Vec<Symbol>,
}

impl CellularAutomaton {
    /// `rule[i]` is the image of the memory tuple whose base-`q` digits spell `i`,
    /// with the first memory element as the most significant digit.
    pub fn new(alphabet: usize, memory: Vec<Element>, rule: Vec<Symbol>) -> Result<Self> {
        if alphabet == 0 || alphabet > 256 {
            return Err(Error::invalid(format!(
                "alphabet size must be between 1 and 256, got {alphabet}"
            )));
        }
        if memory.is_empty() {
            return Err(Error::invalid("memory set is empty"));
        }
        let distinct: HashSet<&Element> = memory.iter().collect();
        if distinct.len() != memory.len() {
            return Err(Error::invalid("memory set has duplicate elements"));
        }
        let entries = table_size(alphabet, memory.len())?;
        if rule.len() != entries {
            return Err(Error::invalid(format!(
                "rule table has {} entries, expected {alphabet}^{} = {entries}",
                rule.len(),
                memory.len()
            )));
        }
        if let Some(bad) = rule.iter().find(|&&v| v as usize >= alphabet) {
            return Err(Error::invalid(format!(
                "rule table produces symbol {bad}, outside alphabet of size {alphabet}"
            )));
        }
        Ok(CellularAutomaton {
            alphabet,
            memory,
            rule,
        })
    }

    /// Tabulates `local` over every memory tuple.
    pub fn from_local_rule(
        alphabet: usize,
        memory: Vec<Element>,
        local: impl Fn(&[Symbol]) -> Symbol,
    ) -> Result<Self> {
        let entries = table_size(alphabet.max(1), memory.len())?;
        let m = memory.len();
        let rule = (0..entries)
            .map(|i| local(&decode_tuple(i, alphabet, m)))
            .collect();
        Self::new(alphabet, memory, rule)
    }

    pub fn check_against(&self, sg: &Semigroup) -> Result<()> {
        self.memory.iter().try_for_each(|m| sg.check(m))
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn memory(&self) -> &[Element] {
        &self.memory
    }

    pub fn memory_window(&self) -> Window {
        Window::new(self.memory.clone())
    }

    pub fn rule(&self) -> &[Symbol] {
        &self.rule
    }

    pub fn rule_index(&self, tuple: &[Symbol]) -> usize {
        tuple
            .iter()
            .fold(0, |acc, &v| acc * self.alphabet + v as usize)
    }

    /// The memory tuple spelled by rule-table index `i`.
    pub fn tuple(&self, i: usize) -> Vec<Symbol> {
        decode_tuple(i, self.alphabet, self.memory.len())
    }

    #[inline]
    pub fn local(&self, tuple: &[Symbol]) -> Symbol {
        self.rule[self.rule_index(tuple)]
    }
}

fn table_size(alphabet: usize, m: usize) -> Result<usize> {
    u32::try_from(m)
        .ok()
        .and_then(|m| alphabet.checked_pow(m))
        .filter(|&n| n <= MAX_RULE_ENTRIES)
        .ok_or_else(|| {
            Error::invalid(format!(
                "rule table {alphabet}^{m} exceeds {MAX_RULE_ENTRIES} entries"
            ))
        })
}

fn decode_tuple(mut i: usize, alphabet: usize, m: usize) -> Vec<Symbol> {
    let mut t = vec![0; m];
    for slot in t.iter_mut().rev() {
        *slot = (i % alphabet) as Symbol;
        i /= alphabet;
    }
    t
}

/// A finite partial configuration: one symbol per element of its window,
/// stored in the window's canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Pattern {
    window: Window,
    values: Vec<Symbol>,
}

impl Pattern {
    pub fn new(window: Window, values: Vec<Symbol>) -> Result<Self> {
        if window.len() != values.len() {
            return Err(Error::invalid(format!(
                "pattern has {} values for a window of {} elements",
                values.len(),
                window.len()
            )));
        }
        Ok(Pattern { window, values })
    }

    pub fn from_fn(window: Window, mut f: impl FnMut(&Element) -> Symbol) -> Self {
        let values = window.iter().map(&mut f).collect();
        Pattern { window, values }
    }

    pub fn constant(window: Window, a: Symbol) -> Self {
        let values = vec![a; window.len()];
        Pattern { window, values }
    }

    pub fn empty() -> Self {
        Pattern {
            window: Window::empty(),
            values: Vec::new(),
        }
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    pub fn values(&self) -> &[Symbol] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, e: &Element) -> Option<Symbol> {
        self.window.position(e).map(|i| self.values[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Element, Symbol)> {
        self.window.iter().zip(self.values.iter().copied())
    }

    /// Restriction to `sub`; `None` if `sub` is not inside the window.
    pub fn restrict(&self, sub: &Window) -> Option<Pattern> {
        let values = sub.iter().map(|e| self.get(e)).collect::<Option<Vec<_>>>()?;
        Some(Pattern {
            window: sub.clone(),
            values,
        })
    }

    fn check_symbols(&self, alphabet: usize) -> Result<()> {
        match self.values.iter().find(|&&v| v as usize >= alphabet) {
            Some(v) => Err(Error::invalid(format!(
                "pattern symbol {v} outside alphabet of size {alphabet}"
            ))),
            None => Ok(()),
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// `MΩ = ⋃_{s ∈ Ω} {m·s : m ∈ M}`: the cells whose values determine `τ(x)` on `Ω`.
pub fn dependence_window(sg: &Semigroup, ca: &CellularAutomaton, omega: &Window) -> Result<Window> {
    let mut out = Vec::with_capacity(omega.len() * ca.memory.len());
    for s in omega {
        for m in &ca.memory {
            out.push(sg.multiply(m, s)?);
        }
    }
    Ok(Window::new(out))
}

/// Evaluates `τ` on `int_M(Ω)`, the cells whose whole memory neighbourhood lies in `p`.
pub fn apply_to_pattern(sg: &Semigroup, ca: &CellularAutomaton, p: &Pattern) -> Result<Pattern> {
    p.check_symbols(ca.alphabet)?;
    let mut cells = Vec::new();
    let mut values = Vec::new();
    let mut tuple = Vec::with_capacity(ca.memory.len());
    'cells: for s in p.window() {
        tuple.clear();
        for m in &ca.memory {
            match p.get(&sg.multiply(m, s)?) {
                Some(v) => tuple.push(v),
                None => continue 'cells,
            }
        }
        cells.push(s.clone());
        values.push(ca.local(&tuple));
    }
    // cells were visited in canonical order
    Ok(Pattern {
        window: Window::new(cells),
        values,
    })
}

/// Evaluates `τ(z)` on `target`, where `z` equals `support` on its window and
/// `background` everywhere else.
pub fn apply_with_background(
    sg: &Semigroup,
    ca: &CellularAutomaton,
    support: &Pattern,
    background: Symbol,
    target: &Window,
) -> Result<Pattern> {
    support.check_symbols(ca.alphabet)?;
    if background as usize >= ca.alphabet {
        return Err(Error::invalid(format!(
            "background {background} outside alphabet of size {}",
            ca.alphabet
        )));
    }
    let mut tuple = Vec::with_capacity(ca.memory.len());
    let mut values = Vec::with_capacity(target.len());
    for s in target {
        tuple.clear();
        for m in &ca.memory {
            tuple.push(support.get(&sg.multiply(m, s)?).unwrap_or(background));
        }
        values.push(ca.local(&tuple));
    }
    Ok(Pattern {
        window: target.clone(),
        values,
    })
}

/// The shifted pattern `t·x`, where `(t·x)(s) = x(s·t)`, on every `s` with `s·t` in the window.
pub fn shift_pattern(sg: &Semigroup, p: &Pattern, t: &Element) -> Result<Pattern> {
    let mut pairs = Vec::new();
    for (w, v) in p.iter() {
        for s in sg.right_divide(w, t)? {
            pairs.push((s, v));
        }
    }
    pairs.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    let (cells, values): (Vec<Element>, Vec<Symbol>) = pairs.into_iter().unzip();
    Ok(Pattern {
        window: Window::new(cells),
        values,
    })
}

/// Compares `τ(t·x)` with `t·τ(x)` on the cells where both are determined by `p`.
pub fn equivariance_check(
    sg: &Semigroup,
    ca: &CellularAutomaton,
    t: &Element,
    p: &Pattern,
) -> Result<bool> {
    let lhs = apply_to_pattern(sg, ca, &shift_pattern(sg, p, t)?)?;
    let rhs = shift_pattern(sg, &apply_to_pattern(sg, ca, p)?, t)?;
    let common = lhs.window().intersection(rhs.window());
    if common.is_empty() {
        return Err(Error::InsufficientWindow(format!(
            "τ(t·x) and t·τ(x) share no determined cell for t = {t}"
        )));
    }
    Ok(lhs.restrict(&common) == rhs.restrict(&common))
}

/// Sentinel tap reading the background symbol.
pub const BACKGROUND_TAP: u32 = u32::MAX;

/// Precomputed wiring from a source window to a set of target cells.
///
/// For each target cell and memory slot it stores the index of `m·s` in the
/// source window (or [`BACKGROUND_TAP`]), so evaluation inside enumeration
/// loops is pure table lookup.
#[derive(Clone, Debug)]
pub struct LocalMap {
    targets: usize,
    arity: usize,
    alphabet: usize,
    taps: Vec<u32>,
}

impl LocalMap {
    pub fn new(sg: &Semigroup, ca: &CellularAutomaton, targets: &Window, sources: &Window) -> Result<Self> {
        let mut taps = Vec::with_capacity(targets.len() * ca.memory.len());
        for s in targets {
            for m in &ca.memory {
                let cell = sg.multiply(m, s)?;
                taps.push(sources.position(&cell).map_or(BACKGROUND_TAP, |i| i as u32));
            }
        }
        Ok(LocalMap {
            targets: targets.len(),
            arity: ca.memory.len(),
            alphabet: ca.alphabet,
            taps,
        })
    }

    pub fn targets(&self) -> usize {
        self.targets
    }

    /// Writes `τ(z)` on the targets into `out`, with `z` given by `inputs` on the
    /// source window and `background` elsewhere.
    #[inline]
    pub fn eval(&self, rule: &[Symbol], inputs: &[Symbol], background: Symbol, out: &mut [Symbol]) {
        for (cell, taps) in out.iter_mut().zip(self.taps.chunks_exact(self.arity)) {
            let mut idx = 0usize;
            for &tap in taps {
                let v = if tap == BACKGROUND_TAP {
                    background
                } else {
                    inputs[tap as usize]
                };
                idx = idx * self.alphabet + v as usize;
            }
            *cell = rule[idx];
        }
    }
}
