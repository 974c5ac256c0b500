//! Concrete semigroup families.
//!
//! Every family supplies exact multiplication, exact left and right division
//! (the full solution sets of `k·s = w` and `s·t = w`), analytic
//! cancellability, balls, and, where one exists, a canonical Følner sequence.

mod element;
mod table;
mod window;

use std::collections::HashSet;
use std::fmt;

pub use element::Element;
pub use table::CayleyTable;
pub use window::Window;

use crate::error::{Error, Result};

/// Default cap on the number of elements a ball enumeration may produce.
pub const DEFAULT_BALL_BUDGET: usize = 1 << 22;

/// The built-in semigroup families.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// The additive monoid ℕ.
    Nat,
    /// The additive monoid ℕᵈ.
    NatPow(usize),
    /// The additive group ℤᵈ.
    IntPow(usize),
    /// The free monoid on `k` letters.
    FreeMonoid(usize),
    /// The bicyclic monoid ⟨p, q : pq = 1⟩.
    Bicyclic,
    /// A finite semigroup given by its multiplication table.
    Finite(CayleyTable),
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Nat => write!(f, "nat"),
            Family::NatPow(d) => write!(f, "nat {d}"),
            Family::IntPow(d) => write!(f, "int {d}"),
            Family::FreeMonoid(k) => write!(f, "free {k}"),
            Family::Bicyclic => write!(f, "bicyclic"),
            Family::Finite(t) => write!(f, "finite {}", t.size()),
        }
    }
}

/// Which sequence of windows to walk when a job asks for "the n-th window".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WindowSchedule {
    /// The family's canonical Følner sequence (see [`Semigroup::folner_window`]).
    Folner,
    /// Boxes `{0..n-1}ᵈ` anchored at the identity (see [`Semigroup::anchored_window`]).
    Anchored,
    /// Balls of radius `n` around the identity over the default generators.
    Ball,
}

/// Result of [`Semigroup::cancellability_audit`].
///
/// Witness pairs are listed in canonical order `(x, y)` with `x < y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CancellabilityVerdict {
    pub element: Element,
    pub left_cancellable: bool,
    pub right_cancellable: bool,
    /// `x ≠ y` with `s·x = s·y`.
    pub left_witness: Option<(Element, Element)>,
    /// `x ≠ y` with `x·s = y·s`.
    pub right_witness: Option<(Element, Element)>,
}

/// A semigroup descriptor: a family tag plus its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Semigroup {
    family: Family,
}

fn rev_bicyclic(e: &Element) -> Element {
    match e {
        Element::Bicyclic(a, b) => Element::Bicyclic(*b, *a),
        other => other.clone(),
    }
}

fn lattice_box(dim: usize, lo: i64, hi: i64) -> Vec<Element> {
    let mut out = vec![Vec::with_capacity(dim)];
    for _ in 0..dim {
        let mut next = Vec::with_capacity(out.len() * (hi - lo + 1).max(0) as usize);
        for prefix in &out {
            for x in lo..=hi {
                let mut v = prefix.clone();
                v.push(x);
                next.push(v);
            }
        }
        out = next;
    }
    out.into_iter().map(Element::Tuple).collect()
}

impl Semigroup {
    pub fn new(family: Family) -> Result<Self> {
        match &family {
            Family::NatPow(0) | Family::IntPow(0) => {
                return Err(Error::invalid("dimension must be at least 1"))
            }
            Family::FreeMonoid(k) if *k == 0 || *k > 26 => {
                return Err(Error::invalid("free monoid needs between 1 and 26 letters"))
            }
            _ => {}
        }
        Ok(Semigroup { family })
    }

    pub fn nat() -> Self {
        Semigroup { family: Family::Nat }
    }

    pub fn nat_pow(d: usize) -> Result<Self> {
        Self::new(Family::NatPow(d))
    }

    pub fn int_pow(d: usize) -> Result<Self> {
        Self::new(Family::IntPow(d))
    }

    pub fn free_monoid(k: usize) -> Result<Self> {
        Self::new(Family::FreeMonoid(k))
    }

    pub fn bicyclic() -> Self {
        Semigroup {
            family: Family::Bicyclic,
        }
    }

    pub fn finite(table: CayleyTable) -> Self {
        Semigroup {
            family: Family::Finite(table),
        }
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    fn mismatch(&self, e: &Element) -> Error {
        Error::FamilyMismatch {
            element: e.to_string(),
            family: self.family.to_string(),
        }
    }

    /// Checks that `e` is a valid canonical element of this semigroup.
    pub fn check(&self, e: &Element) -> Result<()> {
        let ok = match (&self.family, e) {
            (Family::Nat, Element::Nat(_)) => true,
            (Family::NatPow(d), Element::Tuple(xs)) => xs.len() == *d && xs.iter().all(|&x| x >= 0),
            (Family::IntPow(d), Element::Tuple(xs)) => xs.len() == *d,
            (Family::FreeMonoid(k), Element::Word(w)) => w.iter().all(|&c| (c as usize) < *k),
            (Family::Bicyclic, Element::Bicyclic(..)) => true,
            (Family::Finite(t), Element::Index(i)) => *i < t.size(),
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(self.mismatch(e))
        }
    }

    pub fn check_window(&self, w: &Window) -> Result<()> {
        w.iter().try_for_each(|e| self.check(e))
    }

    pub fn is_monoid(&self) -> bool {
        self.identity().is_some()
    }

    pub fn identity(&self) -> Option<Element> {
        match &self.family {
            Family::Nat => Some(Element::Nat(0)),
            Family::NatPow(d) | Family::IntPow(d) => Some(Element::Tuple(vec![0; *d])),
            Family::FreeMonoid(_) => Some(Element::Word(Vec::new())),
            Family::Bicyclic => Some(Element::Bicyclic(0, 0)),
            Family::Finite(t) => t.identity().map(Element::Index),
        }
    }

    /// Generators used for balls and witness scans: unit vectors (and their
    /// inverses in ℤᵈ), letters, `{p, q}`, or every element of a finite table.
    pub fn default_generators(&self) -> Window {
        match &self.family {
            Family::Nat => Window::singleton(Element::Nat(1)),
            Family::NatPow(d) => (0..*d)
                .map(|i| {
                    let mut v = vec![0; *d];
                    v[i] = 1;
                    Element::Tuple(v)
                })
                .collect(),
            Family::IntPow(d) => (0..*d)
                .flat_map(|i| {
                    [1, -1].into_iter().map(move |sign| {
                        let mut v = vec![0; *d];
                        v[i] = sign;
                        Element::Tuple(v)
                    })
                })
                .collect(),
            Family::FreeMonoid(k) => (0..*k as u8).map(|c| Element::Word(vec![c])).collect(),
            Family::Bicyclic => Window::new(vec![Element::P, Element::Q]),
            Family::Finite(t) => (0..t.size()).map(Element::Index).collect(),
        }
    }

    /// Returns `s·t`.
    pub fn multiply(&self, s: &Element, t: &Element) -> Result<Element> {
        self.check(s)?;
        self.check(t)?;
        let overflow = || Error::invalid(format!("product {s}·{t} overflows"));
        Ok(match (&self.family, s, t) {
            (Family::Nat, Element::Nat(a), Element::Nat(b)) => {
                Element::Nat(a.checked_add(*b).ok_or_else(overflow)?)
            }
            (Family::NatPow(_) | Family::IntPow(_), Element::Tuple(a), Element::Tuple(b)) => {
                Element::Tuple(
                    a.iter()
                        .zip(b)
                        .map(|(x, y)| x.checked_add(*y).ok_or_else(overflow))
                        .collect::<Result<_>>()?,
                )
            }
            (Family::FreeMonoid(_), Element::Word(a), Element::Word(b)) => {
                let mut w = a.clone();
                w.extend_from_slice(b);
                Element::Word(w)
            }
            (Family::Bicyclic, Element::Bicyclic(a, b), Element::Bicyclic(c, d)) => {
                // q^a p^b q^c p^d: pq = 1 cancels min(b, c) pairs.
                let m = (*b).min(*c);
                Element::Bicyclic(a + c - m, d + b - m)
            }
            (Family::Finite(table), Element::Index(x), Element::Index(y)) => {
                Element::Index(table.product(*x, *y))
            }
            _ => unreachable!("operands were checked against the family"),
        })
    }

    /// Left-translate a window: `kΩ`.
    pub fn translate(&self, k: &Element, omega: &Window) -> Result<Window> {
        omega.iter().map(|w| self.multiply(k, w)).collect()
    }

    /// The exact solution set `{s : k·s = w}` in canonical order.
    pub fn left_divide(&self, k: &Element, w: &Element) -> Result<Vec<Element>> {
        self.check(k)?;
        self.check(w)?;
        Ok(match (&self.family, k, w) {
            (Family::Nat, Element::Nat(k), Element::Nat(w)) => {
                w.checked_sub(*k).map(Element::Nat).into_iter().collect()
            }
            (Family::NatPow(_), Element::Tuple(k), Element::Tuple(w)) => {
                if k.iter().zip(w).all(|(a, b)| b >= a) {
                    vec![Element::Tuple(w.iter().zip(k).map(|(b, a)| b - a).collect())]
                } else {
                    vec![]
                }
            }
            (Family::IntPow(_), Element::Tuple(k), Element::Tuple(w)) => {
                vec![Element::Tuple(w.iter().zip(k).map(|(b, a)| b - a).collect())]
            }
            (Family::FreeMonoid(_), Element::Word(k), Element::Word(w)) => {
                if w.starts_with(k) {
                    vec![Element::Word(w[k.len()..].to_vec())]
                } else {
                    vec![]
                }
            }
            (Family::Bicyclic, Element::Bicyclic(a, b), Element::Bicyclic(x, y)) => {
                let (a, b, x, y) = (*a, *b, *x, *y);
                if x == a {
                    // s = q^c p^d with c ≤ b: k·s = q^a p^(d+b-c).
                    (b.saturating_sub(y)..=b)
                        .map(|c| Element::Bicyclic(c, y + c - b))
                        .collect()
                } else if x > a {
                    // c > b: k·s = q^(a+c-b) p^d.
                    vec![Element::Bicyclic(x - a + b, y)]
                } else {
                    vec![]
                }
            }
            (Family::Finite(t), Element::Index(k), Element::Index(w)) => (0..t.size())
                .filter(|&s| t.product(*k, s) == *w)
                .map(Element::Index)
                .collect(),
            _ => unreachable!("operands were checked against the family"),
        })
    }

    /// The exact solution set `{s : s·t = w}` in canonical order.
    pub fn right_divide(&self, w: &Element, t: &Element) -> Result<Vec<Element>> {
        match &self.family {
            Family::FreeMonoid(_) => {
                self.check(w)?;
                self.check(t)?;
                match (w, t) {
                    (Element::Word(w), Element::Word(t)) if w.ends_with(t) => {
                        Ok(vec![Element::Word(w[..w.len() - t.len()].to_vec())])
                    }
                    _ => Ok(vec![]),
                }
            }
            // The map q^a p^b ↦ q^b p^a reverses products.
            Family::Bicyclic => {
                let mut out: Vec<Element> = self
                    .left_divide(&rev_bicyclic(t), &rev_bicyclic(w))?
                    .iter()
                    .map(rev_bicyclic)
                    .collect();
                out.sort_unstable();
                Ok(out)
            }
            Family::Finite(table) => {
                self.check(w)?;
                self.check(t)?;
                let (Element::Index(w), Element::Index(t)) = (w, t) else {
                    unreachable!()
                };
                Ok((0..table.size())
                    .filter(|&s| table.product(s, *t) == *w)
                    .map(Element::Index)
                    .collect())
            }
            // Commutative families.
            _ => self.left_divide(t, w),
        }
    }

    pub fn is_left_cancellable(&self, s: &Element) -> Result<bool> {
        self.check(s)?;
        Ok(match (&self.family, s) {
            (Family::Bicyclic, Element::Bicyclic(_, b)) => *b == 0,
            (Family::Finite(t), Element::Index(s)) => {
                let mut seen = vec![false; t.size()];
                (0..t.size()).all(|x| !std::mem::replace(&mut seen[t.product(*s, x)], true))
            }
            _ => true,
        })
    }

    pub fn is_right_cancellable(&self, s: &Element) -> Result<bool> {
        self.check(s)?;
        Ok(match (&self.family, s) {
            (Family::Bicyclic, Element::Bicyclic(a, _)) => *a == 0,
            (Family::Finite(t), Element::Index(s)) => {
                let mut seen = vec![false; t.size()];
                (0..t.size()).all(|x| !std::mem::replace(&mut seen[t.product(x, *s)], true))
            }
            _ => true,
        })
    }

    /// Whether every element is both left- and right-cancellable.
    pub fn is_cancellative(&self) -> bool {
        match &self.family {
            Family::Bicyclic => false,
            Family::Finite(t) => (0..t.size()).all(|i| {
                let e = Element::Index(i);
                self.is_left_cancellable(&e).unwrap_or(false)
                    && self.is_right_cancellable(&e).unwrap_or(false)
            }),
            _ => true,
        }
    }

    pub fn has_folner_sequence(&self) -> bool {
        !matches!(self.family, Family::FreeMonoid(k) if k >= 2)
    }

    /// Cancellability of `s`, with explicit witnesses for every failure.
    ///
    /// Infinite families get an analytic verdict; the ball of the given radius
    /// over the default generators is scanned only to exhibit witnesses.
    /// Finite tables are scanned exhaustively and `radius` is ignored.
    pub fn cancellability_audit(&self, s: &Element, radius: usize) -> Result<CancellabilityVerdict> {
        let left_cancellable = self.is_left_cancellable(s)?;
        let right_cancellable = self.is_right_cancellable(s)?;
        let scan: Vec<Element> = match &self.family {
            Family::Finite(t) => (0..t.size()).map(Element::Index).collect(),
            _ => {
                if radius == 0 {
                    return Err(Error::invalid(
                        "cancellability audit over an infinite family needs radius ≥ 1",
                    ));
                }
                self.ball(&self.default_generators(), radius, DEFAULT_BALL_BUDGET)?
                    .elements()
                    .to_vec()
            }
        };
        let first_collision = |side: &dyn Fn(&Element) -> Result<Element>| -> Result<Option<(Element, Element)>> {
            let mut seen = std::collections::HashMap::new();
            for x in &scan {
                if let Some(prev) = seen.insert(side(x)?, x.clone()) {
                    return Ok(Some((prev, x.clone())));
                }
            }
            Ok(None)
        };
        let mut left_witness = None;
        if !left_cancellable {
            left_witness = first_collision(&|x| self.multiply(s, x))?
                .or_else(|| self.analytic_witness(s));
        }
        let mut right_witness = None;
        if !right_cancellable {
            right_witness = first_collision(&|x| self.multiply(x, s))?
                .or_else(|| self.analytic_witness(s));
        }
        Ok(CancellabilityVerdict {
            element: s.clone(),
            left_cancellable,
            right_cancellable,
            left_witness,
            right_witness,
        })
    }

    // s = q^a p^b with b > 0 gives s·qp = s·1, and with a > 0 gives qp·s = 1·s.
    fn analytic_witness(&self, _s: &Element) -> Option<(Element, Element)> {
        match self.family {
            Family::Bicyclic => Some((Element::Bicyclic(0, 0), Element::Bicyclic(1, 1))),
            _ => None,
        }
    }

    /// All products of at most `radius` generators, plus the identity for monoids.
    pub fn ball(&self, generators: &Window, radius: usize, budget: usize) -> Result<Window> {
        if generators.is_empty() {
            return Err(Error::invalid("ball needs at least one generator"));
        }
        self.check_window(generators)?;
        let mut all: HashSet<Element> = HashSet::new();
        if let Some(e) = self.identity() {
            all.insert(e);
        }
        let mut frontier: Vec<Element> = Vec::new();
        if radius >= 1 {
            for g in generators {
                if all.insert(g.clone()) {
                    frontier.push(g.clone());
                }
            }
        }
        for _ in 1..radius {
            let mut next = Vec::new();
            for x in &frontier {
                for g in generators {
                    let y = self.multiply(x, g)?;
                    if !all.contains(&y) {
                        all.insert(y.clone());
                        next.push(y);
                    }
                }
                if all.len() > budget {
                    return Err(Error::BudgetExceeded {
                        what: format!("ball of radius {radius}"),
                        required: format!("more than {budget} elements"),
                        budget: budget as u64,
                    });
                }
            }
            frontier = next;
        }
        if all.len() > budget {
            return Err(Error::BudgetExceeded {
                what: format!("ball of radius {radius}"),
                required: format!("{} elements", all.len()),
                budget: budget as u64,
            });
        }
        Ok(Window::new(all.into_iter().collect()))
    }

    /// The `n`-th member of the family's canonical Følner sequence, `n ≥ 1`.
    ///
    /// `{0..n-1}` for ℕ, `{0..n-1}ᵈ` for ℕᵈ, `[-n, n]ᵈ` for ℤᵈ,
    /// `{qᵃpᵇ : a, b < n}` for the bicyclic monoid, the whole set for a finite table,
    /// and `{aⁱ : i < n}` for the one-letter free monoid.
    pub fn folner_window(&self, n: usize) -> Result<Window> {
        if n == 0 {
            return Err(Error::invalid("Følner index starts at 1"));
        }
        let n64 = n as i64;
        Ok(match &self.family {
            Family::IntPow(d) => Window::new(lattice_box(*d, -n64, n64)),
            Family::FreeMonoid(k) if *k >= 2 => {
                return Err(Error::NoFolnerSequence(self.family.to_string()))
            }
            _ => return self.anchored_window(n),
        })
    }

    /// Boxes anchored at the identity: `{0..n-1}ᵈ` for ℕᵈ and ℤᵈ; the
    /// canonical Følner window for the other families.
    pub fn anchored_window(&self, n: usize) -> Result<Window> {
        if n == 0 {
            return Err(Error::invalid("window index starts at 1"));
        }
        Ok(match &self.family {
            Family::Nat => (0..n as u64).map(Element::Nat).collect(),
            Family::NatPow(d) | Family::IntPow(d) => Window::new(lattice_box(*d, 0, n as i64 - 1)),
            Family::FreeMonoid(1) => (0..n).map(|i| Element::Word(vec![0; i])).collect(),
            Family::FreeMonoid(_) => return Err(Error::NoFolnerSequence(self.family.to_string())),
            Family::Bicyclic => (0..n as u64)
                .flat_map(|a| (0..n as u64).map(move |b| Element::Bicyclic(a, b)))
                .collect(),
            Family::Finite(t) => (0..t.size()).map(Element::Index).collect(),
        })
    }

    /// The `n`-th window of a schedule.
    pub fn scheduled_window(&self, schedule: WindowSchedule, n: usize) -> Result<Window> {
        match schedule {
            WindowSchedule::Folner => self.folner_window(n),
            WindowSchedule::Anchored => self.anchored_window(n),
            WindowSchedule::Ball => self.ball(&self.default_generators(), n, DEFAULT_BALL_BUDGET),
        }
    }
}

impl fmt::Display for Semigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.family.fmt(f)
    }
}
