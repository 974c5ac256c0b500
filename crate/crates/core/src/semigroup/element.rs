use std::cmp::Ordering;
use std::fmt;

/// A point of one of the built-in semigroup families.
///
/// The payload encodes the element in canonical form for its family, so two
/// equal elements always compare equal structurally.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Element {
    /// A natural number in the additive monoid ℕ.
    Nat(u64),
    /// A coordinate tuple in ℕᵈ or ℤᵈ.
    Tuple(Vec<i64>),
    /// A word over the generator letters `0..k` of a free monoid.
    Word(Vec<u8>),
    /// The bicyclic element `q^a p^b`, stored as `(a, b)`.
    Bicyclic(u64, u64),
    /// An index into a finite multiplication table.
    Index(usize),
}

impl Element {
    fn rank(&self) -> u8 {
        match self {
            Element::Nat(_) => 0,
            Element::Tuple(_) => 1,
            Element::Word(_) => 2,
            Element::Bicyclic(..) => 3,
            Element::Index(_) => 4,
        }
    }

    /// The generator `p` of the bicyclic monoid.
    pub const P: Element = Element::Bicyclic(0, 1);
    /// The generator `q` of the bicyclic monoid.
    pub const Q: Element = Element::Bicyclic(1, 0);

    /// Shorthand for a one-dimensional tuple, i.e. an element of ℤ or ℕ¹.
    pub fn int(x: i64) -> Element {
        Element::Tuple(vec![x])
    }

    /// Parses a free-monoid word written with letters `a`, `b`, ...; `""` is the identity.
    pub fn word(letters: &str) -> Element {
        Element::Word(letters.bytes().map(|c| c - b'a').collect())
    }
}

// Words use shortlex order so balls list shorter words first; every other
// payload is compared numerically or lexicographically.
impl Ord for Element {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Element::Nat(a), Element::Nat(b)) => a.cmp(b),
            (Element::Tuple(a), Element::Tuple(b)) => a.cmp(b),
            (Element::Word(a), Element::Word(b)) => a.len().cmp(&b.len()).then_with(|| a.cmp(b)),
            (Element::Bicyclic(a1, b1), Element::Bicyclic(a2, b2)) => (a1, b1).cmp(&(a2, b2)),
            (Element::Index(a), Element::Index(b)) => a.cmp(b),
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl PartialOrd for Element {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Literal syntax, the same one the job-spec parser reads back.
impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Nat(n) => write!(f, "{n}"),
            Element::Tuple(xs) if xs.len() == 1 => write!(f, "{}", xs[0]),
            Element::Tuple(xs) => {
                write!(f, "(")?;
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
            Element::Word(w) if w.is_empty() => write!(f, "1"),
            Element::Word(w) => {
                for &c in w {
                    write!(f, "{}", (b'a' + c) as char)?;
                }
                Ok(())
            }
            Element::Bicyclic(a, b) => write!(f, "({a},{b})"),
            Element::Index(i) => write!(f, "{i}"),
        }
    }
}
