use std::fmt;

use super::Element;

/// A finite, duplicate-free set of elements kept in canonical order.
///
/// Equal sets always have equal encodings, so windows can be hashed and
/// compared directly.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Window {
    elements: Vec<Element>,
}

impl Window {
    pub fn new(mut elements: Vec<Element>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        Window { elements }
    }

    pub fn empty() -> Self {
        Window::default()
    }

    pub fn singleton(e: Element) -> Self {
        Window { elements: vec![e] }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Element> {
        self.elements.iter()
    }

    pub fn contains(&self, e: &Element) -> bool {
        self.elements.binary_search(e).is_ok()
    }

    /// Position of `e` in canonical order.
    pub fn position(&self, e: &Element) -> Option<usize> {
        self.elements.binary_search(e).ok()
    }

    pub fn union(&self, other: &Window) -> Window {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.elements, &other.elements);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(a[i].clone());
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Window { elements: out }
    }

    pub fn difference(&self, other: &Window) -> Window {
        self.filter(|e| !other.contains(e))
    }

    pub fn intersection(&self, other: &Window) -> Window {
        self.filter(|e| other.contains(e))
    }

    pub fn is_subset(&self, other: &Window) -> bool {
        self.elements.iter().all(|e| other.contains(e))
    }

    pub fn is_disjoint(&self, other: &Window) -> bool {
        self.elements.iter().all(|e| !other.contains(e))
    }

    /// Keeps the elements satisfying `keep`; order is preserved so no re-sort is needed.
    pub fn filter(&self, mut keep: impl FnMut(&Element) -> bool) -> Window {
        Window {
            elements: self.elements.iter().filter(|e| keep(e)).cloned().collect(),
        }
    }
}

impl FromIterator<Element> for Window {
    fn from_iter<I: IntoIterator<Item = Element>>(iter: I) -> Self {
        Window::new(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a Window {
    type Item = &'a Element;
    type IntoIter = std::slice::Iter<'a, Element>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

impl From<Vec<Element>> for Window {
    fn from(v: Vec<Element>) -> Self {
        Window::new(v)
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nats(xs: &[u64]) -> Window {
        xs.iter().map(|&x| Element::Nat(x)).collect()
    }

    #[test]
    fn canonical_and_deduplicated() {
        let w = nats(&[3, 1, 3, 2]);
        assert_eq!(w, nats(&[1, 2, 3]));
        assert_eq!(w.len(), 3);
    }

    #[test]
    fn set_operations() {
        let a = nats(&[0, 1, 2, 3]);
        let b = nats(&[2, 3, 4]);
        assert_eq!(a.union(&b), nats(&[0, 1, 2, 3, 4]));
        assert_eq!(a.difference(&b), nats(&[0, 1]));
        assert_eq!(a.intersection(&b), nats(&[2, 3]));
        assert!(nats(&[1, 2]).is_subset(&a));
        assert!(nats(&[7]).is_disjoint(&a));
    }
}
