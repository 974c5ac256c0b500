//! Element literals.
//!
//! | family      | literal                         | examples            |
//! |-------------|---------------------------------|---------------------|
//! | `nat`       | non-negative integer            | `0`, `17`           |
//! | `nat d`     | tuple, or an integer when d = 1 | `(1,0)`, `3`        |
//! | `int d`     | tuple, or an integer when d = 1 | `(-1,2)`, `-4`      |
//! | `free k`    | word over `a`, `b`, ..., `1`    | `ab`, `1`           |
//! | `bicyclic`  | `(a,b)` for `q^a p^b`; `1 p q`  | `(0,1)`, `p`        |
//! | `finite`    | row index                       | `2`                 |
//!
//! Lists are whitespace-separated. On one-dimensional integer families
//! `a..b` stands for every integer from `a` to `b` inclusive.

use semica_core::{Element, Family, Window};

pub fn parse_element(family: &Family, text: &str) -> Result<Element, String> {
    let bad = |what: &str| format!("`{text}` is not {what}");
    match family {
        Family::Nat => text.parse().map(Element::Nat).map_err(|_| bad("a natural number")),
        Family::NatPow(d) | Family::IntPow(d) => {
            let inner = text
                .strip_prefix('(')
                .and_then(|t| t.strip_suffix(')'))
                .unwrap_or(text);
            let coords: Vec<i64> = inner
                .split(',')
                .map(|c| c.trim().parse::<i64>())
                .collect::<Result<_, _>>()
                .map_err(|_| bad(&format!("a {d}-tuple of integers")))?;
            if coords.len() != *d {
                return Err(bad(&format!("a {d}-tuple")));
            }
            if matches!(family, Family::NatPow(_)) && coords.iter().any(|&c| c < 0) {
                return Err(bad("a tuple of natural numbers"));
            }
            Ok(Element::Tuple(coords))
        }
        Family::FreeMonoid(k) => {
            if text == "1" {
                return Ok(Element::Word(Vec::new()));
            }
            text.bytes()
                .map(|c| {
                    let i = c.wrapping_sub(b'a');
                    if (i as usize) < *k {
                        Ok(i)
                    } else {
                        Err(bad(&format!("a word over the first {k} letters")))
                    }
                })
                .collect::<Result<Vec<u8>, _>>()
                .map(Element::Word)
        }
        Family::Bicyclic => match text {
            "1" => Ok(Element::Bicyclic(0, 0)),
            "p" => Ok(Element::P),
            "q" => Ok(Element::Q),
            _ => {
                let inner = text
                    .strip_prefix('(')
                    .and_then(|t| t.strip_suffix(')'))
                    .ok_or_else(|| bad("a bicyclic pair (a,b)"))?;
                let parts: Vec<u64> = inner
                    .split(',')
                    .map(|c| c.trim().parse::<u64>())
                    .collect::<Result<_, _>>()
                    .map_err(|_| bad("a bicyclic pair (a,b)"))?;
                match parts[..] {
                    [a, b] => Ok(Element::Bicyclic(a, b)),
                    _ => Err(bad("a bicyclic pair (a,b)")),
                }
            }
        },
        Family::Finite(t) => match text.parse::<usize>() {
            Ok(i) if i < t.size() => Ok(Element::Index(i)),
            _ => Err(bad(&format!("an index below {}", t.size()))),
        },
    }
}

/// Splits on whitespace outside parentheses.
fn tokens(text: &str) -> Result<Vec<String>, String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0usize;
    for c in text.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.checked_sub(1).ok_or("unbalanced `)`")?,
            _ => {}
        }
        if c.is_whitespace() && depth == 0 {
            if !cur.is_empty() {
                out.push(std::mem::take(&mut cur));
            }
        } else if !c.is_whitespace() {
            cur.push(c);
        }
    }
    if depth != 0 {
        return Err("unbalanced `(`".into());
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    Ok(out)
}

/// Parses a list of elements in the order written, keeping duplicates.
pub fn parse_list(family: &Family, text: &str) -> Result<Vec<Element>, String> {
    let mut out = Vec::new();
    for tok in tokens(text)? {
        let range = match family {
            Family::Nat | Family::NatPow(1) | Family::IntPow(1) => tok.split_once(".."),
            _ => None,
        };
        match range {
            Some((lo, hi)) => {
                let lo = parse_element(family, lo)?;
                let hi = parse_element(family, hi)?;
                let (a, b) = match (&lo, &hi) {
                    (Element::Nat(a), Element::Nat(b)) => (*a as i64, *b as i64),
                    (Element::Tuple(a), Element::Tuple(b)) => (a[0], b[0]),
                    _ => unreachable!(),
                };
                if b < a {
                    return Err(format!("empty range `{tok}`"));
                }
                if b - a >= 1 << 24 {
                    return Err(format!("range `{tok}` is too long"));
                }
                out.extend((a..=b).map(|x| match family {
                    Family::Nat => Element::Nat(x as u64),
                    _ => Element::Tuple(vec![x]),
                }));
            }
            None => out.push(parse_element(family, &tok)?),
        }
    }
    Ok(out)
}

pub fn parse_window(family: &Family, text: &str) -> Result<Window, String> {
    parse_list(family, text).map(Window::new)
}

/// Space-separated literals, compressing runs of consecutive integers on
/// one-dimensional families.
pub fn format_list<'a>(family: &Family, elements: impl IntoIterator<Item = &'a Element>) -> String {
    let as_int = |e: &Element| match (family, e) {
        (Family::Nat, Element::Nat(n)) => Some(*n as i64),
        (Family::NatPow(1) | Family::IntPow(1), Element::Tuple(v)) => Some(v[0]),
        _ => None,
    };
    let elements: Vec<&Element> = elements.into_iter().collect();
    let mut parts = Vec::new();
    let mut i = 0;
    while i < elements.len() {
        let mut j = i;
        if let Some(start) = as_int(elements[i]) {
            while j + 1 < elements.len() && as_int(elements[j + 1]) == Some(start + (j + 1 - i) as i64) {
                j += 1;
            }
        }
        if j >= i + 2 {
            parts.push(format!("{}..{}", elements[i], elements[j]));
        } else {
            j = i;
            parts.push(elements[i].to_string());
        }
        i = j + 1;
    }
    parts.join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use semica_core::semigroup::CayleyTable;

    #[test]
    fn literals_per_family() {
        assert_eq!(parse_element(&Family::Nat, "7"), Ok(Element::Nat(7)));
        assert!(parse_element(&Family::Nat, "-1").is_err());
        assert_eq!(parse_element(&Family::IntPow(2), "(-1, 2)"), Ok(Element::Tuple(vec![-1, 2])));
        assert_eq!(parse_element(&Family::IntPow(1), "-3"), Ok(Element::int(-3)));
        assert!(parse_element(&Family::NatPow(2), "(-1,2)").is_err());
        assert!(parse_element(&Family::IntPow(2), "(1,2,3)").is_err());
        assert_eq!(parse_element(&Family::FreeMonoid(2), "ab"), Ok(Element::word("ab")));
        assert_eq!(parse_element(&Family::FreeMonoid(2), "1"), Ok(Element::Word(vec![])));
        assert!(parse_element(&Family::FreeMonoid(2), "abc").is_err());
        assert_eq!(parse_element(&Family::Bicyclic, "(0,1)"), Ok(Element::P));
        assert_eq!(parse_element(&Family::Bicyclic, "q"), Ok(Element::Q));
        assert!(parse_element(&Family::Bicyclic, "(0,1,2)").is_err());
        let t = CayleyTable::from_rows(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(parse_element(&Family::Finite(t.clone()), "1"), Ok(Element::Index(1)));
        assert!(parse_element(&Family::Finite(t), "2").is_err());
    }

    #[test]
    fn lists_and_ranges_round_trip() {
        let w = parse_window(&Family::Nat, "0..9 12").unwrap();
        assert_eq!(w.len(), 11);
        assert_eq!(format_list(&Family::Nat, &w), "0..9 12");
        let z = parse_window(&Family::IntPow(1), "-2..1 5 6").unwrap();
        assert_eq!(format_list(&Family::IntPow(1), &z), "-2..1 5 6");
        let b = parse_window(&Family::Bicyclic, "(0,0) ( 1 , 1 )").unwrap();
        assert_eq!(format_list(&Family::Bicyclic, &b), "(0,0) (1,1)");
        assert!(parse_window(&Family::Bicyclic, "(0,0").is_err());
        assert!(parse_window(&Family::Nat, "5..2").is_err());
    }
}
