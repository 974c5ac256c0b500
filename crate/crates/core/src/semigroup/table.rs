use crate::error::{Error, Result};

/// Multiplication table of a finite semigroup on `0..n`.
///
/// Construction checks closure and associativity over all `n³` triples, so
/// every value of this type is a genuine semigroup.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CayleyTable {
    n: usize,
    products: Vec<usize>,
    identity: Option<usize>,
}

impl CayleyTable {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::invalid("multiplication table is empty"));
        }
        let mut products = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::invalid(format!(
                    "table row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&v| v >= n) {
                return Err(Error::invalid(format!(
                    "table row {i} contains {bad}, not an index below {n}"
                )));
            }
            products.extend(row);
        }
        let mut table = CayleyTable {
            n,
            products,
            identity: None,
        };
        table.check_associative()?;
        table.identity = (0..n).find(|&e| {
            (0..n).all(|s| table.product(e, s) == s && table.product(s, e) == s)
        });
        Ok(table)
    }

    /// Reads the text format: first line `n`, then `n` lines of `n` space-separated indices.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::invalid("table file is empty"))?;
        let n: usize = header
            .parse()
            .map_err(|_| Error::invalid(format!("table size `{header}` is not a number")))?;
        let mut rows = Vec::with_capacity(n);
        for (i, line) in lines.enumerate() {
            let row = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>().map_err(|_| {
                        Error::invalid(format!("table row {i}: `{tok}` is not an index"))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        if rows.len() != n {
            return Err(Error::invalid(format!(
                "table declares {n} rows but has {}",
                rows.len()
            )));
        }
        Self::from_rows(rows)
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                let xy = self.product(x, y);
                for z in 0..n {
                    let lhs = self.product(xy, z);
                    let rhs = self.product(x, self.product(y, z));
                    if lhs != rhs {
                        return Err(Error::invalid(format!(
                            "table is not associative: ({x}·{y})·{z} = {lhs} but {x}·({y}·{z}) = {rhs}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn product(&self, x: usize, y: usize) -> usize {
        self.products[x * self.n + y]
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.products.chunks(self.n)
    }

    /// Text form accepted by [`CayleyTable::parse`].
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}
