use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// Which module a table of graded Betti numbers describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Subject {
    /// The ideal `I` itself; homological index 0 holds the generators.
    Ideal,
    /// The quotient `S/I`; `beta_{0,0} = 1`.
    Quotient,
}

/// Graded Betti numbers `beta_{i,j}` keyed by `(i, j)`; only nonzero entries are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    subject: Subject,
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn new(subject: Subject, entries: impl IntoIterator<Item = ((usize, usize), u64)>) -> Self {
        let mut map = BTreeMap::new();
        for (key, value) in entries {
            if value > 0 {
                *map.entry(key).or_insert(0) += value;
            }
        }
        BettiTable {
            subject,
            entries: map,
        }
    }

    pub fn subject(&self) -> Subject {
        self.subject
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Re-expresses the table for the other subject.
    ///
    /// `beta_{i,j}(I) = beta_{i+1,j}(S/I)`; this is the only place the shift happens.
    pub fn convert(&self, to: Subject) -> BettiTable {
        match (self.subject, to) {
            (a, b) if a == b => self.clone(),
            (Subject::Quotient, Subject::Ideal) => BettiTable::new(
                Subject::Ideal,
                self.entries()
                    .filter(|&((i, _), _)| i > 0)
                    .map(|((i, j), v)| ((i - 1, j), v)),
            ),
            _ => BettiTable::new(
                Subject::Quotient,
                std::iter::once(((0, 0), 1)).chain(self.entries().map(|((i, j), v)| ((i + 1, j), v))),
            ),
        }
    }

    /// Largest homological index with a nonzero entry.
    pub fn pd(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Largest `j - i` over nonzero entries.
    pub fn reg(&self) -> usize {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }

    /// Total Betti numbers `beta_i = sum_j beta_{i,j}` for `i = 0..=pd`.
    pub fn totals(&self) -> Vec<u64> {
        let mut out = vec![0u64; self.pd() + 1];
        for ((i, _), v) in self.entries() {
            out[i] += v;
        }
        out
    }

    /// Multiset of shifts at homological index `i`, ascending.
    pub fn degrees_at(&self, i: usize) -> Vec<usize> {
        self.entries()
            .filter(|&((k, _), _)| k == i)
            .flat_map(|((_, j), v)| std::iter::repeat_n(j, v as usize))
            .collect()
    }

    /// Extremal entries: nonzero `beta_{i,j}` with no other nonzero
    /// `beta_{p,q}` such that `p >= i`, `q - p >= j - i` and `q > j`.
    pub fn extremal(&self) -> Vec<((usize, usize), u64)> {
        self.entries()
            .filter(|&((i, j), _)| {
                !self.entries.keys().any(|&(p, q)| {
                    p >= i && q > j && (q as i64 - p as i64) >= (j as i64 - i as i64)
                })
            })
            .collect()
    }

    /// Text diagram: columns are homological indices, rows are `j - i`,
    /// `-` marks zeros, and a `Tot` row lists total Betti numbers.
    pub fn diagram(&self) -> String {
        let ncols = self.pd() + 1;
        let rows: Vec<usize> = self.entries.keys().map(|&(i, j)| j - i).collect();
        let (low, high) = (
            rows.iter().copied().min().unwrap_or(0),
            rows.iter().copied().max().unwrap_or(0),
        );
        let totals = self.totals();
        let cell = |i: usize, row: usize| match self.get(i, i + row) {
            0 => "-".to_string(),
            v => v.to_string(),
        };
        let label_width = (low..=high)
            .map(|r| r.to_string().len())
            .chain(std::iter::once(3))
            .max()
            .unwrap_or(3);
        let widths: Vec<usize> = (0..ncols)
            .map(|i| {
                (low..=high)
                    .map(|r| cell(i, r).len())
                    .chain([i.to_string().len(), totals[i].to_string().len()])
                    .max()
                    .unwrap_or(1)
            })
            .collect();
        let render = |label: &str, values: Vec<String>| {
            let mut line = format!("{label:>label_width$}: ");
            let cells: Vec<String> = values
                .iter()
                .zip(&widths)
                .map(|(v, &w)| format!("{v:>w$}"))
                .collect();
            line.push_str(&cells.join(" "));
            line
        };
        let mut out = String::new();
        let header = render("", (0..ncols).map(|i| i.to_string()).collect());
        let header = header.replacen(':', " ", 1);
        let tot = render("Tot", totals.iter().map(|v| v.to_string()).collect());
        let _ = writeln!(out, "{}", header.trim_end());
        let _ = writeln!(out, "{tot}");
        let _ = writeln!(out, "{}", "-".repeat(tot.len()));
        for r in low..=high {
            let _ = writeln!(out, "{}", render(&r.to_string(), (0..ncols).map(|i| cell(i, r)).collect()));
        }
        out
    }
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let entries: Vec<[u64; 3]> = self
            .entries()
            .map(|((i, j), v)| [i as u64, j as u64, v])
            .collect();
        let mut s = serializer.serialize_struct("BettiTable", 5)?;
        s.serialize_field("subject", &self.subject)?;
        s.serialize_field("entries", &entries)?;
        s.serialize_field("totals", &self.totals())?;
        s.serialize_field("pd", &self.pd())?;
        s.serialize_field("reg", &self.reg())?;
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pascal_10_3() -> BettiTable {
        BettiTable::new(
            Subject::Quotient,
            [((0, 0), 1), ((1, 3), 2), ((1, 4), 1), ((2, 6), 1), ((2, 7), 2), ((3, 10), 1)],
        )
    }

    #[test]
    fn conversion_shifts_homological_index() {
        let q = pascal_10_3();
        let i = q.convert(Subject::Ideal);
        assert_eq!(i.get(0, 3), 2);
        assert_eq!(i.get(2, 10), 1);
        assert_eq!((i.pd(), i.reg()), (2, 8));
        assert_eq!((q.pd(), q.reg()), (3, 7));
        assert_eq!(i.convert(Subject::Quotient), q);
        assert_eq!(q.totals(), vec![1, 3, 3, 1]);
        assert_eq!(q.degrees_at(2), vec![6, 7, 7]);
    }

    #[test]
    fn single_extremal_for_complete_intersection() {
        assert_eq!(pascal_10_3().extremal(), vec![((3, 10), 1)]);
        let koszul = BettiTable::new(Subject::Quotient, [((0, 0), 1), ((1, 1), 2), ((2, 2), 1)]);
        assert_eq!(koszul.extremal(), vec![((2, 2), 1)]);
    }

    #[test]
    fn diagram_layout() {
        let expected = concat!(
            "     0 1 2 3\n",
            "Tot: 1 3 3 1\n",
            "------------\n",
            "  0: 1 - - -\n",
            "  1: - - - -\n",
            "  2: - 2 - -\n",
            "  3: - 1 - -\n",
            "  4: - - 1 -\n",
            "  5: - - 2 -\n",
            "  6: - - - -\n",
            "  7: - - - 1\n",
        );
        assert_eq!(pascal_10_3().diagram(), expected);
    }
}
