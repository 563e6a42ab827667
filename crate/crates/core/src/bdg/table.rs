//! Small groups given by an explicit multiplication table.
//!
//! Text format: line 1 is the order `n`; lines 2..=n+1 each hold `n` space-separated
//! 0-based indices, row `i` column `j` being the index of `g_i g_j`. Element 0 is the
//! identity.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;
use std::hash::Hash;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

pub const MAX_TABLE_ORDER: usize = 2000;
/// Orders up to this are checked for associativity on all `n³` triples.
pub const EXHAUSTIVE_ASSOC_ORDER: usize = 200;
const SAMPLED_TRIPLES: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AssociativityCheck {
    Exhaustive,
    Sampled(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LoadReport {
    pub order: usize,
    pub associativity: AssociativityCheck,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableGroup {
    order: usize,
    table: Vec<u32>,
    inverses: Vec<u32>,
}

fn malformed(line: usize, reason: impl Into<String>) -> Error {
    Error::MalformedTable {
        line,
        reason: reason.into(),
    }
}

impl TableGroup {
    /// Validates `rows` as a group table.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<(Self, LoadReport)> {
        let n = rows.len();
        if n == 0 || n > MAX_TABLE_ORDER {
            return Err(Error::NotAGroup(format!(
                "order {n} outside 1..={MAX_TABLE_ORDER}"
            )));
        }
        if let Some(i) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::NotAGroup(format!(
                "row {i} has {} entries",
                rows[i].len()
            )));
        }
        let table: Vec<u32> = rows.into_iter().flatten().collect();
        if let Some(&bad) = table.iter().find(|&&v| v as usize >= n) {
            return Err(Error::NotAGroup(format!("entry {bad} out of range")));
        }
        let at = |i: usize, j: usize| table[i * n + j] as usize;
        for i in 0..n {
            if at(0, i) != i || at(i, 0) != i {
                return Err(Error::NotAGroup("element 0 is not the identity".into()));
            }
        }
        for i in 0..n {
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for j in 0..n {
                row[at(i, j)] = true;
                col[at(j, i)] = true;
            }
            if row.contains(&false) || col.contains(&false) {
                return Err(Error::NotAGroup(format!(
                    "row or column {i} is not a permutation"
                )));
            }
        }
        let assoc = |i: usize, j: usize, k: usize| at(at(i, j), k) == at(i, at(j, k));
        let associativity = if n <= EXHAUSTIVE_ASSOC_ORDER {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        if !assoc(i, j, k) {
                            return Err(Error::NotAGroup(format!(
                                "({i}*{j})*{k} != {i}*({j}*{k})"
                            )));
                        }
                    }
                }
            }
            AssociativityCheck::Exhaustive
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
            for _ in 0..SAMPLED_TRIPLES {
                let (i, j, k) = (
                    rng.random_range(0..n),
                    rng.random_range(0..n),
                    rng.random_range(0..n),
                );
                if !assoc(i, j, k) {
                    return Err(Error::NotAGroup(format!("({i}*{j})*{k} != {i}*({j}*{k})")));
                }
            }
            AssociativityCheck::Sampled(SAMPLED_TRIPLES)
        };
        // Latin rows guarantee a unique right inverse in every row
        let inverses = (0..n)
            .map(|i| (0..n).find(|&j| at(i, j) == 0).unwrap() as u32)
            .collect();
        Ok((
            TableGroup {
                order: n,
                table,
                inverses,
            },
            LoadReport {
                order: n,
                associativity,
            },
        ))
    }

    pub fn parse(text: &str) -> Result<(Self, LoadReport)> {
        let mut lines = text.split('\n').enumerate().map(|(i, l)| (i + 1, l));
        let (_, first) = lines.next().ok_or_else(|| malformed(1, "empty input"))?;
        let n: usize = first
            .trim()
            .parse()
            .map_err(|_| malformed(1, format!("expected the order, found {first:?}")))?;
        if n == 0 || n > MAX_TABLE_ORDER {
            return Err(malformed(
                1,
                format!("order {n} outside 1..={MAX_TABLE_ORDER}"),
            ));
        }
        let mut rows = Vec::with_capacity(n);
        for _ in 0..n {
            let (ln, line) = lines
                .next()
                .ok_or_else(|| malformed(rows.len() + 2, "missing row"))?;
            let row = line
                .split_ascii_whitespace()
                .map(|t| {
                    t.parse::<u32>()
                        .map_err(|_| malformed(ln, format!("bad entry {t:?}")))
                })
                .collect::<Result<Vec<u32>>>()?;
            if row.len() != n {
                return Err(malformed(
                    ln,
                    format!("expected {n} entries, found {}", row.len()),
                ));
            }
            rows.push(row);
        }
        if let Some((ln, _)) = lines.find(|(_, l)| !l.trim().is_empty()) {
            return Err(malformed(ln, "trailing content after the last row"));
        }
        Self::from_rows(rows)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.order);
        for row in self.table.chunks(self.order) {
            let line: Vec<String> = row.iter().map(u32::to_string).collect();
            let _ = writeln!(s, "{}", line.join(" "));
        }
        s
    }

    /// Table of the group generated by `gens` under `mul`, elements numbered in
    /// breadth-first discovery order from `identity`.
    pub fn generate<T, F>(identity: T, gens: &[T], mul: F) -> Result<Self>
    where
        T: Clone + Eq + Hash,
        F: Fn(&T, &T) -> T,
    {
        let mut elems = vec![identity.clone()];
        let mut index = HashMap::from([(identity, 0usize)]);
        let mut next = 0;
        while next < elems.len() {
            for h in gens {
                let v = mul(&elems[next], h);
                if !index.contains_key(&v) {
                    if elems.len() == MAX_TABLE_ORDER {
                        return Err(Error::NotAGroup(format!(
                            "generated group exceeds order {MAX_TABLE_ORDER}"
                        )));
                    }
                    index.insert(v.clone(), elems.len());
                    elems.push(v);
                }
            }
            next += 1;
        }
        let rows = elems
            .iter()
            .map(|u| {
                elems
                    .iter()
                    .map(|v| {
                        index
                            .get(&mul(u, v))
                            .map(|&k| k as u32)
                            .ok_or_else(|| Error::NotAGroup("multiplication not closed".into()))
                    })
                    .collect()
            })
            .collect::<Result<Vec<Vec<u32>>>>()?;
        Ok(Self::from_rows(rows)?.0)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, i: u32, j: u32) -> u32 {
        self.table[i as usize * self.order + j as usize]
    }

    pub fn inverse(&self, i: u32) -> u32 {
        self.inverses[i as usize]
    }

    /// Conjugacy classes as sorted index lists, ordered by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<u32>> {
        let n = self.order as u32;
        let mut seen = vec![false; self.order];
        let mut classes = Vec::new();
        for g in 0..n {
            if seen[g as usize] {
                continue;
            }
            let class: BTreeSet<u32> = (0..n)
                .map(|h| self.mul(self.mul(self.inverse(h), g), h))
                .collect();
            for &c in &class {
                seen[c as usize] = true;
            }
            classes.push(class.into_iter().collect());
        }
        classes
    }

    pub fn center_order(&self) -> usize {
        self.conjugacy_classes()
            .iter()
            .filter(|c| c.len() == 1)
            .count()
    }

    /// Sizes of the classes outside the centre.
    pub fn noncentral_class_sizes(&self) -> BTreeSet<u64> {
        self.conjugacy_classes()
            .iter()
            .map(|c| c.len() as u64)
            .filter(|&s| s > 1)
            .collect()
    }
}
