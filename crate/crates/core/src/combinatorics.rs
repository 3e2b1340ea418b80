//! Partitions, permutations, standard Young tableaux, descents and RSK.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest size accepted by the tableau enumerators.
pub const SYT_ENUMERATION_LIMIT: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition, dropping zero parts. Fails unless the parts are
    /// weakly decreasing.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let parts: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::BadShape(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Self(parts))
    }

    /// Sorts the parts first, so any multiset of positive integers is accepted.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Conjugate partition.
    pub fn transpose(&self) -> Self {
        let width = self.part(0);
        Self(
            (0..width)
                .map(|j| self.0.iter().filter(|&&p| p > j).count() as u32)
                .collect(),
        )
    }

    /// Hook lengths of every cell, row by row.
    pub fn hooks(&self) -> Vec<Vec<u32>> {
        let t = self.transpose();
        self.0
            .iter()
            .enumerate()
            .map(|(i, &row)| {
                (0..row)
                    .map(|j| (row - j - 1) + (t.part(j as usize) - i as u32 - 1) + 1)
                    .collect()
            })
            .collect()
    }

    /// Sum of `(i-1) * lambda_i`.
    pub fn n_statistic(&self) -> u32 {
        self.0.iter().enumerate().map(|(i, &p)| i as u32 * p).sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All partitions of `d`, in reverse-lexicographic order.
pub fn partitions_of(d: u32) -> Vec<Partition> {
    fn go(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(d, d, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `d` with at most `k` parts, reverse-lexicographic.
pub fn partitions_with_at_most(d: u32, k: usize) -> Vec<Partition> {
    partitions_of(d).into_iter().filter(|p| p.len() <= k).collect()
}

/// Number of standard Young tableaux of shape `lambda` (hook length formula).
pub fn syt_count(lambda: &Partition) -> BigUint {
    let n = lambda.size();
    let mut num = BigUint::one();
    for i in 2..=n {
        num *= i;
    }
    let den = lambda
        .hooks()
        .iter()
        .flatten()
        .fold(BigUint::one(), |acc, &h| acc * h);
    num / den
}

/// A permutation of `{1..d}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let d = values.len();
        let mut seen = vec![false; d + 1];
        for &v in &values {
            if v == 0 || v > d || seen[v] {
                return Err(Error::BadShape(format!("{values:?} is not a permutation")));
            }
            seen[v] = true;
        }
        Ok(Self(values))
    }

    pub fn identity(d: usize) -> Self {
        Self((1..=d).collect())
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inversions(&self) -> usize {
        let v = &self.0;
        (0..v.len())
            .map(|i| v[i + 1..].iter().filter(|&&w| w < v[i]).count())
            .sum()
    }

    /// `+1` or `-1`.
    pub fn sign(&self) -> i32 {
        if self.inversions().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// All permutations of `{1..d}` in lexicographic order.
pub fn permutations(d: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=d).collect();
    loop {
        out.push(Permutation(cur.clone()));
        // next lexicographic permutation
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// Descent data; positions are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DescentStats {
    pub des: usize,
    pub maj: usize,
    pub descent_set: Vec<usize>,
}

impl DescentStats {
    fn from_set(descent_set: Vec<usize>) -> Self {
        Self {
            des: descent_set.len(),
            maj: descent_set.iter().sum(),
            descent_set,
        }
    }
}

pub fn descent_stats_perm(sigma: &Permutation) -> DescentStats {
    DescentStats::from_set(
        sigma
            .0
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect(),
    )
}

/// Young tableau stored as ragged rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Accepts any filling whose row lengths form a partition.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.iter().any(Vec::is_empty) {
            return Err(Error::BadShape("empty row".into()));
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::BadShape("row lengths increase".into()));
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition(self.rows.iter().map(|r| r.len() as u32).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_standard(&self) -> bool {
        let d = self.size();
        let mut seen = vec![false; d + 1];
        for &v in self.rows.iter().flatten() {
            if v == 0 || v > d || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = self.rows.windows(2).all(|w| {
            w[1].iter().zip(&w[0]).all(|(below, above)| below > above)
        });
        rows_ok && cols_ok
    }

    /// Row index (0-based) holding each value, indexed by value.
    fn row_of(&self) -> Vec<usize> {
        let mut pos = vec![0; self.size() + 1];
        for (i, row) in self.rows.iter().enumerate() {
            for &v in row {
                pos[v] = i;
            }
        }
        pos
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.rows).expect("tableau serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let rows: Vec<Vec<usize>> =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::new(rows)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

/// `i` is a descent of `T` when `i + 1` sits in a strictly lower row.
pub fn descent_stats_syt(t: &Tableau) -> Result<DescentStats> {
    if !t.is_standard() {
        return Err(Error::NotStandard(t.to_string()));
    }
    let row = t.row_of();
    Ok(DescentStats::from_set(
        (1..t.size()).filter(|&i| row[i + 1] > row[i]).collect(),
    ))
}

/// Standard Young tableaux of shape `lambda`, ordered lexicographically by
/// their row-major reading of entries.
pub fn enumerate_syt(lambda: &Partition) -> Result<Vec<Tableau>> {
    let d = lambda.size();
    if d > SYT_ENUMERATION_LIMIT {
        return Err(Error::TooLarge(format!(
            "enumerating SYT of size {d} (limit {SYT_ENUMERATION_LIMIT})"
        )));
    }
    // Place 1..d one at a time at an outer corner of the growing shape.
    fn go(lambda: &Partition, filled: &mut Vec<Vec<usize>>, next: usize, out: &mut Vec<Tableau>) {
        if next > lambda.size() {
            out.push(Tableau {
                rows: filled.clone(),
            });
            return;
        }
        for i in 0..lambda.len() {
            let len = filled[i].len();
            let fits = (len as u32) < lambda.part(i) && (i == 0 || filled[i - 1].len() > len);
            if fits {
                filled[i].push(next);
                go(lambda, filled, next + 1, out);
                filled[i].pop();
            }
        }
    }
    let mut out = Vec::new();
    if d == 0 {
        return Ok(vec![Tableau { rows: vec![] }]);
    }
    go(lambda, &mut vec![Vec::new(); lambda.len()], 1, &mut out);
    out.sort();
    Ok(out)
}

/// Row insertion of `x` into `p`; returns the row where a new box was created.
fn row_insert(p: &mut Vec<Vec<usize>>, mut x: usize) -> usize {
    for (i, row) in p.iter_mut().enumerate() {
        match row.iter().position(|&y| y > x) {
            Some(j) => x = std::mem::replace(&mut row[j], x),
            None => {
                row.push(x);
                return i;
            }
        }
    }
    p.push(vec![x]);
    p.len() - 1
}

/// Robinson-Schensted correspondence by row insertion: returns the
/// insertion tableau `P` and the recording tableau `Q`.
pub fn rsk(sigma: &Permutation) -> (Tableau, Tableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (step, &x) in sigma.0.iter().enumerate() {
        let row = row_insert(&mut p, x);
        if row == q.len() {
            q.push(Vec::new());
        }
        q[row].push(step + 1);
    }
    (Tableau { rows: p }, Tableau { rows: q })
}
