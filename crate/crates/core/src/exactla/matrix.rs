use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::{self, Write};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Sparse integer matrix stored as coordinate triplets.
///
/// Entries are kept in a `BTreeMap` keyed by `(row, col)`, so iteration is
/// row-major and matches the dump format ordering. Zero entries are never
/// stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), BigInt>,
}

/// Rows and columns of one connected component of the bipartite
/// row/column incidence graph of a matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries.insert((i, i), BigInt::from(1));
        }
        m
    }

    /// Builds a matrix from triplets; repeated coordinates are summed.
    ///
    /// Panics if an index is out of range.
    pub fn from_triplets<I, T>(rows: usize, cols: usize, triplets: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, T)>,
        T: Into<BigInt>,
    {
        let mut m = Self::zeros(rows, cols);
        for (r, c, v) in triplets {
            m.add_to(r, c, &v.into());
        }
        m
    }

    pub fn from_dense<T: Clone + Into<BigInt>>(rows: &[Vec<T>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(nrows, ncols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), ncols, "ragged dense matrix");
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone().into());
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, r: usize, c: usize) -> BigInt {
        self.entries.get(&(r, c)).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        if v.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &BigInt) {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        if v.is_zero() {
            return;
        }
        let slot = self.entries.entry((r, c)).or_default();
        *slot += v;
        if slot.is_zero() {
            self.entries.remove(&(r, c));
        }
    }

    /// Row-major iteration over the nonzero entries.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut out = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (r, c, v) in self.iter() {
            out[r][c] = v.clone();
        }
        out
    }

    pub fn transpose(&self) -> Self {
        Self::from_triplets(
            self.cols,
            self.rows,
            self.iter().map(|(r, c, v)| (c, r, v.clone())),
        )
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![BigInt::zero(); self.rows];
        for (r, c, x) in self.iter() {
            out[r] += x * &v[c];
        }
        out
    }

    pub fn max_abs_entry(&self) -> BigInt {
        self.entries
            .values()
            .map(|v| v.abs())
            .max()
            .unwrap_or_default()
    }

    /// Dense copy of the submatrix on the given rows and columns.
    pub fn dense_block(&self, block: &Block) -> Vec<Vec<BigInt>> {
        let col_pos: BTreeMap<usize, usize> =
            block.cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut out = vec![vec![BigInt::zero(); block.cols.len()]; block.rows.len()];
        for (i, &r) in block.rows.iter().enumerate() {
            for ((_, c), v) in self.entries.range((r, 0)..(r + 1, 0)) {
                if let Some(&j) = col_pos.get(c) {
                    out[i][j] = v.clone();
                }
            }
        }
        out
    }

    /// Connected components of the row/column incidence graph, restricted to
    /// rows and columns that carry at least one nonzero entry. The matrix is
    /// block diagonal with respect to these components up to permutation, so
    /// rank and kernel can be computed block by block.
    pub fn components(&self) -> Vec<Block> {
        let mut uf = UnionFind::new(self.rows + self.cols);
        for &(r, c) in self.entries.keys() {
            uf.union(r, self.rows + c);
        }
        let mut groups: BTreeMap<usize, Block> = BTreeMap::new();
        let mut row_used = vec![false; self.rows];
        let mut col_used = vec![false; self.cols];
        for &(r, c) in self.entries.keys() {
            row_used[r] = true;
            col_used[c] = true;
        }
        for (r, _) in row_used.iter().enumerate().filter(|(_, &u)| u) {
            let root = uf.find(r);
            groups
                .entry(root)
                .or_insert_with(|| Block { rows: vec![], cols: vec![] })
                .rows
                .push(r);
        }
        for (c, _) in col_used.iter().enumerate().filter(|(_, &u)| u) {
            let root = uf.find(self.rows + c);
            groups
                .entry(root)
                .or_insert_with(|| Block { rows: vec![], cols: vec![] })
                .cols
                .push(c);
        }
        let mut blocks: Vec<Block> = groups.into_values().collect();
        blocks.sort_by_key(|b| b.cols[0]);
        blocks
    }

    /// Columns with no nonzero entry.
    pub fn zero_columns(&self) -> Vec<usize> {
        let mut used = vec![false; self.cols];
        for &(_, c) in self.entries.keys() {
            used[c] = true;
        }
        (0..self.cols).filter(|&c| !used[c]).collect()
    }

    /// Serializes in the dump format: a `ROWS COLS` header, then one
    /// `row col value` line per nonzero entry in row-major order.
    pub fn write_dump<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "{} {}", self.rows, self.cols)?;
        for (r, c, v) in self.iter() {
            writeln!(w, "{r} {c} {v}")?;
        }
        Ok(())
    }

    pub fn to_dump_string(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {}", self.rows, self.cols);
        for (r, c, v) in self.iter() {
            let _ = writeln!(s, "{r} {c} {v}");
        }
        s
    }

    pub fn parse_dump(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty matrix dump".into()))?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad header {header:?}"))))
            .collect::<Result<_>>()?;
        if dims.len() != 2 {
            return Err(Error::Parse(format!("bad header {header:?}")));
        }
        let mut m = Self::zeros(dims[0], dims[1]);
        for line in lines.filter(|l| !l.trim().is_empty()) {
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != 3 {
                return Err(Error::Parse(format!("bad entry line {line:?}")));
            }
            let r: usize = toks[0].parse().map_err(|_| Error::Parse(line.into()))?;
            let c: usize = toks[1].parse().map_err(|_| Error::Parse(line.into()))?;
            let v: BigInt = toks[2].parse().map_err(|_| Error::Parse(line.into()))?;
            if r >= m.rows || c >= m.cols {
                return Err(Error::Parse(format!("index out of range in {line:?}")));
            }
            m.set(r, c, v);
        }
        Ok(m)
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
