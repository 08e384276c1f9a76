//! Dense linear algebra over F_p: rank, kernel, reduced row echelon form,
//! Smith normal form over a field, and the idempotent pair attached to a
//! square matrix.
//!
//! Storage is bit-packed (one u64 word per 64 columns) for p = 2, where row
//! elimination is machine-word XOR, and one u16 per entry for p > 2.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use rand::Rng;
use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
enum Store {
    Bits { wpr: usize, words: Vec<u64> },
    Wide(Vec<u16>),
}

/// A dense matrix over a prime field.
#[derive(Clone, PartialEq, Eq)]
pub struct FpMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    store: Store,
}

fn words_per_row(cols: usize) -> usize {
    cols.div_ceil(64)
}

impl FpMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        let store = if field.is_binary() {
            let wpr = words_per_row(cols);
            Store::Bits { wpr, words: vec![0; rows * wpr] }
        } else {
            Store::Wide(vec![0; rows * cols])
        };
        FpMatrix { field, rows, cols, store }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_fn(
        field: PrimeField,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> u16,
    ) -> Self {
        let mut m = Self::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, field.reduce(f(i, j) as i64));
            }
        }
        m
    }

    pub fn from_rows(field: PrimeField, rows: &[Vec<u16>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self::from_fn(field, rows.len(), cols, |i, j| rows[i][j])
    }

    pub fn random(field: PrimeField, rows: usize, cols: usize, rng: &mut impl Rng) -> Self {
        let p = field.p() as u16;
        Self::from_fn(field, rows, cols, |_, _| rng.gen_range(0..p))
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u16 {
        debug_assert!(i < self.rows && j < self.cols);
        match &self.store {
            Store::Bits { wpr, words } => (words[i * wpr + j / 64] >> (j % 64) & 1) as u16,
            Store::Wide(v) => v[i * self.cols + j],
        }
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, val: u16) {
        debug_assert!(i < self.rows && j < self.cols);
        debug_assert!((val as u32) < self.field.p());
        match &mut self.store {
            Store::Bits { wpr, words } => {
                let w = &mut words[i * *wpr + j / 64];
                *w = (*w & !(1 << (j % 64))) | ((val as u64) << (j % 64));
            }
            Store::Wide(v) => v[i * self.cols + j] = val,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.store {
            Store::Bits { words, .. } => words.iter().all(|&w| w == 0),
            Store::Wide(v) => v.iter().all(|&e| e == 0),
        }
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut out = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in self.row_support(i) {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    /// Entrywise negation; the identity map over F_2.
    pub fn negated(&self) -> FpMatrix {
        if self.field.is_binary() {
            return self.clone();
        }
        let mut out = self.clone();
        if let Store::Wide(v) = &mut out.store {
            for e in v.iter_mut() {
                *e = self.field.neg(*e);
            }
        }
        out
    }

    pub fn matadd(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.field, other.field, "field mismatch");
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        match (&self.store, &other.store) {
            (Store::Bits { wpr, words }, Store::Bits { words: w2, .. }) => {
                let words = words.iter().zip(w2).map(|(a, b)| a ^ b).collect();
                FpMatrix { field: self.field, rows: self.rows, cols: self.cols, store: Store::Bits { wpr: *wpr, words } }
            }
            (Store::Wide(a), Store::Wide(b)) => {
                let v = a.iter().zip(b).map(|(&x, &y)| self.field.add(x, y)).collect();
                FpMatrix { field: self.field, rows: self.rows, cols: self.cols, store: Store::Wide(v) }
            }
            _ => unreachable!("stores agree for equal fields"),
        }
    }

    pub fn matsub(&self, other: &FpMatrix) -> FpMatrix {
        self.matadd(&other.negated())
    }

    pub fn matmul(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.field, other.field, "field mismatch");
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut out = Self::zeros(self.field, self.rows, other.cols);
        match (&self.store, &other.store, &mut out.store) {
            (Store::Bits { .. }, Store::Bits { wpr: bw, words: bwords }, Store::Bits { wpr: ow, words: owords }) => {
                for i in 0..self.rows {
                    let dst = &mut owords[i * *ow..(i + 1) * *ow];
                    for k in self.row_support(i) {
                        let src = &bwords[k * *bw..(k + 1) * *bw];
                        for (d, s) in dst.iter_mut().zip(src) {
                            *d ^= s;
                        }
                    }
                }
            }
            _ => {
                for i in 0..self.rows {
                    for k in 0..self.cols {
                        let a = self.get(i, k);
                        if a == 0 {
                            continue;
                        }
                        for j in 0..other.cols {
                            let b = other.get(k, j);
                            if b == 0 {
                                continue;
                            }
                            let cur = out.get(i, j);
                            out.set(i, j, self.field.add(cur, self.field.mul(a, b)));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn hstack(blocks: &[&FpMatrix]) -> FpMatrix {
        assert!(!blocks.is_empty());
        let field = blocks[0].field;
        let rows = blocks[0].rows;
        assert!(blocks.iter().all(|b| b.rows == rows && b.field == field), "hstack mismatch");
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(field, rows, cols);
        let mut off = 0;
        for b in blocks {
            for i in 0..rows {
                for j in b.row_support(i) {
                    out.set(i, off + j, b.get(i, j));
                }
            }
            off += b.cols;
        }
        out
    }

    pub fn vstack(blocks: &[&FpMatrix]) -> FpMatrix {
        assert!(!blocks.is_empty());
        let field = blocks[0].field;
        let cols = blocks[0].cols;
        assert!(blocks.iter().all(|b| b.cols == cols && b.field == field), "vstack mismatch");
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut out = Self::zeros(field, rows, cols);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.rows {
                for j in b.row_support(i) {
                    out.set(off + i, j, b.get(i, j));
                }
            }
            off += b.rows;
        }
        out
    }

    /// Kronecker product.
    pub fn kron(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.field, other.field, "field mismatch");
        let mut out = Self::zeros(self.field, self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in self.row_support(i) {
                let a = self.get(i, j);
                for r in 0..other.rows {
                    for c in other.row_support(r) {
                        out.set(
                            i * other.rows + r,
                            j * other.cols + c,
                            self.field.mul(a, other.get(r, c)),
                        );
                    }
                }
            }
        }
        out
    }

    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> FpMatrix {
        Self::from_fn(self.field, row_idx.len(), col_idx.len(), |i, j| {
            self.get(row_idx[i], col_idx[j])
        })
    }

    /// Columns reordered so that new column j is old column `perm[j]`.
    pub fn permuted_cols(&self, perm: &[usize]) -> FpMatrix {
        assert_eq!(perm.len(), self.cols);
        let mut out = Self::zeros(self.field, self.rows, self.cols);
        for i in 0..self.rows {
            for (j, &src) in perm.iter().enumerate() {
                let v = self.get(i, src);
                if v != 0 {
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Smallest Hamming weight among rows; None for a rowless matrix.
    pub fn min_row_weight(&self) -> Option<usize> {
        (0..self.rows).map(|i| self.row_support(i).len()).min()
    }

    /// Column indices with nonzero entries in the given row.
    pub fn row_support(&self, i: usize) -> Vec<usize> {
        match &self.store {
            Store::Bits { wpr, words } => {
                let mut out = Vec::new();
                for (wi, &w) in words[i * wpr..(i + 1) * wpr].iter().enumerate() {
                    let mut w = w;
                    while w != 0 {
                        out.push(wi * 64 + w.trailing_zeros() as usize);
                        w &= w - 1;
                    }
                }
                out
            }
            Store::Wide(v) => (0..self.cols)
                .filter(|&j| v[i * self.cols + j] != 0)
                .collect(),
        }
    }

    pub fn row_vector(&self, i: usize) -> FpVector {
        let mut v = FpVector::zeros(self.field, self.cols);
        v.add_assign_row(self, i, 1);
        v
    }

    pub fn mul_vector(&self, v: &FpVector) -> FpVector {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        let mut out = FpVector::zeros(self.field, self.rows);
        for i in 0..self.rows {
            let mut acc: u64 = 0;
            for j in self.row_support(i) {
                acc += self.get(i, j) as u64 * v.get(j) as u64;
            }
            out.set(i, (acc % self.field.p() as u64) as u16);
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        match &mut self.store {
            Store::Bits { wpr, words } => {
                for w in 0..*wpr {
                    words.swap(a * *wpr + w, b * *wpr + w);
                }
            }
            Store::Wide(v) => {
                for j in 0..self.cols {
                    v.swap(a * self.cols + j, b * self.cols + j);
                }
            }
        }
    }

    fn scale_row(&mut self, i: usize, c: u16) {
        if c == 1 {
            return;
        }
        match &mut self.store {
            Store::Bits { .. } => unreachable!("only scale 1 exists over F_2"),
            Store::Wide(v) => {
                for j in 0..self.cols {
                    v[i * self.cols + j] = self.field.mul(v[i * self.cols + j], c);
                }
            }
        }
    }

    /// dst_row += c * src_row.
    fn add_scaled_row(&mut self, dst: usize, src: usize, c: u16) {
        if c == 0 || dst == src {
            return;
        }
        match &mut self.store {
            Store::Bits { wpr, words } => {
                let (lo, hi) = if dst < src { (dst, src) } else { (src, dst) };
                let (head, tail) = words.split_at_mut(hi * *wpr);
                let lo_slice = &head[lo * *wpr..lo * *wpr + *wpr];
                let hi_slice = &mut tail[..*wpr];
                if dst > src {
                    for (d, s) in hi_slice.iter_mut().zip(lo_slice) {
                        *d ^= s;
                    }
                } else {
                    // dst < src: dst lives in head; need a temp copy of src
                    let src_copy: Vec<u64> = hi_slice.to_vec();
                    let dst_slice = &mut head[dst * *wpr..dst * *wpr + *wpr];
                    for (d, s) in dst_slice.iter_mut().zip(&src_copy) {
                        *d ^= s;
                    }
                }
            }
            Store::Wide(v) => {
                for j in 0..self.cols {
                    let s = v[src * self.cols + j];
                    if s != 0 {
                        let d = &mut v[dst * self.cols + j];
                        *d = self.field.add(*d, self.field.mul(c, s));
                    }
                }
            }
        }
    }

    fn scale_col(&mut self, j: usize, c: u16) {
        if c == 1 {
            return;
        }
        for i in 0..self.rows {
            let v = self.get(i, j);
            if v != 0 {
                self.set(i, j, self.field.mul(v, c));
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            let (x, y) = (self.get(i, a), self.get(i, b));
            self.set(i, a, y);
            self.set(i, b, x);
        }
    }

    /// col dst += c * col src.
    fn add_scaled_col(&mut self, dst: usize, src: usize, c: u16) {
        if c == 0 || dst == src {
            return;
        }
        for i in 0..self.rows {
            let s = self.get(i, src);
            if s != 0 {
                let d = self.get(i, dst);
                self.set(i, dst, self.field.add(d, self.field.mul(c, s)));
            }
        }
    }

    /// Reduced row echelon form with pivot columns.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = m.field.inv(m.get(r, c)).expect("pivot is nonzero");
            m.scale_row(r, inv);
            for i in 0..m.rows {
                if i != r {
                    let f = m.get(i, c);
                    if f != 0 {
                        m.add_scaled_row(i, r, m.field.neg(f));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    /// A matrix whose rows form a basis of the right kernel {v : M v = 0}.
    /// Zero kernel gives a 0 x cols matrix.
    pub fn kernel_basis(&self) -> FpMatrix {
        let r = self.rref();
        let pivot_set: Vec<bool> = {
            let mut s = vec![false; self.cols];
            for &c in &r.pivots {
                s[c] = true;
            }
            s
        };
        let free: Vec<usize> = (0..self.cols).filter(|&c| !pivot_set[c]).collect();
        let mut out = Self::zeros(self.field, free.len(), self.cols);
        for (bi, &f) in free.iter().enumerate() {
            out.set(bi, f, 1);
            for (ri, &pc) in r.pivots.iter().enumerate() {
                let v = r.matrix.get(ri, f);
                if v != 0 {
                    out.set(bi, pc, self.field.neg(v));
                }
            }
        }
        out
    }

    /// Whether v lies in the row space of this matrix.
    pub fn in_rowspace(&self, v: &FpVector) -> Result<bool> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "vector length {} does not match {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok(self.rref().reduces_to_zero(v))
    }

    /// Smith normal form over a field: invertible U, V with U*D*V equal to
    /// this matrix and D = diag(1,...,1,0,...,0) carrying rank many ones.
    /// The inverses fall out of the elimination and are kept.
    pub fn smith_normal_form(&self) -> SnfDecomposition {
        let f = self.field;
        let (m, n) = (self.rows, self.cols);
        let mut w = self.clone();
        let mut u = Self::identity(f, m);
        let mut u_inv = Self::identity(f, m);
        let mut v = Self::identity(f, n);
        let mut v_inv = Self::identity(f, n);
        let steps = m.min(n);
        for t in 0..steps {
            // locate a pivot in the trailing block
            let pivot = (t..m)
                .flat_map(|i| (t..n).map(move |j| (i, j)))
                .find(|&(i, j)| w.get(i, j) != 0);
            let Some((pi, pj)) = pivot else { break };
            // row swap: W <- S W, U <- U S, U_inv <- S U_inv
            w.swap_rows(t, pi);
            u.swap_cols(t, pi);
            u_inv.swap_rows(t, pi);
            // col swap: W <- W C, V <- C V (swap self-inverse), V_inv <- V_inv C
            w.swap_cols(t, pj);
            v.swap_rows(t, pj);
            v_inv.swap_cols(t, pj);
            // scale pivot to 1: W <- S W with S = scale(t, inv); U <- U S^-1
            let val = w.get(t, t);
            if val != 1 {
                let inv = f.inv(val).expect("pivot nonzero");
                w.scale_row(t, inv);
                u.scale_col(t, val);
                u_inv.scale_row(t, inv);
            }
            // clear column t: row ops
            for i in 0..m {
                if i != t {
                    let c = w.get(i, t);
                    if c != 0 {
                        // W <- E W with E = AddRow(i <- i - c*t)
                        w.add_scaled_row(i, t, f.neg(c));
                        // U <- U E^-1: add c * (col i) to col t
                        u.add_scaled_col(t, i, c);
                        u_inv.add_scaled_row(i, t, f.neg(c));
                    }
                }
            }
            // clear row t: col ops
            for j in 0..n {
                if j != t {
                    let c = w.get(t, j);
                    if c != 0 {
                        // W <- W C with C = AddCol(j <- j - c*t)
                        w.add_scaled_col(j, t, f.neg(c));
                        // V <- C^-1 V: add c * (row j) to row t
                        v.add_scaled_row(t, j, c);
                        v_inv.add_scaled_col(j, t, f.neg(c));
                    }
                }
            }
        }
        SnfDecomposition { u, d: w, v, u_inv, v_inv }
    }

    /// Serializes as `rows cols p` then one line per row.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.rows, self.cols, self.field.p());
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::InvalidInput("empty matrix text".into()))?;
        let parts: Vec<&str> = header.split_whitespace().collect();
        let [rows, cols, p] = parts.as_slice() else {
            return Err(Error::InvalidInput("matrix header must be 'rows cols p'".into()));
        };
        let rows: usize = rows.parse().map_err(|_| Error::InvalidInput("bad row count".into()))?;
        let cols: usize = cols.parse().map_err(|_| Error::InvalidInput("bad column count".into()))?;
        let p: u64 = p.parse().map_err(|_| Error::InvalidInput("bad modulus".into()))?;
        if rows.max(cols) > 1 << 16 || rows.saturating_mul(cols) > 1 << 26 {
            return Err(Error::InvalidInput(format!("matrix size {rows}x{cols} out of range")));
        }
        let field = PrimeField::new(p)?;
        let mut m = Self::zeros(field, rows, cols);
        for i in 0..rows {
            let line = lines
                .next()
                .ok_or_else(|| Error::InvalidInput(format!("missing matrix row {i}")))?;
            let entries: Vec<i64> = line
                .split_whitespace()
                .map(|t| t.parse::<i64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::InvalidInput(format!("bad entry in row {i}")))?;
            if entries.len() != cols {
                return Err(Error::InvalidInput(format!(
                    "row {i} has {} entries, expected {cols}",
                    entries.len()
                )));
            }
            for (j, &e) in entries.iter().enumerate() {
                m.set(i, j, field.reduce(e));
            }
        }
        Ok(m)
    }
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FpMatrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Reduced row echelon form together with its pivot columns.
pub struct Rref {
    matrix: FpMatrix,
    pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn matrix(&self) -> &FpMatrix {
        &self.matrix
    }

    /// Subtracts pivot rows to cancel pivot coordinates of v in place.
    pub fn reduce(&self, v: &mut FpVector) {
        for (ri, &pc) in self.pivots.iter().enumerate() {
            let c = v.get(pc);
            if c != 0 {
                v.add_assign_row(&self.matrix, ri, self.matrix.field.neg(c));
            }
        }
    }

    pub fn reduces_to_zero(&self, v: &FpVector) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w);
        w.is_zero()
    }
}

/// U * D * V equals the decomposed matrix; U, V invertible; D has exactly
/// rank ones on the diagonal. The inverses of U and V come along for free.
pub struct SnfDecomposition {
    pub u: FpMatrix,
    pub d: FpMatrix,
    pub v: FpMatrix,
    pub u_inv: FpMatrix,
    pub v_inv: FpMatrix,
}

impl SnfDecomposition {
    pub fn rank(&self) -> usize {
        let n = self.d.rows().min(self.d.cols());
        (0..n).take_while(|&i| self.d.get(i, i) != 0).count()
    }
}

/// The pair (E, F) with E^2 = E, F^2 = F, E*A = A*F = A and
/// rank E = rank F = rank A, built from the Smith normal form
/// as E = U D U^-1, F = V^-1 D V. The pair is not unique; only these
/// properties are guaranteed.
pub fn idempotent_pair(a: &FpMatrix) -> (FpMatrix, FpMatrix) {
    assert_eq!(a.rows(), a.cols(), "idempotent pair needs a square matrix");
    let snf = a.smith_normal_form();
    let e = snf.u.matmul(&snf.d).matmul(&snf.u_inv);
    let f = snf.v_inv.matmul(&snf.d).matmul(&snf.v);
    (e, f)
}

#[derive(Clone, PartialEq, Eq)]
enum VStore {
    Bits(Vec<u64>),
    Wide(Vec<u16>),
}

/// A dense vector over F_p, stored to match the matrix layout.
#[derive(Clone, PartialEq, Eq)]
pub struct FpVector {
    field: PrimeField,
    len: usize,
    store: VStore,
}

impl FpVector {
    pub fn zeros(field: PrimeField, len: usize) -> Self {
        let store = if field.is_binary() {
            VStore::Bits(vec![0; words_per_row(len)])
        } else {
            VStore::Wide(vec![0; len])
        };
        FpVector { field, len, store }
    }

    pub fn from_entries(field: PrimeField, entries: &[u16]) -> Self {
        let mut v = Self::zeros(field, entries.len());
        for (i, &e) in entries.iter().enumerate() {
            v.set(i, field.reduce(e as i64));
        }
        v
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> u16 {
        debug_assert!(i < self.len);
        match &self.store {
            VStore::Bits(w) => (w[i / 64] >> (i % 64) & 1) as u16,
            VStore::Wide(v) => v[i],
        }
    }

    #[inline]
    pub fn set(&mut self, i: usize, val: u16) {
        debug_assert!(i < self.len);
        match &mut self.store {
            VStore::Bits(w) => {
                w[i / 64] = (w[i / 64] & !(1 << (i % 64))) | ((val as u64) << (i % 64));
            }
            VStore::Wide(v) => v[i] = val,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.store {
            VStore::Bits(w) => w.iter().all(|&x| x == 0),
            VStore::Wide(v) => v.iter().all(|&x| x == 0),
        }
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        match &self.store {
            VStore::Bits(w) => w.iter().map(|x| x.count_ones() as usize).sum(),
            VStore::Wide(v) => v.iter().filter(|&&x| x != 0).count(),
        }
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| self.get(i) != 0).collect()
    }

    /// self += c * (row i of m). The hot step of the kernel enumeration.
    pub fn add_assign_row(&mut self, m: &FpMatrix, row: usize, c: u16) {
        debug_assert_eq!(self.len, m.cols());
        debug_assert_eq!(self.field, m.field());
        if c == 0 {
            return;
        }
        match (&mut self.store, &m.store) {
            (VStore::Bits(dst), Store::Bits { wpr, words }) => {
                let src = &words[row * wpr..(row + 1) * wpr];
                for (d, s) in dst.iter_mut().zip(src) {
                    *d ^= s;
                }
            }
            (VStore::Wide(dst), Store::Wide(src)) => {
                let base = row * m.cols();
                for (j, d) in dst.iter_mut().enumerate() {
                    let s = src[base + j];
                    if s != 0 {
                        *d = self.field.add(*d, self.field.mul(c, s));
                    }
                }
            }
            _ => unreachable!("stores agree for equal fields"),
        }
    }

    pub fn add_assign_scaled(&mut self, other: &FpVector, c: u16) {
        debug_assert_eq!(self.len, other.len);
        for i in 0..self.len {
            let s = other.get(i);
            if s != 0 {
                let d = self.get(i);
                self.set(i, self.field.add(d, self.field.mul(c, s)));
            }
        }
    }

    pub fn permuted(&self, perm: &[usize]) -> FpVector {
        assert_eq!(perm.len(), self.len);
        let mut out = Self::zeros(self.field, self.len);
        for (j, &src) in perm.iter().enumerate() {
            let v = self.get(src);
            if v != 0 {
                out.set(j, v);
            }
        }
        out
    }

    /// Entrywise lexicographic comparison; used to pick a canonical witness
    /// among minimum-weight ties.
    pub fn lex_cmp(&self, other: &FpVector) -> Ordering {
        debug_assert_eq!(self.len, other.len);
        for i in 0..self.len {
            match self.get(i).cmp(&other.get(i)) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl fmt::Debug for FpVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<String> = (0..self.len).map(|i| self.get(i).to_string()).collect();
        write!(f, "[{}]", entries.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn f2() -> PrimeField {
        PrimeField::binary()
    }

    fn f3() -> PrimeField {
        PrimeField::new(3).unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(FpMatrix::identity(f2(), 7).rank(), 7);
        let m = FpMatrix::from_rows(f2(), &[vec![1, 1], vec![1, 1]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_of_equal_rows_over_f3() {
        let m = FpMatrix::from_rows(f3(), &[vec![1, 1], vec![1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.rows(), 1);
        // spans {(t, -t)}: the basis row must be a multiple of (1, 2)
        let v = k.row_vector(0);
        assert_eq!(v.weight(), 2);
        assert!(m.mul_vector(&v).is_zero());
        let mut scaled = FpVector::zeros(f3(), 2);
        scaled.add_assign_scaled(&v, f3().inv(v.get(0)).unwrap());
        assert_eq!((scaled.get(0), scaled.get(1)), (1, 2));
    }

    #[test]
    fn kernel_rows_annihilate() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for p in [2u64, 3, 5] {
            let f = PrimeField::new(p).unwrap();
            for _ in 0..50 {
                let m = FpMatrix::random(f, 5, 9, &mut rng);
                let k = m.kernel_basis();
                assert_eq!(k.rows() + m.rank(), m.cols());
                for i in 0..k.rows() {
                    assert!(m.mul_vector(&k.row_vector(i)).is_zero());
                }
                assert_eq!(k.rank(), k.rows(), "kernel rows independent");
            }
        }
    }

    #[test]
    fn rank_equals_transpose_rank() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for p in [2u64, 3, 5] {
            let f = PrimeField::new(p).unwrap();
            for _ in 0..40 {
                let m = FpMatrix::random(f, 6, 8, &mut rng);
                assert_eq!(m.rank(), m.transpose().rank());
            }
        }
    }

    #[test]
    fn snf_reconstructs_and_is_invertible() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for p in [2u64, 3, 5] {
            let f = PrimeField::new(p).unwrap();
            for _ in 0..60 {
                let m = FpMatrix::random(f, 5, 7, &mut rng);
                let snf = m.smith_normal_form();
                assert_eq!(snf.u.matmul(&snf.d).matmul(&snf.v), m, "U D V = M");
                assert_eq!(snf.u.matmul(&snf.u_inv), FpMatrix::identity(f, 5));
                assert_eq!(snf.v.matmul(&snf.v_inv), FpMatrix::identity(f, 7));
                assert_eq!(snf.rank(), m.rank());
                // D is 0/1 diagonal with ones first
                for i in 0..snf.d.rows() {
                    for j in 0..snf.d.cols() {
                        let e = snf.d.get(i, j);
                        assert!(if i == j { e <= 1 } else { e == 0 });
                    }
                }
            }
        }
    }

    #[test]
    fn snf_fixed_points() {
        let id = FpMatrix::identity(f2(), 3);
        let snf = id.smith_normal_form();
        assert_eq!(snf.u.matmul(&snf.d).matmul(&snf.v), id);
        let z = FpMatrix::zeros(f2(), 2, 2);
        assert!(z.smith_normal_form().d.is_zero());
        let ones = FpMatrix::from_rows(f2(), &[vec![1, 1], vec![1, 1]]);
        let snf = ones.smith_normal_form();
        assert_eq!(snf.rank(), 1);
        assert_eq!(snf.d.get(0, 0), 1);
        assert_eq!(snf.d.get(1, 1), 0);
        assert_eq!(snf.u.matmul(&snf.d).matmul(&snf.v), ones);
    }

    #[test]
    fn idempotent_pair_postconditions() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for p in [2u64, 3, 5] {
            let f = PrimeField::new(p).unwrap();
            for _ in 0..60 {
                let a = FpMatrix::random(f, 6, 6, &mut rng);
                let (e, fa) = idempotent_pair(&a);
                assert_eq!(e.matmul(&e), e, "E^2 = E");
                assert_eq!(fa.matmul(&fa), fa, "F^2 = F");
                assert_eq!(e.matmul(&a), a, "E A = A");
                assert_eq!(a.matmul(&fa), a, "A F = A");
                assert_eq!(e.rank(), a.rank());
                assert_eq!(fa.rank(), a.rank());
            }
        }
    }

    #[test]
    fn idempotent_pair_trivial_cases() {
        let id = FpMatrix::identity(f3(), 4);
        let (e, f) = idempotent_pair(&id);
        assert_eq!(e, id);
        assert_eq!(f, id);
        let z = FpMatrix::zeros(f3(), 3, 3);
        let (e, f) = idempotent_pair(&z);
        assert!(e.is_zero() && f.is_zero());
    }

    #[test]
    fn rowspace_membership() {
        let m = FpMatrix::from_rows(f2(), &[vec![1, 1, 1, 1]]);
        let zero = FpVector::zeros(f2(), 4);
        assert!(m.in_rowspace(&zero).unwrap());
        let v = FpVector::from_entries(f2(), &[1, 1, 0, 0]);
        assert!(!m.in_rowspace(&v).unwrap());
        let id = FpMatrix::identity(f2(), 4);
        assert!(id.in_rowspace(&v).unwrap());
        let short = FpVector::zeros(f2(), 3);
        assert!(m.in_rowspace(&short).is_err());
    }

    #[test]
    fn block_assembly() {
        let a = FpMatrix::identity(f2(), 2);
        let b = FpMatrix::from_rows(f2(), &[vec![1, 1, 1], vec![0, 1, 0]]);
        let h = FpMatrix::hstack(&[&a, &b]);
        assert_eq!((h.rows(), h.cols()), (2, 5));
        assert_eq!(h.get(0, 2), 1);
        let v = FpMatrix::vstack(&[&a, &a]);
        assert_eq!((v.rows(), v.cols()), (4, 2));
        assert_eq!(FpMatrix::identity(f3(), 3).negated().get(1, 1), 2);
        // negation over F_2 is the identity map
        assert_eq!(b.negated(), b);
        assert_eq!(b.transpose().transpose(), b);
    }

    #[test]
    fn matmul_agrees_across_stores() {
        // same product computed over F_2 (bit-packed) and checked entrywise
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = FpMatrix::random(f2(), 5, 70, &mut rng);
        let b = FpMatrix::random(f2(), 70, 6, &mut rng);
        let c = a.matmul(&b);
        for i in 0..5 {
            for j in 0..6 {
                let mut acc = 0u32;
                for k in 0..70 {
                    acc ^= (a.get(i, k) & b.get(k, j)) as u32;
                }
                assert_eq!(c.get(i, j) as u32, acc);
            }
        }
    }

    #[test]
    fn kron_shape_and_values() {
        let a = FpMatrix::from_rows(f2(), &[vec![1, 0], vec![1, 1]]);
        let b = FpMatrix::identity(f2(), 3);
        let k = a.kron(&b);
        assert_eq!((k.rows(), k.cols()), (6, 6));
        assert_eq!(k.get(0, 0), 1);
        assert_eq!(k.get(3, 0), 1);
        assert_eq!(k.get(0, 3), 0);
    }

    #[test]
    fn text_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for p in [2u64, 5] {
            let f = PrimeField::new(p).unwrap();
            let m = FpMatrix::random(f, 3, 4, &mut rng);
            let again = FpMatrix::from_text(&m.to_text()).unwrap();
            assert_eq!(m, again);
        }
        assert!(FpMatrix::from_text("2 2\n0 0\n0 0\n").is_err());
    }

    #[test]
    fn vector_ops_over_wide_columns() {
        // exercise multi-word bit rows
        let mut v = FpVector::zeros(f2(), 130);
        v.set(0, 1);
        v.set(129, 1);
        assert_eq!(v.weight(), 2);
        assert_eq!(v.support(), vec![0, 129]);
        let m = {
            let mut m = FpMatrix::zeros(f2(), 1, 130);
            m.set(0, 129, 1);
            m
        };
        v.add_assign_row(&m, 0, 1);
        assert_eq!(v.weight(), 1);
    }
}
