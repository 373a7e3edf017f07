//! Arbitrary-precision integer matrices, Smith normal form with full
//! transforms, Hermite-style row reduction and integer kernels.
//!
//! Everything here is exact; intermediate entries are `BigInt` because SNF
//! pivoting can blow past any fixed width even on small inputs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        Ok(IntMatrix { rows, cols, entries })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<BigInt>], cols: usize) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row has {} entries, expected {}",
                    r.len(),
                    cols
                )));
            }
            entries.extend_from_slice(r);
        }
        IntMatrix::new(rows.len(), cols, entries)
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Result<Self> {
        IntMatrix::new(rows, cols, entries.iter().map(|&e| BigInt::from(e)).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> Vec<BigInt> {
        self.entries[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn row_slice(&self, r: usize) -> &[BigInt] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn all_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Stack `self` on top of `other` (same column count).
    pub fn vstack(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "vstack {} vs {} columns",
                self.cols, other.cols
            )));
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        IntMatrix::new(self.rows + other.rows, self.cols, entries)
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "mul {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "det of {}x{}",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                let swap = (k + 1..n).find(|&i| !m.get(i, k).is_zero());
                match swap {
                    Some(i) => {
                        m.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (m.get(i, j) * m.get(k, k) - m.get(i, k) * m.get(k, j)) / &prev;
                    m.set(i, j, v);
                }
                m.set(i, k, BigInt::zero());
            }
            prev = m.get(k, k).clone();
        }
        Ok(sign * m.get(n - 1, n - 1))
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    /// row_i += q * row_j
    fn add_row(&mut self, i: usize, j: usize, q: &BigInt) {
        for c in 0..self.cols {
            let v = self.get(i, c) + q * self.get(j, c);
            self.set(i, c, v);
        }
    }

    /// col_i += q * col_j
    fn add_col(&mut self, i: usize, j: usize, q: &BigInt) {
        for r in 0..self.rows {
            let v = self.get(r, i) + q * self.get(r, j);
            self.set(r, i, v);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            let v = -self.get(i, c);
            self.set(i, c, v);
        }
    }

    fn negate_col(&mut self, c: usize) {
        for r in 0..self.rows {
            let v = -self.get(r, c);
            self.set(r, c, v);
        }
    }
}

/// Smith normal form `A = U * S * V` with unimodular `U`, `V` and the
/// inverse transforms kept alongside (`S = U_inv * A * V_inv`).
#[derive(Debug, Clone)]
pub struct Snf {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
}

impl Snf {
    /// Diagonal entries of `S`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.s.rows().min(self.s.cols());
        (0..n).map(|i| self.s.get(i, i).clone()).collect()
    }

    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

struct SnfState {
    s: IntMatrix,
    u: IntMatrix,
    v: IntMatrix,
    u_inv: IntMatrix,
    v_inv: IntMatrix,
}

impl SnfState {
    // Row ops act as S <- E*S; U absorbs E^{-1} on the right, U_inv absorbs E
    // on the left, keeping A = U*S*V at all times.
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.s.swap_rows(i, j);
        self.u.swap_cols(i, j);
        self.u_inv.swap_rows(i, j);
    }

    fn add_row(&mut self, i: usize, j: usize, q: &BigInt) {
        self.s.add_row(i, j, q);
        let neg = -q;
        self.u.add_col(j, i, &neg);
        self.u_inv.add_row(i, j, q);
    }

    fn negate_row(&mut self, i: usize) {
        self.s.negate_row(i);
        self.u.negate_col(i);
        self.u_inv.negate_row(i);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.s.swap_cols(i, j);
        self.v.swap_rows(i, j);
        self.v_inv.swap_cols(i, j);
    }

    /// col_j += q * col_i
    fn add_col(&mut self, j: usize, i: usize, q: &BigInt) {
        self.s.add_col(j, i, q);
        let neg = -q;
        self.v.add_row(i, j, &neg);
        self.v_inv.add_col(j, i, q);
    }

}

/// Quotient rounded to the nearest integer, so the remainder satisfies
/// `|rem| <= |b| / 2`.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, rem) = a.div_rem(b);
    if &rem.abs() * 2 > b.abs() {
        if rem.is_negative() == b.is_negative() {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Compute the Smith normal form of `a`.
pub fn smith_normal_form(a: &IntMatrix) -> Snf {
    let (r, c) = (a.rows(), a.cols());
    let mut st = SnfState {
        s: a.clone(),
        u: IntMatrix::identity(r),
        v: IntMatrix::identity(c),
        u_inv: IntMatrix::identity(r),
        v_inv: IntMatrix::identity(c),
    };
    let n = r.min(c);
    let mut t = 0;
    'outer: while t < n {
        // Clear row t and column t of the trailing block, re-selecting the
        // absolutely smallest nonzero entry as pivot on every pass and
        // reducing with rounded quotients. The minimum strictly decreases
        // whenever a remainder survives, and rounded division keeps the
        // off-pivot entries from blowing up.
        loop {
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..r {
                for j in t..c {
                    if !st.s.get(i, j).is_zero()
                        && pivot
                            .map(|(pi, pj)| st.s.get(i, j).abs() < st.s.get(pi, pj).abs())
                            .unwrap_or(true)
                    {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break 'outer };
            st.swap_rows(t, pi);
            st.swap_cols(t, pj);
            let mut clean = true;
            for i in t + 1..r {
                if !st.s.get(i, t).is_zero() {
                    let q = -div_round(st.s.get(i, t), st.s.get(t, t));
                    st.add_row(i, t, &q);
                    if !st.s.get(i, t).is_zero() {
                        clean = false;
                    }
                }
            }
            for j in t + 1..c {
                if !st.s.get(t, j).is_zero() {
                    let q = -div_round(st.s.get(t, j), st.s.get(t, t));
                    st.add_col(j, t, &q);
                    if !st.s.get(t, j).is_zero() {
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
        }
        // Enforce divisibility into the trailing block.
        let mut redo = false;
        'scan: for i in t + 1..r {
            for j in t + 1..c {
                if !(st.s.get(i, j) % st.s.get(t, t)).is_zero() {
                    let one = BigInt::one();
                    st.add_col(t, j, &one);
                    redo = true;
                    break 'scan;
                }
            }
        }
        if redo {
            continue;
        }
        if st.s.get(t, t).is_negative() {
            st.negate_row(t);
        }
        t += 1;
    }
    Snf {
        u: st.u,
        s: st.s,
        v: st.v,
        u_inv: st.u_inv,
        v_inv: st.v_inv,
    }
}

/// Row Hermite normal form: echelon rows with positive pivots in strictly
/// increasing pivot columns, entries above each pivot reduced into
/// `[0, pivot)`, zero rows dropped. Unique for the row lattice, so equal
/// lattices give identical matrices.
pub fn hermite_normal_form(a: &IntMatrix) -> IntMatrix {
    let mut m = a.clone();
    let (rows, cols) = (m.rows(), m.cols());
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        // gcd-reduce all entries of this column at rows >= r into row r
        loop {
            let mut best: Option<usize> = None;
            for i in r..rows {
                if !m.get(i, col).is_zero()
                    && best
                        .map(|b| m.get(i, col).abs() < m.get(b, col).abs())
                        .unwrap_or(true)
                {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            m.swap_rows(r, b);
            let mut done = true;
            for i in r + 1..rows {
                if !m.get(i, col).is_zero() {
                    let q = -(m.get(i, col) / m.get(r, col));
                    m.add_row(i, r, &q);
                    if !m.get(i, col).is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if m.get(r, col).is_zero() {
            continue;
        }
        if m.get(r, col).is_negative() {
            m.negate_row(r);
        }
        let pivot = m.get(r, col).clone();
        for i in 0..r {
            let q = -m.get(i, col).div_floor(&pivot);
            if !q.is_zero() {
                m.add_row(i, r, &q);
            }
        }
        r += 1;
    }
    IntMatrix::from_rows(&(0..r).map(|i| m.row(i)).collect::<Vec<_>>(), cols).unwrap()
}

/// Does the row lattice of `hnf` (already in Hermite normal form) contain `v`?
pub fn hnf_contains(hnf: &IntMatrix, v: &[BigInt]) -> bool {
    debug_assert_eq!(hnf.cols(), v.len());
    let mut v = v.to_vec();
    let mut row = 0;
    for col in 0..hnf.cols() {
        let pivot_here = row < hnf.rows() && !hnf.get(row, col).is_zero();
        if pivot_here {
            let p = hnf.get(row, col);
            let (q, rem) = v[col].div_rem(p);
            if !rem.is_zero() {
                return false;
            }
            if !q.is_zero() {
                for c in col..hnf.cols() {
                    let delta = &q * hnf.get(row, c);
                    v[c] -= delta;
                }
            }
            row += 1;
        } else if !v[col].is_zero() {
            return false;
        }
    }
    true
}

/// Basis of the left kernel `{ x : x * A = 0 }`, as rows.
pub fn left_kernel(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(a);
    let diag = snf.diagonal();
    let mut basis = Vec::new();
    for i in 0..a.rows() {
        let zero_diag = i >= diag.len() || diag[i].is_zero();
        if zero_diag {
            basis.push(snf.u_inv.row(i));
        }
    }
    basis
}
