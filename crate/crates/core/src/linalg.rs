//! Exact linear algebra over Q(q).
//!
//! Rank is computed by fraction-free (Bareiss) elimination over Z[q] after
//! clearing denominators row by row. Evaluating at `q = a` modulo a prime is
//! a ring map, so a rank found there is a lower bound for the true rank; when
//! that bound is already maximal the exact elimination is skipped.

use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::scalar::{inv_mod, IntPoly, RationalFunction};

const PRIME: u64 = (1 << 61) - 1;
const POINTS: [u64; 3] = [1_000_003, 918_273_645, 31_415_926_535];

/// Dense row-major matrix over Q(q).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<RationalFunction>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![RationalFunction::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<RationalFunction>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// One row per combination, one column per basis element in the joint support.
    pub fn from_combinations<K: Ord + Clone>(items: &[LinComb<K>]) -> (Matrix, Vec<K>) {
        let support = crate::lincomb::support(items);
        let mut m = Matrix::zeros(items.len(), support.len());
        for (i, e) in items.iter().enumerate() {
            for (k, c) in e {
                let j = support.binary_search(k).unwrap();
                m.set(i, j, c.clone());
            }
        }
        (m, support)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RationalFunction {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RationalFunction) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Rows scaled to have coefficients in Z[q].
    fn integral_rows(&self) -> Vec<Vec<IntPoly>> {
        (0..self.rows).map(|i| integral_row(&self.data[i * self.cols..(i + 1) * self.cols])).collect()
    }
}

/// Multiply a row by a common denominator so every entry lies in Z[q].
fn integral_row(row: &[RationalFunction]) -> Vec<IntPoly> {
    let mut den = IntPoly::one();
    let mut low = 0i64;
    for c in row.iter().filter(|c| !c.is_zero()) {
        let g = den.gcd(c.denominator());
        den = den.mul(&c.denominator().div_exact(&g).unwrap());
        low = low.min(c.laurent_shift());
    }
    row.iter()
        .map(|c| {
            if c.is_zero() {
                return IntPoly::zero();
            }
            let scaled = den.div_exact(c.denominator()).unwrap().mul(c.numerator());
            scaled.shift_up((c.laurent_shift() - low) as usize)
        })
        .collect()
}

/// Rank of the matrix evaluated at `q = x` modulo a large prime, or `None`
/// if some entry has a pole there.
pub fn rank_at_point(m: &Matrix, x: u64) -> Option<usize> {
    let mut a: Vec<Vec<u64>> = Vec::with_capacity(m.rows);
    for i in 0..m.rows {
        let mut row = Vec::with_capacity(m.cols);
        for j in 0..m.cols {
            row.push(m.get(i, j).eval_mod(x, PRIME)?);
        }
        a.push(row);
    }
    Some(modular_pivots(&mut a).len())
}

/// Gaussian elimination mod `PRIME`; returns the pivot columns in order.
#[allow(clippy::needless_range_loop)]
fn modular_pivots(a: &mut [Vec<u64>]) -> Vec<usize> {
    let p = PRIME;
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, piv);
        let inv = inv_mod(a[r][c], p).unwrap();
        for i in r + 1..rows {
            if a[i][c] == 0 {
                continue;
            }
            let f = mulm(a[i][c], inv);
            for j in c..cols {
                let sub = mulm(f, a[r][j]);
                a[i][j] = (a[i][j] + p - sub) % p;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn mulm(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

/// Best modular lower bound on the rank over a few evaluation points.
pub fn rank_lower_bound(m: &Matrix) -> usize {
    POINTS.iter().filter_map(|&x| rank_at_point(m, x)).max().unwrap_or(0)
}

/// Exact rank by fraction-free elimination over Z[q].
pub fn rank_exact(m: &Matrix) -> usize {
    let mut a = m.integral_rows();
    bareiss(&mut a, m.cols).0
}

/// Bareiss elimination in place with full pivoting over the first `cols`
/// columns; any further columns are carried along. Returns the rank and the
/// column order: row `i < rank` has its pivot in column `order[i]`.
fn bareiss(a: &mut [Vec<IntPoly>], cols: usize) -> (usize, Vec<usize>) {
    let rows = a.len();
    let width = a.first().map_or(cols, |r| r.len());
    let mut prev = IntPoly::one();
    let mut rank = 0;
    let mut order: Vec<usize> = (0..cols).collect();
    while rank < rows && rank < cols {
        let k = rank;
        // Smallest nonzero entry in the remaining block.
        let mut best: Option<(usize, usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(k) {
            for (jj, &j) in order.iter().enumerate().skip(k) {
                let e = &row[j];
                if !e.is_zero() && best.is_none_or(|b| e.coeffs().len() < b.2) {
                    best = Some((i, jj, e.coeffs().len()));
                }
            }
        }
        let Some((pi, pj, _)) = best else { break };
        a.swap(k, pi);
        order.swap(k, pj);
        let pc = order[k];
        let pivot = a[k][pc].clone();
        let rest: Vec<usize> = order[k + 1..].iter().copied().chain(cols..width).collect();
        for i in k + 1..rows {
            let f = std::mem::take(&mut a[i][pc]);
            for &j in &rest {
                let v = pivot.mul(&a[i][j]).sub(&f.mul(&a[k][j]));
                a[i][j] = v.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = pivot;
        rank += 1;
    }
    (rank, order)
}

/// Rank over Q(q).
pub fn rank(m: &Matrix) -> usize {
    let lb = rank_lower_bound(m);
    if lb == m.rows.min(m.cols) {
        return lb;
    }
    rank_exact(m)
}

pub fn rank_of_combinations<K: Ord + Clone>(items: &[LinComb<K>]) -> usize {
    rank(&Matrix::from_combinations(items).0)
}

/// Coefficients `c` with `sum c_i * basis_i = target`. The basis must be
/// linearly independent; a target outside its span is an error.
pub fn solve_combination<K: Ord + Clone>(basis: &[LinComb<K>], target: &LinComb<K>) -> Result<Vec<RationalFunction>> {
    let n = basis.len();
    let mut all = basis.to_vec();
    all.push(target.clone());
    let (m, support) = Matrix::from_combinations(&all);
    if support.is_empty() || n == 0 {
        return if target.is_zero() {
            Ok(vec![RationalFunction::zero(); n])
        } else {
            Err(Error::Singular("target is nonzero but the basis is empty".into()))
        };
    }
    // Equations are indexed by support elements: row j reads sum_i c_i B[i][j] = t_j.
    let system = m.transpose();
    let rows = pick_equations(&system, n);
    let mut a: Vec<Vec<IntPoly>> =
        rows.iter().map(|&r| integral_row(&system.data[r * system.cols..(r + 1) * system.cols])).collect();
    let (rank, order) = bareiss(&mut a, n);
    if rank < n {
        return Err(Error::Singular(format!("basis of {n} elements has rank {rank}")));
    }
    let to_rf = |p: &IntPoly| RationalFunction::from_laurent(p.clone(), 0);
    let mut c = vec![RationalFunction::zero(); n];
    for i in (0..n).rev() {
        let mut acc = to_rf(&a[i][n]);
        for &j in &order[i + 1..] {
            if !a[i][j].is_zero() {
                acc -= &(&to_rf(&a[i][j]) * &c[j]);
            }
        }
        c[order[i]] = acc.checked_div(&to_rf(&a[i][order[i]]))?;
    }
    let mut check = LinComb::zero();
    for (b, ci) in basis.iter().zip(&c) {
        check.add_scaled(b, ci);
    }
    if &check != target {
        return Err(Error::Singular("target is not in the span of the basis".into()));
    }
    Ok(c)
}

/// Choose `n` equations whose coefficient block is nonsingular, using a
/// modular elimination on the transposed system; falls back to all rows.
fn pick_equations(system: &Matrix, n: usize) -> Vec<usize> {
    for &x in &POINTS {
        let mut a: Vec<Vec<u64>> = Vec::with_capacity(n);
        let mut ok = true;
        // Columns of the coefficient block are equations here.
        'outer: for i in 0..n {
            let mut row = Vec::with_capacity(system.rows);
            for r in 0..system.rows {
                match system.get(r, i).eval_mod(x, PRIME) {
                    Some(v) => row.push(v),
                    None => {
                        ok = false;
                        break 'outer;
                    }
                }
            }
            a.push(row);
        }
        if !ok {
            continue;
        }
        let piv = modular_pivots(&mut a);
        if piv.len() == n {
            return piv;
        }
    }
    (0..system.rows).collect()
}

/// Determinant of a square matrix, by exact elimination in Q(q).
#[allow(clippy::needless_range_loop)]
pub fn determinant(m: &Matrix) -> RationalFunction {
    assert_eq!(m.rows, m.cols, "determinant of a non-square matrix");
    let n = m.rows;
    let mut a: Vec<Vec<RationalFunction>> = (0..n).map(|i| m.data[i * n..(i + 1) * n].to_vec()).collect();
    let mut det = RationalFunction::one();
    for k in 0..n {
        let Some(p) = (k..n).filter(|&i| !a[i][k].is_zero()).min_by_key(|&i| a[i][k].complexity()) else {
            return RationalFunction::zero();
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        let piv = a[k][k].clone();
        det *= &piv;
        let inv = piv.inv().unwrap();
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] * &inv;
            for j in k..n {
                let v = &a[i][j] - &(&f * &a[k][j]);
                a[i][j] = v;
            }
        }
    }
    det
}
