//! Smith normal form over the integers with exact arithmetic.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

/// Dense integer matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = IntMatrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged matrix");
            for (j, &x) in r.iter().enumerate() {
                m.set(i, j, BigInt::from(x));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigInt) {
        self.data[i * self.cols + j] = x;
    }

    pub fn add_to(&mut self, i: usize, j: usize, x: i64) {
        self.data[i * self.cols + j] += x;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.data[i * self.cols..(i + 1) * self.cols].to_vec()).collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] += q * row[src]
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let x = &self.data[src * self.cols + j] * q;
            self.data[dst * self.cols + j] += x;
        }
    }

    /// col[dst] += q * col[src]
    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let x = &self.data[i * self.cols + src] * q;
            self.data[i * self.cols + dst] += x;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let x = std::mem::take(&mut self.data[i * self.cols + j]);
            self.data[i * self.cols + j] = -x;
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_rows().iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>())).finish()
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> =
            self.to_rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
        rows.serialize(s)
    }
}

/// U·M·V = D with U, V unimodular and D diagonal with d1 | d2 | ….
#[derive(Clone, Debug)]
pub struct Snf {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
}

impl Snf {
    /// Nonzero diagonal entries.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols)).map(|i| self.d.get(i, i).clone()).take_while(|x| !x.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

fn pivot(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows {
        for j in t..a.cols {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.abs() < a.get(bi, bj).abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Pivot on the least absolute entry (ties row-major), clear its row and
/// column by Euclidean steps, and enforce divisibility by folding an
/// offending row into the pivot row.
pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let mut a = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let mut v = IntMatrix::identity(m.cols);
    let mut v_inv = IntMatrix::identity(m.cols);
    let mut t = 0;
    while t < a.rows.min(a.cols) {
        let Some((pi, pj)) = pivot(&a, t) else { break };
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);
        v_inv.swap_rows(t, pj);
        let p = a.get(t, t).clone();
        let mut clean = true;
        for i in t + 1..a.rows {
            let q = a.get(i, t).div_floor(&p);
            let nq = -q;
            a.add_row(i, t, &nq);
            u.add_row(i, t, &nq);
            clean &= a.get(i, t).is_zero();
        }
        for j in t + 1..a.cols {
            let q = a.get(t, j).div_floor(&p);
            let nq = -&q;
            a.add_col(j, t, &nq);
            v.add_col(j, t, &nq);
            v_inv.add_row(t, j, &q);
            clean &= a.get(t, j).is_zero();
        }
        if !clean {
            continue;
        }
        let bad = (t + 1..a.rows).find(|&i| (t + 1..a.cols).any(|j| !a.get(i, j).is_multiple_of(&p)));
        if let Some(i) = bad {
            let one = BigInt::one();
            a.add_row(t, i, &one);
            u.add_row(t, i, &one);
            continue;
        }
        if p.is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }
    Snf { d: a, u, v, v_inv }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &IntMatrix) -> Snf {
        let s = smith_normal_form(m);
        assert_eq!(s.u.mul(m).mul(&s.v), s.d);
        assert_eq!(s.v.mul(&s.v_inv), IntMatrix::identity(m.cols()));
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d.get(i, j).is_zero());
                }
            }
        }
        let f = s.invariant_factors();
        for w in f.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        s
    }

    #[test]
    fn small_cases() {
        let s = check(&IntMatrix::from_rows(&[vec![2]]));
        assert_eq!(s.invariant_factors(), vec![BigInt::from(2)]);
        let m = IntMatrix::from_rows(&[vec![1, 0], vec![0, 0]]);
        assert_eq!(check(&m).d, m);
        let s = check(&IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]));
        assert_eq!(s.invariant_factors(), vec![BigInt::from(2), BigInt::from(4)]);
    }

    #[test]
    fn divisibility_is_enforced() {
        let s = check(&IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(s.invariant_factors(), vec![BigInt::from(1), BigInt::from(6)]);
        check(&IntMatrix::from_rows(&[vec![-4, 6, 0], vec![10, -3, 7], vec![0, 0, 0]]));
        check(&IntMatrix::zeros(0, 3));
    }
}
