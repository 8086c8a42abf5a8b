//! Smith normal form over the integers with unimodular transforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// `U · A · V = D` with `D` diagonal, `d₀ | d₁ | …`, all `dᵢ > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snf {
    pub rows: usize,
    pub cols: usize,
    /// nonzero diagonal entries
    pub factors: Vec<BigInt>,
    pub u: Vec<Vec<BigInt>>,
    pub v: Vec<Vec<BigInt>>,
    pub v_inv: Vec<Vec<BigInt>>,
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
}

// row_i += q · row_j
fn row_axpy(m: &mut [Vec<BigInt>], i: usize, j: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    let (a, b) = if i < j {
        let (lo, hi) = m.split_at_mut(j);
        (&mut lo[i], &hi[0])
    } else {
        let (lo, hi) = m.split_at_mut(i);
        (&mut hi[0], &lo[j])
    };
    for (x, y) in a.iter_mut().zip(b.iter()) {
        *x += q * y;
    }
}

// col_i += q · col_j
fn col_axpy(m: &mut [Vec<BigInt>], i: usize, j: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for row in m.iter_mut() {
        let t = q * &row[j];
        row[i] += t;
    }
}

fn col_swap(m: &mut [Vec<BigInt>], i: usize, j: usize) {
    for row in m.iter_mut() {
        row.swap(i, j);
    }
}

struct Work {
    a: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
    v: Vec<Vec<BigInt>>,
    v_inv: Vec<Vec<BigInt>>,
}

impl Work {
    fn row_add(&mut self, i: usize, j: usize, q: &BigInt) {
        row_axpy(&mut self.a, i, j, q);
        row_axpy(&mut self.u, i, j, q);
    }

    fn row_swap(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        self.u.swap(i, j);
    }

    fn row_neg(&mut self, i: usize) {
        for x in self.a[i].iter_mut().chain(self.u[i].iter_mut()) {
            *x = -&*x;
        }
    }

    fn col_add(&mut self, i: usize, j: usize, q: &BigInt) {
        col_axpy(&mut self.a, i, j, q);
        col_axpy(&mut self.v, i, j, q);
        // inverse of the column operation acts on rows of V⁻¹
        row_axpy(&mut self.v_inv, j, i, &-q);
    }

    fn col_swap(&mut self, i: usize, j: usize) {
        col_swap(&mut self.a, i, j);
        col_swap(&mut self.v, i, j);
        self.v_inv.swap(i, j);
    }
}

pub fn smith_normal_form(a: &[Vec<BigInt>], cols: usize) -> Snf {
    let rows = a.len();
    let mut w = Work { a: a.to_vec(), u: identity(rows), v: identity(cols), v_inv: identity(cols) };
    let mut t = 0;
    while t < rows.min(cols) {
        // pivot: least nonzero absolute value in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !w.a[i][j].is_zero() && best.is_none_or(|(bi, bj)| w.a[i][j].abs() < w.a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        w.row_swap(t, pi);
        w.col_swap(t, pj);
        loop {
            let mut again = false;
            for i in t + 1..rows {
                if !w.a[i][t].is_zero() {
                    let q = w.a[i][t].div_floor(&w.a[t][t]);
                    w.row_add(i, t, &-q);
                    if !w.a[i][t].is_zero() {
                        again = true;
                    }
                }
            }
            for j in t + 1..cols {
                if !w.a[t][j].is_zero() {
                    let q = w.a[t][j].div_floor(&w.a[t][t]);
                    w.col_add(j, t, &-q);
                    if !w.a[t][j].is_zero() {
                        again = true;
                    }
                }
            }
            if again {
                let mut best = (t, t);
                for i in t..rows {
                    if !w.a[i][t].is_zero() && w.a[i][t].abs() < w.a[best.0][best.1].abs() {
                        best = (i, t);
                    }
                }
                for j in t..cols {
                    if !w.a[t][j].is_zero() && w.a[t][j].abs() < w.a[best.0][best.1].abs() {
                        best = (t, j);
                    }
                }
                w.row_swap(t, best.0);
                w.col_swap(t, best.1);
                continue;
            }
            // divisibility of the remaining block
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !w.a[i][j].is_multiple_of(&w.a[t][t])));
            match bad {
                Some(i) => w.row_add(t, i, &BigInt::one()),
                None => break,
            }
        }
        if w.a[t][t].is_negative() {
            w.row_neg(t);
        }
        t += 1;
    }
    let factors = (0..t).map(|i| w.a[i][i].clone()).collect();
    Snf { rows, cols, factors, u: w.u, v: w.v, v_inv: w.v_inv }
}

pub fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>], inner: usize, cols: usize) -> Vec<Vec<BigInt>> {
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(BigInt::zero(), |acc, k| if row[k].is_zero() { acc } else { acc + &row[k] * &b[k][j] }))
                .collect()
        })
        .collect()
}

impl Snf {
    /// Recomputes `U A V` and `V V⁻¹` and compares with `D` and the identity.
    pub fn verify(&self, a: &[Vec<BigInt>]) -> bool {
        let uav = mat_mul(&mat_mul(&self.u, a, self.rows, self.cols), &self.v, self.cols, self.cols);
        let diag_ok = uav.iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, x)| if i == j && i < self.factors.len() { *x == self.factors[i] } else { x.is_zero() })
        });
        let chain_ok = self.factors.windows(2).all(|p| p[1].is_multiple_of(&p[0])) && self.factors.iter().all(|d| d.is_positive());
        diag_ok && chain_ok && mat_mul(&self.v, &self.v_inv, self.cols, self.cols) == identity(self.cols)
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(m: &[&[i64]]) -> Vec<Vec<BigInt>> {
        m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn small_examples() {
        let a = big(&[&[2, 4], &[6, 8]]);
        let s = smith_normal_form(&a, 2);
        assert_eq!(s.factors, vec![BigInt::from(2), BigInt::from(4)]);
        assert!(s.verify(&a));
        let id = identity(3);
        assert_eq!(smith_normal_form(&id, 3).factors, vec![BigInt::one(); 3]);
        let z = big(&[&[0, 0], &[0, 0]]);
        assert!(smith_normal_form(&z, 2).factors.is_empty());
        let e = smith_normal_form(&[], 4);
        assert_eq!(e.rank(), 0);
        assert!(e.verify(&[]));
    }

    proptest! {
        #[test]
        fn transforms_are_consistent(rows in 0usize..6, cols in 1usize..6, seed in proptest::collection::vec(-20i64..20, 36)) {
            let a: Vec<Vec<BigInt>> = (0..rows).map(|i| (0..cols).map(|j| BigInt::from(seed[i * 6 + j])).collect()).collect();
            let s = smith_normal_form(&a, cols);
            prop_assert!(s.verify(&a));
        }
    }
}
