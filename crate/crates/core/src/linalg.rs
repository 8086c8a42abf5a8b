//! Gaussian elimination over exact fields.

use crate::cyclotomic::Cyclotomic;
use crate::rational::Rational;
use num_traits::{One, Zero};

pub trait FieldElem: Clone {
    fn is_zero_elem(&self) -> bool;
    fn add_elem(&self, other: &Self) -> Self;
    fn sub_elem(&self, other: &Self) -> Self;
    fn mul_elem(&self, other: &Self) -> Self;
    fn inv_elem(&self) -> Self;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
}

impl FieldElem for Rational {
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_elem(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_elem(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_elem(&self, o: &Self) -> Self {
        self * o
    }
    fn inv_elem(&self) -> Self {
        self.recip()
    }
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
}

impl FieldElem for Cyclotomic {
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_elem(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_elem(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_elem(&self, o: &Self) -> Self {
        self * o
    }
    fn inv_elem(&self) -> Self {
        self.inverse().expect("pivot is nonzero")
    }
    fn zero_like(&self) -> Self {
        Cyclotomic::zero(self.exponent())
    }
    fn one_like(&self) -> Self {
        Cyclotomic::one(self.exponent())
    }
}

/// Row-reduces in place; returns pivot columns.
pub fn row_reduce<T: FieldElem>(m: &mut [Vec<T>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero_elem()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv_elem();
        for x in m[r].iter_mut() {
            *x = x.mul_elem(&inv);
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero_elem() {
                let f = m[i][c].clone();
                let (ri, rr) = if i < r {
                    let (a, b) = m.split_at_mut(r);
                    (&mut a[i], &b[0])
                } else {
                    let (a, b) = m.split_at_mut(i);
                    (&mut b[0], &a[r])
                };
                for (x, y) in ri.iter_mut().zip(rr.iter()) {
                    if !y.is_zero_elem() {
                        *x = x.sub_elem(&f.mul_elem(y));
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<T: FieldElem>(m: &[Vec<T>]) -> usize {
    let mut a = m.to_vec();
    row_reduce(&mut a).len()
}

/// Inverse of a square matrix, `None` if singular.
pub fn inverse<T: FieldElem>(m: &[Vec<T>]) -> Option<Vec<Vec<T>>> {
    let n = m.len();
    if n == 0 {
        return Some(Vec::new());
    }
    let zero = m[0][0].zero_like();
    let one = m[0][0].one_like();
    let mut a: Vec<Vec<T>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { one.clone() } else { zero.clone() }));
            r
        })
        .collect();
    let piv = row_reduce(&mut a);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_mul<T: FieldElem>(a: &[Vec<T>], b: &[Vec<T>], zero: &T) -> Vec<Vec<T>> {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut s = zero.clone();
                    for k in 0..inner {
                        if !row[k].is_zero_elem() && !b[k][j].is_zero_elem() {
                            s = s.add_elem(&row[k].mul_elem(&b[k][j]));
                        }
                    }
                    s
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn rank_and_inverse() {
        assert_eq!(rank(&m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&m(&[&[0, 0], &[0, 0]])), 0);
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = inverse(&a).unwrap();
        assert_eq!(inv, m(&[&[1, -1], &[-1, 2]]));
        assert!(inverse(&m(&[&[1, 2], &[2, 4]])).is_none());
        let b = vec![vec![rat(1, 2)]];
        assert_eq!(inverse(&b).unwrap(), m(&[&[2]]));
        assert_eq!(mat_mul(&a, &inv, &int(0)), m(&[&[1, 0], &[0, 1]]));
    }
}
