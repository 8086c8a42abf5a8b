//! Complex character tables.
//!
//! Class sums act on the centre of the group algebra; their common
//! eigenvectors are the central characters. These are found modulo a prime
//! p ≡ 1 (mod exponent) with p > 2√|G|, converted into character values mod p
//! and lifted to exact cyclotomic numbers through the eigenvalue
//! multiplicities of each element. The result is checked for orthogonality
//! with exact integer arithmetic before it is returned.

use super::modp::{charpoly, choose_prime, eval_poly, invm, nullspace, powm, primitive_root, rref};
use crate::cyclotomic::{cyclotomic_polynomial, Cyclotomic};
use crate::error::{Error, Result};
use crate::group::{FClassPartition, Field, FiniteGroup};
use crate::rational::Rational;
use num_traits::Zero;
use std::cmp::Ordering;

#[derive(Clone, Debug)]
pub struct CharacterTable {
    order: usize,
    exponent: u32,
    classes: FClassPartition,
    class_orders: Vec<u32>,
    /// power_map[c][k] = class of rep(c)^k, k < exponent
    power_map: Vec<Vec<u32>>,
    chars: Vec<Vec<Cyclotomic>>,
    degrees: Vec<u32>,
}

impl CharacterTable {
    pub fn compute(g: &FiniteGroup) -> Result<Self> {
        let n = g.order();
        let e = g.exponent();
        let classes = g.f_conjugacy_classes(Field::C);
        let r = classes.len();
        let class_orders: Vec<u32> = (0..r).map(|c| g.elem_order(classes.rep(c))).collect();
        let power_map: Vec<Vec<u32>> = (0..r)
            .map(|c| {
                let rep = classes.rep(c);
                let mut x = 0;
                (0..e)
                    .map(|_| {
                        let k = classes.class_of[x as usize];
                        x = g.mul(x, rep);
                        k
                    })
                    .collect()
            })
            .collect();
        let inverse_class: Vec<usize> = (0..r).map(|c| classes.class_of[g.inv(classes.rep(c)) as usize] as usize).collect();
        let p = choose_prime(e as u64, 4 * n as u64);
        let sizes: Vec<u64> = (0..r).map(|c| classes.size(c) as u64).collect();

        // (M_i)_{jk} = #{x ∈ C_i : x⁻¹ g_k ∈ C_j}
        let class_matrix = |i: usize| -> Vec<Vec<u64>> {
            let mut m = vec![vec![0u64; r]; r];
            for (k, col) in (0..r).map(|k| (k, classes.rep(k))) {
                for &x in &classes.classes[i] {
                    let j = classes.class_of[g.mul(g.inv(x), col) as usize] as usize;
                    m[j][k] += 1;
                }
            }
            for row in m.iter_mut() {
                for v in row.iter_mut() {
                    *v %= p;
                }
            }
            m
        };

        // subspaces stored as RREF row bases
        let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..r).map(|i| (0..r).map(|j| (i == j) as u64).collect()).collect()];
        for i in 1..r {
            if spaces.iter().all(|s| s.len() == 1) {
                break;
            }
            let m = class_matrix(i);
            let mut next = Vec::new();
            for space in spaces {
                if space.len() == 1 {
                    next.push(space);
                    continue;
                }
                next.extend(split(&m, space, p)?);
            }
            spaces = next;
        }
        if spaces.len() != r || spaces.iter().any(|s| s.len() != 1) {
            return Err(Error::InternalInconsistency("class sums do not split into lines".into()));
        }

        let omega = powm(primitive_root(p), (p - 1) / e as u64, p);
        let mut chars = Vec::with_capacity(r);
        let mut degrees = Vec::with_capacity(r);
        let mut mults = Vec::with_capacity(r);
        for space in &spaces {
            let w = &space[0];
            if w[0] != 1 {
                return Err(Error::InternalInconsistency("central character not normalized".into()));
            }
            let mut s = 0u64;
            for k in 0..r {
                s = (s + w[k] * w[inverse_class[k]] % p * invm(sizes[k] % p, p)) % p;
            }
            let d2 = (n as u64 % p) * invm(s, p) % p;
            let d = (1..=n as u64)
                .take_while(|d| d * d <= n as u64)
                .find(|d| d * d % p == d2)
                .ok_or_else(|| Error::InternalInconsistency("no integral degree for a central character".into()))?;
            let modval: Vec<u64> = (0..r).map(|k| d * w[k] % p * invm(sizes[k] % p, p) % p).collect();
            let mut row = Vec::with_capacity(r);
            let mut mrow = Vec::with_capacity(r);
            for k in 0..r {
                let o = class_orders[k] as u64;
                let step = e as u64 / o;
                let oinv = invm(o % p, p);
                let mut terms = Vec::new();
                for j in 0..o {
                    let mut m = 0u64;
                    for l in 0..o {
                        let val = modval[power_map[k][l as usize] as usize];
                        let root = powm(omega, (e as u64 - (step * j * l) % e as u64) % e as u64, p);
                        m = (m + val * root) % p;
                    }
                    m = m * oinv % p;
                    if m > d {
                        return Err(Error::InternalInconsistency("eigenvalue multiplicity out of range".into()));
                    }
                    if m > 0 {
                        terms.push(((step * j) as u32, m as i64));
                    }
                }
                let mut coeffs = vec![Rational::zero(); e as usize];
                for &(ex, m) in &terms {
                    coeffs[ex as usize] += Rational::from_integer(m.into());
                }
                row.push(Cyclotomic::from_coeffs(e, coeffs));
                mrow.push(terms);
            }
            chars.push(row);
            degrees.push(d as u32);
            mults.push(mrow);
        }

        check_orthogonality(n, e, &sizes, &inverse_class, &mults)?;

        let mut order: Vec<usize> = (0..r).collect();
        let trivial = |i: usize| chars[i].iter().all(|v| *v == Cyclotomic::one(e));
        order.sort_by(|&a, &b| {
            degrees[a].cmp(&degrees[b]).then_with(|| trivial(b).cmp(&trivial(a))).then_with(|| cmp_values_desc(&chars[a], &chars[b]))
        });
        let chars = order.iter().map(|&i| chars[i].clone()).collect();
        let degrees = order.iter().map(|&i| degrees[i]).collect();
        Ok(CharacterTable { order: n, exponent: e, classes, class_orders, power_map, chars, degrees })
    }

    pub fn group_order(&self) -> usize {
        self.order
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn classes(&self) -> &FClassPartition {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_size(&self, c: usize) -> usize {
        self.classes.size(c)
    }

    pub fn class_order(&self, c: usize) -> u32 {
        self.class_orders[c]
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn character(&self, i: usize) -> &[Cyclotomic] {
        &self.chars[i]
    }

    pub fn characters(&self) -> &[Vec<Cyclotomic>] {
        &self.chars
    }

    /// Class of rep(c)^k.
    pub fn power_class(&self, c: usize, k: i64) -> usize {
        self.power_map[c][k.rem_euclid(self.exponent as i64) as usize] as usize
    }

    /// `(1/|G|) Σ_g a(g) conj(b(g))`
    pub fn inner(&self, a: &[Cyclotomic], b: &[Cyclotomic]) -> Cyclotomic {
        let mut s = Cyclotomic::zero(self.exponent);
        for (c, (x, y)) in a.iter().zip(b).enumerate() {
            if x.is_zero() || y.is_zero() {
                continue;
            }
            let t = x * &y.conj();
            s += &t.scale(&Rational::from_integer(self.class_size(c).into()));
        }
        s.scale(&Rational::new(1.into(), self.order.into()))
    }

    /// Rational inner product; `None` if the value is irrational.
    pub fn inner_rational(&self, a: &[Cyclotomic], b: &[Cyclotomic]) -> Option<Rational> {
        self.inner(a, b).to_rational()
    }

    /// `χ ↦ (g ↦ χ(g^k))`, the Galois action of ζ ↦ ζ^k.
    pub fn galois_conjugate(&self, values: &[Cyclotomic], k: i64) -> Vec<Cyclotomic> {
        (0..values.len()).map(|c| values[self.power_class(c, k)].clone()).collect()
    }

    pub fn position(&self, values: &[Cyclotomic]) -> Option<usize> {
        self.chars.iter().position(|c| c.as_slice() == values)
    }

    pub fn is_irreducible(&self, values: &[Cyclotomic]) -> bool {
        values.len() == self.num_classes()
            && self.inner_rational(values, values).is_some_and(|q| q == Rational::from_integer(1.into()))
            && values[0].to_rational().is_some_and(|d| d > Rational::zero())
    }

    /// Frobenius–Schur indicator `(1/|G|) Σ χ(g²)`.
    pub fn fs_indicator_of(&self, values: &[Cyclotomic]) -> Result<i32> {
        if !self.is_irreducible(values) {
            return Err(Error::NotIrreducible);
        }
        let mut s = Cyclotomic::zero(self.exponent);
        for c in 0..values.len() {
            let v = &values[self.power_class(c, 2)];
            s += &v.scale(&Rational::from_integer(self.class_size(c).into()));
        }
        let v = s
            .scale(&Rational::new(1.into(), self.order.into()))
            .to_rational()
            .filter(|q| q.is_integer())
            .ok_or_else(|| Error::InternalInconsistency("indicator not an integer".into()))?;
        let v: i32 = v.to_integer().try_into().map_err(|_| Error::InternalInconsistency("indicator out of range".into()))?;
        if !(-1..=1).contains(&v) {
            return Err(Error::InternalInconsistency(format!("indicator {v}")));
        }
        Ok(v)
    }

    pub fn fs_indicator(&self, i: usize) -> i32 {
        self.fs_indicator_of(&self.chars[i]).expect("table characters are irreducible")
    }
}

/// Descending lexicographic order over class values.
pub(crate) fn cmp_values_desc(a: &[Cyclotomic], b: &[Cyclotomic]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match y.cmp_canonical(x) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

fn split(m: &[Vec<u64>], space: Vec<Vec<u64>>, p: u64) -> Result<Vec<Vec<Vec<u64>>>> {
    let s = space.len();
    let r = m.len();
    let mut basis = space;
    let pivots = rref(&mut basis, p);
    // images of basis vectors under M, and their coordinates in the basis
    let images: Vec<Vec<u64>> =
        basis.iter().map(|b| (0..r).map(|row| m[row].iter().zip(b).fold(0u64, |acc, (x, y)| (acc + x * y) % p)).collect()).collect();
    let restricted: Vec<Vec<u64>> = (0..s).map(|l| (0..s).map(|j| images[j][pivots[l]]).collect()).collect();
    let cp = charpoly(&restricted, p);
    let mut out = Vec::new();
    let mut total = 0;
    for lambda in 0..p {
        if eval_poly(&cp, lambda, p) != 0 {
            continue;
        }
        let shifted: Vec<Vec<u64>> =
            (0..s).map(|l| (0..s).map(|j| (restricted[l][j] + if l == j { p - lambda } else { 0 }) % p).collect()).collect();
        let ns = nullspace(&shifted, s, p);
        if ns.is_empty() {
            continue;
        }
        total += ns.len();
        let mut vecs: Vec<Vec<u64>> =
            ns.iter().map(|c| (0..r).map(|col| (0..s).fold(0u64, |acc, j| (acc + c[j] * basis[j][col]) % p)).collect()).collect();
        rref(&mut vecs, p);
        out.push(vecs);
        if total == s {
            break;
        }
    }
    if total != s {
        return Err(Error::InternalInconsistency("class sum is not diagonalizable mod p".into()));
    }
    Ok(out)
}

/// Exact row orthogonality in Z[ζ_e], with values given as multisets of roots of unity.
fn check_orthogonality(n: usize, e: u32, sizes: &[u64], inverse_class: &[usize], mults: &[Vec<Vec<(u32, i64)>>]) -> Result<()> {
    let phi = cyclotomic_polynomial(e);
    let deg = phi.len() - 1;
    let r = mults.len();
    let eu = e as usize;
    for i in 0..r {
        for j in i..r {
            let mut acc = vec![0i64; eu];
            for k in 0..sizes.len() {
                // χ_j(g⁻¹) = conj(χ_j(g)) is the value on the inverse class
                for &(a, ma) in &mults[i][k] {
                    for &(b, mb) in &mults[j][inverse_class[k]] {
                        acc[(a + b) as usize % eu] += ma * mb * sizes[k] as i64;
                    }
                }
            }
            if i == j {
                acc[0] -= n as i64;
            }
            for t in (deg..eu).rev() {
                let c = acc[t];
                if c != 0 {
                    for (l, &pl) in phi[..deg].iter().enumerate() {
                        acc[t - deg + l] -= c * pl;
                    }
                    acc[t] = 0;
                }
            }
            if acc.iter().any(|&x| x != 0) {
                return Err(Error::InternalInconsistency(format!("characters {i} and {j} fail orthogonality")));
            }
        }
    }
    Ok(())
}
