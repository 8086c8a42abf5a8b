//! Exact arithmetic in cyclotomic fields Q(ζ_e).
//!
//! An element is a rational vector of length `e` in the power basis
//! 1, ζ, …, ζ^{e-1}, kept reduced modulo the e-th cyclotomic polynomial, so
//! only the first φ(e) coefficients can be nonzero and equality at a fixed
//! exponent is coefficientwise.

use crate::rational::{fmt_rational, Rational};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

/// Coefficients of Φ_n, low degree first.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by Φ_d for every proper divisor d
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let den = cyclotomic_polynomial(d);
            num = poly_div_exact(&num, &den);
        }
    }
    let p = Arc::new(num);
    cache.lock().unwrap().insert(n, p.clone());
    p
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut q = vec![0i64; qd + 1];
    for i in (0..=qd).rev() {
        let c = rem[i + dd];
        q[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    q
}

pub fn euler_phi(n: u32) -> u32 {
    (1..=n).filter(|&k| k.gcd(&n) == 1).count() as u32
}

#[derive(Clone, Debug)]
pub struct Cyclotomic {
    e: u32,
    c: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero(e: u32) -> Self {
        assert!(e >= 1);
        Cyclotomic { e, c: vec![Rational::zero(); e as usize] }
    }

    pub fn one(e: u32) -> Self {
        Self::from_rational(e, Rational::one())
    }

    pub fn from_rational(e: u32, q: Rational) -> Self {
        let mut z = Self::zero(e);
        z.c[0] = q;
        z
    }

    pub fn from_int(e: u32, n: i64) -> Self {
        Self::from_rational(e, Rational::from_integer(n.into()))
    }

    /// ζ_e^k
    pub fn root_of_unity(e: u32, k: i64) -> Self {
        let mut z = Self::zero(e);
        z.c[k.rem_euclid(e as i64) as usize] = Rational::one();
        z.reduce();
        z
    }

    /// Arbitrary coefficient vector (any length), reduced.
    pub fn from_coeffs(e: u32, coeffs: Vec<Rational>) -> Self {
        let mut c = vec![Rational::zero(); e as usize];
        for (i, q) in coeffs.into_iter().enumerate() {
            c[i % e as usize] += q;
        }
        let mut z = Cyclotomic { e, c };
        z.reduce();
        z
    }

    pub fn exponent(&self) -> u32 {
        self.e
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.c
    }

    fn reduce(&mut self) {
        let phi = cyclotomic_polynomial(self.e);
        let d = phi.len() - 1;
        for i in (d..self.c.len()).rev() {
            if self.c[i].is_zero() {
                continue;
            }
            let k = std::mem::replace(&mut self.c[i], Rational::zero());
            for (j, &pj) in phi[..d].iter().enumerate() {
                if pj != 0 {
                    self.c[i - d + j] -= &k * Rational::from_integer(pj.into());
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.c[1..].iter().all(|x| x.is_zero())
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.c[0].clone())
    }

    /// Same number written over ζ_big, `big` a multiple of `e`.
    pub fn lift(&self, big: u32) -> Self {
        if big == self.e {
            return self.clone();
        }
        assert!(big.is_multiple_of(self.e), "cannot lift exponent {} to {}", self.e, big);
        let step = (big / self.e) as usize;
        let mut z = Self::zero(big);
        for (i, q) in self.c.iter().enumerate() {
            if !q.is_zero() {
                z.c[i * step] = q.clone();
            }
        }
        z.reduce();
        z
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        if a.e == b.e {
            return (a.clone(), b.clone());
        }
        let l = a.e.lcm(&b.e);
        (a.lift(l), b.lift(l))
    }

    /// σ_k: ζ ↦ ζ^k, for k prime to the exponent.
    pub fn galois(&self, k: i64) -> Self {
        let e = self.e as i64;
        assert_eq!(k.rem_euclid(e).gcd(&e), 1, "galois exponent must be a unit");
        let mut z = Self::zero(self.e);
        for (i, q) in self.c.iter().enumerate() {
            if !q.is_zero() {
                z.c[(i as i64 * k).rem_euclid(e) as usize] += q;
            }
        }
        z.reduce();
        z
    }

    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Cyclotomic { e: self.e, c: self.c.iter().map(|x| x * q).collect() }
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let e = self.e as i64;
        let mut others = Self::one(self.e);
        for k in 2..e.max(2) {
            if k.gcd(&e) == 1 {
                others = &others * &self.galois(k);
            }
        }
        let norm = (self * &others).to_rational().expect("field norm is rational");
        Some(others.scale(&norm.recip()))
    }

    /// Deterministic total order: coefficient vectors compared lexicographically
    /// over a common exponent.
    pub fn cmp_canonical(&self, other: &Self) -> Ordering {
        let (a, b) = Self::common(self, other);
        a.c.cmp(&b.c)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut r = Self::one(self.e);
        for _ in 0..k {
            r = &r * self;
        }
        r
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.e == other.e {
            return self.c == other.c;
        }
        let (a, b) = Self::common(self, other);
        a.c == b.c
    }
}

impl Eq for Cyclotomic {}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.e == rhs.e {
            return Cyclotomic { e: self.e, c: self.c.iter().zip(&rhs.c).map(|(a, b)| a + b).collect() };
        }
        let (a, b) = Cyclotomic::common(self, rhs);
        &a + &b
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.e == rhs.e {
            return Cyclotomic { e: self.e, c: self.c.iter().zip(&rhs.c).map(|(a, b)| a - b).collect() };
        }
        let (a, b) = Cyclotomic::common(self, rhs);
        &a - &b
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { e: self.e, c: self.c.iter().map(|a| -a).collect() }
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.e != rhs.e {
            let (a, b) = Cyclotomic::common(self, rhs);
            return &a * &b;
        }
        let e = self.e as usize;
        if self.is_rational() {
            return rhs.scale(&self.c[0]);
        }
        if rhs.is_rational() {
            return self.scale(&rhs.c[0]);
        }
        let mut c = vec![Rational::zero(); e];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                if !b.is_zero() {
                    c[(i + j) % e] += a * b;
                }
            }
        }
        let mut z = Cyclotomic { e: self.e, c };
        z.reduce();
        z
    }
}

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        if self.e == rhs.e {
            for (a, b) in self.c.iter_mut().zip(&rhs.c) {
                *a += b;
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .c
            .iter()
            .enumerate()
            .filter(|(_, q)| !q.is_zero())
            .map(|(i, q)| {
                let coeff = if q.denom().is_one() { q.numer().to_string() } else { fmt_rational(q) };
                match i {
                    0 => coeff,
                    _ if q.is_one() => format!("E({})^{}", self.e, i),
                    _ if (-q).is_one() => format!("-E({})^{}", self.e, i),
                    _ => format!("{}*E({})^{}", coeff, self.e, i),
                }
            })
            .collect();
        if terms.is_empty() {
            return f.write_str("0");
        }
        let mut s = terms[0].clone();
        for t in &terms[1..] {
            if let Some(rest) = t.strip_prefix('-') {
                s.push_str(" - ");
                s.push_str(rest);
            } else {
                s.push_str(" + ");
                s.push_str(t);
            }
        }
        f.write_str(&s)
    }
}

/// Sign of a rational, used by callers that need to check nonnegativity.
pub fn is_nonnegative(q: &Rational) -> bool {
    !q.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use proptest::prelude::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(105).len() - 1, euler_phi(105) as usize);
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for e in 2..20 {
            let mut s = Cyclotomic::zero(e);
            for k in 0..e as i64 {
                s += &Cyclotomic::root_of_unity(e, k);
            }
            assert!(s.is_zero(), "e = {e}");
        }
    }

    #[test]
    fn lifting_preserves_identity() {
        let z3 = Cyclotomic::root_of_unity(3, 1);
        let z6 = Cyclotomic::root_of_unity(6, 2);
        assert_eq!(z3, z6);
        let minus_one = Cyclotomic::root_of_unity(4, 2);
        assert_eq!(minus_one, Cyclotomic::from_int(1, -1));
        // ζ3 + ζ3² = -1
        let s = &z3 + &z3.conj();
        assert_eq!(s.to_rational(), Some(int(-1)));
    }

    #[test]
    fn inverse_and_norm() {
        let a = &Cyclotomic::root_of_unity(5, 1) + &Cyclotomic::from_int(5, 2);
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, Cyclotomic::one(5));
        let h = Cyclotomic::from_rational(8, rat(1, 3));
        assert_eq!(h.inverse().unwrap(), Cyclotomic::from_int(8, 3));
        assert!(Cyclotomic::zero(7).inverse().is_none());
    }

    #[test]
    fn display() {
        assert_eq!(Cyclotomic::root_of_unity(3, 2).to_string(), "-1 - E(3)^1");
        assert_eq!(Cyclotomic::zero(3).to_string(), "0");
    }

    fn arb(e: u32) -> impl Strategy<Value = Cyclotomic> {
        proptest::collection::vec(-4i64..5, e as usize).prop_map(move |v| Cyclotomic::from_coeffs(e, v.into_iter().map(int).collect()))
    }

    proptest! {
        #[test]
        fn ring_axioms((e, a, b, c) in prop::sample::select(vec![1u32, 2, 3, 4, 5, 6, 8, 12])
            .prop_flat_map(|e| (Just(e), arb(e), arb(e), arb(e)))) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inverse().unwrap(), Cyclotomic::one(e));
            }
            prop_assert_eq!((&a * &b).lift(e * 3), &a.lift(e * 3) * &b.lift(e * 3));
        }
    }
}
