//! Bases of the representation rings R_F(G) for F = C, R, Q.
//!
//! Every basis element has the shape `a · Σ_{χ ∈ O} χ` for an orbit `O` of
//! complex irreducibles and a positive integer `a`:
//! over C the orbits are singletons with a = 1; over R they are conjugation
//! orbits, with a = 2 for quaternionic characters; over Q they are Galois
//! orbits and a is the Schur index.

use super::chartable::{cmp_values_desc, CharacterTable};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::Field;
use crate::rational::Rational;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RealType {
    R,
    C,
    H,
}

impl RealType {
    pub fn from_indicator(fs: i32) -> RealType {
        match fs {
            1 => RealType::R,
            0 => RealType::C,
            _ => RealType::H,
        }
    }
}

#[derive(Clone, Debug)]
pub struct IrreducibleF {
    /// complex constituents, ascending
    pub constituents: Vec<usize>,
    pub multiplier: u32,
    pub real_type: Option<RealType>,
    pub character: Vec<Cyclotomic>,
}

impl IrreducibleF {
    pub fn degree(&self) -> u32 {
        let d = self.character[0].to_rational().expect("degree is rational");
        u32::try_from(d.to_integer()).expect("degree fits")
    }
}

#[derive(Clone, Debug)]
pub struct RepBasis {
    pub field: Field,
    pub irreducibles: Vec<IrreducibleF>,
}

/// Galois orbits of the complex irreducibles, each ascending, ordered by least member.
pub fn galois_orbits(t: &CharacterTable) -> Vec<Vec<usize>> {
    let e = t.exponent() as i64;
    let mut seen = vec![false; t.len()];
    let mut orbits = Vec::new();
    for i in 0..t.len() {
        if seen[i] {
            continue;
        }
        let mut orbit: Vec<usize> = (1..=e)
            .filter(|k| k.gcd(&e) == 1)
            .map(|k| t.position(&t.galois_conjugate(t.character(i), k)).expect("Galois conjugate is irreducible"))
            .collect();
        orbit.sort_unstable();
        orbit.dedup();
        for &j in &orbit {
            seen[j] = true;
        }
        orbits.push(orbit);
    }
    orbits
}

fn orbit_sum(t: &CharacterTable, orbit: &[usize], a: u32) -> Vec<Cyclotomic> {
    let mut v = vec![Cyclotomic::zero(t.exponent()); t.num_classes()];
    for &i in orbit {
        for (x, y) in v.iter_mut().zip(t.character(i)) {
            *x += y;
        }
    }
    let a = Rational::from_integer(a.into());
    v.iter().map(|x| x.scale(&a)).collect()
}

impl RepBasis {
    pub fn complex(t: &CharacterTable) -> Self {
        let irreducibles = (0..t.len())
            .map(|i| IrreducibleF { constituents: vec![i], multiplier: 1, real_type: None, character: t.character(i).to_vec() })
            .collect();
        RepBasis { field: Field::C, irreducibles }
    }

    pub fn real(t: &CharacterTable) -> Self {
        let mut used = vec![false; t.len()];
        let mut irr = Vec::new();
        for i in 0..t.len() {
            if used[i] {
                continue;
            }
            let ty = RealType::from_indicator(t.fs_indicator(i));
            let conj: Vec<Cyclotomic> = t.character(i).iter().map(|v| v.conj()).collect();
            let j = t.position(&conj).expect("conjugate character is irreducible");
            let (orbit, a) = match ty {
                RealType::R => (vec![i], 1),
                RealType::C => (vec![i.min(j), i.max(j)], 1),
                RealType::H => (vec![i], 2),
            };
            for &k in &orbit {
                used[k] = true;
            }
            irr.push(IrreducibleF { character: orbit_sum(t, &orbit, a), constituents: orbit, multiplier: a, real_type: Some(ty) });
        }
        Self::sorted(Field::R, irr)
    }

    /// `schur[k]` is the Schur index used for `galois_orbits(t)[k]`.
    pub fn rational(t: &CharacterTable, schur: &[u32]) -> Self {
        let orbits = galois_orbits(t);
        assert_eq!(orbits.len(), schur.len());
        let irr = orbits
            .into_iter()
            .zip(schur)
            .map(|(orbit, &a)| IrreducibleF { character: orbit_sum(t, &orbit, a), constituents: orbit, multiplier: a, real_type: None })
            .collect();
        Self::sorted(Field::Q, irr)
    }

    fn sorted(field: Field, mut irr: Vec<IrreducibleF>) -> Self {
        irr.sort_by(|a, b| {
            a.degree()
                .cmp(&b.degree())
                .then_with(|| b.constituents.contains(&0).cmp(&a.constituents.contains(&0)))
                .then_with(|| cmp_values_desc(&a.character, &b.character))
        });
        RepBasis { field, irreducibles: irr }
    }

    pub fn len(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreducibles.is_empty()
    }

    /// Coordinates of a virtual character in this basis. Fails if the character
    /// is not an integral combination of basis elements.
    pub fn decompose(&self, t: &CharacterTable, theta: &[Cyclotomic]) -> Result<Vec<i64>> {
        let mut out = Vec::with_capacity(self.len());
        for (idx, irr) in self.irreducibles.iter().enumerate() {
            let mut ip: Option<Rational> = None;
            for &c in &irr.constituents {
                let v = t
                    .inner_rational(theta, t.character(c))
                    .ok_or_else(|| Error::DecompositionNotIntegral(format!("irrational multiplicity at basis element {idx}")))?;
                match &ip {
                    None => ip = Some(v),
                    Some(w) if *w == v => {}
                    Some(_) => {
                        return Err(Error::DecompositionNotIntegral(format!(
                            "multiplicities differ across the orbit of basis element {idx}"
                        )))
                    }
                }
            }
            let coeff = ip.unwrap_or_else(Rational::zero) / Rational::from_integer(irr.multiplier.into());
            if !coeff.is_integer() {
                return Err(Error::DecompositionNotIntegral(format!("coefficient {coeff} at basis element {idx}")));
            }
            out.push(i64::try_from(coeff.to_integer()).map_err(|_| Error::DecompositionNotIntegral("overflow".into()))?);
        }
        if self.character_of(t, &out) != theta {
            return Err(Error::DecompositionNotIntegral("class function is not in the span of the basis".into()));
        }
        Ok(out)
    }

    pub fn character_of(&self, t: &CharacterTable, coeffs: &[i64]) -> Vec<Cyclotomic> {
        let mut v = vec![Cyclotomic::zero(t.exponent()); t.num_classes()];
        for (c, irr) in coeffs.iter().zip(&self.irreducibles) {
            if *c == 0 {
                continue;
            }
            let q = Rational::from_integer((*c).into());
            for (x, y) in v.iter_mut().zip(&irr.character) {
                *x += &y.scale(&q);
            }
        }
        v
    }

    /// Whether the coordinates describe an honest (non-virtual) representation.
    pub fn is_effective(coeffs: &[i64]) -> bool {
        coeffs.iter().all(|c| !c.is_negative())
    }
}
