//! Finite permutation groups with a full multiplication table.

pub mod catalog;
mod conjugacy;
mod elemset;
mod perm;
mod subgroups;

pub use conjugacy::{FClassPartition, Field};
pub use elemset::ElemSet;
pub use perm::Perm;
pub use subgroups::{CosetTable, Quotient, Subgroup, SubgroupClass, SubgroupClassTable};

use crate::error::{Error, Result};
use std::collections::{HashMap, VecDeque};

pub const DEFAULT_GROUP_CAP: usize = 200;

/// Order cap, overridable through `EQEULER_GROUP_CAP`.
pub fn group_cap() -> usize {
    std::env::var("EQEULER_GROUP_CAP").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_GROUP_CAP)
}

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Perm>,
    gen_index: Vec<u32>,
    elements: Vec<Perm>,
    lookup: HashMap<Perm, u32>,
    mult: Vec<u32>,
    inv: Vec<u32>,
    orders: Vec<u32>,
    // spanning tree of the Cayley graph: element = parent * generators[k]
    words: Vec<Option<(u32, u32)>>,
    bfs: Vec<u32>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.generators == other.generators && self.elements == other.elements
    }
}

impl Eq for FiniteGroup {}

pub fn generate_group(degree: usize, generators: &[Perm]) -> Result<FiniteGroup> {
    generate_group_with_cap(degree, generators, group_cap())
}

pub fn generate_group_with_cap(degree: usize, generators: &[Perm], cap: usize) -> Result<FiniteGroup> {
    for g in generators {
        if g.degree() != degree {
            return Err(Error::InvalidPermutation(format!("generator has degree {} but group degree is {degree}", g.degree())));
        }
        Perm::from_images(g.images().to_vec())?;
    }
    let id = Perm::identity(degree);
    let mut elements = vec![id.clone()];
    let mut lookup = HashMap::from([(id, 0u32)]);
    let mut words = vec![None];
    let mut queue = VecDeque::from([0u32]);
    while let Some(x) = queue.pop_front() {
        for (k, s) in generators.iter().enumerate() {
            let y = elements[x as usize].compose(s);
            if !lookup.contains_key(&y) {
                if elements.len() >= cap {
                    return Err(Error::OrderCapExceeded { cap });
                }
                let idx = elements.len() as u32;
                lookup.insert(y.clone(), idx);
                elements.push(y);
                words.push(Some((x, k as u32)));
                queue.push_back(idx);
            }
        }
    }
    let n = elements.len();
    let bfs = (0..n as u32).collect();
    let mut mult = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            mult[a * n + b] = lookup[&elements[a].compose(&elements[b])];
        }
    }
    Ok(FiniteGroup::finish(degree, generators.to_vec(), elements, lookup, mult, words, bfs))
}

impl FiniteGroup {
    fn finish(
        degree: usize,
        generators: Vec<Perm>,
        elements: Vec<Perm>,
        lookup: HashMap<Perm, u32>,
        mult: Vec<u32>,
        words: Vec<Option<(u32, u32)>>,
        bfs: Vec<u32>,
    ) -> FiniteGroup {
        let n = elements.len();
        let mut inv = vec![0u32; n];
        for a in 0..n {
            for b in 0..n {
                if mult[a * n + b] == 0 {
                    inv[a] = b as u32;
                    break;
                }
            }
        }
        let mut orders = vec![1u32; n];
        for (a, o) in orders.iter_mut().enumerate() {
            let mut x = a as u32;
            while x != 0 {
                x = mult[x as usize * n + a];
                *o += 1;
            }
        }
        let gen_index = generators.iter().map(|g| lookup[g]).collect();
        FiniteGroup { degree, generators, gen_index, elements, lookup, mult, inv, orders, words, bfs }
    }

    /// The subgroup `h` as a group in its own right. Elements keep the
    /// parent's relative order; `parent_index` maps back.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> (FiniteGroup, Vec<u32>) {
        let members = h.members().to_vec();
        let k = members.len();
        let local: HashMap<u32, u32> = members.iter().enumerate().map(|(i, &m)| (m, i as u32)).collect();
        let elements: Vec<Perm> = members.iter().map(|&m| self.elements[m as usize].clone()).collect();
        let lookup = elements.iter().enumerate().map(|(i, p)| (p.clone(), i as u32)).collect();
        let mut mult = vec![0u32; k * k];
        for a in 0..k {
            for b in 0..k {
                mult[a * k + b] = local[&self.mul(members[a], members[b])];
            }
        }
        let gens: Vec<u32> = h.gen_indices().iter().map(|g| local[g]).collect();
        let mut words = vec![None; k];
        let mut seen = vec![false; k];
        seen[0] = true;
        let mut bfs = vec![0u32];
        let mut i = 0;
        while i < bfs.len() {
            let x = bfs[i];
            for (j, &s) in gens.iter().enumerate() {
                let y = mult[x as usize * k + s as usize];
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    words[y as usize] = Some((x, j as u32));
                    bfs.push(y);
                }
            }
            i += 1;
        }
        let generators = gens.iter().map(|&g| elements[g as usize].clone()).collect();
        (FiniteGroup::finish(self.degree, generators, elements, lookup, mult, words, bfs), members)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    /// Element indices of the generators, in generator order.
    pub fn generator_indices(&self) -> &[u32] {
        &self.gen_index
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: u32) -> &Perm {
        &self.elements[i as usize]
    }

    pub fn index_of(&self, p: &Perm) -> Option<u32> {
        self.lookup.get(p).copied()
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mult[a as usize * self.elements.len() + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    #[inline]
    pub fn elem_order(&self, a: u32) -> u32 {
        self.orders[a as usize]
    }

    pub fn pow(&self, a: u32, k: i64) -> u32 {
        let o = self.orders[a as usize] as i64;
        let k = k.rem_euclid(o);
        let mut x = 0;
        for _ in 0..k {
            x = self.mul(x, a);
        }
        x
    }

    /// `g⁻¹ x g`.
    #[inline]
    pub fn conj(&self, x: u32, g: u32) -> u32 {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn exponent(&self) -> u32 {
        self.orders.iter().fold(1u32, |acc, &o| num_integer::lcm(acc, o))
    }

    /// Spanning-tree word data: `Some((parent, k))` means element = parent · generator k.
    pub fn word(&self, a: u32) -> Option<(u32, u32)> {
        self.words[a as usize]
    }

    /// Elements in an order where every parent precedes its children.
    pub fn bfs_order(&self) -> &[u32] {
        &self.bfs
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order() as u32;
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> FiniteGroup {
        generate_group(3, &[Perm::from_images(vec![1, 2, 0]).unwrap(), Perm::from_images(vec![1, 0, 2]).unwrap()]).unwrap()
    }

    #[test]
    fn trivial_group() {
        let g = generate_group(1, &[]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.exponent(), 1);
    }

    #[test]
    fn s3_order_and_tables() {
        let g = s3();
        assert_eq!(g.order(), 6);
        assert!(g.element(0).is_identity());
        for a in 0..6 {
            assert_eq!(g.mul(a, g.inv(a)), 0);
            for b in 0..6 {
                assert_eq!(g.element(g.mul(a, b)), &g.element(a).compose(g.element(b)));
            }
        }
        assert!(!g.is_abelian());
        assert_eq!(g.exponent(), 6);
    }

    #[test]
    fn duplicate_generators_are_harmless() {
        let t = Perm::from_images(vec![1, 0]).unwrap();
        let g = generate_group(2, &[t.clone(), t]).unwrap();
        assert_eq!(g.order(), 2);
    }

    #[test]
    fn cap_is_enforced() {
        let c = Perm::from_images(vec![1, 2, 3, 0]).unwrap();
        let t = Perm::from_images(vec![1, 0, 2, 3]).unwrap();
        assert!(matches!(generate_group_with_cap(4, &[c, t], 10), Err(Error::OrderCapExceeded { cap: 10 })));
    }

    #[test]
    fn words_reconstruct_elements() {
        let g = s3();
        for a in 1..g.order() as u32 {
            let (p, k) = g.word(a).unwrap();
            assert_eq!(g.mul(p, g.generator_indices()[k as usize]), a);
        }
    }

    #[test]
    fn degree_mismatch_rejected() {
        let t = Perm::from_images(vec![1, 0]).unwrap();
        assert!(matches!(generate_group(3, &[t]), Err(Error::InvalidPermutation(_))));
    }
}
