use super::{generate_group_with_cap, ElemSet, FiniteGroup, Perm};
use std::collections::{HashMap, HashSet};
use std::hash::{Hash, Hasher};

/// A subgroup given by its sorted member indices in the parent group.
#[derive(Clone, Debug)]
pub struct Subgroup {
    members: Vec<u32>,
    set: ElemSet,
    gens: Vec<u32>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state)
    }
}

impl Subgroup {
    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn set(&self) -> &ElemSet {
        &self.set
    }

    /// A generating set (element indices of the parent).
    pub fn gen_indices(&self) -> &[u32] {
        &self.gens
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn contains(&self, g: u32) -> bool {
        self.set.contains(g)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.set.is_subset(&other.set)
    }
}

/// Left cosets `gH`, each represented by its least element.
#[derive(Clone, Debug)]
pub struct CosetTable {
    pub reps: Vec<u32>,
    pub coset_of: Vec<u32>,
}

/// `B/N` as an abstract permutation group on cosets, with a section back to `G`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: FiniteGroup,
    /// quotient element -> least element of the corresponding coset
    pub section: Vec<u32>,
    /// parent element -> quotient element (`u32::MAX` outside `B`)
    pub projection: Vec<u32>,
}

impl Quotient {
    pub fn order(&self) -> usize {
        self.group.order()
    }
}

#[derive(Clone, Debug)]
pub struct SubgroupClass {
    pub rep: Subgroup,
    pub conjugates: Vec<Subgroup>,
    /// `conjugators[i]` = g with g⁻¹·rep·g = conjugates[i]
    pub conjugators: Vec<u32>,
    pub normalizer: Subgroup,
}

impl SubgroupClass {
    pub fn weyl_order(&self) -> usize {
        self.normalizer.order() / self.rep.order()
    }
}

#[derive(Clone, Debug)]
pub struct SubgroupClassTable {
    pub classes: Vec<SubgroupClass>,
    index: HashMap<Vec<u32>, (usize, usize)>,
}

impl SubgroupClassTable {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// (class index, position among conjugates)
    pub fn locate(&self, h: &Subgroup) -> (usize, usize) {
        self.index[&h.members]
    }

    pub fn class_of(&self, h: &Subgroup) -> usize {
        self.locate(h).0
    }

    /// Some g with g⁻¹·rep·g = h.
    pub fn conjugator_to(&self, h: &Subgroup) -> u32 {
        let (c, i) = self.locate(h);
        self.classes[c].conjugators[i]
    }

    pub fn rep(&self, c: usize) -> &Subgroup {
        &self.classes[c].rep
    }
}

impl FiniteGroup {
    /// Subgroup with members exactly `members` (assumed closed); a generating
    /// set is chosen greedily in index order.
    pub fn subgroup_from_members(&self, members: &[u32]) -> Subgroup {
        let mut members = members.to_vec();
        members.sort_unstable();
        members.dedup();
        let mut gens = Vec::new();
        let mut cur = self.closure(&[]);
        for &m in &members {
            if !cur.contains(m) {
                gens.push(m);
                cur = self.closure(&gens);
            }
        }
        debug_assert_eq!(cur.members, members);
        cur.gens = gens;
        cur
    }

    /// Subgroup generated by the given element indices.
    pub fn closure(&self, gens: &[u32]) -> Subgroup {
        let n = self.order();
        let mut set = ElemSet::new(n);
        set.insert(0);
        let mut list = vec![0u32];
        let mut i = 0;
        while i < list.len() {
            let x = list[i];
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    list.push(y);
                }
            }
            i += 1;
        }
        list.sort_unstable();
        let gens = gens.iter().copied().filter(|&g| g != 0).collect();
        Subgroup { members: list, set, gens }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        self.closure(&[])
    }

    pub fn whole(&self) -> Subgroup {
        self.closure(self.generator_indices())
    }

    /// `g⁻¹ H g`
    pub fn conjugate_subgroup(&self, h: &Subgroup, g: u32) -> Subgroup {
        let n = self.order();
        let mut members: Vec<u32> = h.members.iter().map(|&x| self.conj(x, g)).collect();
        members.sort_unstable();
        let set = ElemSet::from_members(n, &members);
        let gens = h.gens.iter().map(|&x| self.conj(x, g)).collect();
        Subgroup { members, set, gens }
    }

    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let members: Vec<u32> = (0..self.order() as u32).filter(|&g| h.gens.iter().all(|&x| h.contains(self.conj(x, g)))).collect();
        self.subgroup_from_members(&members)
    }

    /// Distinct cyclic subgroups, each generated by its least generator.
    pub fn cyclic_subgroups(&self) -> Vec<Subgroup> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for g in 0..self.order() as u32 {
            let c = self.closure(&[g]);
            if seen.insert(c.members.clone()) {
                out.push(c);
            }
        }
        out
    }

    /// All subgroups, ordered by (order, member list).
    pub fn all_subgroups(&self) -> Vec<Subgroup> {
        let cyclic = self.cyclic_subgroups();
        let mut seen: HashSet<Vec<u32>> = cyclic.iter().map(|c| c.members.clone()).collect();
        let mut all = cyclic.clone();
        let mut i = 0;
        while i < all.len() {
            for c in &cyclic {
                let g = c.gens.first().copied().unwrap_or(0);
                if all[i].contains(g) {
                    continue;
                }
                let mut gens = all[i].gens.clone();
                gens.push(g);
                let j = self.closure(&gens);
                if seen.insert(j.members.clone()) {
                    all.push(j);
                }
            }
            i += 1;
        }
        all.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members.cmp(&b.members)));
        all
    }

    pub fn subgroup_classes(&self) -> SubgroupClassTable {
        let all = self.all_subgroups();
        let mut index: HashMap<Vec<u32>, (usize, usize)> = HashMap::new();
        let mut classes = Vec::new();
        for h in &all {
            if index.contains_key(&h.members) {
                continue;
            }
            // `all` is sorted, so the first unseen member of a class is its minimum.
            let c = classes.len();
            let mut found: HashMap<Vec<u32>, u32> = HashMap::new();
            for g in 0..self.order() as u32 {
                let k = self.conjugate_subgroup(h, g);
                found.entry(k.members.clone()).or_insert(g);
            }
            let mut conj: Vec<(Vec<u32>, u32)> = found.into_iter().collect();
            conj.sort();
            let mut conjugates = Vec::new();
            let mut conjugators = Vec::new();
            for (i, (m, g)) in conj.into_iter().enumerate() {
                index.insert(m, (c, i));
                conjugates.push(self.conjugate_subgroup(h, g));
                conjugators.push(g);
            }
            let normalizer = self.normalizer(h);
            classes.push(SubgroupClass { rep: h.clone(), conjugates, conjugators, normalizer });
        }
        SubgroupClassTable { classes, index }
    }

    pub fn left_cosets(&self, h: &Subgroup) -> CosetTable {
        let n = self.order();
        let mut coset_of = vec![u32::MAX; n];
        let mut reps = Vec::new();
        for g in 0..n as u32 {
            if coset_of[g as usize] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(g);
            for &x in &h.members {
                coset_of[self.mul(g, x) as usize] = id;
            }
        }
        CosetTable { reps, coset_of }
    }

    /// `big / normal`; `normal` must be normal in `big`.
    pub fn quotient(&self, big: &Subgroup, normal: &Subgroup) -> Quotient {
        let n = self.order();
        let mut coset_of = vec![u32::MAX; n];
        let mut reps = Vec::new();
        for &b in &big.members {
            if coset_of[b as usize] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(b);
            for &x in &normal.members {
                coset_of[self.mul(b, x) as usize] = id;
            }
        }
        let k = reps.len();
        let act = |b: u32| -> Perm {
            let images = reps.iter().map(|&r| coset_of[self.mul(b, r) as usize]).collect();
            Perm::from_images(images).expect("coset action is a permutation")
        };
        let gens: Vec<Perm> = big.gens.iter().map(|&b| act(b)).collect();
        let group = generate_group_with_cap(k, &gens, usize::MAX).expect("quotient within parent order");
        let mut section = vec![0u32; k];
        let mut by_coset = vec![0u32; k];
        for (c, &r) in reps.iter().enumerate() {
            let q = group.index_of(&act(r)).expect("coset action in quotient");
            section[q as usize] = r;
            by_coset[c] = q;
        }
        let projection = coset_of.iter().map(|&c| if c == u32::MAX { u32::MAX } else { by_coset[c as usize] }).collect();
        Quotient { group, section, projection }
    }

    /// `WH = NH/H`.
    pub fn weyl_group(&self, h: &Subgroup) -> Quotient {
        self.quotient(&self.normalizer(h), h)
    }
}
