//! Per-group cache of subgroup classes and their representation theory.
//!
//! Everything downstream works with conjugacy-class representatives of
//! subgroups; maps between them are written `k ↦ g⁻¹kg` for an element `g`
//! of the ambient group with `g⁻¹Kg ⊆ H`.

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::{FClassPartition, Field, FiniteGroup, Subgroup, SubgroupClassTable};
use crate::rational::Rational;
use crate::rep::{galois_orbits, CharacterTable, RepBasis};
use num_integer::Integer;
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

/// Invariant string identifying a group up to the data it is computed from:
/// order plus the multiset of (class size, element order) pairs.
pub fn fingerprint(g: &FiniteGroup) -> String {
    let classes = g.f_conjugacy_classes(Field::C);
    let mut pairs: Vec<(usize, u32)> = (0..classes.len()).map(|c| (classes.size(c), g.elem_order(classes.rep(c)))).collect();
    pairs.sort_unstable();
    let body: Vec<String> = pairs.iter().map(|(s, o)| format!("{s}x{o}")).collect();
    format!("{}:{}", g.order(), body.join(","))
}

/// How rational Schur indices are settled.
#[derive(Clone, Debug, Default)]
pub struct SchurPolicy {
    /// Fail instead of falling back to the lower bound.
    pub strict: bool,
    /// Explicit indices keyed by (group fingerprint, Galois orbit position).
    pub overrides: BTreeMap<(String, usize), u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SchurInfo {
    /// complex constituents of the orbit
    pub orbit: Vec<usize>,
    pub lower: u32,
    pub upper: u32,
    pub index: u32,
    pub certified: bool,
}

#[derive(Debug)]
pub struct SubgroupData {
    pub class: usize,
    pub subgroup: Subgroup,
    pub group: FiniteGroup,
    /// local element -> ambient element
    pub parent_index: Vec<u32>,
    local: Vec<u32>,
    pub table: CharacterTable,
    fclasses: [FClassPartition; 3],
    complex: Arc<RepBasis>,
    real: Arc<RepBasis>,
}

impl SubgroupData {
    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Local index of an ambient element, if it lies in the subgroup.
    pub fn local(&self, x: u32) -> Option<u32> {
        let l = self.local[x as usize];
        (l != u32::MAX).then_some(l)
    }

    /// Conjugacy class (in the table's numbering) of an ambient element.
    pub fn class_of(&self, x: u32) -> usize {
        let l = self.local(x).expect("element of the subgroup");
        self.table.classes().class_of[l as usize] as usize
    }

    pub fn fclasses(&self, field: Field) -> &FClassPartition {
        &self.fclasses[field as usize]
    }
}

#[derive(Debug)]
pub struct RationalData {
    pub basis: Arc<RepBasis>,
    /// aligned with `basis.irreducibles`
    pub schur: Vec<SchurInfo>,
}

/// A representation-ring map as the list of images of the source basis.
pub type RingMap = Arc<Vec<Vec<i64>>>;

type InductionKey = (Field, usize, usize, Vec<u32>);

#[derive(Debug)]
pub struct GroupContext {
    group: FiniteGroup,
    classes: SubgroupClassTable,
    policy: SchurPolicy,
    subs: Vec<OnceLock<Result<Arc<SubgroupData>>>>,
    rational: Vec<OnceLock<Result<Arc<RationalData>>>>,
    induction: Mutex<HashMap<InductionKey, RingMap>>,
    q_to_r: Vec<OnceLock<Result<RingMap>>>,
}

impl GroupContext {
    pub fn new(group: FiniteGroup) -> Self {
        Self::with_policy(group, SchurPolicy::default())
    }

    pub fn with_policy(group: FiniteGroup, policy: SchurPolicy) -> Self {
        let classes = group.subgroup_classes();
        let n = classes.len();
        GroupContext {
            group,
            classes,
            policy,
            subs: (0..n).map(|_| OnceLock::new()).collect(),
            rational: (0..n).map(|_| OnceLock::new()).collect(),
            induction: Mutex::new(HashMap::new()),
            q_to_r: (0..n).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn classes(&self) -> &SubgroupClassTable {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// Class index of the whole group.
    pub fn top(&self) -> usize {
        self.classes.len() - 1
    }

    pub fn rep(&self, c: usize) -> &Subgroup {
        self.classes.rep(c)
    }

    pub fn weyl_order(&self, c: usize) -> usize {
        self.classes.classes[c].weyl_order()
    }

    pub fn sub(&self, c: usize) -> Result<Arc<SubgroupData>> {
        self.subs[c]
            .get_or_init(|| {
                let subgroup = self.rep(c).clone();
                let (group, parent_index) = self.group.subgroup_as_group(&subgroup);
                let mut local = vec![u32::MAX; self.group.order()];
                for (i, &x) in parent_index.iter().enumerate() {
                    local[x as usize] = i as u32;
                }
                let table = CharacterTable::compute(&group)?;
                let fclasses = Field::ALL.map(|f| group.f_conjugacy_classes(f));
                let complex = Arc::new(RepBasis::complex(&table));
                let real = Arc::new(RepBasis::real(&table));
                Ok(Arc::new(SubgroupData { class: c, subgroup, group, parent_index, local, table, fclasses, complex, real }))
            })
            .clone()
    }

    pub fn basis(&self, c: usize, field: Field) -> Result<Arc<RepBasis>> {
        match field {
            Field::C => Ok(self.sub(c)?.complex.clone()),
            Field::R => Ok(self.sub(c)?.real.clone()),
            Field::Q => Ok(self.rational(c)?.basis.clone()),
        }
    }

    pub fn rational(&self, c: usize) -> Result<Arc<RationalData>> {
        self.rational[c].get_or_init(|| self.compute_rational(c)).clone()
    }

    pub fn schur_info(&self, c: usize) -> Result<Vec<SchurInfo>> {
        Ok(self.rational(c)?.schur.clone())
    }

    /// Schur indices from certified bounds. The lower bound is the real Schur
    /// index; the upper bound is the gcd, over rational irreducibles ψ of proper
    /// subgroups, of (upper bound for ψ) · ⟨Ind ψ, χ⟩, since inducing a rational
    /// representation gives a rational representation.
    fn compute_rational(&self, c: usize) -> Result<Arc<RationalData>> {
        let sub = self.sub(c)?;
        let t = &sub.table;
        let orbits = galois_orbits(t);
        let mut upper: Vec<u64> = t.degrees().iter().map(|&d| d as u64).collect();
        let h = self.rep(c);
        for k in 0..c {
            let kclass = &self.classes.classes[k];
            if kclass.rep.order() >= h.order() || !h.order().is_multiple_of(kclass.rep.order()) {
                continue;
            }
            let kdata = self.rational(k)?;
            let ksub = self.sub(k)?;
            for (l, &g) in kclass.conjugates.iter().zip(&kclass.conjugators) {
                if !l.is_subgroup_of(h) {
                    continue;
                }
                for (irr, info) in kdata.basis.irreducibles.iter().zip(&kdata.schur) {
                    let a = Rational::from_integer(irr.multiplier.into());
                    let theta: Vec<Cyclotomic> = irr.character.iter().map(|v| v.scale(&a.recip())).collect();
                    let ind = self.induce_values(&ksub, &sub, g, &theta);
                    for (i, u) in upper.iter_mut().enumerate() {
                        let m = t
                            .inner_rational(&ind, t.character(i))
                            .filter(|q| q.is_integer())
                            .ok_or_else(|| Error::InternalInconsistency("non-integral multiplicity in induced character".into()))?;
                        let m = u64::try_from(m.to_integer()).unwrap_or(0);
                        *u = u.gcd(&(info.upper as u64 * m));
                    }
                }
            }
        }
        let fp = fingerprint(&sub.group);
        let mut schur_by_orbit = Vec::with_capacity(orbits.len());
        for (pos, orbit) in orbits.iter().enumerate() {
            let lower = if t.fs_indicator(orbit[0]) == -1 { 2 } else { 1 };
            let up = orbit.iter().map(|&i| upper[i]).fold(0u64, |a, b| a.gcd(&b)) as u32;
            if !up.is_multiple_of(lower) {
                return Err(Error::InternalInconsistency(format!("Schur bounds {lower} and {up} are incompatible")));
            }
            let certified = lower == up;
            let index = if let Some(&v) = self.policy.overrides.get(&(fp.clone(), pos)) {
                v
            } else if certified {
                lower
            } else if self.policy.strict {
                return Err(Error::SchurIndexUnknown { group: fp, orbit: pos });
            } else {
                lower
            };
            schur_by_orbit.push(SchurInfo { orbit: orbit.clone(), lower, upper: up, index, certified });
        }
        let indices: Vec<u32> = schur_by_orbit.iter().map(|s| s.index).collect();
        let basis = RepBasis::rational(t, &indices);
        let schur = basis
            .irreducibles
            .iter()
            .map(|irr| schur_by_orbit.iter().find(|s| s.orbit == irr.constituents).expect("orbit present").clone())
            .collect();
        Ok(Arc::new(RationalData { basis: Arc::new(basis), schur }))
    }

    /// Induces class-function values from `ksub` to `hsub` along `k ↦ g⁻¹kg`.
    pub fn induce_values(&self, ksub: &SubgroupData, hsub: &SubgroupData, g: u32, theta: &[Cyclotomic]) -> Vec<Cyclotomic> {
        let ht = &hsub.table;
        let mut bucket = vec![Cyclotomic::zero(ht.exponent()); ht.num_classes()];
        for &l in &ksub.parent_index {
            let x = self.group.conj(l, g);
            bucket[hsub.class_of(x)] += &theta[ksub.class_of(l)];
        }
        let kh = Rational::new(hsub.order().into(), ksub.order().into());
        bucket.iter().enumerate().map(|(c, v)| v.scale(&(&kh / Rational::from_integer(ht.class_size(c).into())))).collect()
    }

    /// Restricts class-function values of `hsub` to `ksub` along `k ↦ g⁻¹kg`.
    pub fn restrict_values(&self, ksub: &SubgroupData, hsub: &SubgroupData, g: u32, chi: &[Cyclotomic]) -> Vec<Cyclotomic> {
        let kt = &ksub.table;
        (0..kt.num_classes())
            .map(|c| {
                let l = ksub.parent_index[kt.classes().rep(c) as usize];
                chi[hsub.class_of(self.group.conj(l, g))].clone()
            })
            .collect()
    }

    fn check_embedding(&self, k: usize, h: usize, g: u32) -> Result<()> {
        let l = self.group.conjugate_subgroup(self.rep(k), g);
        if !l.is_subgroup_of(self.rep(h)) {
            return Err(Error::InvalidInput(format!("conjugate of subgroup class {k} by element {g} is not contained in class {h}")));
        }
        Ok(())
    }

    /// Induction `R_F(K) → R_F(H)` along `k ↦ g⁻¹kg`, as images of the basis of R_F(K).
    pub fn induction_map(&self, field: Field, k: usize, h: usize, g: u32) -> Result<RingMap> {
        self.check_embedding(k, h, g)?;
        let images: Vec<u32> = self.rep(k).gen_indices().iter().map(|&x| self.group.conj(x, g)).collect();
        let key = (field, k, h, images);
        if let Some(m) = self.induction.lock().unwrap().get(&key) {
            return Ok(m.clone());
        }
        let ksub = self.sub(k)?;
        let hsub = self.sub(h)?;
        let kb = self.basis(k, field)?;
        let hb = self.basis(h, field)?;
        let cols = kb
            .irreducibles
            .iter()
            .map(|irr| hb.decompose(&hsub.table, &self.induce_values(&ksub, &hsub, g, &irr.character)))
            .collect::<Result<Vec<_>>>()?;
        let m = Arc::new(cols);
        self.induction.lock().unwrap().insert(key, m.clone());
        Ok(m)
    }

    pub fn induce(&self, field: Field, k: usize, h: usize, g: u32, v: &[i64]) -> Result<Vec<i64>> {
        let m = self.induction_map(field, k, h, g)?;
        Ok(apply(&m, v, self.basis(h, field)?.len()))
    }

    pub fn restrict(&self, field: Field, k: usize, h: usize, g: u32, v: &[i64]) -> Result<Vec<i64>> {
        self.check_embedding(k, h, g)?;
        let ksub = self.sub(k)?;
        let hsub = self.sub(h)?;
        let chi = self.basis(h, field)?.character_of(&hsub.table, v);
        self.basis(k, field)?.decompose(&ksub.table, &self.restrict_values(&ksub, &hsub, g, &chi))
    }

    /// Change of fields `R_Q(H) → R_R(H)` for the class representative `H`.
    pub fn q_to_r_map(&self, c: usize) -> Result<RingMap> {
        self.q_to_r[c]
            .get_or_init(|| {
                let sub = self.sub(c)?;
                let q = self.basis(c, Field::Q)?;
                let cols = q.irreducibles.iter().map(|irr| sub.real.decompose(&sub.table, &irr.character)).collect::<Result<Vec<_>>>()?;
                Ok(Arc::new(cols))
            })
            .clone()
    }

    pub fn change_fields_q_to_r(&self, c: usize, v: &[i64]) -> Result<Vec<i64>> {
        let m = self.q_to_r_map(c)?;
        Ok(apply(&m, v, self.basis(c, Field::R)?.len()))
    }

    /// Character of the permutation representation on `G/H`, as values on the
    /// conjugacy classes of the whole group. `h` may be any subgroup.
    pub fn fixed_coset_character(&self, h: &Subgroup) -> Result<Vec<Cyclotomic>> {
        let top = self.sub(self.top())?;
        let t = &top.table;
        let cosets = self.group.left_cosets(h);
        Ok((0..t.num_classes())
            .map(|c| {
                let g = top.parent_index[t.classes().rep(c) as usize];
                let fixed = cosets.reps.iter().filter(|&&x| h.contains(self.group.conj(g, x))).count();
                Cyclotomic::from_int(1, fixed as i64)
            })
            .collect())
    }

    /// Class of `R[G/H]` in `R_R(G)` (or any field).
    pub fn perm_character(&self, h: &Subgroup, field: Field) -> Result<Vec<i64>> {
        let top = self.sub(self.top())?;
        self.basis(self.top(), field)?.decompose(&top.table, &self.fixed_coset_character(h)?)
    }

    /// Hattori–Stallings rank of `v ∈ R_F(H)` as a function on `con_F(H)`:
    /// `|(h)_F| / |H| · χ_v(h)`.
    pub fn hs_rank(&self, c: usize, field: Field, v: &[i64]) -> Result<ClassFunctionF> {
        let sub = self.sub(c)?;
        let t = &sub.table;
        let chi = self.basis(c, field)?.character_of(t, v);
        let fc = sub.fclasses(field);
        let n = Rational::from_integer(sub.order().into());
        let mut values = Vec::with_capacity(fc.len());
        for cl in &fc.classes {
            let val = &chi[t.classes().class_of[cl[0] as usize] as usize];
            if cl.iter().any(|&x| &chi[t.classes().class_of[x as usize] as usize] != val) {
                return Err(Error::InternalInconsistency(format!("character not constant on {field}-classes")));
            }
            values.push(val.scale(&(Rational::from_integer(cl.len().into()) / &n)));
        }
        Ok(ClassFunctionF { field, values })
    }
}

/// Class function on `con_F(H)` (values in the cyclotomic field; rational for F = Q).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunctionF {
    pub field: Field,
    pub values: Vec<Cyclotomic>,
}

pub fn apply(m: &[Vec<i64>], v: &[i64], target_len: usize) -> Vec<i64> {
    let mut out = vec![0i64; target_len];
    for (col, &x) in m.iter().zip(v) {
        if x != 0 {
            for (o, &y) in out.iter_mut().zip(col) {
                *o += x * y;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog;
    use crate::rational::{int, rat};

    fn s3() -> GroupContext {
        GroupContext::new(catalog::s3())
    }

    #[test]
    fn s3_inductions() {
        let ctx = s3();
        let (l2, l3, g) = (1, 2, 3);
        // R basis of S3: [R, R-, V]
        assert_eq!(ctx.induce(Field::R, l2, g, 0, &[1, 0]).unwrap(), vec![1, 0, 1]);
        assert_eq!(ctx.induce(Field::R, l3, g, 0, &[1, 0]).unwrap(), vec![1, 1, 0]);
        assert_eq!(ctx.induce(Field::R, g, g, 0, &[0, 0, 1]).unwrap(), vec![0, 0, 1]);
        assert_eq!(ctx.perm_character(ctx.rep(l2), Field::R).unwrap(), vec![1, 0, 1]);
        assert_eq!(ctx.restrict(Field::R, l3, g, 0, &[0, 0, 1]).unwrap(), vec![0, 1]);
    }

    #[test]
    fn hs_rank_examples() {
        let ctx = s3();
        let hs = ctx.hs_rank(3, Field::Q, &[1, 0, 0]).unwrap();
        let vals: Vec<Rational> = hs.values.iter().map(|v| v.to_rational().unwrap()).collect();
        // Q-classes ordered by least element; compare as a multiset keyed by order
        let sub = ctx.sub(3).unwrap();
        let fc = sub.fclasses(Field::Q);
        for (k, v) in vals.iter().enumerate() {
            let expected = match sub.group.elem_order(fc.rep(k)) {
                1 => rat(1, 6),
                2 => rat(1, 2),
                _ => rat(1, 3),
            };
            assert_eq!(*v, expected);
        }
        let z2 = GroupContext::new(catalog::cyclic(2));
        let hs = z2.hs_rank(1, Field::R, &[0, 1]).unwrap();
        let vals: Vec<Rational> = hs.values.iter().map(|v| v.to_rational().unwrap()).collect();
        assert_eq!(vals, vec![rat(1, 2), rat(-1, 2)]);
        let triv = GroupContext::new(catalog::trivial());
        assert_eq!(triv.hs_rank(0, Field::Q, &[1]).unwrap().values, vec![Cyclotomic::from_int(1, 1)]);
    }

    #[test]
    fn schur_indices_small_groups() {
        let q8 = GroupContext::new(catalog::quaternion8());
        let info = q8.schur_info(q8.top()).unwrap();
        assert!(info.iter().all(|s| s.certified));
        assert_eq!(info.iter().map(|s| s.index).max(), Some(2));
        let d4 = GroupContext::new(catalog::dihedral(4));
        assert!(d4.schur_info(d4.top()).unwrap().iter().all(|s| s.certified && s.index == 1));
    }

    #[test]
    fn change_of_fields_z3() {
        let ctx = GroupContext::new(catalog::cyclic(3));
        let top = ctx.top();
        assert_eq!(ctx.change_fields_q_to_r(top, &[1, 0]).unwrap(), vec![1, 0]);
        assert_eq!(ctx.change_fields_q_to_r(top, &[0, 1]).unwrap(), vec![0, 1]);
        let r = ctx.basis(top, Field::R).unwrap();
        assert_eq!(r.irreducibles[1].character[0].to_rational(), Some(int(2)));
    }

    #[test]
    fn strict_policy_and_overrides() {
        let g = catalog::quaternion8();
        let fp = fingerprint(&g);
        let mut policy = SchurPolicy { strict: true, ..Default::default() };
        let ctx = GroupContext::with_policy(g.clone(), policy.clone());
        assert!(ctx.rational(ctx.top()).is_ok());
        policy.overrides.insert((fp, 4), 1);
        let ctx = GroupContext::with_policy(g, policy);
        let info = ctx.schur_info(ctx.top()).unwrap();
        assert!(info.iter().any(|s| s.orbit == vec![4] && s.index == 1));
    }
}
