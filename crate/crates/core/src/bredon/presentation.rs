//! H₀ of the component category with coefficients in R_F, as a finitely
//! presented abelian group: one generator per (object, F-irreducible of its
//! isotropy group), one relation per morphism and basis element.

use super::snf::{smith_normal_form, Snf};
use crate::category::{mor_cosets, ComponentCategory};
use crate::context::GroupContext;
use crate::error::{Error, Result};
use crate::gcomplex::{FixedData, GSimplicialComplex};
use crate::group::Field;
use crate::rational::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

#[derive(Clone, Debug)]
pub struct FinAbPresentation {
    pub generators: usize,
    /// deduplicated nonzero relation rows
    pub relations: Vec<Vec<BigInt>>,
    pub snf: Snf,
}

impl FinAbPresentation {
    pub fn new(generators: usize, rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let mut relations: Vec<Vec<BigInt>> = rows.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())).collect();
        relations.sort();
        relations.dedup();
        let snf = smith_normal_form(&relations, generators);
        if !snf.verify(&relations) {
            return Err(Error::InternalInconsistency("Smith normal form transforms do not reproduce the diagonal".into()));
        }
        Ok(FinAbPresentation { generators, relations, snf })
    }

    pub fn free_rank(&self) -> usize {
        self.generators - self.snf.rank()
    }

    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.snf.factors.iter().filter(|d| !d.is_one()).cloned().collect()
    }

    fn to_snf(&self, c: &[BigInt]) -> Vec<BigInt> {
        (0..self.generators)
            .map(|j| (0..self.generators).fold(BigInt::zero(), |acc, k| if c[k].is_zero() { acc } else { acc + &c[k] * &self.snf.v[k][j] }))
            .collect()
    }

    /// Coordinates in the Smith basis, torsion entries reduced to `[0, dᵢ)`.
    pub fn normal_form(&self, c: &[BigInt]) -> Vec<BigInt> {
        let mut y = self.to_snf(c);
        for (yi, d) in y.iter_mut().zip(&self.snf.factors) {
            *yi = yi.mod_floor(d);
        }
        y
    }

    pub fn class(&self, coords: Vec<BigInt>) -> H0Class {
        let normal = self.normal_form(&coords);
        H0Class { coords, normal }
    }

    /// Coordinates of `ℚ ⊗ c` on the free part.
    pub fn rational_coords(&self, c: &[Rational]) -> Vec<Rational> {
        let r = self.snf.rank();
        (r..self.generators)
            .map(|j| {
                (0..self.generators).fold(Rational::zero(), |acc, k| {
                    if c[k].is_zero() {
                        acc
                    } else {
                        acc + &c[k] * Rational::from_integer(self.snf.v[k][j].clone())
                    }
                })
            })
            .collect()
    }

    /// Generator coordinates of the `i`-th free basis vector.
    pub fn free_generator(&self, i: usize) -> Vec<BigInt> {
        self.snf.v_inv[self.snf.rank() + i].clone()
    }
}

/// An element of H₀ with its normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H0Class {
    pub coords: Vec<BigInt>,
    pub normal: Vec<BigInt>,
}

impl H0Class {
    pub fn is_zero(&self) -> bool {
        self.normal.iter().all(|x| x.is_zero())
    }

    /// Order in `⊕ ℤ/dᵢ ⊕ ℤ^r`; `None` for infinite order.
    pub fn order(&self, pres: &FinAbPresentation) -> Option<BigInt> {
        let r = pres.snf.rank();
        if self.normal[r..].iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(self.normal[..r].iter().zip(&pres.snf.factors).fold(BigInt::one(), |acc, (y, d)| acc.lcm(&(d / y.gcd(d)))))
    }
}

#[derive(Clone, Debug)]
pub struct BredonH0 {
    pub field: Field,
    /// subgroup class of each object
    pub object_class: Vec<usize>,
    pub offsets: Vec<usize>,
    pub pres: FinAbPresentation,
}

impl BredonH0 {
    pub fn build(ctx: &GroupContext, cat: &ComponentCategory, field: Field) -> Result<Self> {
        let object_class: Vec<usize> = cat.objects.iter().map(|o| o.class).collect();
        let mut offsets = Vec::with_capacity(object_class.len() + 1);
        let mut n = 0;
        for &c in &object_class {
            offsets.push(n);
            n += ctx.basis(c, field)?.len();
        }
        offsets.push(n);
        let mut rows = Vec::new();
        for (y, row) in cat.mor.iter().enumerate() {
            for (x, mor) in row.iter().enumerate() {
                for &g in &mor.cosets {
                    let m = ctx.induction_map(field, object_class[y], object_class[x], g)?;
                    for (b, col) in m.iter().enumerate() {
                        let mut rel = vec![BigInt::zero(); n];
                        rel[offsets[y] + b] += 1;
                        for (j, &c) in col.iter().enumerate() {
                            rel[offsets[x] + j] -= c;
                        }
                        rows.push(rel);
                    }
                }
            }
        }
        Ok(BredonH0 { field, object_class, offsets, pres: FinAbPresentation::new(n, rows)? })
    }

    pub fn generators(&self) -> usize {
        self.pres.generators
    }

    pub fn num_objects(&self) -> usize {
        self.object_class.len()
    }

    /// Object owning generator `i`.
    pub fn object_of_generator(&self, i: usize) -> usize {
        self.offsets.partition_point(|&o| o <= i) - 1
    }

    /// Structure map `s_x: R_F(H_x) → generators`.
    pub fn structure_map(&self, x: usize, v: &[i64]) -> Vec<BigInt> {
        let mut c = vec![BigInt::zero(); self.generators()];
        for (i, &a) in v.iter().enumerate() {
            c[self.offsets[x] + i] += a;
        }
        c
    }

    pub fn class(&self, coords: Vec<BigInt>) -> H0Class {
        self.pres.class(coords)
    }

    /// Applies a generator-indexed matrix (columns are images) and checks that
    /// every relation is sent into the relations of `target`.
    fn checked_matrix(&self, cols: Vec<Vec<i64>>, target: &FinAbPresentation, what: &str) -> Result<Vec<Vec<i64>>> {
        for rel in &self.pres.relations {
            let img = apply_big(&cols, rel, target.generators);
            if !target.class(img).is_zero() {
                return Err(Error::RelationMismatch(format!("{what} does not vanish on a relation")));
            }
        }
        Ok(cols)
    }
}

/// `Σ c_i · cols[i]`.
pub fn apply_big(cols: &[Vec<i64>], c: &[BigInt], len: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); len];
    for (col, x) in cols.iter().zip(c) {
        if !x.is_zero() {
            for (o, &y) in out.iter_mut().zip(col) {
                if y != 0 {
                    *o += x * y;
                }
            }
        }
    }
    out
}

/// Index of the trivial rational representation in the Q-basis of class `c`.
pub fn trivial_index(ctx: &GroupContext, c: usize, field: Field) -> Result<usize> {
    ctx.basis(c, field)?
        .irreducibles
        .iter()
        .position(|irr| irr.constituents == [0] && irr.multiplier == 1)
        .ok_or_else(|| Error::InternalInconsistency("trivial representation missing from basis".into()))
}

/// e₁: U^G(X) → H₀(X; R_Q), `[x] ↦ s_x([Q])`.
pub fn e1(ctx: &GroupContext, hq: &BredonH0, u: &[i64]) -> Result<H0Class> {
    let mut c = vec![BigInt::zero(); hq.generators()];
    for (x, &a) in u.iter().enumerate() {
        c[hq.offsets[x] + trivial_index(ctx, hq.object_class[x], Field::Q)?] += a;
    }
    Ok(hq.class(c))
}

/// Change of fields on generators, verified on every relation.
pub fn e2_matrix(ctx: &GroupContext, hq: &BredonH0, hr: &BredonH0) -> Result<Vec<Vec<i64>>> {
    if hq.field != Field::Q || hr.field != Field::R || hq.object_class != hr.object_class {
        return Err(Error::InvalidInput("e2 needs the rational and real presentations of one complex".into()));
    }
    let mut cols = Vec::with_capacity(hq.generators());
    for (x, &c) in hq.object_class.iter().enumerate() {
        let m = ctx.q_to_r_map(c)?;
        for col in m.iter() {
            cols.push(hr.structure_map(x, col).iter().map(|v| i64::try_from(v).expect("small")).collect());
        }
    }
    hq.checked_matrix(cols, &hr.pres, "change of fields")
}

pub fn e2(hr: &BredonH0, e2m: &[Vec<i64>], c: &H0Class) -> H0Class {
    hr.class(apply_big(e2m, &c.coords, hr.generators()))
}

/// c_*: H₀(X; R_F) → R_F(G) induced by the map to a point.
pub fn pushforward_to_point_matrix(ctx: &GroupContext, h: &BredonH0) -> Result<Vec<Vec<i64>>> {
    let top = ctx.top();
    let target = FinAbPresentation::new(ctx.basis(top, h.field)?.len(), Vec::new())?;
    let mut cols = Vec::with_capacity(h.generators());
    for &c in &h.object_class {
        let m = ctx.induction_map(h.field, c, top, 0)?;
        cols.extend(m.iter().cloned());
    }
    h.checked_matrix(cols, &target, "induction to the whole group")
}

pub fn pushforward_to_point(cols: &[Vec<i64>], c: &H0Class) -> Vec<BigInt> {
    apply_big(cols, &c.coords, cols.first().map_or(0, |v| v.len()))
}

/// Matrix of `f_*: H₀(X; R_F) → H₀(Y; R_F)` for an equivariant simplicial vertex map.
#[allow(clippy::too_many_arguments)]
pub fn pushforward_matrix(
    ctx: &GroupContext,
    x: &GSimplicialComplex,
    cat_x: &ComponentCategory,
    hx: &BredonH0,
    y: &GSimplicialComplex,
    fd_y: &FixedData,
    cat_y: &ComponentCategory,
    hy: &BredonH0,
    vertex_map: &[u32],
) -> Result<Vec<Vec<i64>>> {
    check_equivariant(ctx, x, y, vertex_map)?;
    let trivial = ctx.group().trivial_subgroup();
    let mut cols = Vec::with_capacity(hx.generators());
    for obj in &cat_x.objects {
        let image = vertex_map[obj.basepoint as usize];
        let target =
            fd_y.object_of_vertex(obj.class, image).ok_or_else(|| Error::NotEquivariant("image of a fixed vertex is not fixed".into()))?;
        let cf = &fd_y.classes[obj.class];
        let comp = cf.component_of[image as usize];
        let h = ctx.rep(obj.class);
        let mor = mor_cosets(ctx, y, h, |v| cf.component_of[v as usize] == comp, &trivial, h, cat_y.objects[target].basepoint);
        let g = *mor.cosets.first().ok_or_else(|| Error::InternalInconsistency("no isomorphism onto the object representative".into()))?;
        for col in ctx.induction_map(hx.field, obj.class, obj.class, g)?.iter() {
            cols.push(hy.structure_map(target, col).iter().map(|v| i64::try_from(v).expect("small")).collect());
        }
    }
    hx.checked_matrix(cols, &hy.pres, "pushforward")
}

pub fn check_equivariant(ctx: &GroupContext, x: &GSimplicialComplex, y: &GSimplicialComplex, f: &[u32]) -> Result<()> {
    if f.len() != x.vertex_count() || f.iter().any(|&v| v as usize >= y.vertex_count()) {
        return Err(Error::InvalidInput("vertex map has the wrong shape".into()));
    }
    for &s in ctx.group().generator_indices() {
        for v in 0..x.vertex_count() {
            if f[x.action(s).apply(v)] as usize != y.action(s).apply(f[v] as usize) {
                return Err(Error::NotEquivariant(format!("vertex {v} under generator {s}")));
            }
        }
    }
    for s in x.all_simplices() {
        let mut img: Vec<u32> = s.iter().map(|&v| f[v as usize]).collect();
        img.sort_unstable();
        img.dedup();
        if !y.contains(&img) {
            return Err(Error::NotEquivariant("vertex map is not simplicial".into()));
        }
    }
    Ok(())
}

pub fn to_rational(c: &[BigInt]) -> Vec<Rational> {
    c.iter().map(|x| Rational::from_integer(x.clone())).collect()
}

pub fn small(c: &[BigInt]) -> Vec<i64> {
    c.iter().map(|x| i64::try_from(x).expect("coordinate fits in i64")).collect()
}
