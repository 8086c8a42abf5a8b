//! The component category Π₀(G, X).
//!
//! An object is a pair (H, C) of a subgroup class representative and a Weyl
//! orbit of components of `X^H`, represented by the component through its
//! least vertex (the basepoint). Morphisms `y → x` with `y = (K, C_y)` and
//! `x = (H, C_x)` are the cosets `gH` with `g⁻¹Kg ⊆ H` and `g·b_x ∈ C_y`.

use crate::context::GroupContext;
use crate::error::{Error, Result};
use crate::gcomplex::{fixed_components, fixed_vertices, FixedData, GSimplicialComplex};
use crate::group::{Field, Subgroup};
use crate::rational::Rational;
use num_traits::Zero;

#[derive(Clone, Debug)]
pub struct CatObject {
    pub class: usize,
    pub orbit: usize,
    /// representative component of `X^H`
    pub component: usize,
    pub basepoint: u32,
    /// `NH_C`, the stabilizer of the representative component in `NH`
    pub stabilizer: Subgroup,
    /// `|WH_C|`
    pub weyl_order: usize,
}

#[derive(Clone, Debug)]
pub struct MorOrbit {
    /// indices into `MorSet::cosets`
    pub members: Vec<usize>,
    /// order of the stabilizer in `WK_y`
    pub stabilizer_order: usize,
}

#[derive(Clone, Debug)]
pub struct MorSet {
    /// least element of each coset `gH`
    pub cosets: Vec<u32>,
    pub orbits: Vec<MorOrbit>,
}

impl MorSet {
    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct ComponentCategory {
    pub objects: Vec<CatObject>,
    /// `mor[y][x]`
    pub mor: Vec<Vec<MorSet>>,
}

/// Cosets `gH` with `g⁻¹Kg ⊆ H` and `g·b ∈ target`, orbits under left
/// multiplication by `acting` (which must contain `K` and preserve `target`).
pub fn mor_cosets(
    ctx: &GroupContext,
    x: &GSimplicialComplex,
    k: &Subgroup,
    in_target: impl Fn(u32) -> bool,
    acting: &Subgroup,
    h: &Subgroup,
    basepoint: u32,
) -> MorSet {
    let g = ctx.group();
    let table = g.left_cosets(h);
    let cosets: Vec<u32> = table
        .reps
        .iter()
        .copied()
        .filter(|&r| k.gen_indices().iter().all(|&s| h.contains(g.conj(s, r))))
        .filter(|&r| in_target(x.action(r).apply(basepoint as usize) as u32))
        .collect();
    let pos = |c: u32| cosets.iter().position(|&r| table.coset_of[r as usize] == c);
    let mut seen = vec![false; cosets.len()];
    let mut orbits = Vec::new();
    for i in 0..cosets.len() {
        if seen[i] {
            continue;
        }
        let mut members = Vec::new();
        let mut stab = 0usize;
        for &n in acting.members() {
            let j = pos(table.coset_of[g.mul(n, cosets[i]) as usize]).expect("action preserves the morphism set");
            if j == i {
                stab += 1;
            }
            if !seen[j] {
                seen[j] = true;
                members.push(j);
            }
        }
        members.sort_unstable();
        orbits.push(MorOrbit { members, stabilizer_order: stab / k.order() });
    }
    MorSet { cosets, orbits }
}

impl ComponentCategory {
    pub fn compute(ctx: &GroupContext, x: &GSimplicialComplex, fd: &FixedData) -> Self {
        let objects: Vec<CatObject> = fd
            .objects
            .iter()
            .map(|o| {
                let orbit = &fd.classes[o.class].orbits[o.orbit];
                CatObject {
                    class: o.class,
                    orbit: o.orbit,
                    component: orbit.rep(),
                    basepoint: orbit.basepoint,
                    stabilizer: orbit.stabilizer.clone(),
                    weyl_order: orbit.weyl_stabilizer_order,
                }
            })
            .collect();
        let mor = objects
            .iter()
            .map(|y| {
                let cf = &fd.classes[y.class];
                let comp = y.component as u32;
                objects
                    .iter()
                    .map(|xo| {
                        mor_cosets(
                            ctx,
                            x,
                            ctx.rep(y.class),
                            |v| cf.component_of[v as usize] == comp,
                            &y.stabilizer,
                            ctx.rep(xo.class),
                            xo.basepoint,
                        )
                    })
                    .collect()
            })
            .collect();
        ComponentCategory { objects, mor }
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    /// `M[y][x] = Σ_{WK_y-orbits of mor(y,x)} 1/|stabilizer|`.
    pub fn char_map_matrix(&self) -> Vec<Vec<Rational>> {
        self.mor
            .iter()
            .map(|row| {
                row.iter()
                    .map(|m| {
                        m.orbits.iter().fold(Rational::zero(), |acc, o| acc + Rational::new(1.into(), (o.stabilizer_order as i64).into()))
                    })
                    .collect()
            })
            .collect()
    }

    /// `ch^G(u)` for `u` over the objects.
    pub fn apply_ch(&self, u: &[i64]) -> Vec<Rational> {
        self.char_map_matrix()
            .iter()
            .map(|row| row.iter().zip(u).fold(Rational::zero(), |acc, (m, &c)| acc + m * Rational::from_integer(c.into())))
            .collect()
    }
}

/// One element of the target of α_F(x).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaEntry {
    /// F-conjugacy class of G (index into G's partition) and its representative
    pub g_class: usize,
    pub g: u32,
    /// representative component of `X^{⟨g⟩}`, by its least vertex
    pub component_vertex: u32,
    /// representative coset `σH` of the `Z_F(g)`-orbit
    pub sigma: u32,
    /// the F-class `(σ⁻¹ g σ)_F` of H (index into H's partition)
    pub h_class: usize,
}

/// α_F(x): pairs every F-class of `H_x` with a (class of g, component orbit,
/// morphism orbit) triple; fails if that assignment is not bijective.
pub fn alpha_f(ctx: &GroupContext, x: &GSimplicialComplex, obj: &CatObject, field: Field) -> Result<Vec<AlphaEntry>> {
    let g = ctx.group();
    let h = ctx.rep(obj.class);
    let hsub = ctx.sub(obj.class)?;
    let hf = hsub.fclasses(field);
    let gf = g.f_conjugacy_classes(field);
    let mut entries = Vec::new();
    for gc in 0..gf.len() {
        let elt = gf.rep(gc);
        let cyc = g.closure(&[elt]);
        let cf = g.centralizer_f(elt, field);
        let keep = fixed_vertices(x, &[elt]);
        let (component_of, components) = fixed_components(x, &keep);
        let mut orbit_done = vec![false; components.len()];
        for comp in 0..components.len() {
            if orbit_done[comp] {
                continue;
            }
            let b = components[comp][0];
            let mut stab = Vec::new();
            for &c in cf.members() {
                let t = component_of[x.action(c).apply(b as usize)] as usize;
                orbit_done[t] = true;
                if t == comp {
                    stab.push(c);
                }
            }
            let stab = g.subgroup_from_members(&stab);
            let comp32 = comp as u32;
            let mor = mor_cosets(ctx, x, &cyc, |v| component_of[v as usize] == comp32, &stab, h, obj.basepoint);
            for orbit in &mor.orbits {
                let sigma = mor.cosets[orbit.members[0]];
                let conj = g.conj(elt, sigma);
                let local = hsub.local(conj).ok_or_else(|| Error::BijectionFailure("conjugate outside H".into()))?;
                let h_class = hf.class_of[local as usize] as usize;
                for &m in &orbit.members[1..] {
                    let other = hsub.local(g.conj(elt, mor.cosets[m])).expect("conjugate in H");
                    if hf.class_of[other as usize] as usize != h_class {
                        return Err(Error::BijectionFailure("orbit maps to several classes".into()));
                    }
                }
                entries.push(AlphaEntry { g_class: gc, g: elt, component_vertex: b, sigma, h_class });
            }
        }
    }
    let mut hit = vec![false; hf.len()];
    for e in &entries {
        if std::mem::replace(&mut hit[e.h_class], true) {
            return Err(Error::BijectionFailure(format!("class {} of H is hit twice", e.h_class)));
        }
    }
    if let Some(miss) = hit.iter().position(|&b| !b) {
        return Err(Error::BijectionFailure(format!("class {miss} of H is not hit")));
    }
    Ok(entries)
}
