use super::complex::{euler_of, map_simplex, GSimplicialComplex};
use super::fixed::FixedData;
use crate::context::GroupContext;
use crate::error::{Error, Result};
use crate::group::Perm;
use crate::rational::Rational;
use std::collections::HashSet;

/// Universal equivariant Euler characteristic, as coefficients over the
/// objects of the component category. The coefficient at `((H), C)` is
/// `χ(WH_C \ (C, C ∩ X^{>H}))`, counted as the alternating number of
/// `WH_C`-orbits of simplices of `C` with isotropy exactly `H`.
pub fn universal_euler_char(ctx: &GroupContext, x: &GSimplicialComplex, fd: &FixedData) -> Result<Vec<i64>> {
    let mut out = Vec::with_capacity(fd.num_objects());
    for obj in &fd.objects {
        let h = ctx.rep(obj.class);
        let orbit = &fd.classes[obj.class].orbits[obj.orbit];
        let w = orbit.weyl_stabilizer_order as i64;
        let mut by_dim: Vec<i64> = Vec::new();
        for s in fd.component_simplices(x, obj.class, orbit.rep()) {
            if fd.stabilizer(x, s).len() == h.order() {
                let d = s.len() - 1;
                if by_dim.len() <= d {
                    by_dim.resize(d + 1, 0);
                }
                by_dim[d] += 1;
            }
        }
        let mut coeff = 0i64;
        for (d, &count) in by_dim.iter().enumerate() {
            if count % w != 0 {
                return Err(Error::InternalInconsistency(format!(
                    "{count} free cells of dimension {d} not divisible by Weyl stabilizer order {w}"
                )));
            }
            coeff += if d % 2 == 0 { count / w } else { -count / w };
        }
        out.push(coeff);
    }
    Ok(out)
}

/// `Σ_p (−1)^p Σ_{A·σ} 1/|A_σ|` for the group `A = perms / kernel` acting on
/// a finite set of simplices closed under `perms`. Checks the result
/// against `χ · kernel / |perms|`.
pub fn orbifold_euler_char(simplices: &[&Vec<u32>], perms: &[&Perm], kernel: usize) -> Result<Rational> {
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut total = Rational::from_integer(0.into());
    for s in simplices {
        if seen.contains(*s) {
            continue;
        }
        let mut stab = 0usize;
        for p in perms {
            let img = map_simplex(p, s);
            if img == **s {
                stab += 1;
            }
            seen.insert(img);
        }
        let sign: i64 = if s.len() % 2 == 1 { 1 } else { -1 };
        total += Rational::new((sign * kernel as i64).into(), (stab as i64).into());
    }
    let expected = Rational::new((euler_of(simplices) * kernel as i64).into(), (perms.len() as i64).into());
    if total != expected {
        return Err(Error::InternalInconsistency(format!("orbifold Euler characteristic {total} differs from {expected}")));
    }
    Ok(total)
}

/// Orbifold Euler characteristics `χ^{Q WK_y}(X^K(y))` for every object `y`.
pub fn orbifold_vector(ctx: &GroupContext, x: &GSimplicialComplex, fd: &FixedData) -> Result<Vec<Rational>> {
    fd.objects
        .iter()
        .map(|obj| {
            let orbit = &fd.classes[obj.class].orbits[obj.orbit];
            let simplices = fd.component_simplices(x, obj.class, orbit.rep());
            let perms: Vec<&Perm> = orbit.stabilizer.members().iter().map(|&m| x.action(m)).collect();
            orbifold_euler_char(&simplices, &perms, ctx.rep(obj.class).order())
        })
        .collect()
}

/// `c_*: U^G(X) → A(G)`: adds each coefficient onto `[G/H]`.
pub fn pushforward_to_point(ctx: &GroupContext, fd: &FixedData, u: &[i64]) -> Vec<i64> {
    let mut a = vec![0i64; ctx.num_classes()];
    for (obj, &c) in fd.objects.iter().zip(u) {
        a[obj.class] += c;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::super::{builtin, FixedData};
    use super::*;
    use crate::group::catalog;
    use crate::rational::int;

    #[test]
    fn sphere3_universal_euler() {
        let (g, x) = builtin::s3_sphere3();
        let ctx = GroupContext::new(g);
        let fd = FixedData::compute(&ctx, &x);
        let orders: Vec<usize> = fd.objects.iter().map(|o| ctx.rep(o.class).order()).collect();
        assert_eq!(orders, vec![1, 2, 3, 6, 6]);
        let u = universal_euler_char(&ctx, &x, &fd).unwrap();
        assert_eq!(u, vec![1, -2, -1, 1, 1]);
        assert_eq!(pushforward_to_point(&ctx, &fd, &u), vec![1, -2, -1, 2]);
        assert_eq!(orbifold_vector(&ctx, &x, &fd).unwrap(), vec![int(0), int(0), int(0), int(1), int(1)]);
        // fixed-set profile
        let comps: Vec<usize> = fd.classes.iter().map(|c| c.components.len()).collect();
        assert_eq!(comps, vec![1, 1, 1, 2]);
        assert_eq!(fd.classes[2].orbits[0].weyl_stabilizer_order, 2);
    }

    #[test]
    fn sphere5_fixed_sets() {
        let (g, x) = builtin::s3_sphere5();
        let ctx = GroupContext::new(g);
        let fd = FixedData::compute(&ctx, &x);
        let chis: Vec<i64> = (0..4)
            .map(|c| {
                assert_eq!(fd.classes[c].components.len(), 1);
                euler_of(&fd.component_simplices(&x, c, 0))
            })
            .collect();
        assert_eq!(chis, vec![0, 0, 0, 2]);
        let u = universal_euler_char(&ctx, &x, &fd).unwrap();
        assert_eq!(pushforward_to_point(&ctx, &fd, &u)[3], 2);
    }

    #[test]
    fn free_and_trivial_actions() {
        let z2 = catalog::cyclic(2);
        let ctx = GroupContext::new(z2.clone());
        // antipodal square
        let sq = GSimplicialComplex::new(
            &z2,
            4,
            &[vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]],
            vec![Perm::from_images(vec![2, 3, 0, 1]).unwrap()],
        )
        .unwrap();
        let fd = FixedData::compute(&ctx, &sq);
        assert_eq!(fd.num_objects(), 1);
        assert_eq!(universal_euler_char(&ctx, &sq, &fd).unwrap(), vec![0]);
        // two fixed points
        let s0 = GSimplicialComplex::new(&z2, 2, &[], vec![Perm::identity(2)]).unwrap();
        let simplices: Vec<&Vec<u32>> = s0.all_simplices().collect();
        let perms: Vec<&Perm> = (0..2).map(|g| s0.action(g)).collect();
        assert_eq!(orbifold_euler_char(&simplices, &perms, 1).unwrap(), int(1));
        let fd = FixedData::compute(&ctx, &s0);
        assert_eq!(universal_euler_char(&ctx, &s0, &fd).unwrap(), vec![0, 0, 1, 1]);
    }
}
