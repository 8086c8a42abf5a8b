//! Burnside ring A(G): marks, the marks homomorphism and j₁ into R_F(G).
//!
//! Elements are integer vectors over the subgroup classes, basis `[G/H]`.

use crate::context::GroupContext;
use crate::error::Result;
use crate::group::Field;
use crate::rational::Rational;

/// `marks[h][k] = |(G/H)^K|` for class representatives H and K.
pub fn table_of_marks(ctx: &GroupContext) -> Vec<Vec<i64>> {
    let g = ctx.group();
    (0..ctx.num_classes())
        .map(|h| {
            let hs = ctx.rep(h);
            let cosets = g.left_cosets(hs);
            (0..ctx.num_classes())
                .map(|k| {
                    let gens = ctx.rep(k).gen_indices();
                    cosets.reps.iter().filter(|&&x| gens.iter().all(|&s| hs.contains(g.conj(s, x)))).count() as i64
                })
                .collect()
        })
        .collect()
}

/// Entry at (H): `Σ_K a_K |(G/K)^H| / |WH|`.
pub fn marks_hom(ctx: &GroupContext, marks: &[Vec<i64>], a: &[i64]) -> Vec<Rational> {
    (0..ctx.num_classes())
        .map(|h| {
            let s: i64 = a.iter().enumerate().map(|(k, &ak)| ak * marks[k][h]).sum();
            Rational::new(s.into(), (ctx.weyl_order(h) as i64).into())
        })
        .collect()
}

/// Columns: images `j₁[G/H] = [F[G/H]]` in the F-basis of R_F(G).
pub fn j1_matrix(ctx: &GroupContext, field: Field) -> Result<Vec<Vec<i64>>> {
    (0..ctx.num_classes()).map(|h| ctx.perm_character(ctx.rep(h), field)).collect()
}

pub fn j1(ctx: &GroupContext, field: Field, a: &[i64]) -> Result<Vec<i64>> {
    let m = j1_matrix(ctx, field)?;
    Ok(crate::context::apply(&m, a, ctx.basis(ctx.top(), field)?.len()))
}

/// Indices of the classes of cyclic subgroups.
pub fn cyclic_classes(ctx: &GroupContext) -> Vec<usize> {
    (0..ctx.num_classes()).filter(|&c| ctx.rep(c).gen_indices().len() <= 1 || is_cyclic(ctx, c)).collect()
}

fn is_cyclic(ctx: &GroupContext, c: usize) -> bool {
    let h = ctx.rep(c);
    h.members().iter().any(|&x| ctx.group().elem_order(x) as usize == h.order())
}

/// A generator of the cyclic class representative.
pub fn cyclic_generator(ctx: &GroupContext, c: usize) -> u32 {
    let h = ctx.rep(c);
    *h.members().iter().find(|&&x| ctx.group().elem_order(x) as usize == h.order()).expect("cyclic subgroup")
}

/// Restriction of a vector over all subgroup classes to the cyclic ones.
pub fn project_cyclic<T: Clone>(ctx: &GroupContext, v: &[T]) -> Vec<T> {
    cyclic_classes(ctx).into_iter().map(|c| v[c].clone()).collect()
}

/// For `v ∈ R_Q(G)`: entry at cyclic (H) is `χ_v(h)/|WH|`, h a generator of H.
pub fn hs_q_of_rep(ctx: &GroupContext, v: &[i64]) -> Result<Vec<Rational>> {
    let top = ctx.sub(ctx.top())?;
    let chi = ctx.basis(ctx.top(), Field::Q)?.character_of(&top.table, v);
    Ok(cyclic_classes(ctx)
        .into_iter()
        .map(|c| {
            let val = chi[top.class_of(cyclic_generator(ctx, c))].to_rational().expect("rational character");
            val / Rational::from_integer((ctx.weyl_order(c) as i64).into())
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog;
    use crate::linalg::rank;
    use crate::rational::{int, rat};

    #[test]
    fn s3_marks() {
        let ctx = GroupContext::new(catalog::s3());
        let m = table_of_marks(&ctx);
        assert_eq!(m[1][1], 1);
        assert_eq!(m[2][2], 2);
        assert_eq!(m[0][0], 6);
        // column at the trivial subgroup is the index
        for h in 0..4 {
            assert_eq!(m[h][0] as usize, 6 / ctx.rep(h).order());
        }
        let top = marks_hom(&ctx, &m, &[0, 0, 0, 1]);
        assert_eq!(top, vec![rat(1, 6), int(1), rat(1, 2), int(1)]);
        let free = marks_hom(&ctx, &m, &[1, 0, 0, 0]);
        assert_eq!(free, vec![int(1), int(0), int(0), int(0)]);
    }

    #[test]
    fn hs_q_examples() {
        let ctx = GroupContext::new(catalog::s3());
        assert_eq!(hs_q_of_rep(&ctx, &[1, 0, 0]).unwrap(), vec![rat(1, 6), int(1), rat(1, 2)]);
        assert_eq!(hs_q_of_rep(&ctx, &[0, 0, 0]).unwrap(), vec![int(0); 3]);
        let z2 = GroupContext::new(catalog::cyclic(2));
        assert_eq!(hs_q_of_rep(&z2, &[1, 1]).unwrap(), vec![int(1), int(0)]);
    }

    #[test]
    fn square_commutes_and_j1_rank() {
        for g in [catalog::s3(), catalog::cyclic(6), catalog::dihedral(4), catalog::quaternion8(), catalog::alternating(4)] {
            let ctx = GroupContext::new(g);
            let m = table_of_marks(&ctx);
            for k in 0..ctx.num_classes() {
                let mut a = vec![0; ctx.num_classes()];
                a[k] = 1;
                let left = hs_q_of_rep(&ctx, &j1(&ctx, Field::Q, &a).unwrap()).unwrap();
                assert_eq!(left, project_cyclic(&ctx, &marks_hom(&ctx, &m, &a)));
            }
            let jm: Vec<Vec<Rational>> = j1_matrix(&ctx, Field::Q).unwrap().iter().map(|c| c.iter().map(|&x| int(x)).collect()).collect();
            let qclasses = ctx.group().f_conjugacy_classes(Field::Q).len();
            assert_eq!(rank(&jm), qclasses);
            assert_eq!(cyclic_classes(&ctx).len(), qclasses);
        }
    }
}
