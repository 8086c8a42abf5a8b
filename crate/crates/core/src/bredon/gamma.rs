//! The rational isomorphism γ_Q from the cyclic part of the object space to
//! `ℚ ⊗ H₀(X; R_Q)`: the composite of the scaling by `|Gen(L)|/|L|`, the α
//! identification, the inverse Hattori–Stallings rank and the colimit map.

use super::presentation::BredonH0;
use crate::burnside::{cyclic_classes, cyclic_generator};
use crate::category::ComponentCategory;
use crate::context::GroupContext;
use crate::cyclotomic::euler_phi;
use crate::error::{Error, Result};
use crate::group::Field;
use crate::linalg::{inverse, rank};
use crate::rational::Rational;
use num_traits::Zero;

#[derive(Clone, Debug)]
pub struct GammaQ {
    /// objects whose isotropy class is cyclic, in object order
    pub objects: Vec<usize>,
    /// `matrix[i][j]`: free coordinate `i` of the image of object `objects[j]`
    pub matrix: Vec<Vec<Rational>>,
}

/// Indices of objects over cyclic subgroup classes.
pub fn cyclic_objects(ctx: &GroupContext, cat: &ComponentCategory) -> Vec<usize> {
    let cyc = cyclic_classes(ctx);
    (0..cat.len()).filter(|&i| cyc.contains(&cat.objects[i].class)).collect()
}

/// `D^G`: scaling factor `|Gen(L)|/|L|` for a cyclic class.
pub fn d_factor(ctx: &GroupContext, class: usize) -> Rational {
    let n = ctx.rep(class).order();
    Rational::new(i64::from(euler_phi(n as u32)).into(), (n as i64).into())
}

/// Preimage under HS_{Q,L} of the indicator of the generators of L.
fn hs_inverse_of_generators(ctx: &GroupContext, class: usize) -> Result<Vec<Rational>> {
    let sub = ctx.sub(class)?;
    let nb = ctx.basis(class, Field::Q)?.len();
    let fc = sub.fclasses(Field::Q);
    if fc.len() != nb {
        return Err(Error::SingularMatrix(format!("Hattori-Stallings rank of class {class} is not square")));
    }
    let mut hs = vec![vec![Rational::zero(); nb]; nb];
    for b in 0..nb {
        let mut e = vec![0i64; nb];
        e[b] = 1;
        let f = ctx.hs_rank(class, Field::Q, &e)?;
        for (k, v) in f.values.iter().enumerate() {
            hs[k][b] = v.to_rational().ok_or_else(|| Error::InternalInconsistency("irrational rank over Q".into()))?;
        }
    }
    let inv = inverse(&hs).ok_or_else(|| Error::SingularMatrix(format!("Hattori-Stallings rank of class {class}")))?;
    let gen = sub.local(cyclic_generator(ctx, class)).expect("generator lies in the subgroup");
    let q = fc.class_of[gen as usize] as usize;
    Ok(inv.iter().map(|row| row[q].clone()).collect())
}

pub fn gamma_q(ctx: &GroupContext, cat: &ComponentCategory, hq: &BredonH0) -> Result<GammaQ> {
    let objects = cyclic_objects(ctx, cat);
    let free = hq.pres.free_rank();
    let mut matrix = vec![Vec::with_capacity(objects.len()); free];
    for &y in &objects {
        let class = cat.objects[y].class;
        let d = d_factor(ctx, class);
        let v = hs_inverse_of_generators(ctx, class)?;
        let mut c = vec![Rational::zero(); hq.generators()];
        for (b, vb) in v.iter().enumerate() {
            c[hq.offsets[y] + b] = vb * &d;
        }
        for (row, val) in matrix.iter_mut().zip(hq.pres.rational_coords(&c)) {
            row.push(val);
        }
    }
    if objects.len() != free || rank(&matrix) != free {
        return Err(Error::SingularMatrix(format!("gamma has {} columns, {} free coordinates", objects.len(), free)));
    }
    Ok(GammaQ { objects, matrix })
}

impl GammaQ {
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        self.matrix.iter().map(|row| row.iter().zip(v).fold(Rational::zero(), |acc, (a, b)| acc + a * b)).collect()
    }
}
