//! The full Euler-characteristic pipeline for one complex and the exact
//! consistency checks between its pieces.

use super::gamma::{gamma_q, GammaQ};
use super::presentation::{e1, e2, e2_matrix, pushforward_to_point, pushforward_to_point_matrix, small, to_rational, BredonH0, H0Class};
use crate::burnside::{cyclic_classes, j1};
use crate::category::{alpha_f, ComponentCategory};
use crate::context::GroupContext;
use crate::error::Result;
use crate::gcomplex::{
    euler_of, fixed_vertices, orbifold_vector, pushforward_to_point as burnside_pushforward, universal_euler_char, FixedData,
    GSimplicialComplex,
};
use crate::group::Field;
use crate::linalg::rank;
use crate::rational::Rational;
use num_bigint::BigInt;

#[derive(Clone, Debug)]
pub struct Analysis {
    pub fixed: FixedData,
    pub category: ComponentCategory,
    /// χ^G(X) over the objects
    pub chi_g: Vec<i64>,
    /// orbifold Euler characteristics of the representative components
    pub orbifold: Vec<Rational>,
    pub ch_matrix: Vec<Vec<Rational>>,
    pub ch_chi: Vec<Rational>,
    pub hq: BredonH0,
    pub hr: BredonH0,
    pub e2_matrix: Vec<Vec<i64>>,
    pub e1_chi: H0Class,
    pub e2e1_chi: H0Class,
    /// `None` when the order is infinite
    pub order: Option<BigInt>,
    /// c_*(χ^G) in the Burnside ring
    pub burnside_chi: Vec<i64>,
    pub gamma: GammaQ,
}

impl Analysis {
    pub fn compute(ctx: &GroupContext, x: &GSimplicialComplex) -> Result<Analysis> {
        let fixed = FixedData::compute(ctx, x);
        let category = ComponentCategory::compute(ctx, x, &fixed);
        let chi_g = universal_euler_char(ctx, x, &fixed)?;
        let orbifold = orbifold_vector(ctx, x, &fixed)?;
        let ch_matrix = category.char_map_matrix();
        let ch_chi = category.apply_ch(&chi_g);
        let hq = BredonH0::build(ctx, &category, Field::Q)?;
        let hr = BredonH0::build(ctx, &category, Field::R)?;
        let e2m = e2_matrix(ctx, &hq, &hr)?;
        let e1_chi = e1(ctx, &hq, &chi_g)?;
        let e2e1_chi = e2(&hr, &e2m, &e1_chi);
        let order = e2e1_chi.order(&hr.pres);
        let burnside_chi = burnside_pushforward(ctx, &fixed, &chi_g);
        let gamma = gamma_q(ctx, &category, &hq)?;
        Ok(Analysis {
            fixed,
            category,
            chi_g,
            orbifold,
            ch_matrix,
            ch_chi,
            hq,
            hr,
            e2_matrix: e2m,
            e1_chi,
            e2e1_chi,
            order,
            burnside_chi,
            gamma,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&CheckResult> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    fn push(&mut self, name: &'static str, outcome: Result<Option<String>>) {
        let (passed, detail) = match outcome {
            Ok(None) => (true, String::new()),
            Ok(Some(d)) => (false, d),
            Err(e) => (false, e.to_string()),
        };
        self.checks.push(CheckResult { name, passed, detail });
    }
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// γ_Q ∘ pr ∘ ch^G = 1 ⊗ e₁ on every basis element of U^G(X).
pub fn check_gamma_square(ctx: &GroupContext, a: &Analysis) -> Result<Option<String>> {
    let n = a.category.len();
    for x in 0..n {
        let col: Vec<Rational> = a.gamma.objects.iter().map(|&y| a.ch_matrix[y][x].clone()).collect();
        let lhs = a.gamma.apply(&col);
        let rhs = a.hq.pres.rational_coords(&to_rational(&e1(ctx, &a.hq, &unit(n, x))?.coords));
        if lhs != rhs {
            return Ok(Some(format!("object {x}: square does not commute")));
        }
    }
    Ok(None)
}

/// e₂ preserves the rank of `ℚ ⊗ H₀(X; R_Q)`.
pub fn check_e2_injective(a: &Analysis) -> Result<Option<String>> {
    let free = a.hq.pres.free_rank();
    let images: Vec<Vec<Rational>> = (0..free)
        .map(|i| {
            let c = a.hq.class(a.hq.pres.free_generator(i));
            a.hr.pres.rational_coords(&to_rational(&e2(&a.hr, &a.e2_matrix, &c).coords))
        })
        .collect();
    let r = rank(&images);
    Ok((r != free).then(|| format!("rank drops from {free} to {r}")))
}

/// c_* e₂ e₁ [x] = j₁ [G/H_x] in R_R(G) for every object.
pub fn check_pushforward_square(ctx: &GroupContext, a: &Analysis) -> Result<Option<String>> {
    let cols = pushforward_to_point_matrix(ctx, &a.hr)?;
    let n = a.category.len();
    for x in 0..n {
        let c = e2(&a.hr, &a.e2_matrix, &e1(ctx, &a.hq, &unit(n, x))?);
        let lhs = small(&pushforward_to_point(&cols, &c));
        let rhs = ctx.perm_character(ctx.rep(a.category.objects[x].class), Field::R)?;
        if lhs != rhs {
            return Ok(Some(format!("object {x}: {lhs:?} != {rhs:?}")));
        }
    }
    Ok(None)
}

/// ch^G(χ^G) equals the vector of orbifold Euler characteristics.
pub fn check_lemma_identity(a: &Analysis) -> Option<String> {
    (a.ch_chi != a.orbifold).then(|| "character map of χ^G differs from the orbifold Euler characteristics".to_string())
}

/// The character of j₁(c_* χ^G) at g is χ(X^⟨g⟩).
pub fn check_lefschetz(ctx: &GroupContext, x: &GSimplicialComplex, a: &Analysis) -> Result<Option<String>> {
    let top = ctx.sub(ctx.top())?;
    let rep = j1(ctx, Field::R, &a.burnside_chi)?;
    let chi = ctx.basis(ctx.top(), Field::R)?.character_of(&top.table, &rep);
    for g in 0..ctx.group().order() as u32 {
        let keep = fixed_vertices(x, &[g]);
        let e = euler_of(&x.full_subcomplex(&keep));
        if chi[top.class_of(g)] != crate::cyclotomic::Cyclotomic::from_int(1, e) {
            return Ok(Some(format!("element {g}: character {} but fixed set has χ = {e}", chi[top.class_of(g)])));
        }
    }
    Ok(None)
}

pub fn check_alpha(ctx: &GroupContext, x: &GSimplicialComplex, a: &Analysis) -> Result<Option<String>> {
    for obj in &a.category.objects {
        for f in Field::ALL {
            alpha_f(ctx, x, obj, f)?;
        }
    }
    Ok(None)
}

pub fn check_ch_invertible(a: &Analysis) -> Option<String> {
    let n = a.category.len();
    (rank(&a.ch_matrix) != n).then(|| "character map is singular".to_string())
}

pub fn verify_suite(ctx: &GroupContext, x: &GSimplicialComplex, a: &Analysis) -> VerifyReport {
    let mut r = VerifyReport::default();
    r.push("gamma_square", check_gamma_square(ctx, a));
    r.push("e2_rational_injective", check_e2_injective(a));
    r.push("pushforward_square", check_pushforward_square(ctx, a));
    r.push("lemma_identity", Ok(check_lemma_identity(a)));
    r.push("lefschetz", check_lefschetz(ctx, x, a));
    r.push("alpha_bijective", check_alpha(ctx, x, a));
    r.push("ch_invertible", Ok(check_ch_invertible(a)));
    r.push(
        "cyclic_rank",
        Ok({
            let expected: usize = cyclic_classes(ctx).iter().map(|&c| a.fixed.classes[c].orbits.len()).sum();
            (expected != a.hq.pres.free_rank()).then(|| format!("free rank {} but {expected} cyclic objects", a.hq.pres.free_rank()))
        }),
    );
    r
}

/// Convenience for callers that only need the real class of `e₂e₁(χ^G)`.
pub fn torsion_summary(a: &Analysis) -> (usize, Vec<BigInt>) {
    (a.hr.pres.free_rank(), a.hr.pres.torsion())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gcomplex::{s3_sphere3, s3_sphere5};
    use crate::group::{catalog, FiniteGroup, Perm};
    use crate::rational::int;

    fn point(g: &FiniteGroup) -> GSimplicialComplex {
        GSimplicialComplex::new(g, 1, &[], vec![Perm::identity(1); g.generators().len()]).unwrap()
    }

    #[test]
    fn sphere3_torsion() {
        let (g, x) = s3_sphere3();
        let ctx = GroupContext::new(g);
        let a = Analysis::compute(&ctx, &x).unwrap();
        assert_eq!(a.chi_g, vec![1, -2, -1, 1, 1]);
        assert_eq!(torsion_summary(&a), (3, vec![BigInt::from(2)]));
        assert_eq!(a.order, Some(BigInt::from(2)));
        assert!(!a.e2e1_chi.is_zero());
        // rationally e₁(χ^G) vanishes since all cyclic orbifold entries are 0
        assert!(a.hq.pres.rational_coords(&to_rational(&a.e1_chi.coords)).iter().all(|q| *q == int(0)));
        let r = verify_suite(&ctx, &x, &a);
        assert!(r.all_passed(), "{:?}", r.failures());
    }

    #[test]
    fn sphere5_vanishes() {
        let (g, x) = s3_sphere5();
        let ctx = GroupContext::new(g);
        let a = Analysis::compute(&ctx, &x).unwrap();
        assert!(a.e2e1_chi.is_zero());
        assert_eq!(a.order, Some(BigInt::from(1)));
        assert!(a.burnside_chi.iter().any(|&c| c != 0));
        assert!(verify_suite(&ctx, &x, &a).all_passed());
    }

    #[test]
    fn points() {
        for g in
            [catalog::trivial(), catalog::cyclic(2), catalog::cyclic(5), catalog::s3(), catalog::quaternion8(), catalog::alternating(4)]
        {
            let ctx = GroupContext::new(g.clone());
            let x = point(&g);
            let a = Analysis::compute(&ctx, &x).unwrap();
            assert_eq!(a.hr.pres.free_rank(), ctx.basis(ctx.top(), Field::R).unwrap().len());
            assert_eq!(a.hq.pres.free_rank(), ctx.basis(ctx.top(), Field::Q).unwrap().len());
            assert!(a.hr.pres.torsion().is_empty());
            let r = verify_suite(&ctx, &x, &a);
            assert!(r.all_passed(), "{:?}", r.failures());
        }
        let z5 = catalog::cyclic(5);
        let ctx = GroupContext::new(z5.clone());
        let a = Analysis::compute(&ctx, &point(&z5)).unwrap();
        assert_eq!(a.hr.pres.free_rank(), 3);
    }

    #[test]
    fn z2_point_e1_and_gamma() {
        let g = catalog::cyclic(2);
        let ctx = GroupContext::new(g.clone());
        let a = Analysis::compute(&ctx, &point(&g)).unwrap();
        // objects: (1, pt), (Z2, pt); e₁[G/1] = [Q] + [Q⁻] at the top object
        let c = e1(&ctx, &a.hq, &[1, 0]).unwrap();
        let cols = pushforward_to_point_matrix(&ctx, &a.hq).unwrap();
        assert_eq!(small(&pushforward_to_point(&cols, &c)), vec![1, 1]);
        assert_eq!(a.gamma.objects, vec![0, 1]);
        assert_eq!(a.gamma.matrix.len(), 2);
        assert_eq!(crate::bredon::d_factor(&ctx, 1), crate::rational::rat(1, 2));
        assert!(e1(&ctx, &a.hq, &[0, 0]).unwrap().is_zero());
    }

    #[test]
    fn free_action_has_integer_h0() {
        // Z3 rotating a triangle boundary: free, connected
        let g = catalog::cyclic(3);
        let ctx = GroupContext::new(g.clone());
        let x =
            GSimplicialComplex::new(&g, 3, &[vec![0, 1], vec![1, 2], vec![0, 2]], vec![Perm::from_images(vec![1, 2, 0]).unwrap()]).unwrap();
        let a = Analysis::compute(&ctx, &x).unwrap();
        assert_eq!(a.category.len(), 1);
        assert_eq!(a.hr.pres.free_rank(), 1);
        assert!(a.hr.pres.torsion().is_empty());
        assert!(verify_suite(&ctx, &x, &a).all_passed());
    }
}
