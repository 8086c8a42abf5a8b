//! JSON report builders. Maps serialize with sorted keys, so output is
//! byte-stable for equal inputs.

use eqeuler::bredon::{Analysis, BredonH0, H0Class, VerifyReport};
use eqeuler::burnside::{j1_matrix, table_of_marks};
use eqeuler::category::ComponentCategory;
use eqeuler::context::{fingerprint, GroupContext};
use eqeuler::gcomplex::{euler_of, GSimplicialComplex};
use eqeuler::io::CyclotomicJson;
use eqeuler::rational::{fmt_rational, Rational};
use eqeuler::{Field, Result};
use num_bigint::BigInt;
use serde_json::{json, Value};

fn rationals(v: &[Rational]) -> Value {
    Value::from(v.iter().map(fmt_rational).collect::<Vec<_>>())
}

fn bigs(v: &[BigInt]) -> Value {
    Value::from(v.iter().map(|x| x.to_string()).collect::<Vec<_>>())
}

fn order_value(o: &Option<BigInt>) -> Value {
    match o {
        Some(n) => json!(n.to_string()),
        None => json!("infinite"),
    }
}

pub fn group_info(ctx: &GroupContext) -> Result<Value> {
    let g = ctx.group();
    let classes: Vec<Value> = (0..ctx.num_classes())
        .map(|c| {
            let cl = &ctx.classes().classes[c];
            json!({
                "index": c,
                "order": cl.rep.order(),
                "members": cl.rep.members(),
                "conjugates": cl.conjugates.len(),
                "normalizer_order": cl.normalizer.order(),
                "weyl_order": cl.weyl_order(),
            })
        })
        .collect();
    let fcounts: serde_json::Map<String, Value> =
        Field::ALL.iter().map(|f| (f.to_string(), json!(g.f_conjugacy_classes(*f).len()))).collect();
    Ok(json!({
        "order": g.order(),
        "degree": g.degree(),
        "exponent": g.exponent(),
        "abelian": g.is_abelian(),
        "fingerprint": fingerprint(g),
        "element_orders": (0..g.order() as u32).map(|x| g.elem_order(x)).collect::<Vec<_>>(),
        "subgroup_classes": classes,
        "f_class_counts": fcounts,
    }))
}

pub fn reps_table(ctx: &GroupContext, field: Field) -> Result<Value> {
    let top = ctx.sub(ctx.top())?;
    let t = &top.table;
    let classes: Vec<Value> = (0..t.num_classes())
        .map(|c| json!({"size": t.class_size(c), "element_order": t.class_order(c), "representative": top.parent_index[t.classes().rep(c) as usize]}))
        .collect();
    let basis = ctx.basis(ctx.top(), field)?;
    let irreducibles: Vec<Value> = basis
        .irreducibles
        .iter()
        .map(|irr| {
            json!({
                "constituents": irr.constituents,
                "multiplier": irr.multiplier,
                "degree": irr.degree(),
                "real_type": irr.real_type.map(|r| format!("{r:?}")),
                "values": irr.character.iter().map(CyclotomicJson::from).collect::<Vec<_>>(),
            })
        })
        .collect();
    let mut out = json!({
        "field": field.to_string(),
        "group_order": t.group_order(),
        "exponent": t.exponent(),
        "classes": classes,
        "fs_indicators": (0..t.len()).map(|i| t.fs_indicator(i)).collect::<Vec<_>>(),
        "irreducibles": irreducibles,
    });
    if field == Field::Q {
        out["schur"] = serde_json::to_value(ctx.schur_info(ctx.top())?).expect("serializable");
    }
    Ok(out)
}

pub fn marks(ctx: &GroupContext) -> Result<Value> {
    Ok(json!({
        "classes": (0..ctx.num_classes()).map(|c| ctx.rep(c).order()).collect::<Vec<_>>(),
        "marks": table_of_marks(ctx),
        "j1_R": j1_matrix(ctx, Field::R)?,
        "j1_Q": j1_matrix(ctx, Field::Q)?,
    }))
}

fn objects(ctx: &GroupContext, x: &GSimplicialComplex, a: &Analysis) -> Vec<Value> {
    a.category
        .objects
        .iter()
        .map(|o| {
            let comp = euler_of(&a.fixed.component_simplices(x, o.class, o.component));
            json!({
                "subgroup_class": o.class,
                "subgroup_order": ctx.rep(o.class).order(),
                "orbit": o.orbit,
                "basepoint": o.basepoint,
                "orbit_size": a.fixed.classes[o.class].orbits[o.orbit].components.len(),
                "weyl_stabilizer_order": o.weyl_order,
                "component_euler_characteristic": comp,
            })
        })
        .collect()
}

pub fn category(ctx: &GroupContext, x: &GSimplicialComplex, cat: &ComponentCategory) -> Value {
    let ch = cat.char_map_matrix();
    json!({
        "objects": cat.objects.iter().map(|o| json!({
            "subgroup_class": o.class,
            "subgroup_order": ctx.rep(o.class).order(),
            "orbit": o.orbit,
            "basepoint": o.basepoint,
            "weyl_stabilizer_order": o.weyl_order,
        })).collect::<Vec<_>>(),
        "mor_sizes": cat.mor.iter().map(|r| r.iter().map(|m| m.len()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "mor_orbits": cat.mor.iter().map(|r| r.iter().map(|m| m.orbits.iter().map(|o| json!({"size": o.members.len(), "stabilizer_order": o.stabilizer_order})).collect::<Vec<_>>()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "ch_matrix": ch.iter().map(|r| rationals(r)).collect::<Vec<_>>(),
        "vertices": x.vertex_count(),
    })
}

fn h0(h: &BredonH0) -> Value {
    json!({
        "field": h.field.to_string(),
        "generators": h.generators(),
        "relations": h.pres.relations.len(),
        "free_rank": h.pres.free_rank(),
        "torsion": bigs(&h.pres.torsion()),
    })
}

fn class(c: &H0Class, h: &BredonH0) -> Value {
    json!({"coords": bigs(&c.coords), "normal_form": bigs(&c.normal), "order": order_value(&c.order(&h.pres))})
}

pub fn verification(r: &VerifyReport) -> Value {
    json!({
        "passed": r.all_passed(),
        "checks": r.checks.iter().map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail})).collect::<Vec<_>>(),
    })
}

pub fn euler(ctx: &GroupContext, x: &GSimplicialComplex, a: &Analysis, field: Field, subdivided: bool, r: &VerifyReport) -> Value {
    let (h, cls) = match field {
        Field::Q => (&a.hq, &a.e1_chi),
        _ => (&a.hr, &a.e2e1_chi),
    };
    json!({
        "field": field.to_string(),
        "group": {"order": ctx.group().order(), "fingerprint": fingerprint(ctx.group())},
        "complex": {
            "vertices": x.vertex_count(),
            "dimension": x.dim(),
            "simplices": x.num_simplices(),
            "euler_characteristic": x.euler_characteristic(),
            "subdivided": subdivided,
        },
        "objects": objects(ctx, x, a),
        "chi_G": a.chi_g,
        "ch_chi_G": rationals(&a.ch_chi),
        "orbifold_euler": rationals(&a.orbifold),
        "burnside_pushforward": a.burnside_chi,
        "h0": h0(h),
        "e1": class(&a.e1_chi, &a.hq),
        "e2e1": class(&a.e2e1_chi, &a.hr),
        "class_order": order_value(&cls.order(&h.pres)),
        "gamma_Q": a.gamma.matrix.iter().map(|r| rationals(r)).collect::<Vec<_>>(),
        "verification": verification(r),
        "note": "e2e1(chi_G) is the Bredon-homology class that the edge homomorphism carries to the equivariant Euler class; KO-groups themselves are not computed",
    })
}
