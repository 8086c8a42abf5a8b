use super::complex::GSimplicialComplex;
use crate::context::GroupContext;
use crate::group::{ElemSet, Subgroup};

/// A Weyl-group orbit of components of `X^H`.
#[derive(Clone, Debug)]
pub struct ComponentOrbit {
    /// component indices, ascending; the first is the representative
    pub components: Vec<usize>,
    /// least vertex of the representative component
    pub basepoint: u32,
    /// stabilizer `NH_C` of the representative component in `NH`
    pub stabilizer: Subgroup,
    /// `|WH_C| = |NH_C| / |H|`
    pub weyl_stabilizer_order: usize,
}

impl ComponentOrbit {
    pub fn rep(&self) -> usize {
        self.components[0]
    }
}

/// Fixed-set data for one subgroup class representative `H`.
#[derive(Clone, Debug)]
pub struct ClassFixed {
    pub class: usize,
    pub fixed_vertex: Vec<bool>,
    /// component index per vertex, `u32::MAX` when not fixed
    pub component_of: Vec<u32>,
    /// vertex lists, ordered by least vertex
    pub components: Vec<Vec<u32>>,
    pub orbits: Vec<ComponentOrbit>,
    /// orbit index per component
    pub orbit_of: Vec<usize>,
}

impl ClassFixed {
    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}

/// An object of the component category: a subgroup class and a Weyl orbit of components.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ObjectRef {
    pub class: usize,
    pub orbit: usize,
}

#[derive(Clone, Debug)]
pub struct FixedData {
    pub classes: Vec<ClassFixed>,
    pub objects: Vec<ObjectRef>,
    /// pointwise stabilizer of every simplex, indexed like the complex
    stabilizers: Vec<Vec<ElemSet>>,
    object_index: Vec<Vec<usize>>,
}

/// Components of the full subcomplex on the vertices marked in `keep`:
/// per-vertex component ids (`u32::MAX` when not kept) and vertex lists
/// ordered by least vertex.
pub fn fixed_components(x: &GSimplicialComplex, keep: &[bool]) -> (Vec<u32>, Vec<Vec<u32>>) {
    let nv = x.vertex_count();
    let mut parent: Vec<u32> = (0..nv as u32).collect();
    fn find(p: &mut [u32], x: u32) -> u32 {
        let mut r = x;
        while p[r as usize] != r {
            r = p[r as usize];
        }
        p[x as usize] = r;
        r
    }
    for e in x.simplices(1) {
        if keep[e[0] as usize] && keep[e[1] as usize] {
            let (a, b) = (find(&mut parent, e[0]), find(&mut parent, e[1]));
            if a != b {
                parent[a.max(b) as usize] = a.min(b);
            }
        }
    }
    let mut component_of = vec![u32::MAX; nv];
    let mut components: Vec<Vec<u32>> = Vec::new();
    let mut root_comp = vec![u32::MAX; nv];
    for v in 0..nv as u32 {
        if !keep[v as usize] {
            continue;
        }
        let r = find(&mut parent, v);
        if root_comp[r as usize] == u32::MAX {
            root_comp[r as usize] = components.len() as u32;
            components.push(Vec::new());
        }
        let id = root_comp[r as usize];
        component_of[v as usize] = id;
        components[id as usize].push(v);
    }
    (component_of, components)
}

/// Vertices fixed by every listed group element.
pub fn fixed_vertices(x: &GSimplicialComplex, elements: &[u32]) -> Vec<bool> {
    (0..x.vertex_count()).map(|v| elements.iter().all(|&g| x.action(g).apply(v) == v)).collect()
}

impl FixedData {
    pub fn compute(ctx: &GroupContext, x: &GSimplicialComplex) -> FixedData {
        let g = ctx.group();
        let n = g.order();
        let nv = x.vertex_count();
        let vertex_stab: Vec<ElemSet> = (0..nv)
            .map(|v| {
                let members: Vec<u32> = (0..n as u32).filter(|&a| x.action(a).apply(v) == v).collect();
                ElemSet::from_members(n, &members)
            })
            .collect();
        let stabilizers: Vec<Vec<ElemSet>> = (0..=x.dim().max(-1))
            .map(|d| {
                x.simplices(d as usize)
                    .iter()
                    .map(|s| {
                        let mut st = vertex_stab[s[0] as usize].clone();
                        for &v in &s[1..] {
                            st.intersect_with(&vertex_stab[v as usize]);
                        }
                        st
                    })
                    .collect()
            })
            .collect();

        let mut classes = Vec::with_capacity(ctx.num_classes());
        let mut objects = Vec::new();
        let mut object_index = Vec::with_capacity(ctx.num_classes());
        for c in 0..ctx.num_classes() {
            let h = ctx.rep(c);
            let fixed_vertex: Vec<bool> = (0..nv).map(|v| h.set().is_subset(&vertex_stab[v])).collect();
            let (component_of, components) = fixed_components(x, &fixed_vertex);
            let normalizer = &ctx.classes().classes[c].normalizer;
            let mut orbit_of = vec![usize::MAX; components.len()];
            let mut orbits = Vec::new();
            for comp in 0..components.len() {
                if orbit_of[comp] != usize::MAX {
                    continue;
                }
                let b = components[comp][0];
                let mut members = Vec::new();
                let mut stab = Vec::new();
                for &m in normalizer.members() {
                    let target = component_of[x.action(m).apply(b as usize)] as usize;
                    if target == comp {
                        stab.push(m);
                    }
                    members.push(target);
                }
                members.sort_unstable();
                members.dedup();
                for &t in &members {
                    orbit_of[t] = orbits.len();
                }
                let stabilizer = g.subgroup_from_members(&stab);
                let weyl_stabilizer_order = stabilizer.order() / h.order();
                orbits.push(ComponentOrbit { components: members, basepoint: b, stabilizer, weyl_stabilizer_order });
            }
            let mut idx = Vec::with_capacity(orbits.len());
            for o in 0..orbits.len() {
                idx.push(objects.len());
                objects.push(ObjectRef { class: c, orbit: o });
            }
            object_index.push(idx);
            classes.push(ClassFixed { class: c, fixed_vertex, component_of, components, orbits, orbit_of });
        }
        FixedData { classes, objects, stabilizers, object_index }
    }

    /// Pointwise (= setwise, by admissibility) stabilizer of a simplex.
    pub fn stabilizer(&self, x: &GSimplicialComplex, s: &[u32]) -> &ElemSet {
        let (d, i) = x.locate(s).expect("simplex of the complex");
        &self.stabilizers[d][i]
    }

    pub fn object_index(&self, class: usize, orbit: usize) -> usize {
        self.object_index[class][orbit]
    }

    /// Object containing the component of `X^H` through `vertex`.
    pub fn object_of_vertex(&self, class: usize, vertex: u32) -> Option<usize> {
        let cf = &self.classes[class];
        let comp = cf.component_of[vertex as usize];
        (comp != u32::MAX).then(|| self.object_index[class][cf.orbit_of[comp as usize]])
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    /// Simplices of the component `comp` of `X^H`.
    pub fn component_simplices<'a>(&self, x: &'a GSimplicialComplex, class: usize, comp: usize) -> Vec<&'a Vec<u32>> {
        let cf = &self.classes[class];
        x.all_simplices().filter(|s| s.iter().all(|&v| cf.component_of[v as usize] == comp as u32)).collect()
    }
}
