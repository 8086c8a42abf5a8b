use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Perm};
use std::collections::{BTreeSet, HashMap};

/// A finite simplicial complex with a simplicial action of a finite group.
///
/// Vertices are `0..vertex_count`; every vertex is a 0-simplex. Simplices are
/// sorted vertex tuples stored per dimension in lexicographic order. The
/// action is given on the group's generators and extended to all elements.
#[derive(Clone, Debug)]
pub struct GSimplicialComplex {
    vertex_count: usize,
    simplices: Vec<Vec<Vec<u32>>>,
    index: HashMap<Vec<u32>, (usize, usize)>,
    generator_images: Vec<Perm>,
    action: Vec<Perm>,
}

impl PartialEq for GSimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count && self.simplices == other.simplices && self.generator_images == other.generator_images
    }
}

impl Eq for GSimplicialComplex {}

fn downward_closure(vertex_count: usize, faces: &[Vec<u32>]) -> Result<Vec<Vec<Vec<u32>>>> {
    let mut set: BTreeSet<Vec<u32>> = (0..vertex_count as u32).map(|v| vec![v]).collect();
    for f in faces {
        let mut f = f.clone();
        f.sort_unstable();
        if f.is_empty() {
            continue;
        }
        if f.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidComplex(format!("simplex {f:?} repeats a vertex")));
        }
        if let Some(&v) = f.iter().find(|&&v| v as usize >= vertex_count) {
            return Err(Error::InvalidComplex(format!("vertex {v} out of range")));
        }
        if f.len() > 24 {
            return Err(Error::InvalidComplex("simplex dimension too large".into()));
        }
        if set.contains(&f) {
            continue;
        }
        let n = f.len();
        for mask in 1u32..(1 << n) {
            set.insert((0..n).filter(|i| mask >> i & 1 == 1).map(|i| f[i]).collect());
        }
    }
    let dim = set.iter().map(|s| s.len()).max().unwrap_or(0);
    let mut by_dim = vec![Vec::new(); dim];
    for s in set {
        by_dim[s.len() - 1].push(s);
    }
    Ok(by_dim)
}

impl GSimplicialComplex {
    /// Builds and validates a complex from (possibly only maximal) faces.
    /// Does not check admissibility; see [`Self::validate_and_subdivide`].
    pub fn new(group: &FiniteGroup, vertex_count: usize, faces: &[Vec<u32>], generator_images: Vec<Perm>) -> Result<Self> {
        if generator_images.len() != group.generators().len() {
            return Err(Error::InvalidActionData(format!(
                "{} generator images given for {} generators",
                generator_images.len(),
                group.generators().len()
            )));
        }
        for p in &generator_images {
            if p.degree() != vertex_count {
                return Err(Error::InvalidActionData(format!("vertex permutation of degree {} on {vertex_count} vertices", p.degree())));
            }
        }
        let simplices = downward_closure(vertex_count, faces)?;
        let mut index = HashMap::new();
        for (d, list) in simplices.iter().enumerate() {
            for (i, s) in list.iter().enumerate() {
                index.insert(s.clone(), (d, i));
            }
        }
        let n = group.order();
        let mut action: Vec<Option<Perm>> = vec![None; n];
        action[0] = Some(Perm::identity(vertex_count));
        for &a in group.bfs_order().iter().skip(1) {
            let (p, k) = group.word(a).expect("non-identity element has a word");
            let pa = action[p as usize].as_ref().expect("parent precedes child");
            action[a as usize] = Some(pa.compose(&generator_images[k as usize]));
        }
        let action: Vec<Perm> = action.into_iter().map(|p| p.expect("every element reached")).collect();
        for x in 0..n as u32 {
            for (k, &s) in group.generator_indices().iter().enumerate() {
                if action[group.mul(x, s) as usize] != action[x as usize].compose(&generator_images[k]) {
                    return Err(Error::InvalidActionData("generator images do not define a homomorphism".into()));
                }
            }
        }
        let c = GSimplicialComplex { vertex_count, simplices, index, generator_images, action };
        for (k, p) in c.generator_images.iter().enumerate() {
            for s in c.simplices.iter().flatten() {
                let img = map_simplex(p, s);
                if !c.index.contains_key(&img) {
                    return Err(Error::NotSimplicialAction(format!("generator {k} maps {s:?} to non-simplex {img:?}")));
                }
            }
        }
        Ok(c)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Dimension, or -1 for the empty complex.
    pub fn dim(&self) -> i64 {
        self.simplices.len() as i64 - 1
    }

    pub fn simplices(&self, d: usize) -> &[Vec<u32>] {
        self.simplices.get(d).map_or(&[], |v| v.as_slice())
    }

    pub fn all_simplices(&self) -> impl Iterator<Item = &Vec<u32>> {
        self.simplices.iter().flatten()
    }

    pub fn num_simplices(&self) -> usize {
        self.simplices.iter().map(|v| v.len()).sum()
    }

    pub fn contains(&self, s: &[u32]) -> bool {
        self.index.contains_key(s)
    }

    /// (dimension, position) of a simplex.
    pub fn locate(&self, s: &[u32]) -> Option<(usize, usize)> {
        self.index.get(s).copied()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplices.iter().enumerate().map(|(d, v)| if d % 2 == 0 { v.len() as i64 } else { -(v.len() as i64) }).sum()
    }

    pub fn generator_images(&self) -> &[Perm] {
        &self.generator_images
    }

    /// Vertex permutation of group element `g`.
    pub fn action(&self, g: u32) -> &Perm {
        &self.action[g as usize]
    }

    pub fn apply(&self, g: u32, s: &[u32]) -> Vec<u32> {
        map_simplex(&self.action[g as usize], s)
    }

    /// Faces not contained in a larger face.
    pub fn maximal_faces(&self) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        for (d, list) in self.simplices.iter().enumerate() {
            for s in list {
                let covered = self.simplices.get(d + 1).is_some_and(|up| {
                    (0..self.vertex_count as u32).any(|v| {
                        if s.contains(&v) {
                            return false;
                        }
                        let mut t = s.clone();
                        t.push(v);
                        t.sort_unstable();
                        up.binary_search(&t).is_ok()
                    })
                });
                if !covered {
                    out.push(s.clone());
                }
            }
        }
        out
    }

    /// Whether every element fixing a simplex setwise fixes it vertexwise.
    pub fn is_admissible(&self) -> bool {
        self.action.iter().all(|p| {
            self.simplices.iter().flatten().all(|s| {
                let img = map_simplex(p, s);
                img != *s || s.iter().all(|&v| p.apply(v as usize) == v as usize)
            })
        })
    }

    /// Barycentric subdivision: vertices are the simplices (in dimension then
    /// lexicographic order), simplices are chains under inclusion.
    pub fn barycentric_subdivision(&self, group: &FiniteGroup) -> Result<Self> {
        let mut ids: HashMap<&Vec<u32>, u32> = HashMap::new();
        for s in self.simplices.iter().flatten() {
            let id = ids.len() as u32;
            ids.insert(s, id);
        }
        let nv = ids.len();
        let mut faces = Vec::new();
        for top in self.maximal_faces() {
            // full flags of `top`: orderings of its vertices give chains of prefixes
            let mut perm: Vec<u32> = top.clone();
            let n = perm.len();
            let mut c = vec![0usize; n];
            let mut push_flag = |p: &[u32]| {
                let mut chain = Vec::with_capacity(n);
                for k in 1..=n {
                    let mut pre = p[..k].to_vec();
                    pre.sort_unstable();
                    chain.push(ids[self.index.get_key_value(&pre).expect("face present").0]);
                }
                chain.sort_unstable();
                faces.push(chain);
            };
            push_flag(&perm);
            // Heap's algorithm
            let mut i = 0;
            while i < n {
                if c[i] < i {
                    if i % 2 == 0 {
                        perm.swap(0, i);
                    } else {
                        perm.swap(c[i], i);
                    }
                    push_flag(&perm);
                    c[i] += 1;
                    i = 0;
                } else {
                    c[i] = 0;
                    i += 1;
                }
            }
        }
        let gens = self
            .generator_images
            .iter()
            .map(|p| {
                let mut images = vec![0u32; nv];
                for s in self.simplices.iter().flatten() {
                    images[ids[s] as usize] = ids[self.index.get_key_value(&map_simplex(p, s)).expect("simplicial").0];
                }
                Perm::from_images(images)
            })
            .collect::<Result<Vec<_>>>()?;
        GSimplicialComplex::new(group, nv, &faces, gens)
    }

    /// Returns the complex unchanged if admissible, else its barycentric subdivision.
    pub fn validate_and_subdivide(self, group: &FiniteGroup) -> Result<Self> {
        if self.is_admissible() {
            return Ok(self);
        }
        let sd = self.barycentric_subdivision(group)?;
        if !sd.is_admissible() {
            return Err(Error::InternalInconsistency("subdivision is not admissible".into()));
        }
        Ok(sd)
    }

    /// Join with the diagonal action; vertices of `b` are shifted past those of `a`.
    pub fn join(group: &FiniteGroup, a: &Self, b: &Self) -> Result<Self> {
        let shift = a.vertex_count as u32;
        let fa = a.maximal_faces();
        let fb: Vec<Vec<u32>> = b.maximal_faces().into_iter().map(|f| f.into_iter().map(|v| v + shift).collect()).collect();
        let mut faces = Vec::new();
        if fa.is_empty() {
            faces = fb;
        } else if fb.is_empty() {
            faces = fa;
        } else {
            for x in &fa {
                for y in &fb {
                    let mut s = x.clone();
                    s.extend(y);
                    faces.push(s);
                }
            }
        }
        let gens = a
            .generator_images
            .iter()
            .zip(&b.generator_images)
            .map(|(p, q)| {
                let mut images = p.images().to_vec();
                images.extend(q.images().iter().map(|&v| v + shift));
                Perm::from_images(images)
            })
            .collect::<Result<Vec<_>>>()?;
        GSimplicialComplex::new(group, a.vertex_count + b.vertex_count, &faces, gens)
    }

    /// Full subcomplex on the given vertex set (as sorted tuples, all dimensions).
    pub fn full_subcomplex(&self, keep: &[bool]) -> Vec<&Vec<u32>> {
        self.simplices.iter().flatten().filter(|s| s.iter().all(|&v| keep[v as usize])).collect()
    }
}

pub fn map_simplex(p: &Perm, s: &[u32]) -> Vec<u32> {
    let mut t: Vec<u32> = s.iter().map(|&v| p.apply(v as usize) as u32).collect();
    t.sort_unstable();
    t
}

pub fn euler_of(simplices: &[&Vec<u32>]) -> i64 {
    simplices.iter().map(|s| if s.len() % 2 == 1 { 1 } else { -1 }).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog;

    fn id_action(g: &FiniteGroup, n: usize) -> Vec<Perm> {
        vec![Perm::identity(n); g.generators().len()]
    }

    #[test]
    fn closure_and_euler() {
        let g = catalog::trivial();
        let tri = GSimplicialComplex::new(&g, 3, &[vec![0, 1, 2]], vec![]).unwrap();
        assert_eq!(tri.num_simplices(), 7);
        assert_eq!(tri.euler_characteristic(), 1);
        let circle = GSimplicialComplex::new(&g, 3, &[vec![0, 1], vec![1, 2], vec![0, 2]], vec![]).unwrap();
        assert_eq!(circle.euler_characteristic(), 0);
        assert_eq!(circle.maximal_faces().len(), 3);
    }

    #[test]
    fn joins() {
        let g = catalog::trivial();
        let s0 = GSimplicialComplex::new(&g, 2, &[], id_action(&g, 2)).unwrap();
        let sq = GSimplicialComplex::join(&g, &s0, &s0).unwrap();
        assert_eq!(sq.euler_characteristic(), 0);
        assert_eq!(sq.dim(), 1);
        let oct = GSimplicialComplex::join(&g, &sq, &s0).unwrap();
        assert_eq!(oct.vertex_count(), 6);
        assert_eq!(oct.simplices(1).len(), 12);
        assert_eq!(oct.simplices(2).len(), 8);
        assert_eq!(oct.euler_characteristic(), 2);
    }

    #[test]
    fn triangle_with_reflection_needs_subdivision() {
        let z3 = catalog::cyclic(3);
        let faces = [vec![0, 1], vec![1, 2], vec![0, 2]];
        let rot = GSimplicialComplex::new(&z3, 3, &faces, vec![Perm::from_images(vec![1, 2, 0]).unwrap()]).unwrap();
        assert!(rot.is_admissible());
        let s3 = catalog::s3();
        let x = GSimplicialComplex::new(&s3, 3, &faces, s3.generators().to_vec()).unwrap();
        assert!(!x.is_admissible());
        let sd = x.validate_and_subdivide(&s3).unwrap();
        assert!(sd.is_admissible());
        assert_eq!(sd.vertex_count(), 6);
        assert_eq!(sd.euler_characteristic(), 0);
    }

    #[test]
    fn subdivision_of_triangle() {
        let g = catalog::trivial();
        let tri = GSimplicialComplex::new(&g, 3, &[vec![0, 1, 2]], vec![]).unwrap();
        let sd = tri.barycentric_subdivision(&g).unwrap();
        assert_eq!(sd.vertex_count(), 7);
        assert_eq!(sd.simplices(2).len(), 6);
        assert_eq!(sd.euler_characteristic(), 1);
    }

    #[test]
    fn rejects_bad_actions() {
        let z2 = catalog::cyclic(2);
        let edge = [vec![0, 1]];
        // not an involution on 3 vertices
        let bad = GSimplicialComplex::new(&z2, 3, &edge, vec![Perm::from_images(vec![1, 2, 0]).unwrap()]);
        assert!(matches!(bad, Err(Error::InvalidActionData(_))));
        let nonsimp = GSimplicialComplex::new(&z2, 3, &edge, vec![Perm::from_images(vec![0, 2, 1]).unwrap()]);
        assert!(matches!(nonsimp, Err(Error::NotSimplicialAction(_))));
        let wrong = GSimplicialComplex::new(&z2, 2, &edge, vec![]);
        assert!(matches!(wrong, Err(Error::InvalidActionData(_))));
    }
}
