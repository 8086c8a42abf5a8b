#![allow(dead_code)]

use eqeuler::gcomplex::{s3_sphere3, s3_sphere5, GSimplicialComplex};
use eqeuler::group::catalog;
use eqeuler::{FiniteGroup, Perm};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Permutation action of the generators on the disjoint union of `G/H_i`.
pub fn coset_action(g: &FiniteGroup, subgroups: &[eqeuler::Subgroup]) -> (usize, Vec<Perm>) {
    let tables: Vec<_> = subgroups.iter().map(|h| g.left_cosets(h)).collect();
    let mut offsets = Vec::new();
    let mut n = 0;
    for t in &tables {
        offsets.push(n);
        n += t.reps.len();
    }
    let gens = g
        .generator_indices()
        .iter()
        .map(|&s| {
            let mut images = vec![0u32; n];
            for (t, off) in tables.iter().zip(&offsets) {
                for (i, &r) in t.reps.iter().enumerate() {
                    images[off + i] = (off + t.coset_of[g.mul(s, r) as usize] as usize) as u32;
                }
            }
            Perm::from_images(images).unwrap()
        })
        .collect();
    (n, gens)
}

/// A random invariant complex: vertices are a few coset orbits, faces are the
/// orbits of random small vertex sets. Subdivided when not admissible.
pub fn random_complex(g: &FiniteGroup, rng: &mut ChaCha8Rng) -> GSimplicialComplex {
    let subs = g.all_subgroups();
    loop {
        let k = rng.gen_range(1..=3);
        let chosen: Vec<_> = (0..k).map(|_| subs.choose(rng).unwrap().clone()).collect();
        let (n, gens) = coset_action(g, &chosen);
        if n == 0 || n > 14 {
            continue;
        }
        let action: Vec<Perm> = (0..g.order() as u32).map(|x| element_action(g, &gens, x)).collect();
        let mut faces: Vec<Vec<u32>> = Vec::new();
        let nfaces = if n < 2 { 0 } else { rng.gen_range(0..=3) };
        for _ in 0..nfaces {
            let size = rng.gen_range(2..=3.min(n));
            let mut verts: Vec<u32> = (0..n as u32).collect();
            verts.shuffle(rng);
            let seed: Vec<u32> = verts[..size].to_vec();
            for p in &action {
                let mut f: Vec<u32> = seed.iter().map(|&v| p.apply(v as usize) as u32).collect();
                f.sort_unstable();
                faces.push(f);
            }
        }
        for v in 0..n as u32 {
            faces.push(vec![v]);
        }
        let x = GSimplicialComplex::new(g, n, &faces, gens.clone()).unwrap();
        let x = x.validate_and_subdivide(g).unwrap();
        if x.num_simplices() <= 4000 {
            return x;
        }
    }
}

fn element_action(g: &FiniteGroup, gens: &[Perm], x: u32) -> Perm {
    let mut word = Vec::new();
    let mut cur = x;
    while let Some((p, k)) = g.word(cur) {
        word.push(k);
        cur = p;
    }
    let mut acc = Perm::identity(gens.first().map_or(0, |p| p.degree()));
    for &k in word.iter().rev() {
        acc = acc.compose(&gens[k as usize]);
    }
    acc
}

pub struct Instance {
    pub name: String,
    pub group: FiniteGroup,
    pub complex: GSimplicialComplex,
}

pub fn random_groups() -> Vec<(&'static str, FiniteGroup)> {
    vec![
        ("Z2", catalog::cyclic(2)),
        ("Z4", catalog::cyclic(4)),
        ("S3", catalog::s3()),
        ("D4", catalog::dihedral(4)),
        ("Z3", catalog::cyclic(3)),
        ("Z6", catalog::cyclic(6)),
        ("Z2xZ2", catalog::direct_product(&catalog::cyclic(2), &catalog::cyclic(2))),
        ("A4", catalog::alternating(4)),
        ("D6", catalog::dihedral(6)),
    ]
}

/// Seeded random instances, cycling through the small groups.
pub fn random_instances(count: usize, seed: u64) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let groups = random_groups();
    (0..count)
        .map(|i| {
            let (name, g) = &groups[i % groups.len()];
            let x = random_complex(g, &mut rng);
            Instance { name: format!("random-{i}-{name}"), group: g.clone(), complex: x }
        })
        .collect()
}

pub fn builtin_instances() -> Vec<Instance> {
    let (g3, x3) = s3_sphere3();
    let (g5, x5) = s3_sphere5();
    vec![Instance { name: "s3-sphere3".into(), group: g3, complex: x3 }, Instance { name: "s3-sphere5".into(), group: g5, complex: x5 }]
}

/// Every built-in plus twenty random complexes.
pub fn instance_set() -> Vec<Instance> {
    let mut v = builtin_instances();
    v.extend(random_instances(20, 0x5eed));
    v
}

pub fn point(g: &FiniteGroup) -> GSimplicialComplex {
    GSimplicialComplex::new(g, 1, &[], vec![Perm::identity(1); g.generators().len()]).unwrap()
}
