//! Named small groups as permutation groups.

use super::{generate_group_with_cap, FiniteGroup, Perm};

fn build(degree: usize, gens: Vec<Vec<u32>>) -> FiniteGroup {
    let gens: Vec<Perm> = gens.into_iter().map(|g| Perm::from_images(g).expect("catalog permutation")).collect();
    generate_group_with_cap(degree, &gens, usize::MAX).expect("catalog group")
}

/// Regular representation of an abstract group given by a multiplication rule
/// on `0..n`, with left multiplication by each listed generator.
pub fn from_cayley(n: usize, mul: impl Fn(usize, usize) -> usize, gens: &[usize]) -> FiniteGroup {
    let perms = gens.iter().map(|&s| (0..n).map(|x| mul(s, x) as u32).collect()).collect();
    build(n, perms)
}

pub fn trivial() -> FiniteGroup {
    build(1, vec![])
}

pub fn cyclic(n: usize) -> FiniteGroup {
    if n == 1 {
        return trivial();
    }
    build(n, vec![(0..n as u32).map(|i| (i + 1) % n as u32).collect()])
}

/// Symmetries of the regular n-gon, order 2n.
pub fn dihedral(n: usize) -> FiniteGroup {
    let n32 = n as u32;
    let rot = (0..n32).map(|i| (i + 1) % n32).collect();
    let refl = (0..n32).map(|i| (n32 - i) % n32).collect();
    build(n, vec![rot, refl])
}

pub fn symmetric(n: usize) -> FiniteGroup {
    if n <= 1 {
        return trivial();
    }
    let t = (0..n as u32).map(|i| if i < 2 { 1 - i } else { i }).collect();
    let c = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
    build(n, vec![t, c])
}

pub fn alternating(n: usize) -> FiniteGroup {
    assert!(n >= 3);
    let gens = (2..n as u32)
        .map(|k| {
            let mut p: Vec<u32> = (0..n as u32).collect();
            p[0] = 1;
            p[1] = k;
            p[k as usize] = 0;
            p
        })
        .collect();
    build(n, gens)
}

/// S3 on three points with generators (transposition (0 1), 3-cycle (0 1 2)).
pub fn s3() -> FiniteGroup {
    build(3, vec![vec![1, 0, 2], vec![1, 2, 0]])
}

/// Metacyclic extension: pairs (i, j) with i mod m, j mod n and
/// (i,j)(i',j') = (i + i'·r^j + [j+j' ≥ n]·t, j+j').
pub fn metacyclic(m: usize, n: usize, r: usize, t: usize) -> FiniteGroup {
    let rpow: Vec<usize> = (0..n)
        .scan(1usize, |acc, _| {
            let v = *acc;
            *acc = *acc * r % m;
            Some(v)
        })
        .collect();
    let mul = |a: usize, b: usize| {
        let (i, j) = (a % m, a / m);
        let (i2, j2) = (b % m, b / m);
        let carry = if j + j2 >= n { t } else { 0 };
        let ni = (i + i2 * rpow[j] + carry) % m;
        let nj = (j + j2) % n;
        nj * m + ni
    };
    from_cayley(m * n, mul, &[1 % (m * n), m % (m * n)])
}

pub fn quaternion8() -> FiniteGroup {
    metacyclic(4, 2, 3, 2)
}

pub fn dicyclic12() -> FiniteGroup {
    metacyclic(6, 2, 5, 3)
}

/// Direct product acting on the disjoint union of the two point sets.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
    let (da, db) = (a.degree(), b.degree());
    let mut gens = Vec::new();
    for g in a.generators() {
        let mut p: Vec<u32> = g.images().to_vec();
        p.extend((da as u32)..(da + db) as u32);
        gens.push(p);
    }
    for g in b.generators() {
        let mut p: Vec<u32> = (0..da as u32).collect();
        p.extend(g.images().iter().map(|&v| v + da as u32));
        gens.push(p);
    }
    build(da + db, gens)
}

/// (C4 × C2) ⋊ C2 where the C2 acts by `phi` on pairs (x mod 4, y mod 2).
fn c4c2_by_c2(phi: fn(usize, usize) -> (usize, usize)) -> FiniteGroup {
    // element index = z*8 + y*4 + x
    let act = |z: usize, x: usize, y: usize| if z == 0 { (x, y) } else { phi(x, y) };
    let mul = move |a: usize, b: usize| {
        let (x, y, z) = (a % 4, a / 4 % 2, a / 8);
        let (x2, y2, z2) = (b % 4, b / 4 % 2, b / 8);
        let (px, py) = act(z, x2, y2);
        ((z + z2) % 2) * 8 + ((y + py) % 2) * 4 + (x + px) % 4
    };
    from_cayley(16, mul, &[1, 4, 8])
}

pub fn small_group_16_3() -> FiniteGroup {
    c4c2_by_c2(|x, y| (x, (y + x) % 2))
}

pub fn pauli() -> FiniteGroup {
    c4c2_by_c2(|x, y| ((x + 2 * y) % 4, y))
}

/// All 42 groups of order at most 16, one per isomorphism type.
pub fn groups_up_to_16() -> Vec<(&'static str, FiniteGroup)> {
    let c = cyclic;
    let dp = |a: FiniteGroup, b: FiniteGroup| direct_product(&a, &b);
    vec![
        ("C1", trivial()),
        ("C2", c(2)),
        ("C3", c(3)),
        ("C4", c(4)),
        ("C2xC2", dp(c(2), c(2))),
        ("C5", c(5)),
        ("C6", c(6)),
        ("S3", s3()),
        ("C7", c(7)),
        ("C8", c(8)),
        ("C4xC2", dp(c(4), c(2))),
        ("C2xC2xC2", dp(dp(c(2), c(2)), c(2))),
        ("D4", dihedral(4)),
        ("Q8", quaternion8()),
        ("C9", c(9)),
        ("C3xC3", dp(c(3), c(3))),
        ("C10", c(10)),
        ("D5", dihedral(5)),
        ("C11", c(11)),
        ("C12", c(12)),
        ("C6xC2", dp(c(6), c(2))),
        ("D6", dihedral(6)),
        ("A4", alternating(4)),
        ("Dic3", dicyclic12()),
        ("C13", c(13)),
        ("C14", c(14)),
        ("D7", dihedral(7)),
        ("C15", c(15)),
        ("C16", c(16)),
        ("C4xC4", dp(c(4), c(4))),
        ("C8xC2", dp(c(8), c(2))),
        ("C4:C4", metacyclic(4, 4, 3, 0)),
        ("M16", metacyclic(8, 2, 5, 0)),
        ("D8", metacyclic(8, 2, 7, 0)),
        ("SD16", metacyclic(8, 2, 3, 0)),
        ("Q16", metacyclic(8, 2, 7, 4)),
        ("C4xC2xC2", dp(dp(c(4), c(2)), c(2))),
        ("D4xC2", dp(dihedral(4), c(2))),
        ("Q8xC2", dp(quaternion8(), c(2))),
        ("C2^4", dp(dp(c(2), c(2)), dp(c(2), c(2)))),
        ("(C4xC2):C2", small_group_16_3()),
        ("Pauli", pauli()),
    ]
}

/// Look up a group by name: `Cn`, `Dn` (order 2n), `Sn`, `An`, `Q8`, `Dic3`,
/// or any name from [`groups_up_to_16`].
pub fn by_name(name: &str) -> Option<FiniteGroup> {
    let num = |p: &str| name.strip_prefix(p).and_then(|s| s.parse::<usize>().ok());
    match name {
        "Q8" => return Some(quaternion8()),
        "Dic3" => return Some(dicyclic12()),
        "S3" => return Some(s3()),
        _ => {}
    }
    if let Some(n) = num("C").filter(|&n| n >= 1) {
        return Some(cyclic(n));
    }
    if let Some(n) = num("D").filter(|&n| n >= 3) {
        return Some(dihedral(n));
    }
    if let Some(n) = num("S").filter(|&n| (1..=6).contains(&n)) {
        return Some(symmetric(n));
    }
    if let Some(n) = num("A").filter(|&n| (3..=6).contains(&n)) {
        return Some(alternating(n));
    }
    groups_up_to_16().into_iter().find(|(n, _)| *n == name).map(|(_, g)| g)
}
