//! Unit spheres of small real representations, built as joins of 0- and
//! 1-dimensional pieces.

use super::complex::GSimplicialComplex;
use crate::error::{Error, Result};
use crate::group::{catalog, FiniteGroup, Perm};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DihedralGen {
    /// rotation in units of 2π/order
    pub rotation: i64,
    pub reflection: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Piece {
    /// S⁰ with trivial action
    TrivialLine,
    /// S⁰ on which generator k acts by `signs[k] ∈ {1, -1}`
    SignLine { signs: Vec<i64> },
    /// circle on which generator k rotates by `steps[k] · 2π/order`
    RotationPlane { order: u32, steps: Vec<i64> },
    /// circle with a dihedral action: generator k acts by
    /// `θ ↦ ±θ + rotation·2π/order`
    DihedralPlane { order: u32, generators: Vec<DihedralGen> },
}

fn polygon(n: u32) -> Vec<Vec<u32>> {
    (0..n).map(|i| vec![i, (i + 1) % n]).collect()
}

fn piece_complex(group: &FiniteGroup, piece: &Piece) -> Result<GSimplicialComplex> {
    let ngen = group.generators().len();
    let check_len = |len: usize| {
        if len != ngen {
            return Err(Error::InvalidActionData(format!("piece gives {len} generator images for {ngen} generators")));
        }
        Ok(())
    };
    let (nv, faces, gens): (u32, Vec<Vec<u32>>, Vec<Vec<u32>>) = match piece {
        Piece::TrivialLine => (2, vec![], vec![vec![0, 1]; ngen]),
        Piece::SignLine { signs } => {
            check_len(signs.len())?;
            let gens = signs
                .iter()
                .map(|&s| match s {
                    1 => Ok(vec![0, 1]),
                    -1 => Ok(vec![1, 0]),
                    _ => Err(Error::InvalidActionData(format!("sign {s} is not ±1"))),
                })
                .collect::<Result<_>>()?;
            (2, vec![], gens)
        }
        Piece::RotationPlane { order, steps } => {
            check_len(steps.len())?;
            let m = *order;
            if m == 0 {
                return Err(Error::InvalidActionData("rotation order must be positive".into()));
            }
            let n = match m {
                1 => 3,
                2 => 4,
                _ => m,
            };
            let scale = (n / m) as i64;
            let gens = steps.iter().map(|&k| (0..n).map(|i| (i as i64 + k * scale).rem_euclid(n as i64) as u32).collect()).collect();
            (n, polygon(n), gens)
        }
        Piece::DihedralPlane { order, generators } => {
            check_len(generators.len())?;
            let m = *order;
            if m == 0 {
                return Err(Error::InvalidActionData("dihedral order must be positive".into()));
            }
            // 2m-gon; reflections i ↦ 2r − i fix two opposite vertices and flip no edge
            let n = if m == 1 { 4 } else { 2 * m };
            let scale = (n / m) as i64;
            let gens = generators
                .iter()
                .map(|d| {
                    (0..n)
                        .map(|i| {
                            let i = i as i64;
                            let v = if d.reflection { -i } else { i } + d.rotation * scale;
                            v.rem_euclid(n as i64) as u32
                        })
                        .collect()
                })
                .collect();
            (n, polygon(n), gens)
        }
    };
    let gens = gens.into_iter().map(Perm::from_images).collect::<Result<Vec<_>>>()?;
    GSimplicialComplex::new(group, nv as usize, &faces, gens)
}

/// Join of the unit spheres of the pieces, subdivided if needed.
pub fn builtin_rep_sphere(group: &FiniteGroup, pieces: &[Piece]) -> Result<GSimplicialComplex> {
    let mut iter = pieces.iter();
    let first = iter.next().ok_or_else(|| Error::InvalidActionData("no pieces".into()))?;
    let mut x = piece_complex(group, first)?;
    for p in iter {
        x = GSimplicialComplex::join(group, &x, &piece_complex(group, p)?)?;
    }
    x.validate_and_subdivide(group)
}

fn s3_pieces(trivial: usize) -> Vec<Piece> {
    let mut pieces = vec![Piece::TrivialLine; trivial];
    // generators of S3 are (s, t): a transposition and a 3-cycle
    pieces.push(Piece::SignLine { signs: vec![-1, 1] });
    pieces.push(Piece::DihedralPlane {
        order: 3,
        generators: vec![DihedralGen { rotation: 0, reflection: true }, DihedralGen { rotation: 1, reflection: false }],
    });
    pieces
}

/// S3 acting on the unit sphere of R ⊕ R⁻ ⊕ V (a 3-sphere).
pub fn s3_sphere3() -> (FiniteGroup, GSimplicialComplex) {
    let g = catalog::s3();
    let x = builtin_rep_sphere(&g, &s3_pieces(1)).expect("builtin sphere");
    (g, x)
}

/// S3 acting on the unit sphere of R³ ⊕ R⁻ ⊕ V (a 5-sphere).
pub fn s3_sphere5() -> (FiniteGroup, GSimplicialComplex) {
    let g = catalog::s3();
    let x = builtin_rep_sphere(&g, &s3_pieces(3)).expect("builtin sphere");
    (g, x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sphere3_shape() {
        let (_, x) = s3_sphere3();
        assert_eq!(x.vertex_count(), 10);
        assert_eq!(x.dim(), 3);
        assert_eq!(x.euler_characteristic(), 0);
        assert!(x.is_admissible());
    }

    #[test]
    fn sphere5_shape() {
        let (_, x) = s3_sphere5();
        assert_eq!(x.vertex_count(), 14);
        assert_eq!(x.dim(), 5);
        assert_eq!(x.euler_characteristic(), 0);
        assert!(x.is_admissible());
    }

    #[test]
    fn trivial_group_circle() {
        let g = catalog::trivial();
        let x = builtin_rep_sphere(&g, &[Piece::TrivialLine, Piece::TrivialLine]).unwrap();
        assert_eq!(x.euler_characteristic(), 0);
    }

    #[test]
    fn rotation_planes() {
        let z4 = catalog::cyclic(4);
        for (m, k) in [(1, 0), (2, 1), (4, 1), (4, 3)] {
            let x = builtin_rep_sphere(&z4, &[Piece::RotationPlane { order: m, steps: vec![k] }]).unwrap();
            assert_eq!(x.euler_characteristic(), 0);
        }
        // rotation by a quarter turn is not a homomorphism from C4 when the order is 2
        let z3 = catalog::cyclic(3);
        let bad = builtin_rep_sphere(&z3, &[Piece::RotationPlane { order: 2, steps: vec![1] }]);
        assert!(matches!(bad, Err(Error::InvalidActionData(_))));
    }

    #[test]
    fn piece_json() {
        let p: Piece = serde_json::from_str(r#"{"type":"sign_line","signs":[-1,1]}"#).unwrap();
        assert_eq!(p, Piece::SignLine { signs: vec![-1, 1] });
    }
}
