//! JSON schemas for groups, complexes, bundles and cyclotomic values.

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::gcomplex::{builtin_rep_sphere, GSimplicialComplex, Piece};
use crate::group::{generate_group, FiniteGroup, Perm};
use crate::rational::{fmt_rational, parse_rational};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupJson {
    pub degree: usize,
    pub generators: Vec<Vec<u32>>,
}

impl GroupJson {
    pub fn build(&self) -> Result<FiniteGroup> {
        let gens = self.generators.iter().map(|g| Perm::from_images(g.clone())).collect::<Result<Vec<_>>>()?;
        generate_group(self.degree, &gens)
    }

    pub fn from_group(g: &FiniteGroup) -> Self {
        GroupJson { degree: g.degree(), generators: g.generators().iter().map(|p| p.images().to_vec()).collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionJson {
    pub generator_images: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexJson {
    pub vertices: usize,
    /// maximal faces suffice; the closure is computed
    pub simplices: Vec<Vec<u32>>,
    pub action: ActionJson,
}

impl ComplexJson {
    /// Builds the complex without subdividing.
    pub fn build_raw(&self, g: &FiniteGroup) -> Result<GSimplicialComplex> {
        let gens = self.action.generator_images.iter().map(|p| Perm::from_images(p.clone())).collect::<Result<Vec<_>>>()?;
        GSimplicialComplex::new(g, self.vertices, &self.simplices, gens)
    }

    /// Builds the complex and subdivides once if the action is not admissible.
    pub fn build(&self, g: &FiniteGroup) -> Result<GSimplicialComplex> {
        self.build_raw(g)?.validate_and_subdivide(g)
    }

    pub fn from_complex(x: &GSimplicialComplex) -> Self {
        ComplexJson {
            vertices: x.vertex_count(),
            simplices: x.maximal_faces(),
            action: ActionJson { generator_images: x.generator_images().iter().map(|p| p.images().to_vec()).collect() },
        }
    }
}

/// A group together with a complex it acts on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Bundle {
    pub group: GroupJson,
    pub complex: ComplexJson,
}

impl Bundle {
    pub fn new(g: &FiniteGroup, x: &GSimplicialComplex) -> Self {
        Bundle { group: GroupJson::from_group(g), complex: ComplexJson::from_complex(x) }
    }
}

/// Input of the representation-sphere constructor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepSphereSpec {
    pub group: GroupJson,
    pub pieces: Vec<Piece>,
}

impl RepSphereSpec {
    pub fn build(&self) -> Result<(FiniteGroup, GSimplicialComplex)> {
        let g = self.group.build()?;
        let x = builtin_rep_sphere(&g, &self.pieces)?.validate_and_subdivide(&g)?;
        Ok((g, x))
    }
}

/// `{"e": e, "coeffs": ["a/b", …]}`, coefficients of `E(e)^i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CyclotomicJson {
    pub e: u32,
    pub coeffs: Vec<String>,
}

impl From<&Cyclotomic> for CyclotomicJson {
    fn from(z: &Cyclotomic) -> Self {
        CyclotomicJson { e: z.exponent(), coeffs: z.coeffs().iter().map(fmt_rational).collect() }
    }
}

impl CyclotomicJson {
    pub fn to_cyclotomic(&self) -> Result<Cyclotomic> {
        if self.e == 0 {
            return Err(Error::InvalidInput("cyclotomic exponent must be positive".into()));
        }
        let coeffs = self.coeffs.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()?;
        Ok(Cyclotomic::from_coeffs(self.e, coeffs))
    }
}
