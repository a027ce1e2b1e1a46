//! Finite computational category theory.
//!
//! The index categories are free categories on finite acyclic multigraphs;
//! presheaves on them are finite contravariant set-valued functors, stored
//! as cardinalities plus generator actions. Over the two-parallel-arrow
//! category ↑↑ a presheaf is exactly a directed multigraph, which makes
//! this module an independent, exact oracle for the arc-path notions of
//! [`crate::arcpaths`]: tensors G⊗M, interfaces Int_M, interface
//! transformations φ and their fibers, stability of the unit η, the gluing
//! condition, and standard representations built from dual structures.

mod builtin;
mod iso;
mod ops;
mod stability;
mod standard;

pub use builtin::{builtin_representations, up_up, M_N_MAX};
pub use iso::{find_presheaf_iso, find_representation_iso};
pub use ops::{
    fibers, interface, interface_transformation, tensor, tensor_of_representations, yoneda,
    Interface, PhiTag, Tensor,
};
pub use stability::{check_gluing, check_stability, stability_conditions_m0, HOM_ENUMERATION_BOUND};
pub use standard::{standard_representation, DualStructure};

use crate::net::DirectedNetwork;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PresheafError {
    #[error("invalid structure: {0}")]
    InvalidStructure(String),
    #[error("hom-set enumeration exceeded the bound of {bound} candidate maps")]
    ResourceLimit { bound: u64 },
}

/// A morphism of the free category: a composable path of generators.
/// `gens[0]` leaves `dom`; the identity has an empty path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub dom: usize,
    pub cod: usize,
    pub gens: Vec<usize>,
}

/// The free category on a finite acyclic multigraph: vertices are objects,
/// arcs are generating morphisms, morphisms are all directed paths
/// (including the empty paths, which are the identities).
#[derive(Debug, Clone)]
pub struct FreeCategory {
    n_objects: usize,
    generators: Vec<(usize, usize)>,
    morphisms: Vec<Morphism>,
    index: HashMap<(usize, Vec<usize>), usize>,
}

const MORPHISM_CAP: usize = 100_000;

impl FreeCategory {
    /// `generators[i] = (dom, cod)`. Fails on directed cycles (the free
    /// category would be infinite).
    pub fn new(n_objects: usize, generators: Vec<(usize, usize)>) -> Result<Self, PresheafError> {
        for &(d, c) in &generators {
            if d >= n_objects || c >= n_objects {
                return Err(PresheafError::InvalidStructure(
                    "generator endpoint out of range".into(),
                ));
            }
        }
        // Kahn topological sort to reject cycles.
        let mut indeg = vec![0usize; n_objects];
        for &(_, c) in &generators {
            indeg[c] += 1;
        }
        let mut stack: Vec<usize> = (0..n_objects).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for &(d, c) in &generators {
                if d == v {
                    indeg[c] -= 1;
                    if indeg[c] == 0 {
                        stack.push(c);
                    }
                }
            }
        }
        if seen != n_objects {
            return Err(PresheafError::InvalidStructure(
                "base multigraph has a directed cycle".into(),
            ));
        }
        // Enumerate all paths breadth-first: identities, then extensions.
        let mut morphisms: Vec<Morphism> = (0..n_objects)
            .map(|c| Morphism {
                dom: c,
                cod: c,
                gens: Vec::new(),
            })
            .collect();
        let mut head = 0;
        while head < morphisms.len() {
            let m = morphisms[head].clone();
            head += 1;
            for (g, &(d, c)) in generators.iter().enumerate() {
                if d == m.cod {
                    let mut gens = m.gens.clone();
                    gens.push(g);
                    morphisms.push(Morphism {
                        dom: m.dom,
                        cod: c,
                        gens,
                    });
                    if morphisms.len() > MORPHISM_CAP {
                        return Err(PresheafError::InvalidStructure(
                            "free category has too many morphisms".into(),
                        ));
                    }
                }
            }
        }
        let index = morphisms
            .iter()
            .enumerate()
            .map(|(i, m)| ((m.dom, m.gens.clone()), i))
            .collect();
        Ok(FreeCategory {
            n_objects,
            generators,
            morphisms,
            index,
        })
    }

    pub fn n_objects(&self) -> usize {
        self.n_objects
    }

    pub fn n_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn generator(&self, g: usize) -> (usize, usize) {
        self.generators[g]
    }

    pub fn identity(&self, c: usize) -> usize {
        // Identities were enumerated first, in object order.
        c
    }

    pub fn morphism(&self, m: usize) -> &Morphism {
        &self.morphisms[m]
    }

    pub fn n_morphisms(&self) -> usize {
        self.morphisms.len()
    }

    /// The generator g as a morphism id.
    pub fn generator_morphism(&self, g: usize) -> usize {
        let (d, _) = self.generators[g];
        self.index[&(d, vec![g])]
    }

    /// All morphisms d → c.
    pub fn hom(&self, d: usize, c: usize) -> Vec<usize> {
        (0..self.morphisms.len())
            .filter(|&m| self.morphisms[m].dom == d && self.morphisms[m].cod == c)
            .collect()
    }

    /// Composite f∘g (g first). Panics if not composable.
    pub fn compose(&self, f: usize, g: usize) -> usize {
        let (mf, mg) = (&self.morphisms[f], &self.morphisms[g]);
        assert_eq!(mg.cod, mf.dom, "morphisms not composable");
        let mut gens = mg.gens.clone();
        gens.extend(&mf.gens);
        self.index[&(mg.dom, gens)]
    }
}

/// A finite presheaf: a set per object and, per generator f: d→c, the
/// contravariant action G(c) → G(d). On a free category any choice of
/// generator actions is functorial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presheaf {
    /// Cardinality of G(c); elements are 0..card[c].
    pub card: Vec<usize>,
    /// `gen_action[f][x]` for f: d→c maps x ∈ G(c) into G(d).
    pub gen_action: Vec<Vec<usize>>,
}

impl Presheaf {
    pub fn validate(&self, cat: &FreeCategory) -> Result<(), PresheafError> {
        if self.card.len() != cat.n_objects() || self.gen_action.len() != cat.n_generators() {
            return Err(PresheafError::InvalidStructure(
                "presheaf shape does not match the category".into(),
            ));
        }
        for (f, action) in self.gen_action.iter().enumerate() {
            let (d, c) = cat.generator(f);
            if action.len() != self.card[c] || action.iter().any(|&y| y >= self.card[d]) {
                return Err(PresheafError::InvalidStructure(format!(
                    "action of generator {f} is not a map G({c}) -> G({d})"
                )));
            }
        }
        Ok(())
    }

    /// x·m for x ∈ G(cod m); lands in G(dom m).
    pub fn act(&self, cat: &FreeCategory, x: usize, m: usize) -> usize {
        let mor = cat.morphism(m);
        mor.gens
            .iter()
            .rev()
            .fold(x, |acc, &g| self.gen_action[g][acc])
    }

    pub fn total_elements(&self) -> usize {
        self.card.iter().sum()
    }
}

/// A map of presheaves: one component per object; natural iff it commutes
/// with every generator action.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PresheafMorphism {
    /// `maps[c][x]` sends x ∈ dom(c) to an element of cod(c).
    pub maps: Vec<Vec<usize>>,
}

impl PresheafMorphism {
    pub fn identity(p: &Presheaf) -> Self {
        PresheafMorphism {
            maps: p.card.iter().map(|&n| (0..n).collect()).collect(),
        }
    }

    pub fn is_natural(&self, cat: &FreeCategory, dom: &Presheaf, cod: &Presheaf) -> bool {
        for f in 0..cat.n_generators() {
            let (d, c) = cat.generator(f);
            for x in 0..dom.card[c] {
                if self.maps[d][dom.gen_action[f][x]] != cod.gen_action[f][self.maps[c][x]] {
                    return false;
                }
            }
        }
        true
    }

    /// Componentwise composition self ∘ other.
    pub fn compose(&self, other: &PresheafMorphism) -> PresheafMorphism {
        PresheafMorphism {
            maps: other
                .maps
                .iter()
                .enumerate()
                .map(|(c, m)| m.iter().map(|&x| self.maps[c][x]).collect())
                .collect(),
        }
    }

    pub fn is_bijective(&self, dom: &Presheaf, cod: &Presheaf) -> bool {
        self.maps.iter().enumerate().all(|(c, m)| {
            if dom.card[c] != cod.card[c] {
                return false;
            }
            let mut hit = vec![false; cod.card[c]];
            m.iter().all(|&y| !std::mem::replace(&mut hit[y], true))
        })
    }
}

/// A representation: a presheaf M(c) per object and a presheaf morphism
/// M(d) → M(c) per generator f: d→c (covariant on the index category).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Representation {
    pub obj: Vec<Presheaf>,
    pub gen_mor: Vec<PresheafMorphism>,
}

impl Representation {
    pub fn validate(&self, cat: &FreeCategory) -> Result<(), PresheafError> {
        if self.obj.len() != cat.n_objects() || self.gen_mor.len() != cat.n_generators() {
            return Err(PresheafError::InvalidStructure(
                "representation shape does not match the category".into(),
            ));
        }
        for p in &self.obj {
            p.validate(cat)?;
        }
        for (f, theta) in self.gen_mor.iter().enumerate() {
            let (d, c) = cat.generator(f);
            if !theta.is_natural(cat, &self.obj[d], &self.obj[c]) {
                return Err(PresheafError::InvalidStructure(format!(
                    "generator morphism {f} is not natural"
                )));
            }
        }
        Ok(())
    }

    /// M(m) as a presheaf morphism M(dom m) → M(cod m).
    pub fn apply(&self, cat: &FreeCategory, m: usize) -> PresheafMorphism {
        let mor = cat.morphism(m);
        let mut result = PresheafMorphism::identity(&self.obj[mor.dom]);
        for &g in &mor.gens {
            result = self.gen_mor[g].compose(&result);
        }
        result
    }
}

/// The two-parallel-arrow base: objects 0, 1 and generators m₀, m₁: 0 → 1.
/// Presheaves on its free category are directed multigraphs.
pub const M0_GEN: usize = 0;
pub const M1_GEN: usize = 1;

/// View a directed network as a presheaf on ↑↑: G(0) = nodes, G(1) = arcs,
/// the generator actions are the source and target maps.
pub fn from_network(g: &DirectedNetwork) -> Presheaf {
    Presheaf {
        card: vec![g.node_count(), g.arc_count()],
        gen_action: vec![
            g.arcs().iter().map(|&(s, _)| s).collect(),
            g.arcs().iter().map(|&(_, t)| t).collect(),
        ],
    }
}
