//! Standard representations built from a dual structure σ (a contravariant
//! endofunctor on the index category): M(c) is the co-interface of y(σ(c)),
//! a colimit of representables, with generator morphisms induced by
//! precomposition with σ(f).

use super::{FreeCategory, Presheaf, PresheafError, PresheafMorphism, Representation};
use crate::dsu::Dsu;
use std::collections::HashMap;

/// A contravariant endofunctor σ on the free category, given on objects and
/// generators: for a generator f: a → b, `gen[f]` is a morphism
/// σ(b) → σ(a).
#[derive(Debug, Clone)]
pub struct DualStructure {
    pub obj: Vec<usize>,
    pub gen: Vec<usize>,
}

impl DualStructure {
    pub fn validate(&self, cat: &FreeCategory) -> Result<(), PresheafError> {
        if self.obj.len() != cat.n_objects() || self.gen.len() != cat.n_generators() {
            return Err(PresheafError::InvalidStructure(
                "dual structure shape does not match the category".into(),
            ));
        }
        if self.obj.iter().any(|&c| c >= cat.n_objects()) {
            return Err(PresheafError::InvalidStructure(
                "dual structure object image out of range".into(),
            ));
        }
        for (f, &sf) in self.gen.iter().enumerate() {
            let (a, b) = cat.generator(f);
            if sf >= cat.n_morphisms() {
                return Err(PresheafError::InvalidStructure(format!(
                    "σ(generator {f}) is not a morphism id"
                )));
            }
            let m = cat.morphism(sf);
            if m.dom != self.obj[b] || m.cod != self.obj[a] {
                return Err(PresheafError::InvalidStructure(format!(
                    "σ(generator {f}) must run σ({b}) → σ({a})"
                )));
            }
        }
        Ok(())
    }

    /// σ on an arbitrary morphism: reverse the generator path and map each
    /// generator through σ.
    pub fn apply(&self, cat: &FreeCategory, m: usize) -> usize {
        let mor = cat.morphism(m);
        let mut result = cat.identity(self.obj[mor.cod]);
        for &g in mor.gens.iter().rev() {
            result = cat.compose(self.gen[g], result);
        }
        result
    }
}

/// The co-interface of y(base): at object e, pairs (g: base → d, s: e → d)
/// modulo (g, s) ~ (h∘g, h∘s) for every generator h out of d.
struct CoInterface {
    presheaf: Presheaf,
    /// `slot_index[e][(g, s)]` = flat slot id.
    slot_index: Vec<HashMap<(usize, usize), usize>>,
    /// `class_of[e][slot]` = element of the quotient.
    class_of: Vec<Vec<usize>>,
    /// `class_rep[e][k]` = representative pair (g, s).
    class_rep: Vec<Vec<(usize, usize)>>,
}

fn co_interface(cat: &FreeCategory, base: usize) -> CoInterface {
    let n_obj = cat.n_objects();
    // Morphisms out of `base`, grouped as (g, codomain of g).
    let outgoing: Vec<(usize, usize)> = (0..n_obj)
        .flat_map(|d| cat.hom(base, d).into_iter().map(move |g| (g, d)))
        .collect();
    let mut slots: Vec<Vec<(usize, usize)>> = Vec::with_capacity(n_obj);
    let mut slot_index: Vec<HashMap<(usize, usize), usize>> = Vec::with_capacity(n_obj);
    for e in 0..n_obj {
        let mut list = Vec::new();
        for &(g, d) in &outgoing {
            for s in cat.hom(e, d) {
                list.push((g, s));
            }
        }
        let index = list
            .iter()
            .enumerate()
            .map(|(i, &gs)| (gs, i))
            .collect();
        slots.push(list);
        slot_index.push(index);
    }
    let mut class_of: Vec<Vec<usize>> = Vec::with_capacity(n_obj);
    let mut class_rep: Vec<Vec<(usize, usize)>> = Vec::with_capacity(n_obj);
    let mut card = Vec::with_capacity(n_obj);
    for e in 0..n_obj {
        let mut dsu = Dsu::new(slots[e].len());
        for (i, &(g, s)) in slots[e].iter().enumerate() {
            let d = cat.morphism(g).cod;
            for h in 0..cat.n_generators() {
                if cat.generator(h).0 != d {
                    continue;
                }
                let hm = cat.generator_morphism(h);
                let j = slot_index[e][&(cat.compose(hm, g), cat.compose(hm, s))];
                dsu.union(i, j);
            }
        }
        let (classes, count) = dsu.classes();
        let mut reps = vec![(usize::MAX, usize::MAX); count];
        for (i, &gs) in slots[e].iter().enumerate() {
            if reps[classes[i]].0 == usize::MAX {
                reps[classes[i]] = gs;
            }
        }
        class_of.push(classes);
        class_rep.push(reps);
        card.push(count);
    }
    // Contravariant base action for gg: e' → e: (g, s) ↦ (g, s∘gg).
    let gen_action = (0..cat.n_generators())
        .map(|gg| {
            let (e2, e) = cat.generator(gg);
            let gm = cat.generator_morphism(gg);
            class_rep[e]
                .iter()
                .map(|&(g, s)| class_of[e2][slot_index[e2][&(g, cat.compose(s, gm))]])
                .collect()
        })
        .collect();
    CoInterface {
        presheaf: Presheaf { card, gen_action },
        slot_index,
        class_of,
        class_rep,
    }
}

/// The standard representation of σ: M(c) = coInt_y(σ(c)), with the
/// generator morphism for f: a → b sending (g, s) to (g∘σ(f), s).
pub fn standard_representation(
    cat: &FreeCategory,
    sigma: &DualStructure,
) -> Result<Representation, PresheafError> {
    sigma.validate(cat)?;
    let parts: Vec<CoInterface> = (0..cat.n_objects())
        .map(|c| co_interface(cat, sigma.obj[c]))
        .collect();
    let gen_mor = (0..cat.n_generators())
        .map(|f| {
            let (a, b) = cat.generator(f);
            let sf = sigma.gen[f]; // σ(b) → σ(a)
            let maps = (0..cat.n_objects())
                .map(|e| {
                    parts[a].class_rep[e]
                        .iter()
                        .map(|&(g, s)| {
                            let g2 = cat.compose(g, sf);
                            parts[b].class_of[e][parts[b].slot_index[e][&(g2, s)]]
                        })
                        .collect()
                })
                .collect();
            PresheafMorphism { maps }
        })
        .collect();
    let rep = Representation {
        obj: parts.into_iter().map(|p| p.presheaf).collect(),
        gen_mor,
    };
    rep.validate(cat)?;
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::super::builtin::{m0, up_up};
    use super::super::iso::find_representation_iso;
    use super::*;

    /// σ over ↑↑ exchanging the two generators.
    fn swap_sigma(cat: &FreeCategory) -> DualStructure {
        DualStructure {
            obj: vec![1, 0],
            gen: vec![cat.generator_morphism(1), cat.generator_morphism(0)],
        }
    }

    #[test]
    fn swap_sigma_yields_m0() {
        let cat = up_up();
        let rep = standard_representation(&cat, &swap_sigma(&cat)).unwrap();
        assert_eq!(rep.obj[0].card, vec![2, 1]);
        assert_eq!(rep.obj[1].card, vec![3, 2]);
        assert!(find_representation_iso(&cat, &rep, &m0()).is_some());
    }

    #[test]
    fn fixing_sigma_differs_from_m0() {
        let cat = up_up();
        let sigma = DualStructure {
            obj: vec![1, 0],
            gen: vec![cat.generator_morphism(0), cat.generator_morphism(1)],
        };
        let rep = standard_representation(&cat, &sigma).unwrap();
        assert_eq!(rep.obj[1].card, vec![3, 2]);
        assert!(find_representation_iso(&cat, &rep, &m0()).is_none());
    }

    #[test]
    fn single_arrow_standard_rep_is_trivial() {
        // Over ↑ the standard representation collapses: every M(c)(e) is a
        // point, which is why a one-generator base cannot see lateral
        // structure.
        let cat = FreeCategory::new(2, vec![(0, 1)]).unwrap();
        let sigma = DualStructure {
            obj: vec![1, 0],
            gen: vec![cat.generator_morphism(0)],
        };
        let rep = standard_representation(&cat, &sigma).unwrap();
        assert_eq!(rep.obj[0].card, vec![1, 1]);
        assert_eq!(rep.obj[1].card, vec![1, 1]);
    }

    #[test]
    fn sigma_apply_reverses_paths() {
        let cat = up_up();
        let sigma = swap_sigma(&cat);
        // σ(m0) = m1, σ(m1) = m0, σ(id1) = id0.
        assert_eq!(
            sigma.apply(&cat, cat.generator_morphism(0)),
            cat.generator_morphism(1)
        );
        assert_eq!(sigma.apply(&cat, cat.identity(1)), cat.identity(0));
    }

    #[test]
    fn invalid_sigma_rejected() {
        let cat = up_up();
        let sigma = DualStructure {
            obj: vec![0, 0],
            gen: vec![cat.generator_morphism(0), cat.generator_morphism(1)],
        };
        assert!(standard_representation(&cat, &sigma).is_err());
    }
}
