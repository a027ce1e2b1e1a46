//! Stability of the unit η: G → Hom(M(−), G⊗M), the concrete arc/node
//! conditions characterizing it for M₀, and the gluing condition comparing
//! M(1) with the pushout of two copies of M(0) along the interface.

use super::ops::{interface, tensor};
use super::{FreeCategory, Presheaf, PresheafError, PresheafMorphism, Representation};
use super::{M0_GEN, M1_GEN};
use crate::dsu::Dsu;
use crate::net::DirectedNetwork;
use std::collections::HashSet;

/// Cap on the number of candidate assignments visited while enumerating a
/// hom-set; exceeding it aborts with [`PresheafError::ResourceLimit`].
pub const HOM_ENUMERATION_BOUND: u64 = 1_000_000;

/// All natural maps dom → cod, by backtracking with naturality filtering.
fn enumerate_homs(
    cat: &FreeCategory,
    dom: &Presheaf,
    cod: &Presheaf,
) -> Result<Vec<PresheafMorphism>, PresheafError> {
    let slots: Vec<(usize, usize)> = (0..cat.n_objects())
        .flat_map(|c| (0..dom.card[c]).map(move |x| (c, x)))
        .collect();
    // An empty codomain component with a nonempty domain component kills
    // every candidate immediately.
    let mut maps: Vec<Vec<usize>> = dom.card.iter().map(|&n| vec![usize::MAX; n]).collect();
    let mut out = Vec::new();
    let mut budget = HOM_ENUMERATION_BOUND;

    fn consistent(cat: &FreeCategory, dom: &Presheaf, cod: &Presheaf, maps: &[Vec<usize>]) -> bool {
        for f in 0..cat.n_generators() {
            let (d, c) = cat.generator(f);
            for x in 0..dom.card[c] {
                let (yx, yax) = (maps[c][x], maps[d][dom.gen_action[f][x]]);
                if yx != usize::MAX && yax != usize::MAX && yax != cod.gen_action[f][yx] {
                    return false;
                }
            }
        }
        true
    }

    fn search(
        i: usize,
        slots: &[(usize, usize)],
        cat: &FreeCategory,
        dom: &Presheaf,
        cod: &Presheaf,
        maps: &mut Vec<Vec<usize>>,
        out: &mut Vec<PresheafMorphism>,
        budget: &mut u64,
    ) -> Result<(), PresheafError> {
        if i == slots.len() {
            out.push(PresheafMorphism { maps: maps.clone() });
            return Ok(());
        }
        let (c, x) = slots[i];
        for y in 0..cod.card[c] {
            if *budget == 0 {
                return Err(PresheafError::ResourceLimit {
                    bound: HOM_ENUMERATION_BOUND,
                });
            }
            *budget -= 1;
            maps[c][x] = y;
            if consistent(cat, dom, cod, maps) {
                search(i + 1, slots, cat, dom, cod, maps, out, budget)?;
            }
            maps[c][x] = usize::MAX;
        }
        Ok(())
    }

    search(
        0, &slots, cat, dom, cod, &mut maps, &mut out, &mut budget,
    )?;
    Ok(out)
}

/// Whether the unit η_G: x ↦ μ_{(c,x)} is bijective at every object, i.e.
/// whether the colimit injections exhaust Hom(M(c), G⊗M) without
/// collisions.
pub fn check_stability(
    cat: &FreeCategory,
    g: &Presheaf,
    m: &Representation,
) -> Result<bool, PresheafError> {
    let t = tensor(cat, g, m);
    for c in 0..cat.n_objects() {
        let distinct: HashSet<&PresheafMorphism> = t.injections[c].iter().collect();
        if distinct.len() != g.card[c] {
            return Ok(false);
        }
        let homs = enumerate_homs(cat, &m.obj[c], &t.presheaf)?;
        if homs.len() != g.card[c] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The elementary characterization of stability with respect to M₀:
/// (i) no two arcs share both source and target, and (ii) for all arcs
/// f: a→b, g: c→b, h: c→d there is an arc a→d.
pub fn stability_conditions_m0(g: &DirectedNetwork) -> bool {
    let arcs = g.arcs();
    let mut seen = HashSet::new();
    for &arc in arcs {
        if !seen.insert(arc) {
            return false;
        }
    }
    let arc_set: HashSet<(usize, usize)> = arcs.iter().copied().collect();
    let by_target = g.arcs_by_target();
    let by_source = g.arcs_by_source();
    for &(a, b) in arcs {
        for &gi in &by_target[b] {
            let c = g.source(gi);
            for &hi in &by_source[c] {
                let d = g.target(hi);
                if !arc_set.contains(&(a, d)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Whether M satisfies the gluing condition over ↑↑: the comparison map
/// from the pushout of two copies of M(0), glued along the interface
/// projections ν_{m₀} and ν_{m₁}, onto M(1) is an isomorphism.
pub fn check_gluing(m: &Representation) -> bool {
    let cat = super::builtin::up_up();
    let i = interface(&cat, m, 1);
    let pos_m0 = i
        .position_of(0, cat.generator_morphism(M0_GEN))
        .expect("(0, m0) is an element of y(1)");
    let pos_m1 = i
        .position_of(0, cat.generator_morphism(M1_GEN))
        .expect("(0, m1) is an element of y(1)");
    let m0e = &m.obj[0];
    for e in 0..cat.n_objects() {
        let n = m0e.card[e];
        // Slots 0..n are the first copy of M(0)(e), n..2n the second.
        let mut dsu = Dsu::new(2 * n);
        for t in &i.tuples[e] {
            dsu.union(t[pos_m0], n + t[pos_m1]);
        }
        let (classes, count) = dsu.classes();
        if count != m.obj[1].card[e] {
            return false;
        }
        // The comparison map sends copy 1 through M(m0) and copy 2 through
        // M(m1); with matching counts, surjectivity means bijectivity.
        let mut image = vec![usize::MAX; count];
        let mut hit = 0;
        for x in 0..n {
            for (slot, y) in [
                (x, m.gen_mor[M0_GEN].maps[e][x]),
                (n + x, m.gen_mor[M1_GEN].maps[e][x]),
            ] {
                let k = classes[slot];
                if image[k] == usize::MAX {
                    image[k] = y;
                    hit += 1;
                } else if image[k] != y {
                    return false;
                }
            }
        }
        let mut targets: Vec<usize> = image.clone();
        targets.sort_unstable();
        targets.dedup();
        if hit != count || targets.len() != count {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::super::builtin::{m0, m1p, m_n, mu, up_up, yoneda_representation};
    use super::super::ops::tensor_of_representations;
    use super::super::from_network;
    use super::*;

    fn net(arcs: &[(&str, &str)]) -> DirectedNetwork {
        DirectedNetwork::from_named_arcs(arcs, false).unwrap()
    }

    #[test]
    fn gluing_verdicts() {
        assert!(check_gluing(&m0()));
        assert!(check_gluing(&mu()));
        assert!(check_gluing(&m_n(2)));
        assert!(!check_gluing(&yoneda_representation(&up_up())));
    }

    #[test]
    fn gluing_survives_tensoring_with_m0() {
        let cat = up_up();
        for rep in [m0(), mu(), m1p()] {
            let t = tensor_of_representations(&cat, &rep, &m0());
            assert!(check_gluing(&t));
        }
    }

    #[test]
    fn m0_conditions_examples() {
        // A self-loop alone satisfies both conditions.
        assert!(stability_conditions_m0(&net(&[("a", "a")])));
        // A 2-path does too: every (f, g, h) instance closes up.
        assert!(stability_conditions_m0(&net(&[("a", "b"), ("b", "c")])));
        // Parallel arcs violate (i).
        assert!(!stability_conditions_m0(&net(&[("a", "b"), ("a", "b")])));
        // The N-graph violates (ii): f = a→c, g = b→c, h = b→d need a→d.
        assert!(!stability_conditions_m0(&net(&[
            ("a", "c"),
            ("b", "c"),
            ("b", "d")
        ])));
    }

    #[test]
    fn stability_matches_m0_conditions() {
        let cat = up_up();
        for arcs in [
            vec![("a", "a")],
            vec![("a", "b"), ("b", "c")],
            vec![("a", "b"), ("a", "b")],
            vec![("a", "c"), ("b", "c"), ("b", "d")],
        ] {
            let g = net(&arcs);
            assert_eq!(
                check_stability(&cat, &from_network(&g), &m0()).unwrap(),
                stability_conditions_m0(&g),
                "mismatch on {arcs:?}"
            );
        }
    }

    #[test]
    fn equivalence_relation_graphs_stable_for_mu() {
        let cat = up_up();
        // Two complete-with-loops blocks {a,b} and {c}: an equivalence
        // relation, hence stable with respect to M_u.
        let g = net(&[
            ("a", "a"),
            ("a", "b"),
            ("b", "a"),
            ("b", "b"),
            ("c", "c"),
        ]);
        assert!(check_stability(&cat, &from_network(&g), &mu()).unwrap());
        // A single arc is not an equivalence relation.
        let g = net(&[("a", "b")]);
        assert!(!check_stability(&cat, &from_network(&g), &mu()).unwrap());
    }
}
