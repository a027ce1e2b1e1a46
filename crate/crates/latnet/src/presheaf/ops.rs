//! The core constructions: Yoneda presheaves, the tensor G⊗M (a finite
//! colimit computed by union-find), interfaces Int_M(c) (a finite limit
//! computed by constrained tuple enumeration), interface transformations φ
//! and their fibers, and the tensor of two representations.

use super::{FreeCategory, Presheaf, PresheafMorphism, Representation};
use crate::dsu::Dsu;
use std::collections::HashMap;

/// y(c): the presheaf d ↦ hom(d, c) with generator actions given by
/// precomposition. Elements of y(c)(d) are indexed by their position in
/// `cat.hom(d, c)`.
pub fn yoneda(cat: &FreeCategory, c: usize) -> Presheaf {
    let homs: Vec<Vec<usize>> = (0..cat.n_objects()).map(|d| cat.hom(d, c)).collect();
    let index: Vec<HashMap<usize, usize>> = homs
        .iter()
        .map(|h| h.iter().enumerate().map(|(i, &m)| (m, i)).collect())
        .collect();
    let gen_action = (0..cat.n_generators())
        .map(|g| {
            let (d2, d) = cat.generator(g);
            let gm = cat.generator_morphism(g);
            homs[d]
                .iter()
                .map(|&f| index[d2][&cat.compose(f, gm)])
                .collect()
        })
        .collect();
    Presheaf {
        card: homs.iter().map(|h| h.len()).collect(),
        gen_action,
    }
}

/// The tensor G⊗M together with its colimit injections μ and canonical
/// class representatives.
pub struct Tensor {
    pub presheaf: Presheaf,
    /// `injections[c][x]` = μ_{(c,x)}: M(c) → G⊗M.
    pub injections: Vec<Vec<PresheafMorphism>>,
    /// `class_rep[d][k]` = (c, x, p): a representative pair for class k of
    /// (G⊗M)(d), with x ∈ G(c) and p ∈ M(c)(d).
    pub class_rep: Vec<Vec<(usize, usize, usize)>>,
}

/// G⊗M: pointwise the quotient of Σ_c G(c)×M(c)(d) by the relation
/// generated by (x, f·p) ~ (x·f, p), computed by union-find.
pub fn tensor(cat: &FreeCategory, g: &Presheaf, m: &Representation) -> Tensor {
    let n_obj = cat.n_objects();
    // Per target object d: flatten (c, x, p) into slots.
    let mut offsets: Vec<Vec<usize>> = Vec::with_capacity(n_obj); // offsets[d][c]
    let mut slot_count: Vec<usize> = Vec::with_capacity(n_obj);
    for d in 0..n_obj {
        let mut offs = Vec::with_capacity(n_obj);
        let mut total = 0;
        for c in 0..n_obj {
            offs.push(total);
            total += g.card[c] * m.obj[c].card[d];
        }
        offsets.push(offs);
        slot_count.push(total);
    }
    let slot = |d: usize, c: usize, x: usize, p: usize| -> usize {
        offsets[d][c] + x * m.obj[c].card[d] + p
    };
    let mut class_of: Vec<Vec<usize>> = Vec::with_capacity(n_obj);
    let mut n_classes: Vec<usize> = Vec::with_capacity(n_obj);
    let mut class_rep: Vec<Vec<(usize, usize, usize)>> = Vec::with_capacity(n_obj);
    for d in 0..n_obj {
        let mut dsu = Dsu::new(slot_count[d]);
        for f in 0..cat.n_generators() {
            let (a, b) = cat.generator(f);
            let theta = &m.gen_mor[f].maps[d]; // M(a)(d) → M(b)(d)
            let ga = &g.gen_action[f]; // G(b) → G(a)
            for x in 0..g.card[b] {
                for p in 0..m.obj[a].card[d] {
                    dsu.union(slot(d, b, x, theta[p]), slot(d, a, ga[x], p));
                }
            }
        }
        let (classes, count) = dsu.classes();
        let mut reps = vec![(usize::MAX, 0, 0); count];
        for c in 0..n_obj {
            for x in 0..g.card[c] {
                for p in 0..m.obj[c].card[d] {
                    let k = classes[slot(d, c, x, p)];
                    if reps[k].0 == usize::MAX {
                        reps[k] = (c, x, p);
                    }
                }
            }
        }
        class_of.push(classes);
        n_classes.push(count);
        class_rep.push(reps);
    }
    let injections: Vec<Vec<PresheafMorphism>> = (0..n_obj)
        .map(|c| {
            (0..g.card[c])
                .map(|x| PresheafMorphism {
                    maps: (0..n_obj)
                        .map(|d| {
                            (0..m.obj[c].card[d])
                                .map(|p| class_of[d][slot(d, c, x, p)])
                                .collect()
                        })
                        .collect(),
                })
                .collect()
        })
        .collect();
    // Induced contravariant actions on classes, via representatives.
    let gen_action = (0..cat.n_generators())
        .map(|gg| {
            let (d2, d) = cat.generator(gg);
            let _ = d2;
            class_rep[d]
                .iter()
                .map(|&(c, x, p)| {
                    let p2 = m.obj[c].gen_action[gg][p];
                    injections[c][x].maps[cat.generator(gg).0][p2]
                })
                .collect()
        })
        .collect();
    let presheaf = Presheaf {
        card: n_classes,
        gen_action,
    };
    Tensor {
        presheaf,
        injections,
        class_rep,
    }
}

/// Int_M(c): the limit of M over the category of elements of y(c).
pub struct Interface {
    pub presheaf: Presheaf,
    /// Objects of Elts(y(c)): pairs (d, f) with f: d → c (morphism id).
    pub elt_index: Vec<(usize, usize)>,
    /// `tuples[e][t][pos]` = the component of tuple t at `elt_index[pos]`,
    /// an element of M(d_pos)(e).
    pub tuples: Vec<Vec<Vec<usize>>>,
}

impl Interface {
    pub fn position_of(&self, d: usize, f: usize) -> Option<usize> {
        self.elt_index.iter().position(|&(dd, ff)| dd == d && ff == f)
    }

    /// Projection ν_{(d,f)}: Int_M(c) → M(d) at position `pos`.
    pub fn projection(&self, pos: usize) -> PresheafMorphism {
        PresheafMorphism {
            maps: self
                .tuples
                .iter()
                .map(|ts| ts.iter().map(|t| t[pos]).collect())
                .collect(),
        }
    }
}

/// Compute Int_M(c) by enumerating, per object e, all tuples
/// (a_{(d,f)} ∈ M(d)(e)) with h·a_{(d,f)} = a_{(d',f')} whenever f'∘h = f.
/// Constraints over generating h suffice: any morphism of the element
/// category factors through them.
pub fn interface(cat: &FreeCategory, m: &Representation, c: usize) -> Interface {
    let mut elt_index: Vec<(usize, usize)> = Vec::new();
    for d in 0..cat.n_objects() {
        for f in cat.hom(d, c) {
            elt_index.push((d, f));
        }
    }
    let pos_of: HashMap<(usize, usize), usize> = elt_index
        .iter()
        .enumerate()
        .map(|(i, &df)| (df, i))
        .collect();
    // Constraints (pos_from, generator g, pos_to): M(g)(a_from) = a_to.
    let mut constraints: Vec<(usize, usize, usize)> = Vec::new();
    for (i, &(d, f)) in elt_index.iter().enumerate() {
        for g in 0..cat.n_generators() {
            let (gd, gc) = cat.generator(g);
            if gd != d {
                continue;
            }
            let gm = cat.generator_morphism(g);
            for f2 in cat.hom(gc, c) {
                if cat.compose(f2, gm) == f {
                    constraints.push((i, g, pos_of[&(gc, f2)]));
                }
            }
        }
    }
    let n_pos = elt_index.len();
    let mut tuples: Vec<Vec<Vec<usize>>> = Vec::with_capacity(cat.n_objects());
    for e in 0..cat.n_objects() {
        let mut out: Vec<Vec<usize>> = Vec::new();
        let mut current = vec![0usize; n_pos];
        // DFS over positions; check every constraint whose endpoints are
        // both assigned.
        fn search(
            pos: usize,
            n_pos: usize,
            e: usize,
            elt_index: &[(usize, usize)],
            constraints: &[(usize, usize, usize)],
            m: &Representation,
            current: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if pos == n_pos {
                out.push(current.clone());
                return;
            }
            let (d, _) = elt_index[pos];
            for v in 0..m.obj[d].card[e] {
                current[pos] = v;
                let ok = constraints.iter().all(|&(from, g, to)| {
                    if from.max(to) > pos {
                        return true;
                    }
                    m.gen_mor[g].maps[e][current[from]] == current[to]
                });
                if ok {
                    search(
                        pos + 1,
                        n_pos,
                        e,
                        elt_index,
                        constraints,
                        m,
                        current,
                        out,
                    );
                }
            }
        }
        if n_pos == 0 {
            // Limit over the empty diagram: a single (empty) tuple.
            out.push(Vec::new());
        } else {
            search(
                0,
                n_pos,
                e,
                &elt_index,
                &constraints,
                m,
                &mut current,
                &mut out,
            );
        }
        tuples.push(out);
    }
    // Actions: componentwise, then locate the resulting tuple.
    let tuple_pos: Vec<HashMap<Vec<usize>, usize>> = tuples
        .iter()
        .map(|ts| ts.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect())
        .collect();
    let gen_action = (0..cat.n_generators())
        .map(|g| {
            let (e2, e) = cat.generator(g);
            tuples[e]
                .iter()
                .map(|t| {
                    let image: Vec<usize> = t
                        .iter()
                        .enumerate()
                        .map(|(pos, &v)| {
                            let (d, _) = elt_index[pos];
                            m.obj[d].gen_action[g][v]
                        })
                        .collect();
                    tuple_pos[e2][&image]
                })
                .collect()
        })
        .collect();
    let presheaf = Presheaf {
        card: tuples.iter().map(|t| t.len()).collect(),
        gen_action,
    };
    Interface {
        presheaf,
        elt_index,
        tuples,
    }
}

/// The value of an interface transformation at one element: the full
/// component table of the presheaf morphism Int_M(c) → G⊗M. Class ids in
/// G⊗M are canonical, so tag equality is morphism equality.
pub type PhiTag = Vec<Vec<usize>>;

/// φ_c^{M,G}: for each x ∈ G(c), the morphism μ_{(c,x)} ∘ ν_{(c,id_c)}
/// from Int_M(c) to G⊗M, returned as its component table.
pub fn interface_transformation(
    cat: &FreeCategory,
    g: &Presheaf,
    m: &Representation,
    c: usize,
) -> Vec<PhiTag> {
    let t = tensor(cat, g, m);
    let i = interface(cat, m, c);
    interface_transformation_with(cat, g, m, c, &t, &i)
}

/// As [`interface_transformation`] but reusing a precomputed tensor and
/// interface (they do not depend on x).
pub fn interface_transformation_with(
    cat: &FreeCategory,
    g: &Presheaf,
    _m: &Representation,
    c: usize,
    t: &Tensor,
    i: &Interface,
) -> Vec<PhiTag> {
    let id_pos = i
        .position_of(c, cat.identity(c))
        .expect("(c, id_c) is an object of the element category");
    (0..g.card[c])
        .map(|x| {
            (0..cat.n_objects())
                .map(|e| {
                    i.tuples[e]
                        .iter()
                        .map(|tup| t.injections[c][x].maps[e][tup[id_pos]])
                        .collect()
                })
                .collect()
        })
        .collect()
}

/// The partition of G(c) by equality of interface-transformation tags.
/// Blocks and members are sorted ascending.
pub fn fibers(cat: &FreeCategory, g: &Presheaf, m: &Representation, c: usize) -> Vec<Vec<usize>> {
    let tags = interface_transformation(cat, g, m, c);
    let mut groups: HashMap<&PhiTag, Vec<usize>> = HashMap::new();
    for (x, tag) in tags.iter().enumerate() {
        groups.entry(tag).or_default().push(x);
    }
    let mut blocks: Vec<Vec<usize>> = groups.into_values().collect();
    blocks.sort_by_key(|b| b[0]);
    blocks
}

/// M ⊗ N = (Lan_y N) ∘ M: objectwise the tensor of the presheaf M(c) with
/// N, with generator morphisms induced on classes.
pub fn tensor_of_representations(
    cat: &FreeCategory,
    m: &Representation,
    n: &Representation,
) -> Representation {
    let tensors: Vec<Tensor> = (0..cat.n_objects())
        .map(|c| tensor(cat, &m.obj[c], n))
        .collect();
    let gen_mor = (0..cat.n_generators())
        .map(|f| {
            let (d, c) = cat.generator(f);
            let theta = &m.gen_mor[f]; // M(d) → M(c)
            let maps = (0..cat.n_objects())
                .map(|e| {
                    tensors[d].class_rep[e]
                        .iter()
                        .map(|&(c2, x, p)| {
                            tensors[c].injections[c2][theta.maps[c2][x]].maps[e][p]
                        })
                        .collect()
                })
                .collect();
            PresheafMorphism { maps }
        })
        .collect();
    Representation {
        obj: tensors.into_iter().map(|t| t.presheaf).collect(),
        gen_mor,
    }
}
