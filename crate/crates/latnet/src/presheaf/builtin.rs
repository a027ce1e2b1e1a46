//! The ↑↑ base category and its named representations: the Yoneda
//! representation y, the lateral-path generator M₀, the undirected-path
//! representation M_u, the longer-path family M_n, and the branching
//! example M_{1′}.

use super::ops::yoneda;
use super::{FreeCategory, Presheaf, PresheafMorphism, Representation};
use std::collections::BTreeMap;

/// Largest n for which `builtin_representations` includes M_n.
pub const M_N_MAX: usize = 8;

/// The free category on two parallel arrows m₀, m₁: 0 → 1.
pub fn up_up() -> FreeCategory {
    FreeCategory::new(2, vec![(0, 1), (0, 1)]).expect("static base graph is valid")
}

/// A path presheaf on ↑↑: `len` arcs in a row (len+1 nodes), arc i running
/// node i → node i+1.
fn path_presheaf(len: usize) -> Presheaf {
    Presheaf {
        card: vec![len + 1, len],
        gen_action: vec![(0..len).collect(), (1..=len).collect()],
    }
}

/// The Yoneda representation c ↦ y(c) with generator morphisms given by
/// postcomposition. Works over any free category.
pub fn yoneda_representation(cat: &FreeCategory) -> Representation {
    let obj: Vec<Presheaf> = (0..cat.n_objects()).map(|c| yoneda(cat, c)).collect();
    // yoneda() lists y(c)(d) in the order of cat.hom(d, c); build index maps.
    let hom_index = |d: usize, c: usize| -> BTreeMap<usize, usize> {
        cat.hom(d, c)
            .into_iter()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect()
    };
    let gen_mor = (0..cat.n_generators())
        .map(|f| {
            let (d, c) = cat.generator(f);
            let fm = cat.generator_morphism(f);
            let maps = (0..cat.n_objects())
                .map(|e| {
                    let to_index = hom_index(e, c);
                    cat.hom(e, d)
                        .into_iter()
                        .map(|s| to_index[&cat.compose(fm, s)])
                        .collect()
                })
                .collect();
            PresheafMorphism { maps }
        })
        .collect();
    Representation { obj, gen_mor }
}

/// M₀: M₀(0) is a single arc p₀→p₁, M₀(1) the 2-arc path q₀→q₁→q₂, with
/// m₀·a = b₀ and m₁·a = b₁. Its interface transformation fibers at object 1
/// are exactly the lateral connectivity classes.
pub fn m0() -> Representation {
    Representation {
        obj: vec![path_presheaf(1), path_presheaf(2)],
        gen_mor: vec![
            // a ↦ b0; nodes p0↦q0, p1↦q1.
            PresheafMorphism {
                maps: vec![vec![0, 1], vec![0]],
            },
            // a ↦ b1; nodes p0↦q1, p1↦q2.
            PresheafMorphism {
                maps: vec![vec![1, 2], vec![1]],
            },
        ],
    }
}

/// M_u: like M₀ but M_u(1) is q₀→q₁←q₂ (second arc reversed), so the
/// fibers at object 1 are the weak (undirected-path) components.
pub fn mu() -> Representation {
    let mu1 = Presheaf {
        card: vec![3, 2],
        // b0: q0→q1, b1: q2→q1.
        gen_action: vec![vec![0, 2], vec![1, 1]],
    };
    Representation {
        obj: vec![path_presheaf(1), mu1],
        gen_mor: vec![
            PresheafMorphism {
                maps: vec![vec![0, 1], vec![0]],
            },
            // a ↦ b1; p0 ↦ source(b1) = q2, p1 ↦ target(b1) = q1.
            PresheafMorphism {
                maps: vec![vec![2, 1], vec![1]],
            },
        ],
    }
}

/// M_n: M_n(0) is the path a₀…a_n, M_n(1) the path b₀…b_{n+1}, with
/// m₀·a_i = b_i and m₁·a_i = b_{i+1}. M_0 coincides with M₀.
pub fn m_n(n: usize) -> Representation {
    let len0 = n + 1;
    Representation {
        obj: vec![path_presheaf(len0), path_presheaf(len0 + 1)],
        gen_mor: vec![
            // a_i ↦ b_i; node j ↦ j.
            PresheafMorphism {
                maps: vec![(0..=len0).collect(), (0..len0).collect()],
            },
            // a_i ↦ b_{i+1}; node j ↦ j+1.
            PresheafMorphism {
                maps: vec![(1..=len0 + 1).collect(), (1..=len0).collect()],
            },
        ],
    }
}

/// M_{1′}: M(0) is the 2-arc path a₀, a₁; M(1) is
/// q₀→q₁ ⇉ q₂→q₃ with parallel middle arcs b₁₀, b₁₁ and
/// m₀·(a₀,a₁) = (b₀,b₁₀), m₁·(a₀,a₁) = (b₁₁,b₂).
pub fn m1p() -> Representation {
    let m1 = Presheaf {
        card: vec![4, 4],
        // arcs b0: 0→1, b10: 1→2, b11: 1→2, b2: 2→3.
        gen_action: vec![vec![0, 1, 1, 2], vec![1, 2, 2, 3]],
    };
    Representation {
        obj: vec![path_presheaf(2), m1],
        gen_mor: vec![
            PresheafMorphism {
                maps: vec![vec![0, 1, 2], vec![0, 1]],
            },
            PresheafMorphism {
                maps: vec![vec![1, 2, 3], vec![2, 3]],
            },
        ],
    }
}

/// All named representations over ↑↑, validated on construction. Keys:
/// "y", "m0", "mu", "m1".."m8", "m1p".
pub fn builtin_representations() -> BTreeMap<String, Representation> {
    let cat = up_up();
    let mut out = BTreeMap::new();
    out.insert("y".to_string(), yoneda_representation(&cat));
    out.insert("m0".to_string(), m0());
    out.insert("mu".to_string(), mu());
    for n in 1..=M_N_MAX {
        out.insert(format!("m{n}"), m_n(n));
    }
    out.insert("m1p".to_string(), m1p());
    for (name, rep) in &out {
        rep.validate(&cat)
            .unwrap_or_else(|e| panic!("builtin {name} invalid: {e}"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_validate() {
        let reps = builtin_representations();
        assert!(reps.contains_key("y"));
        assert!(reps.contains_key("m8"));
        assert_eq!(reps.len(), 3 + M_N_MAX + 1);
    }

    #[test]
    fn m0_shape() {
        let rep = m0();
        assert_eq!(rep.obj[0].card, vec![2, 1]);
        assert_eq!(rep.obj[1].card, vec![3, 2]);
    }

    #[test]
    fn yoneda_rep_over_up_up() {
        let cat = up_up();
        let y = yoneda_representation(&cat);
        // y(1)(0) = {m0, m1}, y(1)(1) = {id1}, y(0)(1) = ∅.
        assert_eq!(y.obj[1].card, vec![2, 1]);
        assert_eq!(y.obj[0].card, vec![1, 0]);
        y.validate(&cat).unwrap();
    }

    #[test]
    fn m1p_parallel_arcs() {
        let rep = m1p();
        let p = &rep.obj[1];
        // b10 and b11 share source and target.
        assert_eq!(p.gen_action[0][1], p.gen_action[0][2]);
        assert_eq!(p.gen_action[1][1], p.gen_action[1][2]);
    }
}
