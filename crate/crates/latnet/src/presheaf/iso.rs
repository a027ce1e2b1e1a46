//! Isomorphism search for presheaves and representations: plain
//! backtracking over objectwise bijections, pruned by naturality. The
//! instances that arise here (networks and the named representations) are
//! tiny, so exhaustive search is fine.

use super::{FreeCategory, Presheaf, Representation};

/// A natural isomorphism a ≅ b, if one exists, as `maps[c][x]`.
pub fn find_presheaf_iso(
    cat: &FreeCategory,
    a: &Presheaf,
    b: &Presheaf,
) -> Option<Vec<Vec<usize>>> {
    if a.card != b.card {
        return None;
    }
    // Flatten all (object, element) slots; assign targets depth-first.
    let slots: Vec<(usize, usize)> = (0..cat.n_objects())
        .flat_map(|c| (0..a.card[c]).map(move |x| (c, x)))
        .collect();
    let mut maps: Vec<Vec<usize>> = a.card.iter().map(|&n| vec![usize::MAX; n]).collect();
    let mut used: Vec<Vec<bool>> = a.card.iter().map(|&n| vec![false; n]).collect();

    fn consistent(cat: &FreeCategory, a: &Presheaf, b: &Presheaf, maps: &[Vec<usize>]) -> bool {
        for f in 0..cat.n_generators() {
            let (d, c) = cat.generator(f);
            for x in 0..a.card[c] {
                let (yx, yax) = (maps[c][x], maps[d][a.gen_action[f][x]]);
                if yx != usize::MAX && yax != usize::MAX && yax != b.gen_action[f][yx] {
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
        a: &Presheaf,
        b: &Presheaf,
        maps: &mut Vec<Vec<usize>>,
        used: &mut Vec<Vec<bool>>,
    ) -> bool {
        if i == slots.len() {
            return true;
        }
        let (c, x) = slots[i];
        for y in 0..b.card[c] {
            if used[c][y] {
                continue;
            }
            maps[c][x] = y;
            used[c][y] = true;
            if consistent(cat, a, b, maps) && search(i + 1, slots, cat, a, b, maps, used) {
                return true;
            }
            maps[c][x] = usize::MAX;
            used[c][y] = false;
        }
        false
    }

    if search(0, &slots, cat, a, b, &mut maps, &mut used) {
        Some(maps)
    } else {
        None
    }
}

/// An isomorphism of representations m ≅ m2, if one exists: per index
/// object c a natural isomorphism `val[c]: m(c) → m2(c)`, commuting with
/// the generator morphisms of the index category.
pub fn find_representation_iso(
    cat: &FreeCategory,
    m: &Representation,
    m2: &Representation,
) -> Option<Vec<Vec<Vec<usize>>>> {
    for c in 0..cat.n_objects() {
        if m.obj[c].card != m2.obj[c].card {
            return None;
        }
    }
    let slots: Vec<(usize, usize, usize)> = (0..cat.n_objects())
        .flat_map(|c| {
            let card = m.obj[c].card.clone();
            (0..card.len()).flat_map(move |e| {
                let n = card[e];
                (0..n).map(move |x| (c, e, x))
            })
        })
        .collect();
    let mut val: Vec<Vec<Vec<usize>>> = m
        .obj
        .iter()
        .map(|p| p.card.iter().map(|&n| vec![usize::MAX; n]).collect())
        .collect();
    let mut used: Vec<Vec<Vec<bool>>> = m
        .obj
        .iter()
        .map(|p| p.card.iter().map(|&n| vec![false; n]).collect())
        .collect();

    fn consistent(
        cat: &FreeCategory,
        m: &Representation,
        m2: &Representation,
        val: &[Vec<Vec<usize>>],
    ) -> bool {
        // Each component must be natural as a map of presheaves over the
        // base generators...
        for c in 0..cat.n_objects() {
            for g in 0..cat.n_generators() {
                let (e2, e) = cat.generator(g);
                for x in 0..m.obj[c].card[e] {
                    let (yx, yax) = (val[c][e][x], val[c][e2][m.obj[c].gen_action[g][x]]);
                    if yx != usize::MAX && yax != usize::MAX && yax != m2.obj[c].gen_action[g][yx]
                    {
                        return false;
                    }
                }
            }
        }
        // ...and the squares with the generator morphisms must commute.
        for f in 0..cat.n_generators() {
            let (d, c) = cat.generator(f);
            for e in 0..cat.n_objects() {
                for x in 0..m.obj[d].card[e] {
                    let (yx, yfx) = (val[d][e][x], val[c][e][m.gen_mor[f].maps[e][x]]);
                    if yx != usize::MAX && yfx != usize::MAX && yfx != m2.gen_mor[f].maps[e][yx] {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn search(
        i: usize,
        slots: &[(usize, usize, usize)],
        cat: &FreeCategory,
        m: &Representation,
        m2: &Representation,
        val: &mut Vec<Vec<Vec<usize>>>,
        used: &mut Vec<Vec<Vec<bool>>>,
    ) -> bool {
        if i == slots.len() {
            return true;
        }
        let (c, e, x) = slots[i];
        for y in 0..m2.obj[c].card[e] {
            if used[c][e][y] {
                continue;
            }
            val[c][e][x] = y;
            used[c][e][y] = true;
            if consistent(cat, m, m2, val) && search(i + 1, slots, cat, m, m2, val, used) {
                return true;
            }
            val[c][e][x] = usize::MAX;
            used[c][e][y] = false;
        }
        false
    }

    if search(0, &slots, cat, m, m2, &mut val, &mut used) {
        Some(val)
    } else {
        None
    }
}

#[cfg(test)]
pub(crate) fn assert_presheaf_iso(cat: &FreeCategory, a: &Presheaf, b: &Presheaf) {
    assert!(
        find_presheaf_iso(cat, a, b).is_some(),
        "presheaves are not isomorphic: {a:?} vs {b:?}"
    );
}
