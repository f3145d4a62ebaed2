//! The companion-pair 2-category of a double category: objects are the
//! objects, 1-cells are companion pairs composed by whiskered pastings, and
//! 2-cells between pairs are the horizontal globular squares between their
//! horizontal components.

use super::embeds::{sq_canonical_companion, sq_globular_image};
use super::EmbedKind;
use crate::core::*;
use crate::lifting::{all_companion_witnesses, CompanionWitness};
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

/// The 2-category `R(D)` together with the data identifying its cells.
pub struct CompanionTwoCat {
    pub cat: TwoCategory,
    pub base: DoubleCategory,
    /// Companion pair carried by each 1-cell, aligned with `cat` hmor ids.
    pub pairs: Vec<CompanionWitness>,
    pub pair_index: HashMap<CompanionWitness, HId>,
    /// `(top pair, bottom pair, globular square of the base)` carried by each
    /// 2-cell, aligned with `cat` square ids.
    pub cells: Vec<(HId, HId, SqId)>,
    pub cell_index: HashMap<(HId, HId, SqId), SqId>,
}

static CACHE: Lazy<Mutex<HashMap<String, Arc<CompanionTwoCat>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Build (or fetch) the companion-pair 2-category of `d`.
pub fn companion_2cat(d: &DoubleCategory) -> Arc<CompanionTwoCat> {
    let key = d.canonical_key();
    if let Some(hit) = CACHE.lock().unwrap().get(&key) {
        return hit.clone();
    }
    let built = Arc::new(build(d));
    CACHE.lock().unwrap().insert(key, built.clone());
    built
}

fn pair_name(d: &DoubleCategory, w: &CompanionWitness) -> String {
    if *w == CompanionWitness::identity(d, w.src(d)) {
        format!("id:{}", d.object_name(w.src(d)))
    } else {
        format!(
            "cp[{}|{}|{}|{}]",
            d.hmor(w.f).name,
            d.vmor(w.u).name,
            d.square(w.phi).name,
            d.square(w.psi).name
        )
    }
}

fn build(d: &DoubleCategory) -> CompanionTwoCat {
    let witnesses = all_companion_witnesses(d);
    let names: Vec<String> = witnesses.iter().map(|w| pair_name(d, w)).collect();

    // 2-cells: globular squares between the horizontal components.
    let mut raw_cells: Vec<(usize, usize, SqId)> = Vec::new();
    for (i, wi) in witnesses.iter().enumerate() {
        for (j, wj) in witnesses.iter().enumerate() {
            if wi.src(d) != wj.src(d) || wi.tgt(d) != wj.tgt(d) {
                continue;
            }
            let b = SquareBoundary {
                top: wi.f,
                bottom: wj.f,
                left: d.v_identity(wi.src(d)),
                right: d.v_identity(wi.tgt(d)),
            };
            for &cell in d.boundary_squares(&b) {
                raw_cells.push((i, j, cell));
            }
        }
    }
    let cell_name = |i: usize, j: usize, cell: SqId| -> String {
        if i == j && cell == d.vid_sq(witnesses[i].f) {
            if names[i].starts_with("id:") {
                format!("box:{}", &names[i][3..])
            } else {
                format!("e:{}", names[i])
            }
        } else {
            format!("rsq[{}|{}|{}]", names[i], names[j], d.square(cell).name)
        }
    };

    let mut raw = RawDoubleCategory::new();
    for o in d.objects() {
        raw.object(d.object_name(o));
    }
    for (i, w) in witnesses.iter().enumerate() {
        if names[i].starts_with("id:") {
            continue;
        }
        raw.add_hmor(
            &names[i],
            d.object_name(w.src(d)),
            d.object_name(w.tgt(d)),
        );
    }
    for &(i, j, cell) in &raw_cells {
        let name = cell_name(i, j, cell);
        if name.starts_with("box:") || name.starts_with("e:") {
            continue;
        }
        raw.add_square(
            name,
            &names[i],
            &names[j],
            format!("id:{}", d.object_name(witnesses[i].src(d))),
            format!("id:{}", d.object_name(witnesses[i].tgt(d))),
        );
    }
    // 1-cell composition by the canonical pastings.
    let witness_index: HashMap<CompanionWitness, usize> = witnesses
        .iter()
        .enumerate()
        .map(|(i, w)| (*w, i))
        .collect();
    let mut comp_table: HashMap<(usize, usize), usize> = HashMap::new();
    for (i, wi) in witnesses.iter().enumerate() {
        for (j, wj) in witnesses.iter().enumerate() {
            if wi.tgt(d) != wj.src(d) {
                continue;
            }
            let comp = wi
                .then(wj, d)
                .expect("companion pairs compose by pasting");
            let k = *witness_index
                .get(&comp)
                .expect("pasted companion pair is a companion pair");
            comp_table.insert((i, j), k);
            raw.add_hcomp(&names[i], &names[j], &names[k]);
        }
    }
    // 2-cell compositions: | pairs componentwise, / composes the base squares.
    for &(i1, j1, c1) in &raw_cells {
        for &(i2, j2, c2) in &raw_cells {
            if witnesses[i1].tgt(d) != witnesses[i2].src(d) {
                continue;
            }
            let (Some(&it), Some(&jt)) = (comp_table.get(&(i1, i2)), comp_table.get(&(j1, j2)))
            else {
                continue;
            };
            let cc = d.sq_hcomp(c1, c2).expect("globular squares compose");
            raw.add_sq_hcomp(
                cell_name(i1, j1, c1),
                cell_name(i2, j2, c2),
                cell_name(it, jt, cc),
            );
        }
    }
    for &(i1, j1, c1) in &raw_cells {
        for &(i2, j2, c2) in &raw_cells {
            if j1 != i2 {
                continue;
            }
            let cc = d.sq_vcomp(c1, c2).expect("stacked globular squares compose");
            raw.add_sq_vcomp(
                cell_name(i1, j1, c1),
                cell_name(i2, j2, c2),
                cell_name(i1, j2, cc),
            );
        }
    }

    let cat = raw
        .build()
        .expect("companion-pair 2-category is a strict 2-category");
    let cat = TwoCategory::new(cat).unwrap();

    // Align the meta with the validated cell order.
    let mut pairs = vec![CompanionWitness::identity(d, ObjId(0)); cat.hmor_count()];
    let mut pair_index = HashMap::new();
    for (i, w) in witnesses.iter().enumerate() {
        let h = cat.hmor_by_name(&names[i]).expect("pair is a 1-cell");
        pairs[h.0] = *w;
        pair_index.insert(*w, h);
    }
    let mut cells = vec![(HId(0), HId(0), SqId(0)); cat.square_count()];
    let mut cell_index = HashMap::new();
    let mut seen = vec![false; cat.square_count()];
    for &(i, j, c) in &raw_cells {
        let s = cat
            .square_by_name(&cell_name(i, j, c))
            .expect("cell is a 2-cell");
        let key = (pair_index[&witnesses[i]], pair_index[&witnesses[j]], c);
        cells[s.0] = key;
        cell_index.insert(key, s);
        seen[s.0] = true;
    }
    assert!(seen.iter().all(|&b| b), "every 2-cell of R carries base data");

    CompanionTwoCat {
        cat,
        base: d.clone(),
        pairs,
        pair_index,
        cells,
        cell_index,
    }
}

/// The 2-functor `R(F)` induced on companion-pair 2-categories.
pub fn companion_2cat_functor(
    f: &DoubleFunctor,
    rsrc: &CompanionTwoCat,
    rtgt: &CompanionTwoCat,
) -> TwoFunctor {
    let src = rsrc.cat.as_double();
    let tgt = rtgt.cat.as_double();
    let obj_map: Vec<ObjId> = src
        .objects()
        .map(|o| {
            tgt.object_by_name(
                f.target()
                    .object_name(f.on_object(f.source().object_by_name(src.object_name(o)).unwrap())),
            )
            .unwrap()
        })
        .collect();
    let hmor_map: Vec<HId> = rsrc
        .pairs
        .iter()
        .map(|w| {
            *rtgt
                .pair_index
                .get(&w.apply(f))
                .expect("functors preserve companion pairs")
        })
        .collect();
    let vmor_map: Vec<VId> = src
        .vmors()
        .map(|v| tgt.v_identity(obj_map[src.vmor(v).src.0]))
        .collect();
    let sq_map: Vec<SqId> = rsrc
        .cells
        .iter()
        .map(|&(p, q, c)| {
            let key = (hmor_map[p.0], hmor_map[q.0], f.on_square(c));
            *rtgt
                .cell_index
                .get(&key)
                .expect("functors preserve R 2-cells")
        })
        .collect();
    TwoFunctor(
        crate::core::functor::functor_from_maps(src, tgt, obj_map, hmor_map, vmor_map, sq_map)
            .expect("R of a double functor is a 2-functor"),
    )
}

/// The unit `C -> R(Sq C)`: the identity on objects, `f` to the companion
/// pair `(f, f, id, id)`, and a 2-cell to the corresponding square of `Sq C`.
pub fn unit_into_companion_2cat(c: &TwoCategory) -> (TwoFunctor, Arc<CompanionTwoCat>) {
    let sq_c = super::embed(EmbedKind::Sq, c);
    let rc = companion_2cat(&sq_c);
    let d = c.as_double();
    let r = rc.cat.as_double();
    let obj_map: Vec<ObjId> = d
        .objects()
        .map(|o| r.object_by_name(d.object_name(o)).unwrap())
        .collect();
    let hmor_map: Vec<HId> = d
        .hmors()
        .map(|h| {
            let w = sq_canonical_companion(c, &sq_c, h);
            *rc.pair_index.get(&w).expect("canonical pair is enumerated")
        })
        .collect();
    let vmor_map: Vec<VId> = d
        .vmors()
        .map(|v| r.v_identity(obj_map[d.vmor(v).src.0]))
        .collect();
    let sq_map: Vec<SqId> = d
        .squares()
        .map(|s| {
            let sq = d.square(s);
            let key = (
                hmor_map[sq.top.0],
                hmor_map[sq.bottom.0],
                sq_globular_image(c, &sq_c, s),
            );
            *rc.cell_index.get(&key).expect("unit image of a 2-cell exists")
        })
        .collect();
    let tf = TwoFunctor(
        crate::core::functor::functor_from_maps(d, r, obj_map, hmor_map, vmor_map, sq_map)
            .expect("the unit into R(Sq C) is a 2-functor"),
    );
    (tf, rc)
}
