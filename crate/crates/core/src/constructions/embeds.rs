//! Embeddings of 2-categories into double categories: the horizontal and
//! vertical embeddings, the square construction, its vertical opposite, and
//! the homotopical embeddings whose verticals are adjoint equivalence data.

use super::{all_adjoint_equivalences, dualize, AdjointEquivalenceData, DualKind};
use crate::core::*;
use std::collections::HashMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmbedKind {
    H,
    V,
    Sq,
    SqVop,
    Hsim,
    Vsim,
}

impl EmbedKind {
    pub fn parse(s: &str) -> Option<EmbedKind> {
        Some(match s {
            "h" => EmbedKind::H,
            "v" => EmbedKind::V,
            "sq" => EmbedKind::Sq,
            "sqvop" => EmbedKind::SqVop,
            "hsim" => EmbedKind::Hsim,
            "vsim" => EmbedKind::Vsim,
            _ => return None,
        })
    }
}

/// Embed a 2-category into double categories.
pub fn embed(kind: EmbedKind, c: &TwoCategory) -> DoubleCategory {
    match kind {
        EmbedKind::H => c.as_double().clone(),
        EmbedKind::V => dualize(DualKind::Transpose, c.as_double()),
        EmbedKind::Sq => square_embed(c),
        EmbedKind::SqVop => dualize(DualKind::Vop, &square_embed(c)),
        EmbedKind::Hsim => homotopical_embed(c),
        EmbedKind::Vsim => dualize(DualKind::Transpose, &homotopical_embed(c)),
    }
}

/// The canonical companion witness `(f, f, id, id)` of a morphism in `Sq C`,
/// located through the builder's naming scheme.
pub(crate) fn sq_canonical_companion(
    c: &TwoCategory,
    sq_c: &DoubleCategory,
    f: HId,
) -> crate::lifting::CompanionWitness {
    let d = c.as_double();
    let m = d.hmor(f);
    if d.is_h_identity(f) {
        let a = sq_c.object_by_name(d.object_name(m.src)).unwrap();
        return crate::lifting::CompanionWitness::identity(sq_c, a);
    }
    let ida = format!("id:{}", d.object_name(m.src));
    let idb = format!("id:{}", d.object_name(m.tgt));
    let ef = format!("e:{}", m.name);
    let phi = sq_c
        .square_by_name(&format!("sq[{0}|{0}|{1}|{1}|{2}]", m.name, idb, ef))
        .expect("canonical phi square of Sq C");
    let psi = sq_c
        .square_by_name(&format!("sq[{0}|{0}|{1}|{1}|{2}]", ida, m.name, ef))
        .expect("canonical psi square of Sq C");
    crate::lifting::CompanionWitness {
        f: sq_c.hmor_by_name(&m.name).unwrap(),
        u: sq_c.vmor_by_name(&m.name).unwrap(),
        phi,
        psi,
    }
}

/// The square of `Sq C` carrying a globular 2-cell of `C` on the identity
/// vertical frame.
pub(crate) fn sq_globular_image(c: &TwoCategory, sq_c: &DoubleCategory, s: SqId) -> SqId {
    let d = c.as_double();
    let sq = d.square(s);
    let f = d.hmor(sq.top);
    let h = d.hmor(sq.bottom);
    if d.vid_sq(sq.top) == s {
        let im = if d.is_h_identity(sq.top) {
            sq_c.h_identity(sq_c.object_by_name(d.object_name(f.src)).unwrap())
        } else {
            sq_c.hmor_by_name(&f.name).unwrap()
        };
        return sq_c.vid_sq(im);
    }
    let ida = format!("id:{}", d.object_name(f.src));
    let idb = format!("id:{}", d.object_name(f.tgt));
    sq_c.square_by_name(&format!(
        "sq[{}|{}|{}|{}|{}]",
        f.name, ida, h.name, idb, sq.name
    ))
    .expect("globular image square of Sq C")
}

/// A square of `Sq C` or `Hsim C`: a 2-cell `cell: (top ; rf) => (lf ; bottom)`
/// of `C`, where `lf`, `rf` are the forward 1-cells of the verticals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct EmbSquare {
    top: HId,
    bottom: HId,
    left: usize,
    right: usize,
    cell: SqId,
}

/// `Sq C`: objects of `C`, both morphism directions the morphisms of `C`,
/// squares the 2-cells `v f => f' u`.
fn square_embed(c: &TwoCategory) -> DoubleCategory {
    let d = c.as_double();
    let verticals: Vec<(String, HId)> =
        d.hmors().map(|f| (d.hmor(f).name.clone(), f)).collect();
    let v_id_of_obj: Vec<usize> = d.objects().map(|o| d.h_identity(o).0).collect();
    let mut vcomp_table = HashMap::new();
    for (&(f, g), &fg) in &d.hcomp {
        vcomp_table.insert((f.0, g.0), fg.0);
    }
    build_from_verticals(d, &verticals, &v_id_of_obj, &vcomp_table)
}

/// `Hsim C`: verticals are the adjoint equivalence data of `C`, composed by
/// the composite-adjunction formulas.
fn homotopical_embed(c: &TwoCategory) -> DoubleCategory {
    let d = c.as_double();
    let aeds = all_adjoint_equivalences(d);
    let mut index_of: HashMap<AdjointEquivalenceData, usize> = HashMap::new();
    let mut verticals: Vec<(String, HId)> = Vec::new();
    let mut v_id_of_obj: Vec<usize> = vec![usize::MAX; d.object_count()];
    for aed in &aeds {
        let name = if aed.is_identity(d) {
            let a = d.hmor(aed.fwd).src;
            v_id_of_obj[a.0] = verticals.len();
            format!("id:{}", d.object_name(a))
        } else {
            format!(
                "aeq[{}|{}|{}|{}]",
                d.hmor(aed.fwd).name,
                d.hmor(aed.bwd).name,
                d.square(aed.eta).name,
                d.square(aed.eps).name
            )
        };
        index_of.insert(*aed, verticals.len());
        verticals.push((name, aed.fwd));
    }
    assert!(
        v_id_of_obj.iter().all(|&i| i != usize::MAX),
        "identity adjoint equivalence data exists at every object"
    );
    let mut vcomp_table = HashMap::new();
    for (i, a1) in aeds.iter().enumerate() {
        for (j, a2) in aeds.iter().enumerate() {
            if d.hmor(a1.fwd).tgt != d.hmor(a2.fwd).src {
                continue;
            }
            let comp = a1.then(a2, d).expect("adjoint equivalence data compose");
            let k = *index_of
                .get(&comp)
                .expect("composite adjoint equivalence data is enumerated");
            vcomp_table.insert((i, j), k);
        }
    }
    build_from_verticals(d, &verticals, &v_id_of_obj, &vcomp_table)
}

/// Shared builder: a double category over `c` whose verticals are a family
/// closed under the supplied composition table and displayed through their
/// forward 1-cells. Both `|` and `/` are computed by whiskered pastings in
/// `c`.
fn build_from_verticals(
    c: &DoubleCategory,
    verticals: &[(String, HId)],
    v_id_of_obj: &[usize],
    vcomp_table: &HashMap<(usize, usize), usize>,
) -> DoubleCategory {
    let mut raw = RawDoubleCategory::new();
    for o in c.objects() {
        raw.object(c.object_name(o));
    }
    for f in c.hmors() {
        if !c.is_h_identity(f) {
            let m = c.hmor(f);
            raw.add_hmor(&m.name, c.object_name(m.src), c.object_name(m.tgt));
        }
    }
    for (i, (name, fwd)) in verticals.iter().enumerate() {
        if v_id_of_obj[c.hmor(*fwd).src.0] == i {
            continue; // the identity vertical is synthesized
        }
        let m = c.hmor(*fwd);
        raw.add_vmor(name, c.object_name(m.src), c.object_name(m.tgt));
    }
    for (&(f, g), &h) in &c.hcomp {
        raw.add_hcomp(&c.hmor(f).name, &c.hmor(g).name, &c.hmor(h).name);
    }
    for (&(i, j), &k) in vcomp_table {
        raw.add_vcomp(&verticals[i].0, &verticals[j].0, &verticals[k].0);
    }

    // Enumerate squares: corner-compatible frames plus a filling 2-cell.
    let mut squares: Vec<EmbSquare> = Vec::new();
    let mut sq_index: HashMap<EmbSquare, usize> = HashMap::new();
    for t in c.hmors() {
        for (li, (_, lf)) in verticals.iter().enumerate() {
            if c.hmor(t).src != c.hmor(*lf).src {
                continue;
            }
            for b in c.hmors() {
                if c.hmor(b).src != c.hmor(*lf).tgt {
                    continue;
                }
                for (ri, (_, rf)) in verticals.iter().enumerate() {
                    if c.hmor(*rf).src != c.hmor(t).tgt || c.hmor(*rf).tgt != c.hmor(b).tgt {
                        continue;
                    }
                    let frame = SquareBoundary {
                        top: c.comp_h(t, *rf).unwrap(),
                        bottom: c.comp_h(*lf, b).unwrap(),
                        left: c.v_identity(c.hmor(t).src),
                        right: c.v_identity(c.hmor(b).tgt),
                    };
                    for &cell in c.boundary_squares(&frame) {
                        let s = EmbSquare {
                            top: t,
                            bottom: b,
                            left: li,
                            right: ri,
                            cell,
                        };
                        sq_index.insert(s, squares.len());
                        squares.push(s);
                    }
                }
            }
        }
    }

    let sq_name = |s: &EmbSquare| -> String {
        let t = c.hmor(s.top);
        let is_vid = s.left == v_id_of_obj[t.src.0]
            && s.right == v_id_of_obj[t.tgt.0]
            && s.bottom == s.top
            && s.cell == c.vid_sq(c.comp_h(s.top, verticals[s.right].1).unwrap());
        if is_vid {
            return if c.is_h_identity(s.top) {
                format!("box:{}", c.object_name(t.src))
            } else {
                format!("e:{}", t.name)
            };
        }
        let is_hid = s.left == s.right
            && c.is_h_identity(s.top)
            && c.is_h_identity(s.bottom)
            && s.cell == c.vid_sq(verticals[s.left].1);
        if is_hid {
            return format!("idsq:{}", verticals[s.left].0);
        }
        format!(
            "sq[{}|{}|{}|{}|{}]",
            t.name,
            verticals[s.left].0,
            c.hmor(s.bottom).name,
            verticals[s.right].0,
            c.square(s.cell).name
        )
    };

    for s in &squares {
        let name = sq_name(s);
        if !name.starts_with("sq[") {
            continue; // identity squares are synthesized
        }
        raw.add_square(
            name,
            &c.hmor(s.top).name,
            &c.hmor(s.bottom).name,
            &verticals[s.left].0,
            &verticals[s.right].0,
        );
    }

    // s1 | s2: cell = (e_{t1} | cell2) / (cell1 | e_{b2}).
    for s1 in &squares {
        for s2 in &squares {
            if s1.right != s2.left {
                continue;
            }
            let z = c
                .sq_vcomp(
                    c.sq_hcomp(c.vid_sq(s1.top), s2.cell).unwrap(),
                    c.sq_hcomp(s1.cell, c.vid_sq(s2.bottom)).unwrap(),
                )
                .unwrap();
            let comp = EmbSquare {
                top: c.comp_h(s1.top, s2.top).unwrap(),
                bottom: c.comp_h(s1.bottom, s2.bottom).unwrap(),
                left: s1.left,
                right: s2.right,
                cell: z,
            };
            let k = *sq_index.get(&comp).expect("embedded | composite exists");
            raw.add_sq_hcomp(sq_name(s1), sq_name(s2), sq_name(&squares[k]));
        }
    }
    // s1 / s2: cell = (cell1 | e_{rf2}) / (e_{lf1} | cell2).
    for s1 in &squares {
        for s2 in &squares {
            if s1.bottom != s2.top {
                continue;
            }
            let (Some(&lk), Some(&rk)) = (
                vcomp_table.get(&(s1.left, s2.left)),
                vcomp_table.get(&(s1.right, s2.right)),
            ) else {
                continue;
            };
            let z = c
                .sq_vcomp(
                    c.sq_hcomp(s1.cell, c.vid_sq(verticals[s2.right].1)).unwrap(),
                    c.sq_hcomp(c.vid_sq(verticals[s1.left].1), s2.cell).unwrap(),
                )
                .unwrap();
            let comp = EmbSquare {
                top: s1.top,
                bottom: s2.bottom,
                left: lk,
                right: rk,
                cell: z,
            };
            let k = *sq_index.get(&comp).expect("embedded / composite exists");
            raw.add_sq_vcomp(sq_name(s1), sq_name(s2), sq_name(&squares[k]));
        }
    }

    raw.build().expect("embedded double category is valid")
}
