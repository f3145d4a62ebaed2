//! Standard shapes, embeddings of 2-categories into double categories,
//! underlying 2-categories, duals, products and coproducts, the strict
//! internal hom, the core 2-groupoid, and adjoint-equivalence enumeration.

mod companion;
mod embeds;
mod hom;

pub use companion::{
    companion_2cat, companion_2cat_functor, unit_into_companion_2cat, CompanionTwoCat,
};
pub use embeds::{embed, EmbedKind};
pub use hom::{hom_one_counit, hom_v2_restriction, strict_hom, strict_hom_post, StrictHom};

use crate::core::*;
use std::collections::HashMap;

/// The fixed catalog of shapes used by the generating sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ShapeName {
    Empty,
    One,
    H2,
    V2,
    HxV,
    BoundaryHxV,
    ParSq,
    Sq2,
    Sq2vop,
    HSigma2,
    HSigmaI,
    VSigma2,
    VSigmaI,
}

impl ShapeName {
    pub const ALL: [ShapeName; 13] = [
        ShapeName::Empty,
        ShapeName::One,
        ShapeName::H2,
        ShapeName::V2,
        ShapeName::HxV,
        ShapeName::BoundaryHxV,
        ShapeName::ParSq,
        ShapeName::Sq2,
        ShapeName::Sq2vop,
        ShapeName::HSigma2,
        ShapeName::HSigmaI,
        ShapeName::VSigma2,
        ShapeName::VSigmaI,
    ];

    pub fn parse(s: &str) -> Option<ShapeName> {
        ShapeName::ALL.iter().copied().find(|n| n.as_str() == s)
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            ShapeName::Empty => "empty",
            ShapeName::One => "one",
            ShapeName::H2 => "h2",
            ShapeName::V2 => "v2",
            ShapeName::HxV => "hxv",
            ShapeName::BoundaryHxV => "boundary-hxv",
            ShapeName::ParSq => "parsq",
            ShapeName::Sq2 => "sq2",
            ShapeName::Sq2vop => "sq2vop",
            ShapeName::HSigma2 => "hsigma2",
            ShapeName::HSigmaI => "hsigmai",
            ShapeName::VSigma2 => "vsigma2",
            ShapeName::VSigmaI => "vsigmai",
        }
    }
}

/// The catalog value for a shape name; stable across runs.
pub fn shape(name: ShapeName) -> DoubleCategory {
    match name {
        ShapeName::Empty => RawDoubleCategory::new().build().unwrap(),
        ShapeName::One => {
            let mut raw = RawDoubleCategory::new();
            raw.object("*");
            raw.build().unwrap()
        }
        ShapeName::H2 => embed(EmbedKind::H, &walking_arrow()),
        ShapeName::V2 => dualize(DualKind::Transpose, &shape(ShapeName::H2)),
        ShapeName::HxV => product(&shape(ShapeName::H2), &shape(ShapeName::V2)).cat,
        ShapeName::BoundaryHxV => square_skeleton(0),
        ShapeName::ParSq => square_skeleton(2),
        ShapeName::Sq2 => embed(EmbedKind::Sq, &walking_arrow()),
        ShapeName::Sq2vop => dualize(DualKind::Vop, &shape(ShapeName::Sq2)),
        ShapeName::HSigma2 => embed(EmbedKind::H, &walking_2cell()),
        ShapeName::HSigmaI => embed(EmbedKind::H, &walking_2iso()),
        ShapeName::VSigma2 => dualize(DualKind::Transpose, &shape(ShapeName::HSigma2)),
        ShapeName::VSigmaI => dualize(DualKind::Transpose, &shape(ShapeName::HSigmaI)),
    }
}

/// The square boundary with `fillers` parallel squares glued in: 0 gives the
/// boundary of the walking square, 2 gives the parallel-squares pushout.
/// Cell names match the walking square `HxV` so the comparison functors are
/// name-level inclusions.
fn square_skeleton(fillers: usize) -> DoubleCategory {
    let mut raw = RawDoubleCategory::new();
    for o in ["(0,0)", "(0,1)", "(1,0)", "(1,1)"] {
        raw.object(o);
    }
    raw.add_hmor("(f,id:0)", "(0,0)", "(1,0)");
    raw.add_hmor("(f,id:1)", "(0,1)", "(1,1)");
    raw.add_vmor("(id:0,f)", "(0,0)", "(0,1)");
    raw.add_vmor("(id:1,f)", "(1,0)", "(1,1)");
    for i in 0..fillers {
        raw.add_square(
            format!("par:{i}"),
            "(f,id:0)",
            "(f,id:1)",
            "(id:0,f)",
            "(id:1,f)",
        );
    }
    raw.build().unwrap()
}

/// The walking arrow as a 2-category.
pub fn walking_arrow() -> TwoCategory {
    from_category(&["0", "1"], &[("f", "0", "1")], &[]).unwrap()
}

/// The walking isomorphism as a 2-category.
pub fn walking_iso() -> TwoCategory {
    from_category(
        &["0", "1"],
        &[("f", "0", "1"), ("g", "1", "0")],
        &[("f", "g", "id:0"), ("g", "f", "id:1")],
    )
    .unwrap()
}

/// The 2-category free on a single 2-cell `alpha: f => g`.
pub fn walking_2cell() -> TwoCategory {
    let mut raw = RawDoubleCategory::new();
    raw.object("0").object("1");
    raw.add_hmor("f", "0", "1").add_hmor("g", "0", "1");
    raw.add_square("alpha", "f", "g", "id:0", "id:1");
    TwoCategory::new(raw.build().unwrap()).unwrap()
}

/// The 2-category free on a 2-isomorphism `alpha: f => g`.
pub fn walking_2iso() -> TwoCategory {
    let mut raw = RawDoubleCategory::new();
    raw.object("0").object("1");
    raw.add_hmor("f", "0", "1").add_hmor("g", "0", "1");
    raw.add_square("alpha", "f", "g", "id:0", "id:1");
    raw.add_square("alphainv", "g", "f", "id:0", "id:1");
    raw.add_sq_vcomp("alpha", "alphainv", "e:f");
    raw.add_sq_vcomp("alphainv", "alpha", "e:g");
    TwoCategory::new(raw.build().unwrap()).unwrap()
}

/// A finite category presented by composition entries, as a locally discrete
/// 2-category. Entries are diagrammatic: `(first, second, composite)`.
pub fn from_category(
    objects: &[&str],
    morphisms: &[(&str, &str, &str)],
    comp: &[(&str, &str, &str)],
) -> Result<TwoCategory, Diagnostics> {
    let e_name = |m: &str| -> String {
        if let Some(obj) = m.strip_prefix("id:") {
            format!("box:{obj}")
        } else {
            format!("e:{m}")
        }
    };
    let mut raw = RawDoubleCategory::new();
    for o in objects {
        raw.object(*o);
    }
    for (name, src, tgt) in morphisms {
        raw.add_hmor(*name, *src, *tgt);
    }
    for (f, g, c) in comp {
        raw.add_hcomp(*f, *g, *c);
        raw.add_sq_hcomp(e_name(f), e_name(g), e_name(c));
    }
    TwoCategory::new(raw.build()?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnderlyingKind {
    H,
    V,
}

/// The underlying horizontal (or vertical) 2-category of a double category:
/// its 2-cells are the globular squares in the relevant direction.
pub fn underlying(kind: UnderlyingKind, d: &DoubleCategory) -> TwoCategory {
    match kind {
        UnderlyingKind::V => underlying(UnderlyingKind::H, &dualize(DualKind::Transpose, d)),
        UnderlyingKind::H => {
            let mut raw = RawDoubleCategory::new();
            for o in d.objects() {
                raw.object(d.object_name(o));
            }
            for f in d.hmors() {
                if !d.is_h_identity(f) {
                    let m = d.hmor(f);
                    raw.add_hmor(&m.name, d.object_name(m.src), d.object_name(m.tgt));
                }
            }
            for (&(f, g), &c) in &d.hcomp {
                raw.add_hcomp(&d.hmor(f).name, &d.hmor(g).name, &d.hmor(c).name);
            }
            let keep: Vec<SqId> = d.squares().filter(|&s| d.is_h_globular(s)).collect();
            for &s in &keep {
                let sq = d.square(s);
                if d.vid_sq(sq.top) == s {
                    continue; // synthesized identity 2-cell
                }
                raw.add_square(
                    &sq.name,
                    &d.hmor(sq.top).name,
                    &d.hmor(sq.bottom).name,
                    id_name(d, sq.left, true),
                    id_name(d, sq.right, true),
                );
            }
            for (&(a, b), &c) in &d.sq_h {
                if d.is_h_globular(a) && d.is_h_globular(b) {
                    raw.add_sq_hcomp(
                        &d.square(a).name,
                        &d.square(b).name,
                        &d.square(c).name,
                    );
                }
            }
            for (&(a, b), &c) in &d.sq_v {
                if d.is_h_globular(a) && d.is_h_globular(b) {
                    raw.add_sq_vcomp(
                        &d.square(a).name,
                        &d.square(b).name,
                        &d.square(c).name,
                    );
                }
            }
            TwoCategory::new(raw.build().expect("underlying 2-category is valid"))
                .expect("underlying image is globular")
        }
    }
}

fn id_name(d: &DoubleCategory, v: VId, vertical: bool) -> String {
    let m = if vertical {
        d.vmor(v)
    } else {
        unreachable!()
    };
    format!("id:{}", d.object_name(m.src))
}

/// The 2-functor a double functor induces on underlying 2-categories.
pub fn underlying_functor(kind: UnderlyingKind, f: &DoubleFunctor) -> TwoFunctor {
    match kind {
        UnderlyingKind::V => {
            underlying_functor(UnderlyingKind::H, &dualize_functor(DualKind::Transpose, f))
        }
        UnderlyingKind::H => {
            let src = underlying(UnderlyingKind::H, f.source());
            let tgt = underlying(UnderlyingKind::H, f.target());
            let tgt_sq: HashMap<&str, SqId> = tgt
                .squares()
                .map(|s| (tgt.square(s).name.as_str(), s))
                .collect();
            let obj_map = (0..src.object_count()).map(ObjId).map(|o| {
                tgt.object_by_name(f.target().object_name(f.on_object(
                    f.source().object_by_name(src.object_name(o)).unwrap(),
                )))
                .unwrap()
            });
            let hmor_map = src.hmors().map(|h| {
                tgt.hmor_by_name(
                    &f.target()
                        .hmor(f.on_hmor(f.source().hmor_by_name(&src.hmor(h).name).unwrap()))
                        .name,
                )
                .unwrap()
            });
            let vmor_map = src
                .vmors()
                .map(|v| tgt.v_identity(tgt.object_by_name(src.object_name(src.vmor(v).src)).map(|o| o).unwrap()));
            let sq_map = src.squares().map(|s| {
                let old = f.source().square_by_name(&src.square(s).name).unwrap();
                tgt_sq[f.target().square(f.on_square(old)).name.as_str()]
            });
            let df = crate::core::functor::functor_from_maps(
                src.as_double(),
                tgt.as_double(),
                obj_map.collect(),
                hmor_map.collect(),
                vmor_map.collect(),
                sq_map.collect(),
            )
            .expect("underlying functor preserves structure");
            TwoFunctor(df)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DualKind {
    Vop,
    Transpose,
}

/// `Vop` reverses the vertical morphisms and flips squares top-to-bottom;
/// `Transpose` exchanges the horizontal and vertical structure entirely.
pub fn dualize(kind: DualKind, d: &DoubleCategory) -> DoubleCategory {
    let mut raw = RawDoubleCategory::new();
    for o in d.objects() {
        raw.object(d.object_name(o));
    }
    match kind {
        DualKind::Vop => {
            for f in d.hmors() {
                if !d.is_h_identity(f) {
                    let m = d.hmor(f);
                    raw.add_hmor(&m.name, d.object_name(m.src), d.object_name(m.tgt));
                }
            }
            for u in d.vmors() {
                if !d.is_v_identity(u) {
                    let m = d.vmor(u);
                    raw.add_vmor(&m.name, d.object_name(m.tgt), d.object_name(m.src));
                }
            }
            for s in d.squares() {
                let sq = d.square(s);
                if d.vid_sq(sq.top) == s || d.hid_sq(sq.left) == s {
                    continue;
                }
                raw.add_square(
                    &sq.name,
                    &d.hmor(sq.bottom).name,
                    &d.hmor(sq.top).name,
                    &d.vmor(sq.left).name,
                    &d.vmor(sq.right).name,
                );
            }
            for (&(f, g), &c) in &d.hcomp {
                raw.add_hcomp(&d.hmor(f).name, &d.hmor(g).name, &d.hmor(c).name);
            }
            for (&(u, w), &c) in &d.vcomp {
                raw.add_vcomp(&d.vmor(w).name, &d.vmor(u).name, &d.vmor(c).name);
            }
            for (&(a, b), &c) in &d.sq_h {
                raw.add_sq_hcomp(&d.square(a).name, &d.square(b).name, &d.square(c).name);
            }
            for (&(a, b), &c) in &d.sq_v {
                raw.add_sq_vcomp(&d.square(b).name, &d.square(a).name, &d.square(c).name);
            }
        }
        DualKind::Transpose => {
            for u in d.vmors() {
                if !d.is_v_identity(u) {
                    let m = d.vmor(u);
                    raw.add_hmor(&m.name, d.object_name(m.src), d.object_name(m.tgt));
                }
            }
            for f in d.hmors() {
                if !d.is_h_identity(f) {
                    let m = d.hmor(f);
                    raw.add_vmor(&m.name, d.object_name(m.src), d.object_name(m.tgt));
                }
            }
            let rename = |s: SqId| -> String {
                let sq = d.square(s);
                if d.vid_sq(sq.top) == s {
                    if d.is_h_identity(sq.top) {
                        format!("box:{}", d.object_name(d.hmor(sq.top).src))
                    } else {
                        format!("idsq:{}", d.hmor(sq.top).name)
                    }
                } else if d.hid_sq(sq.left) == s {
                    format!("e:{}", d.vmor(sq.left).name)
                } else {
                    sq.name.clone()
                }
            };
            for s in d.squares() {
                let sq = d.square(s);
                if d.vid_sq(sq.top) == s || d.hid_sq(sq.left) == s {
                    continue;
                }
                raw.add_square(
                    rename(s),
                    &d.vmor(sq.left).name,
                    &d.vmor(sq.right).name,
                    &d.hmor(sq.top).name,
                    &d.hmor(sq.bottom).name,
                );
            }
            for (&(u, w), &c) in &d.vcomp {
                raw.add_hcomp(&d.vmor(u).name, &d.vmor(w).name, &d.vmor(c).name);
            }
            for (&(f, g), &c) in &d.hcomp {
                raw.add_vcomp(&d.hmor(f).name, &d.hmor(g).name, &d.hmor(c).name);
            }
            for (&(a, b), &c) in &d.sq_v {
                raw.add_sq_hcomp(rename(a), rename(b), rename(c));
            }
            for (&(a, b), &c) in &d.sq_h {
                raw.add_sq_vcomp(rename(a), rename(b), rename(c));
            }
        }
    }
    raw.build().expect("dual of a valid double category is valid")
}

/// Transport a functor along a duality; cell order is preserved, so the
/// index maps carry over directly.
pub fn dualize_functor(kind: DualKind, f: &DoubleFunctor) -> DoubleFunctor {
    let src = dualize(kind, f.source());
    let tgt = dualize(kind, f.target());
    let by_name = |d_old: &DoubleCategory, d_new: &DoubleCategory| {
        let _ = (d_old, d_new);
    };
    let _ = by_name;
    let (hmor_map, vmor_map) = match kind {
        DualKind::Vop => (
            remap_h(f.source(), f.target(), &src, &tgt, |d, h| d.hmor(h).name.clone(), f),
            remap_v(f.source(), f.target(), &src, &tgt, |d, v| d.vmor(v).name.clone(), f),
        ),
        DualKind::Transpose => {
            // horizontal cells of the transpose are the old verticals
            let hmor_map: Vec<HId> = src
                .hmors()
                .map(|h| {
                    let old = f.source().vmor_by_name(&src.hmor(h).name).unwrap();
                    tgt.hmor_by_name(&f.target().vmor(f.on_vmor(old)).name).unwrap()
                })
                .collect();
            let vmor_map: Vec<VId> = src
                .vmors()
                .map(|v| {
                    let old = f.source().hmor_by_name(&src.vmor(v).name).unwrap();
                    tgt.vmor_by_name(&f.target().hmor(f.on_hmor(old)).name).unwrap()
                })
                .collect();
            (hmor_map, vmor_map)
        }
    };
    let transposed_name = |d: &DoubleCategory, s: SqId| -> String {
        let sq = d.square(s);
        match kind {
            DualKind::Vop => sq.name.clone(),
            DualKind::Transpose => {
                if d.vid_sq(sq.top) == s {
                    if d.is_h_identity(sq.top) {
                        format!("box:{}", d.object_name(d.hmor(sq.top).src))
                    } else {
                        format!("idsq:{}", d.hmor(sq.top).name)
                    }
                } else if d.hid_sq(sq.left) == s {
                    format!("e:{}", d.vmor(sq.left).name)
                } else {
                    sq.name.clone()
                }
            }
        }
    };
    let tgt_sq: HashMap<String, SqId> = tgt
        .squares()
        .map(|s| (tgt.square(s).name.clone(), s))
        .collect();
    let sq_map: Vec<SqId> = src
        .squares()
        .map(|s| {
            // src square name -> old square -> image -> new name
            let old_name = invert_transposed_name(f.source(), &src.square(s).name, kind);
            let old = f.source().square_by_name(&old_name).unwrap();
            tgt_sq[&transposed_name(f.target(), f.on_square(old))]
        })
        .collect();
    let obj_map: Vec<ObjId> = src
        .objects()
        .map(|o| {
            let old = f.source().object_by_name(src.object_name(o)).unwrap();
            tgt.object_by_name(f.target().object_name(f.on_object(old))).unwrap()
        })
        .collect();
    crate::core::functor::functor_from_maps(&src, &tgt, obj_map, hmor_map, vmor_map, sq_map)
        .expect("dual functor preserves structure")
}

fn invert_transposed_name(old: &DoubleCategory, new_name: &str, kind: DualKind) -> String {
    match kind {
        DualKind::Vop => new_name.to_string(),
        DualKind::Transpose => {
            if let Some(rest) = new_name.strip_prefix("idsq:") {
                if old.hmor_by_name(rest).is_some() {
                    return format!("e:{rest}");
                }
            }
            if let Some(rest) = new_name.strip_prefix("e:") {
                if old.vmor_by_name(rest).is_some() {
                    return format!("idsq:{rest}");
                }
            }
            new_name.to_string()
        }
    }
}

fn remap_h(
    old_src: &DoubleCategory,
    old_tgt: &DoubleCategory,
    new_src: &DoubleCategory,
    new_tgt: &DoubleCategory,
    name: impl Fn(&DoubleCategory, HId) -> String,
    f: &DoubleFunctor,
) -> Vec<HId> {
    new_src
        .hmors()
        .map(|h| {
            let old = old_src.hmor_by_name(&new_src.hmor(h).name).unwrap();
            new_tgt.hmor_by_name(&name(old_tgt, f.on_hmor(old))).unwrap()
        })
        .collect()
}

fn remap_v(
    old_src: &DoubleCategory,
    old_tgt: &DoubleCategory,
    new_src: &DoubleCategory,
    new_tgt: &DoubleCategory,
    name: impl Fn(&DoubleCategory, VId) -> String,
    f: &DoubleFunctor,
) -> Vec<VId> {
    new_src
        .vmors()
        .map(|v| {
            let old = old_src.vmor_by_name(&new_src.vmor(v).name).unwrap();
            new_tgt.vmor_by_name(&name(old_tgt, f.on_vmor(old))).unwrap()
        })
        .collect()
}

/// A product double category plus the index maps needed to build the
/// projections and pairings.
pub struct Product {
    pub cat: DoubleCategory,
    pub obj: HashMap<(ObjId, ObjId), ObjId>,
    pub hmor: HashMap<(HId, HId), HId>,
    pub vmor: HashMap<(VId, VId), VId>,
    pub sq: HashMap<(SqId, SqId), SqId>,
    pub obj_back: Vec<(ObjId, ObjId)>,
    pub hmor_back: Vec<(HId, HId)>,
    pub vmor_back: Vec<(VId, VId)>,
    pub sq_back: Vec<(SqId, SqId)>,
    left: DoubleCategory,
    right: DoubleCategory,
}

/// Componentwise product with componentwise tables.
pub fn product(a: &DoubleCategory, b: &DoubleCategory) -> Product {
    let mut raw = RawDoubleCategory::new();
    let obj_name = |x: ObjId, y: ObjId| format!("({},{})", a.object_name(x), b.object_name(y));
    let hmor_name = |f: HId, g: HId| {
        if a.is_h_identity(f) && b.is_h_identity(g) {
            format!("id:{}", obj_name(a.hmor(f).src, b.hmor(g).src))
        } else {
            format!("({},{})", a.hmor(f).name, b.hmor(g).name)
        }
    };
    let vmor_name = |u: VId, w: VId| {
        if a.is_v_identity(u) && b.is_v_identity(w) {
            format!("id:{}", obj_name(a.vmor(u).src, b.vmor(w).src))
        } else {
            format!("({},{})", a.vmor(u).name, b.vmor(w).name)
        }
    };
    let sq_name = |s: SqId, t: SqId| {
        let (sa, sb) = (a.square(s), b.square(t));
        if a.vid_sq(sa.top) == s && b.vid_sq(sb.top) == t {
            let h = hmor_name(sa.top, sb.top);
            return match h.strip_prefix("id:") {
                Some(obj) => format!("box:{obj}"),
                None => format!("e:{h}"),
            };
        }
        if a.hid_sq(sa.left) == s && b.hid_sq(sb.left) == t {
            let v = vmor_name(sa.left, sb.left);
            return match v.strip_prefix("id:") {
                Some(obj) => format!("box:{obj}"),
                None => format!("idsq:{v}"),
            };
        }
        format!("({},{})", sa.name, sb.name)
    };

    for x in a.objects() {
        for y in b.objects() {
            raw.object(obj_name(x, y));
        }
    }
    for f in a.hmors() {
        for g in b.hmors() {
            let name = hmor_name(f, g);
            if name.starts_with("id:") {
                continue;
            }
            raw.add_hmor(
                name,
                obj_name(a.hmor(f).src, b.hmor(g).src),
                obj_name(a.hmor(f).tgt, b.hmor(g).tgt),
            );
        }
    }
    for u in a.vmors() {
        for w in b.vmors() {
            let name = vmor_name(u, w);
            if name.starts_with("id:") {
                continue;
            }
            raw.add_vmor(
                name,
                obj_name(a.vmor(u).src, b.vmor(w).src),
                obj_name(a.vmor(u).tgt, b.vmor(w).tgt),
            );
        }
    }
    for s in a.squares() {
        for t in b.squares() {
            let name = sq_name(s, t);
            if name.starts_with("box:") || name.starts_with("e:") || name.starts_with("idsq:") {
                continue;
            }
            let (sa, sb) = (a.square(s), b.square(t));
            raw.add_square(
                name,
                hmor_name(sa.top, sb.top),
                hmor_name(sa.bottom, sb.bottom),
                vmor_name(sa.left, sb.left),
                vmor_name(sa.right, sb.right),
            );
        }
    }
    for (&(f1, g1), &c1) in &a.hcomp {
        for (&(f2, g2), &c2) in &b.hcomp {
            raw.add_hcomp(hmor_name(f1, f2), hmor_name(g1, g2), hmor_name(c1, c2));
        }
    }
    for (&(u1, w1), &c1) in &a.vcomp {
        for (&(u2, w2), &c2) in &b.vcomp {
            raw.add_vcomp(vmor_name(u1, u2), vmor_name(w1, w2), vmor_name(c1, c2));
        }
    }
    for (&(x1, y1), &c1) in &a.sq_h {
        for (&(x2, y2), &c2) in &b.sq_h {
            raw.add_sq_hcomp(sq_name(x1, x2), sq_name(y1, y2), sq_name(c1, c2));
        }
    }
    for (&(x1, y1), &c1) in &a.sq_v {
        for (&(x2, y2), &c2) in &b.sq_v {
            raw.add_sq_vcomp(sq_name(x1, x2), sq_name(y1, y2), sq_name(c1, c2));
        }
    }
    let cat = raw.build().expect("product of valid double categories is valid");

    let mut obj = HashMap::new();
    let mut obj_back = Vec::new();
    for x in a.objects() {
        for y in b.objects() {
            let id = cat.object_by_name(&obj_name(x, y)).unwrap();
            obj.insert((x, y), id);
        }
    }
    for o in cat.objects() {
        let pair = obj.iter().find(|(_, &v)| v == o).map(|(&k, _)| k).unwrap();
        obj_back.push(pair);
        let _ = pair;
    }
    obj_back = {
        let mut v = vec![(ObjId(0), ObjId(0)); cat.object_count()];
        for (&k, &id) in &obj {
            v[id.0] = k;
        }
        v
    };
    let mut hmor = HashMap::new();
    for f in a.hmors() {
        for g in b.hmors() {
            hmor.insert((f, g), cat.hmor_by_name(&hmor_name(f, g)).unwrap());
        }
    }
    let hmor_back = {
        let mut v = vec![(HId(0), HId(0)); cat.hmor_count()];
        for (&k, &id) in &hmor {
            v[id.0] = k;
        }
        v
    };
    let mut vmor = HashMap::new();
    for u in a.vmors() {
        for w in b.vmors() {
            vmor.insert((u, w), cat.vmor_by_name(&vmor_name(u, w)).unwrap());
        }
    }
    let vmor_back = {
        let mut v = vec![(VId(0), VId(0)); cat.vmor_count()];
        for (&k, &id) in &vmor {
            v[id.0] = k;
        }
        v
    };
    let mut sq = HashMap::new();
    for s in a.squares() {
        for t in b.squares() {
            sq.insert((s, t), cat.square_by_name(&sq_name(s, t)).unwrap());
        }
    }
    let sq_back = {
        let mut v = vec![(SqId(0), SqId(0)); cat.square_count()];
        for (&k, &id) in &sq {
            v[id.0] = k;
        }
        v
    };
    Product {
        cat,
        obj,
        hmor,
        vmor,
        sq,
        obj_back,
        hmor_back,
        vmor_back,
        sq_back,
        left: a.clone(),
        right: b.clone(),
    }
}

impl Product {
    pub fn proj1(&self) -> DoubleFunctor {
        crate::core::functor::functor_from_maps(
            &self.cat,
            &self.left,
            self.obj_back.iter().map(|&(x, _)| x).collect(),
            self.hmor_back.iter().map(|&(x, _)| x).collect(),
            self.vmor_back.iter().map(|&(x, _)| x).collect(),
            self.sq_back.iter().map(|&(x, _)| x).collect(),
        )
        .expect("projection is a double functor")
    }
    pub fn proj2(&self) -> DoubleFunctor {
        crate::core::functor::functor_from_maps(
            &self.cat,
            &self.right,
            self.obj_back.iter().map(|&(_, y)| y).collect(),
            self.hmor_back.iter().map(|&(_, y)| y).collect(),
            self.vmor_back.iter().map(|&(_, y)| y).collect(),
            self.sq_back.iter().map(|&(_, y)| y).collect(),
        )
        .expect("projection is a double functor")
    }
    /// The pairing `<f, g>: X -> A x B` of functors with common source.
    pub fn pair(&self, f: &DoubleFunctor, g: &DoubleFunctor) -> DoubleFunctor {
        assert_eq!(f.source(), g.source());
        let x = f.source();
        crate::core::functor::functor_from_maps(
            x,
            &self.cat,
            x.objects().map(|o| self.obj[&(f.on_object(o), g.on_object(o))]).collect(),
            x.hmors().map(|h| self.hmor[&(f.on_hmor(h), g.on_hmor(h))]).collect(),
            x.vmors().map(|v| self.vmor[&(f.on_vmor(v), g.on_vmor(v))]).collect(),
            x.squares().map(|s| self.sq[&(f.on_square(s), g.on_square(s))]).collect(),
        )
        .expect("pairing is a double functor")
    }
    /// The product `f x g` of two functors into the factors of another product.
    pub fn map_from(&self, src: &Product, f: &DoubleFunctor, g: &DoubleFunctor) -> DoubleFunctor {
        crate::core::functor::functor_from_maps(
            &src.cat,
            &self.cat,
            src.obj_back.iter().map(|&(x, y)| self.obj[&(f.on_object(x), g.on_object(y))]).collect(),
            src.hmor_back.iter().map(|&(x, y)| self.hmor[&(f.on_hmor(x), g.on_hmor(y))]).collect(),
            src.vmor_back.iter().map(|&(x, y)| self.vmor[&(f.on_vmor(x), g.on_vmor(y))]).collect(),
            src.sq_back.iter().map(|&(x, y)| self.sq[&(f.on_square(x), g.on_square(y))]).collect(),
        )
        .expect("product functor preserves structure")
    }
}

/// A coproduct double category plus its inclusions.
pub struct Coproduct {
    pub cat: DoubleCategory,
    left: DoubleCategory,
    right: DoubleCategory,
}

/// Disjoint union; non-identity cells are prefixed `l:` and `r:`.
pub fn coproduct(a: &DoubleCategory, b: &DoubleCategory) -> Coproduct {
    let mut raw = RawDoubleCategory::new();
    let sides: [(&DoubleCategory, &str); 2] = [(a, "l"), (b, "r")];
    for (d, p) in sides {
        let obj = |o: ObjId| format!("{p}:{}", d.object_name(o));
        let hn = |f: HId| {
            if d.is_h_identity(f) {
                format!("id:{}", obj(d.hmor(f).src))
            } else {
                format!("{p}:{}", d.hmor(f).name)
            }
        };
        let vn = |u: VId| {
            if d.is_v_identity(u) {
                format!("id:{}", obj(d.vmor(u).src))
            } else {
                format!("{p}:{}", d.vmor(u).name)
            }
        };
        let sn = |s: SqId| {
            let sq = d.square(s);
            if d.vid_sq(sq.top) == s {
                let h = hn(sq.top);
                match h.strip_prefix("id:") {
                    Some(o) => format!("box:{o}"),
                    None => format!("e:{h}"),
                }
            } else if d.hid_sq(sq.left) == s {
                format!("idsq:{}", vn(sq.left))
            } else {
                format!("{p}:{}", sq.name)
            }
        };
        for o in d.objects() {
            raw.object(obj(o));
        }
        for f in d.hmors() {
            if !d.is_h_identity(f) {
                raw.add_hmor(hn(f), obj(d.hmor(f).src), obj(d.hmor(f).tgt));
            }
        }
        for u in d.vmors() {
            if !d.is_v_identity(u) {
                raw.add_vmor(vn(u), obj(d.vmor(u).src), obj(d.vmor(u).tgt));
            }
        }
        for s in d.squares() {
            let sq = d.square(s);
            if d.vid_sq(sq.top) == s || d.hid_sq(sq.left) == s {
                continue;
            }
            raw.add_square(sn(s), hn(sq.top), hn(sq.bottom), vn(sq.left), vn(sq.right));
        }
        for (&(f, g), &c) in &d.hcomp {
            raw.add_hcomp(hn(f), hn(g), hn(c));
        }
        for (&(u, w), &c) in &d.vcomp {
            raw.add_vcomp(vn(u), vn(w), vn(c));
        }
        for (&(x, y), &c) in &d.sq_h {
            raw.add_sq_hcomp(sn(x), sn(y), sn(c));
        }
        for (&(x, y), &c) in &d.sq_v {
            raw.add_sq_vcomp(sn(x), sn(y), sn(c));
        }
    }
    let cat = raw.build().expect("coproduct of valid double categories is valid");
    Coproduct {
        cat,
        left: a.clone(),
        right: b.clone(),
    }
}

impl Coproduct {
    fn inclusion(&self, side: &DoubleCategory, prefix: &str) -> DoubleFunctor {
        let cat = &self.cat;
        let obj = |o: ObjId| {
            cat.object_by_name(&format!("{prefix}:{}", side.object_name(o))).unwrap()
        };
        let obj_map: Vec<ObjId> = side.objects().map(obj).collect();
        let hmor_map: Vec<HId> = side
            .hmors()
            .map(|f| {
                if side.is_h_identity(f) {
                    cat.h_identity(obj(side.hmor(f).src))
                } else {
                    cat.hmor_by_name(&format!("{prefix}:{}", side.hmor(f).name)).unwrap()
                }
            })
            .collect();
        let vmor_map: Vec<VId> = side
            .vmors()
            .map(|u| {
                if side.is_v_identity(u) {
                    cat.v_identity(obj(side.vmor(u).src))
                } else {
                    cat.vmor_by_name(&format!("{prefix}:{}", side.vmor(u).name)).unwrap()
                }
            })
            .collect();
        let sq_map: Vec<SqId> = side
            .squares()
            .map(|s| {
                let sq = side.square(s);
                if side.vid_sq(sq.top) == s {
                    cat.vid_sq(hmor_map[sq.top.0])
                } else if side.hid_sq(sq.left) == s {
                    cat.hid_sq(vmor_map[sq.left.0])
                } else {
                    cat.square_by_name(&format!("{prefix}:{}", sq.name)).unwrap()
                }
            })
            .collect();
        crate::core::functor::functor_from_maps(side, cat, obj_map, hmor_map, vmor_map, sq_map)
            .expect("coproduct inclusion is a double functor")
    }
    pub fn incl1(&self) -> DoubleFunctor {
        self.inclusion(&self.left, "l")
    }
    pub fn incl2(&self) -> DoubleFunctor {
        self.inclusion(&self.right, "r")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombineKind {
    Product,
    Coproduct,
}

pub fn combine(kind: CombineKind, a: &DoubleCategory, b: &DoubleCategory) -> DoubleCategory {
    match kind {
        CombineKind::Product => product(a, b).cat,
        CombineKind::Coproduct => coproduct(a, b).cat,
    }
}

/// Adjoint equivalence data `(fwd, bwd, eta, eps)` in the underlying
/// horizontal 2-category: `eta: id => fwd;bwd` and `eps: bwd;fwd => id` are
/// vertically invertible globular squares satisfying the triangle identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdjointEquivalenceData {
    pub fwd: HId,
    pub bwd: HId,
    pub eta: SqId,
    pub eps: SqId,
}

impl AdjointEquivalenceData {
    pub fn identity(d: &DoubleCategory, a: ObjId) -> Self {
        AdjointEquivalenceData {
            fwd: d.h_identity(a),
            bwd: d.h_identity(a),
            eta: d.box_sq(a),
            eps: d.box_sq(a),
        }
    }

    pub fn is_identity(&self, d: &DoubleCategory) -> bool {
        *self == Self::identity(d, d.hmor(self.fwd).src)
    }

    pub fn apply(&self, f: &DoubleFunctor) -> Self {
        AdjointEquivalenceData {
            fwd: f.on_hmor(self.fwd),
            bwd: f.on_hmor(self.bwd),
            eta: f.on_square(self.eta),
            eps: f.on_square(self.eps),
        }
    }

    pub fn triangle_identities(&self, d: &DoubleCategory) -> bool {
        let ef = d.vid_sq(self.fwd);
        let eg = d.vid_sq(self.bwd);
        let t1 = (|| {
            let top = d.sq_hcomp(self.eta, ef)?;
            let bottom = d.sq_hcomp(ef, self.eps)?;
            d.sq_vcomp(top, bottom)
        })();
        let t2 = (|| {
            let top = d.sq_hcomp(eg, self.eta)?;
            let bottom = d.sq_hcomp(self.eps, eg)?;
            d.sq_vcomp(top, bottom)
        })();
        t1 == Some(ef) && t2 == Some(eg)
    }

    pub fn is_valid(&self, d: &DoubleCategory) -> bool {
        let (a, b) = (d.hmor(self.fwd).src, d.hmor(self.fwd).tgt);
        let bm = d.hmor(self.bwd);
        if bm.src != b || bm.tgt != a {
            return false;
        }
        let Some(fg) = d.comp_h(self.fwd, self.bwd) else { return false };
        let Some(gf) = d.comp_h(self.bwd, self.fwd) else { return false };
        let eta_b = d.boundary(self.eta);
        let eps_b = d.boundary(self.eps);
        eta_b.top == d.h_identity(a)
            && eta_b.bottom == fg
            && eta_b.left == d.v_identity(a)
            && eta_b.right == d.v_identity(a)
            && eps_b.top == gf
            && eps_b.bottom == d.h_identity(b)
            && eps_b.left == d.v_identity(b)
            && eps_b.right == d.v_identity(b)
            && d.is_v_invertible(self.eta)
            && d.is_v_invertible(self.eps)
            && self.triangle_identities(d)
    }

    /// The composite adjoint equivalence data.
    pub fn then(&self, other: &Self, d: &DoubleCategory) -> Option<Self> {
        let fwd = d.comp_h(self.fwd, other.fwd)?;
        let bwd = d.comp_h(other.bwd, self.bwd)?;
        let inner = d.sq_hcomp(d.sq_hcomp(d.vid_sq(self.fwd), other.eta)?, d.vid_sq(self.bwd))?;
        let eta = d.sq_vcomp(self.eta, inner)?;
        let inner = d.sq_hcomp(d.sq_hcomp(d.vid_sq(other.bwd), self.eps)?, d.vid_sq(other.fwd))?;
        let eps = d.sq_vcomp(inner, other.eps)?;
        Some(AdjointEquivalenceData { fwd, bwd, eta, eps })
    }
}

/// All adjoint equivalence data from `a` to `b`, in canonical order.
pub fn enumerate_adjoint_equivalences(
    d: &DoubleCategory,
    a: ObjId,
    b: ObjId,
) -> Vec<AdjointEquivalenceData> {
    let mut out = Vec::new();
    for fwd in d.hmors() {
        if d.hmor(fwd).src != a || d.hmor(fwd).tgt != b {
            continue;
        }
        for bwd in d.hmors() {
            if d.hmor(bwd).src != b || d.hmor(bwd).tgt != a {
                continue;
            }
            let Some(fg) = d.comp_h(fwd, bwd) else { continue };
            let Some(gf) = d.comp_h(bwd, fwd) else { continue };
            for eta in crate::lifting::invertible_globular_squares(d, d.h_identity(a), fg) {
                for eps in crate::lifting::invertible_globular_squares(d, gf, d.h_identity(b)) {
                    let data = AdjointEquivalenceData { fwd, bwd, eta, eps };
                    if data.triangle_identities(d) {
                        out.push(data);
                    }
                }
            }
        }
    }
    out
}

/// All adjoint equivalence data of `d`, grouped by source object.
pub fn all_adjoint_equivalences(d: &DoubleCategory) -> Vec<AdjointEquivalenceData> {
    let mut out = Vec::new();
    for a in d.objects() {
        for b in d.objects() {
            out.extend(enumerate_adjoint_equivalences(d, a, b));
        }
    }
    out
}

/// The maximal sub-2-category on equivalence 1-cells and invertible 2-cells,
/// pruned to a fixed point.
pub fn core_2gpd(c: &TwoCategory) -> TwoCategory {
    let d = c.as_double();
    let mut keep_h: Vec<bool> = vec![true; d.hmor_count()];
    let mut keep_sq: Vec<bool> = vec![true; d.square_count()];
    loop {
        let mut changed = false;
        for s in d.squares() {
            if !keep_sq[s.0] {
                continue;
            }
            let sq = d.square(s);
            let ok = keep_h[sq.top.0]
                && keep_h[sq.bottom.0]
                && d
                    .v_inverse(s)
                    .map(|inv| keep_sq[inv.0])
                    .unwrap_or(false);
            if !ok {
                keep_sq[s.0] = false;
                changed = true;
            }
        }
        for f in d.hmors() {
            if !keep_h[f.0] {
                continue;
            }
            let is_equiv = equivalence_within(d, f, &keep_h, &keep_sq);
            if !is_equiv {
                keep_h[f.0] = false;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    let mut raw = RawDoubleCategory::new();
    for o in d.objects() {
        raw.object(d.object_name(o));
    }
    for f in d.hmors() {
        if keep_h[f.0] && !d.is_h_identity(f) {
            let m = d.hmor(f);
            raw.add_hmor(&m.name, d.object_name(m.src), d.object_name(m.tgt));
        }
    }
    for (&(f, g), &cc) in &d.hcomp {
        if keep_h[f.0] && keep_h[g.0] {
            raw.add_hcomp(&d.hmor(f).name, &d.hmor(g).name, &d.hmor(cc).name);
        }
    }
    for s in d.squares() {
        if keep_sq[s.0] && d.vid_sq(d.square(s).top) != s {
            let sq = d.square(s);
            raw.add_square(
                &sq.name,
                &d.hmor(sq.top).name,
                &d.hmor(sq.bottom).name,
                format!("id:{}", d.object_name(d.hmor(sq.top).src)),
                format!("id:{}", d.object_name(d.hmor(sq.top).tgt)),
            );
        }
    }
    for (&(x, y), &cc) in &d.sq_h {
        if keep_sq[x.0] && keep_sq[y.0] {
            raw.add_sq_hcomp(&d.square(x).name, &d.square(y).name, &d.square(cc).name);
        }
    }
    for (&(x, y), &cc) in &d.sq_v {
        if keep_sq[x.0] && keep_sq[y.0] {
            raw.add_sq_vcomp(&d.square(x).name, &d.square(y).name, &d.square(cc).name);
        }
    }
    TwoCategory::new(raw.build().expect("core is a valid 2-category")).unwrap()
}

fn equivalence_within(d: &DoubleCategory, f: HId, keep_h: &[bool], keep_sq: &[bool]) -> bool {
    let (a, b) = (d.hmor(f).src, d.hmor(f).tgt);
    for g in d.hmors() {
        if !keep_h[g.0] || d.hmor(g).src != b || d.hmor(g).tgt != a {
            continue;
        }
        let (Some(fg), Some(gf)) = (d.comp_h(f, g), d.comp_h(g, f)) else { continue };
        if !keep_h[fg.0] || !keep_h[gf.0] {
            continue;
        }
        let etas = crate::lifting::invertible_globular_squares(d, d.h_identity(a), fg);
        let epss = crate::lifting::invertible_globular_squares(d, gf, d.h_identity(b));
        let eta_ok = etas.iter().any(|&s| keep_sq[s.0]);
        let eps_ok = epss.iter().any(|&s| keep_sq[s.0]);
        if eta_ok && eps_ok {
            return true;
        }
    }
    false
}

/// All double functors `x -> d`, by exhaustive backtracking in canonical
/// order.
pub fn enumerate_double_functors(x: &DoubleCategory, d: &DoubleCategory) -> Vec<DoubleFunctor> {
    let mut out = Vec::new();
    let mut obj_map = vec![ObjId(0); x.object_count()];
    assign_objects(x, d, 0, &mut obj_map, &mut out);
    out
}

fn assign_objects(
    x: &DoubleCategory,
    d: &DoubleCategory,
    at: usize,
    obj_map: &mut Vec<ObjId>,
    out: &mut Vec<DoubleFunctor>,
) {
    if at == x.object_count() {
        let nonid_h: Vec<HId> = x.hmors().filter(|&h| !x.is_h_identity(h)).collect();
        let mut hmor_map: Vec<Option<HId>> = (0..x.hmor_count())
            .map(|i| {
                let h = HId(i);
                x.is_h_identity(h).then(|| d.h_identity(obj_map[x.hmor(h).src.0]))
            })
            .collect();
        assign_hmors(x, d, obj_map, &nonid_h, 0, &mut hmor_map, out);
        return;
    }
    if x.object_count() > 0 && d.object_count() == 0 {
        return;
    }
    for o in d.objects() {
        obj_map[at] = o;
        assign_objects(x, d, at + 1, obj_map, out);
    }
}

fn assign_hmors(
    x: &DoubleCategory,
    d: &DoubleCategory,
    obj_map: &[ObjId],
    pending: &[HId],
    at: usize,
    hmor_map: &mut Vec<Option<HId>>,
    out: &mut Vec<DoubleFunctor>,
) {
    let consistent = x.hcomp.iter().all(|(&(f, g), &c)| {
        match (hmor_map[f.0], hmor_map[g.0], hmor_map[c.0]) {
            (Some(a), Some(b), Some(cc)) => d.comp_h(a, b) == Some(cc),
            _ => true,
        }
    });
    if !consistent {
        return;
    }
    if at == pending.len() {
        let hmor_map: Vec<HId> = hmor_map.iter().map(|h| h.unwrap()).collect();
        let nonid_v: Vec<VId> = x.vmors().filter(|&v| !x.is_v_identity(v)).collect();
        let mut vmor_map: Vec<Option<VId>> = (0..x.vmor_count())
            .map(|i| {
                let v = VId(i);
                x.is_v_identity(v).then(|| d.v_identity(obj_map[x.vmor(v).src.0]))
            })
            .collect();
        assign_vmors(x, d, obj_map, &hmor_map, &nonid_v, 0, &mut vmor_map, out);
        return;
    }
    let h = pending[at];
    let (s, t) = (obj_map[x.hmor(h).src.0], obj_map[x.hmor(h).tgt.0]);
    for cand in d.hmors() {
        if d.hmor(cand).src == s && d.hmor(cand).tgt == t {
            hmor_map[h.0] = Some(cand);
            assign_hmors(x, d, obj_map, pending, at + 1, hmor_map, out);
            hmor_map[h.0] = None;
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn assign_vmors(
    x: &DoubleCategory,
    d: &DoubleCategory,
    obj_map: &[ObjId],
    hmor_map: &[HId],
    pending: &[VId],
    at: usize,
    vmor_map: &mut Vec<Option<VId>>,
    out: &mut Vec<DoubleFunctor>,
) {
    let consistent = x.vcomp.iter().all(|(&(u, w), &c)| {
        match (vmor_map[u.0], vmor_map[w.0], vmor_map[c.0]) {
            (Some(a), Some(b), Some(cc)) => d.comp_v(a, b) == Some(cc),
            _ => true,
        }
    });
    if !consistent {
        return;
    }
    if at == pending.len() {
        let vmor_map: Vec<VId> = vmor_map.iter().map(|v| v.unwrap()).collect();
        let mut sq_map: Vec<Option<SqId>> = vec![None; x.square_count()];
        for f in x.hmors() {
            sq_map[x.vid_sq(f).0] = Some(d.vid_sq(hmor_map[f.0]));
        }
        for u in x.vmors() {
            sq_map[x.hid_sq(u).0] = Some(d.hid_sq(vmor_map[u.0]));
        }
        let pending_sq: Vec<SqId> = x.squares().filter(|s| sq_map[s.0].is_none()).collect();
        assign_squares(
            x, d, obj_map, hmor_map, &vmor_map, &pending_sq, 0, &mut sq_map, out,
        );
        return;
    }
    let u = pending[at];
    let (s, t) = (obj_map[x.vmor(u).src.0], obj_map[x.vmor(u).tgt.0]);
    for cand in d.vmors() {
        if d.vmor(cand).src == s && d.vmor(cand).tgt == t {
            vmor_map[u.0] = Some(cand);
            assign_vmors(x, d, obj_map, hmor_map, pending, at + 1, vmor_map, out);
            vmor_map[u.0] = None;
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn assign_squares(
    x: &DoubleCategory,
    d: &DoubleCategory,
    obj_map: &[ObjId],
    hmor_map: &[HId],
    vmor_map: &[VId],
    pending: &[SqId],
    at: usize,
    sq_map: &mut Vec<Option<SqId>>,
    out: &mut Vec<DoubleFunctor>,
) {
    let consistent = x
        .sq_h
        .iter()
        .all(|(&(a, b), &c)| match (sq_map[a.0], sq_map[b.0], sq_map[c.0]) {
            (Some(p), Some(q), Some(r)) => d.sq_hcomp(p, q) == Some(r),
            _ => true,
        })
        && x.sq_v
            .iter()
            .all(|(&(a, b), &c)| match (sq_map[a.0], sq_map[b.0], sq_map[c.0]) {
                (Some(p), Some(q), Some(r)) => d.sq_vcomp(p, q) == Some(r),
                _ => true,
            });
    if !consistent {
        return;
    }
    if at == pending.len() {
        let sq_map: Vec<SqId> = sq_map.iter().map(|s| s.unwrap()).collect();
        if let Ok(f) = crate::core::functor::functor_from_maps(
            x,
            d,
            obj_map.to_vec(),
            hmor_map.to_vec(),
            vmor_map.to_vec(),
            sq_map,
        ) {
            out.push(f);
        }
        return;
    }
    let s = pending[at];
    let sq = x.square(s);
    let b = SquareBoundary {
        top: hmor_map[sq.top.0],
        bottom: hmor_map[sq.bottom.0],
        left: vmor_map[sq.left.0],
        right: vmor_map[sq.right.0],
    };
    for &cand in d.boundary_squares(&b) {
        sq_map[s.0] = Some(cand);
        assign_squares(x, d, obj_map, hmor_map, vmor_map, pending, at + 1, sq_map, out);
        sq_map[s.0] = None;
    }
}

/// Structural isomorphism test by exhaustive search for a levelwise
/// bijective double functor.
pub fn are_isomorphic(a: &DoubleCategory, b: &DoubleCategory) -> bool {
    a.object_count() == b.object_count()
        && a.hmor_count() == b.hmor_count()
        && a.vmor_count() == b.vmor_count()
        && a.square_count() == b.square_count()
        && enumerate_double_functors(a, b).iter().any(|f| f.is_bijective())
}
