//! The strict internal hom `[[X, A]]` for finite `X`: objects are double
//! functors, horizontal and vertical morphisms are the strict natural
//! transformations in each direction, and squares are modifications.

use super::{enumerate_double_functors, product, underlying, UnderlyingKind};
use crate::core::*;
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

/// A horizontal transformation: per object a horizontal morphism of `A`, per
/// vertical morphism a square, subject to strict naturality, functoriality,
/// and square-naturality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HTransf {
    pub src: usize,
    pub tgt: usize,
    pub at_obj: Vec<HId>,
    pub at_vmor: Vec<SqId>,
}

/// A vertical transformation: the transposed dual of [`HTransf`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VTransf {
    pub src: usize,
    pub tgt: usize,
    pub at_obj: Vec<VId>,
    pub at_hmor: Vec<SqId>,
}

/// A modification: per object a square of `A` between the component cells of
/// its four boundary transformations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Modification {
    pub top: usize,
    pub bottom: usize,
    pub left: usize,
    pub right: usize,
    pub at_obj: Vec<SqId>,
}

/// The hom double category together with the data carried by its cells.
pub struct StrictHom {
    pub cat: DoubleCategory,
    pub x: DoubleCategory,
    pub a: DoubleCategory,
    /// Functor assigned to each object, aligned with `cat` object ids.
    pub objects: Vec<DoubleFunctor>,
    /// Aligned with `cat` hmor / vmor / square ids.
    pub htransf: Vec<HTransf>,
    pub vtransf: Vec<VTransf>,
    pub mods: Vec<Modification>,
    obj_index: HashMap<FunctorKey, ObjId>,
    ht_index: HashMap<HTransf, HId>,
    vt_index: HashMap<VTransf, VId>,
    mod_index: HashMap<Modification, SqId>,
}

type FunctorKey = (Vec<ObjId>, Vec<HId>, Vec<VId>, Vec<SqId>);

fn functor_key(f: &DoubleFunctor) -> FunctorKey {
    (
        f.source().objects().map(|o| f.on_object(o)).collect(),
        f.source().hmors().map(|h| f.on_hmor(h)).collect(),
        f.source().vmors().map(|v| f.on_vmor(v)).collect(),
        f.source().squares().map(|s| f.on_square(s)).collect(),
    )
}

impl StrictHom {
    pub fn object_of(&self, f: &DoubleFunctor) -> Option<ObjId> {
        self.obj_index.get(&functor_key(f)).copied()
    }
    pub fn hmor_of(&self, t: &HTransf) -> Option<HId> {
        self.ht_index.get(t).copied()
    }
    pub fn vmor_of(&self, t: &VTransf) -> Option<VId> {
        self.vt_index.get(t).copied()
    }
    pub fn square_of(&self, m: &Modification) -> Option<SqId> {
        self.mod_index.get(m).copied()
    }
}

static CACHE: Lazy<Mutex<HashMap<(String, String), Arc<StrictHom>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Build (or fetch) the strict hom `[[x, a]]`.
pub fn strict_hom(x: &DoubleCategory, a: &DoubleCategory) -> Arc<StrictHom> {
    let key = (x.canonical_key(), a.canonical_key());
    if let Some(hit) = CACHE.lock().unwrap().get(&key) {
        return hit.clone();
    }
    let built = Arc::new(build(x, a));
    CACHE.lock().unwrap().insert(key, built.clone());
    built
}

fn build(x: &DoubleCategory, a: &DoubleCategory) -> StrictHom {
    let objects = enumerate_double_functors(x, a);

    let mut htransf: Vec<HTransf> = Vec::new();
    for (i, f) in objects.iter().enumerate() {
        for (j, g) in objects.iter().enumerate() {
            enumerate_htransf(x, a, i, j, f, g, &mut htransf);
        }
    }
    let mut vtransf: Vec<VTransf> = Vec::new();
    for (i, f) in objects.iter().enumerate() {
        for (j, g) in objects.iter().enumerate() {
            enumerate_vtransf(x, a, i, j, f, g, &mut vtransf);
        }
    }
    let mut mods: Vec<Modification> = Vec::new();
    for (ti, t) in htransf.iter().enumerate() {
        for (li, l) in vtransf.iter().enumerate() {
            if l.src != t.src {
                continue;
            }
            for (ri, r) in vtransf.iter().enumerate() {
                if r.src != t.tgt {
                    continue;
                }
                for (bi, b) in htransf.iter().enumerate() {
                    if b.src != l.tgt || b.tgt != r.tgt {
                        continue;
                    }
                    enumerate_mods(x, a, (ti, bi, li, ri), (t, b, l, r), &mut mods);
                }
            }
        }
    }

    // Canonical names; identity cells are detected so the validator's
    // distinguished elements line up with the identity transformations.
    let obj_name = |i: usize| format!("F{i}");
    let ident_ht: Vec<Option<usize>> = htransf
        .iter()
        .map(|t| {
            let f = &objects[t.src];
            let ident = t.src == t.tgt
                && x.objects().all(|o| t.at_obj[o.0] == a.h_identity(f.on_object(o)))
                && x.vmors().all(|u| t.at_vmor[u.0] == a.hid_sq(f.on_vmor(u)));
            ident.then_some(t.src)
        })
        .collect();
    let ident_vt: Vec<Option<usize>> = vtransf
        .iter()
        .map(|t| {
            let f = &objects[t.src];
            let ident = t.src == t.tgt
                && x.objects().all(|o| t.at_obj[o.0] == a.v_identity(f.on_object(o)))
                && x.hmors().all(|h| t.at_hmor[h.0] == a.vid_sq(f.on_hmor(h)));
            ident.then_some(t.src)
        })
        .collect();
    let ht_name = |k: usize| match ident_ht[k] {
        Some(i) => format!("id:F{i}"),
        None => format!("ht:{k}"),
    };
    let vt_name = |k: usize| match ident_vt[k] {
        Some(i) => format!("id:F{i}"),
        None => format!("vt:{k}"),
    };
    let ht_lookup: HashMap<&HTransf, usize> =
        htransf.iter().enumerate().map(|(k, t)| (t, k)).collect();
    let vt_lookup: HashMap<&VTransf, usize> =
        vtransf.iter().enumerate().map(|(k, t)| (t, k)).collect();
    let mod_name = |m: &Modification, k: usize| -> String {
        // e-square of a horizontal transformation
        let t = &htransf[m.top];
        if m.top == m.bottom
            && ident_vt[m.left].is_some()
            && ident_vt[m.right].is_some()
            && x.objects().all(|o| m.at_obj[o.0] == a.vid_sq(t.at_obj[o.0]))
        {
            return match ident_ht[m.top] {
                Some(i) => format!("box:F{i}"),
                None => format!("e:{}", ht_name(m.top)),
            };
        }
        let l = &vtransf[m.left];
        if m.left == m.right
            && ident_ht[m.top].is_some()
            && ident_ht[m.bottom].is_some()
            && x.objects().all(|o| m.at_obj[o.0] == a.hid_sq(l.at_obj[o.0]))
        {
            return format!("idsq:{}", vt_name(m.left));
        }
        format!("md:{k}")
    };

    let mut raw = RawDoubleCategory::new();
    for i in 0..objects.len() {
        raw.object(obj_name(i));
    }
    for (k, t) in htransf.iter().enumerate() {
        if ident_ht[k].is_none() {
            raw.add_hmor(ht_name(k), obj_name(t.src), obj_name(t.tgt));
        }
    }
    for (k, t) in vtransf.iter().enumerate() {
        if ident_vt[k].is_none() {
            raw.add_vmor(vt_name(k), obj_name(t.src), obj_name(t.tgt));
        }
    }
    let mod_names: Vec<String> = mods
        .iter()
        .enumerate()
        .map(|(k, m)| mod_name(m, k))
        .collect();
    for (k, m) in mods.iter().enumerate() {
        if mod_names[k].starts_with("md:") {
            raw.add_square(
                &mod_names[k],
                ht_name(m.top),
                ht_name(m.bottom),
                vt_name(m.left),
                vt_name(m.right),
            );
        }
    }

    // Composition tables, componentwise.
    for (k1, t1) in htransf.iter().enumerate() {
        for (k2, t2) in htransf.iter().enumerate() {
            if t1.tgt != t2.src {
                continue;
            }
            let comp = HTransf {
                src: t1.src,
                tgt: t2.tgt,
                at_obj: x
                    .objects()
                    .map(|o| a.comp_h(t1.at_obj[o.0], t2.at_obj[o.0]).unwrap())
                    .collect(),
                at_vmor: x
                    .vmors()
                    .map(|u| a.sq_hcomp(t1.at_vmor[u.0], t2.at_vmor[u.0]).unwrap())
                    .collect(),
            };
            let k = *ht_lookup
                .get(&comp)
                .expect("composite horizontal transformation is enumerated");
            raw.add_hcomp(ht_name(k1), ht_name(k2), ht_name(k));
        }
    }
    for (k1, t1) in vtransf.iter().enumerate() {
        for (k2, t2) in vtransf.iter().enumerate() {
            if t1.tgt != t2.src {
                continue;
            }
            let comp = VTransf {
                src: t1.src,
                tgt: t2.tgt,
                at_obj: x
                    .objects()
                    .map(|o| a.comp_v(t1.at_obj[o.0], t2.at_obj[o.0]).unwrap())
                    .collect(),
                at_hmor: x
                    .hmors()
                    .map(|h| a.sq_vcomp(t1.at_hmor[h.0], t2.at_hmor[h.0]).unwrap())
                    .collect(),
            };
            let k = *vt_lookup
                .get(&comp)
                .expect("composite vertical transformation is enumerated");
            raw.add_vcomp(vt_name(k1), vt_name(k2), vt_name(k));
        }
    }
    let mod_lookup: HashMap<&Modification, usize> =
        mods.iter().enumerate().map(|(k, m)| (m, k)).collect();
    for (k1, m1) in mods.iter().enumerate() {
        for (k2, m2) in mods.iter().enumerate() {
            if m1.right != m2.left {
                continue;
            }
            let top = ht_composite(x, a, &htransf, &ht_lookup, m1.top, m2.top);
            let bottom = ht_composite(x, a, &htransf, &ht_lookup, m1.bottom, m2.bottom);
            let comp = Modification {
                top,
                bottom,
                left: m1.left,
                right: m2.right,
                at_obj: x
                    .objects()
                    .map(|o| a.sq_hcomp(m1.at_obj[o.0], m2.at_obj[o.0]).unwrap())
                    .collect(),
            };
            let k = *mod_lookup
                .get(&comp)
                .expect("composite modification is enumerated");
            raw.add_sq_hcomp(&mod_names[k1], &mod_names[k2], &mod_names[k]);
        }
    }
    for (k1, m1) in mods.iter().enumerate() {
        for (k2, m2) in mods.iter().enumerate() {
            if m1.bottom != m2.top {
                continue;
            }
            let left = vt_composite(x, a, &vtransf, &vt_lookup, m1.left, m2.left);
            let right = vt_composite(x, a, &vtransf, &vt_lookup, m1.right, m2.right);
            let comp = Modification {
                top: m1.top,
                bottom: m2.bottom,
                left,
                right,
                at_obj: x
                    .objects()
                    .map(|o| a.sq_vcomp(m1.at_obj[o.0], m2.at_obj[o.0]).unwrap())
                    .collect(),
            };
            let k = *mod_lookup
                .get(&comp)
                .expect("stacked modification is enumerated");
            raw.add_sq_vcomp(&mod_names[k1], &mod_names[k2], &mod_names[k]);
        }
    }

    let cat = raw.build().expect("strict hom is a valid double category");

    // Align meta with validated cell order.
    let mut obj_index = HashMap::new();
    for (i, f) in objects.iter().enumerate() {
        obj_index.insert(functor_key(f), cat.object_by_name(&obj_name(i)).unwrap());
    }
    let mut ht_aligned = vec![None; cat.hmor_count()];
    let mut ht_index = HashMap::new();
    for (k, t) in htransf.iter().enumerate() {
        let h = cat.hmor_by_name(&ht_name(k)).unwrap();
        ht_index.insert(t.clone(), h);
        ht_aligned[h.0] = Some(t.clone());
    }
    let mut vt_aligned = vec![None; cat.vmor_count()];
    let mut vt_index = HashMap::new();
    for (k, t) in vtransf.iter().enumerate() {
        let v = cat.vmor_by_name(&vt_name(k)).unwrap();
        vt_index.insert(t.clone(), v);
        vt_aligned[v.0] = Some(t.clone());
    }
    // Translate modification boundaries from enumeration order to cat ids.
    let enum_ht: Vec<HId> = (0..htransf.len())
        .map(|k| cat.hmor_by_name(&ht_name(k)).unwrap())
        .collect();
    let enum_vt: Vec<VId> = (0..vtransf.len())
        .map(|k| cat.vmor_by_name(&vt_name(k)).unwrap())
        .collect();
    let mut mod_aligned = vec![None; cat.square_count()];
    let mut mod_index = HashMap::new();
    for (k, m) in mods.iter().enumerate() {
        let s = cat.square_by_name(&mod_names[k]).unwrap();
        let translated = Modification {
            top: enum_ht[m.top].0,
            bottom: enum_ht[m.bottom].0,
            left: enum_vt[m.left].0,
            right: enum_vt[m.right].0,
            at_obj: m.at_obj.clone(),
        };
        mod_index.insert(translated.clone(), s);
        mod_aligned[s.0] = Some(translated);
    }
    let htransf: Vec<HTransf> = ht_aligned
        .into_iter()
        .map(|t| t.expect("every 1-cell of the hom carries transformation data"))
        .collect();
    let vtransf: Vec<VTransf> = vt_aligned
        .into_iter()
        .map(|t| t.expect("every vertical of the hom carries transformation data"))
        .collect();
    let mods: Vec<Modification> = mod_aligned
        .into_iter()
        .map(|m| m.expect("every square of the hom carries modification data"))
        .collect();

    // object order in `cat` equals enumeration order
    let objects_aligned = objects;

    StrictHom {
        cat,
        x: x.clone(),
        a: a.clone(),
        objects: objects_aligned,
        htransf,
        vtransf,
        mods,
        obj_index,
        ht_index,
        vt_index,
        mod_index,
    }
}

fn ht_composite(
    x: &DoubleCategory,
    a: &DoubleCategory,
    htransf: &[HTransf],
    lookup: &HashMap<&HTransf, usize>,
    k1: usize,
    k2: usize,
) -> usize {
    let (t1, t2) = (&htransf[k1], &htransf[k2]);
    let comp = HTransf {
        src: t1.src,
        tgt: t2.tgt,
        at_obj: x
            .objects()
            .map(|o| a.comp_h(t1.at_obj[o.0], t2.at_obj[o.0]).unwrap())
            .collect(),
        at_vmor: x
            .vmors()
            .map(|u| a.sq_hcomp(t1.at_vmor[u.0], t2.at_vmor[u.0]).unwrap())
            .collect(),
    };
    *lookup.get(&comp).expect("composite transformation exists")
}

fn vt_composite(
    x: &DoubleCategory,
    a: &DoubleCategory,
    vtransf: &[VTransf],
    lookup: &HashMap<&VTransf, usize>,
    k1: usize,
    k2: usize,
) -> usize {
    let (t1, t2) = (&vtransf[k1], &vtransf[k2]);
    let comp = VTransf {
        src: t1.src,
        tgt: t2.tgt,
        at_obj: x
            .objects()
            .map(|o| a.comp_v(t1.at_obj[o.0], t2.at_obj[o.0]).unwrap())
            .collect(),
        at_hmor: x
            .hmors()
            .map(|h| a.sq_vcomp(t1.at_hmor[h.0], t2.at_hmor[h.0]).unwrap())
            .collect(),
    };
    *lookup.get(&comp).expect("composite transformation exists")
}

/// Enumerate horizontal transformations `F => G` by backtracking over the
/// object components, then the vertical components.
fn enumerate_htransf(
    x: &DoubleCategory,
    a: &DoubleCategory,
    i: usize,
    j: usize,
    f: &DoubleFunctor,
    g: &DoubleFunctor,
    out: &mut Vec<HTransf>,
) {
    let mut at_obj: Vec<Option<HId>> = vec![None; x.object_count()];
    fn rec_obj(
        x: &DoubleCategory,
        a: &DoubleCategory,
        f: &DoubleFunctor,
        g: &DoubleFunctor,
        o: usize,
        at_obj: &mut Vec<Option<HId>>,
        done: &mut dyn FnMut(&[HId]),
    ) {
        // (h1) strict naturality on horizontal morphisms
        let ok = x.hmors().all(|h| {
            let m = x.hmor(h);
            match (at_obj[m.src.0], at_obj[m.tgt.0]) {
                (Some(ta), Some(tb)) => {
                    a.comp_h(f.on_hmor(h), tb) == a.comp_h(ta, g.on_hmor(h))
                }
                _ => true,
            }
        });
        if !ok {
            return;
        }
        if o == x.object_count() {
            let fixed: Vec<HId> = at_obj.iter().map(|t| t.unwrap()).collect();
            done(&fixed);
            return;
        }
        let (s, t) = (f.on_object(ObjId(o)), g.on_object(ObjId(o)));
        for cand in a.hmors() {
            if a.hmor(cand).src == s && a.hmor(cand).tgt == t {
                at_obj[o] = Some(cand);
                rec_obj(x, a, f, g, o + 1, at_obj, done);
                at_obj[o] = None;
            }
        }
    }

    let mut results: Vec<HTransf> = Vec::new();
    {
        let results = &mut results;
        rec_obj(x, a, f, g, 0, &mut at_obj, &mut |fixed: &[HId]| {
            // components at vertical morphisms; identities are forced
            let mut at_vmor: Vec<Option<SqId>> = x
                .vmors()
                .map(|u| {
                    x.is_v_identity(u)
                        .then(|| a.vid_sq(fixed[x.vmor(u).src.0]))
                })
                .collect();
            let pending: Vec<VId> = x.vmors().filter(|&u| !x.is_v_identity(u)).collect();
            rec_vmor(x, a, f, g, i, j, fixed, &pending, 0, &mut at_vmor, results);
        });
    }
    out.extend(results);
}

#[allow(clippy::too_many_arguments)]
fn rec_vmor(
    x: &DoubleCategory,
    a: &DoubleCategory,
    f: &DoubleFunctor,
    g: &DoubleFunctor,
    i: usize,
    j: usize,
    at_obj: &[HId],
    pending: &[VId],
    at: usize,
    at_vmor: &mut Vec<Option<SqId>>,
    out: &mut Vec<HTransf>,
) {
    // (h2) functoriality in the vertical direction
    let ok2 = x.vcomp.iter().all(|(&(u, w), &c)| {
        match (at_vmor[u.0], at_vmor[w.0], at_vmor[c.0]) {
            (Some(tu), Some(tw), Some(tc)) => a.sq_vcomp(tu, tw) == Some(tc),
            _ => true,
        }
    });
    // (h3) square naturality
    let ok3 = ok2
        && x.squares().all(|s| {
            let sq = x.square(s);
            match (at_vmor[sq.left.0], at_vmor[sq.right.0]) {
                (Some(tl), Some(tr)) => {
                    a.sq_hcomp(f.on_square(s), tr) == a.sq_hcomp(tl, g.on_square(s))
                }
                _ => true,
            }
        });
    if !ok3 {
        return;
    }
    if at == pending.len() {
        out.push(HTransf {
            src: i,
            tgt: j,
            at_obj: at_obj.to_vec(),
            at_vmor: at_vmor.iter().map(|s| s.unwrap()).collect(),
        });
        return;
    }
    let u = pending[at];
    let m = x.vmor(u);
    let b = SquareBoundary {
        top: at_obj[m.src.0],
        bottom: at_obj[m.tgt.0],
        left: f.on_vmor(u),
        right: g.on_vmor(u),
    };
    for &cand in a.boundary_squares(&b) {
        at_vmor[u.0] = Some(cand);
        rec_vmor(x, a, f, g, i, j, at_obj, pending, at + 1, at_vmor, out);
        at_vmor[u.0] = None;
    }
}

/// Transposed dual of [`enumerate_htransf`].
fn enumerate_vtransf(
    x: &DoubleCategory,
    a: &DoubleCategory,
    i: usize,
    j: usize,
    f: &DoubleFunctor,
    g: &DoubleFunctor,
    out: &mut Vec<VTransf>,
) {
    let mut at_obj: Vec<Option<VId>> = vec![None; x.object_count()];
    fn rec_obj(
        x: &DoubleCategory,
        a: &DoubleCategory,
        f: &DoubleFunctor,
        g: &DoubleFunctor,
        o: usize,
        at_obj: &mut Vec<Option<VId>>,
        done: &mut dyn FnMut(&[VId]),
    ) {
        let ok = x.vmors().all(|u| {
            let m = x.vmor(u);
            match (at_obj[m.src.0], at_obj[m.tgt.0]) {
                (Some(ta), Some(tb)) => {
                    a.comp_v(f.on_vmor(u), tb) == a.comp_v(ta, g.on_vmor(u))
                }
                _ => true,
            }
        });
        if !ok {
            return;
        }
        if o == x.object_count() {
            let fixed: Vec<VId> = at_obj.iter().map(|t| t.unwrap()).collect();
            done(&fixed);
            return;
        }
        let (s, t) = (f.on_object(ObjId(o)), g.on_object(ObjId(o)));
        for cand in a.vmors() {
            if a.vmor(cand).src == s && a.vmor(cand).tgt == t {
                at_obj[o] = Some(cand);
                rec_obj(x, a, f, g, o + 1, at_obj, done);
                at_obj[o] = None;
            }
        }
    }

    let mut results: Vec<VTransf> = Vec::new();
    {
        let results = &mut results;
        rec_obj(x, a, f, g, 0, &mut at_obj, &mut |fixed: &[VId]| {
            let mut at_hmor: Vec<Option<SqId>> = x
                .hmors()
                .map(|h| {
                    x.is_h_identity(h)
                        .then(|| a.hid_sq(fixed[x.hmor(h).src.0]))
                })
                .collect();
            let pending: Vec<HId> = x.hmors().filter(|&h| !x.is_h_identity(h)).collect();
            rec_hmor(x, a, f, g, i, j, fixed, &pending, 0, &mut at_hmor, results);
        });
    }
    out.extend(results);
}

#[allow(clippy::too_many_arguments)]
fn rec_hmor(
    x: &DoubleCategory,
    a: &DoubleCategory,
    f: &DoubleFunctor,
    g: &DoubleFunctor,
    i: usize,
    j: usize,
    at_obj: &[VId],
    pending: &[HId],
    at: usize,
    at_hmor: &mut Vec<Option<SqId>>,
    out: &mut Vec<VTransf>,
) {
    let ok2 = x.hcomp.iter().all(|(&(h, k), &c)| {
        match (at_hmor[h.0], at_hmor[k.0], at_hmor[c.0]) {
            (Some(th), Some(tk), Some(tc)) => a.sq_hcomp(th, tk) == Some(tc),
            _ => true,
        }
    });
    let ok3 = ok2
        && x.squares().all(|s| {
            let sq = x.square(s);
            match (at_hmor[sq.top.0], at_hmor[sq.bottom.0]) {
                (Some(tt), Some(tb)) => {
                    a.sq_vcomp(f.on_square(s), tb) == a.sq_vcomp(tt, g.on_square(s))
                }
                _ => true,
            }
        });
    if !ok3 {
        return;
    }
    if at == pending.len() {
        out.push(VTransf {
            src: i,
            tgt: j,
            at_obj: at_obj.to_vec(),
            at_hmor: at_hmor.iter().map(|s| s.unwrap()).collect(),
        });
        return;
    }
    let h = pending[at];
    let m = x.hmor(h);
    let b = SquareBoundary {
        top: f.on_hmor(h),
        bottom: g.on_hmor(h),
        left: at_obj[m.src.0],
        right: at_obj[m.tgt.0],
    };
    for &cand in a.boundary_squares(&b) {
        at_hmor[h.0] = Some(cand);
        rec_hmor(x, a, f, g, i, j, at_obj, pending, at + 1, at_hmor, out);
        at_hmor[h.0] = None;
    }
}

/// Enumerate modifications filling a transformation boundary.
fn enumerate_mods(
    x: &DoubleCategory,
    a: &DoubleCategory,
    ids: (usize, usize, usize, usize),
    border: (&HTransf, &HTransf, &VTransf, &VTransf),
    out: &mut Vec<Modification>,
) {
    let (ti, bi, li, ri) = ids;
    let (t, b, l, r) = border;
    let mut at_obj: Vec<Option<SqId>> = vec![None; x.object_count()];
    rec_mod(x, a, (ti, bi, li, ri), (t, b, l, r), 0, &mut at_obj, out);
}

#[allow(clippy::too_many_arguments)]
fn rec_mod(
    x: &DoubleCategory,
    a: &DoubleCategory,
    ids: (usize, usize, usize, usize),
    border: (&HTransf, &HTransf, &VTransf, &VTransf),
    o: usize,
    at_obj: &mut Vec<Option<SqId>>,
    out: &mut Vec<Modification>,
) {
    let (t, b, l, r) = border;
    // (m1) compatibility along horizontal morphisms of X
    let ok1 = x.hmors().all(|h| {
        let m = x.hmor(h);
        match (at_obj[m.src.0], at_obj[m.tgt.0]) {
            (Some(xs), Some(xt)) => {
                a.sq_hcomp(xs, r.at_hmor[h.0]) == a.sq_hcomp(l.at_hmor[h.0], xt)
            }
            _ => true,
        }
    });
    // (m2) compatibility along vertical morphisms of X
    let ok2 = ok1
        && x.vmors().all(|u| {
            let m = x.vmor(u);
            match (at_obj[m.src.0], at_obj[m.tgt.0]) {
                (Some(xs), Some(xt)) => {
                    a.sq_vcomp(xs, b.at_vmor[u.0]) == a.sq_vcomp(t.at_vmor[u.0], xt)
                }
                _ => true,
            }
        });
    if !ok2 {
        return;
    }
    if o == x.object_count() {
        let (ti, bi, li, ri) = ids;
        out.push(Modification {
            top: ti,
            bottom: bi,
            left: li,
            right: ri,
            at_obj: at_obj.iter().map(|s| s.unwrap()).collect(),
        });
        return;
    }
    let bd = SquareBoundary {
        top: t.at_obj[o],
        bottom: b.at_obj[o],
        left: l.at_obj[o],
        right: r.at_obj[o],
    };
    for &cand in a.boundary_squares(&bd) {
        at_obj[o] = Some(cand);
        rec_mod(x, a, ids, border, o + 1, at_obj, out);
        at_obj[o] = None;
    }
}

/// Post-composition `[[x, F]]: [[x, C]] -> [[x, E]]` of the hom by a functor.
pub fn strict_hom_post(x: &DoubleCategory, f: &DoubleFunctor) -> DoubleFunctor {
    let hsrc = strict_hom(x, f.source());
    let htgt = strict_hom(x, f.target());
    let obj_map: Vec<ObjId> = hsrc
        .objects
        .iter()
        .map(|g| htgt.object_of(&g.then(f)).expect("composite functor is enumerated"))
        .collect();
    let hmor_map: Vec<HId> = hsrc
        .htransf
        .iter()
        .map(|t| {
            let imt = HTransf {
                src: obj_idx(&htgt, &hsrc.objects[t.src].then(f)),
                tgt: obj_idx(&htgt, &hsrc.objects[t.tgt].then(f)),
                at_obj: t.at_obj.iter().map(|&h| f.on_hmor(h)).collect(),
                at_vmor: t.at_vmor.iter().map(|&s| f.on_square(s)).collect(),
            };
            htgt.hmor_of(&imt).expect("image transformation is enumerated")
        })
        .collect();
    let vmor_map: Vec<VId> = hsrc
        .vtransf
        .iter()
        .map(|t| {
            let imt = VTransf {
                src: obj_idx(&htgt, &hsrc.objects[t.src].then(f)),
                tgt: obj_idx(&htgt, &hsrc.objects[t.tgt].then(f)),
                at_obj: t.at_obj.iter().map(|&v| f.on_vmor(v)).collect(),
                at_hmor: t.at_hmor.iter().map(|&s| f.on_square(s)).collect(),
            };
            htgt.vmor_of(&imt).expect("image transformation is enumerated")
        })
        .collect();
    let sq_map: Vec<SqId> = hsrc
        .mods
        .iter()
        .map(|m| {
            let imm = Modification {
                top: hmor_map[m.top].0,
                bottom: hmor_map[m.bottom].0,
                left: vmor_map[m.left].0,
                right: vmor_map[m.right].0,
                at_obj: m.at_obj.iter().map(|&s| f.on_square(s)).collect(),
            };
            htgt.square_of(&imm).expect("image modification is enumerated")
        })
        .collect();
    crate::core::functor::functor_from_maps(
        &hsrc.cat,
        &htgt.cat,
        obj_map,
        hmor_map,
        vmor_map,
        sq_map,
    )
    .expect("hom post-composition is a double functor")
}

fn obj_idx(hom: &StrictHom, f: &DoubleFunctor) -> usize {
    hom.object_of(f).expect("functor is an object of the hom").0
}

/// The counit isomorphism `[[1, A]] -> A`.
pub fn hom_one_counit(a: &DoubleCategory) -> DoubleFunctor {
    let one = super::shape(super::ShapeName::One);
    let hom = strict_hom(&one, a);
    let obj_map: Vec<ObjId> = hom.objects.iter().map(|f| f.on_object(ObjId(0))).collect();
    let hmor_map: Vec<HId> = hom.htransf.iter().map(|t| t.at_obj[0]).collect();
    let vmor_map: Vec<VId> = hom.vtransf.iter().map(|t| t.at_obj[0]).collect();
    let sq_map: Vec<SqId> = hom.mods.iter().map(|m| m.at_obj[0]).collect();
    crate::core::functor::functor_from_maps(&hom.cat, a, obj_map, hmor_map, vmor_map, sq_map)
        .expect("the hom counit is a double functor")
}

/// The restriction 2-functor `H[[V2, D]] -> H D x H D` induced by the two
/// endpoint inclusions into the walking vertical morphism.
pub fn hom_v2_restriction(d: &DoubleCategory) -> TwoFunctor {
    let v2 = super::shape(super::ShapeName::V2);
    let hom = strict_hom(&v2, d);
    let hu = underlying(UnderlyingKind::H, &hom.cat);
    let uh = underlying(UnderlyingKind::H, d);
    let prod = product(uh.as_double(), uh.as_double());
    let tgt = TwoCategory::new(prod.cat.clone()).expect("product of 2-categories");

    let uh_obj = |o: ObjId| uh.object_by_name(d.object_name(o)).unwrap();
    let uh_hmor = |h: HId| uh.hmor_by_name(&d.hmor(h).name).unwrap();
    let uh_sq = |s: SqId| uh.square_by_name(&d.square(s).name).unwrap();

    let obj_map: Vec<ObjId> = hu
        .objects()
        .map(|o| {
            let f = &hom.objects[hom.cat.object_by_name(hu.object_name(o)).unwrap().0];
            prod.obj[&(uh_obj(f.on_object(ObjId(0))), uh_obj(f.on_object(ObjId(1))))]
        })
        .collect();
    let hmor_map: Vec<HId> = hu
        .hmors()
        .map(|h| {
            let t = &hom.htransf[hom.cat.hmor_by_name(&hu.hmor(h).name).unwrap().0];
            prod.hmor[&(uh_hmor(t.at_obj[0]), uh_hmor(t.at_obj[1]))]
        })
        .collect();
    let vmor_map: Vec<VId> = hu
        .vmors()
        .map(|v| prod.cat.v_identity(obj_map[hu.vmor(v).src.0]))
        .collect();
    let sq_map: Vec<SqId> = hu
        .squares()
        .map(|s| {
            let m = &hom.mods[hom.cat.square_by_name(&hu.square(s).name).unwrap().0];
            prod.sq[&(uh_sq(m.at_obj[0]), uh_sq(m.at_obj[1]))]
        })
        .collect();
    TwoFunctor(
        crate::core::functor::functor_from_maps(
            hu.as_double(),
            tgt.as_double(),
            obj_map,
            hmor_map,
            vmor_map,
            sq_map,
        )
        .expect("hom restriction is a 2-functor"),
    )
}
