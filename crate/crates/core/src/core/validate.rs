//! Validation of raw double-category documents.
//!
//! Identities are distinguished elements located by canonical name
//! (`id:A`, `e:f`, `idsq:u`, `box:A`); a document may omit them and the
//! validator synthesizes the cells and every table entry that the unit and
//! identity-coherence laws force. Everything else must be explicit, and every
//! axiom failure is reported with a concrete witness.

use super::*;
use std::collections::hash_map::Entry;
use std::collections::{HashMap, HashSet};

struct Ctx {
    objects: Vec<String>,
    hmors: Vec<MorData>,
    vmors: Vec<MorData>,
    h_id: Vec<HId>,
    v_id: Vec<VId>,
    hcomp: HashMap<(HId, HId), HId>,
    vcomp: HashMap<(VId, VId), VId>,
    squares: Vec<SquareData>,
    sq_h: HashMap<(SqId, SqId), SqId>,
    sq_v: HashMap<(SqId, SqId), SqId>,
    vid: Vec<SqId>,
    hid: Vec<SqId>,
    diags: Vec<Diagnostic>,
}

pub fn validate_double_category(raw: &RawDoubleCategory) -> Result<DoubleCategory, Diagnostics> {
    let mut ctx = match assemble(raw) {
        Ok(ctx) => ctx,
        Err(diags) => return Err(diags),
    };

    synthesize_mor_units(&mut ctx);
    synthesize_square_units(&mut ctx);

    check_mor_category(&mut ctx);
    check_square_boundaries(&mut ctx);
    check_square_categories(&mut ctx);
    check_identity_coherence(&mut ctx);
    check_interchange(&mut ctx);

    if !ctx.diags.is_empty() {
        return Err(Diagnostics(ctx.diags));
    }

    let mut by_boundary: HashMap<SquareBoundary, Vec<SqId>> = HashMap::new();
    for (i, sq) in ctx.squares.iter().enumerate() {
        by_boundary
            .entry(SquareBoundary {
                top: sq.top,
                bottom: sq.bottom,
                left: sq.left,
                right: sq.right,
            })
            .or_default()
            .push(SqId(i));
    }

    Ok(DoubleCategory {
        objects: ctx.objects,
        hmors: ctx.hmors,
        vmors: ctx.vmors,
        h_id: ctx.h_id,
        v_id: ctx.v_id,
        hcomp: ctx.hcomp,
        vcomp: ctx.vcomp,
        squares: ctx.squares,
        sq_h: ctx.sq_h,
        sq_v: ctx.sq_v,
        vid: ctx.vid,
        hid: ctx.hid,
        by_boundary,
    })
}

/// Resolve names, synthesize missing identity cells, and build the tables.
/// Malformed documents (duplicates, dangling references, misused reserved
/// names, conflicting entries) are rejected here.
fn assemble(raw: &RawDoubleCategory) -> Result<Ctx, Diagnostics> {
    let mut diags = Vec::new();
    let malformed = |detail: String, diags: &mut Vec<Diagnostic>| {
        diags.push(Diagnostic::Malformed { detail });
    };

    let mut obj_index: HashMap<&str, ObjId> = HashMap::new();
    for (i, name) in raw.objects.iter().enumerate() {
        if obj_index.insert(name, ObjId(i)).is_some() {
            malformed(format!("duplicate object name {name:?}"), &mut diags);
        }
    }

    let resolve_obj = |name: &str, obj_index: &HashMap<&str, ObjId>| -> Option<ObjId> {
        obj_index.get(name).copied()
    };

    // Morphism lists with duplicate/dangling checks.
    let mut hmors: Vec<MorData> = Vec::new();
    let mut hmor_index: HashMap<String, HId> = HashMap::new();
    for (name, src, tgt) in &raw.hmor {
        let (s, t) = match (resolve_obj(src, &obj_index), resolve_obj(tgt, &obj_index)) {
            (Some(s), Some(t)) => (s, t),
            _ => {
                malformed(
                    format!("hmor {name:?} references unknown object {src:?} or {tgt:?}"),
                    &mut diags,
                );
                continue;
            }
        };
        if hmor_index.contains_key(name) {
            malformed(format!("duplicate hmor name {name:?}"), &mut diags);
            continue;
        }
        hmor_index.insert(name.clone(), HId(hmors.len()));
        hmors.push(MorData {
            name: name.clone(),
            src: s,
            tgt: t,
        });
    }
    let mut vmors: Vec<MorData> = Vec::new();
    let mut vmor_index: HashMap<String, VId> = HashMap::new();
    for (name, src, tgt) in &raw.vmor {
        let (s, t) = match (resolve_obj(src, &obj_index), resolve_obj(tgt, &obj_index)) {
            (Some(s), Some(t)) => (s, t),
            _ => {
                malformed(
                    format!("vmor {name:?} references unknown object {src:?} or {tgt:?}"),
                    &mut diags,
                );
                continue;
            }
        };
        if vmor_index.contains_key(name) {
            malformed(format!("duplicate vmor name {name:?}"), &mut diags);
            continue;
        }
        vmor_index.insert(name.clone(), VId(vmors.len()));
        vmors.push(MorData {
            name: name.clone(),
            src: s,
            tgt: t,
        });
    }
    if !diags.is_empty() {
        return Err(Diagnostics(diags));
    }

    // Distinguished identity morphisms, synthesized when absent.
    let mut h_id = Vec::with_capacity(raw.objects.len());
    let mut v_id = Vec::with_capacity(raw.objects.len());
    for (i, obj) in raw.objects.iter().enumerate() {
        let name = id_mor_name(obj);
        let h = match hmor_index.get(name.as_str()) {
            Some(&h) => {
                let m = &hmors[h.0];
                if m.src != ObjId(i) || m.tgt != ObjId(i) {
                    malformed(
                        format!("reserved hmor name {name:?} must be an endomorphism of {obj:?}"),
                        &mut diags,
                    );
                }
                h
            }
            None => {
                let h = HId(hmors.len());
                hmor_index.insert(name.clone(), h);
                hmors.push(MorData {
                    name: name.clone(),
                    src: ObjId(i),
                    tgt: ObjId(i),
                });
                h
            }
        };
        h_id.push(h);
        let v = match vmor_index.get(name.as_str()) {
            Some(&v) => {
                let m = &vmors[v.0];
                if m.src != ObjId(i) || m.tgt != ObjId(i) {
                    malformed(
                        format!("reserved vmor name {name:?} must be an endomorphism of {obj:?}"),
                        &mut diags,
                    );
                }
                v
            }
            None => {
                let v = VId(vmors.len());
                vmor_index.insert(name.clone(), v);
                vmors.push(MorData {
                    name,
                    src: ObjId(i),
                    tgt: ObjId(i),
                });
                v
            }
        };
        v_id.push(v);
    }
    if !diags.is_empty() {
        return Err(Diagnostics(diags));
    }

    // Square list.
    let mut squares: Vec<SquareData> = Vec::new();
    let mut square_index: HashMap<String, SqId> = HashMap::new();
    for (name, top, bottom, left, right) in &raw.squares {
        let (t, b) = match (hmor_index.get(top.as_str()), hmor_index.get(bottom.as_str())) {
            (Some(&t), Some(&b)) => (t, b),
            _ => {
                malformed(
                    format!("square {name:?} references unknown hmor {top:?} or {bottom:?}"),
                    &mut diags,
                );
                continue;
            }
        };
        let (l, r) = match (vmor_index.get(left.as_str()), vmor_index.get(right.as_str())) {
            (Some(&l), Some(&r)) => (l, r),
            _ => {
                malformed(
                    format!("square {name:?} references unknown vmor {left:?} or {right:?}"),
                    &mut diags,
                );
                continue;
            }
        };
        if square_index.contains_key(name) {
            malformed(format!("duplicate square name {name:?}"), &mut diags);
            continue;
        }
        square_index.insert(name.clone(), SqId(squares.len()));
        squares.push(SquareData {
            name: name.clone(),
            top: t,
            bottom: b,
            left: l,
            right: r,
        });
    }
    if !diags.is_empty() {
        return Err(Diagnostics(diags));
    }

    // Distinguished identity squares.
    let mut vid = Vec::with_capacity(hmors.len());
    for (i, m) in hmors.iter().enumerate() {
        let is_id = h_id[m.src.0] == HId(i) && m.src == m.tgt;
        let name = vid_sq_name(&m.name, is_id, &raw.objects[m.src.0]);
        let want = SquareData {
            name: name.clone(),
            top: HId(i),
            bottom: HId(i),
            left: v_id[m.src.0],
            right: v_id[m.tgt.0],
        };
        let s = match square_index.get(name.as_str()) {
            Some(&s) => {
                if squares[s.0] != want {
                    malformed(
                        format!("reserved square name {name:?} has the wrong boundary"),
                        &mut diags,
                    );
                }
                s
            }
            None => {
                let s = SqId(squares.len());
                square_index.insert(name.clone(), s);
                squares.push(want);
                s
            }
        };
        vid.push(s);
    }
    let mut hid = Vec::with_capacity(vmors.len());
    for (i, m) in vmors.iter().enumerate() {
        let is_id = v_id[m.src.0] == VId(i) && m.src == m.tgt;
        let name = hid_sq_name(&m.name, is_id, &raw.objects[m.src.0]);
        let want = SquareData {
            name: name.clone(),
            top: h_id[m.src.0],
            bottom: h_id[m.tgt.0],
            left: VId(i),
            right: VId(i),
        };
        let s = match square_index.get(name.as_str()) {
            Some(&s) => {
                if squares[s.0] != want {
                    malformed(
                        format!("reserved square name {name:?} has the wrong boundary"),
                        &mut diags,
                    );
                }
                s
            }
            None => {
                let s = SqId(squares.len());
                square_index.insert(name.clone(), s);
                squares.push(want);
                s
            }
        };
        hid.push(s);
    }
    if !diags.is_empty() {
        return Err(Diagnostics(diags));
    }

    // Composition tables, in diagrammatic order (first, second) -> composite.
    let mut hcomp: HashMap<(HId, HId), HId> = HashMap::new();
    for (first, second, result) in &raw.hcomp {
        let (f, g, c) = match (
            hmor_index.get(first.as_str()),
            hmor_index.get(second.as_str()),
            hmor_index.get(result.as_str()),
        ) {
            (Some(&f), Some(&g), Some(&c)) => (f, g, c),
            _ => {
                malformed(
                    format!("hcomp entry ({first:?}, {second:?}, {result:?}) has unknown names"),
                    &mut diags,
                );
                continue;
            }
        };
        if hmors[f.0].tgt != hmors[g.0].src {
            malformed(
                format!("hcomp entry on non-composable pair ({first:?}, {second:?})"),
                &mut diags,
            );
            continue;
        }
        match hcomp.entry((f, g)) {
            Entry::Occupied(e) if *e.get() != c => {
                malformed(
                    format!("conflicting hcomp entries for ({first:?}, {second:?})"),
                    &mut diags,
                );
            }
            e => {
                e.or_insert(c);
            }
        }
    }
    let mut vcomp: HashMap<(VId, VId), VId> = HashMap::new();
    for (first, second, result) in &raw.vcomp {
        let (f, g, c) = match (
            vmor_index.get(first.as_str()),
            vmor_index.get(second.as_str()),
            vmor_index.get(result.as_str()),
        ) {
            (Some(&f), Some(&g), Some(&c)) => (f, g, c),
            _ => {
                malformed(
                    format!("vcomp entry ({first:?}, {second:?}, {result:?}) has unknown names"),
                    &mut diags,
                );
                continue;
            }
        };
        if vmors[f.0].tgt != vmors[g.0].src {
            malformed(
                format!("vcomp entry on non-composable pair ({first:?}, {second:?})"),
                &mut diags,
            );
            continue;
        }
        match vcomp.entry((f, g)) {
            Entry::Occupied(e) if *e.get() != c => {
                malformed(
                    format!("conflicting vcomp entries for ({first:?}, {second:?})"),
                    &mut diags,
                );
            }
            e => {
                e.or_insert(c);
            }
        }
    }
    let mut sq_h: HashMap<(SqId, SqId), SqId> = HashMap::new();
    for (first, second, result) in &raw.sq_hcomp {
        let (a, b, c) = match (
            square_index.get(first.as_str()),
            square_index.get(second.as_str()),
            square_index.get(result.as_str()),
        ) {
            (Some(&a), Some(&b), Some(&c)) => (a, b, c),
            _ => {
                malformed(
                    format!("sq_hcomp entry ({first:?}, {second:?}, {result:?}) has unknown names"),
                    &mut diags,
                );
                continue;
            }
        };
        if squares[a.0].right != squares[b.0].left {
            malformed(
                format!("sq_hcomp entry on non-composable pair ({first:?}, {second:?})"),
                &mut diags,
            );
            continue;
        }
        match sq_h.entry((a, b)) {
            Entry::Occupied(e) if *e.get() != c => {
                malformed(
                    format!("conflicting sq_hcomp entries for ({first:?}, {second:?})"),
                    &mut diags,
                );
            }
            e => {
                e.or_insert(c);
            }
        }
    }
    let mut sq_v: HashMap<(SqId, SqId), SqId> = HashMap::new();
    for (first, second, result) in &raw.sq_vcomp {
        let (a, b, c) = match (
            square_index.get(first.as_str()),
            square_index.get(second.as_str()),
            square_index.get(result.as_str()),
        ) {
            (Some(&a), Some(&b), Some(&c)) => (a, b, c),
            _ => {
                malformed(
                    format!("sq_vcomp entry ({first:?}, {second:?}, {result:?}) has unknown names"),
                    &mut diags,
                );
                continue;
            }
        };
        if squares[a.0].bottom != squares[b.0].top {
            malformed(
                format!("sq_vcomp entry on non-composable pair ({first:?}, {second:?})"),
                &mut diags,
            );
            continue;
        }
        match sq_v.entry((a, b)) {
            Entry::Occupied(e) if *e.get() != c => {
                malformed(
                    format!("conflicting sq_vcomp entries for ({first:?}, {second:?})"),
                    &mut diags,
                );
            }
            e => {
                e.or_insert(c);
            }
        }
    }
    if !diags.is_empty() {
        return Err(Diagnostics(diags));
    }

    Ok(Ctx {
        objects: raw.objects.clone(),
        hmors,
        vmors,
        h_id,
        v_id,
        hcomp,
        vcomp,
        squares,
        sq_h,
        sq_v,
        vid,
        hid,
        diags,
    })
}

/// Fill in the table entries that the unit laws force for the distinguished
/// identity morphisms. Explicit entries are never overwritten.
fn synthesize_mor_units(ctx: &mut Ctx) {
    for f in 0..ctx.hmors.len() {
        let f = HId(f);
        let (s, t) = (ctx.hmors[f.0].src, ctx.hmors[f.0].tgt);
        ctx.hcomp.entry((ctx.h_id[s.0], f)).or_insert(f);
        ctx.hcomp.entry((f, ctx.h_id[t.0])).or_insert(f);
    }
    for u in 0..ctx.vmors.len() {
        let u = VId(u);
        let (s, t) = (ctx.vmors[u.0].src, ctx.vmors[u.0].tgt);
        ctx.vcomp.entry((ctx.v_id[s.0], u)).or_insert(u);
        ctx.vcomp.entry((u, ctx.v_id[t.0])).or_insert(u);
    }
}

/// Fill in square-table entries forced by the unit laws and by identity
/// coherence (`e_f | e_g = e_{fg}`, `id_u / id_w = id_{uw}`).
fn synthesize_square_units(ctx: &mut Ctx) {
    let n = ctx.squares.len();
    let is_vid: Vec<Option<HId>> = {
        let mut v = vec![None; n];
        for (f, &s) in ctx.vid.iter().enumerate() {
            v[s.0] = Some(HId(f));
        }
        v
    };
    let is_hid: Vec<Option<VId>> = {
        let mut v = vec![None; n];
        for (u, &s) in ctx.hid.iter().enumerate() {
            v[s.0] = Some(VId(u));
        }
        v
    };

    let mut by_left: HashMap<VId, Vec<SqId>> = HashMap::new();
    let mut by_top: HashMap<HId, Vec<SqId>> = HashMap::new();
    for (i, sq) in ctx.squares.iter().enumerate() {
        by_left.entry(sq.left).or_default().push(SqId(i));
        by_top.entry(sq.top).or_default().push(SqId(i));
    }

    for a in (0..n).map(SqId) {
        let right_a = ctx.squares[a.0].right;
        for &b in by_left.get(&right_a).into_iter().flatten() {
            if ctx.sq_h.contains_key(&(a, b)) {
                continue;
            }
            let value = if a == ctx.hid[ctx.squares[b.0].left.0] {
                Some(b)
            } else if b == ctx.hid[ctx.squares[a.0].right.0] {
                Some(a)
            } else if let (Some(f), Some(g)) = (is_vid[a.0], is_vid[b.0]) {
                ctx.hcomp.get(&(f, g)).map(|&fg| ctx.vid[fg.0])
            } else {
                None
            };
            if let Some(c) = value {
                ctx.sq_h.insert((a, b), c);
            }
        }
        let bottom_a = ctx.squares[a.0].bottom;
        for &b in by_top.get(&bottom_a).into_iter().flatten() {
            if ctx.sq_v.contains_key(&(a, b)) {
                continue;
            }
            let value = if a == ctx.vid[ctx.squares[b.0].top.0] {
                Some(b)
            } else if b == ctx.vid[ctx.squares[a.0].bottom.0] {
                Some(a)
            } else if let (Some(u), Some(w)) = (is_hid[a.0], is_hid[b.0]) {
                ctx.vcomp.get(&(u, w)).map(|&uw| ctx.hid[uw.0])
            } else {
                None
            };
            if let Some(c) = value {
                ctx.sq_v.insert((a, b), c);
            }
        }
    }
}

fn check_mor_category(ctx: &mut Ctx) {
    // Horizontal and vertical levels share this shape; run both.
    let h_diags = check_category_level(
        &ctx.hmors,
        &ctx.h_id,
        &ctx.hcomp,
        Law::TotalH,
        Law::CompEndpoints,
        Law::UnitH,
        Law::AssocH,
    );
    let v_diags = check_category_level(
        &ctx.vmors,
        &ctx.v_id,
        &ctx.vcomp,
        Law::TotalV,
        Law::CompEndpoints,
        Law::UnitV,
        Law::AssocV,
    );
    ctx.diags.extend(h_diags);
    ctx.diags.extend(v_diags);
}

fn check_category_level<I: Copy + Eq + std::hash::Hash + IdLike>(
    mors: &[MorData],
    ids: &[I],
    comp: &HashMap<(I, I), I>,
    total: Law,
    endpoints: Law,
    unit: Law,
    assoc: Law,
) -> Vec<Diagnostic> {
    let mut diags = Vec::new();
    let mut by_src: HashMap<ObjId, Vec<I>> = HashMap::new();
    for i in 0..mors.len() {
        by_src.entry(mors[i].src).or_default().push(I::from_usize(i));
    }
    // Totality and endpoint correctness.
    for (i, m) in mors.iter().enumerate() {
        let f = I::from_usize(i);
        for &g in by_src.get(&m.tgt).into_iter().flatten() {
            match comp.get(&(f, g)) {
                None => diags.push(Diagnostic::Axiom {
                    law: total,
                    witness: format!("({}, {})", m.name, mors[g.as_usize()].name),
                }),
                Some(&c) => {
                    let cm = &mors[c.as_usize()];
                    if cm.src != m.src || cm.tgt != mors[g.as_usize()].tgt {
                        diags.push(Diagnostic::Axiom {
                            law: endpoints,
                            witness: format!("({}, {}) -> {}", m.name, mors[g.as_usize()].name, cm.name),
                        });
                    }
                }
            }
        }
    }
    // Unit laws against the distinguished identities.
    for (i, m) in mors.iter().enumerate() {
        let f = I::from_usize(i);
        if comp.get(&(ids[m.src.0], f)) != Some(&f) {
            diags.push(Diagnostic::Axiom {
                law: unit,
                witness: format!("(id, {})", m.name),
            });
        }
        if comp.get(&(f, ids[m.tgt.0])) != Some(&f) {
            diags.push(Diagnostic::Axiom {
                law: unit,
                witness: format!("({}, id)", m.name),
            });
        }
    }
    // Associativity on composable triples.
    for (&(f, g), &fg) in comp {
        let g_tgt = mors[g.as_usize()].tgt;
        for &h in by_src.get(&g_tgt).into_iter().flatten() {
            // Missing entries were already reported as totality failures.
            let (Some(&gh), Some(&lhs)) = (comp.get(&(g, h)), comp.get(&(fg, h))) else {
                continue;
            };
            let Some(&rhs) = comp.get(&(f, gh)) else { continue };
            if lhs != rhs {
                diags.push(Diagnostic::Axiom {
                    law: assoc,
                    witness: format!(
                        "({}, {}, {})",
                        mors[f.as_usize()].name,
                        mors[g.as_usize()].name,
                        mors[h.as_usize()].name
                    ),
                });
            }
        }
    }
    diags
}

pub(crate) trait IdLike {
    fn from_usize(i: usize) -> Self;
    fn as_usize(&self) -> usize;
}
impl IdLike for HId {
    fn from_usize(i: usize) -> Self {
        HId(i)
    }
    fn as_usize(&self) -> usize {
        self.0
    }
}
impl IdLike for VId {
    fn from_usize(i: usize) -> Self {
        VId(i)
    }
    fn as_usize(&self) -> usize {
        self.0
    }
}

fn check_square_boundaries(ctx: &mut Ctx) {
    for sq in &ctx.squares {
        let top = &ctx.hmors[sq.top.0];
        let bottom = &ctx.hmors[sq.bottom.0];
        let left = &ctx.vmors[sq.left.0];
        let right = &ctx.vmors[sq.right.0];
        if top.src != left.src
            || top.tgt != right.src
            || bottom.src != left.tgt
            || bottom.tgt != right.tgt
        {
            ctx.diags.push(Diagnostic::Axiom {
                law: Law::CornerCompat,
                witness: sq.name.clone(),
            });
        }
    }
}

fn check_square_categories(ctx: &mut Ctx) {
    let n = ctx.squares.len();
    let mut by_left: HashMap<VId, Vec<SqId>> = HashMap::new();
    let mut by_top: HashMap<HId, Vec<SqId>> = HashMap::new();
    for (i, sq) in ctx.squares.iter().enumerate() {
        by_left.entry(sq.left).or_default().push(SqId(i));
        by_top.entry(sq.top).or_default().push(SqId(i));
    }

    // Totality + boundary functoriality, horizontal direction.
    for a in (0..n).map(SqId) {
        let sa = ctx.squares[a.0].clone();
        for &b in by_left.get(&sa.right).into_iter().flatten() {
            let sb = ctx.squares[b.0].clone();
            match ctx.sq_h.get(&(a, b)) {
                None => ctx.diags.push(Diagnostic::Axiom {
                    law: Law::TotalSqH,
                    witness: format!("({}, {})", sa.name, sb.name),
                }),
                Some(&c) => {
                    let sc = &ctx.squares[c.0];
                    let top_ok = ctx.hcomp.get(&(sa.top, sb.top)) == Some(&sc.top);
                    let bottom_ok = ctx.hcomp.get(&(sa.bottom, sb.bottom)) == Some(&sc.bottom);
                    if !(top_ok && bottom_ok && sc.left == sa.left && sc.right == sb.right) {
                        ctx.diags.push(Diagnostic::Axiom {
                            law: Law::BoundaryH,
                            witness: format!("({}, {}) -> {}", sa.name, sb.name, sc.name),
                        });
                    }
                }
            }
        }
        for &b in by_top.get(&sa.bottom).into_iter().flatten() {
            let sb = ctx.squares[b.0].clone();
            match ctx.sq_v.get(&(a, b)) {
                None => ctx.diags.push(Diagnostic::Axiom {
                    law: Law::TotalSqV,
                    witness: format!("({}, {})", sa.name, sb.name),
                }),
                Some(&c) => {
                    let sc = &ctx.squares[c.0];
                    let left_ok = ctx.vcomp.get(&(sa.left, sb.left)) == Some(&sc.left);
                    let right_ok = ctx.vcomp.get(&(sa.right, sb.right)) == Some(&sc.right);
                    if !(left_ok && right_ok && sc.top == sa.top && sc.bottom == sb.bottom) {
                        ctx.diags.push(Diagnostic::Axiom {
                            law: Law::BoundaryV,
                            witness: format!("({}, {}) -> {}", sa.name, sb.name, sc.name),
                        });
                    }
                }
            }
        }
    }

    // Unit laws against the distinguished identity squares.
    for a in (0..n).map(SqId) {
        let sa = &ctx.squares[a.0];
        let lid = ctx.hid[sa.left.0];
        let rid = ctx.hid[sa.right.0];
        if ctx.sq_h.get(&(lid, a)) != Some(&a) || ctx.sq_h.get(&(a, rid)) != Some(&a) {
            ctx.diags.push(Diagnostic::Axiom {
                law: Law::UnitSqH,
                witness: sa.name.clone(),
            });
        }
        let tid = ctx.vid[sa.top.0];
        let bid = ctx.vid[sa.bottom.0];
        if ctx.sq_v.get(&(tid, a)) != Some(&a) || ctx.sq_v.get(&(a, bid)) != Some(&a) {
            ctx.diags.push(Diagnostic::Axiom {
                law: Law::UnitSqV,
                witness: sa.name.clone(),
            });
        }
    }

    // Associativity of | and /.
    let entries: Vec<((SqId, SqId), SqId)> = ctx.sq_h.iter().map(|(&k, &v)| (k, v)).collect();
    for ((a, b), ab) in entries {
        let right_b = ctx.squares[b.0].right;
        for &c in by_left.get(&right_b).into_iter().flatten() {
            let (Some(&bc), Some(&lhs)) = (ctx.sq_h.get(&(b, c)), ctx.sq_h.get(&(ab, c))) else {
                continue;
            };
            let Some(&rhs) = ctx.sq_h.get(&(a, bc)) else {
                continue;
            };
            if lhs != rhs {
                ctx.diags.push(Diagnostic::Axiom {
                    law: Law::AssocSqH,
                    witness: format!(
                        "({}, {}, {})",
                        ctx.squares[a.0].name, ctx.squares[b.0].name, ctx.squares[c.0].name
                    ),
                });
            }
        }
    }
    let entries: Vec<((SqId, SqId), SqId)> = ctx.sq_v.iter().map(|(&k, &v)| (k, v)).collect();
    for ((a, b), ab) in entries {
        let bottom_b = ctx.squares[b.0].bottom;
        for &c in by_top.get(&bottom_b).into_iter().flatten() {
            let (Some(&bc), Some(&lhs)) = (ctx.sq_v.get(&(b, c)), ctx.sq_v.get(&(ab, c))) else {
                continue;
            };
            let Some(&rhs) = ctx.sq_v.get(&(a, bc)) else {
                continue;
            };
            if lhs != rhs {
                ctx.diags.push(Diagnostic::Axiom {
                    law: Law::AssocSqV,
                    witness: format!(
                        "({}, {}, {})",
                        ctx.squares[a.0].name, ctx.squares[b.0].name, ctx.squares[c.0].name
                    ),
                });
            }
        }
    }
}

fn check_identity_coherence(ctx: &mut Ctx) {
    for (&(f, g), &fg) in &ctx.hcomp {
        if ctx.sq_h.get(&(ctx.vid[f.0], ctx.vid[g.0])) != Some(&ctx.vid[fg.0]) {
            ctx.diags.push(Diagnostic::Axiom {
                law: Law::IdentityCoherence,
                witness: format!("e({}, {})", ctx.hmors[f.0].name, ctx.hmors[g.0].name),
            });
        }
    }
    for (&(u, w), &uw) in &ctx.vcomp {
        if ctx.sq_v.get(&(ctx.hid[u.0], ctx.hid[w.0])) != Some(&ctx.hid[uw.0]) {
            ctx.diags.push(Diagnostic::Axiom {
                law: Law::IdentityCoherence,
                witness: format!("idsq({}, {})", ctx.vmors[u.0].name, ctx.vmors[w.0].name),
            });
        }
    }
    for o in 0..ctx.objects.len() {
        if ctx.vid[ctx.h_id[o].0] != ctx.hid[ctx.v_id[o].0] {
            ctx.diags.push(Diagnostic::Axiom {
                law: Law::IdentityCoherence,
                witness: format!("box:{}", ctx.objects[o]),
            });
        }
    }
}

fn check_interchange(ctx: &mut Ctx) {
    // (a|b)/(c|d) = (a/c)|(b/d) whenever all four composites exist.
    let mut by_top_left: HashMap<(HId, VId), Vec<SqId>> = HashMap::new();
    let mut by_top: HashMap<HId, Vec<SqId>> = HashMap::new();
    for (i, sq) in ctx.squares.iter().enumerate() {
        by_top_left.entry((sq.top, sq.left)).or_default().push(SqId(i));
        by_top.entry(sq.top).or_default().push(SqId(i));
    }
    let mut seen: HashSet<(SqId, SqId, SqId, SqId)> = HashSet::new();
    let entries: Vec<((SqId, SqId), SqId)> = ctx.sq_h.iter().map(|(&k, &v)| (k, v)).collect();
    for ((a, b), ab) in entries {
        let (ba, bb) = (ctx.squares[a.0].bottom, ctx.squares[b.0].bottom);
        let candidates_c: Vec<SqId> = by_top.get(&ba).cloned().unwrap_or_default();
        for c in candidates_c {
            let key = (bb, ctx.squares[c.0].right);
            for &d in by_top_left.get(&key).into_iter().flatten() {
                if !seen.insert((a, b, c, d)) {
                    continue;
                }
                let (Some(&cd), Some(&ac), Some(&bd)) = (
                    ctx.sq_h.get(&(c, d)),
                    ctx.sq_v.get(&(a, c)),
                    ctx.sq_v.get(&(b, d)),
                ) else {
                    continue;
                };
                let (Some(&lhs), Some(&rhs)) =
                    (ctx.sq_v.get(&(ab, cd)), ctx.sq_h.get(&(ac, bd)))
                else {
                    continue;
                };
                if lhs != rhs {
                    ctx.diags.push(Diagnostic::Axiom {
                        law: Law::Interchange,
                        witness: format!(
                            "({}, {}, {}, {})",
                            ctx.squares[a.0].name,
                            ctx.squares[b.0].name,
                            ctx.squares[c.0].name,
                            ctx.squares[d.0].name
                        ),
                    });
                }
            }
        }
    }
}

/// Builder-style helpers for assembling raw documents programmatically.
impl RawDoubleCategory {
    pub fn new() -> Self {
        Self::default()
    }
    pub fn object(&mut self, name: impl Into<String>) -> &mut Self {
        self.objects.push(name.into());
        self
    }
    pub fn add_hmor(
        &mut self,
        name: impl Into<String>,
        src: impl Into<String>,
        tgt: impl Into<String>,
    ) -> &mut Self {
        self.hmor.push((name.into(), src.into(), tgt.into()));
        self
    }
    pub fn add_vmor(
        &mut self,
        name: impl Into<String>,
        src: impl Into<String>,
        tgt: impl Into<String>,
    ) -> &mut Self {
        self.vmor.push((name.into(), src.into(), tgt.into()));
        self
    }
    pub fn add_square(
        &mut self,
        name: impl Into<String>,
        top: impl Into<String>,
        bottom: impl Into<String>,
        left: impl Into<String>,
        right: impl Into<String>,
    ) -> &mut Self {
        self.squares
            .push((name.into(), top.into(), bottom.into(), left.into(), right.into()));
        self
    }
    /// `first` then `second` composes to `result`.
    pub fn add_hcomp(
        &mut self,
        first: impl Into<String>,
        second: impl Into<String>,
        result: impl Into<String>,
    ) -> &mut Self {
        self.hcomp.push((first.into(), second.into(), result.into()));
        self
    }
    pub fn add_vcomp(
        &mut self,
        first: impl Into<String>,
        second: impl Into<String>,
        result: impl Into<String>,
    ) -> &mut Self {
        self.vcomp.push((first.into(), second.into(), result.into()));
        self
    }
    /// `first | second = result`.
    pub fn add_sq_hcomp(
        &mut self,
        first: impl Into<String>,
        second: impl Into<String>,
        result: impl Into<String>,
    ) -> &mut Self {
        self.sq_hcomp.push((first.into(), second.into(), result.into()));
        self
    }
    /// `first / second = result` (first on top).
    pub fn add_sq_vcomp(
        &mut self,
        first: impl Into<String>,
        second: impl Into<String>,
        result: impl Into<String>,
    ) -> &mut Self {
        self.sq_vcomp.push((first.into(), second.into(), result.into()));
        self
    }
    pub fn build(&self) -> Result<DoubleCategory, Diagnostics> {
        validate_double_category(self)
    }
}
