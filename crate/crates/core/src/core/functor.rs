//! Double functors: level-wise maps validated to preserve all structure.

use super::*;

/// A validated double functor between two validated double categories.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleFunctor {
    pub(crate) source: DoubleCategory,
    pub(crate) target: DoubleCategory,
    pub(crate) obj_map: Vec<ObjId>,
    pub(crate) hmor_map: Vec<HId>,
    pub(crate) vmor_map: Vec<VId>,
    pub(crate) sq_map: Vec<SqId>,
}

/// Name-level functor data as it appears in documents. Identity cells may be
/// omitted; their images are forced.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RawFunctorData {
    pub on_objects: Vec<(String, String)>,
    pub on_hmor: Vec<(String, String)>,
    pub on_vmor: Vec<(String, String)>,
    pub on_squares: Vec<(String, String)>,
}

impl DoubleFunctor {
    pub fn source(&self) -> &DoubleCategory {
        &self.source
    }
    pub fn target(&self) -> &DoubleCategory {
        &self.target
    }
    pub fn on_object(&self, o: ObjId) -> ObjId {
        self.obj_map[o.0]
    }
    pub fn on_hmor(&self, h: HId) -> HId {
        self.hmor_map[h.0]
    }
    pub fn on_vmor(&self, v: VId) -> VId {
        self.vmor_map[v.0]
    }
    pub fn on_square(&self, s: SqId) -> SqId {
        self.sq_map[s.0]
    }
    pub fn on_boundary(&self, b: &SquareBoundary) -> SquareBoundary {
        SquareBoundary {
            top: self.on_hmor(b.top),
            bottom: self.on_hmor(b.bottom),
            left: self.on_vmor(b.left),
            right: self.on_vmor(b.right),
        }
    }

    /// The identity functor.
    pub fn identity(d: &DoubleCategory) -> DoubleFunctor {
        DoubleFunctor {
            source: d.clone(),
            target: d.clone(),
            obj_map: d.objects().collect(),
            hmor_map: d.hmors().collect(),
            vmor_map: d.vmors().collect(),
            sq_map: d.squares().collect(),
        }
    }

    /// The unique functor to the terminal double category.
    pub fn terminal(d: &DoubleCategory, one: &DoubleCategory) -> DoubleFunctor {
        let o = ObjId(0);
        DoubleFunctor {
            source: d.clone(),
            target: one.clone(),
            obj_map: vec![o; d.object_count()],
            hmor_map: vec![one.h_identity(o); d.hmor_count()],
            vmor_map: vec![one.v_identity(o); d.vmor_count()],
            sq_map: vec![one.box_sq(o); d.square_count()],
        }
    }

    /// Composite `self` then `g`. Panics if the middle categories differ;
    /// callers pair functors that share an endpoint by construction.
    pub fn then(&self, g: &DoubleFunctor) -> DoubleFunctor {
        assert_eq!(self.target, g.source, "functor composition endpoint mismatch");
        DoubleFunctor {
            source: self.source.clone(),
            target: g.target.clone(),
            obj_map: self.obj_map.iter().map(|&o| g.obj_map[o.0]).collect(),
            hmor_map: self.hmor_map.iter().map(|&h| g.hmor_map[h.0]).collect(),
            vmor_map: self.vmor_map.iter().map(|&v| g.vmor_map[v.0]).collect(),
            sq_map: self.sq_map.iter().map(|&s| g.sq_map[s.0]).collect(),
        }
    }

    /// Bijective on all four levels.
    pub fn is_bijective(&self) -> bool {
        fn bij<T: Copy + Ord>(map: &[T], n: usize, as_usize: impl Fn(T) -> usize) -> bool {
            if map.len() != n {
                return false;
            }
            let mut seen = vec![false; n];
            for &x in map {
                if seen[as_usize(x)] {
                    return false;
                }
                seen[as_usize(x)] = true;
            }
            true
        }
        bij(&self.obj_map, self.target.object_count(), |o: ObjId| o.0)
            && bij(&self.hmor_map, self.target.hmor_count(), |h: HId| h.0)
            && bij(&self.vmor_map, self.target.vmor_count(), |v: VId| v.0)
            && bij(&self.sq_map, self.target.square_count(), |s: SqId| s.0)
    }
}

/// A 2-functor, stored as the double functor between the horizontal images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoFunctor(pub DoubleFunctor);

impl std::ops::Deref for TwoFunctor {
    type Target = DoubleFunctor;
    fn deref(&self) -> &DoubleFunctor {
        &self.0
    }
}

/// Validate name-level functor data against validated endpoints.
///
/// Returns the functor iff all preservation laws hold; otherwise every
/// violation with a witness. Images of identity cells are forced and need not
/// appear in the document; if they do appear they must agree.
pub fn validate_double_functor(
    data: &RawFunctorData,
    src: &DoubleCategory,
    tgt: &DoubleCategory,
) -> Result<DoubleFunctor, Diagnostics> {
    let mut diags: Vec<Diagnostic> = Vec::new();

    let mut obj_map: Vec<Option<ObjId>> = vec![None; src.object_count()];
    for (from, to) in &data.on_objects {
        match (src.object_by_name(from), tgt.object_by_name(to)) {
            (Some(a), Some(b)) => {
                if let Some(prev) = obj_map[a.0] {
                    if prev != b {
                        diags.push(Diagnostic::Malformed {
                            detail: format!("conflicting images for object {from:?}"),
                        });
                    }
                }
                obj_map[a.0] = Some(b);
            }
            _ => diags.push(Diagnostic::Malformed {
                detail: format!("unknown object {from:?} or image {to:?}"),
            }),
        }
    }
    let mut hmor_map: Vec<Option<HId>> = vec![None; src.hmor_count()];
    for (from, to) in &data.on_hmor {
        match (src.hmor_by_name(from), tgt.hmor_by_name(to)) {
            (Some(a), Some(b)) => {
                if let Some(prev) = hmor_map[a.0] {
                    if prev != b {
                        diags.push(Diagnostic::Malformed {
                            detail: format!("conflicting images for hmor {from:?}"),
                        });
                    }
                }
                hmor_map[a.0] = Some(b);
            }
            _ => diags.push(Diagnostic::Malformed {
                detail: format!("unknown hmor {from:?} or image {to:?}"),
            }),
        }
    }
    let mut vmor_map: Vec<Option<VId>> = vec![None; src.vmor_count()];
    for (from, to) in &data.on_vmor {
        match (src.vmor_by_name(from), tgt.vmor_by_name(to)) {
            (Some(a), Some(b)) => {
                if let Some(prev) = vmor_map[a.0] {
                    if prev != b {
                        diags.push(Diagnostic::Malformed {
                            detail: format!("conflicting images for vmor {from:?}"),
                        });
                    }
                }
                vmor_map[a.0] = Some(b);
            }
            _ => diags.push(Diagnostic::Malformed {
                detail: format!("unknown vmor {from:?} or image {to:?}"),
            }),
        }
    }
    let mut sq_map: Vec<Option<SqId>> = vec![None; src.square_count()];
    for (from, to) in &data.on_squares {
        match (src.square_by_name(from), tgt.square_by_name(to)) {
            (Some(a), Some(b)) => {
                if let Some(prev) = sq_map[a.0] {
                    if prev != b {
                        diags.push(Diagnostic::Malformed {
                            detail: format!("conflicting images for square {from:?}"),
                        });
                    }
                }
                sq_map[a.0] = Some(b);
            }
            _ => diags.push(Diagnostic::Malformed {
                detail: format!("unknown square {from:?} or image {to:?}"),
            }),
        }
    }
    if !diags.is_empty() {
        return Err(Diagnostics(diags));
    }

    // Force identity images from the object map.
    for o in src.objects() {
        if let Some(b) = obj_map[o.0] {
            set_forced_h(&mut hmor_map, src.h_identity(o), tgt.h_identity(b), src, &mut diags);
            set_forced_v(&mut vmor_map, src.v_identity(o), tgt.v_identity(b), src, &mut diags);
        }
    }
    for f in src.hmors() {
        if let Some(b) = hmor_map[f.0] {
            set_forced_sq(&mut sq_map, src.vid_sq(f), tgt.vid_sq(b), src, &mut diags);
        }
    }
    for u in src.vmors() {
        if let Some(b) = vmor_map[u.0] {
            set_forced_sq(&mut sq_map, src.hid_sq(u), tgt.hid_sq(b), src, &mut diags);
        }
    }

    // Totality.
    for o in src.objects() {
        if obj_map[o.0].is_none() {
            diags.push(Diagnostic::Malformed {
                detail: format!("no image for object {:?}", src.object_name(o)),
            });
        }
    }
    for f in src.hmors() {
        if hmor_map[f.0].is_none() {
            diags.push(Diagnostic::Malformed {
                detail: format!("no image for hmor {:?}", src.hmor(f).name),
            });
        }
    }
    for u in src.vmors() {
        if vmor_map[u.0].is_none() {
            diags.push(Diagnostic::Malformed {
                detail: format!("no image for vmor {:?}", src.vmor(u).name),
            });
        }
    }
    for s in src.squares() {
        if sq_map[s.0].is_none() {
            diags.push(Diagnostic::Malformed {
                detail: format!("no image for square {:?}", src.square(s).name),
            });
        }
    }
    if !diags.is_empty() {
        return Err(Diagnostics(diags));
    }

    let obj_map: Vec<ObjId> = obj_map.into_iter().map(Option::unwrap).collect();
    let hmor_map: Vec<HId> = hmor_map.into_iter().map(Option::unwrap).collect();
    let vmor_map: Vec<VId> = vmor_map.into_iter().map(Option::unwrap).collect();
    let sq_map: Vec<SqId> = sq_map.into_iter().map(Option::unwrap).collect();

    check_preservation(src, tgt, &obj_map, &hmor_map, &vmor_map, &sq_map, &mut diags);
    if !diags.is_empty() {
        return Err(Diagnostics(diags));
    }

    Ok(DoubleFunctor {
        source: src.clone(),
        target: tgt.clone(),
        obj_map,
        hmor_map,
        vmor_map,
        sq_map,
    })
}

fn set_forced_h(
    map: &mut [Option<HId>],
    at: HId,
    want: HId,
    src: &DoubleCategory,
    diags: &mut Vec<Diagnostic>,
) {
    match map[at.0] {
        None => map[at.0] = Some(want),
        Some(have) if have != want => diags.push(Diagnostic::Axiom {
            law: Law::IdentityCoherence,
            witness: format!("image of identity hmor {:?}", src.hmor(at).name),
        }),
        _ => {}
    }
}
fn set_forced_v(
    map: &mut [Option<VId>],
    at: VId,
    want: VId,
    src: &DoubleCategory,
    diags: &mut Vec<Diagnostic>,
) {
    match map[at.0] {
        None => map[at.0] = Some(want),
        Some(have) if have != want => diags.push(Diagnostic::Axiom {
            law: Law::IdentityCoherence,
            witness: format!("image of identity vmor {:?}", src.vmor(at).name),
        }),
        _ => {}
    }
}
fn set_forced_sq(
    map: &mut [Option<SqId>],
    at: SqId,
    want: SqId,
    src: &DoubleCategory,
    diags: &mut Vec<Diagnostic>,
) {
    match map[at.0] {
        None => map[at.0] = Some(want),
        Some(have) if have != want => diags.push(Diagnostic::Axiom {
            law: Law::IdentityCoherence,
            witness: format!("image of identity square {:?}", src.square(at).name),
        }),
        _ => {}
    }
}

/// Build a functor directly from index maps, checking preservation.
pub(crate) fn functor_from_maps(
    src: &DoubleCategory,
    tgt: &DoubleCategory,
    obj_map: Vec<ObjId>,
    hmor_map: Vec<HId>,
    vmor_map: Vec<VId>,
    sq_map: Vec<SqId>,
) -> Result<DoubleFunctor, Diagnostics> {
    let mut diags = Vec::new();
    check_preservation(src, tgt, &obj_map, &hmor_map, &vmor_map, &sq_map, &mut diags);
    if diags.is_empty() {
        Ok(DoubleFunctor {
            source: src.clone(),
            target: tgt.clone(),
            obj_map,
            hmor_map,
            vmor_map,
            sq_map,
        })
    } else {
        Err(Diagnostics(diags))
    }
}

fn check_preservation(
    src: &DoubleCategory,
    tgt: &DoubleCategory,
    obj_map: &[ObjId],
    hmor_map: &[HId],
    vmor_map: &[VId],
    sq_map: &[SqId],
    diags: &mut Vec<Diagnostic>,
) {
    for f in src.hmors() {
        let m = src.hmor(f);
        let im = tgt.hmor(hmor_map[f.0]);
        if im.src != obj_map[m.src.0] || im.tgt != obj_map[m.tgt.0] {
            diags.push(Diagnostic::Axiom {
                law: Law::CompEndpoints,
                witness: format!("endpoints of hmor {:?}", m.name),
            });
        }
    }
    for u in src.vmors() {
        let m = src.vmor(u);
        let im = tgt.vmor(vmor_map[u.0]);
        if im.src != obj_map[m.src.0] || im.tgt != obj_map[m.tgt.0] {
            diags.push(Diagnostic::Axiom {
                law: Law::CompEndpoints,
                witness: format!("endpoints of vmor {:?}", m.name),
            });
        }
    }
    for s in src.squares() {
        let sq = src.square(s);
        let im = tgt.square(sq_map[s.0]);
        if im.top != hmor_map[sq.top.0]
            || im.bottom != hmor_map[sq.bottom.0]
            || im.left != vmor_map[sq.left.0]
            || im.right != vmor_map[sq.right.0]
        {
            diags.push(Diagnostic::Axiom {
                law: Law::CornerCompat,
                witness: format!("boundary of square {:?}", sq.name),
            });
        }
    }
    for o in src.objects() {
        if hmor_map[src.h_identity(o).0] != tgt.h_identity(obj_map[o.0]) {
            diags.push(Diagnostic::Axiom {
                law: Law::UnitH,
                witness: format!("identity hmor at {:?}", src.object_name(o)),
            });
        }
        if vmor_map[src.v_identity(o).0] != tgt.v_identity(obj_map[o.0]) {
            diags.push(Diagnostic::Axiom {
                law: Law::UnitV,
                witness: format!("identity vmor at {:?}", src.object_name(o)),
            });
        }
    }
    for f in src.hmors() {
        if sq_map[src.vid_sq(f).0] != tgt.vid_sq(hmor_map[f.0]) {
            diags.push(Diagnostic::Axiom {
                law: Law::UnitSqV,
                witness: format!("identity square e on {:?}", src.hmor(f).name),
            });
        }
    }
    for u in src.vmors() {
        if sq_map[src.hid_sq(u).0] != tgt.hid_sq(vmor_map[u.0]) {
            diags.push(Diagnostic::Axiom {
                law: Law::UnitSqH,
                witness: format!("identity square id on {:?}", src.vmor(u).name),
            });
        }
    }
    for (&(f, g), &c) in &src.hcomp {
        if tgt.comp_h(hmor_map[f.0], hmor_map[g.0]) != Some(hmor_map[c.0]) {
            diags.push(Diagnostic::Axiom {
                law: Law::AssocH,
                witness: format!(
                    "hcomp of ({:?}, {:?})",
                    src.hmor(f).name,
                    src.hmor(g).name
                ),
            });
        }
    }
    for (&(u, w), &c) in &src.vcomp {
        if tgt.comp_v(vmor_map[u.0], vmor_map[w.0]) != Some(vmor_map[c.0]) {
            diags.push(Diagnostic::Axiom {
                law: Law::AssocV,
                witness: format!(
                    "vcomp of ({:?}, {:?})",
                    src.vmor(u).name,
                    src.vmor(w).name
                ),
            });
        }
    }
    for (&(a, b), &c) in &src.sq_h {
        if tgt.sq_hcomp(sq_map[a.0], sq_map[b.0]) != Some(sq_map[c.0]) {
            diags.push(Diagnostic::Axiom {
                law: Law::AssocSqH,
                witness: format!(
                    "sq_hcomp of ({:?}, {:?})",
                    src.square(a).name,
                    src.square(b).name
                ),
            });
        }
    }
    for (&(a, b), &c) in &src.sq_v {
        if tgt.sq_vcomp(sq_map[a.0], sq_map[b.0]) != Some(sq_map[c.0]) {
            diags.push(Diagnostic::Axiom {
                law: Law::AssocSqV,
                witness: format!(
                    "sq_vcomp of ({:?}, {:?})",
                    src.square(a).name,
                    src.square(b).name
                ),
            });
        }
    }
}
