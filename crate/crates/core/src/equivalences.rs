//! Checkers for the morphism classes driving the model structures: canonical
//! trivial fibrations, gregarious fibrations and double equivalences,
//! biequivalences and equifibrations of 2-categories, the four-functor
//! criterion, equivalence 1-cells, weakly invertible and companionable
//! squares.

use crate::constructions::{
    companion_2cat, companion_2cat_functor, dualize_functor, strict_hom, strict_hom_post,
    underlying_functor, DualKind, ShapeName, UnderlyingKind,
};
use crate::core::*;
use crate::lifting::{
    all_greg_witnesses, invertible_globular_squares, CompanionWitness, GregariousAdjEquivWitness,
};
use std::collections::HashSet;
use std::fmt;

/// Verdict plus the first failing condition in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub verdict: bool,
    pub failures: Vec<Failure>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub condition: String,
    pub witness: String,
}

impl CheckReport {
    fn pass() -> CheckReport {
        CheckReport {
            verdict: true,
            failures: Vec::new(),
        }
    }
    fn fail(condition: &str, witness: String) -> CheckReport {
        CheckReport {
            verdict: false,
            failures: vec![Failure {
                condition: condition.to_string(),
                witness,
            }],
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.verdict {
            write!(f, "true")
        } else {
            let fail = &self.failures[0];
            write!(f, "false ({}: {})", fail.condition, fail.witness)
        }
    }
}

/// Canonical trivial fibration: surjective on objects, full on horizontal
/// and vertical morphisms, fully faithful on squares per boundary.
pub fn is_trivial_fibration(f: &DoubleFunctor) -> CheckReport {
    let (src, tgt) = (f.source(), f.target());

    let image: HashSet<ObjId> = src.objects().map(|o| f.on_object(o)).collect();
    for b in tgt.objects() {
        if !image.contains(&b) {
            return CheckReport::fail("surj-obj", tgt.object_name(b).to_string());
        }
    }

    for a in src.objects() {
        for c in src.objects() {
            for g in tgt.hmors() {
                let m = tgt.hmor(g);
                if m.src != f.on_object(a) || m.tgt != f.on_object(c) {
                    continue;
                }
                let hit = src.hmors().any(|h| {
                    src.hmor(h).src == a && src.hmor(h).tgt == c && f.on_hmor(h) == g
                });
                if !hit {
                    return CheckReport::fail(
                        "full-h",
                        format!(
                            "({}, {}) over {}",
                            src.object_name(a),
                            src.object_name(c),
                            m.name
                        ),
                    );
                }
            }
            for g in tgt.vmors() {
                let m = tgt.vmor(g);
                if m.src != f.on_object(a) || m.tgt != f.on_object(c) {
                    continue;
                }
                let hit = src.vmors().any(|u| {
                    src.vmor(u).src == a && src.vmor(u).tgt == c && f.on_vmor(u) == g
                });
                if !hit {
                    return CheckReport::fail(
                        "full-v",
                        format!(
                            "({}, {}) over {}",
                            src.object_name(a),
                            src.object_name(c),
                            m.name
                        ),
                    );
                }
            }
        }
    }

    fully_faithful_on_squares(f)
}

/// Fully faithful on squares, checked per boundary: the induced map from the
/// squares on a source boundary to the squares on its image boundary is
/// injective and surjective.
fn fully_faithful_on_squares(f: &DoubleFunctor) -> CheckReport {
    let (src, tgt) = (f.source(), f.target());
    for b in src.all_boundaries() {
        let upstairs = src.boundary_squares(&b);
        let fb = f.on_boundary(&b);
        let downstairs = tgt.boundary_squares(&fb);
        for &beta in downstairs {
            if !upstairs.iter().any(|&a| f.on_square(a) == beta) {
                return CheckReport::fail(
                    "full-squares",
                    format!(
                        "boundary (top {}, left {}) over {}",
                        src.hmor(b.top).name,
                        src.vmor(b.left).name,
                        tgt.square(beta).name
                    ),
                );
            }
        }
        for (i, &a1) in upstairs.iter().enumerate() {
            for &a2 in &upstairs[i + 1..] {
                if f.on_square(a1) == f.on_square(a2) {
                    return CheckReport::fail(
                        "faithful-squares",
                        format!("({}, {})", src.square(a1).name, src.square(a2).name),
                    );
                }
            }
        }
    }
    CheckReport::pass()
}

/// Local isofibration of the underlying horizontal 2-category: vertically
/// invertible globular squares with prescribed top lift strictly.
fn local_isofibration_h(f: &DoubleFunctor) -> Option<String> {
    let (src, tgt) = (f.source(), f.target());
    for h in src.hmors() {
        let fh = f.on_hmor(h);
        for g in tgt.hmors() {
            if tgt.hmor(g).src != tgt.hmor(fh).src || tgt.hmor(g).tgt != tgt.hmor(fh).tgt {
                continue;
            }
            for beta in invertible_globular_squares(tgt, fh, g) {
                let hit = src
                    .hmors()
                    .filter(|&k| {
                        src.hmor(k).src == src.hmor(h).src && src.hmor(k).tgt == src.hmor(h).tgt
                    })
                    .flat_map(|k| invertible_globular_squares(src, h, k))
                    .any(|alpha| f.on_square(alpha) == beta);
                if !hit {
                    return Some(format!(
                        "square {} on {} has no invertible lift",
                        tgt.square(beta).name,
                        src.hmor(h).name
                    ));
                }
            }
        }
    }
    None
}

/// Gregarious fibration: strict lifting of gregarious adjoint equivalence
/// witnesses based at image objects, plus local isofibrations in both
/// directions.
pub fn is_gregarious_fibration(f: &DoubleFunctor) -> CheckReport {
    let (src, tgt) = (f.source(), f.target());
    let down = all_greg_witnesses(tgt);
    let up = all_greg_witnesses(src);
    let lifted: HashSet<(ObjId, GregariousAdjEquivWitness)> =
        up.iter().map(|w| (w.src(src), w.apply(f))).collect();
    for a in src.objects() {
        for w in &down {
            if w.src(tgt) != f.on_object(a) {
                continue;
            }
            if !lifted.contains(&(a, *w)) {
                return CheckReport::fail(
                    "f1",
                    format!("witness at {} over {}", src.object_name(a), describe_greg(w, tgt)),
                );
            }
        }
    }
    if let Some(w) = local_isofibration_h(f) {
        return CheckReport::fail("f2", w);
    }
    let ft = dualize_functor(DualKind::Transpose, f);
    if let Some(w) = local_isofibration_h(&ft) {
        return CheckReport::fail("f3", w);
    }
    CheckReport::pass()
}

fn describe_greg(w: &GregariousAdjEquivWitness, d: &DoubleCategory) -> String {
    format!("({} -| {})", d.hmor(w.fwd.f).name, d.hmor(w.bwd.f).name)
}

/// Essential fullness of the underlying horizontal 2-category: every
/// horizontal morphism between image objects is vertically isomorphic to an
/// image morphism.
fn essentially_full_h(f: &DoubleFunctor) -> Option<String> {
    let (src, tgt) = (f.source(), f.target());
    for a in src.objects() {
        for c in src.objects() {
            for g in tgt.hmors() {
                let m = tgt.hmor(g);
                if m.src != f.on_object(a) || m.tgt != f.on_object(c) {
                    continue;
                }
                let hit = src
                    .hmors()
                    .filter(|&h| src.hmor(h).src == a && src.hmor(h).tgt == c)
                    .any(|h| !invertible_globular_squares(tgt, g, f.on_hmor(h)).is_empty());
                if !hit {
                    return Some(format!(
                        "({}, {}) over {}",
                        src.object_name(a),
                        src.object_name(c),
                        m.name
                    ));
                }
            }
        }
    }
    None
}

/// Gregarious double equivalence: surjective on objects up to gregarious
/// adjoint equivalence, essentially full on both morphism directions, fully
/// faithful on squares.
pub fn is_gregarious_equivalence(f: &DoubleFunctor) -> CheckReport {
    let (src, tgt) = (f.source(), f.target());
    let image: HashSet<ObjId> = src.objects().map(|o| f.on_object(o)).collect();
    // (g1), accepted in either orientation: equivalences in R are symmetric.
    let witnesses = all_greg_witnesses(tgt);
    for b in tgt.objects() {
        let hit = image.contains(&b)
            || witnesses.iter().any(|w| {
                (image.contains(&w.src(tgt)) && w.tgt(tgt) == b)
                    || (w.src(tgt) == b && image.contains(&w.tgt(tgt)))
            });
        if !hit {
            return CheckReport::fail("g1", tgt.object_name(b).to_string());
        }
    }
    if let Some(w) = essentially_full_h(f) {
        return CheckReport::fail("g2", w);
    }
    let ft = dualize_functor(DualKind::Transpose, f);
    if let Some(w) = essentially_full_h(&ft) {
        return CheckReport::fail("g3", w);
    }
    let ff = fully_faithful_on_squares(f);
    if !ff.verdict {
        return CheckReport::fail("g4", ff.failures[0].witness.clone());
    }
    CheckReport::pass()
}

/// A plain equivalence datum for a 1-cell, when one exists.
pub fn is_equivalence_1cell(c: &DoubleCategory, f: HId) -> Option<(HId, SqId, SqId)> {
    let (a, b) = (c.hmor(f).src, c.hmor(f).tgt);
    for g in c.hmors() {
        if c.hmor(g).src != b || c.hmor(g).tgt != a {
            continue;
        }
        let (Some(fg), Some(gf)) = (c.comp_h(f, g), c.comp_h(g, f)) else { continue };
        let etas = invertible_globular_squares(c, c.h_identity(a), fg);
        let epss = invertible_globular_squares(c, gf, c.h_identity(b));
        if let (Some(&eta), Some(&eps)) = (etas.first(), epss.first()) {
            return Some((g, eta, eps));
        }
    }
    None
}

/// Left adjoint search: some `u -| f` with unit and counit satisfying the
/// triangle identities (no invertibility required).
pub fn has_left_adjoint(c: &DoubleCategory, f: HId) -> bool {
    let (a, b) = (c.hmor(f).src, c.hmor(f).tgt);
    for u in c.hmors() {
        if c.hmor(u).src != b || c.hmor(u).tgt != a {
            continue;
        }
        let (Some(uf), Some(fu)) = (c.comp_h(u, f), c.comp_h(f, u)) else { continue };
        let eta_b = SquareBoundary {
            top: c.h_identity(b),
            bottom: uf,
            left: c.v_identity(b),
            right: c.v_identity(b),
        };
        let eps_b = SquareBoundary {
            top: fu,
            bottom: c.h_identity(a),
            left: c.v_identity(a),
            right: c.v_identity(a),
        };
        for &eta in c.boundary_squares(&eta_b) {
            for &eps in c.boundary_squares(&eps_b) {
                let eu = c.vid_sq(u);
                let ef = c.vid_sq(f);
                let t1 = c
                    .sq_hcomp(eta, eu)
                    .zip(c.sq_hcomp(eu, eps))
                    .and_then(|(x, y)| c.sq_vcomp(x, y));
                let t2 = c
                    .sq_hcomp(ef, eta)
                    .zip(c.sq_hcomp(eps, ef))
                    .and_then(|(x, y)| c.sq_vcomp(x, y));
                if t1 == Some(eu) && t2 == Some(ef) {
                    return true;
                }
            }
        }
    }
    false
}

/// Right adjoint search: some `f -| u`.
pub fn has_right_adjoint(c: &DoubleCategory, f: HId) -> bool {
    let (a, b) = (c.hmor(f).src, c.hmor(f).tgt);
    for u in c.hmors() {
        if c.hmor(u).src != b || c.hmor(u).tgt != a {
            continue;
        }
        let (Some(fu), Some(uf)) = (c.comp_h(f, u), c.comp_h(u, f)) else { continue };
        let eta_b = SquareBoundary {
            top: c.h_identity(a),
            bottom: fu,
            left: c.v_identity(a),
            right: c.v_identity(a),
        };
        let eps_b = SquareBoundary {
            top: uf,
            bottom: c.h_identity(b),
            left: c.v_identity(b),
            right: c.v_identity(b),
        };
        for &eta in c.boundary_squares(&eta_b) {
            for &eps in c.boundary_squares(&eps_b) {
                let eu = c.vid_sq(u);
                let ef = c.vid_sq(f);
                let t1 = c
                    .sq_hcomp(eta, ef)
                    .zip(c.sq_hcomp(ef, eps))
                    .and_then(|(x, y)| c.sq_vcomp(x, y));
                let t2 = c
                    .sq_hcomp(eu, eta)
                    .zip(c.sq_hcomp(eps, eu))
                    .and_then(|(x, y)| c.sq_vcomp(x, y));
                if t1 == Some(ef) && t2 == Some(eu) {
                    return true;
                }
            }
        }
    }
    false
}

/// Biequivalence of 2-functors, by enumeration.
pub fn is_biequivalence(g: &TwoFunctor) -> CheckReport {
    let (src, tgt) = (g.source(), g.target());
    let image: HashSet<ObjId> = src.objects().map(|o| g.on_object(o)).collect();
    for b in tgt.objects() {
        let hit = image.contains(&b)
            || tgt.hmors().any(|h| {
                let m = tgt.hmor(h);
                let touches = (image.contains(&m.src) && m.tgt == b)
                    || (m.src == b && image.contains(&m.tgt));
                touches && is_equivalence_1cell(tgt, h).is_some()
            });
        if !hit {
            return CheckReport::fail("b1", tgt.object_name(b).to_string());
        }
    }
    if let Some(w) = essentially_full_h(&g.0) {
        return CheckReport::fail("b2", w);
    }
    let ff = fully_faithful_on_squares(&g.0);
    if !ff.verdict {
        return CheckReport::fail("b3", ff.failures[0].witness.clone());
    }
    CheckReport::pass()
}

/// Equifibration of 2-functors: strict lifting of equivalences with
/// prescribed source, plus local isofibration.
pub fn is_equifibration(g: &TwoFunctor) -> CheckReport {
    let (src, tgt) = (g.source(), g.target());
    for a in src.objects() {
        for e in tgt.hmors() {
            if tgt.hmor(e).src != g.on_object(a) || is_equivalence_1cell(tgt, e).is_none() {
                continue;
            }
            let hit = src.hmors().any(|h| {
                src.hmor(h).src == a && g.on_hmor(h) == e && is_equivalence_1cell(src, h).is_some()
            });
            if !hit {
                return CheckReport::fail(
                    "f1",
                    format!("equivalence {} at {}", tgt.hmor(e).name, src.object_name(a)),
                );
            }
        }
    }
    if let Some(w) = local_isofibration_h(&g.0) {
        return CheckReport::fail("f2", w);
    }
    CheckReport::pass()
}

/// The four-functor criterion: `R`, `H`, `V`, and `H[[V2,-]]` all send the
/// functor to a biequivalence.
pub fn four_tuple_witness(f: &DoubleFunctor) -> CheckReport {
    let rsrc = companion_2cat(f.source());
    let rtgt = companion_2cat(f.target());
    let rf = companion_2cat_functor(f, &rsrc, &rtgt);
    let r = is_biequivalence(&rf);
    if !r.verdict {
        return CheckReport::fail("R", r.failures[0].witness.clone());
    }
    let h = is_biequivalence(&underlying_functor(UnderlyingKind::H, f));
    if !h.verdict {
        return CheckReport::fail("H", h.failures[0].witness.clone());
    }
    let v = is_biequivalence(&underlying_functor(UnderlyingKind::V, f));
    if !v.verdict {
        return CheckReport::fail("V", v.failures[0].witness.clone());
    }
    let v2 = crate::constructions::shape(ShapeName::V2);
    let hom_f = strict_hom_post(&v2, f);
    let hh = is_biequivalence(&underlying_functor(UnderlyingKind::H, &hom_f));
    if !hh.verdict {
        return CheckReport::fail("HhomV2", hh.failures[0].witness.clone());
    }
    CheckReport::pass()
}

/// A square is weakly horizontally invertible if it is an equivalence as a
/// 1-cell of `H[[V2, D]]`.
pub fn is_weakly_h_invertible(d: &DoubleCategory, s: SqId) -> bool {
    weakly_h_invertible_set(d)[s.0]
}

/// Weak horizontal invertibility for every square at once.
pub fn weakly_h_invertible_set(d: &DoubleCategory) -> Vec<bool> {
    let v2 = crate::constructions::shape(ShapeName::V2);
    let hom = strict_hom(&v2, d);
    let hu = crate::constructions::underlying(UnderlyingKind::H, &hom.cat);
    let walking = hom
        .x
        .vmors()
        .find(|&u| !hom.x.is_v_identity(u))
        .expect("V2 has a walking vertical");
    let mut result = vec![false; d.square_count()];
    for h in hu.hmors() {
        let t = &hom.htransf[hom.cat.hmor_by_name(&hu.hmor(h).name).unwrap().0];
        let carried = t.at_vmor[walking.0];
        if is_equivalence_1cell(hu.as_double(), h).is_some() {
            result[carried.0] = true;
        }
    }
    result
}

/// Weak vertical invertibility, via the transpose.
pub fn weakly_v_invertible_set(d: &DoubleCategory) -> Vec<bool> {
    let dt = crate::constructions::dualize(DualKind::Transpose, d);
    let transposed = weakly_h_invertible_set(&dt);
    let mut result = vec![false; d.square_count()];
    for s in d.squares() {
        let name = transposed_square_name(d, s);
        let st = dt.square_by_name(&name).expect("transpose keeps squares");
        result[s.0] = transposed[st.0];
    }
    result
}

fn transposed_square_name(d: &DoubleCategory, s: SqId) -> String {
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
}

/// Companionability of a square against companion data on its horizontal
/// boundary: the pasting `psi / alpha / phi'` is horizontally invertible.
pub fn is_companionable(
    d: &DoubleCategory,
    s: SqId,
    top_data: &CompanionWitness,
    bottom_data: &CompanionWitness,
) -> Result<bool, OpError> {
    let sq = d.square(s);
    if top_data.f != sq.top || bottom_data.f != sq.bottom {
        return Err(OpError::NotComposable(
            d.square(s).name.clone(),
            "companion data on the wrong boundary".to_string(),
            Dir::Vertical,
        ));
    }
    let pasted = d
        .sq_vcomp(top_data.psi, s)
        .and_then(|x| d.sq_vcomp(x, bottom_data.phi))
        .ok_or_else(|| {
            OpError::NotComposable(
                d.square(top_data.psi).name.clone(),
                d.square(bottom_data.phi).name.clone(),
                Dir::Vertical,
            )
        })?;
    Ok(d.is_h_invertible(pasted))
}
