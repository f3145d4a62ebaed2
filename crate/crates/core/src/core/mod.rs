//! The finite double-category data model: objects, horizontal and vertical
//! morphisms, squares, the two square compositions, and the axioms that a
//! validated value is guaranteed to satisfy.
//!
//! Every `DoubleCategory` in this crate has passed [`validate_double_category`];
//! all sets carry a canonical order (document order) and all operations are
//! pure, so enumerations and searches are deterministic.

pub(crate) mod functor;
mod ops;
mod validate;

pub use functor::{validate_double_functor, DoubleFunctor, RawFunctorData, TwoFunctor};
pub use ops::{
    compose_squares, invert_square, paste_grid, squares_with_boundary, Dir, OpError,
};
pub use validate::validate_double_category;

use std::collections::HashMap;
use std::fmt;

/// Index of an object, stable under the category's canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ObjId(pub usize);

/// Index of a horizontal morphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HId(pub usize);

/// Index of a vertical morphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VId(pub usize);

/// Index of a square.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SqId(pub usize);

/// A named morphism record (horizontal or vertical).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorData {
    pub name: String,
    pub src: ObjId,
    pub tgt: ObjId,
}

/// A named square record. Corner compatibility:
/// `src(top) = src(left)`, `tgt(top) = src(right)`,
/// `src(bottom) = tgt(left)`, `tgt(bottom) = tgt(right)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareData {
    pub name: String,
    pub top: HId,
    pub bottom: HId,
    pub left: VId,
    pub right: VId,
}

/// The boundary of a square: a corner-compatible 4-tuple of morphisms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquareBoundary {
    pub top: HId,
    pub bottom: HId,
    pub left: VId,
    pub right: VId,
}

/// Raw, not-yet-validated double category data in document order.
///
/// Composition tables are in diagrammatic order: an entry `((x, y), z)` of
/// `hcomp` means "x then y composes to z"; for `sq_hcomp` it means `x|y = z`
/// and for `sq_vcomp` it means `x/y = z` (x on top).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RawDoubleCategory {
    pub objects: Vec<String>,
    pub hmor: Vec<(String, String, String)>,
    pub vmor: Vec<(String, String, String)>,
    pub hcomp: Vec<(String, String, String)>,
    pub vcomp: Vec<(String, String, String)>,
    pub squares: Vec<(String, String, String, String, String)>,
    pub sq_hcomp: Vec<(String, String, String)>,
    pub sq_vcomp: Vec<(String, String, String)>,
}

/// A validated finite double category.
///
/// Immutable after validation; all compositions are total on composable pairs
/// and satisfy the category, boundary, identity-coherence and interchange laws.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleCategory {
    pub(crate) objects: Vec<String>,
    pub(crate) hmors: Vec<MorData>,
    pub(crate) vmors: Vec<MorData>,
    pub(crate) h_id: Vec<HId>,
    pub(crate) v_id: Vec<VId>,
    pub(crate) hcomp: HashMap<(HId, HId), HId>,
    pub(crate) vcomp: HashMap<(VId, VId), VId>,
    pub(crate) squares: Vec<SquareData>,
    pub(crate) sq_h: HashMap<(SqId, SqId), SqId>,
    pub(crate) sq_v: HashMap<(SqId, SqId), SqId>,
    pub(crate) vid: Vec<SqId>,
    pub(crate) hid: Vec<SqId>,
    pub(crate) by_boundary: HashMap<SquareBoundary, Vec<SqId>>,
}

impl DoubleCategory {
    pub fn object_count(&self) -> usize {
        self.objects.len()
    }
    pub fn hmor_count(&self) -> usize {
        self.hmors.len()
    }
    pub fn vmor_count(&self) -> usize {
        self.vmors.len()
    }
    pub fn square_count(&self) -> usize {
        self.squares.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = ObjId> {
        (0..self.objects.len()).map(ObjId)
    }
    pub fn hmors(&self) -> impl Iterator<Item = HId> {
        (0..self.hmors.len()).map(HId)
    }
    pub fn vmors(&self) -> impl Iterator<Item = VId> {
        (0..self.vmors.len()).map(VId)
    }
    pub fn squares(&self) -> impl Iterator<Item = SqId> {
        (0..self.squares.len()).map(SqId)
    }

    pub fn object_name(&self, o: ObjId) -> &str {
        &self.objects[o.0]
    }
    pub fn hmor(&self, h: HId) -> &MorData {
        &self.hmors[h.0]
    }
    pub fn vmor(&self, v: VId) -> &MorData {
        &self.vmors[v.0]
    }
    pub fn square(&self, s: SqId) -> &SquareData {
        &self.squares[s.0]
    }

    pub fn object_by_name(&self, name: &str) -> Option<ObjId> {
        self.objects.iter().position(|n| n == name).map(ObjId)
    }
    pub fn hmor_by_name(&self, name: &str) -> Option<HId> {
        self.hmors.iter().position(|m| m.name == name).map(HId)
    }
    pub fn vmor_by_name(&self, name: &str) -> Option<VId> {
        self.vmors.iter().position(|m| m.name == name).map(VId)
    }
    pub fn square_by_name(&self, name: &str) -> Option<SqId> {
        self.squares.iter().position(|s| s.name == name).map(SqId)
    }

    /// The identity horizontal morphism at an object.
    pub fn h_identity(&self, o: ObjId) -> HId {
        self.h_id[o.0]
    }
    /// The identity vertical morphism at an object.
    pub fn v_identity(&self, o: ObjId) -> VId {
        self.v_id[o.0]
    }
    pub fn is_h_identity(&self, h: HId) -> bool {
        self.h_id[self.hmors[h.0].src.0] == h
    }
    pub fn is_v_identity(&self, v: VId) -> bool {
        self.v_id[self.vmors[v.0].src.0] == v
    }

    /// Composite of `f` then `g` in the horizontal category.
    pub fn comp_h(&self, f: HId, g: HId) -> Option<HId> {
        self.hcomp.get(&(f, g)).copied()
    }
    /// Composite of `u` then `w` in the vertical category.
    pub fn comp_v(&self, u: VId, w: VId) -> Option<VId> {
        self.vcomp.get(&(u, w)).copied()
    }

    /// The vertical identity square `e_f` on a horizontal morphism.
    pub fn vid_sq(&self, f: HId) -> SqId {
        self.vid[f.0]
    }
    /// The horizontal identity square `id_u` on a vertical morphism.
    pub fn hid_sq(&self, u: VId) -> SqId {
        self.hid[u.0]
    }
    /// The double identity square at an object.
    pub fn box_sq(&self, o: ObjId) -> SqId {
        self.vid[self.h_id[o.0].0]
    }

    /// Horizontal composite `a|b`, if the pair is composable.
    pub fn sq_hcomp(&self, a: SqId, b: SqId) -> Option<SqId> {
        self.sq_h.get(&(a, b)).copied()
    }
    /// Vertical composite `a/b` (a on top), if the pair is composable.
    pub fn sq_vcomp(&self, a: SqId, b: SqId) -> Option<SqId> {
        self.sq_v.get(&(a, b)).copied()
    }

    pub fn boundary(&self, s: SqId) -> SquareBoundary {
        let sq = &self.squares[s.0];
        SquareBoundary {
            top: sq.top,
            bottom: sq.bottom,
            left: sq.left,
            right: sq.right,
        }
    }

    /// True if the square has identity vertical boundaries.
    pub fn is_h_globular(&self, s: SqId) -> bool {
        let sq = &self.squares[s.0];
        self.is_v_identity(sq.left) && self.is_v_identity(sq.right)
    }
    /// True if the square has identity horizontal boundaries.
    pub fn is_v_globular(&self, s: SqId) -> bool {
        let sq = &self.squares[s.0];
        self.is_h_identity(sq.top) && self.is_h_identity(sq.bottom)
    }

    /// Fold a nonempty run of squares with `|`.
    pub fn sq_hcomp_many(&self, run: &[SqId]) -> Option<SqId> {
        let mut acc = *run.first()?;
        for s in &run[1..] {
            acc = self.sq_hcomp(acc, *s)?;
        }
        Some(acc)
    }
    /// Fold a nonempty stack of squares with `/` (first on top).
    pub fn sq_vcomp_many(&self, run: &[SqId]) -> Option<SqId> {
        let mut acc = *run.first()?;
        for s in &run[1..] {
            acc = self.sq_vcomp(acc, *s)?;
        }
        Some(acc)
    }

    /// Whether `inv` is the two-sided `/`-inverse of a globular square.
    pub fn is_v_inverse(&self, a: SqId, inv: SqId) -> bool {
        let (ta, ba) = (self.squares[a.0].top, self.squares[a.0].bottom);
        self.sq_vcomp(a, inv) == Some(self.vid_sq(ta))
            && self.sq_vcomp(inv, a) == Some(self.vid_sq(ba))
    }
    /// Whether `inv` is the two-sided `|`-inverse of a globular square.
    pub fn is_h_inverse(&self, a: SqId, inv: SqId) -> bool {
        let (la, ra) = (self.squares[a.0].left, self.squares[a.0].right);
        self.sq_hcomp(a, inv) == Some(self.hid_sq(la))
            && self.sq_hcomp(inv, a) == Some(self.hid_sq(ra))
    }

    /// A horizontal-globular square invertible under `/`.
    pub fn is_v_invertible(&self, a: SqId) -> bool {
        self.v_inverse(a).is_some()
    }
    /// A vertical-globular square invertible under `|`.
    pub fn is_h_invertible(&self, a: SqId) -> bool {
        self.h_inverse(a).is_some()
    }

    /// The `/`-inverse of a horizontal-globular square, if any.
    pub fn v_inverse(&self, a: SqId) -> Option<SqId> {
        if !self.is_h_globular(a) {
            return None;
        }
        let sq = &self.squares[a.0];
        let b = SquareBoundary {
            top: sq.bottom,
            bottom: sq.top,
            left: sq.left,
            right: sq.right,
        };
        self.by_boundary
            .get(&b)
            .into_iter()
            .flatten()
            .copied()
            .find(|&c| self.is_v_inverse(a, c))
    }
    /// The `|`-inverse of a vertical-globular square, if any.
    pub fn h_inverse(&self, a: SqId) -> Option<SqId> {
        if !self.is_v_globular(a) {
            return None;
        }
        let sq = &self.squares[a.0];
        let b = SquareBoundary {
            top: sq.top,
            bottom: sq.bottom,
            left: sq.right,
            right: sq.left,
        };
        self.by_boundary
            .get(&b)
            .into_iter()
            .flatten()
            .copied()
            .find(|&c| self.is_h_inverse(a, c))
    }

    /// Squares with the given boundary, in canonical order (possibly empty).
    pub fn boundary_squares(&self, b: &SquareBoundary) -> &[SqId] {
        self.by_boundary.get(b).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// A deterministic structural key, used by memo caches.
    pub fn canonical_key(&self) -> String {
        use std::fmt::Write;
        let mut s = String::new();
        let _ = write!(s, "O{:?}", self.objects);
        for m in &self.hmors {
            let _ = write!(s, "H{}:{}>{};", m.name, m.src.0, m.tgt.0);
        }
        for m in &self.vmors {
            let _ = write!(s, "V{}:{}>{};", m.name, m.src.0, m.tgt.0);
        }
        for q in &self.squares {
            let _ = write!(
                s,
                "S{}:{},{},{},{};",
                q.name, q.top.0, q.bottom.0, q.left.0, q.right.0
            );
        }
        let dump = |tag: &str, entries: Vec<(usize, usize, usize)>, s: &mut String| {
            let mut entries = entries;
            entries.sort_unstable();
            let _ = write!(s, "{tag}{entries:?}");
        };
        dump(
            "hc",
            self.hcomp.iter().map(|(&(a, b), &c)| (a.0, b.0, c.0)).collect(),
            &mut s,
        );
        dump(
            "vc",
            self.vcomp.iter().map(|(&(a, b), &c)| (a.0, b.0, c.0)).collect(),
            &mut s,
        );
        dump(
            "sh",
            self.sq_h.iter().map(|(&(a, b), &c)| (a.0, b.0, c.0)).collect(),
            &mut s,
        );
        dump(
            "sv",
            self.sq_v.iter().map(|(&(a, b), &c)| (a.0, b.0, c.0)).collect(),
            &mut s,
        );
        s
    }

    /// All corner-compatible boundaries, in canonical order.
    pub fn all_boundaries(&self) -> Vec<SquareBoundary> {
        let mut out = Vec::new();
        for t in self.hmors() {
            for l in self.vmors() {
                if self.hmor(t).src != self.vmor(l).src {
                    continue;
                }
                for b in self.hmors() {
                    if self.hmor(b).src != self.vmor(l).tgt {
                        continue;
                    }
                    for r in self.vmors() {
                        if self.vmor(r).src != self.hmor(t).tgt
                            || self.vmor(r).tgt != self.hmor(b).tgt
                        {
                            continue;
                        }
                        out.push(SquareBoundary {
                            top: t,
                            bottom: b,
                            left: l,
                            right: r,
                        });
                    }
                }
            }
        }
        out
    }
}

/// A 2-category, stored as its horizontal-embedding image: a double category
/// whose vertical morphisms are exactly the identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoCategory(DoubleCategory);

impl TwoCategory {
    /// Wrap a double category after checking that every vertical morphism is
    /// an identity (every square is then horizontal-globular).
    pub fn new(d: DoubleCategory) -> Result<Self, Diagnostics> {
        let bad: Vec<_> = d
            .vmors()
            .filter(|&v| !d.is_v_identity(v))
            .map(|v| Diagnostic::Axiom {
                law: Law::VerticalsAreIdentities,
                witness: d.vmor(v).name.clone(),
            })
            .collect();
        if bad.is_empty() {
            Ok(TwoCategory(d))
        } else {
            Err(Diagnostics(bad))
        }
    }

    pub fn as_double(&self) -> &DoubleCategory {
        &self.0
    }
    pub fn into_double(self) -> DoubleCategory {
        self.0
    }
}

impl std::ops::Deref for TwoCategory {
    type Target = DoubleCategory;
    fn deref(&self) -> &DoubleCategory {
        &self.0
    }
}

/// Names of the double-category laws checked by the validator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Law {
    IdentityEndpoints,
    CornerCompat,
    TotalH,
    TotalV,
    TotalSqH,
    TotalSqV,
    CompEndpoints,
    UnitH,
    UnitV,
    AssocH,
    AssocV,
    BoundaryH,
    BoundaryV,
    UnitSqH,
    UnitSqV,
    AssocSqH,
    AssocSqV,
    IdentityCoherence,
    Interchange,
    VerticalsAreIdentities,
}

impl Law {
    pub fn tag(&self) -> &'static str {
        match self {
            Law::IdentityEndpoints => "identity-endpoints",
            Law::CornerCompat => "corner-compat",
            Law::TotalH => "total-hcomp",
            Law::TotalV => "total-vcomp",
            Law::TotalSqH => "total-sq-hcomp",
            Law::TotalSqV => "total-sq-vcomp",
            Law::CompEndpoints => "composite-endpoints",
            Law::UnitH => "unit-h",
            Law::UnitV => "unit-v",
            Law::AssocH => "assoc-h",
            Law::AssocV => "assoc-v",
            Law::BoundaryH => "boundary-h",
            Law::BoundaryV => "boundary-v",
            Law::UnitSqH => "unit-sq-h",
            Law::UnitSqV => "unit-sq-v",
            Law::AssocSqH => "assoc-sq-h",
            Law::AssocSqV => "assoc-sq-v",
            Law::IdentityCoherence => "identity-coherence",
            Law::Interchange => "interchange",
            Law::VerticalsAreIdentities => "verticals-are-identities",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// One validation finding: either the document is malformed (dangling or
/// duplicate identifiers, missing fields) or an axiom fails on a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Diagnostic {
    Malformed { detail: String },
    Axiom { law: Law, witness: String },
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::Malformed { detail } => write!(f, "malformed: {detail}"),
            Diagnostic::Axiom { law, witness } => write!(f, "axiom {law} violated at {witness}"),
        }
    }
}

/// The full list of findings for a rejected document.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct Diagnostics(pub Vec<Diagnostic>);

impl Diagnostics {
    pub fn has_law(&self, law: Law) -> bool {
        self.0
            .iter()
            .any(|d| matches!(d, Diagnostic::Axiom { law: l, .. } if *l == law))
    }
    pub fn is_malformed(&self) -> bool {
        self.0.iter().any(|d| matches!(d, Diagnostic::Malformed { .. }))
    }
}

impl fmt::Display for Diagnostics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.0 {
            writeln!(f, "{d}")?;
        }
        Ok(())
    }
}

/// Canonical identity names synthesized by the parser and builders.
pub(crate) fn id_mor_name(obj: &str) -> String {
    format!("id:{obj}")
}
pub(crate) fn vid_sq_name(hmor: &str, is_identity: bool, obj: &str) -> String {
    if is_identity {
        format!("box:{obj}")
    } else {
        format!("e:{hmor}")
    }
}
pub(crate) fn hid_sq_name(vmor: &str, is_identity: bool, obj: &str) -> String {
    if is_identity {
        format!("box:{obj}")
    } else {
        format!("idsq:{vmor}")
    }
}
