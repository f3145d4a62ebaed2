//! Witness tuples for companion pairs, conjoint pairs, and gregarious
//! adjoint equivalences, together with the exhaustive searches that
//! enumerate them in a finite double category.

use crate::constructions::AdjointEquivalenceData;
use crate::core::{DoubleCategory, DoubleFunctor, HId, ObjId, SqId, SquareBoundary, VId};

/// A companion pair `(f, u, phi, psi)`: `psi|phi = e_f` and `psi/phi = id_u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CompanionWitness {
    pub f: HId,
    pub u: VId,
    pub phi: SqId,
    pub psi: SqId,
}

/// A conjoint pair `(f, u, phi, psi)` with `u` running against `f`:
/// `psi|phi = e_f` and `phi/psi = id_u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConjointWitness {
    pub f: HId,
    pub u: VId,
    pub phi: SqId,
    pub psi: SqId,
}

/// An adjoint equivalence in the companion-pair 2-category: two companion
/// pairs in opposite directions plus an invertible unit and counit
/// satisfying the triangle identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GregariousAdjEquivWitness {
    pub fwd: CompanionWitness,
    pub bwd: CompanionWitness,
    pub eta: SqId,
    pub eps: SqId,
}

impl CompanionWitness {
    pub fn apply(&self, f: &DoubleFunctor) -> CompanionWitness {
        CompanionWitness {
            f: f.on_hmor(self.f),
            u: f.on_vmor(self.u),
            phi: f.on_square(self.phi),
            psi: f.on_square(self.psi),
        }
    }

    /// The identity companion pair at an object.
    pub fn identity(d: &DoubleCategory, a: ObjId) -> CompanionWitness {
        CompanionWitness {
            f: d.h_identity(a),
            u: d.v_identity(a),
            phi: d.box_sq(a),
            psi: d.box_sq(a),
        }
    }

    pub fn src(&self, d: &DoubleCategory) -> ObjId {
        d.hmor(self.f).src
    }
    pub fn tgt(&self, d: &DoubleCategory) -> ObjId {
        d.hmor(self.f).tgt
    }

    pub fn is_valid(&self, d: &DoubleCategory) -> bool {
        let (a, b) = (d.hmor(self.f).src, d.hmor(self.f).tgt);
        let vm = d.vmor(self.u);
        if vm.src != a || vm.tgt != b {
            return false;
        }
        let phi_ok = d.boundary(self.phi)
            == SquareBoundary {
                top: self.f,
                bottom: d.h_identity(b),
                left: self.u,
                right: d.v_identity(b),
            };
        let psi_ok = d.boundary(self.psi)
            == SquareBoundary {
                top: d.h_identity(a),
                bottom: self.f,
                left: d.v_identity(a),
                right: self.u,
            };
        phi_ok
            && psi_ok
            && d.sq_hcomp(self.psi, self.phi) == Some(d.vid_sq(self.f))
            && d.sq_vcomp(self.psi, self.phi) == Some(d.hid_sq(self.u))
    }

    /// Compose two companion pairs as 1-cells of the companion 2-category:
    /// `phi'' = (phi | e_{f'}) / (id_{u'} | phi')` and
    /// `psi'' = psi / (e_f | psi')`.
    pub fn then(&self, other: &CompanionWitness, d: &DoubleCategory) -> Option<CompanionWitness> {
        let f = d.comp_h(self.f, other.f)?;
        let u = d.comp_v(self.u, other.u)?;
        let phi = d.sq_vcomp(
            d.sq_hcomp(self.phi, d.vid_sq(other.f))?,
            d.sq_hcomp(d.hid_sq(other.u), other.phi)?,
        )?;
        let psi = d.sq_vcomp(self.psi, d.sq_hcomp(d.vid_sq(self.f), other.psi)?)?;
        Some(CompanionWitness { f, u, phi, psi })
    }
}

impl ConjointWitness {
    pub fn apply(&self, f: &DoubleFunctor) -> ConjointWitness {
        ConjointWitness {
            f: f.on_hmor(self.f),
            u: f.on_vmor(self.u),
            phi: f.on_square(self.phi),
            psi: f.on_square(self.psi),
        }
    }

    pub fn is_valid(&self, d: &DoubleCategory) -> bool {
        let (a, b) = (d.hmor(self.f).src, d.hmor(self.f).tgt);
        let vm = d.vmor(self.u);
        if vm.src != b || vm.tgt != a {
            return false;
        }
        let phi_ok = d.boundary(self.phi)
            == SquareBoundary {
                top: d.h_identity(b),
                bottom: self.f,
                left: self.u,
                right: d.v_identity(b),
            };
        let psi_ok = d.boundary(self.psi)
            == SquareBoundary {
                top: self.f,
                bottom: d.h_identity(a),
                left: d.v_identity(a),
                right: self.u,
            };
        phi_ok
            && psi_ok
            && d.sq_hcomp(self.psi, self.phi) == Some(d.vid_sq(self.f))
            && d.sq_vcomp(self.phi, self.psi) == Some(d.hid_sq(self.u))
    }
}

impl GregariousAdjEquivWitness {
    pub fn apply(&self, f: &DoubleFunctor) -> GregariousAdjEquivWitness {
        GregariousAdjEquivWitness {
            fwd: self.fwd.apply(f),
            bwd: self.bwd.apply(f),
            eta: f.on_square(self.eta),
            eps: f.on_square(self.eps),
        }
    }

    pub fn identity(d: &DoubleCategory, a: ObjId) -> GregariousAdjEquivWitness {
        GregariousAdjEquivWitness {
            fwd: CompanionWitness::identity(d, a),
            bwd: CompanionWitness::identity(d, a),
            eta: d.box_sq(a),
            eps: d.box_sq(a),
        }
    }

    pub fn src(&self, d: &DoubleCategory) -> ObjId {
        self.fwd.src(d)
    }
    pub fn tgt(&self, d: &DoubleCategory) -> ObjId {
        self.fwd.tgt(d)
    }

    /// The underlying horizontal adjoint equivalence data.
    pub fn underlying_adj_equiv(&self) -> AdjointEquivalenceData {
        AdjointEquivalenceData {
            fwd: self.fwd.f,
            bwd: self.bwd.f,
            eta: self.eta,
            eps: self.eps,
        }
    }

    pub fn is_valid(&self, d: &DoubleCategory) -> bool {
        self.fwd.is_valid(d)
            && self.bwd.is_valid(d)
            && self.underlying_adj_equiv().is_valid(d)
    }
}

/// Which morphism a companionship search is anchored on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MorRef {
    H(HId),
    V(VId),
}

/// The kind of pairing searched by [`find_companionship`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairKind {
    Companion,
    Conjoint,
}

/// All companion witnesses of `d`, in lexicographic component order.
pub fn all_companion_witnesses(d: &DoubleCategory) -> Vec<CompanionWitness> {
    let mut out = Vec::new();
    for f in d.hmors() {
        out.extend(companions_of_hmor(d, f));
    }
    out
}

pub fn companions_of_hmor(d: &DoubleCategory, f: HId) -> Vec<CompanionWitness> {
    let (a, b) = (d.hmor(f).src, d.hmor(f).tgt);
    let mut out = Vec::new();
    for u in d.vmors() {
        if d.vmor(u).src != a || d.vmor(u).tgt != b {
            continue;
        }
        let phi_boundary = SquareBoundary {
            top: f,
            bottom: d.h_identity(b),
            left: u,
            right: d.v_identity(b),
        };
        let psi_boundary = SquareBoundary {
            top: d.h_identity(a),
            bottom: f,
            left: d.v_identity(a),
            right: u,
        };
        for &phi in d.boundary_squares(&phi_boundary) {
            for &psi in d.boundary_squares(&psi_boundary) {
                let w = CompanionWitness { f, u, phi, psi };
                if d.sq_hcomp(psi, phi) == Some(d.vid_sq(f))
                    && d.sq_vcomp(psi, phi) == Some(d.hid_sq(u))
                {
                    out.push(w);
                }
            }
        }
    }
    out
}

pub fn companions_of_vmor(d: &DoubleCategory, u: VId) -> Vec<CompanionWitness> {
    let (a, b) = (d.vmor(u).src, d.vmor(u).tgt);
    let mut out = Vec::new();
    for f in d.hmors() {
        if d.hmor(f).src != a || d.hmor(f).tgt != b {
            continue;
        }
        out.extend(
            companions_of_hmor(d, f)
                .into_iter()
                .filter(|w| w.u == u),
        );
    }
    out
}

pub fn conjoints_of_hmor(d: &DoubleCategory, f: HId) -> Vec<ConjointWitness> {
    let (a, b) = (d.hmor(f).src, d.hmor(f).tgt);
    let mut out = Vec::new();
    for u in d.vmors() {
        if d.vmor(u).src != b || d.vmor(u).tgt != a {
            continue;
        }
        let phi_boundary = SquareBoundary {
            top: d.h_identity(b),
            bottom: f,
            left: u,
            right: d.v_identity(b),
        };
        let psi_boundary = SquareBoundary {
            top: f,
            bottom: d.h_identity(a),
            left: d.v_identity(a),
            right: u,
        };
        for &phi in d.boundary_squares(&phi_boundary) {
            for &psi in d.boundary_squares(&psi_boundary) {
                let w = ConjointWitness { f, u, phi, psi };
                if d.sq_hcomp(psi, phi) == Some(d.vid_sq(f))
                    && d.sq_vcomp(phi, psi) == Some(d.hid_sq(u))
                {
                    out.push(w);
                }
            }
        }
    }
    out
}

pub fn conjoints_of_vmor(d: &DoubleCategory, u: VId) -> Vec<ConjointWitness> {
    let (b, a) = (d.vmor(u).src, d.vmor(u).tgt);
    let mut out = Vec::new();
    for f in d.hmors() {
        if d.hmor(f).src != a || d.hmor(f).tgt != b {
            continue;
        }
        out.extend(conjoints_of_hmor(d, f).into_iter().filter(|w| w.u == u));
    }
    out
}

/// All companion (or conjoint) witnesses anchored on a given morphism.
pub fn find_companionship(
    kind: PairKind,
    d: &DoubleCategory,
    m: MorRef,
) -> (Vec<CompanionWitness>, Vec<ConjointWitness>) {
    match (kind, m) {
        (PairKind::Companion, MorRef::H(f)) => (companions_of_hmor(d, f), Vec::new()),
        (PairKind::Companion, MorRef::V(u)) => (companions_of_vmor(d, u), Vec::new()),
        (PairKind::Conjoint, MorRef::H(f)) => (Vec::new(), conjoints_of_hmor(d, f)),
        (PairKind::Conjoint, MorRef::V(u)) => (Vec::new(), conjoints_of_vmor(d, u)),
    }
}

/// Vertically invertible horizontal-globular squares `top => bottom`.
pub fn invertible_globular_squares(d: &DoubleCategory, top: HId, bottom: HId) -> Vec<SqId> {
    let m = d.hmor(top);
    let b = SquareBoundary {
        top,
        bottom,
        left: d.v_identity(m.src),
        right: d.v_identity(m.tgt),
    };
    d.boundary_squares(&b)
        .iter()
        .copied()
        .filter(|&s| d.is_v_invertible(s))
        .collect()
}

/// All gregarious adjoint equivalence witnesses with source object `a`.
/// With `constraint`, only witnesses whose forward companion pair equals it.
pub fn find_gregarious_adjoint_equivalence(
    d: &DoubleCategory,
    a: ObjId,
    constraint: Option<CompanionWitness>,
) -> Vec<GregariousAdjEquivWitness> {
    let fwd_pairs: Vec<CompanionWitness> = match constraint {
        Some(w) => {
            if w.src(d) == a && w.is_valid(d) {
                vec![w]
            } else {
                Vec::new()
            }
        }
        None => all_companion_witnesses(d)
            .into_iter()
            .filter(|w| w.src(d) == a)
            .collect(),
    };
    let all = all_companion_witnesses(d);
    let mut out = Vec::new();
    for fwd in fwd_pairs {
        let b = fwd.tgt(d);
        for bwd in all.iter().filter(|w| w.src(d) == b && w.tgt(d) == a) {
            let Some(fg) = d.comp_h(fwd.f, bwd.f) else { continue };
            let Some(gf) = d.comp_h(bwd.f, fwd.f) else { continue };
            for eta in invertible_globular_squares(d, d.h_identity(a), fg) {
                for eps in invertible_globular_squares(d, gf, d.h_identity(b)) {
                    let data = AdjointEquivalenceData {
                        fwd: fwd.f,
                        bwd: bwd.f,
                        eta,
                        eps,
                    };
                    if data.triangle_identities(d) {
                        out.push(GregariousAdjEquivWitness {
                            fwd,
                            bwd: *bwd,
                            eta,
                            eps,
                        });
                    }
                }
            }
        }
    }
    out
}

/// All gregarious adjoint equivalence witnesses of `d`, in canonical order.
pub fn all_greg_witnesses(d: &DoubleCategory) -> Vec<GregariousAdjEquivWitness> {
    let mut out = Vec::new();
    for a in d.objects() {
        out.extend(find_gregarious_adjoint_equivalence(d, a, None));
    }
    out
}
