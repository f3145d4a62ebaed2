//! The cell-shape catalog for the generating cofibrations and all generating
//! anodyne sets, plus the generic right-lifting-property engine that decides
//! injectivity of a double functor against a shape by exhaustive search.

mod witness;

pub use witness::{
    all_companion_witnesses, all_greg_witnesses, companions_of_hmor, companions_of_vmor,
    conjoints_of_hmor, conjoints_of_vmor, find_companionship,
    find_gregarious_adjoint_equivalence, invertible_globular_squares, CompanionWitness,
    ConjointWitness, GregariousAdjEquivWitness, MorRef, PairKind,
};

use crate::constructions::{
    all_adjoint_equivalences, dualize_functor, shape, AdjointEquivalenceData, DualKind, ShapeName,
};
use crate::core::*;
use std::collections::HashMap;
use std::fmt;

/// One generating map, given semantically by its finite instance
/// enumerations and the restriction from codomain to domain instances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellShape {
    pub name: String,
    pub kind: ShapeKind,
    /// Interpret the shape in the transpose of the argument.
    pub transposed: bool,
    /// Whether the shape belongs to the certified catalog (a canonical
    /// cofibration with cofibrant domain).
    pub certified: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShapeKind {
    /// `0 -> 1`.
    AttachObject,
    /// `1 + 1 -> H2`.
    AttachHMor,
    /// `1 + 1 -> V2`.
    AttachVMor,
    /// boundary inclusion of the walking square.
    SquareFiller,
    /// parallel-squares pushout onto the walking square.
    ParallelSquares,
    /// `1 -> Sq E_adj`.
    UnitSqEadj,
    /// `H2 -> H SigmaI`.
    InvertGlobular,
    /// `H2 -> Sq 2`: companions for horizontal morphisms.
    CompanionH,
    /// `H2 -> Sq 2 vop`: conjoints for horizontal morphisms.
    ConjointH,
    /// `H E_adj -> Sq E_adj`.
    HEadjToSqEadj,
    /// `Sq 2 -> Sq E_adj`.
    Sq2ToSqEadj,
    /// `H Sigma2 -> H SigmaI`.
    GlobularToInvertible,
    /// `1 -> H2`: not a canonical cofibration; used to exercise refusal.
    UncertifiedPointToH2,
}

impl CellShape {
    fn base(name: &str, kind: ShapeKind) -> CellShape {
        CellShape {
            name: name.to_string(),
            kind,
            transposed: false,
            certified: !matches!(kind, ShapeKind::UncertifiedPointToH2),
        }
    }

    fn transposed(name: &str, kind: ShapeKind) -> CellShape {
        CellShape {
            transposed: true,
            ..CellShape::base(name, kind)
        }
    }

    /// The uncertified inclusion of the point into the walking arrow.
    pub fn uncertified_point_to_h2() -> CellShape {
        CellShape::base("uncertified.One-H2", ShapeKind::UncertifiedPointToH2)
    }

    /// For shapes with finite domain/codomain the represented double
    /// categories, for the instance/functor bijection checks.
    pub fn finite_shapes(&self) -> Option<(DoubleCategory, DoubleCategory)> {
        use crate::constructions::{coproduct, CombineKind};
        let _ = CombineKind::Coproduct;
        let one = shape(ShapeName::One);
        let pair = coproduct(&one, &one).cat;
        let (dom, cod) = match self.kind {
            ShapeKind::AttachObject => (shape(ShapeName::Empty), one),
            ShapeKind::AttachHMor => (pair, shape(ShapeName::H2)),
            ShapeKind::AttachVMor => (pair, shape(ShapeName::V2)),
            ShapeKind::SquareFiller => (shape(ShapeName::BoundaryHxV), shape(ShapeName::HxV)),
            ShapeKind::ParallelSquares => (shape(ShapeName::ParSq), shape(ShapeName::HxV)),
            ShapeKind::InvertGlobular => (shape(ShapeName::H2), shape(ShapeName::HSigmaI)),
            ShapeKind::CompanionH => (shape(ShapeName::H2), shape(ShapeName::Sq2)),
            ShapeKind::ConjointH => (shape(ShapeName::H2), shape(ShapeName::Sq2vop)),
            ShapeKind::GlobularToInvertible => {
                (shape(ShapeName::HSigma2), shape(ShapeName::HSigmaI))
            }
            ShapeKind::UncertifiedPointToH2 => (one, shape(ShapeName::H2)),
            ShapeKind::UnitSqEadj | ShapeKind::HEadjToSqEadj | ShapeKind::Sq2ToSqEadj => {
                return None
            }
        };
        if self.transposed {
            use crate::constructions::dualize;
            Some((
                dualize(DualKind::Transpose, &dom),
                dualize(DualKind::Transpose, &cod),
            ))
        } else {
            Some((dom, cod))
        }
    }
}

/// The generating sets of the catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SetName {
    I,
    J0,
    JWhi,
    JWvi,
    JHeqp,
    JVeqp,
    JTr,
    JTrLadj,
    JTrRadj,
    JTrAdj,
    JTrGpd,
    JEmptyOrCtr,
    JCtr,
}

impl SetName {
    pub const ALL: [SetName; 13] = [
        SetName::I,
        SetName::J0,
        SetName::JWhi,
        SetName::JWvi,
        SetName::JHeqp,
        SetName::JVeqp,
        SetName::JTr,
        SetName::JTrLadj,
        SetName::JTrRadj,
        SetName::JTrAdj,
        SetName::JTrGpd,
        SetName::JEmptyOrCtr,
        SetName::JCtr,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            SetName::I => "I",
            SetName::J0 => "J0",
            SetName::JWhi => "J_whi",
            SetName::JWvi => "J_wvi",
            SetName::JHeqp => "J_heqp",
            SetName::JVeqp => "J_veqp",
            SetName::JTr => "J_tr",
            SetName::JTrLadj => "J_tr_ladj",
            SetName::JTrRadj => "J_tr_radj",
            SetName::JTrAdj => "J_tr_adj",
            SetName::JTrGpd => "J_tr_gpd",
            SetName::JEmptyOrCtr => "J_empty_or_ctr",
            SetName::JCtr => "J_ctr",
        }
    }

    pub fn parse(s: &str) -> Option<SetName> {
        SetName::ALL.iter().copied().find(|n| n.as_str() == s)
    }
}

/// The catalogued list of cell shapes for a generating set.
pub fn generating_set(name: SetName) -> Vec<CellShape> {
    use ShapeKind::*;
    let i_set = || {
        vec![
            CellShape::base("I.attach-object", AttachObject),
            CellShape::base("I.attach-hmor", AttachHMor),
            CellShape::base("I.attach-vmor", AttachVMor),
            CellShape::base("I.square-filler", SquareFiller),
            CellShape::base("I.parallel-squares", ParallelSquares),
        ]
    };
    let j0 = || {
        vec![
            CellShape::base("J0.unit-SqEadj", UnitSqEadj),
            CellShape::base("J0.H2-HSigmaI", InvertGlobular),
            CellShape::transposed("J0.V2-VSigmaI", InvertGlobular),
        ]
    };
    let mut set = match name {
        SetName::I => i_set(),
        SetName::J0 => j0(),
        SetName::JWhi => {
            let mut s = j0();
            s.push(CellShape::base("J.HEadj-SqEadj", HEadjToSqEadj));
            s
        }
        SetName::JWvi => {
            let mut s = j0();
            s.push(CellShape::transposed("J.VEadj-SqEadj", HEadjToSqEadj));
            s
        }
        SetName::JHeqp => {
            let mut s = j0();
            s.push(CellShape::base("J.H2-Sq2", CompanionH));
            s.push(CellShape::base("J.H2-Sq2vop", ConjointH));
            s
        }
        SetName::JVeqp => {
            let mut s = j0();
            s.push(CellShape::transposed("J.V2-Sq2", CompanionH));
            s.push(CellShape::transposed("J.V2-Sq2vop", ConjointH));
            s
        }
        SetName::JTr => {
            let mut s = j0();
            s.push(CellShape::base("J.H2-Sq2", CompanionH));
            s.push(CellShape::transposed("J.V2-Sq2", CompanionH));
            s
        }
        SetName::JTrLadj => {
            let mut s = generating_set(SetName::JTr);
            s.push(CellShape::base("J.H2-Sq2vop", ConjointH));
            s
        }
        SetName::JTrRadj => {
            let mut s = generating_set(SetName::JTr);
            s.push(CellShape::transposed("J.V2-Sq2vop", ConjointH));
            s
        }
        SetName::JTrAdj => {
            let mut s = generating_set(SetName::JTrLadj);
            s.push(CellShape::transposed("J.V2-Sq2vop", ConjointH));
            s
        }
        SetName::JTrGpd => {
            let mut s = generating_set(SetName::JTr);
            s.push(CellShape::base("J.Sq2-SqEadj", Sq2ToSqEadj));
            s.push(CellShape::base("J.HSigma2-HSigmaI", GlobularToInvertible));
            s.push(CellShape::transposed("J.VSigma2-VSigmaI", GlobularToInvertible));
            s
        }
        SetName::JEmptyOrCtr => {
            let mut s = j0();
            s.extend(i_set().into_iter().filter(|c| c.kind != AttachObject));
            s
        }
        SetName::JCtr => {
            let mut s = j0();
            s.extend(i_set());
            s
        }
    };
    set.dedup_by(|a, b| a == b);
    set
}

/// A concrete instance of a shape in a double category.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Instance {
    Unit,
    Object(ObjId),
    ObjectPair(ObjId, ObjId),
    HMor(HId),
    VMor(VId),
    Boundary(SquareBoundary),
    Square(SqId),
    SquarePair(SqId, SqId),
    Companion(CompanionWitness),
    Conjoint(ConjointWitness),
    AdjEquiv(AdjointEquivalenceData),
    GregEquiv(GregariousAdjEquivWitness),
}

impl Instance {
    pub fn apply(&self, f: &DoubleFunctor) -> Instance {
        match *self {
            Instance::Unit => Instance::Unit,
            Instance::Object(o) => Instance::Object(f.on_object(o)),
            Instance::ObjectPair(a, b) => Instance::ObjectPair(f.on_object(a), f.on_object(b)),
            Instance::HMor(h) => Instance::HMor(f.on_hmor(h)),
            Instance::VMor(v) => Instance::VMor(f.on_vmor(v)),
            Instance::Boundary(b) => Instance::Boundary(f.on_boundary(&b)),
            Instance::Square(s) => Instance::Square(f.on_square(s)),
            Instance::SquarePair(a, b) => Instance::SquarePair(f.on_square(a), f.on_square(b)),
            Instance::Companion(w) => Instance::Companion(w.apply(f)),
            Instance::Conjoint(w) => Instance::Conjoint(w.apply(f)),
            Instance::AdjEquiv(a) => Instance::AdjEquiv(a.apply(f)),
            Instance::GregEquiv(w) => Instance::GregEquiv(w.apply(f)),
        }
    }

    pub fn describe(&self, d: &DoubleCategory) -> String {
        match *self {
            Instance::Unit => "()".to_string(),
            Instance::Object(o) => d.object_name(o).to_string(),
            Instance::ObjectPair(a, b) => {
                format!("({}, {})", d.object_name(a), d.object_name(b))
            }
            Instance::HMor(h) => d.hmor(h).name.clone(),
            Instance::VMor(v) => d.vmor(v).name.clone(),
            Instance::Boundary(b) => format!(
                "(top {}, bottom {}, left {}, right {})",
                d.hmor(b.top).name,
                d.hmor(b.bottom).name,
                d.vmor(b.left).name,
                d.vmor(b.right).name
            ),
            Instance::Square(s) => d.square(s).name.clone(),
            Instance::SquarePair(a, b) => {
                format!("({}, {})", d.square(a).name, d.square(b).name)
            }
            Instance::Companion(w) => format!(
                "companion({}, {}, {}, {})",
                d.hmor(w.f).name,
                d.vmor(w.u).name,
                d.square(w.phi).name,
                d.square(w.psi).name
            ),
            Instance::Conjoint(w) => format!(
                "conjoint({}, {}, {}, {})",
                d.hmor(w.f).name,
                d.vmor(w.u).name,
                d.square(w.phi).name,
                d.square(w.psi).name
            ),
            Instance::AdjEquiv(a) => format!(
                "adjequiv({}, {}, {}, {})",
                d.hmor(a.fwd).name,
                d.hmor(a.bwd).name,
                d.square(a.eta).name,
                d.square(a.eps).name
            ),
            Instance::GregEquiv(w) => format!(
                "greg(fwd {}/{}, bwd {}/{}, eta {}, eps {})",
                d.hmor(w.fwd.f).name,
                d.vmor(w.fwd.u).name,
                d.hmor(w.bwd.f).name,
                d.vmor(w.bwd.u).name,
                d.square(w.eta).name,
                d.square(w.eps).name
            ),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Dom,
    Cod,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LiftError {
    #[error("instance enumeration for {shape} exceeded the bound {bound}")]
    BoundExceeded { shape: String, bound: usize },
}

fn bounded(
    shape: &str,
    bound: Option<usize>,
    v: Vec<Instance>,
) -> Result<Vec<Instance>, LiftError> {
    match bound {
        Some(b) if v.len() > b => Err(LiftError::BoundExceeded {
            shape: shape.to_string(),
            bound: b,
        }),
        _ => Ok(v),
    }
}

/// All instances of one side of a shape in `d`, in canonical order.
/// For transposed shapes the enumeration happens in the transpose of `d`.
pub fn enumerate_instances(
    cell: &CellShape,
    side: Side,
    d: &DoubleCategory,
    bound: Option<usize>,
) -> Result<Vec<Instance>, LiftError> {
    if cell.transposed {
        let dt = crate::constructions::dualize(DualKind::Transpose, d);
        let base = CellShape {
            transposed: false,
            ..cell.clone()
        };
        return enumerate_instances(&base, side, &dt, bound);
    }
    let v = match (cell.kind, side) {
        (ShapeKind::AttachObject, Side::Dom) => vec![Instance::Unit],
        (ShapeKind::AttachObject, Side::Cod) => d.objects().map(Instance::Object).collect(),
        (ShapeKind::AttachHMor, Side::Dom) | (ShapeKind::AttachVMor, Side::Dom) => {
            let mut v = Vec::new();
            for a in d.objects() {
                for b in d.objects() {
                    v.push(Instance::ObjectPair(a, b));
                }
            }
            v
        }
        (ShapeKind::AttachHMor, Side::Cod) => d.hmors().map(Instance::HMor).collect(),
        (ShapeKind::AttachVMor, Side::Cod) => d.vmors().map(Instance::VMor).collect(),
        (ShapeKind::SquareFiller, Side::Dom) => d
            .all_boundaries()
            .into_iter()
            .map(Instance::Boundary)
            .collect(),
        (ShapeKind::SquareFiller, Side::Cod) => d.squares().map(Instance::Square).collect(),
        (ShapeKind::ParallelSquares, Side::Dom) => {
            let mut v = Vec::new();
            for a in d.squares() {
                for &b in d.boundary_squares(&d.boundary(a)) {
                    v.push(Instance::SquarePair(a, b));
                }
            }
            v.sort();
            v
        }
        (ShapeKind::ParallelSquares, Side::Cod) => d.squares().map(Instance::Square).collect(),
        (ShapeKind::UnitSqEadj, Side::Dom) => d.objects().map(Instance::Object).collect(),
        (ShapeKind::UnitSqEadj, Side::Cod)
        | (ShapeKind::HEadjToSqEadj, Side::Cod)
        | (ShapeKind::Sq2ToSqEadj, Side::Cod) => {
            all_greg_witnesses(d).into_iter().map(Instance::GregEquiv).collect()
        }
        (ShapeKind::InvertGlobular, Side::Dom) => d.hmors().map(Instance::HMor).collect(),
        (ShapeKind::InvertGlobular, Side::Cod)
        | (ShapeKind::GlobularToInvertible, Side::Cod) => d
            .squares()
            .filter(|&s| d.is_h_globular(s) && d.is_v_invertible(s))
            .map(Instance::Square)
            .collect(),
        (ShapeKind::GlobularToInvertible, Side::Dom) => d
            .squares()
            .filter(|&s| d.is_h_globular(s))
            .map(Instance::Square)
            .collect(),
        (ShapeKind::CompanionH, Side::Dom) => d.hmors().map(Instance::HMor).collect(),
        (ShapeKind::CompanionH, Side::Cod) | (ShapeKind::Sq2ToSqEadj, Side::Dom) => {
            all_companion_witnesses(d).into_iter().map(Instance::Companion).collect()
        }
        (ShapeKind::ConjointH, Side::Dom) => d.hmors().map(Instance::HMor).collect(),
        (ShapeKind::ConjointH, Side::Cod) => {
            let mut v = Vec::new();
            for f in d.hmors() {
                v.extend(conjoints_of_hmor(d, f).into_iter().map(Instance::Conjoint));
            }
            v
        }
        (ShapeKind::HEadjToSqEadj, Side::Dom) => all_adjoint_equivalences(d)
            .into_iter()
            .map(Instance::AdjEquiv)
            .collect(),
        (ShapeKind::UncertifiedPointToH2, Side::Dom) => {
            d.objects().map(Instance::Object).collect()
        }
        (ShapeKind::UncertifiedPointToH2, Side::Cod) => d.hmors().map(Instance::HMor).collect(),
    };
    bounded(&cell.name, bound, v)
}

/// The restriction of a codomain instance to a domain instance.
pub fn restrict(cell: &CellShape, inst: &Instance, d: &DoubleCategory) -> Instance {
    match (cell.kind, inst) {
        (ShapeKind::AttachObject, _) => Instance::Unit,
        (ShapeKind::AttachHMor, Instance::HMor(h)) => {
            Instance::ObjectPair(d.hmor(*h).src, d.hmor(*h).tgt)
        }
        (ShapeKind::AttachVMor, Instance::VMor(v)) => {
            Instance::ObjectPair(d.vmor(*v).src, d.vmor(*v).tgt)
        }
        (ShapeKind::SquareFiller, Instance::Square(s)) => Instance::Boundary(d.boundary(*s)),
        (ShapeKind::ParallelSquares, Instance::Square(s)) => Instance::SquarePair(*s, *s),
        (ShapeKind::UnitSqEadj, Instance::GregEquiv(w)) => Instance::Object(w.src(d)),
        (ShapeKind::InvertGlobular, Instance::Square(s)) => Instance::HMor(d.square(*s).top),
        (ShapeKind::CompanionH, Instance::Companion(w)) => Instance::HMor(w.f),
        (ShapeKind::ConjointH, Instance::Conjoint(w)) => Instance::HMor(w.f),
        (ShapeKind::HEadjToSqEadj, Instance::GregEquiv(w)) => {
            Instance::AdjEquiv(w.underlying_adj_equiv())
        }
        (ShapeKind::Sq2ToSqEadj, Instance::GregEquiv(w)) => Instance::Companion(w.fwd),
        (ShapeKind::GlobularToInvertible, Instance::Square(s)) => Instance::Square(*s),
        (ShapeKind::UncertifiedPointToH2, Instance::HMor(h)) => Instance::Object(d.hmor(*h).src),
        _ => panic!("restrict: instance does not belong to the codomain of {}", cell.name),
    }
}

/// Outcome of a lifting check: either every instance lifts, or the first
/// failing pair in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LiftOutcome {
    Holds,
    Counterexample {
        dom: Instance,
        cod: Instance,
        detail: String,
    },
}

impl LiftOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, LiftOutcome::Holds)
    }
}

impl fmt::Display for LiftOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LiftOutcome::Holds => write!(f, "holds"),
            LiftOutcome::Counterexample { detail, .. } => write!(f, "counterexample: {detail}"),
        }
    }
}

/// Decide whether `f` has the right lifting property against a cell shape:
/// for every domain instance `x` in the source and codomain instance `y` in
/// the target with `restrict(y) = f . x`, some codomain instance over `x` in
/// the source maps to `y`.
pub fn solve_lifting(
    f: &DoubleFunctor,
    cell: &CellShape,
    bound: Option<usize>,
) -> Result<LiftOutcome, LiftError> {
    if cell.transposed {
        let ft = dualize_functor(DualKind::Transpose, f);
        let base = CellShape {
            transposed: false,
            ..cell.clone()
        };
        return solve_lifting(&ft, &base, bound);
    }
    let src = f.source();
    let tgt = f.target();
    let doms = enumerate_instances(cell, Side::Dom, src, bound)?;
    let cods_src = enumerate_instances(cell, Side::Cod, src, bound)?;
    let cods_tgt = enumerate_instances(cell, Side::Cod, tgt, bound)?;

    let mut tgt_by_restrict: HashMap<Instance, Vec<Instance>> = HashMap::new();
    for y in &cods_tgt {
        tgt_by_restrict
            .entry(restrict(cell, y, tgt))
            .or_default()
            .push(*y);
    }
    let mut src_by_restrict: HashMap<Instance, Vec<Instance>> = HashMap::new();
    for y in &cods_src {
        src_by_restrict
            .entry(restrict(cell, y, src))
            .or_default()
            .push(*y);
    }

    for x in &doms {
        let fx = x.apply(f);
        let Some(candidates) = tgt_by_restrict.get(&fx) else { continue };
        let lifts = src_by_restrict.get(x);
        for y in candidates {
            let found = lifts
                .into_iter()
                .flatten()
                .any(|yhat| yhat.apply(f) == *y);
            if !found {
                return Ok(LiftOutcome::Counterexample {
                    dom: *x,
                    cod: *y,
                    detail: format!(
                        "{}: domain instance {} has no lift over {}",
                        cell.name,
                        x.describe(src),
                        y.describe(tgt)
                    ),
                });
            }
        }
    }
    Ok(LiftOutcome::Holds)
}

/// Outcome of a fibrancy check over a generating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibrantOutcome {
    pub fibrant: bool,
    /// The first unfillable instance, as `(shape name, detail)`.
    pub failure: Option<(String, String)>,
}

/// Whether `d` has the right lifting property against every shape of a set,
/// tested against the terminal double category.
pub fn is_naive_fibrant(
    d: &DoubleCategory,
    set: SetName,
    bound: Option<usize>,
) -> Result<FibrantOutcome, LiftError> {
    is_naive_fibrant_shapes(d, &generating_set(set), bound)
}

pub fn is_naive_fibrant_shapes(
    d: &DoubleCategory,
    shapes: &[CellShape],
    bound: Option<usize>,
) -> Result<FibrantOutcome, LiftError> {
    let one = shape(ShapeName::One);
    let terminal = DoubleFunctor::terminal(d, &one);
    for cell in shapes {
        match solve_lifting(&terminal, cell, bound)? {
            LiftOutcome::Holds => {}
            LiftOutcome::Counterexample { detail, .. } => {
                return Ok(FibrantOutcome {
                    fibrant: false,
                    failure: Some((cell.name.clone(), detail)),
                })
            }
        }
    }
    Ok(FibrantOutcome {
        fibrant: true,
        failure: None,
    })
}
