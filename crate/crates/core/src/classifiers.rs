//! Fibrancy classification across the model structures, direct structural
//! property checks, object cofibrancy, and the recipe audit.

use crate::constructions::{dualize, DualKind};
use crate::core::*;
use crate::equivalences::{
    is_equivalence_1cell, is_gregarious_fibration, is_trivial_fibration, weakly_h_invertible_set,
    weakly_v_invertible_set,
};
use crate::lifting::{
    companions_of_hmor, companions_of_vmor, conjoints_of_hmor, conjoints_of_vmor,
    is_naive_fibrant, is_naive_fibrant_shapes, solve_lifting, CellShape, LiftError, SetName,
};
use std::collections::HashMap;

/// The model structures classified by the fibrancy table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ModelStructure {
    Greg,
    Whi,
    Wvi,
    HEqp,
    VEqp,
    Tr,
    TrLadj,
    TrRadj,
    TrAdj,
    TrGpd,
    EmptyOrCtr,
    Ctr,
}

impl ModelStructure {
    pub const ALL: [ModelStructure; 12] = [
        ModelStructure::Greg,
        ModelStructure::Whi,
        ModelStructure::Wvi,
        ModelStructure::HEqp,
        ModelStructure::VEqp,
        ModelStructure::Tr,
        ModelStructure::TrLadj,
        ModelStructure::TrRadj,
        ModelStructure::TrAdj,
        ModelStructure::TrGpd,
        ModelStructure::EmptyOrCtr,
        ModelStructure::Ctr,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            ModelStructure::Greg => "greg",
            ModelStructure::Whi => "whi",
            ModelStructure::Wvi => "wvi",
            ModelStructure::HEqp => "h_eqp",
            ModelStructure::VEqp => "v_eqp",
            ModelStructure::Tr => "tr",
            ModelStructure::TrLadj => "tr_ladj",
            ModelStructure::TrRadj => "tr_radj",
            ModelStructure::TrAdj => "tr_adj",
            ModelStructure::TrGpd => "tr_gpd",
            ModelStructure::EmptyOrCtr => "empty_or_ctr",
            ModelStructure::Ctr => "ctr",
        }
    }

    /// The generating anodyne set whose lifting property defines fibrancy.
    pub fn set_name(&self) -> SetName {
        match self {
            ModelStructure::Greg => SetName::J0,
            ModelStructure::Whi => SetName::JWhi,
            ModelStructure::Wvi => SetName::JWvi,
            ModelStructure::HEqp => SetName::JHeqp,
            ModelStructure::VEqp => SetName::JVeqp,
            ModelStructure::Tr => SetName::JTr,
            ModelStructure::TrLadj => SetName::JTrLadj,
            ModelStructure::TrRadj => SetName::JTrRadj,
            ModelStructure::TrAdj => SetName::JTrAdj,
            ModelStructure::TrGpd => SetName::JTrGpd,
            ModelStructure::EmptyOrCtr => SetName::JEmptyOrCtr,
            ModelStructure::Ctr => SetName::JCtr,
        }
    }
}

/// One fibrancy verdict per model structure, with a failure witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibrancyTable {
    pub entries: Vec<FibrancyEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibrancyEntry {
    pub model: ModelStructure,
    pub fibrant: bool,
    pub witness: Option<String>,
}

impl FibrancyTable {
    pub fn get(&self, m: ModelStructure) -> &FibrancyEntry {
        self.entries.iter().find(|e| e.model == m).unwrap()
    }
    pub fn fibrant(&self, m: ModelStructure) -> bool {
        self.get(m).fibrant
    }
}

/// Classify a double category across every model structure by the right
/// lifting property against the corresponding generating set.
pub fn classify(d: &DoubleCategory, bound: Option<usize>) -> Result<FibrancyTable, LiftError> {
    let mut entries = Vec::new();
    for model in ModelStructure::ALL {
        let outcome = is_naive_fibrant(d, model.set_name(), bound)?;
        entries.push(FibrancyEntry {
            model,
            fibrant: outcome.fibrant,
            witness: outcome
                .failure
                .map(|(shape, detail)| format!("{shape}: {detail}")),
        });
    }
    Ok(FibrancyTable { entries })
}

/// Structural properties decided directly, independent of the lifting route.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructuralProperty {
    Transposable,
    EquipH,
    EquipV,
    Whi,
    Wvi,
    DoubleGroupoid,
    Contractible,
    CofibrantObject,
}

impl StructuralProperty {
    pub fn parse(s: &str) -> Option<StructuralProperty> {
        Some(match s {
            "transposable" => StructuralProperty::Transposable,
            "equip-h" => StructuralProperty::EquipH,
            "equip-v" => StructuralProperty::EquipV,
            "whi" => StructuralProperty::Whi,
            "wvi" => StructuralProperty::Wvi,
            "double-groupoid" => StructuralProperty::DoubleGroupoid,
            "contractible" => StructuralProperty::Contractible,
            "cofibrant-object" => StructuralProperty::CofibrantObject,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyOutcome {
    pub holds: bool,
    pub witness: Option<String>,
}

impl PropertyOutcome {
    fn yes() -> Self {
        PropertyOutcome {
            holds: true,
            witness: None,
        }
    }
    fn no(witness: String) -> Self {
        PropertyOutcome {
            holds: false,
            witness: Some(witness),
        }
    }
}

/// Decide a structural property of a double category.
pub fn property_check(d: &DoubleCategory, prop: StructuralProperty) -> PropertyOutcome {
    match prop {
        StructuralProperty::Transposable => {
            for f in d.hmors() {
                if companions_of_hmor(d, f).is_empty() {
                    return PropertyOutcome::no(format!(
                        "hmor {} has no companion",
                        d.hmor(f).name
                    ));
                }
            }
            for u in d.vmors() {
                if companions_of_vmor(d, u).is_empty() {
                    return PropertyOutcome::no(format!(
                        "vmor {} has no companion",
                        d.vmor(u).name
                    ));
                }
            }
            PropertyOutcome::yes()
        }
        StructuralProperty::EquipH => {
            for f in d.hmors() {
                if companions_of_hmor(d, f).is_empty() {
                    return PropertyOutcome::no(format!(
                        "hmor {} has no companion",
                        d.hmor(f).name
                    ));
                }
                if conjoints_of_hmor(d, f).is_empty() {
                    return PropertyOutcome::no(format!(
                        "hmor {} has no conjoint",
                        d.hmor(f).name
                    ));
                }
            }
            PropertyOutcome::yes()
        }
        StructuralProperty::EquipV => {
            for u in d.vmors() {
                if companions_of_vmor(d, u).is_empty() {
                    return PropertyOutcome::no(format!(
                        "vmor {} has no companion",
                        d.vmor(u).name
                    ));
                }
                if conjoints_of_vmor(d, u).is_empty() {
                    return PropertyOutcome::no(format!(
                        "vmor {} has no conjoint",
                        d.vmor(u).name
                    ));
                }
            }
            PropertyOutcome::yes()
        }
        StructuralProperty::Whi => {
            for f in d.hmors() {
                if is_equivalence_1cell(d, f).is_some() && companions_of_hmor(d, f).is_empty() {
                    return PropertyOutcome::no(format!(
                        "horizontal equivalence {} has no companion",
                        d.hmor(f).name
                    ));
                }
            }
            PropertyOutcome::yes()
        }
        StructuralProperty::Wvi => {
            let dt = dualize(DualKind::Transpose, d);
            let mut out = property_check(&dt, StructuralProperty::Whi);
            if let Some(w) = &mut out.witness {
                *w = format!("transposed: {w}");
            }
            out
        }
        StructuralProperty::DoubleGroupoid => {
            for f in d.hmors() {
                if is_equivalence_1cell(d, f).is_none() {
                    return PropertyOutcome::no(format!(
                        "hmor {} is not a horizontal equivalence",
                        d.hmor(f).name
                    ));
                }
            }
            let dt = dualize(DualKind::Transpose, d);
            for u in dt.hmors() {
                if is_equivalence_1cell(&dt, u).is_none() {
                    return PropertyOutcome::no(format!(
                        "vmor {} is not a vertical equivalence",
                        dt.hmor(u).name
                    ));
                }
            }
            let wh = weakly_h_invertible_set(d);
            let wv = weakly_v_invertible_set(d);
            for s in d.squares() {
                if !wh[s.0] {
                    return PropertyOutcome::no(format!(
                        "square {} is not weakly horizontally invertible",
                        d.square(s).name
                    ));
                }
                if !wv[s.0] {
                    return PropertyOutcome::no(format!(
                        "square {} is not weakly vertically invertible",
                        d.square(s).name
                    ));
                }
            }
            PropertyOutcome::yes()
        }
        StructuralProperty::Contractible => {
            if d.object_count() == 0 {
                return PropertyOutcome::no("empty double category".to_string());
            }
            let one = crate::constructions::shape(crate::constructions::ShapeName::One);
            let report = is_trivial_fibration(&DoubleFunctor::terminal(d, &one));
            if report.verdict {
                PropertyOutcome::yes()
            } else {
                let f = &report.failures[0];
                PropertyOutcome::no(format!("{}: {}", f.condition, f.witness))
            }
        }
        StructuralProperty::CofibrantObject => {
            if let Some(w) = free_category_failure(d, true) {
                return PropertyOutcome::no(format!("horizontal category not free: {w}"));
            }
            if let Some(w) = free_category_failure(d, false) {
                return PropertyOutcome::no(format!("vertical category not free: {w}"));
            }
            PropertyOutcome::yes()
        }
    }
}

/// Freeness of a finite category: its non-identity morphisms must be exactly
/// the paths of the acyclic multigraph of indecomposables, each morphism
/// reached by exactly one path.
fn free_category_failure(d: &DoubleCategory, horizontal: bool) -> Option<String> {
    let count = if horizontal { d.hmor_count() } else { d.vmor_count() };
    let name = |i: usize| -> String {
        if horizontal {
            d.hmor(HId(i)).name.clone()
        } else {
            d.vmor(VId(i)).name.clone()
        }
    };
    let src = |i: usize| -> usize {
        if horizontal {
            d.hmor(HId(i)).src.0
        } else {
            d.vmor(VId(i)).src.0
        }
    };
    let tgt = |i: usize| -> usize {
        if horizontal {
            d.hmor(HId(i)).tgt.0
        } else {
            d.vmor(VId(i)).tgt.0
        }
    };
    let is_id = |i: usize| -> bool {
        if horizontal {
            d.is_h_identity(HId(i))
        } else {
            d.is_v_identity(VId(i))
        }
    };
    let comp: HashMap<(usize, usize), usize> = if horizontal {
        d.hcomp.iter().map(|(&(a, b), &c)| ((a.0, b.0), c.0)).collect()
    } else {
        d.vcomp.iter().map(|(&(a, b), &c)| ((a.0, b.0), c.0)).collect()
    };

    let decomposable: std::collections::HashSet<usize> = comp
        .iter()
        .filter(|(&(a, b), _)| !is_id(a) && !is_id(b))
        .map(|(_, &c)| c)
        .collect();
    let gens: Vec<usize> = (0..count)
        .filter(|&m| !is_id(m) && !decomposable.contains(&m))
        .collect();

    // The generator graph must be acyclic, otherwise the path category would
    // be infinite.
    let nodes = d.object_count();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nodes];
    for &g in &gens {
        adj[src(g)].push(tgt(g));
    }
    fn dfs(v: usize, adj: &[Vec<usize>], state: &mut [u8]) -> bool {
        state[v] = 1;
        for &w in &adj[v] {
            if state[w] == 1 || (state[w] == 0 && dfs(w, adj, state)) {
                return true;
            }
        }
        state[v] = 2;
        false
    }
    let mut state = vec![0u8; nodes];
    for v in 0..nodes {
        if state[v] == 0 && dfs(v, &adj, &mut state) {
            return Some("generator graph has a directed cycle".to_string());
        }
    }

    // Count, per morphism, the generator paths composing to it.
    let mut path_count: Vec<usize> = vec![0; count];
    for m in (0..count).filter(|&m| is_id(m)) {
        path_count[m] += 1; // the empty path
    }
    let mut frontier: Vec<usize> = gens.clone();
    for &g in &gens {
        path_count[g] += 1;
    }
    let mut guard = 0usize;
    while !frontier.is_empty() {
        guard += 1;
        if guard > count + 1 {
            return Some("path explosion; category is not free".to_string());
        }
        let mut next = Vec::new();
        for &m in &frontier {
            for &g in &gens {
                if tgt(m) == src(g) {
                    let c = *comp.get(&(m, g)).expect("total composition");
                    path_count[c] += 1;
                    next.push(c);
                }
            }
        }
        frontier = next;
    }
    for m in 0..count {
        if path_count[m] != 1 {
            return Some(if is_id(m) && path_count[m] > 1 {
                format!("identity {} is a nonempty composite", name(m))
            } else {
                format!(
                    "{} has {} factorizations into indecomposables",
                    name(m),
                    path_count[m]
                )
            });
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AuditError {
    #[error("uncertified shape {0} refused; only catalogued cells are certified cofibrations")]
    UncertifiedShape(String),
    #[error(transparent)]
    Lift(#[from] LiftError),
}

/// Result of a recipe audit over a corpus. This is falsification, not proof:
/// it verifies the naive-fibration condition on every corpus functor that
/// qualifies as a gregarious fibration between fibrant endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub header: String,
    pub audited: Vec<String>,
    pub skipped: Vec<String>,
    pub counterexamples: Vec<AuditCounterexample>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditCounterexample {
    pub functor: String,
    pub shape: String,
    pub detail: String,
}

impl AuditReport {
    pub fn pass(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Verify the recipe's condition on a corpus: every gregarious fibration
/// between naive fibrant endpoints must lift against every shape in the set.
pub fn audit_recipe(
    shapes: &[CellShape],
    functors: &[(String, DoubleFunctor)],
    bound: Option<usize>,
) -> Result<AuditReport, AuditError> {
    for cell in shapes {
        if !cell.certified {
            return Err(AuditError::UncertifiedShape(cell.name.clone()));
        }
    }
    let mut report = AuditReport {
        header: "recipe audit (falsification over the given corpus, not a proof)".to_string(),
        audited: Vec::new(),
        skipped: Vec::new(),
        counterexamples: Vec::new(),
    };
    for (name, f) in functors {
        let src_fibrant = is_naive_fibrant_shapes(f.source(), shapes, bound)?.fibrant;
        let tgt_fibrant =
            src_fibrant && is_naive_fibrant_shapes(f.target(), shapes, bound)?.fibrant;
        if !(src_fibrant && tgt_fibrant) || !is_gregarious_fibration(f).verdict {
            report.skipped.push(name.clone());
            continue;
        }
        report.audited.push(name.clone());
        for cell in shapes {
            match solve_lifting(f, cell, bound)? {
                crate::lifting::LiftOutcome::Holds => {}
                crate::lifting::LiftOutcome::Counterexample { detail, .. } => {
                    report.counterexamples.push(AuditCounterexample {
                        functor: name.clone(),
                        shape: cell.name.clone(),
                        detail,
                    });
                }
            }
        }
    }
    Ok(report)
}
