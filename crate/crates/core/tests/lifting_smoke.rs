//! Early checks for the lifting engine, the checkers, and the classifiers.

use dblcat_core::classifiers::*;
use dblcat_core::constructions::*;
use dblcat_core::corpus::{build_corpus, ladder, Profile};
use dblcat_core::equivalences::*;
use dblcat_core::lifting::*;
use dblcat_core::DoubleFunctor;

#[test]
fn generating_set_sizes() {
    assert_eq!(generating_set(SetName::I).len(), 5);
    assert_eq!(generating_set(SetName::J0).len(), 3);
    assert_eq!(generating_set(SetName::JTrGpd).len(), generating_set(SetName::JTr).len() + 3);
    assert_eq!(generating_set(SetName::JCtr).len(), 8);
    assert_eq!(generating_set(SetName::JEmptyOrCtr).len(), 7);
}

#[test]
fn fibrancy_of_basic_shapes() {
    let sq2 = shape(ShapeName::Sq2);
    assert!(is_naive_fibrant(&sq2, SetName::JTr, None).unwrap().fibrant);
    assert!(!is_naive_fibrant(&sq2, SetName::JTrGpd, None).unwrap().fibrant);
    assert!(!is_naive_fibrant(&sq2, SetName::JHeqp, None).unwrap().fibrant);

    let h2 = shape(ShapeName::H2);
    assert!(!is_naive_fibrant(&h2, SetName::JTr, None).unwrap().fibrant);
    assert!(is_naive_fibrant(&h2, SetName::JWhi, None).unwrap().fibrant);

    let empty = shape(ShapeName::Empty);
    assert!(!is_naive_fibrant(&empty, SetName::JCtr, None).unwrap().fibrant);
    assert!(is_naive_fibrant(&empty, SetName::JEmptyOrCtr, None).unwrap().fibrant);

    // every double category is gregarious fibrant
    for name in [ShapeName::H2, ShapeName::ParSq, ShapeName::HSigma2] {
        assert!(is_naive_fibrant(&shape(name), SetName::J0, None).unwrap().fibrant);
    }
    assert!(is_naive_fibrant(&ladder(), SetName::J0, None).unwrap().fibrant);
}

#[test]
fn trivial_fibration_examples() {
    let corpus = build_corpus(Profile::Small);
    let collapse = &corpus
        .functors
        .iter()
        .find(|f| f.name == "collapse-hsigmai-h2")
        .unwrap()
        .functor;
    assert!(is_trivial_fibration(collapse).verdict);
    // and it lifts against all five generating cofibrations
    for cell in generating_set(SetName::I) {
        assert!(solve_lifting(collapse, &cell, None).unwrap().holds());
    }

    let collapse2 = &corpus
        .functors
        .iter()
        .find(|f| f.name == "collapse-hsigma2-h2")
        .unwrap()
        .functor;
    assert!(!is_trivial_fibration(collapse2).verdict);

    let fold = &corpus
        .functors
        .iter()
        .find(|f| f.name == "fold-two-points")
        .unwrap()
        .functor;
    let report = is_trivial_fibration(fold);
    assert!(!report.verdict);
    assert_eq!(report.failures[0].condition, "full-h");

    let par = &corpus
        .functors
        .iter()
        .find(|f| f.name == "quotient-parsq")
        .unwrap()
        .functor;
    assert!(!is_trivial_fibration(par).verdict);
    // it fails exactly the parallel-squares cell
    let cell = generating_set(SetName::I)
        .into_iter()
        .find(|c| c.name == "I.parallel-squares")
        .unwrap();
    assert!(!solve_lifting(par, &cell, None).unwrap().holds());
}

#[test]
fn gregarious_checks() {
    let corpus = build_corpus(Profile::Small);
    let collapse = &corpus
        .functors
        .iter()
        .find(|f| f.name == "collapse-hsigmai-h2")
        .unwrap()
        .functor;
    assert!(is_gregarious_equivalence(collapse).verdict);
    assert!(four_tuple_witness(collapse).verdict);

    let h2 = shape(ShapeName::H2);
    let one = shape(ShapeName::One);
    let term = DoubleFunctor::terminal(&h2, &one);
    let report = is_gregarious_equivalence(&term);
    assert!(!report.verdict);
    assert_eq!(report.failures[0].condition, "g2");
    assert!(!four_tuple_witness(&term).verdict);
    assert!(is_gregarious_fibration(&term).verdict);

    // inclusion of H(iso) into Sq(iso): fails essential fullness on verticals
    let incl = &corpus
        .functors
        .iter()
        .find(|f| f.name == "incl-hiso-sqiso")
        .unwrap()
        .functor;
    let report = is_gregarious_equivalence(incl);
    assert!(!report.verdict);
    assert_eq!(report.failures[0].condition, "g3");
    assert!(!four_tuple_witness(incl).verdict);
}

#[test]
fn biequivalence_and_equifibration_examples() {
    let i2 = walking_iso();
    let one2 = from_category(&["*"], &[], &[]).unwrap();
    // collapse I -> 1
    let collapse = {
        let mut data = dblcat_core::RawFunctorData::default();
        data.on_objects.push(("0".into(), "*".into()));
        data.on_objects.push(("1".into(), "*".into()));
        data.on_hmor.push(("f".into(), "id:*".into()));
        data.on_hmor.push(("g".into(), "id:*".into()));
        dblcat_core::TwoFunctor(
            dblcat_core::validate_double_functor(&data, i2.as_double(), one2.as_double()).unwrap(),
        )
    };
    assert!(is_biequivalence(&collapse).verdict);
    assert!(is_equifibration(&collapse).verdict);

    // walking arrow to the point: fails essential fullness
    let two2 = walking_arrow();
    let term = {
        let mut data = dblcat_core::RawFunctorData::default();
        data.on_objects.push(("0".into(), "*".into()));
        data.on_objects.push(("1".into(), "*".into()));
        data.on_hmor.push(("f".into(), "id:*".into()));
        dblcat_core::TwoFunctor(
            dblcat_core::validate_double_functor(&data, two2.as_double(), one2.as_double())
                .unwrap(),
        )
    };
    let report = is_biequivalence(&term);
    assert!(!report.verdict);
    assert_eq!(report.failures[0].condition, "b2");

    // point into the walking iso: f1 fails (the equivalence 0 -> 1 has no lift)
    let incl = {
        let mut data = dblcat_core::RawFunctorData::default();
        data.on_objects.push(("*".into(), "0".into()));
        dblcat_core::TwoFunctor(
            dblcat_core::validate_double_functor(&data, one2.as_double(), i2.as_double()).unwrap(),
        )
    };
    let report = is_equifibration(&incl);
    assert!(!report.verdict);
    assert_eq!(report.failures[0].condition, "f1");
}

#[test]
fn classify_endpoints() {
    let table = classify(&shape(ShapeName::One), None).unwrap();
    assert!(table.entries.iter().all(|e| e.fibrant));

    let table = classify(&shape(ShapeName::Empty), None).unwrap();
    for e in &table.entries {
        assert_eq!(e.fibrant, e.model != ModelStructure::Ctr, "{:?}", e.model);
    }

    let table = classify(&shape(ShapeName::Sq2), None).unwrap();
    assert!(table.fibrant(ModelStructure::Greg));
    assert!(table.fibrant(ModelStructure::Whi));
    assert!(table.fibrant(ModelStructure::Wvi));
    assert!(table.fibrant(ModelStructure::Tr));
    assert!(!table.fibrant(ModelStructure::TrGpd));
    assert!(!table.fibrant(ModelStructure::HEqp));
}

#[test]
fn weak_invertibility_examples() {
    // the only non-identity square of the walking square is not weakly
    // horizontally invertible
    let hxv = shape(ShapeName::HxV);
    let filler = hxv.square_by_name("(e:f,idsq:f)").unwrap();
    assert!(!is_weakly_h_invertible(&hxv, filler));
    // box squares are
    let b = hxv.square_by_name("box:(0,0)").unwrap();
    assert!(is_weakly_h_invertible(&hxv, b));
    // the generating iso of H(SigmaI) is weakly horizontally invertible
    let hsigmai = shape(ShapeName::HSigmaI);
    let alpha = hsigmai.square_by_name("alpha").unwrap();
    assert!(is_weakly_h_invertible(&hsigmai, alpha));
    // Sq(z2) is a transposable double groupoid
    let sqz2 = embed(
        EmbedKind::Sq,
        &from_category(&["*"], &[("s", "*", "*")], &[("s", "s", "id:*")]).unwrap(),
    );
    assert!(property_check(&sqz2, StructuralProperty::Transposable).holds);
    assert!(property_check(&sqz2, StructuralProperty::DoubleGroupoid).holds);
    assert!(is_naive_fibrant(&sqz2, SetName::JTrGpd, None).unwrap().fibrant);
}

#[test]
fn property_checks() {
    let sq2 = shape(ShapeName::Sq2);
    assert!(property_check(&sq2, StructuralProperty::Transposable).holds);
    assert!(!property_check(&sq2, StructuralProperty::EquipH).holds);
    let hxv = shape(ShapeName::HxV);
    assert!(property_check(&hxv, StructuralProperty::CofibrantObject).holds);
    let one = shape(ShapeName::One);
    assert!(property_check(&one, StructuralProperty::Contractible).holds);
    assert!(!property_check(&shape(ShapeName::Empty), StructuralProperty::Contractible).holds);
    // the iso seed has a non-free horizontal category
    let hiso = embed(EmbedKind::H, &walking_iso());
    assert!(!property_check(&hiso, StructuralProperty::CofibrantObject).holds);
    let sqi = embed(EmbedKind::Sq, &walking_iso());
    assert!(property_check(&sqi, StructuralProperty::Contractible).holds);
}

#[test]
fn companion_and_conjoint_searches() {
    let sq2vop = shape(ShapeName::Sq2vop);
    let f = sq2vop.hmor_by_name("f").unwrap();
    assert_eq!(conjoints_of_hmor(&sq2vop, f).len(), 1);
    // gregarious witnesses in Sq(iso) include one on f
    let sqi = embed(EmbedKind::Sq, &walking_iso());
    let zero = sqi.object_by_name("0").unwrap();
    let ws = find_gregarious_adjoint_equivalence(&sqi, zero, None);
    assert!(ws
        .iter()
        .any(|w| sqi.hmor(w.fwd.f).name == "f" && sqi.hmor(w.bwd.f).name == "g"));
    // in H2, only the identity witness exists at 0
    let h2 = shape(ShapeName::H2);
    let zero = h2.object_by_name("0").unwrap();
    let ws = find_gregarious_adjoint_equivalence(&h2, zero, None);
    assert_eq!(ws.len(), 1);
}

#[test]
fn uncertified_shape_is_refused() {
    let mut shapes = generating_set(SetName::J0);
    shapes.push(CellShape::uncertified_point_to_h2());
    let corpus = build_corpus(Profile::Small);
    let result = audit_recipe(&shapes, &corpus.functor_pairs(), None);
    assert!(matches!(result, Err(AuditError::UncertifiedShape(_))));
}
