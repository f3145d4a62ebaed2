//! Early structural checks for the shape catalog and the embeddings.

use dblcat_core::constructions::*;
use dblcat_core::lifting::{all_companion_witnesses, companions_of_hmor};

#[test]
fn catalog_shapes_validate_and_have_expected_sizes() {
    for name in ShapeName::ALL {
        let d = shape(name);
        // building already validates; spot-check a few sizes
        match name {
            ShapeName::Empty => assert_eq!(d.object_count(), 0),
            ShapeName::One => {
                assert_eq!(d.object_count(), 1);
                assert_eq!(d.square_count(), 1);
            }
            ShapeName::H2 => {
                assert_eq!(d.object_count(), 2);
                assert_eq!(d.hmor_count(), 3);
                assert_eq!(d.vmor_count(), 2);
                assert_eq!(d.square_count(), 3);
            }
            ShapeName::HxV => {
                assert_eq!(d.object_count(), 4);
                assert_eq!(d.square_count(), 9);
                let non_identity: Vec<_> = d
                    .squares()
                    .filter(|&s| {
                        d.vid_sq(d.square(s).top) != s && d.hid_sq(d.square(s).left) != s
                    })
                    .collect();
                assert_eq!(non_identity.len(), 1);
            }
            ShapeName::BoundaryHxV => assert_eq!(d.square_count(), 8),
            ShapeName::ParSq => assert_eq!(d.square_count(), 10),
            ShapeName::Sq2 => {
                assert_eq!(d.object_count(), 2);
                assert_eq!(d.hmor_count(), 3);
                assert_eq!(d.vmor_count(), 3);
                assert_eq!(d.square_count(), 6);
            }
            ShapeName::HSigma2 => assert_eq!(d.square_count(), 5),
            ShapeName::HSigmaI => assert_eq!(d.square_count(), 6),
            _ => {}
        }
    }
}

#[test]
fn transpose_of_h2_is_v2_and_dualities_are_involutions() {
    let h2 = shape(ShapeName::H2);
    let v2 = shape(ShapeName::V2);
    assert_eq!(dualize(DualKind::Transpose, &h2), v2);
    assert_eq!(dualize(DualKind::Transpose, &v2), h2);
    for name in [ShapeName::Sq2, ShapeName::HxV, ShapeName::HSigmaI] {
        let d = shape(name);
        assert_eq!(dualize(DualKind::Vop, &dualize(DualKind::Vop, &d)), d);
        assert_eq!(
            dualize(DualKind::Transpose, &dualize(DualKind::Transpose, &d)),
            d
        );
    }
}

#[test]
fn companions_in_sq2() {
    let sq2 = shape(ShapeName::Sq2);
    // identities at 0 and 1 plus the pair on f
    assert_eq!(all_companion_witnesses(&sq2).len(), 3);
    let f = sq2.hmor_by_name("f").unwrap();
    assert_eq!(companions_of_hmor(&sq2, f).len(), 1);

    let h2 = shape(ShapeName::H2);
    let f = h2.hmor_by_name("f").unwrap();
    assert!(companions_of_hmor(&h2, f).is_empty());
}

#[test]
fn companion_2cat_of_sq2_is_the_walking_arrow() {
    let rc = companion_2cat(&shape(ShapeName::Sq2));
    assert_eq!(rc.cat.object_count(), 2);
    assert_eq!(rc.cat.hmor_count(), 3);
    assert_eq!(rc.cat.square_count(), 3);
    assert!(are_isomorphic(rc.cat.as_double(), &shape(ShapeName::H2)));

    let rc = companion_2cat(&shape(ShapeName::One));
    assert_eq!(rc.cat.hmor_count(), 1);

    // f has no companion in H2, so R(H2) is discrete on 2 objects.
    let rc = companion_2cat(&shape(ShapeName::H2));
    assert_eq!(rc.cat.hmor_count(), 2);
}

#[test]
fn adjoint_equivalences_in_walking_iso() {
    let i2 = walking_iso();
    let zero = i2.object_by_name("0").unwrap();
    let one = i2.object_by_name("1").unwrap();
    assert_eq!(enumerate_adjoint_equivalences(i2.as_double(), zero, one).len(), 1);
    // Hsim I: identities plus one adjoint equivalence in each direction
    let hsim = embed(EmbedKind::Hsim, &i2);
    assert_eq!(hsim.vmor_count(), 4);

    // no 1-cell 1 -> 0 in the walking arrow
    let two = walking_arrow();
    let zero = two.object_by_name("0").unwrap();
    let one = two.object_by_name("1").unwrap();
    assert!(enumerate_adjoint_equivalences(two.as_double(), one, zero).is_empty());
    assert_eq!(
        enumerate_adjoint_equivalences(two.as_double(), zero, zero).len(),
        1
    );
}

#[test]
fn underlying_of_h_image_recovers_the_2cat() {
    for c in [walking_arrow(), walking_iso(), walking_2iso()] {
        let d = embed(EmbedKind::H, &c);
        let u = underlying(UnderlyingKind::H, &d);
        assert_eq!(u.as_double(), c.as_double());
    }
    // globular squares of Sq2 are degenerate: underlying H is the arrow
    let u = underlying(UnderlyingKind::H, &shape(ShapeName::Sq2));
    assert_eq!(u.square_count(), 3);
    assert!(are_isomorphic(u.as_double(), &shape(ShapeName::H2)));
}

#[test]
fn product_and_coproduct() {
    let h2 = shape(ShapeName::H2);
    let v2 = shape(ShapeName::V2);
    assert_eq!(product(&h2, &v2).cat, shape(ShapeName::HxV));
    let one = shape(ShapeName::One);
    let two_points = coproduct(&one, &one).cat;
    assert_eq!(two_points.object_count(), 2);
    assert_eq!(two_points.hmor_count(), 2);
    // product with the point is isomorphic to the factor
    let p = product(&shape(ShapeName::Sq2), &one);
    assert!(p.proj1().is_bijective());
}

#[test]
fn core_of_locally_discrete_categories() {
    let core = core_2gpd(&walking_arrow());
    assert_eq!(core.hmor_count(), 2); // identities only
    let core = core_2gpd(&walking_iso());
    assert_eq!(core.as_double(), walking_iso().as_double());
    let core = core_2gpd(&walking_2cell());
    assert_eq!(core.hmor_count(), 2);
    assert_eq!(core.square_count(), 2);
}

#[test]
fn strict_hom_object_counts() {
    let v2 = shape(ShapeName::V2);
    let hom = strict_hom(&v2, &v2);
    assert_eq!(hom.cat.object_count(), 3);
    let h2 = shape(ShapeName::H2);
    let hom = strict_hom(&h2, &h2);
    assert_eq!(hom.cat.object_count(), 3);
    // the hom out of the point is isomorphic to the target
    for name in [ShapeName::Sq2, ShapeName::HxV] {
        let a = shape(name);
        let counit = hom_one_counit(&a);
        assert!(counit.is_bijective());
    }
}

#[test]
fn functor_enumeration_counts() {
    let h2 = shape(ShapeName::H2);
    let one = shape(ShapeName::One);
    assert_eq!(enumerate_double_functors(&one, &h2).len(), 2);
    assert_eq!(enumerate_double_functors(&h2, &h2).len(), 3);
    // functors HxV -> D are squares of D
    let hxv = shape(ShapeName::HxV);
    let sq2 = shape(ShapeName::Sq2);
    assert_eq!(enumerate_double_functors(&hxv, &sq2).len(), sq2.square_count());
}

#[test]
fn unit_into_r_of_sq() {
    let (unit, _rc) = unit_into_companion_2cat(&walking_iso());
    assert_eq!(unit.source().object_count(), unit.target().object_count());
}
