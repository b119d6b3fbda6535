use cubicrel::burnside::{SingularCase, SingularType};
use cubicrel::lpoly::LPoly;
use cubicrel::motives::{homogeneous_monomials, motives, ClassExpr};
use cubicrel::relfind::{find_relations, modl_obstruction, registry, verify_relation};

fn cls(s: &str) -> ClassExpr {
    ClassExpr::parse(s).unwrap()
}

#[test]
fn registered_relations_vanish() {
    let m = motives().unwrap();
    for id in ["szs-sym", "szs-hilb", "yfy", "deg5-corrected", "motivic-corrected"] {
        let res = verify_relation(m, &registry::lookup(id).unwrap()).unwrap();
        assert!(res.is_zero(), "{id}");
    }
    for id in ["deg5", "motivic"] {
        let res = verify_relation(m, &registry::lookup(id).unwrap()).unwrap();
        assert!(!res.is_zero(), "{id} as printed");
    }
}

#[test]
fn relation_with_z_is_found_and_normalized() {
    let m = motives().unwrap();
    let mut classes = homogeneous_monomials(4);
    classes.push(cls("Z"));
    let space = find_relations(m, &classes, 8).unwrap();
    assert_eq!(space.nullity.exact(), Some(1));
    let rel = space.minimal(Some(&cls("Z"))).unwrap();
    assert_eq!(rel, registry::szs_sym());
    assert_eq!(rel.coefficient(&cls("Z")), LPoly::monomial(1, 4));
    assert_eq!(rel.coefficient(&cls("S^(4)")), LPoly::monomial(-1, 0));
}

#[test]
fn small_coefficient_bound_misses_the_relation() {
    // the Z relation needs coefficients up to L^6
    let m = motives().unwrap();
    let mut classes = homogeneous_monomials(4);
    classes.push(cls("Z"));
    let space = find_relations(m, &classes, 3).unwrap();
    assert_eq!(space.raw_nullity(), 0);
}

#[test]
fn mod_l_reduction_of_the_z_relation() {
    let rep = modl_obstruction(&registry::szs_sym());
    assert_eq!(rep.congruence(), "S^(4) ≡ S^(3) (mod L)");
    assert_eq!(rep.isolated, Some(cls("S^(3)")));
    assert!(rep.forbidden);
    let yfy = modl_obstruction(&registry::yfy());
    assert!(!yfy.forbidden);
}

#[test]
fn singular_relations_hold_in_the_burnside_ring() {
    for kind in [SingularType::A1, SingularType::A2] {
        let case = SingularCase::build(kind).unwrap();
        assert!(case.main_relation_residual().is_zero(), "{kind:?}");
    }
}
