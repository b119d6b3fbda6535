//! Literal relations among surface classes, as printed in the literature,
//! stored as LHS - RHS = 0.

use crate::lpoly::LPoly;
use crate::motives::ClassExpr;

use super::Relation;

fn term(class: &str, coeffs: &[i64]) -> (ClassExpr, LPoly) {
    (ClassExpr::parse(class).expect("registered class label"), LPoly::from_ints(coeffs))
}

/// L^4 Z = S^(4) - (1 - L + L^2) S^(3) - L S S^(2) + (L + L^2 + L^3) S^2
///         - 2L^2 S^(2) - (L - L^2 + L^3 - L^4 + L^5) S + (L^2 + L^4 + L^6)
pub fn szs_sym() -> Relation {
    Relation::new([
        term("Z", &[0, 0, 0, 0, 1]),
        term("S^(4)", &[-1]),
        term("S^(3)", &[1, -1, 1]),
        term("S×S^(2)", &[0, 1]),
        term("S^2", &[0, -1, -1, -1]),
        term("S^(2)", &[0, 0, 2]),
        term("S", &[0, 1, -1, 1, -1, 1]),
        term("1", &[0, 0, -1, 0, -1, 0, -1]),
    ])
}

/// L^4 Z = S^[4] - (1 - L + L^2) S^[3] - 2L S S^[2] + (2L + L^2 + 2L^3) S^2
///         - 3L^2 S^[2] - (L - 2L^2 - 2L^4 + L^5) S + (L^2 + L^4 + L^6)
pub fn szs_hilb() -> Relation {
    Relation::new([
        term("Z", &[0, 0, 0, 0, 1]),
        term("S^[4]", &[-1]),
        term("S^[3]", &[1, -1, 1]),
        term("S×S^[2]", &[0, 2]),
        term("S^2", &[0, -2, -1, -2]),
        term("S^[2]", &[0, 0, 3]),
        term("S", &[0, 1, -2, 0, -2, 1]),
        term("1", &[0, 0, -1, 0, -1, 0, -1]),
    ])
}

/// S^(2) = (1 + L^2) S + L^2 F
pub fn yfy() -> Relation {
    Relation::new([term("S^(2)", &[1]), term("S", &[-1, 0, -1]), term("F", &[0, 0, -1])])
}

/// The homogeneous degree-5 relation exactly as printed, with its repeated
/// classes left in place (they are summed on construction).
pub fn deg5_printed() -> Relation {
    Relation::new([
        // left-hand side
        term("S^(5)", &[1]),
        term("S×S^(3)", &[1]),
        // minus right-hand side
        term("S×S^(4)", &[-1]),
        term("S^(3)", &[-1]),
        term("S^2×S^(2)", &[0, 1]),
        term("S×S^(3)", &[0, 0, 1]),
        term("S×S^(2)", &[0, -2, -1, -2]),
        term("S^3", &[0, -1, -1, -1]),
        term("S^(2)", &[0, 2, 3, 5, 3, 2]),
        term("S^(3)", &[0, 0, -1, 0, -1]),
        term("S^(2)", &[0, 1, 1, 1, 1, 1]),
        term("S", &[0, -1, -3, -4, -5, -4, -3, -1]),
        term("1", &[0, 0, 1, 1, 2, 1, 2, 1, 1]),
    ])
}

/// The degree-5 relation with the first printed [S^(2)] coefficient
/// attached to [S^2] instead, which is what the relation search returns.
pub fn deg5_corrected() -> Relation {
    let mut out = deg5_printed();
    out.add_term(ClassExpr::parse("S^(2)").expect("label"), LPoly::from_ints(&[0, -2, -3, -5, -3, -2]));
    out.add_term(ClassExpr::parse("S^2").expect("label"), LPoly::from_ints(&[0, 2, 3, 5, 3, 2]));
    out
}

/// Both sides of the motivic equivalence lifting the Hilbert-scheme
/// relation, as sums of Tate-twisted classes. `corrected` moves the twist
/// on the bare [S] summand from 0 to 1 and the twist on the right-hand
/// [S^[3]] summand from 2 to 1; the uncorrected sides are as printed.
pub fn motivic_sides(corrected: bool) -> (Vec<(ClassExpr, LPoly)>, Vec<(ClassExpr, LPoly)>) {
    let s_twist: &[i64] = if corrected { &[0, 1, 0, 0, 0, 1] } else { &[1, 0, 0, 0, 0, 1] };
    let s3_twist: &[i64] = if corrected { &[0, 1] } else { &[0, 0, 1] };
    let lhs = vec![
        term("Z", &[0, 0, 0, 0, 1]),
        term("S^[3]", &[1, 0, 1]),
        term("S×S^[2]", &[0, 2]),
        term("S^[2]", &[0, 0, 3]),
        term("S", s_twist),
    ];
    let rhs = vec![
        term("S^[4]", &[1]),
        term("S^[3]", s3_twist),
        term("S^2", &[0, 2, 1, 2]),
        term("S", &[0, 0, 2, 0, 2]),
        term("1", &[0, 0, 1, 0, 1, 0, 1]),
    ];
    (lhs, rhs)
}

/// The motivic equivalence as a relation LHS - RHS = 0.
pub fn motivic(corrected: bool) -> Relation {
    let (lhs, rhs) = motivic_sides(corrected);
    Relation::new(lhs.into_iter().chain(rhs.into_iter().map(|(c, p)| (c, p.neg()))))
}

/// Identifiers accepted by `verify`, with a one-line description.
pub const RELATION_IDS: &[(&str, &str)] = &[
    ("szs-sym", "degree-4 relation between S and Z(S), symmetric-power form"),
    ("szs-hilb", "degree-4 relation between S and Z(S), Hilbert-scheme form"),
    ("yfy", "degree-2 relation between S and its Fano scheme of lines"),
    ("deg5", "homogeneous degree-5 relation"),
    ("deg5-corrected", "the degree-5 relation with its misplaced [S^(2)] coefficient moved to [S^2]"),
    ("motivic", "motivic equivalence lifting the Hilbert-scheme relation, as printed"),
    ("motivic-corrected", "the same equivalence with the twists on [S] and [S^[3]] that balance both sides"),
    ("a1", "relation for a surface with one A1 point, in the Burnside ring of S6"),
    ("a2", "relation for a surface with one A2 point, in the Burnside ring of the order-72 group"),
];

/// Literal relation by identifier (the Burnside cases are not listed here).
pub fn lookup(id: &str) -> Option<Relation> {
    match id {
        "szs-sym" => Some(szs_sym()),
        "szs-hilb" => Some(szs_hilb()),
        "yfy" => Some(yfy()),
        "deg5" => Some(deg5_printed()),
        "deg5-corrected" => Some(deg5_corrected()),
        "motivic" => Some(motivic(false)),
        "motivic-corrected" => Some(motivic(true)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corrected_motivic_equivalence_is_the_hilbert_relation() {
        assert_eq!(motivic(true), szs_hilb());
        assert_ne!(motivic(false), szs_hilb());
    }
}
