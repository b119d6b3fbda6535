//! End-to-end verification reports, one per area.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::burnside::{FiniteGroup, SingularCase, SingularType};
use crate::charring::{GradedCharacter, IrrepDecomposition};
use crate::chartable::{a2, e6, TableId};
use crate::error::{Error, Result};
use crate::goldens::PRINTED_DECOMPOSITIONS;
use crate::k3lambda;
use crate::lpoly::LPoly;
use crate::motives::{homogeneous_monomials, monomials_of_degree, motives, partitions, ClassExpr, Factor, Motives};
use crate::relfind::{self, registry, find_relations, minimize, modl_obstruction, verify_relation, Relation};
use crate::report::{Check, Report};
use crate::rootsys::weyl;

/// Coefficient degree bound used by the relation searches.
pub const DEFAULT_MAX_DEG: usize = 8;

fn cls(s: &str) -> ClassExpr {
    ClassExpr::parse(s).expect("fixed class label")
}

fn with_extra(mut v: Vec<ClassExpr>, extra: &[&str]) -> Vec<ClassExpr> {
    v.extend(extra.iter().map(|s| cls(s)));
    v
}

/// Products of S and S^[n] of degree <= d (the Hilbert-scheme analogue of
/// `homogeneous_monomials`).
pub fn hilb_monomials(d: u32) -> Vec<ClassExpr> {
    let mut out = Vec::new();
    for k in 0..=d {
        let mut level: Vec<ClassExpr> = partitions(k)
            .iter()
            .map(|p| ClassExpr::new(p.iter().map(|&n| if n == 1 { Factor::Sym(1) } else { Factor::Hilb(n) })))
            .collect();
        level.sort();
        out.extend(level);
    }
    out
}

pub fn tables() -> Report {
    let mut r = Report::new("character tables");
    r.extend(e6().validate());
    r.extend(a2().validate());
    let dims: u64 = e6().values.iter().map(|row| (row[0] * row[0]) as u64).sum();
    r.push(Check::eq("sum of squared E6 dimensions", dims, e6().group_order));
    r.push_result("generated W(E6) order", weyl(), |w| Check::eq("generated W(E6) order", w.order() as u64, e6().group_order));
    r.push_result("generated A2 group order", a2_group(), |g| Check::eq("generated A2 group order", g.order() as u64, 72));
    r.push(Check::eq("A2 table order", a2().group_order, 72));
    r
}

fn a2_group() -> Result<FiniteGroup> {
    FiniteGroup::from_cycles("Z2 x| (S3 x S3)", 6, &["(12)", "(123)", "(14)(25)(36)"])
}

pub fn structure() -> Report {
    let mut r = Report::new("roots, lines and classes");
    let w = match weyl() {
        Ok(w) => w,
        Err(e) => {
            r.push(Check::new("W(E6)", false, e.to_string()));
            return r;
        }
    };
    r.push(Check::eq("lines", w.lines.len(), 27));
    r.push(Check::eq("roots", w.roots.len(), 72));
    r.push(Check::eq("conjugacy classes", w.classes.len(), 25));
    let mut got: Vec<(u64, u64)> = w.classes.iter().map(|c| (c.order, c.size)).collect();
    let mut want: Vec<(u64, u64)> = (0..e6().n).map(|c| (e6().orders[c], e6().class_sizes[c])).collect();
    got.sort_unstable();
    want.sort_unstable();
    r.push(Check::new("(order, size) multiset", got == want, format!("{} classes", got.len())));
    let bad = w.power_map_mismatches(12);
    r.push(Check::new(
        "power maps agree with literal powers (m <= 12)",
        bad.is_empty(),
        if bad.is_empty() { "all 25 classes".to_string() } else { format!("mismatches {bad:?}") },
    ));
    r
}

/// Euler number of a product of S, S^(n), S^[n], F, Z, V from e(S) = 9.
pub fn euler_oracle(c: &ClassExpr) -> Option<BigInt> {
    // coefficients of (1 - t)^-9 and prod_k (1 - t^k)^-9
    let n = 8;
    let mut sym = vec![BigInt::zero(); n + 1];
    sym[0] = BigInt::one();
    for _ in 0..9 {
        for i in 1..=n {
            let prev = sym[i - 1].clone();
            sym[i] += prev;
        }
    }
    let mut hilb = vec![BigInt::zero(); n + 1];
    hilb[0] = BigInt::one();
    for k in 1..=n {
        for _ in 0..9 {
            for i in k..=n {
                let prev = hilb[i - k].clone();
                hilb[i] += prev;
            }
        }
    }
    let mut e = BigInt::one();
    for f in c.factors() {
        e *= match f {
            Factor::Sym(m) => sym.get(*m as usize)?.clone(),
            Factor::Hilb(m) => hilb.get(*m as usize)?.clone(),
            Factor::F => BigInt::from(27),
            Factor::Z => BigInt::from(72),
            Factor::V => BigInt::from(7),
        };
    }
    Some(e)
}

fn is_palindromic(d: &IrrepDecomposition) -> bool {
    let top = d.terms.keys().next_back().copied().unwrap_or(0);
    d.terms.iter().all(|(k, row)| d.terms.get(&(top - k)) == Some(row))
}

fn golden_check(m: &Motives, label: &str, printed: &str) -> Result<Check> {
    let c = ClassExpr::parse(label)?;
    let got = m.value(&c)?.decompose()?;
    let want = IrrepDecomposition::parse(TableId::E6, printed)?;
    let name = format!("[{label}]");
    if got == want {
        return Ok(Check::new(name, true, got.to_string()));
    }
    let e_printed = want.reconstruct().dimension();
    let e_got = got.reconstruct().dimension();
    let oracle = euler_oracle(&c).map(|e| e.to_string()).unwrap_or_else(|| "?".into());
    Ok(Check::new(
        name,
        false,
        format!(
            "computed {got}; printed {want}; Euler number computed {e_got}, printed {e_printed}, product formula {oracle}; \
             printed display palindromic: {}",
            is_palindromic(&want)
        ),
    ))
}

pub fn decompositions() -> Report {
    let mut r = Report::new("printed decompositions");
    let m = match motives() {
        Ok(m) => m,
        Err(e) => {
            r.push(Check::new("motives", false, e.to_string()));
            return r;
        }
    };
    for (group, label, printed) in PRINTED_DECOMPOSITIONS {
        let name = format!("{group} [{label}]");
        match golden_check(m, label, printed) {
            Ok(mut c) => {
                c.name = name;
                r.push(c);
            }
            Err(e) => r.push(Check::new(name, false, e.to_string())),
        }
    }
    r
}

/// Independent checks of every computed decomposition: Euler number from
/// the product formula and palindromic L-coefficients.
pub fn decomposition_oracles() -> Report {
    let mut r = Report::new("decomposition oracles");
    let Ok(m) = motives() else {
        r.push(Check::new("motives", false, "unavailable"));
        return r;
    };
    for (_, label, _) in PRINTED_DECOMPOSITIONS {
        let c = cls(label);
        let res = m.value(&c).and_then(|v| Ok((v.dimension(), v.decompose()?)));
        r.push_result(label, res, |(e, d)| {
            let want = euler_oracle(&c).map(BigRational::from_integer);
            let ok = want.as_ref() == Some(&e) && is_palindromic(&d);
            Check::new(format!("[{label}] Euler number and symmetry"), ok, format!("e = {e}"))
        });
    }
    r
}

fn space_check(
    r: &mut Report,
    m: &Motives,
    name: &str,
    classes: &[ClassExpr],
    want_nullity: usize,
    expect: Option<(&Relation, &str)>,
) {
    let res = find_relations(m, classes, DEFAULT_MAX_DEG);
    r.push_result(name, res, |space| {
        let n = space.nullity;
        let mut ok = n.exact() == Some(want_nullity);
        let mut detail = format!("{} classes, nullity {n}", classes.len());
        if let Some((rel, key)) = expect {
            let got = space.minimal(Some(&cls(key)));
            let same = got.as_ref() == Some(rel);
            ok &= same;
            match got {
                Some(g) if !same => detail.push_str(&format!("; minimal relation {g}")),
                Some(_) => detail.push_str("; the minimal relation is the expected one"),
                None => detail.push_str("; no minimal relation"),
            }
        }
        Check::new(name, ok, detail)
    });
}

pub fn nonexistence() -> Report {
    let mut r = Report::new("nonexistence");
    let Ok(m) = motives() else {
        r.push(Check::new("motives", false, "unavailable"));
        return r;
    };
    let yfy = registry::yfy();
    space_check(&mut r, m, "homogeneous, degree <= 2", &homogeneous_monomials(2), 0, None);
    space_check(
        &mut r,
        m,
        "degree <= 3 with F: only the Y-F relation",
        &with_extra(homogeneous_monomials(3), &["F"]),
        1,
        Some((&yfy, "S^(2)")),
    );
    let mut added = monomials_of_degree(3);
    let order = [cls("S^(3)"), cls("S×S^(2)"), cls("S^3")];
    added.sort_by_key(|c| order.iter().position(|o| o == c));
    added.push(cls("Z"));
    let cert = relfind::nonexistence_certificate(m, &with_extra(homogeneous_monomials(2), &["F"]), &added);
    r.push_result("blocking irreducibles for degree 3 and Z", cert, |cert| {
        let got: Vec<(String, Vec<usize>)> = cert.blocking.iter().map(|(c, v)| (c.to_string(), v.clone())).collect();
        let want: Vec<(String, Vec<usize>)> = vec![
            ("S^(3)".into(), vec![16]),
            ("S×S^(2)".into(), vec![20]),
            ("S^3".into(), vec![12]),
            ("Z".into(), vec![8]),
        ];
        let show = |v: &[(String, Vec<usize>)]| {
            v.iter()
                .map(|(c, s)| format!("{c}: {}", s.iter().map(|i| format!("χ{i}")).collect::<Vec<_>>().join(",")))
                .collect::<Vec<_>>()
                .join("; ")
        };
        Check::eq("blocking irreducibles for degree 3 and Z", show(&got), show(&want))
    });
    space_check(
        &mut r,
        m,
        "degree <= 3 with F and Z: only the Y-F relation",
        &with_extra(homogeneous_monomials(3), &["F", "Z"]),
        1,
        Some((&yfy, "S^(2)")),
    );
    space_check(
        &mut r,
        m,
        "degree <= 4 with F: only the Y-F relation",
        &with_extra(homogeneous_monomials(4), &["F"]),
        1,
        Some((&yfy, "S^(2)")),
    );
    space_check(&mut r, m, "homogeneous, degree <= 4", &homogeneous_monomials(4), 0, None);
    r
}

pub fn uniqueness() -> Report {
    let mut r = Report::new("uniqueness");
    let Ok(m) = motives() else {
        r.push(Check::new("motives", false, "unavailable"));
        return r;
    };
    let sym = registry::szs_sym();
    let hilb = registry::szs_hilb();
    space_check(&mut r, m, "degree <= 4 with Z, symmetric powers", &with_extra(homogeneous_monomials(4), &["Z"]), 1, Some((&sym, "Z")));
    space_check(&mut r, m, "degree <= 4 with Z, Hilbert schemes", &with_extra(hilb_monomials(4), &["Z"]), 1, Some((&hilb, "Z")));
    r.push(Check::eq("Z coefficient", sym.coefficient(&cls("Z")).to_string(), LPoly::monomial(1, 4).to_string()));
    space_check(&mut r, m, "degree <= 2 with F", &with_extra(homogeneous_monomials(2), &["F"]), 1, Some((&registry::yfy(), "S^(2)")));
    for (id, rel) in [("szs-sym", sym), ("szs-hilb", hilb), ("yfy", registry::yfy())] {
        r.push_result(&format!("{id} residual"), verify_relation(m, &rel), |res| residual_check(&format!("{id} residual"), &res));
    }
    r
}

fn residual_check(name: &str, res: &GradedCharacter) -> Check {
    if res.is_zero() {
        return Check::new(name, true, "0");
    }
    let detail = res.decompose().map(|d| d.to_string()).unwrap_or_else(|e| e.to_string());
    Check::new(name, false, detail)
}

pub fn degree5() -> Report {
    let mut r = Report::new("degree 5");
    let Ok(m) = motives() else {
        r.push(Check::new("motives", false, "unavailable"));
        return r;
    };
    let printed = registry::deg5_printed();
    r.push_result("printed relation residual", verify_relation(m, &printed), |res| residual_check("printed relation residual", &res));
    let printed_min = minimize(&printed, Some(&cls("S^(5)")));
    space_check(
        &mut r,
        m,
        "unique homogeneous relation equals the printed one",
        &homogeneous_monomials(5),
        1,
        Some((&printed_min, "S^(5)")),
    );
    let corrected = registry::deg5_corrected();
    r.push_result("corrected relation residual", verify_relation(m, &corrected), |res| {
        residual_check("corrected relation residual", &res)
    });
    let corrected_min = minimize(&corrected, Some(&cls("S^(5)")));
    space_check(
        &mut r,
        m,
        "unique homogeneous relation equals the corrected one",
        &homogeneous_monomials(5),
        1,
        Some((&corrected_min, "S^(5)")),
    );
    r
}

fn side_value(m: &Motives, side: &[(ClassExpr, LPoly)]) -> Result<GradedCharacter> {
    let mut acc = GradedCharacter::zero(TableId::E6);
    for (c, p) in side {
        let v = m.value(c)?;
        for (k, a) in p.coeffs().iter().enumerate() {
            if !a.is_zero() {
                acc = acc.add(&v.shift(k as i32).scale(a))?;
            }
        }
    }
    Ok(acc)
}

fn motivic_check(m: &Motives, corrected: bool) -> Result<Check> {
    let (lhs, rhs) = registry::motivic_sides(corrected);
    let l = side_value(m, &lhs)?.decompose()?;
    let rr = side_value(m, &rhs)?.decompose()?;
    let name = if corrected { "corrected twists: sides agree" } else { "printed twists: sides agree" };
    let detail = if l == rr {
        format!("both sides {l}")
    } else {
        let diff = side_value(m, &lhs)?.sub(&side_value(m, &rhs)?)?.decompose()?;
        format!("left - right = {diff}")
    };
    Ok(Check::new(name, l == rr, detail))
}

pub fn motivic() -> Report {
    let mut r = Report::new("motivic equivalence");
    let Ok(m) = motives() else {
        r.push(Check::new("motives", false, "unavailable"));
        return r;
    };
    r.push_result("printed twists: sides agree", motivic_check(m, false), |c| c);
    r.push_result("corrected twists: sides agree", motivic_check(m, true), |c| c);
    r
}

pub fn burnside(kind: SingularType) -> Report {
    match SingularCase::build(kind) {
        Ok(c) => c.suite(),
        Err(e) => {
            let mut r = Report::new(format!("{kind:?}"));
            r.push(Check::new("build", false, e.to_string()));
            r
        }
    }
}

pub fn fourfold() -> Report {
    let mut r = Report::new("cubic fourfolds");
    for (name, printed) in k3lambda::PRINTED_EXPANSIONS {
        let res = k3lambda::K3Poly::parse(printed).and_then(|p| Ok((p, k3lambda::fourfold_class(name)?)));
        r.push_result(&format!("[{name}]"), res, |(want, got)| {
            Check::new(format!("[{name}]"), got == want, if got == want { got.to_string() } else { format!("computed {got}") })
        });
    }
    let yfy = k3lambda::yfy_residual();
    r.push(Check::new("Y-F(Y) residual", yfy.is_zero(), yfy.to_string()));
    match k3lambda::derive_fourfold_relation() {
        Ok(d) => {
            r.push(Check::new(
                "Y-Z(Y) relation space",
                d.nullity.exact() == Some(1),
                format!("nullity {} at coefficient degree {}: {}", d.nullity, d.max_coeff_degree, d.relation),
            ));
            r.push(Check::new("Y-Z(Y) free-ring residual", d.free_residual.is_zero(), d.free_residual.to_string()));
            r.push(Check::new("Y-Z(Y) modulo L", true, d.relation.mod_l()));
            let oracle = motives().and_then(|m| k3lambda::substitution_residual(&d.relation, m.s()));
            r.push_result("Y-Z(Y) substitution oracle", oracle, |res| residual_check("Y-Z(Y) substitution oracle", &res));
        }
        Err(e) => r.push(Check::new("Y-Z(Y) relation space", false, e.to_string())),
    }
    r
}

pub fn mod_l() -> Report {
    let mut r = Report::new("modulo L");
    let expect = |rel: &Relation, want: &[(&str, i64)], name: &str| -> Check {
        let rep = modl_obstruction(rel);
        let want: BTreeMap<ClassExpr, BigInt> = want.iter().map(|(c, k)| (cls(c), BigInt::from(*k))).collect();
        let neg: BTreeMap<ClassExpr, BigInt> = want.iter().map(|(c, k)| (c.clone(), -k)).collect();
        let ok = (rep.reduction == want || rep.reduction == neg) && rep.forbidden;
        Check::new(name, ok, format!("{}; shape predicate {}", rep.congruence(), if rep.forbidden { "fires" } else { "silent" }))
    };
    r.push(expect(&registry::szs_sym(), &[("S^(4)", -1), ("S^(3)", 1)], "degree-4 relation with Z"));
    r.push(expect(
        &registry::deg5_printed(),
        &[("S^(5)", 1), ("S×S^(3)", 1), ("S×S^(4)", -1), ("S^(3)", -1)],
        "degree-5 relation",
    ));
    r
}

/// Every report, in dependency order.
pub fn all() -> Vec<Report> {
    vec![
        tables(),
        structure(),
        decompositions(),
        decomposition_oracles(),
        nonexistence(),
        uniqueness(),
        degree5(),
        motivic(),
        burnside(SingularType::A1),
        burnside(SingularType::A2),
        fourfold(),
        mod_l(),
    ]
}

/// Report for a named area, as accepted by the command line.
pub fn by_name(name: &str) -> Result<Report> {
    Ok(match name {
        "tables" => tables(),
        "structure" => structure(),
        "decompositions" => decompositions(),
        "oracles" => decomposition_oracles(),
        "nonexistence" => nonexistence(),
        "uniqueness" => uniqueness(),
        "degree5" => degree5(),
        "motivic" => motivic(),
        "a1" => burnside(SingularType::A1),
        "a2" => burnside(SingularType::A2),
        "fourfold" => fourfold(),
        "modl" => mod_l(),
        _ => return Err(Error::Unknown { what: "suite", name: name.into() }),
    })
}

pub const SUITE_NAMES: [&str; 12] = [
    "tables",
    "structure",
    "decompositions",
    "oracles",
    "nonexistence",
    "uniqueness",
    "degree5",
    "motivic",
    "a1",
    "a2",
    "fourfold",
    "modl",
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_numbers_of_hilbert_schemes() {
        assert_eq!(euler_oracle(&cls("S^[2]")), Some(BigInt::from(54)));
        assert_eq!(euler_oracle(&cls("S^[3]")), Some(BigInt::from(255)));
        assert_eq!(euler_oracle(&cls("S^(2)")), Some(BigInt::from(45)));
        assert_eq!(euler_oracle(&cls("S×S^(2)")), Some(BigInt::from(405)));
    }
}
