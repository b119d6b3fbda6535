#![allow(dead_code)]

use std::sync::OnceLock;

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use cubicrel::burnside::{match_classes, SingularCase, SingularType, VirtualGSet};
use cubicrel::charring::GradedCharacter;
use cubicrel::chartable::{a2, TableId};
use cubicrel::k3lambda::K3Poly;
use cubicrel::motives::{homogeneous_monomials, motives, ClassExpr};
use cubicrel::relfind::registry;

pub const CASES: u32 = 128;

pub fn config() -> ProptestConfig {
    ProptestConfig { cases: CASES, failure_persistence: None, ..ProptestConfig::default() }
}

/// Random graded character over the A2 table: (degree, irreducible, multiplicity).
pub fn graded_char(max_mult: i64) -> impl Strategy<Value = GradedCharacter> {
    prop::collection::vec((0i32..3, 1usize..10, -max_mult..=max_mult), 0..5)
        .prop_map(|t| GradedCharacter::from_irreps(TableId::A2Group, &t))
}

pub fn effective_char() -> impl Strategy<Value = GradedCharacter> {
    prop::collection::vec((0i32..3, 1usize..10, 0i64..3), 1..4).prop_map(|t| GradedCharacter::from_irreps(TableId::A2Group, &t))
}

/// Random K3Poly on which symmetric powers are determined: integer
/// combinations of L^m and L^m k1.
pub fn k3_poly() -> impl Strategy<Value = K3Poly> {
    prop::collection::vec((-2i64..=3, 0u32..3, any::<bool>()), 1..4).prop_map(|t| {
        t.into_iter().fold(K3Poly::zero(), |acc, (c, m, with_k)| {
            let mono = if with_k { [1, 0, 0, 0] } else { [0; 4] };
            acc.add(&K3Poly::monomial(c, mono, m))
        })
    })
}

fn ensure(ok: bool, what: &str) -> Result<(), TestCaseError> {
    if ok {
        Ok(())
    } else {
        Err(TestCaseError::fail(what.to_string()))
    }
}

fn err<E: std::fmt::Display>(e: E) -> TestCaseError {
    TestCaseError::fail(e.to_string())
}

/// Sym^n(x + y) = sum_i Sym^i x Sym^(n-i) y for n <= 3.
pub fn char_lambda_sum(x: &GradedCharacter, y: &GradedCharacter) -> Result<(), TestCaseError> {
    let sx = x.sym_series(3).map_err(err)?;
    let sy = y.sym_series(3).map_err(err)?;
    let sxy = x.add(y).map_err(err)?.sym_series(3).map_err(err)?;
    for n in 0..=3 {
        let mut acc = GradedCharacter::zero(TableId::A2Group);
        for i in 0..=n {
            acc = acc.add(&sx[i].mul(&sy[n - i]).map_err(err)?).map_err(err)?;
        }
        ensure(acc.sub(&sxy[n]).map_err(err)?.is_zero(), "lambda-sum axiom in the character ring")?;
    }
    Ok(())
}

/// Sym^n(L^m x) = L^(nm) Sym^n x.
pub fn char_twist(x: &GradedCharacter, m: i32) -> Result<(), TestCaseError> {
    let a = x.shift(m).sym_series(3).map_err(err)?;
    let b = x.sym_series(3).map_err(err)?;
    for n in 0..=3 {
        ensure(a[n] == b[n].shift(n as i32 * m), "Sym of a Lefschetz twist in the character ring")?;
    }
    Ok(())
}

pub fn k3_lambda_sum(x: &K3Poly, y: &K3Poly) -> Result<(), TestCaseError> {
    let sx = x.sym_series(3).map_err(err)?;
    let sy = y.sym_series(3).map_err(err)?;
    let sxy = x.add(y).sym_series(3).map_err(err)?;
    for n in 0..=3 {
        let acc = (0..=n).fold(K3Poly::zero(), |acc, i| acc.add(&sx[i].mul(&sy[n - i])));
        ensure(acc == sxy[n], "lambda-sum axiom in the free pre-lambda ring")?;
    }
    Ok(())
}

pub fn k3_twist(x: &K3Poly, m: u32) -> Result<(), TestCaseError> {
    let a = x.shift(m).sym_series(3).map_err(err)?;
    let b = x.sym_series(3).map_err(err)?;
    for n in 0..=3 {
        ensure(a[n] == b[n].shift(n as u32 * m), "Sym of a Lefschetz twist in the free pre-lambda ring")?;
    }
    Ok(())
}

/// decompose inverts from_irreps, and reconstruct inverts decompose.
pub fn decompose_round_trip(terms: &[(i32, usize, i64)]) -> Result<(), TestCaseError> {
    let x = GradedCharacter::from_irreps(TableId::A2Group, terms);
    let d = x.decompose().map_err(err)?;
    ensure(d.reconstruct().sub(&x).map_err(err)?.is_zero(), "reconstruct after decompose")?;
    for (deg, row) in &d.terms {
        for (i, m) in row {
            let want: i64 = terms.iter().filter(|t| t.0 == *deg && t.1 == *i).map(|t| t.2).sum();
            ensure(*m == BigInt::from(want), "multiplicity recovered")?;
        }
    }
    Ok(())
}

pub struct BurnFixture {
    pub case: SingularCase,
    pub matching: Vec<usize>,
    pub basis: Vec<VirtualGSet>,
}

pub fn burn_fixture() -> &'static BurnFixture {
    static F: OnceLock<BurnFixture> = OnceLock::new();
    F.get_or_init(|| {
        let case = SingularCase::build(SingularType::A2).expect("A2 case");
        let matching = match_classes(&case.group, a2()).expect("classes match");
        let basis = case.named.iter().map(|(_, x)| x.to_virtual()).collect();
        BurnFixture { case, matching, basis }
    })
}

pub fn burn_element() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-2i64..=2, 6)
}

pub fn combine(f: &BurnFixture, c: &[i64]) -> VirtualGSet {
    f.basis
        .iter()
        .zip(c)
        .fold(VirtualGSet::zero(&f.case.group), |acc, (b, &k)| acc.add(&b.scale(k)))
}

/// The mark character is a ring homomorphism out of the Burnside ring.
pub fn burn_char_hom(a: &[i64], b: &[i64]) -> Result<(), TestCaseError> {
    let f = burn_fixture();
    let (x, y) = (combine(f, a), combine(f, b));
    let ch = |v: &VirtualGSet| v.burn_char(a2(), &f.matching);
    ensure(ch(&x.add(&y)) == ch(&x).add(&ch(&y)).map_err(err)?, "additivity")?;
    ensure(ch(&x.mul(&y)) == ch(&x).mul(&ch(&y)).map_err(err)?, "multiplicativity")?;
    Ok(())
}

/// Two independent computations serialize to identical bytes.
pub fn deterministic_json(index: usize) -> Result<(), TestCaseError> {
    let classes = homogeneous_monomials(4);
    let c: &ClassExpr = &classes[index % classes.len()];
    let m = motives().map_err(err)?;
    let once = serde_json::to_string(&m.value(c).map_err(err)?.decompose().map_err(err)?.to_json()).map_err(err)?;
    let twice = serde_json::to_string(&m.value(c).map_err(err)?.decompose().map_err(err)?.to_json()).map_err(err)?;
    ensure(once == twice, "decomposition JSON")?;
    let (id, _) = registry::RELATION_IDS[index % 7];
    let rel = |id: &str| registry::lookup(id).map(|r| serde_json::to_string(&r.to_json()));
    ensure(rel(id).is_some() && rel(id).map(|r| r.ok()) == rel(id).map(|r| r.ok()), "relation JSON")
}
