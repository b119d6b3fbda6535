//! Linear relations with coefficients in Q[L] among graded characters:
//! search, canonical form, verification, blocking certificates and the
//! reduction modulo L.

pub mod bareiss;
pub mod registry;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::charring::GradedCharacter;
use crate::error::{Error, Result};
use crate::lpoly::LPoly;
use crate::motives::{ClassExpr, Factor, Motives};
use bareiss::IntMatrix;

/// sum_j p_j(L) [X_j] = 0, with the unit class carrying the constant term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub terms: BTreeMap<ClassExpr, LPoly>,
}

impl Relation {
    pub fn new(terms: impl IntoIterator<Item = (ClassExpr, LPoly)>) -> Self {
        let mut out = Relation { terms: BTreeMap::new() };
        for (c, p) in terms {
            out.add_term(c, p);
        }
        out
    }

    pub fn add_term(&mut self, c: ClassExpr, p: LPoly) {
        let next = match self.terms.remove(&c) {
            Some(q) => q.add(&p),
            None => p,
        };
        if !next.is_zero() {
            self.terms.insert(c, next);
        }
    }

    pub fn coefficient(&self, c: &ClassExpr) -> LPoly {
        self.terms.get(c).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn neg(&self) -> Self {
        Relation {
            terms: self.terms.iter().map(|(c, p)| (c.clone(), p.neg())).collect(),
        }
    }

    pub fn mul_poly(&self, p: &LPoly) -> Self {
        Relation::new(self.terms.iter().map(|(c, q)| (c.clone(), q.mul(p))))
    }

    /// Multiply every class by `m` (e.g. to multiply a relation by [S]).
    pub fn times_class(&self, m: &ClassExpr) -> Self {
        Relation::new(self.terms.iter().map(|(c, q)| (c.times(m), q.clone())))
    }

    pub fn max_coeff_degree(&self) -> usize {
        self.terms.values().filter_map(|p| p.degree()).max().unwrap_or(0)
    }

    pub fn to_json(&self) -> Value {
        let width = self.max_coeff_degree() + 1;
        let mut m = serde_json::Map::new();
        for (c, p) in &self.terms {
            m.insert(c.to_string(), json!(p.coeff_strings(width)));
        }
        Value::Object(m)
    }
}

impl fmt::Display for Relation {
    /// `(L^4) Z + (-1) S^(4) + ... = 0`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0 = 0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(c, p)| {
                if c.factors().is_empty() {
                    format!("({p})")
                } else {
                    format!("({p}) {c}")
                }
            })
            .collect();
        write!(f, "{} = 0", parts.join(" + "))
    }
}

/// Bounds on the dimension of the relation space over Q(L). Equal bounds
/// certify the exact value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NullityBounds {
    pub lower: usize,
    pub upper: usize,
}

impl NullityBounds {
    pub fn exact(&self) -> Option<usize> {
        (self.lower == self.upper).then_some(self.lower)
    }
}

impl fmt::Display for NullityBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exact() {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "{}..{}", self.lower, self.upper),
        }
    }
}

#[derive(Debug, Clone)]
pub struct RelationSpace {
    pub labels: Vec<ClassExpr>,
    pub max_coeff_degree: usize,
    /// Basis over Q of relations with coefficients of degree <= max_coeff_degree.
    pub basis: Vec<Relation>,
    /// Dimension over the field of rational functions in L.
    pub nullity: NullityBounds,
    /// Rank of the class vectors after L -> 1.
    pub rank_at_one: usize,
}

impl RelationSpace {
    pub fn raw_nullity(&self) -> usize {
        self.basis.len()
    }

    /// The unique minimal relation, when the space has dimension 1 over Q(L).
    pub fn minimal(&self, distinguished: Option<&ClassExpr>) -> Option<Relation> {
        if self.nullity.exact() != Some(1) {
            return None;
        }
        self.basis.first().map(|r| minimize(r, distinguished))
    }

    pub fn to_json(&self, distinguished: Option<&ClassExpr>) -> Value {
        json!({
            "classes": self.labels.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "max_coeff_degree": self.max_coeff_degree,
            "raw_nullity": self.raw_nullity(),
            "nullity": self.nullity.exact(),
            "nullity_bounds": [self.nullity.lower, self.nullity.upper],
            "rank_at_L_equals_1": self.rank_at_one,
            "relations": self.basis.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
            "minimal": self.minimal(distinguished).map(|r| r.to_json()),
        })
    }
}

/// Integer multiplicity table of a class: degree -> irreducible -> value.
pub fn multiplicity_table(x: &GradedCharacter) -> Result<BTreeMap<i32, Vec<BigInt>>> {
    let n = crate::chartable::table(x.table).n;
    let mut out = BTreeMap::new();
    for (d, row) in x.rational_decomposition() {
        let mut v = vec![BigInt::zero(); n];
        for (i, m) in row {
            if !m.is_integer() {
                return Err(Error::NonIntegralDecomposition(format!("chi{i} in degree {d}: {m}")));
            }
            v[i - 1] = m.to_integer();
        }
        out.insert(d, v);
    }
    Ok(out)
}

/// Values of classes as polynomials in L per coordinate, evaluated at `t`.
fn evaluated_matrix(tables: &[BTreeMap<i32, Vec<BigInt>>], width: usize, t: i64) -> IntMatrix {
    let mut m = IntMatrix::zeros(width, tables.len());
    for (j, tab) in tables.iter().enumerate() {
        for (d, row) in tab {
            let w = BigInt::from(t).pow(*d as u32);
            for i in 0..width {
                if !row[i].is_zero() {
                    m.data[i][j] += &row[i] * &w;
                }
            }
        }
    }
    m
}

const SAMPLE_POINTS: [i64; 7] = [1, 2, 3, 5, 7, 11, 13];

/// Relations found among coordinate tables, before they are attached to
/// class labels. `basis[r][j]` is the coefficient polynomial of class j.
#[derive(Debug, Clone)]
pub struct RawRelations {
    pub basis: Vec<Vec<LPoly>>,
    pub nullity: NullityBounds,
    pub rank_at_one: usize,
}

/// Nullspace of the map (p_j) -> sum_j p_j(L) x_j with deg p_j <= d, where
/// each x_j is given as L-degree -> integer coordinate vector of length
/// `width`. The dimension over Q(L) is bracketed by ranks at sample points.
pub fn search_tables(tables: &[BTreeMap<i32, Vec<BigInt>>], width: usize, d: usize) -> RawRelations {
    let min_deg = tables.iter().filter_map(|t| t.keys().next().copied()).min().unwrap_or(0);
    let max_deg = tables.iter().filter_map(|t| t.keys().next_back().copied()).max().unwrap_or(0);
    let n_deg = (max_deg - min_deg) as usize + d + 1;
    let ncols = tables.len() * (d + 1);
    let mut m = IntMatrix::zeros(width * n_deg, ncols);
    for (j, tab) in tables.iter().enumerate() {
        for k in 0..=d {
            let col = j * (d + 1) + k;
            for (deg, row) in tab {
                let base = ((deg - min_deg) as usize + k) * width;
                for i in 0..width {
                    m.data[base + i][col] = row[i].clone();
                }
            }
        }
    }
    // drop all-zero rows; they carry no constraint
    m.data.retain(|r| r.iter().any(|v| !v.is_zero()));
    m.rows = m.data.len();
    let raw = m.nullspace();
    let n = tables.len();
    let mut best_rank = 0;
    let mut rank_at_one = 0;
    for &t in &SAMPLE_POINTS {
        let r = evaluated_matrix(tables, width, t).rank();
        if t == 1 {
            rank_at_one = r;
        }
        best_rank = best_rank.max(r);
    }
    let mut lower = 0;
    if !raw.is_empty() {
        for &t in &SAMPLE_POINTS {
            let rows: Vec<Vec<BigInt>> = raw
                .iter()
                .map(|v| {
                    (0..n)
                        .map(|j| {
                            let mut s = BigInt::zero();
                            let mut w = BigInt::one();
                            for k in 0..=d {
                                s += &v[j * (d + 1) + k] * &w;
                                w *= t;
                            }
                            s
                        })
                        .collect()
                })
                .collect();
            lower = lower.max(IntMatrix::from_rows(rows).rank());
        }
    }
    RawRelations {
        basis: raw
            .iter()
            .map(|v| (0..n).map(|j| LPoly::from_bigints(&v[j * (d + 1)..(j + 1) * (d + 1)])).collect())
            .collect(),
        nullity: NullityBounds { lower, upper: n - best_rank },
        rank_at_one,
    }
}

/// Exact relation search with coefficient degree at most `d`.
pub fn find_relations(motives: &Motives, classes: &[ClassExpr], d: usize) -> Result<RelationSpace> {
    let values: Vec<GradedCharacter> = classes.iter().map(|c| motives.value(c)).collect::<Result<_>>()?;
    find_relations_among(classes, &values, d)
}

/// As `find_relations`, for explicitly given values.
pub fn find_relations_among(
    labels: &[ClassExpr],
    values: &[GradedCharacter],
    d: usize,
) -> Result<RelationSpace> {
    let tables: Vec<BTreeMap<i32, Vec<BigInt>>> = values.iter().map(multiplicity_table).collect::<Result<_>>()?;
    let n_irr = values.first().map_or(0, |v| crate::chartable::table(v.table).n);
    let raw = search_tables(&tables, n_irr, d);
    Ok(RelationSpace {
        labels: labels.to_vec(),
        max_coeff_degree: d,
        basis: raw
            .basis
            .into_iter()
            .map(|v| Relation::new(labels.iter().cloned().zip(v)))
            .collect(),
        nullity: raw.nullity,
        rank_at_one: raw.rank_at_one,
    })
}

/// Divide out the common polynomial factor and integer content, and make
/// the leading coefficient at index `key` positive.
pub fn minimize_coefficients(coeffs: &[LPoly], key: usize) -> Vec<LPoly> {
    let g = coeffs.iter().fold(LPoly::zero(), |a, p| a.gcd(p));
    if g.is_zero() {
        return coeffs.to_vec();
    }
    let mut out: Vec<LPoly> = coeffs.iter().map(|p| p.div_rem(&g).0).collect();
    let den = out.iter().fold(BigInt::one(), |a, p| num_integer::Integer::lcm(&a, &p.denominator_lcm()));
    let den = BigRational::from_integer(den);
    for p in out.iter_mut() {
        *p = p.scale(&den);
    }
    let content = out.iter().fold(BigInt::zero(), |a, p| num_integer::Integer::gcd(&a, &p.numerator_gcd()));
    let mut s = BigRational::new(BigInt::one(), content);
    if out[key].leading().is_negative() {
        s = -s;
    }
    out.iter().map(|p| p.scale(&s)).collect()
}

/// Canonical primitive form: integer coefficients, no common polynomial
/// factor, no integer content, and a positive leading coefficient on the
/// distinguished class (or on the first class when none is given).
pub fn minimize(rel: &Relation, distinguished: Option<&ClassExpr>) -> Relation {
    if rel.is_zero() {
        return rel.clone();
    }
    let (classes, coeffs): (Vec<ClassExpr>, Vec<LPoly>) = rel.terms.iter().map(|(c, p)| (c.clone(), p.clone())).unzip();
    let key = distinguished.and_then(|d| classes.iter().position(|c| c == d)).unwrap_or(0);
    Relation::new(classes.into_iter().zip(minimize_coefficients(&coeffs, key)))
}

/// Evaluate sum_j p_j(L) [X_j]; zero iff the relation holds.
pub fn verify_relation(motives: &Motives, rel: &Relation) -> Result<GradedCharacter> {
    let mut acc = GradedCharacter::zero(crate::chartable::TableId::E6);
    for (c, p) in &rel.terms {
        let x = motives.value(c)?;
        for (k, a) in p.coeffs().iter().enumerate() {
            if !a.is_zero() {
                acc = acc.add(&x.shift(k as i32).scale(a))?;
            }
        }
    }
    Ok(acc.with_effective(false))
}

/// Irreducibles occurring in a class in any degree.
pub fn support(x: &GradedCharacter) -> BTreeSet<usize> {
    x.rational_decomposition().values().flat_map(|r| r.keys().copied()).collect()
}

#[derive(Debug, Clone)]
pub struct Certificate {
    /// For each added class, the irreducibles absent from the base classes
    /// and from every earlier added class.
    pub blocking: Vec<(ClassExpr, Vec<usize>)>,
    /// Irreducibles of each added class found in no other candidate at all.
    pub exclusive: Vec<(ClassExpr, Vec<usize>)>,
}

impl Certificate {
    pub fn to_json(&self) -> Value {
        let f = |v: &[(ClassExpr, Vec<usize>)]| {
            v.iter()
                .map(|(c, s)| (c.to_string(), json!(s.iter().map(|i| format!("chi{i}")).collect::<Vec<_>>())))
                .collect::<serde_json::Map<_, _>>()
        };
        json!({"blocking": f(&self.blocking), "exclusive": f(&self.exclusive)})
    }
}

/// Triangular blocking argument: if every added class contains an
/// irreducible that neither the base classes nor earlier additions contain,
/// then in any relation the coefficient of the last added class with a
/// nonzero coefficient must vanish, so every relation lives on the base.
pub fn nonexistence_certificate(motives: &Motives, base: &[ClassExpr], added: &[ClassExpr]) -> Result<Certificate> {
    let sup = |c: &ClassExpr| -> Result<BTreeSet<usize>> { Ok(support(&motives.value(c)?)) };
    let mut seen: BTreeSet<usize> = BTreeSet::new();
    for c in base {
        seen.extend(sup(c)?);
    }
    let supports: Vec<BTreeSet<usize>> = added.iter().map(sup).collect::<Result<_>>()?;
    let mut blocking = Vec::new();
    for (c, s) in added.iter().zip(&supports) {
        let new: Vec<usize> = s.difference(&seen).copied().collect();
        if new.is_empty() {
            return Err(Error::CertificateUnavailable(c.to_string()));
        }
        blocking.push((c.clone(), new));
        seen.extend(s.iter().copied());
    }
    let mut exclusive = Vec::new();
    for (k, c) in added.iter().enumerate() {
        let mut others: BTreeSet<usize> = BTreeSet::new();
        for b in base {
            others.extend(sup(b)?);
        }
        for (j, s) in supports.iter().enumerate() {
            if j != k {
                others.extend(s.iter().copied());
            }
        }
        exclusive.push((c.clone(), supports[k].difference(&others).copied().collect()));
    }
    Ok(Certificate { blocking, exclusive })
}

/// Lowest L-degree at which irreducible `i` occurs in any of the classes.
pub fn min_valuation(motives: &Motives, classes: &[ClassExpr], i: usize) -> Result<Option<i32>> {
    let mut best: Option<i32> = None;
    for c in classes {
        for (d, row) in motives.value(c)?.rational_decomposition() {
            if row.get(&i).is_some_and(|m| !m.is_zero()) {
                best = Some(best.map_or(d, |b: i32| b.min(d)));
            }
        }
    }
    Ok(best)
}

/// A relation reduced modulo L, with the test for the shape
/// [S^(3m)] = sum of products each containing a factor prime to 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModLReport {
    /// Surviving classes (S^[n] replaced by S^(n)) with integer coefficients.
    pub reduction: BTreeMap<ClassExpr, BigInt>,
    /// The isolated class all of whose symmetric powers are divisible by 3.
    pub isolated: Option<ClassExpr>,
    pub forbidden: bool,
}

impl ModLReport {
    /// `lhs ≡ rhs`, normalized so the isolated class (if any) sits on the
    /// right with coefficient +1.
    pub fn congruence(&self) -> String {
        let flip = match &self.isolated {
            Some(x) => self.reduction[x].is_positive(),
            None => false,
        };
        let (mut lhs, mut rhs) = (Vec::new(), Vec::new());
        for (c, m) in &self.reduction {
            let m = if flip { -m } else { m.clone() };
            let side = if m.is_positive() { &mut lhs } else { &mut rhs };
            let a = m.abs();
            side.push(if a.is_one() { c.to_string() } else { format!("{a}{c}") });
        }
        let join = |v: Vec<String>| if v.is_empty() { "0".to_string() } else { v.join(" + ") };
        format!("{} ≡ {} (mod L)", join(lhs), join(rhs))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "reduction": self.reduction.iter().map(|(c, m)| (c.to_string(), json!(m.to_string()))).collect::<serde_json::Map<_, _>>(),
            "congruence": self.congruence(),
            "isolated": self.isolated.as_ref().map(|c| c.to_string()),
            "forbidden": self.forbidden,
        })
    }
}

pub fn modl_obstruction(rel: &Relation) -> ModLReport {
    let mut red: BTreeMap<ClassExpr, BigRational> = BTreeMap::new();
    for (c, p) in &rel.terms {
        let c0 = p.coeff(0);
        if !c0.is_zero() {
            // S^[n] and S^(n) agree modulo L
            *red.entry(c.hilb_to_sym()).or_insert_with(BigRational::zero) += c0;
        }
    }
    red.retain(|_, v| !v.is_zero());
    let den = red.values().fold(BigInt::one(), |a, v| num_integer::Integer::lcm(&a, v.denom()));
    let reduction: BTreeMap<ClassExpr, BigInt> = red
        .into_iter()
        .map(|(c, v)| (c, (v * BigRational::from_integer(den.clone())).to_integer()))
        .collect();
    let sym_parts = |c: &ClassExpr| -> Option<Vec<u32>> {
        c.factors()
            .iter()
            .map(|f| match f {
                Factor::Sym(n) => Some(*n),
                _ => None,
            })
            .collect()
    };
    let divisible: Vec<&ClassExpr> = reduction
        .keys()
        .filter(|c| sym_parts(c).is_some_and(|p| !p.is_empty() && p.iter().all(|n| n % 3 == 0)))
        .collect();
    let isolated = (divisible.len() == 1).then(|| divisible[0].clone());
    let forbidden = match &isolated {
        Some(x) => {
            reduction[x].abs().is_one()
                && reduction.len() > 1
                && reduction.keys().filter(|c| *c != x).all(|c| {
                    sym_parts(c).is_some_and(|p| !p.is_empty() && p.iter().any(|n| n % 3 != 0))
                })
        }
        None => false,
    };
    ModLReport {
        reduction,
        isolated,
        forbidden,
    }
}

/// Integer coefficient lists of a relation, for reports.
pub fn coefficient_table(rel: &Relation) -> BTreeMap<String, Vec<i64>> {
    rel.terms
        .iter()
        .map(|(c, p)| {
            let v = p.coeffs().iter().map(|x| x.to_integer().to_i64().unwrap_or(i64::MAX)).collect();
            (c.to_string(), v)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cls(s: &str) -> ClassExpr {
        ClassExpr::parse(s).unwrap()
    }

    #[test]
    fn minimize_removes_polynomial_factors_and_content() {
        let r = Relation::new([
            (cls("Z"), LPoly::from_ints(&[0, 0, 0, 0, 1])),
            (cls("S"), LPoly::from_ints(&[1, -1, 1])),
        ]);
        let scaled = r
            .mul_poly(&LPoly::from_ints(&[0, 1]))
            .mul_poly(&LPoly::from_rationals(vec![BigRational::new((-7).into(), 3.into())]));
        assert_eq!(minimize(&scaled, Some(&cls("Z"))), r);
        let with_factor = r.mul_poly(&LPoly::from_ints(&[1, 1]));
        assert_eq!(minimize(&with_factor, Some(&cls("Z"))), r);
    }

    #[test]
    fn modl_shape_predicate() {
        let r = Relation::new([
            (cls("S^(3)"), LPoly::from_ints(&[1, -1, 1])),
            (cls("S^(4)"), LPoly::from_ints(&[-1])),
            (cls("Z"), LPoly::monomial(1, 4)),
            (cls("1"), LPoly::from_ints(&[0, 0, 1])),
        ]);
        let rep = modl_obstruction(&r);
        assert!(rep.forbidden);
        assert_eq!(rep.congruence(), "S^(4) ≡ S^(3) (mod L)");
        let yfy = Relation::new([
            (cls("S^(2)"), LPoly::one()),
            (cls("S"), LPoly::from_ints(&[-1, 0, -1])),
            (cls("F"), LPoly::monomial(-1, 2)),
        ]);
        let rep = modl_obstruction(&yfy);
        assert!(!rep.forbidden);
        assert_eq!(rep.isolated, None);
        // a point is not prime to 3 in the relevant sense
        let pt = Relation::new([(cls("S^(3)"), LPoly::one()), (cls("1"), LPoly::from_ints(&[-1]))]);
        assert!(!modl_obstruction(&pt).forbidden);
    }
}
