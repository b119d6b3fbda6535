//! A free pre-λ polynomial ring over k_n = [K3^(n)] (n <= 4) and L, with
//! the classes of a cubic fourfold Y under [Y] = L k1 + 1 + L^2 + L^4.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::charring::GradedCharacter;
use crate::error::{Error, Result};
use crate::lpoly::LPoly;
use crate::relfind::{minimize_coefficients, search_tables, NullityBounds};

pub const MAX_SYM: usize = 4;

/// Exponents of k1..k4.
pub type KMono = [u8; MAX_SYM];

fn q(c: i64) -> BigRational {
    BigRational::from_integer(c.into())
}

/// Rational polynomial in k1..k4 and L.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct K3Poly {
    terms: BTreeMap<(KMono, u32), BigRational>,
}

impl K3Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::l_power(0)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, [0; MAX_SYM], 0)
    }

    pub fn l_power(m: u32) -> Self {
        Self::monomial(1, [0; MAX_SYM], m)
    }

    /// The generator k_n, with k_0 = 1.
    pub fn k(n: usize) -> Result<Self> {
        if n > MAX_SYM {
            return Err(Error::UnsupportedDegree(n));
        }
        let mut m = [0; MAX_SYM];
        if n > 0 {
            m[n - 1] = 1;
        }
        Ok(Self::monomial(1, m, 0))
    }

    pub fn monomial(c: i64, k: KMono, l: u32) -> Self {
        let mut out = Self::zero();
        if c != 0 {
            out.terms.insert((k, l), q(c));
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<(KMono, u32), BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut t = self.terms.clone();
        for (k, v) in &o.terms {
            let e = t.entry(*k).or_insert_with(BigRational::zero);
            *e += v;
            if e.is_zero() {
                t.remove(k);
            }
        }
        K3Poly { terms: t }
    }

    pub fn neg(&self) -> Self {
        K3Poly {
            terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        K3Poly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * s)).collect(),
        }
    }

    /// Multiply by L^d.
    pub fn shift(&self, d: u32) -> Self {
        K3Poly {
            terms: self.terms.iter().map(|(&(k, l), v)| ((k, l + d), v.clone())).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut t: BTreeMap<(KMono, u32), BigRational> = BTreeMap::new();
        for (&(k1, l1), a) in &self.terms {
            for (&(k2, l2), b) in &o.terms {
                let mut k = [0; MAX_SYM];
                for i in 0..MAX_SYM {
                    k[i] = k1[i] + k2[i];
                }
                *t.entry((k, l1 + l2)).or_insert_with(BigRational::zero) += a * b;
            }
        }
        t.retain(|_, v| !v.is_zero());
        K3Poly { terms: t }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Multiply by a polynomial in L.
    pub fn mul_lpoly(&self, p: &LPoly) -> Self {
        let mut out = Self::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            out = out.add(&self.shift(i as u32).scale(c));
        }
        out
    }

    /// Coefficient of a k-monomial, as a polynomial in L.
    pub fn coefficient(&self, k: &KMono) -> LPoly {
        let top = self.terms.keys().filter(|(m, _)| m == k).map(|(_, l)| *l).max();
        let Some(top) = top else {
            return LPoly::zero();
        };
        LPoly::from_rationals(
            (0..=top)
                .map(|l| self.terms.get(&(*k, l)).cloned().unwrap_or_else(BigRational::zero))
                .collect(),
        )
    }

    /// k-monomials in the support, in ascending order.
    pub fn monomials(&self) -> Vec<KMono> {
        let mut v: Vec<KMono> = self.terms.keys().map(|(k, _)| *k).collect();
        v.dedup();
        v
    }

    /// Set L = 1.
    pub fn at_l_one(&self) -> K3Poly {
        let mut out = Self::zero();
        for (&(k, _), v) in &self.terms {
            out = out.add(&K3Poly { terms: BTreeMap::from([((k, 0), v.clone())]) });
        }
        out
    }

    /// Sym^0 .. Sym^n. Each summand must be c L^m or c L^m k1 with c an
    /// integer; Sym^j(L^m k1) = L^{jm} k_j and negative multiples use the
    /// inverse series.
    pub fn sym_series(&self, n: usize) -> Result<Vec<K3Poly>> {
        if n > MAX_SYM {
            return Err(Error::UnsupportedDegree(n));
        }
        let mut acc = vec![Self::zero(); n + 1];
        acc[0] = Self::one();
        for (&(k, m), c) in &self.terms {
            if !c.is_integer() {
                return Err(Error::UndeterminedSym(format!("non-integral coefficient {c}")));
            }
            let base: Vec<K3Poly> = if k == [0; MAX_SYM] {
                (0..=n).map(|j| Self::l_power(m * j as u32)).collect()
            } else if k == [1, 0, 0, 0] {
                (0..=n).map(|j| Ok(Self::k(j)?.shift(m * j as u32))).collect::<Result<_>>()?
            } else {
                return Err(Error::UndeterminedSym(Self { terms: BTreeMap::from([((k, m), q(1))]) }.to_string()));
            };
            let c = c.to_integer();
            let factor = if c.is_negative() { series_inverse(&base) } else { base };
            let times = c.abs().to_u64().unwrap_or(0);
            for _ in 0..times {
                acc = series_mul(&acc, &factor);
            }
        }
        Ok(acc)
    }

    pub fn sym_power(&self, n: usize) -> Result<K3Poly> {
        Ok(self.sym_series(n)?.pop().expect("nonempty"))
    }

    /// Parse expressions such as "L^2 k2 + (L^5 + L^3 + L) k1 + 2L^4 + 1".
    /// Juxtaposition multiplies; `k1^2` is the square of k1, distinct from k2.
    pub fn parse(s: &str) -> Result<K3Poly> {
        let toks: Vec<char> = s.chars().filter(|c| !c.is_whitespace() && *c != '*' && *c != '·').collect();
        let mut p = Parser { toks: &toks, pos: 0, src: s };
        let out = p.expr()?;
        if p.pos != toks.len() {
            return Err(p.fail());
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        let mut m = serde_json::Map::new();
        for k in self.monomials() {
            let c = self.coefficient(&k);
            let width = c.degree().unwrap_or(0) + 1;
            m.insert(mono_name(&k), json!(c.coeff_strings(width)));
        }
        Value::Object(m)
    }
}

struct Parser<'a> {
    toks: &'a [char],
    pos: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn fail(&self) -> Error {
        Error::Parse { what: "K3 polynomial", input: self.src.to_string() }
    }

    fn peek(&self) -> Option<char> {
        self.toks.get(self.pos).copied()
    }

    fn number(&mut self) -> Option<u32> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.toks[start..self.pos].iter().collect::<String>().parse().ok()).flatten()
    }

    fn exponent(&mut self) -> Result<u32> {
        if self.peek() == Some('^') {
            self.pos += 1;
            self.number().ok_or_else(|| self.fail())
        } else {
            Ok(1)
        }
    }

    fn expr(&mut self) -> Result<K3Poly> {
        let mut sign = 1;
        if self.peek() == Some('-') {
            sign = -1;
            self.pos += 1;
        }
        let mut acc = self.term()?.scale(&q(sign));
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                '-' => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<K3Poly> {
        let mut acc = K3Poly::one();
        let mut any = false;
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let n = self.number().ok_or_else(|| self.fail())?;
                    acc = acc.scale(&q(n as i64));
                }
                Some('(') => {
                    self.pos += 1;
                    let inner = self.expr()?;
                    if self.peek() != Some(')') {
                        return Err(self.fail());
                    }
                    self.pos += 1;
                    let e = self.exponent()?;
                    acc = acc.mul(&inner.pow(e));
                }
                Some('L') => {
                    self.pos += 1;
                    let e = self.exponent()?;
                    acc = acc.shift(e);
                }
                Some('k') => {
                    self.pos += 1;
                    let n = self.number().ok_or_else(|| self.fail())? as usize;
                    if n == 0 {
                        return Err(self.fail());
                    }
                    let g = K3Poly::k(n)?;
                    let e = self.exponent()?;
                    acc = acc.mul(&g.pow(e));
                }
                _ => break,
            }
            any = true;
        }
        if any {
            Ok(acc)
        } else {
            Err(self.fail())
        }
    }
}

fn series_mul(a: &[K3Poly], b: &[K3Poly]) -> Vec<K3Poly> {
    (0..a.len().min(b.len()))
        .map(|k| (0..=k).fold(K3Poly::zero(), |s, i| s.add(&a[i].mul(&b[k - i]))))
        .collect()
}

fn series_inverse(a: &[K3Poly]) -> Vec<K3Poly> {
    let mut inv = vec![K3Poly::one()];
    for k in 1..a.len() {
        let s = (1..=k).fold(K3Poly::zero(), |s, j| s.add(&a[j].mul(&inv[k - j])));
        inv.push(s.neg());
    }
    inv
}

fn mono_name(k: &KMono) -> String {
    let mut parts = Vec::new();
    for (i, &e) in k.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("k{}", i + 1)),
            _ => parts.push(format!("k{}^{e}", i + 1)),
        }
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

/// Total weight sum_i i e_i, then higher generators first.
fn display_key(k: &KMono) -> (u32, [u8; MAX_SYM]) {
    let w = k.iter().enumerate().map(|(i, &e)| (i as u32 + 1) * e as u32).sum();
    let mut rev = *k;
    rev.reverse();
    (w, rev)
}

fn lpoly_text(p: &LPoly) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let body = match i {
            0 => mag.to_string(),
            _ => {
                let l = if i == 1 { "L".to_string() } else { format!("L^{i}") };
                if mag.is_one() {
                    l
                } else {
                    format!("{mag}{l}")
                }
            }
        };
        let sign = if c.is_negative() { "-" } else { "+" };
        parts.push(format!("{sign} {body}"));
    }
    let s = parts.join(" ");
    s.strip_prefix("+ ").map(str::to_string).unwrap_or_else(|| s.replacen("- ", "-", 1))
}

impl fmt::Display for K3Poly {
    /// Grouped by k-monomial, highest first, e.g. "L^2 k2 + (L^5 + L) k1 + 1".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut monos = self.monomials();
        monos.sort_by_key(|k| std::cmp::Reverse(display_key(k)));
        let mut parts = Vec::new();
        for k in monos.iter() {
            let c = self.coefficient(k);
            let text = lpoly_text(&c);
            let single = c.coeffs().iter().filter(|x| !x.is_zero()).count() == 1;
            parts.push(if *k == [0; MAX_SYM] {
                text
            } else if text == "1" {
                mono_name(k)
            } else if text == "-1" {
                format!("-{}", mono_name(k))
            } else if single {
                format!("{text} {}", mono_name(k))
            } else {
                format!("({text}) {}", mono_name(k))
            });
        }
        write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourfoldClass {
    pub name: &'static str,
    pub value: K3Poly,
}

/// [Y] = L k1 + 1 + L^2 + L^4.
pub fn fourfold_y() -> K3Poly {
    K3Poly::parse("L k1 + 1 + L^2 + L^4").expect("fixed expression")
}

/// [F(Y)] = k2 + L k1 and [Z(Y)] = k4 + L k1 k2 + L^2 k2 + L^2 k1^2 + L^3 k1,
/// the Hilbert schemes of two and four points on the K3 surface.
pub fn fourfold_classes() -> Vec<FourfoldClass> {
    let y = fourfold_y();
    let sym = y.sym_series(4).expect("Y is a sum of generators");
    vec![
        FourfoldClass { name: "Y", value: y.clone() },
        FourfoldClass { name: "Y^2", value: y.mul(&y) },
        FourfoldClass { name: "Y^(2)", value: sym[2].clone() },
        FourfoldClass { name: "Y^(3)", value: sym[3].clone() },
        FourfoldClass { name: "Y×Y^(2)", value: y.mul(&sym[2]) },
        FourfoldClass { name: "Y^(4)", value: sym[4].clone() },
        FourfoldClass { name: "F(Y)", value: K3Poly::parse("k2 + L k1").expect("fixed expression") },
        FourfoldClass {
            name: "Z(Y)",
            value: K3Poly::parse("k4 + L k1 k2 + L^2 k2 + L^2 k1^2 + L^3 k1").expect("fixed expression"),
        },
    ]
}

pub fn fourfold_class(name: &str) -> Result<K3Poly> {
    fourfold_classes()
        .into_iter()
        .find(|c| c.name == name)
        .map(|c| c.value)
        .ok_or_else(|| Error::Unknown { what: "fourfold class", name: name.into() })
}

/// Published expansions of products and symmetric powers of [Y].
pub const PRINTED_EXPANSIONS: [(&str, &str); 5] = [
    ("Y^(2)", "L^2 k2 + (L^5 + L^3 + L) k1 + L^8 + L^6 + 2L^4 + L^2 + 1"),
    ("Y^2", "L^2 k1^2 + (2L^5 + 2L^3 + 2L) k1 + (L^8 + 2L^6 + 3L^4 + 2L^2 + 1)"),
    ("Y^(3)", "L^3 k3 + (L^6 + L^4 + L^2) k2 + (L^9 + L^7 + 2L^5 + L^3 + L) k1 + (L^12 + L^10 + 2L^8 + 2L^6 + 2L^4 + L^2 + 1)"),
    (
        "Y×Y^(2)",
        "L^3 k1 k2 + (L^6 + L^4 + L^2) k2 + (L^6 + L^4 + L^2) k1^2 + (2L^9 + 3L^7 + 5L^5 + 3L^3 + 2L) k1 + (L^12 + 2L^10 + 4L^8 + 4L^6 + 4L^4 + 2L^2 + 1)",
    ),
    (
        "Y^(4)",
        "L^4 k4 + (L^7 + L^5 + L^3) k3 + (L^10 + L^8 + 2L^6 + L^4 + L^2) k2 + (L^13 + L^11 + 2L^9 + 2L^7 + 2L^5 + L^3 + L) k1 + (L^16 + L^14 + 2L^12 + 2L^10 + 3L^8 + 2L^6 + 2L^4 + L^2 + 1)",
    ),
];

/// Residual of [Y^(2)] - (1 + L^4)[Y] - L^2 [F(Y)].
pub fn yfy_residual() -> K3Poly {
    let y = fourfold_y();
    let f = fourfold_class("F(Y)").expect("registered");
    let y2 = y.sym_power(2).expect("Y is a sum of generators");
    y2.sub(&y.mul_lpoly(&LPoly::from_ints(&[1, 0, 0, 0, 1]))).sub(&f.shift(2))
}

/// Candidate classes for the relation with Z(Y).
pub const RELATION_CLASSES: [&str; 8] = ["1", "Y", "Y^2", "Y^(2)", "Y^(3)", "Y×Y^(2)", "Y^(4)", "Z(Y)"];

/// A relation sum_j p_j(L) [X_j] = 0 among fourfold classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourfoldRelation {
    pub labels: Vec<String>,
    pub coeffs: Vec<LPoly>,
}

impl FourfoldRelation {
    pub fn coefficient(&self, name: &str) -> LPoly {
        self.labels.iter().position(|l| l == name).map(|i| self.coeffs[i].clone()).unwrap_or_default()
    }

    pub fn to_json(&self) -> Value {
        let width = self.coeffs.iter().filter_map(|p| p.degree()).max().unwrap_or(0) + 1;
        let mut m = serde_json::Map::new();
        for (l, p) in self.labels.iter().zip(&self.coeffs) {
            if !p.is_zero() {
                m.insert(l.clone(), json!(p.coeff_strings(width)));
            }
        }
        Value::Object(m)
    }

    /// Terms whose coefficient has a nonzero constant term, i.e. the
    /// relation read modulo L.
    pub fn mod_l(&self) -> String {
        let (mut left, mut right) = (Vec::new(), Vec::new());
        for (l, p) in self.labels.iter().zip(&self.coeffs) {
            let c = p.coeff(0);
            if c.is_zero() {
                continue;
            }
            let a = c.abs();
            let term = if a.is_one() { format!("[{l}]") } else { format!("{a}[{l}]") };
            if c.is_positive() { left.push(term) } else { right.push(term) }
        }
        let side = |v: Vec<String>| if v.is_empty() { "0".to_string() } else { v.join(" + ") };
        format!("{} ≡ {} (mod L)", side(left), side(right))
    }
}

impl fmt::Display for FourfoldRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .labels
            .iter()
            .zip(&self.coeffs)
            .filter(|(_, p)| !p.is_zero())
            .map(|(l, p)| if l == "1" { format!("({})", lpoly_text(p)) } else { format!("({}) [{l}]", lpoly_text(p)) })
            .collect();
        write!(f, "{} = 0", parts.join(" + "))
    }
}

#[derive(Debug, Clone)]
pub struct FourfoldDerivation {
    pub max_coeff_degree: usize,
    pub raw_nullity: usize,
    pub nullity: NullityBounds,
    pub relation: FourfoldRelation,
    /// The relation evaluated in the free ring.
    pub free_residual: K3Poly,
}

/// Coordinates of a class: L-degree -> vector over the given k-monomials.
fn coordinate_table(x: &K3Poly, monos: &[KMono]) -> Result<BTreeMap<i32, Vec<BigInt>>> {
    let mut out: BTreeMap<i32, Vec<BigInt>> = BTreeMap::new();
    for (&(k, l), c) in x.terms() {
        if !c.is_integer() {
            return Err(Error::NonIntegralDecomposition(format!("{c} in {x}")));
        }
        let i = monos.iter().position(|m| *m == k).expect("monomial list covers the support");
        out.entry(l as i32).or_insert_with(|| vec![BigInt::zero(); monos.len()])[i] = c.to_integer();
    }
    Ok(out)
}

/// Largest coefficient degree searched before giving up.
pub const MAX_RELATION_DEGREE: usize = 16;

/// Search for relations among `names` with coefficient degree at most `d`.
pub fn relation_space(names: &[&str], d: usize) -> Result<(Vec<FourfoldRelation>, NullityBounds)> {
    let values: Vec<K3Poly> = names
        .iter()
        .map(|n| if *n == "1" { Ok(K3Poly::one()) } else { fourfold_class(n) })
        .collect::<Result<_>>()?;
    let mut monos: Vec<KMono> = values.iter().flat_map(|v| v.monomials()).collect();
    monos.sort_unstable();
    monos.dedup();
    let tables = values.iter().map(|v| coordinate_table(v, &monos)).collect::<Result<Vec<_>>>()?;
    let raw = search_tables(&tables, monos.len(), d);
    let labels: Vec<String> = names.iter().map(|s| s.to_string()).collect();
    Ok((
        raw.basis.into_iter().map(|coeffs| FourfoldRelation { labels: labels.clone(), coeffs }).collect(),
        raw.nullity,
    ))
}

pub fn evaluate_relation(rel: &FourfoldRelation) -> Result<K3Poly> {
    let mut acc = K3Poly::zero();
    for (l, p) in rel.labels.iter().zip(&rel.coeffs) {
        let v = if l == "1" { K3Poly::one() } else { fourfold_class(l)? };
        acc = acc.add(&v.mul_lpoly(p));
    }
    Ok(acc)
}

/// The unique relation among `RELATION_CLASSES`, found at the smallest
/// coefficient degree where one exists, normalized on [Z(Y)].
pub fn derive_fourfold_relation() -> Result<FourfoldDerivation> {
    for d in 0..=MAX_RELATION_DEGREE {
        let (basis, nullity) = relation_space(&RELATION_CLASSES, d)?;
        if basis.is_empty() {
            continue;
        }
        if nullity.exact() != Some(1) {
            return Err(Error::UnexpectedNullity { expected: 1, found: nullity.to_string() });
        }
        let key = RELATION_CLASSES.len() - 1;
        let coeffs = minimize_coefficients(&basis[0].coeffs, key);
        let relation = FourfoldRelation { labels: basis[0].labels.clone(), coeffs };
        let free_residual = evaluate_relation(&relation)?;
        return Ok(FourfoldDerivation { max_coeff_degree: d, raw_nullity: basis.len(), nullity, relation, free_residual });
    }
    Err(Error::UnexpectedNullity { expected: 1, found: "0".into() })
}

/// Evaluate a fourfold relation after substituting a concrete class X for
/// the K3 surface: [Y] = L X + 1 + L^2 + L^4, its symmetric powers taken in
/// the character ring, and k_n -> Sym^n X inside F(Y) and Z(Y).
pub fn substitution_residual(rel: &FourfoldRelation, x: &GradedCharacter) -> Result<GradedCharacter> {
    let t = x.table;
    let lp = |d| GradedCharacter::lefschetz_power(t, d);
    let y = x.shift(1).add(&lp(0))?.add(&lp(2))?.add(&lp(4))?;
    let ysym = y.sym_series(4)?;
    let xsym = x.sym_series(MAX_SYM)?;
    let subst = |p: &K3Poly| -> Result<GradedCharacter> {
        let mut acc = GradedCharacter::zero(t);
        for (&(k, l), c) in p.terms() {
            let mut term = lp(l as i32).scale(c);
            for (i, &e) in k.iter().enumerate() {
                for _ in 0..e {
                    term = term.mul(&xsym[i + 1])?;
                }
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    };
    let mut acc = GradedCharacter::zero(t);
    for (l, p) in rel.labels.iter().zip(&rel.coeffs) {
        let v = match l.as_str() {
            "1" => lp(0),
            "Y" => y.clone(),
            "Y^2" => y.mul(&y)?,
            "Y^(2)" => ysym[2].clone(),
            "Y^(3)" => ysym[3].clone(),
            "Y^(4)" => ysym[4].clone(),
            "Y×Y^(2)" => y.mul(&ysym[2])?,
            "F(Y)" | "Z(Y)" => subst(&fourfold_class(l)?)?,
            _ => return Err(Error::Unknown { what: "fourfold class", name: l.clone() }),
        };
        for (i, c) in p.coeffs().iter().enumerate() {
            acc = acc.add(&v.shift(i as i32).scale(c))?;
        }
    }
    Ok(acc)
}

/// Categorical symmetric square of m points: C(m, 2) + 2m.
pub fn gk_sym2(m: u64) -> u64 {
    m * m.saturating_sub(1) / 2 + 2 * m
}

/// Categorical measure: set L = 1 and take the virtual dimension.
pub fn cat_eval(x: &GradedCharacter) -> BigRational {
    x.dimension()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        let p = K3Poly::parse("L^2 k2 + (L^5 + L^3 + L) k1 + L^8 + 2L^4 + 1").unwrap();
        assert_eq!(p.to_string(), "L^2 k2 + (L^5 + L^3 + L) k1 + L^8 + 2L^4 + 1");
        assert_eq!(K3Poly::parse(&p.to_string()).unwrap(), p);
        assert_ne!(K3Poly::parse("k1^2").unwrap(), K3Poly::parse("k2").unwrap());
        assert!(K3Poly::parse("L +").is_err());
    }

    #[test]
    fn sym_of_twisted_generator() {
        let x = K3Poly::parse("L k1").unwrap();
        assert_eq!(x.sym_power(2).unwrap(), K3Poly::parse("L^2 k2").unwrap());
        assert_eq!(x.sym_power(5), Err(Error::UnsupportedDegree(5)));
    }

    #[test]
    fn sym_of_virtual_difference_vanishes() {
        let x = K3Poly::parse("L k1 + 1").unwrap();
        let d = x.sub(&x);
        for n in 1..=4 {
            assert!(d.sym_power(n).unwrap().is_zero());
        }
    }

    #[test]
    fn gk_sym2_counts_points() {
        assert_eq!(gk_sym2(0), 0);
        for m in 0..20u64 {
            assert_eq!(gk_sym2(m) - m, m * (m + 1) / 2);
        }
    }
}
