//! The graded virtual character ring Rep(G)[L, 1/L] with Adams operations and
//! symmetric powers.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::chartable::{self, ClassFunction, TableId};
use crate::error::{Error, Result};

/// Finitely supported map from L-degree to class function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedCharacter {
    pub table: TableId,
    terms: BTreeMap<i32, ClassFunction>,
    /// Set when the value comes from genuine actions, so decompositions must
    /// be non-negative.
    pub effective: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalMode {
    Dimension,
    LToOne,
    ModL,
    LToZero,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evaluation {
    Number(BigRational),
    Function(ClassFunction),
}

impl GradedCharacter {
    pub fn zero(table: TableId) -> Self {
        GradedCharacter {
            table,
            terms: BTreeMap::new(),
            effective: true,
        }
    }

    pub fn one(table: TableId) -> Self {
        Self::lefschetz_power(table, 0)
    }

    /// L^d.
    pub fn lefschetz_power(table: TableId, d: i32) -> Self {
        Self::from_class_function(ClassFunction::constant(table, 1), d)
    }

    /// `f` placed in L-degree `d`.
    pub fn from_class_function(f: ClassFunction, d: i32) -> Self {
        let table = f.table;
        let mut terms = BTreeMap::new();
        if !f.is_zero() {
            terms.insert(d, f);
        }
        GradedCharacter {
            table,
            terms,
            effective: true,
        }
    }

    /// Build from (degree, irreducible, multiplicity) triples.
    pub fn from_irreps(table: TableId, terms: &[(i32, usize, i64)]) -> Self {
        let mut out = GradedCharacter::zero(table);
        for &(d, i, m) in terms {
            let f = ClassFunction::from_irreps(table, &[(i, m)]);
            out = out.add(&Self::from_class_function(f, d)).expect("same table");
        }
        out.effective = terms.iter().all(|t| t.2 >= 0);
        out
    }

    pub fn with_effective(mut self, effective: bool) -> Self {
        self.effective = effective;
        self
    }

    pub fn terms(&self) -> &BTreeMap<i32, ClassFunction> {
        &self.terms
    }

    pub fn term(&self, d: i32) -> ClassFunction {
        self.terms.get(&d).cloned().unwrap_or_else(|| ClassFunction::zero(self.table))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.table != o.table {
            Err(Error::TableMismatch(self.table, o.table))
        } else {
            Ok(())
        }
    }

    fn insert_add(terms: &mut BTreeMap<i32, ClassFunction>, d: i32, f: ClassFunction) {
        let next = match terms.remove(&d) {
            Some(g) => g.add(&f).expect("same table"),
            None => f,
        };
        if !next.is_zero() {
            terms.insert(d, next);
        }
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let mut terms = self.terms.clone();
        for (d, f) in &o.terms {
            Self::insert_add(&mut terms, *d, f.clone());
        }
        Ok(GradedCharacter {
            table: self.table,
            terms,
            effective: self.effective && o.effective,
        })
    }

    pub fn neg(&self) -> Self {
        GradedCharacter {
            table: self.table,
            terms: self.terms.iter().map(|(d, f)| (*d, f.neg())).collect(),
            effective: self.is_zero(),
        }
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let mut terms = BTreeMap::new();
        for (d, f) in &self.terms {
            for (e, g) in &o.terms {
                Self::insert_add(&mut terms, d + e, f.mul(g)?);
            }
        }
        Ok(GradedCharacter {
            table: self.table,
            terms,
            effective: self.effective && o.effective,
        })
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !s.is_zero() {
            for (d, f) in &self.terms {
                terms.insert(*d, f.scale(s));
            }
        }
        GradedCharacter {
            table: self.table,
            terms,
            effective: self.effective && !s.is_negative() && s.is_integer(),
        }
    }

    /// Multiply by L^d.
    pub fn shift(&self, d: i32) -> Self {
        GradedCharacter {
            table: self.table,
            terms: self.terms.iter().map(|(e, f)| (e + d, f.clone())).collect(),
            effective: self.effective,
        }
    }

    pub fn pow(&self, n: u32) -> Result<Self> {
        let mut acc = Self::one(self.table);
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// psi_m: class values pulled back along g -> g^m, degree d moved to d*m.
    pub fn adams(&self, m: u64) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (d, f) in &self.terms {
            terms.insert(d * m as i32, f.adams(m)?);
        }
        Ok(GradedCharacter {
            table: self.table,
            terms,
            effective: self.effective,
        })
    }

    /// Sym^0 .. Sym^n via h_k = (1/k) sum_{m=1..k} psi_m h_{k-m}. The
    /// recursion is the logarithmic derivative of the total symmetric power
    /// series, so it is multiplicative in x and handles virtual inputs.
    pub fn sym_series(&self, n: usize) -> Result<Vec<Self>> {
        let psi: Vec<Self> = (1..=n as u64).map(|m| self.adams(m)).collect::<Result<_>>()?;
        let mut h = vec![Self::one(self.table)];
        for k in 1..=n {
            let mut acc = Self::zero(self.table);
            for m in 1..=k {
                acc = acc.add(&psi[m - 1].mul(&h[k - m])?)?;
            }
            let mut hk = acc.scale(&BigRational::new(BigInt::one(), BigInt::from(k)));
            hk.effective = self.effective;
            h.push(hk);
        }
        Ok(h)
    }

    pub fn sym_power(&self, n: usize) -> Result<Self> {
        Ok(self.sym_series(n)?.pop().expect("nonempty"))
    }

    pub fn evaluate(&self, mode: EvalMode) -> Evaluation {
        match mode {
            EvalMode::Dimension => {
                Evaluation::Number(self.terms.values().map(|f| f.degree()).fold(BigRational::zero(), |a, b| a + b))
            }
            EvalMode::LToOne => Evaluation::Function(self.at_l_one()),
            EvalMode::ModL | EvalMode::LToZero => Evaluation::Function(self.term(0)),
        }
    }

    pub fn dimension(&self) -> BigRational {
        match self.evaluate(EvalMode::Dimension) {
            Evaluation::Number(n) => n,
            Evaluation::Function(_) => unreachable!(),
        }
    }

    pub fn at_l_one(&self) -> ClassFunction {
        let mut acc = ClassFunction::zero(self.table);
        for f in self.terms.values() {
            acc = acc.add(f).expect("same table");
        }
        acc
    }

    /// Rational multiplicities per degree and irreducible (zeros omitted).
    pub fn rational_decomposition(&self) -> BTreeMap<i32, BTreeMap<usize, BigRational>> {
        let mut out = BTreeMap::new();
        for (d, f) in &self.terms {
            let row: BTreeMap<usize, BigRational> = f
                .inner_products()
                .into_iter()
                .enumerate()
                .filter(|(_, m)| !m.is_zero())
                .map(|(i, m)| (i + 1, m))
                .collect();
            if !row.is_empty() {
                out.insert(*d, row);
            }
        }
        out
    }

    pub fn decompose(&self) -> Result<IrrepDecomposition> {
        let mut terms = BTreeMap::new();
        for (d, row) in self.rational_decomposition() {
            let mut r = BTreeMap::new();
            for (i, m) in row {
                if !m.is_integer() || (self.effective && m.is_negative()) {
                    return Err(Error::NonIntegralDecomposition(format!(
                        "multiplicity of chi{i} in degree {d} is {m}"
                    )));
                }
                r.insert(i, m.to_integer());
            }
            terms.insert(d, r);
        }
        Ok(IrrepDecomposition {
            table: self.table,
            terms,
        })
    }
}

/// Multiplicities of irreducibles, per L-degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrrepDecomposition {
    pub table: TableId,
    pub terms: BTreeMap<i32, BTreeMap<usize, BigInt>>,
}

impl IrrepDecomposition {
    pub fn reconstruct(&self) -> GradedCharacter {
        let mut out = GradedCharacter::zero(self.table);
        let t = chartable::table(self.table);
        for (d, row) in &self.terms {
            let mut f = ClassFunction::zero(self.table);
            for (i, m) in row {
                let m = BigRational::from_integer(m.clone());
                f = f.add(&t.irrep(*i).scale(&m)).expect("same table");
            }
            out = out.add(&GradedCharacter::from_class_function(f, *d)).expect("same table");
        }
        out.effective = self.terms.values().all(|r| r.values().all(|m| !m.is_negative()));
        out
    }

    /// The coefficient of L^d.
    pub fn coefficient(&self, d: i32) -> BTreeMap<usize, BigInt> {
        self.terms.get(&d).cloned().unwrap_or_default()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut out = serde_json::Map::new();
        for (d, row) in &self.terms {
            let mut r = serde_json::Map::new();
            for (i, m) in row {
                r.insert(format!("chi{i}"), serde_json::Value::String(m.to_string()));
            }
            out.insert(d.to_string(), serde_json::Value::Object(r));
        }
        serde_json::Value::Object(out)
    }

    /// Parse the display form, e.g. `1 + (1 + χ3) L + L^2`. Accepts `χ3`,
    /// `chi3`, `X_3`, `\X_{3}`, `\chi_3` for irreducibles, `1` or `\One` for
    /// the trivial one, and `L`/`\L` with `^d` or `^{d}` exponents.
    pub fn parse(table: TableId, s: &str) -> Result<Self> {
        let mut p = Parser {
            chars: normalize(s).chars().collect(),
            pos: 0,
            src: s,
        };
        let v = p.expr()?;
        p.skip_ws();
        if p.pos != p.chars.len() {
            return Err(p.err());
        }
        let n = chartable::table(table).n;
        let mut terms: BTreeMap<i32, BTreeMap<usize, BigInt>> = BTreeMap::new();
        for ((d, i), m) in v {
            if i == 0 || i > n {
                return Err(Error::Parse {
                    what: "irreducible index",
                    input: s.to_string(),
                });
            }
            if !m.is_zero() {
                terms.entry(d).or_default().insert(i, m);
            }
        }
        terms.retain(|_, r| !r.is_empty());
        Ok(IrrepDecomposition { table, terms })
    }
}

fn fmt_coeff(row: &BTreeMap<usize, BigInt>) -> (String, usize) {
    let mut parts: Vec<(bool, String)> = Vec::new();
    for (i, m) in row {
        let neg = m.is_negative();
        let a = m.abs();
        let body = if *i == 1 {
            a.to_string()
        } else if a.is_one() {
            format!("χ{i}")
        } else {
            format!("{a}χ{i}")
        };
        parts.push((neg, body));
    }
    let mut s = String::new();
    for (k, (neg, body)) in parts.iter().enumerate() {
        if k == 0 {
            if *neg {
                s.push('-');
            }
        } else {
            s.push_str(if *neg { " - " } else { " + " });
        }
        s.push_str(body);
    }
    (s, parts.len())
}

impl fmt::Display for IrrepDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, row) in &self.terms {
            let (c, nparts) = fmt_coeff(row);
            let lpow = match d {
                0 => String::new(),
                1 => "L".to_string(),
                _ => format!("L^{d}"),
            };
            let piece = if *d == 0 {
                c
            } else if c == "1" {
                lpow
            } else if c == "-1" {
                format!("-{lpow}")
            } else if nparts == 1 {
                format!("{c} {lpow}")
            } else {
                format!("({c}) {lpow}")
            };
            if first {
                write!(f, "{piece}")?;
            } else if let Some(rest) = piece.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {piece}")?;
            }
            first = false;
        }
        Ok(())
    }
}

fn normalize(s: &str) -> String {
    s.replace("\\One", "1")
        .replace("\\mathbf{1}", "1")
        .replace("\\chi_", "χ")
        .replace("\\X_", "χ")
        .replace("X_", "χ")
        .replace("chi", "χ")
        .replace("\\L", "L")
        .replace('$', "")
        .replace('−', "-")
        .replace("\\cdot", "")
}

type Poly = BTreeMap<(i32, usize), BigInt>;

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn err(&self) -> Error {
        Error::Parse {
            what: "decomposition",
            input: self.src.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn number(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            None
        } else {
            self.chars[start..self.pos].iter().collect::<String>().parse().ok()
        }
    }

    fn braced_number(&mut self) -> Result<i64> {
        let braced = self.peek() == Some('{');
        if braced {
            self.pos += 1;
        }
        let n = self.number().ok_or_else(|| self.err())?;
        if braced {
            if self.peek() != Some('}') {
                return Err(self.err());
            }
            self.pos += 1;
        }
        i64::try_from(n).map_err(|_| self.err())
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = Poly::new();
        let mut sign = 1;
        if self.peek() == Some('-') {
            self.pos += 1;
            sign = -1;
        } else if self.peek() == Some('+') {
            self.pos += 1;
        }
        loop {
            let t = self.term()?;
            for (k, v) in t {
                *acc.entry(k).or_insert_with(BigInt::zero) += v * sign;
            }
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    sign = 1;
                }
                Some('-') => {
                    self.pos += 1;
                    sign = -1;
                }
                _ => break,
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc: Poly = [((0, 1), BigInt::one())].into_iter().collect();
        let mut any = false;
        loop {
            let factor: Poly = match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let n = self.number().expect("digit");
                    [((0, 1), n)].into_iter().collect()
                }
                Some('χ') => {
                    self.pos += 1;
                    let i = self.braced_number()?;
                    [((0, i as usize), BigInt::one())].into_iter().collect()
                }
                Some('L') => {
                    self.pos += 1;
                    let d = if self.peek() == Some('^') {
                        self.pos += 1;
                        self.braced_number()? as i32
                    } else {
                        1
                    };
                    [((d, 1), BigInt::one())].into_iter().collect()
                }
                Some('(') => {
                    self.pos += 1;
                    let e = self.expr()?;
                    if self.peek() != Some(')') {
                        return Err(self.err());
                    }
                    self.pos += 1;
                    e
                }
                _ => break,
            };
            acc = mul_poly(&acc, &factor).ok_or_else(|| self.err())?;
            any = true;
        }
        if any {
            Ok(acc)
        } else {
            Err(self.err())
        }
    }
}

/// Product where irreducibles only multiply with the trivial one.
fn mul_poly(a: &Poly, b: &Poly) -> Option<Poly> {
    let mut out = Poly::new();
    for ((d, i), x) in a {
        for ((e, j), y) in b {
            let k = match (*i, *j) {
                (1, k) | (k, 1) => k,
                _ => return None,
            };
            *out.entry((d + e, k)).or_insert_with(BigInt::zero) += x * y;
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartable::e6;

    fn chi(i: usize) -> GradedCharacter {
        GradedCharacter::from_class_function(e6().irrep(i), 0)
    }

    #[test]
    fn lefschetz_arithmetic() {
        let l = GradedCharacter::lefschetz_power(TableId::E6, 1);
        assert_eq!(l.mul(&l).unwrap(), GradedCharacter::lefschetz_power(TableId::E6, 2));
        let x = chi(3).add(&l).unwrap();
        assert!(x.add(&x.neg()).unwrap().is_zero());
    }

    #[test]
    fn adams_examples() {
        let c3 = chi(3);
        assert_eq!(c3.adams(1).unwrap(), c3);
        let one = GradedCharacter::one(TableId::E6);
        assert_eq!(one.adams(4).unwrap(), one);
        let a = c3.adams(2).unwrap();
        assert_eq!(a.term(0).values[8], BigRational::from_integer((-2).into()));
    }

    #[test]
    fn sym_square_of_reflection_character() {
        let s2 = chi(3).sym_power(2).unwrap();
        assert_eq!(s2.decompose().unwrap().to_string(), "1 + χ10");
        let one = GradedCharacter::one(TableId::E6);
        assert_eq!(one.sym_power(4).unwrap(), one);
    }

    #[test]
    fn display_and_parse_agree() {
        let d = IrrepDecomposition::parse(TableId::E6, r"\One + (\One + \X_3 )\L + (3 + \X_3 + \X_10 )\L^2").unwrap();
        assert_eq!(d.to_string(), "1 + (1 + χ3) L + (3 + χ3 + χ10) L^2");
        let d2 = IrrepDecomposition::parse(TableId::E6, &d.to_string()).unwrap();
        assert_eq!(d, d2);
        let e = IrrepDecomposition::parse(TableId::E6, r"(4\X_3 + 4)\L^{3} - \chi_{12}").unwrap();
        assert_eq!(e.to_string(), "-χ12 + (4 + 4χ3) L^3");
        assert!(IrrepDecomposition::parse(TableId::E6, "χ3 χ4").is_err());
        assert!(IrrepDecomposition::parse(TableId::E6, "χ26").is_err());
    }

    #[test]
    fn effective_negative_multiplicity_is_rejected() {
        let x = chi(1).sub(&chi(3)).unwrap().with_effective(true);
        assert!(matches!(x.decompose(), Err(Error::NonIntegralDecomposition(_))));
        assert!(x.with_effective(false).decompose().is_ok());
    }

    #[test]
    fn evaluations() {
        let l = GradedCharacter::lefschetz_power(TableId::E6, 1);
        let s = GradedCharacter::one(TableId::E6)
            .add(&chi(1).add(&chi(3)).unwrap().mul(&l).unwrap())
            .unwrap()
            .add(&l.mul(&l).unwrap())
            .unwrap();
        assert_eq!(s.dimension(), BigRational::from_integer(9.into()));
        assert!(s.term(0).is_trivial_character());
        match s.evaluate(EvalMode::LToOne) {
            Evaluation::Function(f) => assert_eq!(f.degree(), BigRational::from_integer(9.into())),
            _ => panic!(),
        }
    }
}
