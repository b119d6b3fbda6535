//! Motivic classes of a smooth cubic surface as graded W(E6)-characters:
//! [S], its symmetric powers and Hilbert schemes of points, products of
//! those, and the point sets F (lines), Z (roots) and V (lattice).

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use crate::charring::GradedCharacter;
use crate::chartable::TableId;
use crate::error::{Error, Result};
use crate::rootsys::weyl;

/// One factor of a product class. The variant order fixes label order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Factor {
    /// S^(n); S^(1) is S itself.
    Sym(u32),
    /// S^[n] for n >= 2.
    Hilb(u32),
    /// The 27 lines.
    F,
    /// The 72 roots.
    Z,
    /// The lattice representation, in degree 0.
    V,
}

/// A product of factors; the empty product is the unit class "1".
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassExpr {
    factors: Vec<Factor>,
}

impl ClassExpr {
    pub fn one() -> Self {
        ClassExpr { factors: Vec::new() }
    }

    pub fn new(factors: impl IntoIterator<Item = Factor>) -> Self {
        let mut factors: Vec<Factor> = factors
            .into_iter()
            .map(|f| match f {
                Factor::Hilb(1) => Factor::Sym(1),
                f => f,
            })
            .filter(|f| !matches!(f, Factor::Sym(0) | Factor::Hilb(0)))
            .collect();
        factors.sort();
        ClassExpr { factors }
    }

    pub fn single(f: Factor) -> Self {
        Self::new([f])
    }

    pub fn s() -> Self {
        Self::single(Factor::Sym(1))
    }

    pub fn sym(n: u32) -> Self {
        Self::single(Factor::Sym(n))
    }

    pub fn hilb(n: u32) -> Self {
        Self::single(Factor::Hilb(n))
    }

    /// Product of symmetric powers S^(p) over the parts of a partition.
    pub fn from_partition(parts: &[u32]) -> Self {
        Self::new(parts.iter().map(|&p| Factor::Sym(p)))
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn times(&self, o: &Self) -> Self {
        Self::new(self.factors.iter().chain(&o.factors).copied())
    }

    /// Formula degree: n for S^(n) and S^[n], 0 for F, Z, V.
    pub fn degree(&self) -> u32 {
        self.factors
            .iter()
            .map(|f| match f {
                Factor::Sym(n) | Factor::Hilb(n) => *n,
                _ => 0,
            })
            .sum()
    }

    /// Built from S alone (no auxiliary varieties).
    pub fn is_homogeneous(&self) -> bool {
        self.factors.iter().all(|f| matches!(f, Factor::Sym(_) | Factor::Hilb(_)))
    }

    pub fn contains(&self, f: Factor) -> bool {
        self.factors.contains(&f)
    }

    /// The same product with every S^[n] replaced by S^(n).
    pub fn hilb_to_sym(&self) -> Self {
        Self::new(self.factors.iter().map(|f| match f {
            Factor::Hilb(n) => Factor::Sym(*n),
            f => *f,
        }))
    }

    pub fn parse(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "class",
            input: s.to_string(),
        };
        let cleaned: String = s
            .replace("\\times", "×")
            .chars()
            .filter(|c| !c.is_whitespace())
            .collect();
        if cleaned.is_empty() {
            return Err(err());
        }
        let mut factors = Vec::new();
        for tok in cleaned.split(['×', '*', 'x']) {
            match tok {
                "1" => {}
                "S" | "Y" => factors.push(Factor::Sym(1)),
                "F" | "F(S)" => factors.push(Factor::F),
                "Z" | "Z(S)" => factors.push(Factor::Z),
                "V" => factors.push(Factor::V),
                _ => {
                    let rest = tok.strip_prefix("S^").ok_or_else(err)?;
                    let rest = rest.trim_start_matches('{').trim_end_matches('}');
                    let num = |t: &str| t.parse::<u32>().map_err(|_| err());
                    if let Some(n) = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
                        factors.push(Factor::Sym(num(n)?));
                    } else if let Some(n) = rest.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
                        factors.push(Factor::Hilb(num(n)?));
                    } else {
                        let k = num(rest)?;
                        factors.extend(std::iter::repeat_n(Factor::Sym(1), k as usize));
                    }
                }
            }
        }
        Ok(Self::new(factors))
    }
}

impl fmt::Display for ClassExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let mut parts = Vec::new();
        let s_count = self.factors.iter().filter(|x| **x == Factor::Sym(1)).count();
        match s_count {
            0 => {}
            1 => parts.push("S".to_string()),
            k => parts.push(format!("S^{k}")),
        }
        for x in &self.factors {
            match x {
                Factor::Sym(1) => {}
                Factor::Sym(n) => parts.push(format!("S^({n})")),
                Factor::Hilb(n) => parts.push(format!("S^[{n}]")),
                Factor::F => parts.push("F".to_string()),
                Factor::Z => parts.push("Z".to_string()),
                Factor::V => parts.push("V".to_string()),
            }
        }
        write!(f, "{}", parts.join("×"))
    }
}

/// A class with its symbolic name and formula degree.
#[derive(Debug, Clone)]
pub struct NamedClass {
    pub expr: ClassExpr,
    pub name: String,
    pub value: GradedCharacter,
    pub degree: u32,
}

impl NamedClass {
    fn new(expr: ClassExpr, value: GradedCharacter) -> Self {
        NamedClass {
            name: expr.to_string(),
            degree: expr.degree(),
            expr,
            value,
        }
    }
}

/// Highest symmetric power kept precomputed.
const MAX_SYM: usize = 6;

pub struct Motives {
    s: GradedCharacter,
    f: GradedCharacter,
    z: GradedCharacter,
    v: GradedCharacter,
    sym: Vec<GradedCharacter>,
    hilb: Vec<GradedCharacter>,
    memo: Mutex<HashMap<ClassExpr, GradedCharacter>>,
}

pub fn motives() -> Result<&'static Motives> {
    static M: OnceLock<Result<Motives>> = OnceLock::new();
    M.get_or_init(Motives::build).as_ref().map_err(|e| e.clone())
}

/// Sum of Hilbert-scheme classes from symmetric powers:
/// sum_n [S^[n]] t^n = prod_{k>=1} Z_S(L^{k-1} t^k).
pub fn gottsche(sym: &[GradedCharacter], n: usize) -> Result<Vec<GradedCharacter>> {
    let table = sym[0].table;
    let mut series = vec![GradedCharacter::zero(table); n + 1];
    series[0] = GradedCharacter::one(table);
    for k in 1..=n {
        // factor Z_S(L^{k-1} t^k) = sum_m Sym^m(S) L^{(k-1)m} t^{km}
        let mut next = vec![GradedCharacter::zero(table); n + 1];
        for (i, a) in series.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let mut m = 0;
            while i + k * m <= n {
                let term = sym[m].shift(((k - 1) * m) as i32);
                next[i + k * m] = next[i + k * m].add(&a.mul(&term)?)?;
                m += 1;
            }
        }
        series = next;
    }
    Ok(series)
}

impl Motives {
    fn build() -> Result<Self> {
        let w = weyl()?;
        let t = TableId::E6;
        let v = GradedCharacter::from_class_function(w.lattice_character(), 0);
        let s = GradedCharacter::one(t)
            .add(&v.shift(1))?
            .add(&GradedCharacter::lefschetz_power(t, 2))?;
        let f = GradedCharacter::from_class_function(w.lines_character(), 0);
        let z = GradedCharacter::from_class_function(w.roots_character(), 0);
        let sym = s.sym_series(MAX_SYM)?;
        let hilb = gottsche(&sym, MAX_SYM)?;
        Ok(Motives {
            s,
            f,
            z,
            v,
            sym,
            hilb,
            memo: Mutex::new(HashMap::new()),
        })
    }

    pub fn s(&self) -> &GradedCharacter {
        &self.s
    }

    pub fn f(&self) -> &GradedCharacter {
        &self.f
    }

    pub fn z(&self) -> &GradedCharacter {
        &self.z
    }

    pub fn v(&self) -> &GradedCharacter {
        &self.v
    }

    fn factor(&self, f: Factor) -> Result<GradedCharacter> {
        Ok(match f {
            Factor::Sym(n) if (n as usize) <= MAX_SYM => self.sym[n as usize].clone(),
            Factor::Hilb(n) if (n as usize) <= MAX_SYM => self.hilb[n as usize].clone(),
            Factor::Sym(n) | Factor::Hilb(n) => return Err(Error::UnsupportedDegree(n as usize)),
            Factor::F => self.f.clone(),
            Factor::Z => self.z.clone(),
            Factor::V => self.v.clone(),
        })
    }

    /// Value of a product class, memoized.
    pub fn value(&self, e: &ClassExpr) -> Result<GradedCharacter> {
        if let Some(v) = self.memo.lock().expect("memo lock").get(e) {
            return Ok(v.clone());
        }
        let mut acc = GradedCharacter::one(TableId::E6);
        for f in e.factors() {
            acc = acc.mul(&self.factor(*f)?)?;
        }
        self.memo.lock().expect("memo lock").insert(e.clone(), acc.clone());
        Ok(acc)
    }

    pub fn named(&self, e: &ClassExpr) -> Result<NamedClass> {
        Ok(NamedClass::new(e.clone(), self.value(e)?))
    }

    pub fn build_s(&self) -> NamedClass {
        NamedClass::new(ClassExpr::s(), self.s.clone())
    }

    pub fn build_f(&self) -> NamedClass {
        NamedClass::new(ClassExpr::single(Factor::F), self.f.clone())
    }

    pub fn build_z(&self) -> NamedClass {
        NamedClass::new(ClassExpr::single(Factor::Z), self.z.clone())
    }

    pub fn build_v(&self) -> NamedClass {
        NamedClass::new(ClassExpr::single(Factor::V), self.v.clone())
    }

    pub fn sym_class(&self, n: u32) -> Result<NamedClass> {
        self.named(&ClassExpr::sym(n))
    }

    pub fn hilb_class(&self, n: u32) -> Result<NamedClass> {
        self.named(&ClassExpr::hilb(n))
    }

    pub fn product_class(&self, factors: &[Factor]) -> Result<NamedClass> {
        self.named(&ClassExpr::new(factors.iter().copied()))
    }
}

/// Partitions of n as non-increasing part lists.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=max.min(n)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All products of symmetric powers of total formula degree <= d,
/// including the unit class, ordered by degree.
pub fn homogeneous_monomials(d: u32) -> Vec<ClassExpr> {
    let mut out = Vec::new();
    for k in 0..=d {
        let mut level: Vec<ClassExpr> = partitions(k).iter().map(|p| ClassExpr::from_partition(p)).collect();
        level.sort();
        out.extend(level);
    }
    out
}

/// Homogeneous monomials of degree exactly `d`.
pub fn monomials_of_degree(d: u32) -> Vec<ClassExpr> {
    homogeneous_monomials(d).into_iter().filter(|m| m.degree() == d).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_round_trip() {
        for s in ["1", "S", "S^2", "S^(3)", "S×S^(2)", "S^2×S^(2)", "S^(2)×S^(2)", "S^[2]", "S×S^[2]", "F", "Z", "S×Z"] {
            assert_eq!(ClassExpr::parse(s).unwrap().to_string(), s);
        }
        assert_eq!(ClassExpr::parse("S^(2) x S").unwrap().to_string(), "S×S^(2)");
        assert_eq!(ClassExpr::parse("S^[1]").unwrap(), ClassExpr::s());
        assert!(ClassExpr::parse("T").is_err());
    }

    #[test]
    fn degrees() {
        assert_eq!(ClassExpr::parse("S^2×S^(2)").unwrap().degree(), 4);
        assert_eq!(ClassExpr::parse("Z").unwrap().degree(), 0);
        assert_eq!(homogeneous_monomials(4).len(), 12);
        assert_eq!(homogeneous_monomials(5).len(), 19);
        assert_eq!(monomials_of_degree(3).len(), 3);
    }

    #[test]
    fn hilbert_schemes_from_symmetric_powers() {
        let m = motives().unwrap();
        let v = |s: &str| m.value(&ClassExpr::parse(s).unwrap()).unwrap();
        let sum = |terms: &[(&str, i32)]| {
            terms.iter().fold(GradedCharacter::zero(TableId::E6), |acc, (c, k)| acc.add(&v(c).shift(*k)).unwrap())
        };
        assert_eq!(v("S^[2]"), sum(&[("S^(2)", 0), ("S", 1)]));
        assert_eq!(v("S^[3]"), sum(&[("S^(3)", 0), ("S^2", 1), ("S", 2)]));
        let four = sum(&[("S^(4)", 0), ("S×S^(2)", 1), ("S^(2)", 2), ("S^2", 2), ("S", 3)]);
        assert!(v("S^[4]").sub(&four).unwrap().is_zero());
    }
}
