//! Character tables of W(E6) and of Z2 x| (S3 x S3) < S6, with derived class
//! sizes, power maps and exact class-function arithmetic.

mod data;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::{Check, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TableId {
    /// Weyl group of type E6, 25 classes.
    E6,
    /// The order-72 group Z2 x| (S3 x S3) inside S6, 9 classes.
    A2Group,
}

/// 1-based index of an irreducible character.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IrrepId {
    pub table: TableId,
    pub index: usize,
}

/// 1-based index of a conjugacy class (a table column).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ConjClassId {
    pub table: TableId,
    pub index: usize,
}

impl IrrepId {
    pub fn new(table: TableId, index: usize) -> Self {
        IrrepId { table, index }
    }
}

impl ConjClassId {
    pub fn new(table: TableId, index: usize) -> Self {
        ConjClassId { table, index }
    }
}

impl fmt::Display for IrrepId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "chi{}", self.index)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterTable {
    pub name: String,
    pub id: TableId,
    pub n: usize,
    /// Column labels; for the A2 group these are S6 cycle representatives.
    pub class_labels: Vec<String>,
    pub orders: Vec<u64>,
    /// prime -> (class -> class), 1-based on both sides.
    pub power_maps: BTreeMap<u64, Vec<usize>>,
    /// `values[i][c]` is chi_{i+1} on class c+1.
    pub values: Vec<Vec<i64>>,
    pub class_sizes: Vec<u64>,
    pub group_order: u64,
}

/// Raw W(E6) table: orders and power maps populated, sizes still zero.
pub fn load_e6_table() -> CharacterTable {
    let mut power_maps = BTreeMap::new();
    power_maps.insert(2, data::E6_POWER_2.to_vec());
    power_maps.insert(3, data::E6_POWER_3.to_vec());
    power_maps.insert(5, data::E6_POWER_5.to_vec());
    CharacterTable {
        name: "W(E6)".to_string(),
        id: TableId::E6,
        n: 25,
        class_labels: (1..=25).map(|c| c.to_string()).collect(),
        orders: data::E6_ORDERS.iter().map(|&o| o as u64).collect(),
        power_maps,
        values: data::E6_VALUES.iter().map(|r| r.to_vec()).collect(),
        class_sizes: vec![0; 25],
        group_order: 0,
    }
}

/// Raw table of Z2 x| (S3 x S3). The printed table has no order or power-map
/// rows; both are read off the cycle-notation column labels, which works
/// because the nine classes have pairwise distinct cycle types in S6.
pub fn load_a2_table() -> CharacterTable {
    let perms: Vec<Vec<usize>> = data::A2_CLASS_LABELS
        .iter()
        .map(|l| parse_cycles(l, 6).expect("embedded label"))
        .collect();
    let types: Vec<Vec<usize>> = perms.iter().map(|p| cycle_type(p)).collect();
    let orders: Vec<u64> = types
        .iter()
        .map(|t| t.iter().fold(1u64, |a, &l| num_integer::lcm(a, l as u64)))
        .collect();
    let mut power_maps = BTreeMap::new();
    for p in [2u64, 3, 5] {
        let map = perms
            .iter()
            .map(|g| {
                let t = cycle_type(&perm_pow(g, p));
                types.iter().position(|u| *u == t).expect("closed under powers") + 1
            })
            .collect();
        power_maps.insert(p, map);
    }
    CharacterTable {
        name: "Z2 x| (S3 x S3)".to_string(),
        id: TableId::A2Group,
        n: 9,
        class_labels: data::A2_CLASS_LABELS.iter().map(|s| s.to_string()).collect(),
        orders,
        power_maps,
        values: data::A2_VALUES.iter().map(|r| r.to_vec()).collect(),
        class_sizes: vec![0; 9],
        group_order: 0,
    }
}

/// Parse 1-based cycle notation such as "(14)(2536)" into a 0-based image
/// vector on `n` points. Points are single digits.
pub fn parse_cycles(s: &str, n: usize) -> Option<Vec<usize>> {
    let mut img: Vec<usize> = (0..n).collect();
    let mut cur: Vec<usize> = Vec::new();
    let mut open = false;
    for ch in s.chars() {
        match ch {
            '(' if !open => {
                open = true;
                cur.clear();
            }
            ')' if open => {
                open = false;
                for k in 0..cur.len() {
                    img[cur[k]] = cur[(k + 1) % cur.len()];
                }
            }
            ' ' | '~' => {}
            d if open && d.is_ascii_digit() => {
                let v = d.to_digit(10)? as usize;
                if v == 0 || v > n {
                    return None;
                }
                cur.push(v - 1);
            }
            _ => return None,
        }
    }
    if open {
        None
    } else {
        Some(img)
    }
}

fn perm_pow(g: &[usize], m: u64) -> Vec<usize> {
    (0..g.len())
        .map(|mut x| {
            for _ in 0..m {
                x = g[x];
            }
            x
        })
        .collect()
}

/// Sorted cycle lengths (fixed points included).
pub fn cycle_type(g: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; g.len()];
    let mut out = Vec::new();
    for s in 0..g.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = g[x];
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable();
    out
}

/// Fill in group order and class sizes from the orthogonality relations.
pub fn derive_class_sizes(mut table: CharacterTable) -> Result<CharacterTable> {
    let order: u64 = table.values.iter().map(|r| (r[0] * r[0]) as u64).sum();
    let mut sizes = Vec::with_capacity(table.n);
    for c in 0..table.n {
        let centralizer: u64 = table.values.iter().map(|r| (r[c] * r[c]) as u64).sum();
        if centralizer == 0 || !order.is_multiple_of(centralizer) {
            return Err(Error::NonIntegralClassSize {
                class: c + 1,
                numerator: order,
                denominator: centralizer,
            });
        }
        sizes.push(order / centralizer);
    }
    table.group_order = order;
    table.class_sizes = sizes;
    Ok(table)
}

/// The validated W(E6) table, built once.
pub fn e6() -> &'static CharacterTable {
    static T: OnceLock<CharacterTable> = OnceLock::new();
    T.get_or_init(|| derive_class_sizes(load_e6_table()).expect("embedded E6 table"))
}

/// The validated table of the order-72 group.
pub fn a2() -> &'static CharacterTable {
    static T: OnceLock<CharacterTable> = OnceLock::new();
    T.get_or_init(|| derive_class_sizes(load_a2_table()).expect("embedded A2 table"))
}

pub fn table(id: TableId) -> &'static CharacterTable {
    match id {
        TableId::E6 => e6(),
        TableId::A2Group => a2(),
    }
}

fn smallest_prime_factor(m: u64) -> u64 {
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            return p;
        }
        p += 1;
    }
    m
}

impl CharacterTable {
    pub fn dim(&self, irrep: usize) -> i64 {
        self.values[irrep - 1][0]
    }

    pub fn irreps(&self) -> impl Iterator<Item = IrrepId> + '_ {
        (1..=self.n).map(move |i| IrrepId::new(self.id, i))
    }

    /// Class of g^m for g in class `c` (1-based).
    ///
    /// The exponent is reduced modulo the element order and then factored.
    /// Primes without a stored map are coprime to every element order here,
    /// and since all characters are rational such a prime fixes every class.
    pub fn power_class(&self, c: usize, m: u64) -> Result<usize> {
        let order = self.orders[c - 1];
        let mut e = m % order;
        if e == 0 {
            return Ok(1);
        }
        let mut cls = c;
        while e > 1 {
            let p = smallest_prime_factor(e);
            e /= p;
            cls = match self.power_maps.get(&p) {
                Some(map) => map[cls - 1],
                None if !order.is_multiple_of(p) && self.is_rational() => cls,
                None => {
                    return Err(Error::UnsupportedExponent {
                        class: c,
                        exponent: m,
                        prime: p,
                    })
                }
            };
        }
        Ok(cls)
    }

    /// Tables stored here have integer entries, so every character is rational.
    pub fn is_rational(&self) -> bool {
        true
    }

    pub fn validate(&self) -> Report {
        let mut report = Report::new(format!("validate {}", self.name));
        let n = self.n;
        report.push(Check::new(
            "shape",
            self.values.len() == n
                && self.values.iter().all(|r| r.len() == n)
                && self.orders.len() == n
                && self.class_sizes.len() == n,
            format!("{n} classes"),
        ));
        report.push(Check::new(
            "positive dimensions",
            self.values.iter().all(|r| r[0] > 0),
            "first column is positive".to_string(),
        ));
        let mut col_fail = Vec::new();
        for c in 0..n {
            for d in c..n {
                let s: i64 = self.values.iter().map(|r| r[c] * r[d]).sum();
                let expect = if c == d {
                    if self.class_sizes[c] == 0 {
                        -1
                    } else {
                        (self.group_order / self.class_sizes[c]) as i64
                    }
                } else {
                    0
                };
                if s != expect || (c == d && !self.group_order.is_multiple_of(self.class_sizes[c].max(1))) {
                    col_fail.push(format!("({},{})", c + 1, d + 1));
                }
            }
        }
        report.push(Check::new(
            "column orthogonality",
            col_fail.is_empty(),
            if col_fail.is_empty() {
                "all column pairs".to_string()
            } else {
                format!("failing pairs {}", col_fail.join(" "))
            },
        ));
        let mut row_fail = Vec::new();
        for i in 0..n {
            for j in i..n {
                let s: i64 = (0..n)
                    .map(|c| self.class_sizes[c] as i64 * self.values[i][c] * self.values[j][c])
                    .sum();
                let expect = if i == j { self.group_order as i64 } else { 0 };
                if s != expect {
                    row_fail.push(format!("({},{})", i + 1, j + 1));
                }
            }
        }
        report.push(Check::new(
            "row orthogonality",
            row_fail.is_empty(),
            if row_fail.is_empty() {
                "all irreducible pairs".to_string()
            } else {
                format!("failing pairs {}", row_fail.join(" "))
            },
        ));
        let total: u64 = self.class_sizes.iter().sum();
        report.push(Check::new(
            "class sizes",
            total == self.group_order && self.class_sizes.first() == Some(&1),
            format!("sum {} vs order {}", total, self.group_order),
        ));
        let mut pm_fail = Vec::new();
        for (&p, map) in &self.power_maps {
            if map.len() != n || map[0] != 1 {
                pm_fail.push(format!("p={p} shape"));
                continue;
            }
            for c in 0..n {
                let o = self.orders[c];
                let want = o / num_integer::gcd(o, p);
                if map[c] == 0 || map[c] > n || self.orders[map[c] - 1] != want {
                    pm_fail.push(format!("p={p} class {}", c + 1));
                }
            }
        }
        report.push(Check::new(
            "power maps",
            pm_fail.is_empty(),
            if pm_fail.is_empty() {
                format!("primes {:?}", self.power_maps.keys().collect::<Vec<_>>())
            } else {
                pm_fail.join(", ")
            },
        ));
        report
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        out.push_str("class");
        for l in &self.class_labels {
            out.push('\t');
            out.push_str(l);
        }
        out.push('\n');
        let row = |out: &mut String, name: &str, vals: Vec<String>| {
            out.push_str(name);
            for v in vals {
                out.push('\t');
                out.push_str(&v);
            }
            out.push('\n');
        };
        row(&mut out, "order", self.orders.iter().map(|v| v.to_string()).collect());
        row(&mut out, "size", self.class_sizes.iter().map(|v| v.to_string()).collect());
        for (p, map) in &self.power_maps {
            row(&mut out, &format!("p={p}"), map.iter().map(|v| v.to_string()).collect());
        }
        for (i, r) in self.values.iter().enumerate() {
            row(&mut out, &format!("chi{}", i + 1), r.iter().map(|v| v.to_string()).collect());
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "name": self.name,
            "class_labels": self.class_labels,
            "orders": self.orders,
            "power_maps": self.power_maps.iter().map(|(p, m)| (p.to_string(), m.clone())).collect::<BTreeMap<_, _>>(),
            "values": self.values,
            "class_sizes": self.class_sizes,
            "group_order": self.group_order,
        })
    }

    /// The irreducible character chi_i as a class function.
    pub fn irrep(&self, i: usize) -> ClassFunction {
        ClassFunction::from_ints(self.id, &self.values[i - 1])
    }
}

/// A rational-valued function on the classes of one table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClassFunction {
    pub table: TableId,
    pub values: Vec<BigRational>,
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl ClassFunction {
    pub fn zero(table: TableId) -> Self {
        let n = self::table(table).n;
        ClassFunction {
            table,
            values: vec![BigRational::zero(); n],
        }
    }

    pub fn constant(table: TableId, v: i64) -> Self {
        let n = self::table(table).n;
        ClassFunction {
            table,
            values: vec![q(v); n],
        }
    }

    pub fn from_ints(table: TableId, vals: &[i64]) -> Self {
        ClassFunction {
            table,
            values: vals.iter().map(|&v| q(v)).collect(),
        }
    }

    pub fn from_irreps(table: TableId, mults: &[(usize, i64)]) -> Self {
        let t = self::table(table);
        let mut out = ClassFunction::zero(table);
        for &(i, m) in mults {
            for c in 0..t.n {
                out.values[c] += q(m * t.values[i - 1][c]);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.table != other.table {
            Err(Error::TableMismatch(self.table, other.table))
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(ClassFunction {
            table: self.table,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(ClassFunction {
            table: self.table,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(ClassFunction {
            table: self.table,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect(),
        })
    }

    pub fn neg(&self) -> Self {
        ClassFunction {
            table: self.table,
            values: self.values.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        ClassFunction {
            table: self.table,
            values: self.values.iter().map(|a| a * s).collect(),
        }
    }

    /// psi_m: the class function g -> f(g^m).
    pub fn adams(&self, m: u64) -> Result<Self> {
        let t = table(self.table);
        let mut values = Vec::with_capacity(t.n);
        for c in 1..=t.n {
            values.push(self.values[t.power_class(c, m)? - 1].clone());
        }
        Ok(ClassFunction {
            table: self.table,
            values,
        })
    }

    /// Value at the identity class.
    pub fn degree(&self) -> BigRational {
        self.values[0].clone()
    }

    /// Multiplicities <f, chi_i> for every irreducible, in table order.
    pub fn inner_products(&self) -> Vec<BigRational> {
        let t = table(self.table);
        let order = q(t.group_order as i64);
        (0..t.n)
            .map(|i| {
                let mut s = BigRational::zero();
                for c in 0..t.n {
                    if !self.values[c].is_zero() {
                        s += &self.values[c] * q(t.class_sizes[c] as i64 * t.values[i][c]);
                    }
                }
                s / &order
            })
            .collect()
    }

    /// Integer multiplicities, or an error naming the offending irreducible.
    pub fn integral_multiplicities(&self, effective: bool) -> Result<Vec<BigInt>> {
        let mut out = Vec::new();
        for (i, m) in self.inner_products().into_iter().enumerate() {
            if !m.is_integer() || (effective && m.is_negative()) {
                return Err(Error::NonIntegralDecomposition(format!(
                    "multiplicity of chi{} is {}",
                    i + 1,
                    m
                )));
            }
            out.push(m.to_integer());
        }
        Ok(out)
    }

    pub fn is_trivial_character(&self) -> bool {
        self.values.iter().all(|v| v.is_one())
    }

    /// Values as integers when all of them are integral.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.values
            .iter()
            .map(|v| if v.is_integer() { v.to_integer().to_i64() } else { None })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_tables_validate() {
        for t in [e6(), a2()] {
            let r = t.validate();
            assert!(r.passed(), "{}", r.to_text());
        }
        assert_eq!(e6().group_order, 51840);
        assert_eq!(a2().group_order, 72);
    }

    #[test]
    fn raw_table_has_zero_sizes() {
        let t = load_e6_table();
        assert_eq!(t.values[24][0], 90);
        assert_eq!(t.orders[0], 1);
        assert_eq!(t.power_maps[&2][21], 22);
        assert_eq!(t.group_order, 0);
        assert!(t.class_sizes.iter().all(|&s| s == 0));
    }

    #[test]
    fn perturbed_table_fails_column_orthogonality() {
        let mut t = load_e6_table();
        t.values[4][7] += 1;
        // sizes may no longer divide; force them in from the good table
        t.class_sizes = e6().class_sizes.clone();
        t.group_order = e6().group_order;
        let r = t.validate();
        let col = r.checks.iter().find(|c| c.name == "column orthogonality").unwrap();
        assert!(!col.passed);
    }

    #[test]
    fn power_class_examples() {
        let t = e6();
        assert_eq!(t.power_class(13, 5).unwrap(), 1);
        assert_eq!(t.power_class(24, 4).unwrap(), 7);
        assert_eq!(t.orders[6], 3);
        assert_eq!(t.power_class(5, 1).unwrap(), 5);
        // order 8, exponent 7 is coprime: class is fixed
        assert_eq!(t.power_class(21, 7).unwrap(), 21);
    }

    #[test]
    fn a2_labels_give_orders_and_powers() {
        let t = a2();
        assert_eq!(t.orders, vec![1, 2, 3, 2, 6, 3, 2, 4, 6]);
        assert_eq!(t.power_maps[&2], vec![1, 1, 3, 1, 3, 6, 1, 4, 6]);
        assert_eq!(t.power_maps[&3], vec![1, 2, 1, 4, 2, 1, 7, 8, 7]);
    }

    #[test]
    fn parse_cycles_rejects_garbage() {
        assert_eq!(parse_cycles("(12", 6), None);
        assert_eq!(parse_cycles("(17)", 6), None);
        assert_eq!(parse_cycles("(~~)", 6), Some(vec![0, 1, 2, 3, 4, 5]));
    }

    #[test]
    fn mixing_tables_is_an_error() {
        let a = ClassFunction::constant(TableId::E6, 1);
        let b = ClassFunction::constant(TableId::A2Group, 1);
        assert_eq!(a.add(&b), Err(Error::TableMismatch(TableId::E6, TableId::A2Group)));
    }

    #[test]
    fn regular_character_decomposes_by_dimension() {
        let t = e6();
        let mut vals = vec![0i64; 25];
        vals[0] = t.group_order as i64;
        let reg = ClassFunction::from_ints(TableId::E6, &vals);
        let m = reg.integral_multiplicities(true).unwrap();
        for i in 0..25 {
            assert_eq!(m[i], BigInt::from(t.values[i][0]));
        }
    }
}
