//! Finite G-sets and the Burnside ring.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use super::group::{FiniteGroup, SubgroupKey};
use crate::chartable::{parse_cycles, CharacterTable, ClassFunction};
use crate::error::{Error, Result};

/// A finite set with an action: `act[g][x]` is the image of point x under
/// element g.
#[derive(Debug, Clone)]
pub struct GSet {
    group: Arc<FiniteGroup>,
    act: Vec<Vec<u32>>,
}

#[derive(Debug, Clone)]
pub struct Orbit {
    pub points: Vec<usize>,
    /// Stabilizer of `points[0]`.
    pub stabilizer: Vec<usize>,
}

impl GSet {
    /// Build from a point map and check the action laws.
    pub fn new(group: &Arc<FiniteGroup>, n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let act = (0..group.order()).map(|g| (0..n).map(|x| f(g, x) as u32).collect()).collect();
        let s = GSet { group: group.clone(), act };
        s.validate()?;
        Ok(s)
    }

    fn validate(&self) -> Result<()> {
        let n = self.len();
        for (g, row) in self.act.iter().enumerate() {
            let mut seen = vec![false; n];
            for &y in row {
                if y as usize >= n || std::mem::replace(&mut seen[y as usize], true) {
                    return Err(Error::InvalidAction(format!("element {} does not permute the points", self.group.cycles(g))));
                }
            }
        }
        if self.act[0].iter().enumerate().any(|(x, &y)| x != y as usize) {
            return Err(Error::InvalidAction("identity moves a point".into()));
        }
        // a map that is multiplicative against every generator is a homomorphism
        for g in 0..self.group.order() {
            for &s in &self.group.generators {
                let gs = self.group.mul(g, s);
                if (0..n).any(|x| self.act[gs][x] != self.act[g][self.act[s][x] as usize]) {
                    return Err(Error::InvalidAction(format!(
                        "action of {} is not compatible with composition",
                        self.group.cycles(gs)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.act[0].len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn act(&self, g: usize, x: usize) -> usize {
        self.act[g][x] as usize
    }

    pub fn point(group: &Arc<FiniteGroup>) -> Self {
        GSet { group: group.clone(), act: vec![vec![0]; group.order()] }
    }

    pub fn empty(group: &Arc<FiniteGroup>) -> Self {
        GSet { group: group.clone(), act: vec![Vec::new(); group.order()] }
    }

    /// The base set the group permutes.
    pub fn natural(group: &Arc<FiniteGroup>) -> Self {
        let act = group.elements.iter().map(|p| p.iter().map(|&x| x as u32).collect()).collect();
        GSet { group: group.clone(), act }
    }

    /// G/H by left multiplication.
    pub fn coset_space(group: &Arc<FiniteGroup>, h: &[usize]) -> Self {
        let cosets = group.left_cosets(h);
        let mut which = vec![0u32; group.order()];
        for (i, c) in cosets.iter().enumerate() {
            for &g in c {
                which[g] = i as u32;
            }
        }
        let act = (0..group.order())
            .map(|g| cosets.iter().map(|c| which[group.mul(g, c[0])]).collect())
            .collect();
        GSet { group: group.clone(), act }
    }

    fn same_group(&self, o: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.group, &o.group) {
            Ok(())
        } else {
            Err(Error::InvalidAction(format!("G-sets over different groups {} and {}", self.group.name, o.group.name)))
        }
    }

    pub fn disjoint_union(&self, o: &Self) -> Result<Self> {
        self.same_group(o)?;
        let n = self.len() as u32;
        let act = self
            .act
            .iter()
            .zip(&o.act)
            .map(|(a, b)| a.iter().copied().chain(b.iter().map(|&y| y + n)).collect())
            .collect();
        Ok(GSet { group: self.group.clone(), act })
    }

    /// Points (x, y) numbered x * |Y| + y.
    pub fn product(&self, o: &Self) -> Result<Self> {
        self.same_group(o)?;
        let m = o.len();
        let act = self
            .act
            .iter()
            .zip(&o.act)
            .map(|(a, b)| {
                let mut row = Vec::with_capacity(a.len() * m);
                for &x in a {
                    for &y in b {
                        row.push(x * m as u32 + y);
                    }
                }
                row
            })
            .collect();
        Ok(GSet { group: self.group.clone(), act })
    }

    /// Action on a family of coordinate tuples closed under the induced
    /// action followed by `canon`.
    fn on_tuples(&self, tuples: Vec<Vec<u32>>, canon: fn(&mut Vec<u32>)) -> Self {
        let index: HashMap<&[u32], u32> = tuples.iter().enumerate().map(|(i, t)| (t.as_slice(), i as u32)).collect();
        let act = self
            .act
            .iter()
            .map(|a| {
                tuples
                    .iter()
                    .map(|t| {
                        let mut u: Vec<u32> = t.iter().map(|&x| a[x as usize]).collect();
                        canon(&mut u);
                        index[u.as_slice()]
                    })
                    .collect()
            })
            .collect();
        GSet { group: self.group.clone(), act }
    }

    /// Ordered n-tuples.
    pub fn power(&self, n: usize) -> Self {
        let mut out = GSet::point(&self.group);
        for _ in 0..n {
            out = out.product(self).expect("same group");
        }
        out
    }

    /// Unordered n-tuples with repetition: X^n / S_n.
    pub fn sym_power(&self, n: usize) -> Self {
        let tuples = multisets(self.len() as u32, n, false);
        self.on_tuples(tuples, |u| u.sort_unstable())
    }

    /// Unordered n-tuples of distinct points.
    pub fn distinct_subsets(&self, n: usize) -> Self {
        let tuples = multisets(self.len() as u32, n, true);
        self.on_tuples(tuples, |u| u.sort_unstable())
    }

    /// Restriction to an invariant subset, renumbered in the given order.
    pub fn subset(&self, points: &[usize]) -> Result<Self> {
        let mut pos = vec![u32::MAX; self.len()];
        for (i, &p) in points.iter().enumerate() {
            pos[p] = i as u32;
        }
        let mut act = Vec::with_capacity(self.act.len());
        for (g, row) in self.act.iter().enumerate() {
            let mut r = Vec::with_capacity(points.len());
            for &p in points {
                let y = pos[row[p] as usize];
                if y == u32::MAX {
                    return Err(Error::InvalidAction(format!("subset not invariant under {}", self.group.cycles(g))));
                }
                r.push(y);
            }
            act.push(r);
        }
        Ok(GSet { group: self.group.clone(), act })
    }

    /// Orbits in order of their smallest point.
    pub fn orbits(&self) -> Vec<Orbit> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut pts = vec![s];
            let mut i = 0;
            while i < pts.len() {
                for &g in &self.group.generators {
                    let y = self.act(g, pts[i]);
                    if !seen[y] {
                        seen[y] = true;
                        pts.push(y);
                    }
                }
                i += 1;
            }
            pts.sort_unstable();
            let stabilizer = (0..self.group.order()).filter(|&g| self.act(g, s) == s).collect();
            out.push(Orbit { points: pts, stabilizer });
        }
        out
    }

    pub fn to_virtual(&self) -> VirtualGSet {
        let mut v = VirtualGSet::zero(&self.group);
        for o in self.orbits() {
            *v.terms.entry(self.group.subgroup_key(&o.stabilizer)).or_insert(0) += 1;
        }
        v.terms.retain(|_, m| *m != 0);
        v
    }

    /// Isomorphism of G-sets: same multiset of stabilizer classes.
    pub fn iso(&self, o: &Self) -> bool {
        Arc::ptr_eq(&self.group, &o.group) && self.len() == o.len() && self.to_virtual() == o.to_virtual()
    }

    /// Fixed-point counts indexed by the group's conjugacy classes.
    pub fn fixed_points(&self) -> Vec<i64> {
        self.group
            .classes
            .iter()
            .map(|c| self.act[c[0]].iter().enumerate().filter(|&(x, &y)| x == y as usize).count() as i64)
            .collect()
    }
}

/// Sorted tuples of length n from 0..m (strictly increasing when `distinct`).
fn multisets(m: u32, n: usize, distinct: bool) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(m: u32, n: usize, distinct: bool, start: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for x in start..m {
            cur.push(x);
            rec(m, n, distinct, if distinct { x + 1 } else { x }, cur, out);
            cur.pop();
        }
    }
    rec(m, n, distinct, 0, &mut cur, &mut out);
    out
}

/// An element of the Burnside ring: integer multiplicities over transitive
/// types, keyed by the canonical stabilizer class.
#[derive(Debug, Clone)]
pub struct VirtualGSet {
    group: Arc<FiniteGroup>,
    terms: BTreeMap<SubgroupKey, i64>,
}

impl PartialEq for VirtualGSet {
    fn eq(&self, o: &Self) -> bool {
        Arc::ptr_eq(&self.group, &o.group) && self.terms == o.terms
    }
}

impl Eq for VirtualGSet {}

impl VirtualGSet {
    pub fn zero(group: &Arc<FiniteGroup>) -> Self {
        VirtualGSet { group: group.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(group: &Arc<FiniteGroup>, c: i64) -> Self {
        GSet::point(group).to_virtual().scale(c)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn terms(&self) -> &BTreeMap<SubgroupKey, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|&m| m >= 0)
    }

    fn from_terms(group: &Arc<FiniteGroup>, terms: impl IntoIterator<Item = (SubgroupKey, i64)>) -> Self {
        let mut v = VirtualGSet::zero(group);
        for (k, m) in terms {
            *v.terms.entry(k).or_insert(0) += m;
        }
        v.terms.retain(|_, m| *m != 0);
        v
    }

    pub fn add(&self, o: &Self) -> Self {
        assert!(Arc::ptr_eq(&self.group, &o.group), "Burnside ring elements over different groups");
        Self::from_terms(&self.group, self.terms.iter().chain(&o.terms).map(|(k, &m)| (k.clone(), m)))
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::from_terms(&self.group, self.terms.iter().map(|(k, &m)| (k.clone(), m * c)))
    }

    /// Product via the double coset formula on each pair of types.
    pub fn mul(&self, o: &Self) -> Self {
        assert!(Arc::ptr_eq(&self.group, &o.group), "Burnside ring elements over different groups");
        let mut out = Vec::new();
        for (a, &m) in &self.terms {
            for (b, &n) in &o.terms {
                for k in self.group.type_product(a, b) {
                    out.push((k, m * n));
                }
            }
        }
        Self::from_terms(&self.group, out)
    }

    /// Total number of points (signed).
    pub fn cardinality(&self) -> i64 {
        let g = self.group.order() as i64;
        self.terms.iter().map(|(k, &m)| m * (g / k.len() as i64)).sum()
    }

    /// A G-set realizing an effective element.
    pub fn realize(&self) -> Result<GSet> {
        if !self.is_effective() {
            return Err(Error::InvalidAction("cannot realize a virtual G-set with negative multiplicities".into()));
        }
        let mut out = GSet::empty(&self.group);
        for (k, &m) in &self.terms {
            let h: Vec<usize> = k.iter().map(|&x| x as usize).collect();
            let t = GSet::coset_space(&self.group, &h);
            for _ in 0..m {
                out = out.disjoint_union(&t)?;
            }
        }
        Ok(out)
    }

    /// Fixed points of each class on G/H: |C(g)| |g^G ∩ H| / |H|, summed.
    pub fn fixed_points(&self) -> Vec<i64> {
        let g = &self.group;
        g.classes
            .iter()
            .enumerate()
            .map(|(c, cl)| {
                let cent = g.centralizer_order(cl[0]) as i64;
                self.terms
                    .iter()
                    .map(|(k, &m)| {
                        let meet = k.iter().filter(|&&x| g.class_of[x as usize] == c).count() as i64;
                        m * cent * meet / k.len() as i64
                    })
                    .sum()
            })
            .collect()
    }

    /// Sym^k of a single transitive type, memoized per group.
    fn type_sym(&self, key: &SubgroupKey, k: usize) -> VirtualGSet {
        let g = &self.group;
        if let Some(v) = g.sym_cache.lock().expect("poisoned").get(&(key.clone(), k)) {
            return Self::from_terms(g, v.iter().cloned());
        }
        let h: Vec<usize> = key.iter().map(|&x| x as usize).collect();
        let v = GSet::coset_space(g, &h).sym_power(k).to_virtual();
        g.sym_cache
            .lock()
            .expect("poisoned")
            .insert((key.clone(), k), v.terms.iter().map(|(a, &b)| (a.clone(), b)).collect());
        v
    }

    /// Sym^0..Sym^n; negative parts go through the inverse series.
    pub fn sym_series(&self, n: usize) -> Vec<VirtualGSet> {
        let graded = GradedBurn::from_virtual(self.clone(), 0);
        graded.sym_series(n).into_iter().map(|x| x.coefficient(0)).collect()
    }

    pub fn sym_power(&self, n: usize) -> VirtualGSet {
        self.sym_series(n).pop().expect("n + 1 terms")
    }

    pub fn burn_char(&self, table: &CharacterTable, matching: &[usize]) -> ClassFunction {
        let fp = self.fixed_points();
        let vals: Vec<i64> = matching.iter().map(|&c| fp[c]).collect();
        ClassFunction::from_ints(table.id, &vals)
    }

    pub fn display(&self, names: &TypeNames) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts: Vec<(String, i64)> = self.terms.iter().map(|(k, &m)| (names.label(&self.group, k), m)).collect();
        parts.sort();
        let mut s = String::new();
        for (i, (l, m)) in parts.iter().enumerate() {
            let a = m.abs();
            let body = if l == "1" {
                a.to_string()
            } else if a == 1 {
                format!("[{l}]")
            } else {
                format!("{a}[{l}]")
            };
            match (i, *m < 0) {
                (0, true) => s.push_str(&format!("-{body}")),
                (0, false) => s.push_str(&body),
                (_, true) => s.push_str(&format!(" - {body}")),
                (_, false) => s.push_str(&format!(" + {body}")),
            }
        }
        s
    }

    pub fn to_json(&self, names: &TypeNames) -> Value {
        let m: BTreeMap<String, i64> = self.terms.iter().map(|(k, &v)| (names.label(&self.group, k), v)).collect();
        json!(m)
    }
}

/// Display names for transitive types.
#[derive(Debug, Clone, Default)]
pub struct TypeNames {
    names: BTreeMap<SubgroupKey, String>,
}

impl TypeNames {
    pub fn new() -> Self {
        Self::default()
    }

    /// Name the type of a transitive G-set.
    pub fn register(&mut self, name: &str, x: &GSet) -> Result<()> {
        let v = x.to_virtual();
        match v.terms.iter().next() {
            Some((k, 1)) if v.terms.len() == 1 => {
                self.names.entry(k.clone()).or_insert_with(|| name.to_string());
                Ok(())
            }
            _ => Err(Error::InvalidAction(format!("{name} is not transitive"))),
        }
    }

    /// Registered name, or `G/H<n>#hash` with n the orbit size.
    pub fn label(&self, group: &FiniteGroup, k: &SubgroupKey) -> String {
        if let Some(n) = self.names.get(k) {
            return n.clone();
        }
        let mut h = Sha256::new();
        for x in k {
            h.update(x.to_le_bytes());
        }
        let hex: String = h.finalize().iter().take(3).map(|b| format!("{b:02x}")).collect();
        format!("G/H{}#{hex}", group.order() / k.len())
    }
}

/// Burnside-ring valued polynomials in L.
#[derive(Debug, Clone)]
pub struct GradedBurn {
    group: Arc<FiniteGroup>,
    terms: BTreeMap<i32, VirtualGSet>,
}

impl PartialEq for GradedBurn {
    fn eq(&self, o: &Self) -> bool {
        Arc::ptr_eq(&self.group, &o.group) && self.terms == o.terms
    }
}

impl Eq for GradedBurn {}

impl GradedBurn {
    pub fn zero(group: &Arc<FiniteGroup>) -> Self {
        GradedBurn { group: group.clone(), terms: BTreeMap::new() }
    }

    pub fn one(group: &Arc<FiniteGroup>) -> Self {
        Self::from_virtual(VirtualGSet::constant(group, 1), 0)
    }

    pub fn lefschetz(group: &Arc<FiniteGroup>, d: i32) -> Self {
        Self::from_virtual(VirtualGSet::constant(group, 1), d)
    }

    pub fn from_virtual(v: VirtualGSet, d: i32) -> Self {
        let mut g = Self::zero(&v.group);
        if !v.is_zero() {
            g.terms.insert(d, v);
        }
        g
    }

    /// Sum of c_d [X] L^d.
    pub fn from_gset(x: &GSet, d: i32) -> Self {
        Self::from_virtual(x.to_virtual(), d)
    }

    pub fn terms(&self) -> &BTreeMap<i32, VirtualGSet> {
        &self.terms
    }

    pub fn coefficient(&self, d: i32) -> VirtualGSet {
        self.terms.get(&d).cloned().unwrap_or_else(|| VirtualGSet::zero(&self.group))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert_add(terms: &mut BTreeMap<i32, VirtualGSet>, d: i32, v: VirtualGSet) {
        let e = terms.remove(&d);
        let s = match e {
            Some(x) => x.add(&v),
            None => v,
        };
        if !s.is_zero() {
            terms.insert(d, s);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (&d, v) in &o.terms {
            Self::insert_add(&mut terms, d, v.clone());
        }
        GradedBurn { group: self.group.clone(), terms }
    }

    pub fn neg(&self) -> Self {
        GradedBurn {
            group: self.group.clone(),
            terms: self.terms.iter().map(|(&d, v)| (d, v.neg())).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut terms = BTreeMap::new();
        for (&d, v) in &self.terms {
            Self::insert_add(&mut terms, d, v.scale(c));
        }
        GradedBurn { group: self.group.clone(), terms }
    }

    pub fn shift(&self, k: i32) -> Self {
        GradedBurn {
            group: self.group.clone(),
            terms: self.terms.iter().map(|(&d, v)| (d + k, v.clone())).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut terms = BTreeMap::new();
        for (&a, x) in &self.terms {
            for (&b, y) in &o.terms {
                Self::insert_add(&mut terms, a + b, x.mul(y));
            }
        }
        GradedBurn { group: self.group.clone(), terms }
    }

    /// Multiply by an integer polynomial in L (coefficients of L^0, L^1, ...).
    pub fn mul_poly(&self, coeffs: &[i64]) -> Self {
        let mut out = Self::zero(&self.group);
        for (k, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                out = out.add(&self.shift(k as i32).scale(c));
            }
        }
        out
    }

    /// Sym^0..Sym^n, from sigma_t(T L^d) = sum_k Sym^k(T) L^{dk} t^k on each
    /// type and multiplicativity; negative multiplicities use the inverse
    /// series.
    pub fn sym_series(&self, n: usize) -> Vec<GradedBurn> {
        let one = Self::one(&self.group);
        let mut acc: Vec<GradedBurn> = (0..=n).map(|k| if k == 0 { one.clone() } else { Self::zero(&self.group) }).collect();
        for (&d, v) in &self.terms {
            for (key, &m) in &v.terms {
                let single: Vec<GradedBurn> = (0..=n)
                    .map(|k| Self::from_virtual(v.type_sym(key, k), d * k as i32))
                    .collect();
                let factor = if m > 0 { single } else { series_inverse(&single) };
                for _ in 0..m.unsigned_abs() {
                    acc = series_mul(&acc, &factor);
                }
            }
        }
        acc
    }

    pub fn sym_power(&self, n: usize) -> GradedBurn {
        self.sym_series(n).pop().expect("n + 1 terms")
    }

    /// Graded fixed-point counts per group class.
    pub fn fixed_points(&self) -> BTreeMap<i32, Vec<i64>> {
        self.terms.iter().map(|(&d, v)| (d, v.fixed_points())).collect()
    }

    pub fn display(&self, names: &TypeNames) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&d, v)| {
                let c = v.display(names);
                let wrapped = if v.terms.len() > 1 || c.starts_with('-') { format!("({c})") } else { c };
                match d {
                    0 => wrapped,
                    1 => format!("{wrapped} L"),
                    _ => format!("{wrapped} L^{d}"),
                }
            })
            .collect();
        parts.join(" + ")
    }

    pub fn to_json(&self, names: &TypeNames) -> Value {
        let m: BTreeMap<String, Value> = self.terms.iter().map(|(d, v)| (d.to_string(), v.to_json(names))).collect();
        json!(m)
    }
}

fn series_mul(a: &[GradedBurn], b: &[GradedBurn]) -> Vec<GradedBurn> {
    let n = a.len().min(b.len());
    (0..n)
        .map(|k| {
            let mut s = GradedBurn::zero(&a[0].group);
            for i in 0..=k {
                if !a[i].is_zero() && !b[k - i].is_zero() {
                    s = s.add(&a[i].mul(&b[k - i]));
                }
            }
            s
        })
        .collect()
}

/// Inverse of a series with constant term 1.
fn series_inverse(a: &[GradedBurn]) -> Vec<GradedBurn> {
    let mut inv = vec![GradedBurn::one(&a[0].group)];
    for k in 1..a.len() {
        let mut s = GradedBurn::zero(&a[0].group);
        for j in 1..=k {
            if !a[j].is_zero() {
                s = s.add(&a[j].mul(&inv[k - j]));
            }
        }
        inv.push(s.neg());
    }
    inv
}

/// Map each table column to a group class via its cycle-notation label.
pub fn match_classes(group: &FiniteGroup, table: &CharacterTable) -> Result<Vec<usize>> {
    let mut out = Vec::with_capacity(table.n);
    for label in &table.class_labels {
        let p = parse_cycles(label, group.degree)
            .ok_or_else(|| Error::Parse { what: "class label", input: label.clone() })?;
        let p: Vec<u8> = p.into_iter().map(|x| x as u8).collect();
        let c = group
            .class_of_perm(&p)
            .ok_or_else(|| Error::InvalidAction(format!("{label} is not in {}", group.name)))?;
        out.push(c);
    }
    let mut seen = out.clone();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != group.classes.len() || out.len() != group.classes.len() {
        return Err(Error::TableMismatch(table.id, table.id));
    }
    for (col, &c) in out.iter().enumerate() {
        if table.class_sizes.get(col).copied() != Some(group.classes[c].len() as u64) {
            return Err(Error::CardinalityMismatch {
                what: "conjugacy class size",
                expected: table.class_sizes.get(col).copied().unwrap_or(0) as usize,
                found: group.classes[c].len(),
            });
        }
    }
    Ok(out)
}

/// Character of a G-set as a class function on a matched table.
pub fn burn_char(x: &GSet, table: &CharacterTable, matching: &[usize]) -> ClassFunction {
    x.to_virtual().burn_char(table, matching)
}

/// Inner products of a Burnside element's character with the irreducibles.
pub fn char_decomposition(v: &VirtualGSet, table: &CharacterTable, matching: &[usize]) -> Vec<BigRational> {
    v.burn_char(table, matching).inner_products()
}

impl fmt::Display for VirtualGSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display(&TypeNames::new()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: usize) -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::symmetric(n).unwrap())
    }

    #[test]
    fn natural_action_is_transitive() {
        let g = s(6);
        let a = GSet::natural(&g);
        let o = a.orbits();
        assert_eq!(o.len(), 1);
        assert_eq!(o[0].stabilizer.len(), 120);
    }

    #[test]
    fn sym_square_splits_off_the_diagonal() {
        let g = s(6);
        let a = GSet::natural(&g);
        let lhs = a.sym_power(2).to_virtual();
        let rhs = a.to_virtual().add(&a.distinct_subsets(2).to_virtual());
        assert_eq!(lhs, rhs);
        assert_eq!(a.sym_power(1).to_virtual(), a.to_virtual());
    }

    #[test]
    fn double_coset_product_matches_explicit_product() {
        let g = s(4);
        let a = GSet::natural(&g);
        let b = a.distinct_subsets(2);
        let explicit = a.product(&b).unwrap().to_virtual();
        assert_eq!(a.to_virtual().mul(&b.to_virtual()), explicit);
    }

    #[test]
    fn virtual_sym_power_inverts() {
        // Sym^n(X - X) = 0 for n >= 1
        let g = s(3);
        let a = GSet::natural(&g).to_virtual();
        let z = a.sub(&a);
        assert!(z.sym_power(2).is_zero());
        assert_eq!(z.sym_power(0), VirtualGSet::constant(&g, 1));
    }

    #[test]
    fn fixed_points_agree_with_realization() {
        let g = s(4);
        let a = GSet::natural(&g);
        let x = a.product(&a.distinct_subsets(2)).unwrap();
        assert_eq!(x.to_virtual().fixed_points(), x.fixed_points());
        assert_eq!(x.to_virtual().realize().unwrap().fixed_points(), x.fixed_points());
    }

    #[test]
    fn invalid_action_is_rejected() {
        let g = s(3);
        // constant map is not a permutation
        assert!(GSet::new(&g, 2, |_, _| 0).is_err());
        // sign action on two points is fine
        let sign = |gi: usize| {
            let p = &g.elements[gi];
            let mut inv = 0;
            for i in 0..3 {
                for j in i + 1..3 {
                    if p[i] > p[j] {
                        inv += 1;
                    }
                }
            }
            inv % 2
        };
        assert!(GSet::new(&g, 2, |gi, x| x ^ sign(gi)).is_ok());
        // ignoring the group structure breaks compatibility
        assert!(GSet::new(&g, 2, |gi, x| if gi == 1 { 1 - x } else { x }).is_err());
    }
}
