use std::collections::{HashMap, VecDeque};
use std::path::{Path, PathBuf};
use std::sync::OnceLock;

use num_integer::Integer;
use num_rational::Ratio;
use sha2::{Digest, Sha256};

use super::{
    build_lattice, enumerate_lines, enumerate_roots, reflection, simple_roots, Lattice, LatticeVector,
    LineSet, RootSet,
};
use crate::chartable::{self, CharacterTable, ClassFunction, TableId};
use crate::error::{Error, Result};

/// A permutation of the 72 roots; `p[i]` is the image of root `i`.
pub type Perm = [u8; 72];

/// Composition: apply `b` first, then `a`.
pub fn compose(a: &Perm, b: &Perm) -> Perm {
    let mut out = [0u8; 72];
    for i in 0..72 {
        out[i] = a[b[i] as usize];
    }
    out
}

pub fn identity() -> Perm {
    let mut p = [0u8; 72];
    for (i, x) in p.iter_mut().enumerate() {
        *x = i as u8;
    }
    p
}

fn perm_order(p: &Perm) -> u64 {
    let mut seen = [false; 72];
    let mut order = 1u64;
    for s in 0..72 {
        if seen[s] {
            continue;
        }
        let mut len = 0u64;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = p[x] as usize;
            len += 1;
        }
        order = order.lcm(&len);
    }
    order
}

#[derive(Debug, Clone)]
pub struct ConjClass {
    pub rep: u32,
    pub size: u64,
    pub order: u64,
    /// Trace on the 6-dimensional reflection representation.
    pub trace: i64,
    /// Matched column of the E6 table (1-based).
    pub column: usize,
}

#[derive(Debug)]
pub struct WeylGroup {
    pub lattice: Lattice,
    pub roots: RootSet,
    pub lines: LineSet,
    pub generators: Vec<u32>,
    pub elements: Vec<Perm>,
    index: HashMap<Perm, u32>,
    /// Computed class of each element (index into `classes`).
    pub class_of: Vec<u16>,
    pub classes: Vec<ConjClass>,
    /// Table column (1-based) -> index into `classes`.
    pub column_to_class: Vec<usize>,
    basis_inverse: [[Ratio<i64>; 7]; 7],
}

/// The group built from the embedded roots, using the cache directory from
/// `CUBICREL_CACHE_DIR` when set.
pub fn weyl() -> Result<&'static WeylGroup> {
    static W: OnceLock<Result<WeylGroup>> = OnceLock::new();
    W.get_or_init(|| {
        let dir = std::env::var_os("CUBICREL_CACHE_DIR").map(PathBuf::from);
        WeylGroup::generate(dir.as_deref())
    })
    .as_ref()
    .map_err(|e| e.clone())
}

impl WeylGroup {
    /// Close the simple reflections, split into classes, and match the
    /// classes against the E6 table.
    pub fn generate(cache_dir: Option<&Path>) -> Result<Self> {
        let lattice = build_lattice();
        let roots = enumerate_roots(&lattice)?;
        let lines = enumerate_lines(&lattice)?;
        let gens: Vec<Perm> = simple_roots()
            .iter()
            .map(|a| reflection(&lattice, &roots, a))
            .collect::<Result<_>>()?;
        let key = cache_key(&roots);
        let cached = cache_dir.and_then(|d| read_cache(&d.join(format!("weyl-{key}.bin"))));
        let elements = match cached {
            Some(els) => els,
            None => {
                let els = closure(&gens);
                if let Some(d) = cache_dir {
                    // A cache that cannot be written is not an error.
                    let _ = write_cache(d, &format!("weyl-{key}.bin"), &els);
                }
                els
            }
        };
        let table = chartable::e6();
        if elements.len() as u64 != table.group_order {
            return Err(Error::OrderMismatch {
                generated: elements.len(),
                expected: table.group_order,
            });
        }
        let index: HashMap<Perm, u32> = elements.iter().enumerate().map(|(i, p)| (*p, i as u32)).collect();
        let generators = gens.iter().map(|g| index[g]).collect();
        let mut w = WeylGroup {
            lattice,
            roots,
            lines,
            generators,
            elements,
            index,
            class_of: Vec::new(),
            classes: Vec::new(),
            column_to_class: Vec::new(),
            basis_inverse: basis_inverse(),
        };
        w.conjugacy_classes();
        w.match_classes(table)?;
        Ok(w)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index_of(&self, p: &Perm) -> Option<u32> {
        self.index.get(p).copied()
    }

    fn conjugacy_classes(&mut self) {
        const UNSET: u16 = u16::MAX;
        let n = self.elements.len();
        let mut class_of = vec![UNSET; n];
        let gens: Vec<Perm> = self.generators.iter().map(|&g| self.elements[g as usize]).collect();
        let mut classes = Vec::new();
        for start in 0..n {
            if class_of[start] != UNSET {
                continue;
            }
            let id = classes.len() as u16;
            class_of[start] = id;
            let mut queue = VecDeque::from([start]);
            let mut size = 0u64;
            while let Some(x) = queue.pop_front() {
                size += 1;
                for s in &gens {
                    // generators are involutions, so s^-1 x s = s x s
                    let y = compose(s, &compose(&self.elements[x], s));
                    let yi = self.index[&y] as usize;
                    if class_of[yi] == UNSET {
                        class_of[yi] = id;
                        queue.push_back(yi);
                    }
                }
            }
            let rep = &self.elements[start];
            classes.push(ConjClass {
                rep: start as u32,
                size,
                order: perm_order(rep),
                trace: self.lattice_trace(rep) - 1,
                column: 0,
            });
        }
        self.class_of = class_of;
        self.classes = classes;
    }

    /// The 7x7 integer matrix of `p` on E0..E6 (columns are images).
    pub fn lattice_matrix(&self, p: &Perm) -> [[i64; 7]; 7] {
        // Images of the basis K, a1..a6 are known; multiply by its inverse.
        let simple = simple_roots();
        let mut imgs = [[0i64; 7]; 7];
        for r in 0..7 {
            imgs[r][0] = self.lattice.canonical.0[r];
        }
        for (k, a) in simple.iter().enumerate() {
            let i = self.roots.position(a).expect("simple root");
            let img = self.roots.vectors[p[i] as usize];
            for r in 0..7 {
                imgs[r][k + 1] = img.0[r];
            }
        }
        let mut m = [[0i64; 7]; 7];
        for r in 0..7 {
            for c in 0..7 {
                let mut s = Ratio::from_integer(0);
                for k in 0..7 {
                    s += self.basis_inverse[k][c] * imgs[r][k];
                }
                debug_assert!(s.is_integer());
                m[r][c] = s.to_integer();
            }
        }
        m
    }

    pub fn apply(&self, p: &Perm, v: &LatticeVector) -> LatticeVector {
        let m = self.lattice_matrix(p);
        let mut out = [0i64; 7];
        for r in 0..7 {
            out[r] = (0..7).map(|c| m[r][c] * v.0[c]).sum();
        }
        LatticeVector(out)
    }

    fn lattice_trace(&self, p: &Perm) -> i64 {
        let m = self.lattice_matrix(p);
        (0..7).map(|i| m[i][i]).sum()
    }

    /// Induced permutation of the 27 lines.
    pub fn line_perm(&self, p: &Perm) -> Vec<usize> {
        let m = self.lattice_matrix(p);
        self.lines
            .iter()
            .map(|l| {
                let mut out = [0i64; 7];
                for r in 0..7 {
                    out[r] = (0..7).map(|c| m[r][c] * l.0[c]).sum();
                }
                self.lines.position(&LatticeVector(out)).expect("lines are permuted")
            })
            .collect()
    }

    fn power(&self, p: &Perm, m: u64) -> Perm {
        let mut acc = identity();
        for _ in 0..m {
            acc = compose(p, &acc);
        }
        acc
    }

    fn class_of_perm(&self, p: &Perm) -> usize {
        self.class_of[self.index[p] as usize] as usize
    }

    fn match_classes(&mut self, table: &CharacterTable) -> Result<()> {
        let nk = self.classes.len();
        if nk != table.n {
            return Err(Error::CardinalityMismatch {
                what: "conjugacy classes",
                expected: table.n,
                found: nk,
            });
        }
        let chi3 = &table.values[2];
        let mut cand: Vec<Vec<usize>> = self
            .classes
            .iter()
            .map(|k| {
                (1..=table.n)
                    .filter(|&c| {
                        table.orders[c - 1] == k.order
                            && table.class_sizes[c - 1] == k.size
                            && chi3[c - 1] == k.trace
                    })
                    .collect()
            })
            .collect();
        let primes: Vec<u64> = table.power_maps.keys().copied().collect();
        let images: Vec<Vec<usize>> = (0..nk)
            .map(|k| {
                let rep = self.elements[self.classes[k].rep as usize];
                primes.iter().map(|&p| self.class_of_perm(&self.power(&rep, p))).collect()
            })
            .collect();
        loop {
            let mut changed = false;
            for k in 0..nk {
                let keep: Vec<usize> = cand[k]
                    .iter()
                    .copied()
                    .filter(|&c| {
                        primes.iter().enumerate().all(|(pi, p)| {
                            let target = table.power_maps[p][c - 1];
                            cand[images[k][pi]].contains(&target)
                        })
                    })
                    .collect();
                if keep.len() != cand[k].len() {
                    cand[k] = keep;
                    changed = true;
                }
            }
            // a column claimed uniquely by one class is unavailable to others
            let fixed: Vec<(usize, usize)> = (0..nk)
                .filter(|&k| cand[k].len() == 1)
                .map(|k| (k, cand[k][0]))
                .collect();
            for &(k, c) in &fixed {
                for (j, cj) in cand.iter_mut().enumerate() {
                    if j != k && cj.len() > 1 && cj.contains(&c) {
                        cj.retain(|&x| x != c);
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        if let Some(k) = (0..nk).find(|&k| cand[k].is_empty()) {
            let c = &self.classes[k];
            return Err(Error::InconsistentMatching(format!(
                "class with order {}, size {}, trace {} fits no column",
                c.order, c.size, c.trace
            )));
        }
        if let Some(k) = (0..nk).find(|&k| cand[k].len() > 1) {
            return Err(Error::AmbiguousMatching(format!(
                "class {} could be any of columns {:?}",
                k, cand[k]
            )));
        }
        let mut column_to_class = vec![usize::MAX; nk];
        for k in 0..nk {
            let c = cand[k][0];
            if column_to_class[c - 1] != usize::MAX {
                return Err(Error::InconsistentMatching(format!("column {c} matched twice")));
            }
            column_to_class[c - 1] = k;
            self.classes[k].column = c;
        }
        self.column_to_class = column_to_class;
        Ok(())
    }

    /// Representative of the class in table column `c` (1-based).
    pub fn representative(&self, c: usize) -> &Perm {
        &self.elements[self.classes[self.column_to_class[c - 1]].rep as usize]
    }

    /// Table column of an arbitrary element.
    pub fn column_of(&self, p: &Perm) -> usize {
        self.classes[self.class_of_perm(p)].column
    }

    /// Check the table's power maps against literal powers, for m <= max_m.
    pub fn power_map_mismatches(&self, max_m: u64) -> Vec<(usize, u64)> {
        let table = chartable::e6();
        let mut bad = Vec::new();
        for c in 1..=table.n {
            let rep = *self.representative(c);
            let mut acc = identity();
            for m in 1..=max_m {
                acc = compose(&rep, &acc);
                if table.power_class(c, m).ok() != Some(self.column_of(&acc)) {
                    bad.push((c, m));
                }
            }
        }
        bad
    }

    /// Fixed-point counts of representatives, per table column.
    pub fn permutation_character<F>(&self, fixed_points: F) -> ClassFunction
    where
        F: Fn(&Perm) -> usize,
    {
        let vals: Vec<i64> = (1..=self.classes.len())
            .map(|c| fixed_points(self.representative(c)) as i64)
            .collect();
        ClassFunction::from_ints(TableId::E6, &vals)
    }

    pub fn lines_character(&self) -> ClassFunction {
        self.permutation_character(|p| {
            self.line_perm(p).iter().enumerate().filter(|(i, j)| i == *j).count()
        })
    }

    pub fn roots_character(&self) -> ClassFunction {
        self.permutation_character(|p| p.iter().enumerate().filter(|(i, &j)| *i == j as usize).count())
    }

    pub fn lattice_character(&self) -> ClassFunction {
        let vals: Vec<i64> = (1..=self.classes.len())
            .map(|c| self.lattice_trace(self.representative(c)))
            .collect();
        ClassFunction::from_ints(TableId::E6, &vals)
    }

    /// Cycle notation of a root permutation (1-based root indices).
    pub fn cycle_notation(p: &Perm) -> String {
        let mut seen = [false; 72];
        let mut s = String::new();
        for start in 0..72 {
            if seen[start] || p[start] as usize == start {
                continue;
            }
            s.push('(');
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    s.push(' ');
                }
                s.push_str(&(x + 1).to_string());
                first = false;
                x = p[x] as usize;
            }
            s.push(')');
        }
        if s.is_empty() {
            "()".to_string()
        } else {
            s
        }
    }
}

fn closure(gens: &[Perm]) -> Vec<Perm> {
    let id = identity();
    let mut seen: HashMap<Perm, ()> = HashMap::new();
    seen.insert(id, ());
    let mut elements = vec![id];
    let mut head = 0;
    while head < elements.len() {
        let x = elements[head];
        head += 1;
        for g in gens {
            let y = compose(g, &x);
            if seen.insert(y, ()).is_none() {
                elements.push(y);
            }
        }
    }
    elements
}

/// Inverse of the matrix whose columns are K, a1..a6 (determinant 3).
fn basis_inverse() -> [[Ratio<i64>; 7]; 7] {
    let lat = build_lattice();
    let simple = simple_roots();
    let mut a = [[Ratio::from_integer(0i64); 14]; 7];
    for r in 0..7 {
        a[r][0] = Ratio::from_integer(lat.canonical.0[r]);
        for k in 0..6 {
            a[r][k + 1] = Ratio::from_integer(simple[k].0[r]);
        }
        a[r][7 + r] = Ratio::from_integer(1);
    }
    for col in 0..7 {
        let piv = (col..7).find(|&r| a[r][col] != Ratio::from_integer(0)).expect("basis is invertible");
        a.swap(col, piv);
        let inv = Ratio::from_integer(1) / a[col][col];
        for x in a[col].iter_mut() {
            *x *= inv;
        }
        for r in 0..7 {
            if r != col {
                let f = a[r][col];
                if f != Ratio::from_integer(0) {
                    for k in 0..14 {
                        let v = a[col][k];
                        a[r][k] -= f * v;
                    }
                }
            }
        }
    }
    let mut out = [[Ratio::from_integer(0i64); 7]; 7];
    for r in 0..7 {
        for c in 0..7 {
            out[r][c] = a[r][7 + c];
        }
    }
    out
}

fn cache_key(roots: &RootSet) -> String {
    let mut h = Sha256::new();
    for r in roots.iter() {
        for x in r.0 {
            h.update(x.to_le_bytes());
        }
    }
    for a in simple_roots() {
        for x in a.0 {
            h.update(x.to_le_bytes());
        }
    }
    h.finalize().iter().take(12).map(|b| format!("{b:02x}")).collect()
}

fn read_cache(path: &Path) -> Option<Vec<Perm>> {
    let bytes = std::fs::read(path).ok()?;
    if bytes.len() % 72 != 0 {
        return None;
    }
    let els: Vec<Perm> = bytes
        .chunks_exact(72)
        .map(|c| {
            let mut p = [0u8; 72];
            p.copy_from_slice(c);
            p
        })
        .collect();
    // reject anything that is not a list of distinct permutations
    let ok = els.iter().all(|p| {
        let mut seen = [false; 72];
        p.iter().all(|&x| (x as usize) < 72 && !std::mem::replace(&mut seen[x as usize], true))
    });
    if ok && els.first() == Some(&identity()) {
        Some(els)
    } else {
        None
    }
}

fn write_cache(dir: &Path, name: &str, els: &[Perm]) -> std::io::Result<()> {
    std::fs::create_dir_all(dir)?;
    let tmp = dir.join(format!("{name}.tmp"));
    let mut bytes = Vec::with_capacity(els.len() * 72);
    for p in els {
        bytes.extend_from_slice(p);
    }
    std::fs::write(&tmp, bytes)?;
    std::fs::rename(tmp, dir.join(name))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_inverse_recovers_identity_matrix() {
        let w = weyl().unwrap();
        let m = w.lattice_matrix(&identity());
        for r in 0..7 {
            for c in 0..7 {
                assert_eq!(m[r][c], (r == c) as i64);
            }
        }
    }

    #[test]
    fn group_order_and_classes() {
        let w = weyl().unwrap();
        assert_eq!(w.order(), 51840);
        assert_eq!(w.classes.len(), 25);
        let t = chartable::e6();
        for c in 1..=25 {
            let k = &w.classes[w.column_to_class[c - 1]];
            assert_eq!(k.order, t.orders[c - 1]);
            assert_eq!(k.size, t.class_sizes[c - 1]);
            assert_eq!(k.trace, t.values[2][c - 1]);
        }
        assert_eq!(w.classes.iter().map(|k| k.size).sum::<u64>(), 51840);
    }

    #[test]
    fn elements_preserve_pairing_and_canonical_class() {
        let w = weyl().unwrap();
        let lat = w.lattice;
        for c in 1..=25 {
            let p = w.representative(c);
            assert_eq!(w.apply(p, &lat.canonical), lat.canonical);
            for i in 0..7 {
                for j in 0..7 {
                    let a = LatticeVector::basis(i);
                    let b = LatticeVector::basis(j);
                    assert_eq!(lat.pairing(&w.apply(p, &a), &w.apply(p, &b)), lat.pairing(&a, &b));
                }
            }
        }
    }

    #[test]
    fn action_commutes_with_negation() {
        let w = weyl().unwrap();
        let neg: Vec<usize> = w.roots.iter().map(|r| w.roots.position(&r.neg()).unwrap()).collect();
        for p in w.elements.iter().step_by(97) {
            for i in 0..72 {
                assert_eq!(p[neg[i]] as usize, neg[p[i] as usize]);
            }
        }
    }

    #[test]
    fn power_maps_agree_with_literal_powers() {
        assert!(weyl().unwrap().power_map_mismatches(12).is_empty());
    }

    #[test]
    fn cache_round_trip() {
        let dir = std::env::temp_dir().join(format!("cubicrel-cache-test-{}", std::process::id()));
        let a = WeylGroup::generate(Some(&dir)).unwrap();
        let b = WeylGroup::generate(Some(&dir)).unwrap();
        assert_eq!(a.elements, b.elements);
        let _ = std::fs::remove_dir_all(&dir);
    }
}
